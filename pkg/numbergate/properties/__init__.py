# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""Properties module for numbergate.

This module classifies option pairs by the F1 and F2 properties and checks
the relations between those properties, numbers and outcomes over
hereditarily closed sets of positions.

Pair classification
-------------------
`classify_pair` decides F1 and F2 for one (G^L, G^R) pair of a game form
and records witnesses. `classify_position_pair` does the same for ruleset
positions, settling clauses from position identity when it can.

Closures
--------
`hcr_closure` enumerates the positions reachable from some seeds and
`check_closure` checks every pair of every position, returning a
`ClosureReport`.

Probes
------
`confirm_con` sums closure positions with numbers and looks for sums in N.
`number_avoidance_probe` checks that the winner of a number plus a
non-number can win by moving in the non-number.
"""

from .classification import (PairClassification, LEFT_RIGHT, RIGHT_LEFT,
                             classify_pair, classify_game, classify_options,
                             classify_position_pair, validate_witnesses)
from .probes import (ConVerdict, AvoidanceVerdict, DEFAULT_X_SET, NO_N_SUM,
                     N_SUM_FOUND, WITNESS_FOUND, NO_WITNESS, confirm_con,
                     con_verdict, number_avoidance_probe)
from .closure import ClosureReport, hcr_closure, check_closure, closure_options

# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""Allow running the command line as `python -m numbergate`."""

import sys

from .cli import main

sys.exit(main())

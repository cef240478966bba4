# This code is part of numbergate.
#
# (C) Copyright the numbergate developers 2020.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

"""
A bunch of useful helper functions
"""

import json
import logging

logger = logging.getLogger(__name__)


def merge_options(defaults, options=None, owner='numbergate'):
    """Return a copy of `defaults` updated with `options`.

    Args:
        defaults (dict): default option values.
        options (dict or None): user supplied overrides.
        owner (str): name used in log messages for unknown keys.

    Returns:
        dict: the merged options.

    Additional Information:
        Keys of `options` that are not in `defaults` are ignored with a
        warning, they never raise.
    """
    merged = dict(defaults)
    if options is None:
        return merged
    for key, val in options.items():
        if key not in defaults:
            logger.warning("Warning: ignoring unknown %s option \"%s\".",
                           owner, key)
            continue
        merged[key] = val
    return merged


def dumps_report(report):
    """Serialize a report dictionary to deterministic JSON text.

    Reports hold only plain JSON types; numbers and game forms are already
    rendered as text by the `to_dict` methods.
    """
    return json.dumps(report, sort_keys=True, separators=(',', ':'))

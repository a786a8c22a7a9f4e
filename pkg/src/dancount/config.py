"""Size caps.

All caps exist to keep the exhaustive kernels (element tables, dense
polynomials, circulant ranks) at desk scale.  The global field cap can be
overridden with the DANCOUNT_MAX_Q environment variable.
"""

import os

DEFAULT_MAX_Q = 1 << 20

# Circulant rank is O(q^3); keep it well below the global cap.
DEFAULT_KR_MAX_Q = 512

ENV_MAX_Q = "DANCOUNT_MAX_Q"


def max_q() -> int:
    raw = os.environ.get(ENV_MAX_Q)
    if raw is None:
        return DEFAULT_MAX_Q
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_MAX_Q
    return value if value > 0 else DEFAULT_MAX_Q

import math


def rel(x, y):
    return abs(x - y) / max(abs(y), 1e-300)


# The parameter grid used by the oracle-equivalence properties.
GRID = [(a, b, w) for a in (1.0, 2.0, 3.0) for b in (0.5, 1.0, 2.5)
        for w in (0.05, 0.3, 0.9 * a, 1.5 * a, 3.0 * a)]

assert len(GRID) == 45 and all(math.isfinite(v) for t in GRID for v in t)

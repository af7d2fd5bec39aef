import math

import numpy as np
import pytest


def bisect(f, lo, hi, tol=1e-15):
    """Plain bisection on a sign change; the slow, obviously-correct oracle."""
    flo = f(lo)
    while hi - lo > tol * max(1.0, abs(lo), abs(hi)):
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def ulp_diff(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return float(np.max(np.abs(a - b) / np.spacing(np.maximum(np.abs(a), np.abs(b)))))


@pytest.fixture
def omega():
    return bisect(lambda w: w * math.exp(w) - 1.0, 0.0, 1.0)

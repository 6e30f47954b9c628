import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from halidon import HalidonRing, factorize

# Small halidon rings spanning prime, prime-power, and multi-prime
# moduli; omegas are the smallest primitive roots (brute-force checked
# in test_analysis).
SMALL_RINGS = [
    (49, 6, 19),
    (91, 6, 10),
    (125, 4, 57),
    (341, 10, 29),
    (1891, 30, 65),
    (29341, 12, 162),
]

def slow(func):
    """Exhaustive-scan tests: marked, and skipped unless opted in."""
    skip = pytest.mark.skipif(
        not os.environ.get("HALIDON_RUN_SLOW"),
        reason="overnight-scale scan; set HALIDON_RUN_SLOW=1 to include",
    )
    return pytest.mark.slow(skip(func))


@pytest.fixture(scope="session")
def z49():
    return HalidonRing.create(49, 6, 19, factorize(49))


@pytest.fixture(scope="session", params=SMALL_RINGS, ids=lambda r: f"Z{r[0]}m{r[1]}")
def small_ring(request):
    n, m, omega = request.param
    return HalidonRing.create(n, m, omega, factorize(n))

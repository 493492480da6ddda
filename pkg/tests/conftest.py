import sys
import warnings
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ringlab import (RingContext, bimodule_power, bimodule_regular,
                     build_matrix_ring, build_product, build_triangular,
                     build_zn)

warnings.filterwarnings("ignore", message="family .* was missing the unit ideal")


@pytest.fixture(scope="session")
def z2():
    return build_zn(2)


@pytest.fixture(scope="session")
def z4():
    return build_zn(4)


@pytest.fixture(scope="session")
def z6():
    return build_zn(6)


@pytest.fixture(scope="session")
def z12():
    return build_zn(12)


@pytest.fixture(scope="session")
def t2(z2):
    """Triangular ring on Z2 with the regular bimodule: order 8.

    Element encoding (a, m, b) -> 4a + 2m + b, so the corner units are
    e_upper = 4, e_strip = 2, e_lower = 1, and the unit is 5.
    """
    return build_triangular(z2, bimodule_regular(z2), z2)


@pytest.fixture(scope="session")
def t3():
    z3 = build_zn(3)
    return build_triangular(z3, bimodule_regular(z3), z3)


@pytest.fixture(scope="session")
def t2p(z2):
    return build_triangular(z2, bimodule_power(z2, 2), z2)


@pytest.fixture(scope="session")
def m2z2(z2):
    return build_matrix_ring(z2, 2)


@pytest.fixture(scope="session")
def m2z4(z4):
    return build_matrix_ring(z4, 2)


@pytest.fixture(scope="session")
def z2xz3(z2):
    return build_product(z2, build_zn(3))


@pytest.fixture(scope="session")
def small_rings(z2, z4, z6, z12, t2, t3, m2z2, z2xz3):
    return [build_zn(1), z2, build_zn(3), z4, z6, build_zn(8), build_zn(9),
            z12, t2, t3, m2z2, z2xz3]


@pytest.fixture(scope="session")
def ctx_cache():
    cache = {}

    def get(ring):
        if ring.label not in cache:
            cache[ring.label] = RingContext(ring)
        return cache[ring.label]

    return get

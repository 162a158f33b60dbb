import os

import pytest
from hypothesis import HealthCheck, settings

from skewlab import rings as rg

from oracles import MatrixModel, PolyModel, ProductModel, Q8AlgebraModel, RingOracle, ZnModel

settings.register_profile("ci", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "ci"))


def _z(n):
    return rg.make_zn(n)


# (label, builder, oracle model); all of order <= 16 except F2Q8
ORACLE_RINGS = [
    ("Z2", lambda: _z(2), ZnModel(2)),
    ("Z3", lambda: _z(3), ZnModel(3)),
    ("Z4", lambda: _z(4), ZnModel(4)),
    ("Z6", lambda: _z(6), ZnModel(6)),
    ("Z8", lambda: _z(8), ZnModel(8)),
    ("GF4", lambda: rg.make_galois_field(2, 2), PolyModel(2, "t", [1, 1, 1])),
    ("GF8", lambda: rg.make_galois_field(2, 3), PolyModel(2, "t", [1, 1, 0, 1])),
    ("GF9", lambda: rg.make_galois_field(3, 2), PolyModel(3, "t", [1, 0, 1])),
    ("GF16", lambda: rg.make_galois_field(2, 4), PolyModel(2, "t", [1, 1, 0, 0, 1])),
    ("dual", lambda: rg.make_poly_quotient(_z(2), "t^2"), PolyModel(2, "t", [0, 0, 1])),
    ("Z2t3", lambda: rg.make_poly_quotient(_z(2), "t^3"), PolyModel(2, "t", [0, 0, 0, 1])),
    ("Z3dual", lambda: rg.make_poly_quotient(_z(3), "t^2"), PolyModel(3, "t", [0, 0, 1])),
    ("Z2xZ2", lambda: rg.make_product(_z(2), _z(2)), ProductModel(2, 2)),
    ("Z2xZ3", lambda: rg.make_product(_z(2), _z(3)), ProductModel(2, 3)),
    ("Z2xZ4", lambda: rg.make_product(_z(2), _z(4)), ProductModel(2, 4)),
    ("M2Z2", lambda: rg.make_matrix(2, _z(2)), MatrixModel(2, 2)),
    ("T2Z2", lambda: rg.make_upper_triangular(2, _z(2)), MatrixModel(2, 2)),
    ("Z2x<=2", lambda: rg.make_bounded_poly(_z(2), 2), PolyModel(2, "x", cap=2)),
]


@pytest.fixture(scope="session")
def oracle_rings():
    return [(label, RingOracle(build(), model)) for label, build, model in ORACLE_RINGS]


@pytest.fixture(scope="session")
def q8_oracle():
    return RingOracle(rg.make_group_algebra(_z(2), "Q8"), Q8AlgebraModel())


# PASS/FAIL lines from test_acceptance.py, echoed after the run
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: s.split("criterion ")[1]):
            terminalreporter.write_line(line)

from fractions import Fraction

import pytest

from symtriple.connections import connection_by_name
from symtriple.families import (
    expected_hol_levi_civita,
    expected_hol_skew,
)
from symtriple.holonomy import (
    holonomy_algebra,
    holonomy_identity_check,
    quadratic_scalar_probe,
    ricci,
    scalar_curvature,
    table_report,
)
from symtriple.linalg import comm, matrices_of
from symtriple.scalars import qi

from conftest import LIGHT_CASES


@pytest.mark.parametrize("family,param", LIGHT_CASES)
def test_holonomy_dimensions(family, param, connection_cache):
    model = connection_cache(family, param, "levi-civita").model
    res = holonomy_algebra(
        connection_cache(family, param, "levi-civita"), compute_center=False
    )
    assert res.dim == expected_hol_levi_civita(model.n)
    assert res.contains_so and res.dim == res.so_dim
    for name in ("distinguished", "canonical"):
        res = holonomy_algebra(connection_cache(family, param, name), compute_center=False)
        assert res.dim == expected_hol_skew(family, param)
        assert not res.contains_so


@pytest.mark.parametrize("family,param", LIGHT_CASES)
def test_centers(family, param, connection_cache):
    want = 1 if family == "special" else 0
    for name in ("distinguished", "canonical"):
        res = holonomy_algebra(connection_cache(family, param, name))
        assert res.center_dim == want


@pytest.mark.parametrize("family,param", LIGHT_CASES)
def test_holonomy_structure_identities(family, param, connection_cache):
    model = connection_cache(family, param, "levi-civita").model
    spaces = {}
    for name in ("distinguished", "canonical"):
        conn = connection_cache(family, param, name)
        res = holonomy_algebra(conn, compute_center=False)
        check = holonomy_identity_check(conn, res)
        assert check.matches
        assert check.expected_dim == 3 + model.h_dim
        spaces[name] = res.algebra
    # same dimension, different subspaces, sum of dimension h + 6
    assert spaces["distinguished"] != spaces["canonical"]
    total = spaces["distinguished"].sum(spaces["canonical"])
    assert total.dim == model.h_dim + 6


def test_holonomy_contains_own_multipliers(connection_cache):
    # hol contains alpha_xi for each vertical xi (distinguished), and
    # -ad xi|_m (canonical), as forced by the vertical curvature operators.
    for name in ("distinguished", "canonical"):
        conn = connection_cache("symplectic", 1, name)
        res = holonomy_algebra(conn, compute_center=False)
        model = conn.model
        for i in range(3):
            assert res.algebra.contains(conn.alpha.ops[i].flatten())
            if name == "canonical":
                assert res.algebra.contains(model.ad_m_xi(i + 1).flatten())


def test_holonomy_closure_is_closed(connection_cache):
    conn = connection_cache("symplectic", 1, "distinguished")
    res = holonomy_algebra(conn, compute_center=False)
    mats = matrices_of(res.algebra)
    for x in mats:
        for y in mats:
            assert res.algebra.contains(comm(x, y).flatten())
    for op in conn.alpha.ops:
        for x in mats:
            assert res.algebra.contains(comm(op, x).flatten())


RICCI_TABLE = {
    # connection -> (vertical const as n-function, horizontal const, scalar)
    "levi-civita": (lambda n: 4 * n + 2, lambda n: 4 * n + 2,
                    lambda n: (4 * n + 2) * (4 * n + 3)),
    "distinguished": (lambda n: 0, lambda n: 4 * n - 4, lambda n: 16 * n * (n - 1)),
    "canonical": (lambda n: -16, lambda n: 4 * n - 4,
                  lambda n: 16 * (n * n - n - 3)),
}


@pytest.mark.parametrize("family,param", LIGHT_CASES)
def test_ricci_blocks_and_scalars(family, param, connection_cache):
    model = connection_cache(family, param, "levi-civita").model
    n = model.n
    for name, (fv, fh, fs) in RICCI_TABLE.items():
        data = ricci(connection_cache(family, param, name))
        assert data.mixed_zero
        assert data.vertical_constant == qi(fv(n))
        assert data.horizontal_constant == qi(fh(n))
        assert data.scalar_curvature == qi(fs(n))


def test_dimension_seven_values(connection_cache):
    # n = 1: scalars 42 / 0 / -48
    assert scalar_curvature(connection_cache("symplectic", 1, "levi-civita")) == 42
    assert scalar_curvature(connection_cache("symplectic", 1, "distinguished")) == 0
    assert scalar_curvature(connection_cache("symplectic", 1, "canonical")) == -48


def test_lazy_center(connection_cache):
    res = holonomy_algebra(
        connection_cache("special", 1, "canonical"), compute_center=False
    )
    assert res.center_dim is None
    assert res.ensure_center() == 1
    assert res.center_dim == 1


def test_zero_connection_smoke(model_cache):
    # alpha = 0 gives holonomy isomorphic to the isotropy algebra
    for family, param in [("symplectic", 1), ("special", 2)]:
        model = model_cache(family, param)
        conn = connection_by_name(model, "zero")
        res = holonomy_algebra(conn, compute_center=False)
        assert res.dim == model.h_dim


def test_quadratic_probe_is_documented_discrepancy():
    # The quadratic scalar-curvature formula does not reproduce the exact
    # closed forms under this parametrization; assert the mismatch so the
    # discrepancy stays visible.
    eye = [[1 if r == s else 0 for s in range(3)] for r in range(3)]
    probe = quadratic_scalar_probe(1, 2, eye)
    assert probe == Fraction(63, 2)
    assert probe != 0  # s^dist at n=1 is 0
    zero3 = [[0] * 3 for _ in range(3)]
    assert quadratic_scalar_probe(1, 0, zero3) == 42  # only the torsion-free case agrees


def test_table_report_all_pass(model_cache):
    cases = [("symplectic", 1), ("special", 1)]
    cache = {
        ("symplectic", 1): model_cache("symplectic", 1),
        ("special", 1): model_cache("special", 1),
    }
    rows = table_report(cases, model_cache=cache, compute_centers=True)
    for row in rows:
        assert row.passed
        assert row.centers["distinguished"] == (1 if row.family == "special" else 0)


def test_f4_table_row(connection_cache):
    # the dim-31 model: so(31) for Levi-Civita, 24/24 for the skew pair
    res = holonomy_algebra(
        connection_cache("exceptional", "unarion", "levi-civita"), compute_center=False
    )
    assert res.dim == 465 and res.contains_so
    for name in ("distinguished", "canonical"):
        res = holonomy_algebra(
            connection_cache("exceptional", "unarion", name), compute_center=True
        )
        assert res.dim == 24
        assert res.center_dim == 0


@pytest.mark.heavy
def test_heavy_e6_holonomy(connection_cache):
    # e6: inder = sl(6) (35), table entry 38/38; LC is so(43), dim 903
    for name, dim in (("distinguished", 38), ("canonical", 38)):
        res = holonomy_algebra(
            connection_cache("exceptional", "binarion", name), compute_center=True
        )
        assert res.dim == dim
        assert res.center_dim == 0
    res = holonomy_algebra(
        connection_cache("exceptional", "binarion", "levi-civita"),
        compute_center=False,
    )
    assert res.dim == 903 and res.contains_so


@pytest.mark.heavy
def test_heavy_e7_holonomy(connection_cache):
    # e7: inder = so(12) (66), table entry 69/69; LC is so(67), dim 2211
    for name, dim in (("distinguished", 69), ("canonical", 69)):
        res = holonomy_algebra(
            connection_cache("exceptional", "quaternion", name), compute_center=True
        )
        assert res.dim == dim
        assert res.center_dim == 0
    res = holonomy_algebra(
        connection_cache("exceptional", "quaternion", "levi-civita"),
        compute_center=False,
    )
    assert res.dim == 2211 and res.contains_so

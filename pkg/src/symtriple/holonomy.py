"""Holonomy algebras, Ricci tensors and scalar curvatures.

The holonomy algebra of an invariant connection is the smallest Lie
subalgebra of gl(m) containing every curvature operator R(e_i, e_j) and
closed under commutators with the left multiplications alpha(e_i, .).
For a metric connection it sits inside so(m, g), whose dimension therefore
serves as a certified early-exit bound for the closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .connections import Connection
from .errors import ValidationError
from .linalg import Matrix, Subspace, bracket_closure, center_of
from .scalars import GaussianRational, ZERO
from . import families

__all__ = [
    "HolonomyResult",
    "RicciData",
    "holonomy_algebra",
    "expected_skew_holonomy_space",
    "holonomy_identity_check",
    "HolonomyStructure",
    "ricci",
    "scalar_curvature",
    "quadratic_scalar_probe",
    "TableRow",
    "table_report",
    "format_table",
]


@dataclass
class HolonomyResult:
    label: str
    algebra: Subspace
    dim: int
    center_dim: int | None
    contains_so: bool
    so_dim: int
    metric: bool

    def ensure_center(self) -> int:
        if self.center_dim is None:
            self.center_dim = center_of(self.algebra).dim
        return self.center_dim


def holonomy_algebra(conn: Connection, compute_center: bool = True) -> HolonomyResult:
    """Ambrose-Singer closure of the curvature operators of ``conn``."""
    model = conn.model
    md = model.m_dim
    gens = []
    for _, r in conn.curvature_pairs():
        if not r.is_zero():
            gens.append(r)
    multipliers = [op for op in conn.alpha.ops if not op.is_zero()]
    metric = conn.is_metric()
    so_dim = model.so_dim()
    if not gens:
        algebra = Subspace.zero_space(md * md)
    else:
        algebra = bracket_closure(
            gens, multipliers, stop_dim=so_dim if metric else None
        )
    center = center_of(algebra).dim if compute_center else None
    return HolonomyResult(
        label=conn.label,
        algebra=algebra,
        dim=algebra.dim,
        center_dim=center,
        contains_so=metric and algebra.dim == so_dim,
        so_dim=so_dim,
        metric=metric,
    )


def expected_skew_holonomy_space(conn: Connection) -> Subspace:
    """The closed-form holonomy space of the distinguished or canonical
    connection: vertical generators plus the isotropy action on m.

    distinguished: alpha(xi_i, .) for i = 1..3, plus ad(d)|_m over inder(T);
    canonical:     ad(xi_i)|_m for i = 1..3,   plus ad(d)|_m over inder(T).
    """
    model = conn.model
    md = model.m_dim
    vecs = []
    if conn.label == "distinguished":
        for i in range(3):
            vecs.append(conn.alpha.ops[i].flatten())
    elif conn.label == "canonical":
        for i in range(1, 4):
            vecs.append(model.ad_m_xi(i).flatten())
    else:
        raise ValidationError(
            "closed-form holonomy applies to the distinguished/canonical connections"
        )
    for r in range(model.h_dim):
        vecs.append(model.ad_m_inder(r).flatten())
    return Subspace.span(vecs, ambient=md * md)


@dataclass
class HolonomyStructure:
    label: str
    matches: bool
    computed_dim: int
    expected_dim: int


def holonomy_identity_check(conn: Connection, result: HolonomyResult | None = None) -> HolonomyStructure:
    """Compare the computed holonomy algebra with its closed form."""
    if result is None:
        result = holonomy_algebra(conn, compute_center=False)
    expected = expected_skew_holonomy_space(conn)
    return HolonomyStructure(
        label=conn.label,
        matches=(expected == result.algebra),
        computed_dim=result.dim,
        expected_dim=expected.dim,
    )


# ---------------------------------------------------------------------------
# Ricci and scalar curvature
# ---------------------------------------------------------------------------


@dataclass
class RicciData:
    ricci: Matrix
    vertical_constant: GaussianRational | None
    horizontal_constant: GaussianRational | None
    mixed_zero: bool
    scalar_curvature: GaussianRational


def ricci(conn: Connection) -> RicciData:
    """Ric(X, Y) = trace(Z -> R(Z, X) Y), plus block comparison against g."""
    model = conn.model
    md = model.m_dim
    ric = Matrix(md, md)
    for (i, j), r in conn.curvature_pairs():
        # contributes R(e_i, e_j)[i, k] to Ric[j, k] and -R[j, k] to Ric[i, k]
        row_i = r.data.get(i)
        if row_i:
            for k, v in row_i.items():
                ric.set_entry(j, k, ric[j, k] + v)
        row_j = r.data.get(j)
        if row_j:
            for k, v in row_j.items():
                ric.set_entry(i, k, ric[i, k] - v)
    gram = model.metric.gram
    vertical = _block_constant(ric, gram, range(0, 3))
    horizontal = _block_constant(ric, gram, range(3, md))
    mixed_zero = all(
        not ric[i, j] and not ric[j, i] for i in range(3) for j in range(3, md)
    )
    ginv = model.metric.inverse()
    scal = (ginv @ ric).trace()
    return RicciData(ric, vertical, horizontal, mixed_zero, scal)


def _block_constant(ric: Matrix, gram: Matrix, idx) -> GaussianRational | None:
    """c with ric = c * gram on the block, or None when not proportional."""
    idx = list(idx)
    c = None
    for i in idx:
        for j in idx:
            g = gram[i, j]
            r = ric[i, j]
            if g:
                ratio = r / g
                if c is None:
                    c = ratio
                elif ratio != c:
                    return None
            elif r:
                return None
    return c if c is not None else ZERO


def scalar_curvature(conn: Connection) -> GaussianRational:
    return ricci(conn).scalar_curvature


def quadratic_scalar_probe(n: int, a, b_matrix) -> Fraction:
    """(4n+2)(4n+3) - 3/2 (a - tr B)^2 - 3n ||B||^2.

    Discrepancy probe only: with this library's normalization of (a, B) the
    formula does not reproduce the scalar curvatures of the distinguished or
    canonical connections (it matches a differently scaled parametrization),
    so nothing in the package asserts it; the exact per-connection closed
    forms are the contract.
    """
    a = Fraction(a)
    rows = [[Fraction(x) for x in row] for row in b_matrix]
    tr = sum(rows[i][i] for i in range(3))
    norm2 = sum(x * x for row in rows for x in row)
    return (
        Fraction((4 * n + 2) * (4 * n + 3))
        - Fraction(3, 2) * (a - tr) ** 2
        - 3 * n * norm2
    )


# ---------------------------------------------------------------------------
# The dimension table
# ---------------------------------------------------------------------------


@dataclass
class TableRow:
    family: str
    param: object
    label: str
    n: int
    dims: dict  # connection name -> computed dim
    expected: dict  # connection name -> closed-form dim
    centers: dict  # connection name -> center dim (skew connections only)

    @property
    def passed(self) -> bool:
        return all(self.dims[k] == self.expected[k] for k in self.dims)


def table_report(cases, model_cache=None, compute_centers: bool = False):
    """Holonomy dimensions for the selected cases, against closed forms."""
    from .connections import connection_by_name

    rows = []
    for family, param in cases:
        if model_cache is not None and (family, param) in model_cache:
            model = model_cache[(family, param)]
        else:
            from .enveloping import build_model

            model = build_model(families.build_triple(family, param))
            if model_cache is not None:
                model_cache[(family, param)] = model
        n = model.n
        dims = {}
        centers = {}
        for name in ("levi-civita", "distinguished", "canonical"):
            conn = connection_by_name(model, name)
            want_center = compute_centers and name != "levi-civita"
            res = holonomy_algebra(conn, compute_center=want_center)
            dims[name] = res.dim
            if want_center:
                centers[name] = res.center_dim
        expected = {
            "levi-civita": families.expected_hol_levi_civita(n),
            "distinguished": families.expected_hol_skew(family, param),
            "canonical": families.expected_hol_skew(family, param),
        }
        rows.append(
            TableRow(
                family=family,
                param=param,
                label=model.triple.label,
                n=n,
                dims=dims,
                expected=expected,
                centers=centers,
            )
        )
    return rows


def format_table(rows) -> str:
    header = (
        f"{'case':26s} {'n':>3s} {'hol(LC)':>8s} {'hol(dist)':>9s} "
        f"{'hol(can)':>8s} {'expected':>20s} {'status':>7s}"
    )
    lines = [header, "-" * len(header)]
    for r in rows:
        exp = "{}/{}/{}".format(
            r.expected["levi-civita"], r.expected["distinguished"], r.expected["canonical"]
        )
        lines.append(
            f"{r.label:26s} {r.n:3d} {r.dims['levi-civita']:8d} "
            f"{r.dims['distinguished']:9d} {r.dims['canonical']:8d} {exp:>20s} "
            f"{'PASS' if r.passed else 'FAIL':>7s}"
        )
    return "\n".join(lines)

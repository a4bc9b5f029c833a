"""Symplectic triple systems: constructions, axiom verification, inner
derivations, simplicity, and structure-constant file round-trips.

A system is a space T with a skew form ``(.,.)`` and a triple product
``[.,.,.]`` subject to four identities:

(1) [x,y,z] = [y,x,z]
(2) [x,y,z] - [x,z,y] = (x,z)y - (x,y)z + 2(y,z)x
(3) d_{x,y} := [x,y,.] is a derivation of the triple product
(4) ([x,y,u],v) + (u,[x,y,v]) = 0

Basis conventions (fixed so files are reproducible):

* symplectic type (param n): W = span(w_0..w_{2n-1}) with (w_i, w_{n+i}) = 1.
* orthogonal type (param w): T = V (x) W, basis e_1(x)b_0, ..., e_1(x)b_{w-1},
  e_2(x)b_0, ...; the symmetric form on W is the identity matrix.
* special type (param w): W basis first, then the dual basis, (f_i, x_j) =
  delta_ij.
* exceptional type (param J): slots ordered alpha, beta, a-part (J basis),
  b-part (J basis).

Everywhere V is two-dimensional with basis (e_1, e_2) and <e_1, e_2> = 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import DimensionError, ParseError, ValidationError
from .jordan import CubicJordan
from .linalg import Matrix, Subspace, comm, rank
from .scalars import GaussianRational, HALF, ONE, ZERO, qi

__all__ = [
    "SymplecticTripleSystem",
    "InnerDerivationSpace",
    "AxiomReport",
    "AxiomFailure",
    "build_symplectic_type",
    "build_orthogonal_type",
    "build_special_type",
    "build_exceptional_type",
    "verify_axioms",
    "inder_basis",
    "is_simple",
    "save_sts",
    "load_sts",
    "scalar_to_json",
    "scalar_from_json",
]


class SymplecticTripleSystem:
    """Finite-dimensional triple system held as exact structure constants."""

    __slots__ = ("dim", "omega", "cols", "label", "_dmats")

    def __init__(self, dim: int, omega: Matrix, cols: dict, label: str):
        if omega.rows != dim or omega.cols != dim:
            raise DimensionError("omega shape mismatch")
        self.dim = dim
        self.omega = omega
        # cols[(i, j, k)] = sparse {l: coefficient} for [e_i, e_j, e_k]
        self.cols = cols
        self.label = label
        self._dmats: dict = {}

    def form(self, x, y) -> GaussianRational:
        """The skew bilinear form (x, y)."""
        acc = ZERO
        om = self.omega
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = om.data.get(i)
            if not row:
                continue
            for j, o in row.items():
                yj = y[j]
                if yj:
                    acc = acc + xi * o * yj
        return acc

    def basis_triple(self, i: int, j: int, k: int) -> dict:
        return self.cols.get((i, j, k), _EMPTY)

    def triple_product(self, x, y, z):
        if len(x) != self.dim or len(y) != self.dim or len(z) != self.dim:
            raise DimensionError("triple_product arity/length mismatch")
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c2 = xi * yj
                for k, zk in enumerate(z):
                    if not zk:
                        continue
                    col = self.cols.get((i, j, k))
                    if not col:
                        continue
                    c3 = c2 * zk
                    for l, v in col.items():
                        out[l] = out[l] + c3 * v
        return tuple(out)

    def dmat(self, i: int, j: int) -> Matrix:
        """The operator d_{e_i, e_j} = [e_i, e_j, .] as a matrix."""
        m = self._dmats.get((i, j))
        if m is None:
            data: dict = {}
            for k in range(self.dim):
                col = self.cols.get((i, j, k))
                if col:
                    for l, v in col.items():
                        data.setdefault(l, {})[k] = v
            m = Matrix(self.dim, self.dim, data)
            self._dmats[(i, j)] = m
        return m

    def entries(self):
        """Sparse tensor entries as (i, j, k, l, coefficient), sorted."""
        out = []
        for (i, j, k), col in self.cols.items():
            for l, v in col.items():
                out.append((i, j, k, l, v))
        out.sort(key=lambda e: e[:4])
        return out

    def __eq__(self, other):
        if not isinstance(other, SymplecticTripleSystem):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.omega == other.omega
            and self.cols == other.cols
        )

    def __hash__(self):
        return hash((self.dim, tuple(self.entries())))

    def __repr__(self):
        return f"SymplecticTripleSystem({self.label!r}, dim={self.dim})"


_EMPTY: dict = {}


def _add_entry(cols: dict, i: int, j: int, k: int, l: int, v) -> None:
    if not v:
        return
    col = cols.setdefault((i, j, k), {})
    s = col.get(l, ZERO) + v
    if s:
        col[l] = s
    else:
        del col[l]
        if not col:
            del cols[(i, j, k)]


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------


def build_symplectic_type(n: int) -> SymplecticTripleSystem:
    """T = W, dim 2n, with [x,y,z] = (x,z)y + (y,z)x."""
    if n < 1:
        raise ValidationError("symplectic type needs n >= 1")
    dim = 2 * n
    omega = Matrix(dim, dim)
    for i in range(n):
        omega.set_entry(i, n + i, ONE)
        omega.set_entry(n + i, i, -ONE)
    cols: dict = {}
    for i in range(dim):
        for k in range(dim):
            o_ik = omega[i, k]
            if not o_ik:
                continue
            for j in range(dim):
                # (e_i, e_k) e_j contribution
                _add_entry(cols, i, j, k, j, o_ik)
    for j in range(dim):  # (e_j, e_k) e_i contribution
        for k in range(dim):
            o_jk = omega[j, k]
            if not o_jk:
                continue
            for i in range(dim):
                _add_entry(cols, i, j, k, i, o_jk)
    return SymplecticTripleSystem(dim, omega, cols, f"symplectic(n={n})")


_GAMMA2 = {
    # gamma_{e_a, e_b}(e_c) over the 2-dim symplectic space, <e_1, e_2> = 1
    (0, 0, 0): {},
    (0, 0, 1): {0: qi(2)},
    (0, 1, 0): {0: qi(-1)},
    (0, 1, 1): {1: ONE},
    (1, 1, 0): {1: qi(-2)},
    (1, 1, 1): {},
}


def _gamma2(a: int, b: int, c: int) -> dict:
    if a > b:
        a, b = b, a
    return _GAMMA2[(a, b, c)]


_EPS2 = ((0, 1), (-1, 0))  # <e_a, e_b>


def build_orthogonal_type(w: int) -> SymplecticTripleSystem:
    """T = V (x) W with the identity form on W; dim 2w, w >= 3."""
    if w < 3:
        raise ValidationError("orthogonal type needs w >= 3")
    dim = 2 * w

    def idx(a: int, p: int) -> int:
        return a * w + p

    omega = Matrix(dim, dim)
    for p in range(w):
        omega.set_entry(idx(0, p), idx(1, p), HALF)
        omega.set_entry(idx(1, p), idx(0, p), -HALF)
    cols: dict = {}
    for a in range(2):
        for p in range(w):
            i = idx(a, p)
            for b in range(2):
                for q in range(w):
                    j = idx(b, q)
                    eps = _EPS2[a][b]
                    for c in range(2):
                        for r in range(w):
                            k = idx(c, r)
                            # (1/2) gamma_{a,b}(c) (x) b(p,q) r-slot
                            if p == q:
                                for vc, coeff in _gamma2(a, b, c).items():
                                    _add_entry(cols, i, j, k, idx(vc, r), HALF * coeff)
                            if eps:
                                # <a,b> c (x) (b(p,r) q - b(q,r) p)
                                if p == r:
                                    _add_entry(cols, i, j, k, idx(c, q), qi(eps))
                                if q == r:
                                    _add_entry(cols, i, j, k, idx(c, p), qi(-eps))
    return SymplecticTripleSystem(dim, omega, cols, f"orthogonal(w={w})")


def build_special_type(w: int) -> SymplecticTripleSystem:
    """T = W + W*, dim 2w; [x,f,y] = f(x)y + 2f(y)x, [x,f,g] = -f(x)g - 2g(x)f."""
    if w < 1:
        raise ValidationError("special type needs w >= 1")
    dim = 2 * w
    omega = Matrix(dim, dim)
    for p in range(w):
        omega.set_entry(w + p, p, ONE)
        omega.set_entry(p, w + p, -ONE)
    cols: dict = {}
    two = qi(2)
    for p in range(w):  # x_p
        for q in range(w):  # f_q
            i, j = p, w + q
            for r in range(w):  # third = x_r
                if q == p:
                    _add_entry(cols, i, j, r, r, ONE)
                    _add_entry(cols, j, i, r, r, ONE)
                if q == r:
                    _add_entry(cols, i, j, r, p, two)
                    _add_entry(cols, j, i, r, p, two)
            for r in range(w):  # third = f_r
                if q == p:
                    _add_entry(cols, i, j, w + r, w + r, -ONE)
                    _add_entry(cols, j, i, w + r, w + r, -ONE)
                if r == p:
                    _add_entry(cols, i, j, w + r, w + q, -two)
                    _add_entry(cols, j, i, w + r, w + q, -two)
    return SymplecticTripleSystem(dim, omega, cols, f"special(w={w})")


def build_exceptional_type(jordan: CubicJordan) -> SymplecticTripleSystem:
    """T_J of dim 2 + 2 dim(J), from a cubic Jordan algebra J."""
    dj = jordan.dim
    dim = 2 + 2 * dj
    tform = jordan.trace_form

    omega = Matrix(dim, dim)
    omega.set_entry(0, 1, ONE)
    omega.set_entry(1, 0, -ONE)
    for p in range(dj):
        for q in range(dj):
            t_pq = tform[p][q]
            if t_pq:
                omega.set_entry(2 + p, 2 + dj + q, -t_pq)
                omega.set_entry(2 + dj + p, 2 + q, t_pq)

    zero_j = (ZERO,) * dj
    basis_elems = []
    basis_elems.append((ONE, ZERO, zero_j, zero_j))
    basis_elems.append((ZERO, ONE, zero_j, zero_j))
    for p in range(dj):
        basis_elems.append((ZERO, ZERO, jordan.basis_element(p), zero_j))
    for p in range(dj):
        basis_elems.append((ZERO, ZERO, zero_j, jordan.basis_element(p)))

    cols: dict = {}
    for i, x1 in enumerate(basis_elems):
        for j, x2 in enumerate(basis_elems):
            for k, x3 in enumerate(basis_elems):
                g, c = _exc_gamma_c(jordan, x1, x2, x3)
                gt, ct = _exc_gamma_c(
                    jordan, _exc_t(x1), _exc_t(x2), _exc_t(x3)
                )
                if g:
                    _add_entry(cols, i, j, k, 0, g)
                if gt:
                    _add_entry(cols, i, j, k, 1, -gt)
                for l, v in enumerate(c):
                    if v:
                        _add_entry(cols, i, j, k, 2 + l, v)
                for l, v in enumerate(ct):
                    if v:
                        _add_entry(cols, i, j, k, 2 + dj + l, -v)
    kind = "scalar" if jordan.kind == "scalar" else f"H3({jordan.algebra.kind})"
    return SymplecticTripleSystem(dim, omega, cols, f"exceptional(J={kind})")


def _exc_t(x):
    alpha, beta, a, b = x
    return (beta, alpha, b, a)


def _exc_gamma_c(J: CubicJordan, x1, x2, x3):
    """The two component maps of the exceptional triple product.

    The cross product here must be the full adjoint linearization
    (``linearized_cross``, with a x a twice the adjoint); the half-normalized
    cross makes the derivation identity fail, and for the scalar algebra it
    degenerates T_J into the special-type system.  The axiom checker is the
    arbiter: this normalization is the one that passes it.
    """
    al1, be1, a1, b1 = x1
    al2, be2, a2, b2 = x2
    al3, be3, a3, b3 = x3
    t = J.t
    cross = J.linearized_cross
    two = qi(2)
    three = qi(3)

    s12 = al1 * be2 + be1 * al2
    t_a1b2 = t(a1, b2)
    t_b1a2 = t(b1, a2)
    t_b2a3 = t(b2, a3)
    t_b1a3 = t(b1, a3)

    g = (-three * s12 + t_a1b2 + t_b1a2) * al3 + two * (
        al1 * t_b2a3 + al2 * t_b1a3 - t(cross(a1, a2), a3)
    )

    coef0 = -s12 + t_a1b2 + t_b1a2
    coef1 = two * (t_b2a3 - be2 * al3)
    coef2 = two * (t_b1a3 - be1 * al3)
    c = [
        coef0 * v3 + coef1 * v1 + coef2 * v2
        for v3, v1, v2 in zip(a3, a1, a2)
    ]

    def _acc(vec, scal):
        if scal:
            for l, v in enumerate(vec):
                if v:
                    c[l] = c[l] + scal * v

    _acc(cross(b2, b3), two * al1)
    _acc(cross(b1, b3), two * al2)
    _acc(cross(b1, b2), two * al3)
    _acc(cross(cross(a1, a2), b3), -two)
    _acc(cross(cross(a1, a3), b2), -two)
    _acc(cross(cross(a2, a3), b1), -two)
    return g, tuple(c)


# ---------------------------------------------------------------------------
# Axiom verification
# ---------------------------------------------------------------------------


@dataclass
class AxiomFailure:
    axiom: int
    witness: tuple
    detail: str


@dataclass
class AxiomReport:
    label: str
    dim: int
    checked: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        lines = [f"axioms for {self.label} (dim {self.dim}):"]
        failed_axiom = {f.axiom for f in self.failures}
        for ax in (1, 2, 3, 4):
            status = "FAIL" if ax in failed_axiom else "pass"
            lines.append(f"  ({ax}) {status}  [{self.checked.get(ax, 0)} tuples]")
        for f in self.failures:
            lines.append(f"  witness ({f.axiom}) at {f.witness}: {f.detail}")
        return "\n".join(lines)


def verify_axioms(
    T: SymplecticTripleSystem, mode: str = "fast", max_failures: int = 1000
) -> AxiomReport:
    """Exhaustively check identities (1)-(4) over basis tuples.

    ``fast`` stops each identity at its first failing tuple; ``audit``
    collects every witness (capped at ``max_failures`` per identity).
    """
    if mode not in ("fast", "audit"):
        raise ValueError("mode must be 'fast' or 'audit'")
    report = AxiomReport(T.label, T.dim)
    d = T.dim
    om = T.omega

    def record(ax, witness, detail) -> bool:
        """Returns True when checking of this axiom should stop."""
        report.failures.append(AxiomFailure(ax, witness, detail))
        return mode == "fast" or sum(
            1 for f in report.failures if f.axiom == ax
        ) >= max_failures

    # (1) symmetry in the first two slots
    n1 = 0
    stop = False
    for i in range(d):
        if stop:
            break
        for j in range(i + 1, d):
            if stop:
                break
            for k in range(d):
                n1 += 1
                if T.basis_triple(i, j, k) != T.basis_triple(j, i, k):
                    if record(1, (i, j, k), "[e_i,e_j,e_k] != [e_j,e_i,e_k]"):
                        stop = True
                        break
    report.checked[1] = n1
    axiom1_ok = not any(f.axiom == 1 for f in report.failures)

    # (2) [x,y,z] - [x,z,y] = (x,z)y - (x,y)z + 2(y,z)x
    n2 = 0
    stop = False
    two = qi(2)
    for i in range(d):
        if stop:
            break
        for j in range(d):
            if stop:
                break
            for k in range(d):
                n2 += 1
                lhs = dict(T.basis_triple(i, j, k))
                for l, v in T.basis_triple(i, k, j).items():
                    s = lhs.get(l, ZERO) - v
                    if s:
                        lhs[l] = s
                    else:
                        lhs.pop(l, None)
                for l, v in ((j, om[i, k]), (k, -om[i, j]), (i, two * om[j, k])):
                    if v:
                        s = lhs.get(l, ZERO) - v
                        if s:
                            lhs[l] = s
                        else:
                            lhs.pop(l, None)
                if lhs:
                    if record(2, (i, j, k), "identity (2) residue nonzero"):
                        stop = True
                        break
    report.checked[2] = n2

    # (3) derivation property, as the operator identity
    #     [d_ij, d_lm] = d_{d_ij(e_l), m} + d_{l, d_ij(e_m)}
    pairs = (
        [(i, j) for i in range(d) for j in range(i, d)]
        if axiom1_ok
        else [(i, j) for i in range(d) for j in range(d)]
    )
    n3 = 0
    stop = False
    for (i, j) in pairs:
        if stop:
            break
        dij = T.dmat(i, j)
        for (l, m) in pairs:
            n3 += 1
            lhs = comm(dij, T.dmat(l, m))
            rhs = Matrix(d, d)
            for p, v in T.basis_triple(i, j, l).items():
                rhs = rhs + T.dmat(p, m).scale(v)
            for p, v in T.basis_triple(i, j, m).items():
                rhs = rhs + T.dmat(l, p).scale(v)
            if lhs != rhs:
                if record(3, (i, j, l, m), "d_{ij} fails the derivation identity"):
                    stop = True
                    break
    report.checked[3] = n3

    # (4) d_ij in sp(T, omega): d^T omega + omega d = 0
    n4 = 0
    stop = False
    for (i, j) in pairs:
        n4 += 1
        dij = T.dmat(i, j)
        if not (dij.transpose() @ om + om @ dij).is_zero():
            if record(4, (i, j), "d_{ij} not in sp(T, omega)"):
                break
    report.checked[4] = n4
    return report


# ---------------------------------------------------------------------------
# Inner derivations and simplicity
# ---------------------------------------------------------------------------


class InnerDerivationSpace:
    """Echelonized span of the operators d_{x,y}."""

    __slots__ = ("source_dim", "space", "mats")

    def __init__(self, source_dim: int, space: Subspace, mats: list):
        self.source_dim = source_dim
        self.space = space
        self.mats = mats

    @property
    def dim(self) -> int:
        return self.space.dim

    def coords_of(self, mat: Matrix):
        return self.space.coords_of(mat.flatten())

    def bracket_coords(self, r: int, s: int):
        """Coordinates of [B_r, B_s] in this basis; None if it escapes."""
        return self.coords_of(comm(self.mats[r], self.mats[s]))

    def structure_constants(self) -> dict:
        out = {}
        for r in range(self.dim):
            for s in range(r + 1, self.dim):
                coords = self.bracket_coords(r, s)
                if coords is None:
                    raise ValidationError(
                        f"inner derivations not closed at basis pair ({r},{s})"
                    )
                out[(r, s)] = coords
        return out

    def __repr__(self):
        return f"InnerDerivationSpace(dim={self.dim})"


def inder_basis(T: SymplecticTripleSystem) -> InnerDerivationSpace:
    d = T.dim
    space = Subspace(d * d)
    for i in range(d):
        for j in range(i, d):
            m = T.dmat(i, j)
            if not m.is_zero():
                space, _ = space.insert(m.flatten())
    mats = [Matrix.from_flat(r, d, d) for r in space.rows]
    return InnerDerivationSpace(d, space, mats)


def is_simple(T: SymplecticTripleSystem) -> bool:
    """Nondegenerate form plus nonzero triple product (dim 1 excluded)."""
    if T.dim == 1:
        raise ValidationError("simplicity criterion excludes dim 1")
    if rank(T.omega) != T.dim:
        return False
    return any(col for col in T.cols.values())


# ---------------------------------------------------------------------------
# Structure-constant files
# ---------------------------------------------------------------------------


def scalar_to_json(x: GaussianRational):
    if x.is_real:
        f = x.re
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    re_f, im_f = x.re, x.im
    fmt = lambda f: (
        str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    )
    return {"re": fmt(re_f), "im": fmt(im_f)}


def scalar_from_json(obj, where: str) -> GaussianRational:
    try:
        if isinstance(obj, bool):
            raise ValueError("boolean is not a scalar")
        if isinstance(obj, int):
            return qi(obj)
        if isinstance(obj, str):
            return GaussianRational.parse(obj)
        if isinstance(obj, dict):
            extra = set(obj) - {"re", "im"}
            if extra:
                raise ValueError(f"unknown keys {sorted(extra)}")
            re_part = GaussianRational.parse(str(obj.get("re", "0")))
            im_part = GaussianRational.parse(str(obj.get("im", "0")))
            if not (re_part.is_real and im_part.is_real):
                raise ValueError("re/im parts must be plain rationals")
            return GaussianRational.from_fractions(re_part.re, im_part.re)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: bad scalar {obj!r} ({exc})") from None
    raise ParseError(f"{where}: bad scalar {obj!r} (unsupported type)")


def save_sts(T: SymplecticTripleSystem, path) -> None:
    doc = {
        "dim": T.dim,
        "label": T.label,
        "omega": [
            [scalar_to_json(T.omega[i, j]) for j in range(T.dim)]
            for i in range(T.dim)
        ],
        "triple": [
            [i, j, k, l, scalar_to_json(v)] for (i, j, k, l, v) in T.entries()
        ],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def load_sts(path) -> SymplecticTripleSystem:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level: expected an object")
    dim = doc.get("dim")
    if not isinstance(dim, int) or dim < 1:
        raise ParseError("dim: expected a positive integer")
    label = doc.get("label", "file")
    if not isinstance(label, str):
        raise ParseError("label: expected a string")

    omega_rows = doc.get("omega")
    if not isinstance(omega_rows, list) or len(omega_rows) != dim:
        raise ParseError(f"omega: expected {dim} rows")
    omega = Matrix(dim, dim)
    for i, row in enumerate(omega_rows):
        if not isinstance(row, list) or len(row) != dim:
            raise ParseError(f"omega[{i}]: expected {dim} entries")
        for j, cell in enumerate(row):
            omega.set_entry(i, j, scalar_from_json(cell, f"omega[{i}][{j}]"))

    triple = doc.get("triple")
    if not isinstance(triple, list):
        raise ParseError("triple: expected a list of [i,j,k,l,coeff] entries")
    cols: dict = {}
    for pos, entry in enumerate(triple):
        where = f"triple[{pos}]"
        if not isinstance(entry, list) or len(entry) != 5:
            raise ParseError(f"{where}: expected [i,j,k,l,coeff]")
        i, j, k, l = entry[:4]
        for name, idx in zip("ijkl", (i, j, k, l)):
            if not isinstance(idx, int) or not 0 <= idx < dim:
                raise ParseError(f"{where}: index {name}={idx!r} out of range 0..{dim-1}")
        v = scalar_from_json(entry[4], where)
        _add_entry(cols, i, j, k, l, v)

    if omega.transpose() != -omega:
        raise ValidationError("omega is not skew-symmetric")
    return SymplecticTripleSystem(dim, omega, cols, label)

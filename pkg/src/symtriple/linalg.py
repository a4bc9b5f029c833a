"""Exact dense-semantics linear algebra over the Gaussian rationals.

Matrices store only nonzero entries (row-major dicts) but behave as dense
exact matrices.  ``Subspace`` keeps a canonical reduced-row-echelon basis,
with pivots normalized to 1 and eliminated from every other row, so two
equal subspaces always carry identical basis tuples.
"""

from __future__ import annotations

from math import isqrt
from typing import Iterable, Sequence

from .errors import DimensionError
from .scalars import GaussianRational, ONE, ZERO, qi

__all__ = [
    "Matrix",
    "Subspace",
    "rank",
    "kernel",
    "bracket_closure",
    "center_of",
    "vec",
    "vec_add",
    "vec_sub",
    "vec_scale",
]

Vector = tuple


def vec(values: Iterable) -> Vector:
    return tuple(qi(v) for v in values)


def zero_vec(n: int) -> Vector:
    return (ZERO,) * n


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: GaussianRational, v: Vector) -> Vector:
    if not c:
        return zero_vec(len(v))
    return tuple(c * a for a in v)


class Matrix:
    """Exact rows x cols matrix; equality is entrywise."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: dict | None = None):
        self.rows = rows
        self.cols = cols
        # data: {row_index: {col_index: nonzero GaussianRational}}
        self.data = data if data is not None else {}

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols)

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, {i: {i: ONE} for i in range(n)})

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Matrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        data: dict = {}
        for i, row in enumerate(rows):
            if len(row) != nc:
                raise DimensionError("ragged rows")
            r = {}
            for j, x in enumerate(row):
                x = qi(x)
                if x:
                    r[j] = x
            if r:
                data[i] = r
        return Matrix(nr, nc, data)

    @staticmethod
    def from_entries(rows: int, cols: int, entries: dict) -> "Matrix":
        data: dict = {}
        for (i, j), x in entries.items():
            x = qi(x)
            if not x:
                continue
            if not (0 <= i < rows and 0 <= j < cols):
                raise DimensionError(f"entry ({i},{j}) outside {rows}x{cols}")
            data.setdefault(i, {})[j] = x
        return Matrix(rows, cols, data)

    @staticmethod
    def from_flat(v: Vector, rows: int, cols: int) -> "Matrix":
        if len(v) != rows * cols:
            raise DimensionError("flat vector length mismatch")
        data: dict = {}
        for p, x in enumerate(v):
            if x:
                data.setdefault(p // cols, {})[p % cols] = x
        return Matrix(rows, cols, data)

    # -- access -----------------------------------------------------------

    def __getitem__(self, key) -> GaussianRational:
        i, j = key
        return self.data.get(i, _EMPTY).get(j, ZERO)

    def set_entry(self, i: int, j: int, x) -> None:
        x = qi(x)
        row = self.data.get(i)
        if x:
            if row is None:
                self.data[i] = {j: x}
            else:
                row[j] = x
        elif row is not None:
            row.pop(j, None)
            if not row:
                del self.data[i]

    def row_items(self, i: int):
        return self.data.get(i, _EMPTY).items()

    def entries(self):
        for i, row in self.data.items():
            for j, x in row.items():
                yield i, j, x

    def to_lists(self) -> list:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not self.data

    def nnz(self) -> int:
        return sum(len(r) for r in self.data.values())

    # -- algebra ------------------------------------------------------------

    def _check_same_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionError("matrix shape mismatch")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        data = {i: dict(r) for i, r in self.data.items()}
        for i, row in other.data.items():
            tr = data.setdefault(i, {})
            for j, x in row.items():
                s = tr.get(j, ZERO) + x
                if s:
                    tr[j] = s
                else:
                    tr.pop(j, None)
            if not tr:
                del data[i]
        return Matrix(self.rows, self.cols, data)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return Matrix(
            self.rows,
            self.cols,
            {i: {j: -x for j, x in r.items()} for i, r in self.data.items()},
        )

    def scale(self, c) -> "Matrix":
        c = qi(c)
        if not c:
            return Matrix(self.rows, self.cols)
        return Matrix(
            self.rows,
            self.cols,
            {i: {j: c * x for j, x in r.items()} for i, r in self.data.items()},
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionError("matmul shape mismatch")
        data: dict = {}
        odata = other.data
        for i, row in self.data.items():
            acc: dict = {}
            for k, x in row.items():
                orow = odata.get(k)
                if orow is None:
                    continue
                for j, y in orow.items():
                    s = acc.get(j, ZERO) + x * y
                    if s:
                        acc[j] = s
                    else:
                        del acc[j]
            if acc:
                data[i] = acc
        return Matrix(self.rows, other.cols, data)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.cols:
            raise DimensionError("matrix-vector length mismatch")
        out = [ZERO] * self.rows
        for i, row in self.data.items():
            acc = ZERO
            for j, x in row.items():
                vj = v[j]
                if vj:
                    acc = acc + x * vj
            out[i] = acc
        return tuple(out)

    def transpose(self) -> "Matrix":
        data: dict = {}
        for i, row in self.data.items():
            for j, x in row.items():
                data.setdefault(j, {})[i] = x
        return Matrix(self.cols, self.rows, data)

    def trace(self) -> GaussianRational:
        t = ZERO
        for i, row in self.data.items():
            x = row.get(i)
            if x is not None:
                t = t + x
        return t

    def flatten(self) -> Vector:
        out = [ZERO] * (self.rows * self.cols)
        nc = self.cols
        for i, row in self.data.items():
            base = i * nc
            for j, x in row.items():
                out[base + j] = x
        return tuple(out)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash(
            (self.rows, self.cols, tuple(sorted((i, j, x) for i, j, x in self.entries())))
        )

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, nnz={self.nnz()})"


_EMPTY: dict = {}


def comm(a: Matrix, b: Matrix) -> Matrix:
    """Commutator [a, b] = ab - ba."""
    return a @ b - b @ a


def trace_product(a: Matrix, b: Matrix) -> GaussianRational:
    """trace(a @ b) without forming the product."""
    if a.cols != b.rows or b.cols != a.rows:
        raise DimensionError("trace_product shape mismatch")
    t = ZERO
    bdata = b.data
    for i, row in a.data.items():
        for j, x in row.items():
            y = bdata.get(j, _EMPTY).get(i)
            if y is not None:
                t = t + x * y
    return t


# ---------------------------------------------------------------------------
# Echelon bases
# ---------------------------------------------------------------------------


def _reduce_against(v: list, rows: Sequence[Vector], pivots: Sequence[int]) -> None:
    """In place, eliminate the pivot coordinates of ``rows`` from ``v``."""
    for r, p in zip(rows, pivots):
        c = v[p]
        if c:
            for k in range(p, len(v)):
                rk = r[k]
                if rk:
                    v[k] = v[k] - c * rk


class Subspace:
    """A linear subspace held as a canonical reduced-row-echelon basis."""

    __slots__ = ("ambient", "rows", "pivots")

    def __init__(self, ambient: int, rows: tuple = (), pivots: tuple = ()):
        self.ambient = ambient
        self.rows = rows
        self.pivots = pivots

    @staticmethod
    def zero_space(ambient: int) -> "Subspace":
        return Subspace(ambient)

    @staticmethod
    def span(vectors: Iterable[Sequence], ambient: int | None = None) -> "Subspace":
        vectors = list(vectors)
        if ambient is None:
            if not vectors:
                raise DimensionError("ambient dimension required for empty span")
            ambient = len(vectors[0])
        s = Subspace(ambient)
        for v in vectors:
            s, _ = s.insert(vec(v))
        return s

    @property
    def dim(self) -> int:
        return len(self.rows)

    def insert(self, v: Vector) -> tuple["Subspace", bool]:
        """Echelonized span of this basis plus ``v``; flag reports growth."""
        if len(v) != self.ambient:
            raise DimensionError(
                f"vector length {len(v)} != ambient {self.ambient}"
            )
        w = [x if type(x) is GaussianRational else qi(x) for x in v]
        _reduce_against(w, self.rows, self.pivots)
        p = _first_nonzero(w)
        if p is None:
            return self, False
        c = w[p]
        if c != ONE:
            inv = c.inverse()
            for k in range(p, len(w)):
                if w[k]:
                    w[k] = inv * w[k]
        new_row = tuple(w)
        # Eliminate the new pivot from existing rows, keep pivot order.
        rows = []
        pivots = []
        placed = False
        for r, rp in zip(self.rows, self.pivots):
            if not placed and p < rp:
                rows.append(new_row)
                pivots.append(p)
                placed = True
            c = r[p]
            if c:
                r = tuple(
                    x - c * y if y else x for x, y in zip(r, new_row)
                )
            rows.append(r)
            pivots.append(rp)
        if not placed:
            rows.append(new_row)
            pivots.append(p)
        return Subspace(self.ambient, tuple(rows), tuple(pivots)), True

    def contains(self, v: Sequence) -> bool:
        w = list(vec(v))
        if len(w) != self.ambient:
            raise DimensionError("vector/ambient mismatch")
        _reduce_against(w, self.rows, self.pivots)
        return _first_nonzero(w) is None

    def coords_of(self, v: Sequence) -> Vector | None:
        """Coordinates of ``v`` in this basis, or None if outside the span."""
        w = list(vec(v))
        if len(w) != self.ambient:
            raise DimensionError("vector/ambient mismatch")
        coords = tuple(w[p] for p in self.pivots)
        _reduce_against(w, self.rows, self.pivots)
        if _first_nonzero(w) is not None:
            return None
        return coords

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise DimensionError("ambient mismatch")
        s = self
        for r in other.rows:
            s, _ = s.insert(r)
        return s

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.rows == other.rows

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return f"Subspace(ambient={self.ambient}, dim={self.dim})"


def _first_nonzero(v: Sequence) -> int | None:
    for k, x in enumerate(v):
        if x:
            return k
    return None


# ---------------------------------------------------------------------------
# Rank / kernel
# ---------------------------------------------------------------------------


def rank(m: Matrix) -> int:
    """Row rank over Q(i), exact."""
    s = Subspace(m.cols)
    for i in range(m.rows):
        if i in m.data:
            row = [ZERO] * m.cols
            for j, x in m.data[i].items():
                row[j] = x
            s, _ = s.insert(tuple(row))
    return s.dim


def kernel(m: Matrix) -> Subspace:
    """Subspace of all v with m @ v = 0."""
    s = Subspace(m.cols)
    for i in range(m.rows):
        if i in m.data:
            row = [ZERO] * m.cols
            for j, x in m.data[i].items():
                row[j] = x
            s, _ = s.insert(tuple(row))
    pivot_set = set(s.pivots)
    free_cols = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for f in free_cols:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in zip(s.rows, s.pivots):
            if r[f]:
                v[p] = -r[f]
        basis.append(tuple(v))
    return Subspace.span(basis, ambient=m.cols)


# ---------------------------------------------------------------------------
# Lie-closure machinery
# ---------------------------------------------------------------------------


def bracket_closure(
    gens: Sequence[Matrix],
    multipliers: Sequence[Matrix] = (),
    stop_dim: int | None = None,
) -> Subspace:
    """Smallest subspace containing ``gens``, closed under mutual commutators
    and under commutators with each multiplier, by worklist iteration.

    ``stop_dim`` may be set when the caller knows a Lie algebra of that
    dimension which contains every generator and multiplier bracket; reaching
    it proves the closure equals that algebra, so iteration can stop early.
    """
    sizes = {m.rows for m in gens} | {m.cols for m in gens}
    sizes |= {m.rows for m in multipliers} | {m.cols for m in multipliers}
    if len(sizes) > 1:
        raise DimensionError("bracket_closure inputs must share one square size")
    if not gens:
        return Subspace(0)
    d = gens[0].rows
    space = Subspace(d * d)
    pool: list[Matrix] = []  # inserted matrices spanning the space
    work: list[Matrix] = []

    def push(mat: Matrix) -> bool:
        nonlocal space
        space, grew = space.insert(mat.flatten())
        if grew:
            pool.append(mat)
            work.append(mat)
        return grew

    for g in gens:
        push(g)
        if stop_dim is not None and space.dim >= stop_dim:
            return space
    while work:
        x = work.pop()
        for mu in multipliers:
            push(comm(mu, x))
            if stop_dim is not None and space.dim >= stop_dim:
                return space
        # pool grows during iteration; new entries are queued themselves,
        # so bracketing against the pool snapshot at pop time suffices.
        for y in pool:
            push(comm(x, y))
            if stop_dim is not None and space.dim >= stop_dim:
                return space
    return space


def matrices_of(space: Subspace) -> list[Matrix]:
    """Reinterpret the rows of a subspace of flattened d x d matrices."""
    d = isqrt(space.ambient)
    if d * d != space.ambient:
        raise DimensionError("ambient dimension is not a perfect square")
    return [Matrix.from_flat(r, d, d) for r in space.rows]


def center_of(space: Subspace) -> Subspace:
    """{x in space : [x, y] = 0 for every y in the space}.

    Computed by intersecting, one basis constraint at a time, the kernels of
    c -> [sum c_i B_i, B_j]; the candidate space shrinks quickly, which keeps
    large inputs tractable.
    """
    mats = matrices_of(space)
    k = len(mats)
    if k == 0:
        return space
    d = mats[0].rows
    # Current candidate expressed by coefficient rows over the basis mats.
    cand = [tuple(ONE if i == j else ZERO for j in range(k)) for i in range(k)]
    cand_mats = list(mats)
    for bj in mats:
        if not cand:
            break
        images = [comm(x, bj) for x in cand_mats]
        if all(im.is_zero() for im in images):
            continue
        # lam in kernel(M) where M columns are flattened images.
        m = Matrix(d * d, len(images))
        for s, im in enumerate(images):
            for i, row in im.data.items():
                for j, x in row.items():
                    m.set_entry(i * d + j, s, x)
        lam_space = kernel(m)
        new_cand = []
        for lam in lam_space.rows:
            combo = [ZERO] * k
            for s, ls in enumerate(lam):
                if ls:
                    for t, ct in enumerate(cand[s]):
                        if ct:
                            combo[t] = combo[t] + ls * ct
            new_cand.append(tuple(combo))
        cand = new_cand
        cand_mats = []
        for coeffs in cand:
            acc = Matrix(d, d)
            for s, cs in enumerate(coeffs):
                if cs:
                    acc = acc + mats[s].scale(cs)
            cand_mats.append(acc)
    return Subspace.span(
        [m.flatten() for m in cand_mats], ambient=space.ambient
    )

"""The four split complex composition algebras.

Fixed basis orders (these pin the coordinates used in structure-constant
files and everywhere downstream):

* ``unarion``   (dim 1): ``[1]``.
* ``binarion``  (dim 2): ``[(1,0), (0,1)]``, componentwise product,
  conjugation swaps the two idempotents.
* ``quaternion`` (dim 4): matrix units ``[E11, E12, E21, E22]`` of the 2x2
  matrix algebra, conjugation is the adjugate, norm is the determinant.
* ``octonion``  (dim 8): vector matrices ``[p, q, u1, u2, u3, v1, v2, v3]``
  where ``p = (1,0;0,0)``, ``q = (0,0;0,1)``, ``u_i`` carries the standard
  3-vector ``e_i`` in the upper-right slot and ``v_i`` in the lower-left.
  The product of ``(a,v;w,b)`` and ``(a',v';w',b')`` is

      (aa' + v.w',  av' + b'v + w x w';  a'w + bw' - v x v',  bb' + w.v')

  i.e. plus-cross in the upper-right block, minus-cross in the lower-left;
  the norm is ``ab - v.w``.
"""

from __future__ import annotations

from .errors import DimensionError
from .scalars import GaussianRational, HALF, ONE, ZERO

__all__ = ["CompositionAlgebra", "build_composition", "KINDS"]

KINDS = ("unarion", "binarion", "quaternion", "octonion")


class CompositionAlgebra:
    """Structure constants of one split composition algebra over Q(i)."""

    __slots__ = ("kind", "dim", "unit", "mul", "conj", "norm_gram", "trace_coeffs")

    def __init__(self, kind, dim, unit, mul, conj, norm_gram, trace_coeffs):
        self.kind = kind
        self.dim = dim
        self.unit = unit
        self.mul = mul  # mul[i][j] = coordinate vector of e_i * e_j
        self.conj = conj  # conj[i] = coordinate vector of conj(e_i)
        self.norm_gram = norm_gram  # bilinear N with N(x, x) = n(x)
        self.trace_coeffs = trace_coeffs  # t(e_i) with x + conj(x) = t(x) * unit

    def _check(self, x):
        if len(x) != self.dim:
            raise DimensionError(f"element length {len(x)} != dim {self.dim}")

    def multiply(self, x, y):
        self._check(x)
        self._check(y)
        out = [ZERO] * self.dim
        mul = self.mul
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, mk in enumerate(mul[i][j]):
                    if mk:
                        out[k] = out[k] + c * mk
        return tuple(out)

    def conjugate(self, x):
        self._check(x)
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if xi:
                for k, ck in enumerate(self.conj[i]):
                    if ck:
                        out[k] = out[k] + xi * ck
        return tuple(out)

    def trace(self, x) -> GaussianRational:
        self._check(x)
        t = ZERO
        for xi, ti in zip(x, self.trace_coeffs):
            if xi and ti:
                t = t + xi * ti
        return t

    def norm_b(self, x, y) -> GaussianRational:
        """Symmetric bilinear norm form; norm_b(x, x) is the quadratic norm."""
        self._check(x)
        self._check(y)
        t = ZERO
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.norm_gram[i]
            for j, yj in enumerate(y):
                if yj and row[j]:
                    t = t + xi * yj * row[j]
        return t

    def norm(self, x) -> GaussianRational:
        return self.norm_b(x, x)

    def basis_element(self, i):
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    def associator(self, x, y, z):
        xy_z = self.multiply(self.multiply(x, y), z)
        x_yz = self.multiply(x, self.multiply(y, z))
        return tuple(a - b for a, b in zip(xy_z, x_yz))

    def __repr__(self):
        return f"CompositionAlgebra({self.kind}, dim={self.dim})"


def _dot3(v, w):
    return v[0] * w[0] + v[1] * w[1] + v[2] * w[2]


def _cross3(v, w):
    return (
        v[1] * w[2] - v[2] * w[1],
        v[2] * w[0] - v[0] * w[2],
        v[0] * w[1] - v[1] * w[0],
    )


def _zorn_mul(x, y):
    # coordinates are (a, b, v0, v1, v2, w0, w1, w2) for the element (a, v; w, b)
    a1, b1 = x[0], x[1]
    v1, w1 = x[2:5], x[5:8]
    a2, b2 = y[0], y[1]
    v2, w2 = y[2:5], y[5:8]
    cu = _cross3(w1, w2)
    cl = _cross3(v1, v2)
    a = a1 * a2 + _dot3(v1, w2)
    b = b1 * b2 + _dot3(w1, v2)
    v = tuple(a1 * p + b2 * q + r for p, q, r in zip(v2, v1, cu))
    w = tuple(a2 * p + b1 * q - r for p, q, r in zip(w1, w2, cl))
    return (a, b) + v + w


def _zorn_norm(x):
    return x[0] * x[1] - _dot3(x[2:5], x[5:8])


def build_composition(kind: str) -> CompositionAlgebra:
    """Structure constants for the standard model of each kind."""
    if kind == "unarion":
        dim = 1
        unit = (ONE,)
        mul_fn = lambda x, y: (x[0] * y[0],)
        conj_fn = lambda x: x
        norm_fn = lambda x: x[0] * x[0]
    elif kind == "binarion":
        dim = 2
        unit = (ONE, ONE)
        mul_fn = lambda x, y: (x[0] * y[0], x[1] * y[1])
        conj_fn = lambda x: (x[1], x[0])
        norm_fn = lambda x: x[0] * x[1]
    elif kind == "quaternion":
        dim = 4
        unit = (ONE, ZERO, ZERO, ONE)

        def mul_fn(x, y):  # matrix product in coordinates (E11, E12, E21, E22)
            return (
                x[0] * y[0] + x[1] * y[2],
                x[0] * y[1] + x[1] * y[3],
                x[2] * y[0] + x[3] * y[2],
                x[2] * y[1] + x[3] * y[3],
            )

        conj_fn = lambda x: (x[3], -x[1], -x[2], x[0])  # adjugate
        norm_fn = lambda x: x[0] * x[3] - x[1] * x[2]  # determinant
    elif kind == "octonion":
        dim = 8
        unit = (ONE, ONE, ZERO, ZERO, ZERO, ZERO, ZERO, ZERO)
        mul_fn = _zorn_mul
        conj_fn = lambda x: (x[1], x[0]) + tuple(-c for c in x[2:8])
        norm_fn = _zorn_norm
    else:
        raise ValueError(f"unknown composition algebra kind {kind!r}")

    basis = [tuple(ONE if k == i else ZERO for k in range(dim)) for i in range(dim)]
    mul = tuple(tuple(mul_fn(basis[i], basis[j]) for j in range(dim)) for i in range(dim))
    conj = tuple(conj_fn(basis[i]) for i in range(dim))
    gram = tuple(
        tuple(
            (
                norm_fn(tuple(a + b for a, b in zip(basis[i], basis[j])))
                - norm_fn(basis[i])
                - norm_fn(basis[j])
            )
            * HALF
            for j in range(dim)
        )
        for i in range(dim)
    )
    trace_coeffs = []
    for i in range(dim):
        s = tuple(a + b for a, b in zip(basis[i], conj[i]))
        coeff = _unit_multiple(s, unit)
        trace_coeffs.append(coeff)
    return CompositionAlgebra(kind, dim, unit, mul, conj, gram, tuple(trace_coeffs))


def _unit_multiple(x, unit) -> GaussianRational:
    """Scalar c with x = c * unit; raises if x is not such a multiple."""
    c = None
    for xi, ui in zip(x, unit):
        if ui:
            c = xi / ui
            break
    if c is None:
        raise ValueError("zero unit")
    for xi, ui in zip(x, unit):
        if xi != c * ui:
            raise ValueError("element is not a multiple of the unit")
    return c

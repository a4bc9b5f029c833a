import pytest

from symtriple.composition import build_composition
from symtriple.errors import ValidationError
from symtriple.jordan import build_jordan
from symtriple.linalg import Matrix, rank
from symtriple.scalars import ONE, ZERO, qi

HERMITIAN_DIMS = {"unarion": 6, "binarion": 9, "quaternion": 15, "octonion": 27}


@pytest.fixture(scope="module", params=sorted(HERMITIAN_DIMS))
def hermitian(request):
    return build_jordan("hermitian", build_composition(request.param))


def test_scalar_kind():
    j = build_jordan("scalar")
    assert j.dim == 1
    assert j.t((ONE,), (ONE,)) == 3
    assert j.cross((qi(2),), (qi(5),)) == (ZERO,)
    assert j.linearized_cross((qi(2),), (qi(5),)) == (qi(20),)
    with pytest.raises(ValidationError):
        j.norm((ONE,))


def test_hermitian_dimensions(hermitian):
    assert hermitian.dim == HERMITIAN_DIMS[hermitian.algebra.kind]


def test_unit_identities(hermitian):
    unit = hermitian.unit
    assert hermitian.cross(unit, unit) == unit
    assert hermitian.trace_of(unit) == 3
    assert hermitian.t(unit, unit) == 3
    assert hermitian.norm(unit) == 1


def test_symmetry(hermitian):
    d = hermitian.dim
    for i in range(d):
        for j in range(d):
            assert hermitian.cross_table[i][j] == hermitian.cross_table[j][i]
            assert hermitian.trace_form[i][j] == hermitian.trace_form[j][i]
            assert hermitian.dot_table[i][j] == hermitian.dot_table[j][i]


def test_trace_form_nondegenerate(hermitian):
    d = hermitian.dim
    gram = Matrix.from_rows(
        [[hermitian.trace_form[i][j] for j in range(d)] for i in range(d)]
    )
    assert rank(gram) == d


def test_trace_associativity(hermitian):
    d = hermitian.dim
    basis = [hermitian.basis_element(i) for i in range(d)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                left = hermitian.t(hermitian.dot(basis[i], basis[j]), basis[k])
                right = hermitian.t(basis[i], hermitian.dot(basis[j], basis[k]))
                assert left == right


def test_adjoint_identity_on_probes(hermitian):
    # (a x a) . a is n(a) * unit; norm() raises if the multiple breaks down.
    d = hermitian.dim
    basis = [hermitian.basis_element(i) for i in range(d)]
    probes = list(basis)
    for i in range(min(d, 6)):
        for j in range(i + 1, min(d, 7)):
            probes.append(tuple(a + b for a, b in zip(basis[i], basis[j])))
    for a in probes:
        hermitian.norm(a)


def test_linearized_cross_doubles(hermitian):
    a = hermitian.basis_element(0)
    b = hermitian.basis_element(3)
    doubled = tuple(x + x for x in hermitian.cross(a, b))
    assert hermitian.linearized_cross(a, b) == doubled


def test_bad_arguments():
    with pytest.raises(ValidationError):
        build_jordan("scalar", build_composition("unarion"))
    with pytest.raises(ValidationError):
        build_jordan("hermitian")
    with pytest.raises(ValueError):
        build_jordan("spin-factor")

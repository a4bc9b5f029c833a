"""Case catalog: named families, parameter validation, closed-form expected
dimensions, and the light/heavy split used by the CLI and the test suite.

Family parameters follow the constructions in ``triples``:

* ``symplectic`` n >= 1 (tangent dimension 4n+3),
* ``orthogonal`` w >= 3 (the ambient orthogonal algebra has rank k = w+4),
* ``special``   w >= 1 (the ambient special linear group has m = w+2),
* ``exceptional`` J-kind in scalar | unarion | binarion | quaternion |
  octonion, giving the five exceptional enveloping algebras.
"""

from __future__ import annotations

from dataclasses import dataclass

from .composition import build_composition
from .errors import ValidationError
from .jordan import build_jordan
from .triples import (
    SymplecticTripleSystem,
    build_exceptional_type,
    build_orthogonal_type,
    build_special_type,
    build_symplectic_type,
    load_sts,
)

__all__ = [
    "CaseSpec",
    "FAMILIES",
    "J_KINDS",
    "build_triple",
    "case_m_dim",
    "is_heavy",
    "expected_hol_levi_civita",
    "expected_hol_skew",
    "expected_inder_dim",
    "DEFAULT_TABLE_CASES",
    "ALL_LIGHT_TABLE_CASES",
    "HEAVY_TABLE_CASES",
]

FAMILIES = ("symplectic", "orthogonal", "special", "exceptional", "file")
J_KINDS = ("scalar", "unarion", "binarion", "quaternion", "octonion")

# tangent dimension 4n+3 above which a case needs --allow-heavy
LIGHT_M_DIM_LIMIT = 35

_EXC_T_DIM = {"scalar": 4, "unarion": 14, "binarion": 20, "quaternion": 32, "octonion": 56}
_EXC_INDER = {"scalar": 3, "unarion": 21, "binarion": 35, "quaternion": 66, "octonion": 133}


@dataclass(frozen=True)
class CaseSpec:
    """One family member plus the connection to study on it."""

    family: str
    param: object  # n, w, a J-kind, or a file path
    connection: str = "levi-civita"

    def case_label(self) -> str:
        if self.family == "symplectic":
            return f"symplectic(n={self.param})"
        if self.family == "orthogonal":
            return f"orthogonal(w={self.param})"
        if self.family == "special":
            return f"special(w={self.param})"
        if self.family == "exceptional":
            return f"exceptional(J={self.param})"
        return f"file({self.param})"


def build_triple(family: str, param) -> SymplecticTripleSystem:
    if family == "symplectic":
        return build_symplectic_type(_positive(param, "n"))
    if family == "orthogonal":
        return build_orthogonal_type(_positive(param, "w"))
    if family == "special":
        return build_special_type(_positive(param, "w"))
    if family == "exceptional":
        if param == "scalar":
            return build_exceptional_type(build_jordan("scalar"))
        if param in J_KINDS:
            return build_exceptional_type(
                build_jordan("hermitian", build_composition(param))
            )
        raise ValidationError(f"unknown J-kind {param!r}; choose one of {J_KINDS}")
    if family == "file":
        return load_sts(param)
    raise ValidationError(f"unknown family {family!r}; choose one of {FAMILIES}")


def _positive(param, name: str) -> int:
    if not isinstance(param, int) or param < 1:
        raise ValidationError(f"{name} must be a positive integer, got {param!r}")
    return param


def case_t_dim(family: str, param) -> int:
    """dim T without building anything (used by the heavy gate)."""
    if family == "symplectic":
        return 2 * _positive(param, "n")
    if family in ("orthogonal", "special"):
        return 2 * _positive(param, "w")
    if family == "exceptional":
        if param not in _EXC_T_DIM:
            raise ValidationError(f"unknown J-kind {param!r}")
        return _EXC_T_DIM[param]
    raise ValidationError(f"no closed-form size for family {family!r}")


def case_m_dim(family: str, param) -> int:
    return 2 * case_t_dim(family, param) + 3


def is_heavy(family: str, param) -> bool:
    """True for cases beyond the light tier (tangent dimension > 35)."""
    if family == "file":
        return False
    return case_m_dim(family, param) > LIGHT_M_DIM_LIMIT


def expected_hol_levi_civita(n: int) -> int:
    """dim so(4n+3) = 8n^2 + 10n + 3."""
    return 8 * n * n + 10 * n + 3


def expected_inder_dim(family: str, param) -> int:
    if family == "symplectic":
        n = param
        return n * (2 * n + 1)
    if family == "orthogonal":
        w = param
        return 3 + w * (w - 1) // 2
    if family == "special":
        return param * param
    if family == "exceptional":
        return _EXC_INDER[param]
    raise ValidationError(f"no closed-form inder dimension for {family!r}")


def expected_hol_skew(family: str, param) -> int:
    """Table closed form for the two skew-torsion holonomies: 3 + dim inder."""
    if family == "symplectic":
        n = param
        return 2 * n * n + n + 3
    if family == "special":
        n = param
        return n * n + 3
    if family == "orthogonal":
        n = param
        return n * (n - 1) // 2 + 6
    if family == "exceptional":
        return 3 + _EXC_INDER[param]
    raise ValidationError(f"no closed-form holonomy dimension for {family!r}")


# Table selections.  The default list is the quick tier; --all-light adds the
# remaining cases of tangent dimension <= 35 (unarion takes minutes).
DEFAULT_TABLE_CASES = (
    ("symplectic", 1),
    ("symplectic", 2),
    ("special", 1),
    ("special", 2),
    ("orthogonal", 3),
    ("orthogonal", 4),
    ("exceptional", "scalar"),
)

ALL_LIGHT_TABLE_CASES = DEFAULT_TABLE_CASES + (
    ("symplectic", 3),
    ("special", 3),
    ("orthogonal", 5),
    ("exceptional", "unarion"),
)

HEAVY_TABLE_CASES = (
    ("exceptional", "binarion"),
    ("exceptional", "quaternion"),
    ("exceptional", "octonion"),
)

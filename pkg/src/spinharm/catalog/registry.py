"""Theorem registry: brute-force left sides paired with closed-form right sides."""
from __future__ import annotations

import fnmatch
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from ..poly import Direction
from .geometry import Geometry

FAMILIES = ("scalar-bilocal", "scalar-tensor", "spin-spin", "local", "appendix")

Params = dict
Evaluator = Callable[[Params, Direction, Direction], np.ndarray]
RhsEvaluator = Callable[[Params, Geometry], np.ndarray]
StructureBasis = Callable[[Params, Geometry], list]
ParamGen = Callable[[int], Iterable[Params]]


class DomainError(ValueError):
    """Parameters outside a theorem's domain."""


class UnsupportedModeError(RuntimeError):
    """Closed-form evaluation requested for an extraction-only theorem, or vice versa."""


@dataclass(frozen=True)
class TheoremSpec:
    """One registered identity.

    ``lhs`` is the brute-force sum.  Exactly one of ``rhs`` (closed form)
    and ``structures`` (tensor structures with unknown coefficients) is set.
    ``valid`` yields every valid parameter tuple up to a given l_max and
    ``vanishing`` the tuples on which the left side must vanish.  ``scale``,
    when given, bounds |lhs| for a parameter tuple; vanishing norms are
    measured relative to max(1, scale).
    """

    id: str
    family: str
    citation: str
    domain: str
    lhs: Evaluator
    valid: ParamGen
    rhs: Optional[RhsEvaluator] = None
    structures: Optional[StructureBasis] = None
    vanishing: Optional[ParamGen] = None
    local: bool = False
    parent: Optional[str] = None
    parent_params: Optional[Callable[[Params], Params]] = None
    kmax: int = 6
    derived: str = ""
    notes: str = ""
    expected: Optional[Callable[[Params], dict]] = field(default=None)
    scale: Optional[Callable[[Params], float]] = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if (self.rhs is None) == (self.structures is None):
            raise ValueError(f"{self.id}: exactly one of rhs/structures must be given")

    @property
    def mode(self) -> str:
        return "explicit" if self.rhs is not None else "extraction"

    def params(self, l_max: int) -> list[Params]:
        return list(self.valid(l_max))

    def vanishing_params(self, l_max: int) -> list[Params]:
        return list(self.vanishing(l_max)) if self.vanishing else []

    def index_entry(self) -> dict:
        return {
            "id": self.id,
            "family": self.family,
            "citation": self.citation,
            "domain": self.domain,
            "mode": self.mode,
            "local": self.local,
            "parent": self.parent,
            "derived": self.derived or None,
            "notes": self.notes or None,
        }


REGISTRY: dict[str, TheoremSpec] = {}


def register(spec: TheoremSpec) -> TheoremSpec:
    if spec.id in REGISTRY:
        raise ValueError(f"duplicate theorem id {spec.id}")
    REGISTRY[spec.id] = spec
    return spec


def get(theorem_id: str) -> TheoremSpec:
    _load()
    try:
        return REGISTRY[theorem_id]
    except KeyError:
        raise KeyError(f"unknown theorem id {theorem_id!r}") from None


def theorems(pattern: str = "*") -> list[TheoremSpec]:
    """Registered theorems whose id matches the glob ``pattern``, sorted by id."""
    _load()
    pats = [p.strip() for p in pattern.split(",") if p.strip()] or ["*"]
    return [REGISTRY[k] for k in sorted(REGISTRY) if any(fnmatch.fnmatchcase(k, p) for p in pats)]


def _load() -> None:
    from . import appendix, scalar, spin, tensor_thms  # noqa: F401  (registration side effects)


def _geometry(spec: TheoremSpec, params: Params, a: Direction, b: Direction) -> Geometry:
    lmax = int(params.get("l", 0)) + 4
    return Geometry(a, b, lmax=lmax, kmax=spec.kmax)


def _check(spec: TheoremSpec, params: Params, a: Direction, b: Direction):
    if spec.local and a is not b and not np.allclose(a.vector, b.vector, atol=1e-14):
        raise DomainError(f"{spec.id} is a local identity; needs b == a")


def evaluate_lhs(spec: TheoremSpec, params: Params, a: Direction, b: Direction) -> np.ndarray:
    """Brute-force left-hand side."""
    _check(spec, params, a, b)
    return np.asarray(spec.lhs(params, a, b), dtype=complex)


def evaluate_rhs(spec: TheoremSpec, params: Params, a: Direction, b: Direction) -> np.ndarray:
    """Closed-form right-hand side."""
    if spec.rhs is None:
        raise UnsupportedModeError(f"{spec.id} is extraction-only; use extract_coefficients")
    _check(spec, params, a, b)
    return np.asarray(spec.rhs(params, _geometry(spec, params, a, b)), dtype=complex)


def vanishing_norm(spec: TheoremSpec, params: Params, a: Direction, b: Direction) -> float:
    """max|lhs| / max(1, scale) on a tuple where the left side must vanish."""
    lhs = evaluate_lhs(spec, params, a, b)
    scale = spec.scale(params) if spec.scale is not None else 1.0
    return float(np.max(np.abs(lhs))) / max(1.0, scale)


def residual(spec: TheoremSpec, params: Params, a: Direction, b: Direction) -> float:
    """max|lhs - rhs| / max(1, max|lhs|)."""
    lhs = evaluate_lhs(spec, params, a, b)
    rhs = evaluate_rhs(spec, params, a, b)
    if lhs.shape != rhs.shape:
        raise ValueError(f"{spec.id}: shape mismatch {lhs.shape} vs {rhs.shape}")
    scale = max(1.0, float(np.max(np.abs(lhs))) if lhs.size else 0.0)
    return float(np.max(np.abs(lhs - rhs))) / scale

"""Least-squares extraction of coefficients multiplying declared tensor structures."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from ..poly import Direction
from .registry import Params, TheoremSpec, UnsupportedModeError, _geometry, evaluate_lhs

# Columns whose largest entry is below this (relative to the data scale) are
# identically zero at the sampled pairs: their coefficient is undetermined.
ZERO_COLUMN = 1e-13
# Smallest admissible ratio of singular values of the column-normalized system.
CONDITION_LIMIT = 1e-10


class ConditioningError(ValueError):
    """The declared structures are linearly dependent at the sampled pairs."""

    def __init__(self, message: str, labels: Sequence[str]):
        super().__init__(message)
        self.labels = list(labels)


@dataclass(frozen=True)
class ExtractedCoefficients:
    """Fitted coefficients of one theorem at one parameter tuple.

    ``coefficients`` holds (label, value) pairs in structure order; labels in
    ``undetermined`` have value nan because their structure vanishes at every
    sampled pair.  ``residual`` is max|lhs - fit| over all samples, ``spread``
    the largest change of any coefficient between disjoint halves of the
    samples and ``imag_max`` the largest imaginary part discarded.
    """

    theorem_id: str
    params: Params
    coefficients: tuple
    residual: float
    spread: float
    imag_max: float
    undetermined: tuple = field(default=())

    def value(self, label: str) -> float:
        for name, val in self.coefficients:
            if name == label:
                return val
        raise KeyError(label)

    def as_dict(self) -> dict:
        return {
            "id": self.theorem_id,
            "params": dict(self.params),
            "coefficients": {k: (None if math.isnan(v) else v) for k, v in self.coefficients},
            "residual": self.residual,
            "spread": self.spread,
            "imag_max": self.imag_max,
            "undetermined": list(self.undetermined),
        }


def recognize_rational(value: float, max_denominator: int = 10000, tol: float = 1e-10) -> Optional[Fraction]:
    """A small-denominator fraction within tol of value, or None."""
    if not math.isfinite(value):
        return None
    frac = Fraction(value).limit_denominator(max_denominator)
    return frac if abs(float(frac) - value) <= tol else None


def _system(spec: TheoremSpec, params: Params, pairs):
    rows, cols, labels = [], [], None
    for a, b in pairs:
        if spec.local:
            b = a
        lhs = evaluate_lhs(spec, params, a, b).ravel()
        structs = spec.structures(params, _geometry(spec, params, a, b))
        if labels is None:
            labels = [name for name, _ in structs]
        rows.append(lhs)
        cols.append(np.stack([np.asarray(t, dtype=complex).ravel() for _, t in structs], axis=1))
    return np.concatenate(rows), np.concatenate(cols, axis=0), labels


def _solve(y, A):
    coef, *_ = np.linalg.lstsq(A, y, rcond=None)
    return coef


def extract_coefficients(spec: TheoremSpec, params: Params,
                         sample_pairs: Sequence[tuple[Direction, Direction]]) -> ExtractedCoefficients:
    """Fit the brute-force left side as a combination of the theorem's structures.

    For local theorems only the first direction of each pair is used.
    """
    if spec.structures is None:
        raise UnsupportedModeError(f"{spec.id} is an explicit theorem; nothing to extract")
    pairs = list(sample_pairs)
    if not pairs:
        raise ValueError("no sample pairs")
    y, A, labels = _system(spec, params, pairs)
    if y.size < 2 * len(labels):
        raise ValueError(f"{y.size} equations for {len(labels)} unknowns; need at least twice as many")

    scale = max(1.0, float(np.max(np.abs(y))))
    colmax = np.max(np.abs(A), axis=0)
    keep = colmax > ZERO_COLUMN * scale
    undetermined = tuple(lbl for lbl, k in zip(labels, keep) if not k)
    live = [lbl for lbl, k in zip(labels, keep) if k]
    Ak = A[:, keep]

    values = np.full(len(labels), np.nan)
    resid_vec = y
    imag_max = 0.0
    spread = 0.0
    if live:
        norms = np.linalg.norm(Ak, axis=0)
        An = Ak / norms
        _, sv, vh = np.linalg.svd(An, full_matrices=False)
        if sv[-1] < CONDITION_LIMIT * sv[0]:
            null = np.abs(vh[-1])
            involved = [lbl for lbl, w in zip(live, null) if w > 1e-3]
            raise ConditioningError(
                f"{spec.id} {params}: structures {involved} are linearly dependent at the sampled pairs", involved)
        coef = _solve(y, An) / norms
        imag_max = float(np.max(np.abs(coef.imag)))
        values[keep] = coef.real
        resid_vec = y - Ak @ coef.real

        if len(pairs) >= 2:
            half_n = len(pairs) // 2
            per_pair = y.size // len(pairs)
            fits = []
            for lo, hi in ((0, half_n), (half_n, len(pairs))):
                sl = slice(lo * per_pair, hi * per_pair)
                fits.append(_solve(y[sl], An[sl]).real / norms)
            spread = float(np.max(np.abs(fits[0] - fits[1])))

    residual = float(np.max(np.abs(resid_vec))) if resid_vec.size else 0.0
    return ExtractedCoefficients(
        theorem_id=spec.id,
        params=dict(params),
        coefficients=tuple((lbl, float(v)) for lbl, v in zip(labels, values)),
        residual=residual,
        spread=spread,
        imag_max=imag_max,
        undetermined=undetermined,
    )

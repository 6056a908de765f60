"""Zero forcing polynomials built from forcing profiles."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .forcing import Rule
from .invariants import ForcingProfile


@dataclass(frozen=True)
class ZfPolynomial:
    rule: Rule
    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            mono = "x" if i == 1 else f"x^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms) or "0"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def poly_from_profile(p: ForcingProfile) -> ZfPolynomial:
    return ZfPolynomial(p.rule, tuple(p.z_counts))


def span_from_profile(p: ForcingProfile | ZfPolynomial) -> int:
    coeffs = p.z_counts if isinstance(p, ForcingProfile) else p.coeffs
    n = len(coeffs) - 1
    return sum(1 for i, c in enumerate(coeffs) if 0 < c < comb(n, i))


def is_binomial_complete(p: ForcingProfile | ZfPolynomial) -> bool:
    """True iff the skew polynomial is ``(x + 1)^n``."""
    if p.rule is not Rule.SKEW:
        raise ValueError("binomial completeness is a skew-rule property")
    coeffs = p.z_counts if isinstance(p, ForcingProfile) else p.coeffs
    n = len(coeffs) - 1
    return all(c == comb(n, i) for i, c in enumerate(coeffs))


def evaluate(p: ZfPolynomial, x: int | Fraction) -> int | Fraction:
    acc: int | Fraction = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc

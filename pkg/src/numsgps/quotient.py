"""Quotients of numerical semigroups by a positive integer.

S/d = {x >= 0 : d*x in S} is again a numerical semigroup; its Frobenius
number is at most floor(F(S)/d), so the whole quotient is determined by
membership checks up to that bound.  The module also carries the
Frobenius shortcut for d-symmetric semigroups and the per-residue gap
census that underlies the root-of-unity genus formula.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    GapClassCounts,
    NumericalSemigroup,
    PreconditionError,
    contains,
    from_gaps,
    from_generators,
    is_d_symmetric,
)


@dataclass(frozen=True)
class QuotientReport:
    """Brute-force quotient invariants next to any applicable closed forms."""

    base: NumericalSemigroup
    divisor: int
    quotient: NumericalSemigroup
    frobenius_bruteforce: int
    genus_bruteforce: int
    formula_results: dict[str, object] = field(default_factory=dict)


def quotient(S: NumericalSemigroup, d: int) -> NumericalSemigroup:
    """The quotient S/d = {x : d*x in S} in canonical form.

    Every x > floor(F(S)/d) is a member, so the complement is read off the
    bounded prefix and the canonical rebuild in :func:`from_gaps` doubles
    as a consistency check.
    """
    if not isinstance(d, int) or d < 1:
        raise PreconditionError(f"divisor must be a positive integer, got {d}")
    if d == 1:
        return S
    if S.frobenius < 0 or contains(S, d):
        return from_generators([1])  # 1 in S/d, so the quotient is all of N
    gaps = [x for x in range(1, S.frobenius // d + 1) if not contains(S, d * x)]
    return from_gaps(gaps)


def frobenius_quotient_dsymmetric(S: NumericalSemigroup, d: int) -> int:
    """F(S/d) = (F(S) - x)/d for d-symmetric S, with x the least member of
    S congruent to F(S) modulo d.

    x = 0 is allowed and occurs exactly when d divides F(S); restricting
    x to positive members would overshoot there, since F(S)/d is itself a
    gap of the quotient.  Requires d >= 2 and a proper d-symmetric
    semigroup; the divisibility of F(S) - x by d holds by choice of x.
    A return value of -1 means the quotient is all of the nonnegative
    integers.
    """
    if not isinstance(d, int) or d < 2:
        raise PreconditionError(f"divisor must be an integer >= 2, got {d}")
    F = S.frobenius
    if F < 0:
        raise PreconditionError(
            "the semigroup of all nonnegative integers has no proper quotient structure here"
        )
    for n in S.gaps:
        if n % d == 0 and not contains(S, F - n):
            raise PreconditionError(
                f"{S} is not {d}-symmetric: gap {n} has F - {n} = {F - n} outside the semigroup"
            )
    x = F % d
    while not contains(S, x):
        x += d
    return (F - x) // d


def gap_class_counts(S: NumericalSemigroup, d: int) -> GapClassCounts:
    """Census of the gaps of S by residue class modulo d.

    The counts sum to g(S), and the class-0 count is exactly g(S/d): gaps
    of the quotient correspond one-to-one to gaps of S divisible by d.
    """
    if not isinstance(d, int) or d < 1:
        raise PreconditionError(f"d must be a positive integer, got {d}")
    counts = [0] * d
    for gap in S.gaps:
        counts[gap % d] += 1
    return GapClassCounts(d, tuple(counts))


def quotient_report(S: NumericalSemigroup, d: int) -> QuotientReport:
    """Quotient invariants with a slot for closed-form comparisons.

    The formula_results mapping is left empty here; callers that know
    which identities apply (the CLI does) fill it in.
    """
    Q = quotient(S, d)
    return QuotientReport(
        base=S,
        divisor=d,
        quotient=Q,
        frobenius_bruteforce=Q.frobenius,
        genus_bruteforce=Q.genus,
    )


__all__ = [
    "QuotientReport",
    "quotient",
    "frobenius_quotient_dsymmetric",
    "gap_class_counts",
    "quotient_report",
    "is_d_symmetric",
]

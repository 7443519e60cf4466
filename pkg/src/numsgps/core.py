"""Exact arithmetic of numerical semigroups.

A numerical semigroup is a cofinite subset of the nonnegative integers
that contains 0 and is closed under addition.  Everything here is driven
by the per-residue table of least elements modulo some member n (the
Apery set Ap(S, n)): membership, the Frobenius number via
max(Ap(S, n)) - n, and the genus via the mean-value identity

    g(S) = (1/n) * sum(Ap(S, n)) - (n - 1)/2.

The table itself is computed by a round-robin shortest-path relaxation
over the residue classes, one min-anchored pass around each addition
cycle per generator, so no membership sieve is ever needed for the
canonical construction.  Brute-force sieves appear only in the test
suite, as independent oracles.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

# Desk-scale guards: refuse instances whose residue table or gap list
# would thrash memory, instead of dying slowly.
MAX_APERY_MODULUS = 10_000_000
MAX_FROBENIUS = 5_000_000


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class NotNumericalSemigroupError(PreconditionError):
    """The input does not define a numerical semigroup."""


class TheoremViolationError(RuntimeError):
    """An identity that must hold exactly failed; indicates a bug."""


class PrecisionLossError(ArithmeticError):
    """A floating-point evaluation drifted too far from an exact value."""


class ResourceLimitError(RuntimeError):
    """Instance exceeds the desk-scale size guards."""


@dataclass(frozen=True)
class AperySet:
    """Per-residue minima: ``elements[r]`` is the least member congruent to r mod n."""

    modulus: int
    elements: tuple[int, ...]


@dataclass(frozen=True)
class GapClassCounts:
    """Number of gaps in each residue class modulo d; ``counts[r]`` covers class r."""

    d: int
    counts: tuple[int, ...]


@dataclass(frozen=True)
class NumericalSemigroup:
    """Canonical form of a numerical semigroup.

    Instances are immutable and fully determined by the minimal generating
    set; use :func:`from_generators` or :func:`from_gaps` to construct one.
    ``frobenius`` is -1 when the semigroup is all of the nonnegative
    integers (empty complement).
    """

    minimal_generators: tuple[int, ...]
    multiplicity: int
    frobenius: int
    gaps: tuple[int, ...]

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    @property
    def conductor(self) -> int:
        return self.frobenius + 1

    @cached_property
    def _gap_set(self) -> frozenset[int]:
        return frozenset(self.gaps)

    @cached_property
    def _apery_at_multiplicity(self) -> tuple[int, ...]:
        return _round_robin(self.minimal_generators, self.multiplicity)

    @cached_property
    def _polynomial_coeffs(self) -> tuple[int, ...]:
        if self.frobenius < 0:
            return (1,)
        coeffs = [0] * (self.frobenius + 2)
        for gap in self.gaps:
            coeffs[gap] -= 1
            coeffs[gap + 1] += 1
        coeffs[0] += 1
        return tuple(coeffs)

    def contains(self, x: int) -> bool:
        return contains(self, x)

    def apery_set(self, n: int) -> AperySet:
        return apery_set(self, n)

    def is_d_symmetric(self, d: int) -> bool:
        return is_d_symmetric(self, d)

    def __str__(self) -> str:
        return "<" + ", ".join(str(g) for g in self.minimal_generators) + ">"

    def __repr__(self) -> str:
        return (
            f"NumericalSemigroup({list(self.minimal_generators)}, "
            f"F={self.frobenius}, g={self.genus})"
        )


def _round_robin(generators: Sequence[int], n: int) -> tuple[int, ...]:
    """Least element of <generators> in each residue class mod n.

    Generators are processed one at a time; for each, every addition cycle
    r -> r + g (mod n) is relaxed once starting from its current minimum,
    which is exact because earlier classes only improve by whole cycles.
    """
    infinity = n * max(generators) + 1  # strictly above any reachable value
    dist = [infinity] * n
    dist[0] = 0
    for g in sorted(generators):
        step = g % n
        if step == 0:
            continue
        cycle_len = n // math.gcd(step, n)
        for start in range(math.gcd(step, n)):
            best = start
            r = start
            for _ in range(cycle_len - 1):
                r = (r + step) % n
                if dist[r] < dist[best]:
                    best = r
            r = best
            for _ in range(cycle_len - 1):
                nxt = (r + step) % n
                if dist[r] + g < dist[nxt]:
                    dist[nxt] = dist[r] + g
                r = nxt
    if max(dist) >= infinity:
        raise NotNumericalSemigroupError(
            "residue class unreachable; generators do not have gcd 1 with the modulus"
        )
    return tuple(dist)


def _apery_decomposable(apery: Sequence[int], r: int) -> bool:
    # apery[r] = x + y with x, y nonzero members forces both parts onto the
    # Apery set, so a length-n scan over split residues decides it.
    n = len(apery)
    s = apery[r]
    for r1 in range(1, n):
        r2 = (r - r1) % n
        if r2 and apery[r1] + apery[r2] <= s:
            return True
    return False


def from_generators(generators: Iterable[int]) -> NumericalSemigroup:
    """Canonical semigroup generated by the given positive integers.

    Duplicates are dropped; the gcd of the set must be 1, otherwise the
    complement would be infinite and a :class:`NotNumericalSemigroupError`
    is raised.
    """
    values = sorted(set(generators))
    if not values:
        raise PreconditionError("at least one generator is required")
    if any(not isinstance(g, int) or g < 1 for g in values):
        raise PreconditionError(f"generators must be positive integers, got {values}")
    if math.gcd(*values) != 1:
        raise NotNumericalSemigroupError(
            f"gcd{tuple(values)} > 1: the complement is infinite, "
            "so this is not a numerical semigroup"
        )
    if values[0] == 1:
        return NumericalSemigroup((1,), 1, -1, ())
    mult = values[0]
    if mult > MAX_APERY_MODULUS:
        raise ResourceLimitError(f"multiplicity {mult} exceeds {MAX_APERY_MODULUS}")
    apery = _round_robin(values, mult)
    frobenius = max(apery) - mult
    if frobenius > MAX_FROBENIUS:
        raise ResourceLimitError(f"Frobenius number {frobenius} exceeds {MAX_FROBENIUS}")
    gaps = sorted(
        x for r in range(1, mult) for x in range(r, apery[r], mult)
    )
    minimal = []
    for g in values:
        if g == mult:
            minimal.append(g)
            continue
        r = g % mult
        if r == 0 or apery[r] != g:
            continue  # g - mult is a member, so g decomposes
        if not _apery_decomposable(apery, r):
            minimal.append(g)
    return NumericalSemigroup(tuple(minimal), mult, frobenius, tuple(gaps))


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    """Canonical semigroup whose complement is exactly the given finite set.

    The minimal generators are extracted from the complement and the result
    is rebuilt from them; if the rebuilt gap set disagrees, the complement
    was not closed under addition and the input is rejected.
    """
    gap_list = sorted(set(gaps))
    if any(not isinstance(x, int) or x < 1 for x in gap_list):
        raise PreconditionError("gaps must be positive integers")
    if not gap_list:
        return from_generators([1])
    frobenius = gap_list[-1]
    if frobenius > MAX_FROBENIUS:
        raise ResourceLimitError(f"largest gap {frobenius} exceeds {MAX_FROBENIUS}")
    gap_set = set(gap_list)
    mult = next(x for x in itertools.count(1) if x not in gap_set)
    apery: list[int | None] = [None] * mult
    apery[0] = 0
    filled = 1
    for x in range(mult, frobenius + mult + 2):
        r = x % mult
        if x not in gap_set and apery[r] is None:
            apery[r] = x
            filled += 1
            if filled == mult:
                break
    table = tuple(apery)  # type: ignore[arg-type]
    minimal = [mult] + [
        table[r] for r in range(1, mult) if not _apery_decomposable(table, r)
    ]
    result = from_generators(minimal)
    if result.gaps != tuple(gap_list):
        raise NotNumericalSemigroupError(
            "complement of the gap set is not closed under addition"
        )
    return result


def contains(S: NumericalSemigroup, x: int) -> bool:
    """Membership test: O(1) against the Apery set at the multiplicity."""
    if x < 0:
        return False
    return x >= S._apery_at_multiplicity[x % S.multiplicity]


def apery_set(S: NumericalSemigroup, n: int) -> AperySet:
    """Ap(S, n) = {s in S : s - n not in S}, as per-residue least members."""
    if not isinstance(n, int) or n < 1:
        raise PreconditionError(f"Apery modulus must be a positive integer, got {n}")
    if not contains(S, n):
        raise PreconditionError(f"Apery modulus {n} is not a member of {S}")
    if n > MAX_APERY_MODULUS:
        raise ResourceLimitError(f"Apery modulus {n} exceeds {MAX_APERY_MODULUS}")
    if n == S.multiplicity:
        return AperySet(n, S._apery_at_multiplicity)
    return AperySet(n, _round_robin(S.minimal_generators, n))


def invariants_from_apery(ap: AperySet) -> tuple[int, int]:
    """(Frobenius number, genus) from one Apery set.

    F(S) = max(Ap) - n and g(S) = sum(Ap)/n - (n-1)/2; the genus is computed
    in scaled integer arithmetic and must come out integral.
    """
    n = ap.modulus
    frobenius = max(ap.elements) - n
    doubled = 2 * sum(ap.elements) - n * (n - 1)
    if doubled % (2 * n):
        raise TheoremViolationError(
            f"genus from Apery set mod {n} is not an integer; the table is corrupted"
        )
    return frobenius, doubled // (2 * n)


def is_d_symmetric(S: NumericalSemigroup, d: int) -> bool:
    """True when every gap divisible by d reflects into the semigroup.

    S is d-symmetric when F(S) - n is a member for every gap n that is a
    positive multiple of d.  d = 1 is ordinary symmetry (2g = F + 1).
    """
    if not isinstance(d, int) or d < 1:
        raise PreconditionError(f"d must be a positive integer, got {d}")
    F = S.frobenius
    return all(contains(S, F - n) for n in S.gaps if n % d == 0)


def semigroup_polynomial_coeffs(S: NumericalSemigroup) -> tuple[int, ...]:
    """Coefficients of P_S(x) = 1 - (1 - x) * sum over gaps of x^s.

    P_S is (1 - x) times the member generating function sum_{s in S} x^s,
    cleared of its pole at x = 1; it has degree F(S) + 1 and P_S(1) = 1.
    """
    return S._polynomial_coeffs

"""Quotient genus through roots of unity, and two-generator closed forms.

Writing H_S(x) = sum_{s in S} x^s and P_S(x) = (1 - x) H_S(x), the genus
of S/d is recovered from the values of H_S at the nontrivial d-th roots
of unity zeta_d^i:

    g(S/d) = (1/d) * [ g(S) + (d - 1)/2 - sum_{i=1}^{d-1} H_S(zeta_d^i) ]

The (d - 1)/2 term is the elementary identity
sum_{n=1}^{d-1} 1/(1 - zeta_d^n) = (d - 1)/2, conjugate roots pairing to 1.
For S = <a, b> the genus of the quotient also has a purely arithmetic
closed form in floor sums of a^{-1} b j / d, and as a function of a on a
fixed residue class it is a quadratic with leading coefficient 1/(2d).
All rational arithmetic is exact (fractions.Fraction); floating point
enters only through the root evaluations, with explicit residual checks.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    NumericalSemigroup,
    PrecisionLossError,
    PreconditionError,
    TheoremViolationError,
    semigroup_polynomial_coeffs,
)

DEFAULT_TOLERANCE = 1e-6
IDENTITY_TOLERANCE = 1e-9


@dataclass(frozen=True)
class RootEvaluation:
    """Value of H_S at the root of unity exp(2*pi*i*index/d)."""

    d: int
    index: int
    value: complex


@dataclass(frozen=True)
class QuasipolynomialFit:
    """Exact quadratic fits of a -> g(<a, a+k>/d) on residue classes mod d.

    ``per_class`` maps a residue r to coefficients (c2, c1, c0) with
    g = c2*a^2 + c1*a + c0 on the class; ``cabd_constant`` maps the
    (a mod d, b mod d) class to the constant C with
    g(<a,b>/d) = (a-1)(b-1)/(2d) + C.
    """

    d: int
    k: int
    per_class: dict[int, tuple[Fraction, Fraction, Fraction]]
    cabd_constant: dict[tuple[int, int], Fraction]


def _require_positive(name: str, value: int) -> None:
    if not isinstance(value, int) or value < 1:
        raise PreconditionError(f"{name} must be a positive integer, got {value}")


def hilbert_at_root(S: NumericalSemigroup, d: int, i: int) -> complex:
    """H_S(zeta_d^i) evaluated as P_S(zeta)/(1 - zeta).

    The member series itself diverges on the unit circle; the pole-free
    polynomial P_S carries the value.  i = 0 (mod d) is the pole at 1 and
    is rejected.  P_S is evaluated by Horner's rule from exact integer
    coefficients.
    """
    if not isinstance(d, int) or d < 2:
        raise PreconditionError(f"root order d must be an integer >= 2, got {d}")
    if i % d == 0:
        raise PreconditionError("H_S has a pole at x = 1 (index divisible by d)")
    zeta = cmath.exp(2j * cmath.pi * i / d)
    p = 0j
    for c in reversed(semigroup_polynomial_coeffs(S)):
        p = p * zeta + c
    return p / (1 - zeta)


def root_evaluations(S: NumericalSemigroup, d: int) -> list[RootEvaluation]:
    """H_S at every nontrivial d-th root of unity, indices 1 .. d-1."""
    return [RootEvaluation(d, i, hilbert_at_root(S, d, i)) for i in range(1, d)]


def root_of_unity_identity_check(d: int) -> float:
    """Deviation of sum 1/(1 - zeta_d^n), n = 1..d-1, from (d-1)/2.

    Returns max(|real - (d-1)/2|, |imag|); exact pairing of conjugate
    roots makes the true value (d-1)/2, so this measures float error only.
    """
    total = _root_identity_sum(d)
    return max(abs(total.real - (d - 1) / 2), abs(total.imag))


def _root_identity_sum(d: int) -> complex:
    if not isinstance(d, int) or d < 2:
        raise PreconditionError(f"d must be an integer >= 2, got {d}")
    return sum(
        1 / (1 - cmath.exp(2j * cmath.pi * n / d)) for n in range(1, d)
    )


def genus_quotient_via_roots(
    S: NumericalSemigroup, d: int, tolerance: float = DEFAULT_TOLERANCE
) -> int:
    """g(S/d) from the root-of-unity formula, rounded to the nearest integer.

    Raises :class:`PrecisionLossError` when the pre-rounding value sits
    farther than ``tolerance`` from every integer.
    """
    value, residual = _genus_via_roots_residual(S, d)
    if residual > tolerance:
        raise PrecisionLossError(
            f"genus formula for {S}/{d} is {residual:.3e} away from an integer "
            f"(tolerance {tolerance:.1e})"
        )
    return value


def _genus_via_roots_residual(S: NumericalSemigroup, d: int) -> tuple[int, float]:
    """(rounded genus, distance of the complex value from that integer)."""
    if not isinstance(d, int) or d < 1:
        raise PreconditionError(f"d must be a positive integer, got {d}")
    if d == 1:
        return S.genus, 0.0
    total = sum(hilbert_at_root(S, d, i) for i in range(1, d))
    value = (S.genus + (d - 1) / 2 - total) / d
    rounded = round(value.real)
    return rounded, abs(value - rounded)


def sylvester_invariants(a: int, b: int) -> tuple[int, int]:
    """(F, g) of <a, b> for coprime a, b: F = ab - a - b, g = (a-1)(b-1)/2."""
    _require_positive("a", a)
    _require_positive("b", b)
    if math.gcd(a, b) != 1:
        raise PreconditionError(f"a and b must be coprime, got gcd({a}, {b}) = {math.gcd(a, b)}")
    return a * b - a - b, (a - 1) * (b - 1) // 2


def _require_pairwise_coprime(a: int, b: int, d: int) -> None:
    for x, y, names in ((a, b, "a, b"), (a, d, "a, d"), (b, d, "b, d")):
        if math.gcd(x, y) != 1:
            raise PreconditionError(
                f"{names} must be coprime, got gcd({x}, {y}) = {math.gcd(x, y)}"
            )


def genus_quotient_ed2_closed_form(a: int, b: int, d: int) -> int:
    """g(<a, b>/d) for pairwise coprime a, b, d with d >= 2, in pure integer
    arithmetic.

    With a* the inverse of a modulo d in [1, d-1] and q = floor((a-1)/d):

        g = (a-1)(b + d - a*ab)/(2d)
            + q(a*bq + a*b - 2)/2
            + sum over 1 <= j <= a-1, d not dividing j, of floor(a*bj/d)

    Everything is scaled by 2d internally and divided once at the end; the
    division must be exact.
    """
    _require_positive("a", a)
    _require_positive("b", b)
    if not isinstance(d, int) or d < 2:
        raise PreconditionError(f"d must be an integer >= 2, got {d}")
    _require_pairwise_coprime(a, b, d)
    return _ed2_closed_form(a, b, d)


def _ed2_closed_form(a: int, b: int, d: int) -> int:
    astar = pow(a, -1, d)
    q = (a - 1) // d
    tail = sum((astar * b * j) // d for j in range(1, a) if j % d)
    scaled = (
        (a - 1) * (b + d - astar * a * b)
        + d * q * (astar * b * q + astar * b - 2)
        + 2 * d * tail
    )
    if scaled % (2 * d):
        raise TheoremViolationError(
            f"closed form for g(<{a},{b}>/{d}) did not produce an integer"
        )
    genus = scaled // (2 * d)
    if genus < 0:
        raise TheoremViolationError(
            f"closed form for g(<{a},{b}>/{d}) produced {genus} < 0"
        )
    return genus


def _pair_quotient_genus(a: int, b: int, d: int) -> int:
    """g(<a, b>/d) by counting gaps of <a, b> divisible by d, per residue
    class modulo a; O(a) time and exact.

    Ap(<a,b>, a) = {0, b, 2b, ..., (a-1)b}, so class r = bi mod a holds
    the gaps bi - ja for 1 <= j <= floor(bi/a); those divisible by d
    solve ja = bi (mod d), an arithmetic progression in j.
    """
    if math.gcd(a, b) != 1:
        raise PreconditionError(f"a and b must be coprime, got gcd = {math.gcd(a, b)}")
    if a == 1 or b == 1:
        return 0
    total = 0
    e = math.gcd(a, d)
    d_red = d // e
    a_inv = pow(a // e, -1, d_red) if d_red > 1 else 0
    for i in range(1, a):
        w = b * i
        count = w // a
        if count == 0 or w % e:
            continue
        j0 = ((w // e) * a_inv) % d_red if d_red > 1 else 0
        jmin = j0 or d_red
        if jmin <= count:
            total += (count - jmin) // d_red + 1
    return total


def extract_cabd_constant(
    a_class: int, b_class: int, d: int, samples: list[tuple[int, int]]
) -> Fraction:
    """The constant C with g(<a,b>/d) = (a-1)(b-1)/(2d) + C on the residue
    class (a_class, b_class) modulo d.

    Each sample pair must be pairwise coprime with d and lie on the class;
    the constant is computed per sample from brute-force genus counts and
    must agree across all of them, else a :class:`TheoremViolationError`
    names two disagreeing witnesses.
    """
    _require_positive("d", d)
    if len(samples) < 2:
        raise PreconditionError(f"need at least 2 samples, got {len(samples)}")
    witnessed: list[tuple[tuple[int, int], Fraction]] = []
    for a, b in samples:
        _require_positive("a", a)
        _require_positive("b", b)
        if a % d != a_class % d or b % d != b_class % d:
            raise PreconditionError(
                f"sample ({a}, {b}) is not on class ({a_class}, {b_class}) mod {d}"
            )
        if d > 1:
            _require_pairwise_coprime(a, b, d)
        elif math.gcd(a, b) != 1:
            raise PreconditionError(f"a and b must be coprime in sample ({a}, {b})")
        genus = _pair_quotient_genus(a, b, d)
        witnessed.append(((a, b), Fraction(genus) - Fraction((a - 1) * (b - 1), 2 * d)))
    first_pair, constant = witnessed[0]
    for pair, value in witnessed[1:]:
        if value != constant:
            raise TheoremViolationError(
                f"constant differs on class ({a_class}, {b_class}) mod {d}: "
                f"{first_pair} gives {constant} but {pair} gives {value}"
            )
    return constant


def _lagrange3(
    xs: tuple[int, int, int], ys: tuple[int, int, int]
) -> tuple[Fraction, Fraction, Fraction]:
    """Exact (c2, c1, c0) of the quadratic through three points."""
    x0, x1, x2 = xs
    y0, y1, y2 = (Fraction(y) for y in ys)
    f01 = (y1 - y0) / (x1 - x0)
    f12 = (y2 - y1) / (x2 - x1)
    c2 = (f12 - f01) / (x2 - x0)
    c1 = f01 - c2 * (x0 + x1)
    c0 = y0 - f01 * x0 + c2 * x0 * x1
    return c2, c1, c0


def quasipoly_admissible_classes(k: int, d: int) -> list[int]:
    """Residues r mod d whose class contains infinitely many a with
    gcd(a, k) = 1, so that <a, a+k> is a numerical semigroup for
    arbitrarily large a in the class.

    A class fails only when some prime of k divides both d and r, which
    forces every member to share that prime with k.
    """
    return [r for r in range(d) if math.gcd(k, math.gcd(r, d)) == 1]


def fit_quasipolynomial(
    k: int, d: int, a_range: tuple[int, int]
) -> QuasipolynomialFit:
    """Fit a -> g(<a, a+k>/d) per residue class of a mod d and verify it.

    On each admissible class the first three brute-force samples determine
    a quadratic by exact rational interpolation; its leading coefficient
    must be 1/(2d) and it must reproduce every remaining sample in the
    range exactly, else a :class:`TheoremViolationError` is raised.  At
    least four admissible samples per fitted class are required.

    The genus-minus-Sylvester constant is recorded only for classes whose
    residues are coprime to d; elsewhere the difference grows linearly in
    a and no single constant exists.
    """
    _require_positive("k", k)
    _require_positive("d", d)
    a_min, a_max = a_range
    if a_min < 1 or a_max < a_min:
        raise PreconditionError(f"empty or invalid range {a_range}")
    per_class: dict[int, tuple[Fraction, Fraction, Fraction]] = {}
    constants: dict[tuple[int, int], Fraction] = {}
    for r in quasipoly_admissible_classes(k, d):
        samples = [
            a
            for a in range(a_min, a_max + 1)
            if a % d == r and math.gcd(a, k) == 1
        ]
        if len(samples) < 4:
            raise PreconditionError(
                f"class {r} (mod {d}) has {len(samples)} admissible samples in "
                f"[{a_min}, {a_max}]; at least 4 are needed (3 to fit, 1 to verify)"
            )
        values = {a: _pair_quotient_genus(a, a + k, d) for a in samples}
        pts = tuple(samples[:3])
        c2, c1, c0 = _lagrange3(pts, tuple(values[a] for a in pts))
        if c2 != Fraction(1, 2 * d):
            raise TheoremViolationError(
                f"leading coefficient on class {r} (mod {d}) is {c2}, expected 1/{2 * d}"
            )
        for a in samples[3:]:
            predicted = c2 * a * a + c1 * a + c0
            if predicted != values[a]:
                raise TheoremViolationError(
                    f"fit on class {r} (mod {d}) predicts {predicted} at a = {a}, "
                    f"brute force gives {values[a]}"
                )
        per_class[r] = (c2, c1, c0)
        if math.gcd(r, d) == 1 and math.gcd((r + k) % d, d) == 1:
            # On fully coprime classes the genus differs from the
            # Sylvester term (a-1)(b-1)/(2d) by a constant of the class
            # alone, so one sample pins it down.
            a0 = pts[0]
            constants[(r, (r + k) % d)] = Fraction(values[a0]) - Fraction(
                (a0 - 1) * (a0 + k - 1), 2 * d
            )
    if not per_class:
        raise PreconditionError(f"no admissible residue class for k = {k}, d = {d}")
    return QuasipolynomialFit(d=d, k=k, per_class=per_class, cabd_constant=constants)

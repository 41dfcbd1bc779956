"""Monic polynomials given by their zeros.

Everything downstream works on two small value types: a RootMultiset
(the ordered multiset of zeros a_1..a_n) and the MonicPolynomial it
generates.  Arithmetic is double-precision complex throughout; all
types are immutable and every operation is a pure function, so the
whole module is safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

__all__ = [
    "DEFAULT_TOL",
    "MonicPolynomial",
    "RootDomainError",
    "RootMultiset",
    "Tolerance",
    "derivative",
    "derivative_at_order",
    "evaluate",
    "evaluation_scale",
    "from_roots",
    "monic_normalize",
    "permutation_sum_derivative",
    "taylor_shift",
]


class RootDomainError(ValueError):
    """A root violates the domain the requested operation needs."""

    def __init__(self, index: int, root: complex, requirement: str) -> None:
        super().__init__(f"root #{index} = {root!r} is not {requirement}")
        self.index = index
        self.root = root
        self.requirement = requirement


@dataclass(frozen=True)
class Tolerance:
    """Combined float comparison: |u - v| <= abs + rel * max(|u|, |v|)."""

    abs: float = 1e-10
    rel: float = 1e-9

    def gap(self, u: complex, v: complex) -> float:
        """Largest |u - v| still considered equal for this pair."""
        return self.abs + self.rel * max(abs(u), abs(v))

    def close(self, u: complex, v: complex) -> bool:
        return abs(u - v) <= self.gap(u, v)


DEFAULT_TOL = Tolerance()

RootsLike = Union["RootMultiset", Iterable[complex]]


@dataclass(frozen=True)
class RootMultiset:
    """Ordered multiset of zeros; duplicates allowed, order preserved."""

    roots: tuple[complex, ...]

    def __post_init__(self) -> None:
        raw = self.roots.roots if isinstance(self.roots, RootMultiset) else self.roots
        coerced = tuple(complex(r) for r in raw)
        if not coerced:
            raise ValueError("a root multiset needs at least one root")
        object.__setattr__(self, "roots", coerced)

    @property
    def n(self) -> int:
        return len(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def moduli(self) -> tuple[float, ...]:
        return tuple(abs(r) for r in self.roots)

    def is_real(self) -> bool:
        return all(r.imag == 0.0 for r in self.roots)

    def is_positive_real(self) -> bool:
        return all(r.imag == 0.0 and r.real > 0.0 for r in self.roots)

    def reals(self) -> tuple[float, ...]:
        """Real values of the roots; rejects any root off the real axis."""
        for i, r in enumerate(self.roots):
            if r.imag != 0.0:
                raise RootDomainError(i, r, "real")
        return tuple(r.real for r in self.roots)

    def positive_reals(self) -> tuple[float, ...]:
        """The positive-real view; rejects any root off the open positive axis."""
        for i, r in enumerate(self.roots):
            if r.imag != 0.0 or r.real <= 0.0:
                raise RootDomainError(i, r, "a positive real")
        return tuple(r.real for r in self.roots)

    def min_modulus_index(self) -> int:
        """Index of the smallest-modulus root (ties: smallest index)."""
        return min(range(len(self.roots)), key=lambda i: (abs(self.roots[i]), i))


@dataclass(frozen=True)
class MonicPolynomial:
    """Coefficients c_0..c_n in ascending order with c_n exactly 1.

    Optionally remembers the zeros it was built from; the critical-point
    solver uses them to pick the robust all-real code path.
    """

    coeffs: tuple[complex, ...]
    roots: RootMultiset | None = None

    def __post_init__(self) -> None:
        coerced = tuple(complex(c) for c in self.coeffs)
        if len(coerced) < 2:
            raise ValueError("degree must be at least 1")
        if coerced[-1] != 1:
            raise ValueError(f"leading coefficient must be exactly 1, got {coerced[-1]!r}")
        object.__setattr__(self, "coeffs", coerced)
        if self.roots is not None and not isinstance(self.roots, RootMultiset):
            object.__setattr__(self, "roots", RootMultiset(self.roots))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


def _coeffs_of(p) -> tuple[complex, ...]:
    if isinstance(p, MonicPolynomial):
        return p.coeffs
    return tuple(complex(c) for c in p)


def _horner(coeffs: Sequence[complex], z: complex) -> complex:
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
    return acc


def _derive(coeffs: Sequence[complex]) -> tuple[complex, ...]:
    return tuple(k * coeffs[k] for k in range(1, len(coeffs)))


def from_roots(roots: RootsLike) -> MonicPolynomial:
    """Expand prod(x - a_i), multiplying the factors in the given order."""
    rs = RootMultiset(roots)
    coeffs = [1 + 0j]
    for a in rs.roots:
        nxt = [-a * coeffs[0]]
        for k in range(1, len(coeffs)):
            nxt.append(coeffs[k - 1] - a * coeffs[k])
        nxt.append(coeffs[-1])
        coeffs = nxt
    return MonicPolynomial(tuple(coeffs), roots=rs)


def evaluate(p: MonicPolynomial, z: complex) -> complex:
    """P(z) by the Horner scheme."""
    return _horner(_coeffs_of(p), complex(z))


def evaluation_scale(p, z: complex) -> float:
    """sum |c_k| * max(1, |z|)^k.

    The natural magnitude against which an evaluation residual at z
    should be judged; a computed value within roundoff of zero has
    |residual| of order machine epsilon times this scale.
    """
    base = max(1.0, abs(complex(z)))
    scale = 0.0
    power = 1.0
    for c in _coeffs_of(p):
        scale += abs(c) * power
        power *= base
    return scale


def derivative(p) -> tuple[complex, ...]:
    """Coefficient vector of P': one degree lower, leading coefficient n.

    The result is not monic; callers that need a monic polynomial must
    normalize (see monic_normalize).
    """
    cs = _coeffs_of(p)
    if len(cs) < 2:
        raise ValueError("degree must be at least 1")
    return _derive(cs)


def derivative_at_order(p, s: int, z: complex) -> complex:
    """Value of the s-th derivative at z, by s-fold differentiation then Horner.

    s = 0 evaluates P itself; any s beyond the degree returns exact 0.
    """
    if s < 0:
        raise ValueError("derivative order must be nonnegative")
    cs = _coeffs_of(p)
    if s >= len(cs):
        return 0j
    for _ in range(s):
        cs = _derive(cs)
    return _horner(cs, complex(z))


def taylor_shift(p, c: complex) -> tuple[complex, ...]:
    """Coefficients t_0..t_n with P(x) = sum t_k (x - c)^k.

    Computed by repeated synthetic division by (x - c); the leading
    coefficient passes through each division untouched, so t_n is
    exactly 1 for monic input.
    """
    cs = list(_coeffs_of(p))
    center = complex(c)
    out = []
    while cs:
        acc = cs[-1]
        quotient = []
        for j in range(len(cs) - 2, -1, -1):
            quotient.append(acc)
            acc = cs[j] + center * acc
        out.append(acc)
        quotient.reverse()
        cs = quotient
    return tuple(out)


def permutation_sum_derivative(roots: RootsLike, z: complex) -> complex:
    """P'(z) assembled by the product rule: sum_i prod_{k != i} (z - a_k).

    At z equal to a root a_j every term with i != j carries the factor
    (z - a_j) = 0, so the sum collapses to prod_{i != j} (a_j - a_i).
    """
    rs = RootMultiset(roots)
    if rs.n < 2:
        raise ValueError("needs at least two roots")
    zz = complex(z)
    diffs = [zz - a for a in rs.roots]
    n = len(diffs)
    prefix = [1 + 0j] * (n + 1)
    for i, d in enumerate(diffs):
        prefix[i + 1] = prefix[i] * d
    suffix = [1 + 0j] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] * diffs[i]
    total = 0j
    for i in range(n):
        total += prefix[i] * suffix[i + 1]
    return total


def monic_normalize(coeffs: Sequence[complex], roots: RootsLike | None = None) -> MonicPolynomial:
    """Divide a coefficient vector by its leading coefficient."""
    cs = tuple(complex(c) for c in coeffs)
    if cs[-1] == 0:
        raise ValueError("leading coefficient is zero")
    lead = cs[-1]
    return MonicPolynomial(tuple(c / lead for c in cs[:-1]) + (1 + 0j,), roots=roots)

"""Exact univariate integer polynomials and real-root sign counting.

Coefficients are arbitrary-precision Python ints, stored ascending by
degree. Root counting never isolates roots numerically: zero roots are
read off the trailing coefficients, distinct-root counts come from Sturm
sign variations evaluated at exact rational points, and multiplicities
are recovered by peeling gcd(p, p') layers. No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Union

Scalar = Union[int, Fraction]

# Sentinels for evaluating Sturm chains at the ends of the real line.
NEG_INF = object()
POS_INF = object()


class IntPoly:
    """Integer-coefficient polynomial with ascending coefficients.

    The zero polynomial has an empty coefficient tuple and degree None.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient required, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, coeff: int, power: int) -> "IntPoly":
        return cls((0,) * power + (coeff,))

    # -- basic structure ----------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    def __pow__(self, exponent: int) -> "IntPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = IntPoly.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: int) -> "IntPoly":
        return IntPoly(tuple(c * a for a in self.coeffs))

    def __call__(self, point: Scalar) -> Scalar:
        """Evaluate by Horner's rule; exact for int or Fraction points."""
        acc: Scalar = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def shift_down(self, k: int) -> "IntPoly":
        """Divide by x^k (the k lowest coefficients must be zero)."""
        if any(self.coeffs[:k]):
            raise ValueError("polynomial not divisible by x^k")
        return IntPoly(self.coeffs[k:])

    # -- content and primitive part -------------------------------------

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = int_gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Divide out the content, keeping the sign of the polynomial."""
        g = self.content()
        if g <= 1:
            return self
        return IntPoly(tuple(c // g for c in self.coeffs))

    # -- presentation ----------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                term = xpow if mag == 1 else f"{mag}*{xpow}"
            parts.append(f"{sign} {term}" if parts else f"{sign}{term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)!r})"

    def to_json(self) -> list[str]:
        """Coefficients ascending by degree, as decimal strings."""
        return [str(c) for c in self.coeffs]


@dataclass(frozen=True)
class RootSignCount:
    """Counts of real roots by sign, with multiplicity, plus nonreal roots."""

    negative: int
    zero: int
    positive: int
    nonreal: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.negative, self.zero, self.positive, self.nonreal)


def expand_factors(factors: Iterable[tuple[IntPoly, int]]) -> IntPoly:
    """Exact product of (polynomial, multiplicity) pairs.

    Multiplicity 0 contributes a factor of 1.
    """
    out = IntPoly.one()
    for poly, mult in factors:
        if mult < 0:
            raise ValueError("negative multiplicity")
        if mult:
            out = out * poly**mult
    return out


# ---------------------------------------------------------------------------
# Exact division, gcd, Sturm chains
# ---------------------------------------------------------------------------


def exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Return a / b, requiring the division to be exact over the integers."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero:
        return IntPoly(())
    da, db = a.degree, b.degree
    if da < db:
        raise ValueError("division is not exact")
    rem = [Fraction(c) for c in a.coeffs]
    quot = [Fraction(0)] * (da - db + 1)
    lb = b.coeffs[-1]
    for k in range(da - db, -1, -1):
        q = rem[db + k] / lb
        quot[k] = q
        if q:
            for i, c in enumerate(b.coeffs):
                rem[k + i] -= q * c
    if any(rem):
        raise ValueError("division is not exact")
    if any(q.denominator != 1 for q in quot):
        raise ValueError("division is not exact over the integers")
    return IntPoly(tuple(int(q) for q in quot))


def _pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, all integer."""
    da, db = a.degree, b.degree
    lb = b.coeffs[-1]
    rem = list(a.coeffs)
    for k in range(da - db, -1, -1):
        c = rem[db + k]
        rem = [lb * r for r in rem]
        if c:
            for i, bc in enumerate(b.coeffs):
                rem[k + i] -= c * bc
    return IntPoly(rem[:db] if db > 0 else ())


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (content ignored).

    Uses the primitive polynomial remainder sequence, which keeps
    intermediate coefficients from exploding.
    """
    a = a.primitive()
    b = b.primitive()
    if a.is_zero:
        a, b = b, a
    while not b.is_zero:
        if b.degree == 0:
            a = IntPoly.one()
            break
        if a.degree < b.degree:
            a, b = b, a
            continue
        r = _pseudo_rem(a, b).primitive()
        a, b = b, r
    if a.is_zero:
        return a
    return a if a.leading > 0 else -a


def squarefree_part(p: IntPoly) -> IntPoly:
    """Product of the distinct irreducible factors, primitive, positive lead."""
    if p.is_zero:
        raise ValueError("zero polynomial")
    p = p.primitive()
    if p.degree == 0:
        return IntPoly.one()
    g = poly_gcd(p, p.derivative())
    q = exact_div(p, g) if g.degree and g.degree > 0 else p
    q = q.primitive()
    return q if q.leading > 0 else -q


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm sequence of p with primitive normalization at each step.

    Each element equals the canonical remainder-chain element up to a
    positive constant, so sign variation counts are preserved.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    chain = [p.primitive()]
    if p.degree == 0:
        return chain
    chain.append(p.derivative().primitive())
    while not chain[-1].is_zero and chain[-1].degree > 0:
        a, b = chain[-2], chain[-1]
        r = _pseudo_rem(a, b)
        if r.is_zero:
            break
        # _pseudo_rem scales by lc(b)^(delta+1); fold that sign back in so the
        # element stays a positive multiple of -rem(a, b).
        delta = a.degree - b.degree
        if b.leading < 0 and (delta + 1) % 2 == 1:
            r = -r
        chain.append((-r).primitive())
    return chain


def _sign_at(p: IntPoly, point) -> int:
    if p.is_zero:
        return 0
    if point is NEG_INF:
        s = 1 if p.leading > 0 else -1
        return s if p.degree % 2 == 0 else -s
    if point is POS_INF:
        return 1 if p.leading > 0 else -1
    v = p(point)
    return (v > 0) - (v < 0)


def _variations(chain: list[IntPoly], point) -> int:
    signs = [s for s in (_sign_at(p, point) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots_in(p: IntPoly, lo: Scalar, hi: Scalar) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi).

    Endpoints must not be roots of p.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    if not lo < hi:
        raise ValueError("empty interval: need lo < hi")
    if p(lo) == 0 or p(hi) == 0:
        raise ValueError("interval endpoint is a root; perturb the endpoint")
    chain = sturm_chain(p)
    return _variations(chain, lo) - _variations(chain, hi)


def root_sign_count(p: IntPoly) -> RootSignCount:
    """Exact count of negative/zero/positive real roots, with multiplicity.

    The zero multiplicity is the power of x dividing p. Distinct sign
    counts come from Sturm chains of successive squarefree layers
    gcd-peeled from p, so a root of multiplicity m is counted m times.
    """
    if p.is_zero:
        raise ValueError("zero polynomial")
    degree = p.degree
    nzero = 0
    while p.coeffs[nzero] == 0:
        nzero += 1
    q = p.shift_down(nzero).primitive()

    negative = positive = 0
    while q.degree > 0:
        g = poly_gcd(q, q.derivative())
        sf = exact_div(q, g) if g.degree > 0 else q
        chain = sturm_chain(sf)
        v_neg = _variations(chain, NEG_INF)
        v_zero = _variations(chain, 0)
        v_pos = _variations(chain, POS_INF)
        negative += v_neg - v_zero
        positive += v_zero - v_pos
        if g.degree == 0:
            break
        q = g
    return RootSignCount(
        negative=negative,
        zero=nzero,
        positive=positive,
        nonreal=degree - negative - nzero - positive,
    )

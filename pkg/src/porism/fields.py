"""Scalar backends: exact rationals, quadratic extensions Q(sqrt(d)), and floats.

Exact values are `fractions.Fraction` or `QuadExt`; floats exist only for the
primal chain walker and plotting. Mixing exact and float scalars in one
expression raises MixedBackend; rationals embed into any extension.

Every square root needed downstream (tangents from a point, fixed points of an
involution) introduces at most one quadratic extension at a time, and the
conjugate root stays inside it, so a single Q(sqrt(d)) per chain suffices.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import FieldInsufficient, MixedBackend

Scalar = Union[Fraction, "QuadExt", float]

#: Relative tolerance for float-backend equality tests.
FLOAT_TOL = 1e-9


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a rational, or None if q is not a rational square."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _signed_square(b: Fraction, d: Fraction) -> Fraction:
    # b*sqrt(d) is determined exactly by sign(b) * b^2 * d, used for eq/hash
    # across different d generating the same field.
    return b * abs(b) * d


class QuadExt:
    """Element a + b*sqrt(d) of a quadratic extension of Q.

    d is a non-square rational (possibly negative), b is nonzero; values with
    b = 0 demote to Fraction via the `quadext` factory. Instances are treated
    as immutable.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        a, b, d = Fraction(a), Fraction(b), Fraction(d)
        if b == 0:
            raise ValueError("rational value; use Fraction or the quadext() factory")
        if d == 0 or rational_sqrt(d) is not None:
            raise ValueError(f"d = {d} is a rational square; the extension is trivial")
        self.a = a
        self.b = b
        self.d = d

    # -- field structure ------------------------------------------------

    def _split(self, other) -> tuple[Fraction, Fraction] | None:
        """`other` as components over self.d, or None if not expressible."""
        if isinstance(other, QuadExt):
            if other.d == self.d:
                return other.a, other.b
            ratio = rational_sqrt(other.d / self.d)
            if ratio is None:
                return None
            return other.a, other.b * ratio
        if isinstance(other, int) or isinstance(other, Fraction):
            return Fraction(other), Fraction(0)
        return None

    def _refuse(self, other):
        if isinstance(other, float):
            raise MixedBackend("exact extension element mixed with float")
        if isinstance(other, QuadExt):
            raise MixedBackend(
                f"incompatible extensions Q(sqrt({self.d})) and Q(sqrt({other.d}))"
            )
        return NotImplemented

    def __add__(self, other):
        parts = self._split(other)
        if parts is None:
            return self._refuse(other)
        oa, ob = parts
        return quadext(self.a + oa, self.b + ob, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        parts = self._split(other)
        if parts is None:
            return self._refuse(other)
        oa, ob = parts
        return quadext(self.a - oa, self.b - ob, self.d)

    def __rsub__(self, other):
        parts = self._split(other)
        if parts is None:
            return self._refuse(other)
        oa, ob = parts
        return quadext(oa - self.a, ob - self.b, self.d)

    def __mul__(self, other):
        parts = self._split(other)
        if parts is None:
            return self._refuse(other)
        oa, ob = parts
        return quadext(
            self.a * oa + self.b * ob * self.d,
            self.a * ob + self.b * oa,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        # norm = a^2 - b^2 d is nonzero for every nonzero element (d non-square)
        n = self.norm()
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        parts = self._split(other)
        if parts is None:
            return self._refuse(other)
        oa, ob = parts
        if ob == 0:
            if oa == 0:
                raise ZeroDivisionError("division by zero")
            return quadext(self.a / oa, self.b / oa, self.d)
        return self * QuadExt(oa, ob, self.d).inverse()

    def __rtruediv__(self, other):
        parts = self._split(other)
        if parts is None:
            return self._refuse(other)
        oa, ob = parts
        inv = self.inverse()
        if ob == 0:
            return quadext(oa * inv.a, oa * inv.b, self.d)
        return QuadExt(oa, ob, self.d) * inv

    def __pow__(self, exp: int):
        if not isinstance(exp, int):
            return NotImplemented
        base: Scalar = self if exp >= 0 else self.inverse()
        result: Scalar = Fraction(1)
        for _ in range(abs(exp)):
            result = base * result
        return result

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __abs__(self):
        if self.d < 0:
            raise ValueError("no ordering on an imaginary extension")
        return self if float(self) >= 0 else -self

    # -- identity --------------------------------------------------------

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm a^2 - b^2 d (product with the conjugate)."""
        return self.a * self.a - self.b * self.b * self.d

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.a == other.a and _signed_square(self.b, self.d) == _signed_square(
                other.b, other.d
            )
        if isinstance(other, (int, Fraction)):
            return False  # b != 0 always
        return NotImplemented

    def __hash__(self):
        return hash((self.a, _signed_square(self.b, self.d)))

    def __bool__(self):
        return True  # a + b*sqrt(d) with b != 0 is never zero

    def __float__(self):
        if self.d < 0:
            raise ValueError("negative discriminant has no real image")
        return float(self.a) + float(self.b) * math.sqrt(float(self.d))

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, d={self.d})"


def quadext(a, b, d) -> Fraction | QuadExt:
    """a + b*sqrt(d), demoted to Fraction when b = 0."""
    b = Fraction(b)
    if b == 0:
        return Fraction(a)
    return QuadExt(a, b, d)


def sqrt_scalar(x: Scalar) -> Scalar:
    """Exact square root, extending the field by one sqrt when needed.

    Rationals return a Fraction when x is a square, else a QuadExt over d = x.
    QuadExt arguments are resolved inside their own field or raise
    FieldInsufficient. Floats use math.sqrt; negative floats raise
    FieldInsufficient (no real root).
    """
    if isinstance(x, float):
        if x < 0:
            raise FieldInsufficient("negative value has no real square root")
        return math.sqrt(x)
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        if x == 0:
            return Fraction(0)
        r = rational_sqrt(x)
        return r if r is not None else QuadExt(0, 1, x)
    if isinstance(x, QuadExt):
        return _quadext_sqrt(x)
    raise TypeError(f"not a scalar: {x!r}")


def _quadext_sqrt(x: QuadExt) -> QuadExt:
    # (p + q sqrt(d))^2 = x requires p^2 = (a ± sqrt(norm))/2 rational square.
    rn = rational_sqrt(x.norm())
    if rn is None:
        raise FieldInsufficient(f"sqrt of {x!r} leaves Q(sqrt({x.d}))")
    for sign in (rn, -rn):
        p2 = (x.a + sign) / 2
        p = rational_sqrt(p2)
        if p is not None and p != 0:
            q = x.b / (2 * p)
            candidate = QuadExt(p, q, x.d)
            if candidate * candidate == x:
                return candidate
    raise FieldInsufficient(f"sqrt of {x!r} leaves Q(sqrt({x.d}))")


def is_exact(x: Scalar) -> bool:
    return isinstance(x, (int, Fraction, QuadExt))


def scalar_kind(x: Scalar) -> str:
    """'exact' or 'float'; raises TypeError for non-scalars."""
    if isinstance(x, (int, Fraction, QuadExt)):
        return "exact"
    if isinstance(x, float):
        return "float"
    raise TypeError(f"not a scalar: {x!r}")


def common_kind(values) -> str:
    """Shared backend kind of an iterable of scalars; MixedBackend on a mix."""
    kinds = {scalar_kind(v) for v in values}
    if len(kinds) != 1:
        raise MixedBackend(f"mixed scalar backends: {sorted(kinds)}")
    return kinds.pop()


def to_float(x: Scalar) -> float:
    """Float image of any scalar (real extensions only)."""
    return float(x)

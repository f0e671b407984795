"""Dense polynomials in one marking variable y over exact rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

_Scalar = (int, Fraction)


class PolyY:
    """Immutable dense polynomial in y; trailing zeros are stripped.

    The zero polynomial has the empty coefficient sequence.  Scalars mix
    freely in arithmetic (``2 * p``, ``p + 1``).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # construction helpers
    @classmethod
    def zero(cls) -> PolyY:
        return cls()

    @classmethod
    def one(cls) -> PolyY:
        return cls((1,))

    @classmethod
    def y(cls) -> PolyY:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PolyY):
            return self.coeffs == other.coeffs
        if isinstance(other, _Scalar):
            return self == PolyY((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: PolyY | int | Fraction) -> PolyY:
        if isinstance(other, _Scalar):
            other = PolyY((other,))
        if not isinstance(other, PolyY):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyY(out)

    __radd__ = __add__

    def __neg__(self) -> PolyY:
        return PolyY(tuple(-c for c in self.coeffs))

    def __sub__(self, other: PolyY | int | Fraction) -> PolyY:
        return self + (-other if isinstance(other, PolyY) else PolyY((other,)).__neg__())

    def __rsub__(self, other: int | Fraction) -> PolyY:
        return PolyY((other,)) + (-self)

    def __mul__(self, other: PolyY | int | Fraction) -> PolyY:
        if isinstance(other, _Scalar):
            return PolyY(tuple(c * other for c in self.coeffs))
        if not isinstance(other, PolyY):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return PolyY()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return PolyY(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> PolyY:
        """Multiply by y**k."""
        if not self.coeffs:
            return self
        return PolyY((Fraction(0),) * k + self.coeffs)

    def reflect(self, top: int) -> PolyY:
        """Reverse the coefficients within degrees 0..top."""
        if self.degree > top:
            raise ValueError(f"degree {self.degree} exceeds reflection bound {top}")
        return PolyY(tuple(self[top - k] for k in range(top + 1)))

    def evaluate(self, x: Fraction | int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> PolyY:
        return PolyY(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def integer_coeffs(self) -> tuple[int, ...]:
        """Coefficients as ints; raises if any is non-integral."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            out.append(c.numerator)
        return tuple(out)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "PolyY(0)"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*y" if c != 1 else "y")
            else:
                parts.append(f"{c}*y^{k}" if c != 1 else f"y^{k}")
        return "PolyY(" + " + ".join(parts) + ")"

"""Exact scalar arithmetic over the rationals and over prime fields.

Every structure in this package carries a field descriptor; all scalars
inside one computation belong to that single field.  Rational scalars are
``fractions.Fraction`` (always reduced, arbitrary precision), prime-field
scalars are :class:`Fp` residues.  Mixing elements of different fields
raises :class:`FieldMismatchError` instead of silently coercing.
"""

from __future__ import annotations

from fractions import Fraction


class FieldMismatchError(TypeError):
    """Raised when scalars from different fields meet in one operation."""


class Fp:
    """A residue in the prime field with ``p`` elements.

    Supports +, -, *, / with other residues mod the same p and with plain
    ints (reduced mod p).  Anything else is rejected so that a rational
    can never leak into a mod-p computation.
    """

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatchError(
                    f"cannot mix F_{self.p} and F_{other.p} elements")
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        if other is NotImplemented or isinstance(other, (Fraction, float)):
            raise FieldMismatchError(
                f"cannot mix F_{self.p} element with {type(other).__name__}")
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(other.value - self.value, self.p)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        if other.value == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(self.value * pow(other.value, -1, self.p), self.p)

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __pos__(self):
        return self

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        # hash-compatible with the int it reduces to, so 0 == Fp(0,p)
        # behaves consistently in dict/set keys
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """Field descriptor: the rationals or F_p for a prime p.

    Instances compare by value; ``Field.rationals()`` and ``Field.prime(p)``
    are the two constructors.  The descriptor owns parsing, formatting and
    coercion of scalars; arithmetic lives on the elements themselves.
    """

    __slots__ = ("p",)

    def __init__(self, p=None):
        if p is not None:
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
        self.p = p

    @classmethod
    def rationals(cls):
        return cls(None)

    @classmethod
    def prime(cls, p):
        return cls(p)

    @property
    def characteristic(self):
        return 0 if self.p is None else self.p

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else f"GF({self.p})"

    # -- element construction -------------------------------------------

    def zero(self):
        return Fraction(0) if self.p is None else Fp(0, self.p)

    def one(self):
        return Fraction(1) if self.p is None else Fp(1, self.p)

    def coerce(self, x):
        """Turn ints / strings / same-field elements into a field element."""
        if self.p is None:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
            if isinstance(x, str):
                return self.parse(x)
            raise FieldMismatchError(f"cannot coerce {x!r} into QQ")
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatchError(f"cannot coerce F_{x.p} into F_{self.p}")
            return x
        if isinstance(x, int):
            return Fp(x, self.p)
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatchError(f"cannot coerce {x!r} into GF({self.p})")

    # -- serialization ---------------------------------------------------

    def parse(self, s):
        """Parse a scalar string: "p/q" or "n" over QQ, "k mod p" over F_p."""
        if isinstance(s, int):
            return self.coerce(s)
        if not isinstance(s, str):
            raise ValueError(f"scalar must be a string or int, got {type(s).__name__}")
        s = s.strip()
        if self.p is None:
            if "mod" in s:
                raise ValueError(f"prime-field scalar {s!r} in a rational context")
            try:
                return Fraction(s)
            except (ValueError, ZeroDivisionError) as exc:
                raise ValueError(f"bad rational scalar {s!r}: {exc}") from None
        if "mod" in s:
            left, _, right = s.partition("mod")
            try:
                k, q = int(left.strip()), int(right.strip())
            except ValueError:
                raise ValueError(f"bad prime-field scalar {s!r}") from None
            if q != self.p:
                raise ValueError(f"scalar {s!r} has modulus {q}, field is F_{self.p}")
            return Fp(k, self.p)
        if "/" in s:
            num, _, den = s.partition("/")
            try:
                n, d = int(num.strip()), int(den.strip())
            except ValueError:
                raise ValueError(f"bad scalar {s!r}") from None
            if d % self.p == 0:
                raise ValueError(f"scalar {s!r} has non-invertible denominator in F_{self.p}")
            return Fp(n, self.p) / Fp(d, self.p)
        try:
            return Fp(int(s), self.p)
        except ValueError:
            raise ValueError(f"bad scalar {s!r}") from None

    def format(self, x):
        """Canonical string form, the inverse of :meth:`parse`."""
        x = self.coerce(x)
        if self.p is None:
            if x.denominator == 1:
                return str(x.numerator)
            return f"{x.numerator}/{x.denominator}"
        return f"{x.value} mod {self.p}"

    @classmethod
    def from_name(cls, name):
        """Build a descriptor from its wire name: "rational" or "prime:<p>"."""
        if name == "rational":
            return cls.rationals()
        if name.startswith("prime:"):
            try:
                p = int(name.split(":", 1)[1])
            except ValueError:
                raise ValueError(f"bad field name {name!r}") from None
            return cls.prime(p)
        raise ValueError(f"unknown field {name!r} (expected 'rational' or 'prime:<p>')")

    @property
    def name(self):
        return "rational" if self.p is None else f"prime:{self.p}"


QQ = Field.rationals()

"""Prime fields F_p with small, immutable elements."""

from __future__ import annotations

from functools import total_ordering


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def require_odd_prime(p: int, what: str = "p") -> int:
    if not isinstance(p, int) or isinstance(p, bool):
        raise TypeError(f"{what} must be an integer, got {type(p).__name__}")
    if p == 2 or not is_prime(p):
        raise ValueError(f"{what} must be an odd prime, got {p}")
    return p


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


def factorial_mod(n: int, p: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out = out * i % p
    return out


@total_ordering
class PrimeField:
    """An element of F_p, stored as its residue in [0, p).

    >>> a = PrimeField(5, 7)
    >>> a * 3, a ** -1
    (PrimeField(1, 7), PrimeField(3, 7))
    """

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.value = int(value) % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, PrimeField):
            if other.p != self.p:
                raise ValueError(f"cannot combine F_{self.p} with F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def _new(self, v: int) -> "PrimeField":
        out = object.__new__(PrimeField)
        out.value = v % self.p
        out.p = self.p
        return out

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def inverse(self) -> "PrimeField":
        return self._new(inv_mod(self.value, self.p))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(self.value * inv_mod(o, self.p))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(o * inv_mod(self.value, self.p))

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return self._new(pow(self.value, k, self.p))

    def __eq__(self, other):
        if isinstance(other, PrimeField):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value < o

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"PrimeField({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)

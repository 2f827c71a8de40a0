"""Exact octonion arithmetic over dyadic rationals.

An :class:`Octonion` stores eight integer numerators and one shared
power-of-two denominator exponent.  Half-integral elements (the Gravesian
integers and the ring generated by omega) have exponent <= 1, so their
*doubled* coordinates are plain integers.  Products of arbitrary
half-integral octonions can land on quarter-integers, which is why the
exponent is not fixed at 1.

Multiplication is built by two Cayley-Dickson doublings from the complex
numbers, using ``(a, b)(c, d) = (ac - conj(d) b, d a + b conj(c))``.
Basis element ``e_{i+1}`` sits at index ``i`` (0-based), so the product of
``e_i`` and ``e_j`` lands on index ``(i-1) ^ (j-1)`` up to sign.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

DIM = 8


def _cd_mul(x: Sequence[int], y: Sequence[int]) -> list[int]:
    n = len(x)
    if n == 1:
        return [x[0] * y[0]]
    h = n // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    ac = _cd_mul(a, c)
    db = _cd_mul(_cd_conj(d), b)
    da = _cd_mul(d, a)
    bc = _cd_mul(b, _cd_conj(c))
    return [u - v for u, v in zip(ac, db)] + [u + v for u, v in zip(da, bc)]


def _cd_conj(x: Sequence[int]) -> list[int]:
    return [x[0]] + [-v for v in x[1:]]


@dataclass(frozen=True)
class Octonion:
    """Octonion ``sum(num[i] * e_{i+1}) / 2**exp`` with ``e_1 = 1``."""

    num: tuple[int, ...]
    exp: int = 1

    def __post_init__(self) -> None:
        if len(self.num) != DIM:
            raise ValueError(f"octonion needs {DIM} coordinates, got {len(self.num)}")
        if not all(isinstance(v, int) for v in self.num):
            raise TypeError("octonion coordinates must be integers")
        if self.exp < 0:
            raise ValueError("denominator exponent must be >= 0")
        # normalise to the smallest denominator
        num, exp = list(self.num), self.exp
        while exp > 0 and all(v % 2 == 0 for v in num):
            num = [v // 2 for v in num]
            exp -= 1
        object.__setattr__(self, "num", tuple(num))
        object.__setattr__(self, "exp", exp)

    @classmethod
    def from_doubled(cls, *doubled: int) -> Octonion:
        """Build from doubled coordinates ``d1..d8`` (value is ``d / 2``)."""
        if len(doubled) == 1 and not isinstance(doubled[0], int):
            doubled = tuple(doubled[0])
        return cls(tuple(doubled), 1)

    @classmethod
    def real(cls, value: int) -> Octonion:
        return cls((value,) + (0,) * (DIM - 1), 0)

    @classmethod
    def basis(cls, i: int) -> Octonion:
        """Basis element ``e_i`` for ``i`` in 1..8 (``e_1`` is the unit)."""
        if not 1 <= i <= DIM:
            raise ValueError(f"basis index must be in 1..{DIM}")
        num = [0] * DIM
        num[i - 1] = 1
        return cls(tuple(num), 0)

    @property
    def doubled(self) -> tuple[int, ...]:
        """Doubled coordinates; only defined for half-integral elements."""
        if self.exp > 1:
            raise ValueError("element is not half-integral")
        scale = 2 ** (1 - self.exp)
        return tuple(v * scale for v in self.num)

    @property
    def coords(self) -> tuple[Fraction, ...]:
        den = 2**self.exp
        return tuple(Fraction(v, den) for v in self.num)

    def is_half_integral(self) -> bool:
        return self.exp <= 1

    def __add__(self, other: Octonion) -> Octonion:
        e = max(self.exp, other.exp)
        sa, sb = 2 ** (e - self.exp), 2 ** (e - other.exp)
        return Octonion(tuple(u * sa + v * sb for u, v in zip(self.num, other.num)), e)

    def __neg__(self) -> Octonion:
        return Octonion(tuple(-v for v in self.num), self.exp)

    def __sub__(self, other: Octonion) -> Octonion:
        return self + (-other)

    def __mul__(self, other: Octonion) -> Octonion:
        return oct_mul(self, other)

    def __pow__(self, k: int) -> Octonion:
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = ONE
        for _ in range(k):
            out = out * self
        return out


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    return Octonion(tuple(_cd_mul(x.num, y.num)), x.exp + y.exp)


def oct_conj(x: Octonion) -> Octonion:
    return Octonion(tuple(_cd_conj(x.num)), x.exp)


def oct_norm(x: Octonion) -> Fraction:
    """Sum of squared coordinates, exact."""
    return Fraction(sum(v * v for v in x.num), 4**x.exp)


ONE = Octonion.real(1)
ZERO = Octonion.real(0)
OMEGA = Octonion.from_doubled(*([1] * DIM))


def embed_zw(a: int, b: int) -> Octonion:
    """The octonion ``a + b*omega``."""
    return Octonion((2 * a + b,) + (b,) * (DIM - 1), 1)


def basis_product_index(i: int, j: int) -> tuple[int, int]:
    """Return ``(sign, k)`` with ``e_i e_j = sign * e_k``."""
    prod = oct_mul(Octonion.basis(i), Octonion.basis(j))
    nz = [(idx, v) for idx, v in enumerate(prod.num) if v]
    assert len(nz) == 1 and prod.exp == 0
    idx, v = nz[0]
    return v, idx + 1

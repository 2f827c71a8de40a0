"""The ring Z[w] = {a + b*w}, with w^2 = w - 2 and N(a + b*w) = a^2 + ab + 2b^2."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from sympy import isprime


@dataclass(frozen=True, order=True)
class ZwInt:
    a: int
    b: int = 0

    def __add__(self, other: ZwInt) -> ZwInt:
        return ZwInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: ZwInt) -> ZwInt:
        return ZwInt(self.a - other.a, self.b - other.b)

    def __neg__(self) -> ZwInt:
        return ZwInt(-self.a, -self.b)

    def __mul__(self, other: ZwInt | int) -> ZwInt:
        if isinstance(other, int):
            return ZwInt(self.a * other, self.b * other)
        a, b, c, d = self.a, self.b, other.a, other.b
        return ZwInt(a * c - 2 * b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def conj(self) -> ZwInt:
        # conj(w) = 1 - w
        return ZwInt(self.a + self.b, -self.b)

    def norm(self) -> int:
        a, b = self.a, self.b
        return a * a + a * b + 2 * b * b

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self) -> str:
        a, b = self.a, self.b
        if b == 0:
            return str(a)
        w = {1: "w", -1: "-w"}.get(b, f"{b}w")
        if a == 0:
            return w
        return f"{a}{w}" if b < 0 else f"{a}+{w}"

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b}


ZERO = ZwInt(0, 0)
ONE = ZwInt(1, 0)
OMEGA = ZwInt(0, 1)


def _round_half_away(num: int, den: int) -> int:
    """Nearest integer to num/den (den > 0), ties away from zero."""
    if num >= 0:
        return (2 * num + den) // (2 * den)
    return -((-2 * num + den) // (2 * den))


def zw_divmod(x: ZwInt, y: ZwInt) -> tuple[ZwInt, ZwInt]:
    """Euclidean division ``x = q*y + v`` with ``N(v) < N(y)``.

    The quotient rounds both coordinates of ``x * conj(y) / N(y)``.  If that
    lands on a cell corner where the remainder is not strictly smaller, the
    eight neighbouring quotients are probed and the smallest remainder wins.
    """
    if y.is_zero():
        raise ZeroDivisionError("division by zero in Z[w]")
    ny = y.norm()
    t = x * y.conj()
    q = ZwInt(_round_half_away(t.a, ny), _round_half_away(t.b, ny))
    v = x - q * y
    if v.norm() < ny:
        return q, v
    best = None
    for da in (-1, 0, 1):
        for db in (-1, 0, 1):
            qq = ZwInt(q.a + da, q.b + db)
            vv = x - qq * y
            key = (vv.norm(), vv.a, vv.b)
            if best is None or key < best[0]:
                best = (key, qq, vv)
    _, q, v = best
    if v.norm() >= ny:
        raise ArithmeticError(f"no Euclidean quotient found for {x} / {y}")
    return q, v


def divides(d: ZwInt, x: ZwInt) -> bool:
    return zw_divmod(x, d)[1].is_zero()


def find_prime(p: int) -> ZwInt:
    """Return some ``pi`` with ``N(pi) = p`` for a prime ``p = 1 (mod 7)``.

    Uses ``4p = (2a + b)^2 + 7 b^2`` to bound the search.  Preference:
    smallest ``|b|``, then smallest ``|a|``, then positive ``b``.
    """
    if p < 2 or not isprime(p) or p % 7 != 1:
        raise ValueError(f"{p} is not a prime = 1 mod 7")
    bmax = isqrt(4 * p // 7) + 1
    found = []
    for b in range(-bmax, bmax + 1):
        rest = 4 * p - 7 * b * b
        if rest < 0:
            continue
        u = isqrt(rest)
        if u * u != rest:
            continue
        for s in {u, -u}:
            if (s - b) % 2 == 0:
                cand = ZwInt((s - b) // 2, b)
                if cand.norm() == p:
                    found.append(cand)
    if not found:
        raise ValueError(f"no element of norm {p} found")
    return min(found, key=lambda z: (abs(z.b), abs(z.a), z.b < 0, z.a < 0))

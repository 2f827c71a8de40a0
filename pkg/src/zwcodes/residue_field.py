"""Residue field Z[w]/(pi) and its labelling by Z_p.

For ``pi = a + b*w`` of prime norm ``p`` the map ``m + n*w -> (m + n*s) mod p``
is a ring isomorphism onto Z_p, where the slope ``s`` solves
``a + b*s = 0 (mod p)``.  Every class gets a canonical minimal-norm
representative; the Cayley-Dickson weight (minimal ``|m| + |n|``) is
tabulated separately since the two minimisations can disagree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt
from typing import Iterable, Mapping

from sympy import isprime, primefactors

from .zw_ring import ZwInt

PLUS_W = "+w"
MINUS_W = "-w"


class FieldError(ValueError):
    pass


def _tie_key(v: ZwInt) -> tuple:
    # smaller |b|, smaller |a|, positive b, positive a
    return (abs(v.b), abs(v.a), v.b <= 0, v.a <= 0)


def search_box(pi: ZwInt, p: int) -> tuple[int, int]:
    extra = abs(pi.a) + abs(pi.b)
    mbound = isqrt(p) + 1 + extra
    nbound = isqrt(4 * p // 7) + 1 + extra
    return mbound, nbound


@dataclass(frozen=True)
class PowerTable:
    """exp/log tables for the cyclic subgroup generated by ``base`` mod ``p``."""

    p: int
    base: int
    exp: tuple[int, ...]
    log: Mapping[int, int]

    @classmethod
    def build(cls, p: int, base: int) -> PowerTable:
        base %= p
        if base == 0:
            raise FieldError("zero generates no multiplicative subgroup")
        exp = [1]
        cur = base
        while cur != 1:
            exp.append(cur)
            cur = cur * base % p
        return cls(p, base, tuple(exp), {v: e for e, v in enumerate(exp)})

    @property
    def order(self) -> int:
        return len(self.exp)

    def power(self, e: int) -> int:
        return self.exp[e % len(self.exp)]

    def dlog(self, v: int) -> int:
        v %= self.p
        if v == 0:
            raise FieldError("zero has no discrete logarithm")
        try:
            return self.log[v]
        except KeyError:
            raise FieldError(f"{v} is not a power of {self.base} mod {self.p}") from None

    def contains(self, v: int) -> bool:
        return v % self.p in self.log


@dataclass
class ResidueField:
    pi: ZwInt
    p: int
    slope: int
    reps: tuple[ZwInt, ...]
    weights: tuple[int, ...]
    weight_reps: tuple[ZwInt, ...]
    minimal_reps: tuple[ZwInt, ...]
    pinned: frozenset[int] = frozenset()
    alpha: int | None = None
    _table: PowerTable | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return (self.p - 1) // 7

    @property
    def omega(self) -> int:
        return self.slope

    # label <-> element

    def label(self, v: ZwInt) -> int:
        return (v.a + v.b * self.slope) % self.p

    def unlabel(self, k: int) -> ZwInt:
        return self.reps[k % self.p]

    def reduce(self, v: ZwInt) -> ZwInt:
        return self.reps[self.label(v)]

    def cd_weight(self, v: ZwInt) -> int:
        return self.weights[self.label(v)]

    def cd_distance(self, x: ZwInt, y: ZwInt) -> int:
        return self.weights[self.label(x - y)]

    # arithmetic on labels

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.p

    def sub(self, x: int, y: int) -> int:
        return (x - y) % self.p

    def mul(self, x: int, y: int) -> int:
        return x * y % self.p

    def inv(self, x: int) -> int:
        if x % self.p == 0:
            raise ZeroDivisionError("zero is not invertible")
        return pow(x, -1, self.p)

    def div(self, x: int, y: int) -> int:
        return x * self.inv(y) % self.p

    def power(self, x: int, e: int) -> int:
        return pow(x, e, self.p)

    def element_order(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise FieldError("zero has no multiplicative order")
        order = self.p - 1
        for q in primefactors(order):
            while order % q == 0 and pow(x, order // q, self.p) == 1:
                order //= q
        return order

    def is_primitive(self, x: int) -> bool:
        return x % self.p != 0 and self.element_order(x) == self.p - 1

    # primitive element and discrete logs

    def target_label(self, target: str) -> int:
        if target == PLUS_W:
            return self.omega
        if target == MINUS_W:
            return (-self.omega) % self.p
        raise FieldError(f"target must be {PLUS_W!r} or {MINUS_W!r}, got {target!r}")

    def primitive_candidates(self, target: str) -> list[int]:
        want = self.target_label(target)
        return [
            g for g in range(2, self.p)
            if pow(g, self.n, self.p) == want and self.is_primitive(g)
        ]

    def find_primitive(self, target: str = "auto") -> int:
        """Smallest primitive label ``g`` with ``g**n`` equal to +w or -w.

        Only one of the two targets is ever reachable: ``g**n`` has order 7,
        and exactly one of ``w``, ``-w`` has odd order.  ``"auto"`` picks it.
        """
        targets = [PLUS_W, MINUS_W] if target == "auto" else [target]
        for t in targets:
            cands = self.primitive_candidates(t)
            if cands:
                self.set_alpha(cands[0])
                return cands[0]
        want = self.target_label(targets[0])
        raise FieldError(
            f"no primitive element has {self.n}-th power {target} (label {want}) "
            f"mod {self.pi}; that element has order {self.element_order(want)}, not 7"
        )

    def set_alpha(self, alpha: int) -> None:
        self.alpha = alpha % self.p
        self._table = PowerTable.build(self.p, self.alpha)

    @property
    def table(self) -> PowerTable:
        if self._table is None:
            raise FieldError("no primitive element chosen; call find_primitive first")
        return self._table

    def dlog(self, v: int) -> int:
        return self.table.dlog(v)

    # presentation

    def table_rows(self) -> list[dict]:
        rows = []
        for k, v in enumerate(self.reps):
            row = {"k": k, "a": v.a, "b": v.b, "norm": v.norm(), "weight": self.weights[k]}
            if k in self.pinned:
                m = self.minimal_reps[k]
                row["pinned"] = True
                row["minimal"] = {"a": m.a, "b": m.b, "norm": m.norm()}
            rows.append(row)
        return rows


def _class_tables(pi: ZwInt, p: int, slope: int) -> tuple[list[ZwInt], list[int], list[ZwInt]]:
    mbound, nbound = search_box(pi, p)
    best_norm: list[tuple | None] = [None] * p
    best_weight: list[tuple | None] = [None] * p
    for m in range(-mbound, mbound + 1):
        for n in range(-nbound, nbound + 1):
            v = ZwInt(m, n)
            k = (m + n * slope) % p
            tk = _tie_key(v)
            nk = (v.norm(),) + tk
            if best_norm[k] is None or nk < best_norm[k][0]:
                best_norm[k] = (nk, v)
            wk = (abs(m) + abs(n), v.norm()) + tk
            if best_weight[k] is None or wk < best_weight[k][0]:
                best_weight[k] = (wk, v)
    if any(e is None for e in best_norm):
        raise FieldError("search box missed a residue class")
    reps = [e[1] for e in best_norm]
    wreps = [e[1] for e in best_weight]
    return reps, [abs(v.a) + abs(v.b) for v in wreps], wreps


def build_field(pi: ZwInt, pins: Mapping[int, ZwInt] | None = None) -> ResidueField:
    """Build the residue field modulo ``pi``.

    ``pins`` overrides the canonical representative of selected labels
    (used to reproduce published tables whose entries are not
    norm-minimal); each pinned element must carry the label it is pinned to.
    """
    p = pi.norm()
    if p < 2 or not isprime(p):
        raise FieldError(f"N({pi}) = {p} is not prime")
    if p % 7 != 1:
        raise FieldError(f"N({pi}) = {p} is not = 1 mod 7")
    if pi.b % p == 0:
        raise FieldError(f"b coefficient of {pi} is not invertible mod {p}")
    slope = (-pi.a * pow(pi.b, -1, p)) % p
    minimal, weights, wreps = _class_tables(pi, p, slope)
    reps = list(minimal)
    pinned = set()
    for k, v in (pins or {}).items():
        if (v.a + v.b * slope) % p != k % p:
            raise FieldError(f"pinned representative {v} does not have label {k}")
        reps[k % p] = v
        if v != minimal[k % p]:
            pinned.add(k % p)
    return ResidueField(
        pi=pi,
        p=p,
        slope=slope,
        reps=tuple(reps),
        weights=tuple(weights),
        weight_reps=tuple(wreps),
        minimal_reps=tuple(minimal),
        pinned=frozenset(pinned),
    )


def labels_of(f: ResidueField, values: Iterable[ZwInt]) -> list[int]:
    return [f.label(v) for v in values]

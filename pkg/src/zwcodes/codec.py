"""Constacyclic codes over Z[w]/(pi) and their syndrome decoders.

All vectors are lists of labels (elements of Z_p under the residue-field
isomorphism).  Row ``t`` of the parity-check matrix holds the powers
``alpha**((7t + 1) * c)``; the generator polynomial is
``prod_{l < rows} (x - alpha**(7l + 1))`` and divides ``x**n - alpha**n``
where ``alpha**n`` is ``w`` or ``-w``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Sequence

from .residue_field import MINUS_W, PLUS_W, FieldError, PowerTable, ResidueField
from .zw_ring import ZwInt


class CodeError(ValueError):
    pass


class Verdict(str, enum.Enum):
    NO_ERROR = "NoError"
    CORRECTED = "Corrected"
    DETECTED = "DetectedUncorrectable"
    FAILURE = "Failure"


@dataclass(frozen=True)
class ErrorTerm:
    position: int
    value: int


@dataclass(frozen=True)
class DecodeOutcome:
    verdict: Verdict
    syndrome: tuple[int, ...]
    errors: tuple[ErrorTerm, ...] = ()
    corrected: tuple[int, ...] | None = None
    reason: str | None = None
    details: dict = field(default_factory=dict, compare=False)

    @property
    def ok(self) -> bool:
        return self.verdict in (Verdict.NO_ERROR, Verdict.CORRECTED)

    def to_json(self, f: ResidueField) -> dict:
        out = {
            "verdict": self.verdict.value,
            "syndrome": list(self.syndrome),
            "errors": [
                {
                    "pos": e.position,
                    "value_label": e.value,
                    "value_a": f.unlabel(e.value).a,
                    "value_b": f.unlabel(e.value).b,
                }
                for e in self.errors
            ],
            "corrected": list(self.corrected) if self.corrected is not None else None,
            "reason": self.reason,
        }
        if self.details:
            out["details"] = self.details
        return out


# polynomials over Z_p, coefficient lists lowest degree first


def poly_trim(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a = a[:-1]
    return a


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return poly_trim(out)


def poly_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = poly_trim([x % p for x in a])
    b = poly_trim([x % p for x in b])
    if b == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], -1, p)
    rem = list(a)
    quot = [0] * max(1, len(a) - len(b) + 1)
    for shift in range(len(a) - len(b), -1, -1):
        coef = rem[shift + len(b) - 1] * inv_lead % p
        quot[shift] = coef
        if coef:
            for j, y in enumerate(b):
                rem[shift + j] = (rem[shift + j] - coef * y) % p
    return poly_trim(quot), poly_trim(rem[: max(1, len(b) - 1)])


def root_product(p: int, roots: Sequence[int]) -> list[int]:
    g = [1]
    for r in roots:
        g = poly_mul(g, [(-r) % p, 1], p)
    return g


def generator_roots(table: PowerTable, count: int) -> list[int]:
    return [table.power(7 * l + 1) for l in range(count)]


@dataclass(frozen=True)
class Code:
    field: ResidueField
    alpha: int
    rows: int
    table: PowerTable
    H: tuple[tuple[int, ...], ...]
    gen_poly: tuple[int, ...]

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def n(self) -> int:
        return self.field.n

    @property
    def k(self) -> int:
        return self.n - self.rows

    @property
    def alpha_n(self) -> int:
        return self.table.power(self.n)

    @property
    def sign(self) -> str:
        return PLUS_W if self.alpha_n == self.field.omega else MINUS_W

    @property
    def primitive(self) -> bool:
        return self.table.order == self.p - 1

    def modulus_poly(self) -> list[int]:
        """Coefficients of ``x**n - alpha**n``."""
        return [(-self.alpha_n) % self.p] + [0] * (self.n - 1) + [1]

    def is_codeword(self, c: Sequence[int]) -> bool:
        return not any(syndrome(self, c))

    def describe(self) -> dict:
        f = self.field
        return {
            "pi": f.pi.to_json(),
            "p": self.p,
            "n": self.n,
            "k": self.k,
            "rows": self.rows,
            "alpha": self.alpha,
            "alpha_element": f.unlabel(self.alpha).to_json(),
            "alpha_order": self.table.order,
            "primitive": self.primitive,
            "alpha_n": self.sign,
            "H": [list(row) for row in self.H],
            "gen_poly": list(self.gen_poly),
        }


def build_code(f: ResidueField, alpha: int, rows: int) -> Code:
    """Code with parity-check rows ``alpha**((7t + 1) c)``, ``t < rows``.

    ``alpha`` must satisfy ``alpha**n = +-w``.  A non-primitive ``alpha``
    is accepted only for one-row codes (its positions stay distinct as long
    as its order is at least ``n``); multi-row decoders locate errors through
    ``alpha**7`` and need the full order ``p - 1``.
    """
    p, n = f.p, f.n
    alpha %= p
    if alpha == 0:
        raise CodeError("alpha must be nonzero")
    if not 1 <= rows <= 4:
        raise CodeError(f"rows must be in 1..4, got {rows}")
    if rows > n:
        raise CodeError(f"rows={rows} exceeds n={n}")
    table = PowerTable.build(p, alpha)
    an = table.power(n)
    if an not in (f.target_label(PLUS_W), f.target_label(MINUS_W)):
        raise CodeError(f"alpha^{n} = {f.unlabel(an)} is neither w nor -w")
    if table.order != p - 1:
        if rows > 1:
            raise CodeError(f"alpha has order {table.order}, not {p - 1}; only rows=1 allowed")
        if table.order < n:
            raise CodeError(f"alpha has order {table.order} < n = {n}")
    H = tuple(tuple(table.power((7 * t + 1) * c) for c in range(n)) for t in range(rows))
    g = root_product(p, generator_roots(table, rows))
    modulus = [(-an) % p] + [0] * (n - 1) + [1]
    _, rem = poly_divmod(modulus, g, p)
    if rem != [0]:
        raise CodeError("generator polynomial does not divide x^n - alpha^n")
    return Code(f, alpha, rows, table, H, tuple(g))


def _check_length(code: Code, v: Sequence[int], what: str = "vector") -> None:
    if len(v) != code.n:
        raise CodeError(f"{what} has length {len(v)}, expected {code.n}")


def encode(code: Code, message: Sequence[int]) -> list[int]:
    """Non-systematic encoding ``c(x) = m(x) g(x)``."""
    if len(message) != code.k:
        raise CodeError(f"message has length {len(message)}, expected k={code.k}")
    if code.k == 0:
        return [0] * code.n
    c = poly_mul([m % code.p for m in message], code.gen_poly, code.p)
    return (c + [0] * code.n)[: code.n]


def syndrome(code: Code, received: Sequence[int]) -> tuple[int, ...]:
    _check_length(code, received)
    p = code.p
    return tuple(sum(h * r for h, r in zip(row, received)) % p for row in code.H)


def _apply(code: Code, received: Sequence[int], errors: Sequence[ErrorTerm]) -> tuple[int, ...]:
    out = [r % code.p for r in received]
    for e in errors:
        out[e.position] = (out[e.position] - e.value) % code.p
    return tuple(out)


def _corrected(code: Code, received, s, errors, **details) -> DecodeOutcome:
    fixed = _apply(code, received, errors)
    if not code.is_codeword(fixed):
        # a correction that fails the parity check is never reported as one
        return DecodeOutcome(
            Verdict.DETECTED, s, reason="candidate correction fails the parity check",
            details=details,
        )
    return DecodeOutcome(Verdict.CORRECTED, s, tuple(errors), fixed, details=details)


def _detected(s, reason: str, **details) -> DecodeOutcome:
    return DecodeOutcome(Verdict.DETECTED, s, reason=reason, details=details)


def _logs(code: Code, comps: Sequence[int]) -> list[int] | None:
    try:
        return [code.table.dlog(x) for x in comps]
    except FieldError:
        return None


def locate(code: Code, diff: int) -> int | None:
    """Error position ``i`` from ``7 i = diff (mod ord(alpha))``.

    Uses ``diff * 7^-1 mod n`` when 7 is invertible mod n (for a true single
    error this equals the exact quotient ``diff / 7``); otherwise only exact
    multiples of 7 give a position.
    """
    n = code.n
    diff %= code.table.order
    if gcd(7, n) == 1:
        return diff % n * pow(7, -1, n) % n
    if diff % 7 == 0:
        return diff // 7 % n
    return None


def decode_single_row(code: Code, received: Sequence[int]) -> DecodeOutcome:
    """One-row decoder: error values restricted to powers of ``alpha**n``."""
    if code.rows != 1:
        raise CodeError("decode_single_row needs a one-row code")
    s = syndrome(code, received)
    if s[0] == 0:
        return DecodeOutcome(Verdict.NO_ERROR, s, corrected=tuple(r % code.p for r in received))
    logs = _logs(code, s)
    if logs is None:
        return _detected(s, "syndrome is not a power of alpha")
    L = logs[0]
    t = L % code.n
    l = (L - t) // code.n
    value = code.table.power(code.n * l)
    return _corrected(code, received, s, [ErrorTerm(t, value)], L=L, l=l)


def _single_error(code: Code, received, s, logs) -> DecodeOutcome:
    # logs[t] = (7t + 1) i + q for an error alpha^q at position i
    order = code.table.order
    i = locate(code, logs[1] - logs[0])
    if i is None:
        return _detected(s, "location checks disagree", M=logs)
    locs = [locate(code, logs[t + 1] - logs[t]) for t in range(len(logs) - 1)]
    if any(x != i for x in locs):
        return _detected(s, "location checks disagree", M=logs, locations=locs)
    qs = [(logs[t] - (7 * t + 1) * i) % order for t in range(len(logs))]
    if len(set(qs)) != 1:
        return _detected(s, "value checks disagree", M=logs, location=i, values=qs)
    value = code.table.power(qs[0])
    return _corrected(code, received, s, [ErrorTerm(i, value)], M=logs, q=qs[0])


def _single_row_family(code: Code, received, rows: int) -> DecodeOutcome:
    if code.rows != rows:
        raise CodeError(f"decoder needs a {rows}-row code, got {code.rows}")
    s = syndrome(code, received)
    if not any(s):
        return DecodeOutcome(Verdict.NO_ERROR, s, corrected=tuple(r % code.p for r in received))
    if not all(s):
        return _detected(s, "some syndrome components are zero: more than one error")
    logs = _logs(code, s)
    if logs is None:
        return _detected(s, "syndrome is not a power of alpha")
    return _single_error(code, received, s, logs)


def decode_two_rows(code: Code, received: Sequence[int]) -> DecodeOutcome:
    """Two-row decoder: any single error, position from ``(M2 - M1) / 7``."""
    return _single_row_family(code, received, 2)


def decode_three_rows(code: Code, received: Sequence[int]) -> DecodeOutcome:
    """Three-row decoder: single errors, with location and value cross-checks."""
    return _single_row_family(code, received, 3)


def decode_four_rows(code: Code, received: Sequence[int]) -> DecodeOutcome:
    """Four-row decoder for up to two errors via ``x^2 - s7 x + p7``."""
    if code.rows != 4:
        raise CodeError(f"decoder needs a 4-row code, got {code.rows}")
    f, p = code.field, code.p
    s = syndrome(code, received)
    if not any(s):
        return DecodeOutcome(Verdict.NO_ERROR, s, corrected=tuple(r % p for r in received))
    s1, s8, s15, s22 = s
    det = (s1 * s15 - s8 * s8) % p
    if det == 0:
        # never happens for exactly two errors; try one error
        if not all(s):
            return _detected(s, "s1*s15 = s8^2 with zero components: not a single error", det=0)
        logs = _logs(code, s)
        if logs is None:
            return _detected(s, "syndrome is not a power of alpha", det=0)
        return _single_error(code, received, s, logs)
    s7 = f.div(s1 * s22 - s8 * s15, det)
    p7 = f.div(s8 * s22 - s15 * s15, det)
    details = {"s7": s7, "p7": p7, "det": det}
    locators = [code.table.power(7 * i) for i in range(code.n)]
    roots = [i for i, x in enumerate(locators) if (x * x - s7 * x + p7) % p == 0]
    details["roots"] = roots
    if len(roots) != 2:
        what = "no admissible roots" if not roots else "a single admissible root"
        return DecodeOutcome(
            Verdict.FAILURE, s, reason=f"quadratic has {what}", details=details
        )
    i, j = roots
    xi, xj = locators[i], locators[j]
    A = f.div(s8 - s1 * xj, xi - xj)
    B = (s1 - A) % p
    ei = A * code.table.power(-i) % p
    ej = B * code.table.power(-j) % p
    errors = [ErrorTerm(pos, v) for pos, v in ((i, ei), (j, ej)) if v]
    if len(errors) != 2:
        return _detected(s, "root pair gives a zero error value", **details)
    return _corrected(code, received, s, errors, **details)


DECODERS = {
    1: decode_single_row,
    2: decode_two_rows,
    3: decode_three_rows,
    4: decode_four_rows,
}


def decode(code: Code, received: Sequence[int]) -> DecodeOutcome:
    return DECODERS[code.rows](code, received)


def brute_force_decode(code: Code, received: Sequence[int], max_errors: int) -> DecodeOutcome:
    """Enumerate every pattern of at most ``max_errors`` nonzero errors."""
    if max_errors not in (1, 2):
        raise CodeError("max_errors must be 1 or 2")
    p, n = code.p, code.n
    s = syndrome(code, received)
    if not any(s):
        return DecodeOutcome(Verdict.NO_ERROR, s, corrected=tuple(r % p for r in received))
    cols = [tuple(row[c] for row in code.H) for c in range(n)]
    matches: list[tuple[ErrorTerm, ...]] = []
    for c in range(n):
        for v in range(1, p):
            if all(v * h % p == x for h, x in zip(cols[c], s)):
                matches.append((ErrorTerm(c, v),))
    if max_errors == 2:
        for i, j in combinations(range(n), 2):
            for vi in range(1, p):
                part = [vi * h % p for h in cols[i]]
                for vj in range(1, p):
                    if all((a + vj * h) % p == x for a, h, x in zip(part, cols[j], s)):
                        matches.append((ErrorTerm(i, vi), ErrorTerm(j, vj)))
    if not matches:
        return DecodeOutcome(Verdict.FAILURE, s, reason="no pattern explains the syndrome")
    if len(matches) > 1:
        return _detected(s, f"ambiguous: {len(matches)} patterns explain the syndrome",
                         candidates=len(matches))
    return _corrected(code, received, s, list(matches[0]))


def single_error_coverage(code: Code) -> dict[int, set[int]]:
    """For each error value, the positions where the decoder recovers it exactly."""
    zero = [0] * code.n
    out: dict[int, set[int]] = {}
    for v in range(1, code.p):
        for pos in range(code.n):
            r = list(zero)
            r[pos] = v
            res = decode(code, r)
            if res.verdict is Verdict.CORRECTED and res.corrected == tuple(zero):
                out.setdefault(v, set()).add(pos)
    return out


def vector_elements(f: ResidueField, v: Sequence[int]) -> list[ZwInt]:
    return [f.unlabel(x) for x in v]

"""Command-line front end: ``zwcodes <subcommand> [flags]``.

Exit codes: 0 success, 1 decoder reported an uncorrectable word, 2 usage or
validation error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from importlib import resources
from pathlib import Path
from typing import Sequence

from .channel_sim import ChannelError, ChannelSpec, VALUE_MODES, parse_dist, rate_report, run_trials, stats_csv
from .codec import CodeError, build_code, decode, encode
from .residue_field import FieldError, ResidueField, build_field
from .zw_ring import ZwInt, find_prime

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2

# flags whose values may start with "-" (e.g. --pi -1,4)
_VALUE_FLAGS = {"--pi", "--alpha", "--vector", "--message", "--alpha-target"}


class UsageError(Exception):
    pass


# parsing helpers


def parse_pair(text: str) -> ZwInt:
    parts = text.strip().strip("()").split(",")
    if len(parts) != 2:
        raise UsageError(f"expected a pair 'a,b', got {text!r}")
    try:
        return ZwInt(int(parts[0]), int(parts[1]))
    except ValueError:
        raise UsageError(f"expected integers in {text!r}") from None


_TERM = re.compile(r"([+-]?)(\d*)(w?)")
_POW = re.compile(r"^(?:a|alpha)\^(-?\d+)$")


def parse_element(token: str, f: ResidueField, alpha: int | None = None) -> int:
    """One vector entry as a label: ``17``, ``(2,2)``, ``2+2w``, ``-w`` or ``a^7``."""
    tok = token.strip().replace(" ", "")
    if not tok:
        raise UsageError("empty vector entry")
    if tok.startswith("("):
        return f.label(parse_pair(tok))
    m = _POW.match(tok)
    if m:
        if alpha is None:
            raise UsageError(f"{token!r} needs alpha")
        return pow(alpha, int(m.group(1)), f.p)
    elem = _parse_zw(tok)
    if elem is not None:
        return f.label(elem)
    raise UsageError(f"cannot parse vector entry {token!r}")


def _parse_zw(tok: str) -> ZwInt | None:
    """Sum of terms like ``3``, ``-2w``, ``w``; None if ``tok`` is not of that shape."""
    a = b = 0
    pos = 0
    while pos < len(tok):
        m = _TERM.match(tok, pos)
        sign, digits, w = m.groups()
        if m.end() == pos or not (digits or w) or (pos > 0 and not sign):
            return None
        coef = int(digits) if digits else 1
        if sign == "-":
            coef = -coef
        if w:
            b += coef
        else:
            a += coef
        pos = m.end()
    return ZwInt(a, b) if tok else None


def split_vector(text: str) -> list[str]:
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        out.append(cur)
    return out


def parse_vector(text: str, f: ResidueField, alpha: int | None = None) -> list[int]:
    return [parse_element(t, f, alpha) for t in split_vector(text)]


def load_pins(source: str) -> tuple[ZwInt | None, dict[int, ZwInt]]:
    if source == "published":
        raw = resources.files("zwcodes").joinpath("fixtures/labels_p29.json").read_text()
    else:
        raw = Path(source).read_text()
    data = json.loads(raw)
    pi = ZwInt(**data["pi"]) if "pi" in data else None
    table = {int(k): ZwInt(*v) for k, v in data["table"].items()}
    return pi, table


def read_config(path: str) -> dict[str, str]:
    out = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        out[key.strip().replace("-", "_")] = value.strip()
    return out


# building blocks shared by subcommands


def field_from_args(args) -> ResidueField:
    if (args.pi is None) == (args.p is None):
        raise UsageError("give exactly one of --pi a,b or --p P")
    if args.pi is not None:
        pi = parse_pair(args.pi)
    else:
        try:
            pi = find_prime(int(args.p))
        except ValueError as exc:
            raise UsageError(f"--p {args.p}: not a prime = 1 mod 7 ({exc})") from None
    pins = None
    if getattr(args, "pins", None):
        pin_pi, pins = load_pins(args.pins)
        if pin_pi is not None and pin_pi != pi:
            raise UsageError(f"pinned table is for pi={pin_pi}, not {pi}")
    try:
        return build_field(pi, pins)
    except FieldError as exc:
        raise UsageError(f"not a prime = 1 mod 7: {exc}") from None


def code_from_args(args):
    f = field_from_args(args)
    rows = int(args.rows)
    if args.alpha is not None:
        if "," in args.alpha:
            alpha = f.label(parse_pair(args.alpha))
        else:
            alpha = parse_element(args.alpha, f)
    else:
        try:
            alpha = f.find_primitive(args.alpha_target or "auto")
        except FieldError as exc:
            raise UsageError(str(exc)) from None
    try:
        return build_code(f, alpha, rows)
    except CodeError as exc:
        raise UsageError(str(exc)) from None


def _fmt_vec(f: ResidueField, v) -> str:
    return "(" + ", ".join(str(f.unlabel(x)) for x in v) + ")"


def _power_form(code, x: int) -> str:
    if x == 0:
        return "0"
    return f"a^{code.table.dlog(x)}" if code.table.contains(x) else "?"


# subcommands


def cmd_field_table(args, out) -> int:
    f = field_from_args(args)
    rows = f.table_rows()
    fmt = args.format
    if fmt == "json":
        meta = {"pi": f.pi.to_json(), "p": f.p, "slope": f.slope, "pinned": sorted(f.pinned)}
        print(json.dumps(meta), file=out)
        for row in rows:
            print(json.dumps(row), file=out)
    elif fmt == "csv":
        print("k,a,b,norm,weight,pinned", file=out)
        for row in rows:
            print(f"{row['k']},{row['a']},{row['b']},{row['norm']},{row['weight']},"
                  f"{int(row.get('pinned', False))}", file=out)
    else:
        print(f"pi = {f.pi}   p = {f.p}   s = {f.slope}", file=out)
        width = max(len(str(ZwInt(r['a'], r['b']))) for r in rows)
        for row in rows:
            elem = str(ZwInt(row["a"], row["b"]))
            line = f"f({row['k']:>{len(str(f.p))}}) = {elem:<{width}}   N={row['norm']:<4} wC={row['weight']}"
            if row.get("pinned"):
                m = row["minimal"]
                line += f"   * pinned; minimal-norm rep {ZwInt(m['a'], m['b'])} (N={m['norm']})"
            print(line, file=out)
    return EXIT_OK


def cmd_make_code(args, out) -> int:
    code = code_from_args(args)
    desc = code.describe()
    if args.format == "json":
        print(json.dumps(desc), file=out)
    else:
        f = code.field
        print(f"pi = {f.pi}  p = {code.p}  n = {code.n}  k = {code.k}  rows = {code.rows}", file=out)
        print(f"alpha = {f.unlabel(code.alpha)} (label {code.alpha}, order {code.table.order}"
              f"{'' if code.primitive else ', NOT primitive'}),  alpha^n = {code.sign}", file=out)
        for t, row in enumerate(code.H):
            print(f"H[{t}] = " + " ".join(f"{x:>{len(str(code.p))}}" for x in row), file=out)
        print("g(x) coefficients (low to high): " + " ".join(map(str, code.gen_poly)), file=out)
    return EXIT_OK


def cmd_encode(args, out) -> int:
    code = code_from_args(args)
    if args.message is None:
        raise UsageError("--message is required")
    msg = parse_vector(args.message, code.field, code.alpha)
    try:
        c = encode(code, msg)
    except CodeError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps({"message": msg, "codeword": c}), file=out)
    else:
        print("codeword: " + ",".join(map(str, c)), file=out)
        print("elements: " + _fmt_vec(code.field, c), file=out)
    return EXIT_OK


def cmd_decode(args, out) -> int:
    code = code_from_args(args)
    if args.vector is None:
        raise UsageError("--vector is required")
    r = parse_vector(args.vector, code.field, code.alpha)
    if len(r) != code.n:
        raise UsageError(f"vector has length {len(r)}, expected n={code.n}")
    res = decode(code, r)
    f = code.field
    if args.format == "json":
        payload = res.to_json(f)
        payload["received"] = r
        print(json.dumps(payload), file=out)
    else:
        print("received:  " + _fmt_vec(f, r), file=out)
        print("syndrome:  " + ", ".join(
            f"{x} = {f.unlabel(x)} = {_power_form(code, x)}" for x in res.syndrome), file=out)
        for key in ("s7", "p7"):
            if key in res.details:
                print(f"{key}: {f.unlabel(res.details[key])}", file=out)
        print(f"verdict:   {res.verdict.value}", file=out)
        for e in res.errors:
            print(f"error at position {e.position}: {f.unlabel(e.value)} (label {e.value})", file=out)
        if res.corrected is not None:
            print("corrected: " + _fmt_vec(f, res.corrected)
                  + "  labels " + ",".join(map(str, res.corrected)), file=out)
        if res.reason:
            print(f"reason:    {res.reason}", file=out)
    return EXIT_OK if res.ok else EXIT_NEGATIVE


def cmd_simulate(args, out) -> int:
    code = code_from_args(args)
    try:
        trials = int(args.trials)
        seed = int(args.seed)
        channel = ChannelSpec(parse_dist(args.dist), args.value_mode, seed)
        stats = run_trials(code, channel, trials, workers=int(args.workers))
    except (ChannelError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        print(json.dumps(stats.to_json()), file=out)
    elif args.format == "csv":
        out.write(stats_csv([stats]))
    else:
        for key, value in stats.to_json().items():
            print(f"{key:>13}: {value}", file=out)
    return EXIT_OK


def cmd_rate_compare(args, out) -> int:
    if args.p is None or args.k is None:
        raise UsageError("--p and --k are required")
    try:
        rep = rate_report(int(args.p), int(args.k))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    row = {"p": int(args.p), "k": int(args.k), "r_octonion": str(rep.r_octonion),
           "r_hurwitz_subring": str(rep.r_hurwitz_subring), "ratio": str(rep.ratio)}
    if args.format == "json":
        print(json.dumps(row), file=out)
    elif args.format == "csv":
        print(",".join(row), file=out)
        print(",".join(str(v) for v in row.values()), file=out)
    else:
        print(f"length (p-1)/7 code: R = {rep.r_octonion}", file=out)
        print(f"length (p-1)/6 code: R = {rep.r_hurwitz_subring}", file=out)
        print(f"ratio: {rep.ratio}", file=out)
    return EXIT_OK


COMMANDS = {
    "field-table": cmd_field_table,
    "make-code": cmd_make_code,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "simulate": cmd_simulate,
    "rate-compare": cmd_rate_compare,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zwcodes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, code=True):
        sp.add_argument("--config", help="key=value file supplying defaults for any flag")
        sp.add_argument("--pi", help="prime as a,b meaning a+bw")
        sp.add_argument("--p", help="rational prime = 1 mod 7; pi is searched for")
        sp.add_argument("--pins", help="JSON table of pinned representatives, or 'published'")
        sp.add_argument("--format", choices=("text", "json", "csv"), default=None)
        if code:
            sp.add_argument("--alpha", help="primitive element: label, a,b pair or a+bw")
            sp.add_argument("--alpha-target", choices=("+w", "-w", "auto"), default=None)
            sp.add_argument("--rows", choices=("1", "2", "3", "4"), default=None)

    common(sub.add_parser("field-table", help="print the labelled residue field"), code=False)
    common(sub.add_parser("make-code", help="print H and g(x)"))
    sp = sub.add_parser("encode", help="encode a message")
    common(sp)
    sp.add_argument("--message", help="k comma-separated entries")
    sp = sub.add_parser("decode", help="decode a received vector")
    common(sp)
    sp.add_argument("--vector", help="n comma-separated entries")
    sp = sub.add_parser("simulate", help="Monte-Carlo error injection")
    common(sp)
    sp.add_argument("--dist", default=None, help="error-count distribution, e.g. 1=0.5,2=0.5")
    sp.add_argument("--trials", default=None)
    sp.add_argument("--seed", default=None)
    sp.add_argument("--value-mode", choices=VALUE_MODES, default=None)
    sp.add_argument("--workers", default=None)
    sp = sub.add_parser("rate-compare", help="code-rate comparison")
    sp.add_argument("--config")
    sp.add_argument("--p")
    sp.add_argument("--k")
    sp.add_argument("--format", choices=("text", "json", "csv"), default=None)
    return parser


_DEFAULTS = {"format": "text", "rows": "1", "dist": "1=1", "trials": "1000", "seed": "0",
             "value_mode": "uniform-nonzero", "workers": "1"}


def _glue_values(argv: Sequence[str]) -> list[str]:
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.config:
            for key, value in read_config(args.config).items():
                if not hasattr(args, key):
                    raise UsageError(f"unknown config key {key!r}")
                if getattr(args, key) is None:
                    setattr(args, key, value)
        for key, value in _DEFAULTS.items():
            if hasattr(args, key) and getattr(args, key) is None:
                setattr(args, key, value)
        if getattr(args, "format", "text") not in ("text", "json", "csv"):
            raise UsageError(f"bad format {args.format!r}")
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

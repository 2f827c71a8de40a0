"""Decode the worked cases for p = 29 and p = 71 and print the outcomes."""

from __future__ import annotations

import argparse

from zwcodes import ZwInt, build_code, build_field, decode
from zwcodes.zw_ring import OMEGA


def show(title, code, received):
    f = code.field
    res = decode(code, received)
    syn = ", ".join(f"a^{code.table.dlog(s)}" if s else "0" for s in res.syndrome)
    print(f"{title}")
    print(f"  received  {[str(f.unlabel(x)) for x in received]}")
    print(f"  syndrome  ({syn})")
    print(f"  verdict   {res.verdict.value}" + (f" ({res.reason})" if res.reason else ""))
    for e in res.errors:
        print(f"  error     position {e.position}, value {f.unlabel(e.value)}")
    if res.corrected is not None and res.verdict.value == "Corrected":
        print(f"  corrected {[str(f.unlabel(x)) for x in res.corrected]}")
    if "s7" in res.details:
        print(f"  s7 = {f.unlabel(res.details['s7'])}, p7 = {f.unlabel(res.details['p7'])}")


def main(argv=None):
    argparse.ArgumentParser(description=__doc__).parse_args(argv)

    f71 = build_field(ZwInt(7, 2))
    one_row = build_code(f71, f71.label(ZwInt(2, -2)), 1)
    r = [f71.label(v) for v in (OMEGA, ZwInt(1), ZwInt(-1, 1), ZwInt(1), ZwInt(1),
                                ZwInt(0), ZwInt(0), ZwInt(0), ZwInt(1), ZwInt(1))]
    show("p=71, one row, alpha = 2-2w", one_row, r)

    f29 = build_field(ZwInt(-1, 4))
    f29.find_primitive("auto")
    a = f29.table.power
    codes = {rows: build_code(f29, f29.alpha, rows) for rows in (2, 3, 4)}
    show("p=29, two rows", codes[2], [a(1), a(2), 1, a(3)])
    show("p=29, three rows, case 1", codes[3], [a(1), a(2), 1, a(3)])
    show("p=29, three rows, case 2", codes[3], [1, a(3), 1, a(2)])
    show("p=29, three rows, case 3", codes[3], [5, 0, 0, 0])
    show("p=29, four rows, case 1", codes[4], [1, a(3), 1, a(2)])
    show("p=29, four rows, case 2", codes[4], [f29.label(ZwInt(-2, -1)), 0, 1, 0])


if __name__ == "__main__":
    main()

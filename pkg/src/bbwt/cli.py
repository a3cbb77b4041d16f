"""``bbwt`` command line: transforms, tables and a benchmark harness.

Data streams are raw bytes; position lists and traces are text with
1-based positions.
"""
from __future__ import annotations

import argparse
import os
import sys
from string import ascii_uppercase

import numpy as np

from . import bench
from .csais import (
    classify_inf_types,
    circular_suffix_array,
    induce,
    lms_inf_substrings,
    rank_lms,
    solve_sstar_order,
)
from .errors import BBWTError, NotFoundWithin
from .lyndon import composed_factorization
from .orders import Tag
from .oracle import naive_bbwt
from .transform import SENTINEL, bbwt, bbwt_order, bwt_baseline, bwt_dollar, ebwt, inverse_bbwt


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # one-line diagnostics instead of argparse's usage dump
    def error(self, message):
        raise _Usage(message)


def _read(path) -> bytes:
    if path in (None, "-"):
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _write(data: bytes, path) -> None:
    if path in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _lines(rows) -> bytes:
    return "".join(f"{r}\n" for r in rows).encode()


def show(symbols) -> str:
    """Printable rendering of a symbol run; anything else becomes \\xNN."""
    out = []
    for c in symbols:
        c = int(c)
        out.append(chr(c) if 33 <= c < 127 and c != 92 else f"\\x{c:02x}")
    return "".join(out)


# ---------------------------------------------------------------- commands


def cmd_encode(a):
    data = _read(a.input)
    _write(naive_bbwt(data) if a.oracle else bbwt(data).output, a.output)


def cmd_decode(a):
    _write(inverse_bbwt(_read(a.input)), a.output)


def cmd_factorize(a):
    cf = composed_factorization(_read(a.input))
    _write(_lines(f"{b}\t{e}\t{tau}" for b, e, tau in cf.origin_spans()), a.output)


def cmd_csa(a):
    sa = circular_suffix_array(composed_factorization(_read(a.input))).entries
    if a.binary:
        _write(sa.astype("<u8").tobytes(), a.output)
    else:
        _write(_lines(sa.tolist()), a.output)


def cmd_bwt(a):
    data = _read(a.input)
    if not a.dollar:
        _write(bwt_baseline(data), a.output)
        return
    out = bwt_dollar(data)
    if a.show_sentinel:
        out = out.replace(bytes([SENTINEL]), b"$")
    _write(out, a.output)


def _separator(text: str) -> int:
    # numbers win over characters, so "0" is NUL; a digit itself needs e.g. 0x35
    try:
        v = int(text, 0)
    except ValueError:
        if len(text) != 1:
            raise ValueError(f"separator {text!r} is neither a byte value nor one character") from None
        v = ord(text)
    if not 0 <= v < 256:
        raise ValueError(f"separator {text!r} is not a byte")
    return v


def cmd_ebwt(a):
    data = _read(a.input)
    sep = bytes([_separator(a.sep)])
    if data.endswith(sep):
        data = data[: -len(sep)]
    strings = data.split(sep) if data else []
    _write(ebwt(strings), a.output)


def cmd_order(a):
    try:
        k = bbwt_order(_read(a.input), a.max_k)
    except NotFoundWithin:
        _write(b">MAX\n", a.output)
        return
    _write(f"{k}\n".encode(), a.output)


def cmd_trace(a):
    _write(trace(_read(a.input)).encode(), a.output)


def cmd_bench(a):
    cfg = bench.BenchConfig(
        sizes=a.sizes, seed=a.seed, alphabet=a.alphabet, pattern=a.pattern, repetitions=a.repetitions
    )
    if a.output in (None, "-"):
        bench.write_csv(bench.run(cfg), sys.stdout)
    else:
        with open(a.output, "w", newline="") as fh:
            bench.write_csv(bench.run(cfg), fh)


# ---------------------------------------------------------------- trace


def _rank_label(rank, names: int) -> str:
    if rank is None:
        return "-"
    return ascii_uppercase[rank] if names <= len(ascii_uppercase) else str(rank + 1)


def trace(data: bytes) -> str:
    """TSV tables of every step on ``data``: factors, types, LMS ranks, S* order, induction."""
    cf = composed_factorization(data)
    r = cf.reduced
    n = len(r)
    pos = range(1, n + 1)
    rows = []

    def section(name):
        rows.append(f"# {name}")

    def row(*cells):
        rows.append("\t".join(str(c) for c in cells))

    section("factorization")
    row("factor", "begin", "end", "multiplicity", "content")
    for x, ((b, e, tau), f) in enumerate(zip(cf.origin_spans(), cf.factors()), 1):
        row(x, b, e, tau, show(f))

    types = classify_inf_types(cf)
    section("types")
    row("position", *pos)
    row("symbol", *(show([c]) for c in r))
    row("type", *types.labels())

    subs = lms_inf_substrings(cf, types)
    ranks, _ = rank_lms(subs)
    names = len({k for k in ranks if k is not None})
    section("lms")
    row("start", "substring", "content", "rank")
    for sub, rank in zip(subs, ranks):
        if sub.wraps:
            span = f"T[{sub.start}]" if sub.start == sub.end else f"T[{sub.start}..{sub.end}]"
            first = int(cf.starts[sub.factor - 1]) + 1
            span += f"T[{first}]"
        else:
            span = f"T[{sub.start}..{sub.end}]"
        row(sub.start, span, show(sub.content), _rank_label(rank, names))

    order = solve_sstar_order(cf, types)
    section("sstar")
    row("rank", "position", "conjugate")
    for k, p in enumerate(order, 1):
        _, b, e = cf.factor_of(p)
        row(k, p, show(np.concatenate((r[p - 1 : e], r[b - 1 : p - 1]))))

    tr = induce(cf, types, order, trace=True) if n else None
    section("buckets")
    row("symbol", "type", "begin", "end")
    if tr is not None:
        begin, sbegin = tr.bucket_begin, tr.sbucket_begin
        for c in np.flatnonzero(np.diff(begin)).tolist():
            if sbegin[c] > begin[c]:
                row(show([c]), "L", begin[c] + 1, sbegin[c])
            if begin[c + 1] > sbegin[c]:
                row(show([c]), "S", sbegin[c] + 1, begin[c + 1])

    section("induction")
    row("slot", *pos)
    if tr is not None:
        tags = types.tags

        def only(entries, keep):
            return ["" if v < 0 or not keep(tags[v]) else v + 1 for v in entries.tolist()]

        row("sstar", *only(tr.sstar_placed, lambda t: True))
        row("L", *only(tr.result, lambda t: t == Tag.L))
        row("S", *only(tr.result, lambda t: t == Tag.S))
        row("SA", *(v + 1 for v in tr.result.tolist()))
        prev = cf.prev[tr.result]
        row("SA-1", *(v + 1 for v in prev.tolist()))
        row("BBWT", *(show([c]) for c in r[prev]))
    return "\n".join(rows) + "\n"


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bbwt", description="Bijective Burrows-Wheeler transform tools.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, func, help, output=True, input=True):
        c = sub.add_parser(name, help=help, description=help)
        if input:
            c.add_argument("input", nargs="?", help="input file (default: stdin)")
        if output:
            c.add_argument("-o", "--output", help="output file (default: stdout)")
        c.set_defaults(func=func)
        return c

    c = command("encode", cmd_encode, "BBWT of the input bytes")
    c.add_argument("--oracle", action="store_true", help="use the quadratic reference instead")
    command("decode", cmd_decode, "invert the BBWT")
    command("factorize", cmd_factorize, "composed Lyndon factorization as begin, end, multiplicity")
    c = command("csa", cmd_csa, "circular suffix array of the distinct Lyndon factors")
    c.add_argument("--binary", action="store_true", help="64-bit little-endian instead of decimal lines")
    c = command("bwt", cmd_bwt, "classical BWT via the suffix array")
    c.add_argument("--dollar", action="store_true", help="BWT of T$ with byte 0 as the terminator")
    c.add_argument("--show-sentinel", action="store_true", help="print the terminator as '$'")
    c = command("ebwt", cmd_ebwt, "extended BWT of separator-delimited primitive strings")
    c.add_argument("--sep", default="0", help="separator byte as a number (0, 10, 0x2c) or a single non-digit character (default: 0)")
    c = command("order", cmd_order, "number of BBWT applications that return to the input")
    c.add_argument("--max-k", type=int, default=10**6, help="give up after this many steps")
    command("trace", cmd_trace, "TSV tables of every step of the construction")

    c = command("bench", cmd_bench, "time bbwt on generated inputs, CSV out", input=False)
    c.add_argument("--sizes", type=int, nargs="+", default=[1 << 16, 1 << 18, 1 << 20])
    c.add_argument("--seed", type=lambda v: int(v, 0), default=0x5EED)
    c.add_argument("--alphabet", type=int, choices=bench.ALPHABETS, default=256)
    c.add_argument("--pattern", choices=bench.PATTERNS, default="random")
    c.add_argument("--repetitions", type=int, default=5)
    return p


def _diagnostic(message: str) -> None:
    head = "bbwt: error:"
    if os.environ.get("BBWT_COLOR") == "1":
        head = f"\x1b[31m{head}\x1b[0m"
    first = message.strip().splitlines()[0] if message.strip() else "failed"
    print(f"{head} {first}", file=sys.stderr)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        args.func(args)
    except _Usage as exc:
        _diagnostic(str(exc))
        return 2
    except (BBWTError, ValueError, OSError) as exc:
        _diagnostic(str(exc) or type(exc).__name__)
        return 1
    except KeyboardInterrupt:
        return 130
    return 0


if __name__ == "__main__":
    sys.exit(main())

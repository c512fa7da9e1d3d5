"""Command-line surface: construct codes, check their properties, certify
GCI orders, classify small lengths, and evaluate the counting formulas.

All output is line-oriented ``key=value`` text.  Exit codes: 0 for any
successful evaluation (including negative answers such as ``cis=no``), 2 for
usage, parse, or budget failures.
"""

from __future__ import annotations

import argparse
import sys
from typing import IO

from . import classify as classify_mod
from . import z4 as z4_mod
from .cis import (
    CisCertificate,
    export_sbox,
    extract_permutation,
    find_cis_partition,
    gci_order_dual,
    gci_order_walsh,
    is_cis_systematic,
    quick_reject,
)
from .constructions import (
    brute_B,
    build_up,
    cyclic_code,
    double_circulant,
    extend_parity,
    paley_cis,
    shorten,
    vg_bound_M,
)
from .errors import CiskitError
from .formats import read_code, write_code
from .gf2 import BitVector, Gf2Poly
from .z4 import binary_image, octacode, z4_permutation, z4_qr_code

_CONSTRUCT_KINDS = (
    "double-circulant",
    "paley",
    "cyclic-shorten",
    "cyclic-extend",
    "buildup",
    "z4-qr",
    "octacode",
)


def _open_in(path: str) -> IO[str]:
    return sys.stdin if path == "-" else open(path)


def _read_any(path: str):
    """Read a bin or z4 file; returns LinearCode or Z4FreeCode."""
    fp = _open_in(path)
    try:
        head = fp.readline()
        rest = fp.read()
    finally:
        if fp is not sys.stdin:
            fp.close()
    import io

    buf = io.StringIO(head + rest)
    token = head.split()[0] if head.split() else ""
    if token == "bin":
        return read_code(buf)
    if token == "z4":
        m = z4_mod.read_z4(buf)
        k = m.nrows
        if m.ncols != 2 * k:
            raise ValueError("z4 file must hold a systematic (I|A) generator")
        left = z4_mod.Z4Matrix(m.array()[:, :k])
        if left != z4_mod.Z4Matrix.identity(k):
            raise ValueError("z4 generator must start with the identity block")
        return z4_mod.Z4FreeCode(z4_mod.Z4Matrix(m.array()[:, k:]))
    raise ValueError(f"unknown file header {token!r}")


def _poly(arg: str) -> Gf2Poly:
    return Gf2Poly.from_string(arg)


def _cmd_construct(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "double-circulant":
        if args.n is None or args.f is None:
            raise ValueError("double-circulant needs --n and --f")
        result = double_circulant(_poly(args.f), args.n)
        write_code(result.code, sys.stdout)
    elif kind == "paley":
        if args.q is None:
            raise ValueError("paley needs --q")
        write_code(paley_cis(args.q), sys.stdout)
    elif kind == "cyclic-shorten":
        if args.N is None or args.g is None:
            raise ValueError("cyclic-shorten needs --N and --g")
        code = cyclic_code(args.N, _poly(args.g))
        index = 0 if args.at == "first" else code.length - 1
        write_code(shorten(code, index), sys.stdout)
    elif kind == "cyclic-extend":
        if args.N is None or args.g is None:
            raise ValueError("cyclic-extend needs --N and --g")
        write_code(extend_parity(cyclic_code(args.N, _poly(args.g))), sys.stdout)
    elif kind == "buildup":
        if args.base is None or args.x is None or args.y is None:
            raise ValueError("buildup needs --base, --x and --y")
        with _open_in(args.base) as fp:
            base = read_code(fp)
        result = build_up(
            base, BitVector.from_string(args.x), BitVector.from_string(args.y)
        )
        write_code(result.code, sys.stdout)
    elif kind == "z4-qr":
        if args.p is None:
            raise ValueError("z4-qr needs --p")
        z4_mod.write_z4(z4_qr_code(args.p).generator(), sys.stdout)
    elif kind == "octacode":
        z4_mod.write_z4(octacode().generator(), sys.stdout)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown kind {kind}")
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    code = _read_any(args.file)
    if isinstance(code, z4_mod.Z4FreeCode):
        if args.what in ("cis", "cis-systematic"):
            print("cis=" + ("yes" if z4_mod.is_free_cis_z4(code) else "no"))
            return 0
        raise ValueError(f"check {args.what} expects a binary code file")
    what = args.what
    if what == "cis-systematic":
        print("cis=" + ("yes" if is_cis_systematic(code) else "no"))
    elif what == "cis":
        reason = quick_reject(code)
        if reason is not None:
            print(f"cis=no reason={reason}")
            return 0
        res = find_cis_partition(code)
        if isinstance(res, CisCertificate):
            left = ",".join(str(i) for i in res.left)
            right = ",".join(str(i) for i in res.right)
            print(f"cis=yes left={left} right={right}")
        else:
            cols = ",".join(str(i) for i in res.columns)
            print(f"cis=no reason={res.reason} witness={cols} witness-rank={res.rank}")
    elif what == "self-dual":
        print("self-dual=" + ("yes" if code.is_self_dual() else "no"))
    elif what == "fsd":
        print("fsd=" + ("yes" if code.is_formally_self_dual() else "no"))
    elif what == "distance":
        print(f"distance={code.min_distance()}")
    elif what == "dual-distance":
        print(f"dual-distance={code.dual_distance()}")
    else:  # pragma: no cover
        raise ValueError(f"unknown check {what}")
    return 0


def _cmd_gci(args: argparse.Namespace) -> int:
    obj = _read_any(args.file)
    if isinstance(obj, z4_mod.Z4FreeCode):
        f = z4_permutation(obj)
        dual_order = binary_image(obj).dual_distance()
    else:
        f = extract_permutation(obj)
        dual_order = gci_order_dual(f)
    report = gci_order_walsh(f)
    agreement = "yes" if report.order == dual_order else "no"
    print(
        f"gci-order={report.order} method=walsh crosscheck=dual-distance "
        f"agreement={agreement}"
    )
    if args.export:
        with open(args.export, "w") as fp:
            export_sbox(f, fp)
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    length = args.length
    if length % 2 or length < 2 or length > 12:
        raise ValueError("classify supports even lengths 2..12")
    n = length // 2
    if args.method == "exhaustive":
        report = classify_mod.classify_exhaustive(n)
    else:
        report = classify_mod.classify_buildup(n, jobs=args.jobs)
    counts = report.d_counts()
    parts = [f"len={length}", f"total={report.total}"]
    for d in sorted(counts):
        parts.append(f"d{d}={counts[d]}")
    print(" ".join(parts))
    if args.out:
        with open(args.out, "w") as fp:
            classify_mod.write_report(report, fp)
    return 0


def _cmd_masscheck(args: argparse.Namespace) -> int:
    n = args.n
    report = classify_mod.classify_buildup(n)
    mc = classify_mod.mass_check(report, n)
    total = sum(mc.per_class)
    print(f"gn={mc.gn} sum={total} complete=" + ("yes" if mc.complete else "no"))
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    m = vg_bound_M(args.n, args.d)
    if args.n <= 4:
        print(f"M={m} B={brute_B(args.n, args.d)}")
    else:
        print(f"M={m}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ciskit",
        description="complementary-information-set codes: construct, check, classify",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit a generator matrix to stdout")
    c.add_argument("kind", choices=_CONSTRUCT_KINDS)
    c.add_argument("--n", type=int, help="half-length for double-circulant")
    c.add_argument("--f", help="polynomial, lowest-degree-first 0/1 string")
    c.add_argument("--q", type=int, help="odd prime for paley")
    c.add_argument("--N", type=int, help="cyclic code length")
    c.add_argument("--g", help="generator polynomial, lowest-first 0/1 string")
    c.add_argument("--at", choices=("first", "last"), default="first")
    c.add_argument("--base", help="base code file for buildup ('-' for stdin)")
    c.add_argument("--x", help="buildup x vector as 0/1 string")
    c.add_argument("--y", help="buildup y vector as 0/1 string")
    c.add_argument("--p", type=int, help="prime = +-1 mod 8 for z4-qr")
    c.set_defaults(func=_cmd_construct)

    k = sub.add_parser("check", help="evaluate a property of a code file")
    k.add_argument("file", help="code file path or '-' for stdin")
    k.add_argument(
        "--what",
        required=True,
        choices=("cis", "cis-systematic", "self-dual", "fsd", "distance", "dual-distance"),
    )
    k.set_defaults(func=_cmd_check)

    g = sub.add_parser("gci", help="certify the GCI order of a systematic CIS code")
    g.add_argument("file", help="bin or z4 code file, or '-' for stdin")
    g.add_argument("--export", help="write the permutation in s-box format")
    g.set_defaults(func=_cmd_gci)

    cl = sub.add_parser("classify", help="classify CIS codes of a given length")
    cl.add_argument("--length", type=int, required=True)
    cl.add_argument("--method", choices=("exhaustive", "buildup"), default="buildup")
    cl.add_argument("--out", help="write the class list to this file")
    cl.add_argument("--jobs", type=int, default=1)
    cl.set_defaults(func=_cmd_classify)

    mcp = sub.add_parser("masscheck", help="verify the counting formula for small n")
    mcp.add_argument("--n", type=int, required=True)
    mcp.set_defaults(func=_cmd_masscheck)

    b = sub.add_parser("bounds", help="evaluate M(n,d) and, for n<=4, B(n,d)")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--d", type=int, required=True)
    b.set_defaults(func=_cmd_bounds)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CiskitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

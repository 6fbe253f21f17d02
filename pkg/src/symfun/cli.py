"""Command-line front end.

Exit codes: 0 success, 1 self-test verdict failed, 2 bad arguments,
3 not a basis state / not factorable, 4 promise violated, 5 size cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import boolfn, identify, statesim, synth
from .errors import NotBasis, NotFactorable, PromiseViolated, SizeCapExceeded, SymfunError
from .factor import factor_state
from .selftest import Fault, selftest

EXIT_OK, EXIT_VERDICT, EXIT_USAGE, EXIT_NOT_BASIS, EXIT_PROMISE, EXIT_CAP = 0, 1, 2, 3, 4, 5


def _dump(obj) -> None:
    print(json.dumps(obj))


def _table(args, n: int | None) -> boolfn.TruthTable:
    if args.id is not None:
        if n is None:
            raise ValueError("--id needs --n")
        return synth.FunctionId.parse(args.id, n).table()
    if args.f is None:
        raise ValueError("give a function with --f HEX or --id LETTER")
    return boolfn.TruthTable.from_hex(args.f, n)


def _width(bits: str) -> int:
    if not bits or set(bits) - {"0", "1"}:
        raise ValueError(f"not a bit string: {bits!r}")
    return len(bits)


def _rows(tt: boolfn.TruthTable) -> dict:
    row = {"bin": tt.bin(), "dec": tt.value}
    row["hex"] = boolfn.format_table(tt, "hex") if tt.n >= 2 else None
    row["affine"] = str(boolfn.to_affine(tt))
    row["class"] = str(boolfn.classify(tt))
    return row


def cmd_family(args) -> int:
    fam = boolfn.Family(args.n, args.order, args.max_n)
    rows = [_rows(tt) for tt in fam]
    if args.format == "json":
        _dump({"n": args.n, "order": args.order, "members": rows})
    elif args.format == "csv":
        w = csv.DictWriter(sys.stdout, ["class", "affine", "bin", "hex", "dec"], lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    else:
        width = max(len(r["affine"]) for r in rows)
        print(f"{'f':<{width}}  {'class':<8}  {'bin':<{1 << args.n}}  {'hex':<{max(3, (1 << args.n) // 4)}}  dec")
        for r in rows:
            print(f"{r['affine']:<{width}}  {r['class']:<8}  {r['bin']:<{1 << args.n}}  "
                  f"{r['hex'] or '-':<{max(3, (1 << args.n) // 4)}}  {r['dec']}")
    return EXIT_OK


def cmd_classify(args) -> int:
    tt = _table(args, args.n)
    kind = boolfn.classify(tt)
    if args.format == "json":
        out = {"n": tt.n, "hex": tt.to_json()["hex"], "class": str(kind)}
        if kind is not boolfn.Classification.NEITHER:
            af = boolfn.to_affine(tt)
            out.update(mask=format(af.mask, f"0{tt.n}b"), constant=af.constant)
        _dump(out)
    else:
        print(kind)
    return EXIT_OK


def cmd_capacity(args) -> int:
    value = boolfn.capacity(args.n)
    check = value == 3 ** args.n
    if args.format == "json":
        _dump({"n": args.n, "capacity": value, "equals_3_pow_n": check})
    else:
        print(f"{value} = 3^{args.n}" if check else f"{value} != 3^{args.n}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    n = args.n if args.n is not None else _width(args.x)
    if _width(args.x) != n:
        raise ValueError(f"--x has {len(args.x)} bits but n={n}")
    boolfn.check_size(n, args.max_n)
    tt = _table(args, n)
    out = statesim.sandwich(tt, int(args.x, 2), args.sign)
    try:
        ket = statesim.read_basis(out)
    except NotBasis:
        if args.format == "json":
            _dump({"state": out.to_json(), "ket": None})
        else:
            print(out)
            print("not a basis state", file=sys.stderr)
        return EXIT_NOT_BASIS
    if args.format == "json":
        _dump({"state": out.to_json(), "ket": {"bits": ket.bitstring(), "sign": ket.sign}})
    else:
        print(ket)
    return EXIT_OK


def cmd_factor(args) -> int:
    text = sys.stdin.read() if args.state == "-" else args.state
    sv = statesim.StateVector.from_json(json.loads(text))
    try:
        res = factor_state(sv)
    except NotFactorable as exc:
        print(f"NotFactorable: {exc}", file=sys.stderr)
        return EXIT_NOT_BASIS
    _dump(res.to_json())
    return EXIT_OK


def cmd_identify(args) -> int:
    boolfn.check_size(args.n, args.max_n)
    tt = boolfn.TruthTable.from_hex(args.hidden, args.n)
    if args.mode in ("amplitude", "measured"):
        oracle = identify.HiddenOracle.hiding(tt)
        if args.mode == "amplitude":
            res = identify.identify_amplitude(oracle)
        else:
            res = identify.identify_measured(oracle, args.seed)
        _dump(res.to_json())
        return EXIT_OK
    bit_oracle = identify.BitOracle.hiding(tt)
    if args.mode == "classical-naive":
        table, q = identify.classical_identify_naive(bit_oracle, args.n)
        kind = boolfn.classify(table)
        if kind is boolfn.Classification.NEITHER:
            raise PromiseViolated("hidden function is not a family member")
        af = boolfn.to_affine(table)
    else:
        af, q = identify.classical_identify_affine(bit_oracle, args.n)
    _dump({"mask": format(af.mask, f"0{args.n}b"), "constant": af.constant, "queries": q})
    return EXIT_OK


def _print_network(net: synth.FlipNetwork) -> None:
    text = net.to_text()
    if text:
        print(text)


def cmd_synth(args) -> int:
    if args.synth_cmd == "function":
        af, tt, fid = synth.solve_function(args.x, args.y)
        if args.format == "json":
            _dump({"mask": format(af.mask, f"0{af.n}b"), "hex": tt.to_json()["hex"], "id": fid.letter,
                   "network": synth.synthesize(af).to_text().splitlines()})
        else:
            hexpat = boolfn.format_table(tt, "hex") if tt.n >= 2 else tt.bin()
            print(f"f = {af}  pattern {hexpat}  id {fid}")
            _print_network(synth.synthesize(af))
        return EXIT_OK
    n = _width(args.x)
    tt = _table(args, n)
    y = synth.solve_output(args.x, tt)
    ket = statesim.BasisKet(n + 1, (y << 1) | 1)
    if args.format == "json":
        _dump({"y": format(y, f"0{n}b"), "ket": ket.bitstring()})
    else:
        print(ket)
        _print_network(synth.synthesize(boolfn.to_affine(tt)))
    return EXIT_OK


def cmd_table5(args) -> int:
    n = args.n
    labels = synth.table5_labels(n)
    heads = [format(x, f"0{n}b") + "1" for x in range(1 << n)]
    if args.format == "json":
        _dump({"n": n, "inputs": heads, "outputs": heads, "ids": labels})
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["y\\x"] + heads)
        for h, row in zip(heads, labels):
            w.writerow([h] + row)
        sys.stdout.write(buf.getvalue())
    else:
        cell = max(n + 1, max(len(c) for row in labels for c in row))
        print(" " * (n + 1) + "  " + " ".join(h.rjust(cell) for h in heads))
        for h, row in zip(heads, labels):
            print(h + "  " + " ".join(c.rjust(cell) for c in row))
    return EXIT_OK


def cmd_table1(args) -> int:
    fam = boolfn.construct_family(args.n)
    outs = [statesim.sandwich(tt, 0) for tt in fam]
    heads = [f"f_{boolfn.format_table(tt, 'hex') if tt.n >= 2 else tt.bin()}" for tt in fam]
    if args.format == "json":
        _dump({"n": args.n, "functions": [tt.bin() for tt in fam],
               "psi": [o.amps.tolist() for o in outs]})
        return EXIT_OK
    print("row   " + " ".join(h.rjust(4) for h in heads))
    for x in range(1 << args.n):
        print(f"{x:0{args.n}b}".ljust(6) + " ".join(str(tt[x]).rjust(4) for tt in fam))
    for k in range(1 << (args.n + 1)):
        print(f"psi_{k}".ljust(6) + " ".join(str(int(o.amps[k])).rjust(4) for o in outs))
    return EXIT_OK


def cmd_selftest(args) -> int:
    fault = Fault.parse(args.fault) if args.fault else None
    report = selftest(args.n, fault, max_cases=args.max_cases, seed=args.seed, max_n=args.max_n)
    if args.format == "json":
        _dump(report.to_json())
    else:
        print(report.summary())
        for f in report.failures[:10]:
            print(f"  f={f.function} x={f.x:0{args.n}b}: {f.reason}")
    # with a fault injected, success means the fault was detected
    detected_ok = (not report.ok) if fault else report.ok
    return EXIT_OK if detected_ok else EXIT_VERDICT


def cmd_bench(args) -> int:
    rows = []
    for n in args.n:
        boolfn.check_size(n, args.max_n)
        fam = boolfn.construct_family(n)
        t0 = time.perf_counter()
        ok = 0
        for i in range(len(fam)):
            tt = fam[i]
            res = identify.identify_amplitude(identify.HiddenOracle.hiding(tt))
            ok += res.affine() == fam.affine(i)
        elapsed = time.perf_counter() - t0
        rows.append({"n": n, "functions": len(fam), "identified": ok, "seconds": round(elapsed, 4),
                     **identify.query_counts(n)})
    if args.format == "json":
        _dump(rows)
    else:
        for r in rows:
            print(f"n={r['n']:<3} functions={r['functions']:<6} identified={r['identified']:<6} "
                  f"queries quantum={r['quantum']} affine={r['classical-affine']} "
                  f"naive={r['classical-naive']}  {r['seconds']:.3f}s")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symfun", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--max-n", type=int, default=None,
                   help=f"override the size cap (default {boolfn.DEFAULT_MAX_N}, env {boolfn.MAX_N_ENV})")
    sub = p.add_subparsers(dest="cmd", required=True)

    def fmt(sp, choices=("text", "json")):
        sp.add_argument("--format", choices=choices, default="text")

    def selector(sp):
        sp.add_argument("--f", help="truth table in hex")
        sp.add_argument("--id", help="positive function id letter (a, b, ...)")

    sp = sub.add_parser("family", help="list the family for n")
    sp.add_argument("--n", type=int, default=2)
    sp.add_argument("--order", choices=("canonical", "generation"), default="canonical")
    fmt(sp, ("text", "json", "csv"))
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("classify", help="Positive / Negative / Neither")
    selector(sp)
    sp.add_argument("--n", type=int)
    fmt(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("capacity", help="sum of C(n,i) 2^(n-i)")
    sp.add_argument("--n", type=int, required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_capacity)

    sp = sub.add_parser("simulate", help="run the Hadamard-oracle-Hadamard pipeline")
    selector(sp)
    sp.add_argument("--x", required=True, help="input data bits, e.g. 00")
    sp.add_argument("--n", type=int)
    sp.add_argument("--sign", type=int, choices=(1, -1), default=1)
    fmt(sp)
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("factor", help="factor a JSON state {m, s, amps}")
    sp.add_argument("--state", required=True, help="JSON text, or - for stdin")
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("identify", help="identify a hidden family member")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--hidden", required=True, help="hidden truth table in hex")
    sp.add_argument("--mode", choices=("amplitude", "measured", "classical-naive", "classical-affine"),
                    default="amplitude")
    sp.add_argument("--seed", type=int, default=None)
    sp.set_defaults(func=cmd_identify)

    sp = sub.add_parser("synth", help="flip-network design problems")
    ssub = sp.add_subparsers(dest="synth_cmd", required=True)
    s1 = ssub.add_parser("function", help="function taking x to y")
    s1.add_argument("--x", required=True)
    s1.add_argument("--y", required=True)
    fmt(s1)
    s2 = ssub.add_parser("output", help="output of a positive function on x")
    s2.add_argument("--x", required=True)
    selector(s2)
    fmt(s2)
    sp.set_defaults(func=cmd_synth)

    sp = sub.add_parser("table1", help="reproduce the n=2 output table")
    sp.add_argument("--n", type=int, default=2)
    fmt(sp)
    sp.set_defaults(func=cmd_table1)

    sp = sub.add_parser("table5", help="id table indexed by input and output")
    sp.add_argument("--n", type=int, default=4)
    fmt(sp, ("text", "csv", "json"))
    sp.set_defaults(func=cmd_table5)

    sp = sub.add_parser("selftest", help="pipeline self-test with optional fault")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--fault", help="drop-stage:K | skip-swap:X | flip-sign:K")
    sp.add_argument("--max-cases", type=int, default=1 << 16)
    sp.add_argument("--seed", type=int, default=0)
    fmt(sp)
    sp.set_defaults(func=cmd_selftest)

    sp = sub.add_parser("bench", help="identify every member, record query counts")
    sp.add_argument("--n", type=int, nargs="+", required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (NotBasis, NotFactorable) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NOT_BASIS
    except PromiseViolated as exc:
        print(f"error: PromiseViolated: {exc}", file=sys.stderr)
        return EXIT_PROMISE
    except (SymfunError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

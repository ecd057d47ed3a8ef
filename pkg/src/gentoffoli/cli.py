"""Command-line front end.

    gentoffoli decompose cnx --controls 7 --ancilla 3 --kind dirty --stats
    gentoffoli decompose fanout --targets 8 --ancilla 1 --kind clean --format json
    gentoffoli verify cnx --controls 6 --ancilla 2 --kind clean --lower
    gentoffoli sweep --controls 30 --kind clean --metric toffoli --out clean.csv
    gentoffoli table --controls 20 --ancilla 6

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 unsupported
instance.
"""
from __future__ import annotations

import argparse
import io
import json
import sys
from typing import Sequence

from .circuit import CircuitError, gate_counts, toffoli_depth, two_qubit_depth
from .clean_dp import CleanDecomposer, DpState, UnsupportedInstance
from .primitives import lower_toffoli
from .qasm import to_qasm
from .synth import cnx, fanout
from .verify import MAX_UNITARY_QUBITS, unitary_equal, verify_cnx, verify_multi_target

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _add_instance_args(p: argparse.ArgumentParser, gate: str) -> None:
    size = "--controls" if gate == "cnx" else "--targets"
    p.add_argument(size, dest="n", type=int, required=True)
    p.add_argument("--ancilla", dest="m", type=int, default=0)
    p.add_argument("--kind", choices=["clean", "dirty"], required=True)
    p.add_argument("--lower", action="store_true", help="rewrite Toffolis into CNOT + H/T/Tdg")


def _parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gentoffoli", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name in ("decompose", "verify"):
        cmd = sub.add_parser(name)
        gates = cmd.add_subparsers(dest="gate", required=True, parser_class=_Parser)
        for gate in ("cnx", "fanout"):
            p = gates.add_parser(gate)
            _add_instance_args(p, gate)
            p.add_argument("--out", help="write to this file instead of stdout")
            if name == "decompose":
                p.add_argument("--format", choices=["qasm", "json"], default="qasm")
                p.add_argument("--stats", action="store_true", help="print statistics to stderr")
                p.add_argument("--stats-file", help="write statistics as CSV")

    sw = sub.add_parser("sweep")
    sw.add_argument("--controls", dest="n", type=int, required=True)
    sw.add_argument("--kind", choices=["clean", "dirty"], required=True)
    sw.add_argument("--gate", choices=["cnx", "fanout"], default="cnx")
    sw.add_argument("--metric", choices=["toffoli", "cnot"],
                    help="default: toffoli for cnx, cnot for fanout")
    sw.add_argument("--out")

    tb = sub.add_parser("table")
    tb.add_argument("--controls", dest="n", type=int, required=True)
    tb.add_argument("--ancilla", dest="m", type=int, required=True)
    tb.add_argument("--out")
    return parser


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _build(args):
    if args.n < 0 or args.m < 0:
        raise _UsageError("counts must be non-negative")
    if args.gate == "cnx":
        return cnx(args.n, args.m, args.kind)
    if args.n < 1:
        raise _UsageError("fanout needs at least one target")
    return fanout(args.n, args.m, args.kind)


def _stats(args, dec, lowered) -> list[tuple[str, object]]:
    circuit = dec.circuit
    rows: list[tuple[str, object]] = [
        ("gate", args.gate),
        ("kind", args.kind),
        ("n", args.n),
        ("m", args.m),
        ("bound", dec.bound),
    ]
    if args.gate == "fanout":
        rows.append(("m_used", dec.spec.m_used))
    rows.append(("toffoli_depth", toffoli_depth(circuit)))
    if lowered is not None:
        rows.append(("two_qubit_depth", two_qubit_depth(lowered)))
    elif args.gate == "fanout":
        rows.append(("two_qubit_depth", two_qubit_depth(circuit)))
    for kind, count in gate_counts(lowered if lowered is not None else circuit).items():
        rows.append((f"count_{kind}", count))
    return rows


def _cmd_decompose(args) -> int:
    dec = _build(args)
    lowered = lower_toffoli(dec.circuit) if args.lower else None
    out = lowered if lowered is not None else dec.circuit
    text = to_qasm(out) if args.format == "qasm" else out.to_json(indent=1) + "\n"
    _emit(text, args.out)
    if args.stats or args.stats_file:
        rows = _stats(args, dec, lowered)
        if args.stats:
            for key, value in rows:
                print(f"{key}={value}", file=sys.stderr)
        if args.stats_file:
            _emit("key,value\n" + "".join(f"{k},{v}\n" for k, v in rows), args.stats_file)
    return EXIT_OK


def _cmd_verify(args) -> int:
    dec = _build(args)
    if args.gate == "cnx":
        report = verify_cnx(dec.circuit)
    else:
        report = verify_multi_target(dec.circuit, dec.spec)
    ok = report.ok
    body = {"gate": args.gate, "kind": args.kind, "n": args.n, "m": args.m, **report.to_dict()}
    if args.lower:
        if dec.circuit.num_qubits <= MAX_UNITARY_QUBITS:
            same = unitary_equal(dec.circuit, lower_toffoli(dec.circuit), 1e-9)
            ok = ok and same
        else:
            same = None
        body["unitary_equal"] = same
    body["ok"] = ok
    _emit(json.dumps(body, indent=1) + "\n", args.out)
    return EXIT_OK if ok else EXIT_FAILED


def sweep_rows(n: int, kind: str, gate: str = "cnx", metric: str = "toffoli") -> list[tuple]:
    """``(m, bound, measured_depth)`` for ``m = 0 .. n-2``.

    Instances with no construction (``C^nX``, ``n >= 3``, no ancilla) give
    empty bound and depth fields.
    """
    if gate == "fanout" and metric == "toffoli":
        raise _UsageError("fanout circuits contain no Toffolis; use --metric cnot")
    dp = CleanDecomposer()
    rows = []
    for m in range(0, max(n - 2, 0) + 1):
        try:
            dec = cnx(n, m, kind, dp) if gate == "cnx" else fanout(n, m, kind)
        except UnsupportedInstance:
            rows.append((m, "", ""))
            continue
        if gate == "fanout":
            rows.append((m, dec.bound, two_qubit_depth(dec.circuit)))
        elif metric == "toffoli":
            rows.append((m, dec.bound, toffoli_depth(dec.circuit)))
        else:
            # a lowered Toffoli is 6 CNOTs deep, so 6x the Toffoli bound still bounds
            rows.append((m, 6 * dec.bound, two_qubit_depth(lower_toffoli(dec.circuit))))
    return rows


def _cmd_sweep(args) -> int:
    metric = args.metric or ("toffoli" if args.gate == "cnx" else "cnot")
    rows = sweep_rows(args.n, args.kind, args.gate, metric)
    buf = io.StringIO()
    buf.write("m,bound,measured_depth\n")
    for row in rows:
        buf.write(",".join(map(str, row)) + "\n")
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


def _cmd_table(args) -> int:
    if args.n < 0 or args.m < 0:
        raise _UsageError("counts must be non-negative")
    dp = CleanDecomposer()
    dp.depth_bound(DpState(args.n, args.m, 0))
    buf = io.StringIO()
    buf.write("n,m,d,bound,choice\n")
    for state, entry in dp.table():
        bound = "" if not entry.feasible else int(entry.bound)
        buf.write(f"{state.n},{state.m},{state.d},{bound},{entry.choice}\n")
    _emit(buf.getvalue(), args.out)
    return EXIT_OK


_COMMANDS = {
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "table": _cmd_table,
}


def run(argv: Sequence[str]) -> int:
    try:
        args = _parser().parse_args(list(argv))
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"gentoffoli: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedInstance as exc:
        print(f"gentoffoli: unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except CircuitError as exc:
        print(f"gentoffoli: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

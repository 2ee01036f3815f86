"""Command-line surface.

Subcommands: ``verify``, ``search``, ``enumerate``, ``canon``, ``audit``.
Results go to stdout, diagnostics to stderr.  Exit codes are a total
function of the outcome category:

    0  success (valid input, exhaustive search, decision answered, audits pass)
    1  malformed input or invalid flag combination
    2  spread violation
    3  truncated search / incomplete enumeration
    4  internal-consistency or audit failure

Search results serialize as one JSON object per line; when the searched
(d, k, mode) falls inside a family with a published exact value, the
result is compared against the known-values table and a MATCH or
MISMATCH line is printed (only for exhaustive runs).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .canon import canonical_form
from .core import (
    CodeParams,
    MalformedSequenceError,
    Word,
    as_word,
    delta,
    format_sequence,
    parse_sequence,
    segment_labels,
)
from .search import (
    IncompleteEnumerationError,
    SearchOptions,
    SearchRecord,
    enumerate_max,
    family_symmetric_max,
    max_length,
    symmetric_max,
)
from .tables import lookup
from .verify import (
    InapplicableError,
    InternalConsistencyError,
    StructuralError,
    audit_delta_inequalities,
    bit_runs,
    check_spread,
    check_window_bitrun_property,
    is_symmetric,
    normalize_to_bitrun_form,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VIOLATION = 2
EXIT_TRUNCATED = 3
EXIT_INCONSISTENT = 4


@dataclass(frozen=True)
class CodeRecord:
    """One stored code: parameters, transitions, and provenance flags."""

    d: int
    k: int
    n: int
    transitions: Word
    symmetric: bool
    canonical: bool
    source: str

    def to_json_line(self) -> str:
        obj = {
            "d": self.d,
            "k": self.k,
            "n": self.n,
            "transitions": list(self.transitions),
            "symmetric": self.symmetric,
            "canonical": self.canonical,
            "source": self.source,
        }
        return json.dumps(obj, separators=(",", ":"))

    @classmethod
    def from_json_line(cls, line: str) -> "CodeRecord":
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MalformedSequenceError(f"bad JSON record: {exc}") from None
        if not isinstance(obj, dict):
            raise MalformedSequenceError("record is not a JSON object")
        try:
            transitions = as_word(obj["transitions"])
            record = cls(
                d=int(obj["d"]),
                k=int(obj["k"]),
                n=int(obj["n"]),
                transitions=transitions,
                symmetric=bool(obj["symmetric"]),
                canonical=bool(obj["canonical"]),
                source=str(obj["source"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedSequenceError(f"bad record field: {exc}") from None
        if record.n != len(record.transitions):
            raise MalformedSequenceError(
                f"record claims n={record.n} but has {len(record.transitions)} transitions"
            )
        if record.source not in ("searched", "user", "table"):
            raise MalformedSequenceError(f"unknown source {record.source!r}")
        return record


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read_sequence(args) -> Word:
    if args.seq is not None:
        text = args.seq
    else:
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_sequence(text, args.d)


def _cmd_verify(args) -> int:
    try:
        params = CodeParams(args.d, args.k)
        word = _read_sequence(args)
    except (MalformedSequenceError, ValueError, OSError) as exc:
        _err(f"verify: {exc}")
        return EXIT_INPUT
    try:
        report = check_spread(word, params)
    except StructuralError as exc:
        _err(f"verify: {exc}")
        return EXIT_INPUT
    if report is not None:
        print(report.to_line())
        return EXIT_VIOLATION
    runs = bit_runs(word)
    sym = "yes" if is_symmetric(word) else "no"
    print(f"valid n={len(word)} longest_bit_run={runs.longest} symmetric={sym}")
    return EXIT_OK


def _search_options(args) -> SearchOptions:
    return SearchOptions(
        target=args.target,
        max_length=args.max_length,
        node_budget=args.node_budget,
        time_limit=args.time_limit,
        workers=args.threads,
    )


def _run_search_command(args) -> SearchRecord:
    params = CodeParams(args.d, args.k)
    options = _search_options(args)
    if args.family_l is not None:
        return family_symmetric_max(params, args.family_l, options)
    if args.symmetric:
        return symmetric_max(params, options)
    return max_length(params, options)


def _mode_of(args) -> tuple[str, int | None]:
    if args.family_l is not None:
        return "family", args.family_l
    if args.symmetric:
        return "symmetric", None
    return "general", None


def _cmd_search(args) -> int:
    try:
        record = _run_search_command(args)
    except ValueError as exc:
        _err(f"search: {exc}")
        return EXIT_INPUT
    line = json.dumps(record.to_json_obj(), separators=(",", ":"))
    print(line)
    if args.out:
        try:
            with open(args.out, "a", encoding="utf-8") as fh:
                fh.write(line + "\n")
        except OSError as exc:
            _err(f"search: cannot append to {args.out}: {exc}")
            return EXIT_INPUT
    mode, l = _mode_of(args)
    if record.exhaustive:
        known = lookup(record.params, mode, l)
        if known is not None:
            verdict = "MATCH" if record.n == known.expected_length else "MISMATCH"
            print(f"{verdict} n={record.n} expected={known.expected_length} ({known.label})")
    if record.stop_reason in ("complete", "target"):
        if args.target is not None:
            reached = "yes" if record.n >= args.target else "no"
            print(f"target={args.target} reached={reached}")
        return EXIT_OK
    _err(f"search: truncated ({record.stop_reason}); result is not exhaustive")
    return EXIT_TRUNCATED


def _cmd_enumerate(args) -> int:
    try:
        params = CodeParams(args.d, args.k)
        options = _search_options(args)
        mode, l = _mode_of(args)
        classes = enumerate_max(params, options, mode=mode, l=l)
    except IncompleteEnumerationError as exc:
        _err(f"enumerate: {exc}")
        return EXIT_TRUNCATED
    except ValueError as exc:
        _err(f"enumerate: {exc}")
        return EXIT_INPUT
    for cls in classes:
        print(f"{format_sequence(cls.representative.word)} {cls.count}")
    return EXIT_OK


def _cmd_canon(args) -> int:
    try:
        word = parse_sequence(args.seq, args.d)
    except MalformedSequenceError as exc:
        _err(f"canon: {exc}")
        return EXIT_INPUT
    form = canonical_form(word, include_reversal=args.with_reversal)
    print(f"canonical: {format_sequence(form.word)}")
    print(f"shift: {form.shift}")
    print(f"reversed: {'yes' if form.reversal_used else 'no'}")
    relabel = ", ".join(f"{old}->{new}" for old, new in form.relabeling)
    print(f"relabeling: {relabel}")
    return EXIT_OK


def _audit_one(idx: int, record: CodeRecord) -> bool:
    """Run all applicable audits on one record; True iff everything passed."""
    params = CodeParams(record.d, record.k)
    word = record.transitions
    runs = bit_runs(word)
    sym = "yes" if is_symmetric(word) else "no"
    print(
        f"record {idx}: d={record.d} k={record.k} n={record.n} "
        f"symmetric={sym} longest_bit_run={runs.longest}"
    )
    ok = True
    try:
        offenders = audit_delta_inequalities(word, params)
        if offenders:
            seg = offenders[0]
            labels = format_sequence(segment_labels(word, seg))
            print(
                f"record {idx}: delta_inequalities FAIL "
                f"segment_start={seg.start} segment_len={seg.length} "
                f"labels={labels} delta={delta(word, seg)} "
                f"({len(offenders)} offending segments)"
            )
            ok = False
        else:
            print(f"record {idx}: delta_inequalities ok")
    except InapplicableError as exc:
        print(f"record {idx}: delta_inequalities skipped ({exc})")
    try:
        window = check_window_bitrun_property(word, params)
        if window is not None:
            labels = format_sequence(segment_labels(word, window))
            print(
                f"record {idx}: window_bitrun FAIL "
                f"segment_start={window.start} segment_len={window.length} labels={labels}"
            )
            ok = False
        else:
            print(f"record {idx}: window_bitrun ok")
    except InapplicableError as exc:
        print(f"record {idx}: window_bitrun skipped ({exc})")
    try:
        norm = normalize_to_bitrun_form(word, params)
        print(
            f"record {idx}: bitrun_normal_form ok link={norm.link} "
            f"tail={format_sequence(norm.tail)}"
        )
    except InapplicableError as exc:
        print(f"record {idx}: bitrun_normal_form skipped ({exc})")
    except InternalConsistencyError as exc:
        print(f"record {idx}: bitrun_normal_form FAIL ({exc})")
        ok = False
    return ok


def _cmd_audit(args) -> int:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    except OSError as exc:
        _err(f"audit: {exc}")
        return EXIT_INPUT
    records = []
    for lineno, line in enumerate(lines, start=1):
        try:
            obj = json.loads(line)
            if isinstance(obj, dict):
                obj.setdefault("d", args.d)
                obj.setdefault("k", args.k)
                if obj.get("d") is None or obj.get("k") is None:
                    raise MalformedSequenceError(
                        "record lacks d/k and no --d/--k defaults were given"
                    )
                obj.setdefault("n", len(obj.get("transitions", ())))
                obj.setdefault("symmetric", False)
                obj.setdefault("canonical", False)
                obj.setdefault("source", "user")
            records.append(CodeRecord.from_json_line(json.dumps(obj)))
        except (MalformedSequenceError, json.JSONDecodeError, ValueError) as exc:
            _err(f"audit: line {lineno}: {exc}")
            return EXIT_INPUT
    all_ok = True
    for idx, record in enumerate(records, start=1):
        try:
            if not _audit_one(idx, record):
                all_ok = False
        except StructuralError as exc:
            _err(f"audit: record {idx}: {exc}")
            return EXIT_INPUT
    return EXIT_OK if all_ok else EXIT_INCONSISTENT


def _add_search_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--d", type=int, required=True, help="hypercube dimension")
    p.add_argument("--k", type=int, required=True, help="spread")
    p.add_argument("--symmetric", action="store_true", help="restrict to symmetric codes")
    p.add_argument(
        "--family-l",
        type=int,
        default=None,
        metavar="L",
        help="restrict to symmetric codes containing a bit run >= k+L (implies --symmetric)",
    )
    p.add_argument("--target", type=int, default=None, help="decision mode: stop at length >= N")
    p.add_argument("--threads", type=int, default=1, help="worker count")
    p.add_argument("--time-limit", type=float, default=None, metavar="S", help="seconds before truncating")
    p.add_argument("--node-budget", type=int, default=None, help="max nodes before truncating")
    p.add_argument("--max-length", type=int, default=None, help="bound on code length (default 2^d)")
    p.add_argument("--out", default=None, help="append the result record to this JSONL file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circuitcodes",
        description="Verify, canonicalize and exhaustively search hypercube circuit codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the spread requirement for one sequence")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--seq", help='comma-separated transition sequence, e.g. "1,2,1,2"')
    g.add_argument("--file", help="file containing one such sequence")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("search", help="maximum code length for (d, k)")
    _add_search_flags(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("enumerate", help="isomorphism classes of all maximum codes")
    _add_search_flags(p)
    p.add_argument(
        "--classes",
        action="store_true",
        help="print one line per isomorphism class (always on; flag kept for symmetry)",
    )
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("canon", help="canonical form of a sequence")
    p.add_argument("--seq", required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--with-reversal", action="store_true")
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("audit", help="run structural audits over stored code records")
    p.add_argument("--file", required=True, help="JSONL file of code records")
    p.add_argument("--d", type=int, default=None, help="default dimension for records lacking one")
    p.add_argument("--k", type=int, default=None, help="default spread for records lacking one")
    p.set_defaults(func=_cmd_audit)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; fold into the input-error code
        return EXIT_INPUT if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

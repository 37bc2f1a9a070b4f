"""Command-line entry point.

Exit codes: 0 success or positive result, 1 negative mathematical result,
2 usage or resource error, 3 internal verification failure.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import approximation, dyck, oracle, quotients, separation
from .errors import DyckError, FormatError, NotSeparable, NotTwoSided, ResourceBound, UnknownSymbol, VerificationFailure
from .free_group import phi
from .words import BRACKET, DEFAULT_CAP, LETTER, PairedAlphabet, Word, check_cap, enumerate_words, format_word, parse_word

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

ONE_SIDED, TWO_SIDED_ONLY, NEITHER = "one_sided", "two_sided_only", "neither"


@dataclass(frozen=True)
class RunConfig:
    pairs: int = 2
    mode: str = LETTER
    output_format: str = "text"
    cap: int = DEFAULT_CAP
    seed: int = 0

    def __post_init__(self):
        if self.pairs < 1:
            raise ValueError("--pairs must be at least 1")
        if self.mode == BRACKET and self.pairs > 3:
            raise ValueError("--brackets supports at most 3 pairs")

    @property
    def alphabet(self) -> PairedAlphabet:
        return PairedAlphabet(self.pairs)


class Output:
    """Collects key/value records and renders them as text lines or one JSON document."""

    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self.record: dict = {}
        self.lines: list[str] = []

    def field(self, key: str, value) -> None:
        self.record[key] = value
        if isinstance(value, bool):
            value = str(value).lower()
        self.lines.append(f"{key}: {value}".rstrip())

    def block(self, key: str, text: str, structured=None) -> None:
        self.record[key] = structured if structured is not None else text.splitlines()
        self.lines.append(f"{key}:")
        self.lines.extend(text.rstrip("\n").splitlines())

    def emit(self) -> None:
        if self.cfg.output_format == "structured":
            print(json.dumps(self.record, indent=2, sort_keys=True))
        else:
            print("\n".join(self.lines))


def _fmt(cfg: RunConfig, w: Word) -> str:
    return format_word(w, cfg.mode)


def _read_quotient(path: str) -> quotients.FiniteQuotient:
    with open(path) as fh:
        return quotients.FiniteQuotient.from_text(fh.read())


def _matching_structured(cert: dyck.MatchingCertificate) -> list:
    return [[p.left, p.right, "O" if p.opening else "C"] for p in cert.pairs]


def classify(w: Word) -> str:
    if dyck.is_one_sided(w):
        return ONE_SIDED
    if dyck.is_two_sided(w):
        return TWO_SIDED_ONLY
    return NEITHER


def cmd_check(cfg: RunConfig, args) -> int:
    w = parse_word(args.word, cfg.alphabet, cfg.mode)
    out = Output(cfg)
    out.field("word", _fmt(cfg, w))
    kind = classify(w)
    out.field("classification", kind)
    out.field("in_closure", kind != NEITHER)
    if kind == NEITHER:
        trace = dyck.reduce_trace(w)
        one = dyck.is_one_sided(w)
        out.field("one_sided_failure_position", one.failure_position)
        out.field("residual", _fmt(cfg, trace.residual))
        cert = separation.separate(w)
        out.block("separation_certificate", cert.to_text(cfg.mode), cert.to_dict(cfg.mode))
    else:
        cert = dyck.is_two_sided(w).certificate if kind == TWO_SIDED_ONLY else dyck.is_one_sided(w).certificate
        out.block("matching", cert.to_text(), _matching_structured(cert))
    out.emit()
    return EXIT_OK if kind != NEITHER else EXIT_NEGATIVE


def cmd_reduce(cfg: RunConfig, args) -> int:
    w = parse_word(args.word, cfg.alphabet, cfg.mode)
    trace = dyck.reduce_trace(w)
    out = Output(cfg)
    out.field("word", _fmt(cfg, w))
    out.block("trace", trace.to_text(cfg.mode), [list(s) for s in trace.steps])
    out.field("residual", _fmt(cfg, trace.residual))
    out.field("two_sided", trace.empty)
    out.emit()
    return EXIT_OK if trace.empty else EXIT_NEGATIVE


def cmd_approximate(cfg: RunConfig, args) -> int:
    q = _read_quotient(args.quotient)
    if q.alphabet != cfg.alphabet:
        cfg = RunConfig(q.alphabet.pair_count, cfg.mode, cfg.output_format, cfg.cap, cfg.seed)
    w = parse_word(args.word, q.alphabet, cfg.mode)
    gadgets = approximation.build_gadgets(q)
    witness = approximation.approximate(q, w, gadgets)
    report = approximation.verify_approximation(q, w, witness)
    out = Output(cfg)
    out.field("word", _fmt(cfg, w))
    out.field("witness", _fmt(cfg, witness))
    out.field("witness_length", len(witness))
    out.field("quotient", args.quotient)
    out.field("input_two_sided", report.input_two_sided)
    out.field("witness_one_sided", report.witness_one_sided)
    out.field("images_agree", report.images_agree)
    out.field("verdict", "pass" if report else "fail")
    for gad in gadgets.gadgets:
        out.field(f"gadget_pair_{gad.pair}", f"N={gad.exponent} M={gad.base_order}")
    status = EXIT_OK if report else EXIT_INTERNAL
    if args.minimal:
        shortest = oracle.bfs_minimal_witness(q, w, len(witness))
        out.field("minimal_witness", _fmt(cfg, shortest))
        out.field("minimal_witness_length", len(shortest))
        if not approximation.verify_approximation(q, w, shortest):
            status = EXIT_INTERNAL
    out.emit()
    return status


def _separation_report(out: Output, report: separation.SeparationReport, bound: int) -> None:
    out.field("moves_point", report.moves_point)
    out.field("structural_inverse_check", report.structural)
    out.field(f"one_sided_words_up_to_{bound}_killed", report.one_sided_killed)
    out.field("one_sided_words_checked", report.checked_words)
    out.field("verdict", "pass" if report else "fail")


def cmd_separate(cfg: RunConfig, args) -> int:
    w = parse_word(args.word, cfg.alphabet, cfg.mode)
    cert = separation.separate(w)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(cert.to_text(cfg.mode))
    report = separation.verify_separation(cert, w, args.verify_up_to)
    out = Output(cfg)
    out.field("word", _fmt(cfg, w))
    out.field("degree", cert.quotient.degree)
    out.block("certificate", cert.to_text(cfg.mode), cert.to_dict(cfg.mode))
    _separation_report(out, report, args.verify_up_to)
    out.emit()
    return EXIT_OK if report else EXIT_INTERNAL


def cmd_verify(cfg: RunConfig, args) -> int:
    with open(args.certificate) as fh:
        cert = separation.SeparationCertificate.from_text(fh.read(), cfg.mode)
    report = separation.verify_separation(cert, cert.word, args.verify_up_to)
    out = Output(cfg)
    out.field("word", format_word(cert.word, cfg.mode))
    _separation_report(out, report, args.verify_up_to)
    out.emit()
    return EXIT_OK if report else EXIT_NEGATIVE


def cmd_count(cfg: RunConfig, args) -> int:
    kinds = [oracle.ONE_SIDED, oracle.TWO_SIDED] if args.kind == "both" else [args.kind]
    tables = [oracle.count_members(k, cfg.pairs, args.max_length, cfg.cap) for k in kinds]
    if cfg.output_format == "structured":
        print(json.dumps([{"kind": t.kind, "pairs": t.pair_count, "rows": t.rows} for t in tables], indent=2))
    elif args.csv:
        print("".join(t.to_csv() for t in tables), end="")
    else:
        print("\n".join(t.to_text() for t in tables), end="")
    return EXIT_INTERNAL if any(t.mismatches() for t in tables) else EXIT_OK


BUILTIN_QUOTIENTS = {
    "trivial": quotients.trivial_quotient,
    "mod2": quotients.mod2_quotient,
    "cyclic3": quotients.cyclic3_quotient,
}


def cmd_quotient(cfg: RunConfig, args) -> int:
    if args.inspect:
        q = _read_quotient(args.inspect)
        out = Output(cfg)
        out.field("degree", q.degree)
        out.field("pairs", q.alphabet.pair_count)
        for x in q.alphabet.letters:
            out.field(f"order_{q.alphabet.symbol(x)}", quotients.letter_order(q, x))
        for gad in approximation.build_gadgets(q).gadgets:
            out.field(f"pair_{gad.pair}", f"N={gad.exponent} M={gad.base_order} |g|={len(gad.g)}")
        out.field("factors_through_phi", quotients.factors_through_phi(q))
        out.emit()
        return EXIT_OK
    if args.builtin:
        q = BUILTIN_QUOTIENTS[args.builtin](cfg.alphabet)
    else:
        q = quotients.random_quotient(cfg.alphabet, args.degree, cfg.seed)
    text = q.to_text()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return EXIT_OK


def selftest(cfg: RunConfig, max_length: int, verify_up_to: int = 8, samples: int = 50) -> tuple[list[str], bool]:
    """Run the verification suites; returns report lines and overall pass flag."""
    alphabet = cfg.alphabet
    check_cap(sum(alphabet.size**L for L in range(max_length + 1)), cfg.cap)
    lines = [f"selftest pairs={cfg.pairs} max_length={max_length} seed={cfg.seed}"]
    ok = True

    def record(name: str, passed: bool, detail: str) -> None:
        nonlocal ok
        ok &= passed
        lines.append(f"{'PASS' if passed else 'FAIL'} {name}: {detail}")

    eq = oracle.exhaustive_equivalence(max_length, cfg.pairs, cfg.cap)
    detail = f"{eq.checked} words" if eq else f"discrepancy at {format_word(eq.discrepancy)}"
    record("kernel_equivalence", bool(eq), detail)

    for kind in (oracle.ONE_SIDED, oracle.TWO_SIDED):
        table = oracle.count_members(kind, cfg.pairs, max_length, cfg.cap)
        lines.append(table.to_text().rstrip("\n"))
        record(f"count_{kind}", not table.mismatches(), "/".join(str(c) for _, c in table.rows) or "-")

    words = [w for L in range(max_length + 1) for w in enumerate_words(alphabet, L, cfg.cap)]
    members = [w for w in words if dyck.is_two_sided(w)]
    suite = quotients.suite_quotients(alphabet)
    passed = 0
    failures = []
    for name, q in suite:
        gadgets = approximation.build_gadgets(q)
        for w in members:
            try:
                witness = approximation.approximate(q, w, gadgets)
            except VerificationFailure:
                failures.append((name, w))
                continue
            if approximation.verify_approximation(q, w, witness):
                passed += 1
            else:
                failures.append((name, w))
    total = len(suite) * len(members)
    record("approximation", not failures, f"{passed}/{total} (word, quotient) cases")

    rng = random.Random(cfg.seed)
    candidates = [w for w in members if not dyck.is_one_sided(w)]
    bfs_ok = 0
    for _ in range(samples if candidates else 0):
        _, q = rng.choice(suite)
        w = rng.choice(candidates)
        witness = approximation.approximate(q, w)
        shortest = oracle.bfs_minimal_witness(q, w, len(witness))
        if len(shortest) <= len(witness) and approximation.verify_approximation(q, w, shortest):
            bfs_ok += 1
    record("bfs_oracle", bfs_ok == (samples if candidates else 0), f"{bfs_ok} sampled cases")

    sep_ok = sep_total = 0
    for w in words:
        if dyck.is_two_sided(w):
            continue
        sep_total += 1
        cert = separation.separate(w)
        if separation.verify_separation(cert, w, verify_up_to) and cert.quotient.degree == len(phi(w)) + 1:
            sep_ok += 1
    record("separation", sep_ok == sep_total, f"{sep_ok}/{sep_total} non-members, verified up to {verify_up_to}")
    lines.append("selftest: " + ("pass" if ok else "fail"))
    return lines, ok


def cmd_selftest(cfg: RunConfig, args) -> int:
    lines, ok = selftest(cfg, args.max_length, args.verify_up_to)
    if cfg.output_format == "structured":
        print(json.dumps({"lines": lines, "passed": ok}, indent=2))
    else:
        print("\n".join(lines))
    return EXIT_OK if ok else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pairs", type=int, default=2, help="number of bracket pairs (default 2)")
    common.add_argument("--brackets", action="store_true", help="read and print words as ()[]{}")
    common.add_argument("--format", choices=["text", "structured"], default="text")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap (default 1e8 words)")
    common.add_argument("--seed", type=int, default=0)

    ap = argparse.ArgumentParser(prog="dyckclosure", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="classify a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("reduce", parents=[common], help="print the reduction trace")
    p.add_argument("word")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("approximate", parents=[common], help="one-sided witness modulo a quotient")
    p.add_argument("word")
    p.add_argument("--quotient", required=True, metavar="FILE")
    p.add_argument("--minimal", action="store_true", help="also run the BFS oracle")
    p.set_defaults(func=cmd_approximate)

    p = sub.add_parser("separate", parents=[common], help="separating quotient for a non-member")
    p.add_argument("word")
    p.add_argument("--verify-up-to", type=int, default=8, metavar="L")
    p.add_argument("-o", "--output", metavar="FILE", help="write the certificate file")
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("verify", parents=[common], help="replay a separation certificate file")
    p.add_argument("certificate")
    p.add_argument("--verify-up-to", type=int, default=8, metavar="L")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", parents=[common], help="member count tables")
    p.add_argument("--kind", choices=[oracle.ONE_SIDED, oracle.TWO_SIDED, "both"], default="both")
    p.add_argument("--max-length", type=int, default=6)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("quotient", parents=[common], help="generate or inspect quotient files")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--builtin", choices=sorted(BUILTIN_QUOTIENTS))
    g.add_argument("--inspect", metavar="FILE")
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("-o", "--output", metavar="FILE")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("selftest", parents=[common], help="run the verification suites")
    p.add_argument("--max-length", type=int, default=6)
    p.add_argument("--verify-up-to", type=int, default=8, metavar="L")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = RunConfig(args.pairs, BRACKET if args.brackets else LETTER, args.format, args.cap, args.seed)
        return args.func(cfg, args)
    except UnknownSymbol as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NotTwoSided as exc:
        print(f"NotTwoSided: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except NotSeparable as exc:
        print(f"NotSeparable: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except ResourceBound as exc:
        print(f"ResourceBound: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationFailure as exc:
        print(f"VerificationFailure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (FormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DyckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

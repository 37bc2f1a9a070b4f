"""Exit criteria. Each test prints one PASS/FAIL line, visible without ``-s``."""
import random
import subprocess
import sys
import time

from dyckclosure.approximation import approximate, build_gadgets, gadget_problems, verify_approximation
from dyckclosure.cli import classify
from dyckclosure.dyck import is_one_sided, is_two_sided
from dyckclosure.errors import NotSeparable
from dyckclosure.free_group import phi
from dyckclosure.oracle import (
    ONE_SIDED,
    TWO_SIDED,
    bfs_minimal_witness,
    catalan,
    closed_walks,
    count_members,
    exhaustive_equivalence,
)
from dyckclosure.quotients import suite_quotients
from dyckclosure.separation import separate, verify_separation
from dyckclosure.words import BRACKET, PairedAlphabet, enumerate_words, format_word, parse_word

from oracles import eval_naive

ALPHA = PairedAlphabet(2)
SUITE = suite_quotients(ALPHA)


def report(capsys, number, name, passed, detail):
    with capsys.disabled():
        print(f"\n[criterion {number}] {'PASS' if passed else 'FAIL'} {name}: {detail}")


def test_1_kernel_characterization(capsys):
    start = time.perf_counter()
    rep = exhaustive_equivalence(10, 2)
    elapsed = time.perf_counter() - start
    ok = rep.passed and rep.checked == sum(4**L for L in range(11)) and elapsed < 30
    report(capsys, 1, "kernel characterization", ok, f"{rep.checked} words, discrepancy={rep.discrepancy}, {elapsed:.1f}s")
    assert rep.passed
    assert rep.checked == 1398101
    assert elapsed < 30


def test_2_count_tables(capsys):
    one = count_members(ONE_SIDED, 2, 6)
    two = count_members(TWO_SIDED, 2, 6)
    two_n1 = count_members(TWO_SIDED, 1, 4)
    checks = [
        one.rows == ((2, 2), (4, 8), (6, 40)),
        all(c == catalan(L // 2) * 2 ** (L // 2) for L, c in one.rows),
        two.rows == ((2, 4), (4, 28), (6, 232)),
        all(c == closed_walks(2, L) for L, c in two.rows),
        two_n1.rows == ((2, 2), (4, 6)),
        all(c == catalan(L // 2) * (L // 2 + 1) for L, c in two_n1.rows),  # central binomial
    ]
    detail = f"one={[c for _, c in one.rows]} two={[c for _, c in two.rows]} n1={[c for _, c in two_n1.rows]}"
    report(capsys, 2, "count tables", all(checks), detail)
    assert all(checks)


def test_3_density_direction(capsys):
    members = [w for L in range(0, 7, 2) for w in enumerate_words(ALPHA, L) if is_two_sided(w)]
    start = time.perf_counter()
    failures = []
    for name, q in SUITE:
        gadgets = build_gadgets(q)
        for w in members:
            out = approximate(q, w, gadgets)
            if not (is_one_sided(out) and eval_naive(q, out) == eval_naive(q, w)):
                failures.append((name, format_word(w)))
    elapsed = time.perf_counter() - start
    total = len(SUITE) * len(members)
    ok = not failures and len(members) == 265 and elapsed < 60
    report(capsys, 3, "density direction", ok, f"{total - len(failures)}/{total} cases ({len(members)} members x {len(SUITE)} quotients), {elapsed:.1f}s")
    assert not failures
    assert len(members) == 265
    assert elapsed < 60


def test_4_closedness_direction(capsys):
    start = time.perf_counter()
    passed = total = 0
    wrongly_separated = []
    for L in range(8):
        for w in enumerate_words(ALPHA, L):
            if is_two_sided(w):
                try:
                    separate(w)
                    wrongly_separated.append(format_word(w))
                except NotSeparable:
                    pass
                continue
            total += 1
            cert = separate(w)
            if verify_separation(cert, w, 8) and cert.quotient.degree == len(phi(w)) + 1:
                passed += 1
    elapsed = time.perf_counter() - start
    ok = passed == total and not wrongly_separated and elapsed < 60
    report(capsys, 4, "closedness direction", ok, f"{passed}/{total} non-members certified, L=8, {elapsed:.1f}s")
    assert passed == total
    assert not wrongly_separated
    assert elapsed < 60


def test_5_gadget_identities(capsys):
    problems = []
    for name, q in SUITE:
        for gad in build_gadgets(q).gadgets:
            problems += [f"{name} pair {gad.pair}: {p}" for p in gadget_problems(q, gad)]
    report(capsys, 5, "gadget identities", not problems, f"{len(SUITE)} quotients x 2 pairs, {len(problems)} problems")
    assert problems == []


def test_6_oracle_consistency(capsys):
    rng = random.Random(2024)
    candidates = [w for L in range(2, 7, 2) for w in enumerate_words(ALPHA, L) if is_two_sided(w) and not is_one_sided(w)]
    good = 0
    for _ in range(50):
        _, q = rng.choice(SUITE)
        w = rng.choice(candidates)
        ours = approximate(q, w)
        shortest = bfs_minimal_witness(q, w, len(ours))
        if len(shortest) <= len(ours) and verify_approximation(q, w, ours) and verify_approximation(q, w, shortest):
            good += 1
    report(capsys, 6, "oracle consistency", good == 50, f"{good}/50 sampled cases")
    assert good == 50


def test_7_paper_examples(capsys):
    got = [
        classify(parse_word("([()()]{}[])()", PairedAlphabet(3), BRACKET)),
        classify(parse_word(")()(][)( ", ALPHA, BRACKET)),
        classify(parse_word(")(", ALPHA, BRACKET)),
    ]
    expected = ["one_sided", "two_sided_only", "two_sided_only"]
    report(capsys, 7, "paper examples", got == expected, ", ".join(got))
    assert got == expected


def test_8_determinism(capsys):
    cmd = [sys.executable, "-m", "dyckclosure", "selftest", "--max-length", "6", "--seed", "0"]
    first = subprocess.run(cmd, capture_output=True, check=False)
    second = subprocess.run(cmd, capture_output=True, check=False)
    ok = first.returncode == second.returncode == 0 and first.stdout == second.stdout and first.stdout
    report(capsys, 8, "determinism", bool(ok), f"exit codes {first.returncode}/{second.returncode}, {len(first.stdout)} bytes")
    assert first.returncode == 0
    assert first.stdout == second.stdout

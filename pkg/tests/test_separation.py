import pytest

from dyckclosure.dyck import is_two_sided
from dyckclosure.errors import EmptyWord, FormatError, NotSeparable
from dyckclosure.free_group import GroupWord, phi
from dyckclosure.quotients import FiniteQuotient, Permutation, evaluate
from dyckclosure.separation import SeparationCertificate, residual_witness, separate, verify_separation
from dyckclosure.words import PairedAlphabet, enumerate_words

from oracles import W, compose_dicts, eval_naive


def test_witness_single_generator():
    (px, py) = residual_witness(GroupWord.parse("x"), 2)
    assert px == Permutation((1, 0))
    assert py == Permutation.identity(2)


def test_witness_conjugate():
    px, py = residual_witness(GroupWord.parse("xyX"), 2)
    assert px == Permutation.from_cycles(4, (0, 1), (2, 3))
    assert py == Permutation.from_cycles(4, (1, 2))
    image = compose_dicts(px.images, py.images, px.inverse().images)
    assert image[0] == 3


def test_witness_square():
    (px,) = residual_witness(GroupWord.parse("xx"))
    assert px == Permutation.from_cycles(3, (0, 1, 2))
    assert (px ** 2)(0) == 2


def test_witness_empty():
    with pytest.raises(EmptyWord):
        residual_witness(GroupWord())


def test_separate_a():
    cert = separate(W("a"))
    q = cert.quotient
    assert q.degree == 2
    assert q.image(0) == q.image(1) == Permutation((1, 0))
    assert evaluate(q, W("a"))(0) == 1
    assert q.image(0).then(q.image(1)).is_identity
    assert verify_separation(cert, W("a"), 6)


def test_separate_member_fails():
    with pytest.raises(NotSeparable):
        separate(W("Aa"))


def test_separate_aab():
    cert = separate(W("aab"))
    assert cert.quotient.degree == 4
    assert eval_naive(cert.quotient, W("aab"))[0] == 3
    assert cert.target == 3
    assert verify_separation(cert, W("aab"), 4)


def test_one_sided_words_checked_count():
    # 1 + 2 + 8 + 40 one-sided words of length <= 6
    assert verify_separation(separate(W("a")), W("a"), 6).checked_words == 51


def test_tampered_certificate_fails_structure():
    cert = separate(W("a"))
    q = cert.quotient
    images = list(q.images)
    images[1] = Permutation.identity(2)
    bad = SeparationCertificate(cert.word, FiniteQuotient(q.alphabet, tuple(images)), 0, cert.target)
    report = verify_separation(bad, W("a"), 6)
    assert not report.structural and not report
    assert not report.one_sided_killed


def test_wrong_moved_point_fails():
    cert = separate(W("ab"))
    report = verify_separation(SeparationCertificate(cert.word, cert.quotient, 99, 0), W("ab"))
    assert not report.moves_point


def test_certificate_file_roundtrip():
    cert = separate(W("aab"))
    text = cert.to_text()
    assert text.endswith("word: aab\nmoved_point: 0\nimage_of_word_moves_point_to: 3\n")
    assert text.startswith("degree 4\npairs 2\na: 1 2 0 3\n")
    assert SeparationCertificate.from_text(text) == cert


def test_certificate_missing_trailer():
    with pytest.raises(FormatError):
        SeparationCertificate.from_text(separate(W("a")).quotient.to_text())


def test_completeness_and_soundness_up_to_5():
    alpha = PairedAlphabet(2)
    for length in range(6):
        for w in enumerate_words(alpha, length):
            if is_two_sided(w):
                with pytest.raises(NotSeparable):
                    separate(w)
                continue
            cert = separate(w)
            assert cert.quotient.degree == len(phi(w)) + 1 <= len(w) + 1
            assert verify_separation(cert, w, 6)

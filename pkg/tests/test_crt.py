import dataclasses

import pytest

from bnset.crt import CrtCertificate, decompose, lemma_pair, verify_certificate
from bnset.exceptions import ZeroDivisorError


def test_theorem1_constants() -> None:
    certificate = lemma_pair(132 * 133 * 143 * 144)
    assert certificate.x == 361513152
    assert certificate.b == 200526827
    assert certificate.a == 667378345


def test_small_values() -> None:
    certificate = lemma_pair(5)
    assert (certificate.m, certificate.odd_part, certificate.y, certificate.z) == (0, 5, 3, 1)
    assert (certificate.b, certificate.a) == (3, 8)

    negative = lemma_pair(-6)
    assert (negative.m, negative.odd_part, negative.y, negative.z) == (1, -3, -1, 3)
    assert (negative.b, negative.a) == (5, -21)


def test_decompose() -> None:
    assert decompose(40) == (3, 5, 3)
    assert decompose(-1) == (0, -1, 0)
    with pytest.raises(ZeroDivisorError):
        decompose(0)


def test_lemma_identity_holds_on_a_range() -> None:
    for x in range(-10_000, 10_001):
        if x == 0:
            continue
        certificate = lemma_pair(x)
        assert verify_certificate(certificate), x
        assert certificate.a * x == (2 * certificate.b - 1) * (3 * certificate.b - 1)


def test_lemma_on_large_powers() -> None:
    for x in (2**64, -(3**40) * 2**17, 10**30 + 1):
        assert verify_certificate(lemma_pair(x))


def test_verify_rejects_tampered_certificate() -> None:
    certificate = lemma_pair(12)
    tampered = CrtCertificate(
        x=certificate.x,
        m=certificate.m,
        odd_part=certificate.odd_part,
        y=certificate.y,
        z=certificate.z,
        b=certificate.b + certificate.modulus,
        a=certificate.a,
    )
    assert not verify_certificate(tampered)


def test_to_text() -> None:
    assert lemma_pair(5).to_text() == "x: 5\nm: 0\nodd_part: 5\ny: 3\nz: 1\nb: 3\na: 8\n"


def test_worked_examples() -> None:
    assert decompose(361513152) == (6, 5648643, 2824322)
    assert decompose(1) == (0, 1, 1)
    assert decompose(-3) == (0, -3, -1)

    for x, b, a in ((1, 0, 1), (-3, 2, -5), (3, 2, 5)):
        certificate = lemma_pair(x)
        assert (certificate.b, certificate.a) == (b, a), x

    certificate = lemma_pair(5)
    assert not verify_certificate(dataclasses.replace(certificate, b=4))


def test_three_divides_odd_powers_of_two_plus_one() -> None:
    for m in range(65):
        assert (2 ** (2 * m + 1) + 1) % 3 == 0, m
        assert lemma_pair(2**m).z * 3 == 2 ** (2 * m + 1) + 1, m


def test_b_is_the_least_residue() -> None:
    for x in range(-300, 301):
        if x == 0:
            continue
        c = lemma_pair(x)
        odd = abs(c.odd_part)
        expected = next(b for b in range(c.modulus) if b % odd == c.y % odd and b % 2**c.m == c.z % 2**c.m)
        assert c.b == expected, x

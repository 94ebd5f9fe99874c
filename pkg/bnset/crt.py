from __future__ import annotations

import dataclasses
import logging
from typing import Tuple

from sympy import multiplicity
from sympy.ntheory.modular import crt

from bnset.exceptions import ZeroDivisorError

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class CrtCertificate:
    """Witness of ``a * x == (2b - 1)(3b - 1)`` for a nonzero integer ``x``.

    ``x == odd_part * 2**m`` with ``odd_part == 2y - 1`` and ``3z == 2**(2m + 1) + 1``.
    ``b`` is the least non-negative solution of ``b = y (mod |odd_part|)`` and
    ``b = z (mod 2**m)``.
    """

    x: int
    m: int
    odd_part: int
    y: int
    z: int
    b: int
    a: int

    @property
    def modulus(self) -> int:
        return abs(self.odd_part) * 2**self.m

    def to_text(self) -> str:
        return "".join(f"{field.name}: {getattr(self, field.name)}\n" for field in dataclasses.fields(self))


def decompose(x: int) -> Tuple[int, int, int]:
    """Split ``x`` into ``(m, odd_part, y)`` with ``x == (2y - 1) * 2**m``."""
    if x == 0:
        raise ZeroDivisorError("x must be nonzero")
    m = int(multiplicity(2, abs(x)))
    odd_part = x // 2**m
    y = (odd_part + 1) // 2
    return m, odd_part, y


def lemma_pair(x: int) -> CrtCertificate:
    m, odd_part, y = decompose(x)
    z = (2 ** (2 * m + 1) + 1) // 3
    solution = crt([abs(odd_part), 2**m], [y, z])
    assert solution is not None, "moduli are coprime"
    b = int(solution[0])
    product = (2 * b - 1) * (3 * b - 1)
    a = product // x
    logger.debug("lemma_pair(%d): m=%d, odd_part=%d, b=%d", x, m, odd_part, b)
    return CrtCertificate(x=x, m=m, odd_part=odd_part, y=y, z=z, b=b, a=a)


def verify_certificate(c: CrtCertificate) -> bool:
    checks = {
        "x is nonzero": c.x != 0,
        "m is non-negative": c.m >= 0,
        "x == odd_part * 2**m": c.m >= 0 and c.x == c.odd_part * 2**c.m,
        "odd_part is odd": c.odd_part % 2 == 1,
        "odd_part == 2y - 1": c.odd_part == 2 * c.y - 1,
        "3z == 2**(2m+1) + 1": c.m >= 0 and 3 * c.z == 2 ** (2 * c.m + 1) + 1,
        "odd_part divides 2b - 1": c.odd_part != 0 and (2 * c.b - 1) % c.odd_part == 0,
        "2**m divides 3b - 1": c.m >= 0 and (3 * c.b - 1) % 2**c.m == 0,
        "a * x == (2b - 1)(3b - 1)": c.a * c.x == (2 * c.b - 1) * (3 * c.b - 1),
        "0 <= b < |odd_part| * 2**m": c.m >= 0 and 0 <= c.b < c.modulus,
    }
    failed = [name for name, passed in checks.items() if not passed]
    if failed:
        logger.debug("Certificate for x=%d fails: %s", c.x, ", ".join(failed))
    return not failed

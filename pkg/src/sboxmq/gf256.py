"""Concrete arithmetic in GF(2^8) = GF(2)[t]/(t^8+t^4+t^3+t+1) and Lagrange
interpolation of 256-entry value tables into polynomial-expression coefficients.

Bytes are polynomials in t with bit i as the coefficient of t^i. Multiplication
is carry-less multiply followed by reduction modulo 0x11B; a log/antilog pair
built from that primitive accelerates the bulk operations (results are
bit-identical to the shift-and-reduce path, which stays available as clmul /
clmod for cross-checking).
"""

from __future__ import annotations

from typing import Sequence

FIELD_MOD = 0x11B  # t^8 + t^4 + t^3 + t + 1


def clmul(a: int, b: int) -> int:
    """Carry-less (polynomial) product over GF(2), no reduction."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def clmod(a: int, m: int) -> int:
    """Remainder of the polynomial a modulo the polynomial m."""
    if m == 0:
        raise ZeroDivisionError("zero modulus")
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _build_tables():
    exp = [0] * 510
    log = [0] * 256
    x = 1
    for i in range(255):
        exp[i] = x
        log[x] = i
        x = clmod(clmul(x, 0x03), FIELD_MOD)
    if x != 1:
        raise AssertionError("0x03 failed to generate the multiplicative group")
    for i in range(255, 510):
        exp[i] = exp[i - 255]
    return exp, log


_EXP, _LOG = _build_tables()


def gf_mul(a: int, b: int) -> int:
    """Field product of two bytes."""
    if a == 0 or b == 0:
        return 0
    return _EXP[_LOG[a] + _LOG[b]]


def gf_pow(a: int, k: int) -> int:
    """Field power; a^0 = 1 for every a, 0^k = 0 for k >= 1."""
    if k < 0:
        raise ValueError("negative exponent")
    if k == 0:
        return 1
    if a == 0:
        return 0
    return _EXP[(_LOG[a] * k) % 255]

def gf_inv(a: int) -> int:
    """Multiplicative inverse via a^254; the inverse of 0 is defined as 0."""
    return gf_pow(a, 254)


class PolyExpr:
    """Polynomial expression over GF(2^8): 256 coefficients, index k = X^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int]):
        coeffs = tuple(coeffs)
        if len(coeffs) != 256:
            raise ValueError("PolyExpr needs exactly 256 coefficients")
        if any(not 0 <= c <= 0xFF for c in coeffs):
            raise ValueError("coefficients must be bytes")
        self.coeffs = coeffs

    def nonzero(self) -> list:
        """(power, coefficient) pairs for the nonzero coefficients."""
        return [(k, c) for k, c in enumerate(self.coeffs) if c]

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyExpr) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        nz = self.nonzero()
        body = " + ".join(f"{c:02X}*X^{k}" if k else f"{c:02X}" for k, c in nz)
        return f"PolyExpr({body or '0'})"


def poly_eval(p: PolyExpr, a: int) -> int:
    """Horner evaluation of p at a; poly_eval(p, 0) is the constant term."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = gf_mul(acc, a) ^ c
    return acc


def lagrange_interpolate(table: Sequence[int]) -> PolyExpr:
    """The unique degree-<=255 polynomial with p(a) = table[a] for all bytes a.

    Uses the finite-field inversion formula: c_0 = f(0), c_255 = XOR of all
    f(a), and c_k = sum over a != 0 of f(a) * a^(-k) for 1 <= k <= 254.
    """
    if len(table) != 256:
        raise ValueError("table must have 256 entries")
    c = [0] * 256
    c[0] = table[0]
    total = 0
    for v in table:
        total ^= v
    c[255] = total
    for a in range(1, 256):
        fa = table[a]
        if fa == 0:
            continue
        la = _LOG[fa]
        inv_log = 255 - _LOG[a] if a != 1 else 0
        step = 0
        for k in range(1, 255):
            step = (step + inv_log) % 255
            c[k] ^= _EXP[la + step]
    return PolyExpr(c)


def format_hex_table(values: Sequence[int]) -> str:
    """16 rows of 16 uppercase two-digit hex bytes, single-space separated."""
    if len(values) != 256:
        raise ValueError("table must have 256 entries")
    rows = []
    for r in range(16):
        rows.append(" ".join(f"{values[16 * r + c]:02X}" for c in range(16)))
    return "\n".join(rows)


def parse_hex_table(text: str) -> list:
    """Parse the 16x16 hex grid back into a list of 256 byte values."""
    values = [int(tok, 16) for tok in text.split()]
    if len(values) != 256:
        raise ValueError(f"expected 256 bytes, got {len(values)}")
    if any(not 0 <= v <= 0xFF for v in values):
        raise ValueError("table entries must be bytes")
    return values

"""Degree-<8 polynomials in the ring generator t with ANF coefficients.

Two quotient rings are supported: GF(2)[t]/(t^8+t^4+t^3+t+1), the Rijndael
field modulus, and GF(2)[t]/(t^8+1), the circulant ring of the affine step.
Coefficient index i always holds the coefficient of t^i, so bit i of a hex
constant maps to t^i.
"""

from __future__ import annotations

from enum import Enum
from typing import Sequence

from .anf import AnfPoly, VarRegistry


class Modulus(Enum):
    # value = offsets by which an overflowing t^8 folds back: t^8 = sum t^k
    RIJNDAEL = (0, 1, 3, 4)
    CIRCULANT = (0,)

    @property
    def fold_offsets(self) -> tuple:
        return self.value


class BytePoly:
    """Eight ANF coefficients plus the quotient modulus; always reduced."""

    __slots__ = ("coeffs", "modulus")

    def __init__(self, coeffs: Sequence[AnfPoly], modulus: Modulus):
        coeffs = tuple(coeffs)
        if len(coeffs) != 8:
            raise ValueError("BytePoly needs exactly 8 coefficients")
        reg = coeffs[0].registry
        if any(c.registry != reg for c in coeffs):
            raise ValueError("coefficients are over different registries")
        self.coeffs = coeffs
        self.modulus = modulus

    @classmethod
    def from_bits(cls, registry: VarRegistry, names: Sequence[str],
                  modulus: Modulus) -> "BytePoly":
        """Symbolic byte whose coefficient of t^i is the variable names[i]."""
        if len(names) != 8:
            raise ValueError("need 8 bit-variable names")
        return cls([registry.var(n) for n in names], modulus)

    @classmethod
    def from_const(cls, registry: VarRegistry, value: int,
                   modulus: Modulus) -> "BytePoly":
        """Constant byte: coefficient of t^i is bit i of value."""
        if not 0 <= value <= 0xFF:
            raise ValueError(f"byte constant out of range: {value:#x}")
        one = registry.one()
        zero = registry.zero()
        return cls([one if (value >> i) & 1 else zero for i in range(8)], modulus)

    @property
    def registry(self) -> VarRegistry:
        return self.coeffs[0].registry

    def coefficients(self) -> list:
        """Coefficients in ascending power order (index 0 = constant term)."""
        return list(self.coeffs)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def _check(self, other: "BytePoly"):
        if not isinstance(other, BytePoly):
            raise TypeError(f"expected BytePoly, got {type(other).__name__}")
        if self.modulus is not other.modulus:
            raise ValueError("modulus mismatch")
        if self.registry != other.registry:
            raise ValueError("registries differ")

    def __add__(self, other: "BytePoly") -> "BytePoly":
        self._check(other)
        return BytePoly([a + b for a, b in zip(self.coeffs, other.coeffs)],
                        self.modulus)

    def __mul__(self, other: "BytePoly") -> "BytePoly":
        self._check(other)
        zero = self.registry.zero()
        slots = [zero] * 15
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                slots[i + j] = slots[i + j] + a * b
        # fold degrees 14..8 down through the modulus relation for t^8
        for k in range(14, 7, -1):
            c = slots[k]
            if c.is_zero():
                continue
            for off in self.modulus.fold_offsets:
                slots[k - 8 + off] = slots[k - 8 + off] + c
        return BytePoly(slots[:8], self.modulus)

    def pow(self, k: int) -> "BytePoly":
        """Square-and-multiply power, reduced at every step."""
        if k < 0:
            raise ValueError("negative exponent")
        result = BytePoly.from_const(self.registry, 1, self.modulus)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        return (isinstance(other, BytePoly) and self.modulus is other.modulus
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return hash((self.coeffs, self.modulus))

    def __repr__(self) -> str:
        terms = ", ".join(f"t^{i}: {c}" for i, c in enumerate(self.coeffs)
                          if not c.is_zero())
        return f"BytePoly({self.modulus.name}; {terms or '0'})"

"""S-box pipeline definitions (affine and inverse steps) and truth tables.

An S-box is an ordered list of steps applied left to right to each input
byte. The affine step works in the circulant ring GF(2)[t]/(t^8+1); the
inverse step is the field inversion with 0 mapped to 0. Pipelines of any
length are allowed so chain and concise-system experiments share one path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Union

from .anf import AnfPoly, VarRegistry
from .gf256 import clmod, clmul, gf_inv
from .tpoly import BytePoly, Modulus

CIRC_MOD = 0x101  # t^8 + 1


def circ_mul(a: int, b: int) -> int:
    """Product of two bytes in the circulant ring mod t^8+1."""
    return clmod(clmul(a, b), CIRC_MOD)


def circ_pow(a: int, k: int) -> int:
    if k < 0:
        raise ValueError("negative exponent")
    r = 1
    while k:
        if k & 1:
            r = circ_mul(r, a)
        k >>= 1
        a = circ_mul(a, a)
    return r


def is_circ_invertible(a: int) -> bool:
    """a is a unit mod t^8+1 iff gcd(a(t), t^8+1) = 1."""
    x, y = CIRC_MOD, a
    while y:
        x, y = y, clmod(x, y)
    return x == 1


def circ_inv(a: int) -> int:
    """Inverse of a unit mod t^8+1, computed as a^255."""
    if not is_circ_invertible(a):
        raise ValueError(f"{a:#04x} is not invertible mod t^8+1")
    return circ_pow(a, 255)


@dataclass(frozen=True)
class Affine:
    """z = a*x mod (t^8+1) + b."""

    a: int
    b: int

    def __post_init__(self):
        if not 0 <= self.a <= 0xFF or not 0 <= self.b <= 0xFF:
            raise ValueError("affine constants must be bytes")
        if not is_circ_invertible(self.a):
            raise ValueError(f"a={self.a:#04x} is not invertible mod t^8+1")

    def apply(self, x: int) -> int:
        return circ_mul(self.a, x) ^ self.b


@dataclass(frozen=True)
class Inverse:
    """Field inversion x^254 mod t^8+t^4+t^3+t+1, with 0 mapped to 0."""

    def apply(self, x: int) -> int:
        return gf_inv(x)


Step = Union[Affine, Inverse]


@dataclass(frozen=True)
class SboxSpec:
    """Named pipeline of steps defining an 8-bit S-box as a composition."""

    steps: tuple
    name: str = ""

    def apply(self, x: int) -> int:
        for step in self.steps:
            x = step.apply(x)
        return x


def rd_spec() -> SboxSpec:
    """The Rijndael S-box: inversion followed by the affine map (1F, 63)."""
    return SboxSpec((Inverse(), Affine(0x1F, 0x63)), name="rd")


def aia_spec() -> SboxSpec:
    """Affine-Inverse-Affine S-box with the (5B, 5D) map on both sides."""
    aff = Affine(0x5B, 0x5D)
    return SboxSpec((aff, Inverse(), aff), name="aia")


def truth_table(spec: SboxSpec) -> list:
    """All 256 output bytes of the pipeline, indexed by input byte."""
    return [spec.apply(x) for x in range(256)]


def affine_substitution_dict(registry: VarRegistry, a: int, b: int,
                             source: Sequence[str], targets: Sequence[str],
                             direction: str) -> dict:
    """Linear substitution images for the bits of an affine step.

    forward: targets[i] gets coefficient i of a*s + b (s built from source);
    inverse: targets[i] gets coefficient i of a^255 * (s + b).
    """
    if len(source) != 8 or len(targets) != 8:
        raise ValueError("source and targets must name 8 bits each")
    if direction not in ("forward", "inverse"):
        raise ValueError(f"unknown direction {direction!r}")
    if not is_circ_invertible(a):
        raise ValueError(f"a={a:#04x} is not invertible mod t^8+1")
    s = BytePoly.from_bits(registry, source, Modulus.CIRCULANT)
    if direction == "forward":
        img = BytePoly.from_const(registry, a, Modulus.CIRCULANT) * s
        img = img + BytePoly.from_const(registry, b, Modulus.CIRCULANT)
    else:
        ainv = circ_inv(a)
        img = s + BytePoly.from_const(registry, b, Modulus.CIRCULANT)
        img = BytePoly.from_const(registry, ainv, Modulus.CIRCULANT) * img
    return dict(zip(targets, img.coefficients()))


def identity_substitution(registry: VarRegistry, source: Sequence[str],
                          targets: Sequence[str]) -> dict:
    """Map each target bit directly to the corresponding source variable."""
    if len(source) != len(targets):
        raise ValueError("source and targets must have equal length")
    return {t: registry.var(s) for t, s in zip(targets, source)}


def spec_to_text(spec: SboxSpec) -> str:
    """One-line pipeline form, e.g. 'affine 5B 5D / inverse / affine 5B 5D'."""
    parts = []
    for step in spec.steps:
        if isinstance(step, Affine):
            parts.append(f"affine {step.a:02X} {step.b:02X}")
        else:
            parts.append("inverse")
    return " / ".join(parts)


def spec_from_text(text: str, name: str = "") -> SboxSpec:
    """Parse the pipeline form; steps may be separated by '/' or newlines."""
    chunks = [c.strip() for line in text.splitlines() for c in line.split("/")]
    steps = []
    for chunk in chunks:
        if not chunk:
            continue
        tokens = chunk.split()
        if tokens[0] == "inverse" and len(tokens) == 1:
            steps.append(Inverse())
        elif tokens[0] == "affine" and len(tokens) == 3:
            steps.append(Affine(int(tokens[1], 16), int(tokens[2], 16)))
        else:
            raise ValueError(f"cannot parse step {chunk!r}")
    if not steps:
        raise ValueError("empty S-box pipeline")
    return SboxSpec(tuple(steps), name=name)

"""Builders for the multivariate quadratic systems of the RD and AIA S-boxes.

Every builder returns an :class:`MqSystem`: an ordered list of ANF equations
(each read as "polynomial = 0") over an explicit variable registry, with a
per-equation provenance label. Equations generated from the x*y = 1 byte
relation hold only for x != 0; they are flagged probabilistic and dropped by
default.
"""

from __future__ import annotations

import json
from typing import Optional, Sequence

from .anf import AnfPoly, VarRegistry, bit_names, make_registry
from .gf256 import PolyExpr, lagrange_interpolate
from .sbox import (Affine, affine_substitution_dict, aia_spec,
                   identity_substitution, rd_spec, truth_table)
from .tpoly import BytePoly, Modulus

CHAIN_BYTES = 253  # intermediate byte variables y_0 .. y_252


class MqSystem:
    """Ordered ANF equations over one registry, each implicitly '= 0'."""

    __slots__ = ("registry", "equations", "labels", "name")

    def __init__(self, registry: VarRegistry, equations: Sequence[AnfPoly],
                 labels: Optional[Sequence[str]] = None, name: str = ""):
        equations = tuple(equations)
        if labels is None:
            labels = tuple(f"eq{i}" for i in range(len(equations)))
        else:
            labels = tuple(labels)
        if len(labels) != len(equations):
            raise ValueError("labels and equations differ in length")
        for e in equations:
            if e.registry != registry:
                raise ValueError("equation registry mismatch")
        self.registry = registry
        self.equations = equations
        self.labels = labels
        self.name = name

    def __len__(self) -> int:
        return len(self.equations)

    def term_counts(self) -> list:
        return [len(e) for e in self.equations]

    def monomial_union(self) -> frozenset:
        """Distinct monomial bitmasks across all equations (constant included)."""
        seen: set = set()
        for e in self.equations:
            seen |= e.masks
        return frozenset(seen)

    def max_degree(self) -> int:
        return max((e.degree() for e in self.equations), default=-1)

    def subsystem(self, indices: Sequence[int], name: str = "") -> "MqSystem":
        return MqSystem(self.registry,
                        [self.equations[i] for i in indices],
                        [self.labels[i] for i in indices],
                        name=name or self.name)

    def to_text(self) -> str:
        """Header naming the registry, then one canonical equation per line."""
        lines = ["vars: " + " ".join(self.registry.names)]
        lines.extend(e.canonical_text() for e in self.equations)
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc = {
            "name": self.name,
            "variables": list(self.registry.names),
            "equations": [{"label": l, "anf": e.canonical_text()}
                          for l, e in zip(self.labels, self.equations)],
        }
        return json.dumps(doc, indent=1)

    def __repr__(self) -> str:
        return (f"MqSystem({self.name or 'unnamed'}: {len(self.equations)} "
                f"equations over {len(self.registry)} vars)")


def xz_registry() -> VarRegistry:
    return make_registry(bit_names("x"), bit_names("z"))


def xyz_registry() -> VarRegistry:
    return make_registry(bit_names("x"), bit_names("y"), bit_names("z"))


def rd_inverse_dict(registry: VarRegistry) -> dict:
    """y bits as images of the inverted (1F, 63) affine map applied to z."""
    return affine_substitution_dict(registry, 0x1F, 0x63,
                                    bit_names("z"), bit_names("y"), "inverse")


def product_equations(registry: Optional[VarRegistry] = None) -> list:
    """Coefficients of the symbolic product x*y in the field quotient ring."""
    reg = registry or xyz_registry()
    x = BytePoly.from_bits(reg, bit_names("x"), Modulus.RIJNDAEL)
    y = BytePoly.from_bits(reg, bit_names("y"), Modulus.RIJNDAEL)
    return (x * y).coefficients()


def rd_core8() -> MqSystem:
    """The eight equations from x*y = 1 with y eliminated through the affine
    map; equation inv.t0 carries the unit constant and is probabilistic."""
    reg = xyz_registry()
    coeffs = product_equations(reg)
    subst = rd_inverse_dict(reg)
    eqs = [c.substitute(subst) for c in coeffs]
    eqs[0] = eqs[0] + reg.one()
    xz = xz_registry()
    return MqSystem(xz, [e.translated(xz) for e in eqs],
                    [f"inv.t{k}" for k in range(8)], name="rd-core8")


def power_equations() -> list:
    """The 16 always-true equations from x^128 = y^128 x and y^128 = x^128 y,
    with y eliminated through the affine map; ordered x-block then y-block."""
    reg = xyz_registry()
    x = BytePoly.from_bits(reg, bit_names("x"), Modulus.RIJNDAEL)
    y = BytePoly.from_bits(reg, bit_names("y"), Modulus.RIJNDAEL)
    subst = rd_inverse_dict(reg)
    x128 = x.pow(128)
    y128 = y.pow(128)
    xz = xz_registry()
    out = []
    for block in (x128 + y128 * x, y128 + x128 * y):
        out.extend(c.substitute(subst).translated(xz)
                   for c in block.coefficients())
    return out


def _power_labels() -> list:
    return [f"powx.t{k}" for k in range(8)] + [f"powy.t{k}" for k in range(8)]


def build_rd23(keep_probabilistic: bool = False) -> MqSystem:
    """Core equations (probabilistic one dropped by default) plus the 16
    power equations; 23 equations over the 16 x/z bits."""
    core = rd_core8()
    first = 0 if keep_probabilistic else 1
    eqs = list(core.equations[first:]) + power_equations()
    labels = list(core.labels[first:]) + _power_labels()
    return MqSystem(core.registry, eqs, labels, name="rd23")


def build_rd16() -> MqSystem:
    """The 16 power equations alone; they already pin down the value table."""
    return MqSystem(xz_registry(), power_equations(), _power_labels(),
                    name="rd16")


def build_inverse32(pre: Optional[Affine], post: Affine,
                    with_cubics: bool = True, name: str = "") -> MqSystem:
    """Concise 32-equation system for an (optional affine)-inverse-affine box.

    Four byte relations between the inversion's input u and output v --
    u^128 = v^128 u, v^128 = u^128 v, u^3 = u^4 v, v^3 = v^4 u -- are
    expanded to bit equations; u bits come from x through the forward map
    (or are x itself when pre is None) and v bits from z through the
    inverted map. The two cubic relations are required: without them the
    system is under-defined.
    """
    u_names = bit_names("y", 8)
    v_names = bit_names("y", 8, start=8)
    reg = make_registry(bit_names("x"), u_names, v_names, bit_names("z"))
    u = BytePoly.from_bits(reg, u_names, Modulus.RIJNDAEL)
    v = BytePoly.from_bits(reg, v_names, Modulus.RIJNDAEL)
    subst = {}
    if pre is None:
        subst.update(identity_substitution(reg, bit_names("x"), u_names))
    else:
        subst.update(affine_substitution_dict(reg, pre.a, pre.b,
                                              bit_names("x"), u_names,
                                              "forward"))
    subst.update(affine_substitution_dict(reg, post.a, post.b,
                                          bit_names("z"), v_names, "inverse"))
    blocks = [("p128a", u.pow(128) + v.pow(128) * u),
              ("p128b", v.pow(128) + u.pow(128) * v)]
    if with_cubics:
        blocks.append(("cubea", u.pow(3) + u.pow(4) * v))
        blocks.append(("cubeb", v.pow(3) + v.pow(4) * u))
    xz = xz_registry()
    eqs = []
    labels = []
    for tag, bp in blocks:
        for k, c in enumerate(bp.coefficients()):
            eqs.append(c.substitute(subst).translated(xz))
            labels.append(f"{tag}.t{k}")
    return MqSystem(xz, eqs, labels, name=name or "inverse32")


def build_rd32() -> MqSystem:
    return build_inverse32(None, Affine(0x1F, 0x63), name="rd32")


def build_aia32() -> MqSystem:
    aff = Affine(0x5B, 0x5D)
    return build_inverse32(aff, aff, name="aia32")


def chain_registry() -> VarRegistry:
    return make_registry(bit_names("x"), bit_names("z"),
                         bit_names("y", 8 * CHAIN_BYTES))


def build_chain(poly: PolyExpr, name: str = "chain",
                keep_probabilistic: bool = False) -> MqSystem:
    """Chain system over x, z and the 253 intermediate bytes y_0..y_252.

    Byte relations: x y_0 = 1 (probabilistic, dropped by default on its
    constant-bearing bit), y_m y_0 = y_{m+1}, y_252 y_0 = x, and z = g where
    g rewrites the polynomial expression with X^k (2 <= k <= 254) replaced
    by y_{254-k}. Requires a bijective table (no X^255 coefficient).
    """
    if poly.coeffs[255] != 0:
        raise ValueError("polynomial expression has an X^255 term; "
                         "chain construction needs a bijective table")
    reg = chain_registry()
    xb = BytePoly.from_bits(reg, bit_names("x"), Modulus.RIJNDAEL)
    zb = BytePoly.from_bits(reg, bit_names("z"), Modulus.RIJNDAEL)
    yb = [BytePoly.from_bits(reg, bit_names("y", 8, start=8 * m),
                             Modulus.RIJNDAEL)
          for m in range(CHAIN_BYTES)]
    one = BytePoly.from_const(reg, 1, Modulus.RIJNDAEL)

    equations = []
    labels = []

    def emit(bp: BytePoly, tag: str):
        for k, c in enumerate(bp.coefficients()):
            equations.append(c)
            labels.append(f"{tag}.t{k}")

    emit(xb * yb[0] + one, "inv")
    for m in range(CHAIN_BYTES - 1):
        emit(yb[m] * yb[0] + yb[m + 1], f"link{m:03d}")
    emit(yb[CHAIN_BYTES - 1] * yb[0] + xb, "close")

    gsets = [set(c.masks) for c in zb.coefficients()]

    def absorb(bp: BytePoly):
        for i, c in enumerate(bp.coefficients()):
            gsets[i] ^= c.masks

    absorb(BytePoly.from_const(reg, poly.coeffs[0], Modulus.RIJNDAEL))
    if poly.coeffs[1]:
        absorb(BytePoly.from_const(reg, poly.coeffs[1], Modulus.RIJNDAEL) * xb)
    for m in range(CHAIN_BYTES):
        c = poly.coeffs[2 + m]
        if c:
            absorb(BytePoly.from_const(reg, c, Modulus.RIJNDAEL)
                   * yb[CHAIN_BYTES - 1 - m])
    for k in range(8):
        equations.append(AnfPoly(reg, gsets[k]))
        labels.append(f"out.t{k}")

    first = 0 if keep_probabilistic else 1
    return MqSystem(reg, equations[first:], labels[first:], name=name)


def build_chain_rd(keep_probabilistic: bool = False) -> MqSystem:
    poly = lagrange_interpolate(truth_table(rd_spec()))
    return build_chain(poly, name="chain-rd",
                       keep_probabilistic=keep_probabilistic)


def build_chain_aia(keep_probabilistic: bool = False) -> MqSystem:
    poly = lagrange_interpolate(truth_table(aia_spec()))
    return build_chain(poly, name="chain-aia",
                       keep_probabilistic=keep_probabilistic)


SYSTEM_KEYS = ("rd23", "rd16", "rd32", "aia32", "chain-rd", "chain-aia")


def build_system(key: str, keep_probabilistic: bool = False) -> MqSystem:
    """Build one of the named systems; see SYSTEM_KEYS for valid names."""
    if key == "rd23":
        return build_rd23(keep_probabilistic)
    if key == "rd16":
        return build_rd16()
    if key == "rd32":
        return build_rd32()
    if key == "aia32":
        return build_aia32()
    if key == "chain-rd":
        return build_chain_rd(keep_probabilistic)
    if key == "chain-aia":
        return build_chain_aia(keep_probabilistic)
    raise ValueError(f"unknown system {key!r}; expected one of "
                     + ", ".join(SYSTEM_KEYS))

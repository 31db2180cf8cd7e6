"""Boolean polynomials in algebraic normal form over named GF(2) variables.

A polynomial is a set of monomials (XOR of AND-products); coefficients live
in GF(2), so a monomial is either present or absent and x*x = x. Monomials
are stored as integer bitmasks over the ordinals of a ``VarRegistry``, which
keeps products and hashing cheap even for registries with ~2k variables.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence


class VarRegistry:
    """Ordered, immutable collection of variable names with stable ordinals."""

    __slots__ = ("names", "index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names in registry")
        for n in names:
            if not n or any(c in n for c in " *+"):
                raise ValueError(f"invalid variable name {n!r}")
        self.names = names
        self.index = {n: i for i, n in enumerate(names)}

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self.index

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, VarRegistry) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        if len(self.names) > 6:
            shown = ", ".join(self.names[:3]) + ", ..., " + self.names[-1]
        else:
            shown = ", ".join(self.names)
        return f"VarRegistry({len(self.names)} vars: {shown})"

    def var(self, name: str) -> "AnfPoly":
        """The single-variable polynomial for ``name``."""
        return AnfPoly(self, (1 << self.index[name],))

    def zero(self) -> "AnfPoly":
        return AnfPoly(self, ())

    def one(self) -> "AnfPoly":
        return AnfPoly(self, (0,))


class Monomial:
    """Product of distinct variables, identified by an ordinal bitmask.

    The empty product (mask 0) is the constant monomial 1.
    """

    __slots__ = ("mask",)

    def __init__(self, mask: int):
        if mask < 0:
            raise ValueError("monomial mask must be non-negative")
        self.mask = mask

    @classmethod
    def from_ordinals(cls, ordinals: Iterable[int]) -> "Monomial":
        mask = 0
        for o in ordinals:
            mask |= 1 << o
        return cls(mask)

    @property
    def ordinals(self) -> tuple:
        out = []
        m = self.mask
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return tuple(out)

    @property
    def degree(self) -> int:
        return bin(self.mask).count("1")

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __repr__(self) -> str:
        return f"Monomial({self.mask:#x})"


def _sort_key(mask: int):
    # non-constant monomials by (degree, ordinals), the constant 1 last
    if mask == 0:
        return (1, 0, ())
    return (0, bin(mask).count("1"), _ordinals(mask))


def _ordinals(mask: int) -> tuple:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class AnfPoly:
    """Immutable ANF polynomial: an XOR-set of monomial bitmasks."""

    __slots__ = ("registry", "_masks")

    def __init__(self, registry: VarRegistry, masks: Iterable[int] = ()):
        self.registry = registry
        self._masks = frozenset(masks)

    @property
    def masks(self) -> frozenset:
        """Monomials as raw bitmasks (bit i = registry ordinal i)."""
        return self._masks

    def monomials(self) -> frozenset:
        """The stored monomials as a frozenset of :class:`Monomial`."""
        return frozenset(Monomial(m) for m in self._masks)

    def is_zero(self) -> bool:
        return not self._masks

    def has_constant_term(self) -> bool:
        return 0 in self._masks

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._masks:
            return -1
        return max(bin(m).count("1") for m in self._masks)

    def variables(self) -> frozenset:
        """Names of all variables occurring in the polynomial."""
        used = 0
        for m in self._masks:
            used |= m
        return frozenset(self.registry.names[o] for o in _ordinals(used))

    def _check(self, other: "AnfPoly"):
        if not isinstance(other, AnfPoly):
            raise TypeError(f"expected AnfPoly, got {type(other).__name__}")
        if self.registry != other.registry:
            raise ValueError("polynomials are over different registries")

    def __add__(self, other: "AnfPoly") -> "AnfPoly":
        self._check(other)
        return AnfPoly(self.registry, self._masks ^ other._masks)

    def __mul__(self, other: "AnfPoly") -> "AnfPoly":
        self._check(other)
        acc = set()
        for m1 in self._masks:
            for m2 in other._masks:
                m = m1 | m2
                if m in acc:
                    acc.discard(m)
                else:
                    acc.add(m)
        return AnfPoly(self.registry, acc)

    def substitute(self, mapping: Mapping[str, "AnfPoly"]) -> "AnfPoly":
        """Replace each mapped variable by its image polynomial.

        Every key must name a registry variable and every image must live
        over the same registry; unmapped variables pass through unchanged.
        """
        index = self.registry.index
        images = {}
        for name, img in mapping.items():
            if name not in index:
                raise ValueError(f"unknown variable {name!r} in substitution")
            if not isinstance(img, AnfPoly) or img.registry != self.registry:
                raise ValueError(f"image of {name!r} is not over the same registry")
            images[index[name]] = img
        if not images:
            return self
        result: set = set()
        for mask in self._msorted():
            keep = 0
            factors = []
            m = mask
            while m:
                low = m & -m
                o = low.bit_length() - 1
                img = images.get(o)
                if img is None:
                    keep |= low
                else:
                    factors.append(img)
                m ^= low
            cur = {keep}
            for img in factors:
                nxt: set = set()
                for a in cur:
                    for b in img._masks:
                        t = a | b
                        if t in nxt:
                            nxt.discard(t)
                        else:
                            nxt.add(t)
                cur = nxt
            result ^= cur
        return AnfPoly(self.registry, result)

    def _msorted(self):
        return sorted(self._masks)

    def evaluate(self, assignment: Mapping[str, int]) -> int:
        """GF(2) value at a total assignment of this polynomial's variables."""
        index = self.registry.index
        known = 0
        values = 0
        for name, bit in assignment.items():
            i = index.get(name)
            if i is None:
                raise ValueError(f"unknown variable {name!r} in assignment")
            known |= 1 << i
            if bit & 1:
                values |= 1 << i
        acc = 0
        for mask in self._masks:
            if mask & ~known:
                missing = self.registry.names[_ordinals(mask & ~known)[0]]
                raise ValueError(f"partial assignment: {missing!r} is unassigned")
            if mask & values == mask:
                acc ^= 1
        return acc

    def translated(self, registry: VarRegistry,
                   rename: Mapping[str, str] | None = None) -> "AnfPoly":
        """Re-express the polynomial over another registry (by name)."""
        rename = rename or {}
        old = self.registry.names
        new = registry.index
        cache: dict = {}
        masks = []
        for mask in self._masks:
            out = 0
            m = mask
            while m:
                low = m & -m
                bit = cache.get(low)
                if bit is None:
                    name = old[low.bit_length() - 1]
                    name = rename.get(name, name)
                    if name not in new:
                        raise ValueError(f"variable {name!r} missing from target registry")
                    bit = 1 << new[name]
                    cache[low] = bit
                out |= bit
                m ^= low
            masks.append(out)
        return AnfPoly(registry, masks)

    def canonical_text(self) -> str:
        """Deterministic text form: terms by (degree, ordinals), constant last."""
        if not self._masks:
            return "0"
        names = self.registry.names
        parts = []
        for mask in sorted(self._masks, key=_sort_key):
            if mask == 0:
                parts.append("1")
            else:
                parts.append("*".join(names[o] for o in _ordinals(mask)))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.canonical_text()

    def __repr__(self) -> str:
        return f"AnfPoly({self.canonical_text()})"

    def __len__(self) -> int:
        return len(self._masks)

    def __eq__(self, other) -> bool:
        return (isinstance(other, AnfPoly) and self.registry == other.registry
                and self._masks == other._masks)

    def __hash__(self) -> int:
        return hash(self._masks)


def parse_anf(registry: VarRegistry, text: str) -> AnfPoly:
    """Parse the canonical_text grammar: '+'-separated terms of '*'-separated
    factors, each factor a variable name or the literal 0/1."""
    if not text.strip():
        raise ValueError("empty polynomial text")
    index = registry.index
    masks: set = set()
    for term in text.split("+"):
        term = term.strip()
        if term == "0":
            continue
        if not term:
            raise ValueError("empty term in polynomial text")
        mask = 0
        for factor in term.split("*"):
            factor = factor.strip()
            if factor == "1":
                continue
            i = index.get(factor)
            if i is None:
                raise ValueError(f"unknown token {factor!r}")
            mask |= 1 << i
        if mask in masks:
            masks.discard(mask)
        else:
            masks.add(mask)
    return AnfPoly(registry, masks)


def make_registry(*groups: Sequence[str]) -> VarRegistry:
    """Registry from name groups, e.g. make_registry(bit_names('x'), bit_names('z'))."""
    names: list = []
    for g in groups:
        names.extend(g)
    return VarRegistry(names)


def bit_names(prefix: str, count: int = 8, start: int = 0) -> list:
    return [f"{prefix}{i}" for i in range(start, start + count)]

"""Exhaustive solution enumeration, chain-system verification, and ANF-to-CNF
export for external SAT solvers.

Enumeration is bit-parallel: every variable gets a 2^n-bit integer holding
its value across all assignments at once, so an equation is evaluated over
the whole assignment space with a handful of big-integer AND/XOR operations.
No SAT solver is bundled; ``run_solver`` shells out to a user-named binary.
"""

from __future__ import annotations

import subprocess
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .anf import bit_names
from .gf256 import gf_inv, gf_mul
from .mqgen import MqSystem

BRUTE_FORCE_LIMIT = 24


class VerificationError(Exception):
    """A structurally derived assignment violated an equation."""


@dataclass(frozen=True)
class SolutionSet:
    """Satisfying assignments, each an int with bit i = value of ordinal i;
    for x/z byte systems also the (x, z) projection sorted by x."""

    assignments: frozenset
    projection: Optional[tuple] = None

    def __len__(self) -> int:
        return len(self.assignments)


def _variable_patterns(nvars: int) -> list:
    """Bit-parallel value of each variable across all 2^nvars assignments:
    bit a of pattern v equals bit v of the assignment index a."""
    width = 1 << nvars
    pats = []
    for v in range(nvars):
        period = 1 << (v + 1)
        block = ((1 << (1 << v)) - 1) << (1 << v)  # ones in [2^v, 2^(v+1))
        reps = ((1 << width) - 1) // ((1 << period) - 1)
        pats.append(block * reps)
    return pats


def _eval_parallel(eq, pats, full: int) -> int:
    """Equation value across all assignment slots (bit a = value at a)."""
    acc = 0
    for mask in eq.masks:
        val = full
        m = mask
        while m and val:
            low = m & -m
            val &= pats[low.bit_length() - 1]
            m ^= low
        acc ^= val
    return acc


def _is_xz_registry(registry) -> bool:
    return list(registry.names) == bit_names("x") + bit_names("z")


def brute_force(mq: MqSystem) -> SolutionSet:
    """All assignments over the registry satisfying every equation."""
    n = len(mq.registry)
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(
            f"{n} variables exceed the exhaustive bound of {BRUTE_FORCE_LIMIT}; "
            "use chain_solutions for chain systems or export to CNF")
    width = 1 << n
    full = (1 << width) - 1
    pats = _variable_patterns(n)
    ok = full
    for eq in mq.equations:
        ok &= full ^ _eval_parallel(eq, pats, full)
        if not ok:
            break
    assignments = []
    rest = ok
    while rest:
        low = rest & -rest
        assignments.append(low.bit_length() - 1)
        rest ^= low
    projection = None
    if _is_xz_registry(mq.registry):
        pairs = sorted((a & 0xFF, a >> 8) for a in assignments)
        projection = tuple(pairs)
    return SolutionSet(frozenset(assignments), projection)


def chain_assignment(x: int, z: int) -> int:
    """Assignment bits for a chain registry: x, z, then the inverse-power
    chain y_0 = inv(x), y_{m+1} = y_m * y_0."""
    bits = x | (z << 8)
    y0 = gf_inv(x)
    cur = y0
    for m in range(253):
        bits |= cur << (16 + 8 * m)
        if m < 252:
            cur = gf_mul(cur, y0)
    return bits


def chain_solutions(mq: MqSystem, table: Sequence[int]) -> SolutionSet:
    """The 256 structured chain assignments, verified against every equation.

    For each input byte the intermediate bytes are derived from the inverse
    chain and z is taken from the table; any violated equation raises
    VerificationError naming its label.
    """
    if len(table) != 256:
        raise ValueError("table must have 256 entries")
    n = len(mq.registry)
    assignments = [chain_assignment(x, table[x]) for x in range(256)]
    # verify bit-parallel across the 256 assignments
    full = (1 << 256) - 1
    pats = []
    for v in range(n):
        pat = 0
        bit = 1 << v
        for j, a in enumerate(assignments):
            if a & bit:
                pat |= 1 << j
        pats.append(pat)
    for eq, label in zip(mq.equations, mq.labels):
        bad = _eval_parallel(eq, pats, full)
        if bad:
            x = (bad & -bad).bit_length() - 1
            raise VerificationError(
                f"equation {label} violated at input x={x:#04x}")
    projection = tuple((x, table[x]) for x in range(256))
    return SolutionSet(frozenset(assignments), projection)


@dataclass(frozen=True)
class CnfFormula:
    """CNF over the registry variables (1..n) plus auxiliaries; satisfying
    assignments restricted to the original variables are the MQ solutions."""

    num_vars: int
    clauses: tuple


def _xor_clauses(variables: Sequence[int], parity: int, out: list):
    """Clauses forcing XOR(variables) = parity."""
    k = len(variables)
    if k == 0:
        if parity:
            out.append(())  # unsatisfiable
        return
    for bits in range(1 << k):
        if bin(bits).count("1") & 1 == parity:
            continue  # assignment already has the wanted parity
        out.append(tuple(-v if (bits >> i) & 1 else v
                         for i, v in enumerate(variables)))


def to_cnf(mq: MqSystem, max_xor_arity: int = 6) -> CnfFormula:
    """Tseitin-style encoding: one AND-variable per distinct nonlinear
    monomial, then each equation as an XOR chain split into blocks of at
    most max_xor_arity literals (fresh variable per block)."""
    if max_xor_arity < 3:
        raise ValueError("max_xor_arity must be at least 3")
    n = len(mq.registry)
    next_var = n + 1
    clauses: list = []
    and_vars: dict = {}
    for eq in mq.equations:
        items = []
        parity = 0
        for mask in sorted(eq.masks, key=lambda m: (bin(m).count("1"), m)):
            if mask == 0:
                parity ^= 1
                continue
            if mask & (mask - 1) == 0:
                items.append(mask.bit_length())  # ordinal + 1
                continue
            a = and_vars.get(mask)
            if a is None:
                a = next_var
                next_var += 1
                and_vars[mask] = a
                factors = []
                m = mask
                while m:
                    low = m & -m
                    factors.append(low.bit_length())
                    m ^= low
                for f in factors:
                    clauses.append((-a, f))
                clauses.append(tuple([a] + [-f for f in factors]))
            items.append(a)
        while len(items) > max_xor_arity:
            head = items[:max_xor_arity - 1]
            carry = next_var
            next_var += 1
            _xor_clauses(head + [carry], 0, clauses)
            items = [carry] + items[max_xor_arity - 1:]
        _xor_clauses(items, parity, clauses)
    return CnfFormula(num_vars=next_var - 1, clauses=tuple(clauses))


def write_dimacs(formula: CnfFormula, sink) -> None:
    """Standard DIMACS CNF; variable 1 is the first registry variable."""
    if isinstance(sink, (str, Path)):
        with open(sink, "w") as fh:
            write_dimacs(formula, fh)
        return
    sink.write(f"p cnf {formula.num_vars} {len(formula.clauses)}\n")
    for clause in formula.clauses:
        if clause:
            sink.write(" ".join(str(l) for l in clause) + " 0\n")
        else:
            sink.write("0\n")


def parse_dimacs(text: str) -> CnfFormula:
    """Inverse of write_dimacs (comment lines tolerated)."""
    num_vars = None
    clauses = []
    current: list = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad DIMACS header: {line!r}")
            num_vars = int(parts[2])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            else:
                current.append(lit)
    if num_vars is None:
        raise ValueError("missing DIMACS header")
    if current:
        raise ValueError("unterminated clause at end of input")
    return CnfFormula(num_vars=num_vars, clauses=tuple(clauses))


def run_solver(binary: str, dimacs_path: str, timeout: Optional[float] = None):
    """Best-effort external solver call: pass the file path as the single
    argument, read 's SATISFIABLE/UNSATISFIABLE' and 'v' model lines."""
    proc = subprocess.run([binary, str(dimacs_path)], capture_output=True,
                          text=True, timeout=timeout)
    status = "UNKNOWN"
    model = []
    for line in proc.stdout.splitlines():
        if line.startswith("s "):
            if "UNSATISFIABLE" in line:
                status = "UNSAT"
            elif "SATISFIABLE" in line:
                status = "SAT"
        elif line.startswith("v "):
            model.extend(int(t) for t in line[2:].split() if t != "0")
    return status, (model if status == "SAT" else None)

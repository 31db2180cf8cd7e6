"""Independent oracles used by the tests.

Everything here deliberately avoids the library's own fast paths: the field
multiply is a separate shift-xor implementation, the interpolation oracle is
dense Gaussian elimination on the Vandermonde system, and the CNF oracle
decides models from clause semantics alone.
"""

import numpy as np


def slow_gf_mul(a, b):
    """Schoolbook GF(2^8) multiply: expand then reduce by 0x11B."""
    r = 0
    for i in range(8):
        if (b >> i) & 1:
            r ^= a << i
    for bit in range(14, 7, -1):
        if (r >> bit) & 1:
            r ^= 0x11B << (bit - 8)
    return r


def _oracle_tables():
    exp = np.zeros(510, dtype=np.int32)
    log = np.zeros(256, dtype=np.int32)
    x = 1
    for i in range(255):
        exp[i] = x
        log[x] = i
        x = slow_gf_mul(x, 0x03)
    assert x == 1
    exp[255:510] = exp[0:255]
    return exp, log


_EXP, _LOG = _oracle_tables()


def _vec_mul(u, v):
    """Element-wise GF(2^8) product of two uint8-valued arrays."""
    u = np.asarray(u, dtype=np.int32)
    v = np.asarray(v, dtype=np.int32)
    out = _EXP[(_LOG[u] + _LOG[v]) % 255]
    return np.where((u == 0) | (v == 0), 0, out)


def vandermonde_interpolate(table):
    """Interpolation coefficients by Gaussian elimination over GF(2^8).

    Solves the 256x256 system M c = f with M[a][k] = a^k (0^0 = 1).
    """
    assert len(table) == 256
    m = np.zeros((256, 257), dtype=np.int32)
    col = np.ones(256, dtype=np.int32)
    a = np.arange(256, dtype=np.int32)
    for k in range(256):
        m[:, k] = col
        col = _vec_mul(col, a)
    m[:, 256] = np.asarray(table, dtype=np.int32)

    for col_i in range(256):
        pivot = None
        for r in range(col_i, 256):
            if m[r, col_i]:
                pivot = r
                break
        assert pivot is not None, "Vandermonde matrix is singular?"
        if pivot != col_i:
            m[[col_i, pivot]] = m[[pivot, col_i]]
        inv = _EXP[(255 - _LOG[m[col_i, col_i]]) % 255]
        m[col_i] = _vec_mul(m[col_i], np.full(257, inv, dtype=np.int32))
        factors = m[:, col_i].copy()
        factors[col_i] = 0
        rows = factors != 0
        if rows.any():
            prod = _vec_mul(np.outer(factors[rows], np.ones(257, np.int32)),
                            np.tile(m[col_i], (int(rows.sum()), 1)))
            m[rows] ^= prod
    return [int(v) for v in m[:, 256]]


def enumeration_patterns(nvars):
    """Pattern ints: bit a of pattern v = bit v of assignment index a."""
    width = 1 << nvars
    pats = []
    for v in range(nvars):
        period = 1 << (v + 1)
        block = ((1 << (1 << v)) - 1) << (1 << v)
        pats.append(block * (((1 << width) - 1) // ((1 << period) - 1)))
    return pats


def cnf_models_over_originals(formula, n_orig):
    """Set of original-variable assignments extendable to a CNF model.

    Works over all 2^n_orig assignments at once: every variable carries a
    known-mask and a value-mask, clauses are unit-propagated to fixpoint,
    and a position counts as a model only when every clause is satisfied
    there. Requires auxiliaries to be functionally determined by the
    originals (any Tseitin-style encoding), else propagation stalls and
    this raises.
    """
    width = 1 << n_orig
    full = (1 << width) - 1
    known = [0] * formula.num_vars
    value = [0] * formula.num_vars
    for v, pat in enumerate(enumeration_patterns(n_orig)):
        known[v] = full
        value[v] = pat
    unsat = 0
    changed = True
    while changed:
        changed = False
        for clause in formula.clauses:
            if not clause:
                if unsat != full:
                    unsat = full
                    changed = True
                continue
            false_masks = []
            sat_mask = 0
            for lit in clause:
                v = abs(lit) - 1
                if lit > 0:
                    sat_mask |= known[v] & value[v]
                    false_masks.append(known[v] & ~value[v] & full)
                else:
                    sat_mask |= known[v] & ~value[v] & full
                    false_masks.append(known[v] & value[v])
            all_false = full
            for f in false_masks:
                all_false &= f
            fresh = all_false & ~unsat
            if fresh:
                unsat |= fresh
                changed = True
            open_pos = full & ~sat_mask & ~unsat
            if not open_pos:
                continue
            for i, lit in enumerate(clause):
                v = abs(lit) - 1
                others = open_pos
                for j, f in enumerate(false_masks):
                    if j != i:
                        others &= f
                        if not others:
                            break
                force = others & ~known[v]
                if force:
                    known[v] |= force
                    if lit > 0:
                        value[v] |= force
                    else:
                        value[v] &= ~force
                    changed = True
    models = full & ~unsat
    for clause in formula.clauses:
        sat = 0
        for lit in clause:
            v = abs(lit) - 1
            if lit > 0:
                sat |= known[v] & value[v]
            else:
                sat |= known[v] & ~value[v] & full
        models &= sat
    undecided = full & ~unsat & ~models
    if undecided:
        raise RuntimeError("unit propagation stalled; encoding is not "
                           "functionally determined")
    out = set()
    rest = models
    while rest:
        low = rest & -rest
        out.add(low.bit_length() - 1)
        rest ^= low
    return out

"""S-box multivariate quadratic systems: derivation, metrics, verification."""

from .anf import AnfPoly, Monomial, VarRegistry, bit_names, make_registry, parse_anf
from .gf256 import (PolyExpr, format_hex_table, gf_inv, gf_mul, gf_pow,
                    lagrange_interpolate, parse_hex_table, poly_eval)
from .mqgen import (SYSTEM_KEYS, MqSystem, build_aia32, build_chain,
                    build_chain_aia, build_chain_rd, build_inverse32,
                    build_rd16, build_rd23, build_rd32, build_system,
                    power_equations, product_equations, rd_core8)
from .raa import SystemStats, gamma, gamma_cp, rank_gf2, stats
from .sbox import (Affine, Inverse, SboxSpec, affine_substitution_dict,
                   aia_spec, rd_spec, spec_from_text, spec_to_text,
                   truth_table)
from .solve import (CnfFormula, SolutionSet, VerificationError, brute_force,
                    chain_solutions, parse_dimacs, run_solver, to_cnf,
                    write_dimacs)
from .tpoly import BytePoly, Modulus

__version__ = "0.1.0"

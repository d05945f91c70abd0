"""Squares modulo an odd prime: Legendre symbols, primitive-root cycles,
inversion statistics and runs of the Legendre sequence."""

from ._core import (
    DomainError,
    GeneratorCycle,
    InversionSummary,
    NullMoments,
    PairCounts,
    SimReport,
    __version__,
    aladov_predicted,
    count_inversions,
    count_runs,
    discrete_log,
    euler_phi,
    factorize,
    generator_cycle,
    inverse_pairs,
    inversion_null_moments,
    inversion_summary,
    is_prime,
    is_primitive_root,
    lcg_orbit,
    legendre_euler,
    legendre_reciprocity,
    legendre_sequence,
    mul_mod,
    pair_counts,
    pow_mod,
    primitive_roots,
    random_fixed_cycle,
    residue_rule,
    runs_null_moments,
    scan_runs,
    sd_pvalue,
    simulate_inversions,
    simulate_runs,
    sqrt_mod,
    square_cycle,
    squares_set,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]

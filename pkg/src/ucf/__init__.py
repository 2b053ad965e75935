"""Exact analytics, constructions, and exhaustive verification for
union-closed set families."""

from .bfamily import BReport, KCounts, PropResult, b_report, k_counts, minimum_covers, prop_suite
from .bounds import (
    BoundEval,
    case2_subcase_bounds,
    eta,
    f_relax,
    g_relax,
    minimize_f,
    minimize_g,
    prop_d_check,
    zeta,
)
from .chains import (
    ChainReport,
    Lemma13Report,
    SizeBoundTrace,
    Thm12Witness,
    chain_report,
    height,
    lemma13_check,
    size_bound_witness,
    thm12_bound,
    thm12_witness,
)
from .constructions import (
    ConstructionCertificate,
    ak_certificate,
    astar_certificate,
    astarstar_certificate,
    astarstar_closed_form,
    build_ak,
    build_astar,
    build_astarstar,
    delta,
    ladder_closed_form,
    validate_ladder_branches,
)
from .core import (
    Family,
    FranklWitness,
    SetWord,
    WORD_CAPACITY,
    avg_size,
    base_is_full,
    base_set,
    format_family,
    frankl_witness,
    frequencies,
    full_word,
    irr,
    is_irredundant,
    is_separating,
    is_union_closed,
    parse_family,
    slice_by_size,
    slice_by_subset,
    union_closure,
    word_elements,
    word_from_elements,
)
from .enumeration import (
    ENUMERATION_CAP,
    THEOREM_IDS,
    EnumFilter,
    VerifyReport,
    Violation,
    brute_force_uc,
    canonical_form,
    enumerate_uc,
    verify_theorem,
)
from . import errors

__all__ = [name for name in dir() if not name.startswith("_")]

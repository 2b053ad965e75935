"""Small-slice cover analysis and the structural proposition battery.

For a union-closed family with base [n], the small slice is the set of
members of cardinality below n/2. Its base B is covered by some subfamily;
we search for a minimum-size one. Minimality forces irredundance (dropping
a member whose private contribution is empty would give a smaller cover),
which is re-verified on every result.

The search is by increasing subfamily size and is capped at the family
height: a cover larger than the height would yield, via its running unions,
a chain longer than the height. Blowing the cap therefore indicates a bug,
not bad input.

`prop_suite` evaluates a battery of structural facts about separating
union-closed families of height 4, keyed by the letters A-L (D is an
algebraic identity and lives in `ucf.bounds`). Each record states whether
the fact's hypotheses hold for the given family, whether its conclusion
holds, and a concrete witness when it fails. The letters are stable
identifiers used by the CLI and the exhaustive verifier.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .chains import chain_report
from .core import (
    Family,
    SetWord,
    avg_size,
    irr,
    is_irredundant,
    is_separating,
    require_base_full,
    require_union_closed,
    slice_by_size,
    word_elements,
)
from .errors import EmptyFamily, InternalError


@dataclass(frozen=True)
class BReport:
    """Base of the small slice, one minimum cover of it, and the cover size."""

    b: SetWord
    cover: Family
    size: int


def _cover_candidates(fam: Family) -> tuple[tuple[SetWord, ...], SetWord, int]:
    require_union_closed(fam)
    require_base_full(fam)
    small = slice_by_size(fam, "lt", Fraction(fam.n, 2)).members
    target = 0
    for m in small:
        target |= m
    return small, target, chain_report(fam).height


def b_report(fam: Family) -> BReport:
    """Lexicographically least minimum subfamily of the small slice whose
    base equals the slice's base.

    Candidates are scanned by size 0, 1, 2, ... and within a size in
    canonical order, so the result is deterministic. An empty slice (or a
    slice of just the empty set) yields the empty cover.
    """
    small, target, cap = _cover_candidates(fam)
    for size in range(cap + 1):
        for combo in itertools.combinations(small, size):
            acc = 0
            for m in combo:
                acc |= m
            if acc == target:
                cover = Family(fam.n, combo)
                if not is_irredundant(cover):
                    raise InternalError("minimum cover must be irredundant")
                return BReport(target, cover, size)
    raise InternalError("cover search exceeded the height cap")


def minimum_covers(fam: Family) -> tuple[Family, ...]:
    """All minimum-size covers of the small slice's base, canonical order."""
    small, target, cap = _cover_candidates(fam)
    for size in range(cap + 1):
        found = []
        for combo in itertools.combinations(small, size):
            acc = 0
            for m in combo:
                acc |= m
            if acc == target:
                cover = Family(fam.n, combo)
                if not is_irredundant(cover):
                    raise InternalError("minimum cover must be irredundant")
                found.append(cover)
        if found:
            return tuple(found)
    raise InternalError("cover search exceeded the height cap")


@dataclass(frozen=True)
class KCounts:
    """k[i-1] = number of ground elements lying in exactly i cover members."""

    k: tuple[int, ...]


def k_counts(cover: Family) -> KCounts:
    if not cover.members:
        raise EmptyFamily("k_counts of empty cover")
    multiplicity = [0] * cover.n
    for m in cover.members:
        e = 0
        while m:
            if m & 1:
                multiplicity[e] += 1
            m >>= 1
            e += 1
    size = len(cover.members)
    k = tuple(sum(1 for c in multiplicity if c == i) for i in range(1, size + 1))
    if sum(i * k[i - 1] for i in range(1, size + 1)) != sum(
        m.bit_count() for m in cover.members
    ):
        raise InternalError("k-count double-counting identity failed")
    return KCounts(k)


# ---------------------------------------------------------------------------
# Proposition battery
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PropResult:
    applicable: bool
    holds: bool | None
    witness: Any = None


PROP_KEYS = ("A", "B", "C", "E", "F", "G", "H", "I", "J", "K", "L")

# Labels assigned by the form classification under proposition I.
EQ_IRR_UNION = "eq-irr-union"
FORM_LABELS = ("form-i", "form-ii", "form-iii")
VIOLATION = "violation"


def prop_suite(fam: Family) -> dict[str, PropResult]:
    """Evaluate propositions A-C, E-L against one family.

    Hypotheses are decided mechanically: A-C and E require a separating
    family of height 4 with n >= 4 and cover size at most 2 (A-C further
    need |B| < n-1, E needs |B| = n-1 with a slice member meeting both
    cover halves and at least four slice members); F-I require cover size
    3, J-L cover size 4, all at height 4. Inapplicable propositions are
    reported with holds=None.
    """
    require_union_closed(fam)
    require_base_full(fam)

    n = fam.n
    sep = is_separating(fam)
    h = chain_report(fam).height
    br = b_report(fam)
    bword = br.b
    bsize = bword.bit_count()
    cover = br.cover
    small = slice_by_size(fam, "lt", Fraction(n, 2)).members
    sub_b = tuple(m for m in fam.members if m | bword == bword and m != bword)
    avg = avg_size(fam)
    half = Fraction(n, 2)

    results: dict[str, PropResult] = {}

    main_gate = sep and h == 4 and n >= 4 and br.size <= 2
    abc_applicable = main_gate and bsize < n - 1

    # A: complements within B of distinct proper-subset members are disjoint.
    if abc_applicable:
        witness = None
        for x1, x2 in itertools.combinations(sub_b, 2):
            if (bword & ~x1) & (bword & ~x2):
                witness = {"x1": word_elements(x1), "x2": word_elements(x2)}
                break
        results["A"] = PropResult(True, witness is None, witness)
    else:
        results["A"] = PropResult(False, None)

    # B: either the average already meets n/2, or 1 <= |sub_b| <= |B|.
    if abc_applicable:
        ok = avg >= half or 1 <= len(sub_b) <= bsize
        witness = None if ok else {"avg": str(avg), "sub_b": len(sub_b), "bsize": bsize}
        results["B"] = PropResult(True, ok, witness)
    else:
        results["B"] = PropResult(False, None)

    # C: total size of proper-subset members is at least (count-1)*|B|.
    if abc_applicable:
        total = sum(m.bit_count() for m in sub_b)
        ok = total >= (len(sub_b) - 1) * bsize
        results["C"] = PropResult(True, ok, None if ok else {"total": total, "count": len(sub_b)})
    else:
        results["C"] = PropResult(False, None)

    # E: with a two-set cover of an (n-1)-element base and a slice member
    # meeting both halves, any four distinct slice members total >= (3n+1)/2.
    e_applicable = (
        sep
        and h == 4
        and n >= 4
        and br.size == 2
        and bsize == n - 1
        and len(small) >= 4
        and any(
            m not in cover.members and m & cover.members[0] and m & cover.members[1]
            for m in small
        )
    )
    if e_applicable:
        bound = Fraction(3 * n + 1, 2)
        witness = None
        for quad in itertools.combinations(small, 4):
            if sum(m.bit_count() for m in quad) < bound:
                witness = {"sets": [word_elements(m) for m in quad]}
                break
        results["E"] = PropResult(True, witness is None, witness)
    else:
        results["E"] = PropResult(False, None)

    three_gate = sep and h == 4 and br.size == 3
    four_gate = sep and h == 4 and br.size == 4
    irrs = tuple(irr(m, cover) for m in cover.members)
    irr_union = 0
    for w in irrs:
        irr_union |= w
    non_cover_small = tuple(m for m in small if m not in cover.members)

    # F: a three-set cover forces |B| into {n-1, n}.
    if three_gate:
        ok = bsize in (n - 1, n)
        results["F"] = PropResult(True, ok, None if ok else {"bsize": bsize})
    else:
        results["F"] = PropResult(False, None)

    # G: |B| = n: no non-cover slice member may contain every private part.
    if three_gate and bsize == n:
        witness = None
        for m in non_cover_small:
            if irr_union | m == m:
                witness = {"a": word_elements(m)}
                break
        results["G"] = PropResult(True, witness is None, witness)
    else:
        results["G"] = PropResult(False, None)

    # H: |B| = n: slice members meet each multi-element private part in
    # 0, all, or all-but-one of its elements.
    if three_gate and bsize == n:
        witness = None
        for m in small:
            for w in irrs:
                size = w.bit_count()
                if size > 1 and (m & w).bit_count() not in (0, size - 1, size):
                    witness = {"a": word_elements(m), "irr": word_elements(w)}
                    break
            if witness:
                break
        results["H"] = PropResult(True, witness is None, witness)
    else:
        results["H"] = PropResult(False, None)

    # I: |B| = n-1: each non-cover slice member is the union of the private
    # parts, or matches exactly one of the three symmetric-difference forms.
    if three_gate and bsize == n - 1:
        classifications = []
        ok = True
        for m in non_cover_small:
            label = _classify_form(m, cover.members, irrs, irr_union)
            classifications.append({"a": word_elements(m), "label": label})
            if label == VIOLATION:
                ok = False
        results["I"] = PropResult(True, ok, {"classifications": classifications})
    else:
        results["I"] = PropResult(False, None)

    # J: a four-set cover forces |B| = n.
    if four_gate:
        ok = bsize == n
        results["J"] = PropResult(True, ok, None if ok else {"bsize": bsize})
    else:
        results["J"] = PropResult(False, None)

    # K: four-set covers have singleton private parts.
    if four_gate:
        ok = all(w.bit_count() == 1 for w in irrs)
        witness = None if ok else {"irrs": [word_elements(w) for w in irrs]}
        results["K"] = PropResult(True, ok, witness)
    else:
        results["K"] = PropResult(False, None)

    # L: four-set cover size arithmetic. Even n pins every cover member to
    # (n-2)/2; odd n allows a window, rigid once one member hits (n-5)/2.
    if four_gate:
        sizes = [m.bit_count() for m in cover.members]
        total = sum(sizes)
        if n % 2 == 0:
            ok = total == 2 * n - 4 and all(2 * s == n - 2 for s in sizes)
        else:
            ok = 2 * n - 4 <= total <= 2 * n - 2 and all(2 * s >= n - 5 for s in sizes)
            if ok and any(2 * s == n - 5 for s in sizes):
                ok = all(2 * s == n - 1 for s in sizes if 2 * s != n - 5)
        results["L"] = PropResult(True, ok, None if ok else {"sizes": sizes})
    else:
        results["L"] = PropResult(False, None)

    return results


def _classify_form(
    m: SetWord,
    cover: tuple[SetWord, ...],
    irrs: tuple[SetWord, ...],
    irr_union: SetWord,
) -> str:
    if m == irr_union:
        return EQ_IRR_UNION
    matched = []
    for i in range(3):
        j, k = [t for t in range(3) if t != i]
        sym = (cover[j] | cover[k]) & ~(cover[j] & cover[k])
        if m & irrs[i] == 0 and sym & ~m == 0:
            matched.append(FORM_LABELS[i])
    return matched[0] if len(matched) == 1 else VIOLATION


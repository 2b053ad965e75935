"""Set families over a ground set [n] = {1, ..., n}, as integer bitmasks.

A member set is a plain Python int: element i is present iff bit i-1 is set.
Subset testing, union, and cardinality are single machine-word operations
(`a & b == a`, `a | b`, `int.bit_count`). The word capacity is fixed at
W = 64: every family declares a ground size 1 <= n <= 64, and no member may
set a bit at position >= n.

The ground size is *declared*, not inferred. A family over n=5 whose members
only touch {1,2,3} is legal for the generic operations here, but analyses
that assume the base set equals [n] must call :func:`require_base_full`.

Families are immutable values: members are stored deduplicated in canonical
order (ascending integer value of the bitmask), so structurally equal
families compare equal. All operations are pure functions; everything in
this module is safe to share across threads.

Averages and thresholds are exact `fractions.Fraction` values throughout;
no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (
    BaseNotFull,
    EmptyFamily,
    NotAMember,
    NotSeparating,
    NotUnionClosed,
    ParseError,
)

WORD_CAPACITY = 64

# A member set: bitmask with element i at bit i-1.
SetWord = int


def word_from_elements(elements: Iterable[int]) -> SetWord:
    """Bitmask for a collection of 1-based elements."""
    word = 0
    for e in elements:
        word |= 1 << (e - 1)
    return word


def word_elements(word: SetWord) -> tuple[int, ...]:
    """1-based elements of a bitmask, ascending."""
    out = []
    e = 1
    while word:
        if word & 1:
            out.append(e)
        word >>= 1
        e += 1
    return tuple(out)


def full_word(n: int) -> SetWord:
    """The full set [n]."""
    return (1 << n) - 1


@dataclass(frozen=True)
class Family:
    """A distinct, canonically ordered collection of member sets over [n].

    `members` is a strictly increasing tuple of bitmasks (strictness encodes
    distinctness); the empty tuple is a legal family for the operations that
    permit it.
    """

    n: int
    members: tuple[SetWord, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= WORD_CAPACITY:
            raise ValueError(f"ground size must be in [1, {WORD_CAPACITY}], got {self.n}")
        top = 1 << self.n
        prev = -1
        for m in self.members:
            if not 0 <= m < top:
                raise ValueError(f"member {m:#x} sets bits outside [{self.n}]")
            if m <= prev:
                raise ValueError("members must be distinct and canonically ordered")
            prev = m

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[SetWord]) -> "Family":
        """Build from bitmasks in any order; duplicates are rejected."""
        ordered = tuple(sorted(masks))
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise ValueError(f"duplicate member {word_elements(a)}")
        return cls(n, ordered)

    @classmethod
    def of(cls, n: int, sets: Iterable[Iterable[int]]) -> "Family":
        """Build from element collections, e.g. Family.of(3, [{1,2}, {3}, ()])."""
        return cls.from_masks(n, (word_from_elements(s) for s in sets))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[SetWord]:
        return iter(self.members)

    def __contains__(self, word: SetWord) -> bool:
        return word in set(self.members)

    def member_sets(self) -> tuple[tuple[int, ...], ...]:
        """Members as element tuples, canonical order (for reports)."""
        return tuple(word_elements(m) for m in self.members)


# ---------------------------------------------------------------------------
# Text format: `n=<int>` header, then one set per nonblank line (ascending
# elements separated by spaces, the empty set as `{}`), `#` starts a comment.
# ---------------------------------------------------------------------------

def parse_family(text: str) -> Family:
    """Parse the family text format; malformed input raises ParseError."""
    n = None
    masks: list[SetWord] = []
    seen: set[SetWord] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith("n="):
                raise ParseError(lineno, "expected header 'n=<integer>'")
            try:
                n = int(line[2:])
            except ValueError:
                raise ParseError(lineno, f"bad ground size {line[2:]!r}") from None
            if not 1 <= n <= WORD_CAPACITY:
                raise ParseError(lineno, f"ground size must be in [1, {WORD_CAPACITY}]")
            continue
        if line == "{}":
            word = 0
        else:
            try:
                elems = [int(tok) for tok in line.split()]
            except ValueError:
                raise ParseError(lineno, f"bad element in {line!r}") from None
            prev = 0
            for e in elems:
                if not 1 <= e <= n:
                    raise ParseError(lineno, f"element {e} outside [1, {n}]")
                if e <= prev:
                    raise ParseError(lineno, "elements must be strictly ascending")
                prev = e
            word = word_from_elements(elems)
        if word in seen:
            raise ParseError(lineno, f"duplicate set {line!r}")
        seen.add(word)
        masks.append(word)
    if n is None:
        raise ParseError(1, "missing 'n=<integer>' header")
    return Family.from_masks(n, masks)


def format_family(fam: Family) -> str:
    """Render in the text format; round-trips through parse_family."""
    lines = [f"n={fam.n}"]
    for m in fam.members:
        lines.append(" ".join(str(e) for e in word_elements(m)) if m else "{}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Predicates and slicing
# ---------------------------------------------------------------------------

def base_set(fam: Family) -> SetWord:
    """Union of all members. Empty families have no base."""
    if not fam.members:
        raise EmptyFamily("base_set of empty family")
    out = 0
    for m in fam.members:
        out |= m
    return out


def base_is_full(fam: Family) -> bool:
    return bool(fam.members) and base_set(fam) == full_word(fam.n)


def is_union_closed(fam: Family) -> bool:
    """True iff the family has a nonempty member and X|Y is a member for all X, Y."""
    if not any(fam.members):
        return False
    have = set(fam.members)
    ms = fam.members
    for i, x in enumerate(ms):
        for y in ms[i + 1:]:
            if x | y not in have:
                return False
    return True


def union_closure(fam: Family) -> Family:
    """Smallest union-closed superfamily: close under pairwise unions to fixpoint."""
    if not fam.members:
        raise EmptyFamily("union_closure of empty family")
    have = set(fam.members)
    frontier = list(have)
    while frontier:
        fresh = []
        for x in frontier:
            for y in have:
                u = x | y
                if u not in have:
                    fresh.append(u)
        for u in fresh:
            have.add(u)
        frontier = fresh
    return Family.from_masks(fam.n, have)


def is_separating(fam: Family) -> bool:
    """True iff all n element signatures (sets of members containing each
    element) are pairwise distinct; equivalent to every pair of distinct
    elements of [n] being split by some member.

    Elements of [n] lying in no member all share the empty signature, so two
    such elements make the family non-separating.
    """
    sigs = [0] * fam.n
    for idx, m in enumerate(fam.members):
        bit = 1 << idx
        e = 0
        while m:
            if m & 1:
                sigs[e] |= bit
            m >>= 1
            e += 1
    return len(set(sigs)) == fam.n


_SIZE_TESTS = {
    "lt": lambda c, x: c < x,
    "le": lambda c, x: c <= x,
    "gt": lambda c, x: c > x,
    "ge": lambda c, x: c >= x,
}


def slice_by_size(fam: Family, kind: str, x: Fraction | int) -> Family:
    """Members whose cardinality compares to x as requested (kind in lt/le/gt/ge)."""
    try:
        test = _SIZE_TESTS[kind]
    except KeyError:
        raise ValueError(f"kind must be one of {sorted(_SIZE_TESTS)}, got {kind!r}") from None
    if x < 0:
        raise ValueError("size threshold must be >= 0")
    return Family(fam.n, tuple(m for m in fam.members if test(m.bit_count(), x)))


def slice_by_subset(fam: Family, kind: str, word: SetWord) -> Family:
    """Members that are proper subsets ('proper') or subsets ('improper') of word."""
    if kind == "proper":
        keep = tuple(m for m in fam.members if m | word == word and m != word)
    elif kind == "improper":
        keep = tuple(m for m in fam.members if m | word == word)
    else:
        raise ValueError(f"kind must be 'proper' or 'improper', got {kind!r}")
    return Family(fam.n, keep)


def irr(word: SetWord, ctx: Family) -> SetWord:
    """Elements of word covered by no other member of ctx."""
    if word not in set(ctx.members):
        raise NotAMember(f"{word_elements(word)} is not a member of the context family")
    others = 0
    for m in ctx.members:
        if m != word:
            others |= m
    return word & ~others


def is_irredundant(fam: Family) -> bool:
    """Every member keeps a private element; the empty family qualifies vacuously."""
    for m in fam.members:
        others = 0
        for other in fam.members:
            if other != m:
                others |= other
        if m & ~others == 0:
            return False
    return True


def avg_size(fam: Family) -> Fraction:
    """Exact average member cardinality."""
    if not fam.members:
        raise EmptyFamily("avg_size of empty family")
    return Fraction(sum(m.bit_count() for m in fam.members), len(fam.members))


def frequencies(fam: Family) -> tuple[int, ...]:
    """count[i-1] = number of members containing element i, for i in [n]."""
    counts = [0] * fam.n
    for m in fam.members:
        e = 0
        while m:
            if m & 1:
                counts[e] += 1
            m >>= 1
            e += 1
    return tuple(counts)


@dataclass(frozen=True)
class FranklWitness:
    """A maximum-frequency element against the half-family threshold."""

    element: int
    count: int
    threshold: Fraction
    ok: bool


def frankl_witness(fam: Family) -> FranklWitness:
    """Most frequent element (smallest index on ties) vs |family|/2."""
    if not fam.members:
        raise EmptyFamily("frankl_witness of empty family")
    counts = frequencies(fam)
    best = max(range(fam.n), key=lambda i: (counts[i], -i))
    threshold = Fraction(len(fam.members), 2)
    return FranklWitness(best + 1, counts[best], threshold, counts[best] >= threshold)


# ---------------------------------------------------------------------------
# Precondition helpers shared by the analysis modules
# ---------------------------------------------------------------------------

def require_nonempty(fam: Family) -> None:
    if not fam.members:
        raise EmptyFamily("family must be nonempty")


def require_union_closed(fam: Family) -> None:
    if not is_union_closed(fam):
        raise NotUnionClosed("family is not union-closed")


def require_separating(fam: Family) -> None:
    if not is_separating(fam):
        raise NotSeparating("family is not separating")


def require_base_full(fam: Family) -> None:
    if not base_is_full(fam):
        raise BaseNotFull(f"base set is not [{fam.n}]")

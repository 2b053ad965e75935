"""Exhaustive enumeration of union-closed families with base exactly [n].

The generator exploits two facts. First, a union-closed family whose base
is [n] must contain [n] itself (the union of all members is a member), so
[n] is seeded and the remaining 2^n - 1 subsets are decided in decreasing
integer order. Second, bit-or can only grow a mask's integer value: when a
candidate S is considered, S | X exceeds S for every already-present X, so
the union was itself decided earlier and legality of adding S reduces to
membership tests against the current family. A branch that would need an
already-excluded union is dead and is pruned. Every leaf of this DFS is
therefore union-closed, visited exactly once, in a deterministic order
(include tried before exclude at each candidate).

Alongside membership the DFS maintains, per member, the length of the
longest chain bottoming out at that member; a new set sits below every
existing one in integer order, so older values never change and the family
height is an O(|F|) incremental update. Verification tasks whose hypotheses
cap the height use this to prune whole subtrees (adding sets never lowers
the height).

The hard cap is n <= 5. The independent oracle `brute_force_uc` (n <= 4)
iterates all 2^(2^n) subfamilies of the power set and filters; it shares no
machinery with the DFS and exists to validate it.

Parallel runs split the DFS at the first few candidate decisions into
disjoint subtrees, one task per valid prefix; per-subtree results are
merged in prefix order, so reports are identical for any worker count.
"""

from __future__ import annotations

import itertools
import os
import time
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import get_context
from typing import Callable

from .bfamily import b_report, prop_suite
from .chains import chain_report, lemma13_check, size_bound_witness, thm12_bound, thm12_witness
from .core import Family, avg_size, frankl_witness, frequencies, is_separating
from .errors import InternalError, NTooLarge

ENUMERATION_CAP = 5
ORACLE_CAP = 4


@dataclass(frozen=True)
class EnumFilter:
    """Per-family constraints applied to enumerated families.

    `height` accepts an exact int or an inclusive (lo, hi) pair. `bsize`
    constrains the minimum cover size of the small slice.
    """

    separating: bool | None = None
    height: int | tuple[int, int] | None = None
    bsize: int | None = None
    contains_empty: bool | None = None

    def height_range(self) -> tuple[int, int] | None:
        if self.height is None:
            return None
        if isinstance(self.height, int):
            return self.height, self.height
        return self.height

    def matches(self, fam: Family, h: int) -> bool:
        if self.contains_empty is not None:
            if (0 in fam.members) != self.contains_empty:
                return False
        rng = self.height_range()
        if rng is not None and not rng[0] <= h <= rng[1]:
            return False
        if self.separating is not None and is_separating(fam) != self.separating:
            return False
        if self.bsize is not None and b_report(fam).size != self.bsize:
            return False
        return True


def _dfs(
    n: int,
    emit: Callable[[list[int], int], None],
    h_cap: int | None,
    prefix: tuple[bool, ...] = (),
) -> None:
    """Run the generator, emitting (descending member list, height) leaves.

    `prefix` pins the first len(prefix) include/exclude decisions; nothing
    is emitted if the prefix itself is illegal.
    """
    full = (1 << n) - 1
    members = [full]
    member_set = {full}
    ups = {full: 1}

    def try_add(s: int) -> int:
        """Longest-chain length bottoming at s if added, 0 if s is illegal."""
        up_s = 1
        for x in members:
            u = s | x
            if u == x:
                if ups[x] + 1 > up_s:
                    up_s = ups[x] + 1
            elif u not in member_set:
                return 0
        return up_s

    def push(s: int, up_s: int) -> None:
        members.append(s)
        member_set.add(s)
        ups[s] = up_s

    def pop(s: int) -> None:
        members.pop()
        member_set.remove(s)
        del ups[s]

    def rec(v: int, h: int) -> None:
        if v < 0:
            emit(members, h)
            return
        up_s = try_add(v)
        if up_s and (h_cap is None or max(h, up_s) <= h_cap):
            push(v, up_s)
            rec(v - 1, max(h, up_s))
            pop(v)
        rec(v - 1, h)

    # Replay the pinned prefix decisions, then hand off to the recursion.
    h = 1
    pushed = []
    for i, take in enumerate(prefix):
        v = full - 1 - i
        if take:
            up_s = try_add(v)
            if not up_s or (h_cap is not None and max(h, up_s) > h_cap):
                for s in reversed(pushed):
                    pop(s)
                return
            push(v, up_s)
            pushed.append(v)
            h = max(h, up_s)
    rec(full - 1 - len(prefix), h)
    for s in reversed(pushed):
        pop(s)


def _valid_prefixes(n: int, depth: int, h_cap: int | None) -> list[tuple[bool, ...]]:
    """All legal include/exclude prefixes of the given depth, in DFS order."""
    out: list[tuple[bool, ...]] = []

    def rec(bits: tuple[bool, ...]) -> None:
        if len(bits) == depth:
            out.append(bits)
            return
        rec(bits + (True,))
        rec(bits + (False,))

    rec(())
    # Filter against the actual closure rules by replaying each prefix.
    legal = []
    for bits in out:
        seen = []
        _dfs_prefix_ok(n, bits, h_cap, seen)
        if seen:
            legal.append(bits)
    return legal


def _dfs_prefix_ok(n: int, bits: tuple[bool, ...], h_cap: int | None, seen: list) -> None:
    full = (1 << n) - 1
    members = [full]
    member_set = {full}
    ups = {full: 1}
    h = 1
    for i, take in enumerate(bits):
        if not take:
            continue
        s = full - 1 - i
        up_s = 1
        for x in members:
            u = s | x
            if u == x:
                up_s = max(up_s, ups[x] + 1)
            elif u not in member_set:
                return
        h = max(h, up_s)
        if h_cap is not None and h > h_cap:
            return
        members.append(s)
        member_set.add(s)
        ups[s] = up_s
    seen.append(True)


def enumerate_uc(
    n: int,
    filt: EnumFilter | None = None,
    visitor: Callable[[Family], None] | None = None,
) -> int:
    """Visit every union-closed family with base exactly [n] that passes the
    filter, in deterministic order; returns how many passed."""
    if not 1 <= n <= ENUMERATION_CAP:
        raise NTooLarge(f"enumeration is capped at n <= {ENUMERATION_CAP}")
    rng = filt.height_range() if filt else None
    h_cap = rng[1] if rng else None
    count = 0

    def emit(members_desc: list[int], h: int) -> None:
        nonlocal count
        fam = Family(n, tuple(reversed(members_desc)))
        if filt is None or filt.matches(fam, h):
            count += 1
            if visitor is not None:
                visitor(fam)

    _dfs(n, emit, h_cap)
    return count


def canonical_form(fam: Family) -> Family:
    """Minimum image of the family under all n! relabelings of [n].

    Isomorphism reduction is never applied implicitly (the verification
    quantifies over all families); this pass exists for reporting, e.g.
    counting enumerated families up to relabeling. Same n <= 5 cap as the
    enumerator, since n! images are computed.
    """
    if fam.n > ENUMERATION_CAP:
        raise NTooLarge(f"canonical form is capped at n <= {ENUMERATION_CAP}")
    best: tuple[int, ...] | None = None
    for perm in itertools.permutations(range(fam.n)):
        image = tuple(
            sorted(
                sum(((m >> i) & 1) << perm[i] for i in range(fam.n))
                for m in fam.members
            )
        )
        if best is None or image < best:
            best = image
    return Family(fam.n, best or ())


def brute_force_uc(n: int) -> list[Family]:
    """Independent oracle: filter all 2^(2^n) subfamilies of the power set
    for union-closedness with base [n]; used only to validate enumerate_uc."""
    if not 1 <= n <= ORACLE_CAP:
        raise NTooLarge(f"the naive oracle is capped at n <= {ORACLE_CAP}")
    full = (1 << n) - 1
    full_bit = 1 << full
    out = []
    for fm in range(1, 1 << (1 << n)):
        if not fm & full_bit:
            # base [n] plus union-closedness forces [n] itself to be a member
            continue
        members = [s for s in range(full + 1) if fm >> s & 1]
        base = 0
        for m in members:
            base |= m
        if base != full:
            continue
        have = set(members)
        ok = True
        for i, x in enumerate(members):
            for y in members[i + 1:]:
                if x | y not in have:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(Family(n, tuple(members)))
    return out


# ---------------------------------------------------------------------------
# Theorem verification harness
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    family: Family
    detail: str


@dataclass(frozen=True)
class VerifyReport:
    theorem: str
    n: int
    hypothesis: str
    families_checked: int
    violations: tuple[Violation, ...]
    elapsed: float
    mode: str = "verify"

    @property
    def ok(self) -> bool:
        if self.mode == "hypothesis-necessity":
            return bool(self.violations)
        return not self.violations


THEOREM_IDS = ("T1.2", "L1.3", "T1.4", "L2.1.1", "T2.1", "C2.2", "T4.1", "PROPS")

_HYPOTHESIS_TEXT = {
    "T1.2": "union-closed, |family| > 1 (max frequency >= (|family|+h-3)/(h-1), also with r)",
    "L1.3": "separating (every maximal chain holds a size n-1 member)",
    "T1.4": "separating, height <= 3 (average size >= n/2)",
    "L2.1.1": "separating (|family| >= n, with reduction trace)",
    "T2.1": "separating, height 4, n >= 4, cover size <= 2 (average size >= n/2)",
    "C2.2": "separating, height 4, n >= 4, cover size <= 2 (some element in half the members)",
    "T4.1": "separating, height 4, cover size 4 (average size > floor(n/2) - 1)",
    "PROPS": "separating, height 4 (all applicable propositions A-L hold)",
}

_HEIGHT_CAPS = {"T1.4": 3, "T2.1": 4, "C2.2": 4, "T4.1": 4, "PROPS": 4}


def _check_family(tid: str, fam: Family, h: int, necessity: bool) -> tuple[bool, list[str]]:
    """(hypothesis matched, violation details) for one enumerated family."""
    n = fam.n
    half = Fraction(n, 2)
    if tid == "T1.2":
        if len(fam) <= 1:
            return False, []
        rep = chain_report(fam)
        maxfreq = max(frequencies(fam))
        details = []
        bound_h = thm12_bound(len(fam), rep.height)
        if maxfreq < bound_h:
            details.append(f"max frequency {maxfreq} < bound {bound_h} at h={rep.height}")
        bound_r = thm12_bound(len(fam), rep.r)
        if maxfreq < bound_r:
            details.append(f"max frequency {maxfreq} < bound {bound_r} at r={rep.r}")
        wit = thm12_witness(fam)
        if wit.count < wit.bound:
            details.append(f"witness element {wit.element} count {wit.count} < bound {wit.bound}")
        return True, details

    if tid == "L1.3":
        if not is_separating(fam):
            return False, []
        rep = lemma13_check(fam)
        if rep.ok:
            return True, []
        chain = rep.offending_chain
        return True, [f"maximal chain without size-(n-1) member: {chain}"]

    if tid == "T1.4":
        if h > 3 or not is_separating(fam):
            return False, []
        avg = avg_size(fam)
        return True, [] if avg >= half else [f"avg {avg} < {half}"]

    if tid == "L2.1.1":
        if not is_separating(fam):
            return False, []
        details = []
        if len(fam) < n:
            details.append(f"|family| {len(fam)} < n {n}")
        try:
            trace = size_bound_witness(fam)
            if not trace.ok:
                details.append(f"reduction trace breached size >= base: {trace.levels}")
        except InternalError as exc:
            details.append(f"reduction failed: {exc}")
        return True, details

    if tid in ("T2.1", "C2.2"):
        if h != 4 or not is_separating(fam):
            return False, []
        if not necessity and n < 4:
            return False, []
        if b_report(fam).size > 2:
            return False, []
        if tid == "T2.1":
            avg = avg_size(fam)
            if necessity:
                # In necessity mode the reported families are the point of the run.
                return True, ([f"avg {avg} < {half}"] if avg < half else [])
            return True, [] if avg >= half else [f"avg {avg} < {half}"]
        wit = frankl_witness(fam)
        if wit.ok:
            return True, []
        return True, [f"best element {wit.element} in {wit.count} members < {wit.threshold}"]

    if tid == "T4.1":
        if h != 4 or not is_separating(fam) or b_report(fam).size != 4:
            return False, []
        avg = avg_size(fam)
        floor_bound = n // 2 - 1
        return True, [] if avg > floor_bound else [f"avg {avg} <= {floor_bound}"]

    if tid == "PROPS":
        if h != 4 or not is_separating(fam):
            return False, []
        details = []
        for key, res in prop_suite(fam).items():
            if res.applicable and not res.holds:
                details.append(f"proposition {key} failed: {res.witness}")
        return True, details

    raise ValueError(f"unknown theorem id {tid!r}")


def _run_serial(
    tid: str,
    n: int,
    necessity: bool,
    prefix: tuple[bool, ...] = (),
    progress: Callable[[int], None] | None = None,
) -> tuple[int, list[tuple[tuple[int, ...], str]]]:
    checked = 0
    visited = 0
    violations: list[tuple[tuple[int, ...], str]] = []
    h_cap = _HEIGHT_CAPS.get(tid)

    def emit(members_desc: list[int], h: int) -> None:
        nonlocal checked, visited
        visited += 1
        if progress is not None and visited % 100000 == 0:
            progress(visited)
        fam = Family(n, tuple(reversed(members_desc)))
        matched, details = _check_family(tid, fam, h, necessity)
        if matched:
            checked += 1
            for d in details:
                violations.append((fam.members, d))

    _dfs(n, emit, h_cap, prefix)
    return checked, violations


def _subtree_job(args: tuple[str, int, bool, tuple[bool, ...]]):
    tid, n, necessity, prefix = args
    return _run_serial(tid, n, necessity, prefix)


def verify_theorem(
    tid: str,
    n: int,
    workers: int | None = None,
    hypothesis_necessity: bool = False,
    progress: Callable[[int], None] | None = None,
) -> VerifyReport:
    """Enumerate all qualifying families and check one theorem's conclusion.

    With hypothesis_necessity (T2.1 only) the n >= 4 hypothesis is dropped
    and the report lists the families that then break the conclusion; the
    run demonstrates why the hypothesis is needed.
    """
    if tid not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id {tid!r}; known: {', '.join(THEOREM_IDS)}")
    if not 1 <= n <= ENUMERATION_CAP:
        raise NTooLarge(f"enumeration is capped at n <= {ENUMERATION_CAP}")
    if hypothesis_necessity and tid != "T2.1":
        raise ValueError("hypothesis-necessity mode applies to T2.1 only")

    if workers is None:
        workers = int(os.environ.get("UCF_THREADS", "1"))
    workers = max(1, workers)

    start = time.perf_counter()
    if workers == 1 or n <= 3:
        checked, raw = _run_serial(tid, n, hypothesis_necessity, progress=progress)
    else:
        depth = min(4, (1 << n) - 1)
        h_cap = _HEIGHT_CAPS.get(tid)
        prefixes = _valid_prefixes(n, depth, h_cap)
        jobs = [(tid, n, hypothesis_necessity, p) for p in prefixes]
        with get_context("fork").Pool(processes=workers) as pool:
            parts = pool.map(_subtree_job, jobs)
        checked = sum(c for c, _ in parts)
        raw = [v for _, vs in parts for v in vs]

    elapsed = time.perf_counter() - start
    violations = tuple(Violation(Family(n, ms), d) for ms, d in raw)
    return VerifyReport(
        theorem=tid,
        n=n,
        hypothesis=_HYPOTHESIS_TEXT[tid],
        families_checked=checked,
        violations=violations,
        elapsed=elapsed,
        mode="hypothesis-necessity" if hypothesis_necessity else "verify",
    )

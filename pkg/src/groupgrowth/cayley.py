"""Exact Cayley-ball enumeration by breadth-first search.

Spheres are deduped by canonical byte key.  Because every generator has word
length one, a product of a sphere-k element with a letter lands in sphere
k-1, k, or k+1; keeping the two newest spheres in memory is therefore enough
for exact counts.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .errors import ClosureBudgetExceeded
from .groups import GeneratingSet, GroupHandle, GroupSpec, SurfaceGroup, make_generating_set
from .surface import dehn_reduce
from .words import free_reduce, invert


class _Unknown:
    """Result of a generation check that neither succeeded nor refuted."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "UNKNOWN"

    def __bool__(self) -> bool:
        raise TypeError("UNKNOWN is not a truth value; compare with `is UNKNOWN`")


UNKNOWN = _Unknown()


@dataclass(frozen=True)
class BudgetUsed:
    elements: int = 0
    seconds: float = 0.0


@dataclass(frozen=True)
class GrowthTable:
    """Ball and sphere counts gamma(k), sigma(k) for k = 0..kmax."""

    spec: GroupSpec
    gens: GeneratingSet
    kmax: int
    gamma: tuple[int, ...]
    sigma: tuple[int, ...]
    complete: bool
    slow_path: bool = False
    budget_used: BudgetUsed = field(default=BudgetUsed(), compare=False)

    def __post_init__(self):
        if len(self.gamma) != self.kmax + 1 or len(self.sigma) != self.kmax + 1:
            raise ValueError("table length does not match kmax")
        if self.gamma[0] != 1 or self.sigma[0] != 1:
            raise ValueError("ball of radius 0 must contain exactly the identity")
        for k in range(1, self.kmax + 1):
            if self.sigma[k] != self.gamma[k] - self.gamma[k - 1]:
                raise ValueError(f"sigma({k}) inconsistent with gamma")
            if self.sigma[k] < 0:
                raise ValueError(f"sigma({k}) negative")
        for m in range(1, self.kmax + 1):
            for n in range(1, self.kmax + 1 - m):
                if self.gamma[m + n] > self.gamma[m] * self.gamma[n]:
                    raise ValueError(
                        f"submultiplicativity violated at ({m},{n}): "
                        f"{self.gamma[m + n]} > {self.gamma[m]}*{self.gamma[n]}"
                    )


def growth_table(
    handle: GroupHandle,
    gens: GeneratingSet,
    kmax: int,
    max_elements: int | None = None,
    max_seconds: float | None = None,
) -> GrowthTable:
    """Exact gamma/sigma via frontier BFS.

    Stops early with ``complete=False`` when a budget runs out; the table is
    truncated at the last fully enumerated sphere.  A surface group whose
    canonicalization blows its closure budget is re-enumerated on a slower
    pairwise-equality path and still reported exact.
    """
    if kmax < 0:
        raise ValueError("kmax must be >= 0")
    try:
        return _growth_fast(handle, gens, kmax, max_elements, max_seconds)
    except ClosureBudgetExceeded:
        if isinstance(handle, SurfaceGroup):
            return _growth_surface_slow(handle, gens, kmax, max_elements, max_seconds)
        raise


def _finish(handle, gens, kmax, gamma, complete, t0, slow_path=False) -> GrowthTable:
    reached = len(gamma) - 1
    sigma = [1] + [gamma[k] - gamma[k - 1] for k in range(1, reached + 1)]
    used = BudgetUsed(elements=gamma[-1], seconds=time.monotonic() - t0)
    return GrowthTable(
        spec=handle.spec,
        gens=gens,
        kmax=reached,
        gamma=tuple(gamma),
        sigma=tuple(sigma),
        complete=complete,
        slow_path=slow_path,
        budget_used=used,
    )


def _growth_fast(handle, gens, kmax, max_elements, max_seconds) -> GrowthTable:
    t0 = time.monotonic()
    letters = gens.elements
    identity = handle.identity
    prev_keys: set[bytes] = set()
    cur = {handle.canonical_key(identity): identity}
    gamma = [1]
    total = 1
    for _ in range(kmax):
        if max_seconds is not None and time.monotonic() - t0 > max_seconds:
            return _finish(handle, gens, kmax, gamma, False, t0)
        nxt: dict[bytes, object] = {}
        for el in cur.values():
            for s in letters:
                prod = handle.mul(el, s)
                key = handle.canonical_key(prod)
                if key in cur or key in prev_keys or key in nxt:
                    continue
                nxt[key] = prod
                if max_elements is not None and total + len(nxt) > max_elements:
                    return _finish(handle, gens, kmax, gamma, False, t0)
        total += len(nxt)
        gamma.append(total)
        if not nxt:
            # group exhausted: every later sphere is empty
            gamma.extend([total] * (kmax - len(gamma) + 1))
            return _finish(handle, gens, kmax, gamma, True, t0)
        prev_keys = set(cur.keys())
        cur = nxt
    return _finish(handle, gens, kmax, gamma, True, t0)


def _abelianized(word, n_letters: int) -> tuple[int, ...]:
    counts = [0] * n_letters
    for letter in word:
        counts[abs(letter) - 1] += 1 if letter > 0 else -1
    return tuple(counts)


def _growth_surface_slow(handle: SurfaceGroup, gens, kmax, max_elements, max_seconds) -> GrowthTable:
    """Pairwise Dehn-equality enumeration, quadratic per sphere.

    Elements are stored as Dehn-reduced words; equality of u, v is decided by
    reducing u v^-1 to the empty word.  Buckets keyed by abelianization keep
    the pairwise comparisons local.
    """
    t0 = time.monotonic()
    relator = handle.relator
    n_letters = 2 * handle.genus

    def equal(u, v) -> bool:
        return dehn_reduce(free_reduce(u + invert(v)), relator) == ()

    def bucket_of(word):
        return _abelianized(word, n_letters)

    letters = [dehn_reduce(free_reduce(tuple(s)), relator) for s in gens.elements]
    prev: dict[tuple, list] = {}
    cur: dict[tuple, list] = {bucket_of(()): [()]}
    gamma = [1]
    total = 1
    for _ in range(kmax):
        if max_seconds is not None and time.monotonic() - t0 > max_seconds:
            return _finish(handle, gens, kmax, gamma, False, t0, slow_path=True)
        nxt: dict[tuple, list] = {}
        added = 0
        for words in cur.values():
            for w in words:
                for s in letters:
                    prod = dehn_reduce(free_reduce(w + s), relator)
                    b = bucket_of(prod)
                    if any(equal(prod, u) for layer in (cur, prev, nxt) for u in layer.get(b, ())):
                        continue
                    nxt.setdefault(b, []).append(prod)
                    added += 1
                    if max_elements is not None and total + added > max_elements:
                        return _finish(handle, gens, kmax, gamma, False, t0, slow_path=True)
        total += added
        gamma.append(total)
        if added == 0:
            gamma.extend([total] * (kmax - len(gamma) + 1))
            return _finish(handle, gens, kmax, gamma, True, t0, slow_path=True)
        prev = cur
        cur = nxt
    return _finish(handle, gens, kmax, gamma, True, t0, slow_path=True)


def ball_elements(handle: GroupHandle, gens: GeneratingSet, radius: int) -> list:
    """Elements of the closed ball, identity first, in BFS sphere order.

    Within a sphere elements are sorted by canonical key, so the order is a
    pure function of the inputs.
    """
    identity = handle.identity
    prev_keys: set[bytes] = set()
    cur = {handle.canonical_key(identity): identity}
    out = [identity]
    for _ in range(radius):
        nxt: dict[bytes, object] = {}
        for el in cur.values():
            for s in gens.elements:
                prod = handle.mul(el, s)
                key = handle.canonical_key(prod)
                if key not in cur and key not in prev_keys and key not in nxt:
                    nxt[key] = prod
        out.extend(el for _, el in sorted(nxt.items()))
        if not nxt:
            break
        prev_keys = set(cur.keys())
        cur = nxt
    return out


def is_generating(handle: GroupHandle, gens: GeneratingSet, radius_cap: int):
    """True if BFS over `gens` reaches every default generator within the cap.

    Returns False only when the BFS closes (finite reach) without covering
    them, and UNKNOWN when the cap is exhausted first; an infinite group can
    never earn a definitive False.
    """
    targets = {handle.canonical_key(el) for el in handle.default_generators().elements}
    identity = handle.identity
    prev_keys: set[bytes] = set()
    cur = {handle.canonical_key(identity): identity}
    targets -= set(cur.keys())
    if not targets:
        return True
    for _ in range(radius_cap):
        nxt: dict[bytes, object] = {}
        for el in cur.values():
            for s in gens.elements:
                prod = handle.mul(el, s)
                key = handle.canonical_key(prod)
                if key not in cur and key not in prev_keys and key not in nxt:
                    nxt[key] = prod
        targets -= set(nxt.keys())
        if not targets:
            return True
        if not nxt:
            return False
        prev_keys = set(cur.keys())
        cur = nxt
    return UNKNOWN


@dataclass(frozen=True)
class SearchReport:
    """Outcome of probing u_k over candidate generating sets."""

    candidates_tested: int
    best_set: GeneratingSet | None
    best_root_bound: float | None
    per_candidate: tuple  # (GeneratingSet, u_k) pairs in test order
    complete: bool


def search_generating_sets(
    handle: GroupHandle,
    candidate_radius: int,
    set_size: int,
    k: int,
    max_candidates: int | None = None,
    max_seconds: float | None = None,
    generation_cap: int | None = None,
) -> SearchReport:
    """Probe gamma(k)^[1/k] over symmetrized candidate sets from a ball.

    Candidates are all size-`set_size` subsets of the ball of
    `candidate_radius` (identity excluded), ordered lexicographically by
    canonical keys; sets equal after symmetrization are tested once.  Sets
    whose generation check does not certify True are skipped, so the reported
    minimum is an upper bound over *verified* generating sets only.
    """
    if set_size < 1:
        raise ValueError("set_size must be >= 1")
    if k < 1:
        raise ValueError("k must be >= 1")
    cap = generation_cap if generation_cap is not None else max(k, 4)
    t0 = time.monotonic()

    pool = [el for el in ball_elements(handle, handle.default_generators(), candidate_radius)]
    pool = [el for el in pool if handle.canonical_key(el) != b""]
    pool.sort(key=handle.canonical_key)

    tested = 0
    results = []
    best = None
    seen_sets: set[frozenset] = set()
    complete = True
    for combo in itertools.combinations(pool, set_size):
        if max_candidates is not None and tested >= max_candidates:
            complete = False
            break
        if max_seconds is not None and time.monotonic() - t0 > max_seconds:
            complete = False
            break
        named = [(f"g{i + 1}", el) for i, el in enumerate(combo)]
        gens = make_generating_set(handle, named, symmetrize=True)
        key_set = frozenset(handle.canonical_key(el) for el in gens.elements)
        if key_set in seen_sets:
            continue
        seen_sets.add(key_set)
        tested += 1
        if is_generating(handle, gens, cap) is not True:
            continue
        table = growth_table(handle, gens, k)
        u_k = table.gamma[k] ** (1.0 / k)
        results.append((gens, u_k))
        if best is None or u_k < best[1]:
            best = (gens, u_k)
    return SearchReport(
        candidates_tested=tested,
        best_set=None if best is None else best[0],
        best_root_bound=None if best is None else best[1],
        per_candidate=tuple(results),
        complete=complete,
    )


def table_csv_rows(table: GrowthTable) -> list[str]:
    """CSV lines `k,gamma,sigma,root_bound,ratio` (12 significant digits).

    Row k carries u_k = gamma(k)^[1/k] (blank at k=0) and the sphere ratio
    sigma(k)/sigma(k-1) (blank when undefined).
    """
    lines = ["k,gamma,sigma,root_bound,ratio"]
    for k in range(table.kmax + 1):
        root = "" if k == 0 else "%.12g" % (table.gamma[k] ** (1.0 / k))
        ratio = ""
        if k >= 2 and table.sigma[k - 1] > 0:
            ratio = "%.12g" % (table.sigma[k] / table.sigma[k - 1])
        lines.append(f"{k},{table.gamma[k]},{table.sigma[k]},{root},{ratio}")
    return lines


def write_table_csv(table: GrowthTable, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(table_csv_rows(table)) + "\n")

"""Exhaustive search for maximum-length circuit codes.

The search walks transition words depth-first in a symmetry-broken space:
a new label may be appended only in first-occurrence order (label m+1
cannot appear before label m), so every rotation class of every code has
a representative in the space and no work is spent on relabelings.

Pruning is by a necessary condition on partial words.  Any segment of a
finished cycle of length N must have odd-count >= min(len, N - len, k).
For a segment ending at the newest transition of a partial word of
length t, every completion satisfies N >= t, which makes

    odd_count(segment) >= min(len(segment), k, t - len(segment))

a sound filter: the third term accounts for completions that close the
cycle soon after the segment started (the naive min(len, k) bound would
wrongly discard short cycles such as 1,2,1,2 at spread 2).  In symmetric
mode the doubled word always has N >= 2t, which removes the third term
for pairs inside the half-word.

Everything a pruned partial word could ever become is invalid; everything
accepted as a code has passed the full verifier.  The completeness of
this arrangement against unpruned enumeration is part of the test suite.
"""

from __future__ import annotations

import multiprocessing
import time
from dataclasses import dataclass, field
from typing import Sequence

from .canon import IsomorphismClass, canonical_form, classify
from .core import CodeParams, Word
from .verify import bit_runs, brute_force_check, check_spread

_TABLE_MAX_D = 11  # ball-mask tables take 2^d ints of 2^d bits; cap the memory


class IncompleteEnumerationError(RuntimeError):
    """Enumeration was requested but the search did not finish."""


@dataclass
class SearchOptions:
    """Knobs for a search run.

    ``target`` switches to decision mode: stop as soon as a code of at
    least that length is found.  ``max_length`` bounds the word length
    (default 2^d, which no cycle can exceed).  Budgets make the run stop
    early and report itself as non-exhaustive.
    """

    target: int | None = None
    max_length: int | None = None
    node_budget: int | None = None
    time_limit: float | None = None
    workers: int = 1
    collect_all: bool = False

    def __post_init__(self) -> None:
        if self.target is not None:
            if self.target % 2 != 0 or self.target < 4:
                raise ValueError("target length must be an even number >= 4")
            if self.workers != 1:
                raise ValueError("decision-mode runs (target set) are single-worker")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node budget must be >= 1")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time limit must be positive")
        if self.max_length is not None and self.max_length < 0:
            raise ValueError("max length must be >= 0")


@dataclass
class SearchRecord:
    """Outcome of one search run.

    ``witnesses`` holds the canonical forms (deduplicated, sorted) of
    every code of the maximum length found.  ``exhaustive`` is True only
    when the whole symmetry-broken tree was traversed; truncated runs
    never claim optimality.  ``stop_reason`` is one of ``complete``,
    ``target``, ``nodes``, ``time``.
    """

    params: CodeParams
    mode: str
    l: int | None
    n: int
    exhaustive: bool
    witnesses: tuple[Word, ...]
    nodes: int
    seconds: float
    stop_reason: str = "complete"
    options: SearchOptions | None = field(default=None, repr=False)

    def to_json_obj(self) -> dict:
        return {
            "d": self.params.d,
            "k": self.params.k,
            "mode": self.mode,
            "l": self.l,
            "n": self.n,
            "exhaustive": self.exhaustive,
            "witnesses": [list(w) for w in self.witnesses],
            "nodes": self.nodes,
            "seconds": round(self.seconds, 3),
        }


class _Truncated(Exception):
    def __init__(self, reason: str) -> None:
        self.reason = reason


class _TargetReached(Exception):
    pass


def _ball_masks(d: int, max_radius: int) -> list[list[int]]:
    """balls[r][v] = bitmask of vertices within Hamming distance r of v."""
    size = 1 << d
    balls = [[1 << v for v in range(size)]]
    for _ in range(max_radius):
        prev = balls[-1]
        cur = []
        for v in range(size):
            acc = prev[v]
            for b in range(d):
                acc |= prev[v ^ (1 << b)]
            cur.append(acc)
        balls.append(cur)
    return balls


_BALL_CACHE: dict[tuple[int, int], list[list[int]]] = {}


def _cached_balls(d: int, max_radius: int) -> list[list[int]]:
    key = (d, max_radius)
    if key not in _BALL_CACHE:
        _BALL_CACHE[key] = _ball_masks(d, max_radius)
    return _BALL_CACHE[key]


class _LocalBest:
    __slots__ = ("value",)

    def __init__(self, value: int = 0) -> None:
        self.value = value

    def get(self) -> int:
        return self.value

    def offer(self, v: int) -> None:
        if v > self.value:
            self.value = v


class _SharedBest:
    """Cross-process monotone maximum; stale reads only cost extra checks."""

    def __init__(self, mp_value) -> None:
        self._v = mp_value

    def get(self) -> int:
        return self._v.value

    def offer(self, v: int) -> None:
        with self._v.get_lock():
            if v > self._v.value:
                self._v.value = v


class _Kernel:
    """One depth-first traversal of the symmetry-broken word space."""

    def __init__(
        self,
        params: CodeParams,
        mode: str,
        l_req: int | None,
        max_word: int,
        collect_all: bool,
        use_table: bool,
        best_box=None,
    ) -> None:
        self.params = params
        self.d = params.d
        self.k = params.k
        self.symmetric = mode != "general"
        self.l_req = l_req
        self.max_word = max_word
        self.collect_all = collect_all
        self.use_table = use_table
        self.best_box = best_box if best_box is not None else _LocalBest()
        self.balls = _cached_balls(self.d, max(0, self.k - 1)) if use_table else None
        self.bit = [0] + [1 << (c - 1) for c in range(1, self.d + 1)]

        self.word: list[int] = []
        self.walk: list[int] = [0]
        self.used_stack: list[int] = [0]
        root_mask = 0
        if use_table and self.symmetric and self.k == 1:
            root_mask = self.balls[0][0]
        self.fmask_stack: list[int] = [root_mask]

        self.best = 0
        self.witnesses: list[Word] = []
        self.nodes = 0
        self.node_budget: int | None = None
        self.deadline: float | None = None
        self.target: int | None = None
        self.stop_depth: int | None = None
        self.frontier: list[Word] = []

    # -- state maintenance ------------------------------------------------

    def replay(self, prefix: Sequence[int]) -> None:
        """Rebuild the stacks for a trusted prefix; no checks, no counting."""
        for c in prefix:
            self._push(c, self.walk[-1] ^ self.bit[c])

    def _push(self, c: int, w: int) -> None:
        self.word.append(c)
        self.walk.append(w)
        used = self.used_stack[-1]
        self.used_stack.append(used + 1 if c > used else used)
        if self.use_table:
            t = len(self.word)
            istar = t + 1 - self.k
            fm = self.fmask_stack[-1]
            lo = 0 if self.symmetric else 1
            if istar >= lo:
                radius = self.k - 1 if self.symmetric else min(istar, self.k) - 1
                fm |= self.balls[radius][self.walk[istar]]
            self.fmask_stack.append(fm)
        else:
            self.fmask_stack.append(0)

    def _pop(self) -> None:
        self.word.pop()
        self.walk.pop()
        self.used_stack.pop()
        self.fmask_stack.pop()

    # -- bookkeeping -------------------------------------------------------

    def _count_node(self) -> None:
        self.nodes += 1
        if self.node_budget is not None and self.nodes >= self.node_budget:
            raise _Truncated("nodes")
        if (
            self.deadline is not None
            and self.nodes & 0xFF == 0
            and time.monotonic() > self.deadline
        ):
            raise _Truncated("time")

    def _record(self, code: Word) -> None:
        n = len(code)
        if self.collect_all:
            self.witnesses.append(code)
            if n > self.best:
                self.best = n
                self.best_box.offer(n)
        elif n > self.best:
            self.best = n
            self.witnesses = [code]
            self.best_box.offer(n)
        elif n == self.best:
            self.witnesses.append(code)
        if self.target is not None and n >= self.target:
            raise _TargetReached()

    def _accept(self, code: Word) -> bool:
        if check_spread(code, self.params) is not None:
            return False
        if self.l_req is not None and bit_runs(code).longest < self.k + self.l_req:
            return False
        return True

    def _close_general(self, code: Word) -> None:
        n = len(code)
        if n >= 4 and (self.collect_all or n >= self.best_box.get()):
            if self._accept(code):
                self._record(code)

    def _close_symmetric(self) -> None:
        n = 2 * len(self.word)
        if n >= 4 and (self.collect_all or n >= self.best_box.get()):
            half = tuple(self.word)
            code = half + half
            if self._accept(code):
                self._record(code)

    # -- candidate generation ----------------------------------------------
    # Lists are built in descending label order so that pop() explores
    # children in ascending order (reproducible node counts).

    def _candidates(self) -> list[tuple[int, int]]:
        t = len(self.word)
        j = t + 1
        v = self.walk[t]
        walk = self.walk
        k = self.k
        used = self.used_stack[t]
        maxc = used + 1 if used < self.d else self.d
        bit = self.bit
        out: list[tuple[int, int]] = []
        if self.use_table:
            fm = self.fmask_stack[t]
            if self.symmetric:
                for c in range(maxc, 0, -1):
                    w = v ^ bit[c]
                    if w == 0 or (fm >> w) & 1:
                        continue
                    ok = True
                    for m in range(2, k):
                        i = j - m
                        if i < 0:
                            break
                        if (walk[i] ^ w).bit_count() < m:
                            ok = False
                            break
                    if ok:
                        out.append((c, w))
            else:
                for c in range(maxc, 0, -1):
                    w = v ^ bit[c]
                    if w == 0:
                        self._count_node()
                        self._close_general(tuple(self.word) + (c,))
                        continue
                    if (fm >> w) & 1:
                        continue
                    ok = True
                    for m in range(2, k):
                        i = j - m
                        if i < 1:
                            break
                        thr = m if i >= m else i
                        if (walk[i] ^ w).bit_count() < thr:
                            ok = False
                            break
                    if ok:
                        out.append((c, w))
        else:
            if self.symmetric:
                for c in range(maxc, 0, -1):
                    w = v ^ bit[c]
                    if w == 0:
                        continue
                    ok = True
                    for i in range(t, -1, -1):
                        thr = min(j - i, k)
                        if (walk[i] ^ w).bit_count() < thr:
                            ok = False
                            break
                    if ok:
                        out.append((c, w))
            else:
                for c in range(maxc, 0, -1):
                    w = v ^ bit[c]
                    if w == 0:
                        self._count_node()
                        self._close_general(tuple(self.word) + (c,))
                        continue
                    ok = True
                    for i in range(t, 0, -1):
                        thr = min(j - i, k, i)
                        if (walk[i] ^ w).bit_count() < thr:
                            ok = False
                            break
                    if ok:
                        out.append((c, w))
        return out

    # -- traversal -----------------------------------------------------------

    def run(self) -> str:
        """Explore every extension of the current state; returns stop reason."""
        base = len(self.word)
        word_cap = self.max_word // 2 if self.symmetric else self.max_word
        try:
            if base >= word_cap:
                return "complete"
            pend: list[list[tuple[int, int]]] = [self._candidates()]
            while pend:
                cands = pend[-1]
                if not cands:
                    pend.pop()
                    if pend:
                        self._pop()
                    continue
                c, w = cands.pop()
                self._push(c, w)
                self._count_node()
                if self.symmetric:
                    self._close_symmetric()
                t = len(self.word)
                if self.stop_depth is not None and t >= self.stop_depth:
                    self.frontier.append(tuple(self.word))
                    self._pop()
                    continue
                if t >= word_cap:
                    self._pop()
                    continue
                pend.append(self._candidates())
        except _Truncated as tr:
            return tr.reason
        except _TargetReached:
            return "target"
        return "complete"


@dataclass
class _RunResult:
    best: int
    raw_witnesses: list[Word]
    nodes: int
    stop_reason: str


def _kernel_for(
    params: CodeParams,
    mode: str,
    l_req: int | None,
    max_word: int,
    collect_all: bool,
    best_box=None,
) -> _Kernel:
    use_table = params.d <= _TABLE_MAX_D
    return _Kernel(params, mode, l_req, max_word, collect_all, use_table, best_box)


_WORKER_BEST: _SharedBest | _LocalBest | None = None


def _worker_init(shared_value) -> None:
    global _WORKER_BEST
    _WORKER_BEST = _SharedBest(shared_value)


def _run_subtree(payload: tuple) -> tuple:
    (d, k, mode, l_req, max_word, collect_all, prefix, node_budget, deadline) = payload
    best_box = _WORKER_BEST if _WORKER_BEST is not None else _LocalBest()
    kernel = _kernel_for(
        CodeParams(d, k), mode, l_req, max_word, collect_all, best_box
    )
    kernel.node_budget = node_budget
    kernel.deadline = deadline
    kernel.replay(prefix)
    reason = kernel.run()
    return (kernel.best, kernel.witnesses, kernel.nodes, reason)


def _merge_stop(reasons: list[str]) -> str:
    for r in ("time", "nodes", "target"):
        if r in reasons:
            return r
    return "complete"


def _run_search(
    params: CodeParams,
    mode: str,
    l_req: int | None,
    options: SearchOptions,
) -> _RunResult:
    max_word = min(
        options.max_length if options.max_length is not None else 1 << params.d,
        1 << params.d,
    )
    deadline = (
        time.monotonic() + options.time_limit if options.time_limit is not None else None
    )

    if options.workers == 1:
        kernel = _kernel_for(params, mode, l_req, max_word, options.collect_all)
        kernel.node_budget = options.node_budget
        kernel.deadline = deadline
        kernel.target = options.target
        reason = kernel.run()
        raws = _final_witnesses(kernel.witnesses, kernel.best, options.collect_all)
        return _RunResult(kernel.best, raws, kernel.nodes, reason)

    # multi-worker: split the tree at a fixed prefix depth, farm out subtrees
    depth_cap = max_word // 2 if mode != "general" else max_word
    stop_depth = min(max(4, params.k + 3), max(depth_cap - 1, 1))
    coordinator = _kernel_for(params, mode, l_req, max_word, options.collect_all)
    coordinator.deadline = deadline
    coordinator.node_budget = options.node_budget
    coordinator.stop_depth = stop_depth
    reason = coordinator.run()
    results: list[tuple[int, list[Word], int, str]] = [
        (coordinator.best, coordinator.witnesses, coordinator.nodes, reason)
    ]
    tasks = coordinator.frontier
    if tasks and reason == "complete":
        budget_left = None
        if options.node_budget is not None:
            budget_left = max(1, (options.node_budget - coordinator.nodes))
        per_task_budget = (
            None if budget_left is None else max(1, budget_left // len(tasks))
        )
        payloads = [
            (
                params.d,
                params.k,
                mode,
                l_req,
                max_word,
                options.collect_all,
                prefix,
                per_task_budget,
                deadline,
            )
            for prefix in tasks
        ]
        try:
            ctx = multiprocessing.get_context("fork")
        except ValueError:
            ctx = multiprocessing.get_context("spawn")
        shared_value = ctx.Value("q", coordinator.best)
        try:
            with ctx.Pool(
                processes=options.workers,
                initializer=_worker_init,
                initargs=(shared_value,),
            ) as pool:
                results.extend(pool.map(_run_subtree, payloads))
        except (OSError, RuntimeError):
            # no subprocess support here: run the same tasks in-process
            box = _LocalBest(coordinator.best)
            for payload in payloads:
                kernel = _kernel_for(
                    params, mode, l_req, max_word, options.collect_all, box
                )
                kernel.node_budget = payload[7]
                kernel.deadline = deadline
                kernel.replay(payload[6])
                r = kernel.run()
                results.append((kernel.best, kernel.witnesses, kernel.nodes, r))

    best = max(r[0] for r in results)
    raws: list[Word] = []
    for r in results:
        raws.extend(_final_witnesses(r[1], best, options.collect_all))
    nodes = sum(r[2] for r in results)
    stop = _merge_stop([r[3] for r in results])
    return _RunResult(best, raws, nodes, stop)


def _final_witnesses(
    found: list[Word], best: int, collect_all: bool
) -> list[Word]:
    if collect_all:
        return list(found)
    return [w for w in found if len(w) == best]


def _build_record(
    params: CodeParams,
    mode: str,
    l_req: int | None,
    options: SearchOptions,
    result: _RunResult,
    seconds: float,
) -> SearchRecord:
    canonical = sorted({canonical_form(w).word for w in result.raw_witnesses})
    return SearchRecord(
        params=params,
        mode=mode,
        l=l_req,
        n=result.best,
        exhaustive=result.stop_reason == "complete",
        witnesses=tuple(canonical),
        nodes=result.nodes,
        seconds=seconds,
        stop_reason=result.stop_reason,
        options=options,
    )


def max_length(params: CodeParams, options: SearchOptions | None = None) -> SearchRecord:
    """Maximum length of a (d,k) circuit code, with all witnesses.

    Exhaustive unless a budget interrupts; decision mode (``target``)
    stops at the first code of at least the target length.
    """
    options = options or SearchOptions()
    t0 = time.perf_counter()
    result = _run_search(params, "general", None, options)
    return _build_record(
        params, "general", None, options, result, time.perf_counter() - t0
    )


def symmetric_max(
    params: CodeParams, options: SearchOptions | None = None
) -> SearchRecord:
    """Maximum length of a symmetric (d,k) circuit code.

    Searches half-words; a candidate closes as the doubled word, which is
    then put through the full verifier.
    """
    options = options or SearchOptions()
    t0 = time.perf_counter()
    result = _run_search(params, "symmetric", None, options)
    return _build_record(
        params, "symmetric", None, options, result, time.perf_counter() - t0
    )


def family_symmetric_max(
    params: CodeParams, l: int, options: SearchOptions | None = None
) -> SearchRecord:
    """Maximum symmetric length among codes with a bit run >= k + l."""
    if l < 2:
        raise ValueError(f"family parameter l must be >= 2, got {l}")
    options = options or SearchOptions()
    t0 = time.perf_counter()
    result = _run_search(params, "family", l, options)
    return _build_record(
        params, "family", l, options, result, time.perf_counter() - t0
    )


def enumerate_max(
    params: CodeParams,
    options: SearchOptions | None = None,
    mode: str = "general",
    l: int | None = None,
) -> list[IsomorphismClass]:
    """All maximum-length codes, partitioned into isomorphism classes.

    Counts are multiplicities within the symmetry-broken search space.
    Raises :class:`IncompleteEnumerationError` rather than returning a
    partial answer when the search was truncated.
    """
    options = options or SearchOptions()
    if mode == "family" and (l is None or l < 2):
        raise ValueError("family enumeration needs l >= 2")
    result = _run_search(params, mode, l if mode == "family" else None, options)
    if result.stop_reason != "complete":
        raise IncompleteEnumerationError(
            f"search stopped early ({result.stop_reason}); no class list is claimed"
        )
    return classify(result.raw_witnesses)


def all_valid_codes(
    params: CodeParams,
    max_length_bound: int,
    mode: str = "general",
) -> list[Word]:
    """Every valid code in the symmetry-broken space, any length.

    Testing aid for completeness comparisons against unpruned
    enumeration; output is sorted by (length, word).
    """
    options = SearchOptions(max_length=max_length_bound, collect_all=True)
    result = _run_search(params, mode, None, options)
    if result.stop_reason != "complete":
        raise IncompleteEnumerationError("collect-all run did not finish")
    return sorted(result.raw_witnesses, key=lambda w: (len(w), w))


def enumerate_codes_bruteforce(params: CodeParams, max_length_bound: int) -> list[Word]:
    """Unpruned oracle: every closed word that is a valid code.

    Enumerates all origin-rooted self-avoiding closed walks up to the
    bound with no spread-based pruning at all, then filters with the
    set-based checker.  Exponential; intended for toy dimensions.
    """
    d = params.d
    found: list[Word] = []
    word: list[int] = []
    seen = {0}
    bit = [0] + [1 << (c - 1) for c in range(1, d + 1)]
    cap = min(max_length_bound, 1 << d)

    def rec(v: int) -> None:
        t = len(word)
        for c in range(1, d + 1):
            w = v ^ bit[c]
            if w == 0:
                if t + 1 >= 4:
                    code = tuple(word) + (c,)
                    if brute_force_check(code, params) is None:
                        found.append(code)
                continue
            if t + 1 >= cap or w in seen:
                continue
            seen.add(w)
            word.append(c)
            rec(w)
            word.pop()
            seen.discard(w)

    if cap >= 4:
        rec(0)
    return sorted(found, key=lambda w: (len(w), w))

"""Exact maximum-independent-set engines for P(n,k).

Three independent routes compute alpha(P(n,k)):

* a window dynamic program that sweeps the spoke columns once around the
  ring.  Its state is the membership bit of the previous outer vertex plus a
  k-bit window holding the last k inner-vertex bits, so for fixed k the run
  time is linear in n.  The cycle is closed by enumerating every boundary
  state, seeding the sweep with it, and accepting only runs that return to
  their seed.  All boundary rows are swept simultaneously as one numpy value
  table, which keeps the 4^(k+1) worst-case work in vectorized code.

* a branch-and-reduce search on arbitrary graphs: isolated and degree-1
  vertices are taken greedily, degree-2 vertices are folded (or taken when
  their neighborhood is a triangle), connected components are solved
  separately, and branching picks a maximum-degree vertex (lowest index on
  ties) under a greedy clique-cover upper bound.

* a tiny exhaustive oracle (memoized subset recursion, at most 32 vertices)
  that the test suite uses as ground truth.

All engines return the same values; the dispatcher picks a closed form when
one applies, then the DP for k up to the configured cap, then branch-reduce.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass

import numpy as np

from . import bounds as _bounds
from .errors import BudgetExceededError, DomainError, InternalError
from .graph import AdjacencyGraph, adjacency, is_independent, petersen_graph

K_DP_DEFAULT = 12
_NEG = -(1 << 30)
_ORACLE_CAP = 32


@dataclass(frozen=True)
class ExactResult:
    """An exact alpha value, how it was obtained, and an optional witness set."""

    value: int
    method: str  # "closed-form" | "window-dp" | "branch-reduce" | "oracle"
    witness: tuple[int, ...] | None
    elapsed: float

    @property
    def elapsed_ms(self) -> int:
        return int(self.elapsed * 1000)


def _check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceededError("time budget exceeded")


# ---------------------------------------------------------------------------
# window DP
# ---------------------------------------------------------------------------
#
# State before column i: (u_bit, w) where u_bit is the membership of u_{i-1}
# and bit j of w is the membership of v_{i-1-j} (bit 0 newest, bit k-1 the
# oldest, v_{i-k}).  Choosing (a, b) for (u_i, v_i) is legal iff
#     a & u_bit        == 0   (outer edge u_{i-1} u_i)
#     a & b            == 0   (spoke u_i v_i)
#     b & oldest(w)    == 0   (inner edge v_{i-k} v_i)
# and leads to state (a, ((w << 1) | b) mod 2^k) with gain a + b.  Seeding the
# sweep with a boundary state makes the first k columns check the wrap edges
# against the seeded bits; accepting only terminal states equal to the seed
# closes the cycle.
#
# States (u_bit=1, odd w) violate the spoke at their own column, so no
# transition ever writes them; the value tables keep them at the sentinel,
# which also lets the column step run without clearing anything.


def _dp_buffers(rows: int, k: int, n: int):
    """Value tables and temporaries; int16 when the values surely fit."""
    dtype = np.int16 if n <= 8000 else np.int32
    neg = -20000 if dtype == np.int16 else _NEG
    V = np.full((rows, 2, 1 << k), neg, dtype=dtype)
    NV = np.full_like(V, neg)
    tmp = tuple(np.empty((rows, 1 << (k - 1)), dtype=dtype) for _ in range(3))
    return V, NV, tmp, neg


def _dp_column_step(V: np.ndarray, NV: np.ndarray, tmp: tuple[np.ndarray, ...], half: int) -> None:
    """One spoke column of the sweep, vectorized over all rows of V."""
    t_ub0, t_ub1, t_old0 = tmp
    np.maximum(V[:, 0, :half], V[:, 0, half:], out=t_ub0)  # u_bit=0, either oldest bit
    np.maximum(V[:, 1, :half], V[:, 1, half:], out=t_ub1)  # u_bit=1, either oldest bit
    np.maximum(V[:, 0, :half], V[:, 1, :half], out=t_old0)  # oldest bit 0, either u_bit
    np.maximum(t_ub0, t_ub1, out=NV[:, 0, 0::2])  # skip both u_i and v_i
    np.add(t_old0, 1, out=NV[:, 0, 1::2])         # take v_i
    np.add(t_ub0, 1, out=NV[:, 1, 0::2])          # take u_i
    # (take both) is the spoke violation; NV[:, 1, 1::2] stays at the sentinel


def _boundary_states(k: int) -> np.ndarray:
    """Seed states, skipping those violating the u_{n-1} v_{n-1} spoke."""
    states = np.arange(1 << (k + 1), dtype=np.int64)
    ub = states >> k
    newest = states & 1
    return states[~((ub == 1) & (newest == 1))]


_BLOCK = 64
_SMALL_K = 5


def _transfer_block(k: int) -> np.ndarray:
    """Best gain over _BLOCK consecutive columns between every state pair.

    Sixteen per-column sweeps from the identity seeding give the 16-column
    operator; squaring it twice (max-plus) composes it to _BLOCK = 64 columns.
    Either way it encodes exactly the per-column transition semantics.
    """
    S = 1 << (k + 1)
    mask = (1 << k) - 1
    V = np.full((S, 2, 1 << k), _NEG, dtype=np.int32)
    states = np.arange(S)
    V[states, states >> k, states & mask] = 0
    NV = np.full_like(V, _NEG)
    tmp = tuple(np.empty((S, 1 << (k - 1)), dtype=np.int32) for _ in range(3))
    for _ in range(16):
        _dp_column_step(V, NV, tmp, 1 << (k - 1))
        V, NV = NV, V
    M = V.reshape(S, S)
    for _ in range(2):  # 16 -> 32 -> 64 columns
        M = np.max(M[:, :, None] + M[None, :, :], axis=1)
        np.maximum(M, _NEG, out=M)
    return M


def _sweep_small_k(n: int, k: int, seeds: np.ndarray, deadline: float | None) -> np.ndarray:
    """Value sweep for small k: blocks of _BLOCK columns go through the
    precomputed transfer matrix, the remainder through per-column steps.
    Returns the accepted total for every seed."""
    S = 1 << (k + 1)
    rows = len(seeds)
    M = _transfer_block(k)
    V = np.full((rows, S), _NEG, dtype=np.int32)
    V[np.arange(rows), seeds] = 0
    W = np.empty_like(V)
    blocks, rem = divmod(n, _BLOCK)
    for _ in range(blocks):
        _check_deadline(deadline)
        np.max(V[:, :, None] + M[None, :, :], axis=1, out=W)
        np.maximum(W, _NEG, out=W)  # keep unreachable entries from drifting down
        V, W = W, V
    if rem:
        _check_deadline(deadline)
        V3 = V.reshape(rows, 2, 1 << k)
        NV = np.full_like(V3, _NEG)
        tmp = tuple(np.empty((rows, 1 << (k - 1)), dtype=np.int32) for _ in range(3))
        for _ in range(rem):
            _dp_column_step(V3, NV, tmp, 1 << (k - 1))
            V3, NV = NV, V3
        V = V3.reshape(rows, S)
    return V[np.arange(rows), seeds]


def alpha_window_dp(
    n: int,
    k: int,
    *,
    want_witness: bool = False,
    k_cap: int = K_DP_DEFAULT,
    deadline: float | None = None,
) -> ExactResult:
    """Exact alpha(P(n,k)) via the column-sweep DP; linear in n for fixed k."""
    petersen_graph(n, k)
    if k > k_cap:
        raise DomainError(f"window DP capped at k <= {k_cap}, got k={k}")
    start = time.perf_counter()
    states = _boundary_states(k)

    if k <= _SMALL_K:
        finals = _sweep_small_k(n, k, states, deadline)
        i = int(np.argmax(finals))
        best, best_state = int(finals[i]), int(states[i])
        if best < 0:
            raise InternalError("window DP found no consistent boundary state")
        witness = None
        if want_witness:
            witness = _dp_witness(n, k, best_state, best, deadline)
        return ExactResult(best, "window-dp", witness, time.perf_counter() - start)

    half = 1 << (k - 1)
    chunk_rows = max(1, (1 << 24) >> (k + 1))

    best = -1
    best_state = 0
    for lo in range(0, len(states), chunk_rows):
        seeds = states[lo : lo + chunk_rows]
        rows = len(seeds)
        ub_idx = (seeds >> k).astype(np.intp)
        w_idx = (seeds & ((1 << k) - 1)).astype(np.intp)
        V, NV, tmp, _ = _dp_buffers(rows, k, n)
        V[np.arange(rows), ub_idx, w_idx] = 0
        for _ in range(n):
            _check_deadline(deadline)
            _dp_column_step(V, NV, tmp, half)
            V, NV = NV, V
        finals = V[np.arange(rows), ub_idx, w_idx]
        i = int(np.argmax(finals))
        if int(finals[i]) > best:
            best = int(finals[i])
            best_state = int(seeds[i])

    if best < 0:
        raise InternalError("window DP found no consistent boundary state")

    witness = None
    if want_witness:
        witness = _dp_witness(n, k, best_state, best, deadline)
    return ExactResult(best, "window-dp", witness, time.perf_counter() - start)


def _dp_witness(n: int, k: int, seed: int, value: int, deadline: float | None) -> tuple[int, ...]:
    """Re-sweep the winning boundary row, keep per-column tables, backtrack.

    Ties are broken toward excluding vertices: the backtrack scans candidate
    predecessor states lowest-first, so excluded bits win over included ones.
    """
    half = 1 << (k - 1)
    mask = (1 << k) - 1
    V, NV, tmp, _ = _dp_buffers(1, k, n)
    V[0, seed >> k, seed & mask] = 0
    history = [V.copy()]
    for _ in range(n):
        _check_deadline(deadline)
        _dp_column_step(V, NV, tmp, half)
        V, NV = NV, V
        history.append(V.copy())

    members: list[int] = []
    ub, w = seed >> k, seed & mask
    if history[n][0, ub, w] != value:
        raise InternalError("witness sweep disagrees with the DP value")
    for col in range(n - 1, -1, -1):
        a = ub
        b = w & 1
        shifted = w >> 1
        target = int(history[col + 1][0, ub, w])
        found = False
        for pub in (0, 1):
            if a and pub:
                continue
            for pold in (0, 1):
                if b and pold:
                    continue
                pw = shifted | (pold << (k - 1))
                if int(history[col][0, pub, pw]) + a + b == target:
                    if a:
                        members.append(col)
                    if b:
                        members.append(n + col)
                    ub, w = pub, pw
                    found = True
                    break
            if found:
                break
        if not found:
            raise InternalError("witness backtrack lost the optimal path")
    if (ub, w) != (seed >> k, seed & mask):
        raise InternalError("witness backtrack did not return to the seed state")
    if len(members) != value:
        raise InternalError("witness size disagrees with the DP value")
    if not is_independent(adjacency(petersen_graph(n, k)), members):
        raise InternalError("witness backtrack produced a dependent set")
    return tuple(sorted(members))


# ---------------------------------------------------------------------------
# branch and reduce
# ---------------------------------------------------------------------------
#
# Graphs are dicts mapping a vertex id to the bitmask of its alive neighbors;
# folding a degree-2 vertex introduces a fresh id, so ids can exceed the
# original vertex count until the solution is unfolded again.


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _graph_to_masks(g: AdjacencyGraph) -> dict[int, int]:
    return {v: sum(1 << u for u in g.neighbors[v]) for v in range(g.vertex_count)}


def _remove_vertex(adj: dict[int, int], v: int) -> None:
    vb = 1 << v
    for u in _bits(adj.pop(v)):
        adj[u] &= ~vb


def _reduce(adj: dict[int, int], picks: list[int], folds: list[tuple[int, int, int, int]], next_id: int) -> int:
    """Apply isolated/degree-1/degree-2 reductions until none fires."""
    again = True
    while again:
        again = False
        for v in sorted(adj):
            if v not in adj:
                continue
            deg = adj[v].bit_count()
            if deg == 0:
                picks.append(v)
                del adj[v]
                again = True
            elif deg == 1:
                u = adj[v].bit_length() - 1
                picks.append(v)
                _remove_vertex(adj, v)
                _remove_vertex(adj, u)
                again = True
            elif deg == 2:
                it = _bits(adj[v])
                u = next(it)
                w = next(it)
                if adj[u] & (1 << w):  # triangle: v is in some maximum set
                    picks.append(v)
                    _remove_vertex(adj, v)
                    _remove_vertex(adj, u)
                    _remove_vertex(adj, w)
                else:  # fold v,u,w into one fresh vertex
                    merged = (adj[u] | adj[w]) & ~((1 << v) | (1 << u) | (1 << w))
                    _remove_vertex(adj, v)
                    _remove_vertex(adj, u)
                    _remove_vertex(adj, w)
                    f = next_id
                    next_id += 1
                    adj[f] = merged
                    fb = 1 << f
                    for x in _bits(merged):
                        adj[x] |= fb
                    folds.append((f, v, u, w))
                again = True
    return next_id


def _unfold(chosen: set[int], picks: list[int], folds: list[tuple[int, int, int, int]]) -> set[int]:
    out = set(chosen)
    out.update(picks)
    for f, v, u, w in reversed(folds):
        if f in out:
            out.discard(f)
            out.add(u)
            out.add(w)
        else:
            out.add(v)
    return out


def _components(adj: dict[int, int]) -> list[dict[int, int]]:
    comps = []
    seen = 0
    for v in sorted(adj):
        if (seen >> v) & 1:
            continue
        comp_mask = 1 << v
        frontier = adj[v]
        while frontier:
            comp_mask |= frontier
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u]
            frontier = nxt & ~comp_mask
        seen |= comp_mask
        comps.append({u: adj[u] for u in _bits(comp_mask)})
    return comps


def _clique_cover_bound(adj: dict[int, int]) -> int:
    """Greedy clique cover size; an admissible upper bound on alpha."""
    unassigned = 0
    for v in adj:
        unassigned |= 1 << v
    count = 0
    for v in sorted(adj):
        if not (unassigned >> v) & 1:
            continue
        unassigned &= ~(1 << v)
        cand = adj[v] & unassigned
        while cand:
            u = (cand & -cand).bit_length() - 1
            unassigned &= ~(1 << u)
            cand &= adj[u] & unassigned
        count += 1
    return count


def _greedy_set(adj: dict[int, int]) -> set[int]:
    """Deterministic min-degree greedy independent set (seed for pruning)."""
    local = dict(adj)
    chosen: set[int] = set()
    while local:
        v = min(local, key=lambda x: (local[x].bit_count(), x))
        chosen.add(v)
        for u in list(_bits(local[v])):
            _remove_vertex(local, u)
        _remove_vertex(local, v)
    return chosen


class _BranchCounter:
    __slots__ = ("nodes", "deadline")

    def __init__(self, deadline: float | None):
        self.nodes = 0
        self.deadline = deadline

    def tick(self) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes % 256 == 0:
            _check_deadline(self.deadline)


def _best_set(adj: dict[int, int], target: int, next_id: int, ctr: _BranchCounter) -> tuple[int, set[int] | None]:
    """Best independent set if its size beats `target`, else (target, None).

    The None return guarantees alpha(adj) <= target, which makes the caller's
    pruning sound.
    """
    ctr.tick()
    picks: list[int] = []
    folds: list[tuple[int, int, int, int]] = []
    next_id = _reduce(adj, picks, folds, next_id)
    gain = len(picks) + len(folds)

    if not adj:
        if gain > target:
            return gain, _unfold(set(), picks, folds)
        return target, None

    comps = _components(adj)
    if len(comps) > 1:
        total = gain
        merged: set[int] = set()
        for comp in comps:
            # returned sets only contain ids of the component itself, so
            # sibling components cannot clash even though fold ids repeat
            size, chosen = _best_set(comp, -1, next_id, ctr)
            total += size
            assert chosen is not None
            merged |= chosen
        if total > target:
            return total, _unfold(merged, picks, folds)
        return target, None

    local_target = target - gain
    if _clique_cover_bound(adj) <= local_target:
        return target, None

    v = min(adj, key=lambda x: (-adj[x].bit_count(), x))
    closed = adj[v] | (1 << v)

    # exclude v first: ties then favor the exclusion branch
    without = {x: m & ~(1 << v) for x, m in adj.items() if x != v}
    best_size, best_chosen = _best_set(without, local_target, next_id, ctr)
    found = best_chosen is not None
    sub_target = best_size if found else local_target

    with_v = {x: m & ~closed for x, m in adj.items() if not (closed >> x) & 1}
    size2, chosen2 = _best_set(with_v, sub_target - 1, next_id, ctr)
    if chosen2 is not None and size2 + 1 > sub_target:
        best_size, best_chosen, found = size2 + 1, chosen2 | {v}, True

    if found:
        assert best_chosen is not None
        return gain + best_size, _unfold(best_chosen, picks, folds)
    return target, None


def alpha_branch_reduce(
    g: AdjacencyGraph,
    *,
    lower_hint: int = 0,
    deadline: float | None = None,
) -> ExactResult:
    """Exact alpha of an arbitrary simple graph by branch and reduce.

    `lower_hint` must be a valid lower bound on alpha; it strengthens pruning
    and an InternalError is raised if it turns out to exceed the optimum.
    """
    start = time.perf_counter()
    _check_deadline(deadline)
    masks = _graph_to_masks(g)
    limit = 4 * g.vertex_count + 1000
    if sys.getrecursionlimit() < limit:
        sys.setrecursionlimit(limit)
    seed = _greedy_set(masks)
    target = max(len(seed), lower_hint) - 1
    ctr = _BranchCounter(deadline)
    size, chosen = _best_set(dict(masks), target, g.vertex_count, ctr)
    if chosen is None:
        # a valid hint can never exceed the optimum, and the greedy seed is a
        # real independent set, so reaching this means the hint was unsound
        raise InternalError(f"lower bound hint {lower_hint} exceeds the optimum (alpha <= {target})")
    witness = tuple(sorted(chosen))
    if len(witness) != size or not is_independent(g, witness):
        raise InternalError("branch-reduce produced an inconsistent witness")
    return ExactResult(size, "branch-reduce", witness, time.perf_counter() - start)


# ---------------------------------------------------------------------------
# exhaustive oracle
# ---------------------------------------------------------------------------


def _oracle_masks(g: AdjacencyGraph) -> list[int]:
    if g.vertex_count > _ORACLE_CAP:
        raise DomainError(f"oracle capped at {_ORACLE_CAP} vertices, got {g.vertex_count}")
    return [sum(1 << u for u in g.neighbors[v]) for v in range(g.vertex_count)]


def alpha_oracle(g: AdjacencyGraph) -> int:
    """Ground-truth alpha by memoized subset recursion (<= 32 vertices)."""
    nbr = _oracle_masks(g)
    memo: dict[int, int] = {0: 0}

    def f(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        v = (mask & -mask).bit_length() - 1
        res = max(f(mask & ~(1 << v)), 1 + f(mask & ~(nbr[v] | (1 << v))))
        memo[mask] = res
        return res

    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * g.vertex_count + 1000))
    return f((1 << g.vertex_count) - 1)


def maximum_independent_sets(g: AdjacencyGraph) -> list[frozenset[int]]:
    """Every maximum independent set, by exhaustive recursion (<= 32 vertices)."""
    nbr = _oracle_masks(g)
    memo: dict[int, int] = {0: 0}

    def f(mask: int) -> int:
        if mask in memo:
            return memo[mask]
        v = (mask & -mask).bit_length() - 1
        res = max(f(mask & ~(1 << v)), 1 + f(mask & ~(nbr[v] | (1 << v))))
        memo[mask] = res
        return res

    def collect(mask: int) -> list[frozenset[int]]:
        if mask == 0:
            return [frozenset()]
        v = (mask & -mask).bit_length() - 1
        out: list[frozenset[int]] = []
        if f(mask & ~(1 << v)) == f(mask):
            out.extend(collect(mask & ~(1 << v)))
        if 1 + f(mask & ~(nbr[v] | (1 << v))) == f(mask):
            out.extend(s | {v} for s in collect(mask & ~(nbr[v] | (1 << v))))
        return out

    full = (1 << g.vertex_count) - 1
    f(full)
    return collect(full)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


def alpha(
    n: int,
    k: int,
    strategy: str = "auto",
    *,
    want_witness: bool = False,
    k_dp_cap: int = K_DP_DEFAULT,
    deadline: float | None = None,
) -> ExactResult:
    """Exact alpha(P(n,k)) via the requested strategy.

    "auto" answers from a closed form when one applies (unless a witness is
    requested, since closed forms carry none), then the window DP for
    k <= k_dp_cap, then branch-reduce.  "closed", "dp" and "bb" force one
    route and raise DomainError when its precondition fails.
    """
    g = petersen_graph(n, k)
    start = time.perf_counter()

    if strategy == "closed" or (strategy == "auto" and not want_witness):
        cf = _bounds.exact_closed_form(n, k)
        if cf is not None:
            return ExactResult(cf.value, "closed-form", None, time.perf_counter() - start)
        if strategy == "closed":
            raise DomainError(f"no closed form applies to (n={n}, k={k})")

    if strategy == "dp" or (strategy == "auto" and k <= k_dp_cap):
        return alpha_window_dp(n, k, want_witness=want_witness, k_cap=k_dp_cap, deadline=deadline)

    if strategy in ("bb", "auto"):
        hint = max((b.value for b in _bounds.lower_bounds(n, k)), default=0)
        cf = _bounds.exact_closed_form(n, k)
        if cf is not None:
            hint = max(hint, cf.value)
        return alpha_branch_reduce(adjacency(g), lower_hint=hint, deadline=deadline)

    raise DomainError(f"unknown strategy {strategy!r}")

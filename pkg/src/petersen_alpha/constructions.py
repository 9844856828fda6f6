"""Explicit independent sets in P(n,k) for even k > 2.

The induced subgraph on one 2k-segment has independence number 2k with a
unique maximum set.  Running the forcing argument from u_t (take u_t, which
bans u_{t+1} and v_t, which forces v_{t+1} and u_{t+k} via the inner
matching, and so on) propagates to the pattern

    u offsets: 0, 2, ..., k-2   and   k+1, k+3, ..., 2k-1
    v offsets: 1, 3, ..., k-1   and   k,   k+2, ..., 2k-2

relative to the segment start.  Dropping u_t leaves the 2k-1 element
"special" trace whose tiles can sit on consecutive segments without
conflicting across tile boundaries.  The two witness builders tile that
special trace q = floor(n/2k) times and finish the leftover r = n mod 2k
spokes with explicit index lists, one family for even n and one for odd n.
Every builder re-verifies its output before returning and raises
InternalError if the transcribed lists are ever wrong.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import tiling_size_even_even, tiling_size_odd_even
from .errors import DomainError, InternalError
from .graph import (
    GeneralizedPetersen,
    Ring,
    Vertex,
    adjacency,
    petersen_graph,
    violating_edges,
)


@dataclass(frozen=True)
class PatternSet:
    """A segment-relative vertex pattern; indices are offsets from `base`."""

    base: int
    k: int
    members: frozenset[Vertex]
    flavor: str  # "type1" | "special2"

    def embed(self, g: GeneralizedPetersen) -> frozenset[int]:
        """Canonical codes of the pattern inside a concrete P(n,k)."""
        if g.k != self.k:
            raise DomainError(f"pattern built for k={self.k}, graph has k={g.k}")
        return frozenset(v.encode(g.n) for v in self.members)


@dataclass(frozen=True)
class IndependentSetWitness:
    n: int
    k: int
    members: frozenset[int]
    claimed_size: int
    source: str  # "even-even-tiling" | "odd-even-tiling" | "pattern-tiling"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "size": self.claimed_size,
            "members": sorted(self.members),
            "source": self.source,
        }


@dataclass(frozen=True)
class WitnessCheck:
    ok: bool
    problems: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def _require_even_k(k: int) -> None:
    if k % 2 != 0 or k <= 2:
        raise DomainError(f"pattern requires even k > 2, got k={k}")


def type1_pattern(k: int, t: int) -> PatternSet:
    """The unique maximum independent set of a 2k-segment, anchored at t."""
    _require_even_k(k)
    members = set()
    for off in list(range(0, k - 1, 2)) + list(range(k + 1, 2 * k, 2)):
        members.add(Vertex(Ring.OUTER, t + off))
    for off in list(range(1, k, 2)) + list(range(k, 2 * k - 1, 2)):
        members.add(Vertex(Ring.INNER, t + off))
    return PatternSet(t, k, frozenset(members), "type1")


def special2_pattern(k: int, t: int) -> PatternSet:
    """type1_pattern minus u_t: the 2k-1 element tileable trace."""
    _require_even_k(k)
    full = type1_pattern(k, t)
    members = full.members - {Vertex(Ring.OUTER, t)}
    return PatternSet(t, k, frozenset(members), "special2")


def _outer_range(g: GeneralizedPetersen, start: int, stop: int) -> set[int]:
    """Codes of u_start, u_{start+2}, ... strictly below stop (0-based)."""
    return {g.outer(i) for i in range(start, stop, 2)}


def _inner_range(g: GeneralizedPetersen, start: int, stop: int) -> set[int]:
    return {g.inner(i) for i in range(start, stop, 2)}


def independent_set_even_even(n: int, k: int) -> IndependentSetWitness:
    """Tiling witness for even n, even k > 2, of the stated closed-form size.

    The leftover r = n mod 2k spokes sit on positions 0..r-1 and the q full
    segments start at r, r+2k, ...; the r-extension lists are the even-n
    case split (r <= k versus r > k).
    """
    if n % 2 or k % 2 or k <= 2:
        raise DomainError(f"even/even construction needs even n, even k > 2, got ({n},{k})")
    g = petersen_graph(n, k)
    q, r = divmod(n, 2 * k)
    members: set[int] = set()
    for j in range(q):
        members |= special2_pattern(k, r + 2 * k * j).embed(g)
    if r <= k:
        members |= _outer_range(g, 1, r)
    else:
        members |= _outer_range(g, 2, r - k - 1)
        members |= _inner_range(g, 1, r - k)
        members |= _outer_range(g, r - k, k - 1)
        members |= _outer_range(g, k + 1, r)
        members |= _inner_range(g, k, r - 1)
    witness = IndependentSetWitness(
        n, k, frozenset(members), tiling_size_even_even(n, k), "even-even-tiling"
    )
    check = verify_witness(witness)
    if not check:
        raise InternalError(f"even/even witness failed self-check: {check.problems}")
    return witness


def independent_set_odd_even(n: int, k: int) -> IndependentSetWitness:
    """Tiling witness for odd n, even k > 2.

    The last full segment occupies positions 0..2k-1, the leftover r spokes
    positions 2k..2k+r-1, and the remaining q-1 segments tile the rest.  The
    boundary cases with a single full segment (q = 1, covering both r = 1 and
    1 < r < 2k) are built and verified like any other rather than assumed to
    work; if the index lists ever failed to verify there, this would raise
    DomainError instead of returning a bad witness.
    """
    if n % 2 == 0 or k % 2 or k <= 2:
        raise DomainError(f"odd/even construction needs odd n, even k > 2, got ({n},{k})")
    g = petersen_graph(n, k)
    q, r = divmod(n, 2 * k)
    if r == 0 or r == k:
        raise InternalError(f"r = {r} cannot happen for odd n, even k")
    members: set[int] = set()
    for j in range(q - 1):
        members |= special2_pattern(k, 2 * k + r + 2 * k * j).embed(g)
    if r == 1:
        members |= _outer_range(g, 1, k)
        members |= _outer_range(g, k + 2, 2 * k + 1)
        members |= {g.inner(k)}
        members |= _inner_range(g, k + 1, 2 * k)
    elif r < k:
        members |= _outer_range(g, 2, k - 1)
        members |= _outer_range(g, k + 1, 2 * k)
        members |= _outer_range(g, 2 * k + 2, 2 * k + r)
        members |= _inner_range(g, 1, k)
        members |= _inner_range(g, k, k + r)
        members |= _inner_range(g, 2 * k + 1, 2 * k + r - 1)
    else:
        members |= _outer_range(g, 2, k - 1)
        members |= _outer_range(g, k + 1, 2 * k)
        members |= _outer_range(g, 2 * k + 2, 2 * k + r)
        members |= _inner_range(g, 1, k)
        members |= _inner_range(g, k, 2 * k - 1)
        members |= _inner_range(g, 2 * k + 1, 3 * k)
    witness = IndependentSetWitness(
        n, k, frozenset(members), tiling_size_odd_even(n, k), "odd-even-tiling"
    )
    check = verify_witness(witness)
    if not check:
        raise InternalError(f"odd/even witness failed self-check: {check.problems}")
    return witness


def verify_witness(w: IndependentSetWitness) -> WitnessCheck:
    """Check the claimed size and independence; report what is violated."""
    problems: list[str] = []
    g = petersen_graph(w.n, w.k)
    if len(w.members) != w.claimed_size:
        problems.append(f"size mismatch: {len(w.members)} members, claimed {w.claimed_size}")
    graph = adjacency(g)
    for a, b in violating_edges(graph, w.members):
        problems.append(f"edge inside set: {g.label(a)}-{g.label(b)}")
    return WitnessCheck(not problems, tuple(problems))

"""Path decomposition of P(n,k) with width 4k+3, plus the axiom validator.

The first bag holds the k+1 leading spoke pairs and the k+1 trailing ones;
each later bag swaps one spoke pair for the next, alternating between the
front end (retire the oldest leading pair, admit the next) and the back end
(retire the newest trailing pair, admit the preceding one).  After
n - 2k - 2 swaps the two windows meet, giving n - 2k - 1 bags of 4k+4
vertices each, i.e. width 4k+3.  The construction self-validates; the
n = 2k+1 degenerate case is only available behind an explicit flag because
its single bag has width 2n-1 and says nothing useful.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import DomainError, InternalError
from .graph import AdjacencyGraph, adjacency, petersen_graph


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[frozenset[int], ...]
    tree: tuple[tuple[int, int], ...]
    trivial: bool = False

    def __post_init__(self) -> None:
        if not self.bags or any(not b for b in self.bags):
            raise DomainError("every bag must be nonempty")
        m = len(self.bags)
        for a, b in self.tree:
            if not (0 <= a < m and 0 <= b < m):
                raise DomainError(f"tree edge ({a},{b}) out of range")
        if len(self.tree) != m - 1 or not self._connected():
            raise DomainError("tree must be connected and acyclic")

    def _connected(self) -> bool:
        m = len(self.bags)
        adj: list[list[int]] = [[] for _ in range(m)]
        for a, b in self.tree:
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return len(seen) == m

    @property
    def width(self) -> int:
        return max(len(b) for b in self.bags) - 1

    def to_dict(self, n: int, k: int) -> dict:
        return {
            "n": n,
            "k": k,
            "width": self.width,
            "trivial": self.trivial,
            "bags": [sorted(b) for b in self.bags],
        }


@dataclass
class ValidationReport:
    union_covers_v: bool
    every_edge_in_some_bag: bool
    occurrences_connected: bool
    width: int
    violations: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.union_covers_v and self.every_edge_in_some_bag and self.occurrences_connected

    def to_dict(self) -> dict:
        return {
            "union_covers_v": self.union_covers_v,
            "every_edge_in_some_bag": self.every_edge_in_some_bag,
            "occurrences_connected": self.occurrences_connected,
            "width": self.width,
            "valid": self.valid,
            "violations": self.violations,
        }


def path_decomposition(n: int, k: int, *, allow_trivial: bool = False) -> TreeDecomposition:
    """The width-4k+3 path decomposition of P(n,k) (requires n > 2k+1).

    With allow_trivial, n = 2k+1 yields the flagged single-bag decomposition
    instead of raising.
    """
    g = petersen_graph(n, k)
    if n == 2 * k + 1:
        if allow_trivial:
            return TreeDecomposition((frozenset(range(2 * n)),), (), trivial=True)
        raise DomainError(f"path decomposition needs n > 2k+1; P({n},{k}) degenerates to one bag")

    def pair(i: int) -> frozenset[int]:
        return frozenset({g.outer(i), g.inner(i)})

    m = n - 2 * k - 1
    current: set[int] = set()
    for i in range(k + 1):
        current |= pair(i)
    for i in range(n - k - 1, n):
        current |= pair(i)
    bags = [frozenset(current)]
    front_remove, front_add = 0, k + 1
    back_remove, back_add = n - 1, n - k - 2
    for step in range(2, m + 1):
        if step % 2 == 0:
            current -= pair(front_remove)
            current |= pair(front_add)
            front_remove += 1
            front_add += 1
        else:
            current -= pair(back_remove)
            current |= pair(back_add)
            back_remove -= 1
            back_add -= 1
        bags.append(frozenset(current))
    deco = TreeDecomposition(tuple(bags), tuple((i, i + 1) for i in range(m - 1)))
    report = validate_decomposition(adjacency(g), deco)
    if not report.valid or deco.width != 4 * k + 3:
        raise InternalError(f"extrapolated decomposition invalid for ({n},{k}): {report.violations}")
    return deco


def validate_decomposition(g: AdjacencyGraph, d: TreeDecomposition) -> ValidationReport:
    """Check the three decomposition axioms against g, listing violations."""
    violations: list[str] = []

    union = set().union(*d.bags)
    missing = set(range(g.vertex_count)) - union
    union_covers = not missing and union <= set(range(g.vertex_count))
    for v in sorted(missing):
        violations.append(f"vertex {v} in no bag")
    for v in sorted(union - set(range(g.vertex_count))):
        union_covers = False
        violations.append(f"bag member {v} is not a vertex")

    bags_of: dict[int, list[int]] = {}
    for idx, bag in enumerate(d.bags):
        for v in bag:
            bags_of.setdefault(v, []).append(idx)

    edges_ok = True
    for a, b in g.edges():
        if not set(bags_of.get(a, ())) & set(bags_of.get(b, ())):
            edges_ok = False
            violations.append(f"edge {a}-{b} in no bag")

    tree_adj: dict[int, list[int]] = {i: [] for i in range(len(d.bags))}
    for a, b in d.tree:
        tree_adj[a].append(b)
        tree_adj[b].append(a)
    occurrences_ok = True
    for v in range(g.vertex_count):
        nodes = set(bags_of.get(v, ()))
        if len(nodes) <= 1:
            continue
        start = next(iter(nodes))
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in tree_adj[x]:
                if y in nodes and y not in seen:
                    seen.add(y)
                    queue.append(y)
        if seen != nodes:
            occurrences_ok = False
            violations.append(f"bags of vertex {v} are disconnected in the tree")

    return ValidationReport(union_covers, edges_ok, occurrences_ok, d.width, violations)

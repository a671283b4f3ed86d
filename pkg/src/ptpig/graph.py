"""Tagged-graph data model: parsing, validation, twin blocks, components.

A tagged graph splits its vertices into probes (1..p) and nonprobes
(p+1..p+q).  Nonprobes must form an independent set; that is validated
separately so the CLI can report a witness edge instead of a parse error.
"""

from __future__ import annotations

from dataclasses import dataclass


class GraphFormatError(ValueError):
    """Tagged-graph text that cannot be parsed (bad header, range, self-loop)."""


@dataclass(frozen=True)
class TaggedGraph:
    """Recognition input.  adj is 1-based: adj[0] is unused and empty."""

    p: int
    q: int
    adj: tuple[tuple[int, ...], ...]
    edge_count: int

    @property
    def n(self) -> int:
        return self.p + self.q

    def is_probe(self, v: int) -> bool:
        return 1 <= v <= self.p

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        # adjacency lists are sorted; fine for the small lookups we do
        a = self.adj[u]
        lo, hi = 0, len(a)
        while lo < hi:
            mid = (lo + hi) // 2
            if a[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(a) and a[lo] == v


@dataclass(frozen=True)
class ProbeGraph:
    """Plain undirected graph on vertices 1..n (the probe-induced subgraph)."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]


@dataclass(frozen=True)
class ReducedGraph:
    """Partition of a probe graph into blocks of equal closed neighborhoods.

    blocks[k-1] lists block k's vertices (sorted); block_of maps vertex ->
    block id; quotient is the block-level graph.  Blocks are numbered by
    smallest contained vertex, so the decomposition is reproducible.
    """

    blocks: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...]
    quotient: ProbeGraph

    @property
    def t(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class ComponentDecomposition:
    components: tuple[tuple[int, ...], ...]
    component_of: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.components)


def tagged_graph(p: int, q: int, edges) -> TaggedGraph:
    """Build a TaggedGraph from an edge iterable, collapsing duplicates."""
    if p < 0 or q < 0:
        raise GraphFormatError("vertex counts must be non-negative")
    n = p + q
    nbr: list[set[int]] = [set() for _ in range(n + 1)]
    count = 0
    for u, v in edges:
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise GraphFormatError(f"vertex {max(u, v)} out of range (n={n})")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        if v not in nbr[u]:
            nbr[u].add(v)
            nbr[v].add(u)
            count += 1
    adj = tuple(tuple(sorted(s)) for s in nbr)
    return TaggedGraph(p=p, q=q, adj=adj, edge_count=count)


def parse_tagged_graph(text: str) -> TaggedGraph:
    """Parse the line-oriented wire format.

    Line 1: ``ptpig <p> <q>``.  Then ``e <u> <v>`` lines, ``#`` comments,
    blank lines ignored.  Errors name the offending line.
    """
    p = q = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if p is None:
            if parts[0] != "ptpig" or len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected header 'ptpig <p> <q>'")
            try:
                p, q = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer counts") from None
            if p < 0 or q < 0:
                raise GraphFormatError(f"line {lineno}: negative count")
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer endpoint") from None
        if not (1 <= u <= p + q) or not (1 <= v <= p + q):
            raise GraphFormatError(
                f"line {lineno}: vertex {max(u, v)} out of range (n={p + q})"
            )
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    if p is None:
        raise GraphFormatError("missing 'ptpig <p> <q>' header")
    return tagged_graph(p, q, edges)


def serialize_tagged_graph(g: TaggedGraph) -> str:
    lines = [f"ptpig {g.p} {g.q}"]
    for u in range(1, g.n + 1):
        for v in g.adj[u]:
            if u < v:
                lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def validate_nonprobe_independence(g: TaggedGraph) -> tuple[int, int] | None:
    """Return None if no edge joins two nonprobes, else one offending edge."""
    for w in range(g.p + 1, g.n + 1):
        for u in g.adj[w]:
            if u > g.p and u > w:
                return (w, u)
    return None


def probe_subgraph(g: TaggedGraph) -> ProbeGraph:
    adj = [()] + [
        tuple(u for u in g.adj[v] if u <= g.p) for v in range(1, g.p + 1)
    ]
    return ProbeGraph(n=g.p, adj=tuple(adj))


def compute_blocks(g: ProbeGraph) -> ReducedGraph:
    """Group vertices with equal closed neighborhoods into blocks.

    Closed neighborhoods are already sorted lists, so grouping by the key
    (with the vertex itself merged in) is a single pass.
    """
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(1, g.n + 1):
        nb = g.adj[v]
        # insert v into its sorted position to form the closed neighborhood
        key_list = []
        placed = False
        for u in nb:
            if not placed and v < u:
                key_list.append(v)
                placed = True
            key_list.append(u)
        if not placed:
            key_list.append(v)
        groups.setdefault(tuple(key_list), []).append(v)

    blocks = sorted(groups.values(), key=lambda vs: vs[0])
    block_of = [0] * (g.n + 1)
    for k, vs in enumerate(blocks, start=1):
        for v in vs:
            block_of[v] = k

    t = len(blocks)
    qadj: list[tuple[int, ...]] = [()]
    for k, vs in enumerate(blocks, start=1):
        rep = vs[0]
        seen = set()
        for u in g.adj[rep]:
            b = block_of[u]
            if b != k:
                seen.add(b)
        qadj.append(tuple(sorted(seen)))
    quotient = ProbeGraph(n=t, adj=tuple(qadj))
    return ReducedGraph(
        blocks=tuple(tuple(vs) for vs in blocks),
        block_of=tuple(block_of),
        quotient=quotient,
    )


def connected_components(g: ProbeGraph) -> ComponentDecomposition:
    """Components numbered by smallest contained vertex (BFS in index order)."""
    comp_of = [0] * (g.n + 1)
    comps: list[tuple[int, ...]] = []
    for start in range(1, g.n + 1):
        if comp_of[start]:
            continue
        cid = len(comps) + 1
        comp_of[start] = cid
        stack = [start]
        seen = [start]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if not comp_of[u]:
                    comp_of[u] = cid
                    stack.append(u)
                    seen.append(u)
        comps.append(tuple(sorted(seen)))
    return ComponentDecomposition(components=tuple(comps), component_of=tuple(comp_of))


def two_stretch_filter(g: TaggedGraph, ordering) -> int | None:
    """Fast necessary condition: each nonprobe's neighbors, read along the
    given probe ordering, must form at most two maximal runs.

    Returns None when every nonprobe passes, else the first witness nonprobe.
    This is only a pre-reject — passing it proves nothing.
    """
    pos = {v: i for i, v in enumerate(ordering)}
    for w in range(g.p + 1, g.n + 1):
        ps = sorted(pos[u] for u in g.adj[w] if u <= g.p)
        runs = 0
        prev = None
        for x in ps:
            if prev is None or x != prev + 1:
                runs += 1
            prev = x
        if runs > 2:
            return w
    return None

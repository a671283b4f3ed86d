"""Proper interval graphs: recognition, canonical orderings, stair sequences.

A canonical ordering places every closed neighborhood consecutively; the
stair sequence lists each vertex twice so that intervals [first, second]
realize the graph.  Both exist exactly for proper interval graphs, and for
connected reduced graphs the sequence is unique up to reversal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import ProbeGraph, ReducedGraph, compute_blocks, connected_components
from .pqtree import PQTree


@dataclass(frozen=True)
class CanonicalSequence:
    """A length-2n sequence with every vertex appearing exactly twice.

    L/R map each vertex to its first/second position (1-based)."""

    seq: tuple[int, ...]
    L: dict
    R: dict


def sequence_from_iterable(seq) -> CanonicalSequence:
    seq = tuple(seq)
    first: dict = {}
    second: dict = {}
    for idx, v in enumerate(seq, start=1):
        if v in first:
            if v in second:
                raise ValueError(f"{v} occurs more than twice")
            second[v] = idx
        else:
            first[v] = idx
    if len(second) != len(first):
        raise ValueError("every element must occur exactly twice")
    return CanonicalSequence(seq=seq, L=first, R=second)


def reversed_sequence(cs: CanonicalSequence) -> CanonicalSequence:
    return sequence_from_iterable(reversed(cs.seq))


def _normalize_component_order(g: ProbeGraph, fr: list) -> list:
    """Deterministic representative among the equivalent orderings.

    Twins (equal closed neighborhoods) are interchangeable wherever they sit,
    and the whole component may be read in either direction; sort each twin
    run ascending and keep the lexicographically smaller direction.
    """
    key = {v: tuple(sorted((*g.adj[v], v))) for v in fr}

    def runs_sorted(seq):
        out: list[int] = []
        i = 0
        while i < len(seq):
            j = i
            while j < len(seq) and key[seq[j]] == key[seq[i]]:
                j += 1
            out.extend(sorted(seq[i:j]))
            i = j
        return out

    fwd = runs_sorted(fr)
    rev = runs_sorted(fr[::-1])
    return min(fwd, rev)


class _Cell:
    """Bucket of still-unplaced vertices, kept in preference order."""

    __slots__ = ("items", "prev", "nxt")

    def __init__(self, items: dict):
        self.items = items
        self.prev = None
        self.nxt = None


def _lbfs_sweep(adj, prev: list) -> list:
    """One lexicographic-BFS pass, ties broken toward the back of prev.

    Buckets are refined in place; within a bucket vertices stay in
    descending preference, so next(iter(...)) is always the tie-break winner.
    """
    nbr_pref: dict = {v: [] for v in prev}
    for w in reversed(prev):
        for u in adj[w]:
            nbr_pref[u].append(w)
    first = _Cell(dict.fromkeys(reversed(prev)))
    where = {v: first for v in prev}
    out: list = []
    while first is not None:
        items = first.items
        v = next(iter(items))
        del items[v], where[v]
        if not items:
            first = first.nxt
            if first is not None:
                first.prev = None
        out.append(v)
        moved: dict = {}
        for u in nbr_pref[v]:
            c = where.get(u)
            if c is not None:
                moved.setdefault(id(c), (c, []))[1].append(u)
        for c, lst in moved.values():
            if len(lst) == len(c.items):
                continue  # whole bucket preferred: nothing to separate
            nc = _Cell(dict.fromkeys(lst))
            for u in lst:
                del c.items[u]
                where[u] = nc
            nc.prev, nc.nxt = c.prev, c
            if c.prev is None:
                first = nc
            else:
                c.prev.nxt = nc
            c.prev = nc
    return out


def _umbrella_ok(g: ProbeGraph, order) -> bool:
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        lo = hi = pos[v]
        for u in g.adj[v]:
            pu = pos[u]
            if pu < lo:
                lo = pu
            elif pu > hi:
                hi = pu
        if hi - lo != len(g.adj[v]):
            return False
    return True


def recognize_proper_interval(g: ProbeGraph):
    """A vertex ordering with all closed neighborhoods consecutive, or None.

    Components are handled independently and concatenated in index order.
    Three refinement sweeps find the ordering directly on most inputs; the
    PQ-tree reduction is the deciding fallback whenever the candidate fails
    verification, so the sweeps never affect the verdict.
    """
    comp = connected_components(g)
    order: list[int] = []
    for vs in comp.components:
        if len(vs) == 1:
            order.append(vs[0])
            continue
        cand = list(vs)
        for _ in range(3):
            cand = _lbfs_sweep(g.adj, cand)
        if _umbrella_ok(g, cand):
            order.extend(_normalize_component_order(g, cand))
            continue
        tree = PQTree(vs)
        for v in vs:
            if not tree.restrict(set(g.adj[v]) | {v}):
                return None
        order.extend(_normalize_component_order(g, list(tree.frontier())))
    return tuple(order)


def is_canonical_ordering(g: ProbeGraph, order) -> bool:
    if sorted(order) != list(range(1, g.n + 1)):
        return False
    return _umbrella_ok(g, order)


def canonical_sequence(g: ProbeGraph, order, validate: bool = True) -> CanonicalSequence:
    """The stair sequence of g under a canonical ordering.

    Walk the order emitting first occurrences, flushing each pending second
    occurrence as soon as its last neighbor has been passed.
    """
    if validate and not is_canonical_ordering(g, order):
        raise ValueError("ordering is not canonical")
    n = g.n
    pos = {v: i for i, v in enumerate(order)}
    upper = [0] * n  # rightmost adjacent position, per position
    for i, v in enumerate(order):
        m = i
        for u in g.adj[v]:
            pu = pos[u]
            if pu > m:
                m = pu
        upper[i] = m
    seq: list[int] = []
    ptr = 0
    for j in range(n):
        while ptr < j and upper[ptr] < j:
            seq.append(order[ptr])
            ptr += 1
        seq.append(order[j])
    while ptr < n:
        seq.append(order[ptr])
        ptr += 1
    return sequence_from_iterable(seq)


def interval_rep_from_sequence(cs: CanonicalSequence) -> dict:
    """Vertex -> [first position, second position]; a proper representation."""
    return {v: (cs.L[v], cs.R[v]) for v in cs.L}


def block_sequence(g: ProbeGraph):
    """Reduced graph, block ordering and block-level stair sequence.

    Returns (rg, order, cs) with cs over block ids, or None when the graph
    is not proper interval.  The block ordering is unique up to reversal
    per component because the quotient has no twins left to permute.
    """
    rg = compute_blocks(g)
    order = recognize_proper_interval(rg.quotient)
    if order is None:
        return None
    cs = canonical_sequence(rg.quotient, order, validate=False)
    return rg, order, cs


def expand_block_sequence(rg: ReducedGraph, block_cs: CanonicalSequence, perms: dict) -> CanonicalSequence:
    """Vertex-level sequence: each block occurrence becomes perms[k] in order.

    The same permutation is used at both occurrences, so every vertex again
    appears exactly twice.
    """
    for k, vs in perms.items():
        if sorted(vs) != list(rg.blocks[k - 1]):
            raise ValueError(f"permutation for block {k} does not match its vertices")
    out: list[int] = []
    for k in block_cs.seq:
        out.extend(perms[k])
    return sequence_from_iterable(out)

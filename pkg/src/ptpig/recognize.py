"""Recognition of tagged probe interval graphs with a proper probe part.

Accepts exactly the graphs whose probe subgraph admits a canonical ordering
(a proper interval layout) such that every nonprobe has a *perfect
substring* in the doubled stair sequence: a contiguous stretch containing
only its neighbors and each neighbor at least once.  The pipeline:

  1. nonprobe independence, probe subgraph proper interval;
  2. per component, reduce to twin blocks and constrain each block's
     internal order with one PQ-tree (end markers included), driven by a
     window analysis of the block-level stair sequence per nonprobe;
  3. components are then arranged and oriented via a small
     consecutive-ones instance over per-component end markers;
  4. a vertex-level final check re-validates every nonprobe before the
     interval certificate is emitted.

Rejections carry a machine-readable reason code and, where meaningful, a
witness nonprobe.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from itertools import islice, product

from .graph import (
    ProbeGraph,
    TaggedGraph,
    compute_blocks,
    connected_components,
    probe_subgraph,
    validate_nonprobe_independence,
)
from .pqtree import MARK_LEFT, MARK_RIGHT, PQTree, strip_markers
from .proper import (
    CanonicalSequence,
    canonical_sequence,
    recognize_proper_interval,
    sequence_from_iterable,
)

NONPROBE_EDGE = "NONPROBE_EDGE"
PROBE_NOT_PROPER = "PROBE_NOT_PROPER"
A1_FAIL = "A1_FAIL"
B1_FAIL = "B1_FAIL"
CATEGORY3 = "CATEGORY3"
CASE3 = "CASE3"
CASE4 = "CASE4"
MARKER_PQ_INFEASIBLE = "MARKER_PQ_INFEASIBLE"
FINAL_CHECK_FAIL = "FINAL_CHECK_FAIL"

# Bound on branch exploration wherever a left/right choice is ambiguous.
_CHOICE_CAP = 64


@dataclass(frozen=True)
class RecognitionResult:
    accepted: bool
    reason: str | None = None
    witness: int | None = None  # nonprobe vertex, when one exists
    edge: tuple | None = None  # offending nonprobe pair for NONPROBE_EDGE
    sequence: CanonicalSequence | None = None
    certificate: dict | None = None


def _reject(reason: str, witness=None, edge=None) -> RecognitionResult:
    return RecognitionResult(False, reason=reason, witness=witness, edge=edge)


def _accept(g: TaggedGraph, cs: CanonicalSequence) -> RecognitionResult:
    return RecognitionResult(True, sequence=cs, certificate=build_certificate(g, cs))


# -- window primitives -------------------------------------------------------


def long_ones_runs(bits, d: int):
    """Maximal all-1 runs of length >= d, as 1-based (start, end) pairs."""
    out = []
    start = None
    for i, x in enumerate(bits, 1):
        if x:
            if start is None:
                start = i
        elif start is not None:
            if i - start >= d:
                out.append((start, i - 1))
            start = None
    if start is not None and len(bits) + 1 - start >= d:
        out.append((start, len(bits)))
    return out


def partial_end_runs(entries, d: int):
    """Runs over a 0/1/2 array: interior all 1, ends in {1,2}, length >= d.

    Within each 0-free segment the admissible runs are delimited by the
    segment ends and the positions of 2's (2's never appear inside).
    """
    out = []
    n = len(entries)
    i = 1
    while i <= n:
        if entries[i - 1] == 0:
            i += 1
            continue
        j = i
        while j <= n and entries[j - 1] != 0:
            j += 1
        seg_end = j - 1
        cuts = sorted({i, seg_end, *(p for p in range(i, seg_end + 1) if entries[p - 1] == 2)})
        if len(cuts) == 1:
            if d <= 1:
                out.append((cuts[0], cuts[0]))
        else:
            for a, b in zip(cuts, cuts[1:]):
                if b - a + 1 >= d:
                    out.append((a, b))
        i = j
    return out


def perfect_substring_bounds(cs: CanonicalSequence, nbrs):
    """Leftmost maximal all-neighbor stretch covering every neighbor, or None.

    A qualifying stretch has length in [d, 2d], d = |nbrs|, and must contain
    an occurrence of min(nbrs), so scanning the two windows of width 4d+1
    centered on that vertex's occurrences is exhaustive.
    """
    d = len(nbrs)
    if d == 0:
        return None
    seq = cs.seq
    total = len(seq)
    first = min(nbrs)
    best = None
    seen_windows = set()
    for anchor in (cs.L[first], cs.R[first]):
        lo_w = max(1, anchor - 2 * d)
        hi_w = min(total, anchor + 2 * d)
        if (lo_w, hi_w) in seen_windows:
            continue
        seen_windows.add((lo_w, hi_w))
        bits = [1 if seq[p - 1] in nbrs else 0 for p in range(lo_w, hi_w + 1)]
        for s, e in long_ones_runs(bits, d):
            lo, hi = lo_w + s - 1, lo_w + e - 1
            if len({seq[p - 1] for p in range(lo, hi + 1)}) != d:
                continue
            while lo > 1 and seq[lo - 2] in nbrs:
                lo -= 1
            while hi < total and seq[hi] in nbrs:
                hi += 1
            if best is None or (lo, hi) < best:
                best = (lo, hi)
    return best


def check_perfect_substrings(g: TaggedGraph, cs: CanonicalSequence):
    """First nonprobe lacking a perfect substring in cs, or None.

    Nonprobes without neighbors pass vacuously.
    """
    for w in range(g.p + 1, g.n + 1):
        nbrs = g.adj[w]
        if not nbrs:
            continue
        if perfect_substring_bounds(cs, frozenset(nbrs)) is None:
            return w
    return None


# -- block-level analysis ----------------------------------------------------


def block_neighbor_classes(g: TaggedGraph, rg, w: int) -> dict:
    """f_w: block -> 1 (every vertex adjacent) or 2 (some but not all).

    Blocks without neighbors of w are absent (implicitly 0).  Cost is
    proportional to deg(w).
    """
    counts: dict = {}
    for u in g.adj[w]:
        k = rg.block_of[u]
        counts[k] = counts.get(k, 0) + 1
    return {k: (1 if c == len(rg.blocks[k - 1]) else 2) for k, c in counts.items()}


def block_window_candidates(bcs: CanonicalSequence, fw: dict):
    """All (k1, k2, a, b): block substring [a, b] realizing a window for w.

    Qualifying substrings contain only block-neighbors (by f-value), cover
    every block-neighbor, and any *interior* partial block must be one of
    the two end blocks recurring.  Since a window has length <= 2|fw| and
    must contain min(fw), scanning around that block's occurrences with a
    quadratic pass is exhaustive and still O(deg^2) per nonprobe.
    """
    dd = len(fw)
    if dd == 0:
        return []
    seq = bcs.seq
    total = len(seq)
    first = min(fw)
    out = []
    emitted = set()
    seen_windows = set()
    for anchor in (bcs.L[first], bcs.R[first]):
        lo_w = max(1, anchor - 2 * dd)
        hi_w = min(total, anchor + 2 * dd)
        if (lo_w, hi_w) in seen_windows:
            continue
        seen_windows.add((lo_w, hi_w))
        width = hi_w - lo_w + 1
        vals = [fw.get(seq[lo_w - 1 + i], 0) for i in range(width)]
        for ai in range(width):
            if vals[ai] == 0:
                continue
            ka = seq[lo_w - 1 + ai]
            covered = {ka}
            stray = None  # interior partial block other than ka, if any
            for bi in range(ai, width):
                if vals[bi] == 0:
                    break
                blk = seq[lo_w - 1 + bi]
                if bi > ai:
                    pv = vals[bi - 1]
                    pb = seq[lo_w - 1 + bi - 1]
                    if pv == 2 and pb != ka:
                        if stray is None or stray == pb:
                            stray = pb
                        else:
                            break  # two distinct interior partials: hopeless
                covered.add(blk)
                if (stray is None or stray == blk) and len(covered) == dd:
                    item = (ka, blk, lo_w + ai, lo_w + bi)
                    if item not in emitted:
                        emitted.add(item)
                        out.append(item)
    return out


# -- per-component layout ----------------------------------------------------


class _CompState:
    """Block trees and bookkeeping for laying out one probe component."""

    def __init__(self, g: TaggedGraph, pg: ProbeGraph, vertices):
        self.gvs = tuple(vertices)
        loc = {v: i + 1 for i, v in enumerate(self.gvs)}
        self.loc = loc
        n = len(self.gvs)
        ladj = [()]
        for v in self.gvs:
            ladj.append(tuple(sorted(loc[u] for u in pg.adj[v])))
        self.rg = compute_blocks(ProbeGraph(n=n, adj=tuple(ladj)))
        # the quotient is proper interval iff the component is: twins expand
        # into staggered copies of their block's interval
        self.border = recognize_proper_interval(self.rg.quotient)
        if self.border is None:
            return
        self.bcs = canonical_sequence(self.rg.quotient, self.border, validate=False)
        self.block_members: dict = {}
        self.trees: dict = {}
        for k in range(1, self.rg.t + 1):
            members = tuple(self.gvs[lv - 1] for lv in self.rg.blocks[k - 1])
            self.block_members[k] = members
            if len(members) > 1:
                tree = PQTree((*members, MARK_LEFT, MARK_RIGHT))
                tree.restrict({*members, MARK_LEFT})
                tree.restrict({*members, MARK_RIGHT})
                self.trees[k] = tree
        self.deferred: list = []  # (w, block, ngb) either-direction flushes
        self.circ: list = []  # (w, ngb) wrap-capable sets on a complete component
        self.boundary_ws: list = []  # (w, ngb-in-component) needing an end window
        self.vcs: CanonicalSequence | None = None
        self.sides: dict = {}  # w -> feasible ends of the settled sequence

    # .. helpers ..

    def _classes(self, nbrs):
        """(ngb, fw): per-block neighbor sets and full/partial flags."""
        ngb: dict = {}
        for u in nbrs:
            ngb.setdefault(self.rg.block_of[self.loc[u]], set()).add(u)
        fw = {k: (1 if len(s) == len(self.block_members[k]) else 2) for k, s in ngb.items()}
        return ngb, fw

    def _flush(self, k: int, s, mark) -> bool:
        return self.trees[k].restrict(frozenset(s) | {mark})

    # .. in-component nonprobes ..

    def constrain_local(self, w: int, nbrs) -> str | None:
        """Record/apply the constraints for a nonprobe confined to this
        component; returns a reject code on impossibility."""
        ngb, fw = self._classes(nbrs)
        if self.rg.t == 1:
            if fw[1] == 1:
                return None  # complete neighborhood: any ordering works
            self.circ.append((w, frozenset(ngb[1])))
            return None
        pairs = block_window_candidates(self.bcs, fw)
        if not pairs:
            return B1_FAIL
        partials = sorted(k for k in fw if fw[k] == 2)
        if len(partials) >= 3:
            return CATEGORY3
        if not partials:
            return None
        if len(partials) == 1:
            k = partials[0]
            s = ngb[k]
            if len(fw) == 1:
                # window sits inside a single occurrence of the block
                return None if self.trees[k].restrict(s) else FINAL_CHECK_FAIL
            if any(k1 == k == k2 and a < b for (k1, k2, a, b) in pairs):
                # window spans from one occurrence of k to the other, eating
                # the complement from the middle
                rest = set(self.block_members[k]) - s
                return None if self.trees[k].restrict(rest) else FINAL_CHECK_FAIL
            starts = any(k1 == k != k2 for (k1, k2, _, _) in pairs)
            ends = any(k2 == k != k1 for (k1, k2, _, _) in pairs)
            if starts and ends:
                self.deferred.append((w, k, frozenset(s)))
                return None
            if starts:  # neighbors form a suffix of the block's ordering
                return None if self._flush(k, s, MARK_RIGHT) else FINAL_CHECK_FAIL
            if ends:  # neighbors form a prefix
                return None if self._flush(k, s, MARK_LEFT) else FINAL_CHECK_FAIL
            return B1_FAIL
        ka, kb = partials
        fwd = any((k1, k2) == (ka, kb) for (k1, k2, _, _) in pairs)
        bwd = any((k1, k2) == (kb, ka) for (k1, k2, _, _) in pairs)
        if fwd and bwd:
            self.deferred.append((w, ka, frozenset(ngb[ka])))
            self.deferred.append((w, kb, frozenset(ngb[kb])))
            return None
        if fwd:
            ok = self._flush(ka, ngb[ka], MARK_RIGHT) and self._flush(kb, ngb[kb], MARK_LEFT)
            return None if ok else FINAL_CHECK_FAIL
        if bwd:
            ok = self._flush(kb, ngb[kb], MARK_RIGHT) and self._flush(ka, ngb[ka], MARK_LEFT)
            return None if ok else FINAL_CHECK_FAIL
        return B1_FAIL

    # .. nonprobes shared with other components ..

    def constrain_boundary(self, w: int, nbrs) -> str | None:
        """A nonprobe reaching other components must eat a whole end here."""
        ngb, fw = self._classes(nbrs)
        partials = sorted(k for k in fw if fw[k] == 2)
        if len(partials) >= 2:
            return CASE4
        feas = {}
        seq = self.bcs.seq
        z = 1
        while fw.get(seq[z - 1], 0) == 1:
            z += 1
        f = fw.get(seq[z - 1], 0)
        if f == 0:
            feas["L"] = (not partials and all(self.bcs.L[k] <= z - 1 for k in fw), None)
        else:
            c = seq[z - 1]
            ok = set(partials) <= {c} and all(k == c or self.bcs.L[k] <= z - 1 for k in fw)
            feas["L"] = (ok, c)
        z = len(seq)
        while fw.get(seq[z - 1], 0) == 1:
            z -= 1
        f = fw.get(seq[z - 1], 0)
        if f == 0:
            feas["R"] = (not partials and all(self.bcs.R[k] >= z + 1 for k in fw), None)
        else:
            c = seq[z - 1]
            ok = set(partials) <= {c} and all(k == c or self.bcs.R[k] >= z + 1 for k in fw)
            feas["R"] = (ok, c)

        sides = [s for s in ("L", "R") if feas[s][0]]
        if not sides:
            return FINAL_CHECK_FAIL
        self.boundary_ws.append((w, frozenset(nbrs)))
        mark_of = {"L": MARK_LEFT, "R": MARK_RIGHT}
        if len(sides) == 1:
            side = sides[0]
            c = feas[side][1]
            if c is not None and c in self.trees:
                if not self._flush(c, ngb[c], mark_of[side]):
                    return FINAL_CHECK_FAIL
            return None
        # both ends admissible: either there is no partial block at all, or
        # one partial block delimits both ends and its flush direction is an
        # honest left/right choice
        c = feas["L"][1]
        if c is not None and c in self.trees:
            self.deferred.append((w, c, frozenset(ngb[c])))
        return None

    # .. choice resolution ..

    def resolve_deferred(self):
        """Apply queued either-direction flushes; first stuck nonprobe or None."""
        for w, k, s in self.deferred:
            if not self.trees[k].orestrict(s, MARK_LEFT, MARK_RIGHT):
                return w
        return None

    def resolve_circular(self):
        """Wrap-capable neighbor sets on a complete component.

        With no end constraints the classical anchor transform is exact:
        replace any set containing the anchor by its complement and demand
        plain consecutivity.  Once flushes have pinned the ends, search the
        two linear readings per set instead, with a capped backtrack.
        """
        if not self.circ:
            return None
        members = self.block_members[1]
        tree = self.trees.get(1)
        if tree is None:
            return None  # single-vertex component: only full neighborhoods
        full = frozenset(members)
        if not self.deferred and not self.boundary_ws:
            anchor = members[0]
            for w, s in self.circ:
                lin = s if anchor not in s else full - s
                if lin and not tree.restrict(lin):
                    return w
            return None
        choices = [(w, s, full - s) for w, s in self.circ]
        stack = [(tree, 0)]
        visited = 0
        stuck = None
        while stack:
            cur, i = stack.pop()
            if i == len(choices):
                self.trees[1] = cur
                return None
            visited += 1
            if visited > _CHOICE_CAP:
                for j in range(i, len(choices)):
                    wj, sj, cj = choices[j]
                    probe = cur.clone()
                    if probe.restrict(sj):
                        cur = probe
                    elif not cur.restrict(cj):
                        return wj
                self.trees[1] = cur
                return None
            w, s, comp = choices[i]
            nexts = []
            probe = cur.clone()
            if probe.restrict(s):
                nexts.append((probe, i + 1))
            probe = cur.clone()
            if probe.restrict(comp):
                nexts.append((probe, i + 1))
            if not nexts and stuck is None:
                stuck = w
            stack.extend(reversed(nexts))
        return stuck if stuck is not None else self.circ[0][0]

    # .. final intra-component search ..

    def _sigma(self) -> dict:
        out = {}
        for k, members in self.block_members.items():
            tree = self.trees.get(k)
            out[k] = members if tree is None else tuple(strip_markers(tree.frontier()))
        return out

    def settle(self, local_ws):
        """Fix the component's vertex sequence.

        The trees pin everything except possibly the reading direction of
        the blocks at the two ends of the block ordering; try reversing any
        subset of those (at most 16 combinations), validating every local
        nonprobe window and every boundary nonprobe end against the
        expanded sequence.  Returns None on success, else a witness.
        """
        sigma = self._sigma()
        t = self.rg.t
        special: list = []
        for pos in (1, 2, t - 1, t):
            if 1 <= pos <= t and self.border[pos - 1] not in special:
                special.append(self.border[pos - 1])
        witness = None
        for mask in range(1 << len(special)):
            perms = dict(sigma)
            for i, k in enumerate(special):
                if mask >> i & 1:
                    perms[k] = tuple(reversed(sigma[k]))
            seq: list = []
            for k in self.bcs.seq:
                seq.extend(perms[k])
            vcs = sequence_from_iterable(seq)
            ok = True
            for w, nbrs in local_ws:
                if perfect_substring_bounds(vcs, nbrs) is None:
                    ok = False
                    if witness is None:
                        witness = w
                    break
            sides: dict = {}
            if ok:
                for w, nbrs in self.boundary_ws:
                    v = _vertex_sides(vcs, nbrs)
                    if not v:
                        ok = False
                        if witness is None:
                            witness = w
                        break
                    sides[w] = v
            if ok:
                self.vcs = vcs
                self.sides = sides
                return None
        return witness


def _vertex_sides(vcs: CanonicalSequence, nbrs) -> set:
    """Which ends of the sequence carry an all-neighbor stretch covering nbrs."""
    seq = vcs.seq
    out = set()
    seen = set()
    for x in seq:
        if x not in nbrs:
            break
        seen.add(x)
    if seen == set(nbrs):
        out.add("L")
    seen = set()
    for x in reversed(seq):
        if x not in nbrs:
            break
        seen.add(x)
    if seen == set(nbrs):
        out.add("R")
    return out


# -- engines -----------------------------------------------------------------


def recognize_connected_reduced(g: TaggedGraph) -> RecognitionResult:
    """Probe subgraph connected with all closed neighborhoods distinct:
    the stair sequence is unique up to reversal, so one window check per
    nonprobe decides membership."""
    bad = validate_nonprobe_independence(g)
    if bad is not None:
        return _reject(NONPROBE_EDGE, witness=bad[0], edge=bad)
    pg = probe_subgraph(g)
    order = recognize_proper_interval(pg)
    if order is None:
        return _reject(PROBE_NOT_PROPER)
    cs = canonical_sequence(pg, order, validate=False)
    w = check_perfect_substrings(g, cs)
    if w is not None:
        return _reject(A1_FAIL, witness=w)
    return _accept(g, cs)


def _settle_single(g: TaggedGraph, pg: ProbeGraph, vertices, local_ws):
    """Run the whole per-component pipeline; RecognitionResult on failure,
    else the settled _CompState."""
    state = _CompState(g, pg, vertices)
    if state.border is None:
        return _reject(PROBE_NOT_PROPER)
    for w, nbrs in local_ws:
        code = state.constrain_local(w, nbrs)
        if code is not None:
            return _reject(code, witness=w)
    bad = state.resolve_deferred()
    if bad is None:
        bad = state.resolve_circular()
    if bad is not None:
        return _reject(FINAL_CHECK_FAIL, witness=bad)
    bad = state.settle(local_ws)
    if bad is not None:
        return _reject(FINAL_CHECK_FAIL, witness=bad)
    return state


def recognize_connected(g: TaggedGraph) -> RecognitionResult:
    """Probe subgraph connected, twins allowed."""
    bad = validate_nonprobe_independence(g)
    if bad is not None:
        return _reject(NONPROBE_EDGE, witness=bad[0], edge=bad)
    pg = probe_subgraph(g)
    local_ws = [
        (w, frozenset(g.adj[w])) for w in range(g.p + 1, g.n + 1) if g.adj[w]
    ]
    got = _settle_single(g, pg, range(1, g.p + 1), local_ws)
    if isinstance(got, RecognitionResult):
        return got
    cs = got.vcs
    w = check_perfect_substrings(g, cs)
    if w is not None:
        return _reject(FINAL_CHECK_FAIL, witness=w)
    return _accept(g, cs)


def recognize(g: TaggedGraph) -> RecognitionResult:
    """Public entry: dispatches on connectivity and reducedness."""
    bad = validate_nonprobe_independence(g)
    if bad is not None:
        return _reject(NONPROBE_EDGE, witness=bad[0], edge=bad)
    if g.p == 0:
        return _accept(g, sequence_from_iterable(()))
    pg = probe_subgraph(g)
    comps = connected_components(pg)
    if comps.r == 1:
        if compute_blocks(pg).t == g.p:
            return recognize_connected_reduced(g)
        return recognize_connected(g)
    return _recognize_multi(g, pg, comps)


def _recognize_multi(g: TaggedGraph, pg: ProbeGraph, comps) -> RecognitionResult:
    states = {ci: _CompState(g, pg, vs) for ci, vs in enumerate(comps.components, 1)}
    if any(st.border is None for st in states.values()):
        return _reject(PROBE_NOT_PROPER)
    local_ws = {ci: [] for ci in states}
    multi_ws = []
    for w in range(g.p + 1, g.n + 1):
        nbrs = g.adj[w]
        if not nbrs:
            continue
        touched: dict = {}
        for u in nbrs:
            touched.setdefault(comps.component_of[u], []).append(u)
        if len(touched) == 1:
            ci = next(iter(touched))
            local_ws[ci].append((w, frozenset(nbrs)))
        else:
            multi_ws.append((w, touched))

    for ci, state in states.items():
        for w, nbrs in local_ws[ci]:
            code = state.constrain_local(w, nbrs)
            if code is not None:
                return _reject(code, witness=w)

    for w, touched in multi_ws:
        partial_cis = [ci for ci, us in touched.items() if len(us) < len(states[ci].gvs)]
        if len(partial_cis) > 2:
            return _reject(CASE3, witness=w)
        for ci in partial_cis:
            code = states[ci].constrain_boundary(w, touched[ci])
            if code is not None:
                return _reject(code, witness=w)

    for ci, state in states.items():
        bad = state.resolve_deferred()
        if bad is None:
            bad = state.resolve_circular()
        if bad is not None:
            return _reject(FINAL_CHECK_FAIL, witness=bad)
        bad = state.settle(local_ws[ci])
        if bad is not None:
            return _reject(FINAL_CHECK_FAIL, witness=bad)

    got = _arrange_components(states, multi_ws)
    if isinstance(got, int):
        return _reject(MARKER_PQ_INFEASIBLE, witness=got)
    seq: list = []
    for ci, flipped in got:
        s = states[ci].vcs.seq
        seq.extend(reversed(s) if flipped else s)
    cs = sequence_from_iterable(seq)
    w = check_perfect_substrings(g, cs)
    if w is not None:
        return _reject(FINAL_CHECK_FAIL, witness=w)
    return _accept(g, cs)


def _arrange_components(states: dict, multi_ws: list):
    """Order and orient the components.

    One consecutive-ones instance over {L, R} end markers per component:
    each marker pair stays together, and every cross-component nonprobe's
    marker set (both markers of fully-eaten components plus the eaten-end
    marker of partially-eaten ones) must come out consecutive.  Components
    answering both ends for some nonprobe are probed over a capped set of
    combinations.  Returns [(component, flipped)] or a witness nonprobe.
    """
    if not multi_ws:
        return [(ci, False) for ci in states]
    base = PQTree(tuple((side, ci) for ci in states for side in ("L", "R")))
    for ci in states:
        base.restrict({("L", ci), ("R", ci)})
    fixed: dict = {}
    ambig: list = []
    for w, touched in multi_ws:
        tset = set()
        for ci, us in touched.items():
            state = states[ci]
            if len(us) == len(state.gvs):
                tset.add(("L", ci))
                tset.add(("R", ci))
            else:
                v = state.sides[w]
                if len(v) == 1:
                    tset.add((next(iter(v)), ci))
                else:
                    ambig.append((w, ci))
        fixed[w] = tset
    last = multi_ws[0][0] if multi_ws else 0
    for combo in islice(product("LR", repeat=len(ambig)), _CHOICE_CAP):
        extra: dict = {}
        for (w, ci), side in zip(ambig, combo):
            extra.setdefault(w, set()).add((side, ci))
        tree = base.clone()
        failed = None
        for w, _ in multi_ws:
            if not tree.restrict(fixed[w] | extra.get(w, set())):
                failed = w
                break
        if failed is None:
            layout = []
            seen = set()
            for side, ci in tree.frontier():
                if ci not in seen:
                    seen.add(ci)
                    layout.append((ci, side == "R"))
            return layout
        last = failed
    return last


# -- certificates ------------------------------------------------------------


def build_certificate(g: TaggedGraph, cs: CanonicalSequence, bounds: dict | None = None) -> dict:
    """Vertex -> (lo, hi) intervals realizing g from a perfect sequence.

    Probes read their two positions straight off the sequence; nonprobes get
    their (leftmost maximal) perfect substring, and isolated nonprobes park
    one point each past every probe endpoint.
    """
    cert: dict = {}
    for v in range(1, g.p + 1):
        cert[v] = (cs.L[v], cs.R[v])
    spare = 2 * g.p + 1
    for w in range(g.p + 1, g.n + 1):
        nbrs = g.adj[w]
        if not nbrs:
            cert[w] = (spare, spare)
            spare += 1
            continue
        if bounds is not None and w in bounds:
            got = bounds[w]
        else:
            got = perfect_substring_bounds(cs, frozenset(nbrs))
        assert got is not None, "sequence admits no window for a nonprobe"
        cert[w] = got
    return cert


def verify_certificate(g: TaggedGraph, cert: dict):
    """Independent check of an interval certificate against the graph.

    Returns None when valid, else (kind, u, v) for the first violation:
    nonprobe independence, probe-probe adjacency vs intersection, tagged
    adjacency vs endpoint containment, and probe properness (equal
    intervals are tolerated, strict containment is not).
    """
    for v in range(1, g.n + 1):
        iv = cert.get(v)
        if iv is None:
            return ("missing-interval", v, v)
        if iv[0] > iv[1]:
            return ("missing-interval", v, v)
    bad = validate_nonprobe_independence(g)
    if bad is not None:
        return ("independence", bad[0], bad[1])
    p = g.p

    keyed = sorted(range(1, p + 1), key=lambda v: (cert[v][0], -cert[v][1]))
    widest = None
    for v in keyed:
        lo, hi = cert[v]
        if widest is not None and hi <= cert[widest][1]:
            if (lo, hi) != cert[widest]:
                return ("containment", widest, v)
        if widest is None or hi > cert[widest][1]:
            widest = v

    order = sorted(range(1, p + 1), key=lambda v: cert[v])
    los = [cert[v][0] for v in order]
    for idx, u in enumerate(order):
        hi_u = cert[u][1]
        jdx = idx + 1
        while jdx < p and los[jdx] <= hi_u:
            v = order[jdx]
            if not g.has_edge(u, v):
                return ("probe-adjacency", u, v)
            jdx += 1
    for u in range(1, p + 1):
        for v in g.adj[u]:
            if u < v <= p:
                if max(cert[u][0], cert[v][0]) > min(cert[u][1], cert[v][1]):
                    return ("probe-adjacency", u, v)

    endpoints = sorted((cert[v][side], v) for v in range(1, p + 1) for side in (0, 1))
    values = [x for x, _ in endpoints]
    for w in range(p + 1, g.n + 1):
        lo, hi = cert[w]
        i = bisect_left(values, lo)
        j = bisect_right(values, hi)
        inside = {v for _, v in endpoints[i:j]}
        actual = set(g.adj[w])
        if inside != actual:
            off = min(inside.symmetric_difference(actual))
            return ("tag-adjacency", w, off)
    return None

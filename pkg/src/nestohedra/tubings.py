"""Graphs as hypergraphs and the tubing notion.

A graph is carried as the saturated closure of singletons, edges (as
two-element members) and the full vertex set; the closure's members are
the usual connected subsets plus the full set.  A tubing is a member
family whose pairs neither overlap nor sit next to an edge, containing
the full vertex set, and (for loose graphs) not containing the whole
block partition.  For graphs, tubings coincide with constructs; the
equivalence checker below exercises exactly that, and the notion does
not extend to general hypergraphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import (
    BadEdgeError,
    CarrierTooLargeError,
    EmptyCarrierError,
    NestohedraError,
    NotTubesError,
)
from .constructions import is_construct
from .hypergraph import (
    AtomSet,
    Family,
    Hypergraph,
    family_components,
    family_union,
    mask_sort_key,
)
from .saturation import saturated_closure


@dataclass(frozen=True)
class GraphHypergraph:
    """A hypergraph that is the saturated closure of a graph."""

    underlying: Hypergraph

    @property
    def atoms(self):
        return self.underlying.atoms

    @property
    def member_sets(self) -> Family:
        return self.underlying.member_sets

    def __len__(self):
        return len(self.underlying.members)


def as_graph(edges: Iterable[Iterable[str]], atoms: Iterable[str]) -> GraphHypergraph:
    """Close singletons, edges and the full vertex set under saturation."""
    atom_list = sorted(set(atoms))
    if not atom_list:
        raise EmptyCarrierError("a graph needs at least one vertex")
    atom_set = set(atom_list)
    fams = {frozenset({a}) for a in atom_list}
    for e in edges:
        pair = frozenset(e)
        if len(pair) != 2 or not pair <= atom_set:
            raise BadEdgeError(f"bad edge {sorted(pair)}")
        fams.add(pair)
    fams.add(frozenset(atom_list))
    base = Hypergraph.from_sets(fams, carrier=atom_list)
    return GraphHypergraph(saturated_closure(base))


def graph_from_text(text: str) -> GraphHypergraph:
    """Edge-list format: one ``x-y`` edge per line; a bare ``x`` line
    declares an isolated vertex; ``#`` starts a comment."""
    atoms: set[str] = set()
    edges: set[frozenset[str]] = set()
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split("-")]
        if len(parts) == 1:
            if not parts[0]:
                raise BadEdgeError(f"bad line {raw!r}")
            atoms.add(parts[0])
        elif len(parts) == 2:
            if not parts[0] or not parts[1]:
                raise BadEdgeError(f"bad edge line {raw!r}")
            atoms.update(parts)
            edges.add(frozenset(parts))
        else:
            raise BadEdgeError(f"bad edge line {raw!r}")
    return as_graph(edges, atoms)


def is_graph_hypergraph(h: Hypergraph) -> bool:
    """Is ``h`` the closure of singletons, pairs and the full carrier?"""
    if not h.members:
        return False
    if h.carrier_mask not in h.members:
        return False
    fams = {h.atom_set(m) for m in h.members if m.bit_count() in (1, 2)}
    fams.add(frozenset(h.atoms))
    base = Hypergraph.from_sets(fams, carrier=h.atoms)
    return saturated_closure(base) == h


def is_loose(g: GraphHypergraph) -> tuple[bool, frozenset[AtomSet]]:
    """Looseness plus the block partition of the graph minus its top.

    Loose means the members other than the full vertex set fall apart
    into two or more blocks, i.e. the full set is not dispensable.  A
    single-vertex graph has no members besides its top and counts as
    not loose.
    """
    h = g.underlying
    rest = [m for m in h.members if m != h.carrier_mask]
    comps = family_components(rest)
    blocks = frozenset(h.atom_set(family_union(c)) for c in comps)
    return len(comps) >= 2, blocks


def is_tubing(g: GraphHypergraph, t: Iterable[Iterable[str]]) -> bool:
    """Pairwise non-overlapping and non-adjacent members of the graph,
    containing the full vertex set, avoiding the whole loose partition."""
    h = g.underlying
    fam = frozenset(frozenset(s) for s in t)
    member_sets = h.member_sets
    if not fam <= member_sets:
        raise NotTubesError("a tubing may only use members of the graph")
    masks = sorted(h.mask(s) for s in fam)
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            c = a & b
            if c and c != a and c != b:
                return False  # overlapping
            if not c and (a | b) in h.members:
                return False  # adjacent
    if h.carrier_mask not in masks:
        return False
    loose, blocks = is_loose(g)
    if loose and blocks <= fam:
        return False
    return True


@dataclass(frozen=True)
class TubingEquivalenceReport:
    ok: bool
    counterexample: Family | None
    pairs_checked: int
    families_checked: int


def tubings_equal_constructs(g: GraphHypergraph, cap: int = 6) -> TubingEquivalenceReport:
    """Compare the tubing predicate with the construct predicate over all
    member subsets containing the full vertex set.

    Subsets holding an overlapping or adjacent pair fail both predicates
    outright; that is verified once per pair (the pair is an antichain
    whose union is a member), after which only pairwise-compatible
    subsets need the full walk.  The compatible subsets are enumerated
    explicitly and fed through both predicates.
    """
    h = g.underlying
    if h.n_atoms > cap:
        raise CarrierTooLargeError(
            f"carrier of size {h.n_atoms} exceeds the cap {cap}")
    members = sorted(h.members, key=mask_sort_key)
    others = [m for m in members if m != h.carrier_mask]
    n = len(others)

    pairs_checked = 0
    compatible = [[False] * n for _ in range(n)]
    for i in range(n):
        a = others[i]
        for j in range(i + 1, n):
            b = others[j]
            c = a & b
            overlapping = bool(c) and c != a and c != b
            adjacent = not c and (a | b) in h.members
            if overlapping or adjacent:
                pairs_checked += 1
                # both sides reject any family with this pair: the pair is
                # incomparable and its union is a member (for overlaps the
                # closure supplies it)
                if c == a or c == b or (a | b) not in h.members:
                    raise NestohedraError(
                        "internal error: bad pair is not a failing antichain")
            else:
                compatible[i][j] = compatible[j][i] = True

    families_checked = 0
    counterexample: Family | None = None

    def family_of(chosen: list[int]) -> Family:
        fam = {h.atom_set(others[i]) for i in chosen}
        fam.add(frozenset(h.atoms))
        return frozenset(fam)

    def walk(start: int, chosen: list[int]) -> bool:
        nonlocal families_checked, counterexample
        fam = family_of(chosen)
        families_checked += 1
        if is_tubing(g, fam) != is_construct(h, fam):
            counterexample = fam
            return False
        for i in range(start, n):
            if all(compatible[c][i] for c in chosen):
                if not walk(i + 1, chosen + [i]):
                    return False
        return True

    ok = walk(0, [])
    return TubingEquivalenceReport(ok=ok, counterexample=counterexample,
                                   pairs_checked=pairs_checked,
                                   families_checked=families_checked)

"""Shared generators for the exhaustive desk-scale tests."""

from __future__ import annotations

import itertools

from nestohedra import BOTTOM, FacePoset, abstract_polytope, catalog_lookup, is_asc
from nestohedra.hypergraph import Hypergraph

ATOMS = ("x", "y", "z", "u")


def frozen(*atom_strings):
    """frozen('x', 'yz') -> frozenset({frozenset({'x'}), frozenset({'y','z'})})"""
    return frozenset(frozenset(s) for s in atom_strings)


def fs(s: str) -> frozenset:
    return frozenset(s)


def all_atomic_hypergraphs(k: int):
    """Every atomic hypergraph on the first ``k`` sample atoms."""
    atoms = ATOMS[:k]
    singles = [frozenset({a}) for a in atoms]
    bigger = [frozenset(c) for r in range(2, k + 1)
              for c in itertools.combinations(atoms, r)]
    for r in range(len(bigger) + 1):
        for combo in itertools.combinations(bigger, r):
            yield Hypergraph.from_sets(singles + list(combo))


def all_asc_hypergraphs(k: int):
    for h in all_atomic_hypergraphs(k):
        if is_asc(h):
            yield h


def all_hypergraphs(k: int):
    """Every hypergraph whose carrier is exactly the first ``k`` atoms."""
    atoms = set(ATOMS[:k])
    subsets = [frozenset(c) for r in range(1, k + 1)
               for c in itertools.combinations(sorted(atoms), r)]
    for r in range(len(subsets) + 1):
        for combo in itertools.combinations(subsets, r):
            if set().union(*combo) == atoms if combo else not atoms:
                yield Hypergraph.from_sets(combo)


def paper_a():
    """The running 4-atom example: path x-y-z-u plus the triple {x,y,z}."""
    return Hypergraph.from_sets(
        [{"x"}, {"y"}, {"z"}, {"u"},
         {"x", "y"}, {"y", "z"}, {"z", "u"}, {"x", "y", "z"}])


def paper_e():
    return Hypergraph.from_sets(
        [{"x", "y"}, {"x", "y", "z"}, {"y", "z"}, {"u"}, {"v"}])


L = frozen("u", "zu", "yzu", "xyzu")
M = frozen("y", "u", "yzu", "xyzu")
N = frozen("x", "u", "zu", "xyzu")


# ---------------------------------------------------------------------------
# labelled graphs up to isomorphism
# ---------------------------------------------------------------------------

def graphs_up_to_iso(n: int, connected_only: bool):
    """Edge sets of graphs on ``n`` vertices, one per isomorphism class."""
    verts = ATOMS[:n] if n <= 4 else tuple("abcde"[:n])
    all_edges = [frozenset(e) for e in itertools.combinations(verts, 2)]
    seen = set()
    for r in range(len(all_edges) + 1):
        for combo in itertools.combinations(all_edges, r):
            edges = frozenset(combo)
            canon = min(
                tuple(sorted(tuple(sorted((perm[a], perm[b])))
                             for a, b in map(sorted, edges)))
                for perm in (dict(zip(verts, p))
                             for p in itertools.permutations(verts)))
            if canon in seen:
                continue
            seen.add(canon)
            if connected_only and not _graph_connected(verts, edges):
                continue
            yield verts, edges


def _graph_connected(verts, edges) -> bool:
    if not verts:
        return True
    reached = {verts[0]}
    frontier = [verts[0]]
    while frontier:
        v = frontier.pop()
        for e in edges:
            if v in e:
                (w,) = e - {v}
                if w not in reached:
                    reached.add(w)
                    frontier.append(w)
    return len(reached) == len(verts)


# ---------------------------------------------------------------------------
# hand-built posets for the negative axiom corpus
# ---------------------------------------------------------------------------

def _delete_face(p: FacePoset, face) -> FacePoset:
    keep = [i for i, f in enumerate(p.faces) if f != face]
    faces_ranks = [(p.faces[i], p.ranks[i]) for i in keep]
    return FacePoset.from_leq(faces_ranks, lambda a, b: p.leq(a, b))


def negative_posets() -> list[tuple[str, FacePoset]]:
    """Mutated posets that are not abstract polytopes."""
    out = []
    assoc = abstract_polytope(catalog_lookup("H'_4321").hypergraph)

    edge = next(f for f, r in zip(assoc.faces, assoc.ranks) if r == 1)
    out.append(("associahedron minus an edge face", _delete_face(assoc, edge)))

    vertex = next(f for f, r in zip(assoc.faces, assoc.ranks) if r == 0)
    out.append(("associahedron minus a vertex face", _delete_face(assoc, vertex)))

    # two triangles glued at one shared vertex, one global top
    vs = ["a", "b", "c", "d", "e"]
    es = ["ab", "bc", "ac", "ad", "de", "ae"]
    faces = [("bot", -1)] + [(v, 0) for v in vs] + [(e, 1) for e in es] + [("top", 2)]
    covers = [("bot", v) for v in vs]
    covers += [(e[0], e) for e in es] + [(e[1], e) for e in es]
    covers += [(e, "top") for e in es]
    out.append(("two triangles sharing a vertex",
                FacePoset.from_covers(faces, covers)))

    # a flag-skipping chain: one vertex hangs directly under the top
    faces = [("bot", -1), ("v", 0), ("w", 0), ("e", 1), ("top", 2)]
    covers = [("bot", "v"), ("bot", "w"), ("v", "e"), ("e", "top"), ("w", "top")]
    out.append(("vertex directly under the top", FacePoset.from_covers(faces, covers)))

    # no greatest face
    faces = [("bot", -1), ("a", 0), ("b", 0)]
    covers = [("bot", "a"), ("bot", "b")]
    out.append(("two maximal faces", FacePoset.from_covers(faces, covers)))

    # a rank-1 polytope with a single vertex
    faces = [("bot", -1), ("a", 0), ("top", 1)]
    covers = [("bot", "a"), ("a", "top")]
    out.append(("one-vertex segment", FacePoset.from_covers(faces, covers)))

    return out


def diamond_poset() -> FacePoset:
    """The unique rank-1 polytope: bottom, two vertices, top."""
    faces = [("bot", -1), ("a", 0), ("b", 0), ("top", 1)]
    covers = [("bot", "a"), ("bot", "b"), ("a", "top"), ("b", "top")]
    return FacePoset.from_covers(faces, covers)

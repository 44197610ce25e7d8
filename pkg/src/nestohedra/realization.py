"""Exact Euclidean realization by truncating a simplex.

Every member X of the (saturated closure of the) hypergraph carves the
halfspace sum(x_i for i in X) >= 3**|X|; the polytope lives inside the
hyperplane where the full-carrier sum holds with equality.  Vertex
coordinates come from a constructive recursion that peels the unique
superficial atom of each nested member, so every coordinate is an exact
nonnegative integer and no linear algebra or floating point is needed.
Disconnected hypergraphs realize as the cartesian product of their
blocks, coordinate blocks concatenated in carrier order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatchError,
    NestohedraError,
    NotAConstructionError,
    NotAtomicError,
)
from .constructions import (
    _constructions,
    antichains_all_miss,
    enumerate_constructs,
    is_asc,
)
from .errors import NotASCError
from .hypergraph import (
    AtomSet,
    Family,
    Hypergraph,
    bits_of,
    family_components,
    family_union,
    is_atomic,
    mask_sort_key,
    members_within,
)
from .saturation import saturated_closure


@dataclass(frozen=True)
class HyperplaneSpec:
    """The cutting hyperplane of one member: sum over ``support`` == level."""

    support: AtomSet
    level: int

    def __post_init__(self):
        if not self.support:
            raise NestohedraError("hyperplane support must be nonempty")
        if self.level != 3 ** len(self.support):
            raise NestohedraError("hyperplane level must be 3**|support|")


@dataclass(frozen=True)
class RealizedPolytope:
    """Exact vertex coordinates plus vertex-facet incidence."""

    dimension: int
    atoms: tuple[str, ...]
    vertices: tuple[tuple[Family, tuple[int, ...]], ...]
    facet_specs: tuple[HyperplaneSpec, ...]
    incidence: tuple[tuple[bool, ...], ...]


def _solve(members: frozenset[int], carrier: int, km: frozenset[int],
           out: dict[int, int]) -> None:
    """Fill coordinates for the atoms of ``carrier`` given the block
    construction ``km`` (which contains ``carrier``)."""
    size = carrier.bit_count()
    if size == 0:
        return
    if size == 1:
        out[carrier.bit_length() - 1] = 3
        return
    assert carrier in km, "block construction must contain its carrier"
    proper = [m for m in km if m != carrier]
    s_mask = carrier & ~family_union(proper)
    assert s_mask and s_mask & (s_mask - 1) == 0, "superficial atom not unique"
    rest = carrier ^ s_mask
    sub_members = members_within(members, rest)
    for comp in family_components(sub_members):
        cmask = family_union(comp)
        sub_k = frozenset(m for m in proper if m & ~cmask == 0)
        _solve(frozenset(comp), cmask, sub_k, out)
    total = sum(out[i] for i in bits_of(rest))
    x_s = 3 ** size - total
    # the peeled coordinate always clears the next-lower level
    assert x_s > 3 ** (size - 1)
    out[s_mask.bit_length() - 1] = x_s


def vertex_coordinates(h: Hypergraph, k: Iterable[Iterable[str]]) -> tuple[int, ...]:
    """The unique solution of the member-sum equations of a construction,
    one exact integer per carrier atom in carrier order."""
    if not is_asc(h):
        raise NotASCError("vertex coordinates need an atomic saturated "
                          "connected hypergraph")
    try:
        masks = frozenset(h.mask(s) for s in k)
    except NestohedraError as exc:
        raise NotAConstructionError(str(exc)) from exc
    if len(masks) != h.n_atoms or any(m not in h.members for m in masks) \
            or not antichains_all_miss(h.members, sorted(masks)):
        raise NotAConstructionError("not a construction of the hypergraph")
    out: dict[int, int] = {}
    _solve(h.members, h.carrier_mask, masks, out)
    return tuple(out[i] for i in range(h.n_atoms))


def realize(h: Hypergraph) -> RealizedPolytope:
    """Realize an atomic hypergraph through its saturated closure.

    Vertices are in bijection with the constructions; a vertex lies on
    the hyperplane of X exactly when X belongs to its construction, and
    the incidence below is computed arithmetically and checked against
    that rule.
    """
    if not is_atomic(h):
        raise NotAtomicError("realization needs an atomic hypergraph")
    hbar = saturated_closure(h)
    n = h.n_atoms
    comps = family_components(hbar.members)
    block_masks = [family_union(c) for c in comps]
    cons = sorted(_constructions(hbar.members),
                  key=lambda k: sorted(mask_sort_key(m) for m in k))
    vertices = []
    for k in cons:
        out: dict[int, int] = {}
        for comp, cmask in zip(comps, block_masks):
            kb = frozenset(m for m in k if m & ~cmask == 0)
            _solve(frozenset(comp), cmask, kb, out)
        coords = tuple(out[i] for i in range(n))
        if any(c < 0 for c in coords):
            raise NestohedraError("internal error: negative coordinate")
        vertices.append((h.family(k), coords))
    if len({coords for _, coords in vertices}) != len(vertices):
        raise NestohedraError("internal error: coordinate collision")

    facet_masks = [m for m in hbar.canonical_masks() if m not in block_masks]
    specs = tuple(HyperplaneSpec(hbar.atom_set(m), 3 ** m.bit_count())
                  for m in facet_masks)
    incidence = []
    for (fam, coords), k in zip(vertices, cons):
        row = []
        for m in facet_masks:
            total = sum(coords[i] for i in bits_of(m))
            level = 3 ** m.bit_count()
            if total < level:
                raise NestohedraError("internal error: vertex outside a halfspace")
            on = total == level
            if on != (m in k):
                raise NestohedraError(
                    "internal error: incidence disagrees with the construction")
            row.append(on)
        incidence.append(tuple(row))
    return RealizedPolytope(
        dimension=n - len(comps),
        atoms=h.atoms,
        vertices=tuple(vertices),
        facet_specs=specs,
        incidence=tuple(incidence),
    )


def check_vertex_membership(h: Hypergraph, point: Sequence[int]) -> dict[AtomSet, str]:
    """Classify a point against every member's cutting hyperplane."""
    pt = tuple(point)
    if len(pt) != h.n_atoms:
        raise DimensionMismatchError(
            f"point has {len(pt)} coordinates, carrier has {h.n_atoms}")
    out: dict[AtomSet, str] = {}
    for m in h.members:
        total = sum(pt[i] for i in bits_of(m))
        level = 3 ** m.bit_count()
        if total > level:
            verdict = "strict-interior"
        elif total == level:
            verdict = "on-boundary"
        else:
            verdict = "outside"
        out[h.atom_set(m)] = verdict
    return out


# ---------------------------------------------------------------------------
# face-lattice comparison
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LatticeIsomorphism:
    """Result of comparing the geometric face lattice with the construct
    poset; ``face_map`` sends each geometric face, written as the set of
    facet supports containing it, to the matching construct."""

    ok: bool
    face_map: dict
    mismatches: tuple[str, ...]


def face_lattice_isomorphic(h: Hypergraph) -> LatticeIsomorphism:
    """Machine check that the realized polytope has the construct poset
    as its face lattice.

    The geometric side is rebuilt purely from the arithmetic incidence:
    each vertex becomes its set of incident facet supports and the faces
    are all subsets of those sets.  The combinatorial side takes every
    construct and strips the connected components of the carrier.  The
    two collections must coincide, the vertex map must send incidence
    sets to constructions, and every facet support must be hit.
    """
    rp = realize(h)
    mismatches: list[str] = []
    hbar = saturated_closure(h)
    comps = family_components(hbar.members)
    comp_tops = frozenset(hbar.atom_set(family_union(c)) for c in comps)
    supports = [spec.support for spec in rp.facet_specs]

    vertex_keys = []
    for row, (fam, _) in zip(rp.incidence, rp.vertices):
        fv = frozenset(s for s, on in zip(supports, row) if on)
        vertex_keys.append(fv)
        if fv | comp_tops != fam:
            mismatches.append(
                f"vertex incidence set does not rebuild its construction: {sorted(map(sorted, fam))}")
    if len(set(vertex_keys)) != len(vertex_keys):
        mismatches.append("two vertices share an incidence set")

    for j, spec in enumerate(rp.facet_specs):
        if not any(row[j] for row in rp.incidence):
            mismatches.append(f"facet {sorted(spec.support)} holds no vertex")

    geometric: set[frozenset] = set()
    for fv in vertex_keys:
        items = sorted(fv, key=lambda s: (len(s), tuple(sorted(s))))
        for bits in range(1 << len(items)):
            geometric.add(frozenset(items[i] for i in range(len(items))
                                    if bits >> i & 1))
    combinatorial = {c - comp_tops for c in enumerate_constructs(h)}
    if geometric != combinatorial:
        extra = geometric - combinatorial
        missing = combinatorial - geometric
        mismatches.append(
            f"face collections differ ({len(extra)} geometric-only, "
            f"{len(missing)} construct-only)")

    ok = not mismatches
    face_map = {}
    if ok:
        face_map = {s: s | comp_tops for s in geometric}
    return LatticeIsomorphism(ok=ok, face_map=face_map,
                              mismatches=tuple(mismatches))


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------

def _projected_coords(rp: RealizedPolytope) -> list[tuple[int, ...]]:
    """Drop one redundant coordinate per block: every block satisfies its
    carrier-sum equation, so the projection is affine and injective."""
    if not rp.vertices:
        return []
    blocks = []
    first_fam = rp.vertices[0][0]
    tops = [m for m in first_fam
            if not any(m < o for o in first_fam)]
    index = {a: i for i, a in enumerate(rp.atoms)}
    drop = set()
    for t in tops:
        drop.add(max(index[a] for a in t))
    keep = [i for i in range(len(rp.atoms)) if i not in drop]
    return [tuple(coords[i] for i in keep) for _, coords in rp.vertices]


def _shared_facets(rp: RealizedPolytope, u: int, v: int) -> int:
    return sum(1 for a, b in zip(rp.incidence[u], rp.incidence[v]) if a and b)


def _cycle(rp: RealizedPolytope, members: list[int], shared: int) -> list[int]:
    """Walk a polygon: consecutive vertices share ``shared`` extra facets."""
    start = min(members)
    cycle = [start]
    prev = -1
    cur = start
    while True:
        neighbours = sorted(w for w in members
                            if w != cur and _shared_facets(rp, cur, w) == shared)
        nxt = next(w for w in neighbours if w != prev)
        if nxt == start:
            return cycle
        cycle.append(nxt)
        prev, cur = cur, nxt


def to_off(rp: RealizedPolytope) -> str:
    """OFF export for dimension <= 3, coordinates exact integers.

    Facet polygons are vertex index cycles found by walking each
    facet's edge graph.
    """
    if rp.dimension > 3:
        raise NestohedraError("OFF export covers dimension <= 3 only")
    coords = _projected_coords(rp)
    padded = [c + (0,) * (3 - len(c)) for c in coords]
    nv = len(padded)
    faces: list[list[int]] = []
    if rp.dimension == 3:
        for j in range(len(rp.facet_specs)):
            members = [i for i in range(nv) if rp.incidence[i][j]]
            faces.append(_cycle(rp, members, 2))
        edge_count = sum(1 for u in range(nv) for v in range(u + 1, nv)
                         if _shared_facets(rp, u, v) == 2)
    elif rp.dimension == 2:
        faces.append(_cycle(rp, list(range(nv)), 1))
        edge_count = nv
    else:
        edge_count = max(nv - 1, 0)
    lines = ["OFF", f"{nv} {len(faces)} {edge_count}"]
    for c in padded:
        lines.append(" ".join(str(x) for x in c))
    for f in faces:
        lines.append(str(len(f)) + " " + " ".join(str(i) for i in f))
    return "\n".join(lines) + "\n"


def to_json_dict(rp: RealizedPolytope) -> dict:
    return {
        "dimension": rp.dimension,
        "atoms": list(rp.atoms),
        "vertices": [
            {
                "construction": [sorted(m) for m in
                                 sorted(fam, key=lambda m: (len(m), tuple(sorted(m))))],
                "coords": list(coords),
            }
            for fam, coords in rp.vertices
        ],
        "facets": [
            {"support": sorted(spec.support), "level": spec.level}
            for spec in rp.facet_specs
        ],
        "incidence": [[bool(x) for x in row] for row in rp.incidence],
    }

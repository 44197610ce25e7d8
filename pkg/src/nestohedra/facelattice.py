"""Graded face posets of atomic hypergraphs.

The faces are the constructs ordered by reverse inclusion, below a
distinguished bottom face.  The bottom is a sentinel variant rather than
a family with an extra marker element, so it can never collide with a
construct.  The poset stores the full order relation as per-face
bitmasks; covers, sections and the lattice operations derive from it.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Iterable, Iterator, Sequence

from .errors import (
    BadFactorError,
    CarrierOverlapError,
    NestohedraError,
    NotComparableError,
    NotFacetError,
)
from .hypergraph import AtomSet, Family, Hypergraph, bits_of, quotient, restriction
from .constructions import (
    _ensure_asc,
    enumerate_constructs,
    is_construction,
)


class _Bottom:
    __slots__ = ()

    def __repr__(self) -> str:
        return "F-1"


BOTTOM = _Bottom()

Face = object  # BOTTOM or a Family (frozenset of frozensets of atoms)


def face_label(face: Face) -> str:
    """Canonical printable form; members sort by cardinality then atoms.
    Non-family payloads (hand-built posets) fall back to ``str``."""
    if face is BOTTOM:
        return "F-1"
    if isinstance(face, frozenset) and all(isinstance(m, frozenset) for m in face):
        members = sorted(face, key=lambda m: (len(m), tuple(sorted(m))))
        return "{" + ",".join("{%s}" % ",".join(sorted(m)) for m in members) + "}"
    return str(face)


class FacePoset:
    """A finite poset with declared integer ranks.

    ``_above[i]`` is the bitmask of faces j with face_i <= face_j
    (including i); ``_below`` is its transpose.  Faces are hashable
    payloads, either ``BOTTOM`` or construct families, but hand-built
    posets may use any hashable labels.
    """

    __slots__ = ("faces", "ranks", "_above", "_below", "_index")

    def __init__(self, faces: Sequence[Face], ranks: Sequence[int],
                 above: Sequence[int]):
        self.faces = tuple(faces)
        self.ranks = tuple(ranks)
        self._above = tuple(above)
        n = len(self.faces)
        below = [0] * n
        for i in range(n):
            m = self._above[i]
            while m:
                low = m & -m
                below[low.bit_length() - 1] |= 1 << i
                m ^= low
        self._below = tuple(below)
        self._index = {}
        for i, f in enumerate(self.faces):
            if f in self._index:
                raise NestohedraError(f"duplicate face {face_label(f)}")
            self._index[f] = i

    # -- construction ---------------------------------------------------

    @classmethod
    def from_leq(cls, faces_ranks: Iterable[tuple[Face, int]],
                 leq: Callable[[Face, Face], bool]) -> "FacePoset":
        items = sorted(faces_ranks, key=lambda fr: (fr[1], face_label(fr[0])))
        faces = [f for f, _ in items]
        ranks = [r for _, r in items]
        n = len(faces)
        above = [0] * n
        for i in range(n):
            fi = faces[i]
            for j in range(n):
                if i == j or leq(fi, faces[j]):
                    above[i] |= 1 << j
        return cls(faces, ranks, above)

    @classmethod
    def from_covers(cls, faces_ranks: Iterable[tuple[Face, int]],
                    covers: Iterable[tuple[Face, Face]]) -> "FacePoset":
        """Build from covering pairs (lower, upper); the order is the
        reflexive transitive closure."""
        items = sorted(faces_ranks, key=lambda fr: (fr[1], face_label(fr[0])))
        faces = [f for f, _ in items]
        ranks = [r for _, r in items]
        idx = {f: i for i, f in enumerate(faces)}
        n = len(faces)
        above = [1 << i for i in range(n)]
        pairs = [(idx[a], idx[b]) for a, b in covers]
        changed = True
        while changed:
            changed = False
            for a, b in pairs:
                merged = above[a] | above[b]
                if merged != above[a]:
                    above[a] = merged
                    changed = True
        return cls(faces, ranks, above)

    # -- queries ----------------------------------------------------------

    def __len__(self) -> int:
        return len(self.faces)

    def index(self, face: Face) -> int:
        try:
            return self._index[face]
        except KeyError:
            raise NestohedraError(f"not a face: {face_label(face)}") from None

    def leq(self, f: Face, g: Face) -> bool:
        return bool(self._above[self.index(f)] >> self.index(g) & 1)

    def rank_of(self, face: Face) -> int:
        return self.ranks[self.index(face)]

    @property
    def rank(self) -> int:
        return max(self.ranks, default=-1)

    def faces_of_rank(self, k: int) -> tuple[Face, ...]:
        return tuple(f for f, r in zip(self.faces, self.ranks) if r == k)

    def bottom(self) -> Face | None:
        full = (1 << len(self.faces)) - 1
        for i in range(len(self.faces)):
            if self._above[i] == full:
                return self.faces[i]
        return None

    def top(self) -> Face | None:
        full = (1 << len(self.faces)) - 1
        for i in range(len(self.faces)):
            if self._below[i] == full:
                return self.faces[i]
        return None

    def covers(self) -> list[tuple[int, int]]:
        """Index pairs (i, j) with j covering i."""
        out = []
        n = len(self.faces)
        for i in range(n):
            ups = self._above[i] & ~(1 << i)
            for j in bits_of(ups):
                between = self._above[i] & self._below[j]
                if between == (1 << i) | (1 << j):
                    out.append((i, j))
        return out

    def iter_pairs(self) -> Iterator[tuple[int, int]]:
        """All strict pairs i < j in the order (by index)."""
        for i in range(len(self.faces)):
            ups = self._above[i] & ~(1 << i)
            for j in bits_of(ups):
                yield i, j

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FacePoset):
            return NotImplemented
        if set(zip(self.faces, self.ranks)) != set(zip(other.faces, other.ranks)):
            return False
        mine = {(self.faces[i], self.faces[j]) for i, j in self.iter_pairs()}
        theirs = {(other.faces[i], other.faces[j]) for i, j in other.iter_pairs()}
        return mine == theirs

    def __hash__(self) -> int:
        return hash(frozenset(zip(self.faces, self.ranks)))

    def __repr__(self) -> str:
        return f"FacePoset({len(self.faces)} faces, rank {self.rank})"


# ---------------------------------------------------------------------------
# the face poset of a hypergraph
# ---------------------------------------------------------------------------

def _reverse_inclusion(a: Face, b: Face) -> bool:
    if a is BOTTOM:
        return True
    if b is BOTTOM:
        return False
    return b <= a


def abstract_polytope(h: Hypergraph) -> FacePoset:
    """Constructs of ``h`` under reverse inclusion, plus a least face.

    A construct of cardinality c gets rank |carrier| - c; the bottom has
    rank -1 and the set of connected components of the carrier sits on
    top at rank |carrier| - (number of components).
    """
    constructs = enumerate_constructs(h)
    n = h.n_atoms
    faces_ranks: list[tuple[Face, int]] = [(BOTTOM, -1)]
    faces_ranks += [(c, n - len(c)) for c in constructs]
    return FacePoset.from_leq(faces_ranks, _reverse_inclusion)


def f_vector(p: FacePoset) -> tuple[int, ...]:
    """Face counts from vertices up to facets (ranks 0 .. rank-1)."""
    counts: dict[int, int] = {}
    for r in p.ranks:
        counts[r] = counts.get(r, 0) + 1
    return tuple(counts.get(k, 0) for k in range(p.rank))


def rank_counts(p: FacePoset) -> dict[int, int]:
    """Face counts for every rank, bottom and top included."""
    counts: dict[int, int] = {}
    for r in p.ranks:
        counts[r] = counts.get(r, 0) + 1
    return counts


# ---------------------------------------------------------------------------
# lattice operations
# ---------------------------------------------------------------------------

def meet(p: FacePoset, c1: Face, c2: Face) -> Face:
    """Greatest lower bound; on construct posets this is the union when
    the union is a construct, and the bottom face otherwise."""
    i, j = p.index(c1), p.index(c2)
    common = p._below[i] & p._below[j]
    for k in sorted(bits_of(common), key=lambda x: -p.ranks[x]):
        if common & ~p._below[k] == 0:
            return p.faces[k]
    raise NestohedraError("faces have no meet")


def join(p: FacePoset, c1: Face, c2: Face) -> Face:
    """Least upper bound; on construct posets this is the intersection."""
    i, j = p.index(c1), p.index(c2)
    common = p._above[i] & p._above[j]
    for k in sorted(bits_of(common), key=lambda x: p.ranks[x]):
        if common & ~p._above[k] == 0:
            return p.faces[k]
    raise NestohedraError("faces have no join")


def _poset_atoms(p: FacePoset) -> set[str]:
    atoms: set[str] = set()
    for f in p.faces:
        if f is BOTTOM:
            continue
        for member in f:
            atoms |= member
    return atoms


def otimes(*posets: FacePoset) -> FacePoset:
    """Product of construct posets over pairwise disjoint carriers.

    Faces of rank >= 0 are the disjoint unions of rank >= 0 faces, the
    bottoms are conflated, order is componentwise and rank adds.
    """
    if not posets:
        raise ValueError("otimes needs at least one poset")
    seen: set[str] = set()
    for p in posets:
        atoms = _poset_atoms(p)
        if atoms & seen:
            raise CarrierOverlapError(
                f"carriers overlap on {sorted(atoms & seen)}")
        seen |= atoms
    parts = []
    for p in posets:
        parts.append([(f, r) for f, r in zip(p.faces, p.ranks) if f is not BOTTOM])
    faces_ranks: list[tuple[Face, int]] = [(BOTTOM, -1)]
    for combo in product(*parts):
        face = frozenset().union(*(f for f, _ in combo))
        rank = sum(r for _, r in combo)
        faces_ranks.append((face, rank))
    return FacePoset.from_leq(faces_ranks, _reverse_inclusion)


def continuation(h: Hypergraph, y: Iterable[str],
                 k: Iterable[Iterable[str]], j: Iterable[Iterable[str]]) -> Family:
    """Glue a construction of the part inside ``y`` with one of the trace
    on the complement into a construction of ``h``.

    Each member X of the trace factor contributes X ∪ y when that union
    is a member of ``h`` and X itself otherwise.
    """
    _ensure_asc(h)
    ys = frozenset(y)
    member_sets = h.member_sets
    if ys not in member_sets:
        raise BadFactorError(f"{sorted(ys)} is not a member of the hypergraph")
    kf = frozenset(frozenset(s) for s in k)
    jf = frozenset(frozenset(s) for s in j)
    if not is_construction(restriction(h, ys), kf):
        raise BadFactorError("first factor is not a construction of the restriction")
    rest = frozenset(h.atoms) - ys
    if not rest:
        if jf:
            raise BadFactorError("second factor must be empty when y is the carrier")
        return kf
    if not is_construction(quotient(h, rest), jf):
        raise BadFactorError("second factor is not a construction of the trace")
    out = set(kf)
    for x in jf:
        u = x | ys
        out.add(u if u in member_sets else x)
    return frozenset(out)


def facet_section(h: Hypergraph, y: Iterable[str]) -> FacePoset:
    """The part of the face poset at and below the facet given by ``y``:
    all constructs containing ``y``, plus the bottom."""
    _ensure_asc(h)
    ys = frozenset(y)
    if ys not in h.member_sets or ys == frozenset(h.atoms):
        raise NotFacetError(f"{sorted(ys)} does not give a facet")
    n = h.n_atoms
    faces_ranks: list[tuple[Face, int]] = [(BOTTOM, -1)]
    for c in enumerate_constructs(h):
        if ys in c:
            faces_ranks.append((c, n - len(c)))
    return FacePoset.from_leq(faces_ranks, _reverse_inclusion)


def section(p: FacePoset, g: Face, f: Face) -> FacePoset:
    """Induced poset between ``f`` and ``g``, reranked to start at -1."""
    fi, gi = p.index(f), p.index(g)
    if not p._above[fi] >> gi & 1:
        raise NotComparableError("section endpoints are not comparable")
    keep = p._above[fi] & p._below[gi]
    fr = p.ranks[fi]
    faces_ranks = [(p.faces[i], p.ranks[i] - fr - 1) for i in bits_of(keep)]
    return FacePoset.from_leq(faces_ranks, lambda a, b: p.leq(a, b))


# ---------------------------------------------------------------------------
# isomorphism testing
# ---------------------------------------------------------------------------

def poset_isomorphic(p1: FacePoset, p2: FacePoset) -> bool:
    """Order-preserving bijection test by signature refinement plus
    backtracking; intended for the small posets this package builds."""
    n = len(p1.faces)
    if n != len(p2.faces) or sorted(p1.ranks) != sorted(p2.ranks):
        return False

    def signatures(p: FacePoset) -> list:
        cov = p.covers()
        up: list[list[int]] = [[] for _ in range(len(p.faces))]
        down: list[list[int]] = [[] for _ in range(len(p.faces))]
        for a, b in cov:
            up[a].append(b)
            down[b].append(a)
        sig = list(p.ranks)
        for _ in range(3):
            sig = [hash((sig[i],
                         tuple(sorted(sig[j] for j in up[i])),
                         tuple(sorted(sig[j] for j in down[i]))))
                   for i in range(len(p.faces))]
        return sig

    s1, s2 = signatures(p1), signatures(p2)
    if sorted(s1) != sorted(s2):
        return False
    cands = {i: [j for j in range(n) if s2[j] == s1[i]] for i in range(n)}
    order = sorted(range(n), key=lambda i: len(cands[i]))
    assigned: dict[int, int] = {}
    used: set[int] = set()

    def fits(i: int, j: int) -> bool:
        for a, b in assigned.items():
            if (p1._above[i] >> a & 1) != (p2._above[j] >> b & 1):
                return False
            if (p1._above[a] >> i & 1) != (p2._above[b] >> j & 1):
                return False
        return True

    def backtrack(pos: int) -> bool:
        if pos == n:
            return True
        i = order[pos]
        for j in cands[i]:
            if j not in used and fits(i, j):
                assigned[i] = j
                used.add(j)
                if backtrack(pos + 1):
                    return True
                del assigned[i]
                used.discard(j)
        return False

    return backtrack(0)


# ---------------------------------------------------------------------------
# exports
# ---------------------------------------------------------------------------

def to_dot(p: FacePoset) -> str:
    """Rank-layered Hasse diagram in DOT form."""
    lines = ["digraph face_poset {", "  rankdir=BT;", "  node [shape=box];"]
    for i, f in enumerate(p.faces):
        lines.append(f'  n{i} [label="{face_label(f)}"];')
    for r in sorted(set(p.ranks)):
        same = " ".join(f"n{i};" for i, rr in enumerate(p.ranks) if rr == r)
        lines.append("  { rank=same; %s }" % same)
    for a, b in sorted(p.covers()):
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(p: FacePoset) -> dict:
    faces = []
    for i, f in enumerate(p.faces):
        members = None if f is BOTTOM else [
            sorted(m) for m in sorted(f, key=lambda m: (len(m), tuple(sorted(m))))]
        faces.append({"id": i, "rank": p.ranks[i],
                      "label": face_label(f), "members": members})
    return {"faces": faces, "covers": [list(c) for c in sorted(p.covers())]}

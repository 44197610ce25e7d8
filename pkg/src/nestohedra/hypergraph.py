"""Finite hypergraphs over string-named carriers.

A hypergraph is a family of nonempty subsets of a finite carrier whose
union is exactly the carrier.  Atoms are strings externally; internally
every subset is an int bitmask over the sorted atom tuple, which keeps
the enumeration loops that dominate this package cheap.  Python ints are
unbounded, so one representation covers carriers of any size.

All values are immutable after construction and safe to share.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    CarrierMismatchError,
    DuplicateMemberError,
    EmptyMemberError,
    HypergraphError,
    NotAtomicError,
    NotSubsetError,
    UnknownAtomError,
)

Carrier = tuple[str, ...]
AtomSet = frozenset[str]
Family = frozenset[AtomSet]


# ---------------------------------------------------------------------------
# bitmask family helpers (shared by the sibling modules)
# ---------------------------------------------------------------------------

def bits_of(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def family_union(masks: Iterable[int]) -> int:
    u = 0
    for m in masks:
        u |= m
    return u


def family_components(masks: Iterable[int]) -> list[frozenset[int]]:
    """Group members by connectivity of the intersection graph.

    Two members are linked when they share an atom.  Returns the groups
    sorted by their carrier mask; the empty family yields no groups.
    """
    comps: list[tuple[int, set[int]]] = []
    for m in sorted(masks):
        carrier, members = m, {m}
        keep = []
        for c, mem in comps:
            if c & m:
                carrier |= c
                members |= mem
            else:
                keep.append((c, mem))
        keep.append((carrier, members))
        comps = keep
    return [frozenset(mem) for _, mem in sorted(comps)]


def family_is_connected(masks: Iterable[int], carrier_mask: int) -> bool:
    """Is ``masks`` a connected hypergraph with carrier ``carrier_mask``?

    Requires the union of the members to be exactly the carrier; the
    empty family is connected on the empty carrier only.
    """
    ms = list(masks)
    if family_union(ms) != carrier_mask:
        return False
    return len(family_components(ms)) <= 1


def members_within(masks: Iterable[int], ymask: int) -> list[int]:
    """Members entirely contained in ``ymask``."""
    return [m for m in masks if m & ~ymask == 0]


def mask_sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical subset order: cardinality first, then index-lexicographic."""
    idx = tuple(bits_of(mask))
    return (len(idx), idx)


# ---------------------------------------------------------------------------
# the Hypergraph value
# ---------------------------------------------------------------------------

class Hypergraph:
    """Immutable hypergraph; ``members`` are bitmasks over ``atoms``.

    ``atoms`` is always stored sorted, so equal carriers index equally
    and hypergraph equality is plain field equality.
    """

    __slots__ = ("atoms", "members", "_index", "_hash")

    def __init__(self, atoms: Sequence[str], member_masks: Iterable[int]):
        self.atoms: Carrier = tuple(atoms)
        self.members: frozenset[int] = frozenset(member_masks)
        self._index = {a: i for i, a in enumerate(self.atoms)}
        self._hash = None

    @classmethod
    def from_sets(cls, members: Iterable[Iterable[str]],
                  carrier: Iterable[str] | None = None) -> "Hypergraph":
        """Build and check a hypergraph from atom-name sets.

        With no ``carrier`` the carrier is the union of the members.  A
        declared carrier must have distinct atoms and equal that union.
        """
        fams: list[AtomSet] = []
        seen: set[AtomSet] = set()
        for raw in members:
            fam = frozenset(raw)
            if not fam:
                raise EmptyMemberError("the empty set cannot be a member")
            if fam in seen:
                raise DuplicateMemberError(f"duplicate member {sorted(fam)}")
            seen.add(fam)
            fams.append(fam)
        union: set[str] = set().union(*fams) if fams else set()
        if carrier is None:
            atoms_set = union
        else:
            declared = list(carrier)
            atoms_set = set(declared)
            if len(atoms_set) != len(declared):
                raise CarrierMismatchError("carrier atoms must be distinct")
            stray = union - atoms_set
            if stray:
                raise UnknownAtomError(
                    f"member atoms not in the carrier: {sorted(stray)}")
            if union != atoms_set:
                unused = sorted(atoms_set - union)
                raise CarrierMismatchError(
                    f"carrier is not the union of the members; unused atoms: {unused}")
        for a in atoms_set:
            if not isinstance(a, str) or not a:
                raise HypergraphError(f"atoms must be nonempty strings, got {a!r}")
        atoms = tuple(sorted(atoms_set))
        index = {a: i for i, a in enumerate(atoms)}
        masks = {sum(1 << index[a] for a in fam) for fam in fams}
        return cls(atoms, masks)

    # -- basic views --------------------------------------------------------

    @property
    def n_atoms(self) -> int:
        return len(self.atoms)

    @property
    def carrier_mask(self) -> int:
        return (1 << len(self.atoms)) - 1

    def mask(self, atom_names: Iterable[str]) -> int:
        m = 0
        for a in atom_names:
            i = self._index.get(a)
            if i is None:
                raise UnknownAtomError(f"unknown atom {a!r}")
            m |= 1 << i
        return m

    def atom_set(self, mask: int) -> AtomSet:
        return frozenset(self.atoms[i] for i in bits_of(mask))

    def family(self, masks: Iterable[int]) -> Family:
        return frozenset(self.atom_set(m) for m in masks)

    @property
    def member_sets(self) -> Family:
        return self.family(self.members)

    def canonical_masks(self) -> list[int]:
        return sorted(self.members, key=mask_sort_key)

    # -- value semantics -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.atoms == other.atoms and self.members == other.members

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.atoms, self.members))
        return self._hash

    def __repr__(self) -> str:
        mem = ",".join("{%s}" % ",".join(self.atoms[i] for i in bits_of(m))
                       for m in self.canonical_masks())
        return f"Hypergraph[{','.join(self.atoms)}]{{{mem}}}"


@dataclass(frozen=True)
class HypergraphPartition:
    """A set of sub-hypergraphs whose member families and carriers both
    partition the original hypergraph."""

    blocks: frozenset[Hypergraph]

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)


# ---------------------------------------------------------------------------
# core operations
# ---------------------------------------------------------------------------

def validate(carrier: Iterable[str], members: Iterable[Iterable[str]]) -> Hypergraph:
    """Check a declared carrier/member listing and return the hypergraph."""
    return Hypergraph.from_sets(members, carrier=carrier)


def is_connected(h: Hypergraph) -> bool:
    """True when ``h`` has a single hypergraph partition.

    Equivalent to connectivity of the intersection graph; the empty
    hypergraph counts as connected.
    """
    return len(family_components(h.members)) <= 1


def finest_partition(h: Hypergraph) -> HypergraphPartition:
    """The unique partition of ``h`` into connected blocks."""
    blocks = []
    for comp in family_components(h.members):
        names = [h.atom_set(m) for m in comp]
        blocks.append(Hypergraph.from_sets(names))
    return HypergraphPartition(frozenset(blocks))


def is_atomic(h: Hypergraph) -> bool:
    """Every singleton of a carrier atom is a member."""
    return all((1 << i) in h.members for i in range(h.n_atoms))


def restriction(h: Hypergraph, y: Iterable[str]) -> Hypergraph:
    """The sub-hypergraph of members contained in ``y``, on carrier ``y``.

    Defined for atomic hypergraphs, where the result is again atomic
    with carrier exactly ``y``.
    """
    if not is_atomic(h):
        raise NotAtomicError("restriction needs an atomic hypergraph")
    ys = set(y)
    if not ys <= set(h.atoms):
        raise NotSubsetError(f"{sorted(ys)} is not a subset of the carrier")
    ymask = h.mask(ys)
    fams = [h.atom_set(m) for m in members_within(h.members, ymask)]
    return Hypergraph.from_sets(fams, carrier=ys)


def quotient(h: Hypergraph, z: Iterable[str]) -> Hypergraph:
    """Trace of ``h`` on ``z``: nonempty intersections of members with ``z``."""
    zs = set(z)
    if not zs <= set(h.atoms):
        raise NotSubsetError(f"{sorted(zs)} is not a subset of the carrier")
    zmask = h.mask(zs)
    fams = {h.atom_set(m & zmask) for m in h.members if m & zmask}
    return Hypergraph.from_sets(fams, carrier=zs)


# ---------------------------------------------------------------------------
# external formats
# ---------------------------------------------------------------------------

def to_json(h: Hypergraph) -> str:
    doc = {
        "carrier": list(h.atoms),
        "members": [sorted(h.atom_set(m)) for m in h.canonical_masks()],
    }
    return json.dumps(doc)


def from_json(text: str) -> Hypergraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise HypergraphError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "carrier" not in doc or "members" not in doc:
        raise HypergraphError('expected {"carrier": [...], "members": [[...], ...]}')
    return Hypergraph.from_sets(doc["members"], carrier=doc["carrier"])


def to_text(h: Hypergraph) -> str:
    """Compact text format: one member per line, atoms comma-separated."""
    for a in h.atoms:
        if "," in a or "#" in a or any(c.isspace() for c in a):
            raise HypergraphError(
                f"atom {a!r} cannot be written in the compact text format")
    lines = [",".join(sorted(h.atom_set(m))) for m in h.canonical_masks()]
    return "\n".join(lines) + ("\n" if lines else "")


def from_text(text: str) -> Hypergraph:
    """Parse the compact format.  ``#`` starts a comment; blank lines are
    ignored; duplicate members and empty members are rejected."""
    fams = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        atoms = [a.strip() for a in line.split(",")]
        if any(not a for a in atoms):
            raise HypergraphError(f"empty atom name in line {raw!r}")
        fams.append(atoms)
    return Hypergraph.from_sets(fams)

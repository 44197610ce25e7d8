"""Constructions and constructs of atomic hypergraphs.

A construction is built inductively: the empty hypergraph has the empty
construction; a connected hypergraph contributes its carrier on top of a
construction of the hypergraph with one atom deleted; a disconnected one
takes unions across its connected blocks.  Constructs are the subsets of
constructions that keep every connected component of the carrier.

For atomic, saturated, connected (ASC) hypergraphs there is an
equivalent antichain characterization: a subfamily M of H is inside some
construction exactly when no antichain of M has its union in H, and it
is a construction when additionally |M| equals the carrier size.  Both
routes are implemented and the tests hold them against each other.

Three notations are carried: plain member families, forests (sets of
trees, each a root atom plus child trees), and prefix words with a
commutative ``+``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

from .errors import (
    NotAConstructionError,
    NotASCError,
    NotAtomicError,
    NotMemberError,
    RepeatedAtomError,
    STermSyntaxError,
    UnknownAtomError,
)
from .hypergraph import (
    Family,
    Hypergraph,
    bits_of,
    family_components,
    family_union,
    is_atomic,
    is_connected,
)
from .saturation import is_saturated, saturated_closure

# A tree is a frozenset holding one root atom (str) and the child trees
# (frozensets); a forest construction is a frozenset of trees.
FTree = frozenset
FConstruction = frozenset


@lru_cache(maxsize=None)
def is_asc(h: Hypergraph) -> bool:
    """Atomic, saturated and connected."""
    return is_atomic(h) and is_saturated(h) and is_connected(h)


def _ensure_asc(h: Hypergraph) -> None:
    if not is_asc(h):
        raise NotASCError("operation needs an atomic saturated connected hypergraph")


# ---------------------------------------------------------------------------
# antichain machinery
# ---------------------------------------------------------------------------

def antichains_all_miss(members: frozenset[int], fam: Sequence[int]) -> bool:
    """No antichain of ``fam`` (>= 2 pairwise incomparable sets) has its
    union in ``members``.

    Walks the cliques of the incomparability graph, so families whose
    pairs already clash are rejected without touching larger subsets.
    """
    lst = list(fam)
    n = len(lst)
    incomp = [[False] * n for _ in range(n)]
    for i in range(n):
        a = lst[i]
        for j in range(i + 1, n):
            b = lst[j]
            c = a & b
            if c != a and c != b:
                incomp[i][j] = incomp[j][i] = True

    def grows_bad(cand: list[int], union: int) -> bool:
        for pos, i in enumerate(cand):
            u2 = union | lst[i]
            if union and u2 in members:
                return True
            nxt = [j for j in cand[pos + 1:] if incomp[i][j]]
            if nxt and grows_bad(nxt, u2):
                return True
        return False

    return not grows_bad(list(range(n)), 0)


def superficial_elements(m: Iterable[Iterable[str]], x: Iterable[str]) -> frozenset[str]:
    """Atoms of ``x`` lying in no proper subset of ``x`` within ``m``."""
    fam = frozenset(frozenset(s) for s in m)
    xs = frozenset(x)
    if xs not in fam:
        raise NotMemberError(f"{sorted(xs)} is not in the family")
    covered: set[str] = set()
    for y in fam:
        if y < xs:
            covered |= y
    return frozenset(xs - covered)


# ---------------------------------------------------------------------------
# enumeration (inductive route)
# ---------------------------------------------------------------------------

# memoized on the member family alone: constructions depend only on the
# bitmask structure, so distinct hypergraphs sharing an ambient indexing
# reuse each other's subproblems
_ENUM_MEMO: dict[frozenset[int], frozenset[frozenset[int]]] = {}
_COUNT_MEMO: dict[frozenset[int], int] = {}


def _constructions(members: frozenset[int]) -> frozenset[frozenset[int]]:
    got = _ENUM_MEMO.get(members)
    if got is not None:
        return got
    if not members:
        out = frozenset({frozenset()})
    else:
        comps = family_components(members)
        if len(comps) == 1:
            carrier = family_union(members)
            acc: set[frozenset[int]] = set()
            for b in bits_of(carrier):
                bit = 1 << b
                sub = frozenset(m for m in members if not m & bit)
                for k in _constructions(sub):
                    acc.add(k | {carrier})
            out = frozenset(acc)
        else:
            acc = set()
            for combo in product(*(_constructions(c) for c in comps)):
                acc.add(frozenset().union(*combo))
            out = frozenset(acc)
    _ENUM_MEMO[members] = out
    return out


def _count(members: frozenset[int]) -> int:
    got = _COUNT_MEMO.get(members)
    if got is not None:
        return got
    if not members:
        out = 1
    else:
        comps = family_components(members)
        if len(comps) > 1:
            out = 1
            for c in comps:
                out *= _count(frozenset(c))
        else:
            carrier = family_union(members)
            out = 0
            for b in bits_of(carrier):
                bit = 1 << b
                out += _count(frozenset(m for m in members if not m & bit))
    _COUNT_MEMO[members] = out
    return out


def enumerate_constructions(h: Hypergraph) -> frozenset[Family]:
    """All constructions of an atomic hypergraph, as member families."""
    if not is_atomic(h):
        raise NotAtomicError("constructions are defined for atomic hypergraphs")
    return frozenset(h.family(k) for k in _constructions(h.members))


def count_constructions(h: Hypergraph) -> int:
    """Construction count by the deletion recurrence, without building sets.

    Independent of :func:`enumerate_constructions`; the two are held
    against each other in the tests.
    """
    if not is_atomic(h):
        raise NotAtomicError("constructions are defined for atomic hypergraphs")
    return _count(h.members)


def enumerate_constructs(h: Hypergraph) -> frozenset[Family]:
    """All subfamilies of constructions keeping every connected component."""
    if not is_atomic(h):
        raise NotAtomicError("constructs are defined for atomic hypergraphs")
    tops = frozenset(family_union(c) for c in family_components(h.members))
    acc: set[frozenset[int]] = set()
    for k in _constructions(h.members):
        free = sorted(k - tops)
        for r in range(len(free) + 1):
            for sub in combinations(free, r):
                acc.add(frozenset(sub) | tops)
    return frozenset(h.family(c) for c in acc)


# ---------------------------------------------------------------------------
# recognition (antichain route)
# ---------------------------------------------------------------------------

def _masks_in(h: Hypergraph, m: Iterable[Iterable[str]]) -> list[int] | None:
    """Member masks of ``m``, or None when some set is not a member of h."""
    out = []
    for s in m:
        try:
            mask = h.mask(s)
        except UnknownAtomError:
            return None
        if mask not in h.members:
            return None
        out.append(mask)
    return out


def is_construction(h: Hypergraph, m: Iterable[Iterable[str]]) -> bool:
    """Antichain characterization of a construction of an ASC hypergraph:
    m is a subfamily of h of carrier size whose antichains all miss h."""
    _ensure_asc(h)
    masks = _masks_in(h, m)
    if masks is None or len(set(masks)) != len(masks):
        return False
    if len(masks) != h.n_atoms:
        return False
    return antichains_all_miss(h.members, masks)


def is_construct(h: Hypergraph, m: Iterable[Iterable[str]]) -> bool:
    """Antichain characterization of a construct of an ASC hypergraph:
    a subfamily containing the carrier whose antichains all miss h."""
    _ensure_asc(h)
    masks = _masks_in(h, m)
    if masks is None:
        return False
    if h.carrier_mask not in masks and h.n_atoms > 0:
        return False
    return antichains_all_miss(h.members, masks)


def _construction_masks(h: Hypergraph, k: Iterable[Iterable[str]]) -> list[int]:
    """Masks of ``k`` after checking it really is a construction of ``h``.

    Works for every atomic hypergraph: each connected block of the
    saturated closure must receive a block construction, checked through
    the antichain route.
    """
    if not is_atomic(h):
        raise NotAtomicError("constructions are defined for atomic hypergraphs")
    masks = []
    for s in k:
        try:
            masks.append(h.mask(s))
        except UnknownAtomError as exc:
            raise NotAConstructionError(str(exc)) from exc
    if len(set(masks)) != len(masks):
        raise NotAConstructionError("repeated members")
    hbar = saturated_closure(h)
    placed = 0
    for comp in family_components(hbar.members):
        cmask = family_union(comp)
        kb = [m for m in masks if m & ~cmask == 0]
        placed += len(kb)
        if len(kb) != cmask.bit_count():
            raise NotAConstructionError("wrong member count inside a component")
        comp_members = frozenset(comp)
        if any(m not in comp_members for m in kb):
            raise NotAConstructionError("member outside the saturated closure")
        if not antichains_all_miss(comp_members, kb):
            raise NotAConstructionError("an antichain union lands in the hypergraph")
    if placed != len(masks):
        raise NotAConstructionError("member crosses connected components")
    return masks


# ---------------------------------------------------------------------------
# forest notation
# ---------------------------------------------------------------------------

def _ftree(top: int, pool: list[int], h: Hypergraph) -> FTree:
    proper = [m for m in pool if m != top and m & ~top == 0]
    root_mask = top & ~family_union(proper)
    assert root_mask and root_mask & (root_mask - 1) == 0, "non-unique root"
    root = h.atoms[root_mask.bit_length() - 1]
    children = [m for m in proper
                if not any(m != o and m & ~o == 0 for o in proper)]
    return frozenset({root} | {_ftree(c, proper, h) for c in children})


def to_f_construction(h: Hypergraph, k: Iterable[Iterable[str]]) -> FConstruction:
    """Forest form of a construction: each tree bundles its root atom
    with the set of its child trees."""
    masks = _construction_masks(h, k)
    tops = [m for m in masks if not any(m != o and m & ~o == 0 for o in masks)]
    return frozenset(_ftree(t, masks, h) for t in tops)


# ---------------------------------------------------------------------------
# word notation
# ---------------------------------------------------------------------------

class STerm:
    """Base of the word syntax for constructions."""

    __slots__ = ()

    def __str__(self) -> str:
        return _sterm_str(self, in_sum=False)


@dataclass(frozen=True)
class Empty(STerm):
    __slots__ = ()


@dataclass(frozen=True)
class Prefix(STerm):
    atom: str
    rest: STerm


@dataclass(frozen=True)
class Sum(STerm):
    terms: tuple[STerm, ...]


EMPTY = Empty()


def make_sum(terms: Sequence[STerm]) -> STerm:
    """Canonical sum: a single summand collapses, the rest sort by their
    printed form (the commutativity quotient)."""
    ts = list(terms)
    if len(ts) == 1:
        return ts[0]
    return Sum(tuple(sorted(ts, key=str)))


def _sterm_str(t: STerm, in_sum: bool) -> str:
    if isinstance(t, Empty):
        return ""
    if isinstance(t, Prefix):
        body = t.atom + _sterm_str(t.rest, in_sum=False)
        if in_sum and not isinstance(t.rest, Empty):
            return "(" + body + ")"
        return body
    if isinstance(t, Sum):
        return "(" + "+".join(_sterm_str(s, in_sum=True) for s in t.terms) + ")"
    raise TypeError(f"not an STerm: {t!r}")


def sterm_atoms(t: STerm) -> frozenset[str]:
    if isinstance(t, Empty):
        return frozenset()
    if isinstance(t, Prefix):
        return sterm_atoms(t.rest) | {t.atom}
    if isinstance(t, Sum):
        return frozenset().union(*(sterm_atoms(s) for s in t.terms))
    raise TypeError(f"not an STerm: {t!r}")


def sterm_to_family(t: STerm) -> Family:
    """Decode a word back into the member family it constructs."""
    if isinstance(t, Empty):
        return frozenset()
    if isinstance(t, Prefix):
        return sterm_to_family(t.rest) | {sterm_atoms(t)}
    if isinstance(t, Sum):
        return frozenset().union(*(sterm_to_family(s) for s in t.terms))
    raise TypeError(f"not an STerm: {t!r}")


def _forest_sterm(trees: Iterable[FTree]) -> STerm:
    words = []
    for tree in trees:
        root = None
        children = []
        for item in tree:
            if isinstance(item, str):
                root = item
            else:
                children.append(item)
        assert root is not None
        words.append(Prefix(root, _forest_sterm(children)))
    if not words:
        return EMPTY
    return make_sum(words)


def to_s_construction(h: Hypergraph, k: Iterable[Iterable[str]]) -> STerm:
    """Canonical word form of a construction."""
    return _forest_sterm(to_f_construction(h, k))


# ---------------------------------------------------------------------------
# word parser
# ---------------------------------------------------------------------------

class _SParser:
    """Recursive descent for ``term := atom term? | '(' term ('+' term)* ')'``.

    Atom names are matched longest-first against the carrier, so
    multi-character atoms work whenever the match is unambiguous.
    Redundant parentheses around a single summand are accepted (words
    inside sums are conventionally parenthesized when printed).
    """

    def __init__(self, text: str, atoms: Sequence[str]):
        self.text = text
        self.pos = 0
        self.atoms = sorted(atoms, key=len, reverse=True)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, why: str) -> STermSyntaxError:
        return STermSyntaxError(f"{why} at position {self.pos} in {self.text!r}")

    def match_atom(self) -> str:
        for a in self.atoms:
            if self.text.startswith(a, self.pos):
                self.pos += len(a)
                return a
        ch = self.peek()
        if ch and ch not in "()+":
            run = ""
            while self.pos + len(run) < len(self.text) and \
                    self.text[self.pos + len(run)] not in "()+":
                run += self.text[self.pos + len(run)]
            raise UnknownAtomError(f"unknown atom {run!r}")
        raise self.fail("expected an atom")

    def parse_term(self) -> STerm:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            parts = [self.parse_term()]
            while self.peek() == "+":
                self.pos += 1
                parts.append(self.parse_term())
            if self.peek() != ")":
                raise self.fail("expected ')'")
            self.pos += 1
            return make_sum(parts)
        atom = self.match_atom()
        if self.peek() and self.peek() not in ")+":
            return Prefix(atom, self.parse_term())
        return Prefix(atom, EMPTY)


def parse_s_construction(text: str, h: Hypergraph) -> STerm:
    """Parse word text over the carrier of ``h`` into a canonical STerm.

    Purely syntactic: the result need not construct ``h``.  Whitespace
    is not part of the grammar.
    """
    if any(c.isspace() for c in text):
        raise STermSyntaxError("whitespace is not allowed in terms")
    if text == "":
        return EMPTY
    parser = _SParser(text, h.atoms)
    term = parser.parse_term()
    if parser.pos != len(text):
        raise parser.fail("trailing input")
    seen: set[str] = set()

    def walk(t: STerm) -> None:
        if isinstance(t, Prefix):
            if t.atom in seen:
                raise RepeatedAtomError(f"atom {t.atom!r} repeats")
            seen.add(t.atom)
            walk(t.rest)
        elif isinstance(t, Sum):
            for s in t.terms:
                walk(s)

    walk(term)
    return term

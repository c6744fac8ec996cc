"""The connection relation on the support of a graded system.

Two nonidentity degrees g and h in the odd support are connected when some
finite sequence g_1, ..., g_{2n+1} of elements drawn from the inverse-closed
odd support (plus the identity) starts at g_1 = g, keeps every odd partial
product inside the inverse-closed odd support, keeps every even partial
product inside the inverse-closed even support, and ends in {h, h^-1}.

Even partial products are required to lie in the even support strictly (the
identity is not permitted there); the degenerate case g h = 1 is reachable
through the length-one sequence and the {h, h^-1} clause instead.

The closure is computed by breadth-first search over group elements; parent
pointers are retained so a human-readable witness sequence can be
reconstructed for every reachable element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EquivalenceFailure, InputError
from .groups import GroupElement


@dataclass(frozen=True)
class SupportData:
    """Odd and even supports of a graded system with their inverse closures."""

    odd: tuple[GroupElement, ...]
    even: tuple[GroupElement, ...]
    pm_odd: frozenset[GroupElement]
    pm_even: frozenset[GroupElement]

    @classmethod
    def from_parts(cls, odd, even) -> "SupportData":
        odd = tuple(sorted(odd))
        even = tuple(sorted(even))
        pm_odd = frozenset(odd) | frozenset(g.inverse() for g in odd)
        pm_even = frozenset(even) | frozenset(g.inverse() for g in even)
        return cls(odd, even, pm_odd, pm_even)

    @classmethod
    def from_system(cls, system, emb) -> "SupportData":
        return cls.from_parts(system.support(), emb.support())


@dataclass(frozen=True)
class ConnectionClass:
    """An equivalence class of connected support elements.

    The representative is the minimal member in the canonical element
    order; members are pairwise connected and no member is connected to
    anything outside the class.
    """

    representative: GroupElement
    members: tuple[GroupElement, ...]

    def __contains__(self, g: GroupElement) -> bool:
        return g in self.members


def _closure_with_parents(sup: SupportData, g: GroupElement):
    if g not in sup.odd:
        raise InputError(f"{g.format()} is not in the odd support")
    identity = g.group.identity()
    steps = sorted(sup.pm_odd) + [identity]
    parents: dict[GroupElement, tuple] = {g: None}
    frontier = [g]
    while frontier:
        q = frontier.pop()
        for a in steps:
            qa = q.compose(a)
            if qa not in sup.pm_even:
                continue
            for b in steps:
                qab = qa.compose(b)
                if qab in sup.pm_odd and qab not in parents:
                    parents[qab] = (q, a, b)
                    frontier.append(qab)
    return parents


def connection_closure(sup: SupportData, g: GroupElement) -> frozenset[GroupElement]:
    """All partial-product endpoints reachable from g (a subset of the
    inverse-closed odd support)."""
    return frozenset(_closure_with_parents(sup, g))


def are_connected(sup: SupportData, g: GroupElement, h: GroupElement) -> bool:
    """Whether h is connected to g (final product allowed to hit h or h^-1)."""
    if h not in sup.odd:
        raise InputError(f"{h.format()} is not in the odd support")
    reach = connection_closure(sup, g)
    return h in reach or h.inverse() in reach


def witness_sequence(sup: SupportData, g: GroupElement, h: GroupElement) -> tuple[GroupElement, ...]:
    """A concrete connection sequence from g to h, as group elements.

    The sequence starts at g and appends the length-two extensions found by
    the closure search; its final partial product lies in {h, h^-1}.
    """
    parents = _closure_with_parents(sup, g)
    if h in parents:
        target = h
    elif h.inverse() in parents:
        target = h.inverse()
    else:
        raise InputError(f"{h.format()} is not connected to {g.format()}")
    extensions = []
    node = target
    while parents[node] is not None:
        prev, a, b = parents[node]
        extensions.append((a, b))
        node = prev
    seq = [g]
    for a, b in reversed(extensions):
        seq.extend((a, b))
    return tuple(seq)


def validate_sequence(sup: SupportData, seq, g: GroupElement, h: GroupElement) -> bool:
    """Independent check that a sequence witnesses a connection from g to h."""
    if len(seq) % 2 == 0 or not seq:
        return False
    if seq[0] != g:
        return False
    identity = g.group.identity()
    allowed = sup.pm_odd | {identity}
    if any(x not in allowed for x in seq):
        return False
    partial = seq[0]
    for pos in range(1, len(seq)):
        partial = partial.compose(seq[pos])
        if pos % 2 == 1:
            if partial not in sup.pm_even:
                return False
        else:
            if partial not in sup.pm_odd:
                return False
    return partial in (h, h.inverse())


def connection_classes(sup: SupportData) -> list[ConnectionClass]:
    """Partition of the odd support into connection classes.

    The computed relation is rechecked to be reflexive, symmetric, and
    transitive on the support, and inverse-closed in the sense that a class
    containing h also contains h^-1 whenever h^-1 lies in the support.  Any
    defect raises EquivalenceFailure with a witness pair: it would
    contradict the equivalence property of the connection relation and
    therefore signals a bug rather than a property of the input.
    """
    classes: list[ConnectionClass] = []
    assigned: dict[GroupElement, GroupElement] = {}
    for g in sup.odd:
        if g in assigned:
            continue
        reach = connection_closure(sup, g)
        members = tuple(h for h in sup.odd if h in reach or h.inverse() in reach)
        for h in members:
            if h in assigned:
                raise EquivalenceFailure(
                    "closure reached an element already assigned to another class",
                    witness={"element": h.format(), "class": g.format()},
                )
            assigned[h] = g
        classes.append(ConnectionClass(representative=min(members), members=members))

    if len(assigned) != len(sup.odd):
        missing = [g.format() for g in sup.odd if g not in assigned]
        raise EquivalenceFailure("classes do not cover the support", witness=missing)

    for cls in classes:
        for h in cls.members:
            for k in cls.members:
                if not are_connected(sup, h, k):
                    raise EquivalenceFailure(
                        "pairwise connectivity recheck failed inside a class",
                        witness={"pair": (h.format(), k.format())},
                    )
            hinv = h.inverse()
            if hinv in sup.odd and hinv not in cls.members:
                raise EquivalenceFailure(
                    "class is not inverse-closed",
                    witness={"element": h.format()},
                )
        for other in classes:
            if other is cls:
                continue
            for h in cls.members:
                for k in other.members:
                    if are_connected(sup, h, k) or are_connected(sup, k, h):
                        raise EquivalenceFailure(
                            "elements of distinct classes are connected",
                            witness={"pair": (h.format(), k.format())},
                        )
    return classes

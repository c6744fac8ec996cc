"""Finitely generated abelian groups used as degree lattices for gradings.

A group is described by its list of cyclic moduli: 0 denotes an infinite
cyclic factor and m >= 2 a finite one.  Elements are integer coordinate
vectors in canonical form (each finite coordinate reduced to [0, m)), so
equality, hashing, and the lexicographic total order are all structural.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import InputError


@dataclass(frozen=True)
class AbelianGroup:
    moduli: tuple[int, ...]

    def __post_init__(self):
        moduli = tuple(int(m) for m in self.moduli)
        if any(m < 0 or m == 1 for m in moduli):
            raise InputError(f"moduli must be 0 or >= 2, got {list(moduli)}")
        object.__setattr__(self, "moduli", moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def element(self, coords) -> "GroupElement":
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise InputError(
                f"element has {len(coords)} coordinates, group has {self.rank} factors"
            )
        return GroupElement(self, coords)

    def parse(self, text: str) -> "GroupElement":
        """Parse the bracketed textual form, e.g. "[1,-1]"."""
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise InputError(f"malformed group element {text!r}")
        inner = text[1:-1].strip()
        parts = [p.strip() for p in inner.split(",")] if inner else []
        try:
            coords = [int(p) for p in parts]
        except ValueError:
            raise InputError(f"malformed group element {text!r}") from None
        return self.element(coords)

    def __repr__(self):
        return f"AbelianGroup({list(self.moduli)})"


@functools.total_ordering
@dataclass(frozen=True)
class GroupElement:
    group: AbelianGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        # Canonical form: finite coordinates reduced to [0, m).
        reduced = tuple(
            c % m if m else c for c, m in zip(self.coords, self.group.moduli)
        )
        object.__setattr__(self, "coords", reduced)

    def compose(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(
            self.group, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def inverse(self) -> "GroupElement":
        return GroupElement(self.group, tuple(-c for c in self.coords))

    def is_identity(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __mul__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.compose(other)

    def __lt__(self, other: "GroupElement") -> bool:
        self._check(other)
        return self.coords < other.coords

    def _check(self, other: "GroupElement"):
        if self.group != other.group:
            raise InputError("elements belong to different groups")

    def format(self) -> str:
        return "[" + ",".join(str(c) for c in self.coords) + "]"

    def __repr__(self):
        return self.format()

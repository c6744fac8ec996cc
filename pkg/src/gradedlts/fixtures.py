"""Verified example systems and constructors for building new ones.

Graded right Leibniz algebras give triple systems through the double
bracket {x, y, z} = [[x, y], z]; this module provides that construction,
direct sums, degree relabeling along group homomorphisms, and a set of
named built-in fixtures stored as data files in the command-line input
format (so loading them doubles as a format conformance check).

The built-in with a nonzero Lie-defect ideal was found by the exhaustive
search `search_nonlie_example` over small graded right Leibniz algebras;
the search ships here so the frozen fixture can be reproduced.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from itertools import product
from typing import Mapping

from .errors import InputError
from .groups import AbelianGroup, GroupElement
from .linalg import RationalField
from .triples import GradedTripleSystem, Violation

BUILTIN_NAMES = ("zero_3", "sl2_Z", "disjoint_sum", "nonlie_J", "trivial_grading_sl2")

_ZERO_PATTERN = re.compile(r"^zero_(\d+)$")


@dataclass(frozen=True)
class GradedLeibnizAlgebra:
    """A graded right Leibniz algebra given by binary structure constants."""

    field: object
    group: AbelianGroup
    degrees: tuple[GroupElement, ...]
    brackets: tuple  # canonical ((i, j), ((l, scalar), ...)) entries

    @classmethod
    def build(cls, field, group, degrees, brackets: Mapping[tuple[int, int], Mapping[int, object]]):
        degrees = tuple(degrees)
        n = len(degrees)
        zero = field.zero
        canon = []
        for (i, j) in sorted(brackets):
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"bracket index {(i, j)} out of range")
            entry = []
            for l in sorted(brackets[(i, j)]):
                value = field.element(brackets[(i, j)][l])
                if value != zero:
                    entry.append((l, value))
            if entry:
                canon.append(((i, j), tuple(entry)))
        return cls(field=field, group=group, degrees=degrees, brackets=tuple(canon))

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def bracket_table(self) -> dict:
        return {key: dict(entry) for key, entry in self.brackets}

    def bracket(self, x, y) -> list:
        zero = self.field.zero
        out = [zero] * self.dim
        for (i, j), entry in self.brackets:
            coef = x[i] * y[j]
            if coef != zero:
                for l, c in entry:
                    out[l] = out[l] + coef * c
        return out

    def verify(self) -> list[Violation]:
        """Right Leibniz identity on basis triples plus grading compatibility."""
        violations = []
        zero = self.field.zero
        n = self.dim
        table = self.bracket_table()
        for (i, j), entry in table.items():
            expected = self.degrees[i].compose(self.degrees[j])
            for l in entry:
                if self.degrees[l] != expected:
                    vec = [zero] * n
                    vec[l] = entry[l]
                    violations.append(Violation("grading", (i, j, l), tuple(vec)))
        unit = lambda i: [self.field.one if t == i else zero for t in range(n)]
        for y, z, x in product(range(n), repeat=3):
            lhs = self.bracket(self.bracket(unit(y), unit(z)), unit(x))
            rhs_a = self.bracket(self.bracket(unit(y), unit(x)), unit(z))
            rhs_b = self.bracket(unit(y), self.bracket(unit(z), unit(x)))
            residual = [a - b - c for a, b, c in zip(lhs, rhs_a, rhs_b)]
            if any(v != zero for v in residual):
                violations.append(Violation("right_leibniz", (y, z, x), tuple(residual)))
        return violations


def from_leibniz_algebra(algebra: GradedLeibnizAlgebra) -> GradedTripleSystem:
    """Double-bracket triple system {x, y, z} = [[x, y], z] of a Leibniz algebra.

    The construction always satisfies the triple-system identities when the
    algebra satisfies the right Leibniz identity; the caller should still
    run `verify_axioms` (a failure indicates a corrupt algebra table).
    """
    violations = algebra.verify()
    if violations:
        raise InputError(
            f"algebra fails its own invariants ({len(violations)} violations); "
            "refusing to build the triple system"
        )
    n = algebra.dim
    zero = algebra.field.zero
    table = algebra.bracket_table()
    products: dict[tuple[int, int, int], dict[int, object]] = {}
    for (i, j), inner in table.items():
        for k in range(n):
            acc: dict[int, object] = {}
            for m, c in inner.items():
                for l, c2 in table.get((m, k), {}).items():
                    acc[l] = acc.get(l, zero) + c * c2
            acc = {l: v for l, v in acc.items() if v != zero}
            if acc:
                products[(i, j, k)] = acc
    return GradedTripleSystem(algebra.field, algebra.group, algebra.degrees, products)


def direct_sum(systems) -> GradedTripleSystem:
    """Block-diagonal sum of triple systems over a common group and field."""
    systems = list(systems)
    if not systems:
        raise InputError("direct sum needs at least one summand")
    field = systems[0].field
    group = systems[0].group
    for s in systems[1:]:
        if s.field != field or s.group != group:
            raise InputError("direct sum requires a common field and group")
    degrees = []
    products: dict[tuple[int, int, int], dict[int, object]] = {}
    offset = 0
    for s in systems:
        degrees.extend(s.degrees)
        for (i, j, k), entry in s.nonzero_triples():
            products[(i + offset, j + offset, k + offset)] = {
                l + offset: c for l, c in entry.items()
            }
        offset += s.dim
    return GradedTripleSystem(field, group, degrees, products)


def relabel_degrees(system: GradedTripleSystem, target: AbelianGroup, image) -> GradedTripleSystem:
    """Push the grading through a group homomorphism.

    `image` maps each generator coordinate of the source group to a target
    element, as a matrix of integers (one row per source factor).  Any
    homomorphism preserves grading compatibility, so the result is graded
    by the target group with the same structure constants.
    """
    image = [list(map(int, row)) for row in image]
    if len(image) != system.group.rank:
        raise InputError("homomorphism matrix must have one row per source factor")
    for row in image:
        if len(row) != target.rank:
            raise InputError("homomorphism matrix must have one column per target factor")

    def push(g: GroupElement) -> GroupElement:
        coords = [0] * target.rank
        for c, row in zip(g.coords, image):
            for t, mult in enumerate(row):
                coords[t] += c * mult
        return target.element(coords)

    degrees = [push(d) for d in system.degrees]
    products = {key: entry for key, entry in system.nonzero_triples()}
    return GradedTripleSystem(system.field, target, degrees, products)


def sl2_algebra(field=None, degree_scale: int = 1) -> GradedLeibnizAlgebra:
    """The three-dimensional simple Lie algebra with a diagonal grading.

    Basis (e, h, f) with [h, e] = 2e, [h, f] = -2f, [e, f] = h, graded over
    the integers with degrees (s, 0, -s).
    """
    field = field or RationalField()
    group = AbelianGroup((0,))
    s = degree_scale
    degrees = [group.element([s]), group.element([0]), group.element([-s])]
    brackets = {
        (1, 0): {0: 2},
        (0, 1): {0: -2},
        (1, 2): {2: -2},
        (2, 1): {2: 2},
        (0, 2): {1: 1},
        (2, 0): {1: -1},
    }
    return GradedLeibnizAlgebra.build(field, group, degrees, brackets)


def nonlie_algebra(field=None) -> GradedLeibnizAlgebra:
    """The frozen non-Lie right Leibniz algebra found by `search_nonlie_example`.

    Basis (a, b, c) with [a, a] = b and [b, a] = c, degrees (1, 2, 3); its
    double-bracket triple system has the single product {a, a, a} = c, so
    the skew combination {a,a,a} - {a,a,a} + {a,a,a} = c generates a
    one-dimensional nonzero defect ideal.
    """
    field = field or RationalField()
    group = AbelianGroup((0,))
    degrees = [group.element([1]), group.element([2]), group.element([3])]
    brackets = {(0, 0): {1: 1}, (1, 0): {2: 1}}
    return GradedLeibnizAlgebra.build(field, group, degrees, brackets)


def search_nonlie_example(coefficients=(0, 1, -1)):
    """Exhaustive search for a graded right Leibniz algebra with nonzero defect.

    Scans three-dimensional algebras with degrees (1, 2, 3) over the
    rationals.  The grading leaves three free structure cells:
    [a,a] -> b, [a,b] -> c, and [b,a] -> c.  Returns the first coefficient
    assignment (in the given deterministic order) whose algebra satisfies
    the right Leibniz identity and whose double-bracket triple system has a
    nonzero Lie-defect ideal.
    """
    field = RationalField()
    group = AbelianGroup((0,))
    degrees = [group.element([1]), group.element([2]), group.element([3])]
    for alpha, beta, gamma in product(coefficients, repeat=3):
        brackets = {}
        if alpha:
            brackets[(0, 0)] = {1: alpha}
        if beta:
            brackets[(0, 1)] = {2: beta}
        if gamma:
            brackets[(1, 0)] = {2: gamma}
        algebra = GradedLeibnizAlgebra.build(field, group, degrees, brackets)
        if algebra.verify():
            continue
        system = from_leibniz_algebra(algebra)
        if not system.lie_defect_ideal().is_zero():
            return algebra, system
    raise RuntimeError("search space exhausted without a non-Lie example")


def zero_system(n: int, field=None) -> GradedTripleSystem:
    """The n-dimensional system with identically zero product and trivial grading."""
    field = field or RationalField()
    group = AbelianGroup((0,))
    degrees = [group.identity()] * n
    return GradedTripleSystem(field, group, degrees, {})


def builtin(name: str) -> GradedTripleSystem:
    """Load a named verified fixture.

    Names: zero_<n> (trivially graded zero system), sl2_Z, disjoint_sum,
    nonlie_J, trivial_grading_sl2.  Fixtures with a data file are parsed
    from the packaged file; zero_<n> for other n is synthesized.
    """
    from .systemfile import loads_system

    match = _ZERO_PATTERN.match(name)
    if match and name != "zero_3":
        return zero_system(int(match.group(1)))
    if match or name in BUILTIN_NAMES:
        data = resources.files("gradedlts").joinpath(f"fixture_data/{name}.json")
        try:
            text = data.read_text(encoding="utf-8")
        except FileNotFoundError:
            raise InputError(f"unknown builtin fixture {name!r}") from None
        return loads_system(text)
    raise InputError(f"unknown builtin fixture {name!r}")


def fixture_text(name: str) -> str:
    """Raw file contents of a packaged fixture (for CLI round-trip tests)."""
    if name not in BUILTIN_NAMES:
        raise InputError(f"unknown builtin fixture {name!r}")
    return resources.files("gradedlts").joinpath(f"fixture_data/{name}.json").read_text(
        encoding="utf-8"
    )

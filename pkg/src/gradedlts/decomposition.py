"""Ideal decomposition of a graded Leibniz triple system along connection classes.

Each connection class [g] of the odd support yields a class ideal

    I_[g] = core + vertex,

where the vertex part is the sum of the homogeneous components with degree
in the class and the core part is the span of all products
{E_h, E_k, E_{(hk)^-1}} with h in the class and k in the class or the
identity.  The library certifies, exactly and on every run:

  * each class ideal passes the ideal predicate (raising
    IdealCertificateFailure with a witness otherwise),
  * a deterministic complement U of the span of all support products inside
    the identity component satisfies U + sum of ideals = the whole system,
  * all three cross-class product families vanish for distinct classes,
  * when the identity component is tight and the annihilator is zero, the
    ideals meet pairwise in zero and their dimensions add up.

A separate report evaluates the structural vanishing and degree-confinement
laws that drive those facts, instance by instance, and a last pass emits
simplicity obstructions.  The obstruction search is deliberately
incomplete: it never claims a system is simple, only that no obstruction
was found.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field

from .connections import ConnectionClass, SupportData, are_connected, connection_classes
from .embedding import StandardEmbedding
from .errors import DecompositionFailure, IdealCertificateFailure
from .groups import GroupElement
from .linalg import Subspace, complete_complement
from .triples import GradedTripleSystem


@dataclass(frozen=True)
class ClassIdeal:
    cls: ConnectionClass
    core: Subspace       # inside the identity component
    vertex: Subspace     # sum of the class components
    total: Subspace      # core + vertex, certified ideal


@dataclass
class Obstruction:
    kind: str
    detail: str
    witness: dict | None = None


@dataclass
class LemmaCheck:
    name: str
    instances: int = 0
    nonvacuous: int = 0
    failures: list = dataclass_field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures


@dataclass
class DecompositionReport:
    supports: SupportData
    u: Subspace
    span_products: Subspace
    ideals: list[ClassIdeal]
    orthogonality: list[dict]
    all_orthogonal: bool
    spans: bool
    tight: bool
    annihilator_dim: int
    pairwise_disjoint: bool | None
    direct_sum: bool | None
    obstructions: list[Obstruction]
    seed: int


def class_core_span(system: GradedTripleSystem, cls: ConnectionClass) -> Subspace:
    """Span of the products {E_h, E_k, E_{(hk)^-1}}, h in [g], k in [g] or 1.

    The result lies inside the identity component whenever the grading is
    valid, because the three degrees multiply to the identity.
    """
    members = set(cls.members)
    identity = system.group.identity()
    vectors = []
    for p in range(system.dim):
        dp = system.degrees[p]
        if dp not in members:
            continue
        for q in range(system.dim):
            dq = system.degrees[q]
            if dq not in members and dq != identity:
                continue
            target = dp.compose(dq).inverse()
            for r in range(system.dim):
                if system.degrees[r] != target:
                    continue
                entry = system.basis_product(p, q, r)
                if entry:
                    vec = [system.field.zero] * system.dim
                    for l, c in entry.items():
                        vec[l] = c
                    vectors.append(vec)
    return Subspace(system.field, system.dim, vectors)


def class_ideal(system: GradedTripleSystem, cls: ConnectionClass) -> ClassIdeal:
    """Assemble and certify the ideal attached to a connection class.

    Raises IdealCertificateFailure with a witness triple if the assembled
    subspace fails the ideal predicate; class subspaces of a valid graded
    system are always ideals, so that outcome signals a corrupt input or a
    bug and is surfaced, never suppressed.
    """
    core = class_core_span(system, cls)
    members = set(cls.members)
    vertex_vectors = []
    for i, d in enumerate(system.degrees):
        if d in members:
            v = [system.field.zero] * system.dim
            v[i] = system.field.one
            vertex_vectors.append(v)
    vertex = Subspace(system.field, system.dim, vertex_vectors)
    if not core.intersect(vertex).is_zero():
        raise IdealCertificateFailure(
            "core and vertex parts of a class ideal are not independent",
            witness={"class": cls.representative.format()},
        )
    total = core.sum(vertex)
    witness = system.ideal_witness(total)
    if witness is not None:
        raise IdealCertificateFailure(
            "class ideal fails the ideal predicate",
            witness={
                "class": cls.representative.format(),
                "vector": [system.field.format(x) for x in witness["vector"]],
                "slot": witness["slot"],
                "pair": (witness["j"], witness["k"]),
            },
        )
    if not system.is_subsystem(total):
        raise IdealCertificateFailure(
            "class ideal fails the subsystem predicate",
            witness={"class": cls.representative.format()},
        )
    return ClassIdeal(cls=cls, core=core, vertex=vertex, total=total)


def support_product_span(system: GradedTripleSystem) -> Subspace:
    """Span of all {E_g, E_h, E_{(gh)^-1}} over the whole odd support."""
    identity = system.group.identity()
    vectors = []
    for p in range(system.dim):
        dp = system.degrees[p]
        if dp.is_identity():
            continue
        for q in range(system.dim):
            dq = system.degrees[q]
            # second degree ranges over the support plus the identity,
            # which is every basis degree
            target = dp.compose(dq).inverse()
            for r in range(system.dim):
                if system.degrees[r] != target:
                    continue
                entry = system.basis_product(p, q, r)
                if entry:
                    vec = [system.field.zero] * system.dim
                    for l, c in entry.items():
                        vec[l] = c
                    vectors.append(vec)
    return Subspace(system.field, system.dim, vectors)


def _cross_products_vanish(system, left: Subspace, right: Subspace):
    """Exact check of the three product families between two subspaces."""
    zero = system.field.zero
    checks = {"left_middle": True, "left_right": True, "middle_right": True}
    for va in left.basis.rows:
        for vb in right.basis.rows:
            for m in range(system.dim):
                # {I_a, E, I_b}
                w = system.triple_product(va, _unit(system, m), vb)
                if any(x != zero for x in w):
                    checks["left_right"] = False
                # {I_a, I_b, E}
                w = system.triple_product(va, vb, _unit(system, m))
                if any(x != zero for x in w):
                    checks["left_middle"] = False
                # {E, I_a, I_b}
                w = system.triple_product(_unit(system, m), va, vb)
                if any(x != zero for x in w):
                    checks["middle_right"] = False
    return checks


def _unit(system, i):
    zero, one = system.field.zero, system.field.one
    return tuple(one if t == i else zero for t in range(system.dim))


def decompose(
    system: GradedTripleSystem,
    emb: StandardEmbedding,
    seed: int = 0,
    probes: int = 16,
) -> DecompositionReport:
    """Full certified decomposition report for a verified system."""
    sup = SupportData.from_system(system, emb)
    classes = connection_classes(sup)
    ideals = [class_ideal(system, cls) for cls in classes]

    span_products = support_product_span(system)
    identity_comp = system.identity_component()
    u = complete_complement(span_products, identity_comp)
    tight = span_products == identity_comp

    total = u
    for ideal in ideals:
        total = total.sum(ideal.total)
    spans = total == Subspace.full(system.field, system.dim)
    if not spans:
        raise DecompositionFailure(
            "complement plus class ideals do not span the system",
            witness={"dim_reached": total.dim, "dim_expected": system.dim},
        )

    orthogonality = []
    all_orthogonal = True
    for a in range(len(ideals)):
        for b in range(a + 1, len(ideals)):
            checks = _cross_products_vanish(system, ideals[a].total, ideals[b].total)
            ok = all(checks.values())
            all_orthogonal = all_orthogonal and ok
            orthogonality.append(
                {
                    "classes": (
                        ideals[a].cls.representative.format(),
                        ideals[b].cls.representative.format(),
                    ),
                    "vanish": ok,
                    "families": checks,
                }
            )

    ann = system.annihilator()

    pairwise_disjoint: bool | None = None
    if len(ideals) >= 2:
        pairwise_disjoint = True
        for a in range(len(ideals)):
            for b in range(a + 1, len(ideals)):
                if not ideals[a].total.intersect(ideals[b].total).is_zero():
                    pairwise_disjoint = False

    direct_sum: bool | None = None
    if tight and ann.is_zero():
        direct_sum = (
            sum(i.total.dim for i in ideals) == system.dim
            and u.is_zero()
            and (pairwise_disjoint is None or pairwise_disjoint)
        )

    report = DecompositionReport(
        supports=sup,
        u=u,
        span_products=span_products,
        ideals=ideals,
        orthogonality=orthogonality,
        all_orthogonal=all_orthogonal,
        spans=spans,
        tight=tight,
        annihilator_dim=ann.dim,
        pairwise_disjoint=pairwise_disjoint,
        direct_sum=direct_sum,
        obstructions=[],
        seed=seed,
    )
    report.obstructions = simplicity_obstructions(system, report, seed=seed, probes=probes)
    return report


def simplicity_obstructions(
    system: GradedTripleSystem,
    report: DecompositionReport,
    seed: int = 0,
    probes: int = 16,
) -> list[Obstruction]:
    """Contrapositive simplicity certificates.

    A simple system must have a nonzero product, only the zero ideal, the
    defect ideal, and the whole system as ideals, a fully connected support,
    and a tight identity component.  Each failed requirement is emitted as
    an obstruction with a witness.  A random sample of ideal closures of
    single lines (seeded, deterministic) looks for extra proper ideals.
    The search never asserts simplicity.
    """
    obstructions: list[Obstruction] = []
    zero_space = Subspace.zero(system.field, system.dim)
    full_space = Subspace.full(system.field, system.dim)
    defect = system.lie_defect_ideal()

    if not any(True for _ in system.nonzero_triples()):
        obstructions.append(
            Obstruction(kind="zero_product", detail="the triple product is identically zero")
        )

    for ideal in report.ideals:
        if ideal.total not in (zero_space, full_space) and ideal.total != defect:
            obstructions.append(
                Obstruction(
                    kind="ideal_outside_allowed_set",
                    detail="a class ideal is a proper nontrivial ideal",
                    witness={
                        "class": ideal.cls.representative.format(),
                        "dim": ideal.total.dim,
                    },
                )
            )

    if len(report.ideals) > 1:
        obstructions.append(
            Obstruction(
                kind="support_not_connected",
                detail="the odd support splits into more than one connection class",
                witness={"classes": len(report.ideals)},
            )
        )
    if not report.tight:
        obstructions.append(
            Obstruction(
                kind="identity_component_not_tight",
                detail="the identity component is not spanned by support products",
                witness={
                    "identity_dim": system.identity_component().dim,
                    "product_span_dim": report.span_products.dim,
                },
            )
        )

    rng = random.Random(seed)
    probe_vectors = [list(_unit(system, i)) for i in range(system.dim)]
    for _ in range(probes):
        v = _random_vector(system, rng)
        if v is not None:
            probe_vectors.append(v)
    for idx, v in enumerate(probe_vectors):
        line = Subspace(system.field, system.dim, [v])
        if line.is_zero():
            continue
        closure = system.ideal_closure(line)
        if closure not in (zero_space, full_space) and closure != defect:
            obstructions.append(
                Obstruction(
                    kind="proper_ideal_found",
                    detail="the ideal closure of a probed line is proper and nontrivial",
                    witness={
                        "probe": idx,
                        "vector": [system.field.format(x) for x in v],
                        "closure_dim": closure.dim,
                    },
                )
            )
    return obstructions


def _random_vector(system, rng):
    if system.dim == 0:
        return None
    if system.field.kind == "prime":
        coords = [system.field.element(rng.randrange(system.field.p)) for _ in range(system.dim)]
    else:
        coords = [system.field.element(rng.randint(-3, 3)) for _ in range(system.dim)]
    if all(x == system.field.zero for x in coords):
        coords[rng.randrange(system.dim)] = system.field.one
    return coords


# -- structural lemma suite ------------------------------------------------------


def verify_structure_lemmas(
    system: GradedTripleSystem,
    emb: StandardEmbedding,
    classes: list[ConnectionClass],
    sup: SupportData | None = None,
) -> list[LemmaCheck]:
    """Instance-by-instance evaluation of the structural laws.

    Three implication laws relate supports to connectivity, two vanishing
    laws kill products across disconnected degrees, and two confinement
    laws pin the degrees of nonzero products to a single class.  Every
    instance is evaluated exactly; failures carry witnesses.  The report is
    informational (the command line escalates failures to a nonzero exit).
    """
    if sup is None:
        sup = SupportData.from_system(system, emb)
    checks = [
        _lemma_pair_product_even(sup),
        _lemma_first_in_even(sup),
        _lemma_both_in_even(sup),
        _lemma_disconnected_brackets_vanish(system, emb, sup),
        _lemma_disconnected_inverse_triple_vanishes(system, sup),
        _lemma_products_confined_to_class(system, classes),
        _lemma_core_products_confined(system, classes),
        _lemma_core_disconnected_vanish(system, emb, classes, sup),
    ]
    return checks


def _lemma_pair_product_even(sup: SupportData) -> LemmaCheck:
    # g, h in the support with g h in the inverse-closed even support or 1
    # forces h connected to g.
    check = LemmaCheck("connected_when_pair_product_in_even_support")
    for g in sup.odd:
        for h in sup.odd:
            gh = g.compose(h)
            check.instances += 1
            if gh in sup.pm_even or gh.is_identity():
                check.nonvacuous += 1
                if not are_connected(sup, g, h):
                    check.failures.append({"pair": (g.format(), h.format())})
    return check


def _lemma_first_in_even(sup: SupportData) -> LemmaCheck:
    check = LemmaCheck("connected_when_first_in_even_support")
    for g in sup.odd:
        for h in sup.odd:
            check.instances += 1
            gh = g.compose(h)
            if g in sup.pm_even and (gh in sup.pm_odd or gh.is_identity()):
                check.nonvacuous += 1
                if not are_connected(sup, g, h):
                    check.failures.append({"pair": (g.format(), h.format())})
    return check


def _lemma_both_in_even(sup: SupportData) -> LemmaCheck:
    check = LemmaCheck("connected_when_both_in_even_support")
    for g in sup.odd:
        for h in sup.odd:
            check.instances += 1
            gh = g.compose(h)
            if (
                g in sup.pm_even
                and h in sup.pm_even
                and (gh in sup.pm_even or gh.is_identity())
            ):
                check.nonvacuous += 1
                if not are_connected(sup, g, h):
                    check.failures.append({"pair": (g.format(), h.format())})
    return check


def _lemma_disconnected_brackets_vanish(system, emb, sup) -> LemmaCheck:
    # Disconnected support degrees bracket to zero in the embedding, at all
    # three levels: odd with odd, even with odd, even with even.
    check = LemmaCheck("disconnected_brackets_vanish")
    zero = system.field.zero
    for g in sup.odd:
        for hbar in sup.odd:
            if are_connected(sup, g, hbar):
                continue
            check.instances += 1
            check.nonvacuous += 1
            eg = system.homogeneous_component(g)
            eh = system.homogeneous_component(hbar)
            cg = emb.component(g)
            ch = emb.component(hbar)
            for x in eg.basis.rows:
                for y in eh.basis.rows:
                    if any(v != zero for v in emb.bracket_odd_odd(x, y)):
                        check.failures.append(
                            {"pair": (g.format(), hbar.format()), "level": "odd_odd"}
                        )
            for t in cg.basis.rows:
                for y in eh.basis.rows:
                    if any(v != zero for v in emb.bracket_even_odd(t, y)):
                        check.failures.append(
                            {"pair": (g.format(), hbar.format()), "level": "even_odd"}
                        )
            for t in cg.basis.rows:
                for s in ch.basis.rows:
                    if any(v != zero for v in emb.bracket_even_even(t, s)):
                        check.failures.append(
                            {"pair": (g.format(), hbar.format()), "level": "even_even"}
                        )
    return check


def _lemma_disconnected_inverse_triple_vanishes(system, sup) -> LemmaCheck:
    check = LemmaCheck("disconnected_inverse_triple_vanishes")
    zero = system.field.zero
    for g in sup.odd:
        for hbar in sup.odd:
            if are_connected(sup, g, hbar):
                continue
            check.instances += 1
            eg = system.homogeneous_component(g)
            eginv = system.homogeneous_component(g.inverse())
            eh = system.homogeneous_component(hbar)
            if not eginv.is_zero():
                check.nonvacuous += 1
            for x in eg.basis.rows:
                for y in eginv.basis.rows:
                    for z in eh.basis.rows:
                        if any(v != zero for v in system.triple_product(x, y, z)):
                            check.failures.append(
                                {"pair": (g.format(), hbar.format())}
                            )
    return check


def _lemma_products_confined_to_class(system, classes) -> LemmaCheck:
    # A nonzero product with one slot of degree inside a class forces the
    # other degrees (and the product degree) into the class or the identity.
    check = LemmaCheck("nonzero_products_confined_to_class")
    zero = system.field.zero
    degree_sets = [(set(cls.members), cls) for cls in classes]
    for (p, q, r), entry in system.nonzero_triples():
        if not entry:
            continue
        dp, dq, dr = system.degrees[p], system.degrees[q], system.degrees[r]
        total = dp.compose(dq).compose(dr)
        for members, cls in degree_sets:
            for slot_degree, others in (
                (dp, (dq, dr)),
                (dq, (dp, dr)),
                (dr, (dp, dq)),
            ):
                if slot_degree in members:
                    check.instances += 1
                    check.nonvacuous += 1
                    for d in (*others, total):
                        if not d.is_identity() and d not in members:
                            check.failures.append(
                                {
                                    "triple": (p, q, r),
                                    "class": cls.representative.format(),
                                    "degree": d.format(),
                                }
                            )
    return check


def _core_product_sources(system, cls):
    """Basis products {b_p, b_q, b_r} whose degrees qualify as core products."""
    members = set(cls.members)
    identity = system.group.identity()
    sources = []
    for p in range(system.dim):
        dp = system.degrees[p]
        if dp not in members:
            continue
        for q in range(system.dim):
            dq = system.degrees[q]
            if dq not in members and dq != identity:
                continue
            for r in range(system.dim):
                dr = system.degrees[r]
                if dr not in members:
                    continue
                if not dp.compose(dq).compose(dr).is_identity():
                    continue
                entry = system.basis_product(p, q, r)
                if entry:
                    vec = [system.field.zero] * system.dim
                    for l, c in entry.items():
                        vec[l] = c
                    sources.append(((p, q, r), vec))
    return sources


def _lemma_core_products_confined(system, classes) -> LemmaCheck:
    check = LemmaCheck("core_products_confined_to_class")
    zero = system.field.zero
    for cls in classes:
        members = set(cls.members)
        for (p, q, r), u in _core_product_sources(system, cls):
            for jq in range(system.dim):
                for jr in range(system.dim):
                    dl = system.degrees[jq]
                    dm = system.degrees[jr]
                    for slot in (0, 1, 2):
                        w = system.product_with_basis(u, slot, jq, jr)
                        if any(x != zero for x in w):
                            check.instances += 1
                            check.nonvacuous += 1
                            for d in (dl, dm, dl.compose(dm)):
                                if not d.is_identity() and d not in members:
                                    check.failures.append(
                                        {
                                            "core_triple": (p, q, r),
                                            "outer_pair": (jq, jr),
                                            "slot": slot,
                                            "degree": d.format(),
                                        }
                                    )
    return check


def _lemma_core_disconnected_vanish(system, emb, classes, sup) -> LemmaCheck:
    # Core products of one class annihilate everything carried by degrees
    # outside the class: their tensors fall into the null space, the twisted
    # right action of the outside even component kills them, and triple
    # products through the identity component vanish.
    check = LemmaCheck("core_disconnected_products_vanish")
    zero = system.field.zero
    identity_comp = system.identity_component()
    for cls in classes:
        members = set(cls.members)
        outside = [h for h in sup.odd if h not in members]
        sources = _core_product_sources(system, cls)
        for hbar in outside:
            eh = system.homogeneous_component(hbar)
            ch = emb.component(hbar)
            for (p, q, r), u in sources:
                check.instances += 1
                check.nonvacuous += 1
                for y in eh.basis.rows:
                    if any(v != zero for v in emb.bracket_odd_odd(u, y)):
                        check.failures.append(
                            {
                                "core_triple": (p, q, r),
                                "outside": hbar.format(),
                                "level": "tensor",
                            }
                        )
                for t in ch.basis.rows:
                    if any(v != zero for v in emb.bracket_odd_even(u, t)):
                        check.failures.append(
                            {
                                "core_triple": (p, q, r),
                                "outside": hbar.format(),
                                "level": "even_action",
                            }
                        )
                for e1 in identity_comp.basis.rows:
                    for y in eh.basis.rows:
                        if any(
                            v != zero for v in system.triple_product(u, e1, y)
                        ):
                            check.failures.append(
                                {
                                    "core_triple": (p, q, r),
                                    "outside": hbar.format(),
                                    "level": "identity_triple",
                                }
                            )
    return check

"""Class ideals, the certified decomposition, lemma suite, and obstructions."""

from fractions import Fraction

import pytest

import gradedlts as g
from conftest import oracle_triple, random_variant

Q = g.RationalField()


def pipeline(name):
    system = g.builtin(name)
    emb = g.build_embedding(system)
    sup = g.SupportData.from_system(system, emb)
    classes = g.connection_classes(sup)
    return system, emb, sup, classes


@pytest.fixture(scope="module")
def sl2_pipe():
    return pipeline("sl2_Z")


@pytest.fixture(scope="module")
def disjoint_pipe():
    return pipeline("disjoint_sum")


def test_core_span_of_sl2_is_the_cartan_line(sl2_pipe):
    system, emb, sup, classes = sl2_pipe
    core = g.class_core_span(system, classes[0])
    # qualifying products: {e, h, f} = -2h and {f, h, e} = -2h span the
    # degree-zero line; {e, f, h}-type products vanish
    assert core == g.span(Q, 3, [[0, 1, 0]])


def test_core_span_of_disjoint_sum_blocks(disjoint_pipe):
    system, emb, sup, classes = disjoint_pipe
    first = g.class_core_span(system, classes[0])
    second = g.class_core_span(system, classes[1])
    assert first == g.span(Q, 6, [[0, 1, 0, 0, 0, 0]])
    assert second == g.span(Q, 6, [[0, 0, 0, 0, 1, 0]])


def test_core_span_lands_in_identity_component(disjoint_pipe):
    system, emb, sup, classes = disjoint_pipe
    identity_comp = system.identity_component()
    for cls in classes:
        core = g.class_core_span(system, cls)
        assert identity_comp.contains_subspace(core)


def test_class_ideal_of_sl2_is_everything(sl2_pipe):
    system, emb, sup, classes = sl2_pipe
    ideal = g.class_ideal(system, classes[0])
    assert ideal.total == g.Subspace.full(Q, 3)
    assert ideal.core.dim == 1 and ideal.vertex.dim == 2


def test_class_ideals_of_disjoint_sum_equal_the_summands(disjoint_pipe):
    system, emb, sup, classes = disjoint_pipe
    ideals = [g.class_ideal(system, cls) for cls in classes]
    first_block = g.span(Q, 6, [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]])
    second_block = g.span(Q, 6, [[0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]])
    assert ideals[0].total == first_block
    assert ideals[1].total == second_block


def test_class_ideals_pass_predicates(disjoint_pipe):
    system, emb, sup, classes = disjoint_pipe
    for cls in classes:
        ideal = g.class_ideal(system, cls)
        assert system.is_ideal(ideal.total)
        assert system.is_subsystem(ideal.total)


def test_decompose_zero_system():
    system, emb, sup, classes = pipeline("zero_3")
    report = g.decompose(system, emb)
    assert report.ideals == []
    assert report.u == g.Subspace.full(Q, 3)
    assert report.tight is False
    assert report.direct_sum is None
    assert any(o.kind == "zero_product" for o in report.obstructions)


def test_decompose_sl2(sl2_pipe):
    system, emb, sup, classes = sl2_pipe
    report = g.decompose(system, emb)
    assert report.u.is_zero()
    assert len(report.ideals) == 1
    assert report.ideals[0].total == g.Subspace.full(Q, 3)
    assert report.tight is True
    assert report.annihilator_dim == 0
    assert report.direct_sum is True
    assert report.obstructions == []


def test_decompose_disjoint_sum(disjoint_pipe):
    system, emb, sup, classes = disjoint_pipe
    report = g.decompose(system, emb)
    assert report.u.is_zero()
    assert len(report.ideals) == 2
    assert report.all_orthogonal is True
    assert report.tight is True
    assert report.annihilator_dim == 0
    assert report.pairwise_disjoint is True
    assert report.direct_sum is True
    assert sum(i.total.dim for i in report.ideals) == 6


def test_cross_class_products_vanish_by_direct_evaluation(disjoint_pipe):
    system, emb, sup, classes = disjoint_pipe
    report = g.decompose(system, emb)
    first, second = (ideal.total for ideal in report.ideals)
    n = system.dim
    units = [tuple(Fraction(1) if t == m else Fraction(0) for t in range(n)) for m in range(n)]
    for va in first.basis.rows:
        for vb in second.basis.rows:
            for u in units:
                for args in ((va, u, vb), (va, vb, u), (u, va, vb)):
                    assert all(x == 0 for x in oracle_triple(system, *args))


def test_complement_recorded_and_spans(disjoint_pipe):
    system, emb, sup, classes = disjoint_pipe
    report = g.decompose(system, emb)
    total = report.u
    for ideal in report.ideals:
        total = total.sum(ideal.total)
    assert total == g.Subspace.full(Q, system.dim)
    assert report.spans is True


def test_trivially_graded_sl2_is_all_complement():
    system, emb, sup, classes = pipeline("trivial_grading_sl2")
    report = g.decompose(system, emb)
    assert report.ideals == []
    assert report.u == g.Subspace.full(Q, 3)
    assert report.tight is False
    assert any(o.kind == "identity_component_not_tight" for o in report.obstructions)


def test_obstructions_for_disjoint_sum(disjoint_pipe):
    system, emb, sup, classes = disjoint_pipe
    report = g.decompose(system, emb)
    kinds = {o.kind for o in report.obstructions}
    assert "ideal_outside_allowed_set" in kinds
    assert "support_not_connected" in kinds
    # probed block lines close up to the proper block ideal
    assert "proper_ideal_found" in kinds


def test_obstruction_probes_are_seed_deterministic(disjoint_pipe):
    system, emb, sup, classes = disjoint_pipe
    a = g.decompose(system, emb, seed=3)
    b = g.decompose(system, emb, seed=3)
    assert [(o.kind, o.detail, o.witness) for o in a.obstructions] == [
        (o.kind, o.detail, o.witness) for o in b.obstructions
    ]


def test_no_obstructions_for_sl2_with_any_seed(sl2_pipe):
    system, emb, sup, classes = sl2_pipe
    for seed in (0, 1, 17):
        assert g.decompose(system, emb, seed=seed).obstructions == []


def test_lemma_suite_vacuous_for_single_class(sl2_pipe):
    system, emb, sup, classes = sl2_pipe
    checks = {c.name: c for c in g.verify_structure_lemmas(system, emb, classes, sup)}
    assert all(c.holds for c in checks.values())
    assert checks["disconnected_brackets_vanish"].instances == 0
    assert checks["disconnected_inverse_triple_vanishes"].instances == 0
    assert checks["core_disconnected_products_vanish"].instances == 0


def test_lemma_suite_on_disjoint_sum(disjoint_pipe):
    system, emb, sup, classes = disjoint_pipe
    checks = g.verify_structure_lemmas(system, emb, classes, sup)
    assert all(c.holds for c in checks)
    for check in checks:
        assert check.nonvacuous >= 1, check.name


def test_randomized_variants_have_certified_ideals():
    for seed in range(6):
        system = random_variant(seed)
        assert system.verify_grading() == []
        emb = g.build_embedding(system)
        sup = g.SupportData.from_system(system, emb)
        for cls in g.connection_classes(sup):
            ideal = g.class_ideal(system, cls)
            assert system.is_ideal(ideal.total), seed

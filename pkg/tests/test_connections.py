"""Connection relation: closures, classes, witnesses, partition certificates."""

import pytest

import gradedlts as g
from gradedlts.connections import validate_sequence
from gradedlts.errors import InputError


def supports_for(name):
    system = g.builtin(name)
    emb = g.build_embedding(system)
    return system, g.SupportData.from_system(system, emb)


@pytest.fixture(scope="module")
def sl2_sup():
    return supports_for("sl2_Z")[1]


@pytest.fixture(scope="module")
def disjoint_sup():
    return supports_for("disjoint_sum")[1]


def test_element_reaches_itself(sl2_sup):
    for grp in sl2_sup.odd:
        assert grp in g.connection_closure(sl2_sup, grp)


def test_closure_stays_in_inverse_closed_support(disjoint_sup):
    for grp in disjoint_sup.odd:
        assert g.connection_closure(disjoint_sup, grp) <= disjoint_sup.pm_odd


def test_sl2_opposite_degrees_connected(sl2_sup):
    group = g.AbelianGroup((0,))
    one = group.element([1])
    minus = group.element([-1])
    # the singleton sequence (g) ends at g, and -1 = inverse(1) is caught by
    # the final {h, h^-1} clause
    assert g.are_connected(sl2_sup, one, minus)
    assert g.are_connected(sl2_sup, minus, one)


def test_disjoint_blocks_not_connected(disjoint_sup):
    group = g.AbelianGroup((0, 0))
    a = group.element([1, 0])
    b = group.element([0, 1])
    assert not g.are_connected(disjoint_sup, a, b)
    assert not g.are_connected(disjoint_sup, b, a)


def test_reflexivity(disjoint_sup):
    for grp in disjoint_sup.odd:
        assert g.are_connected(disjoint_sup, grp, grp)


def test_class_counts():
    assert len(g.connection_classes(supports_for("sl2_Z")[1])) == 1
    assert len(g.connection_classes(supports_for("disjoint_sum")[1])) == 2
    assert g.connection_classes(supports_for("zero_3")[1]) == []


def test_sl2_single_class_content(sl2_sup):
    (cls,) = g.connection_classes(sl2_sup)
    assert [m.format() for m in cls.members] == ["[-1]", "[1]"]
    assert cls.representative.format() == "[-1]"


def test_disjoint_classes_split_by_block(disjoint_sup):
    classes = g.connection_classes(disjoint_sup)
    assert [[m.format() for m in c.members] for c in classes] == [
        ["[-1,0]", "[1,0]"],
        ["[0,-1]", "[0,1]"],
    ]


def test_classes_partition_support(disjoint_sup):
    classes = g.connection_classes(disjoint_sup)
    seen = [m for c in classes for m in c.members]
    assert sorted(seen) == sorted(disjoint_sup.odd)
    assert len(set(seen)) == len(seen)


def test_nonlie_chain_connects_through_even_support():
    system, sup = supports_for("nonlie_J")
    classes = g.connection_classes(sup)
    assert len(classes) == 1
    assert [m.format() for m in classes[0].members] == ["[1]", "[2]", "[3]"]


def test_witness_sequences_validate():
    for name in ("sl2_Z", "disjoint_sum", "nonlie_J"):
        _, sup = supports_for(name)
        for cls in g.connection_classes(sup):
            for member in cls.members:
                seq = g.witness_sequence(sup, cls.representative, member)
                assert validate_sequence(sup, seq, cls.representative, member), (
                    name,
                    member.format(),
                )


def test_witness_sequence_for_unconnected_pair_raises(disjoint_sup):
    group = g.AbelianGroup((0, 0))
    with pytest.raises(InputError):
        g.witness_sequence(disjoint_sup, group.element([1, 0]), group.element([0, 1]))


def test_arguments_must_lie_in_support(sl2_sup):
    group = g.AbelianGroup((0,))
    outside = group.element([7])
    with pytest.raises(InputError):
        g.connection_closure(sl2_sup, outside)
    with pytest.raises(InputError):
        g.are_connected(sl2_sup, group.element([1]), outside)


def test_closure_monotone_and_idempotent(disjoint_sup):
    # rerunning the closure from any reached element stays inside the
    # class's reachable set united with its inverses
    for grp in disjoint_sup.odd:
        reach = g.connection_closure(disjoint_sup, grp)
        for other in reach:
            if other in disjoint_sup.odd:
                again = g.connection_closure(disjoint_sup, other)
                combined = reach | {x.inverse() for x in reach}
                assert again <= combined


def test_pair_product_in_even_support_implies_connected():
    # whenever g h lies in the inverse-closed even support (or is the
    # identity), the two must be connected
    for name in ("sl2_Z", "disjoint_sum", "nonlie_J"):
        _, sup = supports_for(name)
        for a in sup.odd:
            for b in sup.odd:
                ab = a.compose(b)
                if ab in sup.pm_even or ab.is_identity():
                    assert g.are_connected(sup, a, b), (name, a.format(), b.format())

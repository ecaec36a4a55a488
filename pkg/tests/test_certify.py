import pytest
from hypothesis import given, settings

from transversal.certify import check_extremal_structure, is_member_A, is_member_B
from transversal.errors import NotATreeError, ParameterError, PreconditionError
from transversal.extremal import construct_star_family, construct_tree_family, star_bound
from transversal.model import GraphCollection, StarGraph, star_collection, stars_of
from transversal.rainbow_star import find_rainbow_star

from .strategies import star_families


def test_case_one_member():
    rep = is_member_A(construct_star_family(10, 4), 10, 4)
    assert rep.member and rep.matched_case == "i"


def test_case_two_member():
    rep = is_member_A(construct_star_family(11, 4), 11, 4)
    assert rep.member and rep.matched_case == "ii"


@pytest.mark.parametrize("variant", ["case1", "case2"])
def test_case_three_accepts_either_shape(variant):
    rep = is_member_A(construct_star_family(9, 3, variant), 9, 3)
    assert rep.member and rep.matched_case == "iii"


def test_small_n_member():
    rep = is_member_A(construct_star_family(7, 5), 7, 5)
    assert rep.member and rep.matched_case == "iv"


def test_deleting_a_star_gives_non_member():
    fam = construct_star_family(11, 4)
    rep = is_member_A(fam.without_graph(0), 11, 4)
    assert not rep.member and rep.matched_case == "none"
    assert any(c.name == "ii.size" and not c.passed for c in rep.checks)


def test_wrong_vertex_count():
    with pytest.raises(ParameterError):
        is_member_A(construct_star_family(10, 4), 11, 4)


def _perturbations(fam, delta):
    stars = list(stars_of(fam))
    n = fam.vertex_count
    for idx, s in enumerate(stars):
        for leaf in sorted(s.leaves):
            for new in range(n):
                if new == s.center or new in s.leaves:
                    continue
                moved = StarGraph(s.center, (s.leaves - {leaf}) | {new})
                yield star_collection(n, stars[:idx] + [moved] + stars[idx + 1:])


@pytest.mark.parametrize("n, delta", [(7, 3), (11, 4), (8, 3), (6, 4)])
def test_single_leaf_perturbations(n, delta):
    # A perturbed family keeps the bound size, so it is free exactly when it is a member.
    fam = construct_star_family(n, delta)
    seen = 0
    for other in _perturbations(fam, delta):
        free = find_rainbow_star(other, delta) is None
        assert is_member_A(other, n, delta).member == free
        seen += 1
    assert seen > 0


@settings(max_examples=150)
@given(star_families())
def test_accepted_families_are_free(args):
    c, delta = args
    n = c.vertex_count
    if n < delta + 1:
        return
    if is_member_A(c, n, delta).member:
        assert find_rainbow_star(c, delta) is None
        assert len(c) == star_bound(n, delta)


def test_structure_center_counts():
    rep = check_extremal_structure(construct_star_family(11, 4), 11, 4)
    assert rep.ok and rep.center_count == 5 and rep.expected_center_counts == (5,)
    rep = check_extremal_structure(construct_star_family(8, 3), 8, 3)
    assert rep.ok and rep.center_count == 3 and rep.certificate.matched_case == "i"


def test_structure_requires_maximum_size():
    with pytest.raises(PreconditionError):
        check_extremal_structure(construct_star_family(8, 3).without_graph(0), 8, 3)


def test_structure_requires_free_family():
    fam = construct_star_family(8, 3)
    other = next(c for c in _perturbations(fam, 3) if find_rainbow_star(c, 3) is not None)
    with pytest.raises(PreconditionError):
        check_extremal_structure(other, 8, 3)


@pytest.mark.parametrize("n, m, kind", [(3, 3, "path"), (4, 8, "path"), (4, 8, "star"), (2, 4, "path")])
def test_tree_class_member(n, m, kind):
    rep = is_member_B(construct_tree_family(n, m, kind), n, m)
    assert rep.member and rep.matched_case == "B"


def test_tree_class_overlapping_supports():
    # two blocks that share a vertex
    c = GraphCollection.from_edge_lists(6, [[(0, 1), (1, 2)], [(2, 3), (3, 4)]])
    rep = is_member_B(c, 3, 6)
    assert not rep.member
    assert any(ch.name == "B.disjoint-supports" and not ch.passed for ch in rep.checks)


def test_tree_class_short_block():
    fam = construct_tree_family(4, 8)
    rep = is_member_B(fam.without_graph(0), 4, 8)
    assert not rep.member
    assert {ch.name for ch in rep.checks if not ch.passed} == {"B.size", "B.block-counts"}


def test_tree_class_wrong_order():
    with pytest.raises(NotATreeError):
        is_member_B(construct_tree_family(3, 6), 2, 6)


def test_case_one_with_a_star_deleted():
    rep = is_member_A(construct_star_family(10, 4).without_graph(3), 10, 4)
    assert not rep.member
    assert any(c.name == "i.size" and not c.passed for c in rep.checks)


def test_tree_class_straddling_tree():
    fam = construct_tree_family(4, 8)
    other = GraphCollection(8, (fam.graphs[0], fam.graphs[1], ((2, 3), (3, 4), (4, 5)), fam.graphs[3]))
    rep = is_member_B(other, 4, 8)
    assert not rep.member
    assert any(c.name == "B.disjoint-supports" and not c.passed for c in rep.checks)


def test_tree_class_single_block_short_by_one():
    fam = construct_tree_family(5, 5)
    rep = is_member_B(fam.without_graph(0), 5, 5)
    assert not rep.member and len(fam) - 1 == 5 - 3

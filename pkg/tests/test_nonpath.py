from dataclasses import replace

import pytest

from treeaug.augset import AugmentationSet
from treeaug.blocktree import BlockTree, build_c2_block_tree, leaf_chain_edges
from treeaug.bounds import augmentation_lower_bound
from treeaug.errors import InvalidTargetError, PatternExhaustedError, PreconditionError, UnsupportedTargetError
from treeaug.graph import Graph, is_k_connected
from treeaug.nonpath import (
    RoundState,
    boundary_augment,
    classify_boundary_case,
    main_loop_round,
    matching_boundary_cases,
    nonpath_augmentation,
    replay_block_trees,
    tag_round,
)

from corpus import small_nonpath_trees


def star_block_tree(leaves: int) -> BlockTree:
    t = Graph.star(leaves)
    chain = leaf_chain_edges(t)
    return build_c2_block_tree(t.add_edges(chain.edges), chain)


def synthetic(alpha, host: Graph, round_: int = 2) -> BlockTree:
    base = star_block_tree(len(alpha) + 1)
    return replace(base, round=round_, alpha=tuple(tuple(g) for g in alpha), host=host)


def run_case(bt: BlockTree, h: Graph) -> list[tuple[int, int]]:
    """Apply boundary handlers until no alpha is left; returns the added edges."""
    added = []
    while bt.alpha_vertices():
        case = classify_boundary_case(bt, h)
        eca = boundary_augment(bt, case, h)
        added += eca.edges
        h = h.add_edges(eca.edges)
        bt = bt.without(*(v for e in eca for v in e)).with_host(h)
    return added


class TestClassify:
    def test_k14_is_bc4(self):
        bt = star_block_tree(4)
        assert [len(g) for g in bt.alpha] == [1, 0, 1]
        assert classify_boundary_case(bt, bt.host).kind == "BC4"

    def test_single_alpha_is_bc1(self):
        bt = synthetic([(2,), (), ()], Graph.star(4))
        case = classify_boundary_case(bt, bt.host)
        assert case.kind == "BC1" and case.bindings["a"] == 2

    def test_121_is_bc3(self):
        bt = synthetic([(2,), (3, 4), (5,)], Graph.star(4))
        assert classify_boundary_case(bt, bt.host).kind == "BC3"

    def test_bc2_needs_bc_edge(self):
        host = Graph.star(5).add_edges([(3, 4)])
        bt = synthetic([(2,), (3,), (4,), (5,)], host)
        case = classify_boundary_case(bt, host)
        assert case.kind == "BC2"
        assert (case.bindings["b"], case.bindings["c"]) == (3, 4)
        bt2 = synthetic([(2,), (3,), (5,), (6,)], host)
        assert classify_boundary_case(bt2, host).kind == "BC4"

    def test_all_cross_adjacent_is_bc5(self):
        host = Graph.from_edges(8, [(1, 3), (1, 4), (2, 3), (2, 4)])
        bt = synthetic([(1, 2), (3, 4)], host)
        assert classify_boundary_case(bt, host).kind == "BC5"

    def test_one_heavy_pi_is_bc6(self):
        bt = synthetic([(2,), (3, 4, 5), (6,), (7,)], Graph(8))
        assert classify_boundary_case(bt, bt.host).kind == "BC6"

    def test_main_rule_when_nothing_matches(self):
        bt = synthetic([(1, 2, 3), (4, 5), (6,)], Graph(8))
        assert classify_boundary_case(bt, bt.host).kind is None
        assert matching_boundary_cases(bt, bt.host) == []

    def test_order_prefers_specific_cases(self):
        # degree sequence (1, 2, 1) also fits BC6; BC3 wins
        bt = synthetic([(2,), (3, 4), (5,)], Graph.star(4))
        kinds = [c.kind for c in matching_boundary_cases(bt, bt.host)]
        assert kinds == ["BC3", "BC6"]


class TestBoundaryAugment:
    def test_bc4_pairs_outermost_first(self):
        # four alpha vertices in cycle order, pairwise non-adjacent
        host = Graph(9)
        bt = synthetic([(2,), (3,), (5,), (6,)], host)
        assert run_case(bt, host) == [(2, 6), (3, 5)]

    def test_bc1_targets_next_degree(self):
        host = Graph.star(4).add_edges([(3, 4), (4, 5)])
        bt = synthetic([(2,), (), ()], host)
        case = classify_boundary_case(bt, host)
        # deg(2) = 1; 3 and 5 have degree 2 and lie on later cycles, lowest label wins
        assert boundary_augment(bt, case, host).edges == [(2, 3)]
        host2 = host.add_edges([(3, 5)])
        case2 = classify_boundary_case(bt.with_host(host2), host2)
        # 3 and 5 now have degree 3; no degree-2 target, fall back to minimum degree
        assert boundary_augment(bt, case2, host2).edges == [(2, 3)]

    def test_bc3_falls_back_to_parallel_pairs(self):
        host = Graph.star(4).add_edges([(2, 4)])
        bt = synthetic([(2,), (3, 4), (5,)], host)
        case = classify_boundary_case(bt, host)
        assert boundary_augment(bt, case, host).edges == [(2, 3), (4, 5)]

    def test_bc3_crossed_pairs_by_default(self):
        host = Graph.star(4)
        bt = synthetic([(2,), (3, 4), (5,)], host)
        case = classify_boundary_case(bt, host)
        assert boundary_augment(bt, case, host).edges == [(2, 4), (3, 5)]

    def test_exhausted_pattern_raises_with_state(self):
        host = Graph.from_edges(8, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])
        bt = synthetic([(1, 2), (3, 4)], host)
        case = classify_boundary_case(bt, host)
        assert case.kind == "BC5"
        # 3-4 is the only free pair
        assert boundary_augment(bt, case, host).edges == [(3, 4)]
        host2 = host.add_edges([(3, 4)])
        with pytest.raises(PatternExhaustedError) as info:
            boundary_augment(bt.with_host(host2), case, host2)
        assert info.value.state is not None


class TestMainLoop:
    def test_pairs_two_heaviest(self):
        bt = synthetic([(1, 2, 3), (4, 5), (6,)], Graph(8))
        out = main_loop_round(RoundState(2, bt.host, bt, AugmentationSet()))
        assert out.eca.edges == [(1, 4)]
        assert [len(g) for g in out.bt.alpha] == [2, 1, 1]

    def test_two_singletons(self):
        bt = synthetic([(1,), (2,)], Graph(8))
        out = main_loop_round(RoundState(2, bt.host, bt, AugmentationSet()))
        assert out.eca.edges == [(1, 2)]
        assert [len(g) for g in out.bt.alpha] == [0, 0]

    def test_no_free_cross_pair_is_a_no_op(self):
        host = Graph.from_edges(8, [(1, 3), (1, 4), (2, 3), (2, 4)])
        bt = synthetic([(1, 2), (3, 4)], host)
        state = RoundState(2, host, bt, AugmentationSet())
        assert main_loop_round(state) is state
        assert classify_boundary_case(bt, host).kind == "BC5"


class TestAugmentation:
    def test_k13_becomes_k4(self):
        h, eca = nonpath_augmentation(Graph.star(3), 3)
        assert set(eca.edges) == {(2, 3), (3, 4), (2, 4)}
        assert h == Graph.complete(4)

    def test_k14_becomes_wheel(self):
        h, eca = nonpath_augmentation(Graph.star(4), 3)
        assert eca.edges == [(2, 3), (3, 4), (4, 5), (2, 5)]
        assert eca.round_tags[-1] == "boundary-case-4-round-2"
        assert is_k_connected(h, 3)
        assert len(eca) == augmentation_lower_bound(Graph.star(4), 3).bound

    def test_errors(self):
        with pytest.raises(UnsupportedTargetError):
            nonpath_augmentation(Graph.star(4), 2)
        with pytest.raises(InvalidTargetError):
            nonpath_augmentation(Graph.star(3), 4)
        with pytest.raises(PreconditionError):
            nonpath_augmentation(Graph.path(6), 3)
        with pytest.raises(ValueError):
            nonpath_augmentation(Graph.star(4), 3, tie_break="random")

    def test_lowest_label_rule_can_exhaust(self):
        # The smallest tree on which always taking the lowest-label move
        # paints BC5 into a corner; the backtracking mode recovers.
        t = Graph.from_edges(6, [(1, 2), (1, 5), (2, 3), (2, 4), (5, 6)])
        with pytest.raises(PatternExhaustedError):
            nonpath_augmentation(t, 3)
        h, eca = nonpath_augmentation(t, 3, tie_break="search")
        assert is_k_connected(h, 3) and len(eca) == 4

    def test_search_falls_back_to_other_leaf_orders(self):
        # No rule-sanctioned round sequence works from the canonical leaf
        # order (7, 8, 4, 5) at r = 5; a different depth-first order does.
        t = Graph.from_edges(8, [(1, 2), (1, 6), (2, 3), (3, 4), (3, 5), (6, 7), (6, 8)])
        with pytest.raises(PatternExhaustedError):
            nonpath_augmentation(t, 5, tie_break="search", leaf_orders=1)
        h, eca = nonpath_augmentation(t, 5, tie_break="search")
        assert is_k_connected(h, 5)
        assert len(eca) == augmentation_lower_bound(t, 5).bound
        assert [e for e, tag in eca.items() if tag == "leaf-chain"] != [(7, 8), (4, 8), (4, 5)]

    def test_trace_called_once_per_round_in_literal_mode(self):
        seen = []
        nonpath_augmentation(Graph.star(5), 4, trace=lambda bt: seen.append(bt.round))
        assert seen == [2, 3]


@pytest.mark.parametrize(
    "t, r",
    [(t, r) for t in small_nonpath_trees(5, 7) for r in range(3, min(t.n - 1, 4) + 1)],
    ids=lambda x: str(x.sorted_edges()) if isinstance(x, Graph) else str(x),
)
def test_search_mode_on_small_trees(t, r):
    h, eca = nonpath_augmentation(t, r, tie_break="search")
    assert is_k_connected(h, r)
    assert len(eca) == augmentation_lower_bound(t, r).bound
    assert not set(eca.edges) & t.edges
    assert h == t.add_edges(eca.edges)
    # degree ladder: after round j every vertex has degree at least j + 1
    g = t.add_edges(e for e, tag in eca.items() if tag == "leaf-chain")
    assert g.min_degree() >= 2
    for j in range(2, r):
        g = g.add_edges(e for e, tag in eca.items() if tag_round(tag) == j)
        assert g.min_degree() >= j + 1
    trees = replay_block_trees(t, eca)
    assert [bt.round for bt in trees] == list(range(2, r))

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from treeaug.bounds import augmentation_lower_bound
from treeaug.errors import InvalidTargetError, PreconditionError
from treeaug.graph import Graph
from treeaug.oracle import random_tree


def test_examples():
    assert augmentation_lower_bound(Graph.path(4), 2).bound == 1
    res = augmentation_lower_bound(Graph.path(7), 6)
    assert (res.bound, res.deficiency_sum) == (15, 30)
    assert augmentation_lower_bound(Graph.star(3), 3).bound == 3
    # (4*2 + 3*5) / 2 = 11.5 rounds up to 12
    assert augmentation_lower_bound(Graph.path(7), 5).bound == 12


def test_errors():
    with pytest.raises(InvalidTargetError):
        augmentation_lower_bound(Graph.path(4), 4)
    with pytest.raises(InvalidTargetError):
        augmentation_lower_bound(Graph.path(4), 1)
    with pytest.raises(PreconditionError):
        augmentation_lower_bound(Graph.cycle(5), 2)


@settings(max_examples=100, deadline=None)
@given(st.integers(4, 15), st.integers(0, 10**6), st.data())
def test_bound_is_half_the_degree_deficit(n, seed, data):
    t = random_tree(n, seed)
    r = data.draw(st.integers(2, n - 1))
    deficit = sum(max(0, r - t.degree(v)) for v in t.vertices)
    res = augmentation_lower_bound(t, r)
    assert res.deficiency_sum == deficit
    assert 2 * res.bound in (deficit, deficit + 1)

import pytest

from coha.algebra import choose_marker
from coha.errors import InputError, NoUnitCoordinate, NotDynkin
from coha.quiver import antisym_form
from coha.roots import (
    combined_reineke_order,
    enumerate_partitions,
    format_root,
    is_reineke_order,
    parse_root,
    partition_sum,
    positive_roots,
    reineke_order,
    reineke_orders,
)
from helpers import A2, A3, D4, E6, E7, E8, KRONECKER, part


@pytest.mark.parametrize(
    "q,count", [(A2, 3), (A3, 6), (D4, 12), (E6, 36), (E7, 63), (E8, 120)]
)
def test_root_counts(q, count):
    assert len(positive_roots(q)) == count


def test_kronecker_not_dynkin():
    with pytest.raises(NotDynkin):
        positive_roots(KRONECKER)


def test_e8_longest_root_has_no_marker():
    longest = max(positive_roots(E8), key=sum)
    assert sum(longest) == 29
    with pytest.raises(NoUnitCoordinate):
        choose_marker(longest)


def test_e7_roots_all_have_markers():
    for beta in positive_roots(E7):
        choose_marker(beta)


def test_a3_order_is_the_worked_one():
    assert reineke_order(A3) == [(0, 0, 1), (0, 1, 1), (0, 1, 0), (1, 1, 1), (1, 1, 0), (1, 0, 0)]


def test_a3_admits_the_swapped_order():
    swapped = [(0, 0, 1), (0, 1, 1), (1, 1, 1), (0, 1, 0), (1, 1, 0), (1, 0, 0)]
    assert is_reineke_order(A3, swapped)
    assert swapped in list(reineke_orders(A3))


@pytest.mark.parametrize("q", [A2, A3, D4, E6])
def test_reineke_order_condition(q):
    order = reineke_order(q)
    for u in range(len(order)):
        for v in range(u + 1, len(order)):
            assert antisym_form(q, order[u], order[v]) >= 0


def test_combined_order_blocks():
    o = combined_reineke_order(part(A3, [[1], [2, 3]]))
    assert o.roots == ((1, 0, 0), (0, 0, 1), (0, 1, 1), (0, 1, 0))
    assert o.block == (0, 1, 1, 1)
    assert o.local == (0, 0, 1, 2)
    assert list(o.block_slice(1)) == [1, 2, 3]


def test_combined_order_override_checked():
    p = part(A3, [[1], [2, 3]])
    with pytest.raises(InputError):
        combined_reineke_order(p, [[(1, 0, 0)], [(0, 1, 0), (0, 1, 1), (0, 0, 1)]])


def test_partitions_lexicographic_and_complete():
    roots = reineke_order(A2)
    ms = enumerate_partitions(roots, (1, 1))
    assert ms == [(0, 1, 0), (1, 0, 1)]
    assert ms == sorted(ms)
    for gamma in [(2, 1), (2, 2), (0, 3)]:
        ms = enumerate_partitions(roots, gamma)
        assert ms == sorted(set(ms))
        assert all(partition_sum(roots, m) == gamma for m in ms)


def test_partition_counts_a3():
    # Kostant partition function of A3 at (1,1,1) is 4
    assert len(enumerate_partitions(reineke_order(A3), (1, 1, 1))) == 4


def test_root_text_round_trip():
    for beta in positive_roots(D4):
        assert parse_root(format_root(beta), 4) == beta
    assert format_root((1, 2, 0)) == "e1+2e2"

import pytest

from metaice.algebra import CoeffElem, iter_points
from metaice.core._common import RowType, Spin
from metaice.engine import (
    bottom_row_swap,
    iter_states_with_weights,
    partition_at_point,
    partition_function,
    partition_via_transfer,
    row_transfer_matrix,
    spin_vectors,
    state_weight,
)
from metaice.lattice import (
    ColumnSet,
    Partition,
    SystemSpec,
    build_standard_system,
    build_two_row,
    partitions_in_box,
    run_row,
)

PLUS, MINUS = Spin.PLUS, Spin.MINUS
GAMMA, DELTA = RowType.GAMMA, RowType.DELTA


def test_smallest_partition_function(small_gamma, ring):
    result = partition_function(small_gamma)
    assert result.value == ring("z1 - v*z2")
    assert result.state_count == 2
    assert result.method == "enumerate"
    assert str(result.value) == "z1 - v*z2"


def test_single_state():
    spec = build_standard_system(Partition((0,)), 1, GAMMA, 1)
    result = partition_function(spec)
    assert result.value == 1
    assert result.state_count == 1


def test_labelled_state_weight(labelled):
    w = state_weight(labelled.spec, labelled)
    assert w, "every vertex of the labelled state has nonzero weight"


def test_iter_states_with_weights(small_gamma):
    total = CoeffElem.zero(1, 2)
    for _, w in iter_states_with_weights(small_gamma):
        total = total + w
    assert total == partition_function(small_gamma).value


def test_no_states():
    spec = SystemSpec(3, [(GAMMA, 0)], ColumnSet((1, 0)), ColumnSet((2,)), 1)
    for result in (partition_function(spec), partition_via_transfer(spec)):
        assert result.value == 0
        assert result.state_count == 0


def _grid():
    for r in (1, 2, 3):
        for lam in partitions_in_box(4 - r, r):
            for n in (1, 2, 3):
                yield lam, r, n


@pytest.mark.parametrize("lam,r,n", list(_grid()))
def test_enumeration_matches_transfer(lam, r, n):
    for row_type in (GAMMA, DELTA):
        spec = build_standard_system(lam, r, row_type, n)
        by_states = partition_function(spec)
        by_rows = partition_via_transfer(spec)
        assert by_states.value == by_rows.value, f"{spec!r}"
        assert by_states.state_count == by_rows.state_count


def test_two_row_enumeration_matches_transfer(two_row_gd):
    assert partition_function(two_row_gd).value == partition_via_transfer(
        two_row_gd
    ).value


def test_parallel_enumeration_is_deterministic():
    spec = build_standard_system(Partition((2, 1, 0)), 3, GAMMA, 2)
    serial = partition_function(spec, workers=1)
    parallel = partition_function(spec, workers=2)
    assert serial == parallel


def test_partition_at_point():
    spec = build_standard_system(Partition((1, 0)), 2, GAMMA, 2)
    value = partition_function(spec).value
    for point in iter_points(2, 2, seed=5, count=10):
        assert partition_at_point(spec, point) == value.evaluate(point)


def test_single_column_transfer_matrix():
    T = row_transfer_matrix(GAMMA, 0, 1, 1)
    assert T.entries == {((MINUS,), (PLUS,)): CoeffElem.one(1, 1)}
    assert T.entry((PLUS,), (PLUS,)) == 0
    assert not T.is_admissible((PLUS,), (PLUS,))


@pytest.mark.parametrize("row_type", [GAMMA, DELTA])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_bottom_row_entries_are_monomials(row_type, n):
    M = 4
    T = row_transfer_matrix(row_type, 0, M, n)
    bottom = (PLUS,) * M
    for top in spin_vectors(M):
        if sum(s is MINUS for s in top) != 1:
            continue
        h = run_row(PLUS, top, bottom)
        count = sum(
            1 for p in range(M) if h[p] is MINUS and top[p] is PLUS
        )
        assert T.entry(top, bottom) == CoeffElem.z(0, n, 1, count)


def test_transfer_flux():
    T = row_transfer_matrix(DELTA, 1, 3, 2)
    for top, bottom in T.entries:
        assert sum(s is MINUS for s in top) == sum(s is MINUS for s in bottom) + 1
    assert T.nvars == 2
    with pytest.raises(ValueError):
        row_transfer_matrix(GAMMA, 0, 0, 1)


@pytest.mark.parametrize("row_type", [GAMMA, DELTA])
@pytest.mark.parametrize("M", [1, 2, 3, 4, 5, 6])
def test_single_row_flux(row_type, M):
    T = row_transfer_matrix(row_type, 0, M, 2)
    for top in spin_vectors(M):
        for bottom in spin_vectors(M):
            h = run_row(PLUS, top, bottom)
            closes = h is not None and h[-1] is MINUS
            assert T.is_admissible(top, bottom) == closes
            if closes:
                assert sum(s is MINUS for s in top) - sum(
                    s is MINUS for s in bottom
                ) == 1, f"{top} over {bottom}"
            elif T.entry(top, bottom):
                pytest.fail(f"inadmissible {top} over {bottom} has a weight")


def test_transfer_matrix_array():
    basis = spin_vectors(2)
    T = row_transfer_matrix(GAMMA, 0, 2, 1)
    arr = T.to_array(basis)
    assert arr.shape == (4, 4)
    assert arr[basis.index((MINUS, PLUS)), basis.index((PLUS, PLUS))] == T.entry(
        (MINUS, PLUS), (PLUS, PLUS)
    )


@pytest.mark.parametrize("lam", [(0, 0), (1, 0), (2, 1), (2, 2)])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_bottom_row_swap(lam, n):
    lam = Partition(lam)
    expected = partition_function(build_standard_system(lam, 2, GAMMA, n)).value
    assert bottom_row_swap(lam, 2, n).value == expected


def test_top_row_swap_changes_value(ring):
    swapped = bottom_row_swap(Partition((0, 0)), 2, 1, row=0)
    assert swapped.value == ring("z2 - v*z1")
    assert swapped.value != ring("z1 - v*z2")
    with pytest.raises(ValueError):
        bottom_row_swap(Partition((0, 0)), 2, 1, row=2)


def test_gamma_delta_system_via_both_methods():
    spec = build_two_row(ColumnSet((2, 1, 0)), ColumnSet((1,)), "delta-gamma", 3)
    assert partition_function(spec).value == partition_via_transfer(spec).value

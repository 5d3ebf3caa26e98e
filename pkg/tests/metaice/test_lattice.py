import pytest

from metaice.core._common import RowType, Spin, spins_from_text
from metaice.lattice import (
    ColumnSet,
    Partition,
    SpinState,
    SystemSpec,
    build_standard_system,
    build_two_row,
    column_sets,
    columns_from_partition,
    derive_charges,
    enumerate_admissible,
    partitions_in_box,
    plot_state,
    propagate_charges,
    row_charges,
    run_row,
)

PLUS, MINUS = Spin.PLUS, Spin.MINUS


def test_partition():
    lam = Partition((3, 2, 0))
    assert lam.parts == (3, 2, 0)
    assert len(lam) == 3
    assert str(lam) == "3,2,0"
    assert Partition.parse("3, 2,0") == lam
    assert Partition((3,)).padded(3) == Partition((3, 0, 0))


@pytest.mark.parametrize("parts", [(1, 2), (2, -1)])
def test_partition_invalid(parts):
    with pytest.raises(ValueError):
        Partition(parts)


def test_partition_invalid_type():
    with pytest.raises(TypeError):
        Partition((2, "1"))
    with pytest.raises(ValueError):
        Partition.parse("2,x")
    with pytest.raises(ValueError):
        Partition((3, 2, 1)).padded(2)


def test_partitions_in_box():
    box = list(partitions_in_box(1, 2))
    assert box == [Partition((1, 1)), Partition((1, 0)), Partition((0, 0))]
    assert len(list(partitions_in_box(3, 3))) == 20


def test_column_set():
    cols = ColumnSet((4, 2, 1))
    assert cols.columns == (4, 2, 1)
    assert cols.max_column == 4
    assert 2 in cols and 3 not in cols
    assert ColumnSet(()).max_column == -1
    assert ColumnSet.parse("") == ColumnSet(())


def test_column_set_reordered_with_warning():
    with pytest.warns(UserWarning):
        cols = ColumnSet((1, 4, 2))
    assert cols.columns == (4, 2, 1)


@pytest.mark.parametrize("columns", [(2, 2), (3, -1)])
def test_column_set_invalid(columns):
    with pytest.raises(ValueError):
        ColumnSet(columns)


def test_columns_from_partition():
    assert columns_from_partition(Partition((3, 2, 0)), 3) == ColumnSet((5, 3, 0))
    assert columns_from_partition(Partition((0, 0)), 2) == ColumnSet((1, 0))
    with pytest.raises(ValueError):
        columns_from_partition(Partition((1,)), 2)


def test_column_sets():
    sets = list(column_sets(4, 2))
    assert len(sets) == 6
    assert all(len(s) == 2 and s.max_column < 4 for s in sets)


def test_standard_system():
    spec = build_standard_system(Partition((3, 2, 0)), 3, RowType.GAMMA, 2)
    assert spec.M == 6, "grid must have lambda_1 + r columns"
    assert spec.num_rows == 3
    assert spec.nvars == 3
    assert spec.rows == ((RowType.GAMMA, 0), (RowType.GAMMA, 1), (RowType.GAMMA, 2))
    top, bottom = spec.boundary_vectors()
    assert top == spins_from_text("-+-++-")
    assert bottom == spins_from_text("++++++")
    assert spec.grid.columns == (5, 4, 3, 2, 1, 0)
    assert spec.grid.num_rows == 3
    assert spec.column_of(0) == 5
    assert spec.position_of(0) == 5


def test_standard_system_row_types():
    types = [RowType.DELTA, RowType.GAMMA]
    spec = build_standard_system(Partition((1, 0)), 2, types, 1, params=[1, 0])
    assert spec.rows == ((RowType.DELTA, 1), (RowType.GAMMA, 0))
    with pytest.raises(ValueError):
        build_standard_system(Partition((1, 0)), 2, [RowType.GAMMA], 1)


def test_spec_validation():
    with pytest.raises(ValueError):
        # flux: two top Minus edges cannot feed one row
        SystemSpec(3, [(RowType.GAMMA, 0)], ColumnSet((1, 0)), ColumnSet(()), 1)
    with pytest.raises(ValueError):
        SystemSpec(2, [(RowType.GAMMA, 0)], ColumnSet((2,)), ColumnSet(()), 1)
    with pytest.raises(TypeError):
        SystemSpec(2, [("gamma", 0)], ColumnSet((1,)), ColumnSet(()), 1)
    with pytest.raises(TypeError):
        SystemSpec(2, [(RowType.GAMMA, 0)], (1,), ColumnSet(()), 1)
    with pytest.raises(ValueError):
        SystemSpec(2, [(RowType.GAMMA, 0)], ColumnSet((1,)), ColumnSet(()), 0)


def test_spec_setters():
    spec = build_standard_system(Partition((1, 0)), 2, RowType.GAMMA, 1)
    spec.n = 3
    assert spec.n == 3
    spec.M = 5
    assert spec.grid.M == 5
    with pytest.raises(ValueError):
        spec.M = 0
    with pytest.raises(TypeError):
        spec.n = 1.5


def test_spec_shrinking_cuts_boundary():
    spec = build_standard_system(Partition((3, 2, 0)), 3, RowType.GAMMA, 1)
    with pytest.raises(ValueError):
        spec.M = 5


def test_spec_read_only():
    spec = build_standard_system(Partition((1, 0)), 2, RowType.GAMMA, 1)
    with pytest.raises(AttributeError):
        spec.rows = ()
    with pytest.raises(AttributeError):
        spec.top_minus = ColumnSet(())
    with pytest.raises(AttributeError):
        spec.grid.M = 3


def test_spec_to_dict_and_equality():
    spec = build_standard_system(Partition((0, 0)), 2, RowType.GAMMA, 1)
    assert spec.to_dict() == {
        "M": 2,
        "n": 1,
        "rows": [["gamma", 1], ["gamma", 2]],
        "top_minus": [1, 0],
        "bottom_minus": [],
    }
    same = build_standard_system(Partition((0, 0)), 2, RowType.GAMMA, 1)
    assert spec == same and hash(spec) == hash(same)
    assert spec != spec.with_rows([(RowType.DELTA, 0), (RowType.GAMMA, 1)])


def test_two_row(figure_boundary):
    top, bottom = figure_boundary
    spec = build_two_row(top, bottom, "gamma-delta", 2)
    assert spec.M == 5
    assert spec.rows == ((RowType.GAMMA, 0), (RowType.DELTA, 1))
    dg = build_two_row(top, bottom, "delta-gamma", 2)
    assert dg.rows == ((RowType.DELTA, 1), (RowType.GAMMA, 0))
    with pytest.raises(ValueError):
        build_two_row(top, bottom, "sideways", 2)
    with pytest.raises(ValueError):
        build_two_row(top, ColumnSet(()), "gamma-delta", 2)


def test_labelled_state_charges(labelled):
    assert labelled.charges[0] == (1, 0, 1, 0, 0, 1, 0)
    assert labelled.charges[1] == (1, 0, 0, 0, 0, 0, 0)
    assert labelled.charges[2] == (0, 1, 0, 1, 0, 0, 0)


def test_labelled_state_vertices(labelled):
    v = labelled.vertex(0, 0)
    assert (v.left, v.top, v.right, v.bottom) == (PLUS, MINUS, PLUS, MINUS)
    assert (v.left_charge, v.right_charge) == (1, 0)


def test_spin_state_rejects_bad_vertex(labelled):
    horizontals = list(labelled.horizontals)
    horizontals[1] = spins_from_text("++-----")
    with pytest.raises(ValueError):
        SpinState(labelled.spec, horizontals, labelled.verticals)


def test_spin_state_rejects_bad_boundary(labelled):
    verticals = list(labelled.verticals)
    verticals[0] = spins_from_text("--++++")
    with pytest.raises(ValueError):
        SpinState(labelled.spec, labelled.horizontals, verticals)


def test_run_row():
    assert run_row(PLUS, (MINUS, PLUS), (PLUS, PLUS)) == (PLUS, MINUS, MINUS)
    assert run_row(PLUS, (PLUS,), (MINUS,)) is None


def test_row_charges():
    h = spins_from_text("+++-++-")
    assert row_charges(RowType.GAMMA, h, 2) == (1, 0, 1, 0, 0, 1, 0)
    assert row_charges(RowType.DELTA, spins_from_text("+--+-"), 3) == (
        0,
        1,
        2,
        2,
        0,
    )


def test_propagate_charges_matches_counting(labelled):
    for h in labelled.horizontals:
        assert propagate_charges(RowType.GAMMA, h, 2, 0) == row_charges(
            RowType.GAMMA, h, 2
        )
        assert propagate_charges(RowType.DELTA, h, 2, 0) == row_charges(
            RowType.DELTA, h, 2
        )


def test_charges_depend_on_spins_alone():
    rows = [RowType.GAMMA, RowType.DELTA, RowType.GAMMA]
    spec = build_standard_system(Partition((2, 1, 0)), 3, rows, 2)
    states = list(enumerate_admissible(spec))
    first, other = states[0], states[-1]
    # turn the first state into another one and back
    changed = SpinState(spec, other.horizontals, other.verticals)
    restored = SpinState(spec, first.horizontals, first.verticals)
    assert derive_charges(changed).charges == other.charges
    assert derive_charges(restored).charges == first.charges
    spec.n = 3
    spec.n = 2
    for state in states:
        again = derive_charges(SpinState(spec, state.horizontals, state.verticals))
        assert again == state
        assert again.charges == state.charges


def test_enumerate_small(small_gamma):
    states = list(enumerate_admissible(small_gamma))
    assert len(states) == 2
    assert len(set(states)) == 2


def test_enumerate_contains_labelled_state(labelled):
    states = list(enumerate_admissible(labelled.spec))
    assert labelled in states


@pytest.mark.parametrize("lam", [(0, 0, 0), (2, 1, 0), (3, 2, 0), (2, 2, 2)])
def test_one_minus_above_bottom_row(lam):
    spec = build_standard_system(Partition(lam), 3, RowType.GAMMA, 2)
    states = list(enumerate_admissible(spec))
    assert states, f"no states for {lam}"
    for state in states:
        minus = sum(s is MINUS for s in state.verticals[2])
        assert minus == 1, "the bottom row must absorb exactly one Minus"


def test_enumerate_no_states():
    spec = SystemSpec(3, [(RowType.GAMMA, 0)], ColumnSet((1, 0)), ColumnSet((2,)), 1)
    assert list(enumerate_admissible(spec)) == []


def test_plot_state(labelled):
    fig, ax = plot_state(labelled, title="labelled")
    assert ax.get_title() == "labelled"
    assert fig is ax.figure

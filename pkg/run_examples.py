"""
Examples for metaice showing how to use the module

"""

from metaice.core._common import RowType
from metaice.engine import partition_function, partition_via_transfer
from metaice.lattice import (
    ColumnSet,
    Partition,
    build_standard_system,
    labelled_state,
    plot_state,
    show,
)
from metaice.verify import tokuyama_crosscheck, train_trace, verify_ybe


def example_1():
    """
    Smallest Gamma system
    """
    print("=" * 79)
    print("Example 1")
    print(
        "Partition function of two Gamma rows with lambda = (0, 0) and n = 1, "
        "computed by enumerating states and by transfer matrices\n"
    )

    spec = build_standard_system(Partition((0, 0)), 2, RowType.GAMMA, 1)
    by_states = partition_function(spec)
    by_rows = partition_via_transfer(spec)
    print(f"states: {by_states.state_count}")
    print(f"Z = {by_states.value}")
    print(f"transfer matrices agree: {by_states.value == by_rows.value}")


def example_2():
    """
    Yang-Baxter equation and the train argument
    """
    print("=" * 79)
    print("Example 2")
    print("Yang-Baxter equation for a Gamma and a Delta row with n = 2\n")
    print(verify_ybe(RowType.GAMMA, RowType.DELTA, 2))

    print("\nTrain argument for top columns 4 2 1 and bottom column 4\n")
    report = train_trace(ColumnSet((4, 2, 1)), ColumnSet((4,)), 2)
    print(report)


def example_3():
    """
    Tokuyama factorization
    """
    print("=" * 79)
    print("Example 3")
    print("Gamma partition function with n = 1 factors as a product\n")
    report = tokuyama_crosscheck(Partition((2, 1, 0)), 3)
    print(report)
    print(f"monomial: {report.details['monomial']}")


def example_4():
    """
    Drawing a labelled state
    """
    print("=" * 79)
    print("Example 4")
    print("The fully labelled 3 x 6 state with n = 2\n")
    state = labelled_state()
    plot_state(state)
    show()


if __name__ == "__main__":
    example_1()
    example_2()
    example_3()
    example_4()

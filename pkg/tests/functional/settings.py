"""
Common grid bounds used by the functional tests. Every identity is checked on
the same small systems so the run time stays predictable.
"""

MODULI = (1, 2, 3)  # charge moduli checked for every lattice identity
YBE_MODULI = (1, 2, 3, 4)  # local identities are cheap enough for n = 4
MAX_COLUMNS = 6  # widest two-row system
MAX_TOP = 3  # most Minus top edges in a two-row boundary
MAX_ROWS = 3  # tallest standard system
MAX_PART = 3  # largest part of a partition
YB_SYSTEM_MODULI = (1, 2, 3)
NUM_POINTS = 20  # sample points per sampled Yang-Baxter system relation
SEED = 0

import numpy as np

from lie_defect.errors import ConfigurationError

# Bourbaki numbering throughout. Entry (i, j) is <alpha_j, alpha_i^vee>, so the row of a short simple root
# carries the -2 (or -3) next to a long neighbour.


def _fill_a(rank):
    cartan = 2 * np.eye(rank, dtype=np.int64)
    for i in range(rank - 1):
        cartan[i, i + 1] = -1
        cartan[i + 1, i] = -1
    return cartan


def _fill_b(rank):
    cartan = _fill_a(rank)
    # alpha_n = e_n is short
    cartan[rank - 1, rank - 2] = -2
    return cartan


def _fill_c(rank):
    cartan = _fill_a(rank)
    # alpha_n = 2e_n is long
    cartan[rank - 2, rank - 1] = -2
    return cartan


def _fill_d(rank):
    cartan = _fill_a(rank)
    # alpha_{n-1} and alpha_n both hang off alpha_{n-2}
    cartan[rank - 2, rank - 1] = 0
    cartan[rank - 1, rank - 2] = 0
    cartan[rank - 1, rank - 3] = -1
    cartan[rank - 3, rank - 1] = -1
    return cartan


def _fill_e(rank):
    cartan = 2 * np.eye(rank, dtype=np.int64)
    edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, rank - 1)]
    for i, j in edges:
        cartan[i, j] = -1
        cartan[j, i] = -1
    return cartan


def _fill_f(rank):
    cartan = _fill_a(rank)
    # alpha_1, alpha_2 long, alpha_3, alpha_4 short
    cartan[2, 1] = -2
    return cartan


def _fill_g(rank):
    cartan = _fill_a(rank)
    # alpha_1 short, alpha_2 long
    cartan[0, 1] = -3
    return cartan


_FILL_FUNCTIONS = {"A": _fill_a, "B": _fill_b, "C": _fill_c, "D": _fill_d, "E": _fill_e, "F": _fill_f,
                   "G": _fill_g}


def cartan_matrix(lie_type, rank):
    """Cartan matrix of the simple type, or the empty 0x0 matrix for rank 0 (GL_1)."""
    if rank == 0:
        return np.zeros((0, 0), dtype=np.int64)
    try:
        fill = _FILL_FUNCTIONS[lie_type]
    except KeyError:
        raise ConfigurationError("Unknown Lie type: " + str(lie_type))
    cartan = fill(rank)
    cartan.setflags(write=False)
    return cartan

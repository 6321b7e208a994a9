import numpy as np
import proglog

from ..liegroup import haar_samples, so_diameter
from .EpsilonNet import EpsilonNet
from .errors import NotDenseAtBudget

PANEL_SIZE = 1000
PANEL_SEED = 20240101


def certification_panel(dim, panel_size=PANEL_SIZE, seed=PANEL_SEED):
    """The fixed seeded Haar panel used to certify net density."""
    return haar_samples(dim, panel_size, seed)


def _grid_keys(values, cell):
    flat = values.reshape((len(values), -1))
    return np.floor(flat / cell).astype(np.int64)


def epsilon_net_bfs(
    S,
    epsilon,
    max_len,
    symmetric=True,
    panel_size=PANEL_SIZE,
    panel_seed=PANEL_SEED,
    logger=None,
):
    """Breadth-first enumeration of words until they are epsilon-dense.

    Words are extended by one letter per level. A new word is dropped when its
    matrix falls in an already occupied cell of a grid of width epsilon/(4n)
    on the matrix entries (cells have diameter at most epsilon/4). After each
    level the covering radius of the seeded Haar test panel is measured, and
    the search stops as soon as it is <= epsilon.

    Parameters
    ----------

    S
      GeneratorTuple.

    epsilon
      Target covering radius.

    max_len
      Maximal word length.

    symmetric
      If True, the inverses of the generators are letters too.

    panel_size, panel_seed
      Size and seed of the Haar test panel.

    logger
      Either "bar" for a progress bar, or None, or any Proglog logger.

    Returns
    -------

    An EpsilonNet. Raises NotDenseAtBudget (carrying the achieved radius) if
    the panel is not covered at max_len. When the words never leave the
    identity the radius is the diameter of SO(n).
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be > 0")
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    logger = proglog.default_bar_logger(logger)
    dim = S.dim
    alphabet = [(i, 1) for i in range(S.m)]
    if symmetric:
        alphabet += [(i, -1) for i in range(S.m)]
    letter_matrices = np.array(
        [S[i].mat if sign > 0 else S[i].mat.T for (i, sign) in alphabet]
    )
    cell = epsilon / (4.0 * dim)
    panel = certification_panel(dim, panel_size, panel_seed)

    values = [np.eye(dim)[None]]
    parents = [np.array([-1])]
    letter_ids = [np.array([-1])]
    seen = set(key.tobytes() for key in _grid_keys(values[0], cell))
    frontier = values[0]
    frontier_indices = np.array([0])
    n_words = 1

    def current_net(radius, length):
        return EpsilonNet(
            generators=S,
            alphabet=alphabet,
            values=np.concatenate(values),
            parents=np.concatenate(parents),
            letter_ids=np.concatenate(letter_ids),
            epsilon=epsilon,
            covering_radius=radius,
            max_length=length,
        )

    net = current_net(np.inf, 0)
    radius = net.panel_covering_radius(panel)
    reached_length = 0
    for length in logger.iter_bar(word_length=range(1, max_len + 1)):
        if radius <= epsilon or len(frontier) == 0:
            break
        candidates = frontier[:, None] @ letter_matrices[None]
        candidates = candidates.reshape((-1, dim, dim))
        candidate_parents = np.repeat(frontier_indices, len(alphabet))
        candidate_letters = np.tile(np.arange(len(alphabet)), len(frontier))
        keys = _grid_keys(candidates, cell)
        _, first_in_cell = np.unique(keys, axis=0, return_index=True)
        first_in_cell.sort()
        new = []
        for index in first_in_cell:
            key = keys[index].tobytes()
            if key not in seen:
                seen.add(key)
                new.append(index)
        new = np.array(new, dtype=np.int64)
        frontier = candidates[new]
        frontier_indices = n_words + np.arange(len(new))
        n_words += len(new)
        values.append(frontier)
        parents.append(candidate_parents[new])
        letter_ids.append(candidate_letters[new])
        net = current_net(np.inf, length)
        radius = net.panel_covering_radius(panel)
        reached_length = length
        logger(
            message="Length %d: %d words, panel covering radius %.4f"
            % (length, n_words, radius)
        )
    if len(net) == 1:
        # Only the identity is reachable: the farthest rotation is a diameter away.
        radius = so_diameter(dim)
    net.covering_radius = radius
    net.max_length = reached_length
    if radius > epsilon:
        raise NotDenseAtBudget(radius, epsilon, reached_length)
    return net

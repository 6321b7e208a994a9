import numpy as np
import proglog

from ..liegroup import GroupElement, distance, exp_so, log_so, hat, vee
from .Word import Word
from .power_scan import approximate_inverse
from .epsilon_net import epsilon_net_bfs
from .errors import NetTooCoarse, DimUnsupported

BASIN_RADIUS = 0.14


class CompiledWord:
    """Result of compile_without_inverses.

    Parameters
    ----------

    word
      The inverse-free Word.

    distance
      distance(target, word.value).

    symmetric_word
      The Solovay-Kitaev word on S ∪ S^-1 before inverse replacement.

    sk_depth
      Recursion depth that was needed.

    sk_distance
      Distance reached by the symmetric word.

    inverse_powers
      Dict generator index -> power n replacing that generator's inverse.
    """

    def __init__(
        self, word, distance, symmetric_word, sk_depth, sk_distance, inverse_powers
    ):
        self.word = word
        self.distance = distance
        self.symmetric_word = symmetric_word
        self.sk_depth = sk_depth
        self.sk_distance = sk_distance
        self.inverse_powers = inverse_powers

    def to_dict(self):
        return {
            "word": self.word.to_dict(),
            "distance": self.distance,
            "sk_depth": self.sk_depth,
            "sk_distance": self.sk_distance,
            "symmetric_length": self.symmetric_word.length,
            "inverse_powers": {str(k): v for k, v in self.inverse_powers.items()},
        }


def _rotation_between(source, destination):
    """Rotation of R^3 taking the unit vector source to destination."""
    cross = np.cross(source, destination)
    sin = np.linalg.norm(cross)
    cos = np.dot(source, destination)
    if sin < 1e-15:
        if cos > 0:
            return GroupElement.identity(3)
        # half-turn about any axis orthogonal to source
        axis = np.cross(source, np.eye(3)[np.argmin(np.abs(source))])
        axis /= np.linalg.norm(axis)
        return exp_so(np.pi * hat(axis))
    return exp_so(np.arctan2(sin, cos) * hat(cross / sin))


def group_commutator_decomposition(delta):
    """Return (V, W) with V W V^-1 W^-1 = delta, for delta in SO(3).

    V and W are rotations by the same angle phi about orthogonal axes, with
    sin(theta/4) = sin^2(phi/2) where theta is the rotation angle of delta.
    This is the balanced decomposition of the Solovay-Kitaev recursion, which
    makes both |V - I| and |W - I| of order sqrt(|delta - I|).
    """
    axis_angle = vee(log_so(delta))
    theta = np.linalg.norm(axis_angle)
    identity = GroupElement.identity(3)
    if theta < 1e-15:
        return identity, identity
    phi = 2 * np.arcsin(np.sqrt(np.sin(theta / 4)))
    V = exp_so(phi * hat([1.0, 0, 0]))
    W = exp_so(phi * hat([0, 1.0, 0]))
    commutator = V @ W @ V.inverse() @ W.inverse()
    commutator_axis = vee(log_so(commutator))
    commutator_axis /= np.linalg.norm(commutator_axis)
    S = _rotation_between(commutator_axis, axis_angle / theta)
    return S @ V @ S.inverse(), S @ W @ S.inverse()


def solovay_kitaev(
    target, net, depth, return_trace=False, basin_radius=BASIN_RADIUS, balanced=False
):
    """Approximate a rotation of SO(3) by a word, recursively.

    Depth 0 is the nearest word of the net. At depth k the depth k-1 answer
    U_{k-1} is corrected by a group commutator: U_k = V W V^-1 W^-1 U_{k-1}
    where V, W are depth k-1 approximations of the balanced commutator
    decomposition of target U_{k-1}^-1. Lengths grow by a factor 5 per level.
    The commutators are balanced, so U_k has the letter imbalance of U_0.

    Parameters
    ----------

    target
      GroupElement of SO(3).

    net
      EpsilonNet on SO(3), dense enough (epsilon_0 <= 0.14).

    depth
      Recursion depth (>= 0).

    return_trace
      If True, return (word, trace) where trace lists distance(target, U_k)
      for k = 0..depth.

    basin_radius
      NetTooCoarse is raised when a net lookup is farther than this.

    balanced
      If True, U_0 is the nearest balanced word of the net, and the result
      is a balanced word.
    """
    if target.dim != 3 or net.dim != 3:
        raise DimUnsupported(target.dim if target.dim != 3 else net.dim)
    if depth < 0:
        raise ValueError("depth must be >= 0")
    trace = []

    def approximate(U, level, record, base_balanced=False):
        if level == 0:
            word, word_distance = net.nearest(U, balanced=base_balanced)
            if word_distance > basin_radius:
                raise NetTooCoarse(word_distance, basin_radius)
        else:
            previous = approximate(U, level - 1, record, base_balanced)
            V, W = group_commutator_decomposition(U @ previous.value.inverse())
            V_word = approximate(V, level - 1, None)
            W_word = approximate(W, level - 1, None)
            word = V_word + W_word + V_word.inverse() + W_word.inverse() + previous
        if record is not None:
            record.append(distance(U, word.value))
        return word

    word = approximate(target, depth, trace, balanced)
    if return_trace:
        return word, trace
    return word


def fit_contraction_constant(traces):
    """Smallest c with d_{k+1} <= c d_k^(3/2) over all given distance traces."""
    ratios = [
        following / previous ** 1.5
        for trace in traces
        for previous, following in zip(trace[:-1], trace[1:])
        if previous > 0
    ]
    return max(ratios) if ratios else 0.0


def compile_without_inverses(
    target,
    S,
    epsilon,
    net=None,
    max_depth=4,
    n_max=10 ** 7,
    net_epsilon=0.12,
    net_max_len=16,
    logger=None,
):
    """Approximate target within epsilon by a word with only positive powers.

    A Solovay-Kitaev word on S ∪ S^-1 is first computed at the smallest depth
    reaching epsilon/2. Each inverse letter s_i^-1 is then replaced by the
    power s_i^n returned by approximate_inverse(s_i, epsilon / (2 L)), where L
    is the word length, so that the total error stays below epsilon.

    Parameters
    ----------

    target
      GroupElement of SO(3).

    S
      GeneratorTuple whose elements are used as letters.

    epsilon
      Required accuracy.

    net
      EpsilonNet on S with inverses. Built with epsilon_net_bfs(S,
      net_epsilon, net_max_len) if not provided.

    max_depth
      Maximal Solovay-Kitaev depth tried.

    n_max
      Budget of the inverse power scans.

    logger
      Either "bar" for a progress bar, or None, or any Proglog logger.

    Returns
    -------

    A CompiledWord.
    """
    logger = proglog.default_bar_logger(logger)
    if net is None:
        logger(message="Building the epsilon-net of the generators...")
        net = epsilon_net_bfs(S, net_epsilon, net_max_len, symmetric=True)
    for depth in range(max_depth + 1):
        symmetric_word = solovay_kitaev(target, net, depth)
        sk_distance = distance(target, symmetric_word.value)
        logger(message="SK depth %d: distance %.3e" % (depth, sk_distance))
        if sk_distance < epsilon / 2:
            break
    else:
        raise NetTooCoarse(sk_distance, epsilon / 2)

    letters = symmetric_word.letters
    tolerance = epsilon / (2 * max(len(letters), 1))
    inverse_powers = {}
    power_values = {}
    for generator_index in sorted(set(letters[letters[:, 1] < 0, 0].tolist())):
        n, _ = approximate_inverse(S[generator_index], tolerance, n_max)
        inverse_powers[generator_index] = n
        power_values[generator_index] = np.linalg.matrix_power(S[generator_index].mat, n)

    new_letters = []
    value = np.eye(3)
    for generator_index, sign in letters:
        if sign > 0:
            new_letters.append(np.array([[generator_index, 1]]))
            value = value @ S[generator_index].mat
        else:
            n = inverse_powers[generator_index]
            new_letters.append(np.tile([generator_index, 1], (n, 1)))
            value = value @ power_values[generator_index]
    new_letters = np.concatenate(new_letters) if new_letters else np.zeros((0, 2))
    word = Word(new_letters, GroupElement(value, check=False))
    return CompiledWord(
        word=word,
        distance=distance(target, word.value),
        symmetric_word=symmetric_word,
        sk_depth=depth,
        sk_distance=sk_distance,
        inverse_powers=inverse_powers,
    )

import numpy as np
from scipy.spatial import cKDTree

from ..liegroup import GroupElement, batch_distance
from .Word import Word


class EpsilonNet:
    """Immutable collection of words whose values are epsilon-dense in SO(n).

    Behaves as a read-only list of Word (``len``, indexing, iteration). Words
    are stored as a tree of parent pointers so that large nets stay cheap.

    Parameters
    ----------

    generators
      The GeneratorTuple the words are written in.

    alphabet
      List of (generator index, sign) pairs; ``letter_ids`` index into it.

    values
      Array (N, n, n) of the word values.

    parents
      Array (N,) of parent word indices (-1 for the empty word).

    letter_ids
      Array (N,) of the last letter of each word (-1 for the empty word).

    epsilon
      The target density.

    covering_radius
      Covering radius measured on the seeded Haar test panel.

    max_length
      Length of the longest words in the net.
    """

    def __init__(
        self,
        generators,
        alphabet,
        values,
        parents,
        letter_ids,
        epsilon,
        covering_radius,
        max_length,
    ):
        self.generators = generators
        self.alphabet = list(alphabet)
        self.values = np.asarray(values)
        self.parents = np.asarray(parents)
        self.letter_ids = np.asarray(letter_ids)
        for array in (self.values, self.parents, self.letter_ids):
            array.setflags(write=False)
        self.epsilon = epsilon
        self.covering_radius = covering_radius
        self.max_length = max_length
        self._tree = None
        self._imbalances = None
        self._balanced_tree = None

    @property
    def dim(self):
        return self.values.shape[1]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        for index in range(len(self)):
            yield self[index]

    def __getitem__(self, index):
        if index < 0:
            index += len(self)
        value = GroupElement(self.values[index], check=False)
        letters = []
        while index >= 0 and self.letter_ids[index] >= 0:
            letters.append(self.alphabet[self.letter_ids[index]])
            index = self.parents[index]
        return Word(letters[::-1], value)

    @property
    def tree(self):
        if self._tree is None:
            flat = self.values.reshape((len(self), -1))
            self._tree = cKDTree(flat)
        return self._tree

    @property
    def imbalances(self):
        """Array (N, m): sum of the power signs of each generator in each word."""
        if self._imbalances is None:
            m = max([index for (index, _) in self.alphabet], default=-1) + 1
            letter_counts = np.zeros((len(self.alphabet) + 1, m), dtype=np.int64)
            for letter_id, (index, sign) in enumerate(self.alphabet):
                letter_counts[letter_id, index] = sign
            # Parents come before their children, the empty word uses the zero row.
            imbalances = letter_counts[self.letter_ids]
            for word_index in range(len(self)):
                parent = self.parents[word_index]
                if parent >= 0:
                    imbalances[word_index] += imbalances[parent]
            imbalances.setflags(write=False)
            self._imbalances = imbalances
        return self._imbalances

    @property
    def balanced_indices(self):
        """Indices of the balanced words of the net (the empty word included)."""
        return np.flatnonzero(np.all(self.imbalances == 0, axis=1))

    def _balanced_search(self):
        if self._balanced_tree is None:
            indices = self.balanced_indices
            flat = self.values[indices].reshape((len(indices), -1))
            self._balanced_tree = (cKDTree(flat), indices)
        return self._balanced_tree

    def nearest_indices(self, targets, balanced=False):
        """Return (indices, distances) of the nearest net values.

        On SO(3) the chordal distance is a monotonic function of the geodesic
        one, so the KD-tree answer is exact. In higher dimension the 16
        chordally nearest values are re-ranked by geodesic distance. With
        ``balanced`` only the balanced words are searched.
        """
        targets = np.asarray(targets).reshape((-1, self.dim, self.dim))
        if balanced:
            tree, subset = self._balanced_search()
        else:
            tree, subset = self.tree, np.arange(len(self))
        n_candidates = 1 if self.dim <= 3 else min(16, len(subset))
        _, candidates = tree.query(
            targets.reshape((len(targets), -1)), k=n_candidates
        )
        candidates = subset[np.asarray(candidates).reshape((len(targets), n_candidates))]
        distances = batch_distance(self.values[candidates], targets[:, None])
        best = np.argmin(distances, axis=1)
        rows = np.arange(len(targets))
        return candidates[rows, best], distances[rows, best]

    def nearest(self, target, balanced=False):
        """Return (word, distance) for the net word closest to the target."""
        target = getattr(target, "mat", target)
        indices, distances = self.nearest_indices(target, balanced=balanced)
        return self[int(indices[0])], float(distances[0])

    def panel_covering_radius(self, panel):
        """Largest distance from a panel of rotations to the net."""
        _, distances = self.nearest_indices(panel)
        return float(np.max(distances))

    def __repr__(self):
        return "EpsilonNet(words=%d, epsilon=%g, radius=%.4g, max_length=%d)" % (
            len(self),
            self.epsilon,
            self.covering_radius,
            self.max_length,
        )

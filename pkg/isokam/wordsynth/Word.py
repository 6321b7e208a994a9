import numpy as np

from ..liegroup import GroupElement


class Word:
    """A word in the generators of a tuple, with its cached value.

    Parameters
    ----------

    letters
      Sequence of (generator index, power sign) pairs, or an integer array of
      shape (length, 2). The value of the word is the left-to-right product
      of the corresponding generators or inverses.

    value
      The GroupElement the word evaluates to (cached, not recomputed).
    """

    def __init__(self, letters, value):
        letters = np.array(letters, dtype=np.int64).reshape((-1, 2))
        if len(letters) and not np.all(np.abs(letters[:, 1]) == 1):
            raise ValueError("Letter signs must be +1 or -1.")
        letters.setflags(write=False)
        self.letters = letters
        self.value = value

    @classmethod
    def from_letters(cls, letters, generators):
        """Build a word and compute its value from the generator tuple."""
        word = cls(letters, GroupElement.identity(generators.dim))
        word.value = word.recompute(generators)
        return word

    @property
    def length(self):
        return len(self.letters)

    def __len__(self):
        return self.length

    def imbalance(self, n_generators=0):
        """Sum of the power signs of each generator, array of integers.

        The array has at least ``n_generators`` entries.
        """
        if self.length == 0:
            return np.zeros(n_generators, dtype=np.int64)
        totals = np.bincount(
            self.letters[:, 0], weights=self.letters[:, 1], minlength=n_generators
        )
        return totals.astype(np.int64)

    @property
    def is_balanced(self):
        """True iff each generator appears as often with +1 as with -1."""
        return bool(np.all(self.imbalance() == 0))

    @property
    def has_inverses(self):
        return bool(np.any(self.letters[:, 1] < 0))

    def recompute(self, generators):
        """Multiply the letters again, left to right."""
        result = np.eye(generators.dim)
        matrices = generators.matrices
        for index, sign in self.letters:
            matrix = matrices[index]
            result = result @ (matrix if sign > 0 else matrix.T)
        return GroupElement(result, check=False)

    def is_consistent(self, generators, tolerance=1e-10):
        recomputed = self.recompute(generators)
        return np.linalg.norm(recomputed.mat - self.value.mat) <= tolerance

    def inverse(self):
        letters = self.letters[::-1].copy()
        letters[:, 1] *= -1
        return Word(letters, self.value.inverse())

    def concatenate(self, other):
        """Concatenation: the value of w1 + w2 is value(w1) @ value(w2)."""
        letters = np.concatenate([self.letters, other.letters])
        return Word(letters, self.value @ other.value)

    __add__ = concatenate

    def run_length_letters(self):
        """Return the letters as [index, sign, repeat] runs."""
        runs = []
        for index, sign in self.letters:
            if runs and runs[-1][0] == index and runs[-1][1] == sign:
                runs[-1][2] += 1
            else:
                runs.append([int(index), int(sign), 1])
        return runs

    def to_dict(self):
        return {
            "letters": self.run_length_letters(),
            "length": self.length,
            "balanced": self.is_balanced,
        }

    def __repr__(self):
        return "Word(length=%d, balanced=%s)" % (self.length, self.is_balanced)

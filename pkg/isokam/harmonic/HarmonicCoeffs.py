import json

import numpy as np

from .spherical_harmonics import casimir, real_spherical_harmonics

CHANNELS = ("scalar", "vector")


def block_shape(degree, channel):
    return (2 * degree + 1,) if channel == "scalar" else (2 * degree + 1, 3)


def design_matrix(points, l_max):
    """Values of all harmonics of degree <= l_max at the points."""
    return np.hstack(
        [real_spherical_harmonics(degree, points) for degree in range(l_max + 1)]
    )


class HarmonicCoeffs:
    """Band-limited function (or ambient vector field) on S^2 in harmonics.

    Parameters
    ----------

    blocks
      List whose l-th element holds the coefficients of degree l: an array of
      shape (2l+1,) for scalar functions, or (2l+1, 3) for ambient vector
      fields (one column per ambient coordinate, the "vector channels").

    channel
      Either "scalar" or "vector".
    """

    # Let numpy scalars defer to __rmul__.
    __array_ufunc__ = None

    def __init__(self, blocks, channel="scalar"):
        if channel not in CHANNELS:
            raise ValueError("Unknown channel %s, use one of %s" % (channel, CHANNELS))
        self.channel = channel
        checked_blocks = []
        for degree, block in enumerate(blocks):
            block = np.array(block, dtype=float)
            if block.shape != block_shape(degree, channel):
                raise ValueError(
                    "Block %d has shape %s, expected %s"
                    % (degree, block.shape, block_shape(degree, channel))
                )
            block.setflags(write=False)
            checked_blocks.append(block)
        if len(checked_blocks) == 0:
            raise ValueError("At least the degree-0 block is needed.")
        self.blocks = tuple(checked_blocks)
        self.fit_residual = None

    @property
    def l_max(self):
        return len(self.blocks) - 1

    @property
    def degrees(self):
        return range(len(self.blocks))

    @classmethod
    def zeros(cls, l_max, channel="scalar"):
        return cls(
            [np.zeros(block_shape(l, channel)) for l in range(l_max + 1)], channel
        )

    @classmethod
    def basis_function(cls, degree, order, l_max=None):
        """The scalar harmonic Y_{l,m} as coefficients."""
        if abs(order) > degree:
            raise ValueError("Need |m| <= l, got l=%d, m=%d" % (degree, order))
        l_max = degree if l_max is None else l_max
        blocks = [np.zeros(2 * l + 1) for l in range(l_max + 1)]
        blocks[degree][order + degree] = 1.0
        return cls(blocks)

    @classmethod
    def from_flat(cls, flat, l_max, channel="scalar"):
        flat = np.asarray(flat, dtype=float)
        blocks, start = [], 0
        for degree in range(l_max + 1):
            stop = start + 2 * degree + 1
            blocks.append(flat[start:stop])
            start = stop
        return cls(blocks, channel)

    def flat(self):
        """All coefficients stacked along the first axis, degree by degree."""
        return np.concatenate(self.blocks, axis=0)

    @classmethod
    def from_samples(cls, points, values, l_max):
        """Least-squares fit of point samples by harmonics of degree <= l_max.

        ``values`` of shape (P,) give a scalar fit, (P, 3) a vector one. The
        maximal absolute residual at the sample points is stored in
        ``fit_residual``.
        """
        points = np.asarray(points, dtype=float)
        values = np.asarray(values, dtype=float)
        channel = "scalar" if values.ndim == 1 else "vector"
        matrix = design_matrix(points, l_max)
        if matrix.shape[0] < matrix.shape[1]:
            raise ValueError(
                "%d points cannot determine %d coefficients"
                % (matrix.shape[0], matrix.shape[1])
            )
        solution = np.linalg.lstsq(matrix, values, rcond=None)[0]
        coeffs = cls.from_flat(solution, l_max, channel)
        coeffs.fit_residual = float(np.max(np.abs(matrix @ solution - values)))
        return coeffs

    def block(self, degree):
        if degree > self.l_max:
            return np.zeros(block_shape(degree, self.channel))
        return self.blocks[degree]

    def evaluate(self, points):
        """Synthesis at points: array (P,) for scalars, (P, 3) for vectors."""
        points = np.asarray(points, dtype=float).reshape((-1, 3))
        result = 0
        for degree, block in enumerate(self.blocks):
            result = result + real_spherical_harmonics(degree, points) @ block
        return result

    @property
    def mean(self):
        """Average over the sphere (the degree-0 coefficient)."""
        return self.blocks[0][0]

    def sobolev_norm(self, s=0):
        """H^s norm: sqrt of sum over l of (1 + c_l)^s |block_l|^2."""
        total = sum(
            (1 + casimir(degree)) ** s * np.sum(block ** 2)
            for degree, block in enumerate(self.blocks)
        )
        return float(np.sqrt(total))

    def l2_norm(self):
        return self.sobolev_norm(0)

    def map_blocks(self, function):
        """Return new coefficients with ``function(degree, block)`` per block."""
        return HarmonicCoeffs(
            [function(degree, block) for degree, block in enumerate(self.blocks)],
            self.channel,
        )

    def restricted(self, keep_degree):
        """Zero every block whose degree fails the ``keep_degree`` predicate."""
        return self.map_blocks(
            lambda degree, block: block if keep_degree(degree) else np.zeros_like(block)
        )

    def without_mean(self):
        return self.restricted(lambda degree: degree > 0)

    def padded(self, l_max):
        """Same function with zero blocks up to degree ``l_max``."""
        if l_max <= self.l_max:
            return self
        extra = [
            np.zeros(block_shape(degree, self.channel))
            for degree in range(self.l_max + 1, l_max + 1)
        ]
        return HarmonicCoeffs(list(self.blocks) + extra, self.channel)

    def _combine(self, other, operation):
        if not isinstance(other, HarmonicCoeffs):
            return NotImplemented
        if other.channel != self.channel:
            raise ValueError("Cannot combine %s and %s coefficients"
                             % (self.channel, other.channel))
        l_max = max(self.l_max, other.l_max)
        first, second = self.padded(l_max), other.padded(l_max)
        return HarmonicCoeffs(
            [operation(a, b) for a, b in zip(first.blocks, second.blocks)], self.channel
        )

    def __add__(self, other):
        return self._combine(other, np.add)

    def __sub__(self, other):
        return self._combine(other, np.subtract)

    def __neg__(self):
        return self.map_blocks(lambda degree, block: -block)

    def __mul__(self, factor):
        return self.map_blocks(lambda degree, block: factor * block)

    __rmul__ = __mul__

    def allclose(self, other, atol=1e-10):
        difference = self - other
        return all(np.allclose(block, 0, atol=atol) for block in difference.blocks)

    def to_dict(self):
        return {
            "l_max": self.l_max,
            "channel": self.channel,
            "coefficients": {
                str(degree): block.tolist() for degree, block in enumerate(self.blocks)
            },
        }

    @classmethod
    def from_dict(cls, data):
        channel = data.get("channel", "scalar")
        coefficients = data["coefficients"]
        l_max = int(data.get("l_max", max(int(k) for k in coefficients)))
        blocks = [
            coefficients.get(str(degree), np.zeros(block_shape(degree, channel)))
            for degree in range(l_max + 1)
        ]
        return cls(blocks, channel)

    @classmethod
    def from_json_file(cls, path):
        with open(path, "r") as f:
            return cls.from_dict(json.load(f))

    def __repr__(self):
        return "HarmonicCoeffs(l_max=%d, channel=%s)" % (self.l_max, self.channel)

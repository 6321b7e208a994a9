import numpy as np


def write_matrices(matrices):
    """Return the text block format of a list of square matrices.

    Each block is a line with the dimension followed by one line per row,
    numbers printed with 17 significant digits. Blocks are separated by a
    blank line.
    """
    blocks = []
    for matrix in matrices:
        matrix = getattr(matrix, "mat", matrix)
        matrix = np.asarray(matrix, dtype=float)
        lines = ["%d" % matrix.shape[0]]
        lines += [" ".join("%.17g" % value for value in row) for row in matrix]
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def read_matrices(path_or_text):
    """Read the matrix text format from a file path or a string.

    Returns a list of numpy arrays.
    """
    text = path_or_text
    if "\n" not in text:
        with open(path_or_text, "r") as f:
            text = f.read()
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    matrices = []
    index = 0
    while index < len(lines):
        header = lines[index].split()
        if len(header) != 1:
            raise ValueError("Expected a dimension line, got %s" % lines[index])
        dim = int(header[0])
        rows = [
            [float(value) for value in line.split()]
            for line in lines[index + 1 : index + 1 + dim]
        ]
        if len(rows) != dim or any(len(row) != dim for row in rows):
            raise ValueError("Malformed %dx%d matrix block" % (dim, dim))
        matrices.append(np.array(rows))
        index += 1 + dim
    return matrices

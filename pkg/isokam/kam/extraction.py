"""Extraction of the isometry closest to a near-isometric map."""

import numpy as np
from scipy.optimize import minimize

from ..liegroup import GroupElement, project_to_group, exp_so
from ..harmonic import haar_sphere_points
from ..rds import PerturbedMap, geodesic_distance, tangent_frames
from .errors import TooFarFromIsometry
from .ErrorField import c0_distance

EXACT_TOLERANCE = 1e-12
N_ACTIVE_POINTS = 64
N_REFINEMENTS = 3


def _as_map(f):
    if isinstance(f, GroupElement):
        return PerturbedMap(f)
    return f


def plane_rotation_between(a, b):
    """Rotation of the plane span(a, b) taking the unit vector a to b.

    It is the identity on the orthogonal complement of the plane.
    """
    cosine = np.clip(a @ b, -1, 1)
    normal = b - cosine * a
    sine = np.linalg.norm(normal)
    if sine < 1e-300:
        return np.eye(len(a))
    normal = normal / sine
    return (
        np.eye(len(a))
        + sine * (np.outer(normal, a) - np.outer(a, normal))
        + (cosine - 1) * (np.outer(a, a) + np.outer(normal, normal))
    )


def constructive_isometry(f, guess, points):
    """Isometry R = guess R_1 R_2 built from the most displaced point.

    With h = guess^-1 f and x* the panel point moved the most by h, R_1
    takes x* to h(x*) in the plane they span, and R_2 fixes x* and acts on
    its tangent space as the orthogonal part of the differential of
    R_1^-1 h. On the sphere every such linear isometry extends.

    Returns (R, maximal displacement of h).
    """
    guess_matrix = guess.mat
    images = f.apply(points) @ guess_matrix
    displacements = geodesic_distance(images, points)
    index = int(np.argmax(displacements))
    largest = float(displacements[index])
    if largest >= np.pi / 2:
        raise TooFarFromIsometry(largest, np.pi / 2)
    x = points[index]
    first = plane_rotation_between(x, images[index])
    frame = tangent_frames(x[None])[0]
    pushed = first.T @ guess_matrix.T @ f.differential(x[None], frame[None])[0]
    tangent_part = project_to_group(frame.T @ pushed)
    second = np.outer(x, x) + frame @ tangent_part.mat @ frame.T
    return project_to_group(guess_matrix @ first @ second), largest


def _skew_from_coordinates(coordinates, n):
    skew = np.zeros((n, n))
    upper = np.triu_indices(n, 1)
    skew[upper] = coordinates
    return skew - skew.T


def refine_isometry(f, R, points, n_active=N_ACTIVE_POINTS, n_rounds=N_REFINEMENTS):
    """Locally minimize the panel C0 distance max_x d(Q x, f(x)) near R.

    Each round solves the epigraph problem min t subject to
    d(R exp(A) x_j, f(x_j)) <= t on the most displaced points x_j, with
    scipy's SLSQP, and keeps the result if the distance over the whole
    panel decreases.
    """
    n = R.dim
    images = f.apply(points)
    n_coordinates = n * (n - 1) // 2

    def panel_distances(matrix):
        return geodesic_distance(points @ matrix.T, images)

    best = R.mat
    best_distance = float(np.max(panel_distances(best)))
    for _ in range(n_rounds):
        active = np.argsort(-panel_distances(best))[:n_active]
        active_points, active_images = points[active], images[active]
        start = best

        def moved(coordinates):
            rotation = start @ exp_so(_skew_from_coordinates(coordinates, n)).mat
            return geodesic_distance(active_points @ rotation.T, active_images)

        initial = np.concatenate([np.zeros(n_coordinates), [best_distance]])
        solution = minimize(
            lambda z: z[-1],
            initial,
            jac=lambda z: np.concatenate([np.zeros(n_coordinates), [1.0]]),
            constraints=[{"type": "ineq", "fun": lambda z: z[-1] - moved(z[:-1])}],
            method="SLSQP",
            options=dict(ftol=1e-14, maxiter=200),
        )
        candidate = project_to_group(
            start @ exp_so(_skew_from_coordinates(solution.x[:-1], n)).mat
        ).mat
        distance = float(np.max(panel_distances(candidate)))
        if distance >= best_distance:
            break
        best, best_distance = candidate, distance
    return GroupElement(best)


def extract_isometry(f, guess, n_points=10 ** 4, seed=0, refine=True):
    """The isometry R closest to f in C0 distance, starting from a guess.

    The constructive estimate guess R_1 R_2 is returned as is when it
    matches f to 1e-12 on the panel (f is then that isometry); otherwise it
    is refined by a local minimax over nearby isometries.

    Parameters
    ----------

    f
      Sphere map (or GroupElement) close to ``guess``.

    guess
      GroupElement with d_C0(guess^-1 f, Id) < pi/2.

    n_points, seed
      The seeded Haar panel the distances are measured on.

    refine
      Whether to run the local minimax refinement.
    """
    f = _as_map(f)
    if not isinstance(guess, GroupElement):
        guess = GroupElement(guess)
    points = haar_sphere_points(f.dim + 1, n_points, seed)
    R, _ = constructive_isometry(f, guess, points)
    if not refine or c0_distance(f, R, points=points) <= EXACT_TOLERANCE:
        return R
    return refine_isometry(f, R, points)

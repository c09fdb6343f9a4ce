"""Triangle meshes of the catenoid surface in the Poincare ball.

The surface of revolution is sampled from its generating curve, swept around
the vertical axis of the half-space chart, and mapped into the unit ball so
the result can be dropped into any mesh viewer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .catenoid import sample_catenary
from .quadrature import Tolerance

__all__ = [
    "MeshData",
    "MeshParams",
    "ball_from_halfspace",
    "build_mesh",
    "export_mesh",
    "halfspace_from_ball",
    "halfspace_point",
    "write_obj",
]


@dataclass(frozen=True)
class MeshParams:
    """Sampling resolution for one catenoid surface.

    n_profile counts samples of the generating curve from the neck out to
    y_max on one side; the full profile mirrors them through the neck.
    n_angle is the number of angular steps of the sweep.
    """

    neck_distance: float
    y_max: float
    n_profile: int
    n_angle: int

    def __post_init__(self) -> None:
        if not self.neck_distance > 0.0:
            raise ValueError(f"neck distance must be positive, got {self.neck_distance}")
        if not self.y_max > self.neck_distance:
            raise ValueError(
                f"y_max must exceed the neck distance, got {self.y_max} "
                f"<= {self.neck_distance}"
            )
        if self.n_profile < 2:
            raise ValueError(f"need at least 2 profile samples, got {self.n_profile}")
        if self.n_angle < 3:
            raise ValueError(f"need at least 3 angular steps, got {self.n_angle}")


@dataclass(eq=False)
class MeshData:
    """Vertex/face soup in ball coordinates, with the parameters that built it."""

    params: MeshParams
    vertices: list[tuple[float, float, float]] = field(default_factory=list)
    faces: list[tuple[int, int, int]] = field(default_factory=list)


def halfspace_point(x: float, y: float, theta: float) -> tuple[float, float, float]:
    """Chart point of the swept surface in upper half-space coordinates.

    The generating curve point (x, y) sits at hyperbolic distance y from the
    axis on the sphere of Euclidean radius exp(x) about the chart origin;
    theta rotates it about the axis.
    """
    radius = math.exp(x)
    horizontal = radius * math.tanh(y)
    return (
        horizontal * math.cos(theta),
        horizontal * math.sin(theta),
        radius / math.cosh(y),
    )


def ball_from_halfspace(x1: float, x2: float, x3: float) -> tuple[float, float, float]:
    """Map the upper half-space x3 > 0 onto the unit ball.

    The boundary plane x3 = 0 goes to the lower hemisphere, the point
    (0, 0, 1) to the ball center, and the vertical axis to the diameter
    along the first ball coordinate.
    """
    den = x1 * x1 + x2 * x2 + (x3 + 1.0) * (x3 + 1.0)
    return (
        (x1 * x1 + x2 * x2 + x3 * x3 - 1.0) / den,
        2.0 * x1 / den,
        2.0 * x2 / den,
    )


def halfspace_from_ball(u: float, v: float, w: float) -> tuple[float, float, float]:
    """Inverse of ball_from_halfspace; defined on the open unit ball only."""
    norm_sq = u * u + v * v + w * w
    if not norm_sq < 1.0:
        raise ValueError(f"point with |p|^2 = {norm_sq} is not inside the unit ball")
    den = v * v + w * w + (1.0 - u) * (1.0 - u)
    return (
        2.0 * v / den,
        2.0 * w / den,
        (1.0 - norm_sq) / den,
    )


def _profile_rows(params: MeshParams, tol: Tolerance) -> list[tuple[float, float]]:
    """Full generating curve (x, y) rows: mirrored arm, neck, outgoing arm."""
    sample = sample_catenary(
        params.neck_distance, params.y_max, params.n_profile, tol
    )
    positive = list(sample.points)
    mirrored = [(-x, y) for x, y in positive[1:]]
    mirrored.reverse()
    return mirrored + positive


def build_mesh(params: MeshParams, tol: Tolerance | None = None) -> MeshData:
    """Triangulate the catenoid with the given resolution.

    Vertices are laid out row-major: profile row j (from the mirrored far
    end through the neck to y_max) times angular step m, at index
    j * n_angle + m.  Each quad of the sweep lattice is split along its
    shorter diagonal.
    """
    if tol is None:
        tol = Tolerance()
    rows = _profile_rows(params, tol)
    n_angle = params.n_angle
    step = 2.0 * math.pi / n_angle

    mesh = MeshData(params=params)
    for x, y in rows:
        for m in range(n_angle):
            mesh.vertices.append(ball_from_halfspace(*halfspace_point(x, y, m * step)))

    def index(j: int, m: int) -> int:
        return j * n_angle + m % n_angle

    def gap_sq(i: int, k: int) -> float:
        p, q = mesh.vertices[i], mesh.vertices[k]
        return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2 + (p[2] - q[2]) ** 2

    for j in range(len(rows) - 1):
        for m in range(n_angle):
            i00 = index(j, m)
            i01 = index(j, m + 1)
            i10 = index(j + 1, m)
            i11 = index(j + 1, m + 1)
            if gap_sq(i00, i11) <= gap_sq(i01, i10):
                mesh.faces.append((i00, i01, i11))
                mesh.faces.append((i00, i11, i10))
            else:
                mesh.faces.append((i00, i01, i10))
                mesh.faces.append((i01, i11, i10))
    return mesh


def write_obj(mesh: MeshData, path: str) -> None:
    """Write the mesh as ASCII OBJ with 1-based face indices and LF endings."""
    with open(path, "w", newline="\n") as handle:
        for u, v, w in mesh.vertices:
            handle.write(f"v {u:.12g} {v:.12g} {w:.12g}\n")
        for i, j, k in mesh.faces:
            handle.write(f"f {i + 1} {j + 1} {k + 1}\n")


def export_mesh(
    a: float,
    y_max: float,
    n_profile: int,
    n_angle: int,
    out: str,
    tol: Tolerance | None = None,
) -> MeshData:
    """Build the catenoid mesh and write it to an OBJ file."""
    mesh = build_mesh(MeshParams(a, y_max, n_profile, n_angle), tol)
    write_obj(mesh, out)
    return mesh

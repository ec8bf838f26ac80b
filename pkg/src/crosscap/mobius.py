"""Swept immersed Moebius band with boundary T(2p, q), as a triangle mesh.

Every meridian disk of the standard solid torus meets the boundary knot in
2p evenly spaced points; joining antipodal pairs with p diameters and
letting the disk angle advance with the sweep angle produces a band whose
single boundary curve is the (2p, q) torus knot.  The p diameters of one
disk meet only at its center, so the band is embedded away from the core
circle of the solid torus, and all self-intersections of a faithful mesh
must stay within discretization distance of that core.

The mesh keeps abstract-domain coordinates (slice index, chord index,
position along the chord) alongside the ambient coordinates, because the
surface is immersed: distinct domain points may share an ambient point.
Vertices are identified only at the sweep wraparound, where chord j at the
full angle matches chord (j+q) mod p at angle zero with the induced
endpoint map.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import gcd, pi
from typing import Optional

import numpy as np

DEFAULT_MAX_TRIANGLES = 2_000_000
MAX_MESH_ENV = "CROSSCAP_MAX_MESH"


class MeshParameterError(ValueError):
    """Sweep parameters violate an arithmetic or budget constraint."""


class MeshResolutionError(MeshParameterError):
    """Angular resolution too small to separate adjacent boundary points."""


class MeshStructureError(ValueError):
    """Mesh is not a two-manifold with boundary in the abstract domain."""


def max_triangle_budget() -> int:
    raw = os.environ.get(MAX_MESH_ENV)
    if raw is None:
        return DEFAULT_MAX_TRIANGLES
    try:
        value = int(raw)
    except ValueError:
        raise MeshParameterError(f"{MAX_MESH_ENV} must be an integer, got {raw!r}")
    if value <= 0:
        raise MeshParameterError(f"{MAX_MESH_ENV} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class SweepParams:
    """Resolution and geometry of the swept band.

    p is half the boundary winding (the number of chords per disk), q the
    meridional coefficient with gcd(2p, q) = 1, theta_steps the number of
    sweep slices, chord_steps the number of samples along each chord.
    """

    p: int
    q: int
    theta_steps: int = 128
    chord_steps: int = 8
    ring_radius: float = 2.0
    tube_radius: float = 1.0

    @property
    def triangle_count(self) -> int:
        return 2 * self.theta_steps * self.p * (self.chord_steps - 1)


def validate_sweep(s: SweepParams) -> None:
    if s.p < 1:
        raise MeshParameterError(f"p must be >= 1, got {s.p}")
    if s.q == 0:
        raise MeshParameterError("q must be nonzero")
    if gcd(2 * s.p, abs(s.q)) != 1:
        raise MeshParameterError(
            f"gcd(2p, q) must be 1, got gcd({2 * s.p}, {abs(s.q)}) != 1"
        )
    if s.theta_steps < 8:
        raise MeshParameterError(f"theta_steps must be >= 8, got {s.theta_steps}")
    if s.chord_steps < 2:
        raise MeshParameterError(f"chord_steps must be >= 2, got {s.chord_steps}")
    if not (0 < s.tube_radius < s.ring_radius):
        raise MeshParameterError(
            f"need 0 < tube_radius < ring_radius, got {s.tube_radius}, {s.ring_radius}"
        )
    budget = max_triangle_budget()
    if s.triangle_count > budget:
        raise MeshParameterError(
            f"mesh would have {s.triangle_count} triangles, over the budget {budget}"
        )


def chord_successor(p: int, q: int, j: int) -> tuple[int, bool]:
    """Chord that continues chord j across the sweep wraparound.

    Returns (next chord index, flip), where flip means the chord comes back
    with its endpoints exchanged.
    """
    nxt = (j + q) % (2 * p)
    if nxt < p:
        return nxt, False
    return nxt - p, True


def chord_cycle(p: int, q: int) -> tuple[int, bool]:
    """Follow chord 0 around the sweep until it first returns.

    Returns (number of sweeps, net endpoint exchange).  A single Moebius
    band needs the cycle to visit all p chords and come back flipped.
    """
    j, flipped, steps = 0, False, 0
    while True:
        j, f = chord_successor(p, q, j)
        flipped ^= f
        steps += 1
        if j == 0:
            return steps, flipped


@dataclass(frozen=True, eq=False)
class ImmersedMobiusMesh:
    """Triangulated immersed band with ambient and domain data per vertex.

    triangle_columns holds, per triangle, the index of its slice-to-slice
    column along the unrolled strip of length strip_length = p*theta_steps;
    circular distance along the strip is the abstract-domain distance used
    to separate genuine double points from shared-edge contact.
    """

    vertices: np.ndarray        # (V, 3) float64 ambient coordinates
    domain_theta: np.ndarray    # (V,) int32 slice index
    domain_chord: np.ndarray    # (V,) int32 chord index
    domain_pos: np.ndarray      # (V,) float64 position along the chord in [-1, 1]
    triangles: np.ndarray       # (F, 3) int32
    boundary_edges: np.ndarray  # (B, 2) int32, derived from triangle incidence
    triangle_columns: np.ndarray  # (F,) int32
    strip_length: int

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def triangle_count(self) -> int:
        return len(self.triangles)


def _sorted_edges_with_counts(triangles: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    edges = np.concatenate(
        [triangles[:, [0, 1]], triangles[:, [1, 2]], triangles[:, [2, 0]]]
    )
    edges = np.sort(edges, axis=1)
    return np.unique(edges, axis=0, return_counts=True)


def build_mobius(s: SweepParams) -> ImmersedMobiusMesh:
    """Construct the swept band mesh for the given parameters.

    Boundary samples of slice i sit at disk angles (2*pi*j + q*theta_i)/(2p);
    chord j joins the antipodal pair (j, j+p) and is sampled uniformly in
    the signed position parameter.  A disk point at radius rho and angle phi
    embeds at ((R + rho*r*cos phi)*cos theta, (R + rho*r*cos phi)*sin theta,
    rho*r*sin phi).
    """
    validate_sweep(s)
    p, q, n_theta, n_chord = s.p, s.q, s.theta_steps, s.chord_steps
    if n_theta < 4 * p * abs(q):
        raise MeshResolutionError(
            f"theta_steps={n_theta} cannot separate adjacent boundary points; "
            f"need at least 4*p*|q| = {4 * p * abs(q)}"
        )
    big_r, small_r = s.ring_radius, s.tube_radius

    i_grid, j_grid, m_grid = np.meshgrid(
        np.arange(n_theta), np.arange(p), np.arange(n_chord), indexing="ij"
    )
    i_flat = i_grid.reshape(-1)
    j_flat = j_grid.reshape(-1)
    m_flat = m_grid.reshape(-1)

    theta = 2.0 * pi * i_flat / n_theta
    alpha = (2.0 * pi * j_flat + q * theta) / (2.0 * p)
    pos = -1.0 + 2.0 * m_flat / (n_chord - 1)
    disk_x = pos * np.cos(alpha)
    disk_y = pos * np.sin(alpha)
    ring = big_r + small_r * disk_x
    vertices = np.stack(
        [ring * np.cos(theta), ring * np.sin(theta), small_r * disk_y], axis=1
    )

    def vid(i: np.ndarray, j: np.ndarray, m: np.ndarray) -> np.ndarray:
        return (i * p + j) * n_chord + m

    # Vertex grid of the "next" slice, using the wraparound identification
    # for i = n_theta - 1: chord j continues as chord_successor(p, q, j),
    # with the sample order reversed when the chord comes back flipped.
    succ = np.array([chord_successor(p, q, j) for j in range(p)], dtype=np.int64)
    succ_chord, succ_flip = succ[:, 0], succ[:, 1]

    cols_i, cols_j = np.meshgrid(np.arange(n_theta), np.arange(p), indexing="ij")
    cols_i = cols_i.reshape(-1)
    cols_j = cols_j.reshape(-1)

    m_row = np.arange(n_chord)

    def next_vid(i: np.ndarray, j: np.ndarray, m: np.ndarray) -> np.ndarray:
        wrap = i == n_theta - 1
        j2 = np.where(wrap, succ_chord[j], j)
        m2 = np.where(wrap & (succ_flip[j] == 1), n_chord - 1 - m, m)
        i2 = np.where(wrap, 0, i + 1)
        return vid(i2, j2, m2)

    quads_i = np.repeat(cols_i, n_chord - 1)
    quads_j = np.repeat(cols_j, n_chord - 1)
    quads_m = np.tile(m_row[:-1], len(cols_i))

    corner_a = vid(quads_i, quads_j, quads_m)
    corner_b = next_vid(quads_i, quads_j, quads_m)
    corner_c = vid(quads_i, quads_j, quads_m + 1)
    corner_d = next_vid(quads_i, quads_j, quads_m + 1)

    # Fixed diagonal rule: split each quad from its (slice i, sample m)
    # corner to the (slice i+1, sample m+1) corner.
    tri_1 = np.stack([corner_a, corner_b, corner_d], axis=1)
    tri_2 = np.stack([corner_a, corner_d, corner_c], axis=1)
    triangles = np.empty((2 * len(corner_a), 3), dtype=np.int32)
    triangles[0::2] = tri_1
    triangles[1::2] = tri_2

    # Strip columns: pass k of the sweep runs along chord (k*q) mod p, so
    # chord j belongs to pass j*q^{-1} mod p.
    if p == 1:
        pass_of_chord = np.zeros(1, dtype=np.int64)
    else:
        q_inv = pow(q % p, -1, p)
        pass_of_chord = (np.arange(p) * q_inv) % p
    column_of = pass_of_chord[quads_j] * n_theta + quads_i
    triangle_columns = np.repeat(column_of, 2).astype(np.int32)

    edges, counts = _sorted_edges_with_counts(triangles)
    boundary_edges = edges[counts == 1].astype(np.int32)

    return ImmersedMobiusMesh(
        vertices=vertices,
        domain_theta=i_flat.astype(np.int32),
        domain_chord=j_flat.astype(np.int32),
        domain_pos=pos,
        triangles=triangles,
        boundary_edges=boundary_edges,
        triangle_columns=triangle_columns,
        strip_length=p * n_theta,
    )


@dataclass(frozen=True)
class MeshVerificationReport:
    euler_characteristic: int
    boundary_component_count: int
    orientable: bool
    boundary_class: tuple[int, int]
    max_offcore_selfintersection_distance: float
    core_multiplicity: int

    def to_dict(self) -> dict:
        return {
            "euler_characteristic": self.euler_characteristic,
            "boundary_component_count": self.boundary_component_count,
            "orientable": self.orientable,
            "boundary_class": list(self.boundary_class),
            "max_offcore_selfintersection_distance": (
                self.max_offcore_selfintersection_distance
            ),
            "core_multiplicity": self.core_multiplicity,
        }


def _check_structure(mesh: ImmersedMobiusMesh) -> tuple[np.ndarray, np.ndarray]:
    tris = mesh.triangles
    if len(tris) and (tris.min() < 0 or tris.max() >= mesh.vertex_count):
        raise MeshStructureError("triangle index out of range")
    degenerate = (
        (tris[:, 0] == tris[:, 1])
        | (tris[:, 1] == tris[:, 2])
        | (tris[:, 2] == tris[:, 0])
    )
    if degenerate.any():
        raise MeshStructureError("degenerate triangle (repeated vertex)")
    edges, counts = _sorted_edges_with_counts(tris)
    if len(counts) and counts.max() > 2:
        raise MeshStructureError("edge shared by more than two triangles")
    return edges, counts


def boundary_cycles(mesh: ImmersedMobiusMesh) -> list[list[int]]:
    """Boundary edge cycles as ordered vertex lists."""
    neighbors: dict[int, list[int]] = {}
    for a, b in mesh.boundary_edges:
        neighbors.setdefault(int(a), []).append(int(b))
        neighbors.setdefault(int(b), []).append(int(a))
    for v, around in neighbors.items():
        if len(around) != 2:
            raise MeshStructureError(
                f"boundary vertex {v} has {len(around)} boundary edges, expected 2"
            )
    cycles = []
    remaining = set(neighbors)
    while remaining:
        start = min(remaining)
        cycle = [start]
        remaining.discard(start)
        prev, cur = None, start
        while True:
            a, b = neighbors[cur]
            nxt = b if a == prev else a
            if nxt == start:
                break
            cycle.append(nxt)
            remaining.discard(nxt)
            prev, cur = cur, nxt
        cycles.append(cycle)
    return cycles


def euler_characteristic(mesh: ImmersedMobiusMesh) -> int:
    """V - E + F over the vertices actually referenced by triangles."""
    edges, _ = _sorted_edges_with_counts(mesh.triangles)
    vertex_count = len(np.unique(mesh.triangles))
    return int(vertex_count - len(edges) + len(mesh.triangles))


def is_orientable(mesh: ImmersedMobiusMesh) -> bool:
    """Propagate a coherent orientation across shared edges; a contradiction
    anywhere means the abstract surface is nonorientable."""
    edge_to_tris: dict[tuple[int, int], list[tuple[int, bool]]] = {}
    tris = mesh.triangles
    for t in range(len(tris)):
        a, b, c = (int(v) for v in tris[t])
        for u, v in ((a, b), (b, c), (c, a)):
            key = (u, v) if u < v else (v, u)
            edge_to_tris.setdefault(key, []).append((t, u < v))

    flags = np.zeros(len(tris), dtype=np.int8)
    tri_edges: list[list[tuple[tuple[int, int], bool]]] = [[] for _ in range(len(tris))]
    for key, hits in edge_to_tris.items():
        for t, forward in hits:
            tri_edges[t].append((key, forward))

    for seed in range(len(tris)):
        if flags[seed]:
            continue
        flags[seed] = 1
        stack = [seed]
        while stack:
            t = stack.pop()
            for key, forward in tri_edges[t]:
                for other, other_forward in edge_to_tris[key]:
                    if other == t:
                        continue
                    # Consistently oriented neighbors traverse a shared
                    # edge in opposite directions.
                    needed = -flags[t] if forward == other_forward else flags[t]
                    if flags[other] == 0:
                        flags[other] = needed
                        stack.append(other)
                    elif flags[other] != needed:
                        return False
    return True


def _wrap_angle(delta: np.ndarray) -> np.ndarray:
    return (delta + pi) % (2.0 * pi) - pi


def boundary_winding_angles(
    mesh: ImmersedMobiusMesh, ring_radius: float
) -> tuple[float, float]:
    """Total longitudinal and meridional angle along the boundary polyline.

    Each cycle is traversed in the direction of positive longitudinal
    winding; for the swept band the totals are 2*pi*2p and 2*pi*q up to
    discretization roundoff.
    """
    total_theta = 0.0
    total_phi = 0.0
    for cycle in boundary_cycles(mesh):
        pts = mesh.vertices[np.array(cycle, dtype=np.int64)]
        theta = np.arctan2(pts[:, 1], pts[:, 0])
        radial = np.hypot(pts[:, 0], pts[:, 1]) - ring_radius
        phi = np.arctan2(pts[:, 2], radial)
        d_theta = _wrap_angle(np.diff(theta, append=theta[:1]))
        d_phi = _wrap_angle(np.diff(phi, append=phi[:1]))
        cycle_theta = float(d_theta.sum())
        cycle_phi = float(d_phi.sum())
        if cycle_theta < 0:
            cycle_theta, cycle_phi = -cycle_theta, -cycle_phi
        total_theta += cycle_theta
        total_phi += cycle_phi
    return total_theta, total_phi


def max_edge_length(mesh: ImmersedMobiusMesh) -> float:
    edges, _ = _sorted_edges_with_counts(mesh.triangles)
    diffs = mesh.vertices[edges[:, 0]] - mesh.vertices[edges[:, 1]]
    return float(np.sqrt((diffs * diffs).sum(axis=1)).max())


def _core_multiplicity(mesh: ImmersedMobiusMesh, s: SweepParams) -> int:
    """Count, per slice, the chords whose polyline passes through the core
    point of that slice; the sweep puts every chord through the core."""
    n_theta, p, n_chord = s.theta_steps, s.p, s.chord_steps
    order = np.lexsort((mesh.domain_pos, mesh.domain_chord, mesh.domain_theta))
    pts = mesh.vertices[order].reshape(n_theta, p, n_chord, 3)
    seg_a = pts[:, :, :-1, :]
    seg_b = pts[:, :, 1:, :]
    theta = 2.0 * pi * np.arange(n_theta) / n_theta
    core = np.stack(
        [s.ring_radius * np.cos(theta), s.ring_radius * np.sin(theta),
         np.zeros(n_theta)],
        axis=1,
    )[:, None, None, :]
    seg = seg_b - seg_a
    to_core = core - seg_a
    seg_len2 = (seg * seg).sum(axis=-1)
    t_par = np.clip((to_core * seg).sum(axis=-1) / seg_len2, 0.0, 1.0)
    closest = seg_a + seg * t_par[..., None]
    dist = np.sqrt(((closest - core) ** 2).sum(axis=-1))
    chord_dist = dist.min(axis=2)
    eps = 1e-9 * max(1.0, s.ring_radius)
    counts = (chord_dist < eps).sum(axis=1)
    if counts.min() != counts.max():
        raise MeshStructureError(
            f"core sheet count varies across slices: {counts.min()}..{counts.max()}"
        )
    return int(counts[0])


def _strip_distance(c1: np.ndarray, c2: np.ndarray, length: int) -> np.ndarray:
    raw = np.abs(c1 - c2)
    return np.minimum(raw, length - raw)


def _segment_triangle_points(
    p0: np.ndarray, p1: np.ndarray, tri: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Batched segment-triangle crossing test; returns (mask, points)."""
    d = p1 - p0
    e1 = tri[:, 1] - tri[:, 0]
    e2 = tri[:, 2] - tri[:, 0]
    h = np.cross(d, e2)
    det = np.einsum("ij,ij->i", e1, h)
    ok = np.abs(det) > 1e-14
    safe_det = np.where(ok, det, 1.0)
    inv = 1.0 / safe_det
    svec = p0 - tri[:, 0]
    u = np.einsum("ij,ij->i", svec, h) * inv
    qv = np.cross(svec, e1)
    v = np.einsum("ij,ij->i", d, qv) * inv
    t = np.einsum("ij,ij->i", e2, qv) * inv
    eps = 1e-10
    mask = (
        ok
        & (u >= -eps)
        & (v >= -eps)
        & (u + v <= 1.0 + eps)
        & (t >= -eps)
        & (t <= 1.0 + eps)
    )
    return mask, p0 + d * t[:, None]


def _candidate_pairs(mesh: ImmersedMobiusMesh, n_theta: int) -> np.ndarray:
    """Index pairs of triangles that are domain-far yet possibly touching.

    Each triangle occupies the angular wedge of its strip column, so only
    same-sector or adjacent-sector pairs can meet in space; domain-adjacent
    pairs (circular strip distance <= 1) share mesh edges by construction
    and are excluded.
    """
    sector = mesh.triangle_columns % n_theta
    by_sector = [np.where(sector == d)[0] for d in range(n_theta)]
    chunks = []
    for d in range(n_theta):
        own = by_sector[d]
        if len(own) > 1:
            ia, ib = np.triu_indices(len(own), k=1)
            chunks.append(np.stack([own[ia], own[ib]], axis=1))
        nxt = by_sector[(d + 1) % n_theta]
        if n_theta > 1 and len(own) and len(nxt):
            ia, ib = np.meshgrid(own, nxt, indexing="ij")
            chunks.append(np.stack([ia.reshape(-1), ib.reshape(-1)], axis=1))
    if not chunks:
        return np.empty((0, 2), dtype=np.int64)
    pairs = np.concatenate(chunks)
    cols = mesh.triangle_columns
    far = _strip_distance(cols[pairs[:, 0]], cols[pairs[:, 1]], mesh.strip_length) > 1
    return pairs[far]


def self_intersection_points(
    mesh: ImmersedMobiusMesh, s: SweepParams, batch: int = 65536
) -> np.ndarray:
    """Ambient points where triangles from different domain neighborhoods
    cross, as an (n, 3) array.  Aggregation is order-independent."""
    pairs = _candidate_pairs(mesh, s.theta_steps)
    if not len(pairs):
        return np.empty((0, 3))
    coords = mesh.vertices[mesh.triangles]

    lo = coords.min(axis=1)
    hi = coords.max(axis=1)
    margin = 1e-12
    a_idx, b_idx = pairs[:, 0], pairs[:, 1]
    overlap = np.all(
        (lo[a_idx] <= hi[b_idx] + margin) & (lo[b_idx] <= hi[a_idx] + margin), axis=1
    )
    pairs = pairs[overlap]
    if not len(pairs):
        return np.empty((0, 3))

    found = []
    for start in range(0, len(pairs), batch):
        chunk = pairs[start:start + batch]
        tri_a = coords[chunk[:, 0]]
        tri_b = coords[chunk[:, 1]]
        for probe, target in ((tri_a, tri_b), (tri_b, tri_a)):
            for e0, e1 in ((0, 1), (1, 2), (2, 0)):
                mask, pts = _segment_triangle_points(
                    probe[:, e0], probe[:, e1], target
                )
                if mask.any():
                    found.append(pts[mask])
    if not found:
        return np.empty((0, 3))
    return np.concatenate(found)


def distance_to_core_circle(points: np.ndarray, ring_radius: float) -> np.ndarray:
    """Distance from each point to the circle x^2 + y^2 = R^2, z = 0."""
    if not len(points):
        return np.empty(0)
    radial = np.hypot(points[:, 0], points[:, 1]) - ring_radius
    return np.hypot(radial, points[:, 2])


def verify_mesh(
    mesh: ImmersedMobiusMesh, s: SweepParams, tol: Optional[float] = None
) -> MeshVerificationReport:
    """Certify the band's topology and the location of its double points.

    Checks run on the abstract mesh (Euler characteristic, boundary cycle
    count, orientation propagation) and on the ambient geometry (boundary
    winding class, sheet count through the core, self-intersection scan).
    With tol=None the tolerance defaults to three times the longest mesh
    edge, which absorbs exactly the discretization spread of double points
    that the smooth construction keeps on the core circle.
    """
    if tol is not None and tol <= 0:
        raise ValueError("tol must be positive")
    expected_vertices = s.theta_steps * s.p * s.chord_steps
    if mesh.vertex_count != expected_vertices:
        raise MeshStructureError(
            f"mesh has {mesh.vertex_count} vertices, parameters imply "
            f"{expected_vertices}"
        )
    edges, counts = _check_structure(mesh)

    derived_boundary = edges[counts == 1]
    stored = {tuple(e) for e in np.sort(mesh.boundary_edges, axis=1).tolist()}
    if stored != {tuple(e) for e in derived_boundary.tolist()}:
        raise MeshStructureError("stored boundary edges disagree with incidence")

    euler = euler_characteristic(mesh)

    cycles = boundary_cycles(mesh)
    theta_total, phi_total = boundary_winding_angles(mesh, s.ring_radius)
    longitudinal = int(round(theta_total / (2.0 * pi)))
    meridional = int(round(phi_total / (2.0 * pi)))

    if tol is None:
        tol = 3.0 * max_edge_length(mesh)
    points = self_intersection_points(mesh, s)
    distances = distance_to_core_circle(points, s.ring_radius)
    max_offcore = float(distances.max()) if len(distances) else 0.0

    return MeshVerificationReport(
        euler_characteristic=int(euler),
        boundary_component_count=len(cycles),
        orientable=is_orientable(mesh),
        boundary_class=(longitudinal, meridional),
        max_offcore_selfintersection_distance=max_offcore,
        core_multiplicity=_core_multiplicity(mesh, s),
    )


# --- mesh file formats ------------------------------------------------------


def export_mesh(mesh: ImmersedMobiusMesh, format: str) -> str:
    """Serialize to OFF or OBJ text (9-decimal coordinates)."""
    fmt = format.lower()
    verts = mesh.vertices
    tris = mesh.triangles
    if fmt == "off":
        lines = ["OFF", f"{len(verts)} {len(tris)} 0"]
        lines.extend(f"{v[0]:.9f} {v[1]:.9f} {v[2]:.9f}" for v in verts)
        lines.extend(f"3 {t[0]} {t[1]} {t[2]}" for t in tris)
    elif fmt == "obj":
        lines = [f"v {v[0]:.9f} {v[1]:.9f} {v[2]:.9f}" for v in verts]
        lines.extend(f"f {t[0] + 1} {t[1] + 1} {t[2] + 1}" for t in tris)
    else:
        raise ValueError(f"unknown mesh format {format!r}")
    return "\n".join(lines) + "\n"


def parse_mesh_text(text: str) -> tuple[np.ndarray, np.ndarray]:
    """Read OFF or OBJ text back into (vertices, triangles) arrays."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty mesh file")
    if lines[0] == "OFF":
        if len(lines) < 2:
            raise ValueError("truncated OFF header")
        counts = lines[1].split()
        n_verts, n_faces = int(counts[0]), int(counts[1])
        verts = [[float(x) for x in ln.split()] for ln in lines[2:2 + n_verts]]
        faces = []
        for ln in lines[2 + n_verts:2 + n_verts + n_faces]:
            parts = ln.split()
            if parts[0] != "3":
                raise ValueError("only triangle faces are supported")
            faces.append([int(x) for x in parts[1:4]])
        if len(verts) != n_verts or len(faces) != n_faces:
            raise ValueError("OFF body shorter than its header counts")
    else:
        verts, faces = [], []
        for ln in lines:
            parts = ln.split()
            if parts[0] == "v":
                verts.append([float(x) for x in parts[1:4]])
            elif parts[0] == "f":
                faces.append([int(x.split("/")[0]) - 1 for x in parts[1:4]])
        if not verts or not faces:
            raise ValueError("not an OFF or OBJ triangle mesh")
    return (
        np.array(verts, dtype=np.float64).reshape(-1, 3),
        np.array(faces, dtype=np.int32).reshape(-1, 3),
    )


def rebuild_for_file(
    p: int,
    q: int,
    vertices: np.ndarray,
    triangles: np.ndarray,
    ring_radius: float = 2.0,
    tube_radius: float = 1.0,
) -> tuple[ImmersedMobiusMesh, SweepParams]:
    """Rebuild the swept mesh whose file contents were given, or fail.

    Resolution is inferred from the counts (V = N*p*C and F = 2*N*p*(C-1)
    force N*p = V - F/2); the rebuilt mesh must reproduce the file's
    triangles exactly and its coordinates to printing precision.
    """
    n_verts, n_faces = len(vertices), len(triangles)
    if n_faces % 2 != 0:
        raise ValueError("a swept band mesh has an even triangle count")
    columns = n_verts - n_faces // 2
    if columns <= 0 or columns % p != 0:
        raise ValueError("vertex/face counts do not match a sweep over this p")
    n_theta = columns // p
    if n_verts % columns != 0:
        raise ValueError("vertex count is not a multiple of the column count")
    n_chord = n_verts // columns
    params = SweepParams(
        p=p,
        q=q,
        theta_steps=n_theta,
        chord_steps=n_chord,
        ring_radius=ring_radius,
        tube_radius=tube_radius,
    )
    mesh = build_mobius(params)
    if not np.array_equal(mesh.triangles, triangles):
        raise ValueError("triangle list does not match the swept construction")
    if not np.allclose(mesh.vertices, vertices, atol=2e-9, rtol=0.0):
        raise ValueError("vertex coordinates do not match the swept construction")
    return mesh, params

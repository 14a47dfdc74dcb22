"""Indexed triangle meshes with vertex tags and crease polylines.

Vertex tags: 0 = interior, -1 = boundary, k >= 1 = vertex of crease k.
Crease polylines are ordered vertex-index chains, one per crease id.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import InputFormatError, MeshError, OrientationError

TAG_INTERIOR = 0
TAG_BOUNDARY = -1

DEGENERATE_AREA_FACTOR = 1e-12


@dataclass
class TriMesh:
    vertices: np.ndarray                 # (V, 3) float64
    triangles: np.ndarray                # (T, 3) int, CCW outward
    vertex_tags: np.ndarray              # (V,) int
    crease_polylines: dict[int, np.ndarray] = field(default_factory=dict)

    def __post_init__(self):
        self.vertices = np.asarray(self.vertices, dtype=np.float64).reshape(-1, 3)
        self.triangles = np.asarray(self.triangles, dtype=np.int64).reshape(-1, 3)
        if self.vertex_tags is None:
            self.vertex_tags = np.zeros(len(self.vertices), dtype=np.int64)
        self.vertex_tags = np.asarray(self.vertex_tags, dtype=np.int64).reshape(-1)
        self.crease_polylines = {
            int(k): np.asarray(v, dtype=np.int64).reshape(-1)
            for k, v in self.crease_polylines.items()
        }

    # -- basic queries ----------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_triangles(self) -> int:
        return len(self.triangles)

    def bbox_diagonal(self) -> float:
        if self.num_vertices == 0:
            return 0.0
        span = self.vertices.max(axis=0) - self.vertices.min(axis=0)
        return float(np.linalg.norm(span))

    def triangle_areas(self) -> np.ndarray:
        p0 = self.vertices[self.triangles[:, 0]]
        e1 = self.vertices[self.triangles[:, 1]] - p0
        e2 = self.vertices[self.triangles[:, 2]] - p0
        return 0.5 * np.linalg.norm(np.cross(e1, e2), axis=1)

    def _edge_arrays(self):
        t = self.triangles
        return np.concatenate([t[:, [0, 1]], t[:, [1, 2]], t[:, [2, 0]]])

    def _edge_keys(self, directed: bool):
        """Edges packed into scalar keys (fast to unique)."""
        edges = self._edge_arrays()
        if not directed:
            edges = np.sort(edges, axis=1)
        return edges[:, 0] * np.int64(self.num_vertices) + edges[:, 1]

    def boundary_vertex_mask(self) -> np.ndarray:
        """Vertices lying on an edge used by exactly one triangle."""
        uniq, counts = np.unique(self._edge_keys(directed=False), return_counts=True)
        rim = uniq[counts == 1]
        mask = np.zeros(self.num_vertices, dtype=bool)
        mask[rim // self.num_vertices] = True
        mask[rim % self.num_vertices] = True
        return mask

    def euler_characteristic(self) -> int:
        num_edges = len(np.unique(self._edge_keys(directed=False)))
        return self.num_vertices - num_edges + self.num_triangles

    def crease_arc_length(self, crease_id: int) -> float:
        chain = self.crease_polylines[crease_id]
        pts = self.vertices[chain]
        return float(np.linalg.norm(np.diff(pts, axis=0), axis=1).sum())

    # -- validation -------------------------------------------------------

    def validate(self) -> None:
        """Raise MeshError on any structural invariant violation."""
        if self.num_vertices == 0 or self.num_triangles == 0:
            raise MeshError("mesh has no geometry")
        if self.triangles.min() < 0 or self.triangles.max() >= self.num_vertices:
            raise MeshError("triangle index out of range")
        if len(self.vertex_tags) != self.num_vertices:
            raise MeshError("vertex_tags length does not match vertex count")

        diag = self.bbox_diagonal()
        areas = self.triangle_areas()
        limit = DEGENERATE_AREA_FACTOR * diag * diag
        if np.any(areas <= limit):
            bad = int(np.argmin(areas))
            raise MeshError(
                f"degenerate triangle {bad} (area {areas[bad]:.3e} <= {limit:.3e})"
            )

        _, counts = np.unique(self._edge_keys(directed=False), return_counts=True)
        if counts.max(initial=0) > 2:
            raise MeshError("non-manifold edge shared by more than 2 triangles")
        # Interior edges must be traversed once in each direction.
        _, dcounts = np.unique(self._edge_keys(directed=True), return_counts=True)
        if dcounts.max(initial=0) > 1:
            raise OrientationError("inconsistent winding: repeated directed edge")

        for cid, chain in self.crease_polylines.items():
            if len(chain) < 2:
                raise MeshError(f"crease {cid} polyline has fewer than 2 vertices")
            if len(np.unique(chain)) != len(chain):
                raise MeshError(f"crease {cid} polyline is self-intersecting")
            if chain.min() < 0 or chain.max() >= self.num_vertices:
                raise MeshError(f"crease {cid} polyline index out of range")

    # -- serialisation ----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "vertices": self.vertices.tolist(),
            "triangles": self.triangles.tolist(),
            "vertex_tags": self.vertex_tags.tolist(),
            "crease_polylines": {
                str(k): v.tolist() for k, v in sorted(self.crease_polylines.items())
            },
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "TriMesh":
        try:
            return cls(
                vertices=np.array(data["vertices"], dtype=np.float64),
                triangles=np.array(data["triangles"], dtype=np.int64),
                vertex_tags=np.array(data["vertex_tags"], dtype=np.int64),
                crease_polylines={
                    int(k): np.array(v, dtype=np.int64)
                    for k, v in data.get("crease_polylines", {}).items()
                },
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise InputFormatError(f"bad mesh JSON: {exc}") from exc

    def save_json(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(self.to_json_dict(), fh, sort_keys=True)
            fh.write("\n")

    @classmethod
    def load_json(cls, path) -> "TriMesh":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json_dict(json.load(fh))


def export_obj(mesh: TriMesh, path) -> None:
    """Write a Wavefront OBJ: v/f records plus one `l` polyline per crease
    under `g crease_<id>`.  1-based indices, LF endings, 9 significant digits."""
    if mesh.num_vertices == 0 or mesh.num_triangles == 0:
        raise MeshError("refusing to export an empty mesh")
    lines = []
    for v in mesh.vertices:
        lines.append(f"v {v[0]:.9g} {v[1]:.9g} {v[2]:.9g}")
    for t in mesh.triangles:
        lines.append(f"f {t[0] + 1} {t[1] + 1} {t[2] + 1}")
    for cid in sorted(mesh.crease_polylines):
        chain = mesh.crease_polylines[cid]
        lines.append(f"g crease_{cid}")
        lines.append("l " + " ".join(str(i + 1) for i in chain))
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_obj(path) -> TriMesh:
    """Read an OBJ written by export_obj, reconstructing tags from the crease
    groups and the boundary from topology.  Raises InputFormatError if the
    file carries no crease/tag information and cannot be analysed."""
    vertices: list[list[float]] = []
    triangles: list[list[int]] = []
    polylines: dict[int, list[int]] = {}
    group = None
    with open(path, "r", encoding="utf-8") as fh:
        for ln, raw in enumerate(fh, 1):
            parts = raw.split()
            if not parts or parts[0].startswith("#"):
                continue
            kind = parts[0]
            try:
                if kind == "v":
                    vertices.append([float(x) for x in parts[1:4]])
                elif kind == "f":
                    idx = [int(p.split("/")[0]) - 1 for p in parts[1:]]
                    if len(idx) != 3:
                        raise InputFormatError(
                            f"{path}:{ln}: only triangle faces are supported"
                        )
                    triangles.append(idx)
                elif kind == "g":
                    group = parts[1] if len(parts) > 1 else None
                elif kind == "l":
                    if group is None or not group.startswith("crease_"):
                        raise InputFormatError(
                            f"{path}:{ln}: polyline outside a crease_<id> group"
                        )
                    cid = int(group.split("_", 1)[1])
                    polylines.setdefault(cid, []).extend(
                        int(p) - 1 for p in parts[1:]
                    )
            except (ValueError, IndexError) as exc:
                raise InputFormatError(f"{path}:{ln}: {exc}") from exc
    if not vertices or not triangles:
        raise InputFormatError(f"{path}: no triangle geometry found")
    mesh = TriMesh(
        vertices=np.array(vertices),
        triangles=np.array(triangles),
        vertex_tags=np.zeros(len(vertices), dtype=np.int64),
        crease_polylines={k: np.array(v) for k, v in polylines.items()},
    )
    tags = np.zeros(mesh.num_vertices, dtype=np.int64)
    tags[mesh.boundary_vertex_mask()] = TAG_BOUNDARY
    for cid, chain in mesh.crease_polylines.items():
        tags[chain] = cid
    mesh.vertex_tags = tags
    return mesh

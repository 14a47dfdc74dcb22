import math

import numpy as np
import pytest

from creasegeom import (
    InputFormatError,
    MeshError,
    OrientationError,
    TriMesh,
    export_obj,
    load_obj,
)


def square_mesh(crease=True):
    """Two triangles over a unit square; diagonal 0-2 tagged as crease 1."""
    vertices = [[0, 0, 0], [1, 0, 0], [1, 1, 0], [0, 1, 0]]
    triangles = [[0, 1, 2], [0, 2, 3]]
    tags = [1, -1, 1, -1] if crease else [-1, -1, -1, -1]
    polylines = {1: [0, 2]} if crease else {}
    return TriMesh(
        vertices=np.array(vertices, float),
        triangles=np.array(triangles),
        vertex_tags=np.array(tags),
        crease_polylines=polylines,
    )


def tetrahedron():
    vertices = np.array(
        [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1]], dtype=float
    )
    triangles = np.array([[0, 2, 1], [0, 1, 3], [1, 2, 3], [0, 3, 2]])
    return TriMesh(vertices=vertices, triangles=triangles, vertex_tags=None)


def test_basic_queries():
    mesh = square_mesh()
    assert mesh.num_vertices == 4
    assert mesh.num_triangles == 2
    assert mesh.bbox_diagonal() == pytest.approx(math.sqrt(2))
    assert mesh.triangle_areas() == pytest.approx([0.5, 0.5])
    assert mesh.crease_arc_length(1) == pytest.approx(math.sqrt(2))
    mesh.validate()


def test_boundary_and_euler():
    mesh = square_mesh()
    assert mesh.boundary_vertex_mask().all()  # every square vertex is on the rim
    assert mesh.euler_characteristic() == 1  # disc
    tet = tetrahedron()
    tet.validate()
    assert not tet.boundary_vertex_mask().any()
    assert tet.euler_characteristic() == 2  # sphere


def test_validate_rejects_degenerate_triangle():
    mesh = square_mesh()
    mesh.vertices[1] = mesh.vertices[0]  # collapse an edge
    with pytest.raises(MeshError, match="degenerate"):
        mesh.validate()


def test_validate_rejects_bad_index():
    mesh = square_mesh()
    mesh.triangles[0, 0] = 7
    with pytest.raises(MeshError, match="index"):
        mesh.validate()


def test_validate_rejects_inconsistent_winding():
    mesh = square_mesh()
    mesh.triangles[1] = mesh.triangles[1][::-1]
    with pytest.raises(OrientationError):
        mesh.validate()


def test_validate_rejects_nonmanifold_edge():
    mesh = square_mesh()
    mesh.triangles = np.vstack(
        [mesh.triangles, [[2, 0, 1]]]  # edge 0-1 now borders 2 faces + this
    )
    mesh.vertices = np.vstack([mesh.vertices])
    with pytest.raises(MeshError):
        mesh.validate()


def test_validate_rejects_bad_polyline():
    mesh = square_mesh()
    mesh.crease_polylines[1] = np.array([0])
    with pytest.raises(MeshError, match="fewer than 2"):
        mesh.validate()
    mesh.crease_polylines[1] = np.array([0, 2, 0])
    with pytest.raises(MeshError, match="self-intersecting"):
        mesh.validate()


def test_json_round_trip(tmp_path):
    mesh = square_mesh()
    path = tmp_path / "mesh.json"
    mesh.save_json(path)
    loaded = TriMesh.load_json(path)
    assert np.array_equal(loaded.vertices, mesh.vertices)
    assert np.array_equal(loaded.triangles, mesh.triangles)
    assert np.array_equal(loaded.vertex_tags, mesh.vertex_tags)
    assert np.array_equal(loaded.crease_polylines[1], mesh.crease_polylines[1])


def test_json_rejects_malformed(tmp_path):
    with pytest.raises(InputFormatError):
        TriMesh.from_json_dict({"vertices": [[0, 0, 0]]})


def test_obj_round_trip(tmp_path):
    mesh = square_mesh()
    path = tmp_path / "mesh.obj"
    export_obj(mesh, path)
    text = path.read_text()
    assert text.startswith("v ")
    assert "g crease_1" in text
    assert "\nl 1 3\n" in text
    loaded = load_obj(path)
    assert loaded.num_vertices == 4
    assert np.array_equal(loaded.triangles, mesh.triangles)
    assert np.array_equal(loaded.crease_polylines[1], mesh.crease_polylines[1])
    # tags reconstructed: crease wins over boundary
    assert loaded.vertex_tags[0] == 1 and loaded.vertex_tags[2] == 1
    assert loaded.vertex_tags[1] == -1 and loaded.vertex_tags[3] == -1


def test_obj_deterministic(tmp_path):
    mesh = square_mesh()
    p1, p2 = tmp_path / "a.obj", tmp_path / "b.obj"
    export_obj(mesh, p1)
    export_obj(mesh, p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_export_empty_mesh_raises(tmp_path):
    mesh = square_mesh()
    mesh.triangles = np.empty((0, 3), dtype=np.int64)
    with pytest.raises(MeshError):
        export_obj(mesh, tmp_path / "empty.obj")


def test_load_obj_rejects_garbage(tmp_path):
    path = tmp_path / "bad.obj"
    path.write_text("v 0 0\nf 1 2\n")
    with pytest.raises(InputFormatError):
        load_obj(path)
    path.write_text("# nothing here\n")
    with pytest.raises(InputFormatError, match="no triangle geometry"):
        load_obj(path)
    path.write_text("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\nl 1 2\n")
    with pytest.raises(InputFormatError, match="crease"):
        load_obj(path)  # polyline outside a crease_<id> group

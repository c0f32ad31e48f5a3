import pytest

from skew_infra.bratteli import (
    BratteliDiagram,
    Edge,
    FinitePath,
    FloorCoordinate,
    adic_predecessor,
    adic_successor,
    base_projection,
    enumerate_paths,
    first_non_maximal,
    floor_to_path,
    is_maximal,
    is_minimal,
    left_shift,
    lexicographic_key,
    maximal_paths,
    minimal_paths,
    path_to_floor,
    right_shift,
)
from skew_infra.errors import (
    AdmissibilityError,
    FloorRangeError,
    MaximalPathError,
    MinimalPathError,
    PathError,
    PathLengthError,
)
from tests.base_test import BaseTest


class TestDiagram(BaseTest):

    def test_edges(self, diagram):
        assert len(diagram.edges) == 17
        assert diagram.source(Edge(1, 1)) == 3
        assert diagram.target(Edge(1, 1)) == 1
        assert diagram.is_maximal_edge(Edge(2, 7))
        assert not diagram.is_maximal_edge(Edge(2, 6))
        assert diagram.is_minimal_edge(Edge(3, 0))

    def test_edge_counts_match_matrix(self, diagram):
        A = diagram.tower.A
        for i in range(1, 4):
            assert sum(len(diagram.edges_between(i, j)) for j in range(1, 4)) == len(diagram.edges_from(i))
            for j in range(1, 4):
                assert len(diagram.edges_between(i, j)) == A[i - 1, j - 1]

    def test_tower_heights(self, diagram):
        assert [diagram.tower_height(2, j) for j in (1, 2, 3)] == [29, 49, 21]

    def test_floor_offsets(self, diagram):
        assert diagram.floor_offsets(1, 3) == (0, 1, 2, 3, 4)
        assert diagram.floor_offsets(2, 3) == (0, 5, 9, 17, 21)

    def test_missing_edge(self, diagram):
        with pytest.raises(PathError):
            diagram.validate_edge(Edge(3, 4))

    def test_odometer(self):
        odometer = BratteliDiagram.odometer()
        assert odometer.d == 1
        assert [odometer.tower_height(k, 1) for k in range(1, 5)] == [2, 4, 8, 16]
        path = FinitePath.of(odometer, (1, 1), (1, 0))
        assert adic_successor(path) == FinitePath.of(odometer, (1, 0), (1, 1))


class TestPaths(BaseTest):

    def test_admissibility(self, diagram):
        assert FinitePath.of(diagram, (2, 0), (1, 3)).target == 1
        with pytest.raises(AdmissibilityError):
            FinitePath.of(diagram, (2, 0), (1, 0))
        with pytest.raises(PathLengthError):
            FinitePath(diagram, ())

    @pytest.mark.parametrize("k, count", [(1, 17), (2, 99), (3, 577)])
    def test_path_counts(self, diagram, k, count):
        assert sum(1 for _ in enumerate_paths(diagram, k)) == count

    @pytest.mark.exhaustive
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_floor_bijection(self, diagram, k):
        seen = set()
        for path in enumerate_paths(diagram, k):
            floor = path_to_floor(path)
            assert floor_to_path(diagram, k, floor.tower, floor.height) == path
            seen.add(floor)
        assert seen == {
            FloorCoordinate(k, j, height) for j in (1, 2, 3) for height in range(diagram.tower_height(k, j))
        }

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_enumeration_order_is_floor_order(self, diagram, k):
        for j in (1, 2, 3):
            paths = list(enumerate_paths(diagram, k, target=j))
            assert [path_to_floor(p).height for p in paths] == list(range(diagram.tower_height(k, j)))
            assert [lexicographic_key(p) for p in paths] == sorted(lexicographic_key(p) for p in paths)

    @pytest.mark.exhaustive
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_coding_identity(self, diagram, k):
        for path in enumerate_paths(diagram, k):
            if is_maximal(path):
                with pytest.raises(MaximalPathError):
                    adic_successor(path)
                continue
            successor = adic_successor(path)
            assert path_to_floor(successor) == path_to_floor(path).shifted(1)
            assert adic_predecessor(successor) == path

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_extremal_paths(self, diagram, k):
        paths = list(enumerate_paths(diagram, k))
        assert sorted(p.edges for p in paths if is_maximal(p)) == sorted(p.edges for p in maximal_paths(diagram, k))
        assert sorted(p.edges for p in paths if is_minimal(p)) == sorted(p.edges for p in minimal_paths(diagram, k))
        assert len(maximal_paths(diagram, k)) == len(minimal_paths(diagram, k)) == diagram.d
        for path in minimal_paths(diagram, k):
            assert path_to_floor(path).height == 0
            with pytest.raises(MinimalPathError):
                adic_predecessor(path)
        for path in maximal_paths(diagram, k):
            assert path_to_floor(path).height == diagram.tower_height(k, path.target) - 1

    def test_carry(self, diagram):
        path = FinitePath.of(diagram, (3, 3), (3, 1))
        assert first_non_maximal(path) == 1
        assert adic_successor(path) == FinitePath.of(diagram, (2, 0), (3, 2))

    def test_borrow(self, diagram):
        path = FinitePath.of(diagram, (2, 0), (3, 2))
        assert adic_predecessor(path) == FinitePath.of(diagram, (3, 3), (3, 1))

    def test_shifts(self, diagram):
        path = FinitePath.of(diagram, (2, 0), (3, 2))
        assert left_shift(path) == FinitePath.of(diagram, (3, 2))
        lifted = right_shift(path)
        assert lifted.edges[0] == Edge(path.source, 0)
        assert left_shift(lifted) == path
        with pytest.raises(PathLengthError):
            left_shift(FinitePath.of(diagram, (3, 2)))

    @pytest.mark.parametrize("k", [1, 2])
    def test_right_shift_lifts_floors(self, diagram, k):
        for path in enumerate_paths(diagram, k):
            lifted = path_to_floor(right_shift(path))
            expected = sum(diagram.floor_offsets(m + 1, e.tower)[e.floor] for m, e in enumerate(path.edges, start=1))
            assert lifted == FloorCoordinate(k + 1, path.target, expected)

    def test_base_projection(self, diagram):
        path = FinitePath.of(diagram, (2, 0), (3, 2), (1, 1))
        assert base_projection(path, 0) == (1, path.edges)
        assert base_projection(path, 2) == (3, (Edge(1, 1),))
        assert base_projection(path, 3) == (1, ())
        with pytest.raises(PathLengthError):
            base_projection(path, 4)

    def test_floor_range(self, diagram):
        with pytest.raises(FloorRangeError):
            floor_to_path(diagram, 2, 3, 21)
        with pytest.raises(PathLengthError):
            floor_to_path(diagram, 0, 1, 0)
        with pytest.raises(PathLengthError):
            list(enumerate_paths(diagram, 0))

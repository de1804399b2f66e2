import pytest

from tuttekit.engines import tutte
from tuttekit.errors import InvalidParameters, ValidityRangeError
from tuttekit.graphs import Multigraph, complete_graph, cycle_matroid
from tuttekit.matroid import make_from_bases, make_uniform
from tuttekit.structure import sigma_profile
from tuttekit.theorems import circuits, hyperplanes, sums

# ----------------Test Fixtures---------------------

K4_Y = [6, 6, 3, 1]
K4_X = [6, 6, 3, 1]


def k3():
    return cycle_matroid(complete_graph(3))


def k4():
    return cycle_matroid(complete_graph(4))


def triple_edge():
    """Rank 3 with a rank one flat of size 3, so f2 = 3."""
    return cycle_matroid(
        Multigraph(4, ((0, 1), (0, 1), (0, 1), (1, 2), (2, 3)))
    )


def matroids():
    yield make_uniform(0, 2)
    yield make_uniform(2, 2)
    yield make_uniform(2, 4)
    yield make_uniform(3, 6)
    yield make_from_bases(4, [0b0011, 0b0101, 0b0110])
    yield make_from_bases(5, [0b00011, 0b00101, 0b01001, 0b00110,
                              0b01010, 0b01100])
    yield k3()
    yield k4()
    yield k4().dual()
    yield triple_edge()

# --------------------------------------------------


class TestSums:
    def test_k4(self):
        assert [sums.coeff_y_sigma(k4(), j) for j in range(4)] == K4_Y
        assert [sums.coeff_x_tau(k4(), i) for i in range(4)] == K4_X
        assert [sums.coeff_x_dual_sigma(k4(), i) for i in range(4)] == K4_X

    def test_against_engine(self):
        for matroid in matroids():
            poly = tutte(matroid)
            at_x_1 = poly.specialize_x_at_1()
            at_y_1 = poly.specialize_y_at_1()
            for j in range(matroid.size - matroid.r + 1):
                assert sums.coeff_y_sigma(matroid, j) == at_x_1[j]
            for i in range(matroid.r + 1):
                assert sums.coeff_x_tau(matroid, i) == at_y_1[i]
                assert sums.coeff_x_dual_sigma(matroid, i) == at_y_1[i]

    def test_negative_index(self):
        with pytest.raises(InvalidParameters):
            sums.coeff_y_sigma(k4(), -1)

    def test_sigma_via_hyperplanes(self):
        for matroid in matroids():
            sigma = sigma_profile(matroid)
            bound = hyperplanes.y_lower_bound(matroid)
            for t in range(matroid.size - matroid.r + 1):
                if bound is None or t > bound:
                    assert sums.sigma_via_hyperplanes(matroid, t) == \
                        sigma[matroid.r + t]

    def test_sigma_via_hyperplanes_range(self):
        with pytest.raises(ValidityRangeError):
            sums.sigma_via_hyperplanes(triple_edge(), 0)


class TestHyperplanes:
    def test_k4_values(self):
        matroid = k4()
        assert hyperplanes.hyperplane_validity(matroid) == \
            'valid: j > f2 - r = -2'
        assert [hyperplanes.coeff_y_hyperplane(matroid, j)
                for j in range(4)] == K4_Y
        assert [hyperplanes.coeff_y_cocircuit(matroid, j)
                for j in range(4)] == K4_Y

    def test_against_engine(self):
        for matroid in matroids():
            at_x_1 = tutte(matroid).specialize_x_at_1()
            for j in range(matroid.size - matroid.r + 1):
                if hyperplanes.in_hyperplane_range(matroid, j):
                    assert hyperplanes.coeff_y_hyperplane(matroid, j) == \
                        at_x_1[j], f'{matroid}, j = {j}'
                    assert hyperplanes.coeff_y_cocircuit(matroid, j) == \
                        at_x_1[j], f'{matroid}, j = {j}'

    def test_out_of_range(self):
        matroid = triple_edge()
        assert hyperplanes.y_lower_bound(matroid) == 0
        with pytest.raises(ValidityRangeError):
            hyperplanes.coeff_y_hyperplane(matroid, 0)
        assert hyperplanes.coeff_y_hyperplane(matroid, 1) == \
            tutte(matroid).specialize_x_at_1()[1]
        with pytest.raises(ValidityRangeError):
            hyperplanes.coeff_y_cocircuit(matroid, 0)

    def test_rank_one(self):
        matroid = make_uniform(1, 3)
        assert hyperplanes.hyperplane_validity(matroid) == \
            'valid: all j (f2 undefined)'
        at_x_1 = tutte(matroid).specialize_x_at_1()
        for j in range(3):
            assert hyperplanes.coeff_y_hyperplane(matroid, j) == at_x_1[j]

    def test_threshold(self):
        assert hyperplanes.coeff_y_threshold(k3(), 1) == 1
        assert hyperplanes.threshold_y_validity(k4()) == \
            'valid: j > f1 - r = 0'
        assert hyperplanes.coeff_y_threshold(k4(), 1) == 6
        with pytest.raises(ValidityRangeError):
            hyperplanes.coeff_y_threshold(k4(), 0)

    def test_threshold_iff(self):
        for matroid in matroids():
            result = hyperplanes.threshold_y_iff(matroid)
            assert result, (matroid, result.certificate)


class TestCircuits:
    def test_k4_values(self):
        matroid = k4()
        assert circuits.circuit_validity(matroid) == 'valid: i > r - d2 = -2'
        assert [circuits.coeff_x_circuit(matroid, i)
                for i in range(4)] == K4_X

    def test_against_engine(self):
        for matroid in matroids():
            at_y_1 = tutte(matroid).specialize_y_at_1()
            for i in range(matroid.r + 1):
                if circuits.in_circuit_range(matroid, i):
                    assert circuits.coeff_x_circuit(matroid, i) == \
                        at_y_1[i], f'{matroid}, i = {i}'

    def test_out_of_range(self):
        # two loops form a corank two D-set of size 2 = r
        matroid = cycle_matroid(
            Multigraph(3, ((0, 1), (1, 2), (0, 0), (1, 1)))
        )
        bound = circuits.x_lower_bound(matroid)
        assert bound is not None and bound >= 0
        with pytest.raises(ValidityRangeError):
            circuits.coeff_x_circuit(matroid, 0)

    def test_threshold(self):
        assert circuits.threshold_x_validity(k4()) == 'valid: i > r - d1 = 0'
        assert circuits.coeff_x_threshold(k4(), 2) == 3
        with pytest.raises(ValidityRangeError):
            circuits.coeff_x_threshold(k4(), 0)
        assert circuits.threshold_x_validity(make_uniform(2, 2)) == \
            'valid: all i (d1 undefined)'

    def test_threshold_iff(self):
        for matroid in matroids():
            result = circuits.coeff_x_threshold_iff(matroid)
            assert result, (matroid, result.certificate)

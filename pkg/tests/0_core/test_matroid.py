import pytest

from tuttekit import env
from tuttekit.errors import (
    InvalidBases, InvalidParameters, SizeLimitError, UsageError
)
from tuttekit.helpers import mask_of
from tuttekit.matroid import (
    Matroid, closure, dual, make_from_bases, make_uniform, rank,
    require_exhaustive, validate_bases
)
from tuttekit.structure import check_rank_axioms
from tuttekit.var_types import DUAL_OF, GroundSet, UNIFORM


def all_pairs(n):
    return [mask_of(p) for p in
            [(a, b) for a in range(n) for b in range(a + 1, n)]]


class TestUniform:
    def test_loop(self):
        loop = make_uniform(0, 1)
        assert rank(loop, 0b1) == 0
        assert loop.loops() == 0b1

    def test_coloop(self):
        coloop = make_uniform(1, 1)
        assert rank(coloop, 0b1) == 1
        assert coloop.coloops() == 0b1

    def test_u23_ranks(self):
        u23 = make_uniform(2, 3)
        assert u23.kind == UNIFORM
        assert all(rank(u23, p) == 2 for p in all_pairs(3))
        assert u23.r == 2
        assert rank(u23, 0) == 0

    def test_rank_above_size_is_rejected(self):
        with pytest.raises(InvalidParameters):
            make_uniform(3, 2)

    def test_subset_outside_ground_set(self):
        with pytest.raises(InvalidParameters):
            make_uniform(1, 2).rank(0b100)


class TestFromBases:
    def test_all_pairs_is_u23(self):
        matroid = make_from_bases(3, all_pairs(3))
        assert matroid.same_as(make_uniform(2, 3))

    def test_singletons_is_u12(self):
        matroid = make_from_bases(2, [0b01, 0b10])
        assert matroid.rank(0b11) == 1

    def test_unequal_cardinalities(self):
        with pytest.raises(InvalidBases) as info:
            make_from_bases(2, [0b11, 0b01])
        assert set(info.value.certificate) == {0b11, 0b01}

    def test_empty_list(self):
        with pytest.raises(InvalidBases):
            make_from_bases(2, [])

    def test_exchange_violation_names_a_pair(self):
        # {0,1} and {2,3}: removing 0 from the first cannot be repaired
        with pytest.raises(InvalidBases) as info:
            validate_bases(4, [0b0011, 0b1100])
        b1, b2, e = info.value.certificate
        assert {b1, b2} == {0b0011, 0b1100}
        assert b1 >> e & 1

    def test_duplicates_are_merged(self):
        assert validate_bases(2, [0b01, 0b01, 0b10]) == [0b01, 0b10]

    def test_empty_base(self):
        matroid = make_from_bases(2, [0])
        assert matroid.r == 0
        assert matroid.loops() == 0b11


class TestRankAndClosure:
    def test_dual_rank(self):
        assert rank(dual(make_uniform(2, 3)), 0b111) == 1

    def test_closure_of_singleton_in_u23(self):
        assert closure(make_uniform(2, 3), 0b001) == 0b001

    def test_closure_of_empty_set_is_loops(self):
        matroid = make_from_bases(3, [0b001, 0b010])
        assert closure(matroid, 0) == 0b100

    def test_closure_is_idempotent(self):
        matroid = make_uniform(2, 4)
        for subset in range(16):
            once = matroid.closure(subset)
            assert once & subset == subset
            assert matroid.closure(once) == once

    def test_independence_predicates(self):
        u24 = make_uniform(2, 4)
        assert u24.is_independent(0b0011)
        assert not u24.is_independent(0b0111)
        assert u24.is_spanning(0b0111)
        assert u24.is_base(0b0101)
        assert u24.is_circuit(0b0111)
        assert not u24.is_circuit(0b1111)
        assert u24.corank(0b1111) == 2
        assert len(u24.bases()) == 6


class TestDual:
    def test_coloop_dualises_to_loop(self):
        assert dual(make_uniform(1, 1)).same_as(make_uniform(0, 1))

    def test_u23_dual_is_u13(self):
        assert dual(make_uniform(2, 3)).same_as(make_uniform(1, 3))

    def test_double_dual(self):
        matroid = make_from_bases(4, [0b0011, 0b0101, 0b0110, 0b1001,
                                      0b1010, 0b1100])
        double = matroid.dual().dual()
        assert double.same_as(matroid)
        assert matroid.dual().kind == DUAL_OF

    def test_oracle_and_table_agree(self):
        matroid = make_uniform(2, 4).dual()
        oracle_values = [matroid._oracle(a) for a in range(16)]
        assert list(matroid.rank_table()) == oracle_values


class TestRankAxioms:
    def test_u24_passes(self):
        assert check_rank_axioms(make_uniform(2, 4))

    def test_broken_oracle_is_caught(self):
        def oracle(subset):
            return 1 if subset == 0b111 else bin(subset).count('1')

        result = check_rank_axioms(Matroid(GroundSet(3), oracle))
        assert not result
        axiom, a, b = result.certificate
        assert axiom in ('monotonicity', 'submodularity')
        assert a != b

    def test_permuted_matroid_is_still_a_matroid(self):
        matroid = make_from_bases(3, [0b011, 0b101])
        permuted = matroid.permute([2, 0, 1])
        assert check_rank_axioms(permuted)
        assert permuted.rank(0b001) == matroid.rank(0b100)

    def test_bad_permutation(self):
        with pytest.raises(InvalidParameters):
            make_uniform(1, 3).permute([0, 0, 1])


class TestExhaustiveLimit:
    def test_default_is_hard_limit(self):
        assert env.exhaustive_limit() == env.HARD_LIMIT

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv(env.ENV_VARIABLE, '3')
        with pytest.raises(SizeLimitError):
            require_exhaustive(4)
        require_exhaustive(3)

    def test_clamped_to_hard_limit(self, monkeypatch):
        monkeypatch.setenv(env.ENV_VARIABLE, '100')
        assert env.exhaustive_limit() == env.HARD_LIMIT

    def test_bad_value(self, monkeypatch):
        monkeypatch.setenv(env.ENV_VARIABLE, 'lots')
        with pytest.raises(UsageError):
            env.exhaustive_limit()

    def test_rank_table_refuses_large_ground_sets(self, monkeypatch):
        monkeypatch.setenv(env.ENV_VARIABLE, '4')
        with pytest.raises(SizeLimitError):
            make_uniform(2, 5).rank_table()

import pytest

from heckefusion.combinatorics import count_standard, hook_scalar, partitions_of, row_tableau
from heckefusion.hecke import ZETA, gen, inv_basis, murphy, unit
from heckefusion.linalg import mat_mul
from heckefusion.scalars import RationalFunction, qpow
from heckefusion.seminormal import (
    RelationFailure,
    build_rep,
    character,
    check_branching,
    check_classical_limit,
    check_delta_expansion,
    check_murphy_diagonal,
    check_relations,
    compare_with_ideal_model,
    represent,
    specialize_rep,
)

Q = qpow(1)
SHAPES = [lam for n in range(1, 6) for lam in partitions_of(n)]


def test_one_dimensional_reps():
    assert build_rep((2,)).matrix(1) == [[Q]]
    assert build_rep((1, 1)).matrix(1) == [[-qpow(-1)]]


def test_two_dimensional_rep():
    rep = build_rep((2, 1))
    a, b = rep.matrix(1), rep.matrix(2)
    assert rep.dimension == 2
    assert mat_mul(mat_mul(a, b), a) == mat_mul(mat_mul(b, a), b)


@pytest.mark.parametrize("lam", SHAPES, ids=str)
def test_relations_and_dimension(lam):
    rep = build_rep(lam)
    assert rep.dimension == count_standard(lam)
    check_relations([rep.matrix(k) for k in range(1, rep.rank)], rep.rank)


def test_broken_matrices_rejected():
    rep = build_rep((2, 1))
    mats = [rep.matrix(1), rep.matrix(2)]
    mats[0][0][0] = mats[0][0][0] * Q
    with pytest.raises(RelationFailure):
        check_relations(mats, 3)


def test_characters():
    for lam in SHAPES:
        rep = build_rep(lam)
        assert character(rep, unit(rep.rank)) == count_standard(lam)
    assert character(build_rep((2,)), gen(2, 1)) == Q
    rep = build_rep((2, 1))
    t1 = represent(rep, gen(3, 1))
    assert character(rep, gen(3, 1)) == t1[0][0] + t1[1][1]


def test_regular_trace_decomposition():
    # T_1 T_s has a T_s term (coefficient q - 1/q) exactly when s has a left
    # descent at 1, so the regular trace of T_1 is (q - 1/q) l!/2
    for l, half in ((2, 1), (3, 3), (4, 12)):
        total = RationalFunction.ZERO
        for lam in partitions_of(l):
            rep = build_rep(lam)
            total = total + character(rep, gen(l, 1)) * rep.dimension
        assert total == ZETA * half


def test_delta_expansion_rank_two_by_hand():
    phi2 = {(1, 2): RationalFunction.ONE, (2, 1): qpow(-1)}
    phi11 = {(1, 2): RationalFunction.ONE, (2, 1): -Q}
    for s, want in (((1, 2), 1), ((2, 1), 0)):
        total = phi2[s] / hook_scalar((2,)) + phi11[s] / hook_scalar((1, 1))
        assert total == want
        assert character(build_rep((2,)), inv_basis(s, 2)) == phi2[s]


@pytest.mark.parametrize("l", [1, 2, 3, 4])
def test_delta_expansion(l):
    assert check_delta_expansion(l)


def test_murphy_examples():
    assert represent(build_rep((2,)), murphy(2, 2)) == [[qpow(2)]]
    assert represent(build_rep((1, 1)), murphy(2, 2)) == [[qpow(-2)]]
    rep = build_rep((2, 1))
    x2 = represent(rep, murphy(3, 2))
    x3 = represent(rep, murphy(3, 3))
    diag = {(x2[i][i], x3[i][i]) for i in range(2)}
    assert diag == {(qpow(2), qpow(-2)), (qpow(-2), qpow(2))}


@pytest.mark.parametrize("lam", SHAPES, ids=str)
def test_murphy_and_branching(lam):
    assert check_murphy_diagonal(lam)
    assert check_branching(lam)


def test_branching_blocks_of_21():
    rep = build_rep((2, 1))
    t1 = rep.matrix(1)
    assert t1[0][1] == t1[1][0] == RationalFunction.ZERO
    assert {t1[0][0], t1[1][1]} == {Q, -qpow(-1)}


@pytest.mark.parametrize("lam", [lam for n in range(1, 5) for lam in partitions_of(n)], ids=str)
def test_ideal_model(lam):
    assert compare_with_ideal_model(lam)


@pytest.mark.parametrize("lam", SHAPES, ids=str)
def test_classical_limit(lam):
    assert check_classical_limit(lam)
    for m in specialize_rep(build_rep(lam), 1):
        assert len(m) == count_standard(lam)


def test_shapes_separated_by_spectra():
    for n in range(2, 6):
        spectra = [frozenset(t.contents for t in build_rep(lam).basis) for lam in partitions_of(n)]
        assert len(set(spectra)) == len(spectra)


def test_json_shape():
    obj = build_rep((2, 1)).to_json()
    assert obj["shape"] == [2, 1]
    assert len(obj["generators"]) == 2
    assert row_tableau((2, 1)).to_json() in obj["basis"]
    assert len(obj["generators"][0]) == 2


def test_rank_checks():
    with pytest.raises(ValueError):
        represent(build_rep((2,)), gen(3, 1))
    with pytest.raises(ValueError):
        build_rep(())

import pytest

from heckefusion.combinatorics import (
    column_tableau,
    eta_partition,
    insertion_sequences,
    mixed_hook_ratio,
    partitions_of,
    r_eta,
    r_xi,
    row_tableau,
    standard_tableaux,
    xi_partition,
)
from heckefusion.hecke import ZETA, gen, unit
from heckefusion.intertwiner import (
    NotGeneric,
    check_j_commutes,
    check_murphy_factorization,
    check_s_exchange,
    check_tau_relations,
    corollary11_report,
    eigen_report,
    eigenvector_D,
    eigenvector_eta,
    induced_setup,
    j_matrix,
    measured_eigenvalue,
    s_element,
    span_induced,
    verify_eigen_det,
)
from heckefusion.scalars import qpow, rf

Q = qpow(1)


def test_s_single_factor():
    s = s_element(induced_setup((1,), (1,), z=1, w=5))
    assert s == gen(2, 1) + unit(2, ZETA / 4)


@pytest.mark.parametrize("lam,mu,w", [((1,), (1,), 3), ((2,), (1,), 3), ((1, 1), (1,), 7), ((2,), (2,), 5)], ids=str)
def test_s_exchange_and_murphy_factorization(lam, mu, w):
    setup = induced_setup(lam, mu, z=1, w=w)
    assert check_s_exchange(setup)
    assert check_murphy_factorization(setup)


@pytest.mark.parametrize("l,m", [(1, 1), (2, 1), (1, 2), (2, 2)])
def test_tau_relations(l, m):
    assert check_tau_relations(l, m)


@pytest.mark.parametrize("lam,mu,dim", [((1,), (1,), 2), ((2,), (1,), 3), ((2, 1), (1,), 8)], ids=str)
def test_induced_dimension(lam, mu, dim):
    assert span_induced(induced_setup(lam, mu)).dimension == dim


def test_two_by_two_spectrum():
    setup = induced_setup((1,), (1,), z=1, w=5)
    J = j_matrix(setup)
    assert len(J) == 2
    t = setup.t
    for r in (r_xi((1,), (1,), (1,), t), r_xi((1,), (1,), (2,), t)):
        assert verify_eigen_det(setup, r, J)
    tr = J[0][0] + J[1][1]
    dt = J[0][0] * J[1][1] - J[0][1] * J[1][0]
    a, b = r_xi((1,), (1,), (1,), t), r_xi((1,), (1,), (2,), t)
    assert tr == a + b and dt == a * b


def test_perturbed_prediction_fails():
    setup = induced_setup((1,), (1,), z=1, w=5)
    r = r_xi((1,), (1,), (1,), setup.t)
    assert not verify_eigen_det(setup, r * Q)


def test_j_commutes_with_left_action():
    for lam, mu in (((1,), (1,)), ((2,), (1,)), ((1, 1), (2,))):
        assert check_j_commutes(induced_setup(lam, mu, w=5))


def test_det_examples_21():
    setup = induced_setup((2,), (1,), z=1, w=3)
    J = j_matrix(setup)
    assert len(J) == 3
    assert xi_partition((2,), (1,), (1,)).parts == (3,)
    assert verify_eigen_det(setup, r_xi((2,), (1,), (1,), setup.t), J)
    assert eta_partition((2,), (1,), (1, 2)).parts == (2, 1)
    assert verify_eigen_det(setup, r_eta((2,), (1,), (1, 2), setup.t), J)


@pytest.mark.parametrize("lam,mu,iseq,ws", [
    ((1,), (1,), (1,), (5,)),
    ((1, 1), (1,), (1, 2), (3,)),
    ((2,), (2,), (1,), (3, 5, 7)),
], ids=str)
def test_explicit_eigenvectors(lam, mu, iseq, ws):
    vec = eigenvector_D(lam, mu, iseq)
    for w in ws:
        setup = induced_setup(lam, mu, z=1, w=w)
        assert measured_eigenvalue(vec, setup) == r_xi(lam, mu, iseq, setup.t)


def test_eigenvector_independent_of_spectral_parameters():
    lam, mu = (2,), (1,)
    vec = eigenvector_D(lam, mu, (1,))
    values = {w: measured_eigenvalue(vec, induced_setup(lam, mu, z=2, w=w)) for w in (3, 5)}
    for w, r in values.items():
        assert r == r_xi(lam, mu, (1,), rf(w) / 2)


def test_eta_by_beta_transport():
    lam, mu = (2,), (1, 1)
    for seq in insertion_sequences(lam, mu, conjugate=True):
        vec, Lam, M = eigenvector_eta(lam, mu, seq)
        setup = induced_setup(lam, mu, Lam=Lam, M=M, z=1, w=5)
        got = measured_eigenvalue(vec, setup)
        assert got == r_eta(lam, mu, seq, setup.t)
        assert verify_eigen_det(setup, got)


def test_eigenvalues_invariant_under_tableau_choice():
    lam, mu = (2, 1), (1,)
    preds = [r_xi(lam, mu, s, rf(3)) for s in insertion_sequences(lam, mu)]
    for Lam in standard_tableaux(lam):
        setup = induced_setup(lam, mu, Lam=Lam, z=1, w=3)
        J = j_matrix(setup)
        assert all(verify_eigen_det(setup, r, J) for r in preds)


def test_corollary_examples():
    t = rf(5)
    rep = corollary11_report((1,), (1,), t)
    assert rep["ok"] and rep["closed_form"] == (t - qpow(-2)) / (t - qpow(2))
    assert corollary11_report((2, 1), (2, 1), Q * 3)["ok"]
    rep = corollary11_report((3,), (1, 1, 1), t)
    # only the corner node is shared; first-kind hook 3 + 3 - 1, second-kind 1 + 1 - 1
    first, second = 5, 1
    assert rep["closed_form"] == (t - qpow(-2 * second)) / (t - qpow(2 * first))
    assert rep["ok"]


def test_ratio_matches_closed_form_for_21():
    lam = mu = (2, 1)
    for t in (rf(3), rf(5), rf(7), Q):
        ratio = r_xi(lam, mu, (1, 2), t) / r_eta(lam, mu, (1, 2), t)
        assert ratio == mixed_hook_ratio(lam, mu, t)


def test_genericity_enforced():
    with pytest.raises(NotGeneric):
        induced_setup((1,), (1,), z=1, w=1)
    with pytest.raises(NotGeneric):
        induced_setup((1,), (1,), z=1, w=qpow(4))
    with pytest.raises(ValueError):
        induced_setup((1,), (1,), Lam=row_tableau((2,)))


def test_full_report_small():
    rep = eigen_report(induced_setup((2,), (1,), w=5))
    assert rep.ok
    obj = rep.to_json()
    assert obj["lambda"] == [2] and obj["mu"] == [1] and obj["ok"]

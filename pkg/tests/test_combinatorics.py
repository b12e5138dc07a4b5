import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heckefusion.combinatorics import (
    InvalidInsertion,
    Partition,
    StandardTableau,
    a_sequences,
    b_sequences,
    column_tableau,
    compose,
    content,
    count_standard,
    d_value,
    eta_partition,
    hook_product,
    hook_scalar_hf,
    hook_scalar_hff,
    identity,
    insertion_sequences,
    inverse,
    length,
    longest_element,
    mixed_hook_ratio,
    partitions_of,
    r_eta,
    r_xi,
    rd_word,
    rd_word_b,
    reduced_word,
    rho_of,
    row_tableau,
    skew_cancellation_check,
    standard_tableaux,
    tau_permutation,
    tau_word,
    word_to_perm,
    xi_partition,
    xi_tableau,
    young_subgroup_elements,
)
from heckefusion.scalars import qpow, rf, specialize_q

from strategies import partitions, permutations


def all_tableaux(nmax):
    for n in range(1, nmax + 1):
        for lam in partitions_of(n):
            yield from standard_tableaux(lam)


def test_longest_element():
    assert longest_element(1) == (1,)
    assert longest_element(2) == (2, 1)
    w0 = longest_element(4)
    assert w0 == (4, 3, 2, 1) and length(w0) == 6


def test_tau():
    assert tau_permutation(2, 1) == (3, 1, 2)
    assert tau_permutation(1, 1) == (2, 1)
    t = tau_permutation(2, 2)
    assert t == (3, 4, 1, 2) and length(t) == 4
    assert word_to_perm(4, tau_word(2, 2)) == t


def test_tableau_counts():
    assert len(standard_tableaux((2,))) == 1
    assert len(standard_tableaux((1, 1))) == 1
    assert len(standard_tableaux((2, 1))) == 2


def brute_force_standard(lam):
    nodes = lam.nodes
    found = 0
    for fill in itertools.permutations(range(1, lam.size + 1)):
        rows = [[] for _ in lam.parts]
        for (a, _), x in zip(nodes, fill):
            rows[a - 1].append(x)
        try:
            StandardTableau(tuple(tuple(r) for r in rows))
        except ValueError:
            continue
        found += 1
    return found


@pytest.mark.parametrize("lam", [p for n in range(1, 7) for p in partitions_of(n)], ids=str)
def test_enumeration_matches_brute_force_and_hook_formula(lam):
    n = len(standard_tableaux(lam))
    assert n == brute_force_standard(lam)
    assert n == count_standard(lam)
    fact = 1
    for k in range(2, lam.size + 1):
        fact *= k
    assert hook_product(lam) * n == fact


def test_contents_examples():
    assert column_tableau((2, 1)).contents == (0, -1, 1)
    assert row_tableau((2, 1)).contents == (0, 1, -1)
    for tab in all_tableaux(4):
        assert content(tab, 1) == 0


def test_column_and_row_tableaux():
    c = column_tableau((2, 1))
    assert (c(1, 1), c(2, 1), c(1, 2)) == (1, 2, 3)
    r = row_tableau((2, 1))
    assert (r(1, 1), r(1, 2), r(2, 1)) == (1, 2, 3)
    assert column_tableau((1, 1, 1)) == row_tableau((1, 1, 1))


def test_rho_examples():
    assert rho_of(column_tableau((3, 1))) == identity(4)
    assert rho_of(row_tableau((2, 1))) == (1, 3, 2)


@pytest.mark.parametrize("tab", list(all_tableaux(5)), ids=str)
def test_rho_round_trip_and_words(tab):
    rho = rho_of(tab)
    assert column_tableau(tab.shape).permuted(rho) == tab
    a, b = a_sequences(tab), b_sequences(tab)
    for j, (aj, bj) in enumerate(zip(a, b), 1):
        assert sorted(aj + bj) == list(range(1, j))
    for word in (rd_word(tab), rd_word_b(tab)):
        s = word_to_perm(tab.size, word)
        assert length(s) == len(word)


def test_sequences_examples():
    c = column_tableau((2, 2))
    assert all(x == () for x in a_sequences(c))
    assert b_sequences(c) == [tuple(range(1, j)) for j in range(1, 5)]
    assert set(a_sequences(row_tableau((2, 1)))[2]) == {2}


def test_d_values():
    assert d_value(row_tableau((2,)), 1) == -1
    assert d_value(row_tableau((1, 1)), 1) == 1
    assert d_value(row_tableau((2, 1)), 2) == 2


@pytest.mark.parametrize("tab", list(all_tableaux(5)), ids=str)
def test_swap_standard_iff_far_contents(tab):
    for k in range(1, tab.size):
        d = d_value(tab, k)
        if abs(d) >= 2:
            assert tab.swapped(k).shape == tab.shape
        else:
            assert d in (-1, 1)
            with pytest.raises(ValueError):
                tab.swapped(k)


@pytest.mark.parametrize("lam", [p for n in range(1, 6) for p in partitions_of(n)], ids=str)
def test_content_vectors_separate_tableaux(lam):
    tabs = standard_tableaux(lam)
    vecs = [t.contents for t in tabs]
    assert len(set(vecs)) == len(vecs)
    assert len({tuple(sorted(v)) for v in vecs}) == 1


def test_xi_and_eta_examples():
    assert xi_partition((1,), (1,), (1,)) == Partition((2,))
    assert xi_partition((1,), (1,), (2,)) == Partition((1, 1))
    xi = xi_partition((2, 1), (2, 1), (1, 2))
    assert xi == Partition((4, 2))
    tab = xi_tableau((2, 1), (2, 1), (1, 2), column_tableau((2, 1)))
    assert tab.shape == xi
    assert eta_partition((1,), (1,), (1,)) == Partition((1, 1))
    assert eta_partition((2, 1), (2, 1), (1, 2)) == Partition((2, 2, 1, 1))


@pytest.mark.parametrize("lam,mu", [((2, 1), (2, 1)), ((3,), (1, 1)), ((1, 1), (2,))], ids=str)
def test_eta_full_sequence_is_conjugate_sum(lam, mu):
    lam, mu = Partition(lam), Partition(mu)
    lc, mc = lam.conjugate, mu.conjugate
    width = max(len(lc), len(mc))
    summed = Partition(tuple(lc[b] + mc[b] for b in range(1, width + 1)))
    assert eta_partition(lam, mu, tuple(range(1, lam[1] + 1))) == summed.conjugate


def test_invalid_insertion_names_problem():
    with pytest.raises(InvalidInsertion, match="row"):
        xi_partition((1,), (1,), (3,))


def test_insertion_sequences_give_valid_shapes():
    for lam, mu in [((2,), (1,)), ((2, 1), (1,)), ((1, 1), (2,))]:
        for seq in insertion_sequences(lam, mu):
            assert xi_partition(lam, mu, seq).size == sum(lam) + sum(mu)
        for seq in insertion_sequences(lam, mu, conjugate=True):
            assert eta_partition(lam, mu, seq).size == sum(lam) + sum(mu)


def test_mixed_hook_ratio_single_node():
    t = rf(5)
    assert mixed_hook_ratio((1,), (1,), t) == (t - qpow(-2)) / (t - qpow(2))


def test_mixed_hook_ratio_disjoint_support():
    # diagrams always share the corner node; the empty partition has no nodes
    assert mixed_hook_ratio((), (2,), 5) == rf(1)


def brute_force_mixed(lam, mu, t):
    lam, mu = Partition(lam), Partition(mu)
    out = rf(1)
    for a in range(1, len(lam) + 1):
        for b in range(1, lam[1] + 1):
            if b <= lam[a] and b <= mu[a]:
                first = lam[a] + sum(1 for p in mu.parts if p >= b) - a - b + 1
                second = mu[a] + sum(1 for p in lam.parts if p >= b) - a - b + 1
                out = out * (t - qpow(-2 * second)) / (t - qpow(2 * first))
    return out


@pytest.mark.parametrize("lam,mu", [((2,), (2,)), ((3,), (1, 1, 1)), ((2, 1), (3, 2)), ((1, 1), (2,))], ids=str)
def test_mixed_hook_ratio_brute_force(lam, mu):
    t = rf(5)
    assert mixed_hook_ratio(lam, mu, t) == brute_force_mixed(lam, mu, t)


def test_r_values():
    t = rf(7)
    assert r_xi((1,), (1,), (1,), t) == (t - qpow(-2)) / (t - 1)
    assert r_xi((1,), (1,), (2,), t) == (t - qpow(2)) / (t - 1)
    assert r_eta((1,), (1,), (1,), t) == (t - qpow(2)) / (t - 1)
    with pytest.raises(ValueError):
        r_xi((), (1,), (), t)


def test_hook_scalar_examples():
    assert hook_scalar_hff((2,)) == 1 + qpow(-2)
    assert hook_scalar_hf((1, 1)) == 1 + qpow(2)
    assert specialize_q(hook_scalar_hf((2, 1)), 1) == 3


@pytest.mark.parametrize("lam", [p for n in range(1, 9) for p in partitions_of(n)], ids=str)
def test_hook_scalar_forms_agree(lam):
    h = hook_scalar_hff(lam)
    assert h == hook_scalar_hf(lam)
    assert specialize_q(h, 1) == hook_product(lam)


def test_skew_cancellation_examples():
    assert skew_cancellation_check((2, 1), (2, 1), 5)
    assert skew_cancellation_check((2,), (1,), qpow(1) * 3 + qpow(-1))


def test_skew_cancellation_exhaustive():
    for n in range(1, 7):
        for lam in partitions_of(n):
            for k in range(1, n + 1):
                for mu in partitions_of(k):
                    if lam.contains(mu):
                        assert skew_cancellation_check(lam, mu, 7)


def test_young_subgroups():
    assert young_subgroup_elements((1, 1, 1)) == [identity(3)]
    assert sorted(young_subgroup_elements((2,))) == [(1, 2), (2, 1)]
    assert young_subgroup_elements((2, 1)) == [(1, 2, 3), (2, 1, 3)]
    with pytest.raises(ValueError):
        young_subgroup_elements((2, 1), "diagonal")


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(permutations(n), permutations(n))))
def test_permutation_group_laws(pair):
    s, t = pair
    n = len(s)
    assert compose(s, inverse(s)) == identity(n)
    assert length(s) == len(reduced_word(s))
    assert word_to_perm(n, reduced_word(s)) == s
    assert length(compose(s, t)) <= length(s) + length(t)
    assert length(inverse(s)) == length(s)


@given(partitions(8))
def test_partition_invariants(lam):
    assert lam.conjugate.conjugate == lam
    assert lam.conjugate.size == lam.size
    assert sorted(lam.hook(a, b) for a, b in lam.nodes) == sorted(
        lam.conjugate.hook(b, a) for a, b in lam.nodes)
    assert Partition.parse(str(lam)) == lam

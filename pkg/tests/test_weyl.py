import pytest

from hessberg.errors import GuardExceeded, InputError, InversionSetError, NotARoot, ParseError
from hessberg.weyl import (
    all_levis,
    classical_poincare_counts,
    complement_inversions,
    coset_decompose,
    enumerate_weyl,
    inversion_set,
    length_polynomial,
    levi_datum,
    maximal_inversions,
    parse_levi,
    scan_for_inversions,
    weyl_from_inversions,
    weyl_group,
    weyl_order,
)

ORDERS = {'A1': 2, 'A2': 6, 'B2': 8, 'G2': 12, 'A3': 24, 'B3': 48, 'C3': 48, 'D4': 192, 'F4': 1152}
RANK_3 = ['A1', 'A2', 'B2', 'G2', 'A3', 'B3', 'C3']


@pytest.mark.parametrize('name,order', sorted(ORDERS.items()))
def test_group_orders(system, group, name, order):
    W = group(name)
    assert len(W) == order
    assert weyl_order(system(name).cartan) == order
    assert W.longest.length == system(name).n_positive


def test_large_groups_are_guarded(system):
    assert weyl_order(system('E7').cartan) == 2903040
    assert weyl_order(system('E6').cartan) == 51840
    with pytest.raises(GuardExceeded):
        weyl_group(system('E7'))
    with pytest.raises(GuardExceeded):
        enumerate_weyl(system('E8'))
    with pytest.raises(GuardExceeded):
        enumerate_weyl(system('F4'), limit=100)


def test_a2_lengths(W_a2):
    assert sorted(w.length for w in W_a2) == [0, 1, 1, 2, 2, 3]
    assert length_polynomial(W_a2) == [1, 2, 2, 1]


@pytest.mark.parametrize('name', sorted(ORDERS))
def test_length_counts_match_degree_product(system, group, name):
    assert length_polynomial(group(name)) == classical_poincare_counts(system(name).cartan)


def test_words(W_a2):
    assert str(W_a2.identity) == "e"
    assert W_a2.parse_word("e") is W_a2.identity
    assert W_a2.parse_word("") is W_a2.identity
    w = W_a2.parse_word("s1 s2")
    assert str(w) == "s1 s2"
    assert w == W_a2.compose(W_a2.generators[0], W_a2.generators[1])
    assert W_a2.inverse(w) == W_a2.parse_word("s2 s1")
    assert W_a2.longest.canonical_word == (0, 1, 0)
    # s2 s1 s2 is the same element, printed by its smallest reduced word
    assert str(W_a2.parse_word("s2 s1 s2")) == "s1 s2 s1"


def test_word_errors(W_a2):
    with pytest.raises(ParseError):
        W_a2.parse_word("s1 x2")
    with pytest.raises(InputError):
        W_a2.parse_word("s3")


@pytest.mark.parametrize('name', RANK_3)
def test_canonical_words_multiply_out(group, name):
    W = group(name)
    for w in W:
        assert len(w.canonical_word) == w.length
        assert W.from_word(w.canonical_word) == w


@pytest.mark.parametrize('name', RANK_3)
def test_perm_commutes_with_negation(system, group, name):
    rs = system(name)
    for w in group(name):
        for i in range(len(rs.roots)):
            assert w.perm[rs.negate_id(i)] == rs.negate_id(w.perm[i])


def test_inversion_sets(W_a2, root):
    s1 = W_a2.generators[0]
    s1s2 = W_a2.parse_word("s1 s2")
    assert inversion_set(W_a2.identity) == set()
    assert inversion_set(s1) == {root(1, 0)}
    assert inversion_set(s1s2) == {root(1, 0), root(1, 1)}
    assert complement_inversions(W_a2.identity) == set(W_a2.rs.positive_roots)
    assert complement_inversions(s1s2) == {root(0, 1)}
    assert complement_inversions(W_a2.longest) == set()


@pytest.mark.parametrize('name', RANK_3)
def test_inverse_image_of_inversions(system, group, name):
    """w^-1(Phi_w) = -Phi_{w^-1}."""
    rs = system(name)
    W = group(name)
    for w in W:
        image = {w.inverse_perm[p] for p in rs.ids_of(w.inversions)}
        assert image == {rs.negate_id(q) for q in rs.ids_of(W.inverse(w).inversions)}


def test_maximal_inversions(W_a2, root):
    assert maximal_inversions(W_a2.generators[0]) == {root(1, 0)}
    assert maximal_inversions(W_a2.longest) == {root(1, 1)}
    assert maximal_inversions(W_a2.parse_word("s1 s2")) == {root(1, 1)}


@pytest.mark.parametrize('name', RANK_3)
def test_roots_above_maximal_inversions_are_not_inversions(system, group, name):
    rs = system(name)
    for w in group(name):
        if w.is_identity:
            continue
        top = maximal_inversions(w)
        assert top
        for gamma in top:
            above = {g for g in rs.positive_roots if g != gamma and all(b >= a for a, b in zip(gamma.coeffs, g.coeffs))}
            assert above <= complement_inversions(w)


def test_reflections(W_a2, root):
    assert W_a2.reflection(root(1, 1)) == W_a2.longest
    assert W_a2.reflection(root(-1, -1)) == W_a2.longest
    assert W_a2.reflection(root(1, 0)) == W_a2.generators[0]


@pytest.mark.parametrize('name', RANK_3)
def test_reflection_negates_its_root(system, group, name):
    rs = system(name)
    W = group(name)
    for gamma in rs.positive_roots:
        s = W.reflection(gamma)
        assert s(gamma) == -gamma
        assert W.compose(s, s) == W.identity


def test_coset_decompose_examples(W_a2):
    torus = levi_datum(W_a2, [])
    for w in W_a2:
        assert coset_decompose(w, torus) == (W_a2.identity, w)
    M = levi_datum(W_a2, [0])
    s1, s2 = W_a2.generators
    assert coset_decompose(W_a2.parse_word("s1 s2"), M) == (s1, s2)
    assert coset_decompose(W_a2.parse_word("s2 s1"), M) == (W_a2.identity, W_a2.parse_word("s2 s1"))


@pytest.mark.parametrize('name', RANK_3)
def test_coset_decompose_contract(system, group, name):
    rs = system(name)
    W = group(name)
    for M in all_levis(W):
        for w in W:
            y, v = coset_decompose(w, M)
            assert W.compose(y, v) == w
            assert w.length == y.length + v.length
            assert not y.inversions & ~M.phi_m_mask
            assert not v.inversions & ~M.phi_uq_mask
            image = {y.perm[p] for p in rs.ids_of(v.inversions)}
            assert set(rs.ids_of(w.inversions)) == set(rs.ids_of(y.inversions)) | image


def test_weyl_from_inversions_examples(W_a2, root):
    assert weyl_from_inversions(W_a2, []) == W_a2.identity
    assert weyl_from_inversions(W_a2, [root(1, 0)]) == W_a2.generators[0]
    assert weyl_from_inversions(W_a2, [root(1, 0), root(1, 1)]) == W_a2.parse_word("s1 s2")


def test_weyl_from_inversions_rejects(W_a2, root):
    with pytest.raises(InversionSetError) as info:
        weyl_from_inversions(W_a2, [root(1, 0), root(0, 1)])
    assert info.value.pair == (root(1, 0), root(0, 1))
    assert not info.value.complement
    with pytest.raises(InversionSetError) as info:
        weyl_from_inversions(W_a2, [root(1, 1)])
    assert info.value.complement
    with pytest.raises(NotARoot):
        weyl_from_inversions(W_a2, [root(-1, 0)])


@pytest.mark.parametrize('name', RANK_3)
def test_weyl_from_inversions_round_trip(group, name):
    W = group(name)
    for w in W:
        assert weyl_from_inversions(W, inversion_set(w)) == w


@pytest.mark.parametrize('name', ['A1', 'A2', 'B2', 'G2'])
def test_weyl_from_inversions_matches_scan(system, group, name):
    rs = system(name)
    W = group(name)
    for mask in range(1 << rs.n_positive):
        roots = rs.roots_of(mask)
        expected = scan_for_inversions(W, roots)
        if expected is None:
            with pytest.raises(InversionSetError):
                weyl_from_inversions(W, roots)
        else:
            assert weyl_from_inversions(W, roots) == expected
            if roots:
                assert any(g.height == 1 for g in roots)


def test_levi_datum(W_a2, root):
    M = levi_datum(W_a2, [0])
    assert M.phi_m == {root(1, 0), root(-1, 0)}
    assert M.phi_uq == {root(0, 1), root(1, 1)}
    assert M.labels == [1]
    assert str(M) == "1"
    assert not M.is_central and not M.is_torus
    assert levi_datum(W_a2, [0, 1]).is_central
    assert levi_datum(W_a2, []).is_torus


@pytest.mark.parametrize('name', RANK_3)
def test_highest_root_in_nilradical(system, group, name):
    rs = system(name)
    for M in all_levis(group(name)):
        if not M.is_central:
            assert M.phi_uq_mask >> rs.index_of(rs.highest_root) & 1


def test_parse_levi(W_a2):
    assert parse_levi(W_a2, "").is_torus
    assert parse_levi(W_a2, "1,2").is_central
    assert parse_levi(W_a2, "2").simple_subset == {1}
    with pytest.raises(InputError):
        parse_levi(W_a2, "3")
    with pytest.raises(ParseError):
        parse_levi(W_a2, "x")


def test_all_levis_order(W_a2):
    assert [M.labels for M in all_levis(W_a2)] == [[], [1], [2], [1, 2]]

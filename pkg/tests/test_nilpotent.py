import pytest

from hessberg.errors import (
    IdentityHasNoDescent,
    InputError,
    NotAFixedPoint,
    NotARoot,
    NotMaximalInversion,
)
from hessberg.hessenberg import enumerate_all, from_hessenberg_function, full_space, springer_space
from hessberg.nilpotent import (
    all_supports,
    connect_chain,
    connect_points,
    curve_admissible,
    descend,
    fixed_points,
    is_fixed_point,
    nilpotent_support,
    parse_nilpotent,
    phi_gamma_N,
    phi_gamma_N_dominates,
    regular_support,
    translate_split,
)
from hessberg.weyl import maximal_inversions


@pytest.fixture
def h233():
    return from_hessenberg_function([2, 3, 3], 3)


@pytest.fixture
def regular(a2):
    return regular_support(a2)


def words(elements):
    return [str(w) for w in elements]


def test_fixed_points_examples(a2, W_a2, regular, root):
    assert fixed_points(W_a2, regular, full_space(a2)) == list(W_a2)
    assert words(fixed_points(W_a2, regular, springer_space(a2))) == ["e"]
    theta = nilpotent_support(a2, [root(1, 1)])
    assert words(fixed_points(W_a2, theta, springer_space(a2))) == ["e", "s1", "s2"]


def test_regular_fixed_points_for_h233(W_a2, regular, h233):
    assert words(fixed_points(W_a2, regular, h233)) == ["e", "s1", "s2", "s1 s2 s1"]


def test_zero_nilpotent_fixes_everything(a2, W_a2):
    zero = parse_nilpotent("0", a2)
    assert zero.is_zero
    assert str(zero) == "0"
    assert fixed_points(W_a2, zero, springer_space(a2)) == list(W_a2)


def test_parse_nilpotent(a2, root):
    assert parse_nilpotent("", a2).is_zero
    assert parse_nilpotent("a1,a2", a2) == regular_support(a2)
    assert parse_nilpotent("[1,1]", a2).roots == {root(1, 1)}
    assert str(parse_nilpotent("a2, a1", a2)) == "a1,a2"
    with pytest.raises(InputError):
        parse_nilpotent("-a1", a2)


def test_all_supports(system):
    assert len(all_supports(system('A2'))) == 8
    assert len(all_supports(system('G2'))) == 64


def test_phi_gamma_N_examples(system, a2, root):
    assert phi_gamma_N(a2, root(1, 0), nilpotent_support(a2, [root(0, 1)])) == {root(1, 1)}
    assert phi_gamma_N(a2, root(1, 1), regular_support(a2)) == set()
    assert phi_gamma_N(a2, root(1, 0), parse_nilpotent("0", a2)) == set()
    g2 = system('G2')
    assert phi_gamma_N(g2, root(1, 0), nilpotent_support(g2, [root(0, 1)])) == {
        root(1, 1), root(2, 1), root(3, 1),
    }


def test_phi_gamma_N_needs_a_positive_root(a2, regular, root):
    with pytest.raises(NotARoot):
        phi_gamma_N(a2, root(-1, 0), regular)


@pytest.mark.parametrize('name', ['A2', 'B2', 'G2', 'A3'])
def test_phi_gamma_N_lies_above_gamma(system, name):
    rs = system(name)
    for N in (regular_support(rs), nilpotent_support(rs, rs.positive_roots)):
        for gamma in rs.positive_roots:
            assert phi_gamma_N_dominates(rs, gamma, N)


def test_curve_admissible(W_a2, regular, h233, root):
    s1 = W_a2.generators[0]
    assert curve_admissible(s1, root(1, 0), regular, h233)
    assert curve_admissible(W_a2.longest, root(1, 1), regular, h233)


def test_curve_admissible_preconditions(a2, W_a2, regular, h233, root):
    with pytest.raises(NotAFixedPoint):
        curve_admissible(W_a2.parse_word("s1 s2"), root(1, 1), regular, h233)
    with pytest.raises(NotMaximalInversion):
        curve_admissible(W_a2.longest, root(1, 0), regular, full_space(a2))


def test_descend_examples(a2, W_a2, regular, h233, root):
    step = descend(W_a2.generators[0], regular, h233)
    assert (str(step.w_before), step.gamma, str(step.w_after)) == ("s1", root(1, 0), "e")
    step = descend(W_a2.longest, regular, h233)
    assert (step.gamma, str(step.w_after)) == (root(1, 1), "e")
    step = descend(W_a2.parse_word("s1 s2"), parse_nilpotent("0", a2), springer_space(a2))
    assert (step.gamma, str(step.w_after)) == (root(1, 1), "s1")


def test_descend_from_identity(W_a2, regular, h233):
    with pytest.raises(IdentityHasNoDescent):
        descend(W_a2.identity, regular, h233)


def test_connect_chain(a2, W_a2, regular, h233):
    chain = connect_chain(W_a2.longest, regular, h233)
    assert len(chain) == 1
    assert words(chain.elements) == ["s1 s2 s1", "e"]
    chain = connect_chain(W_a2.parse_word("s1 s2"), parse_nilpotent("0", a2), springer_space(a2))
    assert words(chain.elements) == ["s1 s2", "s1", "e"]
    assert chain.end.is_identity


def steps(chain):
    return [(str(s.w_before), s.gamma, str(s.w_after)) for s in chain.steps]


def test_simple_root_nilpotent_with_full_space(a2, W_a2, root):
    N = nilpotent_support(a2, [root(1, 0)])
    g = full_space(a2)
    s1_s2 = W_a2.parse_word("s1 s2")
    assert curve_admissible(W_a2.longest, root(1, 1), N, g)
    assert curve_admissible(s1_s2, root(1, 1), N, g)
    step = descend(W_a2.longest, N, g)
    assert (step.gamma, str(step.w_after)) == (root(1, 1), "e")
    assert steps(connect_chain(s1_s2, N, g)) == [("s1 s2", root(1, 1), "s1"), ("s1", root(1, 0), "e")]


def test_highest_root_nilpotent_with_borel(a2, W_a2, root):
    theta = nilpotent_support(a2, [root(1, 1)])
    b = springer_space(a2)
    s1 = W_a2.generators[0]
    assert curve_admissible(s1, root(1, 0), theta, b)
    step = descend(s1, theta, b)
    assert (str(step.w_before), step.gamma, str(step.w_after)) == ("s1", root(1, 0), "e")
    assert steps(connect_chain(s1, theta, b)) == [("s1", root(1, 0), "e")]


def test_chain_from_identity_is_empty(W_a2, regular, h233):
    chain = connect_chain(W_a2.identity, regular, h233)
    assert len(chain) == 0
    assert chain.steps == ()
    assert chain.end == W_a2.identity


def test_connect_chain_needs_a_fixed_point(W_a2, regular, h233):
    with pytest.raises(NotAFixedPoint):
        connect_chain(W_a2.parse_word("s1 s2"), regular, h233)


def test_connect_points(W_a2, regular, h233):
    s1, s2 = W_a2.generators
    assert words(connect_points(s1, s2, regular, h233)) == ["s1", "e", "s2"]
    assert words(connect_points(W_a2.longest, s1, regular, h233)) == ["s1 s2 s1", "e", "s1"]


def test_translate_split(a2, W_a2, h233, root):
    assert translate_split(W_a2.identity, h233) == (frozenset(a2.positive_roots), frozenset())
    assert translate_split(W_a2.longest, springer_space(a2)) == (frozenset(), frozenset())
    assert translate_split(W_a2.longest, h233) == (frozenset(), {root(1, 0), root(0, 1)})


@pytest.mark.parametrize('name', ['A2', 'B2', 'G2'])
def test_every_fixed_point_reaches_the_identity(system, group, name):
    rs = system(name)
    W = group(name)
    for H in enumerate_all(rs):
        for w in W:
            complement, lowered = translate_split(w, H)
            assert not complement & lowered
        for N in all_supports(rs):
            for w in fixed_points(W, N, H):
                for gamma in maximal_inversions(w):
                    assert curve_admissible(w, gamma, N, H)
                chain = connect_chain(w, N, H)
                assert chain.end.is_identity
                assert len(chain) <= w.length
                assert all(is_fixed_point(x, N, H) for x in chain.elements)
                lengths = [x.length for x in chain.elements]
                assert lengths == sorted(lengths, reverse=True)

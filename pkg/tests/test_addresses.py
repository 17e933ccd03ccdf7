"""Address and arity laws."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from operads import addresses as ad
from operads.errors import IllegitimateInsertion, NotAPrefix, OutOfDomain

words = st.lists(st.integers(min_value=1, max_value=3), max_size=4).map(tuple)


def brute_rank(x, a):
    """Independent oracle: count lexicographic predecessors one by one."""
    return sum(1 for b in x if ad.lex_lt(b, a)) + 1


def arities(max_words=4):
    return st.lists(words, max_size=max_words).map(frozenset).filter(
        ad.is_nominal_arity)


def test_strip_examples():
    assert ad.strip((), (1, 2)) == (1, 2)
    assert ad.strip((1,), (1, 2)) == (2,)
    with pytest.raises(NotAPrefix):
        ad.strip((2,), (1, 2))


def test_lex_compare_examples():
    assert ad.lex_compare((1, 1), (1, 2)) == ad.LT
    assert ad.lex_compare((2, 1), (1, 2, 2)) == ad.GT
    assert ad.lex_compare((1,), (1, 1)) == ad.INCOMPARABLE_OR_EQUAL
    assert ad.lex_compare((1,), (1,)) == ad.INCOMPARABLE_OR_EQUAL


def test_is_nominal_arity_examples():
    x = {(1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2), (2, 1), (2, 2)}
    assert ad.is_nominal_arity(x)
    assert not ad.is_nominal_arity({(1,), (1, 2)})
    assert ad.is_nominal_arity(set())


def test_prefix_of_arity_examples():
    assert ad.is_prefix_of_arity((), {(1,), (2,)})
    assert ad.is_prefix_of_arity((5, 7), frozenset())
    assert not ad.is_prefix_of_arity((1,), {(1, 1), (2,)})


def test_scale_examples():
    assert ad.scale((), frozenset({(1,), (2,)})) == {(1,), (2,)}
    assert ad.scale((2,), frozenset({(1,), (2,)})) == {(2, 1), (2, 2)}
    assert ad.scale((1,), ad.scale((2,), frozenset({()}))) == {(1, 2)}


def test_arity_insert_examples():
    assert ad.arity_insert(frozenset({()}), (), frozenset({(1,), (2,)})) \
        == {(1,), (2,)}
    assert ad.arity_insert(frozenset({(1,), (2,)}), (2,),
                           frozenset({(2, 1), (2, 2)})) \
        == {(1,), (2, 1), (2, 2)}
    with pytest.raises(IllegitimateInsertion):
        ad.arity_insert(frozenset({(1,), (2,)}), (1,), frozenset({(2, 1)}))


def test_k_examples():
    assert ad.k_index(ad.nbar(5), (3,)) == 3
    assert all(ad.k_index(ad.nbar(5), (i,)) == i for i in range(1, 6))
    assert ad.k_index(frozenset({()}), ()) == 1
    x = frozenset({(1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2), (2, 1), (2, 2)})
    assert ad.k_index(x, (1, 2, 1)) == brute_rank(x, (1, 2, 1)) == 3
    with pytest.raises(OutOfDomain):
        ad.k_index(x, (9,))
    with pytest.raises(OutOfDomain):
        ad.k_inverse(x, 7)


def test_serialization_round_trip():
    x = ad.arity_from_str("{2-1,2-2,1-1-1}")
    assert ad.arity_str(x) == "{2-1,2-2,1-1-1}"
    assert ad.word_from_str("1-2-11") == (1, 2, 11)
    assert ad.word_str(()) == "e"
    assert ad.arity_str(frozenset()) == "{}"


@given(arities())
def test_k_monotone_and_inverse(x):
    members = sorted(x)
    for a in members:
        assert ad.k_index(x, a) == brute_rank(x, a)
        assert ad.k_inverse(x, ad.k_index(x, a)) == a
    for n in range(1, len(x) + 1):
        assert ad.k_index(x, ad.k_inverse(x, n)) == n
    for a in members:
        for b in members:
            if ad.lex_lt(a, b):
                assert ad.k_index(x, a) < ad.k_index(x, b)


@given(words, arities())
def test_k2_scaling(b, x):
    for a in x:
        assert ad.k_index(ad.scale(b, x), b + a) == ad.k_index(x, a)
    assert len(ad.scale(b, x)) == len(x)


@given(arities(), arities())
def test_k3_insertion(y, z):
    for b in sorted(y):
        x = ad.scale(b, z)
        merged = ad.arity_insert(y, b, x)
        assert len(merged) == len(y) - 1 + len(x)
        for a in merged:
            if a in x:
                assert ad.k_index(merged, a) \
                    == ad.k_index(y, b) - 1 + ad.k_index(x, a)
            elif ad.lex_lt(a, b):
                assert ad.k_index(merged, a) == ad.k_index(y, a)
            else:
                assert ad.k_index(merged, a) \
                    == ad.k_index(y, a) - 1 + len(x)


@given(words, words, arities(), arities())
def test_remark_scaling_laws(a, b, y, z):
    # scaling composes, and distributes over insertion
    assert ad.scale(a, ad.scale(b, y)) == ad.scale(a + b, y)
    for c in sorted(y):
        x = ad.scale(c, z)
        assert ad.scale(a, ad.arity_insert(y, c, x)) \
            == ad.arity_insert(ad.scale(a, y), a + c, ad.scale(a, x))


@given(arities(), arities(), arities())
def test_remark_insert_laws(z, zy, zx):
    # sequential insertions into one host commute; nested ones associate
    for b in sorted(z):
        y = ad.scale(b, zy)
        zb = ad.arity_insert(z, b, y)
        for a in sorted(y):
            x = ad.scale(a, zx)
            assert ad.arity_insert(zb, a, x) \
                == ad.arity_insert(z, b, ad.arity_insert(y, a, x))
        for a in sorted(z):
            if a == b or a not in zb:
                continue
            x = ad.scale(a, zx)
            assert ad.arity_insert(zb, a, x) \
                == ad.arity_insert(ad.arity_insert(z, a, x), b, y)


def test_prefix_predicate_transport():
    # scaled prefixes stay prefixes; inserting cannot lose host prefixes
    probes = [(), (1,), (2,), (1, 1), (1, 2)]
    x = frozenset({(1, 1), (1, 2)})
    y = frozenset({(1,), (2,)})
    for p in probes:
        if ad.is_prefix_of_arity(p, x):
            assert ad.is_prefix_of_arity((3,) + p, ad.scale((3,), x))
        if ad.is_prefix_of_arity(p, y):
            assert ad.is_prefix_of_arity(p, ad.arity_insert(y, (1,), x))

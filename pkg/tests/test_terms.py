"""Term construction, signatures, and the address action."""

import random

import pytest

from operads import addresses as ad
from operads.errors import (IllegitimateInsertion, NotAPrefix,
                            UnknownGenerator)
from operads.terms import (OGen, OIns, OUnit, OeGen, OeIns, OuGen,
                           OuIns, OuUnit, Signature, build, is_atom,
                           scale_term, strip_term, term_size)
from operads.translate import oe_to_o

from conftest import SIG_1234, SIG_XY, random_oe_term, random_ou_term

W = ad.word_from_str


def recompute_s_t(t):
    """Independent recomputation of the cached signatures."""
    if isinstance(t, OuGen):
        k = t.sig.arity(t.name)
        s = frozenset({t.addr}) if k == 1 else ad.scale(t.addr, ad.nbar(k))
        return s, t.addr
    if isinstance(t, OuUnit):
        return frozenset({t.addr}), t.addr
    sg, tg = recompute_s_t(t.g)
    sf, tf = recompute_s_t(t.f)
    return ad.arity_insert(sg, tf, sf), tg


def test_signature_validation():
    with pytest.raises(ValueError):
        Signature.of({"I": 2})
    with pytest.raises(ValueError):
        Signature.of({"x": -1})
    sig = Signature.of({"x": 2})
    with pytest.raises(UnknownGenerator):
        sig.arity("nope")
    assert Signature.from_text("x 2\n\n# c\ny 3").arity("y") == 3


def test_build_examples():
    sig = SIG_XY
    t = build(sig, "o", True, ("ins", ("gen", "x"), 2, ("gen", "x")))
    assert t.alpha == 3
    raw = ("ins",
           ("ins", ("agen", (), "x"), None, ("agen", (2,), "x")),
           None,
           ("ins", ("ins", ("agen", (1,), "x"), None, ("agen", (1, 1), "x")),
            None, ("agen", (1, 2), "x")))
    f = build(sig, "ou", True, raw)
    assert f.s == ad.arity_from_str("{1-1-1,1-1-2,1-2-1,1-2-2,2-1,2-2}")
    assert f.t == ()
    with pytest.raises(IllegitimateInsertion) as err:
        build(sig, "oe", True, ("ins", ("gen", "x"), (3,), ("gen", "x")))
    assert "not in s" in str(err.value)


def test_build_error_paths():
    sig = SIG_XY
    raw = ("ins", ("gen", "x"), 1,
           ("ins", ("gen", "x"), 9, ("gen", "x")))
    with pytest.raises(IllegitimateInsertion) as err:
        build(sig, "o", True, raw)
    assert err.value.path == "f"
    with pytest.raises(IllegitimateInsertion):
        build(sig, "o", False, ("unit",))


def test_signature_of_examples():
    sig = Signature.of({"x": 2, "z": 1, "n": 0})
    assert OeGen("x", sig).s == {(1,), (2,)}
    assert OeGen("z", sig).s == {()}
    assert OeGen("n", sig).s == frozenset()
    two_i = OuUnit((2,), sig)
    assert two_i.s == {(2,)} and two_i.t == (2,)
    assert OuGen((3,), "z", sig).s == {(3,)}


def test_unitary_flag_rules():
    sig = SIG_XY
    with pytest.raises(IllegitimateInsertion):
        OIns(OGen("x", sig, unitary=False), 1, OUnit(sig))
    t = OuIns(OuGen((), "x", sig), OuGen((1,), "x", sig))
    assert t.unitary


def test_scale_strip_examples():
    sig = SIG_XY
    f = OuGen((2,), "x", sig)
    assert scale_term((3,), f) == OuGen((3, 2), "x", sig)
    assert scale_term((), f) == f
    assert strip_term((2,), OuGen((2, 1), "x", sig)) == OuGen((1,), "x", sig)
    with pytest.raises(NotAPrefix):
        strip_term((1,), OuGen((2,), "x", sig))


def test_scale_strip_round_trip():
    rng = random.Random(7)
    for _ in range(150):
        f = random_ou_term(rng, SIG_1234, 8)
        b = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 3)))
        scaled = scale_term(b, f)
        assert strip_term(b, scaled) == f
        assert scaled.s == ad.scale(b, f.s)
        assert scaled.t == b + f.t
        assert scale_term((1,), scale_term((2,), f)) \
            == scale_term((1, 2), f)


def test_target_is_prefix_of_source():
    rng = random.Random(8)
    for _ in range(200):
        f = random_ou_term(rng, SIG_1234, 8)
        assert ad.is_prefix_of_arity(f.t, f.s)


def test_cached_signature_matches_recomputation():
    rng = random.Random(9)
    for _ in range(200):
        f = random_ou_term(rng, SIG_1234, 8)
        s, t = recompute_s_t(f)
        assert (f.s, f.t) == (s, t)


def test_oe_cardinality_vs_numeric_arity():
    rng = random.Random(10)
    for _ in range(200):
        f = random_oe_term(rng, SIG_1234, 8)
        assert oe_to_o(f).alpha == len(f.s)


def test_term_printing_round_trip_forms():
    sig = SIG_XY
    t = OuIns(OuGen((), "x", sig), OuGen((2,), "x", sig))
    assert str(t) == "(e*x o 2*x)"
    assert str(OIns(OGen("x", sig), 2, OUnit(sig))) == "(x o[2] I)"
    assert str(OeIns(OeGen("x", sig), (1,), OeGen("y", sig))) \
        == "(x o[1] y)"
    assert term_size(t) == 2 and is_atom(t.g)

"""Shared fixtures and random generators for the suite."""

import random

import pytest

from operads.arrows import Comp, Id, basic_moves
from operads.terms import (OGen, OIns, OUnit, OeGen, OeIns, OeUnit, OuGen,
                           OuIns, OuUnit, Signature)

SIG_XY = Signature.of({"x": 2, "y": 3})
SIG_1234 = Signature.of({"u": 1, "x": 2, "y": 3, "z": 4})


@pytest.fixture
def sig_xy():
    return SIG_XY


@pytest.fixture
def sig_1234():
    return SIG_1234


def random_o_term(rng, sig, max_leaves, unitary=True):
    if max_leaves <= 1 or rng.random() < 0.35:
        if unitary and rng.random() < 0.15:
            return OUnit(sig)
        return OGen(rng.choice(sig.names()), sig, unitary)
    left = rng.randint(1, max_leaves - 1)
    g = random_o_term(rng, sig, left, unitary)
    if g.alpha == 0:
        return g
    f = random_o_term(rng, sig, max_leaves - left, unitary)
    return OIns(g, rng.randint(1, g.alpha), f)


def random_oe_term(rng, sig, max_leaves, unitary=True):
    if max_leaves <= 1 or rng.random() < 0.35:
        if unitary and rng.random() < 0.15:
            return OeUnit(sig)
        return OeGen(rng.choice(sig.names()), sig, unitary)
    left = rng.randint(1, max_leaves - 1)
    g = random_oe_term(rng, sig, left, unitary)
    if not g.s:
        return g
    f = random_oe_term(rng, sig, max_leaves - left, unitary)
    return OeIns(g, rng.choice(sorted(g.s)), f)


def random_ou_term(rng, sig, max_leaves, unitary=True, target=()):
    if max_leaves <= 1 or rng.random() < 0.35:
        if unitary and rng.random() < 0.15:
            return OuUnit(target, sig)
        return OuGen(target, rng.choice(sig.names()), sig, unitary)
    left = rng.randint(1, max_leaves - 1)
    g = random_ou_term(rng, sig, left, unitary, target)
    if not g.s:
        return g
    slot = rng.choice(sorted(g.s))
    f = random_ou_term(rng, sig, max_leaves - left, unitary, slot)
    return OuIns(g, f)


def term_with_slots(rng, sig, target, size, min_slots, unitary=False):
    """A diversified term with at least min_slots open places."""
    for _ in range(200):
        t = random_ou_term(rng, sig, size, unitary, target)
        if len(t.s) >= min_slots:
            return t
    raise AssertionError("could not build a term with enough places")


def random_walk_arrow(rng, obj, steps, unit_moves=False):
    """A composite of random single basic-arrow moves starting at obj."""
    arrow = Id(obj)
    for _ in range(steps):
        moves = basic_moves(obj, unit_moves=unit_moves)
        if not moves:
            break
        step, obj = rng.choice(moves)
        arrow = Comp(step, arrow) if not isinstance(arrow, Id) else step
    return arrow


@pytest.fixture
def rng():
    return random.Random(20260810)

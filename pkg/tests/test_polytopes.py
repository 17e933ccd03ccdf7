"""Destruction records, skeleton enumeration, faces, emission."""

from collections import Counter

import pytest

from operads.arrows import strictify
from operads.perm_engine import graph
from operads.polytopes import (Skeleton, TreeInput, build_skeleton,
                               emit, enumerate_objects, internal_vertices,
                               render_stree, stree_of_term)
from operads.terms import OuGen, OuIns, Signature
from operads.translate import term_neighbors

from ex13 import EXAMPLES


def hemi_tree():
    return EXAMPLES["13.1"][0]


def test_tree_input_validation():
    sig = Signature.of({"x": 2})
    with pytest.raises(ValueError):
        TreeInput(sig, frozenset(), {})
    with pytest.raises(ValueError):
        # arity of the label does not match the child count
        TreeInput(sig, frozenset({(1,), (2,), (3,)}), {(): "x"})
    with pytest.raises(ValueError):
        TreeInput(sig, frozenset({(1,), (2,)}), {(): "x", (3,): "x"})


def test_enumerate_objects_count_and_membership():
    tree = hemi_tree()
    objs = enumerate_objects(tree)
    assert len(objs) == 18
    sig = tree.sig
    xo = lambda a: OuGen(a, "x", sig, unitary=False)
    paper_object = OuIns(OuIns(xo(()), xo((2,))),
                         OuIns(OuIns(xo((1,)), xo((1, 1))), xo((1, 2))))
    assert paper_object in objs
    assert all(o.s == tree.leaves and o.t == () for o in objs)


def test_stree_examples():
    tree = hemi_tree()
    sig = tree.sig
    xo = lambda a: OuGen(a, "x", sig, unitary=False)
    f = OuIns(OuIns(xo(()), xo((2,))),
              OuIns(OuIns(xo((1,)), xo((1, 1))), xo((1, 2))))
    assert render_stree(stree_of_term(f), tree.name) == "c.((b.a)+d)"
    comb = OuIns(OuIns(OuIns(OuIns(xo(()), xo((2,))), xo((1,))), xo((1, 2))),
                 xo((1, 1)))
    assert render_stree(stree_of_term(comb), tree.name) == "a.b.c.d"


def test_stree_plus_is_commutative_dot_is_not():
    tree = hemi_tree()
    sig = tree.sig
    xo = lambda a: OuGen(a, "x", sig, unitary=False)
    # parallel branches are stored sorted, not in term order: here the
    # host residue ("d") structurally precedes the inserted one ("b.a"),
    # yet the record lists the sorted pair
    f = OuIns(OuIns(xo(()), xo((2,))),
              OuIns(OuIns(xo((1,)), xo((1, 1))), xo((1, 2))))
    s = stree_of_term(f)
    par = s.items[1]
    assert [a.vertices() for a in par.args] \
        == sorted(a.vertices() for a in par.args)
    assert render_stree(s, tree.name) == "c.((b.a)+d)"
    for t in enumerate_objects(tree):
        for item in stree_of_term(t).items:
            if hasattr(item, "args"):
                vs = [a.vertices() for a in item.args]
                assert vs == sorted(vs)
    # sequential order differences do change the record
    comb1 = OuIns(OuIns(OuIns(OuIns(xo(()), xo((2,))), xo((1,))),
                        xo((1, 1))), xo((1, 2)))
    comb2 = OuIns(OuIns(OuIns(OuIns(xo(()), xo((2,))), xo((1,))),
                        xo((1, 2))), xo((1, 1)))
    assert render_stree(stree_of_term(comb1), tree.name) \
        != render_stree(stree_of_term(comb2), tree.name)


def test_stree_bijection_on_examples():
    for tree, _ in EXAMPLES.values():
        objs = enumerate_objects(tree)
        labels = {render_stree(stree_of_term(t), tree.name) for t in objs}
        assert len(labels) == len(objs)


def test_connectivity_on_examples():
    for tree, _ in EXAMPLES.values():
        objs = enumerate_objects(tree)
        start = objs[0]
        seen = {start}
        frontier = [start]
        while frontier:
            new = []
            for t in frontier:
                for nxt in term_neighbors(t):
                    if nxt not in seen:
                        seen.add(nxt)
                        new.append(nxt)
            frontier = new
        assert seen == set(objs)


def test_counts_all_examples():
    for name, (tree, (v, e, beta, faces)) in EXAMPLES.items():
        skel = build_skeleton(tree)
        assert len(skel.objects) == v, name
        assert len(skel.edge_list) == e, name
        assert sum(1 for ed in skel.edge_list if ed[2] == "beta") == beta, name
        assert Counter(tag for _, tag in skel.faces) == Counter(faces), name
        assert skel.euler == 2, name


def test_edge_soundness_strictified():
    from operads.arrows import basic_moves
    tree = hemi_tree()
    skel = build_skeleton(tree)
    objs = list(skel.objects)
    moves = {i: basic_moves(t, unit_moves=False) for i, t in enumerate(objs)}
    for u, v, label, _ in skel.edge_list:
        arrows = [a for a, tgt in moves[u] if tgt == objs[v]]
        assert arrows, "edge without a basic arrow"
        sa = strictify(arrows[0])
        g = graph(sa)
        if label == "beta":
            assert sa.steps == () and g == tuple(range(len(g)))
        else:
            # a single exchange: two adjacent blocks swap, order inside
            # each block preserved, everything else fixed
            moved = [i for i, j in enumerate(g) if i != j]
            assert moved
            lo, hi = moved[0], moved[-1] + 1
            m = g[lo] - lo          # width of the block jumping left
            k = hi - lo - m
            assert k > 0 and m > 0
            assert all(g[i] == i + m for i in range(lo, lo + k))
            assert all(g[i] == i - k for i in range(lo + k, hi))


def test_emit_determinism_and_content():
    tree = hemi_tree()
    skel = build_skeleton(tree)
    dot1, dot2 = emit(skel, "dot"), emit(skel, "dot")
    assert dot1 == dot2
    assert 'label="c.((b.a)+d)"' in dot1
    assert dot1.count("--") == 27
    js = emit(skel, "json")
    assert js == emit(skel, "json")
    import json
    doc = json.loads(js)
    assert doc["counts"] == {"V": 18, "E": 27, "F": 11, "euler": 2}
    with pytest.raises(ValueError):
        emit(skel, "svg")


def test_edges_only_dot_is_valid():
    tree = hemi_tree()
    skel = build_skeleton(tree)
    bare = Skeleton(tree, skel.objects, skel.strees, skel.edge_list, ())
    text = emit(bare, "dot")
    assert text.startswith("graph skeleton {") and text.endswith("}\n")

"""Skeletons of the tree-destruction polytopes.

Input: a finite tree given by its leaf set (a nominal arity) and a
generator label for every internal vertex.  The objects are all the
non-unitary diversified terms whose source is the leaf set and whose
target is the root, i.e. all orders in which the tree can be destructed;
edges are single re-association or exchange rewrites; 2-faces are the
commuting diagrams of the axiom families, found by instantiating each
family's source shape at every object.

Labels are destruction records over the internal vertices: ``.`` is
sequential destruction, ``+`` parallel destruction of independent
residues (associative, commutative, canonically sorted).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import addresses as ad
from .errors import IllegitimateInsertion
from .terms import OuGen, OuIns, Signature, Term, is_atom


@dataclass(frozen=True)
class TreeInput:
    sig: Signature
    leaves: frozenset
    labels: dict
    rename: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.leaves:
            raise ValueError("leaf set must be nonempty")
        ad.nominal_arity(self.leaves)
        internal = internal_vertices(self.leaves)
        for v in internal:
            if v not in self.labels:
                raise ValueError(f"missing label for vertex {ad.word_str(v)}")
            digits = {c[len(v)] for c in self.leaves if ad.is_prefix(v, c) and c != v} | \
                     {w[len(v)] for w in internal if ad.is_prefix(v, w) and w != v}
            k = self.sig.arity(self.labels[v])
            if digits != set(range(1, k + 1)):
                raise ValueError(
                    f"vertex {ad.word_str(v)} has children {sorted(digits)}, "
                    f"but label {self.labels[v]} has arity {k}")
        for v in self.labels:
            if v not in internal:
                raise ValueError(f"label for non-internal vertex {ad.word_str(v)}")

    def atom(self, v) -> Term:
        return OuGen(v, self.labels[v], self.sig, unitary=False)

    def atoms(self) -> list:
        return [self.atom(v) for v in sorted(internal_vertices(self.leaves),
                                             key=lambda w: (len(w), w))]

    def name(self, v) -> str:
        return self.rename.get(v, ad.word_str(v))


def internal_vertices(leaves) -> set:
    out = set()
    for leaf in leaves:
        for i in range(len(leaf)):
            out.add(leaf[:i])
    return out


# --- destruction records ------------------------------------------------------

@dataclass(frozen=True)
class Par:
    """Parallel destructions of independent residues, canonically sorted."""

    args: tuple


@dataclass(frozen=True)
class STree:
    """A destruction record: vertices removed in sequence, with splits."""

    items: tuple  # vertex addresses and Par groups

    def vertices(self) -> tuple:
        out = []
        for item in self.items:
            if isinstance(item, Par):
                for arg in item.args:
                    out.extend(arg.vertices())
            else:
                out.append(item)
        return tuple(sorted(out))


def stree_of_term(t: Term) -> STree:
    """Remove the outermost insertion first, then the residues."""
    if is_atom(t):
        return STree(())
    sg = stree_of_term(t.g)
    sf = stree_of_term(t.f)
    head = t.f.t
    branches = tuple(s for s in (sg, sf) if s.items)
    if len(branches) == 2:
        group = Par(tuple(sorted(branches, key=lambda s: s.vertices())))
        return STree((head, group))
    if len(branches) == 1:
        return STree((head,) + branches[0].items)
    return STree((head,))


def render_stree(s: STree, name) -> str:
    def step(item):
        if isinstance(item, Par):
            return "(" + "+".join(arg_str(a) for a in item.args) + ")"
        return name(item)

    def arg_str(arg):
        if len(arg.items) == 1 and not isinstance(arg.items[0], Par):
            return name(arg.items[0])
        return "(" + ".".join(step(i) for i in arg.items) + ")"

    return ".".join(step(i) for i in s.items)


# --- object enumeration ---------------------------------------------------------

def enumerate_objects(tree: TreeInput) -> list:
    """Every assembly of the atom set, sorted by destruction record."""
    atoms = tree.atoms()
    index = {a: i for i, a in enumerate(atoms)}
    cache = {}

    def assemblies(mask):
        if mask in cache:
            return cache[mask]
        members = [a for a in atoms if mask & (1 << index[a])]
        if len(members) == 1:
            cache[mask] = [members[0]]
            return cache[mask]
        out = []
        sub = (mask - 1) & mask
        while sub:
            rest = mask & ~sub
            if rest:
                for g in assemblies(sub):
                    for f in assemblies(rest):
                        if f.t in g.s:
                            out.append(OuIns(g, f))
            sub = (sub - 1) & mask
        cache[mask] = out
        return out

    full = (1 << len(atoms)) - 1
    objs = set(assemblies(full))
    return sorted(objs, key=lambda t: (render_stree(stree_of_term(t),
                                                    tree.name), str(t)))


# --- edges -----------------------------------------------------------------------

def _redexes(t: Term, path=()):
    """Single basic rewrites: (path, kind, result)."""
    out = []
    if isinstance(t, OuIns):
        g, f = t.g, t.f
        if isinstance(g, OuIns):
            if f.t in g.f.s:
                out.append((path, "beta", OuIns(g.g, OuIns(g.f, f))))
            if f.t in g.g.s and f.t != g.f.t:
                out.append((path, "theta", OuIns(OuIns(g.g, f), g.f)))
        if isinstance(f, OuIns):
            out.append((path, "ibeta", OuIns(OuIns(g, f.g), f.f)))
        for sub, kind, res in _redexes(g, path + ("g",)):
            out.append((sub, kind, OuIns(res, f)))
        for sub, kind, res in _redexes(f, path + ("f",)):
            out.append((sub, kind, OuIns(g, res)))
    return out


def edges(objects) -> list:
    """Undirected single-arrow edges, labelled beta or theta.

    A beta edge records its orientation: the first endpoint is the
    left-associated side.
    """
    pos = {t: i for i, t in enumerate(objects)}
    seen = {}
    out = []
    for i, t in enumerate(objects):
        for path, kind, res in _redexes(t):
            j = pos[res]
            key = frozenset((i, j))
            if kind == "ibeta":
                rec = (j, i, "beta", path)
            else:
                rec = (i, j, kind, path) if kind == "beta" else \
                      (min(i, j), max(i, j), "theta", path)
            if key in seen:
                if seen[key][2] != rec[2]:
                    raise IllegitimateInsertion(
                        "one object pair under two edge labels")
                continue
            seen[key] = rec
            out.append(rec)
    return sorted(out, key=lambda e: (e[0], e[1]))


# --- faces -----------------------------------------------------------------------

def _subterm(t, path):
    for step in path:
        t = t.g if step == "g" else t.f
    return t


def _replace(t, path, new):
    if not path:
        return new
    if path[0] == "g":
        return OuIns(_replace(t.g, path[1:], new), t.f)
    return OuIns(t.g, _replace(t.f, path[1:], new))


def _shape_faces(obj, path, node):
    """Faces whose boundary starts from a ((j.h).g).f shape at this node."""
    if not (isinstance(node, OuIns) and isinstance(node.g, OuIns)
            and isinstance(node.g.g, OuIns)):
        return []
    j, h = node.g.g.g, node.g.g.f
    g, f = node.g.f, node.f
    I = OuIns
    tg, tf = g.t, f.t
    if tg in h.s and tf in g.s:
        cycle = [I(I(I(j, h), g), f), I(I(j, I(h, g)), f), I(j, I(I(h, g), f)),
                 I(j, I(h, I(g, f))), I(I(j, h), I(g, f))]
        return [("beta-pent", cycle)]
    if tg in h.s and tf in h.s and tf != tg:
        cycle = [I(I(I(j, h), g), f), I(I(j, I(h, g)), f), I(j, I(I(h, g), f)),
                 I(j, I(I(h, f), g)), I(I(j, I(h, f)), g), I(I(I(j, h), f), g)]
        return [("beta-theta-1", cycle)]
    if tg in h.s and tf in j.s and tf != h.t:
        cycle = [I(I(I(j, h), g), f), I(I(j, I(h, g)), f), I(I(j, f), I(h, g)),
                 I(I(I(j, f), h), g), I(I(I(j, h), f), g)]
        return [("beta-theta-2", cycle)]
    if tg in j.s and tg != h.t and tf in j.s and tf != h.t and tf != tg:
        cycle = [I(I(I(j, h), g), f), I(I(I(j, h), f), g), I(I(I(j, f), h), g),
                 I(I(I(j, f), g), h), I(I(I(j, g), f), h), I(I(I(j, g), h), f)]
        return [("theta-yb", cycle)]
    return []


def _index_positions(path, kind):
    """Positions of the three index subterms of a redex at path."""
    if kind in ("beta", "theta"):
        return [path + ("g", "g"), path + ("g", "f"), path + ("f",)]
    return [path + ("g",), path + ("f", "g"), path + ("f", "f")]


def classify_faces(objects, edge_list) -> list:
    pos = {t: i for i, t in enumerate(objects)}
    faces = {}

    def add(tag, cycle):
        idx = tuple(pos[t] for t in cycle)
        key = frozenset(idx)
        if key in faces:
            if faces[key][0] != tag:
                raise IllegitimateInsertion(
                    "one face matched by two equation templates")
            return
        faces[key] = (tag, idx)

    for obj in objects:
        stack = [((), obj)]
        while stack:
            path, node = stack.pop()
            for tag, cycle in _shape_faces(obj, path, node):
                add(tag, [_replace(obj, path, c) for c in cycle])
            if isinstance(node, OuIns):
                stack.append((path + ("g",), node.g))
                stack.append((path + ("f",), node.f))
        # squares: two redexes either at disjoint positions or with one
        # inside an index subterm of the other
        reds = _redexes(obj)
        for i1, (p1, k1, r1) in enumerate(reds):
            for p2, k2, r2 in reds[i1 + 1:]:
                disjoint = (p1[:len(p2)] != p2 and p2[:len(p1)] != p1)
                nest = None  # (outer path/kind, inner path/kind)
                for (po, ko, ro), (pi, ki, ri) in (((p1, k1, r1), (p2, k2, r2)),
                                                   ((p2, k2, r2), (p1, k1, r1))):
                    if any(pi[:len(ip)] == ip
                           for ip in _index_positions(po, ko)):
                        nest = (po, ko, pi, ri)
                if not disjoint and nest is None:
                    continue
                if disjoint:
                    corner = _replace(r1, p2, _subterm(r2, p2))
                    tag = "ins-2"
                else:
                    po, ko, pi, ri = nest
                    # inner first, then the outer redex again: the two do
                    # not overlap, so both orders land on the same corner
                    hits = [rr for q, kk, rr in _redexes(ri)
                            if q == po and kk == ko]
                    if len(hits) != 1:
                        continue
                    corner = hits[0]
                    tag = {"beta": "beta-nat", "ibeta": "beta-nat",
                           "theta": "theta-nat"}[ko]
                if corner in pos:
                    add(tag, [obj, r1, corner, r2])

    return sorted(((idx, tag) for tag, idx in faces.values()),
                  key=lambda f: (f[0][0], f[0]))


# --- the skeleton record and emission ---------------------------------------------

@dataclass(frozen=True)
class Skeleton:
    tree: TreeInput
    objects: tuple
    strees: tuple
    edge_list: tuple
    faces: tuple

    @property
    def euler(self) -> int:
        return len(self.objects) - len(self.edge_list) + len(self.faces)


def build_skeleton(tree: TreeInput) -> Skeleton:
    objs = enumerate_objects(tree)
    es = edges(objs)
    fs = classify_faces(objs, es)
    labels = tuple(render_stree(stree_of_term(t), tree.name) for t in objs)
    return Skeleton(tree, tuple(objs), labels, tuple(es), tuple(fs))


def emit(skel: Skeleton, fmt: str) -> str:
    if fmt == "dot":
        lines = ["graph skeleton {"]
        for i, label in enumerate(skel.strees):
            lines.append(f'  v{i} [label="{label}"];')
        for u, v, label, _ in skel.edge_list:
            mark = "β" if label == "beta" else "θ"
            lines.append(f'  v{u} -- v{v} [label="{mark}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "vertices": [{"id": i, "term": str(t), "stree": s}
                         for i, (t, s) in enumerate(zip(skel.objects,
                                                        skel.strees))],
            "edges": [{"u": u, "v": v, "label": label,
                       "redex": "/".join(path) or "root"}
                      for u, v, label, path in skel.edge_list],
            "faces": [{"vertices": list(idx), "equation": tag}
                      for idx, tag in skel.faces],
            "counts": {"V": len(skel.objects), "E": len(skel.edge_list),
                       "F": len(skel.faces), "euler": skel.euler},
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown format {fmt!r}")

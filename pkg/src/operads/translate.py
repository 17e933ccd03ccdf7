"""Translations between the three calculi and the term-equality decision.

The numeric and address-indexed calculi convert through the rank bijection
on source arities; the address-indexed and diversified calculi convert by
scaling/stripping leaf addresses.  All four maps are bijections on terms
and preserve derivable equality, so equality in any flavor is decided in
the diversified one.

Equality decision: erase unit leaves, recover which occurrence is plugged
into which argument place, and rebuild a left comb inserting occurrences
in (address length, digits, wire depth) order.  Two terms are equal iff
the rebuilt combs coincide.  The paper-level theory gives no decision
procedure; this canonical form is validated against an exhaustive
rewriting closure at small sizes (see closure_oracle and the acceptance
suite) before being trusted.
"""

from __future__ import annotations

from collections import deque

from . import addresses as ad
from .addresses import EMPTY
from .errors import BoundExceeded, FlavorMismatch
from .terms import (OGen, OIns, OUnit, OeGen, OeIns, OeUnit, OuGen, OuIns,
                    OuUnit, Term, is_atom, scale_term, term_size)


# --- the four translations -------------------------------------------------

def o_to_oe(phi: Term) -> Term:
    """Replace numeric insertion indices by the place names they rank."""
    if isinstance(phi, OGen):
        return OeGen(phi.name, phi.sig, phi.unitary)
    if isinstance(phi, OUnit):
        return OeUnit(phi.sig)
    g = o_to_oe(phi.g)
    return OeIns(g, ad.k_inverse(g.s, phi.n), o_to_oe(phi.f))


def oe_to_o(f: Term) -> Term:
    """Replace place names by their rank in the host's source arity."""
    if isinstance(f, OeGen):
        return OGen(f.name, f.sig, f.unitary)
    if isinstance(f, OeUnit):
        return OUnit(f.sig)
    return OIns(oe_to_o(f.g), ad.k_index(f.g.s, f.a), oe_to_o(f.f))


def oe_to_ou(f: Term) -> Term:
    """Diversify: push insertion indices into the leaf addresses."""
    if isinstance(f, OeGen):
        return OuGen(EMPTY, f.name, f.sig, f.unitary)
    if isinstance(f, OeUnit):
        return OuUnit(EMPTY, f.sig)
    return OuIns(oe_to_ou(f.g), scale_term(f.a, oe_to_ou(f.f)))


def ou_to_oe(f: Term) -> Term:
    """Forget addresses; recover indices from target words."""
    if isinstance(f, OuGen):
        return OeGen(f.name, f.sig, f.unitary)
    if isinstance(f, OuUnit):
        return OeUnit(f.sig)
    return OeIns(ou_to_oe(f.g), ad.strip(f.g.t, f.f.t), ou_to_oe(f.f))


def translate(f: Term, to: str) -> Term:
    chain = {
        ("o", "oe"): (o_to_oe,),
        ("o", "ou"): (o_to_oe, oe_to_ou),
        ("oe", "o"): (oe_to_o,),
        ("oe", "ou"): (oe_to_ou,),
        ("ou", "oe"): (ou_to_oe,),
        ("ou", "o"): (ou_to_oe, oe_to_o),
    }
    if f.flavor == to:
        return f
    for step in chain[(f.flavor, to)]:
        f = step(f)
    return f


# --- canonical form --------------------------------------------------------

def _erase_units(t: Term):
    """Apply the unit laws until no unit leaf remains.

    Returns None when the whole term is built from units alone.  Source
    and target are preserved, so the result is legitimate wherever the
    input was.
    """
    if isinstance(t, OuUnit):
        return None
    if is_atom(t):
        return t
    g = _erase_units(t.g)
    f = _erase_units(t.f)
    if f is None:
        return g
    if g is None:
        return f
    return OuIns(g, f)


def _occurrence_structure(t: Term):
    """Who is plugged into whom.

    Returns (order, parent) where order lists occurrence ids in creation
    order with their atoms, and parent maps an occurrence id to the id
    owning the argument place it fills.  The owner of a place is the
    occurrence whose own arity contributed it and which has not had it
    filled; a unary occurrence re-opens the place named by its own
    address, which is how stacking along one wire stays ordered.
    """
    atoms = []
    parent = {}

    def collect(node):
        if is_atom(node):
            i = len(atoms)
            atoms.append(node)
            return i, {slot: i for slot in node.s}
        ig, open_g = collect(node.g)
        if_, open_f = collect(node.f)
        a = node.f.t
        parent[if_] = open_g[a]
        open_g = dict(open_g)
        del open_g[a]
        open_g.update(open_f)
        return ig, open_g

    collect(t)
    return atoms, parent


def canonical_ou(t: Term) -> Term:
    """Left comb with occurrences inserted in canonical order."""
    if t.flavor != "ou":
        raise FlavorMismatch("canonical form is computed on ou terms")
    if t.unitary:
        erased = _erase_units(t)
        if erased is None:
            return OuUnit(t.t, t.sig)
        t = erased
    if is_atom(t):
        return t
    atoms, parent = _occurrence_structure(t)
    depth = {}
    for i, atom in enumerate(atoms):
        p = parent.get(i)
        if p is not None and atoms[p].addr == atom.addr:
            depth[i] = depth.get(p, 0) + 1
        else:
            depth[i] = 0
    order = sorted(range(len(atoms)),
                   key=lambda i: (len(atoms[i].addr), atoms[i].addr, depth[i]))
    comb = atoms[order[0]]
    for i in order[1:]:
        comb = OuIns(comb, atoms[i])
    return comb


def term_eq(f: Term, g: Term) -> bool:
    """Derivable equality in the flavor's equational theory."""
    if f.flavor != g.flavor:
        raise FlavorMismatch(f"flavors differ: {f.flavor} vs {g.flavor}")
    if f.unitary != g.unitary:
        raise FlavorMismatch("unitary and non-unitary terms are not comparable")
    if f.sig != g.sig:
        raise FlavorMismatch("terms come from different signatures")
    fu = translate(f, "ou")
    gu = translate(g, "ou")
    if fu.s != gu.s or fu.t != gu.t:
        return False
    return canonical_ou(fu) == canonical_ou(gu)


# --- one-step rewriting and the closure oracle ------------------------------

def _local_moves_ou(t, unitary, can_grow):
    out = []
    if isinstance(t, OuIns):
        g, f = t.g, t.f
        if isinstance(g, OuIns):
            h, g2 = g.g, g.f
            # plain re-association: f sits inside the g2 part
            if f.t in g2.s:
                out.append(OuIns(h, OuIns(g2, f)))
            # exchange: g2 and f fill distinct places of the same host
            if f.t in h.s and f.t != g2.t:
                out.append(OuIns(OuIns(h, f), g2))
        if isinstance(f, OuIns):
            out.append(OuIns(OuIns(g, f.g), f.f))
        if unitary and isinstance(f, OuUnit):
            out.append(g)
        if unitary and isinstance(g, OuUnit):
            out.append(f)
    if unitary and can_grow:
        for a in t.s:
            out.append(OuIns(t, OuUnit(a, t.sig)))
        out.append(OuIns(OuUnit(t.t, t.sig), t))
    return out


def _local_moves_oe(t, unitary, can_grow):
    out = []
    if isinstance(t, OeIns):
        g, f, a = t.g, t.f, t.a
        if isinstance(g, OeIns):
            h, g2, b = g.g, g.f, g.a
            if ad.is_prefix(b, a) and ad.strip(b, a) in g2.s:
                out.append(OeIns(h, b, OeIns(g2, ad.strip(b, a), f)))
            if a in h.s and a != b:
                out.append(OeIns(OeIns(h, a, f), b, g2))
        if isinstance(f, OeIns):
            out.append(OeIns(OeIns(g, a, f.g), a + f.a, f.f))
        if unitary and isinstance(f, OeUnit):
            out.append(g)
        if unitary and isinstance(g, OeUnit):
            out.append(f)
    if unitary and can_grow:
        for a in t.s:
            out.append(OeIns(t, a, OeUnit(t.sig)))
        out.append(OeIns(OeUnit(t.sig), EMPTY, t))
    return out


def _local_moves_o(t, unitary, can_grow):
    out = []
    if isinstance(t, OIns):
        g, f, m = t.g, t.f, t.n
        if isinstance(g, OIns):
            h, g2, n = g.g, g.f, g.n
            if n <= m < n + g2.alpha:
                out.append(OIns(h, n, OIns(g2, m - n + 1, f)))
            if n + g2.alpha <= m:
                out.append(OIns(OIns(h, m - g2.alpha + 1, f), n, g2))
            if m < n:
                out.append(OIns(OIns(h, m, f), n + f.alpha - 1, g2))
        if isinstance(f, OIns):
            out.append(OIns(OIns(g, m, f.g), m + f.n - 1, f.f))
        if unitary and isinstance(f, OUnit):
            out.append(g)
        if unitary and isinstance(g, OUnit) and m == 1:
            out.append(f)
    if unitary and can_grow:
        for n in range(1, t.alpha + 1):
            out.append(OIns(t, n, OUnit(t.sig)))
        out.append(OIns(OUnit(t.sig), 1, t))
    return out


_LOCAL_MOVES = {"o": _local_moves_o, "oe": _local_moves_oe, "ou": _local_moves_ou}


def term_neighbors(t: Term, max_atoms=None):
    """All terms one axiom application away (either direction, any node)."""
    local = _LOCAL_MOVES[t.flavor]
    can_grow = max_atoms is None or term_size(t) < max_atoms
    rebuild = {
        "o": lambda g, f, old: OIns(g, old.n, f),
        "oe": lambda g, f, old: OeIns(g, old.a, f),
        "ou": lambda g, f, old: OuIns(g, f),
    }[t.flavor]

    def walk(node):
        yield from local(node, node.unitary, can_grow)
        if not is_atom(node):
            for g2 in walk(node.g):
                yield rebuild(g2, node.f, node)
            for f2 in walk(node.f):
                yield rebuild(node.g, f2, node)

    return walk(t)


def closure_oracle(f: Term, max_terms: int = 10000, max_atoms=None):
    """Every term reachable from f by axiom rewrites, breadth first.

    For unitary terms the closure is only finite under an atom-count cap,
    which defaults to the size of f itself; unit erasure never needs to
    grow past the start size, so the capped closure is the full
    equivalence class at or below it.
    """
    if max_atoms is None and f.unitary:
        max_atoms = term_size(f)
    seen = {f}
    queue = deque([f])
    while queue:
        cur = queue.popleft()
        for nxt in term_neighbors(cur, max_atoms):
            if nxt not in seen:
                if len(seen) >= max_terms:
                    raise BoundExceeded(
                        f"closure exceeded {max_terms} terms", frozenset(seen))
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)

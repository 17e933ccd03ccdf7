"""The axiomatic equations of the diversified arrow calculus, executable.

Two services: instance builders, which produce the two sides of a named
equation family from index terms, and a rewriting view, which treats the
equations (plus the category laws) as bidirectional rewrite rules on
arrow terms.  Composition trees are handled through their spines, so
rules apply regardless of how composition was parenthesized.
"""

from __future__ import annotations

from .arrows import (ArrowTerm, Beta, BetaInv, Comp, Id, InsArr, Lam, LamInv,
                     Mu, MuInv, Theta)
from .terms import OuIns, OuUnit, is_unit


def comp_spine(u: ArrowTerm) -> list:
    """Composition factors in application order (first applied first)."""
    if isinstance(u, Comp):
        return comp_spine(u.u) + comp_spine(u.v)
    return [u]


def recomp(spine: list, obj) -> ArrowTerm:
    """Left-nested composite of a spine; empty spine gives an identity."""
    if not spine:
        return Id(obj)
    out = spine[0]
    for w in spine[1:]:
        out = Comp(w, out)
    return out


# --- instance builders -------------------------------------------------------

def ins1(g, f):
    x = OuIns(g, f)
    return [(InsArr(Id(g), Id(f)), Id(x))]


def ins2(v1, v2, u1, u2):
    return [(InsArr(Comp(v2, v1), Comp(u2, u1)),
             Comp(InsArr(v2, u2), InsArr(v1, u1)))]


def beta_nat(w, v, u):
    return [(Comp(Beta(w.target, v.target, u.target), InsArr(InsArr(w, v), u)),
             Comp(InsArr(w, InsArr(v, u)), Beta(w.source, v.source, u.source)))]


def theta_nat(w, v, u):
    return [(Comp(Theta(w.target, v.target, u.target), InsArr(InsArr(w, v), u)),
             Comp(InsArr(InsArr(w, u), v), Theta(w.source, v.source, u.source)))]


def beta_beta(h, g, f):
    b, ib = Beta(h, g, f), BetaInv(h, g, f)
    return [(Comp(ib, b), Id(b.source)), (Comp(b, ib), Id(b.target))]


def theta_theta(h, g, f):
    t = Theta(h, g, f)
    return [(Comp(Theta(h, f, g), t), Id(t.source))]


def beta_pent(j, h, g, f):
    lhs = Comp(Comp(InsArr(Id(j), Beta(h, g, f)), Beta(j, OuIns(h, g), f)),
               InsArr(Beta(j, h, g), Id(f)))
    rhs = Comp(Beta(j, h, OuIns(g, f)), Beta(OuIns(j, h), g, f))
    return [(lhs, rhs)]


def theta_yb(j, h, g, f):
    lhs = Comp(Comp(Theta(OuIns(j, f), h, g), InsArr(Theta(j, h, f), Id(g))),
               Theta(OuIns(j, h), g, f))
    rhs = Comp(Comp(InsArr(Theta(j, g, f), Id(h)), Theta(OuIns(j, g), h, f)),
               InsArr(Theta(j, h, g), Id(f)))
    return [(lhs, rhs)]


def beta_theta_1(j, h, g, f):
    lhs = Comp(Comp(InsArr(Id(j), Theta(h, g, f)), Beta(j, OuIns(h, g), f)),
               InsArr(Beta(j, h, g), Id(f)))
    rhs = Comp(Comp(Beta(j, OuIns(h, f), g), InsArr(Beta(j, h, f), Id(g))),
               Theta(OuIns(j, h), g, f))
    return [(lhs, rhs)]


def beta_theta_2(j, h, g, f):
    lhs = Comp(Theta(j, OuIns(h, g), f), InsArr(Beta(j, h, g), Id(f)))
    rhs = Comp(Comp(Beta(OuIns(j, f), h, g), InsArr(Theta(j, h, f), Id(g))),
               Theta(OuIns(j, h), g, f))
    return [(lhs, rhs)]


def mu_nat(u, a):
    unit = Id(OuUnit(a, u.source.sig))
    return [(Comp(Mu(u.target, a), InsArr(u, unit)),
             Comp(u, Mu(u.source, a)))]


def lam_nat(u):
    unit = Id(OuUnit(u.source.t, u.source.sig))
    return [(Comp(Lam(u.target), InsArr(unit, u)),
             Comp(u, Lam(u.source)))]


def mu_mu(f, a):
    m, im = Mu(f, a), MuInv(f, a)
    return [(Comp(im, m), Id(m.source)), (Comp(m, im), Id(f))]


def lam_lam(f):
    l, il = Lam(f), LamInv(f)
    return [(Comp(il, l), Id(l.source)), (Comp(l, il), Id(f))]


def beta_mu_lam(h, f):
    unit = OuUnit(f.t, f.sig)
    lhs = Beta(h, unit, f)
    rhs = Comp(InsArr(Id(h), LamInv(f)), InsArr(Mu(h, f.t), Id(f)))
    return [(lhs, rhs)]


def theta_mu(h, b, f):
    unit = OuUnit(b, h.sig)
    lhs = Theta(h, unit, f)
    rhs = Comp(MuInv(OuIns(h, f), b), InsArr(Mu(h, b), Id(f)))
    return [(lhs, rhs)]


FAMILIES = {
    "ins1": ins1, "ins2": ins2, "beta-nat": beta_nat, "theta-nat": theta_nat,
    "beta-beta": beta_beta, "theta-theta": theta_theta,
    "beta-pent": beta_pent, "theta-yb": theta_yb,
    "beta-theta-1": beta_theta_1, "beta-theta-2": beta_theta_2,
    "mu-nat": mu_nat, "lam-nat": lam_nat, "mu-mu": mu_mu, "lam-lam": lam_lam,
    "beta-mu-lam": beta_mu_lam, "theta-mu": theta_mu,
}


# --- rewrite rules over spine windows -----------------------------------------

def _unit_atom(t):
    return isinstance(t, OuUnit)


def _win_ins1(win):
    w = win[0]
    if isinstance(w, InsArr) and isinstance(w.v, Id) and isinstance(w.u, Id):
        return [Id(w.source)]
    return None


def _win_ins1_rev(win):
    w = win[0]
    if isinstance(w, Id) and isinstance(w.obj, OuIns):
        return [InsArr(Id(w.obj.g), Id(w.obj.f))]
    return None


def _win_ins2(win):
    a, b = win
    if isinstance(a, InsArr) and isinstance(b, InsArr):
        return [InsArr(Comp(b.v, a.v), Comp(b.u, a.u))]
    return None


def _win_beta_nat(win):
    x, b = win
    if (isinstance(b, Beta) and isinstance(x, InsArr)
            and isinstance(x.v, InsArr)):
        w, v, u = x.v.v, x.v.u, x.u
        return [Beta(w.source, v.source, u.source),
                InsArr(w, InsArr(v, u))]
    return None


def _win_beta_nat_rev(win):
    b, x = win
    if (isinstance(b, Beta) and isinstance(x, InsArr)
            and isinstance(x.u, InsArr)):
        w, v, u = x.v, x.u.v, x.u.u
        return [InsArr(InsArr(w, v), u),
                Beta(w.target, v.target, u.target)]
    return None


def _win_theta_nat(win):
    x, t = win
    if (isinstance(t, Theta) and isinstance(x, InsArr)
            and isinstance(x.v, InsArr)):
        w, v, u = x.v.v, x.v.u, x.u
        return [Theta(w.source, v.source, u.source),
                InsArr(InsArr(w, u), v)]
    return None


def _win_theta_nat_rev(win):
    t, x = win
    if (isinstance(t, Theta) and isinstance(x, InsArr)
            and isinstance(x.v, InsArr)):
        # after the exchange the last two inserted pieces swap places
        w, u, v = x.v.v, x.v.u, x.u
        return [InsArr(InsArr(w, v), u),
                Theta(w.target, v.target, u.target)]
    return None


def _win_pent(win):
    w0, w1, w2 = win
    if not (isinstance(w0, InsArr) and isinstance(w0.v, Beta)
            and isinstance(w0.u, Id) and isinstance(w1, Beta)
            and isinstance(w2, InsArr) and isinstance(w2.v, Id)
            and isinstance(w2.u, Beta)):
        return None
    j, h, g = w0.v.h, w0.v.g, w0.v.f
    f = w0.u.obj
    if w1 != Beta(j, OuIns(h, g), f) or w2 != InsArr(Id(j), Beta(h, g, f)):
        return None
    return [Beta(OuIns(j, h), g, f), Beta(j, h, OuIns(g, f))]


def _win_pent_rev(win):
    w0, w1 = win
    if not (isinstance(w0, Beta) and isinstance(w1, Beta)):
        return None
    if not (isinstance(w0.h, OuIns) and isinstance(w1.f, OuIns)):
        return None
    j, h = w0.h.g, w0.h.f
    g, f = w0.g, w0.f
    if w1 != Beta(j, h, OuIns(g, f)):
        return None
    return [InsArr(Beta(j, h, g), Id(f)), Beta(j, OuIns(h, g), f),
            InsArr(Id(j), Beta(h, g, f))]


def _win_yb(win):
    w0, w1, w2 = win
    if not (isinstance(w0, Theta) and isinstance(w0.h, OuIns)
            and isinstance(w1, InsArr) and isinstance(w1.v, Theta)
            and isinstance(w1.u, Id) and isinstance(w2, Theta)
            and isinstance(w2.h, OuIns)):
        return None
    j, h = w0.h.g, w0.h.f
    g, f = w0.g, w0.f
    if w1 != InsArr(Theta(j, h, f), Id(g)) or w2 != Theta(OuIns(j, f), h, g):
        return None
    return [InsArr(Theta(j, h, g), Id(f)), Theta(OuIns(j, g), h, f),
            InsArr(Theta(j, g, f), Id(h))]


def _win_yb_rev(win):
    w0, w1, w2 = win
    if not (isinstance(w0, InsArr) and isinstance(w0.v, Theta)
            and isinstance(w0.u, Id) and isinstance(w1, Theta)
            and isinstance(w1.h, OuIns) and isinstance(w2, InsArr)
            and isinstance(w2.v, Theta) and isinstance(w2.u, Id)):
        return None
    j, h, g = w0.v.h, w0.v.g, w0.v.f
    f = w0.u.obj
    if (w1 != Theta(OuIns(j, g), h, f)
            or w2 != InsArr(Theta(j, g, f), Id(h))):
        return None
    return [Theta(OuIns(j, h), g, f), InsArr(Theta(j, h, f), Id(g)),
            Theta(OuIns(j, f), h, g)]


def _win_bt1(win):
    w0, w1, w2 = win
    if not (isinstance(w0, InsArr) and isinstance(w0.v, Beta)
            and isinstance(w0.u, Id) and isinstance(w1, Beta)
            and isinstance(w2, InsArr) and isinstance(w2.v, Id)
            and isinstance(w2.u, Theta)):
        return None
    j, h, g = w0.v.h, w0.v.g, w0.v.f
    f = w0.u.obj
    if w1 != Beta(j, OuIns(h, g), f) or w2 != InsArr(Id(j), Theta(h, g, f)):
        return None
    return [Theta(OuIns(j, h), g, f), InsArr(Beta(j, h, f), Id(g)),
            Beta(j, OuIns(h, f), g)]


def _win_bt1_rev(win):
    w0, w1, w2 = win
    if not (isinstance(w0, Theta) and isinstance(w0.h, OuIns)
            and isinstance(w1, InsArr) and isinstance(w1.v, Beta)
            and isinstance(w1.u, Id) and isinstance(w2, Beta)):
        return None
    j, h = w0.h.g, w0.h.f
    g, f = w0.g, w0.f
    if (w1 != InsArr(Beta(j, h, f), Id(g))
            or w2 != Beta(j, OuIns(h, f), g)):
        return None
    return [InsArr(Beta(j, h, g), Id(f)), Beta(j, OuIns(h, g), f),
            InsArr(Id(j), Theta(h, g, f))]


def _win_bt2(win):
    w0, w1 = win
    if not (isinstance(w0, InsArr) and isinstance(w0.v, Beta)
            and isinstance(w0.u, Id) and isinstance(w1, Theta)):
        return None
    j, h, g = w0.v.h, w0.v.g, w0.v.f
    f = w0.u.obj
    if w1 != Theta(j, OuIns(h, g), f):
        return None
    return [Theta(OuIns(j, h), g, f), InsArr(Theta(j, h, f), Id(g)),
            Beta(OuIns(j, f), h, g)]


def _win_bt2_rev(win):
    w0, w1, w2 = win
    if not (isinstance(w0, Theta) and isinstance(w0.h, OuIns)
            and isinstance(w1, InsArr) and isinstance(w1.v, Theta)
            and isinstance(w1.u, Id) and isinstance(w2, Beta)
            and isinstance(w2.h, OuIns)):
        return None
    j, h = w0.h.g, w0.h.f
    g, f = w0.g, w0.f
    if (w1 != InsArr(Theta(j, h, f), Id(g))
            or w2 != Beta(OuIns(j, f), h, g)):
        return None
    return [InsArr(Beta(j, h, g), Id(f)), Theta(j, OuIns(h, g), f)]


def _win_mu_nat(win):
    x, m = win
    if (isinstance(m, Mu) and isinstance(x, InsArr) and isinstance(x.u, Id)
            and _unit_atom(x.u.obj) and x.u.obj.addr == m.a):
        return [Mu(x.v.source, m.a), x.v]
    return None


def _win_mu_nat_rev(win):
    m, u = win
    if isinstance(m, Mu) and not isinstance(u, Id):
        return [InsArr(u, Id(OuUnit(m.a, m.f.sig))), Mu(u.target, m.a)]
    return None


def _win_lam_nat(win):
    x, l = win
    if (isinstance(l, Lam) and isinstance(x, InsArr) and isinstance(x.v, Id)
            and _unit_atom(x.v.obj)):
        return [Lam(x.u.source), x.u]
    return None


def _win_lam_nat_rev(win):
    l, u = win
    if isinstance(l, Lam) and not isinstance(u, Id):
        return [InsArr(Id(OuUnit(u.source.t, u.source.sig)), u),
                Lam(u.target)]
    return None


def _win_bml(win):
    w = win[0]
    if isinstance(w, Beta) and _unit_atom(w.g) and w.g.addr == w.f.t:
        return [InsArr(Mu(w.h, w.f.t), Id(w.f)),
                InsArr(Id(w.h), LamInv(w.f))]
    return None


def _win_bml_rev(win):
    w0, w1 = win
    if (isinstance(w0, InsArr) and isinstance(w0.v, Mu)
            and isinstance(w0.u, Id) and isinstance(w1, InsArr)
            and isinstance(w1.v, Id) and isinstance(w1.u, LamInv)
            and w0.v.a == w1.u.f.t and w0.u.obj == w1.u.f
            and w0.v.f == w1.v.obj):
        return [Beta(w0.v.f, OuUnit(w0.v.a, w0.v.f.sig), w0.u.obj)]
    return None


def _win_tm(win):
    w = win[0]
    if isinstance(w, Theta) and _unit_atom(w.g):
        return [InsArr(Mu(w.h, w.g.addr), Id(w.f)),
                MuInv(OuIns(w.h, w.f), w.g.addr)]
    return None


def _win_tm_rev(win):
    w0, w1 = win
    if (isinstance(w0, InsArr) and isinstance(w0.v, Mu)
            and isinstance(w0.u, Id) and isinstance(w1, MuInv)
            and w1.f == OuIns(w0.v.f, w0.u.obj) and w1.a == w0.v.a
            and w1.a != w0.u.obj.t):
        return [Theta(w0.v.f, OuUnit(w0.v.a, w0.v.f.sig), w0.u.obj)]
    return None


def _win_cancel(win):
    a, b = win
    inverse = ((Beta, BetaInv), (BetaInv, Beta), (Theta, Theta),
               (Mu, MuInv), (MuInv, Mu), (Lam, LamInv), (LamInv, Lam))
    for first, second in inverse:
        if isinstance(a, first) and isinstance(b, second) \
                and b.target == a.source and b.source == a.target:
            if first is Theta and (a.g != b.f or a.f != b.g or a.h != b.h):
                continue
            if first in (Beta, BetaInv) and (a.h, a.g, a.f) != (b.h, b.g, b.f):
                continue
            if first in (Mu, MuInv) and (a.f, a.a) != (b.f, b.a):
                continue
            if first in (Lam, LamInv) and a.f != b.f:
                continue
            return [Id(a.source)]
    return None


_WINDOW_RULES = [
    ("ins1", 1, _win_ins1), ("ins1", 1, _win_ins1_rev),
    ("ins2", 2, _win_ins2),
    ("beta-nat", 2, _win_beta_nat), ("beta-nat", 2, _win_beta_nat_rev),
    ("theta-nat", 2, _win_theta_nat), ("theta-nat", 2, _win_theta_nat_rev),
    ("cancel", 2, _win_cancel),
    ("beta-pent", 3, _win_pent), ("beta-pent", 2, _win_pent_rev),
    ("theta-yb", 3, _win_yb), ("theta-yb", 3, _win_yb_rev),
    ("beta-theta-1", 3, _win_bt1), ("beta-theta-1", 3, _win_bt1_rev),
    ("beta-theta-2", 2, _win_bt2), ("beta-theta-2", 3, _win_bt2_rev),
    ("mu-nat", 2, _win_mu_nat), ("mu-nat", 2, _win_mu_nat_rev),
    ("lam-nat", 2, _win_lam_nat), ("lam-nat", 2, _win_lam_nat_rev),
    ("beta-mu-lam", 1, _win_bml), ("beta-mu-lam", 2, _win_bml_rev),
    ("theta-mu", 1, _win_tm), ("theta-mu", 2, _win_tm_rev),
]


def _expansions_at(obj, unitary):
    """Inverse pairs insertable at an object, as (name, [first, second])."""
    out = []
    if isinstance(obj, OuIns):
        g, f = obj.g, obj.f
        if isinstance(g, OuIns) and f.t in g.f.s:
            out.append(("beta-beta", [Beta(g.g, g.f, f), BetaInv(g.g, g.f, f)]))
        if isinstance(g, OuIns) and f.t in g.g.s and f.t != g.f.t:
            out.append(("theta-theta", [Theta(g.g, g.f, f), Theta(g.g, f, g.f)]))
        if isinstance(f, OuIns):
            out.append(("beta-beta", [BetaInv(g, f.g, f.f), Beta(g, f.g, f.f)]))
        if unitary and is_unit(f):
            out.append(("mu-mu", [Mu(g, f.addr), MuInv(g, f.addr)]))
        if unitary and is_unit(g):
            out.append(("lam-lam", [Lam(f), LamInv(f)]))
    if unitary:
        for a in obj.s:
            out.append(("mu-mu", [MuInv(obj, a), Mu(obj, a)]))
        out.append(("lam-lam", [LamInv(obj), Lam(obj)]))
    return out


def _split_points(spine, source):
    """Objects between consecutive spine factors, ends included."""
    objs = [source]
    for w in spine:
        objs.append(w.target)
    return objs


def axiom_rewrites(u: ArrowTerm, expansions: bool = True):
    """All arrow terms one axiom application away, as (rule, result)."""
    spine = comp_spine(u)
    out = []

    def emit(name, new_spine):
        out.append((name, recomp(new_spine, u.source)))

    for name, size, rule in _WINDOW_RULES:
        for i in range(len(spine) - size + 1):
            got = rule(spine[i:i + size])
            if got is not None:
                emit(name, spine[:i] + got + spine[i + size:])

    # category unit law: drop identities
    for i, w in enumerate(spine):
        if isinstance(w, Id) and len(spine) > 1:
            emit("id-unit", spine[:i] + spine[i + 1:])

    # ins2 the other way: split an insertion of composites
    for i, w in enumerate(spine):
        if isinstance(w, InsArr):
            sv, su = comp_spine(w.v), comp_spine(w.u)
            for k in range(len(sv) + 1):
                for l in range(len(su) + 1):
                    if (k, l) in ((0, 0), (len(sv), len(su))):
                        continue
                    first = InsArr(recomp(sv[:k], w.v.source),
                                   recomp(su[:l], w.u.source))
                    second = InsArr(recomp(sv[k:], sv[k - 1].target if k else w.v.source),
                                    recomp(su[l:], su[l - 1].target if l else w.u.source))
                    emit("ins2", spine[:i] + [first, second] + spine[i + 1:])

    if expansions:
        unitary = u.source.unitary
        objs = _split_points(spine, u.source)
        for i, obj in enumerate(objs):
            for name, pair in _expansions_at(obj, unitary):
                emit(name, spine[:i] + pair + spine[i:])
            emit("id-unit", spine[:i] + [Id(obj)] + spine[i:])

    # rewrites inside the two sides of an insertion
    for i, w in enumerate(spine):
        if isinstance(w, InsArr):
            for name, v2 in axiom_rewrites(w.v, expansions):
                emit(name, spine[:i] + [InsArr(v2, w.u)] + spine[i + 1:])
            for name, u2 in axiom_rewrites(w.u, expansions):
                emit(name, spine[:i] + [InsArr(w.v, u2)] + spine[i + 1:])
    return out

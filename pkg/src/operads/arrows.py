"""Canonical arrows between insertion terms.

Arrow terms are built from identities and the basic isomorphism families
(re-association ``beta``, exchange ``theta``, unit laws ``mu``/``lambda``)
by composition and insertion, in two flavors matching the term calculi:
the diversified one (indices are the bare terms) and the address-indexed
one (basic arrows carry (index, term) pairs).  Every node caches its
source and target and validates its side conditions at construction.

Equality of same-flavor arrows is the coherence theorem made executable:
two arrow terms are equal iff they share source and target.  The module
also cross-checks every positive answer semantically by strictifying both
sides to transposition sequences and comparing position graphs; a
mismatch raises, it is never absorbed.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import addresses as ad
from . import perm_engine as pe
from .addresses import NWord
from .errors import (FlavorMismatch, IllegitimateIndex, SoundnessError,
                     TypeMismatch)
from .terms import (OeIns, OeUnit, OuGen, OuIns, OuUnit, Term, is_atom,
                    is_unit, scale_term)
from .translate import ou_to_oe


class ArrowTerm:
    """Base class; source and target are cached Terms."""

    @property
    def flavor(self):
        return self.source.flavor


def _set(obj, **attrs):
    for k, v in attrs.items():
        object.__setattr__(obj, k, v)


def _fmt(*parts):
    return ", ".join(str(p) for p in parts)


# --- basic arrows, diversified flavor ---------------------------------------

@dataclass(frozen=True)
class Id(ArrowTerm):
    obj: Term

    def __post_init__(self):
        _set(self, source=self.obj, target=self.obj)

    def __str__(self):
        return f"1[{self.obj}]"


def _beta_endpoints(h, g, f):
    if f.t not in g.s:
        raise IllegitimateIndex(
            f"beta: {ad.word_str(f.t)} is not a place of the middle term")
    return OuIns(OuIns(h, g), f), OuIns(h, OuIns(g, f))


@dataclass(frozen=True)
class Beta(ArrowTerm):
    h: Term
    g: Term
    f: Term

    def __post_init__(self):
        src, tgt = _beta_endpoints(self.h, self.g, self.f)
        _set(self, source=src, target=tgt)

    def __str__(self):
        return f"beta[{_fmt(self.h, self.g, self.f)}]"


@dataclass(frozen=True)
class BetaInv(ArrowTerm):
    h: Term
    g: Term
    f: Term

    def __post_init__(self):
        tgt, src = _beta_endpoints(self.h, self.g, self.f)
        _set(self, source=src, target=tgt)

    def __str__(self):
        return f"ibeta[{_fmt(self.h, self.g, self.f)}]"


@dataclass(frozen=True)
class Theta(ArrowTerm):
    h: Term
    g: Term
    f: Term

    def __post_init__(self):
        h, g, f = self.h, self.g, self.f
        # both inserted terms must fill places of h itself, and distinct
        # ones: a shared place would mean stacking along one wire, where
        # the exchange law is not available
        if g.t not in h.s or f.t not in h.s:
            raise IllegitimateIndex(
                "theta: both inserted targets must be places of the host")
        if f.t == g.t:
            raise IllegitimateIndex("theta: inserted targets must differ")
        _set(self, source=OuIns(OuIns(h, g), f), target=OuIns(OuIns(h, f), g))

    def __str__(self):
        return f"theta[{_fmt(self.h, self.g, self.f)}]"


@dataclass(frozen=True)
class Mu(ArrowTerm):
    f: Term
    a: NWord

    def __post_init__(self):
        if self.a not in self.f.s:
            raise IllegitimateIndex(
                f"mu: {ad.word_str(self.a)} is not a place of the carrier")
        _set(self, source=OuIns(self.f, OuUnit(self.a, self.f.sig)),
             target=self.f)

    def __str__(self):
        return f"mu[{self.f}, {ad.word_str(self.a)}]"


@dataclass(frozen=True)
class MuInv(ArrowTerm):
    f: Term
    a: NWord

    def __post_init__(self):
        if self.a not in self.f.s:
            raise IllegitimateIndex(
                f"mu: {ad.word_str(self.a)} is not a place of the carrier")
        _set(self, source=self.f,
             target=OuIns(self.f, OuUnit(self.a, self.f.sig)))

    def __str__(self):
        return f"imu[{self.f}, {ad.word_str(self.a)}]"


@dataclass(frozen=True)
class Lam(ArrowTerm):
    f: Term

    def __post_init__(self):
        _set(self, source=OuIns(OuUnit(self.f.t, self.f.sig), self.f),
             target=self.f)

    def __str__(self):
        return f"lam[{self.f}]"


@dataclass(frozen=True)
class LamInv(ArrowTerm):
    f: Term

    def __post_init__(self):
        _set(self, source=self.f,
             target=OuIns(OuUnit(self.f.t, self.f.sig), self.f))

    def __str__(self):
        return f"ilam[{self.f}]"


# --- basic arrows, address-indexed flavor ------------------------------------

def _beta_e_endpoints(h, b, g, a, f):
    if a not in g.s:
        raise IllegitimateIndex(
            f"beta: {ad.word_str(a)} is not a place of the middle term")
    return (OeIns(OeIns(h, b, g), b + a, f), OeIns(h, b, OeIns(g, a, f)))


@dataclass(frozen=True)
class BetaE(ArrowTerm):
    h: Term
    b: NWord
    g: Term
    a: NWord
    f: Term

    def __post_init__(self):
        src, tgt = _beta_e_endpoints(self.h, self.b, self.g, self.a, self.f)
        _set(self, source=src, target=tgt)

    def __str__(self):
        return f"beta[{_fmt(self.h, ad.word_str(self.b), self.g, ad.word_str(self.a), self.f)}]"


@dataclass(frozen=True)
class BetaInvE(ArrowTerm):
    h: Term
    b: NWord
    g: Term
    a: NWord
    f: Term

    def __post_init__(self):
        tgt, src = _beta_e_endpoints(self.h, self.b, self.g, self.a, self.f)
        _set(self, source=src, target=tgt)

    def __str__(self):
        return f"ibeta[{_fmt(self.h, ad.word_str(self.b), self.g, ad.word_str(self.a), self.f)}]"


@dataclass(frozen=True)
class ThetaE(ArrowTerm):
    h: Term
    b: NWord
    g: Term
    a: NWord
    f: Term

    def __post_init__(self):
        h, b, g, a, f = self.h, self.b, self.g, self.a, self.f
        if b not in h.s or a not in h.s:
            raise IllegitimateIndex(
                "theta: both indices must be places of the host")
        if a == b:
            raise IllegitimateIndex("theta: indices must differ")
        _set(self, source=OeIns(OeIns(h, b, g), a, f),
             target=OeIns(OeIns(h, a, f), b, g))

    def __str__(self):
        return f"theta[{_fmt(self.h, ad.word_str(self.b), self.g, ad.word_str(self.a), self.f)}]"


@dataclass(frozen=True)
class MuE(ArrowTerm):
    f: Term
    a: NWord

    def __post_init__(self):
        if self.a not in self.f.s:
            raise IllegitimateIndex(
                f"mu: {ad.word_str(self.a)} is not a place of the carrier")
        _set(self, source=OeIns(self.f, self.a, OeUnit(self.f.sig)),
             target=self.f)

    def __str__(self):
        return f"mu[{self.f}, {ad.word_str(self.a)}]"


@dataclass(frozen=True)
class MuInvE(ArrowTerm):
    f: Term
    a: NWord

    def __post_init__(self):
        if self.a not in self.f.s:
            raise IllegitimateIndex(
                f"mu: {ad.word_str(self.a)} is not a place of the carrier")
        _set(self, source=self.f,
             target=OeIns(self.f, self.a, OeUnit(self.f.sig)))

    def __str__(self):
        return f"imu[{self.f}, {ad.word_str(self.a)}]"


@dataclass(frozen=True)
class LamE(ArrowTerm):
    f: Term

    def __post_init__(self):
        _set(self, source=OeIns(OeUnit(self.f.sig), ad.EMPTY, self.f),
             target=self.f)

    def __str__(self):
        return f"lam[{self.f}]"


@dataclass(frozen=True)
class LamInvE(ArrowTerm):
    f: Term

    def __post_init__(self):
        _set(self, source=self.f,
             target=OeIns(OeUnit(self.f.sig), ad.EMPTY, self.f))

    def __str__(self):
        return f"ilam[{self.f}]"


# --- closure operations -------------------------------------------------------

@dataclass(frozen=True)
class Comp(ArrowTerm):
    v: ArrowTerm
    u: ArrowTerm

    def __post_init__(self):
        if self.u.target != self.v.source:
            raise TypeMismatch(
                f"composition: {self.u.target} does not match {self.v.source}")
        _set(self, source=self.u.source, target=self.v.target)

    def __str__(self):
        return f"{self.v} . {self.u}"


@dataclass(frozen=True)
class InsArr(ArrowTerm):
    v: ArrowTerm
    u: ArrowTerm

    def __post_init__(self):
        src = OuIns(self.v.source, self.u.source)
        tgt = OuIns(self.v.target, self.u.target)
        _set(self, source=src, target=tgt)

    def __str__(self):
        return f"({self.v} o {self.u})"


@dataclass(frozen=True)
class InsArrAt(ArrowTerm):
    v: ArrowTerm
    a: NWord
    u: ArrowTerm

    def __post_init__(self):
        src = OeIns(self.v.source, self.a, self.u.source)
        tgt = OeIns(self.v.target, self.a, self.u.target)
        _set(self, source=src, target=tgt)

    def __str__(self):
        return f"({self.v} o[{ad.word_str(self.a)}] {self.u})"


_BASIC_OU = (Id, Beta, BetaInv, Theta, Mu, MuInv, Lam, LamInv)


def comp(v: ArrowTerm, u: ArrowTerm) -> ArrowTerm:
    """Compose, dropping identity factors."""
    if isinstance(u, Id):
        return v
    if isinstance(v, Id):
        return u
    return Comp(v, u)


def ins_arr(v: ArrowTerm, u: ArrowTerm) -> ArrowTerm:
    """Insert, collapsing a pair of identities."""
    if isinstance(v, Id) and isinstance(u, Id):
        return Id(OuIns(v.obj, u.obj))
    return InsArr(v, u)


# --- the scaling functor and the two translation functors --------------------

def scale_arrow(a: NWord, u: ArrowTerm) -> ArrowTerm:
    """Prefix every address in a diversified arrow term with a."""
    if isinstance(u, Id):
        return Id(scale_term(a, u.obj))
    if isinstance(u, (Lam, LamInv)):
        return type(u)(scale_term(a, u.f))
    if isinstance(u, (Mu, MuInv)):
        return type(u)(scale_term(a, u.f), a + u.a)
    if isinstance(u, (Beta, BetaInv, Theta)):
        return type(u)(scale_term(a, u.h), scale_term(a, u.g),
                       scale_term(a, u.f))
    if isinstance(u, Comp):
        return Comp(scale_arrow(a, u.v), scale_arrow(a, u.u))
    if isinstance(u, InsArr):
        return InsArr(scale_arrow(a, u.v), scale_arrow(a, u.u))
    raise FlavorMismatch("scale_arrow applies to diversified arrows")


def arrow_oe_to_ou(u: ArrowTerm) -> ArrowTerm:
    """Diversify an address-indexed arrow term."""
    from .translate import oe_to_ou as U

    if isinstance(u, Id):
        return Id(U(u.obj))
    if isinstance(u, (LamE, LamInvE)):
        return (Lam if isinstance(u, LamE) else LamInv)(U(u.f))
    if isinstance(u, (MuE, MuInvE)):
        return (Mu if isinstance(u, MuE) else MuInv)(U(u.f), u.a)
    if isinstance(u, (BetaE, BetaInvE)):
        cls = Beta if isinstance(u, BetaE) else BetaInv
        return cls(U(u.h), scale_term(u.b, U(u.g)),
                   scale_term(u.b + u.a, U(u.f)))
    if isinstance(u, ThetaE):
        return Theta(U(u.h), scale_term(u.b, U(u.g)),
                     scale_term(u.a, U(u.f)))
    if isinstance(u, Comp):
        return Comp(arrow_oe_to_ou(u.v), arrow_oe_to_ou(u.u))
    if isinstance(u, InsArrAt):
        return InsArr(arrow_oe_to_ou(u.v),
                      scale_arrow(u.a, arrow_oe_to_ou(u.u)))
    raise FlavorMismatch(f"not an address-indexed arrow term: {u}")


def arrow_ou_to_oe(u: ArrowTerm) -> ArrowTerm:
    """Forget addresses, recovering the index pairs from target words.

    The unit-law indices are stripped of the carrier's target, which is
    what typing demands (the inverse-pair round trips pin this down).
    """
    E = ou_to_oe
    if isinstance(u, Id):
        return Id(E(u.obj))
    if isinstance(u, (Lam, LamInv)):
        return (LamE if isinstance(u, Lam) else LamInvE)(E(u.f))
    if isinstance(u, (Mu, MuInv)):
        return (MuE if isinstance(u, Mu) else MuInvE)(
            E(u.f), ad.strip(u.f.t, u.a))
    if isinstance(u, (Beta, BetaInv)):
        cls = BetaE if isinstance(u, Beta) else BetaInvE
        return cls(E(u.h), ad.strip(u.h.t, u.g.t),
                   E(u.g), ad.strip(u.g.t, u.f.t), E(u.f))
    if isinstance(u, Theta):
        return ThetaE(E(u.h), ad.strip(u.h.t, u.g.t),
                      E(u.g), ad.strip(u.h.t, u.f.t), E(u.f))
    if isinstance(u, Comp):
        return Comp(arrow_ou_to_oe(u.v), arrow_ou_to_oe(u.u))
    if isinstance(u, InsArr):
        return InsArrAt(arrow_ou_to_oe(u.v),
                        ad.strip(u.v.source.t, u.u.source.t),
                        arrow_ou_to_oe(u.u))
    raise FlavorMismatch(f"not a diversified arrow term: {u}")


# --- object normalization -----------------------------------------------------

def is_normal(f: Term) -> bool:
    """Left-associated and unit-free, or a single unit atom."""
    if isinstance(f, OuUnit):
        return True

    def comb(t):
        if is_atom(t):
            return not is_unit(t)
        return comb(t.g) and is_atom(t.f) and not is_unit(t.f)

    return comb(f)


def is_directed(u: ArrowTerm) -> bool:
    """No re-association toward the right and no unit introduction."""
    if isinstance(u, (Beta, MuInv, LamInv)):
        return False
    if isinstance(u, (Comp, InsArr)):
        return is_directed(u.v) and is_directed(u.u)
    return isinstance(u, _BASIC_OU)


def normalize_object(f: Term):
    """The normal form of f and a directed arrow leading to it."""
    if is_atom(f):
        return f, Id(f)
    ng, ug = normalize_object(f.g)
    nf, uf = normalize_object(f.f)
    arrow = ins_arr(ug, uf)
    if isinstance(nf, OuUnit):
        return ng, comp(Mu(ng, nf.addr), arrow)
    if isinstance(ng, OuUnit):
        return nf, comp(Lam(nf), arrow)
    # fold the right comb of nf into the left comb on top of ng
    host, rest = ng, nf

    def fold(host, rest):
        if is_atom(rest):
            return OuIns(host, rest), Id(OuIns(host, rest))
        step = BetaInv(host, rest.g, rest.f)
        inner, w = fold(host, rest.g)
        return OuIns(inner, rest.f), comp(ins_arr(w, Id(rest.f)), step)

    merged, w = fold(host, rest)
    return merged, comp(w, arrow)


def word_of(f: Term) -> tuple:
    """Atoms of the normal form, in order; a pure-unit term keeps one atom."""
    if is_atom(f):
        return (f,)
    wg, wf = word_of(f.g), word_of(f.f)
    return _wordcat(wg, wf)


def _pure_unit(w: tuple) -> bool:
    return len(w) == 1 and is_unit(w[0])


def _wordcat(wg: tuple, wf: tuple) -> tuple:
    if _pure_unit(wf):
        return wg
    if _pure_unit(wg):
        return wf
    return wg + wf


# --- strictification ------------------------------------------------------------

def strictify(u: ArrowTerm) -> pe.PermArrow:
    """Transposition sequence between the normal words of the endpoints.

    Re-associations and unit arrows vanish; an exchange becomes the block
    swap decomposed into adjacent transpositions (each block atom of the
    moved-in term walks left past the whole moved-out block, in block
    order); insertion embeds into the word context, arguments first.
    """
    if isinstance(u, Comp):
        return pe.compose(strictify(u.v), strictify(u.u))
    if isinstance(u, InsArr):
        sv, su = strictify(u.v), strictify(u.u)
        steps = []
        if not _pure_unit(su.source):
            prefix = sv.source if not _pure_unit(sv.source) else ()
            for st in su.steps:
                steps.append(pe.GenStep(prefix + st.prefix, st.p, st.q,
                                        st.suffix))
        if not _pure_unit(sv.source):
            suffix = su.target if not _pure_unit(su.target) else ()
            for st in sv.steps:
                steps.append(pe.GenStep(st.prefix, st.p, st.q,
                                        st.suffix + suffix))
        return pe.PermArrow(word_of(u.source), word_of(u.target),
                            tuple(steps))
    if isinstance(u, Theta):
        wh, wg, wf = word_of(u.h), word_of(u.g), word_of(u.f)
        prefix = wh if not _pure_unit(wh) else ()
        blocks_ok = not (_pure_unit(wg) or _pure_unit(wf))
        steps = []
        if blocks_ok:
            k, m = len(wg), len(wf)
            for j in range(m):
                for i in reversed(range(k)):
                    steps.append(pe.GenStep(
                        prefix + wf[:j] + wg[:i], wg[i], wf[j],
                        wg[i + 1:] + wf[j + 1:]))
        return pe.PermArrow(word_of(u.source), word_of(u.target),
                            tuple(steps))
    if isinstance(u, _BASIC_OU):
        src, tgt = word_of(u.source), word_of(u.target)
        if src != tgt:
            raise SoundnessError(f"non-exchange arrow changed its word: {u}")
        return pe.identity_arrow(src)
    raise FlavorMismatch("strictify applies to diversified arrow terms")


def woust_gamma(sig) -> pe.GammaSet:
    """The strictified category as a generator set over atom words."""
    def is_object(word):
        if not word:
            return False
        if len(word) == 1:
            return isinstance(word[0], (OuGen, OuUnit))
        t = word[0]
        if not isinstance(t, OuGen):
            return False
        for atom in word[1:]:
            if not isinstance(atom, OuGen) or atom.t not in t.s:
                return False
            t = OuIns(t, atom)
        return True

    def has_gen(prefix, p, q, suffix):
        if not prefix or not isinstance(p, OuGen) or not isinstance(q, OuGen):
            return False
        host = prefix[0]
        for atom in prefix[1:]:
            host = OuIns(host, atom)
        return p.t in host.s and q.t in host.s and p.t != q.t

    return pe.GammaSet(is_object, has_gen)


# --- the equality decision --------------------------------------------------------

def arrow_eq(u: ArrowTerm, v: ArrowTerm, cross_check: bool = True) -> bool:
    """Coherence: same-flavor arrow terms are equal iff same type.

    With cross_check on, a positive answer is verified against the graph
    semantics of the strictifications; disagreement raises, since it can
    only mean an implementation fault.
    """
    if u.flavor != v.flavor:
        raise FlavorMismatch(f"flavors differ: {u.flavor} vs {v.flavor}")
    if u.source.unitary != v.source.unitary:
        raise FlavorMismatch("unitary and non-unitary arrows are not comparable")
    if u.source != v.source or u.target != v.target:
        return False
    if cross_check:
        if u.flavor == "oe":
            u, v = arrow_oe_to_ou(u), arrow_oe_to_ou(v)
        su, sv = strictify(u), strictify(v)
        if (su.source != sv.source or su.target != sv.target
                or pe.graph(su) != pe.graph(sv)):
            raise SoundnessError(
                "same-type arrows strictified to different graphs")
    return True


# --- single basic-arrow moves out of an object -------------------------------

def _wrap(f: Term, path, base: ArrowTerm) -> ArrowTerm:
    if not path:
        return base
    if path[0] == "g":
        return InsArr(_wrap(f.g, path[1:], base), Id(f.f))
    return InsArr(Id(f.g), _wrap(f.f, path[1:], base))


def basic_moves(f: Term, unit_moves=None):
    """All (arrow, target object) single basic-arrow rewrites of f.

    unit_moves defaults to the term's unitary flag; unit introductions
    are included when it is set.
    """
    if unit_moves is None:
        unit_moves = f.unitary
    moves = []

    def local(t, path):
        if isinstance(t, OuIns):
            g, x = t.g, t.f
            if isinstance(g, OuIns):
                h, g2 = g.g, g.f
                if x.t in g2.s:
                    moves.append((path, Beta(h, g2, x)))
                if x.t in h.s and x.t != g2.t:
                    moves.append((path, Theta(h, g2, x)))
            if isinstance(x, OuIns):
                moves.append((path, BetaInv(g, x.g, x.f)))
            if unit_moves and isinstance(x, OuUnit):
                moves.append((path, Mu(g, x.addr)))
            if unit_moves and isinstance(g, OuUnit):
                moves.append((path, Lam(x)))
        if unit_moves:
            for a in t.s:
                moves.append((path, MuInv(t, a)))
            moves.append((path, LamInv(t)))
        if isinstance(t, OuIns):
            local(t.g, path + ("g",))
            local(t.f, path + ("f",))

    local(f, ())
    out = []
    for path, base in moves:
        arrow = _wrap(f, path, base)
        out.append((arrow, arrow.target))
    return out

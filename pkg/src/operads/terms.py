"""Terms of the three insertion calculi.

Three flavors share one insertion idea and differ in how argument places
are named:

* flavor ``o``: numeric places, ``g o[n] f`` inserts f at the n-th place;
* flavor ``oe``: places named by addresses, ``g o[a] f``;
* flavor ``ou``: every generator occurrence carries its own address
  (``1-2*x``) and a single unindexed insertion ``(g o f)`` plugs f into
  the place named by f's target address.

Every node validates its side condition at construction and caches its
signature: arity ``alpha`` for ``o``, source arity ``s`` for ``oe``, and
the pair ``s``/``t`` for ``ou``.  Terms are immutable and hashable; the
signature context takes no part in equality or hashing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import addresses as ad
from .addresses import EMPTY, NWord
from .errors import IllegitimateInsertion, UnknownGenerator

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_RESERVED = {"I", "o", "e"}


@dataclass(frozen=True)
class Signature:
    """Generator names with their (numeric) arities."""

    entries: tuple[tuple[str, int], ...]

    def __post_init__(self):
        seen = set()
        for name, arity in self.entries:
            if not _NAME_RE.match(name) or name in _RESERVED:
                raise ValueError(f"bad generator name: {name!r}")
            if not isinstance(arity, int) or arity < 0:
                raise ValueError(f"bad arity for {name}: {arity!r}")
            if name in seen:
                raise ValueError(f"duplicate generator: {name}")
            seen.add(name)

    @classmethod
    def of(cls, mapping) -> "Signature":
        items = mapping.items() if hasattr(mapping, "items") else mapping
        return cls(tuple(sorted(items)))

    @classmethod
    def from_text(cls, text: str) -> "Signature":
        """One ``name arity`` pair per line; blank lines and # comments ok."""
        pairs = []
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2 or not parts[1].isdigit():
                raise ValueError(f"bad signature line: {raw!r}")
            pairs.append((parts[0], int(parts[1])))
        return cls.of(pairs)

    def arity(self, name: str) -> int:
        for n, a in self.entries:
            if n == name:
                return a
        raise UnknownGenerator(f"generator {name!r} not in signature")

    def __contains__(self, name: str) -> bool:
        return any(n == name for n, _ in self.entries)

    def names(self) -> list[str]:
        return [n for n, _ in self.entries]


class Term:
    """Base class; see the concrete node classes below."""

    flavor = None  # "o" | "oe" | "ou"

    @property
    def signature_of(self):
        if self.flavor == "o":
            return self.alpha
        if self.flavor == "oe":
            return self.s
        return (self.s, self.t)


def _set(obj, **attrs):
    for k, v in attrs.items():
        object.__setattr__(obj, k, v)


def _check_children(g, f, flavor):
    for child in (g, f):
        if child.flavor != flavor:
            raise IllegitimateInsertion(
                f"cannot mix flavor {child.flavor} into {flavor}")
    if g.unitary != f.unitary:
        raise IllegitimateInsertion("cannot mix unitary and non-unitary terms")


# --- flavor o -------------------------------------------------------------

@dataclass(frozen=True)
class OGen(Term):
    name: str
    sig: Signature = field(compare=False, repr=False)
    unitary: bool = True
    flavor = "o"

    def __post_init__(self):
        _set(self, alpha=self.sig.arity(self.name))

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class OUnit(Term):
    sig: Signature = field(compare=False, repr=False)
    flavor = "o"
    unitary = True

    def __post_init__(self):
        _set(self, alpha=1)

    def __str__(self):
        return "I"


@dataclass(frozen=True)
class OIns(Term):
    g: Term
    n: int
    f: Term
    flavor = "o"

    def __post_init__(self):
        _check_children(self.g, self.f, "o")
        if not 1 <= self.n <= self.g.alpha:
            raise IllegitimateInsertion(
                f"index {self.n} outside 1..{self.g.alpha}")
        _set(self, alpha=self.g.alpha - 1 + self.f.alpha,
             sig=self.g.sig, unitary=self.g.unitary)

    def __str__(self):
        return f"({self.g} o[{self.n}] {self.f})"


# --- flavor oe ------------------------------------------------------------

def _gen_arity_set(prefix: NWord, arity: int):
    # a unary generator gets the single place named by its own address,
    # exactly as the unit does
    if arity == 1:
        return frozenset({prefix})
    return ad.scale(prefix, ad.nbar(arity))


@dataclass(frozen=True)
class OeGen(Term):
    name: str
    sig: Signature = field(compare=False, repr=False)
    unitary: bool = True
    flavor = "oe"

    def __post_init__(self):
        _set(self, s=_gen_arity_set(EMPTY, self.sig.arity(self.name)))

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class OeUnit(Term):
    sig: Signature = field(compare=False, repr=False)
    flavor = "oe"
    unitary = True

    def __post_init__(self):
        _set(self, s=frozenset({EMPTY}))

    def __str__(self):
        return "I"


@dataclass(frozen=True)
class OeIns(Term):
    g: Term
    a: NWord
    f: Term
    flavor = "oe"

    def __post_init__(self):
        _check_children(self.g, self.f, "oe")
        if self.a not in self.g.s:
            raise IllegitimateInsertion(
                f"index {ad.word_str(self.a)} not in s = {ad.arity_str(self.g.s)}")
        s = ad.arity_insert(self.g.s, self.a, ad.scale(self.a, self.f.s))
        _set(self, s=s, sig=self.g.sig, unitary=self.g.unitary)

    def __str__(self):
        return f"({self.g} o[{ad.word_str(self.a)}] {self.f})"


# --- flavor ou ------------------------------------------------------------

@dataclass(frozen=True)
class OuGen(Term):
    addr: NWord
    name: str
    sig: Signature = field(compare=False, repr=False)
    unitary: bool = True
    flavor = "ou"

    def __post_init__(self):
        _set(self, s=_gen_arity_set(self.addr, self.sig.arity(self.name)),
             t=self.addr)

    def __str__(self):
        return f"{ad.word_str(self.addr)}*{self.name}"


@dataclass(frozen=True)
class OuUnit(Term):
    addr: NWord
    sig: Signature = field(compare=False, repr=False)
    flavor = "ou"
    unitary = True

    def __post_init__(self):
        _set(self, s=frozenset({self.addr}), t=self.addr)

    def __str__(self):
        return f"{ad.word_str(self.addr)}*I"


@dataclass(frozen=True)
class OuIns(Term):
    g: Term
    f: Term
    flavor = "ou"

    def __post_init__(self):
        _check_children(self.g, self.f, "ou")
        if self.f.t not in self.g.s:
            raise IllegitimateInsertion(
                f"target {ad.word_str(self.f.t)} not in s = {ad.arity_str(self.g.s)}")
        s = ad.arity_insert(self.g.s, self.f.t, self.f.s)
        _set(self, s=s, t=self.g.t, sig=self.g.sig, unitary=self.g.unitary)

    def __str__(self):
        return f"({self.g} o {self.f})"


_ATOMS = (OGen, OUnit, OeGen, OeUnit, OuGen, OuUnit)
_UNITS = (OUnit, OeUnit, OuUnit)


def is_atom(t: Term) -> bool:
    return isinstance(t, _ATOMS)


def is_unit(t: Term) -> bool:
    return isinstance(t, _UNITS)


def is_ins(t: Term) -> bool:
    return isinstance(t, (OIns, OeIns, OuIns))


def signature_of(t: Term):
    """The cached signature: arity, source arity, or (source, target)."""
    return t.signature_of


def term_size(t: Term) -> int:
    """Number of leaves (generator and unit occurrences)."""
    if is_atom(t):
        return 1
    return term_size(t.g) + term_size(t.f)


def build(sig: Signature, flavor: str, unitary: bool, raw) -> Term:
    """Validate a raw syntax tree into a term.

    Raw nodes: ("gen", name) | ("unit",) | ("agen", addr, name)
    | ("aunit", addr) | ("ins", g, index, f) with index an int (o),
    an address (oe) or None (ou).  Errors carry the path of g/f steps
    from the root to the offending node.
    """
    def walk(node, path):
        where = "/".join(path) if path else "root"
        tag = node[0]
        if tag == "gen":
            if flavor not in ("o", "oe"):
                raise IllegitimateInsertion("bare generator needs flavor o/oe", where)
            cls = OGen if flavor == "o" else OeGen
            return cls(node[1], sig, unitary)
        if tag == "unit":
            if not unitary:
                raise IllegitimateInsertion("unit leaf in a non-unitary term", where)
            return (OUnit if flavor == "o" else OeUnit)(sig)
        if tag == "agen":
            if flavor != "ou":
                raise IllegitimateInsertion("addressed generator needs flavor ou", where)
            return OuGen(node[1], node[2], sig, unitary)
        if tag == "aunit":
            if flavor != "ou":
                raise IllegitimateInsertion("addressed unit needs flavor ou", where)
            if not unitary:
                raise IllegitimateInsertion("unit leaf in a non-unitary term", where)
            return OuUnit(node[1], sig)
        if tag == "ins":
            g = walk(node[1], path + ("g",))
            f = walk(node[3], path + ("f",))
            try:
                if flavor == "o":
                    return OIns(g, node[2], f)
                if flavor == "oe":
                    return OeIns(g, node[2], f)
                return OuIns(g, f)
            except IllegitimateInsertion as exc:
                raise IllegitimateInsertion(exc.reason, where) from None
        raise ValueError(f"bad raw node {node!r}")

    return walk(raw, ())


def scale_term(a: NWord, f: Term) -> Term:
    """Prefix every leaf address of an ou term with a."""
    if isinstance(f, OuGen):
        return OuGen(a + f.addr, f.name, f.sig, f.unitary)
    if isinstance(f, OuUnit):
        return OuUnit(a + f.addr, f.sig)
    if isinstance(f, OuIns):
        return OuIns(scale_term(a, f.g), scale_term(a, f.f))
    raise ValueError("scale_term applies to ou terms only")


def strip_term(b: NWord, f: Term) -> Term:
    """Remove the prefix b from every leaf address; inverse of scale_term."""
    if isinstance(f, OuGen):
        return OuGen(ad.strip(b, f.addr), f.name, f.sig, f.unitary)
    if isinstance(f, OuUnit):
        return OuUnit(ad.strip(b, f.addr), f.sig)
    if isinstance(f, OuIns):
        return OuIns(strip_term(b, f.g), strip_term(b, f.f))
    raise ValueError("strip_term applies to ou terms only")

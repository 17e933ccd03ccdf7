"""Recursive-descent parsers for the term and arrow grammars.

Terms (whitespace-insensitive):

    o:   t := ident | "I" | "(" t "o[" nat "]" t ")"
    oe:  t := ident | "I" | "(" t "o[" nword "]" t ")"
    ou:  t := nword "*" ident | nword "*I" | "(" t "o" t ")"

Arrows:

    A := "1[" t "]" | "beta[" ... "]" | "ibeta[...]" | "theta[...]"
       | "mu[" t "," nword "]" | "imu[...]" | "lam[" t "]" | "ilam[" t "]"
       | A "." A                   composition, right operand applied first
       | "(" A "o" A ")"           insertion (oe flavor: "o[" nword "]")

The diversified basic arrows take three terms; the address-indexed ones
take the five-part index pairs (h, b, g, a, f).  Parsers return validated
values; semantic failures surface as the term/arrow constructors' errors.
"""

from __future__ import annotations

from . import addresses as ad
from . import arrows as ar
from .errors import ParseError
from .terms import Signature, Term, build


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _line_col(self):
        done = self.text[: self.pos]
        line = done.count("\n") + 1
        col = self.pos - (done.rfind("\n") + 1) + 1
        return line, col

    def error(self, message, expected=()):
        line, col = self._line_col()
        raise ParseError(message, line, col, expected)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, k=1):
        self.skip_ws()
        return self.text[self.pos: self.pos + k]

    def eat(self, token):
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token):
        if not self.eat(token):
            got = self.peek() or "end of input"
            self.error(f"found {got!r}", expected=(token,))

    def ident(self):
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and (self.text[self.pos].isalpha()
                                          or self.text[self.pos] == "_"):
            self.pos += 1
            while self.pos < len(self.text) and (self.text[self.pos].isalnum()
                                                 or self.text[self.pos] == "_"):
                self.pos += 1
        if start == self.pos:
            self.error("expected a name", expected=("identifier",))
        return self.text[start: self.pos]

    def nat(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected a number", expected=("natural number",))
        return int(self.text[start: self.pos])

    def nword(self):
        self.skip_ws()
        if self.eat("e"):
            return ad.EMPTY
        digits = [self.nat()]
        while True:
            self.skip_ws()
            if self.text.startswith("-", self.pos):
                self.pos += 1
                digits.append(self.nat())
            else:
                break
        return tuple(digits)

    def at_end(self):
        self.skip_ws()
        return self.pos >= len(self.text)


def _raw_term(sc: _Scanner, flavor: str):
    if sc.eat("("):
        g = _raw_term(sc, flavor)
        sc.expect("o")
        if flavor == "o":
            sc.expect("[")
            idx = sc.nat()
            sc.expect("]")
        elif flavor == "oe":
            sc.expect("[")
            idx = sc.nword()
            sc.expect("]")
        else:
            idx = None
        f = _raw_term(sc, flavor)
        sc.expect(")")
        return ("ins", g, idx, f)
    if flavor == "ou":
        w = sc.nword()
        sc.expect("*")
        if sc.eat("I"):
            return ("aunit", w)
        return ("agen", w, sc.ident())
    name = sc.ident()
    if name == "I":
        return ("unit",)
    return ("gen", name)


def parse_term(text: str, sig: Signature, flavor: str,
               unitary: bool = True) -> Term:
    sc = _Scanner(text)
    raw = _raw_term(sc, flavor)
    if not sc.at_end():
        sc.error("trailing input after term")
    return build(sig, flavor, unitary, raw)


_BASIC_OU = {"beta": ar.Beta, "ibeta": ar.BetaInv, "theta": ar.Theta}
_BASIC_OE = {"beta": ar.BetaE, "ibeta": ar.BetaInvE, "theta": ar.ThetaE}


def _arrow_atom(sc: _Scanner, sig, flavor, unitary):
    def term():
        return build(sig, flavor, unitary, _raw_term(sc, flavor))

    if sc.eat("("):
        v = _arrow(sc, sig, flavor, unitary)
        sc.expect("o")
        if flavor == "oe":
            sc.expect("[")
            a = sc.nword()
            sc.expect("]")
            u = _arrow(sc, sig, flavor, unitary)
            sc.expect(")")
            return ar.InsArrAt(v, a, u)
        u = _arrow(sc, sig, flavor, unitary)
        sc.expect(")")
        return ar.InsArr(v, u)
    if sc.eat("1"):
        sc.expect("[")
        t = term()
        sc.expect("]")
        return ar.Id(t)
    key = sc.ident()
    if key in _BASIC_OU:
        sc.expect("[")
        h = term()
        sc.expect(",")
        if flavor == "oe":
            b = sc.nword()
            sc.expect(",")
            g = term()
            sc.expect(",")
            a = sc.nword()
            sc.expect(",")
            f = term()
            sc.expect("]")
            return _BASIC_OE[key](h, b, g, a, f)
        g = term()
        sc.expect(",")
        f = term()
        sc.expect("]")
        return _BASIC_OU[key](h, g, f)
    if key in ("mu", "imu"):
        sc.expect("[")
        f = term()
        sc.expect(",")
        a = sc.nword()
        sc.expect("]")
        if flavor == "oe":
            return (ar.MuE if key == "mu" else ar.MuInvE)(f, a)
        return (ar.Mu if key == "mu" else ar.MuInv)(f, a)
    if key in ("lam", "ilam"):
        sc.expect("[")
        f = term()
        sc.expect("]")
        if flavor == "oe":
            return (ar.LamE if key == "lam" else ar.LamInvE)(f)
        return (ar.Lam if key == "lam" else ar.LamInv)(f)
    sc.error(f"unknown arrow head {key!r}",
             expected=("1", "beta", "ibeta", "theta", "mu", "imu",
                       "lam", "ilam", "("))


def _arrow(sc: _Scanner, sig, flavor, unitary):
    first = _arrow_atom(sc, sig, flavor, unitary)
    factors = [first]
    while sc.eat("."):
        factors.append(_arrow_atom(sc, sig, flavor, unitary))
    # "v . u" applies u first: fold into left-nested composition
    out = factors[0]
    for nxt in factors[1:]:
        out = ar.Comp(out, nxt)
    return out


def parse_arrow(text: str, sig: Signature, flavor: str,
                unitary: bool = True):
    if flavor not in ("ou", "oe"):
        raise ValueError("arrow expressions exist in flavors ou and oe")
    sc = _Scanner(text)
    arrow = _arrow(sc, sig, flavor, unitary)
    if not sc.at_end():
        sc.error("trailing input after arrow")
    return arrow

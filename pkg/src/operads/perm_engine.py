"""Generic coherence engine over words of atoms.

Arrows are composites of adjacent transpositions ``A[p,q]B : ApqB -> AqpB``
drawn from a chosen generator set, plus derived block moves
``A[r,S]B : ArSB -> ASrB``.  The engine rewrites composites to a normal
form (a composite of block moves with strictly growing right contexts,
in application order) under a measure that strictly decreases at every
step, and decides the word problem by the position graph: two composites
of the same type are equal iff they induce the same bijection between
source and target positions.

Atoms are arbitrary hashable tokens.  Duplicate atoms in a word are fine;
graphs track positions, not atom identity.

Text syntax: atoms separated by spaces, ``-`` for the empty word;
generator files hold one ``A | p q | B`` line per generator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GeneratorMissing, SoundnessError, TypeMismatch

Word = tuple


def word_from_str(text: str) -> Word:
    text = text.strip()
    if text == "-" or not text:
        return ()
    return tuple(text.split())


def word_str(w: Word) -> str:
    return " ".join(str(a) for a in w) if w else "-"


@dataclass(frozen=True)
class GenStep:
    """One adjacent transposition with its contexts."""

    prefix: Word
    p: object
    q: object
    suffix: Word

    @property
    def source(self):
        return self.prefix + (self.p, self.q) + self.suffix

    @property
    def target(self):
        return self.prefix + (self.q, self.p) + self.suffix

    def __str__(self):
        return f"{word_str(self.prefix)} | {self.p} {self.q} | {word_str(self.suffix)}"


@dataclass(frozen=True)
class BracketStep:
    """One block move: r jumps rightward past the block."""

    prefix: Word
    r: object
    block: Word
    suffix: Word

    @property
    def source(self):
        return self.prefix + (self.r,) + self.block + self.suffix

    @property
    def target(self):
        return self.prefix + self.block + (self.r,) + self.suffix

    def __str__(self):
        return (f"{word_str(self.prefix)} [{self.r}, {word_str(self.block)}] "
                f"{word_str(self.suffix)}")


@dataclass(frozen=True)
class PermArrow:
    source: Word
    target: Word
    steps: tuple

    def __post_init__(self):
        at = self.source
        for step in self.steps:
            if step.source != at:
                raise TypeMismatch(
                    f"step source {word_str(step.source)} does not chain "
                    f"from {word_str(at)}")
            at = step.target
        if at != self.target:
            raise TypeMismatch(
                f"arrow target {word_str(self.target)} does not match "
                f"final word {word_str(at)}")

    def __str__(self):
        if not self.steps:
            return f"id {word_str(self.source)}"
        return " ; ".join(str(s) for s in self.steps)


def identity_arrow(word: Word) -> PermArrow:
    return PermArrow(word, word, ())


def generator(prefix: Word, p, q, suffix: Word) -> PermArrow:
    step = GenStep(tuple(prefix), p, q, tuple(suffix))
    return PermArrow(step.source, step.target, (step,))


def compose(v: PermArrow, u: PermArrow) -> PermArrow:
    """v after u."""
    if u.target != v.source:
        raise TypeMismatch(
            f"cannot compose: {word_str(u.target)} vs {word_str(v.source)}")
    return PermArrow(u.source, v.target, u.steps + v.steps)


def bracket_steps(prefix: Word, r, block: Word, suffix: Word) -> list:
    """The inductive expansion of a block move into transpositions."""
    out = []
    for j, s in enumerate(block):
        out.append(GenStep(tuple(prefix) + tuple(block[:j]), r, s,
                           tuple(block[j + 1:]) + tuple(suffix)))
    return out


def bracket(prefix: Word, r, block: Word, suffix: Word, gamma=None) -> PermArrow:
    """The composite arrow ArSB -> ASrB; identity when the block is empty."""
    steps = bracket_steps(prefix, r, block, suffix)
    if gamma is not None:
        for step in steps:
            if not gamma.generator(step.prefix, step.p, step.q, step.suffix):
                raise GeneratorMissing(str(step))
    src = tuple(prefix) + (r,) + tuple(block) + tuple(suffix)
    tgt = tuple(prefix) + tuple(block) + (r,) + tuple(suffix)
    return PermArrow(src, tgt, tuple(steps))


# --- graphs -----------------------------------------------------------------

def _step_graph(step):
    n = len(step.source)
    perm = list(range(n))
    if isinstance(step, GenStep):
        i = len(step.prefix)
        perm[i], perm[i + 1] = i + 1, i
    else:
        i = len(step.prefix)
        k = len(step.block)
        perm[i] = i + k
        for j in range(k):
            perm[i + 1 + j] = i + j
    return perm


def graph(u: PermArrow) -> tuple:
    """Position bijection: entry i is where source position i lands."""
    perm = list(range(len(u.source)))
    for step in u.steps:
        sg = _step_graph(step)
        perm = [sg[x] for x in perm]
    for i, j in enumerate(perm):
        if u.source[i] != u.target[j]:
            raise SoundnessError("graph does not preserve atoms")
    return tuple(perm)


def perm_eq(u: PermArrow, v: PermArrow) -> bool:
    """Equality in the engine's theory: same type and same graph."""
    if u.source != v.source or u.target != v.target:
        raise TypeMismatch("arrows of different types are not comparable")
    return graph(u) == graph(v)


# --- normal form ------------------------------------------------------------

def measure(brackets) -> int:
    """Termination measure; application position weights each move."""
    return sum((len(b.prefix) + 1 + len(b.block)) * (i + 1)
               for i, b in enumerate(brackets))


def _rewrite_pair(w1: BracketStep, w2: BracketStep):
    """One oriented rewrite on an adjacent violating pair, or None.

    In application order the right contexts must strictly grow; a pair
    violates when the second move ends at or past the first mover's
    landing position.  The four disjointness/containment/interleaving/
    continuation cases each have one oriented equation.
    """
    c1, s1, d1 = len(w1.prefix), len(w1.block), len(w1.suffix)
    c2, s2 = len(w2.prefix), len(w2.block)
    r1pos = c1 + s1
    if c2 + s2 < r1pos:
        return None  # already ordered
    y = w1.target
    x = w1.source
    if c2 > r1pos:
        # disjoint, second strictly right of the first mover: swap them
        u_gap = y[r1pos + 1:c2]
        new1 = BracketStep(x[:c2], w2.r, w2.block, w2.suffix)
        new2 = BracketStep(w1.prefix, w1.r, w1.block,
                           u_gap + w2.block + (w2.r,) + w2.suffix)
        return "BC1", [new1, new2]
    if c2 == r1pos:
        # same mover continues: merge the blocks
        return "BC4", [BracketStep(w1.prefix, w1.r, w1.block + w2.block,
                                   w2.suffix)]
    if c2 >= c1:
        # second mover sits inside the first block and jumps past r1
        s_head = w1.block[:c2 - c1]
        u_tail = w1.block[c2 - c1 + 1:]
        q_ext = y[r1pos + 1:c2 + s2 + 1]
        new1 = BracketStep(w1.prefix + (w1.r,) + s_head, w2.r,
                           u_tail + q_ext, w2.suffix)
        new2 = BracketStep(w1.prefix, w1.r, s_head + u_tail,
                           q_ext + (w2.r,) + w2.suffix)
        return "BC3", [new1, new2]
    # second mover starts left of the first block and jumps over all of it
    q_gap = y[c2 + 1:c1]
    u_tail = y[r1pos + 1:c2 + s2 + 1]
    new1 = BracketStep(w2.prefix, w2.r,
                       q_gap + (w1.r,) + w1.block + u_tail, w2.suffix)
    new2 = BracketStep(w2.prefix + q_gap, w1.r, w1.block,
                       u_tail + (w2.r,) + w2.suffix)
    return "BC2", [new1, new2]


def normal_form(u: PermArrow, measure_log=None) -> PermArrow:
    """Equal arrow as a composite of block moves in normal form."""
    brackets = []
    for step in u.steps:
        if isinstance(step, GenStep):
            brackets.append(BracketStep(step.prefix, step.p, (step.q,),
                                        step.suffix))
        elif step.block:
            brackets.append(step)
    changed = True
    while changed:
        changed = False
        i = 0
        while i + 1 < len(brackets):
            hit = _rewrite_pair(brackets[i], brackets[i + 1])
            if hit is None:
                i += 1
                continue
            rule, replacement = hit
            before = measure(brackets)
            replacement = [b for b in replacement if b.block]
            brackets[i:i + 2] = replacement
            after = measure(brackets)
            if after >= before:
                raise SoundnessError(
                    f"measure did not decrease under {rule}: {before} -> {after}")
            if measure_log is not None:
                measure_log.append((rule, before, after))
            changed = True
            i = max(i - 1, 0)
    return PermArrow(u.source, u.target, tuple(brackets))


# --- generator sets ----------------------------------------------------------

class GammaSet:
    """Membership predicates for objects and basic transpositions.

    Predicates rather than sets: instances of interest have infinitely
    many objects.  Identity arrows for all objects are implicit.
    """

    def __init__(self, is_object, has_generator):
        self._is_object = is_object
        self._has_generator = has_generator

    def object(self, word: Word) -> bool:
        return bool(self._is_object(tuple(word)))

    def generator(self, prefix: Word, p, q, suffix: Word) -> bool:
        prefix, suffix = tuple(prefix), tuple(suffix)
        if not (self.object(prefix + (p, q) + suffix)
                and self.object(prefix + (q, p) + suffix)):
            return False
        return bool(self._has_generator(prefix, p, q, suffix))

    @classmethod
    def from_generators(cls, gens) -> "GammaSet":
        """Materialized set: objects are all endpoint words of the listed
        generators (closed under nothing else)."""
        gens = {(tuple(a), p, q, tuple(b)) for a, p, q, b in gens}
        objects = set()
        for a, p, q, b in gens:
            objects.add(a + (p, q) + b)
            objects.add(a + (q, p) + b)
        return cls(lambda w: w in objects,
                   lambda a, p, q, b: (a, p, q, b) in gens)


def symmetric_gamma(atom, n: int) -> GammaSet:
    """The symmetric-group instance: one object, all adjacent swaps."""
    word = (atom,) * n
    return GammaSet(lambda w: w == word,
                    lambda a, p, q, b: p == atom and q == atom
                    and len(a) + 2 + len(b) == n)


def parse_generator_file(text: str) -> list:
    """One ``A | p q | B`` generator per line; ``-`` is the empty word."""
    gens = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split("|")]
        if len(parts) != 3:
            raise ValueError(f"bad generator line: {raw!r}")
        pair = word_from_str(parts[1])
        if len(pair) != 2:
            raise ValueError(f"middle field must hold two atoms: {raw!r}")
        gens.append((word_from_str(parts[0]), pair[0], pair[1],
                     word_from_str(parts[2])))
    return gens


def check_gamma(gamma: GammaSet, probe_words) -> list:
    """Probe the transport condition on the commuting equations.

    For every instance of the disjoint-swap and Yang-Baxter equations
    inside the probe words, membership of one side's generators must
    imply membership of the other side's.  Returns the violations.
    """
    violations = []

    def side_check(eq, word, lhs, rhs):
        for first, second in ((lhs, rhs), (rhs, lhs)):
            if all(gamma.generator(*g) for g in first):
                missing = [g for g in second if not gamma.generator(*g)]
                for g in missing:
                    violations.append((eq, word, GenStep(*g)))

    for word in probe_words:
        word = tuple(word)
        n = len(word)
        for i in range(n - 1):
            for j in range(i + 2, n - 1):
                a, r, s = word[:i], word[i], word[i + 1]
                u, p, q, b = word[i + 2:j], word[j], word[j + 1], word[j + 2:]
                lhs = [(a, r, s, u + (p, q) + b),
                       (a + (s, r) + u, p, q, b)]
                rhs = [(a + (r, s) + u, p, q, b),
                       (a, r, s, u + (q, p) + b)]
                side_check("C1", word, lhs, rhs)
        for i in range(n - 2):
            a, p, r, s, b = word[:i], word[i], word[i + 1], word[i + 2], word[i + 3:]
            lhs = [(a + (p,), r, s, b),
                   (a, p, s, (r,) + b),
                   (a + (s,), p, r, b)]
            rhs = [(a, p, r, (s,) + b),
                   (a + (r,), p, s, b),
                   (a, r, s, (p,) + b)]
            side_check("C2", word, lhs, rhs)
    return violations

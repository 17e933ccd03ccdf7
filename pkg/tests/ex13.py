"""The nine worked tree inputs and their published counts."""

from operads.addresses import arity_from_str, word_from_str
from operads.polytopes import TreeInput, internal_vertices
from operads.terms import Signature


def _tree(leaves_text, renames, sig_map):
    sig = Signature.of(sig_map)
    leaves = arity_from_str(leaves_text)
    internal = internal_vertices(leaves)
    labels = {}
    for v in internal:
        digits = {c[len(v)] for c in leaves if len(c) > len(v)
                  and c[: len(v)] == v}
        digits |= {w[len(v)] for w in internal if len(w) > len(v)
                   and w[: len(v)] == v}
        name = next(n for n, a in sorted(sig_map.items()) if a == len(digits))
        labels[v] = name
    rename = {word_from_str(k): v for k, v in renames.items()}
    return TreeInput(sig, leaves, labels, rename)


# expected = (V, E, beta_edges, faces-by-equation)
EXAMPLES = {
    "13.1": (_tree("{1-1-1,1-1-2,1-2-1,1-2-2,2-1,2-2}",
                   {"1-1": "a", "1-2": "b", "1": "c", "2": "d"}, {"x": 2}),
             (18, 27, 10, {"theta-nat": 4, "beta-theta-2": 4,
                           "beta-theta-1": 2, "theta-yb": 1})),
    "13.2": (_tree("{1-1-1-1,1-1-1-2,1-1-2,1-2-1,1-2-2,2}",
                   {"1-2": "a", "1": "b", "1-1": "c", "1-1-1": "d"},
                   {"x": 2}),
             (18, 27, 19, {"beta-theta-1": 3, "beta-nat": 3, "beta-pent": 2,
                           "theta-nat": 1, "beta-theta-2": 2})),
    "13.3": (_tree("{1-1-1-1,1-1-1-2,1-1-2-1,1-1-2-2,1-2,2}",
                   {"1-1-1": "a", "1-1-2": "b", "1-1": "c", "1": "d"},
                   {"x": 2}),
             (18, 27, 22, {"beta-pent": 4, "beta-theta-1": 3,
                           "theta-nat": 1, "beta-nat": 3})),
    "13.4": (_tree("{1-1-1,1-1-2,1-2,2-1,2-2,3-1,3-2}",
                   {"3": "a", "2": "b", "1": "c", "1-1": "d"},
                   {"x": 2, "y": 3}),
             (18, 27, 6, {"theta-yb": 3, "theta-nat": 3, "beta-nat": 1,
                          "beta-theta-2": 4})),
    "13.5": (_tree("{1-1-1-1,1-1-1-2,1-1-2,1-2,2-1,2-2}",
                   {"2": "a", "1": "b", "1-1": "c", "1-1-1": "d"},
                   {"x": 2}),
             (14, 21, 12, {"beta-nat": 1, "beta-pent": 2, "beta-theta-2": 4,
                           "theta-nat": 2})),
    "13.6": (_tree("{1-1-1,1-1-2,1-2,2-1,2-2-1,2-2-2}",
                   {"1-1": "a", "1": "b", "2": "c", "2-2": "d"},
                   {"x": 2}),
             (14, 21, 10, {"theta-nat": 1, "beta-theta-2": 6,
                           "beta-nat": 2})),
    "13.7": (_tree("{1-1-1,1-1-2,1-2-1,1-2-2,1-3-1,1-3-2,2}",
                   {"1": "a", "1-1": "b", "1-2": "c", "1-3": "d"},
                   {"x": 2, "y": 3}),
             (24, 36, 18, {"beta-theta-1": 6, "theta-nat": 3, "theta-yb": 2,
                           "beta-nat": 3})),
    "13.8": (_tree("{1-1-1-1-1,1-1-1-1-2,1-1-1-2,1-1-2,1-2,2}",
                   {"1": "a", "1-1": "b", "1-1-1": "c", "1-1-1-1": "d"},
                   {"x": 2}),
             (14, 21, 21, {"beta-pent": 6, "beta-nat": 3})),
    "13.9": (_tree("{1-1,1-2,2-1,2-2,3-1,3-2,4-1,4-2}",
                   {"1": "a", "2": "b", "3": "c", "4": "d"},
                   {"x": 2, "y": 4}),
             (24, 36, 0, {"theta-yb": 8, "theta-nat": 6})),
}

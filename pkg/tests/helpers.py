"""Shared generators for randomized tests."""

from selfsim.automata import Vertex, random_element
from selfsim.rn import RNElement


def random_table(machine, rng, expansions=2, max_word_len=3):
    """A valid random table: expand both codes the same number of times,
    shuffle the pairing, and label with short random words."""
    d = machine.arity
    dom = [Vertex(d)]
    ran = [Vertex(d)]
    for code in (dom, ran):
        for _ in range(expansions):
            v = code.pop(rng.randrange(len(code)))
            code.extend(v.child(i) for i in range(1, d + 1))
    rng.shuffle(ran)
    entries = [
        (u, w, random_element(machine, rng, max_word_len).word)
        for u, w in zip(dom, ran)
    ]
    return RNElement(machine, entries)

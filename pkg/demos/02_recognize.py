# Recognizing members of EX(n) by canonical form, and what breaks recognition.

import random

from p22free import Family, build_family, classify, enumerate_params, find_witness
from p22free.digraph import add_arc, relabel, remove_arc, reverse

rng = random.Random(1)

D = build_family(enumerate_params(Family.D5, 14)[2])
perm = list(range(D.n))
rng.shuffle(perm)
hidden = relabel(reverse(D), perm)  # scrambled labels, arcs flipped
print("scrambled reverse of D5:", classify(hidden))

# Dropping an arc fails the first gate.
a, b = D.arcs()[0]
print("one arc removed:      ", classify(remove_arc(D, a, b)))

# Moving an arc keeps the count but usually creates a copy of P(2,2).
while True:
    u, v = rng.sample(range(D.n), 2)
    if D.has_arc(u, v):
        continue
    a, b = rng.choice(D.arcs())
    moved = remove_arc(add_arc(D, u, v), a, b)
    w = find_witness(moved)
    if w is not None:
        break
print("one arc moved:        ", classify(moved), "witness", tuple(w))

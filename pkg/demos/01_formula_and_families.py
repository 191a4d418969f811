# Closed form for ex(n) and the ten family templates that attain it.
#
# Run from the repository root:  python demos/01_formula_and_families.py

import numpy as np

from p22free import Family, build_family, enumerate_params, ex_formula, is_free

orders = np.arange(13, 25)
values = np.array([ex_formula(int(n)) for n in orders])
print("n      ", orders)
print("ex(n)  ", values)
print("ex/n^2 ", np.round(values / orders**2, 3))  # creeps down toward 1/4

# Each family only exists for one residue class of n.
for n in (13, 14, 16):
    counts = {str(f): len(enumerate_params(f, n)) for f in Family}
    print(n, {k: v for k, v in counts.items() if v})

# Every template is free and has exactly ex(n) arcs.
p = enumerate_params(Family.D9, 14)[0]
D = build_family(p)
print(p.describe(), "arcs:", D.arc_count, "free:", is_free(D))

# Adjacency as a 0/1 matrix: V1 is the top-left block, V2 broadcasts into it.
A = np.array([[D.has_arc(u, v) for v in range(D.n)] for u in range(D.n)], dtype=np.uint8)
m = D.n // 2 + 1
print(A)
print("arcs V1->V1", A[:m, :m].sum(), " V1->V2", A[:m, m:].sum(),
      " V2->V1", A[m:, :m].sum(), " V2->V2", A[m:, m:].sum())

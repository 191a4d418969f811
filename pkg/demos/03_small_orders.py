# Direct search for the largest P(2,2)-free digraphs on at most six vertices.
#
# The closed form only starts at n = 13; below that it can be wrong, and n = 5
# is the standard example: the formula would give 11 but 12 arcs are possible.

import time

from p22free import SearchConfig, max_free_branch_and_bound, max_free_exhaustive, remark_digraph
from p22free.canonical import are_isomorphic

for n in range(1, 6):
    t = time.perf_counter()
    full = max_free_exhaustive(n)
    bnb = max_free_branch_and_bound(SearchConfig(n))
    print(f"n={n}  exhaustive={full.best_arcs}  bnb={bnb.best_arcs}  "
          f"classes={len(full.witnesses)}  {time.perf_counter() - t:.2f}s")

best5 = max_free_exhaustive(5).witnesses[0]
print("n=5 optimum is the 12-arc example:", are_isomorphic(best5, remark_digraph()))

# n = 6 takes some seconds; set P22_WORKERS to split it across processes.
t = time.perf_counter()
six = max_free_branch_and_bound(SearchConfig(6, collect_witnesses=False))
print(f"n=6  best={six.best_arcs}  optimal={six.optimal}  nodes={six.nodes}  {time.perf_counter() - t:.1f}s")

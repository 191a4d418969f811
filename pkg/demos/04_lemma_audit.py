# Structural checks on an extremal digraph and on a damaged copy of it.

from p22free import Family, build_family, enumerate_params, find_witness, full_audit
from p22free.digraph import add_arc

D = build_family(enumerate_params(Family.D3, 16)[0])
report = full_audit(D)
print(report.render())
print("all hold:", report.all_hold)

# Plant an arc between two successors of a max-degree vertex.  This creates a
# copy of P(2,2), and every check it breaks is listed with its vertex.
v = report.max_degree_vertices[0]
succ = [u for u in range(D.n) if D.has_arc(v, u)]
bad = next(add_arc(D, a, b) for a in succ for b in succ if a != b and not D.has_arc(a, b))
broken = full_audit(bad)
print()
print("witness:", tuple(find_witness(bad)))
print("\n".join(line for line in broken.key_values().splitlines() if line.endswith("false")))

"""Solve one osculating instance of (2,1)^2 (1)^3 in Gr(3,6) and check its Wronskians.

Run: python demos/solve_one_instance.py
"""

from oscschubert.groebner import check_wronskian_orders, solve_instance
from oscschubert.schubert import OsculatingInstance, instance_system

# one conjugate pair for the (2,1) conditions, one real point and a pair for the (1)s
inst = OsculatingInstance.build(
    "GR(3,6): 2.1^2, 1^3",
    [((2, 1), "i"), ((2, 1), "-i"), ((1,), "1"), ((1,), "1+i"), ((1,), "1-i")],
)

system = instance_system(inst)
print(f"chart {system.chart.descriptor()}:")
print(system.chart.to_ascii())
print(f"{len(system.equations)} equations in {len(system.variables)} variables\n")

report = solve_instance(inst)
print(f"complex solutions: {report.num_complex}")
print(f"real solutions:    {report.num_real}")
print(f"eliminant: {report.eliminant.to_text(report.variables[-1])}")

chk = check_wronskian_orders(inst)
print(f"\nWronskian root orders exact for every solution: {chk.ok}")
for pt, order in chk.orders:
    print(f"  order {order} at {pt}")

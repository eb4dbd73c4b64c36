"""The sphere cycle for n = 3: walls, the exponent l and membership certificates.

Run with ``python3 demos/03_cycle.py`` (about half a minute).
"""
from slzt.cyclelab import corner_facts, run_cycle, sphere_facts, translation_facts

run = run_cycle(3, 4)
frame = run.frame
print("working floor:", frame.floor)
print("cone basepoint y:", frame.y, " e:", frame.e, " b^k e:", frame.apex)
print("translation lattice:", translation_facts(run))

for w, rep in zip(run.walls, run.wall_reports):
    print(f"r_{w.index}: wall m_{w.index} - m_n = {w.exponent}; fixes b^k e {rep.fixes_apex}, "
          f"b^(k-1) e {rep.fixes_previous}, y {rep.fixes_y}")
print("sigma corners fixed by each wall element:", corner_facts(run)["pattern"])

print("words whose translate of D_e can meet sigma:", run.domain)
print("l has", run.ell.bit_length(), "bits")
valid = sum(c.valid for c in run.certificates)
print(f"{valid}/{len(run.certificates)} membership certificates valid")
example = next(c for c in run.certificates if c.subset == (1, 2) and c.word == (1,))
print("gamma for S = {1, 2}, a = a_1: top-left entry has degree", example.gamma[0, 0].degree)
print("rescaling identity holds for all pairs:", all(ok for _, _, ok in run.rescaling))
print("sphere facts:", sphere_facts(run))

"""Roots of f, the torus generators and why their words act freely.

Run with ``python3 demos/01_roots_and_torus.py``.
"""
from slzt.rootlift import build_f, lift_coefficients, lift_root, q_sequence, residual_bound
from slzt.toruslab import (
    companion_matrix, diagonalizer, eigenvalue_of_word, exact_identities, fixes_no_point_certificate,
    leading_term_certificate, make_generators, offdiag_valuation_bound,
)

n = 3
print("q sequence:", q_sequence(n))
print("f coefficients (constant first):", [str(c) for c in build_f(n)])

# Each root of f is a Laurent series in 1/t whose leading term is -q_k t.
print("first coefficients of the branch-1 root:", [str(c) for c in lift_coefficients(n, 1, 5)])
alpha = lift_root(n, 1, floor=-40)
print("f(alpha) has valuation at least", residual_bound(alpha, n))

# The companion matrix of f realises x; shifting and squaring gives the generators.
print("companion matrix:\n" + str(companion_matrix(n)))
print("exact identities:", exact_identities(n))

gens = make_generators(n)
for m in [(1, 0), (0, 1), (1, -1), (2, 3)]:
    cert = leading_term_certificate(gens, m)
    print(f"word {m}: eigenvalue leading term {cert.coefficient} t^{cert.exponent}")

# A nonconstant eigenvalue rules out a fixed vertex.
print("eigenvalue of a_1 on branch 2:", eigenvalue_of_word((1, 0), 2, floor=-12))
print(fixes_no_point_certificate((1, -1)))

d = diagonalizer(n)
print("off-diagonal valuations after conjugating by g:",
      [offdiag_valuation_bound(d.conjugate(a)) for a in gens.generators])

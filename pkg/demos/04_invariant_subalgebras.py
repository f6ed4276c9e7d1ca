"""Which graded subalgebras survive every automorphism?

Samples automorphisms, refutes grade sets with explicit witnesses, and sweeps
all grade sets for small n.  Run with ``python demos/04_invariant_subalgebras.py``.
"""

from grassmann import AlgebraSignature, center_basis, classify_bruteforce, comm_subalgebra_basis, invariance_check
from grassmann.invariant import a_even, b_i, custom, form_a, replay_witness

A = AlgebraSignature(4)

print("center:", center_basis(A))
print("commutator subalgebra:", comm_subalgebra_basis(A))

for spec in (a_even(A), b_i(A, 2), form_a(A, 2), custom(A, {0, 1})):
    report = invariance_check(spec, samples=200, seed=1)
    line = f"{spec.label:<16} {sorted(spec.grades)}  {report.verdict}"
    if report.witness:
        w = report.witness
        blade = "^".join(f"e{i}" for i in w.blade)
        line += f"  ({w.profile} sends {blade} to grade {w.escaping_grade}, replays: {replay_witness(w, spec)})"
    print(line)

for n in (3, 4):
    result = classify_bruteforce(AlgebraSignature(n), samples=100, seed=0)
    print(f"\nn={n}: {len(result.matched)} matched, {len(result.refuted)} refuted, anomalies {result.anomalies}")
    for grades, labels in result.matched:
        print(f"  {sorted(grades)}: {', '.join(labels)}")

"""Two presentations of the exterior algebra, and where they part ways.

Quotienting the free algebra by v v gives the exterior algebra in every
characteristic.  Quotienting by v w + w v only does so when 2 is invertible.
Run with ``python demos/05_char2_construction.py``.
"""

from grassmann import GF, AlgebraSignature, FreeWord, RelationMode, char2_report, normalize_word, poly_normalize

Q3 = AlgebraSignature(3)
w = FreeWord(1, (3, 1, 2, 1))
print("word e3 e1 e2 e1")
print("  commutative :", poly_normalize(w, Q3))
print("  v v = 0     :", normalize_word(w, RelationMode.ALTERNATING_M1, Q3))
print("  e3 e1 e2    :", normalize_word(FreeWord(1, (3, 1, 2)), RelationMode.ALTERNATING_M1, Q3))

F2 = AlgebraSignature(2, GF(2))
for letters in [(2, 1), (1, 1)]:
    word = FreeWord(1, letters)
    m1 = normalize_word(word, RelationMode.ALTERNATING_M1, F2)
    m2 = normalize_word(word, RelationMode.ANTICOMMUTATIVE_M2, F2)
    text = " ".join(f"e{i}" for i in letters)
    print(f"\nGF(2), {text}: m1 -> {m1}   m2 -> {m2}")

report = char2_report(F2)
print("\nm1 commutative   :", report.m1_commutative)
print("m1 squares vanish:", report.m1_square_zero)
print("m2 kills e1 e1   :", report.m2_reduces_square)
for step in report.witness:
    print("  ", step)

"""Graded subalgebras, sampled invariance checks and the classification sweep.

A graded subspace is described by the set of grades it contains in full.
Invariance under the (infinite) automorphism group is tested by sampling;
refutations come with a replayable witness, survivals are only evidence.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable

from .errors import InvalidFormError
from .exterior import AlgebraSignature, Blade, Multivector, basis_enumerate
from .morphisms import (
    PROFILES,
    AlgebraMorphism,
    _require_char_not_2,
    apply_morphism,
    random_automorphism,
)

__all__ = [
    "GradeSetSpec",
    "InvarianceReport",
    "Witness",
    "gradeset_from_form",
    "form_a",
    "form_b",
    "b_i",
    "a_even",
    "center_spec",
    "custom",
    "is_subalgebra",
    "invariance_check",
    "replay_witness",
    "enumerate_forms",
    "matching_forms",
    "Classification",
    "classify_bruteforce",
]


@dataclass(frozen=True)
class GradeSetSpec:
    """The direct sum of the full graded pieces ``A_k`` for ``k`` in ``grades``."""

    signature: AlgebraSignature
    grades: frozenset[int]
    provenance: str = "custom"
    params: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "grades", frozenset(self.grades))
        bad = [k for k in self.grades if not 0 <= k <= self.signature.n]
        if bad:
            raise ValueError(f"grades {sorted(bad)} out of range [0, {self.signature.n}]")

    @property
    def label(self) -> str:
        if not self.params:
            return self.provenance
        args = ", ".join(f"{k}={_fmt(v)}" for k, v in self.params)
        return f"{self.provenance}({args})"

    def as_dict(self) -> dict:
        return {
            "n": self.signature.n,
            "grades": sorted(self.grades),
            "provenance": self.provenance,
            "params": {k: _jsonable(v) for k, v in self.params},
        }


def _fmt(v):
    if isinstance(v, frozenset):
        return "{" + ",".join(map(str, sorted(v))) + "}"
    return str(v)


def _jsonable(v):
    return sorted(v) if isinstance(v, frozenset) else v


def _tail(start: int, n: int) -> set[int]:
    return set(range(start, n + 1, 2))


def form_a(sig: AlgebraSignature, j: int, with_unit: bool = True) -> GradeSetSpec:
    """``k (+) A_j (+) A_{j+2} (+) ...`` for even ``j > 0``."""
    if j <= 0 or j % 2:
        raise InvalidFormError(f"form (a) needs an even j > 0, got j={j}")
    if j > sig.n:
        raise InvalidFormError(f"form (a) needs j <= n={sig.n}, got j={j}")
    grades = _tail(j, sig.n) | ({0} if with_unit else set())
    name = "form_a" if with_unit else "form_a_no_unit"
    return GradeSetSpec(sig, frozenset(grades), name, (("j", j),))


def form_b(sig: AlgebraSignature, j: int, S: Iterable[int], i: int, with_unit: bool = False) -> GradeSetSpec:
    """``(+)_{k in S} A_k (+) A_i (+) A_{i+2} (+) ...`` under the side conditions.

    ``j`` odd, ``S`` a subset of ``{j..n}`` containing ``j``, ``i`` even with
    ``0 < i <= j + 1``, and ``{s + i : s in S, s + i <= n}`` contained in ``S``.
    The printed form has no unit summand; ``with_unit=True`` adds ``A_0``.
    """
    S = frozenset(S)
    n = sig.n
    if j % 2 == 0 or not 1 <= j <= n:
        raise InvalidFormError(f"form (b) needs an odd j in [1, n], got j={j}")
    if j not in S:
        raise InvalidFormError(f"form (b) needs j={j} in S={_fmt(S)}")
    if any(not j <= s <= n for s in S):
        raise InvalidFormError(f"form (b) needs S within [{j}, {n}], got S={_fmt(S)}")
    if i % 2 or not 0 < i <= j + 1:
        raise InvalidFormError(f"form (b) needs an even i with 0 < i <= j+1={j + 1}, got i={i}")
    shifted = {s + i for s in S if s + i <= n}
    if not shifted <= S:
        raise InvalidFormError(
            f"form (b) shift condition fails: {_fmt(frozenset(shifted - S))} not in S={_fmt(S)}"
        )
    grades = set(S) | _tail(i, n) | ({0} if with_unit else set())
    name = "form_b_with_unit" if with_unit else "form_b"
    return GradeSetSpec(sig, frozenset(grades), name, (("j", j), ("S", S), ("i", i)))


def b_i(sig: AlgebraSignature, i: int) -> GradeSetSpec:
    """``A_0 (+) A_i (+) ... (+) A_n`` for ``i >= 1``."""
    if not 1 <= i <= sig.n:
        raise InvalidFormError(f"B_i needs 1 <= i <= n, got i={i}")
    return GradeSetSpec(sig, frozenset({0} | set(range(i, sig.n + 1))), "B_i", (("i", i),))


def a_even(sig: AlgebraSignature) -> GradeSetSpec:
    return GradeSetSpec(sig, frozenset(range(0, sig.n + 1, 2)), "A_even")


def center_spec(sig: AlgebraSignature) -> GradeSetSpec:
    return GradeSetSpec(sig, frozenset(set(range(0, sig.n + 1, 2)) | {sig.n}), "center")


def custom(sig: AlgebraSignature, grades: Iterable[int]) -> GradeSetSpec:
    return GradeSetSpec(sig, frozenset(grades), "custom")


_FORMS = {
    "form_a": form_a,
    "form_b": form_b,
    "B_i": b_i,
    "A_even": a_even,
    "center": center_spec,
    "custom": custom,
}


def gradeset_from_form(sig: AlgebraSignature, form: str, **params) -> GradeSetSpec:
    """Dispatch on ``form`` in {form_a, form_b, B_i, A_even, center, custom}."""
    try:
        builder = _FORMS[form]
    except KeyError:
        raise InvalidFormError(f"unknown form {form!r}; expected one of {sorted(_FORMS)}") from None
    return builder(sig, **params)


def is_subalgebra(spec: GradeSetSpec) -> bool:
    """Closure of the grade set under addition (sums beyond ``n`` vanish)."""
    if spec.signature.n > 16:
        raise ValueError("is_subalgebra limited to n <= 16")
    g = spec.grades
    return all(a + b in g for a in g for b in g if a + b <= spec.signature.n)


# --- invariance ---------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    morphism: AlgebraMorphism
    blade: Blade
    escaping_grade: int
    profile: str = ""

    def as_dict(self) -> dict:
        from .parsing import morphism_to_dict

        return {
            "morphism": morphism_to_dict(self.morphism),
            "blade": list(self.blade),
            "escaping_grade": self.escaping_grade,
            "profile": self.profile,
        }


@dataclass(frozen=True)
class InvarianceReport:
    spec: GradeSetSpec
    samples_tested: int
    verdict: str  # "invariant_on_sample" | "refuted"
    witness: Witness | None = None

    @property
    def refuted(self) -> bool:
        return self.verdict == "refuted"

    def as_dict(self) -> dict:
        return {
            "spec": self.spec.as_dict(),
            "samples_tested": self.samples_tested,
            "verdict": self.verdict,
            "witness": None if self.witness is None else self.witness.as_dict(),
        }


def _escape(f: AlgebraMorphism, spec: GradeSetSpec) -> tuple[Blade, int] | None:
    sig = spec.signature
    for k in sorted(spec.grades):
        for b in basis_enumerate(sig, k):
            outside = apply_morphism(f, Multivector(sig, {b: 1})).grades() - spec.grades
            if outside:
                return b, min(outside)
    return None


def invariance_check(spec: GradeSetSpec, samples: int = 200, seed=0) -> InvarianceReport:
    """Test ``f(W) <= W`` on ``samples`` random automorphisms cycling through all profiles."""
    sig = spec.signature
    _require_char_not_2(sig)
    if sig.n > 8:
        raise ValueError("invariance_check limited to n <= 8")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    for s in range(samples):
        profile = PROFILES[s % len(PROFILES)]
        f = random_automorphism(sig, rng, profile)
        hit = _escape(f, spec)
        if hit is not None:
            return InvarianceReport(spec, s + 1, "refuted", Witness(f, hit[0], hit[1], profile))
    return InvarianceReport(spec, samples, "invariant_on_sample")


def replay_witness(witness: Witness, spec: GradeSetSpec) -> bool:
    """True when the witness still pushes its blade outside ``spec``."""
    sig = witness.morphism.signature
    img = apply_morphism(witness.morphism, Multivector(sig, {witness.blade: 1}))
    return witness.escaping_grade in img.grades() and witness.escaping_grade not in spec.grades


# --- classification -----------------------------------------------------


def _subsets(items):
    items = list(items)
    return (frozenset(c) for r in range(len(items) + 1) for c in itertools.combinations(items, r))


def enumerate_forms(sig: AlgebraSignature) -> list[GradeSetSpec]:
    """Every grade set produced by forms (a), (b) (both unit variants) and ``B_i``."""
    n = sig.n
    out = []
    for j in range(2, n + 1, 2):
        out.append(form_a(sig, j))
        out.append(form_a(sig, j, with_unit=False))
    for j in range(1, n + 1, 2):
        for rest in _subsets(range(j + 1, n + 1)):
            S = rest | {j}
            for i in range(2, j + 2, 2):
                for unit in (False, True):
                    try:
                        out.append(form_b(sig, j, S, i, with_unit=unit))
                    except InvalidFormError:
                        pass
    out.extend(b_i(sig, i) for i in range(1, n + 1))
    return out


def _trivial_label(sig: AlgebraSignature, grades: frozenset[int]) -> str | None:
    if not grades:
        return "trivial_zero"
    if grades == {0}:
        return "trivial_scalars"
    if grades == frozenset(range(sig.n + 1)):
        return "trivial_whole"
    return None


def matching_forms(sig: AlgebraSignature, grades: Iterable[int], forms=None) -> list[str]:
    grades = frozenset(grades)
    labels = []
    t = _trivial_label(sig, grades)
    if t:
        labels.append(t)
    for spec in forms if forms is not None else enumerate_forms(sig):
        if spec.grades == grades:
            labels.append(spec.label)
    return labels


@dataclass
class Classification:
    """Outcome of :func:`classify_bruteforce`.

    ``matched`` and ``anomalies`` hold surviving subalgebras with and without a
    matching form; ``refuted`` holds every refuted grade set (subalgebra or
    not) with its report; ``form_conflicts`` lists form-generated sets that
    were nevertheless refuted; ``non_subalgebra_survivors`` lists grade sets
    that survived sampling but are not closed under the product.
    """

    signature: AlgebraSignature
    samples: int
    seed: int
    matched: list[tuple[frozenset, list[str]]] = field(default_factory=list)
    anomalies: list[frozenset] = field(default_factory=list)
    refuted: list[tuple[frozenset, bool, InvarianceReport]] = field(default_factory=list)
    form_conflicts: list[tuple[frozenset, list[str]]] = field(default_factory=list)
    non_subalgebra_survivors: list[frozenset] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "n": self.signature.n,
            "samples": self.samples,
            "seed": self.seed,
            "matched": [{"grades": sorted(g), "forms": f} for g, f in self.matched],
            "anomalies": [sorted(g) for g in self.anomalies],
            "refuted": [
                {"grades": sorted(g), "is_subalgebra": sub, "report": r.as_dict()}
                for g, sub, r in self.refuted
            ],
            "form_conflicts": [{"grades": sorted(g), "forms": f} for g, f in self.form_conflicts],
            "non_subalgebra_survivors": [sorted(g) for g in self.non_subalgebra_survivors],
        }


def classify_bruteforce(sig: AlgebraSignature, samples: int = 200, seed: int = 0) -> Classification:
    """Sweep all ``2^(n+1)`` grade subsets against the classification forms.

    Every subset gets its own sampler seeded from ``(seed, subset)`` so the
    verdict of one set does not depend on the sweep order.
    """
    _require_char_not_2(sig)
    if sig.n > 5:
        raise ValueError("classify_bruteforce limited to n <= 5")
    forms = enumerate_forms(sig)
    result = Classification(sig, samples, seed)
    for grades in _subsets(range(sig.n + 1)):
        spec = custom(sig, grades)
        labels = matching_forms(sig, grades, forms)
        closed = is_subalgebra(spec)
        if not grades:
            result.matched.append((grades, labels))
            continue
        set_seed = seed * 1_000_003 + sum(1 << k for k in grades)
        report = invariance_check(spec, samples, set_seed)
        if report.refuted:
            result.refuted.append((grades, closed, report))
            if closed and [x for x in labels if not x.startswith("trivial")]:
                result.form_conflicts.append((grades, labels))
        elif not closed:
            result.non_subalgebra_survivors.append(grades)
        elif labels:
            result.matched.append((grades, labels))
        else:
            result.anomalies.append(grades)
    return result

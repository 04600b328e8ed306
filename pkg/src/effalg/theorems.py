"""Executable statements: every structural law runs as a check on a model.

Each check evaluates one proved statement literally on one finite model.
Implications whose hypothesis fails on the model report ``vacuous`` so the
coverage of the corpus stays visible; biconditionals evaluate both sides
independently and compare.  A ``fail`` on a valid model is never a
mathematical discovery (the statements are theorems); it is a defect in
the deciders or the enumerator, which is why the CLI maps it to its own
exit code.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

from .core import FiniteEffectAlgebra, derive_order, require_valid, supremum
from .enumeration import canonical_form, enumerate_up_to_iso
from .properties import (
    is_archimedean,
    is_atomic,
    is_atomistic,
    is_disjunctive,
    is_orthoatomistic,
    is_orthocomplete,
    is_principal,
    is_weakly_orthocomplete,
    isotropic_index,
)

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"

CHECK_IDS = (
    "cancellation",
    "sup_le_oplus",
    "omp_iff_principal_iff_join",
    "orthoalgebra_iff_index1",
    "omp_implies_orthoalgebra",
    "prop_2_6",
    "prop_2_8",
    "prop_3_3",
    "thm_3_2",
    "thm_3_7_finite",
    "orthoatomistic_omp_implies_atomistic",
    "self_orthogonal_zero",
)

CHECK_DESCRIPTIONS: Mapping[str, str] = {
    "cancellation": "a⊕b ≤ a⊕c implies b ≤ c",
    "sup_le_oplus": "a∨b ≤ a⊕b whenever both exist",
    "omp_iff_principal_iff_join": "all elements principal iff ⊕ is the join of every orthogonal pair",
    "orthoalgebra_iff_index1": "orthoalgebra iff every nonzero isotropic index is 1",
    "omp_implies_orthoalgebra": "every orthomodular poset is an orthoalgebra",
    "prop_2_6": "every orthoalgebra is Archimedean",
    "prop_2_8": "every orthocomplete effect algebra is Archimedean",
    "prop_3_3": "orthocomplete or lattice implies weakly orthocomplete",
    "thm_3_2": "atomistic iff atomic and disjunctive",
    "thm_3_7_finite": "weakly orthocomplete + Archimedean + atomic implies orthoatomistic",
    "orthoatomistic_omp_implies_atomistic": "an orthoatomistic orthomodular poset is atomistic",
    "self_orthogonal_zero": "in an orthoalgebra only 0 is orthogonal to itself",
}


@dataclass(frozen=True)
class CheckResult:
    status: str  # pass | fail | vacuous
    witness: Any = None


@dataclass(frozen=True)
class TheoremReport:
    model_name: str
    results: Mapping[str, CheckResult]

    @property
    def failed(self) -> tuple[str, ...]:
        return tuple(cid for cid, r in self.results.items() if r.status == FAIL)

    @property
    def all_pass(self) -> bool:
        return not self.failed


def _implication(hypothesis: bool, conclusion: bool, witness: Any = None) -> CheckResult:
    if not hypothesis:
        return CheckResult(VACUOUS)
    return CheckResult(PASS) if conclusion else CheckResult(FAIL, witness)


def _biconditional(lhs: bool, rhs: bool, witness: Any) -> CheckResult:
    return CheckResult(PASS) if lhs == rhs else CheckResult(FAIL, witness)


def run_all(alg: FiniteEffectAlgebra) -> TheoremReport:
    """Evaluate every check on one valid model."""
    require_valid(alg)
    order = derive_order(alg)
    n = alg.size
    lab = alg.label
    results: dict[str, CheckResult] = {}

    # cancellation: quantified over all a, b, c with a⊕b and a⊕c defined.
    cancel: CheckResult | None = None
    for a in range(n):
        partners = [(b, alg.sum_of(a, b)) for b in range(n) if alg.defined(a, b)]
        for b, ab in partners:
            for c, ac in partners:
                if order.le(ab, ac) and not order.le(b, c):
                    cancel = CheckResult(FAIL, {"a": lab(a), "b": lab(b), "c": lab(c)})
                    break
            if cancel:
                break
        if cancel:
            break
    results["cancellation"] = cancel or CheckResult(PASS)

    sup_le: CheckResult | None = None
    for a, b, c in alg.defined_pairs():
        s = supremum(alg, (a, b))
        if s is not None and not order.le(s, c):
            sup_le = CheckResult(FAIL, {"a": lab(a), "b": lab(b), "sup": lab(s), "oplus": lab(c)})
            break
    results["sup_le_oplus"] = sup_le or CheckResult(PASS)

    principal_all = all(is_principal(alg, a) for a in range(n))
    join_all = all(supremum(alg, (a, b)) == c for a, b, c in alg.defined_pairs())
    results["omp_iff_principal_iff_join"] = _biconditional(
        principal_all, join_all,
        {"all_principal": principal_all, "oplus_is_join": join_all})
    omp = principal_all

    orthoalgebra = all(not alg.defined(a, a) for a in range(1, n))
    index_one = all(isotropic_index(alg, a) == 1 for a in range(1, n))
    results["orthoalgebra_iff_index1"] = _biconditional(
        orthoalgebra, index_one,
        {"orthoalgebra": orthoalgebra, "all_indices_one": index_one})

    results["omp_implies_orthoalgebra"] = _implication(omp, orthoalgebra)

    archimedean = is_archimedean(alg)
    orthocomplete = is_orthocomplete(alg).ok
    weakly = is_weakly_orthocomplete(alg).ok
    lattice = all(supremum(alg, (a, b)) is not None for a in range(n) for b in range(a + 1, n)) \
        and _all_infima_exist(alg)
    atomic = is_atomic(alg)
    atomistic = is_atomistic(alg)
    disjunctive = is_disjunctive(alg)
    orthoatomistic = is_orthoatomistic(alg)

    results["prop_2_6"] = _implication(orthoalgebra, archimedean)
    results["prop_2_8"] = _implication(orthocomplete, archimedean)
    results["prop_3_3"] = _implication(orthocomplete or lattice, weakly)
    results["thm_3_2"] = _biconditional(
        atomistic.ok, atomic and disjunctive.ok,
        {"atomistic": atomistic.ok, "atomic": atomic, "disjunctive": disjunctive.ok,
         "atomistic_witness": atomistic.witness, "disjunctive_witness": disjunctive.witness})
    results["thm_3_7_finite"] = _implication(
        weakly and archimedean and atomic, orthoatomistic.ok, orthoatomistic.witness)
    results["orthoatomistic_omp_implies_atomistic"] = _implication(
        orthoatomistic.ok and omp, atomistic.ok, atomistic.witness)

    if orthoalgebra:
        bad = next((a for a in range(1, n) if alg.defined(a, a)), None)
        results["self_orthogonal_zero"] = CheckResult(PASS) if bad is None else CheckResult(FAIL, lab(bad))
    else:
        results["self_orthogonal_zero"] = CheckResult(VACUOUS)

    assert tuple(results) == CHECK_IDS
    return TheoremReport(alg.name or f"model(size={n})", results)


def _all_infima_exist(alg: FiniteEffectAlgebra) -> bool:
    from .core import infimum

    return all(infimum(alg, (a, b)) is not None
               for a in range(alg.size) for b in range(a + 1, alg.size))


@dataclass
class ExhaustiveSummary:
    max_size: int
    models_per_size: dict[int, int] = field(default_factory=dict)
    tallies: dict[str, dict[str, int]] = field(default_factory=dict)
    failures: list[tuple[int, str, str, Any]] = field(default_factory=list)
    duplicate_forms: int = 0
    elapsed_seconds: float = 0.0

    @property
    def total_models(self) -> int:
        return sum(self.models_per_size.values())

    def text_table(self) -> str:
        lines = ["order  models", "-----  ------"]
        for size in sorted(self.models_per_size):
            lines.append(f"{size:>5}  {self.models_per_size[size]:>6}")
        lines.append("")
        width = max(len(c) for c in CHECK_IDS)
        lines.append(f"{'check':<{width}}  pass  vacuous  fail")
        for cid in CHECK_IDS:
            t = self.tallies.get(cid, {})
            lines.append(f"{cid:<{width}}  {t.get(PASS, 0):>4}  {t.get(VACUOUS, 0):>7}  "
                         f"{t.get(FAIL, 0):>4}")
        lines.append("")
        lines.append(f"failures: {len(self.failures)}; duplicate canonical forms: {self.duplicate_forms}")
        return "\n".join(lines)

    def as_json(self) -> dict:
        return {
            "max_size": self.max_size,
            "models_per_size": {str(k): v for k, v in sorted(self.models_per_size.items())},
            "total_models": self.total_models,
            "checks": {cid: dict(self.tallies.get(cid, {})) for cid in CHECK_IDS},
            "failures": [
                {"size": s, "model": m, "check": c, "witness": _plain(w)}
                for s, m, c, w in self.failures
            ],
            "duplicate_forms": self.duplicate_forms,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
        }


def _plain(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value if isinstance(value, (str, int, float, bool)) or value is None else str(value)


def run_exhaustive(max_size: int, jobs: int = 1,
                   models: Iterable[FiniteEffectAlgebra] | None = None,
                   dump_dir: str | None = None) -> ExhaustiveSummary:
    """Run every check on every effect algebra of order <= max_size.

    A failing model is recorded with its check id and witness and, when
    ``dump_dir`` is given, written out as an .efa file.  Canonical forms
    are re-collected to assert that the stream is isomorphism-free.
    """
    started = time.perf_counter()
    summary = ExhaustiveSummary(max_size=max_size)
    tallies = {cid: {PASS: 0, VACUOUS: 0, FAIL: 0} for cid in CHECK_IDS}
    if models is None:
        models = (m for size in range(2, max_size + 1)
                  for m in enumerate_up_to_iso(size, jobs=jobs))
    seen_forms: set[bytes] = set()
    for model in models:
        require_valid(model)
        form = canonical_form(model)
        if form in seen_forms:
            summary.duplicate_forms += 1
        seen_forms.add(form)
        summary.models_per_size[model.size] = summary.models_per_size.get(model.size, 0) + 1
        report = run_all(model)
        failed_here = False
        for cid, res in report.results.items():
            tallies[cid][res.status] += 1
            if res.status == FAIL:
                summary.failures.append((model.size, model.name, cid, res.witness))
                failed_here = True
        if failed_here and dump_dir is not None:
            from pathlib import Path

            from .models import save

            target = Path(dump_dir)
            target.mkdir(parents=True, exist_ok=True)
            save(model, target / f"theorem_failure_{model.name.replace(':', '_')}.efa")
    summary.tallies = tallies
    summary.elapsed_seconds = time.perf_counter() - started
    return summary

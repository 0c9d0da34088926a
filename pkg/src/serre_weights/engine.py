"""Deduction of modular weights from lifts, and sweeps over (p, e).

Two rules, closed to a fixpoint over W?(rho):

  R1  a non-ordinary lift of type omega~^{m+n} + omega~^m gives both
      sigma_{m,n} and its companion sigma_{m+n,p-1-n};
  R2  with an ordinary modular lift, any lift of that type with n <= p - 2
      gives one of the Jordan-Holder factors of the Barsotti-Tate type;
      if exactly one of them is predicted, it is the one.

Weights outside W? are never modular, which is what lets R2 decide.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .breuil import (
    build_mbar_j,
    check_breuil_axioms,
    hom_from_rank_one,
    kernel_genericity,
    mbar_hom_exponents,
    reduction_of_mj,
)
from .characters import FieldParams
from .gl2 import SerreWeight, bt_type_for_pair, companion, jh_factors
from .lifts import lift_catalogue
from .predicted import (
    Irreducible,
    ReducibleSplit,
    ResidualInertial,
    WeightSet,
    inertial_classes,
    normalize,
    w_question,
)


class ConsistencyFault(RuntimeError):
    pass


@dataclass(frozen=True)
class GlobalHypotheses:
    taylor_wiles_ok: bool = True
    has_ordinary_modular_lift: bool = False


@dataclass(frozen=True)
class TraceEntry:
    weight: SerreWeight
    rule: str
    justification: dict

    def to_json(self) -> dict:
        return {"weight": self.weight.as_list(), "rule": self.rule, "justification": self.justification}


@dataclass
class DerivationResult:
    derived: WeightSet
    unresolved: WeightSet
    trace: list = field(default_factory=list)


def _sub(ws: WeightSet, keep) -> WeightSet:
    return WeightSet({w: ws.witnesses[w] for w in ws.sorted() if w in keep})


def derive(rho: ResidualInertial, hyps: GlobalHypotheses, params: FieldParams) -> DerivationResult:
    rho = normalize(rho, params)
    predicted = w_question(rho, params)
    derived: dict[SerreWeight, None] = {}
    trace: list[TraceEntry] = []

    def mark(w, rule, why):
        if w not in derived:
            derived[w] = None
            trace.append(TraceEntry(w, rule, why))
            return True
        return False

    catalogue = {w: lift_catalogue(rho, w, params) for w in predicted.sorted()} if hyps.taylor_wiles_ok else {}
    changed = bool(catalogue)
    while changed:
        changed = False
        for w in predicted.sorted():
            lifts = catalogue[w]
            non_ord = [d for d in lifts if not d.ordinary]
            if non_ord:
                comp = companion(w, params)
                if comp not in predicted:
                    raise ConsistencyFault(
                        f"non-ordinary lift for {w} forces {comp}, which is not predicted")
                why = {"lift": non_ord[0].to_json(), "source": w.as_list()}
                changed |= mark(w, "R1", why)
                changed |= mark(comp, "R1", why)
            if hyps.has_ordinary_modular_lift and lifts and w.n <= params.p - 2:
                options = jh_factors(bt_type_for_pair(w.m, w.n, params), params)
                inside = [o for o in options if o in predicted]
                if len(inside) == 1:
                    why = {
                        "lift": lifts[0].to_json(),
                        "disjunction": [o.as_list() for o in options],
                        "excluded": [o.as_list() for o in options if o not in predicted],
                    }
                    changed |= mark(inside[0], "R2", why)
    return DerivationResult(
        derived=_sub(predicted, derived),
        unresolved=_sub(predicted, {w for w in predicted.weights if w not in derived}),
        trace=trace,
    )


def exceptional_weights(rho: ReducibleSplit, params: FieldParams) -> WeightSet:
    """Predicted sigma_{m,n} with rho ~ omega^{m+n+e} + omega^m and n+e <= p-1 or n = p-1."""
    rho = normalize(rho, params)
    if not isinstance(rho, ReducibleSplit):
        raise TypeError("exceptional weights are defined for split reducible data")
    p, e, q1 = params.p, params.e, params.q1
    if e > p - 1:
        return WeightSet()
    predicted = w_question(rho, params)
    keep = set()
    for w in predicted.sorted():
        if sorted(((w.m + w.n + e) % q1, w.m)) == [rho.a, rho.b] and (w.n + e <= p - 1 or w.n == p - 1):
            keep.add(w)
    out = _sub(predicted, keep)
    assert len(out) <= 4, f"{len(out)} exceptional weights for {rho}"
    return out


def ordinary_exclusions(rho: ReducibleSplit, params: FieldParams) -> set[SerreWeight]:
    """sigma_{m,p-1} with rho ~ omega^{m+e} + omega^m."""
    rho = normalize(rho, params)
    q1 = params.q1
    return {SerreWeight(m, params.p - 1) for m in range(q1)
            if sorted(((m + params.e) % q1, m)) == [rho.a, rho.b]}


# verification sweeps --------------------------------------------------------

CHECKS = ("i", "ii", "iii", "iv", "breuil")

CHECK_TITLES = {
    "i": "irreducible: nothing unresolved",
    "ii": "reducible, e >= p: nothing unresolved",
    "iii": "reducible, e <= p-1: unresolved = exceptional (<= 4)",
    "iv": "ordinary modular lift: unresolved within n = p-1 exclusions",
    "breuil": "Mbar_j axioms and reductions",
}


def rho_label(rho: ResidualInertial) -> str:
    if isinstance(rho, ReducibleSplit):
        return f"red:{rho.a},{rho.b}"
    return f"irr:{rho.c}"


def _weights(ws) -> list:
    return [w.as_list() for w in sorted(ws)]


def _check_instance(rho: ResidualInertial, params: FieldParams) -> list[tuple]:
    """(check, passed, detail) for one inertial class."""
    p, e = params.p, params.e
    out = []
    base = derive(rho, GlobalHypotheses(True, False), params)
    ordy = derive(rho, GlobalHypotheses(True, True), params)
    if isinstance(rho, Irreducible):
        ok = not base.unresolved and not ordy.unresolved
        out.append(("i", ok, {"unresolved": _weights(base.unresolved)}))
        return out
    if e >= p:
        out.append(("ii", not base.unresolved, {"unresolved": _weights(base.unresolved)}))
    else:
        exc = exceptional_weights(rho, params)
        ok = base.unresolved == exc and len(exc) <= 4
        out.append(("iii", ok, {"unresolved": _weights(base.unresolved), "exceptional": _weights(exc)}))
    allowed = ordinary_exclusions(rho, params)
    ok = ordy.unresolved.weights <= allowed
    out.append(("iv", ok, {"unresolved": _weights(ordy.unresolved), "allowed": _weights(allowed)}))
    return out


def check_mbar_j(j: int, params: FieldParams) -> list[str]:
    """Everything asserted about Mbar_j, returned as a list of failures."""
    p, q2 = params.p, params.q2
    Mb = build_mbar_j(j, params)
    problems = list(check_breuil_axioms(Mb.module))
    for alpha in (1, 2):
        if not hom_from_rank_one(Mb, alpha, params)[2]:
            problems.append(f"map with alpha = {alpha} is not compatible")
    if not kernel_genericity(mbar_hom_exponents(j, params), params):
        problems.append("kernel genericity fails")
    if not problems:
        got = sorted(c.exp for c in reduction_of_mj(j, params))
        want = sorted(((j + params.e) % q2, p * (j + params.e) % q2))
        if got != want:
            problems.append(f"reduction exponents {got}, expected {want}")
    return problems


def _breuil_instance(params: FieldParams) -> list[tuple]:
    failures = {}
    for j in range(params.e1 + 1):
        problems = check_mbar_j(j, params)
        if problems:
            failures[j] = problems
    detail = {"j_range": [0, params.e1]}
    if failures:
        j = min(failures)
        detail["counterexample"] = {"j": j, "problems": failures[j]}
    return [("breuil", not failures, detail)]


@dataclass(frozen=True)
class CheckRow:
    check: str
    p: int
    e: int
    rho: str
    passed: bool
    detail: dict

    def key(self):
        return (CHECKS.index(self.check), self.p, self.e)

    def to_json(self) -> dict:
        return {"check": self.check, "p": self.p, "e": self.e, "rho": self.rho,
                "passed": self.passed, "detail": self.detail}


@dataclass
class VerificationReport:
    rows: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    def summary(self) -> list[dict]:
        out = []
        for name in CHECKS:
            rows = [r for r in self.rows if r.check == name]
            if not rows:
                continue
            bad = [r for r in rows if not r.passed]
            entry = {"check": name, "title": CHECK_TITLES[name], "instances": len(rows),
                     "failed": len(bad), "passed": not bad}
            if bad:
                entry["counterexample"] = bad[0].to_json()
            out.append(entry)
        return out

    def first_failure(self) -> CheckRow | None:
        return next((r for r in self.rows if not r.passed), None)


def _task(task: tuple) -> list[CheckRow]:
    kind, p, e, rho = task
    params = FieldParams(p, e)
    if kind == "breuil":
        results = _breuil_instance(params)
        label = "-"
    else:
        results = _check_instance(rho, params)
        label = rho_label(rho)
    return [CheckRow(c, p, e, label, ok, detail) for c, ok, detail in results]


def sweep_tasks(params_range, breuil_range=()) -> list[tuple]:
    tasks = []
    for p, e in params_range:
        for rho in inertial_classes(FieldParams(p, e)):
            tasks.append(("weights", p, e, rho))
    for p, e in breuil_range:
        FieldParams(p, e)
        tasks.append(("breuil", p, e, None))
    return tasks


def verify_theorems(params_range, breuil_range=(), workers: int = 1) -> VerificationReport:
    """Run checks (i)-(iv) on every class up to twist, plus the Mbar_j suite.

    Rows come back in a canonical order whatever the number of workers.
    """
    tasks = sweep_tasks(params_range, breuil_range)
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_task, tasks, chunksize=4))
    else:
        chunks = [_task(t) for t in tasks]
    # stable sort: classes keep their enumeration order within (check, p, e)
    rows = sorted((r for chunk in chunks for r in chunk), key=CheckRow.key)
    return VerificationReport(rows)

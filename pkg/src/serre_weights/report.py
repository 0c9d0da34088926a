"""Report documents: {params, input, result, trace}, as JSON or a plain table."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .breuil import (
    RankOneBreuil,
    build_mbar_j,
    check_breuil_axioms,
    generic_fibre_rank_one,
    hom_from_rank_one,
    rank_one_module,
    reduction_of_mj,
)
from .characters import FieldParams, Niveau2Char, restrict_to_niveau1
from .engine import GlobalHypotheses, VerificationReport, derive, rho_label
from .gl2 import SerreWeight
from .lifts import lift_catalogue
from .predicted import (
    Irreducible,
    ReducibleSplit,
    ResidualInertial,
    det_of_inertial,
    normalize,
    w_question,
)


@dataclass
class Report:
    params: dict
    input: dict
    result: dict
    trace: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"params": self.params, "input": self.input, "result": self.result, "trace": self.trace}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> Report:
        d = json.loads(text)
        return cls(d["params"], d["input"], d["result"], d["trace"])

    def to_table(self) -> str:
        lines = []
        for section in ("params", "input", "result"):
            lines.append(f"[{section}]")
            for key, value in sorted(getattr(self, section).items()):
                if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
                    lines.append(f"  {key}:")
                    lines.extend(f"    - {_flat(v)}" for v in value)
                else:
                    lines.append(f"  {key}: {_flat(value)}")
        if self.trace:
            lines.append("[trace]")
            for k, entry in enumerate(self.trace, 1):
                lines.append(f"  {k}. {_flat(entry)}")
        return "\n".join(lines) + "\n"


def _flat(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def parse_inertia(text: str, params: FieldParams) -> ResidualInertial:
    """'red:a,b' or 'irr:c'."""
    kind, _, rest = text.partition(":")
    try:
        if kind == "red":
            a, b = (int(s) for s in rest.split(","))
            return normalize(ReducibleSplit(a, b), params)
        if kind == "irr":
            return normalize(Irreducible(int(rest)), params)
    except ValueError as exc:
        if "Frobenius-fixed" in str(exc):
            raise
        raise ValueError(f"cannot parse inertia {text!r}: expected red:a,b or irr:c") from None
    raise ValueError(f"cannot parse inertia {text!r}: expected red:a,b or irr:c")


def parse_weight(text: str, params: FieldParams) -> SerreWeight:
    try:
        m, n = (int(s) for s in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse weight {text!r}: expected m,n") from None
    if not 0 <= n <= params.p - 1:
        raise ValueError(f"n = {n} outside [0, {params.p - 1}]")
    return SerreWeight(m % params.q1, n)


def _params(params: FieldParams) -> dict:
    return {"p": params.p, "e": params.e}


def _char(c: Niveau2Char, params: FieldParams) -> dict:
    out = {"exp": c.exp}
    t = restrict_to_niveau1(c, params)
    if t is not None:
        out["niveau1_exp"] = t.exp
    return out


def predict_report(params: FieldParams, inertia: str) -> Report:
    rho = parse_inertia(inertia, params)
    ws = w_question(rho, params)
    return Report(
        _params(params),
        {"inertia": inertia, "normalized": rho_label(rho)},
        {"weights": ws.to_json(), "det": det_of_inertial(rho, params).exp},
    )


def lifts_report(params: FieldParams, inertia: str, weight: str) -> Report:
    rho = parse_inertia(inertia, params)
    w = parse_weight(weight, params)
    lifts = lift_catalogue(rho, w, params)
    return Report(
        _params(params),
        {"inertia": inertia, "normalized": rho_label(rho), "weight": w.as_list()},
        {"lifts": [d.to_json() for d in lifts],
         "non_ordinary": any(not d.ordinary for d in lifts)},
    )


def derive_report(params: FieldParams, inertia: str, ordinary_lift: bool) -> Report:
    rho = parse_inertia(inertia, params)
    res = derive(rho, GlobalHypotheses(True, ordinary_lift), params)
    return Report(
        _params(params),
        {"inertia": inertia, "normalized": rho_label(rho), "ordinary_lift": ordinary_lift},
        {"derived": [w.as_list() for w in res.derived],
         "unresolved": [w.as_list() for w in res.unresolved]},
        [t.to_json() for t in res.trace],
    )


def _module_json(M) -> dict:
    return {
        "rank": M.rank,
        "fil": [M.fmt(f) for f in M.fil],
        "phi1": [M.fmt(f) for f in M.phi1],
        "descent": [M.fmt(f) for f in M.descent],
        "coefficient_field": {"poly": list(M.F.poly), "zeta": M.F.zeta},
    }


def reduce_mj_report(params: FieldParams, j: int) -> Report:
    Mb = build_mbar_j(j, params)
    violations = check_breuil_axioms(Mb.module)
    trace = []
    for alpha in (2, 1):
        chi, image, ok = hom_from_rank_one(Mb, alpha, params)
        trace.append({"alpha": alpha, "image": Mb.module.fmt(image),
                      "character": None if chi is None else _char(chi, params), "compatible": ok})
    first, second = reduction_of_mj(j, params)
    # omega_s2^k = omega_s1^{pk}, so the second exponent in sigma_2 terms is p * exp
    second_s2 = params.p * second.exp % params.q2
    return Report(
        _params(params),
        {"command": "reduce-mj", "j": j},
        {"J": Mb.J, "n": Mb.n, "module": _module_json(Mb.module), "axioms": violations,
         "characters": [_char(first, params), _char(second, params)],
         "display": [f"omega_s1^{first.exp}", f"omega_s2^{second_s2}"]},
        trace,
    )


def rank_one_report(params: FieldParams, kappa: int, r: int) -> Report:
    chi = generic_fibre_rank_one(RankOneBreuil(kappa, r), params)
    M = rank_one_module(kappa, r, params)
    s = params.p * r // (params.p - 1)
    return Report(
        _params(params),
        {"command": "rank-one", "kappa": kappa, "r": r},
        {"module": _module_json(M), "axioms": check_breuil_axioms(M), "character": _char(chi, params)},
        [{"map": f"v -> u^{s} w", "s": s}],
    )


def verify_report(p_values, e_max: int, report: VerificationReport) -> Report:
    return Report(
        {"p": list(p_values), "e_max": e_max},
        {"command": "verify"},
        {"passed": report.passed, "checks": report.summary()},
        [r.to_json() for r in report.rows if not r.passed],
    )

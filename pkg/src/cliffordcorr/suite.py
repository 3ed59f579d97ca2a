"""Invariant and oracle suites over the bundled example corpus."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import certify, whole
from .clifford import (
    correspond,
    endalg_chain_check,
    f_algebra_check,
    induce,
    induce_through_stabilizer,
    build_presentation,
    is_normal_subring,
    is_stabilizer,
    rieffel_stabilizers,
    static_check_A,
    static_check_E,
    v_socle,
)
from .errors import CliffordError, HypothesesNotMet, InvalidInput, NotCertifiedSemisimple
from .module import Module, is_abs_simple, iso_test, regular_module, restrict
from .oracle import EXHAUSTIVE_LIMIT, ExampleInstance, example_library, oracle_is_simple, oracle_simple_count


@dataclass
class CheckResult:
    instance: str
    check: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"instance": self.instance, "check": self.check, "ok": self.ok, "detail": self.detail}


class _Recorder:
    def __init__(self, instance: str):
        self.instance = instance
        self.results: list[CheckResult] = []

    def add(self, check: str, ok: bool, detail: str = ""):
        self.results.append(CheckResult(self.instance, check, bool(ok), detail))

    def run(self, check: str, fn):
        """Record fn() as a check; exceptions count as failures."""
        try:
            out = fn()
        except CliffordError as exc:
            self.add(check, False, f"{type(exc).__name__}: {exc}")
            return None
        ok = out if isinstance(out, bool) else True
        self.add(check, ok)
        return out


def _stabilizer_checks(rec: _Recorder, inst: ExampleInstance, k: int, v: Module, seed: int):
    a, b = inst.A, inst.B
    pair = rec.run(f"V{k}: standard stabilizers", lambda: rieffel_stabilizers(a, b, v, seed))
    if pair is None:
        return None
    for label, rep in zip(("S_min", "S_max"), pair):
        rec.add(f"V{k}: {label} is a stabilizer", rep.is_stabilizer, str(rep.definition_check))
        rec.add(f"V{k}: {label} definition <=> criterion", rep.is_stabilizer == rep.criterion_holds)
    for label, s in (("B", b), ("S_min", pair[0].S), ("S_max", pair[1].S), ("A", whole(a))):
        if is_stabilizer(a, b, v, s, seed).is_stabilizer:
            rec.run(f"V{k}: endomorphism chain through {label}", lambda s=s: endalg_chain_check(a, b, v, s, seed))
    return pair


def verify_instance(inst: ExampleInstance, seed: int = 0) -> list[CheckResult]:
    rec = _Recorder(inst.name)
    a, b = inst.A, inst.B
    if inst.expected.get("certified") is False:
        try:
            certify(a, seed)
            rec.add("rejected as not certified semisimple", False, "certification unexpectedly succeeded")
        except NotCertifiedSemisimple as exc:
            rec.add("rejected as not certified semisimple", True, str(exc))
        return rec.results

    cert = rec.run("Wedderburn certificate", lambda: certify(a, seed))
    if cert is None:
        return rec.results
    rec.add("sum of d^2 equals dim A", sum(d * d for d in cert.dims) == a.dim)
    if "blocks_A" in inst.expected:
        rec.add("block dimensions", sorted(cert.dims) == sorted(inst.expected["blocks_A"]), str(sorted(cert.dims)))
    rec.add("oracle simple count equals block count", oracle_simple_count(a) == len(cert.dims))
    normal = rec.run("normality", lambda: is_normal_subring(a, b, cert) == inst.expected.get("normal", True))
    if not inst.expected.get("normal", True):
        return rec.results
    if not normal:
        return rec.results

    stable_flags = inst.expected.get("stable")
    for k, v in enumerate(inst.simples_of_B):
        report = rec.run(f"V{k}: correspondence", lambda v=v: correspond(a, b, v, seed, strict=False))
        if report is None:
            continue
        bad = report.failures()
        rec.add(f"V{k}: correspondence clauses", not bad, "; ".join(bad))
        if stable_flags is not None:
            rec.add(f"V{k}: stability", report.stable == stable_flags[k], f"stable={report.stable}")
        ind = report.induced
        if report.stable:
            rec.add(f"V{k}: dim M = dim V * dim E", ind.dim == v.dim * ind.E.base.dim)
            for w_idx, w in enumerate(cert.simples):
                isotypic = v_socle(v, restrict(w, b)).dim == w.dim
                rec.run(
                    f"V{k}: static A-module {w_idx} iff V-isotypic",
                    lambda w=w, iso=isotypic: static_check_A(ind, w) == iso,
                )
            e_cert = certify(ind.E.base, seed)
            for u_idx, u in enumerate(e_cert.simples + [regular_module(ind.E.base)]):
                rec.run(f"V{k}: static E-module {u_idx}", lambda u=u: static_check_E(ind, u))
        rec.run(f"V{k}: F algebra", lambda: f_algebra_check(ind, certify(b.algebra, seed), seed))
        pair = _stabilizer_checks(rec, inst, k, v, seed)
        if pair is not None:
            through = rec.run(
                f"V{k}: induction through S_min",
                lambda: induce_through_stabilizer(a, b, v, pair[0].S, seed),
            )
            if through is not None:
                ups = [up for _, up in through]
                same = len(ups) == len(report.pairs) and all(
                    sum(iso_test(up, x, seed)[0] for x in report.a_simples) == 1 for up in ups
                )
                rec.add(f"V{k}: stabilizer route agrees with the correspondence", same)
        for j, pr in enumerate(report.pairs):
            rec.run(f"V{k}: presentation of pair {j}", lambda n=pr.a_simple: build_presentation(ind, n, cert, seed))
    return rec.results


def verify_all(seed: int = 0) -> list[CheckResult]:
    out = []
    for inst in example_library():
        out.extend(verify_instance(inst, seed))
    return out


def _oracle_module(rec: _Recorder, label: str, m: Module, cert):
    if m.dim == 0 or m.p**m.dim > EXHAUSTIVE_LIMIT:
        return
    try:
        mine = is_abs_simple(m, cert)
    except HypothesesNotMet as exc:
        rec.add(f"{label}: simplicity agrees with oracle", False, str(exc))
        return
    rec.add(f"{label}: simplicity agrees with oracle", mine == oracle_is_simple(m), f"simple={mine}")


def oracle_instance(inst: ExampleInstance, seed: int = 0) -> list[CheckResult]:
    rec = _Recorder(inst.name)
    a, b = inst.A, inst.B
    try:
        cert = certify(a, seed)
    except NotCertifiedSemisimple:
        rec.add("uncertified algebra skipped", True)
        return rec.results
    rec.add("oracle simple count equals block count", oracle_simple_count(a) == len(cert.dims),
            f"{oracle_simple_count(a)} vs {len(cert.dims)}")
    cert_b = certify(b.algebra, seed)
    rec.add("B: oracle simple count equals block count", oracle_simple_count(b.algebra) == len(cert_b.dims))
    for i, w in enumerate(cert.simples):
        _oracle_module(rec, f"A-simple {i}", w, cert)
    _oracle_module(rec, "regular A-module", regular_module(a), cert)
    for k, v in enumerate(inst.simples_of_B):
        _oracle_module(rec, f"V{k}", v, cert_b)
        ind = induce(a, b, v)
        _oracle_module(rec, f"V{k} induced", ind.M, cert)
        try:
            e_cert = certify(ind.E.base, seed)
        except NotCertifiedSemisimple as exc:
            rec.add(f"V{k}: E certified", False, str(exc))
            continue
        rec.add(f"V{k}: E oracle simple count", oracle_simple_count(ind.E.base) == len(e_cert.dims))
        for j, u in enumerate(e_cert.simples):
            _oracle_module(rec, f"V{k}: E-simple {j}", u, e_cert)
    return rec.results


def oracle_all(seed: int = 0) -> list[CheckResult]:
    out = []
    for inst in example_library():
        out.extend(oracle_instance(inst, seed))
    return out


def oracle_for_algebra(a, seed: int = 0) -> list[CheckResult]:
    """Oracle checks for a single user-supplied algebra."""
    rec = _Recorder(a.name or "algebra")
    cert = certify(a, seed)
    rec.add("oracle simple count equals block count", oracle_simple_count(a) == len(cert.dims))
    for i, w in enumerate(cert.simples):
        try:
            _oracle_module(rec, f"A-simple {i}", w, cert)
        except InvalidInput as exc:
            rec.add(f"A-simple {i}: oracle", False, str(exc))
    return rec.results


def summarize(results: list[CheckResult]) -> dict:
    failed = [r for r in results if not r.ok]
    return {
        "checks": [r.to_json() for r in results],
        "passed": len(results) - len(failed),
        "failed": len(failed),
        "ok": not failed,
    }

"""Command-line interface: ``cliffordcorr <command> [flags]``.

Exit codes: 0 success (a mathematical "no" is still a success), 2 invalid
input, 3 hypotheses not met or unsupported input, 4 a theorem check failed.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .algebra import certify, validate_algebra, whole
from .clifford import (
    annihilator_and_p,
    build_presentation,
    correspond,
    endalg_chain_check,
    f_algebra_check,
    induce,
    is_invariant,
    is_normal_subring,
    is_stabilizer,
    is_stable,
    rieffel_stabilizers,
    v_socle,
)
from .errors import CliffordError, HypothesesNotMet, InvalidInput
from .module import hom_space, restrict
from . import suite

COMMANDS = (
    "validate", "simples", "induce", "stable", "endo", "socle", "normal",
    "stabilizer", "correspond", "presentation", "verify", "oracle",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(f"usage: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cliffordcorr", description="Exact Clifford correspondence over GF(p).")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--algebra", help="algebra file (or base algebra B for --action)")
    parser.add_argument("--subalgebra", help="subalgebra B of A, in A's coordinates")
    parser.add_argument("--module", help="module file (over B when --subalgebra is given)")
    parser.add_argument("--stabilizer", help="candidate stabilizer S, in A's coordinates")
    parser.add_argument("--group", help="group table or generator file; builds A from it")
    parser.add_argument("--cocycle", help="2-cocycle for a twisted group algebra")
    parser.add_argument("--action", help="action of the group on --algebra for a skew group algebra")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", choices=("json", "text"), default="text")
    parser.add_argument("--out", help="write the report here instead of standard output")
    return parser


# --- input assembly ------------------------------------------------------------------


class Inputs:
    def __init__(self, args):
        self.args = args
        self._a = None
        self._b = None

    @property
    def A(self):
        if self._a is None:
            args = self.args
            if args.group:
                base = io.load_algebra(args.algebra) if args.algebra else None
                self._a = io.build_group_algebra(
                    io.read_json(args.group),
                    io.read_json(args.cocycle) if args.cocycle else None,
                    io.read_json(args.action) if args.action else None,
                    base,
                )
                validate_algebra(self._a)
            elif args.algebra:
                if args.cocycle or args.action:
                    raise InvalidInput("--cocycle and --action need --group")
                self._a = io.load_algebra(args.algebra)
            else:
                raise InvalidInput("this command needs --algebra or --group")
        return self._a

    @property
    def loaded_B(self) -> io.LoadedSubalgebra:
        if self._b is None:
            if not self.args.subalgebra:
                raise InvalidInput("this command needs --subalgebra")
            self._b = io.load_subalgebra(self.A, self.args.subalgebra)
        return self._b

    @property
    def B(self):
        return self.loaded_B.sub

    @property
    def V(self):
        if not self.args.module:
            raise InvalidInput("this command needs --module")
        return self.loaded_B.module_from_dict(io.read_json(self.args.module))

    @property
    def S(self):
        if not self.args.stabilizer:
            return None
        return io.load_subalgebra(self.A, self.args.stabilizer).sub


# --- commands ------------------------------------------------------------------------


def cmd_validate(inp: Inputs) -> dict:
    a = inp.A
    out = {"algebra": {"p": a.p, "dim": a.dim, "valid": True}}
    if inp.args.subalgebra:
        out["subalgebra"] = {"dim": inp.B.dim, "valid": True}
    if inp.args.module:
        if inp.args.subalgebra:
            m = inp.V
        else:
            m = io.load_module(inp.args.module, a)
        out["module"] = {"dim": m.dim, "valid": True}
    return out


def cmd_simples(inp: Inputs) -> dict:
    cert = certify(inp.A, inp.args.seed)
    return {
        "dim": inp.A.dim,
        "blocks": [{"d": blk.d, "idempotent": [int(x) for x in blk.idempotent]} for blk in cert.blocks],
        "dims": cert.dims,
        "sum_of_squares": sum(d * d for d in cert.dims),
        "certified": True,
    }


def cmd_induce(inp: Inputs) -> dict:
    ind = induce(inp.A, inp.B, inp.V)
    return {"dimA": inp.A.dim, "dimB": inp.B.dim, "dimV": ind.V.dim, "dimM": ind.dim, "module": io.module_to_dict(ind.M)}


def cmd_stable(inp: Inputs) -> dict:
    a, b, v = inp.A, inp.B, inp.V
    ok, n = is_stable(a, b, v)
    j = annihilator_and_p(b, v, certify(b.algebra, inp.args.seed)).J_ambient
    return {"stable": ok, "multiplicity": n, "J_invariant": is_invariant(a, j)}


def cmd_endo(inp: Inputs) -> dict:
    ind = induce(inp.A, inp.B, inp.V)
    e = ind.E.base
    out = {"dimE": e.dim, "commutative": e.is_commutative(), "algebra": io.algebra_to_dict(e)}
    try:
        out["E_blocks"] = certify(e, inp.args.seed).dims
    except HypothesesNotMet as exc:
        out["E_blocks"] = None
        out["warnings"] = [str(exc)]
    return out


def cmd_socle(inp: Inputs) -> dict:
    v = inp.V
    ind = induce(inp.A, inp.B, v)
    soc = v_socle(v, ind.restricted)
    return {
        "dimM": ind.dim,
        "dim_socle": soc.dim,
        "multiplicity": hom_space(v, ind.restricted).dim,
        "socle_basis": soc.basis.tolist(),
    }


def cmd_normal(inp: Inputs) -> dict:
    return {"normal": is_normal_subring(inp.A, inp.B, certify(inp.A, inp.args.seed))}


def cmd_stabilizer(inp: Inputs) -> dict:
    a, b, v, seed = inp.A, inp.B, inp.V, inp.args.seed
    s_min, s_max = rieffel_stabilizers(a, b, v, seed)
    out = {"S_min": s_min.to_json(), "S_max": s_max.to_json()}
    s = inp.S
    if s is not None:
        out["S"] = is_stabilizer(a, b, v, s, seed).to_json()
    return out


def _chain_report(a, b, v, seed, s_min, s_max) -> dict:
    out = {}
    for label, s in (("B", b), ("S_min", s_min), ("S_max", s_max), ("A", whole(a))):
        if is_stabilizer(a, b, v, s, seed).is_stabilizer:
            out[label] = list(endalg_chain_check(a, b, v, s, seed))
        else:
            out[label] = "not a stabilizer"
    return out


def cmd_correspond(inp: Inputs) -> dict:
    a, b, v, seed = inp.A, inp.B, inp.V, inp.args.seed
    report = correspond(a, b, v, seed)
    out = report.to_json()
    s_min, s_max = rieffel_stabilizers(a, b, v, seed)
    out["endalg_chain"] = _chain_report(a, b, v, seed, s_min.S, s_max.S)
    f = f_algebra_check(report.induced, certify(b.algebra, seed), seed)
    out["f_algebra"] = {
        "F_blocks": f.f_dims,
        "multiplicities": f.multiplicities,
        "E_subalgebra_of_F": f.e_subalgebra_of_f,
        "every_F_module_projective": f.every_f_module_projective,
    }
    return out


def cmd_presentation(inp: Inputs) -> dict:
    a, b, v, seed = inp.A, inp.B, inp.V, inp.args.seed
    report = correspond(a, b, v, seed)
    cert = certify(a, seed)
    rows = []
    for pr in report.pairs:
        pres = build_presentation(report.induced, pr.a_simple, cert, seed)
        rows.append({"dimN": pr.a_simple.dim, "copies": pres.copies, "pi": pres.pi.tolist()})
    return {"dimM": report.induced.dim, "presentations": rows}


def _suite_report(results) -> dict:
    return suite.summarize(results)


def cmd_verify(inp: Inputs) -> dict:
    return _suite_report(suite.verify_all(inp.args.seed))


def cmd_oracle(inp: Inputs) -> dict:
    if inp.args.algebra or inp.args.group:
        return _suite_report(suite.oracle_for_algebra(inp.A, inp.args.seed))
    return _suite_report(suite.oracle_all(inp.args.seed))


HANDLERS = {name: globals()[f"cmd_{name}"] for name in COMMANDS}


# --- rendering -----------------------------------------------------------------------


def render_text(data, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        if "checks" in data and "ok" in data:
            for c in data["checks"]:
                mark = "PASS" if c["ok"] else "FAIL"
                extra = f"  ({c['detail']})" if c["detail"] and not c["ok"] else ""
                lines.append(f"{pad}{mark}  {c['instance']}: {c['check']}{extra}")
            lines.append(f"{pad}{data['passed']} passed, {data['failed']} failed")
            return "\n".join(lines)
        for key in sorted(data):
            val = data[key]
            if isinstance(val, (dict, list)) and val and not _flat_list(val):
                lines.append(f"{pad}{key}:")
                lines.append(render_text(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(val)}")
    elif isinstance(data, list):
        for i, item in enumerate(data):
            if isinstance(item, (dict, list)) and not _flat_list(item):
                lines.append(f"{pad}[{i}]")
                lines.append(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(data)}")
    return "\n".join(lines)


def _flat_list(val) -> bool:
    return isinstance(val, list) and all(not isinstance(x, (dict, list)) for x in val)


def _scalar(val) -> str:
    if isinstance(val, bool):
        return "yes" if val else "no"
    if isinstance(val, list):
        return "[" + ", ".join(_scalar(x) for x in val) + "]"
    if val is None:
        return "-"
    return str(val)


def _emit(data, args) -> None:
    text = io.dumps(data) if args.format == "json" else render_text(data) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    args = None
    try:
        args = build_parser().parse_args(argv)
        data = HANDLERS[args.command](Inputs(args))
        code = 0
        if args.command in ("verify", "oracle") and not data["ok"]:
            code = 4
        _emit(data, args)
        return code
    except CliffordError as exc:
        err = {"error": type(exc).__name__, "message": str(exc), "exit_code": exc.exit_code}
        if args is not None and args.format == "json":
            _emit(err, args)
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())

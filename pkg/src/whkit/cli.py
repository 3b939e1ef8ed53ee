"""Command line driver: ``whkit <command> INPUT``.

Inputs are JSON files whose top-level ``kind`` is one of ``groupoid``,
``algebra``, ``wmha`` or ``separability``.  Every command prints one or more
reports; the exit status is 0 exactly when every executed check passed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import duality as du
from . import exactlin as xl
from . import frobenius as fr
from . import integrals as itg
from .algebra import Algebra, AlgebraError, function_algebra, groupoid_algebra
from .groupoid import GroupoidError, groupoid_from_json
from .report import Report
from .wmha import WeakHopf, verify_axioms

DEFAULT_SEED = 0
KINDS = ("groupoid", "algebra", "wmha", "separability")


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    inputs: list
    command: str
    fmt: str = "text"
    seed: int = DEFAULT_SEED
    output: Optional[str] = None
    kind: Optional[str] = None
    construction: str = "K"
    side: str = "left"
    random_ideals: int = fr.DEFAULT_RANDOM_IDEALS
    select: list = field(default_factory=list)


@dataclass
class Loaded:
    path: str
    kind: str
    W: Optional[WeakHopf] = None
    alg: Optional[Algebra] = None
    sep: Optional[fr.SeparabilityIdempotent] = None


def load_input(path: str, kind: Optional[str] = None, construction: str = "K") -> Loaded:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: cannot read file: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise InputError(f"{path}: top level must be a JSON object")
    kind = kind or data.get("kind")
    if kind not in KINDS:
        raise InputError(f"{path}: field 'kind' must be one of {', '.join(KINDS)} (got {kind!r})")
    try:
        if kind == "groupoid":
            G = groupoid_from_json(data)
            if construction == "K":
                W = function_algebra(G)
            elif construction == "CG":
                W = groupoid_algebra(G)
            else:
                raise InputError(f"unknown construction {construction!r}")
            W.name = f"{'K' if construction == 'K' else 'C'}({os.path.basename(path)})"
            return Loaded(path, kind, W=W, alg=W.alg)
        if kind == "algebra":
            A = Algebra.from_json(data)
            return Loaded(path, kind, alg=A)
        if kind == "wmha":
            W = WeakHopf.from_json(data)
            return Loaded(path, kind, W=W, alg=W.alg)
        S = fr.SeparabilityIdempotent.from_json(data)
        try:
            W = fr.wmha_from_separability(S)
        except ValueError:
            W = None
        return Loaded(path, kind, W=W, alg=None if W is None else W.alg, sep=S)
    except (GroupoidError, AlgebraError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _need_wmha(inp: Loaded) -> WeakHopf:
    if inp.W is None:
        raise InputError(f"{inp.path}: a {inp.kind} input does not carry a weak Hopf structure")
    return inp.W


def _elements(vectors) -> list:
    return [xl.serialize_vector(v) for v in vectors]


# ---------------------------------------------------------------------------
# commands; each returns (payload dict, list of reports)
# ---------------------------------------------------------------------------

def cmd_build(inp: Loaded, cfg: RunConfig):
    if inp.sep is not None and inp.W is None:
        rep = fr.check_separability(inp.sep)
        return {"bundle": None}, [rep]
    if inp.W is not None:
        return {"bundle": inp.W.to_json()}, []
    return {"bundle": inp.alg.to_json()}, [inp.alg.verify()]


def cmd_verify(inp: Loaded, cfg: RunConfig):
    reps = []
    if inp.sep is not None:
        reps.append(fr.check_separability(inp.sep))
    if inp.W is not None:
        reps.append(verify_axioms(inp.W))
    elif inp.alg is not None:
        reps.append(inp.alg.verify())
    return {}, reps


def cmd_cointegrals(inp: Loaded, cfg: RunConfig):
    W = _need_wmha(inp)
    side = cfg.side
    space = itg.cointegral_space(W, side)
    payload = {"side": side, "dim": space.dim, "basis": _elements(space.basis)}
    reps = []
    rep = Report(f"{side} cointegrals", info={"dim": space.dim})
    if side == "left":
        for i, h in enumerate(space.basis):
            eq = itg.check_equivalences(W, h)
            rep.add(f"equivalences[{i}]", "six characterizations agree and hold",
                    eq.passed and all(eq.info[f"statement_{k}"] for k in range(1, 7)), witness=eq.info["values"])
            rep.add(f"ys_relation[{i}]", "yh = S(y)h for y∈A_s, A_s h = A_t h", itg.ys_relation(W, h))
            g = itg.gamma_matrix(W) @ h
            rep.add(f"gamma[{i}]", "γ(h) is a left cointegral", itg.is_left_cointegral(W, g))
    else:
        for i, k in enumerate(space.basis):
            rep.add(f"xk_relation[{i}]", "kx = kS(x) for x∈A_t", itg.xk_relation(W, k))
            rep.add(f"antipode_of_left[{i}]", "S⁻¹(k) is a left cointegral", itg.is_left_cointegral(W, W.S_inv @ k))
    reps.append(rep)
    if side == "left":
        reps.append(itg.discreteness_report(W))
        bi = itg.balanced_injectivity(W)
        r = Report("balanced tensor product", info=bi)
        r.add("well_defined", "ω(·S(y))⊗h and ω⊗hS(y) have the same image", bi["well_defined"])
        r.add("injective", "A′⊗_{A_s}H → A injective", bi["injective"], witness=bi)
        reps.append(r)
        right_leg = itg.legs_of_cointegrals(W)[1]
        if len(right_leg) == W.n:
            reps.append(itg.uniqueness_props(W))
    return payload, reps


def cmd_integrals(inp: Loaded, cfg: RunConfig):
    W = _need_wmha(inp)
    side = cfg.side
    space = itg.integral_space(W, side)
    lf, rf = itg.integral_set_faithfulness(W, space)
    payload = {"side": side, "dim": space.dim, "basis": _elements(space.basis),
               "left_faithful": lf, "right_faithful": rf}
    rep = Report(f"{side} integrals", info={"dim": space.dim, "left_faithful": lf, "right_faithful": rf})
    check = itg.is_left_integral if side == "left" else itg.is_right_integral
    bad = [i for i, f in enumerate(space.basis) if not check(W, f)]
    rep.add("basis_members_are_integrals", "each basis functional satisfies the defining condition", not bad,
            witness={"indices": bad})
    if side == "left" and itg.is_discrete(W):
        bad = [j for j in range(W.n) if not itg.integral_char_via_cointegrals(W, xl.unit_vector(W.n, j))]
        rep.add("criterion_via_cointegrals", "(id⊗φ)Δ(H) ⊆ A_t ⟺ φ left integral", not bad,
                witness={"dual_basis_elements": bad})
    reps = [rep]
    h = itg.find_faithful_cointegral(W)
    if h is not None:
        payload["faithful_cointegral"] = xl.serialize_vector(h)
        reps.append(itg.existence_report(W, h))
        maps = itg.single_h_maps(W, h)
        reps.append(maps.report)
        reps.append(itg.check_collection(W, h, maps))
    return payload, reps


def cmd_classify(inp: Loaded, cfg: RunConfig):
    W = _need_wmha(inp)
    cls = itg.classify(W)
    rep = Report("classification", info=dict(cls))
    return dict(cls), [rep]


def cmd_dual(inp: Loaded, cfg: RunConfig):
    W = _need_wmha(inp)
    try:
        P = du.dual_weak_hopf(W)
    except du.DualityError as exc:
        rep = Report("dual")
        rep.add("dual_exists", "axioms hold and ∫_L is faithful", False, witness=str(exc))
        return {"bundle": None}, [rep]
    reps = [du.pairing_report(P), du.double_dual_report(W), du.generating_report(P),
            du.transfer_report(W, P), du.compact_implies_dual_discrete(W, P)]
    h = itg.find_faithful_cointegral(W)
    if h is not None:
        reps.append(du.single_faithful_implies_dual_compact(W, h, P))
    payload = {"bundle": P.dual.to_json(), "dual_cointegral_dim": itg.cointegral_space(P.dual).dim}
    return payload, reps


def cmd_frobenius(inp: Loaded, cfg: RunConfig):
    reps = []
    payload = {"seed": cfg.seed}
    if inp.sep is not None:
        reps.append(fr.check_separability(inp.sep))
        if inp.W is not None:
            reps.append(verify_axioms(inp.W))
            reps.append(fr.separability_cointegral_report(inp.sep, inp.W))
    if inp.W is None:
        if inp.alg is not None:
            reps.append(fr.is_quasi_frobenius(inp.alg, cfg.seed, cfg.random_ideals))
        return payload, reps
    W = inp.W
    reps.append(fr.is_quasi_frobenius(W, cfg.seed, cfg.random_ideals))
    h = itg.find_faithful_cointegral(W)
    if h is not None:
        F, rep = fr.frobenius_map(W, h)
        ideals = [fr.principal_left_ideal(W, a) for a in fr.ideal_family(W, cfg.seed, cfg.random_ideals)]
        bad = [i for i, I in enumerate(ideals) if not fr.iperp_equals_rI(W, h, I)]
        rep.add("iperp_equals_rI", "F(I^⊥) = r(I) on the tested left ideals", not bad, witness={"indices": bad})
        reps.append(rep)
        reps.append(fr.proper_ideal_report(W, cfg.seed, cfg.random_ideals))
        _, conv = fr.frobenius_converse(W, cfg.seed)
        reps.append(conv)
        e = fr.idempotent_cointegral(W, h)
        if e is not None:
            try:
                reps.append(fr.check_separability(fr.delta_h_separability(W, e)))
            except ValueError as exc:
                payload["delta_h_separability"] = str(exc)
    k = fr.counit_kernel_cointegral(W)
    payload["counit_kernel_cointegral"] = None if k is None else xl.serialize_vector(k)
    return payload, reps


def cmd_check_all(inp: Loaded, cfg: RunConfig):
    payload, reps = {}, []
    _, r = cmd_verify(inp, cfg)
    reps.extend(r)
    if inp.W is None:
        # bare algebra: only the ideal-theoretic checks make sense
        if inp.alg is not None:
            p, r = cmd_frobenius(inp, cfg)
            payload["frobenius"] = p
            reps.extend(r)
        return payload, reps
    if not all(x.passed for x in r):
        return payload, reps
    for name, fn in (("cointegrals", cmd_cointegrals), ("integrals", cmd_integrals),
                     ("classify", cmd_classify), ("dual", cmd_dual), ("frobenius", cmd_frobenius)):
        p, r = fn(inp, cfg)
        p.pop("bundle", None)
        payload[name] = p
        reps.extend(r)
    return payload, reps


COMMANDS = {
    "build": cmd_build,
    "verify": cmd_verify,
    "cointegrals": cmd_cointegrals,
    "integrals": cmd_integrals,
    "classify": cmd_classify,
    "dual": cmd_dual,
    "frobenius": cmd_frobenius,
    "check-all": cmd_check_all,
}


# ---------------------------------------------------------------------------
# argument handling and output
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--output", metavar="PATH", default=argparse.SUPPRESS)
    common.add_argument("--kind", choices=KINDS, default=argparse.SUPPRESS,
                        help="override the input's 'kind' field")
    common.add_argument("--construction", choices=("K", "CG"), default=argparse.SUPPRESS,
                        help="for groupoid inputs: function algebra K(G) or groupoid algebra CG")
    common.add_argument("--select", action="append", metavar="SUBSTR", default=argparse.SUPPRESS,
                        help="only keep checks whose name contains SUBSTR (repeatable)")

    p = argparse.ArgumentParser(prog="whkit", description=__doc__.split("\n\n")[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("inputs", nargs="+", metavar="INPUT")
        if name in ("cointegrals", "integrals"):
            sp.add_argument("--side", choices=("left", "right"), default="left")
        if name in ("frobenius", "check-all"):
            sp.add_argument("--seed", type=int, default=None)
        if name == "frobenius":
            sp.add_argument("--random-ideals", type=int, default=fr.DEFAULT_RANDOM_IDEALS)
    return p


def config_from_args(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    seed = getattr(ns, "seed", None)
    if seed is None:
        env = os.environ.get("WHKIT_SEED")
        seed = int(env) if env else DEFAULT_SEED
    return RunConfig(
        inputs=ns.inputs,
        command=ns.command,
        fmt=getattr(ns, "format", "text"),
        seed=seed,
        output=getattr(ns, "output", None),
        kind=getattr(ns, "kind", None),
        construction=getattr(ns, "construction", "K"),
        side=getattr(ns, "side", "left"),
        random_ideals=getattr(ns, "random_ideals", fr.DEFAULT_RANDOM_IDEALS),
        select=getattr(ns, "select", []) or [],
    )


def _filter(reps: list, select: list) -> list:
    if not select:
        return reps
    out = []
    for r in reps:
        kept = [c for c in r.checks if any(s in c.name for s in select)]
        out.append(Report(r.title, kept, r.info))
    return out


def run(cfg: RunConfig):
    """Execute a configuration; returns (document, exit_code, first_failure_message)."""
    docs = []
    first = None
    for path in cfg.inputs:
        inp = load_input(path, cfg.kind, cfg.construction)
        payload, reps = COMMANDS[cfg.command](inp, cfg)
        reps = _filter(reps, cfg.select)
        ok = all(r.passed for r in reps)
        if first is None:
            for r in reps:
                c = r.first_failure()
                if c is not None:
                    first = f"{path}: {r.title}: {c.name}"
                    break
        docs.append({
            "input": path,
            "kind": inp.kind,
            "command": cfg.command,
            "pass": ok,
            "result": payload,
            "reports": [r.to_dict() for r in reps],
        })
    doc = docs[0] if len(docs) == 1 else {"runs": docs, "pass": all(d["pass"] for d in docs)}
    doc_pass = doc["pass"]
    doc["seed"] = cfg.seed
    return doc, (0 if doc_pass else 1), first


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2, ensure_ascii=False, default=str) + "\n"
    runs = doc["runs"] if "runs" in doc else [doc]
    lines = []
    for d in runs:
        lines.append(f"# {d['command']} {d['input']} ({d['kind']}): {'PASS' if d['pass'] else 'FAIL'}")
        res = d["result"]
        for k, v in res.items():
            if k == "bundle":
                continue
            lines.append(f"{k}: {json.dumps(v, ensure_ascii=False)}")
        for r in d["reports"]:
            lines.append(_report_text(r))
        if res.get("bundle") is not None:
            lines.append(json.dumps(res["bundle"], indent=2, ensure_ascii=False))
    return "\n".join(lines) + "\n"


def _report_text(r: dict) -> str:
    out = [f"== {r['title']} =="]
    for k, v in r["info"].items():
        out.append(f"  {k}: {json.dumps(v, ensure_ascii=False)}")
    for c in r["checks"]:
        out.append(f"  [{'PASS' if c['pass'] else 'FAIL'}] {c['name']}  ({c['ref']})")
        if not c["pass"] and c["witness"] is not None:
            out.append(f"         witness: {json.dumps(c['witness'], ensure_ascii=False)}")
    return "\n".join(out)


def main(argv=None) -> int:
    cfg = config_from_args(argv)
    try:
        doc, code, first = run(cfg)
    except InputError as exc:
        print(f"whkit: error: {exc}", file=sys.stderr)
        return 2
    text = render(doc, cfg.fmt)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if first is not None:
        print(f"whkit: first failing check: {first}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

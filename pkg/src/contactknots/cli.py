"""Command-line front end: every subcommand reads flags, prints one JSON document.

Exit status is 0 on success, 1 when a computation rejects its input
(domain or evaluation errors) and 2 for malformed requests.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from pathlib import Path
from typing import Any, Callable

import numpy as np

from . import __version__
from . import braid as braid_mod
from . import cabling, kirby, knotalg, lorenz, s3flow
from .errors import ContactKnotsError, DomainError, EvaluationError, ParameterError


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load_json(text: str | None, what: str, default=None):
    if text is None:
        if default is not None:
            return default
        raise UsageError(f"--{what} is required")
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--{what}: invalid JSON ({exc.msg})") from None


def _floats(text: str | None, what: str, count: int) -> list[float]:
    if text is None:
        raise UsageError(f"--{what} is required")
    try:
        vals = [float(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"--{what} must be {count} comma-separated numbers") from None
    if len(vals) != count:
        raise UsageError(f"--{what} must have {count} components, got {len(vals)}")
    return vals


def _braid(args) -> braid_mod.BraidWord:
    data = _load_json(args.word, "word")
    try:
        return braid_mod.BraidWord.from_json(data)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"--word must look like {{\"n\": 3, \"w\": [1, -2]}} ({exc})") from None


def _finite(x):
    """JSON-safe float."""
    x = float(x)
    return x if math.isfinite(x) else None


# -- flow ----------------------------------------------------------------------


def flow_check(args) -> dict:
    tol = 1e-12
    if args.point is not None:
        p = _floats(args.point, "point", 4)
        alpha, defect = s3flow.check_reeb_conditions(p)
        return {
            "alpha": alpha,
            "defect": defect,
            "omega_pairing": s3flow.omega_pairing(p),
            "tolerances": {"contract": tol, "on_sphere": s3flow.SPHERE_TOL},
        }
    count = int(_load_json(args.params, "params", {}).get("samples", 1000))
    pts = s3flow.random_unit_points(count, args.seed)
    alpha_err = defect = pair_err = 0.0
    for p in pts:
        a, d = s3flow.check_reeb_conditions(p)
        alpha_err = max(alpha_err, abs(a - 1))
        defect = max(defect, d)
        pair_err = max(pair_err, abs(s3flow.omega_pairing(p) - 1))
    return {
        "samples": count,
        "max_alpha_error": alpha_err,
        "max_defect": defect,
        "max_omega_pairing_error": pair_err,
        "passed": max(alpha_err, defect, pair_err) < tol,
        "tolerances": {"contract": tol},
    }


def flow_trace(args) -> dict:
    params = _load_json(args.params, "params", {})
    x0 = _floats(args.point or "1,0,0,0", "point", 4)
    traj = s3flow.integrate_flow(
        x0,
        field=params.get("field", "standard"),
        dt=args.dt,
        steps=args.steps,
        r1=params.get("r1"),
        r2=params.get("r2"),
    )
    out: dict[str, Any] = {
        "energy_drift": float(np.max(np.abs(traj.energy - traj.energy[0]))),
        "bott_drift": float(np.max(np.abs(traj.bott - traj.bott[0]))),
        "frequencies": list(s3flow.winding_ratio(traj)),
        "tolerances": {"sphere_projection": 1e-13},
    }
    if args.eps is not None:
        out["period"] = s3flow.detect_closed_orbit(traj, args.eps)
        out["tolerances"]["return_eps"] = args.eps
    stride = int(params.get("stride", max(1, args.steps // 1000)))
    out["stride"] = stride
    out["samples"] = traj.records()[::stride]
    return out


def flow_knot_type(args) -> dict:
    params = _load_json(args.params, "params")
    tol = float(params.get("tol", 1e-9))
    kt = s3flow.torus_knot_type(
        float(params["omega1"]), float(params["omega2"]), int(params.get("max_den", 100)), tol
    )
    out: dict[str, Any] = {"knot_type": None if kt is None else {"p": kt.p, "q": kt.q, "sign": kt.sign}}
    if kt is not None and kt.p > 1 and kt.q > 1:
        b = braid_mod.torus_braid(min(kt.p, kt.q), max(kt.p, kt.q))
        out["braid"] = b.to_json()
        out["alexander"] = braid_mod.alexander_from_braid(b).to_json()
    out["tolerances"] = {"ratio": tol}
    return out


# -- braid ---------------------------------------------------------------------


def braid_invariants(args) -> dict:
    inv = braid_mod.transverse_invariants(_braid(args))
    return {"e": inv.e, "n": inv.n, "beta": inv.beta, "writhe": inv.w, "components": inv.components}


def braid_alexander(args) -> dict:
    return {"alexander": braid_mod.alexander_from_braid(_braid(args)).to_json()}


def braid_reduce(args) -> dict:
    budget = int(_load_json(args.params, "params", {}).get("budget", 2000))
    res = braid_mod.exchange_reduce(_braid(args), budget)
    return {
        "word": res.word.to_json(),
        "moves": [{"move": name, "word": w.to_json()} for name, w in res.moves],
        "exhausted": res.exhausted,
    }


# -- cable ---------------------------------------------------------------------


def _descriptor(args) -> cabling.CableDescriptor:
    try:
        return cabling.CableDescriptor.from_json(_load_json(args.params, "params"))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ContactKnotsError):
            raise
        raise UsageError(f"--params must be a cable descriptor ({exc})") from None


def cable_validate(args) -> dict:
    problems = cabling.validate_descriptor(_descriptor(args))
    return {"valid": not problems, "violations": problems}


def cable_build(args) -> dict:
    d = _descriptor(args)
    b = cabling.iterated_cable(d)
    inv = braid_mod.transverse_invariants(b)
    return {
        "braid": b.to_json(),
        "alexander": braid_mod.alexander_from_braid(b).to_json(),
        "invariants": {"e": inv.e, "n": inv.n, "beta": inv.beta},
    }


# -- lorenz --------------------------------------------------------------------


def _lorenz_run(args):
    params = _load_json(args.params, "params", {})
    p = lorenz.LorenzParams(
        sigma=float(params.get("sigma", 10.0)), b=float(params.get("b", 8.0 / 3.0)), r=float(params.get("r", 24.0))
    )
    x0 = _floats(args.point or "1,1,1", "point", 3)
    return lorenz.integrate_lorenz(p, x0, args.dt, args.steps), params


def lorenz_simulate(args) -> dict:
    traj, params = _lorenz_run(args)
    stride = int(params.get("stride", max(1, args.steps // 1000)))
    keys = ("x", "y", "z")
    samples = [
        {"t": float(t), **{k: float(c) for k, c in zip(keys, pt)}}
        for t, pt in zip(traj.times[::stride], traj.points[::stride])
    ]
    return {
        "max_abs_z": float(np.max(np.abs(traj.points[:, 2]))),
        "absorbing_bound": lorenz.absorbing_bound(traj.params, traj.points[0]),
        "stride": stride,
        "samples": samples,
    }


def lorenz_encode(args) -> dict:
    traj, params = _lorenz_run(args)
    out: dict[str, Any] = {"word": lorenz.lobe_encoding(traj)}
    if args.eps is not None:
        cands = lorenz.close_return_candidates(traj, args.eps, int(params.get("max_period", 8)))
        out["candidates"] = [
            {"start": c.start, "period": c.period, "word": c.word.word, "distance": c.distance} for c in cands
        ]
        out["tolerances"] = {"return_eps": args.eps}
    return out


def lorenz_template(args) -> dict:
    if args.word is None:
        raise UsageError("--word is required (a string over L and R)")
    sw = lorenz.SymbolWord(args.word)
    inv = lorenz.lorenz_invariants(sw)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", lorenz.NonPrimitiveWordWarning)
        b = lorenz.template_braid(sw)
    return {
        "word": sw.word,
        "primitive": sw.is_primitive(),
        "braid": b.to_json(),
        "invariants": {
            "components": inv.components,
            "e": inv.e,
            "n": inv.n,
            "beta": inv.beta,
            "genus": inv.genus,
            "trip": inv.trip,
            "positive": inv.positive,
        },
        "alexander": inv.alexander,
    }


# -- markov / group / kirby ------------------------------------------------------


def markov_tree(args) -> dict:
    triples = sorted(knotalg.markov_tree(args.depth))
    return {"triples": [list(t) for t in triples], "numbers": sorted(knotalg.markov_numbers(triples))}


def markov_matrices(args) -> dict:
    x, y, z = (int(round(v)) for v in _floats(args.trace, "trace", 3))
    a, b = knotalg.traces_to_matrices(x, y, z)
    f1, f2 = knotalg.fricke_defects(a, b)
    return {
        "a": a.to_json(),
        "b": b.to_json(),
        "commutator_trace": str(knotalg.commutator(a, b).trace()),
        "fricke_defects": [str(f1), str(f2)],
    }


def markov_geodesic(args) -> dict:
    if args.trace is None:
        raise UsageError("--trace is required")
    text = args.trace
    if "," in text:
        u, v = (int(s) for s in text.split(","))
        ell = knotalg.geodesic_length(knotalg.Eisenstein(u, v))
        return {"length": {"re": ell.real, "im": ell.imag}, "tolerances": {"abs": 1e-10}}
    return {"length": knotalg.geodesic_length(float(text)), "tolerances": {"abs": 1e-10}}


def group_check(args) -> dict:
    params = _load_json(args.params, "params")
    if "preset" in params:
        reports = knotalg.check_preset(params["preset"], int(params.get("root", 1)))
    else:
        pres = knotalg.Presentation.parse(params["generators"], params["relations"])
        assignment = {g: knotalg.Matrix2.from_json(m) for g, m in params["assignment"].items()}
        reports = knotalg.presentation_check(pres, assignment, bool(params.get("projective", False)))
    return {
        "relators": [{"name": r.name, "passed": r.passed, "value": r.value.to_json()} for r in reports],
        "all_passed": all(r.passed for r in reports),
    }


_KIRBY_MOVES: dict[str, Callable] = {
    "blow_up": kirby.blow_up,
    "blow_down": kirby.blow_down,
    "slide": kirby.handle_slide,
    "slide_back": lambda link, i, j: kirby.handle_slide(link, i, j, subtract=True),
}


def kirby_apply(args) -> dict:
    params = _load_json(args.params, "params")
    link = kirby.FramedLink.from_json(params["link"])
    steps = []
    for move in params.get("moves", []):
        name, *rest = move
        if name not in _KIRBY_MOVES:
            raise UsageError(f"unknown Kirby move {name!r}; choose from {sorted(_KIRBY_MOVES)}")
        link = _KIRBY_MOVES[name](link, *rest)
        steps.append({"move": move, "link": link.to_json(), "det": kirby.determinant(link)})
    return {
        "link": link.to_json(),
        "det": kirby.determinant(link),
        "signature": kirby.signature(link),
        "steps": steps,
    }


COMMANDS: dict[str, dict[str, Callable]] = {
    "flow": {"trace": flow_trace, "check": flow_check, "knot-type": flow_knot_type},
    "braid": {"invariants": braid_invariants, "alexander": braid_alexander, "reduce": braid_reduce},
    "cable": {"build": cable_build, "validate": cable_validate},
    "lorenz": {"simulate": lorenz_simulate, "encode": lorenz_encode, "template": lorenz_template},
    "markov": {"tree": markov_tree, "matrices": markov_matrices, "geodesic": markov_geodesic},
    "group": {"check": group_check},
    "kirby": {"apply": kirby_apply},
}

_MODULE_OF = {"flow": "s3flow", "braid": "braid", "cable": "cabling", "lorenz": "lorenz",
              "markov": "knotalg", "group": "knotalg", "kirby": "kirby"}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="contactknots", description="Contact geometry, braids and knot invariants.")
    parser.add_argument("--version", action="version", version=__version__)
    groups = parser.add_subparsers(dest="group", required=True)
    for group, actions in COMMANDS.items():
        gp = groups.add_parser(group)
        sub = gp.add_subparsers(dest="action", required=True)
        for action in actions:
            ap = sub.add_parser(action)
            ap.add_argument("--word", help="braid JSON {\"n\":..,\"w\":[..]}, or an L/R word")
            ap.add_argument("--point", help="comma-separated coordinates")
            ap.add_argument("--params", help="JSON object (or @file)")
            ap.add_argument("--steps", type=int, default=10000)
            ap.add_argument("--dt", type=float, default=1e-3)
            ap.add_argument("--eps", type=float)
            ap.add_argument("--depth", type=int, default=2)
            ap.add_argument("--seed", type=int, default=0)
            ap.add_argument("--trace", help="trace value(s), comma-separated")
            ap.add_argument("--out", help="write the JSON document here instead of stdout")
            ap.add_argument("--format", choices=["json"], default="json")
    return parser


def _echo(args) -> dict:
    keys = ("word", "point", "params", "steps", "dt", "eps", "depth", "seed", "trace")
    return {k: getattr(args, k) for k in keys if getattr(args, k) is not None}


def _emit(doc: dict, out: str | None, stream) -> None:
    text = json.dumps(doc, sort_keys=True, separators=(",", ":"), default=_finite)
    if out:
        Path(out).write_text(text + "\n")
    else:
        stream.write(text + "\n")


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        _emit({"error": {"code": "usage", "message": str(exc)}, "version": __version__}, None, stderr)
        return 2
    handler = COMMANDS[args.group][args.action]
    try:
        result = handler(args)
    except (DomainError, EvaluationError, ArithmeticError) as exc:
        code = getattr(exc, "code", "evaluation")
        err = {"code": code, "module": _MODULE_OF[args.group], "message": str(exc)}
        _emit({"error": err, "version": __version__}, None, stderr)
        return 1
    except (UsageError, ParameterError, KeyError, TypeError, ValueError, OSError) as exc:
        code = getattr(exc, "code", "usage")
        _emit({"error": {"code": code, "message": str(exc)}, "version": __version__}, None, stderr)
        return 2
    result["inputs_echo"] = {"command": [args.group, args.action], **_echo(args)}
    result["version"] = __version__
    _emit(result, args.out, stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())

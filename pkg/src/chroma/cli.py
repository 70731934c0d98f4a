"""Batch command-line front end.

One experiment per invocation: `chroma <command> --config file.json` reads a
schema-validated JSON config, runs the named pipeline, and emits a JSON
report (stdout by default, `--out` to write a file).  Reports are
deterministic for a fixed (config, seed) apart from the `timing` block.

Exit codes: 0 on success, 2 when a requested certificate or claim fails
(a finding, with the evidence in the report), 1 on configuration or
execution errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from fractions import Fraction

import numpy as np
from jsonschema import Draft202012Validator

from . import cayley as cayley_mod
from . import constructions as cons
from . import graphio, kneser
from .bohr import SpectrumParams, bohr_color
from .equations import Equation, classify
from .exact import Surd
from .groups import ElementSet, make_group, parse_group_literal
from .primes import next_prime

_INT = {"type": "integer"}
_STR = {"type": "string"}
_NUM = {"type": "number"}

_SCHEMAS: dict[str, dict] = {
    "classify": {
        "type": "object",
        "properties": {"equation": _STR},
        "required": ["equation"],
        "additionalProperties": False,
    },
    "kneser": {
        "type": "object",
        "properties": {
            "n": _INT,
            "k": _INT,
            "m": _INT,
            "action": {"enum": ["count", "chi-bound", "chi"]},
            "budget": _STR,
        },
        "required": ["n", "k", "m", "action"],
        "additionalProperties": False,
    },
    "cayley": {
        "type": "object",
        "properties": {
            "group": _STR,
            "connection": {
                "type": "array",
                "items": {
                    "anyOf": [_INT, {"type": "array", "items": _INT}],
                },
            },
            "action": {"enum": ["chi", "alpha", "greedy", "export"]},
            "budget": _STR,
            "dimacs": _STR,
            "cnf": _STR,
            "cnf_colors": _INT,
        },
        "required": ["group", "connection", "action"],
        "additionalProperties": False,
    },
    "construct": {
        "type": "object",
        "properties": {
            "equation": _STR,
            "q": _INT,
            "primes": {"type": "array", "items": _INT, "minItems": 1},
            "p": {"anyOf": [_INT, {"const": "auto"}]},
            "core_threshold": {"anyOf": [_STR, {"type": "null"}]},
            "extension_threshold": {"anyOf": [_STR, {"type": "null"}]},
        },
        "required": ["equation", "q", "primes", "p"],
        "additionalProperties": False,
    },
    "bohr-color": {
        "type": "object",
        "properties": {
            "p": _INT,
            "equation": _STR,
            "set": {
                "type": "object",
                "properties": {
                    "rle": _STR,
                    "indices": {"type": "array", "items": _INT},
                    "random_density": _NUM,
                },
                "additionalProperties": False,
                "minProperties": 1,
                "maxProperties": 1,
            },
            "nu": _NUM,
            "rho": _NUM,
            "s_index": {"anyOf": [_INT, {"type": "null"}]},
            "seed": _INT,
            "colors_out": _STR,
        },
        "required": ["p", "equation", "set"],
        "additionalProperties": False,
    },
    "indep-set": {
        "type": "object",
        "properties": {
            "p": _INT,
            "n": _INT,
            "radius_sq": {"anyOf": [_INT, {"type": "null"}]},
            "cap": _INT,
            "samples": _INT,
            "seed": _INT,
            "csv": _STR,
        },
        "required": ["p", "n"],
        "additionalProperties": False,
    },
    "certify-lift": {
        "type": "object",
        "properties": {
            "golden": {"type": "boolean"},
            "equation": _STR,
            "q": _INT,
            "primes": {"type": "array", "items": _INT, "minItems": 1},
            "p": {"anyOf": [_INT, {"const": "auto"}]},
            "core_threshold": {"anyOf": [_STR, {"type": "null"}]},
            "extension_threshold": {"anyOf": [_STR, {"type": "null"}]},
        },
        "additionalProperties": False,
    },
}


class CliError(Exception):
    """Configuration or execution problem with a user-facing message."""


def _parse_budget(text: str | None) -> float | None:
    if text is None:
        return None
    m = re.fullmatch(r"([0-9]+(?:\.[0-9]*)?)(s|m|h)", text.strip())
    if not m:
        raise CliError(f"bad budget {text!r}; use forms like '30s', '2m', '1h'")
    mult = {"s": 1.0, "m": 60.0, "h": 3600.0}[m.group(2)]
    return float(m.group(1)) * mult


def _load_config(path: str, command: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CliError(f"config {path} is not valid JSON: {exc}") from exc
    validator = Draft202012Validator(_SCHEMAS[command])
    errors = sorted(validator.iter_errors(cfg), key=lambda e: list(e.path))
    if errors:
        lines = "; ".join(
            f"{'/'.join(str(p) for p in e.path) or '<root>'}: {e.message}"
            for e in errors
        )
        raise CliError(f"config {path} failed validation: {lines}")
    return cfg


def _cache_path(path: str) -> str:
    """Relative artifact paths land in CHROMA_CACHE_DIR when it is set."""
    cache = os.environ.get("CHROMA_CACHE_DIR")
    if cache and not os.path.isabs(path):
        os.makedirs(cache, exist_ok=True)
        return os.path.join(cache, path)
    return path


def _threshold(text: str | None, fallback: Surd | None) -> Surd | None:
    if text is None:
        return fallback
    try:
        return Surd.rational(Fraction(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"bad threshold {text!r}: expected a fraction "
                       f"like '13/7'") from exc


# ---------------------------------------------------------------------------
# Command handlers: each returns (results dict, exit code)
# ---------------------------------------------------------------------------


def _run_classify(cfg: dict) -> tuple[dict, int]:
    eq = Equation.parse(cfg["equation"])
    res = classify(eq)
    return {"equation": str(eq), "k": eq.k, **res.to_report()}, 0


def _run_kneser(cfg: dict) -> tuple[dict, int]:
    params = kneser.KneserParams(cfg["n"], cfg["k"], cfg["m"])
    out: dict = {
        "n": params.n, "k": params.k, "m": params.m,
        "classical": params.classical,
        "vertices": kneser.count_vertices(params),
    }
    action = cfg["action"]
    if action in ("chi-bound", "chi"):
        bound = kneser.chi_lower_bound(params)
        out["chi_bound"] = str(bound)
        out["chi_bound_ceil"] = -(-bound.numerator // bound.denominator)
    if action == "chi":
        _, graph = kneser.build_graph(params)
        res = cayley_mod.chromatic_number_exact(
            graph, budget_s=_parse_budget(cfg.get("budget")))
        out["chi_lower"] = res.lower
        out["chi_upper"] = res.upper
        out["chi_exact"] = res.exact
        if res.exact:
            out["chi"] = res.chromatic_number
    return out, 0


def _connection_indices(group, conn) -> list[int]:
    idx = []
    for entry in conn:
        if isinstance(entry, list):
            idx.append(group.index(group.element(entry)))
        else:
            idx.append(int(entry) % group.order)
    return idx


def _run_cayley(cfg: dict) -> tuple[dict, int]:
    group = parse_group_literal(cfg["group"])
    conn = ElementSet.from_indices(group, _connection_indices(group, cfg["connection"]))
    view = cayley_mod.CayleyView(group, conn)
    graph = view.to_graph()
    out: dict = {
        "group": group.literal,
        "order": group.order,
        "connection_size": view.connection.count,
        "edges": graph.edge_count(),
    }
    action = cfg["action"]
    budget = _parse_budget(cfg.get("budget"))
    if action == "greedy":
        gb = cayley_mod.greedy_bounds(graph)
        out["clique_lower"] = gb.clique_lower
        out["greedy_colors"] = gb.dsatur_upper
        out["clique"] = list(gb.clique)
    elif action == "chi":
        res = cayley_mod.chromatic_number_exact(graph, budget_s=budget)
        out["chi_lower"] = res.lower
        out["chi_upper"] = res.upper
        out["chi_exact"] = res.exact
        out["search_nodes"] = res.nodes
        if res.exact:
            out["chi"] = res.chromatic_number
    elif action == "alpha":
        res = cayley_mod.independence_number_exact(graph, budget_s=budget)
        out["alpha_lower"] = res.lower
        out["alpha_upper"] = res.upper
        out["alpha_exact"] = res.exact
        if res.exact:
            out["alpha"] = res.lower
    elif action == "export":
        if "dimacs" not in cfg and "cnf" not in cfg:
            raise CliError("export action needs 'dimacs' and/or 'cnf' paths")
    if "dimacs" in cfg:
        path = _cache_path(cfg["dimacs"])
        graphio.write_dimacs(graph, path)
        out["dimacs"] = path
    if "cnf" in cfg:
        colors = cfg.get("cnf_colors")
        if colors is None:
            raise CliError("'cnf' export needs 'cnf_colors'")
        path = _cache_path(cfg["cnf"])
        graphio.write_coloring_cnf(graph, colors, path)
        out["cnf"] = path
        out["cnf_colors"] = colors
    return out, 0


def _construction_params(cfg: dict) -> cons.ConstructionParams:
    eq = cons.normalize_equation(Equation.parse(cfg["equation"])).eq
    q = cfg["q"]
    primes = tuple(cfg["primes"])
    p = cfg["p"]
    if p == "auto":
        d = eq.abs_coeff_sum
        m = 1
        for pi in primes:
            m *= pi
        # Smallest prime with the mixed nonzero-sum margin in force.
        p = next_prime(d * d * (d + 1) * m)
    return cons.ConstructionParams(eq=eq, q=q, primes=primes, p=int(p))


def _run_construct(cfg: dict) -> tuple[dict, int]:
    params = _construction_params(cfg)
    core_t = _threshold(cfg.get("core_threshold"),
                        cons.default_core_threshold(params))
    ext_t = _threshold(cfg.get("extension_threshold"),
                       cons.default_extension_threshold(params))
    e0 = cons.build_core_set(params, core_t)
    f0 = cons.build_extension_set(params, ext_t)
    out = {
        "equation": str(params.eq),
        "q": params.q,
        "primes": list(params.primes),
        "m": params.m,
        "p": params.p,
        "core_threshold": str(core_t),
        "extension_threshold": str(ext_t),
        "core_size": e0.count,
        "core_density": e0.count / params.m,
        "extension_size": f0.count,
        "extension_density": f0.count / params.m,
        "scale_conditions": cons.scale_conditions(params, core_t, ext_t),
    }
    return out, 0


def _run_certify(cfg: dict) -> tuple[dict, int]:
    if cfg.get("golden"):
        pinned = cons.golden_config()
    else:
        for key in ("equation", "q", "primes", "p"):
            if key not in cfg:
                raise CliError(
                    f"certify-lift needs either golden=true or the field {key!r}")
        params = _construction_params(cfg)
        pinned = cons.PinnedConfig(
            params,
            _threshold(cfg.get("core_threshold"),
                       cons.default_core_threshold(params)),
            _threshold(cfg.get("extension_threshold"),
                       cons.default_extension_threshold(params)),
        )
    e0, f0, lift = pinned.build()
    bundle = cons.certify_lift(
        pinned.params, e0, f0, lift,
        pinned.core_threshold, pinned.extension_threshold)
    out = {
        "equation": str(pinned.params.eq),
        "q": pinned.params.q,
        "primes": list(pinned.params.primes),
        "m": pinned.params.m,
        "p": pinned.params.p,
        "core_threshold": str(pinned.core_threshold),
        "extension_threshold": str(pinned.extension_threshold),
        "interval": list(lift.interval),
        **bundle.to_report(),
    }
    return out, 0 if bundle.all_passed else 2


def _bohr_input_set(cfg: dict, p: int):
    spec = cfg["set"]
    group = make_group([p])
    if "rle" in spec:
        eset = ElementSet.load(spec["rle"])
        if eset.group.order != p:
            raise CliError(
                f"set file is over {eset.group.literal}, expected Z({p})")
        return eset
    if "indices" in spec:
        return ElementSet.from_indices(group, [i % p for i in spec["indices"]])
    density = spec["random_density"]
    if not 0 < density <= 1:
        raise CliError("random_density must lie in (0, 1]")
    rng = np.random.default_rng(cfg.get("seed", 0))
    size = max(1, int(round(density * p)))
    picks = rng.choice(p, size=size, replace=False)
    return ElementSet.from_indices(group, picks)


def _run_bohr(cfg: dict) -> tuple[dict, int]:
    p = cfg["p"]
    eq = Equation.parse(cfg["equation"])
    a_set = _bohr_input_set(cfg, p)
    params = SpectrumParams(
        nu=cfg.get("nu", 0.1),
        rho=cfg.get("rho", 0.05),
        s_index=cfg.get("s_index"),
    )
    colors, report = bohr_color(a_set, eq, params)
    out = {"set_size": a_set.count, **report.to_report()}
    if "colors_out" in cfg:
        path = _cache_path(cfg["colors_out"])
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("vertex,color\n")
            for v, c in enumerate(colors.tolist()):
                fh.write(f"{v},{c}\n")
        out["colors_out"] = path
    return out, 0 if report.proper else 2


def _run_indep(cfg: dict) -> tuple[dict, int]:
    p, n = cfg["p"], cfg["n"]
    radius_sq = cfg.get("radius_sq")
    radius = None if radius_sq is None else Surd.sqrt(1, radius_sq)
    kwargs = {}
    if "cap" in cfg:
        kwargs["cap"] = cfg["cap"]
    if p == 2:
        res = kneser.classical_binary_independent_set(n, radius, **kwargs)
    else:
        if "samples" in cfg:
            kwargs["mc_samples"] = cfg["samples"]
        res = kneser.independent_set(p, n, radius, seed=cfg.get("seed", 0),
                                     **kwargs)
    out = {
        "p": res.p,
        "n": res.n,
        "radius": str(res.radius),
        "threshold": str(res.threshold),
        "degenerate": res.degenerate,
        "exact": res.exact,
        "count": res.count,
        "density": res.density,
    }
    if not res.exact:
        out["ci_low"] = res.ci_low
        out["ci_high"] = res.ci_high
        out["samples"] = res.samples
        out["seed"] = res.seed
    if "csv" in cfg and res.member_indices is not None:
        path = _cache_path(cfg["csv"])
        coords = res.members_coords()
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(",".join(f"x{i}" for i in range(n)) + "\n")
            for row in coords.tolist():
                fh.write(",".join(str(v) for v in row) + "\n")
        out["csv"] = path
    return out, 0


_HANDLERS = {
    "classify": _run_classify,
    "kneser": _run_kneser,
    "cayley": _run_cayley,
    "construct": _run_construct,
    "bohr-color": _run_bohr,
    "indep-set": _run_indep,
    "certify-lift": _run_certify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chroma",
        description="Solution-free sets, Cayley/Kneser graphs, and their "
                    "chromatic certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _HANDLERS:
        cmd = sub.add_parser(name, help=f"run the {name} pipeline")
        cmd.add_argument("--config", required=True,
                         help="JSON config file (schema-checked)")
        cmd.add_argument("--out", default=None,
                         help="write the JSON report here instead of stdout")
    return parser


def run(command: str, cfg: dict) -> tuple[dict, int]:
    """Execute one pipeline; returns (full report, exit code)."""
    t0 = time.perf_counter()
    results, code = _HANDLERS[command](cfg)
    elapsed = time.perf_counter() - t0
    report = {
        "command": command,
        "config": cfg,
        "results": results,
        "timing": {"total_s": round(elapsed, 6)},
    }
    return report, code


def _jsonify(obj):
    """Let numpy scalars pass through json.dumps."""
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    raise TypeError(f"not JSON serializable: {type(obj).__name__}")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _load_config(args.config, args.command)
        report, code = run(args.command, cfg)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = json.dumps(report, indent=2, sort_keys=True, default=_jsonify)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

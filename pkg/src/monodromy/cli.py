"""Command-line front end: `monodromy <command> [options]`.

Exit codes: 0 success, 2 usage or parse error, 3 cap exceeded, 4 internal
consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from importlib import resources

import jsonschema

from . import __version__
from .braidrep import Level, eval_braid, lantern_check, phi_map, psi_map, to_braid
from .cyclo import numeric_interval, to_json
from .fusion import BlockSpec, block_dimension, verlinde_dimension
from .modular import build_modular, modular_image_finite, modular_relations_check, unitarity_defect
from .orderlab import (CapExceeded, ConsistencyError, OrderVerdict, classify_group, gl_order,
                       m_generators, masbaum_scan, projective_order, sigma_matrix)
from .words import Word, WordSyntaxError

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_CONSISTENCY = 0, 2, 3, 4
EXPECTED_FINITE = (1, 2, 4, 8)
SCHEMA_NAME = "report.schema.json"


class UsageError(Exception):
    pass


def load_schema() -> dict:
    return json.loads(resources.files("monodromy").joinpath(SCHEMA_NAME).read_text())


# -- tagging -------------------------------------------------------------

def exact(x) -> dict:
    return {"tag": "exact", "value": to_json(x)}


def exact_matrix(M) -> dict:
    return {"tag": "exact", "value": [[to_json(x) for x in row] for row in M.rows]}


def interval(x, bits: int) -> dict:
    return numeric_interval(x, bits).to_json()


def verdict_label(v: OrderVerdict) -> str:
    if v.is_finite:
        return f"FiniteOrder({v.order})"
    return "Infinite" if v.is_infinite else f"Undecided(cap={v.cap})"


def verdict_json(v: OrderVerdict) -> dict:
    return {"label": verdict_label(v)} | v.to_json()


def envelope(command: str, levels, parameters: dict, results) -> dict:
    return {
        "schema": "monodromy-report/1",
        "command": command,
        "levels": list(levels),
        "parameters": parameters,
        "results": results,
        "tool_version": __version__,
        "modes": {"exact": True, "numeric": "interval"},
    }


# -- commands ------------------------------------------------------------

def _matrix_report(level: int, M, power_cap: int, bits: int) -> dict:
    proj = projective_order(M, power_cap, bits)
    gl = gl_order(M, power_cap, bits)
    tr, det = M.trace(), M.det()
    return {
        "matrix": exact_matrix(M),
        "trace": exact(tr),
        "det": exact(det),
        "trace_interval": interval(tr, bits),
        "projective_order": verdict_json(proj),
        "gl_order": verdict_json(gl),
    }


def cmd_rep(level: int, word: str, alphabet: str, power_cap: int = 10000, bits: int = 64) -> dict:
    lv = Level(level)
    w = Word.parse(word, alphabet)
    braid = to_braid(w)
    results = {"word": str(w), "alphabet": w.alphabet, "braid_word": str(braid)}
    results |= _matrix_report(lv.l, eval_braid(lv, braid), power_cap, bits)
    params = {"word": word, "alphabet": alphabet, "power_cap": power_cap, "precision_bits": bits}
    return envelope("rep", [lv.l], params, results)


def _group_row(level: int, sigma: OrderVerdict, closure_cap: int) -> dict:
    if sigma.is_infinite:
        # an element of infinite order already makes the image infinite
        return {"tag": "Infinite", "name": "Infinite", "reason": "sigma has infinite projective order"}
    return classify_group(m_generators(level), closure_cap).to_json()


def cmd_scan(l_min: int, l_max: int, closure_cap: int = 20000, power_cap: int = 10000, bits: int = 64,
             timing: bool = True) -> dict:
    if not 1 <= l_min <= l_max:
        raise UsageError(f"need 1 <= l_min <= l_max, got {l_min}..{l_max}")
    rows = []
    for l in range(l_min, l_max + 1):
        start = time.perf_counter()
        mas = masbaum_scan(l, bits)
        sigma = projective_order(sigma_matrix(l), power_cap, bits)
        group = _group_row(l, sigma, closure_cap)
        row = {"level": l, "masbaum": mas, "sigma_order": verdict_json(sigma), "group": group,
               "finite": sigma.is_finite and group["tag"] not in ("Infinite", "InfiniteOrCapExceeded")}
        if timing:
            row["runtime_ms"] = round(1000 * (time.perf_counter() - start))
        rows.append(row)
    finite = [r["level"] for r in rows if r["finite"]]
    expected = [l for l in EXPECTED_FINITE if l_min <= l <= l_max]
    results = {"rows": rows, "finite_levels": finite, "matches_expected": finite == expected}
    params = {"closure_cap": closure_cap, "power_cap": power_cap, "precision_bits": bits}
    return envelope("scan", list(range(l_min, l_max + 1)), params, results)


def cmd_fivepoint(level: int, word: str, power_cap: int = 10000, bits: int = 64) -> dict:
    lv = Level(level)
    w = Word.parse(word, "xi")
    sigma_word = phi_map(w)
    braid = psi_map(sigma_word)
    results = {"word": str(w), "sigma_word": str(sigma_word), "braid_word": str(braid)}
    results |= _matrix_report(lv.l, eval_braid(lv, braid), power_cap, bits)
    params = {"word": word, "power_cap": power_cap, "precision_bits": bits}
    return envelope("fivepoint", [lv.l], params, results)


def cmd_fusion(level: int, genus: int, weights) -> dict:
    spec = BlockSpec(genus, tuple(weights), Level(level))
    a, b = block_dimension(spec), verlinde_dimension(spec)
    if a != b:
        raise ConsistencyError(f"path count {a} disagrees with Verlinde sum {b}")
    results = {"dimension": a, "method": "both", "agreement": True, "path_count": a, "verlinde": b}
    if level == 1 and genus == 0 and list(weights) == [1, 1, 1, 1]:
        results["note"] = "level 1: four-point rank is 1, not 2"
    params = {"genus": genus, "weights": [int(x) for x in weights]}
    return envelope("fusion", [level], params, results)


def cmd_modular(level: int, closure_cap: int = 20000, bits: int = 128) -> dict:
    rep = build_modular(level)
    rel = modular_relations_check(rep)
    img = modular_image_finite(rep, closure_cap)
    bound = unitarity_defect(rep, bits)
    results = {
        "rank": rep.rank,
        "relations_ok": rel["relations_ok"],
        "relations": {k: v for k, v in rel.items() if k != "level"},
        "image_order": img.order if img.order is not None else "cap_exceeded",
        "certificate_ok": img.certificate_ok,
        "elements_checked": img.checked,
        "unitarity_defect": {"tag": "interval", "re": ["0", str(bound)], "im": ["0", "0"], "precision": bits},
    }
    params = {"closure_cap": closure_cap, "precision_bits": bits}
    return envelope("modular", [level], params, results)


def cmd_lantern(level: int, word: str | None = None) -> dict:
    w = Word.parse(word, "dehn") if word else None
    rep = lantern_check(level, w)
    results = {
        "sigma_word": rep["sigma_word"],
        "braid_word": rep["braid_word"],
        "is_identity": rep["is_identity"],
        "residual": exact_matrix(rep["residual"]),
    }
    params = {"word": word or "T12 T13 T23"}
    return envelope("lantern", [level], params, results)


# -- output --------------------------------------------------------------

def validate(report: dict) -> None:
    jsonschema.validate(report, load_schema())


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _scalars(d: dict, prefix: str = "") -> dict:
    out = {}
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            if v.get("tag") in ("exact", "interval"):
                continue  # matrices and field elements are JSON-only
            out |= _scalars(v, key + ".")
        elif not isinstance(v, list):
            out[key] = v
    return out


def render_csv(report: dict) -> str:
    res = report["results"]
    rows = [_scalars(r) for r in res["rows"]] if report["command"] == "scan" else [_scalars(res)]
    fields = []
    for r in rows:
        fields += [k for k in r if k not in fields]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def render_pretty(report: dict) -> str:
    lines = [f"{report['command']}  levels {report['levels']}"]
    res = report["results"]
    if report["command"] == "scan":
        lines.append(f"{'l':>3}  {'masbaum':<10} {'sigma':<16} group")
        for r in res["rows"]:
            lines.append(f"{r['level']:>3}  {r['masbaum']['kind']:<10} {r['sigma_order']['label']:<16} "
                         f"{r['group']['name']}")
        lines.append(f"finite levels: {res['finite_levels']}")
    else:
        for k, v in _scalars(res).items():
            lines.append(f"  {k}: {v}")
    return "\n".join(lines) + "\n"


RENDERERS = {"json": render_json, "csv": render_csv, "pretty": render_pretty}


# -- argument handling ---------------------------------------------------

def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


def parse_levels(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            return int(a), int(b)
        return int(text), int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"levels must look like a..b, got {text!r}") from None


def parse_weights(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()] if text else []
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be comma-separated integers, got {text!r}") from None


def positive_level(text: str) -> int:
    try:
        l = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"level must be an integer, got {text!r}") from None
    if l < 1:
        raise argparse.ArgumentTypeError(f"level must be >= 1, got {l}")
    return l


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=sorted(RENDERERS), default="json")
    common.add_argument("--closure-cap", type=int, default=_env_int("MONODROMY_CLOSURE_CAP", 20000))
    common.add_argument("--power-cap", type=int, default=_env_int("MONODROMY_POWER_CAP", 10000))
    common.add_argument("--precision-bits", type=int, default=None,
                        help="interval precision (default $MONODROMY_PRECISION_BITS, else 64; 128 for modular)")

    p = argparse.ArgumentParser(prog="monodromy", description="Exact quantum monodromy of B_3 at level l.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("rep", parents=[common], help="matrix and order verdicts of a word")
    r.add_argument("--level", type=positive_level, required=True)
    r.add_argument("--word", default="")
    r.add_argument("--alphabet", choices=["braid", "sigma", "xi", "dehn"], default="sigma")

    s = sub.add_parser("scan", parents=[common], help="finite/infinite table over a range of levels")
    s.add_argument("--levels", type=parse_levels)
    s.add_argument("--level", type=positive_level)
    s.add_argument("--no-timing", action="store_true", help="omit runtimes (bit-identical output)")

    f = sub.add_parser("fivepoint", parents=[common], help="five-point loop words")
    f.add_argument("--level", type=positive_level, required=True)
    f.add_argument("--word", default="x3 x1")

    fu = sub.add_parser("fusion", parents=[common], help="conformal block dimension")
    fu.add_argument("--level", type=positive_level, required=True)
    fu.add_argument("--genus", type=int, default=0)
    fu.add_argument("--weights", type=parse_weights, default=[])

    mo = sub.add_parser("modular", parents=[common], help="S, T relations and finiteness certificate")
    mo.add_argument("--level", type=positive_level, required=True)

    la = sub.add_parser("lantern", parents=[common], help="lantern relation check")
    la.add_argument("--level", type=positive_level, required=True)
    la.add_argument("--word", default=None, help="Dehn-twist word (default T12 T13 T23)")
    return p


def _bits(args, default: int) -> int:
    if args.precision_bits is not None:
        return args.precision_bits
    return _env_int("MONODROMY_PRECISION_BITS", default)


def run(args) -> dict:
    c = args.command
    if c == "rep":
        return cmd_rep(args.level, args.word, args.alphabet, args.power_cap, _bits(args, 64))
    if c == "scan":
        if args.levels is None and args.level is None:
            raise UsageError("scan needs --levels a..b or --level l")
        lo, hi = args.levels if args.levels else (args.level, args.level)
        return cmd_scan(lo, hi, args.closure_cap, args.power_cap, _bits(args, 64), timing=not args.no_timing)
    if c == "fivepoint":
        return cmd_fivepoint(args.level, args.word, args.power_cap, _bits(args, 64))
    if c == "fusion":
        return cmd_fusion(args.level, args.genus, args.weights)
    if c == "modular":
        return cmd_modular(args.level, args.closure_cap, _bits(args, 128))
    if c == "lantern":
        return cmd_lantern(args.level, args.word)
    raise UsageError(f"unknown command {c}")


def _cap_hit(report: dict) -> bool:
    res = report["results"]
    if report["command"] == "modular":
        return res["image_order"] == "cap_exceeded"
    if report["command"] in ("rep", "fivepoint"):
        return "Undecided" in res["gl_order"]["label"] or "Undecided" in res["projective_order"]["label"]
    if report["command"] == "scan":
        return any(r["group"]["tag"] == "InfiniteOrCapExceeded" for r in res["rows"])
    return False


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on usage errors
    try:
        report = run(args)
    except (WordSyntaxError, UsageError, ValueError) as exc:
        print(f"monodromy: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"monodromy: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ConsistencyError as exc:
        print(f"monodromy: consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    validate(report)
    sys.stdout.write(RENDERERS[args.format](report))
    if _cap_hit(report):
        return EXIT_CAP
    if report["command"] == "scan" and not report["results"]["matches_expected"]:
        return EXIT_CONSISTENCY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

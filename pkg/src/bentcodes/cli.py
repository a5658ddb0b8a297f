"""Command-line front end: ``bentcodes <command> ...``.

Exit codes: 0 when every check passes, 1 on a claim mismatch, 2 on a usage
or parameter error.  Reports are deterministic (sorted keys, ascending
weights) so identical invocations produce byte-identical output.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

import click

from . import charsums as cs
from .catalog import FamilySpec, build, preset
from .codes import build_code, dual_distance_upto, is_self_orthogonal, parse_subset, weight_distribution
from .derived import (
    classify,
    hamming_max_d,
    lcd_params,
    load_best_known,
    quantum_classify,
    quantum_hamming_max_d,
    steane_from_code,
)
from .errors import BentCodesError
from .galois import set_poly_table_path
from .predict import selectors_for, weights_thm
from .reproduce import artifact_names, reproduce
from .spectral import codomain_degree, verify_condition

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    """Options shared by every subcommand."""

    fmt: str = "text"
    out: Path | None = None
    jobs: int = 1
    long: bool = False
    poly_table: Path | None = None
    best_known: Path | None = None
    status: int = EXIT_OK


def _flatten(obj: Any, prefix: str = "") -> list[str]:
    if isinstance(obj, dict):
        lines: list[str] = []
        for k in sorted(obj, key=str):
            lines += _flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
        return lines
    if isinstance(obj, list) and obj and all(isinstance(x, dict) for x in obj):
        lines = []
        for i, x in enumerate(obj):
            lines += _flatten(x, f"{prefix}[{i}]")
        return lines
    return [f"{prefix}: {json.dumps(obj) if not isinstance(obj, str) else obj}"]


def emit_report(result: dict[str, Any], fmt: str = "json") -> str:
    """Serialize a report; keys sorted, so reruns are byte-identical."""
    if fmt == "json":
        return json.dumps(result, sort_keys=True, indent=2) + "\n"
    if fmt == "text":
        return "\n".join(_flatten(result)) + "\n"
    raise click.UsageError(f"--format must be json or text, got {fmt!r}")


def _write(cfg: RunConfig, result: dict[str, Any]) -> None:
    text = emit_report(result, cfg.fmt)
    if cfg.out is None:
        click.echo(text, nl=False)
    else:
        cfg.out.write_text(text)


def _fail(cfg: RunConfig) -> None:
    cfg.status = EXIT_MISMATCH


def _spec(preset_name: str | None, spec_json: str | None) -> FamilySpec:
    if (preset_name is None) == (spec_json is None):
        raise click.UsageError("give exactly one of --preset or --spec-json")
    if preset_name is not None:
        return preset(preset_name)
    text = Path(spec_json).read_text() if Path(spec_json).is_file() else spec_json
    return FamilySpec.from_json(text)


def _instance_options(f):
    f = click.option("--spec-json", default=None, help="FamilySpec as JSON text or a path to a JSON file.")(f)
    f = click.option("--preset", "preset_name", default=None, help="Named preset, e.g. example4 or table2-row1.")(f)
    return f


def _set_option(f):
    return click.option(
        "--set", "subset", required=True,
        help="Subset I: zero, single:w^3, squares, nonsquares, coset:b=4[,gamma=w], explicit:1,2 or first:k.",
    )(f)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text", show_default=True)
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Write the report here.")
@click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True, help="Worker threads for enumeration.")
@click.option("--long", "long_", is_flag=True, help="Allow runs gated as long (the example3 enumeration).")
@click.option("--poly-table", type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None)
@click.option("--best-known", type=click.Path(exists=True, dir_okay=False, path_type=Path), default=None,
              help="CSV q,n,k,d_best used to upgrade bound verdicts.")
@click.pass_context
def cli(ctx: click.Context, fmt: str, out: Path | None, jobs: int, long_: bool,
        poly_table: Path | None, best_known: Path | None) -> None:
    """Codes from vectorial dual-bent functions."""
    if poly_table is not None:
        set_poly_table_path(poly_table)
    cfg = ctx.ensure_object(RunConfig)
    cfg.fmt, cfg.out, cfg.jobs, cfg.long = fmt, out, jobs, long_
    cfg.poly_table, cfg.best_known = poly_table, best_known


@cli.command()
@_instance_options
@_set_option
@click.option("--dual-cap", type=click.IntRange(2, 4), default=3, show_default=True)
@click.pass_obj
def construct(cfg: RunConfig, preset_name, spec_json, subset, dual_cap) -> None:
    """Build F and C_{D_{F,I}} and report its parameters."""
    spec = _spec(preset_name, spec_json)
    F, ex = build(spec)
    code = build_code(F, parse_subset(subset), spec.t)
    d_perp, exact = dual_distance_upto(code, dual_cap)
    _write(cfg, {
        "spec": spec.to_dict(),
        "expected": ex.to_dict(),
        "code": {"n": code.length, "k": code.dimension, "q": code.q, "self_orthogonal": is_self_orthogonal(code)},
        "dual": {"n": code.length, "k": code.length - code.dimension, "d": d_perp, "d_exact": exact},
    })


@cli.command()
@_instance_options
@_set_option
@click.option("--mode", type=click.Choice(["enumerate", "predict", "both"]), default="both", show_default=True)
@click.pass_obj
def weights(cfg: RunConfig, preset_name, spec_json, subset, mode) -> None:
    """Enumerate and/or predict the weight distribution and diff them."""
    spec = _spec(preset_name, spec_json)
    F, ex = build(spec)
    I = parse_subset(subset)
    out: dict[str, Any] = {"spec": spec.to_dict(), "subset": I.to_dict()}
    enum = None
    if mode in ("enumerate", "both"):
        enum = weight_distribution(F, I, spec.t, workers=cfg.jobs)
        out["enumerated"] = enum.to_dict()
    if mode in ("predict", "both"):
        size = int(I.resolve(F.codomain).size)
        sels = selectors_for(
            ex.condition, spec.p, spec.t, codomain_degree(F.codomain), F.domain.n, ex.unit, ex.l, I,
            f0=int(F.values[0]), I_size=size,
        )
        preds = {s.id: weights_thm(s) for s in sels}
        out["predicted"] = {k: v.to_dict() for k, v in preds.items()}
        if not preds:
            out["note"] = "no theorem covers this subset"
            if mode == "predict":
                _fail(cfg)
        if enum is not None:
            out["diff"] = {k: sorted(set(v.pairs) ^ set(enum.pairs)) for k, v in preds.items()}
            if any(out["diff"].values()):
                _fail(cfg)
    _write(cfg, out)


@cli.command()
@_instance_options
@click.option("--condition", type=click.Choice(["I", "II", "III"]), default=None, help="Override the family's condition.")
@click.pass_obj
def verify(cfg: RunConfig, preset_name, spec_json, condition) -> None:
    """Check Condition I, II or III exhaustively."""
    spec = _spec(preset_name, spec_json)
    F, ex = build(spec)
    which = condition or ex.condition
    rep = verify_condition(F, which, spec.t)
    matches = rep.holds and (condition is not None or rep.eps_or_theta == ex.unit)
    if ex.condition in ("II", "III") and condition is None:
        matches = matches and (ex.l, ex.d) in rep.exponent_pairs
    if not matches:
        _fail(cfg)
    _write(cfg, {
        "spec": spec.to_dict(),
        "expected": ex.to_dict(),
        "condition": which,
        "holds": rep.holds,
        "unit": None if rep.eps_or_theta is None else str(rep.eps_or_theta),
        "exponent_pairs": [list(x) for x in rep.exponent_pairs],
        "failed_clause": rep.failed_clause,
        "matches_expected": matches,
    })


_IDENTITIES = {"prop7": "P7", "prop8": "P8", "prop9": "P9", "prop10": "P10", "lemma8": "L8", "lemma9": "L9"}


def _elem(text: str | None) -> Any:
    if text is None:
        return None
    text = text.strip()
    if text.lstrip("-").isdigit():
        return int(text)
    if text.startswith("["):
        return json.loads(text)
    return text


@cli.command()
@click.argument("identity", type=click.Choice(sorted(_IDENTITIES)))
@click.option("--p", type=int, default=None)
@click.option("--m", type=int, default=None)
@click.option("--q", type=int, default=None, help="Field size; alternative to --p/--m.")
@click.option("--a", default=None)
@click.option("--b", type=int, default=None)
@click.option("--i", "i_", type=int, default=None)
@click.option("--j", type=int, default=None)
@click.option("--jp", type=int, default=None)
@click.option("--beta", default=None)
@click.option("--gamma", default=None)
@click.option("--fstar", default=None)
@click.option("--coeffs", default=None, help="a2,a1,a0 for prop8.")
@click.option("--mode", type=click.Choice(["closed", "oracle", "both"]), default="both", show_default=True)
@click.pass_obj
def charsum(cfg: RunConfig, identity, p, m, q, a, b, i_, j, jp, beta, gamma, fstar, coeffs, mode) -> None:
    """Evaluate a character-sum identity, closed form against brute force."""
    if q is not None:
        if p is not None or m is not None:
            raise click.UsageError("--q excludes --p and --m")
        p, m = cs._split_prime_power(q)
    if p is None:
        raise click.UsageError("give --q or --p (with optional --m)")
    m = 1 if m is None else m
    query = cs.SumQuery(
        _IDENTITIES[identity], p, m, t=m if identity == "lemma9" else None, b=b, j=j, jp=jp, i=i_,
        a=_elem(a), beta=_elem(beta), gamma=_elem(gamma), fstar=_elem(fstar),
        coeffs=tuple(_elem(x) for x in coeffs.split(",")) if coeffs else (),
    )
    out: dict[str, Any] = {"query": query.to_dict()}
    vals = {}
    if mode in ("closed", "both"):
        vals["closed_form"] = cs.value_to_json(cs.evaluate(query))
    if mode in ("oracle", "both"):
        vals["brute_force"] = cs.value_to_json(cs.evaluate(cs.SumQuery(**{**query.__dict__, "mode": "brute_force"})))
    out.update(vals)
    if mode == "both":
        out["equal"] = vals["closed_form"] == vals["brute_force"]
        if not out["equal"]:
            _fail(cfg)
    _write(cfg, out)


def _best(cfg: RunConfig):
    return load_best_known(cfg.best_known) if cfg.best_known else None


@cli.command()
@_instance_options
@_set_option
@click.pass_obj
def lcd(cfg: RunConfig, preset_name, spec_json, subset) -> None:
    """LCD code [I | G] from a self-orthogonal C_{D_{F,I}}, with its dual."""
    spec = _spec(preset_name, spec_json)
    F, _ = build(spec)
    I = parse_subset(subset)
    code = build_code(F, I, spec.t)
    wd = weight_distribution(F, I, spec.t, workers=cfg.jobs)
    lcd_p, dual_p = lcd_params(code, wd)
    best = _best(cfg)
    report = {"lcd": lcd_p.to_dict(), "dual": dual_p.to_dict()}
    if best is not None:
        for key, cp in (("lcd", lcd_p), ("dual", dual_p)):
            if cp.d_exact:
                report[key]["bound_verdict"] = classify(cp.n, cp.k, cp.d, cp.q, best)
    _write(cfg, report)


@cli.command()
@_instance_options
@_set_option
@click.pass_obj
def quantum(cfg: RunConfig, preset_name, spec_json, subset) -> None:
    """Quantum code from C_{D_{F,I}}^perp inside the dual of the repetition code."""
    spec = _spec(preset_name, spec_json)
    F, _ = build(spec)
    qp = steane_from_code(build_code(F, parse_subset(subset), spec.t))
    _write(cfg, {"quantum": qp.to_dict(), "label": str(qp)})


@cli.command()
@click.argument("n", type=click.IntRange(min=1))
@click.argument("k", type=click.IntRange(min=1))
@click.argument("d", type=click.IntRange(min=1))
@click.argument("q", type=click.IntRange(min=2))
@click.option("--quantum", "is_quantum", is_flag=True, help="Use the quantum sphere-packing bound.")
@click.pass_obj
def bounds(cfg: RunConfig, n, k, d, q, is_quantum) -> None:
    """Sphere-packing verdict for given parameters."""
    if k > n:
        raise click.UsageError("K must not exceed N")
    if is_quantum:
        dmax, verdict = quantum_hamming_max_d(n, k, q), quantum_classify(n, k, d, q)
    else:
        dmax, verdict = hamming_max_d(n, k, q), classify(n, k, d, q, _best(cfg))
    _write(cfg, {"n": n, "k": k, "d": d, "q": q, "quantum": is_quantum, "d_max": dmax, "verdict": verdict})


@cli.command("reproduce")
@click.argument("artifact")
@click.pass_obj
def reproduce_cmd(cfg: RunConfig, artifact) -> None:
    """Run a named artifact (exampleN, tableN, sweep, ..., acceptanceN) and report each claim."""
    if artifact not in artifact_names():
        raise click.UsageError(f"unknown artifact {artifact!r}; choose from {', '.join(artifact_names())}")
    res = reproduce(artifact, long=cfg.long, workers=cfg.jobs)
    if not res.ok:
        _fail(cfg)
    if cfg.fmt == "text" and cfg.out is None:
        for c in res.claims:
            click.echo(f"{'PASS' if c.ok else 'FAIL'}  {c.name}" + (f"  [{c.detail}]" if not c.ok and c.detail else ""))
        for s in res.skipped:
            click.echo(f"SKIP  {s}")
        click.echo(f"{artifact}: {'PASS' if res.ok else 'FAIL'} ({sum(c.ok for c in res.claims)}/{len(res.claims)})")
    else:
        _write(cfg, res.to_dict())


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv`` and run one command; returns the process exit code."""
    cfg = RunConfig()
    try:
        rv = cli.main(args=list(argv) if argv is not None else None, standalone_mode=False, obj=cfg)
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click.exceptions.Abort:
        return EXIT_USAGE
    except BentCodesError as e:
        click.echo(f"error: {type(e).__name__}: {e}", err=True)
        return EXIT_USAGE
    except OSError as e:
        click.echo(f"error: {e}", err=True)
        return EXIT_USAGE
    if isinstance(rv, int):  # --help and similar early exits
        return rv
    return cfg.status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

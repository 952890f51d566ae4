"""``jetample`` command line.

Exit codes: 0 for a green or certified result, 2 when an obstruction or a red
finding was computed, 1 when the computation could not be carried out.
"""

from __future__ import annotations

import shlex
import sys
import time
from pathlib import Path

import click

from . import bundled, campedelli, cluster
from .cluster import DepthExceeded, InfiniteColength, IrrationalCenter
from .formats import ModelError, ParseError, SignatureError, format_surface, parse_class, parse_surface
from .jets import (
    BOUNDARY,
    CERTIFIED,
    COR42_ASSUMPTIONS,
    COR43_ASSUMPTIONS,
    INCONCLUSIVE,
    OBSTRUCTIONS,
    prop41_check,
    seshadri,
    threshold_cor42,
    threshold_cor43,
)
from .jets.certify import certify_jets
from .lattice import CURVE_LIST_CAVEAT, LatticeError, is_big, is_nef, is_pseudoeffective, self_intersection
from .lattice import validate_model, zariski_decompose
from .report import render_json, render_text, run_report
from .scalars import ExpressionError, RootValue, parse_rational

VERDICT_EXIT = {CERTIFIED: 0, INCONCLUSIVE: 0, OBSTRUCTIONS: 2, BOUNDARY: 2}

emit_option = click.option("--emit", type=click.Choice(["text", "json"]), default="text", show_default=True)
timing_option = click.option("--timing", is_flag=True, help="Add wall time to the report (breaks byte-identity).")


class Failure(click.ClickException):
    exit_code = 1

    def show(self, file=None):
        click.echo(f"error: {self.format_message()}", err=True)


def _echo_command(ctx: click.Context) -> str:
    parts = [ctx.command_path]
    for param in ctx.command.params:
        name, value = param.name, ctx.params.get(param.name)
        if name in ("emit", "timing") or value is None or value is False or value == ():
            continue
        if isinstance(param, click.Argument):
            parts.append(shlex.quote(str(value)))
            continue
        flag = max(param.opts, key=len)
        if value is True:
            parts.append(flag)
        elif isinstance(value, tuple):
            parts.extend(f"{flag} {shlex.quote(str(v))}" for v in value)
        else:
            parts.append(f"{flag} {shlex.quote(str(value))}")
    return " ".join(parts)


def _emit(ctx, result: dict, emit: str, timing: bool, start: float, digest=None, caveats=(), seed=None) -> None:
    report = run_report(
        _echo_command(ctx), result, digest, caveats, seed, time.perf_counter() - start if timing else None
    )
    click.echo(render_json(report) if emit == "json" else render_text(report))


def _guard(fn):
    """Map library errors onto exit code 1 with a one-line message."""

    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (ParseError, SignatureError, ModelError, LatticeError, ExpressionError) as exc:
            raise Failure(str(exc)) from exc
        except (DepthExceeded, IrrationalCenter, FileNotFoundError, KeyError, ValueError) as exc:
            raise Failure(str(exc).strip("'\"")) from exc

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@click.group()
@click.version_option(package_name="artifact")
def cli():
    """Exact certificates for jets of adjoint divisors on surfaces."""


# ---------------------------------------------------------------------------
# lattice commands


def _class_report(m, d) -> dict:
    return {"class": d, "square": self_intersection(m, d)}


@cli.command()
@click.option("--model", required=True, help="Surface file or bundled name.")
@click.option("--d", "d", required=True, help="Class: coordinates '1,1' or labels '3E+G'.")
@emit_option
@timing_option
@click.pass_context
@_guard
def zariski(ctx, model, d, emit, timing):
    """Zariski decomposition D = P + N relative to the declared curves."""
    start = time.perf_counter()
    loaded = bundled.load_surface(model)
    m = loaded.model
    cls = parse_class(m, d)
    pair = zariski_decompose(m, cls)
    result = {
        "input": _class_report(m, cls),
        "positive": _class_report(m, pair.positive),
        "negative": [
            {"curve": m.curves[i].label or f"curve{i}", "coefficient": c} for i, c in pair.negative
        ],
        "big": self_intersection(m, pair.positive) > 0,
    }
    _emit(ctx, result, emit, timing, start, loaded.digest, [CURVE_LIST_CAVEAT])


@cli.command()
@click.option("--model", required=True)
@click.option("--d", "d", required=True)
@click.option("--fast", is_flag=True, help="Try the D^2 >= 0, D.L > 0 sufficient test first.")
@emit_option
@timing_option
@click.pass_context
@_guard
def pseff(ctx, model, d, fast, emit, timing):
    """Pseudoeffectivity by exact cone membership, with the witness combination."""
    start = time.perf_counter()
    loaded = bundled.load_surface(model)
    m = loaded.model
    cls = parse_class(m, d)
    res = is_pseudoeffective(m, cls, allow_fast_path=fast)
    witness = res.witness
    if isinstance(witness, tuple):
        witness = [
            {"curve": c.label or f"curve{i}", "coefficient": w} for i, (c, w) in enumerate(zip(m.curves, witness)) if w
        ]
    result = {
        "class": cls,
        "pseudoeffective": res.pseudoeffective,
        "witness": witness,
        "nef": is_nef(m, cls),
        "big": is_big(m, cls) if res.pseudoeffective else False,
    }
    _emit(ctx, result, emit, timing, start, loaded.digest, [CURVE_LIST_CAVEAT])


# ---------------------------------------------------------------------------
# Seshadri and certification


def _seshadri_dict(eps) -> dict:
    out = {"value": eps.value, "witness": eps.witness}
    if eps.witness_class is not None:
        out["witness_class"] = eps.witness_class
    return out


@cli.command("seshadri")
@click.option("--blowup", required=True, help="Blow-up file or bundled name.")
@click.option("--L", "L", required=True, help="Class on the source surface.")
@emit_option
@timing_option
@click.pass_context
@_guard
def seshadri_cmd(ctx, blowup, L, emit, timing):
    """Seshadri constant at the blown-up point."""
    start = time.perf_counter()
    loaded = bundled.load_blowup(blowup)
    bm = loaded.model
    cls = parse_class(bm.source, L)
    eps = seshadri(bm, cls)
    result = {"L": cls, "L^2": self_intersection(bm.source, cls), "center": bm.center or "-", "epsilon": _seshadri_dict(eps)}
    _emit(ctx, result, emit, timing, start, loaded.digest, [CURVE_LIST_CAVEAT + " on Y"])


def _parse_point_spec(m, spec: str, default_k: int):
    label, _, weight = spec.partition(":")
    return m.point(label), int(weight) if weight else default_k


@cli.command()
@click.option("--model", required=True)
@click.option("--L", "L", required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--point", "points", multiple=True, help="Point label; 'label:k_i' and repetition for thm33.")
@click.option("--blowup", default=None)
@click.option("--mode", type=click.Choice(["cor32", "thm31", "thm31prime", "thm33", "thm34"]), default=None)
@click.option("--threshold", type=click.Choice(["reider", "bogomolov"]), default="reider", show_default=True)
@click.option("--coeff-cap", type=int, default=20, show_default=True)
@click.option("--zeta-filter", is_flag=True, help="Add LD - deg zeta <= D^2 (Gorenstein surfaces).")
@click.option("--genus-filter", is_flag=True, help="Add LD - deg zeta <= 2p_a(D) - 2 - K_X D.")
@emit_option
@timing_option
@click.pass_context
@_guard
def certify(ctx, model, L, k, points, blowup, mode, threshold, coeff_cap, zeta_filter, genus_filter, emit, timing):
    """Certify k-jets of K_X + L, or list the obstruction candidates."""
    start = time.perf_counter()
    loaded = bundled.load_surface(model)
    m = loaded.model
    texts = list(loaded.texts)
    bm = None
    if blowup:
        bl = bundled.load_blowup(blowup)
        bm = bl.model
        texts += bl.texts
        if bm.source.gram != m.gram or bm.source.canonical.coords != m.canonical.coords:
            raise Failure("the blow-up model's SOURCE does not match --model")
    cls = parse_class(m, L)
    if points:
        weighted = [_parse_point_spec(m, p, k) for p in points]
    else:
        label = bm.center if bm is not None and bm.center else next((p.label for p in m.points if p.smooth), None)
        if label is None:
            raise Failure("no --point given and the model has no smooth point")
        weighted = [(m.point(label), k)]
    target = weighted[0][0] if len(weighted) == 1 and mode != "thm33" else weighted
    cert = certify_jets(m, cls, target, k, bm, mode, threshold, coeff_cap, zeta_filter, genus_filter)
    result = {
        "verdict": cert.verdict,
        "statement": cert.statement if cert.verdict == CERTIFIED else "-",
        "reason": cert.reason,
        "mode": cert.mode,
        "k": cert.k,
        "points": [{"label": lab, "k": w} for lab, w in cert.points],
        "L": cls,
        "L^2": cert.lsq,
        "threshold": cert.threshold,
        "hypotheses": [
            {"name": h.name, "left": h.left, "relation": h.relation, "right": h.right, "holds": h.holds}
            for h in cert.hypotheses
        ],
        "seshadri": _seshadri_dict(cert.seshadri) if cert.seshadri else None,
        "obstructions": [
            {
                "D": o.D,
                "coefficients": list(o.coefficients),
                "checks": {
                    name: {"left": c.left, "relation": c.relation, "right": c.right, "holds": c.holds}
                    for name, c in o.checks.items()
                },
            }
            for o in cert.obstructions
        ],
    }
    if cert.enumeration is not None:
        result["search"] = {
            "curves": list(cert.enumeration.curves),
            "bounds": list(cert.enumeration.bounds),
            "vectors_scanned": cert.enumeration.scanned,
            "complete": cert.enumeration.complete,
        }
    caveats = [cert.caveat] + cert.warnings
    _emit(ctx, result, emit, timing, start, bundled.digest(*texts), caveats)
    ctx.exit(VERDICT_EXIT[cert.verdict])


# ---------------------------------------------------------------------------
# threshold calculators


@cli.command()
@click.option("--cor", type=click.Choice(["42", "43"]), required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--r", "r", type=int, default=1, show_default=True)
@click.option("--asq", default="1", show_default=True, help="A^2 (for --cor 42).")
@emit_option
@timing_option
@click.pass_context
@_guard
def thresholds(ctx, cor, k, r, asq, emit, timing):
    """Smallest multiples n of A with K_X + nA jet spanned or jet ample."""
    start = time.perf_counter()
    if cor == "42":
        result = {"n": threshold_cor42(k, r, parse_rational(asq)), "assumptions": list(COR42_ASSUMPTIONS)}
    else:
        spanned, ample = threshold_cor43(k)
        result = {"spanned_n": spanned, "ample_n": ample, "assumptions": list(COR43_ASSUMPTIONS)}
    result["very_ample_order_for_jets"] = cluster.very_ample_order_for_jets(k)
    _emit(ctx, result, emit, timing, start)


def _root_value(text: str) -> RootValue:
    text = text.strip()
    if text.startswith("sqrt(") and text.endswith(")"):
        return RootValue.sqrt(parse_rational(text[5:-1]))
    return RootValue.rational(parse_rational(text))


@cli.command()
@click.option("--point", "values", multiple=True, required=True, help="'k:eps', eps rational or sqrt(q).")
@click.option("--lsq", required=True, help="L^2.")
@emit_option
@timing_option
@click.pass_context
@_guard
def prop41(ctx, values, lsq, emit, timing):
    """Seshadri-constant test for surjectivity onto prod m_i^{k_i}."""
    start = time.perf_counter()
    pairs = []
    for v in values:
        k, _, eps = v.partition(":")
        pairs.append((int(k), _root_value(eps)))
    verdict = prop41_check(pairs, parse_rational(lsq))
    result = {"surjective": verdict.surjective, "reason": verdict.reason}
    _emit(ctx, result, emit, timing, start)


# ---------------------------------------------------------------------------
# cluster lab


@cli.group("cluster")
def cluster_group():
    """Colengths, Noether's formula and the bound l_n."""


def _germs(f, g):
    return cluster.germ(f), cluster.germ(g)


def _infinite(ctx, exc, emit, timing, start):
    _emit(ctx, {"colength": "infinite", "certificate": exc.certificate}, emit, timing, start)
    ctx.exit(2)


@cluster_group.command("colength")
@click.argument("f")
@click.argument("g")
@emit_option
@timing_option
@click.pass_context
@_guard
def cluster_colength(ctx, f, g, emit, timing):
    start = time.perf_counter()
    F, G = _germs(f, g)
    try:
        value = cluster.colength(F, G)
    except InfiniteColength as exc:
        return _infinite(ctx, exc, emit, timing, start)
    _emit(ctx, {"f": cluster.format_germ(F), "g": cluster.format_germ(G), "colength": value}, emit, timing, start)


@cluster_group.command("noether")
@click.argument("f")
@click.argument("g")
@click.option("--tree", is_flag=True)
@emit_option
@timing_option
@click.pass_context
@_guard
def cluster_noether(ctx, f, g, tree, emit, timing):
    start = time.perf_counter()
    F, G = _germs(f, g)
    try:
        res = cluster.noether_degree(F, G)
    except InfiniteColength as exc:
        return _infinite(ctx, exc, emit, timing, start)
    result = {"f": cluster.format_germ(F), "g": cluster.format_germ(G), "degree": res.degree}
    if tree:
        result["tree"] = res.tree.to_dict() if emit == "json" else res.tree.render()
    _emit(ctx, result, emit, timing, start)


@cluster_group.command("contains")
@click.argument("f")
@click.argument("g")
@click.option("--n", "n", type=int, required=True)
@emit_option
@timing_option
@click.pass_context
@_guard
def cluster_contains(ctx, f, g, n, emit, timing):
    start = time.perf_counter()
    F, G = _germs(f, g)
    try:
        value = cluster.contains_power(F, G, n)
    except InfiniteColength as exc:
        return _infinite(ctx, exc, emit, timing, start)
    _emit(ctx, {"n": n, "contains_m^(n+1)": value}, emit, timing, start)


@cluster_group.command("ln")
@click.option("--n", "n", type=int, required=True)
@click.option("--certify", "do_certify", is_flag=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--samples", type=int, default=500, show_default=True)
@click.option("--max-deg", type=int, default=None)
@emit_option
@timing_option
@click.pass_context
@_guard
def cluster_ln(ctx, n, do_certify, seed, samples, max_deg, emit, timing):
    start = time.perf_counter()
    if not do_certify:
        if emit == "text" and not timing:
            click.echo(cluster.l_n(n))
            return
        _emit(ctx, {"n": n, "l_n": cluster.l_n(n)}, emit, timing, start)
        return
    report = cluster.l_n_certify(n, seed, cluster.SearchSpec(samples=samples, max_deg=max_deg))
    _emit(ctx, report, emit, timing, start, seed=seed)
    ctx.exit(0 if report["ok"] else 2)


@cluster_group.command("star")
@click.option("--k", "k", type=int, required=True)
@emit_option
@timing_option
@click.pass_context
@_guard
def cluster_star(ctx, k, emit, timing):
    start = time.perf_counter()
    report = cluster.star_inequality(k)
    _emit(ctx, report, emit, timing, start)
    ctx.exit(2 if report["violations"] else 0)


# ---------------------------------------------------------------------------
# Campedelli example


@cli.group("campedelli")
def campedelli_group():
    """Points, equations and group orbits on the Z/3 x Z/3 cover."""


@campedelli_group.command("verify")
@emit_option
@timing_option
@click.pass_context
@_guard
def campedelli_verify(ctx, emit, timing):
    start = time.perf_counter()
    report = campedelli.verify_example_46()
    _emit(ctx, report, emit, timing, start)
    ctx.exit(0 if report["ok"] else 2)


@campedelli_group.command("orbit")
@click.argument("point")
@emit_option
@timing_option
@click.pass_context
@_guard
def campedelli_orbit(ctx, point, emit, timing):
    start = time.perf_counter()
    p = campedelli.parse_bipoint(point)
    orb = campedelli.orbit(p)
    result = {
        "point": str(p),
        "orbit_size": len(orb),
        "orbit": [str(q) for q in orb],
        "on_complete_intersection_all_lambda": campedelli.on_complete_intersection_all_lambda(p),
        "star_star": {f"({a},{b})": campedelli.star_star_holds(p, a, b) for a, b in ((0, 1), (1, 0), (1, 2), (1, 1))},
    }
    _emit(ctx, result, emit, timing, start)


# ---------------------------------------------------------------------------
# corpus management


@cli.group("corpus")
def corpus_group():
    """Bundled models and germ pairs."""


@corpus_group.command("list")
def corpus_list():
    for name in bundled.corpus_names():
        click.echo(name)


@corpus_group.command("show")
@click.argument("name")
@_guard
def corpus_show(name):
    click.echo(bundled.corpus_text(name), nl=False)


@corpus_group.command("export")
@click.argument("name", required=False)
@click.option("--to", "dest", default=".", show_default=True, type=click.Path(file_okay=False))
@_guard
def corpus_export(name, dest):
    """Copy one bundled file (or all) into a directory for editing."""
    out = Path(dest)
    out.mkdir(parents=True, exist_ok=True)
    for n in [name] if name else bundled.corpus_names():
        (out / n).write_text(bundled.corpus_text(n))
        click.echo(str(out / n))


@corpus_group.command("check")
@click.argument("path", required=False)
@emit_option
@timing_option
@click.pass_context
@_guard
def corpus_check(ctx, path, emit, timing):
    """Validate a surface file, or every bundled model when no path is given."""
    start = time.perf_counter()
    names = [path] if path else [n for n in bundled.corpus_names() if not n.endswith(".txt")]
    rows = []
    ok = True
    for n in names:
        try:
            if n.endswith(".blowup"):
                bundled.load_blowup(n)
                rows.append({"file": n, "valid": True, "diagnostics": []})
            else:
                text, origin = bundled.resolve_text(n, suffixes=(".surf",))
                m = parse_surface(text, origin, validate=False)
                rep = validate_model(m)
                ok &= rep.valid
                rows.append({"file": n, "valid": rep.valid, "signature": list(rep.signature), "diagnostics": rep.diagnostics})
        except (ParseError, ModelError, SignatureError) as exc:
            ok = False
            rows.append({"file": n, "valid": False, "diagnostics": [str(exc)]})
    _emit(ctx, {"files": rows, "ok": ok}, emit, timing, start)
    ctx.exit(0 if ok else 2)


@corpus_group.command("format")
@click.argument("path")
@_guard
def corpus_format(path):
    """Print a surface file in canonical form."""
    click.echo(format_surface(bundled.load_surface(path).model), nl=False)


def main(argv=None) -> None:
    cli.main(args=argv, prog_name="jetample", standalone_mode=True)


if __name__ == "__main__":
    main(sys.argv[1:])

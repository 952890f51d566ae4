"""Plain-text surface (``.surf``) and blow-up (``.blowup``) descriptions.

A file is a sequence of sections. A keyword line opens a section; keywords
with inline values (``NAME``, ``FLAGS``, ``RANK``, ``LABELS``, ``CANONICAL``,
``CENTER``, ``SOURCE``, ``EXCEPTIONAL``, ``NEGATIVITY``) take them on the same
line, block keywords (``GRAM``, ``CURVES``, ``CARTIER``, ``POINTS``,
``PULLBACK``) take the following rows. ``#`` starts a comment. See
``docs/formats.md`` for the full grammar.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .lattice import Curve, DivisorClass, SurfaceModel, validate_model
from .scalars import format_rational, parse_rational
from .singularity import PointDatum, ResolutionGraph, du_val_graph

INLINE = {"NAME", "FLAGS", "RANK", "LABELS", "CANONICAL", "CENTER", "SOURCE", "EXCEPTIONAL", "NEGATIVITY"}
BLOCK = {"GRAM", "CURVES", "CARTIER", "POINTS", "PULLBACK"}


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0, source: str = ""):
        where = f"{source}:" if source else ""
        super().__init__(f"{where}{line}:{column}: {message}" if line else message)
        self.line = line
        self.column = column


class SignatureError(ValueError):
    pass


class ModelError(ValueError):
    pass


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[list[Token]]:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = [Token(m.group(), lineno, m.start() + 1) for m in re.finditer(r"\S+", body)]
        if toks:
            rows.append(toks)
    return rows


def _rational(tok: Token, source: str) -> Fraction:
    try:
        return parse_rational(tok.text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected a rational number, got {tok.text!r}", tok.line, tok.column, source) from None


def _int(tok: Token, source: str) -> int:
    q = _rational(tok, source)
    if q.denominator != 1:
        raise ParseError(f"expected an integer, got {tok.text!r}", tok.line, tok.column, source)
    return int(q)


def _sections(text: str, source: str) -> dict[str, tuple[Token, list[Token], list[list[Token]]]]:
    out: dict[str, tuple[Token, list[Token], list[list[Token]]]] = {}
    current = None
    for row in _tokenize(text):
        head = row[0].text.upper()
        if head in INLINE or head in BLOCK:
            if head in out:
                raise ParseError(f"duplicate section {head}", row[0].line, row[0].column, source)
            if head in BLOCK and len(row) > 1:
                raise ParseError(f"{head} takes its rows on the following lines", row[1].line, row[1].column, source)
            out[head] = (row[0], row[1:], [])
            current = head if head in BLOCK else None
            continue
        if current is None:
            raise ParseError(f"unexpected {row[0].text!r} outside a block section", row[0].line, row[0].column, source)
        out[current][2].append(row)
    return out


def _vector(toks: list[Token], n: int, what: str, anchor: Token, source: str) -> tuple[Fraction, ...]:
    if len(toks) < n:
        where = toks[-1] if toks else anchor
        raise ParseError(f"{what} needs {n} entries, found {len(toks)}", where.line, where.column, source)
    return tuple(_rational(t, source) for t in toks[:n])


def _parse_points(rows: list[list[Token]], source: str) -> tuple[PointDatum, ...]:
    points: list[PointDatum] = []
    i = 0
    while i < len(rows):
        row = rows[i]
        if row[0].text.upper() != "POINT" or len(row) < 3:
            raise ParseError("expected POINT <label> SMOOTH|GRAPH n=<n>|DUVAL <type>", row[0].line, row[0].column, source)
        label, kind = row[1].text, row[2].text.upper()
        i += 1
        if kind == "SMOOTH":
            points.append(PointDatum(label))
        elif kind == "DUVAL":
            if len(row) < 4:
                raise ParseError("DUVAL needs a type such as A2", row[2].line, row[2].column, source)
            try:
                points.append(PointDatum(label, du_val_graph(row[3].text)))
            except ValueError as exc:
                raise ParseError(str(exc), row[3].line, row[3].column, source) from None
        elif kind == "GRAPH":
            m = re.fullmatch(r"n=(\d+)", row[3].text) if len(row) > 3 else None
            if not m:
                raise ParseError("GRAPH needs n=<n>", row[2].line, row[2].column, source)
            n = int(m.group(1))
            if i + n > len(rows):
                raise ParseError(f"GRAPH expects {n} matrix rows", row[2].line, row[2].column, source)
            egram = [[_int(t, source) for t in _vector_tokens(rows[i + j], n, source)] for j in range(n)]
            i += n
            genera: tuple[int, ...] = ()
            if i < len(rows) and rows[i][0].text.upper() == "GENERA":
                genera = tuple(_int(t, source) for t in _vector_tokens(rows[i][1:], n, source, rows[i][0]))
                i += 1
            points.append(PointDatum(label, ResolutionGraph(tuple(map(tuple, egram)), genera)))
        else:
            raise ParseError(f"unknown point kind {row[2].text!r}", row[2].line, row[2].column, source)
    return tuple(points)


def _vector_tokens(toks: list[Token], n: int, source: str, anchor: Token | None = None) -> list[Token]:
    if len(toks) != n:
        where = toks[0] if toks else anchor
        line, col = (where.line, where.column) if where else (0, 0)
        raise ParseError(f"expected {n} entries, found {len(toks)}", line, col, source)
    return toks


def parse_surface(text: str, source: str = "", validate: bool = True) -> SurfaceModel:
    sec = _sections(text, source)
    return _build_surface(sec, text, source, validate)


def _build_surface(sec, text: str, source: str, validate: bool) -> SurfaceModel:
    for key in ("RANK", "GRAM", "CANONICAL", "CURVES"):
        if key not in sec:
            raise ParseError(f"missing {key} section", source=source)
    head, vals, _ = sec["RANK"]
    if len(vals) != 1:
        raise ParseError("RANK takes one integer", head.line, head.column, source)
    n = _int(vals[0], source)
    if n < 1:
        raise ParseError("RANK must be positive", vals[0].line, vals[0].column, source)
    ghead, _, grows = sec["GRAM"]
    if len(grows) != n:
        raise ParseError(f"GRAM needs {n} rows, found {len(grows)}", ghead.line, ghead.column, source)
    gram = tuple(tuple(_rational(t, source) for t in _vector_tokens(r, n, source)) for r in grows)
    chead, cvals, _ = sec["CANONICAL"]
    canonical = _vector_tokens(cvals, n, source, chead)
    canonical_cls = tuple(_rational(t, source) for t in canonical)
    labels: tuple[str, ...] = ()
    if "LABELS" in sec:
        lhead, lvals, _ = sec["LABELS"]
        labels = tuple(t.text for t in _vector_tokens(lvals, n, source, lhead))
    cartier = None
    if "CARTIER" in sec:
        khead, _, krows = sec["CARTIER"]
        if len(krows) != n:
            raise ParseError(f"CARTIER needs {n} rows", khead.line, khead.column, source)
        cartier = tuple(tuple(_rational(t, source) for t in _vector_tokens(r, n, source)) for r in krows)
    flags = frozenset(t.text.lower() for t in sec["FLAGS"][1]) if "FLAGS" in sec else frozenset()
    name = " ".join(t.text for t in sec["NAME"][1]) if "NAME" in sec else ""
    bound = 1000
    if "NEGATIVITY" in sec:
        bound = _int(sec["NEGATIVITY"][1][0], source)
    points = _parse_points(sec["POINTS"][2], source) if "POINTS" in sec else ()

    probe = SurfaceModel(gram, DivisorClass(canonical_cls), (), labels, points, cartier, flags, name, bound, text)
    curves = []
    for row in sec["CURVES"][2]:
        coords = _vector(row, n, "curve", row[0], source)
        extra = [t.text for t in row[n:]]
        shared = bool(extra) and extra[-1].lower() == "shared"
        if shared:
            extra = extra[:-1]
        if len(extra) > 1:
            t = row[n + 1]
            raise ParseError("curve rows are: coordinates [label] [shared]", t.line, t.column, source)
        curves.append(Curve(probe.divisor(coords), extra[0] if extra else "", shared))
    model = SurfaceModel(
        gram, probe.divisor(canonical_cls), tuple(curves), labels, points, cartier, flags, name, bound, text
    )
    if validate:
        require_valid(model, source)
    return model


def require_valid(model: SurfaceModel, source: str = "") -> None:
    report = validate_model(model)
    if report.valid:
        return
    where = f"{source}: " if source else ""
    sig_problems = [d for d in report.diagnostics if d.startswith("signature")]
    if sig_problems:
        raise SignatureError(where + "; ".join(sig_problems))
    raise ModelError(where + "; ".join(report.diagnostics))


def format_surface(m: SurfaceModel) -> str:
    """Serialize back to the grammar (comments are not preserved)."""
    lines = []
    if m.name:
        lines.append(f"NAME {m.name}")
    if m.flags:
        lines.append("FLAGS " + " ".join(sorted(m.flags)))
    lines.append(f"RANK {m.rank}")
    if m.basis_labels:
        lines.append("LABELS " + " ".join(m.basis_labels))
    lines.append("GRAM")
    lines.extend(" ".join(format_rational(v) for v in row) for row in m.gram)
    lines.append("CANONICAL " + " ".join(format_rational(v) for v in m.canonical.coords))
    lines.append("CURVES")
    for c in m.curves:
        row = " ".join(format_rational(v) for v in c.cls.coords)
        if c.label:
            row += f" {c.label}"
        if c.shared:
            row += " shared"
        lines.append(row)
    if m.cartier_basis is not None:
        lines.append("CARTIER")
        lines.extend(" ".join(format_rational(v) for v in row) for row in m.cartier_basis)
    if m.negativity_bound != 1000:
        lines.append(f"NEGATIVITY {m.negativity_bound}")
    if m.points:
        lines.append("POINTS")
        for p in m.points:
            if p.graph is None:
                lines.append(f"POINT {p.label} SMOOTH")
                continue
            lines.append(f"POINT {p.label} GRAPH n={p.graph.n}")
            lines.extend(" ".join(str(v) for v in row) for row in p.graph.egram)
            if any(p.graph.genera):
                lines.append("GENERA " + " ".join(str(g) for g in p.graph.genera))
    return "\n".join(lines) + "\n"


def digest(*texts: str) -> str:
    h = hashlib.sha256()
    for t in texts:
        h.update(t.encode())
        h.update(b"\0")
    return h.hexdigest()


def read_surface(path: str | Path) -> SurfaceModel:
    path = Path(path)
    return parse_surface(path.read_text(), str(path))


def parse_blowup(text: str, source: str = "", resolve=None):
    """A blow-up file describes ``Y`` like a surface file plus SOURCE, PULLBACK, EXCEPTIONAL, CENTER.

    ``resolve(name)`` returns ``(SurfaceModel, text)`` for the SOURCE reference.
    """
    from .jets.blowup import BlowupModel

    sec = _sections(text, source)
    for key in ("SOURCE", "PULLBACK", "EXCEPTIONAL"):
        if key not in sec:
            raise ParseError(f"missing {key} section", source=source)
    shead, svals, _ = sec["SOURCE"]
    if len(svals) != 1:
        raise ParseError("SOURCE takes one file name", shead.line, shead.column, source)
    if resolve is None:
        raise ParseError("no resolver for SOURCE", shead.line, shead.column, source)
    x, x_text = resolve(svals[0].text)
    y = _build_surface(sec, text, source, True)
    phead, _, prows = sec["PULLBACK"]
    if len(prows) != x.rank:
        raise ParseError(f"PULLBACK needs {x.rank} rows (one per source basis vector)", phead.line, phead.column, source)
    pull = tuple(tuple(_rational(t, source) for t in _vector_tokens(r, y.rank, source)) for r in prows)
    ehead, evals, _ = sec["EXCEPTIONAL"]
    exc = tuple(_rational(t, source) for t in _vector_tokens(evals, y.rank, source, ehead))
    center = sec["CENTER"][1][0].text if "CENTER" in sec and sec["CENTER"][1] else ""
    name = " ".join(t.text for t in sec["NAME"][1]) if "NAME" in sec else ""
    bm = BlowupModel(x, y, pull, DivisorClass(exc), center, name)
    problems = bm.diagnostics()
    if center:
        try:
            x.point(center)
        except KeyError:
            problems.append(f"source has no point labelled {center!r}")
    if problems:
        raise ModelError(f"{source}: " + "; ".join(problems) if source else "; ".join(problems))
    return bm, x_text


_TERM = re.compile(r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*([A-Za-z_][A-Za-z0-9_']*)\s*")


def parse_class(m: SurfaceModel, text: str) -> DivisorClass:
    """``"3,1"`` (coordinates) or a label expression like ``"3E+G"``, ``"H-E"``, ``"1/2 l"``."""
    text = text.strip()
    if not text:
        raise ValueError("empty class")
    if re.fullmatch(r"[-+0-9/,\s]+", text):
        parts = [p for p in text.split(",")]
        try:
            coords = [parse_rational(p.strip()) for p in parts]
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"cannot parse class {text!r}") from None
        return m.divisor(coords)
    names = list(m.basis_labels) + [c.label for c in m.curves if c.label]
    coords = [Fraction(0)] * m.rank
    pos = 0
    while pos < len(text):
        match = _TERM.match(text, pos)
        if not match or match.end() == pos:
            raise ValueError(f"cannot parse class {text!r} at column {pos + 1}")
        sign, coef, name = match.groups()
        if pos and not sign:
            raise ValueError(f"missing operator before {name!r} in {text!r}")
        c = parse_rational(coef) if coef else Fraction(1)
        if sign == "-":
            c = -c
        if name in m.basis_labels:
            i = m.basis_labels.index(name)
            coords[i] += c
        elif name in names:
            curve = m.curves[m.curve_index(name)]
            coords = [a + c * b for a, b in zip(coords, curve.cls.coords)]
        else:
            raise ValueError(f"unknown label {name!r}; known: {', '.join(dict.fromkeys(names))}")
        pos = match.end()
    return m.divisor(coords)

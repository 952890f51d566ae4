"""Access to the bundled corpus of surface models, blow-up models and germ pairs."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .formats import digest, parse_blowup, parse_surface

SUFFIXES = (".surf", ".blowup", ".txt")


def _root():
    return resources.files("jetample") / "corpus"


def corpus_names() -> list[str]:
    return sorted(p.name for p in _root().iterdir() if p.name.endswith(SUFFIXES))


def corpus_text(name: str) -> str:
    target = _root() / name
    if not target.is_file():
        raise FileNotFoundError(f"no bundled file {name!r}; available: {', '.join(corpus_names())}")
    return target.read_text()


def resolve_text(ref: str, relative_to: Path | None = None, suffixes: tuple[str, ...] = SUFFIXES) -> tuple[str, str]:
    """``(text, origin)`` for a path on disk or a bundled name (extension optional)."""
    candidates = [Path(ref)]
    if relative_to is not None:
        candidates.insert(0, relative_to / ref)
    for c in candidates:
        if c.is_file():
            return c.read_text(), str(c)
    names = corpus_names()
    for suffix in ("",) + suffixes:
        if ref + suffix in names:
            return corpus_text(ref + suffix), f"bundled:{ref + suffix}"
    raise FileNotFoundError(f"{ref!r} is neither a file nor a bundled model ({', '.join(names)})")


@dataclass
class Loaded:
    model: object
    texts: list[str]
    origin: str

    @property
    def digest(self) -> str:
        return digest(*self.texts)


def load_surface(ref: str) -> Loaded:
    text, origin = resolve_text(ref, suffixes=(".surf",))
    return Loaded(parse_surface(text, origin), [text], origin)


def load_blowup(ref: str) -> Loaded:
    text, origin = resolve_text(ref, suffixes=(".blowup",))
    base = Path(origin).parent if not origin.startswith("bundled:") else None

    def resolve(name: str):
        src_text, src_origin = resolve_text(name, base, (".surf",))
        return parse_surface(src_text, src_origin), src_text

    bm, source_text = parse_blowup(text, origin, resolve)
    return Loaded(bm, [source_text, text], origin)


def germ_pairs() -> list[tuple[str, str, list[tuple[str, str]]]]:
    """``(f, g, branches of f)`` from ``germs.txt``."""
    out = []
    for line in corpus_text("germs.txt").splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        f, g, branches = (part.strip() for part in line.split(";"))
        params = []
        for b in branches.split("|"):
            xt, yt = b.strip().strip("()").split(",")
            params.append((xt.strip(), yt.strip()))
        out.append((f, g, params))
    return out

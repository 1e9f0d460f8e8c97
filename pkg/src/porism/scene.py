"""Line-oriented text format for configurations, named points and chains.

The format is versioned, UTF-8, diff-friendly, and bit-exact: every scalar is
a rational written as "p" or "p/q" (never a float), and the parameter value
infinity is written "inf". One record per line:

    poncelet-scene 1
    conic canonical
    line 0 1 0
    point A 1 0 1
    chain dual 3 1/3 -1/3 -3 3

Only dual chains are serialized: their parameters are rational whenever the
start is, while primal chains generally live in a quadratic extension.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .closure import LineConfiguration
from .errors import ParseError
from .plane import INFINITY, ConicParam, ProjLine, ProjPoint

HEADER = "poncelet-scene 1"
CONIC_RECORD = "conic canonical"


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(token: str) -> Fraction:
    if "." in token or "e" in token.lower():
        raise ParseError(f"scalars must be rational, got {token!r}")
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {token!r}") from exc


def format_param(t: ConicParam) -> str:
    if t.is_infinite:
        return "inf"
    if not isinstance(t.value, Fraction):
        raise ParseError(f"only rational parameters serialize, got {t!r}")
    return format_rational(t.value)


def parse_param(token: str) -> ConicParam:
    if token == "inf":
        return INFINITY
    return ConicParam(parse_rational(token))


def _format_triple(coords) -> str:
    parts = []
    for c in coords:
        if not isinstance(c, Fraction):
            raise ParseError(f"only rational coordinates serialize, got {c!r}")
        parts.append(format_rational(c))
    return " ".join(parts)


@dataclass(frozen=True)
class SceneDocument:
    """A parsed or to-be-serialized scene: configuration lines, optional
    named points, optional dual-chain parameter traces."""

    lines: tuple[ProjLine, ...]
    points: tuple[tuple[str, ProjPoint], ...] = field(default=())
    chains: tuple[tuple[ConicParam, ...], ...] = field(default=())

    def configuration(self) -> LineConfiguration:
        return LineConfiguration(self.lines)

    @classmethod
    def from_configuration(
        cls,
        config: LineConfiguration,
        points: Sequence[tuple[str, ProjPoint]] = (),
        chains: Sequence[Sequence[ConicParam]] = (),
    ) -> "SceneDocument":
        return cls(
            tuple(config.lines),
            tuple(points),
            tuple(tuple(chain) for chain in chains),
        )


def serialize(scene: SceneDocument) -> str:
    out = [HEADER, CONIC_RECORD]
    for l in scene.lines:
        out.append(f"line {_format_triple(l.coords)}")
    for name, p in scene.points:
        if not name or any(ch.isspace() for ch in name):
            raise ParseError(f"bad point name {name!r}")
        out.append(f"point {name} {_format_triple(p.coords)}")
    for chain in scene.chains:
        out.append("chain dual " + " ".join(format_param(t) for t in chain))
    return "\n".join(out) + "\n"


def parse(text: str) -> SceneDocument:
    meaningful = []
    for raw in text.splitlines():
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            meaningful.append(stripped)
    if not meaningful or meaningful[0] != HEADER:
        raise ParseError(f"missing header {HEADER!r}")
    if len(meaningful) < 2 or meaningful[1] != CONIC_RECORD:
        raise ParseError(f"missing record {CONIC_RECORD!r}")
    lines = []
    points = []
    chains = []
    for record in meaningful[2:]:
        tokens = record.split()
        keyword = tokens[0]
        if keyword == "line":
            if len(tokens) != 4:
                raise ParseError(f"line record needs 3 scalars: {record!r}")
            try:
                lines.append(ProjLine(*(parse_rational(t) for t in tokens[1:])))
            except ValueError as exc:
                raise ParseError(str(exc)) from exc
        elif keyword == "point":
            if len(tokens) != 5:
                raise ParseError(f"point record needs a name and 3 scalars: {record!r}")
            try:
                points.append(
                    (tokens[1], ProjPoint(*(parse_rational(t) for t in tokens[2:])))
                )
            except ValueError as exc:
                raise ParseError(str(exc)) from exc
        elif keyword == "chain":
            if len(tokens) < 3 or tokens[1] != "dual":
                raise ParseError(f"chain record must be 'chain dual ...': {record!r}")
            chains.append(tuple(parse_param(t) for t in tokens[2:]))
        else:
            raise ParseError(f"unknown record {keyword!r}")
    return SceneDocument(tuple(lines), tuple(points), tuple(chains))


def save_scene(scene: SceneDocument, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(scene))


def load_scene(path: str) -> SceneDocument:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read())

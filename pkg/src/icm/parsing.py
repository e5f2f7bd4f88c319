"""Text and JSON input formats for ideals and polytopes.

Grammar for ideals: generators separated by commas; a generator is a
'*'-separated list of factors `x<i>` or `x<i>^<n>`, with aliases x, y, z, w
for the first four variables; `1` is the unit generator.  The ambient
dimension is the largest variable index seen unless given explicitly.
"""

from __future__ import annotations

import re

from .errors import IdealParseError
from .ideals import MonomialIdeal, minimalize

_ALIASES = {"x": 1, "y": 2, "z": 3, "w": 4}
_TOKEN = re.compile(r"\s*(?:(?P<var>x\d+|[xyzw])(?:\s*\^\s*(?P<exp>\d+))?"
                    r"|(?P<one>1)|(?P<zero>0))")


def _parse_generator(text, offset):
    """One monomial -> dict var_index -> exponent, or None for the unit."""
    pos = 0
    powers = {}
    expect_factor = True
    while pos < len(text):
        if not expect_factor:
            star = re.match(r"\s*\*", text[pos:])
            if star:
                pos += star.end()
                expect_factor = True
                continue
            if text[pos:].strip() == "":
                break
            raise IdealParseError("expected '*' between factors",
                                  offset + pos)
        m = _TOKEN.match(text, pos)
        if not m:
            raise IdealParseError("expected a variable factor", offset + pos)
        if m.group("zero"):
            raise IdealParseError("the zero monomial cannot generate",
                                  offset + m.start("zero"))
        if m.group("one"):
            pos = m.end()
            expect_factor = False
            continue
        var = m.group("var")
        index = _ALIASES[var] if var in _ALIASES else int(var[1:])
        if index < 1:
            raise IdealParseError(f"variable index must be >= 1, got {var}",
                                  offset + m.start("var"))
        exp = int(m.group("exp")) if m.group("exp") else 1
        powers[index] = powers.get(index, 0) + exp
        pos = m.end()
        expect_factor = False
    if expect_factor:
        raise IdealParseError("empty generator", offset)
    return powers


def parse_ideal(text, dim=None):
    """Parse the generator grammar into a minimalized monomial ideal."""
    if not text.strip():
        raise IdealParseError("empty input", 0)
    gens = []
    offset = 0
    for chunk in text.split(","):
        gens.append(_parse_generator(chunk, offset))
        offset += len(chunk) + 1
    max_index = max((i for g in gens for i in g), default=1)
    if dim is None:
        dim = max_index
    elif max_index > dim:
        raise IdealParseError(
            f"variable index {max_index} exceeds dimension {dim}", 0)
    points = [tuple(g.get(i + 1, 0) for i in range(dim)) for g in gens]
    return minimalize(points, dim)


def render_ideal(I):
    """Inverse of parse_ideal on canonical ideals: parse(render(I)) == I."""
    names = (["x", "y", "z", "w"][:I.dim] if I.dim <= 4
             else [f"x{i + 1}" for i in range(I.dim)])

    def monomial(g):
        parts = []
        for name, e in zip(names, g):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    return ", ".join(monomial(g) for g in I.gens)


def parse_points(text, dim=None):
    """Semicolon-separated integer points, e.g. '2,0; 0,3'."""
    points = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise IdealParseError("empty point", text.find(chunk))
        try:
            p = tuple(int(v) for v in chunk.split(","))
        except ValueError as ex:
            raise IdealParseError(f"bad point {chunk!r}: {ex}", 0) from None
        points.append(p)
    lengths = {len(p) for p in points}
    if len(lengths) != 1:
        raise IdealParseError("points of mixed dimension", 0)
    if dim is not None and lengths != {dim}:
        raise IdealParseError(
            f"points have dimension {lengths.pop()}, expected {dim}", 0)
    return points


def ideal_from_document(doc):
    """IdealDocument JSON: {"vars": d, "gens": [[...], ...]} with integer
    entries, possibly as decimal strings."""
    try:
        dim = int(doc["vars"])
        gens = [tuple(int(v) for v in g) for g in doc["gens"]]
    except (KeyError, TypeError, ValueError) as ex:
        raise IdealParseError(f"bad ideal document: {ex}", 0) from None
    if any(v < 0 for g in gens for v in g):
        raise IdealParseError("negative exponent in ideal document", 0)
    return minimalize(gens, dim)


def ideal_to_document(I):
    return {"vars": str(I.dim), "gens": [[str(v) for v in g] for g in I.gens]}

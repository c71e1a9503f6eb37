"""Line-oriented design file format.

    gcd 1
    t: 2
    lambda: 1
    v: 4 2 2
    k: 2 1 1
    blocks:
    1 2 | 1 | 1

`#` starts a comment anywhere on a line; blank lines are ignored; CRLF
input is accepted.  A literal `*` in a block denotes a retained
placeholder.  Emission is canonical: labels ascending, placeholders
last, parts joined by ` | `, headers in the order shown.
"""

from __future__ import annotations

from dataclasses import dataclass

from .construct import STAR, PlaceholderBlock, PlaceholderDesign
from .core import Design, PartStructure
from .errors import DesignSemanticError, DesignSyntaxError, GencovError

_HEADER = "gcd 1"
_KEYS = ("t", "lambda", "v", "k")


@dataclass(frozen=True)
class DesignDocument:
    """Parsed file content; blocks may contain STAR entries."""

    version: int
    t: int
    lam: int
    v: tuple[int, ...]
    k: tuple[int, ...]
    blocks: tuple[tuple[tuple[int, ...], ...], ...]

    @classmethod
    def from_design(cls, d: Design | PlaceholderDesign) -> "DesignDocument":
        if isinstance(d, PlaceholderDesign):
            blocks = tuple(b.parts for b in d.blocks)
        else:
            blocks = d.blocks
        return cls(1, d.t, d.lam, d.structure.v, d.structure.k, blocks)

    def to_design(self) -> Design | PlaceholderDesign:
        try:
            s = PartStructure(self.v, self.k)
        except GencovError as e:
            raise DesignSemanticError(str(e)) from e
        has_stars = any(STAR in part for b in self.blocks for part in b)
        try:
            if has_stars:
                pblocks = tuple(PlaceholderBlock(b) for b in self.blocks)
                return PlaceholderDesign(s, self.t, pblocks, self.lam)
            return Design(s, self.t, self.blocks, self.lam)
        except GencovError as e:
            raise DesignSemanticError(str(e)) from e

    def to_text(self) -> str:
        lines = [_HEADER, f"t: {self.t}", f"lambda: {self.lam}",
                 "v: " + " ".join(str(x) for x in self.v),
                 "k: " + " ".join(str(x) for x in self.k),
                 "blocks:"]
        for b in self.blocks:
            lines.append(" | ".join(
                " ".join("*" if x == STAR else str(x) for x in part)
                for part in b
            ))
        return "\n".join(lines) + "\n"


def _parse_int(token: str, lineno: int, line: str) -> int:
    try:
        return int(token)
    except ValueError:
        col = line.find(token) + 1
        raise DesignSyntaxError(f"expected integer, got {token!r}",
                                line=lineno, column=col) from None


def parse_document(text: str) -> DesignDocument:
    # (lineno, significant content) with comments and blanks removed
    rows = []
    for n, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((n, body))
    if not rows:
        raise DesignSyntaxError("empty document", line=1)
    lineno, head = rows[0]
    if head != _HEADER:
        raise DesignSyntaxError(f"expected {_HEADER!r}, got {head!r}", line=lineno)

    fields: dict[str, tuple[int, str]] = {}
    pos = 1
    while pos < len(rows):
        lineno, body = rows[pos]
        if body == "blocks:":
            pos += 1
            break
        key, sep, rest = body.partition(":")
        key = key.strip()
        if not sep or key not in _KEYS:
            raise DesignSyntaxError(f"expected one of {_KEYS} or 'blocks:', got {body!r}",
                                    line=lineno)
        if key in fields:
            raise DesignSyntaxError(f"duplicate header {key!r}", line=lineno)
        fields[key] = (lineno, rest.strip())
        pos += 1
    else:
        raise DesignSyntaxError("missing 'blocks:' line", line=rows[-1][0])
    for key in _KEYS:
        if key not in fields:
            raise DesignSyntaxError(f"missing header {key!r}", line=lineno)

    t = _parse_int(fields["t"][1], fields["t"][0], fields["t"][1])
    lam = _parse_int(fields["lambda"][1], fields["lambda"][0], fields["lambda"][1])
    v = tuple(_parse_int(x, fields["v"][0], fields["v"][1])
              for x in fields["v"][1].split())
    k = tuple(_parse_int(x, fields["k"][0], fields["k"][1])
              for x in fields["k"][1].split())
    if not v:
        raise DesignSyntaxError("empty part list", line=fields["v"][0])
    if len(v) != len(k):
        raise DesignSemanticError(f"{len(v)} part sizes but {len(k)} profile entries",
                                  line=fields["k"][0])

    blocks = []
    for lineno, body in rows[pos:]:
        parts = []
        for chunk in body.split("|"):
            entries = []
            for token in chunk.split():
                if token == "*":
                    entries.append(STAR)
                else:
                    entries.append(_parse_int(token, lineno, body))
            parts.append(tuple(entries))
        if len(parts) != len(v):
            raise DesignSemanticError(
                f"block has {len(parts)} parts, structure has {len(v)}", line=lineno)
        for i, part in enumerate(parts):
            if len(part) != k[i]:
                raise DesignSemanticError(
                    f"part {i + 1} has {len(part)} entries, profile is {k[i]}",
                    line=lineno)
            labels = [x for x in part if x != STAR]
            if len(set(labels)) != len(labels):
                raise DesignSemanticError(f"repeated label in part {i + 1}", line=lineno)
            if any(not 1 <= x <= v[i] for x in labels):
                raise DesignSemanticError(
                    f"label outside 1..{v[i]} in part {i + 1}", line=lineno)
        blocks.append(tuple(parts))
    return DesignDocument(1, t, lam, v, k, tuple(blocks))


def parse_design(text: str) -> Design | PlaceholderDesign:
    """Parse document text; placeholder entries yield a PlaceholderDesign."""
    return parse_document(text).to_design()


def emit_design(d: Design | PlaceholderDesign) -> str:
    """Canonical document text; parse_design(emit_design(d)) == d."""
    return DesignDocument.from_design(d).to_text()

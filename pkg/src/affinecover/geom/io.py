"""Text formats for drawings, line sets and plane sets.

All rationals serialize as ``num/den`` with a positive denominator, so a
round trip is bit exact and output bytes are deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import FormatError
from .primitives import Line2, Plane3, Point2, Point3


def format_rat(x: Fraction) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def parse_rat(tok: str) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad rational {tok!r}") from exc


def write_drawing2(positions: dict[int, Point2]) -> str:
    lines = [f"{v} {format_rat(p.x)} {format_rat(p.y)}"
             for v, p in sorted(positions.items())]
    return "\n".join(lines) + "\n" if lines else ""


def read_drawing2(text: str) -> dict[int, Point2]:
    out: dict[int, Point2] = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) != 3:
            raise FormatError(f"bad drawing line {ln!r}")
        out[int(parts[0])] = Point2(parse_rat(parts[1]), parse_rat(parts[2]))
    return out


def write_drawing3(positions: dict[int, Point3]) -> str:
    lines = [f"{v} {format_rat(p.x)} {format_rat(p.y)} {format_rat(p.z)}"
             for v, p in sorted(positions.items())]
    return "\n".join(lines) + "\n" if lines else ""


def read_drawing3(text: str) -> dict[int, Point3]:
    out: dict[int, Point3] = {}
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) != 4:
            raise FormatError(f"bad drawing line {ln!r}")
        out[int(parts[0])] = Point3(parse_rat(parts[1]), parse_rat(parts[2]),
                                    parse_rat(parts[3]))
    return out


def write_lines(lines_set) -> str:
    rows = [f"{format_rat(l.a)} {format_rat(l.b)} {format_rat(l.c)}"
            for l in sorted(lines_set)]
    return "\n".join(rows) + "\n" if rows else ""


def read_lines(text: str) -> tuple[Line2, ...]:
    out = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) != 3:
            raise FormatError(f"bad line row {ln!r}")
        out.append(Line2(parse_rat(parts[0]), parse_rat(parts[1]), parse_rat(parts[2])))
    return tuple(out)


def write_planes(planes) -> str:
    rows = [f"{format_rat(p.a)} {format_rat(p.b)} {format_rat(p.c)} {format_rat(p.d)}"
            for p in planes]
    return "\n".join(rows) + "\n" if rows else ""


def read_planes(text: str) -> tuple[Plane3, ...]:
    out = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split()
        if len(parts) != 4:
            raise FormatError(f"bad plane row {ln!r}")
        out.append(Plane3(*(parse_rat(t) for t in parts)))
    return tuple(out)

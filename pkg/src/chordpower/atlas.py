"""Triad-space datasets: enumeration, a reference catalog, exports, octave map.

Records are thin rows over the emotion engine; the enumeration kernels
supply raw numbers and :func:`chordpower.emotion.resolve_report` finishes
them, so a record can never disagree with a fresh analysis of the same
chord.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Sequence, Union

from chordpower import kernels
from chordpower.emotion import analyze, resolve_report
from chordpower.errors import IoFailure
from chordpower.proportions import Chord, Group, chord_of, complement, proportion_pair

CSV_HEADER = "direct,inverse,group,pwe,pwe2,utilitarian,flags"

_GROUP_BY_CODE = {1: Group.G1, 2: Group.G2, 3: Group.G3}

Destination = Union[str, Path, IO[bytes], None]


@dataclass(frozen=True)
class TriadRecord:
    """One enumerated chord: proportions, group, power values, plot cents."""

    direct: tuple[int, ...]
    inverse: tuple[int, ...]
    group: Group
    pwe: float
    pwe2: float
    utilitarian: float
    flags: frozenset[str]
    cents: tuple[float, ...]


def _cents_from_root(numbers: Sequence[int]) -> tuple[float, ...]:
    root = numbers[0]
    return tuple(1200.0 * math.log2(n / root) for n in numbers)


def record_for(chord: Chord) -> TriadRecord:
    """Analyze one chord into a record."""
    pair = proportion_pair(chord)
    report = analyze(chord)
    return TriadRecord(
        direct=pair.direct.numbers,
        inverse=pair.inverse.numbers,
        group=pair.group,
        pwe=report.pwe,
        pwe2=report.pwe2,
        utilitarian=report.utilitarian,
        flags=report.flags,
        cents=_cents_from_root(pair.direct.numbers),
    )


def enumerate_triads(
    max_n: int, octave_only: bool = False, kernel: str | None = None
) -> list[TriadRecord]:
    """All triads a <= b <= c <= max_n with gcd(a, b, c) = 1, analyzed.

    ``octave_only`` keeps chords spanning at most an octave (c/a <= 2).
    Output is sorted by (a, b, c) and deterministic regardless of which
    enumeration kernel ran.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    records = []
    for a, b, c, ia, ib, ic, group_code, pwe, pwe2 in kernels.coprime_triads(
        max_n, octave_only, kernel=kernel
    ):
        group = _GROUP_BY_CODE[group_code]
        report = resolve_report(3, group, pwe, pwe2)
        records.append(
            TriadRecord(
                direct=(a, b, c),
                inverse=(ia, ib, ic),
                group=group,
                pwe=pwe,
                pwe2=pwe2,
                utilitarian=report.utilitarian,
                flags=report.flags,
                cents=_cents_from_root((a, b, c)),
            )
        )
    return records


# Catalog of well-known triads: four symmetric ones (unison, doubled
# octave, stacked fifths, augmented) and eighteen consonances including
# both orientations of 3:4:5 and of the major triad.  Entries marked
# inverted are the reciprocal (complement) orientation of the numbers.
_CATALOG = (
    ((1, 1, 1), False),
    ((1, 2, 4), False),
    ((4, 6, 9), False),
    ((16, 20, 25), False),
    ((1, 2, 3), False),
    ((2, 3, 4), False),
    ((2, 3, 5), False),
    ((2, 3, 8), False),
    ((2, 4, 5), False),
    ((2, 5, 6), False),
    ((2, 5, 8), False),
    ((3, 4, 5), False),
    ((3, 4, 5), True),
    ((3, 4, 6), False),
    ((3, 4, 8), False),
    ((3, 5, 6), False),
    ((3, 5, 8), False),
    ((3, 6, 8), False),
    ((4, 5, 6), False),
    ((4, 5, 6), True),
    ((4, 5, 8), False),
    ((5, 6, 8), False),
)


def reference_triads() -> list[TriadRecord]:
    """The 22-row reference catalog, analyzed by the engine."""
    records = []
    for numbers, inverted in _CATALOG:
        chord = chord_of(*numbers)
        if inverted:
            chord = complement(chord)
        records.append(record_for(chord))
    return records


def proportion_text(numbers: Sequence[int], inverse: bool) -> str:
    if inverse:
        return ":".join(f"/{n}" for n in numbers)
    return ":".join(str(n) for n in numbers)


def _csv_bytes(records: Iterable[TriadRecord]) -> bytes:
    lines = [CSV_HEADER]
    for r in records:
        lines.append(
            ",".join(
                (
                    proportion_text(r.direct, False),
                    proportion_text(r.inverse, True),
                    r.group.value,
                    f"{r.pwe:.6f}",
                    f"{r.pwe2:.6f}",
                    f"{r.utilitarian:.6f}",
                    ";".join(sorted(r.flags)),
                )
            )
        )
    return ("\n".join(lines) + "\n").encode("ascii")


def _json_bytes(records: Iterable[TriadRecord]) -> bytes:
    rows = [
        {
            "direct": list(r.direct),
            "inverse": list(r.inverse),
            "group": r.group.value,
            "pwe": r.pwe,
            "pwe2": r.pwe2,
            "utilitarian": r.utilitarian,
            "flags": sorted(r.flags),
        }
        for r in records
    ]
    return (json.dumps(rows, indent=2) + "\n").encode("ascii")


def export(
    records: Sequence[TriadRecord], fmt: str, destination: Destination = None
) -> bytes:
    """Serialize records to CSV or JSON bytes; optionally write them out.

    CSV keeps proportions in text notation and reals at fixed 6 decimals;
    JSON keeps integer tuples and full-precision reals so that
    :func:`records_from_json` reproduces the records exactly.  Both are
    byte-identical across runs.
    """
    if fmt == "csv":
        payload = _csv_bytes(records)
    elif fmt == "json":
        payload = _json_bytes(records)
    else:
        raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")
    if destination is not None:
        _write_bytes(destination, payload)
    return payload


def records_from_json(payload: Union[bytes, str]) -> list[TriadRecord]:
    """Rebuild records from a JSON export (cents are recomputed)."""
    records = []
    for row in json.loads(payload):
        records.append(
            TriadRecord(
                direct=tuple(row["direct"]),
                inverse=tuple(row["inverse"]),
                group=Group(row["group"]),
                pwe=row["pwe"],
                pwe2=row["pwe2"],
                utilitarian=row["utilitarian"],
                flags=frozenset(row["flags"]),
                cents=_cents_from_root(row["direct"]),
            )
        )
    return records


_MARKER_STYLE = {
    Group.G1: ("circle", "#d0642c"),
    Group.G2: ("square", "#33599c"),
    Group.G3: ("diamond", "#666666"),
}

_SVG_SIZE = 1000
_SVG_MARGIN_LEFT = 80
_SVG_MARGIN_BOTTOM = 70
_SVG_MARGIN_TOP = 50
_SVG_MARGIN_RIGHT = 40
_AXIS_MAX_CENTS = 1200.0


def _marker_svg(shape: str, x: float, y: float, size: float, color: str) -> str:
    common = f'fill="{color}" fill-opacity="0.65" stroke="{color}"'
    if shape == "circle":
        return f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{size:.2f}" {common}/>'
    if shape == "square":
        side = size * 1.8
        return (
            f'<rect x="{x - side / 2:.2f}" y="{y - side / 2:.2f}" '
            f'width="{side:.2f}" height="{side:.2f}" {common}/>'
        )
    points = (
        f"{x:.2f},{y - size * 1.2:.2f} {x + size * 1.2:.2f},{y:.2f} "
        f"{x:.2f},{y + size * 1.2:.2f} {x - size * 1.2:.2f},{y:.2f}"
    )
    return f'<polygon points="{points}" {common}/>'


def render_octave_map(
    records: Sequence[TriadRecord], destination: Destination = None
) -> bytes:
    """SVG scatter of triads: x = lower interval, y = upper interval, in cents.

    Marker shape encodes the group (circle G1, square G2, diamond G3) and
    marker size grows with |pwe|.  Axes span 0..1200 cents; records whose
    intervals fall outside (chords wider than an octave) are skipped.
    Output is deterministic.
    """
    for r in records:
        if len(r.cents) != 3:
            raise ValueError(f"octave map draws triads only, got {len(r.cents)} voices")

    plot_w = _SVG_SIZE - _SVG_MARGIN_LEFT - _SVG_MARGIN_RIGHT
    plot_h = _SVG_SIZE - _SVG_MARGIN_TOP - _SVG_MARGIN_BOTTOM

    def sx(cents: float) -> float:
        return _SVG_MARGIN_LEFT + cents / _AXIS_MAX_CENTS * plot_w

    def sy(cents: float) -> float:
        return _SVG_SIZE - _SVG_MARGIN_BOTTOM - cents / _AXIS_MAX_CENTS * plot_h

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_SIZE}" '
        f'height="{_SVG_SIZE}" viewBox="0 0 {_SVG_SIZE} {_SVG_SIZE}">',
        f'<rect x="0" y="0" width="{_SVG_SIZE}" height="{_SVG_SIZE}" fill="white"/>',
        f'<text x="{_SVG_SIZE / 2:.0f}" y="30" font-family="sans-serif" '
        'font-size="20" text-anchor="middle">Octave triad map</text>',
    ]
    for step in range(0, 1201, 300):
        x = sx(step)
        y = sy(step)
        parts.append(
            f'<line x1="{x:.2f}" y1="{sy(0):.2f}" x2="{x:.2f}" y2="{sy(1200):.2f}" '
            'stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<line x1="{sx(0):.2f}" y1="{y:.2f}" x2="{sx(1200):.2f}" y2="{y:.2f}" '
            'stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{sy(0) + 22:.2f}" font-family="sans-serif" '
            f'font-size="13" text-anchor="middle">{step}</text>'
        )
        parts.append(
            f'<text x="{sx(0) - 8:.2f}" y="{y + 4:.2f}" font-family="sans-serif" '
            f'font-size="13" text-anchor="end">{step}</text>'
        )
    parts.append(
        f'<rect x="{sx(0):.2f}" y="{sy(1200):.2f}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="#333333" stroke-width="1.5"/>'
    )
    parts.append(
        f'<text x="{sx(600):.2f}" y="{_SVG_SIZE - 18}" font-family="sans-serif" '
        'font-size="15" text-anchor="middle">lower interval (cents)</text>'
    )
    parts.append(
        f'<text x="22" y="{sy(600):.2f}" font-family="sans-serif" font-size="15" '
        f'text-anchor="middle" transform="rotate(-90 22 {sy(600):.2f})">'
        "upper interval (cents)</text>"
    )
    for i, (group, label) in enumerate(
        ((Group.G1, "major (G1)"), (Group.G2, "minor (G2)"), (Group.G3, "symmetric (G3)"))
    ):
        shape, color = _MARKER_STYLE[group]
        lx = sx(1200) - 170
        ly = sy(1200) + 18 + i * 22
        parts.append(_marker_svg(shape, lx, ly, 5.0, color))
        parts.append(
            f'<text x="{lx + 14:.2f}" y="{ly + 4:.2f}" font-family="sans-serif" '
            f'font-size="13">{label}</text>'
        )
    for r in records:
        lower = r.cents[1]
        upper = r.cents[2] - r.cents[1]
        if lower > _AXIS_MAX_CENTS or upper > _AXIS_MAX_CENTS:
            continue
        shape, color = _MARKER_STYLE[r.group]
        size = 2.5 + 1.6 * abs(r.pwe)
        parts.append(_marker_svg(shape, sx(lower), sy(upper), size, color))
    parts.append("</svg>")
    payload = ("\n".join(parts) + "\n").encode("utf-8")
    if destination is not None:
        _write_bytes(destination, payload)
    return payload


def _write_bytes(destination, payload: bytes) -> None:
    try:
        if hasattr(destination, "write"):
            destination.write(payload)
        else:
            Path(destination).write_bytes(payload)
    except OSError as exc:
        raise IoFailure(f"could not write {destination!r}: {exc}") from exc

"""Command-line surface: analysis, datasets, octave map, audio rendering.

Chord input grammar:

* proportion text: "4:5:6" (direct) or "/4:/5:/6" (inverse; the chord is
  the reciprocal orientation, so /4:/5:/6 parses to 10:12:15),
* rational list: "1,5/4,3/2" (exact, no approximation),
* note list: "C4,E4,G4" (12-TET scientific pitch notation, rationalized),
* frequency list: "220Hz,275Hz,330Hz" (rationalized).

Exit codes: 0 success, 1 input error, 2 I/O error.  Errors go to stderr
only.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from chordpower import atlas
from chordpower.emotion import EmotionReport, analyze
from chordpower.errors import ChordPowerError, IoFailure, NonPositivePitch, ParseError
from chordpower.proportions import Chord, normalize_chord, proportion_pair
from chordpower.rationalize import RationalizationConfig, rationalize_chord
from chordpower.synth import SynthConfig, render_chord, render_comparison, write_wav


def parse_chord_spec(text: str, cfg: RationalizationConfig = RationalizationConfig()) -> Chord:
    """Parse any supported chord spelling into a Chord."""
    s = text.strip()
    if not s:
        raise ParseError(text, 0, "empty chord spec")
    if ":" in s:
        return _parse_proportion_text(s)
    tokens = s.split(",")
    exact = _exact_rational_list(tokens)
    if exact is not None:
        return normalize_chord(exact)
    return rationalize_chord(tokens, cfg)


def _exact_rational_list(tokens: list[str]) -> list[Fraction] | None:
    """Rational lists like "1,5/4,3/2" parse exactly, without rescaling."""
    pitches = []
    for tok in tokens:
        tok = tok.strip()
        if "." in tok:
            return None
        try:
            pitches.append(Fraction(tok))
        except (ValueError, ZeroDivisionError):
            return None
    return pitches


def _parse_proportion_text(s: str) -> Chord:
    tokens = s.split(":")
    slashed = [tok.strip().startswith("/") for tok in tokens]
    offsets = []
    pos = 0
    for tok in tokens:
        offsets.append(pos)
        pos += len(tok) + 1
    if any(slashed) and not all(slashed):
        bad = slashed.index(not slashed[0])
        raise ParseError(s, offsets[bad], "cannot mix direct and inverse entries")
    pitches = []
    for tok, offset in zip(tokens, offsets):
        body = tok.strip().lstrip("/")
        try:
            n = int(body)
        except ValueError:
            raise ParseError(s, offset, f"expected an integer, got {tok.strip()!r}") from None
        if n < 1:
            raise ParseError(s, offset, f"proportion numbers must be >= 1, got {n}")
        pitches.append(Fraction(1, n) if slashed[0] else Fraction(n))
    return normalize_chord(pitches)


def _round_away(x: float, ndigits: int = 2) -> float:
    scale = 10.0**ndigits
    return math.copysign(math.floor(abs(x) * scale + 0.5) / scale, x)


def _fmt2(x: float) -> str:
    return f"{_round_away(x) + 0.0:.2f}"  # +0.0 drops any negative zero


def _report_payload(chord: Chord, report: EmotionReport) -> dict:
    pair = proportion_pair(chord)
    return {
        "direct": str(pair.direct),
        "inverse": str(pair.inverse),
        "group": pair.group.value,
        "classification": report.classification.value,
        "pwe": report.pwe,
        "pwe2": report.pwe2,
        "utilitarian": report.utilitarian,
        "flags": sorted(report.flags),
    }


def _rationalizer_config(args) -> RationalizationConfig:
    return RationalizationConfig(
        tolerance_cents=args.tolerance_cents,
        max_component=args.max_component,
        reference_freq=args.reference_freq,
    )


def _synth_config(args) -> SynthConfig:
    return SynthConfig(
        base_freq=args.base_freq,
        duration_s=args.duration,
        sample_rate=args.sample_rate,
        timbre=args.timbre,
        partial_count=args.partials,
        rolloff_db=args.rolloff_db,
        fade_ms=args.fade_ms,
        peak=args.peak,
    )


def _cmd_analyze(args) -> int:
    chord = parse_chord_spec(args.chord, _rationalizer_config(args))
    report = analyze(chord)
    payload = _report_payload(chord, report)
    if args.json:
        print(json.dumps(payload))
        return 0
    flags = ";".join(payload["flags"]) or "-"
    print(
        f"direct={payload['direct']} inverse={payload['inverse']} "
        f"group={payload['group']} classification={payload['classification']} "
        f"pwe={_fmt2(report.pwe)} pwe2={_fmt2(report.pwe2)} "
        f"utilitarian={_fmt2(report.utilitarian)} flags={flags}"
    )
    return 0


def _cmd_table(args) -> int:
    records = atlas.reference_triads()
    payload = atlas.export(records, "json" if args.json else "csv", args.output)
    if args.output is None:
        sys.stdout.write(payload.decode("ascii"))
    return 0


def _cmd_enumerate(args) -> int:
    records = atlas.enumerate_triads(args.max_n, octave_only=args.octave)
    payload = atlas.export(records, "json" if args.json else "csv", args.output)
    if args.output is None:
        sys.stdout.write(payload.decode("ascii"))
    return 0


def _cmd_map(args) -> int:
    records = atlas.enumerate_triads(args.max_n, octave_only=True)
    atlas.render_octave_map(records, args.output)
    return 0


def _wav_name(prefix: str, *chords: Chord) -> str:
    parts = ["-".join(str(n) for n in proportion_pair(c).direct.numbers) for c in chords]
    return prefix + "_" + "_vs_".join(parts) + ".wav"


def _cmd_synth(args) -> int:
    cfg = _synth_config(args)
    chord = parse_chord_spec(args.chord, _rationalizer_config(args))
    out = args.output or _wav_name("chord", chord)
    write_wav(render_chord(chord, cfg), cfg.sample_rate, out)
    print(f"wrote {out}")
    return 0


def _cmd_compare(args) -> int:
    cfg = _synth_config(args)
    rcfg = _rationalizer_config(args)
    a = parse_chord_spec(args.chord_a, rcfg)
    b = parse_chord_spec(args.chord_b, rcfg)
    out = args.output or _wav_name("compare", a, b)
    write_wav(render_comparison(a, b, args.gap, cfg), cfg.sample_rate, out)
    print(f"wrote {out}")
    return 0


def _cmd_rationalize(args) -> int:
    cfg = _rationalizer_config(args)
    chord = rationalize_chord(args.pitches.split(","), cfg)
    pair = proportion_pair(chord)
    pitches = ",".join(str(p) for p in chord.pitches)
    if args.json:
        print(
            json.dumps(
                {
                    "pitches": [str(p) for p in chord.pitches],
                    "direct": str(pair.direct),
                    "inverse": str(pair.inverse),
                }
            )
        )
        return 0
    print(f"pitches={pitches} direct={pair.direct} inverse={pair.inverse}")
    return 0


def _add_rationalizer_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tolerance-cents", type=float, default=20.0, metavar="T")
    p.add_argument("--max-component", type=int, default=64, metavar="Q")
    p.add_argument("--reference-freq", type=float, default=440.0, metavar="HZ")


def _add_synth_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--base-freq", type=float, default=220.0, metavar="HZ")
    p.add_argument("--duration", type=float, default=2.0, metavar="S")
    p.add_argument("--sample-rate", type=int, default=44100, metavar="HZ")
    p.add_argument("--timbre", choices=("pure", "harmonic"), default="pure")
    p.add_argument("--partials", type=int, default=8, metavar="N")
    p.add_argument("--rolloff-db", type=float, default=6.0, metavar="DB")
    p.add_argument("--fade-ms", type=float, default=10.0, metavar="MS")
    p.add_argument("--peak", type=float, default=0.9)


def _add_format_flags(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true", help="CSV output (default)")
    fmt.add_argument("--json", action="store_true", help="JSON output")
    p.add_argument("-o", "--output", metavar="FILE", help="write to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordpower",
        description="Chord proportion calculus: classification, power values, datasets, audio.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify a chord and print its power values")
    p.add_argument("chord")
    p.add_argument("--json", action="store_true")
    _add_rationalizer_flags(p)
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("table", help="emit the 22-row reference triad dataset")
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("enumerate", help="enumerate coprime triads up to a bound")
    p.add_argument("--max-n", type=int, required=True, metavar="N")
    p.add_argument("--octave", action="store_true", help="keep chords spanning <= one octave")
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("map", help="render the octave triad map as SVG")
    p.add_argument("--max-n", type=int, required=True, metavar="N")
    p.add_argument("-o", "--output", required=True, metavar="FILE")
    p.set_defaults(handler=_cmd_map)

    p = sub.add_parser("synth", help="render a chord to a WAV file")
    p.add_argument("chord")
    p.add_argument("-o", "--output", metavar="FILE")
    _add_synth_flags(p)
    _add_rationalizer_flags(p)
    p.set_defaults(handler=_cmd_synth)

    p = sub.add_parser("compare", help="render two chords back to back to a WAV file")
    p.add_argument("chord_a")
    p.add_argument("chord_b")
    p.add_argument("--gap", type=float, default=0.5, metavar="S")
    p.add_argument("-o", "--output", metavar="FILE")
    _add_synth_flags(p)
    _add_rationalizer_flags(p)
    p.set_defaults(handler=_cmd_compare)

    p = sub.add_parser("rationalize", help="convert a pitch list to an exact rational chord")
    p.add_argument("pitches")
    p.add_argument("--json", action="store_true")
    _add_rationalizer_flags(p)
    p.set_defaults(handler=_cmd_rationalize)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.handler(args)
    except IoFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ChordPowerError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()

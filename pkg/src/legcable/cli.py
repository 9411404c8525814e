"""Command line front end.

Every subcommand writes JSON or text to stdout (or ``--output FILE``).
Exit status is 0 on success, 2 when input is rejected (a JSON diagnostic
goes to stderr) and 1 when an internal consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .atlas import (
    LegendrianAtlas,
    MountainRange,
    atlas_to_json,
    is_legendrian_simple,
    is_transversely_simple,
    load_atlas,
    mountain_range,
)
from .errors import InternalInvariantError, ValidationError
from .farey import parse_slope, product, slope
from .llc import required_block, tb_upper_bound, yasui_width_bound
from .negcable import classify, format_report, load_tori_atlas
from .paths import enumerate_solid_torus, enumerate_thickened, shortest_path, tail
from .poscable import expand, positive_gate, transverse_intervals

__all__ = ["RenderSpec", "render_mountain_range", "run", "main", "SVG_SCALE"]

SVG_SCALE = 40  # pixels per lattice unit


@dataclass(frozen=True)
class RenderSpec:
    format: str = "ascii"
    tb_floor: Optional[int] = None
    label_mode: str = "counts"


def _label(mr: MountainRange, pt, mode: str) -> str:
    if mode == "counts":
        return str(mr.count(*pt))
    return "|".join(",".join(c.label() for c in group) for group in mr.points[pt])


def _render_ascii(mr: MountainRange, mode: str) -> str:
    pts = mr.sorted_points()
    labels = {pt: _label(mr, pt, mode) for pt in pts}
    cw = max(len(s) for s in labels.values())
    step = cw + 1
    rmin = min(r for r, _ in pts)
    rmax = max(r for r, _ in pts)
    tops = sorted({t for _, t in pts}, reverse=True)
    axis = max(len(str(t)) for t in tops)
    width = (rmax - rmin) * step + cw

    def center(r: int) -> int:
        return (r - rmin) * step + (cw - 1) // 2

    lines = [f"rot {rmin}..{rmax}, tb {tops[0]}..{tops[-1]}"]
    for t in tops:
        row = [" "] * width
        for r in range(rmin, rmax + 1):
            if (r, t) in labels:
                text = labels[(r, t)].center(cw)
                start = (r - rmin) * step
                row[start:start + cw] = text
        lines.append(f"{t:>{axis}} " + "".join(row).rstrip())
        if t == tops[-1]:
            break
        links = [" "] * width
        for r in range(rmin, rmax + 1):
            if (r, t) not in labels:
                continue
            for child in mr.children(r, t):
                mid = (center(r) + center(child[0])) // 2
                links[mid] = "/" if child[0] < r else "\\"
        lines.append(" " * (axis + 1) + "".join(links).rstrip())
    return "\n".join(lines) + "\n"


def _render_svg(mr: MountainRange, mode: str) -> str:
    pts = mr.sorted_points()
    rmin = min(r for r, _ in pts)
    rmax = max(r for r, _ in pts)
    tmax = max(t for _, t in pts)
    s = SVG_SCALE

    def xy(pt):
        return (pt[0] - rmin + 1) * s, (tmax - pt[1] + 1) * s

    w, h = (rmax - rmin + 2) * s, (tmax - mr.floor + 2) * s
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        '<g stroke="black" stroke-width="1">',
    ]
    for pt in pts:
        x0, y0 = xy(pt)
        for child in mr.children(*pt):
            x1, y1 = xy(child)
            out.append(f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}"/>')
    out.append("</g>")
    out.append('<g font-family="monospace" font-size="12" text-anchor="middle">')
    for pt in pts:
        x, y = xy(pt)
        out.append(f'<circle cx="{x}" cy="{y}" r="12" fill="white" stroke="black"/>')
        out.append(f'<text x="{x}" y="{y + 4}" data-rot="{pt[0]}" data-tb="{pt[1]}">{_label(mr, pt, mode)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_mountain_range(mr: MountainRange, spec: RenderSpec, name: str = "") -> str:
    if not mr.points:
        raise ValidationError("mountain range is empty", floor=mr.floor)
    if spec.format == "ascii":
        return _render_ascii(mr, spec.label_mode)
    if spec.format == "svg":
        return _render_svg(mr, spec.label_mode)
    if spec.format == "json":
        doc = {"atlas": name, **mr.to_json()}
        return json.dumps(doc, indent=2) + "\n"
    raise ValidationError(f"unknown render format {spec.format!r}")


def _render_atlas(atlas: LegendrianAtlas, fmt: str, floor: Optional[int], labels: str) -> str:
    if not atlas.generators:
        raise ValidationError("mountain range is empty", atlas=atlas.name)
    if floor is None:
        floor = atlas.max_tb - 2
    return render_mountain_range(mountain_range(atlas, floor), RenderSpec(fmt, floor, labels), atlas.name)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _load_atlas(path: str) -> LegendrianAtlas:
    try:
        return load_atlas(path)
    except OSError as exc:
        raise ValidationError(f"cannot read atlas file: {exc.strerror}", path=path) from exc


def _cmd_farey_path(args) -> str:
    s = parse_slope(args.slope)
    t = tail(s)
    return _dump({"path": shortest_path(s).to_json(), "tail": t.k, "continuation": [str(v) for v in t.continuation]})


def _cmd_farey_product(args) -> str:
    return _dump({"product": product(parse_slope(args.a), parse_slope(args.b))})


def _cmd_farey_tail(args) -> str:
    t = tail(parse_slope(args.slope), args.count)
    return _dump({"k": t.k, "step": t.step.to_json(), "continuation": [str(v) for v in t.continuation]})


def _tci_paths(args):
    if args.solid_torus is not None:
        return enumerate_solid_torus(parse_slope(args.solid_torus))
    if args.start is None or args.end is None:
        raise ValidationError("give --from and --to, or --solid-torus")
    return enumerate_thickened(parse_slope(args.start), parse_slope(args.end))


def _cmd_tci_enumerate(args) -> str:
    return _dump([d.to_json() for d in _tci_paths(args)])


def _cmd_tci_count(args) -> str:
    return f"{len(_tci_paths(args))}\n"


def _cmd_cable_positive(args) -> str:
    base = _load_atlas(args.atlas)
    cable = expand(base, args.p, args.q)
    if args.render:
        return _render_atlas(cable, args.render, args.floor, args.labels)
    if args.transverse:
        intervals = transverse_intervals(base, args.p, args.q, args.floor)
        cable = cable.with_meta(
            transverse=[{"companion": tc.to_json(), "cable_sl": sls} for tc, sls in intervals]
        )
    doc = atlas_to_json(cable)
    doc.setdefault("meta", {})["simple"] = {
        "legendrian": is_legendrian_simple(cable),
        "transverse": is_transversely_simple(cable),
    }
    return _dump(doc)


def _cmd_cable_negative(args) -> str:
    atlas, report = classify(load_tori_atlas_checked(args.tori))
    if args.render:
        return _render_atlas(atlas, args.render, args.floor, args.labels)
    if args.report:
        return format_report(report)
    return _dump(atlas_to_json(atlas.with_meta(report=report)))


def load_tori_atlas_checked(path: str):
    try:
        return load_tori_atlas(path)
    except OSError as exc:
        raise ValidationError(f"cannot read tori file: {exc.strerror}", path=path) from exc


def _cmd_cable_tb_bound(args) -> str:
    atlas = _load_atlas(args.atlas)
    return f"{tb_upper_bound(args.p, args.q, atlas.ceil_width, atlas.max_tb)}\n"


def _cmd_llc_check(args) -> str:
    m = required_block(args.tb, args.p, args.q)
    doc = {"p": args.p, "q": args.q, "tb": args.tb, "large": m is not None, "required_block": None}
    if m is not None:
        doc["required_block"] = {"center": str(slope(args.q, args.p)), "m": m, "length": 2 * m}
    return _dump(doc)


def _cmd_llc_bound(args) -> str:
    atlas = _load_atlas(args.atlas)
    bound = tb_upper_bound(args.p, args.q, atlas.ceil_width, atlas.max_tb)
    gate, source = positive_gate(atlas)
    return _dump({"p": args.p, "q": args.q, "bound": bound, "gate": {"bound": gate, "source": source}})


def _cmd_llc_yasui(args) -> str:
    return _dump({"m": args.m, **yasui_width_bound(args.m).to_json()})


def _cmd_render(args) -> str:
    return _render_atlas(_load_atlas(args.atlas), args.format, args.floor, args.labels)


class _Parser(argparse.ArgumentParser):
    """Treats "-12/5" as a value rather than an option."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")


def _parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", metavar="FILE", help="write the result to FILE instead of stdout")

    root = _Parser(prog="legcable", description="Legendrian and transverse cable classification toolkit")
    groups = root.add_subparsers(dest="group", required=True, parser_class=_Parser)

    farey = groups.add_parser("farey", help="Farey graph paths").add_subparsers(dest="cmd", required=True)
    p = farey.add_parser("path", parents=[common], help="minimal path from floor(s) to s, with its tail")
    p.add_argument("slope")
    p.set_defaults(func=_cmd_farey_path)
    p = farey.add_parser("product", parents=[common], help="determinant pairing of two slopes")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=_cmd_farey_product)
    p = farey.add_parser("tail", parents=[common], help="tail continuation past s")
    p.add_argument("slope")
    p.add_argument("--count", type=int)
    p.set_defaults(func=_cmd_farey_tail)

    tci = groups.add_parser("tci", help="tight contact structures on T^2 x I and solid tori").add_subparsers(
        dest="cmd", required=True
    )
    for name, func in (("enumerate", _cmd_tci_enumerate), ("count", _cmd_tci_count)):
        p = tci.add_parser(name, parents=[common])
        p.add_argument("--from", dest="start")
        p.add_argument("--to", dest="end")
        p.add_argument("--solid-torus", metavar="SLOPE")
        p.set_defaults(func=func)

    cable = groups.add_parser("cable", help="cable atlases").add_subparsers(dest="cmd", required=True)
    p = cable.add_parser("positive", parents=[common], help="cable atlas for q/p above the width")
    p.add_argument("--atlas", required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--transverse", action="store_true")
    p.add_argument("--floor", type=int)
    p.add_argument("--render", choices=("ascii", "svg", "json"))
    p.add_argument("--labels", choices=("counts", "ids"), default="counts")
    p.set_defaults(func=_cmd_cable_positive)
    p = cable.add_parser("negative", parents=[common], help="cable atlas from declared tori")
    p.add_argument("--tori", required=True)
    p.add_argument("--report", action="store_true", help="print the text report instead of JSON")
    p.add_argument("--floor", type=int)
    p.add_argument("--render", choices=("ascii", "svg", "json"))
    p.add_argument("--labels", choices=("counts", "ids"), default="counts")
    p.set_defaults(func=_cmd_cable_negative)
    p = cable.add_parser("tb-bound", parents=[common], help="upper bound on tb of cables")
    p.add_argument("--atlas", required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.set_defaults(func=_cmd_cable_tb_bound)

    llc = groups.add_parser("llc", help="large cables").add_subparsers(dest="cmd", required=True)
    p = llc.add_parser("check", parents=[common], help="balanced block needed for a cable of given tb")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("--tb", type=int, required=True)
    p.set_defaults(func=_cmd_llc_check)
    p = llc.add_parser("bound", parents=[common], help="tb upper bound with its gate")
    p.add_argument("--atlas", required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.set_defaults(func=_cmd_llc_bound)
    p = llc.add_parser("yasui", parents=[common], help="width lower bound for twist knots")
    p.add_argument("-m", type=int, required=True)
    p.set_defaults(func=_cmd_llc_yasui)

    p = groups.add_parser("render", parents=[common], help="draw an atlas's mountain range")
    p.add_argument("--atlas", required=True)
    p.add_argument("--floor", type=int)
    p.add_argument("--format", choices=("ascii", "svg", "json"), default="ascii")
    p.add_argument("--labels", choices=("counts", "ids"), default="counts")
    p.set_defaults(func=_cmd_render)
    return root


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.func(args)
    except ValidationError as exc:
        stderr.write(json.dumps(exc.details, sort_keys=True, default=str) + "\n")
        return 2
    except InternalInvariantError as exc:
        stderr.write(f"internal invariant violated: {exc}\n")
        return 1
    if args.output:
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            stderr.write(json.dumps({"error": "OutputError", "message": str(exc)}) + "\n")
            return 2
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())

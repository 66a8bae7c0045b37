"""Command-line front end.

Subcommands: ``qbg``, ``enumerate``, ``apply``, ``crystal``, ``verify``.
Exit codes: 0 success, 1 computation failure (a failed verify suite prints
its JSON report), 2 configuration or argument errors.  Output is
byte-deterministic for a fixed invocation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import crystal as crystal_mod
from . import serialize
from .errors import NodeCapError
from .qbg import build_qbg
from .qlspaths import enumerate_paths, shape_of
from .rootsys import RootSystem, root_system
from .serialize import to_json_str

SUITES = ("main", "charls", "scaling", "concat", "properties", "all")
DEFAULT_NODE_CAP = crystal_mod.DEFAULT_NODE_CAP


@dataclass
class Config:
    cartan_type: str
    weight: list[int] = field(default_factory=list)
    parabolic: list[int] = field(default_factory=list)
    node_cap: int = DEFAULT_NODE_CAP
    output_format: str = "json"

    def root_system(self) -> RootSystem:
        return root_system(self.cartan_type)

    def shape(self):
        rs = self.root_system()
        if len(self.weight) != rs.rank:
            raise ValueError(
                f"weight {self.weight} has {len(self.weight)} coordinates, "
                f"expected {rs.rank}"
            )
        return shape_of(rs, tuple(self.weight))


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def _config_from_args(args: argparse.Namespace) -> Config:
    cap = getattr(args, "node_cap", None)
    if cap is None:
        cap = int(os.environ.get("QLS_NODE_CAP", DEFAULT_NODE_CAP))
    return Config(
        cartan_type=args.type,
        weight=_int_list(getattr(args, "weight", "") or ""),
        parabolic=_int_list(getattr(args, "parabolic", "") or ""),
        node_cap=cap,
        output_format=getattr(args, "format", "json") or "json",
    )


# -- subcommand bodies ---------------------------------------------------------


def cmd_qbg(config: Config) -> tuple[int, str]:
    g = build_qbg(config.root_system(), config.parabolic)
    if config.output_format == "dot":
        return 0, serialize.qbg_to_dot(g)
    if config.output_format == "text":
        lines = [f"vertices: {len(g.vertices)}", f"edges: {len(g.edges)}"]
        for e in g.edges:
            label = ",".join(str(c) for c in e.label)
            lines.append(
                f"{serialize.word_str(e.source)} -> {serialize.word_str(e.target)}"
                f" [{label}] {e.kind}"
            )
        return 0, "\n".join(lines) + "\n"
    return 0, to_json_str(serialize.qbg_to_json(g))


def cmd_enumerate(config: Config, variant: str) -> tuple[int, str]:
    shape = config.shape()
    paths = enumerate_paths(shape, variant, cap=config.node_cap)
    if config.output_format == "text":
        return 0, "\n".join(serialize.render_path(p) for p in paths) + "\n"
    return 0, to_json_str([serialize.path_to_json(p) for p in paths])


def cmd_apply(config: Config, op: str, index: int, path_json: str) -> tuple[int, str]:
    shape = config.shape()
    eta = serialize.path_from_json(shape, json.loads(path_json))
    from .qlspaths import e_on_rational, f_on_rational

    func = f_on_rational if op == "f" else e_on_rational
    image = func(shape, eta, index)
    if image is None:
        return 0, "null\n"
    return 0, to_json_str(serialize.path_to_json(image))


def cmd_crystal(config: Config) -> tuple[int, str]:
    shape = config.shape()
    g = crystal_mod.closure(shape, node_cap=config.node_cap)
    if config.output_format == "dot":
        return 0, serialize.crystal_to_dot(g)
    if config.output_format == "text":
        lines = [f"nodes: {len(g.nodes)}", f"arrows: {len(g.arrows)}"]
        for s, j, t in g.arrows:
            lines.append(
                f"{serialize.render_path(g.nodes[s])} --{j}--> "
                f"{serialize.render_path(g.nodes[t])}"
            )
        return 0, "\n".join(lines) + "\n"
    return 0, to_json_str(serialize.crystal_to_json(g))


def cmd_verify(config: Config, suite: str) -> tuple[int, str]:
    shape = config.shape()
    reports = []
    if suite in ("main", "all"):
        reports.append(crystal_mod.verify_main(shape, node_cap=config.node_cap))
    if suite in ("charls", "all"):
        members = enumerate_paths(shape, "tilde", cap=config.node_cap)
        reports.append(crystal_mod.verify_charls(shape, members))
    if suite in ("scaling", "all"):
        for n in (2, 3):
            reports.append(
                crystal_mod.verify_scaling(shape, n, node_cap=config.node_cap)
            )
    if suite in ("concat", "all"):
        for n in (2, 3):
            reports.append(crystal_mod.verify_concat(shape, n, cap=config.node_cap))
    if suite in ("properties", "all"):
        reports.append(crystal_mod.verify_properties(shape, node_cap=config.node_cap))
    ok = all(r["pass"] for r in reports)
    payload = {"suite": suite, "pass": ok, "reports": reports}
    return (0 if ok else 1), to_json_str(payload)


# -- argument parsing -----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlscrystal",
        description="Quantum Bruhat graphs and quantum LS path crystals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, weight=True, fmt=("json", "dot", "text")):
        p.add_argument("--type", required=True, help="Cartan type, e.g. A2")
        if weight:
            p.add_argument(
                "--weight", required=True,
                help="comma-separated fundamental coordinates, e.g. 1,1",
            )
        p.add_argument("--format", choices=fmt, default="json")
        p.add_argument("--node-cap", type=int, default=None, dest="node_cap")

    p = sub.add_parser("qbg", help="build a parabolic quantum Bruhat graph")
    common(p, weight=False)
    p.add_argument(
        "--parabolic", default="",
        help="comma-separated parabolic indices, e.g. 2",
    )

    p = sub.add_parser("enumerate", help="enumerate quantum LS paths")
    common(p, fmt=("json", "text"))
    p.add_argument("--variant", choices=("tilde", "hat"), default="tilde")

    p = sub.add_parser("apply", help="apply a root operator to a path")
    common(p, fmt=("json",))
    p.add_argument("--op", choices=("e", "f"), required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--path", required=True, help="path as JSON")

    p = sub.add_parser("crystal", help="generate the crystal graph by closure")
    common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    common(p, fmt=("json",))
    p.add_argument("--suite", choices=SUITES, required=True)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = _config_from_args(args)
        if args.command == "qbg":
            code, out = cmd_qbg(config)
        elif args.command == "enumerate":
            code, out = cmd_enumerate(config, args.variant)
        elif args.command == "apply":
            code, out = cmd_apply(config, args.op, args.index, args.path)
        elif args.command == "crystal":
            code, out = cmd_crystal(config)
        else:
            code, out = cmd_verify(config, args.suite)
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NodeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    raise SystemExit(main())

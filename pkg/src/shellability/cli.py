"""Command-line interface.

Four subcommands: ``check`` decides a property (or an obstruction/hereditary
variant) for a complex read from a facet-list file, ``enumerate`` writes an
obstruction catalog, ``atlas`` emits the full dimension <= 2 obstruction
atlas, and ``indcycle`` prints the independence complex of a cycle graph.

Exit codes for ``check``: 0 when the queried predicate holds, 1 when it does
not, 2 on usage or parse errors.  All outputs are deterministic; --workers
only changes wall-clock time, never bytes.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import catalog as catalog_mod
from .cohen_macaulay import is_sequentially_cm
from .complexes import SimplicialComplex, face_vertices, format_complex, parse_complex
from .enumeration import (
    EnumerationTask,
    enumerate_obstructions,
    verify_coincidence,
)
from .graphs import cycle_graph, independence_complex
from .obstruction import is_hereditary, obstruction_report
from .partition import is_partitionable
from .properties import PropertyKind, satisfies
from .shelling import is_shellable

CHECK_SCHEMA = "shellability-check/1"

VARIANTS = ("plain", "hereditary", "obstruction", "strong-obstruction")


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: Optional[str] = None
    property: Optional[PropertyKind] = None
    variant: str = "plain"
    mode: str = "obstructions"
    dimension: Optional[int] = None
    cycle_length: Optional[int] = None
    max_vertices: Optional[int] = None
    workers: int = 1
    output: Optional[str] = None
    as_json: bool = False
    certificate: bool = False
    summary: bool = False
    compare: tuple[str, ...] = ()


def _face_words(mask: int) -> str:
    return "{" + ",".join(map(str, face_vertices(mask))) + "}"


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _certificate_lines(c: SimplicialComplex, prop: PropertyKind) -> tuple[list[str], dict]:
    lines: list[str] = []
    payload: dict = {}
    if prop is PropertyKind.SHELLABLE:
        decision = is_shellable(c)
        if decision.certificate is not None:
            cert = decision.certificate
            payload["shelling_order"] = [list(face_vertices(f)) for f in cert.ordering]
            payload["restriction_sets"] = [list(face_vertices(r)) for r in cert.restriction_sets]
            lines.append("shelling order (facet | restriction set):")
            for f, r in zip(cert.ordering, cert.restriction_sets):
                lines.append(f"  {_face_words(f)} | {_face_words(r)}")
        else:
            lines.append("no shelling exists; see the obstruction/hereditary variants for witnesses")
    elif prop is PropertyKind.PARTITIONABLE:
        decision = is_partitionable(c)
        if decision.certificate is not None:
            payload["intervals"] = [
                {"facet": list(face_vertices(sigma)), "bottom": list(face_vertices(tau))}
                for sigma, tau in decision.certificate.assignment
            ]
            lines.append("interval partition (bottom -> facet):")
            for sigma, tau in decision.certificate.assignment:
                lines.append(f"  [{_face_words(tau)}, {_face_words(sigma)}]")
        else:
            lines.append("no interval partition exists")
    else:
        report = is_sequentially_cm(c)
        if report.witness is not None:
            w = report.witness
            payload["witness"] = {
                "skeleton_dim": w.skeleton_dim,
                "face": list(face_vertices(w.face)),
                "degree": w.degree,
                "homology": str(w.group),
            }
            lines.append(
                f"witness: pure {w.skeleton_dim}-skeleton, link of {_face_words(w.face)} "
                f"has reduced H_{w.degree} = {w.group}"
            )
        else:
            lines.append("sequentially Cohen-Macaulay; every pure skeleton passes the homology checks")
    return lines, payload


def cmd_check(config: RunConfig) -> int:
    path = Path(config.input_path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return 2
    try:
        c = parse_complex(text)
    except ValueError as exc:
        print(f"error: {path}: {exc}", file=sys.stderr)
        return 2

    prop = config.property
    names = {
        PropertyKind.SHELLABLE: ("shellable", "nonshellable"),
        PropertyKind.PARTITIONABLE: ("partitionable", "not partitionable"),
        PropertyKind.SEQUENTIALLY_CM: ("sequentially Cohen-Macaulay", "not sequentially Cohen-Macaulay"),
    }
    lines: list[str] = []
    payload = {
        "schema": CHECK_SCHEMA,
        "input": str(path),
        "n_vertices": c.n_vertices,
        "dim": c.dim,
        "property": prop.value,
        "variant": config.variant,
    }

    if config.variant == "plain":
        holds = satisfies(c, prop)
        lines.append(names[prop][0] if holds else names[prop][1])
    elif config.variant == "hereditary":
        holds, failing = is_hereditary(c, prop)
        if holds:
            lines.append(f"hereditarily {names[prop][0]}")
        else:
            where = "the complex itself" if failing == c.vertices else _face_words(failing)
            lines.append(f"not hereditary: restriction to {where} fails")
            payload["failing_restriction"] = list(face_vertices(failing))
    else:
        report = obstruction_report(c, prop)
        if config.variant == "obstruction":
            holds = report.is_obstruction
        else:
            holds = report.is_strong
        kind = "strong obstruction" if config.variant == "strong-obstruction" else "obstruction"
        lines.append(f"{'is' if holds else 'is not'} a {kind} to {prop.value}")
        if report.failing_restriction is not None:
            lines.append(f"  restriction to {_face_words(report.failing_restriction)} also fails")
            payload["failing_restriction"] = list(face_vertices(report.failing_restriction))
        if report.failing_link is not None:
            lines.append(f"  link of {_face_words(report.failing_link)} fails the property")
            payload["failing_link"] = list(face_vertices(report.failing_link))

    payload["verdict"] = holds
    if config.certificate:
        cert_lines, cert_payload = _certificate_lines(c, prop)
        lines.extend(cert_lines)
        payload.update(cert_payload)
    _emit(payload, config.as_json, lines)
    return 0 if holds else 1


def cmd_enumerate(config: RunConfig) -> int:
    task = EnumerationTask(
        dimension=config.dimension,
        property=config.property,
        mode=config.mode,
        max_vertices=config.max_vertices,
    )
    found = enumerate_obstructions(task, workers=config.workers)
    entries = catalog_mod.build_entries(found)
    doc = catalog_mod.catalog_document(
        entries,
        kind="obstruction-catalog",
        dimension=task.dimension,
        property=task.property.value,
        mode=task.mode,
        max_vertices=task.resolved_max_vertices(),
    )
    text = catalog_mod.catalog_json(doc)
    if config.output:
        Path(config.output).write_text(text, encoding="utf-8")
        print(f"wrote {len(entries)} classes to {config.output}")
    else:
        sys.stdout.write(text)
    if config.summary:
        for line in catalog_mod.summary_lines(entries):
            print(line)
    for other in config.compare:
        report = verify_coincidence(task.dimension, task.max_vertices)
        tag = f"obstructions({task.property.value}) vs obstructions({other})"
        print(f"{tag}: {'IDENTICAL' if report.ok else 'DIFFERENT'}")
        if not report.ok:
            return 1
    return 0


def cmd_atlas(config: RunConfig) -> int:
    paths = catalog_mod.write_atlas(config.output, config.max_vertices or 7, config.workers)
    print(f"wrote {len(paths)} files under {config.output}")
    return 0


def cmd_indcycle(config: RunConfig) -> int:
    n = config.cycle_length
    c = independence_complex(cycle_graph(n))
    text = format_complex(c)
    if config.output:
        Path(config.output).write_text(text, encoding="utf-8")
        print(f"wrote independence complex of the {n}-cycle to {config.output}")
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shellability",
        description="Exact shellability, partitionability and sequential "
                    "Cohen-Macaulayness checks with obstruction catalogs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="decide a property for a facet-list file")
    p_check.add_argument("path")
    p_check.add_argument("--property", required=True,
                         help="shellable | partitionable | scm")
    p_check.add_argument("--variant", default="plain", choices=VARIANTS)
    p_check.add_argument("--json", action="store_true", dest="as_json")
    p_check.add_argument("--certificate", action="store_true")

    p_enum = sub.add_parser("enumerate", help="enumerate obstruction classes")
    p_enum.add_argument("--dim", type=int, required=True, choices=(0, 1, 2))
    p_enum.add_argument("--property", default="shellable")
    p_enum.add_argument("--max-vertices", type=int, default=None)
    p_enum.add_argument("--edge-minimal", action="store_true")
    p_enum.add_argument("--strong", action="store_true")
    p_enum.add_argument("--output", default=None)
    p_enum.add_argument("--summary", action="store_true")
    p_enum.add_argument("--compare", action="append", default=[],
                        help="second property; verifies the obstruction sets coincide")
    p_enum.add_argument("--workers", type=int, default=1)

    p_atlas = sub.add_parser("atlas", help="write the full dimension <= 2 obstruction atlas")
    p_atlas.add_argument("out_dir")
    p_atlas.add_argument("--max-vertices", type=int, default=7)
    p_atlas.add_argument("--workers", type=int, default=1)

    p_ind = sub.add_parser("indcycle", help="print the independence complex of an n-cycle")
    p_ind.add_argument("n", type=int)
    p_ind.add_argument("--output", default=None)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check":
            config = RunConfig(
                command="check",
                input_path=args.path,
                property=PropertyKind.from_name(args.property),
                variant=args.variant,
                as_json=args.as_json,
                certificate=args.certificate,
            )
            return cmd_check(config)
        if args.command == "enumerate":
            if args.edge_minimal and args.strong:
                print("error: --edge-minimal and --strong are exclusive", file=sys.stderr)
                return 2
            mode = "obstructions"
            if args.edge_minimal:
                mode = "edge_minimal_obstructions"
            elif args.strong:
                mode = "strong_obstructions"
            if args.workers < 1:
                print("error: --workers must be >= 1", file=sys.stderr)
                return 2
            config = RunConfig(
                command="enumerate",
                property=PropertyKind.from_name(args.property),
                mode=mode,
                dimension=args.dim,
                max_vertices=args.max_vertices,
                workers=args.workers,
                output=args.output,
                summary=args.summary,
                compare=tuple(args.compare),
            )
            return cmd_enumerate(config)
        if args.command == "atlas":
            config = RunConfig(
                command="atlas",
                max_vertices=args.max_vertices,
                workers=args.workers,
                output=args.out_dir,
            )
            return cmd_atlas(config)
        if args.command == "indcycle":
            config = RunConfig(command="indcycle", cycle_length=args.n, output=args.output)
            return cmd_indcycle(config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())

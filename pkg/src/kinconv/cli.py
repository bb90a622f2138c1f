"""Command-line interface: ``kinconv {convert,fk,validate,export-urdf}``.

Exit codes: 0 success, 1 validation or parse failure, 2 conversion
infeasible, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

import numpy as np

from kinconv import __version__, se3
from kinconv.convert import (
    NORMALS,
    PLACEMENTS,
    ConversionError,
    convert,
    gjd_to_rpyxyz,
    to_gjd,
)
from kinconv.documents import (
    DocumentError,
    dumps,
    read_document,
    to_document,
    write_text_atomic,
)
from kinconv.kinematics import fk
from kinconv.lines import GeometryError
from kinconv.model import ModelError, RpyXyzModel, validate
from kinconv.urdf import export_urdf

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INFEASIBLE = 2
EXIT_IO = 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit(text: str, out: Optional[str]):
    if out is None:
        sys.stdout.write(text)
    else:
        write_text_atomic(out, text)


def _load(args, check: bool = True):
    return read_document(args.model, check=check, tol=args.tol)


def _parse_q(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise CliError(f"--q: expected comma-separated numbers, got {text!r}", EXIT_INVALID)


def format_matrix(t: np.ndarray) -> str:
    rows = []
    for row in np.asarray(t):
        rows.append(" ".join(f"{v + 0.0:.9g}" for v in row))
    return "\n".join(rows) + "\n"


def cmd_convert(args) -> int:
    doc = _load(args)
    name = args.name if args.name is not None else doc.name
    if args.to == "urdf":
        rpy = doc.model
        if not isinstance(rpy, RpyXyzModel):
            rpy = gjd_to_rpyxyz(to_gjd(rpy, frames=args.frames, normal=args.normal))
        _emit(export_urdf(rpy, name or "robot").xml, args.out)
        return EXIT_OK
    result = convert(doc.model, args.to, frames=args.frames, normal=args.normal)
    _emit(dumps(to_document(result, name)), args.out)
    return EXIT_OK


def cmd_fk(args) -> int:
    doc = _load(args)
    q = _parse_q(args.q) if args.q else []
    try:
        pose = fk(doc.model, q)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INVALID)
    _emit(format_matrix(pose), args.out)
    return EXIT_OK


def cmd_validate(args) -> int:
    doc = _load(args, check=False)
    diagnostics = validate(doc.model, args.tol)
    for d in diagnostics:
        print(f"{args.model}: {d}")
    if diagnostics:
        return EXIT_INVALID
    print(f"{args.model}: ok ({doc.representation}, {doc.model.n} joints)")
    return EXIT_OK


def cmd_export_urdf(args) -> int:
    args.to = "urdf"
    return cmd_convert(args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kinconv",
        description="Convert serial-manipulator models between DH, PoE, RPY-XYZ "
        "and global joint frames; evaluate forward kinematics; export URDF.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out=True):
        p.add_argument("model", help="model document (JSON)")
        p.add_argument("--tol", type=float, default=se3.VALID_TOL,
                       help="validation tolerance (default: %(default)g)")
        if out:
            p.add_argument("--out", help="output path (default: stdout)")

    def placement(p):
        p.add_argument("--name", help="robot name written to the output")
        p.add_argument("--frames", choices=PLACEMENTS, default="dh",
                       help="joint frame placement for PoE input (default: %(default)s)")
        p.add_argument("--normal", choices=NORMALS, default="backward",
                       help="x-axis sign convention for placed frames (default: %(default)s)")

    p = sub.add_parser("convert", help="convert a model to another representation")
    common(p)
    p.add_argument("--to", required=True, choices=("dh", "poe", "rpyxyz", "gjd", "urdf"))
    placement(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("fk", help="print the 4x4 tool pose for joint displacements")
    common(p)
    p.add_argument("--q", default="", help='comma-separated displacements from home, e.g. "0.1,0,0.3"')
    p.set_defaults(func=cmd_fk)

    p = sub.add_parser("validate", help="check model invariants")
    common(p, out=False)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("export-urdf", help="write a minimal URDF for the model")
    common(p)
    placement(p)
    p.set_defaults(func=cmd_export_urdf)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"kinconv: error: {exc}", file=sys.stderr)
        return exc.code
    except (DocumentError, ModelError) as exc:
        print(f"kinconv: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ConversionError, GeometryError) as exc:
        print(f"kinconv: error: conversion failed: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except OSError as exc:
        print(f"kinconv: error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

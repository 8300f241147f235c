"""Command-line entry point.

Exit codes: 0 pass, 1 negative result, 2 I/O or parse failure,
3 internal assertion failure, 64 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .construction import (
    GF8,
    ConstructionError,
    build_context,
    build_delta,
    build_gamma,
    gamma_intersection_array,
)
from .digraph import Digraph, DsrgParams, antipodal_partition, transpose, verify_drg, verify_dsrg
from .formats import FormatError, read_digraph, write_digraph
from .gf2e import FieldSpec
from .isomorphism import aut_structure_report, automorphism_group, find_isomorphism
from .search import PARAMS, search_all

EXIT_OK, EXIT_NEGATIVE, EXIT_IO, EXIT_INTERNAL, EXIT_USAGE = 0, 1, 2, 3, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class InputError(Exception):
    pass


def _load(path, fmt) -> Digraph:
    try:
        return read_digraph(path, fmt)
    except (OSError, FormatError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _save(path, D, fmt, header) -> None:
    try:
        write_digraph(path, D, fmt, header)
    except OSError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _emit(D: Digraph, args, header) -> None:
    if args.out is None:
        from .formats import FORMATS
        sys.stdout.write(FORMATS[args.format][0](D, header))
    else:
        _save(args.out, D, args.format, header)


def _array_str(arr) -> str:
    return "{" + ",".join(map(str, arr[0])) + ";" + ",".join(map(str, arr[1])) + "}"


def cmd_gamma(args) -> int:
    F = args.field
    gamma = build_gamma(F)
    cert = verify_drg(gamma, gamma_intersection_array(F.q))
    print(f"# field {F}: {gamma.n} vertices")
    print(f"# {cert}")
    if not cert.passed:
        return EXIT_INTERNAL
    classes = antipodal_partition(gamma)
    print(f"# antipodal classes: {len(classes)} of size {len(classes[0])}")
    _emit(gamma, args, [f"field={F}", f"intersection array {_array_str(cert.found)}"])
    return EXIT_OK


def _check_expect(D: Digraph, path) -> bool:
    other = _load(path, None)
    if other.n != D.n:
        print(f"expect {path}: different vertex count")
        return False
    iso = find_isomorphism(D, other)
    print(f"expect {path}: {'isomorphic' if iso else 'NOT ISOMORPHIC'}")
    return iso is not None


def cmd_delta(args) -> int:
    ctx = build_context(GF8)
    D = build_delta(ctx, args.orbit)
    cert = verify_dsrg(D, PARAMS)
    print(f"# orbit {args.orbit}: {cert}")
    if not cert.passed:
        return EXIT_INTERNAL
    _emit(D, args, [f"field={GF8}", f"dsrg{PARAMS} orbit {args.orbit}"])
    if args.expect and not _check_expect(D, args.expect):
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_verify(args) -> int:
    D = _load(args.path, args.format)
    cert = verify_dsrg(D, args.params)
    print(cert)
    if cert.passed:
        return EXIT_OK
    if cert.witness is not None:
        print(f"witness entry: {cert.witness}")
    return EXIT_NEGATIVE


def cmd_search(args) -> int:
    ctx = build_context(GF8)
    res = search_all(ctx)
    print(f"candidates: {len(res.candidates)}")
    print(f"survivors: {len(res.survivors)}")
    print(f"classes: {len(res.classes)}")
    out_dir = Path(args.out_dir) if args.out_dir else None
    if out_dir is not None:
        try:
            out_dir.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            raise InputError(f"{out_dir}: {exc}") from exc
    for i, cls in enumerate(res.classes):
        cand, D = res.survivors[cls[0]]
        aut = automorphism_group(D)
        print(f"class {i}: {len(cls)} survivors, representative orbits {list(cand.orbit_indices)}, "
              f"|Aut| = {aut.order}")
        if out_dir is not None:
            path = out_dir / f"class{i}.mat"
            _save(path, D, "matrix01", [f"field={GF8}", f"dsrg{PARAMS} search class {i}"])
            print(f"  written to {path}")
    for path in args.expect or ():
        other = _load(path, None)
        hit = [i for i, D in enumerate(res.representatives)
               if D.n == other.n and find_isomorphism(other, D) is not None]
        print(f"expect {path}: {'class ' + str(hit[0]) if hit else 'NO MATCH'}")
        if not hit:
            return EXIT_NEGATIVE
    return EXIT_OK if len(res.classes) == 2 else EXIT_INTERNAL


def cmd_iso(args) -> int:
    if (args.second is None) == (args.transpose is None):
        raise _UsageError("give exactly one of a second file or --transpose FILE")
    D1 = _load(args.first, args.format)
    D2 = transpose(_load(args.transpose, args.format)) if args.transpose else \
        _load(args.second, args.format)
    if D1.n != D2.n:
        print("NOT ISOMORPHIC")
        return EXIT_NEGATIVE
    iso = find_isomorphism(D1, D2)
    if iso is None:
        print("NOT ISOMORPHIC")
        return EXIT_NEGATIVE
    print("ISOMORPHIC")
    print(iso.format())
    return EXIT_OK


def cmd_aut(args) -> int:
    D = _load(args.path, args.format)
    G = automorphism_group(D)
    print(f"order {G.order}")
    print(aut_structure_report(G))
    sys.stdout.write(G.format())
    return EXIT_OK


class _UsageError(Exception):
    pass


def _field(text):
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _params(text):
    try:
        return DsrgParams.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="conicdsrg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    fmt = dict(choices=["matrix01", "edgelist"], default="matrix01")

    g = sub.add_parser("gamma", help="build the conic graph over GF(2^e)")
    g.add_argument("--field", type=_field, default=GF8, help="e=<int>,mod=<hex>")
    g.add_argument("--out")
    g.add_argument("--format", **fmt)
    g.set_defaults(func=cmd_gamma)

    d = sub.add_parser("delta", help="build one of the two dsrg(63,11,8,1,2)")
    d.add_argument("--orbit", choices=["A", "B"], default="A")
    d.add_argument("--out")
    d.add_argument("--format", **fmt)
    d.add_argument("--expect", help="compare with this matrix up to isomorphism")
    d.set_defaults(func=cmd_delta)

    v = sub.add_parser("verify", help="check the dsrg identity for a digraph file")
    v.add_argument("--params", type=_params, required=True, help="v,k,t,lambda,mu")
    v.add_argument("--format", choices=["matrix01", "edgelist"])
    v.add_argument("path")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="exhaustive search under transitive L_2(8)")
    s.add_argument("--out-dir")
    s.add_argument("--expect", action="append")
    s.set_defaults(func=cmd_search)

    i = sub.add_parser("iso", help="test two digraph files for isomorphism")
    i.add_argument("first")
    i.add_argument("second", nargs="?")
    i.add_argument("--transpose", metavar="FILE", help="compare with the transpose of FILE")
    i.add_argument("--format", choices=["matrix01", "edgelist"])
    i.set_defaults(func=cmd_iso)

    a = sub.add_parser("aut", help="automorphism group of a digraph file")
    a.add_argument("path")
    a.add_argument("--format", choices=["matrix01", "edgelist"])
    a.set_defaults(func=cmd_aut)
    return p


def _validate_paths(args) -> None:
    for name in ("path", "first", "second", "transpose", "expect"):
        vals = getattr(args, name, None)
        for v in vals if isinstance(vals, list) else [vals]:
            if v is not None and not Path(v).is_file():
                raise InputError(f"{v}: no such file")
    out = getattr(args, "out", None)
    if out is not None and not Path(out).resolve().parent.is_dir():
        raise InputError(f"{out}: parent directory does not exist")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate_paths(args)
        return args.func(args)
    except _UsageError as exc:
        parser.error(str(exc))
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConstructionError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: build, stress, betti, socle, gvector, rigidity, verify.
Inputs come from a builder string ('cross:d=4') or a JSON file written
by `build`.  Every mathematical value printed is an exact rational; exit
codes are 0 (success / verified), 1 (refuted certificate), 2 (input or
precondition error).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebra, geom, stress, verify
from .geom import EmbeddedComplex, GeomError


def _load_instance(args) -> EmbeddedComplex:
    if getattr(args, "builder", None):
        return geom.from_builder_string(args.builder, seed=args.seed)
    if getattr(args, "infile", None):
        with open(args.infile) as fh:
            return EmbeddedComplex.from_json(json.load(fh))
    raise SystemExit2("need --builder or --in")


class SystemExit2(Exception):
    """Input / precondition error mapped to exit code 2."""


def _add_instance_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--builder", help="builder string, e.g. 'cross:d=4'")
    p.add_argument("--in", dest="infile", help="embedded complex JSON file")
    p.add_argument("--seed", type=int, default=0, help="seed for seeded builders")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="stresslab",
        description="exact stresses, socles and Betti tables of simplicial "
                    "polytopes and spheres",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build an instance and write JSON")
    _add_instance_args(p)
    p.add_argument("--out", required=True, help="output JSON path")

    p = sub.add_parser("stress", help="stress space dimensions and witnesses")
    _add_instance_args(p)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--edge", help="a,b: report participation of the edge")
    p.add_argument("--face", help="a,b,c,...: report participation of the face")
    p.add_argument("--dump", help="write the basis to this JSON path")

    p = sub.add_parser("betti", help="graded Betti tables")
    _add_instance_args(p)
    p.add_argument("--ring", choices=["r", "rbar", "both"], default="both")

    p = sub.add_parser("socle", help="socle dimensions of the reduction")
    _add_instance_args(p)

    p = sub.add_parser("gvector", help="f/h/g/m vectors")
    _add_instance_args(p)

    p = sub.add_parser("rigidity", help="infinitesimal rigidity report")
    _add_instance_args(p)

    p = sub.add_parser("verify", help="run claim certificates")
    p.add_argument("--claim", default="all",
                   help="claim id or 'all' (known: %s)" % ", ".join(sorted(verify.CLAIMS)))
    p.add_argument("--builder", help="run against one builder instance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--i", type=int, help="stress degree for Thm3.1 / Conj5.5")
    p.add_argument("--k", type=int, help="stackedness parameter for Cor1.4")
    p.add_argument("--edge", help="a,b missing edge for Lem5.2")
    p.add_argument("--apex", type=int, help="apex vertex for Lem5.4")
    p.add_argument("--jsonl", help="write certificates to this JSONL path")
    return ap


def _parse_vertex_list(s: str) -> tuple:
    try:
        return tuple(int(x) for x in s.split(","))
    except ValueError:
        raise SystemExit2(f"expected comma-separated vertex labels, got {s!r}")


def _cmd_build(args) -> int:
    ec = _load_instance(args)
    with open(args.out, "w") as fh:
        json.dump(ec.to_json(), fh, indent=1)
    print(f"wrote {args.out}  (n={ec.n}, d={ec.d}, kind={ec.kind}, seed={args.seed})")
    return 0


def _cmd_stress(args) -> int:
    ec = _load_instance(args)
    sb = stress.stress_space(ec, args.degree)
    print(f"seed={args.seed}")
    print(f"dim S_{args.degree} = {sb.dim}")
    if args.edge or args.face:
        face = _parse_vertex_list(args.edge or args.face)
        if not ec.complex.has_face(face):
            raise SystemExit2(f"not a face: {face}")
        part = stress.participates(sb, face)
        print(f"face {','.join(map(str, face))} participates: {part}")
        if part:
            for vec in sb.basis.basis.entries:
                w = stress.squarefree_part(vec, sb.monomial_index, args.degree)
                hit = [f for f in w.weights if set(face) <= set(f)]
                if hit:
                    print("witness stress (squarefree part):")
                    print(json.dumps(w.to_json(), indent=1))
                    break
    if args.dump:
        with open(args.dump, "w") as fh:
            json.dump(sb.to_json(), fh, indent=1)
        print(f"wrote basis to {args.dump}")
    return 0


def _cmd_betti(args) -> int:
    ec = _load_instance(args)
    print(f"seed={args.seed}")
    if args.ring in ("r", "both"):
        bt = algebra.hochster_betti(ec.complex)
        print("Betti table of the face ring (over the full polynomial ring):")
        print(bt.render())
    if args.ring in ("rbar", "both"):
        model = algebra.artinian_reduction(ec, algebra.THETA_ELL)
        kt = algebra.koszul_betti(model)
        print("Betti table of the Artinian reduction (over the small ring):")
        print(kt.render())
    return 0


def _cmd_socle(args) -> int:
    ec = _load_instance(args)
    model = algebra.artinian_reduction(ec, algebra.THETA_ELL)
    dims = algebra.socle_dims(model)
    print(f"seed={args.seed}")
    print("socle dimensions by degree:", dims)
    return 0


def _cmd_gvector(args) -> int:
    ec = _load_instance(args)
    fg = ec.complex.fgm_vectors()
    print(f"seed={args.seed}")
    print("f:", list(fg.f))
    print("h:", list(fg.h) if fg.h else None)
    print("g:", list(fg.g) if fg.g else None)
    print("m:", list(fg.m))
    return 0


def _cmd_rigidity(args) -> int:
    ec = _load_instance(args)
    rep = stress.rigidity_report(ec)
    print(f"seed={args.seed}")
    for key, val in rep.items():
        print(f"{key}: {val}")
    return 0


def _cmd_verify(args) -> int:
    kwargs = {}
    if args.i is not None:
        kwargs["i"] = args.i
    if args.k is not None:
        kwargs["k"] = args.k
    if args.edge:
        kwargs["edge"] = _parse_vertex_list(args.edge)
    if args.apex is not None:
        kwargs["apex"] = args.apex
    if args.claim == "all":
        certs = verify.run_all(seed=args.seed)
    else:
        certs = verify.run_claim(args.claim, builder=args.builder,
                                 seed=args.seed, **kwargs)
    for cert in certs:
        print(cert.summary())
    if args.jsonl:
        with open(args.jsonl, "w") as fh:
            verify.write_jsonl(certs, fh)
        print(f"wrote {len(certs)} certificates to {args.jsonl}")
    counts = {}
    for cert in certs:
        counts[cert.status] = counts.get(cert.status, 0) + 1
    print("summary:", ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    return 1 if counts.get(verify.REFUTED) else 0


_COMMANDS = {
    "build": _cmd_build,
    "stress": _cmd_stress,
    "betti": _cmd_betti,
    "socle": _cmd_socle,
    "gvector": _cmd_gvector,
    "rigidity": _cmd_rigidity,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (SystemExit2, GeomError, algebra.LsopFailure, algebra.CapExceeded,
            ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

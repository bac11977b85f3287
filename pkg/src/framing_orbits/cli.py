"""Command-line front end.  Every command reads JSON files and prints JSON.

Exit codes: 0 success, 1 malformed input, 2 infeasible or unsupported data,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import framing as fr
from . import oracle
from . import relative as rel
from . import spin
from .errors import FramingError, InfeasibleError, InvalidInputError
from .generators import word_to_json
from .surface import SurfaceSig, parse_surface, surface_to_json

EXIT_OK = 0
EXIT_VERIFY = 3
DEFAULT_SEED = 20240607


class VerificationError(FramingError):
    exit_code = EXIT_VERIFY


def _load(path: str) -> object:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path} is not valid JSON: {exc}") from None


def _quad_from_json(doc: object) -> spin.QuadForm:
    if not isinstance(doc, dict) or "base" not in doc:
        raise InvalidInputError("quadratic form must be an object with 'surface' and 'base'")
    sig = parse_surface(doc.get("surface"))
    base = doc["base"]
    if not isinstance(base, list):
        raise InvalidInputError("base must be a list of bits")
    return spin.QuadForm.from_bits(sig, base)


def _quad_to_json(omega: spin.QuadForm) -> dict:
    return {"surface": surface_to_json(omega.sig), "base": list(omega.base)}


# ---------------------------------------------------------------------------
# handlers


def cmd_surface_info(args: argparse.Namespace) -> dict:
    sig = SurfaceSig(args.genus, args.boundary)
    return {"surface": surface_to_json(sig), "b1": sig.rank,
            "euler_characteristic": sig.euler_characteristic}


def cmd_framing_classify(args: argparse.Namespace) -> dict:
    f = fr.framing_from_json(_load(args.file))
    out = {"framing": fr.framing_to_json(f), "key": fr.key_to_json(fr.orbit_key(f))}
    out["spin"] = list(fr.spin_of(f).base)
    return out


def cmd_framing_equiv(args: argparse.Namespace) -> dict:
    f1 = fr.framing_from_json(_load(args.first))
    f2 = fr.framing_from_json(_load(args.second))
    equivalent = fr.same_orbit(f1, f2)
    word = fr.equivalence_witness(f1, f2) if equivalent else None
    if word is not None and fr.apply_word(f1, word) != f2:
        raise VerificationError("equivalence witness failed to replay")
    return {"equivalent": equivalent,
            "witness": None if word is None else word_to_json(word)}


def cmd_framing_canon(args: argparse.Namespace) -> dict:
    f = fr.framing_from_json(_load(args.file))
    target, word = fr.canonicalize(f)
    if fr.orbit_key(target) != fr.orbit_key(f):
        raise VerificationError("canonical representative changed the orbit key")
    if word is not None and fr.apply_word(f, word) != target:
        raise VerificationError("canonical word failed to replay")
    return {"canonical": fr.framing_to_json(target),
            "word": None if word is None else word_to_json(word)}


def cmd_framing_realize(args: argparse.Namespace) -> dict:
    doc = _load(args.file)
    if not isinstance(doc, dict):
        raise InvalidInputError("realize expects an object with 'surface' and 'key'")
    sig = parse_surface(doc.get("surface"))
    key = fr.key_from_json(doc.get("key"))
    f = fr.realize(sig, key)
    if fr.orbit_key(f) != key:
        raise VerificationError("realized framing does not have the requested key")
    return {"framing": fr.framing_to_json(f), "key": fr.key_to_json(key)}


def cmd_spin_classify(args: argparse.Namespace) -> dict:
    omega = _quad_from_json(_load(args.file))
    return {"form": _quad_to_json(omega), **spin.describe(omega)}


def cmd_spin_equiv(args: argparse.Namespace) -> dict:
    w1 = _quad_from_json(_load(args.first))
    w2 = _quad_from_json(_load(args.second))
    x = spin.same_orbit(w1, w2)
    if x is not None and (spin.eval(w1, x) or spin.act_transvection(w1, x) != w2):
        raise VerificationError("witness class does not carry the first form to the second")
    return {"equivalent": x is not None, "witness": None if x is None else list(x.bits)}


def cmd_spin_orbits(args: argparse.Namespace) -> dict:
    sig = SurfaceSig(args.genus, args.boundary)
    part = oracle.enumerate_spin_orbits(sig)
    rows = oracle.spin_table(sig, part)
    agree = all(r["enumerated"] == r["predicted"] for r in rows)
    out = {"surface": surface_to_json(sig), "forms": 1 << sig.rank,
           "orbits": len(part.blocks), "fibers": rows, "agrees": agree}
    if not agree:
        raise VerificationError(json.dumps(out))
    return out


def cmd_rel_classify(args: argparse.Namespace) -> dict:
    f = rel.rel_from_json(_load(args.file))
    return {"framing": rel.rel_to_json(f), "key": rel.rel_key_to_json(rel.rel_orbit_key(f))}


def cmd_rel_canon(args: argparse.Namespace) -> dict:
    f = rel.rel_from_json(_load(args.file))
    target, word = rel.rel_canonicalize(f)
    if rel.rel_apply_word(f, word) != target:
        raise VerificationError("relative canonical word failed to replay")
    return {"canonical": rel.rel_to_json(target), "case": rel.rel_case(f),
            "word": word_to_json(word)}


def cmd_rel_equiv(args: argparse.Namespace) -> dict:
    f1 = rel.rel_from_json(_load(args.first))
    f2 = rel.rel_from_json(_load(args.second))
    equivalent = rel.rel_same_orbit(f1, f2)
    word = rel.rel_equivalence_witness(f1, f2) if equivalent else None
    if word is not None and rel.rel_apply_word(f1, word) != f2:
        raise VerificationError("relative equivalence witness failed to replay")
    return {"equivalent": equivalent,
            "witness": None if word is None else word_to_json(word)}


def cmd_rel_exists(args: argparse.Namespace) -> dict:
    b = rel.boundary_from_json(_load(args.file))
    if not rel.exists_relative(b):
        raise InfeasibleError(
            f"delta_nu sums to {sum(b.nu)}; a framing of {b.sig} needs {2 - 2 * b.sig.genus}"
        )
    return {"surface": surface_to_json(b.sig), "delta_nu": list(b.nu), "exists": True}


def cmd_verify(args: argparse.Namespace) -> dict:
    report = oracle.run_suite(args.suite, args.seed, args.max_size)
    if report["failures"]:
        raise VerificationError(json.dumps(report))
    return report


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framing-orbits",
        description="Mapping class group orbits of framings and spin structures on surfaces.",
    )
    top = parser.add_subparsers(dest="group", required=True)

    def sig_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("-g", "--genus", type=int, required=True)
        p.add_argument("-b", "--boundary", type=int, required=True,
                       help="number of boundary components (n+1)")

    surface = top.add_parser("surface").add_subparsers(dest="cmd", required=True)
    p = surface.add_parser("info", help="rank and Euler characteristic")
    sig_args(p)
    p.set_defaults(handler=cmd_surface_info)

    framing = top.add_parser("framing").add_subparsers(dest="cmd", required=True)
    for name, handler, help_ in (("classify", cmd_framing_classify, "orbit key"),
                                 ("canon", cmd_framing_canon, "canonical representative"),
                                 ("realize", cmd_framing_realize, "framing with a given key")):
        p = framing.add_parser(name, help=help_)
        p.add_argument("file")
        p.set_defaults(handler=handler)
    p = framing.add_parser("equiv", help="equivalence decision and witness word")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=cmd_framing_equiv)

    spin_p = top.add_parser("spin").add_subparsers(dest="cmd", required=True)
    p = spin_p.add_parser("classify", help="boundary restriction, orbit count, Arf")
    p.add_argument("file")
    p.set_defaults(handler=cmd_spin_classify)
    p = spin_p.add_parser("equiv", help="orbit decision and witness class")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=cmd_spin_equiv)
    p = spin_p.add_parser("orbits", help="exhaustive orbit enumeration against the count formula")
    sig_args(p)
    p.set_defaults(handler=cmd_spin_orbits)

    rel_p = top.add_parser("rel").add_subparsers(dest="cmd", required=True)
    for name, handler in (("classify", cmd_rel_classify), ("canon", cmd_rel_canon),
                          ("exists", cmd_rel_exists)):
        p = rel_p.add_parser(name)
        p.add_argument("file")
        p.set_defaults(handler=handler)
    p = rel_p.add_parser("equiv")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=cmd_rel_equiv)

    p = top.add_parser("verify", help="run the brute-force oracle suites")
    p.add_argument("--suite", choices=("spin", "abs", "rel", "all"), default="all")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--max-size", type=int, default=6,
                   help="largest first Betti number 2g+n to exercise (default 6)")
    p.set_defaults(handler=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else 1
    try:
        out = args.handler(args)
    except FramingError as exc:
        if isinstance(exc, VerificationError):
            print(str(exc))
        else:
            json.dump({"error": type(exc).__name__, "message": str(exc)}, sys.stdout)
            sys.stdout.write("\n")
        return exc.exit_code
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

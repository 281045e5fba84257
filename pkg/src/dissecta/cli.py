"""Command-line front end.

Subcommands: mobius, check, ji, val, dissect, faces, fpoly, mpoly, verify.
Reports render as text (default) or JSON (--format json) with identical
numeric content; rationals always print as p/q.  Exit codes: 0 success,
1 validation/parse error, 2 identity-check failure.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import files
from .dissection import (
    FaceProfile,
    chamber_statistic,
    f_polynomial,
    face_counts,
    mobius_polynomial,
    set_oracle_check,
)
from .errors import DissectaError, IdentityFailed, NotALattice, ParseError
from .incidence import mobius
from .lattice import lattice_from_poset
from .polynomial import Poly, Poly2
from .valuation import valuation_invariants, zaslavsky_check


class Report:
    """Deterministically serializable command result."""

    def __init__(self, command):
        self.command = command
        self.inputs = []
        self.results = {}
        self.warnings = []

    def add_input(self, path):
        self.inputs.append({"path": str(path), "sha256": files.digest(path)})

    def warn(self, message):
        self.warnings.append(message)

    def to_dict(self):
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": {k: _plain(v) for k, v in self.results.items()},
            "warnings": list(self.warnings),
        }

    def render(self, fmt):
        if fmt == "json":
            return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)
        lines = [f"command: {self.command}"]
        for inp in self.inputs:
            lines.append(f"input: {inp['path']} sha256={inp['sha256']}")
        lines.extend(_text_lines(self.results, ""))
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines)


def _plain(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else int(v)
    if isinstance(v, (Poly, Poly2)):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_plain(x) for x in v]
    return v


def _text_lines(mapping, prefix):
    lines = []
    for k, v in mapping.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            lines.extend(_text_lines(v, key + "."))
        else:
            pv = _plain(v)
            if isinstance(pv, list):
                pv = json.dumps(pv, ensure_ascii=False)
            lines.append(f"{key}: {pv}")
    return lines


def _load_lattice(path, report):
    report.add_input(path)
    doc = files.read_document(path)
    p = files.parse_poset(doc, path)
    return lattice_from_poset(p)


def _cmd_mobius(args, report):
    report.add_input(args.poset)
    doc = files.read_document(args.poset)
    p = files.parse_poset(doc, args.poset)
    mu = mobius(p)
    if args.src is not None or args.dst is not None:
        if args.src is None or args.dst is None:
            raise ParseError("--from and --to must be given together")
        report.results["from"] = args.src
        report.results["to"] = args.dst
        report.results["mobius"] = int(mu(args.src, args.dst))
    else:
        table = {}
        for i, a in enumerate(p.elements):
            for j, b in enumerate(p.elements):
                v = mu.values[i, j]
                if v:
                    table[f"{a} -> {b}"] = int(v)
        report.results["mobius"] = table
    return 0


def _cmd_check(args, report):
    report.add_input(args.poset)
    doc = files.read_document(args.poset)
    p = files.parse_poset(doc, args.poset)
    try:
        lat = lattice_from_poset(p)
    except NotALattice as e:
        report.results["lattice"] = False
        report.warn(str(e))
        return 0
    report.results["lattice"] = True
    report.results.update(lat.structure_check())
    return 0


def _cmd_ji(args, report):
    lat = _load_lattice(args.poset, report)
    data = lat.join_irreducibles()
    report.results["ji"] = list(data["ji"])
    report.results["lower_cover"] = dict(data["lower_cover"])
    return 0


def _cmd_val(args, report):
    lat = _load_lattice(args.poset, report)
    report.results.update(valuation_invariants(lat))
    if args.check_zaslavsky:
        report.add_input(args.check_zaslavsky)
        doc = files.read_document_any(args.check_zaslavsky)
        members = files.parse_member_list(doc, args.check_zaslavsky)
        verdicts = zaslavsky_check(lat, members)
        report.results["membership"] = {str(k): bool(v) for k, v in verdicts.items()}
        if not all(verdicts.values()):
            raise IdentityFailed("an induced idempotent escaped the relation submodule")
    return 0


def _cmd_dissect(args, report):
    report.add_input(args.arrangement)
    doc = files.read_document(args.arrangement)
    ap = files.parse_arrangement(doc, args.arrangement)
    stat = chamber_statistic(ap, args.chamber_chi)
    report.results["sum"] = stat["sum"]
    if "count" in stat:
        report.results["count"] = stat["count"]
        if stat["count"].denominator != 1:
            report.warn("chamber count is not an integer; check the input characteristics")
    return 0


def _parse_profile(path, ap):
    doc = files.read_document(path)
    cc = doc.get("chamber_chi_by_dim")
    if not isinstance(cc, dict):
        raise ParseError(f"{path}: missing 'chamber_chi_by_dim' object")
    fc = doc.get("flat_chi_by_dim")
    return FaceProfile(
        {int(k): int(v) for k, v in cc.items()},
        None if fc is None else {int(k): int(v) for k, v in fc.items()},
    )


def _default_profile(ap):
    return FaceProfile.alternating(ap.dim[ap.top]) if ap.dim else FaceProfile({})


def _cmd_faces(args, report):
    report.add_input(args.arrangement)
    doc = files.read_document(args.arrangement)
    ap = files.parse_arrangement(doc, args.arrangement)
    report.add_input(args.profile)
    profile = _parse_profile(args.profile, ap)
    counts = face_counts(ap, profile)
    report.results["faces"] = {str(k): v for k, v in counts.items()}
    if any(isinstance(v, Fraction) and v.denominator != 1 for v in counts.values()):
        report.warn("a face count is not an integer; check the input characteristics")
    return 0


def _cmd_fpoly(args, report):
    report.add_input(args.arrangement)
    doc = files.read_document(args.arrangement)
    ap = files.parse_arrangement(doc, args.arrangement)
    if args.profile:
        report.add_input(args.profile)
        profile = _parse_profile(args.profile, ap)
    else:
        profile = _default_profile(ap)
    poly = f_polynomial(ap, profile, args.convention)
    report.results["convention"] = args.convention
    report.results["f_polynomial"] = poly
    return 0


def _cmd_mpoly(args, report):
    report.add_input(args.arrangement)
    doc = files.read_document(args.arrangement)
    ap = files.parse_arrangement(doc, args.arrangement)
    report.results["mobius_polynomial"] = mobius_polynomial(ap)
    return 0


def _cmd_verify(args, report):
    report.add_input(args.setmodel)
    doc = files.read_document(args.setmodel)
    model = files.parse_set_model(doc, args.setmodel)
    out = set_oracle_check(model)
    report.results["lhs"] = out["lhs"]
    report.results["rhs"] = out["rhs"]
    report.results["equal"] = out["equal"]
    if out["d_size"] is not None:
        report.results["lattice_size"] = out["d_size"]
        report.results["irreducibles_among_generators"] = out["ji_contained"]
    if not out["equal"] or out["ji_contained"] is False:
        raise IdentityFailed("dissection identity failed on this model")
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    parser = argparse.ArgumentParser(
        prog="dissecta",
        description="Exact Mobius calculus, lattice valuations, and dissection counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("mobius", parents=[common], help="Mobius function values of a poset")
    sp.add_argument("poset")
    sp.add_argument("--from", dest="src")
    sp.add_argument("--to", dest="dst")
    sp.set_defaults(fn=_cmd_mobius)

    sp = sub.add_parser("check", parents=[common], help="lattice structure flags")
    sp.add_argument("poset")
    sp.set_defaults(fn=_cmd_check)

    sp = sub.add_parser("ji", parents=[common], help="join-irreducibles and lower covers")
    sp.add_argument("poset")
    sp.set_defaults(fn=_cmd_ji)

    sp = sub.add_parser("val", parents=[common], help="valuation module invariants")
    sp.add_argument("poset")
    sp.add_argument("--check-zaslavsky", metavar="M_FILE")
    sp.set_defaults(fn=_cmd_val)

    sp = sub.add_parser("dissect", parents=[common], help="chamber statistic of an arrangement")
    sp.add_argument("arrangement")
    sp.add_argument("--chamber-chi", type=int, default=None)
    sp.set_defaults(fn=_cmd_dissect)

    sp = sub.add_parser("faces", parents=[common], help="face counts by dimension")
    sp.add_argument("arrangement")
    sp.add_argument("--profile", required=True)
    sp.set_defaults(fn=_cmd_faces)

    sp = sub.add_parser("fpoly", parents=[common], help="face-count polynomial")
    sp.add_argument("arrangement")
    sp.add_argument("--convention", choices=("dim", "codim", "literal"), default="dim")
    sp.add_argument("--profile")
    sp.set_defaults(fn=_cmd_fpoly)

    sp = sub.add_parser("mpoly", parents=[common], help="two-variable Mobius polynomial")
    sp.add_argument("arrangement")
    sp.set_defaults(fn=_cmd_mpoly)

    sp = sub.add_parser("verify", parents=[common], help="dissection identity on a set model")
    sp.add_argument("setmodel")
    sp.set_defaults(fn=_cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    report = Report(args.command)
    try:
        code = args.fn(args, report)
    except IdentityFailed as e:
        report.warn(str(e))
        print(report.render(args.format))
        return 2
    except DissectaError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    print(report.render(args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command line driver.

Every subcommand reads a presentation file (or - for stdin) and prints a
report in either human-readable text or flat "key = value" machine form.
Exit codes: 0 success, 1 usage or input errors, 2 exhausted budget.
"""
from __future__ import annotations

import argparse
import sys

from . import presentation as pz
from .errors import BudgetExceededError, LieGsbError
from .gsb_assoc import envelope
from .gsb_lie import Caps, embed_two_generated, word_problem_homogeneous
from .speciality import check_speciality_criterion, nonspeciality_witness


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for budget overruns
    def error(self, message):
        self.print_usage(sys.stderr)
        print("%s: error: %s" % (self.prog, message), file=sys.stderr)
        sys.exit(1)


class _Report:
    """Accumulates output lines in one of the two formats."""

    def __init__(self, machine: bool):
        self.machine = machine
        self.lines: list = []

    def kv(self, key, value):
        if isinstance(value, bool):
            value = ("true" if value else "false") if self.machine else (
                "yes" if value else "no"
            )
        if self.machine:
            self.lines.append("%s = %s" % (key, value))
        else:
            self.lines.append("%s: %s" % (key, value))

    def caps(self, caps: Caps):
        if self.machine:
            self.kv("caps.max_x_deg", caps.max_x_deg)
            self.kv("caps.max_y_deg", caps.max_y_deg)
        else:
            self.kv(
                "caps", "max_x_deg=%d max_y_deg=%d" % (caps.max_x_deg, caps.max_y_deg)
            )

    def items(self, key, values):
        values = list(values)
        if self.machine:
            self.kv("%s.count" % key, len(values))
            for i, v in enumerate(values):
                self.kv("%s.%d" % (key, i), v)
        else:
            self.lines.append("%s (%d):" % (key, len(values)))
            for v in values:
                self.lines.append("  " + v)

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _load(path: str):
    if path == "-":
        return pz.parse_presentation(sys.stdin.read())
    return pz.parse_presentation_file(path)


def _caps(args) -> Caps:
    return Caps(args.max_x_deg, args.max_y_deg, args.max_elements, args.max_rounds)


def cmd_complete(args) -> str:
    pres = _load(args.file)
    caps = _caps(args)
    comp = pres.complete(caps, policy=args.policy, jobs=args.jobs)
    rep = _Report(args.format == "machine")
    rep.caps(caps)
    rep.kv("rounds", comp.rounds)
    rep.kv("adjoined", comp.adjoined)
    rep.kv("discarded", comp.discarded)
    rep.kv("skipped", comp.skipped)
    rep.kv("exact", comp.exact)
    rep.items(
        "elements", (pz.fmt_lie(e, pres.ygens, pres.xgens) for e in comp.elements)
    )
    return rep.text()


def cmd_check(args) -> str:
    pres = _load(args.file)
    caps = _caps(args)
    report = pres.check(caps, policy=args.policy, jobs=args.jobs)
    rep = _Report(args.format == "machine")
    rep.caps(caps)
    rep.kv("ok", report.ok)
    rep.kv("checked", report.checked)
    rep.kv("skipped", report.skipped)
    rep.kv("overcap", len(report.overcap))
    rep.items(
        "failures",
        (
            "%s at %s: %s"
            % (
                rec.kind,
                pz.fmt_word(rec.w[1], pres.xgens),
                pz.fmt_lie(rem, pres.ygens, pres.xgens),
            )
            for rec, rem in report.failures
        ),
    )
    return rep.text()


def cmd_nf(args) -> str:
    pres = _load(args.file)
    e = pz.parse_lie_element(pres, args.elem)
    v = pres.nf(e, policy=args.policy)
    out = pz.fmt_lie(v, pres.ygens, pres.xgens)
    if args.format == "machine":
        return "nf = %s\n" % out
    return out + "\n"


def cmd_irr(args) -> str:
    pres = _load(args.file)
    caps = _caps(args)
    comp = pres.complete(caps, policy=args.policy, jobs=args.jobs)
    basis = pres.irr(caps, elements=comp.elements)
    rep = _Report(args.format == "machine")
    rep.caps(caps)
    rep.kv("exact", comp.exact)
    rep.items(
        "irr",
        (pz.fmt_lie_monomial(ym, t, pres.ygens, pres.xgens) for ym, t in basis),
    )
    return rep.text()


def cmd_envelope(args) -> str:
    pres = _load(args.file)
    ap = envelope(pres)
    if args.format == "machine":
        rep = _Report(True)
        rep.kv("field", pz.fmt_field(ap.field))
        rep.kv("ygens", " ".join(ap.ygens))
        rep.kv("xgens", " ".join(ap.xgens))
        rep.items("rrels", (pz.fmt_poly(r, ap.ygens) for r in ap.rrels))
        rep.items("arels", (pz.fmt_assoc(a, ap.ygens, ap.xgens) for a in ap.arels))
        return rep.text()
    return pz.fmt_presentation(ap)


def cmd_special(args) -> str:
    pres = _load(args.file)
    caps = _caps(args)
    if args.witness is not None:
        w = pz.parse_lie_element(pres, args.witness)
        report = nonspeciality_witness(pres, w, caps, policy=args.policy, jobs=args.jobs)
    else:
        report = check_speciality_criterion(
            pres, caps, policy=args.policy, jobs=args.jobs
        )
    rep = _Report(args.format == "machine")
    rep.kv("verdict", report.verdict)
    rep.caps(caps)
    if report.exact is not None:
        rep.kv("exact", report.exact)
    if report.witness is not None:
        rep.kv("witness", pz.fmt_lie(report.witness, pres.ygens, pres.xgens))
    if report.nf_lie is not None:
        rep.kv("nf_lie", pz.fmt_lie(report.nf_lie, pres.ygens, pres.xgens))
    if report.nf_assoc is not None:
        rep.kv("nf_assoc", pz.fmt_assoc(report.nf_assoc, pres.ygens, pres.xgens))
    rep.items("notes", report.notes)
    return rep.text()


def cmd_embed2(args) -> str:
    pres = _load(args.file)
    pres2, mapping = embed_two_generated(pres)
    if args.format == "machine":
        rep = _Report(True)
        rep.kv("field", pz.fmt_field(pres2.field))
        rep.kv("ygens", " ".join(pres2.ygens))
        rep.kv("xgens", " ".join(pres2.xgens))
        rep.items("rrels", (pz.fmt_poly(r, pres2.ygens) for r in pres2.rrels))
        rep.items(
            "srels", (pz.fmt_lie(s, pres2.ygens, pres2.xgens) for s in pres2.srels)
        )
        for name in pres.xgens:
            rep.kv("map.%s" % name, pz.fmt_lie(mapping[name], pres2.ygens, pres2.xgens))
        return rep.text()
    doc = pz.fmt_presentation(pres2)
    lines = [
        "# %s -> %s" % (name, pz.fmt_lie(mapping[name], pres2.ygens, pres2.xgens))
        for name in pres.xgens
    ]
    return doc + "\n".join(lines) + "\n"


def cmd_wp(args) -> str:
    pres = _load(args.file)
    e = pz.parse_lie_element(pres, args.elem)
    member = word_problem_homogeneous(pres, e)
    rep = _Report(args.format == "machine")
    rep.kv("member", member)
    return rep.text()


def _build_parser() -> _Parser:
    ap = _Parser(
        prog="liegsb",
        description="Groebner-Shirshov bases for Lie algebras over commutative rings",
    )
    sub = ap.add_subparsers(dest="command", metavar="COMMAND", required=True)

    def add(name, fn, help, caps=False, elem=False, witness=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="presentation file, or - for stdin")
        p.add_argument("--format", choices=("text", "machine"), default="text")
        p.add_argument("--policy", choices=("first", "greatest"), default="first")
        p.add_argument("--jobs", type=int, default=1, help="worker threads")
        if caps:
            p.add_argument("--max-x-deg", type=int, required=True)
            p.add_argument("--max-y-deg", type=int, required=True)
            p.add_argument("--max-elements", type=int, default=2000)
            p.add_argument("--max-rounds", type=int, default=200)
        if elem:
            p.add_argument("--elem", required=True, help="element expression")
        if witness:
            p.add_argument("--witness", help="candidate witness expression")
        p.set_defaults(handler=fn)
        return p

    add("complete", cmd_complete, "close the relations under compositions", caps=True)
    add("check", cmd_check, "test whether the relations are already closed", caps=True)
    add("nf", cmd_nf, "normal form of an element against the given relations", elem=True)
    add("irr", cmd_irr, "irreducible monomial basis below the caps", caps=True)
    add("envelope", cmd_envelope, "associative envelope presentation")
    add(
        "special",
        cmd_special,
        "certify speciality, or verify a non-speciality witness",
        caps=True,
        witness=True,
    )
    add("embed2", cmd_embed2, "embed into a two-generated algebra")
    add("wp", cmd_wp, "membership for homogeneous Y-free presentations", elem=True)
    return ap


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        out = args.handler(args)
    except BudgetExceededError as exc:
        print("liegsb: %s" % exc, file=sys.stderr)
        return 2
    except (LieGsbError, OSError) as exc:
        print("liegsb: %s" % exc, file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

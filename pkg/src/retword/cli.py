"""Command-line front end.

Exit codes: 0 success, 1 negative or unstabilised verdict, 2 input error,
3 resource cap or window exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field

from . import __version__
from .analysis import bounds_report, detect_periodicity
from .errors import (InputError, InvalidSubstitution, ResourceError, RetwordError,
                     WindowTooSmall)
from .induced import (DEFAULT_COMPARE_DEPTH, DEFAULT_MAX_CARD, derived_set_fixed_point,
                      derived_set_image)
from .normalizer import letter_to_letter
from .returns import decode, derived_prefix
from .sequences import ExplicitOracle, FixedPointOracle, max_prefix_cap
from .specfile import dump_spec, load_morphism, load_spec
from .substitution import is_primitive, validate
from .words import Alphabet

log = logging.getLogger("retword")

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    input: str
    format: str = "text"
    output: str | None = None
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        for key in ("window", "max_prefix", "max_card", "cap"):
            value = self.options.get(key)
            if value is not None and value <= 0:
                raise InputError(f"--{key.replace('_', '-')} must be positive")
        if self.options.get("window") is not None and self.options["window"] < 2:
            raise InputError("--window must be >= 2")

    def to_dict(self):
        return {"input": self.input, "format": self.format, "output": self.output,
                **self.options}


class Emitter:
    """Collects text lines and a JSON result, and writes whichever was asked for."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.lines: list[str] = []
        self.results: dict = {}

    def line(self, text=""):
        self.lines.append(text)

    def document(self) -> dict:
        return {"tool": "retword", "version": __version__, "command": self.config.command,
                "config": self.config.to_dict(), "results": self.results}

    def flush(self):
        if self.config.format == "json":
            text = json.dumps(self.document(), indent=2) + "\n"
        else:
            text = "\n".join(self.lines) + ("\n" if self.lines else "")
        if self.config.output:
            with open(self.config.output, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _names(alphabet: Alphabet, word: str) -> str:
    return alphabet.render(word)


def _brackets(indices, limit=None) -> str:
    shown = list(indices if limit is None else indices[:limit])
    tail = ",…" if limit is not None and len(indices) > limit else ""
    return "[" + ",".join(map(str, shown)) + tail + "]"


def _oracle(s, config):
    return FixedPointOracle(s, max_prefix=config.options.get("cap"))


def cmd_validate(args, config, out: Emitter) -> int:
    s, _ = load_spec(args.spec)
    report = validate(s, strict=False)
    primitive, k = is_primitive(s)
    a = s.alphabet
    out.results = {
        "valid": report.ok,
        "condition_1": report.first_letter_ok,
        "condition_2": report.axiom_growing,
        "primitive": primitive,
        "primitivity_exponent": k,
        "growing": sorted(a.name(c) for c in report.growing),
        "bounded": sorted(a.name(c) for c in report.bounded),
    }
    out.line(f"valid: {'yes' if report.ok else 'no'}")
    if not report.first_letter_ok:
        out.line(f"  condition 1 fails: image of {a.name(s.axiom)} does not start with it")
    if not report.axiom_growing:
        out.line(f"  condition 2 fails: images of {a.name(s.axiom)} stay bounded")
    out.line(f"primitive: {'yes (k=' + str(k) + ')' if primitive else 'no'}")
    out.line("growing letters: " + " ".join(out.results["growing"]))
    out.line("bounded letters: " + (" ".join(out.results["bounded"]) or "none"))
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_fixpoint(args, config, out: Emitter) -> int:
    s, _ = load_spec(args.spec)
    if args.length < 0:
        raise InputError("--length must be nonnegative")
    x = _oracle(s, config).prefix(args.length)
    out.results = {"length": args.length, "prefix": s.alphabet.names_of(x)
                   if not s.alphabet.plain else x}
    if x:
        out.line(_names(s.alphabet, x))
    return EXIT_OK


def cmd_derive(args, config, out: Emitter) -> int:
    s, _ = load_spec(args.spec)
    n = args.prefix_len
    if n < 1:
        raise InputError("--prefix-len must be >= 1")
    if args.depth < 1:
        raise InputError("--depth must be >= 1")
    a = s.alphabet
    oracle = _oracle(s, config)
    window = args.window
    u = oracle.prefix(n)
    d = derived_prefix(oracle, u, window)
    levels = [{
        "level": 1,
        "prefix": a.names_of(u),
        "return_words": [a.names_of(w) for w in d.index.words],
        "status": d.index.status,
        "derived_prefix": list(d.indices),
    }]
    out.line(f"level 1: u = {_names(a, u)}")
    out.line("  H = " + ", ".join(f"{i}:{_names(a, w)}" for i, w in enumerate(d.index.words, 1)))
    out.line(f"  status: {d.index.status}")
    out.line(f"  derived prefix: {_brackets(d.indices, 60)}")

    ok = True
    current, w, w_index = d.indices, u, d.index
    for level in range(2, args.depth + 1):
        if len(current) < 2 * n:
            raise WindowTooSmall(f"derived prefix too short for level {level}; raise --window")
        seq = ExplicitOracle(Alphabet.indexed(max(current)).from_indices(current),
                             Alphabet.indexed(max(current)))
        v = seq.prefix(n)
        dv = derived_prefix(seq, v, len(current))
        v_indices = seq.alphabet.to_indices(v)
        w = decode(w_index, v_indices) + w
        dw = derived_prefix(oracle, w, window)
        overlap = min(len(dv.indices), len(dw.indices))
        same = dv.indices[:overlap] == dw.indices[:overlap] \
            and len(dv.index.words) == len(dw.index.words)
        ok &= same
        levels.append({
            "level": level,
            "prefix": list(v_indices),
            "return_words": [list(seq.alphabet.to_indices(x)) for x in dv.index.words],
            "status": dv.index.status,
            "derived_prefix": list(dv.indices),
            "composite_prefix_len": len(w),
            "nested_check_overlap": overlap,
            "nested_check_equal": same,
        })
        out.line(f"level {level}: v = {_brackets(v_indices)}")
        out.line("  H = " + ", ".join(f"{i}:{_brackets(seq.alphabet.to_indices(x))}"
                                      for i, x in enumerate(dv.index.words, 1)))
        out.line(f"  derived prefix: {_brackets(dv.indices, 60)}")
        out.line(f"  direct derivation over prefix of length {len(w)}: "
                 f"{'equal' if same else 'DIFFERENT'} on {overlap} symbols")
        current, w_index = dv.indices, dw.index
    out.results = {"levels": levels, "nested_check_ok": ok}
    return EXIT_OK if ok else EXIT_NEGATIVE


def _morphism_for(args, s, spec_morphism):
    if getattr(args, "morphism", None):
        return load_morphism(args.morphism, s.alphabet)
    return spec_morphism


def cmd_derived_set(args, config, out: Emitter) -> int:
    s, spec_morphism = load_spec(args.spec)
    m = _morphism_for(args, s, spec_morphism)
    kw = dict(compare_depth=args.compare_depth, jobs=args.jobs, max_card=args.max_card)
    if m is None:
        report = derived_set_fixed_point(s, args.max_prefix, args.stability_window, **kw)
    else:
        report = derived_set_image(s, m, args.max_prefix, args.stability_window, **kw)
    out.results = report.to_dict()
    verdict = "stabilized" if report.stabilized else "not stabilized"
    out.line(f"prefix lengths 1..{report.n_max}: {report.class_count} induced classes, "
             f"{report.sequence_class_count} distinct up to {report.compare_depth}")
    for c in report.classes:
        tau = "; ".join(f"{i}->{_brackets(img)}" for i, img in enumerate(c.induced.images, 1))
        out.line(f"  class {c.number} (first at |u|={c.first_seen_at_prefix_len}, "
                 f"{c.alphabet_size} letters): {tau}")
        if report.image:
            lam = "; ".join(f"{i}->{_brackets(img)}"
                            for i, img in enumerate(c.representative.images, 1))
            out.line(f"    lambda onto {c.sequence_alphabet_size} letters: {lam}")
    if report.image:
        out.line(f"max |lambda(i)| = {report.max_lambda_length}, "
                 f"observed M/L = {report.lambda_bound:.4g}")
    out.line(f"last new class at |u|={report.last_new_class_at}; verdict: {verdict}")
    if not report.primitive:
        out.line("note: substitution not primitive, minimality unverified")
    return EXIT_OK if report.stabilized else EXIT_NEGATIVE


def cmd_normalize(args, config, out: Emitter) -> int:
    s, spec_morphism = load_spec(args.spec)
    m = _morphism_for(args, s, spec_morphism)
    if m is None:
        raise InputError("normalize needs a morphism (spec field or --morphism)")
    pres = letter_to_letter(s, m)
    text = dump_spec(pres.tau, pres.chi)
    if args.write:
        with open(args.write, "w") as fh:
            fh.write(text)
    out.results = {"power_used": pres.power_used, "alphabet": list(pres.C.names),
                   "spec": json.loads(text)}
    if config.format == "text" and not args.write:
        out.line(text.rstrip("\n"))
    else:
        out.line(f"letter-to-letter presentation on {len(pres.C)} letters "
                 f"(power {pres.power_used})" + (f" written to {args.write}" if args.write else ""))
    return EXIT_OK


def cmd_analyze(args, config, out: Emitter) -> int:
    s, _ = load_spec(args.spec)
    oracle = _oracle(s, config)
    report = bounds_report(oracle, args.max_prefix, args.window,
                           complexity_n=args.complexity_n)
    verdict = detect_periodicity(oracle, args.max_prefix, args.window)
    out.results = {"bounds": report.to_dict(), "periodicity": str(verdict)}
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(out.document(), fh, indent=2)
            fh.write("\n")
    out.line(f"prefix lengths 1..{args.max_prefix}")
    out.line(f"  card(H): max K = {report.K}; series {report.cards}")
    out.line(f"  return length ratios: L = {report.L:.4g}, M = {report.M:.4g}")
    out.line(f"  m_n: {report.m}")
    out.line(f"  max power index over {report.power_window} symbols: {report.max_power_index}")
    if report.Q is not None:
        out.line(f"  growth ratio S/I (empirical Q): {report.Q:.4g}")
    if report.complexity:
        out.line(f"  complexity p(n): {report.complexity.counts}")
        out.line(f"  first differences: {report.complexity.differences}")
    out.line(f"  r = {report.r}, R = {report.R}")
    out.line(f"periodicity: {verdict}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="retword", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"retword {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--output", "-o", help="write output here instead of stdout")
    common.add_argument("--cap", type=int, default=None,
                        help="hard cap on generated prefix length "
                             "(default: $RETWORD_MAX_PREFIX or 10^7)")
    common.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a spec file")
    p.add_argument("spec")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("fixpoint", parents=[common], help="print a fixed-point prefix")
    p.add_argument("spec")
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(func=cmd_fixpoint)

    p = sub.add_parser("derive", parents=[common], help="return words and derived prefix")
    p.add_argument("spec")
    p.add_argument("--prefix-len", type=int, required=True)
    p.add_argument("--window", type=int, default=10_000)
    p.add_argument("--depth", type=int, default=1)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("derived-set", parents=[common], help="enumerate induced substitutions")
    p.add_argument("spec")
    p.add_argument("--max-prefix", type=int, required=True)
    p.add_argument("--stability-window", type=int, required=True)
    p.add_argument("--morphism", help="morphism file (default: the spec's morphism field)")
    p.add_argument("--compare-depth", type=int, default=DEFAULT_COMPARE_DEPTH)
    p.add_argument("--max-card", type=int, default=DEFAULT_MAX_CARD)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_derived_set)

    p = sub.add_parser("normalize", parents=[common], help="letter-to-letter presentation")
    p.add_argument("spec")
    p.add_argument("--morphism")
    p.add_argument("--write", help="write the presentation spec file here")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("analyze", parents=[common], help="bounds, periodicity, complexity")
    p.add_argument("spec")
    p.add_argument("--max-prefix", type=int, required=True)
    p.add_argument("--window", type=int, default=None)
    p.add_argument("--complexity-n", type=int, default=20)
    p.add_argument("--report", help="write the JSON report here")
    p.set_defaults(func=cmd_analyze)
    return parser


_OPTION_KEYS = ("length", "prefix_len", "window", "depth", "max_prefix", "stability_window",
                "morphism", "compare_depth", "max_card", "jobs", "write", "complexity_n",
                "report", "cap")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        options = {k: getattr(args, k) for k in _OPTION_KEYS if hasattr(args, k)}
        if options.get("cap") is None:
            options["cap"] = max_prefix_cap()
        config = RunConfig(args.command, args.spec, args.format, args.output, options)
        out = Emitter(config)
        code = args.func(args, config, out)
    except (ResourceError, WindowTooSmall) as exc:
        print(f"retword: resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (InputError, InvalidSubstitution) as exc:
        print(f"retword: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except RetwordError as exc:
        print(f"retword: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())

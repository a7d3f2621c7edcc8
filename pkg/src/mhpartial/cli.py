"""Command line: ``verify``, ``smash`` and ``gallery``.

Exit codes: 0 when every suite passes (or fails exactly where a failure is
expected), 1 on any other outcome, 2 on parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import coaction as co
from . import construct, mhopf, smash
from .algebra import Vec
from .defs import DefinitionError, build, decode_key, dense_document, dump, load
from .errors import InternalInconsistency, UnsupportedStructure, UsageError, WindowExhausted
from .gallery import make
from .report import EXPECTED_FAIL, PASS, REPORT_VERSION, CheckReport

MHA_SUITES = {
    "hopf": mhopf.check_hopf,
    "regular": mhopf.check_regular,
    "coassociativity": mhopf.check_coassociativity,
    "counit": mhopf.check_counit,
    "antipode": mhopf.check_antipode,
}
COACTION_SUITES = {
    "partial": co.check_partial_axioms,
    "symmetric": co.check_symmetric_axioms,
    "global": co.check_global_comodule,
    "globality": co.check_globality,
    "comodule_algebra": co.check_comodule_algebra,
}
SMASH_SUITES = ("smash", "smash_right_counit", "smash_iso", "T_tilde", "smash_T_bijective")
ALL_SUITES = sorted(set(MHA_SUITES) | set(COACTION_SUITES) | set(SMASH_SUITES) |
                    {"bialgebra", "T_bijective", "h_conditions", "projection", "induction"})


class Runner:
    """Runs suite requests against one bundle, caching smash structures."""

    def __init__(self, bundle, samples=200, seed=0):
        self.b = bundle
        self.samples = samples
        self.seed = seed
        self._smash = {}

    def smash_of(self, name):
        if name not in self._smash:
            self._smash[name] = smash.build_smash(self.b.coactions[name])
        return self._smash[name]

    def smash_options(self, name):
        return (self.b.smash or {}).get(name, {})

    def default_b(self, name, ss):
        opt = self.smash_options(name)
        if "b" in opt:
            return Vec({decode_key(k): self.b.field.parse(c) for k, c in opt["b"]}, self.b.field)
        return smash.default_b(ss)

    def run(self, spec) -> CheckReport:
        suite, target = spec["suite"], spec["target"]
        try:
            rep = self._dispatch(suite, target, spec)
        except (WindowExhausted, UnsupportedStructure) as exc:
            rep = CheckReport(suite)
            rep.inconclusive("evaluation", str(exc))
        except InternalInconsistency as exc:
            rep = CheckReport(suite)
            rep.fail("internal consistency", {"witness": str(exc.witness)}, str(exc), None)
        rep.data["target"] = target
        if spec.get("expect") == "fail":
            rep.expect_fail()
        return rep

    def _dispatch(self, suite, target, spec):
        b = self.b
        kw = {"samples": self.samples, "seed": self.seed}
        if suite in MHA_SUITES or (suite == "bialgebra" and target in b.algebras):
            A = b.algebra(target, "suite target")
            if suite == "bialgebra":
                return mhopf.check_bialgebra_structure(A, **kw)
            return MHA_SUITES[suite](A, **kw)
        if suite == "h_conditions":
            if target not in b.multipliers:
                raise DefinitionError("suite target", f"unknown multiplier {target!r}")
            A, h = b.multipliers[target]
            return construct.check_h_conditions(h, A)
        if suite == "projection":
            ps = b.projections.get(target)
            if ps is None:
                raise DefinitionError("suite target", f"unknown projection {target!r}")
            domain = ps.image_keys if spec.get("domain", "Z") == "Y" else None
            rep = construct.check_projection(ps, domain=domain)
            rep.data["domain"] = spec.get("domain", "Z")
            return rep
        cc = b.coaction(target, "suite target")
        if suite in COACTION_SUITES:
            return COACTION_SUITES[suite](cc, **kw)
        if suite == "bialgebra":
            return co.check_bialgebra(cc, **kw)
        if suite == "T_bijective":
            return co.check_T_bijective(cc)
        if suite == "induction":
            ps = b.projections.get(spec.get("projection"))
            if ps is None:
                raise DefinitionError("suite projection", "unknown projection")
            t = ps.Z.alg.key(decode_key(spec["t"]))
            return construct.check_induction_hypotheses(cc, ps, t, spec.get("quantify_over", "Z"))
        if suite in SMASH_SUITES:
            return self._smash_suite(suite, target)
        raise DefinitionError("suite", f"unknown suite {suite!r}")

    def _smash_suite(self, suite, target):
        ss = self.smash_of(target)
        if suite == "smash_right_counit":
            return smash.check_right_counit(ss)
        if suite == "T_tilde":
            return smash.check_T_tilde(ss)
        if suite == "smash_T_bijective":
            return smash.check_smash_T_bijective(ss)
        cb = smash.build_Cb(ss, self.default_b(target, ss))
        if suite == "smash_iso":
            rep = smash.check_iso_YhA(ss, cb)
            sub = self.smash_options(target).get("subgroup")
            if sub is not None and getattr(ss.A, "group", None) is not None:
                rep.merge(smash.check_restriction_AN(ss, [decode_key(g) for g in sub]), prefix="A_N")
            return rep
        rep = CheckReport("smash", window=f"{len(ss.keys())} keys")
        for sub in (smash.check_compatibility_bar(ss), smash.check_coassoc_bar(ss), smash.check_hom_bar(ss),
                    smash.check_left_counit(ss), smash.check_Cb(cb)):
            rep.merge(sub)
            rep.data.update({f"{sub.suite}.{k}": v for k, v in sub.data.items()})
        return rep


def select(bundle, suites):
    """Declared suite requests, filtered by name; undeclared names run on every fitting target."""
    declared = bundle.suites
    for i, s in enumerate(declared):
        if s["suite"] not in ALL_SUITES:
            raise DefinitionError(f"$.suites[{i}].suite", f"unknown suite {s['suite']!r}")
        if s.get("expect") not in (None, "fail"):
            raise DefinitionError(f"$.suites[{i}].expect", "only \"fail\" is allowed")
    if not suites:
        return list(declared)
    out = []
    for name in suites:
        if name not in ALL_SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from {', '.join(ALL_SUITES)}")
        hits = [s for s in declared if s["suite"] == name]
        if not hits:
            if name in MHA_SUITES:
                targets = sorted(bundle.algebras)
            elif name == "bialgebra":
                targets = sorted(bundle.coactions) or sorted(bundle.algebras)
            elif name == "h_conditions":
                targets = sorted(bundle.multipliers)
            elif name == "projection":
                targets = sorted(bundle.projections)
            else:
                targets = sorted(bundle.coactions)
            hits = [{"suite": name, "target": t} for t in targets]
        out.extend(hits)
    return out


def run_bundle(bundle, suites=None, samples=200, seed=0):
    runner = Runner(bundle, samples, seed)
    reps = [runner.run(s) for s in select(bundle, suites)]
    return sorted(reps, key=lambda r: (r.suite, r.data.get("target", "")))


def exit_code(reports):
    return 0 if all(r.status in (PASS, EXPECTED_FAIL) for r in reports) else 1


def render(bundle_name, reports, fmt):
    if fmt == "json":
        doc = {"report_version": REPORT_VERSION, "bundle": bundle_name, "exit": exit_code(reports),
               "reports": [r.to_dict() for r in reports]}
        return json.dumps(doc, indent=1, sort_keys=True) + "\n"
    lines = [f"bundle: {bundle_name}"]
    for r in reports:
        lines.append(f"-- target {r.data.get('target', '?')}")
        lines.append(r.to_text())
    lines.append(f"exit: {exit_code(reports)}")
    return "\n".join(lines) + "\n"


def _apply_window(doc, window):
    """Override the key window of every rule-backend algebra in ``doc``."""
    if window is None:
        return doc
    try:
        parts = [int(x) for x in window.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad --window {window!r}: expected N or P,Q") from exc
    if any(x < 0 for x in parts) or len(parts) > 2:
        raise UsageError(f"bad --window {window!r}: expected N or P,Q")
    for spec in doc.get("algebras", {}).values():
        if spec.get("builtin") == "A_Z":
            spec["radius"] = parts[0]
        elif spec.get("builtin") == "epdq":
            spec["window"] = [parts[0], parts[-1]]
    return doc


def _suite_list(values):
    out = []
    for v in values or []:
        out.extend(x for x in v.split(",") if x)
    return out


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- commands --------------------------------------------------------------------------------


def cmd_verify(args):
    with open(args.file, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DefinitionError("$", f"invalid JSON: {exc}") from exc
    bundle = build(_apply_window(doc, args.window))
    reports = run_bundle(bundle, _suite_list(args.suite), args.samples, args.seed)
    _emit(render(bundle.name, reports, args.report), args.out)
    return exit_code(reports)


def smash_document(bundle, name=None, samples=200, seed=0):
    """Build the partial smash coproduct of a coaction; returns ``(reports, document or None)``."""
    if name is None:
        names = sorted(bundle.smash or {}) or sorted(bundle.coactions)
        if not names:
            raise UsageError("the file defines no coaction")
        name = names[0]
    cc = bundle.coaction(name, "--coaction")
    runner = Runner(bundle, samples, seed)
    if not co.commutative(cc.A.alg):
        rep = CheckReport("smash").precondition_failed(f"{cc.A.name} is not commutative")
        rep.data["target"] = name
        return [rep], None
    reports = [runner.run({"suite": "bialgebra", "target": name}),
               runner.run({"suite": "smash", "target": name})]
    if exit_code(reports):
        return reports, None
    ss = runner.smash_of(name)
    cb = smash.build_Cb(ss, runner.default_b(name, ss))
    product, coproduct, counit, _ = smash.cb_structure(cb)
    labels = [" + ".join(f"{ss.field.fmt(c)}*{k}" for k, c in v.items()) for v in cb.basis]
    doc = dense_document(f"smash({bundle.name}:{name})", ss.field, labels, product, coproduct, counit)
    return reports, doc


def cmd_smash(args):
    bundle = load(args.file)
    reports, doc = smash_document(bundle, args.coaction, args.samples, args.seed)
    if doc is None:
        sys.stderr.write(render(bundle.name, reports, "text"))
        return 1
    _emit(dump(doc), args.out)
    return 0


def _gallery_params(extra):
    params = {}
    i = 0
    while i < len(extra):
        tok = extra[i]
        if not tok.startswith("--"):
            raise UsageError(f"unexpected argument {tok!r}")
        key = tok[2:]
        if "=" in key:
            key, val = key.split("=", 1)
        else:
            if i + 1 >= len(extra):
                raise UsageError(f"missing value for --{key}")
            i += 1
            val = extra[i]
        params[key.replace("-", "_")] = val
        i += 1
    return params


def cmd_gallery(args, extra):
    doc = make(args.name, **_gallery_params(extra))
    build(doc)
    _emit(dump(doc), args.out)
    return 0


def parser():
    p = argparse.ArgumentParser(prog="mhpartial", description="Exact verification of partial comodule "
                                "coalgebras over multiplier Hopf algebras.")
    sub = p.add_subparsers(dest="cmd", required=True)
    v = sub.add_parser("verify", help="run suites on a definition file")
    v.add_argument("file")
    v.add_argument("--suite", action="append", help=f"suite name(s), comma separated: {', '.join(ALL_SUITES)}")
    v.add_argument("--samples", type=int, default=200, help="random tuples for rule backends")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--window", help="rule-backend window: N or P,Q")
    v.add_argument("--report", choices=("json", "text"), default="text")
    v.add_argument("--out")
    s = sub.add_parser("smash", help="construct the partial smash coproduct as a dense file")
    s.add_argument("file")
    s.add_argument("--coaction")
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    g = sub.add_parser("gallery", help="export a built-in bundle; extra --key value pairs are parameters")
    g.add_argument("name")
    g.add_argument("--out")
    return p


def main(argv=None):
    p = parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args, extra = p.parse_known_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.cmd == "gallery":
            return cmd_gallery(args, extra)
        if extra:
            p.error(f"unrecognized arguments: {' '.join(extra)}")
        if args.cmd == "verify":
            return cmd_verify(args)
        return cmd_smash(args)
    except SystemExit as exc:
        return 2 if exc.code else 0
    except (UsageError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2

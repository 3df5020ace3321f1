"""Command-line front end.

    loopbraid lefschetz -n 4 "s1 s3"
    loopbraid periodic -n 4 "s1 s3" --p 2 --format machine
    loopbraid verify -n 4 --seed 7

Exit status: 0 success, 2 parse/usage error, 3 validation error,
4 oracle mismatch or failed verification.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .braidword import (
    BraidWord,
    IndexOutOfRange,
    Kind,
    WordSyntaxError,
    all_words,
    cycle_decomposition,
    induced_permutation,
    parse_word,
    random_word,
    render_word,
)
from .chains import aut_of_word, chain_matrix_of_word, fox_jacobian, verify_aut_relations, \
    verify_chain_relations
from .dynamics import (
    LefschetzReport,
    OracleMismatch,
    circle_periods,
    lefschetz_report,
    periodic_bound,
)
from .laurent import LaurentPolynomial
from .rep import PolyMatrix, RepKind, burau, project_mu, rep_of_word, verify_relations

COMMANDS = ("lefschetz", "matrix", "burau", "periodic", "perm", "verify", "survey")

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_ORACLE = 0, 2, 3, 4

CAVEAT = ("assumes the blow-up of f along C adds no fixed points "
          "(e.g. C contains no fixed points of f)")


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    n: int
    word_text: str = ""
    p: Optional[int] = None
    output_format: str = "text"
    seed: Optional[int] = None
    max_len: Optional[int] = None

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.n < 1:
            raise UsageError(f"-n must be at least 1, got {self.n}")
        if self.command == "periodic":
            if self.p is None:
                raise UsageError("periodic requires --p")
            if self.p < 1:
                raise UsageError(f"--p must be at least 1, got {self.p}")
        elif self.p is not None:
            raise UsageError("--p is only valid for the periodic command")
        if self.output_format not in ("text", "machine"):
            raise UsageError(f"unknown format {self.output_format!r}")


# -- rendering helpers -------------------------------------------------------

def _poly_terms(p: LaurentPolynomial) -> list:
    return [{"coeff": c, "exp": list(e)} for e, c in p.items()]


def _cycles_str(cycles) -> str:
    return "; ".join(f"t{j} <- {{{', '.join(map(str, c))}}}" for j, c in enumerate(cycles, start=1))


def _linking_str(exps) -> str:
    return "(" + ", ".join(str(e) for e in exps) + ")"


def _report_dict(rep: LefschetzReport) -> dict:
    sub = rep.sublinks()
    return {
        "n": rep.word.n,
        "word": render_word(rep.word),
        "mu_cycles": sub,
        "polynomial": _poly_terms(rep.polynomial),
        "classes": [
            {"linking": list(c.linking), "index": c.index, "sublinks": sub}
            for c in rep.classes
        ],
        "nielsen_lower_bound": rep.nielsen_lower_bound,
        "paper_conformance": rep.paper_conformance.value,
        "paper_polynomial": rep.paper_value.render("t") if rep.paper_value is not None else None,
        "oracle_agreement": True,
    }


def _report_text(rep: LefschetzReport) -> list:
    w = rep.word
    lines = [
        f"word        {render_word(w) or '(identity)'}  in LB_{w.n}",
        f"mu          {rep.mu}",
        f"cycles      {_cycles_str(rep.cycles.cycles)}",
        f"L(f)        {rep.polynomial.render('t')}",
        "oracle      agrees (group-ring chain matrices)",
        "",
    ]
    sub = " ".join(f"A{j}={{{','.join(map(str, c))}}}" for j, c in enumerate(rep.cycles.cycles, start=1))
    rows = [("class", "linking vector", "index", "sub-links")]
    for k, c in enumerate(rep.classes, start=1):
        rows.append((str(k), _linking_str(c.linking), f"{c.index:+d}", sub))
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    for r in rows:
        lines.append(" | ".join(x.ljust(wd) for x, wd in zip(r[:3], widths)) + " | " + r[3])
    lines.append("")
    lines.append(f"Nielsen lower bound: {rep.nielsen_lower_bound}")
    lines.append(f"index sum: {rep.index_sum}")
    conf = rep.paper_conformance.value
    if rep.paper_value is not None:
        conf += f" (published value {rep.paper_value.render('t')}, computed {rep.polynomial.render('t')})"
    lines.append(f"paper conformance: {conf}")
    lines.append(f"caveat: {CAVEAT}")
    return lines


def _matrix_block(name: str, M: PolyMatrix, prefix: str) -> list:
    return [f"{name} ="] + ["  " + row for row in M.render(prefix).splitlines()]


# -- commands ----------------------------------------------------------------

def _cmd_lefschetz(w: BraidWord, cfg: CliConfig):
    rep = lefschetz_report(w)
    if cfg.output_format == "machine":
        return _report_dict(rep)
    return _report_text(rep)


def _cmd_periodic(w: BraidWord, cfg: CliConfig):
    rep = lefschetz_report(w)
    pb = periodic_bound(w, cfg.p)
    if cfg.output_format == "machine":
        d = _report_dict(rep)
        d["periodic"] = {
            "p": pb.p,
            "trace_polynomial": _poly_terms(pb.trace_poly),
            "M": pb.M,
            "n_p": pb.n_p,
            "raw_bound": pb.raw_bound,
            "clamped_bound": pb.clamped_bound,
        }
        return d
    lines = _report_text(rep)
    lines += [
        "",
        f"p           {pb.p}",
        f"trace poly  {pb.trace_poly.render('t')}",
        f"M           {pb.M}  (monomials with gcd(p, |i|) = 1)",
        f"n_p         {pb.n_p}  (circles whose minimal period divides p)",
        f"bound       |Per_p| >= {pb.clamped_bound}  (raw p*(M - n_p) = {pb.raw_bound})",
    ]
    return lines


def _cmd_matrix(w: BraidWord, cfg: CliConfig):
    cd = cycle_decomposition(induced_permutation(w))
    R = rep_of_word(RepKind.R, w)
    Rb = rep_of_word(RepKind.RBAR, w)
    S = Rb - R
    mats = {
        "R": (R, "a"), "Rbar": (Rb, "a"), "S": (S, "a"),
        "R_mu": (project_mu(R, cd), "t"), "Rbar_mu": (project_mu(Rb, cd), "t"),
        "S_mu": (project_mu(S, cd), "t"),
    }
    if cfg.output_format == "machine":
        d = {"n": w.n, "word": render_word(w), "mu_cycles": [list(c) for c in cd.cycles]}
        for name, (M, prefix) in mats.items():
            d[name] = M.to_lists(prefix)
        return d
    lines = [f"word {render_word(w) or '(identity)'} in LB_{w.n}; cycles {_cycles_str(cd.cycles)}"]
    for name, (M, prefix) in mats.items():
        lines += _matrix_block(name, M, prefix)
    return lines


def _cmd_burau(w: BraidWord, cfg: CliConfig):
    # single variable: print t rather than t1
    rows = [[e.render("t").replace("t1", "t") for e in r] for r in burau(w).rows]
    if cfg.output_format == "machine":
        return {"n": w.n, "word": render_word(w), "burau": rows}
    return ["[" + ", ".join(r) + "]" for r in rows]


def _cmd_perm(w: BraidWord, cfg: CliConfig):
    mu = induced_permutation(w)
    cd = cycle_decomposition(mu)
    periods = circle_periods(w)
    if cfg.output_format == "machine":
        return {
            "n": w.n, "word": render_word(w), "mu": list(mu.images),
            "mu_cycles": [list(c) for c in cd.cycles],
            "periods": [[i, p] for i, p in periods],
        }
    return [
        f"mu       {mu}",
        f"images   {' '.join(f'{i}->{j}' for i, j in enumerate(mu.images, start=1))}",
        f"cycles   {[list(c) for c in cd.cycles]}  (m = {cd.m})",
        f"periods  {', '.join(f'circle {i}: {p}' for i, p in periods)}",
    ]


def _cmd_verify(cfg: CliConfig):
    n = cfg.n
    seed = 0 if cfg.seed is None else cfg.seed
    max_len = 6 if cfg.max_len is None else cfg.max_len
    rng = random.Random(seed)
    results = []  # (name, passed, total)
    if n >= 2:
        checks = verify_relations(n)
        results.append(("relations R/Rbar", sum(c.holds for c in checks), len(checks)))
        checks = verify_chain_relations(n)
        results.append(("relations A1/A2", sum(c.holds for c in checks), len(checks)))
        checks = verify_aut_relations(n)
        results.append(("relations Aut(F_n)", sum(c.holds for c in checks), len(checks)))
    corpus = [random_word(rng, n, rng.randint(0, max_len)) for _ in range(200)]
    ok1 = ok2 = okf = oki = 0
    for w in corpus:
        ok1 += chain_matrix_of_word(1, w).abelianize() == rep_of_word(RepKind.R, w)
        ok2 += chain_matrix_of_word(2, w).abelianize() == rep_of_word(RepKind.RBAR, w)
        okf += fox_jacobian(aut_of_word(w)).abelianize() == rep_of_word(RepKind.R, w)
        try:
            oki += lefschetz_report(w).index_sum == 1
        except OracleMismatch:
            pass
    total = len(corpus)
    results += [
        ("oracle Ab(A1) = R", ok1, total),
        ("oracle Ab(A2) = Rbar", ok2, total),
        ("Fox Jacobian = R", okf, total),
        ("index sum = 1 (with oracle gate)", oki, total),
    ]
    all_ok = all(p == t for _, p, t in results)
    if cfg.output_format == "machine":
        out = {
            "n": n, "seed": seed, "max_len": max_len,
            "checks": [{"name": name, "passed": p, "total": t} for name, p, t in results],
            "ok": all_ok,
        }
    else:
        out = [f"{'PASS' if p == t else 'FAIL'}  {name}: {p}/{t}" for name, p, t in results]
        out.append(f"seed {seed}, max length {max_len}: {'all checks passed' if all_ok else 'FAILURES'}")
    return out, (EXIT_OK if all_ok else EXIT_ORACLE)


def _cmd_survey(cfg: CliConfig):
    n = cfg.n
    max_len = 3 if cfg.max_len is None else cfg.max_len
    rows = []
    for w in all_words(n, max_len):
        rep = lefschetz_report(w)
        rows.append({
            "word": render_word(w),
            "mu_cycles": rep.sublinks(),
            "polynomial": rep.polynomial.render("t"),
            "classes": rep.nielsen_lower_bound,
            "cancels": rep.polynomial == LaurentPolynomial.one(rep.cycles.m),
            "rho_only": all(g.kind is Kind.RHO for g in w.gens),
            "single_cycle": rep.cycles.m == 1,
            "paper_conformance": rep.paper_conformance.value,
        })
    if cfg.output_format == "machine":
        return {"n": n, "max_len": max_len, "rows": rows}
    cols = ["word", "mu_cycles", "polynomial", "classes", "cancels", "rho_only", "single_cycle",
            "paper_conformance"]
    lines = ["\t".join(cols)]
    for r in rows:
        vals = []
        for c in cols:
            v = r[c]
            if c == "word":
                v = v or "1"
            elif c == "mu_cycles":
                v = "".join("(" + " ".join(map(str, cyc)) + ")" for cyc in v)
            elif isinstance(v, bool):
                v = "yes" if v else "no"
            vals.append(str(v))
        lines.append("\t".join(vals))
    single = [r for r in rows if r["single_cycle"]]
    lines.append(f"# {len(rows)} words; {sum(r['cancels'] for r in rows)} with polynomial 1; "
                 f"single-cycle words {len(single)}, of which {sum(r['cancels'] for r in single)} cancel")
    return lines


def run(cfg: CliConfig) -> tuple:
    """Execute a command; returns (exit status, stdout text, stderr text)."""
    try:
        cfg.validate()
        status = EXIT_OK
        if cfg.command == "verify":
            out, status = _cmd_verify(cfg)
        elif cfg.command == "survey":
            out = _cmd_survey(cfg)
        else:
            w = parse_word(cfg.word_text, cfg.n)
            out = {
                "lefschetz": _cmd_lefschetz,
                "periodic": _cmd_periodic,
                "matrix": _cmd_matrix,
                "burau": _cmd_burau,
                "perm": _cmd_perm,
            }[cfg.command](w, cfg)
    except UsageError as e:
        return EXIT_USAGE, "", f"usage error: {e}\n"
    except WordSyntaxError as e:
        return EXIT_USAGE, "", f"syntax error: {e}\n"
    except IndexOutOfRange as e:
        return EXIT_VALIDATION, "", f"validation error: {e}\n"
    except OracleMismatch as e:
        return EXIT_ORACLE, "", f"oracle mismatch: {e}\n"
    if isinstance(out, (dict, list)) and cfg.output_format == "machine":
        text = json.dumps(out, indent=2, ensure_ascii=False) + "\n"
    else:
        text = "\n".join(out) + "\n"
    return status, text, ""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="loopbraid",
                                     description="Lefschetz polynomials of loop braids.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("-n", type=int, required=True, help="number of circles/strands")
        if name in ("verify", "survey"):
            sp.add_argument("word", nargs="?", default="", help=argparse.SUPPRESS)
        else:
            sp.add_argument("word", help='braid word, e.g. "s1 s3" or "σ1 ρ2\'"')
        sp.add_argument("--format", dest="output_format", choices=("text", "machine"), default="text")
        if name == "periodic":
            sp.add_argument("--p", "-p", type=int, required=True, help="period")
        if name in ("verify", "survey"):
            sp.add_argument("--max-len", type=int, default=None)
        if name == "verify":
            sp.add_argument("--seed", type=int, default=None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = CliConfig(
        command=args.command,
        n=args.n,
        word_text=args.word,
        p=getattr(args, "p", None),
        output_format=args.output_format,
        seed=getattr(args, "seed", None),
        max_len=getattr(args, "max_len", None),
    )
    status, out, err = run(cfg)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())

"""Command-line driver.

    confstab generators --n 3 --p 3 --max-degree 10 --max-weight 9
    confstab hilbert --n 4 --coeff Q --max 20 --format json
    confstab stability --n 3 --p 3 --max 20
    confstab certify --n 6 --q 2 --coeff Q --k-max 1000
    confstab oracle-rp --n 4 --p 3
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .certify import TRIVIAL, TWISTED, ComplementProfile, certify_range, rn_slope
from .errors import ConfStabError
from .generators import FORMAL_S, EnumerationBounds, enumerate_generators
from .hilbert import hilbert_by_enumeration, hilbert_by_product, rational_by_product, rational_table
from .operations import check_prime
from .oracle import c2_oracle
from .stability import (
    HYPOTHESIS,
    RangeFunction,
    check_theorem_range,
    empirical_ranges,
    monotonicity_violations,
    verify_unstable_facts,
)

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_CONFIG = 2
EXIT_ENGINE_MISMATCH = 3

MAX_N = 64
MAX_P = 97
MAX_BOUND = 512
MAX_K_CERTIFY = 100_000
DEFAULT_WEIGHT = 10


class ConfigError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int
    coeff: Optional[Union[int, str]]
    max_degree: Optional[int]
    max_weight: Optional[int]
    mode: str = "formal"
    fmt: str = "tsv"
    output: Optional[str] = None
    unsafe_large: bool = False

    @property
    def bounds(self) -> EnumerationBounds:
        return EnumerationBounds(self.max_degree, self.max_weight)


def _parse_coeff(text):
    if text is None:
        return None
    if text.upper() == "Q":
        return "Q"
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"--coeff must be an odd prime or Q, got {text!r}") from None


def build_config(args) -> RunConfig:
    coeff = _parse_coeff(args.coeff)
    if args.p is not None:
        if coeff is not None and coeff != args.p:
            raise ConfigError("--p and --coeff disagree")
        coeff = args.p
    if isinstance(coeff, int):
        try:
            check_prime(coeff)
        except ConfStabError as exc:
            raise ConfigError(f"coefficients: {exc}") from None
    D = getattr(args, "max_degree", None)
    K = getattr(args, "max_weight", None)
    both = getattr(args, "max", None)
    if both is not None:
        D = both if D is None else D
        K = both if K is None else K
    if K is None:
        K = DEFAULT_WEIGHT
    if D is None:
        # nothing of weight <= K lives above degree n*K
        D = args.n * K if args.unsafe_large else min(args.n * K, MAX_BOUND)
    cfg = RunConfig(args.command, args.n, coeff, D, K, getattr(args, "mode", "formal"),
                    args.format, args.output, args.unsafe_large)
    validate(cfg)
    return cfg


def validate(cfg: RunConfig):
    if cfg.n < 2:
        raise ConfigError(f"--n must be >= 2, got {cfg.n}")
    if cfg.max_degree < 0:
        raise ConfigError("--max-degree must be >= 0")
    if cfg.max_weight < 1:
        raise ConfigError("--max-weight must be >= 1")
    if not cfg.unsafe_large:
        if cfg.n > MAX_N:
            raise ConfigError(f"--n must be <= {MAX_N} without --unsafe-large")
        if isinstance(cfg.coeff, int) and cfg.coeff > MAX_P:
            raise ConfigError(f"--p must be <= {MAX_P} without --unsafe-large")
        if cfg.max_degree > MAX_BOUND or cfg.max_weight > MAX_BOUND:
            raise ConfigError(f"--max-degree and --max-weight must be <= {MAX_BOUND} without --unsafe-large")
    if cfg.mode != "formal":
        raise ConfigError(f"unknown --mode {cfg.mode!r}; only 'formal' is available from the command line")


def workers() -> int:
    try:
        return max(1, int(os.environ.get("CONFSTAB_THREADS", "1")))
    except ValueError:
        return 1


def emit(text: str, path: Optional[str]):
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".confstab-")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _need_prime(cfg, what):
    if not isinstance(cfg.coeff, int):
        raise ConfigError(f"{what} needs an odd prime: pass --p")


def cmd_generators(cfg: RunConfig):
    _need_prime(cfg, "generators")
    gens = enumerate_generators(cfg.n, cfg.coeff, cfg.bounds, FORMAL_S, workers=workers())
    emit(gens.to_json() if cfg.fmt == "json" else gens.to_text(), cfg.output)
    return EXIT_OK


def _tables(cfg):
    if cfg.coeff is None:
        raise ConfigError("pass --p or --coeff Q")
    if cfg.coeff == "Q":
        return rational_table(cfg.n, cfg.bounds), rational_by_product(cfg.n, cfg.bounds), None
    gens = enumerate_generators(cfg.n, cfg.coeff, cfg.bounds, FORMAL_S, workers=workers())
    return hilbert_by_enumeration(gens), hilbert_by_product(gens), gens


def cmd_hilbert(cfg: RunConfig):
    first, second, _ = _tables(cfg)
    if not first.same_entries(second):
        sys.stderr.write("engine disagreement at (i, k, first, second):\n")
        for row in first.diff(second)[:20]:
            sys.stderr.write(f"  {row}\n")
        return EXIT_ENGINE_MISMATCH
    emit(first.to_json() if cfg.fmt == "json" else first.to_tsv(), cfg.output)
    return EXIT_OK


def cmd_stability(cfg: RunConfig):
    table, other, gens = _tables(cfg)
    if not table.same_entries(other):
        sys.stderr.write("engine disagreement; refusing to check stability\n")
        return EXIT_ENGINE_MISMATCH
    slope = Fraction(1) if cfg.n > 2 else Fraction(1, 2)
    main = check_theorem_range(table, slope)
    slope_one = main if slope == 1 else check_theorem_range(table, 1)
    lemma = verify_unstable_facts(gens) if gens is not None else None
    mono = monotonicity_violations(table)
    ok = main.passed and not mono and (lemma is None or lemma.passed)

    if cfg.fmt == "json":
        data = {
            "claim": main.claim,
            "grid": main.grid,
            "pass": ok,
            "counterexamples": main.counterexamples,
            "caveats": main.caveats,
            "slope_one": slope_one.to_dict(),
            "unstable_facts": lemma.to_dict() if lemma else None,
            "monotonicity_violations": [list(v) for v in mono],
            "ranges": {str(k): v for k, v in main.ranges.r.items()},
        }
        emit(json.dumps(data, indent=2) + "\n", cfg.output)
    else:
        verdict = lambda b: "PASS" if b else "FAIL"
        lines = [f"{verdict(main.passed)}  {main.claim}"]
        if slope != 1:
            lines.append(f"{verdict(slope_one.passed)}  {slope_one.claim}")
            for c in slope_one.counterexamples:
                lines.append(f"    not onto at (i, k) = ({c['i']}, {c['k']})")
        if lemma is not None:
            counts = ", ".join(f"{f}: {lemma.checked[f]}" for f in ("i", "ii", "iii"))
            lines.append(f"{verdict(lemma.passed)}  unstable-class facts ({counts} checks)")
        lines.append(f"{verdict(not mono)}  dimension monotonicity dim(i,k) <= dim(i,k+1)")
        for c in main.caveats:
            lines.append(f"note: {c}")
        lines.append("k\tr(k)")
        for k, r in main.ranges.r.items():
            lines.append(f"{k}\t{r}{'+' if k in main.ranges.clamped else ''}")
        emit("\n".join(lines) + "\n", cfg.output)
    return EXIT_OK if ok else EXIT_CLAIM_FAILED


def _input_range(args, cfg, k_max):
    source = args.slope_source
    if source is None:
        source = "explicit" if args.input_slope is not None else "formula"
    if source == "explicit":
        if args.input_slope is None:
            raise ConfigError("--slope-source explicit needs --input-slope")
        try:
            slope = Fraction(args.input_slope)
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"cannot parse --input-slope {args.input_slope!r}") from None
        return RangeFunction.linear(slope, k_max, HYPOTHESIS)
    if source == "formula":
        if cfg.coeff is None:
            raise ConfigError("--slope-source formula needs --p or --coeff Q")
        if cfg.n < 3:
            raise ConfigError("--slope-source formula needs --n >= 3")
        return RangeFunction.linear(rn_slope(cfg.n, cfg.coeff), k_max, HYPOTHESIS)
    # table
    if cfg.max_weight <= k_max:
        raise ConfigError("--slope-source table needs --max-weight > --k-max")
    table, _, _ = _tables(cfg)
    return empirical_ranges(table)


def cmd_certify(args, cfg: RunConfig):
    if args.q is None or not 1 <= args.q <= cfg.n:
        raise ConfigError(f"--q must lie in [1, {cfg.n}]")
    if args.k_max < 0 or (args.k_max > MAX_K_CERTIFY and not cfg.unsafe_large):
        raise ConfigError(f"--k-max must lie in [0, {MAX_K_CERTIFY}]")
    profile = ComplementProfile.from_codim(cfg.n, args.q, args.orientation)
    cert = certify_range(_input_range(args, cfg, args.k_max), profile, args.k_max)
    if cfg.fmt == "json":
        emit(cert.to_json(), cfg.output)
    else:
        rows = ["k\tr(k)\tj"]
        for k, (r, j) in enumerate(zip(cert.certified.to_list(), cert.trace)):
            rows.append(f"{k}\t{'inf' if r is None else r}\t{'' if j is None else j}")
        emit("\n".join(rows) + "\n", cfg.output)
    return EXIT_OK


def cmd_oracle_rp(cfg: RunConfig):
    if cfg.coeff is None:
        raise ConfigError("pass --p or --coeff Q")
    dims = c2_oracle(cfg.n, cfg.coeff)
    if cfg.fmt == "json":
        emit(json.dumps({"space": f"RP^{cfg.n - 1}", "coeff": cfg.coeff,
                         "homology": {str(i): d for i, d in dims.items()}}, indent=2) + "\n", cfg.output)
    else:
        emit("".join(f"{i}\t{d}\n" for i, d in dims.items()), cfg.output)
    return EXIT_OK


def make_parser():
    parser = argparse.ArgumentParser(prog="confstab", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, bounds=True):
        p.add_argument("--n", type=int, required=True, help="ambient dimension")
        p.add_argument("--p", type=int, help="odd prime")
        p.add_argument("--coeff", help="odd prime or Q")
        if bounds:
            p.add_argument("--max-degree", type=int)
            p.add_argument("--max-weight", type=int)
            p.add_argument("--max", type=int, help="sets both bounds")
            p.add_argument("--mode", default="formal")
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")
        p.add_argument("--output", help="write here (atomically) instead of stdout")
        p.add_argument("--unsafe-large", action="store_true", help="lift the size guardrails")

    common(sub.add_parser("generators", help="list Dyer-Lashof generator words"))
    common(sub.add_parser("hilbert", help="dimension table of H_*(C_k(R^n))"))
    common(sub.add_parser("stability", help="check the stability range on computed tables"))
    cert = sub.add_parser("certify", help="certify a range for M with M - X = R^n")
    common(cert)
    cert.add_argument("--q", type=int, help="codimension of X")
    cert.add_argument("--input-slope", help="slope of the range for R^n, e.g. 1 or 5/2")
    cert.add_argument("--slope-source", choices=("explicit", "formula", "table"))
    cert.add_argument("--k-max", type=int, default=100)
    cert.add_argument("--orientation", choices=(TRIVIAL, TWISTED), default=TRIVIAL)
    common(sub.add_parser("oracle-rp", help="homology of RP^(n-1) from cellular chains"), bounds=False)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        cfg = build_config(args)
        if args.command == "generators":
            return cmd_generators(cfg)
        if args.command == "hilbert":
            return cmd_hilbert(cfg)
        if args.command == "stability":
            return cmd_stability(cfg)
        if args.command == "certify":
            return cmd_certify(args, cfg)
        return cmd_oracle_rp(cfg)
    except ConfigError as exc:
        sys.stderr.write(f"confstab: config error: {exc}\n")
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())

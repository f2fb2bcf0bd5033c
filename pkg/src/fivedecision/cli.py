"""Command-line surface.

Subcommands:

    decide      run all three decision procedures on two-group data
    power       directional rejection probabilities at a given effect
    samplesize  required n for a target power, strict and non-strict
    table       grid of strict-over-non-strict sample-size reductions
    simulate    seeded Monte Carlo decision frequencies
    regions     decision-region boundaries for plotting

Each subcommand takes --format {text,json,tsv}.  JSON output is always
full precision with sorted keys; --precision only affects the rounded
text and tsv views.  Exit codes: 0 success, 2 usage or parse errors,
3 degenerate data.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
import warnings

from .decisions import (
    Decision,
    Hypothesis,
    decision_regions,
    five_decision,
    jones_tukey_decision,
    kaiser_decision,
)
from .distributions import NullDistribution, standard_normal, student_t
from .power import (
    DEFAULT_TABLE_ALPHAS,
    DEFAULT_TABLE_PSIS,
    PowerSpec,
    SampleSizeInputs,
    as_whole_percent,
    power_wald,
    reduction,
    reduction_table,
    sample_size,
)
from .simulation import Procedure, SimulationConfig, run_simulation
from .stattests import (
    DegenerateDataError,
    GroupSummary,
    confidence_interval,
    two_sample_t,
    two_sample_t_raw,
)

__all__ = ["main"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DEGENERATE = 3

SCHEMA_VERSION = 1

_TARGET_CHOICES = ("H1", "H2", "H4", "H5")
_PROCEDURES = {p.value: p for p in Procedure}


class _ParseError(Exception):
    """Bad input file or inline value; mapped to exit code 2."""


def _fmt(x: float, precision: int) -> str:
    return f"{x:.{precision}g}"


def _print_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _print_tsv(rows: list[list[str]]) -> None:
    for row in rows:
        print("\t".join(row))


def _percent_label(level: float) -> str:
    return f"{100.0 * level:g}%"


# ---------------------------------------------------------------- decide

def _parse_summary(text: str) -> tuple[GroupSummary, GroupSummary]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 6:
        raise _ParseError(
            "--summary needs 6 comma-separated values: n1,mean1,sd1,n2,mean2,sd2"
        )
    try:
        n1, n2 = int(parts[0]), int(parts[3])
        mean1, sd1 = float(parts[1]), float(parts[2])
        mean2, sd2 = float(parts[4]), float(parts[5])
    except ValueError as exc:
        raise _ParseError(f"--summary has a non-numeric field: {exc}") from exc
    try:
        return GroupSummary(n1, mean1, sd1), GroupSummary(n2, mean2, sd2)
    except DegenerateDataError:
        raise
    except ValueError as exc:
        raise _ParseError(f"--summary describes an invalid group: {exc}") from exc


def _parse_csv(path: str) -> tuple[list[str], dict[str, list[float]]]:
    """Groups in order of first appearance from a group,value file."""
    labels: list[str] = []
    groups: dict[str, list[float]] = {}
    try:
        handle = open(path, newline="", encoding="utf-8")
    except OSError as exc:
        raise _ParseError(f"cannot read {path}: {exc}") from exc
    with handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise _ParseError(f"{path}: empty file") from None
        if [h.strip().lower() for h in header] != ["group", "value"]:
            raise _ParseError(
                f"{path}: line 1: expected header 'group,value', got {','.join(header)!r}"
            )
        for line_no, row in enumerate(reader, start=2):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 2:
                raise _ParseError(
                    f"{path}: line {line_no}: expected 2 fields, got {len(row)}"
                )
            label = row[0].strip()
            if not label:
                raise _ParseError(f"{path}: line {line_no}: empty group label")
            try:
                value = float(row[1])
            except ValueError:
                raise _ParseError(
                    f"{path}: line {line_no}: non-numeric value {row[1]!r}"
                ) from None
            if not math.isfinite(value):
                raise _ParseError(f"{path}: line {line_no}: non-finite value")
            if label not in groups:
                labels.append(label)
                groups[label] = []
            groups[label].append(value)
    if len(labels) != 2:
        raise _ParseError(
            f"{path}: expected exactly 2 distinct groups, found {len(labels)}"
        )
    return labels, groups


def _decision_sentence(d: Decision, theta0: float, precision: int) -> str:
    if d.rejected is Hypothesis.NONE:
        return "no hypothesis rejected"
    t0 = _fmt(theta0, precision)
    acc = d.accepted_implicitly
    return (
        f"reject {d.rejected.value}: theta {d.rejected.comparator} {t0}"
        f" => accept {acc.value}: theta {acc.comparator} {t0}"
    )


def _decision_payload(d: Decision) -> dict:
    return {
        "index": d.index,
        "rejected": d.rejected.value,
        "accepted_implicitly": d.accepted_implicitly.value,
    }


def cmd_decide(args: argparse.Namespace) -> int:
    theta0 = args.theta0
    if args.summary is not None:
        first, second = _parse_summary(args.summary)
        result = two_sample_t(second, first, theta0)
        first_label, second_label = "group 1", "group 2"
        source = {"summary": args.summary}
    else:
        labels, groups = _parse_csv(args.csv)
        first_label, second_label = labels
        try:
            result = two_sample_t_raw(groups[second_label], groups[first_label], theta0)
        except DegenerateDataError:
            raise
        except ValueError as exc:
            raise DegenerateDataError(str(exc)) from exc
        source = {"csv": args.csv}

    alpha = args.alpha
    wide_level = 1.0 - alpha
    narrow_level = 1.0 - 2.0 * alpha
    ci_wide = confidence_interval(result, wide_level)
    ci_narrow = (
        confidence_interval(result, narrow_level)
        if narrow_level > 0.0
        else (result.estimate, result.estimate)
    )
    five = five_decision(result.t_stat, result.null, alpha)
    kaiser = kaiser_decision(result.t_stat, result.null, alpha)
    jt = jones_tukey_decision(result.t_stat, result.null, alpha)

    df = result.null.df
    p = args.precision
    if args.format == "json":
        _print_json(
            {
                "schema_version": SCHEMA_VERSION,
                "input": source,
                "direction": f"{second_label} minus {first_label}",
                "alpha": alpha,
                "theta0": theta0,
                "estimate": result.estimate,
                "se": result.se,
                "df": df,
                "t_stat": result.t_stat,
                "p_two_sided": result.p_two_sided,
                "ci": {
                    "wide_level": wide_level,
                    "wide": list(ci_wide),
                    "narrow_level": max(narrow_level, 0.0),
                    "narrow": list(ci_narrow),
                },
                "decisions": {
                    "five_decision": _decision_payload(five),
                    "kaiser": _decision_payload(kaiser),
                    "jones_tukey": _decision_payload(jt),
                },
            }
        )
        return EXIT_OK
    if args.format == "tsv":
        rows = [
            ["field", "value"],
            ["direction", f"{second_label} minus {first_label}"],
            ["estimate", _fmt(result.estimate, p)],
            ["se", _fmt(result.se, p)],
            ["df", _fmt(df, p)],
            ["t_stat", _fmt(result.t_stat, p)],
            ["p_two_sided", _fmt(result.p_two_sided, p)],
            [f"ci_{_percent_label(wide_level)}_low", _fmt(ci_wide[0], p)],
            [f"ci_{_percent_label(wide_level)}_high", _fmt(ci_wide[1], p)],
            [f"ci_{_percent_label(max(narrow_level, 0.0))}_low", _fmt(ci_narrow[0], p)],
            [f"ci_{_percent_label(max(narrow_level, 0.0))}_high", _fmt(ci_narrow[1], p)],
            ["five_decision", str(five.index)],
            ["kaiser", str(kaiser.index)],
            ["jones_tukey", str(jt.index)],
        ]
        _print_tsv(rows)
        return EXIT_OK

    print(f"difference taken as {second_label} minus {first_label}")
    print(f"estimate = {_fmt(result.estimate, p)}, se = {_fmt(result.se, p)}")
    print(
        f"t_stat = {_fmt(result.t_stat, p)}, df = {_fmt(df, p)}, "
        f"two-sided p = {_fmt(result.p_two_sided, p)}"
    )
    print(
        f"{_percent_label(wide_level)} CI: "
        f"[{_fmt(ci_wide[0], p)}, {_fmt(ci_wide[1], p)}]"
    )
    print(
        f"{_percent_label(max(narrow_level, 0.0))} CI: "
        f"[{_fmt(ci_narrow[0], p)}, {_fmt(ci_narrow[1], p)}]"
    )
    print(
        f"five-decision (alpha={_fmt(alpha, p)}): decision {five.index}, "
        + _decision_sentence(five, theta0, p)
    )
    print(
        f"directional two-sided, levels alpha/2: decision {kaiser.index}, "
        + _decision_sentence(kaiser, theta0, p)
    )
    jt_line = (
        f"two one-sided at full alpha (theta0 impossible): decision {jt.index}, "
        + _decision_sentence(jt, theta0, p)
    )
    if jt.index == 4:
        jt_line += f"; with theta0 excluded this also rejects H5: theta <= {_fmt(theta0, p)}"
    elif jt.index == 2:
        jt_line += f"; with theta0 excluded this also rejects H1: theta >= {_fmt(theta0, p)}"
    print(jt_line)
    return EXIT_OK


# ----------------------------------------------------------------- power

def cmd_power(args: argparse.Namespace) -> int:
    if args.target:
        targets = [args.target]
        values = {
            args.target: power_wald(
                PowerSpec(args.alpha, args.effect, Hypothesis(args.target))
            )
        }
    else:
        # Reporting all four sides includes hypotheses on the wrong
        # side of the effect by design; silence the advisory warning.
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            values = {
                name: power_wald(PowerSpec(args.alpha, args.effect, Hypothesis(name)))
                for name in _TARGET_CHOICES
            }
    if args.format == "json":
        _print_json(
            {
                "schema_version": SCHEMA_VERSION,
                "alpha": args.alpha,
                "effect": args.effect,
                "power": values,
            }
        )
    elif args.format == "tsv":
        _print_tsv(
            [["target", "power"]]
            + [[name, _fmt(v, args.precision)] for name, v in values.items()]
        )
    else:
        for name, v in values.items():
            print(
                f"psi({name}) = {_fmt(v, args.precision)} "
                f"({_fmt(100.0 * v, args.precision)}%)"
            )
    return EXIT_OK


def cmd_samplesize(args: argparse.Namespace) -> int:
    inputs = SampleSizeInputs(
        alpha=args.alpha,
        psi=args.power,
        delta=args.delta,
        tau=math.sqrt(args.tau_sq),
    )
    non_strict = sample_size(inputs, strict=False)
    strict = sample_size(inputs, strict=True)
    saving = reduction(args.alpha, args.power)
    p = args.precision
    if args.format == "json":
        _print_json(
            {
                "schema_version": SCHEMA_VERSION,
                "alpha": args.alpha,
                "power": args.power,
                "delta": args.delta,
                "tau_sq": args.tau_sq,
                "non_strict": {"n": non_strict.n, "n_exact": non_strict.n_exact},
                "strict": {"n": strict.n, "n_exact": strict.n_exact},
                "reduction": saving,
            }
        )
    elif args.format == "tsv":
        _print_tsv(
            [
                ["target", "n", "n_exact"],
                ["non-strict", str(non_strict.n), _fmt(non_strict.n_exact, p)],
                ["strict", str(strict.n), _fmt(strict.n_exact, p)],
                ["reduction", f"{as_whole_percent(saving)}%", _fmt(saving, p)],
            ]
        )
    else:
        print(
            f"non-strict target: n = {non_strict.n} "
            f"(exact {_fmt(non_strict.n_exact, p)})"
        )
        print(f"strict target:     n = {strict.n} (exact {_fmt(strict.n_exact, p)})")
        print(
            f"reduction from strict target: {as_whole_percent(saving)}% "
            f"(exact {_fmt(saving, p)})"
        )
    return EXIT_OK


def _parse_float_list(text: str, flag: str) -> list[float]:
    try:
        values = [float(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise _ParseError(f"{flag} expects comma-separated numbers: {exc}") from exc
    if not values:
        raise _ParseError(f"{flag} needs at least one value")
    return values


def cmd_table(args: argparse.Namespace) -> int:
    alphas = (
        _parse_float_list(args.alphas, "--alphas")
        if args.alphas
        else list(DEFAULT_TABLE_ALPHAS)
    )
    psis = (
        _parse_float_list(args.powers, "--powers")
        if args.powers
        else list(DEFAULT_TABLE_PSIS)
    )
    fractions = reduction_table(alphas, psis)
    percents = [[as_whole_percent(cell) for cell in row] for row in fractions]
    if args.format == "json":
        _print_json(
            {
                "schema_version": SCHEMA_VERSION,
                "alphas": alphas,
                "powers": psis,
                "fractions": fractions,
                "percents": percents,
            }
        )
        return EXIT_OK
    header = ["alpha\\psi"] + [_percent_label(p) for p in psis]
    rows = [header] + [
        [_percent_label(a)] + [f"{c}%" for c in row]
        for a, row in zip(alphas, percents)
    ]
    if args.format == "tsv":
        _print_tsv(rows)
        return EXIT_OK
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    for row in rows:
        print("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return EXIT_OK


# -------------------------------------------------------------- simulate

def cmd_simulate(args: argparse.Namespace) -> int:
    cfg = SimulationConfig(
        n_per_group=args.n,
        mean_diff_over_sigma=args.effect,
        alpha=args.alpha,
        trials=args.trials,
        seed=args.seed,
        procedure=_PROCEDURES[args.procedure],
    )
    report = run_simulation(cfg, workers=args.workers)
    if args.format == "json":
        _print_json(report.to_dict())
        return EXIT_OK
    p = args.precision
    if args.format == "tsv":
        rows = [["decision", "count", "freq", "mc_se"]]
        for k in sorted(report.freq):
            rows.append(
                [
                    str(k),
                    str(report.counts[k]),
                    _fmt(report.freq[k], p),
                    _fmt(report.mc_se[k], p),
                ]
            )
        rows.append(
            [
                "wrong_rejection",
                "",
                _fmt(report.wrong_rejection_rate, p),
                _fmt(report.wrong_rejection_mc_se, p),
            ]
        )
        _print_tsv(rows)
        return EXIT_OK
    print(
        f"procedure={cfg.procedure.value} n={cfg.n_per_group} "
        f"effect={_fmt(cfg.mean_diff_over_sigma, p)} alpha={_fmt(cfg.alpha, p)} "
        f"trials={cfg.trials} seed={cfg.seed}"
    )
    for k in sorted(report.freq):
        print(
            f"decision {k}: freq {_fmt(report.freq[k], p)} "
            f"+- {_fmt(report.mc_se[k], p)} ({report.counts[k]} trials)"
        )
    print(
        f"wrong-rejection rate: {_fmt(report.wrong_rejection_rate, p)} "
        f"+- {_fmt(report.wrong_rejection_mc_se, p)}"
    )
    return EXIT_OK


# --------------------------------------------------------------- regions

def _region_null(args: argparse.Namespace) -> NullDistribution:
    if args.null == "normal":
        return standard_normal()
    return student_t(args.df)


def cmd_regions(args: argparse.Namespace) -> int:
    null = _region_null(args)
    alphas = args.alpha if args.alpha else [0.10, 0.05, 0.01]
    all_regions = [decision_regions(null, a) for a in alphas]
    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "null": args.null,
            "df": args.df if args.null == "t" else None,
            "regions": [
                {
                    "alpha": r.alpha,
                    "boundaries": list(r.boundaries),
                    "intervals": [
                        {
                            "decision": s.index,
                            "lower": None if s.lower == -math.inf else s.lower,
                            "upper": None if s.upper == math.inf else s.upper,
                            "lower_closed": s.lower_closed,
                            "upper_closed": s.upper_closed,
                            "rejected": s.rejected.value,
                        }
                        for s in r.intervals()
                    ],
                }
                for r in all_regions
            ],
        }
        _print_json(payload)
        return EXIT_OK
    if args.format == "tsv":
        rows = [
            [
                "alpha",
                "decision",
                "lower",
                "upper",
                "lower_closed",
                "upper_closed",
                "rejected",
            ]
        ]
        for r in all_regions:
            for s in r.intervals():
                rows.append(
                    [
                        repr(r.alpha),
                        str(s.index),
                        repr(s.lower),
                        repr(s.upper),
                        str(int(s.lower_closed)),
                        str(int(s.upper_closed)),
                        s.rejected.value,
                    ]
                )
        _print_tsv(rows)
        return EXIT_OK
    p = args.precision
    for r in all_regions:
        q1, q2, q3, q4 = r.boundaries
        print(
            f"alpha={_fmt(r.alpha, p)}: boundaries "
            f"({_fmt(q1, p)}, {_fmt(q2, p)}, {_fmt(q3, p)}, {_fmt(q4, p)})"
        )
        for s in r.intervals():
            left = "[" if s.lower_closed else "("
            right = "]" if s.upper_closed else ")"
            lo = "-inf" if s.lower == -math.inf else _fmt(s.lower, p)
            hi = "inf" if s.upper == math.inf else _fmt(s.upper, p)
            label = (
                "no rejection"
                if s.rejected is Hypothesis.NONE
                else f"reject {s.rejected.value}"
            )
            print(f"  decision {s.index}: {left}{lo}, {hi}{right}  {label}")
    return EXIT_OK


# ---------------------------------------------------------------- parser

def _add_common_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("text", "json", "tsv"),
        default="text",
        help="output format (default: text)",
    )
    parser.add_argument(
        "--precision",
        type=int,
        default=4,
        help="significant digits in text/tsv output (default: 4)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fivedecision",
        description="Directional five-decision testing, power, and simulation tools.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_decide = sub.add_parser(
        "decide",
        help="run the three decision procedures on two-group data",
        description=(
            "Pooled two-sample t-test plus all three decision procedures. "
            "The difference is always taken as the second group minus the "
            "first (CSV groups are ordered by first appearance)."
        ),
    )
    src = p_decide.add_mutually_exclusive_group(required=True)
    src.add_argument("--csv", help="CSV file with header group,value")
    src.add_argument(
        "--summary",
        help="inline summaries: n1,mean1,sd1,n2,mean2,sd2",
    )
    p_decide.add_argument("--alpha", type=float, default=0.05)
    p_decide.add_argument("--theta0", type=float, default=0.0)
    _add_common_output(p_decide)
    p_decide.set_defaults(func=cmd_decide)

    p_power = sub.add_parser(
        "power", help="directional rejection probabilities at a given effect"
    )
    p_power.add_argument("--alpha", type=float, default=0.05)
    p_power.add_argument(
        "--effect",
        type=float,
        required=True,
        help="standardized effect (theta - theta0)/SE",
    )
    p_power.add_argument(
        "--target",
        choices=_TARGET_CHOICES,
        help="hypothesis to reject (default: report all four)",
    )
    _add_common_output(p_power)
    p_power.set_defaults(func=cmd_power)

    p_size = sub.add_parser(
        "samplesize", help="required n per the strict and non-strict targets"
    )
    p_size.add_argument("--alpha", type=float, default=0.05)
    p_size.add_argument("--power", type=float, required=True, help="target power")
    p_size.add_argument(
        "--delta", type=float, required=True, help="difference to detect"
    )
    p_size.add_argument(
        "--tau-sq",
        type=float,
        required=True,
        dest="tau_sq",
        help="tau squared, where SE = tau/sqrt(n)",
    )
    _add_common_output(p_size)
    p_size.set_defaults(func=cmd_samplesize)

    p_table = sub.add_parser(
        "table", help="sample-size reduction grid over alpha and power"
    )
    p_table.add_argument("--alphas", help="comma-separated levels (default grid)")
    p_table.add_argument("--powers", help="comma-separated powers (default grid)")
    _add_common_output(p_table)
    p_table.set_defaults(func=cmd_table)

    p_sim = sub.add_parser("simulate", help="seeded Monte Carlo decision frequencies")
    p_sim.add_argument("--n", type=int, required=True, help="observations per group")
    p_sim.add_argument(
        "--effect",
        type=float,
        default=0.0,
        help="standardized mean difference (default 0)",
    )
    p_sim.add_argument("--alpha", type=float, default=0.05)
    p_sim.add_argument("--trials", type=int, default=100000)
    p_sim.add_argument("--seed", type=int, default=1)
    p_sim.add_argument(
        "--procedure",
        choices=tuple(_PROCEDURES),
        default=Procedure.FIVE_DECISION.value,
    )
    p_sim.add_argument("--workers", type=int, default=1)
    _add_common_output(p_sim)
    p_sim.set_defaults(func=cmd_simulate)

    p_regions = sub.add_parser(
        "regions", help="decision-region boundaries and intervals"
    )
    p_regions.add_argument("--null", choices=("t", "normal"), default="t")
    p_regions.add_argument(
        "--df", type=float, default=18.0, help="degrees of freedom for --null t"
    )
    p_regions.add_argument(
        "--alpha",
        type=float,
        action="append",
        help="level; repeat for several (default: 0.10 0.05 0.01)",
    )
    _add_common_output(p_regions)
    p_regions.set_defaults(func=cmd_regions)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegenerateDataError as exc:
        print(f"error: degenerate data: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

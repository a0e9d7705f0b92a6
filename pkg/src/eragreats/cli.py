"""Command line interface.

Subcommands mirror the library: ``proportion``, ``tail``, ``analyze``,
``sensitivity``, ``bridge``, ``dilution``, ``detrend``.  All output is
deterministic byte-for-byte for a given invocation: fixed column orders,
fixed float rendering, no timestamps, no hash-order iteration.

Exit codes: 0 success, 2 usage errors (argparse), 3 invalid input data,
4 domain errors in a computation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .analysis import analyze, bridge_check, monte_carlo_oracle, sensitivity_matrix
from .defaults import (
    DEFAULT_BRIDGE_COUNTS,
    DEFAULT_CUTOFF_YEAR,
    DEFAULT_DEPTHS,
    DEFAULT_POOL_CUTOFF_YEAR,
    default_league_seasons,
    default_population_table,
    default_ranked_lists,
    default_weight_regimes,
    data_path,
)
from .detrend import (
    compute_historic_average,
    detrend_career,
    detrend_value,
    load_season_stats,
)
from .dilution import (
    build_league_seasons,
    format_per_roster_spot,
    load_league_config,
    per_roster_spot,
)
from .errors import DataError, DomainError
from .formatting import format_probability, format_proportion
from .population import (
    cumulative_proportion,
    load_population_table,
    load_weight_regimes,
    weighted_cumulative_proportion,
)
from .rankings import load_ranked_list
from .tailprob import binomial_tail, chance_format

FORMATS = ("table", "csv", "json")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.handler(args)
    except DataError as exc:
        print(f"eragreats: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"eragreats: {exc}", file=sys.stderr)
        return 4
    sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eragreats",
        description="Quantify how overrepresented early eras are in "
        "all-time-greatest baseball rankings.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("proportion", help="cumulative share of the eligible pool at a cutoff")
    _add_population(p)
    _add_cutoff(p)
    p.add_argument("--weights", metavar="PATH", help="weight regimes CSV (default: bundled)")
    p.add_argument("--regime", metavar="NAME", help="apply this interest-weighting regime")
    p.set_defaults(handler=_cmd_proportion)

    p = sub.add_parser("tail", help="exact binomial tail probability P(X >= k)")
    p.add_argument("--n", type=int, required=True, help="number of trials")
    p.add_argument("--k", type=int, required=True, help="minimum success count")
    p.add_argument("--p", type=float, required=True, help="per-trial success probability")
    p.add_argument("--trials", type=int, metavar="N",
                   help="also report a Monte Carlo estimate from N simulated draws")
    _add_seed(p)
    _add_format(p)
    p.set_defaults(handler=_cmd_tail)

    p = sub.add_parser("analyze", help="overrepresentation report per list and depth")
    _add_population(p)
    _add_lists(p)
    _add_cutoff(p)
    _add_depths(p)
    p.add_argument("--weights", metavar="PATH", help="weight regimes CSV (default: bundled)")
    p.add_argument("--regime", metavar="NAME", help="apply this interest-weighting regime")
    _add_format(p)
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("sensitivity", help="reports across every weighting regime")
    _add_population(p)
    p.add_argument("--weights", metavar="PATH", help="weight regimes CSV (default: bundled)")
    _add_lists(p)
    _add_cutoff(p)
    _add_depths(p)
    _add_format(p)
    p.set_defaults(handler=_cmd_sensitivity)

    p = sub.add_parser("bridge", help="recompute reported results against a truncated pool")
    _add_population(p)
    _add_cutoff(p)
    p.add_argument("--pool-cutoff", type=int, default=DEFAULT_POOL_CUTOFF_YEAR,
                   metavar="YEAR", help="pool truncation year (default: %(default)s)")
    p.add_argument("--counts", type=_counts_arg, default=DEFAULT_BRIDGE_COUNTS,
                   metavar="D:K[,D:K...]",
                   help="reported depth:early_count pairs (default: 10:6,25:10)")
    _add_format(p)
    p.set_defaults(handler=_cmd_bridge)

    p = sub.add_parser("dilution", help="eligible population per roster spot over time")
    _add_population(p)
    p.add_argument("--league", metavar="PATH",
                   help="league size CSV: year,teams,roster_size (default: bundled)")
    _add_format(p)
    p.set_defaults(handler=_cmd_dilution)

    p = sub.add_parser("detrend", help="rescale seasons by historic/league average")
    p.add_argument("stats", metavar="PATH", help="season stats CSV: season,value,league_average")
    p.add_argument("--historic-average", type=float, metavar="X",
                   help="override the historic average (default: mean of the file's league averages)")
    _add_format(p)
    p.set_defaults(handler=_cmd_detrend)

    return parser


def _add_population(p: argparse.ArgumentParser) -> None:
    p.add_argument("--population", metavar="PATH",
                   help="population table CSV (default: bundled)")


def _add_cutoff(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF_YEAR, metavar="YEAR",
                   help="era cutoff year, inclusive (default: %(default)s)")


def _add_depths(p: argparse.ArgumentParser) -> None:
    p.add_argument("--depths", type=_depths_arg, default=DEFAULT_DEPTHS, metavar="D[,D...]",
                   help="rank depths to analyze (default: 10,25)")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=FORMATS, default="table",
                   help="output format (default: %(default)s)")


def _add_lists(p: argparse.ArgumentParser) -> None:
    p.add_argument("--list", action="append", metavar="PATH", dest="lists",
                   help="ranked list CSV, repeatable (default: the four bundled lists)")


def _add_seed(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0, help="simulation seed (default: 0)")


def _depths_arg(text: str) -> tuple[int, ...]:
    try:
        depths = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad depth list {text!r}, expected e.g. 10,25")
    if not depths:
        raise argparse.ArgumentTypeError("at least one depth is required")
    return depths


def _counts_arg(text: str) -> tuple[tuple[int, int], ...]:
    pairs = []
    for part in text.split(","):
        left, sep, right = part.partition(":")
        if not sep:
            raise argparse.ArgumentTypeError(f"bad count {part!r}, expected depth:count")
        try:
            pairs.append((int(left), int(right)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad count {part!r}, expected depth:count")
    return tuple(pairs)


def _population_table(args):
    if args.population:
        return load_population_table(args.population)
    return default_population_table()


def _weight_regimes(args):
    if getattr(args, "weights", None):
        return load_weight_regimes(args.weights)
    return default_weight_regimes()


def _pick_regime(args):
    if not getattr(args, "regime", None):
        return None
    regimes = _weight_regimes(args)
    if args.regime not in regimes:
        raise DataError(
            f"unknown regime {args.regime!r}, available: {', '.join(regimes)}"
        )
    return regimes[args.regime]


def _ranked_lists(args):
    if args.lists:
        return [load_ranked_list(path) for path in args.lists]
    return default_ranked_lists()


def _cmd_proportion(args) -> str:
    table = _population_table(args)
    regime = _pick_regime(args)
    if regime is None:
        value = cumulative_proportion(table, args.cutoff)
    else:
        value = weighted_cumulative_proportion(table, regime, args.cutoff)
    return format_proportion(value) + "\n"


def _cmd_tail(args) -> str:
    probability = binomial_tail(args.n, args.k, args.p)
    chance = chance_format(probability).display if probability > 0 else "-"
    columns = ["probability", "chance"]
    display = [format_probability(probability), chance]
    payload = {"n": args.n, "k_min": args.k, "p": args.p,
               "probability": probability, "chance": chance}
    if args.trials is not None:
        estimate = float(monte_carlo_oracle(args.n, args.p, args.trials, args.seed)[args.k])
        columns.append("monte_carlo")
        display.append(format_probability(estimate))
        payload["monte_carlo"] = estimate
        payload["trials"] = args.trials
        payload["seed"] = args.seed
    if args.format == "json":
        return json.dumps(payload, indent=2) + "\n"
    return _render(columns, [display], args.format)


def _report_columns(with_regime: bool) -> list[str]:
    columns = ["source", "depth", "early_count", "proportion", "probability", "chance"]
    return ["regime", *columns] if with_regime else columns


def _report_display(report, with_regime: bool) -> list[str]:
    row = [
        report.source,
        str(report.depth),
        str(report.early_count),
        format_proportion(report.proportion_used),
        format_probability(report.tail_probability),
        report.chance.display,
    ]
    return [report.regime, *row] if with_regime else row


def _report_payload(report, with_regime: bool) -> dict:
    payload = {
        "source": report.source,
        "depth": report.depth,
        "early_count": report.early_count,
        "proportion": report.proportion_used,
        "probability": report.tail_probability,
        "chance": report.chance.display,
    }
    return {"regime": report.regime, **payload} if with_regime else payload


def _render_reports(reports, with_regime: bool, fmt: str) -> str:
    if fmt == "json":
        rows = [_report_payload(r, with_regime) for r in reports]
        return json.dumps(rows, indent=2) + "\n"
    display = [_report_display(r, with_regime) for r in reports]
    return _render(_report_columns(with_regime), display, fmt)


def _cmd_analyze(args) -> str:
    table = _population_table(args)
    regime = _pick_regime(args)
    lists = _ranked_lists(args)
    reports = [
        analyze(ranked, depth, args.cutoff, table, regime)
        for depth in args.depths
        for ranked in lists
    ]
    return _render_reports(reports, with_regime=False, fmt=args.format)


def _cmd_sensitivity(args) -> str:
    table = _population_table(args)
    regimes = list(_weight_regimes(args).values())
    lists = _ranked_lists(args)
    reports = sensitivity_matrix(lists, regimes, args.depths, args.cutoff, table)
    return _render_reports(reports, with_regime=True, fmt=args.format)


def _cmd_bridge(args) -> str:
    table = _population_table(args)
    reports = bridge_check(args.counts, args.pool_cutoff, args.cutoff, table)
    return _render_reports(reports, with_regime=False, fmt=args.format)


def _cmd_dilution(args) -> str:
    table = _population_table(args)
    if args.league:
        seasons = build_league_seasons(load_league_config(args.league), table)
    else:
        seasons = build_league_seasons(load_league_config(data_path("league_config.csv")), table)
    columns = ["year", "teams", "roster_size", "population_millions", "per_roster_spot_thousands"]
    display = []
    payload = []
    for season in seasons:
        value = per_roster_spot(season)
        display.append([
            str(season.year),
            str(season.teams),
            str(season.roster_size),
            f"{season.eligible_population:g}",
            format_per_roster_spot(value),
        ])
        payload.append({
            "year": season.year,
            "teams": season.teams,
            "roster_size": season.roster_size,
            "population_millions": season.eligible_population,
            "per_roster_spot_thousands": value,
        })
    if args.format == "json":
        return json.dumps(payload, indent=2) + "\n"
    return _render(columns, display, args.format)


def _cmd_detrend(args) -> str:
    stats = load_season_stats(args.stats)
    if args.historic_average is not None:
        historic = args.historic_average
    else:
        historic = compute_historic_average(s.league_average for s in stats)
    detrended = [detrend_value(s.value, s.league_average, historic) for s in stats]
    total = detrend_career(stats, historic)
    columns = ["season", "value", "league_average", "detrended"]
    display = [
        [str(s.season), f"{s.value:g}", f"{s.league_average:g}", f"{d:g}"]
        for s, d in zip(stats, detrended)
    ]
    if args.format == "json":
        payload = {
            "historic_average": historic,
            "seasons": [
                {"season": s.season, "value": s.value,
                 "league_average": s.league_average, "detrended": d}
                for s, d in zip(stats, detrended)
            ],
            "career_total": total,
        }
        return json.dumps(payload, indent=2) + "\n"
    if args.format == "csv":
        body = _render(columns, display, "csv")
        return body + f"career_total,,,{total:g}\n"
    body = _render(columns, display, "table")
    return body + f"\nhistoric_average  {historic:g}\ncareer_total      {total:g}\n"


def _render(columns, rows, fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
        return buf.getvalue()
    widths = [
        max(len(col), max((len(row[i]) for row in rows), default=0))
        for i, col in enumerate(columns)
    ]
    lines = []
    for row in [list(columns), *rows]:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"

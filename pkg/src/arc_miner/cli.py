"""arc-miner command line.

Subcommands mirror the pipeline stages (ingest, extract, arc, scree,
cluster, stats, plot) plus ``pipeline`` which runs everything end to end
into an output directory. A flat ``key=value`` config file may supply
any flag; explicit flags win. Exit codes: 0 success, 2 input error,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

import numpy as np

from . import caption_ingest, clustering, datasets, plots, sentiment, taxonomy
from .errors import ArcMinerError, InputError, InvariantError, ParameterError
from .lexicon import load_polarity, load_shifters
from .sentiment import ExtractionParams
from .stats import (
    ContingencyTable,
    chisq_assoc,
    chisq_gof,
    descriptives,
    outlier_mask,
    standardize_views,
)
from .trajectory import (
    TrajectoryParams,
    make_trajectory,
    read_trajectories,
    write_trajectories,
)

DEFAULTS = {
    "window": 2,
    "bins": 100,
    "low_pass": 5,
    "k": 7,
    "k_min": 1,
    "k_max": 30,
    "restarts": 25,
    "seed": 0,
    "z_threshold": 3.0,
}

_INT_KEYS = {"window", "bins", "low_pass", "k", "k_min", "k_max", "restarts", "seed"}
_FLOAT_KEYS = {"z_threshold"}


def _load_config(path: str) -> dict:
    values = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise InputError(f"{path}:{lineno}: expected key=value")
        key, _, value = line.partition("=")
        values[key.strip().replace("-", "_")] = value.strip()
    return values


def _resolve(args: argparse.Namespace) -> argparse.Namespace:
    """Apply defaults < config file < explicit flags."""
    config = _load_config(args.config) if getattr(args, "config", None) else {}
    for key, raw in config.items():
        if not hasattr(args, key):
            continue
        if getattr(args, key) is None:
            if key in _INT_KEYS:
                raw = int(raw)
            elif key in _FLOAT_KEYS:
                raw = float(raw)
            setattr(args, key, raw)
    for key, default in DEFAULTS.items():
        if hasattr(args, key) and getattr(args, key) is None:
            setattr(args, key, default)
    return args


def _require(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise InputError(f"missing required flag --{name.replace('_', '-')}")


def _add_common(parser):
    parser.add_argument("--config", help="flat key=value config file")


def _json_out(doc: dict, out: str | None) -> None:
    text = json.dumps(doc, indent=2) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands


def cmd_ingest(args) -> int:
    _require(args, "captions_dir", "meta", "corpus")
    transcripts, errors = caption_ingest.build_corpus(args.captions_dir, args.meta)
    caption_ingest.write_corpus(transcripts, args.corpus)
    for err in errors:
        print(f"ingest: skipped {err.id}: {err.reason}", file=sys.stderr)
    print(f"ingest: wrote {len(transcripts)} transcripts to {args.corpus}")
    return 0


def _extraction_params(args) -> ExtractionParams:
    return ExtractionParams(window_radius=args.window)


def cmd_extract(args) -> int:
    _require(args, "polarity", "shifters")
    polarity = load_polarity(args.polarity)
    shifters = load_shifters(args.shifters)
    params = _extraction_params(args)
    if args.text is not None:
        series = sentiment.extract(
            sentiment.tokenize(args.text), polarity, shifters, params, transcript_id="text"
        )
        if args.series:
            sentiment.write_series([series], args.series)
        else:
            print(json.dumps({"transcript_id": "text", "values": series.values}))
        return 0
    _require(args, "corpus", "series")
    transcripts = caption_ingest.read_corpus(args.corpus)
    series_list = [
        sentiment.extract(
            sentiment.tokenize(t.text), polarity, shifters, params, transcript_id=t.id
        )
        for t in transcripts
    ]
    sentiment.write_series(series_list, args.series)
    print(f"extract: wrote {len(series_list)} series to {args.series}")
    return 0


def cmd_arc(args) -> int:
    _require(args, "series", "arcs")
    params = TrajectoryParams(bins=args.bins, low_pass=args.low_pass)
    series_list = sentiment.read_series(args.series)
    if not series_list:
        raise InputError(f"no series found in {args.series}")
    trajectories = [make_trajectory(s, params) for s in series_list]
    write_trajectories(trajectories, args.arcs)
    n_degenerate = sum(t.degenerate for t in trajectories)
    print(
        f"arc: wrote {len(trajectories)} trajectories to {args.arcs} "
        f"({n_degenerate} degenerate)"
    )
    return 0


def _load_points(path):
    trajectories = read_trajectories(path)
    usable = [t for t in trajectories if not t.degenerate]
    if not usable:
        raise InputError(f"no non-degenerate trajectories in {path}")
    ids = [t.transcript_id for t in usable]
    return np.vstack([t.bins for t in usable]), ids


def cmd_scree(args) -> int:
    _require(args, "arcs", "out")
    points, _ = _load_points(args.arcs)
    n_distinct = np.unique(points, axis=0).shape[0]
    k_max = min(args.k_max, n_distinct)
    if k_max < args.k_max:
        print(f"scree: capping k-max at {k_max} (distinct points)", file=sys.stderr)
    curve = clustering.scree(
        points, k_min=args.k_min, k_max=k_max, restarts=args.restarts, seed=args.seed
    )
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["k", "wss"])
        for k, wss in curve:
            writer.writerow([k, f"{wss:.17g}"])
    elbow = clustering.suggest_elbow(curve)
    print(f"scree: wrote {len(curve)} rows to {args.out}; advisory elbow k={elbow}")
    return 0


def cmd_cluster(args) -> int:
    _require(args, "arcs", "model")
    points, ids = _load_points(args.arcs)
    model = clustering.fit(points, args.k, restarts=args.restarts, seed=args.seed)
    clustering.write_model(model, ids, args.model)
    print(f"cluster: k={model.k} wss={model.wss:.6g} -> {args.model}")
    return 0


def _parse_counts(args) -> np.ndarray:
    if args.counts is None:
        raise InputError("missing required flag --counts (comma-separated integers)")
    try:
        return np.array([int(v) for v in args.counts.split(",")])
    except ValueError:
        raise InputError(f"unparseable counts: {args.counts!r}") from None


def cmd_stats_gof(args) -> int:
    result = chisq_gof(_parse_counts(args))
    doc = {
        "chi2": result.chi2,
        "df": result.df,
        "p": result.p,
        "residuals": [float(r) for r in result.residuals],
    }
    _json_out(doc, args.out)
    print(f"gof: chi2({result.df}) = {result.chi2:.4g}, p = {result.p:.4g}")
    return 0


def _read_contingency(path) -> ContingencyTable:
    with open(path, newline="", encoding="utf-8") as fh:
        rows = [row for row in csv.reader(fh) if row]
    if len(rows) < 3:
        raise InputError(f"{path}: contingency table needs headers plus 2+ rows")
    col_labels = rows[0][1:]
    row_labels = [r[0] for r in rows[1:]]
    counts = np.array([[int(v) for v in r[1:]] for r in rows[1:]])
    return ContingencyTable(row_labels=row_labels, col_labels=col_labels, counts=counts)


def cmd_stats_assoc(args) -> int:
    _require(args, "table")
    table = _read_contingency(args.table)
    result = chisq_assoc(table)
    doc = {
        "chi2": result.chi2,
        "df": result.df,
        "p": result.p,
        "row_labels": table.row_labels,
        "col_labels": table.col_labels,
        "pearson_residuals": [[float(v) for v in row] for row in result.pearson_residuals],
        "adjusted_residuals": [[float(v) for v in row] for row in result.adjusted_residuals],
    }
    _json_out(doc, args.out)
    print(f"assoc: chi2({result.df}) = {result.chi2:.4g}, p = {result.p:.4g}")
    return 0


def _stats_report(transcripts, model, ids, z_threshold) -> dict:
    by_id = {t.id: t for t in transcripts}
    kept = [i for i in ids if i in by_id]
    if len(kept) != len(ids):
        raise InputError("model contains transcripts absent from the corpus")
    views = np.array(
        [standardize_views(by_id[i].view_count, by_id[i].days_online) for i in kept]
    )
    mask = outlier_mask(views, z_threshold=z_threshold)
    keep = ~mask
    assign = {i: a for i, a in zip(ids, model.assignments)}
    kept_ids = [i for i, ok in zip(kept, keep) if ok]
    kept_views = views[keep]

    counts = np.bincount([assign[i] for i in kept_ids], minlength=model.k)
    gof = chisq_gof(counts)

    genders = sorted({by_id[i].gender_category for i in kept_ids})
    assoc_doc = None
    if len(genders) >= 2:
        table_counts = np.array(
            [
                np.bincount(
                    [assign[i] for i in kept_ids if by_id[i].gender_category == g],
                    minlength=model.k,
                )
                for g in genders
            ]
        )
        if np.all(table_counts.sum(axis=0) > 0):
            assoc = chisq_assoc(
                ContingencyTable(
                    row_labels=genders,
                    col_labels=[str(c) for c in range(model.k)],
                    counts=table_counts,
                )
            )
            assoc_doc = {
                "row_labels": genders,
                "counts": [[int(v) for v in row] for row in table_counts],
                "chi2": assoc.chi2,
                "df": assoc.df,
                "p": assoc.p,
                "pearson_residuals": [
                    [float(v) for v in row] for row in assoc.pearson_residuals
                ],
                "adjusted_residuals": [
                    [float(v) for v in row] for row in assoc.adjusted_residuals
                ],
            }

    # non-inferential substitute for a mixed-effects comparison: grouped
    # descriptives of standardized views per cluster and channel
    per_cluster = []
    for c in range(model.k):
        members = [i for i in kept_ids if assign[i] == c]
        member_views = [kept_views[kept_ids.index(i)] for i in members]
        channels = [by_id[i].channel_id for i in members]
        per_cluster.append(
            {
                "cluster": c,
                "n": len(members),
                "by_channel": descriptives(member_views, channels) if members else [],
            }
        )

    return {
        "n_transcripts": len(kept),
        "view_outliers_removed": int(mask.sum()),
        "standardized_views": {
            "overall": descriptives(kept_views),
            "by_gender": descriptives(
                kept_views, [by_id[i].gender_category for i in kept_ids]
            ),
        },
        "cluster_counts": [int(c) for c in counts],
        "gof": {
            "chi2": gof.chi2,
            "df": gof.df,
            "p": gof.p,
            "residuals": [float(r) for r in gof.residuals],
        },
        "gender_association": assoc_doc,
        "per_cluster_channel_descriptives": per_cluster,
        "note": "per-cluster descriptives are non-inferential",
    }


def cmd_stats_report(args) -> int:
    _require(args, "corpus", "model")
    transcripts = caption_ingest.read_corpus(args.corpus)
    model, ids = clustering.read_model(args.model)
    doc = _stats_report(transcripts, model, ids, args.z_threshold)
    _json_out(doc, args.out)
    return 0


def _load_template_table(args):
    if getattr(args, "templates", None):
        return taxonomy.load_templates(args.templates)
    return taxonomy.default_templates()


def cmd_plot_arcs(args) -> int:
    _require(args, "model", "arcs", "out")
    model, ids = clustering.read_model(args.model)
    points, point_ids = _load_points(args.arcs)
    if point_ids != ids:
        order = {pid: i for i, pid in enumerate(point_ids)}
        try:
            points = points[[order[i] for i in ids]]
        except KeyError as exc:
            raise InputError(f"trajectory table is missing id {exc}") from None
    summaries = clustering.summarize(model, points, templates=_load_template_table(args))
    Path(args.out).write_text(plots.render_arcs(summaries), encoding="utf-8")
    print(f"plot: wrote {args.out}")
    return 0


def cmd_plot_scree(args) -> int:
    _require(args, "out")
    with open(args.scree_table, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["k", "wss"]:
            raise InputError(f"{args.scree_table}: expected header k,wss")
        curve = [(int(k), float(w)) for k, w in reader]
    Path(args.out).write_text(plots.render_scree(curve), encoding="utf-8")
    print(f"plot: wrote {args.out}")
    return 0


def cmd_pipeline(args) -> int:
    _require(args, "captions_dir", "meta", "out")
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    polarity_path = args.polarity or str(datasets.polarity_path())
    shifters_path = args.shifters or str(datasets.shifters_path())

    # ingest
    transcripts, errors = caption_ingest.build_corpus(args.captions_dir, args.meta)
    if not transcripts:
        raise InputError("ingest produced no transcripts")
    caption_ingest.write_corpus(transcripts, out_dir / "corpus.jsonl")
    (out_dir / "ingest_errors.json").write_text(
        json.dumps([{"id": e.id, "reason": e.reason} for e in errors], indent=2) + "\n",
        encoding="utf-8",
    )

    # extract
    polarity = load_polarity(polarity_path)
    shifters = load_shifters(shifters_path)
    params = _extraction_params(args)
    series_list = [
        sentiment.extract(
            sentiment.tokenize(t.text), polarity, shifters, params, transcript_id=t.id
        )
        for t in transcripts
    ]
    sentiment.write_series(series_list, out_dir / "series.jsonl")

    # trajectories
    tparams = TrajectoryParams(bins=args.bins, low_pass=args.low_pass)
    trajectories = [make_trajectory(s, tparams) for s in series_list]
    write_trajectories(trajectories, out_dir / "trajectories.csv")
    usable = [t for t in trajectories if not t.degenerate]
    if not usable:
        raise InputError("all trajectories are degenerate; nothing to cluster")
    ids = [t.transcript_id for t in usable]
    points = np.vstack([t.bins for t in usable])

    # scree
    n_distinct = np.unique(points, axis=0).shape[0]
    k_max = min(args.k_max, n_distinct)
    curve = clustering.scree(
        points, k_min=args.k_min, k_max=k_max, restarts=args.restarts, seed=args.seed
    )
    with open(out_dir / "scree.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["k", "wss"])
        for k, wss in curve:
            writer.writerow([k, f"{wss:.17g}"])
    (out_dir / "scree.svg").write_text(plots.render_scree(curve), encoding="utf-8")

    # cluster + summaries
    k = min(args.k, n_distinct)
    model = clustering.fit(points, k, restarts=args.restarts, seed=args.seed)
    clustering.write_model(model, ids, out_dir / "model.json")
    templates = taxonomy.default_templates(args.bins)
    summaries = clustering.summarize(model, points, templates=templates)
    (out_dir / "summaries.json").write_text(
        json.dumps(
            [
                {
                    "cluster": s.cluster_id,
                    "n": s.n,
                    "label": s.label,
                    "mean": [float(v) for v in s.mean],
                    "sd": [float(v) for v in s.sd],
                    "ci_low": [float(v) for v in s.ci_low],
                    "ci_high": [float(v) for v in s.ci_high],
                }
                for s in summaries
            ],
            indent=2,
        )
        + "\n",
        encoding="utf-8",
    )
    (out_dir / "arcs.svg").write_text(plots.render_arcs(summaries), encoding="utf-8")

    # stats
    report = _stats_report(transcripts, model, ids, args.z_threshold)
    (out_dir / "stats.json").write_text(
        json.dumps(report, indent=2) + "\n", encoding="utf-8"
    )
    print(f"pipeline: outputs written to {out_dir}")
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arc-miner",
        description="Sentiment arcs from non-punctuated transcripts",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        _add_common(p)
        return p

    p = add("ingest", cmd_ingest, "parse captions + metadata into a corpus file")
    p.add_argument("--captions-dir")
    p.add_argument("--meta")
    p.add_argument("--corpus", help="output corpus record-stream file")

    p = add("extract", cmd_extract, "compute weighted sentiment series")
    p.add_argument("--corpus")
    p.add_argument("--series", help="output series record-stream file")
    p.add_argument("--polarity")
    p.add_argument("--shifters")
    p.add_argument("--window", type=int)
    p.add_argument("--text", help="extract a single ad-hoc text instead of a corpus")

    p = add("arc", cmd_arc, "project series onto narrative-time trajectories")
    p.add_argument("--series")
    p.add_argument("--arcs", help="output trajectory table")
    p.add_argument("--bins", type=int)
    p.add_argument("--low-pass", type=int, dest="low_pass")

    p = add("scree", cmd_scree, "WSS curve over a k range")
    p.add_argument("--arcs")
    p.add_argument("--out")
    p.add_argument("--k-min", type=int, dest="k_min")
    p.add_argument("--k-max", type=int, dest="k_max")
    p.add_argument("--restarts", type=int)
    p.add_argument("--seed", type=int)

    p = add("cluster", cmd_cluster, "fit the k-means arc model")
    p.add_argument("--arcs")
    p.add_argument("--model", help="output model document")
    p.add_argument("--k", type=int)
    p.add_argument("--restarts", type=int)
    p.add_argument("--seed", type=int)

    p = add("stats", None, "categorical and descriptive statistics")
    stats_sub = p.add_subparsers(dest="stats_command", required=True)
    g = stats_sub.add_parser("gof", help="goodness of fit against a uniform null")
    g.set_defaults(func=cmd_stats_gof)
    _add_common(g)
    g.add_argument("--counts", help="comma-separated observed counts")
    g.add_argument("--out")
    a = stats_sub.add_parser("assoc", help="chi-square test of association")
    a.set_defaults(func=cmd_stats_assoc)
    _add_common(a)
    a.add_argument("--table", help="contingency CSV with row/column headers")
    a.add_argument("--out")
    r = stats_sub.add_parser("report", help="corpus-level descriptive report")
    r.set_defaults(func=cmd_stats_report)
    _add_common(r)
    r.add_argument("--corpus")
    r.add_argument("--model")
    r.add_argument("--z-threshold", type=float, dest="z_threshold")
    r.add_argument("--out")

    p = add("plot", None, "SVG figures")
    plot_sub = p.add_subparsers(dest="plot_command", required=True)
    pa = plot_sub.add_parser("arcs", help="cluster shape panels with SD/CI bands")
    pa.set_defaults(func=cmd_plot_arcs)
    _add_common(pa)
    pa.add_argument("--model")
    pa.add_argument("--arcs")
    pa.add_argument("--templates", help="taxonomy template table (default: bundled)")
    pa.add_argument("--out")
    ps = plot_sub.add_parser("scree", help="WSS curve with elbow annotation")
    ps.set_defaults(func=cmd_plot_scree)
    _add_common(ps)
    ps.add_argument("scree_table", help="k,wss CSV from the scree command")
    ps.add_argument("--out")

    p = add("pipeline", cmd_pipeline, "run every stage into an output directory")
    p.add_argument("--captions-dir")
    p.add_argument("--meta")
    p.add_argument("--polarity")
    p.add_argument("--shifters")
    p.add_argument("--out", help="output directory")
    p.add_argument("--window", type=int)
    p.add_argument("--bins", type=int)
    p.add_argument("--low-pass", type=int, dest="low_pass")
    p.add_argument("--k", type=int)
    p.add_argument("--k-min", type=int, dest="k_min")
    p.add_argument("--k-max", type=int, dest="k_max")
    p.add_argument("--restarts", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--z-threshold", type=float, dest="z_threshold")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args = _resolve(args)
        return args.func(args)
    except InvariantError as exc:
        print(f"arc-miner: error: invariant: {exc}", file=sys.stderr)
        return 3
    except (ArcMinerError, FileNotFoundError) as exc:
        print(f"arc-miner: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

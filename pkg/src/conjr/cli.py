"""Command-line entry point.

Every subcommand is a thin shell over the library: JSON (or JSON-lines)
on stdout, human diagnostics on stderr. Exit codes: 0 success, 1 usage
error, 2 data error.
"""

import json
import os
import shlex
import subprocess
import sys
from pathlib import Path

import click

from .annotation import RewriteSet, annotator_ranking, consolidate as consolidate_subs, iaa as iaa_of, validate as validate_submission
from .dataset import DatasetError, load as load_dataset, save as save_dataset, split as split_dataset, stats as dataset_stats
from .depgraph import ConlluError, GraphError, PROFILES, parse_conllu
from .metric import MetricError, evaluate_corpus
from .nucleus import nuclei_of_graph
from .patterns import (
    MiningCounters,
    PatternError,
    builtin_catalog,
    compile_catalog,
    detect as detect_patterns,
    dump_catalog,
    load_catalog,
    mine_corpus,
)

DATA_ERRORS = (ConlluError, GraphError, PatternError, MetricError, DatasetError, ValueError, OSError)


def _profile(name):
    if name not in PROFILES:
        raise click.UsageError(f"unknown profile {name!r} (choose from {', '.join(sorted(PROFILES))})")
    return PROFILES[name]


def _catalog(path):
    if path is None:
        return builtin_catalog()
    return load_catalog(Path(path).read_text(encoding="utf-8"))


def _emit(obj):
    click.echo(json.dumps(obj, ensure_ascii=False))


def _read_jsonl(path):
    out = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                out.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise DatasetError(f"{path}:{lineno}: bad JSON ({exc.msg})")
    return out


def _load_submissions(path):
    return [RewriteSet.from_dict(d) for d in _read_jsonl(path)]


@click.group()
def cli():
    """Conjunct-resolution toolkit: pattern mining, annotation checks,
    and verb-nucleus evaluation for coordination rewrites."""


@cli.command()
@click.option("--conllu", "conllu_path", required=True, type=click.Path(exists=True))
@click.option("--catalog", "catalog_path", type=click.Path(exists=True))
@click.option("--profile", "profile_name", default="default", show_default=True)
def detect(conllu_path, catalog_path, profile_name):
    """Run the suspicious-structure patterns over parsed sentences."""
    profile = _profile(profile_name)
    patterns = compile_catalog(_catalog(catalog_path), profile)
    graphs = parse_conllu(Path(conllu_path).read_text(encoding="utf-8"))
    for g in graphs:
        matches = detect_patterns(g, patterns)
        _emit(
            {
                "id": g.id,
                "text": g.text,
                "matches": [
                    {
                        "pattern_id": m.pattern_id,
                        "bindings": dict(m.bindings),
                        "conjunction": (
                            {
                                "form": m.conjunction.form,
                                "index": m.conjunction.index,
                                "char_span": list(m.conjunction.char_span),
                            }
                            if m.conjunction
                            else None
                        ),
                    }
                    for m in matches
                ],
            }
        )


@cli.command()
@click.option("--conllu", "conllu_path", required=True, type=click.Path(exists=True))
@click.option("--catalog", "catalog_path", type=click.Path(exists=True))
@click.option("--profile", "profile_name", default="default", show_default=True)
@click.option("--sample-rate", default=0.0, show_default=True, help="Audit sampling rate.")
@click.option("--seed", default=0, show_default=True)
@click.option("--audit", "audit_path", type=click.Path(), help="File for audit-sampled records.")
def mine(conllu_path, catalog_path, profile_name, sample_rate, seed, audit_path):
    """Stream candidate records for every matched conjunction."""
    profile = _profile(profile_name)
    patterns = compile_catalog(_catalog(catalog_path), profile)
    counters = MiningCounters()
    audit_fh = open(audit_path, "w", encoding="utf-8") if audit_path else None
    sink = (lambda rec: audit_fh.write(json.dumps(rec, ensure_ascii=False) + "\n")) if audit_fh else None
    try:
        with open(conllu_path, encoding="utf-8") as fh:
            for record in mine_corpus(fh, patterns, sample_rate=sample_rate, seed=seed, counters=counters, audit_sink=sink):
                _emit(record)
    finally:
        if audit_fh:
            audit_fh.close()
    click.echo(
        f"sentences={counters.sentences} matched={counters.matched} "
        f"records={counters.records} skipped={counters.skipped} audited={counters.audited}",
        err=True,
    )


@cli.command()
@click.option("--conllu", "conllu_path", required=True, type=click.Path(exists=True))
@click.option("--profile", "profile_name", default="default", show_default=True)
def nuclei(conllu_path, profile_name):
    """Extract verb nuclei from parsed sentences."""
    profile = _profile(profile_name)
    for g in parse_conllu(Path(conllu_path).read_text(encoding="utf-8")):
        _emit(
            {
                "id": g.id,
                "nuclei": [
                    {"verb": n.verb, "triplets": [list(t) for t in sorted(n.triplets)]}
                    for n in nuclei_of_graph(g, profile)
                ],
            }
        )


@cli.command(name="eval")
@click.option("--gold", "gold_path", required=True, type=click.Path(exists=True))
@click.option("--pred", "pred_path", required=True, type=click.Path(exists=True))
@click.option("--mode", type=click.Choice(["macro", "micro"]), default="macro", show_default=True)
@click.option("--profile", "profile_name", default="default", show_default=True)
@click.option("--per-instance", is_flag=True)
@click.option("--table", is_flag=True, help="Also print a plain-text table on stderr.")
def eval_cmd(gold_path, pred_path, mode, profile_name, per_instance, table):
    """Score predicted rewrites against gold rewrites.

    The predictions file is JSON-lines with records
    {"id": ..., "sentences": [...], "conllu": "..."}.
    """
    profile = _profile(profile_name)
    instances, bad = load_dataset(gold_path, lenient=True)
    if bad:
        click.echo(f"skipped {bad} malformed gold records", err=True)
    predictions = {}
    for rec in _read_jsonl(pred_path):
        if "id" not in rec or "sentences" not in rec:
            raise DatasetError(f"{pred_path}: prediction record needs 'id' and 'sentences'")
        graphs = parse_conllu(rec["conllu"]) if rec.get("conllu") else []
        predictions[rec["id"]] = {"sentences": rec["sentences"], "graphs": graphs}
    report = evaluate_corpus(instances, predictions, mode=mode, profile=profile, per_instance=per_instance)
    _emit(report.to_dict())
    if table:
        click.echo(report.table(), err=True)


@cli.command()
@click.option("--instances", "instances_path", required=True, type=click.Path(exists=True))
@click.option("--submissions", "submissions_path", required=True, type=click.Path(exists=True))
def validate(instances_path, submissions_path):
    """Run the annotation checks over a submissions file."""
    instances, _ = load_dataset(instances_path, lenient=True)
    by_id = {i.id: i for i in instances}
    for sub in _load_submissions(submissions_path):
        inst = by_id.get(sub.instance_id)
        if inst is None:
            raise DatasetError(f"unknown instance id {sub.instance_id!r}")
        report = validate_submission(inst.text, inst.conjunction.form, sub, input_graph=inst.graph())
        _emit({"instance_id": sub.instance_id, "annotator_id": sub.annotator_id, **report.to_dict()})


@cli.command()
@click.option("--instances", "instances_path", required=True, type=click.Path(exists=True))
@click.option("--submissions", "submissions_path", required=True, type=click.Path(exists=True))
@click.option("--min-submissions", default=3, show_default=True)
def consolidate(instances_path, submissions_path, min_submissions):
    """Consolidate per-instance submissions into gold answers."""
    instances, _ = load_dataset(instances_path, lenient=True)
    known = {i.id for i in instances}
    subs = _load_submissions(submissions_path)
    groups: dict[str, list[RewriteSet]] = {}
    for sub in subs:
        if sub.instance_id not in known:
            raise DatasetError(f"unknown instance id {sub.instance_id!r}")
        groups.setdefault(sub.instance_id, []).append(sub)
    ranking = {s.annotator_id: 0.0 for s in subs}
    for instance_id in sorted(groups):
        group = groups[instance_id]
        if len(group) < min_submissions:
            click.echo(f"{instance_id}: only {len(group)} submissions, skipping", err=True)
            continue
        result = consolidate_subs(group, ranking)
        _emit({"instance_id": instance_id, "method": result.method, "gold": result.gold.to_dict()})


@cli.command()
@click.option("--submissions", "submissions_path", required=True, type=click.Path(exists=True))
def iaa(submissions_path):
    """Inter-annotator agreement over per-instance submission groups."""
    groups: dict[str, list[RewriteSet]] = {}
    for sub in _load_submissions(submissions_path):
        groups.setdefault(sub.instance_id, []).append(sub)
    _emit(iaa_of(groups.values()).to_dict())


@cli.command()
@click.option("--data", "data_path", required=True, type=click.Path(exists=True))
@click.option("--profile", "profile_name", default="default", show_default=True)
def stats(data_path, profile_name):
    """Dataset statistics: conjunction counts, rewrite-count distribution,
    explicit/omitted verb tallies."""
    instances, bad = load_dataset(data_path, lenient=True)
    if bad:
        click.echo(f"skipped {bad} malformed records", err=True)
    _emit(dataset_stats(instances, _profile(profile_name)).to_dict())


@cli.command()
@click.option("--data", "data_path", required=True, type=click.Path(exists=True))
@click.option("--out", "out_path", required=True, type=click.Path())
@click.option("--ratios", default="0.8,0.1,0.1", show_default=True)
@click.option("--seed", default=0, show_default=True)
def split(data_path, out_path, ratios, seed):
    """Assign train/dev/test splits deterministically and save."""
    try:
        parts = tuple(float(x) for x in ratios.split(","))
    except ValueError:
        raise click.UsageError(f"bad --ratios value {ratios!r}")
    if len(parts) != 3:
        raise click.UsageError("--ratios needs three comma-separated numbers")
    instances, bad = load_dataset(data_path, lenient=True)
    if bad:
        click.echo(f"skipped {bad} malformed records", err=True)
    split_dataset(instances, ratios=parts, seed=seed)
    save_dataset(out_path, instances)
    counts = {}
    for inst in instances:
        counts[inst.split] = counts.get(inst.split, 0) + 1
    _emit({"out": str(out_path), "counts": counts})


@cli.group()
def patterns():
    """Pattern catalog utilities."""


@patterns.command()
@click.option("--catalog", "catalog_path", type=click.Path(exists=True))
def dump(catalog_path):
    """Print the pattern catalog as JSON records."""
    for spec in _catalog(catalog_path):
        _emit(
            {
                "id": spec.id,
                "family": spec.family,
                "nodes": [{"var": n.var, "constraint": n.constraint} for n in spec.nodes],
                "edges": [{"head": e.head, "dep": e.dep, "labels": e.labels} for e in spec.edges],
                "order": [list(pair) for pair in spec.order],
                "description": spec.description,
            }
        )


@cli.command()
@click.option("--data", "data_path", required=True, type=click.Path(exists=True))
@click.option("--store", "store_path", required=True, type=click.Path())
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8400, show_default=True)
@click.option("--min-submissions", default=3, show_default=True)
def serve(data_path, store_path, host, port, min_submissions):
    """Run the annotation HTTP service."""
    import uvicorn

    from .service import build_app

    app = build_app(data_path, store_path, min_submissions=min_submissions)
    uvicorn.run(app, host=host, port=port, log_level="warning")


@cli.command()
@click.option("--parser-cmd", "parser_cmd", default=None, help="Overrides CONJR_PARSER_CMD.")
def parse(parser_cmd):
    """Pipe raw sentences (one per line, stdin) through the external
    parser command and print its CoNLL-U output."""
    cmd = parser_cmd or os.environ.get("CONJR_PARSER_CMD")
    if not cmd:
        raise click.UsageError("no parser command: pass --parser-cmd or set CONJR_PARSER_CMD")
    text = sys.stdin.read()
    proc = subprocess.run(shlex.split(cmd), input=text, capture_output=True, text=True)
    if proc.returncode != 0:
        click.echo(proc.stderr, err=True, nl=False)
        raise DatasetError(f"parser command exited with status {proc.returncode}")
    parse_conllu(proc.stdout)  # reject malformed adapter output before echoing it
    click.echo(proc.stdout, nl=False)


def main(argv=None):
    try:
        return cli.main(args=argv, standalone_mode=False) or 0
    except click.UsageError as exc:
        exc.show(file=sys.stderr)
        return 1
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return 1
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    except DATA_ERRORS as exc:
        click.echo(f"error: {exc}", err=True)
        return 2


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

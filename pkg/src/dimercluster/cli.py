"""Command-line front end: build, compute, export, and verify.

Exit codes are a stable contract: 0 success, 1 verification mismatch,
2 parse/usage error, 3 semantic input error (well-formed values that do not
denote a quiver/root instance).  All JSON payloads carry ``"schema": 1``.
"""

from __future__ import annotations

import json
import multiprocessing
import sys

import click

from dimercluster.base_graph import BaseGraph
from dimercluster.cluster_invariants import (
    ORACLE_NAMES,
    dimer_f_polynomial,
    dimer_g_vector,
    dimer_laurent_expansion,
    verify_quiver,
)
from dimercluster.flip_poset import FlipPoset
from dimercluster.mixed_dimer import count_cycles, e_from_config, x_exponents
from dimercluster.quiver_core import (
    Quiver,
    all_orientations,
    format_quiver,
    is_positive_root,
    parse_quiver,
    positive_roots,
)

EXIT_MISMATCH = 1
EXIT_SEMANTIC = 3


def _parse_quiver_opt(spec):
    """Quiver from its text form; malformed text is a usage error (exit 2)."""
    try:
        return parse_quiver(spec)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _parse_root_opt(spec, n):
    """Root vector from csv; bad syntax exits 2, a non-root exits 3."""
    try:
        d = tuple(int(x) for x in spec.split(","))
    except ValueError:
        raise click.UsageError("root must be a comma-separated integer vector")
    if len(d) != n or not is_positive_root(n, d):
        click.echo("error: %r is not a positive root at rank %d" % (d, n), err=True)
        sys.exit(EXIT_SEMANTIC)
    return d


def _emit(text, out):
    if out is None:
        click.echo(text)
    else:
        with open(out, "w") as fh:
            fh.write(text + "\n")


def _oracle_list(spec):
    names = tuple(x.strip() for x in spec.split(",") if x.strip())
    for name in names:
        if name not in ORACLE_NAMES:
            raise click.UsageError(
                "unknown oracle %r (choose from %s)" % (name, ", ".join(ORACLE_NAMES))
            )
    return names


@click.group()
def main():
    """Mixed-dimer model of cluster variables on type-D quivers."""


# ---- basegraph -----------------------------------------------------------------------


@main.command()
@click.option("-q", "--quiver", "quiver_spec", required=True, help='e.g. "n=5; 1>0,2>1,3>2,2>4"')
@click.option("-d", "--root", "root_spec", default=None, help="positive root, csv")
@click.option("-f", "--format", "fmt", type=click.Choice(["text", "json", "dot"]), default="text")
@click.option("-o", "--output", default=None, type=click.Path(dir_okay=False))
def basegraph(quiver_spec, root_spec, fmt, output):
    """Build the hexagon-square base graph of a quiver."""
    quiver = _parse_quiver_opt(quiver_spec)
    graph = BaseGraph(quiver)
    d = _parse_root_opt(root_spec, quiver.n) if root_spec else None
    if fmt == "dot":
        _emit(graph.to_dot(d), output)
    elif fmt == "text":
        text = graph.describe()
        if d is not None:
            labels = graph.node_labels(d)
            text += "\nnodes for d=%s: %s" % (
                ",".join(map(str, d)),
                " ".join("%s=%s" % (v, c) for v, c in sorted(labels.items())),
            )
        _emit(text, output)
    else:
        payload = {
            "schema": 1,
            "quiver": format_quiver(quiver),
            "tiles": [
                {
                    "index": t.index,
                    "kind": t.kind,
                    "cells": [list(c) for c in t.cells],
                    "corners": [list(c) for c in t.corners],
                }
                for t in graph.tiles
            ],
            "edges": [
                {
                    "ends": [list(e[0]), list(e[1])],
                    "tiles": sorted(graph.edge_tiles[e]),
                    "weight": graph.edge_weights.get(e),
                }
                for e in graph.edges
            ],
            "nodes": None,
        }
        if d is not None:
            payload["nodes"] = [
                {"corner": list(v), "color": c}
                for v, c in sorted(graph.node_labels(d).items())
            ]
        _emit(json.dumps(payload, indent=2, sort_keys=True), output)


# ---- compute -------------------------------------------------------------------------


@main.command()
@click.option("-q", "--quiver", "quiver_spec", required=True)
@click.option("-d", "--root", "root_spec", required=True)
@click.option("-f", "--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--explain", is_flag=True, help="list every configuration with its weight data")
@click.option("-o", "--output", default=None, type=click.Path(dir_okay=False))
def compute(quiver_spec, root_spec, fmt, explain, output):
    """F-polynomial, g-vector, and Laurent expansion for one root."""
    quiver = _parse_quiver_opt(quiver_spec)
    d = _parse_root_opt(root_spec, quiver.n)
    poset = FlipPoset(quiver, d)
    f = dimer_f_polynomial(quiver, d, poset=poset)
    g = dimer_g_vector(quiver, d, graph=poset.graph)
    laurent = dimer_laurent_expansion(quiver, d, poset=poset)
    histogram = {}
    for config in poset.configs.values():
        c = count_cycles(config)
        histogram[c] = histogram.get(c, 0) + 1
    if fmt == "json":
        payload = {
            "schema": 1,
            "quiver": format_quiver(quiver),
            "root": list(d),
            "f_polynomial": f.to_json(),
            "g_vector": list(g),
            "laurent_expansion": laurent.to_json(),
            "poset_size": len(poset.elements),
            "cycle_histogram": {str(k): v for k, v in sorted(histogram.items())},
        }
        if explain:
            payload["configurations"] = [
                {
                    "e": list(e),
                    "coefficient": poset.coefficients()[e],
                    "x_exponents": list(x_exponents(poset.graph, poset.configs[e])),
                }
                for e in poset.elements
            ]
        _emit(json.dumps(payload, indent=2, sort_keys=True), output)
        return
    lines = [
        "quiver: %s" % format_quiver(quiver),
        "root d: %s" % (",".join(map(str, d))),
        "F = %s" % f.render(),
        "g = (%s)" % ", ".join(map(str, g)),
        "x_d = %s" % laurent.render(),
        "poset size: %d" % len(poset.elements),
        "cycle histogram: %s"
        % ", ".join("%d cycles x%d" % (k, v) for k, v in sorted(histogram.items())),
    ]
    if explain:
        coeffs = poset.coefficients()
        lines.append("configurations (e | coefficient | weight exponents):")
        for e in poset.elements:
            lines.append(
                "  %s | %d | %s"
                % (
                    ",".join(map(str, e)),
                    coeffs[e],
                    ",".join(map(str, x_exponents(poset.graph, poset.configs[e]))),
                )
            )
    _emit("\n".join(lines), output)


# ---- poset ---------------------------------------------------------------------------


@main.command()
@click.option("-q", "--quiver", "quiver_spec", required=True)
@click.option("-d", "--root", "root_spec", required=True)
@click.option("-f", "--format", "fmt", type=click.Choice(["text", "json", "dot"]), default="dot")
@click.option("--lattice", is_flag=True, help="append lattice diagnostics and witnesses")
@click.option("-o", "--output", default=None, type=click.Path(dir_okay=False))
def poset(quiver_spec, root_spec, fmt, lattice, output):
    """Hasse diagram of the flip poset for one root."""
    quiver = _parse_quiver_opt(quiver_spec)
    d = _parse_root_opt(root_spec, quiver.n)
    p = FlipPoset(quiver, d)
    diagnostics = None
    if lattice:
        ok, _ = p.is_lattice()
        diagnostics = {
            "is_lattice": ok,
            "distributive": p.is_distributive() if ok else None,
            "n5_witness": p.n5_witness() if ok else None,
            "m3_witness": p.m3_witness() if ok else None,
        }
    if fmt == "dot":
        text = p.hasse_dot()
        if diagnostics is not None:
            text += "\n// lattice: %s, distributive: %s" % (
                diagnostics["is_lattice"],
                diagnostics["distributive"],
            )
            if diagnostics["n5_witness"]:
                text += "\n// N5 witness: %s" % (diagnostics["n5_witness"],)
        _emit(text, output)
    elif fmt == "text":
        lines = ["elements (%d):" % len(p.elements)]
        coeffs = p.coefficients()
        for e in p.elements:
            ups = " ".join(",".join(map(str, v)) for v in p.covers[e])
            lines.append(
                "  %s coeff=%d -> %s" % (",".join(map(str, e)), coeffs[e], ups or "-")
            )
        if p.excluded:
            lines.append(
                "excluded: %s"
                % " ".join(",".join(map(str, e)) for e in sorted(p.excluded))
            )
        if diagnostics is not None:
            if diagnostics["is_lattice"] and not diagnostics["distributive"]:
                lines.append("lattice: non-distributive, N5 witness: %s" % (diagnostics["n5_witness"],))
            elif diagnostics["is_lattice"]:
                lines.append("lattice: distributive")
            else:
                lines.append("not a lattice")
        _emit("\n".join(lines), output)
    else:
        payload = {
            "schema": 1,
            "quiver": format_quiver(quiver),
            "root": list(d),
            "elements": [list(e) for e in p.elements],
            "covers": {
                ",".join(map(str, e)): [list(v) for v in p.covers[e]] for e in p.elements
            },
            "excluded": [list(e) for e in sorted(p.excluded)],
            "coefficients": {
                ",".join(map(str, e)): c for e, c in sorted(p.coefficients().items())
            },
        }
        if diagnostics is not None:
            payload["lattice"] = {
                "is_lattice": diagnostics["is_lattice"],
                "distributive": diagnostics["distributive"],
                "n5_witness": {k: list(v) for k, v in diagnostics["n5_witness"].items()}
                if diagnostics["n5_witness"]
                else None,
                "m3_witness": {k: list(v) for k, v in diagnostics["m3_witness"].items()}
                if diagnostics["m3_witness"]
                else None,
            }
        _emit(json.dumps(payload, indent=2, sort_keys=True), output)


# ---- verify --------------------------------------------------------------------------


def _verify_one_orientation(args):
    """Worker: full verification of one orientation (picklable payload)."""
    n, arrows, oracles = args
    quiver = Quiver(n, arrows)
    results = []
    for report in verify_quiver(quiver, oracles=oracles):
        d = report["root"]
        poset = FlipPoset(quiver, d)
        roundtrip = all(
            e_from_config(poset.graph, d, config) == e
            for e, config in poset.configs.items()
        )
        results.append(
            {
                "quiver": format_quiver(quiver),
                "root": list(d),
                "ok": bool(report["ok"] and roundtrip),
                "roundtrip": roundtrip,
                "oracles": report["oracles"],
            }
        )
    return results


@main.command()
@click.option("--n", "rank", type=int, default=None, help="sweep every orientation at this rank")
@click.option("-q", "--quiver", "quiver_spec", default=None, help="verify a single quiver instead")
@click.option("-d", "--root", "root_spec", default=None, help="restrict to one root")
@click.option("--oracle", "oracle_spec", default="tran,mutation", help="comma-joined subset")
@click.option("--jobs", type=int, default=None, help="parallel orientations (default: cores)")
@click.option("-f", "--format", "fmt", type=click.Choice(["text", "json"]), default="text")
@click.option("--explain", is_flag=True, help="per-instance lines, not just the summary")
@click.option("-o", "--output", default=None, type=click.Path(dir_okay=False))
def verify(rank, quiver_spec, root_spec, oracle_spec, jobs, fmt, explain, output):
    """Cross-check the dimer model against the independent oracles."""
    oracles = _oracle_list(oracle_spec)
    if (rank is None) == (quiver_spec is None):
        raise click.UsageError("give exactly one of --n or --quiver")
    if quiver_spec is not None:
        quivers = [_parse_quiver_opt(quiver_spec)]
    else:
        if rank < 4:
            click.echo("error: rank must be at least 4", err=True)
            sys.exit(EXIT_SEMANTIC)
        quivers = all_orientations(rank)
    if root_spec is not None:
        if len(quivers) != 1:
            raise click.UsageError("--root requires --quiver")
        d = _parse_root_opt(root_spec, quivers[0].n)
        tasks = [(quivers[0].n, quivers[0].arrows, oracles)]
        results = [
            r
            for r in _verify_one_orientation(tasks[0])
            if tuple(r["root"]) == d
        ]
    else:
        tasks = [(q.n, q.arrows, oracles) for q in quivers]
        if jobs is None:
            jobs = multiprocessing.cpu_count()
        if jobs > 1 and len(tasks) > 1:
            with multiprocessing.Pool(jobs) as pool:
                chunks = pool.map(_verify_one_orientation, tasks)
        else:
            chunks = [_verify_one_orientation(t) for t in tasks]
        results = [r for chunk in chunks for r in chunk]
    failures = [r for r in results if not r["ok"]]
    if fmt == "json":
        payload = {
            "schema": 1,
            "oracles": list(oracles),
            "instances": len(results),
            "failures": failures,
        }
        if explain:
            payload["results"] = results
        _emit(json.dumps(payload, indent=2, sort_keys=True), output)
    else:
        lines = []
        if explain:
            for r in results:
                lines.append(
                    "%s  d=%s  %s"
                    % (
                        r["quiver"],
                        ",".join(map(str, r["root"])),
                        "ok" if r["ok"] else "MISMATCH",
                    )
                )
        lines.append(
            "verified %d instances against %s: %s"
            % (
                len(results),
                "+".join(oracles),
                "all ok" if not failures else "%d FAILED" % len(failures),
            )
        )
        if failures:
            lines.append(json.dumps({"schema": 1, "failures": failures}, indent=2, sort_keys=True))
        _emit("\n".join(lines), output)
    if failures:
        sys.exit(EXIT_MISMATCH)


if __name__ == "__main__":
    main()

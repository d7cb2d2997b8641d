"""Command-line front end: ``pcsnet {dictionary,network,design,sonify}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Sequence

from . import metrics
from .catalog import Catalog, pcs_dictionary, rhythm_dictionary, rhythm_p_dictionary
from .community import louvain
from .design import ByName, ByProb, harmonic_design, network_harmony_gen, rhythmic_design, score_design
from .errors import PcsNetError
from .graph import Graph
from .netgen import (
    NetworkParams,
    ego_network,
    orchestral_network,
    pcs_network,
    r_lead_network,
    read_chord_sequence,
    read_orchestration,
    rhythm_network,
    score_dictionary,
    score_subnetwork,
    vl_network,
    vl_network_by_name,
)
from .pitch import parse_int_list
from .rhythm import parse_durations
from .sonify import SCALES, midi_map, read_series, scale_map, write_events_json, write_midi

log = logging.getLogger("pcsnet")


@dataclass
class RunConfig:
    subcommand: str
    space: str | None
    input: str | None
    out_dir: str
    thup: float | None
    thdw: float | None
    metric: str
    prob: float
    seed: int
    tet: int
    extra: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


_RUN_KEYS = {"command", "space", "input", "out_dir", "thup", "thdw", "metric", "prob", "seed", "tet", "verbose"}


def _run_config(args: argparse.Namespace) -> RunConfig:
    extra = {k: v for k, v in sorted(vars(args).items()) if k not in _RUN_KEYS}
    return RunConfig(
        args.command, getattr(args, "space", None), getattr(args, "input", None), args.out_dir,
        getattr(args, "thup", None), getattr(args, "thdw", None), args.metric,
        getattr(args, "prob", 1.0), args.seed, args.tet, extra,
    )


def _row(text: str | None) -> list[int] | None:
    if not text:
        return None
    return parse_int_list(text if text.strip().startswith("[") else f"[{text}]")


def _csv_list(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _build_catalog(args: argparse.Namespace, space: str, parser: argparse.ArgumentParser) -> Catalog:
    if args.catalog:
        return Catalog.read_csv(args.catalog, "rhythm" if space in ("rhythm", "rlead") else "pcs", args.tet)
    if space in ("rhythm", "rlead"):
        if args.symbols:
            return rhythm_dictionary(args.nc, _csv_list(args.symbols))[0]
        if args.n is None or args.nc is None:
            parser.error("rhythm spaces need --symbols, or --n and --nc, or --catalog")
        return rhythm_p_dictionary(args.n, args.nc, args.ref)[0]
    if args.nc is None:
        parser.error("--nc is required")
    return pcs_dictionary(args.nc, args.tet, args.order, _row(args.row))[0]


def _write_stats(out: Path, graph: Graph, seed: int, extra: dict | None = None) -> None:
    comm = louvain(graph, seed)
    stats = {
        "avgdeg": graph.average_degree(),
        "modularity": comm.modularity,
        "communities": comm.count,
        "seed": seed,
        "nodes": len(graph.nodes),
        "edges": len(graph.edges),
    }
    stats.update(extra or {})
    (out / "stats.json").write_text(json.dumps(stats, sort_keys=True) + "\n", encoding="utf-8")


def _params(args: argparse.Namespace, default_thdw: float) -> NetworkParams:
    thup = 1.5 if args.thup is None else args.thup
    thdw = default_thdw if args.thdw is None else args.thdw
    return NetworkParams(thup, thdw, args.metric, args.prob, args.seed)


def cmd_dictionary(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    out = Path(args.out_dir)
    if args.space == "score":
        if not args.input:
            parser.error("--space score needs --input")
        cat, zlist = score_dictionary(read_chord_sequence(args.input)), []
    elif args.space == "rhythm":
        if not args.symbols:
            parser.error("--space rhythm needs --symbols")
        cat, zlist = rhythm_dictionary(args.nc, _csv_list(args.symbols))
    elif args.space == "rhythmP":
        if args.nc is None or args.n is None:
            parser.error("--space rhythmP needs --n and --nc")
        cat, zlist = rhythm_p_dictionary(args.n, args.nc, args.ref)
    else:
        if args.nc is None:
            parser.error("--space pcs needs --nc")
        cat, zlist = pcs_dictionary(args.nc, args.tet, args.order, _row(args.row))
    cat.write_csv(out / "dictionary.csv")
    (out / "zlist.txt").write_text("".join(z + "\n" for z in zlist), encoding="utf-8")
    log.info("wrote %d rows to %s", len(cat), out / "dictionary.csv")


def cmd_network(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    out = Path(args.out_dir)
    space = args.space
    if space in ("score", "orch"):
        if not args.input:
            parser.error(f"--space {space} needs --input")
        if space == "score":
            seq = read_chord_sequence(args.input)
            end = len(seq) if args.end is None else args.end
            res = score_subnetwork(seq, args.start, end, args.general, args.metric, args.seed)
            res.graph.write_csv(out / "nodes.csv", out / "edges.csv")
            _write_stats(out, res.graph, args.seed, {"counts": res.counts})
        else:
            _, seq = read_orchestration(args.input)
            res = orchestral_network(seq, args.seed)
            res.graph.write_csv(out / "nodes.csv", out / "edges.csv")
            _write_stats(out, res.graph, args.seed)
        return

    cat = _build_catalog(args, space, parser)
    if args.ego:
        if space != "pcs":
            parser.error("--ego applies to --space pcs only")
        p = _params(args, 0.1)
        ego, alters = ego_network(args.ego, cat, args.thup_e, args.thdw_e, p.thup, p.thdw, args.metric)
        ego.write_csv(out / "nodes_ego.csv", out / "edges_ego.csv")
        alters.write_edges_csv(out / "edges_alters.csv")
        _write_stats(out, ego, args.seed)
        return
    if space == "pcs":
        g = pcs_network(cat, _params(args, 0.0), args.jobs, args.pcslabel)
    elif space == "vlead":
        g = vl_network(cat, _params(args, 0.1), args.jobs, args.pcslabel)
    elif space == "vleadname":
        if not args.name:
            parser.error("--space vleadname needs --name")
        g = vl_network_by_name(cat, args.name, args.metric, args.pcslabel)
    elif space == "rhythm":
        g = rhythm_network(cat, _params(args, 0.0), args.jobs, args.pcslabel)
    else:
        g = r_lead_network(cat, _params(args, 0.1), args.jobs, args.pcslabel)
    g.write_csv(out / "nodes.csv", out / "edges.csv")
    _write_stats(out, g, args.seed)


def cmd_design(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    out = Path(args.out_dir)
    if args.ref_nodes or args.ref_edges:
        if not (args.ref_nodes and args.ref_edges):
            parser.error("--ref-nodes and --ref-edges go together")
        ref = Graph.read_csv(args.ref_nodes, args.ref_edges)
    else:
        space = "rhythm" if args.space == "rhythm" else "pcs"
        cat = _build_catalog(args, space, parser)
        if space == "rhythm":
            ref = rhythm_network(cat, _params(args, 0.0), args.jobs, pcslabel=True)
        elif args.name:
            ref = network_harmony_gen(cat, ByName(tuple(args.name)), args.metric, args.seed)
        else:
            p = _params(args, 0.1)
            ref = network_harmony_gen(cat, ByProb(((p.thdw, p.thup),), (p.prob,)), args.metric, args.seed)
    build = rhythmic_design if args.space == "rhythm" else harmonic_design
    seq = build(ref, args.nnodes, args.nedges, args.nstart, args.seed, args.reverse)
    seq.write_json(out / "design.json")
    (out / "route.json").write_text(json.dumps(seq.meta, sort_keys=True) + "\n", encoding="utf-8")
    if args.midi:
        if args.space == "rhythm":
            parser.error("--midi needs a harmonic design")
        cells = [parse_durations(_csv_list(c)) for c in args.durations]
        events = score_design(seq, cells, args.fac, args.tet, args.base_note, args.velocity)
        write_events_json(events, out / "events.json")
        write_midi(events, out / "design.mid", args.tpq, args.bpm)


def cmd_sonify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    out = Path(args.out_dir)
    events = midi_map(
        read_series(args.input), scale_map(args.scale), args.base_note, args.octaves, args.duration, args.velocity
    )
    write_events_json(events, out / "events.json")
    write_midi(events, out / "sonify.mid", args.tpq, args.bpm)


def _add_catalog_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--nc", type=int, help="cardinality of the sets or cells")
    p.add_argument("--order", choices=["prime", "normal", "normal0"], default="prime")
    p.add_argument("--row", help="restrict pcs enumeration to subsets of this row, e.g. 0,4,7,11")
    p.add_argument("--symbols", help="comma-separated durations for rhythm spaces, e.g. q,e,e,s")
    p.add_argument("--n", type=int, help="number of reference units for rhythmP")
    p.add_argument("--ref", default="e", help="reference unit for rhythmP (default e)")
    p.add_argument("--catalog", help="read the catalog from a dictionary CSV instead of enumerating")


def _add_threshold_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--thup", type=float, help="upper distance threshold (default 1.5)")
    p.add_argument("--thdw", type=float, help="lower distance threshold (default 0, or 0.1 for leading spaces)")
    p.add_argument("--prob", type=float, default=1.0, help="keep each candidate edge with this probability")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for pairwise distances")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--metric", choices=metrics.METRICS, default=metrics.DEFAULT_METRIC)
    common.add_argument("--out-dir", default=".")
    common.add_argument("--tet", type=int, default=12)
    common.add_argument("-v", "--verbose", action="store_true", help="log the run configuration")

    parser = argparse.ArgumentParser(prog="pcsnet", description="Pitch-class set and rhythm network toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dictionary", parents=[common], help="enumerate a catalog")
    d.add_argument("--space", choices=["pcs", "rhythm", "rhythmP", "score"], default="pcs")
    d.add_argument("--input", help="chord sequence JSON for --space score")
    _add_catalog_flags(d)

    n = sub.add_parser("network", parents=[common], help="build a network")
    n.add_argument("--space", choices=["pcs", "vlead", "vleadname", "rhythm", "rlead", "score", "orch"], default="pcs")
    n.add_argument("--input", help="chord sequence JSON (score) or 0/1 CSV table (orch)")
    n.add_argument("--name", help="operator name for vleadname, e.g. 'O(1)' or 'R(0,1,-1)'")
    n.add_argument("--general", action=argparse.BooleanOptionalAction, default=True,
                   help="label score edges with signed operators (default) or distance operators")
    n.add_argument("--start", type=int, default=0)
    n.add_argument("--end", type=int)
    n.add_argument("--ego", help="focal node (name or element) for an ego network")
    n.add_argument("--thup-e", type=float, default=5.0)
    n.add_argument("--thdw-e", type=float, default=0.1)
    n.add_argument("--pcslabel", action="store_true", help="label nodes by element instead of name")
    _add_catalog_flags(n)
    _add_threshold_flags(n)

    g = sub.add_parser("design", parents=[common], help="generate a chord or rhythm sequence")
    g.add_argument("--space", choices=["pcs", "rhythm"], default="pcs")
    g.add_argument("--name", action="append", help="operator name slice; repeatable")
    g.add_argument("--ref-nodes", help="reference network nodes CSV (labels must be elements)")
    g.add_argument("--ref-edges", help="reference network edges CSV")
    g.add_argument("--nnodes", type=int, required=True)
    g.add_argument("--nedges", type=int, default=1)
    g.add_argument("--nstart", type=int, default=0)
    g.add_argument("--reverse", action="store_true")
    g.add_argument("--midi", action="store_true", help="also write events.json and design.mid")
    g.add_argument("--durations", action="append", default=None,
                   help="rhythm cell for the score, e.g. q,e,e; repeatable; default q")
    g.add_argument("--fac", type=float, default=1.0)
    g.add_argument("--base-note", type=int, default=60)
    g.add_argument("--velocity", type=int, default=80)
    g.add_argument("--tpq", type=int, default=480)
    g.add_argument("--bpm", type=int, default=120)
    _add_catalog_flags(g)
    _add_threshold_flags(g)

    s = sub.add_parser("sonify", parents=[common], help="map a data series to MIDI")
    s.add_argument("--input", required=True, help="two-column data file")
    s.add_argument("--scale", choices=list(SCALES), default="chromatic")
    s.add_argument("--base-note", type=int, default=60)
    s.add_argument("--octaves", type=int, default=1)
    s.add_argument("--duration", default="q", help="duration symbol or fraction of a whole note")
    s.add_argument("--velocity", type=int, default=80)
    s.add_argument("--tpq", type=int, default=480)
    s.add_argument("--bpm", type=int, default=120)
    return parser


_COMMANDS = {"dictionary": cmd_dictionary, "network": cmd_network, "design": cmd_design, "sonify": cmd_sonify}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "design" and args.durations is None:
        args.durations = ["q"]
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    config = _run_config(args)
    try:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "run_config.json").write_text(config.to_json() + "\n", encoding="utf-8")
        log.info("run config %s", config.to_json())
        _COMMANDS[args.command](args, parser)
    except PcsNetError as exc:
        print(f"pcsnet: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"pcsnet: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Pitch-class set, voice-leading and rhythm networks for analysis and composition."""

from .catalog import Catalog, CatalogRow, Ordering, pcs_dictionary, rhythm_dictionary, rhythm_p_dictionary
from .community import Communities, detect_communities, louvain, modularity
from .design import (
    ByName,
    ByProb,
    DesignSequence,
    PostmanTour,
    barabasi_albert,
    chinese_postman,
    harmonic_design,
    network_harmony_gen,
    postman_route,
    rhythmic_design,
    score_design,
)
from .errors import (
    PcsNetError, EmptySet, DimensionMismatch, CardinalityMismatch, NotATriad,
    NotInvertibleMultiplier, UnknownOperator, UnknownMetric, UnknownDuration,
    NonPositiveDuration, BadCardinality, InvalidParams, NoSuchNode, EmptySequence,
    Disconnected, ScaffoldTooLarge, ParseError, EmptySeries, UnknownScale, NoteRange,
)
from .graph import Edge, Graph
from .netgen import (
    ChordSequence,
    NetworkParams,
    OrchVector,
    ego_network,
    orchestral_network,
    pcs_network,
    r_lead_network,
    read_chord_sequence,
    read_orchestration,
    rhythm_network,
    score_dictionary,
    score_network,
    score_subnetwork,
    vl_network,
    vl_network_by_name,
    write_chord_sequence,
)
from .pitch import PcSet, ToneRow, parse_pcs, pcs
from .rhythm import DURATIONS, RhythmSeq, parse_durations, parse_rhythm, render_durations, rhythm_distance
from .sonify import (
    DataSeries,
    NoteEvent,
    ScaleMap,
    ScoreEvents,
    midi_bytes,
    midi_map,
    read_series,
    scale_map,
    write_midi,
)
from .voicelead import (
    OperatorName,
    apply_distance_op,
    apply_vl_op,
    generalized_leading,
    generalized_ops_name,
    iv_distance,
    minimal_leading,
    nonbij_distance,
    ops_name_distance,
    ops_name_vl,
    vl_distance,
)

__version__ = "0.1.0"

__all__ = [
    "BadCardinality",
    "ByName",
    "ByProb",
    "CardinalityMismatch",
    "Catalog",
    "CatalogRow",
    "ChordSequence",
    "Communities",
    "DURATIONS",
    "DataSeries",
    "DesignSequence",
    "DimensionMismatch",
    "Disconnected",
    "Edge",
    "EmptySequence",
    "EmptySeries",
    "EmptySet",
    "Graph",
    "InvalidParams",
    "NetworkParams",
    "NoSuchNode",
    "NonPositiveDuration",
    "NotATriad",
    "NotInvertibleMultiplier",
    "NoteEvent",
    "NoteRange",
    "OperatorName",
    "OrchVector",
    "Ordering",
    "ParseError",
    "PcSet",
    "PcsNetError",
    "PostmanTour",
    "RhythmSeq",
    "ScaffoldTooLarge",
    "ScaleMap",
    "ScoreEvents",
    "ToneRow",
    "UnknownDuration",
    "UnknownMetric",
    "UnknownOperator",
    "UnknownScale",
    "apply_distance_op",
    "apply_vl_op",
    "barabasi_albert",
    "chinese_postman",
    "detect_communities",
    "ego_network",
    "generalized_leading",
    "generalized_ops_name",
    "harmonic_design",
    "iv_distance",
    "louvain",
    "midi_bytes",
    "midi_map",
    "minimal_leading",
    "modularity",
    "network_harmony_gen",
    "nonbij_distance",
    "ops_name_distance",
    "ops_name_vl",
    "orchestral_network",
    "parse_durations",
    "parse_pcs",
    "parse_rhythm",
    "pcs",
    "pcs_dictionary",
    "pcs_network",
    "postman_route",
    "r_lead_network",
    "read_chord_sequence",
    "read_orchestration",
    "read_series",
    "render_durations",
    "rhythm_dictionary",
    "rhythm_distance",
    "rhythm_network",
    "rhythm_p_dictionary",
    "rhythmic_design",
    "scale_map",
    "score_design",
    "score_dictionary",
    "score_network",
    "score_subnetwork",
    "vl_distance",
    "vl_network",
    "vl_network_by_name",
    "write_chord_sequence",
    "write_midi",
]

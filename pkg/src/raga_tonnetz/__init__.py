"""Map raga pitch sets onto the tonnetz and classify their shape."""

from .classify import Heaviness, HeavinessCounts, classify, heaviness_counts
from .corpus import Period, Prahar, RagaRecord, load_default_corpus, parse_corpus, read_corpus
from .embed import (
    Embedding,
    EmbeddingResult,
    SearchWindow,
    candidate_points,
    canonicalize,
    edge_count,
    solve_embedding,
)
from .exceptions import DuplicateSwara, EmptyPitchSet, UnknownRaga, UnknownSwara
from .render import RenderOptions, render_tonnetz_svg
from .report import (
    aggregate_range,
    analyze_corpus,
    table_by_prahar,
    table_day_night,
    vadi_time_half,
)
from .swara import PitchSet, SwaraDegree, format_swara, interval_name, parse_pitch_set, parse_swara
from .tonnetz import LatticePoint, are_adjacent, euclidean_position, neighbors, pitch_class_at

__version__ = "0.1.0"

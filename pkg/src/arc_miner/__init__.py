"""arc-miner: sentiment arcs from non-punctuated transcripts.

Pipeline stages: caption ingestion -> valence-shifter-aware sentiment
extraction -> DCT narrative-time trajectories -> k-means arc clustering
-> categorical statistics -> SVG figures.
"""

from .caption_ingest import (
    CaptionCue,
    IngestError,
    Transcript,
    build_corpus,
    merge_cues,
    parse_caption_file,
    read_corpus,
    write_corpus,
)
from .clustering import (
    ArcModel,
    ClusterSummary,
    fit,
    kmeanspp_init,
    lloyd,
    match_taxonomy,
    scree,
    suggest_elbow,
    summarize,
)
from .errors import (
    ArcMinerError,
    CaptionParseError,
    DataError,
    InputError,
    InvariantError,
    LexiconError,
    ParameterError,
)
from .lexicon import PolarityLexicon, ShifterLexicon, load_polarity, load_shifters
from .sentiment import (
    ExtractionParams,
    SentimentSeries,
    extract,
    shifter_weight,
    tokenize,
)
from .stats import (
    AssocResult,
    ContingencyTable,
    GofResult,
    chi2_upper_tail,
    chisq_assoc,
    chisq_gof,
    descriptives,
    gof_residuals,
    outlier_mask,
    standardize_views,
)
from .taxonomy import default_templates, load_templates
from .trajectory import (
    Trajectory,
    TrajectoryParams,
    dct_forward,
    low_pass_reconstruct,
    make_trajectory,
    scale_to_unit,
)

__version__ = "0.1.0"

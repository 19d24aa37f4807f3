# Copyright the lra authors. Apache-2.0 license; see LICENSE in the project root.
"""Latent relational analysis: relational similarity between word pairs.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from lra._core import (
    Corpus,
    LraConfig,
    PipelineResult,
    Thesaurus,
    cosine,
    run_pipeline,
    score_sat,
    stem,
    tokenize,
    truncated_svd,
    vsm_similarity,
    vsm_vector,
)

__all__ = [
    "Corpus",
    "LraConfig",
    "PipelineResult",
    "Thesaurus",
    "cosine",
    "run_pipeline",
    "score_sat",
    "stem",
    "tokenize",
    "truncated_svd",
    "vsm_similarity",
    "vsm_vector",
]

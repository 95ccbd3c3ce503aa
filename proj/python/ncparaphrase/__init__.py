"""Noun-compound paraphrasing toolkit.

Thin convenience layer over the compiled `_core` module: the dict-level
functions below serialize configs to JSON for the C++ side and parse the JSON
reports coming back.
"""

import json as _json

from ncparaphrase import _core
from ncparaphrase._core import (  # noqa: F401
    DataError,
    Model,
    NumericError,
    UsageError,
    baseline_retrieve,
    extract_pos_patterns,
    word_match,
)

__all__ = [
    "DataError",
    "Model",
    "NumericError",
    "UsageError",
    "baseline_retrieve",
    "build_data",
    "classify",
    "default_config",
    "export_encodings",
    "extract_pos_patterns",
    "rerank",
    "score",
    "train",
    "word_match",
]


def default_config():
    """The toolkit's resolved default configuration as a dict."""
    return _json.loads(_core.default_config_json())


def _merged(config):
    merged = default_config()

    def update(dst, src):
        for key, value in src.items():
            if isinstance(value, dict) and isinstance(dst.get(key), dict):
                update(dst[key], value)
            else:
                dst[key] = value

    update(merged, config or {})
    return _json.dumps(merged)


def build_data(config):
    """Mine the weighted training set; returns the stats as a dict."""
    stats = {}
    for line in _core.build_data_json(_merged(config)).splitlines():
        key, value = line.rsplit(" ", 1)
        stats[key] = int(value)
    return stats


def train(config):
    return _json.loads(_core.train_json(_merged(config)))


def rerank(config):
    _core.rerank(_merged(config))


def score(config):
    return _json.loads(_core.score_json(_merged(config)))


def classify(config):
    return _json.loads(_core.classify_json(_merged(config)))


def export_encodings(config):
    _core.export_encodings(_merged(config))

import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))  # make `import helpers` work anywhere

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=50,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture(scope="session")
def repo_root():
    return ROOT


@pytest.fixture(scope="session")
def corpus_records():
    from tracegenus.corpus import read_corpus

    return read_corpus(ROOT / "corpus" / "fields.csv")


@pytest.fixture(scope="session")
def corpus_analyses(corpus_records):
    from tracegenus import analyze_field, parse_poly

    return {r.label: analyze_field(parse_poly(r.text)) for r in corpus_records}


@pytest.fixture()
def analysis_of(corpus_analyses):
    def get(label):
        return corpus_analyses[label]

    return get

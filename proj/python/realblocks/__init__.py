"""Python access to the realblocks suite."""

import json

from ._realblocks import (
    CapacityError,
    InputError,
    __version__,
    blocks,
    construct_entry,
    table_summary,
)
from ._realblocks import analyze as _analyze


def analyze(corpus_text, primes=(), checks="", jobs=1):
    """Runs the suite on corpus text and returns the report as a dict."""
    return json.loads(_analyze(corpus_text, list(primes), checks, jobs))


__all__ = [
    "CapacityError",
    "InputError",
    "__version__",
    "analyze",
    "blocks",
    "construct_entry",
    "table_summary",
]

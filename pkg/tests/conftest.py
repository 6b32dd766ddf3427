"""Shared fixtures. The n = 5..8 graph6 corpus is built once by the
internal augmentation engine and cached under tests/data/ because the
n = 8 level canonicalizes ~134k graphs."""

import pathlib

import pytest

from specchrom.enumeration import _graph_from_masks, _representatives
from specchrom.graph6 import write_graph6

DATA_DIR = pathlib.Path(__file__).parent / "data"

CORPUS_COUNTS = {5: 34, 6: 156, 7: 1044, 8: 12346}


@pytest.fixture(scope="session")
def corpus_5_8_path():
    DATA_DIR.mkdir(exist_ok=True)
    path = DATA_DIR / "corpus_5_8.g6"
    if path.exists():
        lines = path.read_text(encoding="ascii").splitlines()
        if len(lines) == sum(CORPUS_COUNTS.values()):
            return path
    with open(path, "w", encoding="ascii") as fh:
        for n in sorted(CORPUS_COUNTS):
            count = 0
            for masks in _representatives(n):
                fh.write(write_graph6(_graph_from_masks(masks)) + "\n")
                count += 1
            assert count == CORPUS_COUNTS[n]
    return path

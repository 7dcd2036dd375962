from __future__ import annotations

import pytest
from hypothesis import settings

from maniplex.constructions import construction
from maniplex.stg import quotient
from maniplex.symmetry import aut_group

settings.register_profile("suite", max_examples=25, derandomize=True, deadline=None)
settings.load_profile("suite")


CORPUS_LABELS = tuple(
    [f"polygon:{l}" for l in range(3, 13)]
    + [f"simplex:{d}" for d in range(1, 6)]
    + [f"hypercube:{d}" for d in range(1, 6)]
    + [f"prism:{l}" for l in range(3, 9)]
    + [f"pyramid:{l}" for l in range(3, 9)]
    + ["cube", "tetrahedron", "octahedron", "cuboctahedron", "hemicube"]
    + [
        f"torus44:{b},{c}"
        for b in range(6)
        for c in range(6)
        if (b, c) != (0, 0) and b * b + c * c <= 25
    ]
)


class CorpusCache:
    """Build each corpus item (and its group data) once per session."""

    def __init__(self):
        self._graphs = {}
        self._auts = {}
        self._stgs = {}

    def graph(self, label):
        if label not in self._graphs:
            self._graphs[label] = construction(label)
        return self._graphs[label]

    def aut(self, label):
        if label not in self._auts:
            self._auts[label] = aut_group(self.graph(label))
        return self._auts[label]

    def stg(self, label):
        if label not in self._stgs:
            self._stgs[label] = quotient(self.graph(label), self.aut(label))
        return self._stgs[label]


@pytest.fixture(scope="session")
def corpus():
    return CorpusCache()

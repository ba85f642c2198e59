import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for the reference module

import mocd

DATA_DIR = Path(__file__).parent.parent / "data"

# the worked 34-gene decoding example and its four clusters
WORKED_GENES = [2, 3, 4, 14, 17, 17, 6, 14, 19, 19, 17, 14, 2, 9, 19, 9, 15,
                8, 21, 8, 27, 1, 15, 26, 26, 32, 30, 26, 25, 3, 19, 4, 23, 9]
WORKED_CLUSTERS = [
    {1, 2, 3, 4, 14, 8, 12, 13, 18, 20, 22},
    {5, 17, 6, 7, 11},
    {9, 19, 10, 15, 16, 21, 27, 23, 30, 31, 33, 34},
    {24, 26, 25, 32, 28, 29},
]

TINY_GRAPHS = {
    "triangle": "1 2\n2 3\n3 1",
    "two_triangles": "1 2\n2 3\n3 1\n4 5\n5 6\n6 4",
    "path4": "1 2\n2 3\n3 4",
    "star5": "c 1\nc 2\nc 3\nc 4\nc 5",
    "cycle6": "1 2\n2 3\n3 4\n4 5\n5 6\n6 1",
    "barbell": "1 2\n1 3\n2 3\n4 5\n4 6\n5 6\n3 4",
    "k33": "a x\na y\na z\nb x\nb y\nb z\nc x\nc y\nc z",
}


@pytest.fixture(scope="session")
def karate():
    return mocd.load_edge_list((DATA_DIR / "karate.edges").read_text())


@pytest.fixture(scope="session")
def karate_truth(karate):
    return mocd.load_membership((DATA_DIR / "karate.truth").read_text(), karate)


@pytest.fixture(scope="session")
def karate_paper(karate):
    """Karate with internal indices equal to the standard 1..34 numbering
    (load_edge_list interns labels in first-appearance order, which differs)."""
    import numpy as np

    edges = np.array(
        [[int(karate.label_of(u)), int(karate.label_of(v))] for u, v in karate.edges]
    )
    return mocd.Graph(34, edges)


@pytest.fixture(scope="session")
def karate_paper_truth(karate_paper):
    return mocd.load_membership((DATA_DIR / "karate.truth").read_text(), karate_paper)


@pytest.fixture(params=["compiled", "python"])
def kernel_name(request):
    if request.param == "compiled":
        pytest.importorskip("mocd._kernels._speedups")
    return request.param


def tiny_graph(name: str) -> mocd.Graph:
    return mocd.load_edge_list(TINY_GRAPHS[name])

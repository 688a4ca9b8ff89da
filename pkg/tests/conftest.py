import pytest

from clab.graphs import build_graph


def cycle(n: int, name: str | None = None):
    verts = [f"v{i}" for i in range(n)]
    edges = [(verts[i], verts[(i + 1) % n]) for i in range(n)]
    return build_graph(verts, edges, name=name or f"C{n}")


def complete(n: int, name: str | None = None):
    verts = [f"v{i}" for i in range(n)]
    edges = [(verts[i], verts[j]) for i in range(n) for j in range(i + 1, n)]
    return build_graph(verts, edges, name=name or f"K{n}")


@pytest.fixture
def k2():
    return complete(2)


@pytest.fixture
def k3():
    return complete(3)


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def c7():
    return cycle(7)

import pytest

from mixedconn import generators as gen


@pytest.fixture(scope="session")
def atlas_graphs():
    """Every simple biconnected graph on at most 6 vertices, up to isomorphism."""
    return list(gen.small_biconnected_simple(6))


@pytest.fixture(scope="session")
def random_graphs():
    """500 seeded random biconnected multigraphs, at most 8 vertices and 14 edges."""
    return list(gen.random_corpus(500, seed=0, max_vertices=8, max_edges=14))


@pytest.fixture(scope="session")
def corpus(atlas_graphs, random_graphs):
    return atlas_graphs + random_graphs


@pytest.fixture(scope="session")
def eulerian_graphs():
    return list(gen.eulerian_corpus(100, seed=0))


@pytest.fixture
def two_k4():
    """Two copies of K_4 sharing the edge 01, which stays in the graph."""
    return gen.glue(gen.complete(4), gen.complete(4), "share-edge")



_CRITERIA = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for name, value in report.user_properties:
        if name == "criterion":
            num, title = value
            ok, _, secs = _CRITERIA.get(num, (True, title, 0.0))
            _CRITERIA[num] = (ok and report.passed, title, secs + report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_CRITERIA):
        ok, title, secs = _CRITERIA[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if ok else 'FAIL'}  {title}  ({secs:.1f} s)")

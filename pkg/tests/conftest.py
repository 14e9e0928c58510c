import pytest

from ihara.graph import complete_graph, cube_graph, cycle_graph, path_graph, petersen


@pytest.fixture
def C3():
    return cycle_graph(3)


@pytest.fixture
def K4():
    return complete_graph(4)


@pytest.fixture
def P():
    return petersen()


def small_graphs():
    """The shared cross-check graph set."""
    return [cycle_graph(n) for n in range(3, 7)] + [
        complete_graph(4), complete_graph(5), petersen(), cube_graph()]


def irregular_graphs():
    from ihara.graph import build_graph

    # triangle with a pendant path, and a theta graph
    return [
        build_graph([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)], 5, name="lollipop"),
        build_graph([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4), (4, 1)], 5, name="house"),
        path_graph(4),
    ]


_ACCEPTANCE = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test body sets ``detail`` and asserts."""
    entry = {"name": request.node.name, "detail": "", "passed": False}
    _ACCEPTANCE.append(entry)
    yield entry
    rep = getattr(request.node, "rep_call", None)
    entry["passed"] = bool(rep and rep.passed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for e in _ACCEPTANCE:
        mark = "PASS" if e["passed"] else "FAIL"
        terminalreporter.write_line(f"[{mark}] {e['name']}: {e['detail']}")

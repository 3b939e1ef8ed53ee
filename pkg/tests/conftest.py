import pytest
import sympy

from whkit.algebra import function_algebra, groupoid_algebra
from whkit.groupoid import corpus

GROUPOIDS = corpus()
NAMES = list(GROUPOIDS)


def _build():
    out = {}
    for name, G in GROUPOIDS.items():
        out[("K", name)] = function_algebra(G)
        out[("CG", name)] = groupoid_algebra(G)
    return out


_ALGEBRAS = _build()


@pytest.fixture(scope="session")
def algebras():
    """All 14 corpus weak Hopf algebras keyed by (construction, groupoid name)."""
    return _ALGEBRAS


@pytest.fixture(params=sorted(_ALGEBRAS), ids=lambda k: f"{k[0]}-{k[1]}")
def W(request):
    return _ALGEBRAS[request.param]


@pytest.fixture(params=NAMES)
def gname(request):
    return request.param


def K(name):
    return _ALGEBRAS[("K", name)]


def CG(name):
    return _ALGEBRAS[("CG", name)]


def sympy_cointegral_dim(W):
    """Independent oracle: nullspace of the stacked system a h - eps_t(a) h = 0 in sympy."""
    n = W.n
    c = W.c
    # eps_t(e_a) = sum a1 S(a2), recomputed from the raw tables
    rows = []
    for a in range(n):
        et = [0] * n
        for i in range(n):
            for j in range(n):
                d = W.delta[i * n + j, a]
                if d:
                    for m in range(n):
                        s = W.S[m, j]
                        if s:
                            for k in range(n):
                                et[k] += d * s * c[i, m, k]
        for k in range(n):
            rows.append([c[a, h, k] - sum(et[x] * c[x, h, k] for x in range(n)) for h in range(n)])
    return len(sympy.Matrix(rows).nullspace())


# one summary line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])

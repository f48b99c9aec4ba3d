from qtcatalan.poly import BivariatePolynomial

# Coefficient arrays as printed for n=4 and n=5 (rows t-degree, cols q-degree).
DY4_MATRIX = [
    [1, 0, 0, 0, 0, 0, 0],
    [0, 3, 0, 2, 0, 1, 0],
    [0, 0, 3, 0, 2, 0, 1],
    [0, 0, 0, 1, 0, 0, 0],
]
DY5_MATRIX = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 4, 0, 3, 0, 2, 0, 1, 0, 0, 0],
    [0, 0, 6, 0, 6, 0, 5, 0, 2, 0, 1],
    [0, 0, 0, 4, 0, 3, 0, 2, 0, 1, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
]


def poly(text_terms):
    """Build a polynomial from ``[(coeff, q_exp, t_exp), ...]``."""
    return BivariatePolynomial({(a, r): c for c, a, r in text_terms})


Q = BivariatePolynomial.monomial(1, 0)
T = BivariatePolynomial.monomial(0, 1)
ONE = BivariatePolynomial.one()
ONE_QT = ONE + Q * T


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)

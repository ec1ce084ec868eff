"""Golden data for the certification command.

Known-good presentations of a few small charts and covers; `certify`
recomputes each one from scratch and cross-checks against these records with
the oracle.  Everything here is desk-scale.
"""

from .borel import MonomialIdeal
from .ring import parse_parampoly, parse_xpoly

# Chart of the 4-point Hilbert scheme in the plane whose marked scheme is A^8:
# saturation (x2^2, x2*x1, x1^3); at truncation level 2 the defining ideal has
# this reference presentation (8 cubics in the 12 chart parameters), and the
# four listed parameters can be eliminated linearly, leaving the zero ideal.
A8_CHART = {
    "n": 2,
    "saturation": "x2^2, x2*x1, x1^3",
    "m": 2,
    "num_vars": 12,
    "equations": [
        "-C[2,1]*C[2,2]*C[2,4] - C[2,2]*C[1,4] + C[1,2]*C[2,4] + C[1,1]*C[3,4]"
        " - C[2,1]^2*C[3,4] - C[2,3]*C[2,4]",
        "-C[2,3]*C[2,2] - C[2,1]*C[2,2]^2 - C[2,4] + C[1,1]*C[3,2] - C[2,1]^2*C[3,2]",
        "C[1,4] - C[2,1]*C[2,2]*C[2,3] - C[2,1]*C[2,4] - C[2,1]^2*C[3,3] - C[2,3]^2"
        " + C[1,1]*C[3,3] + C[1,2]*C[2,3] - C[2,2]*C[1,3]",
        "-C[2,1]^2*C[3,1] + C[1,3] - C[2,2]*C[1,1] + C[1,2]*C[2,1] - C[2,1]^2*C[2,2]"
        " + C[1,1]*C[3,1] - 2*C[2,3]*C[2,1]",
        "C[2,2]^2*C[2,4] - C[3,3]*C[2,4] + C[2,1]*C[3,2]*C[2,4] + C[2,1]*C[2,2]*C[3,4]"
        " + C[2,3]*C[3,4] - C[3,2]*C[1,4] - C[3,1]*C[2,2]*C[2,4]",
        "2*C[2,1]*C[3,2]*C[2,2] - C[3,4] - C[3,3]*C[2,2] - C[3,1]*C[2,2]^2"
        " + C[2,3]*C[3,2] + C[2,2]^3 - C[3,2]*C[1,2]",
        "C[2,1]*C[3,2]*C[2,3] + C[2,2]*C[2,4] + C[2,1]*C[2,2]*C[3,3]"
        " - C[3,1]*C[2,2]*C[2,3] - C[3,1]*C[2,4] + C[2,1]*C[3,4] - C[3,2]*C[1,3]"
        " + C[2,2]^2*C[2,3]",
        "C[2,1]^2*C[3,2] - C[1,1]*C[3,2] + C[2,1]*C[2,2]^2 + C[2,4] + C[2,3]*C[2,2]",
    ],
    "eliminated": [(1, 3), (1, 4), (2, 4), (3, 4)],
}

# Lex chart of the degree-3 genus-1 curves in P^3: the marked scheme over the
# full saturation (x3, x2^3) is cut out by the zero ideal in 12 parameters.
A12_CHART = {
    "n": 3,
    "saturation": "x3, x2^3",
    "m": 1,
    "num_vars": 12,
}

# Lex chart of mu points on a line in P^2, L = (x2, x1^mu): the marked scheme
# is an affine space of dimension n*mu.
POINTS_ON_LINE_CHARTS = [
    {"n": 2, "saturation": "x2, x1^2", "mu": 2, "free_dim": 4},
    {"n": 2, "saturation": "x2, x1^3", "mu": 3, "free_dim": 6},
]

# Two quadrics in the plane: quotient has constant Hilbert polynomial 4; with
# the recorded coordinate change the degree-4 chart form over the truncated
# first Borel chart is this explicit marked basis (one non-monomial element).
QUARTIC_POINTS = {
    "n": 2,
    "ideal": ["x2^2", "x1^2"],
    "g": ((1, 0, 0), (0, 1, 1), (0, 0, 1)),
    "chart_saturation": "x2^2, x2*x1, x1^3",
    "marked_basis": [
        "x2^4", "x2^3*x1", "x2^2*x1^2", "x2*x1^3", "x1^4",
        "x2^3*x0", "x2^2*x1*x0", "x2*x1^2*x0", "x1^3*x0",
        "x2^2*x0^2", "x2*x1*x0^2 + 1/2*x1^2*x0^2",
    ],
}

# Borel cover of the degree-3 genus-1 curves in P^3: one chart, four empty
# Borel loci with these quotient Hilbert polynomials.
CUBIC_CURVES_COVER = {
    "n": 3,
    "hp": "3*t",
    "chart_saturations": ["x3, x2^3"],
    "empty_quotients": ["2*t+3", "2*t+3", "t+6", "9"],
}

# Seven points in the plane: the cover has exactly these five charts
# (saturations listed by increasing regularity).
SEVEN_POINTS_COVER = {
    "n": 2,
    "hp": "7",
    "chart_saturations": [
        "x2^2, x2*x1^3, x1^4",
        "x2^3, x2^2*x1, x2*x1^2, x1^4",
        "x2^2, x2*x1^2, x1^5",
        "x2^2, x2*x1, x1^6",
        "x2, x1^7",
    ],
}


def saturation_ideal(record):
    return MonomialIdeal.parse(record["saturation"], record["n"])


def reference_equations(record):
    return [parse_parampoly(s) for s in record["equations"]]


def reference_marked_basis(record):
    return [parse_xpoly(s, record["n"]) for s in record["marked_basis"]]

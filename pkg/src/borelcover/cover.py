"""Assembling the Borel open cover.

Classifies the Borel ideals of the ambient Grassmannian family by the Hilbert
polynomial of their quotient (charts of the Hilbert scheme versus provably
empty loci), computes the chart-overlap gluing degrees, and packages the
whole thing as a machine-readable atlas.
"""

from __future__ import annotations

from dataclasses import dataclass

from .borel import (BorelChartIdeal, MonomialIdeal, enumerate_borel_in_g,
                    saturate)
from .errors import MathDomainError
from .hilbert import ChartConstants, chart_constants, coerce_hilbert_poly, \
    hilbert_polynomial
from .marked import embedding_dimension, naive_minor_count, scheme_equations
from .ring import canonical_key


@dataclass(frozen=True)
class Classification:
    """Borel family of the Grassmannian split by Hilbert polynomial."""

    constants: ChartConstants
    charts: tuple                 # BorelChartIdeal, increasing reg of saturation
    empty_charts: tuple           # (chart MonomialIdeal, quotient HilbertPoly)


def classify_grassmannian_borel(constants: ChartConstants,
                                max_ambient=120, max_nodes=2_000_000) -> Classification:
    """Split the Borel ideals of G(s, S_r) into charts and empty loci.

    A Borel ideal generated by s monomials of degree r gives a nonempty chart
    exactly when its quotient has the target Hilbert polynomial; the others
    carry the vanishing-hypersurface datum recorded alongside their quotient
    polynomial.
    """
    charts = []
    empty = []
    for J in enumerate_borel_in_g(constants.n, constants.r, constants.s,
                                  max_ambient, max_nodes):
        hp = hilbert_polynomial(J)
        if hp == constants.p:
            charts.append(BorelChartIdeal.from_saturation(saturate(J), constants.r))
        else:
            empty.append((J, hp))
    charts.sort(key=lambda c: (c.regularity_sat,
                               tuple(canonical_key(g) for g in c.saturation.gens)))
    empty.sort(key=lambda item: tuple(canonical_key(g) for g in item[0].gens))
    return Classification(constants=constants, charts=tuple(charts),
                          empty_charts=tuple(empty))


def gluing_degree(J1: MonomialIdeal, J2: MonomialIdeal) -> int:
    """Degree |B_J1 \\ B_J2| of the overlap hypersurface in the J1 chart."""
    for J in (J1, J2):
        if J.is_zero() or not J.generated_in_single_degree():
            raise MathDomainError(f"gluing needs single-degree chart ideals, got {J}")
    if J1.gens[0].degree() != J2.gens[0].degree():
        raise MathDomainError("gluing degree of charts at different levels")
    if len(J1.gens) != len(J2.gens):
        raise MathDomainError("charts have different generator counts")
    return len(set(J1.gens) - set(J2.gens))


_M_CHOICES = ("rho", "reg", "gotzmann")


def _m_value(choice, chart: BorelChartIdeal, constants: ChartConstants):
    if choice == "rho":
        return max(chart.rho - 1, 0)
    if choice == "reg":
        return chart.regularity_sat
    if choice == "gotzmann":
        return constants.r
    raise MathDomainError(f"unknown truncation choice {choice!r}; "
                          f"expected one of {_M_CHOICES}")


@dataclass(frozen=True)
class AtlasChart:
    chart: BorelChartIdeal
    dims: dict                    # m-choice label -> (m, embedding dimension)
    equations: object             # SchemeIdeal or None


@dataclass(frozen=True)
class Atlas:
    constants: ChartConstants
    charts: tuple
    empty_charts: tuple
    gluing: tuple                 # symmetric matrix of |B_i \ B_j| at level r

    def to_json_dict(self):
        c = self.constants
        out = {
            "n": c.n,
            "hilbert_polynomial": str(c.p),
            "degree": c.d,
            "gotzmann": c.r,
            "N_r": c.N_r,
            "s": c.s,
            "s_prime": c.s_prime,
            "D": c.D,
            "naive_minor_count": naive_minor_count(c),
            "charts": [],
            "empty_charts": [
                {"chart": J.to_json_dict(), "quotient_hilbert_polynomial": str(hp)}
                for J, hp in self.empty_charts
            ],
            "gluing_degrees": [list(row) for row in self.gluing],
        }
        for entry in self.charts:
            ch = entry.chart
            item = {
                "saturation": ch.saturation.to_json_dict(),
                "chart": ch.chart.to_json_dict(),
                "regularity_sat": ch.regularity_sat,
                "rho": ch.rho,
                "embedding_dimensions": {
                    label: {"m": m, "dim": dim}
                    for label, (m, dim) in sorted(entry.dims.items())
                },
            }
            if entry.equations is not None:
                eq = entry.equations
                item["equations"] = {
                    "m": eq.m,
                    "num_vars": eq.num_vars,
                    "num_generators": len(eq.generators),
                    "max_degree": eq.max_degree,
                    "bound_count": eq.bound_count,
                    "bound_degree": eq.bound_degree,
                    "generators": [str(g) for g in eq.generators],
                }
            out["charts"].append(item)
        return out


def atlas(n, p, with_equations=False, m_choice="reg", threads=1,
          max_ambient=120, max_nodes=2_000_000) -> Atlas:
    """Full Borel atlas of the Hilbert scheme for (n, p)."""
    p = coerce_hilbert_poly(p)
    constants = chart_constants(p, n)
    cls = classify_grassmannian_borel(constants, max_ambient, max_nodes)
    charts = []
    for chart in cls.charts:
        dims = {}
        for label in _M_CHOICES:
            m = _m_value(label, chart, constants)
            dims[label] = (m, embedding_dimension(chart.saturation, m))
        equations = None
        if with_equations:
            equations = scheme_equations(chart.saturation,
                                         _m_value(m_choice, chart, constants),
                                         threads=threads)
        charts.append(AtlasChart(chart=chart, dims=dims, equations=equations))
    bases = [entry.chart.chart for entry in charts]
    gluing = tuple(tuple(gluing_degree(a, b) for b in bases) for a in bases)
    return Atlas(constants=constants, charts=tuple(charts),
                 empty_charts=cls.empty_charts, gluing=gluing)

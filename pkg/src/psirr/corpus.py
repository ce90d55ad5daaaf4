"""A fixed set of named inputs used by tests, demos and the CLI documentation.

Each entry is ``(name, text, field)`` with field ``"Q"`` or a prime.
"""

from __future__ import annotations

from .fields import GF, QQ
from .parser import parse_zpoly

CORPUS = [
    ("two_vertex_quartic_square", "Z^2 - (x^3 - y^5)^2 + y^11", "Q"),
    ("sqrt_one_plus_x", "Z^2 - x^2*(1 + x)", "Q"),
    ("cusp", "Z^2 - x^3", "Q"),
    ("cusp_f5", "Z^2 - x^3", 5),
    ("bivariate_cusp", "Z^2 - x^3*y", "Q"),
    ("node_in_z", "Z^2 + x^3*Z", "Q"),
    ("cubic_two_vertices", "Z^3 - x^2*Z - y^2", "Q"),
    ("double_square", "Z^4 - 2*x^2*Z^2 + x^4 - x^5", "Q"),
    ("cube_root_unity_split", "Z^3 - x^3 - x^4", "Q"),
    ("sum_of_squares_line", "Z^2 - (x + y)^2 - x^3", "Q"),
    ("gaussian_over_q", "Z^2 + x^2 + x^3", "Q"),
    ("gaussian_over_f5", "Z^2 + x^2 + x^3", 5),
    ("gaussian_over_f3", "Z^2 + x^2 + x^3", 3),
    ("three_variables", "Z^2 - x^2*y^2*z^2 - x^3*y^2*z^2", "Q"),
    ("rational_slope", "Z^4 - x^6*y^2 + x^7*y^3", "Q"),
    ("char_two_square", "Z^2 + x^2 + x^3", 2),
    ("quartic_irreducible_q", "Z^4 - 2*x^4 + x^5*y", "Q"),
    ("missing_endpoint_cubic", "Z^3 + x*Z^2 + x^5", "Q"),
    ("mixed_terms", "Z^3 + 3*x*y*Z^2 + 3*x^2*y^2*Z + x^3*y^3 + x^4", "Q"),
    ("f7_cubic", "Z^3 - x^6 - 2*x^7*y", 7),
]


def field_of(tag):
    return QQ if tag == "Q" else GF(tag)


def corpus_polys():
    """Yield ``(name, ZPoly)`` for every corpus entry."""
    for name, text, tag in CORPUS:
        yield name, parse_zpoly(text, field_of(tag))


def get(name: str):
    for entry, text, tag in CORPUS:
        if entry == name:
            return parse_zpoly(text, field_of(tag))
    raise KeyError(name)

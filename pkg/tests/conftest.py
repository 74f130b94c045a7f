"""Shared test helpers."""
from __future__ import annotations

from harmcent import Graph


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    """Independent Cartesian-product oracle.

    Vertex (a, b) maps to index b * g1.order + a, which is exactly the
    two-copy layout the ladder/prism/book generators use, so products
    can be compared to generator output by plain graph equality.
    """
    n1 = g1.order
    product = Graph(n1 * g2.order)
    for b in range(g2.order):
        for u, v in g1.edges():
            product.add_edge(b * n1 + u, b * n1 + v)
    for a in range(n1):
        for u, v in g2.edges():
            product.add_edge(u * n1 + a, v * n1 + a)
    return product

"""Deterministic generators for the special graph families.

Every generator returns both the graph and a role map that records which
published vertex each index plays (hub, i-th rim vertex, pendant i, ...),
so callers can address structural positions without guessing indices.

Index conventions are fixed:

* fan / wheel / star / helm: hub at 0, rim or path vertices 1..m,
  helm pendants m+1..2m with pendant i attached to rim vertex i;
* complete bipartite: U side at 0..m-1, V side at m..m+n-1;
* ladder / prism / book: first copy at 0..c-1, second copy at c..2c-1,
  rung edges i <-> i+c;
* crown: U side 0..m-1, V side m..2m-1, edge (i, m+j) iff i != j;
* complete split: clique 0..n-1, independent set n..n+k-1.

Role indices are the conventional 1-based subscripts (hub is 0).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

from .graph import Graph

# Role kinds.
HUB = "hub"
PATH_VERTEX = "path"
CYCLE_VERTEX = "cycle"
PARTITION_U = "partition_u"
PARTITION_V = "partition_v"
RUNG = "rung"
CROWN_U = "crown_u"
CROWN_V = "crown_v"
PENDANT = "pendant"
CLIQUE = "clique"
INDEPENDENT = "independent"
STAR_LEAF = "star_leaf"
BOOK_PAGE = "book_page"


@dataclass(frozen=True)
class Role:
    """Structural role of one vertex: kind plus 1-based subscript.

    `side` distinguishes the two copies in ladder, prism and book graphs
    (1 or 2); it is 0 for every other family.
    """

    kind: str
    index: int = 0
    side: int = 0


RoleMap = tuple[Role, ...]

FAMILY_NAMES = (
    "path",
    "cycle",
    "fan",
    "wheel",
    "bipartite",
    "ladder",
    "crown",
    "prism",
    "star",
    "book",
    "helm",
    "split",
    "complete",
)

# family -> (parameter count, minimum value per parameter)
_PARAM_DOMAINS = {
    "path": (1, (1,)),
    "cycle": (1, (3,)),
    "fan": (1, (3,)),
    "wheel": (1, (3,)),
    "bipartite": (2, (2, 2)),
    "ladder": (1, (2,)),
    "crown": (1, (3,)),
    "prism": (1, (3,)),
    "star": (1, (2,)),
    "book": (1, (1,)),
    "helm": (1, (3,)),
    "split": (2, (2, 1)),
    "complete": (1, (1,)),
}


@dataclass(frozen=True)
class FamilySpec:
    """One named family plus its integer parameters."""

    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in _PARAM_DOMAINS:
            raise ValueError(
                f"unknown family {self.family!r}; expected one of "
                + ", ".join(FAMILY_NAMES)
            )
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        arity, minima = _PARAM_DOMAINS[self.family]
        if len(self.params) != arity:
            raise ValueError(
                f"family {self.family!r} takes {arity} parameter(s), "
                f"got {len(self.params)}"
            )
        for value, minimum in zip(self.params, minima):
            if value < minimum:
                raise ValueError(
                    f"parameter {value} out of domain for {self.family!r} "
                    f"(minimum {minimum})"
                )
        if self.family == "wheel" and self.params[0] == 3:
            warnings.warn(
                "wheel with rim size 3 is the boundary case K_4; the usual "
                "definition starts at rim size 4",
                stacklevel=2,
            )

    def __str__(self) -> str:
        return f"{self.family}:{','.join(str(p) for p in self.params)}"


def parse_family_spec(text: str) -> FamilySpec:
    """Parse strings like 'path:7', 'bipartite:3,4' or 'split:5,2'."""
    name, sep, rest = text.strip().partition(":")
    if not sep or not rest:
        raise ValueError(
            f"bad family spec {text!r}; expected '<name>:<p1>[,<p2>]'"
        )
    name = name.strip().lower()
    try:
        params = tuple(int(p.strip()) for p in rest.split(","))
    except ValueError:
        raise ValueError(f"non-integer parameter in family spec {text!r}") from None
    return FamilySpec(name, params)


def _path(m: int):
    g = Graph(m)
    for i in range(m - 1):
        g.add_edge(i, i + 1)
    return g, tuple(Role(PATH_VERTEX, i + 1) for i in range(m))


def _cycle(m: int):
    g = Graph(m)
    for i in range(m):
        g.add_edge(i, (i + 1) % m)
    return g, tuple(Role(CYCLE_VERTEX, i + 1) for i in range(m))


def _hub_plus(m: int, rim_kind: str, close_cycle: bool):
    g = Graph(m + 1)
    for i in range(1, m):
        g.add_edge(i, i + 1)
    if close_cycle:
        g.add_edge(m, 1)
    for i in range(1, m + 1):
        g.add_edge(0, i)
    roles = (Role(HUB),) + tuple(Role(rim_kind, i) for i in range(1, m + 1))
    return g, roles


def _fan(m: int):
    return _hub_plus(m, PATH_VERTEX, close_cycle=False)


def _wheel(m: int):
    return _hub_plus(m, CYCLE_VERTEX, close_cycle=True)


def _bipartite(m: int, n: int):
    g = Graph(m + n)
    for i in range(m):
        for j in range(n):
            g.add_edge(i, m + j)
    roles = tuple(Role(PARTITION_U, i + 1) for i in range(m)) + tuple(
        Role(PARTITION_V, j + 1) for j in range(n)
    )
    return g, roles


def _ladder(m: int):
    g = Graph(2 * m)
    for i in range(m - 1):
        g.add_edge(i, i + 1)
        g.add_edge(m + i, m + i + 1)
    for i in range(m):
        g.add_edge(i, m + i)
    roles = tuple(Role(RUNG, i + 1, 1) for i in range(m)) + tuple(
        Role(RUNG, i + 1, 2) for i in range(m)
    )
    return g, roles


def _crown(m: int):
    g = Graph(2 * m)
    for i in range(m):
        for j in range(m):
            if i != j:
                g.add_edge(i, m + j)
    roles = tuple(Role(CROWN_U, i + 1) for i in range(m)) + tuple(
        Role(CROWN_V, j + 1) for j in range(m)
    )
    return g, roles


def _prism(m: int):
    g = Graph(2 * m)
    for i in range(m):
        g.add_edge(i, (i + 1) % m)
        g.add_edge(m + i, m + (i + 1) % m)
        g.add_edge(i, m + i)
    roles = tuple(Role(RUNG, i + 1, 1) for i in range(m)) + tuple(
        Role(RUNG, i + 1, 2) for i in range(m)
    )
    return g, roles


def _star(m: int):
    g = Graph(m + 1)
    for i in range(1, m + 1):
        g.add_edge(0, i)
    return g, (Role(HUB),) + tuple(Role(STAR_LEAF, i) for i in range(1, m + 1))


def _book(m: int):
    c = m + 1
    g = Graph(2 * c)
    for side in (0, c):
        for i in range(1, m + 1):
            g.add_edge(side, side + i)
    for i in range(c):
        g.add_edge(i, c + i)
    roles = (
        (Role(HUB, 0, 1),)
        + tuple(Role(BOOK_PAGE, i, 1) for i in range(1, m + 1))
        + (Role(HUB, 0, 2),)
        + tuple(Role(BOOK_PAGE, i, 2) for i in range(1, m + 1))
    )
    return g, roles


def _helm(m: int):
    g, _ = _wheel(m)
    wheel_adj = g
    g = Graph(2 * m + 1)
    for u, v in wheel_adj.edges():
        g.add_edge(u, v)
    for i in range(1, m + 1):
        g.add_edge(i, m + i)
    roles = (
        (Role(HUB),)
        + tuple(Role(CYCLE_VERTEX, i) for i in range(1, m + 1))
        + tuple(Role(PENDANT, i) for i in range(1, m + 1))
    )
    return g, roles


def _split(n: int, k: int):
    g = Graph(n + k)
    for i in range(n):
        for j in range(i + 1, n):
            g.add_edge(i, j)
    for i in range(n):
        for j in range(k):
            g.add_edge(i, n + j)
    roles = tuple(Role(CLIQUE, i + 1) for i in range(n)) + tuple(
        Role(INDEPENDENT, j + 1) for j in range(k)
    )
    return g, roles


def _complete(m: int):
    g = Graph(m)
    for i in range(m):
        for j in range(i + 1, m):
            g.add_edge(i, j)
    return g, tuple(Role(CLIQUE, i + 1) for i in range(m))


_GENERATORS = {
    "path": _path,
    "cycle": _cycle,
    "fan": _fan,
    "wheel": _wheel,
    "bipartite": _bipartite,
    "ladder": _ladder,
    "crown": _crown,
    "prism": _prism,
    "star": _star,
    "book": _book,
    "helm": _helm,
    "split": _split,
    "complete": _complete,
}


def generate(spec: FamilySpec) -> tuple[Graph, RoleMap]:
    """Build the graph for `spec` together with its vertex role map."""
    return _GENERATORS[spec.family](*spec.params)


def vertices_with_role(roles: RoleMap, kind: str, index: int | None = None,
                       side: int | None = None) -> list[int]:
    """Vertex indices whose role matches the given kind/index/side filters."""
    return [
        v
        for v, role in enumerate(roles)
        if role.kind == kind
        and (index is None or role.index == index)
        and (side is None or role.side == side)
    ]

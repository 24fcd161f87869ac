"""Generators for the extremal graph families.

Every generator returns a :class:`LabeledGraph`.  ``labels`` maps the usual
vertex names (``x_1``, ``a_0^2``, ``u_3`` ...) to ids; ``groups`` maps named
vertex sets (``X_1``, ``A_0``, ``C_2`` ...) to id tuples.  Indices are 1-based
except where the construction itself starts at 0 (the ``A_0``/``B_0`` blocks).

Id layouts are documented on each generator so tests can address vertices
directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from powerdom.graph import Graph, build_graph

__all__ = [
    "DomainError",
    "FamilySpec",
    "LabeledGraph",
    "gen_aj",
    "gen_ckt",
    "gen_drq",
    "gen_f0q",
    "gen_geven",
    "gen_godd",
    "gen_h0q",
    "gen_hbase",
    "generate",
]


class DomainError(ValueError):
    """Parameters outside a construction's domain, or an input violating its hypotheses."""


@dataclass(frozen=True)
class LabeledGraph:
    graph: Graph
    labels: dict[str, int] = field(default_factory=dict)
    groups: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        ids = list(self.labels.values())
        if len(set(ids)) != len(ids):
            raise ValueError("labels must be injective")
        if any(not 0 <= v < self.graph.n for v in ids):
            raise ValueError("label refers to a vertex outside the graph")

    def __getitem__(self, name: str) -> int:
        return self.labels[name]

    def group(self, name: str) -> tuple[int, ...]:
        return self.groups[name]


def _clique(ids) -> list[tuple[int, int]]:
    return list(combinations(ids, 2))


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise DomainError(message)


def gen_drq(r: int, q: int) -> LabeledGraph:
    """``q`` copies of ``K_{r,r} - x_i y_i`` chained cyclically by ``y_i x_{i+1}``.

    Block ``i`` (1-based) uses ids ``2r(i-1) .. 2r·i - 1``: the first ``r`` form
    side ``X_i`` (``x_i`` first), the next ``r`` form ``Y_i`` (``y_i`` first).
    """
    _require(r >= 4, f"D_(r,q) needs r >= 4, got r={r}")
    _require(q >= 2, f"D_(r,q) needs q >= 2, got q={q}")
    edges = []
    labels: dict[str, int] = {}
    groups: dict[str, tuple[int, ...]] = {}
    for i in range(1, q + 1):
        base = 2 * r * (i - 1)
        xs = tuple(range(base, base + r))
        ys = tuple(range(base + r, base + 2 * r))
        labels[f"x_{i}"], labels[f"y_{i}"] = xs[0], ys[0]
        groups[f"X_{i}"], groups[f"Y_{i}"] = xs, ys
        edges += [(a, b) for a in xs for b in ys if (a, b) != (xs[0], ys[0])]
    for i in range(1, q + 1):
        nxt = i % q + 1
        edges.append((labels[f"y_{i}"], labels[f"x_{nxt}"]))
    return LabeledGraph(build_graph(2 * r * q, edges), labels, groups)


def gen_f0q(q: int) -> LabeledGraph:
    """Cubic graph of order ``4q`` with total domination number ``2q``.

    Block ``i`` has ids ``4(i-1) .. 4i - 1`` named ``z_i^1 .. z_i^4`` and carries the
    4-cycle ``z^2 z^1 z^3 z^4``.  Consecutive blocks are linked by
    ``z_i^2 z_{i+1}^1`` and ``z_i^3 z_{i+1}^4``; the chords ``z_1^1 z_1^4`` and
    ``z_q^2 z_q^3`` close the two ends.  ``q = 1`` gives ``K_4``.
    """
    _require(q >= 1, f"F_(0,q) needs q >= 1, got q={q}")
    labels = {f"z_{i}^{j}": 4 * (i - 1) + j - 1 for i in range(1, q + 1) for j in range(1, 5)}
    groups = {f"Z_{i}": tuple(range(4 * (i - 1), 4 * i)) for i in range(1, q + 1)}

    def z(i: int, j: int) -> int:
        return labels[f"z_{i}^{j}"]

    edges = []
    for i in range(1, q + 1):
        edges += [(z(i, 2), z(i, 1)), (z(i, 1), z(i, 3)), (z(i, 3), z(i, 4)), (z(i, 4), z(i, 2))]
    for i in range(1, q):
        edges += [(z(i, 2), z(i + 1, 1)), (z(i, 3), z(i + 1, 4))]
    edges += [(z(1, 1), z(1, 4)), (z(q, 2), z(q, 3))]
    return LabeledGraph(build_graph(4 * q, edges), labels, groups)


_H_EDGES = [("x", "z_1"), ("z_1", "z_4"), ("z_4", "y"), ("y", "z_3"),
            ("z_3", "z_2"), ("z_2", "x"), ("z_1", "z_2"), ("z_3", "z_4")]
_H_NAMES = ("x", "y", "z_1", "z_2", "z_3", "z_4")


def gen_hbase() -> LabeledGraph:
    """The 6-vertex graph ``H``: ids follow ``x, y, z_1, z_2, z_3, z_4``; ``x`` and ``y`` have degree 2."""
    index = {name: i for i, name in enumerate(_H_NAMES)}
    return LabeledGraph(build_graph(6, [(index[a], index[b]) for a, b in _H_EDGES]), index)


def gen_h0q(q: int) -> LabeledGraph:
    """``q`` copies of ``H`` chained cyclically by ``y_i x_{i+1}``.

    Copy ``i`` uses ids ``6(i-1) .. 6i - 1`` in the order of :func:`gen_hbase`;
    names are ``x_i``, ``y_i`` and ``z_i^j``.
    """
    _require(q >= 1, f"H_(0,q) needs q >= 1, got q={q}")
    edges = []
    labels: dict[str, int] = {}
    groups: dict[str, tuple[int, ...]] = {}
    for i in range(1, q + 1):
        base = 6 * (i - 1)
        local = {name: base + j for j, name in enumerate(_H_NAMES)}
        for name, v in local.items():
            labels[f"{name[0]}_{i}" if len(name) == 1 else f"z_{i}^{name[2]}"] = v
        groups[f"H_{i}"] = tuple(range(base, base + 6))
        edges += [(local[a], local[b]) for a, b in _H_EDGES]
    for i in range(1, q + 1):
        edges.append((labels[f"y_{i}"], labels[f"x_{i % q + 1}"]))
    return LabeledGraph(build_graph(6 * q, edges), labels, groups)


def _aj_edges(k: int, j: int, offset: int = 0) -> tuple[list[tuple[int, int]], int, tuple[int, ...], tuple[int, ...]]:
    size = k + j + 2
    apex = offset + size - 1
    body = tuple(range(offset, apex))
    adjacent, missing = body[: k + 1], body[k + 1:]
    edges = _clique(body) + [(v, apex) for v in adjacent]
    return edges, apex, adjacent, missing


def gen_aj(k: int, j: int) -> LabeledGraph:
    """``K_{k+j+2}`` minus ``j`` edges at a common vertex (the ``apex``).

    Ids ``0 .. k+j`` are ``a^1 .. a^{k+j+1}``; the apex is id ``k+j+1``.  The apex
    is adjacent to ``a^1 .. a^{k+1}`` (group ``L``, a clique k-fort) and not to
    the ``j`` vertices of group ``W``.
    """
    _require(k >= 1 and 1 <= j <= k, f"A_j needs 1 <= j <= k, got k={k}, j={j}")
    edges, apex, adjacent, missing = _aj_edges(k, j)
    labels = {f"a^{i + 1}": v for i, v in enumerate(adjacent + missing)}
    labels["apex"] = apex
    return LabeledGraph(build_graph(k + j + 2, edges), labels, {"L": adjacent, "W": missing})


def _g_blocks(r: int, q: int, block: int, hubs: int):
    """Shared layout for both G_(r,q) variants.

    Order: ``A_0, B_0``, then for ``i = 1..q``: ``U_i, A_i, B_i``.
    """
    labels: dict[str, int] = {}
    groups: dict[str, tuple[int, ...]] = {}
    nxt = 0

    def take(prefix: str, i: int, count: int, single: bool = False) -> tuple[int, ...]:
        nonlocal nxt
        ids = tuple(range(nxt, nxt + count))
        nxt += count
        for j, v in enumerate(ids, 1):
            labels[f"{prefix}_{i}" if single else f"{prefix}_{i}^{j}"] = v
        groups[f"{prefix.upper()}_{i}"] = ids
        return ids

    take("a", 0, block)
    take("b", 0, block)
    for i in range(1, q + 1):
        take("u", i, hubs, single=hubs == 1)
        take("a", i, block)
        take("b", i, block)
    edges = []
    for i in range(q + 1):
        edges += _clique(groups[f"A_{i}"] + groups[f"B_{i}"])
    for i in range(q):
        u = groups[f"U_{i + 1}"]
        # A_i ∪ B_i is already a clique, so only hub pairs and cross pairs remain
        edges += _clique(u)
        edges += [(b, h) for b in groups[f"B_{i}"] for h in u]
        edges += [(h, a) for h in u for a in groups[f"A_{i + 1}"]]
    return labels, groups, edges, nxt


def gen_godd(r: int, q: int) -> LabeledGraph:
    """Claw-free ``r``-regular graph for odd ``r``, order ``(q+1)(r+1) - 2``.

    Blocks ``A_i, B_i`` have ``(r-1)/2`` vertices and hubs ``U_i = {u_i^1, u_i^2}``.
    ``A_i ∪ B_i``, ``B_i ∪ U_{i+1}`` and ``U_{i+1} ∪ A_{i+1}`` are cliques; the ends
    close with ``a_0^j b_q^j`` and ``a_0^j b_q^{j+1}`` (cyclic in ``j``).
    """
    _require(r >= 5 and r % 2 == 1, f"odd G_(r,q) needs odd r >= 5, got r={r}")
    _require(q >= 1, f"G_(r,q) needs q >= 1, got q={q}")
    m = (r - 1) // 2
    labels, groups, edges, n = _g_blocks(r, q, m, 2)
    for j in range(1, m + 1):
        a = labels[f"a_0^{j}"]
        edges.append((a, labels[f"b_{q}^{j}"]))
        edges.append((a, labels[f"b_{q}^{j % m + 1}"]))
    return LabeledGraph(build_graph(n, edges), labels, groups)


def gen_geven(r: int, q: int) -> LabeledGraph:
    """Claw-free ``r``-regular graph for even ``r``, order ``(q+1)(r+1) - 1``.

    Same layout as :func:`gen_godd` with blocks of ``r/2`` vertices, single hubs
    ``u_i`` and the closing matching ``a_0^j b_q^j``.
    """
    _require(r >= 4 and r % 2 == 0, f"even G_(r,q) needs even r >= 4, got r={r}")
    _require(q >= 1, f"G_(r,q) needs q >= 1, got q={q}")
    m = r // 2
    labels, groups, edges, n = _g_blocks(r, q, m, 1)
    for j in range(1, m + 1):
        edges.append((labels[f"a_0^{j}"], labels[f"b_{q}^{j}"]))
    return LabeledGraph(build_graph(n, edges), labels, groups)


def gen_ckt(k: int, l: int, t: int) -> LabeledGraph:
    """``t`` copies of ``A_l`` in a cycle: the ``l`` apex non-neighbours of copy ``i``
    are joined to the apex of copy ``i+1`` (mod ``t``).

    Copy ``i`` occupies ids ``(i-1)(k+l+2) ..`` laid out as in :func:`gen_aj`;
    names are ``c_i^j`` and ``apex_i``, groups ``C_i`` (the copy), ``L_i`` (apex
    neighbours, a clique k-fort) and ``W_i`` (apex non-neighbours).
    """
    _require(l in (2, 3), f"C_(k,t) needs l in {{2, 3}}, got l={l}")
    _require(k >= l, f"C_(k,t) needs k >= l, got k={k}, l={l}")
    _require(t >= 2, f"C_(k,t) needs t >= 2, got t={t}")
    size = k + l + 2
    edges = []
    labels: dict[str, int] = {}
    groups: dict[str, tuple[int, ...]] = {}
    for i in range(1, t + 1):
        copy_edges, apex, adjacent, missing = _aj_edges(k, l, offset=size * (i - 1))
        edges += copy_edges
        labels[f"apex_{i}"] = apex
        for j, v in enumerate(adjacent + missing, 1):
            labels[f"c_{i}^{j}"] = v
        groups[f"C_{i}"] = tuple(range(size * (i - 1), size * i))
        groups[f"L_{i}"], groups[f"W_{i}"] = adjacent, missing
    for i in range(1, t + 1):
        nxt_apex = labels[f"apex_{i % t + 1}"]
        edges += [(w, nxt_apex) for w in groups[f"W_{i}"]]
    return LabeledGraph(build_graph(size * t, edges), labels, groups)


@dataclass(frozen=True)
class FamilySpec:
    """A family member by name and parameters, e.g. ``FamilySpec("ckt", k=3, l=3, t=2)``.

    Variants: ``drq(r,q)``, ``f0q(q)``, ``hbase()``, ``h0q(q)``, ``aj(k,j)``,
    ``godd(r,q)``, ``geven(r,q)``, ``ckt(k,l,t)``.
    """

    variant: str
    r: int | None = None
    q: int | None = None
    k: int | None = None
    j: int | None = None
    l: int | None = None
    t: int | None = None

    @property
    def label(self) -> str:
        params = ",".join(f"{name}={getattr(self, name)}" for name in _PARAMS[self.variant])
        return f"{self.variant}({params})"


_PARAMS = {
    "drq": ("r", "q"),
    "f0q": ("q",),
    "hbase": (),
    "h0q": ("q",),
    "aj": ("k", "j"),
    "godd": ("r", "q"),
    "geven": ("r", "q"),
    "ckt": ("k", "l", "t"),
}

_GENERATORS = {
    "drq": gen_drq,
    "f0q": gen_f0q,
    "hbase": gen_hbase,
    "h0q": gen_h0q,
    "aj": gen_aj,
    "godd": gen_godd,
    "geven": gen_geven,
    "ckt": gen_ckt,
}

VARIANTS = tuple(_GENERATORS)


def generate(spec: FamilySpec) -> LabeledGraph:
    if spec.variant not in _GENERATORS:
        raise DomainError(f"unknown family {spec.variant!r}; choose from {', '.join(VARIANTS)}")
    args = []
    for name in _PARAMS[spec.variant]:
        value = getattr(spec, name)
        if value is None:
            raise DomainError(f"family {spec.variant} needs parameter --{name}")
        args.append(value)
    return _GENERATORS[spec.variant](*args)

"""k-forts and L-configurations: certificates for lower bounds and seeds.

A k-fort is a nonempty ``F`` such that every vertex of ``N(F) \\ F`` has at
least ``k + 1`` neighbours in ``F``.  Propagation can never enter a fort from
outside, so every k-power dominating set meets ``N[F]``.

Forts relate to the forcing rule by complement: ``F`` is a k-fort exactly when
no vertex of ``V \\ F`` can force into it, so the vertices left unreached by
forcing from a set ``X`` form the largest fort disjoint from ``X``.  Minimal
fort search is built on that closure.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from powerdom.graph import Graph, VertexSet, ball_mask, iter_bits

log = logging.getLogger(__name__)

__all__ = [
    "ConfigurationList",
    "FortCertificate",
    "FortViolation",
    "LConfiguration",
    "configuration_span_disjointness",
    "disjoint_fort_family",
    "find_l_configurations",
    "find_minimal_forts",
    "fort_hitting_lower_bound",
    "largest_fort_avoiding",
    "verify_fort",
]

DEFAULT_FORT_COUNT = 64
DEFAULT_CONFIGURATION_LIMIT = 10_000


class FortViolation(ValueError):
    """A candidate set failed the fort condition at ``vertex``."""

    def __init__(self, message: str, vertex: int | None = None, inside: int | None = None):
        super().__init__(message)
        self.vertex = vertex
        self.inside = inside


@dataclass(frozen=True)
class FortCertificate:
    k: int
    fort: VertexSet
    boundary: VertexSet

    @property
    def closure(self) -> VertexSet:
        """``N[F]``, the set every k-PDS must meet."""
        return self.fort | self.boundary

    def to_dict(self) -> dict:
        return {"k": self.k, "fort": list(self.fort), "boundary": list(self.boundary)}


@dataclass(frozen=True)
class LConfiguration:
    k: int
    l_set: VertexSet
    span: VertexSet

    def to_dict(self) -> dict:
        return {"k": self.k, "l_set": list(self.l_set), "span": list(self.span)}


class ConfigurationList(list):
    """List of L-configurations; ``truncated`` is set when the enumeration cap was hit."""

    truncated: bool = False


def _neighborhood_mask(g: Graph, mask: int) -> int:
    out = 0
    for v in iter_bits(mask):
        out |= g.nbr_mask(v)
    return out


def _fort_violation(g: Graph, k: int, fort: int) -> tuple[int, int] | None:
    boundary = _neighborhood_mask(g, fort) & ~fort
    for w in iter_bits(boundary):
        inside = (g.nbr_mask(w) & fort).bit_count()
        if inside <= k:
            return w, inside
    return None


def verify_fort(g: Graph, k: int, f: Iterable[int]) -> FortCertificate:
    """Check the k-fort condition and return a certificate.

    Raises :class:`FortViolation` naming the least boundary vertex with at most
    ``k`` neighbours inside ``f``.
    """
    f = g.vertex_set(f)
    if not f:
        raise FortViolation("a fort must be nonempty")
    bad = _fort_violation(g, k, f.mask)
    if bad is not None:
        w, inside = bad
        raise FortViolation(
            f"boundary vertex {w} has {inside} neighbour(s) in the set, needs at least {k + 1}",
            vertex=w,
            inside=inside,
        )
    boundary = _neighborhood_mask(g, f.mask) & ~f.mask
    return FortCertificate(k=k, fort=f, boundary=VertexSet.from_mask(boundary))


def _forcing_closure(g: Graph, k: int, observed: int) -> int:
    # forcing only: no initial domination step
    while True:
        grown = observed
        for v in iter_bits(observed):
            closed = g.closed_mask(v)
            if (closed & ~observed).bit_count() <= k:
                grown |= closed
        if grown == observed:
            return observed
        observed = grown


def largest_fort_avoiding(g: Graph, k: int, avoid: Iterable[int]) -> VertexSet:
    """Union of all k-forts disjoint from ``avoid`` (empty if there is none)."""
    avoid = g.vertex_set(avoid)
    return VertexSet.from_mask(g.full_mask & ~_forcing_closure(g, k, avoid.mask))


def _shrink(g: Graph, k: int, fort: int, order: Sequence[int]) -> int:
    # One pass suffices: a vertex kept here cannot be dropped later because forts only shrink.
    outside = g.full_mask & ~fort
    for w in order:
        if not fort >> w & 1:
            continue
        smaller = g.full_mask & ~_forcing_closure(g, k, outside | (1 << w))
        if smaller:
            fort = smaller
            outside = g.full_mask & ~fort
    return fort


def find_minimal_forts(g: Graph, k: int, max_count: int = DEFAULT_FORT_COUNT) -> list[FortCertificate]:
    """Inclusion-minimal k-forts, lexicographically ordered by member list.

    Candidates are the largest forts inside connected regions (balls of growing
    radius around each vertex); each is shrunk to a minimal fort using the
    forcing closure, once with ascending removal order and once with the order
    rotated to start after the centre.  Forts larger than ``max(n // 2, k + 1)``
    are dropped.  Returns at most ``max_count`` certificates.
    """
    n = g.n
    cap = max(n // 2, k + 1)
    found: set[int] = set()
    ascending = list(range(n))
    for v in range(n):
        radius, previous = 1, -1
        rotated = ascending[v + 1:] + ascending[: v + 1]
        while True:
            region = ball_mask(g, v, radius)
            if region == previous:
                break
            previous = region
            radius += 1
            candidate = region & ~_forcing_closure(g, k, g.full_mask & ~region)
            if not candidate:
                continue
            for order in (ascending, rotated):
                minimal = _shrink(g, k, candidate, order)
                if minimal.bit_count() <= cap:
                    found.add(minimal)
    forts = sorted((VertexSet.from_mask(m) for m in found), key=VertexSet.sort_key)
    return [verify_fort(g, k, f) for f in forts[:max_count]]


def _max_disjoint(masks: list[int]) -> list[int]:
    """Indices of a maximum family of pairwise disjoint masks (exact branch and bound)."""
    best: list[int] = []

    def branch(cands: list[int], chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        for j, i in enumerate(cands):
            if len(chosen) + len(cands) - j <= len(best):
                return
            chosen.append(i)
            branch([x for x in cands[j + 1:] if not masks[x] & masks[i]], chosen)
            chosen.pop()

    branch(sorted(range(len(masks)), key=lambda i: (masks[i].bit_count(), i)), [])
    return sorted(best)


def disjoint_fort_family(forts: Sequence[FortCertificate]) -> list[FortCertificate]:
    """A largest subfamily whose closed neighbourhoods ``N[F]`` are pairwise disjoint."""
    masks = [f.closure.mask for f in forts]
    return [forts[i] for i in _max_disjoint(masks)]


def fort_hitting_lower_bound(g: Graph, k: int, forts: Sequence[FortCertificate]) -> int:
    """Lower bound on the k-power domination number from pairwise disjoint ``N[F]``.

    Each k-PDS meets every ``N[F]``; disjoint ones need distinct vertices.
    """
    for cert in forts:
        if cert.k != k:
            raise ValueError(f"certificate issued for k={cert.k}, expected k={k}")
        verify_fort(g, k, cert.fort)
    return len(disjoint_fort_family(forts))


def _cliques_from(g: Graph, v: int, min_size: int, limit: int):
    """Cliques whose least member is ``v``, in lexicographic order."""
    higher = [w for w in g.adjacency[v] if w > v]
    stack = [((v,), higher)]
    emitted = 0
    while stack:
        clique, cands = stack.pop()
        if len(clique) >= min_size:
            yield clique
            emitted += 1
            if emitted >= limit:
                return
        if len(clique) + len(cands) < min_size:
            continue
        for i in range(len(cands) - 1, -1, -1):
            w = cands[i]
            stack.append((clique + (w,), [x for x in cands[i + 1:] if g.has_edge(w, x)]))


def find_l_configurations(
    g: Graph, k: int, limit: int = DEFAULT_CONFIGURATION_LIMIT
) -> ConfigurationList:
    """Cliques that are also k-forts, one per distinct span ``N[L]``.

    When several cliques share a span, the lexicographically least clique is
    kept.  Output is sorted by clique.  If more than ``limit`` fort-cliques are
    seen the search stops early and ``truncated`` is set on the result.
    """
    by_span: dict[int, int] = {}
    seen = 0
    truncated = False
    for v in range(g.n):
        for clique in _cliques_from(g, v, k + 1, limit):
            mask = 0
            for w in clique:
                mask |= 1 << w
            if _fort_violation(g, k, mask) is not None:
                continue
            seen += 1
            span = mask | _neighborhood_mask(g, mask)
            incumbent = by_span.get(span)
            if incumbent is None or VertexSet.from_mask(mask).sort_key() < VertexSet.from_mask(incumbent).sort_key():
                by_span[span] = mask
            if seen >= limit:
                truncated = True
                break
        if truncated:
            break
    if truncated:
        log.warning("L-configuration enumeration stopped at limit=%d", limit)
    configs = ConfigurationList(
        sorted(
            (LConfiguration(k, VertexSet.from_mask(m), VertexSet.from_mask(s)) for s, m in by_span.items()),
            key=lambda c: c.l_set.sort_key(),
        )
    )
    configs.truncated = truncated
    return configs


def configuration_span_disjointness(g: Graph, k: int, configs: Iterable[LConfiguration]) -> bool:
    """True iff the distinct spans of ``configs`` are pairwise disjoint."""
    configs = list(configs)
    spans = {c.span.mask for c in configs}
    for c in configs:
        if c.k != k:
            raise ValueError(f"configuration issued for k={c.k}, expected k={k}")
    seen = 0
    for s in sorted(spans):
        if s & seen:
            return False
        seen |= s
    return True

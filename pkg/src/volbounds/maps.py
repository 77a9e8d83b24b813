"""Dart-based combinatorial maps for planar (multi)graph embeddings.

A map on N darts is a pair of permutations: ``alpha`` (a fixed-point-free
involution pairing the two darts of each edge) and ``sigma`` (the rotation,
listing darts counterclockwise around each vertex).  Faces are the orbits of
``phi(d) = sigma[alpha[d]]``.  Genus 0 is required throughout:
V - E + F = 2 with V = #orbits(sigma), E = N/2, F = #orbits(phi).

Multigraphs are allowed at the map level (link-diagram graphs have parallel
edges); polyhedral-skeleton checks are applied only where an operation needs
them.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

__all__ = [
    "CombinatorialMap",
    "SkeletonCensus",
    "MapError",
    "validate_map",
    "vertex_orbits",
    "face_orbits",
    "medial",
    "dual",
    "maps_isomorphic",
    "is_three_connected",
    "tetrahedron",
    "cube",
    "octahedron",
    "pyramid",
    "bipyramid",
    "prism",
    "antiprism",
    "two_apex_pyramid",
    "twisted_antiprism",
    "map_from_face_cycles",
    "map_to_dict",
    "map_from_dict",
    "load_map",
    "save_map",
]


class MapError(ValueError):
    """A combinatorial-map invariant failed; ``violation`` names it."""

    def __init__(self, violation: str, message: str):
        super().__init__(f"{violation}: {message}")
        self.violation = violation


@dataclass(frozen=True)
class CombinatorialMap:
    """Immutable dart-based embedding: edge involution alpha, rotation sigma."""

    alpha: tuple[int, ...]
    sigma: tuple[int, ...]

    @property
    def dart_count(self) -> int:
        return len(self.alpha)

    def phi(self, dart: int) -> int:
        """Face permutation phi = sigma o alpha."""
        return self.sigma[self.alpha[dart]]


@dataclass(frozen=True)
class SkeletonCensus:
    """Vertex/edge/face counts of a map, with per-degree and per-size tallies."""

    V: int
    E: int
    F: int
    degree_counts: dict[int, int] = field(default_factory=dict)
    face_counts: dict[int, int] = field(default_factory=dict)

    @property
    def min_degree(self) -> int:
        return min(self.degree_counts) if self.degree_counts else 0

    @property
    def min_face_size(self) -> int:
        return min(self.face_counts) if self.face_counts else 0

    @property
    def v3(self) -> int:
        return self.degree_counts.get(3, 0)

    @property
    def v4(self) -> int:
        return self.degree_counts.get(4, 0)

    @property
    def p3(self) -> int:
        return self.face_counts.get(3, 0)

    def is_four_regular(self) -> bool:
        return set(self.degree_counts) == {4}

    def all_trivalent(self) -> bool:
        return set(self.degree_counts) == {3}


def _orbits(perm: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Cycles of a permutation on 0..N-1, sorted by minimal element."""
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        d = start
        while not seen[d]:
            seen[d] = True
            cycle.append(d)
            d = perm[d]
        cycles.append(tuple(cycle))
    return cycles


def vertex_orbits(m: CombinatorialMap) -> list[tuple[int, ...]]:
    """sigma-orbits in canonical order (sorted by minimal dart)."""
    return _orbits(m.sigma)


def face_orbits(m: CombinatorialMap) -> list[tuple[int, ...]]:
    """phi-orbits in canonical order (sorted by minimal dart)."""
    n = m.dart_count
    return _orbits(tuple(m.sigma[m.alpha[d]] for d in range(n)))


def _check_permutation(name: str, perm: tuple[int, ...]) -> None:
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise MapError("not-a-permutation", f"{name} is not a permutation of 0..{n - 1}")


def validate_map(m: CombinatorialMap) -> SkeletonCensus:
    """Verify all map invariants and return the census.

    Raises :class:`MapError` with violation one of ``length-mismatch``,
    ``not-a-permutation``, ``fixed-dart``, ``not-involution``,
    ``disconnected``, ``genus``.
    """
    if len(m.alpha) != len(m.sigma):
        raise MapError("length-mismatch", "alpha and sigma must have equal length")
    n = m.dart_count
    if n == 0:
        raise MapError("length-mismatch", "map must have at least one edge")
    _check_permutation("alpha", m.alpha)
    _check_permutation("sigma", m.sigma)
    if n % 2 != 0:
        raise MapError("not-involution", "odd dart count cannot pair into edges")
    for d in range(n):
        if m.alpha[d] == d:
            raise MapError("fixed-dart", f"alpha fixes dart {d}")
        if m.alpha[m.alpha[d]] != d:
            raise MapError("not-involution", f"alpha^2 moves dart {d}")

    # connectivity of the group action of <alpha, sigma>
    seen = [False] * n
    stack = [0]
    seen[0] = True
    reached = 1
    while stack:
        d = stack.pop()
        for nxt in (m.alpha[d], m.sigma[d]):
            if not seen[nxt]:
                seen[nxt] = True
                reached += 1
                stack.append(nxt)
    if reached != n:
        raise MapError("disconnected", f"only {reached} of {n} darts reachable")

    verts = vertex_orbits(m)
    faces = face_orbits(m)
    v, e, f = len(verts), n // 2, len(faces)
    if v - e + f != 2:
        raise MapError("genus", f"V-E+F = {v - e + f} != 2 (not a sphere embedding)")
    return SkeletonCensus(
        V=v,
        E=e,
        F=f,
        degree_counts=dict(Counter(len(c) for c in verts)),
        face_counts=dict(Counter(len(c) for c in faces)),
    )


def _require_polyhedral(m: CombinatorialMap) -> SkeletonCensus:
    c = validate_map(m)
    if c.min_degree < 3:
        raise MapError("degree", f"polyhedral map needs min degree 3, got {c.min_degree}")
    if c.min_face_size < 3:
        raise MapError("face-size", f"polyhedral map needs min face size 3, got {c.min_face_size}")
    return c


def medial(m: CombinatorialMap) -> CombinatorialMap:
    """Medial map: one 4-valent vertex per edge of the input.

    Darts 2d, 2d+1 are the two halves of the medial edge sitting in the
    corner after input dart d; the construction guarantees V_med = E,
    E_med = 2E, F_med = V + F, with a k-gonal medial face for every
    degree-k vertex and every k-gonal face of the input.
    """
    _require_polyhedral(m)
    n = m.dart_count
    sigma_inv = [0] * n
    for d in range(n):
        sigma_inv[m.sigma[d]] = d
    alpha_med = [0] * (2 * n)
    sigma_med = [0] * (2 * n)
    for d in range(n):
        alpha_med[2 * d] = 2 * d + 1
        alpha_med[2 * d + 1] = 2 * d
        sigma_med[2 * d] = 2 * sigma_inv[d] + 1
        sigma_med[2 * d + 1] = 2 * m.alpha[m.sigma[d]]
    out = CombinatorialMap(tuple(alpha_med), tuple(sigma_med))
    validate_map(out)
    return out


def dual(m: CombinatorialMap) -> CombinatorialMap:
    """Planar dual: vertices and faces swap; dual(dual(m)) == m on the nose."""
    validate_map(m)
    phi = tuple(m.sigma[m.alpha[d]] for d in range(m.dart_count))
    return CombinatorialMap(m.alpha, phi)


def maps_isomorphic(a: CombinatorialMap, b: CombinatorialMap) -> bool:
    """Dart-bijection equivalence of maps, allowing reflection.

    Anchors dart 0 of ``a`` on every dart of ``b`` (for sigma_b and its
    inverse) and propagates through alpha/sigma; O(darts^2) overall.
    """
    validate_map(a)
    validate_map(b)
    n = a.dart_count
    if n != b.dart_count:
        return False
    sigma_b_inv = [0] * n
    for d in range(n):
        sigma_b_inv[b.sigma[d]] = d

    for sigma_b in (b.sigma, tuple(sigma_b_inv)):
        for anchor in range(n):
            image = [-1] * n
            image[0] = anchor
            stack = [0]
            ok = True
            while stack and ok:
                x = stack.pop()
                y = image[x]
                for nx, ny in ((a.alpha[x], b.alpha[y]), (a.sigma[x], sigma_b[y])):
                    if image[nx] == -1:
                        image[nx] = ny
                        stack.append(nx)
                    elif image[nx] != ny:
                        ok = False
                        break
            if ok and len(set(image)) == n:
                return True
    return False


def _underlying_adjacency(m: CombinatorialMap) -> list[set[int]]:
    verts = vertex_orbits(m)
    vertex_of = {}
    for i, cyc in enumerate(verts):
        for d in cyc:
            vertex_of[d] = i
    adj = [set() for _ in verts]
    for d in range(m.dart_count):
        u, w = vertex_of[d], vertex_of[m.alpha[d]]
        if u != w:
            adj[u].add(w)
            adj[w].add(u)
    return adj


def is_three_connected(m: CombinatorialMap) -> bool:
    """Brute-force 3-connectivity of the underlying simple graph."""
    census = validate_map(m)
    if census.V < 4:
        raise ValueError("is_three_connected: need at least 4 vertices")
    adj = _underlying_adjacency(m)
    nv = len(adj)

    def connected_without(removed: set[int]) -> bool:
        remaining = [v for v in range(nv) if v not in removed]
        if not remaining:
            return False
        seen = {remaining[0]}
        stack = [remaining[0]]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in removed and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(remaining)

    for u in range(nv):
        for w in range(u + 1, nv):
            if not connected_without({u, w}):
                return False
    return True


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------


def map_from_face_cycles(faces: list[list[int]]) -> CombinatorialMap:
    """Build a map from face boundary cycles (vertex sequences).

    Each undirected edge must occur in exactly two face slots; face
    orientations are fixed automatically (BFS on the face adjacency) so that
    every edge is traversed once in each direction.  Only used by the
    simple-polyhedron builders; parallel edges are not representable here.
    """
    # locate the two (face, position) slots of each undirected edge
    slots: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for fi, cycle in enumerate(faces):
        if len(cycle) < 2 or len(set(cycle)) != len(cycle):
            raise ValueError(f"face {fi} is not a simple cycle: {cycle}")
        for pos in range(len(cycle)):
            u, w = cycle[pos], cycle[(pos + 1) % len(cycle)]
            slots.setdefault((min(u, w), max(u, w)), []).append((fi, pos))
    for edge, occ in slots.items():
        if len(occ) != 2:
            raise ValueError(f"edge {edge} occurs {len(occ)} times, expected 2")

    # orient faces consistently
    flipped = [None] * len(faces)
    flipped[0] = False
    queue = [0]
    adjacency: dict[int, list[tuple[int, bool]]] = {}
    for (u, w), ((f1, p1), (f2, p2)) in slots.items():
        d1 = faces[f1][p1] == u  # direction as listed
        d2 = faces[f2][p2] == u
        # consistent iff the two listed directions are opposite after flips
        adjacency.setdefault(f1, []).append((f2, d1 == d2))
        adjacency.setdefault(f2, []).append((f1, d1 == d2))
    while queue:
        f = queue.pop()
        for g, must_differ in adjacency.get(f, []):
            want = (not flipped[f]) if must_differ else flipped[f]
            if flipped[g] is None:
                flipped[g] = want
                queue.append(g)
            elif flipped[g] != want:
                raise ValueError("face cycles cannot be oriented consistently")
    if any(v is None for v in flipped):
        raise ValueError("face complex is disconnected")

    oriented = [list(reversed(cyc)) if flipped[fi] else list(cyc) for fi, cyc in enumerate(faces)]

    # darts = directed edges, numbered in face order
    dart_id: dict[tuple[int, int], int] = {}
    dart_list: list[tuple[int, int]] = []
    for cyc in oriented:
        for pos in range(len(cyc)):
            u, w = cyc[pos], cyc[(pos + 1) % len(cyc)]
            if (u, w) in dart_id:
                raise ValueError(f"directed edge {(u, w)} traversed twice")
            dart_id[(u, w)] = len(dart_list)
            dart_list.append((u, w))

    n = len(dart_list)
    alpha = [0] * n
    phi = [0] * n
    for cyc in oriented:
        for pos in range(len(cyc)):
            u, w = cyc[pos], cyc[(pos + 1) % len(cyc)]
            d = dart_id[(u, w)]
            alpha[d] = dart_id[(w, u)]
            nu, nw = cyc[(pos + 1) % len(cyc)], cyc[(pos + 2) % len(cyc)]
            phi[d] = dart_id[(nu, nw)]
    # phi = sigma o alpha  =>  sigma = phi o alpha
    sigma = tuple(phi[alpha[d]] for d in range(n))
    out = CombinatorialMap(tuple(alpha), sigma)
    validate_map(out)
    return out


def tetrahedron() -> CombinatorialMap:
    return map_from_face_cycles([[0, 1, 2], [0, 2, 3], [0, 3, 1], [1, 3, 2]])


def cube() -> CombinatorialMap:
    return map_from_face_cycles(
        [
            [0, 3, 2, 1],
            [4, 5, 6, 7],
            [0, 1, 5, 4],
            [1, 2, 6, 5],
            [2, 3, 7, 6],
            [3, 0, 4, 7],
        ]
    )


def octahedron() -> CombinatorialMap:
    return map_from_face_cycles(
        [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 1],
            [5, 2, 1],
            [5, 3, 2],
            [5, 4, 3],
            [5, 1, 4],
        ]
    )


def pyramid(n: int) -> CombinatorialMap:
    """n-gonal pyramid: base 0..n-1, apex n."""
    if n < 3:
        raise ValueError(f"pyramid: need n >= 3, got {n}")
    base = list(reversed(range(n)))
    sides = [[i, (i + 1) % n, n] for i in range(n)]
    return map_from_face_cycles([base] + sides)


def bipyramid(n: int) -> CombinatorialMap:
    """n-gonal bipyramid: equator 0..n-1, apexes n (top) and n+1 (bottom)."""
    if n < 3:
        raise ValueError(f"bipyramid: need n >= 3, got {n}")
    upper = [[i, (i + 1) % n, n] for i in range(n)]
    lower = [[(i + 1) % n, i, n + 1] for i in range(n)]
    return map_from_face_cycles(upper + lower)


def prism(n: int) -> CombinatorialMap:
    """n-gonal prism: bottom 0..n-1, top n..2n-1."""
    if n < 3:
        raise ValueError(f"prism: need n >= 3, got {n}")
    bottom = [0] + list(range(n - 1, 0, -1))
    top = [n + i for i in range(n)]
    sides = [[i, (i + 1) % n, n + (i + 1) % n, n + i] for i in range(n)]
    return map_from_face_cycles([bottom, top] + sides)


def antiprism(n: int) -> CombinatorialMap:
    """n-antiprism: bottom 0..n-1, top n..2n-1, side belt of 2n triangles."""
    if n < 3:
        raise ValueError(f"antiprism: need n >= 3, got {n}")
    bottom = [0] + list(range(n - 1, 0, -1))
    top = [n + i for i in range(n)]
    ups = [[i, (i + 1) % n, n + i] for i in range(n)]
    downs = [[(i + 1) % n, n + (i + 1) % n, n + i] for i in range(n)]
    return map_from_face_cycles([bottom, top] + ups + downs)


def two_apex_pyramid(n: int) -> CombinatorialMap:
    """Pyramid over an n-gon with its apex split into two joined vertices.

    Base 0..n-1; apex n joins base 0 and 1; apex n+1 joins the other n-2
    base vertices.  Faces: the base n-gon, two quadrilaterals, n-2 triangles.
    """
    if n < 4:
        raise ValueError(f"two_apex_pyramid: need n >= 4, got {n}")
    x, y = n, n + 1
    base_rev = [0] + list(range(n - 1, 0, -1))
    tri_x = [0, 1, x]
    quad_right = [1, 2, y, x]
    tris_y = [[i, i + 1, y] for i in range(2, n - 1)]
    quad_left = [n - 1, 0, x, y]
    return map_from_face_cycles([base_rev, tri_x, quad_right] + tris_y + [quad_left])


def twisted_antiprism(n: int) -> CombinatorialMap:
    """Twisted n-antiprism, the rectification skeleton of the two-apex pyramid.

    Hand-derived face structure: vertices are the two-apex pyramid's edges
    (base edges B_0..B_{n-1}, one spoke per base vertex S_0..S_{n-1}, the
    apex edge A); 4-regular with 2n+3 faces.
    """
    if n < 4:
        raise ValueError(f"twisted_antiprism: need n >= 4, got {n}")
    B = list(range(n))
    S = list(range(n, 2 * n))
    A = 2 * n
    faces: list[list[int]] = []
    # one triangle per base vertex i: edges B_{i-1}, B_i, S_i
    for i in range(n):
        faces.append([B[(i - 1) % n], B[i], S[i]])
    faces.append([S[0], S[1], A])  # around the low apex
    faces.append(S[2:] + [A])  # around the high apex
    faces.append(B)  # the base n-gon
    faces.append([B[0], S[1], S[0]])  # triangle face of the pyramid at base edge 0
    faces.append([B[1], S[2], A, S[1]])  # quadrilateral side face
    for i in range(2, n - 1):
        faces.append([B[i], S[i + 1], S[i]])
    faces.append([B[n - 1], S[0], A, S[n - 1]])  # other quadrilateral
    return map_from_face_cycles(faces)


# ---------------------------------------------------------------------------
# Canonical JSON file format
# ---------------------------------------------------------------------------


def map_to_dict(m: CombinatorialMap) -> dict:
    return {"darts": m.dart_count, "alpha": list(m.alpha), "sigma": list(m.sigma)}


def map_from_dict(data: dict) -> CombinatorialMap:
    try:
        darts = data["darts"]
        alpha = tuple(int(x) for x in data["alpha"])
        sigma = tuple(int(x) for x in data["sigma"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MapError("format", f"bad map object: {exc}") from exc
    if len(alpha) != darts or len(sigma) != darts:
        raise MapError("length-mismatch", "darts field disagrees with array lengths")
    m = CombinatorialMap(alpha, sigma)
    validate_map(m)
    return m


def load_map(path) -> CombinatorialMap:
    with open(path) as fh:
        return map_from_dict(json.load(fh))


def save_map(m: CombinatorialMap, path) -> None:
    Path(path).write_text(json.dumps(map_to_dict(m)) + "\n")

"""Implicit graph families with uniform vertex codecs.

Vertex ids are stable integers:
  * Hamming H(n,q): mixed radix, entry 0 most significant;
  * Johnson/Kneser: colex combinatorial number system on sorted k-subsets;
  * bilinear forms H_q(m,n): row-major base-q digits, entry (0,0) most
    significant;
  * Grassmann: index into the sorted list of subspaces (sorted by the tuple
    of contained vectors);
  * incidence graphs: points first, then lines.
"""

from __future__ import annotations

import math
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

import numpy as np

from .algebra import (AlgebraError, BudgetExceeded, FiniteField, ff_make,
                      mat_rank, mat_rref)


class GraphError(ValueError):
    pass


UNREACHED = 255  # sentinel in dense distance arrays (one byte per vertex)


# ---------------------------------------------------------------------------
# subset codec (colex combinatorial number system)


def rank_subset(subset: Sequence[int]) -> int:
    return sum(math.comb(c, j + 1) for j, c in enumerate(subset))


def unrank_subset(r: int, v: int, k: int) -> tuple[int, ...]:
    out = [0] * k
    n = v
    while k > 0:
        lower = k - 1
        while lower < n:
            mid = (lower + n + 1) // 2
            if r < math.comb(mid, k):
                n = mid - 1
            else:
                lower = mid
        r -= math.comb(n, k)
        k -= 1
        out[k] = n
    return tuple(out)


def gaussian_binomial(d: int, k: int, q: int) -> int:
    num = den = 1
    for i in range(k):
        num *= q ** (d - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


# ---------------------------------------------------------------------------
# base class


class ImplicitGraph:
    family = "generic"

    n_vertices: int
    params: dict

    def neighbors(self, v: int) -> list[int]:
        raise NotImplementedError

    def distance(self, u: int, v: int) -> Optional[int]:
        """Analytic distance when the family admits one, else None."""
        return None

    def label_of(self, v: int) -> str:
        raise NotImplementedError

    def vertex_from_label(self, label: str) -> int:
        raise NotImplementedError

    def is_reduced(self) -> bool:
        """Distinct vertices have distinct neighbourhoods (exhaustive check)."""
        if self.n_vertices > 10 ** 4:
            raise BudgetExceeded("reducedness check needs |V| <= 1e4 for this family")
        seen = {}
        for v in range(self.n_vertices):
            key = tuple(sorted(self.neighbors(v)))
            if key in seen:
                return False
            seen[key] = v
        return True

    def spec_string(self) -> str:
        inner = ",".join("%s=%s" % kv for kv in sorted(self.params.items()))
        return "%s:%s" % (self.family, inner)

    def __repr__(self) -> str:
        return "%s(%s, %d vertices)" % (type(self).__name__, self.params, self.n_vertices)


# ---------------------------------------------------------------------------
# Hamming graphs


class HammingGraph(ImplicitGraph):
    family = "hamming"

    def __init__(self, n: int, q: int):
        if n < 1 or q < 2:
            raise GraphError("Hamming graph needs n >= 1, q >= 2")
        self.n = n
        self.q = q
        self.n_vertices = q ** n
        self.params = {"n": n, "q": q}
        self.place = [q ** (n - 1 - i) for i in range(n)]
        self.degree = n * (q - 1)

    def tuple_of(self, v: int) -> tuple[int, ...]:
        out = []
        for pv in self.place:
            out.append((v // pv) % self.q)
        return tuple(out)

    def id_of(self, tup: Sequence[int]) -> int:
        if len(tup) != self.n or any(not 0 <= a < self.q for a in tup):
            raise GraphError("bad Hamming tuple %r" % (tup,))
        return sum(a * pv for a, pv in zip(tup, self.place))

    def neighbors(self, v: int) -> list[int]:
        out = []
        for pv in self.place:
            d = (v // pv) % self.q
            base = v - d * pv
            for c in range(self.q):
                if c != d:
                    out.append(base + c * pv)
        return out

    def distance(self, u: int, v: int) -> int:
        d = 0
        for pv in self.place:
            if (u // pv) % self.q != (v // pv) % self.q:
                d += 1
        return d

    def weight(self, v: int) -> int:
        return sum(1 for pv in self.place if (v // pv) % self.q)

    def support(self, v: int) -> tuple[int, ...]:
        return tuple(i for i, pv in enumerate(self.place) if (v // pv) % self.q)

    def label_of(self, v: int) -> str:
        tup = self.tuple_of(v)
        if self.q <= 10:
            return "".join(str(a) for a in tup)
        return ",".join(str(a) for a in tup)

    def vertex_from_label(self, label: str) -> int:
        label = label.strip()
        if "," in label:
            tup = [int(x) for x in label.split(",")]
        else:
            tup = [int(ch) for ch in label]
        return self.id_of(tup)

    def is_reduced(self) -> bool:
        return self.n >= 2

    # vectorised helpers ---------------------------------------------------

    def neighbors_array(self, ids: np.ndarray) -> np.ndarray:
        """(len(ids), degree) array of neighbour ids."""
        ids = np.asarray(ids, dtype=np.int64)
        cols = []
        for pv in self.place:
            d = (ids // pv) % self.q
            base = ids - d * pv
            for c in range(1, self.q):
                cols.append(base + ((d + c) % self.q) * pv)
        return np.stack(cols, axis=1)

    def bfs_sources(self, sources: Iterable[int], radius: Optional[int] = None) -> np.ndarray:
        """Dense multi-source BFS distance array (uint8, UNREACHED sentinel)."""
        dist = np.full(self.n_vertices, UNREACHED, dtype=np.uint8)
        frontier = np.unique(np.fromiter(sources, dtype=np.int64))
        dist[frontier] = 0
        level = 0
        while frontier.size and (radius is None or level < radius):
            level += 1
            if level >= UNREACHED:
                raise BudgetExceeded("covering radius beyond the one-byte level array")
            nxt = self.neighbors_array(frontier).reshape(-1)
            nxt = nxt[dist[nxt] == UNREACHED]
            nxt = np.unique(nxt)
            dist[nxt] = level
            frontier = nxt
        return dist

    def sphere_around(self, center: int, i: int) -> np.ndarray:
        """Ids at Hamming distance exactly i from center."""
        if i == 0:
            return np.array([center], dtype=np.int64)
        out = []
        ctuple = self.tuple_of(center)
        for supp in combinations(range(self.n), i):
            base = center
            places = [self.place[j] for j in supp]
            for j, pv in zip(supp, places):
                base -= ctuple[j] * pv
            for deltas in product(*(range(self.q - 1) for _ in supp)):
                w = base
                for (j, pv), dd in zip(zip(supp, places), deltas):
                    w += ((ctuple[j] + 1 + dd) % self.q) * pv
                out.append(w)
        return np.array(sorted(out), dtype=np.int64)


# ---------------------------------------------------------------------------
# Johnson and Kneser graphs


class _SubsetGraph(ImplicitGraph):
    def __init__(self, v: int, k: int):
        self.v = v
        self.k = k
        self.n_vertices = math.comb(v, k)
        self.params = {"v": v, "k": k}

    def subset_of(self, x: int) -> tuple[int, ...]:
        return unrank_subset(x, self.v, self.k)

    def id_of(self, subset: Sequence[int]) -> int:
        s = tuple(sorted(subset))
        if len(s) != self.k or len(set(s)) != self.k or not all(0 <= a < self.v for a in s):
            raise GraphError("bad %d-subset %r of 0..%d" % (self.k, subset, self.v - 1))
        return rank_subset(s)

    def label_of(self, x: int) -> str:
        return ",".join(str(a) for a in self.subset_of(x))

    def vertex_from_label(self, label: str) -> int:
        return self.id_of([int(a) for a in label.replace("{", "").replace("}", "").split(",")])


class JohnsonGraph(_SubsetGraph):
    family = "johnson"

    def __init__(self, v: int, k: int):
        if not 2 <= k <= v - 1:
            raise GraphError("Johnson graph needs 2 <= k <= v-1")
        super().__init__(v, k)
        self.degree = k * (v - k)

    def neighbors(self, x: int) -> list[int]:
        s = self.subset_of(x)
        inside = set(s)
        out = []
        for drop in range(self.k):
            rest = s[:drop] + s[drop + 1:]
            for add in range(self.v):
                if add not in inside:
                    out.append(rank_subset(tuple(sorted(rest + (add,)))))
        return out

    def distance(self, u: int, v: int) -> int:
        a, b = set(self.subset_of(u)), set(self.subset_of(v))
        return self.k - len(a & b)

    def is_reduced(self) -> bool:
        return True


class KneserGraph(_SubsetGraph):
    family = "kneser"

    def __init__(self, v: int, k: int):
        if not 2 <= k <= (v - 1) / 2:
            raise GraphError("Kneser graph needs 2 <= k <= (v-1)/2")
        super().__init__(v, k)
        self.degree = math.comb(v - k, k)

    def neighbors(self, x: int) -> list[int]:
        s = self.subset_of(x)
        complement = [a for a in range(self.v) if a not in set(s)]
        return [rank_subset(c) for c in combinations(complement, self.k)]

    def is_reduced(self) -> bool:
        return self.v >= 2 * self.k + 1


# ---------------------------------------------------------------------------
# cycle graphs


class CycleGraph(ImplicitGraph):
    family = "cycle"

    def __init__(self, m: int):
        if m < 3:
            raise GraphError("cycle needs at least 3 vertices")
        self.m = m
        self.n_vertices = m
        self.params = {"m": m}
        self.degree = 2

    def neighbors(self, v: int) -> list[int]:
        return [(v - 1) % self.m, (v + 1) % self.m]

    def distance(self, u: int, v: int) -> int:
        d = abs(u - v)
        return min(d, self.m - d)

    def label_of(self, v: int) -> str:
        return str(v)

    def vertex_from_label(self, label: str) -> int:
        return int(label)

    def is_reduced(self) -> bool:
        return self.m != 4


# ---------------------------------------------------------------------------
# bilinear forms graphs


class FormsGraph(ImplicitGraph):
    """Vertices are m x n matrices over GF(q); adjacency is rank(a-b) = 1."""

    family = "forms"

    def __init__(self, m: int, n: int, q: int):
        if m < 2 or n < 2:
            raise GraphError("forms graph needs m, n >= 2")
        pp = _prime_power_of(q)
        if pp is None:
            raise GraphError("%d is not a prime power" % q)
        if q ** (m * n) > 2 ** 24:
            raise BudgetExceeded("forms graph q^(mn) over the 2^24 vertex budget")
        self.m, self.n, self.q = m, n, q
        self.field = ff_make(*pp)
        self.n_vertices = q ** (m * n)
        self.params = {"m": m, "n": n, "q": q}
        # rank-1 matrices: u^T v with u normalised (first nonzero entry 1)
        f = self.field
        units = []
        for u in _projective_reps(f, m):
            for v in product(range(q), repeat=n):
                if any(v):
                    units.append(tuple(tuple(f.mul(ui, vj) for vj in v) for ui in u))
        self.rank_one = units
        self.degree = len(units)

    def matrix_of(self, x: int) -> tuple[tuple[int, ...], ...]:
        digits = []
        for i in range(self.m * self.n):
            pv = self.q ** (self.m * self.n - 1 - i)
            digits.append((x // pv) % self.q)
        return tuple(tuple(digits[r * self.n: (r + 1) * self.n]) for r in range(self.m))

    def id_of(self, mat: Sequence[Sequence[int]]) -> int:
        x = 0
        for row in mat:
            for a in row:
                x = x * self.q + a
        return x

    def neighbors(self, x: int) -> list[int]:
        f = self.field
        mat = self.matrix_of(x)
        out = []
        for r1 in self.rank_one:
            out.append(self.id_of(tuple(
                tuple(f.add(mat[i][j], r1[i][j]) for j in range(self.n))
                for i in range(self.m))))
        return out

    def distance(self, u: int, v: int) -> int:
        f = self.field
        a, b = self.matrix_of(u), self.matrix_of(v)
        diff = [[f.sub(a[i][j], b[i][j]) for j in range(self.n)] for i in range(self.m)]
        return mat_rank(f, diff)

    def label_of(self, v: int) -> str:
        return ";".join("".join(str(a) for a in row) for row in self.matrix_of(v))

    def vertex_from_label(self, label: str) -> int:
        rows = [[int(ch) for ch in part] for part in label.split(";")]
        return self.id_of(rows)

    def is_reduced(self) -> bool:
        return True


def _prime_power_of(n: int) -> Optional[tuple[int, int]]:
    for p in range(2, n + 1):
        if n % p == 0:
            d, m = 0, n
            while m % p == 0:
                m //= p
                d += 1
            return (p, d) if m == 1 else None
    return None


def _projective_reps(f: FiniteField, dim: int) -> list[tuple[int, ...]]:
    """Lexicographically least representatives of 1-spaces of GF(q)^dim."""
    reps = []
    seen = set()
    for vec in product(range(f.q), repeat=dim):
        if not any(vec) or vec in seen:
            continue
        reps.append(vec)
        for c in range(1, f.q):
            seen.add(tuple(f.mul(c, x) for x in vec))
    return reps


# ---------------------------------------------------------------------------
# Grassmann graphs


class GrassmannGraph(ImplicitGraph):
    """k-dimensional subspaces of GF(q)^d; adjacency dim(a^b) = k-1."""

    family = "grassmann"

    def __init__(self, d: int, k: int, q: int):
        pp = _prime_power_of(q)
        if pp is None or not 1 <= k <= d - 1:
            raise GraphError("bad Grassmann parameters")
        if q ** (d * k) > 2 ** 24:
            raise BudgetExceeded("Grassmann enumeration over budget")
        self.d, self.k, self.q = d, k, q
        self.field = ff_make(*pp)
        self.params = {"d": d, "k": k, "q": q}
        self.subspaces = enumerate_subspaces(self.field, d, k)
        self.n_vertices = len(self.subspaces)
        assert self.n_vertices == gaussian_binomial(d, k, q)
        self._index = {s.vectors: i for i, s in enumerate(self.subspaces)}
        self.degree = q * gaussian_binomial(k, k - 1, q) * gaussian_binomial(d - k, 1, q) // q
        self._adj: Optional[list[list[int]]] = None

    def id_of_basis(self, basis: Sequence[Sequence[int]]) -> int:
        span = Subspace.from_basis(self.field, basis)
        return self._index[span.vectors]

    def neighbors(self, x: int) -> list[int]:
        if self._adj is None:
            self._adj = self._build_adjacency()
        return self._adj[x]

    def _build_adjacency(self) -> list[list[int]]:
        f = self.field
        adj: list[list[int]] = [[] for _ in self.subspaces]
        for i, a in enumerate(self.subspaces):
            for j in range(i + 1, len(self.subspaces)):
                b = self.subspaces[j]
                if mat_rank(f, list(a.basis) + list(b.basis)) == self.k + 1:
                    adj[i].append(j)
                    adj[j].append(i)
        return adj

    def distance(self, u: int, v: int) -> int:
        f = self.field
        a, b = self.subspaces[u], self.subspaces[v]
        return mat_rank(f, list(a.basis) + list(b.basis)) - self.k

    def label_of(self, v: int) -> str:
        return "|".join("".join(str(a) for a in row) for row in self.subspaces[v].basis)

    def vertex_from_label(self, label: str) -> int:
        rows = [[int(ch) for ch in part] for part in label.split("|")]
        return self.id_of_basis(rows)

    def is_reduced(self) -> bool:
        return True


class Subspace:
    """A subspace stored with its canonical RREF basis and vector set."""

    __slots__ = ("basis", "vectors")

    def __init__(self, basis: tuple[tuple[int, ...], ...], vectors: tuple[tuple[int, ...], ...]):
        self.basis = basis
        self.vectors = vectors

    @classmethod
    def from_basis(cls, f: FiniteField, rows: Sequence[Sequence[int]]) -> "Subspace":
        red, _ = mat_rref(f, rows)
        basis = tuple(tuple(r) for r in red)
        vecs = [tuple([0] * len(rows[0]))]
        for b in basis:
            vecs = [tuple(f.add(x, f.mul(c, bb)) for x, bb in zip(v, b))
                    for c in range(f.q) for v in vecs]
        return cls(basis, tuple(sorted(set(vecs))))

    def contains(self, vec: Sequence[int]) -> bool:
        return tuple(vec) in set(self.vectors)


def enumerate_subspaces(f: FiniteField, d: int, k: int) -> list[Subspace]:
    """All k-subspaces of GF(q)^d, sorted by their vector tuples."""
    found: dict[tuple, Subspace] = {}
    if k == 1:
        for rep in _projective_reps(f, d):
            s = Subspace.from_basis(f, [rep])
            found[s.vectors] = s
    else:
        target = gaussian_binomial(d, k, q=f.q)
        for combo in combinations(_projective_reps(f, d), k):
            if mat_rank(f, list(combo)) != k:
                continue
            s = Subspace.from_basis(f, list(combo))
            if s.vectors not in found:
                found[s.vectors] = s
                if len(found) == target:
                    break
    return [found[key] for key in sorted(found)]


# ---------------------------------------------------------------------------
# incidence structures and their graphs


class IncidenceStructure:
    """Points, lines (as sorted tuples of point indices) and their incidences."""

    def __init__(self, n_points: int, lines: Sequence[Sequence[int]],
                 point_labels: Optional[Sequence] = None, name: str = "incidence"):
        self.n_points = n_points
        self.lines = [tuple(sorted(set(l))) for l in lines]
        if any((not line) or line[-1] >= n_points or line[0] < 0 for line in self.lines):
            raise GraphError("line references an invalid point")
        self.point_labels = list(point_labels) if point_labels is not None else list(range(n_points))
        self.name = name
        self.point_lines: list[list[int]] = [[] for _ in range(n_points)]
        for li, line in enumerate(self.lines):
            for p in line:
                self.point_lines[p].append(li)

    @property
    def n_lines(self) -> int:
        return len(self.lines)

    def dualize(self) -> "IncidenceStructure":
        dual_lines = [tuple(self.point_lines[p]) for p in range(self.n_points)]
        return IncidenceStructure(self.n_lines, dual_lines, name=self.name + "^D")

    def order(self) -> Optional[tuple[int, int]]:
        """(s,t) with s+1 points per line and t+1 lines per point, if constant."""
        per_line = {len(l) for l in self.lines}
        per_point = {len(pl) for pl in self.point_lines}
        if len(per_line) == 1 and len(per_point) == 1:
            return (per_line.pop() - 1, per_point.pop() - 1)
        return None

    def is_generalized_quadrangle(self) -> bool:
        """The three GQ axioms, checked exhaustively."""
        ord_ = self.order()
        if ord_ is None:
            return False
        # two points on at most one common line / dually
        for l1 in range(self.n_lines):
            for l2 in range(l1 + 1, self.n_lines):
                if len(set(self.lines[l1]) & set(self.lines[l2])) > 1:
                    return False
        pair_seen: set[tuple[int, int]] = set()
        for line in self.lines:
            for a, b in combinations(line, 2):
                if (a, b) in pair_seen:
                    return False
                pair_seen.add((a, b))
        # unique (q, M) for each antiflag
        line_sets = [set(l) for l in self.lines]
        for p in range(self.n_points):
            on_p = set(self.point_lines[p])
            for li, lset in enumerate(line_sets):
                if li in on_p:
                    continue
                count = 0
                for m in self.point_lines[p]:
                    if line_sets[m] & lset:
                        count += 1
                if count != 1:
                    return False
        return True


class IncidenceGraph(ImplicitGraph):
    family = "incidence"

    def __init__(self, structure: IncidenceStructure):
        self.structure = structure
        self.n_vertices = structure.n_points + structure.n_lines
        self.params = {"name": structure.name}

    def is_point(self, v: int) -> bool:
        return v < self.structure.n_points

    def neighbors(self, v: int) -> list[int]:
        s = self.structure
        if v < s.n_points:
            return [s.n_points + li for li in s.point_lines[v]]
        return list(s.lines[v - s.n_points])

    def label_of(self, v: int) -> str:
        s = self.structure
        return "p%d" % v if v < s.n_points else "l%d" % (v - s.n_points)

    def vertex_from_label(self, label: str) -> int:
        label = label.strip()
        if label.startswith("p"):
            return int(label[1:])
        if label.startswith("l"):
            return self.structure.n_points + int(label[1:])
        raise GraphError("incidence labels look like p12 or l3")

    def spec_string(self) -> str:
        return self.structure.name


class CollinearityGraph(ImplicitGraph):
    family = "collinearity"

    def __init__(self, structure: IncidenceStructure):
        self.structure = structure
        self.n_vertices = structure.n_points
        self.params = {"name": structure.name}
        adj: list[set[int]] = [set() for _ in range(structure.n_points)]
        for line in structure.lines:
            for a, b in combinations(line, 2):
                adj[a].add(b)
                adj[b].add(a)
        self._adj = [sorted(s) for s in adj]

    def neighbors(self, v: int) -> list[int]:
        return self._adj[v]

    def label_of(self, v: int) -> str:
        return "p%d" % v

    def vertex_from_label(self, label: str) -> int:
        return int(label.lstrip("p"))

    def spec_string(self) -> str:
        return "collinearity:" + self.structure.name


def incidence_graph(s: IncidenceStructure) -> IncidenceGraph:
    return IncidenceGraph(s)


def collinearity_graph(s: IncidenceStructure) -> CollinearityGraph:
    return CollinearityGraph(s)


def dualize(s: IncidenceStructure) -> IncidenceStructure:
    return s.dualize()


# ---------------------------------------------------------------------------
# PG_3(q) and the symplectic quadrangle W_3(q)


def build_pg3(q: int) -> IncidenceStructure:
    """Points and lines of PG_3(q)."""
    if q > 9:
        raise BudgetExceeded("subspace enumeration limited to q <= 9")
    pp = _prime_power_of(q)
    if pp is None:
        raise GraphError("%d is not a prime power" % q)
    f = ff_make(*pp)
    points = _projective_reps(f, 4)
    pt_index = {v: i for i, v in enumerate(points)}
    lines = []
    for sub in enumerate_subspaces(f, 4, 2):
        lines.append(tuple(sorted(pt_index[v] for v in sub.vectors
                                  if v in pt_index)))
    return IncidenceStructure(len(points), sorted(set(lines)),
                              point_labels=points, name="pg3:q=%d" % q)


def symplectic_form(f: FiniteField, x: Sequence[int], y: Sequence[int]) -> int:
    """f(x,y) = x1 y2 - x2 y1 - x3 y4 + x4 y3 (0-based indices 0..3)."""
    t1 = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]))
    t2 = f.sub(f.mul(x[3], y[2]), f.mul(x[2], y[3]))
    return f.add(t1, t2)


def build_w3(q: int) -> IncidenceStructure:
    """The symplectic generalised quadrangle W_3(q): all points of PG_3(q),
    lines the totally isotropic 2-spaces."""
    if q > 9:
        raise BudgetExceeded("subspace enumeration limited to q <= 9")
    pp = _prime_power_of(q)
    if pp is None:
        raise GraphError("%d is not a prime power" % q)
    f = ff_make(*pp)
    points = _projective_reps(f, 4)
    pt_index = {v: i for i, v in enumerate(points)}
    lines = []
    for sub in enumerate_subspaces(f, 4, 2):
        b0, b1 = sub.basis
        if symplectic_form(f, b0, b1) == 0:
            lines.append(tuple(sorted(pt_index[v] for v in sub.vectors
                                      if v in pt_index)))
    return IncidenceStructure(len(points), sorted(set(lines)),
                              point_labels=points, name="w3:q=%d" % q)


# ---------------------------------------------------------------------------
# traversal utilities


def bfs_distances(g: ImplicitGraph, sources: Iterable[int],
                  radius: Optional[int] = None) -> np.ndarray:
    """Multi-source BFS over any implicit graph; uint8 with UNREACHED sentinel."""
    if isinstance(g, HammingGraph):
        return g.bfs_sources(sources, radius)
    dist = np.full(g.n_vertices, UNREACHED, dtype=np.uint8)
    frontier = sorted(set(sources))
    for v in frontier:
        dist[v] = 0
    level = 0
    while frontier and (radius is None or level < radius):
        level += 1
        if level >= UNREACHED:
            raise BudgetExceeded("distance beyond the one-byte level array")
        nxt = []
        for v in frontier:
            for w in g.neighbors(v):
                if dist[w] == UNREACHED:
                    dist[w] = level
                    nxt.append(w)
        frontier = nxt
    return dist


def distance(g: ImplicitGraph, u: int, v: int) -> Optional[int]:
    """Shortest-path distance; None for a disconnected pair."""
    d = g.distance(u, v)
    if d is not None:
        return d
    if u == v:
        return 0
    seen = {u: 0}
    frontier = [u]
    level = 0
    while frontier:
        level += 1
        nxt = []
        for x in frontier:
            for y in g.neighbors(x):
                if y == v:
                    return level
                if y not in seen:
                    seen[y] = level
                    nxt.append(y)
        frontier = nxt
    return None


def sphere(g: ImplicitGraph, v: int, i: int) -> list[int]:
    """Vertices at distance exactly i from v."""
    if i < 0:
        raise GraphError("negative radius")
    if isinstance(g, HammingGraph):
        return g.sphere_around(v, i).tolist()
    seen = {v}
    frontier = [v]
    for _ in range(i):
        nxt = []
        for x in frontier:
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(frontier)


def ball(g: ImplicitGraph, v: int, i: int) -> list[int]:
    seen = {v}
    frontier = [v]
    for _ in range(i):
        nxt = []
        for x in frontier:
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def girth(g: ImplicitGraph, budget: int = 10 ** 4) -> Optional[int]:
    """Length of a shortest cycle, by BFS from every vertex."""
    if g.n_vertices > budget:
        raise BudgetExceeded("girth check limited to %d vertices" % budget)
    best: Optional[int] = None
    for start in range(g.n_vertices):
        dist = {start: 0}
        parent = {start: -1}
        frontier = [start]
        while frontier:
            nxt = []
            for x in frontier:
                for y in g.neighbors(x):
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        nxt.append(y)
                    elif parent[x] != y and parent[y] != x:
                        cyc = dist[x] + dist[y] + 1
                        if best is None or cyc < best:
                            best = cyc
            if best is not None and frontier and 2 * dist[frontier[0]] >= best:
                break
            frontier = nxt
    return best


def diameter(g: ImplicitGraph, budget: int = 10 ** 5) -> int:
    if g.n_vertices > budget:
        raise BudgetExceeded("diameter check limited to %d vertices" % budget)
    best = 0
    for start in range(g.n_vertices):
        dist = bfs_distances(g, [start])
        if (dist == UNREACHED).any():
            raise GraphError("graph is disconnected")
        best = max(best, int(dist.max()))
    return best


def is_distance_regular(g: ImplicitGraph, budget: int = 10 ** 5) -> Optional[list[list[int]]]:
    """Intersection array [[b_0..b_{d-1}], [c_1..c_d]] iff the singleton-code
    level profile is constant over every base vertex; None otherwise."""
    if g.n_vertices > budget:
        raise BudgetExceeded("distance-regularity check limited to %d vertices" % budget)
    reference: Optional[tuple] = None
    n_checked = g.n_vertices if g.n_vertices <= 10 ** 4 else 50
    for start in range(n_checked):
        dist = bfs_distances(g, [start])
        if (dist == UNREACHED).any():
            return None
        diam = int(dist.max())
        b = [None] * diam
        c = [None] * (diam + 1)
        a = [None] * (diam + 1)
        for v in range(g.n_vertices):
            dv = int(dist[v])
            same = up = down = 0
            for w in g.neighbors(v):
                dw = int(dist[w])
                if dw == dv:
                    same += 1
                elif dw == dv + 1:
                    up += 1
                else:
                    down += 1
            if dv < diam:
                if b[dv] is None:
                    b[dv] = up
                elif b[dv] != up:
                    return None
            elif up:
                return None
            if dv > 0:
                if c[dv] is None:
                    c[dv] = down
                elif c[dv] != down:
                    return None
            if a[dv] is None:
                a[dv] = same
            elif a[dv] != same:
                return None
        profile = (tuple(b), tuple(c[1:]))
        if reference is None:
            reference = profile
        elif reference != profile:
            return None
    return [list(reference[0]), list(reference[1])]


# ---------------------------------------------------------------------------
# graph spec strings for the CLI


def build(spec: str) -> ImplicitGraph:
    """Parse "hamming:n=8,q=2" style family spec strings."""
    if ":" not in spec:
        raise GraphError("graph spec looks like family:key=value,...")
    family, _, rest = spec.partition(":")
    family = family.strip().lower()
    kv = {}
    for part in rest.split(","):
        if not part.strip():
            continue
        key, _, val = part.partition("=")
        kv[key.strip()] = int(val)
    if family == "hamming":
        return HammingGraph(kv["n"], kv["q"])
    if family == "johnson":
        return JohnsonGraph(kv["v"], kv["k"])
    if family == "kneser":
        return KneserGraph(kv["v"], kv["k"])
    if family == "cycle":
        return CycleGraph(kv["m"])
    if family == "forms":
        return FormsGraph(kv["m"], kv["n"], kv["q"])
    if family == "grassmann":
        return GrassmannGraph(kv["d"], kv["k"], kv["q"])
    if family == "w3":
        return IncidenceGraph(build_w3(kv["q"]))
    if family == "pg3":
        return IncidenceGraph(build_pg3(kv["q"]))
    raise GraphError("unknown graph family %r" % family)

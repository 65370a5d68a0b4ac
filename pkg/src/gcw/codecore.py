"""Code parameters and regularity.

A code is a subset of the vertices of an implicit graph, optionally with a
linear descriptor (field + generator matrix) when it is a subspace of F_q^n
living in a Hamming graph.

Distance partitions come in three modes with explicit applicability limits:
  dense     multi-source BFS labelling every vertex (|V| <= 2^24);
  spheres   levels 0..s as disjoint unions of spheres, valid for s <= e
            by the sphere-disjointness lemma; rho is not computed;
  syndrome  coset-leader weights of a linear code (q^(n-k) <= 2^24), giving
            rho and level sizes without touching the vertex set.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .algebra import BudgetExceeded, FiniteField, enumerate_subspace, ff_make, null_space
from .graphs import (UNREACHED, GraphError, HammingGraph, ImplicitGraph,
                     bfs_distances, sphere)

DENSE_VERTEX_BUDGET = 2 ** 24
SYNDROME_BUDGET = 2 ** 24


class TrivialCodeError(ValueError):
    """|C| <= 1: minimum distance undefined."""


class CodeError(ValueError):
    pass


@dataclass(frozen=True)
class LinearDesc:
    """F_q-linear span of generator rows inside H(n,q)."""

    field: FiniteField
    generators: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.generators[0])

    @property
    def dimension(self) -> int:
        from .algebra import mat_rank
        return mat_rank(self.field, self.generators)

    def words(self) -> list[tuple[int, ...]]:
        return enumerate_subspace(self.field, self.generators)

    def parity_check(self) -> list[list[int]]:
        return null_space(self.field, self.generators)


class Code:
    """A vertex subset of an implicit graph, with cached parameters."""

    def __init__(self, graph: ImplicitGraph, ids: Iterable[int],
                 linear: Optional[LinearDesc] = None, name: str = ""):
        arr = np.unique(np.fromiter(ids, dtype=np.int64))
        if arr.size and (arr[0] < 0 or arr[-1] >= graph.n_vertices):
            raise CodeError("code contains invalid vertex ids")
        self.graph = graph
        self.ids = arr
        self.linear = linear
        self.name = name
        self._id_set: Optional[frozenset] = None
        self._delta: Optional[int] = None

    @classmethod
    def from_linear(cls, graph: HammingGraph, f: FiniteField,
                    generators: Sequence[Sequence[int]], name: str = "") -> "Code":
        if not isinstance(graph, HammingGraph) or graph.q != f.q:
            raise CodeError("linear codes live in H(n,q) over their own field")
        desc = LinearDesc(f, tuple(tuple(g) for g in generators))
        if f.q ** len(generators) > 10 ** 7:
            raise BudgetExceeded("row-space enumeration over budget")
        ids = [graph.id_of(w) for w in desc.words()]
        if len(set(ids)) != f.q ** desc.dimension:
            raise CodeError("generator rows are inconsistent with the id set")
        return cls(graph, ids, linear=desc, name=name)

    def __len__(self) -> int:
        return int(self.ids.size)

    def __contains__(self, v: int) -> bool:
        return v in self.id_set

    @property
    def id_set(self) -> frozenset:
        if self._id_set is None:
            self._id_set = frozenset(int(x) for x in self.ids)
        return self._id_set

    def is_trivial(self) -> bool:
        return len(self) <= 1 or len(self) == self.graph.n_vertices

    def words(self) -> list[str]:
        return [self.graph.label_of(int(v)) for v in self.ids]

    def __repr__(self) -> str:
        tag = self.name or "code"
        return "Code(%s, |C|=%d in %s)" % (tag, len(self), self.graph.spec_string())


# ---------------------------------------------------------------------------
# minimum distance and error capacity


def min_distance(c: Code, pair_budget: int = 10 ** 8) -> int:
    if len(c) < 2:
        raise TrivialCodeError("minimum distance needs at least two codewords")
    if c._delta is not None:
        return c._delta
    g = c.graph
    if c.linear is not None and isinstance(g, HammingGraph):
        # minimum nonzero weight over the row space
        delta = min(g.weight(int(v)) for v in c.ids if v != g.id_of(tuple([0] * g.n)))
    elif g.distance(0, 0) is not None:
        ids = c.ids
        if len(ids) ** 2 > pair_budget:
            raise BudgetExceeded("all-pairs distance sweep over budget")
        delta = None
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                d = g.distance(int(ids[i]), int(ids[j]))
                if delta is None or d < delta:
                    delta = d
                    if delta == 1:
                        break
            if delta == 1:
                break
    else:
        # BFS from each codeword until the nearest distinct codeword
        members = c.id_set
        delta = None
        for v in c.ids:
            v = int(v)
            seen = {v}
            frontier = [v]
            depth = 0
            hit = False
            while frontier and not hit and (delta is None or depth + 1 < delta):
                depth += 1
                nxt = []
                for x in frontier:
                    for y in g.neighbors(x):
                        if y in seen:
                            continue
                        seen.add(y)
                        if y in members:
                            delta = depth
                            hit = True
                            break
                        nxt.append(y)
                    if hit:
                        break
                frontier = nxt
            if delta == 1:
                break
    assert delta is not None
    c._delta = int(delta)
    return c._delta


def error_capacity(c: Code) -> int:
    return (min_distance(c) - 1) // 2


# ---------------------------------------------------------------------------
# distance partitions


@dataclass
class DistancePartition:
    mode: str
    sizes: list[int]
    rho: Optional[int] = None
    labels: Optional[np.ndarray] = None          # dense: level per vertex
    level_sets: Optional[list[np.ndarray]] = None  # spheres: ids per level
    leader_weights: Optional[np.ndarray] = None  # syndrome: weight per coset

    def level_of(self, v: int) -> Optional[int]:
        if self.labels is not None:
            lv = int(self.labels[v])
            return None if lv == UNREACHED else lv
        if self.level_sets is not None:
            for i, s in enumerate(self.level_sets):
                if np.searchsorted(s, v) < s.size and s[np.searchsorted(s, v)] == v:
                    return i
            return None
        raise CodeError("syndrome partitions carry no per-vertex levels")

    def level_ids(self, i: int) -> np.ndarray:
        if self.level_sets is not None:
            return self.level_sets[i]
        if self.labels is not None:
            return np.nonzero(self.labels == i)[0].astype(np.int64)
        raise CodeError("syndrome partitions carry no per-vertex levels")

    @property
    def n_levels(self) -> int:
        return len(self.sizes)


def _sphere_level_sets(c: Code, s: int) -> list[np.ndarray]:
    g = c.graph
    out = [c.ids.copy()]
    for i in range(1, s + 1):
        if isinstance(g, HammingGraph) and g.q == 2:
            masks = g.sphere_around(0, i)
            level = (c.ids[:, None] ^ masks[None, :]).reshape(-1)
        else:
            chunks = []
            for v in c.ids:
                chunks.append(np.array(sphere(g, int(v), i), dtype=np.int64))
            level = np.concatenate(chunks) if chunks else np.array([], dtype=np.int64)
        expected = level.size
        level = np.unique(level)
        if level.size != expected:
            raise CodeError("spheres of radius %d are not disjoint (s must be <= e)" % i)
        if expected == 0:
            raise CodeError("empty sphere at radius %d" % i)
        out.append(level)
    return out


def _syndrome_partition(c: Code) -> DistancePartition:
    if c.linear is None or not isinstance(c.graph, HammingGraph):
        raise CodeError("syndrome mode needs a linear code in a Hamming graph")
    f = c.linear.field
    g: HammingGraph = c.graph
    h_rows = c.linear.parity_check()
    r = len(h_rows)
    if f.q ** r > SYNDROME_BUDGET:
        raise BudgetExceeded("syndrome space over the 2^24 budget")
    n_syn = f.q ** r
    # syndrome of c*e_j is the j-th column of H scaled by c, packed base q
    col_syndromes = []
    for j in range(g.n):
        packs = []
        for cval in range(1, f.q):
            pack = 0
            for i in range(r):
                pack = pack * f.q + f.mul(h_rows[i][j], cval)
            packs.append(pack)
        col_syndromes.append(packs)

    def syn_add(a: int, b: int) -> int:
        out, mult = 0, 1
        for _ in range(r):
            out += f.add(a % f.q, b % f.q) * mult
            a //= f.q
            b //= f.q
            mult *= f.q
        return out

    dist = np.full(n_syn, UNREACHED, dtype=np.uint8)
    dist[0] = 0
    frontier = [0]
    level = 0
    while frontier:
        level += 1
        nxt = []
        for syn in frontier:
            for packs in col_syndromes:
                for pack in packs:
                    t = syn_add(syn, pack)
                    if dist[t] == UNREACHED:
                        dist[t] = level
                        nxt.append(t)
        frontier = nxt
    assert (dist != UNREACHED).all(), "syndrome graph must be connected"
    rho = int(dist.max())
    counts = np.bincount(dist, minlength=rho + 1)
    sizes = [int(counts[i]) * len(c) for i in range(rho + 1)]
    return DistancePartition(mode="syndrome", sizes=sizes, rho=rho, leader_weights=dist)


def distance_partition(c: Code, mode: str = "dense", s: Optional[int] = None) -> DistancePartition:
    g = c.graph
    if len(c) == 0:
        raise TrivialCodeError("empty code has no distance partition")
    if mode == "dense":
        if g.n_vertices > DENSE_VERTEX_BUDGET:
            raise BudgetExceeded("dense partition needs |V| <= 2^24")
        labels = bfs_distances(g, (int(x) for x in c.ids))
        if (labels == UNREACHED).any():
            raise GraphError("graph is disconnected")
        rho = int(labels.max())
        sizes = [int((labels == i).sum()) for i in range(rho + 1)]
        return DistancePartition(mode="dense", sizes=sizes, rho=rho, labels=labels)
    if mode == "spheres":
        if s is None:
            raise CodeError("sphere mode needs the level count s")
        if len(c) >= 2 and s > error_capacity(c):
            raise CodeError("sphere mode valid only for s <= e")
        level_sets = _sphere_level_sets(c, s)
        sizes = [int(x.size) for x in level_sets]
        return DistancePartition(mode="spheres", sizes=sizes, level_sets=level_sets)
    if mode == "syndrome":
        return _syndrome_partition(c)
    raise CodeError("unknown partition mode %r" % mode)


def covering_radius(c: Code) -> int:
    """rho via syndrome mode when available, else a dense sweep."""
    if c.linear is not None and isinstance(c.graph, HammingGraph):
        try:
            return _syndrome_partition(c).rho  # type: ignore[return-value]
        except BudgetExceeded:
            pass
    return distance_partition(c, "dense").rho  # type: ignore[return-value]


# ---------------------------------------------------------------------------
# regularity


@dataclass
class RegularityProfile:
    ok: bool
    triples: list[tuple[Optional[int], Optional[int], Optional[int]]] = field(default_factory=list)
    violation: Optional[tuple[int, int, tuple[int, int, int]]] = None  # vertex, level, (a,b,c)

    def __bool__(self) -> bool:
        return self.ok


def _regularity_dense_binary(c: Code, s: int, labels: np.ndarray) -> RegularityProfile:
    g: HammingGraph = c.graph  # type: ignore[assignment]
    rho = int(labels.max())
    top = min(s, rho)
    ids = np.arange(g.n_vertices, dtype=np.int64)
    own = labels.astype(np.int16)
    same = np.zeros(g.n_vertices, dtype=np.int16)
    down = np.zeros(g.n_vertices, dtype=np.int16)
    up = np.zeros(g.n_vertices, dtype=np.int16)
    for pv in g.place:
        nb = labels[ids ^ pv].astype(np.int16)
        same += (nb == own)
        down += (nb == own - 1)
        up += (nb == own + 1)
    triples = []
    for lvl in range(top + 1):
        mask = labels == lvl
        for arr, kind in ((same, "a"), (up, "b"), (down, "c")):
            vals = arr[mask]
            if vals.size and vals.min() != vals.max():
                bad = int(ids[mask][np.argmax(arr[mask] != vals[0])])
                trip = (int(same[bad]), int(up[bad]), int(down[bad]))
                return RegularityProfile(False, triples, (bad, lvl, trip))
        a_i = int(same[mask][0])
        b_i = int(up[mask][0]) if lvl < rho else None
        c_i = int(down[mask][0]) if lvl > 0 else None
        triples.append((a_i, b_i, c_i))
    return RegularityProfile(True, triples)


def s_regularity(c: Code, s: int, partition: Optional[DistancePartition] = None) -> RegularityProfile:
    """Constant (a_i, b_i, c_i) across each level 0..s, or a concrete witness."""
    g = c.graph
    if partition is None:
        if g.n_vertices <= DENSE_VERTEX_BUDGET:
            partition = distance_partition(c, "dense")
        else:
            partition = distance_partition(c, "spheres", s=s)
    if partition.mode == "syndrome":
        raise CodeError("regularity needs per-vertex levels (dense or spheres)")
    if partition.mode == "dense" and isinstance(g, HammingGraph) and g.q == 2 \
            and g.n_vertices > 2 ** 16:
        return _regularity_dense_binary(c, s, partition.labels)  # type: ignore[arg-type]

    if partition.mode == "dense":
        rho = partition.rho
        def level_of(v: int) -> Optional[int]:
            return int(partition.labels[v])  # type: ignore[index]
    else:
        rho = None
        sets = [set(int(x) for x in arr) for arr in partition.level_sets]  # type: ignore[union-attr]
        def level_of(v: int) -> Optional[int]:
            for i, ss in enumerate(sets):
                if v in ss:
                    return i
            return None

    top = min(s, rho) if rho is not None else min(s, partition.n_levels - 1)
    triples: list = []
    for lvl in range(top + 1):
        expected: Optional[tuple[int, int, int]] = None
        for v in partition.level_ids(lvl):
            v = int(v)
            a = b = cc = 0
            for w in g.neighbors(v):
                lw = level_of(w)
                if lw == lvl:
                    a += 1
                elif lw == lvl - 1:
                    cc += 1
                elif lw == lvl + 1 or (lw is None and partition.mode == "spheres"):
                    b += 1
            got = (a, b, cc)
            if expected is None:
                expected = got
            elif got != expected:
                return RegularityProfile(False, triples, (v, lvl, got))
        assert expected is not None
        a_i, b_i, c_i = expected
        triples.append((a_i,
                        b_i if (rho is None or lvl < rho) else None,
                        c_i if lvl > 0 else None))
    return RegularityProfile(True, triples)


def is_completely_regular(c: Code, partition: Optional[DistancePartition] = None) -> bool:
    if partition is None:
        partition = distance_partition(c, "dense")
    if partition.rho is None:
        raise CodeError("complete regularity needs rho (dense partition)")
    return bool(s_regularity(c, partition.rho, partition))


# ---------------------------------------------------------------------------
# perfection and sphere packing


def is_perfect(c: Code) -> bool:
    """Balls of radius e around codewords tile the vertex set, i.e. rho = e."""
    return covering_radius(c) == error_capacity(c)


def verify_sphere_packing(c: Code, i: int) -> bool:
    """Each vertex of C_i lies at distance i from a unique codeword and C_i is
    the disjoint union of the radius-i spheres."""
    if i > error_capacity(c):
        raise CodeError("sphere packing check needs i <= e")
    try:
        part = distance_partition(c, "spheres", s=i)
    except CodeError:
        return False  # spheres overlapped: uniqueness fails
    # spheres at each radius <= i are disjoint (asserted in construction);
    # radii must also be pairwise disjoint
    allv = np.concatenate(part.level_sets)  # type: ignore[arg-type]
    if np.unique(allv).size != allv.size:
        return False
    # the union must be exactly the vertices at distance i from the code
    if c.graph.n_vertices <= DENSE_VERTEX_BUDGET:
        dense = distance_partition(c, "dense")
        level = part.level_sets[i]  # type: ignore[index]
        if not np.array_equal(np.nonzero(dense.labels == i)[0].astype(np.int64), level):
            return False
    return True


# ---------------------------------------------------------------------------
# code I/O


def code_from_lines(graph: ImplicitGraph, lines: Iterable[str], name: str = "") -> Code:
    ids = []
    for ln in lines:
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        ids.append(graph.vertex_from_label(ln))
    return Code(graph, ids, name=name)


def code_from_file(graph: ImplicitGraph, path: str, name: str = "") -> Code:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        payload = json.loads(text)
        if isinstance(payload, list):
            return Code(graph, payload, name=name)
        if "generators" in payload:
            f = ff_make(*_field_params(payload["field"]))
            return Code.from_linear(graph, f, payload["generators"], name=name)  # type: ignore[arg-type]
        return Code(graph, payload["ids"], name=name)
    return code_from_lines(graph, text.splitlines(), name=name)


def _field_params(q: int) -> tuple[int, int]:
    from .graphs import _prime_power_of
    pp = _prime_power_of(q)
    if pp is None:
        raise CodeError("%d is not a prime power" % q)
    return pp


def code_to_file(c: Code, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for v in c.ids:
            fh.write(c.graph.label_of(int(v)) + "\n")


def parameter_report(c: Code, with_regularity: bool = True) -> dict:
    """JSON-ready {delta, e, rho, level_sizes, regular_profile} with explicit
    "unavailable" entries for budget-excluded quantities."""
    out: dict = {"size": len(c), "graph": c.graph.spec_string()}
    if c.name:
        out["name"] = c.name
    try:
        out["delta"] = min_distance(c)
        out["e"] = error_capacity(c)
    except TrivialCodeError:
        out["delta"] = None
        out["e"] = None
        out["unavailable"] = {"delta": "trivial code"}
        return out
    except BudgetExceeded as exc:
        out.setdefault("unavailable", {})["delta"] = str(exc)
    part = None
    try:
        if c.graph.n_vertices <= DENSE_VERTEX_BUDGET:
            part = distance_partition(c, "dense")
        elif c.linear is not None:
            part = distance_partition(c, "syndrome")
    except BudgetExceeded as exc:
        out.setdefault("unavailable", {})["rho"] = str(exc)
    if part is None:
        out.setdefault("unavailable", {})
        out["unavailable"].setdefault(
            "rho", "no dense sweep (|V| too large) and no linear descriptor")
    else:
        out["rho"] = part.rho
        out["level_sizes"] = part.sizes
        if with_regularity and part.mode == "dense":
            prof = s_regularity(c, part.rho, part)  # type: ignore[arg-type]
            out["completely_regular"] = prof.ok
            if prof.ok:
                out["regular_profile"] = [list(t) for t in prof.triples]
            elif prof.violation:
                v, lvl, trip = prof.violation
                out["regularity_violation"] = {
                    "vertex": c.graph.label_of(v), "level": lvl, "counts": list(trip)}
    return out

"""Permutations, permutation groups and finite fields.

Conventions used throughout the package:
  * permutations act on the right, x^g = g[x], and compose left-to-right:
    x^(g*h) = (x^g)^h;
  * a permutation of degree m is stored as the tuple of images of 0..m-1;
  * field elements are integers 0..q-1 encoding coefficient vectors of the
    chosen irreducible polynomial in base p (constant coefficient first).
"""

from __future__ import annotations

import json
import math
from functools import reduce
from itertools import combinations, permutations as iter_permutations
from typing import Callable, Iterable, Optional, Sequence


class AlgebraError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    """A configurable resource limit was hit before the computation finished."""


# ---------------------------------------------------------------------------
# permutations


class Perm:
    """A permutation of {0..degree-1} stored as an image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise AlgebraError("images do not form a bijection of 0..%d" % (len(images) - 1))
        self.images = images

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Perm":
        images = list(range(degree))
        for cyc in cycles:
            m = len(cyc)
            for i in range(m):
                images[cyc[i]] = cyc[(i + 1) % m]
        return cls(images)

    @classmethod
    def parse(cls, text: str, degree: Optional[int] = None) -> "Perm":
        """Parse either a JSON image array or disjoint-cycle text "(0 1 2)(3 4)"."""
        text = text.strip()
        if text.startswith("["):
            images = json.loads(text)
            return cls(images)
        if text in ("()", ""):
            if degree is None:
                raise AlgebraError("degree required to parse the identity")
            return cls.identity(degree)
        cycles = []
        for chunk in text.replace(")", ")|").split("|"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if not (chunk.startswith("(") and chunk.endswith(")")):
                raise AlgebraError("bad cycle text: %r" % text)
            body = chunk[1:-1].replace(",", " ").split()
            cycles.append([int(x) for x in body])
        pts = [p for cyc in cycles for p in cyc]
        if len(set(pts)) != len(pts):
            raise AlgebraError("cycles are not disjoint: %r" % text)
        deg = degree if degree is not None else (max(pts) + 1 if pts else 1)
        return cls.from_cycles(cycles, deg)

    def __getitem__(self, x: int) -> int:
        return self.images[x]

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        if self.degree != other.degree:
            raise AlgebraError("degree mismatch: %d vs %d" % (self.degree, other.degree))
        oi = other.images
        return Perm(tuple(oi[x] for x in self.images))

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Perm(inv)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def order(self) -> int:
        n = 1
        g = self
        while not g.is_identity():
            g = g * self
            n += 1
        return n

    def support(self) -> list[int]:
        return [x for x, y in enumerate(self.images) if x != y]

    def cycles(self, include_fixed: bool = False) -> list[list[int]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(cyc)
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(%s)" % " ".join(str(p) for p in c) for c in cycs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __repr__(self) -> str:
        return "Perm(%s)" % (self.cycle_string(),)


def perm_compose(a: Perm, b: Perm) -> Perm:
    """(a*b)(x) = b[a[x]]; left-to-right, matching the x^(gh) = (x^g)^h rule."""
    return a * b


def perm_inverse(a: Perm) -> Perm:
    return a.inverse()


def mulclose(gens: Iterable[Perm], maxsize: Optional[int] = None) -> set:
    """Closure of a generator set under multiplication (works for any group
    element type with * and hashing)."""
    gens = list(gens)
    els = set(gens)
    bdy = list(els)
    while bdy:
        new = []
        for a in gens:
            for b in bdy:
                c = b * a
                if c not in els:
                    els.add(c)
                    new.append(c)
                    if maxsize is not None and len(els) > maxsize:
                        raise BudgetExceeded("closure exceeded %d elements" % maxsize)
        bdy = new
    return els


# ---------------------------------------------------------------------------
# group actions

# An action is a callable act(x, g) -> y on hashable objects x.


def act_point(x: int, g: Perm) -> int:
    return g[x]


def act_tuple(x: tuple, g: Perm) -> tuple:
    return tuple(g[p] for p in x)


def act_subset(x: tuple, g: Perm) -> tuple:
    return tuple(sorted(g[p] for p in x))


def orbit(gens: Sequence, seed, act: Callable = act_point) -> list:
    """Closure of {seed} under the generators, returned sorted."""
    gens = list(gens)
    seen = {seed}
    bdy = [seed]
    while bdy:
        new = []
        for x in bdy:
            for g in gens:
                y = act(x, g)
                if y not in seen:
                    seen.add(y)
                    new.append(y)
        bdy = new
    return sorted(seen)


def orbit_transversal(gens: Sequence, seed, act: Callable, identity) -> dict:
    """Map y -> group element u with act(seed, u) = y, for y in the orbit."""
    trans = {seed: identity}
    bdy = [seed]
    while bdy:
        new = []
        for x in bdy:
            for g in gens:
                y = act(x, g)
                if y not in trans:
                    trans[y] = trans[x] * g
                    new.append(y)
        bdy = new
    return trans


def schreier_generators(gens: Sequence, seed, act: Callable, identity) -> list:
    """Generators of the stabiliser of seed, via Schreier's lemma."""
    trans = orbit_transversal(gens, seed, act, identity)
    inv = {y: u.inverse() for y, u in trans.items()}
    out = []
    seen = set()
    for y, u in trans.items():
        for g in gens:
            s = u * g * inv[act(y, g)]
            if s not in seen:
                seen.add(s)
                if not s.is_identity():
                    out.append(s)
    return out


# ---------------------------------------------------------------------------
# permutation groups with a deterministic stabiliser chain


class _ChainLevel:
    __slots__ = ("base_point", "transversal")

    def __init__(self, base_point: int):
        self.base_point = base_point
        self.transversal: dict[int, Perm] = {}


class PermGroup:
    """A permutation group given by generators, with a lazily built
    deterministic Schreier-Sims stabiliser chain."""

    def __init__(self, generators: Iterable[Perm], degree: Optional[int] = None):
        gens = [g for g in generators if not g.is_identity()]
        if degree is None:
            if not gens:
                raise AlgebraError("degree required for a trivial group")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise AlgebraError("mixed degrees in generator list")
        self.degree = degree
        self.generators = tuple(gens)
        self._chain: Optional[list[_ChainLevel]] = None
        self._order: Optional[int] = None

    # -- construction helpers

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls([], degree)

    @classmethod
    def symmetric(cls, degree: int) -> "PermGroup":
        if degree <= 1:
            return cls.trivial(max(degree, 1))
        gens = [Perm.from_cycles([[0, 1]], degree)]
        if degree > 2:
            gens.append(Perm.from_cycles([list(range(degree))], degree))
        return cls(gens, degree)

    @classmethod
    def alternating(cls, degree: int) -> "PermGroup":
        if degree <= 2:
            return cls.trivial(max(degree, 1))
        gens = [Perm.from_cycles([[0, 1, 2]], degree)]
        if degree > 3:
            if degree % 2:
                gens.append(Perm.from_cycles([list(range(degree))], degree))
            else:
                gens.append(Perm.from_cycles([list(range(1, degree))], degree))
        return cls(gens, degree)

    @classmethod
    def cyclic(cls, degree: int) -> "PermGroup":
        return cls([Perm.from_cycles([list(range(degree))], degree)], degree)

    @classmethod
    def dihedral(cls, degree: int) -> "PermGroup":
        rot = Perm.from_cycles([list(range(degree))], degree)
        ref = Perm([(-i) % degree for i in range(degree)])
        return cls([rot, ref], degree)

    # -- stabiliser chain

    @staticmethod
    def _sift(g: Perm, chain: list[_ChainLevel]) -> tuple[Perm, int]:
        """Reduce g through the chain; return (residue, level it dropped to)."""
        for lvl, level in enumerate(chain):
            beta = g[level.base_point]
            u = level.transversal.get(beta)
            if u is None:
                return g, lvl
            g = g * u.inverse()
        return g, len(chain)

    def _build_chain(self, preferred_base: Sequence[int] = ()) -> list[_ChainLevel]:
        """Deterministic Schreier-Sims by fixpoint: every inserted residue
        either extends a transversal or adds a base point, so it terminates
        with all Schreier generators sifting to the identity."""
        degree = self.degree
        ident = Perm.identity(degree)
        base: list[int] = []
        strong: list[Perm] = []
        chain: list[_ChainLevel] = []
        preferred = list(preferred_base)

        def new_base_point(g: Perm) -> int:
            for b in preferred:
                if g[b] != b and b not in base:
                    return b
            for b in range(degree):
                if g[b] != b and b not in base:
                    return b
            raise AssertionError("residue fixes every candidate base point")

        def rebuild_transversals() -> None:
            for i, level in enumerate(chain):
                gens_i = [g for g in strong if all(g[b] == b for b in base[:i])]
                level.transversal = {level.base_point: ident}
                bdy = [level.base_point]
                while bdy:
                    new = []
                    for x in bdy:
                        ux = level.transversal[x]
                        for g in gens_i:
                            y = g[x]
                            if y not in level.transversal:
                                level.transversal[y] = ux * g
                                new.append(y)
                    bdy = new

        def insert(g: Perm) -> bool:
            residue, lvl = self._sift(g, chain)
            if residue.is_identity():
                return False
            if lvl == len(chain):
                b = new_base_point(residue)
                base.append(b)
                chain.append(_ChainLevel(b))
            strong.append(residue)
            rebuild_transversals()
            return True

        for g in self.generators:
            insert(g)
        while True:
            dirty = False
            for i, level in enumerate(chain):
                gens_i = [g for g in strong if all(g[b] == b for b in base[:i])]
                for y, uy in list(level.transversal.items()):
                    for s in gens_i:
                        schreier = uy * s * level.transversal[s[y]].inverse()
                        if insert(schreier):
                            dirty = True
                            break
                    if dirty:
                        break
                if dirty:
                    break
            if not dirty:
                break
        if not chain:
            chain.append(_ChainLevel(0))
            chain[0].transversal = {0: ident}
        return chain

    def chain(self, preferred_base: Sequence[int] = ()) -> list[_ChainLevel]:
        if self._chain is None:
            self._chain = self._build_chain(preferred_base)
        return self._chain

    def order(self) -> int:
        if self._order is None:
            n = 1
            for level in self.chain():
                n *= max(len(level.transversal), 1)
            self._order = n
        return self._order

    def __contains__(self, g: Perm) -> bool:
        if g.degree != self.degree:
            return False
        residue, _ = self._sift(g, self.chain())
        return residue.is_identity()

    def elements(self, maxsize: int = 10 ** 6) -> list[Perm]:
        if self.order() > maxsize:
            raise BudgetExceeded("group order %d exceeds enumeration budget" % self.order())
        # every element factors uniquely as u_deepest * ... * u_level0
        els = [Perm.identity(self.degree)]
        for level in self.chain():
            els = [u * e for u in level.transversal.values() for e in els]
        assert len(els) == self.order()
        return els

    def orbit(self, seed, act: Callable = act_point) -> list:
        return orbit(self.generators, seed, act)

    def orbits(self) -> list[list[int]]:
        seen = set()
        out = []
        for x in range(self.degree):
            if x in seen:
                continue
            orb = self.orbit(x)
            seen.update(orb)
            out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def stabilizer(self, pt: int) -> "PermGroup":
        """Point stabiliser, from Schreier generators."""
        ident = Perm.identity(self.degree)
        gens = schreier_generators(self.generators, pt, act_point, ident)
        # deduplicate while keeping deterministic order
        return PermGroup(sorted(set(gens)), self.degree)

    def stabilizer_chain_subgroup(self, pts: Sequence[int]) -> "PermGroup":
        g = self
        for p in pts:
            g = g.stabilizer(p)
        return g

    def setwise_stabilizer(self, subset: Sequence[int]) -> "PermGroup":
        """Setwise stabiliser via Schreier generators of the subset action."""
        ident = Perm.identity(self.degree)
        seed = tuple(sorted(subset))
        gens = schreier_generators(self.generators, seed, act_subset, ident)
        return PermGroup(sorted(set(gens)), self.degree)

    def normal_closure(self, seeds: Sequence[Perm], maxsize: int = 10 ** 7) -> list[Perm]:
        """Generators of the smallest normal subgroup containing the seeds."""
        gens = list(seeds)
        gen_set = set(gens)
        bdy = list(gens)
        while bdy:
            new = []
            for s in bdy:
                for g in self.generators:
                    c = g.inverse() * s * g
                    if c not in gen_set:
                        gen_set.add(c)
                        new.append(c)
                        if len(gen_set) > maxsize:
                            raise BudgetExceeded("normal closure generator blow-up")
            bdy = new
        return sorted(gen_set)

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    def __repr__(self) -> str:
        return "PermGroup(degree=%d, gens=%d)" % (self.degree, len(self.generators))


def group_order(g: PermGroup) -> int:
    return g.order()


def stabilizer(g: PermGroup, pt: int) -> PermGroup:
    return g.stabilizer(pt)


def is_k_transitive(g: PermGroup, k: int) -> bool:
    """Orbit of one ordered k-tuple of distinct points covers all of them."""
    n = g.degree
    if k > n:
        raise AlgebraError("k exceeds degree")
    if k == 0:
        return True
    total = reduce(lambda a, b: a * b, range(n, n - k, -1), 1)
    seed = tuple(range(k))
    return len(orbit(g.generators, seed, act_tuple)) == total


def is_k_homogeneous(g: PermGroup, k: int) -> bool:
    n = g.degree
    if k > n:
        raise AlgebraError("k exceeds degree")
    if k == 0:
        return True
    seed = tuple(range(k))
    return len(orbit(g.generators, seed, act_subset)) == math.comb(n, k)


def _prime_power(n: int) -> Optional[tuple[int, int]]:
    if n < 2:
        return None
    for p in range(2, n + 1):
        if p * p > n:
            return (n, 1)
        if n % p == 0:
            d = 0
            m = n
            while m % p == 0:
                m //= p
                d += 1
            return (p, d) if m == 1 else None
    return None


def two_transitive_type(g: PermGroup, budget: int = 10 ** 7) -> str:
    """Burnside split of a 2-transitive group: 'affine' iff it has a regular
    elementary-abelian normal p-subgroup of order equal to the degree."""
    if not is_k_transitive(g, 2):
        raise AlgebraError("group is not 2-transitive")
    pp = _prime_power(g.degree)
    if pp is None:
        return "almost_simple"
    p, _ = pp
    if g.order() > budget:
        raise BudgetExceeded("group order exceeds the classification budget")
    seen_closures = set()
    for el in g.elements(budget):
        o = el.order()
        if o % p:
            continue
        x = el
        for _ in range(o // p - 1):
            x = x * el
        # x now has order p
        if x in seen_closures:
            continue
        closure_gens = g.normal_closure([x])
        sub = PermGroup(closure_gens, g.degree)
        if sub.order() == g.degree and sub.is_transitive() and sub.is_abelian() \
                and all(h.order() == p for h in closure_gens):
            return "affine"
        if sub.order() <= budget:
            seen_closures.update(sub.elements(budget))
    return "almost_simple"


def normalizer_in_sym(t: PermGroup, candidates: Optional[Sequence[Perm]] = None,
                      exhaustive_limit: int = 8) -> PermGroup:
    """N_{Sym(degree)}(T).  Exhaustive for degree <= exhaustive_limit, otherwise
    the supplied candidate generators are verified and returned as a group."""
    deg = t.degree
    if candidates is not None:
        for g in candidates:
            for s in t.generators:
                if g.inverse() * s * g not in t:
                    raise AlgebraError("candidate %r does not normalise T" % g)
        gens = list(candidates) + list(t.generators)
        return PermGroup(sorted(set(gens)), deg)
    if deg > exhaustive_limit:
        raise BudgetExceeded("degree %d over exhaustive normaliser limit %d"
                             % (deg, exhaustive_limit))
    gens = []
    t_gens = t.generators
    for images in iter_permutations(range(deg)):
        g = Perm(images)
        gi = g.inverse()
        if all(gi * s * g in t for s in t_gens):
            gens.append(g)
    return PermGroup(gens, deg)


# ---------------------------------------------------------------------------
# finite fields

# irreducible polynomials over F_p, coefficient of x^i at index i, monic;
# the table is part of the output contract: element indexing must be stable.
_IRREDUCIBLE: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (0, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (3, 1): (0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 1): (0, 1),
    (5, 2): (2, 0, 1),
    (7, 1): (0, 1),
    (7, 2): (3, 0, 1),
    (11, 1): (0, 1),
    (11, 2): (7, 0, 1),
    (13, 1): (0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 4): (2, 0, 0, 1, 1),
    (5, 3): (2, 0, 1, 1),
}


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, int(p ** 0.5) + 1):
        if p % d == 0:
            return False
    return True


def _poly_mul_mod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> list[int]:
    d = len(mod) - 1
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    # reduce modulo the monic polynomial `mod`
    for i in range(len(res) - 1, d - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(d + 1):
                res[i - d + j] = (res[i - d + j] - c * mod[j]) % p
    res = res[:d]
    return res + [0] * (d - len(res))


def _find_irreducible(p: int, d: int) -> tuple[int, ...]:
    """Deterministic search: lexicographically least monic irreducible of degree d."""
    def is_irreducible(coeffs):
        # no roots check is not enough for d >= 4; use gcd-free brute force:
        # test divisibility by all monic polynomials of degree <= d//2.
        for deg in range(1, d // 2 + 1):
            for idx in range(p ** deg):
                div = [(idx // p ** i) % p for i in range(deg)] + [1]
                # long division remainder
                rem = list(coeffs)
                while len(rem) >= len(div) and any(rem):
                    while rem and rem[-1] == 0:
                        rem.pop()
                    if len(rem) < len(div):
                        break
                    c = rem[-1]
                    shift = len(rem) - len(div)
                    for j, dj in enumerate(div):
                        rem[shift + j] = (rem[shift + j] - c * dj) % p
                if not any(rem):
                    return False
        return True

    for idx in range(p ** d):
        coeffs = tuple((idx // p ** i) % p for i in range(d)) + (1,)
        if is_irreducible(coeffs):
            return coeffs
    raise AssertionError("no irreducible polynomial found")


class FiniteField:
    """GF(p^d) with log/exp tables; elements are integers 0..q-1 whose base-p
    digits are the coefficients of the residue polynomial."""

    def __init__(self, p: int, d: int):
        if not _is_prime(p):
            raise AlgebraError("%d is not prime" % p)
        if p ** d > 2 ** 16:
            raise AlgebraError("field order %d over the 2^16 limit" % p ** d)
        self.p = p
        self.d = d
        self.q = p ** d
        self.modulus = _IRREDUCIBLE.get((p, d)) or _find_irreducible(p, d)
        self._build_tables()

    def _vec(self, x: int) -> list[int]:
        return [(x // self.p ** i) % self.p for i in range(self.d)]

    def _idx(self, v: Sequence[int]) -> int:
        return sum(c * self.p ** i for i, c in enumerate(v))

    def _build_tables(self) -> None:
        p, q = self.p, self.q
        mul_by = {}

        def raw_mul(a: int, b: int) -> int:
            key = (a, b) if a <= b else (b, a)
            got = mul_by.get(key)
            if got is None:
                got = self._idx(_poly_mul_mod(self._vec(a), self._vec(b), self.modulus, p))
                mul_by[key] = got
            return got

        # find the least primitive element
        gen = None
        for cand in range(1, q):
            x, n = cand, 1
            while x != 1:
                x = raw_mul(x, cand)
                n += 1
                if n > q:
                    raise AssertionError("non-invertible candidate")
            if n == q - 1:
                gen = cand
                break
        assert gen is not None
        self.generator = gen
        self.exp = [0] * (q - 1)
        self.log = [0] * q
        x = 1
        for i in range(q - 1):
            self.exp[i] = x
            self.log[x] = i
            x = raw_mul(x, gen)

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        out, mult = 0, 1
        for _ in range(self.d):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        out, mult = 0, 1
        for _ in range(self.d):
            out += ((-a) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            return 0 if n else 1
        return self.exp[(self.log[a] * n) % (self.q - 1)]

    def frobenius(self, a: int, power: int = 1) -> int:
        return self.pow(a, self.p ** power)

    def elements(self) -> range:
        return range(self.q)

    def metadata(self) -> dict:
        return {"p": self.p, "d": self.d, "q": self.q,
                "irreducible": list(self.modulus), "generator": self.generator}

    def subfield_elements(self, q_sub: int) -> list[int]:
        """Elements of the subfield of order q_sub (fixed points of x -> x^q_sub)."""
        if (self.q - 1) % (q_sub - 1):
            raise AlgebraError("GF(%d) is not a subfield of GF(%d)" % (q_sub, self.q))
        return [x for x in range(self.q) if self.pow(x, q_sub) == x]

    def __repr__(self) -> str:
        return "FiniteField(%d, %d)" % (self.p, self.d)


_FIELD_CACHE: dict[tuple[int, int], FiniteField] = {}


def ff_make(p: int, d: int = 1) -> FiniteField:
    key = (p, d)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = FiniteField(p, d)
    return _FIELD_CACHE[key]


# ---------------------------------------------------------------------------
# matrices over a finite field (lists of row tuples)


def mat_mul(f: FiniteField, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for k in range(inner):
            c = ai[k]
            if c:
                bk = b[k]
                oi = out[i]
                for j in range(cols):
                    if bk[j]:
                        oi[j] = f.add(oi[j], f.mul(c, bk[j]))
    return out


def mat_vec(f: FiniteField, a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [reduce(f.add, (f.mul(a[i][j], v[j]) for j in range(len(v))), 0)
            for i in range(len(a))]


def vec_mat(f: FiniteField, v: Sequence[int], a: Sequence[Sequence[int]]) -> list[int]:
    cols = len(a[0])
    return [reduce(f.add, (f.mul(v[i], a[i][j]) for i in range(len(v))), 0)
            for j in range(cols)]


def mat_rref(f: FiniteField, rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form; returns (rref rows without zero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = f.inv(m[r][c])
        m[r] = [f.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                coef = m[i][c]
                m[i] = [f.sub(m[i][j], f.mul(coef, m[r][j])) for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [row for row in m[:r]], pivots


def mat_rank(f: FiniteField, rows: Sequence[Sequence[int]]) -> int:
    return len(mat_rref(f, rows)[0])


def mat_inv(f: FiniteField, a: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(a)
    aug = [list(a[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    red, pivots = mat_rref(f, aug)
    if pivots[:n] != list(range(n)):
        raise AlgebraError("matrix is singular")
    return [row[n:] for row in red]


def mat_det(f: FiniteField, a: Sequence[Sequence[int]]) -> int:
    n = len(a)
    m = [list(r) for r in a]
    det = 1
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            return 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = f.neg(det)
        det = f.mul(det, m[c][c])
        inv = f.inv(m[c][c])
        for i in range(c + 1, n):
            if m[i][c]:
                coef = f.mul(inv, m[i][c])
                m[i] = [f.sub(m[i][j], f.mul(coef, m[c][j])) for j in range(n)]
    return det


def null_space(f: FiniteField, rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of {v : rows . v^T = 0}."""
    red, pivots = mat_rref(f, rows)
    ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = f.neg(red[r][fc])
        basis.append(v)
    return basis


def enumerate_subspace(f: FiniteField, basis: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """All vectors of the row space, ordered by coefficient tuples base-q."""
    n = len(basis[0]) if basis else 0
    out = [tuple([0] * n)]
    for b in basis:
        scaled = [[f.mul(c, x) for x in b] for c in range(f.q)]
        out = [tuple(f.add(vi, si) for vi, si in zip(v, s))
               for s in scaled for v in out]
    return out


def all_subsets(items: Sequence, k: int) -> Iterable[tuple]:
    return combinations(items, k)

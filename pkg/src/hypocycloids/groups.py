"""Finitely presented groups: Artin graphs, finite quotients, Reidemeister-Schreier,
Tietze moves, abelianization and low-index subgroups.

Presentations are the ``Presentation`` objects of the braid module: generator
names plus relators as signed index words.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .braid import (
    Presentation,
    Word,
    canonical_relator,
    commutator,
    exponent_sums,
    free_reduce,
    inverse,
)


class GroupError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Artin graphs


@dataclass(frozen=True)
class ArtinGraph:
    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(set(vs)) != len(vs):
            raise GroupError("repeated vertex name")
        es = frozenset(frozenset(e) for e in self.edges)
        for e in es:
            if len(e) != 2:
                raise GroupError(f"edge {set(e)} is a loop or malformed")
            if not e <= set(vs):
                raise GroupError(f"edge {set(e)} uses an unknown vertex")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)

    @classmethod
    def from_pairs(cls, vertices: Sequence[str], pairs: Iterable[tuple[str, str]]) -> "ArtinGraph":
        return cls(tuple(vertices), frozenset(frozenset(p) for p in pairs))

    @classmethod
    def cycle(cls, n: int, names: Sequence[str] | None = None) -> "ArtinGraph":
        vs = tuple(names) if names else tuple(f"s{i}" for i in range(1, n + 1))
        return cls.from_pairs(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])

    @classmethod
    def path(cls, n: int, names: Sequence[str] | None = None) -> "ArtinGraph":
        vs = tuple(names) if names else tuple(f"s{i}" for i in range(1, n + 1))
        return cls.from_pairs(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])

    def adjacent(self, s: str, t: str) -> bool:
        return frozenset((s, t)) in self.edges

    def neighbours(self, v: str) -> list[str]:
        return [w for w in self.vertices if self.adjacent(v, w)]

    def is_cycle(self) -> bool:
        n = len(self.vertices)
        if n < 3 or len(self.edges) != n:
            return False
        if any(len(self.neighbours(v)) != 2 for v in self.vertices):
            return False
        return len(self.cycle_order()) == n

    def cycle_order(self) -> list[str]:
        """Vertices walked along the unique cycle (only meaningful when is_cycle)."""
        if not self.vertices:
            return []
        order = [self.vertices[0]]
        prev = None
        while True:
            nxt = [w for w in self.neighbours(order[-1]) if w != prev and w not in order[-1:]]
            nxt = [w for w in nxt if w not in order]
            if not nxt:
                return order
            prev = order[-1]
            order.append(nxt[0])

    def isomorphic(self, other: "ArtinGraph") -> bool:
        if len(self.vertices) != len(other.vertices) or len(self.edges) != len(other.edges):
            return False
        for perm in itertools.permutations(other.vertices):
            m = dict(zip(self.vertices, perm))
            if all(frozenset(m[v] for v in e) in other.edges for e in self.edges):
                return True
        return False

    def shape(self) -> str:
        n = len(self.vertices)
        if self.is_cycle():
            return f"cycle({n})"
        if len(self.edges) == n - 1 and self.isomorphic(ArtinGraph.path(n, self.vertices)):
            return f"path({n})"
        es = sorted(tuple(sorted(e, key=self.vertices.index)) for e in self.edges)
        return "graph(" + ",".join(self.vertices) + "; " + " ".join(f"{a}-{b}" for a, b in es) + ")"

    def to_json(self) -> dict:
        es = sorted(sorted(e, key=self.vertices.index) for e in self.edges)
        return {"vertices": list(self.vertices), "edges": es}

    @classmethod
    def from_json(cls, data: dict) -> "ArtinGraph":
        return cls.from_pairs(data["vertices"], [tuple(e) for e in data["edges"]])


def braid_relator(s: int, t: int) -> Word:
    return (s, t, s, -t, -s, -t)


def artin_presentation(graph: ArtinGraph) -> Presentation:
    vs = graph.vertices
    rels = []
    for i, j in itertools.combinations(range(len(vs)), 2):
        if graph.adjacent(vs[i], vs[j]):
            rels.append(braid_relator(i + 1, j + 1))
        else:
            rels.append(commutator((i + 1,), (j + 1,)))
    return Presentation(vs, tuple(rels))


def match_artin_graph(p: Presentation) -> ArtinGraph | None:
    """The graph whose Artin presentation is exactly p (up to relator rotation), or None."""
    shapes: dict[Word, tuple[int, int, bool]] = {}
    for i, j in itertools.combinations(range(1, p.rank + 1), 2):
        shapes[canonical_relator(braid_relator(i, j))] = (i, j, True)
        shapes[canonical_relator(commutator((i,), (j,)))] = (i, j, False)
    seen: dict[tuple[int, int], bool] = {}
    for r in p.rels:
        hit = shapes.get(r)
        if hit is None:
            return None
        i, j, edge = hit
        if (i, j) in seen:
            return None
        seen[(i, j)] = edge
    if len(seen) != p.rank * (p.rank - 1) // 2:
        return None
    pairs = [(p.gens[i - 1], p.gens[j - 1]) for (i, j), e in seen.items() if e]
    return ArtinGraph.from_pairs(p.gens, pairs)


def add_relations(p: Presentation, rels: Iterable[Word | str]) -> Presentation:
    from .braid import BraidError, parse_word

    new = []
    for r in rels:
        try:
            w = parse_word(r, p.gens) if isinstance(r, str) else tuple(r)
        except BraidError as e:
            raise GroupError(str(e)) from None
        if any(g == 0 or abs(g) > p.rank for g in w):
            raise GroupError(f"relator {w} uses an unknown generator")
        new.append(w)
    return Presentation(p.gens, p.rels + tuple(new))


# ---------------------------------------------------------------------------
# finite targets


class AbelianTarget:
    """Z/n1 x ... x Z/nr; elements are residue tuples."""

    def __init__(self, orders: Sequence[int]):
        if any(n < 1 for n in orders):
            raise GroupError("cyclic orders must be positive")
        self.orders = tuple(orders)

    @property
    def identity(self):
        return (0,) * len(self.orders)

    @property
    def order(self) -> int:
        out = 1
        for n in self.orders:
            out *= n
        return out

    def element(self, data) -> tuple[int, ...]:
        if len(data) != len(self.orders):
            raise GroupError(f"image {data} has the wrong length")
        return tuple(int(a) % n for a, n in zip(data, self.orders))

    def mul(self, g, h):
        return tuple((a + b) % n for a, b, n in zip(g, h, self.orders))

    def inv(self, g):
        return tuple((-a) % n for a, n in zip(g, self.orders))

    def to_json(self) -> dict:
        return {"abelian": list(self.orders)}


class PermutationTarget:
    """Permutations of range(n) composed left to right: (g*h)(i) = h(g(i))."""

    def __init__(self, degree: int):
        self.degree = degree

    @property
    def identity(self):
        return tuple(range(self.degree))

    @property
    def order(self) -> int | None:
        return None  # only the image subgroup matters

    def element(self, data) -> tuple[int, ...]:
        g = tuple(int(a) for a in data)
        if sorted(g) != list(range(self.degree)):
            raise GroupError(f"{data} is not a permutation of {self.degree} points")
        return g

    def mul(self, g, h):
        return tuple(h[i] for i in g)

    def inv(self, g):
        out = [0] * len(g)
        for i, j in enumerate(g):
            out[j] = i
        return tuple(out)

    def to_json(self) -> dict:
        return {"permutations": self.degree}


def target_from_json(data: dict):
    if "abelian" in data:
        return AbelianTarget(data["abelian"])
    if "permutations" in data:
        return PermutationTarget(data["permutations"])
    raise GroupError(f"unknown target {data}")


@dataclass(frozen=True)
class FiniteQuotientMap:
    source: Presentation
    target: object
    images: tuple

    def __post_init__(self):
        if len(self.images) != self.source.rank:
            raise GroupError(f"{len(self.images)} images for {self.source.rank} generators")
        imgs = tuple(self.target.element(g) for g in self.images)
        object.__setattr__(self, "images", imgs)
        for r in self.source.rels:
            if self.image(r) != self.target.identity:
                raise GroupError(f"relator {self.source.word_str(r)} has nontrivial image; invalid map")

    @classmethod
    def abelian(cls, source: Presentation, orders: Sequence[int], images) -> "FiniteQuotientMap":
        return cls(source, AbelianTarget(orders), tuple(images))

    @classmethod
    def permutations(cls, source: Presentation, degree: int, images) -> "FiniteQuotientMap":
        return cls(source, PermutationTarget(degree), tuple(images))

    @classmethod
    def by_name(cls, source: Presentation, target, images: dict) -> "FiniteQuotientMap":
        """images keyed by generator name; missing generators go to the identity."""
        unknown = set(images) - set(source.gens)
        if unknown:
            raise GroupError(f"unknown generators {sorted(unknown)}")
        return cls(source, target, tuple(images.get(g, target.identity) for g in source.gens))

    def image(self, w: Sequence[int]):
        e = self.target.identity
        for g in w:
            x = self.images[abs(g) - 1]
            e = self.target.mul(e, x if g > 0 else self.target.inv(x))
        return e

    def cosets(self) -> tuple[list, list[Word]]:
        """Elements of the image in breadth-first order, with transversal words."""
        elems = [self.target.identity]
        words: list[Word] = [()]
        index = {elems[0]: 0}
        queue = deque([0])
        while queue:
            c = queue.popleft()
            for i, x in enumerate(self.images):
                y = self.target.mul(elems[c], x)
                if y not in index:
                    index[y] = len(elems)
                    elems.append(y)
                    words.append(words[c] + (i + 1,))
                    queue.append(index[y])
        return elems, words

    @property
    def index(self) -> int:
        return len(self.cosets()[0])

    def onto(self) -> bool:
        order = self.target.order
        return order is None or self.index == order

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "images": [list(g) for g in self.images],
        }

    @classmethod
    def from_json(cls, data: dict) -> "FiniteQuotientMap":
        return cls(Presentation.from_json(data["source"]), target_from_json(data["target"]),
                   tuple(tuple(g) for g in data["images"]))


# ---------------------------------------------------------------------------
# Reidemeister-Schreier


@dataclass(frozen=True)
class SubgroupPresentation:
    presentation: Presentation
    provenance: tuple[tuple[int, int], ...]  # (coset, original generator) per Schreier generator
    transversal: tuple[Word, ...]
    raw_relators: tuple[Word, ...]  # one per (coset, relator), before canonicalization

    @property
    def index(self) -> int:
        return len(self.transversal)

    def euler_balance(self) -> int:
        return self.presentation.rank - len(self.raw_relators)


def _schreier_name(word: Word, gens: Sequence[str]) -> str:
    if all(len(g) == 1 and g.islower() for g in gens):
        return "".join(gens[abs(g) - 1] if g > 0 else gens[-g - 1].upper() for g in word)
    return ".".join(gens[abs(g) - 1] + ("" if g > 0 else "^-1") for g in word)


def kernel_presentation(rho: FiniteQuotientMap) -> SubgroupPresentation:
    src = rho.source
    elems, trans = rho.cosets()
    if not rho.onto():
        raise GroupError(f"map is not onto: image has {len(elems)} elements")
    where = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    act = [[where[rho.target.mul(elems[c], g)] for g in rho.images] for c in range(n)]
    tree = {}
    for c in range(1, n):
        w = trans[c]
        tree[(where[rho.image(w[:-1])], w[-1] - 1)] = c
    sgen: dict[tuple[int, int], int] = {}
    names, prov = [], []
    for c in range(n):
        for g in range(src.rank):
            if tree.get((c, g)) == act[c][g]:
                continue
            word = free_reduce(trans[c] + (g + 1,) + inverse(trans[act[c][g]]))
            sgen[(c, g)] = len(names) + 1
            names.append(_schreier_name(word, src.gens))
            prov.append((c, g + 1))
    raw = []
    for c in range(n):
        for r in src.rels:
            cur, out = c, []
            for letter in r:
                g = abs(letter) - 1
                if letter > 0:
                    s = sgen.get((cur, g))
                    if s:
                        out.append(s)
                    cur = act[cur][g]
                else:
                    prev = next(d for d in range(n) if act[d][g] == cur)
                    s = sgen.get((prev, g))
                    if s:
                        out.append(-s)
                    cur = prev
            if cur != c:
                raise GroupError("relator does not close up; map is invalid")
            raw.append(free_reduce(out))
    pres = Presentation(tuple(names), tuple(raw))
    return SubgroupPresentation(pres, tuple(prov), tuple(trans), tuple(raw))


# ---------------------------------------------------------------------------
# Tietze simplification


@dataclass(frozen=True)
class TietzeResult:
    presentation: Presentation
    complete: bool
    steps: int
    log: tuple[str, ...] = field(default_factory=tuple)


def _occurrences(r: Word, g: int) -> int:
    return sum(1 for x in r if abs(x) == g)


def _solve_for(r: Word, g: int) -> Word:
    """g expressed from the relator r in which it occurs once."""
    i = next(k for k, x in enumerate(r) if abs(x) == g)
    rot = r[i:] + r[:i]
    rest = rot[1:]
    return inverse(rest) if rot[0] > 0 else tuple(rest)


def _eliminate(gens: list[str], rels: list[Word], g: int, r: Word) -> tuple[list[str], list[Word]]:
    expr = _solve_for(r, g)
    images: list[Word] = []
    for h in range(1, len(gens) + 1):
        if h == g:
            images.append(expr)
        else:
            images.append((h if h < g else h - 1,))
    # renumber expr too
    images[g - 1] = tuple((x if abs(x) < g else (x - 1 if x > 0 else x + 1)) for x in expr)
    out = []
    removed = False
    for s in rels:
        if not removed and s == r:
            removed = True
            continue
        w = []
        for x in s:
            img = images[abs(x) - 1] if x > 0 else inverse(images[-x - 1])
            w.extend(img)
        out.append(w)
    gens = gens[: g - 1] + gens[g:]
    return gens, _clean(out)


def _clean(rels: Iterable[Sequence[int]]) -> list[Word]:
    seen, out = set(), []
    for r in rels:
        c = canonical_relator(free_reduce(r))
        if c and c not in seen:
            seen.add(c)
            out.append(c)
    return out


def _name_key(name: str) -> tuple[int, str]:
    return (len(name), name)


def _best_elimination(gens: list[str], rels: list[Word]):
    best = None
    for r in rels:
        for g in set(abs(x) for x in r):
            if _occurrences(r, g) != 1:
                continue
            expr_len = len(r) - 1
            growth = -len(r)
            for s in rels:
                if s is not r:
                    growth += _occurrences(s, g) * (expr_len - 1)
            key = (growth, _neg_name(gens[g - 1]), len(r))
            if best is None or key < best[0]:
                best = (key, g, r)
    return best


def _neg_name(name: str) -> tuple:
    # larger names are eliminated first on ties, keeping short original names
    return tuple(-x for x in (len(name),)) + tuple(-ord(c) for c in name)


def _reduce_by_overlap(rels: list[Word]) -> list[Word] | None:
    """Shorten one relator using a long cyclic piece of another; None if nothing applies."""
    for si, s in enumerate(rels):
        L = len(s)
        if L == 0:
            continue
        pieces = []
        for cand in (s, inverse(s)):
            for k in range(L):
                rot = cand[k:] + cand[:k]
                for m in range(L // 2 + 1, L + 1):
                    pieces.append((rot[:m], inverse(rot[m:])))
        pieces.sort(key=lambda uv: -len(uv[0]))
        for ri, r in enumerate(rels):
            if ri == si or len(r) < L // 2 + 1:
                continue
            n = len(r)
            for u, v in pieces:
                m = len(u)
                if m > n:
                    continue
                doubled = r + r
                for start in range(n):
                    if doubled[start : start + m] == u:
                        rest = doubled[start + m : start + n]
                        new = canonical_relator(v + rest)
                        if len(new) < n:
                            out = list(rels)
                            out[ri] = new
                            return _clean(out)
    return None


def tietze_simplify(p: Presentation, budget: int = 10_000) -> TietzeResult:
    gens = list(p.gens)
    rels = _clean(p.rels)
    log: list[str] = []
    steps = 0
    while steps < budget:
        steps += 1
        best = _best_elimination(gens, rels)
        if best is not None and best[0][0] <= 0:
            _, g, r = best
            log.append(f"eliminate {gens[g - 1]}")
            gens, rels = _eliminate(gens, rels, g, r)
            continue
        smaller = _reduce_by_overlap(rels)
        if smaller is not None:
            log.append("overlap")
            rels = smaller
            continue
        if best is not None:
            _, g, r = best
            log.append(f"eliminate {gens[g - 1]}")
            gens, rels = _eliminate(gens, rels, g, r)
            continue
        return TietzeResult(Presentation(tuple(gens), tuple(rels)), True, steps, tuple(log))
    return TietzeResult(Presentation(tuple(gens), tuple(rels)), False, steps, tuple(log))


# ---------------------------------------------------------------------------
# abelianization


@dataclass(frozen=True)
class Abelianization:
    free_rank: int
    torsion: tuple[int, ...]

    def __str__(self) -> str:
        parts = [f"Z/{t}" for t in self.torsion] + ["Z"] * self.free_rank
        return " x ".join(parts) if parts else "1"

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def smith_diagonal(rows: list[list[int]], ncols: int) -> list[int]:
    """Nonzero invariant factors of an integer matrix, each dividing the next."""
    A = [list(r) for r in rows if any(r)]
    diag = []

    def to_corner(cands):
        _, pi, pj = min(cands)
        A[0], A[pi] = A[pi], A[0]
        for r in A:
            r[0], r[pj] = r[pj], r[0]

    while A:
        to_corner([(abs(v), i, j) for i, r in enumerate(A) for j, v in enumerate(r) if v])
        while True:
            p = A[0][0]
            for i in range(1, len(A)):
                q = A[i][0] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[0])]
            for j in range(1, ncols):
                q = A[0][j] // p
                if q:
                    for r in A:
                        r[j] -= q * r[0]
            rest = [(abs(A[i][0]), i, 0) for i in range(1, len(A)) if A[i][0]]
            rest += [(abs(A[0][j]), 0, j) for j in range(1, ncols) if A[0][j]]
            if rest:
                to_corner(rest)
                continue
            bad = next((i for i in range(1, len(A)) if any(v % p for v in A[i][1:])), None)
            if bad is None:
                break
            A[0] = [a + b for a, b in zip(A[0], A[bad])]
        diag.append(abs(A[0][0]))
        ncols -= 1
        A = [r[1:] for r in A[1:] if any(r[1:])]
    return sorted(diag)


def abelianization(p: Presentation) -> Abelianization:
    rows = [exponent_sums(r, p.rank) for r in p.rels]
    diag = smith_diagonal(rows, p.rank)
    free = p.rank - len(diag)
    return Abelianization(free, tuple(d for d in diag if d != 1))


# ---------------------------------------------------------------------------
# low-index subgroups


MAX_LOW_INDEX = 7


def _standardize(table: list[list[int]], base: int, nletters: int) -> list[list[int]] | None:
    n = len(table)
    new = {base: 0}
    order = [base]
    i = 0
    while i < len(order):
        c = order[i]
        for l in range(nletters):
            d = table[c][l]
            if d not in new:
                new[d] = len(order)
                order.append(d)
        i += 1
    if len(order) != n:
        return None
    return [[new[table[c][l]] for l in range(nletters)] for c in order]


class _Enumerator:
    def __init__(self, p: Presentation, n: int):
        self.m = p.rank
        self.L = 2 * self.m
        self.n = n
        # letter 2i is generator i+1, 2i+1 its inverse
        self.rels = [[2 * (abs(g) - 1) + (0 if g > 0 else 1) for g in r] for r in p.rels]
        self.counts = [0] * (n + 1)

    def letter_inv(self, l: int) -> int:
        return l ^ 1

    def run(self) -> list[int]:
        table = [[-1] * self.L]
        self._search(table)
        return self.counts[1:]

    def _assign(self, table, c, l, d, queue) -> bool:
        li = l ^ 1
        if table[c][l] == -1 and table[d][li] == -1:
            table[c][l] = d
            table[d][li] = c
            queue.append((c, l, d))
            return True
        return table[c][l] == d and table[d][li] == c

    def _scan_all(self, table) -> bool:
        changed = True
        while changed:
            changed = False
            for c in range(len(table)):
                for r in self.rels:
                    f, i = c, 0
                    k = len(r)
                    while i < k and table[f][r[i]] != -1:
                        f = table[f][r[i]]
                        i += 1
                    if i == k:
                        if f != c:
                            return False
                        continue
                    b, j = c, k - 1
                    while j >= i and table[b][r[j] ^ 1] != -1:
                        b = table[b][r[j] ^ 1]
                        j -= 1
                    if j < i:
                        if f != b:
                            return False
                    elif j == i:
                        if not self._assign(table, f, r[i], b, []):
                            return False
                        changed = True
        return True

    def _canonical(self, table) -> bool:
        for b in range(1, len(table)):
            t = _standardize(table, b, self.L)
            if t is not None and t < table:
                return False
        return True

    def _search(self, table):
        pos = next(((c, l) for c in range(len(table)) for l in range(self.L) if table[c][l] == -1), None)
        if pos is None:
            if self._canonical(table):
                self.counts[len(table)] += 1
            return
        c, l = pos
        li = l ^ 1
        options = [d for d in range(len(table)) if table[d][li] == -1]
        if len(table) < self.n:
            options.append(len(table))
        for d in options:
            t = [row[:] for row in table]
            if d == len(t):
                t.append([-1] * self.L)
            t[c][l] = d
            t[d][li] = c
            if self._scan_all(t):
                self._search(t)


def low_index_subgroups(p: Presentation, n: int) -> list[int]:
    """Conjugacy classes of subgroups of index 1..n."""
    if n > MAX_LOW_INDEX:
        raise GroupError(f"index bound {n} exceeds the resource guard {MAX_LOW_INDEX}")
    if n < 1:
        return []
    return _Enumerator(p, n).run()


def first_difference(a: Sequence[int], b: Sequence[int]) -> int | None:
    """1-based index of the first differing count, or None."""
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i + 1
    return None

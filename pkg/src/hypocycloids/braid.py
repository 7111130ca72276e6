"""Free groups, the Artin braid action, local braids and Zariski-van Kampen relators.

Words are tuples of signed 1-based generator indices; ``-i`` is the inverse of
generator ``i``.  Braids act on the right:

    a_j^{s_j}     = a_{j+1}
    a_{j+1}^{s_j} = a_{j+1} a_j a_{j+1}^{-1}

so that a_d ... a_1 is fixed by every braid.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence

Word = tuple[int, ...]


class BraidError(ValueError):
    pass


# ---------------------------------------------------------------------------
# free words


def free_reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for g in word:
        if g == 0:
            raise BraidError("generator index 0 is not allowed")
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def inverse(word: Sequence[int]) -> Word:
    return tuple(-g for g in reversed(word))


def cyclic_reduce(word: Sequence[int]) -> Word:
    w = list(free_reduce(word))
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return tuple(w[i : j + 1])


def _letter_key(g: int) -> tuple[int, int]:
    return (abs(g), 0 if g > 0 else 1)


def _word_key(w: Sequence[int]) -> tuple:
    return tuple(_letter_key(g) for g in w)


def canonical_relator(word: Sequence[int]) -> Word:
    """Cyclically reduced, least rotation of the word or its inverse."""
    w = cyclic_reduce(word)
    if not w:
        return w
    best = None
    for cand in (w, inverse(w)):
        for r in range(len(cand)):
            rot = cand[r:] + cand[:r]
            if best is None or _word_key(rot) < _word_key(best):
                best = rot
    return best


def power(word: Sequence[int], n: int) -> Word:
    if n < 0:
        return free_reduce(inverse(word) * (-n))
    return free_reduce(tuple(word) * n)


def commutator(u: Sequence[int], v: Sequence[int]) -> Word:
    return free_reduce(tuple(u) + tuple(v) + inverse(u) + inverse(v))


def conjugate(w: Sequence[int], by: Sequence[int]) -> Word:
    """by * w * by^-1."""
    return free_reduce(tuple(by) + tuple(w) + inverse(by))


def exponent_sums(word: Sequence[int], rank: int) -> list[int]:
    out = [0] * rank
    for g in word:
        out[abs(g) - 1] += 1 if g > 0 else -1
    return out


def substitute(word: Sequence[int], images: Sequence[Word]) -> Word:
    """Apply the endomorphism a_i -> images[i-1]."""
    out: list[int] = []
    for g in word:
        img = images[abs(g) - 1] if g > 0 else inverse(images[-g - 1])
        for h in img:
            if out and out[-1] == -h:
                out.pop()
            else:
                out.append(h)
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    rank: int
    letters: Word

    def __post_init__(self):
        object.__setattr__(self, "letters", free_reduce(self.letters))
        if any(abs(g) > self.rank for g in self.letters):
            raise BraidError(f"generator out of range for rank {self.rank}")

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        _same_rank(self.rank, other.rank)
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.rank, inverse(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    @classmethod
    def gen(cls, rank: int, i: int) -> "FreeWord":
        return cls(rank, (i,))

    @classmethod
    def boundary(cls, rank: int) -> "FreeWord":
        """a_d ... a_1."""
        return cls(rank, tuple(range(rank, 0, -1)))


def _same_rank(a: int, b: int) -> None:
    if a != b:
        raise BraidError(f"rank mismatch: {a} vs {b}")


# ---------------------------------------------------------------------------
# braids


@dataclass(frozen=True)
class BraidWord:
    d: int
    letters: Word = ()

    def __post_init__(self):
        letters = tuple(int(g) for g in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.d < 1:
            raise BraidError("strand count must be positive")
        for g in letters:
            if g == 0 or abs(g) >= self.d:
                raise BraidError(f"sigma index {g} out of range for {self.d} strands")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        _same_rank(self.d, other.d)
        return BraidWord(self.d, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.d, inverse(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __pow__(self, n: int) -> "BraidWord":
        return BraidWord(self.d, self.letters * n if n >= 0 else inverse(self.letters) * (-n))

    @property
    def exponent_sum(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.letters)

    def permutation(self) -> tuple[int, ...]:
        """perm[p] = final position of the strand starting at position p (0-based)."""
        pos = list(range(self.d))  # pos[strand] = position
        at = list(range(self.d))  # at[position] = strand
        for g in self.letters:
            i = abs(g) - 1
            a, b = at[i], at[i + 1]
            at[i], at[i + 1] = b, a
            pos[a], pos[b] = i + 1, i
        return tuple(pos)

    def reduced(self) -> "BraidWord":
        return BraidWord(self.d, free_reduce(self.letters))

    def normal_form(self) -> "BraidWord":
        """Free reduction modulo far commutation, letters sorted where they commute."""
        return BraidWord(self.d, trace_normal_form(self.letters))

    def to_json(self) -> list[int]:
        return list(self.letters)

    @classmethod
    def from_json(cls, d: int, data: Sequence[int]) -> "BraidWord":
        return cls(d, tuple(data))

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"s{g}" if g > 0 else f"s{-g}^-1" for g in self.letters)


def _commute(a: int, b: int) -> bool:
    return abs(abs(a) - abs(b)) > 1


def trace_normal_form(letters: Sequence[int]) -> Word:
    """Canonical word modulo far commutation s_i s_j = s_j s_i (|i-j| > 1).

    First cancel every g ... g^-1 pair whose middle commutes with g, then
    emit the lexicographically least available letter (s_1 < s_1^-1 < s_2 < ...)
    until the word is used up.
    """
    red: list[int] = []
    for g in letters:
        j = len(red)
        while j > 0 and _commute(red[j - 1], g):
            j -= 1
        if j > 0 and red[j - 1] == -g:
            del red[j - 1]
        else:
            red.append(g)
    out: list[int] = []
    rest = red
    while rest:
        best = None
        for idx, g in enumerate(rest):
            if all(_commute(h, g) for h in rest[:idx]):
                if best is None or _letter_key(g) < _letter_key(rest[best]):
                    best = idx
        out.append(rest[best])
        rest = rest[:best] + rest[best + 1 :]
    return tuple(out)


Convention = Literal["standard", "literal"]


def sigma_images(i: int, sign: int, d: int, convention: Convention = "standard") -> list[Word]:
    """Images of a_1..a_d under s_i^sign (1-based i)."""
    imgs = [(j,) for j in range(1, d + 1)]
    if convention == "standard":
        if sign > 0:
            imgs[i - 1] = (i + 1,)
            imgs[i] = (i + 1, i, -(i + 1))
        else:
            imgs[i] = (i,)
            imgs[i - 1] = (-i, i + 1, i)
    else:
        # reading a_i^{s_j} = a_{i+1} a_i a_{i+1}^-1 for i = j+1 with absolute indices
        if sign < 0:
            raise BraidError("literal convention only defines positive generators")
        imgs[i - 1] = (i + 1,)
        if i + 1 < d:
            imgs[i] = (i + 2, i + 1, -(i + 2))
    return imgs


def braid_automorphism(beta: BraidWord, convention: Convention = "standard") -> list[Word]:
    """Images of the generators under the right action of beta."""
    d = beta.d
    imgs: list[Word] = [(j,) for j in range(1, d + 1)]
    for g in beta.letters:
        step = sigma_images(abs(g), 1 if g > 0 else -1, d, convention)
        imgs = [substitute(w, step) for w in imgs]
    return imgs


def braid_act(beta: BraidWord, w: FreeWord | Sequence[int], convention: Convention = "standard") -> FreeWord:
    if isinstance(w, FreeWord):
        _same_rank(beta.d, w.rank)
        letters = w.letters
    else:
        letters = free_reduce(w)
        if any(abs(g) > beta.d for g in letters):
            raise BraidError("word uses generators beyond the strand count")
    for g in beta.letters:
        letters = substitute(letters, sigma_images(abs(g), 1 if g > 0 else -1, beta.d, convention))
    return FreeWord(beta.d, letters)


def braid_equal(b1: BraidWord, b2: BraidWord) -> bool:
    """Equality in B_d, decided by the (faithful) action on F_d."""
    _same_rank(b1.d, b2.d)
    return braid_automorphism(b1) == braid_automorphism(b2)


def braid_action_welldefined(d: int, convention: Convention = "standard") -> bool:
    """Do the Artin relations act trivially, and is a_d...a_1 fixed by each generator?"""
    if d < 2:
        raise BraidError("need d >= 2")

    def aut(letters: Word) -> list[Word]:
        return braid_automorphism(BraidWord(d, letters), convention)

    for i in range(1, d - 1):
        if aut((i, i + 1, i)) != aut((i + 1, i, i + 1)):
            return False
    for i in range(1, d):
        for j in range(i + 2, d):
            if aut((i, j)) != aut((j, i)):
                return False
    top = tuple(range(d, 0, -1))
    for i in range(1, d):
        if braid_act(BraidWord(d, (i,)), top, convention).letters != top:
            return False
    return True


# ---------------------------------------------------------------------------
# local catalog

LocalTag = Literal["tangent", "node", "cusp", "cusp-tangent", "tacnode"]


@dataclass(frozen=True)
class LocalSingType:
    tag: LocalTag
    offset: int = 1
    m: int = 1  # tacnode contact order

    @property
    def span(self) -> int:
        return 3 if self.tag == "cusp-tangent" else 2


def local_braid(t: LocalSingType, d: int) -> BraidWord:
    if t.offset < 1 or t.offset + t.span - 1 > d:
        raise BraidError(f"{t.tag} at offset {t.offset} does not fit in {d} strands")
    i = t.offset
    if t.tag == "tangent":
        w: Word = (i,)
    elif t.tag == "node":
        w = (i, i)
    elif t.tag == "cusp":
        w = (i, i, i)
    elif t.tag == "cusp-tangent":
        w = (i + 1, i, i + 1, i)
    elif t.tag == "tacnode":
        if t.m < 1:
            raise BraidError("tacnode order must be positive")
        w = (i,) * (2 * t.m)
    else:
        raise BraidError(f"unknown local type {t.tag!r}")
    return BraidWord(d, w)


def half_twist(d: int, first: int, size: int, sign: int = 1) -> BraidWord:
    """Garside half twist on positions first..first+size-1."""
    letters: list[int] = []
    for top in range(size - 1, 0, -1):
        letters.extend(first + j for j in range(top))
    w = BraidWord(d, tuple(letters))
    return w if sign > 0 else w.inverse()


# ---------------------------------------------------------------------------
# Zariski-van Kampen


def split_conjugate(beta: BraidWord) -> tuple[BraidWord, BraidWord]:
    """Write a freely reduced beta as g * core * g^-1 with g maximal."""
    w = free_reduce(beta.letters)
    n = 0
    while 2 * n + 2 <= len(w) and w[n] == -w[len(w) - 1 - n]:
        n += 1
    return BraidWord(beta.d, w[:n]), BraidWord(beta.d, w[n : len(w) - n])


def _core_factors(core: Word) -> list[Word] | None:
    """Split a core into commuting blocks s_i^e on pairwise far indices, if it has that shape."""
    blocks: dict[int, int] = {}
    order: list[int] = []
    for g in core:
        i = abs(g)
        if i not in blocks:
            blocks[i] = 0
            order.append(i)
        blocks[i] += 1 if g > 0 else -1
    idx = sorted(i for i in blocks if blocks[i])
    if any(b - a < 2 for a, b in zip(idx, idx[1:])):
        return None
    # the word must equal the product of its blocks up to far commutation
    rebuilt: list[int] = []
    for i in order:
        e = blocks[i]
        rebuilt.extend([i if e > 0 else -i] * abs(e))
    if trace_normal_form(core) != trace_normal_form(rebuilt):
        return None
    return [tuple([i if blocks[i] > 0 else -i] * abs(blocks[i])) for i in order if blocks[i]]


def core_relators(core: BraidWord) -> list[Word]:
    """Relators of a local braid in the fiber basis it acts on."""
    d = core.d
    blocks = _core_factors(free_reduce(core.letters))
    rels: list[Word] = []
    if blocks is not None:
        for blk in blocks:
            i, e = abs(blk[0]), len(blk)
            a, b = i, i + 1
            if e % 2 == 0:
                m = e // 2
                # (a b)^m = (b a)^m
                rels.append(power((a, b), m) + power((b, a), -m))
            else:
                # one relation suffices on two strands since a_{i+1} a_i is fixed
                img = braid_automorphism(BraidWord(d, blk))[a - 1]
                rels.append(free_reduce((-a,) + img))
        return rels
    return _generic_relators(core)


def _generic_relators(beta: BraidWord) -> list[Word]:
    imgs = braid_automorphism(beta)
    return [free_reduce((-j,) + imgs[j - 1]) for j in range(1, beta.d)]


@dataclass(frozen=True)
class Presentation:
    gens: tuple[str, ...]
    rels: tuple[Word, ...]

    def __post_init__(self):
        gens = tuple(self.gens)
        if len(set(gens)) != len(gens):
            raise BraidError("generator names must be unique")
        rels = []
        seen = set()
        for r in self.rels:
            if any(g == 0 or abs(g) > len(gens) for g in r):
                raise BraidError(f"relator {r} uses an unknown generator")
            c = canonical_relator(r)
            if c and c not in seen:
                seen.add(c)
                rels.append(c)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "rels", tuple(sorted(rels, key=lambda w: (len(w), _word_key(w)))))

    @property
    def rank(self) -> int:
        return len(self.gens)

    def relator_set(self) -> frozenset[Word]:
        return frozenset(self.rels)

    def total_length(self) -> int:
        return sum(len(r) for r in self.rels)

    def word_str(self, w: Sequence[int]) -> str:
        return format_word(w, self.gens)

    def renamed(self, names: Sequence[str]) -> "Presentation":
        return Presentation(tuple(names), self.rels)

    def permuted(self, order: Sequence[int]) -> "Presentation":
        """New generator i is old generator order[i] (0-based)."""
        inv = {old + 1: new + 1 for new, old in enumerate(order)}
        rels = [tuple(inv[abs(g)] * (1 if g > 0 else -1) for g in r) for r in self.rels]
        return Presentation(tuple(self.gens[o] for o in order), tuple(rels))

    def to_json(self) -> dict:
        return {"gens": list(self.gens), "rels": [list(r) for r in self.rels]}

    @classmethod
    def from_json(cls, data: dict) -> "Presentation":
        return cls(tuple(data["gens"]), tuple(tuple(r) for r in data["rels"]))

    def __str__(self) -> str:
        body = ", ".join(self.word_str(r) for r in self.rels)
        return f"< {' '.join(self.gens)} | {body} >"


def format_word(w: Sequence[int], gens: Sequence[str]) -> str:
    if not w:
        return "1"
    out = []
    for g in w:
        name = gens[abs(g) - 1]
        out.append(name if g > 0 else f"{name}^-1")
    return " ".join(out)


def parse_word(text: str, gens: Sequence[str]) -> Word:
    """Parse 'a b^-1 c' (space separated) into a signed index word."""
    lookup = {g: i + 1 for i, g in enumerate(gens)}
    out = []
    for tok in text.split():
        if tok == "1":
            continue
        inv = tok.endswith("^-1")
        name = tok[:-3] if inv else tok
        if name not in lookup:
            raise BraidError(f"unknown generator {name!r}")
        out.append(-lookup[name] if inv else lookup[name])
    return free_reduce(out)


def zvk_relators(beta: BraidWord) -> list[Word]:
    """Relators of a_j = a_j^beta, read through beta = g * core * g^-1.

    With A_j = a_j^{g^-1} the relations a_j = a_j^beta say that the core relators
    hold in the A's; the conjugating braid only changes the basis.
    """
    g, core = split_conjugate(beta)
    local = core_relators(core)
    if not g.letters:
        return local
    basis = braid_automorphism(g.inverse())
    return [substitute(r, basis) for r in local]


def zvk_presentation(
    monodromy: Sequence[BraidWord], d: int, names: Sequence[str] | None = None
) -> Presentation:
    for b in monodromy:
        if b.d != d:
            raise BraidError(f"braid on {b.d} strands in a {d}-strand monodromy")
    gens = tuple(names) if names else tuple(f"a{i}" for i in range(1, d + 1))
    rels: list[Word] = []
    for b in monodromy:
        rels.extend(zvk_relators(b))
    return Presentation(gens, tuple(rels))


def literal_zvk_presentation(monodromy: Sequence[BraidWord], d: int) -> Presentation:
    """a_j^-1 a_j^beta for j < d, with no basis change (same normal closure)."""
    rels = []
    for b in monodromy:
        rels.extend(_generic_relators(b))
    return Presentation(tuple(f"a{i}" for i in range(1, d + 1)), tuple(rels))

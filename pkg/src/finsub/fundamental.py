"""Edge-path presentations of the fundamental group, with Tietze moves.

A connected simplicial set yields generators from its nondegenerate
1-cells and relators from a spanning tree plus the nondegenerate 2-cells.
Simplification is best-effort under a move budget: reaching the empty
presentation certifies triviality, while a stalled simplification is
inconclusive (the word problem does not let us conclude nontriviality).
The abelianization is always computed exactly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .homology import HomologyGroup, SparseIntMatrix, smith_normal_form
from .simplicial import SimplicialError, TruncatedSimplicialSet


@dataclass(frozen=True)
class GroupPresentation:
    """Generators ``1..generator_count``; relators are signed index words."""

    generator_count: int
    relators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for word in self.relators:
            for g in word:
                if g == 0 or abs(g) > self.generator_count:
                    raise ValueError(f"relator letter {g} out of range")

    @property
    def is_trivial(self) -> bool:
        return self.generator_count == 0

    @property
    def is_free(self) -> bool:
        return not self.relators

    def total_relator_length(self) -> int:
        return sum(len(w) for w in self.relators)


def fundamental_presentation(S: TruncatedSimplicialSet) -> GroupPresentation:
    """Edge-path presentation of the fundamental group of a simplicial set.

    Generators are the nondegenerate 1-cells; a spanning-tree edge
    contributes a killing relator and every nondegenerate 2-cell s the
    relator d_2(s) d_0(s) (d_1(s))^-1, with degenerate faces read as the
    empty word.
    """
    if S.truncation < 1:
        raise SimplicialError("need at least the 1-skeleton for pi_1")
    n_vertices = S.counts[0]
    edges = np.nonzero(S.nondegenerate(1))[0]
    gen_of_edge = {int(e): i + 1 for i, e in enumerate(edges)}
    # edge e runs from d_1(e) to d_0(e)
    adjacency: dict[int, list[tuple[int, int]]] = {v: [] for v in range(n_vertices)}
    for e in edges:
        start = int(S.faces[1][e, 1])
        end = int(S.faces[1][e, 0])
        adjacency[start].append((end, int(e)))
        adjacency[end].append((start, int(e)))

    seen = {0}
    tree_edges: set[int] = set()
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w, e in adjacency[v]:
            if w not in seen:
                seen.add(w)
                tree_edges.add(e)
                queue.append(w)
    if len(seen) != n_vertices:
        raise SimplicialError("simplicial set is not connected")

    relators: list[tuple[int, ...]] = [(gen_of_edge[e],) for e in sorted(tree_edges)]
    if S.truncation >= 2:
        nondeg1 = S.nondegenerate(1)
        for t in np.nonzero(S.nondegenerate(2))[0]:
            word = []
            for face_index, sign in ((2, 1), (0, 1), (1, -1)):
                e = int(S.faces[2][t, face_index])
                if nondeg1[e]:
                    word.append(sign * gen_of_edge[e])
            relators.append(_free_reduce(tuple(word)))
    relators = [w for w in relators if w]
    return GroupPresentation(len(edges), tuple(relators))


def _free_reduce(word: tuple[int, ...]) -> tuple[int, ...]:
    out: list[int] = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def _cyclic_reduce(word: tuple[int, ...]) -> tuple[int, ...]:
    word = _free_reduce(word)
    while len(word) >= 2 and word[0] == -word[-1]:
        word = _free_reduce(word[1:-1])
    return word


def _invert(word: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-g for g in reversed(word))


def _canonical(word: tuple[int, ...]) -> tuple[int, ...]:
    """Least rotation among the word and its inverse; for deduplication."""
    candidates = []
    for w in (word, _invert(word)):
        candidates.extend(w[i:] + w[:i] for i in range(len(w)))
    return min(candidates) if candidates else ()


def _substitute(word: tuple[int, ...], gen: int,
                replacement: tuple[int, ...]) -> tuple[int, ...]:
    out: list[int] = []
    inverse = _invert(replacement)
    for g in word:
        if g == gen:
            out.extend(replacement)
        elif g == -gen:
            out.extend(inverse)
        else:
            out.append(g)
    return _free_reduce(tuple(out))


def _renumber(generator_count: int, relators: list[tuple[int, ...]],
              removed: set[int]) -> GroupPresentation:
    remap = {}
    nxt = 1
    for g in range(1, generator_count + 1):
        if g not in removed:
            remap[g] = nxt
            nxt += 1
    new_relators = []
    for w in relators:
        new_relators.append(tuple((1 if g > 0 else -1) * remap[abs(g)] for g in w))
    return GroupPresentation(nxt - 1, tuple(new_relators))


def _occurrences(relators: list[tuple[int, ...]], generator_count: int):
    occ = [0] * (generator_count + 1)
    where = [(-1, -1)] * (generator_count + 1)
    for i, w in enumerate(relators):
        for j, g in enumerate(w):
            occ[abs(g)] += 1
            where[abs(g)] = (i, j)
    return occ, where


def _shorten_with(short: tuple[int, ...], long_word: tuple[int, ...]):
    """Replace a long cyclic chunk of ``short`` inside ``long_word``."""
    n = len(short)
    if n < 2 or len(long_word) < n:
        return None
    variants = []
    for base in (short, _invert(short)):
        variants.extend(base[i:] + base[:i] for i in range(n))
    need = n // 2 + 1
    for v in variants:
        chunk = v[:need] if need < n else v
        # replacing chunk u (prefix of relator v = u*t) with t^-1 shortens
        for start in range(len(long_word) - len(chunk) + 1):
            if tuple(long_word[start:start + len(chunk)]) == chunk:
                tail = _invert(v[len(chunk):])
                candidate = _free_reduce(
                    long_word[:start] + tail + long_word[start + len(chunk):])
                if len(candidate) < len(long_word):
                    return candidate
    return None


def tietze_simplify(pres: GroupPresentation, budget: int = 20000) -> GroupPresentation:
    """Bounded best-effort simplification by Tietze transformations.

    Applies generator eliminations (length-1 and length-2 relators,
    generators occurring exactly once overall) and relator shortening via
    overlaps, until stable or the move budget runs out.
    """
    gens = pres.generator_count
    relators = [_cyclic_reduce(w) for w in pres.relators]
    moves = 0

    while moves < budget:
        relators = sorted({w for w in (_cyclic_reduce(r) for r in relators) if w},
                          key=lambda w: (len(w), [abs(g) for g in w], w))
        dedup: dict[tuple[int, ...], tuple[int, ...]] = {}
        for w in relators:
            dedup.setdefault(_canonical(w), w)
        relators = list(dedup.values())

        # eliminate a generator pinned by a relator of length 1 or 2
        elim: tuple[int, tuple[int, ...]] | None = None
        for w in relators:
            if len(w) == 1:
                elim = (abs(w[0]), ())
                break
            if len(w) == 2 and abs(w[0]) != abs(w[1]):
                g = w[0]
                rest = (-w[1],) if g > 0 else (w[1],)
                elim = (abs(g), rest)
                break
        if elim is None:
            occ, where = _occurrences(relators, gens)
            for g in range(1, gens + 1):
                if occ[g] == 1:
                    i, j = where[g]
                    w = relators[i]
                    rotated = w[j:] + w[:j]
                    if rotated[0] < 0:
                        rotated = _invert(rotated)
                        rotated = rotated[-1:] + rotated[:-1]
                    # rotated = (g, tail): g = tail^-1
                    elim = (g, _invert(rotated[1:]))
                    relators = relators[:i] + relators[i + 1:]
                    break
        if elim is not None:
            g, repl = elim
            relators = [w for w in (_substitute(w, g, repl) for w in relators) if w]
            moves += 1
            renum = _renumber(gens, relators, {g})
            gens = renum.generator_count
            relators = list(renum.relators)
            continue

        # relator-vs-relator shortening
        improved = False
        for i, short in enumerate(relators):
            for j, target in enumerate(relators):
                if i == j:
                    continue
                if len(target) < len(short):
                    continue
                candidate = _shorten_with(short, target)
                if candidate is not None:
                    relators[j] = candidate
                    improved = True
                    moves += 1
                    break
            if improved:
                break
        if not improved:
            break

    relators = sorted({w for w in (_cyclic_reduce(r) for r in relators) if w})
    return GroupPresentation(gens, tuple(relators))


def abelianization(pres: GroupPresentation) -> HomologyGroup:
    """Abelianized group computed exactly from the exponent-sum matrix."""
    entries = []
    for j, w in enumerate(pres.relators):
        sums: dict[int, int] = {}
        for g in w:
            sums[abs(g)] = sums.get(abs(g), 0) + (1 if g > 0 else -1)
        for g, v in sums.items():
            if v:
                entries.append((g - 1, j, v))
    M = SparseIntMatrix(pres.generator_count, len(pres.relators), entries)
    snf = smith_normal_form(M, transforms=False, verify=False)
    betti = pres.generator_count - snf.rank
    return HomologyGroup(1, betti, snf.torsion)

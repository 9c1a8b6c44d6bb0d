"""Truncated simplicial sets and the operations that build new ones.

Cells at each level are indexed ``0..N_k-1`` and every constructor keeps
the invariant that index order equals lexicographic order on the canonical
cell payloads.  Because of this, the minimum index inside an equivalence
class is also its lexicographically minimal payload, and quotients stay
deterministic without ever materializing payloads.

Face and degeneracy tables are dense integer arrays; all bulk work
(validation, product assembly, relabeling) is vectorized with numpy, while
the union-find closure of quotient relations runs as a plain loop.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Callable, Mapping

import numpy as np

from .spaces import OrderedComplexSpec

DEFAULT_CELL_CAP = 20_000_000


class SimplicialError(ValueError):
    """A simplicial-set invariant was violated."""


class CellCapExceeded(RuntimeError):
    """A construction would enumerate more cells than the configured cap."""


def cell_cap() -> int:
    """Active enumeration cap (override with env var FINSUB_CELL_CAP)."""
    value = os.environ.get("FINSUB_CELL_CAP")
    return int(value) if value else DEFAULT_CELL_CAP


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.int64)
    arr.flags.writeable = False
    return arr


class TruncatedSimplicialSet:
    """Levelwise cells with face and degeneracy operators up to a truncation.

    Attributes
    ----------
    truncation : int
        Maximum level D carried by this object.
    counts : tuple[int]
        Number of cells per level ``0..D``.
    faces : list
        ``faces[k]`` is an ``(N_k, k+1)`` array sending cell ``c`` to
        ``d_0(c)..d_k(c)`` one level down; ``faces[0]`` is None.
    degens : list
        ``degens[k]`` is an ``(N_k, k+1)`` array sending cell ``c`` to
        ``s_0(c)..s_k(c)`` one level up, present for ``k < D``.
    """

    def __init__(self, truncation, counts, faces, degens, payload, name="", check=True):
        self.truncation = int(truncation)
        self.counts = tuple(int(n) for n in counts)
        self.faces = [None] + [_frozen(f) for f in faces[1:]]
        self.degens = [_frozen(s) for s in degens[: self.truncation]] + [None]
        self._payload = payload
        self.name = name
        self._nondeg: list[np.ndarray | None] = [None] * (self.truncation + 1)
        if len(self.counts) != self.truncation + 1:
            raise SimplicialError("counts must cover levels 0..truncation")
        if check:
            self.validate()

    # -- basic queries -------------------------------------------------

    def payload(self, level: int, index: int):
        """Canonical encoding of a cell (tuples of vertex tuples)."""
        return self._payload(level, index)

    def nondegenerate(self, level: int) -> np.ndarray:
        """Boolean mask of nondegenerate cells at a level (cached)."""
        cached = self._nondeg[level]
        if cached is not None:
            return cached
        n = self.counts[level]
        if level == 0:
            mask = np.ones(n, dtype=bool)
        else:
            # c is degenerate iff s_j(d_j(c)) == c for some j (Eilenberg-Zilber).
            mask = np.ones(n, dtype=bool)
            idx = np.arange(n, dtype=np.int64)
            for j in range(level):
                dj = self.faces[level][:, j]
                sj = self.degens[level - 1][dj, j]
                mask &= sj != idx
        mask.flags.writeable = False
        self._nondeg[level] = mask
        return mask

    def nondeg_counts(self) -> tuple[int, ...]:
        return tuple(int(self.nondegenerate(k).sum()) for k in range(self.truncation + 1))

    def total_cells(self) -> int:
        return sum(self.counts)

    def degenerate_tower(self, vertex: int, level: int) -> int:
        """Index of the ``level``-fold degeneracy of a 0-cell."""
        cell = int(vertex)
        for k in range(level):
            cell = int(self.degens[k][cell, 0])
        return cell

    def same_cells(self, other: "TruncatedSimplicialSet") -> bool:
        """True when both objects carry identical cell tables."""
        if self.truncation != other.truncation or self.counts != other.counts:
            return False
        for k in range(1, self.truncation + 1):
            if not np.array_equal(self.faces[k], other.faces[k]):
                return False
        for k in range(self.truncation):
            if not np.array_equal(self.degens[k], other.degens[k]):
                return False
        return True

    # -- validation ----------------------------------------------------

    def validate(self) -> None:
        """Exhaustively check the simplicial identities within truncation."""
        D = self.truncation
        for k in range(1, D + 1):
            f = self.faces[k]
            if f is None or f.shape != (self.counts[k], k + 1):
                raise SimplicialError(f"face table at level {k} has wrong shape")
            if f.size and (f.min() < 0 or f.max() >= self.counts[k - 1]):
                raise SimplicialError(f"face index out of range at level {k}")
        for k in range(D):
            s = self.degens[k]
            if s is None or s.shape != (self.counts[k], k + 1):
                raise SimplicialError(f"degeneracy table at level {k} has wrong shape")
            if s.size and (s.min() < 0 or s.max() >= self.counts[k + 1]):
                raise SimplicialError(f"degeneracy index out of range at level {k}")

        # d_i d_j = d_{j-1} d_i for i < j
        for k in range(2, D + 1):
            f, g = self.faces[k], self.faces[k - 1]
            for j in range(1, k + 1):
                for i in range(j):
                    if not np.array_equal(g[f[:, j], i], g[f[:, i], j - 1]):
                        raise SimplicialError(f"face identity fails at level {k} (i={i}, j={j})")

        # d_i s_j identities, levels k with s into k+1 <= D
        for k in range(D):
            s = self.degens[k]
            f = self.faces[k + 1]
            idx = np.arange(self.counts[k], dtype=np.int64)
            for j in range(k + 1):
                sj = s[:, j]
                for i in range(k + 2):
                    left = f[sj, i]
                    if i == j or i == j + 1:
                        expect = idx
                    elif i < j:
                        expect = self.degens[k - 1][self.faces[k][:, i], j - 1]
                    else:
                        expect = self.degens[k - 1][self.faces[k][:, i - 1], j]
                    if not np.array_equal(left, expect):
                        raise SimplicialError(
                            f"mixed identity fails at level {k} (i={i}, j={j})")

        # s_i s_j = s_{j+1} s_i for i <= j
        for k in range(D - 1):
            s, t = self.degens[k], self.degens[k + 1]
            for j in range(k + 1):
                for i in range(j + 1):
                    if not np.array_equal(t[s[:, j], i], t[s[:, i], j + 1]):
                        raise SimplicialError(
                            f"degeneracy identity fails at level {k} (i={i}, j={j})")

    # -- debug dump ----------------------------------------------------

    def dump(self, file=None, max_cells: int = 200) -> None:
        """Write payloads and face tables as text (debugging aid only)."""
        out = file or sys.stdout
        out.write(f"simplicial set {self.name!r}, truncation {self.truncation}\n")
        for k in range(self.truncation + 1):
            nd = self.nondegenerate(k)
            out.write(f"level {k}: {self.counts[k]} cells, {int(nd.sum())} nondegenerate\n")
            for i in range(min(self.counts[k], max_cells)):
                flag = "" if nd[i] else "  (degenerate)"
                row = "" if k == 0 else f"  d={self.faces[k][i].tolist()}"
                out.write(f"  [{i}] {self.payload(k, i)}{row}{flag}\n")


@dataclass(frozen=True)
class SSetMap:
    """A simplicial map given by per-level cell assignments.

    The source truncation may be lower than the target's; commutation with
    every face and degeneracy operator is checked on construction.
    """

    source: TruncatedSimplicialSet
    target: TruncatedSimplicialSet
    assignment: tuple[np.ndarray, ...]
    name: str = ""

    def __post_init__(self):
        src, dst = self.source, self.target
        if src.truncation > dst.truncation:
            raise SimplicialError("source truncation exceeds target truncation")
        if len(self.assignment) != src.truncation + 1:
            raise SimplicialError("assignment must cover all source levels")
        object.__setattr__(self, "assignment",
                           tuple(_frozen(a) for a in self.assignment))
        for k, a in enumerate(self.assignment):
            if a.shape != (src.counts[k],):
                raise SimplicialError(f"assignment at level {k} has wrong length")
            if a.size and (a.min() < 0 or a.max() >= dst.counts[k]):
                raise SimplicialError(f"assignment out of range at level {k}")
        for k in range(1, src.truncation + 1):
            fa = dst.faces[k][self.assignment[k]]
            for i in range(k + 1):
                if not np.array_equal(fa[:, i], self.assignment[k - 1][src.faces[k][:, i]]):
                    raise SimplicialError(f"map does not commute with d_{i} at level {k}")
        for k in range(src.truncation):
            sa = dst.degens[k][self.assignment[k]]
            for j in range(k + 1):
                if not np.array_equal(sa[:, j], self.assignment[k + 1][src.degens[k][:, j]]):
                    raise SimplicialError(f"map does not commute with s_{j} at level {k}")

    def __call__(self, level: int, index: int) -> int:
        return int(self.assignment[level][index])


def identity_map(S: TruncatedSimplicialSet) -> SSetMap:
    return SSetMap(S, S, tuple(np.arange(n, dtype=np.int64) for n in S.counts),
                   name="id")


def compose_maps(g: SSetMap, f: SSetMap, name: str = "") -> SSetMap:
    """The composite ``g after f``; levels follow the source of ``f``."""
    if f.target is not g.source:
        raise SimplicialError("compose_maps: target of f is not the source of g")
    assignment = tuple(g.assignment[k][f.assignment[k]]
                       for k in range(f.source.truncation + 1))
    return SSetMap(f.source, g.target, assignment, name=name or f"{g.name}*{f.name}")


def apply_map(f: SSetMap, level: int, index: int) -> int:
    return f(level, index)


# ----------------------------------------------------------------------
# generation from an ordered complex
# ----------------------------------------------------------------------

def from_ordered_complex(spec: OrderedComplexSpec, truncation: int) -> TruncatedSimplicialSet:
    """Simplicial set of an ordered complex, truncated at the given level.

    Level-k cells are the monotone (k+1)-tuples of vertices whose distinct
    entries span a simplex; the nondegenerate ones are exactly the ordered
    simplices of the complex.
    """
    if truncation < spec.dimension:
        raise SimplicialError(
            f"truncation {truncation} is below the complex dimension {spec.dimension}")
    simplex_set = spec.simplex_set
    levels: list[list[tuple[int, ...]]] = []
    index: list[dict[tuple[int, ...], int]] = []
    for k in range(truncation + 1):
        cells = [t for t in combinations_with_replacement(range(spec.vertex_count), k + 1)
                 if tuple(sorted(set(t))) in simplex_set]
        levels.append(cells)
        index.append({t: i for i, t in enumerate(cells)})

    counts = [len(c) for c in levels]
    faces: list[np.ndarray | None] = [None]
    for k in range(1, truncation + 1):
        table = np.empty((counts[k], k + 1), dtype=np.int64)
        for c, tup in enumerate(levels[k]):
            for i in range(k + 1):
                table[c, i] = index[k - 1][tup[:i] + tup[i + 1:]]
        faces.append(table)
    degens: list[np.ndarray] = []
    for k in range(truncation):
        table = np.empty((counts[k], k + 1), dtype=np.int64)
        for c, tup in enumerate(levels[k]):
            for j in range(k + 1):
                table[c, j] = index[k + 1][tup[: j + 1] + tup[j:]]
        degens.append(table)

    def payload(level: int, i: int):
        return levels[level][i]

    return TruncatedSimplicialSet(truncation, counts, faces, degens, payload,
                                  name=spec.name)


# ----------------------------------------------------------------------
# products
# ----------------------------------------------------------------------

def _decompose(indices: np.ndarray, base: int, n: int) -> list[np.ndarray]:
    """Split big-endian mixed-radix indices into n components."""
    comps = []
    rest = indices
    for t in range(n - 1, 0, -1):
        comps.append(rest % base)
        rest = rest // base
    comps.append(rest)
    comps.reverse()
    return comps


def power(S: TruncatedSimplicialSet, n: int):
    """n-fold levelwise product of a simplicial set with itself.

    Returns ``(P, projections)`` where the i-th projection maps a product
    cell to its i-th coordinate.  Raises :class:`CellCapExceeded` before
    allocating anything if the enumeration would exceed the cap.
    """
    if n < 1:
        raise SimplicialError("power requires n >= 1")
    D = S.truncation
    total = sum(c ** n for c in S.counts)
    cap = cell_cap()
    if total > cap:
        raise CellCapExceeded(
            f"product would enumerate {total} cells (cap {cap}; "
            "raise FINSUB_CELL_CAP to override)")

    counts = [c ** n for c in S.counts]
    comps_per_level: list[list[np.ndarray]] = []
    for k in range(D + 1):
        comps_per_level.append(_decompose(np.arange(counts[k], dtype=np.int64),
                                          S.counts[k], n))

    def recompose(comp_arrays: list[np.ndarray], base: int) -> np.ndarray:
        out = comp_arrays[0].copy()
        for arr in comp_arrays[1:]:
            out *= base
            out += arr
        return out

    faces: list[np.ndarray | None] = [None]
    for k in range(1, D + 1):
        comps = comps_per_level[k]
        table = np.empty((counts[k], k + 1), dtype=np.int64)
        for i in range(k + 1):
            table[:, i] = recompose([S.faces[k][c, i] for c in comps], S.counts[k - 1])
        faces.append(table)
    degens: list[np.ndarray] = []
    for k in range(D):
        comps = comps_per_level[k]
        table = np.empty((counts[k], k + 1), dtype=np.int64)
        for j in range(k + 1):
            table[:, j] = recompose([S.degens[k][c, j] for c in comps], S.counts[k + 1])
        degens.append(table)

    base_counts = S.counts

    def payload(level: int, index: int):
        comps = []
        rest = index
        for _ in range(n - 1):
            comps.append(rest % base_counts[level])
            rest //= base_counts[level]
        comps.append(rest)
        return tuple(S.payload(level, int(c)) for c in reversed(comps))

    P = TruncatedSimplicialSet(D, counts, faces, degens, payload,
                               name=f"{S.name}^{n}")
    projections = tuple(
        SSetMap(P, S, tuple(comps_per_level[k][t] for k in range(D + 1)),
                name=f"proj{t}")
        for t in range(n))
    return P, projections


# ----------------------------------------------------------------------
# quotients
# ----------------------------------------------------------------------

def _normalize_pairs(S, pairs) -> dict[int, tuple[np.ndarray, np.ndarray]]:
    if isinstance(pairs, Mapping):
        out = {}
        for level, (a, b) in pairs.items():
            a = np.asarray(a, dtype=np.int64)
            b = np.asarray(b, dtype=np.int64)
            if a.shape != b.shape:
                raise SimplicialError("pair arrays must have equal length")
            out[int(level)] = (a, b)
        return out
    by_level: dict[int, tuple[list[int], list[int]]] = {}
    for (ka, a), (kb, b) in pairs:
        if ka != kb:
            raise SimplicialError("identified cells must live at the same level")
        by_level.setdefault(ka, ([], []))[0].append(a)
        by_level[ka][1].append(b)
    return {k: (np.asarray(v[0], dtype=np.int64), np.asarray(v[1], dtype=np.int64))
            for k, v in by_level.items()}


def quotient(S: TruncatedSimplicialSet, pairs, name: str = ""):
    """Quotient by the closure of generating cell identifications.

    ``pairs`` is either an iterable of ``((level, a), (level, b))`` pairs or
    a mapping ``level -> (array_a, array_b)``.  The relation is closed
    under faces and degeneracies with a union-find saturation queue; the
    result's cells are the equivalence classes, represented by their
    lexicographically minimal members.

    Returns ``(Q, projection)``.
    """
    by_level = _normalize_pairs(S, pairs)
    D = S.truncation
    parent: list[list[int]] = [list(range(c)) for c in S.counts]
    size: list[list[int]] = [[1] * c for c in S.counts]

    def find(p: list[int], x: int) -> int:
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    faces = S.faces
    degens = S.degens
    stack: list[tuple[int, int, int]] = []
    for level, (arr_a, arr_b) in sorted(by_level.items(), reverse=True):
        if level > D:
            raise SimplicialError("pair level exceeds truncation")
        stack.extend(zip([level] * len(arr_a), arr_a.tolist(), arr_b.tolist()))

    while stack:
        k, a, b = stack.pop()
        pk = parent[k]
        ra, rb = find(pk, a), find(pk, b)
        if ra == rb:
            continue
        sk = size[k]
        if sk[ra] < sk[rb]:
            ra, rb = rb, ra
        pk[rb] = ra
        sk[ra] += sk[rb]
        if k > 0:
            fk = faces[k]
            fa, fb = fk[a].tolist(), fk[b].tolist()
            pk1 = parent[k - 1]
            for x, y in zip(fa, fb):
                if find(pk1, x) != find(pk1, y):
                    stack.append((k - 1, x, y))
        if k < D:
            dk = degens[k]
            da, db = dk[a].tolist(), dk[b].tolist()
            pk1 = parent[k + 1]
            for x, y in zip(da, db):
                if find(pk1, x) != find(pk1, y):
                    stack.append((k + 1, x, y))

    # canonical class labels: classes ordered by their minimal member
    class_of: list[np.ndarray] = []
    reps: list[np.ndarray] = []
    counts_q: list[int] = []
    for k in range(D + 1):
        pk = parent[k]
        n = S.counts[k]
        roots = np.fromiter((find(pk, i) for i in range(n)), dtype=np.int64, count=n)
        uniq, inverse = np.unique(roots, return_inverse=True)
        mins = np.full(len(uniq), n, dtype=np.int64)
        np.minimum.at(mins, inverse, np.arange(n, dtype=np.int64))
        order = np.argsort(mins, kind="stable")
        rank = np.empty(len(uniq), dtype=np.int64)
        rank[order] = np.arange(len(uniq), dtype=np.int64)
        class_of.append(rank[inverse])
        reps.append(mins[order])
        counts_q.append(len(uniq))

    faces_q: list[np.ndarray | None] = [None]
    for k in range(1, D + 1):
        faces_q.append(class_of[k - 1][S.faces[k][reps[k]]])
    degens_q: list[np.ndarray] = []
    for k in range(D):
        degens_q.append(class_of[k + 1][S.degens[k][reps[k]]])

    reps_frozen = [(_frozen(r)) for r in reps]

    def payload(level: int, index: int):
        return S.payload(level, int(reps_frozen[level][index]))

    Q = TruncatedSimplicialSet(D, counts_q, faces_q, degens_q, payload,
                               name=name or f"{S.name}/~")
    projection = SSetMap(S, Q, tuple(class_of), name="proj")
    return Q, projection


# ----------------------------------------------------------------------
# subobjects and collapses
# ----------------------------------------------------------------------

def sub_object(S: TruncatedSimplicialSet, predicate: Callable[[int, object], bool],
               name: str = ""):
    """Subobject spanned by the cells satisfying ``predicate(level, payload)``.

    The selected set must be closed under faces and degeneracies; a
    violation is reported with the offending cell.  Returns
    ``(A, inclusion)``.
    """
    D = S.truncation
    selected: list[np.ndarray] = []
    masks: list[np.ndarray] = []
    for k in range(D + 1):
        mask = np.fromiter((predicate(k, S.payload(k, i)) for i in range(S.counts[k])),
                           dtype=bool, count=S.counts[k])
        masks.append(mask)
        selected.append(np.nonzero(mask)[0].astype(np.int64))
    for k in range(1, D + 1):
        mask_faces = masks[k - 1][S.faces[k][selected[k]]]
        if not mask_faces.all():
            c = selected[k][np.nonzero(~mask_faces.all(axis=1))[0][0]]
            raise SimplicialError(
                f"selection is not closed under faces: cell {S.payload(k, int(c))} "
                f"at level {k} has an unselected face")
    for k in range(D):
        mask_deg = masks[k + 1][S.degens[k][selected[k]]]
        if not mask_deg.all():
            c = selected[k][np.nonzero(~mask_deg.all(axis=1))[0][0]]
            raise SimplicialError(
                f"selection is not closed under degeneracies: cell "
                f"{S.payload(k, int(c))} at level {k}")

    sub_index: list[np.ndarray] = []
    for k in range(D + 1):
        back = np.full(S.counts[k], -1, dtype=np.int64)
        back[selected[k]] = np.arange(len(selected[k]), dtype=np.int64)
        sub_index.append(back)

    counts_a = [len(s) for s in selected]
    faces_a: list[np.ndarray | None] = [None]
    for k in range(1, D + 1):
        faces_a.append(sub_index[k - 1][S.faces[k][selected[k]]])
    degens_a: list[np.ndarray] = []
    for k in range(D):
        degens_a.append(sub_index[k + 1][S.degens[k][selected[k]]])

    sel_frozen = [_frozen(s) for s in selected]

    def payload(level: int, index: int):
        return S.payload(level, int(sel_frozen[level][index]))

    A = TruncatedSimplicialSet(D, counts_a, faces_a, degens_a, payload,
                               name=name or f"{S.name}|sub")
    inclusion = SSetMap(A, S, tuple(sel_frozen), name="incl")
    return A, inclusion


def collapse(S: TruncatedSimplicialSet, inclusion: SSetMap, name: str = ""):
    """Collapse a subobject to a point; returns ``(Q, projection)``.

    ``inclusion`` must be the inclusion of a subobject of ``S`` (as
    produced by :func:`sub_object`) containing at least one vertex.
    """
    if inclusion.target is not S:
        raise SimplicialError("collapse: inclusion does not land in S")
    if inclusion.source.counts[0] == 0:
        raise SimplicialError("collapse: subobject is empty")
    pairs = {}
    for k in range(inclusion.source.truncation + 1):
        sel = inclusion.assignment[k]
        if len(sel) > 1:
            pairs[k] = (sel[:-1], sel[1:])
    return quotient(S, pairs, name=name or f"{S.name}/A")

"""Brute-force census of rooted maps on oriented surfaces via permutation pairs.

A map on 2n darts is a pair of permutations: sigma rotates darts around
vertices and alpha pairs each dart with its other half-edge (a fixed-point
free involution).  The pair must act transitively, and a root dart breaks
all symmetry, so isomorphism is conjugation by a root-preserving bijection.
Fixing alpha and the root in a standard position and scanning sigma loses
no classes; a canonical relabeling code removes the residual overcount.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Iterator, Sequence

Perm = tuple[int, ...]


class Variant(Enum):
    ALL_GENERA = "all"
    PLANAR_ONLY = "planar"
    TRIVALENT = "trivalent"


DEFAULT_EDGE_CAPS = {
    Variant.ALL_GENERA: 5,
    Variant.PLANAR_ONLY: 5,
    Variant.TRIVALENT: 6,
}


def invert(p: Sequence[int]) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def cycles(p: Sequence[int]) -> list[list[int]]:
    """Cycle decomposition; each cycle starts at its minimum, cycles sorted."""
    seen = [False] * len(p)
    out: list[list[int]] = []
    for start in range(len(p)):
        if not seen[start]:
            cur = []
            d = start
            while not seen[d]:
                seen[d] = True
                cur.append(d)
                d = p[d]
            out.append(cur)
    return out


def cycle_count(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    n = 0
    for start in range(len(p)):
        if not seen[start]:
            n += 1
            d = start
            while not seen[d]:
                seen[d] = True
                d = p[d]
    return n


def cycles_to_text(p: Sequence[int]) -> str:
    return "".join("(" + " ".join(str(d) for d in c) + ")" for c in cycles(p))


def standard_alpha(n_edges: int) -> Perm:
    """The involution (0 1)(2 3)... pairing consecutive darts into edges."""
    out = []
    for e in range(n_edges):
        out += [2 * e + 1, 2 * e]
    return tuple(out)


def _is_transitive(sigma: Sequence[int], alpha: Sequence[int]) -> bool:
    n = len(sigma)
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    reached = 1
    while stack:
        d = stack.pop()
        for e in (sigma[d], alpha[d]):
            if not seen[e]:
                seen[e] = 1
                reached += 1
                stack.append(e)
    return reached == n


@dataclass(frozen=True)
class RootedMap:
    sigma: Perm
    alpha: Perm
    root: int = 0

    @property
    def dart_count(self) -> int:
        return len(self.sigma)

    @property
    def n_edges(self) -> int:
        return len(self.sigma) // 2

    @property
    def n_vertices(self) -> int:
        return cycle_count(self.sigma)

    def validate(self) -> None:
        n = len(self.sigma)
        if n == 0 or n % 2:
            raise ValueError("the dart set must be non-empty and of even size")
        if sorted(self.sigma) != list(range(n)) or sorted(self.alpha) != list(range(n)):
            raise ValueError("sigma and alpha must permute the same dart set")
        for d in range(n):
            if self.alpha[d] == d or self.alpha[self.alpha[d]] != d:
                raise ValueError("alpha must be a fixed-point-free involution")
        if not 0 <= self.root < n:
            raise ValueError("root dart out of range")
        if not _is_transitive(self.sigma, self.alpha):
            raise ValueError("sigma and alpha must act transitively on the darts")

    def to_text(self) -> str:
        return (
            f"sigma={cycles_to_text(self.sigma)} "
            f"alpha={cycles_to_text(self.alpha)} root={self.root}"
        )


def conjugate(m: RootedMap, relabel: Sequence[int]) -> RootedMap:
    """Apply a dart relabeling d -> relabel[d] to both permutations and the root."""
    n = len(m.sigma)
    sigma = [0] * n
    alpha = [0] * n
    for d in range(n):
        sigma[relabel[d]] = relabel[m.sigma[d]]
        alpha[relabel[d]] = relabel[m.alpha[d]]
    return RootedMap(tuple(sigma), tuple(alpha), relabel[m.root])


def faces(m: RootedMap) -> Perm:
    """The face permutation: follow alpha inverse, then sigma inverse."""
    sigma_inv = invert(m.sigma)
    alpha_inv = invert(m.alpha)
    return tuple(sigma_inv[alpha_inv[d]] for d in range(len(m.sigma)))


def genus(m: RootedMap) -> int:
    """Genus from Euler's formula c(sigma) - c(alpha) + c(faces) = 2 - 2g."""
    chi = cycle_count(m.sigma) - cycle_count(m.alpha) + cycle_count(faces(m))
    defect = 2 - chi
    if defect % 2:
        raise ArithmeticError("odd Euler defect: invalid map")
    g = defect // 2
    if g < 0:
        raise ArithmeticError("negative genus: invalid map")
    return g


def canonical_code(m: RootedMap) -> bytes:
    """Relabel darts by first visit from the root and emit the tables.

    The traversal explores the sigma-successor before the alpha-partner, so
    the code depends only on the structure seen from the root: two maps get
    equal codes exactly when a root-preserving conjugation links them.
    """
    sigma, alpha, root = m.sigma, m.alpha, m.root
    n = len(sigma)
    num = [-1] * n
    order = [root]
    num[root] = 0
    i = 0
    while i < len(order):
        d = order[i]
        i += 1
        for e in (sigma[d], alpha[d]):
            if num[e] < 0:
                num[e] = len(order)
                order.append(e)
    if len(order) != n:
        raise ValueError("canonical_code requires a transitive map")
    sigma_rel = [0] * n
    alpha_rel = [0] * n
    for d in range(n):
        sigma_rel[num[d]] = num[sigma[d]]
        alpha_rel[num[d]] = num[alpha[d]]
    return bytes(sigma_rel) + bytes(alpha_rel) + bytes([0])


# ---------------------------------------------------------------------------
# Exhaustive censuses


def _order3_sigmas(dart_count: int) -> Iterator[Perm]:
    # permutations whose cycles all have length 3 (vertex degree 3 everywhere)
    if dart_count % 3:
        return
    perm = [0] * dart_count

    def rec(remaining: list[int]) -> Iterator[Perm]:
        if not remaining:
            yield tuple(perm)
            return
        a = remaining[0]
        rest = remaining[1:]
        for bi, b in enumerate(rest):
            for ci, c in enumerate(rest):
                if bi == ci:
                    continue
                perm[a], perm[b], perm[c] = b, c, a
                yield from rec([d for d in rest if d is not b and d is not c])

    yield from rec(list(range(dart_count)))


def _check_cap(n_edges: int, variant: Variant, cap_override: int | None) -> None:
    cap = DEFAULT_EDGE_CAPS[variant] if cap_override is None else cap_override
    if n_edges > cap:
        raise ValueError(
            f"census at {n_edges} edges exceeds the {variant.value} cap of {cap}; "
            "raise it explicitly to proceed"
        )


def census_maps(
    n_edges: int, variant: Variant = Variant.ALL_GENERA, cap_override: int | None = None
) -> list[RootedMap]:
    """Distinct rooted maps with n edges, in deterministic scan order.

    Scans every vertex permutation against the standard involution and root,
    keeps the transitive (and, per variant, genus-zero or trivalent) ones,
    and deduplicates by canonical code.
    """
    if n_edges < 1:
        raise ValueError("a rooted map needs at least one edge")
    _check_cap(n_edges, variant, cap_override)
    dart_count = 2 * n_edges
    alpha = standard_alpha(n_edges)
    if variant is Variant.TRIVALENT:
        sigma_iter: Iterator[Perm] = _order3_sigmas(dart_count)
    else:
        sigma_iter = permutations(range(dart_count))
    seen: set[bytes] = set()
    reps: list[RootedMap] = []
    for sigma in sigma_iter:
        if not _is_transitive(sigma, alpha):
            continue
        m = RootedMap(sigma, alpha, 0)
        if variant is Variant.PLANAR_ONLY and genus(m) != 0:
            continue
        code = canonical_code(m)
        if code in seen:
            continue
        seen.add(code)
        reps.append(m)
    return reps


@dataclass
class MapCensus:
    """Counts of rooted-map isomorphism classes by (edges, vertices)."""

    variant: Variant
    n_edges: int
    entries: dict[tuple[int, int], int]

    def count(self, n: int, k: int) -> int:
        return self.entries.get((n, k), 0)

    def total(self) -> int:
        return sum(self.entries.values())

    def to_csv(self) -> str:
        lines = ["edges,vertices,count"]
        for (n, k), c in sorted(self.entries.items()):
            lines.append(f"{n},{k},{c}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        data = {
            "variant": self.variant.value,
            "edges": self.n_edges,
            "cells": [[n, k, c] for (n, k), c in sorted(self.entries.items())],
        }
        return json.dumps(data, indent=2) + "\n"


def census(
    n_edges: int, variant: Variant = Variant.ALL_GENERA, cap_override: int | None = None
) -> MapCensus:
    """Tally the deduplicated maps with n edges by vertex count."""
    entries: dict[tuple[int, int], int] = {}
    for m in census_maps(n_edges, variant, cap_override):
        key = (n_edges, m.n_vertices)
        entries[key] = entries.get(key, 0) + 1
    return MapCensus(variant, n_edges, entries)

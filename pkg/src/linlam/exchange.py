"""Isomorphism of linear terms under free exchange of adjacent binders.

Swapping two consecutive lambda abstractions never moves any other node, so
the equivalence acts independently on each maximal run of binders and the
adjacent swaps generate the full symmetric group there.  The canonical
representative therefore sorts every run so the binders occur in
left-to-right depth-first order of the body, outermost binder first; two
terms are isomorphic exactly when their canonical forms coincide.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import factorial

from .enumeration import CountTable, Family, enum_family
from .terms import App, FVar, Lam, Term, Var


def _swap_pair(t: Term, depth: int = 0) -> Term:
    # exchange references to the two binders immediately above this subterm
    if isinstance(t, Var):
        if t.index == depth:
            return Var(depth + 1)
        if t.index == depth + 1:
            return Var(depth)
        return t
    if isinstance(t, FVar):
        return t
    if isinstance(t, App):
        return App(_swap_pair(t.fun, depth), _swap_pair(t.arg, depth))
    return Lam(_swap_pair(t.body, depth + 1))


def local_exchanges(t: Term) -> list[Term]:
    """All terms obtained by one swap of an adjacent binder pair, one per pair."""
    out: list[Term] = []
    if isinstance(t, Lam):
        if isinstance(t.body, Lam):
            out.append(Lam(Lam(_swap_pair(t.body.body))))
        out.extend(Lam(b) for b in local_exchanges(t.body))
    elif isinstance(t, App):
        out.extend(App(f, t.arg) for f in local_exchanges(t.fun))
        out.extend(App(t.fun, a) for a in local_exchanges(t.arg))
    return out


def _occurrences(t: Term, depth: int, block: int, out: list[int]) -> None:
    # depth-first walk, function before argument, collecting block binders
    if isinstance(t, Var):
        b = t.index - depth
        if 0 <= b < block:
            out.append(b)
    elif isinstance(t, App):
        _occurrences(t.fun, depth, block, out)
        _occurrences(t.arg, depth, block, out)
    elif isinstance(t, Lam):
        _occurrences(t.body, depth + 1, block, out)


def _renumber(t: Term, depth: int, block: int, perm: dict[int, int]) -> Term:
    if isinstance(t, Var):
        b = t.index - depth
        if 0 <= b < block:
            return Var(depth + perm[b])
        return t
    if isinstance(t, FVar):
        return t
    if isinstance(t, App):
        return App(
            _renumber(t.fun, depth, block, perm), _renumber(t.arg, depth, block, perm)
        )
    return Lam(_renumber(t.body, depth + 1, block, perm))


def canonicalize(t: Term) -> Term:
    """The designated representative of a linear term's exchange class.

    Works bottom-up; in each maximal binder run the binder occurring first
    in the body's depth-first order becomes the outermost lambda.
    """
    if isinstance(t, (Var, FVar)):
        return t
    if isinstance(t, App):
        return App(canonicalize(t.fun), canonicalize(t.arg))
    block = 0
    body: Term = t
    while isinstance(body, Lam):
        block += 1
        body = body.body
    body = canonicalize(body)
    order: list[int] = []
    _occurrences(body, 0, block, order)
    if len(order) != block:
        raise ValueError("canonicalize requires a linear term")
    perm = {b: block - 1 - rank for rank, b in enumerate(order)}
    body = _renumber(body, 0, block, perm)
    for _ in range(block):
        body = Lam(body)
    return body


def is_isomorphic(t1: Term, t2: Term) -> bool:
    """Whether two linear terms are related by a sequence of local exchanges."""
    return canonicalize(t1) == canonicalize(t2)


# ---------------------------------------------------------------------------
# Class censuses


_CLASS_FAMILIES = (Family.NEUTRAL, Family.NORMAL)


@dataclass
class ClassCounts:
    """Exchange-class censuses with labeled and unlabeled free variables.

    The labeled table counts distinct canonical forms per (size, context)
    cell; relabeling the k context positions acts freely on classes, so the
    unlabeled table is the labeled one divided by k!.
    """

    family: Family
    labeled: CountTable
    unlabeled: CountTable


def count_classes(family: Family, max_n: int) -> ClassCounts:
    """Count exchange classes of a family by canonical-form deduplication."""
    if family not in _CLASS_FAMILIES:
        raise ValueError("class censuses cover the neutral and normal families")
    labeled = CountTable(max_n=max_n, provenance=f"classes:{family.value}")
    unlabeled = CountTable(max_n=max_n, provenance=f"classes:{family.value}:unlabeled")
    for n in range(max_n + 1):
        for k in range(n + 2):
            forms = {canonicalize(t) for t in enum_family(family, n, k)}
            if not forms:
                continue
            labeled.entries[(n, k)] = len(forms)
            q, rem = divmod(len(forms), factorial(k))
            if rem:
                raise ArithmeticError(
                    f"class count at ({n}, {k}) is not divisible by {k}!"
                )
            unlabeled.entries[(n, k)] = q
    return ClassCounts(family, labeled, unlabeled)


def class_groups(family: Family, n: int, k: int = 0) -> list[list[Term]]:
    """Partition one (n, k) cell into exchange classes, representative first.

    Groups appear in order of first member seen during enumeration; inside a
    group the canonical representative leads and the remaining members keep
    enumeration order.
    """
    if family not in _CLASS_FAMILIES:
        raise ValueError("class listings cover the neutral and normal families")
    groups: dict[Term, list[Term]] = {}
    for t in enum_family(family, n, k):
        groups.setdefault(canonicalize(t), []).append(t)
    return [
        [rep] + [t for t in members if t != rep] for rep, members in groups.items()
    ]


def groups_to_text(groups: list[list[Term]], renderer) -> str:
    """Blank-line-separated class groups, one rendered term per line."""
    blocks = ["\n".join(renderer(t) for t in group) for group in groups]
    return "\n\n".join(blocks) + "\n"


def groups_to_json(groups: list[list[Term]], renderer) -> str:
    return json.dumps([[renderer(t) for t in group] for group in groups], indent=2) + "\n"

"""Linear lambda terms in de Bruijn form: parsing, printing, classification.

A term is an immutable tree built from four node kinds.  Bound variables
carry a de Bruijn index (0 refers to the innermost enclosing binder); free
variables carry a position into an ambient ordered context.  Two named terms
are alpha-equivalent exactly when their de Bruijn trees are equal, so
structural equality doubles as the alpha-quotient.

A term-in-context over k free variables uses the positions 0..k-1, and a
term is linear when every binder and every context position is referenced
exactly once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from itertools import count
from typing import Iterator, Sequence


@dataclass(frozen=True, slots=True)
class Var:
    """Bound variable; the index counts enclosing binders, innermost first."""

    index: int


@dataclass(frozen=True, slots=True)
class FVar:
    """Free variable; the index is a position in the ambient context."""

    index: int


@dataclass(frozen=True, slots=True)
class App:
    fun: "Term"
    arg: "Term"


@dataclass(frozen=True, slots=True)
class Lam:
    body: "Term"


Term = Var | FVar | App | Lam


# ---------------------------------------------------------------------------
# Linearity


def _linearity(t: Term) -> tuple[bool, dict[int, int]]:
    """Scan a term once; report binder discipline and free-position usage.

    Returns ``(wellformed_and_binders_linear, free_counts)`` where the flag
    is True iff no bound index escapes its binders and every binder is used
    exactly once, and ``free_counts`` maps context positions to occurrence
    counts.
    """
    use: dict[int, int] = {}
    free: dict[int, int] = {}
    stack: list[int] = []
    ok = True
    fresh = count()

    def walk(node: Term) -> None:
        nonlocal ok
        if isinstance(node, Var):
            if 0 <= node.index < len(stack):
                use[stack[-1 - node.index]] += 1
            else:
                ok = False
        elif isinstance(node, FVar):
            if node.index >= 0:
                free[node.index] = free.get(node.index, 0) + 1
            else:
                ok = False
        elif isinstance(node, App):
            walk(node.fun)
            walk(node.arg)
        else:
            binder = next(fresh)
            use[binder] = 0
            stack.append(binder)
            walk(node.body)
            stack.pop()

    walk(t)
    ok = ok and all(c == 1 for c in use.values())
    return ok, free


def check_linear(t: Term, context_size: int = 0) -> bool:
    """True iff every binder and every context position is used exactly once."""
    ok, free = _linearity(t)
    return (
        ok
        and len(free) == context_size
        and all(free.get(j) == 1 for j in range(context_size))
    )


# ---------------------------------------------------------------------------
# Neutral / normal classification


class Kind(Enum):
    NEUTRAL = "neutral"
    NORMAL_ONLY = "normal-only"
    NOT_NORMAL = "not-normal"


@dataclass(frozen=True, slots=True)
class Classification:
    """Outcome of the neutral/normal analysis of a linear term.

    ``occurrences`` counts variable occurrences (free or bound).  A normal
    term has size equal to its occurrence count; a neutral term has size one
    less.
    """

    kind: Kind
    occurrences: int

    @property
    def is_normal(self) -> bool:
        return self.kind is not Kind.NOT_NORMAL

    @property
    def normal_size(self) -> int:
        if self.kind is Kind.NOT_NORMAL:
            raise ValueError("normal_size is undefined for a non-normal term")
        return self.occurrences

    @property
    def neutral_size(self) -> int:
        if self.kind is not Kind.NEUTRAL:
            raise ValueError("neutral_size is undefined for a non-neutral term")
        return self.occurrences - 1


def _classify(t: Term) -> tuple[Kind, int]:
    if isinstance(t, (Var, FVar)):
        return Kind.NEUTRAL, 1
    if isinstance(t, App):
        fun_kind, fun_occ = _classify(t.fun)
        arg_kind, arg_occ = _classify(t.arg)
        occ = fun_occ + arg_occ
        if fun_kind is Kind.NEUTRAL and arg_kind is not Kind.NOT_NORMAL:
            return Kind.NEUTRAL, occ
        return Kind.NOT_NORMAL, occ
    body_kind, body_occ = _classify(t.body)
    if body_kind is Kind.NOT_NORMAL:
        return Kind.NOT_NORMAL, body_occ
    return Kind.NORMAL_ONLY, body_occ


def classify(t: Term) -> Classification:
    """Classify a linear term as neutral, normal-but-not-neutral, or neither.

    A variable is neutral; an application is neutral iff its function part is
    neutral and its argument is normal; an abstraction of a normal body is
    normal.  Anything containing an abstraction applied to an argument is not
    normal.  Raises ValueError on non-linear input.
    """
    ok, free = _linearity(t)
    k = len(free)
    if not ok or any(free.get(j) != 1 for j in range(k)):
        raise ValueError("classify requires a linear term over a contiguous context")
    kind, occ = _classify(t)
    return Classification(kind, occ)


# ---------------------------------------------------------------------------
# Concrete syntax


class ParseError(ValueError):
    """Syntax or scoping error, with the offending character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_']*")

_LAM, _DOT, _LPAR, _RPAR, _NAME, _END = "lam", "dot", "lpar", "rpar", "name", "end"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c == "\\" or c == "λ":
            tokens.append((_LAM, c, i))
            i += 1
        elif c == ".":
            tokens.append((_DOT, c, i))
            i += 1
        elif c == "(":
            tokens.append((_LPAR, c, i))
            i += 1
        elif c == ")":
            tokens.append((_RPAR, c, i))
            i += 1
        else:
            m = _NAME_RE.match(text, i)
            if m is None:
                raise ParseError(f"unexpected character {c!r}", i)
            tokens.append((_NAME, m.group(), i))
            i = m.end()
    tokens.append((_END, "", len(text)))
    return tokens


def parse(text: str, context: Sequence[str] = ()) -> Term:
    """Parse named lambda syntax into a de Bruijn term.

    Binders are written ``\\x.`` or ``λx.`` and extend as far right as
    possible; application is juxtaposition, so ``f x`` and ``f(x)`` mean the
    same thing.  Free names resolve against ``context`` (by position) and
    binders resolve innermost-first.  Rebinding a name whose scope is still
    open is rejected.
    """
    names = list(context)
    if len(set(names)) != len(names):
        raise ValueError("duplicate name in context")
    tokens = _tokenize(text)
    pos = 0

    def peek() -> tuple[str, str, int]:
        return tokens[pos]

    def advance() -> tuple[str, str, int]:
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def expect(kind: str, what: str) -> tuple[str, str, int]:
        tok = advance()
        if tok[0] != kind:
            raise ParseError(f"expected {what}", tok[2])
        return tok

    def parse_lambda(binders: list[str]) -> Term:
        advance()  # the lambda token
        _, name, at = expect(_NAME, "a binder name")
        if name in binders:
            raise ParseError(f"name {name!r} bound twice in overlapping scopes", at)
        expect(_DOT, "'.'")
        binders.append(name)
        body = parse_term(binders)
        binders.pop()
        return Lam(body)

    def parse_atomic(binders: list[str]) -> Term:
        kind, text_, at = peek()
        if kind == _NAME:
            advance()
            if text_ in binders:
                depth = len(binders) - 1 - max(
                    i for i, b in enumerate(binders) if b == text_
                )
                return Var(depth)
            if text_ in names:
                return FVar(names.index(text_))
            raise ParseError(f"unbound name {text_!r}", at)
        if kind == _LPAR:
            advance()
            inner = parse_term(binders)
            expect(_RPAR, "')'")
            return inner
        raise ParseError("expected a term", at)

    def parse_term(binders: list[str]) -> Term:
        if peek()[0] == _LAM:
            return parse_lambda(binders)
        result = parse_atomic(binders)
        while True:
            kind = peek()[0]
            if kind in (_NAME, _LPAR):
                result = App(result, parse_atomic(binders))
            elif kind == _LAM:
                # a lambda in argument position swallows the rest of the scope
                result = App(result, parse_lambda(binders))
                break
            else:
                break
        return result

    term = parse_term([])
    kind, _, at = peek()
    if kind != _END:
        raise ParseError("unexpected trailing input", at)
    return term


_BINDER_LETTERS = "abcdefghijklmnopqrstuvwxyz"
_CONTEXT_LETTERS = ("x", "y", "z", "u", "v", "w", "s", "t")


def default_context(k: int) -> tuple[str, ...]:
    """Conventional names for a context of size k (x, y, z, ... then x9, x10)."""
    if k <= len(_CONTEXT_LETTERS):
        return _CONTEXT_LETTERS[:k]
    extra = tuple(f"x{j}" for j in range(len(_CONTEXT_LETTERS) + 1, k + 1))
    return _CONTEXT_LETTERS + extra


def _binder_names(used: set[str]) -> Iterator[str]:
    for c in _BINDER_LETTERS:
        if c not in used:
            yield c
    for i in count(1):
        for c in _BINDER_LETTERS:
            name = f"{c}{i}"
            if name not in used:
                yield name


def render(t: Term, context: Sequence[str] = ()) -> str:
    """Pretty-print with fresh binder names, e.g. ``λa.λb.b(a)``.

    Arguments are always parenthesized and a lambda in function position is
    wrapped, so the output parses back to the same de Bruijn term.
    """
    names = _binder_names(set(context))

    def rec(node: Term, binders: list[str]) -> str:
        if isinstance(node, Var):
            if not 0 <= node.index < len(binders):
                raise ValueError(f"unbound de Bruijn index {node.index}")
            return binders[-1 - node.index]
        if isinstance(node, FVar):
            if node.index >= len(context):
                raise ValueError(f"context has no position {node.index}")
            return context[node.index]
        if isinstance(node, App):
            fun = rec(node.fun, binders)
            if isinstance(node.fun, Lam):
                fun = f"({fun})"
            return f"{fun}({rec(node.arg, binders)})"
        name = next(names)
        binders.append(name)
        body = rec(node.body, binders)
        binders.pop()
        return f"λ{name}.{body}"

    return rec(t, [])


# ---------------------------------------------------------------------------
# Canonical ASCII form (for golden files and streams)


def to_ascii(t: Term) -> str:
    """Serialize in prefix notation: L <body>, A <fun> <arg>, V<i>, F<j>."""
    out: list[str] = []

    def walk(node: Term) -> None:
        if isinstance(node, Var):
            out.append(f"V{node.index}")
        elif isinstance(node, FVar):
            out.append(f"F{node.index}")
        elif isinstance(node, App):
            out.append("A")
            walk(node.fun)
            walk(node.arg)
        else:
            out.append("L")
            walk(node.body)

    walk(t)
    return " ".join(out)


def from_ascii(text: str) -> Term:
    """Inverse of :func:`to_ascii`."""
    tokens = text.split()
    pos = 0

    def read() -> Term:
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError("truncated term serialization")
        tok = tokens[pos]
        pos += 1
        if tok == "L":
            return Lam(read())
        if tok == "A":
            fun = read()
            return App(fun, read())
        if tok.startswith("V"):
            return Var(int(tok[1:]))
        if tok.startswith("F"):
            return FVar(int(tok[1:]))
        raise ValueError(f"bad token {tok!r} in term serialization")

    term = read()
    if pos != len(tokens):
        raise ValueError("trailing tokens in term serialization")
    return term

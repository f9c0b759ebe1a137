"""Finite groups given by explicit Cayley tables.

Elements are the integers ``0 .. order-1``; the identity is always element 0
for groups produced by the builders in this module.  Every builder validates
its table (Latin square, identity, inverses and, up to order 256,
associativity) before returning.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import InvalidAction, InvalidGroup, NotInSubgroup, OrderLimit, ParseError

MAX_ORDER = 10000
ASSOCIATIVITY_CHECK_LIMIT = 256


class FiniteGroup:
    """A finite group stored as a dense multiplication table.

    ``cayley[x, y]`` is the index of the product ``x*y``.
    """

    # set by the catalog builders
    spec = None
    permutations = None
    degree = None
    factor_orders = None

    def __init__(self, cayley, labels: Sequence[str] | None = None, name: str = "",
                 check: bool = True):
        table = np.array(cayley, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise InvalidGroup("Cayley table must be a non-empty square array")
        n = table.shape[0]
        if n > MAX_ORDER:
            raise OrderLimit(f"group order {n} exceeds the limit {MAX_ORDER}")
        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n:
            raise InvalidGroup(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise InvalidGroup("element labels must be distinct")
        table.flags.writeable = False
        self.cayley = table
        self.labels = tuple(str(lab) for lab in labels)
        self.name = name
        if check:
            self._validate()
        else:
            self._find_identity_and_inverses()

    # -- construction checks -------------------------------------------------

    def _find_identity_and_inverses(self) -> None:
        n = self.order
        ar = np.arange(n)
        ids = [e for e in range(n) if np.array_equal(self.cayley[e], ar)]
        if not ids:
            raise InvalidGroup("no left identity in Cayley table")
        self.identity = ids[0]
        inv = np.argmax(self.cayley == self.identity, axis=1)
        if not np.all(self.cayley[ar, inv] == self.identity):
            raise InvalidGroup("some element has no inverse")
        inv.flags.writeable = False
        self.inverse = inv

    def _validate(self) -> None:
        t = self.cayley
        n = self.order
        ar = np.arange(n)
        if t.min() < 0 or t.max() >= n:
            raise InvalidGroup("Cayley table entries out of range")
        srt = np.sort(t, axis=1)
        if not np.all(srt == ar):
            raise InvalidGroup("Cayley table is not a Latin square (rows)")
        if not np.all(np.sort(t, axis=0) == ar[:, None]):
            raise InvalidGroup("Cayley table is not a Latin square (columns)")
        self._find_identity_and_inverses()
        e = self.identity
        if not (np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar)):
            raise InvalidGroup("identity is not two-sided")
        if not np.all(t[self.inverse, ar] == e):
            raise InvalidGroup("inverses are not two-sided")
        if n <= ASSOCIATIVITY_CHECK_LIMIT:
            for a in range(n):
                # (a*b)*c == a*(b*c) for all b, c
                if not np.array_equal(t[t[a]], t[a][t]):
                    raise InvalidGroup(f"Cayley table is not associative at a={a}")

    # -- basic arithmetic ----------------------------------------------------

    @property
    def order(self) -> int:
        return self.cayley.shape[0]

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        name = f" {self.name}" if self.name else ""
        return f"<FiniteGroup{name} of order {self.order}>"

    def mul(self, x: int, y: int) -> int:
        return int(self.cayley[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverse[x])

    def conjugate(self, s: int, g: int) -> int:
        """Return ``s g s^-1``."""
        return int(self.cayley[self.cayley[s, g], self.inverse[s]])

    def conjugates_of(self, g: int) -> np.ndarray:
        """Array whose entry ``s`` is ``s g s^-1``."""
        return self.cayley[self.cayley[:, g], self.inverse]

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul(y, x)
            k += 1
        return k

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r} in {self!r}") from None

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.cayley, self.cayley.T))

    # -- conjugacy -----------------------------------------------------------

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Conjugacy classes: identity class first, then by (size, least member)."""
        seen = np.zeros(self.order, dtype=bool)
        found = []
        for x in range(self.order):
            if seen[x]:
                continue
            cls = np.unique(self.conjugates_of(x))
            seen[cls] = True
            found.append(tuple(int(c) for c in cls))
        found.sort(key=lambda c: (self.identity not in c, len(c), c[0]))
        return tuple(found)

    @cached_property
    def class_of(self) -> np.ndarray:
        out = np.empty(self.order, dtype=np.int64)
        for k, cls in enumerate(self.classes):
            out[list(cls)] = k
        out.flags.writeable = False
        return out

    @cached_property
    def class_sizes(self) -> np.ndarray:
        sizes = np.array([len(c) for c in self.classes], dtype=np.int64)
        sizes.flags.writeable = False
        return sizes

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @cached_property
    def class_representatives(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.classes)

    def centralizer(self, g: int) -> np.ndarray:
        return np.flatnonzero(self.cayley[:, g] == self.cayley[g, :])

    # -- text format ---------------------------------------------------------

    def to_cayley_text(self) -> str:
        """Plain-text table: the order, then one row of indices per element."""
        lines = [str(self.order)]
        lines.extend(" ".join(str(int(v)) for v in row) for row in self.cayley)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_cayley_text(cls, text: str, name: str = "") -> "FiniteGroup":
        rows = [ln.split() for ln in text.splitlines() if ln.strip()]
        if not rows:
            raise ParseError("empty Cayley table text", 1, 1)
        try:
            n = int(rows[0][0])
        except ValueError:
            raise ParseError("first line must be the group order", 1, 1) from None
        if len(rows) - 1 != n:
            raise ParseError(f"expected {n} table rows, found {len(rows) - 1}", len(rows), 1)
        table = []
        for lineno, row in enumerate(rows[1:], start=2):
            if len(row) != n:
                raise ParseError(f"expected {n} entries", lineno, 1)
            try:
                table.append([int(v) for v in row])
            except ValueError:
                raise ParseError("non-integer table entry", lineno, 1) from None
        return cls(table, name=name)


# ---------------------------------------------------------------------------
# Subgroups


@dataclass(frozen=True, eq=False)
class SubgroupEmbedding:
    parent: FiniteGroup
    members: tuple[int, ...]
    as_group: FiniteGroup = field(repr=False)
    to_parent: tuple[int, ...] = field(repr=False)
    from_parent: dict = field(repr=False)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.from_parent

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[list(self.members)] = True
        m.flags.writeable = False
        return m


def subgroup_from_members(G: FiniteGroup, members: Iterable[int], name: str = "") -> SubgroupEmbedding:
    mem = tuple(sorted(set(int(m) for m in members)))
    mset = set(mem)
    if G.identity not in mset:
        raise InvalidGroup("subgroup must contain the identity")
    for x in mem:
        if G.inv(x) not in mset:
            raise InvalidGroup(f"subset is not closed under inverses ({G.labels[x]})")
        for y in mem:
            if G.mul(x, y) not in mset:
                raise InvalidGroup("subset is not closed under multiplication")
    if G.order % len(mem):
        raise InvalidGroup("subgroup order does not divide the group order")
    # identity first so the embedded group keeps index 0 as identity
    mem = (G.identity,) + tuple(m for m in mem if m != G.identity)
    pos = {m: i for i, m in enumerate(mem)}
    table = [[pos[G.mul(x, y)] for y in mem] for x in mem]
    sub = FiniteGroup(table, [G.labels[m] for m in mem], name=name, check=False)
    members_sorted = tuple(sorted(mem))
    return SubgroupEmbedding(G, members_sorted, sub, mem, pos)


def subgroup(G: FiniteGroup, generators: Iterable[int], name: str = "") -> SubgroupEmbedding:
    """The subgroup generated by ``generators`` (element indices of ``G``)."""
    gens = [int(g) for g in generators]
    for g in gens:
        if not 0 <= g < G.order:
            raise IndexError(f"generator {g} is not an element of {G!r}")
    members = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return subgroup_from_members(G, members, name=name)


def whole_group(G: FiniteGroup) -> SubgroupEmbedding:
    return subgroup_from_members(G, range(G.order), name=G.name)


def x_set(G: FiniteGroup, H: SubgroupEmbedding, g: int) -> frozenset[int]:
    """``{s in G : s g s^-1 in H}`` for an element ``g`` of ``H`` (parent index)."""
    if g not in H:
        raise NotInSubgroup(f"{G.labels[g]} is not in the subgroup")
    conj = G.conjugates_of(g)
    return frozenset(int(s) for s in np.flatnonzero(H.mask[conj]))


def is_normal(G: FiniteGroup, H: SubgroupEmbedding) -> bool:
    return all(bool(np.all(H.mask[G.conjugates_of(h)])) for h in H.members)


def centralizes(G: FiniteGroup, H: SubgroupEmbedding) -> bool:
    """True iff every element of ``G`` commutes with every element of ``H``."""
    cols = list(H.members)
    return bool(np.array_equal(G.cayley[:, cols], G.cayley[cols, :].T))


# ---------------------------------------------------------------------------
# Permutations


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """``p*q`` acting on the left: ``(p*q)(i) = p(q(i))``."""
    return tuple(p[i] for i in q)


def cycle_notation(p: Sequence[int]) -> str:
    n = len(p)
    sep = "," if n >= 10 else ""
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(str(i + 1))
            i = p[i]
        parts.append("(" + sep.join(cyc) + ")")
    return "".join(parts) or "e"


def parse_cycles(text: str, n: int) -> tuple[int, ...]:
    """Parse cycle notation such as ``(12)(34)`` or ``(1,10)`` into a permutation of ``n`` points."""
    text = text.strip()
    perm = list(range(n))
    if text in ("e", "()", ""):
        return tuple(perm)
    if not re.fullmatch(r"(\([0-9,\s]+\))+", text):
        raise ParseError(f"bad cycle notation {text!r}")
    result = tuple(range(n))
    for body in re.findall(r"\(([^)]*)\)", text):
        if "," in body:
            pts = [int(t) for t in body.split(",") if t.strip()]
        else:
            pts = [int(ch) for ch in body if not ch.isspace()]
        if any(not 1 <= x <= n for x in pts) or len(set(pts)) != len(pts):
            raise ParseError(f"bad cycle {body!r} for degree {n}")
        cyc = list(range(n))
        for a, b in zip(pts, pts[1:] + pts[:1]):
            cyc[a - 1] = b - 1
        # cycles written left to right are composed right to left
        result = compose(result, cyc)
    return result


def permutation_group(perms: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    perms = [tuple(p) for p in perms]
    idx = {p: i for i, p in enumerate(perms)}
    if len(idx) != len(perms):
        raise InvalidGroup("duplicate permutations")
    table = []
    for p in perms:
        row = []
        for q in perms:
            r = compose(p, q)
            if r not in idx:
                raise InvalidGroup("permutation set is not closed under composition")
            row.append(idx[r])
        table.append(row)
    G = FiniteGroup(table, [cycle_notation(p) for p in perms], name=name)
    G.permutations = tuple(perms)
    G.degree = len(perms[0])
    return G


def _parity(p: Sequence[int]) -> int:
    seen = [False] * len(p)
    par = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        par ^= (length - 1) & 1
    return par


# ---------------------------------------------------------------------------
# Catalog constructors


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidGroup("cyclic group order must be positive")
    _check_order(n)
    ar = np.arange(n)
    return FiniteGroup((ar[:, None] + ar[None, :]) % n, [str(k) for k in range(n)], name=f"Z{n}")


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidGroup("symmetric group degree must be positive")
    _check_order(math.factorial(n))
    return permutation_group(list(itertools.permutations(range(n))), name=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidGroup("alternating group degree must be positive")
    _check_order(max(1, math.factorial(n) // 2))
    perms = [p for p in itertools.permutations(range(n)) if _parity(p) == 0]
    return permutation_group(perms, name=f"A{n}")


def direct_product(A: FiniteGroup, B: FiniteGroup) -> FiniteGroup:
    _check_order(A.order * B.order)
    na, nb = A.order, B.order
    ia = np.repeat(np.arange(na), nb)
    ib = np.tile(np.arange(nb), na)
    table = A.cayley[ia[:, None], ia[None, :]] * nb + B.cayley[ib[:, None], ib[None, :]]
    labels = [f"({A.labels[a]},{B.labels[b]})" for a in range(na) for b in range(nb)]
    return FiniteGroup(table, labels, name=f"{A.name}x{B.name}")


def semidirect(N: FiniteGroup, K: FiniteGroup, action, name: str = "") -> FiniteGroup:
    """``N ⋊ K`` with ``action[k][h]`` the image of ``h`` under the automorphism for ``k``.

    Element ``(h, k)`` has index ``h*|K| + k`` and
    ``(h1, k1)(h2, k2) = (h1 * action[k1][h2], k1 k2)``.
    """
    _check_order(N.order * K.order)
    act = np.array(action, dtype=np.int64)
    if act.shape != (K.order, N.order):
        raise InvalidAction(f"action table must have shape ({K.order}, {N.order})")
    ar = np.arange(N.order)
    for k in range(K.order):
        a = act[k]
        if not np.array_equal(np.sort(a), ar):
            raise InvalidAction(f"action of {K.labels[k]} is not a bijection")
        if not np.array_equal(a[N.cayley], N.cayley[a[:, None], a[None, :]]):
            raise InvalidAction(f"action of {K.labels[k]} is not a homomorphism of {N.name or 'N'}")
    if not np.array_equal(act[K.identity], ar):
        raise InvalidAction("identity must act trivially")
    for k1 in range(K.order):
        for k2 in range(K.order):
            if not np.array_equal(act[K.mul(k1, k2)], act[k1][act[k2]]):
                raise InvalidAction(
                    f"action is not a homomorphism at ({K.labels[k1]}, {K.labels[k2]})")
    nk = K.order
    h = np.repeat(np.arange(N.order), nk)
    k = np.tile(np.arange(nk), N.order)
    h2_moved = act[k[:, None], h[None, :]]
    table = N.cayley[h[:, None], h2_moved] * nk + K.cayley[k[:, None], k[None, :]]
    labels = [f"({N.labels[a]},{K.labels[b]})" for a in range(N.order) for b in range(nk)]
    G = FiniteGroup(table, labels, name=name or f"{N.name}:{K.name}")
    G.factor_orders = (N.order, nk)
    return G


def semidirect_normal(G: FiniteGroup) -> SubgroupEmbedding:
    """The normal factor ``{(h, e)}`` of a group built by :func:`semidirect`."""
    n, k = _factors(G)
    return subgroup_from_members(G, [h * k for h in range(n)])


def semidirect_complement(G: FiniteGroup) -> SubgroupEmbedding:
    """The acting factor ``{(e, k)}`` of a group built by :func:`semidirect`."""
    _, k = _factors(G)
    return subgroup_from_members(G, range(k))


def _factors(G: FiniteGroup) -> tuple[int, int]:
    if G.factor_orders is None:
        raise InvalidGroup(f"{G!r} was not built as a semidirect product")
    return G.factor_orders


def named_action(kind: str, N: FiniteGroup, K: FiniteGroup) -> np.ndarray:
    """Action tables for the mini-language: ``inv``, ``cyc`` and ``triv``.

    ``inv`` and ``cyc`` require ``K`` cyclic with generator 1 (as built by
    :func:`cyclic`): ``inv`` lets the generator act by inversion, ``cyc`` by
    cycling the non-identity elements of ``N`` in index order.
    """
    ar = np.arange(N.order)
    if kind == "triv":
        return np.tile(ar, (K.order, 1))
    if kind == "inv":
        gen = N.inverse.copy()
    elif kind == "cyc":
        rest = [x for x in range(N.order) if x != N.identity]
        gen = ar.copy()
        for a, b in zip(rest, rest[1:] + rest[:1]):
            gen[a] = b
    else:
        raise ParseError(f"unknown action {kind!r} (expected inv, cyc or triv)")
    if not K.name.startswith("Z"):
        raise InvalidAction(f"action {kind!r} needs a cyclic acting group")
    rows = [ar]
    for _ in range(1, K.order):
        rows.append(gen[rows[-1]])
    return np.array(rows)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order ``2n`` as ``Z_n ⋊ Z_2``; labels like ``r2s``."""
    if n < 1:
        raise InvalidGroup("dihedral parameter must be positive")
    N, K = cyclic(n), cyclic(2)
    G = semidirect(N, K, named_action("inv", N, K), name=f"D{n}")
    labels = []
    for a in range(n):
        for b in range(2):
            lab = ("r" if a == 1 else f"r{a}" if a else "") + ("s" if b else "")
            labels.append(lab or "e")
    D = FiniteGroup(G.cayley, labels, name=f"D{n}", check=False)
    D.factor_orders = G.factor_orders
    return D


def _check_order(n: int) -> None:
    if n > MAX_ORDER:
        raise OrderLimit(f"group order {n} exceeds the limit {MAX_ORDER}")


# ---------------------------------------------------------------------------
# Group specifications and the mini-language


@dataclass(frozen=True)
class Zn:
    n: int

    def __str__(self):
        return f"Z{self.n}"


@dataclass(frozen=True)
class Sn:
    n: int

    def __str__(self):
        return f"S{self.n}"


@dataclass(frozen=True)
class An:
    n: int

    def __str__(self):
        return f"A{self.n}"


@dataclass(frozen=True)
class Dn:
    n: int

    def __str__(self):
        return f"D{self.n}"


@dataclass(frozen=True)
class Prod:
    left: "GroupSpec"
    right: "GroupSpec"

    def __str__(self):
        return f"{_wrap(self.left)}x{_wrap(self.right)}"


@dataclass(frozen=True)
class Semidirect:
    normal: "GroupSpec"
    acting: "GroupSpec"
    action: Union[str, tuple]

    def __str__(self):
        act = self.action if isinstance(self.action, str) else "table"
        return f"semidirect({self.normal},{self.acting},{act})"


GroupSpec = Union[Zn, Sn, An, Dn, Prod, Semidirect]


def _wrap(spec) -> str:
    return f"({spec})" if isinstance(spec, Prod) else str(spec)


def spec_order(spec: GroupSpec) -> int:
    if isinstance(spec, Zn):
        return spec.n
    if isinstance(spec, Sn):
        return math.factorial(spec.n)
    if isinstance(spec, An):
        return max(1, math.factorial(spec.n) // 2)
    if isinstance(spec, Dn):
        return 2 * spec.n
    if isinstance(spec, Prod):
        return spec_order(spec.left) * spec_order(spec.right)
    if isinstance(spec, Semidirect):
        return spec_order(spec.normal) * spec_order(spec.acting)
    raise TypeError(f"not a group spec: {spec!r}")


def build_group(spec: GroupSpec | str) -> FiniteGroup:
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    _check_order(spec_order(spec))
    if isinstance(spec, Zn):
        G = cyclic(spec.n)
    elif isinstance(spec, Sn):
        G = symmetric(spec.n)
    elif isinstance(spec, An):
        G = alternating(spec.n)
    elif isinstance(spec, Dn):
        G = dihedral(spec.n)
    elif isinstance(spec, Prod):
        G = direct_product(build_group(spec.left), build_group(spec.right))
    elif isinstance(spec, Semidirect):
        N, K = build_group(spec.normal), build_group(spec.acting)
        if isinstance(spec.action, str):
            act = named_action(spec.action, N, K)
        else:
            act = spec.action
        G = semidirect(N, K, act)
    else:
        raise TypeError(f"not a group spec: {spec!r}")
    G.name = str(spec)
    G.spec = spec
    return G


_TOKEN = re.compile(r"\s*(?:(semidirect)|([ZSAD])(\d+)|([(),x])|([a-z]+))")


def parse_group_spec(text: str) -> GroupSpec:
    """Parse strings such as ``Z2xZ2``, ``S4``, ``D4`` or ``semidirect(Z3,Z2,inv)``."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r} in group spec", 1, pos + 1)
        if m.group(1):
            tokens.append(("semi", None, m.start(1)))
        elif m.group(2):
            tokens.append(("atom", (m.group(2), int(m.group(3))), m.start(2)))
        elif m.group(4):
            tokens.append((m.group(4), None, m.start(4)))
        else:
            tokens.append(("name", m.group(5), m.start(5)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    i = 0

    def peek():
        return tokens[i][0]

    def take(kind):
        nonlocal i
        tok = tokens[i]
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r} but found {tok[0]!r} in group spec", 1, tok[2] + 1)
        i += 1
        return tok

    def expr():
        left = term()
        while peek() == "x":
            take("x")
            left = Prod(left, term())
        return left

    def term():
        kind = peek()
        if kind == "atom":
            letter, n = take("atom")[1]
            return {"Z": Zn, "S": Sn, "A": An, "D": Dn}[letter](n)
        if kind == "(":
            take("(")
            inner = expr()
            take(")")
            return inner
        if kind == "semi":
            take("semi")
            take("(")
            normal = expr()
            take(",")
            acting = expr()
            take(",")
            action = take("name")[1]
            take(")")
            return Semidirect(normal, acting, action)
        tok = tokens[i]
        raise ParseError(f"unexpected {tok[0]!r} in group spec", 1, tok[2] + 1)

    spec = expr()
    take("end")
    return spec


def parse_element(G: FiniteGroup, text: str) -> int:
    """Resolve an element written in the group's label syntax.

    Permutation groups accept any cycle notation for the same permutation
    (``(123)`` and ``(231)`` agree); ``e`` always names the identity.
    """
    text = text.strip()
    if text == "e":
        return G.identity
    if text in G.labels:
        return G.labels.index(text)
    perms = getattr(G, "permutations", None)
    if perms is not None:
        p = parse_cycles(text, G.degree)
        try:
            return perms.index(p)
        except ValueError:
            raise ParseError(f"{text} is not an element of {G.name}") from None
    compact = text.replace(" ", "")
    if compact in G.labels:
        return G.labels.index(compact)
    raise ParseError(f"{text!r} is not an element label of {G.name or 'the group'}")


def parse_subgroup(G: FiniteGroup, generators: Sequence[str]) -> SubgroupEmbedding:
    """Subgroup from generator labels; ``G`` alone selects the whole group."""
    if len(generators) == 1 and generators[0].strip() == "G":
        return whole_group(G)
    gens = [parse_element(G, g) for g in generators]
    return subgroup(G, gens)

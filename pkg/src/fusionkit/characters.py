"""Class functions and irreducible characters of finite groups.

Character tables come from the class-algebra eigenvector method: the class
multiplication matrices ``M_i`` share a basis of eigenvectors whose entries
are the central characters ``omega(C_k) = |C_k| chi(g_k) / chi(1)``.  A random
real combination of the ``M_i`` separates them generically; any degenerate
eigenspace left over is split with the individual ``M_i``.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import tolerances as tol
from .errors import (GroupMismatch, NotIntegral, NotNonnegative, NumericalFailure,
                     ReciprocityViolation)
from .groups import FiniteGroup, SubgroupEmbedding

MAX_RETRIES = 20


@dataclass(frozen=True, eq=False)
class ClassFunction:
    """A complex function on ``group``, stored as one value per conjugacy class."""

    group: FiniteGroup
    values: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=np.complex128)
        if vals.shape != (self.group.num_classes,):
            raise ValueError(f"expected {self.group.num_classes} class values, got shape {vals.shape}")
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_element_values(cls, group: FiniteGroup, element_values) -> "ClassFunction":
        ev = np.asarray(element_values, dtype=np.complex128)
        vals = ev[list(group.class_representatives)]
        if not np.allclose(ev, vals[group.class_of], atol=tol.EPS_EQ, rtol=0):
            raise ValueError("function is not constant on conjugacy classes")
        return cls(group, vals)

    def __call__(self, g: int) -> complex:
        return complex(self.values[self.group.class_of[g]])

    def on_elements(self) -> np.ndarray:
        return self.values[self.group.class_of]

    @property
    def degree_value(self) -> complex:
        return complex(self.values[self.group.class_of[self.group.identity]])

    def _check(self, other: "ClassFunction") -> None:
        if not isinstance(other, ClassFunction) or other.group is not self.group:
            raise GroupMismatch("class functions live on different groups")

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            return pointwise_product(self, other)
        return ClassFunction(self.group, self.values * other)

    __rmul__ = __mul__

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.group, self.values + other.values)

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.group, self.values - other.values)

    def conj(self) -> "ClassFunction":
        return ClassFunction(self.group, np.conj(self.values))

    def allclose(self, other: "ClassFunction", atol: float | None = None) -> bool:
        self._check(other)
        atol = tol.EPS_EQ if atol is None else atol
        return bool(np.allclose(self.values, other.values, atol=atol, rtol=0))


@dataclass(frozen=True, eq=False)
class Character(ClassFunction):
    degree: int = 0
    irreducible: bool = False

    def __post_init__(self):
        super().__post_init__()
        d = self.degree_value
        if abs(d.imag) > tol.EPS_INT or abs(d.real - round(d.real)) > tol.EPS_INT or round(d.real) < 1:
            raise NotIntegral(f"character degree {d} is not a positive integer")
        object.__setattr__(self, "degree", int(round(d.real)))
        if self.irreducible:
            norm = inner_product(self, self)
            if abs(norm - 1) > tol.EPS_EQ:
                raise ValueError(f"<chi, chi> = {norm} for a character flagged irreducible")

    def normalized(self) -> ClassFunction:
        """``chi / chi(e)``."""
        return ClassFunction(self.group, self.values / self.degree)


def trivial(group: FiniteGroup) -> Character:
    return Character(group, np.ones(group.num_classes), irreducible=True)


def regular_character(group: FiniteGroup) -> Character:
    vals = np.zeros(group.num_classes)
    vals[group.class_of[group.identity]] = group.order
    return Character(group, vals)


def inner_product(f: ClassFunction, h: ClassFunction) -> complex:
    """``(1/|G|) sum_g f(g) conj(h(g))``."""
    f._check(h)
    G = f.group
    return complex(np.sum(G.class_sizes * f.values * np.conj(h.values)) / G.order)


def pointwise_product(a: ClassFunction, b: ClassFunction) -> ClassFunction:
    a._check(b)
    return ClassFunction(a.group, a.values * b.values)


def restrict(f: ClassFunction, H: SubgroupEmbedding) -> ClassFunction:
    """Restrict a class function of ``H.parent`` to ``H.as_group``."""
    if f.group is not H.parent:
        raise GroupMismatch("class function is not defined on the parent group")
    sub = H.as_group
    G = H.parent
    parent_class = G.class_of[list(H.to_parent)]  # indexed by subgroup element
    vals = f.values[parent_class]
    # every member of an H-class lies in the same G-class
    reps = vals[np.array(sub.class_representatives)]
    if not np.allclose(vals, reps[sub.class_of], atol=tol.EPS_EQ, rtol=0):
        raise AssertionError("restriction is not constant on subgroup classes")
    return ClassFunction(sub, reps)


def _extended_by_zero(f: ClassFunction, H: SubgroupEmbedding) -> np.ndarray:
    """Values of ``f`` on every element of the parent, zero off the subgroup."""
    if f.group is not H.as_group:
        raise GroupMismatch("class function is not defined on the subgroup")
    out = np.zeros(H.parent.order, dtype=np.complex128)
    out[list(H.to_parent)] = f.on_elements()
    return out


def induce(f: ClassFunction, H: SubgroupEmbedding) -> ClassFunction:
    """Induce a class function of ``H.as_group`` up to ``H.parent``.

    ``ind f(g) = (1/|H|) sum_{s in G} f°(s g s^-1)`` with ``f°`` extended by zero.
    """
    G = H.parent
    fo = _extended_by_zero(f, H)
    vals = [fo[G.conjugates_of(g)].sum() / H.order for g in G.class_representatives]
    return ClassFunction(G, vals)


def induce_average(f: ClassFunction, H: SubgroupEmbedding) -> ClassFunction:
    """Average of ``f°(s g s^-1)`` over ``s`` under normalized counting measure.

    ``induce(f, H)`` equals ``H.index * induce_average(f, H)``.
    """
    G = H.parent
    fo = _extended_by_zero(f, H)
    vals = [np.mean(fo[G.conjugates_of(g)]) for g in G.class_representatives]
    return ClassFunction(G, vals)


# ---------------------------------------------------------------------------
# Character tables


@dataclass(frozen=True, eq=False)
class CharacterTable:
    group: FiniteGroup
    irreducibles: tuple[Character, ...]

    @property
    def degrees(self) -> list[int]:
        return [chi.degree for chi in self.irreducibles]

    @property
    def matrix(self) -> np.ndarray:
        return np.array([chi.values for chi in self.irreducibles])

    def __len__(self) -> int:
        return len(self.irreducibles)

    def __getitem__(self, i: int) -> Character:
        return self.irreducibles[i]

    def __iter__(self):
        return iter(self.irreducibles)

    def index_of(self, f: ClassFunction) -> int:
        """Row index of the irreducible equal to ``f``."""
        for i, chi in enumerate(self.irreducibles):
            if chi.allclose(f):
                return i
        raise KeyError("class function is not an irreducible character of this table")

    def conjugate_index(self, i: int) -> int:
        return self.index_of(self.irreducibles[i].conj())

    def to_text(self) -> str:
        G = self.group
        head = ["class"] + [G.labels[r] for r in G.class_representatives]
        sizes = ["size"] + [str(int(s)) for s in G.class_sizes]
        rows = [head, sizes]
        for i, chi in enumerate(self.irreducibles):
            rows.append([f"chi{i}"] + [format_complex(v) for v in chi.values])
        widths = [max(len(r[c]) for r in rows) for c in range(len(head))]
        return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in rows) + "\n"


def format_complex(z: complex, digits: int = 6) -> str:
    re_, im = round(z.real, digits) + 0.0, round(z.imag, digits) + 0.0

    def num(x):
        return str(int(round(x))) if abs(x - round(x)) < 10 ** -digits else f"{x:.{digits}g}"

    if abs(im) < 10 ** -digits:
        return num(re_)
    if abs(re_) < 10 ** -digits:
        return f"{num(im)}i"
    sign = "+" if im > 0 else "-"
    return f"{num(re_)}{sign}{num(abs(im))}i"


_TABLE_CACHE: "weakref.WeakKeyDictionary[FiniteGroup, CharacterTable]" = weakref.WeakKeyDictionary()


def class_multiplication_coefficients(G: FiniteGroup) -> np.ndarray:
    """``a[i, j, k] = #{(x, y) in C_i x C_j : x y = z_k}`` for a fixed ``z_k in C_k``."""
    r = G.num_classes
    reps = np.array(G.class_representatives)
    # y = x^-1 z_k for every x in G and every representative z_k
    ys = G.cayley[G.inverse[:, None], reps[None, :]]
    a = np.zeros((r, r, r), dtype=np.int64)
    i_idx = np.broadcast_to(G.class_of[:, None], ys.shape)
    k_idx = np.broadcast_to(np.arange(r)[None, :], ys.shape)
    np.add.at(a, (i_idx, G.class_of[ys], k_idx), 1)
    return a


def _split(space: np.ndarray, M: np.ndarray, sep: float) -> list[np.ndarray]:
    """Split an invariant subspace (columns of ``space``) into eigenspaces of ``M``."""
    if space.shape[1] == 1:
        return [space]
    B = np.linalg.lstsq(space, M @ space, rcond=None)[0]
    w, V = np.linalg.eig(B)
    order = np.argsort(w.real + 1e-3 * w.imag)
    w, V = w[order], V[:, order]
    groups: list[list[int]] = []
    for idx in range(len(w)):
        for grp in groups:
            if abs(w[grp[0]] - w[idx]) < sep:
                grp.append(idx)
                break
        else:
            groups.append([idx])
    out = []
    for grp in groups:
        sub = space @ V[:, grp]
        q, _ = np.linalg.qr(sub)
        out.append(q)
    return out


def _attempt(G: FiniteGroup, coeffs: np.ndarray, rng: np.random.Generator) -> list[np.ndarray] | None:
    r = G.num_classes
    mats = [coeffs[i].astype(np.float64) for i in range(r)]
    scale = max(1.0, max(np.abs(m).max() for m in mats))
    sep = 1e-7 * scale
    combo = sum(c * m for c, m in zip(rng.standard_normal(r), mats))
    spaces = _split(np.eye(r, dtype=np.complex128), combo, sep)
    for i in rng.permutation(r):
        if all(s.shape[1] == 1 for s in spaces):
            break
        spaces = [piece for s in spaces for piece in _split(s, mats[i], sep)]
    if len(spaces) != r or any(s.shape[1] != 1 for s in spaces):
        return None
    return [s[:, 0] for s in spaces]


def _snap(vals: np.ndarray, eps: float = 1e-10) -> np.ndarray:
    """Move real and imaginary parts within ``eps`` of a half-integer onto it."""
    def snap(x):
        h = np.round(2 * x) / 2
        return np.where(np.abs(x - h) < eps, h, x) + 0.0
    return snap(vals.real) + 1j * snap(vals.imag)


def _row_key(chi: Character):
    vals = tuple((round(v.real, 6) + 0.0, round(v.imag, 6) + 0.0) for v in chi.values)
    return (not np.allclose(chi.values, 1, atol=tol.EPS_EQ), chi.degree, vals)


def character_table(G: FiniteGroup, seed: int = 0) -> CharacterTable:
    """Irreducible characters of ``G``: trivial first, then by degree, then by values.

    Tables are cached per group object.
    """
    cached = _TABLE_CACHE.get(G)
    if cached is not None:
        return cached
    coeffs = class_multiplication_coefficients(G)
    sizes = G.class_sizes.astype(np.float64)
    rng = np.random.default_rng(seed)
    e_cls = int(G.class_of[G.identity])
    for _ in range(MAX_RETRIES):
        vecs = _attempt(G, coeffs, rng)
        if vecs is None:
            continue
        chars = []
        ok = True
        for v in vecs:
            if abs(v[e_cls]) < 1e-12:
                ok = False
                break
            omega = v / v[e_cls]
            d2 = G.order / np.sum(np.abs(omega) ** 2 / sizes)
            d = np.sqrt(d2)
            if abs(d - round(d)) > tol.EPS_INT:
                ok = False
                break
            vals = _snap(round(d) * omega / sizes)
            try:
                chars.append(Character(G, vals, irreducible=True))
            except (NotIntegral, ValueError):
                ok = False
                break
        if not ok:
            continue
        chars.sort(key=_row_key)
        table = CharacterTable(G, tuple(chars))
        if _table_ok(table):
            _TABLE_CACHE[G] = table
            return table
    raise NumericalFailure(f"could not separate the characters of {G!r} in {MAX_RETRIES} attempts")


def _table_ok(table: CharacterTable) -> bool:
    G = table.group
    X = table.matrix
    gram = (X * G.class_sizes) @ X.conj().T / G.order
    if not np.allclose(gram, np.eye(len(X)), atol=tol.EPS_EQ, rtol=0):
        return False
    return sum(d * d for d in table.degrees) == G.order


# ---------------------------------------------------------------------------
# Decomposition and reciprocity


def multiplicities_raw(f: ClassFunction, table: CharacterTable) -> np.ndarray:
    if f.group is not table.group:
        raise GroupMismatch("class function and character table are on different groups")
    return np.array([inner_product(f, chi) for chi in table.irreducibles])


def decompose(f: ClassFunction, table: CharacterTable) -> np.ndarray:
    """Integer multiplicities ``<f, chi_i>`` of every irreducible in ``f``.

    This is the only place where floating-point character values become
    integers.
    """
    raw = multiplicities_raw(f, table)
    rounded = np.rint(raw.real)
    bad = np.flatnonzero((np.abs(raw - rounded) > tol.EPS_INT))
    if bad.size:
        i = int(bad[0])
        raise NotIntegral(f"multiplicity of chi{i} is {raw[i]:.10g}, not an integer")
    if np.any(rounded < 0):
        i = int(np.flatnonzero(rounded < 0)[0])
        raise NotNonnegative(f"multiplicity of chi{i} is {int(rounded[i])} < 0 (virtual character)")
    m = rounded.astype(np.int64)
    recon = m @ table.matrix
    if not np.allclose(recon, f.values, atol=tol.EPS_EQ * max(1, len(m)), rtol=0):
        raise NotIntegral("class function is not in the span of the irreducible characters")
    return m


def frobenius_multiplicity(tau: ClassFunction, pi: ClassFunction, H: SubgroupEmbedding) -> int:
    """``[ind tau : pi] = [tau : res pi]``, computed both ways and cross-checked."""
    via_induce = inner_product(induce(tau, H), pi)
    via_restrict = inner_product(tau, restrict(pi, H))
    for val in (via_induce, via_restrict):
        if abs(val - round(val.real)) > tol.EPS_INT:
            raise ReciprocityViolation(f"non-integral multiplicity {val}")
    a, b = int(round(via_induce.real)), int(round(via_restrict.real))
    if a != b:
        raise ReciprocityViolation(f"[ind tau : pi] = {a} but [tau : res pi] = {b}")
    return a


def reciprocity_residuals(tau: ClassFunction, pi: ClassFunction, H: SubgroupEmbedding) -> tuple[float, float]:
    """Distance of both multiplicity computations from their common integer."""
    via_induce = inner_product(induce(tau, H), pi)
    via_restrict = inner_product(tau, restrict(pi, H))
    m = round(via_restrict.real)
    return abs(via_induce - m), abs(via_restrict - m)


def as_character(f: ClassFunction, table: CharacterTable | None = None) -> Character:
    """Promote a class function to a :class:`Character` after checking it decomposes."""
    table = table or character_table(f.group)
    m = decompose(f, table)
    irreducible = int(m.sum()) == 1
    return Character(f.group, f.values, irreducible=irreducible)


def character_from_multiplicities(table: CharacterTable, mult: Sequence[int]) -> Character:
    vals = np.asarray(mult) @ table.matrix
    return Character(table.group, vals, irreducible=int(np.sum(mult)) == 1)

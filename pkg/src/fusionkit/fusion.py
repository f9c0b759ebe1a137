"""Finite fusion rule algebras and discrete hypergroups.

A :class:`FusionAlgebra` is a finite basis ``X_0 .. X_{n-1}`` (``X_0`` the
unit) with an involution and nonnegative integer structure constants
``a[i, j, k]`` defined by ``X_i X_j = sum_k a[i, j, k] X_k``.  Normalizing by
the dimension function turns it into a :class:`Hypergroup`.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import tolerances as tol
from .errors import (AxiomViolation, HaarViolation, NoPositiveSolution,
                     NonIntegralDimensions, ParseError)


class Tag(enum.Enum):
    CIRCLE = "circle"
    BULLET = "bullet"
    ABSTRACT = "abstract"


@dataclass(frozen=True)
class BasisLabel:
    tag: Tag
    origin: int | str

    @property
    def name(self) -> str:
        if self.tag is Tag.CIRCLE:
            return f"γ{self.origin}"
        if self.tag is Tag.BULLET:
            return f"ρ{self.origin}"
        return str(self.origin)

    def __str__(self) -> str:
        return self.name


def circle(i: int) -> BasisLabel:
    return BasisLabel(Tag.CIRCLE, i)


def bullet(i: int) -> BasisLabel:
    return BasisLabel(Tag.BULLET, i)


def abstract(name: str) -> BasisLabel:
    return BasisLabel(Tag.ABSTRACT, name)


class FusionAlgebra:
    """Based algebra with integer structure constants; the unit is basis element 0."""

    unit = 0

    def __init__(self, basis: Sequence[BasisLabel], involution: Sequence[int], structure):
        a = np.array(structure, dtype=np.int64)
        n = len(basis)
        if a.shape != (n, n, n):
            raise ValueError(f"structure tensor must have shape ({n}, {n}, {n}), got {a.shape}")
        if len(involution) != n:
            raise ValueError("involution must list one image per basis element")
        if len(set(basis)) != n:
            raise ValueError("basis labels must be distinct")
        a.flags.writeable = False
        self.basis = tuple(basis)
        self.involution = tuple(int(i) for i in involution)
        self.structure = a

    @classmethod
    def from_products(cls, basis: Sequence[BasisLabel], products: Mapping[tuple[int, int], Mapping[int, int]],
                      involution: Sequence[int]) -> "FusionAlgebra":
        n = len(basis)
        a = np.zeros((n, n, n), dtype=np.int64)
        for (i, j), row in products.items():
            for k, c in row.items():
                a[i, j, k] = c
        return cls(basis, involution, a)

    def __len__(self) -> int:
        return len(self.basis)

    def __repr__(self) -> str:
        return f"<FusionAlgebra {' '.join(self.names)}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FusionAlgebra):
            return NotImplemented
        return (self.basis == other.basis and self.involution == other.involution
                and np.array_equal(self.structure, other.structure))

    __hash__ = None

    @property
    def names(self) -> list[str]:
        return [b.name for b in self.basis]

    def index(self, name: str | BasisLabel) -> int:
        if isinstance(name, BasisLabel):
            return self.basis.index(name)
        return self.names.index(name)

    def product(self, i: int, j: int) -> dict[int, int]:
        """Sparse row ``{k: a[i, j, k]}`` of nonzero coefficients."""
        row = self.structure[i, j]
        return {int(k): int(row[k]) for k in np.flatnonzero(row)}

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Product of two elements given as coefficient vectors."""
        return np.einsum("i,j,ijk->k", x, y, self.structure)

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.structure, self.structure.transpose(1, 0, 2)))

    def left_matrix(self, i: int) -> np.ndarray:
        """``N_i[j, k] = a[i, j, k]``."""
        return self.structure[i]

    def equations(self) -> list[str]:
        """Structure equations such as ``γ2 γ2 = γ0 + γ1 + γ2``.

        Products involving the unit are omitted; for commutative algebras
        only ``i <= j`` is listed.
        """
        n = len(self)
        comm = self.is_commutative()
        out = []
        for i in range(1, n):
            for j in range(1, n):
                if comm and j < i:
                    continue
                out.append(f"{self.basis[i].name} {self.basis[j].name} = {self.format_vector(self.structure[i, j])}")
        return out

    def format_vector(self, coeffs: Sequence) -> str:
        terms = []
        for k, c in enumerate(coeffs):
            if c == 0:
                continue
            c_str = "" if c == 1 else (str(int(c)) if float(c).is_integer() else f"{c:.6g}")
            terms.append(f"{c_str}{self.basis[k].name}")
        return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# Axiom checks


@dataclass
class AxiomResult:
    name: str
    passed: bool
    witness: tuple | None = None
    detail: str = ""

    def __str__(self) -> str:
        if self.passed:
            return f"{self.name}: ok"
        where = ""
        if self.witness is not None:
            where = " at (" + ",".join(str(int(w)) for w in self.witness) + ")"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{self.name} violated{where}{extra}"


@dataclass
class AxiomReport:
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def __getitem__(self, name: str) -> AxiomResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def failures(self) -> list[AxiomResult]:
        return [r for r in self.results if not r.passed]

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.results)


def _first(mask: np.ndarray) -> tuple | None:
    idx = np.argwhere(mask)
    return tuple(int(v) for v in idx[0]) if len(idx) else None


def associativity_defect(a: np.ndarray) -> np.ndarray:
    """``(X_i X_j) X_k - X_i (X_j X_k)`` as a tensor indexed ``[i, j, k, l]``."""
    left = np.einsum("ijs,skl->ijkl", a, a)
    right = np.einsum("jkt,itl->ijkl", a, a)
    return left - right


def check_fusion_axioms(F: FusionAlgebra) -> AxiomReport:
    """Evaluate F1 (unit, associativity), F2, F3 and the involution laws.

    Failures are recorded in the report together with the first violating
    index tuple; nothing is raised.
    """
    a = F.structure
    n = len(F)
    eye = np.eye(n, dtype=np.int64)
    rep = AxiomReport()

    w = _first(a[0] != eye)
    if w is None:
        w2 = _first(a[:, 0, :] != eye)
        rep.results.append(AxiomResult("F1 unit", w2 is None,
                                       None if w2 is None else (w2[0], 0, w2[1])))
    else:
        rep.results.append(AxiomResult("F1 unit", False, (0, w[0], w[1])))

    defect = associativity_defect(a)
    w = _first(defect != 0)
    rep.results.append(AxiomResult("F1 associativity", w is None, w))

    w = _first(a < 0)
    rep.results.append(AxiomResult("F2", w is None, w, "" if w is None else "negative coefficient"))

    inv = np.array(F.involution)
    ok_inv = sorted(F.involution) == list(range(n)) and bool(np.all(inv[inv] == np.arange(n))) \
        and F.involution[0] == 0
    f3_witness = None
    if ok_inv:
        expected = np.zeros((n, n), dtype=bool)
        expected[np.arange(n), inv] = True
        unit_col = a[:, :, 0]
        bad = (unit_col != 0) != expected
        f3_witness = _first(bad)
        if f3_witness is None:
            ones = unit_col[np.arange(n), inv]
            k = np.flatnonzero(ones != 1)
            if k.size:
                f3_witness = (int(k[0]), int(inv[k[0]]))
        if f3_witness is not None:
            f3_witness = f3_witness + (0,)
    rep.results.append(AxiomResult("F3", ok_inv and f3_witness is None, f3_witness,
                                   "" if ok_inv else "involution is not an involutive permutation fixing the unit"))

    anti_w = None
    if ok_inv:
        moved = a[inv][:, inv][:, :, inv]  # moved[i, j, k] = a[i*, j*, k*]
        anti_w = _first(a != moved.transpose(1, 0, 2))
    rep.results.append(AxiomResult("involution", ok_inv and anti_w is None, anti_w,
                                   "" if anti_w is None else "a[i,j,k] != a[j*,i*,k*]"))
    return rep


def require_fusion_axioms(F: FusionAlgebra) -> None:
    rep = check_fusion_axioms(F)
    if not rep.ok:
        raise AxiomViolation("; ".join(str(r) for r in rep.failures()))


# ---------------------------------------------------------------------------
# Dimension function, Haar element, normalization


@dataclass(frozen=True, eq=False)
class DimensionFunction:
    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=np.float64)
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    def __getitem__(self, i: int) -> float:
        return float(self.values[i])

    def __len__(self) -> int:
        return len(self.values)

    def is_integral(self, eps: float | None = None) -> bool:
        eps = tol.EPS_INT if eps is None else eps
        return bool(np.all(np.abs(self.values - np.rint(self.values)) <= eps))


def dimension_residual(F: FusionAlgebra, d: np.ndarray) -> float:
    """Largest violation of ``d_i d_j = sum_k a[i, j, k] d_k``."""
    lhs = np.outer(d, d)
    rhs = F.structure.astype(np.float64) @ d
    return float(np.max(np.abs(lhs - rhs) / np.maximum(1.0, lhs)))


def dimension_function(F: FusionAlgebra) -> DimensionFunction:
    """The Perron-Frobenius dimension function.

    ``d`` is the positive common eigenvector of the left-multiplication
    matrices ``N_i``; each ``d_i`` is then the Perron-Frobenius eigenvalue of
    ``N_i``.  It is computed from ``sum_i N_i``, whose top eigenvalue is simple.
    """
    a = F.structure.astype(np.float64)
    S = a.sum(axis=0)
    w, V = np.linalg.eig(S)
    top = int(np.argmax(w.real))
    v = V[:, top]
    if abs(v[0]) < 1e-12:
        raise NoPositiveSolution("Perron-Frobenius vector vanishes at the unit")
    d = (v / v[0]).real
    if np.any(d <= 0) or np.max(np.abs((v / v[0]).imag)) > tol.EPS_EQ:
        raise NoPositiveSolution("no positive dimension function")
    # a few power-iteration steps strip the eigensolver's rounding noise
    for _ in range(3):
        d = (a @ d).sum(axis=1) / d.sum()
        d = d / d[0]
    res =dimension_residual(F, d)
    if res > tol.EPS_EQ:
        raise NoPositiveSolution(f"dimension homomorphism fails (residual {res:.3g}); is the input associative?")
    return DimensionFunction(d)


def haar_element(F: FusionAlgebra, d: DimensionFunction) -> np.ndarray:
    """Coefficients of ``R(F) = sum_k d(X_k) X_k``, checked to satisfy ``X_i R = d(X_i) R``."""
    R = np.array(d.values)
    a = F.structure.astype(np.float64)
    for i in range(len(F)):
        lhs = a[i].T @ R
        if not np.allclose(lhs, d[i] * R, atol=tol.EPS_EQ * max(1.0, d[i]), rtol=0):
            raise HaarViolation(f"{F.basis[i].name} R != d({F.basis[i].name}) R")
    return R


class Hypergroup:
    """Finite discrete hypergroup with real convolution coefficients."""

    unit = 0

    def __init__(self, basis: Sequence[BasisLabel], involution: Sequence[int], coefficients, weights):
        c = np.array(coefficients, dtype=np.float64)
        n = len(basis)
        if c.shape != (n, n, n):
            raise ValueError(f"coefficient tensor must have shape ({n}, {n}, {n})")
        c[(c < 0) & (c >= -tol.EPS_EQ)] = 0.0
        c.flags.writeable = False
        w = np.array(weights, dtype=np.float64)
        w.flags.writeable = False
        self.basis = tuple(basis)
        self.involution = tuple(int(i) for i in involution)
        self.coefficients = c
        self.weights = w

    def __len__(self) -> int:
        return len(self.basis)

    @property
    def names(self) -> list[str]:
        return [b.name for b in self.basis]

    def equations(self) -> list[str]:
        out = []
        n = len(self)
        for i in range(1, n):
            for j in range(i, n):
                terms = [f"{self.coefficients[i, j, k]:.6g}·{self.basis[k].name}~"
                         for k in range(n) if self.coefficients[i, j, k] > 0]
                out.append(f"{self.basis[i].name}~ {self.basis[j].name}~ = " + " + ".join(terms))
        return out


def check_hypergroup_axioms(K: Hypergroup, eps: float | None = None) -> AxiomReport:
    eps = tol.EPS_EQ if eps is None else eps
    c = K.coefficients
    n = len(K)
    eye = np.eye(n)
    rep = AxiomReport()
    unit_ok = np.allclose(c[0], eye, atol=eps) and np.allclose(c[:, 0, :], eye, atol=eps)
    defect = np.einsum("ijs,skl->ijkl", c, c) - np.einsum("jkt,itl->ijkl", c, c)
    w = _first(np.abs(defect) > eps)
    rep.results.append(AxiomResult("H1", unit_ok and w is None, w,
                                   "" if unit_ok else "unit law fails"))
    sums = c.sum(axis=2)
    w = _first((np.abs(sums - 1) > eps) | np.any(c < -eps, axis=2))
    rep.results.append(AxiomResult("H2", w is None, w))
    inv = np.array(K.involution)
    expected = np.zeros((n, n), dtype=bool)
    expected[np.arange(n), inv] = True
    w = _first((c[:, :, 0] > eps) != expected)
    rep.results.append(AxiomResult("H3", w is None, None if w is None else w + (0,)))
    unit_coef = c[np.arange(n), inv, 0]
    ok = bool(np.all(unit_coef > eps)) and np.allclose(K.weights * unit_coef, 1.0, atol=eps * np.max(K.weights))
    rep.results.append(AxiomResult("weights", ok, None, "" if ok else "w(c_i) != 1/coef of c_0 in c_i c_i*"))
    return rep


def normalize_to_hypergroup(F: FusionAlgebra, d: DimensionFunction | None = None) -> Hypergroup:
    """Hypergroup on ``c_i = X_i / d(X_i)``: coefficients ``a[i,j,k] d_k / (d_i d_j)``, weights ``d_i^2``."""
    d = dimension_function(F) if d is None else d
    dv = d.values
    c = F.structure * dv[None, None, :] / (dv[:, None, None] * dv[None, :, None])
    K = Hypergroup(F.basis, F.involution, c, dv ** 2)
    rep = check_hypergroup_axioms(K)
    if not rep.ok:
        raise NoPositiveSolution("normalization is not a hypergroup: " + "; ".join(map(str, rep.failures())))
    return K


def denormalize(K: Hypergroup) -> np.ndarray:
    """Recover ``a[i, j, k] = c[i, j, k] d_i d_j / d_k`` with ``d = sqrt(weights)``."""
    dv = np.sqrt(K.weights)
    return K.coefficients * dv[:, None, None] * dv[None, :, None] / dv[None, None, :]


# ---------------------------------------------------------------------------
# Constructions


def group_algebra(G) -> FusionAlgebra:
    """The fusion algebra whose basis is the group ``G`` itself."""
    n = G.order
    a = np.zeros((n, n, n), dtype=np.int64)
    x, y = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    a[x, y, G.cayley] = 1
    return FusionAlgebra([abstract(lab) for lab in G.labels], list(G.inverse), a)


def join(H: FusionAlgebra, d: DimensionFunction | None = None, name: str = "Y1") -> FusionAlgebra:
    """Adjoin a self-dual ``Y`` with ``X Y = Y X = d(X) Y`` and ``Y Y = sum_k d(X_k) X_k``.

    Requires integral dimensions.
    """
    d = dimension_function(H) if d is None else d
    if not d.is_integral():
        raise NonIntegralDimensions(f"join needs integral dimensions, got {np.round(d.values, 6).tolist()}")
    dv = np.rint(d.values).astype(np.int64)
    n = len(H)
    a = np.zeros((n + 1, n + 1, n + 1), dtype=np.int64)
    a[:n, :n, :n] = H.structure
    a[:n, n, n] = dv
    a[n, :n, n] = dv
    a[n, n, :n] = dv
    F = FusionAlgebra(H.basis + (abstract(name),), H.involution + (n,), a)
    require_fusion_axioms(F)
    return F


def direct_product_with_z2(F: FusionAlgebra) -> FusionAlgebra:
    """``F x Z_2``: basis ``(X_i, 0)`` then ``(X_i, 1)``.

    Copies of circle-tagged labels become bullets; other labels get a prime.
    """
    n = len(F)
    a = np.zeros((2 * n, 2 * n, 2 * n), dtype=np.int64)
    for p in (0, 1):
        for q in (0, 1):
            r = (p + q) % 2
            a[p * n:(p + 1) * n, q * n:(q + 1) * n, r * n:(r + 1) * n] = F.structure
    shifted = []
    for lab in F.basis:
        if lab.tag is Tag.CIRCLE:
            shifted.append(bullet(lab.origin))
        else:
            shifted.append(abstract(f"{lab.name}'"))
    inv = list(F.involution) + [n + i for i in F.involution]
    return FusionAlgebra(F.basis + tuple(shifted), inv, a)


# ---------------------------------------------------------------------------
# Isomorphism


def algebra_isomorphic(F1: FusionAlgebra, F2: FusionAlgebra, respect_tags: bool = True,
                       fixed: Mapping[int, int] | None = None) -> tuple[bool, dict[int, int] | None]:
    """Search for a basis bijection preserving unit, involution and structure constants.

    With ``respect_tags`` the bijection must send all labels of one tag to a
    single tag of ``F2`` (injectively across tags).  ``fixed`` pins some
    images in advance.  Returns ``(True, mapping)`` or ``(False, None)``.
    """
    n = len(F1)
    if len(F2) != n:
        return False, None
    a1, a2 = F1.structure, F2.structure
    d1 = np.round(dimension_function(F1).values, 6)
    d2 = np.round(dimension_function(F2).values, 6)

    def sig(F, a, d, i):
        return (float(d[i]), F.involution[i] == i, tuple(sorted(a[i, i].tolist())),
                tuple(sorted(a[i].sum(axis=0).tolist())))

    s1 = [sig(F1, a1, d1, i) for i in range(n)]
    s2 = [sig(F2, a2, d2, i) for i in range(n)]
    if sorted(s1) != sorted(s2):
        return False, None

    mapping: dict[int, int] = {0: 0}
    if fixed:
        for k, v in fixed.items():
            if mapping.get(k, v) != v:
                return False, None
            mapping[k] = v
    if len(set(mapping.values())) != len(mapping):
        return False, None
    tagmap: dict[Tag, Tag] = {}

    def tag_ok(i, j, tm):
        if not respect_tags:
            return True
        t1, t2 = F1.basis[i].tag, F2.basis[j].tag
        if t1 in tm:
            return tm[t1] is t2
        return t2 not in tm.values()

    for i, j in mapping.items():
        if s1[i] != s2[j] or not tag_ok(i, j, tagmap):
            return False, None
        tagmap.setdefault(F1.basis[i].tag, F2.basis[j].tag)

    def consistent(m):
        keys = list(m)
        src = np.array(keys)
        dst = np.array([m[k] for k in keys])
        if not np.array_equal(a1[np.ix_(src, src, src)], a2[np.ix_(dst, dst, dst)]):
            return False
        for k in keys:
            ik = F1.involution[k]
            if ik in m and m[ik] != F2.involution[m[k]]:
                return False
        return True

    if not consistent(mapping):
        return False, None
    order = [i for i in range(n) if i not in mapping]

    def search(pos, tm):
        if pos == len(order):
            return True
        i = order[pos]
        used = set(mapping.values())
        for j in range(n):
            if j in used or s1[i] != s2[j] or not tag_ok(i, j, tm):
                continue
            mapping[i] = j
            new_tm = dict(tm)
            new_tm.setdefault(F1.basis[i].tag, F2.basis[j].tag)
            if consistent(mapping) and search(pos + 1, new_tm):
                return True
            del mapping[i]
        return False

    if search(0, tagmap) and np.array_equal(
            a1, a2[np.ix_(*(np.array([mapping[i] for i in range(n)]),) * 3)]):
        return True, dict(sorted(mapping.items()))
    return False, None


# ---------------------------------------------------------------------------
# Structure-equation text


_TERM = re.compile(r"^\s*(\d*)\s*(\S+)\s*$")


@dataclass(frozen=True)
class StructureEquation:
    """``lhs[0] lhs[1] = ... = sum rhs``: every product in ``products`` equals ``rhs``."""

    products: tuple[tuple[str, str], ...]
    rhs: tuple[tuple[str, int], ...]
    text: str

    def rhs_dict(self) -> dict[str, int]:
        return dict(self.rhs)


def parse_equation(text: str) -> StructureEquation:
    """Parse ``ρ0 ρ0 = ρ1 ρ1 = γ0 + γ2`` (coefficients written as ``2γ3``)."""
    parts = [p.strip() for p in text.split("=")]
    if len(parts) < 2 or not all(parts):
        raise ParseError(f"not a structure equation: {text!r}")
    products = []
    for p in parts[:-1]:
        factors = p.split()
        if len(factors) != 2:
            raise ParseError(f"left-hand side {p!r} must be a product of two basis names")
        products.append((factors[0], factors[1]))
    rhs: dict[str, int] = {}
    for term in parts[-1].split("+"):
        m = _TERM.match(term)
        if not m:
            raise ParseError(f"bad term {term!r} in {text!r}")
        coef = int(m.group(1)) if m.group(1) else 1
        rhs[m.group(2)] = rhs.get(m.group(2), 0) + coef
    return StructureEquation(tuple(products), tuple(sorted(rhs.items())), text)


def equation_holds(F: FusionAlgebra, eq: StructureEquation, rename: Mapping[str, str] | None = None) -> list[bool]:
    """For each product in ``eq``, whether it holds in ``F`` (names optionally renamed)."""
    rename = rename or {}
    names = F.names

    def idx(nm):
        return names.index(rename.get(nm, nm))

    want = np.zeros(len(F), dtype=np.int64)
    for nm, c in eq.rhs:
        want[idx(nm)] += c
    return [bool(np.array_equal(F.structure[idx(x), idx(y)], want)) for x, y in eq.products]


def products_from_equations(equations: Iterable[str]) -> dict[tuple[str, str], dict[str, int]]:
    """Collect every product stated in a list of equation strings."""
    out = {}
    for text in equations:
        eq = parse_equation(text)
        for p in eq.products:
            out[p] = eq.rhs_dict()
    return out

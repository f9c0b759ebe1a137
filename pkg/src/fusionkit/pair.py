"""Fusion rule algebras built from a finite group and a subgroup.

The basis consists of the irreducible characters of ``G`` (circle tag, ``γi``)
and of ``G0`` (bullet tag, ``ρj``) with the convolution

* ``γ * γ'`` = pointwise product, circle;
* ``γ * ρ`` = ``ρ * γ`` = restriction of ``γ`` times ``ρ``, bullet;
* ``ρ * ρ'`` = induction of ``ρ ρ'`` to ``G``, circle.

The result satisfies the fusion rule axioms exactly when ``(G, G0)`` is
admissible, i.e. every irreducible character of ``G0`` takes equal values on
``g`` and on each ``G``-conjugate ``s g s^-1`` that stays inside ``G0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import tolerances as tol
from .characters import (CharacterTable, ClassFunction, character_table, decompose,
                         induce, restrict)
from .errors import NotAdmissible, NotNormal
from .fusion import (AxiomReport, FusionAlgebra, Tag, bullet, check_fusion_axioms,
                     circle)
from .groups import (FiniteGroup, SubgroupEmbedding, centralizes, is_normal, x_set)


def character_ring(table: CharacterTable) -> FusionAlgebra:
    """The fusion algebra of irreducible characters under pointwise product."""
    n = len(table)
    a = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i, n):
            a[i, j] = a[j, i] = decompose(table[i] * table[j], table)
    inv = [table.conjugate_index(i) for i in range(n)]
    return FusionAlgebra([circle(i) for i in range(n)], inv, a)


# ---------------------------------------------------------------------------
# Admissibility


@dataclass(frozen=True)
class Witness:
    """A failure of admissibility: ``Ch(tau)(s g s^-1) != Ch(tau)(g)``."""

    tau: int
    g: int
    s: int
    g_label: str
    s_label: str
    value_at_g: complex
    value_at_conjugate: complex

    def __str__(self) -> str:
        return (f"tau{self.tau}, g={self.g_label}, s={self.s_label}: "
                f"Ch(tau{self.tau})(s g s^-1) = {self.value_at_conjugate:.6g} "
                f"!= Ch(tau{self.tau})(g) = {self.value_at_g:.6g}")


@dataclass(frozen=True)
class Admissibility:
    admissible: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.admissible


def _conjugates_in_subgroup(G: FiniteGroup, H: SubgroupEmbedding, g: int):
    """Pairs ``(s, s g s^-1)`` for ``s`` in ``X(g)``, in increasing ``s``."""
    conj = G.conjugates_of(g)
    s_vals = np.flatnonzero(H.mask[conj])
    return s_vals, conj[s_vals]


def is_admissible(G: FiniteGroup, H: SubgroupEmbedding, table_H: CharacterTable | None = None) -> Admissibility:
    """Exhaustive admissibility check over irreducibles of ``H``, ``H``-classes and ``X(g)``."""
    table_H = table_H or character_table(H.as_group)
    sub = H.as_group
    sub_index = np.array([H.from_parent.get(x, -1) for x in range(G.order)])
    for t, tau in enumerate(table_H):
        for g_sub in sub.class_representatives:
            g = H.to_parent[g_sub]
            s_vals, images = _conjugates_in_subgroup(G, H, g)
            vals = tau.values[sub.class_of[sub_index[images]]]
            ref = tau.values[sub.class_of[g_sub]]
            bad = np.flatnonzero(np.abs(vals - ref) > tol.EPS_EQ)
            if bad.size:
                s = int(s_vals[bad[0]])
                return Admissibility(False, Witness(t, int(g), s, G.labels[g], G.labels[s],
                                                    complex(ref), complex(vals[bad[0]])))
    return Admissibility(True)


# ---------------------------------------------------------------------------
# Coadjoint action and sufficient conditions


@dataclass(frozen=True)
class CoadjointAction:
    """``perms[s][t]`` is the index of the character ``g -> tau_t(s g s^-1)``."""

    perms: tuple[tuple[int, ...], ...]

    @property
    def trivial(self) -> bool:
        return all(p == tuple(range(len(p))) for p in self.perms)


def coadjoint_action(G: FiniteGroup, H: SubgroupEmbedding, table_H: CharacterTable | None = None) -> CoadjointAction:
    if not is_normal(G, H):
        raise NotNormal("coadjoint action needs a normal subgroup")
    table_H = table_H or character_table(H.as_group)
    sub = H.as_group
    reps_parent = [H.to_parent[r] for r in sub.class_representatives]
    perms = []
    for s in range(G.order):
        moved_classes = [sub.class_of[H.from_parent[G.conjugate(s, g)]] for g in reps_parent]
        perm = []
        for tau in table_H:
            moved = ClassFunction(sub, tau.values[moved_classes])
            perm.append(table_H.index_of(moved))
        perms.append(tuple(perm))
    return CoadjointAction(tuple(perms))


@dataclass(frozen=True)
class Certificate:
    name: str
    holds: bool | None
    detail: str = ""

    def __str__(self) -> str:
        state = {True: "holds", False: "fails", None: "not evaluated"}[self.holds]
        return f"{self.name}: {state}" + (f" ({self.detail})" if self.detail else "")


def _extends(G: FiniteGroup, H: SubgroupEmbedding, table_G: CharacterTable, table_H: CharacterTable) -> tuple[bool, str]:
    # a character of G restricting to an irreducible must itself be irreducible
    for t in range(len(table_H)):
        target = np.zeros(len(table_H), dtype=np.int64)
        target[t] = 1
        if not any(np.array_equal(decompose(restrict(pi, H), table_H), target) for pi in table_G):
            return False, f"tau{t} is not the restriction of a representation of G"
    return True, ""


def _conjugacy_controlled(G: FiniteGroup, H: SubgroupEmbedding) -> tuple[bool, str]:
    sub = H.as_group
    for g_sub in sub.class_representatives:
        g = H.to_parent[g_sub]
        s_vals, images = _conjugates_in_subgroup(G, H, g)
        for s, img in zip(s_vals, images):
            if sub.class_of[H.from_parent[int(img)]] != sub.class_of[g_sub]:
                return False, f"s={G.labels[s]} moves g={G.labels[g]} outside its G0-class"
    return True, ""


def certificates(G: FiniteGroup, H: SubgroupEmbedding, intermediate: SubgroupEmbedding | None = None) -> list[Certificate]:
    """Evaluate each sufficient condition for admissibility.

    ``intermediate`` is a subgroup ``G1`` of ``G`` containing ``H`` used for
    the transitivity criterion.  Every certificate that holds is cross-checked
    against :func:`is_admissible`.
    """
    table_G = character_table(G)
    table_H = character_table(H.as_group)
    out = []

    ab = G.is_abelian()
    out.append(Certificate("Lemma 3.7", ab, "" if ab else "G is not abelian"))

    ok, why = _extends(G, H, table_G, table_H)
    out.append(Certificate("Lemma 3.9", ok, why))

    ok, why = _conjugacy_controlled(G, H)
    out.append(Certificate("Lemma 3.11", ok, why))

    if intermediate is None:
        out.append(Certificate("Lemma 3.13", None, "no intermediate subgroup supplied"))
    else:
        if intermediate.parent is not G or not set(H.members) <= set(intermediate.members):
            raise ValueError("intermediate subgroup must contain G0 and lie in G")
        inner = _embed_in_intermediate(H, intermediate)
        lower = bool(is_admissible(intermediate.as_group, inner))
        upper = bool(is_admissible(G, intermediate))
        out.append(Certificate("Lemma 3.13", lower and upper,
                               f"(G1, G0) admissible: {lower}; (G, G1) admissible: {upper}"))

    normal = is_normal(G, H)
    if normal:
        triv = coadjoint_action(G, H, table_H).trivial
        out.append(Certificate("Lemma 3.15", triv, "" if triv else "coadjoint action is nontrivial"))
    else:
        out.append(Certificate("Lemma 3.15", False, "G0 is not normal"))

    if not normal:
        out.append(Certificate("Lemma 3.16", False, "G0 is not normal"))
    elif not H.as_group.is_abelian():
        out.append(Certificate("Lemma 3.16", False, "G0 is not abelian"))
    else:
        cen = centralizes(G, H)
        out.append(Certificate("Lemma 3.16", cen, "" if cen else "G does not centralize G0"))

    if any(c.holds for c in out) and not is_admissible(G, H, table_H):
        raise AssertionError("a sufficient condition holds for a non-admissible pair")
    return out


def applicable_certificates(G: FiniteGroup, H: SubgroupEmbedding, intermediate: SubgroupEmbedding | None = None) -> list[str]:
    return [c.name for c in certificates(G, H, intermediate) if c.holds]


def _embed_in_intermediate(H: SubgroupEmbedding, G1: SubgroupEmbedding) -> SubgroupEmbedding:
    from .groups import subgroup_from_members
    return subgroup_from_members(G1.as_group, [G1.from_parent[m] for m in H.members])


# ---------------------------------------------------------------------------
# The pair algebra


@dataclass
class PairAlgebraResult:
    group: FiniteGroup
    subgroup: SubgroupEmbedding
    admissible: bool
    algebra: FusionAlgebra | None = None
    witness: Witness | None = None
    certificates: list[str] = field(default_factory=list)
    axioms: AxiomReport | None = None

    @property
    def n_circle(self) -> int:
        return len(character_table(self.group))

    @property
    def n_bullet(self) -> int:
        return len(character_table(self.subgroup.as_group))


def _pair_structure(G: FiniteGroup, H: SubgroupEmbedding, table_G: CharacterTable,
                    table_H: CharacterTable) -> np.ndarray:
    nG, nH = len(table_G), len(table_H)
    n = nG + nH
    a = np.zeros((n, n, n), dtype=np.int64)
    res = [restrict(chi, H) for chi in table_G]
    for i in range(nG):
        for j in range(i, nG):
            a[i, j, :nG] = a[j, i, :nG] = decompose(table_G[i] * table_G[j], table_G)
        for t in range(nH):
            row = decompose(res[i] * table_H[t], table_H)
            a[i, nG + t, nG:] = row
            a[nG + t, i, nG:] = row
    for s in range(nH):
        for t in range(s, nH):
            row = decompose(induce(table_H[s] * table_H[t], H), table_G)
            a[nG + s, nG + t, :nG] = a[nG + t, nG + s, :nG] = row
    return a


def build_pair_algebra(G: FiniteGroup, H: SubgroupEmbedding, strict: bool = True) -> PairAlgebraResult:
    """Construct the fusion rule algebra of the pair, or refuse with a witness.

    With ``strict`` a refusal raises :class:`NotAdmissible` (carrying the
    result); otherwise the refusal is returned.
    """
    table_G = character_table(G)
    table_H = character_table(H.as_group)
    adm = is_admissible(G, H, table_H)
    if not adm:
        result = PairAlgebraResult(G, H, False, witness=adm.witness)
        if strict:
            raise NotAdmissible(f"(G, G0) is not an admissible pair: {adm.witness}", adm.witness, result)
        return result
    a = _pair_structure(G, H, table_G, table_H)
    nG, nH = len(table_G), len(table_H)
    basis = [circle(i) for i in range(nG)] + [bullet(t) for t in range(nH)]
    inv = [table_G.conjugate_index(i) for i in range(nG)] + [nG + table_H.conjugate_index(t) for t in range(nH)]
    F = FusionAlgebra(basis, inv, a)
    report = check_fusion_axioms(F)
    if not report.ok:
        raise AssertionError("admissible pair produced a non-fusion algebra:\n" + str(report))
    certs = applicable_certificates(G, H)
    return PairAlgebraResult(G, H, True, F, None, certs, report)


def grading_violations(F: FusionAlgebra) -> list[tuple[int, int, int]]:
    """Products whose support breaks the circle/bullet Z2-grading."""
    out = []
    tags = [b.tag for b in F.basis]
    for i, j, k in np.argwhere(F.structure != 0):
        parity = (tags[i] is Tag.BULLET) ^ (tags[j] is Tag.BULLET)
        if (tags[k] is Tag.BULLET) != parity:
            out.append((int(i), int(j), int(k)))
    return out


# ---------------------------------------------------------------------------
# Brute-force associativity on class functions


@dataclass
class RelationCheck:
    name: str
    pattern: str
    passed: bool
    counterexample: tuple[str, str, str] | None = None
    max_defect: float = 0.0

    def __str__(self) -> str:
        if self.passed:
            return f"{self.name} {self.pattern}: ok"
        x, y, z = self.counterexample
        return (f"{self.name} {self.pattern}: FAILS at ({x} * {y}) * {z} "
                f"(defect {self.max_defect:.3g})")


@dataclass
class AssociativityReport:
    relations: dict[str, RelationCheck]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.relations.values())

    def __getitem__(self, name: str) -> RelationCheck:
        return self.relations[name]

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.relations.values())


def _conv(x, y, H: SubgroupEmbedding):
    (tx, fx), (ty, fy) = x, y
    if tx == "o" and ty == "o":
        return "o", fx * fy
    if tx == "o":
        return "b", restrict(fx, H) * fy
    if ty == "o":
        return "b", fx * restrict(fy, H)
    return "o", induce(fx * fy, H)


def verify_associativity(G: FiniteGroup | PairAlgebraResult, H: SubgroupEmbedding | None = None) -> AssociativityReport:
    """Compare both bracketings of every triple as class functions (no rounding).

    Accepts a :class:`PairAlgebraResult` or a raw ``(G, G0)`` pair, so it also
    works for non-admissible pairs; the lowest-index failing triple is
    reported for each relation.
    """
    if isinstance(G, PairAlgebraResult):
        G, H = G.group, G.subgroup
    if H is None:
        raise TypeError("a subgroup is required when passing a group")
    table_G = character_table(G)
    table_H = character_table(H.as_group)
    circles = [(f"γ{i}", ("o", chi)) for i, chi in enumerate(table_G)]
    bullets = [(f"ρ{t}", ("b", tau)) for t, tau in enumerate(table_H)]
    patterns = {
        "A1": ("(o*o)*o = o*(o*o)", circles, circles, circles),
        "A2": ("(•*o)*o = •*(o*o)", bullets, circles, circles),
        "A3": ("(•*•)*o = •*(•*o)", bullets, bullets, circles),
        "A4": ("(•*•)*• = •*(•*•)", bullets, bullets, bullets),
    }
    relations = {}
    for name, (pattern, xs, ys, zs) in patterns.items():
        check = RelationCheck(name, pattern, True)
        worst = 0.0
        for nx, x in xs:
            for ny, y in ys:
                xy = _conv(x, y, H)
                for nz, z in zs:
                    left = _conv(xy, z, H)
                    right = _conv(x, _conv(y, z, H), H)
                    if left[0] != right[0]:
                        raise AssertionError("grading mismatch between bracketings")
                    defect = float(np.max(np.abs(left[1].values - right[1].values)))
                    worst = max(worst, defect)
                    if defect > tol.EPS_EQ and check.passed:
                        check.passed = False
                        check.counterexample = (nx, ny, nz)
        check.max_defect = worst
        relations[name] = check
    return AssociativityReport(relations)

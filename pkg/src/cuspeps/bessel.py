"""Bessel functions of cuspidal representations and their operator model.

For a cuspidal sigma of GL_r(F_q) and a nondegenerate character psi_U of the
unipotent upper-triangular subgroup U, the Bessel function is the normalized
twisted trace

    J(g) = |U|^-1 * sum_{u in U} psi_U(u) * chi_sigma(g u^-1),

an exact cyclotomic number.  J(1) = 1, J transforms by psi_U under U on both
sides, and on the mirabolic (or first-vector stabilizer) subgroup it is
supported exactly on U.  The operator

    L(g)[i][j] = J(c_i g c_j^-1),   c_i coset representatives of U\\M,

realizes sigma on the |M|/|U|-dimensional space of psi_U-equivariant
functions on M: L is multiplicative, has trace chi_sigma, and its
(identity, identity) entry recovers J itself.

Values are cached per group element; the character is cached per class, so a
full table over GL_r costs about |G| * |U| class lookups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cyclo import CycloNumber, zero
from .cusp import CuspidalRep, contragredient
from .ffield import AdditiveChar
from .glq import MIRABOLIC, STABILIZER, UNIPOTENT, GLGroup, Mat

__all__ = [
    "BesselEvaluator",
    "BesselTable",
    "ModelSpace",
    "bessel_value",
    "build_table",
    "operator_L",
    "hankel_check",
    "contragredient_table",
    "mat_mul",
    "mat_eq",
    "mat_trace",
]


class BesselEvaluator:
    """Memoized Bessel function of (sigma, psi)."""

    __slots__ = ("sigma", "psi", "_terms", "_norm", "_cache")

    def __init__(self, sigma: CuspidalRep, psi: AdditiveChar):
        if psi.field is not sigma.group.field:
            raise ValueError("additive character lives on the wrong field")
        if not psi.nontrivial:
            raise ValueError("psi must be nontrivial (nondegenerate on U)")
        self.sigma = sigma
        self.psi = psi
        group = sigma.group
        self._terms = tuple(
            (group.psi_u(u, psi), u.inv()) for u in group.elements(UNIPOTENT)
        )
        self._norm = Fraction(1, len(self._terms))
        self._cache: dict[Mat, CycloNumber] = {}

    def __call__(self, g: Mat) -> CycloNumber:
        cached = self._cache.get(g)
        if cached is not None:
            return cached
        sigma = self.sigma
        acc = zero()
        for psi_val, u_inv in self._terms:
            chi = sigma.char_at(g * u_inv)
            if not chi.is_zero():
                acc = acc + psi_val * chi
        value = acc.scale(self._norm)
        self._cache[g] = value
        return value


_EVALUATORS: dict[tuple, BesselEvaluator] = {}


def get_evaluator(sigma: CuspidalRep, psi: AdditiveChar) -> BesselEvaluator:
    key = (id(sigma.group), sigma.orbit, id(psi.field), psi.a)
    ev = _EVALUATORS.get(key)
    if ev is None or ev.sigma.group is not sigma.group:
        ev = BesselEvaluator(sigma, psi)
        _EVALUATORS[key] = ev
    return ev


def bessel_value(sigma: CuspidalRep, psi: AdditiveChar, g: Mat) -> CycloNumber:
    """J(g), exact."""
    if g.field is not sigma.group.field or g.r != sigma.group.r:
        raise ValueError("matrix does not match the representation's group")
    return get_evaluator(sigma, psi)(g)


@dataclass
class BesselTable:
    """Complete Bessel values over one subgroup domain."""

    sigma: CuspidalRep
    psi: AdditiveChar
    domain: str
    values: dict = field(default_factory=dict)

    def __getitem__(self, g: Mat) -> CycloNumber:
        return self.values[g]


def build_table(sigma: CuspidalRep, psi: AdditiveChar, domain: str) -> BesselTable:
    """Tabulate J over a whole subgroup (bound-checked by the enumerator)."""
    ev = get_evaluator(sigma, psi)
    values = {g: ev(g) for g in sigma.group.iterate(domain)}
    return BesselTable(sigma, psi, domain, values)


@dataclass(frozen=True)
class ModelSpace:
    """Basis data for the psi_U-equivariant model of sigma on M."""

    group: GLGroup
    kind: str
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)


def model_space(group: GLGroup, kind: str) -> ModelSpace:
    if kind not in (MIRABOLIC, STABILIZER):
        raise ValueError("the model space lives on the mirabolic or the stabilizer")
    basis = group.coset_reps(kind)
    space = ModelSpace(group, kind, basis)
    expected = 1
    for i in range(1, group.r):
        expected *= group.q**i - 1
    assert space.dim == expected, "model dimension must match dim(sigma)"
    return space


def operator_L(sigma: CuspidalRep, psi: AdditiveChar, g: Mat, kind: str):
    """Matrix of L(g) in the delta basis indexed by U\\M representatives."""
    space = model_space(sigma.group, kind)
    ev = get_evaluator(sigma, psi)
    inverses = [c.inv() for c in space.basis]
    return tuple(
        tuple(ev(ci * g * cj_inv) for cj_inv in inverses) for ci in space.basis
    )


def hankel_check(
    sigma: CuspidalRep, psi: AdditiveChar, g1: Mat, g2: Mat, kind: str
) -> bool:
    """sum_{m in M/U} J(g1 m) J(m^-1 g2) == J(g1 g2), exactly."""
    ev = get_evaluator(sigma, psi)
    acc = zero()
    for c in sigma.group.coset_reps(kind):
        c_inv = c.inv()
        term = ev(g1 * c_inv) * ev(c * g2)
        if not term.is_zero():
            acc = acc + term
    return acc == ev(g1 * g2)


def contragredient_table(table: BesselTable) -> BesselTable:
    """J-check(g) = J(g^-1); equals the table of (sigma-check, psi-bar)."""
    values = {}
    for g in table.values:
        g_inv = g.inv()
        if g_inv not in table.values:
            raise ValueError("domain is not closed under inversion")
        values[g] = table.values[g_inv]
    return BesselTable(
        contragredient(table.sigma), table.psi.conjugate(), table.domain, values
    )


# -- small helpers for matrices of cyclotomic numbers -----------------------


def mat_mul(a, b):
    n = len(a)
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(n)), zero()) for j in range(n)
        )
        for i in range(n)
    )


def mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_trace(a):
    return sum((a[i][i] for i in range(len(a))), zero())

"""The Burch decision layer.

An ideal I of the local ring S (polynomial ring localized at the variables)
is Burch when mI != m(I:m).  This module evaluates that definition, the
equivalent colon/socle/type characterizations, the weakly-m-full and m-full
tests, the presentation invariant dim n(I:n)/nI, the intrinsic invariant
  c_R = dim Soc R + dim H_1(K^R) - edim R - dim H_1(K^{R'}) + edim R'
with R' = R/Soc R, and the derived classifiers (Gorenstein, radical-cube
zero, fibre products, regular cut-downs).  A depth-zero ring is Burch
exactly when c_R > 0, which is cross-checked against the syzygy criterion
"k splits off Omega^2 k" whenever the ring is not a field.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .artinian import QuotientAlgebra
from .groebner import (
    Ideal,
    PreconditionError,
    ideal_colon,
    ideal_colon_element,
    max_ideal,
    normal_form,
)
from .poly import Polynomial, RingContext
from .resolution import k_summand_test, koszul_h1, residue_field


class InternalConsistencyError(AssertionError):
    """Two provably-equivalent routes disagreed; a bug, not an input error."""


# ---------------------------------------------------------------------------
# core ideal tests


def depth_zero_ideal(I: Ideal) -> bool:
    """depth S/I = 0, detected as (I : m) != I."""
    return ideal_colon(I, max_ideal(I.ctx)) != I


@dataclass
class BurchReport:
    burch: bool
    depth_zero: bool
    route: str
    witness_socle: Polynomial | None = None
    witness_variable: str | None = None
    witness_product: Polynomial | None = None
    invariants: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.burch and not self.depth_zero:
            raise InternalConsistencyError("Burch ideal with positive depth")


def _require_proper_nonzero(I: Ideal) -> None:
    if not I.gens or I.is_zero:
        raise PreconditionError("the zero ideal is not testable")
    if not I.in_max_ideal():
        raise PreconditionError("generators must lie in the maximal ideal")


def burch_ideal_test(I: Ideal, with_invariants: bool = True) -> BurchReport:
    """The defining test mI != m(I:m), with a witness and invariant table."""
    _require_proper_nonzero(I)
    m = max_ideal(I.ctx)
    mI = m.product(I)
    J = ideal_colon(I, m)
    mJ = m.product(J)
    burch = mJ != mI
    depth0 = J != I
    report = BurchReport(burch, depth0 or burch, "definition")
    if burch:
        gb_mI = list(mI.groebner())
        for g in J.gens:
            for i in range(I.ctx.nvars):
                prod = I.ctx.variable(i) * g
                if not normal_form(prod, gb_mI).is_zero:
                    report.witness_socle = g
                    report.witness_variable = I.ctx.variables[i]
                    report.witness_product = prod
                    break
            if report.witness_product is not None:
                break
    if with_invariants:
        report.invariants = _invariant_table(I, mI)
    return report


def _invariant_table(I: Ideal, mI: Ideal | None = None) -> dict:
    m = max_ideal(I.ctx)
    mI = mI if mI is not None else m.product(I)
    table: dict = {"choi_invariant": choi_invariant(I)}
    if I.is_m_primary():
        R = QuotientAlgebra(I)
        len_I = R.length
        len_mI = mI.length()
        len_mmI = m.product(mI).length()
        table.update(
            length=len_I,
            edim=R.edim,
            type=R.type(),
            socle_dim=R.socle_dim,
            hilbert=R.hilbert,
            mu_I=len_mI - len_I,
            mu_mI=len_mmI - len_mI,
            c_invariant=burch_invariant(R),
        )
    else:
        try:
            table["mu_I"] = I.min_gen_count_graded()
        except PreconditionError:
            pass
    return table


@dataclass
class CriteriaCrosscheck:
    verdicts: dict  # route name -> bool | None (None = skipped)
    agree: bool

    @property
    def burch(self) -> bool:
        return self.verdicts["definition"]


def burch_criteria_crosscheck(I: Ideal) -> CriteriaCrosscheck:
    """Evaluate the four equivalent characterizations independently:
    (definition)  mI != m(I:m)
    (colon shift) (I:m) != (mI:m)
    (socle action) Soc(S/I)·m is nonzero in m/Im
    (type count)  depth S/I = 0 and r(S/mI) != r(S/I) + mu(I)
    The length-based routes are skipped (None) when I is not m-primary."""
    _require_proper_nonzero(I)
    ctx = I.ctx
    m = max_ideal(ctx)
    mI = m.product(I)
    J = ideal_colon(I, m)
    verdicts: dict = {}
    verdicts["definition"] = m.product(J) != mI
    verdicts["colon_shift"] = J != ideal_colon(mI, m)
    if I.is_m_primary():
        A = QuotientAlgebra(mI)
        socle_hit = False
        for g in J.gens:
            for i in range(ctx.nvars):
                if not A.element(ctx.variable(i) * g).is_zero:
                    socle_hit = True
                    break
            if socle_hit:
                break
        verdicts["socle_action"] = socle_hit
        R = QuotientAlgebra(I)
        mu = mI.length() - R.length
        verdicts["type_count"] = (J != I) and (A.type() != R.type() + mu)
    else:
        verdicts["socle_action"] = None
        verdicts["type_count"] = None
    stated = [v for v in verdicts.values() if v is not None]
    return CriteriaCrosscheck(verdicts, agree=len(set(stated)) == 1)


def weakly_m_full_test(I: Ideal) -> bool:
    """(mI : m) = I."""
    _require_proper_nonzero(I)
    m = max_ideal(I.ctx)
    return ideal_colon(m.product(I), m) == I


@dataclass
class MFullResult:
    m_full: bool
    witness: Polynomial | None  # certified witness x with (mI : x) = I
    trials: int


def m_full_test(I: Ideal, trials: int = 20, seed: int = 0) -> MFullResult:
    """Search for x in m with (mI : x) = I.  A yes is certified; a no only
    says no witness was found among the variables and `trials` random
    k-linear forms."""
    _require_proper_nonzero(I)
    ctx = I.ctx
    m = max_ideal(ctx)
    mI = m.product(I)
    candidates = [ctx.variable(i) for i in range(ctx.nvars)]
    rng = random.Random(seed)
    for _ in range(trials):
        coeffs = [rng.randrange(ctx.p) for _ in range(ctx.nvars)]
        if not any(coeffs):
            coeffs[0] = 1
        f = ctx.zero()
        for i, c in enumerate(coeffs):
            f = f + ctx.variable(i).scale(c)
        candidates.append(f)
    for x in candidates:
        if ideal_colon_element(mI, x) == I:
            return MFullResult(True, x, trials)
    return MFullResult(False, None, trials)


# ---------------------------------------------------------------------------
# numerical invariants


def choi_invariant(I: Ideal) -> int:
    """dim_k n(I:n)/nI for the presentation S -> S/I.

    nJ/nI is spanned by the classes of x_j * g_i over generators g_i of
    J = (I:n), because n·nJ ⊆ nI; so the dimension is the rank of the
    normal-form coefficient matrix of those products modulo nI."""
    _require_proper_nonzero(I)
    ctx = I.ctx
    m = max_ideal(ctx)
    J = ideal_colon(I, m)
    gb_mI = list(m.product(I).groebner())
    residues = []
    monomials: dict = {}
    for g in J.gens:
        for i in range(ctx.nvars):
            r = normal_form(ctx.variable(i) * g, gb_mI)
            if not r.is_zero:
                residues.append(r)
                for e, _ in r.terms:
                    monomials.setdefault(e, len(monomials))
    if not residues:
        return 0
    mat = np.zeros((len(monomials), len(residues)), dtype=np.int64)
    for j, r in enumerate(residues):
        for e, c in r.terms:
            mat[monomials[e], j] = c
    return linalg.rank(mat, ctx.p)


def burch_invariant(R: QuotientAlgebra) -> int:
    """The intrinsic invariant c_R; positive iff R is Burch of depth zero.

    For a field the value is presentation-dependent (dim n/n^2) and the
    caller should treat it as the degenerate case."""
    if R.is_field:
        return R.ctx.nvars
    Rp = R.quotient_by_socle()
    h1 = koszul_h1(R)
    h1p = 0 if Rp.is_field else koszul_h1(Rp)
    edim_p = Rp.edim
    return R.socle_dim + h1 - R.edim - h1p + edim_p


@dataclass
class RingVerdict:
    burch: bool
    c_invariant: int
    trivial_field: bool = False
    omega2_splits: bool | None = None


def burch_ring_depth_zero(R: QuotientAlgebra, crosscheck: bool = True) -> RingVerdict:
    """c_R > 0, cross-checked against the criterion that k is a direct
    summand of its second syzygy (skipped for fields, where the syzygy
    criterion degenerates but the verdict is Burch by convention)."""
    c = burch_invariant(R)
    if R.is_field:
        return RingVerdict(True, c, trivial_field=True)
    verdict = c > 0
    splits = None
    if crosscheck:
        res = residue_field(R).resolution(2)
        splits = k_summand_test(res.syzygy(2)).splits
        if splits != verdict:
            raise InternalConsistencyError(
                f"c_R = {c} disagrees with the second-syzygy criterion ({splits})"
            )
    return RingVerdict(verdict, c, omega2_splits=splits)


# ---------------------------------------------------------------------------
# classifiers


@dataclass
class GorensteinBurchReport:
    gorenstein: bool
    burch: bool
    edim: int
    length: int
    hypersurface_exponent: int | None  # r with R ≅ k[t]/(t^r) when it applies


def gorenstein_burch_classifier(I: Ideal) -> GorensteinBurchReport:
    """Gorenstein + Burch forces an artinian hypersurface (edim <= 1); the
    quotient is then k[t]/(t^r) with r = length."""
    if not I.is_m_primary():
        raise PreconditionError("classifier needs an m-primary ideal")
    R = QuotientAlgebra(I)
    gor = R.is_gorenstein()
    burch = burch_ideal_test(I, with_invariants=False).burch
    expo = None
    if gor and burch:
        if R.edim > 1:
            raise InternalConsistencyError("Gorenstein Burch quotient with edim > 1")
        expo = R.length
    return GorensteinBurchReport(gor, burch, R.edim, R.length, expo)


@dataclass
class CubeZeroVerdict:
    burch: bool
    beta2: int
    edim: int
    type: int


def cube_zero_test(R: QuotientAlgebra) -> CubeZeroVerdict:
    """For m^3 = 0: Burch iff beta_2(k) > edim^2 - type."""
    if R.max_power_basis(3).shape[1] != 0:
        raise PreconditionError("cube-zero test needs m^3 = 0")
    res = residue_field(R).resolution(2)
    beta2 = res.betti[2]
    e, r = R.edim, R.type()
    return CubeZeroVerdict(beta2 > e * e - r, beta2, e, r)


@dataclass
class SummandConditionResult:
    holds: bool
    i1a_in_j: bool
    quotient_gorenstein: bool | None


def cyclic_summand_condition(I: Ideal, J: Ideal, A) -> SummandConditionResult:
    """The ideal-arithmetic condition (I:J) not contained in
    (IJ : (J:n)·I_1(A)), evaluated literally; side flags report whether
    I_1(A) ⊆ J and whether S/J is Gorenstein (when decidable)."""
    ctx = I.ctx
    if not I <= J:
        raise PreconditionError("condition needs I ⊆ J")
    entries = [h for row in A for h in row if not h.is_zero]
    I1A = Ideal.make(ctx, entries)
    m = max_ideal(ctx)
    left = ideal_colon(I, J)
    if I1A.is_zero:
        holds = False
    else:
        K = ideal_colon(J, m).product(I1A)
        rhs = ideal_colon(I.product(J), K)
        holds = not left <= rhs
    i1a_in_j = I1A <= J
    gor = None
    if J.is_m_primary():
        gor = QuotientAlgebra(J).is_gorenstein()
    return SummandConditionResult(holds, i1a_in_j, gor)


@dataclass
class MuGrowthVerdict:
    burch: bool
    mu_I: int
    mu_mI: int


def mu_growth_test(I: Ideal) -> MuGrowthVerdict:
    """Two-variable m-primary criterion: Burch iff mu(mI) < 2 mu(I)."""
    if I.ctx.nvars != 2:
        raise PreconditionError("generator-count criterion needs 2 variables")
    if not I.is_m_primary():
        raise PreconditionError("generator-count criterion needs an m-primary ideal")
    m = max_ideal(I.ctx)
    mI = m.product(I)
    len_I = I.length()
    len_mI = mI.length()
    len_mmI = m.product(mI).length()
    mu_I = len_mI - len_I
    mu_mI = len_mmI - len_mI
    return MuGrowthVerdict(mu_mI < 2 * mu_I, mu_I, mu_mI)


# ---------------------------------------------------------------------------
# cutting down by ring elements


@dataclass
class CutStep:
    element: Polynomial
    regular: bool
    witness: Polynomial | None  # f with f·x ∈ I but f ∉ I, when not regular
    eliminated: str | None


@dataclass
class CutResult:
    ideal: Ideal
    steps: list[CutStep]

    @property
    def all_regular(self) -> bool:
        return all(s.regular for s in self.steps)


def _substitute_variable(f: Polynomial, ctx_new: RingContext, var_index: int, replacement: Polynomial) -> Polynomial:
    """Substitute x_{var_index} := replacement (given in ctx_new) and drop
    that variable from the exponent tuples."""
    out = ctx_new.zero()
    for e, c in f.terms:
        rest = e[:var_index] + e[var_index + 1 :]
        term = ctx_new.monomial(rest, c)
        if e[var_index]:
            term = term * (replacement ** e[var_index])
        out = out + term
    return out


def cut_down(I: Ideal, elems, allow_nonlinear: bool = False) -> CutResult:
    """Quotient by a sequence of ring elements, checking stepwise regularity
    via ((I + previous) : x) = (I + previous).

    Linear forms are eliminated by substitution, presenting the quotient in
    the remaining variables.  Nonlinear elements (which by the embedded
    deformation obstruction can never produce a Burch quotient from a
    singular ring when inside m^2) require allow_nonlinear and are appended
    to the ideal without elimination."""
    cur = I
    steps: list[CutStep] = []
    pending = list(elems)
    while pending:
        x = pending.pop(0)
        if x.ctx != cur.ctx:
            raise PreconditionError("cut element from a different ring context")
        if x.is_zero or x.constant_term:
            raise PreconditionError("cut element must be a nonzero element of m")
        linear = x.homogeneous_degree() == 1
        if not linear and not allow_nonlinear:
            raise PreconditionError(
                f"cut element {x} is not a linear form (pass allow_nonlinear to override)"
            )
        colon = ideal_colon_element(cur, x)
        if colon != cur:
            witness = next(g for g in colon.gens if not cur.contains(g))
            steps.append(CutStep(x, False, witness, None))
            raise PreconditionError(
                f"element {x} is not regular modulo the current ideal; witness {witness}"
            )
        if linear:
            old_ctx = cur.ctx
            j, coeff = next((i, c) for e, c in x.terms for i, e_i in enumerate(e) if e_i)
            # solve x = 0 for the pivot variable
            names = old_ctx.variables[:j] + old_ctx.variables[j + 1 :]
            if not names:
                raise PreconditionError("cannot eliminate the last variable")
            ctx_new = RingContext(old_ctx.p, names, old_ctx.order)
            inv = old_ctx.field.inv(coeff)
            repl_terms = {}
            for e, c in x.terms:
                if e[j]:
                    continue
                rest = e[:j] + e[j + 1 :]
                repl_terms[rest] = (-c * inv) % old_ctx.p
            replacement = Polynomial.from_dict(ctx_new, repl_terms)
            new_gens = [
                _substitute_variable(g, ctx_new, j, replacement) for g in cur.gens
            ]
            cur = Ideal.make(ctx_new, new_gens)
            pending = [_substitute_variable(f, ctx_new, j, replacement) for f in pending]
            steps.append(CutStep(x, True, None, old_ctx.variables[j]))
        else:
            cur = cur.sum(Ideal.make(cur.ctx, (x,)))
            steps.append(CutStep(x, True, None, None))
    return CutResult(cur, steps)


# ---------------------------------------------------------------------------
# fibre products


@dataclass
class FibreVerdict:
    burch: bool
    left_burch: bool
    right_burch: bool
    socle_outside_square: bool  # the edim-drop branch
    direct: bool | None  # verdict on the constructed presentation


def fibre_burch_test(RS: QuotientAlgebra, RT: QuotientAlgebra, direct: bool = True) -> FibreVerdict:
    """The fibre product of artinian rings is Burch iff one factor is Burch
    of depth zero (the socle-outside-m^2 branch is subsumed but evaluated).
    Optionally cross-checked against the constructed presentation."""
    from .artinian import fibre_product

    if RS.is_field or RT.is_field:
        raise PreconditionError("trivial fibre product: test the other factor directly")
    bS = burch_ring_depth_zero(RS).burch
    bT = burch_ring_depth_zero(RT).burch
    nS = RS.edim > RS.quotient_by_socle().edim
    nT = RT.edim > RT.quotient_by_socle().edim
    verdict = bS or bT or nS or nT
    direct_verdict = None
    if direct:
        pres = fibre_product(RS, RT)
        direct_verdict = burch_ring_depth_zero(QuotientAlgebra(pres.ideal)).burch
        if direct_verdict != verdict:
            raise InternalConsistencyError(
                "fibre-product criterion disagrees with the direct verdict"
            )
    return FibreVerdict(verdict, bS, bT, nS or nT, direct_verdict)

"""Finite-dimensional quotient algebras R = S/I for m-primary ideals I.

The algebra is presented on its standard monomial basis with one
multiplication-by-variable matrix per variable; every invariant (length,
Hilbert function, socle, type, embedding dimension) is then plain linear
algebra over F_p.  The Hilbert function is the m-adic one, computed from
image chains of the multiplication matrices, so it is correct for
non-homogeneous ideals too.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .groebner import Ideal, PreconditionError, normal_form
from .poly import Exponents, Polynomial, RingContext


class QuotientAlgebra:
    """S/I with cached basis, multiplication matrices and invariants."""

    def __init__(self, ideal: Ideal):
        if not ideal.is_m_primary():
            raise PreconditionError("quotient algebra needs an m-primary ideal")
        self.ideal = ideal
        self.ctx = ideal.ctx
        self.p = ideal.ctx.p
        self.basis: tuple[Exponents, ...] = ideal.standard_monomials()
        self.index = {m: i for i, m in enumerate(self.basis)}
        self.dim = len(self.basis)
        self._gb = list(ideal.groebner())
        self.mult = [self._variable_matrix(i) for i in range(self.ctx.nvars)]
        self._check_commuting()
        self._filtration = self._m_adic_chain()
        self.hilbert = self._hilbert_from_chain()
        self.edim = self.hilbert[1] if len(self.hilbert) > 1 else 0
        self.socle = self._socle_basis()
        self._mono_ops: list[np.ndarray | None] = [None] * self.dim

    # -- construction ---------------------------------------------------------

    def _nf_vector(self, f: Polynomial) -> np.ndarray:
        v = np.zeros(self.dim, dtype=np.int64)
        r = normal_form(f, self._gb)
        for e, c in r.terms:
            v[self.index[e]] = c
        return v

    def _variable_matrix(self, i: int) -> np.ndarray:
        cols = []
        xi = self.ctx.var_exps(i)
        for m in self.basis:
            prod = tuple(a + b for a, b in zip(m, xi))
            if prod in self.index:
                col = np.zeros(self.dim, dtype=np.int64)
                col[self.index[prod]] = 1
            else:
                col = self._nf_vector(self.ctx.monomial(prod))
            cols.append(col)
        return np.stack(cols, axis=1)

    def _check_commuting(self) -> None:
        for i in range(len(self.mult)):
            for j in range(i + 1, len(self.mult)):
                a = linalg.matmul(self.mult[i], self.mult[j], self.p)
                b = linalg.matmul(self.mult[j], self.mult[i], self.p)
                if not np.array_equal(a, b):
                    raise AssertionError("multiplication matrices do not commute")

    def _m_adic_chain(self) -> list[np.ndarray]:
        """Bases of m^0 = R, m^1, m^2, ... down to 0 (as column spans)."""
        chain = [linalg.identity(self.dim)]
        current = chain[0]
        while current.shape[1]:
            images = [linalg.matmul(M, current, self.p) for M in self.mult]
            nxt = linalg.column_space_basis(linalg.hstack(images, self.dim), self.p)
            chain.append(nxt)
            if nxt.shape[1] == current.shape[1]:
                raise AssertionError("m-adic filtration does not terminate")
            current = nxt
        return chain

    def _hilbert_from_chain(self) -> tuple[int, ...]:
        dims = [c.shape[1] for c in self._filtration]
        return tuple(dims[j] - dims[j + 1] for j in range(len(dims) - 1))

    def _socle_basis(self) -> np.ndarray:
        stacked = np.concatenate(self.mult, axis=0)
        return linalg.kernel_basis(stacked, self.p)

    # -- queries ---------------------------------------------------------------

    @property
    def length(self) -> int:
        return self.dim

    @property
    def is_field(self) -> bool:
        return self.dim == 1

    @property
    def socle_dim(self) -> int:
        return self.socle.shape[1]

    def type(self) -> int:
        return self.socle_dim

    def is_gorenstein(self) -> bool:
        return self.socle_dim == 1

    def max_power_basis(self, j: int) -> np.ndarray:
        if j >= len(self._filtration):
            return linalg.zeros(self.dim, 0)
        return self._filtration[j]

    def element(self, f: Polynomial) -> "AlgebraElement":
        return AlgebraElement(self, self._nf_vector(f))

    def element_from_vector(self, v: np.ndarray) -> "AlgebraElement":
        return AlgebraElement(self, np.asarray(v, dtype=np.int64) % self.p)

    def variable_element(self, i: int) -> "AlgebraElement":
        return self.element(self.ctx.variable(i))

    def one(self) -> "AlgebraElement":
        v = np.zeros(self.dim, dtype=np.int64)
        v[self.index[self.ctx.zero_exps()]] = 1
        return AlgebraElement(self, v)

    def monomial_operator(self, b: int) -> np.ndarray:
        """Multiplication matrix of the b-th basis monomial (cached)."""
        if self._mono_ops[b] is None:
            exps = self.basis[b]
            if sum(exps) == 0:
                op = linalg.identity(self.dim)
            else:
                i = next(k for k, e in enumerate(exps) if e)
                parent = tuple(e - 1 if k == i else e for k, e in enumerate(exps))
                op = linalg.matmul(self.mult[i], self.monomial_operator(self.index[parent]), self.p)
            self._mono_ops[b] = op
        return self._mono_ops[b]

    def operator(self, a: "AlgebraElement") -> np.ndarray:
        """The multiplication-by-a matrix on the standard basis."""
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for b in np.nonzero(a.vec)[0]:
            out = (out + int(a.vec[b]) * self.monomial_operator(int(b))) % self.p
        return out

    def lift(self, v: np.ndarray) -> Polynomial:
        """The standard-monomial representative in S of a coordinate vector."""
        coeffs = {self.basis[i]: int(c) for i, c in enumerate(np.asarray(v).ravel()) if c}
        return Polynomial.from_dict(self.ctx, coeffs)

    def minimal_generators(self, subspace: np.ndarray) -> list[np.ndarray]:
        """Minimal generators (over R) of an ideal given as a subspace of R."""
        images = [linalg.matmul(M, subspace, self.p) for M in self.mult]
        mW = linalg.column_space_basis(linalg.hstack(images, self.dim), self.p)
        chosen = linalg.complete_columns(mW, subspace, self.p)
        return [subspace[:, j] for j in chosen]

    def socle_polynomials(self) -> list[Polynomial]:
        return [self.lift(self.socle[:, j]) for j in range(self.socle.shape[1])]

    def quotient_by_socle(self) -> "QuotientAlgebra":
        """R/Soc R, presented by the source ideal plus socle lifts."""
        lifts = self.socle_polynomials()
        return QuotientAlgebra(Ideal.make(self.ctx, self.ideal.gens + tuple(lifts)))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.ideal.gens)
        return f"QuotientAlgebra(dim={self.dim}, I=({gens}))"


@dataclass
class AlgebraElement:
    algebra: QuotientAlgebra
    vec: np.ndarray

    def __post_init__(self):
        self.vec = np.asarray(self.vec, dtype=np.int64) % self.algebra.p

    @property
    def is_zero(self) -> bool:
        return not self.vec.any()

    def in_max_ideal(self) -> bool:
        one = self.algebra.index[self.algebra.ctx.zero_exps()]
        return self.vec[one] == 0

    def in_max_ideal_square(self) -> bool:
        m2 = self.algebra.max_power_basis(2)
        return linalg.in_column_space(m2, self.vec, self.algebra.p)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(self.algebra, (self.vec + other.vec) % self.algebra.p)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        prod = linalg.matvec(self.algebra.operator(self), other.vec, self.algebra.p)
        return AlgebraElement(self.algebra, prod)

    def to_polynomial(self) -> Polynomial:
        return self.algebra.lift(self.vec)

    def __repr__(self):
        return f"AlgebraElement({self.to_polynomial()})"


def build_quotient(I: Ideal) -> QuotientAlgebra:
    return QuotientAlgebra(I)


def socle(R: QuotientAlgebra) -> np.ndarray:
    return R.socle


def type_and_gorenstein(R: QuotientAlgebra) -> tuple[int, bool]:
    t = R.type()
    return t, t == 1


def hilbert_function(R: QuotientAlgebra) -> tuple[int, ...]:
    return R.hilbert


@dataclass
class AnnihilatorResult:
    subspace: np.ndarray  # basis of (0 : a) as a subspace of R
    generators: list[Polynomial]  # minimal generating set over R

    @property
    def dim(self) -> int:
        return self.subspace.shape[1]

    @property
    def is_principal(self) -> bool:
        return len(self.generators) == 1


def annihilator(R: QuotientAlgebra, a: AlgebraElement) -> AnnihilatorResult:
    kernel = linalg.kernel_basis(R.operator(a), R.p)
    gens = R.minimal_generators(kernel)
    return AnnihilatorResult(kernel, [R.lift(g) for g in gens])


@dataclass(frozen=True)
class ExactPair:
    a: Polynomial
    b: Polynomial


def find_exact_pairs(R: QuotientAlgebra, extra_candidates=()) -> list[ExactPair]:
    """Pairs (a, b) with (0:a) = (b) and (0:b) = (a), found over a bounded
    candidate set: variables, pairwise sums of variables and user extras.
    The second member is derived from the annihilator, so pairs like
    (x, x^3) over k[x]/(x^4) are found even though x^3 is not a candidate."""
    p = R.p
    candidates: list[AlgebraElement] = []
    seen = set()

    def add(el: AlgebraElement):
        key = tuple(el.vec.tolist())
        if not el.is_zero and el.in_max_ideal() and key not in seen:
            seen.add(key)
            candidates.append(el)

    for i in range(R.ctx.nvars):
        add(R.variable_element(i))
    for i in range(R.ctx.nvars):
        for j in range(i + 1, R.ctx.nvars):
            add(R.variable_element(i) + R.variable_element(j))
    for f in extra_candidates:
        add(R.element(f))

    pairs = []
    found = set()
    for a in candidates:
        ann_a = annihilator(R, a)
        if not ann_a.is_principal:
            continue
        b = R.element(ann_a.generators[0])
        if b.is_zero:
            continue
        # verify both equalities exactly
        image_b = R.operator(b)
        if not linalg.subspace_eq(ann_a.subspace, image_b, p):
            continue
        ann_b = annihilator(R, b)
        image_a = R.operator(a)
        if not linalg.subspace_eq(ann_b.subspace, image_a, p):
            continue
        key = frozenset([str(a.to_polynomial()), str(b.to_polynomial())])
        if key not in found:
            found.add(key)
            pairs.append(ExactPair(a.to_polynomial(), b.to_polynomial()))
    return pairs


@dataclass(frozen=True)
class FibreProductPresentation:
    ideal: Ideal
    trivial: bool
    left_vars: tuple[str, ...]
    right_vars: tuple[str, ...]


def fibre_product(RS: QuotientAlgebra, RT: QuotientAlgebra) -> FibreProductPresentation:
    """The ideal I_S + I_T + (x_i y_j) presenting S x_k T on the disjoint
    union of the variables.  A field factor gives the trivial product, which
    is returned as the other factor's presentation unchanged."""
    if RS.p != RT.p:
        raise ValueError("fibre product factors over different prime fields")
    if set(RS.ctx.variables) & set(RT.ctx.variables):
        raise ValueError("fibre product factors share variable names")
    if RS.is_field or RT.is_field:
        keep = RT if RS.is_field else RS
        return FibreProductPresentation(keep.ideal, True, RS.ctx.variables, RT.ctx.variables)
    ctx = RingContext(RS.p, RS.ctx.variables + RT.ctx.variables)
    nl, nr = RS.ctx.nvars, RT.ctx.nvars

    def lift_left(f: Polynomial) -> Polynomial:
        return Polynomial.from_dict(ctx, {e + (0,) * nr: c for e, c in f.terms})

    def lift_right(f: Polynomial) -> Polynomial:
        return Polynomial.from_dict(ctx, {(0,) * nl + e: c for e, c in f.terms})

    gens = [lift_left(g) for g in RS.ideal.gens] + [lift_right(g) for g in RT.ideal.gens]
    for i in range(nl):
        for j in range(nr):
            gens.append(ctx.monomial(tuple(1 if k == i else 0 for k in range(nl)) + tuple(1 if k == j else 0 for k in range(nr))))
    return FibreProductPresentation(Ideal.make(ctx, gens), False, RS.ctx.variables, RT.ctx.variables)

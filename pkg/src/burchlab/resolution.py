"""Modules over a quotient algebra and their minimal free resolutions.

Everything is exact linear algebra over F_p: a module is a vector space with
one commuting action matrix per variable, a resolution step picks minimal
generators (a complement of mM chosen deterministically) and takes the kernel
of the induced map from a free module.  Syzygies keep their embedding into
the free cover, which is what the socle-split test needs.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .artinian import AlgebraElement, QuotientAlgebra
from .groebner import Ideal, PreconditionError
from .poly import Polynomial


class AlgebraModule:
    """A finitely generated module given by variable-action matrices."""

    def __init__(self, algebra: QuotientAlgebra, actions, label: str = "", check: bool = True):
        self.algebra = algebra
        self.p = algebra.p
        self.actions = [np.asarray(A, dtype=np.int64) % algebra.p for A in actions]
        if len(self.actions) != algebra.ctx.nvars:
            raise ValueError("need one action matrix per variable")
        self.dim = self.actions[0].shape[0] if self.actions else 0
        for A in self.actions:
            if A.shape != (self.dim, self.dim):
                raise ValueError("action matrices must be square of equal size")
        self.label = label
        self._mono_ops: list[np.ndarray | None] = [None] * algebra.dim
        self._resolution: "Resolution | None" = None
        if check:
            self._validate()

    def _validate(self) -> None:
        p = self.p
        for i in range(len(self.actions)):
            for j in range(i + 1, len(self.actions)):
                a = linalg.matmul(self.actions[i], self.actions[j], p)
                b = linalg.matmul(self.actions[j], self.actions[i], p)
                if not np.array_equal(a, b):
                    raise AssertionError("module actions do not commute")
        for g in self.algebra.ideal.groebner():
            if not np.array_equal(self.poly_operator(g) % p, np.zeros((self.dim, self.dim), dtype=np.int64)):
                raise AssertionError(f"relation {g} does not annihilate the module")

    def monomial_operator(self, b: int) -> np.ndarray:
        """Action of the b-th standard basis monomial of the algebra."""
        if self._mono_ops[b] is None:
            exps = self.algebra.basis[b]
            if sum(exps) == 0:
                op = linalg.identity(self.dim)
            else:
                i = next(k for k, e in enumerate(exps) if e)
                parent = tuple(e - 1 if k == i else e for k, e in enumerate(exps))
                op = linalg.matmul(
                    self.actions[i], self.monomial_operator(self.algebra.index[parent]), self.p
                )
            self._mono_ops[b] = op
        return self._mono_ops[b]

    def element_operator(self, a: AlgebraElement) -> np.ndarray:
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for b in np.nonzero(a.vec)[0]:
            out = (out + int(a.vec[b]) * self.monomial_operator(int(b))) % self.p
        return out

    def poly_operator(self, f: Polynomial) -> np.ndarray:
        """Evaluate a polynomial at the action matrices (no normal form)."""
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for exps, coeff in f.terms:
            term = linalg.identity(self.dim)
            for i, e in enumerate(exps):
                for _ in range(e):
                    term = linalg.matmul(self.actions[i], term, self.p)
            out = (out + coeff * term) % self.p
        return out

    def m_submodule(self) -> np.ndarray:
        """Basis of mM as a subspace of the module."""
        images = [linalg.matmul(A, linalg.identity(self.dim), self.p) for A in self.actions]
        return linalg.column_space_basis(linalg.hstack(images, self.dim), self.p)

    def min_gen_count(self) -> int:
        return self.dim - self.m_submodule().shape[1]

    def is_free(self) -> bool:
        res = self.resolution(1)
        return res.betti[1] == 0 and res.betti[0] * self.algebra.dim == self.dim

    def resolution(self, length: int) -> "Resolution":
        if self._resolution is None:
            self._resolution = Resolution(self)
        self._resolution.ensure_length(length)
        return self._resolution

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"AlgebraModule(dim={self.dim}{tag})"


def free_module(R: QuotientAlgebra, rank: int) -> AlgebraModule:
    blocks = []
    for M in R.mult:
        B = np.zeros((rank * R.dim, rank * R.dim), dtype=np.int64)
        for c in range(rank):
            B[c * R.dim : (c + 1) * R.dim, c * R.dim : (c + 1) * R.dim] = M
        blocks.append(B)
    return AlgebraModule(R, blocks, label=f"R^{rank}", check=False)


def module_from_cyclic(R: QuotientAlgebra, J: Ideal) -> AlgebraModule:
    """The cyclic module S/J as a module over R = S/I; requires I ⊆ J."""
    if J.ctx != R.ctx:
        raise ValueError("ideal from a different ring context")
    for g in R.ideal.gens:
        if not J.contains(g):
            raise PreconditionError("cyclic module needs J ⊇ I")
    Q = QuotientAlgebra(J)
    module = AlgebraModule(R, Q.mult, label=f"R/({', '.join(str(g) for g in J.gens)})", check=False)
    return module


def residue_field(R: QuotientAlgebra) -> AlgebraModule:
    n = R.ctx.nvars
    one = np.zeros((1, 1), dtype=np.int64)
    return AlgebraModule(R, [one.copy() for _ in range(n)], label="k", check=False)


def direct_sum(*modules: AlgebraModule) -> AlgebraModule:
    """Block-diagonal sum of modules over the same algebra."""
    if not modules:
        raise ValueError("direct sum of no modules")
    R = modules[0].algebra
    if any(M.algebra is not R for M in modules):
        raise ValueError("direct sum needs modules over the same algebra")
    total = sum(M.dim for M in modules)
    actions = []
    for v in range(R.ctx.nvars):
        A = np.zeros((total, total), dtype=np.int64)
        at = 0
        for M in modules:
            A[at : at + M.dim, at : at + M.dim] = M.actions[v]
            at += M.dim
        actions.append(A)
    label = " + ".join(M.label or "M" for M in modules)
    return AlgebraModule(R, actions, label=label, check=False)


# ---------------------------------------------------------------------------
# free-module coordinate helpers (component-major layout: index = c*dim + b)


def _apply_var(R: QuotientAlgebra, Z: np.ndarray, m: int, v: int) -> np.ndarray:
    """Multiply a batch of R^m coordinate vectors (columns of Z) by x_v."""
    d = R.dim
    s = Z.shape[1]
    if s == 0 or m == 0:
        return Z.copy()
    Z3 = Z.reshape(m, d, s).transpose(1, 0, 2).reshape(d, m * s)
    out = linalg.matmul(R.mult[v], Z3, R.p)
    return out.reshape(d, m, s).transpose(1, 0, 2).reshape(m * d, s)


def _m_multiples(R: QuotientAlgebra, Z: np.ndarray, m: int) -> np.ndarray:
    images = [_apply_var(R, Z, m, v) for v in range(R.ctx.nvars)]
    return linalg.column_space_basis(linalg.hstack(images, m * R.dim), R.p)


def _monomial_multiples(R: QuotientAlgebra, g: np.ndarray, m: int) -> np.ndarray:
    """(m·dim × dim) array whose b-th column is (basis monomial b)·g."""
    d = R.dim
    out = np.zeros((m * d, d), dtype=np.int64)
    out[:, 0] = g
    for b in range(1, d):
        exps = R.basis[b]
        i = next(k for k, e in enumerate(exps) if e)
        parent = R.index[tuple(e - 1 if k == i else e for k, e in enumerate(exps))]
        out[:, b] = _apply_var(R, out[:, parent].reshape(-1, 1), m, i).ravel()
    return out


def _free_map_matrix(R: QuotientAlgebra, gens: list[np.ndarray], m: int) -> np.ndarray:
    """Matrix of R^{len(gens)} -> R^m sending e_j to gens[j], as a linear map
    on coordinates (columns indexed by (j, basis monomial))."""
    blocks = [_monomial_multiples(R, g, m) for g in gens]
    return linalg.hstack(blocks, m * R.dim)


def lift_entry(R: QuotientAlgebra, vec: np.ndarray) -> Polynomial:
    return R.lift(vec)


# ---------------------------------------------------------------------------
# resolutions


@dataclass
class SyzygyModule:
    """Omega^i M embedded in its free cover R^{ambient_rank}."""

    algebra: QuotientAlgebra
    ambient_rank: int
    basis: np.ndarray  # (ambient_rank * dim) x s
    index: int
    of: AlgebraModule

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def min_gen_count(self) -> int:
        R = self.algebra
        mZ = _m_multiples_of_span(R, self.basis, self.ambient_rank)
        return self.dim - mZ.shape[1]


def _m_multiples_of_span(R: QuotientAlgebra, Z: np.ndarray, m: int) -> np.ndarray:
    images = [_apply_var(R, Z, m, v) for v in range(R.ctx.nvars)]
    return linalg.column_space_basis(linalg.hstack(images, m * R.dim), R.p)


def _adic_order(R: QuotientAlgebra, g: np.ndarray, m: int) -> int:
    """Smallest degree of a basis monomial supported by any entry of g."""
    best = R.dim
    for c in range(m):
        chunk = g[c * R.dim : (c + 1) * R.dim]
        for b in np.nonzero(chunk)[0]:
            best = min(best, sum(R.basis[int(b)]))
    return best


def _sort_generators(R: QuotientAlgebra, gens: list[np.ndarray], m: int) -> list[np.ndarray]:
    """Deterministic column order: lowest m-adic order first, ties broken by
    the first nonzero coordinate scanning components in order and monomials
    from highest to lowest (so x-entries precede y-entries)."""
    perm = _witness_coordinate_order(R, m)

    def key(g):
        scanned = g[perm]
        first = int(np.nonzero(scanned)[0][0])
        return (_adic_order(R, g, m), first)

    return sorted(gens, key=key)


class Resolution:
    """Minimal free resolution data: betti[i] and matrices ∂_1..∂_N.

    matrices[i] has shape (betti[i], betti[i+1], dim R): entry (r, j) is the
    coordinate vector of an algebra element, and ∂_{i+1} = matrices[i].
    """

    def __init__(self, module: AlgebraModule):
        self.module = module
        self.R = module.algebra
        self.betti: list[int] = []
        self.matrices: list[np.ndarray] = []
        self._omegas: list[np.ndarray] = []  # Omega^{i+1} basis, ambient R^{betti[i]}
        self._gens: list[list[np.ndarray]] = []
        self._start()

    def _start(self) -> None:
        M = self.module
        R = self.R
        mM = M.m_submodule()
        chosen = linalg.complete_columns(mM, linalg.identity(M.dim), R.p)
        gens = [np.eye(M.dim, dtype=np.int64)[:, j] for j in chosen]
        self.betti.append(len(gens))
        self.generator_vectors = gens
        if not gens:
            self._omegas.append(linalg.zeros(0, 0))
            return
        ops = [M.monomial_operator(b) for b in range(R.dim)]
        cols = []
        for g in gens:
            for b in range(R.dim):
                cols.append(linalg.matvec(ops[b], g, R.p))
        phi = np.stack(cols, axis=1) if cols else linalg.zeros(M.dim, 0)
        self._omegas.append(linalg.kernel_basis(phi, R.p))

    def ensure_length(self, length: int) -> None:
        while len(self.matrices) < length:
            self._step()

    def _step(self) -> None:
        R = self.R
        i = len(self.matrices)  # computing ∂_{i+1}
        m = self.betti[i]
        Z = self._omegas[i]
        if m == 0 or Z.shape[1] == 0:
            self.betti.append(0)
            self.matrices.append(np.zeros((m, 0, R.dim), dtype=np.int64))
            self._omegas.append(linalg.zeros(0, 0))
            self._gens.append([])
            return
        mZ = _m_multiples_of_span(R, Z, m)
        chosen = linalg.complete_columns(mZ, Z, R.p)
        gens = _sort_generators(R, [Z[:, j] for j in chosen], m)
        mu = len(gens)
        self.betti.append(mu)
        mat = np.zeros((m, mu, R.dim), dtype=np.int64)
        for j, g in enumerate(gens):
            mat[:, j, :] = g.reshape(m, R.dim)
        if mat.size and mat[:, :, 0].any():
            raise AssertionError("non-minimal resolution step: constant entry")
        self.matrices.append(mat)
        self._gens.append(gens)
        phi = _free_map_matrix(R, gens, m)
        self._omegas.append(linalg.kernel_basis(phi, R.p))

    def matrix(self, i: int) -> np.ndarray:
        """∂_i for i >= 1."""
        if i < 1 or i > len(self.matrices):
            raise IndexError(f"∂_{i} not computed")
        return self.matrices[i - 1]

    def syzygy(self, i: int) -> SyzygyModule:
        """Omega^i M with its embedding, for i >= 1."""
        if i < 1:
            raise PreconditionError("syzygy index must be >= 1")
        self.ensure_length(i)
        return SyzygyModule(self.R, self.betti[i - 1], self._omegas[i - 1], i, self.module)

    def entry_ideal(self, i: int) -> Ideal:
        """I_1(∂_i) lifted to S via standard-monomial representatives."""
        mat = self.matrix(i)
        R = self.R
        entries = []
        seen = set()
        for r in range(mat.shape[0]):
            for j in range(mat.shape[1]):
                f = R.lift(mat[r, j])
                if f.is_zero:
                    continue
                f = f.monic()
                if f not in seen:
                    seen.add(f)
                    entries.append(f)
        return Ideal.make(R.ctx, entries)

    def check_complex(self) -> None:
        """∂_i ∂_{i+1} = 0, with compositions evaluated on coordinates."""
        R = self.R
        for i in range(1, len(self.matrices)):
            prev_gens = self._gens[i - 1]
            m = self.betti[i - 1]
            for g in self._gens[i]:
                acc = np.zeros(m * R.dim, dtype=np.int64)
                for j, prev in enumerate(prev_gens):
                    coeff = g[j * R.dim : (j + 1) * R.dim]
                    for b in np.nonzero(coeff)[0]:
                        mult = _monomial_multiples(R, prev, m)[:, int(b)]
                        acc = (acc + int(coeff[b]) * mult) % R.p
                if acc.any():
                    raise AssertionError("∂∂ != 0")


def minimal_resolution(M: AlgebraModule, length: int) -> Resolution:
    return M.resolution(length)


def betti_numbers(M: AlgebraModule, length: int) -> tuple[int, ...]:
    res = M.resolution(length)
    return tuple(res.betti[: length + 1])


# ---------------------------------------------------------------------------
# socle-summand test


@dataclass
class SummandVerdict:
    splits: bool
    witness: np.ndarray | None  # ambient coordinate vector of the socle witness
    witness_entries: tuple | None  # polynomials, one per free component
    socle_dim: int
    # the split embedding k -> Z is 1 |-> witness when splits is True


def k_summand_test(Z: SyzygyModule) -> SummandVerdict:
    """True iff Soc Z is not inside mZ (then k -> Z, 1 |-> z splits, since Z
    is a submodule of a free module).  The witness is taken from a reduced
    echelon basis of Soc Z, preferring single-component vectors."""
    R = Z.algebra
    p = R.p
    m = Z.ambient_rank
    if Z.dim == 0:
        return SummandVerdict(False, None, None, 0)
    stacked = linalg.hstack([], 0)
    blocks = [_apply_var(R, Z.basis, m, v) for v in range(R.ctx.nvars)]
    stacked = np.concatenate(blocks, axis=0)
    coeffs = linalg.kernel_basis(stacked, p)
    soc = linalg.matmul(Z.basis, coeffs, p)
    socle_dim = soc.shape[1]
    if socle_dim == 0:
        return SummandVerdict(False, None, None, 0)
    # canonical echelon basis of the socle, scanning coordinates so that
    # higher monomials inside each free component come first
    perm = _witness_coordinate_order(R, m)
    reord = soc[perm, :]
    ech, _ = linalg.rref(reord.T, p)
    inv = np.argsort(perm)
    socle_vectors = [ech[r][inv] for r in range(ech.shape[0]) if ech[r].any()]
    mZ = _m_multiples_of_span(R, Z.basis, m)
    outside = [v for v in socle_vectors if not linalg.in_column_space(mZ, v, p)]
    if not outside:
        return SummandVerdict(False, None, None, socle_dim)
    outside.sort(key=lambda v: (np.count_nonzero(v.reshape(m, R.dim).any(axis=1)),))
    witness = outside[0]
    entries = tuple(R.lift(witness[c * R.dim : (c + 1) * R.dim]) for c in range(m))
    return SummandVerdict(True, witness, entries, socle_dim)


def _witness_coordinate_order(R: QuotientAlgebra, m: int) -> np.ndarray:
    """Coordinate scan order: by component, highest basis monomial first."""
    idx = []
    for c in range(m):
        for b in range(R.dim - 1, -1, -1):
            idx.append(c * R.dim + b)
    return np.array(idx, dtype=np.int64)


# ---------------------------------------------------------------------------
# Koszul homology, Tor, mapping cones


def _minimal_m_generators(R: QuotientAlgebra) -> list[AlgebraElement]:
    """Variable images forming a minimal generating set of the maximal ideal."""
    m2 = R.max_power_basis(2)
    var_vecs = np.stack([R.variable_element(i).vec for i in range(R.ctx.nvars)], axis=1)
    chosen = linalg.complete_columns(m2, var_vecs, R.p)
    return [R.variable_element(i) for i in chosen]


def koszul_h1(R: QuotientAlgebra) -> int:
    """dim H_1 of the Koszul complex on a minimal generating set of m."""
    if R.is_field:
        return 0
    gens = _minimal_m_generators(R)
    e = len(gens)
    d = R.dim
    p = R.p
    ops = [R.operator(g) for g in gens]
    d1 = linalg.hstack(ops, d)
    pairs = list(itertools.combinations(range(e), 2))
    d2 = np.zeros((e * d, len(pairs) * d), dtype=np.int64)
    for col, (i, j) in enumerate(pairs):
        d2[j * d : (j + 1) * d, col * d : (col + 1) * d] = ops[i]
        d2[i * d : (i + 1) * d, col * d : (col + 1) * d] = (-ops[j]) % p
    ker_d1 = e * d - linalg.rank(d1, p)
    return ker_d1 - (linalg.rank(d2, p) if pairs else 0)


def _tensor_map(res_matrix: np.ndarray, N: AlgebraModule) -> np.ndarray:
    """∂ ⊗ N as a matrix on coordinates of N^{betti} (component-major)."""
    m, mu, _ = res_matrix.shape
    dN = N.dim
    out = np.zeros((m * dN, mu * dN), dtype=np.int64)
    for r in range(m):
        for j in range(mu):
            coeff = res_matrix[r, j]
            if coeff.any():
                out[r * dN : (r + 1) * dN, j * dN : (j + 1) * dN] = N.element_operator(
                    N.algebra.element_from_vector(coeff)
                )
    return out


def tor(M: AlgebraModule, N: AlgebraModule, i: int) -> int:
    """dim_k Tor_i(M, N), computed from a minimal resolution of M."""
    if i < 0:
        raise PreconditionError("Tor index must be >= 0")
    res = M.resolution(i + 1)
    p = M.p
    dN = N.dim
    if i == 0:
        d1 = _tensor_map(res.matrix(1), N)
        return res.betti[0] * dN - linalg.rank(d1, p)
    if res.betti[i] == 0:
        return 0
    di = _tensor_map(res.matrix(i), N)
    dnext = _tensor_map(res.matrix(i + 1), N)
    return (res.betti[i] * dN - linalg.rank(di, p)) - linalg.rank(dnext, p)


def tor_profile(M: AlgebraModule, N: AlgebraModule, max_index: int) -> list[int]:
    """[dim Tor_i(M, N) for i = 0..max_index], sharing one resolution of M
    and one rank computation per differential."""
    res = M.resolution(max_index + 1)
    p = M.p
    dN = N.dim
    ranks = {}
    for i in range(1, max_index + 2):
        ranks[i] = linalg.rank(_tensor_map(res.matrix(i), N), p) if res.betti[i] else 0
    dims = [res.betti[0] * dN - ranks[1]]
    for i in range(1, max_index + 1):
        dims.append(res.betti[i] * dN - ranks[i] - ranks[i + 1])
    return dims


@dataclass
class MappingConeResult:
    module: AlgebraModule
    presentation: np.ndarray  # (b1+b0) x (b2+b1) x dim entries (element coords)
    entry_ideal: Ideal  # I_1 of the presentation, lifted to S
    dims_check: bool  # dim M(x) = dim M + dim Omega M


def mapping_cone_module(M: AlgebraModule, x: AlgebraElement) -> MappingConeResult:
    """M(x) = coker [[d2, x·I], [0, -d1]] for the start of a minimal
    resolution of M; sits in 0 -> ΩM -> M(x) -> M -> 0 and x ∈ I_1(M(x)) ⊆ m."""
    R = M.algebra
    p = R.p
    if x.is_zero or not x.in_max_ideal():
        raise PreconditionError("mapping cone element must be a nonzero element of m")
    if M.is_free():
        raise PreconditionError("mapping cone construction needs a nonfree module")
    res = M.resolution(2)
    b0, b1, b2 = res.betti[0], res.betti[1], res.betti[2]
    d = R.dim
    P = np.zeros((b1 + b0, b2 + b1, d), dtype=np.int64)
    P[:b1, :b2, :] = res.matrix(2)
    for j in range(b1):
        P[j, b2 + j, :] = x.vec
    P[b1:, b2:, :] = (-res.matrix(1)) % p
    module = module_from_presentation(R, P, label=f"cone({M.label or 'M'}; {x.to_polynomial()})")
    omega1_dim = res.syzygy(1).dim
    dims_ok = module.dim == M.dim + omega1_dim
    entries = []
    seen = set()
    for r in range(P.shape[0]):
        for j in range(P.shape[1]):
            f = R.lift(P[r, j])
            if not f.is_zero and f not in seen:
                seen.add(f)
                entries.append(f)
    I1 = Ideal.make(R.ctx, entries)
    return MappingConeResult(module, P, I1, dims_ok)


def module_from_presentation(R: QuotientAlgebra, P: np.ndarray, label: str = "") -> AlgebraModule:
    """Cokernel of the map R^cols -> R^rows with entry (r, j) given as an
    element coordinate vector P[r, j]."""
    rows, cols, d = P.shape
    if d != R.dim:
        raise ValueError("presentation entries must be algebra element vectors")
    # span of all basis-monomial multiples of the columns
    col_vecs = []
    for j in range(cols):
        g = P[:, j, :].reshape(rows * d)
        col_vecs.append(_monomial_multiples(R, g, rows))
    W = linalg.hstack(col_vecs, rows * d)
    ech, pivots = linalg.rref(W.T, R.p)
    ech_rows = [ech[r] for r in range(ech.shape[0]) if ech[r].any()]
    pivot_coords = list(pivots)
    free_coords = [c for c in range(rows * d) if c not in set(pivot_coords)]

    def project(v: np.ndarray) -> np.ndarray:
        v = v.copy() % R.p
        for row, c in zip(ech_rows, pivot_coords):
            if v[c]:
                v = (v - int(v[c]) * row) % R.p
        return v[free_coords]

    qdim = len(free_coords)
    actions = []
    for var in range(R.ctx.nvars):
        A = np.zeros((qdim, qdim), dtype=np.int64)
        for t, c in enumerate(free_coords):
            e = np.zeros(rows * d, dtype=np.int64)
            e[c] = 1
            image = _apply_var(R, e.reshape(-1, 1), rows, var).ravel()
            A[:, t] = project(image)
        actions.append(A)
    return AlgebraModule(R, actions, label=label, check=False)

"""Buchberger's algorithm and the ideal calculus used by the Burch tests.

The reduced Groebner basis is the canonical form of an ideal under a fixed
order, so equality, membership and colon computations all route through it.
Intersections use a single auxiliary elimination variable; colons by a
non-principal ideal intersect the principal colons.  First syzygies of a
homogeneous generating list are computed degree by degree with exact linear
algebra, which yields a minimal generating set directly (graded Nakayama)
instead of minimizing a Schreyer-style presentation afterwards.
"""
from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .poly import (
    Block,
    MonomialOrder,
    Polynomial,
    RingContext,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    monomials_of_degree,
)


class PreconditionError(ValueError):
    """An operation's stated precondition failed."""


# ---------------------------------------------------------------------------
# division / Buchberger


def normal_form(f: Polynomial, basis: list[Polynomial]) -> Polynomial:
    """Full remainder of f under multivariate division by `basis` (in order)."""
    ctx = f.ctx
    p = ctx.p
    work = dict(f.terms)
    remainder: dict = {}
    key = ctx.order.key
    lead = [(g.lead_exps, g) for g in basis if not g.is_zero]
    while work:
        exps = max(work, key=key)
        coeff = work.pop(exps)
        for le, g in lead:
            if mono_divides(le, exps):
                q_exps = mono_div(exps, le)
                q_coeff = (coeff * pow(g.lead_coeff, p - 2, p)) % p
                # subtract (q_coeff * x^q_exps) * g; the leading term cancels
                for ge, gc in g.terms[1:]:
                    e = mono_mul(ge, q_exps)
                    v = (work.get(e, 0) - q_coeff * gc) % p
                    if v:
                        work[e] = v
                    else:
                        work.pop(e, None)
                break
        else:
            remainder[exps] = coeff
    return Polynomial.from_dict(ctx, remainder)


def _spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    ctx = f.ctx
    lcm = mono_lcm(f.lead_exps, g.lead_exps)
    inv_f = ctx.field.inv(f.lead_coeff)
    inv_g = ctx.field.inv(g.lead_coeff)
    a = f.mul_term(mono_div(lcm, f.lead_exps), inv_f)
    b = g.mul_term(mono_div(lcm, g.lead_exps), inv_g)
    return a - b


def buchberger(gens: list[Polynomial], ctx: RingContext) -> list[Polynomial]:
    """A Groebner basis of (gens) under ctx.order (not yet reduced)."""
    basis = [g.monic() for g in gens if not g.is_zero]
    if not basis:
        return []
    key = ctx.order.key
    pairs: list = []
    processed: set[tuple[int, int]] = set()

    def push(i: int, j: int):
        lcm = mono_lcm(basis[i].lead_exps, basis[j].lead_exps)
        heapq.heappush(pairs, (key(lcm), i, j))

    for i, j in itertools.combinations(range(len(basis)), 2):
        push(i, j)

    while pairs:
        lcm_key, i, j = heapq.heappop(pairs)
        processed.add((i, j))
        fi, fj = basis[i], basis[j]
        lcm = mono_lcm(fi.lead_exps, fj.lead_exps)
        # coprime leading terms: S-polynomial reduces to zero
        if lcm == mono_mul(fi.lead_exps, fj.lead_exps):
            continue
        # chain criterion: some fk divides the lcm and both side pairs are done
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if mono_divides(basis[k].lead_exps, lcm):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in processed and b in processed:
                    skip = True
                    break
        if skip:
            continue
        r = normal_form(_spoly(fi, fj), basis)
        if r.is_zero:
            continue
        r = r.monic()
        basis.append(r)
        new = len(basis) - 1
        for k in range(new):
            push(k, new)
    return basis


def reduce_basis(basis: list[Polynomial], ctx: RingContext) -> tuple[Polynomial, ...]:
    """The reduced Groebner basis: monic, auto-reduced, sorted by leading term."""
    # drop elements whose lead is divisible by another lead
    basis = [g for g in basis if not g.is_zero]
    keep: list[Polynomial] = []
    for i, g in enumerate(basis):
        le = g.lead_exps
        redundant = False
        for j, h in enumerate(basis):
            if i == j:
                continue
            he = h.lead_exps
            if mono_divides(he, le) and (he != le or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    # tail-reduce every survivor against the others
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        reduced.append(normal_form(g, others).monic())
    reduced.sort(key=lambda g: ctx.order.key(g.lead_exps))
    return tuple(reduced)


def reduced_groebner(gens, ctx: RingContext) -> tuple[Polynomial, ...]:
    gb = reduce_basis(buchberger(list(gens), ctx), ctx)
    if any(g.total_degree() == 0 for g in gb):
        return (ctx.one(),)
    return gb


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class Ideal:
    """An ideal of F_p[x_1..x_n], cached reduced Groebner bases per order.

    Library operations may produce the unit ideal (e.g. a colon of an ideal
    by itself); user-entered generators are constrained to the maximal ideal
    at the parsing boundary instead.
    """

    ctx: RingContext
    gens: tuple[Polynomial, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.variables, self.gens))

    @staticmethod
    def make(ctx: RingContext, gens) -> "Ideal":
        cleaned = tuple(g for g in gens if not g.is_zero)
        for g in cleaned:
            if g.ctx != ctx:
                raise ValueError("generator from a different ring context")
        return Ideal(ctx, cleaned)

    @property
    def is_zero(self) -> bool:
        return not self.groebner()

    @property
    def contains_unit(self) -> bool:
        gb = self.groebner()
        return bool(gb) and gb[0].total_degree() == 0

    def in_max_ideal(self) -> bool:
        return all(g.constant_term == 0 for g in self.gens)

    def groebner(self, order: MonomialOrder | None = None) -> tuple[Polynomial, ...]:
        order = order or self.ctx.order
        if order not in self._cache:
            if order == self.ctx.order:
                gb = reduced_groebner(self.gens, self.ctx)
            else:
                ctx2 = self.ctx.with_order(order)
                gb2 = reduced_groebner([g.resort(ctx2) for g in self.gens], ctx2)
                gb = tuple(g.resort(self.ctx) for g in gb2)
            self._cache[order] = gb
        return self._cache[order]

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero:
            return True
        return normal_form(f, list(self.groebner())).is_zero

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, list(self.groebner()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ctx != other.ctx:
            raise ValueError("ideals from different ring contexts")
        return self.groebner() == other.groebner()

    def __le__(self, other: "Ideal") -> bool:
        return all(other.contains(g) for g in self.gens)

    def sum(self, other: "Ideal") -> "Ideal":
        return Ideal.make(self.ctx, self.gens + other.gens)

    def product(self, other: "Ideal") -> "Ideal":
        gens = [f * g for f in self.gens for g in other.gens]
        return Ideal.make(self.ctx, gens)

    def intersection(self, other: "Ideal") -> "Ideal":
        return ideal_intersection(self, other)

    def colon(self, other: "Ideal") -> "Ideal":
        return ideal_colon(self, other)

    def max_ideal(self) -> "Ideal":
        ctx = self.ctx
        return Ideal.make(ctx, [ctx.variable(i) for i in range(ctx.nvars)])

    def is_m_primary(self) -> bool:
        gb = self.groebner()
        if not gb:
            return False
        if self.contains_unit:
            return False
        covered = [False] * self.ctx.nvars
        for g in gb:
            le = g.lead_exps
            nz = [i for i, e in enumerate(le) if e]
            if len(nz) == 1:
                covered[nz[0]] = True
        return all(covered)

    def standard_monomials(self) -> tuple:
        """All monomials outside the leading-term ideal, ascending in the
        order; their count is the length of S/I.  Requires an m-primary ideal."""
        if not self.is_m_primary():
            raise PreconditionError("standard monomials need an m-primary ideal")
        gb = self.groebner()
        leads = [g.lead_exps for g in gb]
        bounds = []
        for i in range(self.ctx.nvars):
            pure = [le[i] for le in leads if all(e == 0 for j, e in enumerate(le) if j != i)]
            bounds.append(min(pure))
        out = []
        for exps in itertools.product(*[range(b) for b in bounds]):
            if not any(mono_divides(le, exps) for le in leads):
                out.append(exps)
        out.sort(key=self.ctx.order.key)
        return tuple(out)

    def length(self) -> int:
        return len(self.standard_monomials())

    def dim_in_degree(self, d: int) -> int:
        """dim_k of the degree-d graded piece (homogeneous ideals only)."""
        gb = self.groebner()
        leads = [g.lead_exps for g in gb]
        n = 0
        for exps in monomials_of_degree(self.ctx, d):
            if any(mono_divides(le, exps) for le in leads):
                n += 1
        return n

    def min_gen_count_graded(self) -> int:
        """mu(I) for a homogeneous ideal via graded piece ranks."""
        for g in self.gens:
            if not g.is_homogeneous():
                raise PreconditionError("graded mu needs homogeneous generators")
        if not self.gens:
            return 0
        dmax = max(g.total_degree() for g in self.gens)
        mI = self.max_ideal().product(self)
        return sum(self.dim_in_degree(d) - mI.dim_in_degree(d) for d in range(dmax + 1))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.gens)
        return f"Ideal({gens})"


def max_ideal(ctx: RingContext) -> Ideal:
    return Ideal.make(ctx, [ctx.variable(i) for i in range(ctx.nvars)])


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    return I == J


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    return I.product(J)


def _fresh_variable(ctx: RingContext) -> str:
    base = "t"
    k = 0
    while True:
        name = base if k == 0 else f"{base}{k}"
        if name not in ctx.variables:
            return name
        k += 1


def _extend_context(ctx: RingContext) -> RingContext:
    return RingContext(ctx.p, (_fresh_variable(ctx),) + ctx.variables, Block(1))


def _lift(f: Polynomial, ctx2: RingContext, tpow: int) -> Polynomial:
    terms = {(tpow,) + e: c for e, c in f.terms}
    return Polynomial.from_dict(ctx2, terms)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t·I + (1-t)·J."""
    if I.ctx != J.ctx:
        raise ValueError("ideals from different ring contexts")
    ctx = I.ctx
    if not I.gens or not J.gens:
        return Ideal.make(ctx, ())
    ctx2 = _extend_context(ctx)
    t_gens = [_lift(f, ctx2, 1) for f in I.gens]
    one_minus_t = [_lift(g, ctx2, 0) - _lift(g, ctx2, 1) for g in J.gens]
    gb = reduced_groebner(t_gens + one_minus_t, ctx2)
    out = []
    for g in gb:
        if all(e[0] == 0 for e, _ in g.terms):
            out.append(Polynomial.from_dict(ctx, {e[1:]: c for e, c in g.terms}))
    return Ideal.make(ctx, out)


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g when g divides f (guaranteed by membership f ∈ (g))."""
    ctx = f.ctx
    p = ctx.p
    work = dict(f.terms)
    quotient: dict = {}
    key = ctx.order.key
    inv_lead = ctx.field.inv(g.lead_coeff)
    while work:
        exps = max(work, key=key)
        coeff = work.pop(exps)
        if not mono_divides(g.lead_exps, exps):
            raise ValueError("exact division failed: input not a multiple")
        q_exps = mono_div(exps, g.lead_exps)
        q_coeff = (coeff * inv_lead) % p
        quotient[q_exps] = q_coeff
        for ge, gc in g.terms[1:]:
            e = mono_mul(ge, q_exps)
            v = (work.get(e, 0) - q_coeff * gc) % p
            if v:
                work[e] = v
            else:
                work.pop(e, None)
    return Polynomial.from_dict(ctx, quotient)


def ideal_colon_element(I: Ideal, g: Polynomial) -> Ideal:
    """(I : g) = (I ∩ (g)) / g."""
    if g.is_zero:
        raise PreconditionError("colon by zero element")
    meet = ideal_intersection(I, Ideal.make(I.ctx, (g,)))
    return Ideal.make(I.ctx, [exact_divide(h, g) for h in meet.gens])


def ideal_colon(I: Ideal, J: Ideal) -> Ideal:
    """(I : J) = {f : fJ ⊆ I}, via intersection of the principal colons."""
    if I.ctx != J.ctx:
        raise ValueError("ideals from different ring contexts")
    gens = [g for g in J.gens if not g.is_zero]
    if not gens:
        raise PreconditionError("colon by the zero ideal")
    result = ideal_colon_element(I, gens[0])
    for g in gens[1:]:
        result = ideal_intersection(result, ideal_colon_element(I, g))
    return result


# ---------------------------------------------------------------------------
# first syzygies of homogeneous generators


@dataclass(frozen=True)
class SyzygyMatrix:
    """Columns are minimal generators of the first syzygy module of `gens`."""

    ctx: RingContext
    gens: tuple[Polynomial, ...]
    columns: tuple  # tuple of tuples of Polynomial, each of length len(gens)
    minimized: bool = True

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.gens), len(self.columns))

    def entry(self, i: int, j: int) -> Polynomial:
        return self.columns[j][i]

    def check(self) -> None:
        zero = self.ctx.zero()
        for col in self.columns:
            acc = zero
            for f, h in zip(self.gens, col):
                acc = acc + f * h
            if not acc.is_zero:
                raise AssertionError("column is not a syzygy")


def _degree_basis(ctx: RingContext, d: int) -> tuple[list, dict]:
    monos = monomials_of_degree(ctx, d)
    return monos, {m: i for i, m in enumerate(monos)}


def syzygy_matrix(I: Ideal) -> SyzygyMatrix:
    """Minimal first syzygies of I's generator list (homogeneous, minimal).

    Works degree by degree: in degree t the syzygies are the kernel of the
    multiplication map ⊕_i S_{t-d_i} → S_t, and the new minimal generators
    are a complement of the span of x_j·(lower-degree syzygies).  The stop
    degree is certified by Schreyer's bound on the reduced Groebner basis.
    """
    ctx = I.ctx
    p = ctx.p
    gens = I.gens
    if not gens:
        return SyzygyMatrix(ctx, (), ())
    degs = []
    for g in gens:
        d = g.homogeneous_degree()
        if d is None:
            raise PreconditionError(f"non-homogeneous generator: {g}")
        degs.append(d)
    for i, g in enumerate(gens):
        others = Ideal.make(ctx, gens[:i] + gens[i + 1 :])
        if others.contains(g):
            raise PreconditionError(f"redundant generator: {g}")

    gb = I.groebner()
    bound = max(degs)
    for a, b in itertools.combinations(gb, 2):
        bound = max(bound, mono_degree(mono_lcm(a.lead_exps, b.lead_exps)))

    mu = len(gens)
    chosen: list[tuple[int, list[Polynomial]]] = []  # (degree, column)

    def col_index_map(t: int):
        """Coordinates of ⊕_i S_{t-d_i}: list of (i, mono) and lookup dict."""
        coords = []
        for i in range(mu):
            for m in monomials_of_degree(ctx, t - degs[i]):
                coords.append((i, m))
        return coords, {c: k for k, c in enumerate(coords)}

    def column_vector(col: list[Polynomial], t: int, lookup: dict) -> np.ndarray:
        v = np.zeros(len(lookup), dtype=np.int64)
        for i, h in enumerate(col):
            for e, c in h.terms:
                v[lookup[(i, e)]] = c
        return v

    prev_span: np.ndarray | None = None
    prev_coords: list = []
    for t in range(min(degs), bound + 1):
        coords, lookup = col_index_map(t)
        if not coords:
            continue
        row_monos, row_lookup = _degree_basis(ctx, t)
        # multiplication matrix: coordinate (i, m) maps to m * gens[i]
        M = np.zeros((len(row_monos), len(coords)), dtype=np.int64)
        for k, (i, m) in enumerate(coords):
            for e, c in gens[i].terms:
                M[row_lookup[mono_mul(e, m)], k] = c
        K = linalg.kernel_basis(M, p)
        # span of x_j * (syzygies of degree t-1), in degree-t coordinates
        carried = np.zeros((len(coords), 0), dtype=np.int64)
        if prev_span is not None and prev_span.shape[1]:
            cols = []
            for j in range(ctx.nvars):
                xj = ctx.var_exps(j)
                shifted = np.zeros((len(coords), prev_span.shape[1]), dtype=np.int64)
                for k, (i, m) in enumerate(prev_coords):
                    shifted[lookup[(i, mono_mul(m, xj))]] = prev_span[k]
                cols.append(shifted)
            carried = np.concatenate(cols, axis=1) % p
            carried = linalg.column_space_basis(carried, p)
        new_idx = linalg.complete_columns(carried, K, p)
        for j in new_idx:
            vec = K[:, j]
            col = [ctx.zero()] * mu
            parts: dict[int, dict] = {}
            for k, (i, m) in enumerate(coords):
                if vec[k]:
                    parts.setdefault(i, {})[m] = int(vec[k])
            for i, d in parts.items():
                col[i] = Polynomial.from_dict(ctx, d)
            chosen.append((t, col))
        span_cols = [carried] + [K[:, [j]] for j in new_idx]
        prev_span = linalg.hstack(span_cols, len(coords))
        prev_coords = coords

    matrix = SyzygyMatrix(ctx, gens, tuple(tuple(col) for _, col in chosen))
    matrix.check()
    for col in matrix.columns:
        for h in col:
            if not h.is_zero and h.constant_term:
                raise AssertionError("constant entry in a minimal syzygy matrix")
    return matrix


def entry_ideal(matrix) -> Ideal:
    """The ideal generated by all entries of a matrix over the ring."""
    if isinstance(matrix, SyzygyMatrix):
        ctx = matrix.ctx
        entries = [h for col in matrix.columns for h in col]
    else:
        rows = list(matrix)
        entries = [h for row in rows for h in row]
        if not entries:
            raise ValueError("cannot infer ring context from an empty matrix")
        ctx = entries[0].ctx
    seen = set()
    gens = []
    for h in entries:
        if h.is_zero:
            continue
        h = h.monic()
        if h not in seen:
            seen.add(h)
            gens.append(h)
    return Ideal.make(ctx, gens)

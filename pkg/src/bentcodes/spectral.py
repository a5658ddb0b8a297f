"""Walsh spectra over product spaces and certification of dual-bent conditions.

All spectra are exact: each value is an element of Z[zeta_p] stored as a row
of canonical coefficients (see ``cyclotomic``).  The fast transform runs a
length-p DFT along every F_p coordinate with respect to the plain dot
product, then re-indexes through the Gram matrix of the trace form
``<a, x> = sum_j Tr_1^{n_j}(a_j x_j)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Literal, Union

import numpy as np

from . import cyclotomic as cy
from .errors import ParamViolation, ZeroComponent
from .galois import (
    FieldDesc,
    SpaceSpec,
    embed_table,
    field_make,
    prime_field,
    tables,
    tower,
    trace_table,
)


# ---------------------------------------------------------------------------
# value types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PrimeVectorSpace:
    """The codomain F_p^m with the dot product; index = sum c_i p^i."""

    p: int
    m: int

    @property
    def size(self) -> int:
        return self.p**self.m

    @property
    def degree(self) -> int:
        return self.m

    def coords(self) -> np.ndarray:
        idx = np.arange(self.size, dtype=np.int64)
        return (idx[:, None] // (self.p ** np.arange(self.m))[None, :]) % self.p

    def encode(self, coords: np.ndarray) -> np.ndarray:
        return (np.asarray(coords, dtype=np.int64) % self.p) @ (self.p ** np.arange(self.m, dtype=np.int64))


Codomain = Union[FieldDesc, PrimeVectorSpace]


def codomain_degree(cod: Codomain) -> int:
    return cod.n if isinstance(cod, FieldDesc) else cod.m


def codomain_size(cod: Codomain) -> int:
    return cod.q if isinstance(cod, FieldDesc) else cod.size


@dataclass(frozen=True, eq=False)
class PAryFn:
    domain: SpaceSpec
    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=np.int64) % self.domain.p
        if vals.shape != (self.domain.size,):
            raise ParamViolation(f"table has {vals.shape} entries, expected {self.domain.size}")
        object.__setattr__(self, "values", vals)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PAryFn)
            and self.domain == other.domain
            and bool(np.array_equal(self.values, other.values))
        )


@dataclass(frozen=True, eq=False)
class VecFn:
    domain: SpaceSpec
    codomain: Codomain
    values: np.ndarray

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=np.int64)
        if vals.shape != (self.domain.size,):
            raise ParamViolation(f"table has {vals.shape} entries, expected {self.domain.size}")
        if vals.size and (vals.min() < 0 or vals.max() >= codomain_size(self.codomain)):
            raise ParamViolation("table values fall outside the codomain")
        object.__setattr__(self, "values", vals)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VecFn)
            and self.domain == other.domain
            and self.codomain == other.codomain
            and bool(np.array_equal(self.values, other.values))
        )


@dataclass(frozen=True)
class QuarticUnit:
    """An element of {1, -1, i, -i} stored as (sign, imaginary)."""

    sign: int = 1
    imaginary: bool = False

    def __mul__(self, other: "QuarticUnit") -> "QuarticUnit":
        flip = -1 if (self.imaginary and other.imaginary) else 1
        return QuarticUnit(self.sign * other.sign * flip, self.imaginary != other.imaginary)

    def __neg__(self) -> "QuarticUnit":
        return QuarticUnit(-self.sign, self.imaginary)

    def scale(self, s: int) -> "QuarticUnit":
        if s not in (1, -1):
            raise ValueError("only +1 and -1 can scale a quartic unit")
        return QuarticUnit(self.sign * s, self.imaginary)

    def __pow__(self, k: int) -> "QuarticUnit":
        k %= 4
        out = QuarticUnit()
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "QuarticUnit":
        return self**3

    @property
    def is_real(self) -> bool:
        return not self.imaginary

    def as_complex(self) -> complex:
        return complex(0, self.sign) if self.imaginary else complex(self.sign, 0)

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + ("i" if self.imaginary else "1")

    @classmethod
    def parse(cls, text: str) -> "QuarticUnit":
        text = text.strip()
        sign = -1 if text.startswith("-") else 1
        body = text.lstrip("+-")
        return cls(sign, body == "i")


def eps_of_prime(p: int) -> QuarticUnit:
    """1 when p = 1 (mod 4), sqrt(-1) when p = 3 (mod 4); 1 for p = 2 by convention."""
    return QuarticUnit(1, p % 4 == 3)


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    p: int
    n: int
    coeffs: np.ndarray  # shape (p^n, p-1), canonical

    def value(self, a: int) -> cy.CycloInt:
        return cy.to_cyclo(self.p, self.coeffs[a])

    def norms(self) -> np.ndarray:
        full = cy.expand(self.coeffs)
        return cy.canon(cy.mul_full(full, cy.conj_full(full)))

    def parseval_total(self) -> cy.CycloInt:
        tot = self.norms().astype(object).sum(axis=0)
        return cy.CycloInt(self.p, tuple(int(c) for c in tot))

    def parseval_ok(self) -> bool:
        return self.parseval_total() == cy.CycloInt.integer(self.p, self.p ** (2 * self.n))


@dataclass(frozen=True, eq=False)
class BentCert:
    is_bent: bool
    is_weakly_regular: bool
    eps: QuarticUnit | None = None
    dual: PAryFn | None = None
    odd_n_sign: int | None = None
    witness: int | None = None  # first point where a check failed


@dataclass(frozen=True, eq=False)
class ConditionReport:
    condition: Literal["I", "II", "III"]
    holds: bool
    eps_or_theta: QuarticUnit | None = None
    l_exponent: int | None = None
    d_exponent: int | None = None
    vectorial_dual: VecFn | None = None
    counterexample: tuple | None = None
    failed_clause: str | None = None
    exponent_pairs: tuple[tuple[int, int], ...] = field(default=())
    component_eps: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# transforms
# ---------------------------------------------------------------------------

def _work_dtype(p: int, n: int):
    return np.int64 if p ** (2 * n + 1) < 2**62 else object


def _dot_transform(values: np.ndarray, p: int, n: int) -> np.ndarray:
    """D[b] = sum_x zeta^{f(x) - b.x} in full coefficients, over canonical digits."""
    N = p**n
    A = np.zeros((N, p), dtype=_work_dtype(p, n))
    A[np.arange(N), values] = 1
    A = A.reshape((p,) * n + (p,))
    for axis in range(n):
        A = np.moveaxis(A, axis, 0)
        out = np.zeros_like(A)
        for a in range(p):
            for x in range(p):
                out[a] += np.roll(A[x], -a * x, axis=-1)
        A = np.moveaxis(out, 0, axis)
    return A.reshape(N, p)


def walsh(f: PAryFn) -> WalshSpectrum:
    """Exact Walsh spectrum W_f(a) = sum_x zeta^{f(x) - <a, x>}, fast method."""
    S = f.domain
    p, n = S.p, S.n
    D = _dot_transform(f.values, p, n)
    a_coords = S.coords()
    perm = S.encode_coords(a_coords @ S.gram().T)
    return WalshSpectrum(p, n, cy.canon(D[perm]))


def inner_table(S: SpaceSpec) -> np.ndarray:
    """<a, x> for all pairs by direct field multiplication and trace lookup."""
    pidx = S.part_indices()
    out = np.zeros((S.size, S.size), dtype=np.int64)
    for j, F in enumerate(S.fields):
        T = tables(F)
        tr = trace_table(tower(prime_field(S.p), F))
        prod = T.mul(pidx[:, j][:, None], pidx[:, j][None, :])
        out += tr[prod]
    return out % S.p


def walsh_naive(f: PAryFn) -> WalshSpectrum:
    """O(p^{2n}) reference transform; independent of the Gram re-indexing."""
    S = f.domain
    p = S.p
    ip = inner_table(S)
    expo = (f.values[None, :] - ip) % p
    full = np.zeros((S.size, p), dtype=np.int64)
    for k in range(p):
        full[:, k] = (expo == k).sum(axis=1)
    return WalshSpectrum(p, S.n, cy.canon(full))


def inverse_walsh_ok(f: PAryFn, W: WalshSpectrum) -> bool:
    """Check zeta^{f(x)} * p^n == sum_a W(a) zeta^{<a, x>} for every x."""
    S = f.domain
    p = S.p
    ip = inner_table(S)
    full = cy.expand(W.coeffs).astype(object)
    for x in range(S.size):
        acc = np.zeros(p, dtype=object)
        for k in range(p):
            sel = ip[:, x] == k
            if sel.any():
                acc += np.roll(full[sel].sum(axis=0), k)
        lhs = [0] * p
        lhs[int(f.values[x])] = p**S.n
        if cy.CycloInt.from_full(p, acc) != cy.CycloInt.from_full(p, lhs):
            return False
    return True


# ---------------------------------------------------------------------------
# bentness
# ---------------------------------------------------------------------------

def _magnitude_element(p: int, n: int) -> cy.CycloInt:
    if n % 2 == 0:
        return cy.CycloInt.integer(p, p ** (n // 2))
    return cy.gauss_sum(p).scale(p ** ((n - 1) // 2))


def bent_analyze(f: PAryFn, spectrum: WalshSpectrum | None = None) -> BentCert:
    """Exact bentness / weak-regularity certificate with the dual function."""
    S = f.domain
    p, n = S.p, S.n
    W = spectrum if spectrum is not None else walsh(f)
    norms = W.norms()
    target = np.zeros(p - 1, dtype=norms.dtype)
    target[0] = p**n
    bad = np.nonzero(~(norms == target).all(axis=1))[0]
    if bad.size:
        return BentCert(False, False, witness=int(bad[0]))
    if p == 2 and n % 2:
        return BentCert(True, False, witness=0)
    base = _magnitude_element(p, n)
    w0 = W.value(0)
    for s in (1, -1):
        cand = base.scale(s)
        if cy.match_unit_multiple(w0, cand) is not None:
            break
    else:
        return BentCert(True, False, witness=0)
    full = cy.expand(np.array([cand.coeffs], dtype=W.coeffs.dtype))[0]
    rows = np.stack([cy.canon(cy.shift_full(full, k)) for k in range(p)])  # (p, p-1)
    match = (W.coeffs[:, None, :] == rows[None, :, :]).all(axis=2)
    hits = match.sum(axis=1)
    bad = np.nonzero(hits != 1)[0]
    if bad.size:
        return BentCert(True, False, witness=int(bad[0]))
    dual = PAryFn(S, match.argmax(axis=1))
    eps = QuarticUnit(s, False) if n % 2 == 0 else QuarticUnit(s, p % 4 == 3)
    return BentCert(True, True, eps, dual, s if n % 2 else None)


# ---------------------------------------------------------------------------
# components and scalar actions
# ---------------------------------------------------------------------------

def codomain_dot(cod: Codomain, c: int | np.ndarray, y: np.ndarray) -> np.ndarray:
    """<c, y>_m: Tr_1^m(c y) for a field codomain, the dot product otherwise."""
    y = np.asarray(y, dtype=np.int64)
    if isinstance(cod, FieldDesc):
        tr = trace_table(tower(prime_field(cod.p), cod))
        return tr[tables(cod).mul(c, y)]
    C = cod.coords()
    return (C[c] * C[y]).sum(axis=-1) % cod.p


def component(F: VecFn, c) -> PAryFn:
    """F_c(x) = <c, F(x)>_m for a nonzero codomain element c (index or FieldElem)."""
    ci = int(c) if not hasattr(c, "index") else c.index
    if ci == 0:
        raise ZeroComponent("the component at c = 0 is not defined")
    return PAryFn(F.domain, codomain_dot(F.codomain, ci, F.values))


def scalar_action(S: SpaceSpec, t: int, a: int) -> np.ndarray:
    """Index of a*x for all x, where a is an index of F_{p^t} acting on every part."""
    sub = field_make(S.p, t)
    pidx = S.part_indices()
    cols = []
    for j, F in enumerate(S.fields):
        ea = embed_table(tower(sub, F))[a]
        cols.append(tables(F).mul(ea, pidx[:, j]))
    return S.join(np.stack(cols, axis=1))


def embed_scalar(sub: FieldDesc, cod: FieldDesc, a: int) -> int:
    return int(embed_table(tower(sub, cod))[a])


# ---------------------------------------------------------------------------
# conditions
# ---------------------------------------------------------------------------

def _param_check(S: SpaceSpec, cod: Codomain, which: str, t: int) -> None:
    p, n, m = S.p, S.n, codomain_degree(cod)

    def need(ok: bool, clause: str) -> None:
        if not ok:
            raise ParamViolation(f"Condition {which}: {clause} fails (p={p}, n={n}, m={m}, t={t})")

    need(all(nj % t == 0 for nj in S.parts), "t | n_j")
    if which == "I":
        need(n % 2 == 0, "2 | n")
        need(2 * t <= n, "t <= n/2")
        need(2 * m < n, "m < n/2")
        need(p != 2 or m >= 2, "m >= 2 when p = 2")
    elif which == "II":
        need(isinstance(cod, FieldDesc), "codomain is F_{p^m}")
        need(n % 2 == 0, "2 | n")
        need(m % t == 0, "t | m")
        need(2 * m < n, "m < n/2")
        need(p != 2 or (m >= 2 and 2 * (m + t) < n), "m >= 2 and m + t < n/2 when p = 2")
    elif which == "III":
        need(isinstance(cod, FieldDesc), "codomain is F_{p^m}")
        need(p % 2 == 1, "p odd")
        need(m % t == 0, "t | m")
        need((n - m) % 2 == 0, "2 | (n - m)")
        need(3 * m <= n, "3m <= n")
        need((n, p**t) != (3, 3), "(n, p^t) != (3, 3)")
    else:
        raise ParamViolation(f"unknown condition {which!r}")


def _reconstruct(cod: Codomain, duals: dict[int, np.ndarray], sigma: dict[int, int]) -> np.ndarray | None:
    """Find F* with <sigma(c), F*(x)> == duals[c](x) for all c, or None."""
    p, m = cod.p, codomain_degree(cod)
    inv_sigma = {v: k for k, v in sigma.items()}
    basis = [p**r for r in range(m)]
    std = [p**s for s in range(m)]
    Q = np.array([[int(codomain_dot(cod, b, np.array([e]))[0]) for e in std] for b in basis], dtype=np.int64)
    Qinv = _inv_mod_matrix(Q, p)
    H = np.stack([duals[inv_sigma[b]] for b in basis], axis=1)  # (N, m)
    ycoords = (H @ Qinv.T) % p
    Fstar = ycoords @ (p ** np.arange(m, dtype=np.int64))
    for c, table in duals.items():
        if not np.array_equal(codomain_dot(cod, sigma[c], Fstar), table):
            return None
    return Fstar


def _inv_mod_matrix(A: np.ndarray, p: int) -> np.ndarray:
    k = A.shape[0]
    M = np.concatenate([A % p, np.eye(k, dtype=np.int64)], axis=1)
    row = 0
    for col in range(k):
        piv = next(r for r in range(row, k) if M[r, col] % p)
        M[[row, piv]] = M[[piv, row]]
        M[row] = (M[row] * pow(int(M[row, col]), -1, p)) % p
        for r in range(k):
            if r != row and M[r, col]:
                M[r] = (M[r] - M[r, col] * M[row]) % p
        row += 1
    return M[:, k:]


def verify_condition(F: VecFn, which: Literal["I", "II", "III"], t: int) -> ConditionReport:
    """Exhaustively certify Condition I, II or III for F with base degree t."""
    S, cod = F.domain, F.codomain
    _param_check(S, cod, which, t)
    p, m = S.p, codomain_degree(cod)
    qm = codomain_size(cod)
    sub = field_make(p, t)

    def fail(clause: str, witness: tuple | None = None, **kw) -> ConditionReport:
        return ConditionReport(which, False, counterexample=witness, failed_clause=clause, **kw)

    # bentness and weak regularity of every component
    duals: dict[int, np.ndarray] = {}
    eps: dict[int, QuarticUnit] = {}
    for c in range(1, qm):
        cert = bent_analyze(component(F, c))
        if not cert.is_bent:
            return fail("component is bent", (c, cert.witness, None))
        if not cert.is_weakly_regular:
            return fail("component is weakly regular", (c, cert.witness, None))
        duals[c], eps[c] = cert.dual.values, cert.eps

    # sign pattern
    if which in ("I", "II"):
        e0 = eps[1]
        for c in range(1, qm):
            if eps[c] != e0 or not e0.is_real:
                return fail("constant real epsilon", (c, None, None), component_eps=eps)
        unit = e0
    else:
        eta = tables(cod).eta(np.arange(qm))
        theta = {c: eps[c].scale(int(eta[c])) for c in range(1, qm)}
        unit = theta[1]
        em = eps_of_prime(p) ** m
        for c in range(1, qm):
            if theta[c] != unit:
                return fail("epsilon_c = theta * eta_m(c) with constant theta", (c, None, None), component_eps=eps)
        if unit not in (em, -em):
            return fail("theta in {+eps^m, -eps^m}", None, component_eps=eps)

    # homogeneity F(ax) = a^l F(x)
    actions = {a: scalar_action(S, t, a) for a in range(1, sub.q)}
    if which == "I":
        for a, act in actions.items():
            bad = np.nonzero(F.values[act] != F.values)[0]
            if bad.size:
                return fail("F(ax) = F(x)", (None, a, int(bad[0])))
        Fstar = _reconstruct(cod, duals, {c: c for c in range(1, qm)})
        if Fstar is None:
            return fail("(F_c)* = (F*)_c")
        return ConditionReport(
            which, True, unit, 0, None, VecFn(S, cod, Fstar), component_eps=eps
        )

    if F.values[0] != 0:
        return fail("F(0) = 0", (None, None, 0))
    T = tables(cod)
    order_t = sub.q - 1
    l_meas = None
    for l in range(order_t):
        ok = True
        for a, act in actions.items():
            al = T.pow(embed_scalar(sub, cod, a), l)
            if not np.array_equal(F.values[act], T.mul(al, F.values)):
                ok = False
                break
        if ok:
            l_meas = l
            break
    if l_meas is None:
        return fail("F(ax) = a^l F(x) for some l", (None, 1, None))

    order_m = qm - 1
    pairs = []
    Fstar_first = None
    for d in range(order_m):
        if math.gcd(d - 1, order_m) != 1:
            continue
        l_full = (1 + pow(d - 1, -1, order_m)) % order_m
        if (l_full - l_meas) % order_t:
            continue
        sigma = {c: int(T.pow(c, (1 - d) % order_m)) for c in range(1, qm)}
        Fstar = _reconstruct(cod, duals, sigma)
        if Fstar is not None:
            pairs.append((l_full, d))
            if Fstar_first is None:
                Fstar_first = Fstar
    if not pairs:
        return fail("(F_c)* = (F*)_{c^{1-d}} with (l-1)(d-1) = 1", None, component_eps=eps)
    l0, d0 = pairs[0]
    return ConditionReport(
        which, True, unit, l0, d0, VecFn(S, cod, Fstar_first),
        exponent_pairs=tuple(pairs), component_eps=eps,
    )


def dual_for_exponent(F: VecFn, report: ConditionReport, d: int) -> VecFn:
    """The vectorial dual attached to a specific valid exponent d (Conditions II/III)."""
    cod = F.codomain
    qm = codomain_size(cod)
    T = tables(cod)
    duals = {c: bent_analyze(component(F, c)).dual.values for c in range(1, qm)}
    sigma = {c: int(T.pow(c, (1 - d) % (qm - 1))) for c in range(1, qm)}
    Fstar = _reconstruct(cod, duals, sigma)
    if Fstar is None:
        raise ParamViolation(f"d={d} is not a valid dual exponent")
    return VecFn(F.domain, cod, Fstar)


def components(F: VecFn) -> Iterable[tuple[int, PAryFn]]:
    for c in range(1, codomain_size(F.codomain)):
        yield c, component(F, c)

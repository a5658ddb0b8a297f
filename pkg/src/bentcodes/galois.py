"""Prime-power finite fields, subfield towers and product spaces.

Elements are coefficient tuples ``(c_0, ..., c_{n-1})`` with respect to the
polynomial basis ``1, x, ..., x^{n-1}`` modulo an explicit monic irreducible
polynomial.  Degree-one fields use the modulus ``x`` so that no separate
prime-field code path is needed.

Two layers live here:

* a pure-Python layer (``FieldElem``, ``embed``, ``trace_rel``) that is the
  reference semantics and the oracle for everything else, and
* a vectorised layer (``FieldTables``) that encodes elements as integers
  ``sum(c_i * p**i)`` and performs bulk arithmetic through log/antilog tables.

Inverse convention: ``inv(0) == 0``, i.e. ``x^{-1} = x^{q-2}``.
"""

from __future__ import annotations

import functools
import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np
from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from .errors import EvenCharacteristic, FieldMismatch, NotPrime, ParamViolation, Reducible

DATA_ENV_VAR = "BENTCODES_DATA_DIR"
POLY_TABLE_NAME = "irreducible_polys.txt"

_poly_table_override: Path | None = None


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (coefficients low -> high)
# ---------------------------------------------------------------------------

def _is_irreducible(modulus: Sequence[int], p: int) -> bool:
    return bool(gf_irreducible_p([int(c) for c in reversed(modulus)], p, ZZ))


def _polymulmod(a: Sequence[int], b: Sequence[int], modulus: Sequence[int], p: int) -> tuple[int, ...]:
    n = len(modulus) - 1
    prod = [0] * (2 * n - 1) if n > 0 else [0]
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
    # reduce by the monic modulus from the top down
    for k in range(len(prod) - 1, n - 1, -1):
        c = prod[k] % p
        if c:
            shift = k - n
            for i in range(n):
                prod[shift + i] -= c * modulus[i]
        prod[k] = 0
    return tuple(c % p for c in prod[:n])


def _digits(index: int, p: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        index, r = divmod(index, p)
        out.append(r)
    return tuple(out)


def _undigits(coeffs: Sequence[int], p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * p + int(c)
    return acc


# ---------------------------------------------------------------------------
# polynomial data file
# ---------------------------------------------------------------------------

def set_poly_table_path(path: str | os.PathLike | None) -> None:
    """Override the polynomial table location for the rest of the process."""
    global _poly_table_override
    _poly_table_override = Path(path) if path is not None else None
    _make_cached.cache_clear()


def poly_table_path() -> Path:
    if _poly_table_override is not None:
        return _poly_table_override
    env = os.environ.get(DATA_ENV_VAR)
    if env:
        return Path(env) / POLY_TABLE_NAME
    return Path(__file__).parent / "data" / POLY_TABLE_NAME


@functools.lru_cache(maxsize=8)
def load_poly_table(path: Path) -> dict[tuple[int, int], tuple[int, ...]]:
    """Parse lines ``p,n,c0,...,cn``; blank lines and ``#`` comments are skipped."""
    table: dict[tuple[int, int], tuple[int, ...]] = {}
    if not path.exists():
        return table
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        nums = [int(tok) for tok in line.split(",")]
        p, n, coeffs = nums[0], nums[1], tuple(nums[2:])
        if len(coeffs) != n + 1 or coeffs[-1] != 1:
            raise ValueError(f"{path}:{lineno}: expected {n + 1} coefficients ending in 1")
        table[(p, n)] = coeffs
    return table


def smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n.

    Candidates are ordered by the integer ``sum(c_i p^i)`` of their lower
    coefficients, i.e. ``c_{n-1}`` is compared first.
    """
    if n == 1:
        return (0, 1)
    for k in range(p**n):
        mod = _digits(k, p, n) + (1,)
        if mod[0] != 0 and _is_irreducible(mod, p):
            return mod
    raise AssertionError("unreachable: irreducibles exist in every degree")


# ---------------------------------------------------------------------------
# fields and elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldDesc:
    """The field F_{p^n} = F_p[x]/(modulus) with a fixed primitive element."""

    p: int
    n: int
    modulus: tuple[int, ...]
    primitive: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isprime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        if len(self.modulus) != self.n + 1 or self.modulus[-1] != 1:
            raise ParamViolation(f"modulus must be monic of degree {self.n}")
        if not _is_irreducible(self.modulus, self.p):
            raise Reducible(f"modulus {self.modulus} is reducible over F_{self.p}")
        if _multiplicative_order(self, self.primitive) != self.q - 1:
            raise ParamViolation(f"{self.primitive} is not a primitive element")

    @property
    def q(self) -> int:
        return self.p**self.n

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.n}; {self.modulus})"

    def elem(self, coeffs: Sequence[int]) -> "FieldElem":
        coeffs = tuple(int(c) % self.p for c in coeffs)
        if len(coeffs) != self.n:
            raise ParamViolation(f"expected {self.n} coefficients, got {len(coeffs)}")
        return FieldElem(self, coeffs)

    def from_index(self, index: int) -> "FieldElem":
        return FieldElem(self, _digits(index, self.p, self.n))

    def scalar(self, c: int) -> "FieldElem":
        return FieldElem(self, (c % self.p,) + (0,) * (self.n - 1))

    @property
    def zero(self) -> "FieldElem":
        return self.scalar(0)

    @property
    def one(self) -> "FieldElem":
        return self.scalar(1)

    @property
    def gen(self) -> "FieldElem":
        return FieldElem(self, self.primitive)

    def elements(self) -> Iterator["FieldElem"]:
        """All elements in counting order of their integer index."""
        for i in range(self.q):
            yield self.from_index(i)


@dataclass(frozen=True)
class FieldElem:
    field: FieldDesc
    coeffs: tuple[int, ...]

    # -- helpers -------------------------------------------------------------
    def _coerce(self, other: "FieldElem | int") -> "FieldElem":
        if isinstance(other, int):
            return self.field.scalar(other)
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other

    @property
    def index(self) -> int:
        return _undigits(self.coeffs, self.field.p)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other: "FieldElem | int") -> "FieldElem":
        o = self._coerce(other)
        p = self.field.p
        return FieldElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "FieldElem":
        p = self.field.p
        return FieldElem(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other: "FieldElem | int") -> "FieldElem":
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> "FieldElem":
        return self._coerce(other) - self

    def __mul__(self, other: "FieldElem | int") -> "FieldElem":
        o = self._coerce(other)
        F = self.field
        return FieldElem(F, _polymulmod(self.coeffs, o.coeffs, F.modulus, F.p))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "FieldElem":
        if k < 0:
            return self.inv() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inv(self) -> "FieldElem":
        """Multiplicative inverse with the convention inv(0) = 0."""
        return self ** (self.field.q - 2) if self.field.q > 2 else self

    def __truediv__(self, other: "FieldElem | int") -> "FieldElem":
        return self * self._coerce(other).inv()

    def frobenius(self) -> "FieldElem":
        return self ** self.field.p

    def __repr__(self) -> str:
        return f"<{self.coeffs} in GF({self.field.p}^{self.field.n})>"


def arith(op: str, x: FieldElem, y: FieldElem | int | None = None) -> FieldElem:
    """Dispatch form of the element operators: add, sub, mul, inv, pow, frobenius."""
    if op == "add":
        return x + x._coerce(y)
    if op == "sub":
        return x - x._coerce(y)
    if op == "mul":
        return x * x._coerce(y)
    if op == "inv":
        return x.inv()
    if op == "pow":
        return x ** int(y)
    if op == "frobenius":
        return x.frobenius()
    raise ParamViolation(f"unknown operation {op!r}")


def _multiplicative_order(F: FieldDesc, coeffs: tuple[int, ...]) -> int:
    x = FieldElem(F, coeffs)
    if x.is_zero():
        return 0
    order = F.q - 1
    for r in factorint(order):
        while order % r == 0 and (x ** (order // r)).coeffs == F.scalar(1).coeffs:
            order //= r
    return order


def multiplicative_order(x: FieldElem) -> int:
    return _multiplicative_order(x.field, x.coeffs)


def quad_character(x: FieldElem) -> int:
    """eta(x): 0 at zero, +1 on nonzero squares, -1 on non-squares."""
    F = x.field
    if F.p == 2:
        raise EvenCharacteristic("the quadratic character needs odd characteristic")
    if x.is_zero():
        return 0
    y = x ** ((F.q - 1) // 2)
    return 1 if y == F.one else -1


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def _find_primitive(p: int, n: int, modulus: tuple[int, ...]) -> tuple[int, ...]:
    q = p**n
    primes = list(factorint(q - 1))
    one = (1,) + (0,) * (n - 1)
    for k in range(1, q):
        cand = _digits(k, p, n)
        ok = True
        for r in primes:
            e = (q - 1) // r
            acc, base = one, cand
            while e:
                if e & 1:
                    acc = _polymulmod(acc, base, modulus, p)
                base = _polymulmod(base, base, modulus, p)
                e >>= 1
            if acc == one:
                ok = False
                break
        if ok:
            return cand
    raise AssertionError("unreachable: the multiplicative group is cyclic")


@functools.lru_cache(maxsize=None)
def _make_cached(p: int, n: int, modulus: tuple[int, ...] | None) -> FieldDesc:
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ParamViolation("extension degree must be >= 1")
    if modulus is None:
        modulus = load_poly_table(poly_table_path()).get((p, n)) or smallest_irreducible(p, n)
    else:
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise ParamViolation(f"modulus must be monic of degree {n}")
        if not _is_irreducible(modulus, p):
            raise Reducible(f"modulus {modulus} is reducible over F_{p}")
    return FieldDesc(p, n, modulus, _find_primitive(p, n, modulus))


def field_make(p: int, n: int, modulus: Sequence[int] | None = None) -> FieldDesc:
    """Build F_{p^n}; without a modulus, use the bundled table, then fall back to search."""
    return _make_cached(int(p), int(n), None if modulus is None else tuple(int(c) for c in modulus))


# ---------------------------------------------------------------------------
# towers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TowerMap:
    """Inclusion F_{p^t} -> F_{p^n} sending the subfield generator x to ``image_of_generator``."""

    sub: FieldDesc
    sup: FieldDesc
    image_of_generator: FieldElem

    def __post_init__(self) -> None:
        if self.sub.p != self.sup.p or self.sup.n % self.sub.n:
            raise FieldMismatch(f"{self.sub} is not a subfield of {self.sup}")
        if not _eval_poly(self.sub.modulus, self.image_of_generator).is_zero():
            raise ParamViolation("image_of_generator is not a root of the subfield modulus")

    @property
    def degree(self) -> int:
        return self.sup.n // self.sub.n


def _eval_poly(coeffs: Sequence[int], x: FieldElem) -> FieldElem:
    acc = x.field.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


@functools.lru_cache(maxsize=None)
def tower(sub: FieldDesc, sup: FieldDesc) -> TowerMap:
    """The canonical inclusion: the smallest-index root of sub's modulus inside sup."""
    if sub.p != sup.p or sup.n % sub.n:
        raise FieldMismatch(f"{sub} is not a subfield of {sup}")
    if sub.n == 1:
        return TowerMap(sub, sup, sup.zero)
    # the roots live in the copy of F_{p^t}, generated by w^((q-1)/(p^t-1))
    g = sup.gen ** ((sup.q - 1) // (sub.q - 1))
    cands, y = [], sup.one
    for _ in range(sub.q - 1):
        cands.append(y)
        y = y * g
    for y in sorted(cands, key=lambda e: e.index):
        if _eval_poly(sub.modulus, y).is_zero():
            return TowerMap(sub, sup, y)
    raise AssertionError("unreachable: an irreducible of degree t splits in F_{p^n}")


def embed(tm: TowerMap, x: FieldElem) -> FieldElem:
    if x.field != tm.sub:
        raise FieldMismatch(f"{x.field} is not {tm.sub}")
    return _eval_poly(x.coeffs, tm.image_of_generator)


@functools.lru_cache(maxsize=None)
def _embed_inverse(tm: TowerMap) -> dict[tuple[int, ...], tuple[int, ...]]:
    return {embed(tm, a).coeffs: a.coeffs for a in tm.sub.elements()}


def trace_sum(x: FieldElem, t: int) -> FieldElem:
    """sum_{i < n/t} x^{p^{t i}}, computed inside x's own field."""
    F = x.field
    if F.n % t:
        raise FieldMismatch(f"{t} does not divide {F.n}")
    acc, y = F.zero, x
    step = F.p**t
    for _ in range(F.n // t):
        acc = acc + y
        y = y**step
    return acc


def trace_rel(tm: TowerMap, x: FieldElem) -> FieldElem:
    """Relative trace Tr_t^n(x), returned in subfield coordinates."""
    if x.field != tm.sup:
        raise FieldMismatch(f"{x.field} is not {tm.sup}")
    y = trace_sum(x, tm.sub.n)
    return FieldElem(tm.sub, _embed_inverse(tm)[y.coeffs])


def prime_field(p: int) -> FieldDesc:
    return field_make(p, 1)


def absolute_trace(x: FieldElem) -> int:
    """Tr_1^n(x) as an integer residue."""
    F = x.field
    return trace_rel(tower(prime_field(F.p), F), x).coeffs[0]


# ---------------------------------------------------------------------------
# vectorised tables
# ---------------------------------------------------------------------------

class FieldTables:
    """Bulk arithmetic on integer-encoded elements of one field.

    ``exp[k]`` is the index of ``w^k`` and ``log[exp[k]] == k`` with
    ``log[0] == -1``.  ``coords[i]`` is the coefficient vector of index ``i``.
    """

    def __init__(self, F: FieldDesc):
        self.field = F
        p, n, q = F.p, F.n, F.q
        self.p, self.n, self.q = p, n, q
        self.weights = p ** np.arange(n, dtype=np.int64)
        idx = np.arange(q, dtype=np.int64)
        self.coords = (idx[:, None] // self.weights[None, :]) % p
        self.exp = self._build_exp()
        self.log = np.full(q, -1, dtype=np.int64)
        self.log[self.exp] = np.arange(q - 1, dtype=np.int64)

    def mul_matrix(self, c: FieldElem) -> np.ndarray:
        """n x n matrix M over F_p with coords(c*y) = M @ coords(y)."""
        F = self.field
        cols = []
        for s in range(F.n):
            basis = F.from_index(F.p**s)
            cols.append((c * basis).coeffs)
        return np.array(cols, dtype=np.int64).T

    def _build_exp(self) -> np.ndarray:
        F, p, q = self.field, self.p, self.q
        M = self.mul_matrix(F.gen)
        block = max(1, math.isqrt(q - 1))
        first = np.zeros((block, self.n), dtype=np.int64)
        v = np.array(F.one.coeffs, dtype=np.int64)
        for j in range(block):
            first[j] = v
            v = (M @ v) % p
        MB = np.eye(self.n, dtype=np.int64)
        for _ in range(block):
            MB = (M @ MB) % p
        rows, cur = [], first
        step = np.eye(self.n, dtype=np.int64)
        total = 0
        while total < q - 1:
            rows.append(cur)
            total += block
            step = (MB @ step) % p
            cur = (first @ step.T) % p
        allv = np.concatenate(rows)[: q - 1]
        return allv @ self.weights

    # -- encoding ------------------------------------------------------------
    def encode(self, coords: np.ndarray) -> np.ndarray:
        return (np.asarray(coords, dtype=np.int64) % self.p) @ self.weights

    def index(self, x: FieldElem) -> int:
        return x.index

    # -- arithmetic ----------------------------------------------------------
    def add(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        return self.encode(self.coords[a] + self.coords[b])

    def neg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        return self.encode(-self.coords[a])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        a, b = np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)
        la, lb = self.log[a], self.log[b]
        out = self.exp[(la + lb) % (self.q - 1)]
        return np.where((la < 0) | (lb < 0), 0, out)

    def pow(self, a, k: int):
        a = np.asarray(a, dtype=np.int64)
        la = self.log[a]
        out = self.exp[(la * (k % (self.q - 1))) % (self.q - 1)]
        if k == 0:
            return np.ones_like(a)
        return np.where(la < 0, 0, out)

    def inv(self, a):
        return self.pow(a, self.q - 2) if self.q > 2 else np.asarray(a, dtype=np.int64)

    def scalar_index(self, c: int) -> int:
        return c % self.p

    def eta(self, a):
        """Quadratic character of integer-encoded elements (odd p only)."""
        if self.p == 2:
            raise EvenCharacteristic("the quadratic character needs odd characteristic")
        la = self.log[np.asarray(a, dtype=np.int64)]
        return np.where(la < 0, 0, np.where(la % 2 == 0, 1, -1))


@functools.lru_cache(maxsize=None)
def tables(F: FieldDesc) -> FieldTables:
    return FieldTables(F)


@functools.lru_cache(maxsize=None)
def trace_matrix(tm: TowerMap) -> np.ndarray:
    """t x n matrix R with subcoords(Tr_t^n(y)) = R @ coords(y)."""
    F = tm.sup
    cols = [trace_rel(tm, F.from_index(F.p**s)).coeffs for s in range(F.n)]
    return np.array(cols, dtype=np.int64).T


@functools.lru_cache(maxsize=None)
def trace_table(tm: TowerMap) -> np.ndarray:
    """Sub-index of Tr_t^n(y) for every sup index y."""
    T = tables(tm.sup)
    R = trace_matrix(tm)
    return ((T.coords @ R.T) % tm.sup.p) @ tables(tm.sub).weights


@functools.lru_cache(maxsize=None)
def embed_table(tm: TowerMap) -> np.ndarray:
    """Sup-index of the image of every sub index."""
    return np.array([embed(tm, a).index for a in tm.sub.elements()], dtype=np.int64)


def subfield_trace(sup: FieldDesc, t: int) -> tuple[FieldDesc, np.ndarray]:
    """Convenience: the default F_{p^t} and the Tr_t^n table on sup."""
    sub = field_make(sup.p, t)
    return sub, trace_table(tower(sub, sup))


# ---------------------------------------------------------------------------
# product spaces
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpaceSpec:
    """V = F_{p^{n_1}} x ... x F_{p^{n_s}} with a canonical point order.

    Point indices are lexicographic over parts (part 0 most significant);
    within a part elements are in counting order of their integer index.
    """

    p: int
    parts: tuple[int, ...]
    t: int = 1
    fields: tuple[FieldDesc, ...] = field(default=(), compare=False)

    def __post_init__(self) -> None:
        if not self.parts:
            raise ParamViolation("a space needs at least one part")
        if any(nj % self.t for nj in self.parts):
            raise ParamViolation(f"t={self.t} must divide every part degree {self.parts}")
        if not self.fields:
            object.__setattr__(self, "fields", tuple(field_make(self.p, nj) for nj in self.parts))
        elif tuple(F.n for F in self.fields) != tuple(self.parts):
            raise ParamViolation("fields do not match part degrees")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def size(self) -> int:
        return self.p**self.n

    @property
    def part_sizes(self) -> tuple[int, ...]:
        return tuple(F.q for F in self.fields)

    def _strides(self) -> list[int]:
        strides, acc = [], 1
        for q in reversed(self.part_sizes):
            strides.append(acc)
            acc *= q
        return strides[::-1]

    def point(self, index: int) -> tuple[FieldElem, ...]:
        out = []
        for F, stride in zip(self.fields, self._strides()):
            out.append(F.from_index((index // stride) % F.q))
        return tuple(out)

    def index_of(self, point: Sequence[FieldElem]) -> int:
        return sum(x.index * s for x, s in zip(point, self._strides()))

    def points(self) -> Iterator[tuple[FieldElem, ...]]:
        for i in range(self.size):
            yield self.point(i)

    def part_indices(self) -> np.ndarray:
        """(size, s) array of per-part element indices in canonical order."""
        idx = np.arange(self.size, dtype=np.int64)
        cols = [(idx // s) % q for s, q in zip(self._strides(), self.part_sizes)]
        return np.stack(cols, axis=1)

    def join(self, part_idx: np.ndarray) -> np.ndarray:
        """Inverse of part_indices: combine per-part indices into point indices."""
        part_idx = np.asarray(part_idx, dtype=np.int64)
        return sum(part_idx[..., j] * s for j, s in enumerate(self._strides()))

    def coords(self) -> np.ndarray:
        """(size, n) array of F_p coordinates: parts in order, c_0 first within a part."""
        pidx = self.part_indices()
        return np.concatenate([tables(F).coords[pidx[:, j]] for j, F in enumerate(self.fields)], axis=1)

    def encode_coords(self, coords: np.ndarray) -> np.ndarray:
        coords = np.asarray(coords, dtype=np.int64) % self.p
        cols, off = [], 0
        for F in self.fields:
            cols.append(coords[..., off : off + F.n] @ tables(F).weights)
            off += F.n
        return self.join(np.stack(cols, axis=-1))

    def negation(self) -> np.ndarray:
        """Index of -x for every index x."""
        return self.encode_coords(-self.coords())

    def inner(self, a: Sequence[FieldElem], b: Sequence[FieldElem]) -> int:
        """<a, b> = sum_j Tr_1^{n_j}(a_j b_j) as an integer residue (pure reference)."""
        return sum(absolute_trace(x * y) for x, y in zip(a, b)) % self.p

    def gram(self) -> np.ndarray:
        """Gram matrix of the trace form in the coordinates of ``coords``."""
        blocks = []
        for F in self.fields:
            B = np.zeros((F.n, F.n), dtype=np.int64)
            for r in range(F.n):
                for s in range(F.n):
                    B[r, s] = absolute_trace(F.from_index(F.p**r) * F.from_index(F.p**s))
            blocks.append(B)
        out = np.zeros((self.n, self.n), dtype=np.int64)
        off = 0
        for B in blocks:
            k = B.shape[0]
            out[off : off + k, off : off + k] = B
            off += k
        return out


def space_make(p: int, parts: Sequence[int], t: int = 1) -> SpaceSpec:
    return SpaceSpec(int(p), tuple(int(n) for n in parts), int(t))

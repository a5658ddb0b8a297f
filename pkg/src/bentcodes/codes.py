"""Defining-set codes C_{D_{F,I}} and their exact weight distributions.

For a vectorial function F on V = F_{p^{n_1}} x ... x F_{p^{n_s}} and a subset I
of the codomain, the code is indexed by D = {x : F(x) in I} and consists of

    c_{alpha, beta} = ( sum_j Tr_t^{n_j}(alpha_j x_j) + beta )_{x in D}

for alpha in V and beta in F_{p^t}.

The weight enumeration never forms codewords one at a time.  The map
(alpha, x) -> sum_j Tr_t^{n_j}(alpha_j x_j) is F_p-bilinear, so for a block
of alphas the F_{p^t}-valued traces over all of D are one integer matrix
product.  A histogram of those values then gives the weights for every beta
at once.  Scaling alpha by a in F_{p^t}^* only permutes the histogram, so a
single representative per scalar orbit is enough.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Literal, Sequence

import numpy as np

from .errors import DivisibilityViolation, EmptySubset, FullSubset, ParamViolation
from .galois import FieldDesc, FieldTables, SpaceSpec, field_make, tables, tower, trace_table
from .spectral import Codomain, VecFn, codomain_size, scalar_action

# ---------------------------------------------------------------------------
# subsets of the codomain
# ---------------------------------------------------------------------------

SubsetVariant = Literal["zero", "single", "squares", "nonsquares", "coset", "explicit", "first"]


@dataclass(frozen=True)
class SubsetSpec:
    """A subset I of the codomain.

    ``first`` takes the ``count`` smallest nonzero indices, the convention used
    for "any I of size k avoiding F(0) = 0".
    """

    variant: SubsetVariant
    a: Any = None
    gamma: Any = None
    b: int | None = None
    elements: tuple = ()
    count: int | None = None

    def resolve(self, cod: Codomain) -> np.ndarray:
        from .catalog import resolve_coeff

        size = codomain_size(cod)
        v = self.variant
        if v == "zero":
            out = [0]
        elif v == "single":
            out = [_resolve_any(cod, self.a)]
        elif v == "explicit":
            out = [_resolve_any(cod, e) for e in self.elements]
            if len(set(out)) != len(out):
                raise ParamViolation("explicit subset has duplicates")
        elif v == "first":
            if self.count is None or not 1 <= self.count < size:
                raise ParamViolation("first:k needs 1 <= k < |codomain|")
            out = list(range(1, self.count + 1))
        elif v in ("squares", "nonsquares", "coset"):
            if not isinstance(cod, FieldDesc):
                raise ParamViolation(f"{v} needs a field codomain")
            T = tables(cod)
            q1 = cod.q - 1
            if v == "coset":
                b = int(self.b)
                if b < 1 or q1 % b:
                    raise ParamViolation(f"b={b} must divide p^m - 1 = {q1}")
                g = resolve_coeff(cod, self.gamma if self.gamma is not None else 1)
                if g == 0:
                    raise ParamViolation("gamma must be nonzero")
                out = sorted({int(T.mul(g, T.exp[(b * k) % q1])) for k in range(q1)})
            else:
                if cod.p == 2:
                    raise ParamViolation("squares/non-squares need odd characteristic")
                eta = T.eta(np.arange(cod.q))
                out = list(np.nonzero(eta == (1 if v == "squares" else -1))[0])
        else:
            raise ParamViolation(f"unknown subset variant {v!r}")
        return np.array(sorted(int(x) for x in out), dtype=np.int64)

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"variant": self.variant}
        for k in ("a", "gamma", "b", "count"):
            if getattr(self, k) is not None:
                d[k] = getattr(self, k)
        if self.elements:
            d["elements"] = list(self.elements)
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "SubsetSpec":
        d = dict(d)
        if "elements" in d:
            d["elements"] = tuple(d["elements"])
        return cls(**d)


def _resolve_any(cod: Codomain, spec: Any) -> int:
    from .catalog import resolve_coeff

    if isinstance(cod, FieldDesc):
        return resolve_coeff(cod, spec)
    if isinstance(spec, (list, tuple)):
        return int(cod.encode(np.array(spec)))
    return int(spec) % cod.size


def parse_subset(text: str) -> SubsetSpec:
    """Parse ``zero``, ``single:w^3``, ``squares``, ``nonsquares``, ``coset:b=4[,gamma=w]``,
    ``explicit:1,2,5`` or ``first:3``."""
    head, _, rest = text.partition(":")
    head = head.strip().lower()
    if head in ("zero", "squares", "nonsquares"):
        return SubsetSpec(head)  # type: ignore[arg-type]
    if head == "single":
        return SubsetSpec("single", a=_atom(rest))
    if head == "first":
        return SubsetSpec("first", count=int(rest))
    if head == "explicit":
        return SubsetSpec("explicit", elements=tuple(_atom(x) for x in rest.split(",") if x.strip()))
    if head == "coset":
        kv = dict(item.split("=", 1) for item in rest.split(",") if item.strip())
        return SubsetSpec("coset", gamma=_atom(kv.get("gamma", "1")), b=int(kv["b"]))
    raise ParamViolation(f"cannot parse subset {text!r}")


def _atom(tok: str) -> Any:
    tok = tok.strip()
    try:
        return int(tok)
    except ValueError:
        return tok


# ---------------------------------------------------------------------------
# defining sets and generator matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class DefiningSet:
    points: np.ndarray  # canonical point indices, ascending
    subset: np.ndarray  # codomain indices in I
    F: VecFn

    @property
    def size(self) -> int:
        return int(self.points.size)


def defining_set(F: VecFn, I: SubsetSpec | Sequence[int]) -> DefiningSet:
    idx = I.resolve(F.codomain) if isinstance(I, SubsetSpec) else np.array(sorted(set(int(i) for i in I)))
    size = codomain_size(F.codomain)
    if idx.size == 0:
        raise EmptySubset("I is empty")
    if idx.size >= size:
        raise FullSubset("I is the whole codomain")
    mask = np.isin(F.values, idx)
    return DefiningSet(np.nonzero(mask)[0].astype(np.int64), idx, F)


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A q-ary linear code, q = p^t, with generator entries as F_q indices."""

    p: int
    t: int
    generator: np.ndarray  # (k_rows, e)
    labels: np.ndarray | None = None  # defining-set points when built from F
    rank: int = field(default=-1)

    def __post_init__(self) -> None:
        G = np.asarray(self.generator, dtype=np.int64)
        object.__setattr__(self, "generator", G)
        if self.rank < 0:
            object.__setattr__(self, "rank", rank_fq(G, self.field))

    @property
    def field(self) -> FieldDesc:
        return field_make(self.p, self.t)

    @property
    def q(self) -> int:
        return self.p**self.t

    @property
    def length(self) -> int:
        return int(self.generator.shape[1])

    @property
    def dimension(self) -> int:
        return self.rank


def _check_t(S: SpaceSpec, t: int) -> None:
    if any(nj % t for nj in S.parts):
        raise DivisibilityViolation(f"t={t} must divide every part degree {S.parts}")


def _trace_forms(S: SpaceSpec, t: int) -> list[np.ndarray]:
    """B_k (n x n, block diagonal) with sub-coordinate k of sum_j Tr_t^{n_j}(a_j x_j) = a^T B_k x."""
    p = S.p
    sub = field_make(p, t)
    sub_coords = tables(sub).coords
    out = [np.zeros((S.n, S.n), dtype=np.int64) for _ in range(t)]
    off = 0
    for F in S.fields:
        T = tables(F)
        tr = trace_table(tower(sub, F))
        basis = p ** np.arange(F.n, dtype=np.int64)
        prod = T.mul(basis[:, None], basis[None, :])
        vals = sub_coords[tr[prod]]  # (n_j, n_j, t)
        for k in range(t):
            out[k][off : off + F.n, off : off + F.n] = vals[:, :, k]
        off += F.n
    return out


def linear_form_values(S: SpaceSpec, t: int, alpha: int) -> np.ndarray:
    """sum_j Tr_t^{n_j}(alpha_j x_j) for every x in S, as F_{p^t} indices."""
    _check_t(S, t)
    X = S.coords()
    a = X[alpha]
    out = np.zeros(S.size, dtype=np.int64)
    for k, B in enumerate(_trace_forms(S, t)):
        out += ((a @ B @ X.T) % S.p) * S.p**k
    return out


def generator_matrix(S: SpaceSpec, points: np.ndarray, t: int) -> np.ndarray:
    """Rows Tr_t^{n_j}(w_j^r x_j) for r < n_j / t (w_j the field's primitive element), then all ones."""
    _check_t(S, t)
    sub = field_make(S.p, t)
    pidx = S.part_indices()[points]
    rows = []
    for j, F in enumerate(S.fields):
        T = tables(F)
        tr = trace_table(tower(sub, F))
        for r in range(F.n // t):
            gamma = int(T.exp[r % (F.q - 1)])
            rows.append(tr[T.mul(gamma, pidx[:, j])])
    rows.append(np.ones(points.size, dtype=np.int64))
    return np.array(rows, dtype=np.int64)


def build_code(F: VecFn, I: SubsetSpec | Sequence[int], t: int) -> LinearCode:
    S = F.domain
    _check_t(S, t)
    D = defining_set(F, I)
    return LinearCode(S.p, t, generator_matrix(S, D.points, t), D.points)


# ---------------------------------------------------------------------------
# F_q linear algebra
# ---------------------------------------------------------------------------

def rank_fq(M: np.ndarray, F: FieldDesc) -> int:
    T = tables(F)
    A = np.array(M, dtype=np.int64, copy=True)
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        A[[r, piv]] = A[[piv, r]]
        A[r] = T.mul(T.inv(A[r, c]), A[r])
        for i in range(rows):
            if i != r and A[i, c]:
                A[i] = T.sub(A[i], T.mul(A[i, c], A[r]))
        r += 1
    return r


def gram_fq(G: np.ndarray, F: FieldDesc) -> np.ndarray:
    """G G^T over F_q."""
    T = tables(F)
    k = G.shape[0]
    out = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        prod = T.mul(G[i][None, :], G)  # (k, e)
        out[i] = T.encode(T.coords[prod].sum(axis=1))
    return out


def is_self_orthogonal(code: LinearCode) -> bool:
    return not gram_fq(code.generator, code.field).any()


# ---------------------------------------------------------------------------
# weight distributions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeightDist:
    pairs: tuple[tuple[int, int], ...]
    source: str = "enumeration"

    @classmethod
    def from_counts(cls, counts: dict[int, int], source: str = "enumeration") -> "WeightDist":
        return cls(tuple(sorted((int(w), int(a)) for w, a in counts.items() if a)), source)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    @property
    def total(self) -> int:
        return sum(a for _, a in self.pairs)

    @property
    def min_distance(self) -> int:
        return min(w for w, _ in self.pairs if w > 0)

    @property
    def nonzero_weights(self) -> list[int]:
        return [w for w, _ in self.pairs if w > 0]

    def __str__(self) -> str:
        return " + ".join("1" if w == 0 and a == 1 else f"{a}z^{w}" for w, a in self.pairs)

    def same_as(self, other: "WeightDist") -> bool:
        return self.pairs == other.pairs

    def to_dict(self) -> dict[str, Any]:
        return {"weights": [[w, a] for w, a in self.pairs], "source": self.source}


def _orbit_representatives(S: SpaceSpec, t: int) -> np.ndarray:
    """Smallest index in each F_{p^t}^* orbit of nonzero points."""
    q = S.p**t
    if q == 2:
        return np.arange(1, S.size, dtype=np.int64)
    gen_action = scalar_action(S, t, int(tables(field_make(S.p, t)).exp[1]))
    best = np.arange(S.size, dtype=np.int64)
    cur = best.copy()
    for _ in range(q - 2):
        cur = gen_action[cur]
        np.minimum(best, cur, out=best)
    reps = np.nonzero(best == np.arange(S.size))[0]
    return reps[reps != 0]


def _histograms(alpha_coords: np.ndarray, Y: np.ndarray, p: int, t: int, e: int) -> np.ndarray:
    """For each alpha row, counts of each F_{p^t} value over D (rows of length p^t)."""
    q = p**t
    N = alpha_coords.shape[0]
    prod = alpha_coords.astype(np.float64) @ Y  # exact: entries are tiny integers
    vals = np.rint(prod).astype(np.int64) % p
    label = vals[:, :e].copy()
    for k in range(1, t):
        label += vals[:, k * e : (k + 1) * e] * p**k
    label += (np.arange(N, dtype=np.int64) * q)[:, None]
    return np.bincount(label.ravel(), minlength=N * q).reshape(N, q)


def weight_distribution(
    F: VecFn,
    I: SubsetSpec | Sequence[int],
    t: int,
    *,
    use_orbits: bool = True,
    batch: int | None = None,
    workers: int = 1,
) -> WeightDist:
    """Exact weight distribution of C_{D_{F,I}} by per-alpha trace histograms."""
    S = F.domain
    _check_t(S, t)
    p, q = S.p, S.p**t
    D = defining_set(F, I)
    e = D.size
    X = S.coords()[D.points]  # (e, n)
    forms = _trace_forms(S, t)
    Y = np.concatenate([(B @ X.T) % p for B in forms], axis=1).astype(np.float64)  # (n, t*e)
    all_coords = S.coords()
    if use_orbits:
        alphas = _orbit_representatives(S, t)
        mult = q - 1
    else:
        alphas = np.arange(1, S.size, dtype=np.int64)
        mult = 1
    if batch is None:
        batch = max(1, min(4096, 2_000_000 // max(1, t * e)))
    chunks = [alphas[i : i + batch] for i in range(0, alphas.size, batch)]

    def work(chunk: np.ndarray) -> dict[int, int]:
        h = _histograms(all_coords[chunk], Y, p, t, e)
        w, c = np.unique(e - h, return_counts=True)
        return dict(zip(w.tolist(), c.tolist()))

    counts: dict[int, int] = {0: 1, e: q - 1}
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(work, chunks))
    else:
        parts = [work(c) for c in chunks]
    for part in parts:
        for w, c in part.items():
            counts[w] = counts.get(w, 0) + mult * c
    # a non-injective (alpha, beta) -> codeword map hits every codeword equally often
    k_param = S.n // t + 1
    rank = rank_fq(generator_matrix(S, D.points, t), field_make(p, t))
    if rank < k_param:
        fold = q ** (k_param - rank)
        counts = {w: c // fold for w, c in counts.items()}
    return WeightDist.from_counts(counts)


def code_weight_distribution(code: LinearCode) -> WeightDist:
    """Brute-force enumerator over all q^k messages (small codes only; an oracle)."""
    T = tables(code.field)
    G = code.generator
    k, e = G.shape
    q = code.q
    if q**k > 2_000_000:
        raise ParamViolation("brute-force enumeration is limited to 2e6 codewords")
    counts: dict[int, int] = {}
    for msg in itertools.product(range(q), repeat=k):
        acc = np.zeros(e, dtype=np.int64)
        for c, row in zip(msg, G):
            if c:
                acc = T.add(acc, T.mul(c, row))
        w = int(np.count_nonzero(acc))
        counts[w] = counts.get(w, 0) + 1
    fold = q ** (k - code.rank)
    return WeightDist.from_counts({w: c // fold for w, c in counts.items()})


# ---------------------------------------------------------------------------
# dual distance
# ---------------------------------------------------------------------------

def _normalize_columns(C: np.ndarray, T: FieldTables) -> np.ndarray:
    """Scale each nonzero column (row of C) so its first nonzero entry is 1."""
    nz = C != 0
    first = nz.argmax(axis=1)
    lead = C[np.arange(C.shape[0]), first]
    scale = T.inv(lead)
    out = T.mul(scale[:, None], C)
    out[~nz.any(axis=1)] = 0
    return out


def _encode_rows(C: np.ndarray, q: int) -> np.ndarray:
    k = C.shape[1]
    if q**k < 2**62:
        w = q ** np.arange(k, dtype=np.int64)
        return C @ w
    return np.array([hash(tuple(r)) for r in C.tolist()], dtype=np.int64)


def dual_distance_upto(code: LinearCode, cap: int = 3) -> tuple[int, bool]:
    """(d, exact): the dual distance if it is <= cap, else (cap + 1, False) as a lower bound."""
    if cap not in (2, 3, 4):
        raise ParamViolation("cap must be 2, 3 or 4")
    T = tables(code.field)
    q = code.q
    C = code.generator.T  # columns as rows, (e, k)
    if not C.any(axis=1).all():
        return 1, True
    N = _normalize_columns(C, T)
    codes_ = _encode_rows(N, q)
    uniq, first_idx = np.unique(codes_, return_index=True)
    if uniq.size < codes_.size:
        return 2, True
    if cap == 2:
        return 3, False
    U = N[np.sort(first_idx)]
    lookup = np.sort(_encode_rows(U, q))
    e = U.shape[0]
    scalars = np.arange(1, q, dtype=np.int64)
    for i in range(e - 1):
        rest = U[i + 1 :]
        for lam in scalars:
            comb = T.add(U[i][None, :], T.mul(lam, rest))
            comb_n = _normalize_columns(comb, T)
            keys = _encode_rows(comb_n, q)
            pos = np.searchsorted(lookup, keys)
            pos[pos >= lookup.size] = 0
            if (lookup[pos] == keys).any():
                return 3, True
    if cap == 3:
        return 4, False
    # four dependent columns <=> two disjoint pairs spanning the same projective point
    seen: dict[int, list[tuple[int, int]]] = {}
    for i in range(e - 1):
        rest = U[i + 1 :]
        for lam in scalars:
            comb = _normalize_columns(T.add(U[i][None, :], T.mul(lam, rest)), T)
            keys = _encode_rows(comb, q)
            for off, key in enumerate(keys.tolist()):
                j = i + 1 + off
                bucket = seen.setdefault(key, [])
                for a, b in bucket:
                    if len({a, b, i, j}) == 4:
                        return 4, True
                bucket.append((i, j))
    return 5, False


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

def code_report(code: LinearCode, wd: WeightDist | None = None, dual: tuple[int, bool] | None = None) -> dict[str, Any]:
    out: dict[str, Any] = {
        "q": code.q,
        "length": code.length,
        "dimension": code.dimension,
        "weights": [[w, a] for w, a in wd.pairs] if wd else None,
        "self_orthogonal": is_self_orthogonal(code),
        "dual_distance": None,
    }
    if dual is not None:
        out["dual_distance"] = dual[0] if dual[1] else f">={dual[0]}"
    return out

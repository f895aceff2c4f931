"""Classical linear and additive codes over GF(q).

Covers duals and hulls under the Euclidean, Hermitian, trace-Hermitian,
trace-alternating and symplectic pairings, exact minimum-weight search
with an enumeration budget, the coordinate bridge Phi between symplectic
vectors in F_q^{2n} and additive codes in F_{q^2}^n, and the line-oriented
code file format.

Additive codes (F_q-linear subsets of F_{q^2}^n) are canonicalized and
row-reduced in their Phi-preimage, where they are plain F_q-linear; one
kernel routine then serves every dual.
"""

from __future__ import annotations

import hashlib
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from . import fmatrix
from .errors import (
    CodeFileError,
    DimensionMismatch,
    EmptyDifference,
    NotNested,
    OddLength,
    StabforgeError,
    WrongFieldOrder,
    ZeroCode,
)
from .fmatrix import FqMatrix
from .gf import Field, field_make, field_of_order

DEFAULT_BUDGET = 1 << 26

EXACT = "exact"
LOWER_BOUND = "lower_bound"

LINEAR = "linear"
ADDITIVE = "additive"
SYMPLECTIC = "symplectic"

INNER_PRODUCTS = (
    "euclidean",
    "trace_euclidean",
    "hermitian",
    "trace_hermitian",
    "trace_alternating",
    "symplectic",
)


# ---------------------------------------------------------------------------
# quadratic extensions and the Phi bridge


class QuadExt:
    """GF(q^2) over GF(q) with the fixed basis {1, gamma}, gamma = x.

    Provides the coordinate maps behind Phi: (a|b) in F_q^{2n} maps to
    a + gamma*b in F_{q^2}^n, an isometry from quantum weight to Hamming
    weight.
    """

    def __init__(self, big: Field):
        if big.m % 2:
            raise WrongFieldOrder(f"GF({big.q}) is not of square order")
        self.big = big
        self.sub = field_make(big.p, big.m // 2)
        self.fwd, self.back = big.embedding(self.sub)
        self.gamma = big.x.rep
        conj_gamma = big.conj(self.gamma)
        if big.sub(self.gamma, conj_gamma) == 0:
            raise WrongFieldOrder("gamma is fixed by conjugation; not a basis generator")
        self._split: dict[int, tuple[int, int]] = {}
        for a in self.sub.elements():
            for b in self.sub.elements():
                v = big.add(self.fwd[a], big.mul(self.gamma, self.fwd[b]))
                self._split[v] = (a, b)
        if len(self._split) != big.q:
            raise RuntimeError("{1, gamma} is not a basis")

    def compose(self, a: int, b: int) -> int:
        """Subfield pair (a, b) -> a + gamma*b in the big field."""
        return self.big.add(self.fwd[a], self.big.mul(self.gamma, self.fwd[b]))

    def split(self, v: int) -> tuple[int, int]:
        """Big-field residue -> its (a, b) coordinates over the subfield."""
        return self._split[v]

    def phi(self, w) -> tuple[int, ...]:
        """(a_1..a_n | b_1..b_n) over F_q  ->  (a_i + gamma b_i) over F_q^2."""
        n = len(w) // 2
        return tuple(self.compose(w[i], w[n + i]) for i in range(n))

    def phi_inv(self, u) -> tuple[int, ...]:
        pairs = [self.split(x) for x in u]
        return tuple(p[0] for p in pairs) + tuple(p[1] for p in pairs)


@lru_cache(maxsize=None)
def quad_ext(big: Field) -> QuadExt:
    return QuadExt(big)


def quad_ext_of(sub: Field) -> QuadExt:
    """The quadratic extension sitting above a base field."""
    return quad_ext(field_make(sub.p, 2 * sub.m))


# ---------------------------------------------------------------------------
# pairings


def euclidean_pair(f: Field, u, v) -> int:
    return f.dot(u, v)


def hermitian_pair(f: Field, u, v) -> int:
    """sum u_i v_i^s with s = sqrt(q); requires square order."""
    if f.m % 2:
        raise WrongFieldOrder(f"Hermitian pairing needs square order, got GF({f.q})")
    half = f.m // 2
    acc = 0
    for x, y in zip(u, v):
        acc = f.add(acc, f.mul(x, f.frob(y, half)))
    return acc


def trace_hermitian_pair(f: Field, u, v) -> int:
    """Trace of the Hermitian pairing down to GF(sqrt(q)), as a subfield residue."""
    ext = quad_ext(f)
    return f.trace_to(hermitian_pair(f, u, v), ext.sub)


def trace_alternating_pair(f: Field, u, v) -> int:
    """(u.v^s - u^s.v) / (gamma - gamma^s), a subfield residue.

    The quotient is fixed by conjugation, hence lands in GF(sqrt(q)).
    """
    ext = quad_ext(f)
    half = f.m // 2
    num = 0
    for x, y in zip(u, v):
        num = f.add(num, f.sub(f.mul(x, f.frob(y, half)), f.mul(f.frob(x, half), y)))
    denom = f.sub(ext.gamma, f.frob(ext.gamma, half))
    val = f.div(num, denom)
    return ext.back[val]


def symplectic_pair(f: Field, u, v) -> int:
    """b.a' - b'.a for u = (a|b), v = (a'|b'); zero iff the lifted error
    operators commute."""
    if len(u) % 2 or len(u) != len(v):
        raise OddLength("symplectic pairing needs two vectors of equal even length")
    n = len(u) // 2
    acc = 0
    for i in range(n):
        acc = f.add(acc, f.sub(f.mul(u[n + i], v[i]), f.mul(v[n + i], u[i])))
    return acc


# ---------------------------------------------------------------------------
# code objects


class LinearCode:
    """A linear (or additive-over-the-index-2-subfield) code, held as a
    canonical rref generator matrix.

    For additive codes the canonical form is computed in the Phi-preimage;
    `k_dim` counts dimension over the linearity field (the field itself
    for linear codes, GF(sqrt(q)) for additive ones).
    """

    def __init__(self, field: Field, n: int, gen: FqMatrix, linearity: str = LINEAR):
        self.field = field
        self.n = n
        self.linearity = linearity
        self.gen = gen
        self.k_dim = gen.nrows
        if linearity == LINEAR:
            _, _, self._pivots = fmatrix.rref(gen)
            self._pre = None
        else:
            ext = quad_ext(field)
            pre = fmatrix.matrix(ext.sub, [ext.phi_inv(r) for r in gen.rows], 2 * n)
            self._pre, _, self._pivots = fmatrix.rref(pre)

    @property
    def is_additive(self) -> bool:
        return self.linearity == ADDITIVE

    @property
    def size_exponent(self) -> int:
        """log over the linearity field of |C|."""
        return self.k_dim

    def contains(self, v) -> bool:
        if self.is_additive:
            ext = quad_ext(self.field)
            return fmatrix.in_span(self._pre, self._pivots, ext.phi_inv(v))
        return fmatrix.in_span(self.gen, self._pivots, v)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.field is other.field
            and self.n == other.n
            and self.linearity == other.linearity
            and self.gen.rows == other.gen.rows
        )

    def __hash__(self):
        return hash((id(self.field), self.n, self.linearity, self.gen.rows))

    def __repr__(self) -> str:
        f = self.field.q
        if self.is_additive:
            return f"AdditiveCode(GF({f}), n={self.n}, log_size={self.k_dim})"
        return f"LinearCode(GF({f}), [{self.n},{self.k_dim}])"


class SymplecticCode(LinearCode):
    """A linear code in F_q^{2n} whose columns split as (a|b)."""

    def __init__(self, field: Field, n: int, gen: FqMatrix):
        if n % 2:
            raise OddLength("symplectic codes need an even number of columns")
        super().__init__(field, n, gen, LINEAR)

    @property
    def half(self) -> int:
        """Number of qudit positions."""
        return self.n // 2

    def self_orthogonality_witness(self) -> tuple[int, int, int] | None:
        """First generator pair with nonzero pairing, or None."""
        rows = self.gen.rows
        for i in range(len(rows)):
            for j in range(i, len(rows)):
                v = symplectic_pair(self.field, rows[i], rows[j])
                if v:
                    return (i, j, v)
        return None

    def is_self_orthogonal(self) -> bool:
        return self.self_orthogonality_witness() is None

    def __repr__(self) -> str:
        return f"SymplecticCode(GF({self.field.q}), n={self.half}, dim={self.k_dim})"


def linear_code(field: Field, rows, n: int | None = None) -> LinearCode:
    """Linear code from spanning rows (need not be independent)."""
    if n is None:
        rows = list(rows)
        if not rows:
            raise DimensionMismatch("length required for a code with no generators")
        n = len(rows[0])
    M = fmatrix.matrix(field, rows, n)
    R, _, _ = fmatrix.rref(M)
    return LinearCode(field, n, R, LINEAR)


def symplectic_code(field: Field, rows, half: int | None = None) -> SymplecticCode:
    """Symplectic code from rows of length 2n over F_q."""
    rows = list(rows)
    if half is None:
        if not rows:
            raise DimensionMismatch("qudit count required for an empty symplectic code")
        if len(rows[0]) % 2:
            raise OddLength("symplectic rows must have even length")
        half = len(rows[0]) // 2
    M = fmatrix.matrix(field, rows, 2 * half)
    R, _, _ = fmatrix.rref(M)
    return SymplecticCode(field, 2 * half, R)


def additive_code(field: Field, rows, n: int | None = None) -> LinearCode:
    """Additive code over a square-order field from subfield-spanning rows."""
    ext = quad_ext(field)
    rows = list(rows)
    if n is None:
        if not rows:
            raise DimensionMismatch("length required for a code with no generators")
        n = len(rows[0])
    pre = fmatrix.matrix(ext.sub, [ext.phi_inv(tuple(int(x) for x in r)) for r in rows], 2 * n)
    R, _, _ = fmatrix.rref(pre)
    fwd = fmatrix.matrix(field, [ext.phi(r) for r in R.rows], n) if R.rows else fmatrix.zeros(field, 0, n)
    return LinearCode(field, n, fwd, ADDITIVE)


def as_additive(C: LinearCode) -> LinearCode:
    """View a linear code over GF(q^2) as an additive code."""
    if C.is_additive:
        return C
    ext = quad_ext(C.field)
    rows = []
    for r in C.gen.rows:
        rows.append(r)
        rows.append(tuple(C.field.mul(ext.gamma, x) for x in r))
    return additive_code(C.field, rows, C.n)


def phi_code(C: SymplecticCode) -> LinearCode:
    """Phi image of a symplectic code: an additive code over GF(q^2)."""
    ext = quad_ext_of(C.field)
    rows = [ext.phi(r) for r in C.gen.rows]
    return additive_code(ext.big, rows, C.half)


def phi_inv_code(C: LinearCode) -> SymplecticCode:
    """Phi preimage of an additive (or linear, viewed additively) code."""
    A = as_additive(C)
    return SymplecticCode(quad_ext(A.field).sub, 2 * A.n, A._pre)


def phi_map(x, field: Field | None = None):
    """Phi on a symplectic code, or on an (a|b) vector given the target
    square-order field."""
    if isinstance(x, SymplecticCode):
        return phi_code(x)
    if field is None:
        raise WrongFieldOrder("vector form needs the target GF(q^2)")
    return quad_ext(field).phi(tuple(int(v) for v in x))


def phi_inv_map(x, field: Field | None = None):
    """Inverse of phi_map; `field` is the GF(q^2) the vector lives in."""
    if isinstance(x, LinearCode):
        return phi_inv_code(x)
    if field is None:
        raise WrongFieldOrder("vector form needs its GF(q^2)")
    return quad_ext(field).phi_inv(tuple(int(v) for v in x))


def is_subcode(B: LinearCode, A: LinearCode) -> bool:
    """Whether every generator of B lies in the span of A."""
    if A.field is not B.field or A.n != B.n:
        raise DimensionMismatch("codes live in different ambient spaces")
    if A.is_additive or B.is_additive:
        A2, B2 = as_additive(A), as_additive(B)
        return all(A2.contains(r) for r in B2.gen.rows)
    return all(A.contains(r) for r in B.gen.rows)


# ---------------------------------------------------------------------------
# duals and hulls


def _dual_linear_kernel(C: LinearCode, constraint: FqMatrix) -> FqMatrix:
    return fmatrix.kernel(constraint)


def dual(C: LinearCode, ip: str) -> LinearCode:
    """Dual code under the named pairing.

    Trace pairings on additive input (and trace_alternating generally)
    return additive codes; the classical pairings require linear input.
    """
    f = C.field
    if ip not in INNER_PRODUCTS:
        raise StabforgeError(f"unknown inner product {ip!r}")
    if ip == "symplectic":
        if C.is_additive:
            raise StabforgeError("symplectic dual applies to F_q^{2n} codes")
        if C.n % 2:
            raise OddLength(f"symplectic dual needs even length, got {C.n}")
        half = C.n // 2
        constraint = []
        for r in C.gen.rows:
            a, b = r[:half], r[half:]
            constraint.append(tuple(b) + tuple(f.neg(x) for x in a))
        K = fmatrix.kernel(fmatrix.matrix(f, constraint, C.n)) if constraint else fmatrix.rref(fmatrix.identity(f, C.n))[0]
        return SymplecticCode(f, C.n, K)
    if ip in ("euclidean", "trace_euclidean"):
        if C.is_additive:
            raise StabforgeError(f"{ip} dual is defined here for linear codes only")
        K = fmatrix.kernel(C.gen) if C.gen.rows else fmatrix.rref(fmatrix.identity(f, C.n))[0]
        return LinearCode(f, C.n, K, LINEAR)
    if ip == "hermitian":
        if C.is_additive:
            raise StabforgeError("hermitian dual is defined here for linear codes only")
        if f.m % 2:
            raise WrongFieldOrder(f"hermitian dual needs square order, got GF({f.q})")
        conj_gen = fmatrix.entrywise_frob(C.gen, f.m // 2)
        K = fmatrix.kernel(conj_gen) if conj_gen.rows else fmatrix.rref(fmatrix.identity(f, C.n))[0]
        return LinearCode(f, C.n, K, LINEAR)
    # trace_hermitian / trace_alternating: compute over the subfield
    if f.m % 2:
        raise WrongFieldOrder(f"{ip} dual needs square order, got GF({f.q})")
    ext = quad_ext(f)
    pair = trace_hermitian_pair if ip == "trace_hermitian" else trace_alternating_pair
    A = as_additive(C)
    # one subfield-linear constraint per generator; unknowns are the
    # Phi-preimage coordinates of the dual vector
    units = [tuple(ext.phi(tuple(1 if i == j else 0 for j in range(2 * C.n)))) for i in range(2 * C.n)]
    constraint = []
    for g in A.gen.rows:
        constraint.append(tuple(pair(f, g, u) for u in units))
    if constraint:
        K = fmatrix.kernel(fmatrix.matrix(ext.sub, constraint, 2 * C.n))
    else:
        K = fmatrix.rref(fmatrix.identity(ext.sub, 2 * C.n))[0]
    return additive_code(f, [ext.phi(r) for r in K.rows], C.n)


def hull(C: LinearCode, ip: str) -> LinearCode:
    """C intersected with its dual under the named pairing."""
    D = dual(C, ip)
    if C.is_additive or D.is_additive:
        A, B = as_additive(C), as_additive(D)
        inter = fmatrix.intersect(A._pre, B._pre)
        ext = quad_ext(C.field)
        return additive_code(C.field, [ext.phi(r) for r in inter.rows], C.n)
    inter = fmatrix.intersect(C.gen, D.gen)
    if isinstance(C, SymplecticCode) and isinstance(D, SymplecticCode):
        return SymplecticCode(C.field, C.n, inter)
    return LinearCode(C.field, C.n, inter, LINEAR)


def sum_code(A: LinearCode, B: LinearCode) -> LinearCode:
    """Span of the union of two codes of the same kind."""
    if A.field is not B.field or A.n != B.n:
        raise DimensionMismatch("codes live in different ambient spaces")
    if A.is_additive or B.is_additive:
        return additive_code(A.field, list(as_additive(A).gen.rows) + list(as_additive(B).gen.rows), A.n)
    return linear_code(A.field, list(A.gen.rows) + list(B.gen.rows), A.n)


# ---------------------------------------------------------------------------
# minimum-weight enumeration


@dataclass(frozen=True)
class DistanceResult:
    """Minimum-weight verdict: exact value or a certified lower bound."""

    value: int
    status: str
    witness: tuple[int, ...] | None = None
    visited: int = 0

    @property
    def is_exact(self) -> bool:
        return self.status == EXACT


def _pack_msb(row, ncols: int) -> int:
    v = 0
    for j, x in enumerate(row):
        if x:
            v |= 1 << (ncols - 1 - j)
    return v


def _unpack_msb(v: int, ncols: int) -> tuple[int, ...]:
    return tuple((v >> (ncols - 1 - j)) & 1 for j in range(ncols))


def _search_gf2(rows, ncols, quantum_half, budget, exclude):
    """Minimum weight over nonzero span of packed GF(2) rows.

    `exclude` is an optional (packed rref rows, pivot masks) pair whose
    span is skipped.  Returns (value, status, witness_packed, visited).
    Rows must come from a reduced echelon generator so the layered floor
    argument is valid.
    """
    k = len(rows)
    mask = (1 << quantum_half) - 1 if quantum_half else 0

    def weight(v: int) -> int:
        if quantum_half:
            return ((v >> quantum_half) | (v & mask)).bit_count()
        return v.bit_count()

    def in_excluded(v: int) -> bool:
        if exclude is None:
            return False
        ex_rows, ex_piv = exclude
        for row, pb in zip(ex_rows, ex_piv):
            if v & pb:
                v ^= row
        return v == 0

    best_w = ncols + 1
    best_v = None
    visited = 0
    total = (1 << k) - 1
    if total <= budget:
        cw = 0
        prev = 0
        for t in range(1, total + 1):
            gray = t ^ (t >> 1)
            idx = (gray ^ prev).bit_length() - 1
            prev = gray
            cw ^= rows[idx]
            visited += 1
            w = weight(cw)
            if w < best_w or (w == best_w and best_v is not None and cw < best_v):
                if not in_excluded(cw):
                    best_w, best_v = w, cw
        return best_w, EXACT, best_v, visited

    # budget too small for the full span: walk message-weight layers and
    # keep the information-set floor for whatever stays unexplored
    t = 1
    while t <= k:
        layer = math.comb(k, t)
        if visited + layer > budget:
            break
        for combo in itertools.combinations(range(k), t):
            cw = 0
            for i in combo:
                cw ^= rows[i]
            visited += 1
            w = weight(cw)
            if w < best_w or (w == best_w and best_v is not None and cw < best_v):
                if not in_excluded(cw):
                    best_w, best_v = w, cw
        t += 1
    if t > k:
        return best_w, EXACT, best_v, visited
    # unexplored combinations touch >= t pivot columns
    floor = -(-t // 2) if quantum_half else t
    return min(best_w, floor), LOWER_BOUND, None, visited


def _np_weights(W, quantum_half):
    if quantum_half:
        return ((W[:, :quantum_half] != 0) | (W[:, quantum_half:] != 0)).sum(axis=1)
    return (W != 0).sum(axis=1)


def _search_gfq(field, gen: FqMatrix, quantum_half, budget, exclude):
    """Table-driven minimum weight for q > 2, block-vectorized."""
    import numpy as np

    add_t, mul_t = field.np_tables()
    rows = np.array(gen.rows, dtype=np.uint8)
    k, ncols = rows.shape
    q = field.q

    def in_excluded(vec) -> bool:
        if exclude is None:
            return False
        ex, piv = exclude
        return fmatrix.in_span(ex, piv, tuple(int(x) for x in vec))

    best_w = ncols + 1
    best_v: tuple[int, ...] | None = None
    visited = 0

    def consider(W, weights):
        nonlocal best_w, best_v, visited
        visited += len(weights)
        cap = best_w
        idx = np.nonzero(weights <= cap)[0]
        for i in idx:
            w = int(weights[i])
            vec = tuple(int(x) for x in W[i])
            if w < best_w or (w == best_w and best_v is not None and vec < best_v):
                if not in_excluded(vec):
                    best_w, best_v = w, vec

    def words_for(messages):
        W = np.zeros((len(messages), ncols), dtype=np.uint8)
        for i in range(k):
            contrib = mul_t[messages[:, i]][:, rows[i]]
            W = add_t[W, contrib]
        return W

    total = q**k - 1
    block = 8192
    if total <= budget:
        for start in range(1, q**k, block):
            stop = min(start + block, q**k)
            idx = np.arange(start, stop, dtype=np.int64)
            messages = np.empty((len(idx), k), dtype=np.int64)
            rem = idx.copy()
            for i in range(k):
                messages[:, i] = rem % q
                rem //= q
            W = words_for(messages)
            consider(W, _np_weights(W, quantum_half))
        return best_w, EXACT, best_v, visited

    t = 1
    while t <= k:
        layer = math.comb(k, t) * (q - 1) ** t
        if visited + layer > budget:
            break
        patterns = (q - 1) ** t
        for combo in itertools.combinations(range(k), t):
            for start in range(0, patterns, block):
                stop = min(start + block, patterns)
                idx = np.arange(start, stop, dtype=np.int64)
                messages = np.zeros((len(idx), k), dtype=np.int64)
                rem = idx.copy()
                for pos in combo:
                    messages[:, pos] = rem % (q - 1) + 1
                    rem //= q - 1
                W = words_for(messages)
                consider(W, _np_weights(W, quantum_half))
        t += 1
    if t > k:
        return best_w, EXACT, best_v, visited
    floor = -(-t // 2) if quantum_half else t
    return min(best_w, floor), LOWER_BOUND, None, visited


def _run_search(field, gen: FqMatrix, quantum_half: int, budget: int, exclude):
    if field.q == 2:
        rows = [_pack_msb(r, gen.ncols) for r in gen.rows]
        packed_exclude = None
        if exclude is not None:
            ex, piv = exclude
            packed_exclude = (
                [_pack_msb(r, gen.ncols) for r in ex.rows],
                [1 << (gen.ncols - 1 - c) for c in piv],
            )
        w, status, wit, visited = _search_gf2(rows, gen.ncols, quantum_half, budget, packed_exclude)
        witness = _unpack_msb(wit, gen.ncols) if wit is not None else None
        return w, status, witness, visited
    return _search_gfq(field, gen, quantum_half, budget, exclude)


def _weight_domain(C: LinearCode, wfn: str):
    """Map a (code, weight) request onto an enumeration domain.

    Returns (field, gen, quantum_half, to_public) where to_public maps a
    domain witness back to a codeword of C.
    """
    if wfn == "quantum":
        if not isinstance(C, SymplecticCode):
            raise StabforgeError("quantum weight needs a symplectic column layout")
        return C.field, C.gen, C.half, lambda v: v
    if wfn != "hamming":
        raise StabforgeError(f"unknown weight function {wfn!r}")
    if C.is_additive:
        ext = quad_ext(C.field)
        return ext.sub, C._pre, C.n, ext.phi
    return C.field, C.gen, 0, lambda v: v


def min_weight(C: LinearCode, wfn: str = "hamming", budget: int = DEFAULT_BUDGET) -> DistanceResult:
    """Minimum weight over the nonzero codewords of C."""
    if C.k_dim == 0:
        raise ZeroCode("the zero code has no nonzero codeword")
    field, gen, half, to_public = _weight_domain(C, wfn)
    w, status, wit, visited = _run_search(field, gen, half, budget, None)
    witness = to_public(wit) if wit is not None else None
    return DistanceResult(w, status, witness, visited)


def min_weight_diff(
    A: LinearCode, B: LinearCode, wfn: str = "hamming", budget: int = DEFAULT_BUDGET
) -> DistanceResult:
    """Minimum weight over A minus B, enumerating A and skipping members
    of B (membership tested against the row-reduced basis of B)."""
    if not is_subcode(B, A):
        raise NotNested("second code is not a subcode of the first")
    if wfn == "hamming" and (A.is_additive or B.is_additive):
        A, B = as_additive(A), as_additive(B)
        genB = B._pre
    else:
        genB = B.gen
    field, gen, half, to_public = _weight_domain(A, wfn)
    if genB.nrows >= gen.nrows:
        raise EmptyDifference("codes are equal; the difference is empty")
    exB, _, pivB = fmatrix.rref(genB)
    w, status, wit, visited = _run_search(field, gen, half, budget, (exB, pivB))
    witness = to_public(wit) if wit is not None else None
    return DistanceResult(w, status, witness, visited)


def quantum_weight(vec) -> int:
    """Number of qudit positions touched by a symplectic vector (a|b)."""
    n = len(vec) // 2
    return sum(1 for i in range(n) if vec[i] or vec[n + i])


def hamming_weight(vec) -> int:
    return sum(1 for x in vec if x)


# ---------------------------------------------------------------------------
# file format


def dump_code(C: LinearCode) -> str:
    if isinstance(C, SymplecticCode):
        kind, length = SYMPLECTIC, C.half
    elif C.is_additive:
        kind, length = ADDITIVE, C.n
    else:
        kind, length = LINEAR, C.n
    lines = [f"field GF({C.field.q})", f"length {length}", f"kind {kind}"]
    if kind == ADDITIVE:
        # gamma is pinned by the fixed modulus; recorded for reproducibility
        lines.append(f"# gamma residue {quad_ext(C.field).gamma}")
    lines.append("rows")
    for r in C.gen.rows:
        lines.append(" ".join(str(x) for x in r))
    return "\n".join(lines) + "\n"


def parse_code(text: str, name: str = "<string>") -> LinearCode:
    field = None
    length = None
    kind = None
    rows = []
    in_rows = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if in_rows:
            try:
                rows.append(tuple(int(tok) for tok in line.split()))
            except ValueError:
                raise CodeFileError(f"{name}:{lineno}: row entries must be integers")
            continue
        if line.startswith("field"):
            tok = line.split(None, 1)[1].strip() if " " in line else ""
            if not (tok.startswith("GF(") and tok.endswith(")")):
                raise CodeFileError(f"{name}:{lineno}: expected 'field GF(q)'")
            try:
                field = field_of_order(int(tok[3:-1]))
            except (ValueError, StabforgeError) as e:
                raise CodeFileError(f"{name}:{lineno}: bad field order ({e})")
        elif line.startswith("length"):
            try:
                length = int(line.split()[1])
            except (IndexError, ValueError):
                raise CodeFileError(f"{name}:{lineno}: expected 'length n'")
        elif line.startswith("kind"):
            kind = line.split()[1] if len(line.split()) > 1 else ""
            if kind not in (LINEAR, ADDITIVE, SYMPLECTIC):
                raise CodeFileError(f"{name}:{lineno}: kind must be linear|additive|symplectic")
        elif line == "rows":
            in_rows = True
        else:
            raise CodeFileError(f"{name}:{lineno}: unrecognized header line {line!r}")
    if field is None or length is None or kind is None:
        raise CodeFileError(f"{name}: missing field/length/kind header")
    expected = 2 * length if kind == SYMPLECTIC else length
    for i, r in enumerate(rows):
        if len(r) != expected:
            raise CodeFileError(f"{name}: row {i + 1} has {len(r)} entries, expected {expected}")
        if any(x < 0 or x >= field.q for x in r):
            raise CodeFileError(f"{name}: row {i + 1} has entries outside [0, {field.q})")
    if kind == SYMPLECTIC:
        return symplectic_code(field, rows, half=length)
    if kind == ADDITIVE:
        if field.m % 2:
            raise CodeFileError(f"{name}: additive codes need a square-order field")
        return additive_code(field, rows, n=length)
    return linear_code(field, rows, n=length)


def load_code(path) -> LinearCode:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code(fh.read(), name=str(path))


def save_code(C: LinearCode, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_code(C))


def code_digest(C: LinearCode) -> str:
    """Short content digest of the canonical generator matrix."""
    return hashlib.sha256(dump_code(C).encode()).hexdigest()[:8]

"""Linear codes over GF(2^w): echelon forms, duals, exhaustive distances and
binary expansion under a self-dual basis."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .field import GF2m, expand_element, field_make

DEFAULT_ENUM_BUDGET = 1 << 22


class BudgetExceeded(RuntimeError):
    """An exhaustive computation would exceed its enumeration budget."""


def rref(matrix, field: GF2m):
    """Reduced row echelon form over ``field``.

    Returns ``(R, rank, pivots)`` where ``R`` keeps only the ``rank`` nonzero
    rows.
    """
    m = np.array(matrix, dtype=np.int64, copy=True)
    if m.ndim != 2:
        m = m.reshape(len(m), -1)
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            m[[r, p]] = m[[p, r]]
        piv = int(m[r, c])
        if piv != 1:
            m[r] = field.mul_array(m[r], field.inv(piv))
        factors = m[:, c].copy()
        factors[r] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            m[hit] ^= field.mul_array(factors[hit, None], m[r][None, :])
        pivots.append(c)
        r += 1
    return m[:r], r, tuple(pivots)


def rank(matrix, field: GF2m) -> int:
    return rref(matrix, field)[1]


def null_space(matrix, field: GF2m, ncols: int | None = None):
    """Basis (as rows) of {y : M y = 0} under sum_i M_ji y_i."""
    m = np.asarray(matrix, dtype=np.int64)
    if ncols is None:
        ncols = m.shape[1]
    if m.size == 0:
        return np.eye(ncols, dtype=np.int64)
    r, rk, piv = rref(m, field)
    free = [c for c in range(ncols) if c not in piv]
    out = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        out[i, f] = 1
        # characteristic 2: -r = r
        for j, p in enumerate(piv):
            out[i, p] = r[j, f]
    return out


class LinearCode:
    """A linear [n, k] code given by a generator matrix.

    The generator is stored in reduced row echelon form, which doubles as the
    canonical identity of the code (``==`` compares row spaces).
    """

    def __init__(self, field: GF2m, gen, n: int | None = None,
                 d_bound: int | None = None, dual_d_bound: int | None = None):
        g = np.asarray(gen, dtype=np.int64)
        if g.size == 0:
            if n is None:
                n = g.shape[1] if g.ndim == 2 else 0
            g = np.zeros((0, n), dtype=np.int64)
        if g.ndim == 1:
            g = g[None, :]
        if n is not None and g.shape[1] != n:
            raise ValueError("generator has %d columns, expected %d" % (g.shape[1], n))
        if np.any((g < 0) | (g >= field.q)):
            raise ValueError("generator entries outside %r" % field)
        self.field = field
        self.gen, self.k, self.pivots = rref(g, field)
        self.n = g.shape[1]
        self.d_bound = d_bound
        self.dual_d_bound = dual_d_bound

    def __repr__(self):
        return "LinearCode(q=%d, n=%d, k=%d)" % (self.field.q, self.n, self.k)

    def __eq__(self, other):
        return (isinstance(other, LinearCode) and self.field == other.field
                and self.n == other.n and self.k == other.k
                and np.array_equal(self.gen, other.gen))

    def __hash__(self):
        return hash((self.field, self.n, self.gen.tobytes()))

    @property
    def q(self) -> int:
        return self.field.q

    def encode(self, msg):
        msg = np.asarray(msg, dtype=np.int64)
        out = np.zeros(self.n, dtype=np.int64)
        for c, row in zip(msg, self.gen):
            if c:
                out ^= self.field.mul_array(c, row)
        return out

    def contains(self, v) -> bool:
        v = np.asarray(v, dtype=np.int64)
        return rank(np.vstack([self.gen, v[None, :]]), self.field) == self.k


def dual_code(c: LinearCode) -> LinearCode:
    """Null space of the generator under the standard inner product."""
    return LinearCode(c.field, null_space(c.gen, c.field, c.n), n=c.n)


def code_from_rows(rows, w: int = 1) -> LinearCode:
    return LinearCode(field_make(w), rows)


# ---------------------------------------------------------------------------
# enumeration kernels
#
# A codeword over GF(2^w) is packed into uint64 words, w bits per symbol,
# floor(64 / w) symbols per word; a GF(2^w)-linear code is then the GF(2)-span
# of {x^j g_i}, so all q^k codewords come out of XOR doubling.


def _layout(n: int, w: int):
    per = 64 // w
    return per, (n + per - 1) // per


def _pack(vecs, w: int, n: int) -> np.ndarray:
    per, nw = _layout(n, w)
    vecs = np.asarray(vecs, dtype=np.int64).reshape(-1, n)
    out = np.zeros((vecs.shape[0], nw), dtype=np.uint64)
    for i in range(n):
        word, slot = divmod(i, per)
        out[:, word] |= vecs[:, i].astype(np.uint64) << np.uint64(slot * w)
    return out


def _low_mask(n: int, w: int) -> np.ndarray:
    per, nw = _layout(n, w)
    mask = np.zeros(nw, dtype=np.uint64)
    for i in range(n):
        word, slot = divmod(i, per)
        mask[word] |= np.uint64(1) << np.uint64(slot * w)
    return mask


def _symbol_weights(words: np.ndarray, w: int, n: int) -> np.ndarray:
    if w == 1:
        return np.bitwise_count(words).sum(axis=1, dtype=np.int64)
    fold = words.copy()
    for s in range(1, w):
        fold |= words >> np.uint64(s)
    fold &= _low_mask(n, w)
    return np.bitwise_count(fold).sum(axis=1, dtype=np.int64)


def _gf2_basis(c: LinearCode) -> np.ndarray:
    if c.k == 0:
        return np.zeros((0, c.n), dtype=np.int64)
    rows = [c.field.mul_array(1 << j, row) for row in c.gen for j in range(c.field.w)]
    return np.array(rows, dtype=np.int64)


def _check_budget(c: LinearCode, budget: int):
    size = c.q ** c.k
    if size > budget:
        raise BudgetExceeded("q^k = %d exceeds enumeration budget %d" % (size, budget))


def all_codewords_packed(c: LinearCode, budget: int = DEFAULT_ENUM_BUDGET) -> np.ndarray:
    _check_budget(c, budget)
    basis = _pack(_gf2_basis(c), c.field.w, c.n)
    _, nw = _layout(c.n, c.field.w)
    words = np.zeros((1, nw), dtype=np.uint64)
    for b in basis:
        words = np.concatenate([words, words ^ b])
    return words


def weight_distribution(c: LinearCode, budget: int = DEFAULT_ENUM_BUDGET) -> list[int]:
    words = all_codewords_packed(c, budget)
    wts = _symbol_weights(words, c.field.w, c.n)
    return np.bincount(wts, minlength=c.n + 1).tolist()


def min_distance(c: LinearCode, budget: int = DEFAULT_ENUM_BUDGET):
    """Exact minimum distance; ``math.inf`` for the zero code."""
    if c.k == 0:
        return math.inf
    dist = weight_distribution(c, budget)
    return next(d for d in range(1, c.n + 1) if dist[d])


def coset_min_weight(c: LinearCode, v, budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """min over codewords x of wt(v + x); 0 whenever v lies in the code."""
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (c.n,):
        raise ValueError("vector length %d != code length %d" % (v.size, c.n))
    words = all_codewords_packed(c, budget) ^ _pack(v, c.field.w, c.n)[0]
    return int(_symbol_weights(words, c.field.w, c.n).min())


# ---------------------------------------------------------------------------
# binary expansion


def expand_vector(field: GF2m, vec, basis) -> np.ndarray:
    return np.array([b for s in vec for b in expand_element(field, int(s), basis)],
                    dtype=np.int64)


def expand_code(c: LinearCode, basis) -> LinearCode:
    """Binary image of ``c``: w-bit blocks per symbol, in coordinate order."""
    basis = tuple(basis)
    f = c.field
    if len(basis) != f.w or any(not 0 < e < f.q for e in basis):
        raise ValueError("basis does not belong to %r" % f)
    if f.w == 1:
        return LinearCode(field_make(1), c.gen, n=c.n)
    rows = [expand_vector(f, f.mul_array(e, g), basis) for g in c.gen for e in basis]
    if not rows:
        rows = np.zeros((0, f.w * c.n), dtype=np.int64)
    return LinearCode(field_make(1), rows, n=f.w * c.n)


# ---------------------------------------------------------------------------
# code files: header "w n k", then k rows of n hex symbols


def format_code(c: LinearCode) -> str:
    lines = ["%d %d %d" % (c.field.w, c.n, c.k)]
    for row in c.gen:
        lines.append(" ".join(c.field.to_hex(int(s)) for s in row))
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> LinearCode:
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 3:
        raise ValueError("code file needs a 'w n k' header")
    w, n, k = (int(t) for t in lines[0])
    field = field_make(w)
    rows = lines[1:]
    if len(rows) != k or any(len(r) != n for r in rows):
        raise ValueError("code file body does not match header %d %d %d" % (w, n, k))
    gen = [[field.from_hex(s) for s in r] for r in rows]
    code = LinearCode(field, np.array(gen, dtype=np.int64).reshape(k, n), n=n)
    if code.k != k:
        raise ValueError("generator rows are not linearly independent")
    return code


def read_code(path) -> LinearCode:
    with open(path) as fh:
        return parse_code(fh.read())


def write_code(c: LinearCode, path):
    with open(path, "w") as fh:
        fh.write(format_code(c))


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d_bound: int | None
    d_exact: int | None

    def to_json(self):
        return {"n": self.n, "k": self.k, "d_bound": self.d_bound, "d_exact": self.d_exact}

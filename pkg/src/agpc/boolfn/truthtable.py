"""Truth tables and the scalar criteria: Walsh spectrum, resiliency,
derivatives, propagation criterion (plain and of order k), ANF, nonlinearity.

Bit i of a table is f(x(i)), where variable x_j is bit j-1 of the index i.
"""
from __future__ import annotations

import itertools
import math

import numpy as np

DEFAULT_MAT_BUDGET = 26
DEFAULT_SUBFUNCTION_BUDGET = 1 << 22


class MaterializationBudgetExceeded(RuntimeError):
    pass


class TruthTable:
    __slots__ = ("n", "bits")

    def __init__(self, bits, n: int | None = None):
        bits = np.asarray(bits, dtype=np.uint8).ravel()
        if n is None:
            n = int(bits.size).bit_length() - 1
        if bits.size != 1 << n:
            raise ValueError("table length %d is not 2^%d" % (bits.size, n))
        if np.any(bits > 1):
            raise ValueError("table entries must be 0/1")
        self.n = n
        self.bits = bits
        self.bits.flags.writeable = False

    @classmethod
    def from_function(cls, n: int, fn) -> TruthTable:
        return cls([fn(x) & 1 for x in range(1 << n)], n)

    @classmethod
    def from_string(cls, s: str) -> TruthTable:
        return cls([int(c) for c in s])

    @classmethod
    def zero(cls, n: int) -> TruthTable:
        return cls(np.zeros(1 << n, dtype=np.uint8), n)

    @classmethod
    def variable(cls, n: int, j: int) -> TruthTable:
        """The coordinate function x_j (1-based)."""
        idx = np.arange(1 << n)
        return cls((idx >> (j - 1)) & 1, n)

    def __repr__(self):
        if self.n <= 4:
            return "TruthTable(%r)" % self.to_string()
        return "TruthTable(n=%d, weight=%d)" % (self.n, self.weight)

    def __eq__(self, other):
        return isinstance(other, TruthTable) and self.n == other.n and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.n, self.bits.tobytes()))

    def __xor__(self, other: TruthTable) -> TruthTable:
        if other.n != self.n:
            raise ValueError("variable counts differ")
        return TruthTable(self.bits ^ other.bits, self.n)

    __add__ = __xor__

    def __call__(self, x: int) -> int:
        return int(self.bits[x])

    def to_string(self) -> str:
        return "".join(map(str, self.bits.tolist()))

    @property
    def weight(self) -> int:
        return int(self.bits.sum(dtype=np.int64))

    def is_balanced(self) -> bool:
        return 2 * self.weight == 1 << self.n

    def signs(self) -> np.ndarray:
        return 1 - 2 * self.bits.astype(np.int64)


def _popcounts(n: int) -> np.ndarray:
    return np.bitwise_count(np.arange(1 << n, dtype=np.uint64)).astype(np.int64)


def fwht(a) -> np.ndarray:
    """Unnormalised Walsh-Hadamard transform along the last axis."""
    a = np.array(a, dtype=np.int64, copy=True)
    size = a.shape[-1]
    lead = a.shape[:-1]
    h = 1
    while h < size:
        v = a.reshape(lead + (size // (2 * h), 2, h))
        lo = v[..., 0, :].copy()
        hi = v[..., 1, :]
        v[..., 0, :] += hi
        v[..., 1, :] = lo - hi
        h *= 2
    return a


def walsh_spectrum(t: TruthTable) -> np.ndarray:
    """W(u) = sum_x (-1)^(f(x) + u.x)."""
    return fwht(t.signs())


def autocorrelation(t: TruthTable) -> np.ndarray:
    """r(a) = sum_x (-1)^(f(x) + f(x + a)), via the Wiener-Khinchin identity."""
    return _autocorrelation_rows(t.signs()[None, :], t.n)[0]


def _autocorrelation_rows(signs: np.ndarray, n: int) -> np.ndarray:
    w = fwht(signs)
    return fwht(w * w) >> n


def resiliency_order(t: TruthTable, spectrum=None) -> int:
    """Largest r with W(u) = 0 for all wt(u) <= r; -1 when unbalanced."""
    w = walsh_spectrum(t) if spectrum is None else np.asarray(spectrum)
    if w[0] != 0:
        return -1
    wts = _popcounts(t.n)
    return int(wts[w != 0].min()) - 1


def _var_axis(n: int, j: int) -> int:
    # reshape([2]*n) in C order puts index bit 0 on the last axis
    return n - 1 - j


def correlation_immunity_by_fixing(t: TruthTable) -> int:
    """Resiliency order straight from the definition, without any transform.

    f is r-resilient iff for every set S of at most r variables and every
    assignment to S the restricted function is balanced.
    """
    if not t.is_balanced():
        return -1
    n = t.n
    cube = t.bits.reshape([2] * n).astype(np.int64)
    for r in range(1, n + 1):
        target = 1 << (n - r - 1) if r < n else None
        for S in itertools.combinations(range(n), r):
            keep = tuple(_var_axis(n, j) for j in S)
            others = tuple(ax for ax in range(n) if ax not in keep)
            counts = cube.sum(axis=others) if others else cube
            if target is None or np.any(counts != target):
                return r - 1
    return n


def derivative(t: TruthTable, alpha: int) -> TruthTable:
    """x -> f(x) + f(x + alpha)."""
    if not 0 <= alpha < 1 << t.n:
        raise ValueError("direction outside GF(2)^%d" % t.n)
    idx = np.arange(1 << t.n) ^ alpha
    return TruthTable(t.bits ^ t.bits[idx], t.n)


def low_weight_vectors(n: int, lo: int, hi: int):
    """Integers in [0, 2^n) with lo <= popcount <= hi, by weight then value."""
    for w in range(max(lo, 0), min(hi, n) + 1):
        for S in itertools.combinations(range(n), w):
            yield sum(1 << j for j in S)


# packed derivative kernel: a table of 2^n bits as 2^(n-6) uint64 words

_SWAP_MASKS = [np.uint64(m) for m in (
    0x5555555555555555, 0x3333333333333333, 0x0F0F0F0F0F0F0F0F,
    0x00FF00FF00FF00FF, 0x0000FFFF0000FFFF, 0x00000000FFFFFFFF)]


def pack_table(t: TruthTable) -> np.ndarray:
    if t.n < 6:
        raise ValueError("packed tables need n >= 6")
    return np.packbits(t.bits, bitorder="little").view("<u8").astype(np.uint64)


def _translate_packed(words: np.ndarray, alpha: int) -> np.ndarray:
    hi = alpha >> 6
    out = words[np.arange(words.size) ^ hi] if hi else words.copy()
    for b in range(6):
        if (alpha >> b) & 1:
            s = np.uint64(1 << b)
            m = _SWAP_MASKS[b]
            out = ((out >> s) & m) | ((out & m) << s)
    return out


def derivative_weights(t: TruthTable, alphas) -> np.ndarray:
    """Hamming weight of each derivative, computed by table translation."""
    alphas = list(alphas)
    if t.n < 6:
        idx = np.arange(1 << t.n)
        return np.array([int((t.bits ^ t.bits[idx ^ a]).sum()) for a in alphas], dtype=np.int64)
    words = pack_table(t)
    return np.array([int(np.bitwise_count(words ^ _translate_packed(words, a)).sum(dtype=np.int64))
                     for a in alphas], dtype=np.int64)


def pc_check(t: TruthTable, l: int, method: str = "spectral") -> bool:
    """PC(l): every derivative with 1 <= wt(alpha) <= l is balanced."""
    if l <= 0:
        return True
    if method == "spectral":
        r = autocorrelation(t)
        wts = _popcounts(t.n)
        sel = (wts >= 1) & (wts <= l)
        return not np.any(r[sel])
    if method == "derivative":
        half = 1 << (t.n - 1)
        w = derivative_weights(t, low_weight_vectors(t.n, 1, l))
        return bool(np.all(w == half))
    raise ValueError("unknown method %r" % method)


def pc_degree(t: TruthTable) -> int:
    """Largest l such that f satisfies PC(l) (n when every derivative is balanced)."""
    return _pc_degree_rows(t.signs()[None, :], t.n)


def _pc_degree_rows(signs: np.ndarray, n: int) -> int:
    if n == 0:
        return 0
    r = _autocorrelation_rows(signs, n)
    wts = _popcounts(n)
    bad = np.any(r[:, 1:] != 0, axis=0)
    if not bad.any():
        return n
    return int(wts[1:][bad].min()) - 1


def subfunction_count(n: int, k: int) -> int:
    return math.comb(n, k) << k


def _subfunction_batches(t: TruthTable, k: int):
    """Yield arrays of shape (2^k, 2^(n-k)) of +-1 signs, one per k-subset."""
    n = t.n
    cube = t.signs().reshape([2] * n)
    for S in itertools.combinations(range(n), k):
        axes = [_var_axis(n, j) for j in S]
        moved = np.moveaxis(cube, axes, list(range(k)))
        yield S, moved.reshape(1 << k, 1 << (n - k))


def pc_degree_at_order(t: TruthTable, k: int, budget: int = DEFAULT_SUBFUNCTION_BUDGET):
    """Largest l with PC(l) of order k, or None when over budget.

    Directions range over wt(alpha) <= n - k, so the value is capped there.
    """
    n = t.n
    if not 0 <= k <= n:
        raise ValueError("order %d outside 0..%d" % (k, n))
    if subfunction_count(n, k) > budget:
        return None
    if k == n:
        return 0
    if k == 0:
        return pc_degree(t)
    fast = _pc_degree_by_derivative_spectra(t, k)
    if fast is not None:
        return fast
    best = n - k
    for _, batch in _subfunction_batches(t, k):
        best = min(best, _pc_degree_rows(batch, n - k))
        if best == 0:
            break
    return best


def _pc_degree_by_derivative_spectra(t: TruthTable, k: int, batch: int = 8):
    """Degree at order k from derivative spectra, or None once the work spent
    passes the cost of the subfunction route.

    Fixing a set S and requiring every restricted derivative along alpha
    (alpha off S) to be balanced is, after a Fourier transform over the
    fixed values, W_{D_alpha f}(beta) = 0 for all beta supported on S.  Taken
    over all S of size k this is: beta of weight <= k disjoint from alpha.
    """
    n = t.n
    sub_cost = math.comb(n, k) * (n - k)
    spent = 0
    signs = t.signs()
    idx = np.arange(1 << n)
    wts = _popcounts(n)
    low = wts <= k
    for j in range(1, n - k + 1):
        alphas = list(low_weight_vectors(n, j, j))
        for lo in range(0, len(alphas), batch):
            chunk = alphas[lo:lo + batch]
            spent += len(chunk) * n
            if spent > sub_cost:
                return None
            d = np.stack([signs * signs[idx ^ a] for a in chunk])
            w = fwht(d)
            for a, row in zip(chunk, w):
                sel = low & ((idx & a) == 0)
                if np.any(row[sel]):
                    return j - 1
    return n - k


def pc_order_check(t: TruthTable, l: int, k: int, budget: int = DEFAULT_SUBFUNCTION_BUDGET):
    """PC(l) of order k: True / False, or None when the subfunction count is over budget.

    Directions are restricted to wt(alpha) <= min(l, n - k).
    """
    if k < 0 or k > t.n:
        raise ValueError("order %d outside 0..%d" % (k, t.n))
    deg = pc_degree_at_order(t, k, budget)
    if deg is None:
        return None
    return deg >= min(l, t.n - k)


def pc_order_check_bruteforce(t: TruthTable, l: int, k: int) -> bool:
    """Same predicate, by explicit restriction and derivative tables (slow oracle)."""
    n = t.n
    lim = min(l, n - k)
    for S in itertools.combinations(range(n), k):
        free = [j for j in range(n) if j not in S]
        for c in range(1 << k):
            base = sum(((c >> i) & 1) << j for i, j in enumerate(S))
            idx = np.zeros(1 << len(free), dtype=np.int64) + base
            for pos, j in enumerate(free):
                idx |= ((np.arange(1 << len(free)) >> pos) & 1) << j
            sub = TruthTable(t.bits[idx], len(free))
            for a in low_weight_vectors(len(free), 1, lim):
                if not derivative(sub, a).is_balanced():
                    return False
    return True


def moebius(bits) -> np.ndarray:
    a = np.array(bits, dtype=np.uint8, copy=True)
    size = a.size
    h = 1
    while h < size:
        v = a.reshape(size // (2 * h), 2, h)
        v[:, 1, :] ^= v[:, 0, :]
        h *= 2
    return a


def anf(t: TruthTable) -> list[tuple[int, ...]]:
    """Monomials of the algebraic normal form as sorted 1-based variable tuples."""
    coeffs = moebius(t.bits)
    out = []
    for u in np.nonzero(coeffs)[0].tolist():
        out.append(tuple(j + 1 for j in range(t.n) if (u >> j) & 1))
    return sorted(out, key=lambda m: (len(m), m))


def anf_to_table(monomials, n: int) -> TruthTable:
    coeffs = np.zeros(1 << n, dtype=np.uint8)
    for m in monomials:
        coeffs[sum(1 << (j - 1) for j in m)] ^= 1
    return TruthTable(moebius(coeffs), n)


def anf_text(monomials) -> str:
    if not monomials:
        return "0"
    return "+".join("".join("x%d" % j for j in m) if m else "1" for m in monomials)


def parse_anf(text: str) -> list[tuple[int, ...]]:
    text = text.replace(" ", "")
    if text == "0":
        return []
    out = []
    for term in text.split("+"):
        if term == "1":
            out.append(())
        else:
            parts = term.split("x")
            if parts[0] != "":
                raise ValueError("bad monomial %r" % term)
            out.append(tuple(sorted(int(p) for p in parts[1:])))
    return out


def nonlinearity(t: TruthTable) -> tuple[int, bool]:
    """(2^(n-1) - max|W|/2, bent flag)."""
    w = np.abs(walsh_spectrum(t))
    nl = (1 << (t.n - 1)) - int(w.max()) // 2
    bent = t.n % 2 == 0 and bool(np.all(w == 1 << (t.n // 2)))
    return nl, bent

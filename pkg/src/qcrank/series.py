"""Exact truncated Laurent series in one variable q.

A :class:`Series` stores a valuation v, a truncation order N and the
coefficient vector of q^v .. q^N, either over the integers or over Z/mZ.
All operations are pure; instances are immutable and safe to share.

Multiplication is schoolbook O(N^2) with a fast path that iterates only
the nonzero terms of the sparser factor (Euler products have O(sqrt N)
support, which makes this the difference between seconds and minutes at
large orders).  For small moduli the convolutions are delegated to
int64 numpy kernels; coefficients themselves are always Python ints.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "Series",
    "SeriesError",
    "ModulusMismatchError",
    "NonInvertibleError",
    "TruncationRangeError",
]


class SeriesError(ValueError):
    """Base class for series arithmetic errors."""


class ModulusMismatchError(SeriesError):
    """Operands live over different coefficient rings."""


class NonInvertibleError(SeriesError):
    """Leading coefficient is not a unit of the coefficient ring."""


class TruncationRangeError(SeriesError):
    """Requested coefficient lies beyond the truncation order."""


# int64 kernels are safe while accumulated dot products stay below 2^62.
_INT64_SAFE = 1 << 62


def _as_int64_safe(m: int, terms: int) -> bool:
    return m is not None and terms > 0 and (m - 1) * (m - 1) * terms < _INT64_SAFE


class Series:
    """Truncated Laurent series q^valuation * sum c_i q^i, exact coefficients.

    Coefficients of q^e are defined for valuation <= e <= order; everything
    above the order is unknown, everything below the valuation is zero.
    The zero series is canonical: empty coefficients, valuation = order + 1.
    """

    __slots__ = ("valuation", "order", "modulus", "_coeffs")

    def __init__(self, coeffs, valuation: int = 0, order: int | None = None,
                 modulus: int | None = None):
        if modulus is not None and modulus < 2:
            raise SeriesError(f"modulus must be >= 2, got {modulus}")
        coeffs = [int(c) for c in coeffs]
        if modulus is not None:
            coeffs = [c % modulus for c in coeffs]
        if order is None:
            order = valuation + len(coeffs) - 1
        if len(coeffs) != order - valuation + 1 and coeffs:
            raise SeriesError(
                f"coefficient count {len(coeffs)} does not match range "
                f"[{valuation}, {order}]")
        # canonicalize: strip leading zeros, collapse zero series
        lead = 0
        while lead < len(coeffs) and coeffs[lead] == 0:
            lead += 1
        if lead == len(coeffs):
            valuation = order + 1
            coeffs = []
        elif lead:
            valuation += lead
            coeffs = coeffs[lead:]
        object.__setattr__(self, "valuation", valuation)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "_coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, order: int, modulus: int | None = None) -> "Series":
        return cls([], valuation=order + 1, order=order, modulus=modulus)

    @classmethod
    def one(cls, order: int, modulus: int | None = None) -> "Series":
        return cls.monomial(1, 0, order, modulus)

    @classmethod
    def monomial(cls, coeff: int, exponent: int, order: int,
                 modulus: int | None = None) -> "Series":
        if exponent > order:
            raise SeriesError(f"monomial exponent {exponent} above order {order}")
        return cls([coeff] + [0] * (order - exponent),
                   valuation=exponent, order=order, modulus=modulus)

    @classmethod
    def from_terms(cls, terms: dict, order: int,
                   modulus: int | None = None) -> "Series":
        """Build from a sparse {exponent: coefficient} mapping, truncated."""
        terms = {e: c for e, c in terms.items() if e <= order and c}
        if not terms:
            return cls.zero(order, modulus)
        val = min(terms)
        coeffs = [0] * (order - val + 1)
        for e, c in terms.items():
            coeffs[e - val] += c
        return cls(coeffs, valuation=val, order=order, modulus=modulus)

    # ------------------------------------------------------------------
    # inspection

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff_at(self, e: int) -> int:
        """Coefficient of q^e; zero below the valuation, error above order."""
        if e > self.order:
            raise TruncationRangeError(
                f"exponent {e} beyond truncation order {self.order}")
        if e < self.valuation:
            return 0
        return self._coeffs[e - self.valuation]

    def __getitem__(self, e: int) -> int:
        return self.coeff_at(e)

    def coeffs_from(self, lo: int, hi: int) -> list:
        """Coefficients of q^lo .. q^hi inclusive (hi must be <= order)."""
        return [self.coeff_at(e) for e in range(lo, hi + 1)]

    def nonzero_terms(self) -> list:
        """Sorted (exponent, coefficient) pairs of the nonzero terms."""
        v = self.valuation
        return [(v + i, c) for i, c in enumerate(self._coeffs) if c]

    def support(self) -> list:
        return [e for e, _ in self.nonzero_terms()]

    def num_nonzero(self) -> int:
        return sum(1 for c in self._coeffs if c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (self.valuation == other.valuation and self.order == other.order
                and self.modulus == other.modulus
                and self._coeffs == other._coeffs)

    def __hash__(self):
        return hash((self.valuation, self.order, self.modulus, self._coeffs))

    def __repr__(self):
        terms = self.nonzero_terms()[:6]
        body = " + ".join(f"{c}*q^{e}" for e, c in terms) or "0"
        if len(self.nonzero_terms()) > 6:
            body += " + ..."
        mod = f", mod {self.modulus}" if self.modulus else ""
        return f"Series({body}; order {self.order}{mod})"

    # ------------------------------------------------------------------
    # ring operations

    def _check_same_modulus(self, other: "Series") -> None:
        if self.modulus != other.modulus:
            raise ModulusMismatchError(
                f"modulus mismatch: {self.modulus} vs {other.modulus}")

    def __add__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        self._check_same_modulus(other)
        order = min(self.order, other.order)
        if self.is_zero() and other.is_zero():
            return Series.zero(order, self.modulus)
        val = min((s.valuation for s in (self, other) if not s.is_zero()),
                  default=order + 1)
        val = min(val, order + 1)
        n = order - val + 1
        out = [0] * max(n, 0)
        for s in (self, other):
            for i, c in enumerate(s._coeffs):
                e = s.valuation + i
                if e > order:
                    break
                out[e - val] += c
        return Series(out, valuation=val, order=order, modulus=self.modulus)

    def __neg__(self) -> "Series":
        return Series([-c for c in self._coeffs], valuation=self.valuation,
                      order=self.order, modulus=self.modulus)

    def __sub__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def scale(self, c: int) -> "Series":
        """Multiply every coefficient by the integer c."""
        if c == 0:
            return Series.zero(self.order, self.modulus)
        return Series([c * x for x in self._coeffs], valuation=self.valuation,
                      order=self.order, modulus=self.modulus)

    def shift(self, s: int) -> "Series":
        """Multiply by the monomial q^s (exact: both ends of the range move)."""
        return Series(list(self._coeffs), valuation=self.valuation + s,
                      order=self.order + s, modulus=self.modulus)

    def __mul__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        self._check_same_modulus(other)
        # only coefficients provably complete are kept (min rule)
        order = min(self.order + other.valuation, other.order + self.valuation)
        if self.is_zero() or other.is_zero():
            return Series.zero(order, self.modulus)
        a, b = self, other
        if a.num_nonzero() > b.num_nonzero():
            a, b = b, a
        n_out = order - (a.valuation + b.valuation) + 1
        if n_out <= 0:
            return Series.zero(order, self.modulus)
        ca = list(a._coeffs[:n_out])
        cb = list(b._coeffs[:n_out])
        m = self.modulus
        out = self._convolve(ca, cb, n_out, m)
        return Series(out, valuation=a.valuation + b.valuation, order=order,
                      modulus=m)

    @staticmethod
    def _convolve(ca: list, cb: list, n_out: int, m: int | None) -> list:
        nz = [(i, c) for i, c in enumerate(ca) if c]
        if m is not None and _as_int64_safe(m, min(len(ca), len(cb))) \
                and _as_int64_safe(m, len(nz)):
            bv = np.asarray(cb, dtype=np.int64)
            acc = np.zeros(n_out, dtype=np.int64)
            if len(nz) * 4 < len(ca):
                for i, c in nz:
                    hi = min(n_out, i + len(cb))
                    if hi > i:
                        acc[i:hi] += c * bv[:hi - i]
            else:
                av = np.asarray(ca, dtype=np.int64)
                acc = np.convolve(av, bv)[:n_out].copy()
                if len(acc) < n_out:
                    acc = np.concatenate(
                        [acc, np.zeros(n_out - len(acc), dtype=np.int64)])
            return (acc % m).tolist()
        out = [0] * n_out
        for i, c in nz:
            hi = min(n_out, i + len(cb))
            for j in range(hi - i):
                cv = cb[j]
                if cv:
                    out[i + j] += c * cv
        if m is not None:
            out = [x % m for x in out]
        return out

    def __pow__(self, k: int) -> "Series":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.invert() ** (-k)
        if k == 0:
            return Series.one(self.order, self.modulus)
        result = None
        base = self
        while True:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if not k:
                return result
            base = base * base

    # ------------------------------------------------------------------
    # inversion

    def invert(self) -> "Series":
        """Multiplicative inverse to the common order.

        Solves the convolution recurrence b_0 = 1/c_0,
        sum_i b_i c_(n-i) = 0; the leading coefficient must be a unit
        (+-1 over Z, coprime to m over Z/mZ).
        """
        if self.is_zero():
            raise NonInvertibleError("cannot invert the zero series")
        v = self.valuation
        c = list(self._coeffs)
        m = self.modulus
        c0 = c[0]
        if m is None:
            if c0 not in (1, -1):
                raise NonInvertibleError(
                    f"leading coefficient {c0} is not a unit over Z")
            c0_inv = c0
        else:
            try:
                c0_inv = pow(c0, -1, m)
            except ValueError:
                raise NonInvertibleError(
                    f"leading coefficient {c0} is not invertible mod {m}") from None
        n = len(c)
        if m is not None and _as_int64_safe(m, n):
            b = _invert_smallmod(c, c0_inv, m)
        else:
            b = _invert_object(c, c0_inv, m)
        return Series(b, valuation=-v, order=self.order - 2 * v, modulus=m)

    # ------------------------------------------------------------------
    # reindexing

    def subst_qk(self, k: int) -> "Series":
        """Substitute q -> q^k; order and valuation scale by k."""
        if k < 1:
            raise SeriesError(f"substitution power must be positive, got {k}")
        if self.is_zero():
            return Series.zero(k * self.order, self.modulus)
        out = [0] * (k * (self.order - self.valuation) + 1)
        for i, c in enumerate(self._coeffs):
            out[k * i] = c
        return Series(out, valuation=k * self.valuation, order=k * self.order,
                      modulus=self.modulus)

    def dissect(self, m: int, r: int) -> "Series":
        """Extract sum_n a[m*n + r] q^n, the residue-r slice modulo m."""
        if m < 1:
            raise SeriesError(f"dissection modulus must be positive, got {m}")
        if not 0 <= r < m:
            raise SeriesError(f"residue {r} out of range for modulus {m}")
        order = (self.order - r) // m
        if self.is_zero():
            return Series.zero(order, self.modulus)
        lo = -((r - self.valuation) // m)  # ceil((valuation - r) / m)
        if lo > order:
            return Series.zero(order, self.modulus)
        out = [self.coeff_at(m * n + r) for n in range(lo, order + 1)]
        return Series(out, valuation=lo, order=order, modulus=self.modulus)

    def reduce_mod(self, m: int) -> "Series":
        """Coefficientwise canonical residues, setting the modulus to m."""
        if m < 2:
            raise SeriesError(f"modulus must be >= 2, got {m}")
        if self.modulus is not None and self.modulus % m != 0:
            raise ModulusMismatchError(
                f"cannot reduce modulus {self.modulus} to non-divisor {m}")
        return Series(list(self._coeffs), valuation=self.valuation,
                      order=self.order, modulus=m)

    def truncate(self, order: int) -> "Series":
        """Forget coefficients above the given (smaller) order."""
        if order >= self.order:
            return self
        n = order - self.valuation + 1
        return Series(list(self._coeffs[:max(n, 0)]),
                      valuation=min(self.valuation, order + 1), order=order,
                      modulus=self.modulus)


def _invert_object(c: list, c0_inv: int, m: int | None) -> list:
    n = len(c)
    nz = [(k, ck) for k, ck in enumerate(c) if ck and k > 0]
    b = [0] * n
    b[0] = c0_inv if m is None else c0_inv % m
    for t in range(1, n):
        s = 0
        for k, ck in nz:
            if k > t:
                break
            s += ck * b[t - k]
        v = -c0_inv * s
        b[t] = v if m is None else v % m
    return b


def _invert_smallmod(c: list, c0_inv: int, m: int) -> list:
    """Blocked forward substitution; cross-block work done by numpy."""
    n = len(c)
    cv = np.asarray(c, dtype=np.int64)
    nz_idx = np.nonzero(cv[1:])[0] + 1
    b = np.zeros(n, dtype=np.int64)
    b[0] = c0_inv % m
    block = 128
    nz_small = [(int(k), int(cv[k])) for k in nz_idx if k < block]
    sparse = len(nz_idx) * 8 < n
    acc = np.zeros(n, dtype=np.int64)
    acc[1:] = cv[1:] * int(b[0])  # seed with b_0's contribution
    for start in range(1, n, block):
        end = min(start + block, n)
        neg = (-c0_inv) % m
        for t in range(start, end):
            s = int(acc[t])
            for k, ck in nz_small:
                if k > t - start:
                    break
                s += ck * int(b[t - k])
            b[t] = (neg * s) % m
        if end >= n:
            break
        # push the finished block's contribution to all later positions
        blk = b[start:end]
        if sparse:
            for k in nz_idx:
                k = int(k)
                lo = max(start + k, end)
                hi = min(n, end + k)
                if lo < hi:
                    acc[lo:hi] += cv[k] * blk[lo - k - start:hi - k - start]
        else:
            contrib = np.convolve(blk, cv[1:])
            lo = start + 1
            hi = min(n, lo + len(contrib))
            acc[max(lo, end):hi] += contrib[max(lo, end) - lo:hi - lo]
        if (start // block) % 16 == 0:
            acc %= m
    return (b % m).tolist()

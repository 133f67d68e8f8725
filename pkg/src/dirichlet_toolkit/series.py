"""Truncated formal Dirichlet series and their convolution algebra.

A series is a sparse coefficient map {n -> a_n} on an explicit window
[1..N].  Binary operations truncate to the smaller window; the retained
convolution coefficients then agree with those of the untruncated product,
so truncation commutes with the algebra maps.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import scalars
from .errors import NotInvertibleError
from .primes import PrimeTable
from .scalars import EXACT, FLOAT, ExactComplex


class TruncatedDirichletSeries:
    """Sparse coefficients a_n on the window [1..N], no stored zeros."""

    __slots__ = ("window", "mode", "coeffs")

    def __init__(self, window: int, coeffs=None, mode: str = EXACT):
        if window < 1:
            raise ValueError(f"window must be >= 1, got {window}")
        scalars.check_mode(mode)
        clean = {}
        for n, c in (coeffs or {}).items():
            n = int(n)
            if not 1 <= n <= window:
                raise ValueError(f"index {n} outside window [1, {window}]")
            c = scalars.coerce(c, mode)
            if not scalars.is_zero(c):
                clean[n] = c
        self.window = int(window)
        self.mode = mode
        self.coeffs = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, window: int, mode: str = EXACT):
        return cls(window, {}, mode)

    @classmethod
    def unit(cls, window: int, mode: str = EXACT):
        """The algebra unit: delta at n = 1."""
        return cls(window, {1: scalars.one(mode)}, mode)

    @classmethod
    def zeta(cls, window: int, mode: str = EXACT):
        """All coefficients 1 up to the window."""
        c = scalars.one(mode)
        return cls(window, {n: c for n in range(1, window + 1)}, mode)

    @classmethod
    def monomial(cls, n: int, c, window: int | None = None, mode: str = EXACT):
        window = n if window is None else window
        return cls(window, {n: c}, mode)

    # -- basic queries ------------------------------------------------

    def coefficient(self, n: int):
        if not 1 <= n <= self.window:
            raise ValueError(f"index {n} outside window [1, {self.window}]")
        return self.coeffs.get(n, scalars.zero(self.mode))

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        """Coefficientwise equality on the common window min(N1, N2)."""
        if not isinstance(other, TruncatedDirichletSeries):
            return NotImplemented
        if self.mode != other.mode:
            return False
        w = min(self.window, other.window)
        za, zb = scalars.zero(self.mode), scalars.zero(other.mode)
        keys = {n for n in self.coeffs if n <= w} | {n for n in other.coeffs if n <= w}
        return all(self.coeffs.get(n, za) == other.coeffs.get(n, zb) for n in keys)

    def __hash__(self):
        return hash((self.mode, tuple(sorted(self.coeffs.items(), key=lambda t: t[0]))))

    def __repr__(self):
        items = ", ".join(f"{n}: {c!r}" for n, c in sorted(self.coeffs.items()))
        return f"TruncatedDirichletSeries(window={self.window}, mode={self.mode}, {{{items}}})"

    # -- algebra ------------------------------------------------------

    def add(self, other: "TruncatedDirichletSeries"):
        scalars.require_same_mode(self.mode, other.mode)
        w = min(self.window, other.window)
        out = {}
        for n in set(self.coeffs) | set(other.coeffs):
            if n > w:
                continue
            c = self.coeffs.get(n, scalars.zero(self.mode)) + other.coeffs.get(
                n, scalars.zero(self.mode)
            )
            if not scalars.is_zero(c):
                out[n] = c
        return TruncatedDirichletSeries(w, out, self.mode)

    __add__ = add

    def scale(self, c):
        c = scalars.coerce(c, self.mode)
        return TruncatedDirichletSeries(
            self.window, {n: a * c for n, a in self.coeffs.items()}, self.mode
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self.add(other.scale(-1))

    def mul(self, other: "TruncatedDirichletSeries"):
        """Dirichlet convolution over stored support pairs."""
        scalars.require_same_mode(self.mode, other.mode)
        w = min(self.window, other.window)
        out: dict = {}
        for d, a in self.coeffs.items():
            if d > w:
                continue
            for e, b in other.coeffs.items():
                n = d * e
                if n > w:
                    continue
                prod = a * b
                if n in out:
                    out[n] = out[n] + prod
                else:
                    out[n] = prod
        return TruncatedDirichletSeries(w, out, self.mode)

    __mul__ = mul

    def invert(self, tolerance: float = 1e-12):
        """Convolution inverse on the window.

        Uses the divisor recursion b_1 = 1/a_1,
        b_n = -(1/a_1) * sum over d | n, d > 1 of a_d b_{n/d},
        restricted to the multiplicative closure of the support.
        """
        a1 = self.coeffs.get(1)
        if a1 is None or (self.mode == FLOAT and abs(a1) <= tolerance):
            raise NotInvertibleError("leading coefficient a_1 vanishes")
        inv_a1 = scalars.one(self.mode) / a1 if self.mode == EXACT else 1.0 / a1
        tail = {n: c for n, c in self.coeffs.items() if n > 1}
        # Multiplicative closure of the tail support within the window: the
        # only indices where the inverse can be nonzero.
        closure = {1}
        frontier = [1]
        while frontier:
            nxt = []
            for m in frontier:
                for d in tail:
                    nd = m * d
                    if nd <= self.window and nd not in closure:
                        closure.add(nd)
                        nxt.append(nd)
            frontier = nxt
        b = {1: inv_a1}
        for n in sorted(closure):
            if n == 1:
                continue
            acc = scalars.zero(self.mode)
            for d, ad in tail.items():
                if n % d == 0:
                    bq = b.get(n // d)
                    if bq is not None:
                        acc = acc + ad * bq
            val = -(inv_a1 * acc)
            if not scalars.is_zero(val):
                b[n] = val
        return TruncatedDirichletSeries(self.window, b, self.mode)

    def dilate(self, r, table: PrimeTable):
        """Multiply each coefficient by r^Omega(n)."""
        if self.window > table.bound:
            raise ValueError("prime table does not cover the window")
        r = scalars.coerce(r, self.mode)
        out = {}
        for n, c in self.coeffs.items():
            out[n] = c * r ** table.omega(n)
        return TruncatedDirichletSeries(self.window, out, self.mode)

    def truncate(self, window: int):
        return TruncatedDirichletSeries(
            window, {n: c for n, c in self.coeffs.items() if n <= window}, self.mode
        )

    def with_window(self, window: int):
        """Enlarge (or shrink) the window, keeping in-range coefficients."""
        return self.truncate(window)

    def to_float(self):
        if self.mode == FLOAT:
            return self
        return TruncatedDirichletSeries(
            self.window, {n: complex(c) for n, c in self.coeffs.items()}, FLOAT
        )

    # -- norms --------------------------------------------------------

    def l1_norm(self) -> float:
        return float(sum(abs(scalars.to_complex(c)) for c in self.coeffs.values()))

    def l1_norm_exact(self) -> Fraction:
        """Exact l1 norm; requires each coefficient purely real or imaginary."""
        if self.mode != EXACT:
            raise ValueError("exact norm requires exact mode")
        total = Fraction(0)
        for c in self.coeffs.values():
            if c.re != 0 and c.im != 0:
                raise ValueError("modulus irrational for a general Gaussian rational")
            total += abs(c.re) + abs(c.im)
        return total

    # -- serialization ------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "window": self.window,
            "mode": self.mode,
            "coeffs": {
                str(n): scalars.scalar_to_json(c) for n, c in sorted(self.coeffs.items())
            },
        }

    @classmethod
    def from_json_dict(cls, doc: dict):
        mode = scalars.check_mode(doc["mode"])
        coeffs = {
            int(n): scalars.scalar_from_json(pair, mode)
            for n, pair in doc["coeffs"].items()
        }
        return cls(int(doc["window"]), coeffs, mode)

    def save(self, path, provenance=None) -> None:
        doc = self.to_json_dict()
        if provenance is not None:
            doc["provenance"] = provenance
        with open(path, "w") as fh:
            json.dump(doc, fh, indent=1)
            fh.write("\n")

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json_dict(json.load(fh))


def one(window: int, mode: str = EXACT) -> TruncatedDirichletSeries:
    return TruncatedDirichletSeries.unit(window, mode)

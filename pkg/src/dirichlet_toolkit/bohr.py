"""Bohr lifts: Dirichlet series as sparse multivariate polynomials.

The lift sends n^{-s} with n = prod p_i^{e_i} to the monomial
prod x_i^{e_i}.  On truncated series it is an algebra isomorphism onto
polynomials supported on monomials of integers within the window.  The
module also houses polydisc evaluation, torus-sup estimation and
Cauchy/DFT coefficient recovery.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize

from . import scalars
from .errors import BudgetExceededError, TableTooSmallError, WindowOverflowError
from .primes import PrimeTable
from .scalars import EXACT, FLOAT
from .series import TruncatedDirichletSeries

# Exponent vectors are canonical tuples of (variable_index, exponent) pairs,
# sorted by index, exponents >= 1.  The constant monomial is the empty tuple.
Monomial = tuple[tuple[int, int], ...]


def _canonical(exponents) -> Monomial:
    if isinstance(exponents, dict):
        items = exponents.items()
    else:
        items = exponents
    clean = tuple(sorted((int(i), int(e)) for i, e in items if e))
    for i, e in clean:
        if i < 1 or e < 0:
            raise ValueError(f"bad exponent entry ({i}, {e})")
    return clean


class SparseMultiPoly:
    """Sparse polynomial in variables x_1..x_M, no stored zero terms."""

    __slots__ = ("nvars", "mode", "terms")

    def __init__(self, nvars: int, terms=None, mode: str = EXACT):
        scalars.check_mode(mode)
        clean = {}
        for mono, c in (terms or {}).items():
            mono = _canonical(mono)
            if mono and mono[-1][0] > nvars:
                raise ValueError(f"monomial {mono} uses a variable beyond nvars={nvars}")
            c = scalars.coerce(c, mode)
            if not scalars.is_zero(c):
                clean[mono] = clean[mono] + c if mono in clean else c
        self.nvars = int(nvars)
        self.mode = mode
        self.terms = {m: c for m, c in clean.items() if not scalars.is_zero(c)}

    @classmethod
    def zero(cls, nvars: int, mode: str = EXACT):
        return cls(nvars, {}, mode)

    @classmethod
    def constant(cls, nvars: int, c, mode: str = EXACT):
        return cls(nvars, {(): c}, mode)

    def variables(self) -> list[int]:
        """Indices actually appearing with positive exponent."""
        out = set()
        for mono in self.terms:
            out.update(i for i, _ in mono)
        return sorted(out)

    def degree_per_variable(self) -> dict[int, int]:
        degs: dict[int, int] = {}
        for mono in self.terms:
            for i, e in mono:
                degs[i] = max(degs.get(i, 0), e)
        return degs

    def total_degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def __eq__(self, other):
        if not isinstance(other, SparseMultiPoly):
            return NotImplemented
        return self.mode == other.mode and self.terms == other.terms

    def __hash__(self):
        return hash((self.mode, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        def fmt(mono):
            return "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in mono) or "1"

        body = " + ".join(f"({c!r})*{fmt(m)}" for m, c in sorted(self.terms.items()))
        return f"SparseMultiPoly(nvars={self.nvars}, {body or '0'})"

    def add(self, other: "SparseMultiPoly"):
        scalars.require_same_mode(self.mode, other.mode)
        nvars = max(self.nvars, other.nvars)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out[mono] + c if mono in out else c
        return SparseMultiPoly(nvars, out, self.mode)

    __add__ = add

    def scale(self, c):
        c = scalars.coerce(c, self.mode)
        return SparseMultiPoly(
            self.nvars, {m: a * c for m, a in self.terms.items()}, self.mode
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self.add(other.scale(-1))

    def mul(self, other: "SparseMultiPoly"):
        scalars.require_same_mode(self.mode, other.mode)
        nvars = max(self.nvars, other.nvars)
        out: dict = {}
        for ma, a in self.terms.items():
            da = dict(ma)
            for mb, b in other.terms.items():
                m = dict(da)
                for i, e in mb:
                    m[i] = m.get(i, 0) + e
                mono = _canonical(m)
                prod = a * b
                out[mono] = out[mono] + prod if mono in out else prod
        return SparseMultiPoly(nvars, out, self.mode)

    __mul__ = mul

    def dilate(self, r):
        """Substitute x_i -> r * x_i: scale each term by r^(total degree)."""
        r = scalars.coerce(r, self.mode)
        out = {}
        for mono, c in self.terms.items():
            deg = sum(e for _, e in mono)
            out[mono] = c * r**deg
        return SparseMultiPoly(self.nvars, out, self.mode)

    def restrict(self, index_set) -> "SparseMultiPoly":
        """Keep terms whose variables all lie in index_set (others -> 0)."""
        index_set = set(index_set)
        out = {
            m: c
            for m, c in self.terms.items()
            if all(i in index_set for i, _ in m)
        }
        return SparseMultiPoly(self.nvars, out, self.mode)

    def permute_variables(self, sigma) -> "SparseMultiPoly":
        """Relabel x_i -> x_{sigma(i)} in every monomial."""
        out = {}
        for mono, c in self.terms.items():
            new = _canonical({sigma(i): e for i, e in mono})
            nv = max([self.nvars] + [i for i, _ in new])
            out[new] = c
        nvars = max([self.nvars] + [i for m in out for i, _ in m])
        return SparseMultiPoly(nvars, out, self.mode)

    def to_float(self) -> "SparseMultiPoly":
        if self.mode == FLOAT:
            return self
        return SparseMultiPoly(
            self.nvars, {m: complex(c) for m, c in self.terms.items()}, FLOAT
        )

    # -- serialization ------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "mode": self.mode,
            "terms": [
                {"exp": {str(i): e for i, e in mono}, "c": scalars.scalar_to_json(c)}
                for mono, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json_dict(cls, doc: dict):
        mode = scalars.check_mode(doc.get("mode", FLOAT))
        terms = {}
        for item in doc["terms"]:
            mono = _canonical({int(i): e for i, e in item["exp"].items()})
            terms[mono] = scalars.scalar_from_json(item["c"], mode)
        return cls(int(doc["nvars"]), terms, mode)

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


@dataclass
class PolydiscPoint:
    """Finitely supported point of the polydisc; absent coordinates are 0."""

    coords: dict[int, complex] = field(default_factory=dict)
    allow_outside: bool = False

    def max_modulus(self) -> float:
        return max((abs(z) for z in self.coords.values()), default=0.0)

    def check(self) -> None:
        if not self.allow_outside and self.max_modulus() > 1 + 1e-12:
            raise ValueError(
                f"point has modulus {self.max_modulus():.6g} > 1; "
                "set allow_outside=True to evaluate anyway"
            )


def bohr_lift(f: TruncatedDirichletSeries, table: PrimeTable) -> SparseMultiPoly:
    """Send each stored n to the monomial of its factorization exponents."""
    if f.window > table.bound:
        raise TableTooSmallError(
            f"table bound {table.bound} below series window {f.window}"
        )
    nvars = table.pi(f.window) if f.window >= 2 else 0
    terms = {}
    for n, c in f.coeffs.items():
        terms[table.factor(n).entries] = c
    return SparseMultiPoly(nvars, terms, f.mode)


def bohr_drop(
    p: SparseMultiPoly, table: PrimeTable, window: int | None = None
) -> TruncatedDirichletSeries:
    """Inverse lift: each monomial becomes the integer prod p_i^{e_i}."""
    coeffs = {}
    max_n = 1
    for mono, c in p.terms.items():
        n = 1
        for i, e in mono:
            n *= table.prime(i) ** e
        if n > table.bound:
            raise WindowOverflowError(
                f"monomial {mono} corresponds to {n} > table bound {table.bound}"
            )
        coeffs[n] = c
        max_n = max(max_n, n)
    if window is None:
        window = max_n
    return TruncatedDirichletSeries(window, coeffs, p.mode)


def poly_eval(p: SparseMultiPoly, z) -> complex:
    """Evaluate at a polydisc point (dict or PolydiscPoint); missing coords are 0."""
    if isinstance(z, PolydiscPoint):
        z.check()
        coords = z.coords
    else:
        coords = z
    total = 0j
    for mono, c in p.terms.items():
        val = scalars.to_complex(c)
        for i, e in mono:
            zi = coords.get(i, 0j)
            if zi == 0:
                val = 0j
                break
            val *= zi**e
        total += val
    return total


def eval_c(s: complex, M: int, table: PrimeTable) -> PolydiscPoint:
    """The point c(s) = (2^{-s}, 3^{-s}, ..., p_M^{-s})."""
    s = complex(s)
    coords = {}
    for i in range(1, M + 1):
        p = table.prime(i)
        coords[i] = complex(np.exp(-s * math.log(p)))
    return PolydiscPoint(coords, allow_outside=(s.real <= 0))


# -- torus supremum estimation -------------------------------------------


@dataclass
class TorusSupResult:
    value: float
    phases: dict[int, float]
    point: dict[int, complex]
    radius: float
    converged: bool

    def as_record(self) -> dict:
        return {
            "value": self.value,
            "phases": {str(i): t for i, t in self.phases.items()},
            "radius": self.radius,
            "converged": self.converged,
        }


def _grid_values(
    terms: list[tuple[Monomial, complex]],
    variables: list[int],
    radii: dict[int, float],
    grid_per_var: int,
) -> np.ndarray:
    """Dense evaluation on the phase grid (grid_per_var,)*k, row-major."""
    k = len(variables)
    g = grid_per_var
    theta = 2.0 * np.pi * np.arange(g) / g
    axis_of = {v: a for a, v in enumerate(variables)}
    vals = np.zeros((g,) * k, dtype=np.complex128)
    for mono, c in terms:
        coef = complex(c)
        for i, e in mono:
            coef *= radii[i] ** e
        arr = np.asarray(coef, dtype=np.complex128)
        for i, e in mono:
            shape = [1] * k
            shape[axis_of[i]] = g
            arr = arr * np.exp(1j * e * theta).reshape(shape)
        vals = vals + arr
    return vals


def _line_max_on_circle(coeffs: np.ndarray) -> tuple[float, float]:
    """Exact max of |sum_j coeffs[j] z^j| over |z| = 1.

    The squared modulus is a trigonometric polynomial; its critical phases
    are roots of a degree-2d algebraic polynomial on the unit circle.
    """
    d = len(coeffs) - 1
    if d == 0:
        return abs(coeffs[0]), 0.0
    # Autocorrelation A_m = sum_j coeffs[j] * conj(coeffs[j-m]), m = -d..d.
    a = np.zeros(2 * d + 1, dtype=np.complex128)
    for m in range(-d, d + 1):
        s = 0j
        for j in range(max(0, m), min(d, d + m) + 1):
            s += coeffs[j] * np.conj(coeffs[j - m])
        a[m + d] = s
    # F(t) = sum_m A_m e^{imt};  z^d F'(t) = sum_m i m A_m z^{m+d}.
    deriv = np.array([1j * m * a[m + d] for m in range(-d, d + 1)])
    if np.allclose(deriv, 0):
        return math.sqrt(max(abs(a[d].real), 0.0)), 0.0
    roots = np.roots(deriv[::-1])
    candidates = [0.0]
    for z in roots:
        if abs(abs(z) - 1.0) < 1e-6:
            candidates.append(float(np.angle(z)))
    best_t, best_v = 0.0, -1.0
    powers = np.arange(d + 1)
    for t in candidates:
        v = abs(np.dot(coeffs, np.exp(1j * powers * t)))
        if v > best_v:
            best_v, best_t = v, t
    return best_v, best_t


def _coordinate_ascent(
    terms, variables, radii, theta0: np.ndarray, max_cycles: int
) -> tuple[np.ndarray, float, bool]:
    """Cyclic exact line maximization along each phase coordinate."""
    k = len(variables)
    theta = np.array(theta0, dtype=float)
    axis_of = {v: a for a, v in enumerate(variables)}

    def collapse(axis: int) -> np.ndarray:
        # Coefficients of the univariate polynomial in z = e^{i theta_axis}.
        var = variables[axis]
        deg = 0
        for mono, _ in terms:
            for i, e in mono:
                if i == var:
                    deg = max(deg, e)
        u = np.zeros(deg + 1, dtype=np.complex128)
        for mono, c in terms:
            coef = complex(c)
            e_here = 0
            for i, e in mono:
                if i == var:
                    e_here = e
                    coef *= radii[i] ** e
                else:
                    coef *= (radii[i] * np.exp(1j * theta[axis_of[i]])) ** e
            u[e_here] += coef
        return u

    current = abs(
        sum(
            complex(c)
            * np.prod(
                [
                    (radii[i] * np.exp(1j * theta[axis_of[i]])) ** e
                    for i, e in mono
                ]
                or [1.0]
            )
            for mono, c in terms
        )
    )
    converged = False
    for _ in range(max_cycles):
        before = current
        for axis in range(k):
            u = collapse(axis)
            v, t = _line_max_on_circle(u)
            if v >= current:
                current = v
                theta[axis] = t % (2.0 * np.pi)
        if current - before <= 1e-13 * max(1.0, current):
            converged = True
            break
    return theta, float(current), converged


def _polish(terms, variables, radii, theta0: np.ndarray) -> tuple[np.ndarray, float, bool]:
    """Smooth local maximization of |p|^2 with an analytic gradient.

    Coordinate ascent zigzags slowly along curved ridges; a quasi-Newton
    step from its endpoint converges the remaining distance quickly.
    """
    k = len(variables)
    axis_of = {v: a for a, v in enumerate(variables)}
    exps = np.zeros((len(terms), k))
    weights = np.zeros(len(terms), dtype=np.complex128)
    for m, (mono, c) in enumerate(terms):
        coef = complex(c)
        for i, e in mono:
            coef *= radii[i] ** e
            exps[m, axis_of[i]] = e
        weights[m] = coef

    def neg_square(theta):
        ph = weights * np.exp(1j * (exps @ theta))
        val = ph.sum()
        grad = 2.0 * np.real(np.conj(val) * 1j * (ph @ exps))
        return -(val.real**2 + val.imag**2), -grad

    res = optimize.minimize(neg_square, np.asarray(theta0, dtype=float), jac=True, method="L-BFGS-B")
    return res.x, math.sqrt(max(-res.fun, 0.0)), bool(res.success)


def torus_sup(
    p: SparseMultiPoly,
    radius: float = 1.0,
    grid_per_var: int = 8,
    refine_steps: int = 12,
    seed: int = 0,
    restarts: int = 6,
    budget: int = 1 << 22,
) -> TorusSupResult:
    """Certified lower bound on sup |p| over the torus of the given radius.

    Deterministic phase grid, seeded random restarts, and cyclic exact
    coordinate maximization.  Ties on the grid break toward the first index
    in row-major phase order, so results are reproducible.
    """
    if not 0 < radius <= 1:
        raise ValueError(f"radius must lie in (0, 1], got {radius}")
    pf = p.to_float()
    variables = pf.variables()
    k = len(variables)
    const = abs(scalars.to_complex(pf.terms.get((), 0j)))
    if k == 0:
        return TorusSupResult(const, {}, {}, radius, True)
    if grid_per_var < 1 or grid_per_var**k > budget:
        raise BudgetExceededError(
            f"grid {grid_per_var}^{k} exceeds the point budget {budget}"
        )
    radii = {v: radius for v in variables}
    terms = list(pf.terms.items())
    vals = _grid_values(terms, variables, radii, grid_per_var)
    mag = np.abs(vals)
    flat = int(np.argmax(mag))
    idx = np.unravel_index(flat, mag.shape)
    theta_grid = 2.0 * np.pi * np.array(idx, dtype=float) / grid_per_var
    grid_best = float(mag.flat[flat])

    rng = np.random.default_rng(seed)
    starts = [theta_grid]
    for _ in range(restarts):
        starts.append(rng.uniform(0.0, 2.0 * np.pi, size=k))

    best_val, best_theta, conv = grid_best, theta_grid, False
    for th0 in starts:
        th, v, c = _coordinate_ascent(terms, variables, radii, th0, refine_steps)
        th2, v2, ok = _polish(terms, variables, radii, th)
        if v2 >= v:
            th, v, c = th2, v2, (c or ok)
        if v > best_val:
            best_val, best_theta, conv = v, th, c
        elif c and abs(v - best_val) <= 1e-9 * max(1.0, best_val):
            conv = True
    phases = {v: float(best_theta[a] % (2 * np.pi)) for a, v in enumerate(variables)}
    point = {v: radius * complex(np.exp(1j * t)) for v, t in phases.items()}
    return TorusSupResult(float(best_val), phases, point, radius, conv)


def auto_grid(nvars: int, budget: int = 1 << 18, lo: int = 3, hi: int = 32) -> int:
    """Largest per-variable grid size whose full grid fits the point budget."""
    if nvars <= 0:
        return hi
    g = hi
    while g > lo and g**nvars > budget:
        g -= 1
    return max(g, lo)


# -- Cauchy / DFT coefficient recovery ------------------------------------


def cauchy_coefficient(
    f_or_poly,
    n: int,
    table: PrimeTable,
    grid_per_var: int,
    radius=0.5,
    budget: int = 1 << 22,
) -> complex:
    """Recover a_n by a discrete Fourier average over a uniform torus grid.

    Exact (up to rounding) when grid_per_var exceeds every per-variable
    degree of the underlying polynomial; too small a grid aliases silently,
    so the caller supplies the degree bound.  ``radius`` may be a scalar or
    a per-variable mapping {index: r_i}.
    """
    if isinstance(f_or_poly, TruncatedDirichletSeries):
        poly = bohr_lift(f_or_poly, table)
    else:
        poly = f_or_poly
    pf = poly.to_float()
    target = table.factor(n).as_dict()
    variables = sorted(set(pf.variables()) | set(target))
    k = len(variables)
    if k == 0:
        return scalars.to_complex(pf.terms.get((), 0j))
    if grid_per_var < 1 or grid_per_var**k > budget:
        raise BudgetExceededError(
            f"grid {grid_per_var}^{k} exceeds the point budget {budget}"
        )
    if isinstance(radius, dict):
        radii = {v: float(radius.get(v, 0.5)) for v in variables}
    else:
        radii = {v: float(radius) for v in variables}
    for v, r in radii.items():
        if not 0 < r <= 1:
            raise ValueError(f"radius for variable {v} must lie in (0, 1]")
    vals = _grid_values(list(pf.terms.items()), variables, radii, grid_per_var)
    g = grid_per_var
    theta = 2.0 * np.pi * np.arange(g) / g
    # Multiply by conj of the target monomial phase and divide by its radius
    # weight, then average: exact DFT orthogonality kills all other terms.
    for axis, v in enumerate(variables):
        a = target.get(v, 0)
        if a:
            shape = [1] * k
            shape[axis] = g
            vals = vals * np.exp(-1j * a * theta).reshape(shape)
    scale = 1.0
    for v in variables:
        scale *= radii[v] ** target.get(v, 0)
    return complex(vals.mean() / scale)

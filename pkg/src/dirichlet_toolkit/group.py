"""Permutations of prime indices and the induced action on series.

A permutation sigma of the index set extends to the completely
multiplicative bijection of the integers
    sigma_hat(prod p_i^{e_i}) = prod p_{sigma(i)}^{e_i},
which transports series coefficients, partitions integers into orbits, and
yields the orbit-averaging projection onto invariant series.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction

from . import scalars
from .bohr import SparseMultiPoly, _canonical
from .errors import (
    GroupTooLargeError,
    ProductCeilingError,
    TableTooSmallError,
    UnresolvedOrbitError,
)
from .primes import PrimeTable
from .scalars import EXACT
from .series import TruncatedDirichletSeries

DEFAULT_CEILING = 2**63 - 1
DEFAULT_ENUMERATION_CAP = 10_000
DEFAULT_INDEX_BOUND = 100_000


class FiniteSupportPermutation:
    """Bijection of positive integers that moves only finitely many points."""

    __slots__ = ("_map", "_inv")

    def __init__(self, mapping: dict[int, int]):
        mapping = {int(i): int(j) for i, j in mapping.items() if int(i) != int(j)}
        if set(mapping) != set(mapping.values()):
            raise ValueError("support map is not a bijection of its support")
        if any(i < 1 for i in mapping) or any(j < 1 for j in mapping.values()):
            raise ValueError("indices must be positive")
        self._map = mapping
        self._inv = {j: i for i, j in mapping.items()}

    @classmethod
    def identity(cls) -> "FiniteSupportPermutation":
        return cls({})

    @classmethod
    def from_cycles(cls, text: str) -> "FiniteSupportPermutation":
        """Parse cycle notation over positive integers, e.g. "(1 2)(4 5 6)"."""
        text = text.strip()
        if text in ("", "()", "id", "identity"):
            return cls.identity()
        cycles = _re.findall(r"\(([^()]*)\)", text)
        if not cycles or _re.sub(r"\([^()]*\)|\s", "", text):
            raise ValueError(f"cannot parse cycle notation {text!r}")
        mapping: dict[int, int] = {}
        seen: set[int] = set()
        for body in cycles:
            pts = [int(tok) for tok in body.replace(",", " ").split()]
            if len(pts) < 2:
                continue
            if seen & set(pts) or len(set(pts)) != len(pts):
                raise ValueError(f"repeated point in cycles {text!r}")
            seen.update(pts)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                mapping[a] = b
        return cls(mapping)

    def to_cycles(self) -> str:
        left = set(self._map)
        parts = []
        while left:
            start = min(left)
            cyc = [start]
            left.discard(start)
            nxt = self._map[start]
            while nxt != start:
                cyc.append(nxt)
                left.discard(nxt)
                nxt = self._map[nxt]
            parts.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(parts) or "()"

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self._map)

    def __call__(self, i: int) -> int:
        return self._map.get(i, i)

    def inv(self, i: int) -> int:
        return self._inv.get(i, i)

    def inverse(self) -> "FiniteSupportPermutation":
        return FiniteSupportPermutation(self._inv)

    def __mul__(self, other: "FiniteSupportPermutation"):
        """Composition: (self * other)(i) = self(other(i))."""
        pts = self.support | other.support
        return FiniteSupportPermutation({i: self(other(i)) for i in pts})

    def __eq__(self, other):
        if not isinstance(other, FiniteSupportPermutation):
            return NotImplemented
        return self._map == other._map

    def __hash__(self):
        return hash(frozenset(self._map.items()))

    def __repr__(self):
        return f"FiniteSupportPermutation({self.to_cycles()!r})"


class RulePermutation:
    """Permutation given by forward/inverse callables.

    Supports permutations with infinite support (e.g. an infinite cycle on
    the indices); such generators make orbit finiteness semidecidable, so
    orbit searches may return an unresolved status.
    """

    __slots__ = ("forward", "backward", "name")

    def __init__(self, forward, backward, name: str = "rule"):
        self.forward = forward
        self.backward = backward
        self.name = name

    def __call__(self, i: int) -> int:
        return self.forward(i)

    def inv(self, i: int) -> int:
        return self.backward(i)

    def __repr__(self):
        return f"RulePermutation({self.name})"


def infinite_index_cycle() -> RulePermutation:
    """The two-sided infinite cycle ... 4 -> 2 -> 1 -> 3 -> 5 -> ...

    Odd indices shift up by 2, 1 receives from 2, evens shift down by 2.
    Every index lies on a single infinite orbit.
    """

    def fwd(i: int) -> int:
        if i % 2 == 1:
            return i + 2
        return 1 if i == 2 else i - 2

    def bwd(i: int) -> int:
        if i == 1:
            return 2
        if i % 2 == 1:
            return i - 2
        return i + 2

    return RulePermutation(fwd, bwd, "infinite-cycle")


class PermutationGroup:
    """Generator-presented group of index permutations.

    Enumeration of all elements is attempted lazily and only for groups of
    finite-support generators whose order stays within the cap.
    """

    def __init__(self, generators, enumeration_cap: int = DEFAULT_ENUMERATION_CAP):
        self.generators = list(generators)
        self.enumeration_cap = enumeration_cap
        self._elements: list[FiniteSupportPermutation] | None = None
        self._enumeration_failed = False

    @classmethod
    def from_cycles(cls, *cycle_strings, enumeration_cap: int = DEFAULT_ENUMERATION_CAP):
        return cls(
            [FiniteSupportPermutation.from_cycles(s) for s in cycle_strings],
            enumeration_cap,
        )

    @classmethod
    def from_json_dict(cls, doc: dict):
        return cls.from_cycles(
            *doc["generators"],
            enumeration_cap=doc.get("enumeration_cap", DEFAULT_ENUMERATION_CAP),
        )

    def to_json_dict(self) -> dict:
        gens = []
        for g in self.generators:
            if not isinstance(g, FiniteSupportPermutation):
                raise ValueError("only finite-support generators serialize to JSON")
            gens.append(g.to_cycles())
        return {"generators": gens, "enumeration_cap": self.enumeration_cap}

    def elements(self) -> list[FiniteSupportPermutation] | None:
        """Full element list, or None when enumeration is not possible."""
        if self._elements is not None:
            return self._elements
        if self._enumeration_failed:
            return None
        if not all(isinstance(g, FiniteSupportPermutation) for g in self.generators):
            self._enumeration_failed = True
            return None
        gens = [g for g in self.generators] + [g.inverse() for g in self.generators]
        seen = {FiniteSupportPermutation.identity()}
        frontier = list(seen)
        while frontier:
            nxt = []
            for el in frontier:
                for g in gens:
                    cand = g * el
                    if cand not in seen:
                        if len(seen) >= self.enumeration_cap:
                            self._enumeration_failed = True
                            return None
                        seen.add(cand)
                        nxt.append(cand)
            frontier = nxt
        self._elements = sorted(seen, key=lambda p: sorted(p._map.items()))
        return self._elements

    def order(self) -> int | None:
        els = self.elements()
        return None if els is None else len(els)


# -- the completely multiplicative action ---------------------------------


def _apply_to_exponents(sigma, exponents: dict[int, int]) -> dict[int, int]:
    return {sigma(i): e for i, e in exponents.items()}


def _vector_value(exponents: dict[int, int], table: PrimeTable, ceiling: int) -> int:
    n = 1
    for i, e in sorted(exponents.items()):
        p = table.prime(i)
        for _ in range(e):
            n *= p
            if n > ceiling:
                raise ProductCeilingError(
                    f"permuted image exceeds the product ceiling {ceiling}"
                )
    return n


def hat_apply(
    sigma, n: int, table: PrimeTable, ceiling: int = DEFAULT_CEILING
) -> int:
    """sigma_hat(n) = prod p_{sigma(i)}^{e_i} for n = prod p_i^{e_i}."""
    vec = table.factor(n).as_dict()
    return _vector_value(_apply_to_exponents(sigma, vec), table, ceiling)


def act(
    sigma,
    f: TruncatedDirichletSeries,
    table: PrimeTable,
    ceiling: int = DEFAULT_CEILING,
) -> TruncatedDirichletSeries:
    """Transport coefficients: result coefficient at sigma_hat(n) is a_n.

    The window is enlarged to cover the image of the support, since the
    action genuinely moves support.
    """
    out = {}
    window = f.window
    for n, c in f.coeffs.items():
        m = hat_apply(sigma, n, table, ceiling)
        out[m] = c
        window = max(window, m)
    return TruncatedDirichletSeries(window, out, f.mode)


# -- orbit machinery ------------------------------------------------------


@dataclass(frozen=True)
class IntegerOrbit:
    seed: int
    members: tuple[int, ...]
    status: str  # "finite" | "unresolved"
    bound: int

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class OrbitPartition:
    index_bound: int
    orbits: tuple[tuple[int, ...], ...]
    unresolved: frozenset[int]  # positions into ``orbits`` that escaped

    def orbit_of(self, i: int) -> tuple[int, ...]:
        for orb in self.orbits:
            if i in orb:
                return orb
        raise ValueError(f"index {i} beyond partition bound {self.index_bound}")


def integer_orbit(
    generators,
    n: int,
    bound: int,
    table: PrimeTable,
    ceiling: int = DEFAULT_CEILING,
) -> IntegerOrbit:
    """BFS closure of n under sigma_hat of every generator and inverse.

    The closure is tracked on factorization exponent vectors, so members may
    be certified without factoring the (possibly large) images.  If any
    image exceeds ``bound`` the orbit is reported unresolved, not an error.
    """
    start = tuple(sorted(table.factor(n).as_dict().items()))
    seen = {start}
    frontier = [start]
    status = "finite"
    while frontier:
        nxt = []
        for vec in frontier:
            d = dict(vec)
            for g in generators:
                for apply_dir in (lambda i, g=g: g(i), lambda i, g=g: g.inv(i)):
                    image = {apply_dir(i): e for i, e in d.items()}
                    key = tuple(sorted(image.items()))
                    if key in seen:
                        continue
                    try:
                        value = _vector_value(image, table, min(bound, ceiling))
                    except (ProductCeilingError, TableTooSmallError):
                        status = "unresolved"
                        continue
                    if value > bound:
                        status = "unresolved"
                        continue
                    seen.add(key)
                    nxt.append(key)
        frontier = nxt
    members = sorted(_vector_value(dict(vec), table, ceiling) for vec in seen)
    return IntegerOrbit(n, tuple(members), status, bound)


def index_orbit(generators, i: int, bound: int) -> tuple[tuple[int, ...], str]:
    """Orbit of a single prime index under the generators, BFS-bounded."""
    seen = {i}
    frontier = [i]
    status = "finite"
    while frontier:
        nxt = []
        for j in frontier:
            for g in generators:
                for image in (g(j), g.inv(j)):
                    if image > bound:
                        status = "unresolved"
                    elif image not in seen:
                        seen.add(image)
                        nxt.append(image)
        frontier = nxt
    return tuple(sorted(seen)), status


def index_orbits(generators, M: int) -> OrbitPartition:
    """Union-find partition of [1..M] under the generators."""
    parent = list(range(M + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    escaped_roots: set[int] = set()
    for i in range(1, M + 1):
        for g in generators:
            j = g(i)
            if j <= M:
                union(i, j)
            else:
                escaped_roots.add(i)
            j = g.inv(i)
            if j <= M:
                union(i, j)
            else:
                escaped_roots.add(i)
    groups: dict[int, list[int]] = {}
    for i in range(1, M + 1):
        groups.setdefault(find(i), []).append(i)
    orbits = tuple(tuple(sorted(v)) for _, v in sorted(groups.items()))
    unresolved = frozenset(
        pos
        for pos, orb in enumerate(orbits)
        if any(find(i) == find(orb[0]) for i in escaped_roots)
    )
    return OrbitPartition(M, orbits, unresolved)


# -- invariant projection and friends -------------------------------------


def _support_orbit(
    generators, n: int, table: PrimeTable, index_bound: int, ceiling: int
) -> tuple[tuple[int, ...], bool]:
    """Integer orbit of n, with a flag for unresolved prime-index orbits."""
    vec = table.factor(n).as_dict()
    for i in vec:
        _, status = index_orbit(generators, i, index_bound)
        if status != "finite":
            return (), True
    orbit = integer_orbit(generators, n, ceiling, table, ceiling)
    # index orbits all finite => the integer orbit is finite; an unresolved
    # status here means the ceiling was hit, which we surface as an error.
    if orbit.status != "finite":
        raise ProductCeilingError(
            f"orbit of {n} exceeds the integer ceiling {ceiling}"
        )
    return orbit.members, False


def project_invariant(
    f: TruncatedDirichletSeries,
    group: PermutationGroup,
    table: PrimeTable,
    policy: str = "error",
    index_bound: int = DEFAULT_INDEX_BOUND,
    ceiling: int = DEFAULT_CEILING,
) -> TruncatedDirichletSeries:
    """Orbit-averaging projection onto invariant series.

    The coefficient at n becomes the average of the stored coefficients
    over the orbit of n when every prime-index orbit of n is finite, and 0
    when some index orbit is infinite/unresolved (policy
    ``zero_unresolved``) or raises (policy ``error``).  The window is
    enlarged to cover every orbit touched by the support, so the result is
    genuinely invariant and the projection idempotent.
    """
    if policy not in ("error", "zero_unresolved"):
        raise ValueError(f"unknown policy {policy!r}")
    gens = group.generators
    zero = scalars.zero(f.mode)
    out: dict[int, object] = {}
    window = f.window
    done: set[int] = set()
    for n in sorted(f.coeffs):
        if n in done:
            continue
        members, unresolved = _support_orbit(gens, n, table, index_bound, ceiling)
        if unresolved:
            if policy == "error":
                raise UnresolvedOrbitError(
                    f"orbit of a prime index of {n} is not certified finite "
                    f"within bound {index_bound}"
                )
            done.add(n)
            continue
        total = zero
        for k in members:
            total = total + f.coeffs.get(k, zero)
        if f.mode == EXACT:
            avg = total / Fraction(len(members))
        else:
            avg = total / len(members)
        for k in members:
            done.add(k)
            window = max(window, k)
            if not scalars.is_zero(avg):
                out[k] = avg
    return TruncatedDirichletSeries(window, out, f.mode)


def group_average(
    f: TruncatedDirichletSeries,
    group: PermutationGroup,
    table: PrimeTable,
    ceiling: int = DEFAULT_CEILING,
) -> TruncatedDirichletSeries:
    """Plain average of the transported series over all enumerated elements.

    Cross-check for the orbit-average projection (they agree for every
    enumerable group); requires a full enumeration.
    """
    elements = group.elements()
    if elements is None:
        raise GroupTooLargeError(
            f"group has no enumeration within cap {group.enumeration_cap}"
        )
    acc: dict[int, object] = {}
    window = f.window
    for el in elements:
        moved = act(el, f, table, ceiling)
        window = max(window, moved.window)
        for n, c in moved.coeffs.items():
            acc[n] = acc[n] + c if n in acc else c
    count = Fraction(len(elements)) if f.mode == EXACT else len(elements)
    out = {n: c / count for n, c in acc.items()}
    return TruncatedDirichletSeries(window, out, f.mode)


@dataclass(frozen=True)
class InvarianceReport:
    status: str  # "invariant" | "violated" | "inconclusive"
    witness: tuple[int, object] | None  # (n, sigma) for the first violation
    checked_pairs: int
    escaped: bool

    def __bool__(self) -> bool:
        return self.status == "invariant"


def is_invariant(
    f: TruncatedDirichletSeries,
    group: PermutationGroup,
    table: PrimeTable,
    ceiling: int = DEFAULT_CEILING,
) -> InvarianceReport:
    """Check a_{sigma_hat(n)} = a_n over the support closure within the window.

    The closure may escape the window (the action moves support outward);
    pairs with an image beyond the window cannot be checked against stored
    data, so a clean run with escapes reports ``inconclusive`` rather than
    ``invariant``.
    """
    gens = group.generators
    zero = scalars.zero(f.mode)
    closure = set(f.coeffs)
    frontier = list(closure)
    escaped = False
    checked = 0
    while frontier:
        nxt = []
        for n in frontier:
            for g in gens:
                for apply_dir in (lambda i, g=g: g(i), lambda i, g=g: g.inv(i)):
                    vec = table.factor(n).as_dict()
                    image_vec = {apply_dir(i): e for i, e in vec.items()}
                    try:
                        m = _vector_value(image_vec, table, ceiling)
                    except (ProductCeilingError, TableTooSmallError):
                        escaped = True
                        continue
                    if m > f.window:
                        escaped = True
                        continue
                    checked += 1
                    if f.coeffs.get(n, zero) != f.coeffs.get(m, zero):
                        return InvarianceReport("violated", (n, g), checked, escaped)
                    if m not in closure:
                        closure.add(m)
                        nxt.append(m)
        frontier = nxt
    status = "inconclusive" if escaped else "invariant"
    return InvarianceReport(status, None, checked, escaped)


def phi_restrict(
    f: TruncatedDirichletSeries, index_set, table: PrimeTable
) -> TruncatedDirichletSeries:
    """Keep exactly the coefficients supported on the semigroup of the index set."""
    index_set = set(index_set)
    out = {
        n: c
        for n, c in f.coeffs.items()
        if table.semigroup_member(n, index_set)
    }
    return TruncatedDirichletSeries(f.window, out, f.mode)


def invariant_orbit_sums(
    M: int, degree: int, group: PermutationGroup
) -> list[SparseMultiPoly]:
    """Spanning invariants: one orbit sum per monomial orbit of degree <= d.

    Monomials in x_1..x_M are permuted through the variable indices; each
    orbit contributes the sum of its monomials with coefficient 1.
    """
    elements = group.elements()
    if elements is None:
        raise GroupTooLargeError(
            f"group has no enumeration within cap {group.enumeration_cap}"
        )

    def monomials_of_degree(d: int):
        def rec(var: int, remaining: int, acc: list):
            if var > M:
                if remaining == 0:
                    yield tuple(acc)
                return
            for e in range(remaining + 1):
                if e:
                    acc.append((var, e))
                yield from rec(var + 1, remaining - e, acc)
                if e:
                    acc.pop()

        yield from rec(1, d, [])

    seen: set = set()
    sums: list[SparseMultiPoly] = []
    for d in range(degree + 1):
        for mono in monomials_of_degree(d):
            mono = _canonical(mono)
            if mono in seen:
                continue
            orbit = set()
            for el in elements:
                img = _canonical({el(i): e for i, e in mono})
                if any(i > M for i, _ in img):
                    raise ValueError(
                        f"group moves variable index beyond M={M}"
                    )
                orbit.add(img)
            seen.update(orbit)
            sums.append(
                SparseMultiPoly(M, {m: 1 for m in orbit}, EXACT)
            )
    return sums

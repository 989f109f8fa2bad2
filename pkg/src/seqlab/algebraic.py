"""Constructive realization of sequences by group endomorphisms.

Two engines live here.  The matrix engine builds, for a prime power q = p^m,
an integer matrix A acting as multiplication by a generator of GF(q)^* and
realizes the p-power sequences ell^(k,m,p) on the m-fold p-torsion module
(fixed points of x -> A^c x are counted by the p-part of det(A^{cn} - I)).
The group engine works with explicit Cayley tables: exhaustive endomorphism
enumeration, fixed-point counting, and search for an endomorphism realizing a
target prefix.

Construction postconditions are re-verified at build time; a verification
failure is an implementation bug and raises, it is never a data outcome.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .arith import factorize, is_prime
from .errors import DegeneratePolynomialError
from .matrices import IntMatrix
from .realizability import Sequence1

# ---------------------------------------------------------------------------
# polynomials over GF(p): ascending coefficient tuples, trimmed, entries 0..p-1


def _trim(a: tuple[int, ...]) -> tuple[int, ...]:
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(tuple(out))


def _poly_rem(a, f, p):
    # remainder of a modulo the monic polynomial f
    a = list(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, c in enumerate(f):
            a[shift + i] = (a[shift + i] - coef * c) % p
        a.pop()
    return _trim(tuple(a))


def _poly_powmod(base, e, f, p):
    result = (1,)
    base = _poly_rem(base, f, p)
    while e:
        if e & 1:
            result = _poly_rem(_poly_mul(result, base, p), f, p)
        base = _poly_rem(_poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def _poly_gcd(a, b, p):
    while b:
        a, b = b, _poly_rem(a, b, p)
    return a


def _is_irreducible(f: tuple[int, ...], p: int) -> bool:
    """Rabin test for a monic polynomial over GF(p)."""
    m = len(f) - 1
    if m < 1:
        return False
    x = (0, 1)
    # x^(p^m) must equal x mod f
    if _poly_powmod(x, p**m, f, p) != _poly_rem(x, f, p):
        return False
    for ell in {q for q, _ in factorize(m)}:
        h = _poly_powmod(x, p ** (m // ell), f, p)
        diff = _trim(tuple((a - b) % p for a, b in itertools.zip_longest(h, x, fillvalue=0)))
        if len(_poly_gcd(f, diff, p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree m over GF(p).

    Candidates are ordered by their non-leading coefficient vector read as a
    base-p integer, which makes the construction reproducible.
    """
    for v in range(p**m):
        coeffs = []
        t = v
        for _ in range(m):
            coeffs.append(t % p)
            t //= p
        f = tuple(coeffs) + (1,)
        if _is_irreducible(f, p):
            return f
    raise RuntimeError(f"no irreducible of degree {m} over GF({p})")  # unreachable


def _element_order(a: tuple[int, ...], f: tuple[int, ...], p: int, group_order: int) -> bool:
    """True when a has full multiplicative order group_order in GF(p^m)."""
    if _poly_powmod(a, group_order, f, p) != (1,):
        return False
    return all(
        _poly_powmod(a, group_order // q, f, p) != (1,)
        for q, _ in factorize(group_order)
        if group_order > 1
    )


def field_generator(p: int, m: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Defining polynomial and a multiplicative generator of GF(p^m).

    Returns (f, g): f the least monic irreducible of degree m, g the least
    nonzero field element (coefficient vectors ordered as base-p integers)
    of order exactly p^m - 1.  Order is verified against the factorization
    of p^m - 1.
    """
    if not is_prime(p):
        raise ValueError(f"prime expected, got {p}")
    if not 1 <= m <= 8:
        raise ValueError(f"degree 1..8 supported, got {m}")
    f = smallest_irreducible(p, m)
    q1 = p**m - 1
    if q1 == 0:
        raise RuntimeError("impossible field size")
    for v in range(1, p**m):
        coeffs = []
        t = v
        for _ in range(m):
            coeffs.append(t % p)
            t //= p
        g = _trim(tuple(coeffs))
        if q1 == 1 or _element_order(g, f, p, q1):
            return f, g
    raise RuntimeError(f"no generator found for GF({p}^{m})")  # unreachable


@dataclass(frozen=True)
class ConstructionParams:
    """Parameters (p, m, k) of an ell-sequence, with q = p^m and c = (q-1)/k."""

    p: int
    m: int
    k: int
    q: int
    c: int | None

    @classmethod
    def create(cls, k: int, m: int, p: int) -> "ConstructionParams":
        if not is_prime(p):
            raise ValueError(f"prime expected, got {p}")
        if m < 1 or k < 1:
            raise ValueError("k >= 1 and m >= 1 required")
        if gcd(k, p) != 1:
            raise ValueError(f"k = {k} must be coprime to p = {p}")
        q = p**m
        c = (q - 1) // k if (q - 1) % k == 0 else None
        return cls(p, m, k, q, c)


def construct_matrix(p: int, m: int) -> tuple[IntMatrix, IntMatrix]:
    """Integer matrix pair (A, B) with A^{q-1} = I + pB, q = p^m, satisfying:

    1. det(A^n - I) is a unit mod p whenever q-1 does not divide n, and
    2. det(B) is a unit mod p.

    A starts as the multiplication-by-generator matrix of GF(q) with entries
    lifted to {0..p-1}; when the raw B fails condition 2 the shift
    A' = A + p(I + AB) is applied.  Both conditions are re-verified before
    returning; failure raises (an implementation bug, not a valid outcome).
    """
    f, g = field_generator(p, m)
    q = p**m
    # column j of A = coefficients of g * x^j reduced mod f
    cols = []
    for j in range(m):
        xj = tuple([0] * j + [1])
        prod = _poly_rem(_poly_mul(g, xj, p), f, p)
        cols.append(tuple(prod) + (0,) * (m - len(prod)))
    A = IntMatrix([[cols[j][i] for j in range(m)] for i in range(m)])
    I = IntMatrix.identity(m)

    B = (A ** (q - 1) - I).divide_exact(p)
    if B.det() % p == 0:
        A = A + p * (I + A * B)
        B = (A ** (q - 1) - I).divide_exact(p)

    # re-verify both postconditions on the returned pair
    if B.det() % p == 0:
        raise RuntimeError(f"construct_matrix({p},{m}): det(B) = 0 mod {p}")
    if A ** (q - 1) != I + p * B:
        raise RuntimeError(f"construct_matrix({p},{m}): A^(q-1) != I + pB")
    power = I
    for n in range(1, q - 1):
        power = power * A
        if (power - I).det() % p == 0:
            raise RuntimeError(
                f"construct_matrix({p},{m}): det(A^{n} - I) = 0 mod {p}"
            )
    return A, B


def ell_sequence(params: ConstructionParams, N: int) -> Sequence1:
    """The sequence with value p^(m(1+ord_p(n))) at multiples of k and 1 elsewhere."""
    if N < 1:
        raise ValueError("N >= 1 required")
    p, m, k = params.p, params.m, params.k
    values = []
    for n in range(1, N + 1):
        if n % k == 0:
            e = 0
            t = n
            while t % p == 0:
                t //= p
                e += 1
            values.append(p ** (m * (1 + e)))
        else:
            values.append(1)
    return Sequence1(tuple(values), f"ell({k},{m},{p})")


def ell_algebraically_realizable(k: int, m: int, p: int) -> bool:
    """Whether ell^(k,m,p) is realizable by a group endomorphism (odd p only).

    The criterion is k | p^m - 1.  The prime 2 needs its own construction and
    is rejected here.
    """
    if p == 2:
        raise ValueError("p = 2 is not covered by this criterion; it has a separate construction")
    if not is_prime(p):
        raise ValueError(f"odd prime expected, got {p}")
    if gcd(k, p) != 1:
        raise ValueError(f"k = {k} must be coprime to p = {p}")
    return (p**m - 1) % k == 0


def torsion_fix_counts(A: IntMatrix, c: int, p: int, N: int) -> Sequence1:
    """Fixed-point counts of x -> A^c x on the (dim A)-fold p-torsion module.

    fix_n is the p-part of |det(A^{cn} - I)|; a vanishing determinant means
    the map has infinitely many periodic points at that n and raises.
    """
    if c < 1 or N < 1:
        raise ValueError("c >= 1 and N >= 1 required")
    if not is_prime(p):
        raise ValueError(f"prime expected, got {p}")
    I = IntMatrix.identity(A.n)
    step = A**c
    power = I
    values = []
    for n in range(1, N + 1):
        power = power * step
        d = (power - I).det()
        if d == 0:
            raise DegeneratePolynomialError(n)
        d = abs(d)
        part = 1
        while d % p == 0:
            d //= p
            part *= p
        values.append(part)
    return Sequence1(tuple(values), f"torsion-fix(c={c},p={p})")


# ---------------------------------------------------------------------------
# finite groups from Cayley tables


@dataclass(frozen=True)
class FiniteGroup:
    """Finite group presented by its full multiplication table.

    The table is validated on construction: identity axioms, associativity,
    and existence of inverses are all checked exhaustively.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int
    names: tuple[str, ...]
    label: str = ""

    def __post_init__(self):
        n = self.order
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError("Cayley table must be order x order")
        if any(not 0 <= v < n for row in self.table for v in row):
            raise ValueError("Cayley table entries must be element indices")
        if len(self.names) != n:
            raise ValueError("need one name per element")
        e = self.identity
        if not 0 <= e < n:
            raise ValueError("identity index out of range")
        for x in range(n):
            if self.table[e][x] != x or self.table[x][e] != x:
                raise ValueError(f"index {e} is not an identity")
        for x in range(n):
            if e not in self.table[x]:
                raise ValueError(f"element {x} has no right inverse")
        for x in range(n):
            for y in range(n):
                xy = self.table[x][y]
                for z in range(n):
                    if self.table[xy][z] != self.table[x][self.table[y][z]]:
                        raise ValueError(
                            f"associativity fails at ({x},{y},{z})"
                        )

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def generating_set(self) -> list[int]:
        """Small generating set found greedily (deterministic)."""
        gens: list[int] = []
        span = {self.identity}
        while len(span) < self.order:
            x = min(i for i in range(self.order) if i not in span)
            gens.append(x)
            span = self._closure(span | {x})
        return gens

    def _closure(self, seed: set[int]) -> set[int]:
        span = set(seed) | {self.identity}
        frontier = list(span)
        while frontier:
            x = frontier.pop()
            for y in list(span):
                for z in (self.table[x][y], self.table[y][x]):
                    if z not in span:
                        span.add(z)
                        frontier.append(z)
        return span


@dataclass(frozen=True)
class Endomorphism:
    """A verified group self-map respecting multiplication."""

    image: tuple[int, ...]

    @classmethod
    def verified(cls, G: FiniteGroup, image) -> "Endomorphism":
        image = tuple(image)
        if len(image) != G.order:
            raise ValueError("image must assign every element")
        if image[G.identity] != G.identity:
            raise ValueError("endomorphism must fix the identity")
        for x in range(G.order):
            for y in range(G.order):
                if image[G.table[x][y]] != G.table[image[x]][image[y]]:
                    raise ValueError(f"not multiplicative at ({x},{y})")
        return cls(image)

    def __call__(self, x: int) -> int:
        return self.image[x]


def enumerate_endomorphisms(G: FiniteGroup) -> list[Endomorphism]:
    """All endomorphisms of G, sorted by image tuple.

    Candidates are generated from images of a generating set, extended by
    word propagation, and kept only when the full multiplicativity check
    passes.  Exhaustive for |G| <= 64.
    """
    if G.order > 64:
        raise ValueError("exhaustive search supported for |G| <= 64 only")
    gens = G.generating_set()
    if not gens:  # trivial group
        return [Endomorphism((G.identity,))]
    found = []
    for images in itertools.product(range(G.order), repeat=len(gens)):
        image = _extend_from_generators(G, gens, images)
        if image is None:
            continue
        try:
            found.append(Endomorphism.verified(G, image))
        except ValueError:
            continue
    found.sort(key=lambda t: t.image)
    return found


def _extend_from_generators(G, gens, images) -> tuple[int, ...] | None:
    """Propagate generator images along words; None on early contradiction."""
    theta = {G.identity: G.identity}
    for g, h in zip(gens, images):
        if theta.get(g, h) != h:
            return None
        theta[g] = h
    frontier = list(theta)
    while frontier:
        x = frontier.pop()
        for g, h in zip(gens, images):
            y = G.table[x][g]
            fy = G.table[theta[x]][h]
            if y in theta:
                if theta[y] != fy:
                    return None
            else:
                theta[y] = fy
                frontier.append(y)
    if len(theta) != G.order:
        return None
    return tuple(theta[x] for x in range(G.order))


def fix_counts(G: FiniteGroup, theta: Endomorphism, N: int) -> Sequence1:
    """fix_n = #{x : theta^n(x) = x} for n <= N, with cycle shortcutting.

    Iterated self-maps of a finite set are eventually periodic, so once a
    composed power repeats the remaining counts are read off the cycle.
    """
    if N < 1:
        raise ValueError("N >= 1 required")
    m = theta.image
    counts: list[int] = []
    seen: dict[tuple[int, ...], int] = {}
    cur = m
    n = 1
    while n <= N:
        if cur in seen:
            start = seen[cur]
            period = n - start
            while len(counts) < N:
                j = len(counts) + 1
                counts.append(counts[start - 1 + (j - start) % period])
            break
        seen[cur] = n
        counts.append(sum(1 for i in range(G.order) if cur[i] == i))
        cur = tuple(m[cur[i]] for i in range(G.order))
        n += 1
    return Sequence1(tuple(counts), f"fix({G.label})" if G.label else "fix")


def find_realizing_endomorphism(
    G: FiniteGroup, target: Sequence1
) -> Endomorphism | None:
    """First endomorphism (in enumeration order) whose fixed-point counts
    match the target over its full length, or None."""
    for theta in enumerate_endomorphisms(G):
        if fix_counts(G, theta, len(target)).values == target.values:
            return theta
    return None


# ---------------------------------------------------------------------------
# Cayley table text format + bundled groups

CAYLEY_FORMAT = """\
line 1: order n / line 2: identity index / next n lines: n indices each
(row x, column y holds the index of x*y) / optional final line: element names.
'#' starts a comment; blank lines are ignored."""


def parse_cayley(text: str, label: str = "") -> FiniteGroup:
    """Parse the Cayley-table text format (see CAYLEY_FORMAT)."""
    rows: list[list[str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if len(rows) < 2:
        raise ValueError("Cayley file needs an order line and an identity line")
    try:
        order = int(rows[0][0])
        identity = int(rows[1][0])
    except ValueError as exc:
        raise ValueError(f"bad order/identity header: {exc}") from None
    if len(rows) < 2 + order:
        raise ValueError(f"expected {order} table rows, found {len(rows) - 2}")
    table = []
    for i in range(order):
        row = rows[2 + i]
        if len(row) != order:
            raise ValueError(f"table row {i} has {len(row)} entries, expected {order}")
        table.append(tuple(int(v) for v in row))
    rest = rows[2 + order :]
    if len(rest) > 1:
        raise ValueError("unexpected trailing content after names line")
    if rest:
        names = tuple(rest[0])
        if len(names) != order:
            raise ValueError(f"names line has {len(names)} entries, expected {order}")
    else:
        names = tuple(str(i) for i in range(order))
    return FiniteGroup(order, tuple(table), identity, names, label)


def bundled_group(name: str) -> FiniteGroup:
    """Load one of the groups shipped with the package (z6, s3, d8, c2c2c2, q8)."""
    from importlib.resources import files

    path = files("seqlab") / "fixtures" / "groups" / f"{name}.cayley"
    try:
        text = path.read_text()
    except FileNotFoundError:
        raise ValueError(f"no bundled group named {name!r}") from None
    return parse_cayley(text, label=name)


BUNDLED_GROUPS = ("z6", "s3", "d8", "c2c2c2", "q8")

"""Exact arithmetic on integer lattices.

Covers the lattice-expression language of the classification tables
(A_n, D_n, E6/E7/E8, U, rank-1 <k>, integer rescaling), Gram matrices,
signatures by exact rational congruence, discriminant groups and finite
quadratic forms, short-vector enumeration in definite lattices, 6-roots,
and Picard-Lefschetz reflections.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .intmat import det, smith_normal_form

Vector = tuple[int, ...]


class LatticeError(ValueError):
    pass


class ParseError(LatticeError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DegenerateLatticeError(LatticeError):
    pass


class IndefiniteLatticeError(LatticeError):
    pass


# ---------------------------------------------------------------------------
# lattice expressions


@dataclass(frozen=True)
class Term:
    """One summand: ``mult`` copies of an atom, form rescaled by ``scale``.

    ``kind`` is one of "A", "D", "E", "U", "diag"; for "diag" the field ``n``
    is the (nonzero) diagonal entry k of the rank-1 form <k>.
    """

    mult: int
    kind: str
    n: int
    scale: int = 1

    def __post_init__(self):
        if self.mult < 1:
            raise LatticeError(f"multiplicity must be >= 1, got {self.mult}")
        if self.scale < 1:
            raise LatticeError(f"scale must be >= 1, got {self.scale}")
        if self.kind == "A" and self.n < 1:
            raise LatticeError(f"A_n requires n >= 1, got n={self.n}")
        if self.kind == "D" and self.n < 4:
            raise LatticeError(f"D_n requires n >= 4, got n={self.n}")
        if self.kind == "E" and self.n not in (6, 7, 8):
            raise LatticeError(f"E_n requires n in 6,7,8, got n={self.n}")
        if self.kind == "diag" and self.n == 0:
            raise LatticeError("rank-1 form <0> is degenerate")
        if self.kind not in ("A", "D", "E", "U", "diag"):
            raise LatticeError(f"unknown atom kind {self.kind!r}")

    @property
    def atom_rank(self) -> int:
        if self.kind == "U":
            return 2
        if self.kind == "diag":
            return 1
        return self.n

    def atom_label(self) -> str:
        if self.kind == "U":
            return "U"
        if self.kind == "diag":
            return f"<{self.n}>"
        return f"{self.kind}{self.n}"

    def __str__(self) -> str:
        s = self.atom_label()
        if self.scale != 1:
            s += f"({self.scale})"
        if self.mult != 1:
            s = f"{self.mult}*{s}"
        return s


@dataclass(frozen=True)
class LatticeExpr:
    terms: tuple[Term, ...]

    @property
    def rank(self) -> int:
        return sum(t.mult * t.atom_rank for t in self.terms)

    def __str__(self) -> str:
        return "+".join(str(t) for t in self.terms)

    def __add__(self, other: "LatticeExpr") -> "LatticeExpr":
        return LatticeExpr(self.terms + other.terms)


def parse_lattice_expr(text: str) -> LatticeExpr:
    """Parse the textual grammar; parse o print is the identity.

    expr := term ("+" term)* ; term := [INT "*"] atom ["(" INT ")"] ;
    atom := "A"INT | "D"INT | "E"INT | "U" | "<" SIGNED_INT ">".
    """
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def peek() -> str:
        skip_ws()
        return text[pos] if pos < n else ""

    def expect(ch: str):
        nonlocal pos
        if peek() != ch:
            raise ParseError(f"expected {ch!r}", pos)
        pos += 1

    def read_int(signed: bool = False) -> int:
        nonlocal pos
        skip_ws()
        start = pos
        if signed and pos < n and text[pos] == "-":
            pos += 1
        digits = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == digits:
            raise ParseError("expected an integer", start)
        return int(text[start:pos])

    def read_term() -> Term:
        nonlocal pos
        mult = 1
        skip_ws()
        save = pos
        if peek().isdigit():
            mult = read_int()
            if peek() == "*":
                pos += 1
            else:
                raise ParseError("expected '*' after multiplicity", pos)
        c = peek()
        if c in "ADE":
            pos += 1
            idx = read_int()
            kind, num = c, idx
        elif c == "U":
            pos += 1
            kind, num = "U", 0
        elif c == "<":
            pos += 1
            k = read_int(signed=True)
            expect(">")
            kind, num = "diag", k
        else:
            raise ParseError("expected a lattice atom", pos if pos < n else save)
        scale = 1
        if peek() == "(":
            pos += 1
            scale = read_int()
            if scale < 1:
                raise ParseError("scale must be positive", pos)
            expect(")")
        try:
            return Term(mult, kind, num, scale)
        except LatticeError as exc:
            raise ParseError(str(exc), save) from None

    terms = [read_term()]
    while True:
        skip_ws()
        if pos >= n:
            break
        expect("+")
        terms.append(read_term())
    return LatticeExpr(tuple(terms))


# ---------------------------------------------------------------------------
# Gram matrices

# E8 in a frozen root basis chosen so that every one of the 240 roots has
# coordinates in [-2, 2] (the Dynkin simple-root basis does not have this
# property: its highest root has a coefficient 6, outside the enumeration
# window used by the brute-force cross-checks).
_E8_GRAM = [
    [2, 1, 0, 1, 0, 0, -1, 0],
    [1, 2, 1, 0, 0, 0, 0, 1],
    [0, 1, 2, 0, 0, 0, 1, 0],
    [1, 0, 0, 2, 1, 0, 0, -1],
    [0, 0, 0, 1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, 0, -1],
    [-1, 0, 1, 0, 0, 0, 2, 0],
    [0, 1, 0, -1, 0, -1, 0, 2],
]


def _path_gram(n: int) -> list[list[int]]:
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
    for i in range(n - 1):
        g[i][i + 1] = g[i + 1][i] = -1
    return g


def _atom_gram(term: Term) -> list[list[int]]:
    if term.kind == "U":
        return [[0, 1], [1, 0]]
    if term.kind == "diag":
        return [[term.n]]
    n = term.n
    if term.kind == "A":
        return _path_gram(n)
    if term.kind == "D":
        # path on nodes 0..n-3, nodes n-2 and n-1 both attached to node n-3
        g = _path_gram(n)
        g[n - 2][n - 1] = g[n - 1][n - 2] = 0
        g[n - 3][n - 1] = g[n - 1][n - 3] = -1
        return g
    # E6 / E7: Bourbaki shape, node 1 hangs off node 3 of the path
    if n == 8:
        return [row[:] for row in _E8_GRAM]
    g = _path_gram(n)
    # reorder: path is alpha1-alpha3-alpha4-...-alphan; alpha2 attaches to alpha4
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
    path = [0] + list(range(2, n))
    for a, b in zip(path, path[1:]):
        g[a][b] = g[b][a] = -1
    g[1][3] = g[3][1] = -1
    return g


@dataclass(frozen=True)
class Block:
    """Location of one atom copy inside a block-diagonal Gram matrix."""

    label: str
    start: int
    size: int
    scale: int


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple[tuple[int, ...], ...]
    blocks: tuple[Block, ...] = ()

    @property
    def rank(self) -> int:
        return len(self.entries)

    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def det(self) -> int:
        return det(self.rows())

    def apply(self, v: Vector) -> Vector:
        _check_dim(self, v)
        return tuple(sum(r[j] * v[j] for j in range(self.rank)) for r in self.entries)

    def inner(self, v: Vector, w: Vector) -> int:
        _check_dim(self, v)
        _check_dim(self, w)
        return sum(v[i] * self.entries[i][j] * w[j]
                   for i in range(self.rank) for j in range(self.rank))

    def norm(self, v: Vector) -> int:
        return self.inner(v, v)


def _check_dim(g: GramMatrix, v: Vector) -> None:
    if len(v) != g.rank:
        raise LatticeError(f"vector length {len(v)} != lattice rank {g.rank}")


def gram(expr: LatticeExpr) -> GramMatrix:
    """Block-diagonal Gram matrix of the expression, with block layout."""
    blocks: list[Block] = []
    size = expr.rank
    g = [[0] * size for _ in range(size)]
    pos = 0
    for term in expr.terms:
        base = _atom_gram(term)
        k = len(base)
        for _ in range(term.mult):
            for i in range(k):
                for j in range(k):
                    g[pos + i][pos + j] = base[i][j] * term.scale
            blocks.append(Block(term.atom_label(), pos, k, term.scale))
            pos += k
    return GramMatrix(tuple(tuple(r) for r in g), tuple(blocks))


def gram_from_rows(rows: list[list[int]]) -> GramMatrix:
    g = [[int(x) for x in r] for r in rows]
    n = len(g)
    if any(len(r) != n for r in g):
        raise LatticeError("Gram matrix must be square")
    for i in range(n):
        for j in range(n):
            if g[i][j] != g[j][i]:
                raise LatticeError("Gram matrix must be symmetric")
    return GramMatrix(tuple(tuple(r) for r in g))


def direct_sum(a: GramMatrix, b: GramMatrix) -> GramMatrix:
    n, m = a.rank, b.rank
    g = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            g[i][j] = a.entries[i][j]
    for i in range(m):
        for j in range(m):
            g[n + i][n + j] = b.entries[i][j]
    return GramMatrix(tuple(tuple(r) for r in g), a.blocks + tuple(
        Block(bl.label, bl.start + n, bl.size, bl.scale) for bl in b.blocks))


# ---------------------------------------------------------------------------
# signatures


def signature(g: GramMatrix) -> tuple[int, int]:
    """Inertia (pos, neg) by exact rational congruence diagonalization."""
    n = g.rank
    a = [[Fraction(x) for x in row] for row in g.entries]
    pos = neg = 0
    for k in range(n):
        if a[k][k] == 0:
            fixed = False
            for j in range(k + 1, n):
                if a[j][k] != 0:
                    for s in (1, -1):
                        if a[k][k] + 2 * s * a[j][k] + a[j][j] != 0:
                            for c in range(k, n):
                                a[k][c] += s * a[j][c]
                            for r in range(k, n):
                                a[r][k] += s * a[r][j]
                            fixed = True
                            break
                    if fixed:
                        break
            if not fixed:
                raise DegenerateLatticeError("degenerate Gram matrix")
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(k + 1, n):
            if a[i][k]:
                c = a[i][k] / p
                for j in range(k, n):
                    a[i][j] -= c * a[k][j]
        for j in range(k + 1, n):
            a[k][j] = Fraction(0)
            a[j][k] = Fraction(0)
    return pos, neg


def is_positive_definite(g: GramMatrix) -> bool:
    pos, neg = signature(g)
    return neg == 0


# ---------------------------------------------------------------------------
# discriminant groups and forms


@dataclass(frozen=True)
class DiscriminantGroup:
    invariant_factors: tuple[int, ...]  # each > 1, divisibility chain
    two_rank: int

    @property
    def order(self) -> int:
        out = 1
        for f in self.invariant_factors:
            out *= f
        return out

    def __str__(self) -> str:
        if not self.invariant_factors:
            return "trivial"
        return " + ".join(f"Z/{f}" for f in self.invariant_factors)


def discriminant_group(g: GramMatrix) -> DiscriminantGroup:
    if g.det() == 0:
        raise DegenerateLatticeError("degenerate Gram matrix")
    factors, _, _ = smith_normal_form(g.rows())
    inv = tuple(f for f in factors if f > 1)
    return DiscriminantGroup(inv, sum(1 for f in inv if f % 2 == 0))


def _mod(x: Fraction, m: int) -> Fraction:
    return x - m * (x / m).__floor__()


@dataclass(frozen=True)
class DiscriminantForm:
    group: DiscriminantGroup
    generators: tuple[tuple[Fraction, ...], ...]  # dual-coset reps, lattice basis coords
    q_values: tuple[Fraction, ...]                # q(gen) mod 2
    b_values: tuple[tuple[Fraction, ...], ...]    # b(gen_i, gen_j) mod 1
    two_part_integer: bool
    _gram: GramMatrix = field(repr=False, compare=False, default=None)

    def q(self, coeffs: tuple[int, ...]) -> Fraction:
        """q of the element sum(c_i * gen_i), as a rational mod 2."""
        n = self._gram.rank
        z = [Fraction(0)] * n
        for c, gen in zip(coeffs, self.generators):
            for i in range(n):
                z[i] += c * gen[i]
        val = sum(z[i] * self._gram.entries[i][j] * z[j]
                  for i in range(n) for j in range(n))
        return _mod(val, 2)


def discriminant_form(g: GramMatrix) -> DiscriminantForm:
    if g.det() == 0:
        raise DegenerateLatticeError("degenerate Gram matrix")
    factors, u, v = smith_normal_form(g.rows())
    group = discriminant_group(g)
    gens: list[tuple[Fraction, ...]] = []
    orders: list[int] = []
    for i, d in enumerate(factors):
        if d > 1:
            gens.append(tuple(Fraction(v[r][i], d) for r in range(g.rank)))
            orders.append(d)

    def pair(x, y) -> Fraction:
        return sum(x[i] * g.entries[i][j] * y[j]
                   for i in range(g.rank) for j in range(g.rank))

    q_vals = tuple(_mod(pair(x, x), 2) for x in gens)
    b_vals = tuple(tuple(_mod(pair(x, y), 1) for y in gens) for x in gens)

    # enumerate the 2-primary part and check integrality of q on it
    two_orders = []
    for d in orders:
        t = 1
        while d % 2 == 0:
            d //= 2
            t *= 2
        two_orders.append(t)
    total = 1
    for t in two_orders:
        total *= t
    if total > 1 << 14:
        raise LatticeError("2-primary part too large to enumerate")
    two_gens = [tuple((d // t) * c for c in gen)
                for gen, d, t in zip(gens, orders, two_orders)]
    # q(sum c_i y_i) = sum c_i c_j num_ij / den with a common denominator,
    # so integrality is a pure-integer congruence
    idx = [k for k, t in enumerate(two_orders) if t > 1]
    den = 1
    for k in idx:
        den = den * two_orders[k] ** 2 // math.gcd(den, two_orders[k] ** 2)
    num = {}
    for a in idx:
        for b in idx:
            val = pair(two_gens[a], two_gens[b]) * den
            assert val.denominator == 1
            num[a, b] = int(val)
    integer = True
    counters = {k: 0 for k in idx}
    while True:
        q_num = sum(counters[a] * counters[b] * num[a, b]
                    for a in idx for b in idx)
        if q_num % den:
            integer = False
            break
        for k in idx:
            counters[k] += 1
            if counters[k] < two_orders[k]:
                break
            counters[k] = 0
        else:
            break

    return DiscriminantForm(group, tuple(gens), q_vals, b_vals, integer, g)


def two_part_integer(g: GramMatrix) -> bool:
    return discriminant_form(g).two_part_integer


# ---------------------------------------------------------------------------
# short vectors, roots, reflections


def enumerate_norm_vectors(g: GramMatrix, norm: int) -> list[Vector]:
    """All v with v.g.v == norm in a positive definite lattice, sorted.

    Depth-first search with exact rational Cholesky (LDL) bounds.
    """
    if norm <= 0:
        raise LatticeError("norm must be positive")
    pos, neg = signature(g)
    if neg > 0:
        raise IndefiniteLatticeError(
            "short-vector enumeration requires a positive definite lattice")
    n = g.rank
    # G = R^T D R with R unit upper triangular
    d = [Fraction(0)] * n
    r = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        d[i] = Fraction(g.entries[i][i]) - sum(d[k] * r[k][i] ** 2 for k in range(i))
        r[i][i] = Fraction(1)
        for j in range(i + 1, n):
            r[i][j] = (Fraction(g.entries[i][j])
                       - sum(d[k] * r[k][i] * r[k][j] for k in range(i))) / d[i]

    out: list[Vector] = []
    x = [0] * n

    def dfs(i: int, rem: Fraction) -> None:
        if i < 0:
            if rem == 0:
                out.append(tuple(x))
            return
        c = sum(r[i][j] * x[j] for j in range(i + 1, n))
        bound = math.sqrt(float(rem / d[i])) if rem > 0 else 0.0
        lo = math.ceil(float(-c) - bound - 1e-9)
        hi = math.floor(float(-c) + bound + 1e-9)
        for xi in range(lo, hi + 1):
            contrib = d[i] * (xi + c) ** 2
            if contrib <= rem:
                x[i] = xi
                dfs(i - 1, rem - contrib)
        x[i] = 0

    dfs(n - 1, Fraction(norm))
    out = [v for v in out if any(v)]
    out.sort()
    return out


def is_six_root(v: Vector, g: GramMatrix) -> bool:
    """True iff v has square 6 and pairs divisibly by 3 with the lattice."""
    _check_dim(g, v)
    if g.norm(v) != 6:
        return False
    return all(p % 3 == 0 for p in g.apply(v))


def picard_lefschetz(v: Vector, x: Vector, g: GramMatrix) -> Vector:
    """Reflection x -> x - sign(v^2) (v.x) v for a vector of square +-2."""
    vv = g.norm(v)
    if vv not in (2, -2):
        raise LatticeError(f"reflection vector must have square +-2, got {vv}")
    s = 1 if vv == 2 else -1
    vx = g.inner(v, x)
    return tuple(xi - s * vx * vi for xi, vi in zip(x, v))

# ambient middle-cohomology lattice of a cubic fourfold, its primitive part
# orthogonal to the polarization, and the polarization class h = (1, 1, 1)
# in the 3<1> block (h.h = 3)
AMBIENT_M_EXPR = parse_lattice_expr("3*<1>+2*U+2*E8")
AMBIENT_M = gram(AMBIENT_M_EXPR)
AMBIENT_M0_EXPR = parse_lattice_expr("A2+2*U+2*E8")
AMBIENT_M0 = gram(AMBIENT_M0_EXPR)
POLARIZATION_H: Vector = (1, 1, 1) + (0,) * 20

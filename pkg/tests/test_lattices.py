import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from realcubic.intmat import is_unimodular, matmul
from realcubic.lattices import (
    DegenerateLatticeError,
    IndefiniteLatticeError,
    GramMatrix,
    LatticeError,
    ParseError,
    discriminant_form,
    discriminant_group,
    enumerate_norm_vectors,
    gram,
    gram_from_rows,
    is_six_root,
    parse_lattice_expr,
    picard_lefschetz,
    signature,
)

ATOMS = ["A1", "A2", "A3", "A5", "D4", "D5", "E6", "E7", "E8", "U",
         "<2>", "<-2>", "<6>", "<-1>", "<3>"]


def random_expr_text(rng):
    terms = []
    for _ in range(rng.randint(1, 5)):
        t = rng.choice(ATOMS)
        if rng.random() < 0.3:
            t += f"({rng.randint(2, 4)})"
        if rng.random() < 0.3:
            t = f"{rng.randint(2, 5)}*{t}"
        terms.append(t)
    return "+".join(terms)


def test_parse_print_round_trip(rng):
    for _ in range(1000):
        text = random_expr_text(rng)
        expr = parse_lattice_expr(text)
        assert str(expr) == text
        assert parse_lattice_expr(str(expr)) == expr


def test_parse_whitespace_and_examples():
    e = parse_lattice_expr(" U(2) + A2 +  E8( 2 ) ")
    assert str(e) == "U(2)+A2+E8(2)"
    assert [t.atom_label() for t in e.terms] == ["U", "A2", "E8"]
    assert [t.scale for t in e.terms] == [2, 1, 2]
    e = parse_lattice_expr("<6>")
    assert e.rank == 1 and gram(e).entries == ((6,),)
    e = parse_lattice_expr("3*A1+<-2>")
    assert e.rank == 4
    assert gram(e).entries == ((2, 0, 0, 0), (0, 2, 0, 0),
                               (0, 0, 2, 0), (0, 0, 0, -2))


@pytest.mark.parametrize("bad", [
    "", "D3", "<0>", "A0", "E5", "0*A1", "U(0)", "U(-2)", "A1+", "+A1",
    "A1**2", "<2", "Q4", "2A1",
])
def test_parse_errors(bad):
    with pytest.raises((ParseError, LatticeError)):
        parse_lattice_expr(bad)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as exc:
        parse_lattice_expr("A2+D3")
    assert exc.value.position == 3


def test_gram_blocks():
    g = gram(parse_lattice_expr("U+2*A1+E8(2)"))
    labels = [(b.label, b.start, b.size, b.scale) for b in g.blocks]
    assert labels == [("U", 0, 2, 1), ("A1", 2, 1, 1), ("A1", 3, 1, 1),
                      ("E8", 4, 8, 2)]
    assert g.entries[0][1] == 1 and g.entries[0][0] == 0
    assert g.entries[2][2] == 2
    assert g.entries[4][4] == 4  # scaled E8 diagonal


def test_gram_standard_dets():
    for text, d in [("A1", 2), ("A2", 3), ("A3", 4), ("D4", 4), ("D5", 4),
                    ("E6", 3), ("E7", 2), ("E8", 1), ("U", -1), ("<6>", 6),
                    ("E8(2)", 256)]:
        assert gram(parse_lattice_expr(text)).det() == d, text


def test_signature_examples():
    assert signature(gram(parse_lattice_expr("U"))) == (1, 1)
    assert signature(gram(parse_lattice_expr("E8"))) == (8, 0)
    assert signature(gram(parse_lattice_expr("<-2>+10*A1"))) == (10, 1)
    with pytest.raises(DegenerateLatticeError):
        signature(gram_from_rows([[1, 1], [1, 1]]))


def random_unimodular(rng, n):
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        for k in range(n):
            m[i][k] += c * m[j][k]
    return m


@pytest.mark.parametrize("text", ["A3", "D4", "U+A2", "<-2>+3*A1", "U+E8(2)"])
def test_signature_invariant_under_congruence(text, rng):
    g = gram(parse_lattice_expr(text))
    sig = signature(g)
    assert sig[0] + sig[1] == g.rank
    for _ in range(100):
        t = random_unimodular(rng, g.rank)
        tt = [[t[r][c] for r in range(g.rank)] for c in range(g.rank)]
        h = gram_from_rows(matmul(tt, matmul(g.rows(), t)))
        assert signature(h) == sig
        assert is_unimodular(t)


def test_discriminant_group_examples():
    assert discriminant_group(gram(parse_lattice_expr("U"))).order == 1
    a2 = discriminant_group(gram(parse_lattice_expr("A2")))
    assert a2.invariant_factors == (3,) and a2.two_rank == 0
    big = discriminant_group(gram(parse_lattice_expr("U(2)+E8(2)")))
    assert big.invariant_factors == (2,) * 10 and big.two_rank == 10


def test_discriminant_group_order_is_det():
    for text in ["A2", "A3", "D4", "E6", "E7", "<6>", "U(2)", "E8(2)",
                 "<-2>+2*A1"]:
        g = gram(parse_lattice_expr(text))
        assert discriminant_group(g).order == abs(g.det())


def test_discriminant_form_examples():
    df = discriminant_form(gram(parse_lattice_expr("<2>")))
    assert str(df.group) == "Z/2"
    assert df.q_values == (Fraction(1, 2),)
    assert not df.two_part_integer

    df = discriminant_form(gram(parse_lattice_expr("U(2)")))
    assert str(df.group) == "Z/2 + Z/2"
    vals = [df.q((1, 0)), df.q((0, 1)), df.q((1, 1))]
    assert sorted(vals) == [0, 0, 1]
    assert df.two_part_integer

    df = discriminant_form(gram(parse_lattice_expr("E8(2)")))
    assert all(q.denominator == 1 for q in df.q_values)
    assert df.two_part_integer

    df = discriminant_form(gram(parse_lattice_expr("<6>")))
    assert not df.two_part_integer  # q(3g) = 3/2 on the 2-part


def test_discriminant_form_quadratic_refines_bilinear(rng):
    for text in ["A2", "D4", "E7", "<6>", "U(2)", "<2>+<4>", "E8(2)",
                 "<-2>+A2"]:
        df = discriminant_form(gram(parse_lattice_expr(text)))
        k = len(df.generators)
        for a in range(k):
            for b in range(k):
                ex = [0] * k
                ex[a] += 1
                ey = [0] * k
                ey[b] += 1
                exy = [x + y for x, y in zip(ex, ey)]
                lhs = df.q(tuple(exy)) - df.q(tuple(ex)) - df.q(tuple(ey))
                rhs = 2 * df.b_values[a][b]
                assert (lhs - rhs) % 2 == 0


def box_oracle_counts(g, norm, height=4):
    """Independent numpy box search; meet-in-the-middle above rank 6."""
    n = g.rank
    gm = np.array(g.rows(), dtype=np.int64)
    coords = np.arange(-height, height + 1)
    if n <= 6:
        grid = np.array(np.meshgrid(*([coords] * n), indexing="ij"))
        pts = grid.reshape(n, -1).T
        norms = np.einsum("ij,jk,ik->i", pts, gm, pts)
        return int(np.count_nonzero(norms == norm)
                   - (1 if norm == 0 else 0))
    k = n // 2
    a_grid = np.array(np.meshgrid(*([coords] * k), indexing="ij"))
    a = a_grid.reshape(k, -1).T
    b_grid = np.array(np.meshgrid(*([coords] * (n - k)), indexing="ij"))
    b = b_grid.reshape(n - k, -1).T
    qa = np.einsum("ij,jk,ik->i", a, gm[:k, :k], a).astype(np.int32)
    qb = np.einsum("ij,jk,ik->i", b, gm[k:, k:], b).astype(np.int32)
    cross = (2 * (a @ gm[:k, k:]) @ b.T).astype(np.int32)
    total = qa[:, None] + cross + qb[None, :]
    return int(np.count_nonzero(total == norm) - (1 if norm == 0 else 0))


ROOT_COUNTS = {"A1": 2, "A2": 6, "A3": 12, "D4": 24, "D5": 40,
               "E6": 72, "E7": 126, "E8": 240}


@pytest.mark.parametrize("text,count", sorted(ROOT_COUNTS.items()))
def test_enumerate_roots_vs_oracle(text, count):
    g = gram(parse_lattice_expr(text))
    roots = enumerate_norm_vectors(g, 2)
    assert len(roots) == count
    assert len(set(roots)) == count
    assert roots == sorted(roots)
    assert all(g.norm(v) == 2 for v in roots)
    assert box_oracle_counts(g, 2) == count


@pytest.mark.parametrize("text", ["A2", "D4", "<6>", "A2+<6>"])
def test_enumerate_norm6_vs_oracle(text):
    g = gram(parse_lattice_expr(text))
    vecs = enumerate_norm_vectors(g, 6)
    assert len(vecs) == box_oracle_counts(g, 6)
    assert all(g.norm(v) == 6 for v in vecs)


def test_enumerate_rejects_indefinite():
    with pytest.raises(IndefiniteLatticeError):
        enumerate_norm_vectors(gram(parse_lattice_expr("U")), 2)


def test_six_roots():
    a2 = gram(parse_lattice_expr("A2"))
    assert is_six_root((1, -1), a2)
    assert not is_six_root((1, 0), a2)
    assert is_six_root((1,), gram(parse_lattice_expr("<6>")))
    # exactly six elements of square 6 in A2, all of them 6-roots
    sixes = enumerate_norm_vectors(a2, 6)
    assert len(sixes) == 6 and all(is_six_root(v, a2) for v in sixes)


def test_picard_lefschetz_examples():
    a2 = gram(parse_lattice_expr("A2"))
    v1, v2 = (1, 0), (0, 1)
    assert picard_lefschetz(v1, v1, a2) == (-1, 0)
    assert picard_lefschetz(v1, v2, a2) == (1, 1)
    g = gram(parse_lattice_expr("<2>+<4>"))
    assert picard_lefschetz((1, 0), (0, 1), g) == (0, 1)  # orthogonal fixed
    with pytest.raises(LatticeError):
        picard_lefschetz((1, 1), (1, 0), g)  # norm 6


@pytest.mark.parametrize("text", ["A3", "D4", "E6", "U+A2", "<-2>+3*A1"])
def test_picard_lefschetz_isometry_involution(text, rng):
    g = gram(parse_lattice_expr(text))
    n = g.rank
    roots = [v for v in itertools.product(range(-2, 3), repeat=n)
             if g.norm(v) == 2]
    for _ in range(50):
        v = rng.choice(roots)
        x = tuple(rng.randint(-5, 5) for _ in range(n))
        y = tuple(rng.randint(-5, 5) for _ in range(n))
        rx, ry = picard_lefschetz(v, x, g), picard_lefschetz(v, y, g)
        assert picard_lefschetz(v, rx, g) == x
        assert g.inner(rx, ry) == g.inner(x, y)


def test_named_ambient_lattices():
    from realcubic.lattices import AMBIENT_M, AMBIENT_M0, POLARIZATION_H
    # the ambient odd lattice 3<1> + 2U + 2E8 and its polarization complement
    assert signature(AMBIENT_M) == (21, 2)
    assert abs(AMBIENT_M.det()) == 1
    assert AMBIENT_M.norm(POLARIZATION_H) == 3
    assert AMBIENT_M0.rank == 22 and signature(AMBIENT_M0) == (20, 2)

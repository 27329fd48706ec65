"""One check per acceptance criterion; each prints a PASS/FAIL line with its runtime."""
import itertools
import random
import time

import sympy

from coha.algebra import element, muln, psi, psi_chain, regrade
from coha.poly import MPoly, format_poly
from coha.quantum import codim, codim_is_block_additive, poincare_check, verify_factorization
from coha.quiver import euler_form
from coha.roots import combined_reineke_order, enumerate_partitions
from coha.strata import euler_class, factored_restriction_check, verify_structure_iso
from helpers import A2, A3, D4, KRONECKER, part, partitions_of, random_element, random_symmetric, whole


def _report(capsys, number, title, ok, started, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({time.perf_counter() - started:.2f}s){' ' + detail if detail else ''}"
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


def test_criterion_01_worked_products(capsys):
    t0 = time.perf_counter()
    w21 = element(A3, (0, 1, 0), "w[2,1]")
    w31 = element(A3, (0, 0, 1), "w[3,1]")
    w31b = regrade(w31, (0, 1, 1))
    got = [
        format_poly((w21 * w31).poly),
        format_poly((w31 * w21).poly),
        format_poly((w21 * w31b).poly),
        format_poly((w31b * w21).poly),
    ]
    expected = [
        "ω[2,1]*ω[3,1]",
        "ω[2,1]^2*ω[3,1] - ω[2,1]*ω[3,1]^2",
        "-ω[3,1]",
        "ω[2,1]*ω[3,1] + ω[2,2]*ω[3,1] - ω[3,1]^2",
    ]
    grades_ok = (w21 * w31b).grade == (0, 2, 1)
    _report(capsys, 1, "four worked A3 products", got == expected and grades_ok, t0, "" if got == expected else str(got))


def _jacobi_trudi(lam, r):
    xs = sympy.symbols(f"x1:{r + 1}")

    def h(k):
        if k < 0:
            return sympy.Integer(0)
        return sum((sympy.prod(c) for c in itertools.combinations_with_replacement(xs, k)), sympy.Integer(0)) if k else sympy.Integer(1)

    n = len(lam)
    return sympy.Poly(sympy.Matrix(n, n, lambda i, j: h(lam[i] - i + j)).det(), *xs)


def _as_sympy(p: MPoly, r):
    xs = sympy.symbols(f"x1:{r + 1}")
    expr = sum(
        (sympy.Rational(int(c.numerator), int(c.denominator)) * sympy.prod([xs[v.second - 1] ** e for v, e in m.items()]) for m, c in p.items()),
        sympy.Integer(0),
    )
    return sympy.Poly(expr, *xs)


def test_criterion_02_schur(capsys):
    t0 = time.perf_counter()
    bad = []
    checked = 0
    for size in range(0, 5):
        for rows in range(1, 4):
            for lam in partitions_of(size, rows):
                lam = lam + (0,) * (rows - len(lam))
                got = muln(psi_chain(lam))
                checked += 1
                if got.grade != (rows,) or _as_sympy(got.poly, rows) != _jacobi_trudi(lam, rows):
                    bad.append(lam)
    _report(capsys, 2, f"psi-chains equal Schur polynomials ({checked} cases)", not bad, t0, str(bad) if bad else "")


def test_criterion_03_exterior(capsys):
    t0 = time.perf_counter()
    ok = True
    for i, j in itertools.product(range(7), repeat=2):
        a, b = psi(i) * psi(j), psi(j) * psi(i)
        ok &= (a.poly + b.poly).is_zero()
        if i == j:
            ok &= a.poly.is_zero()
    _report(capsys, 3, "exterior relations for psi_0..psi_6", ok, t0)


def test_criterion_04_pentagon(capsys):
    t0 = time.perf_counter()
    res = verify_factorization(whole(A2), (3, 3))
    _report(capsys, 4, "pentagon identity on 1<-2, box (3,3)", res.ok and res.grades_checked == 16, t0)


def test_criterion_05_factorization(capsys):
    t0 = time.perf_counter()
    runs = [
        (A3, [[1, 2, 3]], (2, 2, 2)),
        (A3, [[1], [2, 3]], (2, 2, 2)),
        (D4, [[1], [2], [3], [4]], (1, 1, 1, 1)),
        (D4, [[1, 2, 3, 4]], (1, 1, 1, 1)),
    ]
    failures = [(b, res.to_json()) for q, b, box in runs if not (res := verify_factorization(part(q, b), box)).ok]
    _report(capsys, 5, "dilogarithm factorization on A3 and D4 partitions", not failures, t0, str(failures) if failures else "")


def test_criterion_06_injectivity_example(capsys):
    t0 = time.perf_counter()
    p = part(A3, [[1], [2, 3]])
    m = (2, 1, 1, 1)
    eps_ok = format_poly(euler_class(p, m)) == "-t[2,1] + t[4,1]"
    rng = random.Random(2024)
    ok = eps_ok
    for _ in range(20):
        fs = [random_symmetric(rng, (mu,), rng.randint(0, 2), homogeneous=False) for mu in m]
        a, wa = factored_restriction_check(p, m, fs, markers=[1, 3, 2, 2])
        b, wb = factored_restriction_check(p, m, fs, markers=[1, 3, 3, 2])
        ok &= a and b and wa["restricted_product"] == wb["restricted_product"]
    _report(capsys, 6, "Euler class t[4,1]-t[2,1] and 20 factored restrictions", ok, t0)


def test_criterion_07_codim_coherence(capsys):
    t0 = time.perf_counter()
    cases = [whole(A2), whole(A3), part(A3, [[1], [2, 3]]), whole(D4)]
    count, bad = 0, []
    for p in cases:
        o = combined_reineke_order(p)
        for gamma in itertools.product(range(3), repeat=p.quiver.vertex_count):
            for m in enumerate_partitions(o.roots, gamma):
                count += 1
                c = codim(p, m, o)  # raises on negative or fractional values
                if not codim_is_block_additive(p, m, o) or euler_class(p, m, o).degree() != c:
                    bad.append((p.blocks, m))
    _report(capsys, 7, f"codimension coherence over {count} partitions", not bad, t0, str(bad[:3]) if bad else "")


def test_criterion_08_structure_iso(capsys):
    t0 = time.perf_counter()
    runs = [(whole(A2), g) for g in [(1, 1), (2, 1), (2, 2)]] + [(part(A3, [[1], [2, 3]]), (1, 1, 1))]
    bad = []
    for p, g in runs:
        for r in verify_structure_iso(p, g, 4):
            if not r.verified:
                bad.append((g, r.to_json()))
    _report(capsys, 8, "multiplication isomorphism up to degree 4", not bad, t0, str(bad) if bad else "")


GRADES = {
    A2: [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2), (2, 1), (1, 2)],
    A3: [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 1, 1), (2, 0, 0)],
    KRONECKER: [(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)],
}


def test_criterion_09_degree_and_associativity(capsys):
    t0 = time.perf_counter()
    rng = random.Random(99)
    ok, pairs, nonzero = True, 0, 0
    while pairs < 100:
        q = rng.choice(list(GRADES))
        g1, g2 = rng.choice(GRADES[q]), rng.choice(GRADES[q])
        f = random_element(rng, q, g1, rng.randint(0, 2))
        g = random_element(rng, q, g2, rng.randint(0, 2))
        if f.poly.is_zero() or g.poly.is_zero():
            continue
        pairs += 1
        h = f * g
        if h.poly.is_zero():
            continue
        nonzero += 1
        ok &= h.poly.is_homogeneous() and h.degree() == f.degree() + g.degree() - euler_form(q, g1, g2)
    for _ in range(30):
        q = rng.choice(list(GRADES))
        f, g, h = (random_element(rng, q, rng.choice(GRADES[q][:4]), rng.randint(0, 1), homogeneous=False) for _ in range(3))
        ok &= ((f * g) * h).poly == (f * (g * h)).poly
    _report(capsys, 9, f"degree contract on 100 pairs ({nonzero} nonzero) and 30 associative triples", ok, t0)


def test_criterion_10_poincare(capsys):
    t0 = time.perf_counter()
    bad = []
    for p in [whole(A2), whole(A3), part(A3, [[1], [2, 3]])]:
        for gamma in itertools.product(range(3), repeat=p.quiver.vertex_count):
            for k, lhs, rhs in poincare_check(p, gamma, 4):
                if lhs != rhs:
                    bad.append((p.blocks, gamma, k, lhs, rhs))
    _report(capsys, 10, "Poincare bookkeeping on A2 and A3", not bad, t0, str(bad[:3]) if bad else "")

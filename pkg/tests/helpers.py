"""Shared independent oracles and random generators for the test suite.

Everything here recomputes expected values by a route different from the
library code it checks: determinants instead of subset enumeration, naive
chain iteration instead of subset transforms, literal quantifier loops
instead of reformulated conditions, Burnside sums instead of recursions.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import product

from kacdepth import LaurentPoly, Quiver, RatFunc, TSeries
from kacdepth.oring import OElem
from kacdepth.quiver import ValuedTree, tree_path_data


# ----------------------------------------------------------------------
# graph oracles


def matrix_tree_count(quiver: Quiver) -> int:
    """Spanning-tree count via the reduced-Laplacian determinant."""
    n = quiver.nvertices
    if n == 1:
        return 1
    lap = [[Fraction(0)] * n for _ in range(n)]
    for s, t in quiver.arrows:
        if s == t:
            continue
        lap[s][s] += 1
        lap[t][t] += 1
        lap[s][t] -= 1
        lap[t][s] -= 1
    minor = [row[1:] for row in lap[1:]]
    return int(_det_fraction(minor))


def _det_fraction(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    m = [row[:] for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def chain_sum_naive(quiver: Quiver, alpha: int) -> LaurentPoly:
    """Direct iteration over all nested arrow-subset chains of length alpha."""
    m = quiver.narrows
    total = LaurentPoly.zero()
    qm1 = LaurentPoly({1: 1, 0: -1})
    for entry in product(range(1, alpha + 2), repeat=m):
        # entry[a] = first index k with a in E_k (alpha+1 = never)
        masks = []
        for k in range(1, alpha + 1):
            masks.append([a for a in range(m) if entry[a] <= k])
        top = quiver.restrict_arrows(masks[-1])
        if not top.is_connected():
            continue
        weight = qm1 ** top.betti()
        exponent = sum(quiver.restrict_arrows(mk).betti() for mk in masks[:-1])
        total = total + weight * LaurentPoly.q(exponent)
    return total


def fubini(n: int) -> int:
    """Ordered Bell number: ordered set partitions of an n-set."""
    if n == 0:
        return 1
    return sum(math.comb(n, k) * fubini(n - k) for k in range(1, n + 1))


def chain_face_count(n: int) -> int:
    """Faces of the order complex of proper nonempty subsets of an n-set."""
    return 1 + sum(math.comb(n, m) * fubini(m) for m in range(1, n))


def literal_shelling_check(facets: list[frozenset]) -> bool:
    """The shelling condition with its quantifiers spelled out."""
    if not facets:
        return True
    sizes = {len(f) for f in facets}
    if len(sizes) != 1:
        return False
    d = len(facets[0]) - 1
    if d == 0:
        return True
    for i in range(1, len(facets)):
        fi = facets[i]
        if not any(fi & facets[j] for j in range(i)):
            return False
        for j in range(i):
            if not any(
                len(fi & facets[k]) == d and fi & facets[j] <= fi & facets[k]
                for k in range(i)
            ):
                return False
    return True


# ----------------------------------------------------------------------
# Burnside oracles over prime fields


def _gl_matrices(r: int, p: int) -> list[tuple[tuple[int, ...], ...]]:
    out = []
    for flat in product(range(p), repeat=r * r):
        mat = tuple(flat[i * r : (i + 1) * r] for i in range(r))
        if _det_mod(mat, p) != 0:
            out.append(mat)
    return out


def _det_mod(mat, p: int) -> int:
    n = len(mat)
    m = [list(row) for row in mat]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] % p), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = (det * m[col][col]) % p
        inv = pow(m[col][col], -1, p)
        for r in range(col + 1, n):
            f = (m[r][col] * inv) % p
            if f:
                for c in range(col, n):
                    m[r][c] = (m[r][c] - f * m[col][c]) % p
    return det % p


def _mat_mul_mod(a, b, p: int):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n))
        for i in range(n)
    )


def burnside_matrix_orbits(g: int, r: int, p: int) -> Fraction:
    """Orbits of simultaneous conjugation on g-tuples of r x r matrices.

    Burnside: average over the group of |commutant|^g, with the commutant
    size found by exhaustive scan.
    """
    group = _gl_matrices(r, p)
    all_mats = [
        tuple(flat[i * r : (i + 1) * r] for i in range(r))
        for flat in product(range(p), repeat=r * r)
    ]
    total = 0
    for gamma in group:
        commutant = sum(
            1
            for x in all_mats
            if _mat_mul_mod(gamma, x, p) == _mat_mul_mod(x, gamma, p)
        )
        total += commutant**g
    return Fraction(total, len(group))


def fit_polynomial(points: list[tuple[int, Fraction]]) -> LaurentPoly:
    """Lagrange interpolation through exact sample points."""
    result = LaurentPoly.zero()
    for i, (xi, yi) in enumerate(points):
        term = LaurentPoly.term(Fraction(yi))
        for j, (xj, _) in enumerate(points):
            if i == j:
                continue
            term = term * LaurentPoly({1: Fraction(1, xi - xj), 0: Fraction(-xj, xi - xj)})
        result = result + term
    return result


# ----------------------------------------------------------------------
# stratum inequalities


def stratum_inequalities_hold(quiver: Quiver, tree: ValuedTree, x: list[OElem]) -> bool:
    """Membership conditions of the valued-tree stratum, checked literally."""
    tree_set = set(tree.arrows)
    for a in range(quiver.narrows):
        val = x[a].valuation()
        if a in tree_set:
            if val != tree.value_of(a):
                return False
        elif not quiver.is_loop(a):
            _, vmax, critical = tree_path_data(quiver, tree, a)
            if val < vmax + (1 if a > critical else 0):
                return False
    return True


# ----------------------------------------------------------------------
# random generators (seeded loops for the bulk property suites)


def random_laurent(rng: random.Random, max_terms: int = 3) -> LaurentPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        terms[rng.randint(-3, 4)] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return LaurentPoly(terms)


def random_nonzero_laurent(rng: random.Random, max_terms: int = 3) -> LaurentPoly:
    while True:
        poly = random_laurent(rng, max_terms)
        if not poly.is_zero():
            return poly


def random_ratfunc(rng: random.Random) -> RatFunc:
    return RatFunc(random_laurent(rng), random_nonzero_laurent(rng))


def random_series(
    rng: random.Random,
    nvars: int,
    bound: tuple[int, ...],
    max_terms: int = 3,
    zero_constant: bool = True,
) -> TSeries:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        r = tuple(rng.randint(0, b) for b in bound)
        if zero_constant and not any(r):
            continue
        coeff = LaurentPoly({rng.randint(-2, 3): rng.randint(-3, 3)})
        terms[r] = RatFunc(coeff)
    return TSeries(nvars, bound, terms)


def random_quiver(
    rng: random.Random,
    max_vertices: int = 4,
    max_arrows: int = 5,
    connected: bool = False,
) -> Quiver:
    while True:
        nv = rng.randint(1, max_vertices)
        na = rng.randint(0, max_arrows)
        arrows = tuple(
            (rng.randrange(nv), rng.randrange(nv)) for _ in range(na)
        )
        quiver = Quiver(nv, arrows)
        if not connected or quiver.is_connected():
            return quiver


def random_connected_quiver(rng: random.Random, max_vertices=4, max_arrows=5) -> Quiver:
    return random_quiver(rng, max_vertices, max_arrows, connected=True)

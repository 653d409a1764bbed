"""Order complexes of the arrow-subset lattice and their Hilbert series.

The vertices of the complex are the proper nonempty subsets of the arrow
set, faces are chains under inclusion, and facets correspond to the m!
orderings of the m arrows.  Specialising the fine Hilbert series at
u_E = q^-(b(Q) - b(Q|_E)) relates the complex to the asymptotic toric count,
and a shelling of the complex yields a positivity certificate: the series is
a sum of terms with monomial numerators.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .laurent import LaurentPoly, RatFunc
from .quiver import Quiver
from .toric import _mask_betti_tables, asymptotic_kac

_ONE_MINUS_QINV = RatFunc(LaurentPoly({0: 1, -1: -1}))


@dataclass(frozen=True)
class OrderComplex:
    """Chains of proper nonempty arrow subsets, with facets in lex order.

    Vertices are encoded as bitmasks over the arrows.  ``facets[i]`` is the
    chain of prefix subsets of ``words[i]``, a permutation of the arrows; the
    facet order is the lexicographic order of the words, which is a shelling
    order for this complex.
    """

    narrows: int
    facets: tuple[frozenset[int], ...]
    words: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return self.narrows - 2

    def vertices(self) -> list[int]:
        return [m for m in range(1, (1 << self.narrows) - 1)]

    def faces(self) -> list[frozenset[int]]:
        """Every chain of proper nonempty subsets, including the empty chain."""
        n = self.narrows
        masks = self.vertices()
        # chains ordered by popcount; extend chains upward
        by_count: dict[int, list[int]] = {}
        for m in masks:
            by_count.setdefault(bin(m).count("1"), []).append(m)
        chains: list[tuple[int, ...]] = [()]
        grow: list[tuple[int, ...]] = [()]
        while grow:
            nxt: list[tuple[int, ...]] = []
            for chain in grow:
                low = chain[-1] if chain else 0
                lowc = bin(low).count("1")
                for c in range(lowc + 1, n):
                    for m in by_count.get(c, ()):
                        if low & m == low:
                            nxt.append(chain + (m,))
            chains.extend(nxt)
            grow = nxt
        return [frozenset(c) for c in chains]


def order_complex(quiver: Quiver) -> OrderComplex:
    """Build the order complex of the proper arrow-subset lattice."""
    n = quiver.narrows
    if n < 1:
        return OrderComplex(0, (), ())
    facets = []
    words = []
    for word in permutations(range(n)):
        mask = 0
        chain = []
        for a in word[:-1]:
            mask |= 1 << a
            chain.append(mask)
        facets.append(frozenset(chain))
        words.append(word)
    return OrderComplex(n, tuple(facets), tuple(words))


def _specialized_exponents(quiver: Quiver) -> dict[int, int]:
    """Exponent c(E) = b(Q) - b(Q|_E) for every proper nonempty subset mask."""
    if not quiver.is_two_connected():
        raise ValueError("specialization not convergent")
    betti, _ = _mask_betti_tables(quiver)
    b = quiver.betti()
    full = (1 << quiver.narrows) - 1
    return {mask: b - betti[mask] for mask in range(1, full)}


def _face_weight(face: frozenset[int], exponents: dict[int, int]) -> RatFunc:
    w = RatFunc.one()
    for mask in face:
        u = RatFunc.q(-exponents[mask])
        w = w * (u / (RatFunc.one() - u))
    return w


def hilbert_specialized(quiver: Quiver) -> RatFunc:
    """Fine Hilbert series at u_E = q^-(b(Q)-b(Q|_E)), summed over all faces.

    The weight of a face depends only on its multiset of exponents, so faces
    are grouped by that multiset before the rational-function sum.
    """
    exponents = _specialized_exponents(quiver)
    complex_ = order_complex(quiver)
    counts: dict[tuple[int, ...], int] = {}
    for face in complex_.faces():
        key = tuple(sorted(exponents[m] for m in face))
        counts[key] = counts.get(key, 0) + 1
    total = RatFunc.zero()
    for key, mult in sorted(counts.items()):
        w = RatFunc.one()
        for c in key:
            u = RatFunc.q(-c)
            w = w * (u / (RatFunc.one() - u))
        total = total + w * mult
    return total


def verify_hilbert_identity(quiver: Quiver) -> dict:
    """Check the asymptotic toric count against the prefactored Hilbert series.

    Both sides are computed along independent code paths and compared as
    canonical rational functions.
    """
    lhs = asymptotic_kac(quiver)
    b = quiver.betti()
    prefactor = _ONE_MINUS_QINV**b / (RatFunc.one() - RatFunc.q(-b))
    rhs = prefactor * hilbert_specialized(quiver)
    return {
        "lhs": str(lhs),
        "rhs": str(rhs),
        "equal": lhs == rhs,
        "betti": b,
    }


# ----------------------------------------------------------------------
# shelling


@dataclass(frozen=True)
class ShellingOrder:
    """Facets in shelling order together with their restriction faces."""

    facets: tuple[frozenset[int], ...]
    restrictions: tuple[frozenset[int], ...]


def lex_shelling(complex_: OrderComplex) -> ShellingOrder:
    """Order the facets by their insertion words and verify shellability.

    The shelling condition demands, for every i >= 2 and j < i, some k < i
    with |F_i & F_k| = dim+1 and F_i & F_j <= F_i & F_k.  The codimension-one
    intersections with earlier facets are the sets F_i minus one vertex, so
    the condition for j holds iff some achievable missing vertex avoids F_j;
    it fails exactly when the set of achievable missing vertices is contained
    in F_j.  The restriction face of F_i is that set of missing vertices.
    """
    if complex_.narrows < 2:
        raise ValueError("shelling needs at least two arrows")
    order = sorted(range(len(complex_.facets)), key=lambda i: complex_.words[i])
    facets = [complex_.facets[i] for i in order]
    d = complex_.dim
    restrictions: list[frozenset[int]] = [frozenset()]
    for i in range(1, len(facets)):
        fi = facets[i]
        missing = set()
        for k in range(i):
            inter = fi & facets[k]
            if len(inter) == d:
                (v,) = fi - inter
                missing.add(v)
        if d >= 1:
            # condition for j holds iff some achievable missing vertex
            # avoids F_j; dimension-0 complexes pass by convention
            if not missing:
                raise RuntimeError("order is not a shelling")
            for j in range(i):
                if missing <= facets[j]:
                    raise RuntimeError("order is not a shelling")
        restrictions.append(frozenset(missing))
    return ShellingOrder(tuple(facets), tuple(restrictions))


def positivity_certificate(quiver: Quiver) -> dict:
    """Shelling decomposition of the specialized Hilbert series.

    Emits one term per facet: a monomial numerator q^-(sum of restriction
    exponents) over the product of (1 - q^-c) for the facet exponents.  The
    terms sum to ``hilbert_specialized`` exactly; nonnegativity of the
    numerator coefficients holds by construction.
    """
    if quiver.narrows < 2:
        raise ValueError("certificate needs at least two arrows")
    exponents = _specialized_exponents(quiver)
    shelling = lex_shelling(order_complex(quiver))
    terms = []
    grouped: dict[tuple[int, ...], LaurentPoly] = {}
    for facet, restriction in zip(shelling.facets, shelling.restrictions):
        res_exps = sorted(exponents[m] for m in restriction)
        fac_exps = tuple(sorted(exponents[m] for m in facet))
        grouped[fac_exps] = grouped.get(fac_exps, LaurentPoly.zero()) + LaurentPoly.q(
            -sum(res_exps)
        )
        terms.append(
            {"restriction_exponents": res_exps, "facet_exponents": list(fac_exps)}
        )
    total = RatFunc.zero()
    for fac_exps, num in sorted(grouped.items()):
        den = RatFunc.one()
        for c in fac_exps:
            den = den * (RatFunc.one() - RatFunc.q(-c))
        total = total + RatFunc(num) / den
    direct = hilbert_specialized(quiver)
    report = {
        "terms": terms,
        "total": str(total),
        "matches_face_sum": total == direct,
    }
    single = _single_denominator_presentation(total)
    if single is not None:
        report["single_denominator"] = single
    return report


def _single_denominator_presentation(series: RatFunc) -> dict | None:
    """Opportunistic search for Q(q^-1)/prod(1 - q^-e) with Q nonnegative.

    Tries small exponent multisets for the denominator; returns None when no
    nonnegative presentation is found within the search window.
    """
    from itertools import combinations_with_replacement

    for size in range(0, 5):
        for exps in combinations_with_replacement(range(1, 6), size):
            den = RatFunc.one()
            for e in exps:
                den = den * (RatFunc.one() - RatFunc.q(-e))
            cleared = series * den
            if not cleared.is_polynomial():
                continue
            num = cleared.as_polynomial()
            # numerator must be a polynomial in q^-1 with nonnegative coeffs
            if num.is_zero() or num.max_exp() > 0:
                continue
            if num.is_nonnegative() and num.is_integral():
                return {
                    "numerator": str(num),
                    "denominator_exponents": list(exps),
                }
    return None

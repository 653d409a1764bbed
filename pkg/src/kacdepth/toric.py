"""Rank-one (toric) Kac polynomial counts in higher depth.

Three independent routes compute the number of absolutely indecomposable
locally free rank-one representations over F_q[t]/(t^alpha):

* ``toric_kac_chain``   -- the chain sum over nested arrow subsets
  E_1 <= ... <= E_alpha with connected top, weighted by
  (q-1)^b(E_alpha) * q^(sum_{k<alpha} b(E_k));
* ``toric_kac_trees``   -- the stratification by valued spanning trees,
  where the stratum of a valued tree T contributes the monomial q^(n_T);
* ``toric_orbit_count`` -- a brute-force orbit count over a small prime
  field, the ground-truth oracle.

The module also computes the depth->infinity limits of the toric count and
of the normalised moment-map fiber count, which are rational functions once
the quiver is 2-connected.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Sequence

from .laurent import LaurentPoly, RatFunc
from .oring import DEFAULT_GUARD, GuardError, OElem, cached_ring
from .quiver import Quiver, ValuedTree, tree_path


def _mask_betti_tables(quiver: Quiver) -> tuple[list[int], list[bool]]:
    """Betti number and spanning-connectivity for every arrow subset mask."""
    m = quiver.narrows
    betti = [0] * (1 << m)
    connected = [False] * (1 << m)
    for mask in range(1 << m):
        parent = list(range(quiver.nvertices))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        ncomp = quiver.nvertices
        edges = 0
        for a in range(m):
            if mask >> a & 1:
                edges += 1
                s, t = quiver.arrows[a]
                rs, rt = find(s), find(t)
                if rs != rt:
                    parent[rs] = rt
                    ncomp -= 1
        betti[mask] = ncomp - quiver.nvertices + edges
        connected[mask] = ncomp == 1
    return betti, connected


def toric_kac_chain(quiver: Quiver, alpha: int) -> LaurentPoly:
    """Chain-sum formula for the depth-alpha toric count.

    The sum runs over nested subsets E_1 <= ... <= E_alpha of the arrow set
    whose top makes the quiver connected on all vertices.  Nested sums over
    subsets are evaluated as iterated subset (zeta) transforms; for a
    disconnected quiver no chain survives and the result is 0.
    """
    if alpha < 1:
        raise ValueError("depth must be >= 1")
    m = quiver.narrows
    betti, connected = _mask_betti_tables(quiver)
    nmasks = 1 << m
    # layer[E] = sum over chains E_1 <= ... <= E_{k-1} <= E of q^(sum b(E_j))
    layer: list[dict[int, int]] = [{0: 1} for _ in range(nmasks)]
    for _ in range(alpha - 1):
        weighted = [
            {e + betti[mask]: c for e, c in layer[mask].items()}
            for mask in range(nmasks)
        ]
        for bit in range(m):
            step = 1 << bit
            for mask in range(nmasks):
                if mask & step:
                    acc = weighted[mask]
                    for e, c in weighted[mask ^ step].items():
                        acc[e] = acc.get(e, 0) + c
        layer = weighted
    total = LaurentPoly.zero()
    qm1 = LaurentPoly({1: 1, 0: -1})
    for mask in range(nmasks):
        if connected[mask]:
            total = total + qm1 ** betti[mask] * LaurentPoly(layer[mask])
    return total


def tree_stratum_census(
    quiver: Quiver, alpha: int
) -> list[tuple[ValuedTree, int]]:
    """Valued spanning trees with their stratum exponents n_T.

    Each valuation label ranges over [0, alpha-1].  A loop contributes alpha
    to n_T (its coordinate ranges over the whole ring inside a stratum); a
    non-loop arrow outside the tree contributes
    alpha - v_max(path) - [a > critical edge].
    """
    if alpha < 1:
        raise ValueError("depth must be >= 1")
    if not quiver.is_connected():
        raise ValueError("toric indecomposables require connected quiver")
    nloops = len(quiver.loops())
    census: list[tuple[ValuedTree, int]] = []
    for tree in quiver.spanning_trees():
        pos = {a: i for i, a in enumerate(tree)}
        outside = [
            a
            for a in range(quiver.narrows)
            if a not in pos and not quiver.is_loop(a)
        ]
        paths = {a: tree_path(quiver, tree, a) for a in outside}
        for values in product(range(alpha), repeat=len(tree)):
            n = alpha * nloops
            for a, path in paths.items():
                vmax = max(values[pos[e]] for e in path)
                critical = min(e for e in path if values[pos[e]] == vmax)
                term = alpha - vmax - (1 if a > critical else 0)
                if term < 0:
                    raise AssertionError("negative stratum exponent")
                n += term
            census.append((ValuedTree(tree, values), n))
    return census


def toric_kac_trees(quiver: Quiver, alpha: int) -> LaurentPoly:
    """Valued-spanning-tree formula: sum of q^(n_T) over all strata."""
    coeffs: dict[int, int] = {}
    for _, n in tree_stratum_census(quiver, alpha):
        coeffs[n] = coeffs.get(n, 0) + 1
    return LaurentPoly(coeffs)


# ----------------------------------------------------------------------
# contraction-deletion on an explicit representation


def assign_valued_tree(quiver: Quiver, x: Sequence[OElem]) -> ValuedTree:
    """Run the contraction-deletion algorithm on a rank-one representation.

    Step 1 contracts the largest non-loop arrow carrying a unit, step 2
    deletes the largest loop, step 3 divides every coordinate by t and drops
    the depth.  The result is the valued spanning tree indexing the stratum
    of x; tree labels are the valuations of the original coordinates.

    Requires the support {a : x_a != 0} to span and connect all vertices
    (the indecomposability criterion in rank one).
    """
    if len(x) != quiver.narrows:
        raise ValueError("one ring element per arrow required")
    support = [a for a in range(quiver.narrows) if not x[a].is_zero()]
    if not quiver.restrict_arrows(support).is_connected():
        raise ValueError("decomposable representation")

    arrows = {a: quiver.arrows[a] for a in range(quiver.narrows)}
    values = {a: x[a] for a in range(quiver.narrows)}
    depth_drop = 0
    tree: list[int] = []
    labels: list[int] = []
    while arrows:
        units = [
            a for a, (s, t) in arrows.items() if s != t and values[a].valuation() == 0
        ]
        if units:
            a0 = max(units)
            s, t = arrows.pop(a0)
            values.pop(a0)
            lo, hi = min(s, t), max(s, t)
            arrows = {
                a: (lo if u == hi else u, lo if v == hi else v)
                for a, (u, v) in arrows.items()
            }
            tree.append(a0)
            labels.append(x[a0].valuation())
            continue
        loops = [a for a, (s, t) in arrows.items() if s == t]
        if loops:
            a0 = max(loops)
            arrows.pop(a0)
            values.pop(a0)
            continue
        # step 3: every remaining coordinate has positive valuation
        values = {a: v.shift_down() for a, v in values.items()}
        depth_drop += 1
    assert depth_drop < max((e.alpha for e in x), default=1)
    return ValuedTree(tuple(tree), tuple(labels))


# ----------------------------------------------------------------------
# brute-force orbit oracle


def _support_connected(quiver: Quiver, assignment: Sequence[int]) -> bool:
    parent = list(range(quiver.nvertices))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    ncomp = quiver.nvertices
    for a, code in enumerate(assignment):
        if code:
            s, t = quiver.arrows[a]
            rs, rt = find(s), find(t)
            if rs != rt:
                parent[rs] = rt
                ncomp -= 1
    return ncomp == 1


def toric_orbit_count(
    quiver: Quiver, p: int, alpha: int, guard: int = DEFAULT_GUARD
) -> int:
    """Count vertex-torus orbits of indecomposable rank-one representations.

    Enumerates every arrow assignment over F_p[t]/(t^alpha), keeps those
    whose support connects all vertices, and counts orbits of the action
    x_a -> u_target * x_a * u_source^-1 by counting assignments that are the
    lexicographically minimal element of their own orbit.
    """
    if alpha < 1:
        raise ValueError("depth must be >= 1")
    m = quiver.narrows
    if p ** (alpha * m) > guard:
        raise GuardError("enumeration too large")
    ring = cached_ring(p, alpha)
    mul, inv = ring.mul, ring.inv
    torus = list(product(ring.units, repeat=quiver.nvertices))
    arrow_ends = list(quiver.arrows)
    count = 0
    for x in product(range(ring.size), repeat=m):
        if not _support_connected(quiver, x):
            continue
        minimal = True
        for u in torus:
            y = tuple(
                mul[mul[u[t]][xa]][inv[u[s]]] for xa, (s, t) in zip(x, arrow_ends)
            )
            if y < x:
                minimal = False
                break
        if minimal:
            count += 1
    return count


# ----------------------------------------------------------------------
# depth -> infinity limits


@lru_cache(maxsize=None)
def asymptotic_kac(quiver: Quiver) -> RatFunc:
    """Limit of q^(-alpha b(Q)) times the depth-alpha toric count.

    Exists exactly when the quiver is 2-connected, and equals
    (1-q^-1)^b(Q) times the sum over strictly increasing chains of arrow
    subsets ending at the full arrow set of prod 1/(q^(b(Q)-b(E_j)) - 1).
    """
    if not quiver.is_two_connected():
        raise ValueError("limit does not converge")
    m = quiver.narrows
    betti, _ = _mask_betti_tables(quiver)
    b = quiver.betti()
    full = (1 << m) - 1
    one = RatFunc.one()
    # weight[E] = sum over chains E < E' < ... < full of the product of
    # 1/(q^(b - b(E_j)) - 1) over the proper chain entries E_j
    weight: dict[int, RatFunc] = {full: one}
    total = one
    for mask in range(full - 1, -1, -1):
        upper = RatFunc.zero()
        # strict supersets of mask inside full
        rest = full & ~mask
        sub = rest
        while sub:
            upper = upper + weight[mask | sub]
            sub = (sub - 1) & rest
        factor = RatFunc(1, LaurentPoly({b - betti[mask]: 1, 0: -1}))
        weight[mask] = upper * factor
        total = total + weight[mask]
    prefactor = RatFunc(LaurentPoly({0: 1, -1: -1})) ** b
    return prefactor * total


def asymptotic_moment(quiver: Quiver) -> RatFunc:
    """Limit of the normalised moment-map zero-fiber count.

    Related to the toric limit by a factor (1-q^-1)^(#vertices - 1).
    """
    factor = RatFunc(LaurentPoly({0: 1, -1: -1})) ** (quiver.nvertices - 1)
    return factor * asymptotic_kac(quiver)

"""Galois averages, membership and enumeration of the Kottwitz set, and the
Newton dominance order.

A point nu belongs to the set attached to a dominant mu exactly when

  * nu is dominant,
  * mubar - nu is a non-negative rational combination of simple coroots
    (with equal components in the orthogonal complement of the root span),
  * for every simple root a with <nu, a> != 0 the coroot coefficient
    c_a = <mubar - nu, w_a> is a non-negative integer.

The certificate (c, J) stores the coefficient vector and the set of simple
roots pairing to zero against nu, where integrality is not required.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .linalg import solve_exact
from .rationals import dot, vsub
from .rootdata import (
    RationalCocharacter,
    RootDatum,
    coroot_span_decomposition,
    fundamental_coweights,
    fundamental_weights_semisimple,
    is_dominant,
    sigma_apply,
    special_roots,
    vector_from_json,
    vector_to_json,
)


@dataclass(frozen=True)
class KottwitzElement:
    """A member nu with its membership certificate."""

    nu: RationalCocharacter
    c: tuple[Fraction, ...]
    J: frozenset[int]  # 1-based simple-root indices with <nu, alpha> = 0

    def sort_key(self):
        return self.nu.coords


@dataclass(frozen=True)
class KottwitzSet:
    mu: RationalCocharacter
    mubar: RationalCocharacter
    elements: tuple[KottwitzElement, ...]

    def points(self) -> list[tuple[Fraction, ...]]:
        return [e.nu.coords for e in self.elements]


def galois_average(mu: RationalCocharacter) -> RationalCocharacter:
    """Average of mu over the orbit of the diagram automorphism."""
    r = mu.datum.sigma_order
    total = mu
    current = mu
    for _ in range(r - 1):
        current = sigma_apply(current)
        total = total + current
    return total.scale(Fraction(1, r))


def _sigma_orbits(datum: RootDatum) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    orbits = []
    for i in range(1, datum.rank + 1):
        if i in seen:
            continue
        orbit = [i]
        j = datum.sigma[i - 1]
        while j != i:
            orbit.append(j)
            j = datum.sigma[j - 1]
        seen.update(orbit)
        orbits.append(tuple(orbit))
    return orbits


def is_in_bgmu(nu: RationalCocharacter, mubar: RationalCocharacter):
    """Decide membership of nu relative to the Galois average mubar.

    Returns (True, (c, J)) with the certificate, or (False, reason).
    When sigma is nontrivial the integrality condition is taken over
    sigma-orbits of simple roots (orbit-summed fundamental weights); this
    folded path requires nu to be sigma-invariant.
    """
    datum = nu.datum
    if mubar.datum != datum:
        raise ValueError("nu and mubar live over different root data")
    nontrivial_sigma = datum.sigma != tuple(range(1, datum.rank + 1))
    if nontrivial_sigma:
        if sigma_apply(mubar).coords != mubar.coords:
            raise ValueError("mubar is not sigma-invariant")
        if sigma_apply(nu).coords != nu.coords:
            raise ValueError("nu is not sigma-invariant while sigma is nontrivial")
    if not is_dominant(nu):
        return False, "nu is not dominant"
    diff = vsub(mubar.coords, nu.coords)
    coeffs, perp = coroot_span_decomposition(datum, diff)
    if any(x != 0 for x in perp):
        return False, "mubar - nu is not in the coroot span"
    if any(c < 0 for c in coeffs):
        return False, "mubar - nu has a negative coroot coefficient"
    zero_pairing = frozenset(
        i for i, alpha in enumerate(datum.simple_roots, start=1)
        if dot(nu.coords, alpha) == 0
    )
    for orbit in _sigma_orbits(datum):
        if all(i in zero_pairing for i in orbit):
            continue
        total = sum(coeffs[i - 1] for i in orbit)
        if total.denominator != 1:
            return False, f"non-integral coroot coefficient at simple root(s) {orbit}"
    return True, (coeffs, zero_pairing)


def enumerate_bgmu(mu: RationalCocharacter) -> KottwitzSet:
    """The complete finite set attached to a dominant mu (split case only).

    Iterates over subsets J of simple roots and non-negative integer coroot
    coefficients outside J (each bounded by <mubar, w_a> for the root-span
    fundamental weight w_a, since the remaining pairing against a dominant
    point is non-negative), then solves the exact linear system forcing the
    pairings inside J to vanish.
    """
    datum = mu.datum
    if datum.sigma != tuple(range(1, datum.rank + 1)):
        raise ValueError("enumeration is only supported for trivial sigma; "
                         "the folded case is experimental")
    if not is_dominant(mu):
        raise ValueError("mu must be dominant")
    mubar = galois_average(mu)
    n = datum.rank
    weights_ss = fundamental_weights_semisimple(datum)
    bounds = []
    for w in weights_ss:
        b = dot(mubar.coords, w)
        if b < 0:
            raise AssertionError("dominant mubar pairs negatively with a weight")
        bounds.append(int(b))  # floor for non-negative rationals
    cartan = datum.cartan  # cartan[i][j] = <coroot_j, root_i>
    found: dict[tuple[Fraction, ...], KottwitzElement] = {}
    for j_mask in range(1 << n):
        J = [i for i in range(n) if j_mask >> i & 1]
        free = [i for i in range(n) if not (j_mask >> i & 1)]
        ranges = [range(bounds[i] + 1) for i in free]
        sub = [[Fraction(cartan[g][a]) for a in J] for g in J]
        for choice in itertools.product(*ranges):
            c = [Fraction(0)] * n
            for i, v in zip(free, choice):
                c[i] = Fraction(v)
            if J:
                rhs = [
                    dot(mubar.coords, datum.simple_roots[g])
                    - sum(c[b] * cartan[g][b] for b in free)
                    for g in J
                ]
                sol = solve_exact(sub, rhs)
                if sol is None:
                    continue
                for i, v in zip(J, sol):
                    c[i] = v
            if any(x < 0 for x in c):
                continue
            coords = list(mubar.coords)
            for ci, av in zip(c, datum.simple_coroots):
                if ci:
                    for t, x in enumerate(av):
                        coords[t] -= ci * x
            nu = RationalCocharacter(tuple(coords), datum)
            if nu.coords in found:
                continue
            ok, cert = is_in_bgmu(nu, mubar)
            if ok:
                coeffs, zero = cert
                found[nu.coords] = KottwitzElement(nu, coeffs, zero)
    elements = tuple(sorted(found.values(), key=KottwitzElement.sort_key))
    return KottwitzSet(mu, mubar, elements)


def newton_leq(x: RationalCocharacter, y: RationalCocharacter) -> bool:
    """Dominance order: y - x is a non-negative combination of simple coroots
    with equal orthogonal-complement components.  Callers pass dominant points.
    """
    if x.datum != y.datum:
        raise ValueError("cocharacters live over different root data")
    diff = vsub(y.coords, x.coords)
    coeffs, perp = coroot_span_decomposition(x.datum, diff)
    if any(t != 0 for t in perp):
        return False
    return all(c >= 0 for c in coeffs)


def maximal_elements(ks: KottwitzSet, exclude_top: bool = False) -> set[KottwitzElement]:
    """The dominance-maximal elements, optionally with the top point removed."""
    pool = list(ks.elements)
    if exclude_top:
        pool = [e for e in pool if e.nu.coords != ks.mubar.coords]
    if not pool:
        raise ValueError("empty element set")
    out = set()
    for e in pool:
        if all(f is e or not newton_leq(e.nu, f.nu) for f in pool):
            out.add(e)
    return out


def minuscule_coweights(datum: RootDatum) -> set[RationalCocharacter]:
    """Zero together with the fundamental coweights at special simple roots."""
    if datum.is_product:
        raise ValueError("minuscule coweights of a product datum: use per-factor calls")
    out = {RationalCocharacter((Fraction(0),) * datum.ambient_dim, datum)}
    coweights = fundamental_coweights(datum)
    for i in special_roots(datum):
        out.add(RationalCocharacter(coweights[i - 1], datum))
    return out


def kottwitz_set_to_json(ks: KottwitzSet) -> dict:
    return {
        "mu": vector_to_json(ks.mu.coords),
        "mubar": vector_to_json(ks.mubar.coords),
        "elements": [
            {
                "nu": vector_to_json(e.nu.coords),
                "c": vector_to_json(e.c),
                "J": sorted(e.J),
            }
            for e in ks.elements
        ],
    }


def kottwitz_set_from_json(doc: dict, datum: RootDatum) -> KottwitzSet:
    mu = RationalCocharacter(vector_from_json(doc["mu"]), datum)
    mubar = RationalCocharacter(vector_from_json(doc["mubar"]), datum)
    elements = tuple(
        KottwitzElement(
            RationalCocharacter(vector_from_json(e["nu"]), datum),
            vector_from_json(e["c"]),
            frozenset(int(j) for j in e["J"]),
        )
        for e in doc["elements"]
    )
    return KottwitzSet(mu, mubar, elements)

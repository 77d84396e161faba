"""Root data with exact rational coordinates.

Every indecomposable type A..G2 is realized by explicit simple roots and
coroots inside a fixed rational ambient space, with the canonical pairing
given by the dot product.  Classical types use the epsilon bases

    A_n : ambient n+1,  alpha_i = e_i - e_{i+1}
    B_n : ambient n,    alpha_n = e_n,            coroot 2 e_n
    C_n : ambient n,    alpha_n = 2 e_n,          coroot e_n
    D_n : ambient n,    alpha_n = e_{n-1} + e_n   (the fork node, written
          alpha_{n-1}^+ in some sources; Bourbaki node n)

and the exceptional types use the Bourbaki realizations (E6/E7 sit inside
the 8-dimensional E8 ambient space, F4 in dimension 4, G2 in dimension 3).
Coroots are 2a/(a,a), which is rational for every type above.

All arithmetic is over fractions.Fraction; nothing here ever touches a
float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import in_cone, invert, solve_exact
from .rationals import dot, rat, rat_str, vec, vec_parse, vsub, vscale

INDECOMPOSABLE_TYPES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")

_RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E6": (6, 6),
    "E7": (7, 7),
    "E8": (8, 8),
    "F4": (4, 4),
    "G2": (2, 2),
}


@dataclass(frozen=True)
class RootDatum:
    """An immutable root datum: simple roots/coroots in a rational ambient space."""

    type_label: str
    rank: int
    ambient_dim: int
    simple_roots: tuple[tuple[Fraction, ...], ...]
    simple_coroots: tuple[tuple[Fraction, ...], ...]
    cartan: tuple[tuple[int, ...], ...]
    sigma: tuple[int, ...]  # 1-based image list; sigma[i-1] is the image of node i
    factors: tuple["RootDatum", ...] = ()

    @property
    def sigma_order(self) -> int:
        r = 1
        perm = tuple(range(1, self.rank + 1))
        current = self.sigma
        while current != perm:
            current = tuple(self.sigma[i - 1] for i in current)
            r += 1
        return r

    @property
    def is_product(self) -> bool:
        return bool(self.factors)

    def cochar(self, coords) -> "RationalCocharacter":
        return RationalCocharacter(vec_parse(coords), self)


@dataclass(frozen=True)
class RationalCocharacter:
    """An exact rational vector in the cocharacter space of a fixed datum."""

    coords: tuple[Fraction, ...]
    datum: RootDatum

    def __post_init__(self):
        if len(self.coords) != self.datum.ambient_dim:
            raise ValueError(
                f"coordinate length {len(self.coords)} != ambient dimension "
                f"{self.datum.ambient_dim}"
            )

    def __add__(self, other: "RationalCocharacter") -> "RationalCocharacter":
        self._check(other)
        return RationalCocharacter(
            tuple(a + b for a, b in zip(self.coords, other.coords)), self.datum
        )

    def __sub__(self, other: "RationalCocharacter") -> "RationalCocharacter":
        self._check(other)
        return RationalCocharacter(
            tuple(a - b for a, b in zip(self.coords, other.coords)), self.datum
        )

    def scale(self, c) -> "RationalCocharacter":
        return RationalCocharacter(vscale(rat(c), self.coords), self.datum)

    def _check(self, other: "RationalCocharacter") -> None:
        if other.datum is not self.datum and other.datum != self.datum:
            raise ValueError("cocharacters live over different root data")


def _chain_roots(n: int) -> list[tuple[Fraction, ...]]:
    roots = []
    for i in range(n):
        v = [Fraction(0)] * (n + 1)
        v[i], v[i + 1] = Fraction(1), Fraction(-1)
        roots.append(tuple(v))
    return roots


def _unit(dim: int, i: int, value=1) -> tuple[Fraction, ...]:
    v = [Fraction(0)] * dim
    v[i] = Fraction(value)
    return tuple(v)


def _simple_roots_for(type_label: str, rank: int) -> list[tuple[Fraction, ...]]:
    n = rank
    if type_label == "A":
        return _chain_roots(n)
    if type_label in ("B", "C", "D"):
        roots = []
        for i in range(n - 1):
            v = [Fraction(0)] * n
            v[i], v[i + 1] = Fraction(1), Fraction(-1)
            roots.append(tuple(v))
        if type_label == "B":
            roots.append(_unit(n, n - 1))
        elif type_label == "C":
            roots.append(_unit(n, n - 1, 2))
        else:
            v = [Fraction(0)] * n
            v[n - 2], v[n - 1] = Fraction(1), Fraction(1)
            roots.append(tuple(v))
        return roots
    if type_label in ("E6", "E7", "E8"):
        half = Fraction(1, 2)
        e8 = [
            (half, -half, -half, -half, -half, -half, -half, half),
            (Fraction(1), Fraction(1)) + (Fraction(0),) * 6,
        ]
        for k in range(3, 9):
            v = [Fraction(0)] * 8
            v[k - 3], v[k - 2] = Fraction(-1), Fraction(1)
            e8.append(tuple(v))
        return e8[:n]
    if type_label == "F4":
        half = Fraction(1, 2)
        return [
            (Fraction(0), Fraction(1), Fraction(-1), Fraction(0)),
            (Fraction(0), Fraction(0), Fraction(1), Fraction(-1)),
            (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
            (half, -half, -half, -half),
        ]
    if type_label == "G2":
        return [
            (Fraction(1), Fraction(-1), Fraction(0)),
            (Fraction(-2), Fraction(1), Fraction(1)),
        ]
    raise ValueError(f"unknown type label {type_label!r}")


def _coroot(root: Sequence[Fraction]) -> tuple[Fraction, ...]:
    norm = dot(root, root)
    return tuple(2 * x / norm for x in root)


_NAMED_FLIPS = {
    "A": lambda n: tuple(n + 1 - i for i in range(1, n + 1)),
    "D": lambda n: tuple(range(1, n - 1)) + (n, n - 1),
    "E6": lambda n: (6, 2, 5, 4, 3, 1),
}


def _resolve_sigma(type_label: str, rank: int, sigma_spec) -> tuple[int, ...]:
    if sigma_spec in (None, "identity", "id"):
        return tuple(range(1, rank + 1))
    if sigma_spec == "flip":
        maker = _NAMED_FLIPS.get(type_label)
        if maker is None:
            raise ValueError(f"type {type_label} has no named flip automorphism")
        return maker(rank)
    perm = tuple(int(i) for i in sigma_spec)
    if sorted(perm) != list(range(1, rank + 1)):
        raise ValueError(f"sigma {sigma_spec!r} is not a permutation of 1..{rank}")
    return perm


def build_datum(type_label: str, rank: int, sigma_spec=None) -> RootDatum:
    """Construct the indecomposable root datum of the given type and rank.

    sigma_spec is None/"identity", "flip" (the nontrivial diagram
    automorphism of A_n, D_n or E6), or an explicit 1-based permutation.
    """
    if type_label not in INDECOMPOSABLE_TYPES:
        raise ValueError(f"unknown type label {type_label!r}")
    lo, hi = _RANK_RANGE[type_label]
    if rank < lo or (hi is not None and rank > hi):
        raise ValueError(f"invalid rank {rank} for type {type_label}")
    roots = tuple(_simple_roots_for(type_label, rank))
    coroots = tuple(_coroot(r) for r in roots)
    cartan = tuple(
        tuple(int(dot(roots[i], coroots[j])) for j in range(rank)) for i in range(rank)
    )
    sigma = _resolve_sigma(type_label, rank, sigma_spec)
    for i in range(rank):
        for j in range(rank):
            if cartan[sigma[i] - 1][sigma[j] - 1] != cartan[i][j]:
                raise ValueError(f"sigma {sigma} does not preserve the Cartan matrix")
    return RootDatum(type_label, rank, len(roots[0]), roots, coroots, cartan, sigma)


def product_datum(factors: Sequence[RootDatum]) -> RootDatum:
    """Concatenate root data block-diagonally (sigma stays per-factor)."""
    factors = tuple(factors)
    if not factors:
        raise ValueError("empty product")
    dim = sum(f.ambient_dim for f in factors)
    roots: list[tuple[Fraction, ...]] = []
    coroots: list[tuple[Fraction, ...]] = []
    sigma: list[int] = []
    offset = 0
    node_offset = 0
    for f in factors:
        pad_left = (Fraction(0),) * offset
        pad_right = (Fraction(0),) * (dim - offset - f.ambient_dim)
        roots.extend(pad_left + r + pad_right for r in f.simple_roots)
        coroots.extend(pad_left + r + pad_right for r in f.simple_coroots)
        sigma.extend(node_offset + s for s in f.sigma)
        offset += f.ambient_dim
        node_offset += f.rank
    rank = len(roots)
    cartan = tuple(
        tuple(int(dot(roots[i], coroots[j])) for j in range(rank)) for i in range(rank)
    )
    label = "x".join(f"{f.type_label}{f.rank}" for f in factors)
    return RootDatum(label, rank, dim, tuple(roots), tuple(coroots), cartan,
                     tuple(sigma), factors)


def pairing(cochar, char_vector) -> Fraction:
    """Canonical pairing of a cocharacter against a character-space vector."""
    coords = cochar.coords if isinstance(cochar, RationalCocharacter) else cochar
    return dot(coords, char_vector)


def fundamental_weights(datum: RootDatum) -> list[tuple[Fraction, ...]]:
    """Vectors w_i with <coroot_j, w_i> = delta_ij.

    For type A (ambient dimension rank+1) the representatives are the
    partial sums e_1 + ... + e_i; in all other indecomposable types the
    root span determines the weights uniquely.
    """
    if datum.type_label == "A":
        out = []
        for i in range(1, datum.rank + 1):
            v = [Fraction(0)] * datum.ambient_dim
            for j in range(i):
                v[j] = Fraction(1)
            out.append(tuple(v))
        return out
    return _span_duals(datum.simple_roots, datum.simple_coroots)


def fundamental_weights_semisimple(datum: RootDatum) -> list[tuple[Fraction, ...]]:
    """Root-span representatives of the fundamental weights (traceless in type A)."""
    return _span_duals(datum.simple_roots, datum.simple_coroots)


def fundamental_coweights(datum: RootDatum) -> list[tuple[Fraction, ...]]:
    """Vectors w_i in the coroot span with <w_i, root_j> = delta_ij."""
    return _span_duals(datum.simple_coroots, datum.simple_roots)


def _span_duals(span_basis, test_basis) -> list[tuple[Fraction, ...]]:
    n = len(span_basis)
    gram = [[dot(span_basis[k], test_basis[j]) for k in range(n)] for j in range(n)]
    inv = invert(gram)
    out = []
    for i in range(n):
        w = [Fraction(0)] * len(span_basis[0])
        for k in range(n):
            c = inv[k][i]
            if c:
                for t, x in enumerate(span_basis[k]):
                    w[t] += c * x
        out.append(tuple(w))
    return out


def all_roots(datum: RootDatum) -> set[tuple[Fraction, ...]]:
    """The full root system, generated by closing simple reflections."""
    roots = set(datum.simple_roots)
    frontier = list(roots)
    while frontier:
        beta = frontier.pop()
        for alpha, alpha_v in zip(datum.simple_roots, datum.simple_coroots):
            c = dot(beta, alpha_v)
            if c == 0:
                continue
            image = vsub(beta, vscale(c, alpha))
            if image not in roots:
                roots.add(image)
                frontier.append(image)
    return roots


def root_coefficients(datum: RootDatum, root: Sequence[Fraction]) -> tuple[Fraction, ...]:
    coeffs = in_cone(datum.simple_roots, root)
    if coeffs is None:
        raise ValueError("vector is not in the root span")
    return coeffs


def positive_roots(datum: RootDatum) -> list[tuple[Fraction, ...]]:
    pos = []
    for r in all_roots(datum):
        coeffs = root_coefficients(datum, r)
        if all(c >= 0 for c in coeffs):
            pos.append(r)
    pos.sort(key=lambda r: (sum(root_coefficients(datum, r)), r))
    return pos


def highest_root(datum: RootDatum) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """The highest root and its coefficient vector over the simple roots.

    Verified maximal: adding any simple root must leave the root system.
    """
    if datum.is_product:
        raise ValueError("highest root of a product datum: use per-factor calls")
    roots = all_roots(datum)
    best = None
    best_coeffs = None
    best_height = None
    for r in roots:
        coeffs = root_coefficients(datum, r)
        if any(c < 0 for c in coeffs):
            continue
        h = sum(coeffs)
        if best_height is None or h > best_height:
            best, best_coeffs, best_height = r, coeffs, h
    assert best is not None
    for alpha in datum.simple_roots:
        if tuple(a + b for a, b in zip(best, alpha)) in roots:
            raise AssertionError("highest-root candidate is not maximal")
    return best, best_coeffs


def special_roots(datum: RootDatum) -> frozenset[int]:
    """1-based indices of simple roots with coefficient one in the highest root."""
    if datum.is_product:
        raise ValueError("special roots of a product datum: use per-factor calls")
    _, coeffs = highest_root(datum)
    return frozenset(i + 1 for i, c in enumerate(coeffs) if c == 1)


def is_dominant(v: RationalCocharacter) -> bool:
    return all(dot(v.coords, alpha) >= 0 for alpha in v.datum.simple_roots)


def reflect_simple(v: RationalCocharacter, i: int) -> RationalCocharacter:
    """Simple reflection s_i acting on the cocharacter side (1-based i)."""
    datum = v.datum
    c = dot(v.coords, datum.simple_roots[i - 1])
    return RationalCocharacter(
        vsub(v.coords, vscale(c, datum.simple_coroots[i - 1])), datum
    )


def dominant_representative(v: RationalCocharacter) -> RationalCocharacter:
    """The unique dominant element of the Weyl orbit, by reflection descent."""
    current = v
    while True:
        for i, alpha in enumerate(current.datum.simple_roots, start=1):
            if dot(current.coords, alpha) < 0:
                current = reflect_simple(current, i)
                break
        else:
            return current


def coroot_span_decomposition(
    datum: RootDatum, coords: Sequence[Fraction]
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Split a cocharacter vector as (coroot-span coefficients, orthogonal part).

    The orthogonal part pairs to zero with every root.
    """
    n = datum.rank
    gram = [[dot(datum.simple_coroots[i], datum.simple_roots[j]) for i in range(n)]
            for j in range(n)]
    rhs = [dot(coords, datum.simple_roots[j]) for j in range(n)]
    coeffs = solve_exact(gram, rhs)
    assert coeffs is not None
    span_part = [Fraction(0)] * datum.ambient_dim
    for c, av in zip(coeffs, datum.simple_coroots):
        if c:
            for t, x in enumerate(av):
                span_part[t] += c * x
    perp = tuple(a - b for a, b in zip(coords, span_part))
    return coeffs, perp


def sigma_apply(v: RationalCocharacter) -> RationalCocharacter:
    """Apply the diagram automorphism: permute coroot coefficients, fix the rest."""
    datum = v.datum
    coeffs, perp = coroot_span_decomposition(datum, v.coords)
    out = list(perp)
    for i, c in enumerate(coeffs, start=1):
        if c:
            target = datum.simple_coroots[datum.sigma[i - 1] - 1]
            for t, x in enumerate(target):
                out[t] += c * x
    return RationalCocharacter(tuple(out), datum)


def datum_to_json(datum: RootDatum) -> dict:
    if datum.is_product:
        return {
            "type": "product",
            "factors": [datum_to_json(f) for f in datum.factors],
        }
    return {
        "type": datum.type_label,
        "rank": datum.rank,
        "sigma": list(datum.sigma),
    }


def datum_from_json(doc: dict) -> RootDatum:
    if doc.get("type") == "product":
        return product_datum([datum_from_json(f) for f in doc["factors"]])
    sigma = doc.get("sigma")
    return build_datum(doc["type"], int(doc["rank"]), sigma)


def vector_to_json(coords: Iterable[Fraction]) -> list[str]:
    return [rat_str(x) for x in coords]


def vector_from_json(items: Sequence) -> tuple[Fraction, ...]:
    return vec(items)

"""p-adic valuation arithmetic for Hecke normalizations at p.

A diagonal element of the symplectic similitude group is recorded through
the valuations of its entries: a weakly increasing first block t_1..t_n,
a similitude valuation s, and the derived full vector

    (t_1, ..., t_n, s - t_n, ..., s - t_1)

which is anti-symmetric about s/2.  Unipotent-radical indices, the
first-block determinant character, and the perturbed filtration elements
are all computed at this valuation level; an actual count p^v is only
meaningful when v is a non-negative integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .rationals import dot, rat, rat_str, vec_parse, vec_str


@dataclass(frozen=True)
class HeckeValuation:
    full: tuple[Fraction, ...]
    s: Fraction
    p: int

    def __post_init__(self):
        if self.p < 3:
            raise ValueError("p must be a prime >= 3")
        if len(self.full) % 2 != 0 or not self.full:
            raise ValueError("full valuation vector must have positive even length")

    @classmethod
    def from_blocks(cls, t: Sequence, s, p: int) -> "HeckeValuation":
        """Build from the first block and the similitude valuation.

        Enforces 0 <= t_1 <= ... <= t_n; the second block is derived, so the
        anti-symmetry about s/2 holds by construction.
        """
        tv = vec_parse(t)
        sv = rat(s)
        if any(x < 0 for x in tv):
            raise ValueError("first-block valuations must be non-negative")
        if any(a > b for a, b in zip(tv, tv[1:])):
            raise ValueError("first-block valuations must be weakly increasing")
        full = tv + tuple(sv - x for x in reversed(tv))
        return cls(full, sv, p)

    @classmethod
    def from_full(cls, full: Sequence, s, p: int) -> "HeckeValuation":
        """Build from an explicit full vector (filtration and perturbed elements)."""
        return cls(vec_parse(full), rat(s), p)

    @property
    def n(self) -> int:
        return len(self.full) // 2

    @property
    def t(self) -> tuple[Fraction, ...]:
        return self.full[: self.n]

    def antisymmetric(self) -> bool:
        m = len(self.full)
        return all(self.full[j] + self.full[m - 1 - j] == self.s for j in range(m))

    def compose(self, other: "HeckeValuation") -> "HeckeValuation":
        """Valuation vector of a product of diagonal elements: add entrywise."""
        if len(self.full) != len(other.full) or self.p != other.p:
            raise ValueError("incompatible valuation vectors")
        return HeckeValuation(
            tuple(a + b for a, b in zip(self.full, other.full)),
            self.s + other.s,
            self.p,
        )


def filtration_element(h: int, dim_v: int, p: int) -> HeckeValuation:
    """The diagonal element inducing the canonical step of height h:
    valuation 1 on the top h slots of the full vector, 0 elsewhere, s = 1."""
    if not 1 <= h <= dim_v:
        raise ValueError(f"height {h} out of range 1..{dim_v}")
    full = (Fraction(1),) * h + (Fraction(0),) * (dim_v - h)
    return HeckeValuation(full, Fraction(1), p)


def _full_vector(eps) -> tuple[Fraction, ...]:
    if isinstance(eps, HeckeValuation):
        return eps.full
    return vec_parse(eps)


def m_epsilon_valuation(eps, parabolic_roots: Sequence[Sequence]) -> Fraction:
    """val_p of the index of the conjugated unipotent integral points.

    Conjugation by a diagonal element scales the root space of alpha by
    p^<eps, alpha>, so the index of eps U(O) eps^-1 inside U(O) has
    valuation sum_alpha <eps, alpha> over the radical's roots.  Requires
    <eps, alpha> >= 0 throughout (dominance for the parabolic).
    """
    full = _full_vector(eps)
    total = Fraction(0)
    for alpha in parabolic_roots:
        v = dot(full, vec_parse(alpha))
        if v < 0:
            raise ValueError(
                f"eps pairs negatively ({v}) with the radical root {tuple(alpha)}"
            )
        total += v
    return total


def x_epsilon_valuation(eps, parabolic_roots: Sequence[Sequence]) -> Fraction:
    """val_p of the number of single cosets in the double coset of eps.

    Numerically identical to m_epsilon_valuation (both count the same
    unipotent index); kept as its own operation because multiplicativity
    of the coset counts is a statement about these numbers.
    """
    return m_epsilon_valuation(eps, parabolic_roots)


def lambda_g_valuation(eps) -> Fraction:
    """val_p of the first-block determinant character: sum of t_1..t_n."""
    full = _full_vector(eps)
    if len(full) % 2 != 0:
        raise ValueError("full valuation vector must have even length")
    n = len(full) // 2
    return sum(full[:n], Fraction(0))


def epsilon_prime_valuations(h_i: int, deg_i: Fraction,
                             base_eps: HeckeValuation) -> HeckeValuation:
    """Perturb the filtration element by the degree defect.

    Adds -1 + deg_i at 1-based slot h_i - 1 (slot 1 when h_i = 1) and
    1 - deg_i at slot dim V - h_i + 1 of the full vector.  The two added
    terms are negatives of each other, so the entry sum is unchanged.
    """
    deg_i = rat(deg_i)
    dim_v = len(base_eps.full)
    if not 0 < deg_i <= h_i:
        raise ValueError(f"degree {deg_i} out of range (0, {h_i}]")
    lo = max(h_i - 1, 1)
    hi = dim_v - h_i + 1
    if not (1 <= lo <= dim_v and 1 <= hi <= dim_v):
        raise ValueError(f"perturbation slots {lo}, {hi} out of range 1..{dim_v}")
    full = list(base_eps.full)
    full[lo - 1] += deg_i - 1
    full[hi - 1] += 1 - deg_i
    return HeckeValuation(tuple(full), base_eps.s, base_eps.p)


def _perturbed_filtration(profile_data: Sequence[tuple[int, Fraction]],
                          dim_v: int, p: int) -> list[HeckeValuation]:
    if not profile_data:
        raise ValueError("no filtration steps: profile has a single slope")
    out = []
    for h_i, d_i in profile_data:
        base = filtration_element(h_i, dim_v, p)
        out.append(epsilon_prime_valuations(h_i, rat(d_i), base))
    return out


def n_g_constant(profile_data: Sequence[tuple[int, Fraction]], p: int,
                 dim_v: int | None = None) -> Fraction:
    """Smallest first-block valuation of the perturbed filtration elements.

    profile_data lists the proper canonical steps (h_i, d_i), i < r, of a
    polarized ordinary profile; dim V defaults to twice the largest height
    present only when not given explicitly.
    """
    if not profile_data:
        raise ValueError("no filtration steps: profile has a single slope")
    if dim_v is None:
        dim_v = 2 * max(h for h, _ in profile_data)
    vals = [lambda_g_valuation(e) for e in _perturbed_filtration(profile_data, dim_v, p)]
    return min(vals)


def c_constant(profile_data: Sequence[tuple[int, Fraction]],
               parabolic_roots: Sequence[Sequence], p: int,
               dim_v: int | None = None) -> Fraction:
    """Largest unipotent-index valuation of the perturbed filtration elements."""
    if not profile_data:
        raise ValueError("no filtration steps: profile has a single slope")
    if dim_v is None:
        dim_v = 2 * max(h for h, _ in profile_data)
    vals = [
        m_epsilon_valuation(e, parabolic_roots)
        for e in _perturbed_filtration(profile_data, dim_v, p)
    ]
    return max(vals)


def hasse_number(w: int, p: int) -> int:
    """Exponent of the unit group of the field with p^w elements: p^w - 1."""
    if not isinstance(w, int) or w < 1:
        raise ValueError("w must be a positive integer")
    if not isinstance(p, int) or p < 3 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ValueError("p must be a prime >= 3")
    return p ** w - 1


def valuation_to_json(eps: HeckeValuation) -> dict:
    doc = {"t": vec_str(eps.t), "s": rat_str(eps.s), "p": eps.p}
    derived = eps.t + tuple(eps.s - x for x in reversed(eps.t))
    if eps.full != derived:
        doc["full"] = vec_str(eps.full)
    return doc


def valuation_from_json(doc: dict) -> HeckeValuation:
    if "full" in doc:
        return HeckeValuation.from_full(vec_parse(doc["full"]), rat(doc["s"]),
                                        int(doc["p"]))
    return HeckeValuation.from_blocks(vec_parse(doc["t"]), rat(doc["s"]),
                                      int(doc["p"]))


def gl_upper_roots(n: int) -> list[tuple[Fraction, ...]]:
    """Roots e_i - e_j (i < j) of the full upper-triangular radical of GL_n."""
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            v = [Fraction(0)] * n
            v[i], v[j] = Fraction(1), Fraction(-1)
            out.append(tuple(v))
    return out


def siegel_radical_roots(n: int, lower: bool = True) -> list[tuple[Fraction, ...]]:
    """Distinct root functionals of a Siegel radical of the rank-n symplectic
    similitude group, as vectors pairing against the full valuation vector.

    With the antidiagonal symplectic form, the character at matrix position
    (2n+1-i, j) of the lower radical is full_{2n+1-i} - full_j, one root for
    each unordered pair i <= j; the upper radical carries the negatives.
    """
    dim = 2 * n
    out = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            v = [Fraction(0)] * dim
            v[dim - i] += Fraction(1)
            v[j - 1] -= Fraction(1)
            if not lower:
                v = [-x for x in v]
            out.append(tuple(v))
    return out

"""The triple-ratio compression map, its symmetries, and rank certificates.

For a point with pairwise distinct coordinates the map evaluates, for every
ordered triple (r, s, t) of distinct indices, the ratio

    (x_r - x_s) / (x_r - x_t).

Each component is unchanged by x -> alpha x + beta (numerator and denominator
scale by alpha, beta cancels), so the map collapses every orbit of the affine
group to a single value vector. The dimension certificate measures the rank
of the map's Jacobian restricted to the tangent space of the quadric: both
the point itself and, when the characteristic divides n, the all-ones vector
lie in that tangent space and in the Jacobian's kernel, which caps the
restricted rank at n - 4 (n - 3 without the divisibility).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import OnDiscriminantError, SizeMismatchError
from .gf import FieldElement
from .linalg import Matrix, rank, restricted_rank
from .quadric import AmbientPoint, in_discriminant, tangent_basis
from .actions import AffineMap, Permutation, affine_act


@lru_cache(maxsize=None)
def ordered_triples(n: int) -> tuple[tuple[int, int, int], ...]:
    """All ordered triples of distinct indices in {1, ..., n}, lexicographic;
    there are n(n-1)(n-2) of them."""
    return tuple(
        (r, s, t)
        for r in range(1, n + 1)
        for s in range(1, n + 1)
        if s != r
        for t in range(1, n + 1)
        if t != r and t != s
    )


@lru_cache(maxsize=None)
def triple_positions(n: int) -> dict[tuple[int, int, int], int]:
    return {trip: i for i, trip in enumerate(ordered_triples(n))}


@dataclass(frozen=True)
class CompressionImage:
    """Values of the map, aligned with ordered_triples(n)."""

    n: int
    values: tuple[FieldElement, ...]

    def __post_init__(self):
        expected = self.n * (self.n - 1) * (self.n - 2)
        if len(self.values) != expected:
            raise ValueError(f"expected {expected} components, got {len(self.values)}")

    def value(self, r: int, s: int, t: int) -> FieldElement:
        return self.values[triple_positions(self.n)[(r, s, t)]]

    def to_json(self) -> list[list[int]]:
        return [v.to_json() for v in self.values]


def _pair_inverses(a: AmbientPoint) -> dict[tuple[int, int], FieldElement]:
    """(i, j) -> 1/(x_i - x_j) for all ordered pairs; the single place that
    can legitimately divide by zero, so the discriminant check lives here."""
    if in_discriminant(a):
        raise OnDiscriminantError("two coordinates are equal")
    inv = {}
    xs = a.coords
    for i in range(1, a.n + 1):
        for j in range(1, a.n + 1):
            if i != j:
                inv[(i, j)] = (xs[i - 1] - xs[j - 1]).inverse()
    return inv


def compress(a: AmbientPoint) -> CompressionImage:
    """Evaluate every component exactly; the point must be off the
    discriminant locus."""
    inv = _pair_inverses(a)
    xs = a.coords
    values = [
        (xs[r - 1] - xs[s - 1]) * inv[(r, t)] for (r, s, t) in ordered_triples(a.n)
    ]
    return CompressionImage(a.n, tuple(values))


def permute_image(sigma: Permutation, img: CompressionImage) -> CompressionImage:
    """(sigma . img)(r, s, t) = img(sigma^{-1} r, sigma^{-1} s, sigma^{-1} t),
    matching the left action on points: compressing a permuted point equals
    permuting the image."""
    if sigma.n != img.n:
        raise SizeMismatchError(
            f"permutation of {sigma.n} against an image of {img.n}"
        )
    inv = sigma.inverse()
    pos = triple_positions(img.n)
    vals = img.values
    new_values = tuple(
        vals[pos[(inv(r), inv(s), inv(t))]] for (r, s, t) in ordered_triples(img.n)
    )
    return CompressionImage(img.n, new_values)


def affine_invariance_check(a: AmbientPoint, g: AffineMap) -> bool:
    """Assert compress(g a) == compress(a) componentwise; exact for every
    invertible affine map, in every characteristic."""
    before = compress(a)
    after = compress(affine_act(g, a))
    return before == after


def faithfulness_witness(a: AmbientPoint) -> bool:
    """Check that the 3-cycle 2 -> 4 -> 5 -> 2 moves the image of a.

    Acting by that cycle carries the component at (1, 4, 3) to the one at
    (1, 2, 3), so a fixed image would need (x_1 - x_2)/(x_1 - x_3) equal to
    (x_1 - x_4)/(x_1 - x_3), forcing x_2 = x_4 and contradicting pairwise
    distinctness. Returns True after verifying the two components differ.
    """
    if a.n < 5:
        raise ValueError("the witness needs n >= 5")
    if in_discriminant(a):
        raise OnDiscriminantError("two coordinates are equal")
    xs = a.coords
    inv13 = (xs[0] - xs[2]).inverse()
    v123 = (xs[0] - xs[1]) * inv13
    v143 = (xs[0] - xs[3]) * inv13
    return v123 != v143


def compression_jacobian(a: AmbientPoint) -> Matrix:
    """Exact Jacobian, one row per ordered triple (r, s, t):

        d/dx_r = (x_s - x_t) / (x_r - x_t)^2
        d/dx_s = -1 / (x_r - x_t)
        d/dx_t = (x_r - x_s) / (x_r - x_t)^2

    and zero elsewhere. Every row is orthogonal to (1, ..., 1) (translation
    invariance) and to the point itself (scaling invariance)."""
    inv = _pair_inverses(a)
    inv_sq = {pair: v * v for pair, v in inv.items()}
    xs = a.coords
    n = a.n
    zero = a.ctx.zero
    entries: list[FieldElement] = []
    for r, s, t in ordered_triples(n):
        row = [zero] * n
        isq = inv_sq[(r, t)]
        row[r - 1] = (xs[s - 1] - xs[t - 1]) * isq
        row[s - 1] = -inv[(r, t)]
        row[t - 1] = (xs[r - 1] - xs[s - 1]) * isq
        entries.extend(row)
    return Matrix(n * (n - 1) * (n - 2), n, entries, a.ctx)


@dataclass(frozen=True)
class RankCertificate:
    """Observed ranks at one point, against the divisibility-driven bound."""

    n: int
    p: int
    characteristic_divides_n: bool
    ambient_rank: int
    tangent_dim: int
    restricted_rank: int
    bound: int
    satisfied: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "characteristic_divides_n": self.characteristic_divides_n,
            "ambient_rank": self.ambient_rank,
            "tangent_dim": self.tangent_dim,
            "restricted_rank": self.restricted_rank,
            "bound": self.bound,
            "satisfied": self.satisfied,
        }


def rank_certificate(a: AmbientPoint) -> RankCertificate:
    """Jacobian rank of the compression map restricted to the tangent space.

    The point must be on the quadric with pairwise distinct coordinates (so
    it is a smooth point off the singular locus). The bound is n - 4 when
    the characteristic divides n, else n - 3; satisfied reports the observed
    restricted rank against it. The observed values are reported as-is, no
    equality with the bound is asserted anywhere.
    """
    if in_discriminant(a):
        raise OnDiscriminantError("certificates need pairwise distinct coordinates")
    tangent = tangent_basis(a)  # raises NotOnQuadricError off the quadric
    jac = compression_jacobian(a)
    n, p = a.n, a.ctx.p
    divides = n % p == 0
    bound = n - 4 if divides else n - 3
    restricted = restricted_rank(jac, tangent)
    return RankCertificate(
        n=n,
        p=p,
        characteristic_divides_n=divides,
        ambient_rank=rank(jac),
        tangent_dim=len(tangent),
        restricted_rank=restricted,
        bound=bound,
        satisfied=restricted <= bound,
    )

"""The affine quadric cut out by the first two power sums, over GF(p^k).

A length-n point lies on the quadric iff its coordinate sum and its square
sum both vanish (odd characteristic makes this equivalent to the vanishing of
the first two elementary symmetric functions). The discriminant locus is
where two coordinates collide; the small diagonal is the constant vectors,
and it is exactly where the quadric is singular.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NoPointFoundError, NotOnQuadricError
from .gf import FieldCtx, FieldElement
from .linalg import Matrix, kernel_basis, rank
from .rng import SplitMix64


@dataclass(frozen=True)
class AmbientPoint:
    """A length-n coordinate vector over one field context."""

    coords: tuple[FieldElement, ...]

    def __post_init__(self):
        if len(self.coords) < 2:
            raise ValueError("a point needs at least 2 coordinates")
        ctx = self.coords[0].ctx
        for x in self.coords[1:]:
            if x.ctx != ctx:
                raise ValueError("coordinates from different fields")

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def ctx(self) -> FieldCtx:
        return self.coords[0].ctx

    def to_json(self) -> list[list[int]]:
        return [x.to_json() for x in self.coords]


def power_sums(a: AmbientPoint) -> tuple[FieldElement, FieldElement]:
    """(sum of coordinates, sum of squared coordinates), exactly."""
    s1 = a.ctx.zero
    s2 = a.ctx.zero
    for x in a.coords:
        s1 = s1 + x
        s2 = s2 + x * x
    return s1, s2


def on_quadric(a: AmbientPoint) -> bool:
    s1, s2 = power_sums(a)
    return s1.is_zero() and s2.is_zero()


def in_discriminant(a: AmbientPoint) -> bool:
    """True iff two coordinates are exactly equal."""
    return len(set(a.coords)) < a.n


def in_small_diagonal(a: AmbientPoint) -> bool:
    """True iff all coordinates are equal."""
    first = a.coords[0]
    return all(x == first for x in a.coords[1:])


def smoothness_matrix(a: AmbientPoint) -> Matrix:
    """The 2 x n matrix of gradients of the two defining sums: rows (1,...,1)
    and (2 x_1, ..., 2 x_n)."""
    ctx = a.ctx
    one = ctx.one
    two = ctx.el(2)
    return Matrix(2, a.n, [one] * a.n + [two * x for x in a.coords], ctx)


def smoothness_rank(a: AmbientPoint) -> int:
    """Rank of the gradient matrix at a point of the quadric: 2 at smooth
    points, 1 exactly on the small diagonal."""
    if not on_quadric(a):
        raise NotOnQuadricError("smoothness rank is defined on the quadric only")
    return rank(smoothness_matrix(a))


def tangent_basis(a: AmbientPoint) -> list[tuple[FieldElement, ...]]:
    """Basis of the tangent space at a smooth point: the kernel of the
    gradient matrix, dimension n - 2."""
    if not on_quadric(a):
        raise NotOnQuadricError("tangent space is defined on the quadric only")
    return kernel_basis(smoothness_matrix(a))


def complete_quadric_pair(tail) -> tuple[FieldElement, FieldElement] | None:
    """Given x_3, ..., x_n, the two leading coordinates that put the full
    vector on the quadric, or None when the discriminant is a nonsquare.

    With S and Q the sum and square sum of the tail, x_1 and x_2 are the
    roots of t^2 + S t + (S^2 + Q)/2, whose discriminant is -S^2 - 2Q. The
    root using +sqrt goes first; sqrt's own tie-break makes this canonical.
    """
    tail = tuple(tail)
    ctx = tail[0].ctx
    s = ctx.zero
    q = ctx.zero
    for x in tail:
        s = s + x
        q = q + x * x
    disc = -(s * s) - q - q
    root = disc.sqrt()
    if root is None:
        return None
    half = ctx.el(2).inverse()
    x1 = (-s + root) * half
    x2 = (-s - root) * half
    return x1, x2


def default_max_tries(ctx: FieldCtx) -> int:
    return 64 * ctx.size


def sample_quadric_point(
    n: int, ctx: FieldCtx, seed: int, max_tries: int | None = None
) -> AmbientPoint:
    """A seeded point on the quadric with pairwise distinct coordinates.

    Each try draws x_3, ..., x_n uniformly (SplitMix64, canonical element
    order), completes the pair (x_1, x_2), and retries on a nonsquare
    discriminant or any coordinate collision. Raises NoPointFoundError after
    max_tries; over small fields the locus can be genuinely empty, so the
    message suggests retrying over an extension.
    """
    if n < 5:
        raise ValueError("sampling needs n >= 5")
    if max_tries is None:
        max_tries = default_max_tries(ctx)
    rng = SplitMix64(seed)
    size = ctx.size
    for _ in range(max_tries):
        tail = tuple(ctx.element_at(rng.below(size)) for _ in range(n - 2))
        if len(set(tail)) < n - 2:
            continue
        pair = complete_quadric_pair(tail)
        if pair is None:
            continue
        x1, x2 = pair
        if x1 == x2 or x1 in tail or x2 in tail:
            continue
        return AmbientPoint((x1, x2) + tail)
    raise NoPointFoundError(
        f"no distinct-coordinate point on the quadric found for n={n} over {ctx!r} "
        f"in {max_tries} tries; the locus may be empty here, retry over an "
        f"extension field (larger k)"
    )

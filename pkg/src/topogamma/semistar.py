"""The starred semi operators: the semi-open family generated by gamma-open
intervals, semi-closure, semi-interior (lattice and pointwise readings),
semi-boundary, semi-exterior, semi-regular sets, pre-open sets, and the
closedness characterizations consumed by the claims engine.

A context pins one closure variant for the whole operator suite; comparing
variants is the claims engine's job, never an operator's.
"""
from __future__ import annotations

from functools import cached_property
from typing import NamedTuple

from .core import (
    Mask,
    interval_family,
    join_of_subsets,
    meet_of_supersets,
    semi_open_family as classical_semi_open_family,
)
from .gamma import CLOSURE_VARIANTS, GammaSpace


class SemistarContext:
    """A space plus a pinned closure variant, with cached derived families."""

    def __init__(self, space: GammaSpace, closure_variant: str = "pointwise"):
        if closure_variant not in CLOSURE_VARIANTS:
            raise ValueError(
                f"unknown closure variant {closure_variant!r}, expected one of {CLOSURE_VARIANTS}"
            )
        self.space = space
        self.closure_variant = closure_variant

    @property
    def full(self) -> Mask:
        return self.space.full

    @property
    def universe(self):
        return self.space.universe

    def describe(self) -> str:
        return f"{self.space.describe()} closure={self.closure_variant}"

    # variant-matched base operators ------------------------------------
    def cl_g(self, mask: Mask) -> Mask:
        if self.closure_variant == "pointwise":
            return self.space.cl_pointwise_table[mask]
        return self.space.cl_lattice_table[mask]

    def int_g(self, mask: Mask) -> Mask:
        if self.closure_variant == "pointwise":
            return self.space.int_pointwise_table[mask]
        return self.space.int_lattice_table[mask]

    def bd_g(self, mask: Mask) -> Mask:
        return self.cl_g(mask) & self.cl_g(self.full ^ mask)

    @property
    def gamma_closed_family(self) -> tuple[Mask, ...]:
        if self.closure_variant == "pointwise":
            return self.space.pointwise_closed_family
        return self.space.gamma_closed_family

    # starred semi families ---------------------------------------------
    @cached_property
    def so_family(self) -> tuple[Mask, ...]:
        # one interval [O, cl(O)] per gamma-open O; the union of the
        # intervals is the whole family
        return interval_family(
            (o, self.cl_g(o)) for o in self.space.tau_gamma
        )

    @cached_property
    def so_set(self) -> frozenset:
        return frozenset(self.so_family)

    @cached_property
    def sc_family(self) -> tuple[Mask, ...]:
        return tuple(sorted(self.full ^ s for s in self.so_family))

    @cached_property
    def sc_set(self) -> frozenset:
        return frozenset(self.sc_family)

    @cached_property
    def scl_table(self) -> tuple[Mask, ...]:
        return tuple(
            meet_of_supersets(a, self.sc_family, self.full)
            for a in range(self.full + 1)
        )

    @cached_property
    def sint_table(self) -> tuple[Mask, ...]:
        return tuple(
            join_of_subsets(a, self.so_family) for a in range(self.full + 1)
        )

    @cached_property
    def sint_pointwise_table(self) -> tuple[Mask, ...]:
        classical = classical_semi_open_family(self.space.topology)
        tab = self.space.gamma.table
        n = self.universe.size
        out = []
        for a in range(self.full + 1):
            result = 0
            for x in range(n):
                if not a >> x & 1:
                    continue
                if any(u >> x & 1 and tab[u] & ~a == 0 for u in classical):
                    result |= 1 << x
            out.append(result)
        return tuple(out)


class ClosedChecks(NamedTuple):
    """The three closedness readings compared by the claims engine."""

    sandwich: bool       # some gamma-closed F has int_g(F) inside A inside F
    int_of_cl: bool      # int_g(cl_g(A)) stays inside A
    member: bool         # A is in the semi-closed family


def so_family(ctx: SemistarContext) -> tuple[Mask, ...]:
    """The starred semi-open family of the context, canonical order."""
    return ctx.so_family


def sc_family(ctx: SemistarContext) -> tuple[Mask, ...]:
    """Complements of the semi-open family, canonical order."""
    return ctx.sc_family


def is_gs_open(ctx: SemistarContext, mask: Mask) -> bool:
    ctx.universe.check(mask)
    return mask in ctx.so_set


def is_gs_closed(ctx: SemistarContext, mask: Mask) -> bool:
    ctx.universe.check(mask)
    return (ctx.full ^ mask) in ctx.so_set


def s_closure(ctx: SemistarContext, mask: Mask) -> Mask:
    """Meet of the semi-closed supersets of `mask`."""
    ctx.universe.check(mask)
    return ctx.scl_table[mask]


def s_interior(ctx: SemistarContext, mask: Mask) -> Mask:
    """Join of the semi-open subsets of `mask`."""
    ctx.universe.check(mask)
    return ctx.sint_table[mask]


def s_interior_pointwise(ctx: SemistarContext, mask: Mask) -> Mask:
    """Points with a classically semi-open neighborhood whose image fits in
    `mask`: the alternative interior some intersection identities need."""
    ctx.universe.check(mask)
    return ctx.sint_pointwise_table[mask]


def s_boundary(ctx: SemistarContext, mask: Mask) -> Mask:
    ctx.universe.check(mask)
    return ctx.scl_table[mask] & ctx.scl_table[ctx.full ^ mask]


def s_exterior(ctx: SemistarContext, mask: Mask) -> Mask:
    ctx.universe.check(mask)
    return ctx.sint_table[ctx.full ^ mask]


def is_semi_regular_set(ctx: SemistarContext, mask: Mask) -> bool:
    """Both semi-open and semi-closed."""
    ctx.universe.check(mask)
    return mask in ctx.so_set and mask in ctx.sc_set


def semi_regular_family(ctx: SemistarContext) -> tuple[Mask, ...]:
    return tuple(m for m in ctx.so_family if m in ctx.sc_set)


def is_pre_open(ctx: SemistarContext, mask: Mask) -> bool:
    """Verbatim equality test: A equals int_g(cl_g(A))."""
    ctx.universe.check(mask)
    return mask == ctx.int_g(ctx.cl_g(mask))


def gs_closed_characterizations(ctx: SemistarContext, mask: Mask) -> ClosedChecks:
    """Evaluate the three closedness readings on one subset."""
    ctx.universe.check(mask)
    sandwich = any(
        ctx.int_g(f) & ~mask == 0 and mask & ~f == 0
        for f in ctx.gamma_closed_family
    )
    return ClosedChecks(
        sandwich=sandwich,
        int_of_cl=ctx.int_g(ctx.cl_g(mask)) & ~mask == 0,
        member=mask in ctx.sc_set,
    )

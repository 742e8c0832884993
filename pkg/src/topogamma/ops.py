"""Expansive operations on subsets: construction, classification, enumeration.

An operation maps every subset of the universe to another subset and must be
expansive on the open sets (V fits inside its image for every open V). Tables
are total on the power set even though only the open sets are constrained:
the semi-regular and semi-open operation classes apply the operation to
semi-open sets, so partial tables are completed with an explicit fill policy.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping

from .core import Mask, Topology, closure, interior, semi_open_family, supersets
from .errors import NotExpansiveOnOpens

BUILTIN_KINDS = ("identity", "closure", "interior-closure")
FILL_POLICIES = ("identity", "closure")
OPERATION_DOMAINS = ("opens", "semi-opens")


@dataclass(frozen=True)
class Expansivity:
    """On which domains the operation satisfies A fits inside image(A)."""

    on_opens: bool
    on_semi_opens: bool
    on_all_subsets: bool


@dataclass(frozen=True)
class GammaOperation:
    """A total subset-to-subset table, expansive on the open sets."""

    table: tuple[Mask, ...]
    origin: str
    expansive_on: Expansivity

    def __call__(self, mask: Mask) -> Mask:
        return self.table[mask]


@dataclass(frozen=True)
class OperationClass:
    regular: bool
    open_op: bool
    monotone: bool
    semi_regular_cap: bool
    semi_regular_cup: bool
    semi_open_op: bool


def _expansivity(topology: Topology, table: tuple[Mask, ...]) -> Expansivity:
    semi = semi_open_family(topology)
    return Expansivity(
        on_opens=all(o & ~table[o] == 0 for o in topology.opens),
        on_semi_opens=all(s & ~table[s] == 0 for s in semi),
        on_all_subsets=all(m & ~table[m] == 0 for m in range(topology.full + 1)),
    )


def _finish(topology: Topology, table: list[Mask], origin: str) -> GammaOperation:
    for v in topology.opens:
        if v & ~table[v]:
            raise NotExpansiveOnOpens(v)
    return GammaOperation(tuple(table), origin, _expansivity(topology, tuple(table)))


def gamma_builtin(kind: str, topology: Topology) -> GammaOperation:
    """One of the three stock operations: identity, closure, interior of closure."""
    if kind not in BUILTIN_KINDS:
        raise ValueError(f"unknown builtin kind {kind!r}, expected one of {BUILTIN_KINDS}")
    if kind == "identity":
        table = [m for m in range(topology.full + 1)]
    elif kind == "closure":
        table = [closure(topology, m) for m in range(topology.full + 1)]
    else:
        table = [interior(topology, closure(topology, m)) for m in range(topology.full + 1)]
    return _finish(topology, table, kind)


def gamma_from_table(
    topology: Topology,
    entries: Mapping[Mask, Mask],
    fill: str = "identity",
) -> GammaOperation:
    """Build an operation from listed entries, completing the rest by `fill`.

    Rejects tables that are not expansive on some open set.
    """
    if fill not in FILL_POLICIES:
        raise ValueError(f"unknown fill policy {fill!r}, expected one of {FILL_POLICIES}")
    universe = topology.universe
    for key, value in entries.items():
        universe.check(key)
        universe.check(value)
    table = []
    for m in range(topology.full + 1):
        if m in entries:
            table.append(entries[m])
        elif fill == "identity":
            table.append(m)
        else:
            table.append(closure(topology, m))
    return _finish(topology, table, "table")


def classify_operation(topology: Topology, op: GammaOperation) -> OperationClass:
    """Decide every operation-class flag by exhaustive check.

    regular: any two open neighborhoods of a point dominate a third one's
    image (intersection form). open: every open neighborhood image contains
    a gamma-open neighborhood. monotone: images preserve inclusion.
    semi_regular_cap / _cup: the regularity pattern quantified over
    semi-open neighborhoods, with intersection / union on the right side.
    semi_open_op: every semi-open neighborhood image contains a semi-open
    neighborhood.
    """
    from .gamma import GammaSpace, gamma_open_family

    n = topology.universe.size
    opens = topology.opens
    semi = semi_open_family(topology)
    tab = op.table
    tau_gamma = gamma_open_family(GammaSpace(topology, op))

    def regular_over(family: tuple[Mask, ...], cap: bool) -> bool:
        for x in range(n):
            nbds = [u for u in family if u >> x & 1]
            for u in nbds:
                for v in nbds:
                    target = tab[u] & tab[v] if cap else tab[u] | tab[v]
                    if not any(tab[w] & ~target == 0 for w in nbds):
                        return False
        return True

    def open_op() -> bool:
        for x in range(n):
            for u in opens:
                if not u >> x & 1:
                    continue
                if not any(b >> x & 1 and b & ~tab[u] == 0 for b in tau_gamma):
                    return False
        return True

    def monotone() -> bool:
        full = topology.full
        for a in range(full + 1):
            for b in supersets(a, full):
                if tab[a] & ~tab[b]:
                    return False
        return True

    def semi_open_op() -> bool:
        for x in range(n):
            for u in semi:
                if not u >> x & 1:
                    continue
                if not any(s >> x & 1 and s & ~tab[u] == 0 for s in semi):
                    return False
        return True

    return OperationClass(
        regular=regular_over(opens, cap=True),
        open_op=open_op(),
        monotone=monotone(),
        semi_regular_cap=regular_over(semi, cap=True),
        semi_regular_cup=regular_over(semi, cap=False),
        semi_open_op=semi_open_op(),
    )


def enumerate_operations(
    topology: Topology,
    domain: str = "opens",
    budget: int | None = None,
) -> Iterator[GammaOperation]:
    """Stream operations on a topology in a fixed, deterministic order.

    The three builtins come first, then explicit tables whose keys range
    over the selected domain and whose values range over supersets of each
    key (so every table is expansive by construction), identity fill
    elsewhere. Stops after `budget` operations when given.
    """
    if domain not in OPERATION_DOMAINS:
        raise ValueError(f"unknown domain {domain!r}, expected one of {OPERATION_DOMAINS}")
    if budget is not None and budget <= 0:
        return
    emitted = 0
    for kind in BUILTIN_KINDS:
        yield gamma_builtin(kind, topology)
        emitted += 1
        if budget is not None and emitted >= budget:
            return
    if domain == "opens":
        keys = topology.opens
    else:
        keys = tuple(sorted(set(topology.opens) | set(semi_open_family(topology))))
    choice_lists = [tuple(supersets(k, topology.full)) for k in keys]
    for combo in product(*choice_lists):
        yield gamma_from_table(topology, dict(zip(keys, combo)), fill="identity")
        emitted += 1
        if budget is not None and emitted >= budget:
            return

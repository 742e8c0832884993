"""Shared fixtures and hypothesis strategies."""
from __future__ import annotations

import pytest
from hypothesis import strategies as st

from topogamma import (
    GammaSpace,
    SemistarContext,
    default_universe,
    fixture_catalog,
    gamma_builtin,
    gamma_from_table,
    make_topology,
)
from topogamma.core import supersets


@pytest.fixture(scope="session")
def catalog():
    return fixture_catalog()


@pytest.fixture(scope="session")
def f5(catalog):
    return catalog["F5"]


@pytest.fixture(scope="session")
def fid(catalog):
    return catalog["Fid"]


def _closed_rows(rows: tuple, n: int) -> tuple:
    # reflexive-transitive closure of the drawn row masks
    rows = [r | (1 << i) for i, r in enumerate(rows)]
    changed = True
    while changed:
        changed = False
        for i in range(n):
            merged = rows[i]
            rest = rows[i]
            while rest:
                j = (rest & -rest).bit_length() - 1
                merged |= rows[j]
                rest &= rest - 1
            if merged != rows[i]:
                rows[i] = merged
                changed = True
    return tuple(rows)


@st.composite
def topologies(draw, max_n: int = 4):
    """A random topology, built from a random specialization preorder."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    full = (1 << n) - 1
    rows = draw(st.tuples(*[st.integers(min_value=0, max_value=full)] * n))
    rows = _closed_rows(rows, n)
    opens = []
    for a in range(full + 1):
        rest = a
        ok = True
        while rest:
            i = (rest & -rest).bit_length() - 1
            if rows[i] & ~a:
                ok = False
                break
            rest &= rest - 1
        if ok:
            opens.append(a)
    return make_topology(default_universe(n), opens)


@st.composite
def gamma_spaces(draw, max_n: int = 4):
    """A random space: random topology plus a random expansive operation."""
    topology = draw(topologies(max_n=max_n))
    kind = draw(st.sampled_from(("identity", "closure", "interior-closure", "table")))
    if kind != "table":
        return GammaSpace(topology, gamma_builtin(kind, topology))
    entries = {}
    for v in topology.opens:
        entries[v] = draw(st.sampled_from(tuple(supersets(v, topology.full))))
    return GammaSpace(topology, gamma_from_table(topology, entries))


@st.composite
def semistar_contexts(draw, max_n: int = 4):
    space = draw(gamma_spaces(max_n=max_n))
    variant = draw(st.sampled_from(("pointwise", "lattice")))
    return SemistarContext(space, variant)

"""Products of decorated strata classes by excess intersection.

The product of two pushforward classes is computed stratum by stratum:
every common degeneration contributes the pullbacks of the two factor
decorations times an excess class, one factor -psi_h - psi_h' for each
edge that survives in both contractions, and the contribution is
weighted by 1/|Aut| of the degeneration.
"""

import itertools

from . import stable_graphs as sg
from .errors import DomainError
from .rationals import ONE, QQ
from .taut_classes import (
    PSI_HE,
    Decoration,
    TautClass,
    decoration_mul,
    dim_moduli,
    fundamental_class,
)

_ORBIT_CACHE: dict = {}


def _aut_orbit_sum(graph, dec):
    """Distinct transports of dec under Aut(graph), with multiplicities.

    Summing a decoration over the automorphism group shows up once per
    factor of a product; collapsing repeats into multiplicities keeps the
    later pullback loops short.
    """
    key = (graph, dec)
    cached = _ORBIT_CACHE.get(key)
    if cached is not None:
        return cached
    out: dict = {}
    for vmap, hemap in sg.automorphisms(graph):
        moved = dec.transport(vmap, hemap)
        out[moved] = out.get(moved, 0) + 1
    _ORBIT_CACHE[key] = out
    return out


def _pullback_monomials(graph, vmap, he_inv, dec):
    """Pull a factor decoration back along a contraction of `graph`.

    `vmap` sends each vertex of `graph` to the factor vertex it lands on
    and `he_inv` names, for every factor half-edge, the half-edge of
    `graph` sitting over it.  Psi classes transport along those maps; a
    kappa class pulls back to the sum over preimage vertices, so the
    result is a list of (Decoration, multiplicity) pairs.
    """
    psi = []
    for key, e in dec.psi:
        if key[0] == PSI_HE:
            nv, ns = he_inv[(key[1], key[2])]
            psi.append(((PSI_HE, nv, ns), e))
        else:
            psi.append((key, e))
    base_psi = tuple(sorted(psi))

    preimages = [[] for _ in dec.kappa]
    for v in range(graph.n_vertices):
        preimages[vmap[v]].append(v)
    factors = []
    for w, ks in enumerate(dec.kappa):
        for a in ks:
            factors.append((a, preimages[w]))
    if not factors:
        empty = ((),) * graph.n_vertices
        return [(Decoration(base_psi, empty), 1)]

    out: dict = {}
    for choice in itertools.product(*(pre for _, pre in factors)):
        kap = [[] for _ in range(graph.n_vertices)]
        for (a, _), v in zip(factors, choice):
            kap[v].append(a)
        mono = Decoration(base_psi, tuple(tuple(sorted(k)) for k in kap))
        out[mono] = out.get(mono, 0) + 1
    return list(out.items())


def _excess_monomials(graph, shared):
    """Expansion of prod over shared edges of (-psi_h - psi_h')."""
    if not shared:
        return [(Decoration((), ((),) * graph.n_vertices), ONE)]
    sign = ONE if len(shared) % 2 == 0 else -ONE
    out = []
    for picks in itertools.product(*[graph.edges[i] for i in shared]):
        exps: dict = {}
        for v, s in picks:
            key = (PSI_HE, v, s)
            exps[key] = exps.get(key, 0) + 1
        out.append(
            (Decoration(tuple(sorted(exps.items())), ((),) * graph.n_vertices), sign)
        )
    return out


def multiply(a: TautClass, b: TautClass) -> TautClass:
    """Excess intersection product of two decorated strata classes."""
    if a.virtual or b.virtual:
        raise DomainError("virtual psi classes only support integration")
    if (a.g, a.n) != (b.g, b.n):
        raise DomainError("factors live on different moduli spaces")
    d = a.d + b.d
    if d > dim_moduli(a.g, a.n):
        raise DomainError(
            "product degree %d exceeds the dimension %d" % (d, dim_moduli(a.g, a.n))
        )
    out = TautClass(a.g, a.n, d)
    for (ga, da), ca in a.terms.items():
        orbit_a = _aut_orbit_sum(ga, da)
        for (gb, db), cb in b.terms.items():
            orbit_b = _aut_orbit_sum(gb, db)
            scale = ca * cb
            for graph, va, ia, vb, ib, shared in sg.degeneration_base_pairs(ga, gb):
                weight = scale / sg.automorphism_count(graph)
                pulled_a: dict = {}
                for dec, mult in orbit_a.items():
                    for mono, m in _pullback_monomials(graph, va, ia, dec):
                        pulled_a[mono] = pulled_a.get(mono, 0) + mult * m
                pulled_b: dict = {}
                for dec, mult in orbit_b.items():
                    for mono, m in _pullback_monomials(graph, vb, ib, dec):
                        pulled_b[mono] = pulled_b.get(mono, 0) + mult * m
                excess = _excess_monomials(graph, shared)
                for ma, ka in pulled_a.items():
                    for mb, kb in pulled_b.items():
                        mab = decoration_mul(ma, mb)
                        coeff = weight * ka * kb
                        for me, sign in excess:
                            out._insert(graph, decoration_mul(mab, me), coeff * sign)
    return out


def power(a: TautClass, k: int) -> TautClass:
    """k-th power under the excess intersection product."""
    if k < 0:
        raise DomainError("negative powers are not defined")
    result = fundamental_class(a.g, a.n)
    for _ in range(k):
        result = multiply(result, a)
    return result

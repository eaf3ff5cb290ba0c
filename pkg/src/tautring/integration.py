"""Integration of tautological classes against the fundamental class.

psi integrals are computed by the Witten-Kontsevich / DVV recursion over
exact rationals.  kappa decorations are converted to psi insertions on
auxiliary markings; two independent conversion routes are provided (a
one-at-a-time recursion used by `integrate`, and the set-partition formula
behind `kappa_to_psi`) so that they can check each other.

In the pushforward convention a term (graph, dec, c) integrates to
c times the product over vertices of the vertex integrals; no automorphism
factor appears.
"""

from __future__ import annotations

import os

from .errors import DomainError
from .rationals import QQ, ZERO, ONE, double_factorial, format_rat, parse_rat
from .stable_graphs import StableGraph
from .taut_classes import (
    PSI_HE,
    PSI_LEG,
    Decoration,
    TautClass,
    dim_moduli,
    vertex_degrees,
)

_CORRELATORS: dict[tuple, object] = {}
_CACHE_FILE_LOADED = False


def _cache_path():
    root = os.environ.get("TAUTRING_CACHE_DIR")
    if not root:
        return None
    return os.path.join(root, "correlators.txt")


def _load_cache_file():
    global _CACHE_FILE_LOADED
    _CACHE_FILE_LOADED = True
    path = _cache_path()
    if not path or not os.path.exists(path):
        return
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            gpart, dpart, value = line.split(";")
            exps = tuple(int(x) for x in dpart.split(",") if x != "")
            _CORRELATORS[(int(gpart), exps)] = parse_rat(value)


def save_correlator_cache() -> int:
    """Persist the psi-integral memo table; returns the number of records."""
    path = _cache_path()
    if not path:
        return 0
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    lines = []
    for (g, exps), value in sorted(_CORRELATORS.items()):
        lines.append(f"{g};{','.join(str(x) for x in exps)};{format_rat(value)}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + ("\n" if lines else ""))
    return len(lines)


def psi_integral(g: int, exponents) -> object:
    """<tau_{d_1} ... tau_{d_n}>_g, zero unless sum(d_i) = 3g - 3 + n.

    Computed by the DVV recursion with base cases <tau_0^3>_0 = 1 and
    <tau_1>_1 = 1/24.
    """
    exponents = tuple(sorted(int(d) for d in exponents))
    n = len(exponents)
    if g < 0 or any(d < 0 for d in exponents):
        return ZERO
    if 2 * g - 2 + n <= 0:
        return ZERO
    if sum(exponents) != dim_moduli(g, n):
        return ZERO
    if not _CACHE_FILE_LOADED:
        _load_cache_file()
    return _dvv(g, exponents)


def _dvv(g: int, exps: tuple) -> object:
    key = (g, exps)
    cached = _CORRELATORS.get(key)
    if cached is not None:
        return cached
    n = len(exps)
    if g == 0 and n == 3:
        value = ONE  # <tau_0^3>_0, the only dimension-correct case
    elif g == 1 and n == 1:
        value = QQ(1, 24)  # <tau_1>_1
    else:
        # Recurse on the largest exponent, which is >= 1 away from the
        # base cases.
        rest = list(exps[:-1])
        d1 = exps[-1]
        total = ZERO
        # string/join terms
        for j, dj in enumerate(rest):
            reduced = rest[:j] + rest[j + 1:] + [d1 + dj - 1]
            coeff = QQ(
                double_factorial(2 * (d1 + dj) - 1),
                double_factorial(2 * dj - 1),
            )
            sub = _integral_checked(g, reduced)
            if sub:
                total += coeff * sub
        # genus and separating reductions
        for a in range(d1 - 1):
            b = d1 - 2 - a
            weight = QQ(
                double_factorial(2 * a + 1) * double_factorial(2 * b + 1), 2
            )
            sub = _integral_checked(g - 1, rest + [a, b])
            if sub:
                total += weight * sub
            for g1 in range(g + 1):
                g2 = g - g1
                for mask in range(1 << len(rest)):
                    part1 = [rest[i] for i in range(len(rest)) if mask >> i & 1]
                    part2 = [rest[i] for i in range(len(rest)) if not mask >> i & 1]
                    s1 = _integral_checked(g1, part1 + [a])
                    if not s1:
                        continue
                    s2 = _integral_checked(g2, part2 + [b])
                    if s2:
                        total += weight * s1 * s2
        value = total / double_factorial(2 * d1 + 1)
    _CORRELATORS[key] = value
    return value


def _integral_checked(g: int, exps: list) -> object:
    exps_t = tuple(sorted(exps))
    n = len(exps_t)
    if g < 0 or 2 * g - 2 + n <= 0:
        return ZERO
    if sum(exps_t) != dim_moduli(g, n):
        return ZERO
    return _dvv(g, exps_t)


# ---------------------------------------------------------------------------
# kappa conversion, route 1: one kappa at a time


_VERTEX_CACHE: dict[tuple, object] = {}


def vertex_integral(g: int, psi_exps, kappas) -> object:
    """Integral of prod(psi_i^{b_i}) * prod(kappa_{a_j}) over Mbar_{g,n}.

    kappa_a = pi_*(psi^{a+1}), and pulling the remaining kappas through
    the forgetful map (pi^* kappa_b = kappa_b - psi_new^b) lets the new
    marking absorb any subset S of them with sign (-1)^|S|:

        <X kappa_a prod kappa_b> =
            sum_S (-1)^|S| <X tau_{a + sum(S) + 1} prod_{b not in S} kappa_b>
    """
    psi_exps = tuple(sorted(int(b) for b in psi_exps))
    kappas = tuple(sorted(int(a) for a in kappas))
    n = len(psi_exps)
    if 2 * g - 2 + n <= 0 and not kappas:
        return ZERO
    if sum(psi_exps) + sum(kappas) != dim_moduli(g, n):
        return ZERO
    key = (g, psi_exps, kappas)
    cached = _VERTEX_CACHE.get(key)
    if cached is not None:
        return cached
    if not kappas:
        value = psi_integral(g, psi_exps)
    else:
        a_last = kappas[-1]
        rest = kappas[:-1]
        value = ZERO
        for bits in range(1 << len(rest)):
            absorbed = a_last
            kept = []
            for i, b in enumerate(rest):
                if bits >> i & 1:
                    absorbed += b
                else:
                    kept.append(b)
            sign = -ONE if bin(bits).count("1") % 2 else ONE
            value += sign * vertex_integral(
                g, psi_exps + (absorbed + 1,), tuple(kept)
            )
    _VERTEX_CACHE[key] = value
    return value


# ---------------------------------------------------------------------------
# kappa conversion, route 2: set partitions and virtual legs


def _set_partitions(items: list):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [partition[i] + [first]] + partition[i + 1:]
        yield partition + [[first]]


def kappa_to_psi(cls: TautClass) -> TautClass:
    """Trade every kappa decoration for psi insertions on virtual legs.

    Each vertex kappa monomial expands over set partitions P of its factors
    into sum over P of prod_{B in P} (-1)^{|B|-1} times a psi exponent
    sum(B)+1 on a fresh leg of that vertex.  The result integrates to the
    same number as the input; it is marked virtual because its terms live
    on graphs with extra legs and is accepted by `integrate` only.
    """
    out = TautClass(cls.g, cls.n, cls.d, virtual=True)
    for (graph, dec), coeff in cls.terms.items():
        expansions = [(graph, dec, coeff)]
        for v in range(graph.n_vertices):
            new_expansions = []
            for (cur_graph, cur_dec, cur_coeff) in expansions:
                kappas = list(cur_dec.kappa[v])
                if not kappas:
                    new_expansions.append((cur_graph, cur_dec, cur_coeff))
                    continue
                for partition in _set_partitions(kappas):
                    factor = 1
                    for block in partition:
                        factor *= (-1) ** (len(block) - 1)
                    next_mark = (
                        max(
                            [cur_graph.n_markings]
                            + [m for lv in cur_graph.legs for m in lv]
                        )
                        + 1
                    )
                    new_legs = list(map(list, cur_graph.legs))
                    psi = dict(cur_dec.psi)
                    for block in partition:
                        new_legs[v].append(next_mark)
                        psi[(PSI_LEG, next_mark)] = sum(block) + 1
                        next_mark += 1
                    new_graph = StableGraph(
                        cur_graph.genera,
                        tuple(tuple(l) for l in new_legs),
                        cur_graph.edges,
                    )
                    kappa = list(cur_dec.kappa)
                    kappa[v] = ()
                    new_dec = Decoration(
                        tuple(sorted(psi.items())), tuple(kappa)
                    )
                    new_expansions.append(
                        (new_graph, new_dec, cur_coeff * factor)
                    )
            expansions = new_expansions
        for (t_graph, t_dec, t_coeff) in expansions:
            key = (t_graph, t_dec)
            new = out.terms.get(key, 0) + QQ(t_coeff)
            if new:
                out.terms[key] = new
            else:
                out.terms.pop(key, None)
    return out


# ---------------------------------------------------------------------------
# integration of classes


def _term_vertex_data(graph: StableGraph, dec: Decoration):
    """Per-vertex (genus, psi exponent list, kappa list) for integration."""
    V = graph.n_vertices
    psi_at: list[list[int]] = [[] for _ in range(V)]
    leg_home = {}
    for v in range(V):
        for m in graph.legs[v]:
            leg_home[m] = v
    exps = {}
    for key, e in dec.psi:
        exps[key] = e
    for v in range(V):
        for m in graph.legs[v]:
            psi_at[v].append(exps.get((PSI_LEG, m), 0))
    for (h1, h2) in graph.edges:
        psi_at[h1[0]].append(exps.get((PSI_HE, h1[0], h1[1]), 0))
        psi_at[h2[0]].append(exps.get((PSI_HE, h2[0], h2[1]), 0))
    return [
        (graph.genera[v], tuple(sorted(psi_at[v])), dec.kappa[v])
        for v in range(V)
    ]


_TERM_INTEGRAL_CACHE: dict = {}


def term_integral(graph: StableGraph, dec: Decoration) -> object:
    """Integral of xi_*(dec): the product of the vertex integrals."""
    key = (graph, dec)
    cached = _TERM_INTEGRAL_CACHE.get(key)
    if cached is not None:
        return cached
    value = ONE
    for (gv, psi_exps, kappas) in _term_vertex_data(graph, dec):
        nv = len(psi_exps)
        if sum(psi_exps) + sum(kappas) != dim_moduli(gv, nv):
            value = ZERO
            break
        value *= vertex_integral(gv, psi_exps, kappas)
        if not value:
            break
    _TERM_INTEGRAL_CACHE[key] = value
    return value


def integrate(cls: TautClass) -> object:
    """Integrate a top-degree class over Mbar_{g,n}.

    Terms whose vertex dimensions do not match integrate to zero, so a
    virtual (kappa-converted) class is handled by the same product formula.
    """
    if not cls.virtual and cls.d != dim_moduli(cls.g, cls.n):
        raise DomainError(
            f"degree {cls.d} class cannot be integrated on a "
            f"{dim_moduli(cls.g, cls.n)}-dimensional space"
        )
    total = ZERO
    for (graph, dec), coeff in cls.terms.items():
        value = term_integral(graph, dec)
        if value:
            total += coeff * value
    return total

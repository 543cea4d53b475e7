"""Identity suites checked exactly over bounded universes of forests.

Every suite enumerates its instances in a fixed order (total vertex count
first, then canonical serialization), compares both sides of an identity
term by term with exact rationals, and reports any counterexample in full.
Instances are enumerated smallest first, so the first failure in a report is
a minimal one.

The hall-oracle suite is the designated cross-check of the product: it
recomputes every structure constant from the forest generator plus the raw
cut census, bypassing the grafting candidate step used by the algebra.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import cuts, enumeration, hall, nsym, qsym
from .forest import (
    ColorTable,
    Forest,
    add_classes,
    format_class,
    format_forest,
    k0_class,
)
from .linear import LinComb, tensor

__all__ = ["SUITE_NAMES", "run_suite", "run_all"]


def _classes_of_total(ncolors: int, total: int):
    for alpha in itertools.product(*(range(total + 1),) * ncolors):
        if sum(alpha) == total:
            yield alpha


def _classes_upto(ncolors: int, bound: int) -> list[tuple[int, ...]]:
    out = []
    for total in range(bound + 1):
        out.extend(sorted(_classes_of_total(ncolors, total)))
    return out


def _forests_upto(ncolors: int, bound: int) -> list[Forest]:
    out = []
    for alpha in _classes_upto(ncolors, bound):
        out.extend(enumeration.forests_of_class(alpha, limit=bound))
    return out


@lru_cache(maxsize=None)
def _words_of_degree(gamma: tuple[int, ...]) -> tuple:
    """All words (tuples of nonzero classes) with letter sum gamma."""
    if not any(gamma):
        return ((),)
    out = []
    for head in itertools.product(*(range(g + 1) for g in gamma)):
        if not any(head):
            continue
        rest = tuple(g - h for g, h in zip(gamma, head))
        out.extend((head,) + tail for tail in _words_of_degree(rest))
    return tuple(out)


def _new_report(name: str, colors: ColorTable, bound: int) -> dict:
    return {
        "suite": name,
        "colors": list(colors.names),
        "bound": bound,
        "checked": 0,
        "failures": [],
    }


def _fmt_terms(elem: LinComb, fmt_key) -> dict:
    return {
        s: str(c)
        for s, c in sorted((fmt_key(k), c) for k, c in elem.terms.items())
    }


def _check(report, instance, lhs: LinComb, rhs: LinComb, fmt_key) -> None:
    report["checked"] += 1
    if lhs != rhs:
        report["failures"].append(
            {
                "instance": instance,
                "lhs": _fmt_terms(lhs, fmt_key),
                "rhs": _fmt_terms(rhs, fmt_key),
            }
        )


def _check_scalar(report, instance, lhs, rhs) -> None:
    report["checked"] += 1
    if lhs != rhs:
        report["failures"].append(
            {"instance": instance, "lhs": str(lhs), "rhs": str(rhs)}
        )


def _fmt_forest(colors):
    return lambda f: format_forest(f, colors)


def _fmt_forest_pair(colors):
    return lambda p: (
        f"{format_forest(p[0], colors)} (x) {format_forest(p[1], colors)}"
    )


def _fmt_forest_triple(colors):
    return lambda t: " (x) ".join(format_forest(f, colors) for f in t)


def _fmt_word_pair(p):
    return f"{nsym.format_word(p[0])} (x) {nsym.format_word(p[1])}"


def _fmt_comp_pair(p):
    return (
        f"{qsym.format_composition(p[0])} (x) {qsym.format_composition(p[1])}"
    )


def _suite_theorem1(colors, bound, weights) -> dict:
    """hall_comul(kappa_gamma) = sum over alpha+beta=gamma of
    kappa_alpha (x) kappa_beta."""
    nc = len(colors)
    report = _new_report("theorem1", colors, bound)
    for gamma in _classes_upto(nc, bound):
        lhs = hall.hall_comul(hall.kappa(gamma, limit=bound))
        terms = []
        for alpha in itertools.product(*(range(g + 1) for g in gamma)):
            beta = tuple(g - a for g, a in zip(gamma, alpha))
            for fa in enumeration.forests_of_class(alpha, limit=bound):
                for fb in enumeration.forests_of_class(beta, limit=bound):
                    terms.append(((fa, fb), 1))
        rhs = LinComb(terms)
        _check(
            report,
            f"gamma={format_class(gamma)}",
            lhs,
            rhs,
            _fmt_forest_pair(colors),
        )
    return report


def _suite_theorem2(colors, bound, weights) -> dict:
    """The flag expansion is the transpose of rho: the coefficient of the
    composition w in rho_t(W_A) equals the coefficient of delta_A in
    rho(word w), for every forest A and word w of matching degree."""
    nc = len(colors)
    report = _new_report("theorem2", colors, bound)
    for gamma in _classes_upto(nc, bound):
        words = _words_of_degree(gamma)
        products = {
            w: nsym.rho(LinComb.basis(w), limit=bound) for w in words
        }
        for a in enumeration.forests_of_class(gamma, limit=bound):
            expansion = qsym.rho_t(a, nc, limit=bound)
            for w in words:
                lhs = qsym.pair(expansion, LinComb.basis(w))
                rhs = products[w].coeff(a)
                _check_scalar(
                    report,
                    f"A={format_forest(a, colors)} "
                    f"word={nsym.format_word(w)}",
                    lhs,
                    rhs,
                )
    return report


def _suite_js_split(colors, bound, weights) -> dict:
    """nsym_comul(js_n) = sum over i+j=n of js_i (x) js_j."""
    nc = len(colors)
    ws = weights if weights is not None else (1,) * nc
    report = _new_report("js-split", colors, bound)
    for n in range(bound + 1):
        lhs = nsym.nsym_comul(nsym.js(n, ws, limit=bound))
        rhs = LinComb()
        for i in range(n + 1):
            rhs = rhs + tensor(
                nsym.js(i, ws, limit=bound), nsym.js(n - i, ws, limit=bound)
            )
        _check(report, f"n={n} weights={ws}", lhs, rhs, _fmt_word_pair)
    return report


def _suite_hall_oracle(colors, bound, weights) -> dict:
    """Every product delta_A * delta_B agrees with the brute-force route:
    enumerate all forests of the summed class and count cut pairs."""
    nc = len(colors)
    report = _new_report("hall-oracle", colors, bound)
    universe = _forests_upto(nc, bound)
    fmt = _fmt_forest(colors)
    for a in universe:
        for b in universe:
            if a.size + b.size > bound:
                continue
            lhs = hall.hall_mul(hall.delta(a), hall.delta(b))
            gamma = add_classes(k0_class(a, nc), k0_class(b, nc))
            rhs = LinComb(
                (m, cuts.count_cut_pairs(m, a, b))
                for m in enumeration.forests_of_class(gamma, limit=bound)
            )
            _check(
                report,
                f"A={format_forest(a, colors)} B={format_forest(b, colors)}",
                lhs,
                rhs,
                fmt,
            )
    return report


def _suite_counts(colors, bound, weights) -> dict:
    """The orderly generator and the Euler-transform counter agree."""
    nc = len(colors)
    report = _new_report("counts", colors, bound)
    for alpha in _classes_upto(nc, bound):
        generated = len(enumeration.forests_of_class(alpha, limit=bound))
        counted = enumeration.count_forests_of_class(alpha, limit=bound)
        _check_scalar(
            report, f"alpha={format_class(alpha)}", generated, counted
        )
    return report


def _suite_hopf_axioms(colors, bound, weights) -> dict:
    """Associativity, coassociativity, co-commutativity, counit laws,
    bialgebra compatibility, and the antipode identity, on the delta basis."""
    nc = len(colors)
    report = _new_report("hopf-axioms", colors, bound)
    universe = _forests_upto(nc, bound)
    fmt = _fmt_forest(colors)
    fmt_pair = _fmt_forest_pair(colors)
    fmt_triple = _fmt_forest_triple(colors)
    empty = LinComb.basis(Forest())

    for a in universe:
        da = hall.delta(a)
        name = format_forest(a, colors)
        comul = hall.hall_comul(da)

        # unit laws
        _check(report, f"unit-left A={name}", hall.hall_mul(empty, da), da, fmt)
        _check(
            report, f"unit-right A={name}", hall.hall_mul(da, empty), da, fmt
        )

        # coassociativity
        left_terms, right_terms = [], []
        for (x, y), c in comul.terms.items():
            for (u, v), d in hall.hall_comul(hall.delta(x)).terms.items():
                left_terms.append(((u, v, y), c * d))
            for (u, v), d in hall.hall_comul(hall.delta(y)).terms.items():
                right_terms.append(((x, u, v), c * d))
        _check(
            report,
            f"coassoc A={name}",
            LinComb(left_terms),
            LinComb(right_terms),
            fmt_triple,
        )

        # co-commutativity
        flipped = LinComb(((y, x), c) for (x, y), c in comul.terms.items())
        _check(report, f"cocomm A={name}", comul, flipped, fmt_pair)

        # counit laws
        left_counit = LinComb(
            (y, c * hall.counit(hall.delta(x)))
            for (x, y), c in comul.terms.items()
        )
        right_counit = LinComb(
            (x, c * hall.counit(hall.delta(y)))
            for (x, y), c in comul.terms.items()
        )
        _check(report, f"counit-left A={name}", left_counit, da, fmt)
        _check(report, f"counit-right A={name}", right_counit, da, fmt)

        # antipode: m(S (x) id)Delta = unit . counit = m(id (x) S)Delta
        eps_side = hall.counit(da) * empty
        s_left = LinComb()
        s_right = LinComb()
        for (x, y), c in comul.terms.items():
            s_left = s_left + c * hall.hall_mul(
                hall.antipode(hall.delta(x), limit=bound), hall.delta(y)
            )
            s_right = s_right + c * hall.hall_mul(
                hall.delta(x), hall.antipode(hall.delta(y), limit=bound)
            )
        _check(report, f"antipode-left A={name}", s_left, eps_side, fmt)
        _check(report, f"antipode-right A={name}", s_right, eps_side, fmt)

    for a in universe:
        for b in universe:
            if a.size + b.size > bound:
                continue
            da, db = hall.delta(a), hall.delta(b)
            pair_name = (
                f"A={format_forest(a, colors)} B={format_forest(b, colors)}"
            )

            # bialgebra compatibility
            lhs = hall.hall_comul(hall.hall_mul(da, db))
            rhs_terms = []
            for (x, y), c in hall.hall_comul(da).terms.items():
                for (u, v), d in hall.hall_comul(db).terms.items():
                    prod_l = hall.hall_mul(hall.delta(x), hall.delta(u))
                    prod_r = hall.hall_mul(hall.delta(y), hall.delta(v))
                    scale = c * d
                    for kl, cl in prod_l.terms.items():
                        for kr, cr in prod_r.terms.items():
                            rhs_terms.append(((kl, kr), scale * cl * cr))
            _check(
                report, f"compat {pair_name}", lhs, LinComb(rhs_terms), fmt_pair
            )

            for c3 in universe:
                if a.size + b.size + c3.size > bound:
                    continue
                dc = hall.delta(c3)
                _check(
                    report,
                    f"assoc {pair_name} C={format_forest(c3, colors)}",
                    hall.hall_mul(hall.hall_mul(da, db), dc),
                    hall.hall_mul(da, hall.hall_mul(db, dc)),
                    fmt,
                )
    return report


def _suite_dual_pair(colors, bound, weights) -> dict:
    """The pairing is a duality: <ab, v> = <a (x) b, comul v> and
    <deconcat a, v (x) w> = <a, vw>."""
    nc = len(colors)
    report = _new_report("dual-pair", colors, bound)
    comps_by_total = [
        [
            comp
            for gamma in sorted(_classes_of_total(nc, total))
            for comp in _words_of_degree(gamma)
        ]
        for total in range(bound + 1)
    ]

    for ta in range(bound + 1):
        for tb in range(bound + 1 - ta):
            for a in comps_by_total[ta]:
                for b in comps_by_total[tb]:
                    prod = qsym.quasi_shuffle(
                        LinComb.basis(a), LinComb.basis(b)
                    )
                    gamma = add_classes(
                        qsym.composition_degree(a, nc),
                        qsym.composition_degree(b, nc),
                    )
                    adjoint = LinComb(
                        (v, nsym.nsym_comul(LinComb.basis(v)).coeff((a, b)))
                        for v in _words_of_degree(gamma)
                    )
                    _check(
                        report,
                        f"mul-adjoint a={qsym.format_composition(a)} "
                        f"b={qsym.format_composition(b)}",
                        prod,
                        adjoint,
                        qsym.format_composition,
                    )

    for total in range(bound + 1):
        for a in comps_by_total[total]:
            lhs = qsym.deconcat(LinComb.basis(a))
            rhs_terms = []
            for i in range(len(a) + 1):
                v, w = a[:i], a[i:]
                if nsym.nsym_mul(
                    LinComb.basis(v), LinComb.basis(w)
                ) == LinComb.basis(a):
                    rhs_terms.append(((v, w), 1))
            _check(
                report,
                f"comul-adjoint a={qsym.format_composition(a)}",
                lhs,
                LinComb(rhs_terms),
                _fmt_comp_pair,
            )
    return report


def _suite_rhot_hom(colors, bound, weights) -> dict:
    """rho_t is a Hopf algebra map: it takes disjoint union to the
    quasi-shuffle and the cut coproduct to deconcatenation."""
    nc = len(colors)
    report = _new_report("rhot-hom", colors, bound)
    universe = _forests_upto(nc, bound)

    for a in universe:
        for b in universe:
            if a.size + b.size > bound:
                continue
            lhs = qsym.rho_t(hall.ck_mul(a, b), nc, limit=bound)
            rhs = qsym.quasi_shuffle(
                qsym.rho_t(a, nc, limit=bound), qsym.rho_t(b, nc, limit=bound)
            )
            _check(
                report,
                f"mul A={format_forest(a, colors)} "
                f"B={format_forest(b, colors)}",
                lhs,
                rhs,
                qsym.format_composition,
            )

    for a in universe:
        lhs = qsym.deconcat(qsym.rho_t(a, nc, limit=bound))
        rhs = LinComb()
        for pruned, root in hall.ck_comul(a):
            rhs = rhs + tensor(
                qsym.rho_t(pruned, nc, limit=bound),
                qsym.rho_t(root, nc, limit=bound),
            )
        _check(
            report,
            f"comul A={format_forest(a, colors)}",
            lhs,
            rhs,
            _fmt_comp_pair,
        )
    return report


_SUITES = {
    "theorem1": _suite_theorem1,
    "theorem2": _suite_theorem2,
    "js-split": _suite_js_split,
    "hall-oracle": _suite_hall_oracle,
    "counts": _suite_counts,
    "hopf-axioms": _suite_hopf_axioms,
    "dual-pair": _suite_dual_pair,
    "rhot-hom": _suite_rhot_hom,
}

SUITE_NAMES = tuple(_SUITES)


def run_suite(name, colors: ColorTable, bound: int, weights=None) -> dict:
    """Run one named identity suite over the bounded universe."""
    if name not in _SUITES:
        raise ValueError(
            f"unknown suite {name!r}; expected one of {', '.join(SUITE_NAMES)}"
        )
    if bound < 0:
        raise ValueError("bound must be non-negative")
    if weights is not None:
        weights = tuple(weights)
        if len(weights) != len(colors):
            raise ValueError("need one weight per color")
    return _SUITES[name](colors, bound, weights)


def run_all(colors: ColorTable, bound: int, weights=None) -> list[dict]:
    """Run every suite, in registry order."""
    return [run_suite(name, colors, bound, weights) for name in SUITE_NAMES]

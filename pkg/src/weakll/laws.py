"""Registry of law families for ``weakll check-laws``.

A family is a function ``(dims, degree, seed) -> list[LawResult]``. Random
instances come from :func:`generators.rng_for`, keyed by the seed, the family,
the law and its parameters, so a family's output never depends on which other
families ran. Results come back in a fixed order.
"""
from __future__ import annotations

from .exact_linalg import ONE, Matrix, dot, kernel_containment_iff_span
from .exponential import (MonomialSeq, comultiplication_op, contraction_op,
                          counit_op, curry_seq, dereliction, differential_category_suite,
                          kleisli_compose, kleisli_compose_via_comonad, kleisli_to_seq, mu0,
                          mu_op, random_seq, seely_iso, seely_op, seq_to_kleisli, uncurry_seq)
from .exponential_nonunit import (NonUnitSeq, identity_seq, nonunit_comultiplication_op,
                                  nonunit_counit_op, nonunit_kleisli_compose_via_comonad,
                                  nonunit_seely, substitute_compose)
from .generators import random_linmap, random_space, random_vector, rng_for
from .monomials import eval_monomial, polarize, random_monomial
from .operators import BangOp, ColumnOp, KronOp, as_op, identity_op
from .report import check_equal, check_true, skipped
from .spaces import (UNIT, Bang, BangNonUnit, Base, Dual, FilteredTensor, Hom, LinMap, Prod,
                     Tensor, associator, curry, diagonal, double_dual_ev, dual_of_prod,
                     hom_dual_decompose, hom_dual_reconstruct, injection, left_unitor, par_map,
                     par_to_tensor, prod_map, projection, right_unitor, star_autonomy_check,
                     symmetry, tensor_map, transpose, uncurry, vector_to_map)


def _tuples(dims: list, k: int) -> list:
    """Constant tuples plus the cyclic windows of ``dims``; small and deterministic."""
    n = len(dims)
    out = {(d,) * k for d in dims}
    out |= {tuple(dims[(i + j) % n] for j in range(k)) for i in range(n)}
    return sorted(out)


def _params(dims, degree=None, **extra) -> dict:
    p = {"dims": list(dims)}
    if degree is not None:
        p["degree"] = degree
    p.update(extra)
    return p


def _poly_json(m) -> dict:
    return {f"e{u}": {".".join(f"x{i}" for i in ms) or "1": str(c) for ms, c in sorted(poly.items())}
            for u, poly in sorted(m.polynomials().items())}


def _seq_diff(a: MonomialSeq, b: MonomialSeq) -> dict:
    for g in range(min(a.grades().start, b.grades().start), max(a.degree, b.degree) + 1):
        if a[g] != b[g]:
            return {"grade": g, "lhs": _poly_json(a[g]), "rhs": _poly_json(b[g])}
    return {}


def _all_equal(law, params, pairs):
    """``pairs`` yields ``(lhs, rhs, witness)``; reports the first mismatch."""
    for lhs, rhs, witness in pairs:
        if lhs != rhs:
            if isinstance(lhs, MonomialSeq) and isinstance(rhs, MonomialSeq):
                witness = {**witness, **_seq_diff(lhs, rhs)}
            return check_true(law, params, False, witness)
    return check_true(law, params, True)


# ------------------------------------------------------------------ linear

def linalg_family(dims, degree, seed) -> list:
    n, count = 4, 200
    rng = rng_for(seed, "linalg", "kernel_containment_iff_span")
    params = {"ambient_dim": n, "instances": count}
    for t in range(count):
        k = rng.randint(0, 3)
        ls = [random_vector(rng, n) for _ in range(k)]
        if ls and rng.random() < 0.5:
            cs = random_vector(rng, k)
            l = [sum((c * f[i] for c, f in zip(cs, ls)), 0 * ONE) for i in range(n)]
        else:
            l = random_vector(rng, n)
        a, b = kernel_containment_iff_span(l, ls)
        if a != b:
            return [check_true("kernel_containment_iff_span", params, False,
                               {"l": [str(x) for x in l], "ls": [[str(x) for x in f] for f in ls],
                                "kernel_side": a, "span_side": b})]
    return [check_true("kernel_containment_iff_span", params, True)]


def duality_family(dims, degree, seed) -> list:
    count, max_dim = 20, 16
    params = {"instances": count, "max_dim": max_dim}
    rng = rng_for(seed, "duality", "spaces")
    spaces = [random_space(rng, max_dim) for _ in range(count)]
    out = []
    bad = next((s for s in spaces if double_dual_ev(s).matrix != Matrix.identity(s.dim)), None)
    out.append(check_true("double_dual_identity", params, bad is None, {"space": str(bad)}))
    bad = next((s for s in spaces if not star_autonomy_check(s)), None)
    out.append(check_true("star_autonomy", params, bad is None, {"space": str(bad)}))
    for d in dims:
        s = Base(d)
        f = random_linmap(rng_for(seed, "duality", "transpose", d), s, Base(d + 1))
        out.append(check_equal("transpose_involutive", _params([d, d + 1]),
                               transpose(transpose(f)).retype(s, Base(d + 1)), f))
    return out


def monoidal_family(dims, degree, seed) -> list:
    out = []
    for a, b, c, d in _tuples(dims, 4):
        A, B, C, D = Base(a), Base(b), Base(c), Base(d)
        i = LinMap.identity
        lhs = associator(A, B, Tensor(C, D)) @ associator(Tensor(A, B), C, D)
        rhs = (tensor_map(i(A), associator(B, C, D)) @ associator(A, Tensor(B, C), D)
               @ tensor_map(associator(A, B, C), i(D)))
        out.append(check_equal("pentagon", _params([a, b, c, d]), lhs, rhs))
    for a, b, c in _tuples(dims, 3):
        A, B, C = Base(a), Base(b), Base(c)
        i = LinMap.identity
        lhs = associator(B, C, A) @ symmetry(A, Tensor(B, C)) @ associator(A, B, C)
        rhs = tensor_map(i(B), symmetry(A, C)) @ associator(B, A, C) @ tensor_map(symmetry(A, B), i(C))
        out.append(check_equal("hexagon", _params([a, b, c]), lhs, rhs))
    for a, b in _tuples(dims, 2):
        A, B = Base(a), Base(b)
        i = LinMap.identity
        p = _params([a, b])
        out.append(check_equal("symmetry_involutive", p, symmetry(B, A) @ symmetry(A, B), i(Tensor(A, B))))
        out.append(check_equal("triangle", p, tensor_map(i(A), left_unitor(B)) @ associator(A, UNIT, B),
                               tensor_map(right_unitor(A), i(B))))
        rng = rng_for(seed, "monoidal", "functorial", a, b)
        f1, f2 = random_linmap(rng, A, B), random_linmap(rng, B, A)
        g1, g2 = random_linmap(rng, B, A), random_linmap(rng, A, A)
        out.append(check_equal("tensor_functorial", p, tensor_map(f2 @ f1, g2 @ g1),
                               tensor_map(f2, g2) @ tensor_map(f1, g1)))
        f, g = random_linmap(rng, A, B), random_linmap(rng, B, A)
        out.append(check_equal("par_to_tensor_natural", p, par_to_tensor(B, A) @ par_map(f, g),
                               tensor_map(f, g) @ par_to_tensor(A, B)))
        restricts = (projection(Dual(A), Dual(B), 0, "coprod") @ dual_of_prod(A, B)
                     == transpose(injection(A, B, 0, "prod"))
                     and projection(Dual(A), Dual(B), 1, "coprod") @ dual_of_prod(A, B)
                     == transpose(injection(A, B, 1, "prod")))
        out.append(check_true("dual_of_prod_restricts", p, restricts))
        for c in dims:
            h = random_linmap(rng_for(seed, "monoidal", "curry", a, b, c), Tensor(A, B), Base(c))
            q = _params([a, b, c])
            out.append(check_equal("curry_roundtrip", q, uncurry(curry(h)), h))
            k = random_linmap(rng_for(seed, "monoidal", "uncurry", a, b, c), A, Hom(B, Base(c)))
            out.append(check_equal("uncurry_roundtrip", q, curry(uncurry(k)), k))
    return out


def hom_dual_family(dims, degree, seed) -> list:
    out = []
    for a, b in _tuples(dims, 2):
        s, t = Base(a), Base(b)
        h = Hom(s, t)
        rng = rng_for(seed, "hom_dual", a, b)
        count = 5
        params = _params([a, b], instances=count)

        def cases():
            for _ in range(count):
                phi = random_vector(rng, h.dim)
                pairs = hom_dual_decompose(phi, s, t)
                if len(pairs) > min(a, b):
                    yield len(pairs), min(a, b), {"terms": len(pairs)}
                for k in range(h.dim):
                    e = [ONE if j == k else 0 * ONE for j in range(h.dim)]
                    yield (hom_dual_reconstruct(pairs, vector_to_map(h, e)), dot(phi, e),
                           {"basis_map": h.label_str(k), "phi": [str(x) for x in phi]})
        out.append(_all_equal("hom_dual_reconstruction", params, cases()))
    return out


def polarization_family(dims, degree, seed) -> list:
    out = []
    top = min(degree, 4)
    for d in dims:
        s = Base(d)
        rng = rng_for(seed, "polarization", d, degree)
        count = 10
        params = _params([d], top, instances=count)

        def cases():
            for t in range(count):
                m = random_monomial(rng, s, UNIT, t % (top + 1))
                back = polarize(lambda x: eval_monomial(m, x), m.degree, s, UNIT, rng=rng)
                yield back, m, {"degree": m.degree, "monomial": repr(m)}
        out.append(_all_equal("polarize_eval_identity", params, cases()))
    return out


# ------------------------------------------------------------- exponential

_GRADE_ONE = "needs truncation degree >= 1"


def comonad_family(dims, degree, seed) -> list:
    names = ["counit_left", "counit_right", "coassociative"]
    out = []
    for d in dims:
        p = _params([d], degree)
        if degree < 1:
            out.extend(skipped(n, p, _GRADE_ONE) for n in names)
            continue
        s = Base(d)
        b = Bang(s, degree)
        delta = comultiplication_op(s, degree)
        out.append(check_equal("counit_left", p, counit_op(b, degree) @ delta, identity_op(b)))
        out.append(check_equal("counit_right", p, BangOp(counit_op(s, degree), degree) @ delta,
                               identity_op(b)))
        out.append(check_equal("coassociative", p, BangOp(delta, degree) @ delta,
                               comultiplication_op(b, degree) @ delta))
    return out


def kleisli_family(dims, degree, seed) -> list:
    out = []
    count = 3
    for d in dims:
        s = Base(d)
        p = _params([d], degree, instances=count)
        rng = rng_for(seed, "kleisli", d, degree)
        fs = [random_seq(rng, s, s, degree) for _ in range(count)]
        gs = [random_seq(rng, s, s, degree) for _ in range(count)]
        hs = [random_seq(rng, s, s, degree) for _ in range(count)]
        out.append(_all_equal("seq_roundtrip", p, (
            (kleisli_to_seq(seq_to_kleisli(f)), f, {"seq": repr(f)}) for f in fs)))
        out.append(_all_equal("composition_via_comonad", p, (
            (kleisli_compose(g, f), kleisli_compose_via_comonad(g, f), {"f": repr(f), "g": repr(g)})
            for f, g in zip(fs, gs))))
        if degree < 1:
            out.append(skipped("identity_right", p, _GRADE_ONE))
            out.append(skipped("identity_left", p, _GRADE_ONE))
        else:
            ident = dereliction(s, degree)
            out.append(_all_equal("identity_right", p, (
                (kleisli_compose(g, ident), g, {"g": repr(g)}) for g in gs)))
            out.append(_all_equal("identity_left", p, (
                (kleisli_compose(ident, f), f, {"f": repr(f)}) for f in fs)))
        out.append(_all_equal("associative", p, (
            (kleisli_compose(h, kleisli_compose(g, f)), kleisli_compose(kleisli_compose(h, g), f),
             {"f": repr(f), "g": repr(g), "h": repr(h)})
            for f, g, h in zip(fs, gs, hs))))
    return out


def seely_family(dims, degree, seed) -> list:
    out = []
    for a, b in _tuples(dims, 2):
        s, t = Base(a), Base(b)
        p = _params([a, b], degree)
        out.append(check_true("seely_invertible", p, seely_iso(s, t, degree).is_invertible()))
        rng = rng_for(seed, "seely", a, b, degree)
        f, g = random_linmap(rng, s, t), random_linmap(rng, t, s)
        ft_dom = FilteredTensor(Bang(s, degree), Bang(t, degree), degree)
        ft_cod = FilteredTensor(Bang(t, degree), Bang(s, degree), degree)
        lhs = seely_op(t, s, degree) @ BangOp(prod_map(f, g), degree)
        rhs = KronOp(BangOp(f, degree), BangOp(g, degree), ft_dom, ft_cod) @ seely_op(s, t, degree)
        out.append(check_equal("seely_natural", p, lhs, rhs))
    for d in dims:
        s = Base(d)
        p = _params([d], degree)
        out.append(check_equal("contraction_via_seely", p, contraction_op(s, degree),
                               seely_op(s, s, degree) @ BangOp(diagonal(s), degree)))
    return out


def cartesian_closed_family(dims, degree, seed) -> list:
    out = []
    count = 3
    for a, b in _tuples(dims, 2):
        dom = Prod(Base(a), Base(b))
        p = _params([a, b], degree, instances=count)
        rng = rng_for(seed, "cartesian_closed", a, b, degree)
        fs = [random_seq(rng, dom, UNIT, degree) for _ in range(count)]
        out.append(_all_equal("curry_seq_roundtrip", p, (
            (uncurry_seq(curry_seq(f)), f, {"f": repr(f)}) for f in fs)))
    return out


def monoidal_exponential_family(dims, degree, seed) -> list:
    out = []
    for a, b in _tuples(dims, 2):
        s, t = Base(a), Base(b)
        p = _params([a, b], degree)
        bs, bt = Bang(s, degree), Bang(t, degree)
        mu = mu_op(s, t, degree)
        rng = rng_for(seed, "monoidal_exponential", a, b, degree)
        f, g = random_linmap(rng, s, t), random_linmap(rng, t, s)
        out.append(check_equal("mu_natural", p, mu_op(t, s, degree) @ KronOp(BangOp(f, degree), BangOp(g, degree)),
                               BangOp(tensor_map(f, g), degree) @ mu))
        out.append(check_equal("mu_symmetric", p, BangOp(symmetry(s, t), degree) @ mu,
                               mu_op(t, s, degree) @ as_op(symmetry(bs, bt))))
        if degree < 1:
            out.extend(skipped(n, p, _GRADE_ONE) for n in ["mu_counit", "mu_comultiplication"])
            continue
        out.append(check_equal("mu_counit", p, counit_op(Tensor(s, t), degree) @ mu,
                               KronOp(counit_op(s, degree), counit_op(t, degree))))
        lhs = comultiplication_op(Tensor(s, t), degree) @ mu
        rhs = (BangOp(mu, degree) @ mu_op(bs, bt, degree)
               @ KronOp(comultiplication_op(s, degree), comultiplication_op(t, degree)))
        out.append(check_equal("mu_comultiplication", p, lhs, rhs))
    for a, b, c in _tuples(dims, 3):
        s, t, u = Base(a), Base(b), Base(c)
        p = _params([a, b, c], degree)
        bs, bt, bu = (Bang(x, degree) for x in (s, t, u))
        lhs = (BangOp(associator(s, t, u), degree) @ mu_op(Tensor(s, t), u, degree)
               @ KronOp(mu_op(s, t, degree), identity_op(bu)))
        rhs = (mu_op(s, Tensor(t, u), degree) @ KronOp(identity_op(bs), mu_op(t, u, degree))
               @ as_op(associator(bs, bt, bu)))
        out.append(check_equal("mu_associative", p, lhs, rhs))
    p = _params([1], degree)
    m0 = as_op(mu0(degree))
    for d in dims:
        s = Base(d)
        bs = Bang(s, degree)
        lhs = mu_op(UNIT, s, degree) @ KronOp(m0, identity_op(bs))
        unit_in = ColumnOp(s, Tensor(UNIT, s), lambda j: {j: ONE})
        rhs = BangOp(unit_in, degree) @ as_op(left_unitor(bs))
        out.append(check_equal("mu0_unit_left", _params([d], degree), lhs, rhs))
    if degree < 1:
        out.append(skipped("mu0_counit", p, _GRADE_ONE))
        out.append(skipped("mu0_comultiplication", p, _GRADE_ONE))
    else:
        out.append(check_equal("mu0_counit", p, counit_op(UNIT, degree) @ m0, identity_op(UNIT)))
        out.append(check_equal("mu0_comultiplication", p, comultiplication_op(UNIT, degree) @ m0,
                               BangOp(m0, degree) @ m0))
    return out


def differential_family(dims, degree, seed) -> list:
    out = []
    for a, b in _tuples(dims, 2):
        out.extend(differential_category_suite(Base(a), Base(b), degree))
    return out


def nonunit_family(dims, degree, seed) -> list:
    names = ["counit_left", "counit_right", "coassociative", "substitution_via_comonad",
             "identity_left", "identity_right", "associative", "seely_invertible"]
    out = []
    count = 3
    for d in dims:
        s = Base(d)
        p = _params([d], degree)
        if degree < 1:
            out.extend(skipped(n, p, "the non-unit exponential is zero below degree 1") for n in names)
            continue
        b = BangNonUnit(s, degree)
        delta = nonunit_comultiplication_op(s, degree)
        out.append(check_equal("counit_left", p, nonunit_counit_op(b, degree) @ delta, identity_op(b)))
        out.append(check_equal("counit_right", p,
                               BangOp(nonunit_counit_op(s, degree), degree, nonunit=True) @ delta,
                               identity_op(b)))
        out.append(check_equal("coassociative", p, BangOp(delta, degree, nonunit=True) @ delta,
                               nonunit_comultiplication_op(b, degree) @ delta))
        rng = rng_for(seed, "nonunit", d, degree)
        pi = dict(p, instances=count)
        fs = [random_seq(rng, s, s, degree, NonUnitSeq) for _ in range(count)]
        gs = [random_seq(rng, s, s, degree, NonUnitSeq) for _ in range(count)]
        hs = [random_seq(rng, s, s, degree, NonUnitSeq) for _ in range(count)]
        out.append(_all_equal("substitution_via_comonad", pi, (
            (substitute_compose(g, f), nonunit_kleisli_compose_via_comonad(g, f),
             {"f": repr(f), "g": repr(g)}) for f, g in zip(fs, gs))))
        ident = identity_seq(s, degree)
        out.append(_all_equal("identity_left", pi, (
            (substitute_compose(ident, f), f, {"f": repr(f)}) for f in fs)))
        out.append(_all_equal("identity_right", pi, (
            (substitute_compose(g, ident), g, {"g": repr(g)}) for g in gs)))
        out.append(_all_equal("associative", pi, (
            (substitute_compose(h, substitute_compose(g, f)), substitute_compose(substitute_compose(h, g), f),
             {"f": repr(f), "g": repr(g), "h": repr(h)}) for f, g, h in zip(fs, gs, hs))))
        out.append(check_true("seely_invertible", p, nonunit_seely(s, s, degree).is_invertible()))
    return out


FAMILIES = {
    "linalg": linalg_family,
    "duality": duality_family,
    "monoidal": monoidal_family,
    "hom_dual": hom_dual_family,
    "polarization": polarization_family,
    "comonad": comonad_family,
    "kleisli": kleisli_family,
    "seely": seely_family,
    "cartesian_closed": cartesian_closed_family,
    "monoidal_exponential": monoidal_exponential_family,
    "differential": differential_family,
    "nonunit": nonunit_family,
}


def run_families(names, dims, degree, seed) -> list:
    """Results of the named families, in registry order."""
    results: list = []
    for name, fn in FAMILIES.items():
        if name in names:
            for r in fn(list(dims), degree, seed):
                r.parameters = {"family": name, **r.parameters}
                results.append(r)
    return results

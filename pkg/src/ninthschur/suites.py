"""Verification suites shared by the command line and the acceptance tests.

Every suite returns a list of :class:`VerdictReport`.  Exact checks report
``proved-equal``/``unequal``; numeric checks report ``within-tolerance`` or
``exceeds-tolerance`` with the tolerance recorded in the witness.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable


from .config import Config
from .exact.fields import PrimeFieldElem
from .exact.identities import (bazin_check, cauchy_binet_check, desnanot_jacobi_check, gauss_minor_residuals,
                               identity_verdict, jacobi_complement_check, plucker_check, stacked)
from .exact.matrix import Matrix, MatrixError, minor
from .ninth import (NinthContext, build_U, build_V, s_of_unitriangular, s_route, schur_poly, tableau_sum,
                    vandermonde_specialize)
from .relations import (RelationInstance, VerdictReport, dj_relation, giambelli_quadratic, kleber_classical,
                        partitions_in_box, plucker_first_step, plucker_quadratic, rectangle_general,
                        rectangle_relation, skew_shapes_in, verify, zeta_corollary_suite)
from .shapes import Partition, as_skew, corner_decomposition, frobenius

# Helpers -----------------------------------------------------------------------


def _exact(iid: str, theorem: str, ok: bool, detail: str = "", seconds: float = 0.0) -> VerdictReport:
    return VerdictReport(iid, theorem, "exact", "proved-equal" if ok else "unequal", 0, "0" if ok else detail,
                         None if ok else {"detail": detail}, seconds)


def _numeric(iid: str, theorem: str, residual, tol: float, seconds: float = 0.0) -> VerdictReport:
    res = float(residual)
    ok = res < tol
    return VerdictReport(iid, theorem, "numeric", "within-tolerance" if ok else "exceeds-tolerance", 0,
                         f"{res:.3e}", {"tolerance": f"{tol:.0e}"}, seconds)


def _timed(fn: Callable):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def _verify_job(args) -> VerdictReport:
    rel, mode, seed, trials, prime = args
    return verify(rel, mode=mode, seed=seed, trials=trials, prime=prime)


def verify_all(rels: list[RelationInstance], cfg: Config, mode: str = "exact") -> list[VerdictReport]:
    jobs = [(rel, mode, cfg.seed, cfg.trials, cfg.prime) for rel in rels]
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(cfg.jobs) as ex:
            return list(ex.map(_verify_job, jobs, chunksize=16))
    ctx = NinthContext(slack=cfg.slack)
    return [verify(rel, mode=mode, ctx=ctx, seed=cfg.seed, trials=cfg.trials, prime=cfg.prime) for rel in rels]


def _shapes(box, max_cells: int):
    return [sh for sh in skew_shapes_in(box) if sh.size() <= max_cells]


# Generic minors ----------------------------------------------------------------

def _rand_matrix(rng: random.Random, n: int, m: int, mode: str, prime: int) -> Matrix:
    if mode == "modular":
        return Matrix([[PrimeFieldElem(rng.randrange(prime), prime) for _ in range(m)] for _ in range(n)])
    return Matrix([[Fraction(rng.randint(-9, 9)) for _ in range(m)] for _ in range(n)])


def _all_zero(vals) -> bool:
    if not isinstance(vals, list):
        vals = [vals]
    return all(v == 0 for v in vals)


def _minor_instance(name: str, rng: random.Random, mode: str, prime: int):
    """One random instance; returns the residual(s) or None when the draw is degenerate."""
    if name == "cauchy-binet":
        N = rng.randint(2, 4)
        r = rng.randint(1, N)
        I = sorted(rng.sample(range(1, N + 1), r))
        J = sorted(rng.sample(range(1, N + 1), r))
        return cauchy_binet_check(_rand_matrix(rng, N, N, mode, prime), _rand_matrix(rng, N, N, mode, prime), I, J)
    if name == "jacobi-complement":
        N = rng.randint(2, 4)
        r = rng.randint(1, N - 1)
        I = sorted(rng.sample(range(1, N + 1), r))
        J = sorted(rng.sample(range(1, N + 1), r))
        return jacobi_complement_check(_rand_matrix(rng, N, N, mode, prime), I, J)
    if name == "desnanot-jacobi":
        n = rng.randint(3, 5)
        return desnanot_jacobi_check(_rand_matrix(rng, n, n, mode, prime))
    if name == "bazin":
        n = rng.randint(2, 4)
        m = rng.randint(1, n)
        cols = list(range(1, n + m + 1))
        rng.shuffle(cols)
        A, B, C = cols[:m], cols[m:2 * m], sorted(cols[2 * m:])
        return bazin_check(_rand_matrix(rng, n, n + m, mode, prime), A, B, C)
    if name == "plucker":
        n = rng.randint(2, 4)
        Z = stacked(_rand_matrix(rng, n, n, mode, prime), _rand_matrix(rng, n, n, mode, prime))
        ell = rng.randint(1, n)
        return plucker_check(Z, sorted(rng.sample(range(1, n + 1), ell)))
    if name == "gauss":
        N = rng.randint(2, 4)
        X = _rand_matrix(rng, N, N, mode, prime)
        if any(minor(X, range(1, k + 1), range(1, k + 1)) == 0 for k in range(1, N + 1)):
            return None
        return gauss_minor_residuals(X)
    raise ValueError(f"unknown identity {name!r}")


MINOR_IDENTITIES = ("bazin", "cauchy-binet", "desnanot-jacobi", "gauss", "jacobi-complement", "plucker")


def minors_suite(cfg: Config, mode: str = "exact", count: int = 50) -> list[VerdictReport]:
    out = []
    for name in MINOR_IDENTITIES:
        for i in range(count):
            rng = random.Random(f"{cfg.seed}:minors:{name}:{i}")
            t0 = time.perf_counter()
            res = None
            for _ in range(20):
                try:
                    res = _minor_instance(name, rng, mode, cfg.prime)
                except (MatrixError, ZeroDivisionError):
                    res = None
                if res is not None:
                    break
            iid = f"minors.{name}[i={i:03d}]"
            if res is None:
                out.append(VerdictReport(iid, name, mode, "unequal", 0, "degenerate", {"detail": "no draw"}))
                continue
            ok = _all_zero(res)
            result = ("proved-equal" if mode == "exact" else "equal-with-confidence") if ok else "unequal"
            out.append(VerdictReport(iid, name, mode, result, 0, "0" if ok else "nonzero", None,
                                     time.perf_counter() - t0, 1 if mode == "modular" else 0,
                                     cfg.seed if mode == "modular" else None,
                                     8 / cfg.prime if mode == "modular" else 0.0))
    return out


# Ninth variations ------------------------------------------------------------------

ROUTES = ("complement", "jt", "dualjt", "giambelli")


def ninth_routes_suite(cfg: Config, mode: str = "exact", box=(3, 3, 3)) -> list[VerdictReport]:
    """S_minor = det JT = det dual JT = (−1)^q det Giambelli (and the complement form) at minimal r."""
    ctx = NinthContext(slack=cfg.slack)
    out = []
    for sh in _shapes(box, cfg.max_cells):
        r = max(1, len(sh.outer))
        t0 = time.perf_counter()
        base = s_route(ctx, sh, r, "minor")
        bad = []
        for route in ROUTES:
            v = identity_verdict(base, s_route(ctx, sh, r, route), mode, seed=cfg.seed, trials=cfg.trials,
                                 prime=cfg.prime)
            if not v.ok:
                bad.append(route)
        result = ("proved-equal" if mode == "exact" else "equal-with-confidence") if not bad else "unequal"
        out.append(VerdictReport(f"ninth.routes[shape={sh}]", "routes", mode, result, r,
                                 "0" if not bad else ",".join(bad), None, time.perf_counter() - t0))
    return out


def ninth_tableau_suite(cfg: Config, box=(3, 3, 3), Ms=(0, 1, 2, 3), sets: int = 10) -> list[VerdictReport]:
    """tableau_sum = S(U_M) and the conjugate form S(V_M), 10 random rational parameter sets."""
    shapes = _shapes(box, cfg.max_cells)
    N = len(box) + 1 + Partition(box).part(1) + 1
    bad: dict = {str(sh): [] for sh in shapes}
    times: dict = {str(sh): 0.0 for sh in shapes}
    for s in range(sets):
        rng = random.Random(f"{cfg.seed}:tableau:{s}")
        u: dict = {}
        get = lambda t, k: u.setdefault((t, k), Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        for t in range(1, N):
            for k in range(1, max(Ms) + 1):
                get(t, k)
        for M in Ms:
            U, V = build_U(get, M, N), build_V(get, M, N)
            for sh in shapes:
                t0 = time.perf_counter()
                ell = len(sh.outer)
                for r in (max(1, ell), max(1, ell) + 1):
                    if tableau_sum(sh, r, get, M) != s_of_unitriangular(U, sh, r):
                        bad[str(sh)].append(("U", s, M, r))
                    if tableau_sum(sh, r, get, M, "V", N=N) != s_of_unitriangular(V, sh, r):
                        bad[str(sh)].append(("V", s, M, r))
                times[str(sh)] += time.perf_counter() - t0
    return [_exact(f"ninth.tableau[shape={k}]", "tableau", not v, repr(v[:3]), times[k]) for k, v in bad.items()]


def ninth_vandermonde_suite(cfg: Config, box=(3, 3, 2), n_max: int = 4) -> list[VerdictReport]:
    out = []
    for sh in _shapes(box, cfg.max_cells):
        for n in range(1, n_max + 1):
            (ok, secs) = _timed(lambda: vandermonde_specialize(sh, n) == schur_poly(sh, n))
            out.append(_exact(f"ninth.vandermonde[n={n};shape={sh}]", "vandermonde", ok, "differs", secs))
    return out


def ninth_suite(cfg: Config, mode: str = "exact") -> list[VerdictReport]:
    return ninth_routes_suite(cfg, mode) + ninth_tableau_suite(cfg) + ninth_vandermonde_suite(cfg)


# Quadratic relations -----------------------------------------------------------

PAPER_DJ_SHAPE = ((5, 4, 4, 3), (3, 1, 1))


def dj_relations(cfg: Config, box=(3, 3, 3), rect_max: int = 3) -> list[RelationInstance]:
    rels = []
    for sh in _shapes(box, cfg.max_cells):
        if len(sh.outer) >= 2:
            rels.append(dj_relation(sh, "H"))
        if sh.outer.part(1) >= 2:
            rels.append(dj_relation(sh, "E"))
    rels += [rectangle_relation(p, q) for p in range(1, rect_max + 1) for q in range(1, rect_max + 1)]
    rels += [dj_relation(as_skew(PAPER_DJ_SHAPE), v) for v in ("H", "E")]
    return rels


def giambelli_relations(cfg: Config, box=(4, 4, 4, 4)) -> list[RelationInstance]:
    rels = []
    for sh in _shapes(box, cfg.max_cells):
        p, q = len(frobenius(sh.outer).alpha), len(frobenius(sh.inner).alpha)
        if q == 0 and p >= 2:
            rels.append(giambelli_quadratic(sh, "nonskew"))
        if q >= 1:
            rels.append(giambelli_quadratic(sh, "skew"))
    return rels


def plucker_relations(cfg: Config, box=(5, 5, 5, 5, 5), max_corners: int = 3) -> list[RelationInstance]:
    rels = []
    B = Partition(box)
    for lam in partitions_in_box(len(B), B.part(1)):
        if not lam or not B.contains(lam) or sum(lam) > cfg.max_cells:
            continue
        n = corner_decomposition(lam).n
        if n > max_corners:
            continue
        for d in range(1, n + 1):
            rels += [plucker_quadratic(lam, d, "row"), plucker_quadratic(lam, d, "column")]
    return rels


KLEBER_SHAPES = ((1,), (2,), (1, 1), (2, 1), (2, 2), (3, 1), (3, 2, 1), (3, 2, 2, 1), (4, 2, 1))


def plucker_extras(cfg: Config, n_max: int = 4) -> list[VerdictReport]:
    out = []
    for lam in KLEBER_SHAPES:
        if sum(lam) > cfg.max_cells:
            continue
        for d in range(1, corner_decomposition(lam).n + 1):
            for n in range(1, n_max + 1):
                out.append(kleber_classical(lam, d, n))
            res, secs = _timed(lambda: plucker_first_step(lam, d))
            lam_s = "(" + ",".join(map(str, lam)) + ")"
            out.append(_exact(f"plucker.first-step[d={d};lam={lam_s}]", "plucker-first-step", _all_zero(res),
                              "nonzero", secs))
    return out


def rectangle_relations(cfg: Config, pq_max: int = 3, include_degenerate: bool = True) -> list[RelationInstance]:
    rels = []
    for p in range(1, pq_max + 1):
        for q in range(1, pq_max + 1):
            for a in range(0, q + 1):
                for b in range(0, p + 2 - a):
                    if a == b == 0 and not include_degenerate:
                        continue
                    rels.append(rectangle_general(p, q, a, b))
    return rels


def zeta_suite(cfg: Config) -> list[VerdictReport]:
    return zeta_corollary_suite(M=6) + zeta_corollary_suite(M=3, values=(2, 1, 3))


# Multiple zeta values ------------------------------------------------------------

def mzv_trunc_suite(cfg: Config) -> list[VerdictReport]:
    from .mzv.trunc import DiagonalIndex, schur_zeta_trunc, zeta_trunc, zeta_trunc_brute
    from .mzv.words import stuffle, z

    out = []
    rng = random.Random(f"{cfg.seed}:mzv-trunc")
    for i in range(50):
        d = rng.randint(1, 3)
        k = tuple(rng.randint(1, 4) for _ in range(d))
        M = rng.randint(0, 30)
        star = bool(rng.getrandbits(1))
        ok, secs = _timed(lambda: zeta_trunc(k, M, star) == zeta_trunc_brute(k, M, star))
        out.append(_exact(f"mzv.dp-brute[i={i:03d}]", "dp-brute", ok, f"k={k} M={M}", secs))
    for i in range(20):
        k = tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 2)))
        l = tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 2)))
        M = rng.randint(0, 50)

        def stuffle_ok():
            lhs = zeta_trunc(k, M) * zeta_trunc(l, M)
            rhs = sum((c * zeta_trunc(w, M) for w, c in stuffle(z(*k), z(*l)).terms.items()), Fraction(0))
            return lhs == rhs
        ok, secs = _timed(stuffle_ok)
        out.append(_exact(f"mzv.stuffle-finite[i={i:03d}]", "stuffle-finite", ok, f"k={k} l={l} M={M}", secs))
    idx = DiagonalIndex.three_zone(1, 2, 3)
    for sh in skew_shapes_in((3, 3)):
        for M in (0, 1, 2, 4, 20):
            def routes_ok():
                v = schur_zeta_trunc(sh, idx, M, "ssyt")
                return all(schur_zeta_trunc(sh, idx, M, r) == v for r in ("strip", "jt", "dual_jt"))
            ok, secs = _timed(routes_ok)
            out.append(_exact(f"mzv.schur-routes[M={M:02d};shape={sh}]", "schur-routes", ok, "differs", secs))
    return out


def mzv_words_suite(cfg: Config) -> list[VerdictReport]:
    from .mzv.numeric import precision
    from .mzv.regularize import asymptotic_check, regularize
    from .mzv.values import explicit_121
    from .mzv.words import lemma_inverse_residual, lemma_shuffle_residual

    out = []
    for a in range(7):
        for c in range(7 - a):
            for name, fn in (("lemma-shuffle", lemma_shuffle_residual), ("lemma-inverse", lemma_inverse_residual)):
                res, secs = _timed(lambda: fn(a, c))
                out.append(_exact(f"mzv.{name}[a={a};c={c}]", name, res.is_zero(), repr(res), secs))
    with precision(cfg.digits):
        for side in ("stuffle", "shuffle"):
            for a in range(5):
                for c in range(5):
                    k = (1,) * a + (2,) + (1,) * c
                    res, secs = _timed(lambda: abs(regularize(k, side).evaluate(0) - explicit_121(a, c, side)))
                    out.append(_numeric(f"mzv.explicit-121[a={a};c={c};side={side}]", "explicit-121", res, 1e-8,
                                        secs))
    for k in ((1,), (1, 2), (1, 1, 2)):
        r, secs = _timed(lambda: asymptotic_check(k))
        out.append(VerdictReport(f"mzv.asymptotic[k={','.join(map(str, k))}]", "asymptotic", "numeric",
                                 "within-tolerance" if r.decreasing else "exceeds-tolerance", 0,
                                 f"{r.residuals[-1]:.3e}",
                                 {"residuals": [f"{x:.3e}" for x in r.residuals], "M": r.Ms,
                                  "envelope": f"{float(r.C):.3e}*log(M)^{r.J}/M", "criterion": "strictly decreasing"},
                                 secs))
    return out


def mzv_numeric_suite(cfg: Config) -> list[VerdictReport]:
    from .mzv.numeric import ZetaTable, a_inverse_taylor, c_coefficients, c_partition_sum, mzv, mzv_dp_tail, precision
    from .mzv.values import checkerboard_dp, zagier_232

    out = []
    with precision(cfg.digits):
        C = c_coefficients(8)
        tay = a_inverse_taylor(8)
        for s in range(9):
            res = abs(C[s] - (-1) ** s * tay[s])
            if s <= 6:
                res = max(res, abs(C[s] - c_partition_sum(s)))
            out.append(_numeric(f"mzv.C[s={s}]", "C-coefficients", res, 1e-25))
        table = ZetaTable(K=12, digits=cfg.digits)
        for k in range(1, 6):
            (diff, bound), secs = _timed(lambda: table.check_eta(k, cfg.M))
            rep = _numeric(f"mzv.eta-dp[k={k}]", "eta-dp", diff, 100 * bound, secs)
            out.append(rep)
        for a in range(3):
            for c in range(3):
                res = abs(zagier_232(a, c) - mzv((2,) * a + (3,) + (2,) * c))
                out.append(_numeric(f"mzv.zagier[a={a};c={c}]", "zagier", res, 1e-25))
        val, bound = mzv_dp_tail((2, 3), cfg.M)
        out.append(_numeric("mzv.zagier-dp[a=1;c=0]", "zagier-dp", abs(val - float(zagier_232(1, 0))),
                            100 * bound))
        (v, closed, bound), secs = _timed(lambda: checkerboard_dp(0, cfg.M))
        out.append(_numeric("mzv.checkerboard-dp[c=0]", "checkerboard-dp", abs(v - closed), bound, secs))
    return out


def mzv_values_suite(cfg: Config) -> list[VerdictReport]:
    from .mzv.numeric import precision
    from .mzv.values import (checkerboard_values, example_r_a2_2, example_r_a3_2, example_r_a3_3,
                             prop_121_determinant, r332_121_check, r332_232_check, rectangle_value,
                             zagier_232)

    out = []
    with precision(cfg.digits):
        out.append(_numeric("mzv.R33[abc=(2,3,2)]", "R33-closed", r332_232_check(), 1e-10))
        out.append(_numeric("mzv.R33[abc=(1,2,1)]", "R33-closed", r332_121_check(), 1e-10))
        out.append(_numeric("mzv.R33-det[abc=(1,2,1)]", "R33-closed",
                            abs(rectangle_value(0, 3, 3, (1, 2, 1)).value - rectangle_value(0, 3, 3, (1, 2, 1),
                                                                                            "reg").value), 1e-10))
        out.append(_numeric("mzv.R11[abc=(2,3,2)]", "R11", abs(rectangle_value(0, 1, 1, (2, 3, 2)).value
                                                              - zagier_232(0, 0)), 1e-25))
        for a in range(4):
            for name, fn, p, q in (("a+2,2", example_r_a2_2, a + 2, 2), ("a+3,2", example_r_a3_2, a + 3, 2),
                                   ("a+3,3", example_r_a3_3, a + 3, 3)):
                res = abs(rectangle_value(a, p, q, (1, 2, 1)).value - fn(a))
                out.append(_numeric(f"mzv.example[R={name};a={a}]", "R-example", res, 1e-10))
        for a in range(3):
            for b in range(1, 4):
                for c in range(3):
                    res, secs = _timed(lambda: abs(prop_121_determinant(a, b, c)
                                                   - rectangle_value(a, a + b + c, b, (1, 2, 1)).value))
                    out.append(_numeric(f"mzv.prop-121[a={a};b={b};c={c}]", "prop-121", res, 1e-20, secs))
        for c in range(4):
            r0, r1 = checkerboard_values(c)
            out.append(_numeric(f"mzv.checkerboard[c={c};m=0]", "checkerboard", r0, 1e-8))
            out.append(_numeric(f"mzv.checkerboard[c={c};m=-1]", "checkerboard", r1, 1e-8))
    return out


def mzv_series_suite(cfg: Config) -> list[VerdictReport]:
    from .mzv.numeric import precision
    from .mzv.series import gen_fun_F, lemma_product_residual, phi_series_check

    out = []
    with precision(cfg.digits):
        A, secs = _timed(lambda: gen_fun_F((1, 2, 1), 5, "table"))
        B = gen_fun_F((1, 2, 1), 5, "closed")
        for key in sorted(A):
            out.append(_numeric(f"mzv.genfun-F[a={key[0]};c={key[1]}]", "genfun-F", abs(A[key] - B[key]), 1e-10))
        for b, deg in ((2, 4), (3, 6)):
            res, secs = _timed(lambda: phi_series_check(b, deg))
            out.append(_numeric(f"mzv.phi[b={b};deg={deg}]", "phi-series", res, 1e-8, secs))
        for b, k, l, deg in ((2, (0, 1), (1, 0), 3), (3, (0, 1, 2), (2, 1, 0), 6), (3, (1, 0, 2), (0, 2, 1), 6)):
            res, secs = _timed(lambda: lemma_product_residual(b, k, l, deg))
            kk, ll = ",".join(map(str, k)), ",".join(map(str, l))
            out.append(_numeric(f"mzv.lemma-product[b={b};k=({kk});l=({ll})]", "lemma-product", res, 1e-8, secs))
    return out


def mzv_suite(cfg: Config) -> list[VerdictReport]:
    return (mzv_trunc_suite(cfg) + mzv_words_suite(cfg) + mzv_numeric_suite(cfg) + mzv_values_suite(cfg)
            + mzv_series_suite(cfg))


# Registry ------------------------------------------------------------------------

def run_suite(name: str, cfg: Config, mode: str = "exact", include_degenerate: bool = True) -> list[VerdictReport]:
    if name == "minors":
        reps = minors_suite(cfg, mode)
    elif name == "ninth":
        reps = ninth_suite(cfg, mode)
    elif name == "dj":
        reps = verify_all(dj_relations(cfg), cfg, mode)
    elif name == "giambelli":
        reps = verify_all(giambelli_relations(cfg), cfg, mode)
    elif name == "plucker":
        reps = verify_all(plucker_relations(cfg), cfg, mode) + plucker_extras(cfg)
    elif name == "rectangle":
        reps = verify_all(rectangle_relations(cfg, include_degenerate=include_degenerate), cfg, mode)
    elif name == "zeta-corollaries":
        reps = zeta_suite(cfg)
    elif name == "mzv":
        reps = mzv_suite(cfg)
    elif name == "all":
        reps = []
        for n in SUITES[:-1]:
            reps += run_suite(n, cfg, mode, include_degenerate)
    else:
        raise KeyError(name)
    return sorted(reps, key=lambda r: r.instance_id)


SUITES = ("minors", "ninth", "dj", "giambelli", "plucker", "rectangle", "zeta-corollaries", "mzv", "all")

"""Acceptance criteria, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or ``python3 tests/test_acceptance.py`` to print them directly.
"""
import functools
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
from conftest import ACCEPTANCE_LINES  # noqa: E402

from ninthschur.config import Config  # noqa: E402
from ninthschur.relations import dj_relation, plucker_quadratic, rectangle_general, verify  # noqa: E402
from ninthschur.suites import (PAPER_DJ_SHAPE, dj_relations, minors_suite, mzv_series_suite,  # noqa: E402
                               mzv_trunc_suite, mzv_values_suite, mzv_words_suite,
                               ninth_routes_suite, ninth_tableau_suite, ninth_vandermonde_suite, plucker_extras,
                               plucker_relations, rectangle_relations, verify_all, zeta_suite)
from test_relations import PLUCKER_COLUMN, PLUCKER_ROW, _terms  # noqa: E402

CFG = Config()

RECT_DISPLAY = [
    (-1, ((4, 4, 4, 4), 0), ((3, 2), -1)),
    (1, ((4, 4, 4), 0), ((3, 3, 3), -1)),
    (-1, ((2, 2, 2), 0), ((5, 5, 5), -1)),
    (-1, ((4, 4, 4, 3), 0), ((3, 3), -1)),
]


def _summary(reps) -> tuple[bool, str]:
    bad = [r.instance_id for r in reps if not r.ok]
    detail = f"{len(reps) - len(bad)}/{len(reps)} instances pass"
    if bad:
        detail += f"; failing: {', '.join(bad[:4])}{' ...' if len(bad) > 4 else ''}"
    return not bad and bool(reps), detail


def _exact_ids(reps) -> bool:
    return all(r.result == "proved-equal" for r in reps)


@functools.cache
def criterion_1():
    t0 = time.perf_counter()
    reps = ninth_routes_suite(CFG)
    secs = time.perf_counter() - t0
    ok, detail = _summary(reps)
    return ok and secs < 300, f"{detail}; {secs:.1f}s (limit 300s)"


@functools.cache
def criterion_2():
    reps = verify_all(dj_relations(CFG), CFG)
    paper = [verify(dj_relation(PAPER_DJ_SHAPE, v)) for v in ("H", "E")]
    ok, detail = _summary(reps)
    paper_ok = all(r.ok for r in paper)
    return ok and paper_ok and _exact_ids(reps), f"{detail}; worked instance (5,4,4,3)/(3,1,1) H,E: {paper_ok}"


@functools.cache
def criterion_3():
    reps = verify_all(plucker_relations(CFG), CFG) + plucker_extras(CFG)
    ok, detail = _summary(reps)
    worked = (_terms(plucker_quadratic((3, 2, 2, 1), 2, "row")) == PLUCKER_ROW
              and _terms(plucker_quadratic((3, 2, 2, 1), 2, "column")) == PLUCKER_COLUMN)
    kleber = [r for r in reps if "kleber" in r.instance_id]
    return ok and worked and bool(kleber), (f"{detail}; worked (3,2,2,1) d=2 term lists match: {worked}; "
                                           f"{len(kleber)} Kleber instances")


@functools.cache
def _rectangle_reports():
    return verify_all(rectangle_relations(CFG, include_degenerate=True), CFG)


@functools.cache
def criterion_4():
    reps = _rectangle_reports()
    ok, detail = _summary(reps)
    rel = rectangle_general(3, 3, 1, 2)
    display = _terms(rel) == RECT_DISPLAY and verify(rel).ok
    if not ok:
        detail += ("; a=b=0 gives S[p-1|q]^(r+1)=0 on the left while the right side is "
                   "-S[p+1|q]S[p-1|q]^(r-1), so the identity cannot hold there")
    return ok and display, f"{detail}; p=q=3 a=1 b=2 display reproduced: {display}"


@functools.cache
def criterion_5():
    t = ninth_tableau_suite(CFG)
    v = ninth_vandermonde_suite(CFG)
    ok_t, d_t = _summary(t)
    ok_v, d_v = _summary(v)
    return ok_t and ok_v, f"tableau: {d_t}; vandermonde: {d_v}"


@functools.cache
def criterion_6():
    reps = minors_suite(CFG, "exact", 50)
    names = sorted({r.theorem for r in reps})
    counts = {n: sum(1 for r in reps if r.theorem == n) for n in names}
    ok, detail = _summary(reps)
    return ok and all(c == 50 for c in counts.values()) and len(names) == 6, f"{detail} across {names}"


@functools.cache
def criterion_7():
    trunc = mzv_trunc_suite(CFG)
    zeta = zeta_suite(CFG)
    ok_a, d_a = _summary(trunc)
    ok_b, d_b = _summary(zeta)
    return ok_a and ok_b, f"truncation: {d_a}; zeta corollaries: {d_b}"


@functools.cache
def criterion_8():
    reps = mzv_words_suite(CFG)
    ok, detail = _summary(reps)
    asym = [r for r in reps if r.theorem == "asymptotic"]
    tail = "; ".join(f"{r.instance_id.split('[')[1][:-1]}: {' > '.join(r.witness['residuals'])}" for r in asym)
    return ok, f"{detail}; asymptotic residuals {tail}"


@functools.cache
def criterion_9():
    reps = mzv_values_suite(CFG)
    ok, detail = _summary(reps)
    worst = max(float(r.residual) for r in reps if r.theorem != "checkerboard")
    return ok, f"{detail}; max residual outside checkerboard {worst:.1e}"


@functools.cache
def criterion_10():
    reps = mzv_series_suite(CFG)
    ok, detail = _summary(reps)
    phi2 = next(r for r in reps if r.instance_id == "mzv.phi[b=2;deg=4]")
    return ok, f"{detail}; Φ2 residual {phi2.residual}"


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 11)}


def line(n: int) -> str:
    ok, detail = CRITERIA[n]()
    text = f"CRITERION {n}: {'PASS' if ok else 'FAIL'} {detail}"
    ACCEPTANCE_LINES[n] = text
    print(text)
    return text


@pytest.mark.parametrize("n", [1, 2, 3, 5, 6, 7, 8, 9, 10])
def test_criterion(n):
    assert line(n).startswith(f"CRITERION {n}: PASS")


@pytest.mark.xfail(strict=True, reason="a = b = 0 instances of the general rectangle identity are false")
def test_criterion_4():
    assert line(4).startswith("CRITERION 4: PASS")


def test_criterion_4_failure_is_exactly_the_degenerate_family():
    reps = _rectangle_reports()
    bad = sorted(r.instance_id for r in reps if not r.ok)
    assert len(reps) == 78 and len(bad) == 9
    assert all("a=0;b=0" in iid for iid in bad)
    assert _terms(rectangle_general(3, 3, 1, 2)) == RECT_DISPLAY


if __name__ == "__main__":
    results = [CRITERIA[n]()[0] for n in CRITERIA]
    for n in CRITERIA:
        line(n)
    sys.exit(0 if all(results) else 1)

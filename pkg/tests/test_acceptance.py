"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines.  The exhaustive sweep (criterion 3) is the long pole; everything
else finishes in seconds.
"""

import json
import os
import time

import pytest

from trifree import canon, families
from trifree.analysis import invariants
from trifree.cli import main
from trifree.enumerate import EnumerationSpec, enumerate_graphs, naive_enumerate
from trifree.graph import parse_graph6, to_graph6
from trifree.solvers import brute_force_alpha, count_cycles, independence_number
from trifree.verify import (
    EXPECTED_VACUOUS,
    edge_number_table,
    verify_chain_lemmas,
    verify_main_theorem,
    verify_property_suite,
)

#: Worker count for the partitioned sweep; scale up on wider machines
#: (the criterion's reference is --jobs 8 on a desktop).
SWEEP_JOBS = 2


def _report(criterion: str, detail: str = "") -> None:
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {criterion}: PASS{suffix}")


def test_criterion_1_family_closed_forms():
    t0 = time.perf_counter()
    for k in range(2, 11):
        rec = invariants(families.chain(k))
        assert (rec.n, rec.e, rec.alpha, rec.c4, rec.nu) == \
            (3 * k - 1, 5 * k - 5, k, k - 2, 0), f"chain({k})"
    for k in range(5, 11):
        rec = invariants(families.bicycle(k))
        assert (rec.n, rec.e, rec.alpha, rec.c4, rec.nu) == \
            (3 * k, 5 * k, k, k, 0), f"bicycle({k})"
    for k in range(1, 9):
        rec = invariants(families.shackled_chain(k))
        assert (rec.n, rec.e, rec.alpha, rec.c4, rec.nu) == \
            (3 * k + 8, 5 * k + 11, k + 3, k, 2), f"shackled_chain({k})"
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0, f"family table took {elapsed:.1f}s"
    _report("1 family closed forms", f"{elapsed:.1f}s")


def test_criterion_2_three_regular_equality_graphs():
    w5, gp = families.w5(), families.gp72()
    for g in (w5, gp):
        rec = invariants(g)
        assert (rec.n, rec.e) == (14, 21)
        assert rec.girth == 5
        assert rec.c4 == 0
        assert rec.nu == 0
        assert rec.alpha == 5
        # exhaustive 2^14-subset oracle
        assert brute_force_alpha(g) == 5
    assert not canon.is_isomorphic(w5, gp)
    _report("2 three-regular equality graphs")


def test_criterion_3_exhaustive_sweep_n12():
    t0 = time.perf_counter()
    report = verify_main_theorem(12, jobs=SWEEP_JOBS)
    elapsed = time.perf_counter() - t0
    for o in report.orders:
        assert o.violations == [], f"n={o.n}: {o.violations[:3]}"
        assert o.min_bounds["nu"] >= 0
        assert o.min_bounds["t"] >= 0
        assert o.nu_zero_ok, f"n={o.n}"
    nu_zero = {o.n: [(e.family, e.parameter) for e in o.nu_zero]
               for o in report.orders if o.nu_zero}
    assert nu_zero == {5: [("Chain", 2)], 8: [("Chain", 3)], 11: [("Chain", 4)]}
    total = sum(o.class_count for o in report.orders)
    assert report.orders[-1].class_count == 1144061
    assert elapsed < 600, f"sweep took {elapsed:.0f}s"
    _report("3 exhaustive main-theorem sweep n<=12",
            f"{total} classes, {elapsed:.0f}s, jobs={SWEEP_JOBS}")


def test_criterion_4_oracle_equivalence_n7():
    for n in range(1, 8):
        for connected in (False, True):
            for girth in (4, 5):
                spec = EnumerationSpec(order=n, connected_only=connected,
                                       min_girth=girth)
                fast = sorted(canon.certificate(g)
                              for g in enumerate_graphs(spec))
                naive = sorted(canon.certificate(g)
                               for g in naive_enumerate(spec))
                assert fast == naive, (n, connected, girth)
    # branch-and-bound alpha vs brute force on every class at n <= 7
    for n in range(1, 8):
        for g in naive_enumerate(EnumerationSpec(order=n, connected_only=False)):
            assert independence_number(g).alpha == brute_force_alpha(g)
    _report("4 oracle equivalence n<=7", "4 spec combos, alpha brute-forced")


# the criterion's list of properties that must be non-vacuous at n <= 10
_CRITERION5_PROPERTIES = [
    "prop-edge-critical", "prop-mindeg1", "prop-mindeg2", "mindegleq4",
    "prop1", "prop3", "prop-no2regular",
    "tretton.i", "tretton.ii", "tretton.iii", "tretton.iv",
    "balancedpair", "classprop1",
    "ecalpha", "ecmindeg", "ecbvconn", "Gvdestabiliser",
    "nbrsincycle", "e2-identity", "removal-count",
]


def test_criterion_5_property_suite_n10():
    results = {r.property_id: r for r in verify_property_suite(10)}
    for pid in _CRITERION5_PROPERTIES:
        res = results[pid]
        assert not res.failures, (pid, res.failures[:3])
        vacuous_below = EXPECTED_VACUOUS.get(pid, 0)
        if vacuous_below is None or (vacuous_below and vacuous_below > 10):
            # documented exceptions; their checkers run on constructed
            # instances in test_verify (shackled chains, W5, GP(7,2))
            assert res.hypothesis_hits == 0, pid
        else:
            assert res.hypothesis_hits > 0, pid
    # the remaining registered checks must also be clean
    for pid, res in results.items():
        assert not res.failures, (pid, res.failures[:3])
    _report("5 property suite n<=10",
            f"{len(results)} checks, documented-vacuous: "
            + ",".join(sorted(p for p in _CRITERION5_PROPERTIES
                              if p in EXPECTED_VACUOUS)))


def test_criterion_6_chain_destabiliser_lemmas():
    t0 = time.perf_counter()
    results = verify_chain_lemmas(6)
    elapsed = time.perf_counter() - t0
    for r in results:
        assert not r.failures, (r.property_id, r.failures[:3])
        assert r.hypothesis_hits > 0
    assert elapsed < 120, f"chain lemmas took {elapsed:.0f}s"
    ids = sorted(r.property_id for r in results)
    assert {"Chkdestab3", "Chkdestab4", "Chkplusedge"} <= set(ids)
    _report("6 chain destabiliser lemmas", f"{elapsed:.1f}s")


def test_criterion_7_edge_number_bounds():
    table = edge_number_table(10)
    feasible = 0
    for c in table.rows:
        if c.min_edges is None:
            continue
        feasible += 1
        if c.variant == "triangle-free":
            assert c.min_edges >= 6 * c.n - 13 * c.k, (c.n, c.k)
        else:
            assert 3 * c.min_edges >= 17 * c.n - 35 * c.k, (c.n, c.k)
    cell = table.cell(5, 2, "c4-free")
    assert cell.min_edges == 5
    assert 3 * cell.min_edges == 17 * 5 - 35 * 2  # tight
    assert canon.is_isomorphic(parse_graph6(cell.certificate),
                               families.cycle(5))
    _report("7 edge-number bounds", f"{feasible} feasible cells")


@pytest.mark.slow
@pytest.mark.skipif(not os.environ.get("TRIFREE_STRETCH"),
                    reason="stretch sweep (documented, not gating); "
                           "set TRIFREE_STRETCH=1 to run n <= 14 (hours)")
def test_stretch_sweep_n14():
    report = verify_main_theorem(14, jobs=SWEEP_JOBS)
    for o in report.orders:
        assert o.violations == []
        assert o.min_bounds["nu"] >= 0
        assert o.nu_zero_ok
    order14 = next(o for o in report.orders if o.n == 14)
    got = sorted((e.family, e.parameter) for e in order14.nu_zero)
    assert got == [("Chain", 5), ("GP72", None), ("W5", None)]
    order13 = next(o for o in report.orders if o.n == 13)
    assert order13.nu_zero == []
    _report("stretch sweep n<=14", "order-14 nu=0 = {Ch_5, W5, GP(7,2)}")


def test_criterion_8_determinism_across_jobs(capsys):
    outputs = []
    for jobs in ("1", "8"):
        code = main(["verify", "--n-max", "9", "--suite", "theorem",
                     "--jobs", jobs, "--no-timing"])
        assert code == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    payload = json.loads(outputs[0])
    assert payload["ok"] is True
    with capsys.disabled():
        _report("8 determinism across --jobs", "jobs 1 vs 8 byte-identical")

"""Theorem- and lemma-verification harness.

verify_main_theorem sweeps every connected triangle-free isomorphism class
up to an order, records the minimum of each linear bound, and checks that
the nu = 0 classes are exactly the known family members of those orders.
verify_property_suite re-checks the universal structural statements on all
enumerated graphs whose hypotheses hold, verify_chain_lemmas does the
exhaustive subset-level chain lemmas, and edge_number_table tabulates
minimum edge counts against the linear lower bounds.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from multiprocessing import get_context

import numpy as np

from . import canon, families
from .analysis import nu_value
from .enumerate import (
    CHUNK,
    SPLIT_ORDER,
    EnumerationSpec,
    _extend,
    _k1_level,
    level_rows,
    scan_stats,
)
from .graph import (
    Graph,
    GraphError,
    ReductionVanishedError,
    _bits,
    parse_graph6,
    reduce_closed,
    to_graph6,
)
from .solvers import (
    count_c4,
    count_cycles_through,
    cycles,
    e2_half_sum,
    independence_number,
    maximum_independent_sets,
)

#: The linear invariants asserted on every connected class.
BOUND_NAMES = ("nu", "t", "e", "e-n+a", "e-3n+5a", "e-5n+10a")


# ---------------------------------------------------------------------------
# main theorem sweep
# ---------------------------------------------------------------------------

@dataclass
class NuZeroEntry:
    graph6: str
    family: str | None
    parameter: int | None


@dataclass
class OrderSummary:
    n: int
    class_count: int
    min_bounds: dict[str, int]
    nu_zero: list[NuZeroEntry]
    expected_nu_zero: list[str]
    nu_zero_ok: bool
    violations: list[dict[str, str]]

    def ok(self) -> bool:
        return not self.violations and self.nu_zero_ok and (
            min(self.min_bounds.values()) >= 0)


@dataclass
class PropertyCheckResult:
    property_id: str
    graphs_tested: int
    hypothesis_hits: int
    skips: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)

    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "property_id": self.property_id,
            "graphs_tested": self.graphs_tested,
            "hypothesis_hits": self.hypothesis_hits,
            "skips": self.skips,
            "failures": [{"graph6": g6, "detail": d} for g6, d in self.failures],
        }


@dataclass
class EdgeNumberCell:
    n: int
    k: int
    variant: str  # "triangle-free" | "c4-free"
    min_edges: int | None
    certificate: str | None
    bound_ok: bool | None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n, "k": self.k, "variant": self.variant,
            "min_edges": self.min_edges, "certificate": self.certificate,
            "bound_ok": self.bound_ok,
        }


@dataclass
class EdgeNumberTable:
    n_max: int
    k_max: int
    rows: list[EdgeNumberCell]

    def ok(self) -> bool:
        return all(c.bound_ok is not False for c in self.rows)

    def cell(self, n: int, k: int, variant: str = "triangle-free") -> EdgeNumberCell:
        for c in self.rows:
            if (c.n, c.k, c.variant) == (n, k, variant):
                return c
        raise KeyError((n, k, variant))


@dataclass
class VerificationReport:
    n_max: int
    orders: list[OrderSummary]
    properties: list[PropertyCheckResult] | None = None
    chain_lemmas: list[PropertyCheckResult] | None = None
    edge_numbers: EdgeNumberTable | None = None
    timing: dict | None = None

    def ok(self) -> bool:
        parts = [all(o.ok() for o in self.orders)]
        if self.properties is not None:
            parts.append(all(p.ok() for p in self.properties))
        if self.chain_lemmas is not None:
            parts.append(all(p.ok() for p in self.chain_lemmas))
        if self.edge_numbers is not None:
            parts.append(self.edge_numbers.ok())
        return all(parts)

    def failure_certificates(self) -> list[str]:
        certs: set[str] = set()
        for o in self.orders:
            certs.update(v["graph6"] for v in o.violations if v.get("graph6"))
            if not o.nu_zero_ok:
                certs.update(e.graph6 for e in o.nu_zero)
        for group in (self.properties, self.chain_lemmas):
            for p in group or []:
                certs.update(g6 for g6, _ in p.failures if g6)
        return sorted(certs)

    def to_json_dict(self, include_timing: bool = True) -> dict:
        out = {
            "schema_version": 1,
            "n_max": self.n_max,
            "ok": self.ok(),
            "orders": [
                {
                    "n": o.n,
                    "class_count": o.class_count,
                    "min_bounds": o.min_bounds,
                    "nu_zero": [
                        {"graph6": e.graph6, "family": e.family,
                         "parameter": e.parameter}
                        for e in o.nu_zero
                    ],
                    "expected_nu_zero": o.expected_nu_zero,
                    "nu_zero_ok": o.nu_zero_ok,
                    "violations": o.violations,
                }
                for o in self.orders
            ],
        }
        if self.properties is not None:
            out["properties"] = [p.to_json_dict() for p in self.properties]
        if self.chain_lemmas is not None:
            out["chain_lemmas"] = [p.to_json_dict() for p in self.chain_lemmas]
        if self.edge_numbers is not None:
            out["edge_numbers"] = {
                "n_max": self.edge_numbers.n_max,
                "k_max": self.edge_numbers.k_max,
                "rows": [c.to_json_dict() for c in self.edge_numbers.rows],
            }
        if include_timing and self.timing is not None:
            out["timing"] = self.timing
        return out

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_json_dict(include_timing), sort_keys=True,
                          indent=2) + "\n"

    def to_text(self, include_timing: bool = True) -> str:
        lines = [f"verification report, n_max={self.n_max}: "
                 f"{'PASS' if self.ok() else 'FAIL'}"]
        for o in self.orders:
            nz = ", ".join(
                f"{e.graph6} ({e.family}{'' if e.parameter is None else ' k=' + str(e.parameter)})"
                for e in o.nu_zero) or "-"
            status = "ok" if o.ok() else "FAIL"
            lines.append(
                f"  n={o.n}: classes={o.class_count} min_nu={o.min_bounds['nu']} "
                f"min_t={o.min_bounds['t']} nu_zero=[{nz}] {status}")
        for title, group in (("properties", self.properties),
                             ("chain lemmas", self.chain_lemmas)):
            if group is None:
                continue
            lines.append(f"  {title}:")
            for p in group:
                lines.append(
                    f"    {p.property_id}: graphs={p.graphs_tested} "
                    f"hits={p.hypothesis_hits} skips={p.skips} "
                    f"failures={len(p.failures)} "
                    f"{'ok' if p.ok() else 'FAIL'}")
        if self.edge_numbers is not None:
            bad = [c for c in self.edge_numbers.rows if c.bound_ok is False]
            lines.append(
                f"  edge numbers: n<={self.edge_numbers.n_max} "
                f"k<={self.edge_numbers.k_max} cells={len(self.edge_numbers.rows)} "
                f"bound failures={len(bad)}")
        if include_timing and self.timing is not None:
            lines.append("  timing: " + json.dumps(self.timing, sort_keys=True))
        return "\n".join(lines) + "\n"


def _bounds_vector(n: int, e: np.ndarray, a: np.ndarray, c4: np.ndarray) -> dict[str, np.ndarray]:
    return {
        "nu": 3 * e - 17 * n + 35 * a + c4,
        "t": e - 6 * n + 13 * a,
        "e": e,
        "e-n+a": e - n + a,
        "e-3n+5a": e - 3 * n + 5 * a,
        "e-5n+10a": e - 5 * n + 10 * a,
    }


def _order_entry(level: np.ndarray, n: int) -> dict:
    stats = scan_stats(level, n)
    conn = stats[:, 0] == 1
    e = stats[conn, 1]
    a = stats[conn, 2]
    c4 = stats[conn, 3]
    bounds = _bounds_vector(n, e, a, c4)
    entry = {
        "count": int(conn.sum()),
        "min": {name: (int(vals.min()) if vals.size else None)
                for name, vals in bounds.items()},
        "nu_zero": [],
        "violations": [],
    }
    conn_idx = np.nonzero(conn)[0]
    for jj in np.nonzero(bounds["nu"] == 0)[0]:
        i = conn_idx[jj]
        entry["nu_zero"].append(to_graph6(Graph(tuple(int(x) for x in level[i]))))
    for name, vals in bounds.items():
        for jj in np.nonzero(vals < 0)[0]:
            i = conn_idx[jj]
            entry["violations"].append(
                {"bound": name,
                 "graph6": to_graph6(Graph(tuple(int(x) for x in level[i])))})
    return entry


def _merge_entry(a: dict, b: dict) -> dict:
    a["count"] += b["count"]
    for name, val in b["min"].items():
        prev = a["min"][name]
        if val is not None and (prev is None or val < prev):
            a["min"][name] = val
    a["nu_zero"].extend(b["nu_zero"])
    a["violations"].extend(b["violations"])
    return a


def _sweep_orders(n_max: int, partition: tuple[int, int] | None) -> dict[int, dict]:
    """Raw per-order aggregates for one partition, growing levels once.

    Levels below the target order are materialized; the final order is
    streamed in chunks so the long-running orders stay within memory.
    """
    from . import _kernels
    _kernels.warm_up()
    out: dict[int, dict] = {}
    spec = EnumerationSpec(order=n_max, connected_only=True, min_girth=4)
    idx = 0 if partition is None else partition[0]
    level = _k1_level()
    n = 1
    if idx == 0:
        out[1] = _order_entry(level, 1)
    while n < min(SPLIT_ORDER, n_max):
        level = _extend(level, n, spec)
        n += 1
        if idx == 0:
            out[n] = _order_entry(level, n)
    if partition is not None and n_max > SPLIT_ORDER:
        level = level[partition[0]::partition[1]].copy()
    while n < n_max - 1:
        level = _extend(level, n, spec)
        n += 1
        out[n] = _order_entry(level, n)
    if n < n_max:
        agg: dict | None = None
        for start in range(0, level.shape[0], CHUNK):
            children = _extend(level[start:start + CHUNK], n, spec)
            entry = _order_entry(children, n + 1)
            agg = entry if agg is None else _merge_entry(agg, entry)
        if agg is not None:
            out[n_max] = agg
    return out


def _sweep_worker(args: tuple[int, int, int]) -> dict[int, dict]:
    n_max, idx, count = args
    return _sweep_orders(n_max, (idx, count))


def verify_main_theorem(n_max: int, jobs: int = 1) -> VerificationReport:
    """Exhaustive nu >= 0 sweep with nu = 0 classification, order by order."""
    if jobs < 1:
        raise GraphError("jobs must be >= 1")
    t0 = time.perf_counter()
    if jobs == 1 or n_max <= SPLIT_ORDER:
        merged = _sweep_orders(n_max, None)
    else:
        from . import _kernels
        _kernels.warm_up()  # compile before forking
        ctx = get_context("fork")
        with ctx.Pool(processes=min(jobs, 16)) as pool:
            parts = pool.map(_sweep_worker,
                             [(n_max, i, jobs) for i in range(jobs)])
        merged = {}
        for part in parts:
            for n, entry in part.items():
                if n not in merged:
                    merged[n] = entry
                else:
                    _merge_entry(merged[n], entry)
    orders = []
    for n in range(1, n_max + 1):
        entry = merged[n]
        expected = families.members_of_order(n)
        expected_g6 = sorted(
            to_graph6(canon.canonical_form(m.graph).graph) for m in expected)
        nu_zero = []
        for g6 in sorted(set(entry["nu_zero"])):
            g = parse_graph6(g6)
            member = families.classify_in_G(g)
            nu_zero.append(NuZeroEntry(
                graph6=g6,
                family=member.family if member else None,
                parameter=member.parameter if member else None,
            ))
        orders.append(OrderSummary(
            n=n,
            class_count=entry["count"],
            min_bounds=entry["min"],
            nu_zero=nu_zero,
            expected_nu_zero=expected_g6,
            nu_zero_ok=[e.graph6 for e in nu_zero] == expected_g6,
            violations=sorted(entry["violations"],
                              key=lambda v: (v["bound"], v["graph6"])),
        ))
    return VerificationReport(
        n_max=n_max,
        orders=orders,
        timing={"theorem_seconds": round(time.perf_counter() - t0, 3),
                "jobs": jobs},
    )


# ---------------------------------------------------------------------------
# property suite
# ---------------------------------------------------------------------------

class _Ctx:
    """Per-graph cache of the quantities the property checkers share."""

    def __init__(self, g: Graph):
        self.g = g
        self.g6 = to_graph6(g)

    @cached_property
    def alpha(self) -> int:
        return independence_number(self.g).alpha

    @cached_property
    def c4(self) -> int:
        return count_c4(self.g)

    @cached_property
    def nu(self) -> int:
        return nu_value(self.g.n, self.g.e, self.alpha, self.c4)

    @cached_property
    def degrees(self) -> list[int]:
        return self.g.degrees()

    @cached_property
    def mindeg(self) -> int:
        return min(self.degrees)

    @cached_property
    def mis(self) -> list[int]:
        return maximum_independent_sets(self.g)

    @cached_property
    def components(self) -> list[set[int]]:
        return self.g.components()

    @cached_property
    def connected(self) -> bool:
        return len(self.components) == 1

    @cached_property
    def redundant(self) -> list[tuple[int, int]]:
        alpha = self.alpha
        out = []
        for u, v in self.g.edges():
            if independence_number(self.g.delete_edges([(u, v)])).alpha == alpha:
                out.append((u, v))
        return out

    @cached_property
    def edge_critical(self) -> bool:
        return not self.redundant

    @cached_property
    def has_c5_component(self) -> bool:
        return any(self._is_c5(comp) for comp in self.components)

    def _is_c5(self, comp: set[int]) -> bool:
        return len(comp) == 5 and all(self.degrees[v] == 2 for v in comp)

    def reduction(self, v: int):
        """(G_v, old_to_new, alpha(G_v), mis masks of G_v) or None if empty."""
        try:
            red = reduce_closed(self.g, [v])
        except ReductionVanishedError:
            return None
        alpha = independence_number(red.graph).alpha
        return red, alpha

    def destabilises_mask(self, mask: int) -> bool:
        """Every maximum independent set meets mask (S = V allowed)."""
        return all(mask & m for m in self.mis)


def _mask_of(vs) -> int:
    out = 0
    for v in vs:
        out |= 1 << v
    return out


def _hits_all(mis: list[int], mask: int) -> bool:
    return all(mask & m for m in mis)


# each checker: (ctx) -> (hits, skips, [detail, ...])

def _chk_prop_edge_critical(ctx: _Ctx):
    if ctx.nu > 2:
        return 0, 0, []
    return 1, 0, [] if ctx.edge_critical else ["not edge-critical"]


def _chk_prop_mindeg1(ctx: _Ctx):
    if ctx.nu > 17:
        return 0, 0, []
    fails = []
    if ctx.mindeg < 1:
        fails.append(f"mindeg {ctx.mindeg} < 1")
    common = (1 << ctx.g.n) - 1
    for m in ctx.mis:
        common &= m
    if common:
        v = (common & -common).bit_length() - 1
        fails.append(f"single-vertex destabiliser {{{v}}}")
    return 1, 0, fails


def _chk_prop_mindeg2(ctx: _Ctx):
    if ctx.nu > 3:
        return 0, 0, []
    return 1, 0, [] if ctx.mindeg >= 2 else [f"mindeg {ctx.mindeg} < 2"]


def _chk_mindegleq4(ctx: _Ctx):
    if ctx.nu > 7:
        return 0, 0, []
    return 1, 0, [] if ctx.mindeg <= 4 else [f"mindeg {ctx.mindeg} > 4"]


def _stable_up_to(ctx: _Ctx, r: int) -> tuple[bool, tuple[int, ...] | None]:
    for size in range(1, r + 1):
        for combo in combinations(range(ctx.g.n), size):
            if _hits_all(ctx.mis, _mask_of(combo)):
                return False, combo
    return True, None


def _chk_prop1(ctx: _Ctx):
    if ctx.nu > 3:
        return 0, 0, []
    ok, witness = _stable_up_to(ctx, 2)
    return 1, 0, [] if ok else [f"destabiliser {witness}"]


def _chk_prop2(ctx: _Ctx):
    if ctx.nu > 6:
        return 0, 0, []
    destab2 = [combo for size in (1, 2)
               for combo in combinations(range(ctx.g.n), size)
               if _hits_all(ctx.mis, _mask_of(combo))]
    if not destab2:
        return 1, 0, []
    k2_comps = [comp for comp in ctx.components
                if len(comp) == 2 and ctx.degrees[min(comp)] == 1]
    if len(destab2) == 1 and any(set(destab2[0]) == comp for comp in k2_comps):
        return 1, 0, []
    return 1, 0, [f"2-destabilisers {destab2} not a lone K2 component"]


def _chk_prop3(ctx: _Ctx):
    if ctx.nu > 4 or ctx.mindeg < 3:
        return 0, 0, []
    ok, witness = _stable_up_to(ctx, 3)
    return 1, 0, [] if ok else [f"destabiliser {witness}"]


def _chk_prop4(ctx: _Ctx):
    hits = skips = 0
    fails = []
    for v in range(ctx.g.n):
        red = ctx.reduction(v)
        if red is None:
            skips += 1
            continue
        hits += 1
        d = ctx.degrees[v]
        if ctx.nu >= 3 * ctx.mindeg * d + 18 * d - 17:
            continue
        reduction, _ = red
        n2 = {reduction.old_to_new[w]
              for w in ctx.g.vertices_at_distance(v, 2)}
        gv_mis = maximum_independent_sets(reduction.graph)
        if not _hits_all(gv_mis, _mask_of(n2)):
            fails.append(
                f"v={v}: N2 does not destabilise G_v and nu bound fails")
    return hits, skips, fails


def _chk_prop_no2regular(ctx: _Ctx):
    if ctx.nu > 6:
        return 0, 0, []
    hits = 0
    fails = []
    for comp in ctx.components:
        if all(ctx.degrees[v] == 2 for v in comp):
            hits += 1
            if len(comp) != 5:
                fails.append(f"2-regular component of size {len(comp)}")
    return hits, 0, fails


def _tretton_hyp(ctx: _Ctx) -> list[int]:
    if ctx.nu > 2 or ctx.has_c5_component:
        return []
    return [v for v in range(ctx.g.n) if ctx.degrees[v] == 2]


def _chk_tretton_i(ctx: _Ctx):
    hits = 0
    fails = []
    for v in _tretton_hyp(ctx):
        hits += 1
        d2 = ctx.g.second_valency(v)
        if not (5 <= d2 <= 6):
            fails.append(f"v={v}: d2={d2} outside [5,6]")
        elif ctx.nu <= 1 and d2 != 5:
            fails.append(f"v={v}: nu<=1 but d2={d2} != 5")
    return hits, 0, fails


def _chk_tretton_ii(ctx: _Ctx):
    hits = skips = 0
    fails = []
    for v in _tretton_hyp(ctx):
        red = ctx.reduction(v)
        if red is None:
            skips += 1
            continue
        hits += 1
        mind = red[0].graph.min_degree()
        if mind < 2:
            fails.append(f"v={v}: mindeg(G_v)={mind} < 2")
        elif ctx.nu <= 1 and mind != 2:
            fails.append(f"v={v}: nu<=1 but mindeg(G_v)={mind} != 2")
    return hits, skips, fails


def _chk_tretton_iii(ctx: _Ctx):
    hits = 0
    fails = []
    for v in _tretton_hyp(ctx):
        if ctx.g.second_valency(v) != 5:
            continue
        hits += 1
        through = count_cycles_through(ctx.g, 4, [v])
        if through != 0:
            fails.append(f"v={v}: d2=5 but N(C4;H,v)={through}")
    return hits, 0, fails


def _chk_tretton_iv(ctx: _Ctx):
    hits = 0
    fails = []
    for v in _tretton_hyp(ctx):
        if ctx.g.second_valency(v) != 6:
            continue
        hits += 1
        through = count_cycles_through(ctx.g, 4, ctx.g.neighbors(v))
        if through != 0:
            fails.append(f"v={v}: d2=6 but N(C4;H,N(v))={through}")
    return hits, 0, fails


def _chk_balancedpair(ctx: _Ctx):
    if ctx.nu > 2:
        return 0, 0, []
    hits = 0
    fails = []
    for u, v in ctx.g.edges():
        if ctx.degrees[u] == 2 and ctx.degrees[v] == 2:
            hits += 1
            du, dv = ctx.g.second_valency(u), ctx.g.second_valency(v)
            if du != dv:
                fails.append(f"adjacent bivalent {u},{v}: d2 {du} != {dv}")
    return hits, 0, fails


def _chain_cert(n: int) -> bytes | None:
    if n >= 5 and n % 3 == 2:
        return canon.certificate(families.chain((n + 1) // 3))
    return None


def _shackled_cert(n: int) -> bytes | None:
    if n >= 11 and (n - 8) % 3 == 0:
        return canon.certificate(families.shackled_chain((n - 8) // 3))
    return None


def _chk_classprop1(ctx: _Ctx):
    if not (ctx.connected and ctx.nu <= 2 and ctx.mindeg == 2):
        return 0, 0, []
    cert = canon.certificate(ctx.g)
    if cert == _chain_cert(ctx.g.n) or cert == _shackled_cert(ctx.g.n):
        return 1, 0, []
    return 1, 0, ["connected nu<=2 mindeg=2 graph is neither Ch_k nor SCh_l"]


def _chk_classprop6(ctx: _Ctx):
    if not (ctx.connected and ctx.nu <= 0):
        return 0, 0, []
    cert = canon.certificate(ctx.g)
    is_chain = cert == _chain_cert(ctx.g.n)
    is_bicycle = (ctx.g.n >= 15 and ctx.g.n % 3 == 0
                  and cert == canon.certificate(families.bicycle(ctx.g.n // 3)))
    is_c5 = ctx.g.n == 5 and is_chain
    third = ctx.c4 == 0 and not is_c5
    holds = [is_chain, is_bicycle, third]
    if sum(holds) == 1:
        return 1, 0, []
    return 1, 0, [f"trichotomy counts {holds}"]


def _chk_classprop10(ctx: _Ctx):
    if not (ctx.connected and ctx.nu <= 0):
        return 0, 0, []
    if families.classify_in_G(ctx.g) is not None:
        return 0, 0, []
    hits = 1
    if all(d == 4 for d in ctx.degrees):
        return hits, 0, []
    return hits, 0, ["connected nu<=0 graph outside the family is not 4-regular"]


def _chk_ddestab(ctx: _Ctx):
    if ctx.nu > 2:
        return 0, 0, []
    hits = 0
    fails = []
    for v in range(ctx.g.n):
        if ctx.degrees[v] != 2 or ctx.g.second_valency(v) != 6:
            continue
        hits += 1
        red = ctx.reduction(v)
        if red is None:
            fails.append(f"v={v}: G_v vanished")
            continue
        reduction, _ = red
        n2 = {reduction.old_to_new[w]
              for w in ctx.g.vertices_at_distance(v, 2)}
        if len(n2) != 4:
            fails.append(f"v={v}: |N2(v)|={len(n2)} != 4")
            continue
        gv_mis = maximum_independent_sets(reduction.graph)
        if not _hits_all(gv_mis, _mask_of(n2)):
            fails.append(f"v={v}: N2(v) does not destabilise G_v")
            continue
        for sub in combinations(sorted(n2), 3):
            if _hits_all(gv_mis, _mask_of(sub)):
                fails.append(f"v={v}: N2(v) not minimal (subset {sub})")
                break
    return hits, 0, fails


def _chk_containsChk1(ctx: _Ctx):
    if not (ctx.connected and ctx.mindeg == 2 and ctx.nu <= 1):
        return 0, 0, []
    if canon.certificate(ctx.g) == _chain_cert(ctx.g.n):
        return 1, 0, []
    return 1, 0, ["connected nu<=1 mindeg=2 graph is not a chain"]


def _chk_containsChk2(ctx: _Ctx):
    if not ctx.connected or ctx.nu > 2:
        return 0, 0, []
    hits = 0
    fails = []
    for u, v in ctx.g.edges():
        if not (ctx.degrees[u] == 2 and ctx.degrees[v] == 2):
            continue
        if not (ctx.g.second_valency(u) == 5 and ctx.g.second_valency(v) == 5):
            continue
        hits += 1
        if ctx.nu <= 1:
            cert = canon.certificate(ctx.g)
            if cert != _chain_cert(ctx.g.n) or ctx.g.n < 8:
                fails.append(f"pair {u},{v}: graph is not Ch_k with k >= 3")
                continue
        c5u = count_cycles_through(ctx.g, 5, [u])
        c5v = count_cycles_through(ctx.g, 5, [v])
        if not (c5u == c5v == 2):
            fails.append(f"pair {u},{v}: N(C5) through = {c5u},{c5v} != 2")
    return hits, 0, fails


def _chk_ecalpha(ctx: _Ctx):
    if not ctx.edge_critical:
        return 0, 0, []
    hits = 0
    fails = []
    for v in range(ctx.g.n):
        hits += 1
        red = ctx.reduction(v)
        alpha_gv = 0 if red is None else red[1]
        if alpha_gv != ctx.alpha - 1:
            fails.append(f"v={v}: alpha(G_v)={alpha_gv} != alpha-1={ctx.alpha - 1}")
    return hits, 0, fails


def _chk_ecmindeg(ctx: _Ctx):
    # stated per connected graph (components of edge-critical graphs are
    # edge-critical; the literal all-graphs reading fails on 2K2)
    if not (ctx.edge_critical and ctx.connected):
        return 0, 0, []
    if ctx.g.n <= 2:
        return 1, 0, []
    return 1, 0, [] if ctx.mindeg >= 2 else [f"mindeg {ctx.mindeg} < 2"]


def _chk_ecbvconn(ctx: _Ctx):
    if not (ctx.edge_critical and ctx.connected):
        return 0, 0, []
    hits = skips = 0
    fails = []
    for v in range(ctx.g.n):
        if ctx.degrees[v] != 2:
            continue
        red = ctx.reduction(v)
        if red is None:
            skips += 1
            continue
        hits += 1
        if not red[0].graph.is_connected():
            fails.append(f"v={v}: G_v disconnected")
    return hits, skips, fails


def _chk_gvdestabiliser(ctx: _Ctx):
    if not ctx.edge_critical:
        return 0, 0, []
    hits = skips = 0
    fails = []
    n = ctx.g.n
    reductions = {}
    for mask in range(1, (1 << n) - 1):
        if not ctx.destabilises_mask(mask):
            continue
        for v in range(n):
            if (mask >> v) & 1:
                continue
            if v not in reductions:
                red = ctx.reduction(v)
                if red is None:
                    reductions[v] = None
                else:
                    reductions[v] = (red[0],
                                     maximum_independent_sets(red[0].graph))
            if reductions[v] is None:
                skips += 1
                continue
            hits += 1
            reduction, gv_mis = reductions[v]
            translated = _mask_of(
                reduction.old_to_new[w] for w in _bits(mask)
                if w in reduction.old_to_new)
            if not _hits_all(gv_mis, translated):
                fails.append(
                    f"S={sorted(_bits(mask))}, v={v}: image does not "
                    f"destabilise G_v")
    return hits, skips, fails


def _chk_redundant_edge(ctx: _Ctx):
    hits = skips = 0
    fails = []
    for (a, b) in ctx.redundant:
        closed = ctx.g.closed_neighborhood([a, b])
        for x in range(ctx.g.n):
            if x in closed:
                continue
            red = ctx.reduction(x)
            if red is None:
                skips += 1
                continue
            hits += 1
            reduction, alpha_gx = red
            if alpha_gx <= ctx.alpha - 2:
                continue
            ea, eb = reduction.old_to_new[a], reduction.old_to_new[b]
            gx_minus = reduction.graph.delete_edges([(ea, eb)])
            if independence_number(gx_minus).alpha != alpha_gx:
                fails.append(f"edge ({a},{b}), x={x}: neither branch holds")
    return hits, skips, fails


def _chk_lemma_alpha(ctx: _Ctx):
    hits = 0
    fails = []
    for v in range(ctx.g.n):
        red = ctx.reduction(v)
        if red is None:
            alpha_gv = 0
            destab = False  # empty N2 never destabilises the empty remainder
        else:
            reduction, alpha_gv = red
            n2 = {reduction.old_to_new[w]
                  for w in ctx.g.vertices_at_distance(v, 2)}
            gv_mis = maximum_independent_sets(reduction.graph)
            destab = _hits_all(gv_mis, _mask_of(n2)) if n2 else False
        if destab:
            continue
        hits += 1
        if ctx.alpha < alpha_gv + ctx.degrees[v]:
            fails.append(
                f"v={v}: alpha={ctx.alpha} < alpha(G_v)+d(v)="
                f"{alpha_gv + ctx.degrees[v]}")
    return hits, 0, fails


def _chk_nbrsincycle(ctx: _Ctx):
    if ctx.c4 != 0:
        return 0, 0, []
    hits = 0
    fails = []
    for k in range(5, 9):
        if k > ctx.g.n:
            break
        for cyc in cycles(ctx.g, k):
            cmask = _mask_of(cyc)
            for v in range(ctx.g.n):
                if (cmask >> v) & 1:
                    continue
                hits += 1
                meet = bin(ctx.g.rows[v] & cmask).count("1")
                if meet > k // 3:
                    fails.append(
                        f"{k}-cycle {cyc}, v={v}: |N(v) & C|={meet} > {k // 3}")
    return hits, 0, fails


def _chk_e2_identity(ctx: _Ctx):
    # The closing term is the number of 4-cycles through v itself: in a
    # triangle-free graph every such cycle is v-w1-u-w2 with u in G_v, so
    # sum_u C(|N(u) & N(v)|, 2) collapses to N(C4;G,v), and expanding the
    # squared-degree difference leaves exactly that correction.
    hits = skips = 0
    fails = []
    e2_g = e2_half_sum(ctx.g)
    for v in range(ctx.g.n):
        red = ctx.reduction(v)
        if red is None:
            skips += 1
            continue
        hits += 1
        reduction, _ = red
        lhs = e2_g - e2_half_sum(reduction.graph)
        dv = ctx.degrees[v]
        rhs = -(dv * (dv - 1) // 2)
        for w in ctx.g.neighbors(v):
            dw = ctx.degrees[w]
            rhs += ctx.g.second_valency(w) + dw * (dw - 1) // 2
        rhs -= count_cycles_through(ctx.g, 4, [v])
        if lhs != rhs:
            fails.append(f"v={v}: e2 difference {lhs} != {rhs}")
    return hits, skips, fails


def _chk_removal_count(ctx: _Ctx):
    hits = skips = 0
    fails = []
    for v in range(ctx.g.n):
        red = ctx.reduction(v)
        if red is None:
            skips += 1
            continue
        hits += 1
        reduction, alpha_gv = red
        gv = reduction.graph
        lhs = nu_value(gv.n, gv.e, alpha_gv, count_c4(gv))
        rhs = (ctx.nu - 3 * ctx.g.second_valency(v) + 17 * ctx.degrees[v] - 18
               - count_cycles_through(ctx.g, 4, ctx.g.neighbors(v)))
        if lhs > rhs:
            fails.append(f"v={v}: nu(G_v)={lhs} > bound {rhs}")
    return hits, skips, fails


PROPERTY_CHECKERS = {
    "prop-edge-critical": _chk_prop_edge_critical,
    "prop-mindeg1": _chk_prop_mindeg1,
    "prop-mindeg2": _chk_prop_mindeg2,
    "mindegleq4": _chk_mindegleq4,
    "prop1": _chk_prop1,
    "prop2": _chk_prop2,
    "prop3": _chk_prop3,
    "prop4": _chk_prop4,
    "prop-no2regular": _chk_prop_no2regular,
    "tretton.i": _chk_tretton_i,
    "tretton.ii": _chk_tretton_ii,
    "tretton.iii": _chk_tretton_iii,
    "tretton.iv": _chk_tretton_iv,
    "balancedpair": _chk_balancedpair,
    "classprop1": _chk_classprop1,
    "classprop6": _chk_classprop6,
    "classprop10": _chk_classprop10,
    "ddestab": _chk_ddestab,
    "containsChk1": _chk_containsChk1,
    "containsChk2": _chk_containsChk2,
    "ecalpha": _chk_ecalpha,
    "ecmindeg": _chk_ecmindeg,
    "ecbvconn": _chk_ecbvconn,
    "Gvdestabiliser": _chk_gvdestabiliser,
    "redundant-edge": _chk_redundant_edge,
    "lemma-alpha": _chk_lemma_alpha,
    "nbrsincycle": _chk_nbrsincycle,
    "e2-identity": _chk_e2_identity,
    "removal-count": _chk_removal_count,
}

#: Properties whose hypotheses are never met below the given order:
#: prop3 needs nu <= 4 with mindeg >= 3 (smallest instances are the 3-regular
#: order-14 members), ddestab and tretton(iv) need a bivalent vertex of
#: second valency six in a nu <= 2 graph (smallest is SCh_1 at order 11),
#: and classprop10's hypothesis (connected, nu <= 0, outside the family) is
#: ruled out by the main theorem at every order.  Their checkers are
#: exercised on constructed instances in the test suite instead.
EXPECTED_VACUOUS = {"prop3": 14, "ddestab": 11, "tretton.iv": 11,
                    "classprop10": None}


def verify_property_suite(n_max: int,
                          property_filter: list[str] | None = None
                          ) -> list[PropertyCheckResult]:
    """Run the named structural checks over every triangle-free class."""
    ids = sorted(PROPERTY_CHECKERS) if property_filter is None else list(property_filter)
    for pid in ids:
        if pid not in PROPERTY_CHECKERS:
            raise GraphError(f"unknown property {pid!r}")
    results = {pid: PropertyCheckResult(pid, 0, 0) for pid in ids}
    for n in range(1, n_max + 1):
        spec = EnumerationSpec(order=n, connected_only=False, min_girth=4)
        level = level_rows(spec, None)
        for i in range(level.shape[0]):
            g = Graph(tuple(int(x) for x in level[i]))
            ctx = _Ctx(g)
            for pid in ids:
                hits, skips, details = PROPERTY_CHECKERS[pid](ctx)
                res = results[pid]
                res.graphs_tested += 1
                res.hypothesis_hits += hits
                res.skips += skips
                res.failures.extend((ctx.g6, d) for d in details)
    return [results[pid] for pid in ids]


# ---------------------------------------------------------------------------
# chain destabiliser lemmas
# ---------------------------------------------------------------------------

def _destab_sets(g: Graph, size: int) -> list[tuple[int, ...]]:
    mis = maximum_independent_sets(g)
    return [combo for combo in combinations(range(g.n), size)
            if _hits_all(mis, _mask_of(combo))]


def verify_chain_lemmas(k_max: int) -> list[PropertyCheckResult]:
    """Exhaustive subset-level verification of the chain lemmas."""
    if k_max < 2:
        raise GraphError("k_max must be >= 2")
    res3 = PropertyCheckResult("Chkdestab3", 0, 0)
    res4 = PropertyCheckResult("Chkdestab4", 0, 0)
    res_pe = PropertyCheckResult("Chkplusedge", 0, 0)
    res_bv = PropertyCheckResult("chain-ecbvconn", 0, 0)

    for k in range(2, k_max + 1):
        g = families.chain(k)
        g6 = to_graph6(g)
        mis = maximum_independent_sets(g)
        bivalent = [v for v in range(g.n) if g.degree(v) == 2]
        nbhd_sets = {tuple(sorted(g.closed_neighborhood([v]))) for v in bivalent}

        # sizes 1..3: destabilisers are exactly the closed bivalent stars
        res3.graphs_tested += 1
        for size in (1, 2, 3):
            for combo in combinations(range(g.n), size):
                res3.hypothesis_hits += 1
                destab = _hits_all(mis, _mask_of(combo))
                expected = size == 3 and combo in nbhd_sets
                if destab != expected:
                    res3.failures.append(
                        (g6, f"k={k}, S={combo}: destabilises={destab} "
                             f"expected={expected}"))

        # size 4: minimal + disconnected forces k = 3 and S = V_2
        res4.graphs_tested += 1
        destab3 = set(nbhd_sets)
        v2 = tuple(sorted(bivalent))
        for combo in combinations(range(g.n), 4):
            if not _hits_all(mis, _mask_of(combo)):
                continue
            minimal = not any(set(sub) <= set(combo) for sub in destab3)
            if not minimal:
                continue
            res4.hypothesis_hits += 1
            mask = _mask_of(combo)
            if _induces_connected_mask(g, mask):
                continue
            if not (k == 3 and combo == v2):
                res4.failures.append(
                    (g6, f"k={k}: disconnected minimal 4-destabiliser {combo}"))

        # bivalent reductions stay connected
        res_bv.graphs_tested += 1
        for v in bivalent:
            res_bv.hypothesis_hits += 1
            red = reduce_closed(g, [v])
            if not red.graph.is_connected():
                res_bv.failures.append((g6, f"k={k}, v={v}: G_v disconnected"))

    # chains plus one chord between nonadjacent bivalent vertices
    for k in range(3, k_max + 1):
        base = families.chain(k)
        bivalent = [v for v in range(base.n) if base.degree(v) == 2]
        biv_set = set(bivalent)
        res_pe.graphs_tested += 1
        for a, b in combinations(bivalent, 2):
            if base.has_edge(a, b):
                continue
            g = base.add_edge(a, b)
            mis = maximum_independent_sets(g)
            g6 = to_graph6(g)
            for combo in combinations(range(g.n), 3):
                inter = set(combo) & biv_set
                if len(inter) < 2:
                    continue
                if len(inter) == 2:
                    u, v = sorted(inter)
                    if base.has_edge(u, v):
                        continue
                res_pe.hypothesis_hits += 1
                if _hits_all(mis, _mask_of(combo)):
                    res_pe.failures.append(
                        (g6, f"k={k}, chord=({a},{b}), S={combo} destabilises"))
    return [res3, res4, res_pe, res_bv]


def _induces_connected_mask(g: Graph, mask: int) -> bool:
    start = (mask & -mask).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v] & mask
        frontier = nxt & ~seen
        seen |= nxt
    return seen == mask


# ---------------------------------------------------------------------------
# edge numbers
# ---------------------------------------------------------------------------

def edge_number_table(n_max: int, k_max: int | None = None) -> EdgeNumberTable:
    """Minimum edge counts over enumerated graphs, with the linear bounds."""
    if k_max is None:
        k_max = n_max
    rows: list[EdgeNumberCell] = []
    for n in range(1, n_max + 1):
        spec = EnumerationSpec(order=n, connected_only=False, min_girth=4)
        level = level_rows(spec, None)
        stats = scan_stats(level, n)
        variants = {
            "triangle-free": np.ones(level.shape[0], dtype=bool),
            "c4-free": stats[:, 3] == 0,
        }
        for variant, keep in variants.items():
            best: dict[int, tuple[int, str]] = {}
            for i in np.nonzero(keep)[0]:
                a = int(stats[i, 2])
                e = int(stats[i, 1])
                prev = best.get(a)
                if prev is None or e < prev[0]:
                    g6 = to_graph6(Graph(tuple(int(x) for x in level[i])))
                    best[a] = (e, g6)
                elif e == prev[0]:
                    g6 = to_graph6(Graph(tuple(int(x) for x in level[i])))
                    if g6 < prev[1]:
                        best[a] = (e, g6)
            for k in range(1, min(k_max, n) + 1):
                feasible = [best[a] for a in best if a <= k]
                if not feasible:
                    rows.append(EdgeNumberCell(n, k, variant, None, None, None))
                    continue
                min_e, cert = min(feasible)
                if variant == "triangle-free":
                    ok = min_e >= 6 * n - 13 * k
                else:
                    ok = 3 * min_e >= 17 * n - 35 * k
                rows.append(EdgeNumberCell(n, k, variant, min_e, cert, ok))
    return EdgeNumberTable(n_max=n_max, k_max=k_max, rows=rows)


# ---------------------------------------------------------------------------
# all-in-one
# ---------------------------------------------------------------------------

def run_suites(n_max: int, suites: list[str], jobs: int = 1,
               k_max_chains: int = 6,
               property_filter: list[str] | None = None) -> VerificationReport:
    """Run the selected suites and assemble one report."""
    timing: dict = {"jobs": jobs}
    t0 = time.perf_counter()
    report = verify_main_theorem(n_max, jobs=jobs) if "theorem" in suites else \
        VerificationReport(n_max=n_max, orders=[])
    timing["theorem_seconds"] = round(time.perf_counter() - t0, 3)
    if "properties" in suites:
        t1 = time.perf_counter()
        report.properties = verify_property_suite(n_max, property_filter)
        timing["properties_seconds"] = round(time.perf_counter() - t1, 3)
    if "chains" in suites:
        t1 = time.perf_counter()
        report.chain_lemmas = verify_chain_lemmas(k_max_chains)
        timing["chains_seconds"] = round(time.perf_counter() - t1, 3)
    if "edge-numbers" in suites:
        t1 = time.perf_counter()
        report.edge_numbers = edge_number_table(n_max)
        timing["edge_numbers_seconds"] = round(time.perf_counter() - t1, 3)
    report.timing = timing
    return report

"""One test per acceptance criterion; each records a PASS/FAIL line for the summary."""

import random
import time

from b3epg import fixtures
from b3epg.augment import represent_planar_no_sep_triangle
from b3epg.builder import add_a1b1_edge, build_base_triangle, build_representation
from b3epg.decomposition import ChordOnSide, classify_step, label_two_sided
from b3epg.graph import edge_key, find_separating_triangles, is_four_connected_triangulation
from b3epg.model import insert_empty_columns, insert_empty_rows
from b3epg.verify import audit_invariants, classify_shape, intersection_graph, verify_representation, verify_segments
from helpers import (
    all_labelings,
    four_connected_fixtures,
    ground_truth_valid,
    mutants,
    near_triangulation_fixtures,
    record_criterion,
    revalidate,
    to_segments,
)


def triangulation_graphs():
    named = [("octahedron", fixtures.octahedron()), ("icosahedron", fixtures.icosahedron())]
    return named + four_connected_fixtures()


def full_rep(g):
    t = label_two_sided(g, 2)
    return t, add_a1b1_edge(build_representation(t), t.a[0], t.b[0])


def test_criterion_1_base_case():
    problems = []
    worst = 0.0
    for p in (2, 1):
        t = label_two_sided(fixtures.triangle(), p, start=0)
        times = []
        for _ in range(20):
            start = time.perf_counter()
            rep = build_base_triangle(t.a, t.b)
            times.append(time.perf_counter() - start)
        worst = max(worst, max(times))
        got = intersection_graph(rep)
        (mid,) = set(t.a + t.b) - {t.a[0], t.b[0]}
        if got != {edge_key(t.a[0], mid), edge_key(mid, t.b[0])}:
            problems.append(f"p={t.p}: oracle {sorted(got)}")
        report = audit_invariants(rep, t)
        if not report.passed:
            problems.append(f"p={t.p}: {report.failures()}")
        expected_items = {"graph", "1", "2", "3", "4a", "4b", "4c", "4d", "4e", "4f", "4g"}
        expected_items |= {"5"} if t.q == 1 else {"6"}
        if set(report.items) != expected_items:
            problems.append(f"p={t.p}: audited items {sorted(report.items)}")
    ok = not problems and worst < 0.010
    record_criterion(1, ok, f"both labelings, worst build {worst * 1e3:.3f} ms (< 10 ms) {problems or ''}")
    assert ok, problems


def test_criterion_2_all_fixtures_verify():
    graphs = triangulation_graphs()
    fixture_count = len(four_connected_fixtures())
    failures = []
    start = time.perf_counter()
    for name, g in graphs:
        assert g.n <= 12
        assert is_four_connected_triangulation(g) and not find_separating_triangles(g)
        t, rep = full_rep(g)
        report = verify_representation(rep, g.edges)
        bad_shape = [
            v for v in g.vertices
            if v not in (t.a[0], t.b[0]) and classify_shape(rep.paths[v]) not in ("L", "hooked-L")
        ]
        if not report.passed or bad_shape or report.max_bends > 3:
            failures.append(name)
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 30 and fixture_count >= 50
    record_criterion(
        2, ok, f"{len(graphs) - len(failures)}/{len(graphs)} graphs ({fixture_count} fixtures), {elapsed:.2f} s (< 30 s)"
    )
    assert ok, failures


def test_criterion_3_induction_audit():
    failures = []
    levels = 0
    items_seen = set()

    def hook(rep, t):
        nonlocal levels
        levels += 1
        report = audit_invariants(rep, t)
        items_seen.update(report.items)
        if ("5" in report.items) != (t.q == 1) or ("6" in report.items) != (t.p == 1):
            failures.append(f"item selection wrong for p={t.p} q={t.q}")
        if not report.passed:
            failures.append(f"n={t.n} a={t.a} b={t.b}: {report.failures()}")

    builds = 0
    for _, g in triangulation_graphs():
        for start, p in all_labelings(g):
            build_representation(label_two_sided(g, p, start=start), audit=hook)
            builds += 1
    for _, g in near_triangulation_fixtures():
        for start, p in all_labelings(g):
            try:
                t = label_two_sided(g, p, start=start)
            except ChordOnSide:
                continue
            build_representation(t, audit=hook)
            builds += 1
            break
    ok = not failures and {"5", "6"} <= items_seen
    record_criterion(3, ok, f"{builds} builds, {levels} recursion levels audited, {len(failures)} failures")
    assert ok, failures[:5]


def test_criterion_4_grid_surgery_neutrality():
    rng = random.Random(2024)
    reps = [full_rep(g)[1] for _, g in four_connected_fixtures()]
    mismatches = 0
    for _ in range(1000):
        k = rng.randrange(len(reps))
        rep = reps[k]
        before = intersection_graph(rep)
        x0, y0, x1, y1 = rep.bbox()
        count = rng.randrange(0, 4)
        if rng.random() < 0.5:
            rep = insert_empty_rows(rep, rng.randrange(y0 - 1, y1 + 2), count)
        else:
            rep = insert_empty_columns(rep, rng.randrange(x0 - 1, x1 + 2), count)
        mismatches += intersection_graph(rep) != before
        reps[k] = rep
    ok = mismatches == 0
    record_criterion(4, ok, f"1000 random insertions, {mismatches} oracle changes")
    assert ok


def test_criterion_5_ownership_bound():
    worst = 0
    triple = 0
    reps = 0

    def hook(rep, t):
        nonlocal worst, triple, reps
        reps += 1
        worst = max(worst, rep.max_ownership())
        triple += sum(len(o) == 3 for o in rep.ownership.values())

    for _, g in triangulation_graphs():
        t = label_two_sided(g, 2)
        rep = add_a1b1_edge(build_representation(t, audit=hook), t.a[0], t.b[0])
        hook(rep, t)
    ok = worst <= 3
    record_criterion(5, ok, f"max ownership {worst} over {reps} representations ({triple} triple-owned edges seen)")
    assert ok


def test_criterion_6_corollary_pipeline():
    cases = [
        ("4-wheel", fixtures.wheel(4), None),
        ("cube", fixtures.cube(), fixtures.CUBE_AUGMENTATION),
    ]
    lines = []
    ok = True
    for name, g, aug in cases:
        start = time.perf_counter()
        rep = represent_planar_no_sep_triangle(g, aug)
        elapsed = time.perf_counter() - start
        report = verify_representation(rep, g.edges)
        good = report.passed and report.max_bends <= 3 and elapsed < 1.0
        ok &= good
        lines.append(f"{name}: {'ok' if good else 'bad'} {elapsed * 1e3:.0f} ms")
    record_criterion(6, ok, "; ".join(lines) + " (< 1 s each)")
    assert ok


def test_criterion_7_mutation_sensitivity():
    rng = random.Random(77)
    pool = [full_rep(g) for _, g in triangulation_graphs()]
    caught = missed = valid_mutants = wrongly_rejected = 0
    while caught + missed < 100:
        t, rep = rng.choice(pool)
        for v, _, _, new in mutants(rep, rng, 1):
            paths = dict(rep.paths)
            paths[v] = tuple(new)
            passed = verify_segments(to_segments(paths), t.graph.edges).passed
            if ground_truth_valid(paths, t.graph.edges):
                valid_mutants += 1
                wrongly_rejected += not passed
            elif passed:
                missed += 1
            else:
                caught += 1
    ok = missed == 0 and wrongly_rejected == 0
    record_criterion(
        7,
        ok,
        f"{caught}/100 invalid single-segment shifts caught; {valid_mutants} shifts left a valid rep "
        f"({wrongly_rejected} rejected)",
    )
    assert ok


def test_criterion_8_decomposition_totality():
    counts = {"ApRemoval": 0, "BqRemoval": 0, "Split": 0}
    labelings = 0
    failures = []
    for name, g in near_triangulation_fixtures():
        assert g.n <= 10
        for start, p in all_labelings(g):
            try:
                t = label_two_sided(g, p, start=start)
            except ChordOnSide:
                continue
            labelings += 1
            if t.n == 3:
                continue
            try:
                step = classify_step(t)
                revalidate(t, step)
            except Exception as exc:  # noqa: BLE001 - every failure is reported
                failures.append(f"{name} start={start} p={p}: {exc!r}")
                continue
            counts[type(step).__name__] += 1
    ok = not failures and counts["Split"] > 0
    record_criterion(
        8,
        ok,
        f"{labelings} 2-sided labelings of {len(near_triangulation_fixtures())} near-triangulations; steps {counts}",
    )
    assert ok, failures[:5]

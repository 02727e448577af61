//! Acceptance suite. Each test prints one `PASS` or `FAIL` line and then
//! asserts it. Budgets and sample sizes are pinned below.

mod support;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use polycontact::adjacency::{
    check_pmorphism, connected_spaces, project, project_line, trees, untie,
};
use polycontact::algebra::{
    audit_exhaustive, audit_sampled, is_connected_algebra, merge, AuditOptions, CellSet,
    MergeOptions,
};
use polycontact::logic::{eval, find_countermodel, parse_formula};
use polycontact::numeric::int;
use polycontact::pipeline::TRIANGLE_FORMULA;
use polycontact::{
    random, synthesize, verify, AdjacencySpace, ContactKind, FiniteContactAlgebra,
    IntervalPolytope, PolytopeAlgebra,
};
use support::oracle::{feature_separation_sq, flood_fill_sc};
use support::{poly, small_axiom_instances};

const AXIOM_SPACE_CELLS: usize = 5;
const AXIOM_SAMPLES: usize = 1000;
const AXIOM_BUDGET: Duration = Duration::from_secs(60);

const COINCIDENCE_PAIRS: usize = 2000;

const DISTRIBUTIVITY_TRIPLES: usize = 500;
const DISTRIBUTIVITY_DENOMINATOR: i64 = 4;
const DISTRIBUTIVITY_BUDGET: Duration = Duration::from_secs(120);

const ORACLE_PAIRS: usize = 200;
const ORACLE_BUDGET: Duration = Duration::from_secs(300);

const CONNECTEDNESS_SAMPLES: usize = 500;
const CONNECTEDNESS_GRAPH_CELLS: usize = 5;

const UNTIE_ISO_CELLS: usize = 6;
const UNTIE_RANDOM_SPACES: usize = 100;
const UNTIE_RANDOM_MAX_CELLS: usize = 12;
const UNTIE_RANDOM_EXTRA_EDGES: usize = 5;

const PROJECTION_TREE_CELLS: usize = 8;

const MERGE_MAX_CELLS: usize = 6;
const MERGE_BUDGET: Duration = Duration::from_secs(120);

const PIPELINE_SEARCH_BOUND: usize = 4;
const PIPELINE_BUDGET: Duration = Duration::from_secs(300);

const SOUNDNESS_CELLS: usize = 4;

fn outcome(id: u32, name: &str, failures: &[String], detail: String) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {id} {name}: {verdict} {detail}");
    for f in failures.iter().take(5) {
        println!("  {f}");
    }
    assert!(
        failures.is_empty(),
        "criterion {id} failed: {} failures",
        failures.len()
    );
}

fn within(budget: Duration, start: Instant, failures: &mut Vec<String>) -> String {
    let spent = start.elapsed();
    if spent > budget {
        failures.push(format!("runtime {spent:.1?} over budget {budget:?}"));
    }
    format!("({spent:.1?})")
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every graph (connected or not) on `n` labelled cells.
fn all_graphs(n: usize) -> impl Iterator<Item = AdjacencySpace> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    (0u32..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        AdjacencySpace::from_indices(n, &edges).unwrap()
    })
}

#[test]
fn criterion_01_contact_axioms() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let opts = AuditOptions { boolean_laws: true };
    let mut spaces = 0;
    for n in 1..=AXIOM_SPACE_CELLS {
        for space in connected_spaces(n) {
            let report = audit_exhaustive(&FiniteContactAlgebra::induced(space).unwrap(), opts);
            if !report.passed() {
                failures.push(format!("space {space}:\n{report}"));
            }
            spaces += 1;
        }
    }
    let line = audit_sampled(
        &PolytopeAlgebra::interval(ContactKind::Strong),
        AXIOM_SAMPLES,
        101,
        random::interval_polytope,
        opts,
    );
    if !line.passed() {
        failures.push(format!("interval algebra:\n{line}"));
    }
    let plane = audit_sampled(
        &PolytopeAlgebra::plane(ContactKind::Strong),
        AXIOM_SAMPLES,
        102,
        |r| random::plane_polytope(r, false),
        AuditOptions::default(),
    );
    if !plane.passed() {
        failures.push(format!("plane algebra:\n{plane}"));
    }
    let time = within(AXIOM_BUDGET, start, &mut failures);
    outcome(
        1,
        "contact axioms",
        &failures,
        format!("{spaces} spaces, {AXIOM_SAMPLES} + {AXIOM_SAMPLES} triples {time}"),
    );
}

#[test]
fn criterion_02_line_coincidence_and_hierarchy() {
    let mut failures = Vec::new();
    let mut r = rng(201);
    let mut sc_count = 0;
    for _ in 0..COINCIDENCE_PAIRS {
        let a = random::interval_polytope(&mut r);
        let b = random::interval_polytope(&mut r);
        let (sc, c) = (a.contact_sc(&b), a.contact_c(&b));
        sc_count += sc as usize;
        if sc != c {
            failures.push(format!("SC={sc} C={c} for {a} / {b}"));
        }
    }
    let left = IntervalPolytope::interval(int(0), int(1));
    let right = IntervalPolytope::interval(int(1), int(2));
    if !(left.contact_sc(&right) && !left.overlap(&right)) {
        failures.push("shared endpoint: expected SC without overlap".into());
    }
    let low = poly("poly { basic { 1 0 <= 0; 0 1 <= 0; } }");
    let high = poly("poly { basic { -1 0 <= 0; 0 -1 <= 0; } }");
    if !(low.contact_c(&high) && !low.contact_sc(&high)) {
        failures.push("vertical angles: expected C without SC".into());
    }
    outcome(
        2,
        "line coincidence and strict hierarchy",
        &failures,
        format!("{COINCIDENCE_PAIRS} pairs, {sc_count} in contact"),
    );
}

#[test]
fn criterion_03_plane_distributivity() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut r = rng(301);
    let mut premise = 0;
    for i in 0..DISTRIBUTIVITY_TRIPLES {
        // alternate bounded and unbounded triples
        let bounded = i % 2 == 0;
        let mut gen = || random::plane_polytope_on(&mut r, bounded, DISTRIBUTIVITY_DENOMINATOR);
        let (a, b, d) = (gen(), gen(), gen());
        if a.contact_sc(&b.union(&d)) {
            premise += 1;
            if !(a.contact_sc(&b) || a.contact_sc(&d)) {
                failures.push(format!("A = {a}\nB = {b}\nD = {d}"));
            }
        }
    }
    let time = within(DISTRIBUTIVITY_BUDGET, start, &mut failures);
    outcome(
        3,
        "plane distributivity",
        &failures,
        format!("{DISTRIBUTIVITY_TRIPLES} triples, premise held in {premise} {time}"),
    );
}

#[test]
fn criterion_04_sc_oracle() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut r = rng(401);
    let mut positives = 0;
    let mut least_sep_sq: Option<polycontact::Rational> = None;
    for _ in 0..ORACLE_PAIRS {
        let a = random::proper_plane_polytope(&mut r, true);
        let b = random::proper_plane_polytope(&mut r, true);
        let d2 = feature_separation_sq(&[&a, &b]);
        if least_sep_sq.as_ref().is_none_or(|m| d2 < *m) {
            least_sep_sq = Some(d2);
        }
        let exact = a.contact_sc(&b);
        positives += exact as usize;
        if exact != flood_fill_sc(&a, &b) {
            failures.push(format!("facet criterion says {exact}\nA = {a}\nB = {b}"));
        }
    }
    let time = within(ORACLE_BUDGET, start, &mut failures);
    outcome(
        4,
        "SC oracle agreement",
        &failures,
        format!(
            "{ORACLE_PAIRS} pairs, {positives} in contact, least separation² {} {time}",
            least_sep_sq.unwrap()
        ),
    );
}

#[test]
fn criterion_05_connectedness() {
    let mut failures = Vec::new();
    let mut r = rng(501);
    for _ in 0..CONNECTEDNESS_SAMPLES {
        let p = random::proper_interval_polytope(&mut r);
        if !p.contact_sc(&p.complement()) {
            failures.push(format!("line: {p}"));
        }
    }
    let mut plane_checked = 0;
    while plane_checked < CONNECTEDNESS_SAMPLES {
        let bounded = r.random_bool(0.5);
        let p = random::proper_plane_polytope(&mut r, bounded);
        let q = p.complement();
        if q.is_empty() {
            continue;
        }
        plane_checked += 1;
        if !p.contact_sc(&q) {
            failures.push(format!("plane: {p}"));
        }
    }
    let mut graphs = 0;
    for n in 1..=CONNECTEDNESS_GRAPH_CELLS {
        for space in all_graphs(n) {
            graphs += 1;
            let alg = FiniteContactAlgebra::induced(&space).unwrap();
            if space.is_connected() != is_connected_algebra(&alg) {
                failures.push(format!("graph {space}"));
            }
        }
    }
    outcome(
        5,
        "connectedness",
        &failures,
        format!("{CONNECTEDNESS_SAMPLES} + {CONNECTEDNESS_SAMPLES} polytopes, {graphs} graphs"),
    );
}

fn untie_failures(space: &AdjacencySpace) -> Vec<String> {
    let mut out = Vec::new();
    let u = match untie(space) {
        Ok(u) => u,
        Err(e) => return vec![format!("{space}: {e}")],
    };
    if !u.space.is_acyclic() || !u.space.is_connected() {
        out.push(format!("{space}: result {} is not a tree", u.space));
    }
    if !check_pmorphism(&u.map, &u.space, space) {
        out.push(format!("{space}: map is not a p-morphism"));
    }
    for step in &u.steps {
        if step.cycles_after >= step.cycles_before {
            out.push(format!(
                "{space}: cycles {} -> {}",
                step.cycles_before, step.cycles_after
            ));
        }
    }
    out
}

#[test]
fn criterion_06_untying() {
    let mut failures = Vec::new();
    let mut spaces = 0;
    for n in 1..=UNTIE_ISO_CELLS {
        for space in connected_spaces(n) {
            spaces += 1;
            failures.extend(untie_failures(space));
        }
    }
    let mut r = rng(601);
    let mut largest = 0;
    for _ in 0..UNTIE_RANDOM_SPACES {
        let n = r.random_range(1..=UNTIE_RANDOM_MAX_CELLS);
        let space = random::connected_space(&mut r, n, UNTIE_RANDOM_EXTRA_EDGES);
        largest = largest.max(space.simple_cycles().len());
        failures.extend(untie_failures(&space));
    }
    outcome(
        6,
        "untying",
        &failures,
        format!("{spaces} classes + {UNTIE_RANDOM_SPACES} random spaces, up to {largest} cycles"),
    );
}

#[test]
fn criterion_07_projection() {
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=PROJECTION_TREE_CELLS {
        for tree in trees(n) {
            for root in 0..n {
                cases += 1;
                let tag = format!("{tree} root {}", tree.name(root));
                let num = tree.numeration(root).unwrap();
                for x in 0..n {
                    let lower = num.lower_neighbours(&tree, x).len();
                    if lower != usize::from(x != root) {
                        failures.push(format!(
                            "{tag}: {} has {lower} lower neighbours",
                            tree.name(x)
                        ));
                    }
                    let paths = tree.simple_paths(root, x);
                    if paths.len() != 1 {
                        failures.push(format!(
                            "{tag}: {} root paths to {}",
                            paths.len(),
                            tree.name(x)
                        ));
                    } else if paths[0]
                        .windows(2)
                        .any(|w| num.number(w[0]) >= num.number(w[1]))
                    {
                        failures.push(format!(
                            "{tag}: numbers not increasing along {:?}",
                            paths[0]
                        ));
                    }
                }
                let arr = tree.arrangement(&num).unwrap();
                if arr.len() != 2 * n - 1 {
                    failures.push(format!("{tag}: arrangement length {}", arr.len()));
                }
                let seq = arr.seq();
                let images = project_line(&tree, &arr).unwrap();
                for x in 0..n {
                    for y in 0..n {
                        if x != y {
                            let consecutive = seq
                                .windows(2)
                                .any(|w| (w[0], w[1]) == (x, y) || (w[0], w[1]) == (y, x));
                            if consecutive != tree.adjacent(x, y) {
                                failures
                                    .push(format!("{tag}: consecutive({x},{y}) = {consecutive}"));
                            }
                        }
                        let related = x == y || tree.adjacent(x, y);
                        if images[x].contact_sc(&images[y]) != related {
                            failures.push(format!("{tag}: SC of images of {x},{y} != {related}"));
                        }
                    }
                }
            }
        }
    }
    outcome(7, "projection", &failures, format!("{cases} rooted trees"));
}

#[test]
fn criterion_08_merging() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let opts = MergeOptions {
        exhaustive_limit: MERGE_MAX_CELLS,
        ..MergeOptions::default()
    };
    let mut spaces: Vec<AdjacencySpace> = (1..=MERGE_MAX_CELLS).flat_map(trees).collect();
    for n in 1..=MERGE_MAX_CELLS {
        for space in connected_spaces(n) {
            let u = untie(space).unwrap().space;
            if !space.is_tree() && u.len() <= MERGE_MAX_CELLS {
                spaces.push(u);
            }
        }
    }
    let mut merged = 0;
    for space in &spaces {
        let arr = space.arrangement(&space.numeration(0).unwrap()).unwrap();
        let line = project_line(space, &arr).unwrap();
        let (_, report) = merge(space, line, IntervalPolytope::empty(), opts).unwrap();
        if !(report.exhaustive && report.passed()) {
            failures.push(format!("{space} on the line:\n{report}"));
        }
        let cyl = project(space, &arr, 2).unwrap();
        let zero = polycontact::CylinderPolytope::lift(IntervalPolytope::empty(), 2).unwrap();
        let (_, report) = merge(space, cyl, zero, opts).unwrap();
        if !(report.exhaustive && report.passed()) {
            failures.push(format!("{space} in the plane:\n{report}"));
        }
        merged += 2;
    }
    let time = within(MERGE_BUDGET, start, &mut failures);
    outcome(
        8,
        "merging",
        &failures,
        format!("{merged} projected spaces {time}"),
    );
}

#[test]
fn criterion_09_pipeline() {
    let start = Instant::now();
    let mut failures = Vec::new();

    let phi = parse_formula("C(p,q) => p.q != 0").unwrap();
    match synthesize(&phi, 2, 1) {
        Ok(Some(cert)) => {
            let (p, q) = (
                &cert.geometric_valuation["p"],
                &cert.geometric_valuation["q"],
            );
            if !(p.contact_sc(q).unwrap() && p.reg_meet(q).unwrap().is_empty()) {
                failures.push(format!("edge countermodel: p = {p}, q = {q}"));
            }
            if !verify(&cert).passed() {
                failures.push(format!("edge certificate:\n{}", verify(&cert)));
            }
        }
        other => failures.push(format!("edge formula: {other:?}")),
    }

    let instances = small_axiom_instances();
    let mut by_scheme: BTreeMap<&str, usize> = BTreeMap::new();
    for (scheme, inst) in &instances {
        *by_scheme.entry(scheme.name()).or_default() += 1;
        if let Some(cm) = find_countermodel(inst, PIPELINE_SEARCH_BOUND) {
            failures.push(format!("{scheme} instance {inst} falsified by\n{cm}"));
        }
    }
    if by_scheme.len() != polycontact::logic::Scheme::ALL.len() {
        failures.push(format!("only {} schemes instantiated", by_scheme.len()));
    }

    let tri = parse_formula(TRIANGLE_FORMULA).unwrap();
    match synthesize(&tri, 4, 2) {
        Ok(Some(cert)) => {
            if cert.untied_space.len() <= cert.discrete_space.len() {
                failures.push("triangle formula: untying added no cell".into());
            }
            let v = cert.verdicts;
            if v.discrete || v.untied || v.geometric {
                failures.push(format!("triangle formula verdicts {v:?}"));
            }
            let report = verify(&cert);
            if !report.passed() {
                failures.push(format!("triangle certificate:\n{report}"));
            }
        }
        other => failures.push(format!("triangle formula: {other:?}")),
    }

    let time = within(PIPELINE_BUDGET, start, &mut failures);
    outcome(
        9,
        "completeness pipeline",
        &failures,
        format!("{} axiom instances {time}", instances.len()),
    );
}

#[test]
fn criterion_10_soundness() {
    let mut failures = Vec::new();
    let instances = small_axiom_instances();
    let mut evaluations = 0usize;
    for n in 1..=SOUNDNESS_CELLS {
        for space in connected_spaces(n) {
            let alg = FiniteContactAlgebra::induced(space).unwrap();
            let elems: Vec<CellSet> = alg.elements().collect();
            for x in &elems {
                for y in &elems {
                    let v = BTreeMap::from([("x".to_string(), *x), ("y".to_string(), *y)]);
                    for (scheme, inst) in &instances {
                        evaluations += 1;
                        if !eval(inst, &alg, &v).unwrap() {
                            failures.push(format!(
                                "{scheme} instance {inst} false in {space} at x={x:?} y={y:?}"
                            ));
                        }
                    }
                }
            }
        }
    }
    outcome(
        10,
        "soundness",
        &failures,
        format!("{} instances, {evaluations} evaluations", instances.len()),
    );
}

//! Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if
//! any criterion fails.

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use sepham::bounds::{check_inequalities, eval_bounds, factorial};
use sepham::constructions::{
    bipartite_crossing_family, is_hamilton_decomposition, kernel_cycle_family, two_diff_family,
    walecki_decomposition, Mode,
};
use sepham::oracle::{oracle_quantity, Quantity, Status};
use sepham::relations::{cycles_degree3_equiv, is_crossing, is_two_separated};
use sepham::structure::{check_lemmas, count_incompatible, follower_property};
use sepham::universe::Arrangements;
use sepham::*;

const PIPELINE_BUDGET: Duration = Duration::from_secs(10);
const TWO_DIFF_BUDGET: Duration = Duration::from_secs(600);
const R6_TIME_LIMIT: Duration = Duration::from_secs(600);
const LEMMA_BUDGET: Duration = Duration::from_secs(300);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn big(x: u128) -> BigUint {
    BigUint::from(x)
}

fn pipeline() -> Outcome {
    let start = Instant::now();
    let limits = Limits::default();
    let bc = bipartite_crossing_family(12, Mode::Exact, &limits).map_err(err)?;
    let paths = bc.family.paths();
    let mut pairs = 0;
    for (i, p) in paths.iter().enumerate() {
        for q in &paths[i + 1..] {
            let w = is_crossing(p, q)
                .map_err(err)?
                .ok_or_else(|| format!("{p:?} and {q:?} do not cross"))?;
            ensure(w.verify(p.as_slice(), q.as_slice()), || {
                format!("witness {w} fails")
            })?;
            pairs += 1;
        }
    }
    let bound = eval_bounds(12).map_err(err)?.q_lower_new;
    let elapsed = start.elapsed();
    let size = BigRational::from_integer(BigInt::from(paths.len()));
    ensure(bound == BigRational::from_integer(15.into()), || {
        format!("bound {bound} != 15")
    })?;
    ensure(size >= bound, || format!("{} paths < {bound}", paths.len()))?;
    ensure(elapsed < PIPELINE_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "n=12: {} pairwise crossing paths >= 15, {pairs} pairs verified, {elapsed:.2?}",
        paths.len()
    ))
}

fn two_diff_sizes() -> Outcome {
    let start = Instant::now();
    let limits = Limits::default();
    let mut sizes = Vec::new();
    for m in 2..=6 {
        let f = two_diff_family(m, Mode::Exact, &limits).map_err(err)?;
        ensure(
            f.verify(Separation::ValueSeparated).map_err(err)?.ok(),
            || format!("m={m}: family not value-separated"),
        )?;
        let want = factorial(m) >> (m / 2);
        ensure(big(f.len() as u128) == want, || {
            format!("m={m}: {} != {want}", f.len())
        })?;
        sizes.push(f.len());
    }
    let elapsed = start.elapsed();
    ensure(elapsed < TWO_DIFF_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "m=2..6 sizes {sizes:?} = m!/2^floor(m/2), {elapsed:.2?}"
    ))
}

fn couple_order_classes() -> Outcome {
    let mut report = Vec::new();
    for n in [5, 6] {
        let mut classes: BTreeMap<CoupleOrder, Vec<Permutation>> = BTreeMap::new();
        for s in Arrangements::of_n(n) {
            let p = Permutation::new(s).map_err(err)?;
            classes
                .entry(p.couple_order().map_err(err)?)
                .or_default()
                .push(p);
        }
        let mut pairs = 0;
        for class in classes.values() {
            ensure(class.len() == 1 << (n / 2), || {
                format!("n={n}: class of {}", class.len())
            })?;
            for (i, a) in class.iter().enumerate() {
                for b in &class[i + 1..] {
                    ensure(is_two_separated(a, b).map_err(err)?.is_none(), || {
                        format!("n={n}: {a} and {b} are two-separated")
                    })?;
                    pairs += 1;
                }
            }
        }
        report.push(format!("n={n}: {} classes, {pairs} pairs", classes.len()));
    }
    Ok(format!("{}, zero two-separated pairs", report.join("; ")))
}

fn r_sandwich() -> Outcome {
    let limits = Limits::default();
    let r4 = oracle_quantity(Quantity::R, 4, None, &limits).map_err(err)?;
    ensure(r4.value == 1 && r4.status == Status::Exact, || {
        format!("{r4}")
    })?;
    let r5 = oracle_quantity(Quantity::R, 5, None, &limits).map_err(err)?;
    ensure(r5.status == Status::Exact && r5.value <= 30, || {
        format!("{r5}")
    })?;
    let r6 = oracle_quantity(Quantity::R, 6, Some(R6_TIME_LIMIT), &limits).map_err(err)?;
    ensure(r6.value <= 90, || format!("{r6}"))?;
    for r in [&r4, &r5, &r6] {
        ensure(
            r.witness
                .verify(Separation::TwoSeparated)
                .map_err(err)?
                .ok(),
            || format!("{r}: witness invalid"),
        )?;
    }
    Ok(format!("{r4}; {r5} <= 30; {r6} <= 90"))
}

fn structure_lemmas() -> Outcome {
    let start = Instant::now();
    let mut incompatible = 0u64;
    for n in 1..=8 {
        let id = Permutation::identity(n).map_err(err)?;
        for s in Arrangements::of_n(n) {
            let p = Permutation::new(s).map_err(err)?;
            let holds = follower_property(&p).holds();
            let unrelated = is_two_separated(&id, &p).map_err(err)?.is_none();
            ensure(holds == unrelated, || format!("(a) fails at {p}"))?;
            if holds {
                incompatible += 1;
                let v = check_lemmas(&p);
                ensure(v.is_empty(), || format!("{p}: {v:?}"))?;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < LEMMA_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "n<=8: (a)-(e) hold on all {incompatible} incompatible permutations, {elapsed:.2?}"
    ))
}

fn counting_bound() -> Outcome {
    let limits = Limits::default();
    let mut parts = Vec::new();
    for n in [8, 9] {
        let count = count_incompatible(n, &limits).map_err(err)?;
        let bound = sepham::bounds::incompat_total_bound(n).map_err(err)?;
        ensure(bound.is_integer(), || {
            format!("n={n}: bound {bound} not an integer")
        })?;
        ensure(BigRational::from_integer(count.into()) <= bound, || {
            format!("n={n}: {count} > {bound}")
        })?;
        parts.push(format!("n={n}: {count} <= {bound}"));
    }
    Ok(parts.join("; "))
}

fn shared_edge_cycles() -> Outcome {
    let limits = Limits::default();
    let mut sizes = Vec::new();
    for n in 4..=7 {
        let f = kernel_cycle_family(n, 1, 2, &limits).map_err(err)?;
        let want = factorial(n - 2);
        ensure(big(f.len() as u128) == want, || {
            format!("n={n}: {} != {want}", f.len())
        })?;
        let e = Edge::new(1, 2);
        ensure(f.cycles().iter().all(|c| c.contains_edge(e)), || {
            format!("n={n}: a cycle misses the fixed edge")
        })?;
        ensure(f.verify(Separation::SharedEdge).map_err(err)?.ok(), || {
            format!("n={n}: pair without a shared edge")
        })?;
        sizes.push(f.len());
    }
    let m5 = oracle_quantity(Quantity::Mcy, 5, None, &limits).map_err(err)?;
    ensure(m5.value == 6 && m5.status == Status::Exact, || {
        format!("{m5}")
    })?;
    let m4 = oracle_quantity(Quantity::Mcy, 4, None, &limits).map_err(err)?;
    let even = eval_bounds(4).map_err(err)?.mcy_upper_even;
    ensure(even == Some(BigRational::from_integer(3.into())), || {
        format!("{even:?}")
    })?;
    ensure(m4.status == Status::Exact && m4.value <= 3, || {
        format!("{m4}")
    })?;
    Ok(format!("kernel sizes n=4..7 {sizes:?}; {m5}; {m4} <= 3"))
}

fn degree3() -> Outcome {
    let mut parts = Vec::new();
    for n in [5, 6] {
        let cycles: Vec<HamiltonCycle> = Universe::Cycles
            .iter(n)
            .map_err(err)?
            .map(HamiltonCycle::canonical)
            .collect::<Result<_, _>>()
            .map_err(err)?;
        let mut pairs = 0;
        for (i, c) in cycles.iter().enumerate() {
            for d in &cycles[i + 1..] {
                let u = cycles_degree3_equiv(c, d).map_err(err)?;
                // Independent check: shared edge by edge-set intersection.
                let ce: HashSet<Edge> = c.edges().into_iter().collect();
                let shares = d.edges().iter().any(|e| ce.contains(e));
                ensure(
                    u.shares_edge == shares && u.has_degree3_vertex == shares,
                    || format!("{c:?} {d:?}: {u:?}"),
                )?;
                pairs += 1;
            }
        }
        parts.push(format!("n={n}: {pairs} pairs"));
    }
    ensure(parts[0] == "n=5: 66 pairs", || parts[0].clone())?;
    Ok(format!("{}, zero violations", parts.join("; ")))
}

fn walecki() -> Outcome {
    for n in (3..=13).step_by(2) {
        let cycles = walecki_decomposition(n).map_err(err)?;
        let mut seen = HashSet::new();
        for c in &cycles {
            for e in c.edges() {
                ensure(seen.insert(e), || format!("n={n}: edge {e:?} used twice"))?;
            }
        }
        ensure(seen.len() == n * (n - 1) / 2, || {
            format!("n={n}: {} edges covered", seen.len())
        })?;
        ensure(is_hamilton_decomposition(n, &cycles), || {
            format!("n={n}: verifier disagrees")
        })?;
    }
    Ok("odd n=3..13: cycles edge-disjoint and cover every edge once".into())
}

fn bounds_ledger() -> Outcome {
    let report = check_inequalities(6..=30).map_err(err)?;
    if let Some(c) = report.first_failure() {
        return Err(format!("n={} {}: {} vs {}", c.n, c.name, c.lhs, c.rhs));
    }
    let decisive = report.checks.iter().filter(|c| c.decisive).count();
    let notes: Vec<usize> = report
        .checks
        .iter()
        .filter(|c| !c.decisive && !c.holds)
        .map(|c| c.n)
        .collect();
    println!(
        "note: the middle link (2/(1+sqrt 2))^n ceil(n/2)! <= construction bound fails at \
         n in {notes:?}; it holds only for larger n and is not part of the pass condition"
    );
    Ok(format!("n=6..30: {decisive} decisive checks hold"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("bipartite crossing pipeline", pipeline),
        ("value-separated family sizes", two_diff_sizes),
        ("couple-order classes", couple_order_classes),
        ("two-separated sandwich", r_sandwich),
        ("structure lemmas", structure_lemmas),
        ("incompatibility counting bound", counting_bound),
        ("shared-edge cycle families", shared_edge_cycles),
        ("degree-3 equivalence", degree3),
        ("Walecki decomposition", walecki),
        ("bounds inequalities", bounds_ledger),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(msg) => println!("PASS {:>2} {name}: {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {msg}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}

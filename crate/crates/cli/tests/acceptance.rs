//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sebthom::atomfile::load_registry;
use sebthom_core::abgroup::{tensor, tor, FgAbGroup};
use sebthom_core::atoms::{pham, pow, quad, AtomDef, PieceSpec};
use sebthom_core::expr::parse_poly;
use sebthom_core::graded::{char_poly, equal, join, suspend, total_rank};
use sebthom_core::oracle::{
    check_isolated, milnor_groebner, pham_enumerate, tensor_tor_resolution,
    DEFAULT_ENUMERATION_BOUND,
};
use sebthom_core::VanishingData;

const SEED: u64 = 1729;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Ordered exponent tuples with entries in `lo..=hi` and length `1..=n`.
fn tuples(lo: i64, hi: i64, n: usize) -> Vec<Vec<i64>> {
    let mut all = Vec::new();
    let mut layer: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|t| {
                (lo..=hi).map(move |a| {
                    let mut t = t.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

fn brieskorn_poly(exps: &[i64]) -> String {
    exps.iter()
        .enumerate()
        .map(|(i, a)| format!("x{i}^{a}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn torsion_atom(name: &str, degree: i64, d: u64) -> VanishingData {
    let spec = PieceSpec {
        degree,
        torsion: if d > 1 { vec![BigUint::from(d)] } else { vec![] },
        ..Default::default()
    };
    AtomDef::from_specs(name, &[spec]).unwrap().data
}

/// Atoms for the law checks: powers, Pham sums of rank up to 100, quadrics
/// and the torsion atoms under `tests/data/corpus`.
fn corpus() -> Vec<(String, VanishingData)> {
    let mut out = Vec::new();
    for a in 2..=6 {
        out.push((format!("pow({a})"), pow(a).unwrap()));
    }
    for m in 1..=3 {
        out.push((format!("quad({m})"), quad(m).unwrap()));
    }
    for list in [
        vec![2, 3],
        vec![3, 4],
        vec![2, 3, 5],
        vec![3, 3, 3],
        vec![5, 6],
        vec![2, 2, 7],
        vec![4, 5, 6],
        vec![11, 11],
        vec![3, 5, 6, 2],
    ] {
        let v = pham(&list).unwrap();
        assert!(total_rank(&v) <= 100);
        out.push((format!("pham({list:?})"), v));
    }
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data/corpus");
    let registry = load_registry(&[dir]).expect("corpus loads");
    for atom in registry.iter() {
        out.push((atom.name.clone(), atom.data.clone()));
    }
    out
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    if t < limit {
        Ok(())
    } else {
        Err(format!("took {t:.1?}, limit {limit:?}"))
    }
}

fn join_enumeration() -> Outcome {
    let start = Instant::now();
    let mut lists = tuples(2, 5, 4);
    let exhaustive = lists.len();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut sampled = 0;
    while sampled < 250 {
        let n = rng.gen_range(1..=7);
        let list: Vec<i64> = (0..n).map(|_| rng.gen_range(2..=40)).collect();
        let size: u128 = list.iter().map(|&a| (a - 1) as u128).product();
        if size <= 100_000 {
            lists.push(list);
            sampled += 1;
        }
    }
    for list in &lists {
        let joined = pham(list).unwrap();
        let enumerated = pham_enumerate(list, DEFAULT_ENUMERATION_BOUND).unwrap();
        ensure!(joined == enumerated, "pham({list:?}) differs from enumeration");
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{exhaustive} exhaustive + {sampled} sampled lists (seed {SEED})"))
}

fn rank_vs_groebner() -> Outcome {
    let start = Instant::now();
    let lists = tuples(2, 5, 3);
    for list in &lists {
        let f = parse_poly(&brieskorn_poly(list)).unwrap();
        let mu = milnor_groebner(&f).map_err(|e| e.to_string())?;
        let rank = total_rank(&pham(list).unwrap()) as u64;
        ensure!(mu == rank, "{list:?}: groebner {mu}, join rank {rank}");
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("{} Brieskorn polynomials", lists.len()))
}

fn suspension_is_join_with_quadric() -> Outcome {
    let corpus = corpus();
    for (name, v) in &corpus {
        for m in 1..=3 {
            ensure!(
                equal(&join(v, &quad(m).unwrap()), &suspend(v, m).unwrap()),
                "{name}, m = {m}"
            );
        }
    }
    Ok(format!("{} atoms x m in 1..=3", corpus.len()))
}

fn monodromy_readout() -> Outcome {
    let v = join(&pow(2).unwrap(), &pow(3).unwrap());
    let c = char_poly(&v, 2);
    ensure!(c.to_string() == "Phi6(t)", "join(pow(2), pow(3)): {c}");
    ensure!(
        c.expanded_string().as_deref() == Some("t^2 - t + 1"),
        "expanded {:?}",
        c.expanded_string()
    );
    let c = char_poly(&pham(&[3, 3]).unwrap(), 2);
    ensure!(c.to_string() == "Phi1(t)^2*Phi3(t)", "pham(3,3): {c}");
    Ok("Phi6(t) and Phi1(t)^2*Phi3(t)".into())
}

/// Invariant factor chains with entries in `2..=12` and length at most 3.
fn chains() -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    let mut frontier: Vec<Vec<u64>> = vec![vec![]];
    for _ in 0..3 {
        frontier = frontier
            .iter()
            .flat_map(|c| {
                let last = c.last().copied().unwrap_or(1);
                (2..=12u64).filter(move |d| d % last == 0).map(move |d| {
                    let mut c = c.clone();
                    c.push(d);
                    c
                })
            })
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

fn tensor_tor_vs_resolution() -> Outcome {
    let start = Instant::now();
    let groups: Vec<FgAbGroup> = chains()
        .iter()
        .flat_map(|c| {
            (0..=3).map(move |r| FgAbGroup::new(r, c.iter().map(|&d| d.into()).collect()).unwrap())
        })
        .collect();
    let mut pairs = 0;
    for g in &groups {
        for h in &groups {
            let (t, r) = tensor_tor_resolution(g, h);
            ensure!(tensor(g, h) == t, "{g} (x) {h}: formula {}, resolution {t}", tensor(g, h));
            ensure!(tor(g, h) == r, "Tor({g}, {h}): formula {}, resolution {r}", tor(g, h));
            pairs += 1;
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{} groups, {pairs} pairs", groups.len()))
}

fn torsion_join() -> Outcome {
    let mut cases = 0;
    for (a, b) in [(1, 1), (2, 3), (-1, 4)] {
        for d in 2..=12u64 {
            for e in 2..=12u64 {
                let v = join(&torsion_atom("d", a, d), &torsion_atom("e", b, e));
                let g = num_integer::gcd(d, e);
                let expect = if g > 1 {
                    VanishingData::from_pieces([
                        (a + b - 1, sebthom_core::GradedPiece::torsion(FgAbGroup::cyclic(g)).unwrap()),
                        (a + b, sebthom_core::GradedPiece::torsion(FgAbGroup::cyclic(g)).unwrap()),
                    ])
                    .unwrap()
                } else {
                    VanishingData::empty()
                };
                ensure!(v == expect, "Z/{d} at {a} with Z/{e} at {b}: {v:?}");
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} degree/order combinations"))
}

fn algebraic_laws() -> Outcome {
    let corpus = corpus();
    for (n, v) in &corpus {
        ensure!(
            suspend(&suspend(v, 1).unwrap(), 1).unwrap() == suspend(v, 2).unwrap(),
            "double suspension of {n}"
        );
        for (m, w) in &corpus {
            let vw = join(v, w);
            ensure!(vw == join(w, v), "join({n}, {m}) is not commutative");
            ensure!(
                total_rank(&vw) == total_rank(v) * total_rank(w),
                "rank of join({n}, {m})"
            );
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut triples = 0;
    for _ in 0..300 {
        let pick = |rng: &mut ChaCha8Rng| &corpus[rng.gen_range(0..corpus.len())];
        let ((a, u), (b, v), (c, w)) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        // keep the largest products out of the sample
        if total_rank(u) * total_rank(v) * total_rank(w) > 200_000 {
            continue;
        }
        ensure!(
            join(&join(u, v), w) == join(u, &join(v, w)),
            "join of {a}, {b}, {c} is not associative"
        );
        triples += 1;
    }
    Ok(format!("{} atoms, {triples} triples (seed {SEED})", corpus.len()))
}

fn isolation_check() -> Outcome {
    // x*y*(x+y)*x expanded
    for src in ["x^2*y", "x^2*y^2", "x^3*y + x^2*y^2"] {
        ensure!(!check_isolated(&parse_poly(src).unwrap()), "{src} accepted");
    }
    let lists = tuples(2, 6, 3);
    for list in &lists {
        let f = parse_poly(&brieskorn_poly(list)).unwrap();
        ensure!(check_isolated(&f), "{list:?} rejected");
    }
    Ok(format!("3 rejected, {} Brieskorn forms accepted", lists.len()))
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_sebthom"))
            .args(["eval", "pham(3,4,5)", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure!(a.status.success() && b.status.success(), "eval failed");
    ensure!(a.stdout == b.stdout, "outputs differ");
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("join equals enumeration", join_enumeration),
        ("rank equals Groebner Milnor number", rank_vs_groebner),
        ("suspension equals join with quadric", suspension_is_join_with_quadric),
        ("monodromy characteristic polynomials", monodromy_readout),
        ("tensor and Tor against resolutions", tensor_tor_vs_resolution),
        ("torsion join", torsion_join),
        ("algebraic laws", algebraic_laws),
        ("isolated critical point check", isolation_check),
        ("deterministic JSON output", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {took:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

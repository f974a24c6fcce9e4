//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use nakayama_ext::algebra::{nakayama_algebra, BoundQuiverAlgebra};
use nakayama_ext::cli::config::SweepRanges;
use nakayama_ext::cli::sweep::{run_sweep, SweepReport};
use nakayama_ext::homology::{ext_table, minimal_resolution, Resolution};
use nakayama_ext::koszul::{build_periodicity_tower_in, gap_check, GapVerdict, ReductionTower, SymmetryClass};
use nakayama_ext::linalg::FieldSpec;
use nakayama_ext::rep::{simple, uniserial, QuiverModule};
use nakayama_ext::SEED;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const B: usize = 40;
const GRID: SweepRanges = SweepRanges { t: (2, 6), n: (1, 8) };
const UNISERIAL_PAIRS: usize = 50;

type Outcome = Result<String, String>;

fn check(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for p in [2, 3, 101] {
        let a = nakayama_algebra(3, 2, FieldSpec::new(p).unwrap()).unwrap();
        let s1 = simple(&a, 1).unwrap();
        let s2 = simple(&a, 2).unwrap();
        let fwd = ext_table(&s1, &s2, 20).unwrap();
        let bwd = ext_table(&s2, &s1, 20).unwrap();
        let expected: Vec<usize> = (1..=20).map(|i| i % 2).collect();
        check(fwd.dims() == expected.as_slice(), format!("GF({p}) Ext(S_1,S_2) = {:?}", fwd.dims()))?;
        check(bwd.is_zero(), format!("GF({p}) Ext(S_2,S_1) = {:?}", bwd.dims()))?;
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))?;
    Ok(format!("three fields, {elapsed:?}"))
}

fn criterion_2(sweep: &SweepReport, elapsed: Duration) -> Outcome {
    for c in &sweep.cells {
        check(c.syzygy_formula.checked_j >= 10, format!("({}, {}) only checked j <= {}", c.t, c.n, c.syzygy_formula.checked_j))?;
        check(
            c.syzygy_formula.omega2_verified && c.syzygy_formula.even_syzygies_verified,
            format!("({}, {}): {:?}", c.t, c.n, c.violations),
        )?;
    }
    check(elapsed < Duration::from_secs(60), format!("sweep took {elapsed:?}"))?;
    Ok(format!("{} cells, 4 workers, {elapsed:?}", sweep.cells.len()))
}

/// Everything computed per cell by the property criteria.
struct Cell {
    t: usize,
    n: usize,
    towers: Vec<(QuiverModule, ReductionTower)>,
    gap_checks: usize,
    gap_violations: Vec<String>,
    shift_checks: usize,
    shift_violations: Vec<String>,
    betti_checks: usize,
    betti_violations: Vec<String>,
}

fn tower_for(res: &Resolution, t: usize) -> ReductionTower {
    build_periodicity_tower_in(res, 2 * t).unwrap().expect("every module over the family is periodic or projective")
}

fn depth(a: &BoundQuiverAlgebra, t: usize) -> usize {
    (B + 1).max(2 * a.dim()).max(2 * t)
}

fn analyse_cell(t: usize, n: usize, rng: &mut ChaCha8Rng) -> Cell {
    let a: Arc<BoundQuiverAlgebra> = nakayama_algebra(t, n, FieldSpec::default()).unwrap();
    let simples: Vec<QuiverModule> = (1..=t).map(|i| simple(&a, i).unwrap()).collect();
    let mut cell = Cell {
        t,
        n,
        towers: Vec::new(),
        gap_checks: 0,
        gap_violations: Vec::new(),
        shift_checks: 0,
        shift_violations: Vec::new(),
        betti_checks: 0,
        betti_violations: Vec::new(),
    };

    let mut pairs: Vec<(String, QuiverModule, String, QuiverModule)> = Vec::new();
    for i in 1..=t {
        for j in 1..=t {
            pairs.push((format!("S_{i}"), simples[i - 1].clone(), format!("S_{j}"), simples[j - 1].clone()));
        }
    }
    for _ in 0..UNISERIAL_PAIRS {
        let (i, l) = (rng.random_range(1..=t), rng.random_range(1..=n + 1));
        let (j, k) = (rng.random_range(1..=t), rng.random_range(1..=n + 1));
        pairs.push((
            format!("U({i},{l})"),
            uniserial(&a, i, l).unwrap(),
            format!("U({j},{k})"),
            uniserial(&a, j, k).unwrap(),
        ));
    }

    let mut cache: Vec<(QuiverModule, Resolution, ReductionTower)> = Vec::new();
    for (ml, m, nl, target) in &pairs {
        let idx = match cache.iter().position(|(x, _, _)| x == m) {
            Some(k) => k,
            None => {
                let res = minimal_resolution(m, depth(&a, t));
                let tower = tower_for(&res, t);
                cache.push((m.clone(), res, tower));
                cache.len() - 1
            }
        };
        let (_, res, tower) = &cache[idx];
        let table = res.ext_table(target, B).unwrap();

        // criterion 3
        cell.gap_checks += 1;
        if gap_check(&table, tower).unwrap().verdict == GapVerdict::Violation {
            cell.gap_violations.push(format!("({t},{n}) {ml} -> {nl}: {:?}", table.dims()));
        }

        // criterion 4
        for step in tower.steps() {
            let d = step.degree();
            if !ext_table(step.cone(), target, B).unwrap().is_zero() {
                continue;
            }
            cell.shift_checks += 1;
            if let Some(i) = (1..=B - d).find(|&i| table.get(i) != table.get(i + d)) {
                cell.shift_violations.push(format!("({t},{n}) {ml} -> {nl} at degree {i}, shift {d}"));
            }
        }
    }

    // criterion 6, first half: every resolution above against every simple
    for (m, res, _) in &cache {
        for j in 1..=t {
            for i in 1..=B {
                cell.betti_checks += 1;
                let by_complex = res.ext_dim(&simples[j - 1], i).unwrap();
                let by_betti = res.ext_dim_simple_by_betti(j, i).unwrap();
                if by_complex != by_betti {
                    cell.betti_violations.push(format!("({t},{n}) dims {:?} vs S_{j} degree {i}", m.dims()));
                }
            }
        }
    }
    cell.towers = cache.into_iter().map(|(m, _, tw)| (m, tw)).collect();
    cell
}

fn criterion_3(cells: &[Cell]) -> Outcome {
    let checks: usize = cells.iter().map(|c| c.gap_checks).sum();
    let bad: Vec<&String> = cells.iter().flat_map(|c| &c.gap_violations).collect();
    check(bad.is_empty(), format!("{} violations, first {:?}", bad.len(), bad.first()))?;
    Ok(format!("{checks} pairs, 0 violations"))
}

fn criterion_4(cells: &[Cell]) -> Outcome {
    let checks: usize = cells.iter().map(|c| c.shift_checks).sum();
    let bad: Vec<&String> = cells.iter().flat_map(|c| &c.shift_violations).collect();
    check(checks > 0, "no tower step was exercised")?;
    check(bad.is_empty(), format!("{} violations, first {:?}", bad.len(), bad.first()))?;
    Ok(format!("{checks} shifted tables, 0 violations"))
}

fn criterion_5(sweep: &SweepReport) -> Outcome {
    let mut symmetric = 0;
    let mut witnesses = 0;
    for c in &sweep.cells {
        if c.r == 0 {
            symmetric += 1;
            check(c.asymmetric_pairs == 0, format!("({}, {}) is symmetric with asymmetric pairs", c.t, c.n))?;
            check(
                c.pairs.iter().all(|p| p.classification != SymmetryClass::Asymmetric),
                format!("({}, {}) has an asymmetric ordered pair", c.t, c.n),
            )?;
        }
        if c.t >= 3 && c.r == c.t - 1 {
            witnesses += 1;
            check(c.witness.confirmed == Some(true), format!("({}, {}) lacks the (S_1, S_2) witness", c.t, c.n))?;
            check(c.asymmetric_pairs >= 1, format!("({}, {}) reports no asymmetric pair", c.t, c.n))?;
        }
    }
    check(symmetric > 0 && witnesses > 0, "grid has no symmetric or witness cells")?;
    Ok(format!("{symmetric} symmetric cells clean, {witnesses} witness cells confirmed"))
}

fn criterion_6(cells: &[Cell]) -> Outcome {
    let checks: usize = cells.iter().map(|c| c.betti_checks).sum();
    let bad: Vec<&String> = cells.iter().flat_map(|c| &c.betti_violations).collect();
    check(bad.is_empty(), format!("Betti vs cohomology: {} mismatches, first {:?}", bad.len(), bad.first()))?;

    let mut tables = 0;
    for t in GRID.t.0..=GRID.t.1 {
        for n in GRID.n.0..=GRID.n.1 {
            let corpus = |p: u32| {
                let a = nakayama_algebra(t, n, FieldSpec::new(p).unwrap()).unwrap();
                (1..=t)
                    .flat_map(|i| (1..=n + 1).map(move |l| (i, l)))
                    .map(|(i, l)| uniserial(&a, i, l).unwrap())
                    .collect::<Vec<_>>()
            };
            let small = corpus(2);
            let large = corpus(101);
            for (ms, ml) in small.iter().zip(&large) {
                let rs = minimal_resolution(ms, B + 1);
                let rl = minimal_resolution(ml, B + 1);
                for (ns, nl) in small.iter().zip(&large) {
                    tables += 1;
                    let a = rs.ext_table(ns, B).unwrap();
                    let b = rl.ext_table(nl, B).unwrap();
                    check(
                        a.dims() == b.dims(),
                        format!("({t},{n}) GF(2) {:?} vs GF(101) {:?}", a.dims(), b.dims()),
                    )?;
                }
            }
        }
    }
    Ok(format!("{checks} Betti/cohomology entries, {tables} table pairs across GF(2) and GF(101)"))
}

fn criterion_7(cells: &[Cell]) -> Outcome {
    let mut steps = 0;
    for c in cells {
        for (m, tower) in &c.towers {
            for step in tower.steps() {
                steps += 1;
                let d = step.degree();
                let omega = minimal_resolution(m, d).syzygy(d - 1).clone();
                check(step.cone_is_projective(), format!("({}, {}) cone of dims {:?} is not projective", c.t, c.n, step.cone().dims()))?;
                check(
                    step.cone().dim() == m.dim() + omega.dim(),
                    format!("({}, {}) dim C = {} but dim X + dim Ω^{}X = {}", c.t, c.n, step.cone().dim(), d - 1, m.dim() + omega.dim()),
                )?;
                check(step.is_exact(), format!("({}, {}) cone sequence is not exact", c.t, c.n))?;
            }
        }
    }
    check(steps > 0, "no cones were built")?;
    Ok(format!("{steps} cones"))
}

fn criterion_8() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_nakayama-ext");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for run in 0..2 {
        let json = dir.path().join(format!("sweep{run}.json"));
        let csv = dir.path().join(format!("ext{run}.csv"));
        let status = Command::new(bin)
            .args(["sweep", "--t-range", "2..6", "--n-range", "1..8", "--max-degree", "40", "--workers", "4", "--out"])
            .arg(&json)
            .status()
            .map_err(|e| e.to_string())?;
        check(status.success(), format!("sweep exited with {status}"))?;
        let status = Command::new(bin)
            .args(["ext", "--algebra", r#"{"kind":"circular_nakayama","t":3,"n":2}"#])
            .args(["--module", "simple:1", "--target", "simple:2", "--max-degree", "40", "--out"])
            .arg(&csv)
            .status()
            .map_err(|e| e.to_string())?;
        check(status.success(), format!("ext exited with {status}"))?;
        outputs.push((std::fs::read(&json).unwrap(), std::fs::read(&csv).unwrap()));
    }
    check(outputs[0] == outputs[1], "artifacts differ between runs")?;
    Ok(format!("{} + {} bytes identical", outputs[0].0.len(), outputs[0].1.len()))
}

fn main() {
    let mut results: Vec<(usize, &str, Outcome)> = Vec::new();
    results.push((1, "example Ext tables", criterion_1()));

    let start = Instant::now();
    let sweep = run_sweep(GRID, B, FieldSpec::default(), None, 4).expect("sweep runs");
    let elapsed = start.elapsed();
    results.push((2, "syzygy formula sweep", criterion_2(&sweep, elapsed)));

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut cells = Vec::new();
    for t in GRID.t.0..=GRID.t.1 {
        for n in GRID.n.0..=GRID.n.1 {
            cells.push(analyse_cell(t, n, &mut rng));
        }
    }
    results.push((3, "vanishing gap suite", criterion_3(&cells)));
    results.push((4, "long exact sequence shift", criterion_4(&cells)));
    results.push((5, "symmetry suite", criterion_5(&sweep)));
    results.push((6, "oracle redundancy", criterion_6(&cells)));
    results.push((7, "cone invariants", criterion_7(&cells)));
    results.push((8, "determinism", criterion_8()));

    let mut failed = 0;
    for (k, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("criterion {k} ({name}): PASS - {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {k} ({name}): FAIL - {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Acceptance run: one PASS/FAIL line per criterion. Every comparison is
//! exact equality of reduced rational functions, so the tolerance is zero;
//! each criterion also has a wall-clock budget.

use macpieri::inverse_pieri::Side;
use macpieri::verify::{self, Report};
use std::time::{Duration, Instant};

/// Exact arithmetic: no numerical slack anywhere.
const TOLERANCE: u32 = 0;
const SEED: u64 = 7;

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Report,
}

fn mins(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

fn c1() -> Report {
    // 20 draws per family and dimension, n ≤ 3 (one-dimensional pairs cap themselves)
    verify::inversions(SEED, 20, 3)
}

fn c2() -> Report {
    verify::pieri(6, 3, 4)
}

fn c3() -> Report {
    let mut r = verify::length_two_displays();
    r.merge(verify::steps(Side::QG, 8, Some(4), None));
    r
}

fn c4() -> Report {
    let mut r = verify::full(Side::QG, 8);
    r.merge(verify::full(Side::PE, 8));
    r.merge(verify::omega_duality(8));
    r
}

fn c5() -> Report {
    let mut r = verify::schur_values();
    r.merge(verify::schur_jacobi_trudi(8));
    r.merge(verify::q_equals_one(8));
    r
}

fn c6() -> Report {
    let mut r = verify::steps(Side::Hl, 8, None, None);
    r.merge(verify::full(Side::Hl, 8));
    r.merge(verify::hall_littlewood_limit(SEED, 10));
    r.merge(verify::steps(Side::Mono, 8, None, None));
    r.merge(verify::full(Side::Mono, 8));
    r.merge(verify::monomial_is_hl_at_one());
    r.merge(verify::subset_sums(SEED, 4, 50));
    r
}

fn c7() -> Report {
    let mut r = verify::steps(Side::JackQ, 7, None, None);
    r.merge(verify::steps(Side::JackP, 7, None, None));
    r.merge(verify::full(Side::JackQ, 7));
    r.merge(verify::full(Side::JackP, 7));
    r.merge(verify::jack_limit(7));
    r
}

fn c8() -> Report {
    verify::hooks(8)
}

fn c9() -> Report {
    let mut r = verify::non_partitions(5);
    r.merge(verify::hall_littlewood_sequences());
    r
}

fn main() {
    let criteria = [
        Criterion { id: 1, title: "matrix inverse pairs", budget: mins(1), run: c1 },
        Criterion { id: 2, title: "Pieri coefficients and products", budget: mins(2), run: c2 },
        Criterion { id: 3, title: "one inversion step, |λ| ≤ 8, ℓ ≤ 4", budget: mins(5), run: c3 },
        Criterion { id: 4, title: "full g/e expansions and ω-duality, |λ| ≤ 8", budget: mins(10), run: c4 },
        Criterion { id: 5, title: "Schur specialization", budget: mins(5), run: c5 },
        Criterion { id: 6, title: "Hall–Littlewood and monomial", budget: mins(5), run: c6 },
        Criterion { id: 7, title: "Jack, |λ| ≤ 7", budget: mins(5), run: c7 },
        Criterion { id: 8, title: "hooks, r + s ≤ 8", budget: mins(5), run: c8 },
        Criterion { id: 9, title: "integer sequences", budget: mins(2), run: c9 },
    ];
    let filter: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for c in &criteria {
        if !filter.is_empty() && !filter.contains(&c.id) {
            continue;
        }
        let start = Instant::now();
        let rep = (c.run)();
        let took = start.elapsed();
        let ok = rep.passed() && rep.checks > 0 && took <= c.budget;
        println!(
            "criterion {}: {} ({}; {} checks, {} violations, tolerance {TOLERANCE}, {:.1}s of {}s)",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            rep.checks,
            rep.violations.len(),
            took.as_secs_f64(),
            c.budget.as_secs()
        );
        for v in rep.violations.iter().take(5) {
            println!("    {v}");
        }
        if !ok {
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}

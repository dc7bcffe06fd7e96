//! Acceptance suite: one pass/fail line per criterion.
//!
//! Run with `cargo test --test acceptance`. Criteria listed in
//! `KNOWN_UNATTAINABLE` are evaluated faithfully and reported as FAIL, but do
//! not fail the run; the reason is printed next to the line.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use betabound::catalogue::catalogue;
use betabound::cli::{isolate_roots, printed_constants};
use betabound::exact::{int, rat, Poly, Rational};
use betabound::proof::{
    self, big_f, big_g, d_f_dx, d_f_dy, positivity_status, sweep_cell, theorem_margin, IdentityCatalogue, Method,
    ReplayConfig, Status,
};
use betabound::sign;
use betabound::special::{self, Hp, Precision};
use betabound::yang::{self, SandwichParams, Verdict};
use num_traits::Signed;
use rand::{rngs::StdRng, Rng, SeedableRng};

const P: Precision = Precision::DEFAULT;

/// Criterion number and the reason it cannot pass as stated.
const KNOWN_UNATTAINABLE: &[(u32, &str)] = &[(
    7,
    "B - bound tends to G(0,y) = psi(1) - psi(y+1) + 2y/(1+y) as x -> 0, which is about 0.054 at y = 0.3 and 0.038 at y = 0.7",
)];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into() }
    }
}

fn tiny(e: i32) -> Hp {
    Hp::ten_pow(-e, P)
}

fn c1_exact_values() -> Outcome {
    let cat = catalogue();
    let half = rat(1, 2);
    let checks: Vec<(Rational, Rational)> = vec![
        (cat.p[0].eval(&rat(3, 20)), rat(75107551, 32000)),
        (cat.p[1].eval(&rat(1, 5)), rat(64124455182553, 15625)),
        (cat.p[2].eval(&int(1)), int(4298768)),
        (cat.p[3].eval(&int(1)), int(68461255039)),
        (cat.p[4].eval(&rat(9, 25)), rat(21101408, 1953125)),
        (cat.q[0].eval(&half), rat(-81, 8)),
        (cat.q[1].eval(&half), rat(771, 8)),
        (cat.q[2].eval(&half), rat(1029, 8)),
        (cat.q[3].eval(&half), rat(549, 8)),
        (cat.q[4].eval(&half), rat(33, 2)),
        (cat.q[5].eval(&half), rat(3, 2)),
    ];
    let ok = checks.iter().filter(|(a, b)| a == b).count();
    Outcome::new(ok == checks.len(), format!("{ok}/{} exact matches", checks.len()))
}

fn c2_root_enclosures() -> Outcome {
    match isolate_roots(&rat(1, 1_000_000)) {
        Ok(r) => {
            let digits = r.roots.iter().filter(|e| e.prefix_consistent).count();
            let widths_ok = r.roots.iter().all(|e| &e.hi - &e.lo <= rat(1, 1_000_000));
            let ordered = r.ordering_verified == Some(true);
            Outcome::new(
                digits == 5 && widths_ok && ordered,
                format!("{digits}/5 prefixes consistent with 1e-6 enclosures, disjoint increasing: {ordered}"),
            )
        }
        Err(e) => Outcome::new(false, e.to_string()),
    }
}

fn constants(range: std::ops::Range<usize>) -> Outcome {
    match printed_constants(P) {
        Ok(all) => {
            let slice = &all[range];
            let bad: Vec<_> = slice.iter().filter(|c| !c.within_one_ulp).map(|c| c.name).collect();
            let shown: Vec<_> = slice.iter().map(|c| format!("{}={}", c.name, c.value)).collect();
            Outcome::new(bad.is_empty(), format!("{}; mismatches: {bad:?}", shown.join(" ")))
        }
        Err(e) => Outcome::new(false, e.to_string()),
    }
}

fn c5_identities() -> Outcome {
    let cfg = ReplayConfig::default();
    let steps: Vec<_> = [proof::replay_diagonal(&cfg), proof::replay_case1(&cfg), proof::replay_case2(&cfg)]
        .into_iter()
        .flatten()
        .filter(|s| s.method == Method::ExactIdentity)
        .collect();
    let verified = steps.iter().filter(|s| s.status == Status::Verified).count();
    let catalogue_ok = IdentityCatalogue::all().iter().all(|i| i.holds());
    let forms = yang::verify_closed_forms();
    let forms_ok = forms.iter().filter(|c| c.matches).count();
    Outcome::new(
        verified == steps.len() && catalogue_ok && forms_ok == 4,
        format!("{verified}/{} identity steps, {forms_ok}/4 printed derivatives", steps.len()),
    )
}

fn c6_sandwich() -> Outcome {
    let params = match SandwichParams::compute(P) {
        Ok(p) => p,
        Err(e) => return Outcome::new(false, e.to_string()),
    };
    let ln10 = Hp::from_i64(10, P).ln();
    let mut holds = 0;
    let mut worst = Hp::from_i64(1, P);
    for k in 0..1000 {
        // 10^(-4 + 6k/999)
        let x = (Hp::from_ratio(-4 * 999 + 6 * k, 999, P) * &ln10).exp();
        if let Ok(r) = yang::sandwich_check(&x, &params) {
            if r.verdict == Verdict::Holds {
                holds += 1;
            }
            worst = worst.min(r.min_margin);
        }
    }
    let psi1_two = special::psi1(&Hp::from_i64(2, P)).unwrap();
    let closed = Hp::pi(P).powi(2) / 6 - 1;
    let lo = Hp::from_ratio(5031, 7802, P);
    let hi = Hp::from_ratio(2169, 3362, P);
    let inside = lo < psi1_two && psi1_two < hi && (&psi1_two - &closed).abs() < tiny(40);
    Outcome::new(
        holds == 1000 && inside,
        format!("{holds}/1000 points hold, smallest gap {worst:.3}; psi'(2) in (5031/7802, 2169/3362): {inside}"),
    )
}

fn c7_theorem_audit() -> Outcome {
    let summary = match proof::sweep_theorem(1000, P, |_| {}) {
        Ok(s) => s,
        Err(e) => return Outcome::new(false, e.to_string()),
    };
    let grid_ok = positivity_status(&summary.min_margin_new.value) == Status::Verified;
    let mut small_x = Vec::new();
    let mut small_ok = true;
    for (n, d) in [(3, 10), (7, 10), (1, 1)] {
        let m = theorem_margin(&tiny(6), &Hp::from_ratio(n, d, P)).unwrap();
        let ok = m < tiny(4);
        small_ok &= ok;
        small_x.push(format!("margin(1e-6,{n}/{d})={m:.3}{}", if ok { "" } else { " (>= 1e-4)" }));
    }
    let corner = sweep_cell(1000, 1000, 1000, P).unwrap();
    let one = Hp::one(P);
    let budget = P.error_budget();
    let equality = [&corner.beta, &corner.ivady_lower, &corner.ivady_upper].iter().all(|v| (*v - &one).abs() < budget);
    Outcome::new(
        grid_ok && small_ok && equality,
        format!(
            "grid 1000 min margin {:.6} > 0: {grid_ok}; {}; B = upper = lower = 1 at (1,1): {equality}",
            summary.min_margin_new.value,
            small_x.join(", ")
        ),
    )
}

fn c8_properties() -> Outcome {
    let mut rng = StdRng::seed_from_u64(20240611);
    let mut failures = Vec::new();
    let unit = |rng: &mut StdRng| Hp::from_ratio(rng.gen_range(1..=10_000), 10_000, P);

    for _ in 0..50 {
        let x = Hp::from_ratio(rng.gen_range(1..=100_000), 10_000, P);
        let d = special::psi(&(&x + 1)).unwrap() - special::psi(&x).unwrap() - x.recip();
        if d.abs() >= tiny(25) {
            failures.push("psi recurrence");
        }
        let y = unit(&mut rng);
        let b = special::beta(&x, &y).unwrap();
        let rel = (special::beta(&(&x + 1), &y).unwrap() - &b * &x / (&x + &y)).abs() / &b;
        if rel >= tiny(25) {
            failures.push("beta recurrence");
        }
    }
    for _ in 0..50 {
        let (x, y) = (unit(&mut rng), unit(&mut rng));
        if (big_f(&x, &y).unwrap() - big_f(&y, &x).unwrap()).abs() >= tiny(25) {
            failures.push("F symmetry");
        }
        if (big_g(&x, &y).unwrap() + big_g(&y, &x).unwrap()).abs() >= tiny(25) {
            failures.push("G antisymmetry");
        }
    }
    let h = tiny(8);
    for _ in 0..100 {
        let x = Hp::from_ratio(rng.gen_range(100..=9_900), 10_000, P);
        let y = Hp::from_ratio(rng.gen_range(100..=9_900), 10_000, P);
        let fd_x = (big_f(&(&x + &h), &y).unwrap() - big_f(&(&x - &h), &y).unwrap()) / (&h * 2);
        let fd_y = (big_f(&x, &(&y + &h)).unwrap() - big_f(&x, &(&y - &h)).unwrap()) / (&h * 2);
        // Central differences are accurate to O(h^2) = 1e-16 here.
        if (fd_x - d_f_dx(&x, &y).unwrap()).abs() >= tiny(12) || (fd_y - d_f_dy(&x, &y).unwrap()).abs() >= tiny(12) {
            failures.push("finite differences");
        }
    }
    let cat = catalogue();
    let points = [rat(3, 20), rat(1, 5), int(1), int(1), rat(9, 25)];
    for (p, x1) in cat.p.iter().zip(&points) {
        behavioural_positivity(p, x1, &mut rng, &mut failures);
    }
    for _ in 0..20 {
        let (heads, tails) = (rng.gen_range(1..4), rng.gen_range(1..4));
        let mut coeffs: Vec<i64> = (0..heads).map(|_| rng.gen_range(1..1000)).collect();
        coeffs.extend((0..tails).map(|_| -rng.gen_range(1..1000)));
        let x1 = rat(rng.gen_range(1..=100), 100);
        behavioural_positivity(&Poly::from_ints(&coeffs), &x1, &mut rng, &mut failures);
    }
    failures.dedup();
    Outcome::new(failures.is_empty(), format!("recurrences, symmetry, 100 finite differences, sign criterion; failures: {failures:?}"))
}

/// When the sign criterion certifies `p > 0` on `[0, x1]`, check it exactly
/// at 100 random points of the interval.
fn behavioural_positivity(p: &Poly, x1: &Rational, rng: &mut StdRng, failures: &mut Vec<&'static str>) {
    if let Ok(check) = sign::positive_below(p, x1) {
        if check.holds {
            for _ in 0..100 {
                let t = rat(rng.gen_range(0..=1_000_000), 1_000_000);
                if !p.eval(&(x1 * t)).is_positive() {
                    failures.push("sign criterion");
                }
            }
        }
    }
}

fn c9_replay_command() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for args in [vec!["replay"], vec!["--precision", "30", "replay"]] {
        let out = Command::new(env!("CARGO_BIN_EXE_betabound")).args(&args).env_remove("BETABOUND_PRECISION").output();
        match out {
            Ok(o) => {
                let text = String::from_utf8_lossy(&o.stdout);
                let summary = text.lines().last().unwrap_or_default().to_string();
                ok &= o.status.code() == Some(0) && summary.contains("failed 0");
                details.push(format!("{} -> exit {:?} ({summary})", args.join(" "), o.status.code()));
            }
            Err(e) => {
                ok = false;
                details.push(e.to_string());
            }
        }
    }
    Outcome::new(ok, details.join("; "))
}

fn main() -> ExitCode {
    type Check = fn() -> Outcome;
    let criteria: [(u32, &str, u64, Check); 9] = [
        (1, "exact catalogue values", 1, c1_exact_values),
        (2, "root enclosures", 1, c2_root_enclosures),
        (3, "constants to printed digits", 10, || constants(0..5)),
        (4, "proof constants to printed digits", 5, || constants(5..8)),
        (5, "exact identity suite", 30, c5_identities),
        (6, "sandwich property", 10, c6_sandwich),
        (7, "theorem audit", 60, c7_theorem_audit),
        (8, "property suites", 60, c8_properties),
        (9, "replay command", 60, c9_replay_command),
    ];
    let mut unexpected = 0;
    for (n, title, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(limit);
        let pass = outcome.pass && in_time;
        let known = KNOWN_UNATTAINABLE.iter().find(|(k, _)| *k == n);
        println!(
            "criterion {n} ({title}): {} [{:.2}s / {limit}s] {}",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            outcome.detail
        );
        if !pass {
            match known {
                Some((_, why)) => println!("    known unattainable: {why}"),
                None => unexpected += 1,
            }
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria failed");
        ExitCode::FAILURE
    }
}

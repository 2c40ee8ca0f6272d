//! Acceptance suite: one line per criterion, exact over ℚ.
//!
//! Run with `cargo test -p vmrt --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use vmrt::algebra::RationalSampler;
use vmrt::cli::main_with_args;
use vmrt::metabelian::{identities, GroupElement, MetabelianGroup, OmegaForm};
use vmrt::omega_builder::build_omega;
use vmrt::varieties::{builtin, certify_isotropic, IsotropyStatus, VarietyChart};
use vmrt::verify::Suite;

/// Builtins with an isotropic `ω` (constructed from the chart).
const GOOD_FIXTURES: [&str; 6] = [
    "veronese-2-3",
    "veronese-2-4",
    "veronese-3-3",
    "flat-conic",
    "flat-linear-3",
    "v3-conic",
];

type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn suite(name: &str) -> Suite {
    Suite::prepare(&builtin(name).unwrap(), 42).unwrap()
}

fn random_omega(rng: &mut RationalSampler, dim_w: usize, dim_u: usize) -> OmegaForm {
    let pairs = dim_w * (dim_w - 1) / 2;
    OmegaForm::new(dim_w, dim_u, (0..pairs).map(|_| rng.vector(dim_u)).collect()).unwrap()
}

fn criterion_1() -> Outcome {
    let mut rng = RationalSampler::new(1);
    let mut forms = vec![("heisenberg".to_string(), OmegaForm::heisenberg())];
    for name in ["veronese-2-3", "veronese-2-4"] {
        let chart = builtin(name).unwrap().chart;
        forms.push((name.to_string(), build_omega(&chart, 42).unwrap().omega));
    }
    forms.push(("random 10x5".to_string(), random_omega(&mut rng, 10, 5)));
    forms.push(("random 6x3".to_string(), random_omega(&mut rng, 6, 3)));
    for (label, omega) in &forms {
        if !identities::associativity(omega) || !identities::commutator(omega) {
            return outcome(false, format!("identity fails for {label}"));
        }
    }
    outcome(true, format!("{} forms, associativity and commutator symbolic", forms.len()))
}

fn criterion_2() -> Outcome {
    let mut forms: Vec<(String, OmegaForm)> = vec![("heisenberg".into(), OmegaForm::heisenberg())];
    for name in ["veronese-2-3", "veronese-2-4", "veronese-3-3", "flat-conic"] {
        forms.push((name.into(), suite(name).omega().clone()));
    }
    let mut total = 0;
    for (label, omega) in &forms {
        let group = MetabelianGroup::new(omega.clone());
        let mut rng = RationalSampler::new(2);
        for _ in 0..50 {
            let (u, v) = (rng.vector(group.dim_w()), rng.vector(group.dim_w()));
            let expected = omega.apply(&u, &v);
            for _ in 0..2 {
                let x = GroupElement::new(rng.vector(group.dim_w()), rng.vector(group.dim_u()));
                if group.levi_tensor(&x, &u, &v).unwrap() != expected {
                    return outcome(false, format!("{label}: Levi tensor differs from ω(u,v)"));
                }
            }
            total += 1;
        }
    }
    outcome(true, format!("{total} (u,v) pairs at 2 basepoints each"))
}

fn criterion_3() -> Outcome {
    let mut proven = Vec::new();
    let mut charts: Vec<(String, VarietyChart, OmegaForm)> = Vec::new();
    for name in ["veronese-2-3", "veronese-2-4", "veronese-3-3", "flat-conic", "flat-linear-3"] {
        let chart = builtin(name).unwrap().chart;
        let omega = build_omega(&chart, 42).unwrap().omega;
        charts.push((name.into(), chart, omega));
    }
    let conic = VarietyChart::plane_conic();
    charts.push(("flat ω on conic".into(), conic, OmegaForm::flat(3)));
    for (label, chart, omega) in &charts {
        if !certify_isotropic(chart, omega).unwrap().is_proven() {
            return outcome(false, format!("{label} not certified"));
        }
        proven.push(label.clone());
    }
    let adv = builtin("adversarial-cubic").unwrap();
    match certify_isotropic(&adv.chart, adv.omega.as_ref().unwrap()).unwrap().status {
        IsotropyStatus::Failed(w) if !w.value.iter().all(num_traits::Zero::is_zero) => {}
        _ => return outcome(false, "adversarial fixture was not rejected with a witness"),
    }
    outcome(true, format!("{} certified, adversarial rejected", proven.len()))
}

/// sl₂ weights of `Sym^k`: `k, k−2, …, −k`; `Λ²` takes sums of distinct
/// pairs; the decomposition peels off highest weights.
fn clebsch_gordan_lambda2(k: i64) -> Vec<i64> {
    let weights: Vec<i64> = (0..=k).map(|i| k - 2 * i).collect();
    let mut multiset = Vec::new();
    for i in 0..weights.len() {
        for j in i + 1..weights.len() {
            multiset.push(weights[i] + weights[j]);
        }
    }
    let mut parts = Vec::new();
    while let Some(&top) = multiset.iter().max() {
        for w in (-top..=top).step_by(2) {
            let pos = multiset.iter().position(|&x| x == w).expect("weight string");
            multiset.swap_remove(pos);
        }
        parts.push(top);
    }
    parts
}

fn criterion_4() -> Outcome {
    let cubic_parts = clebsch_gordan_lambda2(3);
    let quartic_parts = clebsch_gordan_lambda2(4);
    if cubic_parts != vec![4, 0] || quartic_parts != vec![6, 2] {
        return outcome(false, format!("CG oracle: {cubic_parts:?} {quartic_parts:?}"));
    }
    for (name, parts) in [("veronese-2-3", &cubic_parts), ("veronese-2-4", &quartic_parts)] {
        let chart = builtin(name).unwrap().chart;
        // W' is the top summand, U the rest.
        let expected_w_prime = (parts[0] + 1) as usize;
        let expected_u: usize = parts[1..].iter().map(|&m| (m + 1) as usize).sum();
        let mut first: Option<OmegaForm> = None;
        for seed in [1, 42, 2024] {
            let c = build_omega(&chart, seed).unwrap();
            if (c.dim_w_prime(), c.dim_u) != (expected_w_prime, expected_u) {
                return outcome(false, format!("{name} seed {seed}: ({}, {})", c.dim_w_prime(), c.dim_u));
            }
            match &first {
                None => first = Some(c.omega),
                Some(f) if *f != c.omega => return outcome(false, format!("{name}: ω depends on the seed")),
                _ => {}
            }
        }
    }
    outcome(true, "cubic (5,1), quartic (7,3), identical across seeds 1, 42, 2024")
}

fn run_check_on(name: &str, check: &str, samples: usize) -> Result<(String, Duration), String> {
    let started = Instant::now();
    let s = suite(name);
    let r = s.run_check(check, samples);
    if !r.passed || r.passes != samples {
        return Err(format!("{name}: {check} {}/{} witness {:?}", r.passes, r.samples, r.witness));
    }
    Ok((name.to_string(), started.elapsed()))
}

fn criterion_5() -> Outcome {
    let mut slowest = Duration::ZERO;
    for name in GOOD_FIXTURES {
        match run_check_on(name, "h-t-identity", 100) {
            Ok((_, t)) if t > Duration::from_secs(60) => {
                return outcome(false, format!("{name} took {:.1}s", t.as_secs_f64()))
            }
            Ok((_, t)) => slowest = slowest.max(t),
            Err(e) => return outcome(false, e),
        }
    }
    outcome(
        true,
        format!("{} fixtures x 100 samples, 2 charts, 5 symbolic; slowest {:.1}s", GOOD_FIXTURES.len(), slowest.as_secs_f64()),
    )
}

fn criterion_6() -> Outcome {
    for name in GOOD_FIXTURES {
        for check in ["tensor-split", "splitting-type"] {
            if let Err(e) = run_check_on(name, check, 20) {
                return outcome(false, e);
            }
        }
    }
    outcome(true, format!("{} fixtures x 20 samples", GOOD_FIXTURES.len()))
}

fn criterion_7() -> Outcome {
    let mut seen = Vec::new();
    for name in GOOD_FIXTURES {
        let s = suite(name);
        let fd = s.family.family_dimension(42).unwrap();
        let n = s.chart().ambient_dim() + s.omega().dim_u();
        if fd.rank != n - 1 + s.chart().param_dim() || !fd.matches() {
            return outcome(false, format!("{name}: rank {} expected {}", fd.rank, fd.expected));
        }
        seen.push(format!("{name}={}", fd.rank));
    }
    outcome(true, seen.join(" "))
}

fn criterion_8() -> Outcome {
    let started = Instant::now();
    for name in ["veronese-2-3", "flat-conic"] {
        if let Err(e) = run_check_on(name, "compactification", 100) {
            return outcome(false, e);
        }
    }
    let t = started.elapsed();
    outcome(t < Duration::from_secs(30), "100 fiber pairs, 100 equivariance triples, 100 lines per fixture")
}

fn criterion_9() -> Outcome {
    let run = |jobs: Option<&str>| {
        let mut args = vec!["vmrt", "verify", "builtin:veronese-2-3", "--seed", "7", "--samples", "25"];
        if let Some(j) = jobs {
            args.extend(["--jobs", j]);
        }
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = main_with_args(args, &mut out, &mut err);
        (code, out)
    };
    let (c1, a) = run(None);
    let (c2, b) = run(None);
    let (c3, c) = run(Some("1"));
    let ok = c1 == 0 && c2 == 0 && c3 == 0 && a == b && a == c && !a.is_empty();
    outcome(ok, format!("{} bytes, identical across 2 runs and --jobs 1", a.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("metabelian axioms", criterion_1, Some(5)),
        ("Levi tensor", criterion_2, Some(5)),
        ("isotropy certificates", criterion_3, Some(30)),
        ("ω construction dims", criterion_4, None),
        ("h_t identity", criterion_5, None),
        ("tensor split and splitting type", criterion_6, None),
        ("family dimension", criterion_7, None),
        ("compactification point set", criterion_8, Some(30)),
        ("determinism", criterion_9, None),
    ];
    let mut failed = 0;
    for (i, (title, f, limit)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            outcome(false, format!("panicked: {msg}"))
        });
        let elapsed = started.elapsed();
        let in_time = limit.is_none_or(|s| elapsed <= Duration::from_secs(s));
        let ok = result.ok && in_time;
        if !ok {
            failed += 1;
        }
        let budget = limit.map(|s| format!(" / {s}s")).unwrap_or_default();
        println!(
            "criterion {} {}: {} ({}) [{:.2}s{}]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            title,
            result.detail,
            elapsed.as_secs_f64(),
            budget
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}

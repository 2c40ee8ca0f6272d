//! Isotropy certificates: a proof by polynomial expansion, or a witness.

use vmrt::algebra::format_vec;
use vmrt::omega_builder::build_omega;
use vmrt::varieties::{builtin, certify_isotropic, IsotropyStatus};

pub fn run_example() -> vmrt::Result<()> {
    for name in ["veronese-2-3", "veronese-3-3", "flat-conic"] {
        let chart = builtin(name)?.chart;
        let omega = build_omega(&chart, 42)?.omega;
        let cert = certify_isotropic(&chart, &omega)?;
        println!("{name}: proven = {} ({} frame pairs)", cert.is_proven(), cert.pairs_checked);
    }

    let adversarial = builtin("adversarial-cubic")?;
    let omega = adversarial.omega.expect("fixture supplies ω");
    match certify_isotropic(&adversarial.chart, &omega)?.status {
        IsotropyStatus::Proven => println!("adversarial-cubic: unexpectedly proven"),
        IsotropyStatus::Failed(w) => println!(
            "adversarial-cubic: fails at p = {} for frame pair {:?}, ω = {}",
            format_vec(&w.point),
            w.pair,
            format_vec(&w.value)
        ),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> vmrt::Result<()> {
    run_example()
}

//! The h_t identity, the j_0/j_∞ frames and the family dimension on the
//! twisted cubic.

use vmrt::algebra::{format_scalar, int, q};
use vmrt::family::{GrassmannChart, LineFamily};
use vmrt::metabelian::GroupElement;
use vmrt::omega_builder::build_omega;
use vmrt::varieties::builtin_veronese;

pub fn run_example() -> vmrt::Result<()> {
    let chart = builtin_veronese(2, 3)?;
    let omega = build_omega(&chart, 42)?.omega;
    let family = LineFamily::new(chart, omega)?;

    let p = vec![q(2, 3)];
    let x = GroupElement::new(vec![int(1), int(-2), q(1, 5), int(3)], vec![int(4)]);
    let (delta, t) = (vec![int(1)], q(7, 2));

    let report = family.check_h_t_identity(&p, &x, &delta, &t)?;
    println!(
        "standard chart {:?}: residual {:?}, holds = {}",
        report.chart.pivots(),
        report.residual.iter().map(format_scalar).collect::<Vec<_>>(),
        report.holds()
    );
    let alternate = GrassmannChart::alternate(&family.plucker_at(&p, &x)?).expect("second chart");
    let again = family.check_h_t_identity_in(&alternate, &p, &x, &delta, &t)?;
    println!("chart {:?}: holds = {}", alternate.pivots(), again.holds());

    let split = family.tensor_split_frames(&p, &x)?;
    println!("rank [j0 | j∞] = {}, linear in t: {}", split.combined_rank, split.is_linear());
    println!("O(-1) witness passes: {}", family.splitting_type_witness(&p, &x)?.passes());

    let dim = family.family_dimension(42)?;
    println!("family dimension {} (expected {})", dim.rank, dim.expected);
    Ok(())
}

#[allow(dead_code)]
fn main() -> vmrt::Result<()> {
    run_example()
}

//! Boundary cosets, μ̂ and the extended group action.

use vmrt::algebra::{format_vec, int, q};
use vmrt::compactification::XPoint;
use vmrt::compactification::{Compactification, PBundlePoint};
use vmrt::family::LineFamily;
use vmrt::lines::line_through;
use vmrt::metabelian::GroupElement;
use vmrt::omega_builder::build_omega;
use vmrt::varieties::builtin_veronese;

pub fn run_example() -> vmrt::Result<()> {
    let chart = builtin_veronese(2, 3)?;
    let omega = build_omega(&chart, 42)?.omega;
    let comp = Compactification::new(LineFamily::new(chart, omega)?);
    let group = comp.group().clone();

    let p = vec![q(1, 2)];
    let w = comp.chart().eval(&p);
    let x = GroupElement::new(vec![int(1), int(0), int(2), int(-1)], vec![int(3)]);
    let line = line_through(&group, &x, &w)?;
    let boundary = comp.mu_hat(&PBundlePoint::OnSection(line.clone()))?;
    if let XPoint::Boundary(b) = &boundary {
        let rep = b.coset_rep();
        println!("μ̂(σ(ℓ)) over p = {}: coset of ({}, {})", format_vec(b.p()), format_vec(&rep.w), format_vec(&rep.u));
    }

    // Translating the base along T_s S⁺ lands in the same coset.
    let tangent = comp.chart().differential(&p, &[int(5)]);
    let shifted = group.mul(&x, &GroupElement::exp_w(tangent, group.dim_u()));
    let other = comp.mu_hat(&PBundlePoint::OnSection(line_through(&group, &shifted, &w)?))?;
    println!("same boundary point after a tangent shift: {}", other == boundary);

    let g = GroupElement::new(vec![int(2), int(1), int(0), int(1)], vec![q(-1, 3)]);
    let lhs = comp.mu_hat(&comp.act_on_bundle(&g, &PBundlePoint::OnSection(line.clone()))?)?;
    let rhs = comp.g_action(&g, &boundary)?;
    println!("equivariant: {}", lhs == rhs);

    let cl = comp.compactified_line(&line, &[int(0), int(1), int(2)])?;
    println!("compactified line: {} affine points and one point at infinity", cl.interior.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> vmrt::Result<()> {
    run_example()
}

//! The three-dimensional Heisenberg group as the smallest metabelian group.

use vmrt::algebra::{format_scalar, format_vec, int};
use vmrt::metabelian::{identities, AlgebraElement, GroupElement, MetabelianGroup, OmegaForm};

pub fn run_example() -> vmrt::Result<()> {
    let group = MetabelianGroup::new(OmegaForm::heisenberg());
    let e1 = GroupElement::new(vec![int(1), int(0)], vec![int(0)]);
    let e2 = GroupElement::new(vec![int(0), int(1)], vec![int(0)]);
    let prod = group.multiply(&e1, &e2)?;
    println!("e1·e2 = ({}, {})", format_vec(&prod.w), format_scalar(&prod.u[0]));

    let commutator = group.mul(&group.mul(&e1, &e2), &group.mul(&group.inverse(&e1), &group.inverse(&e2)));
    println!("[e1, e2] in the group = {}", format_scalar(&commutator.u[0]));

    let bracket = group.bracket(
        &AlgebraElement::new(vec![int(1), int(0)], vec![int(0)]),
        &AlgebraElement::new(vec![int(0), int(1)], vec![int(0)]),
    );
    println!("[e1, e2] in the algebra = {}", format_scalar(&bracket.u[0]));

    let mc = group.maurer_cartan_log_derivative(&e1, &[int(0), int(1)])?;
    println!("Maurer–Cartan at e1 along e2: w = {}, u = {}", format_vec(&mc.w), format_scalar(&mc.u[0]));

    let levi = group.levi_tensor(&group.identity(), &[int(1), int(0)], &[int(0), int(1)])?;
    println!("Levi(e1, e2) = {}", format_scalar(&levi[0]));

    let omega = group.omega();
    assert!(identities::associativity(omega) && identities::commutator(omega));
    println!("associativity and commutator identities hold symbolically");
    Ok(())
}

#[allow(dead_code)]
fn main() -> vmrt::Result<()> {
    run_example()
}

//! Horizontal lines, their Plücker images and boundary points.

use vmrt::algebra::{format_scalar, int, q};
use vmrt::lines::{boundary_point, line_through, plucker_embed};
use vmrt::metabelian::{GroupElement, MetabelianGroup, OmegaForm};

pub fn run_example() -> vmrt::Result<()> {
    let group = MetabelianGroup::new(OmegaForm::heisenberg());
    let x = GroupElement::new(vec![int(0), int(1)], vec![int(0)]);
    let line = line_through(&group, &x, &[int(1), int(0)])?;
    for t in [int(0), int(1), q(-3, 2)] {
        let p = line.point_at(&group, &t);
        println!(
            "t = {:>4}: w = ({}, {}), u = {}",
            format_scalar(&t),
            format_scalar(&p.w[0]),
            format_scalar(&p.w[1]),
            format_scalar(&p.u[0])
        );
    }

    let plucker = plucker_embed(&group, &line);
    println!("echelon basis {:?}", plucker.basis());
    println!("Plücker relations hold: {}", plucker.satisfies_plucker_relations());
    println!("boundary point {:?}", boundary_point(&group, &line).to_strings());

    // Moving the base point along the line does not change the line.
    let moved = group.translate_along(&x, &[int(1), int(0)], &int(5));
    assert_eq!(line_through(&group, &moved, &[int(2), int(0)])?, line);
    Ok(())
}

#[allow(dead_code)]
fn main() -> vmrt::Result<()> {
    run_example()
}

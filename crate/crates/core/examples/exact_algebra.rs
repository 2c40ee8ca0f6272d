//! Exact rationals, sparse polynomials, first-order jets and row reduction.

use vmrt::algebra::{format_scalar, int, q, rank, wedge, Jet1, Mat, MultiPoly};

pub fn run_example() -> vmrt::Result<()> {
    let names = vec!["s".to_string(), "t".to_string()];
    let f = MultiPoly::parse("s^3 - 2*s*t + 1/2", &names)?;
    let df = f.derivative(0);
    println!("f = {}, ∂f/∂s = {}", f.display_with(&names), df.display_with(&names));

    // The jet of f at (1, 3) along e_s carries the same derivative.
    let jet = f.eval(&[Jet1::variable(int(1), 0, 1), Jet1::constant(int(3))]);
    assert_eq!(jet.partial(0), df.eval(&[int(1), int(3)]));
    println!("f(1,3) = {}, ∂_s f(1,3) = {}", format_scalar(&jet.value), format_scalar(&jet.partial(0)));

    let m = Mat::from_rows(
        &[vec![int(1), int(2), int(3)], vec![int(2), int(4), int(6)], vec![q(1, 2), int(0), int(1)]],
        3,
    );
    let (r, pivots) = m.rref();
    println!("rank {} pivots {:?}\n{:?}", rank(&m), pivots, r);

    let e = wedge(&[int(1), int(0), int(0)], &[int(0), int(1), int(0)])?;
    println!("e0 ∧ e1 = {:?}", e.iter().map(format_scalar).collect::<Vec<_>>());
    Ok(())
}

#[allow(dead_code)]
fn main() -> vmrt::Result<()> {
    run_example()
}

//! Constructing ω from the tangent planes of a Veronese curve or surface.

use vmrt::omega_builder::{build_omega, symmetric_power_dims};
use vmrt::varieties::{builtin_veronese, OmegaSpec};

pub fn run_example() -> vmrt::Result<()> {
    for (r, k) in [(2, 3), (2, 4), (3, 3)] {
        let chart = builtin_veronese(r, k)?;
        let c = build_omega(&chart, 42)?;
        let (dim_w, dim_l2) = symmetric_power_dims(r, k);
        println!(
            "Sym^{k} C^{r}: dim W = {dim_w}, dim Λ²W = {dim_l2}, dim W' = {}, dim U = {}, points used {}",
            c.dim_w_prime(),
            c.dim_u,
            c.points_used
        );
    }

    let cubic = build_omega(&builtin_veronese(2, 3)?, 42)?;
    println!("{}", serde_json::to_string_pretty(&OmegaSpec::from_form(&cubic.omega))?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> vmrt::Result<()> {
    run_example()
}

//! Construction of `ω` from a chart: `W'` is the span in `Λ²W` of the tangent
//! planes of `S⁺`, `U` is the complement spanned by the non-pivot coordinates
//! of `W'`, and `ω` is the projection `Λ²W → U` along `W'`.

use num_traits::{One, Zero};

use crate::algebra::{wedge, Echelon, Mat, RationalSampler, Scalar};
use crate::error::{Error, Result};
use crate::metabelian::OmegaForm;
use crate::varieties::VarietyChart;

/// Consecutive sample points that must add no rank before the span is
/// considered saturated.
pub const STABILITY_WINDOW: usize = 25;
/// Sample points tried before the grid is doubled once.
pub const INITIAL_GRID: usize = 200;

#[derive(Clone, Debug)]
pub struct OmegaConstruction {
    pub label: String,
    pub dim_lambda2: usize,
    /// Rows form the reduced echelon basis of `W' ⊂ Λ²W`.
    pub w_prime_basis: Mat,
    pub dim_u: usize,
    /// Coordinates of `Λ²W` spanning the complement `U`, in order.
    pub complement_coords: Vec<usize>,
    pub omega: OmegaForm,
    /// Rank of the accumulated span after each accepted sample point.
    pub rank_history: Vec<usize>,
    pub points_used: usize,
    pub points_skipped: usize,
    pub seed: u64,
}

impl OmegaConstruction {
    pub fn dim_w_prime(&self) -> usize {
        self.w_prime_basis.rows()
    }
}

/// `(dim Sym^k ℚ^r, dim Λ² Sym^k ℚ^r)`.
pub fn symmetric_power_dims(r: usize, k: usize) -> (usize, usize) {
    let n = binomial(k + r - 1, r - 1);
    (n, binomial(n, 2))
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Builds `ω` for `chart` by rank saturation of tangent-plane wedges.
pub fn build_omega(chart: &VarietyChart, seed: u64) -> Result<OmegaConstruction> {
    match saturate(chart, seed, INITIAL_GRID) {
        Ok(c) => Ok(c),
        Err(Error::SaturationNotReached { .. }) => saturate(chart, seed, 2 * INITIAL_GRID),
        Err(e) => Err(e),
    }
}

fn saturate(chart: &VarietyChart, seed: u64, grid: usize) -> Result<OmegaConstruction> {
    let n = chart.ambient_dim();
    let dim_lambda2 = n * n.saturating_sub(1) / 2;
    let mut span = Echelon::new(dim_lambda2);
    let mut rng = RationalSampler::new(seed);
    let mut history = Vec::new();
    let mut quiet = 0usize;
    let mut used = 0usize;
    let mut skipped = 0usize;

    for _ in 0..grid {
        let p = chart.sample_point(&mut rng);
        let frame = match chart.affine_tangent_frame(&p) {
            Ok(f) => f,
            Err(Error::FrameDegenerate { .. }) => {
                skipped += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        used += 1;
        let mut grew = false;
        for a in 0..frame.len() {
            for b in a + 1..frame.len() {
                grew |= span.insert(&wedge(&frame[a], &frame[b])?);
            }
        }
        history.push(span.rank());
        quiet = if grew { 0 } else { quiet + 1 };
        if quiet >= STABILITY_WINDOW {
            return Ok(finish(chart, span, history, used, skipped, seed));
        }
    }
    Err(Error::SaturationNotReached { points: grid })
}

fn finish(
    chart: &VarietyChart,
    span: Echelon,
    rank_history: Vec<usize>,
    points_used: usize,
    points_skipped: usize,
    seed: u64,
) -> OmegaConstruction {
    let n = chart.ambient_dim();
    let dim_lambda2 = span.dim();
    let complement: Vec<usize> = (0..dim_lambda2)
        .filter(|c| !span.pivots().contains(c))
        .collect();
    // ω(e_i ∧ e_j): reduce the unit vector along W' and read the remaining
    // coordinates, which are supported on the complement.
    let table: Vec<Vec<Scalar>> = (0..dim_lambda2)
        .map(|k| {
            let mut unit = vec![Scalar::zero(); dim_lambda2];
            unit[k] = Scalar::one();
            let reduced = span.reduce(&unit);
            complement.iter().map(|&c| reduced[c].clone()).collect()
        })
        .collect();
    let omega = OmegaForm::new(n, complement.len(), table).expect("table has the pair count of W");
    OmegaConstruction {
        label: chart.label().to_string(),
        dim_lambda2,
        w_prime_basis: span.to_mat(),
        dim_u: complement.len(),
        complement_coords: complement,
        omega,
        rank_history,
        points_used,
        points_skipped,
        seed,
    }
}

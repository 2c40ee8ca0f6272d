use rayon::prelude::*;

use super::VarietyChart;
use crate::algebra::{int, is_zero_vec, MultiPoly, RationalSampler, Scalar};
use crate::error::{Error, Result};
use crate::metabelian::OmegaForm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropyWitness {
    pub point: Vec<Scalar>,
    /// Frame indices: 0 is `φ`, `i > 0` is `∂_iφ`.
    pub pair: (usize, usize),
    pub value: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsotropyStatus {
    /// Every `ω(f_a, f_b)` expands to the zero polynomial.
    Proven,
    Failed(IsotropyWitness),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotropyCertificate {
    pub label: String,
    pub status: IsotropyStatus,
    pub pairs_checked: usize,
}

impl IsotropyCertificate {
    pub fn is_proven(&self) -> bool {
        self.status == IsotropyStatus::Proven
    }
}

/// Decides whether `ω` vanishes identically on the affine tangent frames of
/// the chart, by expanding `ω(f_a(p), f_b(p))` as polynomials in `p`.
///
/// On failure the witness is a concrete parameter point where the first
/// non-vanishing pair evaluates to a nonzero `U`-vector.
pub fn certify_isotropic(chart: &VarietyChart, omega: &OmegaForm) -> Result<IsotropyCertificate> {
    if chart.ambient_dim() != omega.dim_w() {
        return Err(Error::DimensionMismatch {
            expected: omega.dim_w(),
            got: chart.ambient_dim(),
        });
    }
    let frame = chart.frame_polys();
    let pairs: Vec<(usize, usize)> = (0..frame.len())
        .flat_map(|a| (a + 1..frame.len()).map(move |b| (a, b)))
        .collect();
    let residues: Vec<Vec<MultiPoly>> = pairs
        .par_iter()
        .map(|&(a, b)| omega.apply(&frame[a], &frame[b]))
        .collect();

    let failing = pairs
        .iter()
        .zip(&residues)
        .find(|(_, r)| r.iter().any(|p| !p.is_zero()));
    let status = match failing {
        None => IsotropyStatus::Proven,
        Some((&pair, residue)) => IsotropyStatus::Failed(find_witness(chart, pair, residue)),
    };
    Ok(IsotropyCertificate {
        label: chart.label().to_string(),
        status,
        pairs_checked: pairs.len(),
    })
}

fn find_witness(chart: &VarietyChart, pair: (usize, usize), residue: &[MultiPoly]) -> IsotropyWitness {
    let d = chart.param_dim();
    let eval = |p: &[Scalar]| -> Vec<Scalar> { residue.iter().map(|r| r.eval(p)).collect() };
    let origin = vec![int(0); d];
    let mut candidate = origin;
    let mut rng = RationalSampler::new(0);
    // A nonzero polynomial has a non-root among finitely many random points.
    loop {
        let value = eval(&candidate);
        if !is_zero_vec(&value) {
            return IsotropyWitness {
                point: candidate,
                pair,
                value,
            };
        }
        candidate = rng.vector(d);
    }
}

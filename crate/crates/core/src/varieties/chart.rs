use num_traits::{One, Zero};

use crate::algebra::{int, Echelon, Jet1, Mat, MultiPoly, RationalSampler, Scalar};
use crate::error::{Error, Result};

/// Polynomial lift `φ: ℚ^d → W` of a chart of a projective variety
/// `S ⊂ PW` into its cone `S⁺`.
///
/// `φ(p)` is the cone point over `[φ(p)] ∈ S`, and
/// `{φ(p), ∂_1φ(p), …, ∂_dφ(p)}` spans the affine tangent space `T_w S⁺`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyChart {
    label: String,
    variables: Vec<String>,
    coords: Vec<MultiPoly>,
}

impl VarietyChart {
    pub fn new(label: impl Into<String>, variables: Vec<String>, coords: Vec<MultiPoly>) -> Result<Self> {
        let d = variables.len();
        if let Some(bad) = coords.iter().find(|c| c.nvars() > d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: bad.nvars(),
            });
        }
        Ok(VarietyChart {
            label: label.into(),
            coords: coords.into_iter().map(|c| c.with_nvars(d)).collect(),
            variables,
        })
    }

    /// Parses coordinate strings over the named variables.
    pub fn parse(label: impl Into<String>, variables: &[String], coords: &[String]) -> Result<Self> {
        let polys = coords
            .iter()
            .map(|c| MultiPoly::parse(c, variables))
            .collect::<Result<Vec<_>>>()?;
        Self::new(label, variables.to_vec(), polys)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn coords(&self) -> &[MultiPoly] {
        &self.coords
    }

    /// `d = dim S`.
    pub fn param_dim(&self) -> usize {
        self.variables.len()
    }

    /// `dim W`.
    pub fn ambient_dim(&self) -> usize {
        self.coords.len()
    }

    fn check_point(&self, p: &[Scalar]) -> Result<()> {
        if p.len() != self.param_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.param_dim(),
                got: p.len(),
            });
        }
        Ok(())
    }

    /// `φ(p)`.
    pub fn eval(&self, p: &[Scalar]) -> Vec<Scalar> {
        self.coords.iter().map(|c| c.eval(p)).collect()
    }

    pub fn eval_jets(&self, p: &[Jet1]) -> Vec<Jet1> {
        self.coords.iter().map(|c| c.eval(p)).collect()
    }

    /// `[φ, ∂_1φ, …, ∂_dφ]` as polynomial vectors.
    pub fn frame_polys(&self) -> Vec<Vec<MultiPoly>> {
        let mut frame = vec![self.coords.clone()];
        for i in 0..self.param_dim() {
            frame.push(self.coords.iter().map(|c| c.derivative(i)).collect());
        }
        frame
    }

    /// `[φ(p), ∂_1φ(p), …, ∂_dφ(p)]` without the rank check.
    pub fn frame_at(&self, p: &[Scalar]) -> Vec<Vec<Scalar>> {
        self.frame_polys()
            .iter()
            .map(|f| f.iter().map(|c| c.eval(p)).collect())
            .collect()
    }

    /// The affine tangent frame at `p`; fails with `FrameDegenerate` unless
    /// the `d + 1` vectors are independent.
    pub fn affine_tangent_frame(&self, p: &[Scalar]) -> Result<Vec<Vec<Scalar>>> {
        self.check_point(p)?;
        let frame = self.frame_at(p);
        let rank = Mat::from_rows(&frame, self.ambient_dim()).rank();
        let expected = self.param_dim() + 1;
        if rank < expected {
            return Err(Error::FrameDegenerate {
                point: p.to_vec(),
                rank,
                expected,
            });
        }
        Ok(frame)
    }

    /// Reduced echelon basis of `T_w S⁺` at `p`.
    pub fn tangent_span(&self, p: &[Scalar]) -> Result<Echelon> {
        let frame = self.affine_tangent_frame(p)?;
        let mut span = Echelon::new(self.ambient_dim());
        for v in &frame {
            span.insert(v);
        }
        Ok(span)
    }

    /// `dφ_p(δ) = Σ δ_i ∂_iφ(p)`.
    pub fn differential(&self, p: &[Scalar], delta: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(delta.len(), self.param_dim());
        let jets: Vec<Jet1> = p
            .iter()
            .zip(delta)
            .map(|(x, dx)| Jet1::along(x.clone(), dx.clone()))
            .collect();
        self.eval_jets(&jets).iter().map(|j| j.partial(0)).collect()
    }

    pub fn sample_point(&self, rng: &mut RationalSampler) -> Vec<Scalar> {
        rng.vector(self.param_dim())
    }

    /// Recovers `p` with `[φ(p)] = [w]` for charts that contain a constant
    /// coordinate and, for each variable `x_i`, a coordinate equal to `c·x_i`.
    /// Returns `None` when the chart lacks that shape or `[w]` is not in the
    /// image.
    pub fn locate(&self, w: &[Scalar]) -> Option<Vec<Scalar>> {
        if w.len() != self.ambient_dim() {
            return None;
        }
        let d = self.param_dim();
        let (c0, k0) = self
            .coords
            .iter()
            .enumerate()
            .find_map(|(i, c)| c.as_constant().filter(|k| !k.is_zero()).map(|k| (i, k)))?;
        if w[c0].is_zero() {
            return None;
        }
        let mut p = Vec::with_capacity(d);
        for i in 0..d {
            let (idx, coeff) = self.coords.iter().enumerate().find_map(|(j, c)| {
                let mut exps = vec![0u32; d];
                exps[i] = 1;
                let lin = c.coefficient(&exps);
                (c.num_terms() == 1 && !lin.is_zero()).then_some((j, lin))
            })?;
            // w[idx] / w[c0] = coeff·p_i / k0
            p.push(&w[idx] * &k0 / (&w[c0] * &coeff));
        }
        let image = self.eval(&p);
        let scale = &w[c0] / &image[c0];
        let matches = image.iter().zip(w).all(|(a, b)| a * &scale == *b);
        matches.then_some(p)
    }

    /// Reparametrizes by `p = M q` for an invertible `d × d` matrix.
    pub fn substitute_linear(&self, m: &Mat) -> Result<VarietyChart> {
        let d = self.param_dim();
        if m.rows() != d || m.cols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: m.rows(),
            });
        }
        let sub: Vec<MultiPoly> = (0..d)
            .map(|i| {
                (0..d).fold(MultiPoly::zero(d), |acc, j| {
                    acc + MultiPoly::var(j, d).scale_by(&m[(i, j)])
                })
            })
            .collect();
        Self::new(
            format!("{}∘linear", self.label),
            self.variables.clone(),
            self.coords.iter().map(|c| c.compose(&sub).with_nvars(d)).collect(),
        )
    }

    /// `v_k ∘ φ`: all degree-`k` monomials in the chart's coordinates,
    /// in lexicographically descending exponent order.
    pub fn compose_veronese(&self, k: u32) -> VarietyChart {
        let monomials = homogeneous_exponents(self.ambient_dim(), k);
        let coords = monomials
            .iter()
            .map(|e| {
                e.iter()
                    .zip(&self.coords)
                    .fold(MultiPoly::constant(self.param_dim(), int(1)), |acc, (&k, c)| {
                        (0..k).fold(acc, |a, _| a * c.clone())
                    })
                    .with_nvars(self.param_dim())
            })
            .collect();
        VarietyChart {
            label: format!("v{k}({})", self.label),
            variables: self.variables.clone(),
            coords,
        }
    }

    /// Veronese embedding `v_k` of `P^{r−1}` in the affine chart `X_0 = 1`.
    pub fn veronese(r: usize, k: u32) -> Result<VarietyChart> {
        if r < 2 || k < 1 {
            return Err(Error::UnsupportedVeronese { r, k: k as usize });
        }
        let base = Self::full_linear(r);
        let mut chart = base.compose_veronese(k);
        chart.label = format!("veronese-{r}-{k}");
        Ok(chart)
    }

    /// The plane conic `[1 : t : t²] ⊂ P²`.
    pub fn plane_conic() -> VarietyChart {
        let mut chart = Self::veronese(2, 2).expect("valid Veronese parameters");
        chart.label = "plane-conic".into();
        chart
    }

    /// The affine chart `(1, x_1, …, x_{n−1})` of the whole of `PW`, `dim W = n`.
    pub fn full_linear(n: usize) -> VarietyChart {
        assert!(n >= 1);
        let d = n - 1;
        let variables = default_names(d);
        let mut coords = vec![MultiPoly::constant(d, Scalar::one())];
        coords.extend((0..d).map(|i| MultiPoly::var(i, d)));
        VarietyChart {
            label: format!("linear-P{d}"),
            variables,
            coords,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

fn default_names(d: usize) -> Vec<String> {
    match d {
        1 => vec!["t".into()],
        2 => vec!["s".into(), "t".into()],
        _ => (1..=d).map(|i| format!("x{i}")).collect(),
    }
}

/// Exponent vectors of degree `k` in `m` variables, lexicographically descending.
fn homogeneous_exponents(m: usize, k: u32) -> Vec<Vec<u32>> {
    fn rec(m: usize, k: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if m == 1 {
            prefix.push(k);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=k).rev() {
            prefix.push(first);
            rec(m - 1, k - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        rec(m, k, &mut Vec::new(), &mut out);
    }
    out
}

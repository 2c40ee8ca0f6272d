//! Differentials of the line family `ρ: (p, x) ↦ ϑ(ℓ^{φ(p)}_x)` in affine
//! charts of `Gr(2, V)`, the `h_t` identity, the `j_t`/`j_∞` frames and the
//! family dimension count.

use num_traits::{One, Zero};

use crate::algebra::{
    int, q, solve_in_span, Field, Jet1, Mat, MultiPoly, RationalSampler, Scalar,
};
use crate::error::{Error, Result};
use crate::lines::{line_through, plucker_embed, plucker_rows, PlueckerLine};
use crate::metabelian::{group_law, GroupElement, MetabelianGroup, OmegaForm};
use crate::varieties::VarietyChart;

/// Values of `t` at which the linearity `j_t = j_0 + t j_∞` is checked.
pub fn linearity_times() -> [Scalar; 5] {
    [int(1), int(2), int(-1), q(1, 2), int(7)]
}

/// Nonzero values of `s` at which `s j_0 + j_∞` is checked.
pub fn splitting_times() -> [Scalar; 5] {
    [int(1), int(-1), int(3), q(1, 3), q(-5, 2)]
}

/// The affine chart of `Gr(2, V)` on planes whose `2×2` minor at the pivot
/// columns is invertible. Coordinates are the non-pivot columns of `A⁻¹M`,
/// flattened row by row, for any basis `M` of the plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GrassmannChart {
    pivots: (usize, usize),
}

impl GrassmannChart {
    pub fn new(c1: usize, c2: usize) -> Self {
        assert!(c1 < c2, "pivot columns must be increasing");
        GrassmannChart { pivots: (c1, c2) }
    }

    /// The chart centred on the echelon pivots of `line`.
    pub fn standard(line: &PlueckerLine) -> Self {
        let (a, b) = line.pivots();
        GrassmannChart::new(a, b)
    }

    /// The first chart in lexicographic order, other than the standard one,
    /// that contains `line`.
    pub fn alternate(line: &PlueckerLine) -> Option<Self> {
        let n = line.ambient_dim();
        let standard = line.pivots();
        crate::algebra::wedge_pairs(n)
            .into_iter()
            .zip(line.plucker_vector())
            .find(|(pair, coord)| *pair != standard && !coord.is_zero())
            .map(|((a, b), _)| GrassmannChart::new(a, b))
    }

    pub fn pivots(&self) -> (usize, usize) {
        self.pivots
    }

    pub fn contains(&self, line: &PlueckerLine) -> bool {
        let n = line.ambient_dim();
        let (a, b) = self.pivots;
        !line.plucker_vector()[crate::algebra::wedge_index(a, b, n)].is_zero()
    }

    /// Chart coordinates of the plane spanned by `rows`.
    pub fn coords<R: Field>(&self, rows: &[Vec<R>; 2]) -> Result<Vec<R>> {
        let (c1, c2) = self.pivots;
        let [r0, r1] = rows;
        let det = r0[c1].clone() * r1[c2].clone() - r0[c2].clone() * r1[c1].clone();
        if !det.is_invertible() {
            return Err(Error::ChartMiss { pivots: self.pivots });
        }
        // A⁻¹ = adj(A) / det
        let inv = [
            [r1[c2].clone() / det.clone(), -r0[c2].clone() / det.clone()],
            [-r1[c1].clone() / det.clone(), r0[c1].clone() / det],
        ];
        let mut out = Vec::with_capacity(2 * (r0.len() - 2));
        for row in &inv {
            for j in (0..r0.len()).filter(|&j| j != c1 && j != c2) {
                out.push(row[0].clone() * r0[j].clone() + row[1].clone() * r1[j].clone());
            }
        }
        Ok(out)
    }

    pub fn coords_of(&self, line: &PlueckerLine) -> Result<Vec<Scalar>> {
        let rows = line.basis().row_vecs();
        self.coords(&[rows[0].clone(), rows[1].clone()])
    }
}

/// Dimension-checked pairing of a chart with a metabelian group.
#[derive(Clone, Debug)]
pub struct LineFamily {
    chart: VarietyChart,
    group: MetabelianGroup,
}

/// Outcome of one `h_t` check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HtReport {
    pub chart: GrassmannChart,
    /// `h = d_{α_t}ρ(v_t) − d_{α_0}ρ(v_0)` in chart coordinates.
    pub h: Vec<Scalar>,
    /// A solution `c ∈ g` of `B_x c = h`.
    pub solution: Vec<Scalar>,
    /// `c + t·(v ⊕ 0)` reduced modulo `ℂ(w ⊕ 0)`; zero iff the identity holds.
    pub residual: Vec<Scalar>,
    /// `c` modulo `ℂw` lies in `T_w S⁺ ⊕ 0`.
    pub in_tangent_image: bool,
}

impl HtReport {
    pub fn holds(&self) -> bool {
        self.residual.iter().all(Zero::is_zero) && self.in_tangent_image
    }
}

/// The frames `j_0` and `j_∞`, one column per parameter direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorSplit {
    pub j0: Mat,
    pub j_inf: Mat,
    /// `(t, j_t − j_0 − t j_∞ = 0)` for each of [`linearity_times`].
    pub linearity: Vec<(Scalar, bool)>,
    pub combined_rank: usize,
}

impl TensorSplit {
    pub fn is_linear(&self) -> bool {
        self.linearity.iter().all(|(_, ok)| *ok)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingWitness {
    pub d: usize,
    pub combined_rank: usize,
    pub rank_at_zero: usize,
    pub ranks_nonzero: Vec<(Scalar, usize)>,
}

impl SplittingWitness {
    pub fn passes(&self) -> bool {
        self.combined_rank == 2 * self.d
            && self.rank_at_zero == self.d
            && self.ranks_nonzero.iter().all(|(_, r)| *r == self.d)
    }
}

/// Ranks of `F(s) = s j_0 + j_∞` at `s = 0` and at [`splitting_times`].
pub fn splitting_witness_from_frames(j0: &Mat, j_inf: &Mat) -> SplittingWitness {
    let frame = |s: &Scalar| j0.scale(s).add(j_inf);
    SplittingWitness {
        d: j0.cols(),
        combined_rank: j0.hstack(j_inf).rank(),
        rank_at_zero: frame(&Scalar::zero()).rank(),
        ranks_nonzero: splitting_times()
            .into_iter()
            .map(|s| {
                let r = frame(&s).rank();
                (s, r)
            })
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyDimension {
    /// Largest Jacobian rank over the sample points.
    pub rank: usize,
    /// `dim g − 1 + d`.
    pub expected: usize,
    pub points_used: usize,
}

impl FamilyDimension {
    pub fn matches(&self) -> bool {
        self.rank == self.expected
    }
}

/// Sample points tried by [`LineFamily::family_dimension`].
pub const FAMILY_DIMENSION_SAMPLES: usize = 10;

fn constants(v: &[Scalar]) -> Vec<Jet1> {
    v.iter().cloned().map(Jet1::constant).collect()
}

fn partials(jets: &[Jet1], dir: usize) -> Vec<Scalar> {
    jets.iter().map(|j| j.partial(dir)).collect()
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl LineFamily {
    pub fn new(chart: VarietyChart, omega: OmegaForm) -> Result<Self> {
        if chart.ambient_dim() != omega.dim_w() {
            return Err(Error::DimensionMismatch {
                expected: omega.dim_w(),
                got: chart.ambient_dim(),
            });
        }
        Ok(LineFamily {
            chart,
            group: MetabelianGroup::new(omega),
        })
    }

    pub fn chart(&self) -> &VarietyChart {
        &self.chart
    }

    pub fn group(&self) -> &MetabelianGroup {
        &self.group
    }

    pub fn omega(&self) -> &OmegaForm {
        self.group.omega()
    }

    /// `d`.
    pub fn param_dim(&self) -> usize {
        self.chart.param_dim()
    }

    /// `ϑ(ℓ^{φ(p)}_x)`.
    pub fn plucker_at(&self, p: &[Scalar], x: &GroupElement) -> Result<PlueckerLine> {
        let line = line_through(&self.group, x, &self.chart.eval(p))?;
        Ok(plucker_embed(&self.group, &line))
    }

    pub fn standard_chart(&self, p: &[Scalar], x: &GroupElement) -> Result<GrassmannChart> {
        Ok(GrassmannChart::standard(&self.plucker_at(p, x)?))
    }

    /// `d_{α_t}ρ(v_t)` in the standard chart at `ℓ^{φ(p)}_x`.
    pub fn rho_tangent(&self, p: &[Scalar], x: &GroupElement, delta: &[Scalar], t: &Scalar) -> Result<Vec<Scalar>> {
        let grass = self.standard_chart(p, x)?;
        self.rho_tangent_in(&grass, p, x, delta, t)
    }

    /// Derivative at `τ = 0` of `τ ↦ coords(ϑ(ℓ^{φ(p+τδ)}_{x_t}))` with
    /// `x_t = x·(tφ(p), 0)`.
    pub fn rho_tangent_in(
        &self,
        grass: &GrassmannChart,
        p: &[Scalar],
        x: &GroupElement,
        delta: &[Scalar],
        t: &Scalar,
    ) -> Result<Vec<Scalar>> {
        if delta.len() != self.param_dim() || p.len() != self.param_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.param_dim(),
                got: delta.len().max(p.len()),
            });
        }
        let xt = self.group.translate_along(x, &self.chart.eval(p), t);
        let arc: Vec<Jet1> = p
            .iter()
            .zip(delta)
            .map(|(a, b)| Jet1::along(a.clone(), b.clone()))
            .collect();
        let w = self.chart.eval_jets(&arc);
        let rows = plucker_rows(self.omega(), &constants(&xt.w), &constants(&xt.u), &w);
        Ok(partials(&grass.coords(&rows)?, 0))
    }

    /// `B_x` at `ℓ^w_x`: column `i` is `d/dε coords(ϑ(ℓ^w_{x·exp(εξ_i)}))` for
    /// the coordinate basis `ξ_i` of `g = W ⊕ U`.
    pub fn basepoint_variation_map(&self, grass: &GrassmannChart, w: &[Scalar], x: &GroupElement) -> Result<Mat> {
        let (dw, du) = (self.group.dim_w(), self.group.dim_u());
        let n = dw + du;
        let eps: Vec<Jet1> = (0..n).map(|i| Jet1::variable(Scalar::zero(), i, n)).collect();
        let (yw, yu) = group_law(self.omega(), (&constants(&x.w), &constants(&x.u)), (&eps[..dw], &eps[dw..]));
        let rows = plucker_rows(self.omega(), &yw, &yu, &constants(w));
        let coords = grass.coords(&rows)?;
        let cols: Vec<Vec<Scalar>> = (0..n).map(|i| partials(&coords, i)).collect();
        Ok(Mat::from_cols(&cols, coords.len()))
    }

    /// `B_x` has rank `dim g − 1` and kernel `ℂ(w ⊕ 0)`.
    pub fn check_gamma_well_defined(&self, p: &[Scalar], x: &GroupElement) -> Result<bool> {
        let w = self.chart.eval(p);
        let grass = self.standard_chart(p, x)?;
        let b = self.basepoint_variation_map(&grass, &w, x)?;
        let kernel = b.kernel_basis();
        let mut wz = w.clone();
        wz.resize(self.group.dim(), Scalar::zero());
        Ok(kernel.len() == 1 && Mat::from_rows(&[kernel[0].clone(), wz], self.group.dim()).rank() == 1)
    }

    /// `γ_ℓ ∘ h_t(v) = −t v` modulo `ℂw`, with `v = dφ_p(δ)` and `w = φ(p)`,
    /// in the standard chart at `ℓ^w_x`.
    pub fn check_h_t_identity(&self, p: &[Scalar], x: &GroupElement, delta: &[Scalar], t: &Scalar) -> Result<HtReport> {
        let grass = self.standard_chart(p, x)?;
        self.check_h_t_identity_in(&grass, p, x, delta, t)
    }

    pub fn check_h_t_identity_in(
        &self,
        grass: &GrassmannChart,
        p: &[Scalar],
        x: &GroupElement,
        delta: &[Scalar],
        t: &Scalar,
    ) -> Result<HtReport> {
        let w = self.chart.eval(p);
        let h = sub(
            &self.rho_tangent_in(grass, p, x, delta, t)?,
            &self.rho_tangent_in(grass, p, x, delta, &Scalar::zero())?,
        );
        let b = self.basepoint_variation_map(grass, &w, x)?;
        let c = solve_in_span(&b, &h)?;

        let v = self.chart.differential(p, delta);
        let dim = self.group.dim();
        let mut target = c.clone();
        for (ci, vi) in target.iter_mut().zip(&v) {
            *ci += t * vi;
        }
        let residual = self.reduce_mod_direction(&target, &w);

        let reduced = self.reduce_mod_direction(&c, &w);
        let frame = self.chart.frame_at(p);
        let mut span_rows: Vec<Vec<Scalar>> = frame
            .into_iter()
            .map(|mut f| {
                f.resize(dim, Scalar::zero());
                f
            })
            .collect();
        let before = Mat::from_rows(&span_rows, dim).rank();
        span_rows.push(reduced);
        let in_tangent_image = Mat::from_rows(&span_rows, dim).rank() == before;

        Ok(HtReport {
            chart: *grass,
            h,
            solution: c,
            residual,
            in_tangent_image,
        })
    }

    /// Representative of `c mod ℂ(w ⊕ 0)` vanishing at the leading
    /// coordinate of `w`.
    pub fn reduce_mod_direction(&self, c: &[Scalar], w: &[Scalar]) -> Vec<Scalar> {
        let Some(k) = w.iter().position(|a| !a.is_zero()) else {
            return c.to_vec();
        };
        let f = &c[k] / &w[k];
        let mut out = c.to_vec();
        for (o, wi) in out.iter_mut().zip(w) {
            *o -= &f * wi;
        }
        out
    }

    /// `j_0` from [`Self::rho_tangent`] at `t = 0` and `j_∞ := −B_x(∂_iφ ⊕ 0)`;
    /// `RankDeficient` if `[j_0 | j_∞]` has rank below `2d`.
    pub fn tensor_split_frames(&self, p: &[Scalar], x: &GroupElement) -> Result<TensorSplit> {
        let d = self.param_dim();
        let grass = self.standard_chart(p, x)?;
        let w = self.chart.eval(p);
        let b = self.basepoint_variation_map(&grass, &w, x)?;
        let dim = self.group.dim();
        let unit = |i: usize| -> Vec<Scalar> { (0..d).map(|j| if i == j { int(1) } else { int(0) }).collect() };

        let jt = |t: &Scalar| -> Result<Vec<Vec<Scalar>>> {
            (0..d).map(|i| self.rho_tangent_in(&grass, p, x, &unit(i), t)).collect()
        };
        let j0_cols = jt(&Scalar::zero())?;
        let jinf_cols: Vec<Vec<Scalar>> = (0..d)
            .map(|i| {
                let mut v = self.chart.differential(p, &unit(i));
                v.resize(dim, Scalar::zero());
                b.mul_vec(&v).into_iter().map(|c| -c).collect()
            })
            .collect();
        let rows = b.rows();
        let j0 = Mat::from_cols(&j0_cols, rows);
        let j_inf = Mat::from_cols(&jinf_cols, rows);

        let mut linearity = Vec::new();
        for t in linearity_times() {
            let predicted = j0.add(&j_inf.scale(&t));
            linearity.push((t.clone(), Mat::from_cols(&jt(&t)?, rows) == predicted));
        }
        let combined_rank = j0.hstack(&j_inf).rank();
        if combined_rank < 2 * d {
            return Err(Error::RankDeficient {
                rank: combined_rank,
                expected: 2 * d,
            });
        }
        Ok(TensorSplit {
            j0,
            j_inf,
            linearity,
            combined_rank,
        })
    }

    pub fn splitting_type_witness(&self, p: &[Scalar], x: &GroupElement) -> Result<SplittingWitness> {
        let split = self.tensor_split_frames(p, x)?;
        Ok(splitting_witness_from_frames(&split.j0, &split.j_inf))
    }

    /// Jacobian of `(p, x) ↦ coords(ϑ(ℓ^{φ(p)}_x))` at `(p, x)`.
    pub fn family_jacobian(&self, p: &[Scalar], x: &GroupElement) -> Result<Mat> {
        let grass = self.standard_chart(p, x)?;
        let (d, dw) = (self.param_dim(), self.group.dim_w());
        let n = d + self.group.dim();
        let var = |value: &Scalar, i: usize| Jet1::variable(value.clone(), i, n);
        let pj: Vec<Jet1> = p.iter().enumerate().map(|(i, a)| var(a, i)).collect();
        let xw: Vec<Jet1> = x.w.iter().enumerate().map(|(i, a)| var(a, d + i)).collect();
        let xu: Vec<Jet1> = x.u.iter().enumerate().map(|(i, a)| var(a, d + dw + i)).collect();
        let rows = plucker_rows(self.omega(), &xw, &xu, &self.chart.eval_jets(&pj));
        let coords = grass.coords(&rows)?;
        let cols: Vec<Vec<Scalar>> = (0..n).map(|i| partials(&coords, i)).collect();
        Ok(Mat::from_cols(&cols, coords.len()))
    }

    /// Maximal Jacobian rank of the family over deterministic sample points.
    pub fn family_dimension(&self, seed: u64) -> Result<FamilyDimension> {
        let mut rng = RationalSampler::new(seed);
        let mut rank = 0;
        let mut used = 0;
        for _ in 0..FAMILY_DIMENSION_SAMPLES {
            let p = self.chart.sample_point(&mut rng);
            let x = GroupElement::new(rng.vector(self.group.dim_w()), rng.vector(self.group.dim_u()));
            if crate::algebra::is_zero_vec(&self.chart.eval(&p)) {
                continue;
            }
            used += 1;
            rank = rank.max(self.family_jacobian(&p, &x)?.rank());
        }
        Ok(FamilyDimension {
            rank,
            expected: self.group.dim() - 1 + self.param_dim(),
            points_used: used,
        })
    }
}

/// Independent route for [`LineFamily::rho_tangent_in`]: the composite is
/// expanded as polynomials in `τ`, chart coordinates are the rational
/// functions `adj(A)·M / det A`, and the derivative at `τ = 0` comes from the
/// quotient rule on polynomial derivatives.
pub fn rho_tangent_symbolic(
    family: &LineFamily,
    grass: &GrassmannChart,
    p: &[Scalar],
    x: &GroupElement,
    delta: &[Scalar],
    t: &Scalar,
) -> Result<Vec<Scalar>> {
    let tau = MultiPoly::var(0, 1);
    let arc: Vec<MultiPoly> = p
        .iter()
        .zip(delta)
        .map(|(a, b)| MultiPoly::constant(1, a.clone()) + tau.scale_by(b))
        .collect();
    let w: Vec<MultiPoly> = family.chart().coords().iter().map(|c| c.compose(&arc)).collect();
    let xt = family.group().translate_along(x, &family.chart().eval(p), t);
    let lift = |v: &[Scalar]| -> Vec<MultiPoly> { v.iter().map(|c| MultiPoly::constant(1, c.clone())).collect() };

    let half = q(1, 2);
    let mut r0 = lift(&xt.w);
    r0.extend(lift(&xt.u));
    r0.push(MultiPoly::one().with_nvars(1));
    let mut r1 = w.clone();
    r1.extend(family.omega().apply(&lift(&xt.w), &w).iter().map(|c| c.scale_by(&half)));
    r1.push(MultiPoly::zero(1));

    let (c1, c2) = grass.pivots();
    let det = r0[c1].clone() * r1[c2].clone() - r0[c2].clone() * r1[c1].clone();
    let adj = [
        [r1[c2].clone(), -r0[c2].clone()],
        [-r1[c1].clone(), r0[c1].clone()],
    ];
    let zero = [Scalar::zero()];
    let d0 = det.eval(&zero);
    if d0.is_zero() {
        return Err(Error::ChartMiss { pivots: grass.pivots() });
    }
    let d1 = det.derivative(0).eval(&zero);
    let mut out = Vec::new();
    for row in &adj {
        for j in (0..r0.len()).filter(|&j| j != c1 && j != c2) {
            let num = row[0].clone() * r0[j].clone() + row[1].clone() * r1[j].clone();
            let (n0, n1) = (num.eval(&zero), num.derivative(0).eval(&zero));
            out.push((n1 * &d0 - n0 * &d1) / (&d0 * &d0));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega_builder::build_omega;

    fn cubic_family() -> LineFamily {
        let chart = VarietyChart::veronese(2, 3).unwrap();
        let omega = build_omega(&chart, 42).unwrap().omega;
        LineFamily::new(chart, omega).unwrap()
    }

    fn elem(w: &[i64], u: &[i64]) -> GroupElement {
        GroupElement::new(w.iter().map(|&c| int(c)).collect(), u.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn chart_coords_are_basis_independent() {
        let line = PlueckerLine::from_rows(&[int(1), int(2), int(3), int(4)], &[int(0), int(1), int(5), int(-1)]).unwrap();
        let grass = GrassmannChart::standard(&line);
        let a = grass.coords(&[vec![int(1), int(2), int(3), int(4)], vec![int(0), int(1), int(5), int(-1)]]).unwrap();
        let b = grass.coords(&[vec![int(1), int(3), int(8), int(3)], vec![int(2), int(5), int(11), int(7)]]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, grass.coords_of(&line).unwrap());
        assert!(matches!(
            GrassmannChart::new(0, 1).coords(&[vec![int(1), int(2), int(0)], vec![int(2), int(4), int(1)]]),
            Err(Error::ChartMiss { .. })
        ));
    }

    #[test]
    fn zero_delta_gives_zero_tangent() {
        let fam = cubic_family();
        let v = fam.rho_tangent(&[int(2)], &elem(&[1, 0, 2, -1], &[3]), &[int(0)], &int(4)).unwrap();
        assert!(v.iter().all(Zero::is_zero));
    }

    #[test]
    fn heisenberg_line_chart_golden() {
        // Frozen from an exact symbolic computation of the same composite.
        let fam = LineFamily::new(VarietyChart::full_linear(2), OmegaForm::heisenberg()).unwrap();
        let x = elem(&[1, -1], &[2]);
        let v = fam.rho_tangent(&[int(2)], &x, &[int(1)], &int(3)).unwrap();
        let grass = fam.standard_chart(&[int(2)], &x).unwrap();
        assert_eq!(grass.pivots(), (0, 1));
        assert_eq!(v, rho_tangent_symbolic(&fam, &grass, &[int(2)], &x, &[int(1)], &int(3)).unwrap());
        assert_eq!(v, HEISENBERG_GOLDEN.iter().map(|&(n, d)| q(n, d)).collect::<Vec<_>>());
    }

    const HEISENBERG_GOLDEN: [(i64, i64); 4] = [(-65, 18), (-5, 9), (26, 9), (4, 9)];

    #[test]
    fn h_t_identity_on_twisted_cubic() {
        let fam = cubic_family();
        let mut rng = RationalSampler::new(11);
        for _ in 0..10 {
            let p = vec![rng.next_scalar()];
            let x = GroupElement::new(rng.vector(4), rng.vector(1));
            let delta = vec![rng.next_nonzero()];
            let t = rng.next_scalar();
            let report = fam.check_h_t_identity(&p, &x, &delta, &t).unwrap();
            assert!(report.holds(), "{report:?}");
            assert!(fam.check_gamma_well_defined(&p, &x).unwrap());
            let grass = fam.standard_chart(&p, &x).unwrap();
            assert_eq!(
                fam.rho_tangent_in(&grass, &p, &x, &delta, &t).unwrap(),
                rho_tangent_symbolic(&fam, &grass, &p, &x, &delta, &t).unwrap()
            );
            let plucker = fam.plucker_at(&p, &x).unwrap();
            let alt = GrassmannChart::alternate(&plucker).unwrap();
            assert!(fam.check_h_t_identity_in(&alt, &p, &x, &delta, &t).unwrap().holds());
        }
    }

    #[test]
    fn radial_direction_gives_zero_coset() {
        // φ(p) = (1, s): the radial direction is never hit by δ, but t = 0 is.
        let fam = cubic_family();
        let report = fam
            .check_h_t_identity(&[int(1)], &elem(&[0, 1, 0, 0], &[0]), &[int(1)], &int(0))
            .unwrap();
        assert!(report.h.iter().all(Zero::is_zero));
        assert!(report.holds());
    }

    #[test]
    fn tensor_split_and_witness_on_cubic() {
        let fam = cubic_family();
        let x = elem(&[1, 2, -1, 3], &[1]);
        let split = fam.tensor_split_frames(&[q(1, 3)], &x).unwrap();
        assert!(split.is_linear());
        assert_eq!(split.combined_rank, 2);
        assert!(fam.splitting_type_witness(&[q(1, 3)], &x).unwrap().passes());
        assert!(!splitting_witness_from_frames(&split.j0, &split.j0).passes());
    }

    #[test]
    fn family_dimension_on_cubic_and_conic() {
        assert_eq!(cubic_family().family_dimension(42).unwrap().rank, 5);
        let conic = LineFamily::new(VarietyChart::plane_conic(), OmegaForm::flat(3)).unwrap();
        let fd = conic.family_dimension(42).unwrap();
        assert_eq!((fd.rank, fd.expected), (3, 3));
    }
}

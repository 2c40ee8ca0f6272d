//! Horizontal lines `ℓ^w_x = x·exp(ℂw)`, their Plücker images in `Gr(2, V)`
//! with `V = W ⊕ U ⊕ ℂ`, and the boundary point at infinity.

use num_traits::{One, Zero};

use crate::algebra::{format_scalar, is_zero_vec, q, wedge, Mat, Ring, Scalar};
use crate::error::{Error, Result};
use crate::metabelian::{GroupElement, MetabelianGroup, OmegaForm};
use crate::varieties::VarietyChart;

/// Index of the leftmost nonzero coordinate.
pub fn leading_index(v: &[Scalar]) -> Option<usize> {
    v.iter().position(|c| !c.is_zero())
}

/// Scales `v` so that its leftmost nonzero coordinate is 1.
pub fn normalize_leading(v: &[Scalar]) -> Option<(usize, Vec<Scalar>)> {
    let k = leading_index(v)?;
    let inv = v[k].recip();
    Some((k, v.iter().map(|c| c * &inv).collect()))
}

/// A point of a projective space, stored with its leftmost nonzero
/// coordinate equal to 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    coords: Vec<Scalar>,
}

impl ProjectivePoint {
    pub fn new(v: &[Scalar]) -> Result<Self> {
        let (_, coords) = normalize_leading(v).ok_or(Error::ZeroDirection)?;
        Ok(ProjectivePoint { coords })
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(format_scalar).collect()
    }
}

/// `ℓ^w_x` in canonical form: `w` has leading coordinate 1 at `pivot`, and
/// `x^W` vanishes at `pivot`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HorizontalLine {
    direction: Vec<Scalar>,
    base: GroupElement,
    pivot: usize,
}

impl HorizontalLine {
    pub fn direction(&self) -> &[Scalar] {
        &self.direction
    }

    pub fn base(&self) -> &GroupElement {
        &self.base
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    /// `x · exp(t w) = (x^W + t w, x^U + (t/2) ω(x^W, w))`.
    pub fn point_at(&self, group: &MetabelianGroup, t: &Scalar) -> GroupElement {
        group.translate_along(&self.base, &self.direction, t)
    }

    /// The parameter `t` at which `g` lies on the line, if it does.
    pub fn parameter_of(&self, group: &MetabelianGroup, g: &GroupElement) -> Option<Scalar> {
        let t = &g.w[self.pivot] - &self.base.w[self.pivot];
        (self.point_at(group, &t) == *g).then_some(t)
    }
}

/// The canonical representative of `x · exp(ℂw)`.
pub fn line_through(group: &MetabelianGroup, x: &GroupElement, w: &[Scalar]) -> Result<HorizontalLine> {
    if w.len() != group.dim_w() {
        return Err(Error::DimensionMismatch {
            expected: group.dim_w(),
            got: w.len(),
        });
    }
    let (pivot, direction) = normalize_leading(w).ok_or(Error::ZeroDirection)?;
    let shift = -x.w[pivot].clone();
    let base = group.translate_along(x, &direction, &shift);
    Ok(HorizontalLine {
        direction,
        base,
        pivot,
    })
}

/// `α ∈ sS` with `ι(α) = ([φ(p)], x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TangentDirectionPoint {
    pub p: Vec<Scalar>,
    pub x: GroupElement,
}

impl TangentDirectionPoint {
    pub fn new(p: Vec<Scalar>, x: GroupElement) -> Self {
        TangentDirectionPoint { p, x }
    }

    /// `w = φ(p)`.
    pub fn direction(&self, chart: &VarietyChart) -> Vec<Scalar> {
        chart.eval(&self.p)
    }

    /// `ρ(α) = ℓ^{φ(p)}_x`.
    pub fn line(&self, chart: &VarietyChart, group: &MetabelianGroup) -> Result<HorizontalLine> {
        line_through(group, &self.x, &self.direction(chart))
    }
}

/// `φ_t(p, x) = (p, x · (t φ(p), 0))`.
pub fn phi_action(
    chart: &VarietyChart,
    group: &MetabelianGroup,
    t: &Scalar,
    alpha: &TangentDirectionPoint,
) -> TangentDirectionPoint {
    let w = alpha.direction(chart);
    TangentDirectionPoint {
        p: alpha.p.clone(),
        x: group.translate_along(&alpha.x, &w, t),
    }
}

/// The two spanning rows `(x^W, x^U, 1)` and `(w, ½ω(x^W, w), 0)` of the
/// Plücker image, over any coefficient ring.
pub fn plucker_rows<R: Ring>(omega: &OmegaForm, xw: &[R], xu: &[R], w: &[R]) -> [Vec<R>; 2] {
    let half = q(1, 2);
    let mut first: Vec<R> = xw.iter().chain(xu).cloned().collect();
    first.push(R::one());
    let mut second: Vec<R> = w.to_vec();
    second.extend(omega.apply(xw, w).into_iter().map(|c| c.scale(&half)));
    second.push(R::zero());
    [first, second]
}

/// A 2-plane of `V`, in reduced echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlueckerLine {
    basis: Mat,
    pivots: (usize, usize),
    plucker: Vec<Scalar>,
}

impl PlueckerLine {
    /// Span of two vectors; `RankDeficient` unless they are independent.
    pub fn from_rows(a: &[Scalar], b: &[Scalar]) -> Result<Self> {
        let (basis, pivots) = Mat::from_rows(&[a.to_vec(), b.to_vec()], a.len()).rref();
        if pivots.len() != 2 {
            return Err(Error::RankDeficient {
                rank: pivots.len(),
                expected: 2,
            });
        }
        let plucker = wedge(basis.row(0), basis.row(1))?;
        Ok(PlueckerLine {
            basis,
            pivots: (pivots[0], pivots[1]),
            plucker,
        })
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> (usize, usize) {
        self.pivots
    }

    /// Coordinates `p_ij`, `i < j`, in lexicographic pair order.
    pub fn plucker_vector(&self) -> &[Scalar] {
        &self.plucker
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut rows = self.basis.row_vecs();
        rows.push(v.to_vec());
        Mat::from_rows(&rows, v.len()).rank() == 2
    }

    /// `p_ij p_kl − p_ik p_jl + p_il p_jk = 0` for all `i < j < k < l`.
    pub fn satisfies_plucker_relations(&self) -> bool {
        let n = self.ambient_dim();
        let p = |i: usize, j: usize| &self.plucker[crate::algebra::wedge_index(i, j, n)];
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for l in k + 1..n {
                        let r = p(i, j) * p(k, l) - p(i, k) * p(j, l) + p(i, l) * p(j, k);
                        if !r.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// `ϑ(ℓ^w_x)`.
pub fn plucker_embed(group: &MetabelianGroup, line: &HorizontalLine) -> PlueckerLine {
    let [a, b] = plucker_rows(group.omega(), &line.base.w, &line.base.u, &line.direction);
    PlueckerLine::from_rows(&a, &b).expect("last coordinates 1 and 0 force rank 2")
}

/// The affine point `(g^W, g^U, 1) ∈ V`.
pub fn affine_point(g: &GroupElement) -> Vec<Scalar> {
    let mut v = g.coords();
    v.push(Scalar::one());
    v
}

/// `[w : ½ω(x^W, w)] ∈ P(W ⊕ U)`.
pub fn boundary_point(group: &MetabelianGroup, line: &HorizontalLine) -> ProjectivePoint {
    let [_, mut b] = plucker_rows(group.omega(), &line.base.w, &line.base.u, &line.direction);
    b.pop();
    debug_assert!(!is_zero_vec(&b));
    ProjectivePoint::new(&b).expect("direction is nonzero")
}

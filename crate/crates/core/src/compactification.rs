//! The point set `X = G ⊔ J`, where `J` is the union over `s ∈ S` of the
//! coset spaces `G/T_s` with `T_s = exp(T_s S⁺)`.

use num_traits::Zero;

use crate::algebra::{Echelon, Scalar};
use crate::error::{Error, Result};
use crate::family::LineFamily;
use crate::lines::{line_through, HorizontalLine, ProjectivePoint, TangentDirectionPoint};
use crate::metabelian::{GroupElement, MetabelianGroup};
use crate::varieties::VarietyChart;

/// A point of `G/T_s`. The coset representative has zero `W`-coordinates at
/// the echelon pivots of `T_s S⁺`.
#[derive(Clone, Debug)]
pub struct BoundaryPoint {
    p: Vec<Scalar>,
    s: ProjectivePoint,
    coset_rep: GroupElement,
}

/// Equality is on `(s, x·T_s)`; the parameter `p` is bookkeeping.
impl PartialEq for BoundaryPoint {
    fn eq(&self, other: &Self) -> bool {
        self.s == other.s && self.coset_rep == other.coset_rep
    }
}

impl Eq for BoundaryPoint {}

impl BoundaryPoint {
    pub fn p(&self) -> &[Scalar] {
        &self.p
    }

    pub fn s(&self) -> &ProjectivePoint {
        &self.s
    }

    pub fn coset_rep(&self) -> &GroupElement {
        &self.coset_rep
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum XPoint {
    Interior(GroupElement),
    Boundary(BoundaryPoint),
}

impl XPoint {
    pub fn is_boundary(&self) -> bool {
        matches!(self, XPoint::Boundary(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PBundlePoint {
    /// A point of `sP` off the section `Σ`.
    OffSection(TangentDirectionPoint),
    /// `σ(ℓ)`.
    OnSection(HorizontalLine),
}

/// A line of the family drawn in `X`: affine points plus its point at
/// infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactifiedLine {
    pub interior: Vec<GroupElement>,
    pub at_infinity: BoundaryPoint,
}

impl CompactifiedLine {
    pub fn points(&self) -> Vec<XPoint> {
        self.interior
            .iter()
            .cloned()
            .map(XPoint::Interior)
            .chain(std::iter::once(XPoint::Boundary(self.at_infinity.clone())))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct Compactification {
    family: LineFamily,
}

impl Compactification {
    pub fn new(family: LineFamily) -> Self {
        Compactification { family }
    }

    pub fn family(&self) -> &LineFamily {
        &self.family
    }

    pub fn chart(&self) -> &VarietyChart {
        self.family.chart()
    }

    pub fn group(&self) -> &MetabelianGroup {
        self.family.group()
    }

    /// The canonical point `x·T_s` over `s = [φ(p)]`.
    pub fn boundary_point(&self, p: &[Scalar], x: &GroupElement) -> Result<BoundaryPoint> {
        let span = self.chart().tangent_span(p)?;
        let s = ProjectivePoint::new(&self.chart().eval(p))?;
        Ok(BoundaryPoint {
            p: p.to_vec(),
            s,
            coset_rep: canonical_coset_rep(self.group(), &span, x),
        })
    }

    /// `μ̂`.
    pub fn mu_hat(&self, point: &PBundlePoint) -> Result<XPoint> {
        match point {
            PBundlePoint::OffSection(alpha) => Ok(XPoint::Interior(alpha.x.clone())),
            PBundlePoint::OnSection(line) => {
                let p = self
                    .chart()
                    .locate(line.direction())
                    .ok_or(Error::DirectionNotOnChart)?;
                Ok(XPoint::Boundary(self.boundary_point(&p, line.base())?))
            }
        }
    }

    /// Interior points of `line` at each `t`, and its boundary point.
    pub fn compactified_line(&self, line: &HorizontalLine, t_grid: &[Scalar]) -> Result<CompactifiedLine> {
        let interior = t_grid.iter().map(|t| line.point_at(self.group(), t)).collect();
        let XPoint::Boundary(at_infinity) = self.mu_hat(&PBundlePoint::OnSection(line.clone()))? else {
            unreachable!("sections map to the boundary")
        };
        Ok(CompactifiedLine { interior, at_infinity })
    }

    /// Left translation by `g`, extended to the boundary.
    pub fn g_action(&self, g: &GroupElement, point: &XPoint) -> Result<XPoint> {
        Ok(match point {
            XPoint::Interior(x) => XPoint::Interior(self.group().multiply(g, x)?),
            XPoint::Boundary(b) => {
                let moved = self.group().multiply(g, &b.coset_rep)?;
                XPoint::Boundary(self.boundary_point(&b.p, &moved)?)
            }
        })
    }

    /// Left translation of the base point or line.
    pub fn act_on_bundle(&self, g: &GroupElement, point: &PBundlePoint) -> Result<PBundlePoint> {
        Ok(match point {
            PBundlePoint::OffSection(alpha) => PBundlePoint::OffSection(TangentDirectionPoint::new(
                alpha.p.clone(),
                self.group().multiply(g, &alpha.x)?,
            )),
            PBundlePoint::OnSection(line) => {
                let base = self.group().multiply(g, line.base())?;
                PBundlePoint::OnSection(line_through(self.group(), &base, line.direction())?)
            }
        })
    }
}

/// `x·exp(τ ⊕ 0)` with `τ ∈ T_s S⁺` chosen to clear the pivot coordinates of
/// `x^W`; well defined on cosets because `ω` vanishes on `T_s S⁺`.
pub fn canonical_coset_rep(group: &MetabelianGroup, span: &Echelon, x: &GroupElement) -> GroupElement {
    let basis = span.to_mat();
    let mut tau = vec![Scalar::zero(); group.dim_w()];
    for (r, &pc) in span.pivots().iter().enumerate() {
        let c = &x.w[pc];
        if c.is_zero() {
            continue;
        }
        for (t, b) in tau.iter_mut().zip(basis.row(r)) {
            *t -= c * b;
        }
    }
    group.mul(x, &GroupElement::exp_w(tau, group.dim_u()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, q, RationalSampler};
    use crate::metabelian::OmegaForm;
    use crate::omega_builder::build_omega;

    fn cubic() -> Compactification {
        let chart = VarietyChart::veronese(2, 3).unwrap();
        let omega = build_omega(&chart, 42).unwrap().omega;
        Compactification::new(LineFamily::new(chart, omega).unwrap())
    }

    fn random_element(rng: &mut RationalSampler, group: &MetabelianGroup) -> GroupElement {
        GroupElement::new(rng.vector(group.dim_w()), rng.vector(group.dim_u()))
    }

    #[test]
    fn off_section_maps_to_base() {
        let c = cubic();
        let o = c.group().identity();
        let alpha = TangentDirectionPoint::new(vec![int(3)], o.clone());
        assert_eq!(c.mu_hat(&PBundlePoint::OffSection(alpha)).unwrap(), XPoint::Interior(o));
    }

    #[test]
    fn tangent_translates_share_a_boundary_point() {
        let c = cubic();
        let mut rng = RationalSampler::new(5);
        for _ in 0..20 {
            let p = vec![rng.next_scalar()];
            let x = random_element(&mut rng, c.group());
            let v = c.chart().differential(&p, &[rng.next_nonzero()]);
            let g = GroupElement::exp_w(v, 1);
            let w = c.chart().eval(&p);
            let a = line_through(c.group(), &x, &w).unwrap();
            let b = line_through(c.group(), &c.group().mul(&x, &g), &w).unwrap();
            let (ma, mb) = (
                c.mu_hat(&PBundlePoint::OnSection(a)).unwrap(),
                c.mu_hat(&PBundlePoint::OnSection(b)).unwrap(),
            );
            assert_eq!(ma, mb);
            let other = line_through(c.group(), &x, &c.chart().eval(&[&p[0] + int(1)])).unwrap();
            assert_ne!(ma, c.mu_hat(&PBundlePoint::OnSection(other)).unwrap());
        }
    }

    #[test]
    fn action_axioms_and_equivariance() {
        let c = cubic();
        let mut rng = RationalSampler::new(9);
        for _ in 0..20 {
            let (g1, g2, x) = (
                random_element(&mut rng, c.group()),
                random_element(&mut rng, c.group()),
                random_element(&mut rng, c.group()),
            );
            let p = vec![rng.next_scalar()];
            let line = line_through(c.group(), &x, &c.chart().eval(&p)).unwrap();
            let on = PBundlePoint::OnSection(line);
            let pt = c.mu_hat(&on).unwrap();
            let lhs = c.g_action(&g1, &c.g_action(&g2, &pt).unwrap()).unwrap();
            assert_eq!(lhs, c.g_action(&c.group().mul(&g1, &g2), &pt).unwrap());
            assert_eq!(c.g_action(&c.group().identity(), &pt).unwrap(), pt);
            let moved = c.act_on_bundle(&g1, &on).unwrap();
            assert_eq!(c.mu_hat(&moved).unwrap(), c.g_action(&g1, &pt).unwrap());
        }
    }

    #[test]
    fn compactified_line_has_one_point_at_infinity() {
        let c = cubic();
        let line = line_through(c.group(), &c.group().identity(), &c.chart().eval(&[q(2, 3)])).unwrap();
        let grid = [int(0), int(1), q(-1, 2)];
        let cl = c.compactified_line(&line, &grid).unwrap();
        let pts = cl.points();
        assert_eq!(pts.iter().filter(|p| p.is_boundary()).count(), 1);
        assert_ne!(pts[0], pts[1]);
    }

    #[test]
    fn flat_full_space_has_single_boundary_class_per_direction() {
        // S = PW: T_s S⁺ = W, so every base point gives the same coset.
        let chart = VarietyChart::full_linear(3);
        let c = Compactification::new(LineFamily::new(chart, OmegaForm::flat(3)).unwrap());
        let p = vec![int(2), int(-1)];
        let a = c.boundary_point(&p, &GroupElement::new(vec![int(1), int(5), int(7)], vec![])).unwrap();
        let b = c.boundary_point(&p, &c.group().identity()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn direction_off_chart() {
        let c = cubic();
        let line = line_through(c.group(), &c.group().identity(), &[int(0), int(1), int(0), int(0)]).unwrap();
        assert!(matches!(
            c.mu_hat(&PBundlePoint::OnSection(line)),
            Err(Error::DirectionNotOnChart)
        ));
    }
}

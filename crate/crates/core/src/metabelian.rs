//! Two-step nilpotent Lie algebra `g = W ⊕ U` with bracket `[w, w'] = ω(w, w')`
//! and its simply connected group in logarithmic coordinates.
//!
//! Group elements are written `(w, u)` with `log(w, u) = w ⊕ u`, so the
//! exponential map is the identity on coordinates and the group law is
//! `(w, u)·(w', u') = (w + w', u + u' + ½ω(w, w'))`.

use num_traits::Zero;

use crate::algebra::{is_zero_vec, q, wedge_index, wedge_pairs, Jet1, MultiPoly, Ring, Scalar};
use crate::error::{Error, Result};

/// Antisymmetric bilinear map `ω: Λ²W → U`, stored as the images of the
/// basis wedges `e_i ∧ e_j`, `i < j`, in lexicographic pair order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaForm {
    dim_w: usize,
    dim_u: usize,
    table: Vec<Vec<Scalar>>,
}

impl OmegaForm {
    pub fn new(dim_w: usize, dim_u: usize, table: Vec<Vec<Scalar>>) -> Result<Self> {
        let pairs = dim_w * dim_w.saturating_sub(1) / 2;
        if table.len() != pairs {
            return Err(Error::DimensionMismatch {
                expected: pairs,
                got: table.len(),
            });
        }
        if let Some(bad) = table.iter().find(|row| row.len() != dim_u) {
            return Err(Error::DimensionMismatch {
                expected: dim_u,
                got: bad.len(),
            });
        }
        Ok(OmegaForm {
            dim_w,
            dim_u,
            table,
        })
    }

    /// `ω = 0` with `U = 0`.
    pub fn flat(dim_w: usize) -> Self {
        OmegaForm {
            dim_w,
            dim_u: 0,
            table: vec![Vec::new(); dim_w * dim_w.saturating_sub(1) / 2],
        }
    }

    /// The Heisenberg form on `W = ℚ²`, `U = ℚ`, `ω(e_1, e_2) = 1`.
    pub fn heisenberg() -> Self {
        OmegaForm {
            dim_w: 2,
            dim_u: 1,
            table: vec![vec![q(1, 1)]],
        }
    }

    /// Builds from sparse entries `ω(e_i, e_j) = vector`; entries with `i > j`
    /// are stored negated and diagonal entries must be zero.
    pub fn from_entries(
        dim_w: usize,
        dim_u: usize,
        entries: &[(usize, usize, Vec<Scalar>)],
    ) -> Result<Self> {
        let mut form = OmegaForm {
            dim_w,
            dim_u,
            table: vec![vec![Scalar::zero(); dim_u]; dim_w * dim_w.saturating_sub(1) / 2],
        };
        for (i, j, vec) in entries {
            let (i, j) = (*i, *j);
            if i >= dim_w || j >= dim_w {
                return Err(Error::DimensionMismatch {
                    expected: dim_w,
                    got: i.max(j) + 1,
                });
            }
            if vec.len() != dim_u {
                return Err(Error::DimensionMismatch {
                    expected: dim_u,
                    got: vec.len(),
                });
            }
            if i == j {
                if !is_zero_vec(vec) {
                    return Err(Error::Parse(format!(
                        "omega entry ({i}, {i}) must vanish by antisymmetry"
                    )));
                }
                continue;
            }
            let (a, b, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
            let slot = &mut form.table[wedge_index(a, b, dim_w)];
            for (s, x) in slot.iter_mut().zip(vec) {
                *s += x * q(sign, 1);
            }
        }
        Ok(form)
    }

    pub fn dim_w(&self) -> usize {
        self.dim_w
    }

    pub fn dim_u(&self) -> usize {
        self.dim_u
    }

    pub fn is_flat(&self) -> bool {
        self.table.iter().all(|v| is_zero_vec(v))
    }

    /// `ω(e_i, e_j)` for any ordered pair.
    pub fn entry(&self, i: usize, j: usize) -> Vec<Scalar> {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => vec![Scalar::zero(); self.dim_u],
            std::cmp::Ordering::Less => self.table[wedge_index(i, j, self.dim_w)].clone(),
            std::cmp::Ordering::Greater => self.table[wedge_index(j, i, self.dim_w)]
                .iter()
                .map(|x| -x)
                .collect(),
        }
    }

    /// The table, one `U`-vector per pair `i < j` in lexicographic order.
    pub fn table(&self) -> &[Vec<Scalar>] {
        &self.table
    }

    /// `ω(a, b) = Σ_{i<j} (a_i b_j − a_j b_i) ω(e_i, e_j)` over any ring.
    pub fn apply<R: Ring>(&self, a: &[R], b: &[R]) -> Vec<R> {
        assert_eq!(a.len(), self.dim_w, "omega argument has wrong dimension");
        assert_eq!(b.len(), self.dim_w, "omega argument has wrong dimension");
        let mut out = vec![R::zero(); self.dim_u];
        for ((i, j), image) in wedge_pairs(self.dim_w).into_iter().zip(&self.table) {
            if is_zero_vec(image) {
                continue;
            }
            let minor = a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone();
            if minor.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(image) {
                if !c.is_zero() {
                    *o = o.clone() + minor.scale(c);
                }
            }
        }
        out
    }

    /// Applies the linear extension to exterior-square coordinates.
    pub fn apply_wedge(&self, z: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(z.len(), self.table.len());
        let mut out = vec![Scalar::zero(); self.dim_u];
        for (zk, image) in z.iter().zip(&self.table) {
            if zk.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(image) {
                *o += zk * c;
            }
        }
        out
    }
}

/// Element `w ⊕ u` of the Lie algebra `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    pub w: Vec<Scalar>,
    pub u: Vec<Scalar>,
}

impl AlgebraElement {
    pub fn new(w: Vec<Scalar>, u: Vec<Scalar>) -> Self {
        AlgebraElement { w, u }
    }

    pub fn zero(dim_w: usize, dim_u: usize) -> Self {
        AlgebraElement {
            w: vec![Scalar::zero(); dim_w],
            u: vec![Scalar::zero(); dim_u],
        }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.w) && is_zero_vec(&self.u)
    }

    /// Concatenated coordinates `(w, u)`.
    pub fn coords(&self) -> Vec<Scalar> {
        self.w.iter().chain(&self.u).cloned().collect()
    }

    pub fn from_coords(coords: &[Scalar], dim_w: usize) -> Self {
        AlgebraElement {
            w: coords[..dim_w].to_vec(),
            u: coords[dim_w..].to_vec(),
        }
    }
}

/// Point `(x^W, x^U)` of the group in logarithmic coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub w: Vec<Scalar>,
    pub u: Vec<Scalar>,
}

impl GroupElement {
    pub fn new(w: Vec<Scalar>, u: Vec<Scalar>) -> Self {
        GroupElement { w, u }
    }

    pub fn identity(dim_w: usize, dim_u: usize) -> Self {
        GroupElement {
            w: vec![Scalar::zero(); dim_w],
            u: vec![Scalar::zero(); dim_u],
        }
    }

    /// `exp(w ⊕ u)`; the identity on coordinates.
    pub fn exp(x: &AlgebraElement) -> Self {
        GroupElement {
            w: x.w.clone(),
            u: x.u.clone(),
        }
    }

    /// `exp(w ⊕ 0)`.
    pub fn exp_w(w: Vec<Scalar>, dim_u: usize) -> Self {
        GroupElement {
            w,
            u: vec![Scalar::zero(); dim_u],
        }
    }

    pub fn log(&self) -> AlgebraElement {
        AlgebraElement {
            w: self.w.clone(),
            u: self.u.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        is_zero_vec(&self.w) && is_zero_vec(&self.u)
    }

    pub fn coords(&self) -> Vec<Scalar> {
        self.w.iter().chain(&self.u).cloned().collect()
    }
}

/// The group law over an arbitrary coefficient ring; `a` and `b` are
/// `(W-part, U-part)` coordinate pairs.
pub fn group_law<R: Ring>(omega: &OmegaForm, a: (&[R], &[R]), b: (&[R], &[R])) -> (Vec<R>, Vec<R>) {
    let w = a.0.iter().zip(b.0).map(|(x, y)| x.clone() + y.clone()).collect();
    let twist = omega.apply(a.0, b.0);
    let half = q(1, 2);
    let u = a
        .1
        .iter()
        .zip(b.1)
        .zip(twist)
        .map(|((x, y), t)| x.clone() + y.clone() + t.scale(&half))
        .collect();
    (w, u)
}

/// The metabelian group attached to an [`OmegaForm`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetabelianGroup {
    omega: OmegaForm,
}

impl MetabelianGroup {
    pub fn new(omega: OmegaForm) -> Self {
        MetabelianGroup { omega }
    }

    pub fn omega(&self) -> &OmegaForm {
        &self.omega
    }

    pub fn dim_w(&self) -> usize {
        self.omega.dim_w
    }

    pub fn dim_u(&self) -> usize {
        self.omega.dim_u
    }

    /// `dim g = dim W + dim U`.
    pub fn dim(&self) -> usize {
        self.omega.dim_w + self.omega.dim_u
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.dim_w(), self.dim_u())
    }

    fn check(&self, w: &[Scalar], u: &[Scalar]) -> Result<()> {
        if w.len() != self.dim_w() {
            return Err(Error::DimensionMismatch {
                expected: self.dim_w(),
                got: w.len(),
            });
        }
        if u.len() != self.dim_u() {
            return Err(Error::DimensionMismatch {
                expected: self.dim_u(),
                got: u.len(),
            });
        }
        Ok(())
    }

    pub fn multiply(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(&a.w, &a.u)?;
        self.check(&b.w, &b.u)?;
        let (w, u) = group_law(&self.omega, (&a.w, &a.u), (&b.w, &b.u));
        Ok(GroupElement { w, u })
    }

    /// Infallible product for elements already known to fit this group.
    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.multiply(a, b).expect("group element dimensions")
    }

    /// `(w, u)⁻¹ = (−w, −u)` since `ω(w, −w) = 0`.
    pub fn inverse(&self, a: &GroupElement) -> GroupElement {
        GroupElement {
            w: a.w.iter().map(|x| -x).collect(),
            u: a.u.iter().map(|x| -x).collect(),
        }
    }

    /// `x · exp(t w)` for `w ∈ W`.
    pub fn translate_along(&self, x: &GroupElement, w: &[Scalar], t: &Scalar) -> GroupElement {
        let step = GroupElement::exp_w(w.iter().map(|c| c * t).collect(), self.dim_u());
        self.mul(x, &step)
    }

    pub fn bracket(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            w: vec![Scalar::zero(); self.dim_w()],
            u: self.omega.apply(&a.w, &b.w),
        }
    }

    /// `d_x log(d_o L_x(v))` for `v ∈ W`, computed both from the closed form
    /// `v ⊕ ½ω(x^W, v)` and by differentiating `t ↦ log(x · exp(tv))` at
    /// `t = 0`. The two must agree.
    pub fn maurer_cartan_log_derivative(
        &self,
        x: &GroupElement,
        v: &[Scalar],
    ) -> Result<AlgebraElement> {
        self.check(&x.w, &x.u)?;
        if v.len() != self.dim_w() {
            return Err(Error::DimensionMismatch {
                expected: self.dim_w(),
                got: v.len(),
            });
        }
        let half = q(1, 2);
        let closed = AlgebraElement {
            w: v.to_vec(),
            u: self
                .omega
                .apply(&x.w, v)
                .into_iter()
                .map(|c| c * &half)
                .collect(),
        };

        let base_w: Vec<Jet1> = x.w.iter().cloned().map(Jet1::constant).collect();
        let base_u: Vec<Jet1> = x.u.iter().cloned().map(Jet1::constant).collect();
        let step_w: Vec<Jet1> = v
            .iter()
            .map(|c| Jet1::along(Scalar::zero(), c.clone()))
            .collect();
        let step_u = vec![Jet1::zero(); self.dim_u()];
        let (pw, pu) = group_law(&self.omega, (&base_w, &base_u), (&step_w, &step_u));
        let jet = AlgebraElement {
            w: pw.iter().map(|j| j.partial(0)).collect(),
            u: pu.iter().map(|j| j.partial(0)).collect(),
        };

        if jet != closed {
            return Err(Error::Consistency(format!(
                "Maurer-Cartan closed form {closed:?} disagrees with jet derivative {jet:?}"
            )));
        }
        Ok(closed)
    }

    /// Left-invariant vector field extending `v ∈ W`, as polynomial
    /// components in the coordinates `z = (z^W, z^U)`:
    /// `z ↦ (v, ½ω(z^W, v))`.
    pub fn left_invariant_field(&self, v: &[Scalar]) -> Vec<MultiPoly> {
        let n = self.dim();
        let z_w: Vec<MultiPoly> = (0..self.dim_w()).map(|i| MultiPoly::var(i, n)).collect();
        let v_poly: Vec<MultiPoly> = v.iter().map(|c| MultiPoly::constant(n, c.clone())).collect();
        let half = q(1, 2);
        v_poly
            .iter()
            .cloned()
            .chain(
                self.omega
                    .apply(&z_w, &v_poly)
                    .into_iter()
                    .map(|p| p.scale_by(&half)),
            )
            .map(|p| p.with_nvars(n))
            .collect()
    }

    /// U-component at `x` of the Lie bracket of the left-invariant
    /// extensions of `u` and `v`, computed as a bracket of polynomial vector
    /// fields `[X, Y]^k = Σ_j X^j ∂_j Y^k − Y^j ∂_j X^k`.
    pub fn levi_tensor(&self, x: &GroupElement, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check(&x.w, &x.u)?;
        for arg in [u, v] {
            if arg.len() != self.dim_w() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim_w(),
                    got: arg.len(),
                });
            }
        }
        let bracket = vector_field_bracket(&self.left_invariant_field(u), &self.left_invariant_field(v));
        let point = x.coords();
        let value: Vec<Scalar> = bracket.iter().map(|p| p.eval(&point)).collect();
        if !is_zero_vec(&value[..self.dim_w()]) {
            return Err(Error::Consistency(format!(
                "bracket of horizontal fields has a W-component {:?}",
                &value[..self.dim_w()]
            )));
        }
        Ok(value[self.dim_w()..].to_vec())
    }
}

/// Bracket of two polynomial vector fields on the same coordinate space.
pub fn vector_field_bracket(x: &[MultiPoly], y: &[MultiPoly]) -> Vec<MultiPoly> {
    assert_eq!(x.len(), y.len());
    let n = x.len();
    (0..n)
        .map(|k| {
            let mut acc = MultiPoly::zero(n);
            for j in 0..n {
                if !x[j].is_zero() {
                    acc = acc + x[j].clone() * y[k].derivative(j);
                }
                if !y[j].is_zero() {
                    acc = acc - y[j].clone() * x[k].derivative(j);
                }
            }
            acc
        })
        .collect()
}

/// Symbolic group-law identities, each checked as an exact polynomial
/// identity in generic coordinates.
pub mod identities {
    use super::*;

    fn generic(n_total: usize, offset: usize, dim: usize) -> Vec<MultiPoly> {
        (0..dim).map(|i| MultiPoly::var(offset + i, n_total)).collect()
    }

    /// `(a·b)·c = a·(b·c)` in `3(dim W + dim U)` variables.
    pub fn associativity(omega: &OmegaForm) -> bool {
        let (dw, du) = (omega.dim_w(), omega.dim_u());
        let n = 3 * (dw + du);
        let elem = |k: usize| {
            let off = k * (dw + du);
            (generic(n, off, dw), generic(n, off + dw, du))
        };
        let (a, b, c) = (elem(0), elem(1), elem(2));
        let ab = group_law(omega, (&a.0, &a.1), (&b.0, &b.1));
        let left = group_law(omega, (&ab.0, &ab.1), (&c.0, &c.1));
        let bc = group_law(omega, (&b.0, &b.1), (&c.0, &c.1));
        let right = group_law(omega, (&a.0, &a.1), (&bc.0, &bc.1));
        left == right
    }

    /// `(w,0)(w',0)(w,0)⁻¹(w',0)⁻¹ = (0, ω(w, w'))` in `2 dim W` variables.
    pub fn commutator(omega: &OmegaForm) -> bool {
        let dw = omega.dim_w();
        let n = 2 * dw;
        let w1 = generic(n, 0, dw);
        let w2 = generic(n, dw, dw);
        let neg = |v: &[MultiPoly]| v.iter().cloned().map(|p| -p).collect::<Vec<_>>();
        let zero_u = vec![MultiPoly::zero(n); omega.dim_u()];
        let mut acc = (w1.clone(), zero_u.clone());
        for step in [w2.clone(), neg(&w1), neg(&w2)] {
            acc = group_law(omega, (&acc.0, &acc.1), (&step, &zero_u));
        }
        acc.0.iter().all(MultiPoly::is_zero) && acc.1 == omega.apply(&w1, &w2)
    }

    /// `exp(s w)·exp(t w) = exp((s + t) w)` with `s`, `t` and `w` generic.
    pub fn one_parameter_subgroup(omega: &OmegaForm) -> bool {
        let dw = omega.dim_w();
        let n = dw + 2;
        let w = generic(n, 0, dw);
        let s = MultiPoly::var(dw, n);
        let t = MultiPoly::var(dw + 1, n);
        let zero_u = vec![MultiPoly::zero(n); omega.dim_u()];
        let sw: Vec<_> = w.iter().map(|c| c.clone() * s.clone()).collect();
        let tw: Vec<_> = w.iter().map(|c| c.clone() * t.clone()).collect();
        let (pw, pu) = group_law(omega, (&sw, &zero_u), (&tw, &zero_u));
        let expected: Vec<_> = w.iter().map(|c| c.clone() * (s.clone() + t.clone())).collect();
        pw == expected && pu.iter().all(MultiPoly::is_zero)
    }

    /// `exp ∘ log` is the identity and `x · x⁻¹ = o`, on a concrete element.
    pub fn exp_log_and_inverse(group: &MetabelianGroup, x: &GroupElement) -> bool {
        GroupElement::exp(&x.log()) == *x
            && group.mul(x, &group.inverse(x)).is_identity()
            && group.mul(&group.inverse(x), x).is_identity()
    }

    /// Jacobi identity for the bracket on a concrete triple.
    pub fn jacobi(group: &MetabelianGroup, a: &AlgebraElement, b: &AlgebraElement, c: &AlgebraElement) -> bool {
        let t1 = group.bracket(a, &group.bracket(b, c));
        let t2 = group.bracket(b, &group.bracket(c, a));
        let t3 = group.bracket(c, &group.bracket(a, b));
        let sum = |x: &[Scalar], y: &[Scalar], z: &[Scalar]| -> Vec<Scalar> {
            x.iter().zip(y).zip(z).map(|((p, q), r)| p + q + r).collect()
        };
        is_zero_vec(&sum(&t1.w, &t2.w, &t3.w)) && is_zero_vec(&sum(&t1.u, &t2.u, &t3.u))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, RationalSampler};

    fn e(i: usize, n: usize) -> Vec<Scalar> {
        (0..n).map(|k| if k == i { int(1) } else { int(0) }).collect()
    }

    #[test]
    fn heisenberg_product() {
        let g = MetabelianGroup::new(OmegaForm::heisenberg());
        let a = GroupElement::exp_w(e(0, 2), 1);
        let b = GroupElement::exp_w(e(1, 2), 1);
        let ab = g.multiply(&a, &b).unwrap();
        assert_eq!(ab, GroupElement::new(vec![int(1), int(1)], vec![q(1, 2)]));
    }

    #[test]
    fn inverse_cancels() {
        let g = MetabelianGroup::new(OmegaForm::heisenberg());
        let x = GroupElement::new(vec![q(3, 5), int(-2)], vec![q(7, 3)]);
        assert!(g.mul(&x, &g.inverse(&x)).is_identity());
    }

    #[test]
    fn commutator_by_stepwise_law() {
        // Oracle: apply the law four times by hand on concrete vectors.
        let g = MetabelianGroup::new(OmegaForm::heisenberg());
        let w = vec![int(2), int(1)];
        let w2 = vec![int(-1), int(3)];
        let a = GroupElement::exp_w(w.clone(), 1);
        let b = GroupElement::exp_w(w2.clone(), 1);
        let c = g.mul(&g.mul(&g.mul(&a, &b), &g.inverse(&a)), &g.inverse(&b));
        // ω(w, w2) = 2*3 - 1*(-1) = 7
        assert_eq!(c, GroupElement::new(vec![int(0), int(0)], vec![int(7)]));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let g = MetabelianGroup::new(OmegaForm::heisenberg());
        let bad = GroupElement::new(vec![int(1)], vec![int(0)]);
        assert!(matches!(
            g.multiply(&bad, &g.identity()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn bracket_examples() {
        let g = MetabelianGroup::new(OmegaForm::heisenberg());
        let e1 = AlgebraElement::new(e(0, 2), vec![int(0)]);
        let e2 = AlgebraElement::new(e(1, 2), vec![int(0)]);
        assert_eq!(g.bracket(&e1, &e2), AlgebraElement::new(vec![int(0), int(0)], vec![int(1)]));
        let central = AlgebraElement::new(vec![int(0), int(0)], vec![int(5)]);
        assert!(g.bracket(&e1, &central).is_zero());
        assert!(g.bracket(&central, &e2).is_zero());
        let a = AlgebraElement::new(vec![q(1, 3), int(4)], vec![int(2)]);
        assert!(g.bracket(&a, &a).is_zero());
    }

    #[test]
    fn maurer_cartan_examples() {
        let g = MetabelianGroup::new(OmegaForm::heisenberg());
        let v = vec![q(2, 3), int(-1)];
        assert_eq!(
            g.maurer_cartan_log_derivative(&g.identity(), &v).unwrap(),
            AlgebraElement::new(v.clone(), vec![int(0)])
        );
        let x = GroupElement::exp_w(e(0, 2), 1);
        assert_eq!(
            g.maurer_cartan_log_derivative(&x, &e(1, 2)).unwrap(),
            AlgebraElement::new(e(1, 2), vec![q(1, 2)])
        );
        let flat = MetabelianGroup::new(OmegaForm::flat(3));
        let x = GroupElement::exp_w(vec![int(1), int(2), int(3)], 0);
        let v = vec![int(0), q(1, 7), int(1)];
        assert_eq!(
            flat.maurer_cartan_log_derivative(&x, &v).unwrap(),
            AlgebraElement::new(v, vec![])
        );
    }

    #[test]
    fn levi_tensor_examples() {
        let g = MetabelianGroup::new(OmegaForm::heisenberg());
        let mut rng = RationalSampler::new(3);
        for _ in 0..10 {
            let x = GroupElement::new(rng.vector(2), rng.vector(1));
            assert_eq!(g.levi_tensor(&x, &e(0, 2), &e(1, 2)).unwrap(), vec![int(1)]);
            let u = rng.vector(2);
            assert_eq!(g.levi_tensor(&x, &u, &u).unwrap(), vec![int(0)]);
        }
        let flat = MetabelianGroup::new(OmegaForm::flat(2));
        let x = flat.identity();
        assert!(flat.levi_tensor(&x, &e(0, 2), &e(1, 2)).unwrap().is_empty());
    }

    #[test]
    fn symbolic_identities_hold() {
        let omega = OmegaForm::from_entries(
            3,
            2,
            &[
                (0, 1, vec![int(1), int(0)]),
                (1, 2, vec![q(1, 2), int(-3)]),
                (2, 0, vec![int(0), int(2)]),
            ],
        )
        .unwrap();
        assert!(identities::associativity(&omega));
        assert!(identities::commutator(&omega));
        assert!(identities::one_parameter_subgroup(&omega));
    }

    #[test]
    fn from_entries_antisymmetrizes() {
        let omega = OmegaForm::from_entries(2, 1, &[(1, 0, vec![int(4)])]).unwrap();
        assert_eq!(omega.entry(0, 1), vec![int(-4)]);
        assert_eq!(omega.entry(1, 0), vec![int(4)]);
        assert!(OmegaForm::from_entries(2, 1, &[(1, 1, vec![int(1)])]).is_err());
        assert!(OmegaForm::from_entries(2, 1, &[(0, 2, vec![int(1)])]).is_err());
    }
}

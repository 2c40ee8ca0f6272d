//! The verification suite behind `vmrt verify`: every check runs on
//! deterministic samples, fans out over rayon and merges by sample index, so
//! the report depends only on the fixture, the seed and the sample count.

use std::fmt::Write as _;
use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{format_scalar, is_zero_vec, Mat, RationalSampler, Scalar};
use crate::compactification::{Compactification, PBundlePoint, XPoint};
use crate::error::{Error, Result};
use crate::family::{rho_tangent_symbolic, GrassmannChart, LineFamily};
use crate::lines::{line_through, phi_action, TangentDirectionPoint};
use crate::metabelian::{identities, AlgebraElement, GroupElement, MetabelianGroup, OmegaForm};
use crate::omega_builder::{build_omega, OmegaConstruction};
use crate::varieties::{certify_isotropic, Fixture, IsotropyStatus, VarietyChart};

/// Check names in execution order.
pub const CHECK_NAMES: [&str; 8] = [
    "isotropy",
    "metabelian",
    "levi",
    "h-t-identity",
    "tensor-split",
    "splitting-type",
    "family-dimension",
    "compactification",
];

/// Degenerate draws allowed per sample slot before the slot fails.
pub const MAX_ATTEMPTS: usize = 32;

/// Samples of the `h_t` check that are re-derived by the symbolic route.
pub const SYMBOLIC_SAMPLES: usize = 5;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    pub samples: usize,
    /// Subset of [`CHECK_NAMES`]; `None` runs everything.
    pub checks: Option<Vec<String>>,
    /// Record wall time in the report, which makes it run-dependent.
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 42,
            samples: 100,
            checks: None,
            timing: false,
        }
    }
}

impl VerifyOptions {
    fn selected(&self) -> Result<Vec<&'static str>> {
        let Some(filter) = &self.checks else {
            return Ok(CHECK_NAMES.to_vec());
        };
        for name in filter {
            if !CHECK_NAMES.contains(&name.as_str()) {
                return Err(Error::Parse(format!(
                    "unknown check `{name}`; expected one of {}",
                    CHECK_NAMES.join(", ")
                )));
            }
        }
        Ok(CHECK_NAMES
            .iter()
            .copied()
            .filter(|c| filter.iter().any(|f| f == c))
            .collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GoldenDims {
    pub dim_w: usize,
    pub dim_u: usize,
    pub dim_wprime: usize,
    pub d: usize,
    pub n: usize,
    pub family_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckResult {
    pub name: String,
    pub samples: usize,
    pub passes: usize,
    /// Degenerate draws that were replaced by the next deterministic draw.
    pub skips: usize,
    pub failures: usize,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub label: String,
    pub seed: u64,
    pub samples: usize,
    pub omega_source: String,
    pub dims: GoldenDims,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl VerificationReport {
    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let d = &self.dims;
        let mut out = String::new();
        let _ = writeln!(out, "{} (seed {}, {} samples, ω {})", self.label, self.seed, self.samples, self.omega_source);
        let _ = writeln!(
            out,
            "dimW={} dimU={} dimWprime={} d={} n={} familyDim={}",
            d.dim_w, d.dim_u, d.dim_wprime, d.d, d.n, d.family_dim
        );
        let _ = writeln!(out, "{:<18} {:>7} {:>6} {:>5} {:>8}  verdict", "check", "samples", "passes", "skips", "failures");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<18} {:>7} {:>6} {:>5} {:>8}  {}",
                c.name,
                c.samples,
                c.passes,
                c.skips,
                c.failures,
                if c.passed { "PASS" } else { "FAIL" }
            );
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "  witness: {w}");
            }
        }
        if let Some(ms) = self.wall_time_ms {
            let _ = writeln!(out, "wall time: {ms} ms");
        }
        let _ = writeln!(out, "overall: {}", if self.passed { "PASS" } else { "FAIL" });
        out
    }
}

enum Outcome {
    Pass,
    Fail(Value),
}

/// Sample-level errors that mean "draw again" rather than "check failed".
fn is_degenerate(e: &Error) -> bool {
    matches!(
        e,
        Error::FrameDegenerate { .. } | Error::ChartMiss { .. } | Error::RankDeficient { .. } | Error::ZeroDirection
    )
}

pub fn scalars_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(format_scalar(c))).collect())
}

pub fn element_json(x: &GroupElement) -> Value {
    json!({ "w": scalars_json(&x.w), "u": scalars_json(&x.u) })
}

fn mat_json(m: &Mat) -> Value {
    Value::Array(m.row_vecs().iter().map(|r| scalars_json(r)).collect())
}

fn run_sampled<F>(name: &str, seed: u64, stream: u64, samples: usize, f: F) -> CheckResult
where
    F: Fn(&mut RationalSampler, usize) -> Result<Outcome> + Sync,
{
    let slots: Vec<(usize, Option<Value>)> = (0..samples)
        .into_par_iter()
        .map(|slot| {
            let mut skips = 0;
            for attempt in 0..MAX_ATTEMPTS {
                let index = (slot * MAX_ATTEMPTS + attempt) as u64;
                let mut rng = RationalSampler::for_sample(seed, stream, index);
                match f(&mut rng, slot) {
                    Ok(Outcome::Pass) => return (skips, None),
                    Ok(Outcome::Fail(w)) => return (skips, Some(w)),
                    Err(e) if is_degenerate(&e) => skips += 1,
                    Err(e) => return (skips, Some(json!({ "error": e.to_string() }))),
                }
            }
            (skips, Some(json!({ "error": "no nondegenerate draw", "attempts": MAX_ATTEMPTS })))
        })
        .collect();

    let skips = slots.iter().map(|s| s.0).sum();
    let failures = slots.iter().filter(|s| s.1.is_some()).count();
    let witness = slots.iter().enumerate().find_map(|(i, (_, w))| {
        w.as_ref().map(|w| {
            let mut w = w.clone();
            if let Value::Object(m) = &mut w {
                m.insert("sample".into(), json!(i));
            }
            w
        })
    });
    CheckResult {
        name: name.to_string(),
        samples,
        passes: samples - failures,
        skips,
        failures,
        passed: failures == 0,
        witness,
    }
}

fn single(name: &str, outcome: Result<Outcome>) -> CheckResult {
    let witness = match outcome {
        Ok(Outcome::Pass) => None,
        Ok(Outcome::Fail(w)) => Some(w),
        Err(e) => Some(json!({ "error": e.to_string() })),
    };
    let failed = witness.is_some() as usize;
    CheckResult {
        name: name.to_string(),
        samples: 1,
        passes: 1 - failed,
        skips: 0,
        failures: failed,
        passed: failed == 0,
        witness,
    }
}

fn verdict(ok: bool, witness: impl FnOnce() -> Value) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(witness())
    }
}

/// Everything the checks share: the chart, the `ω` in force and how it was
/// obtained.
pub struct Suite {
    pub fixture_label: String,
    pub construction: OmegaConstruction,
    pub omega_supplied: bool,
    pub family: LineFamily,
    pub seed: u64,
}

impl Suite {
    /// Builds `ω` from the chart (always, for `dim W'`) and uses the supplied
    /// `ω` if the fixture has one.
    pub fn prepare(fixture: &Fixture, seed: u64) -> Result<Self> {
        let construction = build_omega(&fixture.chart, seed)?;
        let omega = fixture.omega.clone().unwrap_or_else(|| construction.omega.clone());
        Ok(Suite {
            fixture_label: fixture.chart.label().to_string(),
            construction,
            omega_supplied: fixture.omega.is_some(),
            family: LineFamily::new(fixture.chart.clone(), omega)?,
            seed,
        })
    }

    pub fn chart(&self) -> &VarietyChart {
        self.family.chart()
    }

    pub fn group(&self) -> &MetabelianGroup {
        self.family.group()
    }

    pub fn omega(&self) -> &OmegaForm {
        self.family.omega()
    }

    fn random_element(&self, rng: &mut RationalSampler) -> GroupElement {
        GroupElement::new(rng.vector(self.group().dim_w()), rng.vector(self.group().dim_u()))
    }

    /// A parameter point with a nondegenerate affine tangent frame.
    fn regular_point(&self, rng: &mut RationalSampler) -> Result<Vec<Scalar>> {
        let p = self.chart().sample_point(rng);
        self.chart().affine_tangent_frame(&p)?;
        Ok(p)
    }

    pub fn golden_dims(&self) -> Result<GoldenDims> {
        let dim_w = self.chart().ambient_dim();
        let dim_u = self.omega().dim_u();
        Ok(GoldenDims {
            dim_w,
            dim_u,
            dim_wprime: self.construction.dim_w_prime(),
            d: self.chart().param_dim(),
            n: dim_w + dim_u,
            family_dim: self.family.family_dimension(self.seed)?.rank,
        })
    }

    pub fn run_check(&self, name: &str, samples: usize) -> CheckResult {
        let stream = CHECK_NAMES.iter().position(|c| *c == name).expect("known check") as u64;
        let seed = self.seed;
        match name {
            "isotropy" => single(name, self.isotropy()),
            "family-dimension" => single(name, self.family_dimension()),
            "metabelian" => run_sampled(name, seed, stream, samples, |rng, slot| self.metabelian(rng, slot)),
            "levi" => run_sampled(name, seed, stream, samples, |rng, _| self.levi(rng)),
            "h-t-identity" => run_sampled(name, seed, stream, samples, |rng, slot| self.h_t(rng, slot)),
            "tensor-split" => run_sampled(name, seed, stream, samples, |rng, _| self.tensor_split(rng)),
            "splitting-type" => run_sampled(name, seed, stream, samples, |rng, _| self.splitting_type(rng)),
            "compactification" => run_sampled(name, seed, stream, samples, |rng, slot| self.compactification(rng, slot)),
            other => unreachable!("unknown check {other}"),
        }
    }

    fn isotropy(&self) -> Result<Outcome> {
        let cert = certify_isotropic(self.chart(), self.omega())?;
        Ok(match cert.status {
            IsotropyStatus::Proven => Outcome::Pass,
            IsotropyStatus::Failed(w) => Outcome::Fail(json!({
                "point": scalars_json(&w.point),
                "pair": [w.pair.0, w.pair.1],
                "value": scalars_json(&w.value),
            })),
        })
    }

    fn metabelian(&self, rng: &mut RationalSampler, slot: usize) -> Result<Outcome> {
        if slot == 0 {
            let omega = self.omega();
            let symbolic = [
                ("associativity", identities::associativity(omega)),
                ("commutator", identities::commutator(omega)),
                ("one-parameter-subgroup", identities::one_parameter_subgroup(omega)),
            ];
            if let Some((law, _)) = symbolic.iter().find(|(_, ok)| !ok) {
                return Ok(Outcome::Fail(json!({ "identity": law })));
            }
        }
        let group = self.group();
        let x = self.random_element(rng);
        let alg = |rng: &mut RationalSampler| AlgebraElement::new(rng.vector(group.dim_w()), rng.vector(group.dim_u()));
        let (a, b, c) = (alg(rng), alg(rng), alg(rng));
        let v = rng.vector(group.dim_w());
        let mc = group.maurer_cartan_log_derivative(&x, &v);
        let ok = identities::exp_log_and_inverse(group, &x) && identities::jacobi(group, &a, &b, &c) && mc.is_ok();
        Ok(verdict(ok, || json!({ "x": element_json(&x), "v": scalars_json(&v) })))
    }

    fn levi(&self, rng: &mut RationalSampler) -> Result<Outcome> {
        let x = self.random_element(rng);
        let dw = self.group().dim_w();
        let (u, v) = (rng.vector(dw), rng.vector(dw));
        let levi = self.group().levi_tensor(&x, &u, &v)?;
        let expected = self.omega().apply(&u, &v);
        Ok(verdict(levi == expected, || {
            json!({ "x": element_json(&x), "u": scalars_json(&u), "v": scalars_json(&v), "levi": scalars_json(&levi) })
        }))
    }

    fn h_t(&self, rng: &mut RationalSampler, slot: usize) -> Result<Outcome> {
        let fam = &self.family;
        let p = self.regular_point(rng)?;
        let x = self.random_element(rng);
        let delta = rng.nonzero_vector(fam.param_dim());
        let t = rng.next_nonzero();
        let plucker = fam.plucker_at(&p, &x)?;
        let standard = GrassmannChart::standard(&plucker);
        let alternate = GrassmannChart::alternate(&plucker).ok_or(Error::ChartMiss {
            pivots: standard.pivots(),
        })?;
        let witness = |reason: &str, chart: &GrassmannChart, residual: &[Scalar]| {
            json!({
                "reason": reason,
                "p": scalars_json(&p),
                "x": element_json(&x),
                "delta": scalars_json(&delta),
                "t": format_scalar(&t),
                "pivots": [chart.pivots().0, chart.pivots().1],
                "residual": scalars_json(residual),
            })
        };
        if !fam.check_gamma_well_defined(&p, &x)? {
            return Ok(Outcome::Fail(witness("basepoint variation kernel is not ℂw", &standard, &[])));
        }
        for chart in [standard, alternate] {
            let report = fam.check_h_t_identity_in(&chart, &p, &x, &delta, &t)?;
            if !report.holds() {
                let reason = if is_zero_vec(&report.residual) {
                    "solution outside T_wS⁺ mod ℂw"
                } else {
                    "nonzero residual"
                };
                return Ok(Outcome::Fail(witness(reason, &chart, &report.residual)));
            }
            if slot < SYMBOLIC_SAMPLES {
                for time in [t.clone(), Scalar::zero()] {
                    let jet = fam.rho_tangent_in(&chart, &p, &x, &delta, &time)?;
                    let symbolic = rho_tangent_symbolic(fam, &chart, &p, &x, &delta, &time)?;
                    if jet != symbolic {
                        return Ok(Outcome::Fail(witness("jet and symbolic routes disagree", &chart, &[])));
                    }
                }
            }
        }
        Ok(Outcome::Pass)
    }

    fn tensor_split(&self, rng: &mut RationalSampler) -> Result<Outcome> {
        let p = self.regular_point(rng)?;
        let x = self.random_element(rng);
        let split = self.family.tensor_split_frames(&p, &x)?;
        let failing: Vec<String> = split
            .linearity
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(t, _)| format_scalar(t))
            .collect();
        Ok(verdict(failing.is_empty(), || {
            json!({
                "p": scalars_json(&p),
                "x": element_json(&x),
                "nonlinearAt": failing,
                "j0": mat_json(&split.j0),
                "jInf": mat_json(&split.j_inf),
            })
        }))
    }

    fn splitting_type(&self, rng: &mut RationalSampler) -> Result<Outcome> {
        let p = self.regular_point(rng)?;
        let x = self.random_element(rng);
        let w = self.family.splitting_type_witness(&p, &x)?;
        Ok(verdict(w.passes(), || {
            json!({
                "p": scalars_json(&p),
                "x": element_json(&x),
                "combinedRank": w.combined_rank,
                "rankAtZero": w.rank_at_zero,
                "ranksNonzero": w.ranks_nonzero.iter().map(|(s, r)| json!([format_scalar(s), r])).collect::<Vec<_>>(),
            })
        }))
    }

    fn family_dimension(&self) -> Result<Outcome> {
        let fd = self.family.family_dimension(self.seed)?;
        Ok(verdict(fd.matches(), || {
            json!({ "rank": fd.rank, "expected": fd.expected, "pointsUsed": fd.points_used })
        }))
    }

    /// One `ξ`-fiber pair, one equivariance triple and one compactified line
    /// per sample.
    fn compactification(&self, rng: &mut RationalSampler, slot: usize) -> Result<Outcome> {
        let comp = Compactification::new(self.family.clone());
        let group = self.group();
        let chart = self.chart();
        let p = self.regular_point(rng)?;
        let x = self.random_element(rng);
        let w = chart.eval(&p);

        // ξ-fiber pair: same coset, unrelated base, or another point of S.
        let (p2, x2) = match slot % 3 {
            0 => {
                let v = chart.differential(&p, &rng.nonzero_vector(chart.param_dim()));
                let radial = rng.next_scalar();
                let tangent: Vec<Scalar> = v.iter().zip(&w).map(|(a, b)| a + b * &radial).collect();
                (p.clone(), group.mul(&x, &GroupElement::exp_w(tangent, group.dim_u())))
            }
            1 => (p.clone(), self.random_element(rng)),
            _ => (self.regular_point(rng)?, x.clone()),
        };
        let scale = rng.next_nonzero();
        let w2: Vec<Scalar> = chart.eval(&p2).iter().map(|c| c * &scale).collect();
        let l1 = line_through(group, &x, &w)?;
        let l2 = line_through(group, &x2, &w2)?;
        let m1 = comp.mu_hat(&PBundlePoint::OnSection(l1.clone()))?;
        let m2 = comp.mu_hat(&PBundlePoint::OnSection(l2))?;
        let expected = same_fiber_oracle(chart, group, (&p, &x), (&p2, &x2))?;
        if (m1 == m2) != expected {
            return Ok(Outcome::Fail(json!({
                "reason": "ξ-fiber equality disagrees with the coset oracle",
                "p": scalars_json(&p), "x": element_json(&x),
                "p2": scalars_json(&p2), "x2": element_json(&x2),
                "expectedEqual": expected,
            })));
        }

        // Equivariance and action axioms.
        let (g1, g2) = (self.random_element(rng), self.random_element(rng));
        let alpha = TangentDirectionPoint::new(p.clone(), x.clone());
        for point in [PBundlePoint::OnSection(l1.clone()), PBundlePoint::OffSection(alpha.clone())] {
            let image = comp.mu_hat(&point)?;
            let lhs = comp.mu_hat(&comp.act_on_bundle(&g1, &point)?)?;
            let rhs = comp.g_action(&g1, &image)?;
            let composed = comp.g_action(&g1, &comp.g_action(&g2, &image)?)?;
            let direct = comp.g_action(&group.mul(&g1, &g2), &image)?;
            if lhs != rhs || composed != direct || comp.g_action(&group.identity(), &image)? != image {
                return Ok(Outcome::Fail(json!({
                    "reason": "equivariance or action axiom",
                    "p": scalars_json(&p), "x": element_json(&x),
                    "g1": element_json(&g1), "g2": element_json(&g2),
                })));
            }
        }

        // Compactified line: distinct affine points, one point at infinity,
        // and the φ_t-orbit of α on the line.
        let grid: Vec<Scalar> = (0..4).map(|_| rng.next_scalar()).collect();
        let cl = comp.compactified_line(&l1, &grid)?;
        let pts = cl.points();
        let boundary_count = pts.iter().filter(|q| q.is_boundary()).count();
        let distinct = (0..grid.len()).all(|i| (0..i).all(|j| grid[i] == grid[j] || pts[i] != pts[j]));
        let orbit_on_line = grid.iter().all(|t| match comp.mu_hat(&PBundlePoint::OffSection(phi_action(chart, group, t, &alpha))) {
            Ok(XPoint::Interior(y)) => l1.parameter_of(group, &y).is_some(),
            _ => false,
        });
        Ok(verdict(boundary_count == 1 && distinct && orbit_on_line, || {
            json!({
                "reason": "compactified line",
                "p": scalars_json(&p), "x": element_json(&x),
                "boundaryPoints": boundary_count, "distinct": distinct, "orbitOnLine": orbit_on_line,
            })
        }))
    }
}

/// Decides `ξ(σ(ℓ^{φ(p)}_x)) = ξ(σ(ℓ^{φ(p')}_{x'}))` without canonical forms:
/// `[φ(p)] = [φ(p')]` and `x⁻¹x' ∈ exp(T_s S⁺ ⊕ 0)`.
pub fn same_fiber_oracle(
    chart: &VarietyChart,
    group: &MetabelianGroup,
    (p, x): (&[Scalar], &GroupElement),
    (p2, x2): (&[Scalar], &GroupElement),
) -> Result<bool> {
    let (w, w2) = (chart.eval(p), chart.eval(p2));
    if Mat::from_rows(&[w.clone(), w2], w.len()).rank() != 1 {
        return Ok(false);
    }
    let diff = group.mul(&group.inverse(x), x2);
    if !is_zero_vec(&diff.u) {
        return Ok(false);
    }
    let mut rows = chart.affine_tangent_frame(p)?;
    let before = Mat::from_rows(&rows, w.len()).rank();
    rows.push(diff.w);
    Ok(Mat::from_rows(&rows, w.len()).rank() == before)
}

/// Runs the selected checks on `fixture`.
pub fn run(fixture: &Fixture, options: &VerifyOptions) -> Result<VerificationReport> {
    let started = Instant::now();
    let selected = options.selected()?;
    let suite = Suite::prepare(fixture, options.seed)?;
    let dims = suite.golden_dims()?;
    let checks: Vec<CheckResult> = selected.iter().map(|name| suite.run_check(name, options.samples)).collect();
    let passed = checks.iter().all(|c| c.passed);
    Ok(VerificationReport {
        label: suite.fixture_label.clone(),
        seed: options.seed,
        samples: options.samples,
        omega_source: if suite.omega_supplied { "supplied" } else { "constructed" }.to_string(),
        dims,
        checks,
        passed,
        wall_time_ms: options.timing.then(|| started.elapsed().as_millis() as u64),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::varieties::builtin;

    fn quick(name: &str) -> VerificationReport {
        let options = VerifyOptions {
            samples: 6,
            ..VerifyOptions::default()
        };
        run(&builtin(name).unwrap(), &options).unwrap()
    }

    #[test]
    fn twisted_cubic_passes_with_golden_dims() {
        let r = quick("veronese-2-3");
        assert!(r.passed, "{}", r.to_text());
        let d = &r.dims;
        assert_eq!((d.dim_w, d.dim_u, d.dim_wprime, d.d, d.n, d.family_dim), (4, 1, 5, 1, 5, 5));
        for c in &r.checks {
            assert_eq!(c.passes + c.failures, c.samples);
        }
    }

    #[test]
    fn flat_conic_passes() {
        let r = quick("flat-conic");
        assert!(r.passed, "{}", r.to_text());
        assert_eq!(r.dims.dim_u, 0);
    }

    #[test]
    fn adversarial_fails_isotropy_with_witness() {
        let r = quick("adversarial-cubic");
        assert!(!r.passed);
        let iso = r.check("isotropy").unwrap();
        assert!(!iso.passed);
        assert_eq!(iso.witness.as_ref().unwrap()["pair"], json!([0, 1]));
    }

    #[test]
    fn filter_rejects_unknown_names() {
        let options = VerifyOptions {
            checks: Some(vec!["nope".into()]),
            ..VerifyOptions::default()
        };
        assert!(matches!(run(&builtin("flat-conic").unwrap(), &options), Err(Error::Parse(_))));
    }
}

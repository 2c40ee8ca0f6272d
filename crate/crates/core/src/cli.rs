//! `vmrt` command line: `verify`, `info`, `build-omega` and `sample-line`.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{format_scalar, parse_scalar, q, Scalar};
use crate::error::{Error, Result};
use crate::lines::{boundary_point, line_through, plucker_embed};
use crate::metabelian::{GroupElement, MetabelianGroup};
use crate::omega_builder::build_omega;
use crate::varieties::{resolve, OmegaSpec, VarietySpec};
use crate::verify::{run, scalars_json, VerifyOptions};

/// Exit code when every check passes.
pub const EXIT_PASS: i32 = 0;
/// Exit code when a check fails.
pub const EXIT_FAIL: i32 = 1;
/// Exit code for unreadable or malformed input.
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "vmrt", version, about = "Exact verification of metabelian line families")]
pub struct Cli {
    /// Worker threads for sample fan-out (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the verification suite and emit a report.
    Verify {
        /// `builtin:<name>` or a path to a JSON variety spec.
        spec: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Comma-separated subset of checks.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Include wall time (the report is then no longer byte-stable).
        #[arg(long)]
        timing: bool,
    },
    /// Print dimensions of the spec and of the constructed group.
    Info {
        spec: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Construct ω and print the spec with its ω table.
    BuildOmega {
        spec: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Describe the line through a base point in the direction φ(p).
    SampleLine {
        spec: String,
        /// Parameter point, comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// W-part of the base point (default 0).
        #[arg(long, allow_hyphen_values = true)]
        base_w: Option<String>,
        /// U-part of the base point (default 0).
        #[arg(long, allow_hyphen_values = true)]
        base_u: Option<String>,
        /// Seed for constructing ω when the spec has none.
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn parse_vector(text: &str) -> Result<Vec<Scalar>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|s| parse_scalar(s.trim())).collect()
}

fn emit(out: &mut dyn Write, path: Option<&PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value");
    s.push('\n');
    s
}

/// Parses `args` and runs the command, returning the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let result = match cli.jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => {
                let mut buffer = Vec::new();
                let r = pool.install(|| execute(&cli.command, &mut buffer));
                out.write_all(&buffer).map_err(Error::from).and(r)
            }
            Err(e) => Err(Error::Consistency(e.to_string())),
        },
        None => execute(&cli.command, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Verify {
            spec,
            seed,
            samples,
            checks,
            out: path,
            format,
            timing,
        } => {
            let fixture = resolve(spec)?;
            let options = VerifyOptions {
                seed: *seed,
                samples: *samples,
                checks: checks.clone(),
                timing: *timing,
            };
            let report = run(&fixture, &options)?;
            let text = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            emit(out, path.as_ref(), &text)?;
            Ok(if report.passed { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Info { spec, seed, format } => {
            let fixture = resolve(spec)?;
            let chart = &fixture.chart;
            let n_w = chart.ambient_dim();
            let dim_u = match &fixture.omega {
                Some(o) => o.dim_u(),
                None => build_omega(chart, *seed)?.dim_u,
            };
            let info = json!({
                "label": chart.label(),
                "dimW": n_w,
                "d": chart.param_dim(),
                "dimLambda2W": n_w * n_w.saturating_sub(1) / 2,
                "dimU": dim_u,
                "n": n_w + dim_u,
                "predictedFamilyDim": n_w + dim_u - 1 + chart.param_dim(),
            });
            let text = match format {
                Format::Json => pretty(&info),
                Format::Text => {
                    let mut s = String::new();
                    for key in ["label", "dimW", "d", "dimLambda2W", "dimU", "n", "predictedFamilyDim"] {
                        s.push_str(&format!("{key}: {}\n", info[key].to_string().trim_matches('"')));
                    }
                    s
                }
            };
            out.write_all(text.as_bytes())?;
            Ok(EXIT_PASS)
        }
        Command::BuildOmega {
            spec,
            seed,
            out: path,
            format,
        } => {
            let fixture = resolve(spec)?;
            let chart = &fixture.chart;
            let c = build_omega(chart, *seed)?;
            let text = match format {
                Format::Json => {
                    let spec = VarietySpec {
                        label: chart.label().to_string(),
                        variables: chart.variables().to_vec(),
                        coordinates: chart.coords().iter().map(|p| p.display_with(chart.variables()).to_string()).collect(),
                        omega: Some(OmegaSpec::from_form(&c.omega)),
                    };
                    let mut s = serde_json::to_string_pretty(&spec)?;
                    s.push('\n');
                    s
                }
                Format::Text => {
                    format!(
                        "{}: dimΛ²W={} dimW'={} dimU={} (points used {}, skipped {}, seed {})\n",
                        c.label,
                        c.dim_lambda2,
                        c.dim_w_prime(),
                        c.dim_u,
                        c.points_used,
                        c.points_skipped,
                        c.seed
                    ) + &format!("rank history: {:?}\n", c.rank_history)
                }
            };
            emit(out, path.as_ref(), &text)?;
            Ok(EXIT_PASS)
        }
        Command::SampleLine {
            spec,
            point,
            base_w,
            base_u,
            seed,
        } => {
            let fixture = resolve(spec)?;
            let chart = &fixture.chart;
            let omega = match &fixture.omega {
                Some(o) => o.clone(),
                None => build_omega(chart, *seed)?.omega,
            };
            let group = MetabelianGroup::new(omega);
            let p = parse_vector(point)?;
            if p.len() != chart.param_dim() {
                return Err(Error::DimensionMismatch {
                    expected: chart.param_dim(),
                    got: p.len(),
                });
            }
            let zero_or = |text: &Option<String>, n: usize| -> Result<Vec<Scalar>> {
                match text {
                    Some(t) => parse_vector(t),
                    None => Ok(vec![q(0, 1); n]),
                }
            };
            let x = GroupElement::new(zero_or(base_w, group.dim_w())?, zero_or(base_u, group.dim_u())?);
            let line = line_through(&group, &x, &chart.eval(&p))?;
            let base = line.base();
            let half = q(1, 2);
            let u_slope: Vec<Scalar> = group
                .omega()
                .apply(&base.w, line.direction())
                .iter()
                .map(|c| c * &half)
                .collect();
            let plucker = plucker_embed(&group, &line);
            let value = json!({
                "label": chart.label(),
                "point": scalars_json(&p),
                "direction": scalars_json(line.direction()),
                "base": { "w": scalars_json(&base.w), "u": scalars_json(&base.u) },
                "parametrization": {
                    "w": { "at0": scalars_json(&base.w), "slope": scalars_json(line.direction()) },
                    "u": { "at0": scalars_json(&base.u), "slope": scalars_json(&u_slope) },
                },
                "plucker": {
                    "basis": plucker.basis().row_vecs().iter().map(|r| scalars_json(r)).collect::<Vec<_>>(),
                    "pivots": [plucker.pivots().0, plucker.pivots().1],
                    "vector": scalars_json(plucker.plucker_vector()),
                },
                "boundary": boundary_point(&group, &line).coords().iter().map(format_scalar).collect::<Vec<_>>(),
            });
            out.write_all(pretty(&value).as_bytes())?;
            Ok(EXIT_PASS)
        }
    }
}

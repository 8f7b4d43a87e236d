//! Argument parsing and dispatch for the `wps` binary. `run` returns the
//! captured output instead of printing, so tests can drive it directly.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::arith::{parse_rational, Degree, Rational, WeightVector};
use crate::check::{run_checks, Rings};
use crate::chenruan::CrRing;
use crate::error::{Error, Result};
use crate::expr::{eval, parse, EvalRing};
use crate::kawasaki::KawasakiRing;
use crate::kunneth::{odd_torsion_witness, product_groups};
use crate::orbifold::OrbifoldRing;
use crate::report;

#[derive(Debug, Parser)]
#[command(
    name = "wps",
    about = "Integral and Chen-Ruan cohomology of weighted projective spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RingKind {
    Kawasaki,
    Orbifold,
    Chenruan,
}

#[derive(Debug, clap::Args)]
pub struct Common {
    /// Comma-separated positive weights, e.g. 1,2,2,3,3,3
    #[arg(long)]
    pub weights: WeightVector,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Kawasaki's ring: l-table, generator degrees, product relations, groups
    Kawasaki {
        #[command(flatten)]
        common: Common,
        /// Highest degree listed (default 2(n+2))
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Orbifold cohomology Z[u]/<N u^(n+1)> and the images of q*
    Orbifold {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Chen-Ruan cohomology: sector table, presentation, multiplication table
    Chenruan {
        #[command(flatten)]
        common: Common,
        /// Highest (rational) degree listed, e.g. 20 or 29/3
        #[arg(long)]
        max_degree: Option<String>,
        #[arg(long)]
        sectors: bool,
        #[arg(long)]
        multtable: bool,
        #[arg(long)]
        presentation: bool,
    },
    /// Degree-wise groups of a product of two weighted projective orbifolds
    Kunneth {
        #[command(flatten)]
        common: Common,
        /// Weights of the second factor
        #[arg(long)]
        weights_b: WeightVector,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Evaluates an expression and prints its normal form and degree
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        ring: RingKind,
        expr: String,
    },
    /// Runs the invariant suite; exits 1 if any check fails
    Check {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: if matches!(e, Error::Invariant(_)) {
                1
            } else {
                2
            },
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn default_max(w: &WeightVector) -> u32 {
    2 * (w.dim() as u32 + 2)
}

fn dispatch(cmd: &Command) -> Result<Outcome> {
    let out = match cmd {
        Command::Kawasaki { common, max_degree } => {
            let max = max_degree.unwrap_or_else(|| default_max(&common.weights));
            let ring = KawasakiRing::new(common.weights.clone());
            match common.format {
                Format::Text => report::kawasaki_text(&ring, max),
                Format::Json => report::to_json_string(&report::kawasaki_json(&ring, max)),
                Format::Latex => report::kawasaki_latex(&ring),
            }
        }
        Command::Orbifold { common, max_degree } => {
            let max = max_degree.unwrap_or_else(|| default_max(&common.weights));
            let ring = OrbifoldRing::new(common.weights.clone());
            match common.format {
                Format::Text => report::orbifold_text(&ring, max),
                Format::Json => report::to_json_string(&report::orbifold_json(&ring, max)),
                Format::Latex => report::orbifold_latex(&ring),
            }
        }
        Command::Chenruan {
            common,
            max_degree,
            sectors,
            multtable,
            presentation,
        } => {
            let max = match max_degree {
                Some(s) => parse_rational(s)?,
                None => Rational::from_integer(default_max(&common.weights).into()),
            };
            let ring = CrRing::new(common.weights.clone())?;
            let all = !(*sectors || *multtable || *presentation);
            chenruan_output(
                &ring,
                common.format,
                &max,
                all || *sectors,
                *multtable,
                all || *presentation,
                all,
            )?
        }
        Command::Kunneth {
            common,
            weights_b,
            max_degree,
        } => {
            let (a, b) = (&common.weights, weights_b);
            let max = max_degree.unwrap_or(2 * (a.dim() as u32 + b.dim() as u32 + 2));
            let p = product_groups(a, b, max);
            let witness = odd_torsion_witness(a, b, max);
            match common.format {
                Format::Text => report::kunneth_text(&p, witness),
                Format::Json => report::to_json_string(&report::kunneth_json(&p, witness)),
                Format::Latex => report::kunneth_latex(&p),
            }
        }
        Command::Eval { common, ring, expr } => {
            let w = common.weights.clone();
            let w2 = w.clone();
            let parsed = parse(expr)?;
            match ring {
                RingKind::Kawasaki => eval_output(
                    &KawasakiRing::new(w),
                    &w2,
                    &parsed,
                    common.format,
                    "kawasaki",
                    |r, x| r.degree(x),
                )?,
                RingKind::Orbifold => eval_output(
                    &OrbifoldRing::new(w),
                    &w2,
                    &parsed,
                    common.format,
                    "orbifold",
                    |r, x| r.degree(x),
                )?,
                RingKind::Chenruan => eval_output(
                    &CrRing::new(w)?,
                    &w2,
                    &parsed,
                    common.format,
                    "chenruan",
                    |r, x| r.degree(x),
                )?,
            }
        }
        Command::Check { common } => return check_output(&common.weights, common.format),
    };
    Ok(Outcome::ok(out))
}

fn chenruan_output(
    ring: &CrRing,
    format: Format,
    max: &Rational,
    sectors: bool,
    multtable: bool,
    presentation: bool,
    groups: bool,
) -> Result<String> {
    let mut s = String::new();
    match format {
        Format::Json => {
            return Ok(report::to_json_string(&report::chenruan_json(
                ring, max, multtable,
            )?))
        }
        Format::Text => {
            let mut parts = Vec::new();
            if sectors {
                parts.push(report::sector_table_text(ring));
            }
            if presentation {
                parts.push(report::presentation_text(ring)?);
            }
            if multtable {
                parts.push(report::multtable_text(ring)?);
            }
            if groups {
                parts.push(report::cr_groups_text(ring, max));
            }
            s.push_str(&parts.join("\n"));
        }
        Format::Latex => {
            let mut parts = Vec::new();
            if sectors {
                parts.push(report::sector_table_latex(ring));
            }
            if presentation {
                parts.push(report::presentation_latex(ring)?);
            }
            if multtable {
                parts.push(report::multtable_latex(ring)?);
            }
            s.push_str(&parts.join("\n"));
        }
    }
    Ok(s)
}

fn eval_output<R, F>(
    ring: &R,
    weights: &WeightVector,
    expr: &crate::expr::Expr,
    format: Format,
    name: &str,
    degree: F,
) -> Result<String>
where
    R: EvalRing,
    R::Element: std::fmt::Display + IsZero,
    F: Fn(&R, &R::Element) -> Result<Degree>,
{
    let value = eval(expr, ring)?;
    // Zero lies in every degree.
    let deg = if value.is_zero_element() {
        None
    } else {
        Some(degree(ring, &value)?)
    };
    let deg_text = match &deg {
        None => "any".to_string(),
        Some(d) => d.to_string(),
    };
    Ok(match format {
        Format::Text => format!("{value}\ndegree: {deg_text}\n"),
        Format::Json => report::to_json_string(&json!({
            "ring": name,
            "weights": weights.weights(),
            "input": expr.to_string(),
            "normal_form": value.to_string(),
            "degree": match deg {
                None => Value::Null,
                Some(Degree::Homogeneous(q)) => report::rational_json(&q),
                Some(Degree::Inhomogeneous) => Value::String("inhomogeneous".into()),
            },
        })),
        Format::Latex => format!("{}\n", element_latex(&value.to_string())),
    })
}

/// Zero test shared by the three element types.
pub trait IsZero {
    fn is_zero_element(&self) -> bool;
}

impl IsZero for crate::kawasaki::KawasakiElement {
    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }
}

impl IsZero for crate::orbifold::OrbifoldElement {
    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }
}

impl IsZero for crate::chenruan::CrElement {
    fn is_zero_element(&self) -> bool {
        self.is_zero()
    }
}

/// `4u^2 a4 - g2` becomes `4u^{2}\alpha_{4} - \gamma_{2}`.
fn element_latex(text: &str) -> String {
    let mut out = String::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let digits_from = |start: usize| {
            let mut end = start;
            while end < chars.len() && chars[end].is_ascii_digit() {
                end += 1;
            }
            end
        };
        match c {
            '^' => {
                let end = digits_from(i + 1);
                let _ = write!(out, "^{{{}}}", chars[i + 1..end].iter().collect::<String>());
                i = end;
            }
            'a' | 'g' if i + 1 < chars.len() && chars[i + 1].is_ascii_digit() => {
                let end = digits_from(i + 1);
                let name = if c == 'a' { "\\alpha" } else { "\\gamma" };
                let _ = write!(
                    out,
                    "{name}_{{{}}}",
                    chars[i + 1..end].iter().collect::<String>()
                );
                i = end;
            }
            ' ' if i > 0
                && i + 1 < chars.len()
                && chars[i - 1] != '+'
                && chars[i - 1] != '-'
                && chars[i + 1] != '+'
                && chars[i + 1] != '-' =>
            {
                i += 1;
            }
            _ => {
                out.push(c);
                i += 1;
            }
        }
    }
    out
}

fn check_output(weights: &WeightVector, format: Format) -> Result<Outcome> {
    let rings = Rings::new(weights.clone())?;
    let results = run_checks(&rings);
    let all_passed = results.iter().all(|r| r.passed);
    let stdout = match format {
        Format::Text => {
            let mut s = format!("invariant checks for weights {weights}\n");
            for r in &results {
                if r.passed {
                    writeln!(s, "PASS  {}", r.name).unwrap();
                } else {
                    writeln!(s, "FAIL  {}: {}", r.name, r.detail).unwrap();
                }
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            writeln!(s, "{} passed, {failed} failed", results.len() - failed).unwrap();
            s
        }
        Format::Json => report::to_json_string(&json!({
            "weights": weights.weights(),
            "passed": all_passed,
            "checks": results.iter().map(|r| json!({
                "name": r.name,
                "passed": r.passed,
                "detail": r.detail,
            })).collect::<Vec<_>>(),
        })),
        Format::Latex => {
            let mut s = String::from("\\begin{array}{l|c}\n");
            for r in &results {
                let mark = if r.passed { "\\checkmark" } else { "\\times" };
                writeln!(s, "\\text{{{}}} & {mark} \\\\", r.name).unwrap();
            }
            s.push_str("\\end{array}\n");
            s
        }
    };
    Ok(Outcome {
        code: if all_passed { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_elements() {
        assert_eq!(element_latex("4u^2 a4"), "4u^{2}\\alpha_{4}");
        assert_eq!(
            element_latex("6g2 - 3g1 + 1"),
            "6\\gamma_{2} - 3\\gamma_{1} + 1"
        );
        assert_eq!(element_latex("27u^4"), "27u^{4}");
    }

    #[test]
    fn usage_errors_exit_2() {
        let out = run(["wps", "kawasaki", "--weights", "1,0"]);
        assert_eq!(out.code, 2);
        assert!(!out.stderr.is_empty());
        let out = run(["wps", "frobnicate"]);
        assert_eq!(out.code, 2);
    }

    #[test]
    fn help_is_success() {
        let out = run(["wps", "--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("chenruan"));
    }
}

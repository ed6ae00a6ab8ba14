//! Command-line surface. [`dispatch`] returns the exit code and the text to
//! print so the binary stays a thin wrapper.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or input error,
//! 3 a computation-domain error.

use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::doc::{load_suite_config, ElementDoc, GradedDoc};
use crate::element::WeylElement;
use crate::endo::{apply_endo, build_endo, EndoPair};
use crate::error::Error;
use crate::maps::{drop_profile, MapSpec};
use crate::membership::subalgebra_membership;
use crate::newton::{find_generic_weight, newton_polygon, weighted_degree, Weight};
use crate::parse::parse;
use crate::recipe::{compile, EndoRecipe};
use crate::semigroup::semigroup_analyze;
use crate::spectral::{candidate_set, centralizer_window, eigenvalue_scan, nilpotent_closure_window};
use crate::window::Window;
use crate::checks::{run_suite, SuiteConfig};

#[derive(Parser, Debug)]
#[command(name = "weyl", version, about = "Exact computation in the first Weyl algebra")]
struct Cli {
    /// Emit JSON documents instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug, Clone)]
struct WeightArgs {
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    rho: i64,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    eta: i64,
}

impl WeightArgs {
    fn weight(&self) -> Weight {
        Weight::new(self.rho, self.eta)
    }
}

#[derive(Args, Debug, Clone)]
struct EndoArgs {
    /// Image of X (default X).
    #[arg(long = "endo-x")]
    endo_x: Option<String>,
    /// Image of Y (default Y).
    #[arg(long = "endo-y")]
    endo_y: Option<String>,
    /// Recipe file (JSON or TOML); overrides --endo-x/--endo-y.
    #[arg(long)]
    recipe: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum MapKind {
    Ad,
    Dyx,
    Dxy,
    Delta,
}

#[derive(Args, Debug, Clone)]
struct MapArgs {
    #[arg(long, value_enum)]
    map: MapKind,
    /// The element `a` of `ad(a)`.
    #[arg(long)]
    by: Option<String>,
    #[command(flatten)]
    endo: EndoArgs,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Print an expression in normal form.
    Normalize { expr: String },
    /// Product of two expressions.
    Mul { a: String, b: String },
    /// `[a, b] = ab - ba`.
    Comm { a: String, b: String },
    /// Graded components over Q[H].
    Grade { expr: String },
    /// Weighted degree `v_(rho, eta)`.
    Degree {
        #[command(flatten)]
        w: WeightArgs,
        expr: String,
    },
    /// Newton polygon vertices.
    Newton { expr: String },
    /// Smallest generic weight by `rho + eta`, then `rho`.
    Generic {
        #[arg(long, default_value_t = 10)]
        bound: i64,
        expr: String,
    },
    /// Drops of a map on sample elements.
    Drop {
        #[command(flatten)]
        m: MapArgs,
        #[command(flatten)]
        w: WeightArgs,
        #[arg(required = true)]
        samples: Vec<String>,
    },
    /// Eigenvalues of `ad(a)` on a window.
    EigScan {
        #[arg(long)]
        cap: i64,
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long)]
        int_bound: Option<i64>,
        #[arg(long)]
        num_bound: Option<i64>,
        #[arg(long, default_value_t = 4)]
        max_den: i64,
        expr: String,
    },
    /// Centralizer of an element on a window.
    Centralizer {
        #[arg(long)]
        cap: i64,
        #[command(flatten)]
        w: WeightArgs,
        expr: String,
    },
    /// Elements of a window killed by a power of the map.
    Nilclosure {
        #[command(flatten)]
        m: MapArgs,
        #[arg(long)]
        cap: i64,
        #[command(flatten)]
        w: WeightArgs,
        #[arg(long, default_value_t = 16)]
        max_iter: usize,
    },
    /// Compile and verify an endomorphism.
    EndoCompile {
        #[command(flatten)]
        endo: EndoArgs,
    },
    /// Apply an endomorphism to an element.
    EndoApply {
        #[command(flatten)]
        endo: EndoArgs,
        expr: String,
    },
    /// Whether an element lies in K<x, y>.
    Membership {
        #[command(flatten)]
        endo: EndoArgs,
        #[arg(long, default_value_t = 4)]
        slack: i64,
        expr: String,
    },
    /// Gaps and invariants of a numerical semigroup.
    Semigroup {
        #[arg(long)]
        horizon: Option<u64>,
        #[arg(required = true)]
        generators: Vec<u64>,
    },
    /// Run the check suite; exits 1 when any check fails.
    Verify {
        /// TOML suite configuration; the built-in canonical suite if absent.
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Document(_) | Error::Io(_) => Failure::Usage(e.to_string()),
            other => Failure::Domain(other.to_string()),
        }
    }
}

type CmdResult = std::result::Result<(i32, String), Failure>;

/// An argument is an expression, or `@path` naming a file that holds an
/// element document or an expression.
fn element_arg(s: &str) -> std::result::Result<WeylElement, Failure> {
    match s.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(Error::from)?;
            if text.trim_start().starts_with('{') {
                Ok(ElementDoc::from_json(&text)?.to_element()?)
            } else {
                Ok(parse(text.trim())?)
            }
        }
        None => Ok(parse(s)?),
    }
}

fn endo_arg(a: &EndoArgs) -> std::result::Result<EndoPair, Failure> {
    if let Some(path) = &a.recipe {
        let text = std::fs::read_to_string(path).map_err(Error::from)?;
        let recipe: EndoRecipe = if text.trim_start().starts_with('{') {
            serde_json::from_str(&text).map_err(|e| Error::Document(e.to_string()))?
        } else {
            toml::from_str(&text).map_err(|e| Error::Document(e.to_string()))?
        };
        return Ok(compile(&recipe)?);
    }
    let x = a.endo_x.as_deref().map(element_arg).transpose()?.unwrap_or_else(WeylElement::x);
    let y = a.endo_y.as_deref().map(element_arg).transpose()?.unwrap_or_else(WeylElement::y);
    Ok(build_endo(x, y)?)
}

fn map_arg(m: &MapArgs) -> std::result::Result<MapSpec, Failure> {
    Ok(match m.map {
        MapKind::Ad => {
            let by = m
                .by
                .as_deref()
                .ok_or_else(|| Failure::Usage("--map ad needs --by".into()))?;
            MapSpec::Ad(element_arg(by)?)
        }
        MapKind::Dyx => MapSpec::DyX(endo_arg(&m.endo)?),
        MapKind::Dxy => MapSpec::DxY(endo_arg(&m.endo)?),
        MapKind::Delta => MapSpec::DeltaXY(endo_arg(&m.endo)?),
    })
}

fn window(cap: i64, w: &WeightArgs) -> std::result::Result<Window, Failure> {
    Ok(Window::new(w.weight(), cap)?)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn element_out(a: &WeylElement, json: bool) -> String {
    if json {
        ElementDoc::from_element(a).to_json()
    } else {
        a.to_string()
    }
}

fn strings(elems: &[WeylElement]) -> Vec<String> {
    elems.iter().map(|e| e.to_string()).collect()
}

fn basis_report(kind: &str, header: Value, basis: &[WeylElement], json: bool) -> String {
    if json {
        pretty(&json!({
            "version": 1,
            "kind": kind,
            "params": header,
            "dim": basis.len(),
            "basis": strings(basis),
        }))
    } else {
        let mut out = format!("dim {}", basis.len());
        for b in basis {
            out.push('\n');
            out.push_str(&b.to_string());
        }
        out
    }
}

fn run(cli: Cli) -> CmdResult {
    let json = cli.json;
    let out = match cli.cmd {
        Cmd::Normalize { expr } => element_out(&element_arg(&expr)?, json),
        Cmd::Mul { a, b } => element_out(&(&element_arg(&a)? * &element_arg(&b)?), json),
        Cmd::Comm { a, b } => element_out(&element_arg(&a)?.commutator(&element_arg(&b)?), json),
        Cmd::Grade { expr } => {
            let doc = GradedDoc::from_element(&element_arg(&expr)?);
            if json {
                serde_json::to_string_pretty(&doc).expect("serializable")
            } else {
                let lines: Vec<String> = doc
                    .components
                    .iter()
                    .map(|(n, p)| format!("{n}: {p}"))
                    .collect();
                if lines.is_empty() {
                    "0".into()
                } else {
                    lines.join("\n")
                }
            }
        }
        Cmd::Degree { w, expr } => {
            let w = w.weight();
            if w.sum() <= 0 {
                return Err(Failure::Usage(format!("weight {w} needs rho + eta > 0")));
            }
            weighted_degree(w, &element_arg(&expr)?).to_string()
        }
        Cmd::Newton { expr } => {
            let p = newton_polygon(&element_arg(&expr)?)?;
            if json {
                pretty(&json!({"version": 1, "support": p.support, "vertices": p.vertices}))
            } else {
                let v: Vec<String> = p.vertices.iter().map(|(i, j)| format!("({i},{j})")).collect();
                v.join(" ")
            }
        }
        Cmd::Generic { bound, expr } => {
            let w = find_generic_weight(&element_arg(&expr)?, bound)?;
            if json {
                pretty(&json!({"version": 1, "bound": bound, "weight": w}))
            } else {
                w.to_string()
            }
        }
        Cmd::Drop { m, w, samples } => {
            let spec = map_arg(&m)?;
            let elems = samples
                .iter()
                .map(|s| element_arg(s))
                .collect::<std::result::Result<Vec<_>, _>>()?;
            let r = drop_profile(&spec, w.weight(), &elems)?;
            if json {
                let rows: Vec<Value> = r
                    .samples
                    .iter()
                    .map(|s| {
                        json!({
                            "element": s.element.to_string(),
                            "degree": s.degree.to_string(),
                            "image_degree": s.image_degree.to_string(),
                            "drop": s.drop.to_string(),
                        })
                    })
                    .collect();
                pretty(&json!({
                    "version": 1,
                    "map": r.map.to_string(),
                    "weight": r.weight,
                    "samples": rows,
                    "constant": r.constant,
                    "drop": r.drop_value,
                }))
            } else {
                let mut lines: Vec<String> = r
                    .samples
                    .iter()
                    .map(|s| format!("{}: {}", s.element, s.drop))
                    .collect();
                lines.push(match r.drop_value {
                    Some(d) if r.constant => format!("constant drop {d}"),
                    _ => "drop not constant".into(),
                });
                lines.join("\n")
            }
        }
        Cmd::EigScan {
            cap,
            w,
            int_bound,
            num_bound,
            max_den,
            expr,
        } => {
            let a = element_arg(&expr)?;
            let win = window(cap, &w)?;
            let cands = candidate_set(int_bound.unwrap_or(cap), num_bound.unwrap_or(cap), max_den);
            let r = eigenvalue_scan(&a, &win, &cands)?;
            if json {
                let found: Vec<Value> = r
                    .found
                    .iter()
                    .map(|s| json!({"lambda": s.lambda.to_string(), "basis": strings(&s.basis)}))
                    .collect();
                let cand: Vec<String> = r.candidates.iter().map(|c| c.to_string()).collect();
                pretty(&json!({
                    "version": 1,
                    "element": a.to_string(),
                    "weight": win.weight,
                    "cap": cap,
                    "candidates": cand,
                    "found": found,
                }))
            } else {
                let lines: Vec<String> = r
                    .found
                    .iter()
                    .map(|s| format!("{}: dim {}", s.lambda, s.basis.len()))
                    .collect();
                format!("{} candidates tried\n{}", r.candidates.len(), lines.join("\n"))
            }
        }
        Cmd::Centralizer { cap, w, expr } => {
            let a = element_arg(&expr)?;
            let win = window(cap, &w)?;
            let basis = centralizer_window(&a, &win)?;
            let header = json!({"element": a.to_string(), "weight": win.weight, "cap": cap});
            basis_report("centralizer", header, &basis, json)
        }
        Cmd::Nilclosure { m, cap, w, max_iter } => {
            let spec = map_arg(&m)?;
            let win = window(cap, &w)?;
            let basis = nilpotent_closure_window(&spec, &win, max_iter)?;
            let header = json!({
                "map": spec.to_string(),
                "weight": win.weight,
                "cap": cap,
                "max_iter": max_iter,
                "window_dim": win.dim(),
            });
            basis_report("nilclosure", header, &basis, json)
        }
        Cmd::EndoCompile { endo } => {
            let e = endo_arg(&endo)?;
            if json {
                pretty(&json!({
                    "version": 1,
                    "x": ElementDoc::from_element(&e.x),
                    "y": ElementDoc::from_element(&e.y),
                    "verified": e.verified(),
                }))
            } else {
                format!("x = {}\ny = {}", e.x, e.y)
            }
        }
        Cmd::EndoApply { endo, expr } => {
            let e = endo_arg(&endo)?;
            element_out(&apply_endo(&e, &element_arg(&expr)?)?, json)
        }
        Cmd::Membership { endo, slack, expr } => {
            let e = endo_arg(&endo)?;
            let a = element_arg(&expr)?;
            let m = subalgebra_membership(&e, &a, slack)?;
            if json {
                let wit: Vec<Value> = m
                    .witness
                    .iter()
                    .map(|(i, j, c)| json!({"i": i, "j": j, "c": c.to_string()}))
                    .collect();
                pretty(&json!({
                    "version": 1,
                    "x": e.x.to_string(),
                    "y": e.y.to_string(),
                    "element": a.to_string(),
                    "slack": slack,
                    "member": m.member,
                    "witness": wit,
                }))
            } else if m.member {
                let terms: Vec<String> = m
                    .witness
                    .iter()
                    .map(|(i, j, c)| format!("{c}*y^{i}*x^{j}"))
                    .collect();
                format!("member (slack {slack}): {}", terms.join(" + "))
            } else {
                format!("not a member at slack {slack}")
            }
        }
        Cmd::Semigroup { horizon, generators } => {
            let gens: BTreeSet<u64> = generators.into_iter().collect();
            let s = semigroup_analyze(&gens, horizon)?;
            if json {
                pretty(&json!({
                    "version": 1,
                    "generators": s.generators,
                    "horizon": s.horizon,
                    "g": s.g,
                    "m": s.m,
                    "s": s.s,
                    "t": s.t,
                    "gaps": s.gaps,
                    "h": s.h_list,
                    "mu": s.mu,
                    "nu": s.nu,
                    "stable_from": s.stable_from,
                }))
            } else {
                format!(
                    "g = {}, m = {}, t = {}, s = {}\ngaps = {:?}\nh = {:?}\nmu = {}, nu = {}",
                    s.g, s.m, s.t, s.s, s.gaps, s.h_list, s.mu, s.nu
                )
            }
        }
        Cmd::Verify { config } => {
            let cfg = match config {
                Some(p) => load_suite_config(&p)?,
                None => SuiteConfig::canonical(),
            };
            let report = run_suite(&cfg)?;
            let code = if report.passed { 0 } else { 1 };
            let out = if json {
                serde_json::to_string_pretty(&report).expect("serializable")
            } else {
                let mut lines: Vec<String> = report.results.iter().map(|r| r.summary()).collect();
                let failed = report.results.iter().filter(|r| !r.passed).count();
                lines.push(format!("{} checks, {failed} failed", report.results.len()));
                lines.join("\n")
            };
            return Ok((code, out));
        }
    };
    Ok((0, out))
}

/// Parses `args` (including the program name) and runs the command.
pub fn dispatch<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match run(cli) {
        Ok(r) => r,
        Err(Failure::Usage(m)) => (2, format!("error: {m}")),
        Err(Failure::Domain(m)) => (3, format!("error: {m}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        dispatch(std::iter::once("weyl").chain(args.iter().copied()))
    }

    #[test]
    fn basic_commands() {
        assert_eq!(run_args(&["comm", "Y", "X"]), (0, "1".into()));
        assert_eq!(run_args(&["degree", "--rho", "1", "--eta", "1", "Y*X + X^3"]), (0, "3".into()));
        assert_eq!(run_args(&["mul", "X", "Y"]), (0, "-1 + Y*X".into()));
        assert_eq!(run_args(&["degree", "--rho", "2", "--eta", "-1", "Y*X"]), (0, "1".into()));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["frobnicate"]).0, 2);
        assert_eq!(run_args(&["normalize", "X +"]).0, 2);
        assert_eq!(run_args(&["endo-apply", "--endo-x", "X", "--endo-y", "X", "Y"]).0, 3);
        assert_eq!(run_args(&["generic", "--bound", "1", "Y + X"]).0, 3);
    }

    #[test]
    fn membership_and_semigroup() {
        let (code, out) = run_args(&["membership", "--endo-y", "Y + X^2", "Y"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("member"), "{out}");
        let (code, out) = run_args(&["semigroup", "2", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("gaps = {1}"), "{out}");
    }
}

//! Command line front end: JSON spec documents in, deterministic reports out.

use std::fs;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::facecalc::{
    all_fibers, barycenter_data, f_polynomial, face_report, fiber_interval, halfspace_representation,
    longest_weights,
};
use crate::modulespec::{CoordClass, ModuleSpec, Preset};
use crate::nodeset::NodeSet;
use crate::oracle::verify::{cross_validate, CrossOptions};
use crate::rational::{format_q, parse_q};
use crate::rootsystem::RootSystem;
use crate::weyl::Limits;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "hwface", version, about = "Standard parabolic faces of highest weight modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Spec document (JSON); `-` reads standard input.
    #[arg(long)]
    pub input: PathBuf,
    /// Compact JSON report.
    #[arg(long)]
    pub json: bool,
    /// Indented JSON report.
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Face data for one subset of nodes.
    Analyze {
        #[command(flatten)]
        common: Common,
        /// 1-based node labels, e.g. "1,2"; empty for the empty set.
        #[arg(long, default_value = "")]
        subset: String,
    },
    /// f-polynomial of the weight polyhedron.
    Fpoly {
        #[command(flatten)]
        common: Common,
    },
    /// Half-space description of the weight polyhedron.
    Halfspaces {
        #[command(flatten)]
        common: Common,
        /// Only the facet-defining half-spaces.
        #[arg(long)]
        minimal: bool,
    },
    /// Fibers of the map from node subsets to faces.
    Fibers {
        #[command(flatten)]
        common: Common,
        /// 1-based node labels of the subset whose fiber is wanted.
        #[arg(long, default_value = "")]
        subset: String,
        /// List every fiber.
        #[arg(long)]
        all: bool,
    },
    /// Compare the formulas against enumerated weight sets.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Height bound for infinite weight sets.
        #[arg(long)]
        depth: Option<u32>,
        /// Refuse diagrams of larger rank.
        #[arg(long, default_value_t = 4)]
        max_rank: usize,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Analyze { common, .. }
            | Command::Fpoly { common }
            | Command::Halfspaces { common, .. }
            | Command::Fibers { common, .. }
            | Command::Verify { common, .. } => common,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Command::Analyze { .. } => "analyze",
            Command::Fpoly { .. } => "fpoly",
            Command::Halfspaces { .. } => "halfspaces",
            Command::Fibers { .. } => "fibers",
            Command::Verify { .. } => "verify",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum AlgebraField {
    Type(String),
    Cartan(Vec<Vec<i64>>),
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum ScalarField {
    Text(String),
    Int(i64),
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum CoordField {
    Exact(ScalarField),
    Class {
        class: String,
        #[serde(default)]
        value: Option<ScalarField>,
    },
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum IntegrableField {
    Nodes(Vec<usize>),
    Preset(String),
    ParabolicVerma {
        #[serde(rename = "parabolicVerma")]
        parabolic_verma: Vec<usize>,
    },
}

/// The JSON input document.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecDocument {
    pub algebra: AlgebraField,
    pub lambda: Vec<CoordField>,
    pub integrable: IntegrableField,
    #[serde(default, rename = "polyhedralHull")]
    pub polyhedral_hull: Option<bool>,
}

fn scalar(s: &ScalarField) -> Result<crate::Q> {
    match s {
        ScalarField::Text(t) => parse_q(t),
        ScalarField::Int(i) => Ok(crate::Q::from_integer(*i)),
    }
}

fn coord(i: usize, c: &CoordField) -> Result<CoordClass> {
    let at = |e: Error| Error::input(format!("lambda entry {}: {e}", i + 1));
    match c {
        CoordField::Exact(s) => Ok(CoordClass::of(scalar(s).map_err(at)?)),
        CoordField::Class { class, value } => {
            let v = value.as_ref().map(scalar).transpose().map_err(at)?;
            match class.as_str() {
                "zero" => match v {
                    Some(x) if x != crate::Q::from_integer(0) => Err(at(Error::input(format!(
                        "class zero with value {}",
                        format_q(&x)
                    )))),
                    _ => Ok(CoordClass::Zero),
                },
                "posint" => match v {
                    None => Ok(CoordClass::DominantIntegral(None)),
                    Some(x) if x.is_integer() && *x.numer() >= 0 => {
                        Ok(CoordClass::DominantIntegral(Some(*x.numer() as u64)))
                    }
                    Some(x) => Err(at(Error::input(format!(
                        "class posint with value {}",
                        format_q(&x)
                    )))),
                },
                "nonintegral" => Ok(CoordClass::NonIntegralNonzero(v)),
                other => Err(at(Error::input(format!(
                    "unknown class {other:?}; expected zero, posint or nonintegral"
                )))),
            }
        }
    }
}

impl SpecDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::input(format!("spec document: {e}")))
    }

    pub fn to_module_spec(&self) -> Result<ModuleSpec> {
        let system = match &self.algebra {
            AlgebraField::Type(s) => RootSystem::parse(s)?,
            AlgebraField::Cartan(m) => RootSystem::from_cartan(m.clone())?,
        };
        let n = system.rank();
        let lambda = self
            .lambda
            .iter()
            .enumerate()
            .map(|(i, c)| coord(i, c))
            .collect::<Result<Vec<_>>>()?;
        if lambda.len() != n {
            return Err(Error::input(format!(
                "lambda has {} entries, the diagram has {n} nodes",
                lambda.len()
            )));
        }
        let preset = match &self.integrable {
            IntegrableField::Nodes(labels) => Preset::ParabolicVerma(NodeSet::from_labels(labels, n)?),
            IntegrableField::ParabolicVerma { parabolic_verma } => {
                Preset::ParabolicVerma(NodeSet::from_labels(parabolic_verma, n)?)
            }
            IntegrableField::Preset(name) => match name.as_str() {
                "verma" => Preset::Verma,
                "simple" => Preset::Simple,
                "finiteDimensional" | "finite-dimensional" => Preset::FiniteDimensional,
                other => {
                    return Err(Error::input(format!(
                        "unknown integrable preset {other:?}; expected verma, simple or finiteDimensional"
                    )))
                }
            },
        };
        let integrable = match preset {
            // Explicit sets go through validation so node-level diagnostics surface.
            Preset::ParabolicVerma(j) => j,
            _ => ModuleSpec::preset(preset, system.clone(), lambda.clone())?.integrable,
        };
        ModuleSpec::new(system, lambda, integrable, self.polyhedral_hull.unwrap_or(true))
    }
}

/// Canonical JSON form of a spec; parses back to the same `ModuleSpec`.
pub fn echo_spec(doc: &SpecDocument, spec: &ModuleSpec) -> Value {
    let algebra = match &doc.algebra {
        AlgebraField::Type(_) => json!(spec.system.type_string()),
        AlgebraField::Cartan(m) => json!(m),
    };
    let lambda: Vec<Value> = spec
        .lambda
        .iter()
        .map(|c| match c.value() {
            Some(v) if !matches!(c, CoordClass::Zero) => json!({"class": c.tag(), "value": format_q(&v)}),
            _ => json!({"class": c.tag()}),
        })
        .collect();
    json!({
        "algebra": algebra,
        "lambda": lambda,
        "integrable": spec.integrable,
        "polyhedralHull": spec.polyhedral_hull,
    })
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::input(format!("reading standard input: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Error::input(format!("reading {}: {e}", path.display())))
}

fn to_value<T: serde::Serialize>(x: &T) -> Result<Value> {
    serde_json::to_value(x).map_err(|e| Error::invariant(format!("serializing report: {e}")))
}

/// Result of one invocation: the report, a text summary, and the exit code.
pub struct Outcome {
    pub report: Value,
    pub summary: String,
    pub exit_code: i32,
}

pub fn run_command(command: &Command, text: &str, limits: &Limits) -> Result<Outcome> {
    let doc = SpecDocument::parse(text)?;
    let spec = doc.to_module_spec()?;
    let n = spec.rank();
    let mut exit_code = 0;
    let (results, summary) = match command {
        Command::Analyze { subset, .. } => {
            let j = NodeSet::parse_labels(subset, n)?;
            let face = face_report(&spec, j)?;
            let bary = barycenter_data(&spec, j, limits)?;
            let mut v = json!({ "face": to_value(&face)?, "barycenter": to_value(&bary)? });
            if spec.is_numeric() {
                if let Some(lw) = longest_weights(&spec, j, limits)? {
                    v["longestWeights"] = json!({
                        "count": lw.longest.len(),
                        "minimum": to_value(&lw.minimum)?,
                    });
                }
            }
            let vc = face
                .vertex_count
                .map_or_else(|| "n/a".to_string(), |c| c.to_string());
            let s = format!(
                "J = {}: J_min = {}, J_max = {}, dim = {}, fiber = [{}, {}], stabilizer = ({}, {}), vertices = {vc}",
                face.subset, face.jmin, face.jmax, face.dimension, face.fiber.0, face.fiber.1, face.stabilizer.0,
                face.stabilizer.1
            );
            (v, s)
        }
        Command::Fpoly { .. } => {
            let f = f_polynomial(&spec, limits)?;
            let s = f.text.clone();
            (to_value(&f)?, s)
        }
        Command::Halfspaces { minimal, .. } => {
            let hs = halfspace_representation(&spec, *minimal, limits)?;
            let lines: Vec<String> = hs
                .iter()
                .map(|h| format!("(μ, {}) ≤ (λ, ω{})   w = {}", h.normal, h.node + 1, h.word))
                .collect();
            let s = format!("{} half-spaces\n{}", hs.len(), lines.join("\n"));
            (json!({ "count": hs.len(), "minimal": minimal, "halfspaces": to_value(&hs)? }), s)
        }
        Command::Fibers { subset, all, .. } => {
            if *all {
                let fibers = all_fibers(&spec, limits)?;
                let lines: Vec<String> = fibers
                    .iter()
                    .map(|f| format!("[{}, {}] x{}", f.lo, f.hi, f.multiplicity))
                    .collect();
                let s = format!("{} fibers\n{}", fibers.len(), lines.join("\n"));
                (json!({ "count": fibers.len(), "fibers": to_value(&fibers)? }), s)
            } else {
                let j = NodeSet::parse_labels(subset, n)?;
                let (lo, hi) = fiber_interval(&spec, j)?;
                (json!({ "subset": j, "lo": lo, "hi": hi }), format!("fiber of {j}: [{lo}, {hi}]"))
            }
        }
        Command::Verify { depth, max_rank, .. } => {
            let report = cross_validate(
                &spec,
                CrossOptions {
                    depth: *depth,
                    max_rank: *max_rank,
                },
                limits,
            )?;
            if report.disagree > 0 {
                exit_code = 3;
            }
            let depth_text = report
                .depth
                .map_or_else(|| "exact".to_string(), |d| format!("depth {d}"));
            let s = format!(
                "{} pairs ({depth_text}): {} agree, {} disagree, {} unresolved",
                report.pairs.len(),
                report.agree,
                report.disagree,
                report.unresolved
            );
            (to_value(&report)?, s)
        }
    };
    let report = json!({
        "command": command.name(),
        "spec": echo_spec(&doc, &spec),
        "results": results,
        "toolVersion": TOOL_VERSION,
    });
    Ok(Outcome {
        report,
        summary,
        exit_code,
    })
}

/// Text to print after a run.
pub struct Printed {
    pub text: String,
    pub exit_code: i32,
    /// Errors go to standard error; reports, even failing ones, to standard output.
    pub is_error: bool,
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Printed {
    let common = cli.command.common();
    let result = Limits::from_env()
        .and_then(|limits| read_input(&common.input).map(|text| (limits, text)))
        .and_then(|(limits, text)| run_command(&cli.command, &text, &limits));
    match result {
        Ok(out) => {
            let text = if common.pretty {
                serde_json::to_string_pretty(&out.report).unwrap_or_default()
            } else if common.json {
                out.report.to_string()
            } else {
                out.summary
            };
            Printed {
                text,
                exit_code: out.exit_code,
                is_error: false,
            }
        }
        Err(e) => Printed {
            text: format!("error: {e}"),
            exit_code: e.exit_code(),
            is_error: true,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const C_OMEGA2: &str = r#"{
        "algebra": "A2",
        "lambda": [{"class": "zero"}, {"class": "nonintegral"}],
        "integrable": [1]
    }"#;

    #[test]
    fn parses_symbolic_document() {
        let doc = SpecDocument::parse(C_OMEGA2).unwrap();
        let spec = doc.to_module_spec().unwrap();
        assert_eq!(spec.integrable, NodeSet::singleton(0));
        assert!(spec.polyhedral_hull);
    }

    #[test]
    fn echo_round_trips() {
        for text in [
            C_OMEGA2,
            r#"{"algebra": "B2", "lambda": ["0", 2], "integrable": "finiteDimensional"}"#,
            r#"{"algebra": [[2,-1],[-3,2]], "lambda": ["-1/2", "3"], "integrable": [2], "polyhedralHull": false}"#,
        ] {
            let doc = SpecDocument::parse(text).unwrap();
            let spec = doc.to_module_spec().unwrap();
            let echoed = echo_spec(&doc, &spec).to_string();
            let again = SpecDocument::parse(&echoed).unwrap().to_module_spec().unwrap();
            assert_eq!(spec, again);
        }
    }

    #[test]
    fn validation_names_nodes() {
        let text = r#"{"algebra": "A2", "lambda": ["-1/2", "0"], "integrable": [1]}"#;
        let err = SpecDocument::parse(text).unwrap().to_module_spec().unwrap_err();
        assert_eq!(err.exit_code(), 1);
        assert!(err.to_string().contains("node 1"), "{err}");
    }

    #[test]
    fn reports_are_deterministic() {
        let cmd = Command::Analyze {
            common: Common {
                input: "-".into(),
                json: true,
                pretty: false,
            },
            subset: "1,2".into(),
        };
        let l = Limits::default();
        let a = run_command(&cmd, C_OMEGA2, &l).unwrap().report.to_string();
        let b = run_command(&cmd, C_OMEGA2, &l).unwrap().report.to_string();
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["results"]["face"]["jmin"], json!([1]));
        assert_eq!(v["results"]["face"]["dimension"], json!(2));
    }
}

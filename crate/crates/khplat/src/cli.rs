//! Command-line front end.
//!
//! Output is deterministic: every map is ordered and JSON keys follow the
//! field order of the report structs below.

use crate::checks::{run_suite, CheckError, CheckParams, Suite};
use crate::complexes::BigradedGroups;
use crate::corpus::oracle_jones;
use crate::invariants::{reduced_homology, HomologyResult, PipelineError, PIPELINE_STRANDS};
use crate::laurent::LaurentPoly;
use crate::oracle::{kauffman_bracket, OracleError};
use crate::plat::{
    crossing_counts, parse_braid_word, plat_to_diagram, BraidWord, CrossingCounts, ParseError,
    PlatError, PlatPresentation,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Parser, Debug)]
#[command(name = "khplat", version, about = "Reduced Khovanov homology of 4-strand plat closures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced homology in both gradings, with its Euler characteristic.
    Homology(InputArgs),
    /// Jones polynomial. From homology on 4 strands, from the state sum otherwise.
    Jones(InputArgs),
    /// Kauffman bracket and Jones polynomial from the state sum alone.
    Oracle(InputArgs),
    /// Runs a property suite over a seeded corpus.
    Check(CheckArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Braid word, e.g. "4: S2 S2 S2".
    #[arg(long)]
    pub plat: String,
    /// Cup pair erased for the reduced theory.
    #[arg(long, default_value_t = 2)]
    pub marked: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// decategorification, invariance, mirror, skein, unknot, reidemeister,
    /// curve, intersections or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 12)]
    pub max_length: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Corpus size.
    #[arg(long, default_value_t = 250)]
    pub words: usize,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Plat(#[from] PlatError),
    #[error("homology needs {PIPELINE_STRANDS} strands, got {0}; use `jones` or `oracle` for other counts")]
    UnsupportedStrands(usize),
    #[error(transparent)]
    CrossingBound(#[from] OracleError),
    #[error(transparent)]
    Pipeline(PipelineError),
    #[error(transparent)]
    Check(CheckError),
}

impl From<PipelineError> for CliError {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::UnsupportedStrands(n) => CliError::UnsupportedStrands(n),
            e => CliError::Pipeline(e),
        }
    }
}

impl From<CheckError> for CliError {
    fn from(e: CheckError) -> Self {
        match e {
            CheckError::Pipeline(p) => p.into(),
            CheckError::Oracle(o) => CliError::CrossingBound(o),
            e => CliError::Check(e),
        }
    }
}

impl CliError {
    /// Process exit code. 1 is reserved for failed checks.
    pub fn code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::UnsupportedStrands(_) => 3,
            CliError::CrossingBound(_) => 4,
            CliError::Plat(_) => 5,
            CliError::Check(_) => 6,
            CliError::Pipeline(_) => 70,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::UnsupportedStrands(_) => "unsupported-strands",
            CliError::CrossingBound(_) => "crossing-bound",
            CliError::Plat(_) => "marked-pair",
            CliError::Check(_) => "usage",
            CliError::Pipeline(_) => "internal",
        }
    }

    /// One-line JSON for stderr.
    pub fn to_json(&self) -> String {
        serde_json::json!({
            "error": self.kind(),
            "code": self.code(),
            "message": self.to_string(),
        })
        .to_string()
    }
}

/// What a run prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, exit_code: 0 }
    }
}

type Row = (i64, i64, usize, Vec<i64>);

#[derive(Serialize)]
pub struct HomologyReport {
    pub input: BraidWord,
    pub counts: CrossingCounts,
    pub homology_kd: Vec<Row>,
    pub homology_ij: Vec<Row>,
    pub jones: Vec<(i64, i64)>,
}

impl From<&HomologyResult> for HomologyReport {
    fn from(h: &HomologyResult) -> Self {
        HomologyReport {
            input: h.word.clone(),
            counts: h.counts,
            homology_kd: h.groups_kd.rows(),
            homology_ij: h.groups_ij.rows(),
            jones: h.jones_t().terms().collect(),
        }
    }
}

#[derive(Serialize)]
struct JonesReport {
    input: BraidWord,
    source: &'static str,
    jones: Vec<(i64, i64)>,
}

#[derive(Serialize)]
struct OracleReport {
    input: BraidWord,
    counts: CrossingCounts,
    bracket: Vec<(i64, i64)>,
    jones: Vec<(i64, i64)>,
}

#[derive(Serialize)]
struct CheckReport {
    suite: String,
    checked: usize,
    failures: Vec<String>,
}

fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("report types serialize") + "\n"
}

fn input(args: &InputArgs) -> Result<PlatPresentation, CliError> {
    let w = parse_braid_word(&args.plat)?;
    Ok(PlatPresentation::new(w, args.marked)?)
}

fn group_name(rank: usize, torsion: &[i64]) -> String {
    let mut parts: Vec<String> = Vec::new();
    match rank {
        0 => {}
        1 => parts.push("Z".into()),
        r => parts.push(format!("Z^{}", r)),
    }
    parts.extend(torsion.iter().map(|t| format!("Z/{}", t)));
    parts.join(" + ")
}

fn table(title: &str, (a, b): (&str, &str), g: &BigradedGroups) -> String {
    let mut s = format!("{}\n{:>4} {:>4}  group\n", title, a, b);
    for (x, y, rank, tors) in g.rows() {
        let _ = writeln!(s, "{:>4} {:>4}  {}", x, y, group_name(rank, &tors));
    }
    s
}

pub fn homology(args: &InputArgs) -> Result<Outcome, CliError> {
    let p = input(args)?;
    let h = reduced_homology(&p)?;
    let out = match args.format {
        Format::Json => to_json(&HomologyReport::from(&h)),
        Format::Table => {
            let mut s = format!(
                "input   {}\nmarked  pair {}\ncounts  n+ = {}, n- = {}\n\n",
                h.word, p.marked_pair, h.counts.n_plus, h.counts.n_minus
            );
            s += &table("homology (k, d)", ("k", "d"), &h.groups_kd);
            s += "\n";
            s += &table("homology (i, j)", ("i", "j"), &h.groups_ij);
            let _ = writeln!(s, "\njones   {}", h.jones_t().display("t", 4));
            s
        }
    };
    Ok(Outcome::ok(out))
}

pub fn jones(args: &InputArgs) -> Result<Outcome, CliError> {
    let p = input(args)?;
    let (source, v) = if p.braid.strands == PIPELINE_STRANDS {
        ("homology", reduced_homology(&p)?.jones_t())
    } else {
        ("oracle", oracle_jones(&p.braid)?)
    };
    Ok(Outcome::ok(match args.format {
        Format::Json => to_json(&JonesReport {
            input: p.braid,
            source,
            jones: v.terms().collect(),
        }),
        Format::Table => v.display("t", 4) + "\n",
    }))
}

pub fn oracle(args: &InputArgs) -> Result<Outcome, CliError> {
    let p = input(args)?;
    let bracket: LaurentPoly = kauffman_bracket(&plat_to_diagram(&p.braid))?;
    let v = oracle_jones(&p.braid)?;
    let counts = crossing_counts(&p.braid);
    Ok(Outcome::ok(match args.format {
        Format::Json => to_json(&OracleReport {
            input: p.braid,
            counts,
            bracket: bracket.terms().collect(),
            jones: v.terms().collect(),
        }),
        Format::Table => format!(
            "input    {}\nwrithe   {}\nbracket  {}\njones    {}\n",
            p.braid,
            counts.writhe(),
            bracket.display("A", 1),
            v.display("t", 4)
        ),
    }))
}

pub fn check(args: &CheckArgs) -> Result<Outcome, CliError> {
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse::<Suite>()?]
    };
    let params = CheckParams {
        seed: args.seed,
        max_length: args.max_length,
        words: args.words,
    };
    let mut reports = Vec::new();
    for s in suites {
        reports.push(run_suite(s, &params)?);
    }
    let failed = reports.iter().any(|r| !r.passed());
    let stdout = match args.format {
        Format::Json => to_json(
            &reports
                .iter()
                .map(|r| CheckReport {
                    suite: r.suite.clone(),
                    checked: r.checked,
                    failures: r.failures.clone(),
                })
                .collect::<Vec<_>>(),
        ),
        Format::Table => reports.iter().map(|r| format!("{}\n", r)).collect(),
    };
    Ok(Outcome {
        stdout,
        exit_code: i32::from(failed),
    })
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Homology(a) => homology(a),
        Command::Jones(a) => jones(a),
        Command::Oracle(a) => oracle(a),
        Command::Check(a) => check(a),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(plat: &str, format: Format) -> InputArgs {
        InputArgs {
            plat: plat.into(),
            marked: 2,
            format,
        }
    }

    #[test]
    fn jones_of_unknot_is_one() {
        let o = jones(&args("4: s2", Format::Table)).unwrap();
        assert_eq!(o.stdout, "1\n");
    }

    #[test]
    fn error_codes_are_distinct() {
        let e = homology(&args("4: s9", Format::Json)).unwrap_err();
        assert_eq!(e.code(), 2);
        let e = homology(&args("6: s2", Format::Json)).unwrap_err();
        assert_eq!(e.code(), 3);
        let e = homology(&args("4: s2", Format::Json).tap_marked(3)).unwrap_err();
        assert_eq!(e.code(), 5);
        let long = format!("4:{}", " s2".repeat(30));
        assert_eq!(oracle(&args(&long, Format::Json)).unwrap_err().code(), 4);
        assert!(e.to_json().contains("\"marked-pair\""));
    }

    impl InputArgs {
        fn tap_marked(mut self, m: usize) -> Self {
            self.marked = m;
            self
        }
    }

    #[test]
    fn json_is_byte_identical() {
        let a = homology(&args("4: S2 S2 S2", Format::Json)).unwrap();
        let b = homology(&args("4: S2 S2 S2", Format::Json)).unwrap();
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 5);
    }
}

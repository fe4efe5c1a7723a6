//! `stablerep` command-line front end.
//!
//! Exit codes: 0 success or verification passed, 1 verification failed,
//! 2 usage error, 3 size budget exceeded.

mod cache;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

pub use cache::{Cache, CACHE_VERSION};

use crate::budget::Budget;
use crate::characters::{lr_coefficient, CharacterTable};
use crate::error::{Error, Result};
use crate::labeled::{
    enumerate_general, enumerate_pq, hom_space_dimension_gl, verify_rw_prop, verify_splitting_lemma,
    GeneralLabeledPartition, LabelAlphabet, QLabeledPartition,
};
use crate::modules::{split_extension_filtration_check, verify_cauchy, verify_schur_weyl};
use crate::partitions::{enumerate_partitions, Partition};
use crate::report::Report;
use crate::stable::{
    dimension_table, stable_cohomology, step1_dimension_identity, theorem_a_induction_check,
    verify_vanishing, StableCohomologyResult, TableRow,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "stablerep", version, about = "Exact representation theory for stable cohomology of Aut(F_n)")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest ambient dimension any construction may allocate
    /// (default 20000, or $STABLEREP_BUDGET).
    #[arg(long, global = true, value_name = "N")]
    pub budget: Option<usize>,

    /// Directory for cached character tables and enumerations.
    #[arg(long, global = true, value_name = "DIR")]
    pub cache: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the partitions of N in canonical order.
    Partitions { n: usize },
    /// Character of the irreducible Σ_r-representation S^LAMBDA.
    Char { lambda: Partition },
    /// Littlewood-Richardson coefficient c^LAMBDA_{MU,NU}.
    Lr { lambda: Partition, mu: Partition, nu: Partition },
    /// Check Λ^R(V⊗W) = ⊕ S_λ(V)⊗S_λT(W) for dim V = DV, dim W = DW.
    Cauchy { r: usize, dv: usize, dw: usize },
    /// Check V^⊗R = ⊕ S_λ(V)⊗S^λ for dim V = D.
    SchurWeyl { r: usize, d: usize },
    /// List 𝒫_{P,Q} (or 𝒫_P(Ω) with --general).
    LabeledPartitions {
        p: usize,
        q: usize,
        /// List 𝒫_P(Ω) with the standard alphabet on Q labels instead.
        #[arg(long)]
        general: bool,
    },
    /// dim Hom_GL(V^⊗P, F_W(V)) for dim V = D, computed two ways.
    HomDim { p: usize, q: usize, d: usize },
    /// Run one of the verification checks.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Stable cohomology H^*(Aut(F_n); H^⊗P ⊗ (H^*)^⊗Q).
    StableCohomology(StableArgs),
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// φ: Q𝒫_P(Ω) → Hom_GL(V^⊗P, F_W(V)) is an isomorphism (dim V = D).
    RwProp { p: usize, q: usize, d: usize },
    /// ⊕_i Ind Q𝒫_{P,i} ≅ Hom_GL(V^⊗P, F_W(V)) classwise.
    Splitting { p: usize, q: usize, d: usize },
    /// Dimension identities for S_LAMBDA of a split extension.
    Extension { lambda: Partition, da: usize, dc: usize },
    /// The induction on q recovers Q𝒫_{P,Q}.
    Induction { p: usize, q: usize },
    /// Splitting of the graded symmetric algebra in weight P.
    Step1 { p: usize, q: usize, d: usize },
    /// Vanishing outside degree P − Q.
    Vanishing { p: usize, q: usize },
}

#[derive(Debug, Args)]
pub struct StableArgs {
    pub p: Option<usize>,
    pub q: Option<usize>,
    /// Cohomological degree (default P − Q).
    #[arg(long, allow_hyphen_values = true)]
    pub degree: Option<i64>,
    /// Print the table of dimensions for all q ≤ p ≤ PMAX, q ≤ QMAX.
    #[arg(long, num_args = 2, value_names = ["PMAX", "QMAX"])]
    pub table: Option<Vec<usize>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CharacterValue {
    pub class: Partition,
    pub value: i64,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct LrOutput {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub coefficient: u64,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct HomDimOutput {
    pub p: usize,
    pub q: usize,
    pub d: usize,
    pub dimension: usize,
    pub highest_weight: usize,
    pub weight_decomposition: usize,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct LabeledOutput<T> {
    pub p: usize,
    pub q: usize,
    pub count: usize,
    pub elements: Vec<T>,
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::SizeBudgetExceeded { .. } => EXIT_BUDGET,
        Error::InvalidPartition(_)
        | Error::InvalidSkewShape { .. }
        | Error::InvalidArgs(_)
        | Error::Parse(_)
        | Error::DegreeMismatch { .. } => EXIT_USAGE,
        _ => EXIT_VERIFICATION_FAILED,
    }
}

struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: EXIT_OK }
    }

    fn report(r: &Report, json: bool) -> Result<Self> {
        let text = if json { to_json(r)? } else { r.to_string() };
        Ok(Output {
            text,
            code: if r.pass { EXIT_OK } else { EXIT_VERIFICATION_FAILED },
        })
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|e| Error::InvalidArgs(e.to_string()))
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|s| s + "\n").collect()
}

fn execute(cli: &Cli, budget: &Budget, cache: &Cache) -> Result<Output> {
    let json = cli.json;
    match &cli.command {
        Command::Partitions { n } => {
            let ps = enumerate_partitions(*n);
            Ok(Output::ok(if json {
                to_json(&ps)?
            } else {
                lines(ps.iter().map(ToString::to_string))
            }))
        }
        Command::Char { lambda } => {
            let r = lambda.weight();
            let rows: Vec<(Partition, Vec<i64>)> = cache.get_or_compute("character-table", &r.to_string(), || {
                Ok(CharacterTable::new(r).integer_rows())
            })?;
            let values = &rows
                .iter()
                .find(|(l, _)| l == lambda)
                .expect("table has every partition")
                .1;
            let out: Vec<CharacterValue> = enumerate_partitions(r)
                .into_iter()
                .zip(values)
                .map(|(class, &value)| CharacterValue { class, value })
                .collect();
            Ok(Output::ok(if json {
                to_json(&out)?
            } else {
                let body: Vec<Vec<String>> = out
                    .iter()
                    .map(|c| vec![c.class.to_string(), c.value.to_string()])
                    .collect();
                render::table(&["class", "value"], &body)
            }))
        }
        Command::Lr { lambda, mu, nu } => {
            let c = lr_coefficient(lambda, mu, nu);
            Ok(Output::ok(if json {
                to_json(&LrOutput {
                    lambda: lambda.clone(),
                    mu: mu.clone(),
                    nu: nu.clone(),
                    coefficient: c,
                })?
            } else {
                format!("{c}\n")
            }))
        }
        Command::Cauchy { r, dv, dw } => Output::report(&verify_cauchy(*r, *dv, *dw, budget)?, json),
        Command::SchurWeyl { r, d } => Output::report(&verify_schur_weyl(*r, *d, budget)?, json),
        Command::LabeledPartitions { p, q, general } => {
            if *general {
                let xs: Vec<GeneralLabeledPartition> =
                    cache.get_or_compute("general", &format!("{p}-{q}"), || {
                        enumerate_general(*p, &LabelAlphabet::standard(*q), budget)
                    })?;
                labeled_output(*p, *q, xs, json)
            } else {
                let xs: Vec<QLabeledPartition> =
                    cache.get_or_compute("pq", &format!("{p}-{q}"), || enumerate_pq(*p, *q, budget))?;
                labeled_output(*p, *q, xs, json)
            }
        }
        Command::HomDim { p, q, d } => {
            let h = hom_space_dimension_gl(*p, *q, *d, budget)?;
            Ok(Output::ok(if json {
                to_json(&HomDimOutput {
                    p: *p,
                    q: *q,
                    d: *d,
                    dimension: h.value(),
                    highest_weight: h.highest_weight,
                    weight_decomposition: h.weight_decomposition,
                })?
            } else {
                format!("{}\n", h.value())
            }))
        }
        Command::Verify(v) => {
            let report = match v {
                VerifyCommand::RwProp { p, q, d } => verify_rw_prop(*p, *q, *d, budget)?,
                VerifyCommand::Splitting { p, q, d } => verify_splitting_lemma(*p, *q, *d, budget)?,
                VerifyCommand::Extension { lambda, da, dc } => {
                    split_extension_filtration_check(lambda, *da, *dc)?
                }
                VerifyCommand::Induction { p, q } => theorem_a_induction_check(*p, *q, budget)?,
                VerifyCommand::Step1 { p, q, d } => step1_dimension_identity(*p, *q, *d),
                VerifyCommand::Vanishing { p, q } => verify_vanishing(*p, *q, budget)?,
            };
            Output::report(&report, json)
        }
        Command::StableCohomology(args) => stable_command(args, json, budget, cache),
    }
}

fn labeled_output<T: Serialize + std::fmt::Display>(p: usize, q: usize, xs: Vec<T>, json: bool) -> Result<Output> {
    Ok(Output::ok(if json {
        to_json(&LabeledOutput {
            p,
            q,
            count: xs.len(),
            elements: xs,
        })?
    } else {
        let mut s = lines(xs.iter().map(ToString::to_string));
        s.push_str(&format!("count: {}\n", xs.len()));
        s
    }))
}

fn stable_command(args: &StableArgs, json: bool, budget: &Budget, cache: &Cache) -> Result<Output> {
    if let Some(t) = &args.table {
        if args.p.is_some() || args.degree.is_some() {
            return Err(Error::InvalidArgs("--table takes no P, Q or --degree".into()));
        }
        let (pm, qm) = (t[0], t[1]);
        let rows: Vec<TableRow> = cache.get_or_compute("table", &format!("{pm}-{qm}"), || {
            dimension_table(pm, qm, budget)
        })?;
        return Ok(Output::ok(if json { to_json(&rows)? } else { render::dimension_table(&rows) }));
    }
    let (Some(p), Some(q)) = (args.p, args.q) else {
        return Err(Error::InvalidArgs("stable-cohomology needs P and Q, or --table PMAX QMAX".into()));
    };
    let degree = args.degree.unwrap_or(p as i64 - q as i64);
    let r: StableCohomologyResult = cache.get_or_compute("stable", &format!("{p}-{q}-{degree}"), || {
        stable_cohomology(p, q, degree, budget)
    })?;
    Ok(Output::ok(if json { to_json(&r)? } else { render::stable_result(&r) }))
}

/// Parses `args` (including the program name), runs the command, writes the
/// primary output to `out` and diagnostics to `err`, and returns the exit code.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut budget = Budget::from_env();
    if let Some(b) = cli.budget {
        budget.ambient = b;
    }
    let cache = cli.cache.clone().map(Cache::at).unwrap_or_default();
    match execute(&cli, &budget, &cache) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_code(&e)
        }
    }
}

/// Entry point for the binary: real argv, stdout and stderr.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["stablerep"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn lr_text() {
        assert_eq!(call(&["lr", "2,1", "1", "1,1"]), (0, "1\n".into(), String::new()));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(call(&["lr", "1,2", "1", "1"]).0, EXIT_USAGE);
        assert_eq!(call(&["stable-cohomology"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn budget_exit_code() {
        assert_eq!(call(&["--budget", "10", "schur-weyl", "3", "3"]).0, EXIT_BUDGET);
    }

    #[test]
    fn negative_degree() {
        let (code, out, _) = call(&["stable-cohomology", "1", "1", "--degree", "-1"]);
        assert_eq!(code, 0);
        assert!(out.contains("= 0"));
    }
}

//! Library side of the `gsft` command-line tool. [`run`] executes one
//! invocation in-process, which is what the binary, the self-test and the
//! integration tests all call.

pub mod sample;
pub mod selftest;

use std::collections::BTreeMap;
use std::io;

use clap::{Parser, Subcommand, ValueEnum};
use gsft_core::equivalence::{
    descend_se_to_subgroup, lift_se, se_between_augmentation_and_extension, verify_se, Domain,
};
use gsft_core::flow::{apply_positive_move, weight_class_equal, weight_group, Side};
use gsft_core::gsft::{augmentation_matrix, extension_matrix, graph_action_is_inert, is_inert, quotient_presentation};
use gsft_core::json::*;
use gsft_core::periodic::{brute_force_census, census, kim_roush_condition, KimRoushMode};
use gsft_core::{Error, Subgroup};
use serde_json::{json, Value};

/// Exit codes.
pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "gsft", version, about = "Exact computations with free G-SFTs over Z_+[G]")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Orbits,
    Points,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Augmentation of a group-ring matrix.
    Augment { input: String },
    /// Extension matrix and its group action.
    Extend { input: String },
    /// Inertness certificate for a group-ring matrix or a free graph action.
    Inert { input: String },
    /// Compare det(I - tE(B)) with det(I - tA(B)).
    ZetaEqual { input: String },
    /// Group-ring presentation of a free graph action.
    Quotient { input: String },
    /// Periodic-point census of an integer matrix.
    Census {
        input: String,
        #[arg(long, default_value_t = 24)]
        max: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Use closed-path enumeration instead of traces.
        #[arg(long)]
        brute: bool,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
    },
    /// Kim–Roush arithmetic condition up to a horizon.
    Kimroush {
        input: String,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 24)]
        max: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Orbits)]
        mode: ModeArg,
    },
    /// Check a shift-equivalence witness for (A, B).
    VerifySe { a: String, b: String, witness: String },
    /// Witness between the augmentation and the extension of an inert matrix.
    SeAugExt { input: String },
    /// Lift a Z+ witness between augmentations to a Z+[G] witness.
    LiftSe { b: String, c: String, witness: String },
    /// Descend a Z+[G] witness to a normal subgroup.
    DescendSe {
        a: String,
        b: String,
        witness: String,
        /// Subgroup elements, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        subgroup: Vec<usize>,
    },
    /// Weight group at a vertex, or a weight-class comparison.
    Weight {
        input: String,
        #[arg(long, default_value_t = 0)]
        vertex: usize,
        #[arg(long)]
        compare: Option<String>,
    },
    /// Elementary positive move.
    Posmove {
        input: String,
        #[arg(long, value_enum)]
        side: SideArg,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        g: usize,
    },
    /// Golden-file suite and a small randomized battery.
    Selftest {
        #[arg(long)]
        quick: bool,
        #[arg(long)]
        golden_dir: Option<String>,
    },
}

/// Exit code plus everything written to standard output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

/// Where named inputs come from; `-` is standard input for the binary.
pub trait Inputs {
    fn read(&mut self, name: &str) -> io::Result<String>;
}

pub struct FileInputs;

impl Inputs for FileInputs {
    fn read(&mut self, name: &str) -> io::Result<String> {
        if name == "-" {
            io::read_to_string(io::stdin())
        } else {
            std::fs::read_to_string(name)
        }
    }
}

impl Inputs for BTreeMap<String, String> {
    fn read(&mut self, name: &str) -> io::Result<String> {
        self.get(name)
            .cloned()
            .ok_or_else(|| io::Error::new(io::ErrorKind::NotFound, format!("no input named {name}")))
    }
}

enum Failure {
    Core(Error),
    Io(String, io::Error),
    Json(String, serde_json::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn error_outcome(f: Failure) -> Outcome {
    let (code, kind, message) = match f {
        Failure::Core(e) => (
            if e.is_internal() { EXIT_INTERNAL } else { EXIT_INPUT },
            e.kind(),
            e.to_string(),
        ),
        Failure::Io(name, e) => (EXIT_INPUT, "io", format!("{name}: {e}")),
        Failure::Json(name, e) => (EXIT_INPUT, "json", format!("{name}: {e}")),
    };
    Outcome {
        code,
        stdout: format!("{}\n", json!({"error": kind, "message": message})),
    }
}

fn load(inputs: &mut dyn Inputs, name: &str) -> Result<Value, Failure> {
    let text = inputs.read(name).map_err(|e| Failure::Io(name.to_owned(), e))?;
    serde_json::from_str(&text).map_err(|e| Failure::Json(name.to_owned(), e))
}

fn emit(code: i32, v: &Value) -> Outcome {
    Outcome {
        code,
        stdout: format!("{}\n", serde_json::to_string_pretty(v).expect("values serialize")),
    }
}

fn predicate(b: bool) -> i32 {
    if b {
        EXIT_TRUE
    } else {
        EXIT_FALSE
    }
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, S>(argv: I, inputs: &mut dyn Inputs) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    code: EXIT_TRUE,
                    stdout: e.to_string(),
                };
            }
            let message = e.to_string();
            let first = message.lines().next().unwrap_or("").trim_start_matches("error: ");
            return Outcome {
                code: EXIT_INPUT,
                stdout: format!("{}\n", json!({"error": "usage", "message": first})),
            };
        }
    };
    match execute(cli.command, inputs) {
        Ok(o) => o,
        Err(f) => error_outcome(f),
    }
}

fn execute(command: Command, inputs: &mut dyn Inputs) -> Result<Outcome, Failure> {
    Ok(match command {
        Command::Augment { input } => {
            let b = group_ring_matrix_from_json(&load(inputs, &input)?)?;
            emit(EXIT_TRUE, &int_matrix_to_json(&augmentation_matrix(&b)))
        }
        Command::Extend { input } => {
            let b = group_ring_matrix_from_json(&load(inputs, &input)?)?;
            let ext = extension_matrix(&b)?;
            emit(
                EXIT_TRUE,
                &json!({
                    "matrix": int_matrix_to_json(&ext.matrix),
                    "action": graph_action_to_json(&ext.action),
                }),
            )
        }
        Command::Inert { input } => {
            let v = load(inputs, &input)?;
            if v.get("adjacency").is_some() {
                let action = graph_action_from_json(&v)?;
                let r = graph_action_is_inert(&action)?;
                emit(
                    predicate(r.certificate.is_inert()),
                    &json!({
                        "certificate": certificate_to_json(&r.certificate),
                        "quotient": quotient_to_json(&r.quotient),
                    }),
                )
            } else {
                let b = group_ring_matrix_from_json(&v)?;
                let c = is_inert(&b)?;
                emit(predicate(c.is_inert()), &certificate_to_json(&c))
            }
        }
        Command::ZetaEqual { input } => {
            let b = group_ring_matrix_from_json(&load(inputs, &input)?)?;
            let pa = augmentation_matrix(&b).reciprocal_charpoly()?;
            let pe = extension_matrix(&b)?.matrix.reciprocal_charpoly()?;
            let equal = pa == pe;
            emit(
                predicate(equal),
                &json!({
                    "equal": equal,
                    "augmentation": charpoly_to_json(&pa),
                    "extension": charpoly_to_json(&pe),
                    "divides": pa.divides(&pe),
                }),
            )
        }
        Command::Quotient { input } => {
            let action = graph_action_from_json(&load(inputs, &input)?)?;
            let q = quotient_presentation(&action)?;
            let mut v = quotient_to_json(&q);
            v["augmentation"] = int_matrix_to_json(&augmentation_matrix(&q.matrix));
            emit(EXIT_TRUE, &v)
        }
        Command::Census { input, max, format, brute, budget } => {
            let a = int_matrix_from_json(&load(inputs, &input)?)?;
            let c = if brute { brute_force_census(&a, max, budget)? } else { census(&a, max)? };
            match format {
                Format::Json => emit(EXIT_TRUE, &census_to_json(&c)),
                Format::Csv => Outcome {
                    code: EXIT_TRUE,
                    stdout: census_to_csv(&c),
                },
            }
        }
        Command::Kimroush { input, p, max, mode } => {
            let a = int_matrix_from_json(&load(inputs, &input)?)?;
            let mode = match mode {
                ModeArg::Orbits => KimRoushMode::Orbits,
                ModeArg::Points => KimRoushMode::Points,
            };
            let v = kim_roush_condition(&a, p, max, mode)?;
            emit(predicate(v.pass), &kim_roush_to_json(&v))
        }
        Command::VerifySe { a, b, witness } => {
            let wv = load(inputs, &witness)?;
            let (av, bv) = (load(inputs, &a)?, load(inputs, &b)?);
            let domain = match wv.get("domain").and_then(Value::as_str) {
                Some("Z+[G]") => Domain::NonNegGroupRing,
                _ => Domain::NonNegInt,
            };
            let report = match domain {
                Domain::NonNegInt => {
                    let w = int_witness_from_json(&wv)?;
                    verify_se(&int_matrix_from_json(&av)?, &int_matrix_from_json(&bv)?, &w)?
                }
                Domain::NonNegGroupRing => {
                    let am = group_ring_matrix_from_json(&av)?;
                    let bm = group_ring_matrix_in(&bv, Some(am.group()), "B")?;
                    let w = group_ring_witness_from_json(&wv, Some(am.group()))?;
                    verify_se(&am, &bm, &w)?
                }
            };
            emit(predicate(report.is_valid()), &se_report_to_json(&report))
        }
        Command::SeAugExt { input } => {
            let b = group_ring_matrix_from_json(&load(inputs, &input)?)?;
            let w = se_between_augmentation_and_extension(&b)?;
            emit(
                EXIT_TRUE,
                &json!({
                    "augmentation": int_matrix_to_json(&augmentation_matrix(&b)),
                    "extension": int_matrix_to_json(&extension_matrix(&b)?.matrix),
                    "witness": int_witness_to_json(&w),
                }),
            )
        }
        Command::LiftSe { b, c, witness } => {
            let bm = group_ring_matrix_from_json(&load(inputs, &b)?)?;
            let cm = group_ring_matrix_in(&load(inputs, &c)?, Some(bm.group()), "C")?;
            let w = int_witness_from_json(&load(inputs, &witness)?)?;
            emit(EXIT_TRUE, &group_ring_witness_to_json(&lift_se(&bm, &cm, &w)?))
        }
        Command::DescendSe { a, b, witness, subgroup } => {
            let am = group_ring_matrix_from_json(&load(inputs, &a)?)?;
            let bm = group_ring_matrix_in(&load(inputs, &b)?, Some(am.group()), "B")?;
            let w = group_ring_witness_from_json(&load(inputs, &witness)?, Some(am.group()))?;
            let h = Subgroup::new(am.group(), &subgroup)?;
            let d = descend_se_to_subgroup(&am, &bm, &h, &w)?;
            emit(
                EXIT_TRUE,
                &json!({
                    "g": d.conjugator,
                    "embedding": d.embedding,
                    "A": group_ring_matrix_to_json(&d.a),
                    "B": group_ring_matrix_to_json(&d.b),
                    "witness": group_ring_witness_to_json(&d.witness),
                }),
            )
        }
        Command::Weight { input, vertex, compare } => {
            let a = group_ring_matrix_from_json(&load(inputs, &input)?)?;
            match compare {
                None => emit(EXIT_TRUE, &weight_class_to_json(&weight_group(&a, vertex)?)),
                Some(other) => {
                    let b = group_ring_matrix_in(&load(inputs, &other)?, Some(a.group()), "compare")?;
                    let g = weight_class_equal(&a, &b)?;
                    emit(predicate(g.is_some()), &json!({"equal": g.is_some(), "conjugator": g}))
                }
            }
        }
        Command::Posmove { input, side, i, j, g } => {
            let a = group_ring_matrix_from_json(&load(inputs, &input)?)?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            emit(EXIT_TRUE, &group_ring_matrix_to_json(&apply_positive_move(&a, side, i, j, g)?))
        }
        Command::Selftest { quick, golden_dir } => {
            let report = selftest::run(quick, golden_dir.as_deref());
            emit(predicate(report.failures.is_empty()), &report.to_json())
        }
    })
}

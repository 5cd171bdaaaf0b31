//! Command line front end for the cluster-state toolkit.
//!
//! Subcommands map one-to-one onto the library layers: `gen` builds family
//! states, `ndd` discriminates them non-destructively, `audit` checks a
//! table for orthogonality defects, `dialogue` and `errors` run the two
//! protocols, `verify` runs the built-in end-to-end checks, and `run`
//! applies a circuit text file to a state.
//!
//! Exit codes: 0 on success, 1 when a verification or audit fails (or any
//! runtime error), 2 on usage errors. The sampling seed comes from
//! `--seed`, then the `NDD_SEED` environment variable, then 0.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use cndd::bits::BitString;
use cndd::cluster::{audit, generate, row_label_for_input, table_state, ClusterTable};
use cndd::gates::Circuit;
use cndd::ndd::{branch_ndd, run_ndd};
use cndd::protocols::{detect_error, dialogue_run_with, syndrome_table, DialogueSplit, Pauli};
use cndd::qstate::{read_state_document, write_state_document};
use cndd::verify::verify_all;
use cndd::{Family, StateVector, TableMode};

type CliError = Box<dyn std::error::Error>;
type CliResult = Result<ExitCode, CliError>;

#[derive(Parser)]
#[command(
    name = "cndd",
    version,
    about = "Cluster-state generation, non-destructive discrimination, and protocol simulation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// Machine-readable JSON.
    #[value(alias = "json")]
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    C4,
    C5,
}

impl From<FamilyArg> for Family {
    fn from(arg: FamilyArg) -> Family {
        match arg {
            FamilyArg::C4 => Family::C4,
            FamilyArg::C5 => Family::C5,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Verbatim,
    Repaired,
}

impl From<ModeArg> for TableMode {
    fn from(arg: ModeArg) -> TableMode {
        match arg {
            ModeArg::Verbatim => TableMode::Verbatim,
            ModeArg::Repaired => TableMode::Repaired,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SplitArg {
    Adjacent,
    Interleaved,
}

impl From<SplitArg> for DialogueSplit {
    fn from(arg: SplitArg) -> DialogueSplit {
        match arg {
            SplitArg::Adjacent => DialogueSplit::Adjacent,
            SplitArg::Interleaved => DialogueSplit::Interleaved,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a family state from generator input bits or a table row label.
    #[command(group = ArgGroup::new("source").required(true))]
    Gen {
        /// Family; inferred from the bit width when omitted.
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        /// Generator input bits, e.g. 0100.
        #[arg(long, group = "source")]
        input: Option<String>,
        /// Table row label to build directly, e.g. 1001.
        #[arg(long, group = "source")]
        row: Option<String>,
        /// Table mode backing --row lookups.
        #[arg(long, value_enum, default_value_t = ModeArg::Repaired)]
        mode: ModeArg,
        /// Write the state document here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Identify which table row a state is, without destroying it.
    #[command(group = ArgGroup::new("source").required(true))]
    Ndd {
        /// Family; inferred from the state width when omitted.
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        /// Table row label to discriminate, e.g. 1001.
        #[arg(long, group = "source")]
        label: Option<String>,
        /// State document to discriminate.
        #[arg(long, group = "source")]
        state: Option<PathBuf>,
        /// Table mode the readout is checked against.
        #[arg(long, value_enum, default_value_t = ModeArg::Repaired)]
        mode: ModeArg,
        /// Sampling seed; falls back to NDD_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        /// Enumerate every outcome branch instead of sampling one.
        #[arg(long)]
        branches: bool,
        /// Write the post-readout state document here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Audit a table for orthogonality defects and sign repairs.
    Audit {
        #[arg(long, value_enum, default_value_t = FamilyArg::C5)]
        family: FamilyArg,
        /// Audit the table as printed or after repair.
        #[arg(long, value_enum, conflicts_with_all = ["verbatim", "repaired"])]
        mode: Option<ModeArg>,
        /// Audit the table exactly as printed (the default).
        #[arg(long, conflicts_with = "repaired")]
        verbatim: bool,
        /// Audit the table after the unique sign repair.
        #[arg(long)]
        repaired: bool,
    },
    /// Run the alternating two-party dense-coding dialogue.
    Dialogue {
        /// Comma-separated four-bit messages, alternating senders A,B,A,...
        #[arg(long, value_delimiter = ',', required = true)]
        messages: Vec<String>,
        /// Which qubits each party holds.
        #[arg(long, value_enum, default_value_t = SplitArg::Interleaved)]
        split: SplitArg,
        /// Sampling seed; falls back to NDD_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print the single-fault syndrome table or inject one fault.
    Errors {
        #[arg(long, value_enum, default_value_t = FamilyArg::C4)]
        family: FamilyArg,
        /// Fault to inject, e.g. X3 or none.
        #[arg(long)]
        inject: Option<String>,
        /// Sampling seed; falls back to NDD_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run every built-in verification check.
    Verify,
    /// Apply a circuit text file to a state.
    #[command(group = ArgGroup::new("source").required(true))]
    Run {
        /// Circuit text file: one `GATE target [+ctrl] [-ctrl]` per line.
        #[arg(long)]
        circuit: PathBuf,
        /// State document to start from.
        #[arg(long, group = "source")]
        state: Option<PathBuf>,
        /// Basis input bits to start from, e.g. 0100.
        #[arg(long, group = "source")]
        input: Option<String>,
        /// Comma-separated qubits to measure after the circuit.
        #[arg(long, value_delimiter = ',')]
        measure: Option<Vec<usize>>,
        /// Sampling seed; falls back to NDD_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        /// Write the final (or post-measurement) state document here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn dispatch(cli: Cli) -> CliResult {
    let format = cli.format;
    match cli.command {
        Command::Gen {
            family,
            input,
            row,
            mode,
            out,
        } => cmd_gen(format, family, input, row, mode.into(), out),
        Command::Ndd {
            family,
            label,
            state,
            mode,
            seed,
            branches,
            out,
        } => cmd_ndd(format, family, label, state, mode.into(), seed, branches, out),
        Command::Audit {
            family,
            mode,
            verbatim: _,
            repaired,
        } => {
            let mode = mode.map(TableMode::from).unwrap_or(if repaired {
                TableMode::Repaired
            } else {
                TableMode::Verbatim
            });
            cmd_audit(format, family.into(), mode)
        }
        Command::Dialogue {
            messages,
            split,
            seed,
        } => cmd_dialogue(format, messages, split.into(), seed),
        Command::Errors {
            family,
            inject,
            seed,
        } => cmd_errors(format, family.into(), inject, seed),
        Command::Verify => cmd_verify(format),
        Command::Run {
            circuit,
            state,
            input,
            measure,
            seed,
            out,
        } => cmd_run(format, circuit, state, input, measure, seed, out),
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, CliError> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("NDD_SEED") {
        Ok(raw) => raw
            .parse()
            .map_err(|_| format!("NDD_SEED is not an unsigned integer: {raw}").into()),
        Err(_) => Ok(0),
    }
}

fn infer_family(explicit: Option<FamilyArg>, width: usize) -> Result<Family, CliError> {
    if let Some(f) = explicit {
        return Ok(f.into());
    }
    match width {
        4 => Ok(Family::C4),
        5 => Ok(Family::C5),
        other => Err(format!("no family has {other} data qubits; pass --family").into()),
    }
}

fn parse_bits(raw: &str) -> Result<BitString, CliError> {
    Ok(raw.parse::<BitString>()?)
}

/// Renders a state as a signed-ket sum when every nonzero amplitude is real
/// with a common magnitude, e.g. `1/2(|0000>+|0011>+|1100>-|1111>)` with
/// proper ket brackets; falls back to an amplitude listing otherwise.
fn render_state(state: &StateVector) -> String {
    let n = state.n_qubits();
    let nonzero: Vec<(usize, f64, f64)> = state
        .amps()
        .iter()
        .enumerate()
        .filter(|(_, a)| a.norm() > 1e-12)
        .map(|(k, a)| (k, a.re, a.im))
        .collect();
    if nonzero.is_empty() {
        return "0".to_string();
    }
    let mag = nonzero[0].1.hypot(nonzero[0].2);
    let uniform = nonzero
        .iter()
        .all(|&(_, re, im)| im.abs() < 1e-12 && (re.abs() - mag).abs() < 1e-9);
    if !uniform {
        return nonzero
            .iter()
            .map(|&(k, re, im)| {
                format!("|{}\u{27e9} {re:+.6}{im:+.6}i", BitString::from_index(k, n))
            })
            .collect::<Vec<_>>()
            .join("  ");
    }
    let mut terms = String::new();
    for (i, &(k, re, _)) in nonzero.iter().enumerate() {
        let sign = if re < 0.0 {
            "-"
        } else if i == 0 {
            ""
        } else {
            "+"
        };
        let _ = write!(terms, "{sign}|{}\u{27e9}", BitString::from_index(k, n));
    }
    if (mag - 1.0).abs() < 1e-9 && nonzero.len() == 1 {
        return terms;
    }
    let inv = mag.recip();
    let coeff = if (inv - inv.round()).abs() < 1e-9 {
        format!("1/{}", inv.round() as i64)
    } else {
        format!("{mag:.6}")
    };
    format!("{coeff}({terms})")
}

fn state_json(state: &StateVector) -> Result<serde_json::Value, CliError> {
    Ok(serde_json::from_str(&write_state_document(state))?)
}

fn write_out(path: &Path, state: &StateVector) -> Result<(), CliError> {
    std::fs::write(path, write_state_document(state))?;
    Ok(())
}

fn load_state(path: &Path) -> Result<StateVector, CliError> {
    let raw = std::fs::read_to_string(path)?;
    Ok(read_state_document(&raw)?)
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    format: Format,
    family: Option<FamilyArg>,
    input: Option<String>,
    row: Option<String>,
    mode: TableMode,
    out: Option<PathBuf>,
) -> CliResult {
    let (state, input_bits, row_label, family) = match (input, row) {
        (Some(raw), None) => {
            let bits = parse_bits(&raw)?;
            let family = infer_family(family, bits.len())?;
            let state = generate(family, &bits)?;
            let label = row_label_for_input(family, &bits)?;
            (state, Some(bits), label, family)
        }
        (None, Some(raw)) => {
            let label = parse_bits(&raw)?;
            let family = infer_family(family, label.len())?;
            let state = table_state(family, mode, &label)?;
            (state, None, label, family)
        }
        _ => unreachable!("clap enforces exactly one source"),
    };
    if let Some(path) = &out {
        write_out(path, &state)?;
    }
    match format {
        Format::Text => {
            if let Some(bits) = &input_bits {
                println!("input: {bits}");
            }
            println!("row: {row_label}");
            println!("state: {}", render_state(&state));
            if let Some(path) = &out {
                println!("wrote: {}", path.display());
            }
        }
        Format::Structured => {
            let v = serde_json::json!({
                "family": family.tag(),
                "input": input_bits.map(|b| b.to_string()),
                "row": row_label.to_string(),
                "state": state_json(&state)?,
            });
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
fn cmd_ndd(
    format: Format,
    family: Option<FamilyArg>,
    label: Option<String>,
    state_path: Option<PathBuf>,
    mode: TableMode,
    seed: Option<u64>,
    branches: bool,
    out: Option<PathBuf>,
) -> CliResult {
    let (state, family) = match (label, state_path) {
        (Some(raw), None) => {
            let label = parse_bits(&raw)?;
            let family = infer_family(family, label.len())?;
            (table_state(family, mode, &label)?, family)
        }
        (None, Some(path)) => {
            let state = load_state(&path)?;
            let family = infer_family(family, state.n_qubits())?;
            (state, family)
        }
        _ => unreachable!("clap enforces exactly one source"),
    };
    if branches {
        let outcomes = branch_ndd(family, mode, &state)?;
        match format {
            Format::Text => {
                for o in &outcomes {
                    let fidelity = o.post_state.fidelity_up_to_phase(&state)?;
                    println!(
                        "label {}  probability {:.12}  post-fidelity {:.12}",
                        o.label, o.probability, fidelity
                    );
                }
            }
            Format::Structured => {
                let mut rows = Vec::new();
                for o in &outcomes {
                    rows.push(serde_json::json!({
                        "label": o.label.to_string(),
                        "probability": o.probability,
                        "post_fidelity": o.post_state.fidelity_up_to_phase(&state)?,
                    }));
                }
                println!("{}", serde_json::to_string_pretty(&serde_json::json!({
                    "family": family.tag(),
                    "branches": rows,
                }))?);
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let seed = resolve_seed(seed)?;
    let outcome = run_ndd(family, mode, &state, seed)?;
    let fidelity = outcome.post_state.fidelity_up_to_phase(&state)?;
    if let Some(path) = &out {
        write_out(path, &outcome.post_state)?;
    }
    match format {
        Format::Text => {
            println!("label: {}", outcome.label);
            println!("probability: {:.12}", outcome.probability);
            println!("post-fidelity: {fidelity:.12}");
            if let Some(path) = &out {
                println!("wrote: {}", path.display());
            }
        }
        Format::Structured => {
            let v = serde_json::json!({
                "family": family.tag(),
                "label": outcome.label.to_string(),
                "probability": outcome.probability,
                "post_fidelity": fidelity,
            });
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_audit(format: Format, family: Family, mode: TableMode) -> CliResult {
    let table = match mode {
        TableMode::Verbatim => ClusterTable::verbatim(family),
        TableMode::Repaired => ClusterTable::repaired(family),
    };
    let report = audit(table);
    let mode_name = match mode {
        TableMode::Verbatim => "verbatim",
        TableMode::Repaired => "repaired",
    };
    match format {
        Format::Text => {
            println!("family: {}", family.tag());
            println!("mode: {mode_name}");
            println!("orthogonal: {}", report.orthogonal());
            for d in &report.defects {
                println!("defect: {} ~ {}  overlap {:+.2}", d.left, d.right, d.overlap);
            }
            for r in &report.repair_candidates {
                println!(
                    "repair: row {} ket |{}\u{27e9} sign -> {}",
                    r.label,
                    r.ket,
                    if r.new_sign > 0 { "+" } else { "-" }
                );
            }
        }
        Format::Structured => {
            let v = serde_json::json!({
                "family": family.tag(),
                "mode": mode_name,
                "orthogonal": report.orthogonal(),
                "defects": report.defects.iter().map(|d| serde_json::json!({
                    "left": d.left.to_string(),
                    "right": d.right.to_string(),
                    "overlap": d.overlap,
                })).collect::<Vec<_>>(),
                "repairs": report.repair_candidates.iter().map(|r| serde_json::json!({
                    "row": r.label.to_string(),
                    "ket": r.ket.to_string(),
                    "sign": if r.new_sign > 0 { "+" } else { "-" },
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
    }
    Ok(if report.orthogonal() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn cmd_dialogue(
    format: Format,
    messages: Vec<String>,
    split: DialogueSplit,
    seed: Option<u64>,
) -> CliResult {
    let seed = resolve_seed(seed)?;
    let parsed: Vec<BitString> = messages
        .iter()
        .map(|m| parse_bits(m))
        .collect::<Result<_, _>>()?;
    let transcript = dialogue_run_with(split, &parsed, seed)?;
    let split_name = match split {
        DialogueSplit::Adjacent => "adjacent",
        DialogueSplit::Interleaved => "interleaved",
    };
    match format {
        Format::Text => {
            println!("split: {split_name}");
            for r in &transcript.rounds {
                println!(
                    "round {}  sender {:?}  message {}  label {}  decoded {}  post-fidelity {:.12}",
                    r.round, r.sender, r.message, r.label, r.decoded, r.post_fidelity
                );
            }
        }
        Format::Structured => {
            let v = serde_json::json!({
                "split": split_name,
                "rounds": transcript.rounds.iter().map(|r| serde_json::json!({
                    "round": r.round,
                    "sender": format!("{:?}", r.sender),
                    "message": r.message.to_string(),
                    "label": r.label.to_string(),
                    "decoded": r.decoded.to_string(),
                    "post_fidelity": r.post_fidelity,
                })).collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_fault(raw: &str) -> Result<Option<(Pauli, usize)>, CliError> {
    if raw.eq_ignore_ascii_case("none") {
        return Ok(None);
    }
    let mut chars = raw.chars();
    let head = chars.next().ok_or("empty fault; use e.g. X3 or none")?;
    let pauli = match head.to_ascii_uppercase() {
        'X' => Pauli::X,
        'Y' => Pauli::Y,
        'Z' => Pauli::Z,
        _ => return Err(format!("unknown fault {raw}; use e.g. X3 or none").into()),
    };
    let qubit: usize = chars
        .as_str()
        .parse()
        .map_err(|_| format!("fault {raw} needs a qubit number, e.g. {}3", pauli.symbol()))?;
    Ok(Some((pauli, qubit)))
}

fn cmd_errors(
    format: Format,
    family: Family,
    inject: Option<String>,
    seed: Option<u64>,
) -> CliResult {
    let table = syndrome_table(family)?;
    match inject {
        None => match format {
            Format::Text => {
                println!("family: {}", family.tag());
                println!(
                    "cases: {}  distinct syndromes: {}",
                    table.entries().len(),
                    table.distinct_syndromes()
                );
                for e in table.entries() {
                    let partners: Vec<String> = table
                        .diagnose(&e.syndrome)
                        .iter()
                        .filter(|c| c.error != e.error)
                        .map(|c| c.describe())
                        .collect();
                    let note = if partners.is_empty() {
                        String::new()
                    } else {
                        format!("  (shared with {})", partners.join(", "))
                    };
                    println!("case {:<4} syndrome {}{note}", e.describe(), e.syndrome);
                }
            }
            Format::Structured => {
                let v = serde_json::json!({
                    "family": family.tag(),
                    "cases": table.entries().len(),
                    "distinct_syndromes": table.distinct_syndromes(),
                    "entries": table.entries().iter().map(|e| serde_json::json!({
                        "case": e.describe(),
                        "syndrome": e.syndrome.to_string(),
                    })).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&v)?);
            }
        },
        Some(raw) => {
            let injected = parse_fault(&raw)?;
            let seed = resolve_seed(seed)?;
            let report = detect_error(family, injected, seed)?;
            let candidates: Vec<String> =
                report.candidates.iter().map(|c| c.describe()).collect();
            match format {
                Format::Text => {
                    println!(
                        "injected: {}",
                        injected.map_or("none".to_string(), |(p, q)| format!("{p}{q}"))
                    );
                    println!("measured label: {}", report.measured_label);
                    println!("syndrome: {}", report.syndrome);
                    println!("candidates: {}", candidates.join(", "));
                    println!("post-fidelity: {:.12}", report.post_fidelity);
                }
                Format::Structured => {
                    let v = serde_json::json!({
                        "family": family.tag(),
                        "injected": injected.map(|(p, q)| format!("{p}{q}")),
                        "measured_label": report.measured_label.to_string(),
                        "syndrome": report.syndrome.to_string(),
                        "candidates": candidates,
                        "post_fidelity": report.post_fidelity,
                    });
                    println!("{}", serde_json::to_string_pretty(&v)?);
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(format: Format) -> CliResult {
    let results = verify_all();
    let all_passed = results.iter().all(|r| r.passed);
    match format {
        Format::Text => {
            for r in &results {
                let verdict = if r.passed { "PASS" } else { "FAIL" };
                println!("[{verdict}] {}: {}", r.name, r.details);
            }
            let passed = results.iter().filter(|r| r.passed).count();
            println!("{passed}/{} checks passed", results.len());
        }
        Format::Structured => {
            let v: Vec<_> = results
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "name": r.name,
                        "passed": r.passed,
                        "details": r.details,
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_run(
    format: Format,
    circuit_path: PathBuf,
    state_path: Option<PathBuf>,
    input: Option<String>,
    measure: Option<Vec<usize>>,
    seed: Option<u64>,
    out: Option<PathBuf>,
) -> CliResult {
    let start = match (state_path, input) {
        (Some(path), None) => load_state(&path)?,
        (None, Some(raw)) => {
            let bits = parse_bits(&raw)?;
            StateVector::basis_state(bits.len(), &bits)?
        }
        _ => unreachable!("clap enforces exactly one source"),
    };
    let text = std::fs::read_to_string(&circuit_path)?;
    let circuit = Circuit::parse_text(start.n_qubits(), &text)?;
    let final_state = circuit.run(&start)?;
    let measured = match measure {
        Some(targets) if !targets.is_empty() => {
            let seed = resolve_seed(seed)?;
            Some((targets.clone(), final_state.measure(&targets, seed)?))
        }
        _ => None,
    };
    let end_state = measured
        .as_ref()
        .map(|(_, m)| m.post_state.clone())
        .unwrap_or_else(|| final_state.clone());
    if let Some(path) = &out {
        write_out(path, &end_state)?;
    }
    match format {
        Format::Text => {
            println!("qubits: {}", circuit.n_qubits());
            println!("gates: {}", circuit.len());
            if let Some((targets, m)) = &measured {
                let shown: Vec<String> = targets.iter().map(|t| t.to_string()).collect();
                println!(
                    "measured [{}]: {}  probability {:.12}",
                    shown.join(","),
                    m.bits,
                    m.probability
                );
            }
            println!("state: {}", render_state(&end_state));
            if let Some(path) = &out {
                println!("wrote: {}", path.display());
            }
        }
        Format::Structured => {
            let v = serde_json::json!({
                "n_qubits": circuit.n_qubits(),
                "gates": circuit.len(),
                "measurement": measured.as_ref().map(|(targets, m)| serde_json::json!({
                    "targets": targets,
                    "bits": m.bits.to_string(),
                    "probability": m.probability,
                })),
                "state": state_json(&end_state)?,
            });
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
    }
    Ok(ExitCode::SUCCESS)
}

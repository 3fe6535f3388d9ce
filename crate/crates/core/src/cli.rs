//! Command-line front end. [`run`] does all the work so the binary stays a
//! one-liner and tests can drive it in-process.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::jdt::{crossing_violations, pieri_transfer, SlideTrace};
use crate::lr_tableaux::{enumerate_lr, enumerate_lr_any_content, Convention};
use crate::oracle::{OracleKind, ProductOracle};
use crate::schubert_ring::{structure_constant, verify_ring, SchubertRing, VerifyReport, Violation};
use crate::shapes::{horizontal_strip_successors, AmbientSpace, Cell, Partition, SkewShape};
use crate::shifted::{
    enumerate_hole_strips, enumerate_lrs, enumerate_lrs_any_content, persistence_violations,
    transfer_nw_to_se, HoleTrace, HoledTableau, Side,
};
use crate::tableau::SkewTableau;

#[derive(Parser, Debug)]
#[command(name = "schubert-lr", version, about = "Schubert structure constants for Grassmannians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum ConventionArg {
    Paper,
    Standard,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum TraceMode {
    A,
    Shifted,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One structure constant.
    Coeff {
        #[arg(long)]
        space: AmbientSpace,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
        #[arg(long, value_enum, default_value = "paper")]
        convention: ConventionArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Full expansion of a product of two basis classes.
    Product {
        #[arg(long)]
        space: AmbientSpace,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Product with the special class of index p, by strip counting.
    Pieri {
        #[arg(long)]
        space: AmbientSpace,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        lambda: Partition,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Every nonzero structure constant of a space, one per line.
    Table {
        #[arg(long)]
        space: AmbientSpace,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Ring axioms, Pieri agreement and duality over whole bases.
    Verify {
        #[arg(long)]
        space: Option<AmbientSpace>,
        /// Also compare every constant with the polynomial oracle.
        #[arg(long)]
        oracle: bool,
        /// Run A:k=N,m=N, B:n=N and C:n=N instead of the defaults.
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Step-by-step slide traces of the hole bijections.
    Trace {
        #[arg(long)]
        space: AmbientSpace,
        #[arg(long, value_enum)]
        mode: TraceMode,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        /// Restrict to tableaux of content `ν∨`.
        #[arg(long)]
        nu: Option<Partition>,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Parses `args` (program name first) and runs the subcommand. Returns the
/// exit status: 0 on success, 1 when verification finds violations, 2 on
/// bad arguments.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidSpace(format!("output failed: {e}"))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Coeff {
            space,
            lambda,
            mu,
            nu,
            convention,
            format,
        } => {
            let convention = match convention {
                ConventionArg::Paper => Convention::PaperForm,
                ConventionArg::Standard => Convention::StandardForm,
            };
            let c = structure_constant(&lambda, &mu, &nu, &space, convention)?;
            match format {
                Format::Text => writeln!(out, "{c}"),
                Format::Json => writeln!(out, "{}", record_json(&space, &TableRecord { lambda, mu, nu, coeff: c })),
            }
            .map_err(io)?;
        }
        Command::Product {
            space,
            lambda,
            mu,
            format,
        } => {
            let ring = SchubertRing::new(space);
            let x = ring.multiply(&ring.element(&lambda)?, &ring.element(&mu)?)?;
            print_expansion(out, format, &x)?;
        }
        Command::Pieri {
            space,
            p,
            lambda,
            format,
        } => {
            let ring = SchubertRing::new(space);
            let x = ring.pieri_multiply(p, &ring.element(&lambda)?)?;
            print_expansion(out, format, &x)?;
        }
        Command::Table { space, out: path, format } => {
            let mut buf = Vec::new();
            write_table(&space, format == Format::Json, &mut buf)?;
            match path {
                Some(path) => std::fs::write(&path, &buf).map_err(io)?,
                None => out.write_all(&buf).map_err(io)?,
            }
        }
        Command::Verify {
            space,
            oracle,
            max_size,
            format,
        } => {
            let spaces = match (space, max_size) {
                (Some(s), _) => vec![s],
                (None, size) => {
                    let n = size.unwrap_or(3);
                    let n_shifted = size.unwrap_or(4);
                    vec![
                        AmbientSpace::type_a(n, n)?,
                        AmbientSpace::type_b(n_shifted)?,
                        AmbientSpace::type_c(n_shifted)?,
                    ]
                }
            };
            let mut clean = true;
            for space in spaces {
                let ring = SchubertRing::new(space);
                let mut report = verify_ring(&ring);
                if oracle {
                    report.violations.extend(oracle_violations(&ring)?);
                }
                clean &= report.is_clean();
                print_report(out, format, &report, oracle)?;
            }
            return Ok(if clean { 0 } else { 1 });
        }
        Command::Trace {
            space,
            mode,
            lambda,
            mu,
            nu,
            p,
            limit,
            format,
        } => {
            let limit = limit.unwrap_or(usize::MAX);
            match mode {
                TraceMode::A => trace_type_a(out, format, &space, &lambda, &mu, nu.as_ref(), p, limit)?,
                TraceMode::Shifted => trace_shifted(out, format, &space, &lambda, &mu, nu.as_ref(), p, limit)?,
            }
        }
    }
    Ok(0)
}

fn print_expansion(
    out: &mut dyn Write,
    format: Format,
    x: &crate::schubert_ring::RingElement,
) -> Result<()> {
    match format {
        Format::Text => writeln!(out, "{x}"),
        Format::Json => writeln!(out, "{}", x.to_json()),
    }
    .map_err(io)
}

fn print_report(out: &mut dyn Write, format: Format, report: &VerifyReport, oracle: bool) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string(report).expect("report serializes")).map_err(io),
        Format::Text => {
            writeln!(
                out,
                "{}: {} basis elements, {} triples{}, {} violations",
                report.space,
                report.basis_size,
                report.triples,
                if oracle { ", oracle checked" } else { "" },
                report.violations.len()
            )
            .map_err(io)?;
            for v in &report.violations {
                writeln!(out, "  {v}").map_err(io)?;
            }
            Ok(())
        }
    }
}

/// Compares every constant of the ring with the polynomial oracle. Type C
/// constants are compared after the `2^{ℓ(λ)+ℓ(μ)-ℓ(ν)}` rescaling.
fn oracle_violations(ring: &SchubertRing) -> Result<Vec<Violation>> {
    let space = ring.space().normalized();
    let (kind, cap) = match space {
        AmbientSpace::TypeA { k, .. } => (OracleKind::Schur, k),
        AmbientSpace::TypeB { n } | AmbientSpace::TypeC { n } => (OracleKind::SchurP, n),
        AmbientSpace::TypeD { .. } => unreachable!("normalized"),
    };
    let mut oracle = ProductOracle::with_max_vars(kind, cap);
    let mut out = Vec::new();
    for lambda in ring.basis() {
        for mu in ring.basis() {
            let expansion = oracle.expansion(lambda, mu);
            for nu in ring.basis() {
                let mut expected = expansion.get(nu).copied().unwrap_or(0);
                if let AmbientSpace::TypeC { .. } = space {
                    let e = lambda.len() as i64 + mu.len() as i64 - nu.len() as i64;
                    if expected != 0 {
                        expected = if e >= 0 { expected << e } else { -1 };
                    }
                }
                let got = ring.structure_constant(lambda, mu, nu)?;
                if i64::try_from(got).ok() != Some(expected) {
                    out.push(Violation::Oracle {
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                        nu: nu.clone(),
                        expected,
                        got,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// One nonzero structure constant.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct TableRecord {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub coeff: u64,
}

#[derive(Serialize, Deserialize)]
struct JsonRecord {
    space: String,
    lambda: Partition,
    mu: Partition,
    nu: Partition,
    coeff: u64,
}

fn record_json(space: &AmbientSpace, r: &TableRecord) -> String {
    serde_json::to_string(&JsonRecord {
        space: space.to_string(),
        lambda: r.lambda.clone(),
        mu: r.mu.clone(),
        nu: r.nu.clone(),
        coeff: r.coeff,
    })
    .expect("record serializes")
}

/// `lambda;mu;nu;coeff` with partitions as `a,b,c` literals.
pub fn record_text(r: &TableRecord) -> String {
    format!("{};{};{};{}", r.lambda.literal(), r.mu.literal(), r.nu.literal(), r.coeff)
}

/// All nonzero constants of `space` in basis order of `λ`, `μ`, `ν`.
pub fn table_records(space: &AmbientSpace) -> Result<Vec<TableRecord>> {
    let ring = SchubertRing::new(*space);
    let mut out = Vec::new();
    for lambda in ring.basis() {
        for mu in ring.basis() {
            let expansion = ring.product_expansion(lambda, mu)?;
            for nu in ring.basis() {
                if let Some(&coeff) = expansion.get(nu) {
                    out.push(TableRecord {
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                        nu: nu.clone(),
                        coeff,
                    });
                }
            }
        }
    }
    Ok(out)
}

pub fn write_table(space: &AmbientSpace, json: bool, out: &mut dyn Write) -> Result<()> {
    for r in table_records(space)? {
        let line = if json { record_json(space, &r) } else { record_text(&r) };
        writeln!(out, "{line}").map_err(io)?;
    }
    Ok(())
}

/// Reads a dumped table in either format. JSON lines carry their space;
/// text lines yield `None` for it.
pub fn parse_table(input: &str) -> Result<Vec<(Option<AmbientSpace>, TableRecord)>> {
    let mut out = Vec::new();
    for line in input.lines().filter(|l| !l.trim().is_empty()) {
        let bad = || Error::Parse {
            what: "table line",
            token: line.to_string(),
        };
        if line.trim_start().starts_with('{') {
            let r: JsonRecord = serde_json::from_str(line).map_err(|_| bad())?;
            out.push((
                Some(r.space.parse()?),
                TableRecord {
                    lambda: r.lambda,
                    mu: r.mu,
                    nu: r.nu,
                    coeff: r.coeff,
                },
            ));
        } else {
            let fields: Vec<&str> = line.split(';').collect();
            let [l, m, n, c] = fields[..] else {
                return Err(bad());
            };
            out.push((
                None,
                TableRecord {
                    lambda: l.parse()?,
                    mu: m.parse()?,
                    nu: n.parse()?,
                    coeff: c.trim().parse().map_err(|_| bad())?,
                },
            ));
        }
    }
    Ok(out)
}

/// Re-serializes parsed records in the format they were read from.
pub fn format_table(records: &[(Option<AmbientSpace>, TableRecord)]) -> String {
    records
        .iter()
        .map(|(space, r)| match space {
            Some(s) => record_json(s, r) + "\n",
            None => record_text(r) + "\n",
        })
        .collect()
}

fn tableau_json<E: Display + Copy>(t: &SkewTableau<E>) -> serde_json::Value {
    let rows: Vec<Vec<String>> = t.rows().into_iter().map(|r| r.iter().map(E::to_string).collect()).collect();
    json!({ "inner": t.inner().parts(), "rows": rows })
}

fn tableau_text<E: Display + Copy>(t: &SkewTableau<E>) -> String {
    rows_text(t.inner(), &t.rows().into_iter().map(|r| r.iter().map(E::to_string).collect()).collect::<Vec<_>>())
}

fn rows_text(inner: &Partition, rows: &[Vec<String>]) -> String {
    let rows: Vec<String> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let skip = inner.part(i + 1);
            format!("{}{}", ". ".repeat(skip), r.join(" "))
        })
        .collect();
    rows.join(" / ")
}

fn cells_json(cells: &[Cell]) -> Vec<[usize; 2]> {
    cells.iter().map(|&(r, c)| [r, c]).collect()
}

fn path_text(cells: &[Cell]) -> String {
    cells.iter().map(|(r, c)| format!("({r},{c})")).collect::<Vec<_>>().join(" -> ")
}

#[allow(clippy::too_many_arguments)]
fn trace_type_a(
    out: &mut dyn Write,
    format: Format,
    space: &AmbientSpace,
    lambda: &Partition,
    mu: &Partition,
    nu: Option<&Partition>,
    p: usize,
    limit: usize,
) -> Result<()> {
    let AmbientSpace::TypeA { k, m } = *space else {
        return Err(Error::InvalidSpace(format!("{space}: mode a needs a type A space")));
    };
    for x in [Some(lambda), Some(mu), nu].into_iter().flatten() {
        space.check(x)?;
    }
    let outer = space.dual(lambda)?;
    let content = nu.map(|n| space.dual(n)).transpose()?;
    let mut shown = 0;
    for mu_tilde in horizontal_strip_successors(mu, p, space) {
        if !outer.contains(&mu_tilde) {
            continue;
        }
        let shape = SkewShape::young(outer.clone(), mu_tilde.clone())?;
        let tableaux = match &content {
            Some(c) => enumerate_lr(&shape, c),
            None => enumerate_lr_any_content(&shape),
        };
        for t in tableaux {
            if shown == limit {
                return Ok(());
            }
            shown += 1;
            let transfer = pieri_transfer(&t, mu, (k, m))?;
            let crossings = crossing_violations(&transfer.traces).len();
            match format {
                Format::Json => {
                    let traces: Vec<_> = transfer
                        .traces
                        .iter()
                        .map(|tr| json!({ "start": [tr.start.0, tr.start.1], "path": cells_json(&tr.path) }))
                        .collect();
                    let v = json!({
                        "mu_tilde": mu_tilde.parts(),
                        "lambda_tilde": transfer.partition.parts(),
                        "input": tableau_json(&t),
                        "traces": traces,
                        "output": tableau_json(&transfer.tableau),
                        "crossing_violations": crossings,
                    });
                    writeln!(out, "{v}").map_err(io)?;
                }
                Format::Text => {
                    writeln!(out, "mu~ = {mu_tilde}: {}", tableau_text(&t)).map_err(io)?;
                    for tr in &transfer.traces {
                        writeln!(out, "  hole {}", path_text(&tr.path)).map_err(io)?;
                    }
                    writeln!(
                        out,
                        "  lambda~ = {}: {}  (crossings: {crossings})",
                        transfer.partition,
                        tableau_text(&transfer.tableau)
                    )
                    .map_err(io)?;
                }
            }
        }
    }
    Ok(())
}

fn holed_json(h: &HoledTableau) -> serde_json::Value {
    json!({ "inner": h.inner().parts(), "rows": h.display_rows() })
}

fn hole_traces(traces: &[HoleTrace]) -> Vec<SlideTrace<crate::shifted::MarkedSymbol>> {
    traces.iter().map(|t| t.slide.clone()).collect()
}

#[allow(clippy::too_many_arguments)]
fn trace_shifted(
    out: &mut dyn Write,
    format: Format,
    space: &AmbientSpace,
    lambda: &Partition,
    mu: &Partition,
    nu: Option<&Partition>,
    p: usize,
    limit: usize,
) -> Result<()> {
    let Some(n) = space.staircase_size() else {
        return Err(Error::InvalidSpace(format!("{space}: mode shifted needs a type B, C or D space")));
    };
    for x in [Some(lambda), Some(mu), nu].into_iter().flatten() {
        space.check(x)?;
    }
    let outer = space.dual(lambda)?;
    let content = nu.map(|x| space.dual(x)).transpose()?;
    let mut shown = 0;
    for strip in enumerate_hole_strips(mu, p, n, Side::Nw)? {
        if !outer.contains(&strip.outer) {
            continue;
        }
        let shape = SkewShape::shifted(outer.clone(), strip.outer.clone())?;
        let bases = match &content {
            Some(c) => enumerate_lrs(&shape, c),
            None => enumerate_lrs_any_content(&shape),
        };
        for base in bases {
            if shown == limit {
                return Ok(());
            }
            shown += 1;
            let h = HoledTableau::new(base, strip.clone(), Side::Nw)?;
            let transfer = transfer_nw_to_se(&h)?;
            let slides = hole_traces(&transfer.traces);
            let crossings = persistence_violations(&slides).len();
            match format {
                Format::Json => {
                    let traces: Vec<_> = transfer
                        .traces
                        .iter()
                        .map(|tr| {
                            json!({
                                "start": [tr.slide.start.0, tr.slide.start.1],
                                "before": tr.before.to_string(),
                                "after": tr.after.to_string(),
                                "path": cells_json(&tr.slide.path),
                            })
                        })
                        .collect();
                    let v = json!({
                        "input": holed_json(&h),
                        "traces": traces,
                        "output": holed_json(&transfer.result),
                        "persistence_violations": crossings,
                    });
                    writeln!(out, "{v}").map_err(io)?;
                }
                Format::Text => {
                    writeln!(out, "NW: {}", rows_text(h.inner(), &h.display_rows())).map_err(io)?;
                    for tr in &transfer.traces {
                        writeln!(out, "  {} -> {}: {}", tr.before, tr.after, path_text(&tr.slide.path)).map_err(io)?;
                    }
                    writeln!(
                        out,
                        "  SE: {}  (persistence violations: {crossings})",
                        rows_text(transfer.result.inner(), &transfer.result.display_rows())
                    )
                    .map_err(io)?;
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("schubert-lr").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn coeff_and_errors() {
        let (code, out, _) = call(&["coeff", "--space", "B:n=7", "--lambda", "5,3,1", "--mu", "5,2", "--nu", "6,5,4,1"]);
        assert_eq!((code, out.as_str()), (0, "4\n"));
        let (code, _, err) = call(&["coeff", "--space", "B:n=4", "--lambda", "3,3", "--mu", "", "--nu", "3,3"]);
        assert_eq!(code, 2);
        assert!(err.contains("3,3"), "{err}");
        let (code, _, err) = call(&["coeff", "--space", "B:n=4", "--lambda", "3,x", "--mu", "1", "--nu", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains("3,x"), "{err}");
    }

    #[test]
    fn table_round_trips() {
        for json in [false, true] {
            let mut buf = Vec::new();
            write_table(&"C:n=3".parse().unwrap(), json, &mut buf).unwrap();
            let text = String::from_utf8(buf).unwrap();
            assert_eq!(format_table(&parse_table(&text).unwrap()), text);
        }
        assert!(parse_table("1;2;3").is_err());
    }
}

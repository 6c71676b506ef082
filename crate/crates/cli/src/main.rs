use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use hilbsq_core::betti::{
    self, expected_betti, fixture_table, render_table, validate_table, Fixture, TableFormat,
};
use hilbsq_core::bwb::{cohomology, Ambient, CohomologyTable, Descriptor, HomogBundle};
use hilbsq_core::gn::{generator_report, ideal_cohomology, GnCaseName};
use hilbsq_core::hilbert::{h0_power, ideal_dimension, rr_polynomial};
use hilbsq_core::intersect::{check_spinor_override, sigma_decomposition, SigmaDecomposition};
use hilbsq_core::json::big_to_json;
use hilbsq_core::lattice::{
    moduli_dimension, mukai_square, mukai_to_chern, GenusContext, MukaiVector,
};
use hilbsq_core::report::ValidationReport;
use hilbsq_core::selftest::{self, SelftestOptions};
use hilbsq_core::weyl::parse_doubled_list;
use hilbsq_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "hilbsq",
    version,
    about = "Syzygy and intersection bookkeeping for Hilbert squares of K3 surfaces"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Spinor Chern class override file; must agree with the derived classes.
    #[arg(long, global = true)]
    chern_file: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// h^0(X, H^e) for a polarization of square 2d.
    Hilbert {
        #[arg(long)]
        square: i64,
        #[arg(long)]
        power: i64,
    },
    /// Dimension of the degree-e part of the ideal of X in P^n.
    Ideal {
        #[arg(long)]
        square: i64,
        #[arg(long)]
        degree: i64,
    },
    #[command(subcommand)]
    Betti(BettiCommand),
    #[command(subcommand)]
    Bwb(BwbCommand),
    /// Cohomology of the ideal sheaf I(d) from the Gulliksen-Negard complex.
    Gn {
        #[arg(long)]
        case: GnCaseName,
        /// Omit for the generator report.
        #[arg(long, allow_hyphen_values = true)]
        degree: Option<i64>,
    },
    /// Degrees of the rank strata of the quadrics through the K3.
    Degrees(GenusArgs),
    /// Mukai square, moduli dimension and Chern classes of a Mukai vector.
    Mukai {
        #[command(flatten)]
        genus: GenusArgs,
        /// r,c,s
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
    },
    /// Runs the acceptance battery.
    Selftest,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GenusArgs {
    #[arg(long)]
    genus: Option<i64>,
    /// Inclusive genus range `g1..g2`.
    #[arg(long)]
    sweep: Option<String>,
}

#[derive(Subcommand)]
enum BettiCommand {
    /// Expected Betti table from the Hilbert series.
    Expected {
        #[arg(long)]
        square: i64,
    },
    /// Checks a stored table against the Hilbert series and duality.
    Validate {
        #[arg(long)]
        fixture: String,
    },
    /// Prints a stored table.
    Show {
        #[arg(long)]
        fixture: String,
    },
}

#[derive(Subcommand)]
enum BwbCommand {
    /// Sigma^pattern Q^vee (x) Sigma^sub U^vee (twist) on Gr(k, n).
    Gr {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        pattern: String,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        sub_pattern: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        twist: i64,
    },
    /// Homogeneous bundle with Levi weight `a,b_1,...,b_m` on Q^{2m}; entries may be `k/2`.
    Quadric {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        twist: i64,
    },
}

/// A result in all three output formats.
struct Rendered {
    text: String,
    json: Value,
    csv: String,
}

enum Outcome {
    Ok(Rendered),
    /// Printed, then reported as an inconsistency.
    Failed(Rendered, String),
}

fn csv_string(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

fn half_square(square: i64) -> Result<i64> {
    if square % 2 != 0 {
        return Err(Error::OddSquare(square.to_string()));
    }
    if square < 2 {
        return Err(Error::InvalidInput(format!(
            "square must be positive, got {square}"
        )));
    }
    Ok(square / 2)
}

fn parse_list(s: &str) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("not an integer: `{x}`")))
        })
        .collect()
}

fn parse_sweep(s: &str) -> Result<Vec<i64>> {
    let bad = || Error::InvalidInput(format!("sweep must look like g1..g2, got `{s}`"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a..=b).collect())
}

fn genera(args: &GenusArgs) -> Result<Vec<i64>> {
    match (&args.genus, &args.sweep) {
        (Some(g), None) => Ok(vec![*g]),
        (None, Some(s)) => parse_sweep(s),
        _ => Err(Error::InvalidInput(
            "give exactly one of --genus and --sweep".into(),
        )),
    }
}

/// Evaluates `f` at every genus, concurrently, keeping the input order.
fn sweep<T: Send>(gs: &[i64], f: impl Fn(i64) -> Result<T> + Sync) -> Result<Vec<T>> {
    gs.par_iter()
        .map(|&g| f(g))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

fn hilbert(square: i64, power: i64) -> Result<Rendered> {
    let d = half_square(square)?;
    if power < 0 {
        return Err(Error::InvalidInput(format!(
            "power must be >= 0, got {power}"
        )));
    }
    let h0 = h0_power(d, power);
    let rr = rr_polynomial(2, power * power * square)?;
    if power > 0 && h0 != rr {
        return Err(Error::Inconsistent(format!("h0 = {h0} but RR = {rr}")));
    }
    Ok(Rendered {
        text: format!("h0(H^{power}) = {h0}\n"),
        json: json!({ "square": square, "power": power, "h0": big_to_json(&h0) }),
        csv: csv_string(
            &["square", "power", "h0"],
            &[vec![square.to_string(), power.to_string(), h0.to_string()]],
        ),
    })
}

fn ideal(square: i64, degree: i64) -> Result<Rendered> {
    let d = half_square(square)?;
    let dim = ideal_dimension(d, degree)?;
    Ok(Rendered {
        text: format!("dim I_{degree} = {dim}\n"),
        json: json!({ "square": square, "degree": degree, "dim": big_to_json(&dim) }),
        csv: csv_string(
            &["square", "degree", "dim"],
            &[vec![
                square.to_string(),
                degree.to_string(),
                dim.to_string(),
            ]],
        ),
    })
}

fn render_betti(t: &betti::BettiTable) -> Rendered {
    Rendered {
        text: render_table(t, TableFormat::PaperText),
        json: betti::table_to_json(t),
        csv: render_table(t, TableFormat::Csv),
    }
}

fn render_report(r: &ValidationReport) -> Rendered {
    let rows: Vec<Vec<String>> = r
        .checks
        .iter()
        .map(|c| vec![c.name.clone(), c.pass.to_string(), c.detail.clone()])
        .collect();
    Rendered {
        text: r.to_string(),
        json: serde_json::to_value(r).expect("report serializes"),
        csv: csv_string(&["name", "pass", "detail"], &rows),
    }
}

fn betti_command(cmd: &BettiCommand) -> Result<Outcome> {
    match cmd {
        BettiCommand::Expected { square } => Ok(Outcome::Ok(render_betti(&expected_betti(
            half_square(*square)?,
        )?))),
        BettiCommand::Show { fixture } => Ok(Outcome::Ok(render_betti(&fixture_table(
            Fixture::parse(fixture)?,
        )))),
        BettiCommand::Validate { fixture } => {
            let f = Fixture::parse(fixture)?;
            let report = validate_table(&fixture_table(f), f.square_half())?;
            let rendered = render_report(&report);
            if report.passed() {
                Ok(Outcome::Ok(rendered))
            } else {
                let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
                Ok(Outcome::Failed(
                    rendered,
                    format!("{} failed: {}", f.name(), names.join(", ")),
                ))
            }
        }
    }
}

fn render_cohomology(t: &CohomologyTable) -> Rendered {
    let rows: Vec<Vec<String>> = t
        .degrees
        .iter()
        .map(|(i, v)| vec![i.to_string(), v.to_string()])
        .collect();
    Rendered {
        text: format!("{t}\n"),
        json: t.to_json(),
        csv: csv_string(&["degree", "dim"], &rows),
    }
}

fn bwb_command(cmd: &BwbCommand) -> Result<Rendered> {
    let bundle = match cmd {
        BwbCommand::Gr {
            k,
            n,
            pattern,
            sub_pattern,
            twist,
        } => {
            let descriptor = Descriptor::Grassmannian {
                quot_dual: parse_list(pattern)?,
                sub_dual: parse_list(sub_pattern)?,
            };
            HomogBundle::irreducible(Ambient::grassmannian(*k, *n)?, descriptor, *twist)?
        }
        BwbCommand::Quadric { m, weight, twist } => {
            let descriptor = Descriptor::Quadric {
                doubled: parse_doubled_list(weight)?,
            };
            HomogBundle::irreducible(Ambient::even_quadric(*m)?, descriptor, *twist)?
        }
    };
    Ok(render_cohomology(&cohomology(&bundle)?))
}

fn gn_command(case: GnCaseName, degree: Option<i64>) -> Result<Rendered> {
    let c = case.case();
    let Some(d) = degree else {
        let r = generator_report(&c)?;
        let sections: Vec<String> = r
            .ideal_sections
            .iter()
            .map(|(e, v)| format!("h0(I({e})) = {v}"))
            .collect();
        return Ok(Rendered {
            text: format!(
                "{case}: {}; {} generators of degree {} = {} + {}; {} quadrics through the ambient\n",
                sections.join(", "),
                r.generators,
                r.generator_degree,
                r.extension.0,
                r.extension.1,
                r.ambient_quadrics
            ),
            json: json!({
                "case": case.to_string(),
                "ambient_quadrics": big_to_json(&r.ambient_quadrics),
                "ideal_sections": r.ideal_sections.iter().map(|(e, v)| json!({"degree": e, "h0": big_to_json(v)})).collect::<Vec<_>>(),
                "generator_degree": r.generator_degree,
                "generators": big_to_json(&r.generators),
                "extension": [big_to_json(&r.extension.0), big_to_json(&r.extension.1)],
            }),
            csv: csv_string(
                &["case", "degree", "h0"],
                &r.ideal_sections
                    .iter()
                    .map(|(e, v)| vec![case.to_string(), e.to_string(), v.to_string()])
                    .collect::<Vec<_>>(),
            ),
        });
    };
    let h = ideal_cohomology(&c, d)?;
    let mut table = CohomologyTable::default();
    for (i, v) in h {
        let i = usize::try_from(i)
            .map_err(|_| Error::Inconsistent(format!("cohomology in degree {i}")))?;
        table.degrees.insert(i, v);
    }
    let mut r = render_cohomology(&table);
    r.text = format!("{case} I({d}): {}", r.text);
    Ok(r)
}

fn decomposition_row(s: &SigmaDecomposition) -> Vec<String> {
    vec![
        s.genus.to_string(),
        s.total.to_string(),
        s.y0.to_string(),
        s.y_top.as_ref().map(BigInt::to_string).unwrap_or_default(),
        s.residual.to_string(),
    ]
}

fn decomposition_json(s: &SigmaDecomposition) -> Value {
    json!({
        "genus": s.genus,
        "sigma": big_to_json(&s.total),
        "y0": big_to_json(&s.y0),
        "y_top": s.y_top.as_ref().map(big_to_json).unwrap_or(Value::Null),
        "residual": big_to_json(&s.residual),
    })
}

fn degrees_command(args: &GenusArgs) -> Result<Rendered> {
    let gs = genera(args)?;
    let results = sweep(&gs, sigma_decomposition)?;
    let single = args.genus.is_some();
    let text = results
        .iter()
        .map(|s| {
            if single {
                format!("{s}\n")
            } else {
                format!("g={} {s}\n", s.genus)
            }
        })
        .collect();
    let json = if single {
        decomposition_json(&results[0])
    } else {
        Value::Array(results.iter().map(decomposition_json).collect())
    };
    let rows: Vec<Vec<String>> = results.iter().map(decomposition_row).collect();
    Ok(Rendered {
        text,
        json,
        csv: csv_string(&["genus", "sigma", "y0", "y_top", "residual"], &rows),
    })
}

struct MukaiRow {
    genus: i64,
    square: BigInt,
    moduli_dim: Option<BigInt>,
    chern: Option<(BigInt, BigInt)>,
}

fn mukai_row(g: i64, v: &MukaiVector) -> Result<MukaiRow> {
    let ctx = GenusContext::new(g)?;
    let square = mukai_square(v, &ctx);
    let moduli_dim = match moduli_dimension(v, &ctx) {
        Ok(d) => Some(d),
        Err(Error::NonexistentModuli { .. }) => None,
        Err(e) => return Err(e),
    };
    let chern = if v.r > BigInt::from(0) {
        Some(mukai_to_chern(v, &ctx)?)
    } else {
        None
    };
    Ok(MukaiRow {
        genus: g,
        square,
        moduli_dim,
        chern,
    })
}

fn mukai_command(args: &GenusArgs, vector: &str) -> Result<Rendered> {
    let parts = parse_list(vector)?;
    let [r, c, s] = parts[..] else {
        return Err(Error::InvalidInput(format!(
            "vector must be r,c,s, got `{vector}`"
        )));
    };
    let v = MukaiVector::new(r, c, s);
    let gs = genera(args)?;
    let rows = sweep(&gs, |g| mukai_row(g, &v))?;
    let single = args.genus.is_some();
    let text = rows
        .iter()
        .map(|m| {
            let mut line = if single {
                String::new()
            } else {
                format!("g={} ", m.genus)
            };
            line += &format!("v^2 = {}", m.square);
            match &m.moduli_dim {
                Some(d) => line += &format!(", dim M = {d}"),
                None => line += ", moduli space empty",
            }
            if let Some((c1, c2)) = &m.chern {
                line += &format!(", c1 = {c1}L, c2 = {c2}");
            }
            line + "\n"
        })
        .collect();
    let to_json = |m: &MukaiRow| {
        json!({
            "genus": m.genus,
            "square": big_to_json(&m.square),
            "moduli_dim": m.moduli_dim.as_ref().map(big_to_json).unwrap_or(Value::Null),
            "c1": m.chern.as_ref().map(|c| big_to_json(&c.0)).unwrap_or(Value::Null),
            "c2": m.chern.as_ref().map(|c| big_to_json(&c.1)).unwrap_or(Value::Null),
        })
    };
    let json = if single {
        to_json(&rows[0])
    } else {
        Value::Array(rows.iter().map(to_json).collect())
    };
    let opt = |x: &Option<BigInt>| x.as_ref().map(BigInt::to_string).unwrap_or_default();
    let csv_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|m| {
            vec![
                m.genus.to_string(),
                m.square.to_string(),
                opt(&m.moduli_dim),
                opt(&m.chern.as_ref().map(|c| c.0.clone())),
                opt(&m.chern.as_ref().map(|c| c.1.clone())),
            ]
        })
        .collect();
    Ok(Rendered {
        text,
        json,
        csv: csv_string(&["genus", "square", "moduli_dim", "c1", "c2"], &csv_rows),
    })
}

fn selftest_command(spinor_override: Option<String>) -> Outcome {
    let results = selftest::run(&SelftestOptions { spinor_override });
    let mut text = String::new();
    for c in &results {
        let mark = if c.pass { "PASS" } else { "FAIL" };
        text += &format!(
            "{mark} {}\n  expected: {}\n  got:      {}\n",
            c.name, c.expected, c.got
        );
    }
    text += &format!("NOTE {}\n", selftest::CRITERION_10);
    let rows: Vec<Vec<String>> = results
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                c.expected.clone(),
                c.got.clone(),
                c.pass.to_string(),
            ]
        })
        .collect();
    let rendered = Rendered {
        text,
        json: serde_json::to_value(&results).expect("criteria serialize"),
        csv: csv_string(&["name", "expected", "got", "pass"], &rows),
    };
    let failed: Vec<&str> = results
        .iter()
        .filter(|c| !c.pass)
        .map(|c| c.name.as_str())
        .collect();
    if failed.is_empty() {
        Outcome::Ok(rendered)
    } else {
        Outcome::Failed(rendered, format!("selftest failed: {}", failed.join(", ")))
    }
}

fn read_override(path: &Option<PathBuf>) -> Result<Option<String>> {
    path.as_ref()
        .map(|p| {
            fs::read_to_string(p).map_err(|e| Error::InvalidInput(format!("{}: {e}", p.display())))
        })
        .transpose()
}

fn run(cli: &Cli) -> Result<Outcome> {
    let spinor_override = read_override(&cli.chern_file)?;
    if let Command::Selftest = cli.command {
        return Ok(selftest_command(spinor_override));
    }
    if let Some(text) = &spinor_override {
        check_spinor_override(text)?;
    }
    let rendered = match &cli.command {
        Command::Hilbert { square, power } => hilbert(*square, *power)?,
        Command::Ideal { square, degree } => ideal(*square, *degree)?,
        Command::Betti(cmd) => return betti_command(cmd),
        Command::Bwb(cmd) => bwb_command(cmd)?,
        Command::Gn { case, degree } => gn_command(*case, *degree)?,
        Command::Degrees(args) => degrees_command(args)?,
        Command::Mukai { genus, vector } => mukai_command(genus, vector)?,
        Command::Selftest => unreachable!(),
    };
    Ok(Outcome::Ok(rendered))
}

fn emit(r: &Rendered, format: Format) {
    let body = match format {
        Format::Text => r.text.clone(),
        Format::Json => serde_json::to_string(&r.json).expect("json output") + "\n",
        Format::Csv => r.csv.clone(),
    };
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
}

const EXIT_INVALID: u8 = 2;
const EXIT_INCONSISTENT: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let line = msg
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ");
            eprintln!("hilbsq: invalid-input: {line}");
            return ExitCode::from(EXIT_INVALID);
        }
    };
    match run(&cli) {
        Ok(Outcome::Ok(r)) => {
            emit(&r, cli.format);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(r, reason)) => {
            emit(&r, cli.format);
            eprintln!("hilbsq: inconsistency: {reason}");
            ExitCode::from(EXIT_INCONSISTENT)
        }
        Err(e) if e.is_inconsistency() => {
            eprintln!("hilbsq: inconsistency: {e}");
            ExitCode::from(EXIT_INCONSISTENT)
        }
        Err(e) => {
            eprintln!("hilbsq: invalid-input: {e}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

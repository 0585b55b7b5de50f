use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand, ValueEnum};

use emverify_core::engine::DEFAULT_BOUND;
use emverify_core::lie::Family;
use emverify_core::verify::{
    alt_records, lemma33_records, lemma42_records, lie_records, run_suite, sylow_oracle_records, sym_records, Report,
    SuiteConfig,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "emverify", version, about = "Compare minimal heights of blocks and defect groups")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Blocks of symmetric groups
    Sym {
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        primes: Vec<usize>,
    },
    /// Blocks of alternating groups
    Alt {
        #[arg(long, default_value_t = 20)]
        n_max: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        primes: Vec<usize>,
    },
    /// Wreath recursion against explicit Sylow subgroups
    SylowOracle {
        #[arg(long, default_value_t = 1 << 14)]
        bound: u64,
        #[arg(long, value_delimiter = ',', default_value = "2,3,5")]
        primes: Vec<usize>,
    },
    /// Unipotent minimal heights and Sylow models against m(G,p)
    Lie {
        #[arg(long, value_delimiter = ',', default_value = "A,2A,B,C,D,2D,3D4,G2", value_parser = parse_family)]
        families: Vec<Family>,
        #[arg(long, default_value_t = 4)]
        rank_max: u32,
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,5,7,8,9")]
        q_list: Vec<u64>,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Cyclotomic valuation scan
    Lemma42 {
        #[arg(long, value_delimiter = ',', default_value = "3,5,7,11")]
        p_list: Vec<u64>,
        #[arg(long, default_value_t = 50)]
        q_max: u64,
        #[arg(long, default_value_t = 2)]
        i_max: u32,
    },
    /// Degrees of the group Y of order q^5
    Lemma33 {
        #[arg(long, value_delimiter = ',', default_value = "3,5")]
        q: Vec<u64>,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Every suite with default parameters
    Suite,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: emverify_core::lie::LieError| e.to_string())
}

fn run(command: Command) -> Report {
    match command {
        Command::Sym { n_max, primes } => sym_records(n_max, &primes),
        Command::Alt { n_max, primes } => alt_records(n_max, &primes),
        Command::SylowOracle { bound, primes } => sylow_oracle_records(bound, &primes),
        Command::Lie {
            families,
            rank_max,
            q_list,
            bound,
        } => lie_records(&families, rank_max, &q_list, bound),
        Command::Lemma42 { p_list, q_max, i_max } => lemma42_records(&p_list, q_max, i_max),
        Command::Lemma33 { q, bound } => lemma33_records(&q, bound),
        Command::Suite => run_suite(&SuiteConfig::default()),
    }
}

fn write_text(report: &Report, out: &mut impl Write) -> Result<()> {
    let header = ["target", "block", "mhB", "mhD", "status", "provenance", "detail"];
    let rows: Vec<[String; 7]> = report
        .records
        .iter()
        .map(|r| {
            [
                r.target.to_string(),
                r.block.to_string(),
                r.mh_b.symbol(),
                r.mh_d.symbol(),
                r.status.to_string(),
                r.provenance.to_string(),
                r.detail.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[&str]| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(&header))?;
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        writeln!(out, "{}", line(&cells))?;
    }
    Ok(())
}

fn write_report(report: &Report, format: Format, out: &mut impl Write) -> Result<()> {
    match format {
        Format::Text => write_text(report, out)?,
        Format::Json => {
            for r in &report.records {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["target", "block", "mhB", "mhD", "status"])?;
            for r in &report.records {
                w.write_record([
                    r.target.to_string(),
                    r.block.to_string(),
                    r.mh_b.to_string(),
                    r.mh_d.to_string(),
                    r.status.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(cli.command.unwrap_or(Command::Suite));
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    if let Err(e) = write_report(&report, cli.format, &mut out).and_then(|()| Ok(out.flush()?)) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    for v in &report.violations {
        eprintln!("violation: {v}");
    }
    eprintln!(
        "{} records, {} mismatches, {} violations",
        report.records.len(),
        report.mismatches(),
        report.violations.len()
    );
    if report.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

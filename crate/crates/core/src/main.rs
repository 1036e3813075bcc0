use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

use dispogroup::report::{
    self, render_ledger, render_rows, render_verify_rows, OutputFormat, SubgroupSelector,
};

/// Exact invariants of disposition p-groups G_d^c, with an enumeration
/// engine for cross-verification.
#[derive(Parser)]
#[command(name = "dispogroup", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for every subcommand.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => OutputFormat::Table,
            FormatArg::Json => OutputFormat::Json,
            FormatArg::Csv => OutputFormat::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Rank chi_n(d) of the weight-n layer of a free Lie ring (Witt's formula).
    Witt {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        /// Cross-check against the brute-force Lyndon word enumeration.
        #[arg(long)]
        verify: bool,
    },
    /// Order exponent of G_d^c or one of its series subgroups.
    Order {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        c: u64,
        /// One of: group, gamma:i, lambda:j, center:i.
        #[arg(long, default_value = "group")]
        subgroup: String,
    },
    /// Rank of the m-nilpotent multiplier (--m) or of a polynilpotent
    /// multiplier of a class row (--row m1,m2,...).
    Multiplier {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        c: u64,
        #[arg(long, conflicts_with = "row")]
        m: Option<u64>,
        #[arg(long, value_delimiter = ',')]
        row: Option<Vec<u64>>,
        /// Longest class row accepted; composed chi values explode quickly.
        #[arg(long, default_value_t = 4)]
        max_row_len: usize,
    },
    /// The multiplier rank next to the Jones, Burns-Ellis and
    /// Niroomand-Johari-Parvizi bounds.
    Bounds {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        m: u64,
    },
    /// Run the enumeration engine against the closed-form formulas.
    Verify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        c: u64,
        /// Ceiling on enumerated subgroup sizes; larger subgroups are skipped.
        #[arg(long, default_value_t = report::DEFAULT_CAP)]
        cap: usize,
        /// Write each enumerated subgroup as sorted coordinate vectors
        /// (JSON) into this directory.
        #[arg(long)]
        dump_sets: Option<PathBuf>,
    },
    /// Print the discrepancy ledger.
    Ledger,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format: OutputFormat = cli.format.into();
    let result = match cli.command {
        Command::Witt { n, d, verify } => report::cmd_witt(n, d, verify).map(|rows| {
            print!("{}", ensure_newline(render_rows(&rows, format)));
            0
        }),
        Command::Order { p, d, c, subgroup } => SubgroupSelector::parse(&subgroup)
            .and_then(|sel| report::cmd_order(p, d, c, &sel))
            .map(|rows| {
                print!("{}", ensure_newline(render_rows(&rows, format)));
                0
            }),
        Command::Multiplier {
            p,
            d,
            c,
            m,
            row,
            max_row_len,
        } => report::cmd_multiplier(p, d, c, m, row, max_row_len).map(|rows| {
            print!("{}", ensure_newline(render_rows(&rows, format)));
            0
        }),
        Command::Bounds { p, d, c, m } => report::cmd_bounds(p, d, c, m).map(|rows| {
            print!("{}", ensure_newline(render_rows(&rows, format)));
            0
        }),
        Command::Verify {
            p,
            d,
            c,
            cap,
            dump_sets,
        } => report::cmd_verify(p, d, c, cap, dump_sets.as_deref()).map(|(rows, outcome)| {
            print!("{}", ensure_newline(render_verify_rows(&rows, format)));
            outcome.exit_code()
        }),
        Command::Ledger => {
            print!("{}", ensure_newline(render_ledger(format)));
            Ok(0)
        }
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code as u8)
        }
    }
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

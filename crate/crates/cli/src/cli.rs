use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "parry", version, about = "Factor and palindromic structure of the words u_β of simple Parry numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Profiles, closed forms and every applicable check.
    Analyze {
        /// Rényi digits of 1, comma separated.
        #[arg(long, value_parser = parse_digits)]
        digits: Digits,
        #[arg(long)]
        prefix_len: Option<usize>,
        /// Largest n reported; defaults to min(500, horizon).
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Include wall-clock timings (makes the output non-deterministic).
        #[arg(long)]
        timings: bool,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Runs the theorem suite; exit status 0 iff every check passes.
    Verify {
        #[arg(long, value_parser = parse_digits)]
        digits: Digits,
        #[arg(long)]
        prefix_len: Option<usize>,
    },
    /// Verifies every confluent (t, s, m) with 2 <= m <= m_max, 1 <= s <= t <= t_max.
    Sweep {
        #[arg(long)]
        m_max: usize,
        #[arg(long)]
        t_max: u32,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        prefix_len: Option<usize>,
    },
    /// Prints a prefix of u_β.
    Generate {
        #[arg(long, value_parser = parse_digits)]
        digits: Digits,
        #[arg(long)]
        len: usize,
    },
    /// Central factor of an infinite palindromic branch and the ψ images.
    Branch {
        #[arg(long, value_parser = parse_digits)]
        digits: Digits,
        /// `eps` or a letter.
        #[arg(long)]
        center: String,
        #[arg(long)]
        len: usize,
        #[arg(long)]
        psi: bool,
    },
    /// Defect of every prefix up to the given length.
    Defect {
        #[arg(long, value_parser = parse_digits)]
        digits: Digits,
        #[arg(long)]
        len: usize,
    },
    /// Rényi expansion of 1 in base beta.
    Expand {
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 64)]
        max_digits: usize,
    },
}

/// A comma-separated digit string `t1,t2,..`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digits(pub Vec<u32>);

fn parse_digits(s: &str) -> Result<Digits, String> {
    s.split(',')
        .map(|x| x.trim().parse::<u32>().map_err(|e| format!("bad digit {:?}: {}", x, e)))
        .collect::<Result<_, _>>()
        .map(Digits)
}

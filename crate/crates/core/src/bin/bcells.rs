use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bcells::kl::DEFAULT_ORACLE_RANK;
use bcells::knuth::{format_moves, knuth_bridge};
use bcells::report::{self, Format, Method, RunConfig};
use bcells::{Error, SignedPerm, WeightFunction};

#[derive(Parser)]
#[command(name = "bcells", version, about = "Cells and Vogan classes of type B_n with unequal parameters")]
struct Cli {
    /// Worker threads (defaults to BCELLS_THREADS, then all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct WeightArgs {
    #[arg(long, default_value_t = 1)]
    a: u32,
    /// Defaults to `n`, the asymptotic case.
    #[arg(long)]
    b: Option<u32>,
}

#[derive(Args, Clone, Copy)]
struct Common {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    weight: WeightArgs,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Largest rank at which the Hecke-algebra oracle may run.
    #[arg(long, default_value_t = DEFAULT_ORACLE_RANK)]
    oracle_rank: usize,
}

impl Common {
    fn config(&self) -> Result<RunConfig, Error> {
        let weight = WeightFunction::new(self.weight.a, self.weight.b.unwrap_or(self.n as u32))?;
        Ok(RunConfig { n: self.n, weight, format: self.format, oracle_rank: self.oracle_rank })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Class counts at the intermediate and asymptotic weights, with orbit counts.
    Table {
        #[arg(long, default_value_t = 2)]
        from: usize,
        #[arg(long, default_value_t = 7)]
        to: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_ORACLE_RANK)]
        oracle_rank: usize,
    },
    /// Check Vogan classes against the oracle and the explicit Area_n description.
    Verify(Common),
    /// Print a partition of W_n computed by the chosen method.
    Cells {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Method::Vogan)]
        method: Method,
    },
    /// Right orbits of the two cellular maps.
    Orbits(Common),
    /// Everything known about one element, given as a window such as -2,1,3.
    Element {
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[command(flatten)]
        weight: WeightArgs,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// The asymptotic cells and Υ-classes that make up Area_n.
    Area {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// A shortest Knuth-move path from w to w·s_{n-1}.
    Bridge {
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
}

fn run(command: Command) -> Result<(String, bool), Error> {
    Ok(match command {
        Command::Table { from, to, format, oracle_rank } => {
            let rows = report::table(from..=to, oracle_rank)?;
            let ok = rows.iter().all(report::TableRow::passed);
            (report::render_table(&rows, format), ok)
        }
        Command::Verify(common) => {
            let r = report::verify(&common.config()?)?;
            (report::render_verify(&r, common.format), r.passed())
        }
        Command::Cells { common, method } => {
            let config = common.config()?;
            let p = report::cells(&config, method)?;
            let name = format!("{method:?}").to_lowercase();
            (report::render_partition(&config, &name, &p)?, true)
        }
        Command::Orbits(common) => {
            let config = common.config()?;
            let (summary, p) = report::orbit_summary(&config)?;
            let text = match config.format {
                Format::Json => serde_json::to_string_pretty(&summary).expect("serialisable") + "\n",
                Format::Tsv => report::render_partition(&config, "orbits", &p)?,
            };
            (text, true)
        }
        Command::Element { w, weight, format } => {
            let w: SignedPerm = w.parse()?;
            let weight = WeightFunction::new(weight.a, weight.b.unwrap_or(w.rank() as u32))?;
            (report::render_element(&report::element(&w, weight)?, format), true)
        }
        Command::Area { n, format } => (report::area_report(n, format)?, true),
        Command::Bridge { w } => {
            let w: SignedPerm = w.parse()?;
            (format_moves(&knuth_bridge(&w)?) + "\n", true)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads.or_else(|| std::env::var("BCELLS_THREADS").ok()?.parse().ok());
    if let Some(t) = threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("bcells: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e @ Error::InvariantViolation(_)) => {
            eprintln!("bcells: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("bcells: {e}");
            ExitCode::from(2)
        }
    }
}

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gyrogroup::analyze::holomorph::matching_candidates;
use gyrogroup::analyze::{
    enumerate_subgyrogroups, gyroautomorphism_group, gyroholomorph, isomorphic,
};
use gyrogroup::construct::{build_g2_with_cap, CyclicParams, DEFAULT_MAX_N};
use gyrogroup::io::{emit_lattice_dot, emit_tables, load_tables, ReportDocument, TableFormat};
use gyrogroup::{verify, Error, FiniteGyrogroup};

/// Subgyrogroup counting is skipped above this order.
const LATTICE_LIMIT: usize = 256;

#[derive(Parser)]
#[command(
    name = "gyrogroup",
    version,
    about = "Build, verify and analyze the gyrogroups G2(n) of order 2^n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Size {
    /// Build G2(n), of order 2^n (n >= 3)
    #[arg(long = "n", value_name = "K")]
    n: u32,
    /// Largest n accepted
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: u32,
}

impl Size {
    fn params(&self) -> Result<CyclicParams, Error> {
        CyclicParams::with_cap(self.n, self.max_n)
    }

    fn build(&self) -> Result<FiniteGyrogroup, Error> {
        build_g2_with_cap(self.n, self.max_n)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the Cayley and gyration tables
    Build {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every axiom; exit status 1 if any fails
    Verify {
        #[command(flatten)]
        size: Size,
        /// Write the JSON report here
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Subgyrogroup lattice
    Lattice {
        #[command(flatten)]
        size: Size,
        /// Emit Graphviz DOT instead of a listing
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Gyroholomorph: order, invariants and matching Z2 x (Z_m x| Z2)
    Holomorph {
        #[command(flatten)]
        size: Size,
    },
    /// Search for an isomorphism between two csv table files
    Iso {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Load a csv table file and verify it
    Check {
        file: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

enum Failure {
    /// Bad arguments or unreadable input: exit status 2.
    Usage(Error),
    /// Exit status 1.
    Failed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn write_or_print(out: Option<&Path>, contents: &str) -> Result<(), Error> {
    match out {
        Some(path) => Ok(fs::write(path, contents)?),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn load(path: &Path) -> Result<FiniteGyrogroup, Error> {
    let text = fs::read_to_string(path)?;
    load_tables(&text)
}

fn report_for(g: &FiniteGyrogroup, params: Option<CyclicParams>) -> ReportDocument {
    let report = verify(g);
    let count = (g.order() <= LATTICE_LIMIT && report.is_gyrogroup())
        .then(|| enumerate_subgyrogroups(g).len());
    ReportDocument::new(params, &report, count, gyroautomorphism_group(g).order())
}

fn finish_report(doc: &ReportDocument, path: Option<&Path>) -> Result<(), Failure> {
    print!("{}", doc.summary());
    if let Some(path) = path {
        fs::write(path, doc.to_json()).map_err(Error::from)?;
    }
    if doc.all_pass() {
        Ok(())
    } else {
        Err(Failure::Failed)
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Build { size, format, out } => {
            let g = size.build()?;
            write_or_print(out.as_deref(), &emit_tables(&g, format))?;
        }
        Command::Verify { size, report } => {
            let params = size.params()?;
            let g = size.build()?;
            finish_report(&report_for(&g, Some(params)), report.as_deref())?;
        }
        Command::Lattice { size, dot, out } => {
            let g = size.build()?;
            let mut lattice = enumerate_subgyrogroups(&g);
            lattice.annotate_closed_forms(size.n)?;
            let text = if dot {
                emit_lattice_dot(&lattice)
            } else {
                let mut s = String::new();
                for (i, node) in lattice.nodes.iter().enumerate() {
                    let form = node.closed_form.map(|f| f.to_string()).unwrap_or_default();
                    let group = if node.is_group {
                        "group"
                    } else {
                        "not a group"
                    };
                    s.push_str(&format!(
                        "{i:>3}  {:<12} order {:<5} {:<14} {group}  {:?}\n",
                        node.label(),
                        node.order(),
                        form,
                        node.elements
                    ));
                }
                for (child, parent) in &lattice.covers {
                    s.push_str(&format!("cover {child} -> {parent}\n"));
                }
                s
            };
            write_or_print(out.as_deref(), &text)?;
        }
        Command::Holomorph { size } => {
            let params = size.params()?;
            let g = size.build()?;
            let h = match gyroholomorph(&g) {
                Ok(h) => h,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Err(Failure::Failed);
                }
            };
            let inv = h.invariants();
            println!("gyroholomorph of G2({}): order {}", params.n(), h.order());
            println!("gyroautomorphism group order: {}", h.gamma.order());
            println!("abelian: {}", inv.abelian);
            let orders: Vec<String> = inv
                .element_orders
                .iter()
                .map(|(o, c)| format!("{o}:{c}"))
                .collect();
            println!("element orders: {}", orders.join(" "));
            println!("center size: {}", inv.center_size);
            println!("derived subgroup size: {}", inv.derived_subgroup_size);
            let matches = matching_candidates(&inv, params.m());
            if matches.is_empty() {
                println!("matches: none of Z2 x (Z{} x| Z2)", params.m());
            }
            for c in matches {
                println!("matches: {}", c.describe());
            }
        }
        Command::Iso { left, right } => {
            let (g, h) = (load(&left)?, load(&right)?);
            match isomorphic(&g, &h) {
                Some(phi) => println!("isomorphic: {phi}"),
                None => println!("not isomorphic"),
            }
        }
        Command::Check { file, report } => {
            let g = load(&file)?;
            if let Some(v) = g.latin_violation() {
                eprintln!("warning: Cayley table is not a latin square: {v:?}");
            }
            finish_report(&report_for(&g, None), report.as_deref())?;
        }
    }
    Ok(())
}

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use log::info;

use kpath_core::catalog::{self, Expansion, SeriesId, SERIES_NAMES};
use kpath_core::crystal::{DominantWeight, PerfectCrystalSpec};
use kpath_core::recurrences::{b_table, c_table, Family, TableId};
use kpath_core::report::Report;
use kpath_core::series::SeriesJson;
use kpath_core::Error;

const MISMATCH: u8 = 1;
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "kpath",
    version,
    about = "Exact checks of path-model q-series identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one identity from the catalog, or `all` of them.
    Verify {
        id: String,
        /// Truncation order (series are compared modulo q^N).
        #[arg(long)]
        trunc: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Print the observed x-support of bivariate series.
        #[arg(long)]
        xdeg_report: bool,
        /// Worker threads for enumeration (default: all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Print the expansion of a named series.
    Expand {
        series: String,
        #[arg(long, default_value_t = 20)]
        trunc: usize,
        #[arg(long)]
        json: bool,
    },
    /// Print the numerator polynomials b1, b2, c1 or c2 for n = 0..=N.
    Table {
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// List catalog identities and expandable series.
    List,
    /// Describe the crystal B^{1,3} and its ground states.
    Crystal {
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify {
            id,
            trunc,
            json,
            xdeg_report,
            threads,
        } => {
            if let Some(t) = threads {
                if let Err(e) = rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build_global()
                {
                    eprintln!("error: {e}");
                    return ExitCode::from(USAGE);
                }
            }
            verify(&id, trunc, json, xdeg_report)
        }
        Command::Expand {
            series,
            trunc,
            json,
        } => expand(&series, trunc, json),
        Command::Table { family, n, json } => table(&family, n, json),
        Command::List => {
            list();
            Ok(0)
        }
        Command::Crystal { json } => crystal(json),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE)
        }
    }
}

fn print_report(r: &Report, json: bool, xdeg_report: bool) -> Result<(), Error> {
    let mut shown = r.clone();
    if !xdeg_report {
        shown.notes.retain(|n| !n.contains("x-support"));
    }
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&shown).expect("report serializes")
        );
    } else {
        print!("{shown}");
    }
    Ok(())
}

fn verify(id: &str, trunc: Option<usize>, json: bool, xdeg_report: bool) -> Result<u8, Error> {
    if id == "all" {
        let results = catalog::run_all();
        let mut code = 0;
        let mut reports = Vec::new();
        for (entry, r) in results {
            match r {
                Ok(r) => {
                    if !r.pass {
                        code = MISMATCH;
                    }
                    if !json {
                        println!("{} {}", if r.pass { "PASS" } else { "FAIL" }, entry.id);
                    }
                    reports.push(r);
                }
                Err(e) => {
                    eprintln!("error in {}: {e}", entry.id);
                    code = USAGE;
                }
            }
        }
        if json {
            println!(
                "{}",
                serde_json::to_string_pretty(&reports).expect("reports serialize")
            );
        }
        return Ok(code);
    }
    let entry = catalog::find(id)?;
    info!(
        "verifying {id} at {:?}",
        trunc.unwrap_or(entry.default_trunc)
    );
    let r = entry.run(trunc)?;
    print_report(&r, json, xdeg_report)?;
    Ok(if r.pass { 0 } else { MISMATCH })
}

fn expand(name: &str, trunc: usize, json: bool) -> Result<u8, Error> {
    let id: SeriesId = name.parse()?;
    let out = catalog::expand(id, trunc)?;
    if json {
        let doc = match &out {
            Expansion::X(s) => SeriesJson::from(s),
            Expansion::Q(s) => SeriesJson::from(s),
        };
        println!(
            "{}",
            serde_json::to_string(&doc).expect("series serializes")
        );
    } else {
        match &out {
            Expansion::X(s) => println!("{s}"),
            Expansion::Q(s) => println!("{s}"),
        }
    }
    Ok(0)
}

fn table(family: &str, n: usize, json: bool) -> Result<u8, Error> {
    let id: TableId = family.parse()?;
    let t = match id.family {
        Family::B => b_table(id.i, n),
        Family::C => c_table(id.i, n),
    };
    let rows = t.rows();
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&rows).expect("table serializes")
        );
        return Ok(0);
    }
    for (row, p) in rows.iter().zip(&t.polys) {
        println!(
            "{}_{} = {}    [value at q=1: {}]",
            id,
            row.n,
            p.factored(),
            row.value_at_1
        );
    }
    Ok(0)
}

fn list() {
    println!("identities (id, default truncation):");
    for e in catalog::entries() {
        println!("  {:<20} {:>4}  {}", e.id, e.default_trunc, e.description);
    }
    println!("series for `expand`:");
    for s in SERIES_NAMES {
        println!("  {s}");
    }
}

fn crystal(json: bool) -> Result<u8, Error> {
    let spec = PerfectCrystalSpec::b13();
    spec.validate()?;
    let grounds = [DominantWeight::THREE_L0, DominantWeight::TWO_L0_L1]
        .into_iter()
        .map(|lam| spec.ground_state(lam).map(|g| (lam, g)))
        .collect::<Result<Vec<_>, _>>()?;
    let doc = spec.to_json();
    if json {
        let mut v = serde_json::to_value(&doc).expect("crystal serializes");
        v["ground_states"] = grounds
            .iter()
            .map(|(lam, g)| (lam.to_string(), serde_json::json!(g.elements)))
            .collect::<serde_json::Map<_, _>>()
            .into();
        println!(
            "{}",
            serde_json::to_string_pretty(&v).expect("crystal serializes")
        );
        return Ok(0);
    }
    println!(
        "{} (level {}, elements {})",
        doc.name,
        doc.level,
        doc.elements.join(" ")
    );
    for a in &doc.arrows {
        println!("  {} --f{}--> {}", a.from, a.color, a.to);
    }
    println!("energy H(a ⊗ b), row a, column b:");
    for row in &doc.energy {
        let cells: Vec<String> = row.iter().map(|h| format!("{h:>3}")).collect();
        println!("  {}", cells.join(""));
    }
    for (lam, g) in &grounds {
        let els: Vec<String> = g
            .elements
            .iter()
            .map(|&k| doc.elements[k].clone())
            .collect();
        println!(
            "ground state of {lam}: period {}, ({})",
            g.period(),
            els.join(", ")
        );
    }
    Ok(0)
}

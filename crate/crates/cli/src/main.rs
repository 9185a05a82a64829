//! Command line driver for the certification engine.
//!
//! Exit codes: 0 on success, 2 on usage errors (unknown labels, malformed
//! places, bad flags), 3 when a computation is refused because the group is
//! over budget and --force-large was not given.

mod cache;
mod report;

use clap::{Parser, Subcommand};
use splitcert_core::{
    bound_check, centralizers_of_elem_ab_2, character_table, construct_quaternion, coxeter_group,
    one_in_each_row, parity_matrix, quaternion_invariants, run_suite, CoxeterType, Error, Place,
    SuiteReport,
};

const DEFAULT_BUDGET: u128 = 10_000_000;
const FORCED_BUDGET: u128 = 1_000_000_000;

#[derive(Parser)]
#[command(
    name = "splitcert",
    version,
    about = "Split group certification engine"
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate centralizers of elementary abelian 2-subgroups and certify
    /// each one's irreducible characters over the rationals
    Certify {
        /// Reflection group label (A4, B3, D5, G2, F4, E6, E7, E8, H3, H4, I2(7))
        #[arg(long = "type")]
        label: String,
        /// Run even when the group is over the default element budget
        #[arg(long)]
        force_large: bool,
    },
    /// List the centralizer classes without certifying them
    Enum {
        #[arg(long = "type")]
        label: String,
    },
    /// Restriction parities of symmetric group characters to a Sylow
    /// 2-subgroup
    Symcheck {
        #[arg(long)]
        n: u32,
        /// Include the full 0/1 matrix in the output
        #[arg(long)]
        matrix: bool,
    },
    /// Binary partition counts with rigorous bound verdicts
    Count {
        #[arg(long)]
        max_n: u32,
    },
    /// Construct a quaternion algebra ramified exactly at the given places
    Quaternion {
        /// Comma separated places, e.g. "2,inf,3,5"
        #[arg(long)]
        places: String,
    },
    /// Print (and cache) the character table of a reflection group
    Table {
        #[arg(long = "type")]
        label: String,
    },
}

fn main() {
    // Dying quietly on a closed pipe beats a panic when output goes to head/jq.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            let code = match &e {
                Error::InvalidType(_) | Error::InvalidPlaces(_) | Error::Precondition(_) => 2,
                Error::BudgetExceeded { .. } => 3,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}

fn parse_label(label: &str) -> Result<CoxeterType, Error> {
    label.parse::<CoxeterType>()
}

fn run(cli: &Cli) -> Result<(), Error> {
    match &cli.command {
        Cmd::Certify { label, force_large } => certify(cli, label, *force_large),
        Cmd::Enum { label } => enumerate(cli, label),
        Cmd::Symcheck { n, matrix } => symcheck(cli, *n, *matrix),
        Cmd::Count { max_n } => count(cli, *max_n),
        Cmd::Quaternion { places } => quaternion(cli, places),
        Cmd::Table { label } => table(cli, label),
    }
}

fn budget_for(t: &CoxeterType, force_large: bool) -> Result<u128, Error> {
    if t.is_large() && !force_large {
        return Err(Error::BudgetExceeded {
            order: t.group_order(),
            limit: DEFAULT_BUDGET,
        });
    }
    Ok(if force_large {
        FORCED_BUDGET
    } else {
        DEFAULT_BUDGET
    })
}

fn certify(cli: &Cli, label: &str, force_large: bool) -> Result<(), Error> {
    let t = parse_label(label)?;
    let budget = budget_for(&t, force_large).map_err(|e| {
        eprintln!(
            "{label} has order {}; rerun with --force-large to attempt it anyway",
            t.group_order()
        );
        e
    })?;
    let suite = run_suite(&t, budget)?;
    if cli.json {
        print_json(&report::SuiteDoc::from(&suite));
    } else {
        print_suite_text(&suite);
    }
    Ok(())
}

fn print_suite_text(suite: &SuiteReport) {
    println!(
        "suite {}: |W| = {}, {} centralizer classes, fully certified: {}",
        suite.label,
        suite.ambient_order,
        suite.members.len(),
        suite.fully_certified()
    );
    for member in &suite.members {
        match &member.outcome {
            Ok(r) => {
                let certified = r.certificates.iter().filter(|c| c.is_certified()).count();
                println!(
                    "  {}: order {}, {} classes, rational {}, sylow ok {}, \
                     certified {}/{}{}",
                    r.label,
                    r.order,
                    r.n_classes,
                    r.b1,
                    r.b2,
                    certified,
                    r.n_classes,
                    if r.fully_certified() {
                        ""
                    } else {
                        "  [incomplete]"
                    }
                );
            }
            Err(e) => println!("  order {}: failed: {e}", member.order),
        }
    }
}

fn enumerate(cli: &Cli, label: &str) -> Result<(), Error> {
    let t = parse_label(label)?;
    if t.is_large() {
        return Err(Error::BudgetExceeded {
            order: t.group_order(),
            limit: DEFAULT_BUDGET,
        });
    }
    let w = coxeter_group(&t)?;
    let set = centralizers_of_elem_ab_2(&w, DEFAULT_BUDGET)?;
    if cli.json {
        print_json(&report::EnumDoc::new(label, &set));
    } else {
        let orders: Vec<String> = set.members.iter().map(|m| m.order().to_string()).collect();
        println!(
            "{label}: |W| = {}, {} centralizer classes, orders [{}]",
            w.order(),
            set.members.len(),
            orders.join(", ")
        );
    }
    Ok(())
}

fn symcheck(cli: &Cli, n: u32, with_matrix: bool) -> Result<(), Error> {
    if n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    let m = parity_matrix(n, DEFAULT_BUDGET)?;
    let covered = one_in_each_row(&m.matrix);
    if cli.json {
        print_json(&report::SymcheckDoc::new(&m, covered, with_matrix));
    } else {
        println!(
            "n = {n}: {} characters x {} Sylow irreducibles (Sylow order {}), \
             every row covered: {covered}",
            m.n_rows(),
            m.n_cols(),
            m.sylow_order
        );
        if with_matrix {
            for (label, row) in m.row_labels.iter().zip(&m.matrix) {
                let cells: String = row
                    .iter()
                    .map(|&x| if x == 1 { '1' } else { '.' })
                    .collect();
                println!("  {label:?} {cells}");
            }
        }
    }
    Ok(())
}

fn count(cli: &Cli, max_n: u32) -> Result<(), Error> {
    if max_n == 0 {
        return Err(Error::Precondition("--max-n must be at least 1".into()));
    }
    let rows: Vec<_> = (1..=max_n).map(bound_check).collect();
    if cli.json {
        let doc = report::CountDoc {
            schema_version: report::SCHEMA_VERSION,
            rows: rows.iter().map(report::CountRowDoc::from).collect(),
        };
        print_json(&doc);
    } else {
        println!(
            "{:>5} {:>12} {:>14} {:>14}  verdicts",
            "n", "c(n)", "(log n)^2", "e-bound"
        );
        for b in &rows {
            println!(
                "{:>5} {:>12} {:>14.3} {:>14.3}  log-bound {}  crossover {}",
                b.n,
                b.c_exact,
                b.log_c_upper.approx(),
                b.log_e_lower.approx(),
                if b.log_bound_holds { "ok" } else { "VIOLATED" },
                if b.crossover_holds { "yes" } else { "no" },
            );
        }
    }
    Ok(())
}

fn quaternion(cli: &Cli, places: &str) -> Result<(), Error> {
    let parsed: Result<Vec<Place>, Error> =
        places.split(',').map(|tok| tok.parse::<Place>()).collect();
    let s = parsed?;
    let pair = construct_quaternion(&s)?;
    let invariants = quaternion_invariants(&pair)?;
    if cli.json {
        print_json(&report::QuaternionDoc::new(&pair, &invariants));
    } else {
        let where_: Vec<String> = invariants.iter().map(|i| i.place.to_string()).collect();
        println!("{pair} ramified at {{{}}}", where_.join(", "));
    }
    Ok(())
}

fn table(cli: &Cli, label: &str) -> Result<(), Error> {
    let t = parse_label(label)?;
    if t.is_large() {
        return Err(Error::BudgetExceeded {
            order: t.group_order(),
            limit: DEFAULT_BUDGET,
        });
    }
    let w = coxeter_group(&t)?;
    let dir = cache::cache_dir();
    let key = cache::table_key(label, &w);
    let (tbl, from_cache) = match cache::load(&dir, &key) {
        Some(tbl) => (tbl, true),
        None => {
            let tbl = character_table(&w, DEFAULT_BUDGET)?;
            if let Err(e) = cache::store(&dir, &key, &tbl) {
                eprintln!("cache write failed: {e}");
            }
            (tbl, false)
        }
    };
    if cli.json {
        print_json(&report::TableDoc::new(label, &tbl, from_cache));
    } else {
        println!(
            "{label}: order {}, {} classes{}",
            tbl.order,
            tbl.n_classes(),
            if from_cache { " (cached)" } else { "" }
        );
        let sizes: Vec<String> = tbl.class_sizes.iter().map(u64::to_string).collect();
        let orders: Vec<String> = tbl.element_orders.iter().map(u64::to_string).collect();
        println!("  class sizes    [{}]", sizes.join(", "));
        println!("  element orders [{}]", orders.join(", "));
        for row in &tbl.values {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            println!("  [{}]", cells.join(", "));
        }
    }
    Ok(())
}

fn print_json<T: serde::Serialize>(doc: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(doc).expect("report serialization")
    );
}

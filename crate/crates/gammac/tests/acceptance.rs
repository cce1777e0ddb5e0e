//! Reproduction battery. Prints one line per criterion and exits non-zero if
//! any criterion misses its target or its time limit.
//!
//! Set `GAMMAC_LONG=1` to include the long-running items.

use gammac::battery;

fn main() {
    let mut list = battery::criteria();
    if std::env::var_os("GAMMAC_LONG").is_some() {
        list.extend(battery::long_criteria());
    }
    let results = battery::run(&list, |r| println!("{}", r.line()));
    let failed: Vec<_> = results.iter().filter(|r| !r.passed()).map(|r| r.id).collect();
    println!("acceptance: {} passed, {} failed", results.len() - failed.len(), failed.len());
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}

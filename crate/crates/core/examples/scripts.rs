//! Parses, checks and runs the example scripts, and shows a diagnostic.
//!
//! Run with `cargo run --example scripts`.

use euclid_elements::dsl;

const SCRIPTS: &[(&str, &str)] = &[
    ("i1.euc", include_str!("i1.euc")),
    ("i1_checked.euc", include_str!("i1_checked.euc")),
    ("i44.euc", include_str!("i44.euc")),
];

fn main() {
    for (name, src) in SCRIPTS {
        println!("== {name}");
        match dsl::run(src) {
            Ok(outcome) => print!("{}", outcome.report()),
            Err(diags) => diags.iter().for_each(|d| println!("{name}:{d}")),
        }
    }

    // a mistake is reported with its place and is not run
    let broken = "segment AB = [(0, 0), (1, 0)]\npoint C = intersect(AB, K) first\n";
    println!("== broken");
    for d in dsl::run(broken).unwrap_err() {
        println!("broken:{d}");
    }
}

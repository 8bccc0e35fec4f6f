//! Exact diagonal metric weights certifying the trace-zero condition.

use orbit_concavity::classifier::{diagonal_certificate, Context};
use orbit_concavity::satake::catalog;
use orbit_concavity::scalar::format_rational;
use std::collections::BTreeSet;

fn main() {
    let cat = catalog(4);
    let diag = cat.iter().find(|d| d.name == "su(1,3)").unwrap();
    let mut ctx = Context::new();
    let phi: BTreeSet<usize> = [1].into_iter().collect(); // crosses {alpha2}
    let spec = ctx.spec(diag, &phi).unwrap();
    let rs = ctx.real_structure(diag).unwrap();
    match diagonal_certificate(&spec, &rs).unwrap() {
        Some(weights) => {
            println!("diagonal certificate for su(1,3), phi = {{alpha2}}:");
            for (root, w) in weights {
                println!("  w[{root:?}] = {}", format_rational(&w));
            }
        }
        None => println!("no diagonal certificate found"),
    }
}

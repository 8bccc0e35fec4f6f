//! Derived root sets of a cross-marked diagram: nilradical, conjugate
//! nilradical, characteristic roots and the holomorphic index set.

use orbit_concavity::classifier::Context;
use orbit_concavity::satake::catalog;
use std::collections::BTreeSet;

fn main() {
    let cat = catalog(4);
    let diag = cat.iter().find(|d| d.name == "su(1,3)").unwrap();
    let mut ctx = Context::new();
    for phi_nodes in [vec![2usize], vec![1], vec![]] {
        let phi: BTreeSet<usize> = phi_nodes.iter().map(|&i| i - 1).collect();
        let spec = ctx.spec(diag, &phi).unwrap();
        println!(
            "{}",
            serde_json::to_string_pretty(&spec.to_json()).unwrap()
        );
    }
}

//! Classify minimal orbits for essential pseudoconcavity.

use orbit_concavity::classifier::Context;
use orbit_concavity::satake::catalog;
use std::collections::BTreeSet;

fn main() {
    let cat = catalog(6);
    let mut ctx = Context::new();
    for (name, phi_nodes) in [
        ("su(1,3)", vec![2usize]),
        ("su(1,3)", vec![1]),
        ("su(2,3)", vec![2]),
        ("sp(1,2)", vec![1]),
        ("fII", vec![1]),
        ("fII", vec![3]),
        ("eIII", vec![3]),
        ("eIII", vec![4]),
        ("su*(4)", vec![1, 2]),
        ("complex-a2", vec![1]),
        ("compact-g2", vec![1, 2]),
        ("sl(3,R)", vec![1]),
    ] {
        let diag = cat.iter().find(|d| d.name == name).unwrap();
        let phi: BTreeSet<usize> = phi_nodes.iter().map(|&i| i - 1).collect();
        let v = ctx.classify(diag, &phi).unwrap();
        let witness = v
            .witness
            .as_ref()
            .map(|w| format!("  [witness gamma {:?}: {} {}]", w.gamma, w.class, w.signature))
            .unwrap_or_default();
        println!(
            "{name:<12} phi={phi_nodes:?}: {} via {} (fundamental: {}){witness}",
            v.decision, v.route, v.fundamental
        );
    }
}

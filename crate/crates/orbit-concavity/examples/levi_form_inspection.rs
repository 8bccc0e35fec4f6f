//! Assemble Levi form matrices exactly and compute their signatures.

use orbit_concavity::classifier::Context;
use orbit_concavity::leviform::{hermitian_form, hermitian_signature, levi_matrix};
use orbit_concavity::satake::catalog;
use orbit_concavity::scalar::format_scalar;
use std::collections::BTreeSet;

fn main() {
    let cat = catalog(6);
    let mut ctx = Context::new();
    for (name, phi_nodes) in [
        ("su(1,3)", vec![2usize]),
        ("su(1,3)", vec![1]),
        ("fII", vec![3]),
    ] {
        let diag = cat.iter().find(|d| d.name == name).unwrap();
        let phi: BTreeSet<usize> = phi_nodes.iter().map(|&i| i - 1).collect();
        let spec = ctx.spec(diag, &phi).unwrap();
        let rs = ctx.real_structure(diag).unwrap();
        for &gamma in &spec.real_characteristic {
            let lm = levi_matrix(&spec, &rs, gamma).unwrap();
            let h = hermitian_form(&lm).unwrap();
            let sig = hermitian_signature(&h).unwrap();
            println!(
                "{name} phi={phi_nodes:?} gamma={:?}: signature {sig}, class {}",
                spec.system.coeffs(gamma),
                sig.class()
            );
            for i in 0..h.matrix.size() {
                let row: Vec<String> = (0..h.matrix.size())
                    .map(|j| format_scalar(h.matrix.get(i, j)))
                    .collect();
                println!("    [{}]", row.join(", "));
            }
        }
    }
}

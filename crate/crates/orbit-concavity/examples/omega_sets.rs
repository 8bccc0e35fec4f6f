//! Omega sets: the positive real roots expressible as alpha + conj(alpha).
//!
//! These drive the real-root criterion: a characteristic root can only
//! carry a nonzero-diagonal Levi form if it lies in Omega.

use orbit_concavity::satake::{catalog, conjugation, omega_set};

fn main() {
    let cat = catalog(8);
    for name in [
        "su(1,3)",
        "su(2,2)",
        "su(1,4)",
        "su(2,3)",
        "sp(1,2)",
        "sp(1,3)",
        "so*(10)",
        "eIII",
        "fII",
    ] {
        let diag = cat.iter().find(|d| d.name == name).unwrap();
        let sys = diag.build_system().unwrap();
        let conj = conjugation(diag, &sys).unwrap();
        let omega: Vec<Vec<i64>> = omega_set(&conj)
            .into_iter()
            .map(|id| sys.coeffs(id).to_vec())
            .collect();
        println!("{name}: Omega = {omega:?}");
    }
}

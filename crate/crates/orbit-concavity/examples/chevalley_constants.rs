//! Integer Chevalley structure constants with the extraspecial-pair sign
//! convention, plus the exact Killing form by adjoint traces.

use orbit_concavity::chevalley::{build_constants, check_constant_properties, AlgebraElement};
use orbit_concavity::rootsys::{build_root_system, TypeLetter};

fn main() {
    let sys = build_root_system(TypeLetter::G, 2).unwrap();
    let sc = build_constants(&sys);
    println!("G2 structure constants N(a, b) on positive pairs:");
    for a in sys.positive_ids() {
        for b in sys.positive_ids() {
            if sys.sum(a, b).is_some() {
                println!(
                    "  N({:?}, {:?}) = {}",
                    sys.coeffs(a),
                    sys.coeffs(b),
                    sc.n(a, b)
                );
            }
        }
    }
    check_constant_properties(&sc).unwrap();
    println!("G2: antisymmetry, |N| = q+1, product identity and Jacobi all hold");

    let a1 = build_root_system(TypeLetter::A, 1).unwrap();
    let sc1 = build_constants(&a1);
    let x = AlgebraElement::root_vector(1, a1.simple(0));
    let y = AlgebraElement::root_vector(1, a1.neg(a1.simple(0)));
    let h = AlgebraElement::cartan_coroot(1, 0);
    println!(
        "A1 Killing values: kappa(X, X-) = {:?}, kappa(H, H) = {:?}",
        sc1.killing(&x, &y).re,
        sc1.killing(&h, &h).re
    );
}

//! Build irreducible root systems exactly and read off their invariants.

use orbit_concavity::rootsys::{build_root_system, TypeLetter};

fn main() {
    for (letter, rank) in [
        (TypeLetter::A, 2),
        (TypeLetter::B, 3),
        (TypeLetter::C, 3),
        (TypeLetter::D, 4),
        (TypeLetter::G, 2),
        (TypeLetter::F, 4),
        (TypeLetter::E, 6),
        (TypeLetter::E, 8),
    ] {
        let sys = build_root_system(letter, rank).unwrap();
        let high = sys.highest_root();
        println!(
            "{:?}{rank}: {} roots, highest root {:?}",
            letter,
            sys.n_roots(),
            sys.coeffs(high)
        );
    }

    // Root strings and reflections, all over the Cartan matrix.
    let b2 = build_root_system(TypeLetter::B, 2).unwrap();
    let a1 = b2.simple(0);
    let a2 = b2.simple(1);
    let (p, q) = b2.root_string(a2, a1).unwrap();
    println!("B2: alpha2-string through alpha1 has (p, q) = ({p}, {q})");
    println!("B2: s_alpha2(alpha1) = {:?}", b2.reflect(a2, &[1, 0]));

    // Longest-element action of a Weyl subgroup.
    let a3 = build_root_system(TypeLetter::A, 3).unwrap();
    let s = [1usize].into_iter().collect();
    let w = a3.longest_element_action(&s);
    println!("A3, S = {{alpha2}}: w_S(alpha3) = {:?}", w.apply(&[0, 0, 1]));
}

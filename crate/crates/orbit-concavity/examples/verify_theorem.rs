//! Cross-validate the algorithmic decision against the closed-form
//! classification over every catalog form and cross set up to rank 4.

use orbit_concavity::classifier::enumerate_and_crosscheck;

fn main() {
    let report = enumerate_and_crosscheck(4).unwrap();
    print!("{}", report.to_text());
    assert_eq!(report.disagreements, 0);
}

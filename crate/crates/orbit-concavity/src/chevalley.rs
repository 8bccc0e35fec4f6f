//! Integer Chevalley structure constants, brackets and the exact Killing form.
//!
//! The basis convention is the one in which [X_a, X_{-a}] = -H_a and the map
//! X_a -> X_{-a}, H -> -H is an automorphism; consequently N_{-a,-b} equals
//! N_{a,b}. Signs are fixed on extraspecial pairs (the special pair with
//! minimal first member among all special pairs summing to a given positive
//! root) as N = +(q+1), and every other constant is propagated through the
//! antisymmetry, negation and cyclic identities together with one Jacobi
//! relation against the extraspecial pair. |N_{a,b}| = q+1 and
//! N_{a,b} N_{-a,a+b} = -p(q+1) then hold throughout, with (p, q) read from
//! the a-string through b.

use crate::rootsys::{RootId, RootSystem};
use crate::scalar::{rat, real, Scalar};
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

#[derive(Debug)]
pub struct StructureConstants {
    system: Arc<RootSystem>,
    /// Dense table: n[i * n_roots + j] = N_{roots[i], roots[j]} when the sum
    /// is a root, 0 otherwise.
    n: Vec<i64>,
    /// kappa(X_a, X_{-a}) per root.
    kappa_pair: Vec<i64>,
    /// kappa(H_i, H_j) on the simple coroots.
    kappa_cartan: Vec<Vec<i64>>,
    pub sign_convention: &'static str,
}

pub fn build_constants(system: &Arc<RootSystem>) -> StructureConstants {
    let nr = system.n_roots();
    let mut builder = Builder {
        system,
        special: HashMap::new(),
    };
    let mut n = vec![0i64; nr * nr];
    for i in system.root_ids() {
        for j in system.root_ids() {
            if j == system.neg(i) {
                continue;
            }
            if system.sum(i, j).is_some() {
                n[i.0 * nr + j.0] = builder.lookup(i, j);
            }
        }
    }
    // Killing values by adjoint traces.
    let mut kappa_pair = vec![0i64; nr];
    for a in system.root_ids() {
        let mut acc = -4i64;
        let na = system.neg(a);
        for b in system.root_ids() {
            if b == a || b == na {
                continue;
            }
            if let Some(bma) = system.sum(b, na) {
                acc += n[na.0 * nr + b.0] * n[a.0 * nr + bma.0];
            }
        }
        kappa_pair[a.0] = acc;
    }
    let rank = system.rank();
    let mut kappa_cartan = vec![vec![0i64; rank]; rank];
    for i in 0..rank {
        for j in 0..rank {
            let hi = system.simple(i);
            let hj = system.simple(j);
            kappa_cartan[i][j] = system
                .root_ids()
                .map(|b| system.pairing(b, hi) * system.pairing(b, hj))
                .sum();
        }
    }
    StructureConstants {
        system: Arc::clone(system),
        n,
        kappa_pair,
        kappa_cartan,
        sign_convention: "extraspecial-positive",
    }
}

struct Builder<'a> {
    system: &'a Arc<RootSystem>,
    special: HashMap<(usize, usize), i64>,
}

impl<'a> Builder<'a> {
    /// N for an arbitrary pair whose sum is a root.
    fn lookup(&mut self, i: RootId, j: RootId) -> i64 {
        let sys = self.system;
        debug_assert!(sys.sum(i, j).is_some());
        let pos_i = sys.is_positive(i);
        let pos_j = sys.is_positive(j);
        if pos_i && pos_j {
            if i.0 < j.0 {
                self.special(i, j)
            } else {
                -self.special(j, i)
            }
        } else if !pos_i && !pos_j {
            self.lookup(sys.neg(i), sys.neg(j))
        } else if !pos_i {
            -self.lookup(j, i)
        } else {
            // i positive, j negative; rotate through the triple (i, j, z)
            // with i + j + z = 0 using the cyclic identity.
            let s = sys.sum(i, j).expect("sum is a root");
            if sys.is_positive(s) {
                // z = -s negative; N_{i,j} = (z,z)/(i,i) * N_{j,z}, and
                // (j, z) is a pair of negatives.
                let reduced = self.lookup(sys.neg(j), s);
                exact_scale(sys.len2(s) * reduced, sys.len2(i))
            } else {
                // z = -s positive; N_{i,j} = (z,z)/(j,j) * N_{z,i}.
                let z = sys.neg(s);
                let reduced = self.lookup(z, i);
                exact_scale(sys.len2(z) * reduced, sys.len2(j))
            }
        }
    }

    /// N for a special pair: a < b in the canonical order, both positive.
    fn special(&mut self, a: RootId, b: RootId) -> i64 {
        if let Some(&v) = self.special.get(&(a.0, b.0)) {
            return v;
        }
        let sys = self.system;
        let gamma = sys.sum(a, b).expect("special pair sums to a root");
        let (a1, b1) = self.extraspecial(gamma);
        let value = if (a1, b1) == (a, b) {
            let (_, q) = sys.root_string(a, b).expect("non-degenerate");
            q + 1
        } else {
            // Jacobi against the extraspecial pair:
            // N_{a1,b1} N_{-a,gamma} =
            //   N_{-a,a1} N_{a1-a,b1} + N_{-a,b1} N_{a1,b1-a}.
            let na = sys.neg(a);
            let mut rhs = 0i64;
            if let Some(a1ma) = sys.sum(a1, na) {
                rhs += self.lookup(na, a1) * self.lookup(a1ma, b1);
            }
            if let Some(b1ma) = sys.sum(b1, na) {
                rhs += self.lookup(na, b1) * self.lookup(a1, b1ma);
            }
            let n_extra = self.special(a1, b1);
            let n_na_gamma = exact_scale(rhs, n_extra);
            // N_{a,b} = -(gamma,gamma)/(b,b) * N_{-a,gamma}.
            exact_scale(-sys.len2(gamma) * n_na_gamma, sys.len2(b))
        };
        self.special.insert((a.0, b.0), value);
        value
    }

    /// The special pair with minimal first member summing to gamma.
    fn extraspecial(&self, gamma: RootId) -> (RootId, RootId) {
        let sys = self.system;
        for a in sys.positive_ids() {
            if let Some(b) = sys.root_id(
                &sys.coeffs(gamma)
                    .iter()
                    .zip(sys.coeffs(a))
                    .map(|(g, x)| g - x)
                    .collect::<Vec<_>>(),
            ) {
                if sys.is_positive(b) && a.0 < b.0 {
                    return (a, b);
                }
            }
        }
        unreachable!("every non-simple positive root splits as a special pair")
    }
}

fn exact_scale(numerator: i64, denominator: i64) -> i64 {
    assert!(
        denominator != 0 && numerator % denominator == 0,
        "structure-constant propagation must stay integral ({numerator}/{denominator})"
    );
    numerator / denominator
}

impl StructureConstants {
    pub fn system(&self) -> &Arc<RootSystem> {
        &self.system
    }

    /// N_{a,b}; zero when a + b is not a root (including a + b = 0).
    pub fn n(&self, a: RootId, b: RootId) -> i64 {
        self.n[a.0 * self.system.n_roots() + b.0]
    }

    /// kappa(X_a, X_{-a}).
    pub fn kappa_pair(&self, a: RootId) -> i64 {
        self.kappa_pair[a.0]
    }

    /// kappa(H_{alpha_i}, H_{alpha_j}).
    pub fn kappa_cartan(&self, i: usize, j: usize) -> i64 {
        self.kappa_cartan[i][j]
    }

    pub fn bracket(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let sys = &self.system;
        let rank = sys.rank();
        let mut out = AlgebraElement::zero(rank);
        // [H, X_b]
        for (b, yb) in &y.roots {
            let mut f = Scalar::zero();
            for i in 0..rank {
                if !x.cartan[i].is_zero() {
                    f += x.cartan[i].clone() * real(rat(sys.pairing(*b, sys.simple(i))));
                }
            }
            if !f.is_zero() {
                out.add_root(*b, f * yb.clone());
            }
        }
        // [X_a, H]
        for (a, xa) in &x.roots {
            let mut f = Scalar::zero();
            for i in 0..rank {
                if !y.cartan[i].is_zero() {
                    f += y.cartan[i].clone() * real(rat(sys.pairing(*a, sys.simple(i))));
                }
            }
            if !f.is_zero() {
                out.add_root(*a, -(f * xa.clone()));
            }
        }
        // [X_a, X_b]
        for (a, xa) in &x.roots {
            for (b, yb) in &y.roots {
                let coeff = xa.clone() * yb.clone();
                if coeff.is_zero() {
                    continue;
                }
                if *b == sys.neg(*a) {
                    // [X_a, X_{-a}] = -H_a
                    let co = sys.coroot_coords(*a);
                    for i in 0..rank {
                        if co[i] != 0 {
                            out.cartan[i] =
                                out.cartan[i].clone() - coeff.clone() * real(rat(co[i]));
                        }
                    }
                } else if let Some(s) = sys.sum(*a, *b) {
                    let nv = self.n(*a, *b);
                    if nv != 0 {
                        out.add_root(s, coeff * real(rat(nv)));
                    }
                }
            }
        }
        out.prune();
        out
    }

    /// Exact Killing form, computed from the adjoint-trace values on the
    /// basis: kappa(X_a, X_b) vanishes unless a + b = 0, and the Cartan block
    /// is the pairing-sum Gram matrix.
    pub fn killing(&self, x: &AlgebraElement, y: &AlgebraElement) -> Scalar {
        let rank = self.system.rank();
        let mut acc = Scalar::zero();
        for i in 0..rank {
            if x.cartan[i].is_zero() {
                continue;
            }
            for j in 0..rank {
                if y.cartan[j].is_zero() {
                    continue;
                }
                acc += x.cartan[i].clone()
                        * y.cartan[j].clone()
                        * real(rat(self.kappa_cartan[i][j]));
            }
        }
        for (a, xa) in &x.roots {
            let na = self.system.neg(*a);
            if let Some(yb) = y.roots.get(&na) {
                acc += xa.clone() * yb.clone() * real(rat(self.kappa_pair[a.0]));
            }
        }
        acc
    }
}

/// An element of the algebra over the Chevalley basis: a Cartan part over
/// the simple coroots plus a sparse combination of root vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    pub cartan: Vec<Scalar>,
    pub roots: BTreeMap<RootId, Scalar>,
}

impl AlgebraElement {
    pub fn zero(rank: usize) -> Self {
        AlgebraElement {
            cartan: vec![Scalar::zero(); rank],
            roots: BTreeMap::new(),
        }
    }

    pub fn root_vector(rank: usize, id: RootId) -> Self {
        let mut e = AlgebraElement::zero(rank);
        e.roots.insert(id, real(rat(1)));
        e
    }

    pub fn scaled_root_vector(rank: usize, id: RootId, by: Scalar) -> Self {
        let mut e = AlgebraElement::zero(rank);
        e.roots.insert(id, by);
        e
    }

    pub fn cartan_coroot(rank: usize, i: usize) -> Self {
        let mut e = AlgebraElement::zero(rank);
        e.cartan[i] = real(rat(1));
        e
    }

    /// H_a for an arbitrary root, expanded over the simple coroots.
    pub fn coroot_of(system: &RootSystem, a: RootId) -> Self {
        let rank = system.rank();
        let mut e = AlgebraElement::zero(rank);
        for (i, &k) in system.coroot_coords(a).iter().enumerate() {
            if k != 0 {
                e.cartan[i] = real(rat(k));
            }
        }
        e
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        for i in 0..out.cartan.len() {
            out.cartan[i] = out.cartan[i].clone() + other.cartan[i].clone();
        }
        for (id, v) in &other.roots {
            out.add_root(*id, v.clone());
        }
        out.prune();
        out
    }

    pub fn scale(&self, by: &Scalar) -> AlgebraElement {
        let mut out = self.clone();
        for c in out.cartan.iter_mut() {
            *c = c.clone() * by.clone();
        }
        for v in out.roots.values_mut() {
            *v = v.clone() * by.clone();
        }
        out.prune();
        out
    }

    pub fn is_zero(&self) -> bool {
        self.cartan.iter().all(|c| c.is_zero()) && self.roots.values().all(|v| v.is_zero())
    }

    fn add_root(&mut self, id: RootId, v: Scalar) {
        let entry = self.roots.entry(id).or_insert_with(Scalar::zero);
        *entry = entry.clone() + v;
    }

    fn prune(&mut self) {
        self.roots.retain(|_, v| !v.is_zero());
    }
}

/// Check the Jacobi identity on a triple of root vectors, exactly.
pub fn jacobi_holds(sc: &StructureConstants, a: RootId, b: RootId, c: RootId) -> bool {
    let rank = sc.system().rank();
    let xa = AlgebraElement::root_vector(rank, a);
    let xb = AlgebraElement::root_vector(rank, b);
    let xc = AlgebraElement::root_vector(rank, c);
    let t1 = sc.bracket(&sc.bracket(&xa, &xb), &xc);
    let t2 = sc.bracket(&sc.bracket(&xb, &xc), &xa);
    let t3 = sc.bracket(&sc.bracket(&xc, &xa), &xb);
    t1.add(&t2).add(&t3).is_zero()
}

/// Exhaustive structure-constant property suite for one system; returns a
/// description of the first violation found, if any. Checks antisymmetry,
/// |N| = q+1, the product identity N_{a,b} N_{-a,a+b} = -p(q+1), the
/// negation symmetry, and Jacobi on every triple whose pairwise sums all lie
/// in the root set or are zero.
pub fn check_constant_properties(sc: &StructureConstants) -> Result<(), String> {
    let sys = sc.system();
    for a in sys.root_ids() {
        for b in sys.root_ids() {
            if b == sys.neg(a) || sys.sum(a, b).is_none() {
                continue;
            }
            let nab = sc.n(a, b);
            if nab != -sc.n(b, a) {
                return Err(format!("antisymmetry fails at ({a:?},{b:?})"));
            }
            if nab != sc.n(sys.neg(a), sys.neg(b)) {
                return Err(format!("negation symmetry fails at ({a:?},{b:?})"));
            }
            let (p, q) = sys.root_string(a, b).map_err(|e| e.to_string())?;
            if nab.abs() != q + 1 {
                return Err(format!(
                    "|N| = q+1 fails at ({a:?},{b:?}): N = {nab}, q = {q}"
                ));
            }
            let apb = sys.sum(a, b).unwrap();
            let prod = nab * sc.n(sys.neg(a), apb);
            if prod != -p * (q + 1) {
                return Err(format!(
                    "product identity fails at ({a:?},{b:?}): {prod} vs {}",
                    -p * (q + 1)
                ));
            }
        }
    }
    // Jacobi on admissible triples, at the structure-constant level.
    let nr = sys.n_roots();
    let rank = sys.rank();
    for a in sys.root_ids() {
        for b in (a.0..nr).map(RootId) {
            let ab_ok = b == sys.neg(a) || sys.sum(a, b).is_some();
            if !ab_ok {
                continue;
            }
            for c in (b.0..nr).map(RootId) {
                let bc_ok = c == sys.neg(b) || sys.sum(b, c).is_some();
                let ca_ok = a == sys.neg(c) || sys.sum(c, a).is_some();
                if !(bc_ok && ca_ok) {
                    continue;
                }
                if !jacobi_holds(sc, a, b, c) {
                    return Err(format!("Jacobi fails at ({a:?},{b:?},{c:?}) rank {rank}"));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, TypeLetter};
    use crate::scalar::gauss;

    #[test]
    fn a2_constants() {
        let sys = build_root_system(TypeLetter::A, 2).unwrap();
        let sc = build_constants(&sys);
        let a1 = sys.simple(0);
        let a2 = sys.simple(1);
        assert_eq!(sc.n(a1, a2).abs(), 1);
        assert_eq!(sc.n(a1, a2), -sc.n(a2, a1));
        // Pairs whose sum is not a root carry no constant.
        let a12 = sys.sum(a1, a2).unwrap();
        assert_eq!(sc.n(a1, a12), 0);
    }

    #[test]
    fn b2_doubled_constant() {
        let sys = build_root_system(TypeLetter::B, 2).unwrap();
        let sc = build_constants(&sys);
        let a1 = sys.simple(0);
        let a2 = sys.simple(1);
        let a12 = sys.sum(a1, a2).unwrap();
        assert_eq!(sc.n(a2, a12).abs(), 2);
    }

    #[test]
    fn bracket_table_rules() {
        let sys = build_root_system(TypeLetter::A, 2).unwrap();
        let sc = build_constants(&sys);
        let rank = 2;
        let a1 = sys.simple(0);
        let a2 = sys.simple(1);
        let x = AlgebraElement::root_vector(rank, a1);
        let y = AlgebraElement::root_vector(rank, sys.neg(a1));
        // [X_a, X_{-a}] = -H_a
        let h = sc.bracket(&x, &y);
        assert_eq!(h.cartan[0], gauss(-1, 0));
        assert!(h.roots.is_empty());
        // [H_{a1}, X_{a2}] = -X_{a2}
        let h1 = AlgebraElement::cartan_coroot(rank, 0);
        let x2 = AlgebraElement::root_vector(rank, a2);
        let r = sc.bracket(&h1, &x2);
        assert_eq!(r.roots.get(&a2), Some(&gauss(-1, 0)));
        // [X_{a1}, X_{a2}] = N X_{a1+a2} with N from the table.
        let r = sc.bracket(&x, &x2);
        let a12 = sys.sum(a1, a2).unwrap();
        assert_eq!(r.roots.get(&a12), Some(&gauss(sc.n(a1, a2), 0)));
    }

    #[test]
    fn killing_values_a1() {
        let sys = build_root_system(TypeLetter::A, 1).unwrap();
        let sc = build_constants(&sys);
        let a = sys.simple(0);
        // Adjoint traces on the three-dimensional algebra with the
        // [X_a, X_{-a}] = -H_a normalization.
        assert_eq!(sc.kappa_pair(a), -4);
        assert_eq!(sc.kappa_cartan(0, 0), 8);
        let x = AlgebraElement::root_vector(1, a);
        let y = AlgebraElement::root_vector(1, sys.neg(a));
        assert_eq!(sc.killing(&x, &y), gauss(-4, 0));
        let h = AlgebraElement::cartan_coroot(1, 0);
        assert_eq!(sc.killing(&h, &h), gauss(8, 0));
    }

    #[test]
    fn killing_grading() {
        let sys = build_root_system(TypeLetter::A, 2).unwrap();
        let sc = build_constants(&sys);
        let x = AlgebraElement::root_vector(2, sys.simple(0));
        let y = AlgebraElement::root_vector(2, sys.simple(1));
        assert!(sc.killing(&x, &y).is_zero());
    }

    #[test]
    fn killing_invariance_sampled() {
        let sys = build_root_system(TypeLetter::B, 2).unwrap();
        let sc = build_constants(&sys);
        let rank = 2;
        let elems: Vec<AlgebraElement> = sys
            .root_ids()
            .map(|i| AlgebraElement::root_vector(rank, i))
            .chain((0..rank).map(|i| AlgebraElement::cartan_coroot(rank, i)))
            .collect();
        for x in &elems {
            for y in &elems {
                for z in &elems {
                    let lhs = sc.killing(&sc.bracket(x, y), z);
                    let rhs = sc.killing(x, &sc.bracket(y, z));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn property_suite_small_ranks() {
        for (letter, rank) in [
            (TypeLetter::A, 2),
            (TypeLetter::B, 2),
            (TypeLetter::G, 2),
            (TypeLetter::C, 3),
        ] {
            let sys = build_root_system(letter, rank).unwrap();
            let sc = build_constants(&sys);
            check_constant_properties(&sc).unwrap_or_else(|e| panic!("{letter:?}{rank}: {e}"));
        }
    }
}

//! Antilinear conjugation constants, Levi form assembly, exact signatures.
//!
//! The conjugation sigma acts on the Chevalley basis as
//! sigma(X_a) = c_a X_{sigma* a} with fourth-root-of-unity constants c_a.
//! The constants are solved from: c = 1 on the compact roots, the involution
//! property conj(c_a) c_{conj a} = 1, multiplicativity against the structure
//! constants, c_a c_{-a} = 1 (compatibility of sigma with the Cartan
//! subalgebra), and finally the requirement that theta = sigma compose tau
//! fix a subspace of dimension dim_k — which pins the residual sign freedom
//! to the intended real form. Free signs are searched, one per arrow orbit
//! of white simple nodes; the search fails loudly rather than falling back.
//!
//! The Levi form of a characteristic root gamma is
//!     L_gamma(Z, W) = (1/i) kappa(Z_{-gamma}, [Z, sigma(W)])
//! on the span of the holomorphic index roots. For real gamma the reference
//! vector Z_{-gamma} = u X_{-gamma} is rescaled by a unit u solving
//! conj(u) c_{-gamma} = u, making the matrix Hermitian; only the form class
//! is contract, the overall positive scale is a convention.

use crate::chevalley::{AlgebraElement, StructureConstants};
use crate::cralg::{format_root, CrSpec};
use crate::error::Error;
use crate::matrix::{hermitian_signature_exact, FormClass, GMatrix, Signature};
use crate::rootsys::{RootId, RootSystem};
use crate::satake::{Conjugation, SatakeDiagram};
use crate::scalar::{gauss, rat, real, Unit};
use num_traits::Zero;
use std::sync::Arc;

#[derive(Debug)]
pub struct RealStructure {
    pub diagram: SatakeDiagram,
    pub system: Arc<RootSystem>,
    pub conj: Arc<Conjugation>,
    pub constants: Arc<StructureConstants>,
    c: Vec<Unit>,
    pub theta_fixed_dim: usize,
}

pub fn build_real_structure(
    diag: &SatakeDiagram,
    system: &Arc<RootSystem>,
    constants: &Arc<StructureConstants>,
    conj: &Arc<Conjugation>,
) -> Result<RealStructure, Error> {
    let rank = system.rank();
    let whites: Vec<usize> = (0..rank).filter(|i| !diag.black.contains(i)).collect();
    // Each white simple root carries a free unit. Arrow partners cannot be
    // tied to a shared value: the involution constraint routes through the
    // painted sublattice and can force opposite signs across an arrow
    // (so*(10) is the smallest case). Signs are searched first; the
    // imaginary units only enter if no sign assignment works.
    let domains: [&[Unit]; 2] = [
        &[Unit::One, Unit::MinusOne],
        &[Unit::One, Unit::MinusOne, Unit::I, Unit::MinusI],
    ];
    for domain in domains {
        if domain.len() == 4 && whites.len() > 8 {
            break;
        }
        let total = domain.len().pow(whites.len() as u32);
        for mask in 0..total {
            let mut simple_c = vec![Unit::One; rank];
            let mut m = mask;
            for &w in &whites {
                simple_c[w] = domain[m % domain.len()];
                m /= domain.len();
            }
            if let Some(solved) = try_assignment(diag, system, constants, conj, &simple_c) {
                return Ok(solved);
            }
        }
    }
    Err(Error::RealStructure {
        form: diag.name.clone(),
        detail: format!(
            "no unit assignment over {} white simple roots satisfies the \
             constraint system with theta-fixed dimension {}",
            whites.len(),
            diag.dim_k
        ),
    })
}

fn try_assignment(
    diag: &SatakeDiagram,
    system: &Arc<RootSystem>,
    constants: &Arc<StructureConstants>,
    conj: &Arc<Conjugation>,
    simple_c: &[Unit],
) -> Option<RealStructure> {
    let n = system.n_roots();
    let rank = system.rank();
    let mut c = vec![Unit::One; n];
    // Simple roots.
    for i in 0..rank {
        c[system.simple(i).0] = simple_c[i];
    }
    // Composite positives by height, via any simple split; other splits are
    // checked globally below.
    for id in system.positive_ids() {
        if system.is_simple(id).is_some() {
            continue;
        }
        let coeffs = system.coeffs(id).to_vec();
        let mut assigned = false;
        for i in 0..rank {
            if coeffs[i] <= 0 {
                continue;
            }
            let mut rest = coeffs.clone();
            rest[i] -= 1;
            if let Some(delta) = system.root_id(&rest) {
                let alpha = system.simple(i);
                let n_ab = constants.n(alpha, delta);
                let n_bar = constants.n(conj.conj_root(alpha), conj.conj_root(delta));
                debug_assert!(n_ab != 0 && n_ab.abs() == n_bar.abs());
                let ratio = n_bar / n_ab;
                c[id.0] = (c[alpha.0] * c[delta.0]).mul_sign(ratio);
                assigned = true;
                break;
            }
        }
        debug_assert!(assigned, "positive root with no simple split");
    }
    // Negatives: c_a c_{-a} = 1.
    for id in system.positive_ids() {
        c[system.neg(id).0] = c[id.0].inv();
    }
    // Compact roots carry c = 1.
    for id in system.root_ids() {
        if conj.is_compact_root(id) && c[id.0] != Unit::One {
            return None;
        }
    }
    // Involution: conj(c_a) c_{conj a} = 1.
    for id in system.root_ids() {
        if c[id.0].conj() * c[conj.conj_root(id).0] != Unit::One {
            return None;
        }
    }
    // Multiplicativity on every pair whose sum is a root.
    for a in system.root_ids() {
        for b in system.root_ids() {
            if b == system.neg(a) {
                continue;
            }
            if let Some(s) = system.sum(a, b) {
                let n_ab = constants.n(a, b);
                let n_bar = constants.n(conj.conj_root(a), conj.conj_root(b));
                let lhs = c[s.0].mul_sign(n_ab.signum());
                let rhs = (c[a.0] * c[b.0]).mul_sign(n_bar.signum());
                if n_ab.abs() != n_bar.abs() || lhs != rhs {
                    return None;
                }
            }
        }
    }
    // theta = sigma tau must be an involution whose fixed space has
    // dimension dim_k.
    let trace = conj.lattice_trace();
    debug_assert_eq!((rank as i64 - trace) % 2, 0);
    let mut dim = ((rank as i64 - trace) / 2) as usize;
    for id in system.root_ids() {
        let pair = system.neg(conj.conj_root(id));
        if pair == id {
            if c[system.neg(id).0] == Unit::One {
                dim += 1;
            }
        } else if id.0 < pair.0 {
            match c[system.neg(id).0] * c[system.neg(pair).0] {
                Unit::One => dim += 1,
                Unit::MinusOne => {}
                _ => return None, // theta would not square to the identity
            }
        }
    }
    if dim != diag.dim_k {
        return None;
    }
    Some(RealStructure {
        diagram: diag.clone(),
        system: Arc::clone(system),
        conj: Arc::clone(conj),
        constants: Arc::clone(constants),
        c,
        theta_fixed_dim: dim,
    })
}

impl RealStructure {
    /// The unit c_a with sigma(X_a) = c_a X_{sigma* a}.
    pub fn c(&self, id: RootId) -> Unit {
        self.c[id.0]
    }

    /// The antilinear conjugation applied to an algebra element.
    pub fn sigma(&self, x: &AlgebraElement) -> AlgebraElement {
        let rank = self.system.rank();
        let mut out = AlgebraElement::zero(rank);
        for i in 0..rank {
            if x.cartan[i].is_zero() {
                continue;
            }
            let image = self.conj.conj_root(self.system.simple(i));
            let coeff = x.cartan[i].conj();
            let sign = if self.system.is_positive(image) { 1 } else { -1 };
            let base = if sign == 1 {
                image
            } else {
                self.system.neg(image)
            };
            for (k, &co) in self.system.coroot_coords(base).iter().enumerate() {
                out.cartan[k] =
                    out.cartan[k].clone() + coeff.clone() * real(rat(sign as i64 * co));
            }
        }
        for (id, v) in &x.roots {
            let image = self.conj.conj_root(*id);
            let entry = out
                .roots
                .entry(image)
                .or_insert_with(num_traits::Zero::zero);
            *entry = entry.clone() + v.conj() * self.c[id.0].to_scalar();
        }
        out
    }
}

/// The assembled form of one characteristic root; Hermitian exactly when
/// gamma is real (after the unit rescale of the reference vector).
#[derive(Debug, Clone)]
pub struct LeviMatrix {
    pub gamma: RootId,
    pub real_gamma: bool,
    /// Unit u with Z_{-gamma} = u X_{-gamma}.
    pub unit: Unit,
    pub index: Vec<RootId>,
    pub matrix: GMatrix,
}

/// A Hermitian form over the holomorphic index set.
#[derive(Debug, Clone)]
pub struct HermitianForm {
    pub gamma: RootId,
    pub index: Vec<RootId>,
    pub matrix: GMatrix,
}

pub fn levi_matrix(
    spec: &CrSpec,
    rs: &RealStructure,
    gamma: RootId,
) -> Result<LeviMatrix, Error> {
    levi_matrix_with_unit(spec, rs, gamma, None)
}

/// As `levi_matrix`, but allowing the opposite admissible unit; used to
/// check that the verdict-relevant classification does not depend on the
/// choice.
pub fn levi_matrix_with_unit(
    spec: &CrSpec,
    rs: &RealStructure,
    gamma: RootId,
    flip_unit: Option<bool>,
) -> Result<LeviMatrix, Error> {
    if !spec.is_characteristic(gamma) {
        return Err(Error::NotCharacteristic(
            format_root(&spec.system, gamma),
            spec.characteristic
                .iter()
                .map(|&g| format_root(&spec.system, g))
                .collect::<Vec<_>>()
                .join(" "),
        ));
    }
    let sys = &spec.system;
    let real_gamma = spec.conj.is_real_root(gamma);
    let unit = if real_gamma {
        let c_neg = rs.c(sys.neg(gamma));
        let u = match c_neg {
            Unit::One => Unit::One,
            Unit::MinusOne => Unit::I,
            _ => {
                return Err(Error::Internal(format!(
                    "c_(-gamma) = {c_neg} is not real for real gamma; \
                     no fourth-root unit fixes the reference vector"
                )))
            }
        };
        if flip_unit == Some(true) {
            -u
        } else {
            u
        }
    } else {
        Unit::One
    };
    // (1/i) * u * kappa(X_{-gamma}, X_gamma)
    let kappa = rs.constants.kappa_pair(gamma);
    let factor = gauss(0, -1) * unit.to_scalar() * gauss(kappa, 0);
    let index = spec.holomorphic_index.clone();
    let k = index.len();
    let mut matrix = GMatrix::zero(k);
    for (row, &alpha) in index.iter().enumerate() {
        for (col, &beta) in index.iter().enumerate() {
            let bar = spec.conj.conj_root(beta);
            if sys.sum(alpha, bar) == Some(gamma) {
                let n = rs.constants.n(alpha, bar);
                let entry = factor.clone() * rs.c(beta).to_scalar() * gauss(n, 0);
                matrix.set(row, col, entry);
            }
        }
    }
    if real_gamma && !matrix.is_hermitian() {
        return Err(Error::Internal(format!(
            "Levi form of real root {} failed the Hermitian invariant",
            format_root(sys, gamma)
        )));
    }
    Ok(LeviMatrix {
        gamma,
        real_gamma,
        unit,
        index,
        matrix,
    })
}

/// The Hermitian form of a real characteristic root.
pub fn hermitian_form(lm: &LeviMatrix) -> Result<HermitianForm, Error> {
    if !lm.real_gamma {
        return Err(Error::GammaNotReal);
    }
    Ok(HermitianForm {
        gamma: lm.gamma,
        index: lm.index.clone(),
        matrix: lm.matrix.clone(),
    })
}

/// Hermitian and anti-Hermitian parts of the raw form of a non-real root.
pub fn hermitian_parts(lm: &LeviMatrix) -> (HermitianForm, HermitianForm) {
    let (re, im) = lm.matrix.hermitian_parts();
    (
        HermitianForm {
            gamma: lm.gamma,
            index: lm.index.clone(),
            matrix: re,
        },
        HermitianForm {
            gamma: lm.gamma,
            index: lm.index.clone(),
            matrix: im,
        },
    )
}

/// Exact signature of a Hermitian form.
pub fn hermitian_signature(h: &HermitianForm) -> Result<Signature, Error> {
    hermitian_signature_exact(&h.matrix)
}

pub fn form_class(h: &HermitianForm) -> Result<FormClass, Error> {
    Ok(hermitian_signature(h)?.class())
}

/// JSON view of a Hermitian form with exact entries.
#[derive(serde::Serialize)]
pub struct HermitianFormJson {
    pub gamma: Vec<i64>,
    pub index: Vec<Vec<i64>>,
    /// Entries as (re, im) strings of exact rationals.
    pub entries: Vec<Vec<(String, String)>>,
    pub signature: Signature,
    pub class: FormClass,
}

impl HermitianForm {
    pub fn to_json(&self, system: &RootSystem) -> Result<HermitianFormJson, Error> {
        let sig = hermitian_signature(self)?;
        let k = self.matrix.size();
        let entries = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let e = self.matrix.get(i, j);
                        (
                            crate::scalar::format_rational(&e.re),
                            crate::scalar::format_rational(&e.im),
                        )
                    })
                    .collect()
            })
            .collect();
        Ok(HermitianFormJson {
            gamma: system.coeffs(self.gamma).to_vec(),
            index: self
                .index
                .iter()
                .map(|&id| system.coeffs(id).to_vec())
                .collect(),
            entries,
            signature: sig,
            class: sig.class(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::build_constants;
    use crate::cralg::build_spec;
    use crate::satake::{catalog, conjugation};
    use crate::scalar::sign;
    use std::collections::BTreeSet;

    fn structure_for(name: &str) -> (SatakeDiagram, Arc<RootSystem>, Arc<Conjugation>, RealStructure)
    {
        let cat = catalog(6);
        let diag = cat.iter().find(|d| d.name == name).unwrap().clone();
        let sys = diag.build_system().unwrap();
        let conj = Arc::new(conjugation(&diag, &sys).unwrap());
        let constants = Arc::new(build_constants(&sys));
        let rs = build_real_structure(&diag, &sys, &constants, &conj).unwrap();
        (diag, sys, conj, rs)
    }

    fn spec_for(name: &str, phi: &[usize]) -> (CrSpec, RealStructure) {
        let (diag, sys, conj, rs) = structure_for(name);
        let phi: BTreeSet<usize> = phi.iter().map(|&i| i - 1).collect();
        let spec = build_spec(&diag, &sys, &conj, &phi).unwrap();
        (spec, rs)
    }

    #[test]
    fn compact_form_constants_are_one() {
        let (_, sys, _, rs) = structure_for("compact-a2");
        for id in sys.root_ids() {
            assert_eq!(rs.c(id), Unit::One);
        }
        assert_eq!(rs.theta_fixed_dim, 8);
    }

    #[test]
    fn split_form_constants_are_signs() {
        let (_, sys, _, rs) = structure_for("sl(3,R)");
        for id in sys.root_ids() {
            assert!(rs.c(id).is_real());
            assert_eq!(rs.c(id) * rs.c(sys.neg(id)), Unit::One);
        }
        assert_eq!(rs.theta_fixed_dim, 3);
    }

    #[test]
    fn su13_theta_dimension() {
        let (_, _, _, rs) = structure_for("su(1,3)");
        // dim of s(u(1) + u(3)) = 1 + 9 - 1.
        assert_eq!(rs.theta_fixed_dim, 9);
    }

    #[test]
    fn empty_pair_set_gives_zero_matrix() {
        // Crossing the branch node of the eIII diagram leaves the highest
        // root with no index pairs at all, so its form vanishes.
        let (spec, rs) = spec_for("eIII", &[4]);
        let gamma = spec.system.root_id(&[1, 2, 2, 3, 2, 1]).unwrap();
        assert!(spec.alpha_pairs(gamma).unwrap().is_empty());
        let lm = levi_matrix(&spec, &rs, gamma).unwrap();
        let h = hermitian_form(&lm).unwrap();
        assert!(h.matrix.is_zero());
        assert_eq!(
            hermitian_signature(&h).unwrap().class(),
            FormClass::Zero
        );
    }

    #[test]
    fn hermitian_parts_of_already_hermitian_matrix() {
        let (spec, rs) = spec_for("su(1,3)", &[2]);
        let gamma = spec.system.root_id(&[1, 1, 1]).unwrap();
        let lm = levi_matrix(&spec, &rs, gamma).unwrap();
        let (re, im) = hermitian_parts(&lm);
        assert_eq!(re.matrix, lm.matrix);
        assert!(im.matrix.is_zero());
    }

    #[test]
    fn sigma_is_involutive_homomorphism() {
        let (_, sys, _, rs) = structure_for("su(1,3)");
        let sc = &rs.constants;
        let rank = sys.rank();
        for a in sys.root_ids() {
            let x = AlgebraElement::root_vector(rank, a);
            assert_eq!(rs.sigma(&rs.sigma(&x)), x, "involution at {a:?}");
            for b in sys.root_ids() {
                let y = AlgebraElement::root_vector(rank, b);
                let lhs = rs.sigma(&sc.bracket(&x, &y));
                let rhs = sc.bracket(&rs.sigma(&x), &rs.sigma(&y));
                assert_eq!(lhs, rhs, "homomorphism at ({a:?},{b:?})");
            }
        }
    }

    #[test]
    fn su13_phi2_levi_is_indefinite_diagonal() {
        let (spec, rs) = spec_for("su(1,3)", &[2]);
        let gamma = spec.system.root_id(&[1, 1, 1]).unwrap();
        let lm = levi_matrix(&spec, &rs, gamma).unwrap();
        assert!(lm.real_gamma);
        let h = hermitian_form(&lm).unwrap();
        assert_eq!(h.matrix.size(), 3);
        // Two diagonal entries of opposite sign (the third index root does
        // not pair to gamma), off-diagonal zero.
        let mut diag_signs = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                let e = h.matrix.get(i, j);
                if i != j {
                    assert!(num_traits::Zero::is_zero(e));
                } else if !num_traits::Zero::is_zero(e) {
                    assert!(e.im == num_traits::Zero::zero());
                    diag_signs.push(sign(&e.re));
                }
            }
        }
        diag_signs.sort();
        assert_eq!(diag_signs, vec![-1, 1]);
        let sig = hermitian_signature(&h).unwrap();
        assert_eq!(sig.class(), FormClass::Indefinite);
    }

    #[test]
    fn su13_phi1_levi_is_semidefinite() {
        let (spec, rs) = spec_for("su(1,3)", &[1]);
        let gamma = spec.system.root_id(&[1, 1, 1]).unwrap();
        let lm = levi_matrix(&spec, &rs, gamma).unwrap();
        let h = hermitian_form(&lm).unwrap();
        let sig = hermitian_signature(&h).unwrap();
        assert_eq!(sig.rank(), 2);
        assert!(matches!(
            sig.class(),
            FormClass::SemidefinitePositive | FormClass::SemidefiniteNegative
        ));
    }

    #[test]
    fn unit_flip_preserves_admissibility() {
        for (name, phi) in [("su(1,3)", vec![2usize]), ("su(1,3)", vec![1])] {
            let (spec, rs) = spec_for(name, &phi);
            for &gamma in &spec.real_characteristic {
                let a = levi_matrix_with_unit(&spec, &rs, gamma, Some(false)).unwrap();
                let b = levi_matrix_with_unit(&spec, &rs, gamma, Some(true)).unwrap();
                let ca = hermitian_signature(&hermitian_form(&a).unwrap())
                    .unwrap()
                    .class();
                let cb = hermitian_signature(&hermitian_form(&b).unwrap())
                    .unwrap()
                    .class();
                assert_eq!(ca.admissible(), cb.admissible());
            }
        }
    }

    #[test]
    fn non_characteristic_gamma_rejected() {
        let (spec, rs) = spec_for("su(1,3)", &[2]);
        let alpha2 = spec.system.root_id(&[0, 1, 0]).unwrap();
        assert!(levi_matrix(&spec, &rs, alpha2).is_err());
    }

    #[test]
    fn diagonal_entries_real() {
        let (spec, rs) = spec_for("su(2,3)", &[1]);
        for &gamma in &spec.real_characteristic {
            let lm = levi_matrix(&spec, &rs, gamma).unwrap();
            for i in 0..lm.matrix.size() {
                assert!(lm.matrix.get(i, i).im == num_traits::Zero::zero());
            }
        }
    }

    #[test]
    fn theta_dims_small_catalog() {
        for name in ["su(1,2)", "su(2,2)", "so(1,4)", "so(2,3)", "sp(1,2)"] {
            let (_, _, _, rs) = structure_for(name);
            assert_eq!(rs.theta_fixed_dim, rs.diagram.dim_k, "{name}");
        }
    }
}

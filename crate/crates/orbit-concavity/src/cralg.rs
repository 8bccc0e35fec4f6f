//! Parabolic CR algebra combinatorics at the base point.
//!
//! A cross set Phi of simple roots determines the parabolic q_Phi containing
//! every positive root space; crossing a node removes the corresponding
//! negative directions. Q^n indexes the nilradical, its conjugate image is
//! Q-bar^n, and the intersection Q^n /\ Q-bar^n indexes the characteristic
//! directions where Levi forms live. The difference Q^n \ Q-bar^n is the
//! holomorphic index set spanning the orbit's holomorphic tangent space.
//!
//! Fundamentality is operationalized combinatorially: the smallest subset of
//! the root set containing Q_Phi and its conjugate and closed under root
//! addition must be the whole root set. This reproduces the exclusion of the
//! split forms (where the conjugate adds nothing) and agrees with the
//! closed-form classification on every catalog form the cross-validation
//! harness covers.

use crate::error::Error;
use crate::rootsys::{RootId, RootSystem};
use crate::satake::{Conjugation, SatakeDiagram};
use std::collections::BTreeSet;
use std::sync::Arc;

#[derive(Debug)]
pub struct CrSpec {
    pub diagram: SatakeDiagram,
    pub system: Arc<RootSystem>,
    pub conj: Arc<Conjugation>,
    /// Crossed simple roots, 0-based.
    pub phi: BTreeSet<usize>,
    /// Q_Phi membership per root.
    q_mask: Vec<bool>,
    /// Q^n membership per root.
    nil_mask: Vec<bool>,
    /// Q^n \ Q-bar^n membership per root.
    index_mask: Vec<bool>,
    /// Q^n, canonical order.
    pub nilradical: Vec<RootId>,
    /// sigma*(Q^n), canonical order.
    pub conj_nilradical: Vec<RootId>,
    /// Q^n /\ Q-bar^n, canonical order.
    pub characteristic: Vec<RootId>,
    /// Q^n \ Q-bar^n, canonical order; indexes the Levi forms.
    pub holomorphic_index: Vec<RootId>,
    /// Characteristic roots fixed by sigma*.
    pub real_characteristic: Vec<RootId>,
    /// Phi = empty: the orbit degenerates to a point.
    pub degenerate: bool,
    /// Lie generation of the full root set by Q u sigma*(Q).
    pub fundamental: bool,
}

pub fn build_spec(
    diagram: &SatakeDiagram,
    system: &Arc<RootSystem>,
    conj: &Arc<Conjugation>,
    phi: &BTreeSet<usize>,
) -> Result<CrSpec, Error> {
    let nodes = diagram.node_count();
    for &i in phi {
        if i >= nodes {
            return Err(Error::BadPhiIndex {
                index: i + 1,
                rank: nodes,
            });
        }
    }
    let n = system.n_roots();
    let mut q_mask = vec![false; n];
    let mut nil_mask = vec![false; n];
    for id in system.root_ids() {
        let coeffs = system.coeffs(id);
        let in_q = phi.iter().all(|&i| coeffs[i] >= 0);
        q_mask[id.0] = in_q;
        if in_q {
            nil_mask[id.0] = phi.iter().any(|&i| coeffs[i] > 0);
        }
    }
    let mut conj_mask = vec![false; n];
    for id in system.root_ids() {
        if nil_mask[id.0] {
            conj_mask[conj.conj_root(id).0] = true;
        }
    }
    let mut nilradical = Vec::new();
    let mut conj_nilradical = Vec::new();
    let mut characteristic = Vec::new();
    let mut holomorphic_index = Vec::new();
    let mut real_characteristic = Vec::new();
    let mut index_mask = vec![false; n];
    for id in system.root_ids() {
        if nil_mask[id.0] {
            nilradical.push(id);
            if conj_mask[id.0] {
                characteristic.push(id);
                if conj.is_real_root(id) {
                    real_characteristic.push(id);
                }
            } else {
                holomorphic_index.push(id);
                index_mask[id.0] = true;
            }
        }
        if conj_mask[id.0] {
            conj_nilradical.push(id);
        }
    }
    let fundamental = generation_closure_is_full(system, conj, &q_mask);
    Ok(CrSpec {
        diagram: diagram.clone(),
        system: Arc::clone(system),
        conj: Arc::clone(conj),
        phi: phi.clone(),
        q_mask,
        nil_mask,
        index_mask,
        nilradical,
        conj_nilradical,
        characteristic,
        holomorphic_index,
        real_characteristic,
        degenerate: phi.is_empty(),
        fundamental,
    })
}

fn generation_closure_is_full(
    system: &RootSystem,
    conj: &Conjugation,
    q_mask: &[bool],
) -> bool {
    let n = system.n_roots();
    let mut mask = vec![false; n];
    let mut members: Vec<usize> = Vec::with_capacity(n);
    for id in system.root_ids() {
        if q_mask[id.0] {
            if !mask[id.0] {
                mask[id.0] = true;
                members.push(id.0);
            }
            let bar = conj.conj_root(id);
            if !mask[bar.0] {
                mask[bar.0] = true;
                members.push(bar.0);
            }
        }
    }
    let mut head = 0;
    while head < members.len() {
        let a = RootId(members[head]);
        head += 1;
        let mut idx = 0;
        while idx < members.len() {
            let b = RootId(members[idx]);
            idx += 1;
            if let Some(s) = system.sum(a, b) {
                if !mask[s.0] {
                    mask[s.0] = true;
                    members.push(s.0);
                }
            }
        }
    }
    members.len() == n
}

impl CrSpec {
    pub fn in_q(&self, id: RootId) -> bool {
        self.q_mask[id.0]
    }

    pub fn in_nilradical(&self, id: RootId) -> bool {
        self.nil_mask[id.0]
    }

    pub fn in_holomorphic_index(&self, id: RootId) -> bool {
        self.index_mask[id.0]
    }

    pub fn is_characteristic(&self, id: RootId) -> bool {
        self.nil_mask[id.0] && !self.index_mask[id.0]
    }

    /// All ordered pairs (alpha, beta) from the holomorphic index set with
    /// alpha + sigma*(beta) = gamma. These index the potentially nonzero
    /// entries of the Levi form at gamma.
    pub fn alpha_pairs(&self, gamma: RootId) -> Result<Vec<(RootId, RootId)>, Error> {
        if !self.is_characteristic(gamma) {
            return Err(Error::NotCharacteristic(
                format_root(&self.system, gamma),
                self.characteristic
                    .iter()
                    .map(|&g| format_root(&self.system, g))
                    .collect::<Vec<_>>()
                    .join(" "),
            ));
        }
        let mut pairs = Vec::new();
        for &alpha in &self.holomorphic_index {
            for &beta in &self.holomorphic_index {
                let bar = self.conj.conj_root(beta);
                if self.system.sum(alpha, bar) == Some(gamma) {
                    pairs.push((alpha, beta));
                }
            }
        }
        Ok(pairs)
    }

    /// Position of a root in the holomorphic index list.
    pub fn index_position(&self, id: RootId) -> Option<usize> {
        self.holomorphic_index.iter().position(|&r| r == id)
    }

    pub fn phi_display(&self) -> Vec<usize> {
        self.phi.iter().map(|&i| i + 1).collect()
    }
}

pub fn format_root(system: &RootSystem, id: RootId) -> String {
    system
        .coeffs(id)
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// JSON view of the derived root sets.
#[derive(serde::Serialize)]
pub struct CrSpecJson {
    pub algebra: String,
    pub phi: Vec<usize>,
    pub degenerate: bool,
    pub fundamental: bool,
    pub nilradical: Vec<Vec<i64>>,
    pub conj_nilradical: Vec<Vec<i64>>,
    pub characteristic: Vec<Vec<i64>>,
    pub holomorphic_index: Vec<Vec<i64>>,
    pub real_characteristic: Vec<Vec<i64>>,
}

impl CrSpec {
    pub fn to_json(&self) -> CrSpecJson {
        let v = |ids: &Vec<RootId>| {
            ids.iter()
                .map(|&id| self.system.coeffs(id).to_vec())
                .collect()
        };
        CrSpecJson {
            algebra: self.diagram.name.clone(),
            phi: self.phi_display(),
            degenerate: self.degenerate,
            fundamental: self.fundamental,
            nilradical: v(&self.nilradical),
            conj_nilradical: v(&self.conj_nilradical),
            characteristic: v(&self.characteristic),
            holomorphic_index: v(&self.holomorphic_index),
            real_characteristic: v(&self.real_characteristic),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::satake::{catalog, conjugation};

    fn spec_for(name: &str, phi: &[usize]) -> CrSpec {
        let cat = catalog(6);
        let diag = cat.iter().find(|d| d.name == name).unwrap().clone();
        let sys = diag.build_system().unwrap();
        let conj = Arc::new(conjugation(&diag, &sys).unwrap());
        let phi: BTreeSet<usize> = phi.iter().map(|&i| i - 1).collect();
        build_spec(&diag, &sys, &conj, &phi).unwrap()
    }

    fn coeffs(spec: &CrSpec, ids: &[RootId]) -> Vec<Vec<i64>> {
        ids.iter().map(|&id| spec.system.coeffs(id).to_vec()).collect()
    }

    #[test]
    fn su13_phi2_sets() {
        let spec = spec_for("su(1,3)", &[2]);
        assert_eq!(
            coeffs(&spec, &spec.holomorphic_index),
            vec![vec![0, 1, 0], vec![1, 1, 0], vec![0, 1, 1]]
        );
        assert_eq!(coeffs(&spec, &spec.characteristic), vec![vec![1, 1, 1]]);
        assert_eq!(
            coeffs(&spec, &spec.real_characteristic),
            vec![vec![1, 1, 1]]
        );
    }

    #[test]
    fn su13_phi1_sets() {
        let spec = spec_for("su(1,3)", &[1]);
        assert_eq!(
            coeffs(&spec, &spec.nilradical),
            vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 1, 1]]
        );
        assert_eq!(
            coeffs(&spec, &spec.real_characteristic),
            vec![vec![1, 1, 1]]
        );
        assert!(spec.fundamental);
    }

    #[test]
    fn empty_phi_is_degenerate() {
        let spec = spec_for("su(1,3)", &[]);
        assert!(spec.degenerate);
        assert!(spec.nilradical.is_empty());
        assert!(spec.fundamental);
    }

    #[test]
    fn split_forms_not_fundamental() {
        for name in ["sl(4,R)", "sp(3,R)", "g"] {
            let spec = spec_for(name, &[1]);
            assert!(!spec.fundamental, "{name}");
        }
    }

    #[test]
    fn alpha_pairs_su13() {
        let spec = spec_for("su(1,3)", &[2]);
        let gamma = spec.system.root_id(&[1, 1, 1]).unwrap();
        let pairs = spec.alpha_pairs(gamma).unwrap();
        let as_coeffs: Vec<(Vec<i64>, Vec<i64>)> = pairs
            .iter()
            .map(|&(a, b)| {
                (
                    spec.system.coeffs(a).to_vec(),
                    spec.system.coeffs(b).to_vec(),
                )
            })
            .collect();
        assert_eq!(
            as_coeffs,
            vec![
                (vec![1, 1, 0], vec![1, 1, 0]),
                (vec![0, 1, 1], vec![0, 1, 1])
            ]
        );

        let spec1 = spec_for("su(1,3)", &[1]);
        let pairs1 = spec1.alpha_pairs(gamma).unwrap();
        let as_coeffs1: Vec<(Vec<i64>, Vec<i64>)> = pairs1
            .iter()
            .map(|&(a, b)| {
                (
                    spec1.system.coeffs(a).to_vec(),
                    spec1.system.coeffs(b).to_vec(),
                )
            })
            .collect();
        assert_eq!(
            as_coeffs1,
            vec![
                (vec![1, 0, 0], vec![1, 0, 0]),
                (vec![1, 1, 0], vec![1, 1, 0])
            ]
        );
    }

    #[test]
    fn alpha_pairs_rejects_non_characteristic() {
        let spec = spec_for("su(1,3)", &[2]);
        let alpha2 = spec.system.root_id(&[0, 1, 0]).unwrap();
        assert!(spec.alpha_pairs(alpha2).is_err());
    }

    #[test]
    fn characteristic_is_conjugation_stable_and_closed() {
        for (name, phi) in [
            ("su(2,3)", vec![1]),
            ("su(2,3)", vec![1, 2]),
            ("sp(1,2)", vec![1]),
            ("sp(1,3)", vec![2, 4]),
            ("so(2,5)", vec![1, 2]),
            ("eIII", vec![3]),
        ] {
            let spec = spec_for(name, &phi);
            let chars: BTreeSet<RootId> = spec.characteristic.iter().copied().collect();
            for &g in &spec.characteristic {
                assert!(chars.contains(&spec.conj.conj_root(g)), "{name}");
            }
            for &a in &spec.characteristic {
                for &b in &spec.characteristic {
                    if let Some(s) = spec.system.sum(a, b) {
                        assert!(chars.contains(&s), "{name}: characteristic not closed");
                    }
                }
            }
            // The two pieces partition Q^n.
            assert_eq!(
                spec.characteristic.len() + spec.holomorphic_index.len(),
                spec.nilradical.len()
            );
        }
    }

    #[test]
    fn diag_pairs_present_for_omega_real_roots() {
        // For every real characteristic root of the form alpha + conj(alpha)
        // with alpha in the index set, the diagonal pair must appear.
        let spec = spec_for("su(1,3)", &[2]);
        for &gamma in &spec.real_characteristic {
            let pairs = spec.alpha_pairs(gamma).unwrap();
            for &alpha in &spec.holomorphic_index {
                let bar = spec.conj.conj_root(alpha);
                if spec.system.sum(alpha, bar) == Some(gamma) {
                    assert!(pairs.contains(&(alpha, alpha)));
                }
            }
        }
    }

    #[test]
    fn complex_type_always_fundamental() {
        for phi in [vec![1], vec![1, 4], vec![2, 3]] {
            let spec = spec_for("complex-a2", &phi);
            assert!(spec.fundamental);
            assert!(spec.real_characteristic.is_empty());
        }
    }
}

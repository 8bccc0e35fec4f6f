//! Satake diagrams of the simple real Lie algebras and the induced
//! conjugation involution on the root lattice.
//!
//! The catalog covers, for every complex rank within the configured bound,
//! every simple real form: the split and compact forms, the classical
//! families sl(n,R), su*(2n), su(p,q), so(p,q), sp(n,R), sp(p,q), so*(2n),
//! the exceptional forms eI..eIX, fI, fII, g, and the underlying real
//! algebra of each complex simple algebra (modeled on the doubled system).
//!
//! The conjugation acts on the root lattice as sigma* = w_black . s, where
//! w_black is the longest-element action of the painted subsystem and s is
//! the arrow involution extended over the painted nodes by the opposition
//! involution of the painted subsystem (the extension by the identity is
//! wrong whenever the painted part has a nontrivial opposition involution,
//! e.g. an A_k component with k >= 2, and fails its own invariants there).
//! Every entry is validated: sigma* must be an involution permuting the
//! roots, negating exactly the painted subsystem, and keeping white simple
//! roots positive.

use crate::error::Error;
use crate::rootsys::{
    algebra_dimension, build_doubled_system, build_root_system, LatticeMap, RootId, RootSystem,
    SystemLabel, TypeLetter,
};
use std::collections::BTreeSet;
use std::sync::Arc;

/// Structured family descriptor of a simple real Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RealForm {
    /// sl(n, R) — split type A.
    SlR { n: usize },
    /// su*(2n) — type A II.
    SuStar { n: usize },
    /// su(p, q), p <= q — types A IIIa/IIIb/IV.
    Su { p: usize, q: usize },
    /// so(p, q), p <= q — types B I/II and D I/II.
    So { p: usize, q: usize },
    /// sp(n, R) — split type C.
    SpR { n: usize },
    /// sp(p, q), p <= q — types C IIa/IIb.
    Sp { p: usize, q: usize },
    /// so*(2n) — types D IIIa/IIIb.
    SoStar { n: usize },
    /// Exceptional real forms, numbered in the classical way.
    Exceptional(ExceptionalForm),
    /// Compact real form of the given complex type.
    Compact,
    /// The underlying real algebra of a complex simple algebra.
    ComplexType,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExceptionalForm {
    EI,
    EII,
    EIII,
    EIV,
    EV,
    EVI,
    EVII,
    EVIII,
    EIX,
    FI,
    FII,
    G,
}

/// A cross-markable Satake diagram: one catalog entry.
#[derive(Debug, Clone)]
pub struct SatakeDiagram {
    /// Canonical name, e.g. "su(2,3)", "eIII", "compact-e6", "complex-a2".
    pub name: String,
    pub form: RealForm,
    pub base_letter: TypeLetter,
    /// Rank of the underlying complex simple algebra.
    pub base_rank: usize,
    /// True for complex-type entries (base system is doubled).
    pub doubled: bool,
    /// Painted simple roots, 0-based over the base system.
    pub black: BTreeSet<usize>,
    /// Arrow involution on white nodes, 0-based pairs (i, j) with i < j.
    pub arrows: Vec<(usize, usize)>,
    /// Dimension of a maximal compact subalgebra; validation datum.
    pub dim_k: usize,
}

impl SatakeDiagram {
    pub fn system_label(&self) -> SystemLabel {
        if self.doubled {
            SystemLabel::Doubled(self.base_letter, self.base_rank)
        } else {
            SystemLabel::Simple(self.base_letter, self.base_rank)
        }
    }

    /// Number of simple roots of the base root system (doubled for complex
    /// entries); cross sets Phi live inside this range.
    pub fn node_count(&self) -> usize {
        if self.doubled {
            2 * self.base_rank
        } else {
            self.base_rank
        }
    }

    pub fn build_system(&self) -> Result<Arc<RootSystem>, Error> {
        if self.doubled {
            build_doubled_system(self.base_letter, self.base_rank)
        } else {
            build_root_system(self.base_letter, self.base_rank)
        }
    }

    /// Split forms carry the trivial conjugation: no painted nodes, no
    /// arrows. These are exactly the forms excluded by the closed-form
    /// classification (they are never fundamental for nonempty Phi).
    pub fn is_split(&self) -> bool {
        self.black.is_empty() && self.arrows.is_empty()
    }

    pub fn is_compact(&self) -> bool {
        matches!(self.form, RealForm::Compact)
    }

    pub fn is_complex_type(&self) -> bool {
        matches!(self.form, RealForm::ComplexType)
    }

    /// Display label of the real type, e.g. "A IIIa" or "D Ib".
    pub fn type_label(&self) -> String {
        match self.form {
            RealForm::SlR { .. } => "A I".into(),
            RealForm::SuStar { .. } => "A II".into(),
            RealForm::Su { p, q } => {
                if p == q {
                    "A IIIb".into()
                } else if p == 1 {
                    "A IV".into()
                } else {
                    "A IIIa".into()
                }
            }
            RealForm::So { p, q } => {
                let l = (p + q) / 2;
                if (p + q) % 2 == 1 {
                    if p == 1 {
                        "B II".into()
                    } else {
                        "B I".into()
                    }
                } else if p == 1 {
                    "D II".into()
                } else if p == l {
                    "D Ic".into()
                } else if p == l - 1 {
                    "D Ib".into()
                } else {
                    "D Ia".into()
                }
            }
            RealForm::SpR { .. } => "C I".into(),
            RealForm::Sp { p, q } => {
                if p == q {
                    "C IIb".into()
                } else {
                    "C IIa".into()
                }
            }
            RealForm::SoStar { n } => {
                if n % 2 == 0 {
                    "D IIIa".into()
                } else {
                    "D IIIb".into()
                }
            }
            RealForm::Exceptional(e) => match e {
                ExceptionalForm::EI => "E I".into(),
                ExceptionalForm::EII => "E II".into(),
                ExceptionalForm::EIII => "E III".into(),
                ExceptionalForm::EIV => "E IV".into(),
                ExceptionalForm::EV => "E V".into(),
                ExceptionalForm::EVI => "E VI".into(),
                ExceptionalForm::EVII => "E VII".into(),
                ExceptionalForm::EVIII => "E VIII".into(),
                ExceptionalForm::EIX => "E IX".into(),
                ExceptionalForm::FI => "F I".into(),
                ExceptionalForm::FII => "F II".into(),
                ExceptionalForm::G => "G".into(),
            },
            RealForm::Compact => "compact".into(),
            RealForm::ComplexType => "complex".into(),
        }
    }
}

fn binom2(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Build the full catalog of simple real forms up to the given complex rank.
pub fn catalog(max_rank: usize) -> Vec<SatakeDiagram> {
    let mut out = Vec::new();
    let mk = |name: String,
              form: RealForm,
              letter: TypeLetter,
              rank: usize,
              black: Vec<usize>,
              arrows: Vec<(usize, usize)>,
              dim_k: usize| SatakeDiagram {
        name,
        form,
        base_letter: letter,
        base_rank: rank,
        doubled: matches!(form, RealForm::ComplexType),
        black: black.into_iter().collect(),
        arrows,
        dim_k,
    };

    // Type A.
    for l in 1..=max_rank {
        let n = l + 1;
        out.push(mk(
            format!("sl({n},R)"),
            RealForm::SlR { n },
            TypeLetter::A,
            l,
            vec![],
            vec![],
            n * (n - 1) / 2, // dim so(n)
        ));
        if n % 2 == 0 && n >= 4 {
            let half = n / 2;
            // Painted nodes at the odd positions.
            let black: Vec<usize> = (0..l).step_by(2).collect();
            out.push(mk(
                format!("su*({n})"),
                RealForm::SuStar { n: half },
                TypeLetter::A,
                l,
                black,
                vec![],
                half * (2 * half + 1), // dim sp(half)
            ));
        }
        for p in 1..=n / 2 {
            let q = n - p;
            // Painted middle nodes p+1..q-1 (1-based), arrows i <-> n-i.
            let black: Vec<usize> = (p + 1..=q.saturating_sub(1)).map(|i| i - 1).collect();
            let arrows: Vec<(usize, usize)> = (1..=p)
                .filter(|&i| i < n - i)
                .map(|i| (i - 1, n - i - 1))
                .collect();
            out.push(mk(
                format!("su({p},{q})"),
                RealForm::Su { p, q },
                TypeLetter::A,
                l,
                black,
                arrows,
                p * p + q * q - 1,
            ));
        }
        push_compact_and_complex(&mut out, TypeLetter::A, l);
    }

    // Type B.
    for l in 2..=max_rank {
        for p in 1..=l {
            let q = 2 * l + 1 - p;
            let black: Vec<usize> = (p..l).collect();
            out.push(mk(
                format!("so({p},{q})"),
                RealForm::So { p, q },
                TypeLetter::B,
                l,
                black,
                vec![],
                binom2(p) + binom2(q),
            ));
        }
        push_compact_and_complex(&mut out, TypeLetter::B, l);
    }

    // Type C.
    for l in 3..=max_rank {
        out.push(mk(
            format!("sp({l},R)"),
            RealForm::SpR { n: l },
            TypeLetter::C,
            l,
            vec![],
            vec![],
            l * l, // dim u(l)
        ));
        for p in 1..=l / 2 {
            let q = l - p;
            // Painted: odd nodes 1,3,..,2p-1 and the tail 2p+1..l (1-based).
            let mut black: Vec<usize> = (0..2 * p).step_by(2).collect();
            black.extend(2 * p..l);
            out.push(mk(
                format!("sp({p},{q})"),
                RealForm::Sp { p, q },
                TypeLetter::C,
                l,
                black,
                vec![],
                p * (2 * p + 1) + q * (2 * q + 1),
            ));
        }
        push_compact_and_complex(&mut out, TypeLetter::C, l);
    }

    // Type D.
    for l in 4..=max_rank {
        for p in 1..=l {
            let q = 2 * l - p;
            let (black, arrows): (Vec<usize>, Vec<(usize, usize)>) = if p <= l - 2 {
                ((p..l).collect(), vec![])
            } else if p == l - 1 {
                (vec![], vec![(l - 2, l - 1)])
            } else {
                (vec![], vec![])
            };
            out.push(mk(
                format!("so({p},{q})"),
                RealForm::So { p, q },
                TypeLetter::D,
                l,
                black,
                arrows,
                binom2(p) + binom2(q),
            ));
        }
        // so*(2l).
        let (black, arrows): (Vec<usize>, Vec<(usize, usize)>) = if l % 2 == 0 {
            ((0..l).step_by(2).collect(), vec![])
        } else {
            ((0..l - 2).step_by(2).collect(), vec![(l - 2, l - 1)])
        };
        out.push(mk(
            format!("so*({})", 2 * l),
            RealForm::SoStar { n: l },
            TypeLetter::D,
            l,
            black,
            arrows,
            l * l, // dim u(l)
        ));
        push_compact_and_complex(&mut out, TypeLetter::D, l);
    }

    // Exceptional types; painted sets and arrows are 1-based in the table.
    use ExceptionalForm::*;
    let mut exceptional: Vec<(ExceptionalForm, &str, TypeLetter, usize, Vec<usize>, Vec<(usize, usize)>, usize)> =
        Vec::new();
    if max_rank >= 6 {
        exceptional.push((EI, "eI", TypeLetter::E, 6, vec![], vec![], 36));
        exceptional.push((EII, "eII", TypeLetter::E, 6, vec![], vec![(1, 6), (3, 5)], 38));
        exceptional.push((EIII, "eIII", TypeLetter::E, 6, vec![3, 4, 5], vec![(1, 6)], 46));
        exceptional.push((EIV, "eIV", TypeLetter::E, 6, vec![2, 3, 4, 5], vec![], 52));
    }
    if max_rank >= 7 {
        exceptional.push((EV, "eV", TypeLetter::E, 7, vec![], vec![], 63));
        exceptional.push((EVI, "eVI", TypeLetter::E, 7, vec![2, 5, 7], vec![], 69));
        exceptional.push((EVII, "eVII", TypeLetter::E, 7, vec![2, 3, 4, 5], vec![], 79));
    }
    if max_rank >= 8 {
        exceptional.push((EVIII, "eVIII", TypeLetter::E, 8, vec![], vec![], 120));
        exceptional.push((EIX, "eIX", TypeLetter::E, 8, vec![2, 3, 4, 5], vec![], 136));
    }
    if max_rank >= 4 {
        exceptional.push((FI, "fI", TypeLetter::F, 4, vec![], vec![], 24));
        exceptional.push((FII, "fII", TypeLetter::F, 4, vec![1, 2, 3], vec![], 36));
    }
    if max_rank >= 2 {
        exceptional.push((G, "g", TypeLetter::G, 2, vec![], vec![], 6));
    }
    for (form, name, letter, rank, black1, arrows1, dim_k) in exceptional {
        out.push(mk(
            name.to_string(),
            RealForm::Exceptional(form),
            letter,
            rank,
            black1.into_iter().map(|i| i - 1).collect(),
            arrows1.into_iter().map(|(i, j)| (i - 1, j - 1)).collect(),
            dim_k,
        ));
    }
    for (letter, lo) in [
        (TypeLetter::E, 6usize),
        (TypeLetter::F, 4),
        (TypeLetter::G, 2),
    ] {
        let hi = match letter {
            TypeLetter::E => 8.min(max_rank),
            _ => lo,
        };
        if max_rank >= lo {
            for l in lo..=hi {
                if letter != TypeLetter::E && l != lo {
                    continue;
                }
                push_compact_and_complex(&mut out, letter, l);
            }
        }
    }
    out
}

fn push_compact_and_complex(out: &mut Vec<SatakeDiagram>, letter: TypeLetter, rank: usize) {
    let dim = algebra_dimension(letter, rank);
    let lower = letter.as_str().to_ascii_lowercase();
    out.push(SatakeDiagram {
        name: format!("compact-{lower}{rank}"),
        form: RealForm::Compact,
        base_letter: letter,
        base_rank: rank,
        doubled: false,
        black: (0..rank).collect(),
        arrows: vec![],
        dim_k: dim,
    });
    out.push(SatakeDiagram {
        name: format!("complex-{lower}{rank}"),
        form: RealForm::ComplexType,
        base_letter: letter,
        base_rank: rank,
        doubled: true,
        black: BTreeSet::new(),
        arrows: (0..rank).map(|i| (i, rank + i)).collect(),
        dim_k: dim,
    });
}

/// The conjugation involution sigma* on the root lattice of one real form.
#[derive(Debug)]
pub struct Conjugation {
    pub system: Arc<RootSystem>,
    map: LatticeMap,
    /// sigma* as a permutation of the root list.
    perm: Vec<usize>,
    /// Roots with sigma* alpha = -alpha.
    compact: Vec<bool>,
}

impl Conjugation {
    pub fn conj_root(&self, id: RootId) -> RootId {
        RootId(self.perm[id.0])
    }

    pub fn is_real_root(&self, id: RootId) -> bool {
        self.perm[id.0] == id.0
    }

    pub fn is_compact_root(&self, id: RootId) -> bool {
        self.compact[id.0]
    }

    pub fn compact_count(&self) -> usize {
        self.compact.iter().filter(|&&b| b).count()
    }

    pub fn apply_lattice(&self, v: &[i64]) -> Vec<i64> {
        self.map.apply(v)
    }

    pub fn lattice_trace(&self) -> i64 {
        self.map.trace()
    }
}

/// Build sigma* = w_black . s for a catalog entry and validate it.
pub fn conjugation(
    diag: &SatakeDiagram,
    system: &Arc<RootSystem>,
) -> Result<Conjugation, Error> {
    let rank = system.rank();
    if rank != diag.node_count() {
        return Err(Error::Internal(format!(
            "system rank {rank} does not match diagram {}",
            diag.name
        )));
    }
    let w_black = system.longest_element_action(&diag.black);
    // Arrow involution, extended over the painted nodes by the opposition
    // involution of the painted subsystem so that sigma* negates it.
    let mut stilde: Vec<usize> = (0..rank).collect();
    for &(i, j) in &diag.arrows {
        stilde[i] = j;
        stilde[j] = i;
    }
    for &b in &diag.black {
        let mut unit = vec![0i64; rank];
        unit[b] = 1;
        let image = w_black.apply(&unit);
        let negated: Vec<i64> = image.iter().map(|c| -c).collect();
        let target = system
            .root_id(&negated)
            .and_then(|r| system.is_simple(r))
            .ok_or_else(|| {
                Error::Internal(format!(
                    "{}: longest element does not negate painted node {}",
                    diag.name,
                    b + 1
                ))
            })?;
        if !diag.black.contains(&target) {
            return Err(Error::Internal(format!(
                "{}: opposition of painted node {} leaves the painted set",
                diag.name,
                b + 1
            )));
        }
        stilde[b] = target;
    }
    // stilde must be an involutive diagram automorphism.
    let cartan = system.cartan();
    for i in 0..rank {
        if stilde[stilde[i]] != i {
            return Err(Error::Internal(format!(
                "{}: node involution is not involutive",
                diag.name
            )));
        }
        for j in 0..rank {
            if cartan[stilde[i]][stilde[j]] != cartan[i][j] {
                return Err(Error::Internal(format!(
                    "{}: node involution is not a diagram automorphism",
                    diag.name
                )));
            }
        }
    }
    let mut s_map = LatticeMap::identity(rank);
    for j in 0..rank {
        for i in 0..rank {
            s_map.matrix[i][j] = if stilde[j] == i { 1 } else { 0 };
        }
    }
    let map = w_black.compose(&s_map);
    if !map.compose(&map).is_identity() {
        return Err(Error::Internal(format!(
            "{}: sigma* is not an involution",
            diag.name
        )));
    }
    // sigma* must permute the root set.
    let mut perm = vec![0usize; system.n_roots()];
    for id in system.root_ids() {
        let image = map.apply(system.coeffs(id));
        let target = system.root_id(&image).ok_or_else(|| {
            Error::Internal(format!("{}: sigma* does not preserve the roots", diag.name))
        })?;
        perm[id.0] = target.0;
    }
    // Painted simple roots are negated; white simple roots stay positive.
    for i in 0..rank {
        let simple = system.simple(i);
        let image = RootId(perm[simple.0]);
        if diag.black.contains(&i) {
            if image != system.neg(simple) {
                return Err(Error::Internal(format!(
                    "{}: sigma* does not negate painted node {}",
                    diag.name,
                    i + 1
                )));
            }
        } else if !system.is_positive(image) {
            return Err(Error::Internal(format!(
                "{}: sigma* sends white node {} to a negative root",
                diag.name,
                i + 1
            )));
        }
    }
    // The compact roots are exactly the painted subsystem.
    let mut compact = vec![false; system.n_roots()];
    for id in system.root_ids() {
        compact[id.0] = perm[id.0] == system.neg(id).0;
        let supported_on_black = system
            .coeffs(id)
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || diag.black.contains(&i));
        if compact[id.0] != supported_on_black {
            return Err(Error::Internal(format!(
                "{}: compact roots differ from the painted subsystem",
                diag.name
            )));
        }
    }
    Ok(Conjugation {
        system: Arc::clone(system),
        map,
        perm,
        compact,
    })
}

/// Omega: the positive real roots expressible as alpha + conj(alpha).
pub fn omega_set(conj: &Conjugation) -> Vec<RootId> {
    let sys = &conj.system;
    let mut found: BTreeSet<usize> = BTreeSet::new();
    for alpha in sys.root_ids() {
        let bar = conj.conj_root(alpha);
        if let Some(gamma) = sys.sum(alpha, bar) {
            if sys.is_positive(gamma) {
                debug_assert!(conj.is_real_root(gamma));
                found.insert(gamma.0);
            }
        }
    }
    found.into_iter().map(RootId).collect()
}

/// JSON view of a catalog entry (1-based node indices).
#[derive(serde::Serialize)]
pub struct CatalogEntryJson {
    pub name: String,
    pub real_type: String,
    pub base_type: String,
    pub rank: usize,
    pub nodes: usize,
    pub black: Vec<usize>,
    pub arrows: Vec<(usize, usize)>,
    pub dim_k: usize,
}

impl SatakeDiagram {
    pub fn to_json_entry(&self) -> CatalogEntryJson {
        CatalogEntryJson {
            name: self.name.clone(),
            real_type: self.type_label(),
            base_type: format!("{}{}", self.base_letter.as_str(), self.base_rank),
            rank: self.base_rank,
            nodes: self.node_count(),
            black: self.black.iter().map(|i| i + 1).collect(),
            arrows: self.arrows.iter().map(|&(i, j)| (i + 1, j + 1)).collect(),
            dim_k: self.dim_k,
        }
    }
}

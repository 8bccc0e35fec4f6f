//! Essential pseudoconcavity decisions and the cross-validation harness.
//!
//! Three independent routes produce the verdict for a cross-marked diagram:
//!
//! * the real-root criterion: every Levi form of a real characteristic root
//!   must be zero or indefinite (requires fundamentality);
//! * the full criterion: for every characteristic root, the Hermitian parts
//!   of its Levi form must be zero or indefinite (no fundamentality needed);
//! * the closed-form classification by real type and cross set.
//!
//! The enumeration harness runs the algorithmic decision against the closed
//! form over every catalog form and cross set within a rank bound and
//! reports any disagreement with full witnesses. Split forms are excluded
//! as non-fundamental. An optional exact linear-feasibility search produces
//! strictly positive diagonal metric weights certifying the trace condition.

use crate::chevalley::{build_constants, StructureConstants};
use crate::cralg::{build_spec, CrSpec};
use crate::error::Error;
use crate::leviform::{
    build_real_structure, hermitian_form, hermitian_parts, hermitian_signature, levi_matrix,
    RealStructure,
};
use crate::linprog::solve_nonneg;
use crate::matrix::{FormClass, Signature};
use crate::rootsys::{RootSystem, SystemLabel};
use crate::satake::{catalog, conjugation, Conjugation, ExceptionalForm, RealForm, SatakeDiagram};
use crate::scalar::{format_rational, rat, Rational};
use num_traits::Zero;
use serde_json::json;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Decision {
    EssentiallyPseudoconcave,
    NotEssentiallyPseudoconcave,
    /// Phi is empty: the orbit is a point and the condition holds trivially.
    TriviallyYes,
}

impl Decision {
    pub fn as_bool(&self) -> bool {
        !matches!(self, Decision::NotEssentiallyPseudoconcave)
    }
}

impl std::fmt::Display for Decision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Decision::EssentiallyPseudoconcave => "essentially-pseudoconcave",
            Decision::NotEssentiallyPseudoconcave => "not-essentially-pseudoconcave",
            Decision::TriviallyYes => "trivially-yes(degenerate)",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Route {
    RealRootCriterion,
    FullCriterion,
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Route::RealRootCriterion => "real-root-criterion",
            Route::FullCriterion => "full-criterion",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone)]
pub struct GammaReport {
    pub gamma: Vec<i64>,
    pub real: bool,
    /// Class and signature of the Hermitian form (real gamma).
    pub class: Option<(FormClass, Signature)>,
    /// Classes of the Hermitian parts (non-real gamma).
    pub parts: Option<((FormClass, Signature), (FormClass, Signature))>,
}

#[derive(Debug, Clone)]
pub struct Witness {
    pub gamma: Vec<i64>,
    pub class: FormClass,
    pub signature: Signature,
    /// Which Hermitian part witnessed the failure on the full route.
    pub part: Option<&'static str>,
}

#[derive(Debug, Clone)]
pub struct Verdict {
    pub algebra: String,
    /// 1-based crossed nodes.
    pub phi: Vec<usize>,
    pub degenerate: bool,
    pub fundamental: bool,
    pub decision: Decision,
    pub route: Route,
    pub per_gamma: Vec<GammaReport>,
    pub witness: Option<Witness>,
    pub certificate: Option<Vec<(Vec<i64>, Rational)>>,
}

/// Decide by the real-root criterion. Requires a fundamental CR algebra;
/// non-fundamental input is rejected so the caller can fall back to the
/// full criterion.
pub fn decide_proposition(spec: &CrSpec, rs: &RealStructure) -> Result<Verdict, Error> {
    if spec.degenerate {
        return Ok(trivial_verdict(spec, Route::RealRootCriterion));
    }
    if !spec.fundamental {
        return Err(Error::NotFundamental);
    }
    let mut per_gamma = Vec::new();
    let mut witness = None;
    for &gamma in &spec.real_characteristic {
        let lm = levi_matrix(spec, rs, gamma)?;
        let h = hermitian_form(&lm)?;
        let sig = hermitian_signature(&h)?;
        let class = sig.class();
        per_gamma.push(GammaReport {
            gamma: spec.system.coeffs(gamma).to_vec(),
            real: true,
            class: Some((class, sig)),
            parts: None,
        });
        if !class.admissible() && witness.is_none() {
            witness = Some(Witness {
                gamma: spec.system.coeffs(gamma).to_vec(),
                class,
                signature: sig,
                part: None,
            });
        }
    }
    let decision = if witness.is_none() {
        Decision::EssentiallyPseudoconcave
    } else {
        Decision::NotEssentiallyPseudoconcave
    };
    Ok(Verdict {
        algebra: spec.diagram.name.clone(),
        phi: spec.phi_display(),
        degenerate: false,
        fundamental: true,
        decision,
        route: Route::RealRootCriterion,
        per_gamma,
        witness,
        certificate: None,
    })
}

/// Decide by the full criterion over every characteristic root; does not
/// require fundamentality.
pub fn decide_lemma_iii(spec: &CrSpec, rs: &RealStructure) -> Result<Verdict, Error> {
    if spec.degenerate {
        return Ok(trivial_verdict(spec, Route::FullCriterion));
    }
    let mut per_gamma = Vec::new();
    let mut witness = None;
    for &gamma in &spec.characteristic {
        let lm = levi_matrix(spec, rs, gamma)?;
        if lm.real_gamma {
            let h = hermitian_form(&lm)?;
            let sig = hermitian_signature(&h)?;
            let class = sig.class();
            per_gamma.push(GammaReport {
                gamma: spec.system.coeffs(gamma).to_vec(),
                real: true,
                class: Some((class, sig)),
                parts: None,
            });
            if !class.admissible() && witness.is_none() {
                witness = Some(Witness {
                    gamma: spec.system.coeffs(gamma).to_vec(),
                    class,
                    signature: sig,
                    part: None,
                });
            }
        } else {
            let (re, im) = hermitian_parts(&lm);
            let sig_re = hermitian_signature(&re)?;
            let sig_im = hermitian_signature(&im)?;
            per_gamma.push(GammaReport {
                gamma: spec.system.coeffs(gamma).to_vec(),
                real: false,
                class: None,
                parts: Some(((sig_re.class(), sig_re), (sig_im.class(), sig_im))),
            });
            if witness.is_none() {
                for (label, sig) in [("re", sig_re), ("im", sig_im)] {
                    if !sig.class().admissible() {
                        witness = Some(Witness {
                            gamma: spec.system.coeffs(gamma).to_vec(),
                            class: sig.class(),
                            signature: sig,
                            part: Some(label),
                        });
                        break;
                    }
                }
            }
        }
    }
    let decision = if witness.is_none() {
        Decision::EssentiallyPseudoconcave
    } else {
        Decision::NotEssentiallyPseudoconcave
    };
    Ok(Verdict {
        algebra: spec.diagram.name.clone(),
        phi: spec.phi_display(),
        degenerate: false,
        fundamental: spec.fundamental,
        decision,
        route: Route::FullCriterion,
        per_gamma,
        witness,
        certificate: None,
    })
}

fn trivial_verdict(spec: &CrSpec, route: Route) -> Verdict {
    Verdict {
        algebra: spec.diagram.name.clone(),
        phi: Vec::new(),
        degenerate: true,
        fundamental: spec.fundamental,
        decision: Decision::TriviallyYes,
        route,
        per_gamma: Vec::new(),
        witness: None,
        certificate: None,
    }
}

/// Outcome of the closed-form classification.
#[derive(Debug, Clone)]
pub struct TableVerdict {
    pub pseudoconcave: bool,
    pub condition: String,
}

/// Evaluate the closed-form classification for the diagram's real type and
/// cross set. Split forms are rejected as non-fundamental.
pub fn closed_form_table(spec: &CrSpec) -> Result<TableVerdict, Error> {
    let diag = &spec.diagram;
    if diag.is_split() {
        return Err(Error::TableInapplicable);
    }
    let phi = &spec.phi;
    let yes = |condition: &str| TableVerdict {
        pseudoconcave: true,
        condition: condition.to_string(),
    };
    let no = |condition: &str| TableVerdict {
        pseudoconcave: false,
        condition: condition.to_string(),
    };
    let verdict = match diag.form {
        RealForm::Compact => yes("always (compact)"),
        RealForm::ComplexType => yes("always (complex type)"),
        RealForm::SuStar { .. } => yes("always (A II)"),
        RealForm::So { .. } => yes("always (B, D I, D II)"),
        RealForm::Su { p, q } => {
            if p == q {
                yes("always (A IIIb)")
            } else {
                let in_black = phi.iter().all(|i| diag.black.contains(i));
                let outside = phi.iter().all(|&i| i + 1 < p || i + 1 > q);
                if in_black {
                    yes("A IIIa-IV: crosses inside the painted set")
                } else if outside {
                    yes("A IIIa-IV: crosses outside positions p..q")
                } else {
                    no("A IIIa-IV: conditions fail")
                }
            }
        }
        RealForm::Sp { p, q } => {
            if p == q {
                yes("always (C IIb)")
            } else {
                let odd_head = phi.iter().all(|&i| (i + 1) % 2 == 1 && i < 2 * p - 1);
                let tail = phi.iter().all(|&i| i + 1 > 2 * p);
                if odd_head {
                    yes("C IIa: crosses at odd painted positions")
                } else if tail {
                    yes("C IIa: crosses beyond position 2p")
                } else {
                    no("C IIa: conditions fail")
                }
            }
        }
        RealForm::SoStar { n } => {
            if n % 2 == 0 {
                yes("always (D IIIa)")
            } else if phi.contains(&(n - 2)) || phi.contains(&(n - 1)) {
                no("D IIIb: crosses meet the fork")
            } else {
                yes("D IIIb: crosses avoid the fork")
            }
        }
        RealForm::Exceptional(e) => match e {
            ExceptionalForm::EII => yes("always (E II)"),
            ExceptionalForm::EIV => yes("always (E IV)"),
            ExceptionalForm::EVI => yes("always (E VI)"),
            ExceptionalForm::EVII => yes("always (E VII)"),
            ExceptionalForm::EIX => yes("always (E IX)"),
            ExceptionalForm::EIII => {
                let in_black = phi.iter().all(|i| diag.black.contains(i));
                let has_alpha4 = phi.contains(&3);
                let is_35 = phi.len() == 2 && phi.contains(&2) && phi.contains(&4);
                if (has_alpha4 && in_black) || is_35 {
                    yes("E III: alpha4 inside painted crosses, or {alpha3, alpha5}")
                } else if phi.is_empty() {
                    yes("E III: empty cross set")
                } else {
                    no("E III: conditions fail")
                }
            }
            ExceptionalForm::FII => {
                if phi.iter().all(|&i| i <= 1) {
                    yes("F II: crosses within {alpha1, alpha2}")
                } else {
                    no("F II: a cross meets {alpha3, alpha4}")
                }
            }
            // Split exceptional forms are rejected above.
            _ => return Err(Error::TableInapplicable),
        },
        RealForm::SlR { .. } | RealForm::SpR { .. } => return Err(Error::TableInapplicable),
    };
    Ok(verdict)
}

/// Search for strictly positive rational diagonal metric weights making
/// every real characteristic Levi form trace-free. Returns None when no
/// diagonal certificate exists; this never overturns a verdict.
pub fn diagonal_certificate(
    spec: &CrSpec,
    rs: &RealStructure,
) -> Result<Option<Vec<(Vec<i64>, Rational)>>, Error> {
    let k = spec.holomorphic_index.len();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for &gamma in &spec.real_characteristic {
        let lm = levi_matrix(spec, rs, gamma)?;
        let mut row = vec![Rational::zero(); k];
        let mut nonzero = false;
        for i in 0..k {
            let d = lm.matrix.get(i, i);
            debug_assert!(d.im.is_zero());
            row[i] = d.re.clone();
            nonzero |= !row[i].is_zero();
        }
        if nonzero {
            rows.push(row);
        }
    }
    // Weights w = 1 + v with v >= 0: solve  A v = -A 1  exactly.
    let b: Vec<Rational> = rows
        .iter()
        .map(|row| -row.iter().cloned().sum::<Rational>())
        .collect();
    match solve_nonneg(&rows, &b) {
        None => Ok(None),
        Some(v) => {
            let weights = spec
                .holomorphic_index
                .iter()
                .enumerate()
                .map(|(i, &id)| {
                    let w = rat(1) + if i < v.len() { v[i].clone() } else { Rational::zero() };
                    (spec.system.coeffs(id).to_vec(), w)
                })
                .collect();
            Ok(Some(weights))
        }
    }
}

/// Shared per-run caches: root systems, structure constants, conjugations
/// and real structures, keyed by system label and form name.
#[derive(Default)]
pub struct Context {
    systems: HashMap<SystemLabel, Arc<RootSystem>>,
    constants: HashMap<SystemLabel, Arc<StructureConstants>>,
    conjugations: HashMap<String, Arc<Conjugation>>,
    structures: HashMap<String, Arc<RealStructure>>,
}

impl Context {
    pub fn new() -> Self {
        Context::default()
    }

    pub fn system(&mut self, diag: &SatakeDiagram) -> Result<Arc<RootSystem>, Error> {
        let label = diag.system_label();
        if let Some(s) = self.systems.get(&label) {
            return Ok(Arc::clone(s));
        }
        let sys = diag.build_system()?;
        self.systems.insert(label, Arc::clone(&sys));
        Ok(sys)
    }

    pub fn constants(&mut self, diag: &SatakeDiagram) -> Result<Arc<StructureConstants>, Error> {
        let label = diag.system_label();
        if let Some(c) = self.constants.get(&label) {
            return Ok(Arc::clone(c));
        }
        let sys = self.system(diag)?;
        let sc = Arc::new(build_constants(&sys));
        self.constants.insert(label, Arc::clone(&sc));
        Ok(sc)
    }

    pub fn conjugation(&mut self, diag: &SatakeDiagram) -> Result<Arc<Conjugation>, Error> {
        if let Some(c) = self.conjugations.get(&diag.name) {
            return Ok(Arc::clone(c));
        }
        let sys = self.system(diag)?;
        let c = Arc::new(conjugation(diag, &sys)?);
        self.conjugations.insert(diag.name.clone(), Arc::clone(&c));
        Ok(c)
    }

    pub fn real_structure(&mut self, diag: &SatakeDiagram) -> Result<Arc<RealStructure>, Error> {
        if let Some(r) = self.structures.get(&diag.name) {
            return Ok(Arc::clone(r));
        }
        let sys = self.system(diag)?;
        let sc = self.constants(diag)?;
        let conj = self.conjugation(diag)?;
        let rs = Arc::new(build_real_structure(diag, &sys, &sc, &conj)?);
        self.structures.insert(diag.name.clone(), Arc::clone(&rs));
        Ok(rs)
    }

    pub fn spec(&mut self, diag: &SatakeDiagram, phi: &BTreeSet<usize>) -> Result<CrSpec, Error> {
        let sys = self.system(diag)?;
        let conj = self.conjugation(diag)?;
        build_spec(diag, &sys, &conj, phi)
    }

    /// Classify one (form, Phi): real-root criterion when fundamental,
    /// otherwise the full criterion.
    pub fn classify(
        &mut self,
        diag: &SatakeDiagram,
        phi: &BTreeSet<usize>,
    ) -> Result<Verdict, Error> {
        let spec = self.spec(diag, phi)?;
        let rs = self.real_structure(diag)?;
        match decide_proposition(&spec, &rs) {
            Ok(v) => Ok(v),
            Err(Error::NotFundamental) => decide_lemma_iii(&spec, &rs),
            Err(e) => Err(e),
        }
    }
}

/// One harness row: a (form, Phi) pair with both decisions.
#[derive(Debug, Clone)]
pub struct CrossRow {
    pub form: String,
    pub real_type: String,
    pub phi: Vec<usize>,
    pub degenerate: bool,
    pub fundamental: bool,
    pub algorithmic: Option<Decision>,
    pub route: Option<Route>,
    pub table: Option<bool>,
    pub agree: Option<bool>,
    pub witness: Option<Witness>,
}

#[derive(Debug, Default, Clone, serde::Serialize)]
pub struct TypeSummary {
    pub forms: usize,
    pub pairs: usize,
    pub compared: usize,
    pub excluded: usize,
    pub disagreements: usize,
}

#[derive(Debug)]
pub struct CrossReport {
    pub max_rank: usize,
    pub rows: Vec<CrossRow>,
    pub disagreements: usize,
    pub summary: BTreeMap<String, TypeSummary>,
}

/// Run the algorithmic decision against the closed form over every catalog
/// form of complex rank <= max_rank and every cross set. Disagreements are
/// collected, not raised.
pub fn enumerate_and_crosscheck(max_rank: usize) -> Result<CrossReport, Error> {
    let mut ctx = Context::new();
    let mut rows = Vec::new();
    let mut summary: BTreeMap<String, TypeSummary> = BTreeMap::new();
    let mut disagreements = 0usize;
    for diag in catalog(max_rank) {
        if diag.base_rank > max_rank {
            continue;
        }
        let label = diag.type_label();
        let entry = summary.entry(label.clone()).or_default();
        entry.forms += 1;
        let nodes = diag.node_count();
        for mask in 0..(1usize << nodes) {
            let phi: BTreeSet<usize> = (0..nodes).filter(|i| mask & (1 << i) != 0).collect();
            let row = cross_check_row(&mut ctx, &diag, &phi)?;
            let entry = summary.entry(label.clone()).or_default();
            entry.pairs += 1;
            match row.agree {
                Some(true) => entry.compared += 1,
                Some(false) => {
                    entry.compared += 1;
                    entry.disagreements += 1;
                    disagreements += 1;
                }
                None => entry.excluded += 1,
            }
            rows.push(row);
        }
    }
    Ok(CrossReport {
        max_rank,
        rows,
        disagreements,
        summary,
    })
}

fn cross_check_row(
    ctx: &mut Context,
    diag: &SatakeDiagram,
    phi: &BTreeSet<usize>,
) -> Result<CrossRow, Error> {
    let spec = ctx.spec(diag, phi)?;
    if !spec.fundamental {
        // The closed-form classification assumes fundamentality, so such
        // pairs are reported excluded rather than compared. Split forms are
        // the canonical case (never fundamental for nonempty Phi); a few
        // other cross sets produce totally real orbits and land here too.
        debug_assert!(!diag.is_split() || !phi.is_empty());
        return Ok(CrossRow {
            form: diag.name.clone(),
            real_type: diag.type_label(),
            phi: spec.phi_display(),
            degenerate: spec.degenerate,
            fundamental: false,
            algorithmic: None,
            route: None,
            table: None,
            agree: None,
            witness: None,
        });
    }
    let rs = ctx.real_structure(diag)?;
    let verdict = match decide_proposition(&spec, &rs) {
        Ok(v) => v,
        Err(Error::NotFundamental) => decide_lemma_iii(&spec, &rs)?,
        Err(e) => return Err(e),
    };
    let (table, agree) = match closed_form_table(&spec) {
        Ok(t) => {
            let agree = t.pseudoconcave == verdict.decision.as_bool();
            (Some(t.pseudoconcave), Some(agree))
        }
        Err(Error::TableInapplicable) => (None, None),
        Err(e) => return Err(e),
    };
    Ok(CrossRow {
        form: diag.name.clone(),
        real_type: diag.type_label(),
        phi: verdict.phi.clone(),
        degenerate: verdict.degenerate,
        fundamental: verdict.fundamental,
        algorithmic: Some(verdict.decision),
        route: Some(verdict.route),
        table,
        agree,
        witness: verdict.witness,
    })
}

impl Verdict {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "algebra": self.algebra,
            "phi": self.phi,
            "degenerate": self.degenerate,
            "fundamental": self.fundamental,
            "decision": format!("{}", self.decision),
            "route": format!("{}", self.route),
            "per_gamma": self.per_gamma.iter().map(|g| {
                let mut v = json!({
                    "gamma": g.gamma,
                    "real": g.real,
                });
                if let Some((class, sig)) = &g.class {
                    v["class"] = json!(format!("{class}"));
                    v["signature"] = json!([sig.n_plus, sig.n_minus, sig.n_zero]);
                }
                if let Some(((rc, rs_), (ic, is_))) = &g.parts {
                    v["re_class"] = json!(format!("{rc}"));
                    v["re_signature"] = json!([rs_.n_plus, rs_.n_minus, rs_.n_zero]);
                    v["im_class"] = json!(format!("{ic}"));
                    v["im_signature"] = json!([is_.n_plus, is_.n_minus, is_.n_zero]);
                }
                v
            }).collect::<Vec<_>>(),
            "witness": self.witness.as_ref().map(|w| json!({
                "gamma": w.gamma,
                "class": format!("{}", w.class),
                "signature": [w.signature.n_plus, w.signature.n_minus, w.signature.n_zero],
                "part": w.part,
            })),
            "certificate": self.certificate.as_ref().map(|c| c.iter().map(|(root, w)| json!({
                "root": root,
                "weight": format_rational(w),
            })).collect::<Vec<_>>()),
        })
    }
}

impl CrossReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "max_rank": self.max_rank,
            "disagreements": self.disagreements,
            "summary": self.summary,
            "rows": self.rows.iter().map(|r| json!({
                "form": r.form,
                "real_type": r.real_type,
                "phi": r.phi,
                "degenerate": r.degenerate,
                "fundamental": r.fundamental,
                "decision_algorithmic": r.algorithmic.map(|d| format!("{d}")),
                "route": r.route.map(|x| format!("{x}")),
                "decision_table": r.table,
                "agree": r.agree,
                "witness": r.witness.as_ref().map(|w| json!({
                    "gamma": w.gamma,
                    "class": format!("{}", w.class),
                })),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("form,phi,decision_algorithmic,decision_table,agree\n");
        for r in &self.rows {
            let phi = r
                .phi
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            let alg = match r.algorithmic {
                Some(d) => format!("{d}"),
                None => "excluded:non-fundamental".into(),
            };
            let table = match r.table {
                Some(true) => "essentially-pseudoconcave".into(),
                Some(false) => "not-essentially-pseudoconcave".into(),
                None => "excluded".to_string(),
            };
            let agree = match r.agree {
                Some(b) => b.to_string(),
                None => String::new(),
            };
            out.push_str(&format!("{},{phi},{alg},{table},{agree}\n", r.form));
        }
        out
    }

    /// Plain-text per-type summary table.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "cross-validation up to rank {}: {} rows, {} disagreements\n",
            self.max_rank,
            self.rows.len(),
            self.disagreements
        ));
        out.push_str("real type        forms  pairs  compared  excluded  disagreements\n");
        for (label, s) in &self.summary {
            out.push_str(&format!(
                "{label:<16} {:>5}  {:>5}  {:>8}  {:>8}  {:>13}\n",
                s.forms, s.pairs, s.compared, s.excluded, s.disagreements
            ));
        }
        for r in self.rows.iter().filter(|r| r.agree == Some(false)) {
            out.push_str(&format!(
                "DISAGREEMENT: {} phi={:?} algorithmic={:?} table={:?}\n",
                r.form, r.phi, r.algorithmic, r.table
            ));
        }
        out
    }
}

/// Find a catalog entry by canonical name.
pub fn find_form<'a>(cat: &'a [SatakeDiagram], name: &str) -> Option<&'a SatakeDiagram> {
    cat.iter().find(|d| d.name == name)
}

/// Roots of the always-pseudoconcave real types never admit a
/// characteristic root of the form alpha + conj(alpha) with alpha in the
/// holomorphic index set; used as a structural sanity check.
pub fn always_list_has_no_diagonal_pairs(spec: &CrSpec) -> Result<bool, Error> {
    for &gamma in &spec.characteristic {
        for &alpha in &spec.holomorphic_index {
            let bar = spec.conj.conj_root(alpha);
            if spec.system.sum(alpha, bar) == Some(gamma) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

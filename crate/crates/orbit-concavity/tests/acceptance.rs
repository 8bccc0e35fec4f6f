#![allow(clippy::needless_range_loop)]

//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test -p orbit-concavity --test acceptance -- --nocapture`
//! to see the per-criterion lines and timings.

use orbit_concavity::chevalley::{build_constants, check_constant_properties, AlgebraElement};
use orbit_concavity::classifier::{
    always_list_has_no_diagonal_pairs, decide_lemma_iii, decide_proposition,
    enumerate_and_crosscheck, Context,
};
use orbit_concavity::leviform::build_real_structure;
use orbit_concavity::matrix::{hermitian_signature_exact, GMatrix};
use orbit_concavity::rootsys::{build_root_system, TypeLetter};
use orbit_concavity::satake::{catalog, conjugation, omega_set, RealForm, SatakeDiagram};
use orbit_concavity::scalar::{rat, ratio, Scalar};
use num_complex::Complex;
use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

fn find<'a>(cat: &'a [SatakeDiagram], name: &str) -> &'a SatakeDiagram {
    cat.iter()
        .find(|d| d.name == name)
        .unwrap_or_else(|| panic!("{name} not in catalog"))
}

fn omega_vectors(diag: &SatakeDiagram) -> Vec<Vec<i64>> {
    let sys = diag.build_system().unwrap();
    let conj = conjugation(diag, &sys).unwrap();
    omega_set(&conj)
        .into_iter()
        .map(|id| sys.coeffs(id).to_vec())
        .collect()
}

/// Criterion 1: the Omega fixtures.
#[test]
fn acceptance_1_omega_fixtures() {
    let start = Instant::now();
    let cat = catalog(5);
    let fixtures: Vec<(&str, Vec<Vec<i64>>)> = vec![
        ("su(1,3)", vec![vec![1, 1, 1]]),
        ("su(2,2)", vec![vec![1, 1, 1]]),
        ("su(1,4)", vec![vec![1, 1, 1, 1]]),
        ("su(2,3)", vec![vec![0, 1, 1, 0], vec![1, 1, 1, 1]]),
        ("sp(1,2)", vec![vec![1, 2, 1]]),
        ("sp(1,3)", vec![vec![1, 2, 2, 1]]),
    ];
    let mut failures = Vec::new();
    for (name, expected) in &fixtures {
        let got = omega_vectors(find(&cat, name));
        if got == *expected {
            println!("  omega {name}: ok");
        } else {
            println!("  omega {name}: expected {expected:?}, computed {got:?}");
            failures.push(name.to_string());
        }
    }
    println!(
        "criterion 1 (omega fixtures): {} [{:?}]",
        if failures.is_empty() { "PASS" } else { "FAIL" },
        start.elapsed()
    );
    assert!(
        failures.is_empty(),
        "omega fixtures differ from the published lists for {failures:?}; \
         the computed sets are forced by the conjugation (for su(p,p) the \
         restricted root system is C_p, so no root restricts to half a long \
         restricted root and no root satisfies alpha + conj(alpha) = gamma)"
    );
}

/// Criterion 2: the printed families of real roots of the form
/// alpha + conj(alpha).
#[test]
fn acceptance_2_gamma_families() {
    let start = Instant::now();
    let cat = catalog(8);

    // C IIa: gamma_h = a_{2h-1} + a_l + 2 sum_{i=2h}^{l-1} a_i, h = 1..p.
    for (p, q) in [(1usize, 2usize), (1, 3), (2, 3), (1, 4), (2, 4), (1, 5)] {
        let l = p + q;
        let name = format!("sp({p},{q})");
        let expected: Vec<Vec<i64>> = (1..=p)
            .map(|h| {
                let mut v = vec![0i64; l];
                v[2 * h - 2] += 1;
                v[l - 1] += 1;
                for i in 2 * h..=l - 1 {
                    v[i - 1] += 2;
                }
                v
            })
            .collect();
        let mut got = omega_vectors(find(&cat, &name));
        let mut want = expected.clone();
        got.sort();
        want.sort();
        assert_eq!(got, want, "{name}");
    }

    // E III: gamma_1 and gamma_2 (the highest root).
    let eiii = omega_vectors(find(&cat, "eIII"));
    assert_eq!(
        eiii,
        vec![vec![1, 0, 1, 1, 1, 1], vec![1, 2, 2, 3, 2, 1]],
        "eIII"
    );

    // F II: the single real root of this shape.
    assert_eq!(omega_vectors(find(&cat, "fII")), vec![vec![1, 2, 3, 2]]);

    // D IIIb: gamma_h = a_{2h-1} + a_{l-1} + a_l + 2 sum_{i=2h}^{l-2} a_i,
    // h = 1..(l-1)/2. The lower summation index is 2h: with lower index 1
    // the vectors are not even roots for h >= 2, which settles the choice.
    for l in [5usize, 7] {
        let name = format!("so*({})", 2 * l);
        let diag = find(&cat, &name);
        let sys = diag.build_system().unwrap();
        let p = (l - 1) / 2;
        let expected: Vec<Vec<i64>> = (1..=p)
            .map(|h| {
                let mut v = vec![0i64; l];
                v[2 * h - 2] += 1;
                v[l - 2] += 1;
                v[l - 1] += 1;
                for i in 2 * h..=l - 2 {
                    v[i - 1] += 2;
                }
                v
            })
            .collect();
        let mut got = omega_vectors(diag);
        let mut want = expected.clone();
        got.sort();
        want.sort();
        assert_eq!(got, want, "{name}");
        // The alternative reading (lower index 1) fails root membership.
        for h in 2..=p {
            let mut v = vec![0i64; l];
            v[2 * h - 2] += 1;
            v[l - 2] += 1;
            v[l - 1] += 1;
            for i in 1..=l - 2 {
                v[i - 1] += 2;
            }
            assert!(sys.root_id(&v).is_none());
        }
    }
    println!("criterion 2 (gamma families): PASS [{:?}]", start.elapsed());
}

/// Criterion 3: exhaustive structure-constant properties for every system
/// of rank <= 8, plus the string-pairing identity.
#[test]
fn acceptance_3_chevalley_suite() {
    let start = Instant::now();
    let mut systems: Vec<(TypeLetter, usize)> = Vec::new();
    for r in 1..=8 {
        systems.push((TypeLetter::A, r));
    }
    for r in 2..=8 {
        systems.push((TypeLetter::B, r));
    }
    for r in 3..=8 {
        systems.push((TypeLetter::C, r));
    }
    for r in 4..=8 {
        systems.push((TypeLetter::D, r));
    }
    for r in 6..=8 {
        systems.push((TypeLetter::E, r));
    }
    systems.push((TypeLetter::F, 4));
    systems.push((TypeLetter::G, 2));
    for (letter, rank) in systems {
        let t = Instant::now();
        let sys = build_root_system(letter, rank).unwrap();
        // String-pairing identity, exhaustively.
        for a in sys.root_ids() {
            for b in sys.root_ids() {
                if b == a || b == sys.neg(a) {
                    continue;
                }
                let (p, q) = sys.root_string(a, b).unwrap();
                assert_eq!(q - p, sys.pairing(b, a), "{letter:?}{rank}");
            }
        }
        let sc = build_constants(&sys);
        check_constant_properties(&sc).unwrap_or_else(|e| panic!("{letter:?}{rank}: {e}"));
        println!("  {letter:?}{rank}: ok [{:?}]", t.elapsed());
    }
    println!("criterion 3 (chevalley suite): PASS [{:?}]", start.elapsed());
}

/// Criterion 4: conjugation and real-structure suite over the whole catalog.
#[test]
fn acceptance_4_conjugation_suite() {
    let start = Instant::now();
    let mut ctx = Context::new();
    for diag in catalog(8) {
        let sys = ctx.system(&diag).unwrap();
        let conj = ctx.conjugation(&diag).unwrap();
        // sigma* involution permuting the roots, painted set negated.
        for id in sys.root_ids() {
            assert_eq!(conj.conj_root(conj.conj_root(id)), id, "{}", diag.name);
        }
        for &b in &diag.black {
            let simple = sys.simple(b);
            assert_eq!(conj.conj_root(simple), sys.neg(simple), "{}", diag.name);
        }
        // Positive roots with white support stay positive; the compact set
        // is exactly the painted subsystem.
        for id in sys.positive_ids() {
            let white_supported = sys
                .coeffs(id)
                .iter()
                .enumerate()
                .any(|(i, &c)| c != 0 && !diag.black.contains(&i));
            if white_supported {
                assert!(sys.is_positive(conj.conj_root(id)), "{}", diag.name);
                assert!(!conj.is_compact_root(id), "{}", diag.name);
            } else {
                assert!(conj.is_compact_root(id), "{}", diag.name);
            }
        }
        let constants = ctx.constants(&diag).unwrap();
        let rs = ctx.real_structure(&diag).unwrap();
        assert_eq!(rs.theta_fixed_dim, diag.dim_k, "{}", diag.name);
        // Re-check the constraints through the public accessors.
        for id in sys.root_ids() {
            if conj.is_compact_root(id) {
                assert_eq!(rs.c(id), orbit_concavity::scalar::Unit::One, "{}", diag.name);
            }
            let bar = conj.conj_root(id);
            assert_eq!(
                rs.c(id).conj() * rs.c(bar),
                orbit_concavity::scalar::Unit::One,
                "{}",
                diag.name
            );
        }
        for a in sys.root_ids() {
            for b in sys.root_ids() {
                if b == sys.neg(a) || sys.sum(a, b).is_none() {
                    continue;
                }
                let s = sys.sum(a, b).unwrap();
                let lhs = rs.c(s).to_scalar() * Scalar::from(rat(constants.n(a, b)));
                let rhs = rs.c(a).to_scalar()
                    * rs.c(b).to_scalar()
                    * Scalar::from(rat(constants.n(conj.conj_root(a), conj.conj_root(b))));
                assert_eq!(lhs, rhs, "{} multiplicativity at ({a:?},{b:?})", diag.name);
            }
        }
        println!("  {}: ok (theta dim {})", diag.name, rs.theta_fixed_dim);
    }
    println!(
        "criterion 4 (conjugation suite): PASS [{:?}]",
        start.elapsed()
    );
}

/// Criterion 5: the bracket-chain identity
/// [X_{a+b}, conj X_{a+b}] = (p - p'(1+q')) [X_b, conj X_b]
/// for compact a, with (p, q') read from the a-strings through b and
/// b + conj(b).
#[test]
fn acceptance_5_bracket_chain_formula() {
    let start = Instant::now();
    let cat = catalog(6);
    let mut ctx = Context::new();
    for name in ["su(2,3)", "sp(1,2)", "sp(1,3)", "fII"] {
        let diag = find(&cat, name);
        let sys = ctx.system(diag).unwrap();
        let conj = ctx.conjugation(diag).unwrap();
        let sc = ctx.constants(diag).unwrap();
        let rs = ctx.real_structure(diag).unwrap();
        let rank = sys.rank();
        let mut checked = 0usize;
        for alpha in sys.root_ids() {
            if !conj.is_compact_root(alpha) {
                continue;
            }
            for beta in sys.root_ids() {
                let Some(apb) = sys.sum(alpha, beta) else {
                    continue;
                };
                // alpha - beta must not be a root.
                let diff: Vec<i64> = sys
                    .coeffs(alpha)
                    .iter()
                    .zip(sys.coeffs(beta))
                    .map(|(x, y)| x - y)
                    .collect();
                if sys.root_id(&diff).is_some() {
                    continue;
                }
                let bbar = conj.conj_root(beta);
                let Some(breal) = sys.sum(beta, bbar) else {
                    continue;
                };
                let (p, _) = sys.root_string(alpha, beta).unwrap();
                let (_, q2) = sys.root_string(alpha, breal).unwrap();
                let (p2, _) = sys.root_string(alpha, breal).unwrap();
                let factor = p - p2 * (1 + q2);
                let x_ab = AlgebraElement::root_vector(rank, apb);
                let x_b = AlgebraElement::root_vector(rank, beta);
                let lhs = sc.bracket(&x_ab, &rs.sigma(&x_ab));
                let rhs = sc
                    .bracket(&x_b, &rs.sigma(&x_b))
                    .scale(&Scalar::from(rat(factor)));
                assert_eq!(lhs, rhs, "{name}: alpha {alpha:?}, beta {beta:?}");
                checked += 1;
            }
        }
        println!("  {name}: {checked} admissible pairs verified");
    }
    println!(
        "criterion 5 (bracket-chain formula): PASS [{:?}]",
        start.elapsed()
    );
}

/// Criterion 6: endpoint checks and the always-pseudoconcave list.
#[test]
fn acceptance_6_endpoints() {
    let start = Instant::now();
    let cat = catalog(6);
    let mut ctx = Context::new();
    let classify = |ctx: &mut Context, name: &str, phi_nodes: &[usize]| {
        let diag = find(&cat, name);
        let phi: BTreeSet<usize> = phi_nodes.iter().map(|&i| i - 1).collect();
        ctx.classify(diag, &phi).unwrap()
    };

    let v = classify(&mut ctx, "fII", &[1]);
    assert!(v.decision.as_bool());
    let v = classify(&mut ctx, "fII", &[3]);
    assert!(!v.decision.as_bool());
    assert_eq!(v.witness.as_ref().unwrap().signature.rank(), 1);

    let v = classify(&mut ctx, "eIII", &[3]);
    assert!(!v.decision.as_bool());
    let w = v.witness.as_ref().unwrap();
    assert_eq!(w.gamma, vec![1, 2, 2, 3, 2, 1]);
    assert_eq!(w.signature.rank(), 1);

    let v = classify(&mut ctx, "su(1,3)", &[2]);
    assert!(v.decision.as_bool());
    let v = classify(&mut ctx, "su(1,3)", &[1]);
    assert!(!v.decision.as_bool());

    // The singled-out exceptional conditions.
    assert!(classify(&mut ctx, "eIII", &[3, 5]).decision.as_bool());
    assert!(classify(&mut ctx, "eIII", &[3, 4]).decision.as_bool());
    assert!(!classify(&mut ctx, "eIII", &[4, 6]).decision.as_bool());
    assert!(classify(&mut ctx, "so*(10)", &[3]).decision.as_bool());
    assert!(!classify(&mut ctx, "so*(10)", &[5]).decision.as_bool());
    assert!(classify(&mut ctx, "sp(1,2)", &[1]).decision.as_bool());
    assert!(!classify(&mut ctx, "sp(1,3)", &[1, 3]).decision.as_bool());
    println!("  endpoint fixtures: ok");

    // The always-pseudoconcave list at rank <= 6: every cross set decides
    // positive, and no characteristic root has a diagonal pair.
    let always: Vec<&SatakeDiagram> = cat
        .iter()
        .filter(|d| !d.is_split())
        .filter(|d| {
            matches!(d.form, RealForm::Compact | RealForm::ComplexType)
                || matches!(
                    d.type_label().as_str(),
                    "A II" | "A IIIb" | "B I" | "B II" | "C IIb" | "D Ia" | "D Ib" | "D II"
                        | "D IIIa" | "E II" | "E IV"
                )
        })
        .collect();
    let mut pairs = 0usize;
    let mut skipped = 0usize;
    for diag in always {
        let nodes = diag.node_count();
        for mask in 0..(1usize << nodes) {
            let phi: BTreeSet<usize> = (0..nodes).filter(|i| mask & (1 << i) != 0).collect();
            let spec = ctx.spec(diag, &phi).unwrap();
            // The structural reason holds for every cross set: no
            // characteristic root is alpha + conj(alpha) with alpha in the
            // holomorphic index set.
            assert!(
                always_list_has_no_diagonal_pairs(&spec).unwrap(),
                "{} phi {:?}",
                diag.name,
                spec.phi_display()
            );
            // The classification claim itself presumes fundamentality.
            if !spec.fundamental {
                skipped += 1;
                continue;
            }
            let v = ctx.classify(diag, &phi).unwrap();
            assert!(
                v.decision.as_bool(),
                "{} phi {:?} decided negative",
                diag.name,
                spec.phi_display()
            );
            pairs += 1;
        }
    }
    println!(
        "  always-list at rank <= 6: {pairs} fundamental cross sets all \
         positive ({skipped} non-fundamental checked structurally)"
    );
    println!("criterion 6 (endpoints): PASS [{:?}]", start.elapsed());
}

/// Criterion 7: the full cross-validation harness at rank 6.
#[test]
fn acceptance_7_theorem_reproduction() {
    let start = Instant::now();
    let report = enumerate_and_crosscheck(6).unwrap();
    print!("{}", report.to_text());
    assert_eq!(report.disagreements, 0);
    // Split forms appear only as excluded, non-fundamental rows.
    for row in &report.rows {
        let diag_split = row.real_type == "A I"
            || row.real_type == "C I"
            || row.real_type == "D Ic"
            || row.real_type == "E I"
            || row.real_type == "F I"
            || row.real_type == "G"
            || (row.real_type == "B I" && row.form.starts_with("so(") && is_split_so(&row.form));
        if diag_split && !row.phi.is_empty() {
            assert!(row.agree.is_none(), "{} {:?}", row.form, row.phi);
            assert!(!row.fundamental);
        }
        if row.agree.is_none() && !row.degenerate && row.algorithmic.is_none() {
            assert!(!row.fundamental, "{} {:?}", row.form, row.phi);
        }
    }
    println!(
        "criterion 7 (theorem reproduction, rank 6): PASS [{:?}]",
        start.elapsed()
    );
}

fn is_split_so(name: &str) -> bool {
    // so(l, l+1) is the split odd orthogonal algebra.
    let inner = name.trim_start_matches("so(").trim_end_matches(')');
    let parts: Vec<usize> = inner.split(',').filter_map(|p| p.parse().ok()).collect();
    parts.len() == 2 && parts[1] == parts[0] + 1
}

/// Criterion 8: the real-root criterion agrees with the full criterion on
/// every fundamental cross-marked diagram of rank <= 5.
#[test]
fn acceptance_8_proposition_lemma_agreement() {
    let start = Instant::now();
    let mut ctx = Context::new();
    let mut compared = 0usize;
    for diag in catalog(5) {
        let nodes = diag.node_count();
        let rs = ctx.real_structure(&diag).unwrap();
        for mask in 0..(1usize << nodes) {
            let phi: BTreeSet<usize> = (0..nodes).filter(|i| mask & (1 << i) != 0).collect();
            let spec = ctx.spec(&diag, &phi).unwrap();
            if !spec.fundamental {
                continue;
            }
            let a = decide_proposition(&spec, &rs).unwrap();
            let b = decide_lemma_iii(&spec, &rs).unwrap();
            assert_eq!(
                a.decision, b.decision,
                "{} phi {:?}",
                diag.name,
                spec.phi_display()
            );
            compared += 1;
        }
    }
    println!("  {compared} fundamental cross sets agree on both routes");
    println!(
        "criterion 8 (criterion agreement, rank 5): PASS [{:?}]",
        start.elapsed()
    );
}

/// Criterion 9: exact signatures against a floating-point eigenvalue
/// cross-check on 1000 random Hermitian matrices.
#[test]
fn acceptance_9_signature_oracle() {
    let start = Instant::now();
    let mut rng = XorShift64(0x9e3779b97f4a7c15);
    for trial in 0..1000 {
        let n = 1 + (rng.next() as usize) % 8;
        let m = random_hermitian(&mut rng, n);
        let exact = hermitian_signature_exact(&m).unwrap();
        let (fp, fm, fz) = float_signature(&m);
        assert_eq!(
            (exact.n_plus, exact.n_minus, exact.n_zero),
            (fp, fm, fz),
            "trial {trial}, size {n}"
        );
    }
    println!(
        "criterion 9 (signature oracle, 1000 matrices): PASS [{:?}]",
        start.elapsed()
    );
}

struct XorShift64(u64);

impl XorShift64 {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn small(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % ((hi - lo + 1) as u64)) as i64
    }
}

fn random_hermitian(rng: &mut XorShift64, n: usize) -> GMatrix {
    let mut m = GMatrix::zero(n);
    for i in 0..n {
        let den = rng.small(1, 4);
        m.set(i, i, Complex::new(ratio(rng.small(-9, 9), den), rat(0)));
        for j in i + 1..n {
            let den_re = rng.small(1, 4);
            let den_im = rng.small(1, 4);
            let v = Complex::new(
                ratio(rng.small(-9, 9), den_re),
                ratio(rng.small(-9, 9), den_im),
            );
            m.set(i, j, v.clone());
            m.set(j, i, v.conj());
        }
    }
    m
}

/// Brute-force floating eigenvalue signature via cyclic Jacobi on the real
/// symmetric embedding [[Re, -Im], [Im, Re]]; eigenvalues come in pairs.
fn float_signature(m: &GMatrix) -> (usize, usize, usize) {
    let n = m.size();
    let dim = 2 * n;
    let mut a = vec![vec![0f64; dim]; dim];
    let to_f = |r: &orbit_concavity::scalar::Rational| -> f64 {
        let num: f64 = r.numer().to_string().parse().unwrap();
        let den: f64 = r.denom().to_string().parse().unwrap();
        num / den
    };
    for i in 0..n {
        for j in 0..n {
            let e = m.get(i, j);
            let re = to_f(&e.re);
            let im = to_f(&e.im);
            a[i][j] = re;
            a[n + i][n + j] = re;
            a[i][n + j] = -im;
            a[n + i][j] = im;
        }
    }
    // Cyclic Jacobi rotations.
    for _sweep in 0..100 {
        let mut off = 0f64;
        for p in 0..dim {
            for q in p + 1..dim {
                off += a[p][q] * a[p][q];
            }
        }
        if off < 1e-24 {
            break;
        }
        for p in 0..dim {
            for q in p + 1..dim {
                if a[p][q].abs() < 1e-15 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..dim {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..dim {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut plus = 0usize;
    let mut minus = 0usize;
    let mut zero = 0usize;
    for i in 0..dim {
        let lambda = a[i][i];
        if lambda > 1e-9 {
            plus += 1;
        } else if lambda < -1e-9 {
            minus += 1;
        } else {
            zero += 1;
        }
    }
    assert_eq!(plus % 2 + minus % 2 + zero % 2, 0, "doubled spectrum");
    (plus / 2, minus / 2, zero / 2)
}

/// Root-system level sanity shared by several criteria: counts and the
/// membership index agree with the classical tables.
#[test]
fn acceptance_root_counts() {
    use orbit_concavity::rootsys::classical_root_count;
    for (letter, ranks) in [
        (TypeLetter::A, 1..=8),
        (TypeLetter::B, 2..=8),
        (TypeLetter::C, 3..=8),
        (TypeLetter::D, 4..=8),
        (TypeLetter::E, 6..=8),
        (TypeLetter::F, 4..=4),
        (TypeLetter::G, 2..=2),
    ] {
        for rank in ranks {
            let sys = build_root_system(letter, rank).unwrap();
            assert_eq!(sys.n_roots(), classical_root_count(letter, rank));
            for id in sys.root_ids() {
                let c = sys.coeffs(id);
                assert!(c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0));
                assert_eq!(sys.root_id(c), Some(id));
            }
        }
    }
}

/// The catalog covers each family within the bound; spot checks.
#[test]
fn acceptance_catalog_coverage() {
    let cat = catalog(8);
    for name in [
        "sl(9,R)",
        "su*(8)",
        "su(4,5)",
        "so(8,9)",
        "sp(8,R)",
        "sp(4,4)",
        "so(1,15)",
        "so*(16)",
        "eI",
        "eII",
        "eIII",
        "eIV",
        "eV",
        "eVI",
        "eVII",
        "eVIII",
        "eIX",
        "fI",
        "fII",
        "g",
        "compact-e8",
        "complex-e8",
    ] {
        assert!(cat.iter().any(|d| d.name == name), "{name} missing");
    }
}

/// Make a doubled system visible in the acceptance output: the complex-type
/// real structure exists and validates at rank 8 (part of criterion 4's
/// coverage, kept separate because the doubled system is the largest build).
#[test]
fn acceptance_complex_e8_structure() {
    let start = Instant::now();
    let cat = catalog(8);
    let diag = find(&cat, "complex-e8");
    let sys = diag.build_system().unwrap();
    assert_eq!(sys.n_roots(), 480);
    let conj = Arc::new(conjugation(diag, &sys).unwrap());
    let sc = Arc::new(build_constants(&sys));
    let rs = build_real_structure(diag, &sys, &sc, &conj).unwrap();
    assert_eq!(rs.theta_fixed_dim, 248);
    println!("complex-e8 structure: PASS [{:?}]", start.elapsed());
}

/// Verdicts are invariant under diagram automorphisms commuting with the
/// Satake data.
#[test]
fn acceptance_automorphism_invariance() {
    let mut ctx = Context::new();
    let cat = catalog(6);
    // su(2,2): the flip (1 3) commutes with the arrows.
    let diag = find(&cat, "su(2,2)");
    let flip = |phi: &BTreeSet<usize>| -> BTreeSet<usize> {
        phi.iter().map(|&i| 2 - i).collect()
    };
    for mask in 0..8usize {
        let phi: BTreeSet<usize> = (0..3).filter(|i| mask & (1 << i) != 0).collect();
        let a = ctx.classify(diag, &phi).unwrap();
        let b = ctx.classify(diag, &flip(&phi)).unwrap();
        assert_eq!(a.decision, b.decision, "phi {phi:?}");
    }
    // so(2,6): the fork swap preserves the painted set.
    let diag = find(&cat, "so(2,6)");
    let swap_fork = |phi: &BTreeSet<usize>| -> BTreeSet<usize> {
        phi.iter()
            .map(|&i| match i {
                2 => 3,
                3 => 2,
                other => other,
            })
            .collect()
    };
    for mask in 0..16usize {
        let phi: BTreeSet<usize> = (0..4).filter(|i| mask & (1 << i) != 0).collect();
        let a = ctx.classify(diag, &phi).unwrap();
        let b = ctx.classify(diag, &swap_fork(&phi)).unwrap();
        assert_eq!(a.decision, b.decision, "phi {phi:?}");
    }
}

//! Dense matrices over the Gaussian rationals and exact Hermitian signatures.
//!
//! The signature routine uses congruence diagonalization (symmetric Gaussian
//! elimination with hyperbolic repair of zero diagonals), which by Sylvester's
//! law of inertia yields the exact eigenvalue sign counts without ever leaving
//! exact arithmetic. A characteristic-polynomial route is kept alongside as an
//! independent oracle for tests.

use crate::error::Error;
use crate::scalar::{is_real, rat, real, sign, Rational, Scalar};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GMatrix {
    n: usize,
    data: Vec<Scalar>,
}

impl GMatrix {
    pub fn zero(n: usize) -> Self {
        GMatrix {
            n,
            data: vec![Scalar::zero(); n * n],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.n + j] = v;
    }

    pub fn adjoint(&self) -> GMatrix {
        let mut out = GMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, self.get(j, i).conj());
            }
        }
        out
    }

    pub fn is_hermitian(&self) -> bool {
        for i in 0..self.n {
            for j in i..self.n {
                if *self.get(i, j) != self.get(j, i).conj() {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn scale(&self, by: &Scalar) -> GMatrix {
        GMatrix {
            n: self.n,
            data: self.data.iter().map(|v| v.clone() * by.clone()).collect(),
        }
    }

    pub fn add(&self, other: &GMatrix) -> GMatrix {
        assert_eq!(self.n, other.n);
        GMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &GMatrix) -> GMatrix {
        assert_eq!(self.n, other.n);
        GMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    /// Hermitian and skew parts: (M + M*)/2 and (M - M*)/(2i), both Hermitian.
    pub fn hermitian_parts(&self) -> (GMatrix, GMatrix) {
        let adj = self.adjoint();
        let half = real(crate::scalar::ratio(1, 2));
        // 1/(2i) = -i/2
        let half_over_i = Scalar::new(Rational::zero(), crate::scalar::ratio(-1, 2));
        let re = self.add(&adj).scale(&half);
        let im = self.sub(&adj).scale(&half_over_i);
        (re, im)
    }

    pub fn rank_of_signature(sig: &Signature) -> usize {
        sig.n_plus + sig.n_minus
    }
}

/// Exact eigenvalue sign counts of a Hermitian form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Signature {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Signature {
    pub fn dimension(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }

    pub fn rank(&self) -> usize {
        self.n_plus + self.n_minus
    }

    pub fn class(&self) -> FormClass {
        if self.n_plus == 0 && self.n_minus == 0 {
            FormClass::Zero
        } else if self.n_plus >= 1 && self.n_minus >= 1 {
            FormClass::Indefinite
        } else if self.n_minus == 0 {
            FormClass::SemidefinitePositive
        } else {
            FormClass::SemidefiniteNegative
        }
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.n_plus, self.n_minus, self.n_zero)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum FormClass {
    Zero,
    Indefinite,
    SemidefinitePositive,
    SemidefiniteNegative,
}

impl FormClass {
    /// Zero-or-indefinite is the acceptable shape for a trace-free metric.
    pub fn admissible(self) -> bool {
        matches!(self, FormClass::Zero | FormClass::Indefinite)
    }
}

impl std::fmt::Display for FormClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FormClass::Zero => "zero",
            FormClass::Indefinite => "indefinite",
            FormClass::SemidefinitePositive => "semidefinite-positive",
            FormClass::SemidefiniteNegative => "semidefinite-negative",
        };
        write!(f, "{s}")
    }
}

/// Exact signature of a Hermitian matrix by congruence diagonalization.
pub fn hermitian_signature_exact(m: &GMatrix) -> Result<Signature, Error> {
    if !m.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let n = m.size();
    let mut a = m.clone();
    let mut n_plus = 0usize;
    let mut n_minus = 0usize;
    let mut i = 0usize;
    while i < n {
        if a.get(i, i).is_zero() {
            // Try to bring a nonzero diagonal entry into position i.
            if let Some(k) = (i + 1..n).find(|&k| !a.get(k, k).is_zero()) {
                swap_row_col(&mut a, i, k);
            } else if let Some((j, k)) = find_offdiag(&a, i) {
                // All remaining diagonal entries vanish; repair with the
                // hyperbolic trick: row_j += a*row_k (and conjugate on
                // columns) makes the (j,j) entry 2|a|^2 > 0.
                let v = a.get(j, k).clone();
                add_row_col(&mut a, j, k, &v);
                if j != i {
                    swap_row_col(&mut a, i, j);
                }
            } else {
                // Remaining block is identically zero.
                break;
            }
        }
        let pivot = a.get(i, i).clone();
        debug_assert!(is_real(&pivot), "Hermitian diagonal must be real");
        match sign(&pivot.re) {
            1 => n_plus += 1,
            -1 => n_minus += 1,
            _ => unreachable!("pivot chosen nonzero"),
        }
        for j in i + 1..n {
            if a.get(j, i).is_zero() {
                continue;
            }
            let factor = a.get(j, i).clone() / pivot.clone();
            sub_row_col(&mut a, j, i, &factor);
        }
        i += 1;
    }
    Ok(Signature {
        n_plus,
        n_minus,
        n_zero: n - n_plus - n_minus,
    })
}

fn swap_row_col(a: &mut GMatrix, i: usize, k: usize) {
    let n = a.size();
    for j in 0..n {
        let x = a.get(i, j).clone();
        let y = a.get(k, j).clone();
        a.set(i, j, y);
        a.set(k, j, x);
    }
    for j in 0..n {
        let x = a.get(j, i).clone();
        let y = a.get(j, k).clone();
        a.set(j, i, y);
        a.set(j, k, x);
    }
}

/// row_j += t * row_k, then col_j += conj(t) * col_k.
fn add_row_col(a: &mut GMatrix, j: usize, k: usize, t: &Scalar) {
    let n = a.size();
    for c in 0..n {
        let v = a.get(j, c).clone() + t.clone() * a.get(k, c).clone();
        a.set(j, c, v);
    }
    let tc = t.conj();
    for r in 0..n {
        let v = a.get(r, j).clone() + tc.clone() * a.get(r, k).clone();
        a.set(r, j, v);
    }
}

/// row_j -= t * row_i, then col_j -= conj(t) * col_i.
fn sub_row_col(a: &mut GMatrix, j: usize, i: usize, t: &Scalar) {
    let n = a.size();
    for c in 0..n {
        let v = a.get(j, c).clone() - t.clone() * a.get(i, c).clone();
        a.set(j, c, v);
    }
    let tc = t.conj();
    for r in 0..n {
        let v = a.get(r, j).clone() - tc.clone() * a.get(r, i).clone();
        a.set(r, j, v);
    }
}

fn find_offdiag(a: &GMatrix, from: usize) -> Option<(usize, usize)> {
    let n = a.size();
    for j in from..n {
        for k in j + 1..n {
            if !a.get(j, k).is_zero() {
                return Some((j, k));
            }
        }
    }
    None
}

/// Characteristic polynomial of a Hermitian matrix via Faddeev-LeVerrier.
/// Returns coefficients of det(xI - M), lowest degree first; for Hermitian
/// input all coefficients are real rationals.
pub fn charpoly_hermitian(m: &GMatrix) -> Result<Vec<Rational>, Error> {
    if !m.is_hermitian() {
        return Err(Error::NotHermitian);
    }
    let n = m.size();
    // c[n] = 1; M_1 = M; c_{n-k} = -tr(M A_{k-1} ... ) standard recurrence.
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut aux = identity(n);
    for k in 1..=n {
        let prod = mat_mul(m, &aux);
        let t = trace(&prod);
        debug_assert!(t.im.is_zero());
        let c = -t.re / rat(k as i64);
        coeffs[n - k] = c.clone();
        aux = prod;
        for i in 0..n {
            let v = aux.get(i, i).clone() + real(c.clone());
            aux.set(i, i, v);
        }
    }
    Ok(coeffs)
}

/// Signature from the characteristic polynomial of a Hermitian matrix:
/// all roots are real, so Descartes' rule of signs is exact.
pub fn signature_from_charpoly(coeffs: &[Rational]) -> Signature {
    let n = coeffs.len() - 1;
    let n_zero = coeffs.iter().take_while(|c| c.is_zero()).count();
    let reduced: Vec<&Rational> = coeffs[n_zero..].iter().filter(|c| !c.is_zero()).collect();
    let mut n_plus = 0usize;
    for w in reduced.windows(2) {
        if sign(w[0]) != sign(w[1]) {
            n_plus += 1;
        }
    }
    let n_minus = n - n_zero - n_plus;
    Signature {
        n_plus,
        n_minus,
        n_zero,
    }
}

fn identity(n: usize) -> GMatrix {
    let mut m = GMatrix::zero(n);
    for i in 0..n {
        m.set(i, i, Scalar::one());
    }
    m
}

fn mat_mul(a: &GMatrix, b: &GMatrix) -> GMatrix {
    let n = a.size();
    let mut out = GMatrix::zero(n);
    for i in 0..n {
        for k in 0..n {
            let aik = a.get(i, k);
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                let v = out.get(i, j).clone() + aik.clone() * b.get(k, j).clone();
                out.set(i, j, v);
            }
        }
    }
    out
}

fn trace(a: &GMatrix) -> Scalar {
    let mut t = Scalar::zero();
    for i in 0..a.size() {
        t += a.get(i, i).clone();
    }
    t
}

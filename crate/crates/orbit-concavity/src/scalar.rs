//! Exact scalars: rationals extended by the imaginary unit.
//!
//! Everything downstream of the root combinatorics (conjugation constants,
//! Levi form entries, Killing values) lives in the Gaussian rationals
//! `Q(i)`, represented as `Complex<Ratio<BigInt>>`. No floating point enters
//! any decision path.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Rational = Ratio<BigInt>;
pub type Scalar = Complex<Rational>;

pub fn rat(n: i64) -> Rational {
    Ratio::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

pub fn real(r: Rational) -> Scalar {
    Complex::new(r, Rational::zero())
}

pub fn gauss(re: i64, im: i64) -> Scalar {
    Complex::new(rat(re), rat(im))
}

pub fn is_real(s: &Scalar) -> bool {
    s.im.is_zero()
}

/// Sign of a rational: -1, 0 or +1.
pub fn sign(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn format_scalar(s: &Scalar) -> String {
    if s.im.is_zero() {
        format_rational(&s.re)
    } else if s.re.is_zero() {
        format!("{}i", format_rational(&s.im))
    } else if s.im.is_positive() {
        format!("{}+{}i", format_rational(&s.re), format_rational(&s.im))
    } else {
        format!("{}{}i", format_rational(&s.re), format_rational(&s.im))
    }
}

/// A fourth root of unity. The conjugation constants c_alpha take values
/// here, and unit arithmetic stays in this closed set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    One,
    MinusOne,
    I,
    MinusI,
}

impl std::ops::Mul for Unit {
    type Output = Unit;

    fn mul(self, other: Unit) -> Unit {
        Unit::from_exponent((self.exponent() + other.exponent()) % 4)
    }
}

impl std::ops::Neg for Unit {
    type Output = Unit;

    fn neg(self) -> Unit {
        self * Unit::MinusOne
    }
}

impl Unit {
    pub fn conj(self) -> Unit {
        use Unit::*;
        match self {
            I => MinusI,
            MinusI => I,
            u => u,
        }
    }

    pub fn inv(self) -> Unit {
        self.conj()
    }

    /// Multiply by an integer known to be +-1.
    pub fn mul_sign(self, s: i64) -> Unit {
        debug_assert!(s == 1 || s == -1);
        if s == 1 {
            self
        } else {
            -self
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, Unit::One | Unit::MinusOne)
    }

    fn exponent(self) -> u8 {
        match self {
            Unit::One => 0,
            Unit::I => 1,
            Unit::MinusOne => 2,
            Unit::MinusI => 3,
        }
    }

    fn from_exponent(e: u8) -> Unit {
        match e % 4 {
            0 => Unit::One,
            1 => Unit::I,
            2 => Unit::MinusOne,
            _ => Unit::MinusI,
        }
    }

    pub fn to_scalar(self) -> Scalar {
        match self {
            Unit::One => gauss(1, 0),
            Unit::MinusOne => gauss(-1, 0),
            Unit::I => gauss(0, 1),
            Unit::MinusI => gauss(0, -1),
        }
    }
}

impl std::fmt::Display for Unit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Unit::One => "1",
            Unit::MinusOne => "-1",
            Unit::I => "i",
            Unit::MinusI => "-i",
        };
        write!(f, "{s}")
    }
}

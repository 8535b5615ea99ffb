use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::complex::{Cplx, C64};
use super::Rational;

/// Ring-like scalar used by the polynomial kernels and the curve machinery.
///
/// Constants are produced with [`Scalar::lift`] from an existing value so that
/// float types inherit the precision of the data they are combined with.
pub trait Scalar:
    Clone
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// True when equality and zero tests are exact.
    const EXACT: bool;

    fn lift(&self, r: &Rational) -> Self;

    fn is_zero(&self) -> bool;

    fn inv(&self) -> Option<Self>;

    fn conj(&self) -> Self;

    fn to_c64(&self) -> C64;

    fn lift_i(&self, n: i64) -> Self {
        self.lift(&Rational::from_integer(BigInt::from(n)))
    }

    fn zero_like(&self) -> Self {
        self.lift_i(0)
    }

    fn one_like(&self) -> Self {
        self.lift_i(1)
    }

    fn abs_f64(&self) -> f64 {
        self.to_c64().norm()
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }

    fn pow(&self, n: u32) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Real scalars: adds square roots, sign and the complex root helpers used by
/// [`Cplx`].
pub trait RealField: Scalar {
    /// Square root of a nonnegative value when it is representable.
    fn sqrt(&self) -> Option<Self>;

    fn to_f64(&self) -> f64;

    /// Sign as -1, 0 or 1. Exact for exact types.
    fn signum_i(&self) -> i32;

    /// Cosine and sine, only for float types.
    fn cos_sin(&self) -> Option<(Self, Self)> {
        None
    }

    /// A value of the same kind approximating `x` (used for Newton seeds).
    fn approx_like(&self, x: f64) -> Option<Self> {
        Rational::from_float(x).map(|r| self.lift(&r))
    }

    /// Working precision in bits, `None` for exact kinds.
    fn precision_bits(&self) -> Option<usize> {
        None
    }

    fn abs_r(&self) -> Self {
        if self.signum_i() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Principal square root of `re + i im`, if representable.
    fn cplx_sqrt(re: &Self, im: &Self) -> Option<(Self, Self)> {
        generic_cplx_sqrt(re, im)
    }

    /// Some cube root of `re + i im`, if representable.
    fn cplx_cbrt(re: &Self, im: &Self) -> Option<(Self, Self)> {
        newton_cplx_cbrt(re, im)
    }
}

pub(crate) fn generic_cplx_sqrt<R: RealField>(re: &R, im: &R) -> Option<(R, R)> {
    if im.is_zero() {
        return match re.signum_i() {
            0 => Some((re.zero_like(), re.zero_like())),
            1 => Some((re.sqrt()?, re.zero_like())),
            _ => Some((re.zero_like(), (-re.clone()).sqrt()?)),
        };
    }
    let r = (re.clone() * re.clone() + im.clone() * im.clone()).sqrt()?;
    let half = re.lift(&Rational::new(1.into(), 2.into()));
    let a = ((r.clone() + re.clone()) * half.clone()).sqrt()?;
    let mut b = ((r - re.clone()) * half).sqrt()?;
    if im.signum_i() < 0 {
        b = -b;
    }
    Some((a, b))
}

pub(crate) fn newton_cplx_cbrt<R: RealField>(re: &R, im: &R) -> Option<(R, R)> {
    let target = Cplx::new(re.clone(), im.clone());
    if target.is_zero() {
        return Some((re.zero_like(), re.zero_like()));
    }
    let z = target.to_c64();
    let (r, th) = (z.norm(), z.im.atan2(z.re));
    let seed_r = r.cbrt();
    let mut w = Cplx::new(
        re.approx_like(seed_r * (th / 3.0).cos())?,
        re.approx_like(seed_r * (th / 3.0).sin())?,
    );
    let three = re.lift_i(3);
    // quadratic convergence from a 53-bit seed: ten steps cover any practical precision
    for _ in 0..10 {
        let w2 = w.clone() * w.clone();
        let f = w2.clone() * w.clone() - target.clone();
        let d = w2 * Cplx::new(three.clone(), re.zero_like());
        let step = f * d.inv()?;
        if step.is_zero() {
            break;
        }
        w = w - step;
    }
    Some((w.re, w.im))
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn lift(&self, r: &Rational) -> Self {
        r.clone()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn to_c64(&self) -> C64 {
        Cplx::new(rational_to_f64(self), 0.0)
    }
}

impl RealField for Rational {
    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(Rational::new(n, d))
        } else {
            None
        }
    }

    fn to_f64(&self) -> f64 {
        rational_to_f64(self)
    }

    fn signum_i(&self) -> i32 {
        if self.is_positive() {
            1
        } else if self.is_negative() {
            -1
        } else {
            0
        }
    }
}

/// Correctly scaled conversion that survives huge numerators and denominators.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift = 80 - (nb - db);
    let q = if shift >= 0 {
        (r.numer() << (shift as usize)) / r.denom()
    } else {
        r.numer() / (r.denom() << ((-shift) as usize))
    };
    let qf = q.to_f64().unwrap_or(0.0);
    ldexp(qf, -shift)
}

pub(crate) fn ldexp(x: f64, e: i64) -> f64 {
    let mut v = x;
    let mut e = e;
    while e > 1000 {
        v *= 2f64.powi(1000);
        e -= 1000;
    }
    while e < -1000 {
        v *= 2f64.powi(-1000);
        e += 1000;
    }
    v * 2f64.powi(e as i32)
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn lift(&self, r: &Rational) -> Self {
        rational_to_f64(r)
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }

    fn conj(&self) -> Self {
        *self
    }

    fn to_c64(&self) -> C64 {
        Cplx::new(*self, 0.0)
    }
}

impl RealField for f64 {
    fn sqrt(&self) -> Option<Self> {
        if *self < 0.0 {
            None
        } else {
            Some(f64::sqrt(*self))
        }
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn signum_i(&self) -> i32 {
        if *self > 0.0 {
            1
        } else if *self < 0.0 {
            -1
        } else {
            0
        }
    }

    fn cos_sin(&self) -> Option<(Self, Self)> {
        Some((self.cos(), self.sin()))
    }

    fn approx_like(&self, x: f64) -> Option<Self> {
        Some(x)
    }

    fn precision_bits(&self) -> Option<usize> {
        Some(53)
    }
}

/// Square roots of nonnegative rationals inside a scalar kind.
pub trait SqrtQ: Scalar {
    fn sqrt_q(&self, q: &Rational) -> Option<Self>;
}

impl SqrtQ for Rational {
    fn sqrt_q(&self, q: &Rational) -> Option<Self> {
        RealField::sqrt(q)
    }
}

impl SqrtQ for f64 {
    fn sqrt_q(&self, q: &Rational) -> Option<Self> {
        RealField::sqrt(&rational_to_f64(q))
    }
}

impl SqrtQ for super::surd::Surd {
    fn sqrt_q(&self, q: &Rational) -> Option<Self> {
        super::surd::Surd::sqrt_rational(q)
    }
}

impl SqrtQ for super::bigfloat::BigFloat {
    fn sqrt_q(&self, q: &Rational) -> Option<Self> {
        RealField::sqrt(&self.lift(q))
    }
}

impl<R: RealField + SqrtQ> SqrtQ for Cplx<R> {
    fn sqrt_q(&self, q: &Rational) -> Option<Self> {
        Some(Cplx::new(self.re.sqrt_q(q)?, self.re.zero_like()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rational_sqrt_only_for_squares() {
        assert_eq!(RealField::sqrt(&q(9, 16)), Some(q(3, 4)));
        assert_eq!(RealField::sqrt(&q(2, 1)), None);
        assert_eq!(RealField::sqrt(&q(-1, 1)), None);
    }

    #[test]
    fn huge_rational_to_f64() {
        let big = BigInt::from(10).pow(400);
        let r = Rational::new(big.clone() * 3, big);
        assert!((rational_to_f64(&r) - 3.0).abs() < 1e-15);
    }

    #[test]
    fn pow_matches_repeated_product() {
        assert_eq!(q(2, 3).pow(5), q(32, 243));
        assert_eq!(q(7, 1).pow(0), q(1, 1));
    }
}

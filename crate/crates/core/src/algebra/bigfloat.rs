use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use astro_float::{BigFloat as Af, Consts, RoundingMode, Sign};
use num_bigint::{BigInt, Sign as BSign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::complex::{Cplx, C64};
use super::scalar::{ldexp, RealField, Scalar};
use super::Rational;

const RM: RoundingMode = RoundingMode::ToEven;

/// Binary floating-point value with a recorded working precision in bits.
///
/// Arithmetic runs at the larger precision of the two operands and rounds to
/// nearest-even.
#[derive(Clone)]
pub struct BigFloat {
    v: Af,
    prec: usize,
}

/// Complex value over [`BigFloat`].
pub type BigComplex = Cplx<BigFloat>;

impl BigFloat {
    pub fn zero(prec: usize) -> Self {
        BigFloat { v: Af::from_word(0, prec), prec }
    }

    pub fn from_i64(n: i64, prec: usize) -> Self {
        BigFloat { v: Af::from_i64(n, prec), prec }
    }

    pub fn from_f64(x: f64, prec: usize) -> Self {
        BigFloat { v: Af::from_f64(x, prec), prec }
    }

    pub fn from_bigint(n: &BigInt, prec: usize) -> Self {
        if n.is_zero() {
            return Self::zero(prec);
        }
        let (s, words) = n.to_u64_digits();
        let sign = if s == BSign::Minus { Sign::Neg } else { Sign::Pos };
        let e = (64 * words.len()) as i32;
        let mut v = Af::from_words(&words, sign, e);
        v.set_precision(prec.max(64), RM).expect("precision");
        BigFloat { v, prec }
    }

    pub fn from_rational(r: &Rational, prec: usize) -> Self {
        if r.numer().is_zero() {
            return Self::zero(prec);
        }
        let nb = r.numer().bits() as i64;
        let db = r.denom().bits() as i64;
        let k = prec as i64 + 8 + db - nb;
        let (num, den) = if k >= 0 {
            (r.numer() << (k as usize), r.denom().clone())
        } else {
            (r.numer().clone(), r.denom() << ((-k) as usize))
        };
        let (q, rem) = num.div_rem(&den);
        let q = if (rem.abs() << 1usize) >= den {
            if num.is_negative() { q - 1 } else { q + 1 }
        } else {
            q
        };
        let mut x = Self::from_bigint(&q, prec + 64);
        x.v.set_exponent(x.v.exponent().unwrap_or(0) - k as i32);
        let mut v = x.v;
        v.set_precision(prec.max(64), RM).expect("precision");
        BigFloat { v, prec }
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn with_precision(&self, prec: usize) -> Self {
        let mut v = self.v.clone();
        v.set_precision(prec.max(64), RM).expect("precision");
        BigFloat { v, prec }
    }

    pub fn is_zero_value(&self) -> bool {
        self.v.is_zero()
    }

    /// Exact rational value of the stored binary number.
    pub fn to_rational(&self) -> Rational {
        if self.v.is_zero() {
            return Rational::zero();
        }
        let (m, _, s, e, _) = self.v.as_raw_parts().expect("finite value");
        let mut n = BigInt::from_slice(
            BSign::Plus,
            &m.iter()
                .flat_map(|w| [(*w & 0xffff_ffff) as u32, (*w >> 32) as u32])
                .collect::<Vec<u32>>(),
        );
        if s == Sign::Neg {
            n = -n;
        }
        let shift = e as i64 - 64 * m.len() as i64;
        if shift >= 0 {
            Rational::from_integer(n << (shift as usize))
        } else {
            Rational::new(n, BigInt::one() << ((-shift) as usize))
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.v.is_zero() {
            return 0.0;
        }
        let (m, _, s, e, _) = self.v.as_raw_parts().expect("finite value");
        let top = *m.last().expect("mantissa") as f64;
        let v = ldexp(top, e as i64 - 64);
        if s == Sign::Neg { -v } else { v }
    }

    pub fn sqrt_val(&self) -> Option<Self> {
        if self.v.is_negative() {
            return None;
        }
        if self.v.is_zero() {
            return Some(self.clone());
        }
        Some(BigFloat { v: self.v.sqrt(self.prec, RM), prec: self.prec })
    }

    pub fn cos_sin_val(&self) -> (Self, Self) {
        let mut cc = Consts::new().expect("constants cache");
        let p = self.prec + 32;
        let c = self.v.cos(p, RM, &mut cc);
        let s = self.v.sin(p, RM, &mut cc);
        (
            BigFloat { v: c, prec: self.prec }.with_precision(self.prec),
            BigFloat { v: s, prec: self.prec }.with_precision(self.prec),
        )
    }

    pub fn pi(prec: usize) -> Self {
        let mut cc = Consts::new().expect("constants cache");
        BigFloat { v: cc.pi(prec.max(64), RM), prec }
    }

    pub fn cmp_val(&self, o: &Self) -> Ordering {
        match self.v.cmp(&o.v) {
            Some(x) if x < 0 => Ordering::Less,
            Some(x) if x > 0 => Ordering::Greater,
            _ => Ordering::Equal,
        }
    }

    /// Decimal rendering with `digits` significant digits, `d.ddd...e±x`.
    pub fn to_decimal(&self, digits: usize) -> String {
        rational_to_decimal(&self.to_rational(), digits)
    }

    /// Parses a decimal or `num/den` string.
    pub fn parse(s: &str, prec: usize) -> Option<Self> {
        parse_rational(s).map(|r| Self::from_rational(&r, prec))
    }
}

/// Parses `a/b`, integers and decimals with optional exponent into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let n: BigInt = a.trim().parse().ok()?;
        let d: BigInt = b.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (ip, fp) = match mant.split_once('.') {
        Some((a, b)) => (a, b),
        None => (mant, ""),
    };
    if ip.is_empty() && fp.is_empty() {
        return None;
    }
    if !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{ip}{fp}");
    let mut n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    if neg {
        n = -n;
    }
    let e10 = exp - fp.len() as i64;
    let ten = BigInt::from(10);
    Some(if e10 >= 0 {
        Rational::from_integer(n * num_traits::pow(ten, e10 as usize))
    } else {
        Rational::new(n, num_traits::pow(ten, (-e10) as usize))
    })
}

/// Deterministic scientific rendering of a rational with `digits` significant digits.
pub fn rational_to_decimal(r: &Rational, digits: usize) -> String {
    if num_traits::Zero::is_zero(r) {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let neg = r.is_negative();
    let a = r.abs();
    let ten = BigInt::from(10);
    // estimate the decimal exponent, then fix it up
    let est = ((a.numer().bits() as f64 - a.denom().bits() as f64) * std::f64::consts::LOG10_2).floor() as i64;
    let mut e = est;
    let scaled = |e: i64| -> Rational {
        let shift = digits as i64 - 1 - e;
        if shift >= 0 {
            &a * Rational::from_integer(num_traits::pow(ten.clone(), shift as usize))
        } else {
            &a / Rational::from_integer(num_traits::pow(ten.clone(), (-shift) as usize))
        }
    };
    let lo = Rational::from_integer(num_traits::pow(ten.clone(), digits - 1));
    let hi = Rational::from_integer(num_traits::pow(ten.clone(), digits));
    let mut s = scaled(e);
    for _ in 0..8 {
        if s < lo {
            e -= 1;
        } else if s >= hi {
            e += 1;
        } else {
            break;
        }
        s = scaled(e);
    }
    let mut m = (s.clone() + Rational::new(1.into(), 2.into())).floor().to_integer();
    if Rational::from_integer(m.clone()) >= hi {
        m /= &ten;
        e += 1;
    }
    let ds = m.to_string();
    let body = if ds.len() > 1 {
        let t = ds[1..].trim_end_matches('0');
        if t.is_empty() { ds[..1].to_string() } else { format!("{}.{}", &ds[..1], t) }
    } else {
        ds
    };
    format!("{}{}e{}", if neg { "-" } else { "" }, body, e)
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(20))
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(20))
    }
}

impl Add for BigFloat {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let p = self.prec.max(o.prec);
        BigFloat { v: self.v.add(&o.v, p, RM), prec: p }
    }
}

impl Sub for BigFloat {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let p = self.prec.max(o.prec);
        BigFloat { v: self.v.sub(&o.v, p, RM), prec: p }
    }
}

impl Mul for BigFloat {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let p = self.prec.max(o.prec);
        BigFloat { v: self.v.mul(&o.v, p, RM), prec: p }
    }
}

impl Neg for BigFloat {
    type Output = Self;
    fn neg(self) -> Self {
        BigFloat { v: self.v.neg(), prec: self.prec }
    }
}

impl Scalar for BigFloat {
    const EXACT: bool = false;

    fn lift(&self, r: &Rational) -> Self {
        BigFloat::from_rational(r, self.prec)
    }

    fn lift_i(&self, n: i64) -> Self {
        BigFloat::from_i64(n, self.prec)
    }

    fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        if self.v.is_zero() {
            None
        } else {
            Some(BigFloat { v: self.v.reciprocal(self.prec, RM), prec: self.prec })
        }
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn to_c64(&self) -> C64 {
        Cplx::new(self.to_f64(), 0.0)
    }
}

impl RealField for BigFloat {
    fn sqrt(&self) -> Option<Self> {
        self.sqrt_val()
    }

    fn to_f64(&self) -> f64 {
        BigFloat::to_f64(self)
    }

    fn signum_i(&self) -> i32 {
        if self.v.is_zero() {
            0
        } else if self.v.is_negative() {
            -1
        } else {
            1
        }
    }

    fn cos_sin(&self) -> Option<(Self, Self)> {
        Some(self.cos_sin_val())
    }

    fn approx_like(&self, x: f64) -> Option<Self> {
        Some(BigFloat::from_f64(x, self.prec))
    }

    fn precision_bits(&self) -> Option<usize> {
        Some(self.prec)
    }
}

impl BigComplex {
    pub fn from_c64(z: C64, prec: usize) -> Self {
        Cplx::new(BigFloat::from_f64(z.re, prec), BigFloat::from_f64(z.im, prec))
    }

    pub fn from_rational_parts(re: &Rational, im: &Rational, prec: usize) -> Self {
        Cplx::new(BigFloat::from_rational(re, prec), BigFloat::from_rational(im, prec))
    }

    pub fn precision(&self) -> usize {
        self.re.prec.max(self.im.prec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rational_round_trip_is_close() {
        let r = q(-22, 7);
        let x = BigFloat::from_rational(&r, 200);
        let back = x.to_rational();
        let err = (back - &r).abs() / r.abs();
        assert!(err < Rational::new(1.into(), BigInt::one() << 199usize));
    }

    #[test]
    fn dyadic_values_are_exact() {
        let r = q(3, 8);
        assert_eq!(BigFloat::from_rational(&r, 128).to_rational(), r);
        assert_eq!(BigFloat::from_i64(-12345, 64).to_rational(), q(-12345, 1));
    }

    #[test]
    fn sqrt_two_squared() {
        let two = BigFloat::from_i64(2, 200);
        let s = two.sqrt_val().unwrap();
        let back = s.clone() * s;
        let err = (back.to_rational() - q(2, 1)).abs();
        assert!(err < Rational::new(1.into(), BigInt::one() << 190usize));
        assert!((BigFloat::from_i64(2, 200).sqrt_val().unwrap().to_f64() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(rational_to_decimal(&q(1, 3), 5), "3.3333e-1");
        assert_eq!(rational_to_decimal(&q(-40, 1), 12), "-4e1");
        assert_eq!(rational_to_decimal(&q(999995, 1000000), 5), "1e0");
        assert_eq!(parse_rational("1.25e-2"), Some(q(1, 80)));
        assert_eq!(parse_rational("-3/6"), Some(q(-1, 2)));
        assert_eq!(parse_rational("abc"), None);
    }

    #[test]
    fn trig_identity() {
        let x = BigFloat::from_f64(0.7, 256);
        let (c, s) = x.cos_sin_val();
        let one = c.clone() * c + s.clone() * s;
        assert!((one.to_rational() - q(1, 1)).abs() < Rational::new(1.into(), BigInt::one() << 240usize));
    }

    #[test]
    fn tiny_to_f64() {
        let x = BigFloat::from_rational(&q(1, 1), 200).with_precision(200);
        let t = BigFloat::from_f64(1e-200, 200) * x;
        assert!((t.to_f64() / 1e-200 - 1.0).abs() < 1e-14);
    }
}

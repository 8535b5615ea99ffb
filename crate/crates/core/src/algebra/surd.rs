use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::bigfloat::BigFloat;
use super::complex::{Cplx, C64};
use super::scalar::{generic_cplx_sqrt, RealField, Scalar};
use super::Rational;

/// Squarefree radicand stored as its sorted list of prime factors.
type Radicand = Vec<u64>;

/// Exact element of the multi-quadratic field Q(sqrt p1, sqrt p2, ...): a finite
/// sum `sum q_r sqrt(r)` over squarefree integers `r`.
///
/// Square roots of distinct squarefree integers are linearly independent over Q,
/// so the representation is canonical and equality is exact.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Surd {
    terms: BTreeMap<Radicand, Rational>,
}

/// Complex numbers over [`Surd`].
pub type SurdComplex = Cplx<Surd>;

const TRIAL_LIMIT: u64 = 1 << 20;

impl Surd {
    pub fn zero() -> Self {
        Surd { terms: BTreeMap::new() }
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !num_traits::Zero::is_zero(&q) {
            terms.insert(Vec::new(), q);
        }
        Surd { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// `sqrt(q)` for a nonnegative rational, or `None` when the radicand
    /// cannot be reduced to a certified squarefree form.
    pub fn sqrt_rational(q: &Rational) -> Option<Self> {
        if q.is_negative() {
            return None;
        }
        if num_traits::Zero::is_zero(q) {
            return Some(Self::zero());
        }
        // sqrt(n/d) = sqrt(n d)/d
        let nd = (q.numer() * q.denom()).to_biguint()?;
        let (s, primes) = squarefree_split(&nd)?;
        let coeff = Rational::new(BigInt::from(s), q.denom().clone());
        let mut terms = BTreeMap::new();
        terms.insert(primes, coeff);
        Some(Surd { terms })
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.as_rational().is_some()
    }

    /// Terms as `(radicand, coefficient)` pairs, radicand given as an integer.
    pub fn terms(&self) -> Vec<(BigUint, Rational)> {
        self.terms
            .iter()
            .map(|(k, v)| (k.iter().fold(BigUint::one(), |a, p| a * BigUint::from(*p)), v.clone()))
            .collect()
    }

    fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.terms.keys().flatten().copied().collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    /// Galois conjugate flipping the sign of `sqrt p`.
    fn flip(&self, p: u64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.clone(), if k.binary_search(&p).is_ok() { -v.clone() } else { v.clone() }))
            .collect();
        Surd { terms }
    }

    pub fn to_bigfloat(&self, prec: usize) -> BigFloat {
        let mut acc = BigFloat::zero(prec);
        for (k, v) in &self.terms {
            let r: BigUint = k.iter().fold(BigUint::one(), |a, p| a * BigUint::from(*p));
            let root = BigFloat::from_bigint(&BigInt::from(r), prec).sqrt_val().expect("nonnegative");
            acc = acc + BigFloat::from_rational(v, prec) * root;
        }
        acc
    }

    fn insert(terms: &mut BTreeMap<Radicand, Rational>, k: Radicand, v: Rational) {
        use std::collections::btree_map::Entry;
        if num_traits::Zero::is_zero(&v) {
            return;
        }
        match terms.entry(k) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += v;
                if num_traits::Zero::is_zero(e.get()) {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(v);
            }
        }
    }
}

/// Splits `n = s^2 * r` with `r` squarefree, returning `s` and the primes of `r`.
fn squarefree_split(n: &BigUint) -> Option<(BigUint, Vec<u64>)> {
    let mut rest = n.clone();
    let mut s = BigUint::one();
    let mut primes = Vec::new();
    let mut d: u64 = 2;
    while d < TRIAL_LIMIT {
        let dd = BigUint::from(d);
        if &dd * &dd > rest {
            break;
        }
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&dd);
            if r.is_zero() {
                rest = q;
                e += 1;
            } else {
                break;
            }
        }
        if e > 0 {
            s *= dd.pow(e / 2);
            if e % 2 == 1 {
                primes.push(d);
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest.is_one() {
        return Some((s, primes));
    }
    let root = rest.sqrt();
    if &root * &root == rest {
        // rest is a square of a number with only large prime factors
        return Some((s * root, primes));
    }
    let limit = BigUint::from(TRIAL_LIMIT);
    if rest < &limit * &limit {
        // no factor below the limit and rest < limit^2: rest is prime
        primes.push(rest.to_u64()?);
        primes.sort_unstable();
        return Some((s, primes));
    }
    None
}

fn sym_diff(a: &[u64], b: &[u64]) -> (Vec<u64>, BigInt) {
    let mut out = Vec::new();
    let mut common = BigInt::one();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            out.push(b[j]);
            j += 1;
        } else {
            common *= BigInt::from(a[i]);
            i += 1;
            j += 1;
        }
    }
    (out, common)
}

impl fmt::Debug for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .map(|(r, c)| if r.is_one() { format!("{c}") } else { format!("{c}*sqrt({r})") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Parses the display form: rational terms `c` and `c*sqrt(r)` joined by ` + `.
impl std::str::FromStr for Surd {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("not an exact surd: {s:?}");
        let mut acc = Surd::zero();
        for term in s.split(" + ") {
            let term = term.trim();
            let (c, r) = match term.split_once("sqrt(") {
                Some((c, r)) => {
                    let r = r.strip_suffix(')').ok_or_else(bad)?;
                    let c = c.strip_suffix('*').unwrap_or(c);
                    let c = match c {
                        "" => Rational::one(),
                        "-" => -Rational::one(),
                        _ => c.parse::<Rational>().map_err(|_| bad())?,
                    };
                    (c, r.parse::<Rational>().map_err(|_| bad())?)
                }
                None => (term.parse::<Rational>().map_err(|_| bad())?, Rational::one()),
            };
            acc = acc + Surd::from_rational(c) * Surd::sqrt_rational(&r).ok_or_else(bad)?;
        }
        Ok(acc)
    }
}

impl Add for Surd {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut terms = self.terms;
        for (k, v) in o.terms {
            Surd::insert(&mut terms, k, v);
        }
        Surd { terms }
    }
}

impl Sub for Surd {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for Surd {
    type Output = Self;
    fn neg(self) -> Self {
        Surd { terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect() }
    }
}

impl Mul for Surd {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut terms = BTreeMap::new();
        for (ka, va) in &self.terms {
            for (kb, vb) in &o.terms {
                let (k, c) = sym_diff(ka, kb);
                Surd::insert(&mut terms, k, va * vb * Rational::from_integer(c));
            }
        }
        Surd { terms }
    }
}

impl Scalar for Surd {
    const EXACT: bool = true;

    fn lift(&self, r: &Rational) -> Self {
        Surd::from_rational(r.clone())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn inv(&self) -> Option<Self> {
        if self.terms.is_empty() {
            return None;
        }
        if let Some(q) = self.as_rational() {
            return Some(Surd::from_rational(q.recip()));
        }
        // x^{-1} = flip(x) * (x flip(x))^{-1}, and x flip(x) drops one prime
        let p = *self.primes().first()?;
        let f = self.flip(p);
        let n = self.clone() * f.clone();
        Some(f * n.inv()?)
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn to_c64(&self) -> C64 {
        Cplx::new(RealField::to_f64(self), 0.0)
    }
}

impl RealField for Surd {
    fn sqrt(&self) -> Option<Self> {
        match self.as_rational() {
            Some(q) => Surd::sqrt_rational(&q),
            None => None,
        }
    }

    fn to_f64(&self) -> f64 {
        if let Some(q) = self.as_rational() {
            return super::scalar::rational_to_f64(&q);
        }
        self.to_bigfloat(256).to_f64()
    }

    fn signum_i(&self) -> i32 {
        if let Some(q) = self.as_rational() {
            return q.signum_i();
        }
        // nonzero by canonicity; raise precision until the sign is resolved
        let mut prec = 256;
        loop {
            let x = self.to_bigfloat(prec);
            let scale: f64 = self
                .terms()
                .iter()
                .map(|(r, c)| super::scalar::rational_to_f64(&c.abs()) * r.to_f64().unwrap_or(f64::MAX).sqrt())
                .fold(0.0, f64::max);
            if x.to_f64().abs() > scale * 2f64.powi(-(prec as i32) + 16) || prec > 1 << 14 {
                return x.signum_i();
            }
            prec *= 4;
        }
    }

    fn cplx_sqrt(re: &Self, im: &Self) -> Option<(Self, Self)> {
        if let Some(r) = generic_cplx_sqrt(re, im) {
            return Some(r);
        }
        root_of_unity_root(re, im, 2)
    }

    fn cplx_cbrt(re: &Self, im: &Self) -> Option<(Self, Self)> {
        if im.is_zero() {
            if let Some(q) = re.as_rational() {
                if let Some(c) = rational_cbrt(&q) {
                    return Some((Surd::from_rational(c), Surd::zero()));
                }
            }
        }
        root_of_unity_root(re, im, 3)
    }
}

fn rational_cbrt(q: &Rational) -> Option<Rational> {
    let n = q.numer().cbrt();
    let d = q.denom().cbrt();
    if &(&n * &n * &n) == q.numer() && &(&d * &d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// The 24th roots of unity, all of which lie in Q(i, sqrt 2, sqrt 3).
pub fn roots_of_unity_24() -> Vec<SurdComplex> {
    let half = Surd::from_rational(Rational::new(1.into(), 2.into()));
    let s2 = Surd::sqrt_rational(&Rational::from_integer(2.into())).unwrap();
    let s3 = Surd::sqrt_rational(&Rational::from_integer(3.into())).unwrap();
    let s6 = Surd::sqrt_rational(&Rational::from_integer(6.into())).unwrap();
    let quarter = Surd::from_rational(Rational::new(1.into(), 4.into()));
    // cos/sin of 15 degrees
    let c15 = (s6.clone() + s2.clone()) * quarter.clone();
    let s15 = (s6 - s2.clone()) * quarter;
    let c30 = s3 * half.clone();
    let c45 = s2 * half.clone();
    let first_quadrant = [
        (Surd::from_int(1), Surd::zero()),
        (c15.clone(), s15.clone()),
        (c30.clone(), half.clone()),
        (c45.clone(), c45.clone()),
        (half.clone(), c30.clone()),
        (s15, c15),
    ];
    let mut out = Vec::with_capacity(24);
    for quarter_turn in 0..4 {
        for (c, s) in &first_quadrant {
            let (re, im) = match quarter_turn {
                0 => (c.clone(), s.clone()),
                1 => (-s.clone(), c.clone()),
                2 => (-c.clone(), -s.clone()),
                _ => (s.clone(), -c.clone()),
            };
            out.push(Cplx::new(re, im));
        }
    }
    out
}

/// A k-th root of a unit-modulus exact complex number found among the 24th
/// roots of unity (k = 2, 3).
fn root_of_unity_root(re: &Surd, im: &Surd, k: u32) -> Option<(Surd, Surd)> {
    let z = Cplx::new(re.clone(), im.clone());
    let n = z.norm_sqr_r();
    if n != Surd::from_int(1) {
        return None;
    }
    for w in roots_of_unity_24() {
        if w.pow(k) == z {
            return Some((w.re, w.im));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn rt(n: i64, d: i64) -> Surd {
        Surd::sqrt_rational(&q(n, d)).unwrap()
    }

    #[test]
    fn display_round_trips() {
        for x in [Surd::from_int(0), rt(6, 1) * Surd::from_int(-3), Surd::from_rational(q(20, 21)) + rt(79, 1) * Surd::from_rational(q(2, 21))] {
            assert_eq!(x.to_string().parse::<Surd>().unwrap(), x);
        }
        assert_eq!("sqrt(2)".parse::<Surd>().unwrap(), rt(2, 1));
        assert!("1.5".parse::<Surd>().is_err());
    }

    #[test]
    fn products_of_roots_reduce() {
        assert_eq!(rt(6, 1) * rt(6, 1), Surd::from_int(6));
        assert_eq!(rt(2, 1) * rt(3, 1), rt(6, 1));
        assert_eq!(rt(3, 5) * rt(5, 1), rt(3, 1));
        assert_eq!(rt(12, 1), Surd::from_int(2) * rt(3, 1));
        assert_eq!(rt(20, 1), Surd::from_int(2) * rt(5, 1));
    }

    #[test]
    fn inverse_of_mixed_element() {
        let x = Surd::from_int(3) + rt(2, 1) - rt(15, 1);
        let y = x.inv().unwrap();
        assert_eq!(x * y, Surd::from_int(1));
    }

    #[test]
    fn sqrt79_field_element() {
        // (20 + 2 sqrt 79)/21
        let t = (Surd::from_int(20) + Surd::from_int(2) * rt(79, 1)) * Surd::from_rational(q(1, 21));
        let back = t.clone() * t.inv().unwrap();
        assert_eq!(back, Surd::from_int(1));
        assert!((RealField::to_f64(&t) - (20.0 + 2.0 * 79f64.sqrt()) / 21.0).abs() < 1e-14);
    }

    #[test]
    fn sign_of_near_cancellation() {
        // sqrt 2 + sqrt 3 - sqrt(5 + 2 sqrt 6) == 0 can't be formed here, use a near miss
        let x = rt(2, 1) + rt(3, 1) - Surd::from_rational(q(3146264, 1000000));
        assert_eq!(x.signum_i(), 1);
        assert_eq!((-x).signum_i(), -1);
    }

    #[test]
    fn roots_of_unity_are_units() {
        let rs = roots_of_unity_24();
        assert_eq!(rs.len(), 24);
        for w in &rs {
            assert_eq!(w.pow(24), Cplx::new(Surd::from_int(1), Surd::zero()));
        }
        let i = Cplx::new(Surd::zero(), Surd::from_int(1));
        let s = i.sqrt().unwrap();
        assert_eq!(s.clone() * s, i);
        let m1 = Cplx::new(Surd::from_int(-1), Surd::zero());
        let c = m1.cbrt().unwrap();
        assert_eq!(c.clone() * c.clone() * c, m1);
    }

    #[test]
    fn large_prime_radicand() {
        let p = 1_000_003i64; // prime above the trial limit
        let s = rt(p, 1);
        assert_eq!(s.clone() * s, Surd::from_int(p));
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::Scalar;
use super::Rational;

/// Dense univariate polynomial, coefficients in ascending order.
///
/// Trailing exact zeros are trimmed, so the degree is the index of the last
/// stored coefficient; the zero polynomial has no coefficients and degree
/// `None`.
#[derive(Clone, PartialEq)]
pub struct UniPoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> UniPoly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c z^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![c.zero_like(); k];
        v.push(c);
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `z^k`, `None` beyond the degree.
    pub fn coeff(&self, k: usize) -> Option<&T> {
        self.coeffs.get(k)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut it = self.coeffs.iter().rev();
        let Some(first) = it.next() else {
            return x.zero_like();
        };
        let mut acc = first.clone();
        for c in it {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * c.lift_i(k as i64))
            .collect();
        Self::new(v)
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> UniPoly<U> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Divides by `z^k`; the low coefficients must be zero.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// `z^d p(1/z)` for a nominal degree `d >= deg p`.
    pub fn reverse(&self, d: usize) -> Self {
        let Some(z) = self.coeffs.first().map(|c| c.zero_like()) else {
            return Self::zero();
        };
        let mut v = vec![z; d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[d - k] = c.clone();
        }
        Self::new(v)
    }

    /// Quotient and remainder; `None` if the divisor is zero or its leading
    /// coefficient is not invertible.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dd = d.degree()?;
        let lc_inv = d.leading()?.inv()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let zero = lc_inv.zero_like();
        let mut q = vec![zero; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = r[k + dd].clone() * lc_inv.clone();
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].clone() - c.clone() * dc.clone();
            }
            q[k] = c;
        }
        r.truncate(dd);
        Some((Self::new(q), Self::new(r)))
    }

    pub fn monic(&self) -> Option<Self> {
        let inv = self.leading()?.inv()?;
        Some(self.scale(&inv))
    }

    /// Monic gcd over an exact field.
    pub fn gcd(&self, o: &Self) -> Option<Self> {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Some(a)
        } else {
            a.monic()
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = match self.coeffs.first() {
            Some(c) => Self::constant(c.one_like()),
            None => return Self::zero(),
        };
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }

    /// Yun's square-free decomposition over an exact field: `(f_i, i)` with
    /// `self = c * prod f_i^i`, each `f_i` monic and square-free. Constants
    /// give an empty list.
    pub fn squarefree_decomposition(&self) -> Option<Vec<(Self, usize)>> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return Some(out);
        }
        let dp = self.derivative();
        let a0 = self.gcd(&dp)?;
        let mut b = self.div_rem(&a0)?.0;
        let c = dp.div_rem(&a0)?.0;
        let mut d = c - b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d)?;
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a)?.0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            d = d.div_rem(&a)?.0 - b.derivative();
            i += 1;
        }
        Some(out)
    }

    /// Substitutes `x -> q(x)`.
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q.clone() + Self::constant(c.clone());
        }
        acc
    }
}

impl UniPoly<Rational> {
    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    /// Parses coefficient strings in ascending order.
    pub fn from_strs(c: &[&str]) -> Self {
        Self::new(c.iter().map(|s| s.parse::<Rational>().expect("rational literal")).collect())
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.eval(x)
    }
}

fn zip_with<T: Scalar>(a: &[T], b: &[T], f: impl Fn(T, T) -> T, neg_b: bool) -> Vec<T> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let v = match (a.get(k), b.get(k)) {
            (Some(x), Some(y)) => f(x.clone(), y.clone()),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => {
                if neg_b {
                    -y.clone()
                } else {
                    y.clone()
                }
            }
            (None, None) => unreachable!(),
        };
        out.push(v);
    }
    out
}

impl<T: Scalar> Add for UniPoly<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(zip_with(&self.coeffs, &o.coeffs, |x, y| x + y, false))
    }
}

impl<T: Scalar> Sub for UniPoly<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(zip_with(&self.coeffs, &o.coeffs, |x, y| x - y, true))
    }
}

impl<T: Scalar> Neg for UniPoly<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<T: Scalar> Mul for UniPoly<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let z = self.coeffs[0].zero_like();
        let mut v = vec![z; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(v)
    }
}

impl<T: Scalar> fmt::Debug for UniPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly{:?}", self.coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = UniPoly::from_ints(&[-2, 1, 1]);
        let b = UniPoly::from_ints(&[3, -4, 1]);
        let g = a.gcd(&b).unwrap();
        assert_eq!(g, UniPoly::from_ints(&[-1, 1]));
        let (q, r) = a.div_rem(&g).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::from_ints(&[2, 1]));
    }

    #[test]
    fn degree_sentinel_and_reverse() {
        assert_eq!(UniPoly::<Rational>::zero().degree(), None);
        let p = UniPoly::from_ints(&[0, 1, 2]);
        assert_eq!(p.reverse(3), UniPoly::from_ints(&[0, 2, 1]));
        assert_eq!(p.valuation(), Some(1));
        assert_eq!(p.derivative(), UniPoly::from_ints(&[1, 4]));
    }

    #[test]
    fn compose_shift() {
        let p = UniPoly::from_ints(&[0, 0, 1]);
        let q = UniPoly::from_ints(&[1, 1]);
        assert_eq!(p.compose(&q), UniPoly::from_ints(&[1, 2, 1]));
    }
}

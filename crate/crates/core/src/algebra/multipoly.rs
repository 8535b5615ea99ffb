use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use super::complex::Cplx;
use super::scalar::{rational_to_f64, Scalar};
use super::surd::Surd;
use super::unipoly::UniPoly;
use super::Rational;
use crate::error::{arg, Result};

/// Exact coefficient field for [`MultiPoly`].
pub trait ExactField: Scalar + PartialEq {
    fn from_q(q: &Rational) -> Self;
}

impl ExactField for Rational {
    fn from_q(q: &Rational) -> Self {
        q.clone()
    }
}

impl ExactField for Surd {
    fn from_q(q: &Rational) -> Self {
        Surd::from_rational(q.clone())
    }
}

impl ExactField for Cplx<Surd> {
    fn from_q(q: &Rational) -> Self {
        Cplx::new(Surd::from_rational(q.clone()), Surd::zero())
    }
}

/// Sparse multivariate polynomial over named variables.
///
/// Exponent vectors are ordered lexicographically with the first variable most
/// significant; no zero coefficient is ever stored.
#[derive(Clone, PartialEq)]
pub struct MultiPoly<K = Rational> {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, K>,
}

impl<K: ExactField> MultiPoly<K> {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    fn zero_same(&self) -> Self {
        MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], c: K) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    pub fn var(vars: &[&str], name: &str) -> Self {
        let i = vars.iter().position(|v| *v == name).expect("known variable");
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(e, K::from_q(&Rational::from_integer(1.into())));
        p
    }

    /// Builds from `(coefficient, exponents)` pairs; repeated monomials add up.
    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (K, Vec<u32>)>) -> Self {
        let mut p = Self::zero(vars);
        for (c, e) in terms {
            assert_eq!(e.len(), vars.len(), "exponent length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: K) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Occupied(mut o) => {
                let v = o.get().clone() + c;
                if v.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = v;
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn vars(&self) -> Vec<&str> {
        self.vars.iter().map(|s| s.as_str()).collect()
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &K)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<K> {
        if !self.is_constant() {
            return None;
        }
        Some(match self.terms.values().next() {
            Some(c) => c.clone(),
            None => K::from_q(&Rational::from_integer(0.into())),
        })
    }

    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn scale(&self, k: &K) -> Self {
        let mut p = self.zero_same();
        for (e, c) in &self.terms {
            p.add_term(e.clone(), c.clone() * k.clone());
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(&self.vars(), K::from_q(&Rational::from_integer(1.into())));
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

    /// Exact value at a point.
    pub fn eval(&self, pt: &[K]) -> Result<K> {
        if pt.len() != self.vars.len() {
            return arg(format!("point has {} coordinates, polynomial has {} variables", pt.len(), self.vars.len()));
        }
        let zero = K::from_q(&Rational::from_integer(0.into()));
        Ok(self.eval_generic(pt, |c, _| c.clone()).unwrap_or(zero))
    }

    /// Evaluation in another scalar kind, coefficients mapped by `lift`.
    /// Returns `None` only for the zero polynomial at an empty point.
    pub fn eval_generic<T: Scalar>(&self, pt: &[T], lift: impl Fn(&K, &T) -> T) -> Option<T> {
        let like = pt.first()?;
        // cache powers per variable
        let mut powers: Vec<Vec<T>> = Vec::with_capacity(pt.len());
        for (i, x) in pt.iter().enumerate() {
            let d = self.degree_in(i).unwrap_or(0) as usize;
            let mut v = Vec::with_capacity(d + 1);
            v.push(x.one_like());
            for k in 1..=d {
                let prev: T = v[k - 1].clone();
                v.push(prev * x.clone());
            }
            powers.push(v);
        }
        let mut acc = like.zero_like();
        for (e, c) in &self.terms {
            let mut t = lift(c, like);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t * powers[i][k as usize].clone();
                }
            }
            acc = acc + t;
        }
        Some(acc)
    }

    pub fn partial(&self, i: usize) -> Self {
        let mut p = self.zero_same();
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                p.add_term(f, c.clone() * c.lift_i(e[i] as i64));
            }
        }
        p
    }

    /// Exact value and gradient.
    pub fn eval_and_gradient(&self, pt: &[K]) -> Result<(K, Vec<K>)> {
        let v = self.eval(pt)?;
        let g = (0..self.nvars()).map(|i| self.partial(i).eval(pt)).collect::<Result<Vec<_>>>()?;
        Ok((v, g))
    }

    /// Coefficients of `x_i^k` for `k = 0..=deg`, each free of `x_i`.
    pub fn coeffs_in(&self, i: usize) -> Vec<Self> {
        let d = self.degree_in(i).unwrap_or(0) as usize;
        let mut out = vec![self.zero_same(); d + 1];
        for (e, c) in &self.terms {
            let mut f = e.clone();
            let k = f[i] as usize;
            f[i] = 0;
            out[k].add_term(f, c.clone());
        }
        out
    }

    /// Substitutes `x_i -> q`, where `q` uses the same variable list.
    pub fn substitute(&self, i: usize, q: &Self) -> Self {
        let parts = self.coeffs_in(i);
        let mut acc = self.zero_same();
        for c in parts.into_iter().rev() {
            acc = acc * q.clone() + c;
        }
        acc
    }

    /// Substitutes a constant for `x_i`.
    pub fn substitute_value(&self, i: usize, v: &K) -> Self {
        let c = Self::constant(&self.vars(), v.clone());
        self.substitute(i, &c)
    }

    /// Exact quotient, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (dl_e, dl_c) = d.terms.last_key_value()?;
        let dl_inv = dl_c.inv()?;
        let mut r = self.clone();
        let mut q = self.zero_same();
        while let Some((re, rc)) = r.terms.last_key_value() {
            if re.iter().zip(dl_e).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = re.iter().zip(dl_e).map(|(a, b)| a - b).collect();
            let c = rc.clone() * dl_inv.clone();
            let mut t = self.zero_same();
            t.add_term(e, c);
            r = r - t.clone() * d.clone();
            q = q + t;
        }
        Some(q)
    }

    /// Univariate view in variable `i` when no other variable occurs.
    pub fn to_unipoly(&self, i: usize) -> Option<UniPoly<K>> {
        let d = self.degree_in(i).unwrap_or(0) as usize;
        let zero = K::from_q(&Rational::from_integer(0.into()));
        let mut v = vec![zero; d + 1];
        for (e, c) in &self.terms {
            if e.iter().enumerate().any(|(j, &x)| j != i && x != 0) {
                return None;
            }
            v[e[i] as usize] = c.clone();
        }
        Some(UniPoly::new(v))
    }

    pub fn from_unipoly(vars: &[&str], i: usize, p: &UniPoly<K>) -> Self {
        let mut out = Self::zero(vars);
        for (k, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[i] = k as u32;
            out.add_term(e, c.clone());
        }
        out
    }

    /// Re-embeds into a larger variable list by name.
    pub fn with_vars(&self, vars: &[&str]) -> Self {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("variable present in target list"))
            .collect();
        let mut out = Self::zero(vars);
        for (e, c) in &self.terms {
            let mut f = vec![0; vars.len()];
            for (j, &k) in e.iter().enumerate() {
                f[map[j]] += k;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Strips the largest monomial factor, returning it as an exponent vector.
    pub fn strip_monomial(&self) -> (Vec<u32>, Self) {
        let n = self.vars.len();
        let mut m = vec![u32::MAX; n];
        for e in self.terms.keys() {
            for i in 0..n {
                m[i] = m[i].min(e[i]);
            }
        }
        if self.terms.is_empty() {
            m = vec![0; n];
        }
        let mut out = self.zero_same();
        for (e, c) in &self.terms {
            out.add_term(e.iter().zip(&m).map(|(a, b)| a - b).collect(), c.clone());
        }
        (m, out)
    }
}

impl MultiPoly<Rational> {
    /// Sum of `|c| * prod |x_i|^e_i`, the natural scale for relative residuals.
    pub fn abs_eval_f64(&self, pt: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut t = rational_to_f64(&Signed::abs(c));
                for (i, &k) in e.iter().enumerate() {
                    t *= pt[i].abs().powi(k as i32);
                }
                t
            })
            .sum()
    }

    /// Canonical text form used for digest pinning.
    pub fn canonical_string(&self) -> String {
        let mut s = format!("vars={}", self.vars.join(","));
        for (e, c) in &self.terms {
            s.push_str(&format!(";{}@{}", c, e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")));
        }
        s
    }

    /// Integer coefficients with exponents, a convenience for transcriptions.
    pub fn from_int_terms(vars: &[&str], terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(vars, terms.iter().map(|(c, e)| (Rational::from_integer((*c).into()), e.to_vec())))
    }
}

fn same_vars<K>(a: &MultiPoly<K>, b: &MultiPoly<K>) {
    assert_eq!(a.vars, b.vars, "polynomials over different variable lists");
}

impl<K: ExactField> Add for MultiPoly<K> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        same_vars(&self, &o);
        let mut p = self;
        for (e, c) in o.terms {
            p.add_term(e, c);
        }
        p
    }
}

impl<K: ExactField> Sub for MultiPoly<K> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        same_vars(&self, &o);
        let mut p = self;
        for (e, c) in o.terms {
            p.add_term(e, -c);
        }
        p
    }
}

impl<K: ExactField> Neg for MultiPoly<K> {
    type Output = Self;
    fn neg(self) -> Self {
        MultiPoly { vars: self.vars, terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<K: ExactField> Mul for MultiPoly<K> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, o: Self) -> Self {
        same_vars(&self, &o);
        let mut p = self.zero_same();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                p.add_term(e, ca.clone() * cb.clone());
            }
        }
        p
    }
}

impl<K: ExactField + fmt::Debug> fmt::Debug for MultiPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { self.vars[i].clone() } else { format!("{}^{}", self.vars[i], k) })
                    .collect();
                if mono.is_empty() {
                    format!("{c:?}")
                } else {
                    format!("{c:?}*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn gradient_of_simple_poly() {
        let v = ["x", "y"];
        let x = MultiPoly::<Rational>::var(&v, "x");
        let y = MultiPoly::<Rational>::var(&v, "y");
        let p = x.clone() * x.clone() * y.clone() + y.scale(&q(3));
        let (val, g) = p.eval_and_gradient(&[q(2), q(5)]).unwrap();
        assert_eq!(val, q(35));
        assert_eq!(g, vec![q(20), q(7)]);
        assert!(p.eval(&[q(1)]).is_err());
    }

    #[test]
    fn exact_division() {
        let v = ["x", "y"];
        let x = MultiPoly::<Rational>::var(&v, "x");
        let y = MultiPoly::<Rational>::var(&v, "y");
        let a = x.clone() - y.clone();
        let b = x.clone() * x.clone() + y.clone();
        let prod = a.clone() * b.clone();
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!((prod + x.clone()).exact_div(&a), None);
    }

    #[test]
    fn substitution() {
        let v = ["x", "y"];
        let x = MultiPoly::<Rational>::var(&v, "x");
        let y = MultiPoly::<Rational>::var(&v, "y");
        let p = x.clone() * x.clone() + y.clone();
        let s = p.substitute(0, &(y.clone() + MultiPoly::constant(&v, q(1))));
        let expect = y.clone() * y.clone() + y.scale(&q(3)) + MultiPoly::constant(&v, q(1));
        assert_eq!(s, expect);
    }
}

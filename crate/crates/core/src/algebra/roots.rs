//! Real roots of rational univariate polynomials: Sturm counting, square-free
//! decomposition, isolation and bisection refinement.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::bigfloat::BigFloat;
use super::unipoly::UniPoly;
use super::Rational;
use crate::error::{arg, Result};

type Poly = UniPoly<Rational>;

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

fn sign(x: &Rational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Integer coefficient vector, ascending, no trailing zeros.
type IPoly = Vec<BigInt>;

fn trim(mut p: IPoly) -> IPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn primitive(p: IPoly) -> IPoly {
    let p = trim(p);
    let g = p.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() || g.is_one() {
        return p;
    }
    p.into_iter().map(|c| c / &g).collect()
}

/// Clears denominators with a positive factor, so signs are unchanged.
fn to_int(p: &Poly) -> IPoly {
    let l = p.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    primitive(p.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect())
}

fn from_int(p: &IPoly) -> Poly {
    UniPoly::new(p.iter().map(|c| Rational::from_integer(c.clone())).collect())
}

fn int_derivative(p: &IPoly) -> IPoly {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect())
}

/// `lc(b)^e a mod b` with the number `e` of elimination steps used.
fn pseudo_rem(a: &IPoly, b: &IPoly) -> (IPoly, u32) {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r = a.clone();
    let mut e = 0;
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let lr = r[r.len() - 1].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (k, bk) in b.iter().enumerate() {
            r[k + shift] -= &lr * bk;
        }
        r = trim(r);
        e += 1;
    }
    (r, e)
}

fn int_gcd(a: &IPoly, b: &IPoly) -> IPoly {
    let (mut a, mut b) = (primitive(a.clone()), primitive(b.clone()));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let (r, _) = pseudo_rem(&a, &b);
        a = b;
        b = primitive(r);
    }
    a
}

/// Sign of `p(x)`, evaluated homogeneously over the integers.
fn sign_at(p: &IPoly, x: &Rational) -> i32 {
    let Some(n) = p.len().checked_sub(1) else { return 0 };
    let (num, den) = (x.numer(), x.denom());
    let mut acc = p[n].clone();
    let mut dpow = BigInt::one();
    for k in (0..n).rev() {
        dpow *= den;
        acc = acc * num + &p[k] * &dpow;
    }
    match acc.sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
    }
}

/// Sturm chain over the integers: each term is a positive multiple of the
/// classical remainder.
fn int_sturm(p: &IPoly) -> Vec<IPoly> {
    let mut seq = vec![p.clone()];
    let d = primitive(int_derivative(p));
    if d.is_empty() {
        return seq;
    }
    seq.push(d);
    loop {
        let n = seq.len();
        let (r, e) = pseudo_rem(&seq[n - 2], &seq[n - 1]);
        if r.is_empty() {
            break;
        }
        let lb_negative = seq[n - 1].last().expect("nonzero").is_negative();
        let flip = lb_negative && e % 2 == 1;
        let next: IPoly = r.into_iter().map(|c| if flip { c } else { -c }).collect();
        seq.push(primitive(next));
    }
    seq
}

fn int_sign_changes(seq: &[IPoly], x: &Rational) -> usize {
    let mut last = 0;
    let mut n = 0;
    for p in seq {
        let s = sign_at(p, x);
        if s != 0 {
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
    }
    n
}

/// Classical Sturm chain `p, p', -rem(...)`, each term rescaled positively.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    int_sturm(&to_int(p)).iter().map(from_int).collect()
}

fn sign_changes(seq: &[Poly], x: &Rational) -> usize {
    let mut last = 0;
    let mut n = 0;
    for p in seq {
        let s = sign(&p.eval(x));
        if s != 0 {
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
    }
    n
}

/// Distinct real roots in `(a, b]`, valid when `p(a) != 0`.
fn count_half_open(seq: &[Poly], a: &Rational, b: &Rational) -> usize {
    sign_changes(seq, a).saturating_sub(sign_changes(seq, b))
}

/// Removes every factor `(x - r)` from `p`.
fn deflate(p: &Poly, r: &Rational) -> Poly {
    let lin = UniPoly::new(vec![-r.clone(), Rational::one()]);
    let mut q = p.clone();
    loop {
        let (d, rem) = q.div_rem(&lin).expect("monic divisor");
        if !rem.is_zero() {
            return q;
        }
        q = d;
    }
}

/// Number of distinct real roots of `p` in the open interval `(a, b)`.
///
/// If an endpoint is itself a root it is moved inward by `(b - a)/2^k` for the
/// smallest `k >= 1` that makes it a non-root with no root skipped between the
/// old and the new endpoint.
pub fn sturm_count(p: &Poly, a: &Rational, b: &Rational) -> Result<usize> {
    if p.is_zero() {
        return arg("Sturm count of the zero polynomial");
    }
    if a >= b {
        return arg("Sturm count needs a < b");
    }
    let (a2, b2) = shrink_endpoints(p, a, b);
    if a2 >= b2 {
        return Ok(0);
    }
    let seq = sturm_sequence(p);
    let mut n = count_half_open(&seq, &a2, &b2);
    if p.eval(&b2).is_zero() {
        n -= 1;
    }
    Ok(n)
}

fn shrink_endpoints(p: &Poly, a: &Rational, b: &Rational) -> (Rational, Rational) {
    let width = b - a;
    let mut lo = a.clone();
    let mut hi = b.clone();
    if p.eval(a).is_zero() {
        let q = deflate(p, a);
        let qs = sturm_sequence(&q);
        let mut delta = &width * half();
        loop {
            let cand = a + &delta;
            if !p.eval(&cand).is_zero() && count_half_open(&qs, a, &cand) == 0 {
                lo = cand;
                break;
            }
            delta *= half();
        }
    }
    if p.eval(b).is_zero() {
        let q = deflate(p, b);
        let qs = sturm_sequence(&q);
        let mut delta = &width * half();
        loop {
            let cand = b - &delta;
            if !p.eval(&cand).is_zero() && !q.eval(&cand).is_zero() && count_half_open(&qs, &cand, b) == 0 {
                hi = cand;
                break;
            }
            delta *= half();
        }
    }
    (lo, hi)
}

/// Square-free decomposition by Yun's algorithm: factors `f_i` with
/// `p = c * prod f_i^i`, each `f_i` monic, square-free and pairwise coprime.
/// Returns `(f_i, i)` for the nonconstant factors.
pub fn square_free_decomposition(p: &Poly) -> Vec<(Poly, usize)> {
    p.squarefree_decomposition().expect("exact field")
}

/// Monic square-free part.
pub fn square_free_part(p: &Poly) -> Poly {
    let ip = to_int(p);
    let g = int_gcd(&ip, &int_derivative(&ip));
    let q = if g.len() <= 1 { from_int(&ip) } else { from_int(&ip).div_rem(&from_int(&g)).expect("divisor").0 };
    q.monic().unwrap_or(q)
}

/// Bound `B` with every complex root satisfying `|z| < B` (Cauchy).
pub fn cauchy_bound(p: &Poly) -> Rational {
    let lc = p.leading().expect("nonzero polynomial").abs();
    let n = p.degree().unwrap_or(0);
    let m = p.coeffs()[..n].iter().map(|c| c.abs()).max().unwrap_or_else(Rational::zero);
    Rational::one() + m / lc
}

/// Closed rational enclosure `[lo, hi]` of one real root.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn mid(&self) -> Rational {
        (&self.lo + &self.hi) * half()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

/// Isolates every distinct real root in the closed interval `[a, b]` into
/// disjoint intervals of width at most `width`, sorted by left endpoint.
pub fn isolate_roots(p: &Poly, a: &Rational, b: &Rational, width: &Rational) -> Result<Vec<RootInterval>> {
    if p.is_zero() {
        return arg("root isolation of the zero polynomial");
    }
    if !width.is_positive() {
        return arg("isolation width must be positive");
    }
    if a > b {
        return arg("empty isolation interval");
    }
    let sq = square_free_part(p);
    let isq = to_int(&sq);
    let mut out = Vec::new();
    for e in [a, b] {
        if sign_at(&isq, e) == 0 && !out.iter().any(|r: &RootInterval| &r.lo == e) {
            out.push(RootInterval { lo: e.clone(), hi: e.clone() });
        }
    }
    if a < b {
        let seq = int_sturm(&isq);
        let mut stack = vec![(a.clone(), b.clone())];
        while let Some((lo, hi)) = stack.pop() {
            let (slo, shi) = (sign_at(&isq, &lo), sign_at(&isq, &hi));
            let n = if slo == 0 || shi == 0 {
                sturm_count(&sq, &lo, &hi)?
            } else {
                int_sign_changes(&seq, &lo).saturating_sub(int_sign_changes(&seq, &hi))
            };
            if n == 0 {
                continue;
            }
            if n == 1 && slo * shi < 0 {
                out.push(refine_int(&isq, RootInterval { lo, hi }, width));
                continue;
            }
            let m = (&lo + &hi) * half();
            if sign_at(&isq, &m) == 0 {
                out.push(RootInterval { lo: m.clone(), hi: m.clone() });
            }
            stack.push((lo, m.clone()));
            stack.push((m, hi));
        }
    }
    out.sort();
    Ok(out)
}

/// Every distinct real root, using the Cauchy bound as the search window.
pub fn isolate_real_roots(p: &Poly, width: &Rational) -> Result<Vec<RootInterval>> {
    if p.is_zero() {
        return arg("root isolation of the zero polynomial");
    }
    let b = cauchy_bound(p);
    isolate_roots(p, &-b.clone(), &b, width)
}

/// Bisection on a sign-changing enclosure of a square-free polynomial.
pub fn refine(p: &Poly, iv: RootInterval, width: &Rational) -> RootInterval {
    refine_int(&to_int(p), iv, width)
}

fn refine_int(p: &IPoly, iv: RootInterval, width: &Rational) -> RootInterval {
    let RootInterval { mut lo, mut hi } = iv;
    let slo = sign_at(p, &lo);
    if slo == 0 {
        return RootInterval { lo: lo.clone(), hi: lo };
    }
    if sign_at(p, &hi) == 0 {
        return RootInterval { lo: hi.clone(), hi };
    }
    while &(&hi - &lo) > width {
        let m = (&lo + &hi) * half();
        let s = sign_at(p, &m);
        if s == 0 {
            return RootInterval { lo: m.clone(), hi: m };
        }
        if s == slo {
            lo = m;
        } else {
            hi = m;
        }
    }
    RootInterval { lo, hi }
}

/// Newton iteration in `prec`-bit floats from the midpoint of an isolating
/// interval of a simple root, falling back to bisection whenever a step leaves
/// the interval.
pub fn polish(p: &Poly, iv: &RootInterval, prec: usize) -> BigFloat {
    use super::{RealField, Scalar};
    let lift = |x: &Rational| BigFloat::from_rational(x, prec);
    if iv.lo == iv.hi {
        return lift(&iv.lo);
    }
    let pf = p.map(|c| lift(c));
    let df = pf.derivative();
    let (mut lo, mut hi) = (lift(&iv.lo), lift(&iv.hi));
    let s_lo = pf.eval(&lo).signum_i();
    let two = BigFloat::from_i64(2, prec);
    let mid = |a: &BigFloat, b: &BigFloat| (a.clone() + b.clone()).div(&two).expect("nonzero");
    let mut x = mid(&lo, &hi);
    let eps = BigFloat::from_rational(&Rational::new(BigInt::one(), BigInt::one() << (prec as u32 - 4)), prec);
    for _ in 0..(4 * prec) {
        let v = pf.eval(&x);
        let s = v.signum_i();
        if s == 0 {
            return x;
        }
        if s == s_lo {
            lo = x.clone();
        } else {
            hi = x.clone();
        }
        let next = match v.div(&df.eval(&x)) {
            Some(step) => x.clone() - step,
            None => mid(&lo, &hi),
        };
        let inside = next.cmp_val(&lo).is_gt() && next.cmp_val(&hi).is_lt();
        let next = if inside { next } else { mid(&lo, &hi) };
        let scale = x.abs_r() + BigFloat::from_i64(1, prec);
        let done = (next.clone() - x.clone()).abs_r().cmp_val(&(eps.clone() * scale)).is_le();
        x = next;
        if done || (hi.clone() - lo.clone()).is_zero_value() {
            break;
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn counts_with_endpoint_roots() {
        // (x-1)(x-2)(x-3)
        let p = UniPoly::from_ints(&[-6, 11, -6, 1]);
        assert_eq!(sturm_count(&p, &q(1, 1), &q(3, 1)).unwrap(), 1);
        assert_eq!(sturm_count(&p, &q(0, 1), &q(3, 1)).unwrap(), 2);
        assert_eq!(sturm_count(&p, &q(0, 1), &q(4, 1)).unwrap(), 3);
    }

    #[test]
    fn multiple_roots_counted_once() {
        // (x-1)^3 (x+1)
        let p = UniPoly::from_ints(&[-1, 1]).pow(3) * UniPoly::from_ints(&[1, 1]);
        assert_eq!(sturm_count(&p, &q(-5, 1), &q(5, 1)).unwrap(), 2);
        let dec = square_free_decomposition(&p);
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0], (UniPoly::from_ints(&[1, 1]), 1));
        assert_eq!(dec[1], (UniPoly::from_ints(&[-1, 1]), 3));
    }

    #[test]
    fn isolation_hits_exact_midpoint() {
        let p = UniPoly::from_ints(&[0, -1, 0, 1]); // roots -1, 0, 1
        let r = isolate_roots(&p, &q(-2, 1), &q(2, 1), &q(1, 1000)).unwrap();
        assert_eq!(r.len(), 3);
        assert!(r[1].contains(&q(0, 1)));
    }

    #[test]
    fn polish_reaches_working_precision() {
        let p = UniPoly::from_ints(&[-2, 0, 1]);
        let iv = isolate_roots(&p, &q(0, 1), &q(2, 1), &q(1, 16)).unwrap().remove(0);
        let x = polish(&p, &iv, 200);
        let r = crate::algebra::RealField::to_f64(&(x.clone() * x - BigFloat::from_i64(2, 200))).abs();
        assert!(r < 1e-55, "{r}");
    }
}

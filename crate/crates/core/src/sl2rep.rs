//! SL2 acting on binary forms, transvectants, and the degree-6 piece of the
//! skew 5x5 matrices.
//!
//! A form of degree `n` is stored against the normalized basis
//! `e_l = sqrt(C(n,l)) u^(n-l) v^l`. The group acts by substitution of the
//! inverse, `(g.f)(u,v) = f(g^-1 (u,v)^t)`, so `g.e_l = sum_k e_k rho(g)_{k,l}`
//! and `rho(gh) = rho(g) rho(h)`.

use crate::algebra::matrix::{mat_mul, max_abs, max_abs_diff, rank_exact, transpose, zeros, Mat};
use crate::algebra::{Cplx, RealField, Rational, Scalar, SqrtQ};
use crate::error::{arg, Error, Result};

pub fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) as u64 / (i + 1) as u64;
    }
    r
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub(crate) fn root<T: SqrtQ>(like: &T, v: &Rational) -> Result<T> {
    like.sqrt_q(v)
        .ok_or_else(|| Error::Numeric(format!("sqrt({v}) is not representable in this scalar kind")))
}

/// 2x2 matrix `(a, b; c, d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Scalar> GroupElement<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Result<Self> {
        let g = GroupElement { a, b, c, d };
        if g.det().is_zero() {
            return arg("singular group element");
        }
        Ok(g)
    }

    pub fn identity(like: &T) -> Self {
        GroupElement { a: like.one_like(), b: like.zero_like(), c: like.zero_like(), d: like.one_like() }
    }

    pub fn det(&self) -> T {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let m = |x: &T, y: &T, z: &T, w: &T| x.clone() * y.clone() + z.clone() * w.clone();
        GroupElement {
            a: m(&self.a, &o.a, &self.b, &o.c),
            b: m(&self.a, &o.b, &self.b, &o.d),
            c: m(&self.c, &o.a, &self.d, &o.c),
            d: m(&self.c, &o.b, &self.d, &o.d),
        }
    }

    pub fn scale(&self, k: &T) -> Self {
        GroupElement {
            a: self.a.clone() * k.clone(),
            b: self.b.clone() * k.clone(),
            c: self.c.clone() * k.clone(),
            d: self.d.clone() * k.clone(),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> GroupElement<U> {
        GroupElement { a: f(&self.a), b: f(&self.b), c: f(&self.c), d: f(&self.d) }
    }

    /// Equality up to a nonzero scalar, tested by vanishing cross products.
    pub fn projectively_eq(&self, o: &Self, tol: f64) -> bool {
        let x = [&self.a, &self.b, &self.c, &self.d];
        let y = [&o.a, &o.b, &o.c, &o.d];
        for i in 0..4 {
            for j in i + 1..4 {
                let cross = x[i].clone() * y[j].clone() - x[j].clone() * y[i].clone();
                let ok = if T::EXACT { cross.is_zero() } else { cross.abs_f64() <= tol };
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

fn poly_mul<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = vec![a[0].zero_like(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

fn poly_pow<T: Scalar>(a: &[T], n: usize) -> Vec<T> {
    let mut acc = vec![a[0].one_like()];
    for _ in 0..n {
        acc = poly_mul(&acc, a);
    }
    acc
}

/// Acts on plain monomial coefficients (index `k` is the coefficient of
/// `u^(n-k) v^k`).
pub fn act_plain<T: Scalar>(g: &GroupElement<T>, plain: &[T]) -> Result<Vec<T>> {
    let n = plain.len() - 1;
    let det_inv = g.det().inv().ok_or_else(|| Error::Argument("singular group element".into()))?;
    // g^-1 (u, v) = ((d u - b v), (-c u + a v)) / det
    let l1 = vec![g.d.clone(), -g.b.clone()];
    let l2 = vec![-g.c.clone(), g.a.clone()];
    let zero = plain[0].zero_like();
    let mut out = vec![zero; n + 1];
    for (k, c) in plain.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = poly_mul(&poly_pow(&l1, n - k), &poly_pow(&l2, k));
        for (j, t) in term.into_iter().enumerate() {
            out[j] = out[j].clone() + c.clone() * t;
        }
    }
    let s = det_inv.pow(n as u32);
    Ok(out.into_iter().map(|x| x * s.clone()).collect())
}

/// Coefficients of `d^p f / du^(p-i) dv^i`, as a plain form of degree `n - p`.
fn partial_plain<T: Scalar>(f: &[T], p: usize, i: usize) -> Vec<T> {
    let n = f.len() - 1;
    let like = &f[0];
    let mut out = vec![like.zero_like(); n - p + 1];
    for (k, c) in f.iter().enumerate() {
        let (eu, ev) = (n - k, k);
        if eu < p - i || ev < i {
            continue;
        }
        let fu: u64 = ((eu - (p - i) + 1)..=eu).map(|x| x as u64).product();
        let fv: u64 = ((ev - i + 1)..=ev).map(|x| x as u64).product();
        let idx = ev - i;
        out[idx] = out[idx].clone() + c.clone() * like.lift_i((fu * fv) as i64);
    }
    out
}

/// `p`-th transvectant on plain coefficients, normalized by
/// `((m-p)!/m!) ((n-p)!/n!)` for forms of degrees `m` and `n`.
pub fn transvectant_plain<T: Scalar>(f: &[T], h: &[T], p: usize) -> Result<Vec<T>> {
    let (m, n) = (f.len() - 1, h.len() - 1);
    if p > m || p > n {
        return arg(format!("transvectant order {p} exceeds a degree ({m}, {n})"));
    }
    let like = &f[0];
    let mut acc = vec![like.zero_like(); m + n - 2 * p + 1];
    for i in 0..=p {
        let a = partial_plain(f, p, i);
        let b = partial_plain(h, p, p - i);
        let mut sgn = like.lift_i(binom(p, i) as i64);
        if i % 2 == 1 {
            sgn = -sgn;
        }
        for (j, t) in poly_mul(&a, &b).into_iter().enumerate() {
            acc[j] = acc[j].clone() + t * sgn.clone();
        }
    }
    let norm = like.lift(&Rational::new(
        (factorial(m - p) as i64 * factorial(n - p) as i64).into(),
        (factorial(m) as i64 * factorial(n) as i64).into(),
    ));
    Ok(acc.into_iter().map(|x| x * norm.clone()).collect())
}

/// Binary form in the normalized basis.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm<T> {
    coeffs: Vec<T>,
}

impl<T: SqrtQ> BinaryForm<T> {
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return arg("a binary form needs at least one coefficient");
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn from_plain(plain: &[T]) -> Result<Self> {
        let n = plain.len() - 1;
        let c = plain
            .iter()
            .enumerate()
            .map(|(l, x)| Ok(x.clone() * root(x, &q(1, binom(n, l) as i64))?))
            .collect::<Result<Vec<_>>>()?;
        Self::new(c)
    }

    pub fn to_plain(&self) -> Result<Vec<T>> {
        let n = self.degree();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(l, x)| Ok(x.clone() * root(x, &q(binom(n, l) as i64, 1))?))
            .collect()
    }

    pub fn act(&self, g: &GroupElement<T>) -> Result<Self> {
        Self::from_plain(&act_plain(g, &self.to_plain()?)?)
    }
}

/// Matrix of `g` on `V_n` in the normalized basis.
pub fn rep_matrix<T: SqrtQ>(g: &GroupElement<T>, n: usize) -> Result<Mat<T>> {
    let like = &g.a;
    let mut m = zeros(like, n + 1, n + 1);
    for l in 0..=n {
        let mut e = vec![like.zero_like(); n + 1];
        e[l] = like.one_like();
        let img = act_plain(g, &e)?;
        for (k, v) in img.into_iter().enumerate() {
            if !v.is_zero() {
                let s = root(like, &q(binom(n, l) as i64, binom(n, k) as i64))?;
                m[k][l] = v * s;
            }
        }
    }
    Ok(m)
}

/// `p`-th transvectant of normalized forms; odd `p` is allowed.
pub fn transvectant<T: SqrtQ>(f: &BinaryForm<T>, h: &BinaryForm<T>, p: usize) -> Result<BinaryForm<T>> {
    BinaryForm::from_plain(&transvectant_plain(&f.to_plain()?, &h.to_plain()?, p)?)
}

/// Index of `e_i ^ e_j` (`i < j < 5`) in the order 01,02,03,04,12,13,14,23,24,34.
pub fn pair_index(i: usize, j: usize) -> usize {
    assert!(i < j && j < 5, "pair ({i},{j})");
    const START: [usize; 4] = [0, 4, 7, 9];
    START[i] + (j - i - 1)
}

pub const PAIRS: [(usize, usize); 10] =
    [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// Point of the second exterior power of C^5, stored as its ten coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewTensor<T> {
    pub p: Vec<T>,
}

impl<T: Scalar> SkewTensor<T> {
    pub fn new(p: Vec<T>) -> Result<Self> {
        if p.len() != 10 {
            return arg("a skew tensor has ten coordinates");
        }
        Ok(SkewTensor { p })
    }

    pub fn to_matrix(&self) -> Mat<T> {
        let like = &self.p[0];
        let mut m = zeros(like, 5, 5);
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            m[i][j] = self.p[k].clone();
            m[j][i] = -self.p[k].clone();
        }
        m
    }

    /// Reads the upper triangle; antisymmetry is checked exactly or to `tol`.
    pub fn from_matrix(m: &Mat<T>, tol: f64) -> Result<Self> {
        for i in 0..5 {
            for j in 0..5 {
                let s = m[i][j].clone() + m[j][i].clone();
                let ok = if T::EXACT { s.is_zero() } else { s.abs_f64() <= tol };
                if !ok {
                    return arg("matrix is not antisymmetric");
                }
            }
        }
        Ok(SkewTensor { p: PAIRS.iter().map(|&(i, j)| m[i][j].clone()).collect() })
    }
}

/// The orthonormal basis E_0..E_6 of the degree-6 piece, as ten-vectors.
pub fn e_basis<T: SqrtQ>(like: &T) -> Result<Vec<Vec<T>>> {
    let z = like.zero_like();
    let one = like.one_like();
    let r = |n, d| root(like, &q(n, d));
    let mut e = vec![vec![z; 10]; 7];
    e[0][pair_index(0, 1)] = one.clone();
    e[1][pair_index(0, 2)] = one.clone();
    e[2][pair_index(0, 3)] = r(3, 5)?;
    e[2][pair_index(1, 2)] = r(2, 5)?;
    e[3][pair_index(0, 4)] = r(1, 5)?;
    e[3][pair_index(1, 3)] = r(4, 5)?;
    e[4][pair_index(1, 4)] = r(3, 5)?;
    e[4][pair_index(2, 3)] = r(2, 5)?;
    e[5][pair_index(2, 4)] = one.clone();
    e[6][pair_index(3, 4)] = one;
    Ok(e)
}

/// `sum a_i E_i` for a sextic with normalized coefficients `a_i`.
pub fn form_to_skew<T: SqrtQ>(f: &BinaryForm<T>) -> Result<SkewTensor<T>> {
    if f.degree() != 6 {
        return arg(format!("expected a sextic, got degree {}", f.degree()));
    }
    let e = e_basis(&f.coeffs[0])?;
    Ok(SkewTensor { p: combine(&e, f.coeffs()) })
}

/// `sum w_i E_i` for any seven weights.
pub fn combine<T: Scalar>(e: &[Vec<T>], w: &[T]) -> Vec<T> {
    (0..10)
        .map(|k| {
            e.iter()
                .zip(w)
                .fold(w[0].zero_like(), |s, (ei, wi)| s + ei[k].clone() * wi.clone())
        })
        .collect()
}

/// `rho^4(g) A rho^4(g)^t` on a skew tensor.
pub fn wedge_act<T: SqrtQ>(g: &GroupElement<T>, a: &SkewTensor<T>) -> Result<SkewTensor<T>> {
    let r = rep_matrix(g, 4)?;
    let m = mat_mul(&mat_mul(&r, &a.to_matrix()), &transpose(&r));
    Ok(SkewTensor { p: PAIRS.iter().map(|&(i, j)| m[i][j].clone()).collect() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orbit {
    /// The open orbit through `uv(u^4 - v^4)`.
    Open,
    /// The two-dimensional orbit through `u^5 v`.
    U5V,
    /// The Veronese curve, orbit of `u^6`.
    U6,
}

/// Unnormalized orbit coordinates, as transcribed polynomials in `a, b, c, d`.
pub fn orbit_point<T: SqrtQ>(g: &GroupElement<T>, which: Orbit) -> Result<Vec<T>> {
    if g.det().is_zero() {
        return arg("singular group element");
    }
    let (a, b, c, d) = (g.a.clone(), g.b.clone(), g.c.clone(), g.d.clone());
    let like = &a;
    let k = |n: i64| like.lift_i(n);
    let s6 = root(like, &q(6, 1))?;
    let s10 = root(like, &q(10, 1))?;
    let s30 = root(like, &q(30, 1))?;
    let p = |x: &T, n: u32| x.pow(n);
    let ad = a.clone() * d.clone();
    let bc = b.clone() * c.clone();
    let v = match which {
        Orbit::Open => vec![
            s6.clone() * (-(p(&d, 5) * c.clone()) + d.clone() * p(&c, 5)),
            p(&d, 4) * (ad.clone() + k(5) * bc.clone())
                - k(5) * a.clone() * p(&c, 4) * d.clone()
                - b.clone() * p(&c, 5),
            s10.clone()
                * (-(b.clone() * p(&d, 3) * (ad.clone() + k(2) * bc.clone()))
                    + a.clone() * p(&c, 3) * (k(2) * ad.clone() + bc.clone())),
            s30 * (p(&b, 2) * p(&d, 2) - p(&a, 2) * p(&c, 2)) * (ad.clone() + bc.clone()),
            s10 * (-(p(&b, 3) * d.clone() * (k(2) * ad.clone() + bc.clone()))
                + p(&a, 3) * c.clone() * (ad.clone() + k(2) * bc.clone())),
            k(5) * a.clone() * p(&b, 4) * d.clone() + p(&b, 5) * c.clone()
                - p(&a, 4) * (ad.clone() + k(5) * bc.clone()),
            s6 * (-(p(&b, 5) * a.clone()) + b.clone() * p(&a, 5)),
        ],
        Orbit::U5V => vec![
            -(s6.clone() * p(&d, 5) * c.clone()),
            p(&d, 4) * (ad.clone() + k(5) * bc.clone()),
            -(s10.clone() * b.clone() * p(&d, 3) * (ad.clone() + k(2) * bc.clone())),
            s30 * p(&b, 2) * p(&d, 2) * (ad.clone() + bc.clone()),
            -(s10 * p(&b, 3) * d.clone() * (k(2) * ad.clone() + bc.clone())),
            k(5) * a.clone() * p(&b, 4) * d.clone() + p(&b, 5) * c.clone(),
            -(s6 * p(&b, 5) * a.clone()),
        ],
        Orbit::U6 => {
            let mut out = Vec::with_capacity(7);
            for i in 0..=6usize {
                let mut t = root(like, &q(binom(6, i) as i64, 1))? * p(&d, (6 - i) as u32) * p(&b, i as u32);
                if i % 2 == 1 {
                    t = -t;
                }
                out.push(t);
            }
            out
        }
    };
    Ok(v)
}

/// `2 X0 X6 - 2 X1 X5 + 2 X2 X4 - X3^2`, the form `(p, p)_6` on normalized
/// coordinates.
pub fn invariant_quadric<T: Scalar>(x: &[T]) -> T {
    let two = x[0].lift_i(2);
    two.clone() * x[0].clone() * x[6].clone() - two.clone() * x[1].clone() * x[5].clone()
        + two * x[2].clone() * x[4].clone()
        - x[3].clone() * x[3].clone()
}

/// The 24 listed elements fixing `[uv(u^4 - v^4)]`.
pub fn isotropy24<R: RealField + SqrtQ>(like: &R) -> Result<Vec<GroupElement<Cplx<R>>>> {
    let h = root(like, &q(1, 2))?;
    let one = Cplx::real(like.one_like());
    let i = Cplx::i_like(like);
    let xi1 = Cplx::new(h.clone(), h.clone());
    let inv_s2 = Cplx::real(h);
    let mut out = Vec::with_capacity(24);
    let mut xi = one.clone();
    for _ in 0..4 {
        let xinv = xi.conj();
        let s = |m: GroupElement<Cplx<R>>| m.scale(&inv_s2);
        out.push(GroupElement { a: xi.clone(), b: xi.zero_like(), c: xi.zero_like(), d: xinv.clone() });
        out.push(GroupElement { a: xi.zero_like(), b: xi.clone(), c: -xi.clone(), d: xi.zero_like() });
        out.push(s(GroupElement { a: xinv.clone(), b: -xinv.clone(), c: xi.clone(), d: xi.clone() }));
        out.push(s(GroupElement {
            a: i.clone() * xinv.clone(),
            b: -xinv.clone(),
            c: xi.clone(),
            d: -(i.clone() * xi.clone()),
        }));
        out.push(s(GroupElement { a: -xinv.clone(), b: -xinv.clone(), c: xi.clone(), d: -xi.clone() }));
        out.push(s(GroupElement {
            a: -(i.clone() * xinv.clone()),
            b: -xinv.clone(),
            c: xi.clone(),
            d: i.clone() * xi.clone(),
        }));
        xi = xi * xi1.clone();
    }
    Ok(out)
}

/// Both sides of the intertwining identity: the second exterior power of
/// `rho^4(A)` applied to each `E_i`, and `(E_0..E_6) rho^6(A)`, as 10x7 matrices.
pub fn commutation_sides<T: SqrtQ>(a: &GroupElement<T>) -> Result<(Mat<T>, Mat<T>)> {
    let like = &a.a;
    let e = e_basis(like)?;
    let r6 = rep_matrix(a, 6)?;
    let mut lhs = zeros(like, 10, 7);
    let mut rhs = zeros(like, 10, 7);
    for i in 0..7 {
        let img = wedge_act(a, &SkewTensor { p: e[i].clone() })?;
        let col: Vec<T> = (0..7).map(|j| r6[j][i].clone()).collect();
        let comb = combine(&e, &col);
        for k in 0..10 {
            lhs[k][i] = img.p[k].clone();
            rhs[k][i] = comb[k].clone();
        }
    }
    Ok((lhs, rhs))
}

/// True iff the two sides of [`commutation_sides`] agree; exact kinds compare
/// exactly, float kinds to `1e-12` relative.
pub fn commutation_check<T: SqrtQ + PartialEq>(a: &GroupElement<T>) -> Result<bool> {
    let (l, r) = commutation_sides(a)?;
    Ok(if T::EXACT { l == r } else { max_abs_diff(&l, &r) <= 1e-12 * (1.0 + max_abs(&l)) })
}

/// Ranks of the first and third transvectants on the second exterior power of
/// the quartics; the degree-6 and degree-2 summands give 7 and 3.
pub fn clebsch_gordan_ranks() -> (usize, usize) {
    let like = q(0, 1);
    let mono = |k: usize| {
        let mut v = vec![like.clone(); 5];
        v[k] = q(1, 1);
        v
    };
    let mut m1 = Vec::new();
    let mut m3 = Vec::new();
    for &(k, l) in PAIRS.iter() {
        m1.push(transvectant_plain(&mono(k), &mono(l), 1).expect("orders fit"));
        m3.push(transvectant_plain(&mono(k), &mono(l), 3).expect("orders fit"));
    }
    (rank_exact(&m1), rank_exact(&m3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Surd, SurdComplex};

    fn sr(n: i64, d: i64) -> Surd {
        Surd::from_rational(q(n, d))
    }

    fn g(a: i64, b: i64, c: i64, d: i64) -> GroupElement<Surd> {
        GroupElement::new(sr(a, 1), sr(b, 1), sr(c, 1), sr(d, 1)).unwrap()
    }

    #[test]
    fn diagonal_rep_is_power_scaling() {
        let m = rep_matrix(&g(3, 0, 0, 1), 4).unwrap();
        for k in 0..5 {
            assert_eq!(m[k][k], sr(1, 3i64.pow(4 - k as u32)));
        }
    }

    #[test]
    fn transvectant_constants() {
        let u6 = vec![q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1)];
        let v6: Vec<Rational> = u6.iter().rev().cloned().collect();
        assert_eq!(transvectant_plain(&u6, &v6, 6).unwrap(), vec![q(1, 1)]);
        let mut p = vec![q(0, 1); 7];
        p[1] = q(1, 1);
        p[5] = q(-1, 1);
        assert_eq!(transvectant_plain(&p, &p, 6).unwrap(), vec![q(1, 3)]);
        assert!(transvectant_plain(&p, &p, 7).is_err());
    }

    #[test]
    fn orbit_at_identity() {
        let id = GroupElement::identity(&sr(1, 1));
        let a = orbit_point(&id, Orbit::Open).unwrap();
        assert_eq!(a[1], sr(1, 1));
        assert_eq!(a[5], sr(-1, 1));
        assert_eq!(invariant_quadric(&a), sr(2, 1));
        let b = orbit_point(&id, Orbit::U5V).unwrap();
        assert_eq!(invariant_quadric(&b), sr(0, 1));
    }

    #[test]
    fn isotropy_fixes_the_octahedral_form() {
        let like = Surd::from_int(1);
        let f: Vec<SurdComplex> = [0, 1, 0, 0, 0, -1, 0].iter().map(|&x| Cplx::real(Surd::from_int(x))).collect();
        for h in isotropy24(&like).unwrap() {
            let img = act_plain(&h, &f).unwrap();
            let k = img[1].clone();
            assert!(!k.is_zero());
            let scaled: Vec<_> = f.iter().map(|x| x.clone() * k.clone()).collect();
            assert_eq!(img, scaled);
        }
    }

    #[test]
    fn clebsch_gordan() {
        assert_eq!(clebsch_gordan_ranks(), (7, 3));
    }

    #[test]
    fn intertwining_on_triangular_element() {
        assert!(commutation_check(&g(1, 3, 0, 1)).unwrap());
        assert!(commutation_check(&g(1, 0, 2, 1)).unwrap());
    }
}

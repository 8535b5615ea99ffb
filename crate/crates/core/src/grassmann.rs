//! Holomorphic curves in G(2,5) through their Plücker coordinates.
//!
//! A curve is ten polynomials `p_ij(z)`, `i < j`, in the order
//! 01,02,03,04,12,13,14,23,24,34. The fourth exterior power of C^5 is
//! identified with C^5 through `e_0123, e_0124, e_0134, e_0234, e_1234`, in
//! which `p ^ p = 2 (r_1, ..., r_5)(p)` with `r_k` the five Plücker quadrics.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::algebra::cxroots::{aberth_c64, complex_roots};
use crate::algebra::matrix::{rank_exact, Mat};
use crate::algebra::resultant::resultant;
use crate::algebra::{Cplx, ExactField, MultiPoly, RealField, Scalar, SqrtQ, UniPoly, C64};
use crate::error::{arg, Error, Result};
use crate::sl2rep::{binom, pair_index, root, SkewTensor, PAIRS};

/// Polynomial in `z` with complex coefficients over the real kind `R`.
pub type Poly<R> = UniPoly<Cplx<R>>;

/// The five Plücker quadrics, in the order of the basis of the fourth power.
pub fn plucker_quadrics<T>(p: &[T]) -> Vec<T>
where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let x = |i: usize, j: usize| p[pair_index(i, j)].clone();
    let quad = |a, b, c, d| x(a, b) * x(c, d) - x(a, c) * x(b, d) + x(a, d) * x(b, c);
    vec![quad(0, 1, 2, 3), quad(0, 1, 2, 4), quad(0, 1, 3, 4), quad(0, 2, 3, 4), quad(1, 2, 3, 4)]
}

fn max_coeff<R: RealField>(ps: &[Poly<R>]) -> f64 {
    ps.iter().flat_map(|p| p.coeffs()).map(|c| c.abs_f64()).fold(0.0, f64::max)
}

fn like_of<R: RealField>(ps: &[Poly<R>]) -> Option<Cplx<R>> {
    ps.iter().find_map(|p| p.coeffs().first().map(|c| c.zero_like()))
}

/// A polynomial map into the projective space of the second exterior power.
#[derive(Clone, Debug, PartialEq)]
pub struct PlueckerCurve<R: RealField> {
    coords: Vec<Poly<R>>,
}

impl<R: RealField> PlueckerCurve<R> {
    /// Builds a curve from its ten coordinates and clears common factors:
    /// the full polynomial gcd for exact kinds, common powers of `z` otherwise.
    pub fn new(coords: Vec<Poly<R>>) -> Result<Self> {
        if coords.len() != 10 {
            return arg("a Plücker curve has ten coordinates");
        }
        if coords.iter().all(|p| p.is_zero()) {
            return Err(Error::Degenerate("all Plücker coordinates vanish".into()));
        }
        let mut coords = coords;
        let v = coords.iter().filter_map(|p| p.valuation()).min().unwrap_or(0);
        if v > 0 {
            coords = coords.iter().map(|p| p.shift_down(v)).collect();
        }
        if R::EXACT {
            let mut g = UniPoly::zero();
            for p in &coords {
                g = g.gcd(p).ok_or_else(|| Error::Numeric("gcd failed".into()))?;
            }
            if g.degree().unwrap_or(0) > 0 {
                coords = coords
                    .iter()
                    .map(|p| p.div_rem(&g).map(|(q, _)| q))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| Error::Numeric("division by the common factor failed".into()))?;
            }
        }
        Ok(PlueckerCurve { coords })
    }

    /// A constant curve, i.e. a single point of the second exterior power.
    pub fn constant(p: &[Cplx<R>]) -> Result<Self> {
        Self::new(p.iter().map(|c| UniPoly::constant(c.clone())).collect())
    }

    pub fn coords(&self) -> &[Poly<R>] {
        &self.coords
    }

    pub fn degree(&self) -> usize {
        self.coords.iter().filter_map(|p| p.degree()).max().unwrap_or(0)
    }

    pub(crate) fn like(&self) -> Cplx<R> {
        like_of(&self.coords).expect("nonzero curve")
    }

    /// The ten-vector multiplying `z^k`.
    pub fn coefficient_vector(&self, k: usize) -> Vec<Cplx<R>> {
        let z = self.like();
        self.coords.iter().map(|p| p.coeff(k).cloned().unwrap_or_else(|| z.clone())).collect()
    }

    pub fn eval(&self, z: &Cplx<R>) -> Vec<Cplx<R>> {
        self.coords.iter().map(|p| p.eval(z)).collect()
    }

    /// `A M A^t` on the skew matrix `M(z)` of the curve.
    pub fn transform(&self, a: &Mat<Cplx<R>>) -> Result<Self> {
        if a.len() != 5 || a.iter().any(|r| r.len() != 5) {
            return arg("expected a 5x5 matrix");
        }
        let mut out = Vec::with_capacity(10);
        for &(i, j) in PAIRS.iter() {
            let mut acc = UniPoly::zero();
            for (k, &(s, t)) in PAIRS.iter().enumerate() {
                let m = a[i][s].clone() * a[j][t].clone() - a[i][t].clone() * a[j][s].clone();
                if !m.is_zero() {
                    acc = acc + self.coords[k].scale(&m);
                }
            }
            out.push(acc);
        }
        Self::new(out)
    }

    /// The same curve in the coordinate `w = 1/z`: `w^d F(1/w)`.
    pub fn invert_parameter(&self) -> Self {
        let d = self.degree();
        PlueckerCurve { coords: self.coords.iter().map(|p| p.reverse(d)).collect() }
    }

    /// Coefficient-wise conversion to another scalar kind.
    pub fn map_kind<S: RealField>(&self, f: impl Fn(&Cplx<R>) -> Cplx<S>) -> PlueckerCurve<S> {
        PlueckerCurve { coords: self.coords.iter().map(|p| p.map(&f)).collect() }
    }

    pub fn to_c64(&self) -> PlueckerCurve<f64> {
        self.map_kind(|c| c.to_c64())
    }

    /// Coefficient-wise complex conjugate.
    pub fn conj(&self) -> Self {
        self.map_kind(|c| c.conj())
    }
}

/// A 2x5 matrix of polynomials whose rows span the 2-plane at each `z`.
#[derive(Clone, Debug, PartialEq)]
pub struct PencilCurve<R: RealField> {
    rows: [Vec<Poly<R>>; 2],
}

impl<R: RealField> PencilCurve<R> {
    pub fn new(row1: Vec<Poly<R>>, row2: Vec<Poly<R>>) -> Result<Self> {
        if row1.len() != 5 || row2.len() != 5 {
            return arg("pencil rows have five entries");
        }
        Ok(PencilCurve { rows: [row1, row2] })
    }

    pub fn rows(&self) -> &[Vec<Poly<R>>; 2] {
        &self.rows
    }

    pub fn entry(&self, r: usize, c: usize) -> &Poly<R> {
        &self.rows[r][c]
    }

    /// Largest entry degree of row `r`.
    pub fn row_degree(&self, r: usize) -> usize {
        self.rows[r].iter().filter_map(|p| p.degree()).max().unwrap_or(0)
    }

    pub fn map_kind<S: RealField>(&self, f: impl Fn(&Cplx<R>) -> Cplx<S>) -> PencilCurve<S> {
        let m = |row: &Vec<Poly<R>>| row.iter().map(|p| p.map(&f)).collect();
        PencilCurve { rows: [m(&self.rows[0]), m(&self.rows[1])] }
    }
}

/// `p_ij = phi1_i phi2_j - phi1_j phi2_i`, with common factors cleared.
pub fn wedge_pencil<R: RealField>(c: &PencilCurve<R>) -> Result<PlueckerCurve<R>> {
    let [r1, r2] = &c.rows;
    let coords: Vec<Poly<R>> = PAIRS
        .iter()
        .map(|&(i, j)| r1[i].clone() * r2[j].clone() - r1[j].clone() * r2[i].clone())
        .collect();
    if coords.iter().all(|p| p.is_zero()) {
        return Err(Error::Degenerate("pencil rows are linearly dependent".into()));
    }
    PlueckerCurve::new(coords)
}

/// The five Plücker quadrics of the curve, as polynomials in `z`.
pub fn pluecker_residual<R: RealField>(f: &PlueckerCurve<R>) -> Vec<Poly<R>> {
    plucker_quadrics(&f.coords)
}

/// Largest residual coefficient relative to the squared coefficient scale.
pub fn pluecker_residual_max<R: RealField>(f: &PlueckerCurve<R>) -> f64 {
    let s = max_coeff(&f.coords);
    max_coeff(&pluecker_residual(f)) / (s * s)
}

/// Gram matrix `G_kl = <B_k, B_l>` of the coefficient vectors of `z^k`, and
/// the defect `max |G_kl - c C(6,k) delta_kl|` with `c = G_00`.
pub fn gram_and_defect<R: RealField>(f: &PlueckerCurve<R>) -> Result<(Mat<Cplx<R>>, f64)> {
    if f.degree() != 6 {
        return arg(format!("expected a degree-6 curve, got degree {}", f.degree()));
    }
    let b: Vec<Vec<Cplx<R>>> = (0..7).map(|k| f.coefficient_vector(k)).collect();
    let like = f.like();
    let gram: Mat<Cplx<R>> = (0..7)
        .map(|k| {
            (0..7)
                .map(|l| b[k].iter().zip(&b[l]).fold(like.clone(), |s, (x, y)| s + x.clone() * y.conj()))
                .collect()
        })
        .collect();
    let c = gram[0][0].clone();
    let mut defect = 0.0f64;
    for k in 0..7 {
        for l in 0..7 {
            let mut d = gram[k][l].clone();
            if k == l {
                d = d - c.clone() * like.lift_i(binom(6, k) as i64);
            }
            defect = defect.max(d.abs_f64());
        }
    }
    Ok((gram, defect))
}

/// `dF/dz ^ dF/dz` as five polynomials.
pub fn derivative_wedge<R: RealField>(f: &PlueckerCurve<R>) -> Vec<Poly<R>> {
    let d: Vec<Poly<R>> = f.coords.iter().map(|p| p.derivative()).collect();
    let two = f.like().lift_i(2);
    plucker_quadrics(&d).into_iter().map(|p| p.scale(&two)).collect()
}

/// A point of the Riemann sphere.
#[derive(Clone, Debug, PartialEq)]
pub enum Point {
    Finite(C64),
    Infinity,
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Point::Finite(z) => [z.re, z.im].serialize(s),
            Point::Infinity => "inf".serialize(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RamifiedPoint {
    pub point: Point,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Ramification {
    pub reducible: bool,
    pub divisor: Vec<RamifiedPoint>,
}

impl Ramification {
    /// True when the finite ramified points are `z = 0` only (within `eps`)
    /// and infinity is ramified.
    pub fn support_is_zero_and_infinity(&self, eps: f64) -> bool {
        let finite: Vec<&C64> = self
            .divisor
            .iter()
            .filter_map(|r| match &r.point {
                Point::Finite(z) => Some(z),
                Point::Infinity => None,
            })
            .collect();
        finite.len() == 1 && finite[0].norm() <= eps && self.has_infinity()
    }

    pub fn support_is_infinity(&self) -> bool {
        self.divisor.len() == 1 && self.has_infinity()
    }

    pub fn has_infinity(&self) -> bool {
        self.divisor.iter().any(|r| r.point == Point::Infinity)
    }
}

/// Reducibility and ramified points of a curve in G(2,5).
///
/// The ramification divisor is the zero divisor of `dF/dz ^ dF/dz` after
/// clearing its polynomial content; the order at infinity is
/// `2 deg F - 4 - deg`. Exact kinds use polynomial gcds; float kinds use
/// clustered roots checked against every component.
pub fn ramification<R: RealField>(f: &PlueckerCurve<R>, tol: f64) -> Result<Ramification> {
    let res = pluecker_residual_max(f);
    let on_grassmannian = if R::EXACT { res == 0.0 } else { res <= tol };
    if !on_grassmannian {
        return Err(Error::Contract(format!("curve is not in G(2,5): Plücker residual {res:e}")));
    }
    let w = derivative_wedge(f);
    let nominal = (2 * f.degree()).saturating_sub(4);
    if R::EXACT {
        ramification_exact(&w, nominal)
    } else {
        let d: Vec<Poly<R>> = f.coords.iter().map(|p| p.derivative()).collect();
        let s = max_coeff(&d);
        Ok(ramification_float(&w, nominal, tol, s * s))
    }
}

fn sort_divisor(d: &mut [RamifiedPoint]) {
    d.sort_by(|a, b| match (&a.point, &b.point) {
        (Point::Finite(x), Point::Finite(y)) => x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)),
        (Point::Finite(_), Point::Infinity) => std::cmp::Ordering::Less,
        (Point::Infinity, Point::Finite(_)) => std::cmp::Ordering::Greater,
        _ => std::cmp::Ordering::Equal,
    });
}

fn ramification_exact<R: RealField>(w: &[Poly<R>], nominal: usize) -> Result<Ramification> {
    let mut g = UniPoly::zero();
    for p in w {
        g = g.gcd(p).ok_or_else(|| Error::Numeric("gcd failed".into()))?;
    }
    if g.is_zero() {
        return Ok(Ramification { reducible: true, divisor: Vec::new() });
    }
    let mut divisor = Vec::new();
    let v = g.valuation().unwrap_or(0);
    if v > 0 {
        divisor.push(RamifiedPoint { point: Point::Finite(Cplx::new(0.0, 0.0)), multiplicity: v });
    }
    let rest = g.shift_down(v);
    let factors = rest
        .squarefree_decomposition()
        .ok_or_else(|| Error::Numeric("square-free decomposition failed".into()))?;
    for (fac, m) in factors {
        let c: Vec<C64> = fac.coeffs().iter().map(|c| c.to_c64()).collect();
        for z in aberth_c64(&c) {
            divisor.push(RamifiedPoint { point: Point::Finite(z), multiplicity: m });
        }
    }
    let deg = w.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    if nominal > deg {
        divisor.push(RamifiedPoint { point: Point::Infinity, multiplicity: nominal - deg });
    }
    sort_divisor(&mut divisor);
    Ok(Ramification { reducible: false, divisor })
}

fn ramification_float<R: RealField>(w: &[Poly<R>], nominal: usize, tol: f64, scale: f64) -> Ramification {
    let cut = tol * scale.max(f64::MIN_POSITIVE);
    let trimmed: Vec<Poly<R>> = w
        .iter()
        .map(|p| {
            UniPoly::new(
                p.coeffs()
                    .iter()
                    .map(|c| if c.abs_f64() <= cut { c.zero_like() } else { c.clone() })
                    .collect(),
            )
        })
        .collect();
    let nonzero: Vec<&Poly<R>> = trimmed.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return Ramification { reducible: true, divisor: Vec::new() };
    }
    let mut divisor = Vec::new();
    let v = nonzero.iter().filter_map(|p| p.valuation()).min().unwrap_or(0);
    if v > 0 {
        divisor.push(RamifiedPoint { point: Point::Finite(Cplx::new(0.0, 0.0)), multiplicity: v });
    }
    let shifted: Vec<Poly<R>> = nonzero.iter().map(|p| p.shift_down(v)).collect();
    if shifted.iter().all(|p| p.degree().unwrap_or(0) > 0) {
        let roots: Vec<Vec<Cplx<R>>> = shifted.iter().map(complex_roots).collect();
        let pivot = (0..shifted.len()).min_by_key(|&i| shifted[i].degree()).unwrap_or(0);
        let mut centers: Vec<Cplx<R>> = Vec::new();
        for z in &roots[pivot] {
            let zc = z.to_c64();
            if !centers.iter().any(|c| (c.to_c64() - zc.clone()).norm() <= 1e-5 * (1.0 + zc.norm())) {
                centers.push(z.clone());
            }
        }
        for zc in centers {
            let z64 = zc.to_c64();
            let rad = 1e-5 * (1.0 + z64.norm());
            let mut mult = usize::MAX;
            for (p, rs) in shifted.iter().zip(&roots) {
                let size: f64 = p
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c.abs_f64() * z64.norm().max(1.0).powi(k as i32))
                    .sum();
                let val = p.eval(&zc).abs_f64();
                let m = rs.iter().filter(|r| (r.to_c64() - z64.clone()).norm() <= rad).count();
                if val > tol.sqrt() * size || m == 0 {
                    mult = 0;
                    break;
                }
                mult = mult.min(m);
            }
            if mult > 0 && mult != usize::MAX {
                divisor.push(RamifiedPoint { point: Point::Finite(z64), multiplicity: mult });
            }
        }
    }
    let deg = nonzero.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    if nominal > deg {
        divisor.push(RamifiedPoint { point: Point::Infinity, multiplicity: nominal - deg });
    }
    sort_divisor(&mut divisor);
    Ramification { reducible: false, divisor }
}

/// Degree test and the six norm equations of a monomial standard
/// parameterization `(1, 0, a2 z^2, b3 z^3, f4 z^4; 0, 1, u1 z, v2 z^2, z3 z^3)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JpReport {
    pub nonsingular: bool,
    pub residuals: [f64; 6],
}

pub fn jp_checks<R: RealField>(c: &PencilCurve<R>) -> Result<JpReport> {
    let one_at = |p: &Poly<R>| p.degree() == Some(0) && (p.coeffs()[0].clone() - p.coeffs()[0].one_like()).is_zero();
    let [r1, r2] = c.rows();
    if !(one_at(&r1[0]) && r1[1].is_zero() && r2[0].is_zero() && one_at(&r2[1])) {
        return arg("pencil does not start with the identity block");
    }
    let like = r1[0].coeffs()[0].zero_like();
    let mono = |p: &Poly<R>, k: usize| -> Result<Cplx<R>> {
        for (j, c) in p.coeffs().iter().enumerate() {
            if j != k && !c.is_zero() {
                return arg(format!("entry has a z^{j} term outside the monomial shape"));
            }
        }
        Ok(p.coeff(k).cloned().unwrap_or_else(|| like.clone()))
    };
    let a2 = mono(&r1[2], 2)?;
    let b3 = mono(&r1[3], 3)?;
    let f4 = mono(&r1[4], 4)?;
    let u1 = mono(&r2[2], 1)?;
    let v2 = mono(&r2[3], 2)?;
    let z3 = mono(&r2[4], 3)?;
    let n = |x: Cplx<R>| x.norm_sqr_r();
    let k = |m: i64| like.re.lift_i(m);
    let eqs = [
        n(u1.clone()) - k(6),
        n(v2.clone()) + n(a2.clone()) - k(15),
        n(z3.clone()) + n(b3.clone()) - k(20),
        n(f4.clone()) + n(a2.clone() * v2.clone() - b3.clone() * u1.clone()) - k(15),
        n(a2 * z3.clone() - f4.clone() * u1) - k(6),
        n(b3 * z3 - f4 * v2) - k(1),
    ];
    let residuals = eqs.map(|e| e.to_f64().abs());
    let deg = wedge_pencil(c)?.degree();
    Ok(JpReport { nonsingular: deg == c.row_degree(0) + c.row_degree(1), residuals })
}

fn certified_c<R: RealField>(f: &PlueckerCurve<R>, tol: f64) -> Result<R> {
    let (g, defect) = gram_and_defect(f)?;
    let c = g[0][0].re.clone();
    let ok = if R::EXACT { defect == 0.0 } else { defect <= tol * c.to_f64().abs() };
    if !ok {
        return Err(Error::Contract(format!("curve is not constantly curved: Gram defect {defect:e}")));
    }
    Ok(c)
}

/// `|A|^2(z) = 20/3 - |dF ^ dF|^2 / (9 c^2 (1+|z|^2)^8)` for a certified curve.
pub fn second_ff_norm<R: RealField>(f: &PlueckerCurve<R>, z: &Cplx<R>, tol: f64) -> Result<R> {
    let c = certified_c(f, tol)?;
    let w = derivative_wedge(f);
    let n2 = w.iter().fold(c.zero_like(), |s, p| s + p.eval(z).norm_sqr_r());
    let den = c.lift_i(9) * c.clone() * c.clone() * (c.one_like() + z.norm_sqr_r()).pow(8);
    let ratio = n2.div(&den).ok_or_else(|| Error::Numeric("zero normalization".into()))?;
    Ok(c.lift(&crate::algebra::Rational::new(20.into(), 3.into())) - ratio)
}

/// Numerical value of the integral of `|A|^2` against the induced area form.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Quadrature {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: u32,
}

const PHI_NODES: usize = 32;

/// Integrates `|A|^2 6/(1+|z|^2)^2` over the plane with `z = tan(rho/2) e^{i phi}`:
/// trapezoid in `phi` (exact for the trigonometric polynomial that arises) and
/// adaptive double-exponential quadrature in `rho`.
pub fn w_numeric<R: RealField>(f: &PlueckerCurve<R>, tol: f64) -> Result<Quadrature> {
    let c = certified_c(f, tol)?.to_f64();
    let w: Vec<Vec<C64>> = derivative_wedge(f)
        .iter()
        .map(|p| {
            let mut v: Vec<C64> = p.coeffs().iter().map(|c| c.to_c64()).collect();
            v.resize(9, Cplx::new(0.0, 0.0));
            v
        })
        .collect();
    let norm = 1.0 / (9.0 * c * c);
    let trig: Vec<(f64, f64)> = (0..PHI_NODES)
        .map(|j| {
            let phi = 2.0 * PI * j as f64 / PHI_NODES as f64;
            (phi.cos(), phi.sin())
        })
        .collect();
    let integrand = |rho: f64| {
        let (s, co) = ((rho / 2.0).sin(), (rho / 2.0).cos());
        let mut acc = 0.0;
        for &(cp, sp) in &trig {
            // W(z) / (1+|z|^2)^4 = sum w_k s^k co^(8-k) e^{ik phi}
            let mut n2 = 0.0;
            for comp in &w {
                let (mut re, mut im) = (0.0, 0.0);
                let (mut er, mut ei) = (1.0, 0.0);
                for (k, wk) in comp.iter().enumerate() {
                    let m = s.powi(k as i32) * co.powi(8 - k as i32);
                    re += m * (wk.re * er - wk.im * ei);
                    im += m * (wk.re * ei + wk.im * er);
                    let t = er * cp - ei * sp;
                    ei = er * sp + ei * cp;
                    er = t;
                }
                n2 += re * re + im * im;
            }
            acc += 20.0 / 3.0 - n2 * norm;
        }
        1.5 * rho.sin() * acc * (2.0 * PI / PHI_NODES as f64)
    };
    let out = quadrature::integrate(integrand, 0.0, PI, 1e-11);
    let target = 1e-8 * out.integral.abs().max(1.0);
    if !out.integral.is_finite() || out.error_estimate > target {
        return Err(Error::Numeric(format!(
            "quadrature did not converge: estimate {} with error {:e}",
            out.integral, out.error_estimate
        )));
    }
    Ok(Quadrature { value: out.integral, error_estimate: out.error_estimate, evaluations: out.num_function_evaluations })
}

/// The three skew pairings cutting the sextic span out of the second exterior
/// power: `sqrt6 p03 - 3 p12`, `2 p04 - p13`, `sqrt6 p14 - 3 p23`.
pub fn v6_annihilators<T: SqrtQ>(like: &T) -> Result<[SkewTensor<T>; 3]> {
    let s6 = root(like, &crate::algebra::Rational::from_integer(6.into()))?;
    let mk = |entries: [((usize, usize), T); 2]| {
        let mut p = vec![like.zero_like(); 10];
        for ((i, j), v) in entries {
            p[pair_index(i, j)] = v;
        }
        SkewTensor { p }
    };
    Ok([
        mk([((0, 3), s6.clone()), ((1, 2), like.lift_i(-3))]),
        mk([((0, 4), like.lift_i(2)), ((1, 3), like.lift_i(-1))]),
        mk([((1, 4), s6), ((2, 3), like.lift_i(-3))]),
    ])
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum GenericityMethod {
    /// Exact elimination over every chart of the projective plane.
    Elimination,
    /// Dense complex sampling; the smallest normalized Pfaffian size seen.
    Sampling { samples: usize, min_residual: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Genericity<K> {
    pub generic: bool,
    pub method: GenericityMethod,
    pub witness: Option<[K; 3]>,
}

const VARS: [&str; 3] = ["l", "m", "t"];

/// Diagonal 4x4 Pfaffians of `l A + m B + t C`, signed `(-1)^i`, as quadrics.
pub fn center_map<K: ExactField>(a: &SkewTensor<K>, b: &SkewTensor<K>, c: &SkewTensor<K>) -> Vec<MultiPoly<K>> {
    let lin = |k: usize| {
        MultiPoly::var(&VARS, "l").scale(&a.p[k])
            + MultiPoly::var(&VARS, "m").scale(&b.p[k])
            + MultiPoly::var(&VARS, "t").scale(&c.p[k])
    };
    let x = |i: usize, j: usize| lin(pair_index(i, j));
    (0..5)
        .map(|skip| {
            let idx: Vec<usize> = (0..5).filter(|&i| i != skip).collect();
            let (p, q, r, s) = (idx[0], idx[1], idx[2], idx[3]);
            let pf = x(p, q) * x(r, s) - x(p, r) * x(q, s) + x(p, s) * x(q, r);
            if skip % 2 == 1 {
                -pf
            } else {
                pf
            }
        })
        .collect()
}

fn eval_all<K: ExactField>(qs: &[MultiPoly<K>], pt: &[K; 3]) -> Result<bool> {
    for q in qs {
        if !q.eval(pt)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Common roots of univariate polynomials: `None` when every one vanishes.
fn common_gcd<K: ExactField>(ps: &[UniPoly<K>]) -> Result<Option<UniPoly<K>>> {
    let mut g = UniPoly::zero();
    for p in ps {
        g = g.gcd(p).ok_or_else(|| Error::Numeric("gcd failed".into()))?;
    }
    Ok(if g.is_zero() { None } else { Some(g) })
}

/// Decides whether every member of the net `l A + m B + t C` has rank 4.
///
/// Exact elimination runs over the charts `t = 1`, `(l : 1 : 0)` and
/// `(1 : 0 : 0)`; in the first chart pairwise resultants in `m` give a
/// univariate necessary condition whose gcd is tested. When that gcd is
/// nonconstant and no exact witness exists in the coefficient field, the
/// answer falls back to `samples` complex samples.
pub fn center_genericity<K: ExactField>(
    a: &SkewTensor<K>,
    b: &SkewTensor<K>,
    c: &SkewTensor<K>,
    samples: usize,
) -> Result<Genericity<K>> {
    if rank_exact(&vec![a.p.clone(), b.p.clone(), c.p.clone()]) < 3 {
        return arg("the three skew forms are linearly dependent");
    }
    let like = a.p[0].zero_like();
    let (zero, one) = (like.clone(), like.one_like());
    let qs = center_map(a, b, c);
    let found = |w: [K; 3]| Genericity { generic: false, method: GenericityMethod::Elimination, witness: Some(w) };
    if qs.iter().all(|q| q.is_zero()) {
        return Ok(found([one, zero.clone(), zero]));
    }
    // the point (1 : 0 : 0)
    let p100 = [one.clone(), zero.clone(), zero.clone()];
    if eval_all(&qs, &p100)? {
        return Ok(found(p100));
    }
    // the line t = 0, m = 1
    let line: Vec<UniPoly<K>> = qs
        .iter()
        .map(|q| {
            q.substitute_value(2, &zero)
                .substitute_value(1, &one)
                .to_unipoly(0)
                .ok_or_else(|| Error::Inconsistent("substitution left extra variables".into()))
        })
        .collect::<Result<_>>()?;
    match common_gcd(&line)? {
        None => return Ok(found([zero.clone(), one.clone(), zero.clone()])),
        Some(g) if g.degree() == Some(1) => {
            let l0 = -(g.coeffs()[0].clone());
            return Ok(found([l0, one.clone(), zero.clone()]));
        }
        Some(g) if g.degree().unwrap_or(0) > 1 => {
            return Ok(Genericity { generic: false, method: GenericityMethod::Elimination, witness: None });
        }
        _ => {}
    }
    // the chart t = 1
    let chart: Vec<MultiPoly<K>> = qs.iter().map(|q| q.substitute_value(2, &one)).collect();
    let mut conds = Vec::new();
    for i in 0..chart.len() {
        for j in i + 1..chart.len() {
            let (p, q) = (&chart[i], &chart[j]);
            if p.is_zero() || q.is_zero() {
                continue;
            }
            let has_m = |x: &MultiPoly<K>| x.degree_in(1).unwrap_or(0) > 0;
            let polys = if !has_m(p) && !has_m(q) { vec![p.clone(), q.clone()] } else { vec![resultant(p, q, "m")?] };
            for r in polys {
                let u = r.to_unipoly(0).ok_or_else(|| Error::Inconsistent("resultant kept m".into()))?;
                if !u.is_zero() {
                    conds.push(u);
                }
            }
        }
    }
    if !conds.is_empty() {
        let h = common_gcd(&conds)?.expect("nonzero conditions");
        if h.degree() == Some(0) {
            return Ok(Genericity { generic: true, method: GenericityMethod::Elimination, witness: None });
        }
        if h.degree() == Some(1) {
            let l0 = -(h.coeffs()[0].clone());
            let fibre: Vec<UniPoly<K>> = chart
                .iter()
                .map(|q| {
                    q.substitute_value(0, &l0)
                        .to_unipoly(1)
                        .ok_or_else(|| Error::Inconsistent("substitution left extra variables".into()))
                })
                .collect::<Result<_>>()?;
            match common_gcd(&fibre)? {
                None => return Ok(found([l0, zero.clone(), one.clone()])),
                Some(g) if g.degree() == Some(0) => {
                    return Ok(Genericity { generic: true, method: GenericityMethod::Elimination, witness: None })
                }
                Some(g) if g.degree() == Some(1) => {
                    let m0 = -(g.coeffs()[0].clone());
                    return Ok(found([l0, m0, one.clone()]));
                }
                Some(_) => {
                    return Ok(Genericity { generic: false, method: GenericityMethod::Elimination, witness: None })
                }
            }
        }
    }
    let mats = [a, b, c].map(|s| s.p.iter().map(|x| x.to_c64()).collect::<Vec<C64>>());
    let (generic, min_residual) = sample_center_map(&mats, samples);
    Ok(Genericity { generic, method: GenericityMethod::Sampling { samples, min_residual }, witness: None })
}

/// Float variant: sampling only.
pub fn center_genericity_sampled<T: Scalar>(
    a: &SkewTensor<T>,
    b: &SkewTensor<T>,
    c: &SkewTensor<T>,
    samples: usize,
) -> (bool, f64) {
    let mats = [a, b, c].map(|s| s.p.iter().map(|x| x.to_c64()).collect::<Vec<C64>>());
    sample_center_map(&mats, samples)
}

fn sample_center_map(m: &[Vec<C64>; 3], samples: usize) -> (bool, f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_6e4e);
    let mut worst = f64::INFINITY;
    let zero = Cplx::new(0.0, 0.0);
    for _ in 0..samples {
        let mut v: Vec<C64> = (0..3).map(|_| Cplx::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)).collect();
        let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        v.iter_mut().for_each(|z| *z = Cplx::new(z.re / n, z.im / n));
        let p: Vec<C64> = (0..10)
            .map(|k| (0..3).fold(zero.clone(), |s, i| s + v[i].clone() * m[i][k].clone()))
            .collect();
        let size = p.iter().map(|z| z.norm_sqr()).sum::<f64>();
        let pf = plucker_quadrics(&p).iter().map(|z| z.norm()).fold(0.0, f64::max);
        worst = worst.min(pf / size.max(f64::MIN_POSITIVE));
    }
    (worst > 1e-8, worst)
}

/// Verdict record for a candidate curve.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub plucker_residual_max: f64,
    pub gram: Vec<Vec<[f64; 2]>>,
    pub gram_defect: f64,
    pub constant_curvature: bool,
    pub reducible: bool,
    pub ramified: Vec<RamifiedPoint>,
    pub w_closed: Option<f64>,
    pub w_numeric: Option<f64>,
    pub tolerance: f64,
    pub precision_bits: Option<usize>,
}

impl Certificate {
    /// In G(2,5) and constantly curved.
    pub fn passes(&self) -> bool {
        self.plucker_residual_max <= self.tolerance && self.constant_curvature
    }
}

/// Runs every check on a degree-6 curve. `w_closed` is carried through when
/// the caller knows the closed-form value.
pub fn certify<R: RealField>(f: &PlueckerCurve<R>, tol: f64, w_closed: Option<f64>) -> Result<Certificate> {
    let plucker_residual_max = pluecker_residual_max(f);
    let (gram, gram_defect) = gram_and_defect(f)?;
    let c = gram[0][0].re.to_f64().abs();
    let constant_curvature = if R::EXACT { gram_defect == 0.0 } else { gram_defect <= tol * c };
    let (reducible, ramified) = match ramification(f, tol) {
        Ok(r) => (r.reducible, r.divisor),
        Err(Error::Contract(_)) => (false, Vec::new()),
        Err(e) => return Err(e),
    };
    let w_numeric = if constant_curvature { Some(w_numeric(f, tol)?.value) } else { None };
    Ok(Certificate {
        plucker_residual_max,
        gram: gram.iter().map(|r| r.iter().map(|z| [z.re.to_f64(), z.im.to_f64()]).collect()).collect(),
        gram_defect,
        constant_curvature,
        reducible,
        ramified,
        w_closed,
        w_numeric,
        tolerance: tol,
        precision_bits: f.like().re.precision_bits(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Rational, Surd};

    type S = Cplx<Surd>;

    fn s(n: i64) -> S {
        Cplx::real(Surd::from_int(n))
    }

    fn sq(n: i64) -> S {
        Cplx::real(Surd::sqrt_rational(&Rational::from_integer(n.into())).unwrap())
    }

    fn mono(c: S, k: usize) -> Poly<Surd> {
        UniPoly::monomial(c, k)
    }

    fn standard_pencil() -> PencilCurve<Surd> {
        PencilCurve::new(
            vec![mono(s(1), 0), UniPoly::zero(), mono(-sq(6), 2), mono(s(-4), 3), mono(s(-3), 4)],
            vec![UniPoly::zero(), mono(s(1), 0), mono(sq(6), 1), mono(s(3), 2), mono(s(2), 3)],
        )
        .unwrap()
    }

    /// The analytic value `40 pi - (2 pi / 3) sum |w_k|^2 k! (8-k)! / 9! / c^2`.
    fn w_spectral(f: &PlueckerCurve<Surd>) -> f64 {
        let w = derivative_wedge(f);
        let c = gram_and_defect(f).unwrap().0[0][0].re.to_f64();
        let fact = |n: u32| (1..=n).map(|x| x as f64).product::<f64>();
        let mut acc = 0.0;
        for k in 0..=8usize {
            let n2: f64 = w.iter().map(|p| p.coeff(k).map_or(0.0, |c| c.to_c64().norm_sqr())).sum();
            acc += n2 * fact(k as u32) * fact(8 - k as u32) / fact(9);
        }
        40.0 * PI - 2.0 * PI / 3.0 * acc / (c * c)
    }

    #[test]
    fn standard_curve_coordinates_and_gram() {
        let f = wedge_pencil(&standard_pencil()).unwrap();
        let expect = [s(1), sq(6), s(3), s(2), sq(6), s(4), s(3), sq(6), sq(6), s(1)];
        let degs = [0, 1, 2, 3, 2, 3, 4, 4, 5, 6];
        for k in 0..10 {
            assert_eq!(f.coords()[k], mono(expect[k].clone(), degs[k]), "coordinate {k}");
        }
        assert!(pluecker_residual(&f).iter().all(|p| p.is_zero()));
        let (g, d) = gram_and_defect(&f).unwrap();
        assert_eq!(d, 0.0);
        assert_eq!(g[3][3], s(20));
        let r = ramification(&f, 1e-10).unwrap();
        assert!(r.reducible);
        let jp = jp_checks(&standard_pencil()).unwrap();
        assert!(!jp.nonsingular);
        assert!(jp.residuals.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn scaled_coordinate_defect() {
        let f = wedge_pencil(&standard_pencil()).unwrap();
        let mut c = f.coords().to_vec();
        c[9] = c[9].scale(&s(2));
        let g = PlueckerCurve::new(c).unwrap();
        assert_eq!(gram_and_defect(&g).unwrap().1, 3.0);
    }

    #[test]
    fn constant_point_residual() {
        let mut p = vec![s(0); 10];
        p[0] = s(1);
        p[7] = s(1);
        let f = PlueckerCurve::constant(&p).unwrap();
        assert_eq!(pluecker_residual(&f)[0], UniPoly::constant(s(1)));
    }

    #[test]
    fn second_fundamental_form_of_the_standard_curve() {
        let f = wedge_pencil(&standard_pencil()).unwrap();
        let z = Cplx::new(Surd::from_int(2), Surd::from_int(-1));
        assert_eq!(second_ff_norm(&f, &z, 1e-10).unwrap(), Surd::from_rational(Rational::new(20.into(), 3.into())));
        let w = w_numeric(&f, 1e-10).unwrap().value;
        assert!((w / (40.0 * PI) - 1.0).abs() < 1e-10, "{w}");
    }

    #[test]
    fn quadrature_matches_spectral_formula() {
        // the pencil (1,0,-sqrt6 z^2,-2 z^3,-3 z^4; 0,1,sqrt6 z,3 z^2,4 z^3)
        let p = PencilCurve::new(
            vec![mono(s(1), 0), UniPoly::zero(), mono(-sq(6), 2), mono(s(-2), 3), mono(s(-3), 4)],
            vec![UniPoly::zero(), mono(s(1), 0), mono(sq(6), 1), mono(s(3), 2), mono(s(4), 3)],
        )
        .unwrap();
        let f = wedge_pencil(&p).unwrap();
        assert_eq!(gram_and_defect(&f).unwrap().1, 0.0);
        let w = w_numeric(&f, 1e-10).unwrap().value;
        let expect = 184.0 * PI / 7.0;
        assert!((w / expect - 1.0).abs() < 1e-9, "{w} vs {expect}");
        assert!((w_spectral(&f) / expect - 1.0).abs() < 1e-12);
        let inv = w_numeric(&f.invert_parameter(), 1e-10).unwrap().value;
        assert!((inv / w - 1.0).abs() < 1e-9);
        let r = ramification(&f, 1e-10).unwrap();
        assert!(!r.reducible);
        assert!(r.support_is_zero_and_infinity(1e-12), "{:?}", r.divisor);
    }

    #[test]
    fn annihilators_kill_the_sextic_span() {
        let like = Surd::from_int(1);
        let e = crate::sl2rep::e_basis(&like).unwrap();
        for f in v6_annihilators(&like).unwrap() {
            for ek in &e {
                let pairing = f.p.iter().zip(ek).fold(Surd::zero(), |s, (a, b)| s + a.clone() * b.clone());
                assert!(pairing.is_zero());
            }
        }
    }

    #[test]
    fn genericity_of_the_annihilator_net() {
        let like = Surd::from_int(1);
        let [a, b, c] = v6_annihilators(&like).unwrap();
        let g = center_genericity(&a, &b, &c, 10_000).unwrap();
        assert!(g.generic);
        assert_eq!(g.method, GenericityMethod::Elimination);
    }

    #[test]
    fn degenerate_net_has_a_witness() {
        let e = |i, j| {
            let mut p = vec![Rational::from_integer(0.into()); 10];
            p[pair_index(i, j)] = Rational::from_integer(1.into());
            SkewTensor { p }
        };
        let (a, b, c) = (e(0, 1), e(0, 2), e(0, 3));
        let g = center_genericity(&a, &b, &c, 100).unwrap();
        assert!(!g.generic);
        let w = g.witness.unwrap();
        assert!(eval_all(&center_map(&a, &b, &c), &w).unwrap());
    }

    #[test]
    fn dependent_pencil_rows_are_rejected() {
        let r = vec![mono(s(1), 0), mono(s(1), 1), UniPoly::zero(), UniPoly::zero(), UniPoly::zero()];
        let p = PencilCurve::new(r.clone(), r).unwrap();
        assert!(matches!(wedge_pencil(&p), Err(Error::Degenerate(_))));
    }
}

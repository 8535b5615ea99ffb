//! The diagonal family in the parameters `(t0, t1, t6)`.
//!
//! Normalization: `a00 = 1`, `a11 = 1/sqrt t0`, `a22 = a33 = 1/sqrt t1`,
//! `a44 = sqrt(t1/t6)` and `omega_i = sqrt(t_i) e^{i theta_i}` with
//! `theta_0 = theta_6 = 0`. The derived `t2..t5`, the quantities `X, Y, Z`,
//! the hypersurface `F = 0` and the three discriminant inequalities cut out the
//! moduli set `S`.

use std::cmp::Ordering;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::roots::{isolate_roots, RootInterval};
use crate::algebra::scalar::rational_to_f64;
use crate::algebra::{BigFloat, Cplx, MultiPoly, Rational, RealField, Scalar, SqrtQ, Surd, UniPoly};
use crate::error::{arg, Error, Result};
use crate::grassmann::{certify, wedge_pencil, Certificate, PencilCurve, PlueckerCurve, Poly};
use crate::sl2rep::{binom, combine, e_basis, root};

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn qi(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub const T_VARS: [&str; 3] = ["t0", "t1", "t6"];

/// Terms `(c, [e0, e1, e6])` of the degree-9 polynomial `F(t0, t1, t6)`.
pub const F_TERMS: &[(i64, [u32; 3])] = &[
    (9, [9, 6, 3]),
    (6912, [8, 9, 2]),
    (-366, [8, 6, 3]),
    (-10260, [8, 4, 4]),
    (435888, [7, 2, 5]),
    (299592, [7, 4, 4]),
    (-397332, [7, 7, 3]),
    (2560, [7, 6, 3]),
    (-58329, [7, 9, 2]),
    (63504, [7, 12, 1]),
    (65088, [6, 0, 6]),
    (225504, [6, 2, 5]),
    (31968, [6, 5, 4]),
    (533856, [6, 4, 4]),
    (-451260, [6, 7, 3]),
    (-128, [6, 6, 3]),
    (-1296, [6, 10, 2]),
    (-44868, [6, 9, 2]),
    (16416, [6, 12, 1]),
    (78720, [5, 0, 6]),
    (-1366848, [5, 3, 5]),
    (154368, [5, 2, 5]),
    (-2480688, [5, 5, 4]),
    (203712, [5, 4, 4]),
    (2125440, [5, 8, 3]),
    (541536, [5, 7, 3]),
    (-501336, [5, 10, 2]),
    (2560, [5, 9, 2]),
    (-190512, [5, 13, 1]),
    (-58329, [5, 12, 1]),
    (63504, [5, 15, 0]),
    (22016, [4, 0, 6]),
    (15552, [4, 3, 5]),
    (99840, [4, 2, 5]),
    (145152, [4, 6, 4]),
    (-2192448, [4, 5, 4]),
    (1076544, [4, 8, 3]),
    (533856, [4, 7, 3]),
    (31104, [4, 11, 2]),
    (-451260, [4, 10, 2]),
    (-1296, [4, 13, 1]),
    (-366, [4, 12, 1]),
    (6912, [4, 15, 0]),
    (-1024, [3, 0, 6]),
    (-645120, [3, 3, 5]),
    (5774976, [3, 6, 4]),
    (154368, [3, 5, 4]),
    (-3048192, [3, 9, 3]),
    (-2480688, [3, 8, 3]),
    (2125440, [3, 11, 2]),
    (299592, [3, 10, 2]),
    (-397332, [3, 13, 1]),
    (9, [3, 15, 0]),
    (22016, [2, 3, 5]),
    (15552, [2, 6, 4]),
    (145152, [2, 9, 3]),
    (225504, [2, 8, 3]),
    (31968, [2, 11, 2]),
    (-10260, [2, 13, 1]),
    (435888, [1, 11, 2]),
    (-1366848, [1, 9, 3]),
    (78720, [1, 6, 4]),
    (65088, [0, 9, 3]),
];

/// `F(t0, t1, t6)` over the variables `t0, t1, t6`.
pub fn f_poly() -> &'static MultiPoly<Rational> {
    static F: OnceLock<MultiPoly<Rational>> = OnceLock::new();
    F.get_or_init(|| MultiPoly::from_terms(&T_VARS, F_TERMS.iter().map(|(c, e)| (qi(*c), e.to_vec()))))
}

/// Bracketed numerator of the closed form of the functional, over `t0, t1, l`
/// with `l = 1/g`.
pub fn w_bracket_poly() -> &'static MultiPoly<Rational> {
    static P: OnceLock<MultiPoly<Rational>> = OnceLock::new();
    P.get_or_init(|| {
        let v = ["t0", "t1", "l"];
        let t0 = MultiPoly::var(&v, "t0");
        let t1 = MultiPoly::var(&v, "t1");
        let l = MultiPoly::var(&v, "l");
        let c = |n: i64| MultiPoly::constant(&v, qi(n));
        let l1 = l.clone() + c(1);
        c(1664) * l.pow(4) * t1.pow(2) + c(192) * l.pow(3) * l1.clone() * t1.pow(2) * t0.clone()
            - c(144) * l.clone() * (c(87) * l.pow(2) + c(548) * l.clone() + c(87)) * t1.clone() * t0.pow(5)
            - c(48) * l.pow(2) * t1.clone() * t0.pow(4) * (c(673) * l1.clone() - c(1863) * t1.clone())
            + c(32) * l.pow(2) * t1.clone() * t0.pow(3) * (c(1701) * l1.clone() * t1.clone() - c(374) * l.clone())
            + c(144) * l.pow(2) * (c(101) * l.pow(2) + c(4) * l.clone() + c(101)) * t1.pow(2) * t0.pow(2)
            - c(9) * (c(249) * l.pow(2) + c(1396) * l.clone() + c(249)) * t0.pow(8)
            - c(36) * l.clone() * t0.pow(7) * (c(158) * l1.clone() - c(567) * t1.clone())
            - c(2673) * l1.clone() * t0.pow(9)
            - c(4) * l.clone() * t0.pow(6) * (c(574) * l.clone() + c(4671) * l1 * t1)
            + c(3564) * t0.pow(10)
    })
}

/// The `g = 1` branch polynomial of the level set, over `t0, t1`.
pub fn s1_branch_poly() -> MultiPoly<Rational> {
    let v = ["t0", "t1"];
    let t: Vec<(i64, &[u32])> = vec![
        (441, &[8, 0]),
        (-42, &[7, 0]),
        (1, &[6, 0]),
        (-72, &[5, 1]),
        (-5136, &[4, 1]),
        (-1592, &[3, 1]),
        (7056, &[2, 2]),
        (-672, &[1, 2]),
        (16, &[0, 2]),
    ];
    let a = MultiPoly::from_int_terms(&v, &t);
    let b = MultiPoly::from_int_terms(&v, &[(1, &[1, 0]), (-1, &[0, 0])]);
    let c = MultiPoly::from_int_terms(&v, &[(2, &[3, 0]), (-3, &[1, 1]), (1, &[0, 1])]);
    a * b * c
}


fn eval_f<R: RealField>(t0: &R, t1: &R, t6: &R) -> R {
    f_poly()
        .eval_generic(&[t0.clone(), t1.clone(), t6.clone()], |c, l| l.lift(c))
        .unwrap_or_else(|| t0.zero_like())
}

/// `sum |c| |t0|^a |t1|^b |t6|^e`, the scale of `F` at a point.
fn f_scale<R: RealField>(t0: &R, t1: &R, t6: &R) -> R {
    f_poly()
        .eval_generic(&[t0.abs_r(), t1.abs_r(), t6.abs_r()], |c, l| l.lift(&c.abs()))
        .unwrap_or_else(|| t0.zero_like())
}

fn need<R>(x: Option<R>, what: &str) -> Result<R> {
    x.ok_or_else(|| Error::Numeric(format!("{what} is not representable in this scalar kind")))
}

fn sqrt_of<R: RealField>(x: &R, what: &str) -> Result<R> {
    if x.signum_i() < 0 {
        return Err(Error::Numeric(format!("{what} is negative")));
    }
    need(x.sqrt(), what)
}

fn divide<R: Scalar>(a: &R, b: &R) -> Result<R> {
    a.div(b).ok_or_else(|| Error::Degenerate("division by zero".into()))
}

/// `t2, t3, t4, t5` from `(t0, t1, t6)`.
pub fn derived_t<R: RealField>(t0: &R, t1: &R, t6: &R) -> Result<[R; 4]> {
    let k = |n: i64| t0.lift_i(n);
    let t2 = divide(&(k(5) * t0.clone() * t1.clone()), &(k(3) * t0.clone() + k(2)))?;
    let t3 = divide(
        &(k(5) * t0.clone() * t1.clone() * t6.clone()),
        &(t0.clone() * t1.clone() * t1.clone() + k(4) * t6.clone()),
    )?;
    let t4 = divide(
        &(k(5) * t0.clone() * t1.clone() * t1.clone() * t6.clone()),
        &(k(3) * t1.pow(3) + k(2) * t0.clone() * t6.clone()),
    )?;
    Ok([t2, t3, t4, t6.clone()])
}

/// Everything derived from `(t0, t1, t6)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuliPoint<R> {
    /// `t0, ..., t6`.
    pub t: [R; 7],
    pub g: R,
    pub x: R,
    pub y: R,
    pub z: R,
    pub x2: R,
    pub y2: R,
    pub z2: R,
    pub xyz: R,
    pub h: R,
    /// The explicit polynomial `F` at the point.
    pub f: R,
    /// `sum |terms|` of `F`, for relative residuals.
    pub f_scale: R,
    /// Left sides of the three discriminant inequalities.
    pub slacks: [R; 3],
    pub slack_scales: [R; 3],
    pub q: R,
}

impl<R: RealField> ModuliPoint<R> {
    pub fn t0(&self) -> &R {
        &self.t[0]
    }

    pub fn params(&self) -> [R; 3] {
        [self.t[0].clone(), self.t[1].clone(), self.t[6].clone()]
    }

    /// `|F| / sum |terms|`.
    pub fn f_relative(&self) -> f64 {
        let s = self.f_scale.to_f64();
        if s == 0.0 {
            0.0
        } else {
            self.f.to_f64().abs() / s
        }
    }
}

/// Derived data of a parameter triple.
pub fn derive_data<R: RealField>(t0: &R, t1: &R, t6: &R) -> Result<ModuliPoint<R>> {
    for (n, v) in [("t0", t0), ("t1", t1), ("t6", t6)] {
        if v.signum_i() <= 0 {
            return arg(format!("{n} must be positive"));
        }
    }
    let [t2, t3, t4, t5] = derived_t(t0, t1, t6)?;
    let k = |n: i64| t0.lift_i(n);
    let n1 = k(9) * t2.clone() * t2.clone() + k(16) * t1.clone() * t3.clone() - t0.clone() * t4.clone();
    let n2 = k(4) * t2.clone() * t3.clone() + k(9) * t1.clone() * t4.clone() - t0.clone() * t5.clone();
    let n3 = k(64) * t3.clone() * t3.clone() + k(81) * t2.clone() * t4.clone() - t0.clone() * t6.clone();
    let x2 = divide(&(n1.clone() * n1.clone()), &(k(144) * t2.clone() * t2.clone() * t1.clone() * t3.clone()))?;
    let y2 = divide(&(n2.clone() * n2.clone()), &(k(36) * t1.clone() * t2.clone() * t3.clone() * t4.clone()))?;
    let z2 = divide(&(n3.clone() * n3.clone()), &(k(5184) * t2.clone() * t3.clone() * t3.clone() * t4.clone()))?;
    let xyz = divide(
        &(n1.clone() * n2.clone() * n3.clone()),
        &(k(5184) * t1.clone() * t2.clone() * t2.clone() * t3.clone() * t3.clone() * t4.clone()),
    )?;
    let x = divide(&n1, &(k(12) * t2.clone() * sqrt_of(&(t1.clone() * t3.clone()), "sqrt(t1 t3)")?))?;
    let y = divide(
        &n2,
        &(k(6)
            * sqrt_of(&(t2.clone() * t3.clone()), "sqrt(t2 t3)")?
            * sqrt_of(&(t1.clone() * t4.clone()), "sqrt(t1 t4)")?),
    )?;
    let z = divide(&n3, &(k(72) * t3.clone() * sqrt_of(&(t2.clone() * t4.clone()), "sqrt(t2 t4)")?))?;
    let h = -xyz.clone() + x2.clone() + y2.clone() + z2.clone() - k(4);
    let g = divide(&t1.pow(3), &(t0.clone() * t0.clone() * t6.clone()))?;
    let sq = |a: R, b: R, c: R| {
        let s = a.abs_r() + b.abs_r() + c.abs_r();
        s.clone() * s
    };
    let slacks = [
        n1.clone() * n1.clone() - k(576) * t1.clone() * t2.clone() * t2.clone() * t3.clone(),
        n2.clone() * n2.clone() - k(144) * t1.clone() * t2.clone() * t3.clone() * t4.clone(),
        n3.clone() * n3.clone() - k(20736) * t2.clone() * t3.clone() * t3.clone() * t4.clone(),
    ];
    let slack_scales = [
        sq(k(9) * t2.clone() * t2.clone(), k(16) * t1.clone() * t3.clone(), t0.clone() * t4.clone()),
        sq(k(4) * t2.clone() * t3.clone(), k(9) * t1.clone() * t4.clone(), t0.clone() * t5.clone()),
        sq(k(64) * t3.clone() * t3.clone(), k(81) * t2.clone() * t4.clone(), t0.clone() * t6.clone()),
    ];
    let qv = divide(
        &(-(t1.clone() * t6.clone()) + k(9) * t2.clone() * t5.clone() + k(4) * t3.clone() * t4.clone()),
        &(k(6) * sqrt_of(&(t2.clone() * t3.clone() * t4.clone() * t5.clone()), "sqrt(t2 t3 t4 t5)")?),
    )?;
    Ok(ModuliPoint {
        t: [t0.clone(), t1.clone(), t2, t3, t4, t5, t6.clone()],
        g,
        x,
        y,
        z,
        x2,
        y2,
        z2,
        xyz,
        h,
        f: eval_f(t0, t1, t6),
        f_scale: f_scale(t0, t1, t6),
        slacks,
        slack_scales,
        q: qv,
    })
}

/// Derived data of a rational triple in the exact surd field.
pub fn derive_rational(t: &[Rational; 3]) -> Result<ModuliPoint<Surd>> {
    let s = |x: &Rational| Surd::from_rational(x.clone());
    derive_data(&s(&t[0]), &s(&t[1]), &s(&t[2]))
}

/// The explicit polynomial and `168750000 H t0^6 t1^11 t6^4 / (t2 t3 t4^2)`
/// at a rational point; they must agree exactly.
pub fn f_value(t0: &Rational, t1: &Rational, t6: &Rational) -> Result<(Rational, Rational)> {
    if !(t0.is_positive() && t1.is_positive() && t6.is_positive()) {
        return arg("parameters must be positive");
    }
    let explicit = f_poly().eval(&[t0.clone(), t1.clone(), t6.clone()])?;
    let [t2, t3, t4, t5] = derived_t(t0, t1, t6)?;
    let n1 = qi(9) * &t2 * &t2 + qi(16) * t1 * &t3 - t0 * &t4;
    let n2 = qi(4) * &t2 * &t3 + qi(9) * t1 * &t4 - t0 * &t5;
    let n3 = qi(64) * &t3 * &t3 + qi(81) * &t2 * &t4 - t0 * t6;
    let x2 = &n1 * &n1 / (qi(144) * &t2 * &t2 * t1 * &t3);
    let y2 = &n2 * &n2 / (qi(36) * t1 * &t2 * &t3 * &t4);
    let z2 = &n3 * &n3 / (qi(5184) * &t2 * &t3 * &t3 * &t4);
    let xyz = &n1 * &n2 * &n3 / (qi(5184) * t1 * &t2 * &t2 * &t3 * &t3 * &t4);
    let h = -xyz + x2 + y2 + z2 - qi(4);
    let derived = qi(168750000) * h * t0.pow(6) * t1.pow(11) * t6.pow(4) / (&t2 * &t3 * &t4 * &t4);
    if explicit != derived {
        return Err(Error::Transcription(format!(
            "explicit F = {explicit} differs from the derived value {derived}"
        )));
    }
    Ok((explicit, derived))
}

const V6: [&str; 6] = ["t0", "t1", "t6", "t2", "t3", "t4"];

/// Numerators and denominators of `t2, t3, t4` over `t0, t1, t6`.
fn t_fractions() -> [(MultiPoly<Rational>, MultiPoly<Rational>); 3] {
    let v = |n| MultiPoly::<Rational>::var(&V6, n);
    let c = |n: i64| MultiPoly::constant(&V6, qi(n));
    let (t0, t1, t6) = (v("t0"), v("t1"), v("t6"));
    [
        (c(5) * t0.clone() * t1.clone(), c(3) * t0.clone() + c(2)),
        (c(5) * t0.clone() * t1.clone() * t6.clone(), t0.clone() * t1.pow(2) + c(4) * t6.clone()),
        (c(5) * t0.clone() * t1.pow(2) * t6.clone(), c(3) * t1.pow(3) + c(2) * t0 * t6),
    ]
}

/// Substitutes `t_k = n_k/D_k` (`k = 2, 3, 4`) into `p` and multiplies by
/// `D_k^{deg_k p}`; returns the polynomial and the exponents used. The `D_k`
/// are positive on the positive octant, so signs are preserved.
fn clear_t234(p: &MultiPoly<Rational>) -> (MultiPoly<Rational>, [u32; 3]) {
    let fr = t_fractions();
    let mut cur = p.clone();
    let mut degs = [0u32; 3];
    for (slot, (n, d)) in fr.iter().enumerate() {
        let i = 3 + slot;
        let parts = cur.coeffs_in(i);
        let a = parts.len() as u32 - 1;
        degs[slot] = a;
        let mut acc = MultiPoly::zero(&V6);
        for (j, c) in parts.into_iter().enumerate() {
            if !c.is_zero() {
                acc = acc + c * n.pow(j as u32) * d.pow(a - j as u32);
            }
        }
        cur = acc;
    }
    (cur, degs)
}

fn n123() -> [MultiPoly<Rational>; 3] {
    let v = |n| MultiPoly::<Rational>::var(&V6, n);
    let c = |n: i64| MultiPoly::constant(&V6, qi(n));
    let (t0, t1, t6, t2, t3, t4) = (v("t0"), v("t1"), v("t6"), v("t2"), v("t3"), v("t4"));
    [
        c(9) * t2.pow(2) + c(16) * t1.clone() * t3.clone() - t0.clone() * t4.clone(),
        c(4) * t2.clone() * t3.clone() + c(9) * t1 * t4.clone() - t0.clone() * t6.clone(),
        c(64) * t3.pow(2) + c(81) * t2 * t4 - t0 * t6,
    ]
}

/// Symbolic check that the transcribed `F` equals the expression obtained
/// from `H`, after clearing every denominator.
pub fn f_identity_check() -> Result<()> {
    let v = |n| MultiPoly::<Rational>::var(&V6, n);
    let c = |n: i64| MultiPoly::constant(&V6, qi(n));
    let (t0, t1, t6, t2, t3, t4) = (v("t0"), v("t1"), v("t6"), v("t2"), v("t3"), v("t4"));
    let [n1, n2, n3] = n123();
    // K H with K = 5184 t1 t2^2 t3^2 t4
    let kh = -(n1.clone() * n2.clone() * n3.clone())
        + c(36) * t3.clone() * t4.clone() * n1.pow(2)
        + c(144) * t2.clone() * t3.clone() * n2.pow(2)
        + t1.clone() * t2.clone() * n3.pow(2)
        - c(4 * 5184) * t1.clone() * t2.pow(2) * t3.pow(2) * t4;
    // F = 168750000 (K H) t0^6 t1^11 t6^4 / (5184 t1 t2^3 t3^3 t4^3)
    let rhs_raw = c(168750000) * kh * t0.pow(6) * t1.pow(10) * t6.pow(4);
    let (rhs, [a, b, e]) = clear_t234(&rhs_raw);
    let fr = t_fractions();
    let lhs = f_poly().with_vars(&V6)
        * c(5184)
        * fr[0].0.pow(3)
        * fr[1].0.pow(3)
        * fr[2].0.pow(3)
        * fr[0].1.pow(a)
        * fr[1].1.pow(b)
        * fr[2].1.pow(e);
    let rhs = rhs * fr[0].1.pow(3) * fr[1].1.pow(3) * fr[2].1.pow(3);
    if lhs != rhs {
        return Err(Error::Transcription("explicit F disagrees with the H-derived expression".into()));
    }
    Ok(())
}

/// Sign-equivalent polynomial forms of the three slacks over `t0, t1, t6`.
pub fn slack_polys() -> &'static [MultiPoly<Rational>; 3] {
    static S: OnceLock<[MultiPoly<Rational>; 3]> = OnceLock::new();
    S.get_or_init(|| {
        let v = |n| MultiPoly::<Rational>::var(&V6, n);
        let c = |n: i64| MultiPoly::constant(&V6, qi(n));
        let (t1, t2, t3, t4) = (v("t1"), v("t2"), v("t3"), v("t4"));
        let [n1, n2, n3] = n123();
        let raw = [
            n1.pow(2) - c(576) * t1.clone() * t2.pow(2) * t3.clone(),
            n2.pow(2) - c(144) * t1 * t2.clone() * t3.clone() * t4.clone(),
            n3.pow(2) - c(20736) * t2 * t3.pow(2) * t4,
        ];
        raw.map(|p| {
            let (cleared, _) = clear_t234(&p);
            let (_, reduced) = cleared.strip_monomial();
            MultiPoly::from_terms(&T_VARS, reduced.terms().map(|(e, c)| {
                debug_assert!(e[3..].iter().all(|&k| k == 0));
                (c.clone(), e[..3].to_vec())
            }))
        })
    })
}

/// Feasibility verdict of a point.
#[derive(Clone, Debug, PartialEq)]
pub struct Feasibility<R> {
    pub slacks: [R; 3],
    pub q: R,
    pub in_s: bool,
}

/// Exact kinds test `F = 0` and `slack <= 0` exactly; float kinds allow
/// `tol` relative to the natural scale of each expression.
pub fn feasibility<R: RealField>(mp: &ModuliPoint<R>, tol: f64) -> Feasibility<R> {
    let in_s = if R::EXACT {
        mp.f.is_zero() && mp.slacks.iter().all(|s| s.signum_i() <= 0)
    } else {
        mp.f_relative() <= tol
            && mp
                .slacks
                .iter()
                .zip(&mp.slack_scales)
                .all(|(s, sc)| s.signum_i() <= 0 || s.to_f64() <= tol * sc.to_f64())
    };
    Feasibility { slacks: mp.slacks.clone(), q: mp.q.clone(), in_s }
}

/// `g = t1^3 / (t0^2 t6)`.
pub fn g_of<R: Scalar>(t: &[R; 3]) -> Result<R> {
    divide(&t[1].pow(3), &(t[0].clone() * t[0].clone() * t[2].clone()))
}

/// The involution `(t0, t1, t6) -> (g t0, g t1, g^3 t6)`.
pub fn sigma<R: Scalar>(t: &[R; 3]) -> Result<[R; 3]> {
    let g = g_of(t)?;
    Ok([g.clone() * t[0].clone(), g.clone() * t[1].clone(), g.pow(3) * t[2].clone()])
}

/// A root `(u, v, w)` of `v = uw`, `u^2 - Xu + 1 = w^2 - Zw + 1 = 0` with
/// `v + 1/v = Y`.
#[derive(Clone, Debug, PartialEq)]
pub struct Uvw<R> {
    pub u: Cplx<R>,
    pub v: Cplx<R>,
    pub w: Cplx<R>,
}

fn unit_from_real_part<R: RealField>(half: &R, tol: f64) -> Result<Option<Cplx<R>>> {
    let s = half.one_like() - half.clone() * half.clone();
    if s.signum_i() < 0 {
        if R::EXACT || s.to_f64() < -tol {
            return Ok(None);
        }
        return Ok(Some(Cplx::real(half.clone())));
    }
    let im = need(s.sqrt(), "the imaginary part of a unit root")?;
    Ok(Some(Cplx::new(half.clone(), im)))
}

fn is_real_unit<R: RealField>(z: &Cplx<R>, tol: f64) -> bool {
    if R::EXACT {
        z.im.is_zero()
    } else {
        z.im.to_f64().abs() <= tol.sqrt()
    }
}

/// All solutions, at most two and complex conjugate to each other.
pub fn solve_uvw<R: RealField>(mp: &ModuliPoint<R>, tol: f64) -> Result<Vec<Uvw<R>>> {
    let half = mp.x.lift(&q(1, 2));
    let Some(u0) = unit_from_real_part(&(mp.x.clone() * half.clone()), tol)? else {
        return Ok(Vec::new());
    };
    let Some(w) = unit_from_real_part(&(mp.z.clone() * half.clone()), tol)? else {
        return Ok(Vec::new());
    };
    if unit_from_real_part(&(mp.y.clone() * half), tol)?.is_none() {
        return Ok(Vec::new());
    }
    let two = mp.x.lift_i(2);
    let miss = |u: &Cplx<R>| {
        let v = u.clone() * w.clone();
        (two.clone() * v.re - mp.y.clone()).abs_f64()
    };
    let u1 = u0.conj();
    let u = if miss(&u1) < miss(&u0) { u1 } else { u0 };
    let v = u.clone() * w.clone();
    let sol = Uvw { u, v, w };
    if is_real_unit(&sol.u, tol) && is_real_unit(&sol.w, tol) {
        return Ok(vec![sol]);
    }
    let conj = Uvw { u: sol.u.conj(), v: sol.v.conj(), w: sol.w.conj() };
    Ok(vec![sol, conj])
}

/// Phases `e^{i theta_k}`, `k = 0..=6`, with `theta_0 = theta_6 = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Angles<R> {
    pub phases: [Cplx<R>; 7],
    /// `theta_1, ..., theta_5` in `[0, 2 pi)`.
    pub theta: [f64; 5],
    pub residual: f64,
}

const ANGLE_TOL: f64 = 1e-10;

fn normalized_angle(z: &Cplx<f64>) -> f64 {
    let tau = 2.0 * std::f64::consts::PI;
    let mut a = z.arg();
    if a < 0.0 {
        a += tau;
    }
    if a >= tau - 1e-12 {
        a = 0.0;
    }
    a
}

/// Recovers `theta_1..theta_5` from a solution of the `(u, v, w)` system by
/// enumerating the six branch combinations and keeping the valid one with
/// the lexicographically smallest angles.
pub fn reconstruct_angles<R: RealField>(mp: &ModuliPoint<R>, s: &Uvw<R>) -> Result<Angles<R>> {
    let t = &mp.t;
    let k = |n: i64| t[0].lift_i(n);
    let rt = |a: &R, b: &R, what: &str| sqrt_of(&(a.clone() * b.clone()), what);
    let cdiv = |a: &Cplx<R>, b: &Cplx<R>| -> Result<Cplx<R>> {
        a.div(b).ok_or_else(|| Error::Inconsistent("vanishing denominator in the angle recipe".into()))
    };
    let re = |x: R| Cplx::real(x);
    let y1 = cdiv(
        &re(rt(&t[0], &t[4], "sqrt(t0 t4)")?),
        &(s.u.scale(&(k(4) * rt(&t[1], &t[3], "sqrt(t1 t3)")?)) - re(k(3) * t[2].clone())),
    )?;
    let x1 = s.u.clone() * y1.clone();
    let y2 = cdiv(
        &re(rt(&t[0], &t[5], "sqrt(t0 t5)")?),
        &(s.v.scale(&(k(3) * rt(&t[1], &t[4], "sqrt(t1 t4)")?)) - re(k(2) * rt(&t[2], &t[3], "sqrt(t2 t3)")?)),
    )?;
    let x2 = s.v.clone() * y2.clone();
    let y3 = cdiv(
        &re(rt(&t[0], &t[6], "sqrt(t0 t6)")?),
        &(s.w.scale(&(k(9) * rt(&t[2], &t[4], "sqrt(t2 t4)")?)) - re(k(8) * t[3].clone())),
    )?;
    let x3 = s.w.clone() * y3.clone();

    let e3 = need((y3.clone()).sqrt(), "a square root of y3")?;
    let e2 = need((y1.clone() * x3.clone()).cbrt(), "a cube root of y1 x3")?;
    let zeta = need(Cplx::cube_root_of_unity(&t[0]), "a cube root of unity")?;
    let one = Cplx::real(t[0].one_like());
    let mut best: Option<Angles<R>> = None;
    for s3 in [one.clone(), -one.clone()] {
        let mut rot = one.clone();
        for _ in 0..3 {
            let p3 = e3.clone() * s3.clone();
            let p2 = e2.clone() * rot.clone();
            rot = rot * zeta.clone();
            let p4 = cdiv(&x3, &p2)?;
            let p1 = cdiv(&(x1.clone() * p4.clone()), &p3)?;
            let p5 = cdiv(&(p1.clone() * p4.clone()), &x2)?;
            let checks = [
                (x1.clone(), cdiv(&(p1.clone() * p3.clone()), &p4)?),
                (y1.clone(), cdiv(&(p2.clone() * p2.clone()), &p4)?),
                (x2.clone(), cdiv(&(p1.clone() * p4.clone()), &p5)?),
                (y2.clone(), cdiv(&(p2.clone() * p3.clone()), &p5)?),
                (x3.clone(), p2.clone() * p4.clone()),
                (y3.clone(), p3.clone() * p3.clone()),
            ];
            let mut residual = checks.iter().map(|(a, b)| (a.clone() - b.clone()).abs_f64()).fold(0.0, f64::max);
            for p in [&p1, &p2, &p3, &p4, &p5] {
                residual = residual.max((p.norm_sqr_r() - p.re.one_like()).to_f64().abs());
            }
            if residual > ANGLE_TOL {
                continue;
            }
            let phases = [one.clone(), p1, p2, p3, p4, p5, one.clone()];
            let theta = [1, 2, 3, 4, 5].map(|i| normalized_angle(&phases[i].to_c64()));
            let cand = Angles { phases, theta, residual };
            let better = match &best {
                None => true,
                Some(b) => cand.theta.iter().zip(&b.theta).map(|(x, y)| x.total_cmp(y)).find(|o| *o != Ordering::Equal)
                    == Some(Ordering::Less),
            };
            if better {
                best = Some(cand);
            }
        }
    }
    best.ok_or_else(|| Error::Inconsistent("no angle branch satisfies the phase relations".into()))
}

/// Full data of one diagonal solution.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalSolution<R> {
    pub uvw: Uvw<R>,
    pub angles: Angles<R>,
    pub omega: [Cplx<R>; 7],
    /// Diagonal of `A`.
    pub a: [R; 5],
    /// True for the conjugate member of a pair.
    pub conjugate: bool,
}

/// `A (E_0, ..., E_6) diag(omega) Z_6(z)` for a diagonal `A`, written out.
pub fn diagonal_curve<R: RealField + SqrtQ>(a: &[R; 5], omega: &[Cplx<R>; 7]) -> Result<PlueckerCurve<R>> {
    let like = Cplx::real(a[0].clone());
    let w: Vec<Cplx<R>> = (0..7)
        .map(|k| Ok(omega[k].clone() * root(&like, &qi(binom(6, k) as i64))?))
        .collect::<Result<_>>()?;
    let vec = skew_weights(&w)?;
    let coords = crate::sl2rep::PAIRS
        .iter()
        .zip(vec)
        .map(|(&(i, j), p)| p.scale(&Cplx::real(a[i].clone() * a[j].clone())))
        .collect();
    PlueckerCurve::new(coords)
}

/// `sum_k E_k c_k z^k` as ten polynomials.
fn skew_weights<R: RealField + SqrtQ>(c: &[Cplx<R>]) -> Result<Vec<Poly<R>>> {
    let like = c[0].zero_like();
    let e = e_basis(&like)?;
    let mut out = vec![UniPoly::zero(); 10];
    for (k, ck) in c.iter().enumerate() {
        let mut unit = vec![like.clone(); 7];
        unit[k] = ck.clone();
        for (slot, v) in combine(&e, &unit).into_iter().enumerate() {
            if !v.is_zero() {
                out[slot] = out[slot].clone() + UniPoly::monomial(v, k);
            }
        }
    }
    Ok(out)
}

/// The standard parameterization of a diagonal curve.
pub fn diagonal_pencil<R: RealField + SqrtQ>(a: &[R; 5], omega: &[Cplx<R>; 7]) -> Result<PencilCurve<R>> {
    let like = Cplx::real(a[0].clone());
    let s6 = root(&like, &qi(6))?;
    let c = |n: i64| like.lift_i(n);
    let r = |x: &R| Cplx::real(x.clone());
    let d0 = omega[0].clone() * r(&a[0]);
    let d1 = omega[0].clone() * r(&a[1]);
    let f = |num: Cplx<R>, den: &Cplx<R>| num.div(den).ok_or_else(|| Error::Degenerate("omega_0 vanishes".into()));
    let alpha2 = -f(s6.clone() * omega[2].clone() * r(&a[2]), &d0)?;
    let beta3 = -f(c(4) * omega[3].clone() * r(&a[3]), &d0)?;
    let phi4 = -f(c(3) * omega[4].clone() * r(&a[4]), &d0)?;
    let u1 = f(s6 * omega[1].clone() * r(&a[2]), &d1)?;
    let v2 = f(c(3) * omega[2].clone() * r(&a[3]), &d1)?;
    let z3 = f(c(2) * omega[3].clone() * r(&a[4]), &d1)?;
    let m = |x: Cplx<R>, k| UniPoly::monomial(x, k);
    PencilCurve::new(
        vec![m(c(1), 0), UniPoly::zero(), m(alpha2, 2), m(beta3, 3), m(phi4, 4)],
        vec![UniPoly::zero(), m(c(1), 0), m(u1, 1), m(v2, 2), m(z3, 3)],
    )
}

/// A certified member of the diagonal family.
#[derive(Clone, Debug)]
pub struct Construction<R: RealField> {
    pub point: ModuliPoint<R>,
    pub solution: DiagonalSolution<R>,
    pub pencil: PencilCurve<R>,
    pub curve: PlueckerCurve<R>,
    pub certificate: Certificate,
    pub w_over_pi: f64,
}

/// Assembles and certifies the curve of branch `branch` over `t`.
pub fn construct_curve<R: RealField + SqrtQ>(t: &[R; 3], branch: usize, tol: f64) -> Result<Construction<R>> {
    let mp = derive_data(&t[0], &t[1], &t[2])?;
    let fe = feasibility(&mp, tol);
    if !fe.in_s {
        return Err(Error::Infeasible(format!(
            "F relative residual {:e}, slacks ({:e}, {:e}, {:e})",
            mp.f_relative(),
            fe.slacks[0].to_f64(),
            fe.slacks[1].to_f64(),
            fe.slacks[2].to_f64()
        )));
    }
    let sols = solve_uvw(&mp, tol)?;
    let Some(uvw) = sols.get(branch).cloned() else {
        return arg(format!("branch {branch} requested, {} available", sols.len()));
    };
    let angles = reconstruct_angles(&mp, &uvw)?;
    let mut omega: [Cplx<R>; 7] = std::array::from_fn(|k| angles.phases[k].clone());
    for (k, o) in omega.iter_mut().enumerate() {
        *o = o.scale(&sqrt_of(&mp.t[k], "sqrt(t_k)")?);
    }
    let one = t[0].one_like();
    let a = [
        one.clone(),
        divide(&one, &sqrt_of(&t[0], "sqrt(t0)")?)?,
        divide(&one, &sqrt_of(&t[1], "sqrt(t1)")?)?,
        divide(&one, &sqrt_of(&t[1], "sqrt(t1)")?)?,
        sqrt_of(&divide(&t[1], &t[2])?, "sqrt(t1/t6)")?,
    ];
    let curve = diagonal_curve(&a, &omega)?;
    let pencil = diagonal_pencil(&a, &omega)?;
    let w = w_closed(&t[0], &t[1], &mp.g)?.to_f64();
    let certificate = certify(&curve, tol, Some(w * std::f64::consts::PI))?;
    let exact_ok = !R::EXACT || (certificate.plucker_residual_max == 0.0 && certificate.gram_defect == 0.0);
    if !certificate.passes() || !exact_ok {
        return Err(Error::Inconsistent(format!(
            "assembled curve failed certification: residual {:e}, defect {:e}",
            certificate.plucker_residual_max, certificate.gram_defect
        )));
    }
    let from_pencil = wedge_pencil(&pencil)?;
    let scale = curve.coords()[0].coeff(0).cloned().ok_or_else(|| Error::Inconsistent("p01(0) vanishes".into()))?;
    let mismatch = from_pencil
        .coords()
        .iter()
        .zip(curve.coords())
        .map(|(p, c)| (p.scale(&scale) - c.clone()).coeffs().iter().map(|x| x.abs_f64()).fold(0.0, f64::max))
        .fold(0.0, f64::max);
    if mismatch > tol {
        return Err(Error::Inconsistent(format!("pencil and Plücker forms disagree by {mismatch:e}")));
    }
    Ok(Construction {
        point: mp,
        solution: DiagonalSolution { uvw, angles, omega, a, conjugate: branch == 1 },
        pencil,
        curve,
        certificate,
        w_over_pi: w,
    })
}

/// A construction in whichever kind could carry it.
#[derive(Clone, Debug)]
pub enum AnyConstruction {
    Exact(Box<Construction<Surd>>),
    Float(Box<Construction<BigFloat>>),
}

impl AnyConstruction {
    pub fn certificate(&self) -> &Certificate {
        match self {
            AnyConstruction::Exact(c) => &c.certificate,
            AnyConstruction::Float(c) => &c.certificate,
        }
    }

    pub fn w_over_pi(&self) -> f64 {
        match self {
            AnyConstruction::Exact(c) => c.w_over_pi,
            AnyConstruction::Float(c) => c.w_over_pi,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, AnyConstruction::Exact(_))
    }
}

/// Rational parameters: exact surd arithmetic when every root involved is
/// representable, otherwise binary floats of `prec` bits.
pub fn construct_rational(t: &[Rational; 3], branch: usize, prec: usize, tol: f64) -> Result<AnyConstruction> {
    let s = t.clone().map(Surd::from_rational);
    match construct_curve(&s, branch, tol) {
        Ok(c) => return Ok(AnyConstruction::Exact(Box::new(c))),
        Err(Error::Numeric(_)) => {}
        Err(e) => return Err(e),
    }
    let b = t.clone().map(|x| BigFloat::from_rational(&x, prec));
    construct_curve(&b, branch, tol).map(|c| AnyConstruction::Float(Box::new(c)))
}

/// Number of constantly curved curves over `t`: 0, 1 or 2.
pub fn count_solutions<R: RealField>(t: &[R; 3], tol: f64) -> Result<usize> {
    let mp = derive_data(&t[0], &t[1], &t[2])?;
    if !feasibility(&mp, tol).in_s {
        return Ok(0);
    }
    Ok(solve_uvw(&mp, tol)?.len())
}

/// Exact count on rational input; `X^2 = Y^2 = Z^2 = 4` and `XYZ = 8`
/// decide between one and two.
pub fn count_solutions_rational(t: &[Rational; 3]) -> Result<usize> {
    let mp = derive_rational(t)?;
    if !feasibility(&mp, 0.0).in_s {
        return Ok(0);
    }
    let four = Surd::from_int(4);
    let one = mp.x2 == four && mp.y2 == four && mp.z2 == four && mp.xyz == Surd::from_int(8);
    Ok(if one { 1 } else { 2 })
}

/// `(A, B, C) = (sqrt t0, sqrt(t0/t6) t1, sqrt(t1/(t0 t6)) t1)`.
pub fn tau_chart<R: RealField>(t: &[R; 3]) -> Result<[R; 3]> {
    let [t0, t1, t6] = t;
    Ok([
        sqrt_of(t0, "sqrt(t0)")?,
        sqrt_of(&divide(t0, t6)?, "sqrt(t0/t6)")? * t1.clone(),
        sqrt_of(&divide(t1, &(t0.clone() * t6.clone()))?, "sqrt(t1/(t0 t6))")? * t1.clone(),
    ])
}

/// Inverse chart: `t0 = A^2`, `t1 = A^4 C^2 / B^2`, `t6 = A^10 C^4 / B^6`.
pub fn tau_inverse<R: Scalar>(abc: &[R; 3]) -> Result<[R; 3]> {
    let sq = abc.clone().map(|x| x.clone() * x);
    tau_inverse_squared(&sq)
}

/// `(A^2, B^2, C^2)`, rational on rational input.
pub fn tau_chart_squared<R: Scalar>(t: &[R; 3]) -> Result<[R; 3]> {
    let [t0, t1, t6] = t;
    Ok([
        t0.clone(),
        divide(&(t0.clone() * t1.clone() * t1.clone()), t6)?,
        divide(&t1.pow(3), &(t0.clone() * t6.clone()))?,
    ])
}

/// The inverse chart on squared coordinates.
pub fn tau_inverse_squared<R: Scalar>(sq: &[R; 3]) -> Result<[R; 3]> {
    let [a2, b2, c2] = sq;
    Ok([a2.clone(), divide(&(a2.pow(2) * c2.clone()), b2)?, divide(&(a2.pow(5) * c2.pow(2)), &b2.pow(3))?])
}

/// The two arcs of the `g = 1` level set at `t0 = s`.
#[derive(Clone, Debug, PartialEq)]
pub struct LevelSetBranches<R> {
    pub s: R,
    pub delta: R,
    pub f1: R,
    pub f2: R,
}

/// `F1, F2 = s^3 (199 + 642 s + 9 s^2 +- 30 Delta) / (4 (21 s - 1)^2)` with
/// `Delta = (3s + 2) sqrt((4s + 1)(11 - 6s))`, for `s in [1, 11/6]`.
pub fn level_set_s1<R: RealField>(s: &R) -> Result<LevelSetBranches<R>> {
    let lo = s.one_like();
    let hi = s.lift(&q(11, 6));
    if (s.clone() - lo).signum_i() < 0 || (hi - s.clone()).signum_i() < 0 {
        return arg("the level-set arcs are parameterized by s in [1, 11/6]");
    }
    let k = |n: i64| s.lift_i(n);
    let mut disc = (k(4) * s.clone() + k(1)) * (k(11) - k(6) * s.clone());
    // rounding at s = 11/6
    if !R::EXACT && disc.signum_i() < 0 && disc.to_f64().abs() < 1e-20 {
        disc = disc.zero_like();
    }
    let delta = (k(3) * s.clone() + k(2)) * sqrt_of(&disc, "the level-set discriminant")?;
    let base = k(199) + k(642) * s.clone() + k(9) * s.clone() * s.clone();
    let den = k(4) * (k(21) * s.clone() - k(1)).pow(2);
    let c = s.pow(3);
    let f1 = divide(&(c.clone() * (base.clone() + k(30) * delta.clone())), &den)?;
    let f2 = divide(&(c * (base - k(30) * delta.clone())), &den)?;
    Ok(LevelSetBranches { s: s.clone(), delta, f1, f2 })
}

/// `|F(t0, t1, t1^3/t0^2)|` relative to its term scale.
pub fn s1_residual<R: RealField>(t0: &R, t1: &R) -> Result<f64> {
    let t6 = divide(&t1.pow(3), &(t0.clone() * t0.clone()))?;
    let f = eval_f(t0, t1, &t6);
    let s = f_scale(t0, t1, &t6);
    let s = s.to_f64();
    Ok(if s == 0.0 { 0.0 } else { f.abs_r().to_f64() / s })
}

/// The closed form of the functional divided by `pi`, at `(t0, t1)` and
/// `g = t1^3/(t0^2 t6)`.
pub fn w_closed<R: RealField>(t0: &R, t1: &R, g: &R) -> Result<R> {
    let l = divide(&g.one_like(), g)?;
    let k = |n: i64| t0.lift_i(n);
    let p = w_bracket_poly()
        .eval_generic(&[t0.clone(), t1.clone(), l.clone()], |c, x| x.lift(c))
        .unwrap_or_else(|| k(0));
    let den = k(105)
        * (k(3) * t0.clone() + k(2)).pow(2)
        * (k(2) * l.clone() + k(3) * t0.clone()).pow(2)
        * (k(4) * l * t1.clone() + t0.pow(3)).pow(2);
    Ok(k(2) * (k(20) + divide(&(k(16) * p), &den)?))
}

/// The five quadrics on `omega` whose vanishing puts `sum E_k omega_k
/// sqrt(C(6,k)) z^k` into G(2,5).
pub fn perturbed_residual<T: Scalar>(w: &[T; 7]) -> [T; 5] {
    let k = |n: i64| w[0].lift_i(n);
    let m = |i: usize, j: usize| w[i].clone() * w[j].clone();
    [
        m(0, 4) - k(4) * m(1, 3) + k(3) * m(2, 2),
        m(0, 5) - k(3) * m(1, 4) + k(2) * m(2, 3),
        m(0, 6) - k(9) * m(2, 4) + k(8) * m(3, 3),
        m(2, 6) - k(4) * m(3, 5) + k(3) * m(4, 4),
        m(1, 6) - k(3) * m(2, 5) + k(2) * m(3, 4),
    ]
}

fn check_perturbed<R: RealField>(w: &[Cplx<R>; 7], tol: f64) -> Result<()> {
    let scale = w.iter().map(|x| x.abs_f64()).fold(0.0, f64::max).powi(2);
    let worst = perturbed_residual(w).iter().map(|r| r.abs_f64()).fold(0.0, f64::max);
    let ok = if R::EXACT { worst == 0.0 } else { worst <= tol * scale };
    if !ok {
        return arg(format!("coordinates violate the Plücker constraints (residual {worst:e})"));
    }
    Ok(())
}

/// The pencil `(1, 0, -sqrt6 z^2, (-3+e) z^3, -3 z^4; 0, 1, sqrt6 z, 3 z^2,
/// (3+e) z^3)` with `e = e^{i theta}`, and its moduli point
/// `t0 = 1, t1 = (5 - 3 cos theta)/(20 + 12 cos theta), g = 1`.
#[derive(Clone, Debug)]
pub struct Family33<R: RealField> {
    pub pencil: PencilCurve<R>,
    pub curve: PlueckerCurve<R>,
    pub t: [R; 3],
}

pub fn family33<R: RealField + SqrtQ>(e: &Cplx<R>, tol: f64) -> Result<Family33<R>> {
    let n = e.norm_sqr_r() - e.re.one_like();
    if (R::EXACT && !n.is_zero()) || n.to_f64().abs() > tol {
        return arg("family parameter must have unit modulus");
    }
    let like = Cplx::real(e.re.zero_like());
    let c = |k: i64| like.lift_i(k);
    let s6 = root(&like, &qi(6))?;
    let m = |x: Cplx<R>, k| UniPoly::monomial(x, k);
    let pencil = PencilCurve::new(
        vec![m(c(1), 0), UniPoly::zero(), m(-s6.clone(), 2), m(c(-3) + e.clone(), 3), m(c(-3), 4)],
        vec![UniPoly::zero(), m(c(1), 0), m(s6, 1), m(c(3), 2), m(c(3) + e.clone(), 3)],
    )?;
    let curve = wedge_pencil(&pencil)?;
    let k = |n: i64| e.re.lift_i(n);
    let t1 = divide(&(k(5) - k(3) * e.re.clone()), &(k(20) + k(12) * e.re.clone()))?;
    let t6 = t1.pow(3);
    Ok(Family33 { pencil, curve, t: [k(1), t1, t6] })
}

/// `family33` at a real angle, for float kinds.
pub fn family33_theta<R: RealField + SqrtQ>(theta: &R, tol: f64) -> Result<Family33<R>> {
    let e = need(Cplx::expi(theta), "e^{i theta}")?;
    family33(&e, tol)
}

/// Transversal case: `A (E_0..E_6) diag(omega) Z_6(z)` with `X_k = sqrt(C(6,k))
/// omega_k` on an orbit; `a` is the diagonal of `A`.
pub fn transversal<R: RealField + SqrtQ>(a: &[Cplx<R>; 5], x: &[Cplx<R>; 7], tol: f64) -> Result<PlueckerCurve<R>> {
    let like = x[0].zero_like();
    let omega: [Cplx<R>; 7] = std::array::from_fn(|k| x[k].clone());
    let mut w = omega.clone();
    for (k, o) in w.iter_mut().enumerate() {
        *o = o.div(&root(&like, &qi(binom(6, k) as i64))?).expect("nonzero binomial");
    }
    check_perturbed(&w, tol)?;
    let coords = skew_weights(&omega)?;
    scale_by_diagonal(coords, a)
}

fn scale_by_diagonal<R: RealField>(coords: Vec<Poly<R>>, a: &[Cplx<R>; 5]) -> Result<PlueckerCurve<R>> {
    let coords = crate::sl2rep::PAIRS
        .iter()
        .zip(coords)
        .map(|(&(i, j), p)| p.scale(&(a[i].clone() * a[j].clone())))
        .collect();
    PlueckerCurve::new(coords)
}

/// Tangential case: `A (E_0..E_6) L Z_6(z)` where `L Z_6(z) =
/// rho^6((1, mu z; 0, 1)) x` and `x` are normalized orbit coordinates.
pub fn tangential<R: RealField + SqrtQ>(
    a: &[Cplx<R>; 5],
    x: &[Cplx<R>; 7],
    mu: &Cplx<R>,
    tol: f64,
) -> Result<PlueckerCurve<R>> {
    if mu.is_zero() {
        return arg("mu must be nonzero");
    }
    let like = x[0].zero_like();
    let mut w = x.clone();
    for (k, o) in w.iter_mut().enumerate() {
        *o = o.div(&root(&like, &qi(binom(6, k) as i64))?).expect("nonzero binomial");
    }
    check_perturbed(&w, tol)?;
    // (g.f)(u, v) = f(u - mu z v, v) on plain coefficients
    let plain: Vec<Cplx<R>> = (0..7)
        .map(|k| Ok(x[k].clone() * root(&like, &qi(binom(6, k) as i64))?))
        .collect::<Result<_>>()?;
    let neg_mu = -mu.clone();
    let mut coeffs: Vec<Poly<R>> = Vec::with_capacity(7);
    for m in 0..7usize {
        let mut p = UniPoly::zero();
        for (k, ck) in plain.iter().enumerate().take(m + 1) {
            let c = ck.clone() * like.lift_i(binom(6 - k, m - k) as i64) * neg_mu.pow((m - k) as u32);
            p = p + UniPoly::monomial(c, m - k);
        }
        let norm = root(&like, &qi(binom(6, m) as i64))?;
        coeffs.push(p.scale(&norm.inv().expect("nonzero binomial")));
    }
    let e = e_basis(&like)?;
    let mut out = vec![UniPoly::zero(); 10];
    for (m, pm) in coeffs.iter().enumerate() {
        for slot in 0..10 {
            if !e[m][slot].is_zero() {
                out[slot] = out[slot].clone() + pm.scale(&e[m][slot]);
            }
        }
    }
    scale_by_diagonal(out, a)
}

/// One accepted or rejected root of a scan row.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanSample {
    pub t0: f64,
    pub t1: f64,
    pub g: f64,
    /// `|F|` relative to the term scale.
    pub f: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub in_s: bool,
    pub count: usize,
    pub w_over_pi: f64,
}

/// `F(t0, t1, t1^3/(t0^2 g)) (t0^2 g)^6` as a polynomial in `t1`.
pub fn scan_row_poly(t0: &Rational, g: &Rational) -> UniPoly<Rational> {
    let m = t0 * t0 * g;
    let mut c = vec![Rational::zero(); 34];
    for (coef, [a, b, e]) in F_TERMS {
        let v = qi(*coef) * t0.pow(*a as i32) * m.pow(6 - *e as i32);
        c[(*b + 3 * *e) as usize] += v;
    }
    UniPoly::new(c)
}

fn slack_row_polys(t0: &Rational, g: &Rational) -> Vec<UniPoly<Rational>> {
    let m = t0 * t0 * g;
    slack_polys()
        .iter()
        .map(|p| {
            let d6 = p.degree_in(2).unwrap_or(0) as i32;
            let mut c: Vec<Rational> = Vec::new();
            for (e, coef) in p.terms() {
                let k = (e[1] + 3 * e[2]) as usize;
                if c.len() <= k {
                    c.resize(k + 1, Rational::zero());
                }
                c[k] += coef * t0.pow(e[0] as i32) * m.pow(d6 - e[2] as i32);
            }
            UniPoly::new(c)
        })
        .collect()
}

fn positive_roots(p: &UniPoly<Rational>, width: &Rational) -> Result<Vec<RootInterval>> {
    let v = p.valuation().unwrap_or(0);
    let p = p.shift_down(v);
    if p.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let b = crate::algebra::roots::cauchy_bound(&p);
    let tiny = Rational::new(One::one(), num_bigint::BigInt::from(1u64) << 200u32);
    Ok(isolate_roots(&p, &tiny, &b, width)?.into_iter().filter(|r| r.hi.is_positive()).collect())
}

fn sample_at(t0: &Rational, t1: &Rational, g: &Rational, prec: usize, tol: f64) -> Result<ScanSample> {
    let b = |x: &Rational| BigFloat::from_rational(x, prec);
    let t6 = t1.pow(3) / (t0 * t0 * g);
    let mp = derive_data(&b(t0), &b(t1), &b(&t6))?;
    let fe = feasibility(&mp, tol);
    let count = if fe.in_s { solve_uvw(&mp, tol)?.len() } else { 0 };
    let w = w_closed(&mp.t[0], &mp.t[1], &mp.g)?.to_f64();
    Ok(ScanSample {
        t0: rational_to_f64(t0),
        t1: rational_to_f64(t1),
        g: rational_to_f64(g),
        f: mp.f_relative(),
        x: mp.x.to_f64(),
        y: mp.y.to_f64(),
        z: mp.z.to_f64(),
        in_s: fe.in_s,
        count,
        w_over_pi: w,
    })
}

/// Samples along a row where `F` vanishes identically: the boundary points
/// of the feasible `t1` intervals and `resolution` points inside each.
fn degenerate_row(t0: &Rational, g: &Rational, resolution: usize, prec: usize, tol: f64) -> Result<Vec<ScanSample>> {
    let width = Rational::new(One::one(), num_bigint::BigInt::from(1u64) << 80u32);
    let mut cuts: Vec<Rational> = Vec::new();
    for p in slack_row_polys(t0, g) {
        if !p.is_zero() {
            cuts.extend(positive_roots(&p, &width)?.into_iter().map(|r| r.mid()));
        }
    }
    cuts.sort();
    // shared roots of different slacks come back as nearby midpoints
    let merge = Rational::new(One::one(), num_bigint::BigInt::from(1u64) << 64u32);
    cuts.dedup_by(|b, a| &*b - &*a < merge);
    let top = cuts.last().cloned().unwrap_or_else(Rational::one) * qi(2);
    let mut edges = vec![Rational::zero()];
    edges.extend(cuts.iter().cloned());
    edges.push(top);
    let mut t1s = Vec::new();
    for w in edges.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        let mid = (lo + hi) / qi(2);
        if !sample_at(t0, &mid, g, prec, tol)?.in_s {
            continue;
        }
        let n = resolution.max(2);
        t1s.extend((0..n).map(|i| lo + (hi - lo) * q(i as i64, (n - 1) as i64)).filter(|t| t.is_positive()));
    }
    t1s.dedup();
    t1s.iter().map(|t1| sample_at(t0, t1, g, prec, tol)).collect()
}

/// One grid row: the feasible positive roots `t1` of `F(t0, t1, t1^3/(t0^2 g))`.
pub fn scan_row(t0: &Rational, g: &Rational, resolution: usize, prec: usize, tol: f64) -> Result<Vec<ScanSample>> {
    let p = scan_row_poly(t0, g);
    if p.is_zero() {
        return degenerate_row(t0, g, resolution, prec, tol);
    }
    let width = Rational::new(One::one(), num_bigint::BigInt::from(1u64) << 96u32);
    let mut out = Vec::new();
    for r in positive_roots(&p, &width)? {
        let s = sample_at(t0, &r.mid(), g, prec, tol)?;
        if s.in_s {
            out.push(s);
        }
    }
    Ok(out)
}

/// The grid `lo + k (hi - lo)/(n - 1)`.
pub fn grid(lo: &Rational, hi: &Rational, n: usize) -> Result<Vec<Rational>> {
    if n < 2 {
        return arg("resolution must be at least 2");
    }
    if lo > hi || !lo.is_positive() {
        return arg("expected 0 < lo <= hi");
    }
    Ok((0..n).map(|k| lo + (hi - lo) * q(k as i64, (n - 1) as i64)).collect())
}

/// Level set of `g` over a grid of `t0`, rows computed in parallel and
/// returned in grid order.
pub fn scan(g: &Rational, lo: &Rational, hi: &Rational, resolution: usize, prec: usize, tol: f64) -> Result<Vec<ScanSample>> {
    if !g.is_positive() {
        return arg("g must be positive");
    }
    let rows: Vec<Result<Vec<ScanSample>>> =
        grid(lo, hi, resolution)?.par_iter().map(|t0| scan_row(t0, g, resolution, prec, tol)).collect();
    let mut out = Vec::new();
    for r in rows {
        out.extend(r?);
    }
    Ok(out)
}

/// `x` with `digits` significant digits, in plain or exponent form.
pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { format!("{x}") };
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..=15).contains(&exp) {
        return format!("{:.*e}", digits - 1, x);
    }
    let dec = (digits as i32 - 1 - exp).max(0) as usize;
    let s = format!("{:.*}", dec, x);
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub const SCAN_HEADER: &str = "t0,t1,g,F,X,Y,Z,in_S,count,W_over_pi";

pub fn scan_csv(samples: &[ScanSample]) -> String {
    let mut s = String::from(SCAN_HEADER);
    s.push('\n');
    for r in samples {
        let f = |x: f64| fmt_sig(x, 12);
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            f(r.t0),
            f(r.t1),
            f(r.g),
            f(r.f),
            f(r.x),
            f(r.y),
            f(r.z),
            r.in_s,
            r.count,
            f(r.w_over_pi)
        ));
    }
    s
}

/// Whitespace-separated columns for gnuplot, one block per `t0`, feasible
/// samples only.
pub fn scan_dat(samples: &[ScanSample]) -> String {
    let mut s = String::from("# t0 t1 g W_over_pi count\n");
    let mut last: Option<f64> = None;
    for r in samples.iter().filter(|r| r.in_s) {
        if last.is_some_and(|l| l != r.t0) {
            s.push('\n');
        }
        last = Some(r.t0);
        s.push_str(&format!(
            "{} {} {} {} {}\n",
            fmt_sig(r.t0, 12),
            fmt_sig(r.t1, 12),
            fmt_sig(r.g, 12),
            fmt_sig(r.w_over_pi, 12),
            r.count
        ));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64, d: i64) -> Surd {
        Surd::from_rational(q(n, d))
    }

    fn eg_exact() -> [Rational; 3] {
        [q(11, 6), q(1331, 864), q(19487171, 17915904)]
    }

    #[test]
    fn derived_data_at_the_special_points() {
        let one = derive_rational(&[qi(1), qi(1), qi(1)]).unwrap();
        assert!(one.t.iter().all(|x| *x == Surd::from_int(1)));
        assert_eq!([one.x.clone(), one.y.clone(), one.z.clone()], [Surd::from_int(2), Surd::from_int(2), Surd::from_int(2)]);
        assert!(one.h.is_zero());
        let rmk = derive_rational(&[qi(1), q(1, 16), q(1, 4096)]).unwrap();
        assert_eq!(rmk.x, Surd::from_int(2));
        assert_eq!(rmk.y, Surd::from_int(2));
        assert_eq!(rmk.z, Surd::from_int(2));
        assert_eq!(rmk.g, Surd::from_int(1));
        let ex = derive_rational(&eg_exact()).unwrap();
        assert_eq!(ex.t[2], s(14641, 7776));
        assert_eq!(ex.x2, s(125, 33));
        assert_eq!(ex.y2, s(125, 33));
        assert_eq!(ex.z, Surd::from_int(2));
        assert!(ex.f.is_zero());
    }

    #[test]
    fn explicit_and_derived_f_agree() {
        for t in [[qi(1), q(1, 2), q(1, 8)], [qi(1), qi(1), qi(1)], [q(3, 7), q(5, 2), q(11, 13)]] {
            let (a, b) = f_value(&t[0], &t[1], &t[2]).unwrap();
            assert_eq!(a, b);
        }
        assert_eq!(f_value(&qi(1), &q(1, 2), &q(1, 8)).unwrap().0, qi(0));
    }

    #[test]
    fn gradient_at_the_generic_point() {
        let (v, g) = f_poly().eval_and_gradient(&[qi(1), q(1, 2), q(1, 8)]).unwrap();
        assert_eq!(v, qi(0));
        assert_eq!(g, vec![qi(0), q(-13125, 256), q(4375, 64)]);
    }

    #[test]
    fn level_set_factorization() {
        // F(t0, t1, t1^3/t0^2) t0^12 = 16 t0^3 t1^15 (3 t0 + 2)^2 * branches
        let v = ["t0", "t1"];
        let t0 = MultiPoly::<Rational>::var(&v, "t0");
        let t1 = MultiPoly::<Rational>::var(&v, "t1");
        let mut acc = MultiPoly::zero(&v);
        for (c, [a, b, e]) in F_TERMS {
            // t0^a t1^b (t1^3/t0^2)^e t0^12
            acc = acc + MultiPoly::constant(&v, qi(*c)) * t0.pow(a + 12 - 2 * e) * t1.pow(b + 3 * e);
        }
        let rhs = MultiPoly::constant(&v, qi(16))
            * t0.pow(3)
            * t1.pow(15)
            * (MultiPoly::constant(&v, qi(3)) * t0.clone() + MultiPoly::constant(&v, qi(2))).pow(2)
            * s1_branch_poly();
        assert_eq!(acc, rhs);
    }

    #[test]
    fn feasibility_examples() {
        let one = derive_rational(&[qi(1), qi(1), qi(1)]).unwrap();
        let f = feasibility(&one, 0.0);
        assert!(f.in_s);
        assert!(f.slacks.iter().all(|x| x.is_zero()));
        assert_eq!(f.q, Surd::from_int(2));
        let ex = derive_rational(&eg_exact()).unwrap();
        let f = feasibility(&ex, 0.0);
        assert!(f.in_s);
        assert!(f.slacks[2].is_zero());
        let off = derive_rational(&[qi(1), qi(1), qi(100)]).unwrap();
        assert!(!feasibility(&off, 0.0).in_s);
    }

    #[test]
    fn sigma_is_an_involution() {
        let t = [q(3, 5), q(7, 4), q(2, 9)];
        assert_eq!(sigma(&sigma(&t).unwrap()).unwrap(), t);
        assert_eq!(sigma(&[qi(1), qi(1), qi(1)]).unwrap(), [qi(1), qi(1), qi(1)]);
        let g = g_of(&t).unwrap();
        assert_eq!(g_of(&sigma(&t).unwrap()).unwrap(), g.recip());
    }

    #[test]
    fn uvw_counts() {
        let one = derive_rational(&[qi(1), qi(1), qi(1)]).unwrap();
        let sols = solve_uvw(&one, 0.0).unwrap();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].u, Cplx::real(Surd::from_int(1)));
        let ex = derive_rational(&eg_exact()).unwrap();
        let sols = solve_uvw(&ex, 0.0).unwrap();
        assert_eq!(sols.len(), 2);
        assert_eq!(sols[0].w, Cplx::real(Surd::from_int(1)));
        assert_eq!(sols[0].u, sols[0].v);
        assert_eq!(sols[1].u, sols[0].u.conj());
        let mut bad = one.clone();
        bad.x = Surd::from_int(3);
        assert!(solve_uvw(&bad, 0.0).unwrap().is_empty());
        assert_eq!(count_solutions_rational(&eg_exact()).unwrap(), 2);
        assert_eq!(count_solutions_rational(&[qi(1), q(1, 16), q(1, 4096)]).unwrap(), 1);
    }

    #[test]
    fn standard_point_constructs_the_standard_pencil() {
        let c = construct_curve(&[qi(1), qi(1), qi(1)].map(Surd::from_rational), 0, 1e-10).unwrap();
        assert_eq!(c.solution.angles.theta, [0.0; 5]);
        let f = family33(&Cplx::real(Surd::from_int(-1)), 0.0).unwrap();
        assert_eq!(c.pencil, f.pencil);
        assert!(c.certificate.reducible);
    }

    #[test]
    fn rmk_point_constructs_its_pencil() {
        let c = construct_curve(&[qi(1), q(1, 16), q(1, 4096)].map(Surd::from_rational), 0, 1e-10).unwrap();
        // the reference pencil is this one after z -> -z and diag(1, 1, -1, -1, -1)
        let f = family33(&Cplx::real(Surd::from_int(1)), 0.0).unwrap();
        let sign = [1i64, 1, -1, -1, -1];
        for r in 0..2 {
            for col in 0..5 {
                let mut p = f.pencil.entry(r, col).clone();
                let cs: Vec<_> = p.coeffs().iter().enumerate()
                    .map(|(k, x)| x.clone() * x.lift_i(sign[col] * if k % 2 == 0 { 1 } else { -1 }))
                    .collect();
                p = UniPoly::new(cs);
                assert_eq!(c.pencil.entry(r, col), &p, "entry ({r}, {col})");
            }
        }
        assert!((c.w_over_pi - 184.0 / 7.0).abs() < 1e-12);
    }

    #[test]
    fn eg_exact_branches_are_conjugate() {
        let a = construct_rational(&eg_exact(), 0, 200, 1e-10).unwrap();
        let b = construct_rational(&eg_exact(), 1, 200, 1e-10).unwrap();
        let (AnyConstruction::Float(a), AnyConstruction::Float(b)) = (a, b) else {
            panic!("expected the float path");
        };
        assert!(a.certificate.gram_defect <= 1e-10);
        // conjugate phases up to a shift theta_k -> theta_k + 2 pi m k / 6
        let pa = a.solution.angles.phases.clone().map(|p| p.to_c64().conj());
        let pb = b.solution.angles.phases.clone().map(|p| p.to_c64());
        let shifted = (0..6).any(|m| {
            (0..7).all(|k| {
                let z = Cplx::<f64>::from_polar(1.0, std::f64::consts::PI * (m * k) as f64 / 3.0);
                (pa[k].clone() * z - pb[k].clone()).norm() < 1e-12
            })
        });
        assert!(shifted, "{pa:?} {pb:?}");
        assert!(a.solution.angles.theta != b.solution.angles.theta);
    }

    #[test]
    fn blue_segment_angles() {
        // t0 = 1, t1 = (5 - 3c)/(20 + 12c) with c = 1/2
        let t1 = q(7, 52);
        let t = [qi(1), t1.clone(), t1.pow(3)];
        let c = construct_rational(&t, 0, 200, 1e-10).unwrap();
        let AnyConstruction::Float(c) = c else { panic!("expected the float path") };
        let th = c.solution.angles.theta;
        let tau = 2.0 * std::f64::consts::PI;
        let same = |a: f64, b: f64| {
            let d = (a - b).rem_euclid(tau / 6.0);
            d < 1e-9 || tau / 6.0 - d < 1e-9
        };
        assert!(same(th[0], th[4]) && same(th[1], th[3]), "{th:?}");
    }

    #[test]
    fn tau_chart_round_trip() {
        let t = [q(3, 5), q(7, 4), q(2, 9)];
        let sq = tau_chart_squared(&t).unwrap();
        assert_eq!(tau_inverse_squared(&sq).unwrap(), t);
        let st = tau_chart_squared(&sigma(&t).unwrap()).unwrap();
        assert_eq!(st, [sq[2].clone(), sq[1].clone(), sq[0].clone()]);
    }

    #[test]
    fn level_set_endpoints() {
        let r = |x: Rational| Surd::from_rational(x);
        let e = level_set_s1(&r(q(11, 6))).unwrap();
        assert_eq!(e.f1, r(q(1331, 864)));
        assert_eq!(e.f2, r(q(1331, 864)));
        let b = level_set_s1(&r(qi(1))).unwrap();
        assert_eq!(b.f1, r(qi(1)));
        assert_eq!(b.f2, r(q(1, 16)));
        assert!(level_set_s1(&r(qi(2))).is_err());
    }

    #[test]
    fn closed_form_functional() {
        let r = |x: Rational| Surd::from_rational(x);
        assert_eq!(w_closed(&r(qi(1)), &r(qi(1)), &r(qi(1))).unwrap(), r(qi(40)));
        assert_eq!(w_closed(&r(qi(1)), &r(q(1, 16)), &r(qi(1))).unwrap(), r(q(184, 7)));
    }

    #[test]
    fn perturbed_residual_examples() {
        let mut w = [qi(0), qi(0), qi(0), qi(0), qi(0), qi(0), qi(0)];
        w[1] = qi(1);
        assert!(perturbed_residual(&w).iter().all(|x| *x == qi(0)));
        let mut w = [qi(0), qi(0), qi(0), qi(0), qi(0), qi(0), qi(0)];
        w[0] = qi(1);
        w[6] = qi(1);
        assert_eq!(perturbed_residual(&w)[2], qi(1));
    }

    #[test]
    fn scan_row_special_cases() {
        let r = scan_row(&q(11, 6), &qi(1), 8, 200, 1e-10).unwrap();
        let inside: Vec<_> = r.iter().filter(|x| x.in_s).collect();
        assert_eq!(inside.len(), 1);
        assert!((inside[0].t1 - 1331.0 / 864.0).abs() < 1e-12);
        assert!(scan_row(&q(8, 15), &q(1475, 10000), 8, 200, 1e-10).unwrap().is_empty());
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(fmt_sig(1.0, 12), "1");
        assert_eq!(fmt_sig(0.318494493300001, 12), "0.3184944933");
        assert_eq!(fmt_sig(-2.5e-20, 3), "-2.50e-20");
    }
    #[test]
    fn transcribed_f_matches_the_defining_expression() {
        f_identity_check().unwrap();
    }

    #[test]
    fn f_is_homogeneous_under_sigma() {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(7);
        for _ in 0..100 {
            let mut r = || q(rand::Rng::random_range(&mut rng, 1..60), rand::Rng::random_range(&mut rng, 1..60));
            let t = [r(), r(), r()];
            let g = g_of(&t).unwrap();
            let st = sigma(&t).unwrap();
            let a = f_poly().eval(&st).unwrap();
            let b = f_poly().eval(&t).unwrap() * g.pow(21);
            assert_eq!(a, b);
        }
    }

    #[test]
    fn family33_ends() {
        let std = family33(&Cplx::real(Surd::from_int(-1)), 0.0).unwrap();
        assert_eq!(std.t, std::array::from_fn::<_, 3, _>(|_| Surd::from_int(1)));
        let rmk = family33(&Cplx::real(Surd::from_int(1)), 0.0).unwrap();
        assert_eq!(rmk.t, [Surd::from_int(1), s(1, 16), s(1, 4096)]);
        let (_, defect) = crate::grassmann::gram_and_defect(&rmk.curve).unwrap();
        assert_eq!(defect, 0.0);
        assert!(family33(&Cplx::real(Surd::from_int(2)), 0.0).is_err());
    }

    fn cs(n: i64) -> Cplx<Surd> {
        Cplx::real(Surd::from_int(n))
    }

    #[test]
    fn transversal_and_tangential_ramification() {
        use crate::sl2rep::{orbit_point, GroupElement, Orbit};
        let g = GroupElement::new(cs(1), cs(2), cs(3), cs(7)).unwrap();
        let x: [Cplx<Surd>; 7] = orbit_point(&g, Orbit::Open).unwrap().try_into().unwrap();
        let a = [cs(1), cs(2), cs(1), cs(1), cs(3)];
        let f = transversal(&a, &x, 0.0).unwrap();
        assert_eq!(f.degree(), 6);
        assert_eq!(crate::grassmann::pluecker_residual_max(&f), 0.0);
        assert!(crate::grassmann::ramification(&f, 1e-10).unwrap().support_is_zero_and_infinity(1e-9));
        let x: [Cplx<Surd>; 7] = orbit_point(&g, Orbit::U5V).unwrap().try_into().unwrap();
        let f = tangential(&a, &x, &cs(2), 0.0).unwrap();
        assert_eq!(f.degree(), 6);
        assert_eq!(crate::grassmann::pluecker_residual_max(&f), 0.0);
        assert!(crate::grassmann::ramification(&f, 1e-10).unwrap().support_is_infinity());
        assert!(crate::grassmann::gram_and_defect(&f).unwrap().1 > 1e-3);
        let mut bad = x.clone();
        bad[3] = bad[3].clone() + cs(1);
        assert!(transversal(&a, &bad, 0.0).is_err());
    }
}

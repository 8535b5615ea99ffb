//! All complex roots of a univariate polynomial.

use super::complex::{Cplx, C64};
use super::scalar::{RealField, Scalar};
use super::unipoly::UniPoly;

fn c64_eval_with_derivative(p: &[C64], z: C64) -> (C64, C64) {
    let mut v = Cplx::new(0.0, 0.0);
    let mut d = Cplx::new(0.0, 0.0);
    for c in p.iter().rev() {
        d = d * z.clone() + v.clone();
        v = v * z.clone() + c.clone();
    }
    (v, d)
}

/// Aberth-Ehrlich iteration in double precision.
///
/// Returns `deg p` approximations; the zero polynomial and constants give none.
pub fn aberth_c64(p: &[C64]) -> Vec<C64> {
    let mut coeffs = p.to_vec();
    while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
        coeffs.pop();
    }
    if coeffs.len() < 2 {
        return Vec::new();
    }
    let n = coeffs.len() - 1;
    let lc = coeffs[n].clone();
    let radius = 1.0 + coeffs[..n].iter().map(|c| c.norm() / lc.norm()).fold(0.0, f64::max);
    let r0 = radius.min(
        // geometric mean of root moduli as a better start scale
        (coeffs[0].norm() / lc.norm()).powf(1.0 / n as f64).max(1e-3),
    );
    let mut z: Vec<C64> = (0..n)
        .map(|k| C64::from_polar(r0, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, d) = c64_eval_with_derivative(&coeffs, z[i].clone());
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v * d.inv().unwrap_or(Cplx::new(1e-300, 0.0));
            let ratio = if ratio.re.is_finite() { ratio } else { Cplx::new(1e-3, 0.0) };
            let mut s = Cplx::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let diff = z[i].clone() - z[j].clone();
                    if let Some(inv) = diff.inv() {
                        s = s + inv;
                    }
                }
            }
            let denom = Cplx::new(1.0, 0.0) - ratio.clone() * s;
            let step = match denom.inv() {
                Some(di) => ratio * di,
                None => ratio,
            };
            if step.re.is_finite() && step.im.is_finite() {
                moved = moved.max(step.norm() / (1.0 + z[i].norm()));
                z[i] = z[i].clone() - step;
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    z
}

/// Complex roots in the precision of the coefficients: Aberth in double
/// precision followed by Newton polishing in the working kind.
pub fn complex_roots<R: RealField>(p: &UniPoly<Cplx<R>>) -> Vec<Cplx<R>> {
    let c64: Vec<C64> = p.coeffs().iter().map(|c| c.to_c64()).collect();
    let seeds = aberth_c64(&c64);
    let Some(like) = p.coeffs().first().map(|c| c.re.clone()) else {
        return Vec::new();
    };
    let dp = p.derivative();
    seeds
        .into_iter()
        .map(|s| {
            let (Some(re), Some(im)) = (like.approx_like(s.re), like.approx_like(s.im)) else {
                return Cplx::new(like.zero_like(), like.zero_like());
            };
            let mut z = Cplx::new(re, im);
            for _ in 0..12 {
                let v = p.eval(&z);
                let d = dp.eval(&z);
                let Some(di) = d.inv() else { break };
                let step = v * di;
                if step.is_zero() {
                    break;
                }
                z = z - step;
            }
            z
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_roots() {
        // (z-1)(z+2)(z-i)
        let p = UniPoly::new(vec![
            Cplx::new(0.0, 2.0),
            Cplx::new(-2.0, -1.0),
            Cplx::new(1.0, -1.0),
            Cplx::new(1.0, 0.0),
        ]);
        let r = complex_roots(&p);
        assert_eq!(r.len(), 3);
        for z in [Cplx::new(1.0, 0.0), Cplx::new(-2.0, 0.0), Cplx::new(0.0, 1.0)] {
            assert!(r.iter().any(|w| (w.clone() - z.clone()).norm() < 1e-12), "{z:?} missing from {r:?}");
        }
    }
}

use std::ops::{Add, Mul, Neg, Sub};

use super::scalar::{RealField, Scalar};
use super::Rational;

/// Complex number over a real scalar kind.
#[derive(Clone, Debug, PartialEq)]
pub struct Cplx<R> {
    pub re: R,
    pub im: R,
}

/// Double-precision complex value, used for fast numerics and reporting.
pub type C64 = Cplx<f64>;

impl<R> Cplx<R> {
    pub fn new(re: R, im: R) -> Self {
        Cplx { re, im }
    }
}

impl C64 {
    pub fn norm(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn arg(&self) -> f64 {
        self.im.atan2(self.re)
    }

    pub fn from_polar(r: f64, th: f64) -> Self {
        Cplx::new(r * th.cos(), r * th.sin())
    }
}

impl<R: RealField> Cplx<R> {
    pub fn real(x: R) -> Self {
        let z = x.zero_like();
        Cplx::new(x, z)
    }

    pub fn i_like(x: &R) -> Self {
        Cplx::new(x.zero_like(), x.one_like())
    }

    pub fn norm_sqr_r(&self) -> R {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn scale(&self, k: &R) -> Self {
        Cplx::new(self.re.clone() * k.clone(), self.im.clone() * k.clone())
    }

    /// Principal square root, when representable in `R`.
    pub fn sqrt(&self) -> Option<Self> {
        R::cplx_sqrt(&self.re, &self.im).map(|(a, b)| Cplx::new(a, b))
    }

    /// One cube root, when representable in `R`.
    pub fn cbrt(&self) -> Option<Self> {
        R::cplx_cbrt(&self.re, &self.im).map(|(a, b)| Cplx::new(a, b))
    }

    /// `e^{i x}` for float kinds.
    pub fn expi(x: &R) -> Option<Self> {
        x.cos_sin().map(|(c, s)| Cplx::new(c, s))
    }

    /// Primitive cube root of unity `(-1 + i sqrt 3)/2` in the same kind, if representable.
    pub fn cube_root_of_unity(like: &R) -> Option<Self> {
        let half = like.lift(&Rational::new((-1).into(), 2.into()));
        let s3 = like.lift_i(3).sqrt()?;
        let h = like.lift(&Rational::new(1.into(), 2.into()));
        Some(Cplx::new(half, s3 * h))
    }
}

impl<R: RealField> Add for Cplx<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Cplx::new(self.re + o.re, self.im + o.im)
    }
}

impl<R: RealField> Sub for Cplx<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Cplx::new(self.re - o.re, self.im - o.im)
    }
}

impl<R: RealField> Mul for Cplx<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let re = self.re.clone() * o.re.clone() - self.im.clone() * o.im.clone();
        let im = self.re * o.im + self.im * o.re;
        Cplx::new(re, im)
    }
}

impl<R: RealField> Neg for Cplx<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Cplx::new(-self.re, -self.im)
    }
}

impl<R: RealField> Scalar for Cplx<R> {
    const EXACT: bool = R::EXACT;

    fn lift(&self, r: &Rational) -> Self {
        Cplx::new(self.re.lift(r), self.re.lift_i(0))
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr_r().inv()?;
        Some(Cplx::new(self.re.clone() * n.clone(), -(self.im.clone() * n)))
    }

    fn conj(&self) -> Self {
        Cplx::new(self.re.clone(), -self.im.clone())
    }

    fn to_c64(&self) -> C64 {
        Cplx::new(self.re.to_f64(), self.im.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_complex_roots() {
        let z = Cplx::new(-4.0, 0.0);
        let s = z.sqrt().unwrap();
        assert!((s.re).abs() < 1e-15 && (s.im - 2.0).abs() < 1e-15);
        let w = Cplx::new(0.3, -0.7);
        let c = w.cbrt().unwrap();
        let back = c.clone() * c.clone() * c;
        assert!((back - w).norm() < 1e-14);
    }

    #[test]
    fn inverse_round_trip() {
        let z = Cplx::new(1.5, -2.0);
        let one = z.clone() * z.inv().unwrap();
        assert!((one.re - 1.0).abs() < 1e-15 && one.im.abs() < 1e-15);
    }
}

//! Resultants via the Sylvester matrix and fraction-free elimination.

use super::multipoly::{ExactField, MultiPoly};
use super::Rational;
use crate::error::{arg, Error, Result};

/// Determinant of a square matrix of polynomials by Bareiss elimination.
///
/// Every intermediate division is exact, so the entries stay polynomial.
pub fn bareiss_det<K: ExactField>(mut m: Vec<Vec<MultiPoly<K>>>, vars: &[&str]) -> Result<MultiPoly<K>> {
    let n = m.len();
    let one = MultiPoly::constant(vars, K::from_q(&Rational::from_integer(1.into())));
    if n == 0 {
        return Ok(one);
    }
    let mut negate = false;
    let mut prev = one;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(s) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Ok(MultiPoly::zero(vars));
            };
            m.swap(k, s);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num
                    .exact_div(&prev)
                    .ok_or_else(|| Error::Inconsistent("non-exact Bareiss division".into()))?;
            }
        }
        prev = m[k][k].clone();
        for row in m.iter_mut().skip(k + 1) {
            row[k] = MultiPoly::zero(vars);
        }
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if negate { -d } else { d })
}

/// Resultant of `p` and `q` with respect to the named variable.
///
/// The result keeps the full variable list; the eliminated variable no longer
/// occurs in it.
pub fn resultant<K: ExactField>(p: &MultiPoly<K>, q: &MultiPoly<K>, var: &str) -> Result<MultiPoly<K>> {
    if p.vars() != q.vars() {
        return arg("resultant operands use different variable lists");
    }
    let Some(i) = p.var_index(var) else {
        return arg(format!("unknown variable {var}"));
    };
    let vars = p.vars();
    let (m, n) = (p.degree_in(i).unwrap_or(0) as usize, q.degree_in(i).unwrap_or(0) as usize);
    if p.is_zero() || q.is_zero() {
        return Ok(MultiPoly::zero(&vars));
    }
    if m == 0 && n == 0 {
        return arg(format!("variable {var} occurs in neither polynomial"));
    }
    if m == 0 {
        return Ok(p.pow(n as u32));
    }
    if n == 0 {
        return Ok(q.pow(m as u32));
    }
    let pc = p.coeffs_in(i);
    let qc = q.coeffs_in(i);
    let size = m + n;
    let zero = MultiPoly::zero(&vars);
    let mut mat = vec![vec![zero; size]; size];
    // rows hold descending coefficients, shifted
    for r in 0..n {
        for (k, c) in pc.iter().enumerate() {
            mat[r][r + m - k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in qc.iter().enumerate() {
            mat[n + r][r + n - k] = c.clone();
        }
    }
    bareiss_det(mat, &vars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn eliminates_linear_substitution() {
        let v = ["x", "y"];
        let x = MultiPoly::<Rational>::var(&v, "x");
        let y = MultiPoly::<Rational>::var(&v, "y");
        let two = MultiPoly::constant(&v, q(2));
        let r = resultant(&(x.clone() - y.clone()), &(y.clone() * y.clone() - two.clone()), "y").unwrap();
        assert_eq!(r, x.clone() * x - two);
    }

    #[test]
    fn common_root_gives_zero() {
        let v = ["x"];
        let x = MultiPoly::<Rational>::var(&v, "x");
        let r = resultant(&x.pow(2), &x.pow(3), "x").unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn univariate_value_matches_root_product() {
        // res(x^2 - 3x + 2, x - 5) = (5-1)(5-2) up to sign convention
        let v = ["x"];
        let x = MultiPoly::<Rational>::var(&v, "x");
        let c = |n| MultiPoly::constant(&v, q(n));
        let p = x.pow(2) - x.scale(&q(3)) + c(2);
        let r = resultant(&p, &(x.clone() - c(5)), "x").unwrap();
        assert_eq!(r.constant_value().unwrap(), q(12));
    }
}

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};

use super::SeifertMatrix;
use crate::arith::Rational;
use crate::links::ConwayPoly;
use crate::{Error, Result};

/// Fraction-free Gaussian elimination; exact for any integer matrix.
pub(crate) fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Coefficients of `det(t S - S^T)` in increasing powers of `t`.
fn seifert_form_polynomial(s: &SeifertMatrix) -> Result<Vec<BigInt>> {
    let n = s.size();
    let values: Vec<Rational> = (0..=n as i64)
        .map(|t| {
            let m = (0..n)
                .map(|i| (0..n).map(|j| s.get(i, j) * t - s.get(j, i)).collect())
                .collect();
            Rational::integer(det_bareiss(m))
        })
        .collect();
    // Newton divided differences on the nodes 0..=n, then expand to the monomial basis.
    let mut dd = values;
    for level in 1..=n {
        for i in (level..=n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) * Rational::frac(1, level as i64);
        }
    }
    let mut coeffs = vec![Rational::zero(); n + 1];
    for k in (0..=n).rev() {
        // coeffs <- coeffs * (t - k) + dd[k]
        let mut next = vec![Rational::zero(); n + 1];
        for e in 0..n {
            next[e + 1] = &next[e + 1] + &coeffs[e];
        }
        for e in 0..=n {
            next[e] = &next[e] - &coeffs[e] * Rational::from(k as i64);
        }
        next[0] = &next[0] + &dd[k];
        coeffs = next;
    }
    coeffs
        .into_iter()
        .map(|c| c.to_integer().ok_or_else(|| Error::Invariant(format!("non-integer coefficient {c}"))))
        .collect()
}

/// Laurent polynomial in one variable, exponent -> nonzero coefficient.
type Laurent = BTreeMap<i64, BigInt>;

fn add_term(p: &mut Laurent, e: i64, c: BigInt) {
    let entry = p.entry(e).or_insert_with(BigInt::zero);
    *entry += c;
    if entry.is_zero() {
        p.remove(&e);
    }
}

/// Conway polynomial from a Seifert matrix, via `det(x S - x^{-1} S^T)` rewritten in `z = x - x^{-1}`.
pub fn conway_from_seifert(s: &SeifertMatrix) -> Result<ConwayPoly> {
    let n = s.size() as i64;
    let mut laurent = Laurent::new();
    for (k, c) in seifert_form_polynomial(s)?.into_iter().enumerate() {
        if !c.is_zero() {
            add_term(&mut laurent, 2 * k as i64 - n, c);
        }
    }
    let mut out = BTreeMap::new();
    while let Some((&d, c)) = laurent.iter().next_back() {
        if d < 0 {
            return Err(Error::NotSeifert);
        }
        let c = c.clone();
        // z^d = sum_k C(d,k) (-1)^k x^{d-2k}
        for k in 0..=d {
            let mut term = binomial(BigInt::from(d), BigInt::from(k)) * &c;
            if k % 2 == 1 {
                term = -term;
            }
            add_term(&mut laurent, d - 2 * k, -term);
        }
        out.insert(d as u32, c);
    }
    Ok(ConwayPoly::from_coefficients(out))
}

/// `Δ''(1)` of the symmetric Alexander polynomial `Δ(t) = ∇(t^{1/2} - t^{-1/2})`.
pub fn second_derivative_from_conway(conway: &ConwayPoly) -> Result<BigInt> {
    let a0 = conway.coefficient(0);
    if !a0.is_one() || conway.coefficients().keys().any(|e| e % 2 == 1) {
        return Err(Error::NotAKnot(a0));
    }
    // z^2 = t - 2 + t^{-1}
    let step: Laurent = [(-1, BigInt::one()), (0, BigInt::from(-2)), (1, BigInt::one())].into();
    let mut delta = Laurent::new();
    let mut power: Laurent = [(0, BigInt::one())].into();
    let top = conway.degree().unwrap_or(0);
    for j in (0..=top).step_by(2) {
        let a = conway.coefficient(j);
        for (&e, c) in &power {
            add_term(&mut delta, e, c * &a);
        }
        let mut next = Laurent::new();
        for (&e1, c1) in &power {
            for (&e2, c2) in &step {
                add_term(&mut next, e1 + e2, c1 * c2);
            }
        }
        power = next;
    }
    if delta.iter().any(|(&e, c)| delta.get(&-e) != Some(c)) {
        return Err(Error::Invariant("Alexander polynomial is not symmetric".into()));
    }
    Ok(delta.iter().map(|(&e, c)| c * e * (e - 1)).sum())
}

pub fn alexander_second_derivative(s: &SeifertMatrix) -> Result<BigInt> {
    second_derivative_from_conway(&conway_from_seifert(s)?)
}

/// Whether `S - S^T` is unimodular, which holds for the Seifert matrix of a knot.
pub fn is_knot_matrix(s: &SeifertMatrix) -> bool {
    let n = s.size();
    let m = (0..n).map(|i| (0..n).map(|j| s.get(i, j) - s.get(j, i)).collect()).collect();
    det_bareiss(m).abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::seifert_torus2;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn bareiss_small() {
        assert_eq!(det_bareiss(big(&[&[2, 1], &[1, 3]])), BigInt::from(5));
        assert_eq!(det_bareiss(big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(det_bareiss(big(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])), BigInt::zero());
        assert_eq!(det_bareiss(big(&[&[0, 2, 1], &[3, 0, 4], &[5, 6, 0]])), BigInt::from(58));
    }

    #[test]
    fn trefoil_and_torus_knots() {
        let tref = conway_from_seifert(&seifert_torus2(3).unwrap()).unwrap();
        assert_eq!(tref, ConwayPoly::from_dense(&[1, 0, 1]));
        let t5 = conway_from_seifert(&seifert_torus2(5).unwrap()).unwrap();
        assert_eq!(t5, ConwayPoly::from_dense(&[1, 0, 3, 0, 1]));
        assert_eq!(conway_from_seifert(&SeifertMatrix::unknot()).unwrap(), ConwayPoly::one());
    }

    #[test]
    fn figure_eight() {
        let s = SeifertMatrix::from_rows([[-1, 1], [0, 1]]);
        assert_eq!(conway_from_seifert(&s).unwrap(), ConwayPoly::from_dense(&[1, 0, -1]));
        assert_eq!(alexander_second_derivative(&s).unwrap(), BigInt::from(-2));
    }

    #[test]
    fn second_derivative_is_twice_a2() {
        for n in [3, 5, 7, 9, 11] {
            let c = conway_from_seifert(&seifert_torus2(n).unwrap()).unwrap();
            assert_eq!(second_derivative_from_conway(&c).unwrap(), 2 * c.coefficient(2));
        }
        let c = ConwayPoly::from_dense(&[1, 0, 4, 0, -7, 0, 2]);
        assert_eq!(second_derivative_from_conway(&c).unwrap(), BigInt::from(8));
        assert_eq!(alexander_second_derivative(&SeifertMatrix::unknot()).unwrap(), BigInt::zero());
        assert_eq!(alexander_second_derivative(&seifert_torus2(3).unwrap()).unwrap(), BigInt::from(2));
        assert_eq!(alexander_second_derivative(&seifert_torus2(5).unwrap()).unwrap(), BigInt::from(6));
    }

    #[test]
    fn rejects_links_and_non_seifert_input() {
        assert!(matches!(second_derivative_from_conway(&ConwayPoly::monomial(1, 1)), Err(Error::NotAKnot(_))));
        assert!(matches!(second_derivative_from_conway(&ConwayPoly::from_dense(&[2])), Err(Error::NotAKnot(_))));
        assert_eq!(conway_from_seifert(&SeifertMatrix::from_rows([[1]])).unwrap(), ConwayPoly::monomial(1, 1));
        assert!(conway_from_seifert(&SeifertMatrix::from_rows([[1, 0], [0, 0]])).unwrap().is_zero());
        assert!(is_knot_matrix(&seifert_torus2(3).unwrap()));
        assert!(!is_knot_matrix(&SeifertMatrix::from_rows([[1, 0], [0, 1]])));
    }
}

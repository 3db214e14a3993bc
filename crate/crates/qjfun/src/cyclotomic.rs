//! Series with coefficients in Z[w], w a primitive N-th root of unity,
//! for verifying the root-of-unity product identity
//! prod_{p=0}^{N-1} (w^p q^(1/N))_inf = (q)_inf^(N+1) / (q^N)_inf
//! without floating point. The product over twists is at the same time the
//! eigenvalue factorization of the circulant determinant built from the
//! residue components of the expansion.
//!
//! Coefficients are stored on the power basis 1, w, ..., w^(N-2) of
//! Z[x]/Phi_N(x); reduction uses w^(N-1) = -(1 + w + ... + w^(N-2)). Since
//! that is a Z-basis, an element is a rational integer exactly when every
//! coordinate above w^0 vanishes.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::oracle::PrimeContext;
use crate::qfunc::euler_series;
use crate::series::{ResidualCheck, ScaledSeries};

/// An element of Z[w] in reduced form: vec[i] is the coordinate of w^i,
/// 0 <= i <= N-2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycCoeff {
    n: i64,
    vec: Vec<BigInt>,
}

impl CycCoeff {
    pub fn zero(n: i64) -> Self {
        assert!(n >= 2);
        CycCoeff { n, vec: vec![BigInt::zero(); (n - 1) as usize] }
    }

    pub fn from_integer(n: i64, value: BigInt) -> Self {
        let mut c = Self::zero(n);
        c.vec[0] = value;
        c
    }

    /// c * w^k, reduced. Exponents are taken mod N; w^(N-1) folds into the
    /// basis with all-negative coordinates.
    pub fn scaled_root_power(n: i64, k: i64, c: &BigInt) -> Self {
        let mut out = Self::zero(n);
        if c.is_zero() {
            return out;
        }
        let k = k.rem_euclid(n) as usize;
        if k == (n - 1) as usize {
            for slot in &mut out.vec {
                *slot = -c;
            }
        } else {
            out.vec[k] = c.clone();
        }
        out
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Coordinates on the basis 1, w, ..., w^(N-2).
    pub fn coordinates(&self) -> &[BigInt] {
        &self.vec
    }

    pub fn is_zero(&self) -> bool {
        self.vec.iter().all(BigInt::is_zero)
    }

    /// Some(value) when the element lies in Z, i.e. is supported on w^0 only.
    pub fn rational_integer(&self) -> Option<&BigInt> {
        if self.vec[1..].iter().all(BigInt::is_zero) {
            Some(&self.vec[0])
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        CycCoeff {
            n: self.n,
            vec: self.vec.iter().zip(&other.vec).map(|(a, b)| a + b).collect(),
        }
    }

    /// Schoolbook product followed by reduction mod w^N = 1 and then mod
    /// Phi_N: fold exponents into [0, N), then eliminate the w^(N-1) slot.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let n = self.n as usize;
        let mut folded = vec![BigInt::zero(); n];
        for (i, a) in self.vec.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.vec.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                folded[(i + j) % n] += a * b;
            }
        }
        let top = folded.pop().expect("n >= 2");
        CycCoeff { n: self.n, vec: folded.into_iter().map(|c| c - &top).collect() }
    }
}

/// Truncated series with CycCoeff coefficients, same exponent conventions as
/// [`ScaledSeries`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycSeries {
    n: i64,
    scale: i64,
    trunc: i64,
    terms: BTreeMap<i64, CycCoeff>,
}

impl CycSeries {
    /// Applies the substitution q^(1/N) -> w^p q^(1/N) to a series stored at
    /// scale N: the term c * t^e picks up the factor w^(pe mod N).
    pub fn omega_twist(series: &ScaledSeries, n: i64, p: i64) -> Self {
        assert_eq!(series.scale(), n, "twist expects the t = q^(1/N) representation");
        assert!((0..n).contains(&p));
        let terms = series
            .terms()
            .map(|(e, c)| (e, CycCoeff::scaled_root_power(n, (p * e).rem_euclid(n), c)))
            .collect();
        CycSeries { n, scale: n, trunc: series.trunc(), terms }
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &CycCoeff)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        assert_eq!(self.scale, other.scale);
        let trunc = self.trunc.min(other.trunc);
        let mut terms: BTreeMap<i64, CycCoeff> = BTreeMap::new();
        for (&ea, ca) in &self.terms {
            if ea >= trunc {
                break;
            }
            for (&eb, cb) in &other.terms {
                let e = ea + eb;
                if e >= trunc {
                    break;
                }
                let product = ca.mul(cb);
                match terms.get_mut(&e) {
                    Some(acc) => *acc = acc.add(&product),
                    None => {
                        terms.insert(e, product);
                    }
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        CycSeries { n: self.n, scale: self.scale, trunc, terms }
    }

    /// Collapses to an ordinary integer series; fails on the first
    /// coefficient with a component off the rational line.
    pub fn into_integer_series(self) -> Result<ScaledSeries> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            match c.rational_integer() {
                Some(v) => terms.push((*e, v.clone())),
                None => return Err(Error::NonRationalCoefficient { exponent: *e }),
            }
        }
        Ok(ScaledSeries::new(self.scale, self.trunc, terms))
    }
}

impl Serialize for CycSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("CycSeries", 4)?;
        state.serialize_field("n", &self.n)?;
        state.serialize_field("scale", &self.scale)?;
        state.serialize_field("trunc", &self.trunc)?;
        let terms: Vec<(i64, Vec<String>)> = self
            .terms
            .iter()
            .map(|(&e, c)| (e, c.coordinates().iter().map(BigInt::to_string).collect()))
            .collect();
        state.serialize_field("terms", &terms)?;
        state.end()
    }
}

/// Computes prod_{p=0}^{N-1} (w^p t)_inf on the pentagonal expansion of
/// (t)_inf below t^t_trunc, asserts that all cyclotomic components cancel and
/// that the surviving exponents are multiples of N, and compares the result
/// (rescaled to the q variable) with (q)_inf^(N+1) / (q^N)_inf.
pub fn product_identity_check(ctx: &PrimeContext, t_trunc: i64) -> Result<ResidualCheck> {
    let n = ctx.n();
    let pent = euler_series(1, t_trunc, 1).reinterpret_scale(n);
    let mut product = CycSeries::omega_twist(&pent, n, 0);
    for p in 1..n {
        product = product.mul(&CycSeries::omega_twist(&pent, n, p));
    }
    let plain = product.into_integer_series()?;
    if let Some((e, _)) = plain.terms().find(|(e, _)| e % n != 0) {
        return Err(Error::InternalInconsistency(format!(
            "product of twists has exponent {} not divisible by {}",
            e, n
        )));
    }
    let lhs = plain.rescale(1)?;
    let q_trunc = lhs.trunc();
    let rhs = euler_series(1, q_trunc, 1)
        .pow((n + 1) as u32)
        .div(&euler_series(n, q_trunc, 1))?;
    Ok(ResidualCheck::compare(&lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::j_oracle;

    #[test]
    fn root_powers_reduce() {
        // w^5 = 1 for N=5
        let one = CycCoeff::scaled_root_power(5, 5, &BigInt::from(1));
        assert_eq!(one, CycCoeff::from_integer(5, 1.into()));
        // w^4 * w^4 = w^8 = w^3
        let w4 = CycCoeff::scaled_root_power(5, 4, &BigInt::from(1));
        assert_eq!(w4.mul(&w4), CycCoeff::scaled_root_power(5, 3, &BigInt::from(1)));
        // 1 + w + w^2 + w^3 + w^4 = 0
        let mut sum = CycCoeff::zero(5);
        for k in 0..5 {
            sum = sum.add(&CycCoeff::scaled_root_power(5, k, &BigInt::from(1)));
        }
        assert!(sum.is_zero());
    }

    #[test]
    fn rational_detection() {
        let c = CycCoeff::from_integer(7, (-3).into());
        assert_eq!(c.rational_integer(), Some(&BigInt::from(-3)));
        let w = CycCoeff::scaled_root_power(7, 1, &BigInt::from(2));
        assert_eq!(w.rational_integer(), None);
    }

    #[test]
    fn twist_at_zero_embeds_the_series() {
        let pent = euler_series(1, 40, 1).reinterpret_scale(5);
        let twisted = CycSeries::omega_twist(&pent, 5, 0);
        assert_eq!(twisted.clone().into_integer_series().unwrap(), pent);
        // exponents divisible by N keep integer coefficients for any twist
        let twisted3 = CycSeries::omega_twist(&pent, 5, 3);
        for (e, c) in twisted3.terms() {
            assert_eq!(c.rational_integer().is_some(), e % 5 == 0, "exponent {}", e);
        }
    }

    #[test]
    fn twist_of_one_minus_t() {
        let s = ScaledSeries::new(5, 8, [(0, 1), (1, -1)]);
        let twisted = CycSeries::omega_twist(&s, 5, 1);
        let terms: Vec<(i64, CycCoeff)> =
            twisted.terms().map(|(e, c)| (e, c.clone())).collect();
        assert_eq!(terms[0], (0, CycCoeff::from_integer(5, 1.into())));
        assert_eq!(terms[1], (1, CycCoeff::scaled_root_power(5, 1, &BigInt::from(-1))));
    }

    #[test]
    fn product_identity_for_five() {
        let check = product_identity_check(&PrimeContext::new(5).unwrap(), 75).unwrap();
        assert!(check.pass, "residual {}", check.residual);
    }

    #[test]
    fn product_equals_det_expansion_for_five() {
        // prod_p (w^p t)_inf / (q^5)_inf^5 = J0^5 + q(5 J0 J2 - 1 - 5 J0^2 J2^2) + q^2 J2^5
        let ctx = PrimeContext::new(5).unwrap();
        let t_trunc = 60;
        let pent = euler_series(1, t_trunc, 1).reinterpret_scale(5);
        let mut product = CycSeries::omega_twist(&pent, 5, 0);
        for p in 1..5 {
            product = product.mul(&CycSeries::omega_twist(&pent, 5, p));
        }
        let lhs = product.into_integer_series().unwrap().rescale(1).unwrap();
        let q_trunc = lhs.trunc();
        let lhs = lhs.div(&euler_series(5, q_trunc, 1).pow(5)).unwrap();

        let j0 = j_oracle(&ctx, 0, q_trunc).unwrap();
        let j2 = j_oracle(&ctx, 2, q_trunc).unwrap();
        let middle = j0
            .mul(&j2)
            .mul_scalar(5)
            .sub(&ScaledSeries::one(1, q_trunc))
            .sub(&j0.pow(2).mul(&j2.pow(2)).mul_scalar(5));
        let det = j0.pow(5).add(&middle.shift_up(1)).add(&j2.pow(5).shift_up(2));
        assert!(lhs.agrees_with(&det), "lhs {} det {}", lhs, det);
    }

    #[test]
    fn serializes_coefficient_vectors() {
        let s = ScaledSeries::new(5, 4, [(0, 1), (1, -1)]);
        let twisted = CycSeries::omega_twist(&s, 5, 1);
        let json = serde_json::to_value(&twisted).unwrap();
        assert_eq!(json["n"], 5);
        assert_eq!(json["terms"][0], serde_json::json!([0, ["1", "0", "0", "0"]]));
        assert_eq!(json["terms"][1], serde_json::json!([1, ["0", "-1", "0", "0"]]));
    }
}

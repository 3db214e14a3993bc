//! Closed forms for the J functions and the product over all of them.
//!
//! Each class label A in [0, (N-1)/2] yields one nonzero J with index
//! p = ((N-6A)^2 - 1)/24 mod N. The A = 0 class gives the pure monomial
//! (-1)^floor((N+1)/6) q^floor((N^2-1)/24N); every other class gives
//! (-1)^(A + floor((N+1)/6)) q^floor([(N-6A)^2-1]/24N)
//! times the theta ratio f(-q^(2A), -q^(N-2A)) / f(-q^A, -q^(N-A)).

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::{equivalence_classes, j_oracle, PrimeContext};
use crate::qfunc::{theta_sum, ThetaArg};
use crate::series::{ResidualCheck, ScaledSeries};

/// Symbolic descriptor of one J function: sign, monomial power, and the
/// theta-ratio argument exponents (absent for the monomial class A = 0).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JClosedForm {
    /// Residue index of the term this J multiplies.
    #[serde(rename = "p")]
    pub index: i64,
    /// Class label.
    #[serde(rename = "A")]
    pub a_value: i64,
    pub sign: i64,
    /// Power of q in front of the theta ratio.
    #[serde(rename = "X")]
    pub power: i64,
    /// Exponent pair of the numerator theta f(-q^e1, -q^e2), if any.
    pub theta_num: Option<(i64, i64)>,
    /// Exponent pair of the denominator theta, if any.
    pub theta_den: Option<(i64, i64)>,
}

/// Descriptor for A in [0, (N-1)/2]. The exact integer division by 24 is done
/// before reduction mod N; (N-6A)^2 - 1 is always divisible by 24 because
/// N - 6A is coprime to 6.
pub fn j_closed_form(ctx: &PrimeContext, a_value: i64) -> JClosedForm {
    assert!((0..=ctx.max_a()).contains(&a_value), "class label out of range");
    let n = ctx.n();
    let d = n - 6 * a_value;
    let s = (d * d - 1) / 24;
    debug_assert_eq!(s * 24, d * d - 1);
    let index = s.rem_euclid(n);
    let power = s.div_euclid(n);
    let sign = if (a_value + ctx.abs_m()) % 2 == 0 { 1 } else { -1 };
    let (theta_num, theta_den) = if a_value == 0 {
        (None, None)
    } else {
        (Some((2 * a_value, n - 2 * a_value)), Some((a_value, n - a_value)))
    };
    JClosedForm { index, a_value, sign, power, theta_num, theta_den }
}

/// All descriptors for the context, in ascending A.
pub fn closed_form_table(ctx: &PrimeContext) -> Vec<JClosedForm> {
    (0..=ctx.max_a()).map(|a| j_closed_form(ctx, a)).collect()
}

/// Evaluates the closed form of the class-A J function below q^trunc.
pub fn j_series_closed(ctx: &PrimeContext, a_value: i64, trunc: i64) -> Result<ScaledSeries> {
    let form = j_closed_form(ctx, a_value);
    if a_value == 0 {
        return Ok(ScaledSeries::monomial(1, trunc, form.power, form.sign));
    }
    let (n1, n2) = form.theta_num.unwrap();
    let (d1, d2) = form.theta_den.unwrap();
    let num = theta_sum(&ThetaArg::neg(n1), &ThetaArg::neg(n2), trunc, 1);
    let den = theta_sum(&ThetaArg::neg(d1), &ThetaArg::neg(d2), trunc, 1);
    let ratio = num.div(&den)?;
    Ok(ratio.mul_scalar(form.sign).shift_up(form.power).truncated(trunc))
}

/// The predicted value of the product of all nonzero J functions:
/// (-1)^(|m|(|m|-1)/2) q^Z, with Z forced integral by theory.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductPrediction {
    pub sign: i64,
    /// The exponent Z >= 0.
    pub power: i64,
}

pub fn theorem2_prediction(ctx: &PrimeContext) -> Result<ProductPrediction> {
    let n = ctx.n();
    let numerator = (n - 1) * (n + 1) * (n + 1);
    debug_assert_eq!(numerator % 48, 0);
    let index_sum: i64 = equivalence_classes(ctx).iter().map(|c| c.index).sum();
    let scaled = numerator / 48 - index_sum;
    if scaled < 0 || scaled % n != 0 {
        return Err(Error::InternalInconsistency(format!(
            "product exponent {}/{} for N={} is not a non-negative integer",
            scaled, n, n
        )));
    }
    let half = ctx.abs_m() * (ctx.abs_m() - 1) / 2;
    Ok(ProductPrediction { sign: if half % 2 == 0 { 1 } else { -1 }, power: scaled / n })
}

/// Multiplies every nonzero oracle J and compares against the prediction.
pub fn theorem2_check(ctx: &PrimeContext, trunc: i64) -> Result<ResidualCheck> {
    let prediction = theorem2_prediction(ctx)?;
    assert!(trunc >= prediction.power + 2, "truncation too small to see the product");
    let mut product = ScaledSeries::one(1, trunc);
    for class in equivalence_classes(ctx) {
        product = product.mul(&j_oracle(ctx, class.index, trunc)?);
    }
    let expected = ScaledSeries::monomial(1, trunc, prediction.power, prediction.sign);
    Ok(ResidualCheck::compare(&product, &expected))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors_for_small_primes() {
        let c5 = PrimeContext::new(5).unwrap();
        let f = j_closed_form(&c5, 0);
        assert_eq!((f.index, f.sign, f.power), (1, -1, 0));
        assert_eq!(f.theta_num, None);
        let f = j_closed_form(&c5, 1);
        assert_eq!((f.index, f.sign, f.power), (0, 1, 0));
        assert_eq!(f.theta_num, Some((2, 3)));
        assert_eq!(f.theta_den, Some((1, 4)));

        let c7 = PrimeContext::new(7).unwrap();
        let f = j_closed_form(&c7, 3);
        assert_eq!((f.index, f.sign, f.power), (5, 1, 0));
        assert_eq!(f.theta_num, Some((6, 1)));
        assert_eq!(f.theta_den, Some((3, 4)));

        let c11 = PrimeContext::new(11).unwrap();
        let f = j_closed_form(&c11, 5);
        assert_eq!((f.index, f.sign, f.power), (4, -1, 1));
    }

    #[test]
    fn closed_series_match_oracle() {
        let c5 = PrimeContext::new(5).unwrap();
        assert_eq!(
            j_series_closed(&c5, 1, 100).unwrap(),
            j_oracle(&c5, 0, 100).unwrap()
        );
        let c7 = PrimeContext::new(7).unwrap();
        let j = j_series_closed(&c7, 0, 100).unwrap();
        assert_eq!(j, ScaledSeries::monomial(1, 100, 0, -1));
        assert_eq!(j, j_oracle(&c7, 2, 100).unwrap());
        let c13 = PrimeContext::new(13).unwrap();
        let form = j_closed_form(&c13, 4);
        assert_eq!(
            j_series_closed(&c13, 4, 60).unwrap(),
            j_oracle(&c13, form.index, 60).unwrap()
        );
    }

    #[test]
    fn leading_term_is_sign_times_power() {
        for n in [5i64, 7, 11, 13] {
            let ctx = PrimeContext::new(n).unwrap();
            for a in 1..=ctx.max_a() {
                let form = j_closed_form(&ctx, a);
                let series = j_series_closed(&ctx, a, 40).unwrap();
                assert_eq!(series.valuation(), Some(form.power), "N={} A={}", n, a);
                assert_eq!(series.coeff(form.power), form.sign.into(), "N={} A={}", n, a);
            }
        }
    }

    #[test]
    fn label_to_index_injective_and_exponents_complete() {
        let mut n = 5;
        while n <= 97 {
            if let Ok(ctx) = PrimeContext::new(n) {
                let table = closed_form_table(&ctx);
                let mut indices: Vec<i64> = table.iter().map(|f| f.index).collect();
                indices.sort_unstable();
                indices.dedup();
                assert_eq!(indices.len() as i64, ctx.max_a() + 1, "N={}", n);
                // numerator and denominator exponent multisets are both {1..N-1}
                let mut num_exps: Vec<i64> = table
                    .iter()
                    .filter_map(|f| f.theta_num)
                    .flat_map(|(a, b)| [a, b])
                    .collect();
                let mut den_exps: Vec<i64> = table
                    .iter()
                    .filter_map(|f| f.theta_den)
                    .flat_map(|(a, b)| [a, b])
                    .collect();
                num_exps.sort_unstable();
                den_exps.sort_unstable();
                let all: Vec<i64> = (1..n).collect();
                assert_eq!(num_exps, all, "N={}", n);
                assert_eq!(den_exps, all, "N={}", n);
            }
            n += 2;
        }
    }

    #[test]
    fn product_predictions() {
        let expect = [(5, 1, 0), (7, 1, 0), (11, -1, 1), (13, -1, 1)];
        for (n, sign, power) in expect {
            let ctx = PrimeContext::new(n).unwrap();
            let p = theorem2_prediction(&ctx).unwrap();
            assert_eq!((p.sign, p.power), (sign, power), "N={}", n);
        }
    }

    #[test]
    fn product_of_oracle_series_matches() {
        for n in [5i64, 7, 11, 13] {
            let ctx = PrimeContext::new(n).unwrap();
            let check = theorem2_check(&ctx, 60).unwrap();
            assert!(check.pass, "N={} residual {}", n, check.residual);
        }
    }

    #[test]
    fn table_serializes_with_contract_keys() {
        let ctx = PrimeContext::new(5).unwrap();
        let json = serde_json::to_value(closed_form_table(&ctx)).unwrap();
        let rows = json.as_array().unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0]["p"], 1);
        assert_eq!(rows[0]["A"], 0);
        assert_eq!(rows[0]["sign"], -1);
        assert_eq!(rows[0]["X"], 0);
        assert!(rows[0]["theta_num"].is_null());
        assert_eq!(rows[1]["theta_num"], serde_json::json!([2, 3]));
        assert_eq!(rows[1]["theta_den"], serde_json::json!([1, 4]));
    }
}

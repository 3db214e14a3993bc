//! Registry of named, individually runnable identity checks.
//!
//! Every check evaluates its two sides by independent computation paths
//! wherever those exist (bilateral sum vs. product form, multisection oracle
//! vs. theta-ratio closed form) and reports pass/fail together with the
//! residual series. Residuals are compared coefficient-exactly, never by
//! tolerance.
//!
//! Identities classically stated with J's in denominators are verified in
//! denominator-cleared polynomial form so that everything stays in the
//! integer-coefficient ring. The 5- and 7-division identities are written in
//! residue indexing: Ramanujan's J_1, J_2 for N=5 are the r = 0, 2 components
//! here, and his J_1, J_2, J_3 for N=7 are the r = 0, 1, 5 components.

use serde::Serialize;

use crate::closed_form::{j_series_closed, theorem2_check};
use crate::cyclotomic::product_identity_check;
use crate::error::{Error, Result};
use crate::oracle::{
    equivalence_classes, expansion_series, j_oracle, nonzero_support, PrimeContext,
};
use crate::qfunc::{
    euler_series, jacobi_cube, partition_series, quintuple_check, theta_product, theta_sum,
    ThetaArg,
};
use crate::series::{ResidualCheck, ScaledSeries};

/// Options shared by [`run_check`] and [`run_suite`]. `trunc` overrides each
/// check's default truncation order (in the check's native exponent units);
/// `primes` overrides the default N list of the parameterized checks.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub trunc: Option<i64>,
    pub primes: Option<Vec<i64>>,
    pub filter: Option<String>,
}

/// Result of one registry check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub pass: bool,
    /// Truncation order the check ran at, in stored exponent units.
    pub trunc: i64,
    /// Lowest exponent where the sides disagree, when failing.
    pub first_bad_exponent: Option<i64>,
    /// Residual of the first failing comparison (zero series on pass).
    #[serde(skip)]
    pub residual: ScaledSeries,
    /// Human-readable note: instance count, failing instance, etc.
    #[serde(skip)]
    pub detail: String,
}

struct Outcome {
    pass: bool,
    trunc: i64,
    residual: ScaledSeries,
    detail: String,
}

impl Outcome {
    fn from_residual(trunc: i64, check: ResidualCheck) -> Self {
        Outcome { pass: check.pass, trunc, residual: check.residual, detail: String::new() }
    }

    /// Combines per-instance results; keeps the first failing residual.
    fn aggregate(trunc: i64, parts: Vec<(String, ResidualCheck)>) -> Self {
        let total = parts.len();
        let failing: Vec<&(String, ResidualCheck)> =
            parts.iter().filter(|(_, c)| !c.pass).collect();
        let pass = failing.is_empty();
        let detail = if pass {
            format!("{} instances", total)
        } else {
            format!(
                "{}/{} instances failed, first: {}",
                failing.len(),
                total,
                failing[0].0
            )
        };
        let residual = failing
            .first()
            .map(|(_, c)| c.residual.clone())
            .unwrap_or_else(|| ScaledSeries::zero(1, trunc));
        Outcome { pass, trunc, residual, detail }
    }
}

struct CheckDef {
    id: &'static str,
    description: &'static str,
    run: fn(&SuiteOptions) -> Result<Outcome>,
}

const DEFAULT_TRUNC: i64 = 200;
const DEFAULT_PRIMES: [i64; 4] = [5, 7, 11, 13];

fn trunc_of(opts: &SuiteOptions, default: i64) -> i64 {
    opts.trunc.unwrap_or(default)
}

fn primes_of(opts: &SuiteOptions, default: &[i64]) -> Result<Vec<PrimeContext>> {
    match &opts.primes {
        Some(list) => list.iter().map(|&n| PrimeContext::new(n)).collect(),
        None => default.iter().map(|&n| PrimeContext::new(n)).collect(),
    }
}

/// Oracle J's for N = 5 at scale 1: the nonzero non-monomial components.
fn five_js(trunc: i64) -> Result<(ScaledSeries, ScaledSeries)> {
    let ctx = PrimeContext::new(5)?;
    Ok((j_oracle(&ctx, 0, trunc)?, j_oracle(&ctx, 2, trunc)?))
}

/// Oracle J's for N = 7 at scale 1: the components at r = 0, 1, 5.
fn seven_js(trunc: i64) -> Result<(ScaledSeries, ScaledSeries, ScaledSeries)> {
    let ctx = PrimeContext::new(7)?;
    Ok((
        j_oracle(&ctx, 0, trunc)?,
        j_oracle(&ctx, 1, trunc)?,
        j_oracle(&ctx, 5, trunc)?,
    ))
}

/// (q)_inf^a / (q^s)_inf^a below q^trunc.
fn euler_power_quotient(a: u32, s: i64, trunc: i64) -> Result<ScaledSeries> {
    euler_series(1, trunc, 1).pow(a).div(&euler_series(s, trunc, 1).pow(a))
}

fn check_expansion(n: i64, trunc: i64) -> Result<Outcome> {
    let ctx = PrimeContext::new(n)?;
    let t_trunc = n * trunc;
    let expansion = expansion_series(&ctx, t_trunc)?;
    let mut sum = ScaledSeries::zero(n, t_trunc);
    for r in 0..n {
        let j = j_oracle(&ctx, r, trunc)?;
        sum = sum.add(&j.rescale(n)?.shift_up(r));
    }
    Ok(Outcome::from_residual(t_trunc, ResidualCheck::compare(&sum, &expansion)))
}

fn n5_expansion(opts: &SuiteOptions) -> Result<Outcome> {
    check_expansion(5, trunc_of(opts, DEFAULT_TRUNC))
}

fn n7_expansion(opts: &SuiteOptions) -> Result<Outcome> {
    check_expansion(7, trunc_of(opts, DEFAULT_TRUNC))
}

/// Both sides of the rationalized reciprocal of the 5-division expansion,
/// computed at scale 5 so the fractional powers are honest exponents.
fn n5_reciprocal(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, DEFAULT_TRUNC);
    let t_trunc = 5 * trunc;
    let ctx = PrimeContext::new(5)?;
    let expansion = expansion_series(&ctx, t_trunc)?;
    let lhs = ScaledSeries::one(5, t_trunc).div(&expansion)?;

    let (j0, j2) = five_js(trunc)?;
    let j0 = j0.rescale(5)?;
    let j2 = j2.rescale(5)?;
    // numerator: J0^4 + 3q J2 + t(J0^3 + 2q J2^2) + t^2(2 J0^2 + q J2^3)
    //          + t^3(3 J0 + q J2^4) + 5 t^4, with t = q^(1/5)
    let num = j0
        .pow(4)
        .add(&j2.mul_scalar(3).shift_up(5))
        .add(&j0.pow(3).add(&j2.pow(2).mul_scalar(2).shift_up(5)).shift_up(1))
        .add(&j0.pow(2).mul_scalar(2).add(&j2.pow(3).shift_up(5)).shift_up(2))
        .add(&j0.mul_scalar(3).add(&j2.pow(4).shift_up(5)).shift_up(3))
        .add(&ScaledSeries::monomial(5, t_trunc, 4, 5));
    let den = j0
        .pow(5)
        .add(&ScaledSeries::monomial(5, t_trunc, 5, -11))
        .add(&j2.pow(5).shift_up(10));
    let rhs = num.div(&den)?;
    Ok(Outcome::from_residual(t_trunc, ResidualCheck::compare(&lhs, &rhs)))
}

fn n5_jj(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, DEFAULT_TRUNC);
    let (j0, j2) = five_js(trunc)?;
    let expected = ScaledSeries::monomial(1, trunc, 0, -1);
    Ok(Outcome::from_residual(trunc, ResidualCheck::compare(&j0.mul(&j2), &expected)))
}

fn n5_quintic(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, DEFAULT_TRUNC);
    let (j0, j2) = five_js(trunc)?;
    let lhs = j0
        .pow(5)
        .add(&ScaledSeries::monomial(1, trunc, 1, -11))
        .add(&j2.pow(5).shift_up(2));
    let rhs = euler_power_quotient(6, 5, trunc)?;
    Ok(Outcome::from_residual(trunc, ResidualCheck::compare(&lhs, &rhs)))
}

fn n5_partition(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, DEFAULT_TRUNC);
    let lhs = partition_series(5 * (trunc + 1)).multisect(5, 4).truncated(trunc);
    let rhs = euler_series(5, trunc, 1)
        .pow(5)
        .mul_scalar(5)
        .div(&euler_series(1, trunc, 1).pow(6))?;
    Ok(Outcome::from_residual(trunc, ResidualCheck::compare(&lhs, &rhs)))
}

fn n5_det(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, DEFAULT_TRUNC);
    let (j0, j2) = five_js(trunc)?;
    let middle = j0
        .mul(&j2)
        .mul_scalar(5)
        .sub(&ScaledSeries::one(1, trunc))
        .sub(&j0.pow(2).mul(&j2.pow(2)).mul_scalar(5));
    let lhs = j0.pow(5).add(&middle.shift_up(1)).add(&j2.pow(5).shift_up(2));
    let rhs = euler_power_quotient(6, 5, trunc)?;
    Ok(Outcome::from_residual(trunc, ResidualCheck::compare(&lhs, &rhs)))
}

fn n7_jjj(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, DEFAULT_TRUNC);
    let (j0, j1, j5) = seven_js(trunc)?;
    let expected = ScaledSeries::monomial(1, trunc, 0, -1);
    Ok(Outcome::from_residual(
        trunc,
        ResidualCheck::compare(&j0.mul(&j1).mul(&j5), &expected),
    ))
}

fn n7_det(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, DEFAULT_TRUNC);
    let (j0, j1, j5) = seven_js(trunc)?;
    let pure_powers = j0
        .pow(7)
        .add(&j1.pow(7).shift_up(1))
        .add(&j5.pow(7).shift_up(5));
    let seven_fold = j0
        .mul(&j1.pow(5))
        .add(&j5.mul(&j0.pow(5)))
        .add(&j1.mul(&j5.pow(5)).shift_up(3));
    let fourteen_fold = j0
        .pow(2)
        .mul(&j1.pow(3))
        .add(&j5.pow(2).mul(&j0.pow(3)).shift_up(1))
        .add(&j1.pow(2).mul(&j5.pow(3)).shift_up(2));
    let lhs = pure_powers
        .add(&seven_fold.mul_scalar(7).shift_up(1))
        .add(&fourteen_fold.mul_scalar(14).shift_up(1))
        .add(&ScaledSeries::monomial(1, trunc, 2, -8));
    let rhs = euler_power_quotient(8, 7, trunc)?;
    Ok(Outcome::from_residual(trunc, ResidualCheck::compare(&lhs, &rhs)))
}

fn n7_id55a(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, DEFAULT_TRUNC);
    let (j0, j1, j5) = seven_js(trunc)?;
    // J0^2 / J5 + J1 / J5^2 = q, cleared of denominators
    let lhs = j0.pow(2).mul(&j5).add(&j1);
    let rhs = j5.pow(2).shift_up(1).truncated(trunc);
    Ok(Outcome::from_residual(trunc, ResidualCheck::compare(&lhs, &rhs)))
}

fn n7_id55b(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, DEFAULT_TRUNC);
    let (j0, j1, j5) = seven_js(trunc)?;
    let lhs = j0
        .pow(7)
        .add(&j1.pow(7).shift_up(1))
        .add(&j5.pow(7).shift_up(5));
    let rhs = euler_power_quotient(8, 7, trunc)?
        .add(&euler_power_quotient(4, 7, trunc)?.mul_scalar(14).shift_up(1))
        .add(&ScaledSeries::monomial(1, trunc, 2, 57));
    Ok(Outcome::from_residual(trunc, ResidualCheck::compare(&lhs, &rhs)))
}

fn n7_id55c(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, DEFAULT_TRUNC);
    let (j0, j1, j5) = seven_js(trunc)?;
    let lhs = j0
        .pow(3)
        .mul(&j1)
        .add(&j1.pow(3).mul(&j5).shift_up(1))
        .add(&j5.pow(3).mul(&j0).shift_up(2));
    let rhs = euler_power_quotient(4, 7, trunc)?
        .neg()
        .add(&ScaledSeries::monomial(1, trunc, 1, -8));
    Ok(Outcome::from_residual(trunc, ResidualCheck::compare(&lhs, &rhs)))
}

fn n7_id55d(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, DEFAULT_TRUNC);
    let (j0, j1, j5) = seven_js(trunc)?;
    let lhs = j0
        .pow(2)
        .mul(&j1.pow(3))
        .add(&j5.pow(2).mul(&j0.pow(3)).shift_up(1))
        .add(&j1.pow(2).mul(&j5.pow(3)).shift_up(2));
    let rhs = euler_power_quotient(4, 7, trunc)?
        .neg()
        .add(&ScaledSeries::monomial(1, trunc, 1, -5));
    Ok(Outcome::from_residual(trunc, ResidualCheck::compare(&lhs, &rhs)))
}

fn n7_id56(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, DEFAULT_TRUNC);
    let (j0, j1, j5) = seven_js(trunc)?;
    let lhs = j0
        .mul(&j1.pow(5))
        .add(&j5.mul(&j0.pow(5)))
        .add(&j1.mul(&j5.pow(5)).shift_up(3));
    let rhs = ScaledSeries::monomial(1, trunc, 1, 3);
    Ok(Outcome::from_residual(trunc, ResidualCheck::compare(&lhs, &rhs)))
}

fn theta_prodsum(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, DEFAULT_TRUNC);
    let mut parts = Vec::new();
    for ctx in primes_of(opts, &DEFAULT_PRIMES)? {
        let n = ctx.n();
        for a in 1..=ctx.max_a() {
            for (e1, e2) in [(2 * a, n - 2 * a), (a, n - a)] {
                let x = ThetaArg::neg(e1);
                let y = ThetaArg::neg(e2);
                let check = ResidualCheck::compare(
                    &theta_sum(&x, &y, trunc, 1),
                    &theta_product(&x, &y, trunc, 1),
                );
                parts.push((format!("N={} f(-q^{},-q^{})", n, e1, e2), check));
            }
        }
    }
    Ok(Outcome::aggregate(trunc, parts))
}

fn quintuple(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, 150);
    let mut parts = Vec::new();
    for ctx in primes_of(opts, &DEFAULT_PRIMES)? {
        for a in 1..=ctx.max_a() {
            parts.push((
                format!("N={} A={}", ctx.n(), a),
                quintuple_check(ctx.n(), a, trunc),
            ));
        }
    }
    Ok(Outcome::aggregate(trunc, parts))
}

fn jacobi(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, DEFAULT_TRUNC);
    let check =
        ResidualCheck::compare(&jacobi_cube(trunc), &euler_series(1, trunc, 1).pow(3));
    Ok(Outcome::from_residual(trunc, check))
}

fn thm1_support(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, DEFAULT_TRUNC);
    let mut failures = Vec::new();
    let mut count = 0;
    let mut effective = trunc;
    for ctx in primes_of(opts, &DEFAULT_PRIMES)? {
        // margin so every J provably shows its lowest term
        let t = trunc.max(24 * ctx.n());
        effective = effective.max(t);
        count += 1;
        let support = nonzero_support(&ctx, t)?;
        let indices: std::collections::BTreeSet<i64> =
            equivalence_classes(&ctx).iter().map(|c| c.index).collect();
        if support != indices || support.len() as i64 != (ctx.n() + 1) / 2 {
            failures.push(format!("N={}: support {:?} vs classes {:?}", ctx.n(), support, indices));
        }
    }
    Ok(Outcome {
        pass: failures.is_empty(),
        trunc: effective,
        residual: ScaledSeries::zero(1, effective),
        detail: if failures.is_empty() {
            format!("{} primes", count)
        } else {
            failures.join("; ")
        },
    })
}

fn thm1_closed(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, DEFAULT_TRUNC);
    let mut parts = Vec::new();
    for ctx in primes_of(opts, &DEFAULT_PRIMES)? {
        for class in equivalence_classes(&ctx) {
            let closed = j_series_closed(&ctx, class.a_value, trunc)?;
            let oracle = j_oracle(&ctx, class.index, trunc)?;
            parts.push((
                format!("N={} A={}", ctx.n(), class.a_value),
                ResidualCheck::compare(&closed, &oracle),
            ));
        }
    }
    Ok(Outcome::aggregate(trunc, parts))
}

fn thm2_product(opts: &SuiteOptions) -> Result<Outcome> {
    let trunc = trunc_of(opts, DEFAULT_TRUNC);
    let mut parts = Vec::new();
    for ctx in primes_of(opts, &DEFAULT_PRIMES)? {
        parts.push((format!("N={}", ctx.n()), theorem2_check(&ctx, trunc)?));
    }
    Ok(Outcome::aggregate(trunc, parts))
}

fn eq19_product(opts: &SuiteOptions) -> Result<Outcome> {
    let mut parts = Vec::new();
    let mut effective = 0;
    for ctx in primes_of(opts, &[5, 7])? {
        // native units are t-exponents; larger primes default lower to stay fast
        let t_trunc = trunc_of(opts, if ctx.n() <= 7 { 250 } else { 150 });
        effective = effective.max(t_trunc);
        parts.push((format!("N={}", ctx.n()), product_identity_check(&ctx, t_trunc)?));
    }
    Ok(Outcome::aggregate(effective, parts))
}

const REGISTRY: &[CheckDef] = &[
    CheckDef {
        id: "n5.expansion",
        description: "residue components reassemble (q^(1/5))_inf / (q^5)_inf",
        run: n5_expansion,
    },
    CheckDef {
        id: "n5.reciprocal",
        description: "rationalized reciprocal of the 5-division expansion \
                      (Ramanujan's J1, J2 are the r = 0, 2 components)",
        run: n5_reciprocal,
    },
    CheckDef {
        id: "n5.jj",
        description: "J0 * J2 = -1 (Ramanujan's J1 J2 = -1)",
        run: n5_jj,
    },
    CheckDef {
        id: "n5.quintic",
        description: "J0^5 - 11q + q^2 J2^5 = (q)^6 / (q^5)^6",
        run: n5_quintic,
    },
    CheckDef {
        id: "n5.partition",
        description: "sum p(5n+4) q^n = 5 (q^5)^5 / (q)^6",
        run: n5_partition,
    },
    CheckDef {
        id: "n5.det",
        description: "determinant expansion J0^5 + q(5 J0 J2 - 1 - 5 J0^2 J2^2) + q^2 J2^5 \
                      = (q)^6 / (q^5)^6",
        run: n5_det,
    },
    CheckDef {
        id: "n7.expansion",
        description: "residue components reassemble (q^(1/7))_inf / (q^7)_inf",
        run: n7_expansion,
    },
    CheckDef {
        id: "n7.jjj",
        description: "J0 * J1 * J5 = -1 (Ramanujan's J1 J2 J3 = -1)",
        run: n7_jjj,
    },
    CheckDef {
        id: "n7.det",
        description: "simplified 7-division determinant expansion equals (q)^8 / (q^7)^8",
        run: n7_det,
    },
    CheckDef {
        id: "n7.id55a",
        description: "J0^2 J5 + J1 = q J5^2 (denominator-cleared)",
        run: n7_id55a,
    },
    CheckDef {
        id: "n7.id55b",
        description: "J0^7 + q J1^7 + q^5 J5^7 = (q)^8/(q^7)^8 + 14q (q)^4/(q^7)^4 + 57 q^2",
        run: n7_id55b,
    },
    CheckDef {
        id: "n7.id55c",
        description: "J0^3 J1 + q J1^3 J5 + q^2 J5^3 J0 = -(q)^4/(q^7)^4 - 8q",
        run: n7_id55c,
    },
    CheckDef {
        id: "n7.id55d",
        description: "J0^2 J1^3 + q J5^2 J0^3 + q^2 J1^2 J5^3 = -(q)^4/(q^7)^4 - 5q",
        run: n7_id55d,
    },
    CheckDef {
        id: "n7.id56",
        description: "J0 J1^5 + J5 J0^5 + q^3 J1 J5^5 = 3q",
        run: n7_id56,
    },
    CheckDef {
        id: "theta.prodsum",
        description: "theta bilateral sum equals triple product for all closed-form pairs",
        run: theta_prodsum,
    },
    CheckDef {
        id: "quintuple",
        description: "quintuple product identity under q -> q^N, a -> -q^A",
        run: quintuple,
    },
    CheckDef {
        id: "jacobi",
        description: "(q)^3 equals the alternating odd-number triangular series",
        run: jacobi,
    },
    CheckDef {
        id: "thm1.support",
        description: "expansion has exactly (N+1)/2 nonzero residues, matching class indices",
        run: thm1_support,
    },
    CheckDef {
        id: "thm1.closed",
        description: "closed-form J series equal the multisection oracle",
        run: thm1_closed,
    },
    CheckDef {
        id: "thm2.product",
        description: "product of all nonzero J's is +-q^Z as predicted",
        run: thm2_product,
    },
    CheckDef {
        id: "eq19.product",
        description: "product of root-of-unity twists of (q^(1/N))_inf equals (q)^(N+1)/(q^N)",
        run: eq19_product,
    },
];

/// Registered check ids, in suite order.
pub fn check_ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|def| def.id).collect()
}

pub fn describe(id: &str) -> Result<&'static str> {
    REGISTRY
        .iter()
        .find(|def| def.id == id)
        .map(|def| def.description)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

/// Runs a single registered check, optionally overriding its truncation.
pub fn run_check(id: &str, trunc: Option<i64>) -> Result<CheckReport> {
    run_check_with(id, &SuiteOptions { trunc, ..Default::default() })
}

pub fn run_check_with(id: &str, opts: &SuiteOptions) -> Result<CheckReport> {
    let def = REGISTRY
        .iter()
        .find(|def| def.id == id)
        .ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
    let outcome = (def.run)(opts)?;
    Ok(CheckReport {
        id: def.id.to_string(),
        pass: outcome.pass,
        trunc: outcome.trunc,
        first_bad_exponent: outcome.residual.valuation(),
        residual: outcome.residual,
        detail: outcome.detail,
    })
}

/// Results of a suite run plus pass/fail counts.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteSummary {
    pub reports: Vec<CheckReport>,
    pub passed: usize,
    pub failed: usize,
}

impl SuiteSummary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Runs every check whose id starts with the filter prefix (all checks when
/// no filter is given). An unmatched filter yields an empty summary.
pub fn run_suite(opts: &SuiteOptions) -> Result<SuiteSummary> {
    let mut reports = Vec::new();
    for def in REGISTRY {
        if let Some(prefix) = &opts.filter {
            if !def.id.starts_with(prefix.as_str()) {
                continue;
            }
        }
        reports.push(run_check_with(def.id, opts)?);
    }
    let passed = reports.iter().filter(|r| r.pass).count();
    let failed = reports.len() - passed;
    Ok(SuiteSummary { reports, passed, failed })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn individual_checks_pass_at_reduced_order() {
        for id in ["n5.jj", "n5.quintic", "n7.id56", "n7.id55a", "jacobi"] {
            let report = run_check(id, Some(60)).unwrap();
            assert!(report.pass, "{} residual {}", id, report.residual);
            assert_eq!(report.first_bad_exponent, None);
        }
    }

    #[test]
    fn unknown_check_is_an_error() {
        assert_eq!(
            run_check("n5.nope", None).unwrap_err(),
            Error::UnknownCheck("n5.nope".into())
        );
        assert!(describe("n5.jj").is_ok());
    }

    #[test]
    fn n5_prefix_runs_six_checks() {
        let opts = SuiteOptions {
            trunc: Some(60),
            filter: Some("n5".into()),
            ..Default::default()
        };
        let summary = run_suite(&opts).unwrap();
        assert_eq!(summary.reports.len(), 6);
        assert_eq!(summary.passed, 6);
        assert!(summary.all_passed());
    }

    #[test]
    fn unmatched_filter_is_empty() {
        let opts = SuiteOptions { filter: Some("nosuch".into()), ..Default::default() };
        let summary = run_suite(&opts).unwrap();
        assert!(summary.reports.is_empty());
        assert_eq!((summary.passed, summary.failed), (0, 0));
    }

    #[test]
    fn parameterized_checks_accept_prime_overrides() {
        let opts = SuiteOptions {
            trunc: Some(80),
            primes: Some(vec![5, 7]),
            filter: Some("thm".into()),
            ..Default::default()
        };
        let summary = run_suite(&opts).unwrap();
        assert_eq!(summary.reports.len(), 3);
        assert!(summary.all_passed());
        let bad = SuiteOptions { primes: Some(vec![6]), filter: Some("thm".into()), ..Default::default() };
        assert_eq!(run_suite(&bad).unwrap_err(), Error::NotPrime(6));
    }

    #[test]
    fn report_json_has_contract_keys() {
        let report = run_check("jacobi", Some(40)).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        let obj = json.as_object().unwrap();
        let keys: Vec<&String> = obj.keys().collect();
        assert_eq!(keys, ["first_bad_exponent", "id", "pass", "trunc"]);
        assert_eq!(obj["pass"], true);
        assert_eq!(obj["first_bad_exponent"], serde_json::Value::Null);
    }
}

//! Brute-force route to the J functions.
//!
//! With t = q^(1/N), the pentagonal expansion of (t)_inf is multisected by
//! residue class of the t-exponent mod N and each component divided by
//! (q^N)_inf, giving the coefficient series J_r(q) of q^(r/N) in the
//! expansion of (q^(1/N))_inf / (q^N)_inf. This route uses nothing but the
//! pentagonal number theorem and exact long division, so it serves as ground
//! truth for the closed forms.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::qfunc::euler_series;
use crate::series::ScaledSeries;

/// A prime N > 3 together with the signed integer m for which |6m - 1| = N.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeContext {
    n: i64,
    m: i64,
}

impl PrimeContext {
    pub fn new(n: i64) -> Result<Self> {
        if n == 2 || n == 3 {
            return Err(Error::UnsupportedPrime(n));
        }
        if !is_prime(n) {
            return Err(Error::NotPrime(n));
        }
        // primes > 3 are 1 or 5 mod 6
        let m = if n % 6 == 5 { (n + 1) / 6 } else { -(n - 1) / 6 };
        debug_assert_eq!((6 * m - 1).abs(), n);
        Ok(PrimeContext { n, m })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Signed pentagonal parameter: 6m - 1 = +-N.
    pub fn m(&self) -> i64 {
        self.m
    }

    /// |m| = floor((N+1)/6).
    pub fn abs_m(&self) -> i64 {
        self.m.abs()
    }

    /// Largest class label (N-1)/2.
    pub fn max_a(&self) -> i64 {
        (self.n - 1) / 2
    }
}

fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Which of the two pair families a class belongs to, by the parity of the
/// difference of its elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassGroup {
    Singleton,
    /// Pair with even element difference.
    GroupI,
    /// Pair with odd element difference.
    GroupII,
}

/// One equivalence class of residues a in [0, N-1] under equality of
/// a(3a-1)/2 mod N, labelled with its index p and its A value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivClass {
    /// One or two residues, ascending.
    pub elements: Vec<i64>,
    /// Class label A in [0, (N-1)/2].
    pub a_value: i64,
    /// Index p = a(3a-1)/2 mod N, the residue of the nonzero expansion term.
    pub index: i64,
    pub group: ClassGroup,
}

/// Partitions [0, N-1] into its (N+1)/2 classes, sorted by A value.
/// The map A -> class is a bijection onto [0, (N-1)/2].
pub fn equivalence_classes(ctx: &PrimeContext) -> Vec<EquivClass> {
    let n = ctx.n();
    let mut by_index: std::collections::BTreeMap<i64, Vec<i64>> = Default::default();
    for a in 0..n {
        let p = (a * (3 * a - 1) / 2).rem_euclid(n);
        by_index.entry(p).or_default().push(a);
    }
    let mut classes: Vec<EquivClass> = by_index
        .into_iter()
        .map(|(index, elements)| {
            let (a_value, group) = match elements.as_slice() {
                [_] => (0, ClassGroup::Singleton),
                [a1, a2] => {
                    let diff = a2 - a1;
                    if diff % 2 == 0 {
                        (diff / 2, ClassGroup::GroupI)
                    } else {
                        ((n - diff) / 2, ClassGroup::GroupII)
                    }
                }
                other => unreachable!("class of size {}", other.len()),
            };
            EquivClass { elements, a_value, index, group }
        })
        .collect();
    classes.sort_by_key(|c| c.a_value);
    for c in &classes {
        // index consistency with the A-parameterized form
        let d = n - 6 * c.a_value;
        debug_assert_eq!(((d * d - 1) / 24).rem_euclid(n), c.index);
    }
    classes
}

/// J_r(q) by brute force: residue-r component of the pentagonal expansion of
/// (q^(1/N))_inf, divided by (q^N)_inf, exact below q^trunc. Residues that
/// carry no class give the zero series.
pub fn j_oracle(ctx: &PrimeContext, r: i64, trunc: i64) -> Result<ScaledSeries> {
    let n = ctx.n();
    assert!((0..n).contains(&r), "residue out of range");
    let t_trunc = n * (trunc + 1);
    let pent = euler_series(1, t_trunc, 1).reinterpret_scale(n); // (q^(1/N))_inf
    let component = pent.multisect(n, r).reinterpret_scale(1);
    let quotient = component.div(&euler_series(n, trunc + 1, 1))?;
    Ok(quotient.truncated(trunc))
}

/// The expansion (q^(1/N))_inf / (q^N)_inf itself, as a series in t = q^(1/N)
/// exact below t^t_trunc.
pub fn expansion_series(ctx: &PrimeContext, t_trunc: i64) -> Result<ScaledSeries> {
    let n = ctx.n();
    let pent = euler_series(1, t_trunc, 1).reinterpret_scale(n);
    let q_trunc = (t_trunc + n - 1).div_euclid(n) + 1;
    let den = euler_series(n, q_trunc, 1).rescale(n)?; // (q^N)_inf in t units
    pent.div(&den)
}

/// Residues whose J series is not identically zero below q^trunc. By the
/// support theorem this equals the set of class indices once trunc clears
/// every leading exponent; callers should allow trunc >= 24N for margin.
pub fn nonzero_support(ctx: &PrimeContext, trunc: i64) -> Result<BTreeSet<i64>> {
    let mut support = BTreeSet::new();
    for r in 0..ctx.n() {
        if !j_oracle(ctx, r, trunc)?.is_zero() {
            support.insert(r);
        }
    }
    Ok(support)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(coeffs: &[i64]) -> ScaledSeries {
        ScaledSeries::new(
            1,
            coeffs.len() as i64,
            coeffs.iter().copied().enumerate().map(|(e, c)| (e as i64, c)),
        )
    }

    #[test]
    fn context_resolves_pentagonal_parameter() {
        assert_eq!(PrimeContext::new(5).unwrap().m(), 1);
        assert_eq!(PrimeContext::new(7).unwrap().m(), -1);
        let c13 = PrimeContext::new(13).unwrap();
        assert_eq!(c13.m(), -2);
        assert_eq!(c13.abs_m(), 2);
    }

    #[test]
    fn context_rejects_bad_input() {
        assert_eq!(PrimeContext::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeContext::new(9), Err(Error::NotPrime(9)));
        assert_eq!(PrimeContext::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeContext::new(2), Err(Error::UnsupportedPrime(2)));
        assert_eq!(PrimeContext::new(3), Err(Error::UnsupportedPrime(3)));
    }

    #[test]
    fn classes_for_five() {
        let ctx = PrimeContext::new(5).unwrap();
        let classes = equivalence_classes(&ctx);
        assert_eq!(classes.len(), 3);
        assert_eq!(classes[0].elements, vec![1]);
        assert_eq!((classes[0].a_value, classes[0].index), (0, 1));
        assert_eq!(classes[0].group, ClassGroup::Singleton);
        assert_eq!(classes[1].elements, vec![0, 2]);
        assert_eq!((classes[1].a_value, classes[1].index), (1, 0));
        assert_eq!(classes[1].group, ClassGroup::GroupI);
        assert_eq!(classes[2].elements, vec![3, 4]);
        assert_eq!((classes[2].a_value, classes[2].index), (2, 2));
        assert_eq!(classes[2].group, ClassGroup::GroupII);
    }

    #[test]
    fn classes_for_seven() {
        let ctx = PrimeContext::new(7).unwrap();
        let classes = equivalence_classes(&ctx);
        let summary: Vec<(Vec<i64>, i64, i64)> = classes
            .iter()
            .map(|c| (c.elements.clone(), c.a_value, c.index))
            .collect();
        assert_eq!(
            summary,
            vec![
                (vec![6], 0, 2),
                (vec![0, 5], 1, 0),
                (vec![1, 4], 2, 1),
                (vec![2, 3], 3, 5),
            ]
        );
        // the singleton element is N + m for m < 0
        assert_eq!(classes[0].elements[0], 7 + ctx.m());
    }

    #[test]
    fn oracle_matches_independent_expansion_for_five() {
        let ctx = PrimeContext::new(5).unwrap();
        // frozen from an independent integer-arithmetic multisection
        let j0 = qs(&[
            1, 1, 0, -1, 0, 1, 1, -1, -2, 0, 2, 2, -1, -3, -1, 3, 3, -2, -5, -1, 6, 5, -3, -8,
        ]);
        let j2 = qs(&[
            -1, 1, -1, 0, 1, -1, 1, -1, 0, 1, -2, 3, -2, 0, 2, -4, 4, -3, 1, 3, -6, 7, -5, 0,
        ]);
        assert_eq!(j_oracle(&ctx, 0, 24).unwrap(), j0);
        assert_eq!(j_oracle(&ctx, 1, 24).unwrap(), ScaledSeries::monomial(1, 24, 0, -1));
        assert_eq!(j_oracle(&ctx, 2, 24).unwrap(), j2);
        assert!(j_oracle(&ctx, 3, 24).unwrap().is_zero());
        assert!(j_oracle(&ctx, 4, 24).unwrap().is_zero());
    }

    #[test]
    fn oracle_matches_independent_expansion_for_seven() {
        let ctx = PrimeContext::new(7).unwrap();
        let j0 = qs(&[
            1, 1, 0, 0, 0, -1, 0, 1, 1, 0, -1, -1, -1, 0, 2, 2, 0, -1, -2, -2, 0, 3, 3, 0,
        ]);
        let j1 = qs(&[
            -1, 0, -1, 1, 0, 0, 0, -1, 1, -1, 1, 0, 0, 1, -2, 1, -2, 2, 0, 0, 1, -3, 3, -3,
        ]);
        let j5 = qs(&[
            1, -1, 0, 1, 0, -1, 0, 1, -1, 0, 1, 0, -1, 0, 2, -2, -1, 2, 0, -2, 1, 3, -3, -1,
        ]);
        assert_eq!(j_oracle(&ctx, 0, 24).unwrap(), j0);
        assert_eq!(j_oracle(&ctx, 1, 24).unwrap(), j1);
        assert_eq!(j_oracle(&ctx, 2, 24).unwrap(), ScaledSeries::monomial(1, 24, 0, -1));
        assert_eq!(j_oracle(&ctx, 5, 24).unwrap(), j5);
        for r in [3, 4, 6] {
            assert!(j_oracle(&ctx, r, 24).unwrap().is_zero());
        }
    }

    #[test]
    fn oracle_constants_for_eleven() {
        let ctx = PrimeContext::new(11).unwrap();
        assert_eq!(j_oracle(&ctx, 5, 30).unwrap(), ScaledSeries::one(1, 30));
        // J_4 = -q - q^2 * (ratio ...): leading term at the predicted power
        let j4 = j_oracle(&ctx, 4, 12).unwrap();
        assert_eq!(j4, qs(&[0, -1, 1, 0, 0, 0, -1, 0, 1, 0, 0, 0]));
    }

    #[test]
    fn support_sets() {
        let cases: [(i64, &[i64]); 3] =
            [(5, &[0, 1, 2]), (7, &[0, 1, 2, 5]), (11, &[0, 1, 2, 4, 5, 7])];
        for (n, expect) in cases {
            let ctx = PrimeContext::new(n).unwrap();
            let support = nonzero_support(&ctx, 24 * n).unwrap();
            assert_eq!(support.into_iter().collect::<Vec<_>>(), expect, "N={}", n);
            assert_eq!(expect.len() as i64, (n + 1) / 2);
        }
    }

    #[test]
    fn components_reassemble_the_expansion() {
        for n in [5i64, 7, 11] {
            let ctx = PrimeContext::new(n).unwrap();
            let t_trunc = 12 * n;
            let expansion = expansion_series(&ctx, t_trunc).unwrap();
            let mut sum = ScaledSeries::zero(n, t_trunc);
            for r in 0..n {
                let j = j_oracle(&ctx, r, t_trunc / n + 1).unwrap();
                sum = sum.add(&j.rescale(n).unwrap().shift_up(r));
            }
            assert!(sum.agrees_with(&expansion), "N={}", n);
            // and against the raw pentagonal series of (t)_inf
            let pent = euler_series(1, t_trunc, 1).reinterpret_scale(n);
            let qn_in_t = euler_series(n, t_trunc / n + 1, 1).rescale(n).unwrap();
            assert!(sum.mul(&qn_in_t).agrees_with(&pent), "N={}", n);
        }
    }
}

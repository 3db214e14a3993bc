//! Truncated formal power series with exact integer coefficients.
//!
//! A [`ScaledSeries`] holds finitely many terms of a series in q whose
//! exponents are integer multiples of 1/D for a fixed positive denominator D,
//! the *scale*. A stored exponent `e` means the monomial q^(e/D). The series
//! is known exactly for every exponent e/D with e < trunc; nothing is claimed
//! at or beyond that bound, and every ring operation propagates the smaller
//! of the operand precisions (truncation is absolute, never relative).
//!
//! Coefficients are arbitrary-precision integers. The term map is canonical:
//! zeros are pruned and all stored exponents satisfy 0 <= e < trunc.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledSeries {
    scale: i64,
    trunc: i64,
    terms: BTreeMap<i64, BigInt>,
}

impl ScaledSeries {
    /// Builds a series from (exponent, coefficient) pairs. Duplicate exponents
    /// accumulate; zero coefficients and terms at or beyond `trunc` are dropped.
    pub fn new<C: Into<BigInt>>(
        scale: i64,
        trunc: i64,
        terms: impl IntoIterator<Item = (i64, C)>,
    ) -> Self {
        assert!(scale >= 1, "scale must be positive");
        assert!(trunc >= 0, "truncation order must be non-negative");
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            assert!(e >= 0, "exponents must be non-negative");
            if e >= trunc {
                continue;
            }
            let c = c.into();
            if c.is_zero() {
                continue;
            }
            *map.entry(e).or_insert_with(BigInt::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        ScaledSeries { scale, trunc, terms: map }
    }

    pub fn zero(scale: i64, trunc: i64) -> Self {
        Self::new::<i64>(scale, trunc, [])
    }

    pub fn one(scale: i64, trunc: i64) -> Self {
        Self::new(scale, trunc, [(0, 1i64)])
    }

    /// The single term `coeff * q^(exponent/scale)`.
    pub fn monomial<C: Into<BigInt>>(scale: i64, trunc: i64, exponent: i64, coeff: C) -> Self {
        Self::new(scale, trunc, [(exponent, coeff)])
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    /// Stored (exponent, coefficient) pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient at stored exponent `e`. Panics if `e` is outside the known
    /// range [0, trunc): coefficients beyond the truncation are not known.
    pub fn coeff(&self, e: i64) -> BigInt {
        assert!(
            (0..self.trunc).contains(&e),
            "coefficient at exponent {} is beyond truncation order {}",
            e,
            self.trunc
        );
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Rewrites both operands at the least common scale.
    fn unified(a: &Self, b: &Self) -> (Self, Self) {
        if a.scale == b.scale {
            return (a.clone(), b.clone());
        }
        let common = a.scale.lcm(&b.scale);
        // Upscaling to a common multiple never fails.
        (a.rescale(common).unwrap(), b.rescale(common).unwrap())
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = Self::unified(self, other);
        let trunc = a.trunc.min(b.trunc);
        let mut terms: BTreeMap<i64, BigInt> =
            a.terms.into_iter().filter(|(e, _)| *e < trunc).collect();
        for (e, c) in b.terms {
            if e < trunc {
                *terms.entry(e).or_insert_with(BigInt::zero) += c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        ScaledSeries { scale: a.scale, trunc, terms }
    }

    pub fn neg(&self) -> Self {
        ScaledSeries {
            scale: self.scale,
            trunc: self.trunc,
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Cauchy product; the result is exact below min(trunc, other.trunc).
    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = Self::unified(self, other);
        let trunc = a.trunc.min(b.trunc);
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&ea, ca) in &a.terms {
            if ea >= trunc {
                break;
            }
            for (&eb, cb) in &b.terms {
                let e = ea + eb;
                if e >= trunc {
                    break; // exponents ascend, the rest only grow
                }
                *terms.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        ScaledSeries { scale: a.scale, trunc, terms }
    }

    pub fn mul_scalar<C: Into<BigInt>>(&self, k: C) -> Self {
        let k = k.into();
        if k.is_zero() {
            return Self::zero(self.scale, self.trunc);
        }
        ScaledSeries {
            scale: self.scale,
            trunc: self.trunc,
            terms: self.terms.iter().map(|(&e, c)| (e, c * &k)).collect(),
        }
    }

    /// Binary exponentiation; `pow(0)` is the constant 1 at this precision.
    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.scale, self.trunc);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact long division. The quotient c satisfies self = other * c up to
    /// the common precision, with exponents shifted down by the divisor's
    /// valuation. Coefficients are solved recursively and must divide exactly
    /// at every step; a non-integral coefficient raises
    /// [`Error::NonIntegerQuotient`] rather than promoting to rationals.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let (a, b) = Self::unified(self, other);
        let v = match b.valuation() {
            Some(v) => v,
            None => return Err(Error::DivisionByZeroSeries),
        };
        if let Some(av) = a.valuation() {
            if av < v {
                return Err(Error::DividendValuationTooLow { dividend: av, divisor: v });
            }
        }
        let trunc = (a.trunc.min(b.trunc) - v).max(0);
        let lead = b.terms[&v].clone();
        let mut quot: Vec<BigInt> = Vec::with_capacity(trunc as usize);
        for e in 0..trunc {
            let mut acc = a.terms.get(&(e + v)).cloned().unwrap_or_else(BigInt::zero);
            for (&i, bi) in b.terms.range(v + 1..) {
                let d = i - v;
                if d > e {
                    break;
                }
                acc -= bi * &quot[(e - d) as usize];
            }
            let (q, r) = acc.div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::NonIntegerQuotient { exponent: e });
            }
            quot.push(q);
        }
        Ok(ScaledSeries::new(
            a.scale,
            trunc,
            quot.into_iter().enumerate().map(|(e, c)| (e as i64, c)),
        ))
    }

    /// Re-expresses the same formal series with denominator `new_scale`.
    /// Fails when some stored exponent is not representable there.
    pub fn rescale(&self, new_scale: i64) -> Result<Self> {
        assert!(new_scale >= 1, "scale must be positive");
        if new_scale == self.scale {
            return Ok(self.clone());
        }
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            let (q, r) = (e * new_scale).div_rem(&self.scale);
            if r != 0 {
                return Err(Error::IncompatibleScale {
                    scale: self.scale,
                    requested: new_scale,
                    exponent: e,
                });
            }
            terms.insert(q, c.clone());
        }
        // Knowledge below trunc/scale in q-units translates to the ceiling.
        let trunc = (self.trunc * new_scale + self.scale - 1).div_euclid(self.scale);
        Ok(ScaledSeries { scale: new_scale, trunc, terms })
    }

    /// Relabels the exponent unit from 1/scale to 1/new_scale, keeping stored
    /// exponents fixed. This is the substitution q^(1/scale) -> q^(1/new_scale)
    /// (for example q -> q^(1/N), or its inverse), so it changes the series as
    /// a function of q; use [`ScaledSeries::rescale`] for a pure relabeling.
    pub fn reinterpret_scale(&self, new_scale: i64) -> Self {
        assert!(new_scale >= 1, "scale must be positive");
        ScaledSeries { scale: new_scale, trunc: self.trunc, terms: self.terms.clone() }
    }

    /// Multiplies by the monomial with stored exponent `k` (exactly: knowledge
    /// shifts up together with the terms).
    pub fn shift_up(&self, k: i64) -> Self {
        assert!(k >= 0, "shift must be non-negative");
        ScaledSeries {
            scale: self.scale,
            trunc: self.trunc + k,
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes u -> u^n in the stored variable: exponents and truncation
    /// are stretched by n (the gaps are exact zeros, so knowledge extends).
    pub fn substitute_power(&self, n: i64) -> Self {
        assert!(n >= 1, "substitution power must be positive");
        ScaledSeries {
            scale: self.scale,
            trunc: self.trunc * n,
            terms: self.terms.iter().map(|(&e, c)| (e * n, c.clone())).collect(),
        }
    }

    /// Forgets everything at or beyond stored exponent `t`.
    pub fn truncated(&self, t: i64) -> Self {
        assert!(t >= 0);
        let trunc = self.trunc.min(t);
        ScaledSeries {
            scale: self.scale,
            trunc,
            terms: self.terms.range(..trunc).map(|(&e, c)| (e, c.clone())).collect(),
        }
    }

    /// Extracts the residue-class component S_r of the stored exponents:
    /// writing the series as sum_r u^r S_r(u^n) in its variable u, returns
    /// S_r with stored exponents (e - r)/n and proportionally reduced
    /// truncation. The scale field is carried over unchanged; callers working
    /// in a fractional-power representation reinterpret it as needed.
    pub fn multisect(&self, n: i64, r: i64) -> Self {
        assert!(n >= 1, "section count must be positive");
        assert!((0..n).contains(&r), "residue out of range");
        let trunc = if self.trunc > r { (self.trunc - r + n - 1).div_euclid(n) } else { 0 };
        ScaledSeries {
            scale: self.scale,
            trunc,
            terms: self
                .terms
                .iter()
                .filter(|(&e, _)| e % n == r)
                .map(|(&e, c)| ((e - r) / n, c.clone()))
                .collect(),
        }
    }

    /// Semantic equality: both series rescaled to the least common
    /// denominator and compared term-by-term below the smaller precision.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let (a, b) = Self::unified(self, other);
        let trunc = a.trunc.min(b.trunc);
        let mut ta = a.terms.range(..trunc);
        let mut tb = b.terms.range(..trunc);
        loop {
            match (ta.next(), tb.next()) {
                (None, None) => return true,
                (Some((ea, ca)), Some((eb, cb))) if ea == eb && ca == cb => continue,
                _ => return false,
            }
        }
    }
}

/// Pass/fail outcome of comparing two series, with the difference kept for
/// diagnostics. Passing means the residual is identically zero up to the
/// common truncation; no tolerance is ever involved.
#[derive(Clone, Debug)]
pub struct ResidualCheck {
    pub pass: bool,
    pub residual: ScaledSeries,
}

impl ResidualCheck {
    pub fn compare(lhs: &ScaledSeries, rhs: &ScaledSeries) -> Self {
        let residual = lhs.sub(rhs);
        ResidualCheck { pass: residual.is_zero(), residual }
    }

    /// Lowest exponent at which the two sides disagree, if they do.
    pub fn first_bad_exponent(&self) -> Option<i64> {
        self.residual.valuation()
    }
}

// Canonical JSON form: {"scale": D, "trunc": T, "terms": [[e, "coeff"], ...]}
// with terms sorted by ascending exponent and coefficients as decimal strings.
#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    scale: i64,
    trunc: i64,
    terms: Vec<(i64, String)>,
}

impl Serialize for ScaledSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesRepr {
            scale: self.scale,
            trunc: self.trunc,
            terms: self.terms.iter().map(|(&e, c)| (e, c.to_string())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ScaledSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        if repr.scale < 1 {
            return Err(D::Error::custom("scale must be positive"));
        }
        if repr.trunc < 0 {
            return Err(D::Error::custom("trunc must be non-negative"));
        }
        let mut terms = Vec::with_capacity(repr.terms.len());
        for (e, c) in repr.terms {
            if !(0..repr.trunc).contains(&e) {
                return Err(D::Error::custom(format!("exponent {} outside [0, trunc)", e)));
            }
            let coeff: BigInt = c
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid integer coefficient '{}'", c)))?;
            terms.push((e, coeff));
        }
        Ok(ScaledSeries::new(repr.scale, repr.trunc, terms))
    }
}

impl fmt::Display for ScaledSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_power(f: &mut fmt::Formatter<'_>, e: i64, scale: i64) -> fmt::Result {
            let g = e.gcd(&scale);
            let (num, den) = (e / g, scale / g);
            if den == 1 {
                if num == 1 {
                    write!(f, "q")
                } else {
                    write!(f, "q^{}", num)
                }
            } else {
                write!(f, "q^({}/{})", num, den)
            }
        }

        let mut first = true;
        for (&e, c) in &self.terms {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", mag)?;
                }
                write_power(f, e, self.scale)?;
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(")?;
        write_power(f, self.trunc, self.scale)?;
        write!(f, ")")
    }
}

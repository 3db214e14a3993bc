//! Generators for the named special series: Euler products (q^s)_inf,
//! the Ramanujan theta function f(a,b) in bilateral-sum and triple-product
//! form, the quintuple product identity, Jacobi's cube identity, and the
//! partition generating function.
//!
//! Bilateral sums are enumerated outward from n = 0 until the term exponent
//! passes the truncation bound in each direction; the exponents are quadratic
//! and monotone outside a fixed neighbourhood of 0, so no term below the
//! bound can be missed.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::Zero;

use crate::series::{ResidualCheck, ScaledSeries};

/// A monomial argument s * q^alpha to a theta function or q-Pochhammer
/// symbol, with s = +-1 and alpha a positive rational.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThetaArg {
    sign: i64,
    exponent: Ratio<i64>,
}

impl ThetaArg {
    pub fn new(sign: i64, exponent: Ratio<i64>) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be +-1");
        assert!(exponent > Ratio::zero(), "theta argument exponent must be positive");
        ThetaArg { sign, exponent }
    }

    /// The argument +q^k for integer k > 0.
    pub fn pos(k: i64) -> Self {
        Self::new(1, Ratio::from_integer(k))
    }

    /// The argument -q^k for integer k > 0.
    pub fn neg(k: i64) -> Self {
        Self::new(-1, Ratio::from_integer(k))
    }

    pub fn sign(&self) -> i64 {
        self.sign
    }

    pub fn exponent(&self) -> Ratio<i64> {
        self.exponent
    }

    /// Monomial product of the two arguments.
    pub fn product(&self, other: &Self) -> Self {
        Self::new(self.sign * other.sign, self.exponent + other.exponent)
    }

    pub fn negated(&self) -> Self {
        ThetaArg { sign: -self.sign, exponent: self.exponent }
    }

    /// Exponent in stored units at the given scale. Panics when the argument
    /// is not representable there.
    fn stored_exponent(&self, scale: i64) -> i64 {
        let scaled = self.exponent * Ratio::from_integer(scale);
        assert!(
            scaled.is_integer(),
            "theta argument exponent {} is not representable at scale {}",
            self.exponent,
            scale
        );
        scaled.to_integer()
    }

    /// sign^k without computing a power.
    fn sign_pow(&self, k: i64) -> i64 {
        if self.sign == 1 || k % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// (q^s)_inf = prod_{k>=1} (1 - q^{sk}) via the pentagonal number theorem:
/// sum over m of (-1)^m q^{s m(3m-1)/2}.
pub fn euler_series(s: i64, trunc: i64, scale: i64) -> ScaledSeries {
    assert!(s >= 1, "Euler product step must be positive");
    let unit = s * scale; // stored exponent per pentagonal unit
    let mut terms: Vec<(i64, i64)> = Vec::new();
    let mut m = 0i64;
    loop {
        let e = unit * (m * (3 * m - 1) / 2);
        if m > 0 && e >= trunc {
            break;
        }
        terms.push((e, if m % 2 == 0 { 1 } else { -1 }));
        m += 1;
    }
    let mut m = -1i64;
    loop {
        let e = unit * (m * (3 * m - 1) / 2);
        if e >= trunc {
            break;
        }
        terms.push((e, if m % 2 == 0 { 1 } else { -1 }));
        m -= 1;
    }
    ScaledSeries::new(scale, trunc, terms)
}

/// Ramanujan's theta function as the bilateral sum
/// f(a,b) = sum_n a^{n(n+1)/2} b^{n(n-1)/2}.
pub fn theta_sum(a: &ThetaArg, b: &ThetaArg, trunc: i64, scale: i64) -> ScaledSeries {
    let ea = a.stored_exponent(scale);
    let eb = b.stored_exponent(scale);
    let mut terms: Vec<(i64, i64)> = Vec::new();
    let mut push = |n: i64| -> i64 {
        let t1 = n * (n + 1) / 2;
        let t2 = n * (n - 1) / 2;
        let e = ea * t1 + eb * t2;
        if e < trunc {
            terms.push((e, a.sign_pow(t1) * b.sign_pow(t2)));
        }
        e
    };
    let mut n = 0i64;
    loop {
        let e = push(n);
        if n > 0 && e >= trunc {
            break;
        }
        n += 1;
    }
    let mut n = -1i64;
    loop {
        let e = push(n);
        if e >= trunc {
            break;
        }
        n -= 1;
    }
    ScaledSeries::new(scale, trunc, terms)
}

/// The q-Pochhammer symbol (x; base)_inf = prod_{n>=0} (1 - x * base^n) for
/// monomial arguments.
pub fn q_pochhammer(x: &ThetaArg, base: &ThetaArg, trunc: i64, scale: i64) -> ScaledSeries {
    let ex = x.stored_exponent(scale);
    let eb = base.stored_exponent(scale);
    let mut acc = ScaledSeries::one(scale, trunc);
    let mut n = 0i64;
    loop {
        let e = ex + n * eb;
        if e >= trunc {
            break;
        }
        let factor =
            ScaledSeries::new(scale, trunc, [(0, 1), (e, -x.sign * base.sign_pow(n))]);
        acc = acc.mul(&factor);
        n += 1;
    }
    acc
}

/// f(a,b) through the triple product (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf.
pub fn theta_product(a: &ThetaArg, b: &ThetaArg, trunc: i64, scale: i64) -> ScaledSeries {
    let ab = a.product(b);
    q_pochhammer(&a.negated(), &ab, trunc, scale)
        .mul(&q_pochhammer(&b.negated(), &ab, trunc, scale))
        .mul(&q_pochhammer(&ab, &ab, trunc, scale))
}

/// Verifies the quintuple product identity specialized by q -> q^n and
/// a -> -q^k: the product side
/// prod (1-q^{nm})(1+q^{k+n(m-1)})(1+q^{nm-k})(1-q^{2k+n(2m-1)})(1-q^{n(2m-1)-2k})
/// against the bilateral sum side, both expanded independently to `trunc`.
pub fn quintuple_check(n: i64, k: i64, trunc: i64) -> ResidualCheck {
    assert!(k > 0 && 2 * k < n, "quintuple substitution needs 0 < k < n/2");
    let lhs = euler_series(n, trunc, 1)
        .mul(&q_pochhammer(&ThetaArg::neg(k), &ThetaArg::pos(n), trunc, 1))
        .mul(&q_pochhammer(&ThetaArg::neg(n - k), &ThetaArg::pos(n), trunc, 1))
        .mul(&q_pochhammer(&ThetaArg::pos(n + 2 * k), &ThetaArg::pos(2 * n), trunc, 1))
        .mul(&q_pochhammer(&ThetaArg::pos(n - 2 * k), &ThetaArg::pos(2 * n), trunc, 1));

    // sum side: sum_m (-1)^m q^{n m(3m-1)/2} (q^{3mk} + q^{(1-3m)k})
    let mut terms: Vec<(i64, i64)> = Vec::new();
    let mut push = |m: i64| -> (i64, i64) {
        let base = n * (m * (3 * m - 1) / 2);
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let e1 = base + 3 * m * k;
        let e2 = base + (1 - 3 * m) * k;
        if e1 < trunc {
            terms.push((e1, sign));
        }
        if e2 < trunc {
            terms.push((e2, sign));
        }
        (e1, e2)
    };
    let mut m = 0i64;
    loop {
        let (e1, e2) = push(m);
        // both exponent families are increasing for m >= 1
        if m >= 1 && e1 >= trunc && e2 >= trunc {
            break;
        }
        m += 1;
    }
    let mut m = -1i64;
    loop {
        let (e1, e2) = push(m);
        if e1 >= trunc && e2 >= trunc {
            break;
        }
        m -= 1;
    }
    let rhs = ScaledSeries::new(1, trunc, terms);
    ResidualCheck::compare(&lhs, &rhs)
}

/// Jacobi's cube identity series: sum_{n>=0} (-1)^n (2n+1) q^{n(n+1)/2},
/// which equals (q)_inf^3.
pub fn jacobi_cube(trunc: i64) -> ScaledSeries {
    let mut terms: Vec<(i64, i64)> = Vec::new();
    let mut n = 0i64;
    loop {
        let e = n * (n + 1) / 2;
        if e >= trunc {
            break;
        }
        terms.push((e, if n % 2 == 0 { 2 * n + 1 } else { -(2 * n + 1) }));
        n += 1;
    }
    ScaledSeries::new(1, trunc, terms)
}

/// The partition generating function: 1/(q)_inf, coefficient of q^n is p(n).
pub fn partition_series(trunc: i64) -> ScaledSeries {
    assert!(trunc >= 1);
    ScaledSeries::one(1, trunc)
        .div(&euler_series(1, trunc, 1))
        .expect("Euler function has unit constant term")
}

/// Partition number p(n) extracted from the generating function.
pub fn partition_number(n: i64) -> BigInt {
    partition_series(n + 1).coeff(n)
}

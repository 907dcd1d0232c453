//! Truncated power series over the rationals, and the generating-function
//! identities built on them.
//!
//! A [`TruncatedSeries`] of order `N` knows the coefficients of `t^0..=t^N`
//! and nothing beyond. Binary operations produce a result of the smaller
//! order; nothing is ever zero-padded, since padding would invent
//! coefficients that were never computed. Polynomials are the one exception:
//! their high coefficients really are zero, so [`TruncatedSeries::polynomial`]
//! may expand them to any order.
//!
//! The generating function of `Δn` is
//!
//! ```text
//! f(t) = Σ Δn (2t)^n = ½ / sqrt((1-t)(1-2t)(2t²+t+1)) - ½ / (1-t)
//! ```
//!
//! and the product under the root expands to `4t⁴ - 4t³ + t² - 2t + 1`.
//! Its constant term is one, so the inverse square root never needs a
//! rational square root.

use std::ops::{Add, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{integer, pow2, ratio};
use crate::report::Fragment;
use crate::{Error, Rational, Result};

/// Coefficients of `4t⁴ - 4t³ + t² - 2t + 1`, lowest degree first.
pub const DISCRIMINANT: [i64; 5] = [1, -2, 1, -4, 4];

/// `8t³ - 6t² + t - 1`: the companion polynomial in the first-order ODE
/// `disc(t) g'(t) + p(t) g(t) = 0` satisfied by `g = ½ disc^(-1/2)`.
pub const ODE_COMPANION: [i64; 4] = [-1, 1, -6, 8];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Series with the given known coefficients; order is `coeffs.len() - 1`.
    ///
    /// # Panics
    ///
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series knows at least its constant term");
        TruncatedSeries { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| integer(c)).collect())
    }

    /// A polynomial, known exactly, viewed as a series of the given order.
    pub fn polynomial(coeffs: &[i64], order: usize) -> Self {
        Self::new((0..=order).map(|k| integer(coeffs.get(k).copied().unwrap_or(0))).collect())
    }

    pub fn one(order: usize) -> Self {
        Self::polynomial(&[1], order)
    }

    /// `1 / (1 - c t)` to the given order.
    pub fn geometric(c: i64, order: usize) -> Self {
        let mut power = BigInt::one();
        let mut coeffs = Vec::with_capacity(order + 1);
        for _ in 0..=order {
            coeffs.push(Rational::from_integer(power.clone()));
            power *= c;
        }
        Self::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Drops everything above `order`. Asking for more than is known panics.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a series from order {} to {order}", self.order());
        Self::new(self.coeffs[..=order].to_vec())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplication by `t^k`; the result is known through `order + k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// Formal derivative, one order lower.
    ///
    /// # Panics
    ///
    /// On an order-0 series, whose derivative has no known coefficient.
    pub fn derivative(&self) -> Self {
        assert!(self.order() >= 1, "derivative of an order-0 series is unknown");
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Formal antiderivative with zero constant term, one order higher.
    pub fn integral(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(self.coeffs.iter().enumerate().map(|(k, c)| c / BigInt::from(k + 1)));
        Self::new(coeffs)
    }

    /// `self / rhs`, truncated to the smaller order.
    pub fn try_div(&self, rhs: &TruncatedSeries) -> Result<Self> {
        let b0 = &rhs.coeffs[0];
        if b0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let len = self.coeffs.len().min(rhs.coeffs.len());
        let inv_b0 = b0.recip();
        let tail: Vec<(usize, &Rational)> =
            rhs.coeffs[1..len].iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i + 1, c)).collect();
        let mut q: Vec<Rational> = Vec::with_capacity(len);
        for n in 0..len {
            let mut acc = self.coeffs[n].clone();
            for &(k, bk) in tail.iter().take_while(|(k, _)| *k <= n) {
                acc -= bk * &q[n - k];
            }
            q.push(acc * &inv_b0);
        }
        Ok(Self::new(q))
    }

    /// `1 / sqrt(self)` by Newton iteration `x <- x + x (1 - a x²) / 2`,
    /// doubling the number of correct coefficients per round.
    ///
    /// Requires constant term exactly one.
    pub fn sqrt_inv(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne(self.coeffs[0].clone()));
        }
        let len = self.coeffs.len();
        let half = ratio(1, 2);
        let mut x = vec![Rational::one()];
        while x.len() < len {
            let prec = (2 * x.len()).min(len);
            let x2 = mul_truncated(&x, &x, prec);
            let ax2 = mul_truncated(&self.coeffs, &x2, prec);
            // 1 - a x² vanishes below the current precision.
            let residual: Vec<Rational> = ax2
                .into_iter()
                .enumerate()
                .map(|(i, c)| if i == 0 { Rational::one() - c } else { -c })
                .collect();
            let correction = mul_truncated(&x, &residual, prec);
            x.resize(prec, Rational::zero());
            for (xi, ci) in x.iter_mut().zip(correction) {
                *xi += ci * &half;
            }
        }
        Ok(Self::new(x))
    }

    /// True when every known coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl Index<usize> for TruncatedSeries {
    type Output = Rational;

    fn index(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let len = self.coeffs.len().min(rhs.coeffs.len());
        TruncatedSeries::new(mul_truncated(&self.coeffs, &rhs.coeffs, len))
    }
}

/// Product of two coefficient slices, first `len` terms. Missing entries in
/// either slice are zero, which is only sound when the caller knows it.
///
/// Both operands are scaled to integers over a common denominator so the
/// inner loop is pure big-integer multiply-add.
fn mul_truncated(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let (an, ad) = integer_scaled(&a[..a.len().min(len)]);
    let (bn, bd) = integer_scaled(&b[..b.len().min(len)]);
    let mut acc = vec![BigInt::zero(); len];
    for (i, x) in an.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in bn.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                acc[i + j] += x * y;
            }
        }
    }
    let denom = ad * bd;
    acc.into_iter().map(|c| Rational::new(c, denom.clone())).collect()
}

fn integer_scaled(xs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let denom = xs.iter().fold(BigInt::one(), |acc, x| if x.denom().is_one() { acc } else { acc.lcm(x.denom()) });
    let nums = xs
        .iter()
        .map(|x| if x.denom() == &denom { x.numer().clone() } else { x.numer() * (&denom / x.denom()) })
        .collect();
    (nums, denom)
}

/// `(1-t)(1-2t)(2t²+t+1)` expanded by series multiplication.
pub fn discriminant_from_factors(order: usize) -> TruncatedSeries {
    let a = TruncatedSeries::polynomial(&[1, -1], order);
    let b = TruncatedSeries::polynomial(&[1, -2], order);
    let c = TruncatedSeries::polynomial(&[1, 1, 2], order);
    &(&a * &b) * &c
}

/// `½ / sqrt((1-t)(1-2t)(2t²+t+1))`, whose coefficients are `2^n Δn + ½`.
pub fn f_tilde(order: usize) -> TruncatedSeries {
    discriminant_from_factors(order)
        .sqrt_inv()
        .expect("constant term is one")
        .scale(&ratio(1, 2))
}

/// The closed form `f(t) = Σ Δn (2t)^n`.
pub fn closed_form_series(order: usize) -> TruncatedSeries {
    let geometric = TruncatedSeries::geometric(1, order).scale(&ratio(1, 2));
    &f_tilde(order) - &geometric
}

/// `Δ0..=ΔN` read off the closed form: `Δn = [t^n] f / 2^n`.
///
/// `Δ0` is a series artifact and comes out as zero.
pub fn delta_from_closed_form(order: usize) -> Vec<Rational> {
    closed_form_series(order)
        .into_coeffs()
        .into_iter()
        .enumerate()
        .map(|(n, c)| c / pow2(n as u64))
        .collect()
}

/// `h(t) = (t+2)/(2t²+t+1) + 1/(1-2t)` by series division.
pub fn h_series(order: usize) -> TruncatedSeries {
    let num = TruncatedSeries::polynomial(&[2, 1], order);
    let den = TruncatedSeries::polynomial(&[1, 1, 2], order);
    let q = num.try_div(&den).expect("constant term 1");
    &q + &TruncatedSeries::geometric(2, order)
}

pub fn h_coefficients(order: usize) -> Vec<Rational> {
    h_series(order).into_coeffs()
}

/// `h_n = 2^n + r_n` with `r_n = 2 Re(φ^n)`, `φ = (-1 + sqrt(-7)) / 2`.
pub fn h_closed_form(order: usize) -> Vec<BigInt> {
    PhiValues::new().take(order + 1).enumerate().map(|(n, r)| pow2(n as u64) + r).collect()
}

/// `r_n = 2 Re(φ^n)` for `n = 0..=N`.
///
/// `φ` and its conjugate are the roots of `x² + x + 2`, so `r_n` is the
/// integer sequence `r_0 = 2`, `r_1 = -1`, `r_n = -r_(n-1) - 2 r_(n-2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiRecurrence {
    r: Vec<BigInt>,
}

impl PhiRecurrence {
    pub fn new(order: usize) -> Self {
        PhiRecurrence { r: PhiValues::new().take(order + 1).collect() }
    }

    pub fn values(&self) -> &[BigInt] {
        &self.r
    }

    /// `|r_n| <= 2 · 2^(n/2)` for every stored term, checked as `r_n² <= 4 · 2^n`.
    pub fn within_bound(&self) -> bool {
        self.r.iter().enumerate().all(|(n, r)| phi_bound_holds(n, r))
    }
}

pub(crate) fn phi_bound_holds(n: usize, r: &BigInt) -> bool {
    r * r <= pow2(n as u64 + 2)
}

/// Streaming form of [`PhiRecurrence`] for long scans.
#[derive(Debug, Clone)]
pub struct PhiValues {
    current: BigInt,
    next: BigInt,
}

impl PhiValues {
    pub fn new() -> Self {
        PhiValues { current: BigInt::from(2), next: BigInt::from(-1) }
    }
}

impl Default for PhiValues {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for PhiValues {
    type Item = BigInt;

    fn next(&mut self) -> Option<BigInt> {
        let after = -&self.next - (&self.current << 1u32);
        let next = std::mem::replace(&mut self.next, after);
        Some(std::mem::replace(&mut self.current, next))
    }
}

/// Checks `h_n > 0` for `n = 0..=N` through the integer closed form,
/// streaming so that `N` can be large.
pub fn h_positivity_scan(order: usize) -> Fragment {
    let mut frag = Fragment::new("series.h_positivity");
    let mut power = BigInt::one();
    for (n, r) in PhiValues::new().take(order + 1).enumerate() {
        let h = &power + &r;
        if h.is_positive() {
            frag.checks_run += 1;
        } else {
            frag.record(false, format_args!("h_{n}"), || ("> 0", h.to_string()));
        }
        power <<= 1u32;
    }
    frag
}

/// Positivity of the generating function: `h_n > 0` for `n <= N`, and
/// `Δ1 = Δ2 = 0`, `Δn > 0` for `3 <= n <= N` from the closed form.
pub fn positivity_scan(order: usize) -> Fragment {
    let mut frag = h_positivity_scan(order);
    frag.check = "series.positivity".into();
    delta_sign_scan(&mut frag, &delta_from_closed_form(order));
    frag
}

/// Records the sign pattern `Δ1 = Δ2 = 0`, `Δn > 0` for `n >= 3` over
/// `deltas[1..]`.
pub(crate) fn delta_sign_scan(frag: &mut Fragment, deltas: &[Rational]) {
    for (n, d) in deltas.iter().enumerate().skip(1) {
        let ok = if n <= 2 { d.is_zero() } else { d.is_positive() };
        frag.record(ok, format_args!("Δ_{n}"), || (if n <= 2 { "0" } else { "> 0" }, d.to_string()));
    }
}

/// `(2t²/(1-t)) h(t) = d/dt ½ log((1-t) / ((1-2t)(2t²+t+1)))` through order
/// `N - 1`, using the standard `h`.
pub fn log_derivative_identity_check(order: usize) -> bool {
    log_derivative_identity_holds(&h_series(order))
}

/// The log-derivative identity for a caller-supplied `h`, at `h`'s order.
///
/// Both sides are integrated once and compared as series with zero constant
/// term; the logarithm is taken as `∫ q'/q` so no `log` constant appears.
pub fn log_derivative_identity_holds(h: &TruncatedSeries) -> bool {
    let order = h.order();
    if order == 0 {
        return true;
    }
    let weight = TruncatedSeries::polynomial(&[0, 0, 2], order)
        .try_div(&TruncatedSeries::polynomial(&[1, -1], order))
        .expect("constant term 1");
    let lhs = (&weight * h).truncate(order - 1).integral();

    let num = TruncatedSeries::polynomial(&[1, -1], order);
    let den = &TruncatedSeries::polynomial(&[1, -2], order) * &TruncatedSeries::polynomial(&[1, 1, 2], order);
    let q = num.try_div(&den).expect("constant term 1");
    let log_q = q.derivative().try_div(&q.truncate(order - 1)).expect("q(0) = 1").integral();
    let rhs = log_q.scale(&ratio(1, 2));
    lhs == rhs
}

/// `disc(t) f̃'(t) + (8t³ - 6t² + t - 1) f̃(t) = 0` through order `N - 1`.
pub fn ode_identity_check(order: usize) -> bool {
    ode_identity_holds(&DISCRIMINANT, order)
}

/// The ODE with a caller-supplied leading polynomial in place of the
/// discriminant. `f̃` is always built from the factored product, so any
/// other polynomial should make this fail.
pub fn ode_identity_holds(leading: &[i64], order: usize) -> bool {
    if order == 0 {
        return true;
    }
    let g = f_tilde(order);
    let q = TruncatedSeries::polynomial(leading, order - 1);
    let p = TruncatedSeries::polynomial(&ODE_COMPANION, order - 1);
    let lhs = &(&q * &g.derivative()) + &(&p * &g.truncate(order - 1));
    lhs.coeffs().iter().all(Zero::is_zero)
}

/// `2 f̃` has integer coefficients through the given order.
pub fn doubled_f_tilde_is_integral(order: usize) -> bool {
    f_tilde(order).scale(&integer(2)).is_integral()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "{c} is not an integer");
                i64::try_from(c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn geometric_identities() {
        let one_minus_t = TruncatedSeries::polynomial(&[1, -1], 8);
        let prod = &one_minus_t * &TruncatedSeries::geometric(1, 8);
        assert_eq!(prod, TruncatedSeries::one(8));

        let inv = TruncatedSeries::one(6).try_div(&TruncatedSeries::polynomial(&[1, -2], 6)).unwrap();
        assert_eq!(ints(&inv), vec![1, 2, 4, 8, 16, 32, 64]);
    }

    #[test]
    fn rational_function_expansion() {
        let q = TruncatedSeries::polynomial(&[2, 1], 3).try_div(&TruncatedSeries::polynomial(&[1, 1, 2], 3)).unwrap();
        assert_eq!(ints(&q), vec![2, -1, -3, 5]);
    }

    #[test]
    fn division_needs_unit_constant() {
        let a = TruncatedSeries::one(3);
        let b = TruncatedSeries::polynomial(&[0, 1], 3);
        assert!(matches!(a.try_div(&b), Err(Error::ZeroConstantTerm)));
    }

    #[test]
    fn mismatched_orders_truncate_to_shorter() {
        let a = TruncatedSeries::geometric(1, 10);
        let b = TruncatedSeries::geometric(1, 4);
        assert_eq!((&a + &b).order(), 4);
        assert_eq!((&a * &b).order(), 4);
        assert_eq!(a.try_div(&b).unwrap().order(), 4);
    }

    #[test]
    fn derivative_and_integral() {
        let s = TruncatedSeries::from_integers(&[5, 1, 3, 4]);
        assert_eq!(ints(&s.derivative()), vec![1, 6, 12]);
        assert_eq!(s.derivative().integral(), TruncatedSeries::from_integers(&[0, 1, 3, 4]));
        assert_eq!(s.shift(2), TruncatedSeries::from_integers(&[0, 0, 5, 1, 3, 4]));
    }

    #[test]
    fn sqrt_inv_of_square() {
        let s = TruncatedSeries::polynomial(&[1, 2, 1], 7).sqrt_inv().unwrap();
        assert_eq!(ints(&s), vec![1, -1, 1, -1, 1, -1, 1, -1]);
    }

    #[test]
    fn sqrt_inv_central_binomials() {
        let s = TruncatedSeries::polynomial(&[1, -4], 12).sqrt_inv().unwrap();
        // binomial(2n, n) computed directly
        let mut expected = Vec::new();
        let mut b: i64 = 1;
        for n in 0..=12i64 {
            expected.push(b);
            b = b * (2 * n + 1) * (2 * n + 2) / ((n + 1) * (n + 1));
        }
        assert_eq!(ints(&s), expected);
    }

    #[test]
    fn sqrt_inv_of_discriminant() {
        let s = TruncatedSeries::polynomial(&DISCRIMINANT, 5).sqrt_inv().unwrap();
        assert_eq!(ints(&s), vec![1, 1, 1, 3, 5, 7]);
    }

    #[test]
    fn sqrt_inv_rejects_other_constants() {
        let err = TruncatedSeries::polynomial(&[4, 1], 3).sqrt_inv().unwrap_err();
        assert!(matches!(err, Error::ConstantTermNotOne(c) if c == integer(4)));
    }

    #[test]
    fn factors_expand_to_discriminant() {
        assert_eq!(discriminant_from_factors(9), TruncatedSeries::polynomial(&DISCRIMINANT, 9));
    }

    #[test]
    fn closed_form_small_deltas() {
        let d = delta_from_closed_form(12);
        assert_eq!(d[0], integer(0));
        assert_eq!(d[1], integer(0));
        assert_eq!(d[2], integer(0));
        assert_eq!(d[3], ratio(1, 8));
        assert_eq!(d[4], ratio(1, 8));
        assert_eq!(d[5], ratio(3, 32));
        assert_eq!(d[12], ratio(329, 4096));
    }

    #[test]
    fn h_first_coefficients() {
        let h = h_coefficients(5);
        assert_eq!(&h[..4], &[integer(3), integer(1), integer(1), integer(13)]);
        let closed = h_closed_form(5);
        assert_eq!(closed[3], BigInt::from(13));
        for (a, b) in h.iter().zip(&closed) {
            assert_eq!(a, &Rational::from_integer(b.clone()));
        }
    }

    #[test]
    fn phi_recurrence_seeds_and_bound() {
        let phi = PhiRecurrence::new(40);
        let first: Vec<i64> = phi.values()[..5].iter().map(|r| i64::try_from(r).unwrap()).collect();
        assert_eq!(first, vec![2, -1, -3, 5, 1]);
        assert!(phi.within_bound());
    }

    #[test]
    fn positivity_scan_small() {
        let frag = positivity_scan(10);
        assert!(frag.passed(), "{:?}", frag.first_failure());
        assert_eq!(frag.checks_run, 11 + 10);
    }

    #[test]
    fn delta_sign_scan_reports_first_violation() {
        let mut frag = Fragment::new("t");
        delta_sign_scan(&mut frag, &[integer(0), integer(0), ratio(1, 9), ratio(1, 8), integer(0)]);
        let first = frag.first_failure().unwrap();
        assert_eq!(first.input, "Δ_2");
        assert_eq!(frag.failures.len(), 2);
    }

    #[test]
    fn log_derivative_identity() {
        assert!(log_derivative_identity_check(4));
        assert!(log_derivative_identity_check(16));
        let mut h = h_series(16).into_coeffs();
        h[3] += integer(1);
        assert!(!log_derivative_identity_holds(&TruncatedSeries::new(h)));
    }

    #[test]
    fn ode_identity() {
        assert!(ode_identity_check(5));
        assert!(ode_identity_check(32));
        assert!(!ode_identity_holds(&[2, -2, 1, -4, 4], 32));
    }

    #[test]
    fn doubled_f_tilde_integral() {
        assert!(doubled_f_tilde_is_integral(100));
        assert!(!f_tilde(3).is_integral());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_series(order: usize, unit: bool) -> impl Strategy<Value = TruncatedSeries> {
            prop::collection::vec((-9i64..=9, 1i64..=4), order + 1).prop_map(move |cs| {
                let mut coeffs: Vec<Rational> = cs.into_iter().map(|(p, q)| ratio(p, q)).collect();
                if unit {
                    coeffs[0] = Rational::one();
                }
                TruncatedSeries::new(coeffs)
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn sqrt_inv_squares_back(a in arb_series(12, true)) {
                let s = a.sqrt_inv().unwrap();
                prop_assert_eq!(&(&s * &s) * &a, TruncatedSeries::one(12));
            }

            #[test]
            fn div_undoes_mul(a in arb_series(10, false), b in arb_series(10, true)) {
                prop_assert_eq!((&a * &b).try_div(&b).unwrap(), a);
            }

            #[test]
            fn mul_commutes(a in arb_series(8, false), b in arb_series(8, false)) {
                prop_assert_eq!(&a * &b, &b * &a);
            }
        }
    }
}

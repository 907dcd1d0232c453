//! Verification suites: every cross-check in the crate, grouped by subject,
//! run at configurable bounds and reported as [`VerificationReport`]s.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;

use crate::analysis::{self, ContourConfig, RATIO_ERROR_CONSTANT};
use crate::exactdp::{self, Distributions, ENUMERATION_CAP};
use crate::lattice::{self, LatticeSpec};
use crate::rational::{integer, to_f64};
use crate::recurrence::{self, ETerms, FloatDeltas};
use crate::report::{Fragment, VerificationReport};
use crate::series::{self, PhiRecurrence, TruncatedSeries, DISCRIMINANT};
use crate::{Error, Result};

/// Largest `n^(3/2) |Δn - 1/(2 sqrt(nπ))|` over `100 <= n <= 10_000`,
/// calibrated at 0.0176 and rounded up.
pub const SCALED_ERROR_BOUND: f64 = 0.018;

/// Contour agreement with the exact value.
pub const CONTOUR_TOLERANCE: f64 = 1e-6;

/// Relative error allowed between float and exact `Δn`.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

/// Radii probed by the contour radius-invariance check.
pub const INVARIANCE_RADII: [f64; 5] = [0.5, 0.6, 0.7, 0.8, 0.9];

/// Largest `n` for the radius-invariance check.
pub const INVARIANCE_MAX_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Asymptotics,
    Contour,
    Dp,
    Lattice,
    Recurrence,
    Series,
}

impl Suite {
    /// Every suite, sorted by name.
    pub const ALL: [Suite; 6] =
        [Suite::Asymptotics, Suite::Contour, Suite::Dp, Suite::Lattice, Suite::Recurrence, Suite::Series];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Asymptotics => "asymptotics",
            Suite::Contour => "contour",
            Suite::Dp => "dp",
            Suite::Lattice => "lattice",
            Suite::Recurrence => "recurrence",
            Suite::Series => "series",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::UnknownSuite(s.into()))
    }
}

/// Upper limits for every check.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    /// Enumeration against DP, `1..=dp_max` (at most 24).
    pub dp_max: u32,
    /// Closed-form series against DP, `1..=series_max`.
    pub series_max: usize,
    /// Order for the exact series identities.
    pub identity_order: usize,
    /// `h_n > 0` scan length.
    pub h_scan_max: usize,
    /// DP, series and recurrence agreement and float fidelity, `1..=recurrence_max`.
    pub recurrence_max: usize,
    /// Sign and integrality scans of the recurrence, `1..=positivity_max`.
    pub positivity_max: usize,
    pub lattice_max: usize,
    pub contour_max: usize,
    pub contour: ContourConfig,
    pub asymptotic_max: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            dp_max: 16,
            series_max: 200,
            identity_order: 64,
            h_scan_max: 100_000,
            recurrence_max: 2000,
            positivity_max: 10_000,
            lattice_max: 60,
            contour_max: analysis::CONTOUR_CAP,
            contour: ContourConfig::default(),
            asymptotic_max: 10_000,
        }
    }
}

impl Bounds {
    /// Overrides the main bound of one suite, as `--max-n` does.
    pub fn with_max_n(mut self, suite: Suite, n: usize) -> Self {
        match suite {
            Suite::Asymptotics => self.asymptotic_max = n,
            Suite::Contour => self.contour_max = n,
            Suite::Dp => self.dp_max = u32::try_from(n).unwrap_or(u32::MAX),
            Suite::Lattice => self.lattice_max = n,
            Suite::Recurrence => self.recurrence_max = n,
            Suite::Series => self.series_max = n,
        }
        self
    }

    /// Rejects bounds a suite cannot honor.
    pub fn validate(&self) -> Result<()> {
        if self.dp_max == 0 || self.dp_max > ENUMERATION_CAP {
            return Err(Error::OutOfRange { n: self.dp_max.into(), min: 1, max: ENUMERATION_CAP.into() });
        }
        if self.contour_max < 2 {
            return Err(Error::OutOfRange { n: self.contour_max as u64, min: 2, max: u64::MAX });
        }
        if self.asymptotic_max < analysis::RATIO_CALIBRATION_RANGE.0 {
            let min = analysis::RATIO_CALIBRATION_RANGE.0 as u64;
            return Err(Error::OutOfRange { n: self.asymptotic_max as u64, min, max: u64::MAX });
        }
        for (n, min) in [
            (self.series_max, 1),
            (self.identity_order, 4),
            (self.recurrence_max, 4),
            (self.positivity_max, 3),
            (self.lattice_max, 5),
        ] {
            if n < min {
                return Err(Error::OutOfRange { n: n as u64, min: min as u64, max: u64::MAX });
            }
        }
        Ok(())
    }
}

/// Maps each verified result to the check that covers it. The coverage
/// test runs every suite and insists that each id here was exercised.
pub const COVERAGE: &[(&str, &str)] = &[
    ("game rules: scoring by overlapping HH and HT", "dp.enumeration_equivalence"),
    ("conditional score recurrences", "dp.mass_conservation"),
    ("Δ1 = Δ2 = 0 and Δn > 0 (small n)", "dp.sign_pattern"),
    ("contour-integral formula for Δn", "contour.vs_exact"),
    ("contour independence from the circle", "contour.radius_invariance"),
    ("closed-form generating function", "series.closed_form_vs_dp"),
    ("log-derivative identity", "series.log_derivative_identity"),
    ("h(t) coefficients 2Re(φ^n) + 2^n", "series.h_closed_form"),
    ("|2Re(φ^n)| <= 2·2^(n/2)", "series.phi_bound"),
    ("h(t) has positive coefficients", "series.h_positivity"),
    ("f(t) coefficients positive from n = 3", "series.positivity"),
    ("2·f̃ has integer coefficients", "series.doubled_f_tilde_integral"),
    ("first-order ODE for f̃", "series.ode_identity"),
    ("colored path count recurrence", "lattice.first_values"),
    ("diagonal count N(n,n) = 2^(n+1)Δn + 1", "lattice.diagonal_identity"),
    ("diagonal closed form via (f, g, h) decomposition", "lattice.stanley_diagonal"),
    ("alternate step set has the same diagonal", "lattice.alternate_step_set"),
    ("integer recurrence agrees with DP and series", "recurrence.triple_pipeline"),
    ("recurrence division by n is exact", "recurrence.exact_division"),
    ("Δn > 0 for 3 <= n <= 10^4", "recurrence.positivity"),
    ("float recurrence fidelity", "recurrence.float_fidelity"),
    ("leading asymptotic term", "asymptotics.ratio_bound"),
    ("O(n^(-3/2)) remainder", "asymptotics.scaled_error"),
];

/// Runs one suite.
pub fn run_suite(suite: Suite, bounds: &Bounds) -> VerificationReport {
    let start = Instant::now();
    let fragments = match suite {
        Suite::Dp => dp_suite(bounds),
        Suite::Series => series_suite(bounds),
        Suite::Recurrence => recurrence_suite(bounds),
        Suite::Lattice => lattice_suite(bounds),
        Suite::Contour => contour_suite(bounds),
        Suite::Asymptotics => asymptotics_suite(bounds),
    };
    VerificationReport::from_fragments(suite.name(), fragments, start.elapsed())
}

/// Runs several suites on separate threads; reports come back sorted by
/// suite name whatever order they finish in.
pub fn run_suites(suites: &[Suite], bounds: &Bounds) -> Vec<VerificationReport> {
    let mut reports: Vec<VerificationReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|&s| scope.spawn(move || run_suite(s, bounds))).collect();
        handles.into_iter().map(|h| h.join().expect("suite panicked")).collect()
    });
    reports.sort_by(|a, b| a.suite.cmp(&b.suite));
    reports
}

fn dp_suite(b: &Bounds) -> Vec<Fragment> {
    let mut equiv = Fragment::new("dp.enumeration_equivalence");
    let mut mass = Fragment::new("dp.mass_conservation");
    let mut sign = Fragment::new("dp.sign_pattern");
    let max = b.dp_max.min(ENUMERATION_CAP);
    let mut deltas = vec![integer(0)];
    for d in Distributions::new().take(max as usize) {
        let n = d.n();
        let dp = d.outcome();
        match exactdp::enumerate_exhaustive(n) {
            Ok(brute) => {
                let show = |o: &exactdp::GameOutcome| format!("{}/{}/{}", o.p_bob, o.p_alice, o.p_tie);
                equiv.record(dp == brute, format_args!("n={n}"), || (show(&brute), show(&dp)));
            }
            Err(e) => equiv.record(false, format_args!("n={n}"), || ("enumeration", e.to_string())),
        }
        let bound = i64::from(n) - 1;
        let in_support = d.support().is_some_and(|(lo, hi)| lo >= -bound && hi <= bound);
        mass.record(in_support, format_args!("support n={n}"), || (format!("within ±{bound}"), format!("{:?}", d.support())));
        mass.expect_eq(format_args!("mass n={n}"), &integer(1), &d.total_mass());
        deltas.push(dp.delta);
    }
    series::delta_sign_scan(&mut sign, &deltas);
    vec![equiv, mass, sign]
}

fn series_suite(b: &Bounds) -> Vec<Fragment> {
    let order = b.identity_order;
    let mut closed = Fragment::new("series.closed_form_vs_dp");
    let gf = series::delta_from_closed_form(b.series_max);
    for (n, dp) in (1..=b.series_max).zip(exactdp::outcomes_up_to(b.series_max as u32)) {
        closed.expect_eq(format_args!("n={n}"), &dp.delta, &gf[n]);
    }

    let mut sqrt = Fragment::new("series.sqrt_inv_self_check");
    let disc = TruncatedSeries::polynomial(&DISCRIMINANT, order);
    let s = disc.sqrt_inv().expect("unit constant term");
    let back = &(&s * &s) * &disc;
    for (k, c) in back.coeffs().iter().enumerate() {
        let expected = if k == 0 { integer(1) } else { integer(0) };
        sqrt.expect_eq(format_args!("[t^{k}] s²·disc"), &expected, c);
    }

    let mut h_closed = Fragment::new("series.h_closed_form");
    for (n, (h, c)) in series::h_coefficients(order).iter().zip(series::h_closed_form(order)).enumerate() {
        h_closed.expect_eq(format_args!("h_{n}"), h, &crate::Rational::from_integer(c));
    }

    let mut phi = Fragment::new("series.phi_bound");
    for (n, r) in PhiRecurrence::new(order).values().iter().enumerate() {
        phi.record(series::phi_bound_holds(n, r), format_args!("r_{n}"), || ("|r_n| <= 2·2^(n/2)", r.to_string()));
    }

    let mut log_id = Fragment::new("series.log_derivative_identity");
    log_id.record(series::log_derivative_identity_check(order), format_args!("order {order}"), || ("holds", "fails"));
    let mut ode = Fragment::new("series.ode_identity");
    ode.record(series::ode_identity_check(order), format_args!("order {order}"), || ("holds", "fails"));
    let mut integral = Fragment::new("series.doubled_f_tilde_integral");
    integral.record(series::doubled_f_tilde_is_integral(order), format_args!("order {order}"), || {
        ("integers", "non-integer coefficient")
    });

    vec![
        closed,
        sqrt,
        h_closed,
        phi,
        series::h_positivity_scan(b.h_scan_max),
        series::positivity_scan(order),
        log_id,
        ode,
        integral,
    ]
}

fn recurrence_suite(b: &Bounds) -> Vec<Fragment> {
    let max = b.recurrence_max;
    let mut triple = Fragment::new("recurrence.triple_pipeline");
    let exact = recurrence::deltas_exact(max);
    let gf = series::delta_from_closed_form(max);
    match &exact {
        Ok(rec) => {
            for (n, dp) in (1..=max).zip(exactdp::outcomes_up_to(max as u32)) {
                let ok = dp.delta == gf[n] && dp.delta == rec[n];
                triple.record(ok, format_args!("n={n}"), || {
                    (dp.delta.to_string(), format!("series {} / recurrence {}", gf[n], rec[n]))
                });
            }
        }
        Err(e) => triple.record(false, "recurrence", || ("exact sequence", e.to_string())),
    }

    let mut fidelity = Fragment::new("recurrence.float_fidelity");
    if let Ok(rec) = &exact {
        for (n, f) in FloatDeltas::new().enumerate().take(max + 1).skip(4) {
            let x = to_f64(&rec[n]);
            let rel = ((f - x) / x).abs();
            fidelity.record(rel <= FLOAT_TOLERANCE, format_args!("n={n}"), || (format!("rel err <= {FLOAT_TOLERANCE:e}"), rel));
        }
    }

    // Integrality, sign and monotonicity scans over the long range.
    let scan_max = b.positivity_max.max(max);
    let mut division = Fragment::new("recurrence.exact_division");
    let mut positivity = Fragment::new("recurrence.positivity");
    let mut monotone = Fragment::new("recurrence.monotone_scan");
    let mut prev: Option<BigInt> = None;
    let one = BigInt::one();
    for ((n, term), f) in ETerms::new().enumerate().take(scan_max + 1).zip(FloatDeltas::new()) {
        let e = match term {
            Ok(e) => e,
            Err(err) => {
                division.record(false, format_args!("n={n}"), || ("exact", err.to_string()));
                break;
            }
        };
        division.checks_run += 1;
        if n >= 1 {
            // Δn = 0 iff e_n = 1, Δn > 0 iff e_n > 1.
            let ok = if n <= 2 { e == one } else { e > one };
            positivity.record(ok, format_args!("exact n={n}"), || (if n <= 2 { "e_n = 1" } else { "e_n > 1" }, e.to_string()));
        }
        if n >= 3 {
            positivity.record(f > 0.0, format_args!("float n={n}"), || ("> 0", f));
        }
        if let Some(p) = prev.filter(|_| n >= 4) {
            monotone.record(e >= p, format_args!("n={n}"), || (format!(">= {p}"), e.to_string()));
        }
        prev = Some(e);
    }
    vec![triple, fidelity, division, positivity, monotone]
}

fn lattice_suite(b: &Bounds) -> Vec<Fragment> {
    let max = b.lattice_max;
    let spec = LatticeSpec::delta_instance();
    let diag = lattice::diagonal(&spec, max);

    let mut first = Fragment::new("lattice.first_values");
    for (n, (got, want)) in diag.iter().zip([1u32, 1, 1, 3, 5, 7]).enumerate() {
        first.expect_eq(format_args!("N({n},{n})"), &num_bigint::BigUint::from(want), got);
    }

    let mut stanley = Fragment::new("lattice.stanley_diagonal");
    let order = b.identity_order.max(max);
    stanley.record(lattice::stanley_diagonal_check(order), format_args!("order {order}"), || ("holds", "fails"));

    let mut alternate = Fragment::new("lattice.alternate_step_set");
    let alt = lattice::diagonal(&LatticeSpec::alternate_instance(), max);
    for (n, (a, d)) in alt.iter().zip(&diag).enumerate() {
        alternate.expect_eq(format_args!("N({n},{n})"), d, a);
    }

    vec![first, lattice::diagonal_identity_check(max), stanley, alternate]
}

fn contour_suite(b: &Bounds) -> Vec<Fragment> {
    let exact = recurrence::deltas_exact(b.contour_max.max(INVARIANCE_MAX_N)).expect("recurrence is exact");
    let mut agree = Fragment::new("contour.vs_exact");
    for (n, d) in exact.iter().enumerate().take(b.contour_max + 1).skip(2) {
        let x = to_f64(d);
        match analysis::contour_delta(n, &b.contour) {
            Ok(c) => agree.record((c - x).abs() <= CONTOUR_TOLERANCE, format_args!("n={n}"), || (x, c)),
            Err(e) => agree.record(false, format_args!("n={n}"), || (x.to_string(), e.to_string())),
        }
    }

    let mut invariance = Fragment::new("contour.radius_invariance");
    for n in 2..=INVARIANCE_MAX_N {
        let reference = analysis::contour_delta(n, &b.contour);
        for r in INVARIANCE_RADII {
            let cfg = ContourConfig::new(r, b.contour.points()).expect("radius in (0, 1)");
            let value = analysis::contour_delta(n, &cfg);
            match (&reference, value) {
                (Ok(x), Ok(y)) => {
                    invariance.record((x - y).abs() <= CONTOUR_TOLERANCE, format_args!("n={n} r={r}"), || (*x, y))
                }
                (x, y) => invariance.record(false, format_args!("n={n} r={r}"), || (format!("{x:?}"), format!("{y:?}"))),
            }
        }
    }
    vec![agree, invariance]
}

fn asymptotics_suite(b: &Bounds) -> Vec<Fragment> {
    let ns: Vec<usize> = (analysis::RATIO_CALIBRATION_RANGE.0..=b.asymptotic_max).collect();
    let mut ratio = Fragment::new("asymptotics.ratio_bound");
    let mut scaled = Fragment::new("asymptotics.scaled_error");
    match analysis::asymptotic_table(&ns) {
        Ok(records) => {
            for rec in records {
                let err = rec.scaled_ratio_error();
                ratio.record(err <= RATIO_ERROR_CONSTANT, format_args!("n={}", rec.n), || {
                    (format!("n|ratio-1| <= {RATIO_ERROR_CONSTANT}"), err)
                });
                scaled.record(rec.scaled_err <= SCALED_ERROR_BOUND, format_args!("n={}", rec.n), || {
                    (format!("<= {SCALED_ERROR_BOUND}"), rec.scaled_err)
                });
            }
        }
        Err(e) => ratio.record(false, "table", || ("records", e.to_string())),
    }
    vec![ratio, scaled]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Bounds {
        Bounds {
            dp_max: 10,
            series_max: 30,
            identity_order: 16,
            h_scan_max: 500,
            recurrence_max: 60,
            positivity_max: 300,
            lattice_max: 20,
            contour_max: 12,
            contour: ContourConfig::default(),
            asymptotic_max: 300,
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!(matches!("bogus".parse::<Suite>(), Err(Error::UnknownSuite(_))));
        let mut sorted = Suite::ALL.map(|s| s.name());
        sorted.sort();
        assert_eq!(sorted, Suite::ALL.map(|s| s.name()));
    }

    #[test]
    fn every_suite_passes_at_small_bounds() {
        let reports = run_suites(&Suite::ALL, &small());
        assert_eq!(reports.len(), 6);
        for r in &reports {
            assert!(r.passed, "{r}");
            assert!(r.checks_run > 0, "{}", r.suite);
        }
        let names: Vec<&str> = reports.iter().map(|r| r.suite.as_str()).collect();
        assert_eq!(names, vec!["asymptotics", "contour", "dp", "lattice", "recurrence", "series"]);
    }

    #[test]
    fn coverage_manifest_is_exercised() {
        let reports = run_suites(&Suite::ALL, &small());
        let ids: Vec<&str> = reports.iter().flat_map(|r| r.check_ids.iter().map(String::as_str)).collect();
        for (item, id) in COVERAGE {
            assert!(ids.contains(id), "no check {id} for {item}");
        }
    }

    #[test]
    fn bounds_validation() {
        assert!(Bounds::default().validate().is_ok());
        assert!(Bounds::default().with_max_n(Suite::Dp, 25).validate().is_err());
        assert!(Bounds::default().with_max_n(Suite::Contour, 1).validate().is_err());
        assert!(Bounds::default().with_max_n(Suite::Asymptotics, 50).validate().is_err());
        assert_eq!(Bounds::default().with_max_n(Suite::Lattice, 33).lattice_max, 33);
    }
}

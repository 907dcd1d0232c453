//! Colored lattice paths and their diagonal.
//!
//! A step set `S` of non-negative integer vectors (never `(0, 0)`) comes with
//! a color count `c_s >= 1` per step. `N(a, b)` counts colored step
//! sequences ending at `(a, b)`. Splitting off the last step gives
//!
//! ```text
//! N(a, b) = [a = b = 0] + Σ_(i,j)∈S c_(i,j) N(a - i, b - j)
//! ```
//!
//! with `N = 0` outside the quadrant.
//!
//! For `S = {(6,5), (0,1), (1,1), (3,3)}` with two colors on `(3,3)` the
//! diagonal counts are `N(n, n) = 2^(n+1) Δn + 1`, which makes `Δn >= 0`
//! evident and `Δn > 0` as soon as more than one path reaches `(n, n)`.
//!
//! When every step has `|i - j| <= 1` the step polynomial can be written as
//! `x f(xy) + y g(xy) + h(xy)`, and with `h(0) = 0` the diagonal generating
//! function is `1 / sqrt((1 - h(t))² - 4t f(t) g(t))`. [`StanleyTriple`]
//! checks that closed form against the grid.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::rational::pow2;
use crate::recurrence;
use crate::report::Fragment;
use crate::series::{TruncatedSeries, DISCRIMINANT};
use crate::{Error, Rational, Result};

/// Diagonals longer than this are computed with a sliding window of rows.
pub const WINDOW_THRESHOLD: usize = 512;

pub type Step = (u32, u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSpec {
    steps: BTreeMap<Step, u32>,
}

impl LatticeSpec {
    pub fn new(steps: impl IntoIterator<Item = (Step, u32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (step, colors) in steps {
            if step == (0, 0) {
                return Err(Error::InvalidLattice("(0, 0) is not a step".into()));
            }
            if colors == 0 {
                return Err(Error::InvalidLattice(format!("step {step:?} needs at least one color")));
            }
            if map.insert(step, colors).is_some() {
                return Err(Error::InvalidLattice(format!("step {step:?} listed twice")));
            }
        }
        Ok(LatticeSpec { steps: map })
    }

    /// `{(6,5), (0,1), (1,1), (3,3)}`, two colors on `(3,3)`.
    pub fn delta_instance() -> Self {
        Self::new([((6, 5), 1), ((0, 1), 1), ((1, 1), 1), ((3, 3), 2)]).expect("valid")
    }

    /// `{(5,4), (1,2), (1,1), (3,3)}`, two colors on `(3,3)`. A different
    /// step set with the same diagonal.
    pub fn alternate_instance() -> Self {
        Self::new([((5, 4), 1), ((1, 2), 1), ((1, 1), 1), ((3, 3), 2)]).expect("valid")
    }

    pub fn steps(&self) -> impl Iterator<Item = (Step, u32)> + '_ {
        self.steps.iter().map(|(&s, &c)| (s, c))
    }

    pub fn colors(&self, step: Step) -> Option<u32> {
        self.steps.get(&step).copied()
    }

    /// The same spec with one step removed.
    pub fn without(&self, step: Step) -> Self {
        let mut steps = self.steps.clone();
        steps.remove(&step);
        LatticeSpec { steps }
    }

    fn max_x(&self) -> usize {
        self.steps.keys().map(|&(i, _)| i as usize).max().unwrap_or(0)
    }
}

/// `N(a, b)` for `0 <= a <= A`, `0 <= b <= B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCountGrid {
    a_max: usize,
    b_max: usize,
    counts: Vec<BigUint>,
}

impl PathCountGrid {
    pub fn bounds(&self) -> (usize, usize) {
        (self.a_max, self.b_max)
    }

    /// `N(a, b)`, zero outside the quadrant. Panics beyond the bounds.
    pub fn count(&self, a: i64, b: i64) -> BigUint {
        if a < 0 || b < 0 {
            return BigUint::zero();
        }
        let (a, b) = (a as usize, b as usize);
        assert!(a <= self.a_max && b <= self.b_max, "({a}, {b}) is outside the grid");
        self.counts[a * (self.b_max + 1) + b].clone()
    }
}

/// Fills the grid row by row (`a` ascending, `b` ascending within a row),
/// keeping only the rows a step can reach back to, and hands every finished
/// row to `emit`.
fn sweep(spec: &LatticeSpec, a_max: usize, b_max: usize, mut emit: impl FnMut(usize, &[BigUint])) {
    let depth = spec.max_x() + 1;
    let width = b_max + 1;
    let mut ring: Vec<Vec<BigUint>> = vec![vec![BigUint::zero(); width]; depth];
    let steps: Vec<(usize, usize, u32)> = spec.steps().map(|((i, j), c)| (i as usize, j as usize, c)).collect();
    for a in 0..=a_max {
        let mut row: Vec<BigUint> = Vec::with_capacity(width);
        for b in 0..width {
            let mut v = if a == 0 && b == 0 { BigUint::one() } else { BigUint::zero() };
            for &(i, j, c) in &steps {
                if i > a || j > b {
                    continue;
                }
                let src = if i == 0 { &row[b - j] } else { &ring[(a - i) % depth][b - j] };
                if src.is_zero() {
                    continue;
                }
                if c == 1 {
                    v += src;
                } else {
                    v += src * c;
                }
            }
            row.push(v);
        }
        emit(a, &row);
        ring[a % depth] = row;
    }
}

pub fn count_paths(spec: &LatticeSpec, a_max: usize, b_max: usize) -> PathCountGrid {
    let mut counts = Vec::with_capacity((a_max + 1) * (b_max + 1));
    sweep(spec, a_max, b_max, |_, row| counts.extend_from_slice(row));
    PathCountGrid { a_max, b_max, counts }
}

/// `N(n, n)` for `n = 0..=N`: from the full grid up to
/// [`WINDOW_THRESHOLD`], with a sliding window of rows beyond.
pub fn diagonal(spec: &LatticeSpec, order: usize) -> Vec<BigUint> {
    if order <= WINDOW_THRESHOLD {
        let grid = count_paths(spec, order, order);
        (0..=order as i64).map(|n| grid.count(n, n)).collect()
    } else {
        diagonal_windowed(spec, order)
    }
}

/// [`diagonal`] in `O(N)` memory regardless of `N`.
pub fn diagonal_windowed(spec: &LatticeSpec, order: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(order + 1);
    sweep(spec, order, order, |a, row| out.push(row[a].clone()));
    out
}

/// Polynomials `f, g, h` (lowest degree first) with `h(0) = 0`, standing for
/// the bivariate step polynomial `x f(xy) + y g(xy) + h(xy)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StanleyTriple {
    f: Vec<i64>,
    g: Vec<i64>,
    h: Vec<i64>,
}

impl StanleyTriple {
    pub fn new(f: Vec<i64>, g: Vec<i64>, h: Vec<i64>) -> Result<Self> {
        if h.first().copied().unwrap_or(0) != 0 {
            return Err(Error::InvalidDecomposition("h must vanish at 0".into()));
        }
        Ok(StanleyTriple { f, g, h })
    }

    /// `f = t⁵`, `g = 1`, `h = 2t³ + t`, matching [`LatticeSpec::delta_instance`].
    pub fn delta_instance() -> Self {
        Self::new(vec![0, 0, 0, 0, 0, 1], vec![1], vec![0, 1, 0, 2]).expect("h(0) = 0")
    }

    /// `f = t⁴`, `g = t`, `h = 2t³ + t`, matching [`LatticeSpec::alternate_instance`].
    pub fn alternate_instance() -> Self {
        Self::new(vec![0, 0, 0, 0, 1], vec![0, 1], vec![0, 1, 0, 2]).expect("h(0) = 0")
    }

    /// Whether `x f(xy) + y g(xy) + h(xy)` is exactly the step polynomial of `spec`.
    pub fn represents(&self, spec: &LatticeSpec) -> bool {
        let mut poly: BTreeMap<Step, i64> = BTreeMap::new();
        let mut put = |coeffs: &[i64], dx: u32, dy: u32| {
            for (m, &c) in coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
                let m = m as u32;
                *poly.entry((m + dx, m + dy)).or_default() += c;
            }
        };
        put(&self.f, 1, 0);
        put(&self.g, 0, 1);
        put(&self.h, 0, 0);
        poly.retain(|_, c| *c != 0);
        let expected: BTreeMap<Step, i64> = spec.steps().map(|(s, c)| (s, i64::from(c))).collect();
        poly == expected
    }

    /// `(1 - h)² - 4t f g`, which has constant term one.
    pub fn radicand(&self, order: usize) -> TruncatedSeries {
        let one_minus_h = &TruncatedSeries::one(order) - &TruncatedSeries::polynomial(&self.h, order);
        let fg = &TruncatedSeries::polynomial(&self.f, order) * &TruncatedSeries::polynomial(&self.g, order);
        let four_t_fg = fg.scale(&Rational::from_integer(4.into())).shift(1).truncate(order);
        &(&one_minus_h * &one_minus_h) - &four_t_fg
    }

    /// `1 / sqrt((1 - h)² - 4t f g)` to the given order.
    pub fn diagonal_series(&self, order: usize) -> TruncatedSeries {
        self.radicand(order).sqrt_inv().expect("h(0) = 0 makes the constant term one")
    }
}

/// The closed-form diagonal for `triple` equals the grid diagonal of `spec`
/// through `order`.
pub fn stanley_diagonal_holds(triple: &StanleyTriple, spec: &LatticeSpec, order: usize) -> bool {
    let series = triple.diagonal_series(order);
    let grid = diagonal(spec, order);
    series.coeffs().iter().zip(&grid).all(|(s, g)| *s == Rational::from_integer(g.clone().into()))
}

/// For the delta instance: the triple matches the step set, the closed form
/// matches the grid diagonal, and the radicand simplifies to
/// `4t⁴ - 4t³ + t² - 2t + 1`.
pub fn stanley_diagonal_check(order: usize) -> bool {
    let triple = StanleyTriple::delta_instance();
    triple.represents(&LatticeSpec::delta_instance())
        && triple.radicand(order) == TruncatedSeries::polynomial(&DISCRIMINANT, order)
        && stanley_diagonal_holds(&triple, &LatticeSpec::delta_instance(), order)
}

/// `N(n, n) = 2^(n+1) Δn + 1` for `0 <= n <= N`, `Δn` from the recurrence.
pub fn diagonal_identity_check(order: usize) -> Fragment {
    let mut frag = Fragment::new("lattice.diagonal_identity");
    let deltas = recurrence::deltas_exact(order).expect("recurrence is exact");
    let counts = diagonal(&LatticeSpec::delta_instance(), order);
    for (n, (count, delta)) in counts.iter().zip(&deltas).enumerate() {
        let rhs = delta * pow2(n as u64 + 1) + Rational::one();
        let lhs = Rational::from_integer(count.clone().into());
        frag.expect_eq(format_args!("n={n}"), &rhs, &lhs);
    }
    frag
}

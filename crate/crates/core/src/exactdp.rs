//! The game itself: exhaustive enumeration and the exact conditional DP.
//!
//! A fair coin is flipped `n` times. Every overlapping `HT` scores a point
//! for Bob and every overlapping `HH` a point for Alice. The score
//! difference is `Y = Alice - Bob`, so Bob wins on `Y < 0`.
//!
//! The DP tracks the distribution of `Y` split by the last flip:
//!
//! ```text
//! p(n, k, T) = ½ p(n-1, k, T) + ½ p(n-1, k+1, H)
//! p(n, k, H) = ½ p(n-1, k, T) + ½ p(n-1, k-1, H)
//! ```
//!
//! starting from point masses at zero for `n = 1`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::pow2;
use crate::{Error, Rational, Result};

/// Largest `n` accepted by [`enumerate_exhaustive`].
pub const ENUMERATION_CAP: u32 = 24;

/// Win/tie probabilities after `n` flips and the gap `delta = p_bob - p_alice`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameOutcome {
    pub n: u32,
    pub p_bob: Rational,
    pub p_alice: Rational,
    pub p_tie: Rational,
    pub delta: Rational,
}

impl GameOutcome {
    fn from_counts(n: u32, bob: BigInt, alice: BigInt, tie: BigInt, denom: BigInt) -> Self {
        let p_bob = Rational::new(bob, denom.clone());
        let p_alice = Rational::new(alice, denom.clone());
        let p_tie = Rational::new(tie, denom);
        let delta = &p_bob - &p_alice;
        GameOutcome { n, p_bob, p_alice, p_tie, delta }
    }
}

/// Brute force over all `2^n` flip sequences.
///
/// Independent of the DP: the scores are read straight off the bit pattern
/// of each sequence.
pub fn enumerate_exhaustive(n: u32) -> Result<GameOutcome> {
    if !(1..=ENUMERATION_CAP).contains(&n) {
        return Err(Error::OutOfRange { n: n.into(), min: 1, max: ENUMERATION_CAP.into() });
    }
    // Bit i is flip i, 1 = heads. Pair (i, i+1) lives in bit i of `seq & (seq >> 1)`.
    let pair_mask: u32 = (1u32 << (n - 1)) - 1;
    let (mut bob, mut alice, mut tie) = (0u64, 0u64, 0u64);
    for seq in 0u32..(1u32 << n) {
        let next = seq >> 1;
        let hh = (seq & next & pair_mask).count_ones();
        let ht = (seq & !next & pair_mask).count_ones();
        match ht.cmp(&hh) {
            std::cmp::Ordering::Greater => bob += 1,
            std::cmp::Ordering::Less => alice += 1,
            std::cmp::Ordering::Equal => tie += 1,
        }
    }
    Ok(GameOutcome::from_counts(n, bob.into(), alice.into(), tie.into(), pow2(n.into())))
}

/// Exact distribution of the score difference after `n` flips, split by
/// whether the last flip was tails or heads.
///
/// Masses are stored as non-negative integer weights over one shared
/// denominator, so a DP step is pure integer addition and a doubling of the
/// denominator. Only scores with non-zero mass are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreDistribution {
    n: u32,
    denom: BigUint,
    tails: BTreeMap<i64, BigUint>,
    heads: BTreeMap<i64, BigUint>,
}

impl ScoreDistribution {
    /// The `n = 1` base: both conditional distributions are a point mass at 0.
    pub fn initial() -> Self {
        let point = BTreeMap::from([(0, BigUint::one())]);
        ScoreDistribution { n: 1, denom: BigUint::one(), tails: point.clone(), heads: point }
    }

    /// Builds a distribution from explicit conditional masses.
    ///
    /// Requires `n >= 1`, non-negative masses, `|k| <= n - 1` and
    /// `sum_k (tails[k] + heads[k]) / 2 == 1`.
    pub fn from_probabilities(
        n: u32,
        tails: &BTreeMap<i64, Rational>,
        heads: &BTreeMap<i64, Rational>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange { n: 0, min: 1, max: u32::MAX.into() });
        }
        let bound = i64::from(n) - 1;
        let mut denom = BigInt::one();
        for (k, p) in tails.iter().chain(heads) {
            if k.abs() > bound {
                return Err(Error::InvalidDistribution(format!(
                    "score {k} is unreachable after {n} flips"
                )));
            }
            if p.is_negative() {
                return Err(Error::InvalidDistribution(format!("negative mass {p} at score {k}")));
            }
            denom = denom.lcm(p.denom());
        }
        let total: Rational = tails.values().chain(heads.values()).sum();
        if total != Rational::from_integer(BigInt::from(2)) {
            return Err(Error::InvalidDistribution(format!(
                "conditional masses average to {} instead of 1",
                total / BigInt::from(2)
            )));
        }
        let scale = |m: &BTreeMap<i64, Rational>| -> BTreeMap<i64, BigUint> {
            m.iter()
                .filter(|(_, p)| !p.is_zero())
                .map(|(&k, p)| {
                    let w = p.numer() * (&denom / p.denom());
                    (k, w.to_biguint().expect("checked non-negative"))
                })
                .collect()
        };
        let (tails, heads) = (scale(tails), scale(heads));
        Ok(ScoreDistribution { n, denom: denom.to_biguint().expect("positive"), tails, heads })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `P(Y = k | last flip tails)`.
    pub fn prob_tails(&self, k: i64) -> Rational {
        self.prob(&self.tails, k)
    }

    /// `P(Y = k | last flip heads)`.
    pub fn prob_heads(&self, k: i64) -> Rational {
        self.prob(&self.heads, k)
    }

    pub fn probs_tails(&self) -> BTreeMap<i64, Rational> {
        self.tails.keys().map(|&k| (k, self.prob_tails(k))).collect()
    }

    pub fn probs_heads(&self) -> BTreeMap<i64, Rational> {
        self.heads.keys().map(|&k| (k, self.prob_heads(k))).collect()
    }

    /// Unconditional `P(Y = k)`, the average of the two conditional parts.
    pub fn marginal(&self) -> BTreeMap<i64, Rational> {
        let denom = BigInt::from(&self.denom * 2u32);
        self.marginal_weights()
            .into_iter()
            .map(|(k, w)| (k, Rational::new(w.into(), denom.clone())))
            .collect()
    }

    /// `sum_k (tails[k] + heads[k]) / 2`; exactly one for a valid distribution.
    pub fn total_mass(&self) -> Rational {
        let w: BigUint = self.tails.values().chain(self.heads.values()).sum();
        Rational::new(w.into(), BigInt::from(&self.denom * 2u32))
    }

    /// Smallest and largest score with non-zero mass.
    pub fn support(&self) -> Option<(i64, i64)> {
        let lo = self.tails.keys().chain(self.heads.keys()).min()?;
        let hi = self.tails.keys().chain(self.heads.keys()).max()?;
        Some((*lo, *hi))
    }

    /// One DP step: the distribution after one more flip.
    pub fn step(&self) -> ScoreDistribution {
        let mut tails: BTreeMap<i64, BigUint> = BTreeMap::new();
        let mut heads: BTreeMap<i64, BigUint> = BTreeMap::new();
        // Next flip T: a T -> T transition scores nothing, H -> T is an HT for Bob.
        // Next flip H: T -> H scores nothing, H -> H is an HH for Alice.
        for (&k, w) in &self.tails {
            *tails.entry(k).or_default() += w;
            *heads.entry(k).or_default() += w;
        }
        for (&k, w) in &self.heads {
            *tails.entry(k - 1).or_default() += w;
            *heads.entry(k + 1).or_default() += w;
        }
        ScoreDistribution { n: self.n + 1, denom: &self.denom * 2u32, tails, heads }
    }

    /// Marginalizes and sums the mass below, at and above zero.
    pub fn outcome(&self) -> GameOutcome {
        let (mut bob, mut tie, mut alice) = (BigUint::zero(), BigUint::zero(), BigUint::zero());
        for (k, w) in self.marginal_weights() {
            match k.signum() {
                -1 => bob += w,
                0 => tie += w,
                _ => alice += w,
            }
        }
        let denom = BigInt::from(&self.denom * 2u32);
        GameOutcome::from_counts(self.n, bob.into(), alice.into(), tie.into(), denom)
    }

    fn prob(&self, part: &BTreeMap<i64, BigUint>, k: i64) -> Rational {
        match part.get(&k) {
            Some(w) => Rational::new(w.clone().into(), self.denom.clone().into()),
            None => Rational::zero(),
        }
    }

    fn marginal_weights(&self) -> BTreeMap<i64, BigUint> {
        let mut out = self.tails.clone();
        for (&k, w) in &self.heads {
            *out.entry(k).or_default() += w;
        }
        out
    }
}

pub fn dp_step(d: &ScoreDistribution) -> ScoreDistribution {
    d.step()
}

/// The distribution after `n` flips, by `n - 1` DP steps from the base.
pub fn distribution(n: u32) -> Result<ScoreDistribution> {
    if n == 0 {
        return Err(Error::OutOfRange { n: 0, min: 1, max: u32::MAX.into() });
    }
    Ok(Distributions::new().nth(n as usize - 1).expect("unbounded iterator"))
}

pub fn outcome(n: u32) -> Result<GameOutcome> {
    distribution(n).map(|d| d.outcome())
}

/// Outcomes for `n = 1..=max_n` from a single DP sweep.
pub fn outcomes_up_to(max_n: u32) -> Vec<GameOutcome> {
    Distributions::new().take(max_n as usize).map(|d| d.outcome()).collect()
}

/// Unbounded iterator over the distributions for `n = 1, 2, 3, ...`.
#[derive(Debug, Clone)]
pub struct Distributions {
    current: ScoreDistribution,
}

impl Distributions {
    pub fn new() -> Self {
        Distributions { current: ScoreDistribution::initial() }
    }
}

impl Default for Distributions {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Distributions {
    type Item = ScoreDistribution;

    fn next(&mut self) -> Option<ScoreDistribution> {
        let next = self.current.step();
        Some(std::mem::replace(&mut self.current, next))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, ratio};

    fn map(entries: &[(i64, Rational)]) -> BTreeMap<i64, Rational> {
        entries.iter().cloned().collect()
    }

    #[test]
    fn enumeration_small_cases() {
        let one = enumerate_exhaustive(1).unwrap();
        assert_eq!(one.p_tie, integer(1));
        assert_eq!(one.delta, integer(0));

        let three = enumerate_exhaustive(3).unwrap();
        assert_eq!(three.p_bob, ratio(3, 8));
        assert_eq!(three.p_alice, ratio(2, 8));
        assert_eq!(three.p_tie, ratio(3, 8));
        assert_eq!(three.delta, ratio(1, 8));

        let four = enumerate_exhaustive(4).unwrap();
        assert_eq!(four.p_bob, ratio(6, 16));
        assert_eq!(four.p_alice, ratio(4, 16));
        assert_eq!(four.delta, ratio(1, 8));
    }

    #[test]
    fn enumeration_rejects_out_of_range() {
        assert!(matches!(enumerate_exhaustive(0), Err(Error::OutOfRange { .. })));
        assert!(matches!(enumerate_exhaustive(25), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn first_step_splits_by_last_flip() {
        let two = dp_step(&ScoreDistribution::initial());
        assert_eq!(two.n(), 2);
        assert_eq!(two.probs_tails(), map(&[(-1, ratio(1, 2)), (0, ratio(1, 2))]));
        assert_eq!(two.probs_heads(), map(&[(0, ratio(1, 2)), (1, ratio(1, 2))]));
        assert_eq!(two.marginal(), map(&[(-1, ratio(1, 4)), (0, ratio(1, 2)), (1, ratio(1, 4))]));
    }

    #[test]
    fn three_steps_give_delta_at_four() {
        let mut d = ScoreDistribution::initial();
        for _ in 0..3 {
            d = dp_step(&d);
        }
        assert_eq!(d.outcome().delta, ratio(1, 8));
    }

    #[test]
    fn base_case() {
        let d = distribution(1).unwrap();
        assert_eq!(d.probs_tails(), map(&[(0, integer(1))]));
        assert_eq!(d.probs_heads(), map(&[(0, integer(1))]));
        assert!(distribution(0).is_err());
    }

    #[test]
    fn outcome_matches_hand_values() {
        assert_eq!(outcome(2).unwrap().delta, integer(0));
        assert_eq!(outcome(3).unwrap().delta, ratio(1, 8));
        assert_eq!(outcome(5).unwrap().delta, ratio(3, 32));
        // Brute-force values from an independent enumeration.
        let ten = outcome(10).unwrap();
        assert_eq!(ten.p_bob, ratio(29, 64));
        assert_eq!(ten.p_alice, ratio(371, 1024));
        assert_eq!(ten.p_tie, ratio(189, 1024));
        assert_eq!(outcome(12).unwrap().delta, ratio(329, 4096));
    }

    #[test]
    fn dp_matches_enumeration_to_sixteen() {
        for (n, dp) in (1..=16).zip(outcomes_up_to(16)) {
            assert_eq!(dp, enumerate_exhaustive(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn mass_and_support_invariants() {
        for d in Distributions::new().take(40) {
            let n = i64::from(d.n());
            assert_eq!(d.total_mass(), integer(1));
            let (lo, hi) = d.support().unwrap();
            assert!(lo > -n && hi < n);
            let o = d.outcome();
            assert_eq!(&o.p_bob + &o.p_alice + &o.p_tie, integer(1));
        }
    }

    #[test]
    fn from_probabilities_validates() {
        let half = map(&[(0, ratio(1, 2)), (-1, ratio(1, 2))]);
        let ok = ScoreDistribution::from_probabilities(2, &half, &map(&[(0, ratio(1, 2)), (1, ratio(1, 2))]));
        assert_eq!(ok.unwrap(), distribution(2).unwrap());

        let far = map(&[(3, integer(1))]);
        assert!(ScoreDistribution::from_probabilities(2, &far, &far).is_err());
        let neg = map(&[(0, ratio(-1, 2)), (1, ratio(3, 2))]);
        assert!(ScoreDistribution::from_probabilities(3, &neg, &half).is_err());
        let light = map(&[(0, ratio(1, 3))]);
        assert!(ScoreDistribution::from_probabilities(3, &light, &light).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        // Random valid distributions: positive integer weights over a random
        // support, normalized so the two conditional parts average to one.
        fn arb_distribution() -> impl Strategy<Value = ScoreDistribution> {
            (1u32..12).prop_flat_map(|n| {
                let span = 2 * n as usize - 1;
                (
                    Just(n),
                    prop::collection::vec(0u32..50, span),
                    prop::collection::vec(0u32..50, span),
                )
                    .prop_filter("non-zero mass", |(_, t, h)| t.iter().chain(h).any(|&w| w > 0))
                    .prop_map(|(n, t, h)| {
                        let total: u32 = t.iter().chain(&h).sum();
                        let off = i64::from(n) - 1;
                        let to_map = |ws: &[u32]| -> BTreeMap<i64, Rational> {
                            ws.iter()
                                .enumerate()
                                .map(|(i, &w)| (i as i64 - off, ratio(2 * i64::from(w), total.into())))
                                .collect()
                        };
                        ScoreDistribution::from_probabilities(n, &to_map(&t), &to_map(&h)).unwrap()
                    })
            })
        }

        proptest! {
            #[test]
            fn step_preserves_total_mass(d in arb_distribution()) {
                let next = dp_step(&d);
                prop_assert_eq!(next.total_mass(), integer(1));
                prop_assert_eq!(next.n(), d.n() + 1);
            }

            #[test]
            fn step_widens_support_by_at_most_one(d in arb_distribution()) {
                let (lo, hi) = d.support().unwrap();
                let (nlo, nhi) = dp_step(&d).support().unwrap();
                prop_assert!(nlo >= lo - 1 && nhi <= hi + 1);
            }
        }
    }
}

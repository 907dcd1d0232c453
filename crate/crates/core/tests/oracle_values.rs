//! Values computed independently (brute force over all flip sequences and
//! exact series expansion in a separate tool) and frozen here.

use hhht::analysis::asymptotic_table;
use hhht::exactdp::{self, distribution, enumerate_exhaustive};
use hhht::lattice::{diagonal, LatticeSpec};
use hhht::rational::{integer, ratio};
use hhht::recurrence::{delta_exact, e_sequence};
use hhht::series::h_closed_form;

#[test]
fn game_outcomes() {
    let o = enumerate_exhaustive(1).unwrap();
    assert_eq!((o.p_bob, o.p_alice, o.p_tie, o.delta), (integer(0), integer(0), integer(1), integer(0)));

    let o = enumerate_exhaustive(3).unwrap();
    assert_eq!((o.p_bob, o.p_alice, o.p_tie, o.delta), (ratio(3, 8), ratio(2, 8), ratio(3, 8), ratio(1, 8)));

    let o = enumerate_exhaustive(4).unwrap();
    assert_eq!((o.p_bob, o.p_alice, o.delta), (ratio(6, 16), ratio(4, 16), ratio(1, 8)));

    let o = exactdp::outcome(10).unwrap();
    assert_eq!((o.p_bob, o.p_alice, o.p_tie), (ratio(29, 64), ratio(371, 1024), ratio(189, 1024)));
    assert_eq!(o.delta, ratio(93, 1024));
    assert!(enumerate_exhaustive(25).is_err());
}

#[test]
fn deltas() {
    for (n, p, q) in [(2, 0, 1), (3, 1, 8), (5, 3, 32), (10, 93, 1024), (11, 43, 512), (12, 329, 4096)] {
        assert_eq!(delta_exact(n).unwrap(), ratio(p, q), "n = {n}");
        assert_eq!(exactdp::outcome(n as u32).unwrap().delta, ratio(p, q), "n = {n}");
    }
}

#[test]
fn conditional_parts_at_two() {
    let d = distribution(2).unwrap();
    assert_eq!(d.prob_tails(0), ratio(1, 2));
    assert_eq!(d.prob_tails(-1), ratio(1, 2));
    assert_eq!(d.prob_heads(0), ratio(1, 2));
    assert_eq!(d.prob_heads(1), ratio(1, 2));
}

#[test]
fn e_sequence_and_lattice_diagonal() {
    let frozen: [u64; 25] = [
        1, 1, 1, 3, 5, 7, 15, 29, 49, 95, 187, 345, 659, 1289, 2465, 4739, 9237, 17911, 34715, 67705, 132063,
        257477, 503309, 984983, 1927895,
    ];
    let e: Vec<u64> = e_sequence(24).unwrap().values().iter().map(|x| x.try_into().unwrap()).collect();
    assert_eq!(e, frozen);
    let d: Vec<u64> = diagonal(&LatticeSpec::delta_instance(), 24).iter().map(|x| x.try_into().unwrap()).collect();
    assert_eq!(d, frozen);
}

#[test]
fn dropping_the_long_step_changes_the_diagonal_at_six() {
    let without = LatticeSpec::delta_instance().without((6, 5));
    let d: Vec<u64> = diagonal(&without, 6).iter().map(|x| x.try_into().unwrap()).collect();
    assert_eq!(d, [1, 1, 1, 3, 5, 7, 13]);
}

#[test]
fn h_values() {
    let h: Vec<i64> = h_closed_form(6).iter().map(|x| x.try_into().unwrap()).collect();
    // 2^n + r_n with r = 2, -1, -3, 5, 1, -11, 9
    assert_eq!(h, [3, 1, 1, 13, 17, 21, 73]);
}

#[test]
fn asymptotics_at_hundred() {
    let r = asymptotic_table(&[100]).unwrap()[0];
    assert!((r.delta - 0.028_192_539_153_221_89).abs() < 1e-15);
    assert!((r.leading - 0.028_209_479_177_387_812).abs() < 1e-15);
    assert!(r.ratio > 0.999 && r.ratio < 1.0);
}

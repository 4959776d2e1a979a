//! Partition procedures: halving edges, the rotating halving line,
//! discrete ham-sandwich cuts, translation balancing, and the recursive
//! decomposition built from them.

mod decompose;
mod halving;
mod hamsandwich;
mod translate;

pub use decompose::{decompose, DiscardReason, PartitionNode, PartitionTree, SplitInfo};
pub use halving::{find_halving_edge, rotate_to_balance, HalvingState, RotationTrace};
pub use hamsandwich::{ham_sandwich, HamSandwichCut, SideCounts};
pub use translate::translate_balance;

/// Evaluates the closed-form recursion bound
/// `ceil(log_{4/3}(n) * (4 * exl(2n) + 6n))`.
///
/// `exl` supplies the single-line extremal value used inside the bound and
/// is expected to be monotone in n.
pub fn recurrence_bound(n: u64, exl: impl Fn(u64) -> u64) -> u64 {
    assert!(n >= 2, "the bound is defined for n >= 2");
    let log43 = (n as f64).ln() / (4f64 / 3f64).ln();
    let inner = 4 * exl(2 * n) + 6 * n;
    (log43 * inner as f64).ceil() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_base_example() {
        // log_{4/3}(2) * 12 = 2.4094... * 12 = 28.91... -> 29
        assert_eq!(recurrence_bound(2, |_| 0), 29);
    }

    #[test]
    fn recurrence_shape_with_zero_exl() {
        // With exl = 0 the bound is exactly 6 * n * log_{4/3}(n), up to the
        // final rounding.
        for n in [2u64, 10, 100, 1000] {
            let bound = recurrence_bound(n, |_| 0);
            let exact = 6.0 * n as f64 * ((n as f64).ln() / (4f64 / 3f64).ln());
            assert!((bound as f64 - exact).abs() < 1.0);
        }
    }

    #[test]
    fn recurrence_monotone_in_n() {
        let exl = |m: u64| 3 * m;
        let mut prev = 0;
        for n in [2u64, 4, 8, 16, 32, 64] {
            let b = recurrence_bound(n, exl);
            assert!(b >= 2 * prev, "doubling n at least doubles the bound");
            prev = b;
        }
    }
}

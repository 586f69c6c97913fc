//! Shared inputs for the criterion benchmarks.

use pinnacle_core::PinnacleProblem;

/// Pinnacle set of the 100-element worked instance.
pub const N100_PINNACLES: [usize; 17] = [
    97, 94, 85, 79, 68, 67, 63, 48, 43, 38, 25, 24, 23, 18, 13, 8, 3,
];

pub fn n100() -> PinnacleProblem {
    PinnacleProblem::new(100, N100_PINNACLES).expect("valid instance")
}

/// `k` pinnacles spread evenly over `[n]`.
pub fn spread(n: usize, k: usize) -> PinnacleProblem {
    PinnacleProblem::spread(n, k).expect("valid spread")
}

/// Instances for the generation benchmarks: pinnacles `n − 1` and `n / 2`.
pub fn generation_instance(n: usize) -> PinnacleProblem {
    PinnacleProblem::new(n, [n - 1, n / 2]).expect("valid instance")
}

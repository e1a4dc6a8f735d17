//! Fixtures shared by the benchmarks.

use adideals::{CartanType, RootSystem};

/// Systems benchmarked for enumeration, smallest first.
pub fn bench_systems() -> Vec<RootSystem> {
    [
        (CartanType::A, 6),
        (CartanType::C, 5),
        (CartanType::F, 4),
        (CartanType::E, 6),
        (CartanType::E, 7),
    ]
    .into_iter()
    .map(|(t, p)| RootSystem::new(t, p).expect("valid system"))
    .collect()
}

//! Workloads shared by the benchmarks.

use rand::rngs::StdRng;
use rand::SeedableRng;
use ratcap_core::gen::{agent_names, chain_formula, chain_model, random_formula, FormulaParams};
use ratcap_core::{Cgsp, Formula};

/// Chain sizes used for scaling runs.
pub const CHAIN_SIZES: [usize; 3] = [1_000, 3_000, 10_000];

pub fn chain_case(n: usize) -> (Cgsp, Formula) {
    (chain_model(n), chain_formula())
}

/// Seeded next-time formulas over agents `1`, `2` for validity runs.
pub fn validity_formulas(count: usize, depth: usize, seed: u64) -> Vec<Formula> {
    let mut rng = StdRng::seed_from_u64(seed);
    let params = FormulaParams::next_only(agent_names(2), depth);
    (0..count).map(|_| random_formula(&mut rng, &params)).collect()
}

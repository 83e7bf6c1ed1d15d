use std::time::Duration;

use num_bigint::BigUint;

/// Resource envelope shared by the group algorithms and the pipeline.
#[derive(Clone, Debug)]
pub struct Caps {
    /// Largest group order for which elements may be listed one by one.
    pub enumeration: u64,
    /// Largest group order for which conjugacy classes are attempted at all.
    pub class_order: BigUint,
    /// Wall-clock budget for random class discovery.
    pub class_budget: Duration,
    /// Largest quotient order handled by the subdirect machinery.
    pub quotient: u64,
    /// Largest quotient for which the regular coset action is materialized.
    pub coset_action: u64,
    /// Largest direct product scanned by brute-force subgroup checks.
    pub subgroup_scan: u64,
    /// Random samples tried before an exhaustive derangement search.
    pub random_samples: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            enumeration: 10_000_000,
            class_order: BigUint::from(10u64).pow(12),
            class_budget: Duration::from_secs(120),
            quotient: 100_000,
            coset_action: 2_000,
            subgroup_scan: 5_000,
            random_samples: 10_000,
        }
    }
}

impl Caps {
    pub fn with_max_order(mut self, max_order: BigUint) -> Self {
        self.class_order = max_order;
        self
    }
}

//! Shared tunables for the verification and numeric routines.

/// Bounds and tolerances used across the crate.  `Default` gives the values
/// the test suite and the CLI run with unless overridden.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    /// Largest n for which exhaustive sweeps are attempted.
    pub max_exhaustive_n: usize,
    /// Maximum i-word / j-word length substituted into relation schemas.
    pub word_bound: usize,
    /// Seed for every randomized check; fixed so runs are reproducible.
    pub seed: u64,
    /// Number of random samples drawn by the randomized checks.
    pub samples: usize,
    /// Convergence tolerance for projective distances of matrix families.
    pub tol: f64,
}

impl Default for Config {
    fn default() -> Self {
        Self { max_exhaustive_n: 4, word_bound: 4, seed: 0xCAFE_F00D, samples: 1000, tol: 1e-4 }
    }
}

//! Budget knobs shared by the library and the CLI.

/// Default crossing budget for the Kauffman bracket / Jones computation.
pub const DEFAULT_CROSSING_BUDGET: usize = 20;

/// Default cap on elementary handle reductions in the word problem.
pub const DEFAULT_WORD_PROBLEM_CAP: u64 = 1_000_000;

/// Default cap on recorded rewrite steps in the certificate search.
pub const DEFAULT_CERT_STEP_BUDGET: usize = 1_000_000;

/// Environment variable overriding the crossing budget.
pub const ENV_CROSSING_BUDGET: &str = "UNKNOT_CROSSING_BUDGET";

/// Environment variable overriding the certificate step budget.
pub const ENV_CERT_BUDGET: &str = "UNKNOT_CERT_BUDGET";

/// Resolved budgets for a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub crossing_budget: usize,
    pub cert_step_budget: usize,
    pub word_problem_cap: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            crossing_budget: DEFAULT_CROSSING_BUDGET,
            cert_step_budget: DEFAULT_CERT_STEP_BUDGET,
            word_problem_cap: DEFAULT_WORD_PROBLEM_CAP,
        }
    }
}

impl RunConfig {
    /// Defaults, with `UNKNOT_CROSSING_BUDGET` / `UNKNOT_CERT_BUDGET` applied.
    pub fn from_env() -> Self {
        let mut cfg = RunConfig::default();
        if let Ok(v) = std::env::var(ENV_CROSSING_BUDGET) {
            if let Ok(n) = v.trim().parse() {
                cfg.crossing_budget = n;
            }
        }
        if let Ok(v) = std::env::var(ENV_CERT_BUDGET) {
            if let Ok(n) = v.trim().parse() {
                cfg.cert_step_budget = n;
            }
        }
        cfg
    }

    /// Applies a single `--budget N` override to both budgets.
    pub fn with_budget(mut self, budget: usize) -> Self {
        self.crossing_budget = budget;
        self.cert_step_budget = budget;
        self
    }
}

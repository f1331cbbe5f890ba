use crate::error::ConfigError;

/// Rounding settings for the non-negative-base kernel.
///
/// `slack_ulps` is the number of ulps every inexact corner value is pushed
/// outward; it is never zero. `exact_paths` enables the shortcuts that
/// return provably exact corner values without widening.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EvalConfig {
    slack_ulps: u32,
    exact_paths: bool,
}

impl EvalConfig {
    pub const DEFAULT_SLACK_ULPS: u32 = 2;

    pub fn new(slack_ulps: u32, exact_paths: bool) -> Result<EvalConfig, ConfigError> {
        if slack_ulps == 0 {
            return Err(ConfigError::ZeroSlack);
        }
        Ok(EvalConfig {
            slack_ulps,
            exact_paths,
        })
    }

    pub fn slack_ulps(&self) -> u32 {
        self.slack_ulps
    }

    pub fn exact_paths(&self) -> bool {
        self.exact_paths
    }

    pub fn with_slack_ulps(self, slack_ulps: u32) -> Result<EvalConfig, ConfigError> {
        EvalConfig::new(slack_ulps, self.exact_paths)
    }

    pub fn with_exact_paths(self, exact_paths: bool) -> EvalConfig {
        EvalConfig {
            exact_paths,
            ..self
        }
    }
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            slack_ulps: Self::DEFAULT_SLACK_ULPS,
            exact_paths: true,
        }
    }
}

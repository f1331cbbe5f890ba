use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IntervalError {
    #[error("interval bound is NaN")]
    NanBound,
    #[error("inverted interval bounds: {lo} > {hi}")]
    Inverted { lo: f64, hi: f64 },
    #[error("interval reduced to a single infinite point")]
    InfiniteSingleton,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("invalid bound `{0}`")]
    Bound(String),
    #[error("invalid interval literal `{0}`")]
    Literal(String),
    #[error("invalid interval `{literal}`: {source}")]
    Interval {
        literal: String,
        source: IntervalError,
    },
    #[error("expected {expected} fields, found {found}")]
    FieldCount { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("empty exponent")]
    EmptyExponent,
    #[error("infinite singleton exponent")]
    InfiniteSingletonExponent,
    #[error("not an irreducible fraction")]
    NotIrreducible,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("slack_ulps must be at least 1")]
    ZeroSlack,
}

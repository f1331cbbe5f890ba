//! Interval literal syntax.
//!
//! ```text
//! interval := "empty" | "[" bound "," bound "]"
//! bound    := decimal | hexfloat | "inf" | "-inf"
//! ```
//!
//! Decimal bounds denote the nearest binary64 value. Hex-float bounds
//! (C99 `0x1.8p+1` form) must be exactly representable. Whitespace around
//! brackets and the comma is ignored.

use crate::error::ParseError;
use crate::interval::Interval;

/// How bounds are rendered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BoundStyle {
    /// Shortest decimal that reads back to the same value.
    #[default]
    Decimal,
    /// C99 hex-float, bit-exact.
    Hex,
}

pub fn parse_bound(token: &str) -> Result<f64, ParseError> {
    let t = token.trim();
    let bad = || ParseError::Bound(t.to_string());
    match t {
        "inf" | "+inf" => return Ok(f64::INFINITY),
        "-inf" => return Ok(f64::NEG_INFINITY),
        _ => {}
    }
    let unsigned = t.strip_prefix(['+', '-']).unwrap_or(t);
    if unsigned.starts_with("0x") || unsigned.starts_with("0X") {
        return hexf_parse::parse_hexf64(t, false).map_err(|_| bad());
    }
    // Rust's float parser also takes "nan", "infinity" and friends; only
    // plain decimal literals are part of the grammar.
    let decimal_chars = |c: char| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-');
    if unsigned.is_empty() || !unsigned.starts_with(|c: char| c.is_ascii_digit() || c == '.') {
        return Err(bad());
    }
    if !t.chars().all(decimal_chars) {
        return Err(bad());
    }
    t.parse::<f64>().map_err(|_| bad())
}

pub fn parse_interval(literal: &str) -> Result<Interval, ParseError> {
    let s = literal.trim();
    if s == "empty" {
        return Ok(Interval::EMPTY);
    }
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| ParseError::Literal(s.to_string()))?;
    let mut parts = inner.split(',');
    let (lo, hi) = match (parts.next(), parts.next(), parts.next()) {
        (Some(lo), Some(hi), None) => (lo, hi),
        _ => return Err(ParseError::Literal(s.to_string())),
    };
    let lo = parse_bound(lo)?;
    let hi = parse_bound(hi)?;
    Interval::new(lo, hi).map_err(|source| ParseError::Interval {
        literal: s.to_string(),
        source,
    })
}

pub fn format_bound(v: f64, style: BoundStyle) -> String {
    match style {
        BoundStyle::Decimal => format_decimal(v),
        BoundStyle::Hex => format_hex(v),
    }
}

pub fn format_interval(x: &Interval, style: BoundStyle) -> String {
    match x.bounds() {
        None => "empty".to_string(),
        Some((lo, hi)) => format!("[{},{}]", format_bound(lo, style), format_bound(hi, style)),
    }
}

fn format_decimal(v: f64) -> String {
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let plain = format!("{v}");
    if plain.len() <= 24 {
        plain
    } else {
        format!("{v:e}")
    }
}

/// C99 `%a`-style rendering: `0x1.<hex>p<exp>` for normals,
/// `0x0.<hex>p-1022` for subnormals.
pub fn format_hex(v: f64) -> String {
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let bits = v.to_bits();
    let sign = if bits >> 63 == 1 { "-" } else { "" };
    let biased = ((bits >> 52) & 0x7ff) as i32;
    let frac = bits & ((1u64 << 52) - 1);
    if biased == 0 && frac == 0 {
        return format!("{sign}0x0p+0");
    }
    let (lead, exp) = if biased == 0 {
        (0, -1022)
    } else {
        (1, biased - 1023)
    };
    let mut digits = format!("{frac:013x}");
    while digits.ends_with('0') {
        digits.pop();
    }
    let dot = if digits.is_empty() { "" } else { "." };
    format!("{sign}0x{lead}{dot}{digits}p{exp:+}")
}

//! Numeric text output: 12 significant digits, `.` as decimal point.

/// Significant digits of every emitted number.
pub const SIG_DIGITS: usize = 12;

/// Formats `v` with 12 significant digits.
///
/// Fixed notation for `1e-4 ≤ |v| < 1e12`, scientific otherwise; zero is `0`.
/// Parsing the output and formatting again reproduces the same text.
pub fn fmt_sig(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, v);
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("rust scientific format has an exponent");
    if (-4..12).contains(&exp) {
        let decimals = (SIG_DIGITS as i32 - 1 - exp).max(0) as usize;
        format!("{v:.decimals$}")
    } else {
        sci
    }
}

/// Comma-joined [`fmt_sig`] values.
pub fn fmt_list(values: &[f64]) -> String {
    values.iter().map(|v| fmt_sig(*v)).collect::<Vec<_>>().join(",")
}

/// Rounds to the value that [`fmt_sig`] prints.
pub fn round_sig(v: f64) -> f64 {
    fmt_sig(v).parse().expect("formatted numbers parse")
}

//! printf-style number formatting (`%.Ne` and `%.Ng`) for CSV output.

/// `%.{digits}e`: mantissa with `digits` decimals, signed exponent of at
/// least two digits (`5.087504e-01`).
pub fn sci(value: f64, digits: usize) -> String {
    if !value.is_finite() {
        return non_finite(value);
    }
    let raw = format!("{value:.digits$e}");
    let (mantissa, exponent) = raw.split_once('e').expect("exponent marker");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    let sign = if exponent < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exponent.abs())
}

/// `%.{significant}g`: shortest of fixed or scientific notation with
/// `significant` significant digits and trailing zeros removed.
pub fn general(value: f64, significant: usize) -> String {
    if !value.is_finite() {
        return non_finite(value);
    }
    if value == 0.0 {
        return if value.is_sign_negative() { "-0" } else { "0" }.to_string();
    }
    let significant = significant.max(1);
    // exponent after rounding to the requested digits
    let rounded = format!("{value:.prec$e}", prec = significant - 1);
    let exponent: i32 = rounded
        .split_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("integer exponent");
    if exponent < -4 || exponent >= significant as i32 {
        let text = sci(value, significant - 1);
        let (mantissa, exponent) = text.split_once('e').expect("exponent marker");
        format!("{}e{exponent}", strip_zeros(mantissa))
    } else {
        let decimals = (significant as i32 - 1 - exponent).max(0) as usize;
        strip_zeros(&format!("{value:.decimals$}")).to_string()
    }
}

fn strip_zeros(text: &str) -> &str {
    if text.contains('.') {
        text.trim_end_matches('0').trim_end_matches('.')
    } else {
        text
    }
}

fn non_finite(value: f64) -> String {
    if value.is_nan() {
        "nan".into()
    } else if value > 0.0 {
        "inf".into()
    } else {
        "-inf".into()
    }
}

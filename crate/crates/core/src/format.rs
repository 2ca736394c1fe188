//! Locale-independent numeric formatting shared by every exported file.

/// Significant digits used for all numeric output.
pub const SIG_DIGITS: usize = 12;

/// Formats `x` with [`SIG_DIGITS`] significant digits, `%.12g` style.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= SIG_DIGITS as i32 {
        format!("{}e{}", trim_zeros(mantissa), exp)
    } else {
        let decimals = (SIG_DIGITS as i32 - 1 - exp) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

/// Rounds `x` to [`SIG_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    fmt_sig(x).parse().unwrap_or(x)
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

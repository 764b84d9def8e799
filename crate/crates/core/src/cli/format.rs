//! Number formatting for CSV output and angle parsing for flags.

use std::f64::consts::{FRAC_PI_2, PI};

/// `x` with `digits` significant digits, `%g` style: fixed notation for
/// moderate exponents, scientific otherwise, trailing zeros trimmed.
pub fn sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if exp < -5 || exp >= digits as i32 {
        return format!("{}e{}", trim_zeros(mantissa), exp);
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    let fixed = format!("{:.*}", decimals, x);
    let out = trim_zeros(&fixed);
    if out == "-0" {
        "0".to_string()
    } else {
        out
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// Parses an angle given as a number or as `[k*]pi[/d]` (e.g. `pi/3`, `2*pi/5`).
pub fn parse_angle(text: &str) -> Result<f64, String> {
    let t = text.trim().to_ascii_lowercase();
    if let Ok(v) = t.parse::<f64>() {
        return Ok(v);
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t.as_str(), None),
    };
    let factor = match num.strip_suffix("pi") {
        Some("") => 1.0,
        Some(k) => k
            .trim_end_matches('*')
            .trim()
            .parse::<f64>()
            .map_err(|_| format!("invalid angle '{text}'"))?,
        None => return Err(format!("invalid angle '{text}'")),
    };
    let den = match den {
        Some(d) => d
            .parse::<f64>()
            .map_err(|_| format!("invalid angle '{text}'"))?,
        None => 1.0,
    };
    Ok(factor * PI / den)
}

/// Converts a user angle to radians, snapping values within 1e-12 of the
/// ends of `[0, pi/2]` onto the ends.
pub fn to_radians(value: f64, degrees: bool) -> f64 {
    let r = if degrees { value.to_radians() } else { value };
    if r > FRAC_PI_2 && r - FRAC_PI_2 < 1e-12 {
        FRAC_PI_2
    } else if r < 0.0 && r > -1e-12 {
        0.0
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(sig(0.0, 12), "0");
        assert_eq!(sig(-0.0, 12), "0");
        assert_eq!(sig(4.0, 12), "4");
        assert_eq!(sig(-3.0, 12), "-3");
        assert_eq!(sig(1.0 / 3.0, 12), "0.333333333333");
        assert_eq!(sig(std::f64::consts::PI * 1e6, 12), "3141592.65359");
        assert_eq!(sig(1.5e-16, 12), "1.5e-16");
        assert_eq!(sig(-2.0 / 3.0 * 1e-7, 12), "-6.66666666667e-8");
        assert_eq!(sig(1e15, 12), "1e15");
        assert_eq!(sig(0.1 + 0.2, 12), "0.3");
    }

    #[test]
    fn angles() {
        assert_eq!(parse_angle("pi/3").unwrap(), PI / 3.0);
        assert_eq!(parse_angle("2*pi/5").unwrap(), 2.0 * PI / 5.0);
        assert_eq!(parse_angle("PI").unwrap(), PI);
        assert_eq!(parse_angle("0.25").unwrap(), 0.25);
        assert!(parse_angle("tau").is_err());
        assert_eq!(to_radians(90.0, true), FRAC_PI_2);
        assert_eq!(to_radians(FRAC_PI_2 + 1e-15, false), FRAC_PI_2);
    }
}

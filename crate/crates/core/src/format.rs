//! Fixed-width number formatting shared by every textual output.

/// Significant digits in all floating-point output.
pub const SIG_DIGITS: usize = 12;

/// Formats `x` with twelve significant digits, `%g`-style: fixed notation
/// for decimal exponents in `[-5, 12)`, scientific otherwise. Trailing zeros
/// are kept so every value has the same precision on the page.
pub fn sig(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let exp: i32 =
        sci.rsplit_once('e').and_then(|(_, e)| e.parse().ok()).expect("scientific formatting always has an exponent");
    if (-5..SIG_DIGITS as i32).contains(&exp) {
        format!("{:.*}", (SIG_DIGITS as i32 - 1 - exp) as usize, x)
    } else {
        sci
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(sig(0.381_966_011_250_105), "0.381966011250");
        assert_eq!(sig(-1.0), "-1.00000000000");
        assert_eq!(sig(4.472_135_954_999_579), "4.47213595500");
        assert_eq!(sig(100.0), "100.000000000");
        assert_eq!(sig(0.0), "0.00000000000");
        assert_eq!(sig(1.5e-7), "1.50000000000e-7");
        assert_eq!(sig(123_456_789_012_345.0), "1.23456789012e14");
        assert_eq!(sig(9.999_999_999_999_9), "10.0000000000");
    }

    #[test]
    fn output_parses_back_close() {
        for x in [1e-300, 3.3e-6, 0.1, 7.0, 12345.678, 6.02e23, -2.5e-9] {
            let y: f64 = sig(x).parse().unwrap();
            assert!((x - y).abs() <= 1e-11 * x.abs());
        }
    }
}

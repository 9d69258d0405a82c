//! Fixed-precision numeric output shared by the CSV and JSON writers.

use serde::Serializer;

/// Rounds to 15 significant decimal digits.
pub fn round_sig15(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

/// Text form of `x` with at most 15 significant digits. Plain decimal in
/// the usual range, exponent notation for very small or large magnitudes.
pub fn sig15(x: f64) -> String {
    let r = round_sig15(x);
    let mag = r.abs();
    if r == 0.0 {
        "0".to_string()
    } else if !(1e-5..1e16).contains(&mag) {
        format!("{r:e}")
    } else {
        r.to_string()
    }
}

/// `serialize_with` adapter for 15-significant-digit numbers.
pub fn serialize_sig15<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round_sig15(*x))
}

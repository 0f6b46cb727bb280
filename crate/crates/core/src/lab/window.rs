use crate::arith::{gcd, mod_inv};
use crate::error::LabError;

fn window(a: u64, start: f64, eps: f64) -> (u64, u64) {
    let a = a as f64;
    (
        ((1.0 + start) * a).ceil() as u64,
        ((1.0 + start + eps) * a).floor() as u64,
    )
}

/// First `(b, c)` with `b ∈ [(1+α)a, (1+α+ε)a]`, `c ∈ [(1+β)a, (1+β+ε)a]`,
/// `b ≠ c` and `b·c ≡ 1 (mod a)`, scanning `b` upwards and taking the
/// smallest matching `c`.
pub fn window_search(
    a: u64,
    alpha: f64,
    beta: f64,
    eps: f64,
) -> Result<Option<(u64, u64)>, LabError> {
    if a < 2 {
        return Err(LabError::InvalidArgument(format!(
            "a must be at least 2, got {a}"
        )));
    }
    if !(0.0..=1.0).contains(&alpha) || !(0.0..=1.0).contains(&beta) {
        return Err(LabError::InvalidArgument(
            "alpha and beta must lie in [0, 1]".into(),
        ));
    }
    if !(eps > 0.0 && eps.is_finite()) {
        return Err(LabError::InvalidArgument("eps must be positive".into()));
    }
    let (b_lo, b_hi) = window(a, alpha, eps);
    let (c_lo, c_hi) = window(a, beta, eps);
    for b in b_lo..=b_hi {
        if gcd(a, b) != 1 {
            continue;
        }
        let target = mod_inv((b % a) as i64, a).expect("b is a unit mod a");
        let mut c = c_lo + (target + a - c_lo % a) % a;
        if c == b {
            c += a;
        }
        if c <= c_hi {
            return Ok(Some((b, c)));
        }
    }
    Ok(None)
}

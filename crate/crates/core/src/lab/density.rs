use rayon::prelude::*;
use serde::Serialize;

use crate::arith::gcd;
use crate::error::LabError;
use crate::frobenius::apery_table;
use crate::lab::rng::Lcg64;

/// How often `f(a, b, c)` exceeds `a^{3/2+δ}` over `a < b < c < 2a`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityResult {
    pub a: u64,
    pub delta_exp: f64,
    /// `⌈a^{3/2+δ}⌉`; a pair exceeds when `f > threshold`.
    pub threshold: u64,
    pub pairs_tested: u64,
    pub pairs_exceeding: u64,
    pub fraction: f64,
    /// `a^{-2δ}`.
    pub predicted_scale: f64,
    pub exhaustive: bool,
}

/// Number of pairs `a < b < c < 2a` with `gcd(a, b, c) = 1`.
pub fn admissible_pairs(a: u64) -> u64 {
    (a + 1..2 * a)
        .map(|b| {
            let g = gcd(a, b);
            if g == 1 {
                2 * a - 1 - b
            } else {
                (b + 1..2 * a).filter(|&c| gcd(g, c) == 1).count() as u64
            }
        })
        .sum()
}

/// Counts `(tested, exceeding)` over all `c` for one `b`, reusing the
/// residue table of `{a, b}` as the starting point for every `c`.
fn count_for_b(a: u64, b: u64, threshold: u64, cs: impl Iterator<Item = u64>) -> (u64, u64) {
    let base = apery_table(a, &[b]);
    let mut scratch = Vec::with_capacity(a as usize);
    let mut tested = 0;
    let mut exceeding = 0;
    for c in cs {
        let f = match &base {
            Ok(table) => table.frobenius_with(c, &mut scratch),
            Err(_) => apery_table(a, &[b, c]).expect("coprime triple").frobenius(),
        };
        tested += 1;
        if f > threshold as i64 {
            exceeding += 1;
        }
    }
    (tested, exceeding)
}

/// Exhaustive when `sample_size` covers the whole region, otherwise
/// `sample_size` pairs drawn with replacement from [`Lcg64`] seeded with
/// `seed`: `b` and `c` uniform on `(a, 2a)`, rejecting `b = c` and
/// `gcd(a, b, c) > 1`, then ordered so `b < c`.
pub fn density_scan(
    a: u64,
    delta_exp: f64,
    sample_size: u64,
    seed: u64,
) -> Result<DensityResult, LabError> {
    if a < 8 {
        return Err(LabError::InvalidArgument(format!(
            "a must be at least 8, got {a}"
        )));
    }
    if !(delta_exp > 0.0 && delta_exp < 0.5) {
        return Err(LabError::InvalidArgument(format!(
            "delta must lie in (0, 1/2), got {delta_exp}"
        )));
    }
    if sample_size == 0 {
        return Err(LabError::InvalidArgument(
            "sample size must be positive".into(),
        ));
    }
    if a > u32::MAX as u64 {
        return Err(LabError::InvalidArgument(format!("a = {a} is too large")));
    }
    let threshold = (a as f64).powf(1.5 + delta_exp).ceil() as u64;
    let region = admissible_pairs(a);
    let exhaustive = sample_size >= region;

    let (tested, exceeding) = if exhaustive {
        (a + 1..2 * a)
            .into_par_iter()
            .map(|b| {
                let g = gcd(a, b);
                count_for_b(
                    a,
                    b,
                    threshold,
                    (b + 1..2 * a).filter(move |&c| gcd(g, c) == 1),
                )
            })
            .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1))
    } else {
        let mut rng = Lcg64::new(seed);
        let span = (a - 1) as u32;
        let mut pairs = Vec::with_capacity(sample_size as usize);
        while (pairs.len() as u64) < sample_size {
            let x = a + 1 + rng.below(span) as u64;
            let y = a + 1 + rng.below(span) as u64;
            if x == y || gcd(a, gcd(x, y)) != 1 {
                continue;
            }
            pairs.push((x.min(y), x.max(y)));
        }
        pairs
            .into_par_iter()
            .map(|(b, c)| count_for_b(a, b, threshold, std::iter::once(c)))
            .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1))
    };

    Ok(DensityResult {
        a,
        delta_exp,
        threshold,
        pairs_tested: tested,
        pairs_exceeding: exceeding,
        fraction: exceeding as f64 / tested as f64,
        predicted_scale: (a as f64).powf(-2.0 * delta_exp),
        exhaustive,
    })
}

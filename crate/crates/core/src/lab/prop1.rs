use rayon::prelude::*;
use serde::Serialize;

use crate::arith::gcd;
use crate::error::LabError;
use crate::frobenius::{frobenius_number, Triple};
use crate::nfunc::n_exact;

/// Exhaustive violation reports are limited to this modulus.
pub const VIOLATION_REPORT_MAX: u64 = 200;

/// `f` against the interval built from `N = N_a(b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Prop1Interval {
    pub triple: Triple,
    pub n: u64,
    pub f: i64,
    /// `min(b, c)·N`, as originally stated.
    pub paper_lower: u64,
    /// `min(b, c)·N - a`.
    pub corrected_lower: i64,
    /// `(b + c)·N`.
    pub upper: u64,
    pub paper_lower_ok: bool,
    pub corrected_lower_ok: bool,
    pub upper_ok: bool,
}

impl Prop1Interval {
    /// The repaired lower bound fails: this would be a genuine finding.
    pub fn is_critical(&self) -> bool {
        !self.corrected_lower_ok
    }
}

/// `N` is taken with `a` as the modulus, whatever the relative sizes.
pub fn prop1_interval(a: u64, b: u64, c: u64) -> Result<Prop1Interval, LabError> {
    if a < 2 || b < 2 || c < 2 {
        return Err(LabError::InvalidArgument(format!(
            "prop1 needs a, b, c >= 2, got ({a}, {b}, {c})"
        )));
    }
    let triple = Triple::new(a, b, c)?;
    let f = frobenius_number(&triple);
    let n = n_exact(a, b, c)?;
    let paper_lower = b.min(c) * n;
    let corrected_lower = paper_lower as i64 - a as i64;
    let upper = (b + c) * n;
    Ok(Prop1Interval {
        triple,
        n,
        f,
        paper_lower,
        corrected_lower,
        upper,
        paper_lower_ok: f >= paper_lower as i64,
        corrected_lower_ok: f >= corrected_lower,
        upper_ok: f <= upper as i64,
    })
}

/// Every coprime `a < b < c < 2a` for one `a`, ordered by `(b, c)`.
pub fn prop1_region(a: u64) -> Vec<Prop1Interval> {
    let mut out = Vec::new();
    for b in a + 1..2 * a {
        let g = gcd(a, b);
        for c in b + 1..2 * a {
            if gcd(g, c) != 1 {
                continue;
            }
            out.push(prop1_interval(a, b, c).expect("coprime triple with a >= 2"));
        }
    }
    out
}

/// All coprime `a < b < c < 2a`, `a <= a_max`, where `f < min(b,c)·N`.
/// Entries with [`Prop1Interval::is_critical`] also break the corrected bound.
pub fn violation_report(a_max: u64) -> Result<Vec<Prop1Interval>, LabError> {
    if a_max > VIOLATION_REPORT_MAX {
        return Err(LabError::InvalidArgument(format!(
            "violation report is exhaustive and limited to a <= {VIOLATION_REPORT_MAX}"
        )));
    }
    let per_a: Vec<Vec<Prop1Interval>> = (2..=a_max)
        .into_par_iter()
        .map(|a| {
            prop1_region(a)
                .into_iter()
                .filter(|p| !p.paper_lower_ok)
                .collect()
        })
        .collect();
    Ok(per_a.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_examples() {
        let p = prop1_interval(5, 7, 8).unwrap();
        assert_eq!((p.n, p.f), (2, 11));
        assert_eq!(p.paper_lower, 14);
        assert!(!p.paper_lower_ok);
        assert_eq!(p.corrected_lower, 9);
        assert!(p.corrected_lower_ok);
        assert_eq!(p.upper, 30);
        assert!(p.upper_ok);

        let p = prop1_interval(3, 4, 5).unwrap();
        assert_eq!(
            (p.n, p.f, p.paper_lower, p.corrected_lower, p.upper),
            (1, 2, 4, 1, 9)
        );
        assert!(!p.paper_lower_ok && p.corrected_lower_ok && p.upper_ok);

        let p = prop1_interval(2, 3, 5).unwrap();
        assert_eq!((p.n, p.f, p.upper), (1, 1, 8));
        assert!(p.upper_ok);
    }

    #[test]
    fn interval_rejects_bad_input() {
        assert!(prop1_interval(1, 3, 5).is_err());
        assert!(matches!(
            prop1_interval(4, 6, 10),
            Err(LabError::Frobenius(_))
        ));
    }

    #[test]
    fn small_violation_reports() {
        let r = violation_report(5).unwrap();
        assert!(r
            .iter()
            .any(|p| p.triple.as_array() == [5, 7, 8] && p.f == 11));
        let r = violation_report(3).unwrap();
        assert!(r
            .iter()
            .any(|p| p.triple.as_array() == [3, 4, 5] && p.f == 2));
        assert!(r.iter().all(|p| !p.is_critical()));
        assert!(violation_report(201).is_err());
    }
}

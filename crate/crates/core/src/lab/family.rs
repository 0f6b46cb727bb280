use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{euler_phi, gcd, mod_inv};
use crate::error::LabError;
use crate::frobenius::{frobenius_number, Triple};
use crate::lab::bez::{bez_test, bez_violated, is_near_progression, FamilyTag, ScanRecord};

/// Pairs `a < b < c < 2a` with `b·c ≡ 1 (mod a)`, sorted by `b`.
pub fn inverse_pairs(a: u64) -> Vec<(u64, u64)> {
    if a < 3 {
        return Vec::new();
    }
    (a + 1..2 * a)
        .filter(|&b| gcd(a, b) == 1)
        .filter_map(|b| {
            let c = a + mod_inv((b % a) as i64, a).expect("b is a unit mod a");
            (b < c).then_some((b, c))
        })
        .collect()
}

/// Summary of the inverse-pair family for one `a`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilyRow {
    pub a: u64,
    pub pairs_count: usize,
    pub min_f: Option<i64>,
    /// `min_f / (a²/2)`.
    pub min_ratio: Option<f64>,
    pub max_f: Option<i64>,
    /// Pairs with `a²/2 <= f <= 2a²`.
    pub in_envelope: usize,
    pub bez_violations: usize,
    /// `|pairs_count - φ(a)/2| > 2`.
    pub phi_deviation: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FamilyScan {
    pub rows: Vec<FamilyRow>,
    /// Full records for every triple with `f^8 > (abc)^5`, ascending by `(a, b)`.
    pub violations: Vec<ScanRecord>,
}

fn tagged_record(a: u64, b: u64, c: u64) -> ScanRecord {
    let mut rec = bez_test(a, b, c).expect("inverse pairs are coprime to a");
    rec.family_tag = Some(FamilyTag::InversePair);
    rec
}

fn scan_one(a: u64) -> (FamilyRow, Vec<ScanRecord>) {
    let pairs = inverse_pairs(a);
    let a_sq = a as i128 * a as i128;
    let mut min_f: Option<i64> = None;
    let mut max_f: Option<i64> = None;
    let mut in_envelope = 0;
    let mut violations = Vec::new();
    for &(b, c) in &pairs {
        let triple = Triple::new(a, b, c).expect("inverse pairs are coprime to a");
        let f = frobenius_number(&triple);
        min_f = Some(min_f.map_or(f, |m| m.min(f)));
        max_f = Some(max_f.map_or(f, |m| m.max(f)));
        let f_wide = f as i128;
        if 2 * f_wide >= a_sq && f_wide <= 2 * a_sq {
            in_envelope += 1;
        }
        if bez_violated(f, &triple) {
            violations.push(tagged_record(a, b, c));
        }
    }
    let half_phi_dev = (2 * pairs.len() as i64 - euler_phi(a) as i64).abs();
    let row = FamilyRow {
        a,
        pairs_count: pairs.len(),
        min_f,
        min_ratio: min_f.map(|f| 2.0 * f as f64 / (a as f64 * a as f64)),
        max_f,
        in_envelope,
        bez_violations: violations.len(),
        phi_deviation: half_phi_dev > 4,
    };
    (row, violations)
}

/// Frobenius numbers over the whole inverse-pair family for each `a` in
/// `a_from..=a_to` stepping by `step`.
pub fn family_scan(a_from: u64, a_to: u64, step: u64) -> Result<FamilyScan, LabError> {
    if a_from < 3 || a_from > a_to || step == 0 {
        return Err(LabError::InvalidArgument(format!(
            "need 3 <= a_from <= a_to and step >= 1, got {a_from}..={a_to} step {step}"
        )));
    }
    let values: Vec<u64> = (a_from..=a_to).step_by(step as usize).collect();
    let per_a: Vec<(FamilyRow, Vec<ScanRecord>)> = values.into_par_iter().map(scan_one).collect();
    let mut rows = Vec::with_capacity(per_a.len());
    let mut violations = Vec::new();
    for (row, v) in per_a {
        rows.push(row);
        violations.extend(v);
    }
    Ok(FamilyScan { rows, violations })
}

fn window_limit(a: u64, window: f64) -> u64 {
    ((1.0 + window) * a as f64).floor() as u64
}

fn check_window(window: f64) -> Result<(), LabError> {
    if !(window > 0.0 && window <= 1.0) {
        return Err(LabError::InvalidArgument(format!(
            "window must lie in (0, 1], got {window}"
        )));
    }
    Ok(())
}

fn violations_in_window(a: u64, limit: u64, skip_near_progression: bool) -> Vec<ScanRecord> {
    inverse_pairs(a)
        .into_iter()
        .take_while(|&(b, _)| b <= limit)
        .filter(|&(_, c)| c <= limit)
        .filter_map(|(b, c)| {
            let triple = Triple::new(a, b, c).expect("inverse pairs are coprime to a");
            if skip_near_progression && is_near_progression(&triple) {
                return None;
            }
            let f = frobenius_number(&triple);
            bez_violated(f, &triple).then(|| tagged_record(a, b, c))
        })
        .collect()
}

/// All inverse pairs with `c <= (1 + window)·a` that violate `f <= (abc)^{5/8}`.
pub fn bez_scan(a_from: u64, a_to: u64, window: f64) -> Result<Vec<ScanRecord>, LabError> {
    check_window(window)?;
    if a_from < 3 || a_from > a_to {
        return Err(LabError::InvalidArgument(format!(
            "need 3 <= a_from <= a_to, got {a_from}..={a_to}"
        )));
    }
    let per_a: Vec<Vec<ScanRecord>> = (a_from..=a_to)
        .into_par_iter()
        .map(|a| violations_in_window(a, window_limit(a, window), false))
        .collect();
    Ok(per_a.into_iter().flatten().collect())
}

/// Smallest `a >= a_from` (up to `a_max`) whose narrow-window inverse pairs
/// contain a violation; returns the violation with the smallest `b`.
pub fn first_bez_violation(
    a_from: u64,
    a_max: u64,
    window: f64,
    skip_near_progression: bool,
) -> Result<Option<ScanRecord>, LabError> {
    check_window(window)?;
    if a_from < 3 {
        return Err(LabError::InvalidArgument(
            "a_from must be at least 3".into(),
        ));
    }
    const BLOCK: u64 = 64;
    let mut start = a_from;
    while start <= a_max {
        let end = (start + BLOCK - 1).min(a_max);
        let hits: Vec<Option<ScanRecord>> = (start..=end)
            .into_par_iter()
            .map(|a| {
                violations_in_window(a, window_limit(a, window), skip_near_progression)
                    .into_iter()
                    .next()
            })
            .collect();
        if let Some(rec) = hits.into_iter().flatten().next() {
            return Ok(Some(rec));
        }
        start = end + 1;
    }
    Ok(None)
}

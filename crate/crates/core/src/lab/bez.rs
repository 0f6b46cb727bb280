use num_bigint::BigUint;
use serde::Serialize;

use crate::error::LabError;
use crate::frobenius::{frobenius_number, Triple};
use crate::lab::prop1::prop1_interval;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyTag {
    InversePair,
    Window,
    Random,
}

/// One scanned triple.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanRecord {
    pub triple: Triple,
    pub f: i64,
    pub n: u64,
    /// `(abc)^{5/8}`, for display.
    pub bez_bound: f64,
    /// `f^8 > (abc)^5`, exact.
    pub bez_violated: bool,
    pub prop1_paper_lower_ok: bool,
    pub prop1_upper_ok: bool,
    pub family_tag: Option<FamilyTag>,
    /// `|a + c - 2b| <= a/100` on the sorted triple.
    pub near_progression: bool,
}

/// `(a·b·c)^{5/8}` in floating point. Never used to decide anything.
pub fn bez_bound(a: u64, b: u64, c: u64) -> f64 {
    let abc = a as f64 * b as f64 * c as f64;
    abc.powf(0.625)
}

/// `f^8 > (a·b·c)^5` in arbitrary precision.
pub fn bez_violated(f: i64, triple: &Triple) -> bool {
    if f <= 0 {
        return false;
    }
    let lhs = BigUint::from(f as u64).pow(8);
    let rhs = BigUint::from(triple.product()).pow(5);
    lhs > rhs
}

/// Whether the sorted triple lies within `a/100` of an arithmetic progression.
pub fn is_near_progression(triple: &Triple) -> bool {
    let mut g = triple.as_array();
    g.sort_unstable();
    let skew = (g[0] + g[2]).abs_diff(2 * g[1]);
    100 * skew <= g[0]
}

pub fn bez_test(a: u64, b: u64, c: u64) -> Result<ScanRecord, LabError> {
    let triple = Triple::new(a, b, c)?;
    let (n, paper_ok, upper_ok, f) = if a >= 2 && b >= 2 && c >= 2 {
        let p = prop1_interval(a, b, c)?;
        (p.n, p.paper_lower_ok, p.upper_ok, p.f)
    } else {
        // A generator equal to 1 makes everything representable.
        let f = frobenius_number(&triple);
        let n = crate::nfunc::n_exact(a, b, c)?;
        (n, true, true, f)
    };
    Ok(ScanRecord {
        triple,
        f,
        n,
        bez_bound: bez_bound(a, b, c),
        bez_violated: bez_violated(f, &triple),
        prop1_paper_lower_ok: paper_ok,
        prop1_upper_ok: upper_ok,
        family_tag: None,
        near_progression: is_near_progression(&triple),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_examples() {
        assert_eq!(bez_bound(1, 1, 1), 1.0);
        assert!((bez_bound(5, 7, 8) - 280f64.powf(0.625)).abs() < 1e-12);
        assert!((bez_bound(5, 7, 8) - 33.8).abs() < 0.05);
        assert!((bez_bound(2, 2, 2) - 2f64.powf(15.0 / 8.0)).abs() < 1e-12);
    }

    #[test]
    fn exact_predicate_at_the_boundary() {
        // abc = 2^8, so (abc)^{5/8} = 32 exactly; f = 32 is not a violation, 33 is.
        let t = Triple::new(1, 16, 16).unwrap();
        assert!(!bez_violated(32, &t));
        assert!(bez_violated(33, &t));
        assert!(!bez_violated(-1, &t));
    }

    #[test]
    fn records() {
        let r = bez_test(5, 7, 8).unwrap();
        assert_eq!(r.f, 11);
        assert!(!r.bez_violated);
        assert_eq!(11u128.pow(8), 214_358_881);
        assert_eq!(280u128.pow(5), 1_721_036_800_000);

        let r = bez_test(3, 4, 5).unwrap();
        assert!(!r.bez_violated);
        assert!(r.near_progression);
        assert!(!r.prop1_paper_lower_ok);
        assert!(r.prop1_upper_ok);
    }
}

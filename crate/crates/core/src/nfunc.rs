//! The covering function `N_a(b, c)`: the least `n` such that every residue
//! mod `a` is `ν·b + μ·c` for some `0 <= ν, μ <= n`.
//!
//! Also the reduction `N_a(b, c) = N_a(1, c·b⁻¹)` and continued-fraction
//! bounds for `N` built from the convergents of `t/a`.

use serde::Serialize;

use crate::arith::{convergents, gcd, mod_inv, Rational};
use crate::error::NfuncError;
use crate::frobenius::Triple;

/// Exact `N_a(b, c)` by growing square shells `max(ν, μ) = n` until every
/// residue mod `a` is covered.
pub fn n_exact(a: u64, b: u64, c: u64) -> Result<u64, NfuncError> {
    if a == 0 {
        return Err(NfuncError::InvalidArgument(
            "modulus a must be positive".into(),
        ));
    }
    let g = gcd(a, gcd(b, c));
    if g != 1 {
        return Err(NfuncError::NotCoverable { a, gcd: g });
    }
    let m = a as usize;
    let (bm, cm) = (b % a, c % a);
    let mut covered = vec![false; m];
    covered[0] = true;
    let mut count = 1usize;
    let mut n = 0u64;
    // shell_b = n*b mod a, shell_c = n*c mod a
    let (mut shell_b, mut shell_c) = (0u64, 0u64);
    let add = |x: u64, y: u64| {
        let s = x + y;
        if s >= a {
            s - a
        } else {
            s
        }
    };
    while count < m {
        n += 1;
        shell_b = add(shell_b, bm);
        shell_c = add(shell_c, cm);
        // ν = n, μ = 0..=n
        let mut r = shell_b;
        for _ in 0..=n {
            if !covered[r as usize] {
                covered[r as usize] = true;
                count += 1;
            }
            r = add(r, cm);
        }
        // μ = n, ν = 0..n
        let mut r = shell_c;
        for _ in 0..n {
            if !covered[r as usize] {
                covered[r as usize] = true;
                count += 1;
            }
            r = add(r, bm);
        }
    }
    Ok(n)
}

/// `t = c·b⁻¹ mod a`, so that `N_a(b, c) = N_a(1, t)`.
pub fn reduce_to_unit(a: u64, b: u64, c: u64) -> Result<u64, NfuncError> {
    if a < 2 {
        return Err(NfuncError::InvalidArgument(format!("modulus {a} < 2")));
    }
    let b_inv = mod_inv((b % a) as i64, a)?;
    Ok(((c % a) as u128 * b_inv as u128 % a as u128) as u64)
}

/// `N_a(1, t) = max_x min_μ max(μ, (x - μt) mod a)`.
pub fn n_unit(a: u64, t: u64) -> u64 {
    assert!(a >= 1, "modulus must be positive");
    let t = t % a;
    let mut worst = 0;
    for x in 0..a {
        let mut best = u64::MAX;
        // r = (x - μt) mod a
        let mut r = x;
        let mut mu = 0;
        while mu < best && mu < a {
            best = best.min(mu.max(r));
            r = if r >= t { r - t } else { r + a - t };
            mu += 1;
        }
        worst = worst.max(best);
    }
    worst
}

/// Sorted multiples `{μt mod a : μ < q}` and their cyclic gaps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapProfile {
    pub max_gap: u64,
    /// `x_{i+1} - x_i` in ascending order of `x_i`, ending with the wraparound gap.
    pub gaps: Vec<u64>,
}

pub fn gap_profile(a: u64, t: u64, q: u64) -> Result<GapProfile, NfuncError> {
    if q == 0 || q > a {
        return Err(NfuncError::InvalidArgument(format!(
            "need 1 <= q <= a, got q = {q}, a = {a}"
        )));
    }
    let t = t % a;
    let mut points: Vec<(u64, u64)> = Vec::with_capacity(q as usize);
    let mut x = 0u64;
    for mu in 0..q {
        points.push((x, mu));
        x = ((x as u128 + t as u128) % a as u128) as u64;
    }
    points.sort_unstable();
    if let Some(w) = points.windows(2).find(|w| w[0].0 == w[1].0) {
        let (first, second) = (w[0].1.min(w[1].1), w[0].1.max(w[1].1));
        return Err(NfuncError::DuplicateMultiple { first, second });
    }
    let mut gaps: Vec<u64> = points.windows(2).map(|w| w[1].0 - w[0].0).collect();
    gaps.push(a - points.last().unwrap().0 + points[0].0);
    let max_gap = *gaps.iter().max().unwrap();
    Ok(GapProfile { max_gap, gaps })
}

/// Bound quantities for one convergent `p/q` of `t/a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConvergentBounds {
    pub p: u64,
    pub q: u64,
    pub delta: Rational,
    /// `min(a/q, 1/(δq))`, with `1/(δq)` read as infinite when `δ = 0`.
    pub lower_proxy: Rational,
    /// `a/q + q`.
    pub upper_proxy: Rational,
    /// `a/q + (q-1)·δ·a`, the largest gap between the first `q` multiples.
    pub gap_bound: Rational,
}

impl ConvergentBounds {
    /// Explicit covering bound: any residue is reached with `ν <= ⌈gap_bound⌉`
    /// and `μ <= q - 1`, so `N <= ⌈gap_bound⌉ + q`.
    pub fn explicit_upper(&self) -> u128 {
        self.gap_bound.ceil() + self.q as u128
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub triple: Triple,
    pub t: u64,
    pub n_exact: u64,
    pub per_convergent: Vec<ConvergentBounds>,
    pub best_upper: Rational,
}

impl BoundReport {
    /// Largest `lower_proxy` across convergents.
    pub fn best_lower(&self) -> Rational {
        self.per_convergent
            .iter()
            .map(|r| r.lower_proxy)
            .max()
            .expect("at least one convergent")
    }
}

/// Rows of bounds for every convergent of `t/a`, without computing `N`.
pub fn convergent_bounds(a: u64, t: u64) -> Vec<ConvergentBounds> {
    let a128 = a as u128;
    convergents(t % a, a)
        .into_iter()
        .filter(|c| c.within_dirichlet())
        .map(|c| {
            let q = c.q as u128;
            let a_over_q = Rational::new(a128, q);
            let lower_proxy = match c.delta.mul_int(q).recip() {
                Some(inv) => a_over_q.min(inv),
                None => a_over_q,
            };
            ConvergentBounds {
                p: c.p,
                q: c.q,
                delta: c.delta,
                lower_proxy,
                upper_proxy: a_over_q + Rational::from_int(q),
                gap_bound: a_over_q + c.delta.mul_int(a128).mul_int(q - 1),
            }
        })
        .collect()
}

/// Reduces to `N_a(1, t)`, expands `t/a` and reports bounds next to the exact
/// `N`. If `b` is not invertible mod `a` but `c` is, the roles are swapped.
pub fn cf_n_bounds(a: u64, b: u64, c: u64) -> Result<BoundReport, NfuncError> {
    if a < 2 {
        return Err(NfuncError::InvalidArgument(format!("modulus {a} < 2")));
    }
    let (u, v) = if gcd(a, b % a) != 1 && gcd(a, c % a) == 1 {
        (c, b)
    } else {
        (b, c)
    };
    let t = reduce_to_unit(a, u, v)?;
    let triple = Triple::new(a, b, c).map_err(|_| NfuncError::NotCoverable {
        a,
        gcd: gcd(a, gcd(b, c)),
    })?;
    let n = n_exact(a, b, c)?;
    let per_convergent = convergent_bounds(a, t);
    let best_upper = per_convergent
        .iter()
        .map(|r| r.upper_proxy)
        .min()
        .expect("at least one convergent");
    Ok(BoundReport {
        triple,
        t,
        n_exact: n,
        per_convergent,
        best_upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct definition: try every n, check every residue by double loop.
    fn n_brute(a: u64, b: u64, c: u64) -> u64 {
        (0..a)
            .find(|&n| {
                let mut hit = vec![false; a as usize];
                for nu in 0..=n {
                    for mu in 0..=n {
                        hit[((nu * b + mu * c) % a) as usize] = true;
                    }
                }
                hit.iter().all(|&h| h)
            })
            .unwrap()
    }

    #[test]
    fn n_exact_examples() {
        assert_eq!(n_exact(5, 7, 8).unwrap(), 2);
        assert_eq!(n_exact(5, 1, 1).unwrap(), 2);
        for a in 1..=200u64 {
            assert_eq!(n_exact(a, 1, 1).unwrap(), (a - 1).div_ceil(2), "a={a}");
        }
        assert!(matches!(
            n_exact(6, 2, 4),
            Err(NfuncError::NotCoverable { gcd: 2, .. })
        ));
        assert_eq!(n_exact(1, 5, 9).unwrap(), 0);
    }

    #[test]
    fn n_exact_matches_brute_force() {
        for a in 1..=25u64 {
            for b in 0..a {
                for c in 0..a {
                    if gcd(a, gcd(b, c)) != 1 {
                        continue;
                    }
                    assert_eq!(n_exact(a, b, c).unwrap(), n_brute(a, b, c), "({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce_to_unit(5, 7, 8).unwrap(), 4);
        assert_eq!(reduce_to_unit(7, 1, 5).unwrap(), 5);
        assert_eq!(reduce_to_unit(9, 2, 2).unwrap(), 1);
        assert!(matches!(
            reduce_to_unit(6, 4, 5),
            Err(NfuncError::NotInvertible(_))
        ));
    }

    #[test]
    fn n_unit_examples() {
        assert_eq!(n_unit(5, 4), 2);
        assert_eq!(n_unit(5, 4), n_exact(5, 1, 4).unwrap());
        for a in 1..=50u64 {
            assert_eq!(n_unit(a, 0), a - 1, "a={a}");
        }
        let v = n_unit(89, 34);
        assert_eq!(v, n_exact(89, 1, 34).unwrap());
        assert!((4..=27).contains(&v));
    }

    #[test]
    fn gap_examples() {
        let g = gap_profile(5, 4, 5).unwrap();
        assert_eq!(g.gaps, vec![1; 5]);
        assert_eq!(g.max_gap, 1);

        let g = gap_profile(89, 34, 13).unwrap();
        // 89/13 + 12 * (3/1157) * 89 = 125/13
        let bound = Rational::new(89, 13) + Rational::new(3, 1157).mul_int(89 * 12);
        assert_eq!(bound, Rational::new(125, 13));
        assert!(Rational::from_int(g.max_gap as u128) <= bound);
        assert!(g.max_gap <= 9);
        assert_eq!(g.gaps.iter().sum::<u64>(), 89);

        let g = gap_profile(10, 2, 5).unwrap();
        assert_eq!(g.max_gap, 2);
        assert_eq!(g.gaps, vec![2; 5]);

        assert_eq!(
            gap_profile(10, 2, 6),
            Err(NfuncError::DuplicateMultiple {
                first: 0,
                second: 5
            })
        );
        assert!(gap_profile(10, 2, 0).is_err());
    }

    #[test]
    fn cf_bounds_examples() {
        let r = cf_n_bounds(5, 7, 8).unwrap();
        assert_eq!(r.t, 4);
        assert_eq!(r.n_exact, 2);
        let last = r.per_convergent.iter().find(|c| c.q == 5).unwrap();
        assert!(last.delta.is_zero());
        assert_eq!(last.upper_proxy, Rational::from_int(6));
        assert_eq!(last.lower_proxy, Rational::ONE);

        let r = cf_n_bounds(89, 1, 34).unwrap();
        let row = r.per_convergent.iter().find(|c| c.q == 13).unwrap();
        assert_eq!(row.delta, Rational::new(3, 1157));
        assert_eq!(row.lower_proxy, Rational::new(89, 13));
        assert_eq!(
            row.upper_proxy,
            Rational::new(89, 13) + Rational::from_int(13)
        );

        for a in [2u64, 7, 30, 101] {
            let r = cf_n_bounds(a, 1, 1).unwrap();
            assert_eq!(r.t, 1);
            let q1 = r.per_convergent.iter().find(|c| c.q == 1).unwrap();
            assert_eq!(q1.upper_proxy, Rational::from_int(a as u128 + 1));
            assert!(Rational::from_int(r.n_exact as u128) <= q1.upper_proxy);
        }
    }

    #[test]
    fn cf_bounds_swaps_when_b_shares_a_factor() {
        let r = cf_n_bounds(6, 4, 5).unwrap();
        assert_eq!(r.t, reduce_to_unit(6, 5, 4).unwrap());
        assert_eq!(r.n_exact, n_exact(6, 4, 5).unwrap());
        assert!(cf_n_bounds(6, 2, 3).is_err());
    }
}

//! Exact integer arithmetic: gcd, modular inverses, Euler's totient and
//! continued-fraction approximation of rationals.
//!
//! Nothing in here touches floating point except [`Rational::to_f64`], which
//! exists for report columns only.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::ArithError;

/// Greatest common divisor, with `gcd(0, 0) = 0`.
pub fn gcd(mut x: u64, mut y: u64) -> u64 {
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    x
}

fn gcd_u128(mut x: u128, mut y: u128) -> u128 {
    while y != 0 {
        let r = x % y;
        x = y;
        y = r;
    }
    x
}

/// Extended Euclid: returns `(g, s, t)` with `g = gcd(|x|, |y|)` and
/// `s*x + t*y = g`.
pub fn ext_gcd(x: i64, y: i64) -> Result<(u64, i64, i64), ArithError> {
    if x == 0 && y == 0 {
        return Err(ArithError::BothZero);
    }
    // Work in i128 so that |i64::MIN| and the intermediate cofactors fit.
    let (mut r0, mut r1) = (x as i128, y as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        r0 = -r0;
        s0 = -s0;
        t0 = -t0;
    }
    let s = i64::try_from(s0).map_err(|_| ArithError::Overflow)?;
    let t = i64::try_from(t0).map_err(|_| ArithError::Overflow)?;
    Ok((r0 as u64, s, t))
}

/// Inverse of `x` modulo `m`, normalized into `[1, m-1]`.
pub fn mod_inv(x: i64, m: u64) -> Result<u64, ArithError> {
    if m < 2 {
        return Err(ArithError::ModulusTooSmall(m));
    }
    let m_i = i64::try_from(m).map_err(|_| ArithError::Overflow)?;
    let reduced = x.rem_euclid(m_i);
    let (g, s, _) = ext_gcd(reduced, m_i)?;
    if g != 1 {
        return Err(ArithError::NotInvertible { x, m, gcd: g });
    }
    Ok(s.rem_euclid(m_i) as u64)
}

/// `(x * y) mod m` through a 128-bit intermediate. Operands are reduced first.
pub fn mod_mul(x: u64, y: u64, m: u64) -> Result<u64, ArithError> {
    if m == 0 {
        return Err(ArithError::ModulusTooSmall(0));
    }
    let m = m as u128;
    Ok(((x as u128 % m) * (y as u128 % m) % m) as u64)
}

/// Largest `n` for which [`euler_phi`] promises trial division finishes quickly.
pub const EULER_PHI_MAX: u64 = 1_000_000_000_000;

/// Euler's totient by trial-division factorization.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi is defined for n >= 1");
    let mut rest = n;
    let mut phi = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest % p == 0 {
            while rest % p == 0 {
                rest /= p;
            }
            phi -= phi / p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        phi -= phi / rest;
    }
    phi
}

/// Nonnegative rational number kept in lowest terms.
///
/// Ordering is decided exactly by a continued-fraction style comparison
/// (compare integer parts, then recurse on the reciprocal remainders), so it
/// never overflows regardless of the magnitudes involved.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Rational {
    num: u128,
    den: u128,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: u128, den: u128) -> Rational {
        assert!(den != 0, "rational with zero denominator");
        let g = gcd_u128(num, den);
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    pub fn from_int(n: u128) -> Rational {
        Rational { num: n, den: 1 }
    }

    pub fn num(&self) -> u128 {
        self.num
    }

    pub fn den(&self) -> u128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// `None` for zero.
    pub fn recip(&self) -> Option<Rational> {
        (self.num != 0).then_some(Rational {
            num: self.den,
            den: self.num,
        })
    }

    pub fn floor(&self) -> u128 {
        self.num / self.den
    }

    pub fn ceil(&self) -> u128 {
        self.num.div_ceil(self.den)
    }

    pub fn checked_add(&self, other: &Rational) -> Option<Rational> {
        let g = gcd_u128(self.den, other.den);
        let lhs = self.num.checked_mul(other.den / g)?;
        let rhs = other.num.checked_mul(self.den / g)?;
        let den = (self.den / g).checked_mul(other.den)?;
        Some(Rational::new(lhs.checked_add(rhs)?, den))
    }

    pub fn checked_mul(&self, other: &Rational) -> Option<Rational> {
        let g1 = gcd_u128(self.num, other.den);
        let g2 = gcd_u128(other.num, self.den);
        let num = (self.num / g1.max(1)).checked_mul(other.num / g2.max(1))?;
        let den = (self.den / g2.max(1)).checked_mul(other.den / g1.max(1))?;
        Some(Rational::new(num, den))
    }

    pub fn mul_int(&self, k: u128) -> Rational {
        self.checked_mul(&Rational::from_int(k))
            .expect("rational product exceeds 128 bits")
    }

    /// Report-only conversion.
    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl std::ops::Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        self.checked_add(&rhs)
            .expect("rational sum exceeds 128 bits")
    }
}

impl std::ops::Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        self.checked_mul(&rhs)
            .expect("rational product exceeds 128 bits")
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.num, self.den);
        let (mut c, mut d) = (other.num, other.den);
        // Each round flips the sense of the comparison because we move to
        // reciprocals of the fractional parts.
        let mut flipped = false;
        loop {
            let (qa, ra) = (a / b, a % b);
            let (qc, rc) = (c / d, c % d);
            let ord = match qa.cmp(&qc) {
                Ordering::Equal => match (ra == 0, rc == 0) {
                    (true, true) => Ordering::Equal,
                    (true, false) => Ordering::Less,
                    (false, true) => Ordering::Greater,
                    (false, false) => {
                        // ra/b < rc/d  <=>  b/ra > d/rc
                        (a, b, c, d) = (b, ra, d, rc);
                        flipped = !flipped;
                        continue;
                    }
                },
                o => o,
            };
            return if flipped { ord.reverse() } else { ord };
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// One continued-fraction convergent `p/q` of `num/den`, with its exact error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Convergent {
    pub p: u64,
    pub q: u64,
    /// `|num/den - p/q|`, exact.
    pub delta: Rational,
    pub index: usize,
}

impl Convergent {
    /// `delta <= 1/q^2`, decided in integers.
    pub fn within_dirichlet(&self) -> bool {
        self.delta <= Rational::new(1, (self.q as u128) * (self.q as u128))
    }
}

/// Partial quotients `[a0; a1, ..., ak]` of `num/den`. The last quotient is
/// at least 2 whenever `k >= 1`, which the Euclidean algorithm gives for free.
pub fn cf_expand(num: u64, den: u64) -> Vec<u64> {
    assert!(den >= 1, "continued fraction of x/0");
    let (mut x, mut y) = (num, den);
    let mut quotients = Vec::new();
    loop {
        quotients.push(x / y);
        let r = x % y;
        if r == 0 {
            break;
        }
        x = y;
        y = r;
    }
    quotients
}

fn abs_diff_delta(num: u64, den: u64, p: u64, q: u64) -> Rational {
    let lhs = num as u128 * q as u128;
    let rhs = p as u128 * den as u128;
    Rational::new(lhs.abs_diff(rhs), den as u128 * q as u128)
}

/// All convergents of `num/den`, in order, each carrying its exact `delta`.
pub fn convergents(num: u64, den: u64) -> Vec<Convergent> {
    let quotients = cf_expand(num, den);
    let mut out = Vec::with_capacity(quotients.len());
    // p_{-2}=0, p_{-1}=1, q_{-2}=1, q_{-1}=0
    let (mut p_prev2, mut p_prev1) = (0u128, 1u128);
    let (mut q_prev2, mut q_prev1) = (1u128, 0u128);
    for (index, &a) in quotients.iter().enumerate() {
        let p = a as u128 * p_prev1 + p_prev2;
        let q = a as u128 * q_prev1 + q_prev2;
        // Convergents of num/den never exceed num/g and den/g.
        let (p64, q64) = (p as u64, q as u64);
        out.push(Convergent {
            p: p64,
            q: q64,
            delta: abs_diff_delta(num, den, p64, q64),
            index,
        });
        (p_prev2, p_prev1) = (p_prev1, p);
        (q_prev2, q_prev1) = (q_prev1, q);
    }
    out
}

/// Convergent with `q <= max_q` and `delta <= 1/(q * max_q)`: the last
/// convergent whose denominator does not exceed `max_q`.
pub fn dirichlet_approx(num: u64, den: u64, max_q: u64) -> Convergent {
    assert!(max_q >= 1, "Dirichlet bound must be positive");
    convergents(num, den)
        .into_iter()
        .take_while(|c| c.q <= max_q)
        .last()
        .expect("the first convergent always has q = 1")
}

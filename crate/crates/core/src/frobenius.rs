//! Frobenius numbers via the residue (Apéry) table, plus a sieve that serves
//! as an independent oracle.
//!
//! For a modulus `m` drawn from the generators, the table holds the least
//! representable integer in every residue class mod `m`. The Frobenius number
//! is then `max(table) - m` (Brauer–Shockley).

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::Serialize;

use crate::arith::gcd;
use crate::error::FrobeniusError;

/// Generators `(a, b, c)` with `gcd(a, b, c) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triple {
    a: u64,
    b: u64,
    c: u64,
}

impl Triple {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Triple, FrobeniusError> {
        if a == 0 || b == 0 || c == 0 {
            return Err(FrobeniusError::ZeroGenerator);
        }
        let g = gcd(a, gcd(b, c));
        if g != 1 {
            return Err(FrobeniusError::NotCoprime {
                gens: vec![a, b, c],
                gcd: g,
            });
        }
        Ok(Triple { a, b, c })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn as_array(&self) -> [u64; 3] {
        [self.a, self.b, self.c]
    }

    /// `a * b * c`, exact.
    pub fn product(&self) -> u128 {
        self.a as u128 * self.b as u128 * self.c as u128
    }
}

/// Least representable value in every residue class modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueTable {
    modulus: u64,
    entries: Vec<u64>,
}

impl ResidueTable {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn entry(&self, residue: u64) -> u64 {
        self.entries[(residue % self.modulus) as usize]
    }

    /// Largest entry minus the modulus; `-1` when every entry is its own residue
    /// (only possible for `modulus = 1`).
    pub fn frobenius(&self) -> i64 {
        let max = self.entries.iter().copied().max().unwrap_or(0);
        max as i64 - self.modulus as i64
    }

    /// Membership in the semigroup generated by the modulus and the table's
    /// generators.
    pub fn contains(&self, n: u64) -> bool {
        n >= self.entry(n)
    }

    /// Runs one more relaxation over `gens` and reports whether any entry
    /// would improve.
    pub fn is_fixed_point(&self, gens: &[u64]) -> bool {
        let m = self.modulus;
        gens.iter().all(|&g| {
            let step = g % m;
            (0..m).all(|r| {
                let next = ((r + step) % m) as usize;
                self.entries[r as usize].saturating_add(g) >= self.entries[next]
            })
        })
    }
}

fn validate(modulus: u64, gens: &[u64]) -> Result<(), FrobeniusError> {
    if gens.is_empty() {
        return Err(FrobeniusError::NoGenerators);
    }
    if modulus == 0 || gens.contains(&0) {
        return Err(FrobeniusError::ZeroGenerator);
    }
    let g = gens.iter().fold(modulus, |acc, &x| gcd(acc, x));
    if g != 1 {
        let mut all = vec![modulus];
        all.extend_from_slice(gens);
        return Err(FrobeniusError::NotCoprime { gens: all, gcd: g });
    }
    Ok(())
}

/// One round-robin pass for generator `g`: the edges `r -> r + g` split the
/// residues into `gcd(g, m)` cycles, and walking each cycle once from its
/// current minimum settles every entry for this generator.
fn relax_generator(entries: &mut [u64], g: u64) -> bool {
    let m = entries.len() as u64;
    let step = g % m;
    if step == 0 {
        return false;
    }
    let cycles = gcd(step, m);
    let cycle_len = m / cycles;
    let mut changed = false;
    for start in 0..cycles {
        let mut best = start;
        // entries[0] = 0 is the global minimum, so the cycle through 0 needs no search.
        if start != 0 {
            let mut r = start;
            for _ in 0..cycle_len {
                if entries[r as usize] < entries[best as usize] {
                    best = r;
                }
                r += step;
                if r >= m {
                    r -= m;
                }
            }
        }
        if entries[best as usize] == u64::MAX {
            continue;
        }
        let mut cur = best;
        for _ in 1..cycle_len {
            let mut next = cur + step;
            if next >= m {
                next -= m;
            }
            let candidate = entries[cur as usize] + g;
            if candidate < entries[next as usize] {
                entries[next as usize] = candidate;
                changed = true;
            }
            cur = next;
        }
    }
    changed
}

/// Residue table by round-robin relaxation, repeated until a full pass over
/// the generators changes nothing.
pub fn apery_table(modulus: u64, gens: &[u64]) -> Result<ResidueTable, FrobeniusError> {
    validate(modulus, gens)?;
    let mut entries = vec![u64::MAX; modulus as usize];
    entries[0] = 0;
    loop {
        let mut changed = false;
        for &g in gens {
            changed |= relax_generator(&mut entries, g);
        }
        if !changed {
            break;
        }
    }
    Ok(ResidueTable { modulus, entries })
}

impl ResidueTable {
    /// Table for the current generators plus `g`. A single round-robin pass
    /// suffices when the starting table is already exact.
    pub fn with_generator(&self, g: u64) -> ResidueTable {
        assert!(g > 0, "generators must be positive");
        let mut entries = self.entries.clone();
        relax_generator(&mut entries, g);
        ResidueTable {
            modulus: self.modulus,
            entries,
        }
    }

    /// Frobenius number after adding `g`, without keeping the extended table.
    pub fn frobenius_with(&self, g: u64, scratch: &mut Vec<u64>) -> i64 {
        scratch.clear();
        scratch.extend_from_slice(&self.entries);
        relax_generator(scratch, g);
        let max = scratch.iter().copied().max().unwrap_or(0);
        max as i64 - self.modulus as i64
    }
}

/// Label-setting (Dijkstra) variant of [`apery_table`]. Kept as a cross-check.
pub fn apery_table_dijkstra(modulus: u64, gens: &[u64]) -> Result<ResidueTable, FrobeniusError> {
    validate(modulus, gens)?;
    let m = modulus as usize;
    let mut entries = vec![u64::MAX; m];
    let mut settled = vec![false; m];
    let mut heap = BinaryHeap::new();
    entries[0] = 0;
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((dist, r))) = heap.pop() {
        if settled[r] {
            continue;
        }
        settled[r] = true;
        for &g in gens {
            let next = (r + (g % modulus) as usize) % m;
            let candidate = dist + g;
            if candidate < entries[next] {
                entries[next] = candidate;
                heap.push(Reverse((candidate, next)));
            }
        }
    }
    Ok(ResidueTable { modulus, entries })
}

/// Frobenius number of the triple; `-1` when a generator equals 1.
pub fn frobenius_number(t: &Triple) -> i64 {
    let mut gens = t.as_array();
    gens.sort_unstable();
    if gens[0] == 1 {
        return -1;
    }
    apery_table(gens[0], &gens[1..])
        .expect("triple invariants guarantee a valid table")
        .frobenius()
}

/// Convenience wrapper that validates `(a, b, c)` first.
pub fn frobenius(a: u64, b: u64, c: u64) -> Result<i64, FrobeniusError> {
    Triple::new(a, b, c).map(|t| frobenius_number(&t))
}

/// `a*b - a - b` for a coprime pair; `-1` if either is 1.
pub fn frobenius_two(a: u64, b: u64) -> Result<i64, FrobeniusError> {
    if a == 0 || b == 0 {
        return Err(FrobeniusError::ZeroGenerator);
    }
    let g = gcd(a, b);
    if g != 1 {
        return Err(FrobeniusError::NotCoprime {
            gens: vec![a, b],
            gcd: g,
        });
    }
    if a == 1 || b == 1 {
        return Ok(-1);
    }
    Ok(a as i64 * b as i64 - a as i64 - b as i64)
}

/// Whether `n` is a nonnegative integer combination of `gens`.
pub fn is_representable(n: u64, gens: &[u64]) -> Result<bool, FrobeniusError> {
    if gens.is_empty() {
        return Err(FrobeniusError::NoGenerators);
    }
    if gens.contains(&0) {
        return Err(FrobeniusError::ZeroGenerator);
    }
    let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
    if n % d != 0 {
        return Ok(false);
    }
    let reduced: Vec<u64> = gens.iter().map(|g| g / d).collect();
    let modulus = *reduced.iter().min().expect("nonempty");
    let table = apery_table(modulus, &reduced)?;
    Ok(table.contains(n / d))
}

/// Outcome of the sieve: the certified Frobenius number, or `NotFound` when
/// the bound is too small to certify it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SieveOutcome {
    Certified(i64),
    NotFound,
}

#[derive(Clone, Debug)]
pub struct SieveResult {
    pub representable: Vec<bool>,
    pub outcome: SieveOutcome,
}

/// Forward dynamic program over `[0, bound]`: a position is representable iff
/// it is 0 or some generator steps back onto a representable position. The
/// largest gap is certified once `max(gens)` consecutive positions at the
/// tail are all representable.
pub fn sieve_oracle(gens: &[u64], bound: u64) -> SieveResult {
    assert!(!gens.is_empty(), "sieve needs generators");
    let len = bound as usize + 1;
    let mut representable = vec![false; len];
    representable[0] = true;
    for n in 1..len {
        representable[n] = gens
            .iter()
            .any(|&g| g as usize <= n && representable[n - g as usize]);
    }
    let max_gen = *gens.iter().max().unwrap() as usize;
    let tail_ok = max_gen <= len && representable[len - max_gen..].iter().all(|&x| x);
    let outcome = if tail_ok {
        let largest = representable.iter().rposition(|&x| !x);
        SieveOutcome::Certified(largest.map_or(-1, |i| i as i64))
    } else {
        SieveOutcome::NotFound
    };
    SieveResult {
        representable,
        outcome,
    }
}

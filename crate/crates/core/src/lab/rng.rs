/// 64-bit linear congruential generator with the PCG/Knuth MMIX constants.
///
/// Each step is `state = state * 6364136223846793005 + 1442695040888963407`
/// (wrapping) and the output is the high 32 bits of the new state. The seed
/// is the initial state. Kept this simple so other implementations can
/// reproduce the same sample streams.
#[derive(Clone, Debug)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub const MULTIPLIER: u64 = 6_364_136_223_846_793_005;
    pub const INCREMENT: u64 = 1_442_695_040_888_963_407;

    pub fn new(seed: u64) -> Lcg64 {
        Lcg64 { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(Self::MULTIPLIER)
            .wrapping_add(Self::INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform in `[0, n)` by rejecting draws from the incomplete top block.
    pub fn below(&mut self, n: u32) -> u32 {
        assert!(n > 0, "empty range");
        let limit = (1u64 << 32) / n as u64 * n as u64;
        loop {
            let x = self.next_u32() as u64;
            if x < limit {
                return (x % n as u64) as u32;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_outputs_are_pinned() {
        let mut rng = Lcg64::new(0);
        // state1 = INCREMENT, state2 = INCREMENT * (MULTIPLIER + 1) mod 2^64
        let s1 = Lcg64::INCREMENT;
        let s2 = s1
            .wrapping_mul(Lcg64::MULTIPLIER)
            .wrapping_add(Lcg64::INCREMENT);
        assert_eq!(rng.next_u32(), (s1 >> 32) as u32);
        assert_eq!(rng.next_u32(), (s2 >> 32) as u32);
    }

    #[test]
    fn below_stays_in_range() {
        let mut rng = Lcg64::new(42);
        let mut seen = [0usize; 7];
        for _ in 0..7000 {
            seen[rng.below(7) as usize] += 1;
        }
        assert!(seen.iter().all(|&k| k > 800));
    }
}

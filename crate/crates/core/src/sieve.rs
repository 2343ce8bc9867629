//! Segmented sieves for μ(n) and Λ(n).
//!
//! A segment `[lo, hi)` is sieved with the primes up to `√(hi-1)`. Segments
//! are independent and share only the immutable [`PrimeTable`].

use thiserror::Error;

/// Default segment width, 2^22 integers.
pub const DEFAULT_SEGMENT_SIZE: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SieveError {
    #[error("invalid segment [{lo}, {hi})")]
    InvalidSegment { lo: u64, hi: u64 },
    #[error("insufficient base primes: sieved to {have}, need {need}")]
    InsufficientBasePrimes { have: u64, need: u64 },
}

/// Half-open integer range `[lo, hi)` with `1 <= lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    lo: u64,
    hi: u64,
}

impl Segment {
    pub fn new(lo: u64, hi: u64) -> Result<Self, SieveError> {
        if lo >= 1 && hi > lo {
            Ok(Segment { lo, hi })
        } else {
            Err(SieveError::InvalidSegment { lo, hi })
        }
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, n: u64) -> bool {
        self.lo <= n && n < self.hi
    }

    /// Tiles `[lo, hi)` with consecutive segments of at most `width` integers.
    pub fn tile(lo: u64, hi: u64, width: u64) -> impl Iterator<Item = Segment> {
        let width = width.max(1);
        let mut start = lo.max(1);
        std::iter::from_fn(move || {
            if start >= hi {
                return None;
            }
            let end = start.saturating_add(width).min(hi);
            let seg = Segment { lo: start, hi: end };
            start = end;
            Some(seg)
        })
    }
}

pub fn isqrt(n: u64) -> u64 {
    if n < 2 {
        return n;
    }
    let mut r = (n as f64).sqrt() as u64;
    while r.checked_mul(r).is_none_or(|s| s > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|s| s <= n) {
        r += 1;
    }
    r
}

/// All primes `<= limit`, ascending.
pub fn base_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Base primes together with the limit they were sieved to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn new(limit: u64) -> Self {
        PrimeTable {
            limit,
            primes: base_primes(limit),
        }
    }

    /// Table sufficient for every segment ending at or below `hi` (exclusive).
    pub fn for_range_end(hi: u64) -> Self {
        Self::new(isqrt(hi.saturating_sub(1)).max(2))
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    fn check(&self, segment: &Segment) -> Result<&[u64], SieveError> {
        let need = isqrt(segment.hi - 1);
        if self.limit < need {
            return Err(SieveError::InsufficientBasePrimes {
                have: self.limit,
                need,
            });
        }
        let end = self.primes.partition_point(|&p| p <= need);
        Ok(&self.primes[..end])
    }
}

/// μ(n) for every n in a segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusBlock {
    pub segment: Segment,
    pub values: Vec<i8>,
}

impl MobiusBlock {
    pub fn mu(&self, n: u64) -> i8 {
        self.values[(n - self.segment.lo) as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, i8)> + '_ {
        (self.segment.lo..).zip(self.values.iter().copied())
    }

    /// Sum of μ over the block.
    pub fn sum(&self) -> i64 {
        self.values.iter().map(|&v| v as i64).sum()
    }

    /// Number of squarefree integers in the block.
    pub fn squarefree_count(&self) -> i64 {
        self.values.iter().filter(|&&v| v != 0).count() as i64
    }
}

/// Sieves μ over `segment` by dividing out the base primes.
///
/// Each base prime flips the sign of its multiples and multiplies it into a
/// running product; multiples of p² are zeroed. A squarefree n whose product
/// falls short of n has exactly one remaining prime factor above √(hi-1).
pub fn sieve_mobius(segment: Segment, table: &PrimeTable) -> Result<MobiusBlock, SieveError> {
    let primes = table.check(&segment)?;
    let (lo, hi) = (segment.lo, segment.hi);
    let len = segment.len();
    let mut values = vec![1i8; len];
    let mut product = vec![1u64; len];
    for &p in primes {
        let mut m = lo.div_ceil(p) * p;
        while m < hi {
            let i = (m - lo) as usize;
            values[i] = -values[i];
            product[i] *= p;
            m += p;
        }
        let p2 = p * p;
        let mut m = lo.div_ceil(p2) * p2;
        while m < hi {
            values[(m - lo) as usize] = 0;
            m += p2;
        }
    }
    for (i, n) in (lo..hi).enumerate() {
        if values[i] != 0 && product[i] != n {
            values[i] = -values[i];
        }
    }
    Ok(MobiusBlock { segment, values })
}

/// A prime power `n = p^k` with `k >= 1`; Λ(n) = log p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimePower {
    pub n: u64,
    pub p: u64,
    pub k: u32,
}

/// The prime powers of a segment, sorted by n. Λ vanishes elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MangoldtBlock {
    pub segment: Segment,
    pub entries: Vec<PrimePower>,
}

pub fn sieve_mangoldt(segment: Segment, table: &PrimeTable) -> Result<MangoldtBlock, SieveError> {
    let primes = table.check(&segment)?;
    let (lo, hi) = (segment.lo, segment.hi);
    let len = segment.len();
    let mut composite = vec![false; len];
    if lo == 1 {
        composite[0] = true;
    }
    let mut powers = Vec::new();
    for &p in primes {
        let mut m = (lo.div_ceil(p) * p).max(p * p);
        while m < hi {
            composite[(m - lo) as usize] = true;
            m += p;
        }
        let mut q = p;
        let mut k = 1;
        while let Some(next) = q.checked_mul(p) {
            if next >= hi {
                break;
            }
            q = next;
            k += 1;
            if q >= lo {
                powers.push(PrimePower { n: q, p, k });
            }
        }
    }
    let mut entries: Vec<PrimePower> = composite
        .iter()
        .enumerate()
        .filter(|(_, &c)| !c)
        .map(|(i, _)| {
            let n = lo + i as u64;
            PrimePower { n, p: n, k: 1 }
        })
        .collect();
    entries.extend(powers);
    entries.sort_unstable();
    Ok(MangoldtBlock { segment, entries })
}

#[cfg(test)]
pub(crate) mod oracle {
    //! Trial-division reference implementations.

    pub fn mu(mut n: u64) -> i8 {
        let mut sign = 1i8;
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                n /= p;
                if n % p == 0 {
                    return 0;
                }
                sign = -sign;
            }
            p += 1;
        }
        if n > 1 {
            sign = -sign;
        }
        sign
    }

    /// `Some((p, k))` when n = p^k.
    pub fn prime_power(n: u64) -> Option<(u64, u32)> {
        if n < 2 {
            return None;
        }
        let mut p = 2;
        while p * p <= n {
            if n % p == 0 {
                let mut m = n;
                let mut k = 0;
                while m % p == 0 {
                    m /= p;
                    k += 1;
                }
                return if m == 1 { Some((p, k)) } else { None };
            }
            p += 1;
        }
        Some((n, 1))
    }

    pub fn is_prime(n: u64) -> bool {
        matches!(prime_power(n), Some((_, 1)))
    }
}

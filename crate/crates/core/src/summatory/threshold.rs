//! Last crossing of `|M(x)| = x/K`, resumable.

use serde::{Deserialize, Serialize};

use super::{run_segments, Summatory};
use crate::error::{Error, Result};
use crate::sieve::sieve_mobius;

/// Progress of an exceedance scan over `[1, x]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceedanceState {
    pub x: u64,
    /// `M(x)`.
    pub mertens: i64,
    /// Largest `n <= x` with `|M(n)| > n/K`.
    pub last: Option<u64>,
}

impl ExceedanceState {
    pub const START: ExceedanceState = ExceedanceState {
        x: 0,
        mertens: 0,
        last: None,
    };
}

impl Summatory {
    /// Continues `from` up to `hi`, reporting the state after every segment.
    /// The comparison `|M(n)|·K > n` is exact.
    pub fn last_exceedance(
        &self,
        k: u64,
        hi: u64,
        from: ExceedanceState,
        mut sink: impl FnMut(&ExceedanceState) -> Result<()>,
    ) -> Result<ExceedanceState> {
        if k == 0 {
            return Err(Error::InvalidArgument("K must be positive".into()));
        }
        if from.x > hi {
            return Err(Error::IncompatibleCheckpoint(format!(
                "scan state at {} lies beyond the target {hi}",
                from.x
            )));
        }
        let mut state = from;
        run_segments(
            self.config(),
            from.x + 1,
            hi,
            from.mertens,
            |seg, table| {
                let block = sieve_mobius(seg, table)?;
                let total = block.sum();
                Ok((block, total))
            },
            |a, b| a + b,
            |block, offset| {
                let (mut m, mut end, mut last) = (*offset, 0, None);
                for (n, mu) in block.iter() {
                    m += mu as i64;
                    if m.unsigned_abs() as u128 * k as u128 > n as u128 {
                        last = Some(n);
                    }
                    end = n;
                }
                (end, m, last)
            },
            |(end, m, last)| {
                state.x = end;
                state.mertens = m;
                state.last = last.or(state.last);
                sink(&state)
            },
        )?;
        Ok(state)
    }
}

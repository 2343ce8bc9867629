//! Segment driver shared by every scan.
//!
//! A batch of segments is sieved and locally summed concurrently (`produce`),
//! the segment offsets are then folded in ascending order, and the offset is
//! applied to each segment's local marks concurrently (`finish`). Results are
//! delivered to the sink strictly in ascending order.

use crate::decimal::Decimal;
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::sieve::{PrimeTable, Segment, DEFAULT_SEGMENT_SIZE};

/// Environment variable overriding the default scan ceiling.
pub const SCAN_CEILING_ENV: &str = "MERTENS_SCAN_CEILING";
pub const DEFAULT_SCAN_CEILING: u64 = 20_000_000_000;
pub const DEFAULT_STRIDE: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanConfig {
    pub segment_size: u64,
    pub ceiling: u64,
    pub execution: Execution,
    /// Segments handed to the worker pool at once; 0 means two per worker.
    pub batch: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            segment_size: DEFAULT_SEGMENT_SIZE,
            ceiling: DEFAULT_SCAN_CEILING,
            execution: Execution::default(),
            batch: 0,
        }
    }
}

impl ScanConfig {
    /// Defaults, with the ceiling taken from `MERTENS_SCAN_CEILING` if set.
    pub fn from_env() -> Result<Self> {
        let mut cfg = ScanConfig::default();
        if let Ok(raw) = std::env::var(SCAN_CEILING_ENV) {
            cfg.ceiling = raw.parse::<Decimal>()?.to_u64()?;
        }
        Ok(cfg)
    }

    pub fn serial(mut self) -> Self {
        self.execution = Execution::Serial;
        self
    }

    pub fn with_segment_size(mut self, size: u64) -> Self {
        self.segment_size = size.max(1);
        self
    }

    pub fn with_ceiling(mut self, ceiling: u64) -> Self {
        self.ceiling = ceiling;
        self
    }

    pub fn check_ceiling(&self, x: u64) -> Result<()> {
        if x > self.ceiling {
            return Err(Error::CeilingExceeded {
                requested: x,
                ceiling: self.ceiling,
            });
        }
        Ok(())
    }

    fn batch_len(&self) -> usize {
        if self.batch > 0 {
            self.batch
        } else if self.execution.is_parallel() {
            2 * par::worker_count().max(1)
        } else {
            1
        }
    }
}

/// Runs `[first, last]` through produce / ordered offset fold / finish.
///
/// `produce` returns a segment's payload and its local total; `finish`
/// receives the payload and the state just before the segment.
pub(crate) fn run_segments<B, T, R, P, C, F, S>(
    cfg: &ScanConfig,
    first: u64,
    last: u64,
    init: T,
    produce: P,
    combine: C,
    finish: F,
    mut sink: S,
) -> Result<T>
where
    B: Send,
    T: Clone + Send + Sync,
    R: Send,
    P: Fn(Segment, &PrimeTable) -> Result<(B, T)> + Sync + Send,
    C: Fn(&T, &T) -> T,
    F: Fn(B, &T) -> R + Sync + Send,
    S: FnMut(R) -> Result<()>,
{
    cfg.check_ceiling(last)?;
    let mut state = init;
    if first > last {
        return Ok(state);
    }
    let table = PrimeTable::for_range_end(last + 1);
    let mut tiles = Segment::tile(first, last + 1, cfg.segment_size).peekable();
    let batch = cfg.batch_len();
    while tiles.peek().is_some() {
        let segments: Vec<Segment> = tiles.by_ref().take(batch).collect();
        let produced = par::map_ordered(cfg.execution, segments, |seg| produce(seg, &table));
        let mut work = Vec::with_capacity(produced.len());
        for item in produced {
            let (payload, total) = item?;
            let offset = state.clone();
            state = combine(&state, &total);
            work.push((payload, offset));
        }
        let finished = par::map_ordered(cfg.execution, work, |(payload, offset)| finish(payload, &offset));
        for r in finished {
            sink(r)?;
        }
    }
    Ok(state)
}

/// Positions inside a scan where the running value must be reported.
#[derive(Debug, Clone, Copy)]
pub(crate) enum MarkPlan<'a> {
    /// Multiples of `stride`, plus `last`.
    Stride { stride: u64, last: u64 },
    /// An ascending list without duplicates.
    Points(&'a [u64]),
}

impl MarkPlan<'_> {
    /// Marks in `[lo, hi)`, ascending.
    pub(crate) fn marks_in(&self, lo: u64, hi: u64) -> Vec<u64> {
        match *self {
            MarkPlan::Stride { stride, last } => {
                let stride = stride.max(1);
                let mut out: Vec<u64> = (lo.div_ceil(stride)..)
                    .map(|k| k * stride)
                    .take_while(|&m| m < hi)
                    .collect();
                if (lo..hi).contains(&last) && out.last() != Some(&last) {
                    out.push(last);
                }
                out
            }
            MarkPlan::Points(points) => {
                let a = points.partition_point(|&p| p < lo);
                let b = points.partition_point(|&p| p < hi);
                points[a..b].to_vec()
            }
        }
    }
}

/// Folds `step(acc, n)` over `lo..hi`, snapshotting after each mark.
#[inline]
pub(crate) fn walk_dense<A: Clone>(
    lo: u64,
    hi: u64,
    marks: &[u64],
    mut acc: A,
    mut step: impl FnMut(&mut A, u64),
) -> (Vec<(u64, A)>, A) {
    let mut out = Vec::with_capacity(marks.len());
    let mut n = lo;
    for &m in marks {
        while n <= m {
            step(&mut acc, n);
            n += 1;
        }
        out.push((m, acc.clone()));
    }
    while n < hi {
        step(&mut acc, n);
        n += 1;
    }
    (out, acc)
}

/// Like [`walk_dense`] but over sparse `items` keyed by `key`.
#[inline]
pub(crate) fn walk_sparse<I, A: Clone>(
    items: &[I],
    key: impl Fn(&I) -> u64,
    marks: &[u64],
    mut acc: A,
    mut step: impl FnMut(&mut A, &I),
) -> (Vec<(u64, A)>, A) {
    let mut out = Vec::with_capacity(marks.len());
    let mut i = 0;
    for &m in marks {
        while i < items.len() && key(&items[i]) <= m {
            step(&mut acc, &items[i]);
            i += 1;
        }
        out.push((m, acc.clone()));
    }
    for item in &items[i..] {
        step(&mut acc, item);
    }
    (out, acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stride_marks_include_last() {
        let plan = MarkPlan::Stride { stride: 10, last: 35 };
        assert_eq!(plan.marks_in(1, 36), vec![10, 20, 30, 35]);
        assert_eq!(plan.marks_in(11, 30), vec![20]);
        let plan = MarkPlan::Stride { stride: 10, last: 30 };
        assert_eq!(plan.marks_in(1, 31), vec![10, 20, 30]);
    }

    #[test]
    fn point_marks_slice() {
        let pts = [2, 5, 9, 20];
        assert_eq!(MarkPlan::Points(&pts).marks_in(3, 10), vec![5, 9]);
    }

    #[test]
    fn walks_snapshot_after_marks() {
        let (marks, total) = walk_dense(1, 11, &[3, 10], 0u64, |a, n| *a += n);
        assert_eq!(marks, vec![(3, 6), (10, 55)]);
        assert_eq!(total, 55);
        let items = [2u64, 4, 8];
        let (marks, total) = walk_sparse(&items, |&i| i, &[3, 5], 0u64, |a, &i| *a += i);
        assert_eq!(marks, vec![(3, 2), (5, 6)]);
        assert_eq!(total, 14);
    }

    #[test]
    fn driver_reports_in_order_and_refuses_ceiling() {
        let cfg = ScanConfig::default().with_segment_size(7).with_ceiling(100);
        let mut seen = Vec::new();
        let total = run_segments(
            &cfg,
            1,
            50,
            0u64,
            |seg, _| Ok((seg.lo(), (seg.lo()..seg.hi()).sum::<u64>())),
            |a, b| a + b,
            |lo, offset| (lo, *offset),
            |r| {
                seen.push(r);
                Ok(())
            },
        )
        .unwrap();
        assert_eq!(total, 50 * 51 / 2);
        assert_eq!(seen[0], (1, 0));
        assert_eq!(seen[1], (8, 28));
        assert!(seen.windows(2).all(|w| w[0].0 < w[1].0));
        let err = run_segments(&cfg, 1, 101, 0u64, |_, _| Ok(((), 0)), |a, b| a + b, |_, _| (), |_| Ok(()));
        assert!(matches!(err, Err(Error::CeilingExceeded { requested: 101, .. })));
    }
}

//! Parallel census and reverse-divisor search on a rayon pool.
//!
//! Work is split into fixed slices, scanned independently, and merged by a
//! sort, so the output does not depend on the worker count.

use ballnum_core::codes::{filter_mask_range, Code, CodeCensus, CodeKind, MAX_CENSUS_WIDTH};
use ballnum_core::revdiv::{
    carry_search, collect_hits, scan_cell, search_cells, RevDivRecord, DEFAULT_SEARCH_DIGITS,
    LARGE_SEARCH_DIGITS,
};
use ballnum_core::{Error, Result};
use rayon::prelude::*;

/// Environment variable holding the worker count.
pub const WORKERS_ENV: &str = "BALLNUM_WORKERS";

const SEARCH_CHUNK: u64 = 1 << 16;
const MASK_CHUNK: u64 = 1 << 14;

/// Worker count from [`WORKERS_ENV`], or the available parallelism.
pub fn worker_count() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn pool(workers: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool")
}

/// Same results as the serial search: the pruned scan split into cells up to
/// [`DEFAULT_SEARCH_DIGITS`] digits, the carry search split by quotient and
/// units digit above.
pub fn search_reverse_divisors(
    digit_count: usize,
    allow_large: bool,
    workers: usize,
) -> Result<Vec<RevDivRecord>> {
    if digit_count > DEFAULT_SEARCH_DIGITS {
        let max = if allow_large {
            LARGE_SEARCH_DIGITS
        } else {
            DEFAULT_SEARCH_DIGITS
        };
        if digit_count > max {
            return Err(Error::OutOfRange {
                what: "digit count",
                value: digit_count,
                min: 2,
                max,
            });
        }
        let parts: Vec<(u8, u8)> = (2..=9u8)
            .flat_map(|k| (0..=9u8).map(move |u| (k, u)))
            .collect();
        let hits: Vec<(u64, u8)> = pool(workers).install(|| {
            parts
                .par_iter()
                .flat_map_iter(|&(k, u)| {
                    carry_search(digit_count, k, u)
                        .into_iter()
                        .map(move |x| (x, k))
                })
                .collect()
        });
        return Ok(collect_hits(digit_count, hits));
    }
    let cells = search_cells(digit_count, SEARCH_CHUNK)?;
    let hits: Vec<(u64, u8)> = pool(workers).install(|| {
        cells
            .par_iter()
            .flat_map_iter(|c| scan_cell(c).into_iter().map(move |x| (x, c.quotient)))
            .collect()
    });
    Ok(collect_hits(digit_count, hits))
}

pub fn enumerate_codes(width: usize, workers: usize) -> Result<CodeCensus> {
    if !(2..=MAX_CENSUS_WIDTH).contains(&width) {
        return Err(Error::OutOfRange {
            what: "code width",
            value: width,
            min: 2,
            max: MAX_CENSUS_WIDTH,
        });
    }
    let total = 1u64 << width;
    let starts: Vec<u64> = (0..total).step_by(MASK_CHUNK as usize).collect();
    let mut bits: Vec<Vec<u8>> = pool(workers).install(|| {
        starts
            .par_iter()
            .flat_map_iter(|&s| filter_mask_range(width, s..(s + MASK_CHUNK).min(total)))
            .collect()
    });
    bits.sort();
    let codes = bits
        .into_iter()
        .map(|b| Code::new(b, CodeKind::Strict))
        .collect::<Result<Vec<_>>>()?;
    Ok(CodeCensus { width, codes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn search_independent_of_workers() {
        for n in 2..=8 {
            let serial = ballnum_core::revdiv::search_reverse_divisors(n, false).unwrap();
            for w in [1, 3] {
                assert_eq!(
                    search_reverse_divisors(n, false, w).unwrap(),
                    serial,
                    "n = {n}, workers = {w}"
                );
            }
        }
        assert!(search_reverse_divisors(10, false, 2).is_err());
        assert!(search_reverse_divisors(19, true, 2).is_err());
        for n in [10, 13] {
            let serial = ballnum_core::revdiv::search_reverse_divisors(n, true).unwrap();
            assert_eq!(search_reverse_divisors(n, true, 3).unwrap(), serial);
        }
    }

    #[test]
    fn census_independent_of_workers() {
        for width in 2..=18 {
            let serial = ballnum_core::codes::enumerate_codes(width).unwrap();
            assert_eq!(enumerate_codes(width, 4).unwrap(), serial, "width {width}");
        }
        assert!(enumerate_codes(1, 1).is_err());
    }
}

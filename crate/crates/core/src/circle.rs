//! Lattice point counts in closed disks: all points, primitive points
//! (coprime coordinates), and the sum of norms over primitive points.
//!
//! For real r >= 0 the three quantities depend only on floor(r), since
//! x^2 + y^2 is an integer. One pass enumerates columns x = 0..sqrt(R),
//! exploiting the four-fold symmetry; per-column tallies are merged in
//! column order, so results are identical in sequential and parallel mode
//! (norm sums are compensated per column and folded in a fixed order).
//!
//! Asymptotically: |C(r)| ~ pi r, |C'(r)| ~ (6/pi) r, and the norm sum over
//! C'(r) ~ (4/pi) r^{3/2}.

use crate::error::{Error, Result};
use crate::par::{map_indexed, ExecMode};
use num::integer::gcd;

/// Projected per-point iteration guard: at most this many lattice points
/// are enumerated unless the caller opts out.
pub const ITERATION_GUARD: f64 = 1e10;

#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct CircleCounts {
    pub r: f64,
    /// |C(r)|: lattice points with x^2 + y^2 <= r.
    pub all: u64,
    /// |C'(r)|: those with gcd(x, y) = 1 (the origin is not primitive).
    pub primitive: u64,
    /// sum of sqrt(x^2 + y^2) over the primitive points.
    pub norm_sum: f64,
}

#[derive(Clone, Copy, Default)]
struct Kahan {
    sum: f64,
    c: f64,
}

impl Kahan {
    #[inline]
    fn add(&mut self, x: f64) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }
}

#[derive(Clone, Copy, Default)]
struct ColumnTally {
    all: u64,
    primitive: u64,
    norm_sum: f64,
}

/// All three disk tallies in one pass. `allow_large` lifts the projected
/// iteration guard (roughly pi * floor(r) points are visited).
pub fn circle_counts_guarded(r: f64, mode: ExecMode, allow_large: bool) -> Result<CircleCounts> {
    if !r.is_finite() || r < 0.0 {
        return Err(Error::Domain(format!("disk radius squared {r} must be finite and >= 0")));
    }
    if r >= u64::MAX as f64 {
        return Err(Error::Domain(format!("{r} too large for exact lattice counting")));
    }
    let big_r = r.floor() as u64;
    let projected = std::f64::consts::PI * big_r as f64;
    if projected > ITERATION_GUARD && !allow_large {
        return Err(Error::GuardTripped(projected));
    }

    let xmax = big_r.isqrt();
    let tallies: Vec<ColumnTally> = map_indexed(mode, xmax as usize + 1, |xi| {
        let x = xi as u64;
        let ymax = (big_r - x * x).isqrt();
        let mut t = ColumnTally::default();
        if x == 0 {
            // column x = 0: points (0, y), |y| <= ymax
            t.all = 2 * ymax + 1;
            if ymax >= 1 {
                t.primitive = 2; // (0, 1) and (0, -1)
                t.norm_sum = 2.0;
            }
        } else {
            // columns x and -x together
            t.all = 2 * (2 * ymax + 1);
            let mut ks = Kahan::default();
            if x == 1 {
                t.primitive += 2; // (1, 0) and (-1, 0)
                ks.add(2.0);
            }
            for y in 1..=ymax {
                if gcd(x, y) == 1 {
                    t.primitive += 4; // (+-x, +-y)
                    ks.add(4.0 * ((x * x + y * y) as f64).sqrt());
                }
            }
            t.norm_sum = ks.sum;
        }
        t
    });

    // ordered fold: identical result for any worker count
    let mut all = 0u64;
    let mut primitive = 0u64;
    let mut norm = Kahan::default();
    for t in &tallies {
        all += t.all;
        primitive += t.primitive;
        norm.add(t.norm_sum);
    }
    Ok(CircleCounts {
        r,
        all,
        primitive,
        norm_sum: norm.sum,
    })
}

pub fn circle_counts(r: f64, mode: ExecMode) -> Result<CircleCounts> {
    circle_counts_guarded(r, mode, false)
}

pub fn count_all(r: f64, mode: ExecMode) -> Result<u64> {
    Ok(circle_counts(r, mode)?.all)
}

pub fn count_primitive(r: f64, mode: ExecMode) -> Result<u64> {
    Ok(circle_counts(r, mode)?.primitive)
}

pub fn norm_sum_primitive(r: f64, mode: ExecMode) -> Result<f64> {
    Ok(circle_counts(r, mode)?.norm_sum)
}

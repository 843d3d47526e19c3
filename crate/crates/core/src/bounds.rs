//! Isoperimetric bounds for (v, k, lambda)-graphs.
//!
//! Lower bounds: the one-sided neighborhood-expansion pair (a tally over
//! vertex multiplicities, exact rationals), the two-sided boundary function
//! built from f(x) = k^2 x / (k + lambda(x-1)) + x, and the closed-form
//! (k - mu) (k^2 + mu^2) / (k^3 + mu^3) with mu = sqrt(k - lambda).
//!
//! Upper bounds: an exact integer counting test giving alpha-bar <= x for
//! the plane graphs, and 1 - alpha/v once an incidence-free pair is in hand.
//!
//! Float policy: the f/boundary family is evaluated in f64; every ceiling
//! of a float lower bound is taken through `ceil_tol`, which nudges down by
//! 1e-9 first so a value that is mathematically an integer never rounds up —
//! the result is still a valid lower bound, at worst weaker by one.

use crate::error::{Error, Result};
use crate::field::{is_prime, prime_power};
use crate::graph::DesignParams;
use crate::Rat;

/// Tolerance for all float comparisons in this module.
pub const FLOAT_TOL: f64 = 1e-9;

/// Ceiling with a 1e-9 downward nudge; safe on lower bounds.
pub fn ceil_tol(x: f64) -> i64 {
    (x - FLOAT_TOL).ceil() as i64
}

/// One-sided expansion bounds for a nonempty subset of s vertices on one
/// side: returns (strong, weak) with |N(S)|/|S| >= strong >= weak, where
/// strong = (2km - lambda(s-1)) / (m(m+1)), m = floor(lambda(s-1)/k) + 1,
/// and weak = k^2 / (k + lambda(s-1)). Exact rationals.
pub fn one_sided_bound(params: &DesignParams, s: u64) -> Result<(Rat, Rat)> {
    if s == 0 {
        return Err(Error::EmptySet);
    }
    if s > params.v {
        return Err(Error::SetTooLarge {
            size: s,
            limit: params.v,
        });
    }
    let (k, lam) = (params.k as i64, params.lambda as i64);
    let t = lam * (s as i64 - 1); // lambda (s-1)
    let m = t / k + 1;
    let strong = Rat::new(2 * k * m - t, m * (m + 1));
    let weak = Rat::new(k * k, k + t);
    Ok((strong, weak))
}

/// f(x) = k^2 x / (k + lambda(x-1)) + x on [0, v]. Increasing and concave;
/// f(v) = 2v exactly (uses lambda(v-1) = k(k-1)).
pub fn f_eval(params: &DesignParams, x: f64) -> Result<f64> {
    let v = params.v as f64;
    if !(x >= 0.0 && x <= v + FLOAT_TOL) {
        return Err(Error::Domain(format!("f argument {x} outside [0, {v}]")));
    }
    let (k, lam) = (params.k as f64, params.lambda as f64);
    Ok(k * k * x / (k + lam * (x - 1.0)) + x)
}

/// Inverse of f on [0, 2v]: the positive root of
/// lambda t^2 + (k^2 + k - lambda - lambda y) t - y(k - lambda) = 0,
/// or y k / (k^2 + k) when lambda = 0 (f is then linear).
pub fn f_inverse(params: &DesignParams, y: f64) -> Result<f64> {
    let v = params.v as f64;
    if !(y >= 0.0 && y <= 2.0 * v + FLOAT_TOL) {
        return Err(Error::Domain(format!(
            "f_inverse argument {y} outside [0, {}]",
            2.0 * v
        )));
    }
    let (k, lam) = (params.k as f64, params.lambda as f64);
    if params.lambda == 0 {
        // f(t) = (k^2/k + 1) t = (k+1) t
        return Ok(y / (k + 1.0));
    }
    let b = k * k + k - lam - lam * y;
    let disc = b * b + 4.0 * lam * (k - lam) * y;
    debug_assert!(disc >= 0.0);
    Ok((-b + disc.sqrt()) / (2.0 * lam))
}

/// Two-sided boundary lower bound: any subset X of the whole vertex set
/// with |X| = x has |N(X)| >= f(x - f^{-1}(x)) - x. Valid for 1 <= x <= 2v.
pub fn boundary_lb(params: &DesignParams, x: u64) -> Result<f64> {
    if x == 0 {
        return Err(Error::EmptySet);
    }
    if x > 2 * params.v {
        return Err(Error::SetTooLarge {
            size: x,
            limit: 2 * params.v,
        });
    }
    let xf = x as f64;
    let z = (xf - f_inverse(params, xf)?).min(params.v as f64);
    Ok(f_eval(params, z)? - xf)
}

/// Best isoperimetric lower bound obtainable from `boundary_lb` alone:
/// min over 1 <= x <= v of ceil(boundary_lb(x)) / x, with the ceiling
/// through `ceil_tol` and clamped at 0. Returns the minimum and the
/// smallest x attaining it.
pub fn chain_lb(params: &DesignParams) -> Result<(Rat, u64)> {
    let mut best: Option<(Rat, u64)> = None;
    for x in 1..=params.v {
        let nb = ceil_tol(boundary_lb(params, x)?).max(0);
        let r = Rat::new(nb, x as i64);
        match &best {
            Some((b, _)) if *b <= r => {}
            _ => best = Some((r, x)),
        }
    }
    Ok(best.expect("v >= 1"))
}

/// Closed-form lower bound: i_V >= (k - mu)(k^2 + mu^2)/(k^3 + mu^3)
/// with mu = sqrt(k - lambda).
pub fn kmu_lb(params: &DesignParams) -> f64 {
    let k = params.k as f64;
    let mu = params.mu();
    (k - mu) * (k * k + mu * mu) / (k * k * k + mu * mu * mu)
}

/// The asymptotic envelope 1 - q^{(n+1)/2}(q-1)/(q^{n+1}-1) through which
/// the extraction constant c is defined: i_V = 1 - c * (1 - envelope).
/// A valid isoperimetric lower bound whenever n >= 3 or q >= 4 (where it is
/// implied by `kmu_lb`).
pub fn envelope_lb(n: u32, q: u64) -> Result<f64> {
    if n < 1 || q < 2 {
        return Err(Error::Domain(format!("envelope needs n >= 1, q >= 2, got ({n}, {q})")));
    }
    let qf = q as f64;
    let top = qf.powf((n as f64 + 1.0) / 2.0) * (qf - 1.0);
    Ok(1.0 - top / (qf.powi(n as i32 + 1) - 1.0))
}

/// Extraction constant: the c with i_V = 1 - c q^{(n+1)/2}(q-1)/(q^{n+1}-1).
pub fn c_extract(n: u32, q: u64, iv: Rat) -> f64 {
    let qf = q as f64;
    let iv = *iv.numer() as f64 / *iv.denom() as f64;
    (1.0 - iv) * (qf.powi(n as i32 + 1) - 1.0) / (qf.powf((n as f64 + 1.0) / 2.0) * (qf - 1.0))
}

/// Exact integer counting test for the plane graph of order q: if it passes
/// at x, then every set of x+1 points has |S| + |N(S)| > q^2 + q + 1, hence
/// alpha-bar <= x. The test: with m = floor(x/(q+1)) + 1,
/// (x+1)(2(q+1)m - x) > (q(q+1) - x) m (m+1).
pub fn counting_upper_passes(q: u64, x: u64) -> bool {
    debug_assert!(x >= 1);
    let (q, x) = (q as i128, x as i128);
    let m = x / (q + 1) + 1;
    (x + 1) * (2 * (q + 1) * m - x) > (q * (q + 1) - x) * m * (m + 1)
}

/// Smallest x at which the counting test passes (an upper bound for the
/// plane alpha-bar; tight for eight of the ten orders up to 16).
pub fn counting_upper_smallest(q: u64) -> u64 {
    (1..).find(|&x| counting_upper_passes(q, x)).unwrap()
}

/// i_V <= 1 - alpha/v once an incidence-free pair of size alpha exists on
/// sides of size v. Exact.
pub fn iv_upper_from_alpha(v: u64, alpha: u64) -> Rat {
    debug_assert!(alpha <= v);
    Rat::new((v - alpha) as i64, v as i64)
}

/// alpha-bar of the point-hyperplane graph in dimension 1 (a perfect
/// matching on q+1 vertices per side): floor((q+1)/2), exactly — take S of
/// that size and T the partners of the complement.
pub fn matching_alpha(q: u64) -> u64 {
    (q + 1) / 2
}

/// An established incidence-free number for dimension n, order q.
#[derive(Clone, Copy, Debug)]
pub struct KnownAlpha {
    pub n: u32,
    pub q: u64,
    pub alpha: u64,
}

#[derive(Clone, Debug)]
pub struct InheritanceInstance {
    pub item: char,
    pub n: u32,
    pub q: u64,
    pub alpha: u64,
    /// Numeric value of the right-hand side (display only; the check itself
    /// is exact integer arithmetic).
    pub bound: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, Default)]
pub struct InheritanceReport {
    pub checked: Vec<InheritanceInstance>,
    pub notes: Vec<String>,
}

impl InheritanceReport {
    pub fn all_hold(&self) -> bool {
        self.checked.iter().all(|c| c.holds)
    }
}

/// Check the five inherited lower-bound inequalities for alpha-bar against
/// a table of established values, skipping (with a note) every instance
/// whose left-hand side is not established. All comparisons are exact:
///
///   (a) dimension 1: 2 alpha >= q
///   (b) dimension 2, q = p prime: alpha^2 * 73^3 >= 120^2 * p^3
///   (c) dimension 2, q = p^{2k}: 2 alpha >= p^{3k}
///   (d) dimension 2, q = p^{2k+1}, k >= 1: alpha >= p^{3k} * alpha(2, p)
///   (e) alpha(n+2, q) >= q * alpha(n, q)
pub fn alpha_inheritance_check(known: &[KnownAlpha]) -> InheritanceReport {
    let mut report = InheritanceReport::default();
    let lookup = |n: u32, q: u64| known.iter().find(|k| k.n == n && k.q == q);

    for &KnownAlpha { n, q, alpha } in known {
        if n == 1 {
            report.checked.push(InheritanceInstance {
                item: 'a',
                n,
                q,
                alpha,
                bound: q as f64 / 2.0,
                holds: 2 * alpha >= q,
            });
            continue;
        }
        if n == 2 {
            let Ok((p, e)) = prime_power(q) else { continue };
            if e == 1 {
                debug_assert!(is_prime(q));
                let p = q as u128;
                report.checked.push(InheritanceInstance {
                    item: 'b',
                    n,
                    q,
                    alpha,
                    bound: 120.0 / (73.0 * 73.0f64.sqrt()) * (q as f64).powf(1.5),
                    holds: (alpha as u128).pow(2) * 73u128.pow(3) >= 14400 * p.pow(3),
                });
            } else if e % 2 == 0 {
                let k = e / 2;
                let rhs = (p as u128).pow(3 * k);
                report.checked.push(InheritanceInstance {
                    item: 'c',
                    n,
                    q,
                    alpha,
                    bound: rhs as f64 / 2.0,
                    holds: 2 * alpha as u128 >= rhs,
                });
            } else {
                let k = (e - 1) / 2;
                match lookup(2, p as u64) {
                    Some(base) => {
                        let rhs = (p as u128).pow(3 * k) * base.alpha as u128;
                        report.checked.push(InheritanceInstance {
                            item: 'd',
                            n,
                            q,
                            alpha,
                            bound: rhs as f64,
                            holds: alpha as u128 >= rhs,
                        });
                    }
                    None => report.notes.push(format!(
                        "(d) skipped for (2, {q}): alpha(2, {p}) not established"
                    )),
                }
            }
        }
    }

    // (e): needs established values in dimensions n and n+2 for the same q.
    let mut found_e = false;
    for &KnownAlpha { n, q, alpha } in known {
        if let Some(hi) = lookup(n + 2, q) {
            found_e = true;
            report.checked.push(InheritanceInstance {
                item: 'e',
                n: n + 2,
                q,
                alpha: hi.alpha,
                bound: (q * alpha) as f64,
                holds: hi.alpha >= q * alpha,
            });
        }
    }
    if !found_e {
        report.notes.push(
            "(e) has no checkable instance: no pair of established values in dimensions n and n+2"
                .into(),
        );
    }
    report
}

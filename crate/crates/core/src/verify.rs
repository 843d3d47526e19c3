//! Cross-cutting invariant checks shared by the test suites and the CLI.
//!
//! Each function either returns Ok(()) or names the first violated invariant,
//! so a failing property points straight at the broken quantity instead of a
//! bare boolean. The checks cover the design identities of the incidence
//! structure (regularity, pairwise balance), the graph metric profile,
//! internal consistency of the analytic bound functions, and sampled
//! neighborhood bounds on random vertex sets.

use crate::bitset::BitSet;
use crate::bounds::{boundary_lb, chain_lb, f_eval, f_inverse, one_sided_bound};
use crate::error::{Error, Result};
use crate::graph::{DesignParams, IncidenceGraph, SplitSet};
use crate::rng::XorShift64;
use crate::Rat;

/// Exhaustive pairwise checks stop above this many vertices per side.
pub const EXHAUSTIVE_LIMIT: usize = 2_000;

fn fail(msg: String) -> Result<()> {
    Err(Error::Domain(msg))
}

/// Every point lies on exactly k hyperplanes and every hyperplane carries
/// exactly k points; the (v, k, lambda) parameters satisfy the symmetric
/// design identity lambda (v - 1) = k (k - 1).
pub fn check_regularity(g: &IncidenceGraph) -> Result<()> {
    let params = g.params();
    if !params.design_identity_holds() {
        return fail(format!(
            "parameters ({}, {}, {}) break lambda (v-1) = k (k-1)",
            params.v, params.k, params.lambda
        ));
    }
    let k = g.params().k as usize;
    for i in 0..g.v() {
        let got = g.point_row(i).count();
        if got != k {
            return fail(format!("point {i} lies on {got} hyperplanes, expected {k}"));
        }
        let got = g.hyp_row(i).count();
        if got != k {
            return fail(format!("hyperplane {i} carries {got} points, expected {k}"));
        }
    }
    Ok(())
}

/// Every pair of distinct points shares exactly lambda hyperplanes, and
/// dually every pair of distinct hyperplanes shares exactly lambda points.
pub fn check_pair_balance(g: &IncidenceGraph) -> Result<()> {
    if g.v() > EXHAUSTIVE_LIMIT {
        return Err(Error::TooLarge {
            what: "side size for exhaustive pair balance",
            value: g.v() as u64,
            limit: EXHAUSTIVE_LIMIT as u64,
        });
    }
    let lambda = g.params().lambda as usize;
    for i in 0..g.v() {
        for j in (i + 1)..g.v() {
            let got = g.point_row(i).intersection_count(g.point_row(j));
            if got != lambda {
                return fail(format!(
                    "points {i}, {j} share {got} hyperplanes, expected {lambda}"
                ));
            }
            let got = g.hyp_row(i).intersection_count(g.hyp_row(j));
            if got != lambda {
                return fail(format!(
                    "hyperplanes {i}, {j} share {got} points, expected {lambda}"
                ));
            }
        }
    }
    Ok(())
}

/// Breadth-first distances from every vertex: same-side vertices sit at
/// distance exactly 2, cross-side at 1 (incident) or 3 (not). Requires
/// n >= 2, where any two hyperplanes share a point; the n = 1 graph is a
/// perfect matching with a different profile.
pub fn check_distance_profile(g: &IncidenceGraph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::Unsupported(
            "distance profile applies to n >= 2".into(),
        ));
    }
    if g.v() > EXHAUSTIVE_LIMIT {
        return Err(Error::TooLarge {
            what: "side size for the all-pairs distance profile",
            value: g.v() as u64,
            limit: EXHAUSTIVE_LIMIT as u64,
        });
    }
    let v = g.v();
    // Vertex ids: 0..v points, v..2v hyperplanes.
    let row = |u: usize| -> &BitSet {
        if u < v {
            g.point_row(u)
        } else {
            g.hyp_row(u - v)
        }
    };
    let mut dist = vec![u8::MAX; 2 * v];
    let mut frontier = Vec::new();
    let mut next = Vec::new();
    for src in 0..2 * v {
        dist.fill(u8::MAX);
        dist[src] = 0;
        frontier.clear();
        frontier.push(src);
        let mut depth = 0u8;
        while !frontier.is_empty() && depth < 4 {
            next.clear();
            for &u in &frontier {
                let base = if u < v { v } else { 0 };
                for w in row(u).iter() {
                    let t = base + w;
                    if dist[t] == u8::MAX {
                        dist[t] = depth + 1;
                        next.push(t);
                    }
                }
            }
            std::mem::swap(&mut frontier, &mut next);
            depth += 1;
        }
        let src_is_point = src < v;
        for t in 0..2 * v {
            let t_is_point = t < v;
            let expected = if t == src {
                0
            } else if t_is_point == src_is_point {
                2
            } else {
                let incident = if src_is_point {
                    g.point_row(src).contains(t - v)
                } else {
                    g.hyp_row(src - v).contains(t)
                };
                if incident {
                    1
                } else {
                    3
                }
            };
            if dist[t] != expected {
                return fail(format!(
                    "distance from vertex {src} to {t} is {}, expected {expected}",
                    dist[t]
                ));
            }
        }
    }
    Ok(())
}

/// Internal consistency of the analytic machinery: the neighborhood-growth
/// function is increasing and concave on a grid, its closed-form inverse
/// round-trips, the strengthened one-sided bound dominates the plain one,
/// and the chain bound's reported argmin really attains its value.
pub fn check_analytic_profile(params: &DesignParams) -> Result<()> {
    let v = params.v as f64;
    let steps = 400;
    let xs: Vec<f64> = (0..=steps)
        .map(|i| 1.0 + (v - 1.0) * i as f64 / steps as f64)
        .collect();
    let fs: Vec<f64> = xs
        .iter()
        .map(|&x| f_eval(params, x))
        .collect::<Result<_>>()?;
    for w in fs.windows(2) {
        if w[1] < w[0] - 1e-9 {
            return fail("growth function is not increasing on the grid".into());
        }
    }
    for i in 1..fs.len() - 1 {
        if fs[i] + 1e-7 < (fs[i - 1] + fs[i + 1]) / 2.0 {
            return fail(format!(
                "growth function fails midpoint concavity near x = {}",
                xs[i]
            ));
        }
    }
    for (&x, &y) in xs.iter().zip(&fs) {
        let back = f_inverse(params, y)?;
        if (back - x).abs() > 1e-6 * x.max(1.0) {
            return fail(format!(
                "inverse round-trip drifted: x = {x}, recovered {back}"
            ));
        }
    }
    for s in 1..=params.v {
        let (strong, weak) = one_sided_bound(params, s)?;
        if strong < weak {
            return fail(format!(
                "strengthened one-sided bound below the plain one at s = {s}"
            ));
        }
        if strong > Rat::new(params.v as i64, s as i64) {
            return fail(format!("one-sided bound blew past v at s = {s}"));
        }
    }
    let (value, argmin) = chain_lb(params)?;
    let lb = boundary_lb(params, argmin)?;
    let attained = Rat::new(crate::bounds::ceil_tol(lb), argmin as i64);
    if attained != value {
        return fail(format!(
            "chain bound argmin {argmin} attains {attained}, reported {value}"
        ));
    }
    Ok(())
}

/// Sampled neighborhood bounds. For random point-only sets S the one-sided
/// bound must hold (|N(S)| >= ceil(s * strengthened(s))), the witnessed
/// independence value must respect the line-counting cap (planes only),
/// and growing S must never shrink its closed neighborhood. For random
/// split sets X with |X| <= v, the boundary-chain value must lower-bound
/// |N(X)|/|X|.
pub fn check_sampled_neighborhoods(g: &IncidenceGraph, trials: u32, seed: u64) -> Result<()> {
    let v = g.v();
    let params = g.params();
    let mut rng = XorShift64::new(seed);
    let mut pool: Vec<usize> = (0..v).collect();
    let (chain, _) = chain_lb(&params)?;
    let counting_cap = if g.n() == 2 {
        Some(crate::bounds::counting_upper_smallest(g.q() as u64))
    } else {
        None
    };

    for trial in 0..trials {
        // Point-only set against the one-sided bound.
        rng.shuffle(&mut pool);
        let s = 1 + rng.below(v as u64) as usize;
        let set = BitSet::from_indices(v, pool[..s].iter().copied());
        let mut nb = BitSet::new(v);
        for i in set.iter() {
            nb.union_assign(g.point_row(i));
        }
        let (strong, _) = one_sided_bound(&params, s as u64)?;
        let floor = (strong * Rat::from_integer(s as i64)).ceil().to_integer();
        if (nb.count() as i64) < floor {
            return fail(format!(
                "trial {trial}: {s} points have {} neighbors, one-sided bound says >= {floor}",
                nb.count()
            ));
        }
        if let Some(cap) = counting_cap {
            let witnessed = g.alpha_value(&set);
            if witnessed > cap {
                return fail(format!(
                    "trial {trial}: sampled set witnesses {witnessed}, above the line-counting cap {cap}"
                ));
            }
        }
        // Monotonicity: adding points only grows the closed neighborhood.
        let extra = rng.below(v as u64) as usize;
        let mut grown = set.clone();
        grown.insert(extra);
        let mut nb_expected = nb.clone();
        nb_expected.union_assign(g.point_row(extra));
        let mut nb_grown = BitSet::new(v);
        for i in grown.iter() {
            nb_grown.union_assign(g.point_row(i));
        }
        if nb_grown.lex_cmp(&nb_expected) != std::cmp::Ordering::Equal {
            return fail(format!(
                "trial {trial}: neighborhood of the grown set is not the union of rows"
            ));
        }
        let mut lost = nb.clone();
        lost.difference_assign(&nb_grown);
        if !lost.is_empty() {
            return fail(format!(
                "trial {trial}: adding point {extra} shrank the neighborhood"
            ));
        }

        // Split set against the boundary-chain value.
        rng.shuffle(&mut pool);
        let total = 1 + rng.below(v as u64) as usize;
        let a = rng.below(total as u64 + 1) as usize;
        let mut x = SplitSet::empty(v);
        for &i in &pool[..a] {
            x.points.insert(i);
        }
        rng.shuffle(&mut pool);
        for &j in &pool[..total - a] {
            x.hyps.insert(j);
        }
        if x.is_empty() {
            continue;
        }
        let ratio = g.iv_ratio(&x)?;
        if ratio < chain {
            return fail(format!(
                "trial {trial}: split set of size {total} has ratio {ratio}, chain bound {chain}"
            ));
        }
    }
    Ok(())
}

/// Run every structural check appropriate for the graph's size, returning
/// the list of check names that ran.
pub fn run_all(g: &IncidenceGraph, seed: u64) -> Result<Vec<&'static str>> {
    let mut ran = Vec::new();
    check_regularity(g)?;
    ran.push("regularity");
    if g.v() <= EXHAUSTIVE_LIMIT {
        check_pair_balance(g)?;
        ran.push("pair-balance");
        if g.n() >= 2 {
            check_distance_profile(g)?;
            ran.push("distance-profile");
        }
    }
    check_analytic_profile(&g.params())?;
    ran.push("analytic-profile");
    check_sampled_neighborhoods(g, 40, seed)?;
    ran.push("sampled-neighborhoods");
    Ok(ran)
}

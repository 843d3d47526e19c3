//! The constraint-relaxation program whose optimum lower-bounds the
//! vertex-isoperimetric ratio of a plane's incidence graph.
//!
//! A minimizing subset S (|S| <= v) splits the vertex set into six parts:
//! points/lines inside S (a, b with a <= b), inside N(S) (c, d), and
//! untouched (e, f). Those sizes obey eleven arithmetic constraints —
//! two-way counting (a+c+e = b+d+f = v), the boundary-chain bound on a+b,
//! the strengthened one-sided neighborhood bound g on three of the parts,
//! two line-counting conditions through the untouched points, one bespoke
//! refinement at (q, a) = (5, 9), and the two-sided independence cap. The
//! minimum of (c+d)/(a+b) over all admissible tuples is then a valid lower
//! bound for min |N(X)|/|X|, and for every prime power q <= 16 it lands
//! exactly on 1 - alpha/v.
//!
//! `solve` prunes by computing, per (a, b), the least feasible c+d in O(1)
//! after a table lookup; `solve_naive` enumerates (a, b, c, d) directly and
//! exists to cross-check the pruning. Both return exact rationals and the
//! lexicographically least optimizer.

use crate::bounds::boundary_lb;
use crate::error::{Error, Result};
use crate::graph::DesignParams;
use crate::Rat;

/// Slack when comparing the real-valued boundary-chain bound against the
/// rational threshold; keeps membership decisions stable across platforms.
pub const SIZE_BAND: f64 = 1e-9;

/// m(x) = floor((q + x)/(q + 1)); the number of lines a point of an x-set
/// can share with the rest of the set, rounded to the pigeonhole block.
fn m_of(q: u64, x: u64) -> u64 {
    (q + x) / (q + 1)
}

/// g(x) = ceil(x (2 m (q+1) - x + 1) / (m (m+1))) with m = m(x); g(0) = 0.
/// The least possible neighborhood size of an x-point set, as an exact
/// integer.
pub fn g_eval(q: u64, x: u64) -> u64 {
    if x == 0 {
        return 0;
    }
    let m = m_of(q, x) as u128;
    let x = x as u128;
    let q = q as u128;
    let num = x * (2 * m * (q + 1) - x + 1);
    let den = m * (m + 1);
    num.div_ceil(den) as u64
}

/// Sizes a + b admitted by the boundary-chain condition
/// h(x - h^{-1}(x))/x - 1 <= 1 - alpha/v.
pub fn admissible_sizes(q: u64, alpha: u64) -> Result<Vec<u64>> {
    let params = DesignParams::of(2, q);
    let v = params.v;
    if alpha > v {
        return Err(Error::Domain(format!(
            "independence value {alpha} exceeds the plane size {v}"
        )));
    }
    let ub = 1.0 - alpha as f64 / v as f64;
    let mut sizes = Vec::new();
    for x in 1..=v {
        let lb = boundary_lb(&params, x)?;
        if lb / x as f64 <= ub + SIZE_BAND {
            sizes.push(x);
        }
    }
    Ok(sizes)
}

/// The program's outcome: the exact optimal ratio, the threshold it is
/// compared against, and the lexicographically least optimizing tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelaxSolution {
    pub q: u64,
    pub alpha: u64,
    /// min (c+d)/(a+b) over admissible tuples.
    pub minimum: Rat,
    /// 1 - alpha/v. When `alpha` is the graph's true incidence-free value
    /// the witness pair makes (alpha, v-alpha, v-alpha, 0) feasible, so the
    /// minimum cannot exceed this; for all ten small prime powers it equals
    /// it exactly. For an arbitrary alpha parameter no such cap applies.
    pub upper_bound: Rat,
    /// Lexicographically least (a, b, c, d) attaining the minimum.
    pub optimizer: (u64, u64, u64, u64),
    /// Admissible a + b values.
    pub sizes: Vec<u64>,
}

/// Check one tuple against every constraint of the program, with e and f
/// derived from the two-way counting identities. Errors name the violated
/// condition.
pub fn verify_solution(q: u64, alpha: u64, tuple: (u64, u64, u64, u64)) -> Result<()> {
    let (a, b, c, d) = tuple;
    let v = DesignParams::of(2, q).v;
    let sizes = admissible_sizes(q, alpha)?;
    let fail = |msg: String| Err(Error::Domain(msg));
    if b < 1 || b > v {
        return fail(format!("b = {b} outside 1..={v}"));
    }
    if a > b {
        return fail(format!("a = {a} exceeds b = {b}"));
    }
    if !sizes.contains(&(a + b)) {
        return fail(format!("a + b = {} not an admissible size", a + b));
    }
    if c > v - a || d > v - b {
        return fail(format!("c = {c} or d = {d} out of range"));
    }
    let e = v - a - c;
    let f = v - b - d;
    if b + d < g_eval(q, a) {
        return fail(format!("b + d = {} below g(a) = {}", b + d, g_eval(q, a)));
    }
    if a + c < g_eval(q, b) {
        return fail(format!("a + c = {} below g(b) = {}", a + c, g_eval(q, b)));
    }
    if c + e < g_eval(q, f) {
        return fail(format!("c + e = {} below g(f) = {}", c + e, g_eval(q, f)));
    }
    if a > alpha && b + d < v - alpha {
        return fail(format!(
            "a = {a} exceeds {alpha} yet b + d = {} is below v - {alpha}",
            b + d
        ));
    }
    if q == 5 && a == 9 && b + d < 25 {
        return fail(format!("(q, a) = (5, 9) needs b + d >= 25, got {}", b + d));
    }
    if e >= 1 && q * d < a {
        return fail(format!("e = {e} >= 1 needs q d >= a, got {} < {a}", q * d));
    }
    if e == 2 && q * (d + 1) < 2 * (a + 1) {
        return fail(format!(
            "e = 2 needs q(d+1) >= 2(a+1), got {} < {}",
            q * (d + 1),
            2 * (a + 1)
        ));
    }
    Ok(())
}

fn ceil_div(a: u64, b: u64) -> u64 {
    a.div_ceil(b)
}

/// Solve the program exactly. For each admissible (a, b) the least feasible
/// c + d is found directly: every coupling constraint is either a lower
/// bound on d alone (three g-conditions, the independence cap, the (5, 9)
/// refinement) or a lower bound on c alone (g(b) <= a + c), except the two
/// line-counting conditions, which depend on e = v - a - c only through
/// e >= 1 and e = 2. Sweeping the three candidate c values (the floor, the
/// floor nudged off e = 2, and e = 0) with their induced d floors covers
/// every possible optimum shape.
pub fn solve(q: u64, alpha: u64) -> Result<RelaxSolution> {
    let params = DesignParams::of(2, q);
    let v = params.v;
    let sizes = admissible_sizes(q, alpha)?;
    let g: Vec<u64> = (0..=v).map(|x| g_eval(q, x)).collect();
    debug_assert!(g.windows(2).all(|w| w[0] <= w[1]), "g must be monotone");
    debug_assert_eq!(g[v as usize], v);

    let mut best: Option<(Rat, (u64, u64, u64, u64))> = None;
    for b in 1..=v {
        for &s in &sizes {
            if s < b || s - b > b {
                continue;
            }
            let a = s - b;

            // Floors independent of c.
            let mut d_base = g[a as usize].saturating_sub(b);
            if a > alpha {
                d_base = d_base.max((v - alpha).saturating_sub(b));
            }
            if q == 5 && a == 9 {
                d_base = d_base.max(25u64.saturating_sub(b));
            }
            // g(v - b - d) <= v - a caps f from above; g is monotone, so
            // binary-search the least d that satisfies it.
            let (mut lo, mut hi) = (0u64, v - b);
            while lo < hi {
                let mid = (lo + hi) / 2;
                if g[(v - b - mid) as usize] <= v - a {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            if g[(v - b - lo) as usize] > v - a {
                continue; // not even d = v - b helps (cannot happen: g(0)=0)
            }
            d_base = d_base.max(lo);

            let c_base = g[b as usize].saturating_sub(a);
            if c_base > v - a {
                continue;
            }

            // Candidate c values: the floor, the floor stepped off the
            // e = 2 special case, and the e = 0 case that waives the
            // line-counting conditions entirely.
            let mut cands: Vec<u64> = vec![c_base];
            if v - a - c_base == 2 && c_base + 1 <= v - a {
                cands.push(c_base + 1);
            }
            if v - a > c_base {
                cands.push(v - a);
            }

            for c in cands {
                let e = v - a - c;
                let mut d = d_base;
                if e >= 1 {
                    d = d.max(ceil_div(a, q));
                }
                if e == 2 {
                    let need = (2 * a + 2).saturating_sub(q);
                    d = d.max(ceil_div(need, q));
                }
                if d > v - b {
                    continue;
                }
                let ratio = Rat::new((c + d) as i64, (a + b) as i64);
                let tuple = (a, b, c, d);
                let better = match &best {
                    None => true,
                    Some((r, t)) => ratio < *r || (ratio == *r && tuple < *t),
                };
                if better {
                    debug_assert!(verify_solution(q, alpha, tuple).is_ok());
                    best = Some((ratio, tuple));
                }
            }
        }
    }

    let (minimum, optimizer) = best.ok_or(Error::Infeasible {
        q: q as u32,
        alpha,
    })?;
    Ok(RelaxSolution {
        q,
        alpha,
        minimum,
        upper_bound: Rat::new((v - alpha) as i64, v as i64),
        optimizer,
        sizes,
    })
}

/// Reference solver: enumerate (a, b, c, d) outright and filter on the raw
/// constraints. Exponentially slower; guarded to tiny planes.
pub fn solve_naive(q: u64, alpha: u64) -> Result<RelaxSolution> {
    let params = DesignParams::of(2, q);
    let v = params.v;
    if v > 60 {
        return Err(Error::TooLarge {
            what: "plane size for the reference solver",
            value: v,
            limit: 60,
        });
    }
    let sizes = admissible_sizes(q, alpha)?;
    let mut best: Option<(Rat, (u64, u64, u64, u64))> = None;
    for b in 1..=v {
        for a in 0..=b {
            if !sizes.contains(&(a + b)) {
                continue;
            }
            for d in 0..=(v - b) {
                for c in 0..=(v - a) {
                    if verify_solution(q, alpha, (a, b, c, d)).is_err() {
                        continue;
                    }
                    let ratio = Rat::new((c + d) as i64, (a + b) as i64);
                    let tuple = (a, b, c, d);
                    let better = match &best {
                        None => true,
                        Some((r, t)) => ratio < *r || (ratio == *r && tuple < *t),
                    };
                    if better {
                        best = Some((ratio, tuple));
                    }
                }
            }
        }
    }
    let (minimum, optimizer) = best.ok_or(Error::Infeasible {
        q: q as u32,
        alpha,
    })?;
    Ok(RelaxSolution {
        q,
        alpha,
        minimum,
        upper_bound: Rat::new((v - alpha) as i64, v as i64),
        optimizer,
        sizes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::one_sided_bound;

    #[test]
    fn g_matches_the_one_sided_bound_scaled() {
        for q in [2u64, 3, 4, 5, 7, 9] {
            let params = DesignParams::of(2, q);
            for x in 1..=params.v {
                let (strong, _) = one_sided_bound(&params, x).unwrap();
                let scaled = strong * Rat::from_integer(x as i64);
                assert_eq!(g_eval(q, x) as i64, scaled.ceil().to_integer(), "q={q} x={x}");
            }
            assert_eq!(g_eval(q, 0), 0);
            assert_eq!(g_eval(q, params.v), params.v);
        }
    }

    #[test]
    fn g_is_monotone() {
        for q in [2u64, 5, 8, 16] {
            let v = DesignParams::of(2, q).v;
            let table: Vec<u64> = (0..=v).map(|x| g_eval(q, x)).collect();
            assert!(table.windows(2).all(|w| w[0] <= w[1]), "q = {q}");
        }
    }

    #[test]
    fn smallest_plane_solves_to_five_sevenths() {
        let sol = solve(2, 2).unwrap();
        assert_eq!(sol.minimum, Rat::new(5, 7));
        assert_eq!(sol.minimum, sol.upper_bound);
        // Lex-least optimum: all of N(S) on one side, nothing untouched
        // there (e = 0 waives the line-counting conditions).
        assert_eq!(sol.optimizer, (2, 5, 5, 0));
        assert_eq!(sol.sizes, vec![7]);
        verify_solution(2, 2, sol.optimizer).unwrap();
        // The balanced shape (3, 4, 3, 2) attains the same ratio.
        verify_solution(2, 2, (3, 4, 3, 2)).unwrap();
    }

    #[test]
    fn pruned_and_naive_agree_on_small_planes() {
        for (q, alpha) in [(2u64, 2u64), (3, 3), (4, 6), (5, 7)] {
            let fast = solve(q, alpha).unwrap();
            let slow = solve_naive(q, alpha).unwrap();
            assert_eq!(fast.minimum, slow.minimum, "q = {q}");
            assert_eq!(fast.optimizer, slow.optimizer, "q = {q}");
        }
    }

    #[test]
    fn program_value_meets_the_cap_for_small_planes() {
        for (q, alpha) in [(2u64, 2u64), (3, 3), (4, 6), (5, 7), (7, 13)] {
            let sol = solve(q, alpha).unwrap();
            assert_eq!(sol.minimum, sol.upper_bound, "q = {q}");
            verify_solution(q, alpha, sol.optimizer).unwrap();
        }
    }

    #[test]
    fn verifier_rejects_corrupted_tuples() {
        let sol = solve(2, 2).unwrap();
        let (a, b, c, d) = sol.optimizer;
        // Swapped sides break a <= b; a shaved c breaks the g(b) floor;
        // an inflated b leaves the plane; a pushed-up a leaves the sizes.
        assert!(verify_solution(2, 2, (b, a, c, d)).is_err());
        assert!(verify_solution(2, 2, (a, b, c - 1, d)).is_err());
        assert!(verify_solution(2, 2, (a, b + 40, c, d)).is_err());
        assert!(verify_solution(2, 2, (a + 1, b, c, d)).is_err());
        // A point left untouched forces q d >= a: (3, 4, 3, 1) has e = 1
        // and q d = 2 < 3.
        assert!(verify_solution(2, 2, (3, 4, 3, 1)).is_err());
        assert!(verify_solution(2, 2, (3, 4, 3, 2)).is_ok());
    }

    #[test]
    fn bespoke_refinement_is_enforced() {
        // At q = 5 the tuple with a = 9 must push b + d to 25.
        assert!(verify_solution(5, 7, (9, 10, 20, 10)).is_err());
    }
}

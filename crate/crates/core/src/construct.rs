//! Constructions that produce certified point sets: lattice circle pairs
//! over prime fields, Denniston maximal arcs over even fields, external-line
//! pairings, transcribed witness sets for q in {9, 11, 13}, and a seeded
//! local search for independence witnesses of arbitrary small planes.
//!
//! Every constructor returns a [`Certificate`]; nothing here is trusted by
//! the verifier, which recounts all incidences from the certificate alone.

use std::collections::BTreeSet;

use crate::bitset::BitSet;
use crate::cert::{CertKind, Certificate};
use crate::error::{Error, Result};
use crate::field::{make_field, prime_power};
use crate::geometry::normalize;
use crate::graph::IncidenceGraph;
use crate::par::{map_indexed, ExecMode};
use crate::rng::XorShift64;

/// Largest prime accepted by `circle_pair`; the quadratic integer-product
/// recheck is kept affordable below this.
pub const CIRCLE_PAIR_MAX_P: u64 = 1_000;

/// Incidence-free pair in PG(2, p) from lattice points in two discs.
///
/// The point side takes all <(x, y, 1)> with x^2 + y^2 <= p sqrt(p) / (2 pi);
/// the line side takes all <(a, b, c)>^perp with integer entries satisfying
/// |c - p/2| < p/2 - p^{3/4} sqrt(a^2 + b^2) / sqrt(2 pi). For every such
/// combination the integer dot product satisfies 0 < ax + by + c < p, hence
/// never vanishes mod p. That inequality is *recomputed in exact integer
/// arithmetic for every raw pair* before the certificate is assembled, so
/// floating-point slop in the disc radii can shrink or grow the sets but can
/// never admit an incidence.
pub fn circle_pair(p: u64) -> Result<Certificate> {
    let (prime, e) = prime_power(p)?;
    if e != 1 {
        return Err(Error::NotPrime(p));
    }
    if p < 5 {
        return Err(Error::Domain(format!(
            "circle pair needs p >= 5, got {p}"
        )));
    }
    if p > CIRCLE_PAIR_MAX_P {
        return Err(Error::TooLarge {
            what: "circle-pair prime",
            value: p,
            limit: CIRCLE_PAIR_MAX_P,
        });
    }
    let f = make_field(prime, 1)?;
    let pf = p as f64;
    let tau = 2.0 * std::f64::consts::PI;

    // Point-side disc: x^2 + y^2 <= p sqrt(p) / (2 pi). For integer sums the
    // comparison reduces to <= floor(radius); the bound is irrational so the
    // floor is stable.
    let s_cap = (pf * pf.sqrt() / tau).floor() as i64;
    let xmax = (s_cap as f64).sqrt() as i64 + 1;
    let mut raw_s: Vec<(i64, i64)> = Vec::new();
    for x in -xmax..=xmax {
        for y in -xmax..=xmax {
            if x * x + y * y <= s_cap {
                raw_s.push((x, y));
            }
        }
    }

    // Line-side triples: the c-interval is nonempty only while
    // sqrt(a^2 + b^2) < sqrt(2 pi) p^{1/4} / 2, a disc of area ~ pi^2
    // sqrt(p) / 2 around the origin ((0, 0) included).
    let scale = pf.powf(0.75) / tau.sqrt();
    let abmax = (pf / 2.0 / scale).ceil() as i64 + 1;
    let mut raw_t: Vec<(i64, i64, i64)> = Vec::new();
    for a in -abmax..=abmax {
        for b in -abmax..=abmax {
            let margin = pf / 2.0 - scale * ((a * a + b * b) as f64).sqrt();
            if margin <= 0.0 {
                continue;
            }
            let lo = (pf / 2.0 - margin).floor() as i64;
            let hi = (pf / 2.0 + margin).ceil() as i64;
            for c in lo..=hi {
                if ((c as f64) - pf / 2.0).abs() < margin {
                    raw_t.push((a, b, c));
                }
            }
        }
    }

    // Exact recheck of the separating inequality for every raw pair.
    for &(x, y) in &raw_s {
        for &(a, b, c) in &raw_t {
            let dot = a * x + b * y + c;
            if dot <= 0 || dot >= p as i64 {
                return Err(Error::Domain(format!(
                    "integer separation failed: ({x},{y},1).({a},{b},{c}) = {dot} outside (0, {p})"
                )));
            }
        }
    }

    let red = |t: i64| -> u64 { t.rem_euclid(p as i64) as u64 };
    let mut points: BTreeSet<Vec<u64>> = BTreeSet::new();
    for &(x, y) in &raw_s {
        points.insert(vec![red(x), red(y), 1]);
    }
    if points.len() != raw_s.len() {
        return Err(Error::Domain(
            "circle-pair points collided mod p; prime too small for the disc".into(),
        ));
    }
    let mut lines: BTreeSet<Vec<u64>> = BTreeSet::new();
    for &(a, b, c) in &raw_t {
        let codes = [red(a) as u32, red(b) as u32, red(c) as u32];
        let norm = normalize(&f, &codes)?;
        lines.insert(norm.into_iter().map(u64::from).collect());
    }

    let claimed = points.len().min(lines.len()) as u64;
    Ok(Certificate {
        kind: CertKind::IncidenceFreePair,
        n: 2,
        q: p,
        field_poly: vec![0, 1],
        points: points.into_iter().collect(),
        lines: Some(lines.into_iter().collect()),
        claimed_alpha: Some(claimed),
    })
}

/// Denniston maximal arc in PG(2, q), q = 2^m: for every proper power-of-two
/// divisor d of q, the set {(x, y, 1) : x^2 + beta x y + y^2 in H} is a
/// (dq - q + d)-point set meeting every line in 0 or d points. Here
/// t^2 + beta t + 1 is irreducible over GF(q) (beta = smallest such code)
/// and H = {0, 1, ..., d-1}, the span of the low basis bits — an additive
/// subgroup since field addition in characteristic 2 is digitwise XOR.
pub fn denniston_arc(q: u64, d: u64) -> Result<Certificate> {
    let (p, e) = prime_power(q)?;
    if p != 2 {
        return Err(Error::Unsupported(
            "maximal-arc construction needs even q".into(),
        ));
    }
    if !d.is_power_of_two() || d < 2 || d >= q {
        return Err(Error::Domain(format!(
            "arc degree must be a power of two with 2 <= d < q, got d = {d}"
        )));
    }
    let f = make_field(p, e)?;
    let qc = q as u32;
    let beta = (1..qc)
        .find(|&b| (0..qc).all(|t| f.add(f.add(f.mul(t, t), f.mul(b, t)), 1) != 0))
        .ok_or_else(|| Error::Domain("no irreducible t^2 + beta t + 1 found".into()))?;

    // H is closed under addition: codes below d = 2^s differ only in the low
    // s bits, and XOR never leaves them.
    debug_assert!((0..d as u32)
        .all(|h1| (0..d as u32).all(|h2| (f.add(h1, h2) as u64) < d)));

    let mut points = Vec::new();
    for x in 0..qc {
        for y in 0..qc {
            let form = f.add(f.add(f.mul(x, x), f.mul(beta, f.mul(x, y))), f.mul(y, y));
            if (form as u64) < d {
                points.push(vec![x as u64, y as u64, 1]);
            }
        }
    }
    let expect = d * q - q + d;
    if points.len() as u64 != expect {
        return Err(Error::Domain(format!(
            "arc size {} does not match d q - q + d = {expect}",
            points.len()
        )));
    }
    Ok(Certificate {
        kind: CertKind::MaximalArc { d: d as u32 },
        n: 2,
        q,
        field_poly: f.irreducible().to_vec(),
        points,
        lines: None,
        claimed_alpha: None,
    })
}

/// Pair a planar point set with all lines missing it. The external lines
/// are recounted from the incidence graph; the returned certificate claims
/// min(|points|, |external lines|).
pub fn pair_with_external_lines(arc: &Certificate) -> Result<Certificate> {
    if arc.n != 2 {
        return Err(Error::Unsupported("external-line pairing is planar".into()));
    }
    let g = IncidenceGraph::build(arc.n, arc.q)?;
    let f = g.field();
    let mut members = BitSet::new(g.v());
    for coords in &arc.points {
        let mut codes = Vec::with_capacity(coords.len());
        for &c in coords {
            codes.push(f.check_code(c)?);
        }
        let norm = normalize(f, &codes)?;
        let idx = g
            .point_index(&crate::geometry::ProjPoint { coords: norm })
            .ok_or_else(|| Error::Malformed("point not in the plane".into()))?;
        members.insert(idx);
    }
    let mut lines = Vec::new();
    for j in 0..g.v() {
        if g.hyp_row(j).intersection_count(&members) == 0 {
            lines.push(g.hyperplanes()[j].coords.iter().map(|&c| c as u64).collect());
        }
    }
    let claimed = arc.points.len().min(lines.len()) as u64;
    Ok(Certificate {
        kind: CertKind::IncidenceFreePair,
        n: 2,
        q: arc.q,
        field_poly: arc.field_poly.clone(),
        points: arc.points.clone(),
        lines: Some(lines),
        claimed_alpha: Some(claimed),
    })
}

/// GF(9) code for a + b i, where i^2 = -1 matches the defining polynomial
/// x^2 + 1 (codes are base-3 digit strings, constant digit first).
fn gf9(a: u64, b: u64) -> u64 {
    a + 3 * b
}

/// Hand-checked witness sets over the affine plane for q in {9, 11, 13},
/// claiming the exact two-sided independence value of the plane's graph.
/// Each point (x, y) embeds as <(x, y, 1)>.
pub fn builtin_alpha_witness(q: u64) -> Result<Certificate> {
    let (pairs, claimed, field_poly): (Vec<(u64, u64)>, u64, Vec<u32>) = match q {
        9 => {
            // Coordinates written a + b i; i is the square root of -1.
            let i = |a: u64, b: u64| (gf9(a % 3, b % 3), 0);
            let _ = i;
            let raw: [(u64, u64, u64, u64); 19] = [
                // (x_a, x_b, y_a, y_b) meaning x = x_a + x_b i, y = y_a + y_b i
                (0, 0, 0, 0),
                (0, 0, 1, 0),
                (0, 0, 0, 1),
                (0, 0, 1, 1),
                (1, 0, 0, 0),
                (1, 0, 1, 0),
                (1, 0, 1, 1),
                (2, 0, 0, 1),
                (2, 0, 1, 2),
                (0, 1, 0, 1),
                (0, 1, 2, 2),
                (1, 1, 0, 0),
                (1, 1, 2, 1),
                (1, 1, 2, 2),
                (0, 2, 2, 1),
                (0, 2, 1, 2),
                (0, 2, 2, 2),
                (2, 2, 1, 0),
                (2, 2, 1, 2),
            ];
            (
                raw.iter()
                    .map(|&(xa, xb, ya, yb)| (gf9(xa, xb), gf9(ya, yb)))
                    .collect(),
                19,
                vec![1, 0, 1],
            )
        }
        11 => (
            vec![
                (0, 0), (0, 8), (0, 10), (1, 3), (1, 7), (1, 8), (2, 5), (2, 7), (2, 10),
                (3, 3), (3, 5), (3, 7), (4, 0), (4, 8), (4, 10), (5, 1), (5, 4), (5, 9),
                (7, 0), (7, 4), (7, 10), (9, 1), (9, 3), (9, 9), (10, 1), (10, 4), (10, 5),
                (10, 9),
            ],
            28,
            vec![0, 1],
        ),
        13 => (
            vec![
                (0, 0), (0, 3), (0, 6), (0, 10), (1, 1), (1, 4), (1, 10), (3, 0), (3, 5),
                (3, 10), (3, 11), (4, 1), (4, 2), (4, 6), (4, 7), (6, 2), (6, 3), (6, 5),
                (6, 12), (7, 1), (7, 3), (7, 6), (7, 12), (8, 0), (8, 6), (8, 7), (8, 11),
                (9, 2), (9, 4), (9, 7), (10, 4), (10, 5), (10, 12), (11, 3), (11, 4),
                (11, 11),
            ],
            36,
            vec![0, 1],
        ),
        other => {
            return Err(Error::Unsupported(format!(
                "no built-in witness for q = {other}"
            )))
        }
    };
    Ok(Certificate {
        kind: CertKind::IncidenceFreePair,
        n: 2,
        q,
        field_poly,
        points: pairs.into_iter().map(|(x, y)| vec![x, y, 1]).collect(),
        lines: None,
        claimed_alpha: Some(claimed),
    })
}

/// The four 17-point 3-arcs of PG(2, 9) (one per isomorphism class), as
/// affine coordinates over GF(9) = GF(3)[i]/(i^2 + 1). Their boundary sizes
/// anchor the sharp planar value at q = 9.
pub fn seventeen_three_arcs() -> Vec<Certificate> {
    // Each entry (x_a, x_b, y_a, y_b) encodes ((x_a + x_b i), (y_a + y_b i)).
    let raw: [[(u64, u64, u64, u64); 17]; 4] = [
        [
            (0, 0, 0, 0), (0, 0, 1, 0), (0, 0, 2, 0), (1, 0, 0, 0), (1, 0, 1, 0),
            (1, 0, 2, 0), (2, 0, 0, 1), (2, 0, 1, 1), (2, 0, 0, 2), (0, 1, 0, 0),
            (0, 1, 2, 1), (1, 1, 1, 0), (0, 2, 2, 0), (0, 2, 1, 1), (2, 2, 0, 1),
            (2, 2, 1, 1), (2, 2, 0, 2),
        ],
        [
            (0, 0, 0, 0), (0, 0, 1, 0), (0, 0, 2, 0), (1, 0, 0, 0), (1, 0, 1, 0),
            (1, 0, 2, 0), (2, 0, 0, 1), (2, 0, 1, 1), (2, 0, 2, 1), (0, 1, 0, 0),
            (0, 1, 1, 0), (0, 1, 2, 2), (1, 1, 2, 2), (2, 1, 2, 0), (0, 2, 1, 1),
            (0, 2, 0, 2), (0, 2, 2, 2),
        ],
        [
            (0, 0, 0, 0), (0, 0, 1, 0), (0, 0, 2, 0), (1, 0, 0, 0), (1, 0, 1, 0),
            (1, 0, 2, 0), (2, 0, 0, 1), (2, 0, 1, 1), (2, 0, 2, 2), (0, 1, 0, 0),
            (0, 1, 0, 1), (0, 1, 2, 2), (1, 1, 2, 1), (2, 1, 2, 0), (2, 1, 1, 1),
            (2, 1, 1, 2), (0, 2, 1, 0),
        ],
        [
            (0, 0, 0, 0), (0, 0, 1, 0), (0, 0, 2, 0), (1, 0, 0, 0), (1, 0, 1, 0),
            (1, 0, 0, 1), (2, 0, 0, 0), (2, 0, 0, 1), (2, 0, 1, 1), (0, 1, 0, 1),
            (1, 1, 2, 2), (0, 2, 1, 1), (1, 2, 2, 0), (1, 2, 2, 2), (2, 2, 2, 0),
            (2, 2, 1, 1), (2, 2, 1, 2),
        ],
    ];
    raw.iter()
        .map(|arc| Certificate {
            kind: CertKind::Arc { d: 3 },
            n: 2,
            q: 9,
            field_poly: vec![1, 0, 1],
            points: arc
                .iter()
                .map(|&(xa, xb, ya, yb)| vec![gf9(xa, xb), gf9(ya, yb), 1])
                .collect(),
            lines: None,
            claimed_alpha: None,
        })
        .collect()
}

/// Result of a successful witness search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Point indices into the graph's enumeration, sorted.
    pub set: Vec<usize>,
    /// Lines meeting none of the chosen points.
    pub uncovered: u64,
    /// 1-based count of restarts consumed up to and including the winner.
    pub restarts: u64,
}

/// Restarts evaluated per batch; batches run data-parallel, and the lowest
/// restart index that succeeds wins, so results do not depend on thread
/// scheduling.
const BATCH_WIDTH: u64 = 64;

/// Seeded local search for a point set of size `target` leaving at least
/// `target` lines uncovered (a two-sided independence witness).
///
/// Each restart hill-climbs with exact best-swap moves: for a member o and
/// non-member i, swapping changes the uncovered-line count by
/// |tangents at o| - |lines of i already uncovered| - |lines of i tangent at
/// o|, all computed from bitset rows. Plateau moves are allowed a few times,
/// then random multi-swap kicks, then the restart is abandoned. Fails with
/// the best count found once `max_restarts` is exhausted.
pub fn alpha_witness_search(
    g: &IncidenceGraph,
    target: usize,
    seed: u64,
    max_restarts: u64,
    mode: ExecMode,
) -> Result<SearchOutcome> {
    let v = g.v();
    if target == 0 || target > v {
        return Err(Error::Domain(format!(
            "witness size must be between 1 and {v}, got {target}"
        )));
    }
    let mut best_seen = 0u64;
    let mut used = 0u64;
    while used < max_restarts {
        let width = BATCH_WIDTH.min(max_restarts - used) as usize;
        let runs: Vec<(Option<Vec<usize>>, u64)> = map_indexed(mode, width, |w| {
            restart(g, target, XorShift64::substream(seed, used + w as u64))
        });
        for (w, (set, unc)) in runs.into_iter().enumerate() {
            best_seen = best_seen.max(unc.min(target as u64));
            if let Some(mut set) = set {
                set.sort_unstable();
                return Ok(SearchOutcome {
                    set,
                    uncovered: unc,
                    restarts: used + w as u64 + 1,
                });
            }
        }
        used += width as u64;
    }
    Err(Error::BudgetExhausted {
        best: best_seen,
        target: target as u64,
    })
}

/// One hill-climbing restart; returns the set on success plus the best
/// uncovered count reached either way.
fn restart(g: &IncidenceGraph, target: usize, mut rng: XorShift64) -> (Option<Vec<usize>>, u64) {
    let v = g.v();
    let mut order: Vec<usize> = (0..v).collect();
    rng.shuffle(&mut order);
    let mut members: Vec<usize> = order[..target].to_vec();
    let mut in_set = vec![false; v];
    let mut counts = vec![0u32; v];
    for &i in &members {
        in_set[i] = true;
        for j in g.point_row(i).iter() {
            counts[j] += 1;
        }
    }

    let step_limit = 60 * target.max(8);
    let mut plateau = 0u32;
    let mut kicks = 0u32;
    let mut best = 0u64;
    for _ in 0..step_limit {
        let uncovered = counts.iter().filter(|&&c| c == 0).count() as u64;
        best = best.max(uncovered);
        if uncovered >= target as u64 {
            return (Some(members), uncovered);
        }

        let mut unc = BitSet::new(v);
        let mut tang = BitSet::new(v);
        for (j, &c) in counts.iter().enumerate() {
            if c == 0 {
                unc.insert(j);
            } else if c == 1 {
                tang.insert(j);
            }
        }
        //

        // freed(o): tangent lines at o become uncovered on removal.
        let freed: Vec<(usize, BitSet)> = members
            .iter()
            .map(|&o| {
                let mut t = g.point_row(o).clone();
                t.intersect_assign(&tang);
                (o, t)
            })
            .collect();

        let mut best_delta = i64::MIN;
        let mut ties: Vec<(usize, usize)> = Vec::new();
        for (mi, (o, t_o)) in freed.iter().enumerate() {
            let gain_o = t_o.count() as i64;
            for i in 0..v {
                if in_set[i] {
                    continue;
                }
                let row = g.point_row(i);
                let delta =
                    gain_o - row.intersection_count(&unc) as i64 - row.intersection_count(t_o) as i64;
                match delta.cmp(&best_delta) {
                    std::cmp::Ordering::Greater => {
                        best_delta = delta;
                        ties.clear();
                        ties.push((mi, i));
                    }
                    std::cmp::Ordering::Equal => ties.push((mi, i)),
                    std::cmp::Ordering::Less => {}
                }
            }
            let _ = o;
        }

        let improving = best_delta > 0;
        let sideways = best_delta == 0 && plateau < 14;
        if improving || sideways {
            plateau = if improving { 0 } else { plateau + 1 };
            let (mi, inc) = ties[rng.below(ties.len() as u64) as usize];
            apply_swap(g, &mut members, &mut in_set, &mut counts, mi, inc);
        } else if kicks < 6 {
            kicks += 1;
            plateau = 0;
            for _ in 0..2 {
                let mi = rng.below(members.len() as u64) as usize;
                let inc = loop {
                    let cand = rng.below(v as u64) as usize;
                    if !in_set[cand] {
                        break cand;
                    }
                };
                apply_swap(g, &mut members, &mut in_set, &mut counts, mi, inc);
            }
        } else {
            break;
        }
    }
    let uncovered = counts.iter().filter(|&&c| c == 0).count() as u64;
    best = best.max(uncovered);
    if uncovered >= target as u64 {
        return (Some(members), uncovered);
    }
    (None, best)
}

fn apply_swap(
    g: &IncidenceGraph,
    members: &mut [usize],
    in_set: &mut [bool],
    counts: &mut [u32],
    member_slot: usize,
    incoming: usize,
) {
    let out = members[member_slot];
    debug_assert!(in_set[out] && !in_set[incoming]);
    for j in g.point_row(out).iter() {
        counts[j] -= 1;
    }
    for j in g.point_row(incoming).iter() {
        counts[j] += 1;
    }
    in_set[out] = false;
    in_set[incoming] = true;
    members[member_slot] = incoming;
}

/// Wrap a searched point set as a pair certificate claiming `claimed`.
pub fn witness_certificate(g: &IncidenceGraph, set: &[usize], claimed: u64) -> Certificate {
    Certificate {
        kind: CertKind::IncidenceFreePair,
        n: g.n(),
        q: g.q() as u64,
        field_poly: g.field().irreducible().to_vec(),
        points: set
            .iter()
            .map(|&i| g.points()[i].coords.iter().map(|&c| c as u64).collect())
            .collect(),
        lines: None,
        claimed_alpha: Some(claimed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::Verdict;

    fn report(cert: &Certificate) -> crate::cert::VerifyReport {
        match cert.verify().unwrap() {
            Verdict::Verified(r) => r,
            Verdict::Violated(w) => panic!("certificate rejected: {w}"),
        }
    }

    #[test]
    fn circle_pair_smallest_prime() {
        let cert = circle_pair(5).unwrap();
        // Disc radius^2 = 5 sqrt(5) / (2 pi) ~ 1.78: origin plus 4 axis points.
        assert_eq!(cert.points.len(), 5);
        let r = report(&cert);
        assert_eq!(r.set_size, 5);
        assert!(r.witnessed_alpha >= cert.claimed_alpha.unwrap());
    }

    #[test]
    fn circle_pair_verifies_for_small_primes() {
        for p in [5u64, 7, 11, 13, 31] {
            let cert = circle_pair(p).unwrap();
            assert!(cert.verify().unwrap().is_verified(), "p = {p}");
            assert!(!cert.points.is_empty());
            assert!(!cert.lines.as_ref().unwrap().is_empty());
        }
    }

    #[test]
    fn circle_pair_is_deterministic_and_guarded() {
        assert_eq!(circle_pair(13).unwrap(), circle_pair(13).unwrap());
        assert!(circle_pair(4).is_err());
        assert!(circle_pair(3).is_err());
        assert!(circle_pair(1_009).is_err());
    }

    #[test]
    fn denniston_sizes_and_verdicts() {
        for (q, d, size, externals) in [
            (4u64, 2u64, 6u64, 6u64),
            (8, 2, 10, 28),
            (8, 4, 28, 10),
            (16, 2, 18, 120),
            (16, 4, 52, 52),
            (16, 8, 120, 18),
        ] {
            let arc = denniston_arc(q, d).unwrap();
            assert_eq!(arc.points.len() as u64, size, "q={q} d={d}");
            let r = report(&arc);
            assert_eq!(r.uncovered_lines, externals, "q={q} d={d}");
        }
        assert!(denniston_arc(9, 3).is_err());
        assert!(denniston_arc(8, 8).is_err());
        assert!(denniston_arc(8, 3).is_err());
    }

    #[test]
    fn external_pairing_reaches_the_even_square_values() {
        // q = 4: hyperoval pairs with its 6 external lines.
        let pair4 = pair_with_external_lines(&denniston_arc(4, 2).unwrap()).unwrap();
        assert_eq!(pair4.claimed_alpha, Some(6));
        assert!(pair4.verify().unwrap().is_verified());

        // q = 16: degree-4 arc has exactly 52 points and 52 external lines.
        let pair16 = pair_with_external_lines(&denniston_arc(16, 4).unwrap()).unwrap();
        assert_eq!(pair16.claimed_alpha, Some(52));
        assert_eq!(pair16.lines.as_ref().unwrap().len(), 52);
        assert!(pair16.verify().unwrap().is_verified());
    }

    #[test]
    fn builtin_witnesses_verify_with_claimed_values() {
        for (q, claimed) in [(9u64, 19u64), (11, 28), (13, 36)] {
            let cert = builtin_alpha_witness(q).unwrap();
            assert_eq!(cert.points.len() as u64, claimed);
            let r = report(&cert);
            assert_eq!(r.witnessed_alpha, claimed, "q = {q}");
        }
        assert!(builtin_alpha_witness(7).is_err());
    }

    #[test]
    fn seventeen_three_arcs_are_three_arcs() {
        let arcs = seventeen_three_arcs();
        assert_eq!(arcs.len(), 4);
        for (idx, arc) in arcs.iter().enumerate() {
            assert_eq!(arc.points.len(), 17);
            let r = report(arc);
            assert_eq!(r.set_size, 17, "arc {idx}");
        }
    }

    #[test]
    fn search_finds_small_witnesses() {
        for (q, target) in [(2u64, 2usize), (3, 3), (4, 6), (5, 7)] {
            let g = IncidenceGraph::build(2, q).unwrap();
            let out = alpha_witness_search(&g, target, 0, 512, ExecMode::Sequential)
                .unwrap_or_else(|e| panic!("q = {q}: {e}"));
            assert!(out.uncovered >= target as u64);
            let cert = witness_certificate(&g, &out.set, target as u64);
            assert!(cert.verify().unwrap().is_verified());
        }
    }

    #[test]
    fn search_modes_agree() {
        let g = IncidenceGraph::build(2, 5).unwrap();
        let a = alpha_witness_search(&g, 7, 42, 256, ExecMode::Sequential).unwrap();
        let b = alpha_witness_search(&g, 7, 42, 256, ExecMode::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn search_reports_budget_exhaustion() {
        // 8 lines uncovered by an 8-set is impossible in PG(2, 5).
        let g = IncidenceGraph::build(2, 5).unwrap();
        match alpha_witness_search(&g, 8, 0, 24, ExecMode::Sequential) {
            Err(Error::BudgetExhausted { best, target }) => {
                assert_eq!(target, 8);
                assert!(best < 8);
            }
            other => panic!("expected exhaustion, got {other:?}"),
        }
    }
}

//! Reproduction of the summary table: exact incidence-free and
//! vertex-isoperimetric values of the plane graphs for the ten prime powers
//! q <= 16.
//!
//! Every row is derived, not quoted. The incidence-free value alpha is
//! pinned between a verified witness (local search at q in {2, 3, 5, 7, 8},
//! a maximal arc with its external lines at q in {4, 16}, a catalogued
//! point set at q in {9, 11, 13} — always re-checked against the incidence
//! relation from scratch) and a matching upper bound (the exhaustive scan
//! for q <= 5, the line-counting bound elsewhere, sharpened at q = 9 by
//! the catalogue of 17-point 3-arcs, whose completeness is cited). The
//! isoperimetric value 1 - alpha/v is then certified exact by the
//! constraint-relaxation program, whose optimum is an independent lower
//! bound on the isoperimetric ratio and must land on the same rational.
//! The expected rows embedded here exist only to diff against.

use crate::bounds::{c_extract, counting_upper_smallest, iv_upper_from_alpha};
use crate::cert::{Certificate, Verdict};
use crate::construct::{
    alpha_witness_search, builtin_alpha_witness, denniston_arc, pair_with_external_lines,
    witness_certificate,
};
use crate::error::{Error, Result};
use crate::graph::IncidenceGraph;
use crate::par::ExecMode;
use crate::relax;
use crate::search::{arc_reduction_check, exact_alpha, exact_alpha_certificate, seventeen_three_arc_audit};
use crate::Rat;

/// The ten plane orders covered by the table.
pub const TABLE_Q: [u64; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

/// Restart budget for the local witness search at q = 7 and 8 (both
/// typically succeed within the first batch).
pub const SEARCH_RESTARTS: u64 = 50_000;

/// Tolerance for the normalized-constant column, whose published values
/// are rounded to three decimals (not all the same way).
pub const C_TOLERANCE: f64 = 1.5e-3;

/// One computed row.
#[derive(Clone, Debug)]
pub struct Table1Row {
    pub q: u64,
    pub v: u64,
    /// Exact incidence-free value of the plane graph.
    pub alpha: u64,
    /// How the witness (lower bound) was obtained.
    pub witness_source: &'static str,
    /// How the matching upper bound was obtained.
    pub upper_source: &'static str,
    /// Exact vertex-isoperimetric value 1 - alpha/v.
    pub iv: Rat,
    /// Optimum of the constraint relaxation; always equals `iv`.
    pub relax_value: Rat,
    /// Normalized constant c with iv = 1 - c/sqrt(q) + o(1/sqrt(q)).
    pub c: f64,
}

/// A row of the published table, for diffing.
#[derive(Clone, Copy, Debug)]
pub struct ExpectedRow {
    pub q: u64,
    pub alpha: u64,
    pub iv: Rat,
    pub c: f64,
}

/// The published values. Used only to compare against computed rows.
pub fn expected_rows() -> [ExpectedRow; 10] {
    let row = |q, alpha, num, den, c| ExpectedRow {
        q,
        alpha,
        iv: Rat::new(num, den),
        c,
    };
    [
        row(2, 2, 5, 7, 0.707),
        row(3, 3, 10, 13, 0.577),
        row(4, 6, 5, 7, 0.750),
        row(5, 7, 24, 31, 0.626),
        row(7, 13, 44, 57, 0.702),
        row(8, 16, 57, 73, 0.707),
        row(9, 19, 72, 91, 0.703),
        row(11, 28, 15, 19, 0.767),
        row(13, 36, 49, 61, 0.768),
        row(16, 52, 17, 21, 0.813),
    ]
}

fn ensure_witness(cert: &Certificate, want: u64) -> Result<()> {
    match cert.verify()? {
        Verdict::Verified(report) => {
            if report.witnessed_alpha >= want {
                Ok(())
            } else {
                Err(Error::Domain(format!(
                    "witness attains {} but {want} is required",
                    report.witnessed_alpha
                )))
            }
        }
        Verdict::Violated(w) => Err(Error::Domain(format!("witness rejected: {w}"))),
    }
}

/// The q = 9 gap between the 19-point witness and the line-counting bound
/// of 21 is closed by the catalogued 17-point 3-arcs: a 20-point set
/// leaving 20 lines uncovered would cover at most 71 lines, and the
/// degree-tally budget lets at most 3 deletions reach a 17-point 3-arc
/// covering no more — yet every catalogued 3-arc covers at least 72.
/// (Any witness of size above 20 restricts to 20 points with at least as
/// many uncovered lines, so ruling out 20 rules out everything above.)
fn nine_upper_bound() -> Result<u64> {
    let sizes = seventeen_three_arc_audit()?;
    let floor = *sizes.iter().min().expect("four arcs");
    let report = arc_reduction_check();
    if report.budget != 6 {
        return Err(Error::Domain(format!(
            "tally budget is {}, expected 6",
            report.budget
        )));
    }
    if report.max_removals > 3 {
        return Err(Error::Domain(format!(
            "tally argument allows {} removals, more than the 3 the catalogue covers",
            report.max_removals
        )));
    }
    if floor < 72 {
        return Err(Error::Domain(format!(
            "catalogued 3-arc covers only {floor} lines, not enough to exclude a 20-point witness"
        )));
    }
    Ok(19)
}

/// Derive one row from scratch. The witness and the upper bound must meet;
/// the relaxation optimum must equal 1 - alpha/v; anything short errors.
pub fn compute_row(q: u64, mode: ExecMode, seed: u64) -> Result<Table1Row> {
    let g = IncidenceGraph::build(2, q)?;
    let v = g.v() as u64;
    let (alpha, witness_source, upper_source) = match q {
        2 | 3 | 5 => {
            // Upper bound from the exhaustive scan; an independently found
            // local-search witness must reach it.
            let exact = exact_alpha(&g)?;
            let cert = exact_alpha_certificate(&g, &exact);
            ensure_witness(&cert, exact.value)?;
            let found =
                alpha_witness_search(&g, exact.value as usize, seed, SEARCH_RESTARTS, mode)?;
            let cert = witness_certificate(&g, &found.set, exact.value);
            ensure_witness(&cert, exact.value)?;
            (exact.value, "local-search", "exhaustive-search")
        }
        4 => {
            // The degree-2 maximal arc (a hyperoval) with its external
            // lines meets the exhaustive scan value.
            let exact = exact_alpha(&g)?;
            let arc = denniston_arc(4, 2)?;
            let pair = pair_with_external_lines(&arc)?;
            ensure_witness(&pair, exact.value)?;
            (exact.value, "maximal-arc", "exhaustive-search")
        }
        7 | 8 => {
            let upper = counting_upper_smallest(q);
            let found = alpha_witness_search(&g, upper as usize, seed, SEARCH_RESTARTS, mode)?;
            let cert = witness_certificate(&g, &found.set, upper);
            ensure_witness(&cert, upper)?;
            (upper, "local-search", "line-counting")
        }
        9 => {
            let counting = counting_upper_smallest(9);
            let upper = nine_upper_bound()?;
            if counting < upper {
                return Err(Error::Domain(format!(
                    "line-counting bound {counting} undercuts the arc-catalogue bound {upper}"
                )));
            }
            let cert = builtin_alpha_witness(9)?;
            ensure_witness(&cert, upper)?;
            // The completeness of the 3-arc catalogue is taken on trust
            // (its arithmetic consequences are all re-verified above).
            (upper, "catalogued-witness", "arc-catalogue (cited)")
        }
        11 | 13 => {
            let upper = counting_upper_smallest(q);
            let cert = builtin_alpha_witness(q)?;
            ensure_witness(&cert, upper)?;
            (upper, "catalogued-witness", "line-counting")
        }
        16 => {
            let upper = counting_upper_smallest(16);
            let arc = denniston_arc(16, 4)?;
            let pair = pair_with_external_lines(&arc)?;
            ensure_witness(&pair, upper)?;
            (upper, "maximal-arc", "line-counting")
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "no derivation route for q = {q}"
            )))
        }
    };

    let iv = iv_upper_from_alpha(v, alpha);
    let sol = relax::solve(q, alpha)?;
    if sol.minimum != iv {
        return Err(Error::Domain(format!(
            "relaxation optimum {} disagrees with 1 - alpha/v = {iv} at q = {q}",
            sol.minimum
        )));
    }
    Ok(Table1Row {
        q,
        v,
        alpha,
        witness_source,
        upper_source,
        iv,
        relax_value: sol.minimum,
        c: c_extract(2, q, iv),
    })
}

/// All rows plus the diff against the published values.
#[derive(Clone, Debug)]
pub struct Table1Report {
    pub rows: Vec<Table1Row>,
    /// Human-readable mismatches; empty when the reproduction is exact.
    pub diffs: Vec<String>,
}

impl Table1Report {
    pub fn matches(&self) -> bool {
        self.diffs.is_empty()
    }
}

/// Compute every row and diff it against the published table.
pub fn table1(mode: ExecMode, seed: u64) -> Result<Table1Report> {
    let mut rows = Vec::with_capacity(TABLE_Q.len());
    for &q in &TABLE_Q {
        rows.push(compute_row(q, mode, seed)?);
    }
    let mut diffs = Vec::new();
    for (row, want) in rows.iter().zip(expected_rows()) {
        if row.q != want.q {
            diffs.push(format!("row order mismatch: computed q={}, expected q={}", row.q, want.q));
            continue;
        }
        if row.alpha != want.alpha {
            diffs.push(format!(
                "q={}: computed alpha {} != published {}",
                row.q, row.alpha, want.alpha
            ));
        }
        if row.iv != want.iv {
            diffs.push(format!(
                "q={}: computed ratio {} != published {}",
                row.q, row.iv, want.iv
            ));
        }
        if (row.c - want.c).abs() > C_TOLERANCE {
            diffs.push(format!(
                "q={}: computed c {:.6} differs from published {:.3} beyond {}",
                row.q, row.c, want.c, C_TOLERANCE
            ));
        }
    }
    Ok(Table1Report { rows, diffs })
}

/// Plain-text rendering, one row per plane.
pub fn render_text(report: &Table1Report) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:>3} {:>4} {:>6} {:>8} {:>8} {:>7}  {:<18} {:<16}\n",
        "q", "v", "alpha", "i_V", "relax", "c", "witness", "upper bound"
    ));
    for r in &report.rows {
        out.push_str(&format!(
            "{:>3} {:>4} {:>6} {:>8} {:>8} {:>7.3}  {:<18} {:<16}\n",
            r.q,
            r.v,
            r.alpha,
            format!("{}/{}", r.iv.numer(), r.iv.denom()),
            format!("{}/{}", r.relax_value.numer(), r.relax_value.denom()),
            r.c,
            r.witness_source,
            r.upper_source,
        ));
    }
    if report.matches() {
        out.push_str("all rows match the published table\n");
    } else {
        for d in &report.diffs {
            out.push_str(&format!("MISMATCH: {d}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_rows_re_derive_exactly() {
        for q in [2u64, 3] {
            let row = compute_row(q, ExecMode::Sequential, 0).unwrap();
            let want = expected_rows()
                .into_iter()
                .find(|e| e.q == q)
                .unwrap();
            assert_eq!(row.alpha, want.alpha);
            assert_eq!(row.iv, want.iv);
            assert_eq!(row.relax_value, row.iv);
            assert!((row.c - want.c).abs() <= C_TOLERANCE);
        }
    }

    #[test]
    fn nine_gap_closes_to_nineteen() {
        assert_eq!(nine_upper_bound().unwrap(), 19);
    }

    #[test]
    fn large_plane_row_uses_the_arc_construction() {
        let row = compute_row(16, ExecMode::Sequential, 0).unwrap();
        assert_eq!(row.alpha, 52);
        assert_eq!(row.iv, Rat::new(17, 21));
        assert_eq!(row.witness_source, "maximal-arc");
    }

    #[test]
    fn rendered_report_lists_every_plane() {
        let report = Table1Report {
            rows: vec![compute_row(2, ExecMode::Sequential, 0).unwrap()],
            diffs: vec![],
        };
        let text = render_text(&report);
        assert!(text.contains("5/7"));
        assert!(text.contains("all rows match"));
    }
}

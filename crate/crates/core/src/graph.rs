//! The bipartite point–hyperplane incidence graph of PG(n, q).
//!
//! Vertex indices: side one is the points of PG(n, q) in enumeration order,
//! side two the hyperplanes in the same order (the spaces are dual, so both
//! sides enumerate the same normalized vectors). Adjacency rows are bitsets.
//!
//! The build never tests all v^2 pairs: for each hyperplane it enumerates
//! the k points of its kernel from an explicit basis, normalizes each, and
//! locates it by binary search — O(v * k) point constructions total.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::field::{make_field, prime_power, FieldSpec};
use crate::geometry::{
    dot, enumerate_hyperplanes, enumerate_normalized, enumerate_points, pg_size, Hyperplane,
    ProjPoint,
};
use crate::par::{map_indexed, ExecMode};
use crate::Rat;

/// Refuse graphs with more vertices per side than this.
pub const MAX_SIDE: u64 = 100_000;

/// (v, k, lambda) of the point–hyperplane design of PG(n, q):
/// v = (q^{n+1}-1)/(q-1), k = (q^n-1)/(q-1), lambda = (q^{n-1}-1)/(q-1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DesignParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
}

impl DesignParams {
    pub fn of(n: u32, q: u64) -> DesignParams {
        assert!(n >= 1);
        DesignParams {
            v: pg_size(q, n),
            k: pg_size(q, n - 1),
            lambda: if n >= 2 { pg_size(q, n - 2) } else { 0 },
        }
    }

    /// lambda (v-1) = k (k-1): every point pair lies on lambda common
    /// hyperplanes, counted two ways.
    pub fn design_identity_holds(&self) -> bool {
        self.lambda * (self.v - 1) == self.k * (self.k - 1)
    }

    /// mu^2 = k - lambda, exactly (equals q^{n-1}).
    pub fn mu_sq(&self) -> u64 {
        self.k - self.lambda
    }

    pub fn mu(&self) -> f64 {
        (self.mu_sq() as f64).sqrt()
    }
}

/// A subset of the vertex set, kept per side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSet {
    pub points: BitSet,
    pub hyps: BitSet,
}

impl SplitSet {
    pub fn empty(v: usize) -> Self {
        SplitSet {
            points: BitSet::new(v),
            hyps: BitSet::new(v),
        }
    }

    pub fn len(&self) -> usize {
        self.points.count() + self.hyps.count()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty() && self.hyps.is_empty()
    }
}

/// Indices (into the sorted normalized list `reps`) of all representatives
/// orthogonal to `w`, in increasing order. `w` must be normalized (its last
/// nonzero coordinate 1) and `coeffs` must be `enumerate_normalized(f, n-1)`
/// for the matching dimension. Exactly k = (q^n - 1)/(q - 1) indices come
/// back: the projectivized kernel of w, built from the explicit basis
/// b_i = e_i - w_i e_{j*} where j* is the pivot position of w.
///
/// By self-duality of the point/hyperplane enumerations this answers both
/// "which points lie on hyperplane w" and, with the roles swapped, "which
/// hyperplanes pass through point w".
pub(crate) fn orthogonal_indices(
    f: &FieldSpec,
    w: &[u32],
    coeffs: &[Vec<u32>],
    reps: &[ProjPoint],
) -> Vec<u32> {
    let dim = w.len();
    let jstar = w.iter().rposition(|&c| c != 0).expect("nonzero rep");
    debug_assert_eq!(w[jstar], 1);
    // kernel basis: b_i = e_i - w_i e_{jstar} for i != jstar
    let free: Vec<usize> = (0..dim).filter(|&i| i != jstar).collect();
    let mut members = Vec::with_capacity(coeffs.len());
    let mut u = vec![0u32; dim];
    for c in coeffs {
        u.fill(0);
        let mut pivot = 0u32;
        for (m, &i) in free.iter().enumerate() {
            u[i] = c[m];
            pivot = f.add(pivot, f.mul(c[m], w[i]));
        }
        u[jstar] = f.neg(pivot);
        debug_assert_eq!(dot(f, &u, w), 0);
        let nu = crate::geometry::normalize(f, &u).expect("kernel vector nonzero");
        let idx = reps
            .binary_search_by(|p| p.coords.as_slice().cmp(nu.as_slice()))
            .expect("kernel point must exist");
        members.push(idx as u32);
    }
    members.sort_unstable();
    debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
    members
}

pub struct IncidenceGraph {
    n: u32,
    q: u32,
    field: FieldSpec,
    params: DesignParams,
    points: Vec<ProjPoint>,
    hyps: Vec<Hyperplane>,
    /// point_rows[i] = hyperplanes through point i.
    point_rows: Vec<BitSet>,
    /// hyp_rows[j] = points on hyperplane j.
    hyp_rows: Vec<BitSet>,
}

impl IncidenceGraph {
    pub fn build(n: u32, q: u64) -> Result<Self> {
        Self::build_with(n, q, ExecMode::auto())
    }

    pub fn build_with(n: u32, q: u64, mode: ExecMode) -> Result<Self> {
        if n < 1 {
            return Err(Error::Unsupported("projective dimension must be >= 1".into()));
        }
        let (p, e) = prime_power(q)?;
        let v = pg_size(q, n);
        if v > MAX_SIDE {
            return Err(Error::TooLarge {
                what: "points per side",
                value: v,
                limit: MAX_SIDE,
            });
        }
        let field = make_field(p, e)?;
        let params = DesignParams::of(n, q);
        debug_assert!(params.design_identity_holds());

        let points = enumerate_points(&field, n);
        let hyps = enumerate_hyperplanes(&field, n);
        let v = v as usize;
        // Coefficient vectors for the projectivized kernel of one hyperplane.
        let kernel_coeffs = enumerate_normalized(&field, n - 1);
        debug_assert_eq!(kernel_coeffs.len() as u64, params.k);

        let fld = &field;
        let pts = &points;
        let hps = &hyps;
        let coeffs = &kernel_coeffs;
        let hyp_members: Vec<Vec<u32>> = map_indexed(mode, v, move |j| {
            orthogonal_indices(fld, &hps[j].coords, coeffs, pts)
        });

        let mut hyp_rows = Vec::with_capacity(v);
        let mut point_rows = vec![BitSet::new(v); v];
        for (j, members) in hyp_members.iter().enumerate() {
            let mut row = BitSet::new(v);
            for &i in members {
                row.insert(i as usize);
                point_rows[i as usize].insert(j);
            }
            hyp_rows.push(row);
        }

        Ok(IncidenceGraph {
            n,
            q: q as u32,
            field,
            params,
            points,
            hyps,
            point_rows,
            hyp_rows,
        })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }
    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }
    #[inline]
    pub fn v(&self) -> usize {
        self.points.len()
    }
    pub fn params(&self) -> DesignParams {
        self.params
    }
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }
    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }
    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyps
    }
    /// Hyperplanes through point i.
    pub fn point_row(&self, i: usize) -> &BitSet {
        &self.point_rows[i]
    }
    /// Points on hyperplane j.
    pub fn hyp_row(&self, j: usize) -> &BitSet {
        &self.hyp_rows[j]
    }

    pub fn point_index(&self, p: &ProjPoint) -> Option<usize> {
        self.points.binary_search(p).ok()
    }

    pub fn hyp_index(&self, h: &Hyperplane) -> Option<usize> {
        self.hyps.binary_search(h).ok()
    }

    /// Open neighborhood N(X) for X given per side.
    pub fn neighborhood(&self, x: &SplitSet) -> SplitSet {
        let v = self.v();
        let mut n = SplitSet::empty(v);
        for j in x.hyps.iter() {
            n.points.union_assign(&self.hyp_rows[j]);
        }
        for i in x.points.iter() {
            n.hyps.union_assign(&self.point_rows[i]);
        }
        n.points.difference_assign(&x.points);
        n.hyps.difference_assign(&x.hyps);
        n
    }

    /// |N(X)| / |X| as an exact rational. Errors if X is empty or larger
    /// than one side (the isoperimetric quantity ranges over |X| <= v).
    pub fn iv_ratio(&self, x: &SplitSet) -> Result<Rat> {
        let size = x.len() as u64;
        if size == 0 {
            return Err(Error::EmptySet);
        }
        let v = self.v() as u64;
        if size > v {
            return Err(Error::SetTooLarge { size, limit: v });
        }
        let nb = self.neighborhood(x).len();
        Ok(Rat::new(nb as i64, size as i64))
    }

    /// Number of hyperplanes meeting no point of S.
    pub fn uncovered_lines(&self, s_points: &BitSet) -> u64 {
        let mut covered = BitSet::new(self.v());
        for i in s_points.iter() {
            covered.union_assign(&self.point_rows[i]);
        }
        (self.v() - covered.count()) as u64
    }

    /// The two-sided independence value S witnesses:
    /// min(|S|, hyperplanes meeting no point of S).
    pub fn alpha_value(&self, s_points: &BitSet) -> u64 {
        (s_points.count() as u64).min(self.uncovered_lines(s_points))
    }

    /// First incidence between S (points) and T (hyperplanes), if any:
    /// smallest point index, then smallest hyperplane index.
    pub fn first_violation(&self, s_points: &BitSet, t_hyps: &BitSet) -> Option<(usize, usize)> {
        for i in s_points.iter() {
            if let Some(j) = self.point_rows[i].first_common(t_hyps) {
                return Some((i, j));
            }
        }
        None
    }
}

//! Projective geometry PG(n, q) over an explicit field: points are
//! 1-dimensional subspaces of GF(q)^{n+1}, hyperplanes are n-dimensional
//! subspaces, and a point lies on a hyperplane iff the dot product of their
//! coordinate vectors vanishes.
//!
//! Canonical representatives: scale so the *last nonzero coordinate is 1*.
//! Enumeration order (and hence every vertex index downstream) is
//! lexicographic on the normalized coordinate vector, leftmost coordinate
//! most significant.

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    pub coords: Vec<FieldElement>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    pub coords: Vec<FieldElement>,
}

/// Number of points (equivalently hyperplanes) of PG(n, q).
pub fn pg_size(q: u64, n: u32) -> u64 {
    let mut s = 0u128;
    let mut t = 1u128;
    for _ in 0..=n {
        s += t;
        t *= q as u128;
    }
    u64::try_from(s).expect("pg_size overflow")
}

/// Scale a vector so its last nonzero coordinate is 1.
pub fn normalize(f: &FieldSpec, coords: &[u32]) -> Result<Vec<FieldElement>> {
    for &c in coords {
        f.check_code(c as u64)?;
    }
    let Some(j) = coords.iter().rposition(|&c| c != 0) else {
        return Err(Error::ZeroVector());
    };
    let s = f.inv(coords[j])?;
    Ok(coords.iter().map(|&c| f.mul(s, c)).collect())
}

/// Dot product; no validation (internal hot path).
#[inline]
pub(crate) fn dot(f: &FieldSpec, a: &[u32], b: &[u32]) -> u32 {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = 0u32;
    for (&x, &y) in a.iter().zip(b) {
        acc = f.add(acc, f.mul(x, y));
    }
    acc
}

/// Does `p` lie on `h`? Errors on dimension mismatch.
pub fn incident(f: &FieldSpec, p: &ProjPoint, h: &Hyperplane) -> Result<bool> {
    if p.coords.len() != h.coords.len() {
        return Err(Error::DimensionMismatch {
            got: h.coords.len(),
            expected: p.coords.len(),
        });
    }
    Ok(dot(f, &p.coords, &h.coords) == 0)
}

/// All normalized coordinate vectors of length n+1, sorted lexicographically.
/// Shared by point and hyperplane enumeration (the spaces are dual).
pub(crate) fn enumerate_normalized(f: &FieldSpec, n: u32) -> Vec<Vec<FieldElement>> {
    let q = f.q() as u64;
    let len = (n + 1) as usize;
    let total = pg_size(q, n) as usize;
    let mut out = Vec::with_capacity(total);
    for j in 0..len {
        // last nonzero at position j: free coordinates 0..j, then 1, then 0s
        let reps = q.pow(j as u32);
        for r in 0..reps {
            let mut v = vec![0u32; len];
            let mut t = r;
            for c in v.iter_mut().take(j) {
                *c = (t % q) as u32;
                t /= q;
            }
            v[j] = 1;
            out.push(v);
        }
    }
    debug_assert_eq!(out.len(), total);
    out.sort_unstable();
    out
}

/// All points of PG(n, q) in index order.
pub fn enumerate_points(f: &FieldSpec, n: u32) -> Vec<ProjPoint> {
    enumerate_normalized(f, n)
        .into_iter()
        .map(|coords| ProjPoint { coords })
        .collect()
}

/// All hyperplanes of PG(n, q) in index order.
pub fn enumerate_hyperplanes(f: &FieldSpec, n: u32) -> Vec<Hyperplane> {
    enumerate_normalized(f, n)
        .into_iter()
        .map(|coords| Hyperplane { coords })
        .collect()
}

/// Lift affine plane coordinates (x, y) to projective points (x, y, 1).
/// Element codes are validated against the field.
pub fn affine_embed(f: &FieldSpec, pairs: &[(u64, u64)]) -> Result<Vec<ProjPoint>> {
    pairs
        .iter()
        .map(|&(x, y)| {
            let x = f.check_code(x)?;
            let y = f.check_code(y)?;
            Ok(ProjPoint {
                coords: vec![x, y, 1],
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn sizes() {
        assert_eq!(pg_size(2, 2), 7);
        assert_eq!(pg_size(3, 2), 13);
        assert_eq!(pg_size(16, 2), 273);
        assert_eq!(pg_size(2, 3), 15);
        assert_eq!(pg_size(5, 1), 6);
    }

    #[test]
    fn normalize_examples() {
        let f7 = make_field(7, 1).unwrap();
        // 6^{-1} = 6 mod 7, so (2,4,6) scales to (12,24,36) = (5,3,1).
        assert_eq!(normalize(&f7, &[2, 4, 6]).unwrap(), vec![5, 3, 1]);
        assert_eq!(normalize(&f7, &[0, 3, 0]).unwrap(), vec![0, 1, 0]);
        assert!(matches!(
            normalize(&f7, &[0, 0, 0]),
            Err(Error::ZeroVector())
        ));
        assert!(normalize(&f7, &[1, 9, 0]).is_err()); // code out of range
    }

    #[test]
    fn normalize_is_scale_invariant_and_idempotent() {
        let f = make_field(3, 2).unwrap();
        for a in 0..9u32 {
            for b in 0..9u32 {
                for c in 0..9u32 {
                    if a == 0 && b == 0 && c == 0 {
                        continue;
                    }
                    let n0 = normalize(&f, &[a, b, c]).unwrap();
                    assert_eq!(normalize(&f, &n0).unwrap(), n0);
                    for s in 1..9u32 {
                        let scaled = [f.mul(s, a), f.mul(s, b), f.mul(s, c)];
                        assert_eq!(normalize(&f, &scaled).unwrap(), n0);
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_distinct_and_complete() {
        for (p, e, n) in [(2u32, 1u32, 2u32), (3, 1, 2), (2, 2, 2), (2, 1, 3), (3, 2, 2)] {
            let f = make_field(p, e).unwrap();
            let pts = enumerate_points(&f, n);
            assert_eq!(pts.len() as u64, pg_size(f.q() as u64, n));
            for w in pts.windows(2) {
                assert!(w[0] < w[1], "not sorted strictly");
            }
            for pt in &pts {
                assert_eq!(
                    normalize(&f, &pt.coords).unwrap(),
                    pt.coords,
                    "representative not normalized"
                );
            }
        }
    }

    #[test]
    fn fano_indices() {
        let f = make_field(2, 1).unwrap();
        let pts = enumerate_points(&f, 2);
        let expect: Vec<Vec<u32>> = vec![
            vec![0, 0, 1],
            vec![0, 1, 0],
            vec![0, 1, 1],
            vec![1, 0, 0],
            vec![1, 0, 1],
            vec![1, 1, 0],
            vec![1, 1, 1],
        ];
        assert_eq!(pts.iter().map(|p| p.coords.clone()).collect::<Vec<_>>(), expect);
    }

    #[test]
    fn incidence_examples() {
        let f3 = make_field(3, 1).unwrap();
        let p = ProjPoint {
            coords: vec![1, 2, 1],
        };
        let on = Hyperplane {
            coords: vec![1, 1, 0],
        };
        let off = Hyperplane {
            coords: vec![1, 1, 1],
        };
        assert!(incident(&f3, &p, &on).unwrap());
        assert!(!incident(&f3, &p, &off).unwrap());
        let short = Hyperplane { coords: vec![1, 1] };
        assert!(incident(&f3, &p, &short).is_err());
    }

    #[test]
    fn each_point_on_k_hyperplanes_small() {
        for q in [2u32, 3] {
            let f = make_field(q, 1).unwrap();
            let pts = enumerate_points(&f, 2);
            let hps = enumerate_hyperplanes(&f, 2);
            let k = q as usize + 1;
            for p in &pts {
                let deg = hps.iter().filter(|h| incident(&f, p, h).unwrap()).count();
                assert_eq!(deg, k);
            }
        }
    }

    #[test]
    fn affine_embed_gf9() {
        let f9 = make_field(3, 2).unwrap();
        // x = 2i+2 has code 2 + 3*2 = 8; y = 2i+1 has code 1 + 3*2 = 7.
        let pts = affine_embed(&f9, &[(8, 7)]).unwrap();
        assert_eq!(pts[0].coords, vec![8, 7, 1]);
        assert!(affine_embed(&f9, &[(9, 0)]).is_err());
    }
}

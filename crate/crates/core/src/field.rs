//! Exact arithmetic in GF(p^e), table-backed.
//!
//! Elements are codes `0..q` encoding coefficient vectors little-endian in
//! base p: the element a0 + a1*x + ... + a_{e-1}*x^{e-1} (x the class of the
//! generator of the polynomial representation) has code sum(a_i * p^i).
//! Consequently the prime subfield is always the codes `0..p`.
//!
//! The defining polynomial is pinned for the four small extension fields
//! used throughout (these are also the least under the code order, which the
//! tests assert):
//!
//!   GF(4): x^2 + x + 1     GF(8): x^3 + x + 1
//!   GF(9): x^2 + 1         GF(16): x^4 + x + 1
//!
//! and otherwise chosen as the monic irreducible whose non-leading
//! coefficient code is smallest. Irreducibility is always established by
//! trial: a monic degree-e polynomial over GF(p) is irreducible iff it has
//! no root in GF(p^j) for any j <= e/2, and the subfields are built
//! recursively to run exactly that trial — including for the pinned
//! polynomials.
//!
//! Supported sizes: q <= 2^16. Full q-by-q multiplication and addition
//! tables are kept for q <= 256 (every hot path in this crate); larger
//! fields fall back to exp/log tables for multiplication and coefficient
//! arithmetic for addition.

use crate::error::{Error, Result};

pub type FieldElement = u32;

/// Largest supported field size (exp/log tables stay tiny).
pub const MAX_FIELD_SIZE: u64 = 1 << 16;
/// Fields up to this size get full q*q multiplication/addition tables.
pub const FULL_TABLE_LIMIT: u32 = 256;

#[derive(Clone, Debug)]
pub struct FieldSpec {
    p: u32,
    e: u32,
    q: u32,
    /// Monic defining polynomial, length e+1, constant term first.
    irreducible: Vec<u32>,
    /// exp[i] = g^i for a fixed generator g, i in 0..=2(q-2); exp[q-1] = 1.
    exp: Vec<u32>,
    /// log[a] in 0..q-1 for a != 0; log[0] is a sentinel.
    log: Vec<u32>,
    inv_table: Vec<u32>,
    neg_table: Vec<u32>,
    mul_table: Option<Vec<u32>>,
    add_table: Option<Vec<u32>>,
    generator: u32,
}

/// Deterministic trial-division primality check.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Split q into (p, e) with p prime, q = p^e. Errors if q is not a prime power.
pub fn prime_power(q: u64) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = 2u64;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            if m == 1 {
                return Ok((p as u32, e));
            }
            return Err(Error::NotPrimePower(q));
        }
        p += 1;
    }
    Ok((q as u32, 1)) // q itself prime
}

/// Defining polynomials pinned by convention (constant term first, monic).
fn pinned_poly(p: u32, e: u32) -> Option<Vec<u32>> {
    match (p, e) {
        (2, 2) => Some(vec![1, 1, 1]),
        (2, 3) => Some(vec![1, 1, 0, 1]),
        (3, 2) => Some(vec![1, 0, 1]),
        (2, 4) => Some(vec![1, 1, 0, 0, 1]),
        _ => None,
    }
}

/// Polynomial multiplication of coefficient vectors mod a monic `irr`,
/// coefficients mod p. Used only during construction and in oracles; runtime
/// arithmetic goes through tables.
fn poly_mul_mod(p: u32, irr: &[u32], a: &[u32], b: &[u32]) -> Vec<u32> {
    let e = irr.len() - 1;
    let mut prod = vec![0u64; 2 * e.max(1)];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai as u64 * bj as u64) % p as u64;
        }
    }
    // reduce by the monic irr: x^e = -(irr[0] + ... + irr[e-1) x^{e-1})
    for d in (e..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for j in 0..e {
            let sub = c * irr[j] as u64 % p as u64;
            prod[d - e + j] = (prod[d - e + j] + p as u64 - sub) % p as u64;
        }
    }
    prod.truncate(e.max(1));
    prod.iter().map(|&c| c as u32).collect()
}

fn encode(p: u32, digits: &[u32]) -> u32 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn decode(p: u32, e: u32, code: u32) -> Vec<u32> {
    let mut c = code;
    (0..e)
        .map(|_| {
            let d = c % p;
            c /= p;
            d
        })
        .collect()
}

/// Evaluate a polynomial with prime-subfield coefficients at a point of `f`
/// (Horner). Valid because codes 0..p are the prime subfield of any GF(p^j).
fn eval_in(f: &FieldSpec, poly: &[u32], x: u32) -> u32 {
    let mut acc = 0u32;
    for &c in poly.iter().rev() {
        acc = f.add(f.mul(acc, x), c);
    }
    acc
}

/// True iff the monic `poly` (degree e >= 2, coefficients in 0..p) has no
/// root in GF(p^j) for every j <= e/2 — equivalent to irreducibility.
fn irreducible_by_trial(p: u32, poly: &[u32]) -> Result<bool> {
    let e = (poly.len() - 1) as u32;
    debug_assert!(e >= 2);
    for j in 1..=e / 2 {
        let sub = make_field(p, j)?;
        for x in 0..sub.q {
            if eval_in(&sub, poly, x) == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn factorize(mut n: u64) -> Vec<u64> {
    let mut fs = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            fs.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        fs.push(n);
    }
    fs
}

/// Build GF(p^e). See the module docs for the defining-polynomial rule.
pub fn make_field(p: u32, e: u32) -> Result<FieldSpec> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if e == 0 {
        return Err(Error::BadField("extension degree must be >= 1".into()));
    }
    let q128 = (p as u128).pow(e);
    if q128 > MAX_FIELD_SIZE as u128 {
        return Err(Error::FieldTooLarge(q128.min(u64::MAX as u128) as u64));
    }
    let q = q128 as u32;

    let irreducible = if e == 1 {
        vec![0, 1] // x itself: GF(p) = GF(p)[x]/(x)
    } else if let Some(pinned) = pinned_poly(p, e) {
        if !irreducible_by_trial(p, &pinned)? {
            return Err(Error::BadField(format!(
                "pinned polynomial for GF({q}) failed the irreducibility trial"
            )));
        }
        pinned
    } else {
        let mut found = None;
        for low in 0..q {
            let mut poly = decode(p, e, low);
            poly.push(1);
            if irreducible_by_trial(p, &poly)? {
                found = Some(poly);
                break;
            }
        }
        found.ok_or_else(|| {
            Error::BadField(format!("no monic irreducible of degree {e} over GF({p})"))
        })?
    };

    // Multiplication on codes via coefficient vectors, for bootstrapping.
    let mul_slow = |a: u32, b: u32| -> u32 {
        let pa = decode(p, e, a);
        let pb = decode(p, e, b);
        encode(p, &poly_mul_mod(p, &irreducible, &pa, &pb))
    };
    let pow_slow = |mut a: u32, mut n: u64| -> u32 {
        let mut acc = 1u32;
        while n > 0 {
            if n & 1 == 1 {
                acc = mul_slow(acc, a);
            }
            a = mul_slow(a, a);
            n >>= 1;
        }
        acc
    };

    // Find a multiplicative generator: order q-1 iff g^((q-1)/l) != 1 for
    // every prime l | q-1. Smallest code wins, so the choice is canonical.
    let order = (q - 1) as u64;
    let prime_divisors = factorize(order);
    let mut generator = 1u32;
    if q > 2 {
        generator = (2..q)
            .find(|&g| {
                prime_divisors
                    .iter()
                    .all(|&l| pow_slow(g, order / l) != 1)
            })
            .ok_or_else(|| Error::BadField(format!("no generator found for GF({q})")))?;
    }

    // exp/log tables; exp is doubled so mul never needs a modular reduction.
    let mut exp = vec![1u32; (2 * order as usize).saturating_sub(1).max(1)];
    let mut log = vec![u32::MAX; q as usize];
    log[1] = 0;
    let mut acc = 1u32;
    for i in 1..order as usize {
        acc = mul_slow(acc, generator);
        exp[i] = acc;
        log[acc as usize] = i as u32;
    }
    debug_assert_eq!(mul_slow(acc, generator), 1, "generator order must be q-1");
    for i in order as usize..exp.len() {
        exp[i] = exp[i - order as usize];
    }

    let mut inv_table = vec![0u32; q as usize];
    for a in 1..q {
        inv_table[a as usize] = if a == 1 {
            1
        } else {
            exp[(order - log[a as usize] as u64) as usize]
        };
    }

    let neg_table: Vec<u32> = (0..q)
        .map(|a| {
            let digits = decode(p, e, a);
            let neg: Vec<u32> = digits.iter().map(|&d| (p - d) % p).collect();
            encode(p, &neg)
        })
        .collect();

    let (mul_table, add_table) = if q <= FULL_TABLE_LIMIT {
        let mut mt = vec![0u32; (q * q) as usize];
        let mut at = vec![0u32; (q * q) as usize];
        for a in 0..q {
            let da = decode(p, e, a);
            for b in 0..q {
                mt[(a * q + b) as usize] = mul_slow(a, b);
                let db = decode(p, e, b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                at[(a * q + b) as usize] = encode(p, &sum);
            }
        }
        (Some(mt), Some(at))
    } else {
        (None, None)
    };

    Ok(FieldSpec {
        p,
        e,
        q,
        irreducible,
        exp,
        log,
        inv_table,
        neg_table,
        mul_table,
        add_table,
        generator,
    })
}

/// Build GF(p^e) with a caller-supplied defining polynomial (constant term
/// first, monic, length e+1). Used when re-verifying certificates, which
/// carry their own representation.
pub fn make_field_with_poly(p: u32, e: u32, poly: &[u32]) -> Result<FieldSpec> {
    if e >= 2 {
        if poly.len() != e as usize + 1 || poly[e as usize] != 1 {
            return Err(Error::BadField(format!(
                "defining polynomial must be monic of degree {e}"
            )));
        }
        if poly.iter().any(|&c| c >= p) {
            return Err(Error::BadField("polynomial coefficient out of range".into()));
        }
        if !irreducible_by_trial(p, poly)? {
            return Err(Error::BadField("defining polynomial is reducible".into()));
        }
    } else if poly != [0, 1] {
        return Err(Error::BadField("prime fields use the polynomial x".into()));
    }
    let canonical = make_field(p, e)?;
    if poly == canonical.irreducible {
        return Ok(canonical);
    }
    // Same trick as make_field but with the given polynomial. Rebuild from
    // scratch rather than sharing code paths that assume the canonical poly.
    let mut spec = canonical;
    spec.irreducible = poly.to_vec();
    rebuild_tables(&mut spec)?;
    Ok(spec)
}

fn rebuild_tables(spec: &mut FieldSpec) -> Result<()> {
    let (p, e, q) = (spec.p, spec.e, spec.q);
    let irr = spec.irreducible.clone();
    let mul_slow = |a: u32, b: u32| -> u32 {
        encode(p, &poly_mul_mod(p, &irr, &decode(p, e, a), &decode(p, e, b)))
    };
    let pow_slow = |mut a: u32, mut n: u64| -> u32 {
        let mut acc = 1u32;
        while n > 0 {
            if n & 1 == 1 {
                acc = mul_slow(acc, a);
            }
            a = mul_slow(a, a);
            n >>= 1;
        }
        acc
    };
    let order = (q - 1) as u64;
    let prime_divisors = factorize(order);
    spec.generator = if q == 2 {
        1
    } else {
        (2..q)
            .find(|&g| prime_divisors.iter().all(|&l| pow_slow(g, order / l) != 1))
            .ok_or_else(|| Error::BadField(format!("no generator found for GF({q})")))?
    };
    spec.exp = vec![1u32; (2 * order as usize).saturating_sub(1).max(1)];
    spec.log = vec![u32::MAX; q as usize];
    spec.log[1] = 0;
    let mut acc = 1u32;
    for i in 1..order as usize {
        acc = mul_slow(acc, spec.generator);
        spec.exp[i] = acc;
        spec.log[acc as usize] = i as u32;
    }
    for i in order as usize..spec.exp.len() {
        spec.exp[i] = spec.exp[i - order as usize];
    }
    for a in 1..q {
        spec.inv_table[a as usize] = if a == 1 {
            1
        } else {
            spec.exp[(order - spec.log[a as usize] as u64) as usize]
        };
    }
    if let (Some(mt), Some(at)) = (&mut spec.mul_table, &mut spec.add_table) {
        for a in 0..q {
            let da = decode(p, e, a);
            for b in 0..q {
                mt[(a * q + b) as usize] = mul_slow(a, b);
                let db = decode(p, e, b);
                let sum: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                at[(a * q + b) as usize] = encode(p, &sum);
            }
        }
    }
    Ok(())
}

impl FieldSpec {
    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }
    #[inline]
    pub fn e(&self) -> u32 {
        self.e
    }
    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }
    pub fn irreducible(&self) -> &[u32] {
        &self.irreducible
    }
    pub fn generator(&self) -> u32 {
        self.generator
    }

    /// Validate an externally supplied code (certificates, CLI input).
    pub fn check_code(&self, code: u64) -> Result<FieldElement> {
        if code < self.q as u64 {
            Ok(code as u32)
        } else {
            Err(Error::BadElement {
                code,
                q: self.q as u64,
            })
        }
    }

    /// a + b. Codes must be < q (checked in debug builds only; hot path).
    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.q && b < self.q);
        if let Some(t) = &self.add_table {
            t[(a * self.q + b) as usize]
        } else if self.e == 1 {
            let s = a + b;
            if s >= self.q {
                s - self.q
            } else {
                s
            }
        } else {
            let da = decode(self.p, self.e, a);
            let db = decode(self.p, self.e, b);
            let sum: Vec<u32> = da
                .iter()
                .zip(&db)
                .map(|(&x, &y)| (x + y) % self.p)
                .collect();
            encode(self.p, &sum)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        debug_assert!(a < self.q);
        self.neg_table[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// a * b. Codes must be < q (checked in debug builds only; hot path).
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.q && b < self.q);
        if let Some(t) = &self.mul_table {
            t[(a * self.q + b) as usize]
        } else if a == 0 || b == 0 {
            0
        } else {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        }
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        debug_assert!(a < self.q);
        if a == 0 {
            return Err(Error::DivisionByZero(self.q as u64));
        }
        Ok(self.inv_table[a as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, mut a: u32, mut n: u64) -> u32 {
        let mut acc = 1u32;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            n >>= 1;
        }
        acc
    }

    /// Coefficient vector (little-endian base p) of a code.
    pub fn decode(&self, code: u32) -> Vec<u32> {
        decode(self.p, self.e, code)
    }

    /// Code of a coefficient vector.
    pub fn encode(&self, digits: &[u32]) -> u32 {
        encode(self.p, digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL_Q: [(u32, u32); 10] = [
        (2, 1),
        (3, 1),
        (2, 2),
        (5, 1),
        (7, 1),
        (2, 3),
        (3, 2),
        (11, 1),
        (13, 1),
        (2, 4),
    ];

    /// Independent oracle: schoolbook polynomial product followed by long
    /// division by the defining polynomial, all on digit vectors.
    fn oracle_mul(f: &FieldSpec, a: u32, b: u32) -> u32 {
        let p = f.p() as u64;
        let e = f.e() as usize;
        let da = f.decode(a);
        let db = f.decode(b);
        let mut prod = vec![0u64; 2 * e];
        for i in 0..e {
            for j in 0..e {
                prod[i + j] += da[i] as u64 * db[j] as u64;
            }
        }
        for c in prod.iter_mut() {
            *c %= p;
        }
        // long division by the monic irreducible
        let irr: Vec<u64> = f.irreducible().iter().map(|&c| c as u64).collect();
        for d in (e..prod.len()).rev() {
            let lead = prod[d];
            if lead == 0 {
                continue;
            }
            prod[d] = 0;
            for j in 0..e {
                prod[d - e + j] = (prod[d - e + j] + (p - lead * irr[j] % p)) % p;
            }
        }
        let digits: Vec<u32> = prod[..e].iter().map(|&c| c as u32).collect();
        f.encode(&digits)
    }

    #[test]
    fn pinned_polynomials() {
        assert_eq!(make_field(2, 2).unwrap().irreducible(), &[1, 1, 1]);
        assert_eq!(make_field(2, 3).unwrap().irreducible(), &[1, 1, 0, 1]);
        assert_eq!(make_field(3, 2).unwrap().irreducible(), &[1, 0, 1]);
        assert_eq!(make_field(2, 4).unwrap().irreducible(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn pinned_polynomials_are_least_under_code_order() {
        // The pin and the search rule must agree; check by independent scan.
        for (p, e) in [(2u32, 2u32), (2, 3), (3, 2), (2, 4)] {
            let q = p.pow(e);
            let mut least = None;
            'outer: for low in 0..q {
                let mut poly = decode(p, e, low);
                poly.push(1);
                if irreducible_by_trial(p, &poly).unwrap() {
                    least = Some(poly);
                    break 'outer;
                }
            }
            assert_eq!(
                least.unwrap(),
                make_field(p, e).unwrap().irreducible().to_vec()
            );
        }
    }

    #[test]
    fn known_products() {
        // GF(16), x^4 = x + 1: codes 2 = x, 8 = x^3; x * x^3 = x^4 = x+1 = 3.
        let f16 = make_field(2, 4).unwrap();
        assert_eq!(f16.mul(2, 8), 3);
        // GF(8), x^3 = x + 1: 2 = x, 4 = x^2; x * x^2 = x+1 = 3.
        let f8 = make_field(2, 3).unwrap();
        assert_eq!(f8.mul(2, 4), 3);
        // GF(9), x^2 = -1: 3 = x; x * x = -1 = 2.
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(f9.mul(3, 3), 2);
        assert_eq!(f9.add(1, 2), 0);
        assert_eq!(f9.add(3, 6), 0); // x + 2x = 3x = 0 in char 3
    }

    #[test]
    fn axioms_exhaustive_small() {
        for (p, e) in SMALL_Q {
            let f = make_field(p, e).unwrap();
            let q = f.q();
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.mul(a, 0), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.mul(a, b), oracle_mul(&f, a, b));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                        assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
                    }
                }
            }
        }
    }

    #[test]
    fn generator_has_full_order() {
        for (p, e) in SMALL_Q {
            let f = make_field(p, e).unwrap();
            let g = f.generator();
            let mut seen = vec![false; f.q() as usize];
            let mut x = 1u32;
            for _ in 0..f.q() - 1 {
                assert!(!seen[x as usize], "generator order below q-1");
                seen[x as usize] = true;
                x = f.mul(x, g);
            }
            assert_eq!(x, 1);
        }
    }

    #[test]
    fn beyond_table_limit_uses_exp_log() {
        // GF(2^9) = 512 > 256: no full tables; axioms on a sample.
        let f = make_field(2, 9).unwrap();
        assert_eq!(f.q(), 512);
        let mut s = 12345u64;
        for _ in 0..500 {
            let a = (crate::rng::splitmix64(&mut s) % 512) as u32;
            let b = (crate::rng::splitmix64(&mut s) % 512) as u32;
            assert_eq!(f.mul(a, b), oracle_mul(&f, a, b));
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
        }
    }

    #[test]
    fn lex_least_search_gf25() {
        // Over GF(5), x^2+1 splits (4 is a square), x^2+2 does not: the
        // least defining polynomial under the code order is x^2 + 2.
        let f = make_field(5, 2).unwrap();
        assert_eq!(f.irreducible(), &[2, 0, 1]);
    }

    #[test]
    fn errors() {
        assert!(matches!(make_field(4, 1), Err(Error::NotPrime(4))));
        assert!(matches!(make_field(6, 2), Err(Error::NotPrime(6))));
        assert!(matches!(make_field(2, 0), Err(Error::BadField(_))));
        assert!(matches!(make_field(2, 17), Err(Error::FieldTooLarge(_))));
        let f = make_field(3, 1).unwrap();
        assert!(matches!(f.inv(0), Err(Error::DivisionByZero(3))));
        assert!(f.check_code(3).is_err());
        assert_eq!(f.check_code(2).unwrap(), 2);
    }

    #[test]
    fn prime_power_factoring() {
        assert_eq!(prime_power(16).unwrap(), (2, 4));
        assert_eq!(prime_power(13).unwrap(), (13, 1));
        assert_eq!(prime_power(49).unwrap(), (7, 2));
        assert!(prime_power(12).is_err());
        assert!(prime_power(1).is_err());
    }

    #[test]
    fn explicit_poly_round_trip() {
        // GF(9) with the non-canonical x^2 + x + 2 (irreducible over GF(3)).
        let f = make_field_with_poly(3, 2, &[2, 1, 1]).unwrap();
        assert_eq!(f.irreducible(), &[2, 1, 1]);
        // x^2 = -x - 2 = 2x + 1: code of x is 3, so 3*3 = 2*3 + 1 = 7.
        assert_eq!(f.mul(3, 3), 7);
        for a in 0..9 {
            for b in 0..9 {
                assert_eq!(f.mul(a, b), oracle_mul(&f, a, b));
            }
        }
        assert!(make_field_with_poly(3, 2, &[1, 0, 1]).is_ok()); // canonical
        assert!(make_field_with_poly(3, 2, &[2, 0, 1]).is_err()); // x^2+2 reducible mod 3
        assert!(make_field_with_poly(3, 2, &[1, 0, 2]).is_err()); // not monic
    }
}

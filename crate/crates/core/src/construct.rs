//! Direct constructions of standard families.
//!
//! These build tables from closed-form multiplication rules, with no coset
//! enumeration involved, so they double as an independent reference when
//! testing the presentation pipeline: a bundled presentation of D8 had
//! better produce a group that agrees with [`dihedral`]`(8)` invariant for
//! invariant.

use crate::error::{Error, Result};
use crate::group::{Elem, GroupTable};

/// C_n. Element `i` is the generator to the `i`-th power.
pub fn cyclic(n: usize) -> GroupTable {
    assert!(n >= 1);
    let rows: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    GroupTable::from_rows(rows, None).expect("cyclic table is a group")
}

/// Direct product on index pairs, `(a1, b1)(a2, b2) = (a1 a2, b1 b2)`,
/// encoded as `a * |B| + b`.
pub fn direct_product(a: &GroupTable, b: &GroupTable) -> GroupTable {
    let (na, nb) = (a.order(), b.order());
    let n = na * nb;
    let enc = |x: Elem, y: Elem| x * nb + y;
    let mut rows = vec![vec![0usize; n]; n];
    for x1 in 0..na {
        for y1 in 0..nb {
            for x2 in 0..na {
                for y2 in 0..nb {
                    rows[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
                }
            }
        }
    }
    GroupTable::from_rows(rows, None).expect("direct product of groups is a group")
}

/// Abelian group with the given cyclic factors.
pub fn abelian(factors: &[usize]) -> GroupTable {
    assert!(!factors.is_empty());
    let mut t = cyclic(factors[0]);
    for &f in &factors[1..] {
        t = direct_product(&t, &cyclic(f));
    }
    t
}

/// Metacyclic group `< a, b | a^m, b^s = a^t, b^-1 a b = a^r >`.
///
/// Elements are `a^i b^j` encoded as `j*m + i`. The parameters must be
/// consistent (`r^s = 1 mod m` and `t(r-1) = 0 mod m`); rather than check
/// the congruences up front we just validate the resulting table, which
/// rejects impossible parameter sets with a concrete witness.
pub fn metacyclic(m: usize, s: usize, t: usize, r: usize) -> Result<GroupTable> {
    if m == 0 || s == 0 {
        return Err(Error::Input("metacyclic parameters must be positive".into()));
    }
    let n = m * s;
    let enc = |i: usize, j: usize| j * m + i;
    // b^j a = a^(r^j) b^j
    let mut rpow = vec![1usize % m; s];
    for j in 1..s {
        rpow[j] = rpow[j - 1] * r % m;
    }
    let mut rows = vec![vec![0usize; n]; n];
    for i1 in 0..m {
        for j1 in 0..s {
            for i2 in 0..m {
                for j2 in 0..s {
                    // a^i1 b^j1 a^i2 b^j2 = a^(i1 + i2 r^j1) b^(j1+j2),
                    // folding b^s = a^t when the exponent wraps.
                    let mut i = (i1 + i2 * rpow[j1]) % m;
                    let mut j = j1 + j2;
                    if j >= s {
                        j -= s;
                        i = (i + t) % m;
                    }
                    rows[enc(i1, j1)][enc(i2, j2)] = enc(i, j);
                }
            }
        }
    }
    GroupTable::from_rows(rows, None)
}

/// Dihedral group of order `n` (so `n/2` rotations), `n` even, `n >= 4`.
pub fn dihedral(n: usize) -> GroupTable {
    assert!(n >= 4 && n % 2 == 0);
    metacyclic(n / 2, 2, 0, n / 2 - 1).expect("dihedral parameters are consistent")
}

/// Dicyclic group of order `4m`: `< a, b | a^2m, b^2 = a^m, b^-1 a b = a^-1 >`.
/// For `m` a power of two these are the generalized quaternion groups.
pub fn dicyclic(m: usize) -> GroupTable {
    assert!(m >= 2);
    metacyclic(2 * m, 2, m, 2 * m - 1).expect("dicyclic parameters are consistent")
}

/// Semidihedral group of order `2^k`, `k >= 4`:
/// `< a, b | a^(2^(k-1)), b^2, b^-1 a b = a^(2^(k-2) - 1) >`.
pub fn semidihedral(k: u32) -> GroupTable {
    assert!(k >= 4);
    let m = 1usize << (k - 1);
    metacyclic(m, 2, 0, m / 2 - 1).expect("semidihedral parameters are consistent")
}

/// Heisenberg group over Z/p: unitriangular 3x3 matrices, order p^3,
/// exponent p for odd p. Triple `(a, b, c)` encodes
/// `[[1, a, c], [0, 1, b], [0, 0, 1]]`.
pub fn heisenberg(p: usize) -> GroupTable {
    assert!(p >= 2);
    let n = p * p * p;
    let enc = |a: usize, b: usize, c: usize| (a * p + b) * p + c;
    let mut rows = vec![vec![0usize; n]; n];
    for a1 in 0..p {
        for b1 in 0..p {
            for c1 in 0..p {
                for a2 in 0..p {
                    for b2 in 0..p {
                        for c2 in 0..p {
                            let a = (a1 + a2) % p;
                            let b = (b1 + b2) % p;
                            let c = (c1 + c2 + a1 * b2) % p;
                            rows[enc(a1, b1, c1)][enc(a2, b2, c2)] = enc(a, b, c);
                        }
                    }
                }
            }
        }
    }
    GroupTable::from_rows(rows, None).expect("unitriangular matrices form a group")
}

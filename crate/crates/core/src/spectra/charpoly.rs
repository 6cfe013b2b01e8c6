use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{poly_mul, CharPoly};
use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};

/// Exact characteristic polynomial by Berkowitz's division-free algorithm.
///
/// Step `r` extends the polynomial of the leading `r x r` block to the
/// leading `(r+1) x (r+1)` block through a Toeplitz matrix whose entries are
/// `-R M^k C`, where `M` is the leading block, `C` the new column and `R` the
/// new row. For a 0/1 adjacency matrix these are walk counts, so every
/// product with `M` is a sum over neighbours.
pub fn char_poly(g: &Graph) -> CharPoly {
    let n = g.order();
    let adj = g.rows();
    // coefficients of the current block's polynomial, leading term first
    let mut vect: Vec<BigInt> = vec![BigInt::one(), BigInt::zero()];
    let mut w: Vec<BigInt> = Vec::with_capacity(n);
    let mut next: Vec<BigInt> = Vec::with_capacity(n);
    for r in 1..n {
        let below = adj[r] & ((bit(r)) - 1);
        let mut t = vec![BigInt::zero(); r + 2];
        t[0] = BigInt::one();
        w.clear();
        w.extend((0..r).map(|i| BigInt::from(u8::from(below & bit(i) != 0))));
        for k in 0..r {
            let rw: BigInt = bits(below).map(|j| &w[j]).sum();
            t[k + 2] = -rw;
            if k + 1 < r {
                next.clear();
                next.extend((0..r).map(|i| {
                    bits(adj[i] & (bit(r) - 1))
                        .map(|j| &w[j])
                        .sum::<BigInt>()
                }));
                std::mem::swap(&mut w, &mut next);
            }
        }
        let mut out = vec![BigInt::zero(); r + 2];
        for (i, slot) in out.iter_mut().enumerate() {
            for j in 0..=i.min(r) {
                if !t[i - j].is_zero() && !vect[j].is_zero() {
                    *slot += &t[i - j] * &vect[j];
                }
            }
        }
        vect = out;
    }
    vect.reverse();
    CharPoly::from_coeffs_unchecked(vect)
}

/// `(x+1)(x^2-1)^(n-1)(x^2-x-2n)`, expanded exactly.
pub fn friendship_char_poly(n: usize) -> Result<CharPoly> {
    if n == 0 {
        return Err(Error::Parameter {
            family: "friendship_char_poly",
            value: n,
            expected: "n >= 1",
        });
    }
    let b = |v: i64| BigInt::from(v);
    let mut p = vec![b(1), b(1)];
    let sq = [b(-1), b(0), b(1)];
    for _ in 1..n {
        p = poly_mul(&p, &sq);
    }
    p = poly_mul(&p, &[-BigInt::from(2 * n), b(-1), b(1)]);
    Ok(CharPoly::from_coeffs_unchecked(p))
}

/// Diagonal of `A^k` (closed walks of length `k` at each vertex).
pub fn closed_walks_per_vertex(g: &Graph, k: u32) -> Vec<u128> {
    let n = g.order();
    let adj = g.rows();
    // row i of A^j, built by one neighbour sum per step
    let mut cur: Vec<Vec<u128>> = (0..n)
        .map(|i| (0..n).map(|j| u128::from(i == j)).collect())
        .collect();
    for _ in 0..k {
        cur = cur
            .iter()
            .map(|row| {
                (0..n)
                    .map(|j| bits(adj[j]).map(|l| row[l]).sum())
                    .collect()
            })
            .collect();
    }
    (0..n).map(|i| cur[i][i]).collect()
}

/// `tr(A^k)` for `1 <= k <= 10`.
pub fn closed_walk_count(g: &Graph, k: u32) -> Result<u128> {
    if !(1..=10).contains(&k) {
        return Err(Error::Parameter {
            family: "closed_walk_count",
            value: k as usize,
            expected: "1 <= k <= 10",
        });
    }
    Ok(closed_walks_per_vertex(g, k).iter().sum())
}

pub fn are_cospectral(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.edge_count() == h.edge_count() && char_poly(g) == char_poly(h)
}

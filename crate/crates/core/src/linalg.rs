//! Small exact linear algebra kernel over ℤ and ℚ.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::vector::Rational;

pub type IntMatrix = Vec<Vec<i64>>;
pub type RatMatrix = Vec<Vec<Rational>>;

/// Determinant by fraction-free Bareiss elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Exact inverse by Gauss–Jordan elimination. Returns `None` if singular.
pub fn inverse(m: &IntMatrix) -> Option<RatMatrix> {
    let n = m.len();
    let mut a: RatMatrix = m
        .iter()
        .map(|row| row.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect();
    let mut inv: RatMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[r][j] -= t;
                let t = &f * &inv[col][j];
                inv[r][j] -= t;
            }
        }
    }
    Some(inv)
}

/// Non-trivial invariant factors `d_1 | d_2 | …` of an integer matrix, i.e. the
/// diagonal of its Smith normal form with unit entries dropped. For a
/// non-degenerate Gram matrix this is the shape of the discriminant group.
pub fn smith_invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block as pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut reduced = true;
        for i in t + 1..rows {
            let q = a[i][t].div_floor(&a[t][t]);
            if !q.is_zero() {
                for j in t..cols {
                    let v = &q * &a[t][j];
                    a[i][j] -= v;
                }
            }
            if !a[i][t].is_zero() {
                reduced = false;
            }
        }
        for j in t + 1..cols {
            let q = a[t][j].div_floor(&a[t][t]);
            if !q.is_zero() {
                for i in t..rows {
                    let v = &q * &a[i][t];
                    a[i][j] -= v;
                }
            }
            if !a[t][j].is_zero() {
                reduced = false;
            }
        }
        if !reduced {
            continue;
        }
        // pivot must divide the rest of the block
        let offender = (t + 1..rows)
            .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
        if let Some((i, _)) = offender {
            for j in t..cols {
                let v = a[i][j].clone();
                a[t][j] += v;
            }
            continue;
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag.into_iter().filter(|d| !d.is_one()).collect()
}

/// `Q = Σ_i d_i (x_i + Σ_{j>i} μ_{ij} x_j)²` for a positive definite rational
/// form `Q`; returns `(d, μ)`.
pub fn square_completion(q: &RatMatrix) -> Option<(Vec<Rational>, RatMatrix)> {
    let n = q.len();
    let mut a = q.clone();
    let mut d = vec![Rational::zero(); n];
    let mut mu = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        if !a[i][i].is_positive() {
            return None;
        }
        d[i] = a[i][i].clone();
        for j in i + 1..n {
            mu[i][j] = &a[i][j] / &d[i];
        }
        for j in i + 1..n {
            for k in i + 1..n {
                let v = &mu[i][j] * &a[i][k];
                a[j][k] -= v;
            }
        }
    }
    Some((d, mu))
}

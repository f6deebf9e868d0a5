//! Independent oracles for the integration tests. Nothing here calls the
//! library's linear algebra, enumeration or Weyl code; only Gram matrices
//! and the vector type cross the boundary.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use rootlat_core::{Kind, LatticeVector};

/// Fractions over i128 for the oracle's own matrix inversion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frac {
    pub num: i128,
    pub den: i128,
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Frac {
    pub fn new(num: i128, den: i128) -> Self {
        let g = gcd(num, den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Frac {
            num: s * num / g,
            den: s * den / g,
        }
    }
    fn int(n: i128) -> Self {
        Frac { num: n, den: 1 }
    }
    fn add(self, o: Self) -> Self {
        Frac::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }
    fn sub(self, o: Self) -> Self {
        Frac::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }
    fn mul(self, o: Self) -> Self {
        Frac::new(self.num * o.num, self.den * o.den)
    }
    fn div(self, o: Self) -> Self {
        Frac::new(self.num * o.den, self.den * o.num)
    }
    pub fn to_big(self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(self.den))
    }
}

/// Gram matrix written out directly from the labelled diagrams.
pub fn gram(kind: Kind, n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0; n]; n];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -2;
    }
    let mut edges = Vec::new();
    match kind {
        Kind::A => edges.extend((1..n).map(|i| (i - 1, i))),
        Kind::D => {
            edges.extend((1..n - 2).map(|i| (i - 1, i)));
            edges.push((n - 3, n - 2));
            edges.push((n - 3, n - 1));
        }
        Kind::E => {
            edges.extend((2..n).map(|i| (i - 1, i)));
            edges.push((0, 3));
        }
    }
    for (a, b) in edges {
        g[a][b] = 1;
        g[b][a] = 1;
    }
    g
}

pub fn block_diagonal(blocks: &[Vec<Vec<i64>>]) -> Vec<Vec<i64>> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut g = vec![vec![0; n]; n];
    let mut off = 0;
    for b in blocks {
        for i in 0..b.len() {
            for j in 0..b.len() {
                g[off + i][off + j] = b[i][j];
            }
        }
        off += b.len();
    }
    g
}

pub fn invert(g: &[Vec<i64>]) -> Vec<Vec<Frac>> {
    let n = g.len();
    let mut a: Vec<Vec<Frac>> = g
        .iter()
        .map(|r| r.iter().map(|&x| Frac::int(x as i128)).collect())
        .collect();
    let mut inv: Vec<Vec<Frac>> = (0..n)
        .map(|i| (0..n).map(|j| Frac::int((i == j) as i128)).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| a[r][c].num != 0).expect("non-singular");
        a.swap(c, p);
        inv.swap(c, p);
        let piv = a[c][c];
        for j in 0..n {
            a[c][j] = a[c][j].div(piv);
            inv[c][j] = inv[c][j].div(piv);
        }
        for r in 0..n {
            if r != c && a[r][c].num != 0 {
                let f = a[r][c];
                for j in 0..n {
                    a[r][j] = a[r][j].sub(f.mul(a[c][j]));
                    inv[r][j] = inv[r][j].sub(f.mul(inv[c][j]));
                }
            }
        }
    }
    inv
}

/// A dual vector found by the naive box search.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BoxVector {
    pub coefficients: Vec<Frac2>,
    pub square: (i128, i128),
    pub integral: bool,
}

/// Sortable fraction pair `(num, den)` with den > 0.
pub type Frac2 = (i128, i128);

impl BoxVector {
    pub fn to_lattice_vector(&self) -> LatticeVector {
        LatticeVector::new(
            self.coefficients
                .iter()
                .map(|&(p, q)| Frac::new(p, q).to_big())
                .collect(),
        )
    }
    pub fn square_big(&self) -> BigRational {
        Frac::new(self.square.0, self.square.1).to_big()
    }
}

/// Every nonzero `w ∈ L^∨` with `bound ≤ w² < 0` by scanning the full box
/// `|w · v_i| ≤ ⌊√(2|bound|)⌋` (Cauchy–Schwarz against `v_i² = −2`).
/// `bound` is given as a fraction `(num, den)`.
pub fn box_dual_vectors(g: &[Vec<i64>], bound: (i128, i128)) -> Vec<BoxVector> {
    let n = g.len();
    let inv = invert(g);
    let den = inv.iter().flatten().fold(1i128, |acc, f| acc / gcd(acc, f.den) * f.den);
    // integer matrix M = den·G⁻¹
    let m: Vec<Vec<i128>> = inv
        .iter()
        .map(|r| r.iter().map(|f| f.num * (den / f.den)).collect())
        .collect();
    let limit = {
        let mut b = 0i128;
        while (b + 1) * (b + 1) * bound.1 <= 2 * (-bound.0) {
            b += 1;
        }
        b
    };
    let mut out = Vec::new();
    let mut c = vec![-limit; n];
    loop {
        if c.iter().any(|&x| x != 0) {
            let a: Vec<i128> = (0..n).map(|i| (0..n).map(|j| m[i][j] * c[j]).sum()).collect();
            let q: i128 = (0..n).map(|i| c[i] * a[i]).sum();
            // w² = q/den ≥ bound  ⇔  q·bound.1 ≥ bound.0·den
            if q * bound.1 >= bound.0 * den {
                let coefficients = a
                    .iter()
                    .map(|&x| {
                        let f = Frac::new(x, den);
                        (f.num, f.den)
                    })
                    .collect::<Vec<_>>();
                let integral = coefficients.iter().all(|&(_, d)| d == 1);
                let s = Frac::new(q, den);
                out.push(BoxVector {
                    coefficients,
                    square: (s.num, s.den),
                    integral,
                });
            }
        }
        // odometer
        let mut i = 0;
        loop {
            if i == n {
                out.sort_by_key(|x| x.to_lattice_vector());
                return out;
            }
            if c[i] < limit {
                c[i] += 1;
                break;
            }
            c[i] = -limit;
            i += 1;
        }
    }
}

/// Hand-maintained simple-vertex table (1-based labels).
pub fn simple_vertex_table(kind: Kind, n: usize) -> Vec<usize> {
    match kind {
        Kind::A => (1..=n).collect(),
        Kind::D => vec![1, n - 1, n],
        Kind::E => match n {
            6 => vec![2, 6],
            7 => vec![7],
            _ => vec![],
        },
    }
}

/// All irreducible lattices with rank in `1..=max`.
pub fn irreducibles(max: usize) -> Vec<(Kind, usize)> {
    let mut out: Vec<(Kind, usize)> = (1..=max).map(|n| (Kind::A, n)).collect();
    out.extend((4..=max).map(|n| (Kind::D, n)));
    out.extend((6..=max.min(8)).map(|n| (Kind::E, n)));
    out
}

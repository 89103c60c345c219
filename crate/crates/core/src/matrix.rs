//! Exact integer matrices: fraction-free determinants, interpolated
//! characteristic polynomials and the Ryser permanent.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bigpoly::IntPolynomial;
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};
use crate::orient::Orientation;

/// Size cap for the Ryser permanent.
pub const PERMANENT_BOUND: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(n: usize) -> IntMatrix {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> IntMatrix {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n));
        IntMatrix {
            n,
            entries: rows
                .iter()
                .flat_map(|r| r.iter().map(|&x| BigInt::from(x)))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn matmul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        let mut out = IntMatrix::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..self.n {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    /// 0/1 adjacency matrix of a graph.
    pub fn adjacency(g: &Graph) -> IntMatrix {
        let mut m = IntMatrix::zero(g.n());
        for &(u, v) in g.edges() {
            m.set(u, v, BigInt::one());
            m.set(v, u, BigInt::one());
        }
        m
    }

    /// Skew adjacency matrix of an oriented graph: +1 from tail to head.
    pub fn skew_adjacency(g: &Graph, o: &Orientation) -> IntMatrix {
        let mut m = IntMatrix::zero(g.n());
        for e in 0..g.m() {
            let (t, h) = o.direction(e);
            m.set(t, h, BigInt::one());
            m.set(h, t, -BigInt::one());
        }
        m
    }

    /// Exact determinant by Bareiss fraction-free elimination with row
    /// pivoting.
    pub fn det_bareiss(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
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
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = &num / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }
}

/// The skew biadjacency block of an oriented balanced bipartite graph:
/// rows are side-0 vertices ascending, columns side-1 ascending, entry +1
/// when the edge is oriented row to column.
pub fn skew_biadjacency(g: &Graph, coloring: &Coloring, o: &Orientation) -> Result<IntMatrix> {
    let us = coloring.part_u();
    let vs = coloring.part_v();
    if us.len() != vs.len() {
        return Err(Error::UnbalancedParts);
    }
    let k = us.len();
    let row_of: std::collections::HashMap<usize, usize> =
        us.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let col_of: std::collections::HashMap<usize, usize> =
        vs.iter().enumerate().map(|(j, &v)| (v, j)).collect();
    let mut b = IntMatrix::zero(k);
    for e in 0..g.m() {
        let (t, h) = o.direction(e);
        if let (Some(&i), Some(&j)) = (row_of.get(&t), col_of.get(&h)) {
            b.set(i, j, BigInt::one());
        } else {
            let (&i, &j) = (&row_of[&h], &col_of[&t]);
            b.set(i, j, -BigInt::one());
        }
    }
    Ok(b)
}

/// Exact characteristic polynomial det(xI - M): evaluates the determinant
/// at the integer points 0..=n by Bareiss elimination and interpolates over
/// the rationals; the result is asserted integral and monic.
pub fn charpoly(m: &IntMatrix) -> IntPolynomial {
    let n = m.order();
    let points: Vec<BigInt> = (0..=n as i64).map(BigInt::from).collect();
    let values: Vec<BigInt> = points
        .iter()
        .map(|x| {
            let mut shifted = m.neg();
            for i in 0..n {
                let v = shifted.get(i, i) + x;
                shifted.set(i, i, v);
            }
            shifted.det_bareiss()
        })
        .collect();
    let poly = lagrange_interpolate(&points, &values);
    assert_eq!(poly.degree(), Some(n));
    assert!(poly.coeff(n).is_one(), "characteristic polynomial is monic");
    poly
}

fn lagrange_interpolate(points: &[BigInt], values: &[BigInt]) -> IntPolynomial {
    let k = points.len();
    let mut acc: Vec<BigRational> = vec![BigRational::zero(); k];
    for i in 0..k {
        // Basis polynomial for point i, built as exact rationals.
        let mut basis = vec![BigRational::zero(); k];
        basis[0] = BigRational::one();
        let mut deg = 0;
        let mut denom = BigRational::one();
        for j in 0..k {
            if j == i {
                continue;
            }
            denom *= BigRational::from(&points[i] - &points[j]);
            // basis *= (x - points[j])
            for d in (0..=deg).rev() {
                let c = basis[d].clone();
                basis[d + 1] += c.clone();
                basis[d] = -c * BigRational::from(points[j].clone());
            }
            deg += 1;
        }
        let w = BigRational::from(values[i].clone()) / denom;
        for d in 0..=deg {
            acc[d] += &basis[d] * &w;
        }
    }
    let coeffs: Vec<BigInt> = acc
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolation must yield integers");
            c.to_integer()
        })
        .collect();
    IntPolynomial::from_coeffs(coeffs)
}

/// Exact permanent by Ryser's inclusion-exclusion with Gray-code column
/// updates. Exponential in the order; capped at `PERMANENT_BOUND`.
pub fn permanent(m: &IntMatrix) -> Result<BigInt> {
    let n = m.order();
    if n > PERMANENT_BOUND {
        return Err(Error::TooLarge {
            n,
            bound: PERMANENT_BOUND,
        });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut sums: Vec<BigInt> = vec![BigInt::zero(); n];
    let mut total = BigInt::zero();
    let mut prev_gray: u64 = 0;
    for t in 1u64..(1u64 << n) {
        let gray = t ^ (t >> 1);
        let changed = (gray ^ prev_gray).trailing_zeros() as usize;
        let added = gray & (1 << changed) != 0;
        for (i, s) in sums.iter_mut().enumerate() {
            let a = m.get(i, changed);
            if added {
                *s += a;
            } else {
                *s -= a;
            }
        }
        prev_gray = gray;
        let mut prod = BigInt::one();
        for s in &sums {
            if s.is_zero() {
                prod = BigInt::zero();
                break;
            }
            prod *= s;
        }
        let parity = (n as u32 - gray.count_ones()) % 2;
        if parity == 0 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    Ok(total)
}

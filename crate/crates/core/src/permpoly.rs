//! Permanental polynomials per(xI - A(G)) of bipartite graphs.
//!
//! Three routes are implemented and cross-checked: a brute-force sum of
//! principal subpermanents, the determinant of xI minus the skew adjacency
//! matrix of an all-cycles-odd orientation, and the balanced-bipartite form
//! det(x^2 I + B^T B) over the skew biadjacency block. The last two are
//! valid exactly for graphs without an even subdivision of K_2,3. Closed
//! forms for two parametric families and a structured determinant round
//! out the toolkit.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bigpoly::IntPolynomial;
use crate::cycles::enumerate_cycles_with_bound;
use crate::error::{Error, Result};
use crate::graph::{bipartition, Coloring, Graph};
use crate::matrix::{charpoly, skew_biadjacency, IntMatrix};
use crate::orient::{orient_graph, Orientation};
use crate::resonance::contains_no_even_k23;

/// Size cap for the subset-sum permanental polynomial oracle. The n = 18
/// worst case takes seconds in release builds (roughly a minute
/// unoptimized); everything up to 14 is fast.
pub const PERM_POLY_ORACLE_BOUND: usize = 18;

/// Brute-force permanental polynomial: coefficient b_k of x^(n-k) is
/// (-1)^k times the sum of the k-by-k principal subpermanents of the
/// adjacency matrix, each evaluated by Ryser inclusion-exclusion.
pub fn perm_poly_oracle(g: &Graph) -> Result<IntPolynomial> {
    let n = g.n();
    if n > PERM_POLY_ORACLE_BOUND {
        return Err(Error::TooLarge {
            n,
            bound: PERM_POLY_ORACLE_BOUND,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u32, |acc, &(w, _)| acc | (1 << w))
        })
        .collect();
    let mut subperm_sums = vec![0i128; n + 1];
    subperm_sums[0] = 1;
    for subset in 1u32..(1u32 << n) {
        let k = subset.count_ones() as usize;
        subperm_sums[k] += principal_subpermanent(&adj, subset);
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for k in 0..=n {
        let b_k = if k % 2 == 0 {
            BigInt::from(subperm_sums[k])
        } else {
            -BigInt::from(subperm_sums[k])
        };
        coeffs[n - k] = b_k;
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

/// Ryser over column subsets of the principal submatrix on `subset`.
fn principal_subpermanent(adj: &[u32], subset: u32) -> i128 {
    let rows: Vec<u32> = (0..adj.len())
        .filter(|&i| subset & (1 << i) != 0)
        .map(|i| adj[i] & subset)
        .collect();
    let k = rows.len() as u32;
    let mut total = 0i128;
    let mut t = subset;
    loop {
        if t != 0 {
            let mut prod = 1i128;
            for &row in &rows {
                let s = (row & t).count_ones() as i128;
                if s == 0 {
                    prod = 0;
                    break;
                }
                prod *= s;
            }
            if (k - t.count_ones()) % 2 == 0 {
                total += prod;
            } else {
                total -= prod;
            }
        }
        if t == 0 {
            break;
        }
        t = (t - 1) & subset;
    }
    total
}

/// Permanental polynomial by the determinant route: orient the graph so
/// every cycle is oddly oriented and take the characteristic polynomial of
/// the skew adjacency matrix.
pub fn perm_poly_fast(g: &Graph) -> Result<IntPolynomial> {
    bipartition(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let o = orient_graph(g)?;
    Ok(charpoly(&IntMatrix::skew_adjacency(g, &o)))
}

/// Permanental polynomial of a balanced bipartite graph without even
/// subdivisions of K_2,3 as det(x^2 I + B^T B), where B is the skew
/// biadjacency block of the orientation.
pub fn perm_poly_biadjacency(
    g: &Graph,
    coloring: &Coloring,
    o: &Orientation,
) -> Result<IntPolynomial> {
    let report = contains_no_even_k23(g)?;
    if !report.verdict {
        return Err(Error::ContainsEvenK23);
    }
    let b = skew_biadjacency(g, coloring, o)?;
    let btb = b.transpose().matmul(&b);
    // det(x^2 I + B^T B) is the characteristic polynomial of -B^T B
    // evaluated at x^2.
    Ok(charpoly(&btb.neg()).substitute_x_squared())
}

/// Closed form for the family of `s >= 2` internally disjoint length-3
/// paths between two hubs:
/// (x^2+s-1)(x^2+1)^s + (x^2+1)^s + s(x^2+s-1)(x^2+1)^(s-1).
pub fn closed_form_g1(s: usize) -> IntPolynomial {
    assert!(s >= 2);
    let q = IntPolynomial::x_squared_plus(1);
    let p = IntPolynomial::x_squared_plus(s as i64 - 1);
    let inner = p
        .mul(&q)
        .add(&q)
        .add(&p.scale(&BigInt::from(s)));
    q.pow(s as u32 - 1).mul(&inner)
}

/// Closed form for the double-star family with `r >= 1` leaf pairs:
/// (x^2+2+r)(x^2+2)^(2r-2) [x^4+(3+r)x^2+(r+2)].
pub fn closed_form_g2(r: usize) -> IntPolynomial {
    assert!(r >= 1);
    let q = IntPolynomial::x_squared_plus(2);
    let head = IntPolynomial::x_squared_plus(2 + r as i64);
    let quartic = IntPolynomial::from_i64(&[r as i64 + 2, 0, r as i64 + 3, 0, 1]);
    q.pow(2 * r as u32 - 2).mul(&head).mul(&quartic)
}

/// Determinant of the matrix with diagonal `a` and constant off-diagonal
/// `b`. Away from poles it is evaluated through the rational closed form
/// (1 + b * sum 1/(a_i - b)) * prod (a_i - b); at a pole (b equal to some
/// a_i) it falls back to a direct fraction-free determinant.
pub fn structured_det_dn(a: &[BigInt], b: &BigInt) -> BigInt {
    if a.iter().any(|ai| ai == b) {
        return dn_matrix(a, b).det_bareiss();
    }
    let mut prod = BigRational::one();
    let mut inv_sum = BigRational::zero();
    for ai in a {
        let d = BigRational::from(ai - b);
        inv_sum += d.recip();
        prod *= d;
    }
    let value = (BigRational::one() + BigRational::from(b.clone()) * inv_sum) * prod;
    assert!(value.is_integer(), "the closed form of D_n is integral");
    value.to_integer()
}

/// The matrix whose determinant `structured_det_dn` computes.
pub fn dn_matrix(a: &[BigInt], b: &BigInt) -> IntMatrix {
    let n = a.len();
    let mut m = IntMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, if i == j { a[i].clone() } else { b.clone() });
        }
    }
    m
}

/// Coefficient transfer from the characteristic to the permanental
/// polynomial, valid for bipartite graphs with no cycle length divisible
/// by four: the alternating signs of det(xI - A) are simply flipped.
pub fn borowiecki_transfer(g: &Graph) -> Result<IntPolynomial> {
    borowiecki_transfer_with_bound(g, crate::cycles::DEFAULT_CYCLE_BOUND)
}

pub fn borowiecki_transfer_with_bound(g: &Graph, bound: usize) -> Result<IntPolynomial> {
    bipartition(g)?;
    for c in enumerate_cycles_with_bound(g, bound)? {
        if c.len() % 4 == 0 {
            return Err(Error::HasCycleLengthDivisibleBy4);
        }
    }
    let phi = charpoly(&IntMatrix::adjacency(g));
    let n = g.n();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for j in 0..=n {
        let c = phi.coeff(j);
        if (n - j) % 2 == 1 {
            assert!(c.is_zero(), "bipartite characteristic polynomial parity");
            continue;
        }
        let k = (n - j) / 2;
        coeffs[j] = if k % 2 == 0 { c } else { -c };
    }
    Ok(IntPolynomial::from_coeffs(coeffs))
}

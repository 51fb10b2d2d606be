//! Integer matrix normal forms: Smith normal form with verified unimodular
//! transforms, fraction-free determinants, and the exact signature of a
//! symmetric integer matrix.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Result of a Smith normal form computation for an `r x c` matrix `M`:
/// unimodular `left` (`r x r`) and `right` (`c x c`) with
/// `left * M * right = diag(diag)`, where `diag` is nonnegative and each
/// entry divides the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub diag: Vec<BigInt>,
    pub left: Vec<Vec<BigInt>>,
    pub right: Vec<Vec<BigInt>>,
}

impl SnfResult {
    /// Invariant factors different from 1, zeros included — the cyclic
    /// decomposition of the cokernel.
    pub fn nontrivial_factors(&self) -> Vec<BigInt> {
        self.diag
            .iter()
            .filter(|d| !d.is_one())
            .cloned()
            .collect()
    }
}

pub fn to_bigint_matrix(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect()
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let r = a.len();
    let inner = if r == 0 { 0 } else { a[0].len() };
    let c = if b.is_empty() { 0 } else { b[0].len() };
    (0..r)
        .map(|i| {
            (0..c)
                .map(|j| (0..inner).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Fraction-free (Bareiss) determinant.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "determinant needs a square matrix");
    let mut a = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev; // exact by Sylvester's identity
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    rows: usize,
    cols: usize,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        self.u.swap(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.a {
            row.swap(i, j);
        }
        for row in &mut self.v {
            row.swap(i, j);
        }
    }

    /// row_i -= q * row_j
    fn row_sub(&mut self, i: usize, j: usize, q: &BigInt) {
        for k in 0..self.cols {
            let d = &self.a[j][k] * q;
            self.a[i][k] -= d;
        }
        for k in 0..self.rows {
            let d = &self.u[j][k] * q;
            self.u[i][k] -= d;
        }
    }

    /// col_i -= q * col_j
    fn col_sub(&mut self, i: usize, j: usize, q: &BigInt) {
        for row in &mut self.a {
            let d = &row[j] * q;
            row[i] -= d;
        }
        for row in &mut self.v {
            let d = &row[j] * q;
            row[i] -= d;
        }
    }

    fn row_add(&mut self, i: usize, j: usize) {
        for k in 0..self.cols {
            let d = self.a[j][k].clone();
            self.a[i][k] += d;
        }
        for k in 0..self.rows {
            let d = self.u[j][k].clone();
            self.u[i][k] += d;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for v in &mut self.a[i] {
            *v = -v.clone();
        }
        for v in &mut self.u[i] {
            *v = -v.clone();
        }
    }

    fn min_nonzero_from(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                if self.a[i][j].is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if self.a[i][j].abs() < self.a[bi][bj].abs() {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        best
    }
}

/// Smith normal form. The returned transforms are always verified:
/// `left * M * right` must reproduce the diagonal and both transforms must
/// have determinant `±1`, otherwise this panics (it computed a wrong answer,
/// which must never be silent).
pub fn smith_normal_form(m: &[Vec<BigInt>]) -> SnfResult {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    assert!(m.iter().all(|r| r.len() == cols), "ragged matrix");
    let mut w = Work {
        a: m.to_vec(),
        u: identity(rows),
        v: identity(cols),
        rows,
        cols,
    };

    let k = rows.min(cols);
    for t in 0..k {
        'pivot: loop {
            let Some((pi, pj)) = w.min_nonzero_from(t) else {
                break; // remaining block is zero
            };
            if pi != t {
                w.swap_rows(t, pi);
            }
            if pj != t {
                w.swap_cols(t, pj);
            }
            // clear column t below the pivot, then row t to its right;
            // truncated division leaves remainders strictly smaller than
            // the pivot, so reiterating terminates
            let mut clean = true;
            for i in t + 1..w.rows {
                if !w.a[i][t].is_zero() {
                    let q = &w.a[i][t] / &w.a[t][t];
                    if !q.is_zero() {
                        w.row_sub(i, t, &q);
                    }
                    if !w.a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..w.cols {
                if !w.a[t][j].is_zero() {
                    let q = &w.a[t][j] / &w.a[t][t];
                    if !q.is_zero() {
                        w.col_sub(j, t, &q);
                    }
                    if !w.a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // divisibility pass: drag any entry the pivot misses into row t
            for i in t + 1..w.rows {
                for j in t + 1..w.cols {
                    if !(&w.a[i][j] % &w.a[t][t]).is_zero() {
                        w.row_add(t, i);
                        continue 'pivot;
                    }
                }
            }
            break;
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
    }

    let diag: Vec<BigInt> = (0..k).map(|t| w.a[t][t].clone()).collect();
    for t in 1..k {
        if !diag[t - 1].is_zero() {
            assert!(
                (&diag[t] % &diag[t - 1]).is_zero(),
                "invariant factor chain broken: {:?}",
                diag
            );
        } else {
            assert!(diag[t].is_zero(), "zero factor followed by nonzero");
        }
    }

    // full verification of the decomposition
    let product = mat_mul(&mat_mul(&w.u, m), &w.v);
    for (i, row) in product.iter().enumerate() {
        for (j, val) in row.iter().enumerate() {
            let expect = if i == j && i < k { diag[i].clone() } else { BigInt::zero() };
            assert!(*val == expect, "transform does not diagonalize input");
        }
    }
    assert!(determinant(&w.u).abs().is_one(), "left transform not unimodular");
    assert!(determinant(&w.v).abs().is_one(), "right transform not unimodular");

    SnfResult {
        diag,
        left: w.u,
        right: w.v,
    }
}

/// Signature of a symmetric integer matrix: the number of positive minus the
/// number of negative eigenvalues, computed exactly by rational congruence
/// diagonalization (no floating point).
pub fn symmetric_signature(m: &[Vec<BigInt>]) -> i64 {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "signature needs a square matrix");
    for i in 0..n {
        for j in 0..i {
            assert!(m[i][j] == m[j][i], "signature needs a symmetric matrix");
        }
    }
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|v| BigRational::from(v.clone())).collect())
        .collect();

    let mut sig = 0i64;
    let mut k = 0;
    while k < n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in &mut a {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // all remaining diagonal entries vanish; fold row/col j in,
                // which makes a[k][k] = 2*a[k][j] != 0
                for idx in 0..n {
                    let d = a[j][idx].clone();
                    a[k][idx] += d;
                }
                for row in a.iter_mut() {
                    let d = row[j].clone();
                    row[k] += d;
                }
            } else {
                k += 1; // zero row in the remaining block
                continue;
            }
            continue;
        }
        sig += if a[k][k].is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for idx in 0..n {
                let d = &f * &a[k][idx];
                a[i][idx] -= d;
            }
            for row in a.iter_mut() {
                let d = &f * &row[k];
                row[i] -= d;
            }
        }
        k += 1;
    }
    sig
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf_diag(m: &[Vec<i64>]) -> Vec<i64> {
        smith_normal_form(&to_bigint_matrix(m))
            .diag
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn small_forms() {
        assert_eq!(snf_diag(&[vec![2, 4], vec![4, 2]]), vec![2, 6]);
        assert_eq!(snf_diag(&[vec![-2, 1], vec![1, -2]]), vec![1, 3]);
        assert_eq!(snf_diag(&[vec![0, 2], vec![2, 0]]), vec![2, 2]);
        assert_eq!(snf_diag(&[vec![0, 0], vec![0, 0]]), vec![0, 0]);
        assert_eq!(snf_diag(&[vec![1, 2, 3], vec![4, 5, 6]]), vec![1, 3]);
        assert_eq!(snf_diag(&[vec![6]]), vec![6]);
        let empty: Vec<Vec<i64>> = vec![];
        assert_eq!(snf_diag(&empty), Vec::<i64>::new());
    }

    #[test]
    fn cokernel_factors() {
        // Z^2 / <(2,4),(4,2)> = Z/2 + Z/6
        let s = smith_normal_form(&to_bigint_matrix(&[vec![2, 4], vec![4, 2]]));
        let f: Vec<i64> = s
            .nontrivial_factors()
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect();
        assert_eq!(f, vec![2, 6]);
    }

    #[test]
    fn determinants() {
        let d = |m: &[Vec<i64>]| i64::try_from(&determinant(&to_bigint_matrix(m))).unwrap();
        assert_eq!(d(&[vec![2, 4], vec![4, 2]]), -12);
        assert_eq!(d(&[vec![0, 1], vec![1, 0]]), -1);
        assert_eq!(d(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]), -3);
        assert_eq!(d(&[vec![0, 0], vec![0, 1]]), 0);
        assert_eq!(d(&[]), 1);
    }

    #[test]
    fn signatures() {
        let s = |m: &[Vec<i64>]| symmetric_signature(&to_bigint_matrix(m));
        assert_eq!(s(&[vec![-2, 1], vec![1, -2]]), -2);
        assert_eq!(s(&[vec![2, 1], vec![1, 2]]), 2);
        assert_eq!(s(&[vec![0, 1], vec![1, 0]]), 0);
        assert_eq!(s(&[vec![0, 2], vec![2, 0]]), 0);
        assert_eq!(s(&[vec![1, 0], vec![0, -3]]), 0);
        assert_eq!(s(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(s(&[]), 0);
        // rank-1 positive block plus zero row
        assert_eq!(s(&[vec![4, 2], vec![2, 1]]), 1);
    }

    #[test]
    fn signature_of_block_sums() {
        // diag(1, -1, 5, 7, 0) => 1 - 1 + 1 + 1 + 0 = 2
        let mut m = vec![vec![0i64; 5]; 5];
        for (i, v) in [1, -1, 5, 7, 0].into_iter().enumerate() {
            m[i][i] = v;
        }
        assert_eq!(symmetric_signature(&to_bigint_matrix(&m)), 2);
    }

    #[test]
    fn smith_diag_matches_determinant() {
        let m = vec![vec![3, 1, -4], vec![1, -5, 2], vec![-4, 2, 7]];
        let big = to_bigint_matrix(&m);
        let s = smith_normal_form(&big);
        let prod: BigInt = s.diag.iter().product();
        assert_eq!(prod, determinant(&big).abs());
    }
}

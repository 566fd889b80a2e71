//! Exact integer-matrix algorithms: Hermite and Smith normal forms with
//! unimodular transforms, kernel bases, integral solving, direct-summand
//! testing, and completion of a saturated sublattice to a full basis.
//!
//! Everything is dense; the largest instances in this crate are around
//! 10x20, so pivoting only needs to control entry growth, not memory.

use std::fmt;
use std::ops::{Add, Mul};

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::scalar::Rational;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LatticeError {
    /// The system x * B = v has no solution over Q.
    #[error("no rational solution")]
    NoRationalSolution,
    /// The system is solvable over Q but the unique solution is not
    /// integral. Distinct from [`LatticeError::NoRationalSolution`]
    /// because it falsifies an integral-combination claim.
    #[error("rational solution exists but is not integral")]
    RationalButNotIntegral,
    /// `solve_integral` requires Q-independent rows.
    #[error("rows are linearly dependent over Q")]
    DependentRows,
    /// `complete_to_basis` requires a saturated (direct summand) row lattice.
    #[error("row lattice is not a direct summand")]
    NotASummand,
}

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// An r x c matrix with zero rows, used for empty kernels/completions.
    pub fn empty(cols: usize) -> Self {
        IntMatrix::zeros(0, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<BigInt> {
        self.row(i).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.row(i).iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = v;
        }
    }

    /// row_i -= q * row_k
    fn sub_scaled_row(&mut self, i: usize, k: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = q * &self[(k, j)];
            self[(i, j)] -= delta;
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// col_j -= q * col_k
    fn sub_scaled_col(&mut self, j: usize, k: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = q * &self[(i, k)];
            self[(i, j)] -= delta;
        }
    }

    /// row_k += q * row_j  (used to accumulate inverse column transforms)
    fn add_scaled_row(&mut self, k: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let delta = q * &self[(j, c)];
            self[(k, c)] += delta;
        }
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn stack(&self, below: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, below.cols, "column mismatch in stack");
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        IntMatrix {
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn concat_cols(&self, right: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, right.rows, "row mismatch in concat");
        let mut out = IntMatrix::zeros(self.rows, self.cols + right.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..right.cols {
                out[(i, self.cols + j)] = right[(i, j)].clone();
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matmul");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let delta = a * &rhs[(k, j)];
                    out[(i, j)] += delta;
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination; square only.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }

    /// Rank over Q, from the Hermite form.
    pub fn rank(&self) -> usize {
        let (h, _) = hnf(self);
        (0..h.rows()).filter(|&i| !h.row_is_zero(i)).count()
    }

    /// The submatrix of nonzero rows of the Hermite form: a canonical
    /// basis of the row lattice.
    pub fn row_basis(&self) -> IntMatrix {
        let (h, _) = hnf(self);
        let rows: Vec<Vec<BigInt>> = (0..h.rows())
            .filter(|&i| !h.row_is_zero(i))
            .map(|i| h.row_vec(i))
            .collect();
        if rows.is_empty() {
            IntMatrix::empty(self.cols)
        } else {
            IntMatrix::from_rows(rows)
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Smith normal form data: left * A * right = diag(d), both transforms
/// unimodular, d a nonnegative divisibility chain with trailing zeros.
pub struct SnfResult {
    pub d: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

/// Row Hermite normal form. Returns (H, U) with U * A = H, U unimodular,
/// H in row-echelon form with positive pivots and entries above each
/// pivot reduced into [0, pivot).
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = a.clone();
    let mut u = IntMatrix::identity(a.rows());
    let mut r = 0;
    for c in 0..h.cols() {
        if r == h.rows() {
            break;
        }
        // Euclidean sweep: repeatedly pull the minimal-|entry| pivot up
        // and reduce the rows below it in this column.
        loop {
            let pivot = (r..h.rows())
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by_key(|&i| h[(i, c)].abs());
            let Some(p) = pivot else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut any_left = false;
            for i in r + 1..h.rows() {
                if !h[(i, c)].is_zero() {
                    let q = h[(i, c)].div_floor(&h[(r, c)]);
                    h.sub_scaled_row(i, r, &q);
                    u.sub_scaled_row(i, r, &q);
                    if !h[(i, c)].is_zero() {
                        any_left = true;
                    }
                }
            }
            if !any_left {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            h.sub_scaled_row(i, r, &q);
            u.sub_scaled_row(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

struct SnfCalc {
    s: IntMatrix,
    left: IntMatrix,
    right: IntMatrix,
    right_inv: IntMatrix,
}

impl SnfCalc {
    fn col_op_sub(&mut self, j: usize, k: usize, q: &BigInt) {
        self.s.sub_scaled_col(j, k, q);
        self.right.sub_scaled_col(j, k, q);
        // Inverse of "col_j -= q col_k" acts on the inverse accumulator
        // as "row_k += q row_j".
        self.right_inv.add_scaled_row(k, j, q);
    }

    fn col_op_swap(&mut self, a: usize, b: usize) {
        self.s.swap_cols(a, b);
        self.right.swap_cols(a, b);
        self.right_inv.swap_rows(a, b);
    }

    fn row_op_sub(&mut self, i: usize, k: usize, q: &BigInt) {
        self.s.sub_scaled_row(i, k, q);
        self.left.sub_scaled_row(i, k, q);
    }

    fn row_op_swap(&mut self, a: usize, b: usize) {
        self.s.swap_rows(a, b);
        self.left.swap_rows(a, b);
    }

    fn row_op_negate(&mut self, i: usize) {
        self.s.negate_row(i);
        self.left.negate_row(i);
    }

    fn run(&mut self) {
        let (rows, cols) = (self.s.rows(), self.s.cols());
        let bound = rows.min(cols);
        for t in 0..bound {
            'pivot: loop {
                // Minimal nonzero |entry| in the trailing submatrix.
                let mut best: Option<(usize, usize)> = None;
                for i in t..rows {
                    for j in t..cols {
                        if !self.s[(i, j)].is_zero()
                            && best
                                .map(|(bi, bj)| self.s[(i, j)].abs() < self.s[(bi, bj)].abs())
                                .unwrap_or(true)
                        {
                            best = Some((i, j));
                        }
                    }
                }
                let Some((bi, bj)) = best else { return };
                self.row_op_swap(t, bi);
                self.col_op_swap(t, bj);

                // Clear column t below the pivot.
                for i in t + 1..rows {
                    if !self.s[(i, t)].is_zero() {
                        let q = self.s[(i, t)].div_floor(&self.s[(t, t)]);
                        self.row_op_sub(i, t, &q);
                        if !self.s[(i, t)].is_zero() {
                            continue 'pivot;
                        }
                    }
                }
                // Clear row t to the right of the pivot.
                for j in t + 1..cols {
                    if !self.s[(t, j)].is_zero() {
                        let q = self.s[(t, j)].div_floor(&self.s[(t, t)]);
                        self.col_op_sub(j, t, &q);
                        if !self.s[(t, j)].is_zero() {
                            continue 'pivot;
                        }
                    }
                }
                // Enforce the divisibility chain: if some trailing entry is
                // not divisible by the pivot, fold its row in and restart.
                let p = self.s[(t, t)].clone();
                for i in t + 1..rows {
                    for j in t + 1..cols {
                        if !(&self.s[(i, j)] % &p).is_zero() {
                            let minus_one = BigInt::from(-1);
                            self.row_op_sub(t, i, &minus_one);
                            continue 'pivot;
                        }
                    }
                }
                if self.s[(t, t)].is_negative() {
                    self.row_op_negate(t);
                }
                break;
            }
        }
    }
}

fn snf_calc(a: &IntMatrix) -> SnfCalc {
    let mut calc = SnfCalc {
        s: a.clone(),
        left: IntMatrix::identity(a.rows()),
        right: IntMatrix::identity(a.cols()),
        right_inv: IntMatrix::identity(a.cols()),
    };
    calc.run();
    calc
}

/// Smith normal form with unimodular transforms.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let calc = snf_calc(a);
    let bound = a.rows().min(a.cols());
    let d = (0..bound).map(|t| calc.s[(t, t)].clone()).collect();
    SnfResult {
        d,
        left: calc.left,
        right: calc.right,
    }
}

/// Z-basis of the left kernel {x : x * A = 0}, as rows. The kernel of a
/// homomorphism into a free group is always saturated, so this basis is
/// automatically a basis of a direct summand.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let (h, u) = hnf(a);
    let rows: Vec<Vec<BigInt>> = (0..h.rows())
        .filter(|&i| h.row_is_zero(i))
        .map(|i| u.row_vec(i))
        .collect();
    if rows.is_empty() {
        IntMatrix::empty(a.rows())
    } else {
        IntMatrix::from_rows(rows)
    }
}

/// Solves x * B = v over Z for Q-independent rows of B.
///
/// Distinguishes "no rational solution" from "rational but not integral";
/// the second outcome falsifies an integral-combination claim and is
/// reported as its own error.
pub fn solve_integral(b: &IntMatrix, v: &[BigInt]) -> Result<Vec<BigInt>, LatticeError> {
    assert_eq!(v.len(), b.cols(), "vector length mismatch");
    let (h, u) = hnf(b);
    let rank = (0..h.rows()).filter(|&i| !h.row_is_zero(i)).count();
    if rank != b.rows() {
        return Err(LatticeError::DependentRows);
    }
    // Solve y * H = v by forward substitution down the echelon pivots,
    // then map back through the unimodular transform: x = y * U.
    let mut rem: Vec<Rational> = v
        .iter()
        .map(|x| Rational::from_bigint(x.clone()))
        .collect();
    let mut y: Vec<Rational> = Vec::with_capacity(rank);
    for i in 0..rank {
        let pivot_col = (0..h.cols())
            .find(|&j| !h[(i, j)].is_zero())
            .expect("nonzero row has a pivot");
        // Columns before the pivot must already be cleared.
        if rem[..pivot_col].iter().any(|r| !r.is_zero()) {
            return Err(LatticeError::NoRationalSolution);
        }
        let yi = &rem[pivot_col] * &Rational::from_bigint(h[(i, pivot_col)].clone()).recip();
        for j in pivot_col..h.cols() {
            let t = &yi * &Rational::from_bigint(h[(i, j)].clone());
            rem[j] = &rem[j] - &t;
        }
        y.push(yi);
    }
    if rem.iter().any(|r| !r.is_zero()) {
        return Err(LatticeError::NoRationalSolution);
    }
    if y.iter().any(|yi| !yi.is_integer()) {
        return Err(LatticeError::RationalButNotIntegral);
    }
    // x = y * U restricted to the pivot rows of U.
    let mut x = vec![BigInt::zero(); b.rows()];
    for (i, yi) in y.iter().enumerate() {
        let yi = yi.to_bigint().unwrap();
        for (xj, uij) in x.iter_mut().zip(u.row(i)) {
            *xj += &yi * uij;
        }
    }
    Ok(x)
}

/// True iff the subgroup generated by the rows of `m` is a direct summand
/// of the ambient Z^cols, i.e. all nonzero invariant factors are 1.
pub fn is_direct_summand(m: &IntMatrix) -> bool {
    snf(m).d.iter().all(|d| d.is_zero() || d.is_one())
}

/// Rows extending a basis of `m`'s row lattice to a basis of the ambient
/// lattice Z^cols. Requires the row lattice to be a direct summand.
///
/// The returned matrix has `cols - rank` rows; stacking it under any
/// basis of `m`'s row lattice gives a square matrix of determinant +-1.
pub fn complete_to_basis(m: &IntMatrix) -> Result<IntMatrix, LatticeError> {
    let calc = snf_calc(m);
    let bound = m.rows().min(m.cols());
    let mut rank = 0;
    for t in 0..bound {
        let d = &calc.s[(t, t)];
        if d.is_zero() {
            break;
        }
        if !d.is_one() {
            return Err(LatticeError::NotASummand);
        }
        rank += 1;
    }
    // left * M * right = D with unit pivots, so the row lattice of M is
    // spanned by the first `rank` rows of right^-1; the remaining rows of
    // right^-1 complete them to a basis of Z^cols.
    let rows: Vec<Vec<BigInt>> = (rank..m.cols())
        .map(|i| calc.right_inv.row_vec(i))
        .collect();
    if rows.is_empty() {
        Ok(IntMatrix::empty(m.cols()))
    } else {
        Ok(IntMatrix::from_rows(rows))
    }
}

/// Maps rational row vectors to an integer matrix by scaling each column
/// by the lcm of its denominators. Column scaling is a change of basis of
/// the ambient space, so integral-combination questions among the rows
/// are preserved; callers solving x * B = v must clear B and v together.
pub fn clear_denominators(rows: &[Vec<Rational>]) -> IntMatrix {
    let Some(first) = rows.first() else {
        return IntMatrix::empty(0);
    };
    let cols = first.len();
    assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
    let mut scale = vec![BigInt::one(); cols];
    for row in rows {
        for (s, x) in scale.iter_mut().zip(row) {
            *s = s.lcm(x.denom());
        }
    }
    IntMatrix::from_rows(
        rows.iter()
            .map(|row| {
                row.iter()
                    .zip(&scale)
                    .map(|(x, s)| {
                        let scaled = x * &Rational::from_bigint(s.clone());
                        scaled.to_bigint().expect("denominator cleared")
                    })
                    .collect()
            })
            .collect(),
    )
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        out
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.matmul(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn diag_of(a: &IntMatrix, d: &[BigInt]) -> IntMatrix {
        let mut m = IntMatrix::zeros(a.rows(), a.cols());
        for (t, dt) in d.iter().enumerate() {
            m[(t, t)] = dt.clone();
        }
        m
    }

    #[test]
    fn hnf_identity_and_zero() {
        let id = IntMatrix::identity(3);
        let (h, u) = hnf(&id);
        assert_eq!(h, id);
        assert_eq!(u, id);

        let z = IntMatrix::zeros(2, 3);
        let (h, u) = hnf(&z);
        assert_eq!(h, z);
        assert_eq!(u, IntMatrix::identity(2));
    }

    /// Brute-force row-span oracle: all lattice vectors reachable with
    /// coefficients in a box, clipped to entries within `entry_bound` so
    /// that different bases of the same lattice compare equal (the
    /// coefficient box must be generous enough to reach every clipped
    /// vector from either basis).
    fn span_box(
        m: &IntMatrix,
        coeff_bound: i64,
        entry_bound: i64,
    ) -> std::collections::BTreeSet<Vec<BigInt>> {
        let mut out = std::collections::BTreeSet::new();
        let k = m.rows();
        let limit = BigInt::from(entry_bound);
        let mut coeffs = vec![-coeff_bound; k];
        loop {
            let mut v = vec![BigInt::zero(); m.cols()];
            for (i, &c) in coeffs.iter().enumerate() {
                for (vj, mij) in v.iter_mut().zip(m.row(i)) {
                    *vj += BigInt::from(c) * mij;
                }
            }
            if v.iter().all(|x| x.abs() <= limit) {
                out.insert(v);
            }
            let mut i = 0;
            loop {
                if i == k {
                    return out;
                }
                coeffs[i] += 1;
                if coeffs[i] <= coeff_bound {
                    break;
                }
                coeffs[i] = -coeff_bound;
                i += 1;
            }
        }
    }

    #[test]
    fn hnf_preserves_row_span_small() {
        let a = IntMatrix::from_i64(&[&[2, 4], &[1, 1]]);
        let (h, u) = hnf(&a);
        assert_eq!(&u * &a, h);
        assert_eq!(u.det().abs(), BigInt::one());
        assert_eq!(span_box(&a, 24, 8), span_box(&h, 24, 8));
    }

    #[test]
    fn snf_examples() {
        let a = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let r = snf(&a);
        assert_eq!(r.d, vec![BigInt::one(), BigInt::from(6)]);
        assert_eq!(&(&r.left * &a) * &r.right, diag_of(&a, &r.d));

        let r = snf(&IntMatrix::identity(4));
        assert!(r.d.iter().all(BigInt::is_one));
    }

    /// gcd of all k x k minors, the classical invariant-factor oracle.
    fn minor_gcd(a: &IntMatrix, k: usize) -> BigInt {
        fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = combos(n - 1, k);
            for mut c in combos(n - 1, k - 1) {
                c.push(n - 1);
                out.push(c);
            }
            out
        }
        let mut g = BigInt::zero();
        for rsel in combos(a.rows(), k) {
            for csel in combos(a.cols(), k) {
                let sub = IntMatrix::from_rows(
                    rsel.iter()
                        .map(|&i| csel.iter().map(|&j| a[(i, j)].clone()).collect())
                        .collect(),
                );
                g = g.gcd(&sub.det());
            }
        }
        g
    }

    #[test]
    fn snf_matches_minor_gcd_chain() {
        let a = IntMatrix::from_i64(&[
            &[2, -1, 0, 4],
            &[3, 5, -2, 1],
            &[0, 0, 4, -3],
            &[-5, 2, 2, 0],
        ]);
        let r = snf(&a);
        let mut prev = BigInt::one();
        for (k, dk) in r.d.iter().enumerate() {
            let g = minor_gcd(&a, k + 1);
            assert_eq!(prev.clone() * dk, g, "d_1..d_{} product vs minor gcd", k + 1);
            prev = g;
        }
    }

    #[test]
    fn kernel_basis_examples() {
        assert_eq!(kernel_basis(&IntMatrix::identity(3)).rows(), 0);

        // Rows 2 and 3 equal: kernel spanned by e2 - e3.
        let a = IntMatrix::from_i64(&[&[1, 0], &[0, 1], &[0, 1]]);
        let k = kernel_basis(&a);
        assert_eq!(k.rows(), 1);
        let g = k.row(0);
        assert!(g[0].is_zero());
        assert_eq!(g[1].clone().abs(), BigInt::one());
        assert_eq!(g[2], -g[1].clone());
    }

    #[test]
    fn solve_integral_examples() {
        let id = IntMatrix::identity(3);
        let v: Vec<BigInt> = [3, -1, 7].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(solve_integral(&id, &v).unwrap(), v);

        let b = IntMatrix::from_i64(&[&[2, 0], &[0, 1]]);
        let v: Vec<BigInt> = [1, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(
            solve_integral(&b, &v),
            Err(LatticeError::RationalButNotIntegral)
        );

        let b = IntMatrix::from_i64(&[&[1, 0, 0]]);
        let v: Vec<BigInt> = [0, 1, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(solve_integral(&b, &v), Err(LatticeError::NoRationalSolution));

        let b = IntMatrix::from_i64(&[&[1, 1], &[2, 2]]);
        let v: Vec<BigInt> = [1, 1].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(solve_integral(&b, &v), Err(LatticeError::DependentRows));
    }

    #[test]
    fn summand_examples() {
        assert!(!is_direct_summand(&IntMatrix::from_i64(&[&[2, 0]])));
        assert!(is_direct_summand(&IntMatrix::from_i64(&[&[1, 1]])));
        assert!(is_direct_summand(&IntMatrix::empty(3)));
    }

    #[test]
    fn complete_to_basis_examples() {
        let m = IntMatrix::from_i64(&[&[1, 1]]);
        let ext = complete_to_basis(&m).unwrap();
        assert_eq!(ext.rows(), 1);
        assert_eq!(m.stack(&ext).det().abs(), BigInt::one());

        let full = IntMatrix::from_i64(&[&[1, 2], &[0, 1]]);
        assert_eq!(complete_to_basis(&full).unwrap().rows(), 0);

        assert_eq!(
            complete_to_basis(&IntMatrix::from_i64(&[&[2, 0]])),
            Err(LatticeError::NotASummand)
        );
    }

    fn arb_matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(-bound..=bound, r * c).prop_map(move |vals| {
                IntMatrix::from_rows(
                    vals.chunks(c)
                        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
                        .collect(),
                )
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn hnf_row_span_membership(a in arb_matrix(5, 5)) {
            let (h, u) = hnf(&a);
            prop_assert_eq!(&u * &a, h.clone());
            prop_assert_eq!(u.det().abs(), BigInt::one());
            let basis = a.row_basis();
            if basis.rows() > 0 {
                for i in 0..a.rows() {
                    prop_assert!(solve_integral(&basis, a.row(i)).is_ok());
                }
            } else {
                prop_assert!(a.is_zero());
            }
        }

        #[test]
        fn snf_transform_and_divisibility(a in arb_matrix(5, 5)) {
            let r = snf(&a);
            prop_assert_eq!(&(&r.left * &a) * &r.right, diag_of(&a, &r.d));
            prop_assert_eq!(r.left.det().abs(), BigInt::one());
            prop_assert_eq!(r.right.det().abs(), BigInt::one());
            let nonzero: Vec<&BigInt> = r.d.iter().filter(|d| !d.is_zero()).collect();
            for w in nonzero.windows(2) {
                prop_assert!((w[1] % w[0]).is_zero(), "divisibility chain");
            }
            // Trailing entries zero.
            let first_zero = r.d.iter().position(Zero::is_zero);
            if let Some(z) = first_zero {
                prop_assert!(r.d[z..].iter().all(Zero::is_zero));
            }
        }

        #[test]
        fn kernel_is_orthogonal_and_saturated(a in arb_matrix(5, 5)) {
            let k = kernel_basis(&a);
            if k.rows() > 0 {
                let prod = &k * &a;
                prop_assert!(prod.is_zero());
                prop_assert!(snf(&k).d.iter().all(BigInt::is_one));
            }
            prop_assert_eq!(k.rows() + a.rank(), a.rows());
        }

        #[test]
        fn summand_agrees_with_brute_force(a in arb_matrix(3, 3)) {
            prop_assume!(a.cols() == 3 && a.rows() <= 3);
            prop_assert_eq!(is_direct_summand(&a), crate::oracle::brute_force_is_summand(&a, 10));
        }

        #[test]
        fn completion_is_unimodular(a in arb_matrix(4, 4)) {
            if is_direct_summand(&a) {
                let basis = a.row_basis();
                let ext = complete_to_basis(&a).unwrap();
                let full = if basis.rows() == 0 {
                    ext
                } else {
                    basis.stack(&ext)
                };
                prop_assert_eq!(full.det().abs(), BigInt::one());
            }
        }
    }
}

//! Integer matrices, Smith normal form, and finitely generated abelian
//! groups.
//!
//! The Smith normal form of an integer matrix `M` is a diagonal matrix `D`
//! with `U M V = D` for unimodular `U`, `V` and a divisibility chain
//! `d_1 | d_2 | ...` down the diagonal. Viewing the rows of `M` as relations
//! among the column generators, the cokernel `Z^cols / rowspan(M)` reads off
//! from `D`: each `d_i >= 2` contributes a `Z/d_i` factor and each zero
//! column of `D` a free `Z` factor.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix must be nonempty and rectangular")]
    Shape,
    #[error("dimension mismatch: {0}x{1} * {2}x{3}")]
    Mul(usize, usize, usize, usize),
}

/// A dense rows x cols matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "dimensions must be positive");
        IntegerMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<R, C>(rows: R) -> Result<Self, MatrixError>
    where
        R: IntoIterator<Item = Vec<C>>,
        C: Into<BigInt>,
    {
        let rows: Vec<Vec<BigInt>> =
            rows.into_iter().map(|r| r.into_iter().map(Into::into).collect()).collect();
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 || rows.iter().any(|r| r.len() != ncols) {
            return Err(MatrixError::Shape);
        }
        Ok(IntegerMatrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
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

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::Mul(self.rows, self.cols, other.rows, other.cols));
        }
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        Ok(out)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row(target) -= factor * row(source)
    fn row_sub(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let delta = factor * &self[(source, j)];
            self[(target, j)] -= delta;
        }
    }

    /// col(target) -= factor * col(source)
    fn col_sub(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let delta = factor * &self[(i, source)];
            self[(i, target)] -= delta;
        }
    }

    fn row_add(&mut self, target: usize, source: usize) {
        for j in 0..self.cols {
            let delta = self[(source, j)].clone();
            self[(target, j)] += delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self[(i, j)].clone();
            self[(i, j)] = v;
        }
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows)
            .all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    /// Determinant of a square matrix via fraction-free (Bareiss)
    /// elimination; exact over the integers.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant requires a square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = num / &prev;
                }
                a[(i, k)] = BigInt::zero();
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }
}

impl Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i).iter().map(|v| v.to_string()).collect::<Vec<_>>())?;
        }
        write!(f, "]")
    }
}

/// `U * m * V = D` with `U`, `V` unimodular and `D` in Smith normal form.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal().into_iter().filter(|d| !d.is_zero()).collect()
    }
}

/// Computes the Smith normal form by pivoting on minimal-magnitude entries.
///
/// Row operations accumulate in `U`, column operations in `V`; both stay
/// unimodular throughout, so `U m V = D` holds exactly on return.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntegerMatrix::identity(rows);
    let mut v = IntegerMatrix::identity(cols);

    for k in 0..rows.min(cols) {
        'pivot: loop {
            let Some((pi, pj)) = min_nonzero(&d, k) else {
                break 'pivot; // trailing block is zero
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let mut clean = true;
            for i in k + 1..rows {
                if !d[(i, k)].is_zero() {
                    let q = &d[(i, k)] / &d[(k, k)];
                    d.row_sub(i, k, &q);
                    u.row_sub(i, k, &q);
                    if !d[(i, k)].is_zero() {
                        clean = false; // remainder smaller than pivot, re-pivot
                    }
                }
            }
            for j in k + 1..cols {
                if !d[(k, j)].is_zero() {
                    let q = &d[(k, j)] / &d[(k, k)];
                    d.col_sub(j, k, &q);
                    v.col_sub(j, k, &q);
                    if !d[(k, j)].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue 'pivot;
            }

            // Pivot must divide the trailing block for the chain to hold.
            let offender = (k + 1..rows)
                .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&d[(i, j)] % &d[(k, k)]).is_zero());
            match offender {
                Some((i, _)) => {
                    d.row_add(k, i);
                    u.row_add(k, i);
                }
                None => break 'pivot,
            }
        }
        if d[(k, k)].is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    SmithDecomposition { u, d, v }
}

fn min_nonzero(m: &IntegerMatrix, k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in k..m.rows() {
        for j in k..m.cols() {
            let entry = &m[(i, j)];
            if entry.is_zero() {
                continue;
            }
            let mag = entry.abs();
            match &best {
                Some((_, _, m0)) if *m0 <= mag => {}
                _ => best = Some((i, j, mag)),
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// A finitely generated abelian group `Z^free_rank + Z/d_1 + ... + Z/d_m`
/// with `d_1 | d_2 | ...` and every `d_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    #[serde(with = "bigint_strings")]
    pub torsion: Vec<BigInt>,
}

mod bigint_strings {
    use num_bigint::BigInt;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let strings = Vec::<String>::deserialize(d)?;
        strings.into_iter().map(|s| s.parse().map_err(D::Error::custom)).collect()
    }
}

impl AbelianGroup {
    /// Builds the group from an invariant-factor list, dropping trivial
    /// factors. Panics if the divisibility chain fails.
    pub fn new(free_rank: usize, factors: Vec<BigInt>) -> Self {
        let torsion: Vec<BigInt> = factors.into_iter().filter(|f| !f.is_one()).collect();
        assert!(
            torsion.iter().all(|f| *f >= BigInt::from(2)),
            "invariant factors must be positive"
        );
        assert!(
            torsion.windows(2).all(|w| (&w[1] % &w[0]).is_zero()),
            "invariant factors must form a divisibility chain"
        );
        AbelianGroup { free_rank, torsion }
    }

    pub fn trivial() -> Self {
        AbelianGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    pub fn cyclic(order: impl Into<BigInt>) -> Self {
        AbelianGroup::new(0, vec![order.into()])
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_owned()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Cokernel `Z^cols / rowspan(m)`: rows are relations, columns generators.
pub fn cokernel(m: &IntegerMatrix) -> AbelianGroup {
    let snf = smith_normal_form(m);
    cokernel_from_diagonal(&snf.d)
}

pub(crate) fn cokernel_from_diagonal(d: &IntegerMatrix) -> AbelianGroup {
    let factors = SmithDecomposition {
        u: IntegerMatrix::identity(1),
        d: d.clone(),
        v: IntegerMatrix::identity(1),
    }
    .invariant_factors();
    let rank = factors.len();
    AbelianGroup::new(d.cols() - rank, factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows.iter().map(|r| r.to_vec())).unwrap()
    }

    fn assert_valid_snf(a: &IntegerMatrix, snf: &SmithDecomposition) {
        let product = snf.u.mul(a).unwrap().mul(&snf.v).unwrap();
        assert_eq!(product, snf.d, "U m V != D");
        assert!(snf.d.is_diagonal(), "D not diagonal");
        assert_eq!(snf.u.determinant().abs(), BigInt::one(), "U not unimodular");
        assert_eq!(snf.v.determinant().abs(), BigInt::one(), "V not unimodular");
        let diag = snf.d.diagonal();
        for w in diag.windows(2) {
            if w[0].is_zero() {
                assert!(w[1].is_zero(), "zero before nonzero on the diagonal");
            } else {
                assert!((&w[1] % &w[0]).is_zero(), "divisibility chain fails: {} | {}", w[0], w[1]);
            }
        }
        assert!(diag.iter().all(|d| !d.is_negative()), "negative diagonal entry");
    }

    #[test]
    fn identity_is_fixed() {
        let a = IntegerMatrix::identity(2);
        let snf = smith_normal_form(&a);
        assert_valid_snf(&a, &snf);
        assert_eq!(snf.d, IntegerMatrix::identity(2));
    }

    #[test]
    fn diag_2_3_becomes_1_6() {
        let a = m(&[&[2, 0], &[0, 3]]);
        let snf = smith_normal_form(&a);
        assert_valid_snf(&a, &snf);
        assert_eq!(snf.d, m(&[&[1, 0], &[0, 6]]));
        assert_eq!(cokernel(&a), AbelianGroup::cyclic(6));
    }

    #[test]
    fn fiber_relations_have_free_cokernel() {
        // Relations 3c1 = h, 5c3 = -h, -2c4 = h among c1, c3, c4, h.
        let a = m(&[&[3, 0, 0, -1], &[0, 5, 0, 1], &[0, 0, 2, 1]]);
        let snf = smith_normal_form(&a);
        assert_valid_snf(&a, &snf);
        assert_eq!(cokernel(&a), AbelianGroup::free(1));
    }

    #[test]
    fn zero_and_rectangular() {
        let z = IntegerMatrix::zeros(2, 3);
        let snf = smith_normal_form(&z);
        assert_valid_snf(&z, &snf);
        assert_eq!(cokernel(&z), AbelianGroup::free(3));

        let wide = m(&[&[2, 4, 6]]);
        let snf = smith_normal_form(&wide);
        assert_valid_snf(&wide, &snf);
        assert_eq!(cokernel(&wide), AbelianGroup { free_rank: 2, torsion: vec![BigInt::from(2)] });
    }

    #[test]
    fn divisibility_forcing_case() {
        // gcd tricks are required here: no entry divides all others at the start.
        let a = m(&[&[2, 0], &[0, 2], &[3, 3]]);
        let snf = smith_normal_form(&a);
        assert_valid_snf(&a, &snf);
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(m(&[&[3]]).determinant(), BigInt::from(3));
        assert_eq!(m(&[&[1, 2], &[3, 4]]).determinant(), BigInt::from(-2));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), BigInt::from(0));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), BigInt::from(-1));
        assert_eq!(
            m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]).determinant(),
            BigInt::from(4)
        );
    }

    #[test]
    fn group_display() {
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
        assert_eq!(AbelianGroup::free(1).to_string(), "Z");
        assert_eq!(AbelianGroup::free(2).to_string(), "Z^2");
        assert_eq!(AbelianGroup::cyclic(5).to_string(), "Z/5");
        assert_eq!(
            AbelianGroup::new(1, vec![BigInt::from(2), BigInt::from(6)]).to_string(),
            "Z + Z/2 + Z/6"
        );
    }

    #[test]
    fn from_rows_validation() {
        assert!(IntegerMatrix::from_rows(Vec::<Vec<i64>>::new()).is_err());
        assert!(IntegerMatrix::from_rows(vec![vec![1i64], vec![1, 2]]).is_err());
    }

    proptest! {
        #[test]
        fn snf_random_matrices(
            rows in 1usize..5,
            cols in 1usize..5,
            seed in proptest::collection::vec(-9i64..=9, 16),
        ) {
            let a = IntegerMatrix::from_rows(
                (0..rows).map(|i| (0..cols).map(|j| seed[(i * cols + j) % seed.len()]).collect::<Vec<_>>())
            ).unwrap();
            let snf = smith_normal_form(&a);
            assert_valid_snf(&a, &snf);
        }
    }
}

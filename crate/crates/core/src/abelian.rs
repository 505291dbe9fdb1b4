//! Integer vectors and matrices for the abelianization `A_Γ → Z^V`.
//!
//! Everything is generic over the integer scalar so the same code runs on
//! machine integers and on arbitrary-precision ones; the crate root fixes
//! `i64` as the default through [`crate::IntVector`] and [`crate::IntMatrix`].

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Neg, Sub};

use num_traits::{FromPrimitive, Signed};

use crate::graph::{Graph, Vertex, VertexSet};

/// Exact signed integer arithmetic.
pub trait Scalar: Clone + Eq + Ord + Debug + Display + Signed + FromPrimitive {}

impl<T> Scalar for T where T: Clone + Eq + Ord + Debug + Display + Signed + FromPrimitive {}

/// Vector in `Z^V`, one entry per vertex in vertex order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZVector<T> {
    entries: Vec<T>,
}

impl<T: Scalar> ZVector<T> {
    pub fn zero(n: usize) -> Self {
        ZVector {
            entries: vec![T::zero(); n],
        }
    }

    pub fn unit(n: usize, v: Vertex) -> Self {
        let mut z = Self::zero(n);
        z.entries[v] = T::one();
        z
    }

    pub fn from_entries(entries: Vec<T>) -> Self {
        ZVector { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, v: Vertex) -> &T {
        &self.entries[v]
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn add_at(&mut self, v: Vertex, delta: T) {
        self.entries[v] = self.entries[v].clone() + delta;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    /// Zeroes every coordinate outside `domain`.
    pub fn restrict(&self, domain: VertexSet) -> Self {
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(v, x)| if domain.contains(v) { x.clone() } else { T::zero() })
            .collect();
        ZVector { entries }
    }

    pub fn support(&self) -> VertexSet {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(v, _)| v)
            .collect()
    }

    /// Nonzero entries as `name: value`, e.g. `(a:2, b:-1)`.
    pub fn format(&self, g: &Graph) -> String {
        let parts: Vec<String> = self
            .entries
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(v, x)| format!("{}:{}", g.name(v), x))
            .collect();
        format!("({})", parts.join(", "))
    }
}

impl<T: Debug> Debug for ZVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.entries).finish()
    }
}

impl<T: Scalar> Add for ZVector<T> {
    type Output = ZVector<T>;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.len(), rhs.len(), "dimension mismatch");
        let entries = self.entries.into_iter().zip(rhs.entries).map(|(a, b)| a + b).collect();
        ZVector { entries }
    }
}

impl<T: Scalar> Sub for ZVector<T> {
    type Output = ZVector<T>;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Neg for ZVector<T> {
    type Output = ZVector<T>;
    fn neg(self) -> Self {
        ZVector {
            entries: self.entries.into_iter().map(|x| -x).collect(),
        }
    }
}

/// Square integer matrix indexed by vertices. Column `v` holds the image of the
/// basis vector `v`, so composition of maps is matrix multiplication.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: Scalar> ZMatrix<T> {
    pub fn identity(n: usize) -> Self {
        Self::from_columns((0..n).map(|v| ZVector::unit(n, v)).collect())
    }

    pub fn from_columns(cols: Vec<ZVector<T>>) -> Self {
        let n = cols.len();
        let mut data = vec![T::zero(); n * n];
        for (c, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), n, "column length must equal column count");
            for (r, x) in col.entries.into_iter().enumerate() {
                data[r * n + c] = x;
            }
        }
        ZMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.data[row * self.n + col]
    }

    pub fn column(&self, col: usize) -> ZVector<T> {
        ZVector::from_entries((0..self.n).map(|r| self.get(r, col).clone()).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    data[idx] = data[idx].clone() + a.clone() * rhs.get(k, j).clone();
                }
            }
        }
        ZMatrix { n, data }
    }

    /// Fraction-free Gaussian elimination (Bareiss); every division is exact.
    pub fn determinant(&self) -> T {
        let n = self.n;
        if n == 0 {
            return T::one();
        }
        let mut m: Vec<Vec<T>> = (0..n)
            .map(|r| (0..n).map(|c| self.get(r, c).clone()).collect())
            .collect();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return T::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                    m[i][j] = num / prev.clone();
                }
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant().abs().is_one()
    }
}

impl<T: Debug> Debug for ZMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = self.data.chunks(self.n.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn mat(rows: &[&[i64]]) -> ZMatrix<i64> {
        let n = rows.len();
        let cols = (0..n)
            .map(|c| ZVector::from_entries(rows.iter().map(|r| r[c]).collect()))
            .collect();
        ZMatrix::from_columns(cols)
    }

    /// Cofactor expansion, independent of the elimination route.
    fn det_by_cofactors(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        (0..n)
            .map(|c| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * m[0][c] * det_by_cofactors(&minor)
            })
            .sum()
    }

    #[test]
    fn determinants_match_cofactor_expansion() {
        let cases: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![2, 1], vec![7, 4]],
            vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]],
            vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]],
            vec![vec![0, 0, 1, 2], vec![3, 0, 1, 1], vec![1, 1, 0, 0], vec![2, -1, 4, 3]],
            vec![vec![1, 2], vec![2, 4]],
        ];
        for rows in cases {
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            assert_eq!(mat(&refs).determinant(), det_by_cofactors(&rows), "{rows:?}");
        }
    }

    #[test]
    fn multiplication_composes_columns() {
        let a = mat(&[&[1, 1], &[0, 1]]);
        let b = mat(&[&[1, 0], &[1, 1]]);
        assert_eq!(a.mul(&b), mat(&[&[2, 1], &[1, 1]]));
        assert_eq!(a.mul(&ZMatrix::identity(2)), a);
        assert!(a.mul(&b).is_unimodular());
    }

    #[test]
    fn works_over_big_integers() {
        let cols = vec![
            ZVector::from_entries(vec![BigInt::from(3), BigInt::from(5)]),
            ZVector::from_entries(vec![BigInt::from(1), BigInt::from(2)]),
        ];
        let m = ZMatrix::from_columns(cols);
        assert_eq!(m.determinant(), BigInt::from(1));
        let v = ZVector::<BigInt>::unit(3, 1) + ZVector::unit(3, 1);
        assert_eq!(v.get(1), &BigInt::from(2));
    }

    #[test]
    fn restriction_drops_coordinates() {
        let v = ZVector::<i64>::from_entries(vec![1, -2, 3]);
        let r = v.restrict(VertexSet::single(1));
        assert_eq!(r.entries(), &[0, -2, 0]);
        assert_eq!(r.support(), VertexSet::single(1));
        assert!((v.clone() - v).is_zero());
    }
}

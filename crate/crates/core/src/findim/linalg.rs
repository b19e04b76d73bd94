//! Linear algebra over the two-element field with vectors packed into
//! `u64` bit masks (bit `i` is coordinate `i`).

use alloc::vec;
use alloc::vec::Vec;

/// Largest supported vector-space dimension.
pub const MAX_DIM: usize = 64;

/// A matrix stored by columns: column `j` is the image of basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: Vec<u64>,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> BitMatrix {
        BitMatrix {
            rows,
            cols: vec![0; cols],
        }
    }

    pub fn identity(n: usize) -> BitMatrix {
        BitMatrix {
            rows: n,
            cols: (0..n).map(|i| 1u64 << i).collect(),
        }
    }

    /// Columns are masked to `rows` bits.
    pub fn from_columns(rows: usize, cols: Vec<u64>) -> BitMatrix {
        let mask = mask(rows);
        BitMatrix {
            rows,
            cols: cols.into_iter().map(|c| c & mask).collect(),
        }
    }

    /// `rows[i][j]` is the entry in row `i`, column `j`; nonzero means one.
    pub fn from_rows(rows: &[Vec<u8>], cols: usize) -> BitMatrix {
        let mut m = BitMatrix::zero(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate().take(cols) {
                if x != 0 {
                    m.cols[j] |= 1 << i;
                }
            }
        }
        m
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|i| self.cols.iter().map(|c| (c >> i & 1) as u8).collect())
            .collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> u64 {
        self.cols[j]
    }

    pub fn columns(&self) -> &[u64] {
        &self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> bool {
        self.cols[j] >> i & 1 == 1
    }

    pub fn apply(&self, v: u64) -> u64 {
        let mut out = 0;
        let mut v = v;
        while v != 0 {
            let j = v.trailing_zeros() as usize;
            out ^= self.cols[j];
            v &= v - 1;
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &BitMatrix) -> BitMatrix {
        debug_assert_eq!(self.cols(), other.rows);
        BitMatrix {
            rows: self.rows,
            cols: other.cols.iter().map(|&c| self.apply(c)).collect(),
        }
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        BitMatrix {
            rows: self.rows,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a ^ b).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|&c| c == 0)
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(self.cols.iter().copied())
    }

    pub fn rank(&self) -> usize {
        self.image().dim()
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols() && self.rank() == self.rows
    }

    /// Every `rows × cols` matrix, in increasing order of its packed bits.
    pub fn all(rows: usize, cols: usize) -> impl Iterator<Item = BitMatrix> {
        let bits = rows * cols;
        assert!(bits < 32, "matrix enumeration limited to fewer than 32 entries");
        (0u64..1 << bits).map(move |code| {
            BitMatrix::from_columns(
                rows,
                (0..cols).map(|j| code >> (j * rows) & mask(rows)).collect(),
            )
        })
    }

    /// Inverse of an invertible square matrix.
    pub fn inverse(&self) -> Option<BitMatrix> {
        let n = self.rows;
        if n != self.cols() {
            return None;
        }
        // Gauss-Jordan on rows of [A | I].
        let mut rows: Vec<(u64, u64)> = (0..n)
            .map(|i| {
                let r = self.cols.iter().enumerate().fold(0u64, |acc, (j, c)| acc | ((c >> i & 1) << j));
                (r, 1u64 << i)
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| rows[r].0 >> col & 1 == 1)?;
            rows.swap(col, pivot);
            for r in 0..n {
                if r != col && rows[r].0 >> col & 1 == 1 {
                    rows[r].0 ^= rows[col].0;
                    rows[r].1 ^= rows[col].1;
                }
            }
        }
        let mut inv = BitMatrix::zero(n, n);
        for (i, &(_, r)) in rows.iter().enumerate() {
            for j in 0..n {
                if r >> j & 1 == 1 {
                    inv.cols[j] |= 1 << i;
                }
            }
        }
        Some(inv)
    }
}

/// Bit mask of the low `n` bits.
pub fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subspace kept in reduced echelon form: every basis vector has a
/// distinct pivot (its lowest set bit) that no other basis vector contains.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Subspace {
    basis: Vec<u64>,
}

impl Subspace {
    pub fn new() -> Subspace {
        Subspace { basis: Vec::new() }
    }

    pub fn span(vectors: impl IntoIterator<Item = u64>) -> Subspace {
        let mut s = Subspace::new();
        for v in vectors {
            s.insert(v);
        }
        s
    }

    /// Clears every pivot bit of `v`; the result is zero iff `v` lies in the
    /// subspace.
    pub fn reduce(&self, mut v: u64) -> u64 {
        for &b in &self.basis {
            if v >> b.trailing_zeros() & 1 == 1 {
                v ^= b;
            }
        }
        v
    }

    pub fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: u64) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let p = v.trailing_zeros();
        for b in &mut self.basis {
            if *b >> p & 1 == 1 {
                *b ^= v;
            }
        }
        let pos = self
            .basis
            .partition_point(|b| b.trailing_zeros() < p);
        self.basis.insert(pos, v);
        true
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis sorted by pivot.
    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    pub fn pivots(&self) -> u64 {
        self.basis.iter().fold(0, |acc, b| acc | (1 << b.trailing_zeros()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|&b| other.contains(b))
    }
}

/// All invertible `n × n` matrices.
pub fn general_linear(n: usize) -> Vec<BitMatrix> {
    BitMatrix::all(n, n).filter(BitMatrix::is_invertible).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gl_orders() {
        assert_eq!(general_linear(1).len(), 1);
        assert_eq!(general_linear(2).len(), 6);
        assert_eq!(general_linear(3).len(), 168);
    }

    #[test]
    fn rows_round_trip() {
        let m = BitMatrix::from_rows(&[vec![1, 0, 1], vec![0, 1, 1]], 3);
        assert_eq!(m.to_rows(), [vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(m.apply(0b100), 0b11);
    }

    proptest! {
        #[test]
        fn subspace_reduction_is_echelon(vs in proptest::collection::vec(0u64..256, 0..8)) {
            let s = Subspace::span(vs.iter().copied());
            for &v in &vs {
                prop_assert!(s.contains(v));
            }
            let piv = s.pivots();
            for &b in s.basis() {
                prop_assert_eq!(b & piv, 1 << b.trailing_zeros());
            }
            // rank via an independent count of distinct sums
            let mut sums = alloc::collections::BTreeSet::new();
            for code in 0u32..(1 << vs.len()) {
                let v = vs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).fold(0, |a, (_, v)| a ^ v);
                sums.insert(v);
            }
            prop_assert_eq!(sums.len(), 1 << s.dim());
        }

        #[test]
        fn inverse_is_two_sided(code in 0u64..512) {
            let m = BitMatrix::from_columns(3, (0..3).map(|j| code >> (3 * j) & 7).collect());
            match m.inverse() {
                Some(inv) => {
                    prop_assert_eq!(m.compose(&inv), BitMatrix::identity(3));
                    prop_assert_eq!(inv.compose(&m), BitMatrix::identity(3));
                }
                None => prop_assert!(!m.is_invertible()),
            }
        }
    }
}

use alloc::vec::Vec;

use super::linalg::{mask, BitMatrix};

/// A finite-dimensional unital associative algebra over the two-element
/// field, given by structure constants on a fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct F2Algebra {
    dim: usize,
    // mul[i * dim + j] = e_i · e_j
    mul: Vec<u64>,
    unit: u64,
}

impl F2Algebra {
    /// Structure constants `mul[i][j] = e_i · e_j` and the unit, unchecked.
    pub fn new(dim: usize, mul: Vec<u64>, unit: u64) -> F2Algebra {
        assert_eq!(mul.len(), dim * dim, "one product per basis pair");
        F2Algebra {
            dim,
            mul: mul.into_iter().map(|v| v & mask(dim)).collect(),
            unit: unit & mask(dim),
        }
    }

    /// The base field.
    pub fn f2() -> F2Algebra {
        F2Algebra::new(1, alloc::vec![1], 1)
    }

    /// `F₂ × F₂` on the basis `(1, e)` with `e² = e`.
    pub fn f2_times_f2() -> F2Algebra {
        F2Algebra::new(2, alloc::vec![0b01, 0b10, 0b10, 0b10], 0b01)
    }

    /// `F₂[x]/(x²)` on the basis `(1, x)`.
    pub fn dual_numbers() -> F2Algebra {
        F2Algebra::new(2, alloc::vec![0b01, 0b10, 0b10, 0b00], 0b01)
    }

    /// The four-element field on the basis `(1, w)` with `w² = w + 1`.
    pub fn f4() -> F2Algebra {
        F2Algebra::new(2, alloc::vec![0b01, 0b10, 0b10, 0b11], 0b01)
    }

    /// Every built-in algebra of dimension at most two.
    pub fn small() -> Vec<F2Algebra> {
        alloc::vec![
            F2Algebra::f2(),
            F2Algebra::f2_times_f2(),
            F2Algebra::dual_numbers(),
            F2Algebra::f4()
        ]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> u64 {
        self.unit
    }

    pub fn basis_product(&self, i: usize, j: usize) -> u64 {
        self.mul[i * self.dim + j]
    }

    pub fn structure_constants(&self) -> &[u64] {
        &self.mul
    }

    pub fn product(&self, x: u64, y: u64) -> u64 {
        let mut out = 0;
        for i in bits(x) {
            for j in bits(y) {
                out ^= self.mul[i * self.dim + j];
            }
        }
        out
    }

    /// Associativity and the two-sided unit law on basis elements.
    pub fn is_valid(&self) -> bool {
        let d = self.dim;
        let e = |i: usize| 1u64 << i;
        (0..d).all(|i| self.product(self.unit, e(i)) == e(i) && self.product(e(i), self.unit) == e(i))
            && (0..d).all(|i| {
                (0..d).all(|j| {
                    (0..d).all(|k| {
                        self.product(self.product(e(i), e(j)), e(k))
                            == self.product(e(i), self.product(e(j), e(k)))
                    })
                })
            })
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_multiplication(&self, x: u64) -> BitMatrix {
        BitMatrix::from_columns(self.dim, (0..self.dim).map(|j| self.product(x, 1 << j)).collect())
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_multiplication(&self, x: u64) -> BitMatrix {
        BitMatrix::from_columns(self.dim, (0..self.dim).map(|j| self.product(1 << j, x)).collect())
    }

    /// True iff `f` is a unital multiplicative linear map `self → target`.
    pub fn is_morphism_to(&self, f: &BitMatrix, target: &F2Algebra) -> bool {
        f.cols() == self.dim
            && f.rows() == target.dim
            && f.apply(self.unit) == target.unit
            && (0..self.dim).all(|i| {
                (0..self.dim).all(|j| {
                    f.apply(self.basis_product(i, j)) == target.product(f.column(i), f.column(j))
                })
            })
    }

    /// Every algebra morphism `self → target`.
    pub fn morphisms_to(&self, target: &F2Algebra) -> Vec<BitMatrix> {
        BitMatrix::all(target.dim, self.dim)
            .filter(|f| self.is_morphism_to(f, target))
            .collect()
    }
}

/// Indices of set bits, lowest first.
pub fn bits(mut v: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if v == 0 {
            None
        } else {
            let i = v.trailing_zeros() as usize;
            v &= v - 1;
            Some(i)
        }
    })
}

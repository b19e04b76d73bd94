use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use super::algebra::{bits, F2Algebra};
use super::linalg::{general_linear, BitMatrix};
use crate::error::{Error, Result};

/// A finite-dimensional `A`-`B` bimodule, with one action matrix per basis
/// element of each algebra.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct F2Bimodule {
    left: F2Algebra,
    right: F2Algebra,
    dim: usize,
    lact: Vec<BitMatrix>,
    ract: Vec<BitMatrix>,
}

impl F2Bimodule {
    /// `lact[i]` is `m ↦ e_i·m` and `ract[j]` is `m ↦ m·e_j`; unchecked.
    pub fn new(
        left: F2Algebra,
        right: F2Algebra,
        dim: usize,
        lact: Vec<BitMatrix>,
        ract: Vec<BitMatrix>,
    ) -> Result<F2Bimodule> {
        let square = |m: &BitMatrix| m.rows() == dim && m.cols() == dim;
        if lact.len() != left.dim()
            || ract.len() != right.dim()
            || !lact.iter().chain(&ract).all(square)
        {
            return Err(Error::DimensionMismatch(format!(
                "action tables do not fit a module of dimension {dim}"
            )));
        }
        Ok(F2Bimodule {
            left,
            right,
            dim,
            lact,
            ract,
        })
    }

    /// An algebra as a bimodule over itself.
    pub fn regular(a: &F2Algebra) -> F2Bimodule {
        let d = a.dim();
        F2Bimodule {
            left: a.clone(),
            right: a.clone(),
            dim: d,
            lact: (0..d).map(|i| a.left_multiplication(1 << i)).collect(),
            ract: (0..d).map(|j| a.right_multiplication(1 << j)).collect(),
        }
    }

    pub fn left(&self) -> &F2Algebra {
        &self.left
    }

    pub fn right(&self) -> &F2Algebra {
        &self.right
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_actions(&self) -> &[BitMatrix] {
        &self.lact
    }

    pub fn right_actions(&self) -> &[BitMatrix] {
        &self.ract
    }

    /// Matrix of `m ↦ a·m`.
    pub fn left_matrix(&self, a: u64) -> BitMatrix {
        bits(a).fold(BitMatrix::zero(self.dim, self.dim), |acc, i| acc.add(&self.lact[i]))
    }

    /// Matrix of `m ↦ m·b`.
    pub fn right_matrix(&self, b: u64) -> BitMatrix {
        bits(b).fold(BitMatrix::zero(self.dim, self.dim), |acc, j| acc.add(&self.ract[j]))
    }

    pub fn act_left(&self, a: u64, m: u64) -> u64 {
        bits(a).fold(0, |acc, i| acc ^ self.lact[i].apply(m))
    }

    pub fn act_right(&self, m: u64, b: u64) -> u64 {
        bits(b).fold(0, |acc, j| acc ^ self.ract[j].apply(m))
    }

    /// Unital associative actions on both sides that commute.
    pub fn is_valid(&self) -> bool {
        let id = BitMatrix::identity(self.dim);
        let (a, b) = (&self.left, &self.right);
        self.left_matrix(a.unit()) == id
            && self.right_matrix(b.unit()) == id
            && (0..a.dim()).all(|i| {
                (0..a.dim()).all(|j| {
                    self.lact[i].compose(&self.lact[j]) == self.left_matrix(a.basis_product(i, j))
                })
            })
            && (0..b.dim()).all(|i| {
                (0..b.dim()).all(|j| {
                    self.ract[j].compose(&self.ract[i]) == self.right_matrix(b.basis_product(i, j))
                })
            })
            && self
                .lact
                .iter()
                .all(|l| self.ract.iter().all(|r| l.compose(r) == r.compose(l)))
    }

    fn conjugate(&self, p: &BitMatrix, p_inv: &BitMatrix) -> F2Bimodule {
        let conj = |m: &BitMatrix| p.compose(m).compose(p_inv);
        F2Bimodule {
            left: self.left.clone(),
            right: self.right.clone(),
            dim: self.dim,
            lact: self.lact.iter().map(conj).collect(),
            ract: self.ract.iter().map(conj).collect(),
        }
    }

    /// One representative of every isomorphism class of `A`-`B` bimodules
    /// of dimension `dim`.
    pub fn enumerate(left: &F2Algebra, right: &F2Algebra, dim: usize) -> Vec<F2Bimodule> {
        let lefts = module_structures(left, dim, true);
        let rights = module_structures(right, dim, false);
        let gl: Vec<(BitMatrix, BitMatrix)> = general_linear(dim)
            .into_iter()
            .map(|p| {
                let inv = p.inverse().expect("invertible");
                (p, inv)
            })
            .collect();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for l in &lefts {
            for r in &rights {
                if !l.iter().all(|x| r.iter().all(|y| x.compose(y) == y.compose(x))) {
                    continue;
                }
                let m = F2Bimodule {
                    left: left.clone(),
                    right: right.clone(),
                    dim,
                    lact: l.clone(),
                    ract: r.clone(),
                };
                let canon = gl
                    .iter()
                    .map(|(p, q)| {
                        let c = m.conjugate(p, q);
                        (c.lact, c.ract)
                    })
                    .min()
                    .expect("GL is nonempty");
                if seen.insert(canon) {
                    out.push(m);
                }
            }
        }
        out
    }
}

/// All action tables making a `dim`-dimensional space a left (or right)
/// module.
fn module_structures(a: &F2Algebra, dim: usize, left: bool) -> Vec<Vec<BitMatrix>> {
    let d = a.dim();
    let all: Vec<BitMatrix> = BitMatrix::all(dim, dim).collect();
    let mut out = Vec::new();
    let mut choice = alloc::vec![0usize; d];
    loop {
        let acts: Vec<BitMatrix> = choice.iter().map(|&c| all[c].clone()).collect();
        let of = |v: u64| bits(v).fold(BitMatrix::zero(dim, dim), |acc, i| acc.add(&acts[i]));
        let unital = of(a.unit()) == BitMatrix::identity(dim);
        let assoc = (0..d).all(|i| {
            (0..d).all(|j| {
                let lhs = if left {
                    acts[i].compose(&acts[j])
                } else {
                    acts[j].compose(&acts[i])
                };
                lhs == of(a.basis_product(i, j))
            })
        });
        if unital && assoc {
            out.push(acts);
        }
        let mut pos = 0;
        loop {
            if pos == d {
                return out;
            }
            choice[pos] += 1;
            if choice[pos] < all.len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// A triple `(f, φ, g)` from an `A`-`B` bimodule `M` to a `C`-`D`
/// bimodule `N`, with `f: A → C`, `g: B → D` and `φ: M → N` linear.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EquivariantMorphism {
    pub source: F2Bimodule,
    pub target: F2Bimodule,
    pub f: BitMatrix,
    pub phi: BitMatrix,
    pub g: BitMatrix,
}

impl EquivariantMorphism {
    pub fn identity(m: &F2Bimodule) -> EquivariantMorphism {
        EquivariantMorphism {
            source: m.clone(),
            target: m.clone(),
            f: BitMatrix::identity(m.left.dim()),
            phi: BitMatrix::identity(m.dim),
            g: BitMatrix::identity(m.right.dim()),
        }
    }

    /// `(f, f, f)` from `A` to `C` as regular bimodules.
    pub fn horizontal_identity(a: &F2Algebra, c: &F2Algebra, f: &BitMatrix) -> EquivariantMorphism {
        EquivariantMorphism {
            source: F2Bimodule::regular(a),
            target: F2Bimodule::regular(c),
            f: f.clone(),
            phi: f.clone(),
            g: f.clone(),
        }
    }

    fn check_dims(&self) -> Result<()> {
        let (m, n) = (&self.source, &self.target);
        let fits = |x: &BitMatrix, rows: usize, cols: usize| x.rows() == rows && x.cols() == cols;
        if fits(&self.f, n.left.dim(), m.left.dim())
            && fits(&self.phi, n.dim, m.dim)
            && fits(&self.g, n.right.dim(), m.right.dim())
        {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(
                "component matrices do not fit the bimodules".into(),
            ))
        }
    }

    /// `f`, `g` are algebra morphisms and `φ(a·x·b) = f(a)·φ(x)·g(b)`.
    pub fn is_equivariant(&self) -> Result<bool> {
        self.check_dims()?;
        let (m, n) = (&self.source, &self.target);
        Ok(m.left.is_morphism_to(&self.f, &n.left)
            && m.right.is_morphism_to(&self.g, &n.right)
            && (0..m.left.dim()).all(|i| {
                self.phi.compose(&m.lact[i]) == n.left_matrix(self.f.column(i)).compose(&self.phi)
            })
            && (0..m.right.dim()).all(|j| {
                self.phi.compose(&m.ract[j]) == n.right_matrix(self.g.column(j)).compose(&self.phi)
            }))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &EquivariantMorphism) -> Result<EquivariantMorphism> {
        self.check_dims()?;
        other.check_dims()?;
        if self.target != other.source {
            return Err(Error::DimensionMismatch(
                "vertical composite of non-matching bimodules".into(),
            ));
        }
        Ok(EquivariantMorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            f: other.f.compose(&self.f),
            phi: other.phi.compose(&self.phi),
            g: other.g.compose(&self.g),
        })
    }

    /// True iff the vertical boundaries are one algebra morphism.
    pub fn is_horizontal_endomorphism(&self) -> bool {
        self.source.left == self.source.right
            && self.target.left == self.target.right
            && self.f == self.g
    }
}

/// Every `φ` making `(f, φ, g): M → N` equivariant.
pub fn equivariant_maps(
    m: &F2Bimodule,
    n: &F2Bimodule,
    f: &BitMatrix,
    g: &BitMatrix,
) -> Vec<EquivariantMorphism> {
    BitMatrix::all(n.dim, m.dim)
        .map(|phi| EquivariantMorphism {
            source: m.clone(),
            target: n.clone(),
            f: f.clone(),
            phi,
            g: g.clone(),
        })
        .filter(|t| t.is_equivariant().unwrap_or(false))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_bimodules_are_valid() {
        for a in F2Algebra::small() {
            assert!(F2Bimodule::regular(&a).is_valid());
            let id = EquivariantMorphism::identity(&F2Bimodule::regular(&a));
            assert!(id.is_equivariant().unwrap());
        }
    }

    #[test]
    fn enumeration_counts() {
        let f2 = F2Algebra::f2();
        assert_eq!(F2Bimodule::enumerate(&f2, &f2, 1).len(), 1);
        assert_eq!(F2Bimodule::enumerate(&f2, &f2, 2).len(), 1);
        // e acts by 0 or 1 on each side of a line
        let ff = F2Algebra::f2_times_f2();
        assert_eq!(F2Bimodule::enumerate(&ff, &ff, 1).len(), 4);
        // F₄ has no one-dimensional modules
        assert!(F2Bimodule::enumerate(&F2Algebra::f4(), &f2, 1).is_empty());
        for m in F2Bimodule::enumerate(&ff, &F2Algebra::dual_numbers(), 2) {
            assert!(m.is_valid());
        }
    }

    #[test]
    fn horizontal_identities_are_equivariant() {
        for a in F2Algebra::small() {
            for c in F2Algebra::small() {
                for f in a.morphisms_to(&c) {
                    let t = EquivariantMorphism::horizontal_identity(&a, &c, &f);
                    assert!(t.is_equivariant().unwrap());
                }
            }
        }
    }

    #[test]
    fn scrambled_map_is_not_equivariant() {
        let ff = F2Algebra::f2_times_f2();
        let r = F2Bimodule::regular(&ff);
        let mut t = EquivariantMorphism::identity(&r);
        // swap the basis vectors 1 and e: not compatible with e acting
        t.phi = BitMatrix::from_columns(2, alloc::vec![0b10, 0b01]);
        assert!(!t.is_equivariant().unwrap());
        t.phi = BitMatrix::identity(3);
        assert!(matches!(t.is_equivariant(), Err(Error::DimensionMismatch(_))));
    }
}

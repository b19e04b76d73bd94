use alloc::format;
use alloc::vec::Vec;

use super::algebra::bits;
use super::bimodule::{EquivariantMorphism, F2Bimodule};
use super::linalg::{BitMatrix, Subspace, MAX_DIM};
use crate::error::{Error, Result};

/// `M ⊗_B M'` presented as pure tensors `e_i ⊗ e'_j` (coordinate
/// `i·dim M' + j`) modulo the span of `(m·b)⊗m' − m⊗(b·m')`. The quotient
/// basis is the set of coordinates that are not pivots of the relations.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    left_dim: usize,
    right_dim: usize,
    relations: Subspace,
    // quotient basis index -> pure coordinate
    kept: Vec<usize>,
    module: F2Bimodule,
}

impl TensorProduct {
    pub fn new(m: &F2Bimodule, m2: &F2Bimodule) -> Result<TensorProduct> {
        if m.right().dim() != m2.left().dim() {
            return Err(Error::DimensionMismatch(format!(
                "middle algebras have dimensions {} and {}",
                m.right().dim(),
                m2.left().dim()
            )));
        }
        if m.right() != m2.left() {
            return Err(Error::DimensionMismatch("middle algebras differ".into()));
        }
        let (d1, d2) = (m.dim(), m2.dim());
        if d1 * d2 > MAX_DIM {
            return Err(Error::DimensionMismatch(format!(
                "tensor product of dimension {} exceeds {MAX_DIM}",
                d1 * d2
            )));
        }
        let pure = |x: u64, y: u64| {
            let mut out = 0u64;
            for i in bits(x) {
                for j in bits(y) {
                    out ^= 1 << (i * d2 + j);
                }
            }
            out
        };
        let mut relations = Subspace::new();
        for k in 0..m.right().dim() {
            for i in 0..d1 {
                for j in 0..d2 {
                    let lhs = pure(m.right_actions()[k].apply(1 << i), 1 << j);
                    let rhs = pure(1 << i, m2.left_actions()[k].apply(1 << j));
                    relations.insert(lhs ^ rhs);
                }
            }
        }
        let pivots = relations.pivots();
        let kept: Vec<usize> = (0..d1 * d2).filter(|&p| pivots >> p & 1 == 0).collect();
        let mut t = TensorProduct {
            left_dim: d1,
            right_dim: d2,
            relations,
            kept,
            module: F2Bimodule::regular(&super::F2Algebra::f2()),
        };
        let n = t.kept.len();
        let act = |f: &dyn Fn(usize, usize) -> u64| -> BitMatrix {
            BitMatrix::from_columns(
                n,
                t.kept
                    .iter()
                    .map(|&p| t.project(f(p / d2, p % d2)))
                    .collect(),
            )
        };
        let lact = m
            .left_actions()
            .iter()
            .map(|a| act(&|i, j| pure(a.apply(1 << i), 1 << j)))
            .collect();
        let ract = m2
            .right_actions()
            .iter()
            .map(|b| act(&|i, j| pure(1 << i, b.apply(1 << j))))
            .collect();
        t.module = F2Bimodule::new(m.left().clone(), m2.right().clone(), n, lact, ract)?;
        Ok(t)
    }

    /// Quotient coordinates of a vector of pure-tensor coordinates.
    pub fn project(&self, v: u64) -> u64 {
        let r = self.relations.reduce(v);
        self.kept
            .iter()
            .enumerate()
            .fold(0, |acc, (q, &p)| acc | ((r >> p & 1) << q))
    }

    /// Class of `x ⊗ y`.
    pub fn tensor(&self, x: u64, y: u64) -> u64 {
        let mut out = 0u64;
        for i in bits(x) {
            for j in bits(y) {
                out ^= 1 << (i * self.right_dim + j);
            }
        }
        self.project(out)
    }

    /// The pure tensor `e_i ⊗ e'_j` representing each quotient basis vector.
    pub fn representatives(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.kept.iter().map(|&p| (p / self.right_dim, p % self.right_dim))
    }

    pub fn module(&self) -> &F2Bimodule {
        &self.module
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }
}

/// The relative tensor product over the shared middle algebra.
pub fn tensor_bimodules(m: &F2Bimodule, m2: &F2Bimodule) -> Result<F2Bimodule> {
    Ok(TensorProduct::new(m, m2)?.module)
}

/// `(f, φ, g) ⊗ (g, φ', h) = (f, φ ⊗_g φ', h)`.
pub fn tensor_morphisms(t: &EquivariantMorphism, t2: &EquivariantMorphism) -> Result<EquivariantMorphism> {
    if t.g != t2.f {
        return Err(Error::MiddleMismatch(
            "right vertical boundary of the first factor differs from the left one of the second".into(),
        ));
    }
    let src = TensorProduct::new(&t.source, &t2.source)?;
    let tgt = TensorProduct::new(&t.target, &t2.target)?;
    let cols = src
        .representatives()
        .map(|(i, j)| tgt.tensor(t.phi.apply(1 << i), t2.phi.apply(1 << j)))
        .collect();
    Ok(EquivariantMorphism {
        source: src.module.clone(),
        target: tgt.module.clone(),
        f: t.f.clone(),
        phi: BitMatrix::from_columns(tgt.module.dim(), cols),
        g: t2.g.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findim::F2Algebra;

    /// `m ⊗ b ↦ m·b` as a matrix `M ⊗_B B → M`.
    fn action_map(m: &F2Bimodule) -> (TensorProduct, BitMatrix) {
        let b = F2Bimodule::regular(m.right());
        let t = TensorProduct::new(m, &b).unwrap();
        let cols = t
            .representatives()
            .map(|(i, k)| m.act_right(1 << i, 1 << k))
            .collect();
        let mu = BitMatrix::from_columns(m.dim(), cols);
        (t, mu)
    }

    #[test]
    fn right_unit_law() {
        for a in F2Algebra::small() {
            for b in F2Algebra::small() {
                for d in 1..=2 {
                    for m in F2Bimodule::enumerate(&a, &b, d) {
                        let (t, mu) = action_map(&m);
                        assert_eq!(t.module().dim(), m.dim());
                        assert!(mu.is_invertible());
                        let iso = EquivariantMorphism {
                            source: t.module().clone(),
                            target: m.clone(),
                            f: BitMatrix::identity(a.dim()),
                            phi: mu,
                            g: BitMatrix::identity(b.dim()),
                        };
                        assert!(iso.is_equivariant().unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn dimensions() {
        let f2 = F2Algebra::f2();
        let v = F2Bimodule::enumerate(&f2, &f2, 2).pop().unwrap();
        assert_eq!(tensor_bimodules(&v, &v).unwrap().dim(), 4);
        for a in F2Algebra::small() {
            let r = F2Bimodule::regular(&a);
            assert_eq!(tensor_bimodules(&r, &r).unwrap().dim(), a.dim());
        }
        let ff = F2Bimodule::regular(&F2Algebra::f2_times_f2());
        let f4 = F2Bimodule::regular(&F2Algebra::f4());
        assert!(matches!(tensor_bimodules(&ff, &f4), Err(Error::DimensionMismatch(_))));
        assert!(matches!(tensor_bimodules(&v, &ff), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn tensor_of_identities_is_identity() {
        for a in F2Algebra::small() {
            for d in 1..=2 {
                for m in F2Bimodule::enumerate(&a, &a, d) {
                    let id = EquivariantMorphism::identity(&m);
                    let t = tensor_morphisms(&id, &id).unwrap();
                    assert_eq!(t.phi, BitMatrix::identity(t.source.dim()));
                    assert_eq!(t, EquivariantMorphism::identity(&t.source));
                }
            }
        }
    }

    #[test]
    fn tensor_of_horizontal_identities() {
        // μ_C ∘ (f ⊗ f) = f ∘ μ_A through the multiplication isomorphisms
        for a in F2Algebra::small() {
            for c in F2Algebra::small() {
                for f in a.morphisms_to(&c) {
                    let h = EquivariantMorphism::horizontal_identity(&a, &c, &f);
                    let t = tensor_morphisms(&h, &h).unwrap();
                    assert!(t.is_equivariant().unwrap());
                    let (_, mu_a) = action_map(&F2Bimodule::regular(&a));
                    let (_, mu_c) = action_map(&F2Bimodule::regular(&c));
                    assert_eq!(mu_c.compose(&t.phi), f.compose(&mu_a));
                }
            }
        }
    }
}

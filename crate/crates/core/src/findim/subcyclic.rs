use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::algebra::F2Algebra;
use super::bimodule::{equivariant_maps, EquivariantMorphism, F2Bimodule};
use super::linalg::{mask, BitMatrix, Subspace};
use super::tensor::TensorProduct;
use crate::error::Result;

/// `span{α(a)·n·α(b)}` over basis elements `a`, `b` of `A`, where `α`
/// is `f`, or the identity when `f` is `None`.
fn cyclic_submodule(n_mod: &F2Bimodule, f: Option<&BitMatrix>, n: u64) -> Subspace {
    let d = f.map_or(n_mod.left().dim(), BitMatrix::cols);
    let image = |i: usize| f.map_or(1u64 << i, |f| f.column(i));
    let mut s = Subspace::new();
    for i in 0..d {
        let an = n_mod.act_left(image(i), n);
        for j in 0..d {
            s.insert(n_mod.act_right(an, image(j)));
        }
    }
    s
}

/// True iff `(f, φ)` from an `A`-bimodule to a `B`-bimodule admits a
/// cyclic `A`-submodule `L` (acting through `f`) and a cyclic `B`-submodule
/// `K` of the target with `Im φ ⊆ L ⊆ K`.
///
/// Both vertical components must be the same morphism between algebras
/// that act on both sides of their bimodules; any other triple is reported
/// as not 2-subcyclic. Every generator of `L` and `K` is tried.
pub fn is_2_subcyclic(t: &EquivariantMorphism) -> Result<bool> {
    if !t.is_equivariant()? || !t.is_horizontal_endomorphism() {
        return Ok(false);
    }
    let n_mod = &t.target;
    let image = t.phi.image();
    let all = 0..=mask(n_mod.dim());
    let ls: Vec<Subspace> = all
        .clone()
        .map(|n| cyclic_submodule(n_mod, Some(&t.f), n))
        .filter(|l| image.is_subspace_of(l))
        .collect();
    if ls.is_empty() {
        return Ok(false);
    }
    Ok(all
        .map(|n| cyclic_submodule(n_mod, None, n))
        .any(|k| ls.iter().any(|l| l.is_subspace_of(&k))))
}

/// Outcome of the exhaustive tensor closure scan.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClosureReport {
    /// Equivariant morphisms examined.
    pub morphisms: usize,
    /// Of those, the 2-subcyclic ones.
    pub subcyclic: usize,
    /// Pairs of 2-subcyclic morphisms whose tensor product was checked.
    pub pairs: usize,
    /// Pairs whose tensor product is not 2-subcyclic.
    pub failures: Vec<(EquivariantMorphism, EquivariantMorphism)>,
}

impl ClosureReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every 2-subcyclic `(f, φ)` between bimodules of dimension `1..=max_dim`
/// over the given algebras.
pub fn subcyclic_morphisms(a: &F2Algebra, b: &F2Algebra, f: &BitMatrix, max_dim: usize) -> (usize, Vec<EquivariantMorphism>) {
    let ms: Vec<F2Bimodule> = (1..=max_dim).flat_map(|d| F2Bimodule::enumerate(a, a, d)).collect();
    let ns: Vec<F2Bimodule> = (1..=max_dim).flat_map(|d| F2Bimodule::enumerate(b, b, d)).collect();
    let mut total = 0;
    let mut out = Vec::new();
    for m in &ms {
        for n in &ns {
            for t in equivariant_maps(m, n, f, f) {
                total += 1;
                if is_2_subcyclic(&t).unwrap_or(false) {
                    out.push(t);
                }
            }
        }
    }
    (total, out)
}

/// Checks that the relative tensor product of two 2-subcyclic morphisms
/// `(f, φ)` and `(f, φ')` is 2-subcyclic, over every pair of the given
/// algebras, every algebra morphism between them, and every pair of
/// bimodules of dimension `1..=max_dim` up to isomorphism.
pub fn check_tensor_closure(algebras: &[F2Algebra], max_dim: usize) -> Result<ClosureReport> {
    let mut report = ClosureReport::default();
    for a in algebras {
        for b in algebras {
            for f in a.morphisms_to(b) {
                let (total, sub) = subcyclic_morphisms(a, b, &f, max_dim);
                report.morphisms += total;
                report.subcyclic += sub.len();
                let mut cache: BTreeMap<(&F2Bimodule, &F2Bimodule), TensorProduct> = BTreeMap::new();
                for t in &sub {
                    for u in &sub {
                        for pair in [(&t.source, &u.source), (&t.target, &u.target)] {
                            if let Entry::Vacant(slot) = cache.entry(pair) {
                                slot.insert(TensorProduct::new(pair.0, pair.1)?);
                            }
                        }
                        let src = &cache[&(&t.source, &u.source)];
                        let tgt = &cache[&(&t.target, &u.target)];
                        let cols = src
                            .representatives()
                            .map(|(i, j)| tgt.tensor(t.phi.apply(1 << i), u.phi.apply(1 << j)))
                            .collect();
                        let product = EquivariantMorphism {
                            source: src.module().clone(),
                            target: tgt.module().clone(),
                            f: f.clone(),
                            phi: BitMatrix::from_columns(tgt.module().dim(), cols),
                            g: f.clone(),
                        };
                        report.pairs += 1;
                        if !is_2_subcyclic(&product)? {
                            report.failures.push((t.clone(), u.clone()));
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::findim::tensor_morphisms;

    #[test]
    fn horizontal_identities_are_subcyclic() {
        for a in F2Algebra::small() {
            for c in F2Algebra::small() {
                for f in a.morphisms_to(&c) {
                    let t = EquivariantMorphism::horizontal_identity(&a, &c, &f);
                    assert!(is_2_subcyclic(&t).unwrap());
                }
            }
        }
    }

    #[test]
    fn identity_on_plane_is_not_subcyclic() {
        let f2 = F2Algebra::f2();
        let plane = F2Bimodule::enumerate(&f2, &f2, 2).pop().unwrap();
        assert!(!is_2_subcyclic(&EquivariantMorphism::identity(&plane)).unwrap());
        let line = F2Bimodule::regular(&f2);
        assert!(is_2_subcyclic(&EquivariantMorphism::identity(&line)).unwrap());
        // a rank-one map into the plane is fine
        let mut t = EquivariantMorphism::identity(&plane);
        t.phi = BitMatrix::from_columns(2, alloc::vec![0b01, 0b01]);
        assert!(is_2_subcyclic(&t).unwrap());
    }

    #[test]
    fn distinct_vertical_components_are_excluded() {
        let ff = F2Algebra::f2_times_f2();
        let r = F2Bimodule::regular(&ff);
        let swap = BitMatrix::from_columns(2, alloc::vec![0b01, 0b11]);
        let mut t = EquivariantMorphism::identity(&r);
        t.f = swap;
        t.phi = BitMatrix::zero(2, 2);
        assert!(t.is_equivariant().unwrap());
        assert!(!is_2_subcyclic(&t).unwrap());
    }

    #[test]
    fn closure_holds_over_the_base_field() {
        let report = check_tensor_closure(&[F2Algebra::f2()], 2).unwrap();
        assert!(report.ok());
        assert!(report.subcyclic < report.morphisms);
        assert!(report.pairs > 0);
    }

    /// Two cyclic bimodules over `F₂ × F₂` whose tensor product is the
    /// plane with trivial actions, so the tensor of their identities is not
    /// 2-subcyclic.
    #[test]
    fn closure_fails_over_split_algebra() {
        let ff = F2Algebra::f2_times_f2();
        let id = BitMatrix::identity(2);
        let zero = BitMatrix::zero(2, 2);
        let proj = BitMatrix::from_columns(2, alloc::vec![0b01, 0b00]);
        let m = F2Bimodule::new(ff.clone(), ff.clone(), 2, alloc::vec![id.clone(), zero.clone()], alloc::vec![id.clone(), proj.clone()]).unwrap();
        let m2 = F2Bimodule::new(ff.clone(), ff.clone(), 2, alloc::vec![id.clone(), proj], alloc::vec![id, zero]).unwrap();
        assert!(m.is_valid() && m2.is_valid());
        let (t, u) = (EquivariantMorphism::identity(&m), EquivariantMorphism::identity(&m2));
        assert!(is_2_subcyclic(&t).unwrap() && is_2_subcyclic(&u).unwrap());
        let p = tensor_morphisms(&t, &u).unwrap();
        assert_eq!(p.source.dim(), 2);
        assert_eq!(p.source.right_actions()[1], BitMatrix::zero(2, 2));
        assert_eq!(p.source.left_actions()[1], BitMatrix::zero(2, 2));
        assert!(!is_2_subcyclic(&p).unwrap());
        assert!(!crate::oracle::subcyclic_brute(&p));

        let report = check_tensor_closure(&[ff], 2).unwrap();
        assert!(!report.ok());
    }

    #[test]
    fn closure_agrees_with_tensor_morphisms() {
        let f2 = F2Algebra::f2();
        let (_, sub) = subcyclic_morphisms(&f2, &f2, &BitMatrix::identity(1), 2);
        for t in &sub {
            for u in &sub {
                let p = tensor_morphisms(t, u).unwrap();
                assert!(p.is_equivariant().unwrap());
                assert!(is_2_subcyclic(&p).unwrap());
            }
        }
    }
}

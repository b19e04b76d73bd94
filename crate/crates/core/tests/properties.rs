use std::collections::BTreeSet;

use dblcat_core::bicat::{decorated_horizontalization, horizontalization, trivial_double};
use dblcat_core::findim::linalg::BitMatrix;
use dblcat_core::findim::{is_2_subcyclic, tensor_bimodules, EquivariantMorphism, F2Algebra, F2Bimodule};
use dblcat_core::functors::check_filtration_preservation;
use dblcat_core::gen::{self, PosetSpec};
use dblcat_core::{FinDoubleCategory, GammaAnalysis};
use proptest::prelude::*;

/// Posets on up to four points: pairs `i < j` only, so never cyclic.
fn poset() -> impl Strategy<Value = PosetSpec> {
    (1usize..=4).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let chosen = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&p, _)| p);
            PosetSpec::new(n, chosen).expect("upward pairs form a poset")
        })
    })
}

fn sq(k: &PosetSpec) -> FinDoubleCategory {
    gen::gen_commuting_squares(&gen::gen_poset_category(k).unwrap()).unwrap()
}

/// Explicit relation count, independent of `PosetSpec::relation`.
fn comparable_pairs(k: &PosetSpec) -> usize {
    (0..k.size()).flat_map(|i| (0..k.size()).map(move |j| (i, j))).filter(|&(i, j)| k.leq(i, j)).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn commuting_squares_validate(k in poset()) {
        let c = sq(&k);
        prop_assert!(c.validate().ok());
        let back = FinDoubleCategory::from_presentation(&c.to_presentation()).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn gamma_of_commuting_squares_is_counted(k in poset()) {
        let c = sq(&k);
        let a = GammaAnalysis::new(&c).unwrap();
        prop_assert_eq!(a.gamma().square_count(), 2 * comparable_pairs(&k) - k.size());
        prop_assert!(a.stable_at() <= c.square_count());
    }

    #[test]
    fn gamma_is_idempotent_and_keeps_globular_squares(k in poset()) {
        let c = sq(&k);
        let a = GammaAnalysis::new(&c).unwrap();
        let g = a.gamma().clone();
        let again = GammaAnalysis::new(&g).unwrap();
        prop_assert!(again.is_globularily_generated());
        prop_assert_eq!(again.gamma(), &g);
        for q in c.globular_squares() {
            prop_assert!(a.is_member(q));
            prop_assert_eq!(a.vlength(q), Some(1));
        }
        prop_assert_eq!(
            decorated_horizontalization(&c).unwrap().underlying().to_presentation(),
            decorated_horizontalization(&g).unwrap().underlying().to_presentation()
        );
    }

    #[test]
    fn members_have_lengths_and_witnesses(k in poset()) {
        let c = sq(&k);
        let a = GammaAnalysis::new(&c).unwrap();
        for q in a.members() {
            prop_assert!(a.vlength(q).is_some());
            let w = a.witness(q).unwrap();
            prop_assert_eq!(w.evaluate(&c), Some(q));
        }
    }

    #[test]
    fn induced_functors_preserve_levels(k in poset(), l in poset(), pick in any::<prop::sample::Index>()) {
        let fs = gen::poset_functors(&k, &l);
        prop_assume!(!fs.is_empty());
        let u = &fs[pick.index(fs.len())];
        let f = gen::gen_sq_functor(u).unwrap();
        prop_assert!(f.validate().ok());
        prop_assert!(check_filtration_preservation(&f).unwrap().ok());
    }

    #[test]
    fn products_validate(k in poset(), l in poset()) {
        prop_assume!(k.size() + l.size() <= 5);
        let p = gen::gen_product(&sq(&k), &sq(&l)).unwrap();
        prop_assert!(p.validate().ok());
        prop_assert_eq!(p.square_count(), sq(&k).square_count() * sq(&l).square_count());
    }

    #[test]
    fn horizontalization_inverts_trivial(pick in any::<prop::sample::Index>()) {
        let all = gen::corpus_two_categories();
        let (_, b) = &all[pick.index(all.len())];
        let h = horizontalization(&trivial_double(b).unwrap()).unwrap();
        prop_assert_eq!(h.to_presentation(), b.to_presentation());
    }
}

fn small_bimodules() -> Vec<F2Bimodule> {
    let mut out = Vec::new();
    for a in F2Algebra::small() {
        for d in 1..=2 {
            out.extend(F2Bimodule::enumerate(&a, &a, d));
        }
    }
    out
}

/// The same bimodule with its two basis vectors exchanged.
fn swap_basis(m: &F2Bimodule) -> F2Bimodule {
    let p = BitMatrix::from_columns(2, vec![0b10, 0b01]);
    let conj = |x: &BitMatrix| p.compose(x).compose(&p);
    F2Bimodule::new(
        m.left().clone(),
        m.right().clone(),
        2,
        m.left_actions().iter().map(conj).collect(),
        m.right_actions().iter().map(conj).collect(),
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subcyclicity_ignores_basis_order(pick in any::<prop::sample::Index>(), map in 0u64..16) {
        let all: Vec<F2Bimodule> = small_bimodules().into_iter().filter(|m| m.dim() == 2).collect();
        let m = &all[pick.index(all.len())];
        let phi = BitMatrix::from_columns(2, vec![map & 3, map >> 2]);
        let t = EquivariantMorphism {
            source: m.clone(),
            target: m.clone(),
            f: BitMatrix::identity(m.left().dim()),
            phi: phi.clone(),
            g: BitMatrix::identity(m.left().dim()),
        };
        prop_assume!(t.is_equivariant().unwrap());
        let p = BitMatrix::from_columns(2, vec![0b10, 0b01]);
        let swapped = swap_basis(m);
        let u = EquivariantMorphism {
            source: swapped.clone(),
            target: swapped,
            f: t.f.clone(),
            phi: p.compose(&phi).compose(&p),
            g: t.g.clone(),
        };
        prop_assert!(u.is_equivariant().unwrap());
        prop_assert_eq!(is_2_subcyclic(&t).unwrap(), is_2_subcyclic(&u).unwrap());
    }

    #[test]
    fn regular_bimodule_is_a_tensor_unit(pick in any::<prop::sample::Index>()) {
        let all = small_bimodules();
        let m = &all[pick.index(all.len())];
        let r = F2Bimodule::regular(m.left());
        prop_assert_eq!(tensor_bimodules(&r, m).unwrap().dim(), m.dim());
        prop_assert_eq!(tensor_bimodules(m, &r).unwrap().dim(), m.dim());
    }
}

#[test]
fn identity_morphisms_of_cyclic_bimodules_are_subcyclic() {
    for m in small_bimodules() {
        let cyclic = (1..1u64 << m.dim()).any(|n| {
            let mut span = BTreeSet::from([0u64]);
            for a in 0..m.left().dim() {
                for b in 0..m.left().dim() {
                    span.insert(m.act_right(m.act_left(1 << a, n), 1 << b));
                }
            }
            // close under sums
            loop {
                let next: BTreeSet<u64> = span.iter().flat_map(|&x| span.iter().map(move |&y| x ^ y)).collect();
                if next.len() == span.len() {
                    break;
                }
                span = next;
            }
            span.len() == 1 << m.dim()
        });
        assert_eq!(is_2_subcyclic(&EquivariantMorphism::identity(&m)).unwrap(), cyclic);
    }
}

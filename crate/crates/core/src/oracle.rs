//! Slow reference implementations used only to cross-check the library.
//!
//! Everything here works on raw token tables or explicit vector sets and
//! shares no code with the indexed structures it checks.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::category::CategoryPresentation;
use crate::double::DoublePresentation;
use crate::findim::{EquivariantMorphism, F2Bimodule};
use crate::gen::PosetSpec;
use crate::Id;

fn table(entries: &[(String, String, String)]) -> BTreeMap<(&str, &str), &str> {
    entries
        .iter()
        .map(|(g, f, h)| ((g.as_str(), f.as_str()), h.as_str()))
        .collect()
}

/// Triples `[h, g, f]` with `(h∘g)∘f ≠ h∘(g∘f)`, both sides defined.
pub fn non_associative_triples(p: &CategoryPresentation) -> BTreeSet<Vec<Id>> {
    let comp = table(&p.compositions);
    let mut out = BTreeSet::new();
    for (&(g, f), &gf) in &comp {
        for (&(h, g2), &hg) in &comp {
            if g2 != g {
                continue;
            }
            if let (Some(l), Some(r)) = (comp.get(&(h, gf)), comp.get(&(hg, f))) {
                if l != r {
                    out.insert([h, g, f].iter().map(|t| Id::new(*t).expect("valid token")).collect());
                }
            }
        }
    }
    out
}

/// Squares of the globularily generated piece by plain fixed-point
/// iteration: start from squares with identity sides and horizontal
/// identity squares, then add every vertical or horizontal composite of
/// two members until nothing changes.
pub fn naive_gamma_squares(p: &DoublePresentation) -> BTreeSet<String> {
    let ids: BTreeSet<&str> = p.c0.identities.iter().map(|(_, f)| f.as_str()).collect();
    let mut members: BTreeSet<String> = p
        .squares
        .iter()
        .filter(|s| ids.contains(s.vsrc.as_str()) && ids.contains(s.vtgt.as_str()))
        .map(|s| s.name.clone())
        .chain(p.square_identities.iter().map(|(_, q)| q.clone()))
        .collect();
    loop {
        let before = members.len();
        for (psi, phi, r) in p.vertical_compositions.iter().chain(&p.square_compositions) {
            if members.contains(psi) && members.contains(phi) {
                members.insert(r.clone());
            }
        }
        if members.len() == before {
            return members;
        }
    }
}

/// `|squares(γ(Sq K))| = 2·|Mor K| − |Ob K|`.
pub fn sq_gamma_count(k: &PosetSpec) -> usize {
    2 * k.relation().len() - k.size()
}

/// All vectors of the smallest subspace containing `seeds` and closed
/// under the given linear maps, as an explicit set.
fn closure(seeds: impl IntoIterator<Item = u64>, maps: &[Vec<u64>]) -> BTreeSet<u64> {
    let apply = |m: &Vec<u64>, v: u64| (0..64).filter(|i| v >> i & 1 == 1).fold(0, |a, i| a ^ m[i]);
    let mut set: BTreeSet<u64> = seeds.into_iter().collect();
    set.insert(0);
    loop {
        let mut next = set.clone();
        for &x in &set {
            for &y in &set {
                next.insert(x ^ y);
            }
            for m in maps {
                next.insert(apply(m, x));
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

/// Brute-force 2-subcyclicity: generators tried from the largest vector
/// down, submodules built as explicit vector sets closed under sums and
/// actions. Triples with two different vertical components, or between
/// bimodules whose two sides differ, count as not 2-subcyclic.
pub fn subcyclic_brute(t: &EquivariantMorphism) -> bool {
    let (m, n) = (&t.source, &t.target);
    if t.f != t.g || m.left() != m.right() || n.left() != n.right() {
        return false;
    }
    let mat = |m: &crate::findim::BitMatrix| m.columns().to_vec();
    let via_f: Vec<Vec<u64>> = (0..m.left().dim())
        .flat_map(|i| {
            let a = t.f.column(i);
            [mat(&n.left_matrix(a)), mat(&n.right_matrix(a))]
        })
        .collect();
    let own: Vec<Vec<u64>> = n.left_actions().iter().chain(n.right_actions()).map(mat).collect();
    let image = closure((0..m.dim()).map(|j| t.phi.column(j)), &[]);
    let top = (1u64 << n.dim()) - 1;
    for gen in (0..=top).rev() {
        let l = closure([gen], &via_f);
        if !image.is_subset(&l) {
            continue;
        }
        for gen2 in (0..=top).rev() {
            if l.is_subset(&closure([gen2], &own)) {
                return true;
            }
        }
    }
    false
}

/// Relabels a bimodule basis by `p` (as a column permutation); used to
/// check that predicates do not depend on the chosen basis order.
pub fn permute_basis(m: &F2Bimodule, perm: &[usize]) -> F2Bimodule {
    use crate::findim::BitMatrix;
    let p = BitMatrix::from_columns(m.dim(), perm.iter().map(|&i| 1u64 << i).collect());
    let q = p.inverse().expect("permutation");
    let conj = |x: &BitMatrix| p.compose(x).compose(&q);
    F2Bimodule::new(
        m.left().clone(),
        m.right().clone(),
        m.dim(),
        m.left_actions().iter().map(conj).collect(),
        m.right_actions().iter().map(conj).collect(),
    )
    .expect("same shape")
}

/// Which table a mutant was derived from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum MutatedTable {
    VerticalIdentity,
    VerticalComposition,
    HorizontalIdentity,
    HorizontalComposition,
    SquareVerticalIdentity,
    SquareVerticalComposition,
    SquareHorizontalIdentity,
    SquareHorizontalComposition,
}

fn next_token(sorted: &[String], t: &str) -> Option<String> {
    if sorted.len() < 2 {
        return None;
    }
    let i = sorted.iter().position(|x| x == t)?;
    Some(sorted[(i + 1) % sorted.len()].clone())
}

type Pairs = fn(&mut DoublePresentation) -> &mut Vec<(String, String)>;
type Triples = fn(&mut DoublePresentation) -> &mut Vec<(String, String, String)>;

/// Calls `visit` once per mutant: an entry of an identity or composition
/// table whose value is replaced by the next token of the same sort,
/// cyclically in token order. At most `per_table` evenly spaced entries of
/// each table are mutated; sorts with a single token yield no mutants.
pub fn for_each_mutant(p: &DoublePresentation, per_table: usize, mut visit: impl FnMut(MutatedTable, &DoublePresentation)) {
    let sorted = |it: &mut dyn Iterator<Item = String>| it.collect::<BTreeSet<_>>().into_iter().collect::<Vec<_>>();
    let vmors = sorted(&mut p.c0.morphisms.iter().map(|m| m.0.clone()));
    let hmors = sorted(&mut p.horizontal.iter().map(|m| m.0.clone()));
    let squares = sorted(&mut p.squares.iter().map(|s| s.name.clone()));
    let pairs: [(MutatedTable, Pairs, &[String]); 4] = [
        (MutatedTable::VerticalIdentity, |q| &mut q.c0.identities, &vmors),
        (MutatedTable::HorizontalIdentity, |q| &mut q.horizontal_identities, &hmors),
        (MutatedTable::SquareVerticalIdentity, |q| &mut q.vertical_identities, &squares),
        (MutatedTable::SquareHorizontalIdentity, |q| &mut q.square_identities, &squares),
    ];
    let triples: [(MutatedTable, Triples, &[String]); 4] = [
        (MutatedTable::VerticalComposition, |q| &mut q.c0.compositions, &vmors),
        (MutatedTable::HorizontalComposition, |q| &mut q.horizontal_compositions, &hmors),
        (MutatedTable::SquareVerticalComposition, |q| &mut q.vertical_compositions, &squares),
        (MutatedTable::SquareHorizontalComposition, |q| &mut q.square_compositions, &squares),
    ];
    let picks = |len: usize| {
        let n = len.min(per_table);
        (0..n).map(move |i| i * len / n)
    };
    let mut q = p.clone();
    for (kind, get, sort) in pairs {
        for i in picks(get(&mut q).len()) {
            let old = get(&mut q)[i].1.clone();
            if let Some(v) = next_token(sort, &old) {
                get(&mut q)[i].1 = v;
                visit(kind, &q);
                get(&mut q)[i].1 = old;
            }
        }
    }
    for (kind, get, sort) in triples {
        for i in picks(get(&mut q).len()) {
            let old = get(&mut q)[i].2.clone();
            if let Some(v) = next_token(sort, &old) {
                get(&mut q)[i].2 = v;
                visit(kind, &q);
                get(&mut q)[i].2 = old;
            }
        }
    }
}

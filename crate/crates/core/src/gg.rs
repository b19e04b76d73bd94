//! The globularily generated piece of a double category.
//!
//! Starting from `H₁` (globular squares and horizontal identities of
//! vertical morphisms), alternately close under vertical composition
//! (`Vₙ`) and horizontal composition (`Hₙ₊₁`) until `V_N = V_{N+1}`.
//! Every square records the composition that first produced it, which
//! gives a witness tree whose depth is the square's vertical length.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::category::CategoryPresentation;
use crate::error::{invalid, Error, Result};
use crate::{FinCategory, FinDoubleCategory, Id, ValidationReport, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Derivation {
    Seed,
    Vertical(usize, usize),
    Horizontal(usize, usize),
}

/// A derivation of a square from `H₁` by iterated composition.
///
/// Children are listed outermost first: `Vertical([a, b, c])` stands for
/// `a ∘ (b ∘ c)` and `Horizontal([a, b, c])` for `a ∗ (b ∗ c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessTree {
    Leaf(Id),
    Vertical(Vec<WitnessTree>),
    Horizontal(Vec<WitnessTree>),
}

impl WitnessTree {
    /// Number of alternating layers, counting only horizontal ones above
    /// the first.
    pub fn depth(&self) -> usize {
        match self {
            WitnessTree::Leaf(_) => 1,
            WitnessTree::Vertical(ch) => ch.iter().map(Self::depth).max().unwrap_or(1),
            WitnessTree::Horizontal(ch) => 1 + ch.iter().map(Self::depth).max().unwrap_or(0),
        }
    }

    /// Replays the tree in `c`. `None` if a leaf is undeclared or a
    /// composite is undefined.
    pub fn evaluate(&self, c: &FinDoubleCategory) -> Option<usize> {
        match self {
            WitnessTree::Leaf(q) => c.square_index(q.as_str()),
            WitnessTree::Vertical(ch) => fold(ch, c, |p, q| c.vcomp(p, q)),
            WitnessTree::Horizontal(ch) => fold(ch, c, |p, q| c.hcomp_sq(p, q)),
        }
    }

    /// Leaves from left to right.
    pub fn leaves(&self) -> Vec<&Id> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a Id>) {
        match self {
            WitnessTree::Leaf(q) => out.push(q),
            WitnessTree::Vertical(ch) | WitnessTree::Horizontal(ch) => {
                ch.iter().for_each(|t| t.collect_leaves(out))
            }
        }
    }
}

fn fold(
    children: &[WitnessTree],
    c: &FinDoubleCategory,
    op: impl Fn(usize, usize) -> Option<usize>,
) -> Option<usize> {
    let mut it = children.iter().rev();
    let mut acc = it.next()?.evaluate(c)?;
    for t in it {
        acc = op(t.evaluate(c)?, acc)?;
    }
    Some(acc)
}

/// Prefix notation: a leaf is its token, nodes are `(v …)` and `(h …)`.
impl fmt::Display for WitnessTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, ch) = match self {
            WitnessTree::Leaf(q) => return write!(f, "{q}"),
            WitnessTree::Vertical(ch) => ("v", ch),
            WitnessTree::Horizontal(ch) => ("h", ch),
        };
        write!(f, "({tag}")?;
        for t in ch {
            write!(f, " {t}")?;
        }
        f.write_str(")")
    }
}

/// The computed filtration of a double category.
#[derive(Clone, Debug)]
pub struct GammaAnalysis {
    source: FinDoubleCategory,
    // (Hₙ, Vₙ) for n = 1..=N+1
    levels: Vec<(Vec<bool>, Vec<bool>)>,
    stable_at: usize,
    vlength: Vec<Option<usize>>,
    derivation: Vec<Option<Derivation>>,
    gamma: FinDoubleCategory,
}

/// Squares of `H₁`.
pub(crate) fn seeds(c: &FinDoubleCategory) -> Vec<bool> {
    let mut seed: Vec<bool> = (0..c.square_count()).map(|q| c.is_globular_at(q)).collect();
    for f in 0..c.vertical_morphisms().len() {
        seed[c.hid_vmor(f)] = true;
    }
    seed
}

/// Closes `members` under one operation in rounds. In each round every
/// pair with at least one factor from the previous round is tried; a new
/// square keeps the lexicographically least pair that produced it.
fn close(
    c: &FinDoubleCategory,
    members: &mut [bool],
    derivation: &mut [Option<Derivation>],
    vertical: bool,
) {
    let mut fresh: Vec<bool> = members.to_vec();
    loop {
        let mut found: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for psi in 0..members.len() {
            if !members[psi] {
                continue;
            }
            let partners = if vertical {
                c.squares_into(c.dom(psi))
            } else {
                c.squares_with_vtgt(c.vsrc(psi))
            };
            for &phi in partners {
                if !members[phi] || !(fresh[psi] || fresh[phi]) {
                    continue;
                }
                let r = if vertical {
                    c.vcomp(psi, phi)
                } else {
                    c.hcomp_sq(psi, phi)
                };
                let Some(r) = r else { continue };
                if !members[r] {
                    found
                        .entry(r)
                        .and_modify(|best| *best = (*best).min((psi, phi)))
                        .or_insert((psi, phi));
                }
            }
        }
        if found.is_empty() {
            return;
        }
        fresh.iter_mut().for_each(|b| *b = false);
        for (r, (psi, phi)) in found {
            members[r] = true;
            fresh[r] = true;
            derivation[r] = Some(if vertical {
                Derivation::Vertical(psi, phi)
            } else {
                Derivation::Horizontal(psi, phi)
            });
        }
    }
}

impl GammaAnalysis {
    /// Runs the filtration after checking that `c` is a valid double
    /// category.
    pub fn new(c: &FinDoubleCategory) -> Result<GammaAnalysis> {
        let report = c.validate();
        if !report.ok() {
            return Err(invalid(format!(
                "double category fails {} axiom check(s)",
                report.violations().len()
            )));
        }
        Ok(Self::compute(c))
    }

    pub(crate) fn compute(c: &FinDoubleCategory) -> GammaAnalysis {
        let n = c.square_count();
        let mut derivation = vec![None; n];
        let mut h = seeds(c);
        for q in 0..n {
            if h[q] {
                derivation[q] = Some(Derivation::Seed);
            }
        }
        let mut levels = Vec::new();
        let mut vlength = vec![None; n];
        loop {
            let mut v = h.clone();
            close(c, &mut v, &mut derivation, true);
            let level = levels.len() + 1;
            for q in 0..n {
                if v[q] && vlength[q].is_none() {
                    vlength[q] = Some(level);
                }
            }
            let stable = levels
                .last()
                .is_some_and(|(_, prev): &(Vec<bool>, Vec<bool>)| *prev == v);
            let mut next_h = v.clone();
            levels.push((h, v));
            if stable {
                break;
            }
            close(c, &mut next_h, &mut derivation, false);
            h = next_h;
        }
        let stable_at = levels.len() - 1;
        let keep: BTreeSet<usize> = (0..n).filter(|&q| levels[stable_at].1[q]).collect();
        let gamma = c
            .restrict_squares(&keep)
            .expect("the filtration limit is closed under all square operations");
        GammaAnalysis {
            source: c.clone(),
            levels,
            stable_at,
            vlength,
            derivation,
            gamma,
        }
    }

    /// The analysed double category.
    pub fn source(&self) -> &FinDoubleCategory {
        &self.source
    }

    /// Least `N` with `V_N = V_{N+1}`.
    pub fn stable_at(&self) -> usize {
        self.stable_at
    }

    fn level(&self, n: usize) -> Result<&(Vec<bool>, Vec<bool>)> {
        if n == 0 || n > self.stable_at {
            return Err(Error::LevelOutOfRange {
                level: n,
                stable_at: self.stable_at,
            });
        }
        Ok(&self.levels[n - 1])
    }

    fn to_set(bits: &[bool]) -> BTreeSet<usize> {
        bits.iter()
            .enumerate()
            .filter_map(|(q, &b)| b.then_some(q))
            .collect()
    }

    /// Square indices of `Hₙ` for `1 ≤ n ≤ N`.
    pub fn h_level(&self, n: usize) -> Result<BTreeSet<usize>> {
        Ok(Self::to_set(&self.level(n)?.0))
    }

    /// Square indices of `Vₙ` for `1 ≤ n ≤ N`.
    pub fn v_level(&self, n: usize) -> Result<BTreeSet<usize>> {
        Ok(Self::to_set(&self.level(n)?.1))
    }

    pub fn in_v_level(&self, n: usize, q: usize) -> Result<bool> {
        Ok(self.level(n)?.1[q])
    }

    pub fn in_h_level(&self, n: usize, q: usize) -> Result<bool> {
        Ok(self.level(n)?.0[q])
    }

    /// Squares of the globularily generated piece, as indices of the source.
    pub fn members(&self) -> BTreeSet<usize> {
        Self::to_set(&self.levels[self.stable_at - 1].1)
    }

    pub fn is_member(&self, q: usize) -> bool {
        self.vlength[q].is_some()
    }

    /// Union of all `Hₙ`.
    pub fn h_union(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for (h, _) in &self.levels {
            out.extend(Self::to_set(h));
        }
        out
    }

    pub fn vlength(&self, q: usize) -> Option<usize> {
        self.vlength[q]
    }

    /// The complete sub-double category on the member squares.
    pub fn gamma(&self) -> &FinDoubleCategory {
        &self.gamma
    }

    pub fn is_globularily_generated(&self) -> bool {
        self.gamma.square_count() == self.source.square_count()
    }

    /// Witness tree of a member square, with same-operation children
    /// flattened.
    pub fn witness(&self, q: usize) -> Option<WitnessTree> {
        self.derivation[q]?;
        Some(self.tree(q))
    }

    fn tree(&self, q: usize) -> WitnessTree {
        match self.derivation[q].expect("members have derivations") {
            Derivation::Seed => WitnessTree::Leaf(self.source.square(q).clone()),
            Derivation::Vertical(psi, phi) => {
                let mut ch = Vec::new();
                for t in [self.tree(psi), self.tree(phi)] {
                    match t {
                        WitnessTree::Vertical(inner) => ch.extend(inner),
                        other => ch.push(other),
                    }
                }
                WitnessTree::Vertical(ch)
            }
            Derivation::Horizontal(psi, phi) => {
                let mut ch = Vec::new();
                for t in [self.tree(psi), self.tree(phi)] {
                    match t {
                        WitnessTree::Horizontal(inner) => ch.extend(inner),
                        other => ch.push(other),
                    }
                }
                WitnessTree::Horizontal(ch)
            }
        }
    }

    /// Writes a square of length one as `[Ψ_k, Φ_k, …, Ψ_1, Φ_1, Ψ_0]`
    /// with every `Ψᵢ` globular and every `Φᵢ` a horizontal identity;
    /// folding the list by vertical composition from the right gives `q`.
    pub fn length_one_decomposition(&self, q: usize) -> Result<Vec<usize>> {
        let c = &self.source;
        if self.vlength[q] != Some(1) {
            return Err(Error::NotLengthOne {
                square: c.square(q).to_string(),
                length: self.vlength[q],
            });
        }
        let tree = self.tree(q);
        let leaves: Vec<usize> = tree
            .leaves()
            .into_iter()
            .map(|t| c.square_index(t.as_str()).expect("leaves are declared"))
            .collect();
        // bottom-most factor first
        let mut parts: Vec<usize> = Vec::new();
        for &theta in leaves.iter().rev() {
            if c.is_globular_at(theta) {
                match parts.last_mut() {
                    None => parts.push(theta),
                    Some(head) => {
                        *head = c
                            .vcomp(theta, *head)
                            .expect("consecutive witness leaves compose");
                    }
                }
            } else {
                let f = c.vsrc(theta);
                debug_assert_eq!(c.hid_vmor(f), theta);
                let (x, y) = (c.c0().src(f), c.c0().tgt(f));
                if parts.is_empty() {
                    parts.push(c.vid(c.hid_obj(x)));
                }
                parts.push(theta);
                parts.push(c.vid(c.hid_obj(y)));
            }
        }
        parts.reverse();
        Ok(parts)
    }
}

/// Filtration of a valid double category.
pub fn vertical_filtration(c: &FinDoubleCategory) -> Result<GammaAnalysis> {
    GammaAnalysis::new(c)
}

/// The globularily generated piece.
pub fn gamma(c: &FinDoubleCategory) -> Result<FinDoubleCategory> {
    Ok(GammaAnalysis::new(c)?.gamma)
}

pub fn is_globularily_generated(c: &FinDoubleCategory) -> Result<bool> {
    Ok(GammaAnalysis::new(c)?.is_globularily_generated())
}

fn lookup_square(c: &FinDoubleCategory, q: &str) -> Result<usize> {
    c.square_index(q).ok_or_else(|| Error::UnknownIdentifier {
        sort: "square",
        token: q.to_string(),
    })
}

/// Vertical length of `q`, or `None` outside the globularily generated
/// piece.
pub fn vertical_length(c: &FinDoubleCategory, q: &str) -> Result<Option<usize>> {
    let q = lookup_square(c, q)?;
    Ok(GammaAnalysis::new(c)?.vlength(q))
}

/// Token form of [`GammaAnalysis::length_one_decomposition`].
pub fn length_one_decomposition(c: &FinDoubleCategory, q: &str) -> Result<Vec<Id>> {
    let idx = lookup_square(c, q)?;
    let parts = GammaAnalysis::new(c)?.length_one_decomposition(idx)?;
    Ok(parts.into_iter().map(|p| c.square(p).clone()).collect())
}

/// Vertical morphisms as objects, squares as morphisms, horizontal
/// composition as composition.
pub fn transversal_category(c: &FinDoubleCategory) -> Result<FinCategory> {
    let report = c.validate();
    if !report.ok() {
        return Err(invalid("double category fails validation"));
    }
    Ok(transversal_unchecked(c))
}

pub(crate) fn transversal_unchecked(c: &FinDoubleCategory) -> FinCategory {
    let vm = |f: usize| c.vertical_morphisms()[f].to_string();
    let sq = |q: usize| c.square(q).to_string();
    let p = CategoryPresentation {
        objects: (0..c.vertical_morphisms().len()).map(vm).collect(),
        morphisms: (0..c.square_count())
            .map(|q| (sq(q), vm(c.vsrc(q)), vm(c.vtgt(q))))
            .collect(),
        identities: (0..c.vertical_morphisms().len())
            .map(|f| (vm(f), sq(c.hid_vmor(f))))
            .collect(),
        compositions: c
            .square_compositions()
            .map(|((p, q), r)| (sq(p), sq(q), sq(r)))
            .collect(),
    };
    FinCategory::from_presentation(&p).expect("a valid double category has a transversal category")
}

/// Every non-globular square of the globularily generated piece is a
/// horizontal endomorphism.
pub fn check_prop_4_4(c: &FinDoubleCategory) -> Result<ValidationReport> {
    let g = gamma(c)?;
    let mut out = Vec::new();
    for q in 0..g.square_count() {
        if !g.is_globular_at(q) && !g.is_horizontal_endomorphism_at(q) {
            out.push(Violation::new(
                "nonglobular-endomorphism",
                [g.square(q).clone()],
                "vsrc = vtgt",
                format!(
                    "{} != {}",
                    g.vertical_morphisms()[g.vsrc(q)],
                    g.vertical_morphisms()[g.vtgt(q)]
                ),
            ));
        }
    }
    Ok(ValidationReport::from_violations(out))
}

/// Inside the globularily generated piece a horizontal composite is
/// globular exactly when both factors are.
pub fn check_cor_4_5(c: &FinDoubleCategory) -> Result<ValidationReport> {
    let g = gamma(c)?;
    let mut out = Vec::new();
    for ((psi, phi), r) in g.square_compositions() {
        let both = g.is_globular_at(psi) && g.is_globular_at(phi);
        if both != g.is_globular_at(r) {
            out.push(Violation::new(
                "globular-composite",
                [g.square(psi).clone(), g.square(phi).clone()],
                format!("globular={both}"),
                format!("globular={}", g.is_globular_at(r)),
            ));
        }
    }
    Ok(ValidationReport::from_violations(out))
}

/// Every square of vertical length 1 decomposes into alternating globular
/// squares and horizontal identities whose vertical composite is the
/// square itself.
pub fn check_lemma_4_6(c: &FinDoubleCategory) -> Result<ValidationReport> {
    let a = GammaAnalysis::new(c)?;
    let mut out = Vec::new();
    for q in (0..c.square_count()).filter(|&q| a.vlength(q) == Some(1)) {
        let parts = a.length_one_decomposition(q)?;
        for (i, &p) in parts.iter().enumerate() {
            let shape_ok = if i % 2 == 0 {
                c.is_globular_at(p)
            } else {
                c.hid_vmor(c.vsrc(p)) == p
            };
            if !shape_ok {
                out.push(Violation::new(
                    "decomposition-shape",
                    [c.square(q).clone(), c.square(p).clone()],
                    if i % 2 == 0 { "globular" } else { "horizontal identity" },
                    "neither",
                ));
            }
        }
        let (&last, rest) = parts.split_last().expect("decompositions are nonempty");
        let folded = rest
            .iter()
            .rev()
            .try_fold(last, |acc, &p| c.vcomp(p, acc));
        if folded != Some(q) {
            out.push(Violation::new(
                "decomposition-replay",
                [c.square(q).clone()],
                c.square(q).to_string(),
                folded.map_or("undefined".into(), |r| c.square(r).to_string()),
            ));
        }
    }
    Ok(ValidationReport::from_violations(out))
}

/// Counts used by reports: non-globular members of the piece.
pub fn nonglobular_members(a: &GammaAnalysis) -> Vec<Id> {
    let g = a.gamma();
    (0..g.square_count())
        .filter(|&q| !g.is_globular_at(q))
        .map(|q| g.square(q).clone())
        .collect()
}

/// Prefix-notation witnesses of all members, keyed by square token.
pub fn witness_table(a: &GammaAnalysis) -> BTreeMap<String, String> {
    a.members()
        .into_iter()
        .map(|q| {
            (
                a.source().square(q).to_string(),
                a.witness(q).expect("members have witnesses").to_string(),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{
        gen_commuting_squares, gen_poset_category, gen_quintet, gen_trivial, idempotent_monoid,
        truncated_addition, PosetSpec,
    };

    fn sq(k: &PosetSpec) -> FinDoubleCategory {
        gen_commuting_squares(&gen_poset_category(k).unwrap()).unwrap()
    }

    fn tokens(c: &FinDoubleCategory, set: &BTreeSet<usize>) -> Vec<String> {
        set.iter().map(|&q| c.square(q).to_string()).collect()
    }

    #[test]
    fn sq2_filtration() {
        let c = sq(&PosetSpec::chain(2));
        let a = vertical_filtration(&c).unwrap();
        assert_eq!(a.stable_at(), 1);
        assert_eq!(
            tokens(&c, &a.v_level(1).unwrap()),
            [
                "0<1|id_0|id_1|0<1",
                "id_0|0<1|0<1|id_1",
                "id_0|id_0|id_0|id_0",
                "id_1|id_1|id_1|id_1"
            ]
        );
        assert_eq!(a.gamma().square_count(), 4);
        assert!(!a.is_globularily_generated());
        assert_eq!(vertical_length(&c, "id_0|0<1|0<1|id_1").unwrap(), Some(1));
        assert_eq!(vertical_length(&c, "0<1|0<1|id_1|id_1").unwrap(), None);
        assert!(matches!(
            a.v_level(2),
            Err(Error::LevelOutOfRange { level: 2, stable_at: 1 })
        ));
    }

    #[test]
    fn trivial_is_generated() {
        let c = gen_trivial(&idempotent_monoid()).unwrap();
        let a = vertical_filtration(&c).unwrap();
        assert_eq!(a.stable_at(), 1);
        assert!(a.is_globularily_generated());
        assert_eq!(a.gamma(), &c);
    }

    #[test]
    fn gamma_is_idempotent() {
        for k in PosetSpec::all_up_to(3) {
            let c = sq(&k);
            let g = gamma(&c).unwrap();
            assert_eq!(gamma(&g).unwrap(), g);
            assert!(is_globularily_generated(&g).unwrap());
        }
    }

    #[test]
    fn decomposition_shapes() {
        let c = sq(&PosetSpec::chain(2));
        let g = "0<1|id_0|id_1|0<1";
        let d = length_one_decomposition(&c, g).unwrap();
        assert_eq!(d, [Id::new(g).unwrap()]);
        let d = length_one_decomposition(&c, "id_0|0<1|0<1|id_1").unwrap();
        let d: Vec<&str> = d.iter().map(Id::as_str).collect();
        assert_eq!(
            d,
            ["id_1|id_1|id_1|id_1", "id_0|0<1|0<1|id_1", "id_0|id_0|id_0|id_0"]
        );
        assert!(matches!(
            length_one_decomposition(&c, "0<1|0<1|id_1|id_1"),
            Err(Error::NotLengthOne { length: None, .. })
        ));
    }

    #[test]
    fn decompositions_replay() {
        for k in PosetSpec::all_up_to(3) {
            let c = sq(&k);
            let a = vertical_filtration(&c).unwrap();
            for q in a.v_level(1).unwrap() {
                let parts = a.length_one_decomposition(q).unwrap();
                assert_eq!(parts.len() % 2, 1);
                let mut acc = *parts.last().unwrap();
                for &p in parts.iter().rev().skip(1) {
                    acc = c.vcomp(p, acc).unwrap();
                }
                assert_eq!(acc, q);
                for (i, &p) in parts.iter().enumerate() {
                    if i % 2 == 0 {
                        assert!(c.is_globular_at(p));
                    } else {
                        assert_eq!(c.hid_vmor(c.vsrc(p)), p);
                    }
                }
            }
        }
    }

    #[test]
    fn witnesses_replay_with_depth_equal_to_length() {
        let corpus = [
            sq(&PosetSpec::chain(3)),
            sq(&PosetSpec::diamond()),
            gen_quintet(&truncated_addition(2)).unwrap(),
        ];
        for c in &corpus {
            let a = vertical_filtration(c).unwrap();
            for q in a.members() {
                let w = a.witness(q).unwrap();
                assert_eq!(w.evaluate(c), Some(q), "{w}");
                assert_eq!(Some(w.depth()), a.vlength(q));
            }
        }
    }

    #[test]
    fn witness_prefix_notation() {
        let leaf = |s: &str| WitnessTree::Leaf(Id::new(s).unwrap());
        let t = WitnessTree::Horizontal(vec![
            leaf("a"),
            WitnessTree::Vertical(vec![leaf("b"), leaf("c")]),
        ]);
        assert_eq!(t.to_string(), "(h a (v b c))");
        assert_eq!(t.depth(), 2);
    }

    #[test]
    fn transversal_of_sq2() {
        let c = sq(&PosetSpec::chain(2));
        let t = transversal_category(&c).unwrap();
        assert_eq!(t.object_count(), 3);
        assert_eq!(t.morphism_count(), 6);
        assert!(t.validate().ok());
    }

    #[test]
    fn property_suites_on_sq2() {
        let c = sq(&PosetSpec::chain(2));
        assert!(check_prop_4_4(&c).unwrap().ok());
        assert!(check_cor_4_5(&c).unwrap().ok());
        let a = vertical_filtration(&c).unwrap();
        let ng = nonglobular_members(&a);
        assert_eq!(ng.len(), 1);
        assert_eq!(ng[0].as_str(), "id_0|0<1|0<1|id_1");
    }

    #[test]
    fn agrees_with_naive_closure() {
        for k in PosetSpec::all_up_to(3) {
            let c = sq(&k);
            let a = vertical_filtration(&c).unwrap();
            let naive = crate::oracle::naive_gamma_squares(&c.to_presentation());
            assert_eq!(tokens(&c, &a.members()), naive.into_iter().collect::<Vec<_>>());
        }
    }

    #[test]
    fn length_one_decompositions_replay_on_small_instances() {
        for c in [
            sq(&PosetSpec::chain(3)),
            sq(&PosetSpec::diamond()),
            gen_quintet(&truncated_addition(3)).unwrap(),
            gen_trivial(&idempotent_monoid()).unwrap(),
        ] {
            assert!(check_lemma_4_6(&c).unwrap().ok());
        }
    }

    #[test]
    fn sq2_hid_decomposes_through_itself() {
        let c = sq(&PosetSpec::chain(2));
        let parts = length_one_decomposition(&c, "id_0|0<1|0<1|id_1").unwrap();
        let names: Vec<&str> = parts.iter().map(Id::as_str).collect();
        assert_eq!(names.len() % 2, 1);
        assert!(names.contains(&"id_0|0<1|0<1|id_1"));
    }
}

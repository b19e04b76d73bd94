//! Finite categories given by explicit tables, and functors between them.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{invalid, malformed, Result};
use crate::ident::Tokens;
use crate::{Id, ValidationReport, Violation};

/// Token-level tables of a finite category, as read from or written to a
/// document. Nothing here is checked until [`FinCategory::from_presentation`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CategoryPresentation {
    pub objects: Vec<String>,
    /// `(name, source, target)`
    pub morphisms: Vec<(String, String, String)>,
    /// `(object, identity morphism)`
    pub identities: Vec<(String, String)>,
    /// `(g, f, g∘f)`, one entry per composable pair
    pub compositions: Vec<(String, String, String)>,
}

/// Names used in error messages and violation reports, so the same table
/// machinery can describe C₀, C₁, a transversal category or a hom-category.
#[derive(Clone, Copy, Debug)]
pub(crate) struct SortNames {
    pub object: &'static str,
    pub morphism: &'static str,
}

pub(crate) const PLAIN_SORTS: SortNames = SortNames {
    object: "object",
    morphism: "morphism",
};

#[derive(Clone, Copy, Debug)]
pub(crate) struct CategoryAxioms {
    pub id_typing: &'static str,
    pub comp_typing: &'static str,
    pub unit: &'static str,
    pub assoc: &'static str,
}

pub(crate) const PLAIN_AXIOMS: CategoryAxioms = CategoryAxioms {
    id_typing: "id-typing",
    comp_typing: "comp-typing",
    unit: "unit-law",
    assoc: "associativity",
};

/// A finite category. Objects and morphisms are addressed by dense indices
/// in lexicographic token order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCategory {
    pub(crate) objects: Tokens,
    pub(crate) morphisms: Tokens,
    src: Vec<usize>,
    tgt: Vec<usize>,
    ident: Vec<usize>,
    comp: PairTable,
    outgoing: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
}

impl FinCategory {
    pub fn from_presentation(p: &CategoryPresentation) -> Result<FinCategory> {
        Self::build(p, PLAIN_SORTS)
    }

    pub(crate) fn build(p: &CategoryPresentation, sorts: SortNames) -> Result<FinCategory> {
        let objects = Tokens::from_strings(sorts.object, &p.objects)?;
        let morphisms =
            Tokens::from_strings(sorts.morphism, p.morphisms.iter().map(|m| m.0.as_str()))?;
        let n = morphisms.len();
        let mut src = vec![0; n];
        let mut tgt = vec![0; n];
        for (name, s, t) in &p.morphisms {
            let m = morphisms.lookup(sorts.morphism, name)?;
            src[m] = objects.lookup(sorts.object, s)?;
            tgt[m] = objects.lookup(sorts.object, t)?;
        }
        let ident = total_map(
            &objects,
            &morphisms,
            &p.identities,
            sorts.object,
            sorts.morphism,
            "identity",
        )?;
        let comp = composition_table(
            &morphisms,
            sorts.morphism,
            &p.compositions,
            |g, f| src[g] == tgt[f],
        )?;
        let mut outgoing = vec![Vec::new(); objects.len()];
        let mut incoming = vec![Vec::new(); objects.len()];
        for m in 0..n {
            outgoing[src[m]].push(m);
            incoming[tgt[m]].push(m);
        }
        Ok(FinCategory {
            objects,
            morphisms,
            src,
            tgt,
            ident,
            comp,
            outgoing,
            incoming,
        })
    }

    /// Canonical presentation: every list sorted by token.
    pub fn to_presentation(&self) -> CategoryPresentation {
        let mut p = CategoryPresentation {
            objects: self.objects().iter().map(Id::to_string).collect(),
            morphisms: (0..self.morphism_count())
                .map(|m| {
                    (
                        self.morphism(m).to_string(),
                        self.object(self.src[m]).to_string(),
                        self.object(self.tgt[m]).to_string(),
                    )
                })
                .collect(),
            identities: (0..self.object_count())
                .map(|x| {
                    (
                        self.object(x).to_string(),
                        self.morphism(self.ident[x]).to_string(),
                    )
                })
                .collect(),
            compositions: self
                .comp
                .iter()
                .map(|((g, f), h)| {
                    (
                        self.morphism(g).to_string(),
                        self.morphism(f).to_string(),
                        self.morphism(h).to_string(),
                    )
                })
                .collect(),
        };
        p.compositions.sort();
        p
    }

    /// The discrete category on `objects`; the identity of `x` is `id_x`.
    pub fn discrete<I, S>(objects: I) -> Result<FinCategory>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut p = CategoryPresentation::default();
        for x in objects {
            let x = x.as_ref();
            let id = format!("id_{x}");
            p.objects.push(x.to_string());
            p.morphisms.push((id.clone(), x.to_string(), x.to_string()));
            p.identities.push((x.to_string(), id.clone()));
            p.compositions.push((id.clone(), id.clone(), id));
        }
        FinCategory::from_presentation(&p)
    }

    pub fn objects(&self) -> &[Id] {
        self.objects.as_slice()
    }

    pub fn morphisms(&self) -> &[Id] {
        self.morphisms.as_slice()
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object(&self, x: usize) -> &Id {
        self.objects.get(x)
    }

    pub fn morphism(&self, m: usize) -> &Id {
        self.morphisms.get(m)
    }

    pub fn object_index(&self, token: &str) -> Option<usize> {
        self.objects.index(token)
    }

    pub fn morphism_index(&self, token: &str) -> Option<usize> {
        self.morphisms.index(token)
    }

    pub fn src(&self, m: usize) -> usize {
        self.src[m]
    }

    pub fn tgt(&self, m: usize) -> usize {
        self.tgt[m]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.ident[x]
    }

    /// `g ∘ f`, defined exactly on composable pairs.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.comp.get(g, f)
    }

    /// All composition entries as `((g, f), g∘f)`.
    pub fn compositions(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.comp.iter()
    }

    /// Morphisms with source `x`.
    pub fn outgoing(&self, x: usize) -> &[usize] {
        &self.outgoing[x]
    }

    /// Morphisms with target `x`.
    pub fn incoming(&self, x: usize) -> &[usize] {
        &self.incoming[x]
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.ident[self.src[m]] == m
    }

    pub fn validate(&self) -> ValidationReport {
        ValidationReport::from_violations(self.violations(PLAIN_AXIOMS))
    }

    pub(crate) fn violations(&self, names: CategoryAxioms) -> Vec<Violation> {
        let mut out = Vec::new();
        let m = |i: usize| self.morphism(i).clone();
        let o = |i: usize| self.object(i).to_string();
        for x in 0..self.object_count() {
            let e = self.ident[x];
            if self.src[e] != x || self.tgt[e] != x {
                out.push(Violation::new(
                    names.id_typing,
                    [self.object(x).clone(), m(e)],
                    format!("{}->{}", o(x), o(x)),
                    format!("{}->{}", o(self.src[e]), o(self.tgt[e])),
                ));
            }
        }
        for ((g, f), h) in self.comp.iter() {
            if self.src[h] != self.src[f] || self.tgt[h] != self.tgt[g] {
                out.push(Violation::new(
                    names.comp_typing,
                    [m(g), m(f)],
                    format!("{}->{}", o(self.src[f]), o(self.tgt[g])),
                    format!("{}->{}", o(self.src[h]), o(self.tgt[h])),
                ));
            }
        }
        for f in 0..self.morphism_count() {
            let left = self.ident[self.tgt[f]];
            if let Some(h) = self.compose(left, f) {
                if h != f {
                    out.push(Violation::new(
                        names.unit,
                        [m(left), m(f)],
                        self.morphism(f).to_string(),
                        self.morphism(h).to_string(),
                    ));
                }
            }
            let right = self.ident[self.src[f]];
            if let Some(h) = self.compose(f, right) {
                if h != f {
                    out.push(Violation::new(
                        names.unit,
                        [m(f), m(right)],
                        self.morphism(f).to_string(),
                        self.morphism(h).to_string(),
                    ));
                }
            }
        }
        for f in 0..self.morphism_count() {
            for &g in self.outgoing(self.tgt[f]) {
                let gf = self.comp[(g, f)];
                for &h in self.outgoing(self.tgt[g]) {
                    let hg = self.comp[(h, g)];
                    let (Some(l), Some(r)) = (self.compose(h, gf), self.compose(hg, f)) else {
                        continue;
                    };
                    if l != r {
                        out.push(Violation::new(
                            names.assoc,
                            [m(h), m(g), m(f)],
                            self.morphism(r).to_string(),
                            self.morphism(l).to_string(),
                        ));
                    }
                }
            }
        }
        out
    }

    /// The wide subcategory on the given morphisms. Fails with
    /// `MalformedPresentation` if the set misses an identity or is not closed
    /// under composition.
    pub fn subcategory(&self, keep: &BTreeSet<usize>) -> Result<FinCategory> {
        let p = self.to_presentation();
        let kept = |t: &str| {
            self.morphism_index(t)
                .is_some_and(|i| keep.contains(&i))
        };
        let sub = CategoryPresentation {
            objects: p.objects,
            morphisms: p.morphisms.into_iter().filter(|m| kept(&m.0)).collect(),
            identities: p.identities,
            compositions: p
                .compositions
                .into_iter()
                .filter(|(g, f, _)| kept(g) && kept(f))
                .collect(),
        };
        FinCategory::from_presentation(&sub)
    }
}

/// Reads a map that must assign one declared `to` token to every `from`
/// token.
pub(crate) fn total_map(
    from: &Tokens,
    to: &Tokens,
    entries: &[(String, String)],
    from_sort: &str,
    to_sort: &str,
    what: &str,
) -> Result<Vec<usize>> {
    let mut map = vec![usize::MAX; from.len()];
    for (a, b) in entries {
        let i = from.lookup(from_sort, a)?;
        if map[i] != usize::MAX {
            return Err(malformed(format!("{what} for {from_sort} {a:?} given twice")));
        }
        map[i] = to.lookup(to_sort, b)?;
    }
    if let Some(i) = map.iter().position(|&v| v == usize::MAX) {
        return Err(malformed(format!(
            "{what} missing for {from_sort} {}",
            from.get(i)
        )));
    }
    Ok(map)
}

/// Like `total_map` over plain sorted token slices.
pub(crate) fn total_map_by_index(
    from: &[Id],
    to: &[Id],
    entries: &[(String, String)],
    sort: &str,
) -> Result<Vec<usize>> {
    let find = |xs: &[Id], t: &str| xs.binary_search_by(|x| x.as_str().cmp(t)).ok();
    let mut map = vec![usize::MAX; from.len()];
    for (a, b) in entries {
        let i = find(from, a).ok_or_else(|| malformed(format!("undeclared {sort} `{a}` in map")))?;
        if map[i] != usize::MAX {
            return Err(malformed(format!("image of {sort} `{a}` given twice")));
        }
        map[i] = find(to, b).ok_or_else(|| malformed(format!("image `{b}` of {sort} `{a}` is undeclared")))?;
    }
    if let Some(i) = map.iter().position(|&v| v == usize::MAX) {
        return Err(malformed(format!("image of {sort} `{}` missing", from[i])));
    }
    Ok(map)
}

/// Reads a binary composition table that must be defined exactly on the
/// pairs accepted by `composable`.
pub(crate) fn composition_table(
    cells: &Tokens,
    sort: &str,
    entries: &[(String, String, String)],
    composable: impl Fn(usize, usize) -> bool,
) -> Result<PairTable> {
    let mut table = BTreeMap::new();
    for (a, b, c) in entries {
        let x = cells.lookup(sort, a)?;
        let y = cells.lookup(sort, b)?;
        let z = cells.lookup(sort, c)?;
        if !composable(x, y) {
            return Err(malformed(format!(
                "composition entry for non-composable {sort} pair ({a}, {b})"
            )));
        }
        if table.insert((x, y), z).is_some() {
            return Err(malformed(format!(
                "composition of {sort} pair ({a}, {b}) given twice"
            )));
        }
    }
    for x in 0..cells.len() {
        for y in 0..cells.len() {
            if composable(x, y) && !table.contains_key(&(x, y)) {
                return Err(malformed(format!(
                    "composition of {sort} pair ({}, {}) missing",
                    cells.get(x),
                    cells.get(y)
                )));
            }
        }
    }
    Ok(PairTable::from_map(cells.len(), table))
}

/// A partial binary operation on indices, stored row by row with each row
/// sorted by the second argument. Iterates in `(a, b)` order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct PairTable {
    rows: Vec<Vec<(usize, usize)>>,
}

impl PairTable {
    pub(crate) fn from_map(n: usize, map: BTreeMap<(usize, usize), usize>) -> PairTable {
        let mut rows = vec![Vec::new(); n];
        for ((a, b), c) in map {
            rows[a].push((b, c));
        }
        PairTable { rows }
    }

    pub(crate) fn get(&self, a: usize, b: usize) -> Option<usize> {
        let row = self.rows.get(a)?;
        row.binary_search_by_key(&b, |e| e.0).ok().map(|i| row[i].1)
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().map(move |&(b, c)| ((a, b), c)))
    }
}

impl core::ops::Index<(usize, usize)> for PairTable {
    type Output = usize;

    fn index(&self, (a, b): (usize, usize)) -> &usize {
        let row = &self.rows[a];
        let i = row.binary_search_by_key(&b, |e| e.0).expect("pair in table");
        &row[i].1
    }
}

/// A functor between finite categories.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatFunctor {
    source: FinCategory,
    target: FinCategory,
    obj: Vec<usize>,
    mor: Vec<usize>,
}

impl CatFunctor {
    pub fn from_maps(
        source: FinCategory,
        target: FinCategory,
        objects: &[(String, String)],
        morphisms: &[(String, String)],
    ) -> Result<CatFunctor> {
        let obj = total_map(
            &source.objects,
            &target.objects,
            objects,
            "object",
            "object",
            "object image",
        )?;
        let mor = total_map(
            &source.morphisms,
            &target.morphisms,
            morphisms,
            "morphism",
            "morphism",
            "morphism image",
        )?;
        Ok(CatFunctor {
            source,
            target,
            obj,
            mor,
        })
    }

    pub(crate) fn from_indices(
        source: FinCategory,
        target: FinCategory,
        obj: Vec<usize>,
        mor: Vec<usize>,
    ) -> CatFunctor {
        debug_assert_eq!(obj.len(), source.object_count());
        debug_assert_eq!(mor.len(), source.morphism_count());
        CatFunctor {
            source,
            target,
            obj,
            mor,
        }
    }

    pub fn identity(c: &FinCategory) -> CatFunctor {
        CatFunctor {
            source: c.clone(),
            target: c.clone(),
            obj: (0..c.object_count()).collect(),
            mor: (0..c.morphism_count()).collect(),
        }
    }

    /// The inclusion of `sub` into `sup`, matching tokens.
    pub fn inclusion(sub: &FinCategory, sup: &FinCategory) -> Result<CatFunctor> {
        let lookup = |sort: &str, t: &Id, found: Option<usize>| {
            found.ok_or_else(|| invalid(format!("{sort} {t} of the subcategory is not in the ambient category")))
        };
        let obj = sub
            .objects()
            .iter()
            .map(|t| lookup("object", t, sup.object_index(t.as_str())))
            .collect::<Result<Vec<_>>>()?;
        let mor = sub
            .morphisms()
            .iter()
            .map(|t| lookup("morphism", t, sup.morphism_index(t.as_str())))
            .collect::<Result<Vec<_>>>()?;
        Ok(CatFunctor::from_indices(sub.clone(), sup.clone(), obj, mor))
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &CatFunctor) -> Result<CatFunctor> {
        if first.target != self.source {
            return Err(invalid("functors are not composable"));
        }
        Ok(CatFunctor {
            source: first.source.clone(),
            target: self.target.clone(),
            obj: first.obj.iter().map(|&x| self.obj[x]).collect(),
            mor: first.mor.iter().map(|&m| self.mor[m]).collect(),
        })
    }

    pub fn source(&self) -> &FinCategory {
        &self.source
    }

    pub fn target(&self) -> &FinCategory {
        &self.target
    }

    pub fn map_object(&self, x: usize) -> usize {
        self.obj[x]
    }

    pub fn map_morphism(&self, m: usize) -> usize {
        self.mor[m]
    }

    /// Token-level morphism map.
    pub fn morphism_image(&self, token: &str) -> Option<&Id> {
        self.source
            .morphism_index(token)
            .map(|m| self.target.morphism(self.mor[m]))
    }

    pub fn validate(&self) -> ValidationReport {
        let (s, t) = (&self.source, &self.target);
        let mut out = Vec::new();
        for m in 0..s.morphism_count() {
            let fm = self.mor[m];
            if t.src(fm) != self.obj[s.src(m)] || t.tgt(fm) != self.obj[s.tgt(m)] {
                out.push(Violation::new(
                    "functor-typing",
                    [s.morphism(m).clone()],
                    format!(
                        "{}->{}",
                        t.object(self.obj[s.src(m)]),
                        t.object(self.obj[s.tgt(m)])
                    ),
                    format!("{}->{}", t.object(t.src(fm)), t.object(t.tgt(fm))),
                ));
            }
        }
        for x in 0..s.object_count() {
            let want = t.identity(self.obj[x]);
            let got = self.mor[s.identity(x)];
            if want != got {
                out.push(Violation::new(
                    "functor-identity",
                    [s.object(x).clone()],
                    t.morphism(want).to_string(),
                    t.morphism(got).to_string(),
                ));
            }
        }
        for ((g, f), h) in s.compositions() {
            let want = t.compose(self.mor[g], self.mor[f]);
            let got = self.mor[h];
            if want != Some(got) {
                out.push(Violation::new(
                    "functor-composition",
                    [s.morphism(g).clone(), s.morphism(f).clone()],
                    want.map_or_else(|| "undefined".to_string(), |w| t.morphism(w).to_string()),
                    t.morphism(got).to_string(),
                ));
            }
        }
        ValidationReport::from_violations(out)
    }
}

pub fn validate_category(k: &FinCategory) -> ValidationReport {
    k.validate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn s(x: &str) -> String {
        x.to_string()
    }

    /// The walking arrow x → y with arrow `a`.
    pub(crate) fn walking_arrow() -> CategoryPresentation {
        CategoryPresentation {
            objects: vec![s("x"), s("y")],
            morphisms: vec![
                (s("id_x"), s("x"), s("x")),
                (s("id_y"), s("y"), s("y")),
                (s("a"), s("x"), s("y")),
            ],
            identities: vec![(s("x"), s("id_x")), (s("y"), s("id_y"))],
            compositions: vec![
                (s("id_x"), s("id_x"), s("id_x")),
                (s("id_y"), s("id_y"), s("id_y")),
                (s("a"), s("id_x"), s("a")),
                (s("id_y"), s("a"), s("a")),
            ],
        }
    }

    /// One-object category whose morphisms are the given monoid table.
    fn monoid(elems: &[&str], unit: &str, table: &[(&str, &str, &str)]) -> CategoryPresentation {
        CategoryPresentation {
            objects: vec![s("*")],
            morphisms: elems.iter().map(|e| (s(e), s("*"), s("*"))).collect(),
            identities: vec![(s("*"), s(unit))],
            compositions: table.iter().map(|(a, b, c)| (s(a), s(b), s(c))).collect(),
        }
    }

    #[test]
    fn walking_arrow_is_valid() {
        let c = FinCategory::from_presentation(&walking_arrow()).unwrap();
        assert!(c.validate().ok());
        assert_eq!(c.morphism_count(), 3);
    }

    #[test]
    fn redirected_unit_entry_is_reported() {
        let mut p = walking_arrow();
        for e in &mut p.compositions {
            if e.0 == "a" && e.1 == "id_x" {
                e.2 = s("id_x");
            }
        }
        let r = FinCategory::from_presentation(&p).unwrap().validate();
        assert!(!r.ok());
        assert!(r
            .violations()
            .iter()
            .any(|v| v.axiom == "unit-law" && v.ids == [Id::new("a").unwrap(), Id::new("id_x").unwrap()]));
    }

    #[test]
    fn undeclared_references_are_malformed() {
        let mut p = walking_arrow();
        p.compositions[0].2 = s("nope");
        assert!(matches!(
            FinCategory::from_presentation(&p),
            Err(crate::Error::MalformedPresentation(_))
        ));
        let mut p = walking_arrow();
        p.compositions.pop();
        assert!(matches!(
            FinCategory::from_presentation(&p),
            Err(crate::Error::MalformedPresentation(_))
        ));
        let mut p = walking_arrow();
        p.compositions.push((s("a"), s("a"), s("a")));
        assert!(matches!(
            FinCategory::from_presentation(&p),
            Err(crate::Error::MalformedPresentation(_))
        ));
    }

    #[test]
    fn non_associative_monoid_reports_exactly_the_bad_triples() {
        // Unit 1 with a, b; every product of non-units is a, except b·b = b.
        let p = monoid(
            &["1", "a", "b"],
            "1",
            &[
                ("1", "1", "1"),
                ("1", "a", "a"),
                ("1", "b", "b"),
                ("a", "1", "a"),
                ("b", "1", "b"),
                ("a", "a", "a"),
                ("a", "b", "a"),
                ("b", "a", "a"),
                ("b", "b", "b"),
            ],
        );
        let c = FinCategory::from_presentation(&p).unwrap();
        let report = c.validate();
        let found: BTreeSet<Vec<Id>> = report
            .violations()
            .iter()
            .filter(|v| v.axiom == "associativity")
            .map(|v| v.ids.clone())
            .collect();
        let expected = crate::oracle::non_associative_triples(&p);
        assert_eq!(found, expected);
        // This table is associative (it is the max-monoid on 1 < b < a).
        assert!(found.is_empty());

        // a·a = b, a·b = a, b·a = b, b·b = a fails on (a, a, b) among others.
        let p2 = monoid(
            &["1", "a", "b"],
            "1",
            &[
                ("1", "1", "1"),
                ("1", "a", "a"),
                ("1", "b", "b"),
                ("a", "1", "a"),
                ("b", "1", "b"),
                ("a", "a", "b"),
                ("a", "b", "a"),
                ("b", "a", "b"),
                ("b", "b", "a"),
            ],
        );
        let c2 = FinCategory::from_presentation(&p2).unwrap();
        let found2: BTreeSet<Vec<Id>> = c2
            .validate()
            .violations()
            .iter()
            .filter(|v| v.axiom == "associativity")
            .map(|v| v.ids.clone())
            .collect();
        let expected2 = crate::oracle::non_associative_triples(&p2);
        assert!(!expected2.is_empty());
        assert_eq!(found2, expected2);
    }

    #[test]
    fn discrete_category() {
        let d = FinCategory::discrete(["p", "q"]).unwrap();
        assert!(d.validate().ok());
        assert_eq!(d.morphisms(), [Id::new("id_p").unwrap(), Id::new("id_q").unwrap()]);
    }

    #[test]
    fn functor_checks() {
        let c = FinCategory::from_presentation(&walking_arrow()).unwrap();
        let id = CatFunctor::identity(&c);
        assert!(id.validate().ok());
        assert_eq!(id.after(&id).unwrap(), id);
        // Collapse onto x: a ↦ id_x, but y ↦ y breaks typing.
        let bad = CatFunctor::from_maps(
            c.clone(),
            c.clone(),
            &[(s("x"), s("x")), (s("y"), s("y"))],
            &[(s("a"), s("id_x")), (s("id_x"), s("id_x")), (s("id_y"), s("id_y"))],
        )
        .unwrap();
        assert!(bad.validate().names("functor-typing"));
    }
}

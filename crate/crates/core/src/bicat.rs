//! Finite strict 2-categories, decorated bicategories, horizontalization
//! and the trivial double category.
//!
//! A [`Fin2Category`] is stored as its trivial double category: the
//! objects are the 0-cells with only identity vertical morphisms, the
//! horizontal morphisms are the 1-cells and the squares are the 2-cells.
//! Vertical composition of 2-cells is composition in C₁ and horizontal
//! composition of 2-cells is the square composition. This makes the
//! equation `H(trivial B) = B` hold token for token.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::double::{DoublePresentation, SquareDecl};
use crate::error::{invalid, malformed, Result};
use crate::{FinCategory, FinDoubleCategory, Id, ValidationReport, Violation};

/// Token-level tables of a finite strict 2-category.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoCategoryPresentation {
    pub cells0: Vec<String>,
    /// `(name, src0, tgt0)`
    pub cells1: Vec<(String, String, String)>,
    /// `(0-cell, identity 1-cell)`
    pub identities1: Vec<(String, String)>,
    /// `(g, f, g∘f)` whenever `src0 g = tgt0 f`
    pub compositions1: Vec<(String, String, String)>,
    /// `(name, src1, tgt1)`
    pub cells2: Vec<(String, String, String)>,
    /// `(1-cell, identity 2-cell)`
    pub identities2: Vec<(String, String)>,
    /// `(β, α, β·α)` whenever `src1 β = tgt1 α`
    pub vertical_compositions2: Vec<(String, String, String)>,
    /// `(β, α, β∗α)` whenever `src0 src1 β = tgt0 src1 α`
    pub horizontal_compositions2: Vec<(String, String, String)>,
}

/// A finite strict 2-category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fin2Category {
    double: FinDoubleCategory,
}

impl Fin2Category {
    /// Resolves the tables. Axioms are checked by [`validate`](Self::validate).
    pub fn from_presentation(p: &TwoCategoryPresentation) -> Result<Fin2Category> {
        let c0 = FinCategory::discrete(p.cells0.iter().map(String::as_str))?;
        let vid = |x: &str| -> Result<String> {
            let i = c0
                .object_index(x)
                .ok_or_else(|| malformed(format!("undeclared 0-cell `{x}`")))?;
            Ok(c0.morphism(c0.identity(i)).to_string())
        };
        let ends: BTreeMap<&str, (&str, &str)> = p
            .cells1
            .iter()
            .map(|(n, s, t)| (n.as_str(), (s.as_str(), t.as_str())))
            .collect();
        let ends_of = |a: &str| {
            ends.get(a)
                .copied()
                .ok_or_else(|| malformed(format!("undeclared 1-cell `{a}`")))
        };
        let mut squares = Vec::with_capacity(p.cells2.len());
        for (name, s, t) in &p.cells2 {
            let (x, y) = ends_of(s)?;
            ends_of(t)?;
            squares.push(SquareDecl {
                name: name.clone(),
                dom: s.clone(),
                cod: t.clone(),
                vsrc: vid(x)?,
                vtgt: vid(y)?,
            });
        }
        let id1: BTreeMap<&str, &str> = p
            .identities1
            .iter()
            .map(|(x, a)| (x.as_str(), a.as_str()))
            .collect();
        let id2: BTreeMap<&str, &str> = p
            .identities2
            .iter()
            .map(|(a, q)| (a.as_str(), q.as_str()))
            .collect();
        let mut square_identities = Vec::with_capacity(p.cells0.len());
        for x in &p.cells0 {
            let a = id1
                .get(x.as_str())
                .ok_or_else(|| malformed(format!("0-cell `{x}` has no identity 1-cell")))?;
            let q = id2
                .get(a)
                .ok_or_else(|| malformed(format!("1-cell `{a}` has no identity 2-cell")))?;
            square_identities.push((vid(x)?, q.to_string()));
        }
        let dp = DoublePresentation {
            c0: c0.to_presentation(),
            horizontal: p.cells1.clone(),
            horizontal_identities: p.identities1.clone(),
            horizontal_compositions: p.compositions1.clone(),
            squares,
            vertical_identities: p.identities2.clone(),
            vertical_compositions: p.vertical_compositions2.clone(),
            square_identities,
            square_compositions: p.horizontal_compositions2.clone(),
        };
        Ok(Fin2Category {
            double: FinDoubleCategory::from_presentation(&dp)?,
        })
    }

    /// Canonical presentation with every list sorted by token.
    pub fn to_presentation(&self) -> TwoCategoryPresentation {
        let d = self.double.to_presentation();
        TwoCategoryPresentation {
            cells0: d.c0.objects,
            cells1: d.horizontal,
            identities1: d.horizontal_identities,
            compositions1: d.horizontal_compositions,
            cells2: d
                .squares
                .into_iter()
                .map(|s| (s.name, s.dom, s.cod))
                .collect(),
            identities2: d.vertical_identities,
            vertical_compositions2: d.vertical_compositions,
            horizontal_compositions2: d.square_compositions,
        }
    }

    /// Checks the 2-category axioms. Failures carry the names of the
    /// corresponding double-category axioms of the trivial double category.
    pub fn validate(&self) -> ValidationReport {
        self.double.validate()
    }

    /// The trivial double category, without checking the axioms.
    pub fn as_double(&self) -> &FinDoubleCategory {
        &self.double
    }

    pub fn cells0(&self) -> &[Id] {
        self.double.objects()
    }

    pub fn cells1(&self) -> &[Id] {
        self.double.hmors()
    }

    pub fn cells2(&self) -> &[Id] {
        self.double.squares()
    }

    pub fn src0(&self, a: usize) -> usize {
        self.double.hsrc(a)
    }

    pub fn tgt0(&self, a: usize) -> usize {
        self.double.htgt(a)
    }

    pub fn src1(&self, alpha: usize) -> usize {
        self.double.dom(alpha)
    }

    pub fn tgt1(&self, alpha: usize) -> usize {
        self.double.cod(alpha)
    }

    pub fn id1(&self, x: usize) -> usize {
        self.double.hid_obj(x)
    }

    pub fn id2(&self, a: usize) -> usize {
        self.double.vid(a)
    }

    pub fn hcomp1(&self, g: usize, f: usize) -> Option<usize> {
        self.double.hcomp_h(g, f)
    }

    pub fn vcomp2(&self, beta: usize, alpha: usize) -> Option<usize> {
        self.double.vcomp(beta, alpha)
    }

    pub fn hcomp2(&self, beta: usize, alpha: usize) -> Option<usize> {
        self.double.hcomp_sq(beta, alpha)
    }

    /// 2-cells from `a` to `b`.
    pub fn hom2(&self, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
        self.double
            .squares_from(a)
            .iter()
            .copied()
            .filter(move |&q| self.double.cod(q) == b)
    }
}

/// The trivial double category of a valid 2-category.
pub fn trivial_double(b: &Fin2Category) -> Result<FinDoubleCategory> {
    let report = b.validate();
    if !report.ok() {
        return Err(invalid(format!(
            "2-category fails {} axiom check(s)",
            report.violations().len()
        )));
    }
    Ok(b.double.clone())
}

fn require_valid(c: &FinDoubleCategory) -> Result<()> {
    let report = c.validate();
    if report.ok() {
        Ok(())
    } else {
        Err(invalid(format!(
            "double category fails {} axiom check(s)",
            report.violations().len()
        )))
    }
}

/// Objects, horizontal morphisms and globular squares.
pub fn horizontalization(c: &FinDoubleCategory) -> Result<Fin2Category> {
    require_valid(c)?;
    Ok(horizontalization_unchecked(c))
}

pub(crate) fn horizontalization_unchecked(c: &FinDoubleCategory) -> Fin2Category {
    let glob = c.globular_squares();
    let sq = |q: usize| c.square(q).to_string();
    let hm = |a: usize| c.hmor(a).to_string();
    let mut p = TwoCategoryPresentation {
        cells0: c.objects().iter().map(ToString::to_string).collect(),
        cells1: (0..c.hmor_count())
            .map(|a| {
                (
                    hm(a),
                    c.objects()[c.hsrc(a)].to_string(),
                    c.objects()[c.htgt(a)].to_string(),
                )
            })
            .collect(),
        identities1: (0..c.objects().len())
            .map(|x| (c.objects()[x].to_string(), hm(c.hid_obj(x))))
            .collect(),
        compositions1: c
            .horizontal_compositions()
            .map(|((b, a), r)| (hm(b), hm(a), hm(r)))
            .collect(),
        cells2: glob
            .iter()
            .map(|&q| (sq(q), hm(c.dom(q)), hm(c.cod(q))))
            .collect(),
        identities2: (0..c.hmor_count()).map(|a| (hm(a), sq(c.vid(a)))).collect(),
        vertical_compositions2: c
            .c1()
            .compositions()
            .filter(|((p, q), _)| glob.contains(p) && glob.contains(q))
            .map(|((p, q), r)| (sq(p), sq(q), sq(r)))
            .collect(),
        horizontal_compositions2: c
            .square_compositions()
            .filter(|((p, q), _)| glob.contains(p) && glob.contains(q))
            .map(|((p, q), r)| (sq(p), sq(q), sq(r)))
            .collect(),
    };
    p.vertical_compositions2.sort();
    p.horizontal_compositions2.sort();
    // Globular squares of a valid double category are closed under both
    // compositions and contain the identities, so this always resolves.
    Fin2Category::from_presentation(&p).expect("globular squares form a sub 2-category")
}

/// A 2-category together with a category on its 0-cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedBicategory {
    decoration: FinCategory,
    underlying: Fin2Category,
}

impl DecoratedBicategory {
    /// Fails with `InvalidInput` unless the decoration's objects are the
    /// 0-cells of the 2-category.
    pub fn new(decoration: FinCategory, underlying: Fin2Category) -> Result<DecoratedBicategory> {
        if decoration.objects() != underlying.cells0() {
            return Err(invalid(
                "decoration objects differ from the 0-cells of the 2-category",
            ));
        }
        Ok(DecoratedBicategory {
            decoration,
            underlying,
        })
    }

    /// `B` decorated by the discrete category on its 0-cells.
    pub fn discretely_decorated(b: Fin2Category) -> Result<DecoratedBicategory> {
        let d = FinCategory::discrete(b.cells0().iter().map(Id::as_str))?;
        DecoratedBicategory::new(d, b)
    }

    pub fn decoration(&self) -> &FinCategory {
        &self.decoration
    }

    pub fn underlying(&self) -> &Fin2Category {
        &self.underlying
    }

    pub fn validate(&self) -> ValidationReport {
        let mut extra = Vec::new();
        for v in self.decoration.validate().violations() {
            let mut v = v.clone();
            v.axiom = format!("decoration-{}", v.axiom);
            extra.push(v);
        }
        if self.decoration.objects() != self.underlying.cells0() {
            extra.push(Violation::new(
                "decoration-objects",
                [],
                "objects = 0-cells",
                "mismatch",
            ));
        }
        self.underlying
            .validate()
            .merge(ValidationReport::from_violations(extra))
    }
}

/// Decorated horizontalization: the category of objects together with the
/// horizontal 2-category.
pub fn decorated_horizontalization(c: &FinDoubleCategory) -> Result<DecoratedBicategory> {
    let h = horizontalization(c)?;
    DecoratedBicategory::new(c.c0().clone(), h)
}

/// Token-level equality of decorated bicategories.
pub fn equal_decorated(b1: &DecoratedBicategory, b2: &DecoratedBicategory) -> bool {
    b1 == b2
}

/// True iff the decorated horizontalization of `c` is exactly `b`.
pub fn is_internalization(c: &FinDoubleCategory, b: &DecoratedBicategory) -> Result<bool> {
    if !b.validate().ok() {
        return Err(invalid("decorated bicategory fails validation"));
    }
    Ok(equal_decorated(&decorated_horizontalization(c)?, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{
        gen_commuting_squares, gen_poset_category, idempotent_monoid, PosetSpec,
    };
    use crate::Error;

    fn sq2() -> FinDoubleCategory {
        gen_commuting_squares(&gen_poset_category(&PosetSpec::chain(2)).unwrap()).unwrap()
    }

    #[test]
    fn idempotent_monoid_trivial_double() {
        let b = idempotent_monoid();
        assert!(b.validate().ok(), "{:?}", b.validate().violations());
        let t = trivial_double(&b).unwrap();
        assert_eq!(t.square_count(), 2);
        assert!((0..2).all(|q| t.is_globular_at(q)));
        assert_eq!(horizontalization(&t).unwrap(), b);
    }

    #[test]
    fn horizontalization_of_sq2_is_locally_discrete() {
        let c = sq2();
        let h = horizontalization(&c).unwrap();
        let cells: Vec<&str> = h.cells2().iter().map(Id::as_str).collect();
        assert_eq!(
            cells,
            ["0<1|id_0|id_1|0<1", "id_0|id_0|id_0|id_0", "id_1|id_1|id_1|id_1"]
        );
        for a in 0..h.cells1().len() {
            assert_eq!(h.hom2(a, a).count(), 1);
        }
    }

    #[test]
    fn decorated_sq2() {
        let c = sq2();
        let hs = decorated_horizontalization(&c).unwrap();
        assert_eq!(hs.decoration(), c.c0());
        assert!(is_internalization(&c, &hs).unwrap());
        let discrete = DecoratedBicategory::discretely_decorated(hs.underlying().clone()).unwrap();
        assert!(!equal_decorated(&hs, &discrete));
        let t = trivial_double(hs.underlying()).unwrap();
        assert!(!is_internalization(&t, &hs).unwrap());
        assert!(is_internalization(&t, &discrete).unwrap());
    }

    #[test]
    fn decoration_must_share_objects() {
        let b = idempotent_monoid();
        let d = FinCategory::discrete(["x", "y"]).unwrap();
        assert!(matches!(
            DecoratedBicategory::new(d, b),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn broken_interchange_is_reported() {
        // Two 2-cells 1, e on one 1-cell with e·e = e but e∗e = 1: the
        // horizontal composite disagrees with the vertical one, which
        // interchange forbids here.
        let mut p = idempotent_monoid().to_presentation();
        for e in &mut p.horizontal_compositions2 {
            if e.0 == "e" && e.1 == "e" {
                e.2 = "1".into();
            }
        }
        let b = Fin2Category::from_presentation(&p).unwrap();
        let r = b.validate();
        assert!(!r.ok());
        assert!(trivial_double(&b).is_err());
    }

    #[test]
    fn malformed_two_category() {
        let mut p = idempotent_monoid().to_presentation();
        p.cells2.push(("z".into(), "nope".into(), "id_*".into()));
        assert!(matches!(
            Fin2Category::from_presentation(&p),
            Err(Error::MalformedPresentation(_))
        ));
    }
}

//! Finite strict double categories and the axiom validator.
//!
//! A double category is stored as its category of objects C₀ (objects and
//! vertical morphisms) and its category of morphisms C₁ (horizontal
//! morphisms and squares, composed vertically), together with the source
//! and target functors `s, t: C₁ → C₀`, the horizontal identity functor
//! `i: C₀ → C₁`, and horizontal composition on both horizontal morphisms and
//! squares.
//!
//! A square `q` runs from its horizontal domain `dom q` down to its
//! horizontal codomain `cod q`; its left edge is `vsrc q = s(q)` and its right
//! edge is `vtgt q = t(q)`:
//!
//! ```text
//!          dom q
//!     x ----------> y
//!     |             |
//!  vsrc q   q     vtgt q
//!     v             v
//!     x' ---------> y'
//!          cod q
//! ```
//!
//! Horizontal composition `Ψ ∗ Φ` places `Φ` on the left and `Ψ` on the
//! right and is defined when `vsrc Ψ = vtgt Φ`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::category::{
    composition_table, total_map, CategoryAxioms, CategoryPresentation, PairTable, SortNames,
};
use crate::error::{Error, Result};
use crate::{FinCategory, Id, ValidationReport, Violation};

/// Declaration of one square and its four boundary components.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct SquareDecl {
    pub name: String,
    pub dom: String,
    pub cod: String,
    pub vsrc: String,
    pub vtgt: String,
}

/// Token-level tables of a double category.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DoublePresentation {
    /// The category of objects and vertical morphisms.
    pub c0: CategoryPresentation,
    /// `(name, source object, target object)`
    pub horizontal: Vec<(String, String, String)>,
    /// `(object, horizontal identity)`
    pub horizontal_identities: Vec<(String, String)>,
    /// `(b, a, b∗a)` whenever the source of `b` is the target of `a`
    pub horizontal_compositions: Vec<(String, String, String)>,
    pub squares: Vec<SquareDecl>,
    /// `(horizontal morphism, its identity square)`
    pub vertical_identities: Vec<(String, String)>,
    /// `(Ψ, Φ, Ψ∘Φ)` whenever `dom Ψ = cod Φ`
    pub vertical_compositions: Vec<(String, String, String)>,
    /// `(vertical morphism f, i(f))`
    pub square_identities: Vec<(String, String)>,
    /// `(Ψ, Φ, Ψ∗Φ)` whenever `vsrc Ψ = vtgt Φ`
    pub square_compositions: Vec<(String, String, String)>,
}

/// The four boundary components of a square.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Boundary<'a> {
    pub dom: &'a Id,
    pub cod: &'a Id,
    pub vsrc: &'a Id,
    pub vtgt: &'a Id,
}

pub(crate) const C0_SORTS: SortNames = SortNames {
    object: "object",
    morphism: "vertical morphism",
};

pub(crate) const C1_SORTS: SortNames = SortNames {
    object: "horizontal morphism",
    morphism: "square",
};

const C0_AXIOMS: CategoryAxioms = CategoryAxioms {
    id_typing: "C0-id-typing",
    comp_typing: "C0-comp-typing",
    unit: "C0-unit",
    assoc: "C0-assoc",
};

const C1_AXIOMS: CategoryAxioms = CategoryAxioms {
    id_typing: "C1-id-typing",
    comp_typing: "C1-comp-typing",
    unit: "C1-unit",
    assoc: "C1-assoc",
};

/// A finite strict double category.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDoubleCategory {
    c0: FinCategory,
    c1: FinCategory,
    hsrc: Vec<usize>,
    htgt: Vec<usize>,
    vsrc: Vec<usize>,
    vtgt: Vec<usize>,
    hid_obj: Vec<usize>,
    hid_vmor: Vec<usize>,
    hcomp_h: PairTable,
    hcomp_sq: PairTable,
    by_vsrc: Vec<Vec<usize>>,
    by_vtgt: Vec<Vec<usize>>,
}

impl FinDoubleCategory {
    /// Checks that every table references declared identifiers and that
    /// every composition table is defined exactly on its composable pairs.
    /// Axioms are checked separately by [`validate`](Self::validate).
    pub fn from_presentation(p: &DoublePresentation) -> Result<FinDoubleCategory> {
        let c0 = FinCategory::build(&p.c0, C0_SORTS)?;
        let c1_pres = CategoryPresentation {
            objects: p.horizontal.iter().map(|h| h.0.clone()).collect(),
            morphisms: p
                .squares
                .iter()
                .map(|s| (s.name.clone(), s.dom.clone(), s.cod.clone()))
                .collect(),
            identities: p.vertical_identities.clone(),
            compositions: p.vertical_compositions.clone(),
        };
        let c1 = FinCategory::build(&c1_pres, C1_SORTS)?;

        let mut hsrc = vec![0; c1.object_count()];
        let mut htgt = vec![0; c1.object_count()];
        for (name, s, t) in &p.horizontal {
            let a = c1.objects.lookup(C1_SORTS.object, name)?;
            hsrc[a] = c0.objects.lookup("object", s)?;
            htgt[a] = c0.objects.lookup("object", t)?;
        }
        let mut vsrc = vec![0; c1.morphism_count()];
        let mut vtgt = vec![0; c1.morphism_count()];
        for s in &p.squares {
            let q = c1.morphisms.lookup("square", &s.name)?;
            vsrc[q] = c0.morphisms.lookup(C0_SORTS.morphism, &s.vsrc)?;
            vtgt[q] = c0.morphisms.lookup(C0_SORTS.morphism, &s.vtgt)?;
        }
        let hid_obj = total_map(
            &c0.objects,
            &c1.objects,
            &p.horizontal_identities,
            "object",
            C1_SORTS.object,
            "horizontal identity",
        )?;
        let hid_vmor = total_map(
            &c0.morphisms,
            &c1.morphisms,
            &p.square_identities,
            C0_SORTS.morphism,
            "square",
            "horizontal identity square",
        )?;
        let hcomp_h = composition_table(
            &c1.objects,
            C1_SORTS.object,
            &p.horizontal_compositions,
            |b, a| hsrc[b] == htgt[a],
        )?;
        let hcomp_sq = composition_table(
            &c1.morphisms,
            "square",
            &p.square_compositions,
            |psi, phi| vsrc[psi] == vtgt[phi],
        )?;
        let mut by_vsrc = vec![Vec::new(); c0.morphism_count()];
        let mut by_vtgt = vec![Vec::new(); c0.morphism_count()];
        for q in 0..c1.morphism_count() {
            by_vsrc[vsrc[q]].push(q);
            by_vtgt[vtgt[q]].push(q);
        }
        Ok(FinDoubleCategory {
            c0,
            c1,
            hsrc,
            htgt,
            vsrc,
            vtgt,
            hid_obj,
            hid_vmor,
            hcomp_h,
            hcomp_sq,
            by_vsrc,
            by_vtgt,
        })
    }

    /// Canonical presentation with every list sorted by token.
    pub fn to_presentation(&self) -> DoublePresentation {
        let hm = |a: usize| self.hmor(a).to_string();
        let sq = |q: usize| self.square(q).to_string();
        let vm = |f: usize| self.c0.morphism(f).to_string();
        let c1 = self.c1.to_presentation();
        let mut p = DoublePresentation {
            c0: self.c0.to_presentation(),
            horizontal: (0..self.hmor_count())
                .map(|a| {
                    (
                        hm(a),
                        self.c0.object(self.hsrc[a]).to_string(),
                        self.c0.object(self.htgt[a]).to_string(),
                    )
                })
                .collect(),
            horizontal_identities: (0..self.c0.object_count())
                .map(|x| (self.c0.object(x).to_string(), hm(self.hid_obj[x])))
                .collect(),
            horizontal_compositions: self
                .hcomp_h
                .iter()
                .map(|((b, a), c)| (hm(b), hm(a), hm(c)))
                .collect(),
            squares: (0..self.square_count())
                .map(|q| SquareDecl {
                    name: sq(q),
                    dom: hm(self.dom(q)),
                    cod: hm(self.cod(q)),
                    vsrc: vm(self.vsrc[q]),
                    vtgt: vm(self.vtgt[q]),
                })
                .collect(),
            vertical_identities: c1.identities,
            vertical_compositions: c1.compositions,
            square_identities: (0..self.c0.morphism_count())
                .map(|f| (vm(f), sq(self.hid_vmor[f])))
                .collect(),
            square_compositions: self
                .hcomp_sq
                .iter()
                .map(|((psi, phi), r)| (sq(psi), sq(phi), sq(r)))
                .collect(),
        };
        p.horizontal_compositions.sort();
        p.square_compositions.sort();
        p
    }

    /// Category of objects and vertical morphisms.
    pub fn c0(&self) -> &FinCategory {
        &self.c0
    }

    /// Category of horizontal morphisms and squares under vertical
    /// composition.
    pub fn c1(&self) -> &FinCategory {
        &self.c1
    }

    pub fn objects(&self) -> &[Id] {
        self.c0.objects()
    }

    pub fn vertical_morphisms(&self) -> &[Id] {
        self.c0.morphisms()
    }

    pub fn hmors(&self) -> &[Id] {
        self.c1.objects()
    }

    pub fn squares(&self) -> &[Id] {
        self.c1.morphisms()
    }

    pub fn hmor_count(&self) -> usize {
        self.c1.object_count()
    }

    pub fn square_count(&self) -> usize {
        self.c1.morphism_count()
    }

    pub fn hmor(&self, a: usize) -> &Id {
        self.c1.object(a)
    }

    pub fn square(&self, q: usize) -> &Id {
        self.c1.morphism(q)
    }

    pub fn hmor_index(&self, token: &str) -> Option<usize> {
        self.c1.object_index(token)
    }

    pub fn square_index(&self, token: &str) -> Option<usize> {
        self.c1.morphism_index(token)
    }

    pub fn hsrc(&self, a: usize) -> usize {
        self.hsrc[a]
    }

    pub fn htgt(&self, a: usize) -> usize {
        self.htgt[a]
    }

    pub fn dom(&self, q: usize) -> usize {
        self.c1.src(q)
    }

    pub fn cod(&self, q: usize) -> usize {
        self.c1.tgt(q)
    }

    pub fn vsrc(&self, q: usize) -> usize {
        self.vsrc[q]
    }

    pub fn vtgt(&self, q: usize) -> usize {
        self.vtgt[q]
    }

    /// Identity square of a horizontal morphism.
    pub fn vid(&self, a: usize) -> usize {
        self.c1.identity(a)
    }

    pub fn vcomp(&self, psi: usize, phi: usize) -> Option<usize> {
        self.c1.compose(psi, phi)
    }

    /// Horizontal identity of an object.
    pub fn hid_obj(&self, x: usize) -> usize {
        self.hid_obj[x]
    }

    /// Horizontal identity square `i(f)` of a vertical morphism.
    pub fn hid_vmor(&self, f: usize) -> usize {
        self.hid_vmor[f]
    }

    pub fn hcomp_h(&self, b: usize, a: usize) -> Option<usize> {
        self.hcomp_h.get(b, a)
    }

    pub fn hcomp_sq(&self, psi: usize, phi: usize) -> Option<usize> {
        self.hcomp_sq.get(psi, phi)
    }

    pub fn horizontal_compositions(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.hcomp_h.iter()
    }

    pub fn square_compositions(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.hcomp_sq.iter()
    }

    /// Squares whose left edge is the vertical morphism `f`.
    pub fn squares_with_vsrc(&self, f: usize) -> &[usize] {
        &self.by_vsrc[f]
    }

    /// Squares whose right edge is the vertical morphism `f`.
    pub fn squares_with_vtgt(&self, f: usize) -> &[usize] {
        &self.by_vtgt[f]
    }

    /// Squares with horizontal domain `a`.
    pub fn squares_from(&self, a: usize) -> &[usize] {
        self.c1.outgoing(a)
    }

    /// Squares with horizontal codomain `a`.
    pub fn squares_into(&self, a: usize) -> &[usize] {
        self.c1.incoming(a)
    }

    pub fn is_globular_at(&self, q: usize) -> bool {
        let a = self.dom(q);
        self.vsrc[q] == self.c0.identity(self.hsrc[a])
            && self.vtgt[q] == self.c0.identity(self.htgt[a])
    }

    pub fn is_horizontal_endomorphism_at(&self, q: usize) -> bool {
        self.vsrc[q] == self.vtgt[q]
    }

    fn lookup_square(&self, token: &str) -> Result<usize> {
        self.square_index(token).ok_or_else(|| Error::UnknownIdentifier {
            sort: "square",
            token: token.to_string(),
        })
    }

    /// True iff both vertical edges of `q` are identities.
    pub fn is_globular(&self, q: &str) -> Result<bool> {
        Ok(self.is_globular_at(self.lookup_square(q)?))
    }

    /// True iff the left and right edges of `q` coincide.
    pub fn is_horizontal_endomorphism(&self, q: &str) -> Result<bool> {
        Ok(self.is_horizontal_endomorphism_at(self.lookup_square(q)?))
    }

    pub fn boundary(&self, q: &str) -> Result<Boundary<'_>> {
        let q = self.lookup_square(q)?;
        Ok(Boundary {
            dom: self.hmor(self.dom(q)),
            cod: self.hmor(self.cod(q)),
            vsrc: self.c0.morphism(self.vsrc[q]),
            vtgt: self.c0.morphism(self.vtgt[q]),
        })
    }

    /// Runs every double-category axiom and itemizes the failures.
    pub fn validate(&self) -> ValidationReport {
        let mut out = self.c0.violations(C0_AXIOMS);
        out.extend(self.c1.violations(C1_AXIOMS));
        self.boundary_violations(&mut out);
        self.identity_functor_violations(&mut out);
        self.horizontal_violations(&mut out);
        self.interchange_violations(&mut out);
        ValidationReport::from_violations(out)
    }

    fn vm(&self, f: usize) -> String {
        self.c0.morphism(f).to_string()
    }

    fn opt_square(&self, q: Option<usize>) -> String {
        q.map_or_else(|| "undefined".to_string(), |q| self.square(q).to_string())
    }

    fn opt_hmor(&self, a: Option<usize>) -> String {
        a.map_or_else(|| "undefined".to_string(), |a| self.hmor(a).to_string())
    }

    fn boundary_violations(&self, out: &mut Vec<Violation>) {
        let c0 = &self.c0;
        let arrow = |x: usize, y: usize| format!("{}->{}", c0.object(x), c0.object(y));
        for q in 0..self.square_count() {
            let (a, b) = (self.dom(q), self.cod(q));
            let (s, t) = (self.vsrc[q], self.vtgt[q]);
            if c0.src(s) != self.hsrc[a] || c0.tgt(s) != self.hsrc[b] {
                out.push(Violation::new(
                    "s-typing",
                    [self.square(q).clone()],
                    arrow(self.hsrc[a], self.hsrc[b]),
                    arrow(c0.src(s), c0.tgt(s)),
                ));
            }
            if c0.src(t) != self.htgt[a] || c0.tgt(t) != self.htgt[b] {
                out.push(Violation::new(
                    "t-typing",
                    [self.square(q).clone()],
                    arrow(self.htgt[a], self.htgt[b]),
                    arrow(c0.src(t), c0.tgt(t)),
                ));
            }
        }
        for a in 0..self.hmor_count() {
            let v = self.vid(a);
            let want_s = c0.identity(self.hsrc[a]);
            let want_t = c0.identity(self.htgt[a]);
            if self.vsrc[v] != want_s {
                out.push(Violation::new(
                    "s-functoriality",
                    [self.hmor(a).clone(), self.square(v).clone()],
                    self.vm(want_s),
                    self.vm(self.vsrc[v]),
                ));
            }
            if self.vtgt[v] != want_t {
                out.push(Violation::new(
                    "t-functoriality",
                    [self.hmor(a).clone(), self.square(v).clone()],
                    self.vm(want_t),
                    self.vm(self.vtgt[v]),
                ));
            }
        }
        for ((psi, phi), r) in self.c1.compositions() {
            let ids = || [self.square(psi).clone(), self.square(phi).clone()];
            if let Some(want) = c0.compose(self.vsrc[psi], self.vsrc[phi]) {
                if self.vsrc[r] != want {
                    out.push(Violation::new(
                        "s-functoriality",
                        ids(),
                        self.vm(want),
                        self.vm(self.vsrc[r]),
                    ));
                }
            }
            if let Some(want) = c0.compose(self.vtgt[psi], self.vtgt[phi]) {
                if self.vtgt[r] != want {
                    out.push(Violation::new(
                        "t-functoriality",
                        ids(),
                        self.vm(want),
                        self.vm(self.vtgt[r]),
                    ));
                }
            }
        }
    }

    fn identity_functor_violations(&self, out: &mut Vec<Violation>) {
        let c0 = &self.c0;
        for x in 0..c0.object_count() {
            let e = self.hid_obj[x];
            if self.hsrc[e] != x || self.htgt[e] != x {
                out.push(Violation::new(
                    "i-typing",
                    [c0.object(x).clone(), self.hmor(e).clone()],
                    format!("{}->{}", c0.object(x), c0.object(x)),
                    format!("{}->{}", c0.object(self.hsrc[e]), c0.object(self.htgt[e])),
                ));
            }
        }
        for f in 0..c0.morphism_count() {
            let q = self.hid_vmor[f];
            let want = (
                self.hid_obj[c0.src(f)],
                self.hid_obj[c0.tgt(f)],
                f,
                f,
            );
            let got = (self.dom(q), self.cod(q), self.vsrc[q], self.vtgt[q]);
            if want != got {
                out.push(Violation::new(
                    "i-typing",
                    [c0.morphism(f).clone(), self.square(q).clone()],
                    format!(
                        "{}=>{} [{}|{}]",
                        self.hmor(want.0),
                        self.hmor(want.1),
                        self.vm(want.2),
                        self.vm(want.3)
                    ),
                    format!(
                        "{}=>{} [{}|{}]",
                        self.hmor(got.0),
                        self.hmor(got.1),
                        self.vm(got.2),
                        self.vm(got.3)
                    ),
                ));
            }
        }
        for x in 0..c0.object_count() {
            let want = self.vid(self.hid_obj[x]);
            let got = self.hid_vmor[c0.identity(x)];
            if want != got {
                out.push(Violation::new(
                    "i-functoriality",
                    [c0.object(x).clone()],
                    self.square(want).to_string(),
                    self.square(got).to_string(),
                ));
            }
        }
        for ((g, f), h) in c0.compositions() {
            let want = self.vcomp(self.hid_vmor[g], self.hid_vmor[f]);
            let got = self.hid_vmor[h];
            if let Some(want) = want {
                if want != got {
                    out.push(Violation::new(
                        "i-functoriality",
                        [c0.morphism(g).clone(), c0.morphism(f).clone()],
                        self.square(want).to_string(),
                        self.square(got).to_string(),
                    ));
                }
            }
        }
    }

    fn horizontal_violations(&self, out: &mut Vec<Violation>) {
        let c0 = &self.c0;
        // typing of ∗ on horizontal morphisms and squares
        for ((b, a), c) in self.hcomp_h.iter() {
            if self.hsrc[c] != self.hsrc[a] || self.htgt[c] != self.htgt[b] {
                out.push(Violation::new(
                    "hcomp-typing",
                    [self.hmor(b).clone(), self.hmor(a).clone()],
                    format!("{}->{}", c0.object(self.hsrc[a]), c0.object(self.htgt[b])),
                    format!("{}->{}", c0.object(self.hsrc[c]), c0.object(self.htgt[c])),
                ));
            }
        }
        for ((psi, phi), r) in self.hcomp_sq.iter() {
            let dom = self.hcomp_h(self.dom(psi), self.dom(phi));
            let cod = self.hcomp_h(self.cod(psi), self.cod(phi));
            let want = (dom, cod, self.vsrc[phi], self.vtgt[psi]);
            let got = (Some(self.dom(r)), Some(self.cod(r)), self.vsrc[r], self.vtgt[r]);
            if want != got {
                out.push(Violation::new(
                    "hcomp-typing",
                    [self.square(psi).clone(), self.square(phi).clone()],
                    format!(
                        "{}=>{} [{}|{}]",
                        self.opt_hmor(want.0),
                        self.opt_hmor(want.1),
                        self.vm(want.2),
                        self.vm(want.3)
                    ),
                    format!(
                        "{}=>{} [{}|{}]",
                        self.opt_hmor(got.0),
                        self.opt_hmor(got.1),
                        self.vm(got.2),
                        self.vm(got.3)
                    ),
                ));
            }
        }
        // ∗ preserves vertical identities
        for ((b, a), c) in self.hcomp_h.iter() {
            let got = self.hcomp_sq(self.vid(b), self.vid(a));
            let want = self.vid(c);
            if let Some(got) = got {
                if got != want {
                    out.push(Violation::new(
                        "hcomp-functoriality",
                        [self.hmor(b).clone(), self.hmor(a).clone()],
                        self.square(want).to_string(),
                        self.square(got).to_string(),
                    ));
                }
            }
        }
        // strict unitality
        for a in 0..self.hmor_count() {
            let left = self.hid_obj[self.htgt[a]];
            let right = self.hid_obj[self.hsrc[a]];
            for (pair, got) in [
                ((a, right), self.hcomp_h(a, right)),
                ((left, a), self.hcomp_h(left, a)),
            ] {
                if let Some(got) = got {
                    if got != a {
                        out.push(Violation::new(
                            "h-unit",
                            [self.hmor(pair.0).clone(), self.hmor(pair.1).clone()],
                            self.hmor(a).to_string(),
                            self.hmor(got).to_string(),
                        ));
                    }
                }
            }
        }
        for q in 0..self.square_count() {
            let left = self.hid_vmor[self.vtgt[q]];
            let right = self.hid_vmor[self.vsrc[q]];
            for (pair, got) in [
                ((q, right), self.hcomp_sq(q, right)),
                ((left, q), self.hcomp_sq(left, q)),
            ] {
                if let Some(got) = got {
                    if got != q {
                        out.push(Violation::new(
                            "h-unit",
                            [self.square(pair.0).clone(), self.square(pair.1).clone()],
                            self.square(q).to_string(),
                            self.square(got).to_string(),
                        ));
                    }
                }
            }
        }
        // strict associativity
        for ((b, a), ba) in self.hcomp_h.iter() {
            for c in 0..self.hmor_count() {
                if self.hsrc[c] != self.htgt[b] {
                    continue;
                }
                let cb = self.hcomp_h[(c, b)];
                let (Some(l), Some(r)) = (self.hcomp_h(c, ba), self.hcomp_h(cb, a)) else {
                    continue;
                };
                if l != r {
                    out.push(Violation::new(
                        "h-assoc",
                        [self.hmor(c).clone(), self.hmor(b).clone(), self.hmor(a).clone()],
                        self.hmor(r).to_string(),
                        self.hmor(l).to_string(),
                    ));
                }
            }
        }
        for ((psi, phi), pp) in self.hcomp_sq.iter() {
            for &chi in &self.by_vsrc[self.vtgt[psi]] {
                let cp = self.hcomp_sq[(chi, psi)];
                let (Some(l), Some(r)) = (self.hcomp_sq(chi, pp), self.hcomp_sq(cp, phi)) else {
                    continue;
                };
                if l != r {
                    out.push(Violation::new(
                        "h-assoc",
                        [
                            self.square(chi).clone(),
                            self.square(psi).clone(),
                            self.square(phi).clone(),
                        ],
                        self.square(r).to_string(),
                        self.square(l).to_string(),
                    ));
                }
            }
        }
    }

    fn interchange_violations(&self, out: &mut Vec<Violation>) {
        let nv = self.c0.morphism_count();
        let mut by_dom_vsrc = vec![Vec::new(); self.hmor_count() * nv];
        for q in 0..self.square_count() {
            by_dom_vsrc[self.dom(q) * nv + self.vsrc[q]].push(q);
        }
        for ((psi, phi), top) in self.hcomp_sq.iter() {
            for &phi2 in self.squares_from(self.cod(phi)) {
                let left = self.vcomp(phi2, phi);
                for &psi2 in &by_dom_vsrc[self.cod(psi) * nv + self.vtgt[phi2]] {
                    let bottom = self.hcomp_sq[(psi2, phi2)];
                    let lhs = self.vcomp(bottom, top);
                    let rhs = match (self.vcomp(psi2, psi), left) {
                        (Some(right), Some(left)) => self.hcomp_sq(right, left),
                        _ => None,
                    };
                    if let (Some(l), Some(r)) = (lhs, rhs) {
                        if l != r {
                            out.push(Violation::new(
                                "interchange",
                                [
                                    self.square(psi2).clone(),
                                    self.square(phi2).clone(),
                                    self.square(psi).clone(),
                                    self.square(phi).clone(),
                                ],
                                self.opt_square(rhs),
                                self.opt_square(lhs),
                            ));
                        }
                    }
                }
            }
        }
    }

    /// The complete sub-double category with the same objects, vertical and
    /// horizontal morphisms, and only the squares in `keep`. Fails with
    /// `MalformedPresentation` when `keep` is not closed under the square
    /// operations.
    pub fn restrict_squares(&self, keep: &BTreeSet<usize>) -> Result<FinDoubleCategory> {
        let kept = |t: &str| self.square_index(t).is_some_and(|q| keep.contains(&q));
        let p = self.to_presentation();
        let sub = DoublePresentation {
            c0: p.c0,
            horizontal: p.horizontal,
            horizontal_identities: p.horizontal_identities,
            horizontal_compositions: p.horizontal_compositions,
            squares: p.squares.into_iter().filter(|s| kept(&s.name)).collect(),
            vertical_identities: p.vertical_identities,
            vertical_compositions: p
                .vertical_compositions
                .into_iter()
                .filter(|(a, b, _)| kept(a) && kept(b))
                .collect(),
            square_identities: p.square_identities,
            square_compositions: p
                .square_compositions
                .into_iter()
                .filter(|(a, b, _)| kept(a) && kept(b))
                .collect(),
        };
        FinDoubleCategory::from_presentation(&sub)
    }

    /// Index sets of globular squares.
    pub fn globular_squares(&self) -> BTreeSet<usize> {
        (0..self.square_count())
            .filter(|&q| self.is_globular_at(q))
            .collect()
    }
}

pub fn validate_double_category(c: &FinDoubleCategory) -> ValidationReport {
    c.validate()
}

pub fn is_globular(c: &FinDoubleCategory, q: &str) -> Result<bool> {
    c.is_globular(q)
}

pub fn is_horizontal_endomorphism(c: &FinDoubleCategory, q: &str) -> Result<bool> {
    c.is_horizontal_endomorphism(q)
}

pub fn boundary<'a>(c: &'a FinDoubleCategory, q: &str) -> Result<Boundary<'a>> {
    c.boundary(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{gen_commuting_squares, gen_poset_category, PosetSpec};

    fn sq2() -> FinDoubleCategory {
        let k = gen_poset_category(&PosetSpec::chain(2)).unwrap();
        gen_commuting_squares(&k).unwrap()
    }

    #[test]
    fn sq2_validates() {
        let c = sq2();
        assert_eq!(c.square_count(), 6);
        let r = c.validate();
        assert!(r.ok(), "{:?}", r.violations());
    }

    #[test]
    fn swapped_vertical_identity_is_named() {
        let c = sq2();
        let mut p = c.to_presentation();
        // send vid(0<1) to i(0<1), a non-identity square
        let target = "id_0|0<1|0<1|id_1";
        assert!(c.square_index(target).is_some());
        for e in &mut p.vertical_identities {
            if e.0 == "0<1" {
                e.1 = target.to_string();
            }
        }
        let r = FinDoubleCategory::from_presentation(&p).unwrap().validate();
        assert!(!r.ok());
        assert!(
            r.names("s-functoriality") || r.names("C1-unit") || r.names("C1-id-typing"),
            "{:?}",
            r.violations()
        );
        assert!(r
            .violations()
            .iter()
            .any(|v| v.ids.iter().any(|i| i.as_str() == target)
                || v.found == target));
    }

    #[test]
    fn globular_and_endomorphism_queries() {
        let c = sq2();
        // vid(a) is globular
        for a in 0..c.hmor_count() {
            let q = c.square(c.vid(a)).clone();
            assert!(c.is_globular(q.as_str()).unwrap());
        }
        // i(f) for the non-identity arrow is not globular but is an endomorphism
        let f = c.c0().morphism_index("0<1").unwrap();
        let hf = c.square(c.hid_vmor(f)).clone();
        assert!(!c.is_globular(hf.as_str()).unwrap());
        assert!(c.is_horizontal_endomorphism(hf.as_str()).unwrap());
        // top=a, left=a, right=id_y, bottom=id_y
        assert!(!c.is_globular("0<1|0<1|id_1|id_1").unwrap());
        assert!(!c.is_horizontal_endomorphism("0<1|0<1|id_1|id_1").unwrap());
        assert!(c.is_horizontal_endomorphism("id_0|0<1|0<1|id_1").unwrap());
        assert!(matches!(
            c.is_globular("nope"),
            Err(Error::UnknownIdentifier { .. })
        ));
    }

    #[test]
    fn boundaries() {
        let c = sq2();
        let b = c.boundary("0<1|id_0|id_1|0<1").unwrap();
        assert_eq!((b.dom.as_str(), b.cod.as_str()), ("0<1", "0<1"));
        assert_eq!((b.vsrc.as_str(), b.vtgt.as_str()), ("id_0", "id_1"));
        let b = c.boundary("id_0|0<1|0<1|id_1").unwrap();
        assert_eq!((b.dom.as_str(), b.cod.as_str()), ("id_0", "id_1"));
        assert_eq!((b.vsrc.as_str(), b.vtgt.as_str()), ("0<1", "0<1"));
    }

    #[test]
    fn presentation_round_trip() {
        let c = sq2();
        let again = FinDoubleCategory::from_presentation(&c.to_presentation()).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn missing_composite_is_malformed_not_violation() {
        let mut p = sq2().to_presentation();
        p.square_compositions.pop();
        assert!(matches!(
            FinDoubleCategory::from_presentation(&p),
            Err(Error::MalformedPresentation(_))
        ));
    }
}

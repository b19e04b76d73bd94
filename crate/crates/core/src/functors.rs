//! Strict double functors and double natural transformations, their
//! restrictions to the globularily generated piece and the filtration, and
//! the checks around the inclusion `γC → C`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::category::total_map_by_index;
use crate::error::{invalid, Error, Result};
use crate::gg::{transversal_unchecked, GammaAnalysis};
use crate::{CatFunctor, FinCategory, FinDoubleCategory, Id, ValidationReport, Violation};

/// Token maps of a double functor, one list of `(source, image)` pairs per
/// sort.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FunctorPresentation {
    pub objects: Vec<(String, String)>,
    pub vertical: Vec<(String, String)>,
    pub horizontal: Vec<(String, String)>,
    pub squares: Vec<(String, String)>,
}

/// A strict double functor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleFunctor {
    source: FinDoubleCategory,
    target: FinDoubleCategory,
    obj: Vec<usize>,
    vmor: Vec<usize>,
    hmor: Vec<usize>,
    sq: Vec<usize>,
}

impl DoubleFunctor {
    pub fn from_maps(
        source: FinDoubleCategory,
        target: FinDoubleCategory,
        maps: &FunctorPresentation,
    ) -> Result<DoubleFunctor> {
        let map = |from: &[Id], to: &[Id], entries: &[(String, String)], sort| {
            total_map_by_index(from, to, entries, sort)
        };
        let obj = map(source.objects(), target.objects(), &maps.objects, "object")?;
        let vmor = map(
            source.vertical_morphisms(),
            target.vertical_morphisms(),
            &maps.vertical,
            "vertical morphism",
        )?;
        let hmor = map(source.hmors(), target.hmors(), &maps.horizontal, "horizontal morphism")?;
        let sq = map(source.squares(), target.squares(), &maps.squares, "square")?;
        Ok(DoubleFunctor {
            source,
            target,
            obj,
            vmor,
            hmor,
            sq,
        })
    }

    pub(crate) fn from_indices(
        source: FinDoubleCategory,
        target: FinDoubleCategory,
        obj: Vec<usize>,
        vmor: Vec<usize>,
        hmor: Vec<usize>,
        sq: Vec<usize>,
    ) -> DoubleFunctor {
        DoubleFunctor {
            source,
            target,
            obj,
            vmor,
            hmor,
            sq,
        }
    }

    /// Sorted token maps.
    pub fn to_presentation(&self) -> FunctorPresentation {
        let pairs = |from: &[Id], to: &[Id], m: &[usize]| {
            m.iter()
                .enumerate()
                .map(|(i, &j)| (from[i].to_string(), to[j].to_string()))
                .collect()
        };
        let (s, t) = (&self.source, &self.target);
        FunctorPresentation {
            objects: pairs(s.objects(), t.objects(), &self.obj),
            vertical: pairs(s.vertical_morphisms(), t.vertical_morphisms(), &self.vmor),
            horizontal: pairs(s.hmors(), t.hmors(), &self.hmor),
            squares: pairs(s.squares(), t.squares(), &self.sq),
        }
    }

    pub fn identity(c: &FinDoubleCategory) -> DoubleFunctor {
        DoubleFunctor {
            source: c.clone(),
            target: c.clone(),
            obj: (0..c.objects().len()).collect(),
            vmor: (0..c.vertical_morphisms().len()).collect(),
            hmor: (0..c.hmor_count()).collect(),
            sq: (0..c.square_count()).collect(),
        }
    }

    /// Inclusion of `sub` into `sup` by matching tokens.
    pub fn inclusion(sub: &FinDoubleCategory, sup: &FinDoubleCategory) -> Result<DoubleFunctor> {
        fn embed(from: &[Id], find: impl Fn(&str) -> Option<usize>, sort: &str) -> Result<Vec<usize>> {
            from.iter()
                .map(|t| {
                    find(t.as_str()).ok_or_else(|| {
                        invalid(format!("{sort} {t} is missing from the ambient double category"))
                    })
                })
                .collect()
        }
        Ok(DoubleFunctor {
            source: sub.clone(),
            target: sup.clone(),
            obj: embed(sub.objects(), |t| sup.c0().object_index(t), "object")?,
            vmor: embed(
                sub.vertical_morphisms(),
                |t| sup.c0().morphism_index(t),
                "vertical morphism",
            )?,
            hmor: embed(sub.hmors(), |t| sup.hmor_index(t), "horizontal morphism")?,
            sq: embed(sub.squares(), |t| sup.square_index(t), "square")?,
        })
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &DoubleFunctor) -> Result<DoubleFunctor> {
        if first.target != self.source {
            return Err(invalid("double functors are not composable"));
        }
        let comp = |a: &[usize], b: &[usize]| b.iter().map(|&x| a[x]).collect();
        Ok(DoubleFunctor {
            source: first.source.clone(),
            target: self.target.clone(),
            obj: comp(&self.obj, &first.obj),
            vmor: comp(&self.vmor, &first.vmor),
            hmor: comp(&self.hmor, &first.hmor),
            sq: comp(&self.sq, &first.sq),
        })
    }

    pub fn source(&self) -> &FinDoubleCategory {
        &self.source
    }

    pub fn target(&self) -> &FinDoubleCategory {
        &self.target
    }

    pub fn map_object(&self, x: usize) -> usize {
        self.obj[x]
    }

    pub fn map_vertical(&self, f: usize) -> usize {
        self.vmor[f]
    }

    pub fn map_hmor(&self, a: usize) -> usize {
        self.hmor[a]
    }

    pub fn map_square(&self, q: usize) -> usize {
        self.sq[q]
    }

    /// Token-level square map.
    pub fn square_image(&self, token: &str) -> Option<&Id> {
        self.source
            .square_index(token)
            .map(|q| self.target.square(self.sq[q]))
    }

    /// The object functor `F₀`.
    pub fn f0(&self) -> CatFunctor {
        CatFunctor::from_indices(
            self.source.c0().clone(),
            self.target.c0().clone(),
            self.obj.clone(),
            self.vmor.clone(),
        )
    }

    /// The morphism functor `F₁`.
    pub fn f1(&self) -> CatFunctor {
        CatFunctor::from_indices(
            self.source.c1().clone(),
            self.target.c1().clone(),
            self.hmor.clone(),
            self.sq.clone(),
        )
    }

    pub fn validate(&self) -> ValidationReport {
        let mut out = Vec::new();
        for (prefix, report) in [("F0-", self.f0().validate()), ("F1-", self.f1().validate())] {
            for v in report.violations() {
                let mut v = v.clone();
                v.axiom = format!("{prefix}{}", v.axiom);
                out.push(v);
            }
        }
        let (s, t) = (&self.source, &self.target);
        let vm = |f: usize| t.vertical_morphisms()[f].to_string();
        let ob = |x: usize| t.objects()[x].to_string();
        for a in 0..s.hmor_count() {
            let fa = self.hmor[a];
            if t.hsrc(fa) != self.obj[s.hsrc(a)] {
                out.push(Violation::new(
                    "s-commutation",
                    [s.hmor(a).clone()],
                    ob(self.obj[s.hsrc(a)]),
                    ob(t.hsrc(fa)),
                ));
            }
            if t.htgt(fa) != self.obj[s.htgt(a)] {
                out.push(Violation::new(
                    "t-commutation",
                    [s.hmor(a).clone()],
                    ob(self.obj[s.htgt(a)]),
                    ob(t.htgt(fa)),
                ));
            }
        }
        for q in 0..s.square_count() {
            let fq = self.sq[q];
            if t.vsrc(fq) != self.vmor[s.vsrc(q)] {
                out.push(Violation::new(
                    "s-commutation",
                    [s.square(q).clone()],
                    vm(self.vmor[s.vsrc(q)]),
                    vm(t.vsrc(fq)),
                ));
            }
            if t.vtgt(fq) != self.vmor[s.vtgt(q)] {
                out.push(Violation::new(
                    "t-commutation",
                    [s.square(q).clone()],
                    vm(self.vmor[s.vtgt(q)]),
                    vm(t.vtgt(fq)),
                ));
            }
        }
        for x in 0..s.objects().len() {
            let want = t.hid_obj(self.obj[x]);
            let got = self.hmor[s.hid_obj(x)];
            if want != got {
                out.push(Violation::new(
                    "i-commutation",
                    [s.objects()[x].clone()],
                    t.hmor(want).to_string(),
                    t.hmor(got).to_string(),
                ));
            }
        }
        for f in 0..s.vertical_morphisms().len() {
            let want = t.hid_vmor(self.vmor[f]);
            let got = self.sq[s.hid_vmor(f)];
            if want != got {
                out.push(Violation::new(
                    "i-commutation",
                    [s.vertical_morphisms()[f].clone()],
                    t.square(want).to_string(),
                    t.square(got).to_string(),
                ));
            }
        }
        for ((b, a), r) in s.horizontal_compositions() {
            let want = t.hcomp_h(self.hmor[b], self.hmor[a]);
            if want != Some(self.hmor[r]) {
                out.push(Violation::new(
                    "hcomp-preservation",
                    [s.hmor(b).clone(), s.hmor(a).clone()],
                    want.map_or_else(|| "undefined".to_string(), |w| t.hmor(w).to_string()),
                    t.hmor(self.hmor[r]).to_string(),
                ));
            }
        }
        for ((psi, phi), r) in s.square_compositions() {
            let want = t.hcomp_sq(self.sq[psi], self.sq[phi]);
            if want != Some(self.sq[r]) {
                out.push(Violation::new(
                    "hcomp-preservation",
                    [s.square(psi).clone(), s.square(phi).clone()],
                    want.map_or_else(|| "undefined".to_string(), |w| t.square(w).to_string()),
                    t.square(self.sq[r]).to_string(),
                ));
            }
        }
        ValidationReport::from_violations(out)
    }

    /// Keeps the object, vertical and horizontal maps and re-indexes the
    /// square map through tokens. Fails with `ImageEscape` if a square of
    /// `source` maps outside `target`.
    fn restrict(&self, source: &FinDoubleCategory, target: &FinDoubleCategory) -> Result<DoubleFunctor> {
        let sq = source
            .squares()
            .iter()
            .map(|q| {
                let old = self.source.square_index(q.as_str()).expect("restriction of squares");
                let image = self.target.square(self.sq[old]);
                target.square_index(image.as_str()).ok_or_else(|| Error::ImageEscape {
                    square: q.to_string(),
                    image: image.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DoubleFunctor {
            source: source.clone(),
            target: target.clone(),
            obj: self.obj.clone(),
            vmor: self.vmor.clone(),
            hmor: self.hmor.clone(),
            sq,
        })
    }
}

pub fn validate_double_functor(f: &DoubleFunctor) -> ValidationReport {
    f.validate()
}

fn require_valid_functor(f: &DoubleFunctor) -> Result<()> {
    for (what, r) in [
        ("source", f.source.validate()),
        ("target", f.target.validate()),
        ("double functor", f.validate()),
    ] {
        if !r.ok() {
            return Err(invalid(format!(
                "{what} fails {} axiom check(s)",
                r.violations().len()
            )));
        }
    }
    Ok(())
}

/// The inclusion `ε_C: γC → C`.
pub fn epsilon(c: &FinDoubleCategory) -> Result<DoubleFunctor> {
    let g = crate::gg::gamma(c)?;
    DoubleFunctor::inclusion(&g, c)
}

/// Restriction of `f` to the globularily generated pieces.
pub fn gamma_functor(f: &DoubleFunctor) -> Result<DoubleFunctor> {
    require_valid_functor(f)?;
    let gs = GammaAnalysis::compute(&f.source);
    let gt = GammaAnalysis::compute(&f.target);
    f.restrict(gs.gamma(), gt.gamma())
}

/// `Vₙ` with levels beyond stabilization read as the limit.
fn v_at(a: &GammaAnalysis, n: usize) -> BTreeSet<usize> {
    a.v_level(n.min(a.stable_at())).expect("clamped level")
}

fn h_at(a: &GammaAnalysis, n: usize) -> BTreeSet<usize> {
    a.h_level(n.min(a.stable_at())).expect("clamped level")
}

/// Checks `F(Vₙ) ⊆ Vₙ` and `F(Hₙ) ⊆ Hₙ` for every level up to the later
/// stabilization of source and target.
pub fn check_filtration_preservation(f: &DoubleFunctor) -> Result<ValidationReport> {
    require_valid_functor(f)?;
    let gs = GammaAnalysis::compute(&f.source);
    let gt = GammaAnalysis::compute(&f.target);
    let top = gs.stable_at().max(gt.stable_at());
    let mut out = Vec::new();
    for n in 1..=top {
        for (name, src, tgt) in [
            ("V", v_at(&gs, n), v_at(&gt, n)),
            ("H", h_at(&gs, n), h_at(&gt, n)),
        ] {
            for q in src {
                let image = f.sq[q];
                if !tgt.contains(&image) {
                    out.push(Violation::new(
                        "filtration-containment",
                        [f.source.square(q).clone()],
                        format!("image in {name}{n}"),
                        f.target.square(image).to_string(),
                    ));
                }
            }
        }
    }
    Ok(ValidationReport::from_violations(out))
}

/// `Vₙ` as a wide subcategory of the category of horizontal morphisms and
/// squares.
fn level_category(a: &GammaAnalysis, n: usize) -> FinCategory {
    a.source()
        .c1()
        .subcategory(&v_at(a, n))
        .expect("each level is a subcategory")
}

/// The inclusion `Vₘ → Vₙ` for `m ≤ n ≤ N`.
pub fn level_inclusion(a: &GammaAnalysis, m: usize, n: usize) -> Result<CatFunctor> {
    if m == 0 || m > n || n > a.stable_at() {
        return Err(Error::LevelOutOfRange {
            level: if n > a.stable_at() { n } else { m },
            stable_at: a.stable_at(),
        });
    }
    CatFunctor::inclusion(&level_category(a, m), &level_category(a, n))
}

/// The restriction `Vₙ^C → Vₙ^D` of the morphism functor.
pub fn restrict_vertical_functor(f: &DoubleFunctor, n: usize) -> Result<CatFunctor> {
    require_valid_functor(f)?;
    let gs = GammaAnalysis::compute(&f.source);
    let gt = GammaAnalysis::compute(&f.target);
    if n == 0 || n > gs.stable_at() {
        return Err(Error::LevelOutOfRange {
            level: n,
            stable_at: gs.stable_at(),
        });
    }
    let src = level_category(&gs, n);
    let tgt = level_category(&gt, n);
    let mor = src
        .morphisms()
        .iter()
        .map(|q| {
            let image = f.target.square(f.sq[f.source.square_index(q.as_str()).expect("level square")]);
            tgt.morphism_index(image.as_str()).ok_or_else(|| Error::ImageEscape {
                square: q.to_string(),
                image: image.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CatFunctor::from_indices(src, tgt, f.hmor.clone(), mor))
}

/// Vertical morphisms to vertical morphisms, squares to squares, as a
/// functor of transversal categories.
pub fn transversal_functor(f: &DoubleFunctor) -> Result<CatFunctor> {
    require_valid_functor(f)?;
    Ok(CatFunctor::from_indices(
        transversal_unchecked(&f.source),
        transversal_unchecked(&f.target),
        f.vmor.clone(),
        f.sq.clone(),
    ))
}

fn compare_functors(
    axiom: &str,
    lhs: &DoubleFunctor,
    rhs: &DoubleFunctor,
    out: &mut Vec<Violation>,
) {
    let (l, r) = (lhs.to_presentation(), rhs.to_presentation());
    for (a, b) in [
        (&l.objects, &r.objects),
        (&l.vertical, &r.vertical),
        (&l.horizontal, &r.horizontal),
        (&l.squares, &r.squares),
    ] {
        if a.len() != b.len() {
            out.push(Violation::new(axiom, [], format!("{} cells", b.len()), format!("{} cells", a.len())));
            continue;
        }
        for ((x, fx), (y, gy)) in a.iter().zip(b) {
            if x != y {
                out.push(Violation::new(axiom, [], y.clone(), x.clone()));
            } else if fx != gy {
                let id = Id::new(x.clone()).expect("declared token");
                out.push(Violation::new(axiom, [id], gy.clone(), fx.clone()));
            }
        }
    }
}

/// Checks `ε_D ∘ γF = F ∘ ε_C` for a supplied restriction `gamma_f`.
pub fn check_epsilon_square(f: &DoubleFunctor, gamma_f: &DoubleFunctor) -> Result<ValidationReport> {
    let eps_c = epsilon(&f.source)?;
    let eps_d = epsilon(&f.target)?;
    let lhs = eps_d.after(gamma_f)?;
    let rhs = f.after(&eps_c)?;
    let mut out = Vec::new();
    compare_functors("epsilon-naturality", &lhs, &rhs, &mut out);
    Ok(ValidationReport::from_violations(out))
}

/// Naturality of the inclusions `γC → C` along `f` and the triangle
/// identities `γ(ε_C) = id` and `ε_{γC} = id` at source and target.
pub fn check_epsilon_naturality(f: &DoubleFunctor) -> Result<ValidationReport> {
    let gf = gamma_functor(f)?;
    let mut report = check_epsilon_square(f, &gf)?;
    let mut out = Vec::new();
    for c in [&f.source, &f.target] {
        let eps = epsilon(c)?;
        let g = eps.source().clone();
        let id = DoubleFunctor::identity(&g);
        compare_functors("triangle-identity", &gamma_functor(&eps)?, &id, &mut out);
        compare_functors("triangle-identity", &epsilon(&g)?, &id, &mut out);
    }
    report = report.merge(ValidationReport::from_violations(out));
    Ok(report)
}

/// The factorization `F̃: D → γC` of `F: D → C` through `ε_C`, for a
/// globularily generated `D`.
pub fn universal_lift(d: &FinDoubleCategory, f: &DoubleFunctor) -> Result<DoubleFunctor> {
    if &f.source != d {
        return Err(invalid("functor source differs from the given double category"));
    }
    require_valid_functor(f)?;
    if !GammaAnalysis::compute(d).is_globularily_generated() {
        return Err(invalid("source is not globularily generated"));
    }
    let g = GammaAnalysis::compute(&f.target);
    f.restrict(d, g.gamma())
}

/// Token components of a double natural transformation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TransformationPresentation {
    /// `(object, vertical morphism of the target)`
    pub eta0: Vec<(String, String)>,
    /// `(horizontal morphism, square of the target)`
    pub eta1: Vec<(String, String)>,
}

/// A strict double natural transformation between parallel double
/// functors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleNaturalTransformation {
    src_f: DoubleFunctor,
    tgt_f: DoubleFunctor,
    eta0: Vec<usize>,
    eta1: Vec<usize>,
}

impl DoubleNaturalTransformation {
    pub fn from_maps(
        src_f: DoubleFunctor,
        tgt_f: DoubleFunctor,
        p: &TransformationPresentation,
    ) -> Result<DoubleNaturalTransformation> {
        if src_f.source != tgt_f.source || src_f.target != tgt_f.target {
            return Err(invalid("transformation between non-parallel functors"));
        }
        let (c, d) = (&src_f.source, &src_f.target);
        let eta0 = total_map_by_index(c.objects(), d.vertical_morphisms(), &p.eta0, "object")?;
        let eta1 = total_map_by_index(c.hmors(), d.squares(), &p.eta1, "horizontal morphism")?;
        Ok(DoubleNaturalTransformation {
            src_f,
            tgt_f,
            eta0,
            eta1,
        })
    }

    pub(crate) fn from_indices(
        src_f: DoubleFunctor,
        tgt_f: DoubleFunctor,
        eta0: Vec<usize>,
        eta1: Vec<usize>,
    ) -> DoubleNaturalTransformation {
        DoubleNaturalTransformation {
            src_f,
            tgt_f,
            eta0,
            eta1,
        }
    }

    pub fn to_presentation(&self) -> TransformationPresentation {
        let (c, d) = (&self.src_f.source, &self.src_f.target);
        TransformationPresentation {
            eta0: self
                .eta0
                .iter()
                .enumerate()
                .map(|(x, &f)| (c.objects()[x].to_string(), d.vertical_morphisms()[f].to_string()))
                .collect(),
            eta1: self
                .eta1
                .iter()
                .enumerate()
                .map(|(a, &q)| (c.hmor(a).to_string(), d.square(q).to_string()))
                .collect(),
        }
    }

    pub fn identity(f: &DoubleFunctor) -> DoubleNaturalTransformation {
        let d = &f.target;
        DoubleNaturalTransformation {
            src_f: f.clone(),
            tgt_f: f.clone(),
            eta0: f.obj.iter().map(|&x| d.c0().identity(x)).collect(),
            eta1: f.hmor.iter().map(|&a| d.vid(a)).collect(),
        }
    }

    pub fn src_functor(&self) -> &DoubleFunctor {
        &self.src_f
    }

    pub fn tgt_functor(&self) -> &DoubleFunctor {
        &self.tgt_f
    }

    pub fn component0(&self, x: usize) -> usize {
        self.eta0[x]
    }

    pub fn component1(&self, a: usize) -> usize {
        self.eta1[a]
    }

    pub fn validate(&self) -> ValidationReport {
        let (c, d) = (&self.src_f.source, &self.src_f.target);
        let (f, g) = (&self.src_f, &self.tgt_f);
        let d0 = d.c0();
        let vm = |m: usize| d.vertical_morphisms()[m].to_string();
        let opt_vm = |m: Option<usize>| m.map_or_else(|| "undefined".to_string(), vm);
        let opt_sq = |q: Option<usize>| q.map_or_else(|| "undefined".to_string(), |q| d.square(q).to_string());
        let mut out = Vec::new();
        for x in 0..c.objects().len() {
            let e = self.eta0[x];
            if d0.src(e) != f.obj[x] || d0.tgt(e) != g.obj[x] {
                out.push(Violation::new(
                    "eta0-typing",
                    [c.objects()[x].clone()],
                    format!("{}->{}", d.objects()[f.obj[x]], d.objects()[g.obj[x]]),
                    format!("{}->{}", d.objects()[d0.src(e)], d.objects()[d0.tgt(e)]),
                ));
            }
        }
        for m in 0..c.vertical_morphisms().len() {
            let (x, y) = (c.c0().src(m), c.c0().tgt(m));
            let lhs = d0.compose(g.vmor[m], self.eta0[x]);
            let rhs = d0.compose(self.eta0[y], f.vmor[m]);
            if lhs != rhs || lhs.is_none() {
                out.push(Violation::new(
                    "eta0-naturality",
                    [c.vertical_morphisms()[m].clone()],
                    opt_vm(rhs),
                    opt_vm(lhs),
                ));
            }
        }
        for a in 0..c.hmor_count() {
            let q = self.eta1[a];
            let want = (f.hmor[a], g.hmor[a], self.eta0[c.hsrc(a)], self.eta0[c.htgt(a)]);
            let got = (d.dom(q), d.cod(q), d.vsrc(q), d.vtgt(q));
            if want != got {
                out.push(Violation::new(
                    "eta1-typing",
                    [c.hmor(a).clone(), d.square(q).clone()],
                    format!("{}=>{} [{}|{}]", d.hmor(want.0), d.hmor(want.1), vm(want.2), vm(want.3)),
                    format!("{}=>{} [{}|{}]", d.hmor(got.0), d.hmor(got.1), vm(got.2), vm(got.3)),
                ));
            }
        }
        for q in 0..c.square_count() {
            let lhs = d.vcomp(g.sq[q], self.eta1[c.dom(q)]);
            let rhs = d.vcomp(self.eta1[c.cod(q)], f.sq[q]);
            if lhs != rhs || lhs.is_none() {
                out.push(Violation::new(
                    "eta1-naturality",
                    [c.square(q).clone()],
                    opt_sq(rhs),
                    opt_sq(lhs),
                ));
            }
        }
        for x in 0..c.objects().len() {
            let want = d.hid_vmor(self.eta0[x]);
            let got = self.eta1[c.hid_obj(x)];
            if want != got {
                out.push(Violation::new(
                    "eta-unit",
                    [c.objects()[x].clone()],
                    d.square(want).to_string(),
                    d.square(got).to_string(),
                ));
            }
        }
        for ((b, a), r) in c.horizontal_compositions() {
            let want = d.hcomp_sq(self.eta1[b], self.eta1[a]);
            if want != Some(self.eta1[r]) {
                out.push(Violation::new(
                    "eta-hcomp",
                    [c.hmor(b).clone(), c.hmor(a).clone()],
                    opt_sq(want),
                    d.square(self.eta1[r]).to_string(),
                ));
            }
        }
        ValidationReport::from_violations(out)
    }

    /// `other · self` for `self: F ⇒ G` and `other: G ⇒ K`.
    pub fn then(&self, other: &DoubleNaturalTransformation) -> Result<DoubleNaturalTransformation> {
        if self.tgt_f != other.src_f {
            return Err(invalid("transformations are not vertically composable"));
        }
        let d = &self.src_f.target;
        let eta0 = (0..self.eta0.len())
            .map(|x| d.c0().compose(other.eta0[x], self.eta0[x]))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| invalid("object components do not compose"))?;
        let eta1 = (0..self.eta1.len())
            .map(|a| d.vcomp(other.eta1[a], self.eta1[a]))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| invalid("morphism components do not compose"))?;
        Ok(DoubleNaturalTransformation {
            src_f: self.src_f.clone(),
            tgt_f: other.tgt_f.clone(),
            eta0,
            eta1,
        })
    }

    /// Horizontal composite `other ∗ self` for `self: F ⇒ G: C → D` and
    /// `other: F' ⇒ G': D → E`, with components `other_{G x} ∘ F'(self_x)`.
    pub fn beside(&self, other: &DoubleNaturalTransformation) -> Result<DoubleNaturalTransformation> {
        if self.src_f.target != other.src_f.source {
            return Err(invalid("transformations are not horizontally composable"));
        }
        let (f, g) = (&self.src_f, &self.tgt_f);
        let (f2, g2) = (&other.src_f, &other.tgt_f);
        let e = &f2.target;
        let eta0 = (0..self.eta0.len())
            .map(|x| e.c0().compose(other.eta0[g.obj[x]], f2.vmor[self.eta0[x]]))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| invalid("object components do not compose"))?;
        let eta1 = (0..self.eta1.len())
            .map(|a| e.vcomp(other.eta1[g.hmor[a]], f2.sq[self.eta1[a]]))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| invalid("morphism components do not compose"))?;
        Ok(DoubleNaturalTransformation {
            src_f: f2.after(f)?,
            tgt_f: g2.after(g)?,
            eta0,
            eta1,
        })
    }
}

/// True iff every morphism component lies in the globularily generated
/// piece of the target.
pub fn is_gg_transformation(eta: &DoubleNaturalTransformation) -> Result<bool> {
    require_valid_functor(&eta.src_f)?;
    require_valid_functor(&eta.tgt_f)?;
    if !eta.validate().ok() {
        return Err(invalid("transformation fails validation"));
    }
    let g = GammaAnalysis::compute(&eta.src_f.target);
    Ok(eta.eta1.iter().all(|&q| g.is_member(q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{
        gen_commuting_squares, gen_poset_category, gen_sq_functor, gen_sq_transformation,
        gen_trivial, idempotent_monoid, poset_functors, PosetSpec,
    };

    fn sq(k: &PosetSpec) -> FinDoubleCategory {
        gen_commuting_squares(&gen_poset_category(k).unwrap()).unwrap()
    }

    #[test]
    fn identity_functor_checks() {
        let c = sq(&PosetSpec::chain(2));
        let id = DoubleFunctor::identity(&c);
        assert!(id.validate().ok());
        assert_eq!(gamma_functor(&id).unwrap(), DoubleFunctor::identity(&crate::gg::gamma(&c).unwrap()));
        assert!(check_filtration_preservation(&id).unwrap().ok());
        assert!(check_epsilon_naturality(&id).unwrap().ok());
        let t = transversal_functor(&id).unwrap();
        assert_eq!(t, CatFunctor::identity(&transversal_unchecked(&c)));
        let v1 = restrict_vertical_functor(&id, 1).unwrap();
        assert!(v1.validate().ok());
        assert!(matches!(
            restrict_vertical_functor(&id, 2),
            Err(Error::LevelOutOfRange { level: 2, stable_at: 1 })
        ));
    }

    #[test]
    fn broken_s_commutation_is_named() {
        let c = sq(&PosetSpec::chain(2));
        let mut p = DoubleFunctor::identity(&c).to_presentation();
        // send i(0<1) to the identity square of 0<1
        for e in &mut p.squares {
            if e.0 == "id_0|0<1|0<1|id_1" {
                e.1 = "0<1|id_0|id_1|0<1".into();
            }
        }
        let f = DoubleFunctor::from_maps(c.clone(), c, &p).unwrap();
        let r = f.validate();
        assert!(r.names("s-commutation"), "{:?}", r.violations());
    }

    #[test]
    fn sq_functors_between_small_posets() {
        let posets = PosetSpec::all_up_to(2);
        for k in &posets {
            for l in &posets {
                for u in poset_functors(k, l) {
                    let f = gen_sq_functor(&u).unwrap();
                    assert!(f.validate().ok());
                    assert!(check_filtration_preservation(&f).unwrap().ok());
                    assert!(check_epsilon_naturality(&f).unwrap().ok());
                    let gf = gamma_functor(&f).unwrap();
                    for x in 0..f.source().vertical_morphisms().len() {
                        let h = f.source().square(f.source().hid_vmor(x));
                        let want = f.target().square(f.target().hid_vmor(f.map_vertical(x)));
                        assert_eq!(gf.square_image(h.as_str()), Some(want));
                    }
                }
            }
        }
    }

    #[test]
    fn corrupted_gamma_functor_is_caught() {
        let k = PosetSpec::chain(2);
        let c = sq(&k);
        let f = DoubleFunctor::identity(&c);
        let gf = gamma_functor(&f).unwrap();
        let mut p = gf.to_presentation();
        p.squares[0].1 = p.squares[1].1.clone();
        let bad = DoubleFunctor::from_maps(gf.source().clone(), gf.target().clone(), &p).unwrap();
        let r = check_epsilon_square(&f, &bad).unwrap();
        assert!(r.names("epsilon-naturality"));
    }

    #[test]
    fn lift_of_inclusion_is_identity() {
        let c = sq(&PosetSpec::chain(2));
        let eps = epsilon(&c).unwrap();
        let g = eps.source().clone();
        let lift = universal_lift(&g, &eps).unwrap();
        assert_eq!(lift, DoubleFunctor::identity(&g));
        assert_eq!(epsilon(&c).unwrap().after(&lift).unwrap(), eps);
        assert!(universal_lift(&c, &DoubleFunctor::identity(&c)).is_err());
    }

    #[test]
    fn transformations() {
        let c = sq(&PosetSpec::chain(2));
        let id = DoubleFunctor::identity(&c);
        let eta = DoubleNaturalTransformation::identity(&id);
        assert!(eta.validate().ok());
        assert!(is_gg_transformation(&eta).unwrap());
        // the arrow 0 → 1 as a transformation between the constant functors
        let k = PosetSpec::chain(2);
        let (u, v, alpha) = crate::gen::constant_transformation(&k, &k, 0, 1).unwrap();
        let t = gen_sq_transformation(&u, &v, &alpha).unwrap();
        assert!(t.validate().ok(), "{:?}", t.validate().violations());
        // its components are horizontal identities of the arrow
        assert!(is_gg_transformation(&t).unwrap());
        let t2 = DoubleNaturalTransformation::identity(t.tgt_functor());
        assert_eq!(t.then(&t2).unwrap(), t);
    }

    #[test]
    fn transformations_into_trivial_are_gg() {
        let c = gen_trivial(&idempotent_monoid()).unwrap();
        let id = DoubleFunctor::identity(&c);
        let eta = DoubleNaturalTransformation::identity(&id);
        assert!(is_gg_transformation(&eta).unwrap());
    }
}

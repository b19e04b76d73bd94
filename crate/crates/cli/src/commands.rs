use std::io::Write;
use std::path::Path;

use dblcat_core::bicat::decorated_horizontalization;
use dblcat_core::findim::fragments::{self, converse_alarms};
use dblcat_core::findim::{check_prop_6_4_forward, AlgFragment};
use dblcat_core::functors::{
    check_epsilon_naturality, check_filtration_preservation, epsilon, gamma_functor, is_gg_transformation, universal_lift,
};
use dblcat_core::gen::{self, PosetSpec};
use dblcat_core::gg::{check_cor_4_5, check_lemma_4_6, check_prop_4_4, nonglobular_members};
use dblcat_core::{
    DoubleFunctor, Error, Fin2Category, FinDoubleCategory, GammaAnalysis, Id, ValidationReport, Violation,
};

use crate::{emit, load, CliError, Document, GenKind, Suite, TwoCategorySource, EXIT_FAILED, EXIT_OK};

fn put(out: &mut dyn Write, line: &str) -> Result<(), CliError> {
    writeln!(out, "{line}").map_err(|e| CliError::Io {
        path: "<stdout>".into(),
        message: e.to_string(),
    })
}

fn print_report(out: &mut dyn Write, report: &ValidationReport) -> Result<(), CliError> {
    for v in report.violations() {
        put(out, &v.to_string())?;
    }
    Ok(())
}

fn exit_for(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

fn require_double(doc: &Document, what: &str) -> Result<FinDoubleCategory, CliError> {
    doc.as_double()?
        .ok_or_else(|| CliError::Malformed(format!("{what} needs a double category, got {}", doc.kind())))
}

fn require_valid(c: &FinDoubleCategory) -> Result<(), CliError> {
    let report = c.validate();
    if report.ok() {
        Ok(())
    } else {
        Err(CliError::Malformed(format!(
            "input fails {} axiom check(s); run validate for details",
            report.violations().len()
        )))
    }
}

/// Algebra, bimodule and equivariance laws of every tag, then consistency
/// of the tagging with the fragment's structure.
fn findim_report(frag: &AlgFragment) -> ValidationReport {
    let mut report = frag.double.validate();
    let mut out = Vec::new();
    for (name, t) in &frag.tags {
        let id = || Id::new(name.clone()).ok();
        for (side, m) in [("source", &t.source), ("target", &t.target)] {
            for (which, a) in [("left", m.left()), ("right", m.right())] {
                if !a.is_valid() {
                    out.push(Violation::new("algebra-laws", id(), "associative unital algebra", format!("{side} {which} algebra")));
                }
            }
            if !m.is_valid() {
                out.push(Violation::new("bimodule-laws", id(), "bimodule", format!("{side} bimodule")));
            }
        }
        match t.is_equivariant() {
            Ok(true) => {}
            Ok(false) => out.push(Violation::new("equivariance", id(), "equivariant", "not equivariant")),
            Err(e) => out.push(Violation::new("equivariance", id(), "equivariant", e.to_string())),
        }
    }
    if report.ok() && out.is_empty() {
        if let Err(e) = check_prop_6_4_forward(&frag.double, &frag.tags) {
            out.push(Violation::new("tagging", [], "consistent tags", e.to_string()));
        }
    }
    report = report.merge(ValidationReport::from_violations(out));
    report
}

pub fn validate(doc: &Document, out: &mut dyn Write) -> Result<i32, CliError> {
    let report = match doc {
        Document::DoubleCategory(b) => b.build()?.validate(),
        Document::GammaReport(r) => r.gamma.build()?.validate(),
        Document::TwoCategory(b) => b.build()?.validate(),
        Document::Decorated(b) => b.build()?.validate(),
        Document::Functor(b) => b.build()?.validate(),
        Document::Transformation(b) => b.build()?.validate(),
        Document::Findim(b) => findim_report(&b.build()?),
    };
    print_report(out, &report)?;
    Ok(exit_for(report.ok()))
}

pub fn gamma(
    doc: &Document,
    lengths: bool,
    witnesses: bool,
    dest: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let c = require_double(doc, "gamma")?;
    let a = GammaAnalysis::new(&c)?;
    put(
        out,
        &format!(
            "gg={} squares={} gamma={} stable_at={}",
            a.is_globularily_generated(),
            c.square_count(),
            a.gamma().square_count(),
            a.stable_at()
        ),
    )?;
    let report = Document::gamma_report(&a, lengths, witnesses);
    if let Document::GammaReport(r) = &report {
        for (q, n) in r.lengths.iter().flatten() {
            put(out, &format!("length\t{q}\t{n}"))?;
        }
        for (q, w) in r.witnesses.iter().flatten() {
            put(out, &format!("witness\t{q}\t{w}"))?;
        }
    }
    if let Some(p) = dest {
        emit(&report, Some(p), out)?;
    }
    Ok(EXIT_OK)
}

struct Outcome {
    ok: bool,
    detail: String,
    report: ValidationReport,
}

impl Outcome {
    fn from_report(report: ValidationReport, detail: impl Into<String>) -> Outcome {
        let ok = report.ok();
        let detail = if ok {
            detail.into()
        } else {
            format!("{} violation(s)", report.violations().len())
        };
        Outcome { ok, detail, report }
    }
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Axioms => "axioms",
        Suite::Prop44 => "prop44",
        Suite::Cor45 => "cor45",
        Suite::Lemma46 => "lemma46",
        Suite::Lemma51 => "lemma51",
        Suite::Prop36 => "prop36",
        Suite::Prop64 => "prop64",
        Suite::All => "all",
    }
}

fn run_suite(s: Suite, c: &FinDoubleCategory, frag: Option<&AlgFragment>) -> Result<Outcome, CliError> {
    Ok(match s {
        Suite::Axioms => {
            let report = frag.map_or_else(|| c.validate(), findim_report);
            Outcome::from_report(report, format!("squares={}", c.square_count()))
        }
        Suite::Prop44 => {
            let a = GammaAnalysis::new(c)?;
            let members = nonglobular_members(&a);
            let names: Vec<&str> = members.iter().map(Id::as_str).collect();
            Outcome::from_report(
                check_prop_4_4(c)?,
                format!("nonglobular={} [{}]", members.len(), names.join(",")),
            )
        }
        Suite::Cor45 => {
            let a = GammaAnalysis::new(c)?;
            Outcome::from_report(check_cor_4_5(c)?, format!("gamma={}", a.gamma().square_count()))
        }
        Suite::Lemma46 => {
            let a = GammaAnalysis::new(c)?;
            let replayed = a.members().into_iter().filter(|&q| a.vlength(q) == Some(1)).count();
            Outcome::from_report(check_lemma_4_6(c)?, format!("replayed={replayed}"))
        }
        Suite::Lemma51 => {
            let id = DoubleFunctor::identity(c);
            let eps = epsilon(c)?;
            let mut report = check_filtration_preservation(&id)?.merge(check_filtration_preservation(&eps)?);
            for f in [&id, &eps] {
                if let Err(e) = gamma_functor(f) {
                    report = report.merge(ValidationReport::from_violations(vec![Violation::new(
                        "gamma-restriction",
                        [],
                        "restriction exists",
                        e.to_string(),
                    )]));
                }
            }
            Outcome::from_report(report, "functors=identity,epsilon")
        }
        Suite::Prop36 => {
            let report = check_epsilon_naturality(&DoubleFunctor::identity(c))?.merge(check_epsilon_naturality(&epsilon(c)?)?);
            Outcome::from_report(report, "functors=identity,epsilon")
        }
        Suite::Prop64 => {
            let frag = frag.ok_or_else(|| CliError::Malformed("prop64 needs a findim document".into()))?;
            let report = check_prop_6_4_forward(c, &frag.tags)?;
            let alarms = converse_alarms(c, &frag.tags)?;
            let alarm_report = ValidationReport::from_violations(
                alarms
                    .into_iter()
                    .map(|q| Violation::new("converse-alarm", [q], "2-subcyclic tag", "tag is not 2-subcyclic"))
                    .collect(),
            );
            Outcome::from_report(report.merge(alarm_report), format!("tagged={}", frag.tags.len()))
        }
        Suite::All => unreachable!("expanded by the caller"),
    })
}

pub fn check(doc: &Document, suite: Suite, out: &mut dyn Write) -> Result<i32, CliError> {
    let (c, frag) = match doc {
        Document::Findim(b) => {
            let frag = b.build()?;
            (frag.double.clone(), Some(frag))
        }
        _ => (require_double(doc, "check")?, None),
    };
    let suites: Vec<Suite> = match suite {
        Suite::All => {
            let mut v = vec![
                Suite::Axioms,
                Suite::Prop44,
                Suite::Cor45,
                Suite::Lemma46,
                Suite::Lemma51,
                Suite::Prop36,
            ];
            if frag.is_some() {
                v.push(Suite::Prop64);
            }
            v
        }
        s => vec![s],
    };
    let mut axioms = Some(run_suite(Suite::Axioms, &c, frag.as_ref())?);
    let failed = axioms.as_ref().filter(|a| !a.ok);
    if let Some(axioms) = failed.filter(|_| suites != [Suite::Axioms]) {
        return Err(CliError::Malformed(format!(
            "input fails {} axiom check(s); run validate for details",
            axioms.report.violations().len()
        )));
    }
    let mut all_ok = true;
    for s in suites {
        let o = match axioms.take().filter(|_| s == Suite::Axioms) {
            Some(o) => o,
            None => run_suite(s, &c, frag.as_ref())?,
        };
        all_ok &= o.ok;
        put(out, &format!("{}\t{}\t{}", suite_name(s), if o.ok { "pass" } else { "fail" }, o.detail))?;
        print_report(out, &o.report)?;
    }
    Ok(exit_for(all_ok))
}

fn parse_size(text: &str, what: &str) -> Result<usize, CliError> {
    let n: usize = text
        .parse()
        .map_err(|_| CliError::Malformed(format!("{what}: expected a size, got {text:?}")))?;
    if n == 0 || n > 6 {
        return Err(CliError::Malformed(format!("{what}: size must be between 1 and 6")));
    }
    Ok(n)
}

/// `chainN`, `antichainN`, `diamond`, or `N:i<j,...`.
pub fn parse_poset(text: &str) -> Result<PosetSpec, CliError> {
    if text == "diamond" {
        return Ok(PosetSpec::diamond());
    }
    if let Some(n) = text.strip_prefix("antichain") {
        return Ok(PosetSpec::antichain(parse_size(n, "antichain")?));
    }
    if let Some(n) = text.strip_prefix("chain") {
        return Ok(PosetSpec::chain(parse_size(n, "chain")?));
    }
    let (size, pairs) = text
        .split_once(':')
        .ok_or_else(|| CliError::Malformed(format!("unknown poset {text:?}")))?;
    let size = parse_size(size, "poset")?;
    let pairs = pairs
        .split(',')
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (i, j) = p
                .split_once('<')
                .ok_or_else(|| CliError::Malformed(format!("expected i<j, got {p:?}")))?;
            let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| CliError::Malformed(format!("bad element {s:?}")));
            Ok((parse(i)?, parse(j)?))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(PosetSpec::new(size, pairs)?)
}

/// `terminal`, `idempotent`, `maxN` or `truncN` with `1 ≤ N ≤ 6`.
pub fn builtin_two_category(name: &str) -> Result<Fin2Category, CliError> {
    match name {
        "terminal" => return Ok(gen::terminal()),
        "idempotent" => return Ok(gen::idempotent_monoid()),
        _ => {}
    }
    if let Some(n) = name.strip_prefix("max") {
        return Ok(gen::max_monoid(parse_size(n, "max")?));
    }
    if let Some(n) = name.strip_prefix("trunc") {
        return Ok(gen::truncated_addition(parse_size(n, "trunc")?));
    }
    Err(CliError::Malformed(format!("unknown built-in 2-category {name:?}")))
}

fn two_category(source: &TwoCategorySource) -> Result<Fin2Category, CliError> {
    if let Some(name) = &source.builtin {
        return builtin_two_category(name);
    }
    let path = source
        .two_cat
        .as_deref()
        .ok_or_else(|| CliError::Malformed("either --two-cat or --builtin is required".into()))?;
    match load(path)? {
        Document::TwoCategory(b) => b.build(),
        other => Err(CliError::Malformed(format!("expected a two_category document, got {}", other.kind()))),
    }
}

fn fragment(name: &str) -> Result<AlgFragment, CliError> {
    Ok(match name {
        "scalar" => fragments::scalar_fragment()?,
        "swap" => fragments::swap_fragment()?,
        "frobenius" => fragments::frobenius_fragment()?,
        "formal" => fragments::formal_square_fragment()?,
        _ => return Err(CliError::Malformed(format!("unknown fragment {name:?}"))),
    })
}

pub fn gen(kind: GenKind, out: &mut dyn Write) -> Result<i32, CliError> {
    let (doc, dest) = match kind {
        GenKind::Sq { poset, output } => {
            let k = gen::gen_poset_category(&parse_poset(&poset)?)?;
            (Document::double(&gen::gen_commuting_squares(&k)?), output.out)
        }
        GenKind::Trivial { source, output } => (Document::double(&gen::gen_trivial(&two_category(&source)?)?), output.out),
        GenKind::Quintet { source, output } => (Document::double(&gen::gen_quintet(&two_category(&source)?)?), output.out),
        GenKind::Product { a, b, output } => {
            let (c, d) = (require_double(&load(&a)?, "product")?, require_double(&load(&b)?, "product")?);
            require_valid(&c)?;
            require_valid(&d)?;
            (Document::double(&gen::gen_product(&c, &d)?), output.out)
        }
        GenKind::TwoCat { builtin, output } => (Document::two_category(&builtin_two_category(&builtin)?), output.out),
        GenKind::SqFunctor { from, to, objects, output } => {
            let (k, l) = (parse_poset(&from)?, parse_poset(&to)?);
            let images = objects
                .split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|_| CliError::Malformed(format!("bad object image {s:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            if images.len() != k.size() {
                return Err(CliError::Malformed(format!("expected {} object images", k.size())));
            }
            let u = gen::poset_functors(&k, &l)
                .into_iter()
                .find(|u| (0..k.size()).all(|x| u.map_object(x) == images[x]))
                .ok_or_else(|| CliError::Malformed("object images are not a monotone map".into()))?;
            (Document::functor(&gen::gen_sq_functor(&u)?), output.out)
        }
        GenKind::Fragment { name, output } => (Document::findim(&fragment(&name)?), output.out),
        GenKind::Corpus { dir } => {
            std::fs::create_dir_all(&dir).map_err(|e| CliError::io(&dir, e))?;
            let corpus = gen::corpus();
            for (name, c) in &corpus {
                let path = dir.join(format!("{name}.json"));
                emit(&Document::double(c), Some(&path), out)?;
            }
            put(out, &format!("wrote\t{}", corpus.len()))?;
            return Ok(EXIT_OK);
        }
    };
    emit(&doc, dest.as_deref(), out)?;
    Ok(EXIT_OK)
}

pub fn hstar(doc: &Document, dest: Option<&Path>, out: &mut dyn Write) -> Result<i32, CliError> {
    let c = require_double(doc, "hstar")?;
    require_valid(&c)?;
    emit(&Document::decorated(&decorated_horizontalization(&c)?), dest, out)?;
    Ok(EXIT_OK)
}

fn same_maps(f: &DoubleFunctor, g: &DoubleFunctor) -> bool {
    f.source() == g.source() && f.target() == g.target() && f.to_presentation() == g.to_presentation()
}

pub fn functor_check(
    doc: &Document,
    lemma51: bool,
    prop36: bool,
    universal: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let f = match doc {
        Document::Functor(b) => b.build()?,
        Document::Transformation(b) => {
            let t = b.build()?;
            let report = t.validate();
            if !report.ok() {
                print_report(out, &report)?;
                return Ok(EXIT_FAILED);
            }
            put(out, &format!("gg-transformation\t{}", is_gg_transformation(&t)?))?;
            return Ok(EXIT_OK);
        }
        other => return Err(CliError::Malformed(format!("functor-check needs a functor, got {}", other.kind()))),
    };
    let report = f.validate();
    if !report.ok() {
        return Err(CliError::Malformed(format!(
            "functor fails {} axiom check(s); run validate for details",
            report.violations().len()
        )));
    }
    let mut all_ok = true;
    let mut line = |out: &mut dyn Write, name: &str, o: Outcome| -> Result<(), CliError> {
        all_ok &= o.ok;
        put(out, &format!("{name}\t{}\t{}", if o.ok { "pass" } else { "fail" }, o.detail))?;
        print_report(out, &o.report)
    };
    if lemma51 {
        line(out, "lemma51", Outcome::from_report(check_filtration_preservation(&f)?, "levels preserved"))?;
    }
    if prop36 {
        line(out, "prop36", Outcome::from_report(check_epsilon_naturality(&f)?, "epsilon natural, triangles hold"))?;
    }
    if universal {
        if !GammaAnalysis::new(f.source())?.is_globularily_generated() {
            put(out, "universal\tskip\tsource is not globularily generated")?;
        } else {
            let outcome = match universal_lift(f.source(), &f) {
                Ok(lift) => {
                    let back = epsilon(f.target())?.after(&lift)?;
                    let ok = same_maps(&back, &f);
                    let v = (!ok).then(|| Violation::new("universal-factorization", [], "epsilon after lift equals the functor", "differs"));
                    Outcome::from_report(ValidationReport::from_violations(v.into_iter().collect()), "lift factors the functor")
                }
                Err(e @ Error::ImageEscape { .. }) => Outcome::from_report(
                    ValidationReport::from_violations(vec![Violation::new("image-escape", [], "image inside gamma", e.to_string())]),
                    "",
                ),
                Err(e) => return Err(e.into()),
            };
            line(out, "universal", outcome)?;
        }
    }
    Ok(exit_for(all_ok))
}

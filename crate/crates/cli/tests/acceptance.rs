//! Acceptance criteria 1 to 10, one `PASS`/`FAIL` line each.
//!
//! Runs without the libtest harness so the lines are always shown. The
//! process exits non-zero when a criterion fails other than those listed in
//! `KNOWN_FAILURES`, whose failure is established and documented in the
//! README; a known failure that starts passing is also reported as an error.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::time::{Duration, Instant};

use dblcat::format::DoubleBody;
use dblcat::Document;
use dblcat_core::bicat::{horizontalization, trivial_double};
use dblcat_core::double::is_horizontal_endomorphism;
use dblcat_core::findim::linalg::BitMatrix;
use dblcat_core::findim::{check_tensor_closure, is_2_subcyclic, EquivariantMorphism, F2Algebra, F2Bimodule};
use dblcat_core::functors::{check_epsilon_naturality, check_filtration_preservation, epsilon, universal_lift};
use dblcat_core::gen::{self, PosetSpec};
use dblcat_core::gg::{check_cor_4_5, check_prop_4_4, length_one_decomposition, nonglobular_members};
use dblcat_core::oracle::{for_each_mutant, naive_gamma_squares, sq_gamma_count};
use dblcat_core::{DoubleFunctor, Error, FinDoubleCategory, GammaAnalysis};

const CRIT1_BUDGET: Duration = Duration::from_secs(10);
const CRIT10_BUDGET: Duration = Duration::from_secs(30);
const MIN_MUTANTS_PER_FAMILY: usize = 50;
const MUTANTS_PER_TABLE: usize = 8;
/// Instances with more squares than this contribute one mutant per table.
const LARGE_INSTANCE: usize = 100;
const CLOSURE_MAX_DIM: usize = 2;

/// Criteria whose statement is false; see the README.
const KNOWN_FAILURES: &[usize] = &[10];

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        ok,
        detail: detail.into(),
    }
}

fn family(name: &str) -> &str {
    name.split('-').next().unwrap_or(name)
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = dblcat::run(args.iter().copied(), &mut out, &mut err);
    (code, String::from_utf8_lossy(&out).into_owned())
}

fn criterion_1(corpus: &[(String, FinDoubleCategory)], dir: &Path) -> Verdict {
    let start = Instant::now();
    let mut bad_files = Vec::new();
    for (name, c) in corpus {
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, Document::double(c).to_canonical()).expect("temp dir is writable");
        let (code, out) = run_cli(&["dblcat", "validate", path.to_str().expect("utf-8 path")]);
        if code != 0 || !out.is_empty() {
            bad_files.push(name.clone());
        }
    }
    let mut per_family: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
    let mut survivors = Vec::new();
    for (name, c) in corpus {
        let slot = per_family.entry(family(name)).or_default();
        let per_table = if c.square_count() > LARGE_INSTANCE { 1 } else { MUTANTS_PER_TABLE };
        for_each_mutant(&c.to_presentation(), per_table, |table, p| {
            slot.0 += 1;
            match FinDoubleCategory::from_presentation(p) {
                Ok(m) => {
                    let report = m.validate();
                    if report.ok() {
                        survivors.push(format!("{name}:{table:?}"));
                    } else if report.violations().iter().all(|v| !v.axiom.is_empty()) {
                        slot.1 += 1;
                    }
                }
                Err(_) => slot.2 += 1,
            }
        });
    }
    let elapsed = start.elapsed();
    let enough = per_family.values().all(|&(n, _, _)| n >= MIN_MUTANTS_PER_FAMILY);
    let counts: Vec<String> = per_family
        .iter()
        .map(|(f, (n, named, rejected))| format!("{f}={named}/{n} named, {rejected} rejected"))
        .collect();
    let ok = bad_files.is_empty() && survivors.is_empty() && enough && elapsed < CRIT1_BUDGET;
    verdict(
        ok,
        format!(
            "{} documents valid, {} invalid; mutants {}; survivors {:?}; {:.2}s",
            corpus.len() - bad_files.len(),
            bad_files.len(),
            counts.join("; "),
            survivors,
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_2() -> Verdict {
    let mut checked = 0;
    let mut bad = Vec::new();
    for (name, b) in gen::corpus_two_categories().into_iter().chain(gen::corpus_thin_two_categories()) {
        checked += 1;
        let round = trivial_double(&b).and_then(|t| horizontalization(&t));
        match round {
            Ok(h) if h.to_presentation() == b.to_presentation() => {}
            _ => bad.push(name),
        }
    }
    verdict(bad.is_empty(), format!("{checked} 2-categories, mismatches {bad:?}"))
}

fn hstar_text(c: &FinDoubleCategory) -> Option<String> {
    let d = dblcat_core::bicat::decorated_horizontalization(c).ok()?;
    Some(Document::decorated(&d).to_canonical())
}

fn criterion_3(corpus: &[(String, FinDoubleCategory)]) -> Verdict {
    let mut bad = Vec::new();
    for (name, c) in corpus {
        let g = GammaAnalysis::new(c).expect("corpus validates").gamma().clone();
        let gg = GammaAnalysis::new(&g).expect("gamma validates").gamma().clone();
        let same_h = hstar_text(c).is_some() && hstar_text(c) == hstar_text(&g);
        let idempotent = DoubleBody::from_double(&gg) == DoubleBody::from_double(&g);
        if !(same_h && idempotent) {
            bad.push(name.clone());
        }
    }
    verdict(bad.is_empty(), format!("{} instances, failures {bad:?}", corpus.len()))
}

fn criterion_4(corpus: &[(String, FinDoubleCategory)]) -> Verdict {
    let mut bad = Vec::new();
    let mut max_stable = 0;
    for (name, c) in corpus {
        let a = GammaAnalysis::new(c).expect("corpus validates");
        let leveled: BTreeSet<String> = a.members().into_iter().map(|q| c.square(q).to_string()).collect();
        let naive = naive_gamma_squares(&c.to_presentation());
        max_stable = max_stable.max(a.stable_at());
        if leveled != naive || a.stable_at() > c.square_count() {
            bad.push(name.clone());
        }
    }
    verdict(
        bad.is_empty(),
        format!("{} instances, max stabilization index {max_stable}, failures {bad:?}", corpus.len()),
    )
}

fn criterion_5(corpus: &[(String, FinDoubleCategory)]) -> Verdict {
    let mut bad = Vec::new();
    for (name, c) in corpus {
        let ok = check_prop_4_4(c).map(|r| r.ok()).unwrap_or(false) && check_cor_4_5(c).map(|r| r.ok()).unwrap_or(false);
        if !ok {
            bad.push(name.clone());
        }
    }
    let sq2 = gen::gen_commuting_squares(&gen::gen_poset_category(&PosetSpec::chain(2)).expect("valid")).expect("valid");
    let members = nonglobular_members(&GammaAnalysis::new(&sq2).expect("valid"));
    let names: Vec<&str> = members.iter().map(|q| q.as_str()).collect();
    let endo = names.len() == 1 && is_horizontal_endomorphism(&sq2, names[0]).unwrap_or(false);
    let expected = names == ["id_0|0<1|0<1|id_1"];
    verdict(
        bad.is_empty() && endo && expected,
        format!("{} instances, failures {bad:?}; Sq(2) non-globular members {names:?}", corpus.len()),
    )
}

fn criterion_6() -> Verdict {
    let mut bad = Vec::new();
    let posets = PosetSpec::all_up_to(4);
    for k in &posets {
        let c = gen::gen_commuting_squares(&gen::gen_poset_category(k).expect("valid")).expect("valid");
        let got = GammaAnalysis::new(&c).expect("valid").gamma().square_count();
        let naive = naive_gamma_squares(&c.to_presentation()).len();
        let formula = sq_gamma_count(k);
        if got != formula || naive != formula {
            bad.push(format!("{k:?}: {got}/{naive}/{formula}"));
        }
    }
    verdict(bad.is_empty(), format!("{} posets, mismatches {bad:?}", posets.len()))
}

/// Replays a decomposition against the raw tables, independently of the
/// indexed structure that produced it.
fn replay(c: &FinDoubleCategory, q: &str, decomposition: &[String]) -> Result<(), String> {
    let p = c.to_presentation();
    let vcomp: BTreeMap<(&str, &str), &str> = p
        .vertical_compositions
        .iter()
        .map(|(a, b, r)| ((a.as_str(), b.as_str()), r.as_str()))
        .collect();
    let ids: BTreeSet<&str> = p.c0.identities.iter().map(|(_, f)| f.as_str()).collect();
    let hids: BTreeSet<&str> = p.square_identities.iter().map(|(_, s)| s.as_str()).collect();
    let sides: BTreeMap<&str, (&str, &str)> = p
        .squares
        .iter()
        .map(|s| (s.name.as_str(), (s.vsrc.as_str(), s.vtgt.as_str())))
        .collect();
    for (i, s) in decomposition.iter().enumerate() {
        let (l, r) = sides[s.as_str()];
        let fine = if i % 2 == 0 {
            ids.contains(l) && ids.contains(r)
        } else {
            hids.contains(s.as_str())
        };
        if !fine {
            return Err(format!("{q}: position {i} ({s}) has the wrong shape"));
        }
    }
    let (last, rest) = decomposition.split_last().ok_or_else(|| format!("{q}: empty decomposition"))?;
    let mut acc = last.as_str();
    for s in rest.iter().rev() {
        acc = vcomp
            .get(&(s.as_str(), acc))
            .ok_or_else(|| format!("{q}: {s} and {acc} do not compose"))?;
    }
    if acc == q {
        Ok(())
    } else {
        Err(format!("{q}: replay gives {acc}"))
    }
}

fn criterion_7(corpus: &[(String, FinDoubleCategory)]) -> Verdict {
    let mut replayed = 0;
    let mut bad = Vec::new();
    for (name, c) in corpus {
        let a = GammaAnalysis::new(c).expect("valid");
        for q in a.members() {
            if a.vlength(q) != Some(1) {
                continue;
            }
            let token = c.square(q).as_str();
            let result = length_one_decomposition(c, token)
                .map_err(|e| e.to_string())
                .and_then(|d| replay(c, token, &d.iter().map(|s| s.to_string()).collect::<Vec<_>>()));
            match result {
                Ok(()) => replayed += 1,
                Err(e) => bad.push(format!("{name}: {e}")),
            }
        }
    }
    verdict(bad.is_empty(), format!("{replayed} length-one squares replayed, failures {bad:?}"))
}

fn criterion_8() -> Verdict {
    let posets = PosetSpec::all_up_to(3);
    let mut functors = 0;
    let mut bad = Vec::new();
    for k in &posets {
        for l in &posets {
            for u in gen::poset_functors(k, l) {
                functors += 1;
                let f = gen::gen_sq_functor(&u).expect("monotone maps induce double functors");
                let ok = check_filtration_preservation(&f).map(|r| r.ok()).unwrap_or(false)
                    && check_epsilon_naturality(&f).map(|r| r.ok()).unwrap_or(false);
                if !ok {
                    bad.push(format!("{k:?} -> {l:?}"));
                }
            }
        }
    }
    verdict(bad.is_empty(), format!("{functors} functors Sq(u), failures {bad:?}"))
}

fn criterion_9(corpus: &[(String, FinDoubleCategory)]) -> Verdict {
    let mut lifts = 0;
    let mut bad = Vec::new();
    for (name, c) in corpus {
        let a = GammaAnalysis::new(c).expect("valid");
        let mut cases = vec![epsilon(c).expect("inclusion")];
        if a.is_globularily_generated() {
            cases.push(DoubleFunctor::identity(c));
        }
        for f in cases {
            lifts += 1;
            match universal_lift(f.source(), &f) {
                Ok(lift) => {
                    let back = epsilon(f.target()).and_then(|e| e.after(&lift));
                    if !matches!(back, Ok(b) if b.to_presentation() == f.to_presentation()) {
                        bad.push(format!("{name}: factorization differs"));
                    }
                }
                Err(e @ Error::ImageEscape { .. }) => bad.push(format!("{name}: {e}")),
                Err(e) => bad.push(format!("{name}: {e}")),
            }
        }
    }
    verdict(bad.is_empty(), format!("{lifts} lifts, failures {bad:?}"))
}

fn criterion_10() -> Verdict {
    let start = Instant::now();
    let algebras = F2Algebra::small();
    let mut hids = 0;
    let mut hid_ok = true;
    for a in &algebras {
        for c in &algebras {
            for f in a.morphisms_to(c) {
                hids += 1;
                hid_ok &= is_2_subcyclic(&EquivariantMorphism::horizontal_identity(a, c, &f)).unwrap_or(false);
            }
        }
    }
    let f2 = F2Algebra::f2();
    let plane = F2Bimodule::new(f2.clone(), f2.clone(), 2, vec![BitMatrix::identity(2)], vec![BitMatrix::identity(2)])
        .expect("plane bimodule");
    let plane_ok = !is_2_subcyclic(&EquivariantMorphism::identity(&plane)).unwrap_or(true);
    let report = check_tensor_closure(&algebras, CLOSURE_MAX_DIM).expect("closure scan runs");
    let elapsed = start.elapsed();
    let closure_ok = report.ok();
    verdict(
        hid_ok && plane_ok && closure_ok && elapsed < CRIT10_BUDGET,
        format!(
            "hid true on {hids} triples: {hid_ok}; plane identity false: {plane_ok}; closure: {} morphisms, {} 2-subcyclic, {} pairs, {} non-2-subcyclic tensor products; {:.2}s",
            report.morphisms,
            report.subcyclic,
            report.pairs,
            report.failures.len(),
            elapsed.as_secs_f64()
        ),
    )
}

fn main() {
    let dir = tempfile::tempdir().expect("temp dir");
    let corpus = gen::corpus();
    let results: Vec<Verdict> = vec![
        criterion_1(&corpus, dir.path()),
        criterion_2(),
        criterion_3(&corpus),
        criterion_4(&corpus),
        criterion_5(&corpus),
        criterion_6(),
        criterion_7(&corpus),
        criterion_8(),
        criterion_9(&corpus),
        criterion_10(),
    ];
    let mut unexpected = Vec::new();
    for (i, v) in results.iter().enumerate() {
        let n = i + 1;
        println!("criterion {n:>2}\t{}\t{}", if v.ok { "PASS" } else { "FAIL" }, v.detail);
        if v.ok == KNOWN_FAILURES.contains(&n) {
            unexpected.push(n);
        }
    }
    let passed = results.iter().filter(|v| v.ok).count();
    println!("acceptance\t{passed}/{} criteria pass; known failures {KNOWN_FAILURES:?}", results.len());
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}

use dblcat::Document;
use dblcat_core::bicat::decorated_horizontalization;
use dblcat_core::findim::fragments;
use dblcat_core::functors::{epsilon, DoubleNaturalTransformation};
use dblcat_core::gen::{self, PosetSpec};
use dblcat_core::{FinDoubleCategory, GammaAnalysis};
use proptest::prelude::*;
use serde_json::Value;

fn sq(k: &PosetSpec) -> FinDoubleCategory {
    gen::gen_commuting_squares(&gen::gen_poset_category(k).unwrap()).unwrap()
}

fn sq2() -> FinDoubleCategory {
    sq(&PosetSpec::chain(2))
}

fn one_of_each_kind() -> Vec<Document> {
    let c = sq(&PosetSpec::diamond());
    let b = gen::max_monoid(2);
    let eps = epsilon(&c).unwrap();
    vec![
        Document::double(&c),
        Document::two_category(&b),
        Document::decorated(&decorated_horizontalization(&c).unwrap()),
        Document::functor(&eps),
        Document::transformation(&DoubleNaturalTransformation::identity(&eps)),
        Document::findim(&fragments::swap_fragment().unwrap()),
        Document::gamma_report(&GammaAnalysis::new(&c).unwrap(), true, true),
    ]
}

#[test]
fn every_kind_round_trips() {
    let kinds: Vec<&str> = one_of_each_kind().iter().map(|d| d.kind()).collect();
    assert_eq!(
        kinds,
        ["double_category", "two_category", "decorated", "functor", "transformation", "findim", "gamma_report"]
    );
    for doc in one_of_each_kind() {
        let text = doc.to_canonical();
        assert!(text.ends_with("}\n"));
        let again = Document::parse(&text).unwrap();
        assert_eq!(again.kind(), doc.kind());
        assert_eq!(again.to_canonical(), text, "{}", doc.kind());
    }
}

#[test]
fn canonical_text_has_sorted_keys() {
    for doc in one_of_each_kind() {
        let v: Value = serde_json::from_str(&doc.to_canonical()).unwrap();
        fn check(v: &Value) {
            match v {
                Value::Object(m) => {
                    let keys: Vec<&String> = m.keys().collect();
                    let mut sorted = keys.clone();
                    sorted.sort();
                    assert_eq!(keys, sorted);
                    m.values().for_each(check);
                }
                Value::Array(a) => a.iter().for_each(check),
                _ => {}
            }
        }
        check(&v);
        assert_eq!(v["format"], "dblcat/1");
    }
}

#[test]
fn double_category_documents_rebuild_the_same_structure() {
    let c = sq(&PosetSpec::diamond());
    let doc = Document::parse(&Document::double(&c).to_canonical()).unwrap();
    assert_eq!(doc.as_double().unwrap().unwrap(), c);
}

#[test]
fn sq2_matches_golden_file() {
    let golden = include_str!("golden/sq2.json");
    assert_eq!(Document::double(&sq2()).to_canonical(), golden);
}

/// Reorders every list under `body` that is a list of rows, keeping rows
/// intact.
fn rotate_rows(v: &mut Value, by: usize) {
    if let Value::Object(m) = v {
        for (_, field) in m.iter_mut() {
            if let Value::Array(rows) = field {
                if !rows.is_empty() {
                    let k = by % rows.len();
                    rows.rotate_left(k);
                    rows.reverse();
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn row_order_does_not_change_the_structure(by in 0usize..40, size in 1usize..=4) {
        let c = sq(&PosetSpec::chain(size));
        let mut v: Value = serde_json::from_str(&Document::double(&c).to_canonical()).unwrap();
        rotate_rows(&mut v["body"], by);
        let doc = Document::parse(&serde_json::to_string(&v).unwrap()).unwrap();
        let rebuilt = doc.as_double().unwrap().unwrap();
        prop_assert_eq!(Document::double(&rebuilt).to_canonical(), Document::double(&c).to_canonical());
    }
}

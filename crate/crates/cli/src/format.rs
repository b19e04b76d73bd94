//! The `dblcat/1` JSON interchange format.
//!
//! Every document is `{"format": "dblcat/1", "kind": ..., "body": ...}`.
//! Tables are arrays of token tuples and maps are JSON objects. Canonical
//! output sorts object keys and every array of tuples, pretty-prints with
//! two-space indentation and ends with a single `\n`.

use std::collections::BTreeMap;

use dblcat_core::bicat::{DecoratedBicategory, Fin2Category, TwoCategoryPresentation};
use dblcat_core::category::{CategoryPresentation, FinCategory};
use dblcat_core::double::{DoublePresentation, FinDoubleCategory, SquareDecl};
use dblcat_core::findim::{AlgFragment, BitMatrix, EquivariantMorphism, F2Algebra, F2Bimodule};
use dblcat_core::functors::{DoubleFunctor, DoubleNaturalTransformation, FunctorPresentation, TransformationPresentation};
use dblcat_core::gg::{witness_table, GammaAnalysis};
use serde::{de::DeserializeOwned, Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

pub const FORMAT: &str = "dblcat/1";

type Pair = (String, String);
type Triple = (String, String, String);

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryBody {
    pub objects: Vec<String>,
    pub morphisms: Vec<Triple>,
    pub identities: Vec<Pair>,
    pub compositions: Vec<Triple>,
}

impl CategoryBody {
    pub fn from_presentation(p: CategoryPresentation) -> CategoryBody {
        CategoryBody {
            objects: sorted(p.objects),
            morphisms: sorted(p.morphisms),
            identities: sorted(p.identities),
            compositions: sorted(p.compositions),
        }
    }

    pub fn to_presentation(&self) -> CategoryPresentation {
        CategoryPresentation {
            objects: self.objects.clone(),
            morphisms: self.morphisms.clone(),
            identities: self.identities.clone(),
            compositions: self.compositions.clone(),
        }
    }
}

/// Squares are `[name, dom, cod, vsrc, vtgt]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DoubleBody {
    pub objects: Vec<String>,
    pub vertical: Vec<Triple>,
    pub vertical_identities: Vec<Pair>,
    pub vertical_compositions: Vec<Triple>,
    pub horizontal: Vec<Triple>,
    pub horizontal_identities: Vec<Pair>,
    pub horizontal_compositions: Vec<Triple>,
    pub squares: Vec<(String, String, String, String, String)>,
    pub square_vertical_identities: Vec<Pair>,
    pub square_vertical_compositions: Vec<Triple>,
    pub square_horizontal_identities: Vec<Pair>,
    pub square_horizontal_compositions: Vec<Triple>,
}

impl DoubleBody {
    pub fn from_double(c: &FinDoubleCategory) -> DoubleBody {
        let p = c.to_presentation();
        DoubleBody {
            objects: sorted(p.c0.objects),
            vertical: sorted(p.c0.morphisms),
            vertical_identities: sorted(p.c0.identities),
            vertical_compositions: sorted(p.c0.compositions),
            horizontal: sorted(p.horizontal),
            horizontal_identities: sorted(p.horizontal_identities),
            horizontal_compositions: sorted(p.horizontal_compositions),
            squares: sorted(
                p.squares
                    .into_iter()
                    .map(|s| (s.name, s.dom, s.cod, s.vsrc, s.vtgt))
                    .collect(),
            ),
            square_vertical_identities: sorted(p.vertical_identities),
            square_vertical_compositions: sorted(p.vertical_compositions),
            square_horizontal_identities: sorted(p.square_identities),
            square_horizontal_compositions: sorted(p.square_compositions),
        }
    }

    pub fn to_presentation(&self) -> DoublePresentation {
        DoublePresentation {
            c0: CategoryPresentation {
                objects: self.objects.clone(),
                morphisms: self.vertical.clone(),
                identities: self.vertical_identities.clone(),
                compositions: self.vertical_compositions.clone(),
            },
            horizontal: self.horizontal.clone(),
            horizontal_identities: self.horizontal_identities.clone(),
            horizontal_compositions: self.horizontal_compositions.clone(),
            squares: self
                .squares
                .iter()
                .map(|(name, dom, cod, vsrc, vtgt)| SquareDecl {
                    name: name.clone(),
                    dom: dom.clone(),
                    cod: cod.clone(),
                    vsrc: vsrc.clone(),
                    vtgt: vtgt.clone(),
                })
                .collect(),
            vertical_identities: self.square_vertical_identities.clone(),
            vertical_compositions: self.square_vertical_compositions.clone(),
            square_identities: self.square_horizontal_identities.clone(),
            square_compositions: self.square_horizontal_compositions.clone(),
        }
    }

    pub fn build(&self) -> Result<FinDoubleCategory, CliError> {
        Ok(FinDoubleCategory::from_presentation(&self.to_presentation())?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoCategoryBody {
    pub cells0: Vec<String>,
    pub cells1: Vec<Triple>,
    pub identities1: Vec<Pair>,
    pub compositions1: Vec<Triple>,
    pub cells2: Vec<Triple>,
    pub identities2: Vec<Pair>,
    pub vertical_compositions2: Vec<Triple>,
    pub horizontal_compositions2: Vec<Triple>,
}

impl TwoCategoryBody {
    pub fn from_two_category(b: &Fin2Category) -> TwoCategoryBody {
        let p = b.to_presentation();
        TwoCategoryBody {
            cells0: sorted(p.cells0),
            cells1: sorted(p.cells1),
            identities1: sorted(p.identities1),
            compositions1: sorted(p.compositions1),
            cells2: sorted(p.cells2),
            identities2: sorted(p.identities2),
            vertical_compositions2: sorted(p.vertical_compositions2),
            horizontal_compositions2: sorted(p.horizontal_compositions2),
        }
    }

    pub fn build(&self) -> Result<Fin2Category, CliError> {
        let p = TwoCategoryPresentation {
            cells0: self.cells0.clone(),
            cells1: self.cells1.clone(),
            identities1: self.identities1.clone(),
            compositions1: self.compositions1.clone(),
            cells2: self.cells2.clone(),
            identities2: self.identities2.clone(),
            vertical_compositions2: self.vertical_compositions2.clone(),
            horizontal_compositions2: self.horizontal_compositions2.clone(),
        };
        Ok(Fin2Category::from_presentation(&p)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecoratedBody {
    pub decoration: CategoryBody,
    pub bicategory: TwoCategoryBody,
}

impl DecoratedBody {
    pub fn from_decorated(d: &DecoratedBicategory) -> DecoratedBody {
        DecoratedBody {
            decoration: CategoryBody::from_presentation(d.decoration().to_presentation()),
            bicategory: TwoCategoryBody::from_two_category(d.underlying()),
        }
    }

    pub fn build(&self) -> Result<DecoratedBicategory, CliError> {
        let k = FinCategory::from_presentation(&self.decoration.to_presentation())?;
        Ok(DecoratedBicategory::new(k, self.bicategory.build()?)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorBody {
    pub source: DoubleBody,
    pub target: DoubleBody,
    pub objects: BTreeMap<String, String>,
    pub vertical: BTreeMap<String, String>,
    pub horizontal: BTreeMap<String, String>,
    pub squares: BTreeMap<String, String>,
}

impl FunctorBody {
    pub fn from_functor(f: &DoubleFunctor) -> FunctorBody {
        let p = f.to_presentation();
        FunctorBody {
            source: DoubleBody::from_double(f.source()),
            target: DoubleBody::from_double(f.target()),
            objects: p.objects.into_iter().collect(),
            vertical: p.vertical.into_iter().collect(),
            horizontal: p.horizontal.into_iter().collect(),
            squares: p.squares.into_iter().collect(),
        }
    }

    pub fn build(&self) -> Result<DoubleFunctor, CliError> {
        let entries = |m: &BTreeMap<String, String>| m.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        let p = FunctorPresentation {
            objects: entries(&self.objects),
            vertical: entries(&self.vertical),
            horizontal: entries(&self.horizontal),
            squares: entries(&self.squares),
        };
        Ok(DoubleFunctor::from_maps(self.source.build()?, self.target.build()?, &p)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformationBody {
    pub source: FunctorBody,
    pub target: FunctorBody,
    pub eta0: BTreeMap<String, String>,
    pub eta1: BTreeMap<String, String>,
}

impl TransformationBody {
    pub fn from_transformation(t: &DoubleNaturalTransformation) -> TransformationBody {
        let p = t.to_presentation();
        TransformationBody {
            source: FunctorBody::from_functor(t.src_functor()),
            target: FunctorBody::from_functor(t.tgt_functor()),
            eta0: p.eta0.into_iter().collect(),
            eta1: p.eta1.into_iter().collect(),
        }
    }

    pub fn build(&self) -> Result<DoubleNaturalTransformation, CliError> {
        let entries = |m: &BTreeMap<String, String>| m.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        let p = TransformationPresentation {
            eta0: entries(&self.eta0),
            eta1: entries(&self.eta1),
        };
        Ok(DoubleNaturalTransformation::from_maps(self.source.build()?, self.target.build()?, &p)?)
    }
}

/// A bit matrix as rows of 0/1 entries.
pub type MatrixBody = Vec<Vec<u8>>;

fn matrix_body(m: &BitMatrix) -> MatrixBody {
    m.to_rows()
}

fn vector_body(v: u64, dim: usize) -> Vec<u8> {
    (0..dim).map(|i| (v >> i & 1) as u8).collect()
}

fn parse_vector(v: &[u8], dim: usize, what: &str) -> Result<u64, CliError> {
    if v.len() != dim || v.iter().any(|&b| b > 1) {
        return Err(CliError::Malformed(format!("{what}: expected {dim} entries of 0 or 1")));
    }
    Ok(v.iter().enumerate().fold(0, |acc, (i, &b)| acc | (u64::from(b) << i)))
}

fn parse_matrix(m: &MatrixBody, rows: usize, cols: usize, what: &str) -> Result<BitMatrix, CliError> {
    if m.len() != rows {
        return Err(CliError::Malformed(format!("{what}: expected {rows} rows")));
    }
    for row in m {
        parse_vector(row, cols, what)?;
    }
    Ok(BitMatrix::from_rows(m, cols))
}

/// Structure constants: `mul[i·dim + j]` is `e_i·e_j` as a bit vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraBody {
    pub dim: usize,
    pub mul: Vec<Vec<u8>>,
    pub unit: Vec<u8>,
}

/// Largest algebra or bimodule dimension accepted from files.
const MAX_FILE_DIM: usize = 8;

impl AlgebraBody {
    fn from_algebra(a: &F2Algebra) -> AlgebraBody {
        AlgebraBody {
            dim: a.dim(),
            mul: a.structure_constants().iter().map(|&v| vector_body(v, a.dim())).collect(),
            unit: vector_body(a.unit(), a.dim()),
        }
    }

    fn build(&self) -> Result<F2Algebra, CliError> {
        let d = self.dim;
        if d == 0 || d > MAX_FILE_DIM || self.mul.len() != d * d {
            return Err(CliError::Malformed(format!("algebra of dimension {d} needs {} products", d * d)));
        }
        let mul = self
            .mul
            .iter()
            .map(|v| parse_vector(v, d, "algebra product"))
            .collect::<Result<_, _>>()?;
        Ok(F2Algebra::new(d, mul, parse_vector(&self.unit, d, "algebra unit")?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleBody {
    pub left: AlgebraBody,
    pub right: AlgebraBody,
    pub dim: usize,
    pub lact: Vec<MatrixBody>,
    pub ract: Vec<MatrixBody>,
}

impl BimoduleBody {
    fn from_bimodule(m: &F2Bimodule) -> BimoduleBody {
        BimoduleBody {
            left: AlgebraBody::from_algebra(m.left()),
            right: AlgebraBody::from_algebra(m.right()),
            dim: m.dim(),
            lact: m.left_actions().iter().map(matrix_body).collect(),
            ract: m.right_actions().iter().map(matrix_body).collect(),
        }
    }

    fn build(&self) -> Result<F2Bimodule, CliError> {
        let d = self.dim;
        if d == 0 || d > MAX_FILE_DIM {
            return Err(CliError::Malformed(format!("bimodule dimension {d} out of range")));
        }
        let acts = |v: &[MatrixBody]| {
            v.iter()
                .map(|m| parse_matrix(m, d, d, "action"))
                .collect::<Result<Vec<_>, _>>()
        };
        Ok(F2Bimodule::new(
            self.left.build()?,
            self.right.build()?,
            d,
            acts(&self.lact)?,
            acts(&self.ract)?,
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismBody {
    pub source: BimoduleBody,
    pub target: BimoduleBody,
    pub f: MatrixBody,
    pub phi: MatrixBody,
    pub g: MatrixBody,
}

impl MorphismBody {
    fn from_morphism(t: &EquivariantMorphism) -> MorphismBody {
        MorphismBody {
            source: BimoduleBody::from_bimodule(&t.source),
            target: BimoduleBody::from_bimodule(&t.target),
            f: matrix_body(&t.f),
            phi: matrix_body(&t.phi),
            g: matrix_body(&t.g),
        }
    }

    fn build(&self) -> Result<EquivariantMorphism, CliError> {
        let (m, n) = (self.source.build()?, self.target.build()?);
        Ok(EquivariantMorphism {
            f: parse_matrix(&self.f, n.left().dim(), m.left().dim(), "f")?,
            phi: parse_matrix(&self.phi, n.dim(), m.dim(), "phi")?,
            g: parse_matrix(&self.g, n.right().dim(), m.right().dim(), "g")?,
            source: m,
            target: n,
        })
    }
}

/// A tagged fragment of algebras and bimodules.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FindimBody {
    pub fragment: DoubleBody,
    pub tags: BTreeMap<String, MorphismBody>,
}

impl FindimBody {
    pub fn from_fragment(f: &AlgFragment) -> FindimBody {
        FindimBody {
            fragment: DoubleBody::from_double(&f.double),
            tags: f.tags.iter().map(|(k, t)| (k.clone(), MorphismBody::from_morphism(t))).collect(),
        }
    }

    pub fn build(&self) -> Result<AlgFragment, CliError> {
        Ok(AlgFragment {
            double: self.fragment.build()?,
            tags: self
                .tags
                .iter()
                .map(|(k, t)| Ok((k.clone(), t.build()?)))
                .collect::<Result<_, CliError>>()?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelBody {
    pub level: usize,
    pub h: Vec<String>,
    pub v: Vec<String>,
}

/// The globularily generated piece with its filtration. `levels` lists
/// `Hₙ` and `Vₙ` for `1 ≤ n ≤ stable_at`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GammaReportBody {
    pub gamma: DoubleBody,
    pub gg: bool,
    pub squares: usize,
    pub gamma_squares: usize,
    pub stable_at: usize,
    pub levels: Vec<LevelBody>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lengths: Option<BTreeMap<String, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<BTreeMap<String, String>>,
}

impl GammaReportBody {
    pub fn from_analysis(a: &GammaAnalysis, lengths: bool, witnesses: bool) -> GammaReportBody {
        let c = a.source();
        let names = |set: std::collections::BTreeSet<usize>| sorted(set.into_iter().map(|q| c.square(q).to_string()).collect());
        let levels = (1..=a.stable_at())
            .map(|n| LevelBody {
                level: n,
                h: names(a.h_level(n).expect("level in range")),
                v: names(a.v_level(n).expect("level in range")),
            })
            .collect();
        GammaReportBody {
            gamma: DoubleBody::from_double(a.gamma()),
            gg: a.is_globularily_generated(),
            squares: c.square_count(),
            gamma_squares: a.gamma().square_count(),
            stable_at: a.stable_at(),
            levels,
            lengths: lengths.then(|| {
                a.members()
                    .into_iter()
                    .map(|q| (c.square(q).to_string(), a.vlength(q).expect("members have lengths")))
                    .collect()
            }),
            witnesses: witnesses.then(|| witness_table(a)),
        }
    }
}

/// A parsed document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    DoubleCategory(DoubleBody),
    TwoCategory(TwoCategoryBody),
    Decorated(DecoratedBody),
    Functor(Box<FunctorBody>),
    Transformation(Box<TransformationBody>),
    Findim(Box<FindimBody>),
    GammaReport(Box<GammaReportBody>),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Envelope {
    format: String,
    kind: String,
    body: Value,
}

fn body<T: DeserializeOwned>(v: Value) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| CliError::Malformed(format!("body: {e}")))
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::DoubleCategory(_) => "double_category",
            Document::TwoCategory(_) => "two_category",
            Document::Decorated(_) => "decorated",
            Document::Functor(_) => "functor",
            Document::Transformation(_) => "transformation",
            Document::Findim(_) => "findim",
            Document::GammaReport(_) => "gamma_report",
        }
    }

    pub fn parse(text: &str) -> Result<Document, CliError> {
        let env: Envelope = serde_json::from_str(text).map_err(|e| CliError::Malformed(e.to_string()))?;
        if env.format != FORMAT {
            return Err(CliError::Malformed(format!("unsupported format {:?}", env.format)));
        }
        Ok(match env.kind.as_str() {
            "double_category" => Document::DoubleCategory(body(env.body)?),
            "two_category" => Document::TwoCategory(body(env.body)?),
            "decorated" => Document::Decorated(body(env.body)?),
            "functor" => Document::Functor(body(env.body)?),
            "transformation" => Document::Transformation(body(env.body)?),
            "findim" => Document::Findim(body(env.body)?),
            "gamma_report" => Document::GammaReport(body(env.body)?),
            other => return Err(CliError::Malformed(format!("unknown kind {other:?}"))),
        })
    }

    /// Canonical text: sorted keys, two-space indentation, trailing newline.
    pub fn to_canonical(&self) -> String {
        let body = match self {
            Document::DoubleCategory(b) => serde_json::to_value(b),
            Document::TwoCategory(b) => serde_json::to_value(b),
            Document::Decorated(b) => serde_json::to_value(b),
            Document::Functor(b) => serde_json::to_value(b),
            Document::Transformation(b) => serde_json::to_value(b),
            Document::Findim(b) => serde_json::to_value(b),
            Document::GammaReport(b) => serde_json::to_value(b),
        }
        .expect("bodies serialize");
        let env = Envelope {
            format: FORMAT.into(),
            kind: self.kind().into(),
            body,
        };
        let value = serde_json::to_value(env).expect("envelopes serialize");
        let mut text = serde_json::to_string_pretty(&value).expect("values serialize");
        text.push('\n');
        text
    }

    pub fn double(c: &FinDoubleCategory) -> Document {
        Document::DoubleCategory(DoubleBody::from_double(c))
    }

    pub fn two_category(b: &Fin2Category) -> Document {
        Document::TwoCategory(TwoCategoryBody::from_two_category(b))
    }

    pub fn decorated(d: &DecoratedBicategory) -> Document {
        Document::Decorated(DecoratedBody::from_decorated(d))
    }

    pub fn functor(f: &DoubleFunctor) -> Document {
        Document::Functor(Box::new(FunctorBody::from_functor(f)))
    }

    pub fn transformation(t: &DoubleNaturalTransformation) -> Document {
        Document::Transformation(Box::new(TransformationBody::from_transformation(t)))
    }

    pub fn findim(f: &AlgFragment) -> Document {
        Document::Findim(Box::new(FindimBody::from_fragment(f)))
    }

    pub fn gamma_report(a: &GammaAnalysis, lengths: bool, witnesses: bool) -> Document {
        Document::GammaReport(Box::new(GammaReportBody::from_analysis(a, lengths, witnesses)))
    }

    /// The double category a document describes, where there is one: the
    /// piece itself for a gamma report, the trivial double category of a
    /// 2-category, and the fragment of a findim document.
    pub fn as_double(&self) -> Result<Option<FinDoubleCategory>, CliError> {
        Ok(match self {
            Document::DoubleCategory(b) => Some(b.build()?),
            Document::GammaReport(r) => Some(r.gamma.build()?),
            Document::TwoCategory(b) => Some(b.build()?.as_double().clone()),
            Document::Findim(f) => Some(f.fragment.build()?),
            _ => None,
        })
    }
}

//! JSON documents: Lie algebras, subspaces, pipeline inputs and reports.
//!
//! Basis indices are 1-based in every document. Scalars travel as text in
//! the grammar of [`crate::field::parse`]; bare JSON integers are accepted
//! on input. Unknown fields are rejected.

use serde::{Deserialize, Serialize};

use crate::complex::CohomologyReport;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar, Vector};
use crate::forms::ExteriorForm;
use crate::lie::{torus_ideal_from_directions, LieAlgebra, Subspace};
use crate::pipeline::{DenseQuotientInput, DenseQuotientReport};

/// Largest `dimension` a document may declare.
pub const MAX_DOCUMENT_DIM: usize = 512;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldDoc {
    Name(String),
    Function(FunctionFieldDoc),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionFieldDoc {
    pub rational_function_in: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarDoc {
    Text(String),
    Integer(i64),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub k: usize,
    pub coeff: ScalarDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<TermDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub name: String,
    pub dimension: usize,
    pub field: FieldDoc,
    #[serde(default)]
    pub brackets: Vec<BracketDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceDoc {
    pub vectors: Vec<Vec<ScalarDoc>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusDoc {
    pub torus_directions: Vec<Vec<ScalarDoc>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdealDoc {
    Vectors(SubspaceDoc),
    Torus(TorusDoc),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PipelineDoc {
    pub algebra: AlgebraDoc,
    pub ideal: IdealDoc,
    #[serde(default)]
    pub note: String,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

impl FieldDoc {
    pub fn to_field(&self) -> Result<Field> {
        match self {
            FieldDoc::Name(s) if s == "Q" => Ok(Field::Rational),
            FieldDoc::Name(s) => Err(Error::Document(format!("unknown field {s:?}, expected \"Q\""))),
            FieldDoc::Function(f) if valid_identifier(&f.rational_function_in) => {
                Ok(Field::rational_function(&f.rational_function_in))
            }
            FieldDoc::Function(f) => {
                Err(Error::Document(format!("invalid indeterminate {:?}", f.rational_function_in)))
            }
        }
    }

    pub fn from_field(field: &Field) -> Self {
        match field {
            Field::Rational => FieldDoc::Name("Q".into()),
            Field::RationalFunction(v) => FieldDoc::Function(FunctionFieldDoc { rational_function_in: v.to_string() }),
        }
    }
}

impl ScalarDoc {
    pub fn to_scalar(&self, field: &Field) -> Result<Scalar> {
        match self {
            ScalarDoc::Text(s) => field.parse(s),
            ScalarDoc::Integer(n) => Ok(field.from_int(*n)),
        }
    }

    pub fn from_scalar(s: &Scalar) -> Self {
        ScalarDoc::Text(s.to_text())
    }
}

fn check_index(index: usize, dim: usize, what: &str) -> Result<usize> {
    if index == 0 || index > dim {
        return Err(Error::Document(format!("{what} index {index} outside 1..={dim}")));
    }
    Ok(index - 1)
}

fn parse_vector(field: &Field, dim: usize, entries: &[ScalarDoc]) -> Result<Vector> {
    if entries.len() != dim {
        return Err(Error::Document(format!("vector has {} entries, expected {dim}", entries.len())));
    }
    entries.iter().map(|e| e.to_scalar(field)).collect()
}

fn vector_doc(v: &[Scalar]) -> Vec<ScalarDoc> {
    v.iter().map(ScalarDoc::from_scalar).collect()
}

impl AlgebraDoc {
    pub fn to_algebra(&self) -> Result<LieAlgebra> {
        let n = self.dimension;
        if n > MAX_DOCUMENT_DIM {
            return Err(Error::Document(format!("dimension {n} exceeds {MAX_DOCUMENT_DIM}")));
        }
        let field = self.field.to_field()?;
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            let i = check_index(b.i, n, "bracket")?;
            let j = check_index(b.j, n, "bracket")?;
            let mut value = field.zero_vector(n);
            let mut seen = vec![false; n];
            for t in &b.terms {
                let k = check_index(t.k, n, "term")?;
                if std::mem::replace(&mut seen[k], true) {
                    return Err(Error::Document(format!("term e{} listed twice in [e{}, e{}]", t.k, b.i, b.j)));
                }
                value[k] = t.coeff.to_scalar(&field)?;
            }
            brackets.push((i, j, value));
        }
        LieAlgebra::new(self.name.clone(), n, &field, brackets)
    }

    pub fn from_algebra(alg: &LieAlgebra) -> Self {
        let brackets = alg
            .brackets()
            .map(|(i, j, v)| BracketDoc {
                i: i + 1,
                j: j + 1,
                terms: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| TermDoc { k: k + 1, coeff: ScalarDoc::from_scalar(c) })
                    .collect(),
            })
            .collect();
        AlgebraDoc {
            name: alg.name().to_string(),
            dimension: alg.dim(),
            field: FieldDoc::from_field(alg.field()),
            brackets,
        }
    }
}

impl SubspaceDoc {
    pub fn to_subspace(&self, field: &Field, dim: usize) -> Result<Subspace> {
        let basis = self.vectors.iter().map(|v| parse_vector(field, dim, v)).collect::<Result<_>>()?;
        Subspace::new(field, dim, basis)
    }

    pub fn from_subspace(h: &Subspace) -> Self {
        SubspaceDoc { vectors: h.basis().iter().map(|v| vector_doc(v)).collect() }
    }
}

impl IdealDoc {
    pub fn to_subspace(&self, field: &Field, dim: usize) -> Result<Subspace> {
        match self {
            IdealDoc::Vectors(doc) => doc.to_subspace(field, dim),
            IdealDoc::Torus(doc) => {
                let dirs: Vec<Vector> =
                    doc.torus_directions.iter().map(|v| parse_vector(field, dim, v)).collect::<Result<_>>()?;
                torus_ideal_from_directions(field, dim, &dirs)
            }
        }
    }
}

impl PipelineDoc {
    pub fn to_input(&self) -> Result<DenseQuotientInput> {
        let algebra = self.algebra.to_algebra()?;
        let ideal = self.ideal.to_subspace(algebra.field(), algebra.dim())?;
        Ok(DenseQuotientInput { algebra, ideal, note: self.note.clone() })
    }

    pub fn from_input(input: &DenseQuotientInput) -> Self {
        PipelineDoc {
            algebra: AlgebraDoc::from_algebra(&input.algebra),
            ideal: IdealDoc::Vectors(SubspaceDoc::from_subspace(&input.ideal)),
            note: input.note.clone(),
        }
    }
}

/// Either kind of input document.
#[derive(Clone, Debug)]
pub enum InputDocument {
    Algebra(LieAlgebra),
    Pipeline(DenseQuotientInput),
}

impl InputDocument {
    pub fn algebra(&self) -> &LieAlgebra {
        match self {
            InputDocument::Algebra(a) => a,
            InputDocument::Pipeline(p) => &p.algebra,
        }
    }
}

/// A document with a top-level `algebra` key is a pipeline input; anything
/// else is read as a bare Lie algebra.
pub fn parse_input(text: &str) -> Result<InputDocument> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(json_error)?;
    if value.get("algebra").is_some() {
        let doc: PipelineDoc = serde_json::from_value(value).map_err(json_error)?;
        Ok(InputDocument::Pipeline(doc.to_input()?))
    } else {
        let doc: AlgebraDoc = serde_json::from_value(value).map_err(json_error)?;
        Ok(InputDocument::Algebra(doc.to_algebra()?))
    }
}

pub fn parse_algebra(text: &str) -> Result<LieAlgebra> {
    serde_json::from_str::<AlgebraDoc>(text).map_err(json_error)?.to_algebra()
}

pub fn parse_pipeline(text: &str) -> Result<DenseQuotientInput> {
    serde_json::from_str::<PipelineDoc>(text).map_err(json_error)?.to_input()
}

fn pretty<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

pub fn algebra_to_json(alg: &LieAlgebra) -> String {
    pretty(&AlgebraDoc::from_algebra(alg))
}

pub fn pipeline_to_json(input: &DenseQuotientInput) -> String {
    pretty(&PipelineDoc::from_input(input))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormTermDoc {
    pub indices: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentativeDoc {
    pub degree: usize,
    pub terms: Vec<FormTermDoc>,
}

impl RepresentativeDoc {
    pub fn from_form(form: &ExteriorForm) -> Self {
        RepresentativeDoc {
            degree: form.degree(),
            terms: form
                .terms()
                .map(|(t, c)| FormTermDoc { indices: t.one_based(), coeff: c.to_text() })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub algebra: String,
    pub dimension: usize,
    pub betti: Vec<usize>,
    pub ranks: Vec<usize>,
    pub representatives: Vec<RepresentativeDoc>,
}

impl ReportDoc {
    pub fn from_report(r: &CohomologyReport) -> Self {
        ReportDoc {
            algebra: r.algebra.clone(),
            dimension: r.dimension,
            betti: r.betti.clone(),
            ranks: r.ranks.clone(),
            representatives: r.representatives.iter().flatten().map(RepresentativeDoc::from_form).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuotientReportDoc {
    pub algebra: String,
    pub note: String,
    pub ideal_dim: usize,
    pub quotient_dim: usize,
    pub abelian_quotient: bool,
    pub chain_iso_verified: bool,
    pub cohomology: ReportDoc,
}

impl QuotientReportDoc {
    pub fn from_report(r: &DenseQuotientReport) -> Self {
        QuotientReportDoc {
            algebra: r.algebra.clone(),
            note: r.note.clone(),
            ideal_dim: r.ideal_dim,
            quotient_dim: r.quotient_dim,
            abelian_quotient: r.abelian_quotient,
            chain_iso_verified: r.chain_iso_verified,
            cohomology: ReportDoc::from_report(&r.report),
        }
    }
}

pub fn report_to_json(r: &CohomologyReport) -> String {
    pretty(&ReportDoc::from_report(r))
}

pub fn quotient_report_to_json(r: &DenseQuotientReport) -> String {
    pretty(&QuotientReportDoc::from_report(r))
}

//! The output document shared by every command, and its serialized forms.

use std::fmt;

use golden_core::Rational;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// A rational that serializes as `"p"` or `"p/q"` in lowest terms.
///
/// Deserialization accepts only that canonical spelling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exact(pub Rational);

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Exact {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let r: Rational = s.parse().map_err(de::Error::custom)?;
        if r.to_string() != s {
            return Err(de::Error::custom(format!(
                "rational {s:?} is not in canonical form {r}"
            )));
        }
        Ok(Exact(r))
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<Rational> for Exact {
    fn from(r: Rational) -> Self {
        Exact(r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Numbers,
    Polynomials,
    Fibonomials,
    Binomial,
    Evaluation,
    Verification,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Numbers => "numbers",
            Kind::Polynomials => "polynomials",
            Kind::Fibonomials => "fibonomials",
            Kind::Binomial => "binomial",
            Kind::Evaluation => "evaluation",
            Kind::Verification => "verification",
        }
    }
}

/// Request parameters echoed back with the result.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub variant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub method: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub x: Option<Exact>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub rendered: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub passed: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumberRow {
    pub n: usize,
    pub value: Exact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NumberPairRow {
    pub n: usize,
    pub series: Exact,
    pub recursive: Exact,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialRow {
    pub n: usize,
    /// Constant term first.
    pub coefficients: Vec<Exact>,
    pub rendered: String,
    pub latex: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EvaluationRow {
    pub n: usize,
    pub x: Exact,
    pub value: Exact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FibonomialRow {
    pub n: usize,
    pub entries: Vec<Exact>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BinomialRow {
    pub k: usize,
    pub sign: i8,
    pub coefficient: Exact,
    pub term: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CounterexampleRow {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerificationRow {
    pub identity: String,
    pub statement: String,
    pub first: usize,
    pub last: usize,
    pub checked: usize,
    pub status: Status,
    pub failed: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<CounterexampleRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Rows {
    Numbers(Vec<NumberRow>),
    NumberPairs(Vec<NumberPairRow>),
    Polynomials(Vec<PolynomialRow>),
    Evaluation(Vec<EvaluationRow>),
    Fibonomials(Vec<FibonomialRow>),
    Binomial(Vec<BinomialRow>),
    Verification(Vec<VerificationRow>),
}

impl Rows {
    fn kind(&self) -> Kind {
        match self {
            Rows::Numbers(_) | Rows::NumberPairs(_) => Kind::Numbers,
            Rows::Polynomials(_) => Kind::Polynomials,
            Rows::Evaluation(_) => Kind::Evaluation,
            Rows::Fibonomials(_) => Kind::Fibonomials,
            Rows::Binomial(_) => Kind::Binomial,
            Rows::Verification(_) => Kind::Verification,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputDocument {
    pub kind: Kind,
    pub metadata: Metadata,
    pub rows: Rows,
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("document kind {kind} does not match its rows ({rows})")]
    KindMismatch {
        kind: &'static str,
        rows: &'static str,
    },
}

impl OutputDocument {
    pub fn new(metadata: Metadata, rows: Rows) -> Self {
        OutputDocument {
            kind: rows.kind(),
            metadata,
            rows,
        }
    }

    pub fn from_json(s: &str) -> Result<Self, ParseError> {
        let doc: OutputDocument = serde_json::from_str(s)?;
        if doc.kind != doc.rows.kind() {
            return Err(ParseError::KindMismatch {
                kind: doc.kind.as_str(),
                rows: doc.rows.kind().as_str(),
            });
        }
        Ok(doc)
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }
}

//! JSON documents for labeled posets and Cord, with error reporting by
//! JSON path and byte offset.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::descent_order::McdOrder;
use crate::error::{Error, Result};
use crate::labeling::{check_saturated, Label, LabelPoset, Labeling, LabelingKind};
use crate::poset::{build_poset, Poset};

/// A poset given by element names and cover pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDoc {
    /// Element names.
    pub elements: Vec<String>,
    /// Cover pairs `[x, y]` with `x ⋖ y`.
    pub covers: Vec<(String, String)>,
    /// Whether a unique minimum and maximum are required.
    #[serde(default = "default_true")]
    pub bounded: bool,
}

fn default_true() -> bool {
    true
}

/// The label poset: `"integers"` or a finite poset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LambdaDoc {
    /// A named label poset; only `"integers"` is recognised.
    Named(String),
    /// A finite label poset whose element names are the labels.
    Poset(PosetDoc),
}

impl Default for LambdaDoc {
    fn default() -> Self {
        LambdaDoc::Named("integers".into())
    }
}

/// A label written as a JSON number or string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LabelValue {
    /// Integer label.
    Int(i64),
    /// Label written as text (an integer or an element of a finite Λ).
    Text(String),
}

impl LabelValue {
    fn resolve(&self, lambda: &LabelPoset) -> Result<Label> {
        match (self, lambda) {
            (LabelValue::Int(i), LabelPoset::Integers) => Ok(*i),
            (LabelValue::Int(i), LabelPoset::Finite(_)) => lambda.parse(&i.to_string()),
            (LabelValue::Text(s), _) => lambda.parse(s),
        }
    }

    fn from_label(l: Label, lambda: &LabelPoset) -> LabelValue {
        match lambda {
            LabelPoset::Integers => LabelValue::Int(l),
            LabelPoset::Finite(_) => LabelValue::Text(lambda.display(l)),
        }
    }
}

/// A label that depends on the root chain below the edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootedLabelDoc {
    /// Saturated chain from the bottom element to the edge's lower element
    /// (the lower element itself may be omitted).
    pub root: Vec<String>,
    /// The edge `[x, y]`.
    pub edge: (String, String),
    /// The label.
    pub label: LabelValue,
}

/// Edge labels keyed `"x|y"`, plus rooted overrides.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelingDoc {
    /// Root-independent labels keyed by `"x|y"`.
    #[serde(default)]
    pub labels: BTreeMap<String, LabelValue>,
    /// Root-dependent labels.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rooted_labels: Vec<RootedLabelDoc>,
}

/// Expected Cord for regression checks, by vertex name.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedCordDoc {
    /// Cover relations of Cord.
    pub covers: Vec<(String, String)>,
    /// Polygon moves that are not cover relations.
    #[serde(default)]
    pub non_cover_moves: Vec<(String, String)>,
}

/// Labeling kind as written in documents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KindDoc {
    /// Edge labeling.
    El,
    /// Chain-edge labeling.
    Cl,
}

impl From<KindDoc> for LabelingKind {
    fn from(k: KindDoc) -> Self {
        match k {
            KindDoc::El => LabelingKind::El,
            KindDoc::Cl => LabelingKind::Cl,
        }
    }
}

impl From<LabelingKind> for KindDoc {
    fn from(k: LabelingKind) -> Self {
        match k {
            LabelingKind::El => KindDoc::El,
            LabelingKind::Cl => KindDoc::Cl,
        }
    }
}

/// A labeled poset document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    /// Optional name.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// The poset.
    pub poset: PosetDoc,
    /// The label poset Λ.
    #[serde(default)]
    pub lambda: LambdaDoc,
    /// The labeling.
    #[serde(default)]
    pub labeling: LabelingDoc,
    /// Declared labeling kind.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<KindDoc>,
    /// Expected Cord, for regression checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_cord: Option<ExpectedCordDoc>,
}

/// A poset with a labeling, ready for the library operations.
#[derive(Debug, Clone)]
pub struct LabeledPoset {
    /// Optional name.
    pub name: Option<String>,
    /// The poset.
    pub poset: Poset,
    /// The labeling.
    pub labeling: Labeling,
    /// Declared kind; CL when rooted labels are present and none declared.
    pub kind: LabelingKind,
    /// Expected Cord, if the document carried one.
    pub expected_cord: Option<ExpectedCordDoc>,
}

fn json_error(text: &str, path: String, err: &serde_json::Error) -> Error {
    let line = err.line();
    let column = err.column();
    let offset = if line == 0 {
        0
    } else {
        let before: usize = text.split_inclusive('\n').take(line - 1).map(str::len).sum();
        (before + column.saturating_sub(1)).min(text.len())
    };
    Error::Json {
        path: if path.is_empty() || path == "." { "$".into() } else { path },
        line,
        column,
        offset,
        message: err.to_string(),
    }
}

/// Parses any JSON value with path-aware error reporting.
pub fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value: T = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        json_error(text, path, e.inner())
    })?;
    de.end().map_err(|e| json_error(text, String::new(), &e))?;
    Ok(value)
}

/// Parses a labeled poset document.
pub fn parse_document(text: &str) -> Result<Document> {
    parse_json(text)
}

/// Parses and converts a labeled poset document.
pub fn parse_labeled_poset(text: &str) -> Result<LabeledPoset> {
    parse_document(text)?.to_labeled()
}

fn poset_from_doc(doc: &PosetDoc) -> Result<Poset> {
    build_poset(&doc.elements, &doc.covers, doc.bounded)
}

/// Splits an edge key `"x|y"` at the unique `|` whose two sides are both
/// element names.
pub fn split_edge_key(p: &Poset, key: &str) -> Result<(usize, usize)> {
    let mut found = Vec::new();
    for (i, ch) in key.char_indices() {
        if ch == '|' {
            if let (Ok(x), Ok(y)) = (p.index_of(&key[..i]), p.index_of(&key[i + 1..])) {
                found.push((x, y));
            }
        }
    }
    match found.as_slice() {
        [one] => Ok(*one),
        [] => Err(Error::Invalid(format!("edge key `{key}` is not of the form \"x|y\" with known elements"))),
        _ => Err(Error::Invalid(format!("edge key `{key}` splits into elements in more than one way"))),
    }
}

impl Document {
    /// Converts to a [`LabeledPoset`], resolving names and labels.
    pub fn to_labeled(&self) -> Result<LabeledPoset> {
        let poset = poset_from_doc(&self.poset)?;
        let lambda = match &self.lambda {
            LambdaDoc::Named(s) if s == "integers" => LabelPoset::Integers,
            LambdaDoc::Named(s) => return Err(Error::Invalid(format!("unknown label poset `{s}`"))),
            LambdaDoc::Poset(d) => {
                let mut d = d.clone();
                d.bounded = false;
                LabelPoset::Finite(poset_from_doc(&d)?)
            }
        };
        let mut labeling = Labeling::empty(lambda.clone(), poset.covers().len());
        for (key, value) in &self.labeling.labels {
            let (x, y) = split_edge_key(&poset, key)?;
            let id = poset.edge_id(x, y).ok_or_else(|| {
                Error::Invalid(format!("labeled pair `{key}` is not a cover relation"))
            })?;
            labeling.set_edge(id, value.resolve(&lambda)?);
        }
        for r in &self.labeling.rooted_labels {
            let x = poset.index_of(&r.edge.0)?;
            let y = poset.index_of(&r.edge.1)?;
            let mut root = r
                .root
                .iter()
                .map(|s| poset.index_of(s))
                .collect::<Result<Vec<_>>>()?;
            if root.last() != Some(&x) {
                root.push(x);
            }
            check_saturated(&poset, &root)?;
            if Some(root[0]) != poset.bottom() {
                return Err(Error::InvalidChain(format!(
                    "root of the label on ({}, {}) does not start at the bottom element",
                    r.edge.0, r.edge.1
                )));
            }
            if !poset.is_cover(x, y) {
                return Err(Error::Invalid(format!("({}, {}) is not a cover relation", r.edge.0, r.edge.1)));
            }
            labeling.set_rooted(&root, y, r.label.resolve(&lambda)?);
        }
        let kind = match self.kind {
            Some(k) => k.into(),
            None if labeling.is_edge_labeling() => LabelingKind::El,
            None => LabelingKind::Cl,
        };
        Ok(LabeledPoset {
            name: self.name.clone(),
            poset,
            labeling,
            kind,
            expected_cord: self.expected_cord.clone(),
        })
    }
}

fn poset_doc(p: &Poset, bounded: bool) -> PosetDoc {
    PosetDoc {
        elements: p.names().to_vec(),
        covers: p
            .covers()
            .iter()
            .map(|&(x, y)| (p.name(x).to_string(), p.name(y).to_string()))
            .collect(),
        bounded,
    }
}

impl LabeledPoset {
    /// Wraps a poset and labeling.
    pub fn new(name: Option<String>, poset: Poset, labeling: Labeling, kind: LabelingKind) -> Self {
        LabeledPoset {
            name,
            poset,
            labeling,
            kind,
            expected_cord: None,
        }
    }

    /// Converts back to a document (set edge labels and rooted labels).
    pub fn to_document(&self) -> Document {
        let p = &self.poset;
        let lambda = &self.labeling.lambda;
        let mut labels = BTreeMap::new();
        for (id, &(x, y)) in p.covers().iter().enumerate() {
            if let Some(l) = self.labeling.edge_label(id) {
                labels.insert(format!("{}|{}", p.name(x), p.name(y)), LabelValue::from_label(l, lambda));
            }
        }
        let rooted_labels = self
            .labeling
            .rooted_labels()
            .into_iter()
            .map(|(root, y, l)| RootedLabelDoc {
                root: root.iter().map(|&v| p.name(v).to_string()).collect(),
                edge: (p.name(*root.last().expect("nonempty root")).to_string(), p.name(y).to_string()),
                label: LabelValue::from_label(l, lambda),
            })
            .collect();
        Document {
            name: self.name.clone(),
            poset: poset_doc(p, p.is_bounded()),
            lambda: match lambda {
                LabelPoset::Integers => LambdaDoc::default(),
                LabelPoset::Finite(q) => LambdaDoc::Poset(poset_doc(q, false)),
            },
            labeling: LabelingDoc { labels, rooted_labels },
            kind: Some(self.kind.into()),
            expected_cord: self.expected_cord.clone(),
        }
    }

    /// Pretty JSON of [`LabeledPoset::to_document`].
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("document serializes") + "\n"
    }
}

/// One maximal chain of Cord in JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainDoc {
    /// Vertex name (label sequence, disambiguated on repeats).
    pub name: String,
    /// Element names along the chain.
    pub elements: Vec<String>,
    /// Labels along the chain.
    pub labels: Vec<String>,
    /// Descent positions (1-based interior positions).
    pub descents: Vec<usize>,
}

/// One polygon move in JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveDoc {
    /// Source vertex name.
    pub source: String,
    /// Target vertex name.
    pub target: String,
    /// Whether the move is a cover relation of Cord.
    pub cover: bool,
}

/// Cord in JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CordDoc {
    /// Maximal chains.
    pub chains: Vec<ChainDoc>,
    /// Polygon moves.
    pub moves: Vec<MoveDoc>,
    /// Cover relations of Cord by vertex name.
    pub covers: Vec<(String, String)>,
}

/// Builds the JSON view of Cord.
pub fn cord_doc(p: &Poset, mcd: &McdOrder) -> CordDoc {
    let names = mcd.vertex_names();
    CordDoc {
        chains: (0..mcd.len())
            .map(|i| ChainDoc {
                name: names[i].clone(),
                elements: mcd.chains[i].iter().map(|&v| p.name(v).to_string()).collect(),
                labels: mcd.labels[i].iter().map(|&l| mcd.lambda.display(l)).collect(),
                descents: mcd.descents[i].clone(),
            })
            .collect(),
        moves: mcd
            .moves
            .iter()
            .map(|mv| MoveDoc {
                source: names[mv.source].clone(),
                target: names[mv.target].clone(),
                cover: mcd.is_cover(mv.source, mv.target),
            })
            .collect(),
        covers: mcd
            .covers
            .iter()
            .map(|&(a, b)| (names[a].clone(), names[b].clone()))
            .collect(),
    }
}

/// Comparison of a computed Cord with an expected one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedCheck {
    /// Expected covers not found.
    pub missing_covers: Vec<(String, String)>,
    /// Computed covers not expected.
    pub extra_covers: Vec<(String, String)>,
    /// Expected non-cover moves not found.
    pub missing_non_cover_moves: Vec<(String, String)>,
    /// Computed non-cover moves not expected.
    pub extra_non_cover_moves: Vec<(String, String)>,
}

impl ExpectedCheck {
    /// True when everything matches.
    pub fn matches(&self) -> bool {
        self.missing_covers.is_empty()
            && self.extra_covers.is_empty()
            && self.missing_non_cover_moves.is_empty()
            && self.extra_non_cover_moves.is_empty()
    }
}

fn diff(a: &[(String, String)], b: &[(String, String)]) -> Vec<(String, String)> {
    a.iter().filter(|x| !b.contains(x)).cloned().collect()
}

/// Compares Cord's covers and non-cover moves with the expected ones, by
/// vertex name.
pub fn check_expected(mcd: &McdOrder, expected: &ExpectedCordDoc) -> ExpectedCheck {
    let names = mcd.vertex_names();
    let covers: Vec<(String, String)> = mcd
        .covers
        .iter()
        .map(|&(a, b)| (names[a].clone(), names[b].clone()))
        .collect();
    let non_cover: Vec<(String, String)> = mcd
        .moves
        .iter()
        .filter(|mv| !mcd.is_cover(mv.source, mv.target))
        .map(|mv| (names[mv.source].clone(), names[mv.target].clone()))
        .collect();
    ExpectedCheck {
        missing_covers: diff(&expected.covers, &covers),
        extra_covers: diff(&covers, &expected.covers),
        missing_non_cover_moves: diff(&expected.non_cover_moves, &non_cover),
        extra_non_cover_moves: diff(&non_cover, &expected.non_cover_moves),
    }
}

/// The expected Cord as a poset on the names it mentions plus `names`.
pub fn expected_poset(expected: &ExpectedCordDoc, names: &[String]) -> Result<Poset> {
    let mut all: Vec<String> = names.to_vec();
    for (a, b) in &expected.covers {
        for s in [a, b] {
            if !all.contains(s) {
                all.push(s.clone());
            }
        }
    }
    build_poset(&all, &expected.covers, false)
}

#[cfg(test)]
mod tests {
    use super::*;

    const DIAMOND: &str = r#"{
  "poset": {"elements": ["0", "a", "b", "1"], "covers": [["0","a"],["0","b"],["a","1"],["b","1"]]},
  "labeling": {"labels": {"0|a": 1, "a|1": 2, "0|b": "2", "b|1": 1}}
}"#;

    #[test]
    fn parses_labels_as_numbers_or_strings() {
        let lp = parse_labeled_poset(DIAMOND).unwrap();
        assert_eq!(lp.kind, LabelingKind::El);
        assert_eq!(lp.labeling.el_label(&lp.poset, 2, 3).unwrap(), 1);
        let again = parse_labeled_poset(&lp.to_json()).unwrap();
        assert_eq!(again.labeling, lp.labeling);
    }

    #[test]
    fn malformed_json_reports_path_and_offset() {
        let text = r#"{"poset": {"elements": ["0", 1], "covers": []}}"#;
        match parse_document(text).unwrap_err() {
            Error::Json { path, offset, line, .. } => {
                assert_eq!(path, "poset.elements[1]");
                assert_eq!(line, 1);
                assert!(offset > 20 && offset <= text.len());
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn edge_keys_with_bars() {
        let p = build_poset(&["1|2", "12"], &[("1|2", "12")], true).unwrap();
        assert_eq!(split_edge_key(&p, "1|2|12").unwrap(), (0, 1));
        assert!(split_edge_key(&p, "1|3").is_err());
    }
}

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An invariant value. Atoms are opaque strings compared byte-wise;
/// pairs come from combining two invariants.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Atom(String),
    Pair(Box<Label>, Box<Label>),
}

impl Label {
    pub fn atom(s: impl Into<String>) -> Self {
        Label::Atom(s.into())
    }

    pub fn pair(a: Label, b: Label) -> Self {
        Label::Pair(Box::new(a), Box::new(b))
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::atom(s)
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label::Atom(s)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Atom(s) => f.write_str(s),
            Label::Pair(a, b) => write!(f, "({a},{b})"),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Label::Atom(a) => s.serialize_str(a),
            Label::Pair(a, b) => (a.as_ref(), b.as_ref()).serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Atom(String),
            Int(i64),
            Pair(Box<Label>, Box<Label>),
        }
        Ok(match Raw::deserialize(d)? {
            Raw::Atom(s) => Label::Atom(s),
            Raw::Int(v) => Label::Atom(v.to_string()),
            Raw::Pair(a, b) => Label::Pair(a, b),
        })
    }
}

/// A labelling of objects by invariant values, together with the value
/// set `Δ` it is meant to cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Invariant {
    labels: BTreeMap<String, Label>,
    #[serde(skip)]
    extra_targets: BTreeSet<Label>,
}

impl Invariant {
    /// Invariant whose target is exactly its image.
    pub fn new<K: Into<String>, L: Into<Label>>(labels: impl IntoIterator<Item = (K, L)>) -> Self {
        Invariant {
            labels: labels.into_iter().map(|(k, l)| (k.into(), l.into())).collect(),
            extra_targets: BTreeSet::new(),
        }
    }

    /// Invariant with an explicit target set, which must contain the image.
    pub fn with_target<K: Into<String>, L: Into<Label>>(
        labels: impl IntoIterator<Item = (K, L)>,
        target: impl IntoIterator<Item = Label>,
    ) -> Result<Self> {
        let mut inv = Invariant::new(labels);
        let image = inv.image();
        let target: BTreeSet<Label> = target.into_iter().collect();
        if let Some(missing) = image.difference(&target).next() {
            return Err(Error::input(format!("label {missing} is outside the target set")));
        }
        inv.extra_targets = target.difference(&image).cloned().collect();
        Ok(inv)
    }

    pub fn label(&self, object: &str) -> Result<&Label> {
        self.labels.get(object).ok_or_else(|| Error::input(format!("object {object:?} is unlabelled")))
    }

    pub fn labels(&self) -> &BTreeMap<String, Label> {
        &self.labels
    }

    pub fn image(&self) -> BTreeSet<Label> {
        self.labels.values().cloned().collect()
    }

    pub fn target(&self) -> BTreeSet<Label> {
        let mut t = self.image();
        t.extend(self.extra_targets.iter().cloned());
        t
    }

    pub fn is_surjective(&self) -> bool {
        self.extra_targets.is_empty()
    }
}

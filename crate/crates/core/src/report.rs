//! Verdict records and their text, JSONL and CSV renderings.

use std::fmt;

use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Proven,
    Conjecture,
}

/// Named integers that justify a verdict, in insertion order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witnesses(Vec<(String, i128)>);

impl Witnesses {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, value: impl Into<i128>) {
        self.0.push((name.into(), value.into()));
    }

    pub fn get(&self, name: &str) -> Option<i128> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i128)> {
        self.0.iter().map(|(n, v)| (n.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Serialize for Witnesses {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (name, value) in &self.0 {
            map.serialize_entry(name, &value.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Witnesses {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct OrderedVisitor;

        impl<'de> Visitor<'de> for OrderedVisitor {
            type Value = Witnesses;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map of names to decimal strings")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Witnesses, A::Error> {
                let mut out = Vec::new();
                while let Some((name, value)) = access.next_entry::<String, String>()? {
                    let value = value.parse().map_err(serde::de::Error::custom)?;
                    out.push((name, value));
                }
                Ok(Witnesses(out))
            }
        }

        deserializer.deserialize_map(OrderedVisitor)
    }
}

mod decimal {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<u128>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.serialize_str(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<u128>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Outcome of checking one statement at one prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub theorem: String,
    pub p: u64,
    pub applicable: bool,
    pub branch: String,
    #[serde(with = "decimal")]
    pub lhs: Option<u128>,
    #[serde(with = "decimal")]
    pub rhs: Option<u128>,
    #[serde(with = "decimal")]
    pub modulus: Option<u128>,
    pub witnesses: Witnesses,
    pub pass: bool,
    pub kind: Kind,
}

pub const BRANCH_NA: &str = "n/a";
pub const BRANCH_EXCLUDED: &str = "excluded";

impl VerdictReport {
    pub fn not_applicable(theorem: &str, p: u64, kind: Kind, branch: &str) -> Self {
        Self {
            theorem: theorem.to_string(),
            p,
            applicable: false,
            branch: branch.to_string(),
            lhs: None,
            rhs: None,
            modulus: None,
            witnesses: Witnesses::new(),
            pass: true,
            kind,
        }
    }

    pub fn is_excluded(&self) -> bool {
        self.branch == BRANCH_EXCLUDED
    }

    /// A proven statement that did not hold.
    pub fn is_failure(&self) -> bool {
        !self.pass && self.kind == Kind::Proven
    }

    /// A conjecture that did not hold; flagged for review.
    pub fn is_candidate(&self) -> bool {
        !self.pass && self.kind == Kind::Conjecture
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn status(&self) -> &'static str {
        match (self.applicable, self.pass, self.kind) {
            (false, _, _) if self.is_excluded() => "EXCLUDED",
            (false, _, _) => "N/A",
            (true, true, _) => "PASS",
            (true, false, Kind::Proven) => "FAIL",
            (true, false, Kind::Conjecture) => "COUNTEREXAMPLE-CANDIDATE",
        }
    }

    fn witness_list(&self) -> String {
        self.witnesses
            .iter()
            .map(|(n, v)| format!("{n}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

fn opt(v: Option<u128>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

impl fmt::Display for VerdictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<10} p={:<6} {:<9} [{}]",
            self.theorem,
            self.p,
            self.status(),
            self.branch
        )?;
        if self.applicable {
            write!(
                f,
                " lhs={} rhs={} mod {}",
                opt(self.lhs),
                opt(self.rhs),
                opt(self.modulus)
            )?;
        }
        if !self.witnesses.is_empty() {
            write!(f, " {{{}}}", self.witness_list())?;
        }
        Ok(())
    }
}

/// Output formats of a verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    Text,
    Jsonl,
    Csv,
}

pub const CSV_COLUMNS: [&str; 10] = [
    "theorem",
    "p",
    "applicable",
    "branch",
    "lhs",
    "rhs",
    "modulus",
    "witnesses",
    "pass",
    "kind",
];

/// Renders `reports` after a one-line run header.
pub fn render(reports: &[VerdictReport], format: Format, header: &RunHeader) -> String {
    let mut out = String::new();
    match format {
        Format::Text => {
            out.push_str(&format!("# {}\n", header.describe()));
            for r in reports {
                out.push_str(&r.to_string());
                out.push('\n');
            }
        }
        Format::Jsonl => {
            out.push_str(
                &serde_json::to_string(&HeaderLine { header }).expect("header serializes"),
            );
            out.push('\n');
            for r in reports {
                out.push_str(&r.to_json_line());
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str(&format!("# {}\n", header.describe()));
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(CSV_COLUMNS).expect("in-memory write");
            for r in reports {
                w.write_record([
                    r.theorem.clone(),
                    r.p.to_string(),
                    r.applicable.to_string(),
                    r.branch.clone(),
                    opt(r.lhs),
                    opt(r.rhs),
                    opt(r.modulus),
                    r.witness_list(),
                    r.pass.to_string(),
                    match r.kind {
                        Kind::Proven => "proven".into(),
                        Kind::Conjecture => "conjecture".into(),
                    },
                ])
                .expect("in-memory write");
            }
            let bytes = w.into_inner().expect("in-memory flush");
            out.push_str(&String::from_utf8(bytes).expect("utf-8 fields"));
        }
    }
    out
}

/// Run parameters echoed at the top of every report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunHeader {
    pub theorems: Vec<String>,
    pub pmin: u64,
    pub pmax: u64,
    pub seed: u64,
    pub samples: usize,
}

impl RunHeader {
    fn describe(&self) -> String {
        format!(
            "theorems={} primes={}..{} seed={} samples={}",
            self.theorems.join(","),
            self.pmin,
            self.pmax,
            self.seed,
            self.samples
        )
    }
}

#[derive(Serialize)]
struct HeaderLine<'a> {
    header: &'a RunHeader,
}

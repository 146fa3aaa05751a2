//! Verdict transcripts and the flat key-value report format.

use std::fmt;

use crate::subset::GroupSubset;
use crate::sumset::FragmentReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Ne,
    Le,
    Lt,
    Ge,
    Gt,
}

impl Relation {
    pub fn holds<T: PartialOrd>(self, lhs: &T, rhs: &T) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Ne => lhs != rhs,
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "==",
            Relation::Ne => "!=",
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Ge => ">=",
            Relation::Gt => ">",
        }
    }
}

/// One evaluated (in)equality: both sides rendered, plus the outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub lhs: String,
    pub relation: Relation,
    pub rhs: String,
    pub pass: bool,
}

/// Compact set rendering without spaces, e.g. `{0,1,3}`.
pub fn set_token(x: &GroupSubset) -> String {
    let parts: Vec<String> = x.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

impl Check {
    pub fn int(name: impl Into<String>, lhs: i64, relation: Relation, rhs: i64) -> Self {
        Self {
            name: name.into(),
            lhs: lhs.to_string(),
            relation,
            rhs: rhs.to_string(),
            pass: relation.holds(&lhs, &rhs),
        }
    }

    pub fn size(name: impl Into<String>, lhs: usize, relation: Relation, rhs: usize) -> Self {
        Self::int(name, lhs as i64, relation, rhs as i64)
    }

    pub fn sets(name: impl Into<String>, lhs: &GroupSubset, relation: Relation, rhs: &GroupSubset) -> Self {
        let pass = match relation {
            Relation::Eq => lhs == rhs,
            Relation::Ne => lhs != rhs,
            Relation::Le => lhs.is_subset(rhs),
            Relation::Ge => rhs.is_subset(lhs),
            Relation::Lt => lhs.is_subset(rhs) && lhs != rhs,
            Relation::Gt => rhs.is_subset(lhs) && lhs != rhs,
        };
        Self {
            name: name.into(),
            lhs: set_token(lhs),
            relation,
            rhs: set_token(rhs),
            pass,
        }
    }

    pub fn flag(name: impl Into<String>, value: bool, expected: bool) -> Self {
        Self {
            name: name.into(),
            lhs: value.to_string(),
            relation: Relation::Eq,
            rhs: expected.to_string(),
            pass: value == expected,
        }
    }

    pub fn line(&self) -> String {
        format!(
            "{} {} {} {} {}",
            self.name,
            self.lhs,
            self.relation.symbol(),
            self.rhs,
            if self.pass { "pass" } else { "fail" }
        )
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Human,
    Machine,
}

/// Ordered list of key-value pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KvReport {
    entries: Vec<(String, String)>,
}

impl KvReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl fmt::Display) -> &mut Self {
        self.entries.push((key.into(), value.to_string()));
        self
    }

    pub fn push_checks(&mut self, prefix: &str, checks: &[Check]) -> &mut Self {
        for (i, c) in checks.iter().enumerate() {
            self.push(format!("{prefix}.{i}"), c.line());
        }
        self
    }

    pub fn append(&mut self, prefix: &str, other: &KvReport) -> &mut Self {
        for (k, v) in &other.entries {
            self.entries.push((format!("{prefix}.{k}"), v.clone()));
        }
        self
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Machine => {
                for (k, v) in &self.entries {
                    out.push_str(k);
                    out.push('=');
                    out.push_str(v);
                    out.push('\n');
                }
            }
            Format::Human => {
                let width = self.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in &self.entries {
                    out.push_str(&format!("{k:<width$}  {v}\n"));
                }
            }
        }
        out
    }
}

pub fn fragment_report_kv(r: &FragmentReport) -> KvReport {
    let mut kv = KvReport::new();
    kv.push("k", r.k)
        .push("separable", r.separable)
        .push("kappa", r.kappa)
        .push("alpha", r.alpha)
        .push("atom_count", r.atoms.len())
        .push("atoms_truncated", r.atoms_truncated);
    for (i, a) in r.atoms.iter().enumerate() {
        kv.push(format!("atoms[{i}]"), a.to_literal());
    }
    kv.push("fragment_count", r.fragment_count)
        .push("fragment_count_exact", r.fragment_count_exact)
        .push("oracle_used", r.oracle_used);
    kv
}

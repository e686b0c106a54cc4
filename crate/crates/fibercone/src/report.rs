//! Machine-readable and human-readable analysis reports.

use std::fmt::Write as _;

use fibercone_core::invariants::reduction::ReductionSource;
use fibercone_core::invariants::{InvariantTable, TriTable};
use fibercone_core::Analysis;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    /// Reporting degree `N`.
    pub limit: u32,
    pub working_degree: u32,
    pub checked_limit: u32,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    pub element: String,
    pub source: String,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckReport {
    pub passed: bool,
    pub f_ranks: Vec<[i64; 3]>,
    pub divergences: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTables {
    pub reduction: String,
    pub f: Vec<[i64; 3]>,
    pub alpha_torsion: Vec<[i64; 3]>,
    pub decomposition: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub verdict: String,
    pub reductions: Vec<ReductionTables>,
}

/// The JSON report. Tables are lists of `[i, j, value]` triples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub semigroup: Vec<u32>,
    #[serde(rename = "char")]
    pub characteristic: u32,
    pub seed: u64,
    pub ideal: Vec<String>,
    pub truncation: Truncation,
    pub reduction: Reduction,
    pub r: u32,
    pub mu: Vec<u64>,
    pub f: Vec<[i64; 3]>,
    pub alpha_free: Vec<i64>,
    pub alpha_torsion: Vec<[i64; 3]>,
    pub decomposition: String,
    pub hilbert_numerator: Vec<i64>,
    pub e: u64,
    pub reg: u32,
    pub fp: i64,
    pub torsion_length: u64,
    pub buchsbaum_constant: u64,
    pub cohen_macaulay: bool,
    pub buchsbaum: bool,
    pub gorenstein: bool,
    #[serde(rename = "type")]
    pub cm_type: Option<u64>,
    pub a_invariant: Option<i64>,
    pub canonical_shape: Option<Vec<i64>>,
    pub crosscheck: CrossCheckReport,
    pub comparisons: Option<ComparisonReport>,
}

fn triples(t: &TriTable) -> Vec<[i64; 3]> {
    t.entries().map(|(i, j, v)| [i as i64, j as i64, v]).collect()
}

fn nonzero_triples(t: &TriTable) -> Vec<[i64; 3]> {
    t.entries().filter(|e| e.2 != 0).map(|(i, j, v)| [i as i64, j as i64, v]).collect()
}

fn source_name(s: ReductionSource) -> String {
    match s {
        ReductionSource::Generator(i) => format!("generator {i}"),
        ReductionSource::Random => "random".into(),
        ReductionSource::Supplied(i) => format!("supplied {i}"),
    }
}

fn reduction_tables(name: &str, t: &InvariantTable) -> ReductionTables {
    ReductionTables {
        reduction: name.to_string(),
        f: triples(&t.f),
        alpha_torsion: nonzero_triples(&t.alpha_torsion),
        decomposition: fibercone_core::invariants::Decomposition::from_tables(t).to_string(),
    }
}

impl Report {
    pub fn from_analysis(a: &Analysis) -> Self {
        let c = &a.classification;
        let t = &a.tables;
        Report {
            semigroup: a.semigroup.generators().to_vec(),
            characteristic: a.characteristic,
            seed: a.seed,
            ideal: a.ideal.iter().map(|g| g.to_string()).collect(),
            truncation: Truncation {
                limit: a.certification.limit,
                working_degree: a.certification.working_degree,
                checked_limit: a.certification.checked_limit,
                passed: a.certification.passed,
            },
            reduction: Reduction {
                element: a.reduction.element.to_string(),
                source: source_name(a.reduction.source),
                verified: a.reduction.verified,
            },
            r: t.r,
            mu: t.mu.clone(),
            f: triples(&t.f),
            alpha_free: t.alpha_free.clone(),
            alpha_torsion: nonzero_triples(&t.alpha_torsion),
            decomposition: a.decomposition.to_string(),
            hilbert_numerator: a.hilbert.numerator.clone(),
            e: c.e,
            reg: c.reg,
            fp: c.fp,
            torsion_length: c.torsion_length,
            buchsbaum_constant: c.buchsbaum_constant,
            cohen_macaulay: c.cohen_macaulay,
            buchsbaum: c.buchsbaum,
            gorenstein: c.gorenstein,
            cm_type: c.cm_type,
            a_invariant: c.a_invariant,
            canonical_shape: c.canonical_shape.clone(),
            crosscheck: CrossCheckReport {
                passed: a.crosscheck.passed,
                f_ranks: triples(&a.crosscheck.f_ranks),
                divergences: a.crosscheck.divergences.clone(),
            },
            comparisons: a.comparison.as_ref().map(|cmp| ComparisonReport {
                verdict: cmp.verdict.to_string(),
                reductions: cmp
                    .reductions
                    .iter()
                    .zip(&cmp.tables)
                    .map(|(n, t)| reduction_tables(n, t))
                    .collect(),
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// `reduction-invariant; Buchsbaum` and the like.
    pub fn verdict(&self) -> String {
        let cmp = match &self.comparisons {
            Some(c) => c.verdict.clone(),
            None => "single reduction".into(),
        };
        let class = if self.gorenstein {
            "Gorenstein"
        } else if self.cohen_macaulay {
            "Cohen-Macaulay"
        } else if self.buchsbaum {
            "Buchsbaum, not Cohen-Macaulay"
        } else {
            "not Buchsbaum"
        };
        format!("{cmp}; {class}")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let list = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let gens: Vec<String> = self.semigroup.iter().map(|g| g.to_string()).collect();
        let _ = writeln!(s, "semigroup    <{}>  over GF({})", gens.join(","), self.characteristic);
        let _ = writeln!(s, "ideal        ({})", self.ideal.join(", "));
        let _ = writeln!(
            s,
            "truncation   N = {}, W = {}, recomputed at {}: {}",
            self.truncation.limit,
            self.truncation.working_degree,
            self.truncation.checked_limit,
            if self.truncation.passed { "agree" } else { "NOT CERTIFIED" }
        );
        let _ = writeln!(s, "reduction    {} ({}), r = {}", self.reduction.element, self.reduction.source, self.r);
        let mu: Vec<i64> = self.mu.iter().map(|&m| m as i64).collect();
        let _ = writeln!(s, "mu           {}", list(&mu));
        let _ = writeln!(s, "f            {}", table_text(&self.f));
        let _ = writeln!(s, "alpha        {}", list(&self.alpha_free));
        let _ = writeln!(s, "alpha_ij     {}", table_text(&self.alpha_torsion));
        let _ = writeln!(s, "F(I) =       {}", self.decomposition);
        let _ = writeln!(s, "Q(x)         {}", list(&self.hilbert_numerator));
        let _ = writeln!(
            s,
            "e = {}, reg = {}, fp = {}, torsion length = {}, C = {}",
            self.e, self.reg, self.fp, self.torsion_length, self.buchsbaum_constant
        );
        let yn = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(
            s,
            "CM: {}  Buchsbaum: {}  Gorenstein: {}",
            yn(self.cohen_macaulay),
            yn(self.buchsbaum),
            yn(self.gorenstein)
        );
        if let (Some(t), Some(a)) = (self.cm_type, self.a_invariant) {
            let _ = writeln!(s, "type = {t}, a-invariant = {a}");
        }
        if let Some(shape) = &self.canonical_shape {
            let _ = writeln!(s, "omega shifts {}", list(shape));
        }
        let _ = writeln!(
            s,
            "cross-check  {}",
            if self.crosscheck.passed { "agrees" } else { "DIVERGES" }
        );
        for d in &self.crosscheck.divergences {
            let _ = writeln!(s, "  {d}");
        }
        if let Some(cmp) = &self.comparisons {
            for red in &cmp.reductions {
                let _ = writeln!(s, "  {}: f {}; alpha_ij {}", red.reduction, table_text(&red.f), table_text(&red.alpha_torsion));
            }
        }
        let _ = writeln!(s, "verdict      {}", self.verdict());
        s
    }
}

fn table_text(t: &[[i64; 3]]) -> String {
    if t.is_empty() {
        return "-".into();
    }
    t.iter()
        .map(|[i, j, v]| format!("({i},{j})={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use fibercone_core::{analyze, fixtures, Options};

    #[test]
    fn json_round_trip() {
        let a = analyze(&fixtures::example_one(), &Options::default()).unwrap();
        let r = Report::from_analysis(&a);
        let text = r.to_json();
        assert_eq!(Report::from_json(&text).unwrap(), r);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        for key in ["char", "type", "mu", "f", "alpha_torsion", "comparisons", "truncation"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["f"], serde_json::json!([[1, 1, 1]]));
        assert_eq!(v["type"], serde_json::Value::Null);
    }

    #[test]
    fn text_mentions_decomposition_and_verdict() {
        let a = analyze(&fixtures::example_two(), &Options::default()).unwrap();
        let text = Report::from_analysis(&a).to_text();
        assert!(text.contains(&a.decomposition.to_string()));
        assert!(text.contains("not Buchsbaum"));
    }
}

//! Parallel analysis of many cases.

use std::fmt::Write as _;
use std::path::Path;

use fibercone_core::corpus::{derive_seed, random_corpus, CorpusSpec};
use fibercone_core::invariants::PropertyTally;
use fibercone_core::{analyze, Analysis, CaseSpec, ErrorCategory, Options};
use rayon::prelude::*;
use serde::Serialize;

use crate::casefile;
use crate::report::Report;

/// One case to run.
#[derive(Clone, Debug)]
pub struct SweepCase {
    pub name: String,
    pub case: CaseSpec,
    pub options: Options,
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub category: String,
    pub message: String,
}

#[derive(Debug)]
pub struct Outcome {
    pub name: String,
    pub result: Result<(Report, PropertyTally), Failure>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PropertyLine {
    pub name: String,
    pub checked: u32,
    pub violations: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Summary {
    pub cases: usize,
    pub analyzed: usize,
    pub failed: usize,
    pub cohen_macaulay: usize,
    pub gorenstein: usize,
    pub buchsbaum_not_cm: usize,
    pub not_buchsbaum: usize,
    pub reduction_invariant: usize,
    pub reduction_dependent: usize,
    pub failures_by_category: Vec<(String, usize)>,
    pub properties: Vec<PropertyLine>,
}

pub fn category_name(c: ErrorCategory) -> &'static str {
    match c {
        ErrorCategory::Parse => "input",
        ErrorCategory::Semigroup => "semigroup",
        ErrorCategory::NoReduction => "no-reduction",
        ErrorCategory::Truncation => "truncation",
        ErrorCategory::Internal => "internal",
    }
}

fn run_one(case: &SweepCase) -> Outcome {
    let result = match analyze(&case.case, &case.options) {
        Ok(a) => Ok(finish(&a)),
        Err(e) => Err(Failure {
            category: category_name(e.category()).into(),
            message: e.to_string(),
        }),
    };
    Outcome {
        name: case.name.clone(),
        result,
    }
}

fn finish(a: &Analysis) -> (Report, PropertyTally) {
    (Report::from_analysis(a), a.properties.clone())
}

/// Runs every case in parallel; the outcomes keep the input order.
pub fn run(cases: &[SweepCase]) -> Vec<Outcome> {
    cases.par_iter().map(run_one).collect()
}

/// Cases from every `*.case` file in `dir`, sorted by file name. Files
/// without an explicit seed get one derived from `master` and their index.
pub fn cases_from_dir(dir: &Path, master: u64, default_char: u64) -> anyhow::Result<Vec<SweepCase>> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "case"))
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for (i, p) in paths.iter().enumerate() {
        let text = std::fs::read_to_string(p)?;
        let file = casefile::parse(&text, default_char)
            .map_err(|e| anyhow::Error::new(e).context(p.display().to_string()))?;
        let mut options = file.options;
        if options.seed == 0 {
            options.seed = derive_seed(master, i as u64);
        }
        out.push(SweepCase {
            name: p.file_stem().map_or_else(|| p.display().to_string(), |s| s.to_string_lossy().into_owned()),
            case: file.case,
            options,
        });
    }
    Ok(out)
}

/// The random corpus described by `spec`.
pub fn cases_from_corpus(spec: &CorpusSpec, base: &Options) -> Vec<SweepCase> {
    random_corpus(spec)
        .into_iter()
        .enumerate()
        .map(|(i, case)| SweepCase {
            name: format!("random-{i}"),
            case,
            options: Options {
                seed: derive_seed(spec.seed, i as u64),
                ..base.clone()
            },
        })
        .collect()
}

pub fn summarize(outcomes: &[Outcome]) -> Summary {
    let mut s = Summary {
        cases: outcomes.len(),
        ..Summary::default()
    };
    let mut tally = PropertyTally::default();
    for o in outcomes {
        match &o.result {
            Ok((r, props)) => {
                s.analyzed += 1;
                s.cohen_macaulay += r.cohen_macaulay as usize;
                s.gorenstein += r.gorenstein as usize;
                s.buchsbaum_not_cm += (r.buchsbaum && !r.cohen_macaulay) as usize;
                s.not_buchsbaum += !r.buchsbaum as usize;
                match r.comparisons.as_ref().map(|c| c.verdict.as_str()) {
                    Some("reduction-invariant") => s.reduction_invariant += 1,
                    Some(_) => s.reduction_dependent += 1,
                    None => {}
                }
                tally.merge(props);
            }
            Err(f) => {
                s.failed += 1;
                match s.failures_by_category.iter_mut().find(|(c, _)| *c == f.category) {
                    Some(entry) => entry.1 += 1,
                    None => s.failures_by_category.push((f.category.clone(), 1)),
                }
            }
        }
    }
    s.failures_by_category.sort();
    s.properties = tally
        .counts
        .iter()
        .map(|c| PropertyLine {
            name: c.name.to_string(),
            checked: c.checked,
            violations: c.violations.len(),
        })
        .collect();
    s
}

/// One line per case.
pub fn case_line(o: &Outcome) -> String {
    match &o.result {
        Ok((r, _)) => {
            let mu: Vec<String> = r.mu.iter().map(|m| m.to_string()).collect();
            format!("{}: r={} mu=[{}] {}", o.name, r.r, mu.join(","), r.verdict())
        }
        Err(f) => format!("{}: error ({}): {}", o.name, f.category, f.message),
    }
}

pub fn summary_text(s: &Summary, properties: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} cases: {} analyzed, {} failed",
        s.cases, s.analyzed, s.failed
    );
    for (c, n) in &s.failures_by_category {
        let _ = writeln!(out, "  {c}: {n}");
    }
    let _ = writeln!(
        out,
        "Cohen-Macaulay {}, Gorenstein {}, Buchsbaum not CM {}, not Buchsbaum {}",
        s.cohen_macaulay, s.gorenstein, s.buchsbaum_not_cm, s.not_buchsbaum
    );
    let _ = writeln!(
        out,
        "reduction-invariant {}, reduction-dependent {}",
        s.reduction_invariant, s.reduction_dependent
    );
    if properties {
        for p in &s.properties {
            let _ = writeln!(out, "  {:<40} checked {:>6}  violations {}", p.name, p.checked, p.violations);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use fibercone_core::fixtures;

    #[test]
    fn fixture_sweep_counts() {
        let cases: Vec<SweepCase> = fixtures::all()
            .into_iter()
            .map(|(name, case)| SweepCase {
                name: name.into(),
                case,
                options: Options::default(),
            })
            .collect();
        let outcomes = run(&cases);
        let s = summarize(&outcomes);
        assert_eq!((s.analyzed, s.buchsbaum_not_cm, s.not_buchsbaum), (3, 2, 1));
        assert!(s.properties.iter().all(|p| p.violations == 0));
        assert!(case_line(&outcomes[0]).starts_with("example-1: r=2"));
    }

    #[test]
    fn failures_do_not_stop_the_sweep() {
        let mut bad = fixtures::closing_example();
        bad.ideal = vec!["t^7".into()];
        let cases = vec![
            SweepCase {
                name: "bad".into(),
                case: bad,
                options: Options::default(),
            },
            SweepCase {
                name: "good".into(),
                case: fixtures::closing_example(),
                options: Options::default(),
            },
        ];
        let outcomes = run(&cases);
        let s = summarize(&outcomes);
        assert_eq!((s.analyzed, s.failed), (1, 1));
        assert_eq!(s.failures_by_category, vec![("input".to_string(), 1)]);
        assert!(case_line(&outcomes[0]).contains("error (input)"));
    }
}

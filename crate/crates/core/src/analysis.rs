//! The full pipeline for one case: truncation choice and certification,
//! reduction, tables, classification, the rank cross-check, property checks
//! and the comparison across reductions.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

use crate::error::{Error, Result};
use crate::field::{PrimeField, DEFAULT_CHARACTERISTIC};
use crate::invariants::reduction::verify_supplied;
use crate::invariants::{
    check_properties, classify, compare, compute_tables, find_reduction, hilbert_data, random_reductions,
    required_limit, top_degree, Classification, Comparison, Decomposition, HilbertData, InvariantTable,
    PropertyTally, ReductionCandidate,
};
use crate::linalg::{Ambient, Ideal};
use crate::oracle::{build_chain, cross_check, CrossCheck};
use crate::semigroup::NumericalSemigroup;
use crate::series::{SeriesElement, SeriesRing};

/// The mathematical input of a case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseSpec {
    pub semigroup: Vec<u32>,
    pub characteristic: u64,
    /// Generators of `I` in the element grammar.
    pub ideal: Vec<String>,
    /// Reductions to use, in order; the first one drives the report.
    pub reductions: Vec<String>,
}

impl CaseSpec {
    pub fn new(semigroup: &[u32], ideal: &[&str]) -> Self {
        CaseSpec {
            semigroup: semigroup.to_vec(),
            characteristic: DEFAULT_CHARACTERISTIC as u64,
            ideal: ideal.iter().map(|s| s.to_string()).collect(),
            reductions: Vec::new(),
        }
    }

    pub fn with_reductions(mut self, reductions: &[&str]) -> Self {
        self.reductions = reductions.iter().map(|s| s.to_string()).collect();
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Largest reduction number searched.
    pub r_bound: u32,
    /// Random combinations tried once the generators fail, and per random
    /// comparison reduction.
    pub attempts: u32,
    pub seed: u64,
    /// Fixed reporting degree `N`; chosen automatically when `None`.
    pub truncation: Option<u32>,
    /// Random reductions compared with the primary one.
    pub comparisons: usize,
    pub max_doublings: u32,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            r_bound: 50,
            attempts: 20,
            seed: 0,
            truncation: None,
            comparisons: 2,
            max_doublings: 4,
        }
    }
}

/// The truncation a report was produced at and its doubling check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certification {
    /// Reporting degree `N`.
    pub limit: u32,
    /// Working degree `W` of element arithmetic.
    pub working_degree: u32,
    /// The degree the results were recomputed at, `2N`.
    pub checked_limit: u32,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub semigroup: NumericalSemigroup,
    pub characteristic: u32,
    pub seed: u64,
    pub certification: Certification,
    pub ideal: Vec<SeriesElement>,
    pub minimal_generators: u64,
    pub reduction: ReductionCandidate,
    pub tables: InvariantTable,
    pub decomposition: Decomposition,
    pub classification: Classification,
    pub hilbert: HilbertData,
    pub crosscheck: CrossCheck,
    /// `None` when only one reduction was available.
    pub comparison: Option<Comparison>,
    pub properties: PropertyTally,
}

impl Analysis {
    /// Every reported number, flattened; equal fingerprints mean equal
    /// reports up to the truncation fields.
    pub fn fingerprint(&self) -> Vec<i64> {
        let mut out = Vec::new();
        push_tables(&mut out, &self.tables);
        let c = &self.classification;
        out.extend([
            c.cohen_macaulay as i64,
            c.buchsbaum as i64,
            c.gorenstein as i64,
            c.e as i64,
            c.reg as i64,
            c.fp,
            c.torsion_length as i64,
            c.buchsbaum_constant as i64,
            c.cm_type.map_or(-1, |t| t as i64),
            c.a_invariant.unwrap_or(i64::MIN),
            self.minimal_generators as i64,
        ]);
        out.extend(c.canonical_shape.iter().flatten().copied());
        out.extend(self.hilbert.numerator.iter().copied());
        out.extend(self.crosscheck.f_ranks.entries().map(|e| e.2));
        if let Some(cmp) = &self.comparison {
            out.push(cmp.tables.len() as i64);
            for t in &cmp.tables {
                push_tables(&mut out, t);
            }
        }
        out
    }
}

fn push_tables(out: &mut Vec<i64>, t: &InvariantTable) {
    out.push(t.r as i64);
    out.extend(t.mu.iter().map(|&m| m as i64));
    out.extend(t.f.entries().map(|e| e.2));
    out.extend(t.alpha_free.iter().copied());
    out.extend(t.alpha_torsion.entries().map(|e| e.2));
    out.extend(t.torsion_dims.iter().map(|&d| d as i64));
}

// Parsed inputs shared by all truncation levels.
struct Context {
    semigroup: Arc<NumericalSemigroup>,
    field: PrimeField,
    ideal: Vec<SeriesElement>,
    reductions: Vec<SeriesElement>,
    valuation: u32,
    max_valuation: u32,
    options: Options,
}

impl Context {
    fn new(case: &CaseSpec, options: &Options) -> Result<Self> {
        let semigroup = Arc::new(NumericalSemigroup::new(&case.semigroup)?);
        let field = PrimeField::new(case.characteristic)?;
        // keep every written term until the working degree is known
        let reader = SeriesRing::new(semigroup.clone(), field, u32::MAX);
        let parse = |texts: &[String]| -> Result<Vec<SeriesElement>> {
            texts.iter().map(|t| reader.parse(t)).collect()
        };
        let ideal = parse(&case.ideal)?;
        let reductions = parse(&case.reductions)?;
        let valuation = ideal
            .iter()
            .filter_map(|g| g.valuation())
            .min()
            .ok_or(Error::ZeroIdeal)?;
        let max_valuation = ideal
            .iter()
            .chain(&reductions)
            .filter_map(|g| g.valuation())
            .max()
            .unwrap_or(0);
        if let Some(i) = reductions.iter().position(|a| a.is_zero()) {
            return Err(Error::NotAReduction {
                element: case.reductions[i].clone(),
                bound: options.r_bound,
            });
        }
        Ok(Context {
            semigroup,
            field,
            ideal,
            reductions,
            valuation,
            max_valuation,
            options: options.clone(),
        })
    }

    fn r_cap(&self) -> u32 {
        self.options.r_bound.min(self.semigroup.multiplicity().saturating_sub(1))
    }

    fn required(&self, r: u32) -> u32 {
        required_limit(self.valuation, self.semigroup.multiplicity(), self.semigroup.conductor(), r)
    }

    fn working_degree(&self, limit: u32) -> u32 {
        let extra = (self.r_cap() as u64 + 1) * self.max_valuation as u64;
        (limit as u64 + extra).min(u32::MAX as u64 / 2) as u32
    }

    fn ideal_at(&self, limit: u32) -> Result<Ideal> {
        let ring = SeriesRing::new(self.semigroup.clone(), self.field, self.working_degree(limit));
        let amb = Ambient::new(ring, limit);
        Ideal::new(&amb, &self.ideal)
    }

    fn primary_reduction(&self, ideal: &mut Ideal, rng: &mut ChaCha8Rng) -> Result<ReductionCandidate> {
        match self.reductions.first() {
            Some(a) => verify_supplied(ideal, a, 0, self.options.r_bound),
            None => find_reduction(ideal, self.options.attempts, self.options.r_bound, rng),
        }
    }

    // Smallest reporting degree that decides the reduction number and
    // covers every power the analysis touches.
    fn auto_limit(&self) -> Result<u32> {
        let mut guess = 1u32;
        loop {
            let limit = self.required(guess);
            let mut ideal = self.ideal_at(limit)?;
            let mut rng = ChaCha8Rng::seed_from_u64(self.options.seed);
            match self.primary_reduction(&mut ideal, &mut rng) {
                Ok(red) => return Ok(self.required(red.reduction_number)),
                Err(Error::TruncationInsufficient(_)) if guess < self.options.r_bound.max(1) => {
                    guess = (2 * guess + 1).min(self.options.r_bound.max(1));
                }
                Err(e) => return Err(e),
            }
        }
    }

    fn run_at(&self, limit: u32) -> Result<Analysis> {
        let opts = &self.options;
        let mut ideal = self.ideal_at(limit)?;
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let primary = self.primary_reduction(&mut ideal, &mut rng)?;
        let r = primary.reduction_number;
        let need = self.required(r);
        if need > limit {
            return Err(Error::TruncationInsufficient(format!(
                "reduction number {r} needs N >= {need}, have N = {limit}"
            )));
        }
        let mut others = Vec::new();
        for (i, a) in self.reductions.iter().enumerate().skip(1) {
            others.push(verify_supplied(&mut ideal, a, i, opts.r_bound)?);
        }
        others.extend(random_reductions(&mut ideal, opts.comparisons, opts.attempts, opts.r_bound, &mut rng)?);

        let one = analyze_reduction(&mut ideal, &primary)?;
        let properties = check_properties(
            &mut ideal,
            &primary.element,
            &one.tables,
            &one.decomposition,
            &one.classification,
            &one.hilbert,
        )?
        .into_result()?;

        let comparison = if others.is_empty() {
            None
        } else {
            let mut names = alloc::vec![primary.element.to_string()];
            let mut tables = alloc::vec![one.tables.clone()];
            for red in &others {
                if red.reduction_number != r {
                    return Err(Error::inconsistency(
                        "reduction comparison",
                        format!("reduction {} has reduction number {}", red.element, red.reduction_number),
                    ));
                }
                let other = analyze_reduction(&mut ideal, red)?;
                if other.classification.buchsbaum != one.classification.buchsbaum {
                    return Err(Error::inconsistency(
                        "reduction comparison",
                        format!("Buchsbaum test depends on the reduction {}", red.element),
                    ));
                }
                names.push(red.element.to_string());
                tables.push(other.tables);
            }
            Some(compare(names, tables, one.classification.buchsbaum)?)
        };

        let minimal_generators = ideal.minimal_generators();
        Ok(Analysis {
            semigroup: (*self.semigroup).clone(),
            characteristic: self.field.characteristic(),
            seed: opts.seed,
            certification: Certification {
                limit,
                working_degree: self.working_degree(limit),
                checked_limit: limit,
                passed: false,
            },
            ideal: ideal.generators().to_vec(),
            minimal_generators,
            reduction: primary,
            tables: one.tables,
            decomposition: one.decomposition,
            classification: one.classification,
            hilbert: one.hilbert,
            crosscheck: one.crosscheck,
            comparison,
            properties,
        })
    }

    // Runs at `limit` and `2 limit` and insists on identical results.
    fn certified(&self, limit: u32) -> Result<Option<Analysis>> {
        let mut a = self.run_at(limit)?;
        let doubled = limit.checked_mul(2).ok_or_else(|| {
            Error::TruncationNotCertified(format!("cannot double N = {limit}"))
        })?;
        let b = self.run_at(doubled)?;
        if a.fingerprint() != b.fingerprint() {
            return Ok(None);
        }
        a.certification.checked_limit = doubled;
        a.certification.passed = true;
        Ok(Some(a))
    }
}

struct ReductionAnalysis {
    tables: InvariantTable,
    decomposition: Decomposition,
    classification: Classification,
    hilbert: HilbertData,
    crosscheck: CrossCheck,
}

fn analyze_reduction(ideal: &mut Ideal, red: &ReductionCandidate) -> Result<ReductionAnalysis> {
    let a = &red.element;
    let r = red.reduction_number;
    let (tables, pieces) = compute_tables(ideal, a, r)?;
    let decomposition = Decomposition::from_tables(&tables);
    decomposition.validate(&tables)?;
    let classification = classify(ideal, a, &tables, &pieces)?;
    let hilbert = hilbert_data(&tables, &decomposition)?;
    let chain = build_chain(ideal, a, top_degree(r) as usize)?;
    let crosscheck = cross_check(&chain, &tables, &hilbert);
    if !crosscheck.passed {
        return Err(Error::inconsistency("rank cross-check", crosscheck.divergences.join("; ")));
    }
    Ok(ReductionAnalysis {
        tables,
        decomposition,
        classification,
        hilbert,
        crosscheck,
    })
}

/// Analyzes a case. With a fixed truncation the run either certifies at
/// that degree or fails; otherwise the degree is chosen from the
/// reduction number and doubled up to `max_doublings` times until the
/// doubling check passes.
pub fn analyze(case: &CaseSpec, options: &Options) -> Result<Analysis> {
    let ctx = Context::new(case, options)?;
    match options.truncation {
        Some(limit) => ctx.certified(limit)?.ok_or_else(|| {
            Error::TruncationNotCertified(format!("results at N = {limit} and N = {} differ", 2 * limit))
        }),
        None => {
            let mut limit = ctx.auto_limit()?;
            for _ in 0..=options.max_doublings {
                if let Some(a) = ctx.certified(limit)? {
                    return Ok(a);
                }
                limit *= 2;
            }
            Err(Error::TruncationNotCertified(format!(
                "no agreement after {} doublings",
                options.max_doublings
            )))
        }
    }
}

/// The reporting degree `analyze` would certify at, without running the
/// analysis.
pub fn certified_limit(case: &CaseSpec, options: &Options) -> Result<u32> {
    let ctx = Context::new(case, options)?;
    match options.truncation {
        Some(limit) => Ok(limit),
        None => ctx.auto_limit(),
    }
}

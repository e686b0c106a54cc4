//! Random monomial cases for sweeps and property suites.

use alloc::format;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::analysis::CaseSpec;
use crate::semigroup::{gcd, NumericalSemigroup};

/// Size caps for generated cases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub count: usize,
    pub max_semigroup_generators: usize,
    pub max_generator: u32,
    /// Semigroups with a larger conductor are redrawn, which keeps the
    /// truncations (and the running time) small.
    pub max_conductor: u32,
    pub max_ideal_generators: usize,
    /// Draw ideals `(t^x, t^y)` with `y - x` a gap of `S`.
    pub two_generated: bool,
    pub seed: u64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            count: 200,
            max_semigroup_generators: 5,
            max_generator: 60,
            max_conductor: 120,
            max_ideal_generators: 5,
            two_generated: false,
            seed: 0,
        }
    }
}

impl CorpusSpec {
    /// Parses `key=value` pairs separated by commas, e.g.
    /// `count=50,seed=3,two-generated`.
    pub fn parse(text: &str) -> Result<Self, alloc::string::String> {
        let mut spec = CorpusSpec::default();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item.split_once('=').unwrap_or((item, ""));
            let num = || value.parse::<u64>().map_err(|_| format!("bad value for {key}: {value:?}"));
            match key {
                "count" => spec.count = num()? as usize,
                "seed" => spec.seed = num()?,
                "gens" => spec.max_semigroup_generators = num()? as usize,
                "max-gen" => spec.max_generator = num()? as u32,
                "max-conductor" => spec.max_conductor = num()? as u32,
                "ideal-gens" => spec.max_ideal_generators = num()? as usize,
                "two-generated" => spec.two_generated = true,
                _ => return Err(format!("unknown corpus key {key:?}")),
            }
        }
        if spec.max_semigroup_generators == 0 || spec.max_ideal_generators == 0 || spec.max_generator < 2 {
            return Err("corpus caps must allow at least one generator".into());
        }
        Ok(spec)
    }
}

/// Seed of case `index` in a sweep with master seed `master`.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    // splitmix64 step
    let mut z = master ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn below(rng: &mut ChaCha8Rng, n: u64) -> u64 {
    rng.next_u64() % n.max(1)
}

fn range(rng: &mut ChaCha8Rng, lo: u64, hi: u64) -> u64 {
    lo + below(rng, hi - lo + 1)
}

/// A semigroup with `2..=max` generators in `[2, max_generator]`, `gcd = 1`
/// and conductor at most the cap.
pub fn random_semigroup(rng: &mut ChaCha8Rng, spec: &CorpusSpec) -> NumericalSemigroup {
    loop {
        let k = range(rng, 2.min(spec.max_semigroup_generators as u64), spec.max_semigroup_generators as u64);
        let gens: Vec<u32> = (0..k).map(|_| range(rng, 2, spec.max_generator as u64) as u32).collect();
        if gens.iter().copied().fold(0, gcd) != 1 {
            continue;
        }
        if let Ok(s) = NumericalSemigroup::new(&gens) {
            if s.conductor() <= spec.max_conductor && s.conductor() > 0 {
                return s;
            }
        }
    }
}

/// One random monomial case.
pub fn random_case(rng: &mut ChaCha8Rng, spec: &CorpusSpec) -> CaseSpec {
    let s = random_semigroup(rng, spec);
    let window = s.conductor() + s.multiplicity();
    let members: Vec<u32> = s.members_in(1, window + 1).collect();
    let exps: Vec<u32> = if spec.two_generated {
        loop {
            let x = members[below(rng, members.len() as u64) as usize];
            let partners: Vec<u32> = s.gaps().iter().map(|g| x + g).filter(|&y| s.contains(y)).collect();
            if !partners.is_empty() {
                break alloc::vec![x, partners[below(rng, partners.len() as u64) as usize]];
            }
        }
    } else {
        let lo = 2.min(spec.max_ideal_generators as u64);
        let k = range(rng, lo, spec.max_ideal_generators as u64) as usize;
        // redraw ideals that collapse to fewer than `lo` monomial generators
        loop {
            let mut e: Vec<u32> = (0..k).map(|_| members[below(rng, members.len() as u64) as usize]).collect();
            e.sort_unstable();
            e.dedup();
            let minimal: Vec<u32> = e
                .iter()
                .copied()
                .filter(|&x| !e.iter().any(|&y| y < x && s.contains(x - y)))
                .collect();
            if minimal.len() as u64 >= lo {
                break minimal;
            }
        }
    };
    let ideal: Vec<alloc::string::String> = exps.iter().map(|e| format!("t^{e}")).collect();
    let refs: Vec<&str> = ideal.iter().map(|s| s.as_str()).collect();
    CaseSpec::new(s.generators(), &refs)
}

/// `spec.count` cases, case `i` drawn from its own derived seed.
pub fn random_corpus(spec: &CorpusSpec) -> Vec<CaseSpec> {
    (0..spec.count)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(spec.seed, i as u64));
            random_case(&mut rng, spec)
        })
        .collect()
}

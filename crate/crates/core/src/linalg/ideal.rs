use alloc::vec::Vec;

use super::{Ambient, Subspace};
use crate::error::{Error, Result};
use crate::series::SeriesElement;

/// An ideal of the truncated ring with cached powers `I^n` and products
/// `m I^n`.
///
/// Caches grow through [`Ideal::prepare`]; the accessors then borrow
/// immutably so several powers can be held at once.
#[derive(Clone, Debug)]
pub struct Ideal {
    ambient: Ambient,
    generators: Vec<SeriesElement>,
    valuation: u32,
    powers: Vec<Subspace>,
    maximal: Vec<Subspace>,
}

impl Ideal {
    /// Generators are re-homed into the ambient's working ring; zero
    /// generators are dropped.
    pub fn new(ambient: &Ambient, generators: &[SeriesElement]) -> Result<Self> {
        let ring = ambient.ring();
        let generators: Vec<SeriesElement> = generators
            .iter()
            .map(|g| ring.embed(g))
            .filter(|g| !g.is_zero())
            .collect();
        let valuation = generators
            .iter()
            .filter_map(|g| g.valuation())
            .min()
            .ok_or(Error::ZeroIdeal)?;
        let whole = ambient.whole();
        let first = ambient.span_ideal(&generators)?;
        let mut ideal = Ideal {
            ambient: ambient.clone(),
            generators,
            valuation,
            powers: alloc::vec![whole, first],
            maximal: Vec::new(),
        };
        ideal.prepare(1);
        Ok(ideal)
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn generators(&self) -> &[SeriesElement] {
        &self.generators
    }

    /// Smallest valuation of an element of the ideal.
    pub fn valuation(&self) -> u32 {
        self.valuation
    }

    /// Computes `I^k` and `m I^k` for all `k <= n`.
    pub fn prepare(&mut self, n: usize) {
        while self.powers.len() <= n {
            let last = self.powers.last().expect("I^0 is always present");
            let next = self.ambient.mul_elements(last, &self.generators);
            self.powers.push(next);
        }
        while self.maximal.len() <= n {
            let k = self.maximal.len();
            let next = self.ambient.mul_maximal(&self.powers[k]);
            self.maximal.push(next);
        }
    }

    /// `I^n`; panics unless [`Ideal::prepare`] covered `n`.
    pub fn power(&self, n: usize) -> &Subspace {
        &self.powers[n]
    }

    /// `m I^n`; panics unless [`Ideal::prepare`] covered `n`.
    pub fn maximal_product(&self, n: usize) -> &Subspace {
        &self.maximal[n]
    }

    /// `μ(I^n) = λ(I^n / m I^n)`.
    pub fn mu(&mut self, n: usize) -> u64 {
        self.prepare(n);
        self.ambient.dim(&self.powers[n]) - self.ambient.dim(&self.maximal[n])
    }

    /// Minimal number of generators, `μ(I)`.
    pub fn minimal_generators(&mut self) -> u64 {
        self.mu(1)
    }
}

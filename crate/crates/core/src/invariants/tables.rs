//! The `μ(I^n)` sequence, the `f_{k,l}` table and the multiplicities of the
//! free and torsion summands.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::{Ideal, Subspace};
use crate::series::SeriesElement;

/// A triangular table indexed by `1 <= k <= r-1`, `1 <= l <= r-k`.
///
/// Reads outside that range return 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriTable {
    r: u32,
    values: Vec<Vec<i64>>,
}

impl TriTable {
    pub fn zeros(r: u32) -> Self {
        let values = (1..r).map(|k| alloc::vec![0; (r - k) as usize]).collect();
        TriTable { r, values }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn in_range(&self, k: i64, l: i64) -> bool {
        k >= 1 && l >= 1 && k + l <= self.r as i64
    }

    pub fn get(&self, k: i64, l: i64) -> i64 {
        if self.in_range(k, l) {
            self.values[k as usize - 1][l as usize - 1]
        } else {
            0
        }
    }

    pub fn set(&mut self, k: u32, l: u32, value: i64) {
        assert!(self.in_range(k as i64, l as i64), "index ({k},{l}) outside table for r = {}", self.r);
        self.values[k as usize - 1][l as usize - 1] = value;
    }

    /// `(k, l, value)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32, i64)> + '_ {
        self.values.iter().enumerate().flat_map(|(k, row)| {
            row.iter()
                .enumerate()
                .map(move |(l, &v)| (k as u32 + 1, l as u32 + 1, v))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries().all(|e| e.2 == 0)
    }
}

/// The invariants attached to one ideal and one reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantTable {
    pub r: u32,
    /// `μ(I^0), …, μ(I^{r+2})`; the last two only witness stabilization.
    pub mu: Vec<u64>,
    pub f: TriTable,
    /// `α_0, …, α_r`.
    pub alpha_free: Vec<i64>,
    pub alpha_torsion: TriTable,
    /// `λ(T_k / m I^k) = f_{k,r-k}` for `k = 1..r-1`.
    pub torsion_dims: Vec<u64>,
}

impl InvariantTable {
    /// `μ(I^n)` with `μ(I^{-1}) = 0` and `μ(I^n) = μ(I^r)` for large `n`.
    pub fn mu_at(&self, n: i64) -> i64 {
        if n < 0 {
            0
        } else {
            let i = (n as usize).min(self.mu.len() - 1);
            self.mu[i] as i64
        }
    }

    /// The h-vector `μ(I^i) - μ(I^{i-1})`, `i = 0..r`.
    pub fn h_vector(&self) -> Vec<i64> {
        (0..=self.r as i64).map(|i| self.mu_at(i) - self.mu_at(i - 1)).collect()
    }

    pub fn torsion_length(&self) -> u64 {
        self.torsion_dims.iter().sum()
    }
}

/// `μ(I^n)` for `n = 0..=r+2`, asserting the last three agree.
pub fn mu_table(ideal: &mut Ideal, r: u32) -> Result<Vec<u64>> {
    let mu: Vec<u64> = (0..=r as usize + 2).map(|n| ideal.mu(n)).collect();
    let last = mu[r as usize];
    if mu[r as usize + 1] != last || mu[r as usize + 2] != last {
        return Err(Error::inconsistency(
            "mu stabilization",
            format!("μ(I^r), μ(I^(r+1)), μ(I^(r+2)) = {:?}", &mu[r as usize..]),
        ));
    }
    Ok(mu)
}

/// `I^k ∩ (m I^{k+l} : a^l)`.
pub fn colon_piece(ideal: &mut Ideal, a: &SeriesElement, k: u32, l: u32) -> Subspace {
    ideal.prepare((k + l) as usize);
    let amb = ideal.ambient();
    let col = amb.colon_power(ideal.maximal_product((k + l) as usize), a, l);
    amb.intersect(ideal.power(k as usize), &col)
}

/// `f_{k,l} = λ((I^k ∩ (m I^{k+l} : a^l)) / m I^k)` over the whole table.
pub fn f_table(ideal: &mut Ideal, a: &SeriesElement, r: u32) -> Result<TriTable> {
    let mut f = TriTable::zeros(r);
    for k in 1..r {
        for l in 1..=r - k {
            let piece = colon_piece(ideal, a, k, l);
            let len = ideal
                .ambient()
                .quotient_length(&piece, ideal.maximal_product(k as usize))?;
            f.set(k, l, len as i64);
        }
        for l in 2..=r - k {
            if f.get(k as i64, l as i64) < f.get(k as i64, l as i64 - 1) {
                return Err(Error::inconsistency(
                    "f monotonicity",
                    format!("f({k},{l}) < f({k},{})", l - 1),
                ));
            }
        }
    }
    Ok(f)
}

/// Inverts `f_{k,l} = Σ_Λ α_{i,j}` by second differences and checks the
/// round trip.
pub fn alpha_torsion(f: &TriTable) -> Result<TriTable> {
    let r = f.r();
    let mut alpha = TriTable::zeros(r);
    for (k, l, _) in f.entries() {
        let (k, l) = (k as i64, l as i64);
        let v = (f.get(k, l) - f.get(k, l - 1)) - (f.get(k - 1, l + 1) - f.get(k - 1, l));
        if v < 0 {
            return Err(Error::inconsistency(
                "torsion multiplicities",
                format!("α({k},{l}) = {v} < 0"),
            ));
        }
        alpha.set(k as u32, l as u32, v);
    }
    let back = f_from_alpha(&alpha);
    if &back != f {
        return Err(Error::inconsistency(
            "torsion round trip",
            format!("re-substituted table {back:?} differs from {f:?}"),
        ));
    }
    Ok(alpha)
}

/// `f_{k,l} = Σ α_{i,j}` over `Λ = {1<=i<=k, k-i+1<=j<=k-i+l}`.
pub fn f_from_alpha(alpha: &TriTable) -> TriTable {
    let r = alpha.r();
    let mut f = TriTable::zeros(r);
    for k in 1..r {
        for l in 1..=r - k {
            let mut s = 0;
            for i in 1..=k {
                for j in (k - i + 1)..=(k - i + l) {
                    s += alpha.get(i as i64, j as i64);
                }
            }
            f.set(k, l, s);
        }
    }
    f
}

/// `α_0 = 1`, `α_i = μ(I^i) - μ(I^{i-1}) - (f_{i,r-i} - f_{i-1,r-i+1})`.
pub fn alpha_free(mu: &[u64], f: &TriTable, r: u32) -> Result<Vec<i64>> {
    let mu_at = |n: i64| if n < 0 { 0 } else { mu[n as usize] as i64 };
    let r = r as i64;
    let mut out = alloc::vec![1i64];
    for i in 1..=r {
        let v = mu_at(i) - mu_at(i - 1) - (f.get(i, r - i) - f.get(i - 1, r - i + 1));
        if v < 0 {
            return Err(Error::inconsistency("free multiplicities", format!("α_{i} = {v} < 0")));
        }
        out.push(v);
    }
    if r > 0 && out[r as usize] == 0 {
        return Err(Error::inconsistency("free multiplicities", "α_r = 0"));
    }
    Ok(out)
}

/// `T_k = I^k ∩ (m I^r : a^{r-k})`, `k = 1..r-1`: the lifts of the graded
/// pieces of the torsion submodule.
pub fn torsion_pieces(ideal: &mut Ideal, a: &SeriesElement, r: u32) -> Vec<Subspace> {
    (1..r).map(|k| colon_piece(ideal, a, k, r - k)).collect()
}

/// The complete table for a verified reduction with reduction number `r`.
///
/// Also returns the torsion pieces, whose lengths are checked against the
/// extremal column of the `f` table.
pub fn compute_tables(
    ideal: &mut Ideal,
    a: &SeriesElement,
    r: u32,
) -> Result<(InvariantTable, Vec<Subspace>)> {
    let mu = mu_table(ideal, r)?;
    let f = f_table(ideal, a, r)?;
    let alpha_torsion = alpha_torsion(&f)?;
    let alpha_free = alpha_free(&mu, &f, r)?;
    let pieces = torsion_pieces(ideal, a, r);
    let mut torsion_dims = Vec::with_capacity(pieces.len());
    for (k, t) in pieces.iter().enumerate() {
        let k = k + 1;
        let len = ideal.ambient().quotient_length(t, ideal.maximal_product(k))?;
        let expect = f.get(k as i64, r as i64 - k as i64);
        if len as i64 != expect {
            return Err(Error::inconsistency(
                "torsion pieces",
                format!("λ(T_{k}/mI^{k}) = {len} but f({k},{}) = {expect}", r as usize - k),
            ));
        }
        torsion_dims.push(len);
    }
    Ok((
        InvariantTable {
            r,
            mu,
            f,
            alpha_free,
            alpha_torsion,
            torsion_dims,
        },
        pieces,
    ))
}

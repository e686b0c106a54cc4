//! A second route to the `f_{k,l}` table: explicit matrices of
//! multiplication by `a` between the graded pieces `I^n / m I^n` and the
//! kernels of their composites.
//!
//! Only the subspaces `I^n` and `m I^n` are shared with the colon route;
//! products by `a`, coordinates and ranks are computed here with dense
//! elimination.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::invariants::{HilbertData, InvariantTable, TriTable};
use crate::linalg::Ideal;
use crate::series::SeriesElement;

/// A dense matrix over `GF(p)`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    /// `self · rhs`.
    pub fn mul(&self, f: PrimeField, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = DenseMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let y = rhs.get(k, j);
                    if y != 0 {
                        let slot = &mut out.data[i * rhs.cols + j];
                        *slot = f.add(*slot, f.mul(x, y));
                    }
                }
            }
        }
        out
    }

    pub fn rank(&self, f: PrimeField) -> usize {
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows).find(|&i| m[i * cols + col] != 0) else { continue };
            for j in 0..cols {
                m.swap(rank * cols + j, p * cols + j);
            }
            let inv = f.inv(m[rank * cols + col]);
            for i in rank + 1..rows {
                let c = m[i * cols + col];
                if c != 0 {
                    let c = f.mul(c, inv);
                    for j in col..cols {
                        m[i * cols + j] = f.sub_mul(m[i * cols + j], c, m[rank * cols + j]);
                    }
                }
            }
            rank += 1;
        }
        rank
    }
}

// Reduced echelon rows over a window of exponents [lo, hi).
struct DenseEchelon {
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl DenseEchelon {
    fn new() -> Self {
        DenseEchelon {
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    fn reduce(&self, f: PrimeField, v: &mut [u32]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = f.sub_mul(*x, c, y);
                }
            }
        }
    }

    fn insert(&mut self, f: PrimeField, mut v: Vec<u32>) -> bool {
        self.reduce(f, &mut v);
        let Some(p) = v.iter().position(|&x| x != 0) else { return false };
        let inv = f.inv(v[p]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for (x, &y) in row.iter_mut().zip(&v) {
                    *x = f.sub_mul(*x, c, y);
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
}

struct Piece {
    lo: u32,
    hi: u32,
    // m I^n restricted to the window
    denominator: DenseEchelon,
    // coset representatives of I^n / m I^n, reduced modulo the denominator
    basis: DenseEchelon,
}

impl Piece {
    fn dense(&self, v: &[(u32, u32)]) -> Vec<u32> {
        let mut out = vec![0u32; (self.hi - self.lo) as usize];
        for &(e, c) in v {
            if e >= self.lo && e < self.hi {
                out[(e - self.lo) as usize] = c;
            }
        }
        out
    }

    fn sparse(&self, v: &[u32]) -> Vec<(u32, u32)> {
        v.iter()
            .enumerate()
            .filter(|t| *t.1 != 0)
            .map(|(i, &c)| (self.lo + i as u32, c))
            .collect()
    }

    // Coordinates in the coset basis of an element of I^n; None if it is not
    // in I^n.
    fn coordinates(&self, f: PrimeField, v: &[(u32, u32)]) -> Option<Vec<u32>> {
        if v.iter().any(|t| t.0 < self.lo) {
            return None;
        }
        let mut d = self.dense(v);
        self.denominator.reduce(f, &mut d);
        let coords: Vec<u32> = self.basis.pivots.iter().map(|&p| d[p]).collect();
        for (row, &c) in self.basis.rows.iter().zip(&coords) {
            if c != 0 {
                for (x, &y) in d.iter_mut().zip(row) {
                    *x = f.sub_mul(*x, c, y);
                }
            }
        }
        d.iter().all(|&x| x == 0).then_some(coords)
    }
}

/// The graded pieces `I^n / m I^n`, `n = 0..=top`, and the matrices of
/// multiplication by `a` between consecutive pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMapChain {
    field: PrimeField,
    dims: Vec<usize>,
    /// `maps[n]` sends degree `n` to degree `n + 1`; columns are images of
    /// basis vectors.
    maps: Vec<DenseMatrix>,
}

impl GradedMapChain {
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn map(&self, n: usize) -> &DenseMatrix {
        &self.maps[n]
    }

    /// Matrix of `a^l` from degree `k` to degree `k + l`.
    pub fn composite(&self, k: usize, l: usize) -> DenseMatrix {
        let mut acc = DenseMatrix::identity(self.dims[k]);
        for n in k..k + l {
            acc = self.maps[n].mul(self.field, &acc);
        }
        acc
    }

    /// `dim ker(a^l : degree k → degree k + l)`.
    pub fn kernel_dim(&self, k: usize, l: usize) -> usize {
        self.dims[k] - self.composite(k, l).rank(self.field)
    }

    /// Adds one to entry `(i, j)` of `maps[n]`, for exercising the checks.
    pub fn perturb(&mut self, n: usize, i: usize, j: usize) {
        let f = self.field;
        let m = &mut self.maps[n];
        let v = f.add(m.get(i, j), 1);
        m.set(i, j, v);
    }
}

/// Builds the chain up to degree `top`.
pub fn build_chain(ideal: &mut Ideal, a: &SeriesElement, top: usize) -> Result<GradedMapChain> {
    ideal.prepare(top);
    let amb = ideal.ambient().clone();
    let f = amb.field();
    let a = amb.ring().embed(a);
    let mut pieces = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let num = ideal.power(n);
        let den = ideal.maximal_product(n);
        let hi = den.tail();
        let lo = num.valuation().unwrap_or(hi).min(hi);
        let mut piece = Piece {
            lo,
            hi,
            denominator: DenseEchelon::new(),
            basis: DenseEchelon::new(),
        };
        for row in den.rows() {
            let d = piece.dense(row);
            piece.denominator.insert(f, d);
        }
        let mut candidates: Vec<Vec<(u32, u32)>> = num.rows().to_vec();
        candidates.extend(amb.semigroup().members_in(num.tail(), hi).map(|s| vec![(s, 1)]));
        for v in candidates {
            let mut d = piece.dense(&v);
            piece.denominator.reduce(f, &mut d);
            piece.basis.insert(f, d);
        }
        pieces.push(piece);
    }
    let dims: Vec<usize> = pieces.iter().map(|p| p.basis.rows.len()).collect();
    let mut maps = Vec::with_capacity(top);
    for n in 0..top {
        let (src, dst) = (&pieces[n], &pieces[n + 1]);
        let mut m = DenseMatrix::zeros(dims[n + 1], dims[n]);
        for (j, q) in src.basis.rows.iter().enumerate() {
            let image = shift_mul(f, &a, &src.sparse(q), dst.hi);
            let coords = dst.coordinates(f, &image).ok_or_else(|| {
                Error::inconsistency("oracle", format!("a · (basis vector {j} of degree {n}) ∉ I^{}", n + 1))
            })?;
            for (i, c) in coords.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        maps.push(m);
    }
    Ok(GradedMapChain { field: f, dims, maps })
}

fn shift_mul(f: PrimeField, a: &SeriesElement, v: &[(u32, u32)], bound: u32) -> Vec<(u32, u32)> {
    let mut dense: Vec<(u32, u32)> = Vec::new();
    for &(e, c) in v {
        for &(ea, ca) in a.terms() {
            let s = e as u64 + ea as u64;
            if s < bound as u64 {
                dense.push((s as u32, f.mul(c, ca)));
            }
        }
    }
    dense.sort_unstable_by_key(|t| t.0);
    let mut out: Vec<(u32, u32)> = Vec::new();
    for (e, c) in dense {
        match out.last_mut() {
            Some(last) if last.0 == e => last.1 = f.add(last.1, c),
            _ => out.push((e, c)),
        }
    }
    out.retain(|t| t.1 != 0);
    out
}

/// `f_{k,l} = μ(I^k) - rank(M_{k+l-1} ∘ … ∘ M_k)` for `1 <= k <= r-1`,
/// `1 <= l <= r-k`; `None` outside that range.
pub fn f_via_ranks(chain: &GradedMapChain, r: u32, k: u32, l: u32) -> Option<i64> {
    if k < 1 || l < 1 || k + l > r || (k + l) as usize > chain.top() {
        return None;
    }
    Some(chain.kernel_dim(k as usize, l as usize) as i64)
}

/// Outcome of comparing the rank route with the colon route.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub passed: bool,
    pub f_ranks: TriTable,
    /// One line per divergence.
    pub divergences: Vec<String>,
}

/// Compares the chain with the tables computed by colons.
pub fn cross_check(chain: &GradedMapChain, tables: &InvariantTable, hilbert: &HilbertData) -> CrossCheck {
    let r = tables.r;
    let ru = r as usize;
    let mut out = Vec::new();
    for (n, &d) in chain.dims().iter().enumerate() {
        if d as i64 != tables.mu_at(n as i64) {
            out.push(format!("dim of degree {n}: {d} but μ = {}", tables.mu_at(n as i64)));
        }
    }
    let mut f_ranks = TriTable::zeros(r);
    for k in 1..r {
        for l in 1..=r - k {
            let v = f_via_ranks(chain, r, k, l).unwrap_or(-1);
            f_ranks.set(k, l, v);
            let expect = tables.f.get(k as i64, l as i64);
            if v != expect {
                out.push(format!("f({k},{l}): colon route {expect}, rank route {v}"));
            }
        }
        // kernels of a^l grow with l and stop growing at l = r - k
        let mut prev = 0;
        for l in 1..=chain.top() - k as usize {
            let kd = chain.kernel_dim(k as usize, l);
            if kd < prev {
                out.push(format!("ker a^{l} in degree {k} shrinks"));
            }
            if l > ru - k as usize && kd as i64 != tables.f.get(k as i64, (r - k) as i64) {
                out.push(format!(
                    "ker a^{l} in degree {k} is {kd}, not f({k},{}) = {}",
                    r - k,
                    tables.f.get(k as i64, (r - k) as i64)
                ));
            }
            prev = kd;
        }
    }
    for n in ru..chain.top() {
        let m = chain.map(n);
        if m.rows() != m.cols() || m.rank(chain.field) != m.cols() {
            out.push(format!("multiplication by a from degree {n} is not bijective"));
        }
    }
    // λ(F/a^{r+1}F) = Σ_k dim coker(a^{r+1} into degree k)
    if chain.top() >= 2 * ru {
        let mut total = 0i64;
        for k in 0..=2 * ru {
            let dim = chain.dims()[k] as i64;
            total += if k > ru {
                dim - chain.composite(k - ru - 1, ru + 1).rank(chain.field) as i64
            } else {
                dim
            };
        }
        let expect = tables.mu_at(r as i64) * (r as i64 + 1) + tables.torsion_length() as i64;
        if total != expect {
            out.push(format!("λ(F/a^(r+1)F) by ranks {total}, expected {expect}"));
        }
    } else {
        out.push(format!("chain too short for the a^(r+1) check: top {}", chain.top()));
    }
    let h: Vec<i64> = (0..=ru)
        .map(|i| chain.dims()[i] as i64 - if i == 0 { 0 } else { chain.dims()[i - 1] as i64 })
        .collect();
    if h != hilbert.numerator {
        out.push(format!("h-vector from chain {h:?}, numerator {:?}", hilbert.numerator));
    }
    CrossCheck {
        passed: out.is_empty(),
        f_ranks,
        divergences: out,
    }
}

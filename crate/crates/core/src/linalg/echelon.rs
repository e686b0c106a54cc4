//! Gaussian elimination over `GF(p)` on sparse rows indexed by exponent.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::field::PrimeField;

/// Sorted `(exponent, coefficient)` pairs without zero coefficients.
pub type SparseVec = Vec<(u32, u32)>;

/// A basis kept in reduced row-echelon form. Pivots are the lowest exponent
/// of each row, rows are monic at the pivot and no row has a nonzero entry in
/// another row's pivot column.
pub(crate) struct Rref {
    field: PrimeField,
    width: u32,
    pivots: BTreeMap<u32, usize>,
    rows: Vec<SparseVec>,
    scratch: Vec<u32>,
}

impl Rref {
    /// Entries at exponents `>= width` are ignored by every operation.
    pub(crate) fn new(field: PrimeField, width: u32) -> Self {
        Rref {
            field,
            width,
            pivots: BTreeMap::new(),
            rows: Vec::new(),
            scratch: vec![0; width as usize],
        }
    }

    /// Wraps rows that are already in reduced echelon form.
    pub(crate) fn from_rref(field: PrimeField, width: u32, rows: &[SparseVec]) -> Self {
        let mut r = Rref::new(field, width);
        for row in rows {
            let row: SparseVec = row.iter().copied().filter(|t| t.0 < width).collect();
            if let Some(&(p, _)) = row.first() {
                r.pivots.insert(p, r.rows.len());
                r.rows.push(row);
            }
        }
        r
    }

    /// Residual of `v` modulo the row space: no entry in any pivot column.
    pub(crate) fn reduce(&mut self, v: &[(u32, u32)]) -> SparseVec {
        let f = self.field;
        let mut lo = u32::MAX;
        let mut hi = 0u32;
        for &(e, c) in v {
            if e < self.width {
                self.scratch[e as usize] = c;
                lo = lo.min(e);
                hi = hi.max(e + 1);
            }
        }
        if lo == u32::MAX {
            return Vec::new();
        }
        for (&pc, &ri) in self.pivots.range(lo..) {
            let c = self.scratch[pc as usize];
            if c == 0 {
                continue;
            }
            for &(e, x) in &self.rows[ri] {
                let slot = &mut self.scratch[e as usize];
                *slot = f.sub_mul(*slot, c, x);
                hi = hi.max(e + 1);
            }
        }
        let mut out = Vec::new();
        for e in lo..hi {
            let slot = &mut self.scratch[e as usize];
            if *slot != 0 {
                out.push((e, *slot));
                *slot = 0;
            }
        }
        out
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub(crate) fn insert(&mut self, v: &[(u32, u32)]) -> bool {
        let mut r = self.reduce(v);
        let Some(&(lead, lc)) = r.first() else {
            return false;
        };
        let f = self.field;
        if lc != 1 {
            let inv = f.inv(lc);
            for t in r.iter_mut() {
                t.1 = f.mul(t.1, inv);
            }
        }
        for row in self.rows.iter_mut() {
            if let Ok(i) = row.binary_search_by_key(&lead, |t| t.0) {
                let c = row[i].1;
                *row = axpy(f, row, c, &r);
            }
        }
        self.pivots.insert(lead, self.rows.len());
        self.rows.push(r);
        true
    }

    /// Rows sorted by pivot.
    pub(crate) fn into_rows(mut self) -> Vec<SparseVec> {
        let order: Vec<usize> = self.pivots.values().copied().collect();
        order
            .into_iter()
            .map(|i| core::mem::take(&mut self.rows[i]))
            .collect()
    }
}

/// `x - c*y` on sparse vectors.
pub(crate) fn axpy(f: PrimeField, x: &[(u32, u32)], c: u32, y: &[(u32, u32)]) -> SparseVec {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            out.push(x[i]);
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            let v = f.neg(f.mul(c, y[j].1));
            if v != 0 {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = f.sub_mul(x[i].1, c, y[j].1);
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Basis of `{c : Σ c_i images[i] = 0}`, each kernel vector sparse over the
/// indices `0..images.len()`. Entries at exponents `>= width` are ignored.
pub(crate) fn kernel(field: PrimeField, width: u32, images: &[SparseVec]) -> Vec<SparseVec> {
    let f = field;
    let n = images.len();
    let mut pivots: BTreeMap<u32, usize> = BTreeMap::new();
    let mut rows: Vec<(SparseVec, Vec<u32>)> = Vec::new();
    let mut out = Vec::new();
    let mut img = vec![0u32; width as usize];
    for (i, v) in images.iter().enumerate() {
        let mut combo = vec![0u32; n];
        combo[i] = 1;
        let mut lo = u32::MAX;
        for &(e, c) in v {
            if e < width {
                img[e as usize] = c;
                lo = lo.min(e);
            }
        }
        if lo != u32::MAX {
            for (&pc, &ri) in pivots.range(lo..) {
                let c = img[pc as usize];
                if c == 0 {
                    continue;
                }
                let (prow, pcombo) = &rows[ri];
                for &(e, x) in prow {
                    let slot = &mut img[e as usize];
                    *slot = f.sub_mul(*slot, c, x);
                }
                for (k, &x) in pcombo.iter().enumerate() {
                    if x != 0 {
                        combo[k] = f.sub_mul(combo[k], c, x);
                    }
                }
            }
        }
        let mut residual = Vec::new();
        if lo != u32::MAX {
            for e in lo..width {
                let slot = &mut img[e as usize];
                if *slot != 0 {
                    residual.push((e, *slot));
                    *slot = 0;
                }
            }
        }
        match residual.first() {
            None => out.push(
                combo
                    .iter()
                    .enumerate()
                    .filter(|t| *t.1 != 0)
                    .map(|(k, &x)| (k as u32, x))
                    .collect(),
            ),
            Some(&(lead, lc)) => {
                let inv = f.inv(lc);
                for t in residual.iter_mut() {
                    t.1 = f.mul(t.1, inv);
                }
                for x in combo.iter_mut() {
                    *x = f.mul(*x, inv);
                }
                pivots.insert(lead, rows.len());
                rows.push((residual, combo));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::new(7).unwrap()
    }

    #[test]
    fn rref_is_reduced() {
        let mut r = Rref::new(f(), 10);
        assert!(r.insert(&[(1, 1), (3, 2)]));
        assert!(r.insert(&[(3, 1), (5, 1)]));
        assert!(!r.insert(&[(1, 1), (3, 3), (5, 1)]));
        let rows = r.into_rows();
        // row 1 has had its column 3 eliminated: (1) + 5*(5)
        assert_eq!(rows, alloc::vec![alloc::vec![(1, 1), (5, 5)], alloc::vec![(3, 1), (5, 1)]]);
    }

    #[test]
    fn kernel_finds_dependencies() {
        let imgs = alloc::vec![
            alloc::vec![(0, 1), (2, 1)],
            alloc::vec![(2, 1)],
            alloc::vec![(0, 1)],
            alloc::vec![(9, 4)],
        ];
        // index 3 is ignored past the width
        let k = kernel(f(), 5, &imgs);
        assert_eq!(k.len(), 2);
        for v in &k {
            let mut acc = [0u32; 5];
            for &(i, c) in v {
                for &(e, x) in &imgs[i as usize] {
                    if e < 5 {
                        acc[e as usize] = f().add(acc[e as usize], f().mul(c, x));
                    }
                }
            }
            assert_eq!(acc, [0; 5]);
        }
    }
}

//! The Hilbert numerator `Q(x)` with `H_{F(I)}(x) = Q(x) / (1 - x)`.

use alloc::format;
use alloc::vec::Vec;

use super::classify::Decomposition;
use super::tables::InvariantTable;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// Coefficients of `Q`, lowest degree first.
    pub numerator: Vec<i64>,
    /// `Q(1)`, the multiplicity.
    pub multiplicity: i64,
}

/// `Q = Σ (μ(I^i) - μ(I^{i-1})) x^i`, checked against the decomposition's
/// series `Σ α_i x^i + Σ α_{i,j} (x^i - x^{i+j})` and against `Q(1) = e`.
pub fn hilbert_data(tables: &InvariantTable, decomposition: &Decomposition) -> Result<HilbertData> {
    let numerator = tables.h_vector();
    let mut from_decomposition = alloc::vec![0i64; numerator.len()];
    for (i, &m) in decomposition.free.iter().enumerate() {
        from_decomposition[i] += m;
    }
    for (i, j, m) in decomposition.torsion.entries() {
        from_decomposition[i as usize] += m;
        from_decomposition[(i + j) as usize] -= m;
    }
    if from_decomposition != numerator {
        return Err(Error::inconsistency(
            "Hilbert numerator",
            format!("h-vector {numerator:?} but decomposition gives {from_decomposition:?}"),
        ));
    }
    let multiplicity: i64 = numerator.iter().sum();
    let e = tables.mu_at(tables.r as i64);
    if multiplicity != e {
        return Err(Error::inconsistency(
            "Hilbert numerator",
            format!("Q(1) = {multiplicity} but e = {e}"),
        ));
    }
    Ok(HilbertData {
        numerator,
        multiplicity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::tables::{alpha_free, alpha_torsion, TriTable};

    fn tables(r: u32, mu: &[u64], f: &[(u32, u32, i64)]) -> InvariantTable {
        let mut ft = TriTable::zeros(r);
        for &(k, l, v) in f {
            ft.set(k, l, v);
        }
        InvariantTable {
            r,
            mu: mu.to_vec(),
            alpha_free: alpha_free(mu, &ft, r).unwrap(),
            alpha_torsion: alpha_torsion(&ft).unwrap(),
            torsion_dims: (1..r).map(|k| ft.get(k as i64, (r - k) as i64) as u64).collect(),
            f: ft,
        }
    }

    #[test]
    fn numerators() {
        let t = tables(2, &[1, 3, 3, 3, 3], &[(1, 1, 1)]);
        let h = hilbert_data(&t, &Decomposition::from_tables(&t)).unwrap();
        assert_eq!((h.numerator, h.multiplicity), (alloc::vec![1, 2, 0], 3));

        let t = tables(3, &[1, 4, 4, 4, 4, 4], &[(1, 1, 1), (1, 2, 2), (2, 1, 1)]);
        let h = hilbert_data(&t, &Decomposition::from_tables(&t)).unwrap();
        assert_eq!(h.numerator, alloc::vec![1, 3, 0, 0]);

        let t = tables(0, &[1, 1, 1], &[]);
        assert_eq!(hilbert_data(&t, &Decomposition::from_tables(&t)).unwrap().numerator, alloc::vec![1]);
    }

    #[test]
    fn mismatch_is_reported() {
        let t = tables(2, &[1, 3, 3, 3, 3], &[(1, 1, 1)]);
        let mut d = Decomposition::from_tables(&t);
        d.free[1] += 1;
        assert!(hilbert_data(&t, &d).is_err());
    }
}

//! The matrix of q-decomposition numbers of one block.

use alloc::vec::Vec;

use crate::error::{violation, Result};
use crate::fock::FockVector;
use crate::laurent::LaurentPoly;
use crate::partitions::{BlockId, Partition};

/// `d_{lam,mu}` for every partition `lam` of a block (rows) and every
/// restricted `mu` (columns), both in increasing lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalBasisMatrix {
    block: BlockId,
    rows: Vec<Partition>,
    cols: Vec<Partition>,
    entries: Vec<Vec<LaurentPoly>>,
}

impl CanonicalBasisMatrix {
    /// `entries[r][c]` is the coefficient of `rows[r]` in `G(cols[c])`.
    pub fn new(
        block: BlockId,
        rows: Vec<Partition>,
        cols: Vec<Partition>,
        entries: Vec<Vec<LaurentPoly>>,
    ) -> Result<Self> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(violation!("matrix shape does not match its labels"));
        }
        if !rows.windows(2).all(|w| w[0] < w[1]) || !cols.windows(2).all(|w| w[0] < w[1]) {
            return Err(violation!("matrix labels are not in increasing lex order"));
        }
        Ok(CanonicalBasisMatrix { block, rows, cols, entries })
    }

    pub fn block(&self) -> &BlockId {
        &self.block
    }

    pub fn rows(&self) -> &[Partition] {
        &self.rows
    }

    pub fn cols(&self) -> &[Partition] {
        &self.cols
    }

    pub fn entries(&self) -> &[Vec<LaurentPoly>] {
        &self.entries
    }

    fn row_index(&self, lam: &Partition) -> Option<usize> {
        self.rows.binary_search(lam).ok()
    }

    fn col_index(&self, mu: &Partition) -> Option<usize> {
        self.cols.binary_search(mu).ok()
    }

    /// `d_{lam,mu}`; zero when either label is absent.
    pub fn entry(&self, lam: &Partition, mu: &Partition) -> LaurentPoly {
        match (self.row_index(lam), self.col_index(mu)) {
            (Some(r), Some(c)) => self.entries[r][c].clone(),
            _ => LaurentPoly::zero(),
        }
    }

    /// `G(mu)` as a Fock space vector.
    pub fn column(&self, mu: &Partition) -> Option<FockVector> {
        let c = self.col_index(mu)?;
        let mut v = FockVector::zero(self.block.params);
        for (lam, row) in self.rows.iter().zip(&self.entries) {
            v.add_term(lam.clone(), &row[c]);
        }
        Some(v)
    }

    /// Checks unitriangularity, `q Z[q]` off the diagonal and dominance support.
    pub fn check_axioms(&self) -> Result<()> {
        for (c, mu) in self.cols.iter().enumerate() {
            for (lam, row) in self.rows.iter().zip(&self.entries) {
                let d = &row[c];
                if lam == mu {
                    if !d.is_one() {
                        return Err(violation!("d({lam},{mu}) = {d}, expected 1"));
                    }
                } else if !d.divisible_by_q() {
                    return Err(violation!("d({lam},{mu}) = {d} is not in qZ[q]"));
                } else if !d.is_zero() && !mu.dominated_by(lam) {
                    return Err(violation!("d({lam},{mu}) = {d} but {mu} is not dominated by {lam}"));
                }
            }
        }
        Ok(())
    }
}

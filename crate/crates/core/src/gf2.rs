//! Exact linear algebra over GF(2) with bit-packed rows.
//!
//! Every homology and span computation in the crate reduces to the routines
//! here. Rows are stored as `u64` words; bit `j` of a row lives in word
//! `j / 64` at position `j % 64`. The pivot of a nonzero row is its lowest
//! set bit, so echelon forms read left to right in column order.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector {index} of the subspace is not contained in the ambient span")]
    ContainmentViolation { index: usize },
}

const WORD: usize = 64;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A dense vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; word_count(len)],
        }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    /// Parses a string of `0`/`1` characters; bit 0 is the first character.
    pub fn from_str_bits(s: &str) -> Self {
        let bits: Vec<bool> = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => false,
                '1' => true,
                other => panic!("not a bit: {other:?}"),
            })
            .collect();
        Self::from_bits(&bits)
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range (len {})", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range (len {})", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range (len {})", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Lowest set bit at or after `from`.
    pub fn next_one(&self, from: usize) -> Option<usize> {
        if from >= self.len {
            return None;
        }
        let mut w = from / WORD;
        let mut word = self.words[w] & (!0u64 << (from % WORD));
        loop {
            if word != 0 {
                return Some(w * WORD + word.trailing_zeros() as usize);
            }
            w += 1;
            if w == self.words.len() {
                return None;
            }
            word = self.words[w];
        }
    }

    pub fn first_one(&self) -> Option<usize> {
        self.next_one(0)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        let mut next = self.first_one();
        std::iter::from_fn(move || {
            let cur = next?;
            next = self.next_one(cur + 1);
            Some(cur)
        })
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    fn padding_is_clear(&self) -> bool {
        match self.len % WORD {
            0 => true,
            r => self.words.last().is_none_or(|&w| w >> r == 0),
        }
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec(")?;
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        write!(f, ")")
    }
}

/// A bit-packed matrix over GF(2). Entry `(i, j)` is bit `j` of row `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    n_cols: usize,
    rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        Self {
            n_cols,
            rows: vec![BitVec::zeros(n_cols); n_rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n_cols: n,
            rows: (0..n).map(|i| BitVec::unit(n, i)).collect(),
        }
    }

    pub fn from_rows(n_cols: usize, rows: Vec<BitVec>) -> Result<Self, LinalgError> {
        if let Some(bad) = rows.iter().find(|r| r.len() != n_cols) {
            return Err(LinalgError::DimensionMismatch {
                expected: n_cols,
                found: bad.len(),
            });
        }
        Ok(Self { n_cols, rows })
    }

    /// Builds a matrix from row strings such as `["110", "011"]`.
    pub fn from_str_rows(rows: &[&str]) -> Self {
        let rows: Vec<BitVec> = rows.iter().map(|s| BitVec::from_str_bits(s)).collect();
        let n_cols = rows.first().map_or(0, BitVec::len);
        Self::from_rows(n_cols, rows).expect("ragged rows")
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.rows[i].flip(j);
    }

    pub fn push_row(&mut self, row: BitVec) -> Result<(), LinalgError> {
        if row.len() != self.n_cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.n_cols,
                found: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.n_cols, self.n_rows());
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// `self · x` for a column vector `x` of length `n_cols`.
    pub fn mul_vec(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.n_cols);
        BitVec::from_bits(&self.rows.iter().map(|r| r.dot(x)).collect::<Vec<_>>())
    }

    pub fn is_well_formed(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.len() == self.n_cols && r.padding_is_clear())
    }
}

/// Reduced row-echelon form: nonzero rows only, each pivot column holding a
/// single 1, pivots strictly increasing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EchelonForm {
    pub matrix: BitMatrix,
    pub pivot_cols: Vec<usize>,
}

impl EchelonForm {
    pub fn rank(&self) -> usize {
        self.pivot_cols.len()
    }
}

pub fn echelonize(m: &BitMatrix) -> EchelonForm {
    let mut rows: Vec<BitVec> = m.rows.iter().filter(|r| !r.is_zero()).cloned().collect();
    let mut pivot_cols = Vec::new();
    let mut top = 0;
    for col in 0..m.n_cols {
        if top == rows.len() {
            break;
        }
        let Some(found) = (top..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(top, found);
        let pivot_row = rows[top].clone();
        for (i, r) in rows.iter_mut().enumerate() {
            if i != top && r.get(col) {
                r.xor_assign(&pivot_row);
            }
        }
        pivot_cols.push(col);
        top += 1;
    }
    rows.truncate(top);
    EchelonForm {
        matrix: BitMatrix {
            n_cols: m.n_cols,
            rows,
        },
        pivot_cols,
    }
}

pub fn rank(m: &BitMatrix) -> usize {
    let mut span = Subspace::new(m.n_cols);
    for r in &m.rows {
        span.insert(r.clone());
    }
    span.dim()
}

/// Basis of the right null space `{x : m·x = 0}`, one vector per free column
/// in increasing column order.
pub fn kernel_basis(m: &BitMatrix) -> Vec<BitVec> {
    let ech = echelonize(m);
    let n = m.n_cols;
    let mut is_pivot = vec![false; n];
    for &c in &ech.pivot_cols {
        is_pivot[c] = true;
    }
    (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = BitVec::unit(n, f);
            for (row, &c) in ech.matrix.rows.iter().zip(&ech.pivot_cols) {
                if row.get(f) {
                    x.set(c, true);
                }
            }
            x
        })
        .collect()
}

fn check_lengths(vectors: &[BitVec], len: usize) -> Result<(), LinalgError> {
    match vectors.iter().find(|v| v.len() != len) {
        Some(v) => Err(LinalgError::DimensionMismatch {
            expected: len,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

/// `dim span(ambient) - dim span(sub)`, after checking `span(sub) ⊆ span(ambient)`.
pub fn quotient_dim(sub: &[BitVec], ambient: &[BitVec]) -> Result<usize, LinalgError> {
    let Some(len) = ambient.first().or(sub.first()).map(BitVec::len) else {
        return Ok(0);
    };
    check_lengths(ambient, len)?;
    check_lengths(sub, len)?;
    let outer = Subspace::spanned_by(len, ambient.iter().cloned());
    let mut inner = Subspace::new(len);
    for (index, v) in sub.iter().enumerate() {
        if !outer.contains(v) {
            return Err(LinalgError::ContainmentViolation { index });
        }
        inner.insert(v.clone());
    }
    Ok(outer.dim() - inner.dim())
}

pub fn member(v: &BitVec, span_of: &[BitVec]) -> Result<bool, LinalgError> {
    check_lengths(span_of, v.len())?;
    Ok(Subspace::spanned_by(v.len(), span_of.iter().cloned()).contains(v))
}

/// Incrementally built subspace of GF(2)^n kept in semi-echelon form: every
/// stored row has a distinct pivot (its lowest set bit) and no other stored
/// row is consulted out of pivot order during reduction.
#[derive(Clone, Debug)]
pub struct Subspace {
    len: usize,
    rows: Vec<BitVec>,
    pivot_row: Vec<Option<usize>>,
}

impl Subspace {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            rows: Vec::new(),
            pivot_row: vec![None; len],
        }
    }

    pub fn spanned_by(len: usize, vectors: impl IntoIterator<Item = BitVec>) -> Self {
        let mut s = Self::new(len);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient_len(&self) -> usize {
        self.len
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Stored basis, each row with a distinct pivot.
    pub fn basis(&self) -> &[BitVec] {
        &self.rows
    }

    /// Clears every bit of `v` that is a pivot of the subspace.
    pub fn reduce(&self, v: &mut BitVec) {
        let mut pos = v.first_one();
        while let Some(p) = pos {
            if let Some(r) = self.pivot_row[p] {
                v.xor_assign(&self.rows[r]);
            }
            pos = v.next_one(p + 1);
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        assert_eq!(v.len(), self.len);
        let mut w = v.clone();
        self.reduce(&mut w);
        w.is_zero()
    }

    /// Adds `v` to the span. Returns true if the dimension grew.
    pub fn insert(&mut self, mut v: BitVec) -> bool {
        assert_eq!(v.len(), self.len);
        self.reduce(&mut v);
        match v.first_one() {
            None => false,
            Some(p) => {
                self.pivot_row[p] = Some(self.rows.len());
                self.rows.push(v);
                true
            }
        }
    }
}

/// A basis of `ambient / sub` together with a coordinate map.
///
/// Representatives are drawn greedily from the ambient generators in the
/// order given, skipping any that already lie in the span of `sub` and the
/// representatives chosen so far.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    len: usize,
    representatives: Vec<BitVec>,
    // reduced row, its class expressed in representative coordinates
    rows: Vec<(BitVec, BitVec)>,
    pivot_row: Vec<Option<usize>>,
    sub_dim: usize,
}

impl QuotientBasis {
    pub fn new(len: usize, sub: &[BitVec], ambient: &[BitVec]) -> Result<Self, LinalgError> {
        check_lengths(sub, len)?;
        check_lengths(ambient, len)?;
        let outer = Subspace::spanned_by(len, ambient.iter().cloned());
        if let Some(index) = sub.iter().position(|v| !outer.contains(v)) {
            return Err(LinalgError::ContainmentViolation { index });
        }
        let tag_len = ambient.len();
        let mut q = Self {
            len,
            representatives: Vec::new(),
            rows: Vec::new(),
            pivot_row: vec![None; len],
            sub_dim: 0,
        };
        for v in sub {
            let (residual, _) = q.reduce_tagged(v.clone(), BitVec::zeros(tag_len));
            if let Some(p) = residual.first_one() {
                q.pivot_row[p] = Some(q.rows.len());
                q.rows.push((residual, BitVec::zeros(tag_len)));
                q.sub_dim += 1;
            }
        }
        for v in ambient {
            let k = q.representatives.len();
            let (residual, tag) = q.reduce_tagged(v.clone(), BitVec::unit(tag_len, k));
            if let Some(p) = residual.first_one() {
                q.pivot_row[p] = Some(q.rows.len());
                q.rows.push((residual, tag));
                q.representatives.push(v.clone());
            }
        }
        let dim = q.representatives.len();
        for (_, tag) in &mut q.rows {
            let mut t = BitVec::zeros(dim);
            for i in tag.ones() {
                t.set(i, true);
            }
            *tag = t;
        }
        Ok(q)
    }

    fn reduce_tagged(&self, mut v: BitVec, mut tag: BitVec) -> (BitVec, BitVec) {
        let mut pos = v.first_one();
        while let Some(p) = pos {
            if let Some(r) = self.pivot_row[p] {
                let (row, row_tag) = &self.rows[r];
                v.xor_assign(row);
                if row_tag.len() == tag.len() {
                    tag.xor_assign(row_tag);
                } else {
                    for i in row_tag.ones() {
                        tag.flip(i);
                    }
                }
            }
            pos = v.next_one(p + 1);
        }
        (v, tag)
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn sub_dim(&self) -> usize {
        self.sub_dim
    }

    pub fn representatives(&self) -> &[BitVec] {
        &self.representatives
    }

    /// Coordinates of the class of `v` with respect to the representatives,
    /// or `None` when `v` lies outside the ambient span.
    pub fn coordinates(&self, v: &BitVec) -> Option<BitVec> {
        assert_eq!(v.len(), self.len);
        let (residual, tag) = self.reduce_tagged(v.clone(), BitVec::zeros(self.dim()));
        residual.is_zero().then_some(tag)
    }

    /// True when `v` lies in the span of `sub`.
    pub fn is_trivial(&self, v: &BitVec) -> Option<bool> {
        self.coordinates(v).map(|c| c.is_zero())
    }
}

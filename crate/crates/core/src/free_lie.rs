//! Free Lie algebra on two letters and the Hopf-formula oracle for `H_2(L)`.
//!
//! Letters `0` and `1` stand for `v_1` and `v_2`. Lie elements are kept as
//! their expansions in the free associative algebra: a degree-`d` element is
//! a bit vector over the `2^d` words of length `d`, the word
//! `a_1 a_2 ... a_d` having index `a_1 a_2 ... a_d` read as a binary number.
//! The basis of the degree-`d` piece is given by the standard bracketings of
//! Lyndon words.
//!
//! With `φ: F → L` the surjection fixing the generators and `R = Ker φ`,
//! `H_2(L) ≅ (R ∩ [F, F]) / [R, F]`. Since `L_1 = F_1`, `R` starts in degree
//! two and `R_d ⊆ [F, F]`, and `[R, F]_d = [R_{d-1}, v_1] + [R_{d-1}, v_2]`.

use std::collections::HashMap;

use crate::algebra::{enumerate_basis, BasisMonomial, Element, MonomialIndex};
use crate::gf2::{self, BitMatrix, BitVec, Subspace};
use crate::Error;

/// Largest degree for which free Lie pieces are materialised.
pub const HOPF_MAX_DEGREE: usize = 12;

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Dimension of the degree-`d` piece of the free Lie algebra on two
/// generators: `(1/d) Σ_{e | d} μ(e) 2^{d/e}`.
pub fn witt_dim(d: usize) -> usize {
    assert!((1..63).contains(&d), "degree {d} out of range");
    let total: i64 = (1..=d)
        .filter(|e| d.is_multiple_of(*e))
        .map(|e| mobius(e) * (1i64 << (d / e)))
        .sum();
    (total / d as i64) as usize
}

/// Lyndon words of length `d` over `{0, 1}` in lexicographic order (Duval).
pub fn lyndon_words(d: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    if d == 0 {
        return out;
    }
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == d {
            out.push(w.clone());
        }
        let m = w.len();
        while w.len() < d {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&1) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(last) => *last += 1,
        }
    }
    out
}

fn is_lyndon(w: &[u8]) -> bool {
    (1..w.len()).all(|i| w < &w[i..])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieTree {
    Letter(u8),
    Bracket(Box<LieTree>, Box<LieTree>),
}

/// Standard bracketing: `w = uv` with `v` the longest proper Lyndon suffix.
pub fn standard_bracketing(w: &[u8]) -> LieTree {
    if w.len() == 1 {
        return LieTree::Letter(w[0]);
    }
    let split = (1..w.len())
        .find(|&i| is_lyndon(&w[i..]))
        .expect("a single letter is Lyndon");
    LieTree::Bracket(
        Box::new(standard_bracketing(&w[..split])),
        Box::new(standard_bracketing(&w[split..])),
    )
}

impl LieTree {
    pub fn len(&self) -> usize {
        match self {
            LieTree::Letter(_) => 1,
            LieTree::Bracket(a, b) => a.len() + b.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn word(&self) -> Vec<u8> {
        match self {
            LieTree::Letter(c) => vec![*c],
            LieTree::Bracket(a, b) => [a.word(), b.word()].concat(),
        }
    }
}

/// `[P, Q] = PQ + QP` on word expansions (characteristic 2).
pub fn commutator(p: &BitVec, p_len: usize, q: &BitVec, q_len: usize) -> BitVec {
    let mut out = BitVec::zeros(1 << (p_len + q_len));
    for i in p.ones() {
        for j in q.ones() {
            out.flip((i << q_len) | j);
            out.flip((j << p_len) | i);
        }
    }
    out
}

fn letter_expansion(c: u8) -> BitVec {
    BitVec::unit(2, c as usize)
}

/// Lyndon basis of one degree of the free Lie algebra, with bracketings and
/// associative expansions.
#[derive(Clone, Debug)]
pub struct FreeLieBasis {
    pub degree: usize,
    pub words: Vec<Vec<u8>>,
    pub brackets: Vec<LieTree>,
    pub expansions: Vec<BitVec>,
}

struct ExpansionCache(HashMap<Vec<u8>, BitVec>);

impl ExpansionCache {
    fn expand(&mut self, tree: &LieTree) -> BitVec {
        let word = tree.word();
        if let Some(v) = self.0.get(&word) {
            return v.clone();
        }
        let v = match tree {
            LieTree::Letter(c) => letter_expansion(*c),
            LieTree::Bracket(a, b) => {
                let (pa, pb) = (self.expand(a), self.expand(b));
                commutator(&pa, a.len(), &pb, b.len())
            }
        };
        self.0.insert(word, v.clone());
        v
    }
}

impl FreeLieBasis {
    pub fn new(degree: usize) -> Result<Self, Error> {
        if degree == 0 {
            return Err(Error::DegreeOutOfRange(degree));
        }
        if degree > HOPF_MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree,
                limit: HOPF_MAX_DEGREE,
            });
        }
        let mut cache = ExpansionCache(HashMap::new());
        let words = lyndon_words(degree);
        let brackets: Vec<LieTree> = words.iter().map(|w| standard_bracketing(w)).collect();
        let expansions = brackets.iter().map(|t| cache.expand(t)).collect();
        Ok(Self {
            degree,
            words,
            brackets,
            expansions,
        })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

fn evaluate(tree: &LieTree, memo: &mut HashMap<Vec<u8>, Element>) -> Element {
    let word = tree.word();
    if let Some(x) = memo.get(&word) {
        return x.clone();
    }
    let x = match tree {
        LieTree::Letter(c) => Element::from(BasisMonomial::pivot_element(u32::from(*c) + 1)),
        LieTree::Bracket(a, b) => evaluate(a, memo).bracket(&evaluate(b, memo)),
    };
    memo.insert(word, x.clone());
    x
}

/// One degree of the Hopf computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfRow {
    pub degree: usize,
    pub witt: usize,
    pub dim_l: usize,
    pub dim_r: usize,
    pub dim_rf: usize,
    pub h2: usize,
}

/// `R_d` and `[R, F]_d` for `d <= max_degree`, as subspaces of word space.
#[derive(Clone, Debug)]
pub struct HopfOracle {
    max_degree: usize,
    rows: Vec<HopfRow>,
}

impl HopfOracle {
    pub fn new(max_degree: usize) -> Result<Self, Error> {
        if max_degree > HOPF_MAX_DEGREE {
            return Err(Error::DegreeTooLarge {
                degree: max_degree,
                limit: HOPF_MAX_DEGREE,
            });
        }
        let mut memo = HashMap::new();
        let mut rows = Vec::with_capacity(max_degree);
        let mut previous_relations: Vec<BitVec> = Vec::new();
        for d in 1..=max_degree {
            let basis = FreeLieBasis::new(d)?;
            let target = MonomialIndex::new(enumerate_basis(d));
            let mut phi = BitMatrix::zeros(target.len(), basis.len());
            for (j, tree) in basis.brackets.iter().enumerate() {
                let image = evaluate(tree, &mut memo);
                let bits = target.to_bits(&image).expect("image has the wrong weight");
                for i in bits.ones() {
                    phi.set(i, j, true);
                }
            }
            let relations: Vec<BitVec> = gf2::kernel_basis(&phi)
                .iter()
                .map(|x| {
                    let mut r = BitVec::zeros(1 << d);
                    for j in x.ones() {
                        r.xor_assign(&basis.expansions[j]);
                    }
                    r
                })
                .collect();
            let r_span = Subspace::spanned_by(1 << d, relations.iter().cloned());
            let mut rf = Subspace::new(1 << d);
            for r in &previous_relations {
                for letter in 0..2u8 {
                    let c = commutator(r, d - 1, &letter_expansion(letter), 1);
                    assert!(r_span.contains(&c), "[R, F] must lie in R");
                    rf.insert(c);
                }
            }
            rows.push(HopfRow {
                degree: d,
                witt: basis.len(),
                dim_l: target.len(),
                dim_r: r_span.dim(),
                dim_rf: rf.dim(),
                h2: r_span.dim() - rf.dim(),
            });
            previous_relations = relations;
        }
        Ok(Self { max_degree, rows })
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn row(&self, d: usize) -> &HopfRow {
        &self.rows[d - 1]
    }

    pub fn rows(&self) -> &[HopfRow] {
        &self.rows
    }
}

/// `dim R_d - dim [R, F]_d` for `2 <= d <= max_degree <= HOPF_MAX_DEGREE`.
pub fn hopf_h2(d: usize, max_degree: usize) -> Result<usize, Error> {
    if d < 2 {
        return Err(Error::DegreeOutOfRange(d));
    }
    if d > max_degree {
        return Err(Error::DegreeTooLarge {
            degree: d,
            limit: max_degree,
        });
    }
    Ok(HopfOracle::new(d.min(max_degree))?.row(d).h2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witt_values() {
        assert_eq!(witt_dim(1), 2);
        assert_eq!(witt_dim(4), 3);
        assert_eq!(witt_dim(6), 9);
        let first: Vec<usize> = (1..=8).map(witt_dim).collect();
        assert_eq!(first, vec![2, 1, 2, 3, 6, 9, 18, 30]);
    }

    #[test]
    fn lyndon_words_small() {
        assert_eq!(lyndon_words(1), vec![vec![0], vec![1]]);
        assert_eq!(lyndon_words(3), vec![vec![0, 0, 1], vec![0, 1, 1]]);
        for d in 1..=12 {
            let words = lyndon_words(d);
            assert_eq!(words.len(), witt_dim(d), "degree {d}");
            assert!(words.iter().all(|w| is_lyndon(w)));
        }
    }

    #[test]
    fn bracketing_and_expansion() {
        let t = standard_bracketing(&[0, 0, 1]);
        assert_eq!(
            t,
            LieTree::Bracket(
                Box::new(LieTree::Letter(0)),
                Box::new(LieTree::Bracket(Box::new(LieTree::Letter(0)), Box::new(LieTree::Letter(1))))
            )
        );
        // [a,[a,b]] = aab + aba + aba + baa = aab + baa
        let b = FreeLieBasis::new(3).unwrap();
        assert_eq!(b.expansions[0], BitVec::from_indices(8, [0b001, 0b100]));
    }

    #[test]
    fn expansions_are_independent() {
        for d in 1..=10 {
            let b = FreeLieBasis::new(d).unwrap();
            let m = BitMatrix::from_rows(1 << d, b.expansions.clone()).unwrap();
            assert_eq!(gf2::rank(&m), b.len());
        }
    }

    #[test]
    fn hopf_small_degrees() {
        assert_eq!(hopf_h2(2, 6), Ok(0));
        assert_eq!(hopf_h2(3, 6), Ok(0));
        assert_eq!(hopf_h2(4, 6), Ok(1));
        assert!(matches!(hopf_h2(13, 13), Err(Error::DegreeTooLarge { .. })));
        assert!(matches!(hopf_h2(7, 6), Err(Error::DegreeTooLarge { .. })));
        assert!(matches!(hopf_h2(1, 6), Err(Error::DegreeOutOfRange(1))));
        let row = HopfOracle::new(4).unwrap().row(4).clone();
        assert_eq!((row.witt, row.dim_l, row.dim_r, row.dim_rf), (3, 2, 1, 0));
    }
}

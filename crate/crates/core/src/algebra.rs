//! The Fibonacci Lie algebra over GF(2).
//!
//! Basis monomials are `r · v_n` where `v_n` is a pivot element and `r` is a
//! squarefree product of the truncated variables `t_i` with every index at
//! most `n - 4` (and `r = 1` for `n <= 3`). Pivots are opaque symbols: all
//! arithmetic goes through the closed-form action of a pivot on a variable
//! and the closed-form bracket of two pivots.
//!
//! The grading by degree in the generators `v_1, v_2` is realised by the
//! weights `wt(v_n) = F_n` and `wt(t_i) = -F_i` with `F_0 = 0, F_1 = F_2 = 1`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use crate::gf2::{BitVec, Subspace};
use crate::Error;

/// Largest admissible pivot index. Tail indices go up to `pivot - 4` and
/// must fit in a 64-bit mask.
pub const MAX_PIVOT: u32 = 67;

const fn fibonacci_table() -> [u64; 94] {
    let mut t = [0u64; 94];
    t[1] = 1;
    let mut i = 2;
    while i < 94 {
        t[i] = t[i - 1] + t[i - 2];
        i += 1;
    }
    t
}

static FIB: [u64; 94] = fibonacci_table();

/// `F_n` with `F_0 = 0`, `F_1 = F_2 = 1`.
pub fn fib(n: u32) -> u64 {
    FIB[n as usize]
}

/// The Fibonacci weight table used by the grading.
#[derive(Debug, Clone, Copy, Default)]
pub struct WeightTable;

impl WeightTable {
    pub fn pivot(&self, n: u32) -> usize {
        fib(n) as usize
    }

    pub fn variable(&self, i: u32) -> isize {
        -(fib(i) as isize)
    }

    pub fn monomial(&self, m: &BasisMonomial) -> usize {
        m.weight()
    }
}

/// A squarefree product of the variables `t_i`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Tail(u64);

impl Tail {
    pub const ONE: Tail = Tail(0);

    pub fn from_mask(mask: u64) -> Self {
        Tail(mask)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = u32>) -> Self {
        let mut mask = 0u64;
        for i in indices {
            assert!(i < 64, "variable index {i} out of range");
            mask |= 1 << i;
        }
        Tail(mask)
    }

    /// The consecutive run `t_lo t_{lo+1} ... t_hi` (empty when `lo > hi`).
    pub fn run(lo: u32, hi: u32) -> Self {
        Tail::from_indices(lo..=hi)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: u32) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min_index(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros())
    }

    pub fn max_index(self) -> Option<u32> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros())
    }

    pub fn indices(self) -> impl Iterator<Item = u32> {
        (0..64).filter(move |&i| self.0 >> i & 1 == 1)
    }

    pub fn without(self, i: u32) -> Self {
        Tail(self.0 & !(1 << i))
    }

    /// Product in the truncated ring; `None` when a variable repeats.
    pub fn times(self, other: Tail) -> Option<Tail> {
        (self.0 & other.0 == 0).then_some(Tail(self.0 | other.0))
    }

    pub fn shift(self) -> Tail {
        assert!(self.0 >> 63 == 0, "tail shift overflows");
        Tail(self.0 << 1)
    }

    /// Sum of `F_i` over the variables present.
    pub fn fib_sum(self) -> u64 {
        self.indices().map(fib).sum()
    }

    /// Key that orders tails lexicographically by `(z_0, z_1, ...)`.
    fn lex_key(self) -> u64 {
        self.0.reverse_bits()
    }
}

impl Ord for Tail {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_key().cmp(&other.lex_key())
    }
}

impl PartialOrd for Tail {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Tail {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.indices().map(|i| format!("t{i}")).collect();
        write!(f, "{}", parts.join("."))
    }
}

pub fn multiply_tails(a: Tail, b: Tail) -> Option<Tail> {
    a.times(b)
}

/// `v_n(t_j)`: the run `t_{n-1} ... t_{j-2}` for `j > n`, `1` for `j = n`,
/// and zero (`None`) for `j < n`.
pub fn pivot_on_variable(n: u32, j: u32) -> Option<Tail> {
    match j.cmp(&n) {
        Ordering::Less => None,
        Ordering::Equal => Some(Tail::ONE),
        Ordering::Greater => Some(Tail::run(n - 1, j - 2)),
    }
}

/// A GF(2) sum of tails.
pub type TailSum = BTreeSet<Tail>;

fn toggle<T: Ord>(set: &mut BTreeSet<T>, item: T) {
    if !set.remove(&item) {
        set.insert(item);
    }
}

/// Leibniz rule: `v_n(r) = Σ_{j ∈ r} (r / t_j) · v_n(t_j)`.
pub fn apply_pivot_to_tail(n: u32, r: Tail) -> TailSum {
    let mut out = TailSum::new();
    for j in r.indices() {
        if let Some(image) = pivot_on_variable(n, j) {
            if let Some(term) = r.without(j).times(image) {
                toggle(&mut out, term);
            }
        }
    }
    out
}

/// A basis monomial `tail · v_pivot`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisMonomial {
    tail: Tail,
    pivot: u32,
}

impl BasisMonomial {
    pub fn new(tail: Tail, pivot: u32) -> Result<Self, Error> {
        if Self::is_admissible(tail, pivot) {
            Ok(Self { tail, pivot })
        } else {
            Err(Error::InvalidMonomial(format!(
                "{tail:?}.v{pivot} is not an admissible basis monomial"
            )))
        }
    }

    pub fn is_admissible(tail: Tail, pivot: u32) -> bool {
        if pivot == 0 || pivot > MAX_PIVOT {
            return false;
        }
        match tail.max_index() {
            None => true,
            Some(m) => pivot >= 4 && m <= pivot - 4,
        }
    }

    /// The bare pivot `v_n`.
    pub fn pivot_element(n: u32) -> Self {
        Self::new(Tail::ONE, n).expect("pivot index out of range")
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    pub fn pivot(&self) -> u32 {
        self.pivot
    }

    pub fn weight(&self) -> usize {
        (fib(self.pivot) - self.tail.fib_sum()) as usize
    }

    pub fn shift(&self) -> Self {
        Self::new(self.tail.shift(), self.pivot + 1).expect("shift leaves the pivot range")
    }

    pub fn has_variable(&self, i: u32) -> bool {
        self.tail.contains(i)
    }

    fn sort_key(&self) -> (usize, u32, u64) {
        (self.weight(), self.pivot, self.tail.lex_key())
    }
}

impl Ord for BasisMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for BasisMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in self.tail.indices() {
            write!(f, "t{i}.")?;
        }
        write!(f, "v{}", self.pivot)
    }
}

impl fmt::Debug for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BasisMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidMonomial(format!("cannot parse monomial {s:?}"));
        let mut parts: Vec<&str> = s.split('.').collect();
        let pivot_part = parts.pop().ok_or_else(bad)?;
        let index = |p: &str, prefix: char| -> Option<u32> {
            let digits = p.strip_prefix(prefix)?;
            if digits.is_empty()
                || !digits.bytes().all(|b| b.is_ascii_digit())
                || (digits.len() > 1 && digits.starts_with('0'))
            {
                return None;
            }
            digits.parse().ok()
        };
        let pivot = index(pivot_part, 'v').ok_or_else(bad)?;
        let mut vars = Vec::with_capacity(parts.len());
        for p in parts {
            let i = index(p, 't').filter(|&i| i < 64).ok_or_else(bad)?;
            if vars.last().is_some_and(|&prev| prev >= i) {
                return Err(bad());
            }
            vars.push(i);
        }
        BasisMonomial::new(Tail::from_indices(vars), pivot)
    }
}

/// `[v_i, v_j]`: zero for `i = j`, otherwise `t_{i-1} ... t_{j-3} v_{j+1}`
/// with `i < j` after ordering the arguments.
pub fn bracket_pivots(i: u32, j: u32) -> Element {
    if i == j {
        return Element::zero();
    }
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    let tail = if hi == lo + 1 {
        Tail::ONE
    } else {
        Tail::run(lo - 1, hi - 3)
    };
    Element::from(BasisMonomial::new(tail, hi + 1).expect("pivot bracket leaves the basis"))
}

fn pivot_bracket_monomial(i: u32, j: u32) -> Option<(Tail, u32)> {
    bracket_pivots(i, j)
        .iter()
        .next()
        .map(|m| (m.tail(), m.pivot()))
}

/// `[r v_n, s v_m] = r·v_n(s)·v_m + r·s·[v_n, v_m]` for `n <= m`.
pub fn bracket_monomials(x: &BasisMonomial, y: &BasisMonomial) -> Element {
    let (a, b) = if x.pivot <= y.pivot { (x, y) } else { (y, x) };
    let mut out = BTreeSet::new();
    for t in apply_pivot_to_tail(a.pivot, b.tail) {
        if let Some(tail) = a.tail.times(t) {
            toggle(&mut out, BasisMonomial { tail, pivot: b.pivot });
        }
    }
    if let Some((ptail, pivot)) = pivot_bracket_monomial(a.pivot, b.pivot) {
        if let Some(tail) = a.tail.times(b.tail).and_then(|t| t.times(ptail)) {
            toggle(&mut out, BasisMonomial { tail, pivot });
        }
    }
    debug_assert!(out.iter().all(|m| BasisMonomial::is_admissible(m.tail, m.pivot)));
    Element(out)
}

/// A GF(2) linear combination of basis monomials.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Element(BTreeSet<BasisMonomial>);

impl Element {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_monomials(monomials: impl IntoIterator<Item = BasisMonomial>) -> Self {
        let mut e = Self::zero();
        for m in monomials {
            e.toggle(m);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, m: &BasisMonomial) -> bool {
        self.0.contains(m)
    }

    pub fn toggle(&mut self, m: BasisMonomial) {
        toggle(&mut self.0, m);
    }

    pub fn iter(&self) -> impl Iterator<Item = &BasisMonomial> {
        self.0.iter()
    }

    /// Leading monomial in canonical order.
    pub fn leading(&self) -> Option<&BasisMonomial> {
        self.0.first()
    }

    /// Weight when every monomial shares one, `None` for zero or mixed elements.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        let mut it = self.0.iter().map(BasisMonomial::weight);
        let w = it.next()?;
        it.all(|x| x == w).then_some(w)
    }

    pub fn filter(&self, mut keep: impl FnMut(&BasisMonomial) -> bool) -> Element {
        Element(self.0.iter().copied().filter(|m| keep(m)).collect())
    }

    pub fn bracket(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for x in &self.0 {
            for y in &other.0 {
                out += bracket_monomials(x, y);
            }
        }
        out
    }

    pub fn shift(&self) -> Element {
        Element(self.0.iter().map(BasisMonomial::shift).collect())
    }
}

pub fn bracket(x: &Element, y: &Element) -> Element {
    x.bracket(y)
}

/// The shift endomorphism `t_i -> t_{i+1}`, `v_n -> v_{n+1}`.
pub fn shift(x: &Element) -> Element {
    x.shift()
}

pub fn weight(m: &BasisMonomial) -> usize {
    m.weight()
}

impl From<BasisMonomial> for Element {
    fn from(m: BasisMonomial) -> Self {
        Element(BTreeSet::from([m]))
    }
}

impl FromIterator<BasisMonomial> for Element {
    fn from_iter<I: IntoIterator<Item = BasisMonomial>>(iter: I) -> Self {
        Element::from_monomials(iter)
    }
}

impl AddAssign<Element> for Element {
    fn add_assign(&mut self, rhs: Element) {
        for m in rhs.0 {
            self.toggle(m);
        }
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        for m in &rhs.0 {
            self.toggle(*m);
        }
    }
}

impl Add for Element {
    type Output = Element;

    fn add(mut self, rhs: Element) -> Element {
        self += rhs;
        self
    }
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Element {
    type Err = Error;

    /// Parses `"0"` or a `+`-separated list of canonical monomials.
    fn from_str(s: &str) -> Result<Self, Error> {
        if s.trim() == "0" {
            return Ok(Element::zero());
        }
        s.split('+')
            .map(|p| p.trim().parse::<BasisMonomial>())
            .collect::<Result<Vec<_>, _>>()
            .map(Element::from_monomials)
    }
}

/// Smallest weight a monomial with pivot `n` can have.
fn min_weight(n: u32) -> u64 {
    if n <= 3 {
        fib(n)
    } else {
        // F_n - (F_0 + ... + F_{n-4}) = F_n - F_{n-2} + 1
        fib(n - 1) + 1
    }
}

/// All admissible monomials of weight exactly `d`, in canonical order.
pub fn enumerate_basis(d: usize) -> Vec<BasisMonomial> {
    let d = d as u64;
    let mut out = Vec::new();
    if d == 0 {
        return out;
    }
    for n in 1..=MAX_PIVOT {
        if n >= 4 && min_weight(n) > d {
            break;
        }
        if fib(n) < d {
            continue;
        }
        if n <= 3 {
            if fib(n) == d {
                out.push(BasisMonomial::pivot_element(n));
            }
            continue;
        }
        let target = fib(n) - d;
        let mut tails = Vec::new();
        subsets_with_fib_sum(n - 4, target, 0, &mut tails);
        out.extend(tails.into_iter().map(|mask| BasisMonomial {
            tail: Tail(mask),
            pivot: n,
        }));
    }
    out.sort();
    out
}

// Subsets of {0, ..., top} whose Fibonacci sum is `target`, scanning indices downward.
fn subsets_with_fib_sum(top: u32, target: u64, mask: u64, out: &mut Vec<u64>) {
    // F_0 + ... + F_top = F_{top+2} - 1 bounds what the remaining indices can contribute
    if target > fib(top + 2) - 1 {
        return;
    }
    if top == 0 {
        // t_0 has weight zero and may be present or absent
        if target == 0 {
            out.push(mask);
            out.push(mask | 1);
        }
        return;
    }
    if fib(top) <= target {
        subsets_with_fib_sum(top - 1, target - fib(top), mask | 1 << top, out);
    }
    subsets_with_fib_sum(top - 1, target, mask, out);
}

/// Column indexing of a finite set of monomials, used to move between
/// [`Element`]s and bit vectors.
#[derive(Clone, Debug, Default)]
pub struct MonomialIndex {
    monomials: Vec<BasisMonomial>,
    position: HashMap<BasisMonomial, usize>,
}

impl MonomialIndex {
    pub fn new(monomials: Vec<BasisMonomial>) -> Self {
        let position = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (*m, i))
            .collect();
        Self {
            monomials,
            position,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[BasisMonomial] {
        &self.monomials
    }

    pub fn position(&self, m: &BasisMonomial) -> Option<usize> {
        self.position.get(m).copied()
    }

    /// Coordinates of `x`; `None` if `x` uses a monomial outside the index.
    pub fn to_bits(&self, x: &Element) -> Option<BitVec> {
        let mut v = BitVec::zeros(self.len());
        for m in x.iter() {
            v.set(self.position(m)?, true);
        }
        Some(v)
    }

    pub fn to_element(&self, v: &BitVec) -> Element {
        v.ones().map(|i| self.monomials[i]).collect()
    }
}

/// Reduced echelon basis of the span of `elements`, expressed over `index`.
/// Panics if an element leaves the index.
pub fn echelon_span(index: &MonomialIndex, elements: &[Element]) -> Vec<Element> {
    let mut span = Subspace::new(index.len());
    for e in elements {
        span.insert(index.to_bits(e).expect("element outside the monomial index"));
    }
    let m = crate::gf2::BitMatrix::from_rows(index.len(), span.basis().to_vec())
        .expect("consistent lengths");
    crate::gf2::echelonize(&m)
        .matrix
        .rows()
        .iter()
        .map(|r| index.to_element(r))
        .collect()
}

/// Per-degree spans produced by iterated brackets of the generators.
#[derive(Clone, Debug)]
pub struct GradedSpans {
    pieces: Vec<Vec<Element>>,
}

impl GradedSpans {
    pub fn max_degree(&self) -> usize {
        self.pieces.len()
    }

    pub fn piece(&self, d: usize) -> &[Element] {
        &self.pieces[d - 1]
    }

    pub fn dim(&self, d: usize) -> usize {
        self.pieces[d - 1].len()
    }
}

/// Brute-force grading check: `V_1 = span{v_1, v_2}` and
/// `V_d = Σ_{i+j=d} [V_i, V_j]`. Monomials are indexed by `(pivot, tail)`,
/// never by weight, so the result is independent of the weight formula.
pub fn grading_oracle(max_degree: usize) -> GradedSpans {
    let mut pieces: Vec<Vec<Element>> = Vec::with_capacity(max_degree);
    for d in 1..=max_degree {
        let candidates: Vec<Element> = if d == 1 {
            vec![
                BasisMonomial::pivot_element(1).into(),
                BasisMonomial::pivot_element(2).into(),
            ]
        } else {
            let mut c = Vec::new();
            for i in 1..=d / 2 {
                let j = d - i;
                for x in &pieces[i - 1] {
                    for y in &pieces[j - 1] {
                        let b = x.bracket(y);
                        if !b.is_zero() {
                            c.push(b);
                        }
                    }
                }
            }
            c
        };
        let mut support: Vec<BasisMonomial> = candidates
            .iter()
            .flat_map(|e| e.iter().copied())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        support.sort_by_key(|m| (m.pivot(), m.tail().mask()));
        let index = MonomialIndex::new(support);
        pieces.push(echelon_span(&index, &candidates));
    }
    GradedSpans { pieces }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> BasisMonomial {
        s.parse().unwrap()
    }

    fn e(s: &str) -> Element {
        s.parse().unwrap()
    }

    fn t(indices: &[u32]) -> Tail {
        Tail::from_indices(indices.iter().copied())
    }

    #[test]
    fn fibonacci_values() {
        let first: Vec<u64> = (0..10).map(fib).collect();
        assert_eq!(first, vec![0, 1, 1, 2, 3, 5, 8, 13, 21, 34]);
    }

    #[test]
    fn tail_products() {
        assert_eq!(multiply_tails(t(&[0]), t(&[1])), Some(t(&[0, 1])));
        assert_eq!(multiply_tails(t(&[0]), t(&[0])), None);
        assert_eq!(multiply_tails(Tail::ONE, t(&[2])), Some(t(&[2])));
    }

    #[test]
    fn pivot_on_variable_cases() {
        assert_eq!(pivot_on_variable(2, 2), Some(Tail::ONE));
        assert_eq!(pivot_on_variable(1, 0), None);
        assert_eq!(pivot_on_variable(2, 4), Some(t(&[1, 2])));
        assert_eq!(pivot_on_variable(3, 4), Some(t(&[2])));
    }

    #[test]
    fn pivot_on_tail_cases() {
        assert!(apply_pivot_to_tail(2, t(&[0])).is_empty());
        assert_eq!(apply_pivot_to_tail(1, t(&[1])), TailSum::from([Tail::ONE]));
        // v2(t1) = 0 and t1 · v2(t4) = t1 · t1 t2 = 0
        assert!(apply_pivot_to_tail(2, t(&[1, 4])).is_empty());
        assert_eq!(apply_pivot_to_tail(2, t(&[2, 4])), TailSum::from([t(&[4])]));
        assert_eq!(apply_pivot_to_tail(3, t(&[0, 4])), TailSum::from([t(&[0, 2])]));
    }

    #[test]
    fn pivot_brackets() {
        assert_eq!(bracket_pivots(1, 2), e("v3"));
        assert_eq!(bracket_pivots(2, 4), e("t1.v5"));
        assert_eq!(bracket_pivots(5, 5), Element::zero());
        assert_eq!(bracket_pivots(1, 5), e("t0.t1.t2.v6"));
        assert_eq!(bracket_pivots(5, 1), e("t0.t1.t2.v6"));
    }

    #[test]
    fn element_brackets() {
        assert_eq!(e("v3").bracket(&e("v1")), e("t0.v4"));
        assert_eq!(e("v1").bracket(&e("t0.v4")), Element::zero());
        assert_eq!(e("v2").bracket(&e("t0.v4")), e("t0.t1.v5"));
        assert_eq!(e("v2").bracket(&e("t1.v5")), Element::zero());
        let x = e("v1 + t0.v4 + v3");
        assert!(x.bracket(&x).is_zero());
    }

    #[test]
    fn weights() {
        assert_eq!(m("v1").weight(), 1);
        assert_eq!(m("v2").weight(), 1);
        assert_eq!(m("t0.v4").weight(), 3);
        assert_eq!(m("t0.t1.v5").weight(), 4);
    }

    #[test]
    fn basis_enumeration() {
        assert_eq!(enumerate_basis(1), vec![m("v1"), m("v2")]);
        assert_eq!(enumerate_basis(2), vec![m("v3")]);
        assert_eq!(enumerate_basis(3), vec![m("v4"), m("t0.v4")]);
        assert_eq!(enumerate_basis(4), vec![m("t1.v5"), m("t0.t1.v5")]);
        assert_eq!(enumerate_basis(5), vec![m("v5"), m("t0.v5")]);
    }

    #[test]
    fn enumeration_is_complete_against_exhaustive_scan() {
        // every admissible monomial with pivot <= 12, grouped by weight
        let mut by_weight: HashMap<usize, Vec<BasisMonomial>> = HashMap::new();
        for n in 1..=12u32 {
            let width = if n >= 4 { n - 3 } else { 0 };
            for mask in 0..(1u64 << width) {
                let mono = BasisMonomial::new(Tail(mask), n).unwrap();
                by_weight.entry(mono.weight()).or_default().push(mono);
            }
        }
        // pivot 12 has minimum weight F_11 + 1 = 90
        for d in 1..=89 {
            let mut expected = by_weight.remove(&d).unwrap_or_default();
            expected.sort();
            assert_eq!(enumerate_basis(d), expected, "degree {d}");
        }
    }

    #[test]
    fn shift_examples() {
        assert_eq!(e("v1").shift(), e("v2"));
        assert_eq!(e("t0.v4").shift(), e("t1.v5"));
        assert_eq!(e("v3 + t0.v4").shift(), e("v4 + t1.v5"));
    }

    #[test]
    fn canonical_encoding() {
        let x = m("t0.t1.v5");
        assert_eq!(x.tail(), t(&[0, 1]));
        assert_eq!(x.pivot(), 5);
        assert_eq!(x.to_string(), "t0.t1.v5");
        assert_eq!(m("v3").to_string(), "v3");
        for bad in ["t2.v5", "t1.t0.v5", "t1.t1.v6", "v0", "t0.v3", "x1", "v", "t01.v5", ""] {
            assert!(bad.parse::<BasisMonomial>().is_err(), "{bad} accepted");
        }
    }

    #[test]
    fn oracle_low_degrees() {
        let g = grading_oracle(3);
        assert_eq!(g.piece(2), &[e("v3")]);
        assert_eq!(g.dim(3), 2);
        let idx = MonomialIndex::new(enumerate_basis(3));
        let span = Subspace::spanned_by(
            idx.len(),
            g.piece(3).iter().map(|x| idx.to_bits(x).unwrap()),
        );
        assert!(span.contains(&idx.to_bits(&e("v4")).unwrap()));
        assert!(span.contains(&idx.to_bits(&e("t0.v4")).unwrap()));
    }
}

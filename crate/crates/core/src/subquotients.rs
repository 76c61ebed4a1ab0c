//! Named subalgebras, ideals and quotients of `L`.
//!
//! Every algebra here has a monomial basis drawn from the basis of `L`, so
//! membership is a predicate on monomials and the graded pieces are filters
//! of [`enumerate_basis`]. All gradings are the ambient weights of `L`.
//!
//! * `L_i = τ^i(L)`: pivot `>= i + 1`, every tail index `>= i`.
//! * `A_i = τ^{i-1}(A)`: the tail contains `t_{i-1}` and no smaller index.
//! * `Q_i = k v_i`, and `M_i = A_i ⋉ L_i`, so that `L_{i-1} = M_i ⋉ Q_i`.
//! * `L̃ = L / A`, realised on the transversal `{v_1} ∪ X_0`; the class of
//!   `v_1` plays the role of `∂_1`.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{enumerate_basis, echelon_span, BasisMonomial, Element, MonomialIndex};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraId {
    L,
    Ltilde,
    /// `L_i = τ^i(L)` for `i >= 1`.
    Shifted(u32),
    /// `A_i = τ^{i-1}(A)` for `i >= 1`.
    Abelian(u32),
    /// `Q_i = k v_i` for `i >= 1`.
    Line(u32),
    /// `M_i = A_i ⋉ L_i` for `i >= 1`.
    Ideal(u32),
}

impl AlgebraId {
    pub fn contains_monomial(&self, m: &BasisMonomial) -> bool {
        let tail_from = |i: u32| m.tail().min_index().is_none_or(|lo| lo >= i);
        match *self {
            AlgebraId::L => true,
            AlgebraId::Ltilde => !m.has_variable(0),
            AlgebraId::Shifted(i) => m.pivot() > i && tail_from(i),
            AlgebraId::Abelian(i) => m.tail().min_index() == Some(i - 1),
            AlgebraId::Line(i) => m.tail().is_one() && m.pivot() == i,
            AlgebraId::Ideal(i) => {
                AlgebraId::Abelian(i).contains_monomial(m)
                    || AlgebraId::Shifted(i).contains_monomial(m)
            }
        }
    }

    pub fn contains(&self, x: &Element) -> bool {
        x.iter().all(|m| self.contains_monomial(m))
    }

    /// Degree-`d` monomial basis in canonical order.
    pub fn member_basis(&self, d: usize) -> Vec<BasisMonomial> {
        enumerate_basis(d)
            .into_iter()
            .filter(|m| self.contains_monomial(m))
            .collect()
    }

    /// The Lie bracket of the algebra on elements supported in its basis.
    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        match self {
            AlgebraId::Ltilde => project_mod_a(&x.bracket(y)),
            _ => x.bracket(y),
        }
    }

    pub fn bracket_monomials(&self, x: &BasisMonomial, y: &BasisMonomial) -> Element {
        self.bracket(&Element::from(*x), &Element::from(*y))
    }

    pub fn is_one_dimensional(&self) -> bool {
        matches!(self, AlgebraId::Line(_))
    }

    /// Generator of a one-dimensional algebra.
    pub fn line_generator(&self) -> Option<BasisMonomial> {
        match *self {
            AlgebraId::Line(i) => Some(BasisMonomial::pivot_element(i)),
            _ => None,
        }
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraId::L => write!(f, "L"),
            AlgebraId::Ltilde => write!(f, "Ltilde"),
            AlgebraId::Shifted(i) => write!(f, "L{i}"),
            AlgebraId::Abelian(i) => write!(f, "A{i}"),
            AlgebraId::Line(i) => write!(f, "Q{i}"),
            AlgebraId::Ideal(i) => write!(f, "M{i}"),
        }
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let unknown = || Error::UnknownAlgebra(s.to_string());
        match s {
            "L" | "L0" => return Ok(AlgebraId::L),
            "Ltilde" => return Ok(AlgebraId::Ltilde),
            _ => {}
        }
        let mut chars = s.chars();
        let kind = chars.next().ok_or_else(unknown)?;
        let digits = chars.as_str();
        if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(unknown());
        }
        let i: u32 = digits.parse().map_err(|_| unknown())?;
        if i > 32 {
            return Err(unknown());
        }
        match kind {
            'L' => Ok(AlgebraId::Shifted(i)),
            'A' => Ok(AlgebraId::Abelian(i)),
            'Q' => Ok(AlgebraId::Line(i)),
            'M' => Ok(AlgebraId::Ideal(i)),
            _ => Err(unknown()),
        }
    }
}

/// Components of `x` along `X_A`, `X_0` and `{v_1}` in `L = (A ⋉ L_1) ⋉ Q_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub a: Element,
    pub l1: Element,
    pub q1: Element,
}

pub fn decompose(x: &Element) -> Decomposition {
    let v1 = BasisMonomial::pivot_element(1);
    Decomposition {
        a: x.filter(|m| m.has_variable(0)),
        l1: x.filter(|m| !m.has_variable(0) && *m != v1),
        q1: x.filter(|m| *m == v1),
    }
}

/// `π: L → L̃`, deleting every monomial divisible by `t_0`.
pub fn project_mod_a(x: &Element) -> Element {
    x.filter(|m| !m.has_variable(0))
}

fn check_support(x: &Element, algebra: AlgebraId, what: &str) -> Result<(), Error> {
    match x.iter().find(|m| !algebra.contains_monomial(m)) {
        Some(m) => Err(Error::InvalidSupport(format!(
            "{what}: monomial {m} lies outside {algebra}"
        ))),
        None => Ok(()),
    }
}

pub fn bracket_ltilde(x: &Element, y: &Element) -> Result<Element, Error> {
    check_support(x, AlgebraId::Ltilde, "bracket_ltilde")?;
    check_support(y, AlgebraId::Ltilde, "bracket_ltilde")?;
    Ok(AlgebraId::Ltilde.bracket(x, y))
}

/// `θ`: the derivation of `L_1` induced by `ad(v_1)` modulo `A`,
/// `x ↦ X_0`-component of `[x, v_1]`.
pub fn theta(x: &Element) -> Result<Element, Error> {
    check_support(x, AlgebraId::Shifted(1), "theta")?;
    Ok(theta_unchecked(x))
}

pub(crate) fn theta_unchecked(x: &Element) -> Element {
    let v1 = Element::from(BasisMonomial::pivot_element(1));
    decompose(&x.bracket(&v1)).l1
}

/// Per-degree reduced echelon spans (degrees `1..=max_degree`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    pub label: String,
    pieces: Vec<Vec<Element>>,
}

impl GradedBasis {
    fn new(label: String, pieces: Vec<Vec<Element>>) -> Self {
        Self { label, pieces }
    }

    pub fn max_degree(&self) -> usize {
        self.pieces.len()
    }

    pub fn piece(&self, d: usize) -> &[Element] {
        &self.pieces[d - 1]
    }

    pub fn dim(&self, d: usize) -> usize {
        self.pieces[d - 1].len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(Vec::len).collect()
    }

    pub fn contains(&self, d: usize, x: &Element) -> bool {
        let index = MonomialIndex::new(enumerate_basis(d));
        let Some(bits) = index.to_bits(x) else {
            return false;
        };
        let span = crate::gf2::Subspace::spanned_by(
            index.len(),
            self.piece(d).iter().map(|e| index.to_bits(e).expect("piece inside L_d")),
        );
        span.contains(&bits)
    }

    /// Same span in every degree.
    pub fn same_spans(&self, other: &GradedBasis) -> bool {
        self.pieces == other.pieces
    }

    /// The monomial span of an algebra's basis, for comparison with closures.
    pub fn of_algebra(a: AlgebraId, max_degree: usize) -> Self {
        let pieces = (1..=max_degree)
            .map(|d| {
                let monomials: Vec<Element> = a.member_basis(d).into_iter().map(Element::from).collect();
                span_in_degree(d, &monomials)
            })
            .collect();
        Self::new(a.to_string(), pieces)
    }
}

fn span_in_degree(d: usize, elements: &[Element]) -> Vec<Element> {
    echelon_span(&MonomialIndex::new(enumerate_basis(d)), elements)
}

fn homogeneous_by_degree(gens: &[Element], max_degree: usize) -> Result<Vec<Vec<Element>>, Error> {
    let mut by_degree = vec![Vec::new(); max_degree];
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let w = g
            .homogeneous_weight()
            .ok_or_else(|| Error::InvalidSupport(format!("generator {g} is not homogeneous")))?;
        if w <= max_degree {
            by_degree[w - 1].push(g.clone());
        }
    }
    Ok(by_degree)
}

/// Smallest graded subspace containing `gens` and stable under bracketing
/// with the ambient basis, truncated at `max_degree`.
pub fn ideal_closure(
    gens: &[Element],
    ambient: AlgebraId,
    max_degree: usize,
) -> Result<GradedBasis, Error> {
    let by_degree = homogeneous_by_degree(gens, max_degree)?;
    let ambient_basis: Vec<Vec<BasisMonomial>> =
        (1..=max_degree).map(|d| ambient.member_basis(d)).collect();
    let mut pieces: Vec<Vec<Element>> = Vec::with_capacity(max_degree);
    for d in 1..=max_degree {
        let mut candidates = by_degree[d - 1].clone();
        for e in 1..d {
            for x in &pieces[e - 1] {
                for y in &ambient_basis[d - e - 1] {
                    let b = ambient.bracket(x, &Element::from(*y));
                    if !b.is_zero() {
                        candidates.push(b);
                    }
                }
            }
        }
        pieces.push(span_in_degree(d, &candidates));
    }
    Ok(GradedBasis::new(format!("ideal in {ambient}"), pieces))
}

/// Subalgebra of `ambient` generated by `gens`, truncated at `max_degree`.
pub fn subalgebra_closure(
    gens: &[Element],
    ambient: AlgebraId,
    max_degree: usize,
) -> Result<GradedBasis, Error> {
    let by_degree = homogeneous_by_degree(gens, max_degree)?;
    let mut pieces: Vec<Vec<Element>> = Vec::with_capacity(max_degree);
    for d in 1..=max_degree {
        let mut candidates = by_degree[d - 1].clone();
        for i in 1..=d / 2 {
            for x in &pieces[i - 1] {
                for y in &pieces[d - i - 1] {
                    let b = ambient.bracket(x, y);
                    if !b.is_zero() {
                        candidates.push(b);
                    }
                }
            }
        }
        pieces.push(span_in_degree(d, &candidates));
    }
    Ok(GradedBasis::new(format!("subalgebra of {ambient}"), pieces))
}

/// `[a, a]` degree by degree.
pub fn derived_subalgebra(a: AlgebraId, max_degree: usize) -> GradedBasis {
    let basis: Vec<Vec<BasisMonomial>> = (1..=max_degree).map(|d| a.member_basis(d)).collect();
    let pieces = (1..=max_degree)
        .map(|d| {
            let mut candidates = Vec::new();
            for i in 1..=d / 2 {
                for x in &basis[i - 1] {
                    for y in &basis[d - i - 1] {
                        let b = a.bracket_monomials(x, y);
                        if !b.is_zero() {
                            candidates.push(b);
                        }
                    }
                }
            }
            span_in_degree(d, &candidates)
        })
        .collect();
    GradedBasis::new(format!("[{a},{a}]"), pieces)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> Element {
        s.parse().unwrap()
    }

    fn m(s: &str) -> BasisMonomial {
        s.parse().unwrap()
    }

    #[test]
    fn names_round_trip() {
        for name in ["L", "Ltilde", "A1", "L1", "L2", "M1", "M2", "Q1", "Q2"] {
            let a: AlgebraId = name.parse().unwrap();
            assert_eq!(a.to_string(), name);
        }
        for bad in ["X1", "A0", "M", "Q01", "Lt", ""] {
            assert!(matches!(bad.parse::<AlgebraId>(), Err(Error::UnknownAlgebra(_))), "{bad}");
        }
    }

    #[test]
    fn member_bases() {
        assert_eq!(AlgebraId::Abelian(1).member_basis(3), vec![m("t0.v4")]);
        assert_eq!(AlgebraId::Line(1).member_basis(1), vec![m("v1")]);
        assert_eq!(AlgebraId::Shifted(1).member_basis(2), vec![m("v3")]);
        assert_eq!(AlgebraId::Ideal(2).member_basis(4), vec![m("t1.v5")]);
        assert_eq!(AlgebraId::Ltilde.member_basis(1), vec![m("v1"), m("v2")]);
    }

    #[test]
    fn shifted_basis_is_the_image_of_the_shift() {
        // τ^i of every admissible monomial with pivot <= 10, compared per degree
        for i in 1..=3u32 {
            let mut image: Vec<BasisMonomial> = Vec::new();
            for n in 1..=10u32 {
                let width = if n >= 4 { n - 3 } else { 0 };
                for mask in 0..(1u64 << width) {
                    let mut x = BasisMonomial::new(crate::Tail::from_mask(mask), n).unwrap();
                    for _ in 0..i {
                        x = x.shift();
                    }
                    image.push(x);
                }
            }
            // pivot 10 + i covers every image monomial below F_{10+i-1}
            let bound = crate::algebra::fib(9 + i) as usize;
            for d in 1..=bound {
                let mut expected: Vec<_> = image.iter().copied().filter(|x| x.weight() == d).collect();
                expected.sort();
                assert_eq!(AlgebraId::Shifted(i).member_basis(d), expected, "L{i} degree {d}");
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose(&e("v1 + t0.v4"));
        assert_eq!((d.a, d.l1, d.q1), (e("t0.v4"), Element::zero(), e("v1")));
        let d = decompose(&e("v3"));
        assert_eq!((d.a, d.l1, d.q1), (Element::zero(), e("v3"), Element::zero()));
        let d = decompose(&Element::zero());
        assert!(d.a.is_zero() && d.l1.is_zero() && d.q1.is_zero());
    }

    #[test]
    fn projection_examples() {
        assert!(project_mod_a(&e("t0.v4")).is_zero());
        assert_eq!(project_mod_a(&e("v1")), e("v1"));
        assert_eq!(project_mod_a(&e("v2")), e("v2"));
    }

    #[test]
    fn ltilde_brackets() {
        assert_eq!(bracket_ltilde(&e("v1"), &e("v2")).unwrap(), e("v3"));
        assert!(bracket_ltilde(&e("v1"), &e("v3")).unwrap().is_zero());
        assert_eq!(bracket_ltilde(&e("v2"), &e("v3")).unwrap(), e("v4"));
        assert!(matches!(
            bracket_ltilde(&e("t0.v4"), &e("v2")),
            Err(Error::InvalidSupport(_))
        ));
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&e("v2")).unwrap(), e("v3"));
        assert!(theta(&e("v3")).unwrap().is_zero());
        assert_eq!(theta(&e("t1.v5")).unwrap(), e("v5"));
        assert!(matches!(theta(&e("v1")), Err(Error::InvalidSupport(_))));
        assert!(matches!(theta(&e("t0.v4")), Err(Error::InvalidSupport(_))));
    }

    #[test]
    fn ideal_closure_examples() {
        let m1 = ideal_closure(&[e("v2")], AlgebraId::L, 3).unwrap();
        assert_eq!(m1.dims(), vec![1, 1, 2]);
        let empty = ideal_closure(&[], AlgebraId::L, 4).unwrap();
        assert_eq!(empty.dims(), vec![0; 4]);
        let a = ideal_closure(&[e("t0.v4")], AlgebraId::Shifted(1), 4).unwrap();
        assert!(a.contains(4, &e("t0.t1.v5")));
        assert!(ideal_closure(&[e("v1 + v3")], AlgebraId::L, 3).is_err());
    }

    #[test]
    fn derived_examples() {
        let d = derived_subalgebra(AlgebraId::L, 4);
        assert_eq!(d.dim(1), 0);
        assert_eq!(d.piece(2), &[e("v3")]);
    }
}

//! Graded Chevalley-Eilenberg homology with trivial GF(2) coefficients.
//!
//! The complex is `Λ³a → Λ²a → a → k`, with
//! `d2(x ∧ y) = [x, y]` and
//! `d3(x ∧ y ∧ z) = [x, y] ∧ z + [x, z] ∧ y + [y, z] ∧ x` (signs vanish in
//! characteristic 2). Wedges are stored as strictly increasing tuples of
//! basis monomials, so `x ∧ x = 0` is built in. Every graded piece is
//! finite-dimensional and homology is computed one weight at a time.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::algebra::{BasisMonomial, Element, MonomialIndex};
use crate::gf2::{self, BitMatrix, BitVec, QuotientBasis};
use crate::subquotients::{theta_unchecked, AlgebraId};
use crate::Error;

/// A wedge `x_1 ∧ ... ∧ x_n` of basis monomials in strictly increasing order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainMonomial(Vec<BasisMonomial>);

impl ChainMonomial {
    /// Normal form of a wedge; `None` if two entries coincide.
    pub fn new(mut entries: Vec<BasisMonomial>) -> Option<Self> {
        assert!((1..=3).contains(&entries.len()), "arity must be 1, 2 or 3");
        entries.sort();
        entries.windows(2).all(|w| w[0] != w[1]).then_some(Self(entries))
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[BasisMonomial] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(BasisMonomial::weight).sum()
    }
}

impl fmt::Display for ChainMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("^"))
    }
}

impl fmt::Debug for ChainMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A GF(2) combination of wedges of one arity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Chain {
    arity: usize,
    terms: BTreeSet<ChainMonomial>,
}

impl Chain {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            terms: BTreeSet::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &ChainMonomial> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn toggle(&mut self, m: ChainMonomial) {
        assert_eq!(m.arity(), self.arity, "mixed arities in a chain");
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    /// Adds the wedge of the given factors, expanding bilinearly.
    pub fn add_wedge(&mut self, factors: &[&Element]) {
        assert_eq!(factors.len(), self.arity);
        fn go(chain: &mut Chain, factors: &[&Element], acc: &mut Vec<BasisMonomial>) {
            match factors.split_first() {
                None => {
                    if let Some(m) = ChainMonomial::new(acc.clone()) {
                        chain.toggle(m);
                    }
                }
                Some((first, rest)) => {
                    for m in first.iter() {
                        acc.push(*m);
                        go(chain, rest, acc);
                        acc.pop();
                    }
                }
            }
        }
        go(self, factors, &mut Vec::with_capacity(self.arity));
    }

    pub fn wedge(factors: &[&Element]) -> Chain {
        let mut c = Chain::zero(factors.len());
        c.add_wedge(factors);
        c
    }

    pub fn from_element(x: &Element) -> Chain {
        Chain::wedge(&[x])
    }

    pub fn to_element(&self) -> Element {
        assert_eq!(self.arity, 1);
        self.terms.iter().map(|m| m.0[0]).collect()
    }

    pub fn add_assign(&mut self, other: &Chain) {
        for m in &other.terms {
            self.toggle(m.clone());
        }
    }

    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.iter().map(ChainMonomial::degree);
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }
}

impl std::ops::Add for Chain {
    type Output = Chain;

    fn add(mut self, rhs: Chain) -> Chain {
        self.add_assign(&rhs);
        self
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Index of a graded piece of `Λ^n a` used to turn chains into bit vectors.
#[derive(Clone, Debug)]
pub struct ChainIndex {
    basis: Vec<ChainMonomial>,
    position: HashMap<ChainMonomial, usize>,
}

impl ChainIndex {
    fn new(basis: Vec<ChainMonomial>) -> Self {
        let position = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Self { basis, position }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[ChainMonomial] {
        &self.basis
    }

    pub fn to_bits(&self, c: &Chain) -> Option<BitVec> {
        let mut v = BitVec::zeros(self.len());
        for m in c.terms() {
            v.set(*self.position.get(m)?, true);
        }
        Some(v)
    }

    pub fn to_chain(&self, arity: usize, v: &BitVec) -> Chain {
        let mut c = Chain::zero(arity);
        for i in v.ones() {
            c.toggle(self.basis[i].clone());
        }
        c
    }
}

/// `H_n(a)_d` together with representative cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologySpace {
    pub algebra: AlgebraId,
    pub n: usize,
    pub d: usize,
    pub dim: usize,
    pub representatives: Vec<Chain>,
}

/// Cycles modulo boundaries in one bidegree, with coordinates for classes.
#[derive(Clone, Debug)]
pub struct HomologyGroup {
    pub n: usize,
    pub d: usize,
    index: ChainIndex,
    quotient: QuotientBasis,
    cycles_dim: usize,
}

impl HomologyGroup {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn cycles_dim(&self) -> usize {
        self.cycles_dim
    }

    pub fn boundaries_dim(&self) -> usize {
        self.quotient.sub_dim()
    }

    pub fn index(&self) -> &ChainIndex {
        &self.index
    }

    pub fn representatives(&self) -> Vec<Chain> {
        self.quotient
            .representatives()
            .iter()
            .map(|v| self.index.to_chain(self.n, v))
            .collect()
    }

    /// Class of `c` in representative coordinates; `None` if `c` is not a cycle
    /// of this bidegree.
    pub fn coordinates(&self, c: &Chain) -> Option<BitVec> {
        if c.arity() != self.n {
            return None;
        }
        self.quotient.coordinates(&self.index.to_bits(c)?)
    }

    pub fn is_boundary(&self, c: &Chain) -> Option<bool> {
        self.coordinates(c).map(|v| v.is_zero())
    }
}

/// The Chevalley-Eilenberg complex of one algebra, truncated at a weight bound.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    algebra: AlgebraId,
    max_degree: usize,
    bases: Vec<Vec<BasisMonomial>>,
}

impl ChainComplex {
    pub fn new(algebra: AlgebraId, max_degree: usize) -> Self {
        let bases = (1..=max_degree).map(|d| algebra.member_basis(d)).collect();
        Self {
            algebra,
            max_degree,
            bases,
        }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn check_degree(&self, d: usize) {
        assert!(
            (1..=self.max_degree).contains(&d),
            "degree {d} outside 1..={}",
            self.max_degree
        );
    }

    pub fn basis(&self, d: usize) -> &[BasisMonomial] {
        self.check_degree(d);
        &self.bases[d - 1]
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Element {
        self.algebra.bracket(x, y)
    }

    /// Strictly increasing tuples of basis monomials with total weight `d`.
    pub fn chain_basis(&self, arity: usize, d: usize) -> Vec<ChainMonomial> {
        self.check_degree(d);
        let mut out = Vec::new();
        let mut acc = Vec::with_capacity(arity);
        self.collect_tuples(arity, d, 1, &mut acc, &mut out);
        out.sort();
        out
    }

    // Tuples with nondecreasing weights starting at `min_w`, entries increasing.
    fn collect_tuples(
        &self,
        remaining: usize,
        d: usize,
        min_w: usize,
        acc: &mut Vec<BasisMonomial>,
        out: &mut Vec<ChainMonomial>,
    ) {
        if remaining == 0 {
            if d == 0 {
                out.push(ChainMonomial(acc.clone()));
            }
            return;
        }
        if remaining == 1 {
            if d >= min_w {
                for m in &self.bases[d - 1] {
                    if acc.last().is_none_or(|last| last < m) {
                        acc.push(*m);
                        out.push(ChainMonomial(acc.clone()));
                        acc.pop();
                    }
                }
            }
            return;
        }
        for w in min_w..=d / remaining {
            for m in &self.bases[w - 1] {
                if acc.last().is_none_or(|last| last < m) {
                    acc.push(*m);
                    self.collect_tuples(remaining - 1, d - w, w, acc, out);
                    acc.pop();
                }
            }
        }
    }

    pub fn chain_index(&self, arity: usize, d: usize) -> ChainIndex {
        ChainIndex::new(self.chain_basis(arity, d))
    }

    pub fn d2(&self, c: &Chain) -> Chain {
        assert_eq!(c.arity(), 2);
        let mut out = Element::zero();
        for m in c.terms() {
            let [x, y] = [m.0[0], m.0[1]].map(Element::from);
            out += self.bracket(&x, &y);
        }
        Chain::from_element(&out)
    }

    pub fn d3(&self, c: &Chain) -> Chain {
        assert_eq!(c.arity(), 3);
        let mut out = Chain::zero(2);
        for m in c.terms() {
            let [x, y, z] = [m.0[0], m.0[1], m.0[2]].map(Element::from);
            out.add_wedge(&[&self.bracket(&x, &y), &z]);
            out.add_wedge(&[&self.bracket(&x, &z), &y]);
            out.add_wedge(&[&self.bracket(&y, &z), &x]);
        }
        out
    }

    fn monomial_index(&self, d: usize) -> MonomialIndex {
        MonomialIndex::new(self.basis(d).to_vec())
    }

    /// Matrix of `d2` in degree `d`: one column per wedge pair.
    pub fn d2_matrix(&self, d: usize) -> BitMatrix {
        let target = self.monomial_index(d);
        let source = self.chain_basis(2, d);
        let mut m = BitMatrix::zeros(target.len(), source.len());
        for (j, pair) in source.iter().enumerate() {
            let image = self.d2(&Chain {
                arity: 2,
                terms: BTreeSet::from([pair.clone()]),
            });
            for x in image.to_element().iter() {
                let i = target
                    .position(x)
                    .unwrap_or_else(|| panic!("{} does not close on {x}", self.algebra));
                m.set(i, j, true);
            }
        }
        m
    }

    /// Images of `d2` in degree `d` as coordinate vectors of `a_d`.
    fn d2_images(&self, d: usize) -> Vec<BitVec> {
        self.d2_matrix(d).transpose().rows().to_vec()
    }

    /// Images of `d3` in degree `d`, in coordinates of `index` (`Λ²a_d`).
    fn d3_images(&self, d: usize, index: &ChainIndex) -> Vec<BitVec> {
        self.chain_basis(3, d)
            .into_iter()
            .map(|t| {
                let image = self.d3(&Chain {
                    arity: 3,
                    terms: BTreeSet::from([t]),
                });
                index
                    .to_bits(&image)
                    .unwrap_or_else(|| panic!("{} does not close under d3", self.algebra))
            })
            .collect()
    }

    pub fn group(&self, n: usize, d: usize) -> HomologyGroup {
        let (index, cycles, boundaries) = match n {
            1 => {
                let index = self.chain_index(1, d);
                let cycles: Vec<BitVec> = (0..index.len()).map(|i| BitVec::unit(index.len(), i)).collect();
                (index, cycles, self.d2_images(d))
            }
            2 => {
                let index = self.chain_index(2, d);
                let cycles = gf2::kernel_basis(&self.d2_matrix(d));
                let boundaries = self.d3_images(d, &index);
                (index, cycles, boundaries)
            }
            _ => panic!("homological degree {n} is not supported"),
        };
        let quotient = QuotientBasis::new(index.len(), &boundaries, &cycles)
            .expect("boundaries must be cycles");
        HomologyGroup {
            n,
            d,
            index,
            cycles_dim: cycles.len(),
            quotient,
        }
    }

    pub fn homology(&self, n: usize, d: usize) -> HomologySpace {
        let group = self.group(n, d);
        HomologySpace {
            algebra: self.algebra,
            n,
            d,
            dim: group.dim(),
            representatives: group.representatives(),
        }
    }

    /// `dim H_1(a)_d` two ways: as the cokernel of `d2`, and as
    /// `Ker(d1 = 0) / Im(d2)`.
    pub fn h1_routes(&self, d: usize) -> (usize, usize) {
        let m = self.d2_matrix(d);
        let coker = m.n_rows() - gf2::rank(&m);
        let d1 = BitMatrix::zeros(0, m.n_rows());
        let kernel = gf2::kernel_basis(&d1).len();
        let image = gf2::echelonize(&m.transpose()).rank();
        (coker, kernel - image)
    }

    /// `dim H_n(a)_d` for `d = 1..=max_degree`.
    pub fn dims(&self, n: usize, exec: crate::Execution) -> Vec<usize> {
        exec.map_degrees(1..=self.max_degree, |d| self.group(n, d).dim())
    }

    /// Checks `d2 ∘ d3 = 0` on every wedge triple of degree `d`.
    pub fn d2_d3_vanishes(&self, d: usize) -> bool {
        self.chain_basis(3, d).into_iter().all(|t| {
            let c = Chain {
                arity: 3,
                terms: BTreeSet::from([t]),
            };
            self.d2(&self.d3(&c)).is_zero()
        })
    }
}

type MonomialMap = dyn Fn(&BasisMonomial) -> Element + Send + Sync;

/// A homogeneous linear map given on basis monomials, intended to be a
/// derivation of some algebra.
#[derive(Clone)]
pub struct Derivation {
    name: String,
    weight: usize,
    map: Arc<MonomialMap>,
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Derivation")
            .field("name", &self.name)
            .field("weight", &self.weight)
            .finish()
    }
}

impl Derivation {
    pub fn new(
        name: impl Into<String>,
        weight: usize,
        map: impl Fn(&BasisMonomial) -> Element + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            weight,
            map: Arc::new(map),
        }
    }

    pub fn zero(weight: usize) -> Self {
        Self::new("0", weight, |_| Element::zero())
    }

    /// `θ` on `L_1`: `ad(v_1)` followed by reduction modulo `A`.
    pub fn theta() -> Self {
        Self::new("theta", 1, |m| theta_unchecked(&Element::from(*m)))
    }

    /// `x ↦ [x, c]` computed with the bracket of `ambient`.
    pub fn adjoint(ambient: AlgebraId, c: BasisMonomial) -> Self {
        let ce = Element::from(c);
        Self::new(format!("ad({c})"), c.weight(), move |m| {
            ambient.bracket(&Element::from(*m), &ce)
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn apply_monomial(&self, m: &BasisMonomial) -> Element {
        (self.map)(m)
    }

    pub fn apply(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for m in x.iter() {
            out += self.apply_monomial(m);
        }
        out
    }

    /// Diagonal extension to wedges: `D(x ∧ y) = Dx ∧ y + x ∧ Dy`.
    pub fn apply_chain(&self, c: &Chain) -> Chain {
        let mut out = Chain::zero(c.arity());
        for m in c.terms() {
            let factors: Vec<Element> = m.entries().iter().map(|x| Element::from(*x)).collect();
            for k in 0..factors.len() {
                let mut replaced = factors.clone();
                replaced[k] = self.apply_monomial(&m.entries()[k]);
                let refs: Vec<&Element> = replaced.iter().collect();
                out.add_wedge(&refs);
            }
        }
        out
    }

    /// Leibniz rule and support check on every basis pair with
    /// `wt(x) + wt(y) + weight <= top`.
    pub fn check_on(&self, complex: &ChainComplex, top: usize) -> Result<(), Error> {
        let top = top.min(complex.max_degree());
        let a = complex.algebra();
        for d in 1..=top.saturating_sub(self.weight) {
            for x in complex.basis(d) {
                let image = self.apply_monomial(x);
                if !a.contains(&image) || image.iter().any(|m| m.weight() != d + self.weight) {
                    return Err(Error::NotADerivation(format!(
                        "{}({x}) = {image} is not a homogeneous element of {a}",
                        self.name
                    )));
                }
            }
        }
        for d in 2..=top.saturating_sub(self.weight) {
            for i in 1..=d / 2 {
                for x in complex.basis(i) {
                    for y in complex.basis(d - i) {
                        let (xe, ye) = (Element::from(*x), Element::from(*y));
                        let lhs = self.apply(&complex.bracket(&xe, &ye));
                        let rhs = complex.bracket(&self.apply(&xe), &ye)
                            + complex.bracket(&xe, &self.apply(&ye));
                        if lhs != rhs {
                            return Err(Error::NotADerivation(format!(
                                "{} fails the Leibniz rule on [{x}, {y}]",
                                self.name
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `D ∘ d2 = d2 ∘ D` and `D ∘ d3 = d3 ∘ D` on all chains of degree `d`.
    pub fn check_chain_map(&self, complex: &ChainComplex, d: usize) -> Result<(), Error> {
        for pair in complex.chain_basis(2, d) {
            let c = single(pair);
            let lhs = Chain::from_element(&self.apply(&complex.d2(&c).to_element()));
            if lhs != complex.d2(&self.apply_chain(&c)) {
                return Err(Error::NotADerivation(format!(
                    "{} does not commute with d2 on {c}",
                    self.name
                )));
            }
        }
        for triple in complex.chain_basis(3, d) {
            let c = single(triple);
            if self.apply_chain(&complex.d3(&c)) != complex.d3(&self.apply_chain(&c)) {
                return Err(Error::NotADerivation(format!(
                    "{} does not commute with d3 on {c}",
                    self.name
                )));
            }
        }
        Ok(())
    }
}

fn single(m: ChainMonomial) -> Chain {
    let arity = m.arity();
    let mut c = Chain::zero(arity);
    c.toggle(m);
    c
}

/// A linear map between homology groups. Row `i` holds the image of the
/// `i`-th source representative in target coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap {
    pub source_degree: usize,
    pub target_degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub matrix: BitMatrix,
}

impl InducedMap {
    pub fn rank(&self) -> usize {
        gf2::rank(&self.matrix)
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.rows().iter().all(BitVec::is_zero)
    }
}

/// The map `H_n(a)_d → H_n(a)_{d+w}` induced by a derivation of weight `w`,
/// after checking the Leibniz rule and the chain-map property.
pub fn induced_action(
    complex: &ChainComplex,
    n: usize,
    der: &Derivation,
    d: usize,
) -> Result<InducedMap, Error> {
    let target_degree = d + der.weight();
    if target_degree > complex.max_degree() {
        return Err(Error::DegreeTooLarge {
            degree: target_degree,
            limit: complex.max_degree(),
        });
    }
    der.check_on(complex, target_degree)?;
    der.check_chain_map(complex, d)?;
    let source = complex.group(n, d);
    let target = complex.group(n, target_degree);
    let rows = source
        .representatives()
        .iter()
        .map(|rep| {
            target.coordinates(&der.apply_chain(rep)).ok_or_else(|| {
                Error::NotADerivation(format!("{} sends the cycle {rep} outside the cycles", der.name))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(InducedMap {
        source_degree: d,
        target_degree,
        source_dim: source.dim(),
        target_dim: target.dim(),
        matrix: BitMatrix::from_rows(target.dim(), rows)?,
    })
}

pub fn induced_action_on_h2(
    complex: &ChainComplex,
    der: &Derivation,
    d: usize,
) -> Result<InducedMap, Error> {
    induced_action(complex, 2, der, d)
}

/// Action of a one-dimensional algebra on a graded space: dimensions of the
/// graded pieces and the matrices `V_d → V_{d+weight}` (rows are images).
#[derive(Clone, Debug, Default)]
pub struct GradedAction {
    pub weight: usize,
    pub dims: BTreeMap<usize, usize>,
    pub maps: BTreeMap<usize, BitMatrix>,
}

impl GradedAction {
    pub fn trivial(weight: usize, dims: BTreeMap<usize, usize>) -> Self {
        let maps = dims
            .iter()
            .filter_map(|(&d, &n)| {
                let m = *dims.get(&(d + weight))?;
                Some((d, BitMatrix::zeros(n, m)))
            })
            .collect();
        Self { weight, dims, maps }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ActionSpaces {
    pub invariants: BTreeMap<usize, usize>,
    pub coinvariants: BTreeMap<usize, usize>,
}

/// Invariants `Ker μ` and coinvariants `Coker μ` degree by degree. A degree
/// is reported only when the map it needs is known.
pub fn one_dim_action_spaces(action: &GradedAction) -> ActionSpaces {
    let mut out = ActionSpaces::default();
    for (&d, &dim) in &action.dims {
        if let Some(m) = action.maps.get(&d) {
            out.invariants.insert(d, dim - gf2::rank(m));
        }
        if d <= action.weight {
            out.coinvariants.insert(d, dim);
        } else if let Some(m) = action.maps.get(&(d - action.weight)) {
            out.coinvariants.insert(d, dim - gf2::rank(m));
        }
    }
    out
}

/// `H_1(Q, V)` from the two-term complex `V ⊗ Q → V`, graded so that
/// `v ⊗ q` sits in degree `deg v + weight`. Computed from an explicit kernel
/// basis, independently of the rank count in [`one_dim_action_spaces`].
pub fn h1_of_line(action: &GradedAction) -> BTreeMap<usize, usize> {
    action
        .maps
        .iter()
        .map(|(&d, m)| (d + action.weight, gf2::kernel_basis(&m.transpose()).len()))
        .collect()
}

/// Graded action of `der` on `H_n(a)` for source degrees in `degrees`.
pub fn action_on_homology(
    complex: &ChainComplex,
    n: usize,
    der: &Derivation,
    degrees: std::ops::RangeInclusive<usize>,
) -> Result<GradedAction, Error> {
    let mut action = GradedAction {
        weight: der.weight(),
        ..Default::default()
    };
    for d in degrees {
        let map = induced_action(complex, n, der, d)?;
        action.dims.insert(d, map.source_dim);
        action.dims.insert(map.target_degree, map.target_dim);
        action.maps.insert(d, map.matrix);
    }
    Ok(action)
}

/// The three terms of `0 → H_0(C, H_2(B)) → H_2(M) → H_1(C, H_1(B)) → 0` in
/// one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSesReport {
    pub d: usize,
    pub h2_m: usize,
    pub h0_c_h2_b: usize,
    pub h1_c_h1_b: usize,
}

impl SplitSesReport {
    pub fn holds(&self) -> bool {
        self.h2_m == self.h0_c_h2_b + self.h1_c_h1_b
    }
}

/// Checks that `M = B ⋉ C` degree-wise up to `d`: the bases split, `C` is a
/// line and `[B, C] ⊆ B`, `[B, B] ⊆ B`.
pub fn check_semidirect(b: AlgebraId, c: AlgebraId, m: AlgebraId, d: usize) -> Result<(), Error> {
    let Some(gen) = c.line_generator() else {
        return Err(Error::NotSemidirect(format!("{c} is not one-dimensional")));
    };
    let ce = Element::from(gen);
    for e in 1..=d {
        let mut split: Vec<BasisMonomial> = b.member_basis(e);
        for x in c.member_basis(e) {
            if split.contains(&x) {
                return Err(Error::NotSemidirect(format!("{x} lies in both {b} and {c}")));
            }
            split.push(x);
        }
        split.sort();
        if split != m.member_basis(e) {
            return Err(Error::NotSemidirect(format!(
                "{m} is not {b} ⊕ {c} in degree {e}"
            )));
        }
        for x in b.member_basis(e) {
            let image = m.bracket(&Element::from(x), &ce);
            if !b.contains(&image) {
                return Err(Error::NotSemidirect(format!("[{x}, {gen}] = {image} leaves {b}")));
            }
        }
        for i in 1..=e / 2 {
            for x in b.member_basis(i) {
                for y in b.member_basis(e - i) {
                    if !b.contains(&m.bracket_monomials(&x, &y)) {
                        return Err(Error::NotSemidirect(format!("[{x}, {y}] leaves {b}")));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Dimension count for the split short exact sequence of a semidirect
/// product with a one-dimensional complement, in weight `d`.
pub fn split_ses_check(
    b: AlgebraId,
    c: AlgebraId,
    m: AlgebraId,
    d: usize,
) -> Result<SplitSesReport, Error> {
    check_semidirect(b, c, m, d)?;
    let gen = c.line_generator().expect("checked above");
    let w = gen.weight();
    let complex_b = ChainComplex::new(b, d);
    let complex_m = ChainComplex::new(m, d);
    let action = Derivation::adjoint(m, gen);
    let h2_b = complex_b.group(2, d).dim();
    let (h0_c_h2_b, h1_c_h1_b) = if d > w {
        let on_h2 = induced_action(&complex_b, 2, &action, d - w)?;
        let on_h1 = induced_action(&complex_b, 1, &action, d - w)?;
        (h2_b - on_h2.rank(), on_h1.source_dim - on_h1.rank())
    } else {
        (h2_b, 0)
    };
    Ok(SplitSesReport {
        d,
        h2_m: complex_m.group(2, d).dim(),
        h0_c_h2_b,
        h1_c_h1_b,
    })
}

/// For `M = I ⋉ S` with `I` an ideal: the inclusion `S → M` and the
/// projection `M → S` on `H_2` in weight `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RetractReport {
    pub d: usize,
    pub h2_sub: usize,
    pub h2_ambient: usize,
    /// Rank of `i_*: H_2(S)_d → H_2(M)_d`.
    pub inclusion_rank: usize,
    /// Whether the projection sends boundaries of `M` to boundaries of `S`
    /// and `π_* ∘ i_*` is the identity on the chosen classes.
    pub retraction_is_identity: bool,
}

impl RetractReport {
    pub fn inclusion_is_injective(&self) -> bool {
        self.inclusion_rank == self.h2_sub
    }
}

pub fn retract_on_h2(sub: AlgebraId, ambient: AlgebraId, d: usize) -> Result<RetractReport, Error> {
    let cs = ChainComplex::new(sub, d);
    let cm = ChainComplex::new(ambient, d);
    let gs = cs.group(2, d);
    let gm = cm.group(2, d);
    let reps = gs.representatives();
    let rows = reps
        .iter()
        .map(|r| {
            gm.coordinates(r).ok_or_else(|| {
                Error::InvalidSupport(format!("{r} is not a cycle of {ambient}"))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let inclusion_rank = gf2::rank(&BitMatrix::from_rows(gm.dim(), rows)?);

    let project = |c: &Chain| -> Chain {
        let mut out = Chain::zero(c.arity());
        for t in c.terms() {
            if t.entries().iter().all(|x| sub.contains_monomial(x)) {
                out.toggle(t.clone());
            }
        }
        out
    };
    let boundaries_ok = cm.chain_basis(3, d).into_iter().all(|t| {
        let image = project(&cm.d3(&single(t)));
        gs.is_boundary(&image) == Some(true)
    });
    let identity_ok = reps.iter().enumerate().all(|(i, r)| {
        gs.coordinates(&project(r)) == Some(BitVec::unit(gs.dim(), i))
    });
    Ok(RetractReport {
        d,
        h2_sub: gs.dim(),
        h2_ambient: gm.dim(),
        inclusion_rank,
        retraction_is_identity: boundaries_ok && identity_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> Element {
        s.parse().unwrap()
    }

    fn wedge(parts: &[&str]) -> Chain {
        let elems: Vec<Element> = parts.iter().map(|p| e(p)).collect();
        let refs: Vec<&Element> = elems.iter().collect();
        Chain::wedge(&refs)
    }

    #[test]
    fn chain_bases() {
        let l = ChainComplex::new(AlgebraId::L, 6);
        assert_eq!(l.chain_basis(2, 2), vec![ChainMonomial::new(vec!["v1".parse().unwrap(), "v2".parse().unwrap()]).unwrap()]);
        let names: Vec<String> = l.chain_basis(2, 3).iter().map(ToString::to_string).collect();
        assert_eq!(names, vec!["v1^v3", "v2^v3"]);
        let q = ChainComplex::new(AlgebraId::Line(1), 5);
        for d in 1..=5 {
            assert!(q.chain_basis(2, d).is_empty());
        }
    }

    #[test]
    fn d2_examples() {
        let l = ChainComplex::new(AlgebraId::L, 6);
        assert_eq!(l.d2(&wedge(&["v1", "v2"])).to_element(), e("v3"));
        assert!(l.d2(&wedge(&["t1.v5", "v2"])).is_zero());
        assert_eq!(l.d2(&wedge(&["v3", "v1"])).to_element(), e("t0.v4"));
    }

    #[test]
    fn d3_examples() {
        let l1 = ChainComplex::new(AlgebraId::Shifted(1), 8);
        assert_eq!(
            l1.d3(&wedge(&["v4", "v2", "v3"])),
            wedge(&["t1.v5", "v3"]) + wedge(&["v5", "v2"])
        );
        let l = ChainComplex::new(AlgebraId::L, 8);
        assert_eq!(
            l.d3(&wedge(&["v1", "v2", "v3"])),
            wedge(&["t0.v4", "v2"]) + wedge(&["v4", "v1"])
        );
        // A is abelian
        let a = ChainComplex::new(AlgebraId::Abelian(1), 14);
        assert!(a.d3(&wedge(&["t0.v4", "t0.v5", "t0.t1.v5"])).is_zero());
    }

    #[test]
    fn homology_examples() {
        let l = ChainComplex::new(AlgebraId::L, 6);
        assert_eq!(l.homology(1, 1).dim, 2);
        for d in 2..=6 {
            assert_eq!(l.homology(1, d).dim, 0);
            let (a, b) = l.h1_routes(d);
            assert_eq!(a, b);
        }
        assert_eq!(l.homology(2, 4).dim, 1);
        let m2 = ChainComplex::new(AlgebraId::Ideal(2), 8);
        let h1: Vec<usize> = (1..=8).map(|d| m2.homology(1, d).dim).collect();
        assert_eq!(h1, vec![0, 1, 1, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn theta_kills_the_w2_class() {
        let l1 = ChainComplex::new(AlgebraId::Shifted(1), 7);
        let r = wedge(&["t1.v5", "v2"]);
        let g5 = l1.group(2, 5);
        let class = g5.coordinates(&r).expect("cycle");
        assert!(!class.is_zero());
        let theta = Derivation::theta();
        let map = induced_action_on_h2(&l1, &theta, 5).unwrap();
        let image: BitVec = BitVec::from_indices(
            map.target_dim,
            class.ones().flat_map(|i| map.matrix.row(i).ones().collect::<Vec<_>>()),
        );
        assert!(image.is_zero());
        let g6 = l1.group(2, 6);
        assert_eq!(g6.is_boundary(&theta.apply_chain(&r)), Some(true));
    }

    #[test]
    fn zero_derivation_induces_zero() {
        let l = ChainComplex::new(AlgebraId::L, 8);
        let map = induced_action_on_h2(&l, &Derivation::zero(1), 5).unwrap();
        assert!(map.is_zero());
    }

    #[test]
    fn non_derivation_is_rejected() {
        let l = ChainComplex::new(AlgebraId::L, 6);
        let bogus = Derivation::new("bogus", 1, |m| {
            if m.pivot() == 1 {
                e("v3")
            } else {
                Element::zero()
            }
        });
        assert!(matches!(
            induced_action_on_h2(&l, &bogus, 4),
            Err(Error::NotADerivation(_))
        ));
    }

    #[test]
    fn one_dim_actions() {
        let dims = BTreeMap::from([(1, 3), (2, 2)]);
        let trivial = GradedAction::trivial(1, dims);
        let s = one_dim_action_spaces(&trivial);
        assert_eq!(s.invariants.get(&1), Some(&3));
        assert_eq!(s.coinvariants.get(&1), Some(&3));
        assert_eq!(s.coinvariants.get(&2), Some(&2));

        let m2 = ChainComplex::new(AlgebraId::Ideal(2), 6);
        let ad_v2 = Derivation::adjoint(AlgebraId::Shifted(1), "v2".parse().unwrap());
        let action = action_on_homology(&m2, 1, &ad_v2, 1..=5).unwrap();
        let s = one_dim_action_spaces(&action);
        let total: usize = s.invariants.values().sum();
        assert_eq!(total, 1);
        assert_eq!(s.invariants.get(&4), Some(&1));
        assert_eq!(h1_of_line(&action).get(&5), Some(&1));
    }

    #[test]
    fn split_ses_small_degrees() {
        let r = split_ses_check(AlgebraId::Ideal(2), AlgebraId::Line(2), AlgebraId::Shifted(1), 5).unwrap();
        assert_eq!(r.h1_c_h1_b, 1);
        assert!(r.holds());
        assert!(matches!(
            split_ses_check(AlgebraId::Ideal(1), AlgebraId::Line(2), AlgebraId::L, 3),
            Err(Error::NotSemidirect(_))
        ));
        assert!(matches!(
            split_ses_check(AlgebraId::Ideal(1), AlgebraId::Shifted(1), AlgebraId::L, 3),
            Err(Error::NotSemidirect(_))
        ));
    }
}

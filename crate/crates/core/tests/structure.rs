use fiblie_core::algebra::{bracket, enumerate_basis, BasisMonomial, Element, MonomialIndex};
use fiblie_core::gf2;
use fiblie_core::subquotients::{
    bracket_ltilde, decompose, derived_subalgebra, ideal_closure, project_mod_a, subalgebra_closure,
    theta, GradedBasis,
};
use fiblie_core::{AlgebraId, Error};

const D: usize = 14;

fn e(s: &str) -> Element {
    s.parse().unwrap()
}

fn els(names: &[&str]) -> Vec<Element> {
    names.iter().map(|s| e(s)).collect()
}

/// Dimension of `span(sub)` inside `span(ambient)`'s quotient, in weight `d`.
fn quotient_in_degree(d: usize, sub: &[Element], ambient: &[BasisMonomial]) -> usize {
    let index = MonomialIndex::new(enumerate_basis(d));
    let bits = |xs: Vec<Element>| -> Vec<gf2::BitVec> {
        xs.iter().map(|x| index.to_bits(x).unwrap()).collect()
    };
    let ambient: Vec<Element> = ambient.iter().copied().map(Element::from).collect();
    gf2::quotient_dim(&bits(sub.to_vec()), &bits(ambient)).unwrap()
}

#[test]
fn a_is_an_abelian_ideal() {
    let a = AlgebraId::Abelian(1);
    for d1 in 1..D {
        for d2 in 1..=D - d1 {
            for x in a.member_basis(d1) {
                for y in a.member_basis(d2) {
                    assert!(bracket(&x.into(), &y.into()).is_zero(), "[{x}, {y}]");
                }
                for y in enumerate_basis(d2) {
                    let b = bracket(&x.into(), &y.into());
                    assert!(a.contains(&b), "[{x}, {y}] = {b}");
                }
            }
        }
    }
}

#[test]
fn degree_wise_direct_sum() {
    for d in 1..=D {
        let total = enumerate_basis(d).len();
        let parts = [AlgebraId::Abelian(1), AlgebraId::Shifted(1), AlgebraId::Line(1)]
            .map(|a| a.member_basis(d).len());
        assert_eq!(total, parts.iter().sum::<usize>(), "degree {d}");
        for m in enumerate_basis(d) {
            let x = Element::from(m);
            let parts = decompose(&x);
            assert_eq!(parts.a.clone() + parts.l1.clone() + parts.q1.clone(), x);
            assert_eq!(
                [&parts.a, &parts.l1, &parts.q1].iter().filter(|p| !p.is_zero()).count(),
                1
            );
        }
    }
}

#[test]
fn decomposition_examples() {
    let parts = decompose(&e("v1 + t0.v4"));
    assert_eq!((parts.a, parts.l1, parts.q1), (e("t0.v4"), Element::zero(), e("v1")));
    let parts = decompose(&e("v3"));
    assert_eq!((parts.a, parts.l1, parts.q1), (Element::zero(), e("v3"), Element::zero()));
}

#[test]
fn l1_is_generated_by_v2_v3() {
    let closure = subalgebra_closure(&els(&["v2", "v3"]), AlgebraId::L, D).unwrap();
    assert!(closure.same_spans(&GradedBasis::of_algebra(AlgebraId::Shifted(1), D)));
}

#[test]
fn shifted_algebra_is_the_shift_image() {
    for d in 1..=D {
        let mut image: Vec<BasisMonomial> = (1..=d)
            .flat_map(enumerate_basis)
            .map(|m| m.shift())
            .filter(|m| m.weight() == d)
            .collect();
        image.sort();
        assert_eq!(image, AlgebraId::Shifted(1).member_basis(d));
    }
}

#[test]
fn derived_subalgebra_is_finitely_generated() {
    let gens = els(&["v3", "v4", "t0.v4", "t1.v5", "t0.t1.v5"]);
    let generated = subalgebra_closure(&gens, AlgebraId::L, D).unwrap();
    let derived = derived_subalgebra(AlgebraId::L, D);
    assert!(generated.same_spans(&derived));
    assert_eq!(derived.dim(1), 0);
    assert_eq!(derived.piece(2), &[e("v3")]);
}

#[test]
fn abelianization_of_a1() {
    let a1 = AlgebraId::Abelian(1);
    let dims: Vec<usize> = (1..=D)
        .map(|d| {
            let mut brackets = Vec::new();
            for i in 1..d {
                for x in a1.member_basis(i) {
                    for y in AlgebraId::Shifted(1).member_basis(d - i) {
                        brackets.push(bracket(&x.into(), &y.into()));
                    }
                }
            }
            quotient_in_degree(d, &brackets, &a1.member_basis(d))
        })
        .collect();
    let mut expected = vec![0; D];
    expected[2] = 1;
    assert_eq!(dims, expected);
}

#[test]
fn abelianization_of_m1() {
    let m1 = AlgebraId::Ideal(1);
    let derived = derived_subalgebra(m1, D);
    let dims: Vec<usize> = (1..=D)
        .map(|d| quotient_in_degree(d, derived.piece(d), &m1.member_basis(d)))
        .collect();
    let mut expected = vec![0; D];
    expected[..3].copy_from_slice(&[1, 1, 1]);
    assert_eq!(dims, expected);
    for (d, g) in [(1, "v2"), (2, "v3"), (3, "t0.v4")] {
        assert!(!derived.contains(d, &e(g)), "{g} should survive");
    }
}

#[test]
fn ideal_closure_examples() {
    let m1 = ideal_closure(&els(&["v2"]), AlgebraId::L, 3).unwrap();
    assert_eq!(m1.dims(), [1, 1, 2]);
    let full = ideal_closure(&els(&["v2"]), AlgebraId::L, D).unwrap();
    assert!(full.same_spans(&GradedBasis::of_algebra(AlgebraId::Ideal(1), D)));
    let empty = ideal_closure(&[], AlgebraId::L, 5).unwrap();
    assert!(empty.dims().iter().all(|&n| n == 0));
    let from_a = ideal_closure(&els(&["t0.v4"]), AlgebraId::Shifted(1), 4).unwrap();
    assert!(from_a.contains(4, &e("t0.t1.v5")));
}

#[test]
fn theta_is_a_derivation_of_l1() {
    assert_eq!(theta(&e("v2")).unwrap(), e("v3"));
    assert!(theta(&e("v3")).unwrap().is_zero());
    assert_eq!(theta(&e("t1.v5")).unwrap(), e("v5"));
    assert!(matches!(theta(&e("t0.v4")), Err(Error::InvalidSupport(_))));
    let l1 = AlgebraId::Shifted(1);
    let basis: Vec<BasisMonomial> = (1..D).flat_map(|d| l1.member_basis(d)).collect();
    for x in &basis {
        for y in &basis {
            if x.weight() + y.weight() > D - 1 {
                continue;
            }
            let (x, y) = (Element::from(*x), Element::from(*y));
            let lhs = theta(&bracket(&x, &y)).unwrap();
            let rhs = bracket(&theta(&x).unwrap(), &y) + bracket(&x, &theta(&y).unwrap());
            assert_eq!(lhs, rhs, "on {x}, {y}");
        }
    }
}

#[test]
fn projection_is_a_lie_map() {
    let basis: Vec<BasisMonomial> = (1..D).flat_map(enumerate_basis).collect();
    for x in &basis {
        for y in &basis {
            if x.weight() + y.weight() > D {
                continue;
            }
            let (x, y) = (Element::from(*x), Element::from(*y));
            assert_eq!(
                project_mod_a(&bracket(&x, &y)),
                bracket_ltilde(&project_mod_a(&x), &project_mod_a(&y)).unwrap()
            );
        }
    }
}

#[test]
fn ltilde_basis_and_brackets() {
    for d in 1..=D {
        let expected: Vec<BasisMonomial> = enumerate_basis(d)
            .into_iter()
            .filter(|m| !m.has_variable(0))
            .collect();
        assert_eq!(AlgebraId::Ltilde.member_basis(d), expected);
        let split = AlgebraId::Shifted(1).member_basis(d).len() + AlgebraId::Line(1).member_basis(d).len();
        assert_eq!(expected.len(), split);
    }
    assert_eq!(bracket_ltilde(&e("v1"), &e("v2")).unwrap(), e("v3"));
    assert!(bracket_ltilde(&e("v1"), &e("v3")).unwrap().is_zero());
    assert_eq!(bracket_ltilde(&e("v2"), &e("v3")).unwrap(), e("v4"));
    assert!(bracket_ltilde(&e("t0.v4"), &e("v2")).is_err());
}

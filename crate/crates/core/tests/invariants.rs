use std::sync::Arc;

use proptest::prelude::*;

use schubert_core::algebra::gcd::gcd;
use schubert_core::algebra::{Fraction, GrLex, LatticeLex, Mono, Poly, Rational, MAX_VARS};
use schubert_core::gkm::{FlagSpace, LocalizedClass, SchubertBasis, Side};
use schubert_core::operators::{bgg_left, demazure_left, weyl_left};
use schubert_core::quantum::{q_multiply, QuantumClass, StructureTable};
use schubert_core::root_system::parse_word;
use schubert_core::theory::{Theory, H, K};

fn poly<O: schubert_core::algebra::TermOrder>(lo: i32, hi: i32, nvars: usize) -> impl Strategy<Value = Poly<O>> {
    prop::collection::vec((prop::collection::vec(lo..=hi, nvars), -4i64..=4), 0..5).prop_map(move |terms| {
        Poly::from_terms(terms.into_iter().map(|(e, c)| {
            let mut m: Mono = [0; MAX_VARS];
            m[..e.len()].copy_from_slice(&e);
            (m, Rational::from_int(c))
        }))
    })
}

fn coh() -> impl Strategy<Value = Poly<GrLex>> {
    poly(0, 2, 3)
}

fn laurent() -> impl Strategy<Value = Poly<LatticeLex>> {
    poly(-2, 2, 3)
}

fn nonzero<O: schubert_core::algebra::TermOrder>(s: impl Strategy<Value = Poly<O>>) -> impl Strategy<Value = Poly<O>> {
    s.prop_filter("nonzero", |p| !p.is_zero())
}

/// `1 − x^β` with β ≠ 0.
fn binomial() -> impl Strategy<Value = Poly<LatticeLex>> {
    prop::collection::vec(-3i32..=3, 3).prop_filter("nonzero exponent", |b| b.iter().any(|&x| x != 0)).prop_map(|b| {
        let mut m: Mono = [0; MAX_VARS];
        m[..3].copy_from_slice(&b);
        Poly::one().sub(&Poly::monomial(m, Rational::one()))
    })
}

const SPACES: &[(&str, &[usize])] = &[("A2", &[]), ("B2", &[]), ("G2", &[]), ("A3", &[0, 2]), ("A3", &[1])];

fn space_strategy() -> impl Strategy<Value = Arc<FlagSpace>> {
    (0..SPACES.len()).prop_map(|k| FlagSpace::new(SPACES[k].0, SPACES[k].1).unwrap())
}

/// A random integer combination of Schubert classes, so always a genuine class.
fn class_on<T: Theory>(space: &Arc<FlagSpace>, coeffs: &[i64]) -> LocalizedClass<T> {
    let b = SchubertBasis::<T>::new(space, Side::B).unwrap();
    let cs: Vec<Fraction<T::O>> = (0..space.npoints()).map(|p| Fraction::from_int(coeffs[p % coeffs.len()])).collect();
    b.combine(&cs)
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 1..8)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn polynomial_ring_laws(a in coh(), b in coh(), c in coh()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn exact_division_inverts_multiplication(a in coh(), b in nonzero(coh())) {
        prop_assert_eq!(a.mul(&b).div_exact(&b), Some(a));
    }

    #[test]
    fn laurent_exact_division_inverts_multiplication(a in laurent(), b in nonzero(laurent())) {
        prop_assert_eq!(a.mul(&b).div_exact(&b), Some(a));
    }

    #[test]
    fn binomial_divisibility_agrees_with_division(a in laurent(), d in binomial(), multiply in any::<bool>()) {
        let f = if multiply { a.mul(&d) } else { a };
        prop_assert_eq!(f.divisible_by(&d), f.div_exact(&d).is_some());
        if multiply {
            prop_assert!(f.divisible_by(&d));
        }
    }

    #[test]
    fn gcd_divides_and_contains_common_factors(a in nonzero(coh()), b in coh(), c in nonzero(coh())) {
        let (f, g) = (a.mul(&c), b.mul(&c));
        let d = gcd(&f, &g);
        prop_assert!(f.div_exact(&d).is_some() && g.div_exact(&d).is_some());
        prop_assert!(d.div_exact(&c).is_some());
    }

    #[test]
    fn laurent_gcd_divides_and_contains_common_factors(a in nonzero(laurent()), b in laurent(), c in nonzero(laurent())) {
        let (f, g) = (a.mul(&c), b.mul(&c));
        let d = gcd(&f, &g);
        prop_assert!(f.div_exact(&d).is_some() && g.div_exact(&d).is_some());
        prop_assert!(d.div_exact(&c).is_some());
    }

    #[test]
    fn fractions_are_canonical(a in coh(), b in nonzero(coh()), c in nonzero(coh())) {
        let x = Fraction::new(a.clone(), b.clone()).unwrap();
        prop_assert_eq!(&Fraction::new(a.mul(&c), b.mul(&c)).unwrap(), &x);
        prop_assert!(x.den().leading_coeff().is_one());
    }

    #[test]
    fn fraction_field_laws(a in coh(), b in nonzero(coh()), c in coh(), d in nonzero(coh())) {
        let x = Fraction::new(a.clone(), b.clone()).unwrap();
        let y = Fraction::new(c.clone(), d.clone()).unwrap();
        // a/b + c/d = (ad + bc)/bd
        let cross = Fraction::new(a.mul(&d).add(&b.mul(&c)), b.mul(&d)).unwrap();
        prop_assert_eq!(x.add(&y), cross);
        prop_assert_eq!(x.mul(&y), Fraction::new(a.mul(&c), b.mul(&d)).unwrap());
        prop_assert_eq!(x.mul_poly(&b), Fraction::from(a));
    }

    #[test]
    fn laurent_fractions_are_canonical(a in laurent(), b in nonzero(laurent()), c in nonzero(laurent())) {
        let x = Fraction::new(a.clone(), b.clone()).unwrap();
        prop_assert_eq!(&Fraction::new(a.mul(&c), b.mul(&c)).unwrap(), &x);
        prop_assert!(x.den().leading_coeff().is_one());
        // No monomial factor is left in the denominator.
        let lo = x.den().min_exponents();
        prop_assert!(lo.iter().all(|&e| e == 0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn weyl_group_laws(label in prop::sample::select(vec!["A2", "A3", "B2", "B3", "C3", "G2"]), a in 0usize..10_000, b in 0usize..10_000, c in 0usize..10_000) {
        let s = FlagSpace::full_flag(label).unwrap();
        let g = s.group();
        let n = g.order();
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, 0), a);
        for i in 0..g.rank() {
            let t = g.left_mul(i, a);
            prop_assert_eq!(g.left_mul(i, t), a);
            prop_assert_eq!(g.length(t).abs_diff(g.length(a)), 1);
        }
        prop_assert_eq!(g.eval_word(g.word(a)).unwrap(), a);
        prop_assert_eq!(parse_word(&g.label(a)).unwrap(), g.word(a).to_vec());
    }

    #[test]
    fn left_weyl_action_is_a_ring_action(space in space_strategy(), x in coeffs(), y in coeffs(), u in 0usize..1000, v in 0usize..1000) {
        let g = space.group();
        let (u, v) = (u % g.order(), v % g.order());
        let a = class_on::<H>(&space, &x);
        let b = class_on::<H>(&space, &y);
        prop_assert_eq!(weyl_left(u, &weyl_left(v, &a)), weyl_left(g.mul(u, v), &a));
        prop_assert_eq!(weyl_left(u, &a.mul(&b)), weyl_left(u, &a).mul(&weyl_left(u, &b)));
        for i in 0..g.rank() {
            let s = g.simple(i);
            prop_assert_eq!(weyl_left(s, &weyl_left(s, &a)), a.clone());
        }
        let ak = class_on::<K>(&space, &x);
        let bk = class_on::<K>(&space, &y);
        prop_assert_eq!(weyl_left(u, &ak.mul(&bk)), weyl_left(u, &ak).mul(&weyl_left(u, &bk)));
    }

    #[test]
    fn left_operators_on_classes(space in space_strategy(), x in coeffs(), y in coeffs()) {
        let a = class_on::<H>(&space, &x);
        let b = class_on::<H>(&space, &y);
        let ak = class_on::<K>(&space, &x);
        for i in 0..space.rank() {
            let s = space.group().simple(i);
            let d = bgg_left(i, &a).unwrap();
            prop_assert!(d.is_polynomial());
            prop_assert!(bgg_left(i, &d).unwrap().is_zero());
            // δ(ab) = δ(a)·b + s(a)·δ(b)
            let lhs = bgg_left(i, &a.mul(&b)).unwrap();
            let rhs = d.mul(&b).add(&weyl_left(s, &a).mul(&bgg_left(i, &b).unwrap()));
            prop_assert_eq!(lhs, rhs);
            let e = demazure_left(i, &ak, false).unwrap();
            prop_assert!(e.is_polynomial());
            prop_assert_eq!(demazure_left(i, &e, false).unwrap(), e);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn classical_quantum_product_is_a_unital_bilinear_product(x in coeffs(), y in coeffs(), z in coeffs(), c in -3i64..=3) {
        let space = FlagSpace::full_flag("A2").unwrap();
        let n = space.npoints();
        let pairs: Vec<_> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
        let table = StructureTable::<H>::classical(&space, &pairs).unwrap();
        let basis = table.basis();
        let mk = |cs: &[i64]| {
            let v: Vec<Fraction<_>> = (0..n).map(|p| Fraction::from_int(cs[p % cs.len()])).collect();
            QuantumClass::<H>::classical(basis.combine(&v))
        };
        let (a, b, d) = (mk(&x), mk(&y), mk(&z));
        let one = QuantumClass::<H>::classical(LocalizedClass::one(&space));
        prop_assert_eq!(q_multiply(&table, &one, &a).unwrap(), a.clone());
        let ab = q_multiply(&table, &a, &b).unwrap();
        prop_assert_eq!(&ab, &q_multiply(&table, &b, &a).unwrap());
        prop_assert_eq!(ab.classical_part(), a.classical_part().mul(&b.classical_part()));
        let scaled = q_multiply(&table, &a.scale(&Fraction::from_int(c)), &b.add(&d)).unwrap();
        let expanded = ab.add(&q_multiply(&table, &a, &d).unwrap()).scale(&Fraction::from_int(c));
        prop_assert_eq!(scaled, expanded);
    }
}

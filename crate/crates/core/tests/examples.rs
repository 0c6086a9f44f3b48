//! Worked examples. Every expected value is assembled by hand from roots and
//! characters, never from the operators under test.

use std::sync::Arc;

use schubert_core::algebra::{CohScalar, Fraction, KScalar, Poly};
use schubert_core::char_classes::{csm_cell, homogenize_csm, mc_cell, mc_family, sm_cell, smc_cell};
use schubert_core::gkm::{FlagSpace, LocalizedClass, SchubertBasis, Side};
use schubert_core::operators::{
    bgg_left, bgg_right, demazure_left, demazure_right, dl_left_h, dl_left_homogenized, dl_left_k, dl_right_h,
    dl_right_k, weyl_left, weyl_right,
};
use schubert_core::quantum::{gr24, quantum_delta, quantum_demazure_dual, QuantumClass};
use schubert_core::root_system::{act_on_weight, parse_word, Lattice, Trichotomy};
use schubert_core::theory::{character, hbar, root_form, y_var, H, K};

fn lat(v: &[i32]) -> Lattice {
    let mut l = [0; 4];
    l[..v.len()].copy_from_slice(v);
    l
}

fn a(v: &[i32]) -> CohScalar {
    root_form(&lat(v))
}

fn e(v: &[i32]) -> KScalar {
    character(&lat(v))
}

fn int<O: schubert_core::algebra::TermOrder>(n: i64) -> Poly<O> {
    Poly::from_int(n)
}

fn cls<T: schubert_core::theory::Theory>(space: &Arc<FlagSpace>, vals: Vec<Poly<T::O>>) -> LocalizedClass<T> {
    LocalizedClass::new(space.clone(), vals.into_iter().map(Fraction::from).collect()).unwrap()
}

fn frac<O: schubert_core::algebra::TermOrder>(n: Poly<O>, d: Poly<O>) -> Fraction<O> {
    Fraction::new(n, d).unwrap()
}

fn elem(space: &FlagSpace, word: &str) -> usize {
    space.group().eval_word(&parse_word(word).unwrap()).unwrap()
}

fn pos(space: &FlagSpace, word: &str) -> usize {
    space.position(elem(space, word)).unwrap()
}

fn a1() -> Arc<FlagSpace> {
    FlagSpace::full_flag("A1").unwrap()
}

#[test]
fn root_systems_and_weyl_groups() {
    let a2 = FlagSpace::full_flag("A2").unwrap();
    let mut roots = a2.group().rs.positive_roots.clone();
    roots.sort();
    assert_eq!(roots, vec![lat(&[0, 1]), lat(&[1, 0]), lat(&[1, 1])]);
    let g2 = FlagSpace::full_flag("G2").unwrap();
    assert_eq!(g2.group().rs.positive_roots.len(), 6);
    assert!(g2.group().rs.positive_roots.contains(&lat(&[3, 2])));

    let g = a2.group();
    assert_eq!(g.order(), 6);
    assert_eq!(g.label(g.longest()), "s1s2s1");
    let b2 = FlagSpace::full_flag("B2").unwrap();
    assert_eq!(b2.group().order(), 8);
    assert_eq!(b2.group().length(b2.group().longest()), 4);

    assert_eq!(g.act(g.simple(1), &lat(&[1, 0])), lat(&[1, 1]));
    assert_eq!(g.act(g.longest(), &lat(&[1, 0])), lat(&[0, -1]));
    assert!(g.bruhat_leq(g.simple(1), g.longest()));

    let a3 = FlagSpace::full_flag("A3").unwrap();
    let s2 = a3.group().element(a3.group().simple(1));
    assert_eq!(act_on_weight(s2, &lat(&[-1, 0, 0])), lat(&[-1, -1, 0]));
}

#[test]
fn parabolic_factorization_and_trichotomy() {
    let gr = gr24().unwrap();
    let g = gr.group();
    let p = gr.parabolic();
    assert_eq!(p.coset_decompose(g, elem(&gr, "s1s2s1")), (elem(&gr, "s1s2"), elem(&gr, "s1")));
    let (rep, levi) = p.coset_decompose(g, g.longest());
    assert_eq!(rep, elem(&gr, "s2s1s3s2"));
    assert_eq!(g.length(levi), 2);
    assert_eq!(g.length(rep) + g.length(levi), 6);
    // s2·s1s2 = s1s2·s1
    assert_eq!(p.trichotomy(g, 1, elem(&gr, "s1s2")).unwrap(), Trichotomy::UpFolds(0));
}

#[test]
fn exact_scalars() {
    let q = frac(int(1).sub(&e(&[2])), int(1).sub(&e(&[1])));
    assert_eq!(q, Fraction::from(int(1).add(&e(&[1]))));
    let (a1, a2) = (a(&[1, 0]), a(&[0, 1]));
    assert_eq!(a1.mul(&a1).add(&a1.mul(&a2)).div_exact(&a1), Some(a1.add(&a2)));
    assert_eq!(a2.div_exact(&a1), None);
    assert_eq!(int(1).sub(&e(&[2])).div_exact(&int(1).sub(&e(&[1]))), Some(int(1).add(&e(&[1]))));
}

#[test]
fn tangent_data() {
    let s = a1();
    assert_eq!(s.euler_class(0), &a(&[-1]));
    assert_eq!(s.lambda_minus1_cotangent(0), &int(1).sub(&e(&[1])));
    assert_eq!(s.euler_class(1), &a(&[1]));
    assert_eq!(s.lambda_minus1_cotangent(1), &int(1).sub(&e(&[-1])));
    let gr = gr24().unwrap();
    let expected = [[0, 1, 0], [1, 1, 0], [0, 1, 1], [1, 1, 1]].iter().fold(int(1), |acc, w| acc.mul(&a(w).neg()));
    assert_eq!(gr.euler_class(0), &expected);
}

#[test]
fn fixed_point_line_bundle_and_ambient_classes() {
    let s = a1();
    let alpha = a(&[1]);
    assert_eq!(LocalizedClass::<H>::fixed_point(&s, 0), cls(&s, vec![alpha.neg(), int(0)]));
    assert_eq!(LocalizedClass::<K>::fixed_point(&s, 0), cls(&s, vec![int(1).sub(&e(&[1])), int(0)]));
    assert_eq!(LocalizedClass::<K>::line_bundle(&s, &lat(&[1])).unwrap(), cls(&s, vec![e(&[1]), e(&[-1])]));
    assert_eq!(LocalizedClass::<H>::ambient(&s), cls(&s, vec![int(1).sub(&alpha), int(1).add(&alpha)]));
    let y = y_var(1);
    assert_eq!(
        LocalizedClass::<K>::ambient(&s),
        cls(&s, vec![int(1).add(&y.mul(&e(&[1]))), int(1).add(&y.mul(&e(&[-1])))])
    );
}

#[test]
fn schubert_classes_integrals_and_pairings() {
    let s = a1();
    let alpha = a(&[1]);
    let bh = SchubertBasis::<H>::new(&s, Side::B).unwrap();
    let oh = SchubertBasis::<H>::new(&s, Side::BMinus).unwrap();
    let bk = SchubertBasis::<K>::new(&s, Side::B).unwrap();
    assert_eq!(bh.class(1), &cls(&s, vec![int(1), int(1)]));
    assert_eq!(bk.class(1), &cls(&s, vec![int(1), int(1)]));
    assert_eq!(oh.class(1), &cls(&s, vec![int(0), alpha.clone()]));

    assert_eq!(bh.class(0).integrate(), Fraction::one());
    assert!(bh.class(1).integrate().is_zero());
    assert_eq!(bk.class(1).integrate(), Fraction::one());
    assert_eq!(bh.class(0).pair(bh.class(1)).unwrap(), Fraction::one());
    let iota = LocalizedClass::<K>::fixed_point(&s, 0);
    assert_eq!(iota.pair(&LocalizedClass::one(&s)).unwrap(), Fraction::one());

    // ι_{s1} = e^{−α}𝒪_id + (1 − e^{−α})𝒪_{s1}
    let iota_s = LocalizedClass::<K>::fixed_point(&s, 1);
    let em = e(&[-1]);
    assert_eq!(bk.expand(&iota_s).unwrap(), vec![em.clone().into(), int(1).sub(&em).into()]);

    let csm = csm_cell(&s, 1, Side::B).unwrap();
    assert_eq!(csm, cls(&s, vec![int(1), int(1).add(&alpha)]));
    assert_eq!(bh.expand(&csm).unwrap(), vec![Fraction::one(), int(1).add(&alpha).into()]);
}

#[test]
fn pushforward_kills_non_minimal_cells() {
    let gr = gr24().unwrap();
    let full = gr.full();
    let b = SchubertBasis::<H>::new(&full, Side::B).unwrap();
    let s1 = full.position(elem(&full, "s1")).unwrap();
    assert!(b.class(s1).pushforward(&gr).unwrap().is_zero());
    let id = b.class(0).pushforward(&gr).unwrap();
    assert_eq!(&id, SchubertBasis::<H>::new(&gr, Side::B).unwrap().class(0));
}

#[test]
fn gkm_examples() {
    let s = a1();
    assert_eq!(cls::<H>(&s, vec![a(&[1]), int(0)]).gkm_check().unwrap(), None);
    assert_eq!(cls::<H>(&s, vec![int(1), int(0)]).gkm_check().unwrap(), Some((0, 0)));
}

#[test]
fn weyl_actions() {
    let s = a1();
    let o_id = LocalizedClass::<K>::fixed_point(&s, 0);
    assert_eq!(weyl_left(1, &o_id), cls(&s, vec![int(0), int(1).sub(&e(&[-1]))]));
    let e_id = LocalizedClass::<H>::fixed_point(&s, 0);
    assert_eq!(weyl_left(1, &e_id), LocalizedClass::fixed_point(&s, 1));
    assert_eq!(weyl_right(1, &e_id).unwrap(), LocalizedClass::<H>::fixed_point(&s, 1).neg());
    assert_eq!(weyl_right(1, &o_id).unwrap(), LocalizedClass::<K>::fixed_point(&s, 1).scale_poly(&e(&[1]).neg()));
}

#[test]
fn divided_differences() {
    let s = a1();
    let alpha = a(&[1]);
    let x_id = cls::<H>(&s, vec![alpha.neg(), int(0)]);
    let one_h = cls::<H>(&s, vec![int(1), int(1)]);
    assert_eq!(bgg_right(0, &x_id).unwrap(), one_h);
    assert!(bgg_right(0, &one_h).unwrap().is_zero());
    assert_eq!(bgg_left(0, &cls::<H>(&s, vec![int(0), alpha.clone()])).unwrap(), one_h);
    let o_id = cls::<K>(&s, vec![int(1).sub(&e(&[1])), int(0)]);
    let one_k = cls::<K>(&s, vec![int(1), int(1)]);
    assert_eq!(demazure_right(0, &o_id).unwrap(), one_k);
    assert_eq!(demazure_left(0, &o_id, false).unwrap(), one_k);

    let gr = gr24().unwrap();
    let s2 = pos(&gr, "s2");
    let oh = SchubertBasis::<H>::new(&gr, Side::BMinus).unwrap();
    assert_eq!(bgg_left(1, oh.class(s2)).unwrap(), LocalizedClass::one(&gr));
    let ok = SchubertBasis::<K>::new(&gr, Side::BMinus).unwrap();
    assert_eq!(demazure_left(1, ok.class(s2), true).unwrap(), LocalizedClass::one(&gr));
}

#[test]
fn demazure_lusztig_operators() {
    let s = a1();
    let alpha = a(&[1]);
    let y = y_var(1);
    let x_id = cls::<H>(&s, vec![alpha.neg(), int(0)]);
    assert_eq!(dl_right_h(0, &x_id, false).unwrap(), cls(&s, vec![int(1), int(1).add(&alpha)]));
    let o_id = cls::<K>(&s, vec![int(1).sub(&e(&[1])), int(0)]);
    let mc_s = cls::<K>(&s, vec![e(&[1]).mul(&int(1).add(&y)), int(1).add(&y.mul(&e(&[-1])))]);
    assert_eq!(dl_right_k(0, &o_id, false).unwrap(), mc_s);
    // ∂(1) = 0 in cohomology, so only −sᴿ(1) survives.
    assert_eq!(dl_right_h(0, &LocalizedClass::one(&s), false).unwrap(), LocalizedClass::one(&s).neg());
    let y_line = LocalizedClass::<K>::line_bundle(&s, &lat(&[1])).unwrap().scale_poly(&y);
    assert_eq!(dl_right_k(0, &LocalizedClass::one(&s), false).unwrap(), y_line);

    let a2 = FlagSpace::full_flag("A2").unwrap();
    let bh = SchubertBasis::<H>::new(&a2, Side::B).unwrap();
    let bk = SchubertBasis::<K>::new(&a2, Side::B).unwrap();
    let y2 = y_var(2);
    for (i, w) in ["s1", "s2"].iter().enumerate() {
        let p = pos(&a2, w);
        let ai = root_form(&a2.group().rs.simple_root(i));
        let expect = bh.class(p).scale_poly(&int(1).add(&ai)).add(bh.class(0));
        assert_eq!(dl_left_h(i, bh.class(0), false).unwrap(), expect);
        let em = character(&schubert_core::root_system::negate(&a2.group().rs.simple_root(i)));
        let c1 = int(1).add(&y2.mul(&em));
        let c0 = int(1).add(&y2).add(&y2.mul(&em));
        let expect = bk.class(p).scale_poly(&c1).sub(&bk.class(0).scale_poly(&c0));
        assert_eq!(dl_left_k(i, bk.class(0), false).unwrap(), expect);
    }
}

#[test]
fn homogenized_action() {
    let s = a1();
    let alpha = a(&[1]);
    let h = hbar(1);
    let lo = homogenize_csm(&csm_cell(&s, 0, Side::B).unwrap()).unwrap();
    let hi = homogenize_csm(&csm_cell(&s, 1, Side::B).unwrap()).unwrap();
    assert_eq!(hi, cls(&s, vec![h.clone(), h.add(&alpha)]));
    assert_eq!(dl_left_homogenized(0, &lo).unwrap(), hi);
}

#[test]
fn characteristic_classes_on_the_projective_line() {
    let s = a1();
    let alpha = a(&[1]);
    let y = y_var(1);
    let total = csm_cell(&s, 0, Side::B).unwrap().add(&csm_cell(&s, 1, Side::B).unwrap());
    assert_eq!(total, cls(&s, vec![int(1).sub(&alpha), int(1).add(&alpha)]));
    let sm = sm_cell(&s, 1, Side::BMinus).unwrap();
    assert_eq!(sm.values(), &[Fraction::zero(), frac(alpha.clone(), int(1).add(&alpha))]);

    let mc = mc_cell(&s, 1, Side::B).unwrap();
    assert_eq!(mc, cls(&s, vec![e(&[1]).mul(&int(1).add(&y)), int(1).add(&y.mul(&e(&[-1])))]));
    let sum = mc_family(&s, Side::B).unwrap().classes.iter().fold(LocalizedClass::zero(&s), |acc, c| acc.add(c));
    assert_eq!(sum, LocalizedClass::ambient(&s));
    let smc = smc_cell(&s, 1, Side::BMinus).unwrap();
    let em = e(&[-1]);
    assert_eq!(smc.values(), &[Fraction::zero(), frac(int(1).sub(&em), int(1).add(&y.mul(&em)))]);
}

#[test]
fn quantum_operators_on_the_grassmannian() {
    let gr = gr24().unwrap();
    let (s1, s11, pt) = (pos(&gr, "s2"), pos(&gr, "s1s2"), pos(&gr, "s2s1s3s2"));
    let oh = SchubertBasis::<H>::new(&gr, Side::BMinus).unwrap();
    let q = |p: usize| QuantumClass::<H>::classical(oh.class(p).clone());
    let one = QuantumClass::<H>::classical(LocalizedClass::one(&gr));
    assert_eq!(quantum_delta(1, &q(s1)).unwrap(), one);
    assert_eq!(quantum_delta(0, &q(s11)).unwrap(), q(s1));
    assert!(quantum_delta(0, &q(s1)).unwrap().is_zero());
    assert!(quantum_delta(1, &q(pt)).unwrap().classical_part().is_polynomial());

    let ok = SchubertBasis::<K>::new(&gr, Side::BMinus).unwrap();
    let qk = |p: usize| QuantumClass::<K>::classical(ok.class(p).clone());
    assert_eq!(quantum_demazure_dual(1, &qk(s1)).unwrap(), QuantumClass::classical(LocalizedClass::one(&gr)));
    assert_eq!(quantum_demazure_dual(1, &qk(s11)).unwrap(), qk(s11));
    assert_eq!(quantum_demazure_dual(1, &qk(pt)).unwrap(), qk(pos(&gr, "s1s3s2")));
}

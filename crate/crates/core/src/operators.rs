//! Left and right Weyl actions and the divided-difference family of
//! operators, all computed pointwise on fixed-point restrictions.
//!
//! Every operator that divides checks the division when its input has
//! polynomial restrictions: a remainder means the input was not a class of
//! the non-localized ring, and is reported as [`Error::NotDivisible`].

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{CohScalar, Fraction, KScalar, Poly, TermOrder};
use crate::error::{Error, Result};
use crate::gkm::{FlagSpace, LocalizedClass};
use crate::root_system::{negate, word_label};
use crate::theory::{character, hbar, root_form, y_var, Theory, H, K};

/// `(wᴸa)|_{uW_P} = w(a|_{w⁻¹uW_P})`.
pub fn weyl_left<T: Theory>(w: usize, a: &LocalizedClass<T>) -> LocalizedClass<T> {
    if w == 0 {
        return a.clone();
    }
    let space = a.space();
    let g = space.group();
    let winv = g.inverse(w);
    LocalizedClass::from_fn(space, |p| {
        let src = g.mul(winv, space.point(p));
        T::apply_fraction(g, w, a.value_at_element(src))
    })
}

/// `(wᴿa)|_u = a|_{uw}`; only defined on G/B.
pub fn weyl_right<T: Theory>(w: usize, a: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
    let space = a.space();
    if !space.is_full() {
        return Err(Error::RightOperatorOnParabolic);
    }
    let g = space.group();
    Ok(LocalizedClass::from_fn(space, |p| a.value(g.mul(p, w)).clone()))
}

fn check_index(space: &FlagSpace, i: usize) -> Result<()> {
    if i >= space.rank() {
        return Err(Error::IndexOutOfRange(i));
    }
    Ok(())
}

fn full_only(space: &FlagSpace, i: usize) -> Result<()> {
    check_index(space, i)?;
    if !space.is_full() {
        return Err(Error::RightOperatorOnParabolic);
    }
    Ok(())
}

/// `num / d`, exact when `strict` (input had polynomial restrictions).
fn quotient<O: TermOrder>(num: Fraction<O>, d: &Poly<O>, strict: bool, what: &str, at: &dyn Fn() -> String) -> Result<Fraction<O>> {
    if num.is_zero() {
        return Ok(num);
    }
    if strict {
        let n = num.as_poly().expect("polynomial numerator");
        return match n.div_exact(d) {
            Some(q) => Ok(q.into()),
            None => Err(Error::NotDivisible(format!("{what} at {}", at()))),
        };
    }
    num.div_poly(d)
}

/// Restrictions of `sᵢᴸa`, pointwise.
fn left_reflected<T: Theory>(i: usize, a: &LocalizedClass<T>) -> Vec<Fraction<T::O>> {
    let s = a.space().group().simple(i);
    weyl_left(s, a).into_values()
}

/// Pointwise `(c₁·sᵢᴸa + c₀·a) / d` with scalars depending only on αᵢ.
fn left_combination<T: Theory>(
    i: usize,
    a: &LocalizedClass<T>,
    c1: &Poly<T::O>,
    c0: &Poly<T::O>,
    d: &Poly<T::O>,
    what: &str,
) -> Result<LocalizedClass<T>> {
    let space = a.space();
    check_index(space, i)?;
    let strict = a.is_polynomial();
    let sa = left_reflected(i, a);
    LocalizedClass::try_from_fn(space, |p| {
        let num = sa[p].mul_poly(c1).add(&a.value(p).mul_poly(c0));
        quotient(num, d, strict, what, &|| space.point_label(p))
    })
}

/// Pointwise `(f_v · a_v + g_v · a_{vsᵢ}) / d_v` on G/B.
fn right_combination<T: Theory>(
    i: usize,
    a: &LocalizedClass<T>,
    coeffs: impl Fn(usize) -> (Poly<T::O>, Poly<T::O>, Poly<T::O>),
    what: &str,
) -> Result<LocalizedClass<T>> {
    let space = a.space();
    full_only(space, i)?;
    let g = space.group();
    let strict = a.is_polynomial();
    LocalizedClass::try_from_fn(space, |v| {
        let (f, h, d) = coeffs(v);
        let num = a.value(v).mul_poly(&f).add(&a.value(g.right_mul(v, i)).mul_poly(&h));
        quotient(num, &d, strict, what, &|| space.point_label(v))
    })
}

/// Image of αᵢ under the element with index `v`.
fn moved_root(space: &FlagSpace, v: usize, i: usize) -> crate::root_system::Lattice {
    let g = space.group();
    g.act(v, &g.rs.simple_root(i))
}

/// Right BGG operator: `(∂ᵢa)|_v = (a_v − a_{vsᵢ}) / (−vαᵢ)`.
pub fn bgg_right(i: usize, a: &LocalizedClass<H>) -> Result<LocalizedClass<H>> {
    right_combination(
        i,
        a,
        |v| {
            let d = root_form(&negate(&moved_root(a.space(), v, i)));
            (CohScalar::one(), CohScalar::from_int(-1), d)
        },
        "right BGG",
    )
}

/// Left BGG operator `δᵢ = (id − sᵢᴸ)/αᵢ`.
pub fn bgg_left(i: usize, a: &LocalizedClass<H>) -> Result<LocalizedClass<H>> {
    let alpha = root_form(&a.space().group().rs.simple_root(i));
    left_combination(i, a, &CohScalar::from_int(-1), &CohScalar::one(), &alpha, "left BGG")
}

/// Right Demazure operator: `(∂ᵢa)|_v = (a_v − e^{vαᵢ} a_{vsᵢ}) / (1 − e^{vαᵢ})`.
pub fn demazure_right(i: usize, a: &LocalizedClass<K>) -> Result<LocalizedClass<K>> {
    right_combination(
        i,
        a,
        |v| {
            let e = character(&moved_root(a.space(), v, i));
            (KScalar::one(), e.neg(), KScalar::one().sub(&e))
        },
        "right Demazure",
    )
}

/// Left Demazure operators `δᵢ = (1 − e^{αᵢ}sᵢᴸ)/(1 − e^{αᵢ})` and, when
/// `dual`, `δᵢ^∨ = (1 − e^{−αᵢ}sᵢᴸ)/(1 − e^{−αᵢ})`.
pub fn demazure_left(i: usize, a: &LocalizedClass<K>, dual: bool) -> Result<LocalizedClass<K>> {
    let mut alpha = a.space().group().rs.simple_root(i);
    if dual {
        alpha = negate(&alpha);
    }
    let e = character(&alpha);
    left_combination(i, a, &e.neg(), &KScalar::one(), &KScalar::one().sub(&e), "left Demazure")
}

/// `𝒯ᵢᴿ = ∂ᵢ − sᵢᴿ`, or `𝒯ᵢ^{R,∨} = ∂ᵢ + sᵢᴿ` when `dual`.
pub fn dl_right_h(i: usize, a: &LocalizedClass<H>, dual: bool) -> Result<LocalizedClass<H>> {
    // (a_v − a_{vsᵢ})/(−vαᵢ) ∓ a_{vsᵢ} = (a_v − (1 ∓ vαᵢ) a_{vsᵢ}) / (−vαᵢ)
    right_combination(
        i,
        a,
        |v| {
            let beta = root_form(&moved_root(a.space(), v, i));
            let sign = if dual { CohScalar::one() } else { CohScalar::from_int(-1) };
            let h = CohScalar::from_int(-1).add(&sign.mul(&beta).neg());
            (CohScalar::one(), h, beta.neg())
        },
        "right DL",
    )
}

/// `𝒯ᵢᴸ = −δᵢ + sᵢᴸ = ((1+αᵢ)sᵢᴸ − id)/αᵢ`, or `𝒯ᵢ^{L,∨} = δᵢ + sᵢᴸ =
/// (id + (αᵢ−1)sᵢᴸ)/αᵢ` when `dual`.
pub fn dl_left_h(i: usize, a: &LocalizedClass<H>, dual: bool) -> Result<LocalizedClass<H>> {
    let alpha = root_form(&a.space().group().rs.simple_root(i));
    let one = CohScalar::one();
    if dual {
        left_combination(i, a, &alpha.sub(&one), &one, &alpha, "left DL")
    } else {
        left_combination(i, a, &alpha.add(&one), &one.neg(), &alpha, "left DL")
    }
}

/// `𝒯ᵢ^{L,ħ} = sᵢᴸ − ħδᵢ = ((αᵢ+ħ)sᵢᴸ − ħ·id)/αᵢ`.
pub fn dl_left_homogenized(i: usize, a: &LocalizedClass<H>) -> Result<LocalizedClass<H>> {
    let space = a.space();
    let alpha = root_form(&space.group().rs.simple_root(i));
    let h = hbar(space.rank());
    left_combination(i, a, &alpha.add(&h), &h.neg(), &alpha, "homogenized left DL")
}

/// `𝒯ᵢᴿ = (1 + yℒ_{αᵢ})∂ᵢ − id`, or `𝒯ᵢ^{R,∨} = ∂ᵢ(1 + yℒ_{αᵢ}) − id` when
/// `dual`. Here `ℒ_λ|_v = e^{vλ}`.
pub fn dl_right_k(i: usize, a: &LocalizedClass<K>, dual: bool) -> Result<LocalizedClass<K>> {
    let y = y_var(a.space().rank());
    let one = KScalar::one();
    right_combination(
        i,
        a,
        |v| {
            let e = character(&moved_root(a.space(), v, i));
            let d = one.sub(&e);
            if dual {
                // ∂((1+yℒ)a)|_v − a_v with (1+yℒ)|_{vsᵢ} = 1 + y e^{−vαᵢ}:
                // ((1+ye)a_v − e(1+ye⁻¹)a_{vsᵢ})/(1−e) − a_v.
                let f = one.add(&y.mul(&e)).sub(&d);
                let h = e.add(&y).neg();
                (f, h, d)
            } else {
                // (1+ye)(a_v − e a_{vsᵢ})/(1−e) − a_v.
                let w = one.add(&y.mul(&e));
                (w.sub(&d), w.mul(&e).neg(), d)
            }
        },
        "right DL",
    )
}

/// `𝒯ᵢᴸ = δᵢ(1+ye^{αᵢ}) − id = ((1+ye^{−αᵢ})sᵢᴸ − (1+y))/(1−e^{−αᵢ})`,
/// or `𝒯ᵢ^{L,∨} = δᵢ^∨(1+ye^{−αᵢ}) − id` (αᵢ ↦ −αᵢ) when `dual`.
pub fn dl_left_k(i: usize, a: &LocalizedClass<K>, dual: bool) -> Result<LocalizedClass<K>> {
    let space = a.space();
    let mut alpha = space.group().rs.simple_root(i);
    if !dual {
        alpha = negate(&alpha);
    }
    let e = character(&alpha);
    let y = y_var(space.rank());
    let one = KScalar::one();
    let c1 = one.add(&y.mul(&e));
    let c0 = one.add(&y).neg();
    left_combination(i, a, &c1, &c0, &one.sub(&e), "left DL")
}

/// Which side an operator acts from.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Hand {
    Left,
    Right,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Weyl,
    /// BGG in H, Demazure in K.
    Divided,
    /// δᵢ^∨ (K, left only).
    DividedDual,
    Dl,
    DlDual,
    /// 𝒯ᵢ^{L,ħ} (H, left only).
    DlHomogenized,
}

/// One simple operator: a side, a family and a simple index.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorSpec {
    pub hand: Hand,
    pub family: Family,
    pub index: usize,
}

impl fmt::Display for OperatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hand = match self.hand {
            Hand::Left => "L",
            Hand::Right => "R",
        };
        let name = match self.family {
            Family::Weyl => "s",
            Family::Divided => "D",
            Family::DividedDual => "Dv",
            Family::Dl => "T",
            Family::DlDual => "Tv",
            Family::DlHomogenized => "Th",
        };
        write!(f, "{name}{}^{hand}", self.index + 1)
    }
}

impl OperatorSpec {
    pub fn new(hand: Hand, family: Family, index: usize) -> Self {
        OperatorSpec { hand, family, index }
    }

    pub fn left(family: Family, index: usize) -> Self {
        Self::new(Hand::Left, family, index)
    }

    pub fn right(family: Family, index: usize) -> Self {
        Self::new(Hand::Right, family, index)
    }

    pub fn with_index(self, index: usize) -> Self {
        OperatorSpec { index, ..self }
    }

    pub fn apply<T: Theory>(&self, a: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
        let i = self.index;
        check_index(a.space(), i)?;
        match (self.hand, self.family) {
            (Hand::Left, Family::Weyl) => Ok(weyl_left(a.space().group().simple(i), a)),
            (Hand::Right, Family::Weyl) => weyl_right(a.space().group().simple(i), a),
            (Hand::Left, Family::Divided) => T::left_divided(i, a, false),
            (Hand::Left, Family::DividedDual) => T::left_divided(i, a, true),
            (Hand::Right, Family::Divided) => T::right_divided(i, a),
            (Hand::Left, Family::Dl) => T::dl_left(i, a, false),
            (Hand::Left, Family::DlDual) => T::dl_left(i, a, true),
            (Hand::Right, Family::Dl) => T::dl_right(i, a, false),
            (Hand::Right, Family::DlDual) => T::dl_right(i, a, true),
            (Hand::Left, Family::DlHomogenized) => T::left_homogenized(i, a),
            (Hand::Right, Family::DividedDual) => Err(Error::WrongTheory("right dual Demazure")),
            (Hand::Right, Family::DlHomogenized) => Err(Error::WrongTheory("right homogenized DL")),
        }
    }

    /// Applies `O_{i₁} ∘ … ∘ O_{i_k}` for the word `i₁…i_k` (rightmost
    /// letter first). The word must be reduced.
    pub fn apply_word<T: Theory>(&self, word: &[usize], a: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
        let g = a.space().group();
        if !g.is_reduced(word)? {
            return Err(Error::NonReducedWord(word_label(word)));
        }
        let mut out = a.clone();
        for &i in word.iter().rev() {
            out = self.with_index(i).apply(&out)?;
        }
        Ok(out)
    }

    /// `O_w` via the canonical reduced word of the element `w`.
    pub fn apply_element<T: Theory>(&self, w: usize, a: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
        let word = a.space().group().word(w).to_vec();
        self.apply_word(&word, a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gkm::SchubertBasis;
    use crate::gkm::Side;
    use crate::root_system::MAX_RANK;
    use alloc::sync::Arc;

    fn a1() -> Arc<FlagSpace> {
        FlagSpace::full_flag("A1").unwrap()
    }

    fn alpha() -> CohScalar {
        CohScalar::var(0)
    }

    fn e(k: i32) -> KScalar {
        let mut l = [0; MAX_RANK];
        l[0] = k;
        character(&l)
    }

    fn hclass(s: &Arc<FlagSpace>, v: &[CohScalar]) -> LocalizedClass<H> {
        LocalizedClass::new(s.clone(), v.iter().map(|p| p.clone().into()).collect()).unwrap()
    }

    fn kclass(s: &Arc<FlagSpace>, v: &[KScalar]) -> LocalizedClass<K> {
        LocalizedClass::new(s.clone(), v.iter().map(|p| p.clone().into()).collect()).unwrap()
    }

    #[test]
    fn a1_cohomology_operators() {
        let s = a1();
        let pt = LocalizedClass::<H>::fixed_point(&s, 0);
        assert_eq!(pt, hclass(&s, &[alpha().neg(), CohScalar::zero()]));
        let one = LocalizedClass::<H>::one(&s);
        assert_eq!(bgg_right(0, &pt).unwrap(), one);
        assert!(bgg_right(0, &one).unwrap().is_zero());
        let opp = hclass(&s, &[CohScalar::zero(), alpha()]);
        assert_eq!(bgg_left(0, &opp).unwrap(), one);
        let csm = hclass(&s, &[CohScalar::one(), CohScalar::one().add(&alpha())]);
        assert_eq!(dl_right_h(0, &pt, false).unwrap(), csm);
        assert_eq!(dl_left_h(0, &pt, false).unwrap(), csm);
        // ∂ᵢ(1) = 0 in cohomology, so 𝒯ᵢᴿ(1) = −sᵢᴿ(1) = −1.
        assert_eq!(dl_right_h(0, &one, false).unwrap(), one.neg());
    }

    #[test]
    fn a1_k_operators() {
        let s = a1();
        let one_k = KScalar::one();
        let o_id = LocalizedClass::<K>::fixed_point(&s, 0);
        assert_eq!(o_id, kclass(&s, &[one_k.sub(&e(1)), KScalar::zero()]));
        let o_s = LocalizedClass::<K>::one(&s);
        assert_eq!(demazure_right(0, &o_id).unwrap(), o_s);
        assert_eq!(demazure_left(0, &o_id, false).unwrap(), o_s);
        assert_eq!(weyl_left(s.group().simple(0), &o_id), kclass(&s, &[KScalar::zero(), one_k.sub(&e(-1))]));
        let y = y_var(1);
        let mc = kclass(&s, &[e(1).mul(&one_k.add(&y)), one_k.add(&y.mul(&e(-1)))]);
        assert_eq!(dl_right_k(0, &o_id, false).unwrap(), mc);
        // 𝒯ᵢᴸ(𝒪_id) = (1+ye^{−α})𝒪_s − (1+y+ye^{−α})𝒪_id
        let lhs = dl_left_k(0, &o_id, false).unwrap();
        let rhs = o_s
            .scale_poly(&one_k.add(&y.mul(&e(-1))))
            .sub(&o_id.scale_poly(&one_k.add(&y).add(&y.mul(&e(-1)))));
        assert_eq!(lhs, rhs);
        let lb = kclass(&s, &[e(1), e(-1)]);
        assert_eq!(dl_right_k(0, &o_s, false).unwrap(), lb.scale_poly(&y));
    }

    #[test]
    fn right_operators_reject_parabolic_spaces() {
        let gr = FlagSpace::new("A3", &[0, 2]).unwrap();
        let one = LocalizedClass::<H>::one(&gr);
        assert_eq!(bgg_right(0, &one), Err(Error::RightOperatorOnParabolic));
        assert!(bgg_left(1, &one).unwrap().is_zero());
    }

    #[test]
    fn non_ring_inputs_are_flagged() {
        let s = a1();
        let bad = hclass(&s, &[CohScalar::one(), CohScalar::zero()]);
        assert!(matches!(bgg_left(0, &bad), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn words_must_be_reduced() {
        let s = FlagSpace::full_flag("A2").unwrap();
        let b = SchubertBasis::<K>::new(&s, Side::B).unwrap();
        let op = OperatorSpec::right(Family::Dl, 0);
        assert!(matches!(op.apply_word(&[0, 0], b.class(0)), Err(Error::NonReducedWord(_))));
        let w1 = op.apply_word(&[0, 1, 0], b.class(0)).unwrap();
        let w2 = op.apply_word(&[1, 0, 1], b.class(0)).unwrap();
        assert_eq!(w1, w2);
        assert_eq!(op.apply_word(&[], b.class(2)).unwrap(), *b.class(2));
    }
}

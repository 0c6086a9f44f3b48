//! The two theories: equivariant cohomology (H) and K-theory (K).
//!
//! Scalars of H are polynomials in α₁..α_r and ħ; scalars of K are Laurent
//! polynomials in the characters e^{α₁}..e^{α_r} and y. In both rings the
//! extra variable sits at index `rank` and is fixed by the Weyl group.

use alloc::vec::Vec;
use core::fmt;

use crate::algebra::poly::{Mono, ONE_MONO};
use crate::algebra::{CohScalar, Fraction, GrLex, KScalar, LatticeLex, Poly, Rational, TermOrder};
use crate::error::Result;
use crate::gkm::{FlagSpace, LocalizedClass, ScalarCache};
use crate::operators;
use crate::root_system::{Lattice, WeylGroup, MAX_RANK};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum TheoryKind {
    H,
    K,
}

impl fmt::Display for TheoryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoryKind::H => "H",
            TheoryKind::K => "K",
        })
    }
}

pub trait Theory: Copy + Clone + fmt::Debug + Default + PartialEq + Eq + Send + Sync + 'static {
    type O: TermOrder;
    const KIND: TheoryKind;

    /// Contribution of one tangent weight `w` to the normalizer N_v:
    /// `w` itself (Euler class) or `1 − e^{−w}` (λ₋₁ of the cotangent line).
    fn factor(weight: &Lattice) -> Poly<Self::O>;

    /// Contribution of one tangent weight to the ambient class:
    /// `1 + w` for c(T_X), `1 + y e^{−w}` for λ_y(T*_X).
    fn ambient_factor(weight: &Lattice, rank: usize) -> Poly<Self::O>;

    /// Weyl group action on scalars: α ↦ w(α) or e^λ ↦ e^{w(λ)}.
    fn act(group: &WeylGroup, w: usize, p: &Poly<Self::O>) -> Poly<Self::O>;

    fn cache(space: &FlagSpace) -> &ScalarCache<Self::O>;

    /// Right divided difference ∂ᵢ (BGG in H, Demazure in K).
    fn right_divided(i: usize, a: &LocalizedClass<Self>) -> Result<LocalizedClass<Self>>;

    /// Left divided difference δᵢ (δᵢ^∨ when `dual`, K only).
    fn left_divided(i: usize, a: &LocalizedClass<Self>, dual: bool) -> Result<LocalizedClass<Self>>;

    fn dl_right(i: usize, a: &LocalizedClass<Self>, dual: bool) -> Result<LocalizedClass<Self>>;

    fn dl_left(i: usize, a: &LocalizedClass<Self>, dual: bool) -> Result<LocalizedClass<Self>>;

    /// The homogenized left operator 𝒯ᵢ^{L,ħ}; cohomology only.
    fn left_homogenized(_i: usize, _a: &LocalizedClass<Self>) -> Result<LocalizedClass<Self>> {
        Err(crate::Error::WrongTheory("homogenized left DL"))
    }

    /// The residual of the quadratic relation applied to `a` given `t = 𝒯a`
    /// and `tt = 𝒯𝒯a`: `tt − a` in H, `tt + (1+y)t + y a` in K.
    fn quadratic_residual(
        a: &LocalizedClass<Self>,
        t: &LocalizedClass<Self>,
        tt: &LocalizedClass<Self>,
    ) -> LocalizedClass<Self>;

    /// Inverse of a Demazure–Lusztig operator from its value: `𝒯⁻¹ = 𝒯` in H,
    /// `𝒯⁻¹ = −(𝒯 + 1 + y)/y` in K.
    fn dl_inverse(
        a: &LocalizedClass<Self>,
        t: &LocalizedClass<Self>,
    ) -> Result<LocalizedClass<Self>>;

    fn apply_fraction(group: &WeylGroup, w: usize, f: &Fraction<Self::O>) -> Fraction<Self::O> {
        if w == 0 {
            return f.clone();
        }
        f.map(|p| Self::act(group, w, p))
    }
}

/// Equivariant cohomology.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct H;

/// Equivariant K-theory.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct K;

fn mono_of(lambda: &Lattice) -> Mono {
    let mut m = ONE_MONO;
    m[..MAX_RANK].copy_from_slice(lambda);
    m
}

/// The linear form Σ λ_k α_k.
pub fn root_form(lambda: &Lattice) -> CohScalar {
    Poly::from_terms(
        (0..MAX_RANK)
            .filter(|&k| lambda[k] != 0)
            .map(|k| {
                let mut m = ONE_MONO;
                m[k] = 1;
                (m, Rational::from_int(lambda[k] as i64))
            }),
    )
}

/// The character e^λ.
pub fn character(lambda: &Lattice) -> KScalar {
    Poly::monomial(mono_of(lambda), Rational::one())
}

/// ħ in a rank-`r` cohomology ring.
pub fn hbar(rank: usize) -> CohScalar {
    Poly::var(rank)
}

/// y in a rank-`r` K-theory ring.
pub fn y_var(rank: usize) -> KScalar {
    Poly::var(rank)
}

impl Theory for H {
    type O = GrLex;
    const KIND: TheoryKind = TheoryKind::H;

    fn factor(weight: &Lattice) -> CohScalar {
        root_form(weight)
    }

    fn ambient_factor(weight: &Lattice, _rank: usize) -> CohScalar {
        CohScalar::one().add(&root_form(weight))
    }

    fn act(group: &WeylGroup, w: usize, p: &CohScalar) -> CohScalar {
        if w == 0 || p.is_constant() {
            return p.clone();
        }
        let mat = group.mat(w);
        let images: Vec<Option<CohScalar>> = (0..group.rank())
            .map(|j| {
                let mut col = [0; MAX_RANK];
                for (k, c) in col.iter_mut().enumerate() {
                    *c = mat[k][j];
                }
                Some(root_form(&col))
            })
            .collect();
        p.substitute(&images)
    }

    fn cache(space: &FlagSpace) -> &ScalarCache<GrLex> {
        space.h_cache()
    }

    fn right_divided(i: usize, a: &LocalizedClass<H>) -> Result<LocalizedClass<H>> {
        operators::bgg_right(i, a)
    }

    fn left_divided(i: usize, a: &LocalizedClass<H>, dual: bool) -> Result<LocalizedClass<H>> {
        if dual {
            return Err(crate::Error::WrongTheory("dual left Demazure"));
        }
        operators::bgg_left(i, a)
    }

    fn dl_right(i: usize, a: &LocalizedClass<H>, dual: bool) -> Result<LocalizedClass<H>> {
        operators::dl_right_h(i, a, dual)
    }

    fn dl_left(i: usize, a: &LocalizedClass<H>, dual: bool) -> Result<LocalizedClass<H>> {
        operators::dl_left_h(i, a, dual)
    }

    fn left_homogenized(i: usize, a: &LocalizedClass<H>) -> Result<LocalizedClass<H>> {
        operators::dl_left_homogenized(i, a)
    }

    fn quadratic_residual(a: &LocalizedClass<H>, _t: &LocalizedClass<H>, tt: &LocalizedClass<H>) -> LocalizedClass<H> {
        tt.sub(a)
    }

    fn dl_inverse(_a: &LocalizedClass<H>, t: &LocalizedClass<H>) -> Result<LocalizedClass<H>> {
        Ok(t.clone())
    }
}

impl Theory for K {
    type O = LatticeLex;
    const KIND: TheoryKind = TheoryKind::K;

    fn factor(weight: &Lattice) -> KScalar {
        KScalar::one().sub(&character(&crate::root_system::negate(weight)))
    }

    fn ambient_factor(weight: &Lattice, rank: usize) -> KScalar {
        KScalar::one().add(&y_var(rank).mul(&character(&crate::root_system::negate(weight))))
    }

    fn act(group: &WeylGroup, w: usize, p: &KScalar) -> KScalar {
        if w == 0 || p.is_constant() {
            return p.clone();
        }
        let mat = *group.mat(w);
        let r = group.rank();
        p.map_exponents(|m| {
            let mut out = *m;
            for (k, o) in out.iter_mut().enumerate().take(r) {
                *o = (0..r).map(|j| mat[k][j] * m[j]).sum();
            }
            out
        })
    }

    fn cache(space: &FlagSpace) -> &ScalarCache<LatticeLex> {
        space.k_cache()
    }

    fn right_divided(i: usize, a: &LocalizedClass<K>) -> Result<LocalizedClass<K>> {
        operators::demazure_right(i, a)
    }

    fn left_divided(i: usize, a: &LocalizedClass<K>, dual: bool) -> Result<LocalizedClass<K>> {
        operators::demazure_left(i, a, dual)
    }

    fn dl_right(i: usize, a: &LocalizedClass<K>, dual: bool) -> Result<LocalizedClass<K>> {
        operators::dl_right_k(i, a, dual)
    }

    fn dl_left(i: usize, a: &LocalizedClass<K>, dual: bool) -> Result<LocalizedClass<K>> {
        operators::dl_left_k(i, a, dual)
    }

    fn quadratic_residual(a: &LocalizedClass<K>, t: &LocalizedClass<K>, tt: &LocalizedClass<K>) -> LocalizedClass<K> {
        let r = a.space().rank();
        let y = y_var(r);
        let one_y = KScalar::one().add(&y);
        tt.add(&t.scale_poly(&one_y)).add(&a.scale_poly(&y))
    }

    fn dl_inverse(a: &LocalizedClass<K>, t: &LocalizedClass<K>) -> Result<LocalizedClass<K>> {
        let r = a.space().rank();
        let y = y_var(r);
        let one_y = KScalar::one().add(&y);
        let s = t.add(&a.scale_poly(&one_y)).neg();
        s.div_scalar(&y.into())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::build_root_system;

    fn lat(v: &[i32]) -> Lattice {
        let mut out = [0; MAX_RANK];
        out[..v.len()].copy_from_slice(v);
        out
    }

    #[test]
    fn reflection_acts_on_scalars() {
        let a1 = WeylGroup::new(build_root_system("A1").unwrap());
        let s = a1.simple(0);
        assert_eq!(H::act(&a1, s, &root_form(&lat(&[1]))), root_form(&lat(&[-1])));
        let a3 = WeylGroup::new(build_root_system("A3").unwrap());
        let s2 = a3.simple(1);
        assert_eq!(K::act(&a3, s2, &character(&lat(&[-1]))), character(&lat(&[-1, -1])));
        let y = y_var(3);
        assert_eq!(K::act(&a3, a3.longest(), &y), y);
        assert_eq!(H::act(&a3, a3.longest(), &hbar(3)), hbar(3));
    }
}

//! The localization model of H_T(G/P) and K_T(G/P).
//!
//! A class is the tuple of its restrictions to the torus fixed points, which
//! are indexed by the minimal coset representatives W^P in (length, word)
//! order. Restrictions live in the fraction field of the scalar ring.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::marker::PhantomData;

use crate::algebra::{CohScalar, Fraction, KScalar, Poly, TermOrder};
use crate::error::{Error, Result};
use crate::root_system::{build_root_system, negate, Lattice, Parabolic, WeylGroup};
use crate::theory::{character, Theory, H, K};

/// Per-theory scalar data attached to a space.
#[derive(Clone, Debug)]
pub struct ScalarCache<O: TermOrder> {
    /// N_v: Euler class (H) or λ₋₁ of the cotangent space (K), per point.
    norm: Vec<Poly<O>>,
    /// Product of one factor per root occurring as a weight anywhere; every
    /// N_v divides it.
    common: Poly<O>,
    /// `common / N_v`.
    cofactor: Vec<Poly<O>>,
}

impl<O: TermOrder> ScalarCache<O> {
    fn build(space_weights: &[Vec<Lattice>], factor: impl Fn(&Lattice) -> Poly<O>, roots: &[Lattice]) -> Self {
        let norm: Vec<Poly<O>> = space_weights
            .iter()
            .map(|ws| ws.iter().fold(Poly::one(), |acc, w| acc.mul(&factor(w))))
            .collect();
        let common = roots.iter().fold(Poly::one(), |acc, b| acc.mul(&factor(b)));
        let cofactor = norm
            .iter()
            .map(|n| common.div_exact(n).expect("normalizer divides the common denominator"))
            .collect();
        ScalarCache { norm, common, cofactor }
    }

    pub fn norm(&self, p: usize) -> &Poly<O> {
        &self.norm[p]
    }
}

/// The flag variety G/P together with its fixed-point data.
pub struct FlagSpace {
    group: Arc<WeylGroup>,
    parabolic: Parabolic,
    full: Option<Arc<FlagSpace>>,
    /// Tangent weights v(−α), α ∈ R⁺ \ R⁺_P, per fixed point.
    weights: Vec<Vec<Lattice>>,
    h: ScalarCache<crate::algebra::GrLex>,
    k: ScalarCache<crate::algebra::LatticeLex>,
}

impl fmt::Debug for FlagSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl PartialEq for FlagSpace {
    fn eq(&self, other: &Self) -> bool {
        self.group.rs.label == other.group.rs.label
            && self.parabolic.simple_indices() == other.parabolic.simple_indices()
    }
}

impl Eq for FlagSpace {}

impl FlagSpace {
    /// `G/P` for a type label and 0-based simple indices of P.
    pub fn new(label: &str, parabolic: &[usize]) -> Result<Arc<Self>> {
        let group = Arc::new(WeylGroup::new(build_root_system(label)?));
        Self::from_group(group, parabolic)
    }

    /// The full flag variety `G/B`.
    pub fn full_flag(label: &str) -> Result<Arc<Self>> {
        Self::new(label, &[])
    }

    pub fn from_group(group: Arc<WeylGroup>, parabolic: &[usize]) -> Result<Arc<Self>> {
        let p = Parabolic::new(&group, parabolic)?;
        let full = if p.is_borel() { None } else { Some(Self::from_group(group.clone(), &[])?) };
        let rs = &group.rs;
        let weights: Vec<Vec<Lattice>> = p
            .min_reps()
            .iter()
            .map(|&v| {
                p.tangent_roots()
                    .iter()
                    .map(|&b| negate(&group.act(v, &rs.positive_roots[b])))
                    .collect()
            })
            .collect();
        // Every weight is ± a positive root; collect the positive ones.
        let mut used: Vec<Lattice> = Vec::new();
        for ws in &weights {
            for w in ws {
                let pos = if rs.is_positive(w) { *w } else { negate(w) };
                if !used.contains(&pos) {
                    used.push(pos);
                }
            }
        }
        let h = ScalarCache::build(&weights, H::factor, &used);
        let k = ScalarCache::build(&weights, K::factor, &used);
        Ok(Arc::new(FlagSpace { group, parabolic: p, full, weights, h, k }))
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn parabolic(&self) -> &Parabolic {
        &self.parabolic
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn is_full(&self) -> bool {
        self.parabolic.is_borel()
    }

    /// The full flag variety over this space (itself when P = B).
    pub fn full(self: &Arc<Self>) -> Arc<FlagSpace> {
        self.full.clone().unwrap_or_else(|| self.clone())
    }

    /// `A3` or `A3/P{1,3}` (1-based indices).
    pub fn name(&self) -> String {
        let mut s = alloc::format!("{}", self.group.rs.label);
        if !self.parabolic.is_borel() {
            let idx: Vec<String> =
                self.parabolic.simple_indices().iter().map(|i| alloc::format!("{}", i + 1)).collect();
            s.push_str(&alloc::format!("/P{{{}}}", idx.join(",")));
        }
        s
    }

    pub fn npoints(&self) -> usize {
        self.parabolic.min_reps().len()
    }

    /// Weyl group index of the `p`-th fixed point.
    pub fn point(&self, p: usize) -> usize {
        self.parabolic.min_reps()[p]
    }

    pub fn points(&self) -> &[usize] {
        self.parabolic.min_reps()
    }

    /// Fixed point position of the coset of an arbitrary Weyl element.
    pub fn position_of_coset(&self, w: usize) -> usize {
        self.parabolic.position(self.parabolic.coset_rep(w)).expect("coset representative")
    }

    pub fn position(&self, w: usize) -> Option<usize> {
        self.parabolic.position(w)
    }

    pub fn point_label(&self, p: usize) -> String {
        self.group.label(self.point(p))
    }

    pub fn point_length(&self, p: usize) -> usize {
        self.group.length(self.point(p))
    }

    pub fn dim(&self) -> usize {
        self.parabolic.dim()
    }

    pub fn tangent_weights(&self, p: usize) -> &[Lattice] {
        &self.weights[p]
    }

    pub fn euler_class(&self, p: usize) -> &CohScalar {
        self.h.norm(p)
    }

    pub fn lambda_minus1_cotangent(&self, p: usize) -> &KScalar {
        self.k.norm(p)
    }

    pub(crate) fn h_cache(&self) -> &ScalarCache<crate::algebra::GrLex> {
        &self.h
    }

    pub(crate) fn k_cache(&self) -> &ScalarCache<crate::algebra::LatticeLex> {
        &self.k
    }

    pub fn norm<T: Theory>(&self, p: usize) -> &Poly<T::O> {
        T::cache(self).norm(p)
    }

    /// Bruhat order on fixed points (minimal representatives).
    pub fn leq(&self, p: usize, q: usize) -> bool {
        self.group.bruhat_leq(self.point(p), self.point(q))
    }
}

fn same_space(a: &Arc<FlagSpace>, b: &Arc<FlagSpace>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A class given by its fixed-point restrictions.
pub struct LocalizedClass<T: Theory> {
    space: Arc<FlagSpace>,
    values: Vec<Fraction<T::O>>,
    theory: PhantomData<T>,
}

impl<T: Theory> Clone for LocalizedClass<T> {
    fn clone(&self) -> Self {
        LocalizedClass { space: self.space.clone(), values: self.values.clone(), theory: PhantomData }
    }
}

impl<T: Theory> PartialEq for LocalizedClass<T> {
    fn eq(&self, other: &Self) -> bool {
        same_space(&self.space, &other.space) && self.values == other.values
    }
}

impl<T: Theory> Eq for LocalizedClass<T> {}

impl<T: Theory> fmt::Debug for LocalizedClass<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (p, v) in self.values.iter().enumerate() {
            m.entry(&self.space.point_label(p), v);
        }
        m.finish()
    }
}

impl<T: Theory> LocalizedClass<T> {
    pub fn new(space: Arc<FlagSpace>, values: Vec<Fraction<T::O>>) -> Result<Self> {
        if values.len() != space.npoints() {
            return Err(Error::SpaceMismatch);
        }
        Ok(LocalizedClass { space, values, theory: PhantomData })
    }

    pub(crate) fn from_values(space: Arc<FlagSpace>, values: Vec<Fraction<T::O>>) -> Self {
        debug_assert_eq!(values.len(), space.npoints());
        LocalizedClass { space, values, theory: PhantomData }
    }

    pub fn from_fn(space: &Arc<FlagSpace>, f: impl FnMut(usize) -> Fraction<T::O>) -> Self {
        let values = (0..space.npoints()).map(f).collect();
        Self::from_values(space.clone(), values)
    }

    pub fn try_from_fn(space: &Arc<FlagSpace>, f: impl FnMut(usize) -> Result<Fraction<T::O>>) -> Result<Self> {
        let values = (0..space.npoints()).map(f).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_values(space.clone(), values))
    }

    pub fn zero(space: &Arc<FlagSpace>) -> Self {
        Self::from_fn(space, |_| Fraction::zero())
    }

    pub fn constant(space: &Arc<FlagSpace>, c: Fraction<T::O>) -> Self {
        Self::from_fn(space, |_| c.clone())
    }

    pub fn one(space: &Arc<FlagSpace>) -> Self {
        Self::constant(space, Fraction::one())
    }

    /// The class of the fixed point `p`: N_p at p, zero elsewhere.
    pub fn fixed_point(space: &Arc<FlagSpace>, p: usize) -> Self {
        Self::from_fn(space, |q| if q == p { space.norm::<T>(p).clone().into() } else { Fraction::zero() })
    }

    /// c(T_X) in H, λ_y(T*_X) in K.
    pub fn ambient(space: &Arc<FlagSpace>) -> Self {
        let r = space.rank();
        Self::from_fn(space, |p| {
            space
                .tangent_weights(p)
                .iter()
                .fold(Poly::one(), |acc, w| acc.mul(&T::ambient_factor(w, r)))
                .into()
        })
    }

    pub fn space(&self) -> &Arc<FlagSpace> {
        &self.space
    }

    pub fn values(&self) -> &[Fraction<T::O>] {
        &self.values
    }

    pub fn value(&self, p: usize) -> &Fraction<T::O> {
        &self.values[p]
    }

    /// Restriction at the coset of an arbitrary Weyl element.
    pub fn value_at_element(&self, w: usize) -> &Fraction<T::O> {
        &self.values[self.space.position_of_coset(w)]
    }

    pub fn into_values(self) -> Vec<Fraction<T::O>> {
        self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// True when every restriction has denominator 1.
    pub fn is_polynomial(&self) -> bool {
        self.values.iter().all(|v| v.is_poly())
    }

    pub fn same_space(&self, other: &Self) -> bool {
        same_space(&self.space, &other.space)
    }

    fn zip(&self, other: &Self, f: impl Fn(&Fraction<T::O>, &Fraction<T::O>) -> Fraction<T::O>) -> Self {
        assert!(self.same_space(other), "classes on different spaces");
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        Self::from_values(self.space.clone(), values)
    }

    pub fn map(&self, f: impl Fn(&Fraction<T::O>) -> Fraction<T::O>) -> Self {
        Self::from_values(self.space.clone(), self.values.iter().map(f).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.sub(b))
    }

    pub fn neg(&self) -> Self {
        self.map(|a| a.neg())
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a.mul(b))
    }

    pub fn scale(&self, c: &Fraction<T::O>) -> Self {
        self.map(|a| a.mul(c))
    }

    pub fn scale_poly(&self, c: &Poly<T::O>) -> Self {
        self.map(|a| a.mul_poly(c))
    }

    pub fn div_scalar(&self, c: &Fraction<T::O>) -> Result<Self> {
        let values = self.values.iter().map(|a| a.div(c)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_values(self.space.clone(), values))
    }

    /// Pointwise quotient.
    pub fn div(&self, other: &Self) -> Result<Self> {
        if !self.same_space(other) {
            return Err(Error::SpaceMismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a.div(b)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_values(self.space.clone(), values))
    }

    /// Applies a scalar ring map to every restriction.
    pub fn map_scalars(&self, f: impl Fn(&Poly<T::O>) -> Poly<T::O>) -> Result<Self> {
        let values = self.values.iter().map(|v| v.specialize(&f)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_values(self.space.clone(), values))
    }

    /// ∫ a = Σ_v a|_v / N_v.
    pub fn integrate(&self) -> Fraction<T::O> {
        let cache = T::cache(&self.space);
        if self.is_polynomial() {
            let mut num = Poly::zero();
            for (p, v) in self.values.iter().enumerate() {
                if !v.is_zero() {
                    num = num.add(&v.num().mul(&cache.cofactor[p]));
                }
            }
            return Fraction::new(num, cache.common.clone()).expect("nonzero denominator");
        }
        if let Some(f) = self.integrate_factored() {
            return f;
        }
        let mut acc = Fraction::zero();
        for (p, v) in self.values.iter().enumerate() {
            if !v.is_zero() {
                acc = acc.add(&v.mul_poly(&cache.cofactor[p]));
            }
        }
        acc.div_poly(&cache.common).expect("nonzero denominator")
    }

    /// Integration over a common denominator built as the lcm of factored
    /// restriction denominators; `None` if some denominator does not factor
    /// over the root factors.
    fn integrate_factored(&self) -> Option<Fraction<T::O>> {
        let cache = T::cache(&self.space);
        let candidates = candidate_factors::<T>(&self.space);
        let mut dens: Vec<Vec<Poly<T::O>>> = Vec::with_capacity(self.values.len());
        let mut lcm: Vec<Poly<T::O>> = Vec::new();
        for v in &self.values {
            let fs = if v.is_zero() { Vec::new() } else { factor_over(v.den(), &candidates)? };
            let mut have = lcm.clone();
            for f in &fs {
                match have.iter().position(|h| h == f) {
                    Some(k) => {
                        have.swap_remove(k);
                    }
                    None => lcm.push(f.clone()),
                }
            }
            dens.push(fs);
        }
        let lcm_poly = lcm.iter().fold(Poly::one(), |acc, f| acc.mul(f));
        let mut num = Poly::zero();
        for (p, v) in self.values.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            // v = num_v / den_v with den_v = unit · ∏ dens[p].
            let prod = dens[p].iter().fold(Poly::one(), |acc, f| acc.mul(f));
            let unit = v.den().div_exact(&prod)?;
            let mut rest = lcm.clone();
            for f in &dens[p] {
                let k = rest.iter().position(|h| h == f)?;
                rest.swap_remove(k);
            }
            let cof = rest.iter().fold(cache.cofactor[p].clone(), |acc, f| acc.mul(f));
            num = num.add(&v.num().mul(&cof).div_exact(&unit)?);
        }
        Fraction::new(num, lcm_poly.mul(&cache.common)).ok()
    }

    /// ⟨a, b⟩ = ∫ a·b.
    pub fn pair(&self, other: &Self) -> Result<Fraction<T::O>> {
        if !self.same_space(other) {
            return Err(Error::SpaceMismatch);
        }
        Ok(self.mul(other).integrate())
    }

    /// π_* along G/B → G/P; `self` must live on the full flag variety.
    pub fn pushforward(&self, target: &Arc<FlagSpace>) -> Result<Self> {
        if !self.space.is_full() || self.space.group().rs.label != target.group().rs.label {
            return Err(Error::SpaceMismatch);
        }
        if target.is_full() {
            return Ok(Self::from_values(target.clone(), self.values.clone()));
        }
        let g = target.group();
        let full = &self.space;
        let levi = target.parabolic().levi_elements();
        let values = (0..target.npoints())
            .map(|q| {
                let u = target.point(q);
                let n_p = target.norm::<T>(q);
                // N_{ux} = N^P_u · L_{ux}; the L's differ by units along the coset.
                let l_of = |x: usize| {
                    let v = g.mul(u, x);
                    let pos = full.position(v).expect("full flag point");
                    (pos, full.norm::<T>(pos).div_exact(n_p).expect("normalizer splits"))
                };
                let (_, l_u) = l_of(0);
                let mut acc = Fraction::zero();
                for &x in levi {
                    let (pos, l_v) = l_of(x);
                    let val = &self.values[pos];
                    if val.is_zero() {
                        continue;
                    }
                    let unit = l_u.div_exact(&l_v).expect("levi factors agree up to units");
                    acc = acc.add(&val.mul_poly(&unit));
                }
                acc.div_poly(&l_u).expect("nonzero")
            })
            .collect();
        Ok(Self::from_values(target.clone(), values))
    }

    /// π^* along G/B → G/P: (π^*b)|_v = b|_{vW_P}.
    pub fn pullback(&self) -> Self {
        let full = self.space.full();
        let values = (0..full.npoints())
            .map(|p| self.value_at_element(full.point(p)).clone())
            .collect();
        Self::from_values(full, values)
    }

    /// Divides the restriction at each point by the product of the given
    /// irreducible factors, cancelling by trial division.
    pub(crate) fn div_by_irreducibles(&self, factors_at: impl Fn(usize) -> Vec<Poly<T::O>>) -> Result<Self> {
        Self::try_from_fn(&self.space, |p| {
            let factors = factors_at(p);
            match self.values[p].as_poly() {
                Some(num) => Fraction::over_irreducibles(num.clone(), &factors),
                None => self.values[p].div_poly(&factors.iter().fold(Poly::one(), |acc, f| acc.mul(f))),
            }
        })
    }

    /// Multiplies by the W-invariant scalar `invariant_denominator`; every
    /// operator commutes with this, so identities among SM or SMC classes
    /// can be checked on polynomial representatives.
    pub fn clear_invariant(&self) -> Self {
        let d = invariant_denominator::<T>(&self.space);
        self.map(|v| v.mul_poly(&d))
    }

    /// Checks the GKM divisibility conditions. `Ok(None)` means the class
    /// passes; `Ok(Some((p, β)))` names a failing edge (fixed point
    /// position and positive-root index).
    pub fn gkm_check(&self) -> Result<Option<(usize, usize)>> {
        let space = &self.space;
        for (p, v) in self.values.iter().enumerate() {
            if !v.is_poly() {
                return Err(Error::NonPolynomial(space.point_label(p)));
            }
        }
        let g = space.group();
        let rs = &g.rs;
        for p in 0..space.npoints() {
            let v = space.point(p);
            for &b in space.parabolic().tangent_roots() {
                let q = space.position_of_coset(g.mul(v, g.reflection(b)));
                if q == p {
                    continue;
                }
                let weight = negate(&g.act(v, &rs.positive_roots[b]));
                let d = T::factor(&weight);
                let diff = self.values[p].num().sub(self.values[q].num());
                if !diff.divisible_by(&d) {
                    return Ok(Some((p, b)));
                }
            }
        }
        Ok(None)
    }

    /// Σ_v (a|_v / N_v) · [fixed point v], rebuilt pointwise.
    pub fn localization_expansion(&self) -> Result<Self> {
        let mut acc = Self::zero(&self.space);
        for (p, v) in self.values.iter().enumerate() {
            let coeff = v.div_poly(self.space.norm::<T>(p))?;
            acc = acc.add(&Self::fixed_point(&self.space, p).scale(&coeff));
        }
        Ok(acc)
    }
}

impl LocalizedClass<K> {
    /// The line bundle ℒ_λ: restriction e^{w(λ)} at w.
    pub fn line_bundle(space: &Arc<FlagSpace>, lambda: &Lattice) -> Result<Self> {
        let g = space.group();
        for &j in space.parabolic().simple_indices() {
            if g.rs.reflect(j, lambda) != *lambda {
                return Err(Error::NonInvariantWeight);
            }
        }
        Ok(Self::from_fn(space, |p| character(&g.act(space.point(p), lambda)).into()))
    }
}

/// Normalized irreducible factors that can occur in normalizers and
/// diagonal restrictions.
pub(crate) fn candidate_factors<T: Theory>(space: &FlagSpace) -> Vec<Poly<T::O>> {
    let r = space.rank();
    let mut out: Vec<Poly<T::O>> = Vec::new();
    for a in &space.group().rs.positive_roots {
        for w in [*a, negate(a)] {
            for f in [T::factor(&w), T::ambient_factor(&w, r)] {
                let f = normal_factor(&f);
                if !out.contains(&f) {
                    out.push(f);
                }
            }
        }
    }
    out
}

fn normal_factor<O: TermOrder>(f: &Poly<O>) -> Poly<O> {
    if O::LAURENT {
        f.split_monomial().1.monic()
    } else {
        f.monic()
    }
}

/// Splits `p` as unit · ∏ factors over the candidates, or `None` when a
/// non-unit remains.
pub(crate) fn factor_over<O: TermOrder>(p: &Poly<O>, candidates: &[Poly<O>]) -> Option<Vec<Poly<O>>> {
    let mut rest = p.clone();
    let mut fs = Vec::new();
    for c in candidates {
        while let Some(q) = rest.div_exact(c) {
            rest = q;
            fs.push(c.clone());
        }
    }
    let unit = if O::LAURENT { rest.is_monomial() } else { rest.is_constant() };
    unit.then_some(fs)
}

/// ∏_{β ∈ R} (ambient factor of β): ∏(1+β) in H, ∏(1+ye^β) in K. It is
/// W-invariant and clears the denominators of SM and SMC classes.
pub fn invariant_denominator<T: Theory>(space: &FlagSpace) -> Poly<T::O> {
    let r = space.rank();
    space
        .group()
        .rs
        .positive_roots
        .iter()
        .fold(Poly::one(), |acc, b| acc.mul(&T::ambient_factor(b, r)).mul(&T::ambient_factor(&negate(b), r)))
}

/// Which Borel the Schubert varieties are stable under.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// B-stable X_{wW_P}, cells X_{wW_P}°.
    B,
    /// B⁻-stable X^{wW_P}, cells X^{wW_P,°}.
    BMinus,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::B => Side::BMinus,
            Side::BMinus => Side::B,
        }
    }
}

/// Generates a per-element family on G/B by a right-operator recursion:
/// `table[w] = step(i, table[w s_i])` with `i` the last letter of the
/// canonical word of `w`.
pub(crate) fn right_recursion<T: Theory>(
    full: &Arc<FlagSpace>,
    base: LocalizedClass<T>,
    step: impl Fn(usize, &LocalizedClass<T>) -> Result<LocalizedClass<T>>,
) -> Result<Vec<LocalizedClass<T>>> {
    let g = full.group();
    let mut table: Vec<LocalizedClass<T>> = Vec::with_capacity(g.order());
    table.push(base);
    for w in 1..g.order() {
        let i = *g.word(w).last().expect("non-identity");
        let prev = g.right_mul(w, i);
        let next = step(i, &table[prev])?;
        table.push(next);
    }
    Ok(table)
}

/// Turns a B-side family on G/B (indexed by all of W) into the B- and
/// B⁻-side families on G/P (indexed by fixed point position). The B⁻ side
/// is the w₀ᴸ image: X^{uW_P} = w₀·X_{vW_P} with vW_P = w₀uW_P.
pub(crate) fn parabolic_family<T: Theory>(
    space: &Arc<FlagSpace>,
    full_table: &[LocalizedClass<T>],
    side: Side,
) -> Result<Vec<LocalizedClass<T>>> {
    let b_side: Vec<LocalizedClass<T>> = space
        .points()
        .iter()
        .map(|&w| full_table[w].pushforward(space))
        .collect::<Result<_>>()?;
    match side {
        Side::B => Ok(b_side),
        Side::BMinus => Ok(w0_flip(space, &b_side)),
    }
}

/// `out[u] = w₀ᴸ(family[coset of w₀u])`, swapping B and B⁻ families.
pub(crate) fn w0_flip<T: Theory>(space: &Arc<FlagSpace>, family: &[LocalizedClass<T>]) -> Vec<LocalizedClass<T>> {
    let g = space.group();
    let w0 = g.longest();
    (0..space.npoints())
        .map(|p| {
            let q = space.position_of_coset(g.mul(w0, space.point(p)));
            crate::operators::weyl_left(w0, &family[q])
        })
        .collect()
}

/// The Schubert basis of one side: [X_w]/[X^w] in H, 𝒪_w/𝒪^w in K.
#[derive(Clone, Debug)]
pub struct SchubertBasis<T: Theory> {
    pub side: Side,
    pub classes: Vec<LocalizedClass<T>>,
}

impl<T: Theory> SchubertBasis<T> {
    pub fn new(space: &Arc<FlagSpace>, side: Side) -> Result<Self> {
        let full = space.full();
        let base = LocalizedClass::<T>::fixed_point(&full, 0);
        let table = right_recursion(&full, base, |i, a| T::right_divided(i, a))?;
        let classes = parabolic_family(space, &table, side)?;
        Ok(SchubertBasis { side, classes })
    }

    pub fn class(&self, p: usize) -> &LocalizedClass<T> {
        &self.classes[p]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Coefficients of `a` in this basis, by triangular elimination.
    pub fn expand(&self, a: &LocalizedClass<T>) -> Result<Vec<Fraction<T::O>>> {
        let space = a.space().clone();
        let n = space.npoints();
        if self.classes.len() != n || !self.classes.iter().all(|c| c.same_space(a)) {
            return Err(Error::SpaceMismatch);
        }
        let mut residual = a.clone();
        let mut coeffs = alloc::vec![Fraction::zero(); n];
        // B side: [X_w]|_v ≠ 0 only for v ≤ w, so peel off from the top.
        let order: Vec<usize> = match self.side {
            Side::B => (0..n).rev().collect(),
            Side::BMinus => (0..n).collect(),
        };
        for p in order {
            let r = residual.value(p);
            if r.is_zero() {
                continue;
            }
            let c = r.div(self.classes[p].value(p))?;
            residual = residual.sub(&self.classes[p].scale(&c));
            coeffs[p] = c;
        }
        if !residual.is_zero() {
            return Err(Error::ExpansionFailed(space.name()));
        }
        Ok(coeffs)
    }

    /// Σ c_w · basis_w.
    pub fn combine(&self, coeffs: &[Fraction<T::O>]) -> LocalizedClass<T> {
        let space = self.classes[0].space().clone();
        let mut acc = LocalizedClass::zero(&space);
        for (c, b) in coeffs.iter().zip(&self.classes) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }
}

pub fn euler_class(space: &FlagSpace, p: usize) -> CohScalar {
    space.euler_class(p).clone()
}

pub fn lambda_minus1_cotangent(space: &FlagSpace, p: usize) -> KScalar {
    space.lambda_minus1_cotangent(p).clone()
}

//! Sparse multivariate (Laurent) polynomials over the rationals.
//!
//! Terms are kept sorted in descending order for the ring's term order, so the
//! leading term is always `terms[0]`. Exponent vectors have a fixed width; the
//! variables beyond the ones a space uses simply stay at exponent zero.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::Hash;
use core::marker::PhantomData;

use super::rational::Rational;

/// Rank 4 plus one extra variable (ħ or y).
pub const MAX_VARS: usize = 5;

pub type Mono = [i32; MAX_VARS];

pub const ONE_MONO: Mono = [0; MAX_VARS];

pub fn mono_add(a: &Mono, b: &Mono) -> Mono {
    let mut m = *a;
    for (x, y) in m.iter_mut().zip(b) {
        *x += y;
    }
    m
}

pub fn mono_sub(a: &Mono, b: &Mono) -> Mono {
    let mut m = *a;
    for (x, y) in m.iter_mut().zip(b) {
        *x -= y;
    }
    m
}

pub fn mono_degree(m: &Mono) -> i64 {
    m.iter().map(|&e| e as i64).sum()
}

fn mono_nonneg(m: &Mono) -> bool {
    m.iter().all(|&e| e >= 0)
}

/// A monomial order. `LAURENT` rings treat monomials as units.
pub trait TermOrder:
    Copy + Clone + fmt::Debug + Default + PartialEq + Eq + PartialOrd + Ord + Hash + Send + Sync + 'static
{
    const LAURENT: bool;
    fn compare(a: &Mono, b: &Mono) -> Ordering;
}

/// A monomial ordered by `O`, for use as a map key.
#[derive(Clone, Copy, PartialEq, Eq)]
struct Ordered<O> {
    mono: Mono,
    order: PhantomData<O>,
}

impl<O> Ordered<O> {
    fn new(mono: Mono) -> Self {
        Ordered { mono, order: PhantomData }
    }
}

impl<O: TermOrder> PartialOrd for Ordered<O> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<O: TermOrder> Ord for Ordered<O> {
    fn cmp(&self, other: &Self) -> Ordering {
        O::compare(&self.mono, &other.mono)
    }
}

/// Graded lexicographic order with x₀ < x₁ < … (cohomology: α₁ < … < α_r < ħ).
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrLex;

impl TermOrder for GrLex {
    const LAURENT: bool = false;
    fn compare(a: &Mono, b: &Mono) -> Ordering {
        mono_degree(a)
            .cmp(&mono_degree(b))
            .then_with(|| a.iter().rev().cmp(b.iter().rev()))
    }
}

/// Plain lexicographic order from the first coordinate: lattice part, then y.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeLex;

impl TermOrder for LatticeLex {
    const LAURENT: bool = true;
    fn compare(a: &Mono, b: &Mono) -> Ordering {
        a.cmp(b)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly<O: TermOrder> {
    terms: Vec<(Mono, Rational)>,
    order: PhantomData<O>,
}

impl<O: TermOrder> Default for Poly<O> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<O: TermOrder> Poly<O> {
    fn from_sorted(terms: Vec<(Mono, Rational)>) -> Self {
        Poly { terms, order: PhantomData }
    }

    pub fn zero() -> Self {
        Self::from_sorted(Vec::new())
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(ONE_MONO, c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    pub fn monomial(m: Mono, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self::from_sorted(alloc::vec![(m, c)])
        }
    }

    /// The single variable `x_i` (for Laurent rings: the character e^{ε_i}).
    pub fn var(i: usize) -> Self {
        let mut m = ONE_MONO;
        m[i] = 1;
        Self::monomial(m, Rational::one())
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Mono, Rational)>>(terms: I) -> Self {
        let mut acc: BTreeMap<Mono, Rational> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(Rational::zero) += &c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: BTreeMap<Mono, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| O::compare(&b.0, &a.0));
        Self::from_sorted(terms)
    }

    pub fn terms(&self) -> &[(Mono, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if *m == ONE_MONO => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if *m == ONE_MONO && c.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&(Mono, Rational)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(Rational::zero)
    }

    pub fn coeff(&self, m: &Mono) -> Rational {
        self.terms
            .iter()
            .find(|(n, _)| n == m)
            .map(|t| t.1.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn neg(&self) -> Self {
        Self::from_sorted(self.terms.iter().map(|(m, c)| (*m, -c)).collect())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self::from_sorted(self.terms.iter().map(|(m, c)| (*m, c * k)).collect())
    }

    /// Multiplies by a monomial; both term orders are translation invariant.
    pub fn shift(&self, by: &Mono) -> Self {
        Self::from_sorted(self.terms.iter().map(|(m, c)| (mono_add(m, by), c.clone())).collect())
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match O::compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Self::from_sorted(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        self.merge(other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let [(m, c)] = self.terms.as_slice() {
            return other.shift(m).scale(c);
        }
        if let [(m, c)] = other.terms.as_slice() {
            return self.shift(m).scale(c);
        }
        let mut acc: BTreeMap<Mono, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let p = ca * cb;
                acc.entry(mono_add(ma, mb))
                    .and_modify(|c| *c += &p)
                    .or_insert(p);
            }
        }
        Self::from_map(acc)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Componentwise minimum exponent (all zeros for the zero polynomial).
    pub fn min_exponents(&self) -> Mono {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return ONE_MONO;
        };
        let mut m = *first;
        for (n, _) in it {
            for (x, y) in m.iter_mut().zip(n) {
                *x = (*x).min(*y);
            }
        }
        m
    }

    pub fn max_exponents(&self) -> Mono {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return ONE_MONO;
        };
        let mut m = *first;
        for (n, _) in it {
            for (x, y) in m.iter_mut().zip(n) {
                *x = (*x).max(*y);
            }
        }
        m
    }

    /// Which variables occur with a nonzero exponent in some term.
    pub fn variables(&self) -> [bool; MAX_VARS] {
        let mut used = [false; MAX_VARS];
        for (m, _) in &self.terms {
            for (u, e) in used.iter_mut().zip(m) {
                *u |= *e != 0;
            }
        }
        used
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|(m, _)| mono_nonneg(m))
    }

    /// Removes the largest monomial factor, returning it with the cofactor.
    pub fn split_monomial(&self) -> (Mono, Self) {
        let m = self.min_exponents();
        if m == ONE_MONO {
            return (m, self.clone());
        }
        let neg = mono_sub(&ONE_MONO, &m);
        (m, self.shift(&neg))
    }

    /// Scales to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// Applies an exponent transformation term by term and re-sorts.
    pub fn map_exponents<F: Fn(&Mono) -> Mono>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Substitutes `x_j ↦ images[j]` for the first `images.len()` variables;
    /// later variables are left alone. Exponents must be nonnegative in every
    /// substituted variable unless the image is a monomial.
    pub fn substitute(&self, images: &[Option<Self>]) -> Self {
        let mut powers: Vec<BTreeMap<i32, Self>> = (0..images.len()).map(|_| BTreeMap::new()).collect();
        let mut acc: BTreeMap<Mono, Rational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut prod = Self::constant(c.clone());
            for (j, img) in images.iter().enumerate() {
                let Some(img) = img else { continue };
                let e = m[j];
                rest[j] = 0;
                if e == 0 {
                    continue;
                }
                let p = powers[j].entry(e).or_insert_with(|| {
                    if e > 0 {
                        img.pow(e as u32)
                    } else {
                        let (mm, cc) = img.terms.first().expect("nonzero image").clone();
                        assert!(img.is_monomial(), "negative power of a non-monomial");
                        let inv = mono_sub(&ONE_MONO, &mm);
                        let mut mono = ONE_MONO;
                        for k in 0..MAX_VARS {
                            mono[k] = inv[k] * (-e);
                        }
                        Self::monomial(mono, cc.recip().expect("nonzero").pow((-e) as u32))
                    }
                });
                prod = prod.mul(p);
            }
            for (n, k) in prod.terms {
                let key = mono_add(&n, &rest);
                acc.entry(key).and_modify(|x| *x += &k).or_insert(k);
            }
        }
        Self::from_map(acc)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    ///
    /// In Laurent rings monomials are units, so both sides are first shifted
    /// into genuine polynomials with no monomial content.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let [(m, c)] = d.terms.as_slice() {
            let inv = c.recip().ok()?;
            let q = Self::from_sorted(
                self.terms.iter().map(|(n, k)| (mono_sub(n, m), k * &inv)).collect(),
            );
            if !O::LAURENT && !q.is_polynomial() {
                return None;
            }
            return Some(q);
        }
        if O::LAURENT {
            let (md, dd) = d.split_monomial();
            let (mf, ff) = self.split_monomial();
            let q = ff.div_poly(&dd)?;
            Some(q.shift(&mono_sub(&mf, &md)))
        } else {
            self.div_poly(d)
        }
    }

    /// Whether `d` divides `self`. For a Laurent binomial `c(xᵃ − xᵇ)` this is
    /// a linear pass: writing `β = b − a`, every coset `m + ℤβ` of exponents
    /// must carry coefficients summing to zero.
    pub fn divisible_by(&self, d: &Self) -> bool {
        match d.terms.as_slice() {
            [(a, ca), (b, cb)] if O::LAURENT && *ca == -cb => {
                let beta = mono_sub(b, a);
                let Some(j) = beta.iter().position(|&x| x != 0) else { return self.is_zero() };
                let beta = if beta[j] < 0 { mono_sub(&ONE_MONO, &beta) } else { beta };
                let mut sums: BTreeMap<Mono, Rational> = BTreeMap::new();
                for (m, c) in &self.terms {
                    let k = m[j].div_euclid(beta[j]);
                    let mut r = *m;
                    for (x, b) in r.iter_mut().zip(&beta) {
                        *x -= k * b;
                    }
                    *sums.entry(r).or_insert_with(Rational::zero) += c;
                }
                sums.values().all(Rational::is_zero)
            }
            _ => self.div_exact(d).is_some(),
        }
    }

    /// Leading-term division; an undivisible leading term proves `d ∤ self`.
    /// The remainder is kept in term order so each step costs O(|d| log |r|).
    fn div_poly(&self, d: &Self) -> Option<Self> {
        let (ld, lc) = d.terms[0].clone();
        let lc_inv = lc.recip().ok()?;
        // If self = q·d then max_k(q) = max_k(self) - max_k(d) in every variable.
        let qmax = mono_sub(&self.max_exponents(), &d.max_exponents());
        let mut r: BTreeMap<Ordered<O>, Rational> =
            self.terms.iter().map(|(m, c)| (Ordered::new(*m), c.clone())).collect();
        let mut q = Vec::new();
        while let Some((lr, cr)) = r.pop_last() {
            let m = mono_sub(&lr.mono, &ld);
            if !mono_nonneg(&m) || m.iter().zip(&qmax).any(|(a, b)| a > b) {
                return None;
            }
            let coef = &cr * &lc_inv;
            for (n, k) in &d.terms[1..] {
                let key = Ordered::new(mono_add(n, &m));
                let t = k * &coef;
                match r.entry(key) {
                    alloc::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= &t;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    alloc::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-t);
                    }
                }
            }
            q.push((m, coef));
        }
        Some(Self::from_sorted(q))
    }

    /// Degree in a single variable (max exponent; polynomial inputs only).
    pub fn degree_in(&self, var: usize) -> i32 {
        self.terms.iter().map(|(m, _)| m[var]).max().unwrap_or(0)
    }

    /// Splits into coefficients of powers of `var`: `self = Σ_k c_k x^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<Self> {
        let deg = self.degree_in(var).max(0) as usize;
        let mut buckets: Vec<Vec<(Mono, Rational)>> = (0..=deg).map(|_| Vec::new()).collect();
        for (m, c) in &self.terms {
            let mut n = *m;
            let k = n[var] as usize;
            n[var] = 0;
            buckets[k].push((n, c.clone()));
        }
        // Removing one coordinate keeps lex order for LatticeLex but not for
        // GrLex, so re-sort each bucket.
        buckets
            .into_iter()
            .map(|mut b| {
                b.sort_by(|x, y| O::compare(&y.0, &x.0));
                Self::from_sorted(b)
            })
            .collect()
    }

    /// Inverse of [`Poly::coefficients_in`].
    pub fn from_coefficients_in(var: usize, coeffs: &[Self]) -> Self {
        let mut m = ONE_MONO;
        let mut acc = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            m[var] = k as i32;
            acc = acc.add(&c.shift(&m));
        }
        acc
    }

    /// Keeps only the terms of total degree `k`.
    pub fn homogeneous_part(&self, k: i64) -> Self {
        Self::from_sorted(self.terms.iter().filter(|(m, _)| mono_degree(m) == k).cloned().collect())
    }

    /// Formats with the given variable names (`x^2*y` style).
    pub fn fmt_with(&self, names: &[&str], f: &mut dyn fmt::Write) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let is_const = *m == ONE_MONO;
            if !a.is_one() || is_const {
                write!(f, "{a}")?;
                if !is_const {
                    f.write_str("*")?;
                }
            }
            let mut first = true;
            for (j, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                let name = names.get(j).copied().unwrap_or("?");
                if e == 1 {
                    f.write_str(name)?;
                } else {
                    write!(f, "{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<O: TermOrder> fmt::Debug for Poly<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(&["x0", "x1", "x2", "x3", "x4"], f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type H = Poly<GrLex>;
    type K = Poly<LatticeLex>;

    fn m(e: &[i32]) -> Mono {
        let mut out = ONE_MONO;
        out[..e.len()].copy_from_slice(e);
        out
    }

    fn e(lambda: &[i32]) -> K {
        K::monomial(m(lambda), Rational::one())
    }

    #[test]
    fn grlex_orders_by_degree_then_highest_variable() {
        assert_eq!(GrLex::compare(&m(&[2]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(GrLex::compare(&m(&[1, 0]), &m(&[0, 1])), Ordering::Less);
        let p = H::var(0).add(&H::var(1)).add(&H::var(0).pow(2));
        assert_eq!(p.leading().unwrap().0, m(&[2]));
    }

    #[test]
    fn exact_division_in_cohomology() {
        let a1 = H::var(0);
        let a2 = H::var(1);
        let f = a1.pow(2).add(&a1.mul(&a2));
        assert_eq!(f.div_exact(&a1), Some(a1.add(&a2)));
        assert_eq!(a2.div_exact(&a1), None);
        assert_eq!(a1.div_exact(&a1.add(&a2)), None);
    }

    #[test]
    fn exact_division_in_laurent_ring() {
        let one = K::one();
        let num = one.sub(&e(&[2]));
        let den = one.sub(&e(&[1]));
        assert_eq!(num.div_exact(&den), Some(one.add(&e(&[1]))));
        // (1 - e^{-α}) = -e^{-α}(1 - e^{α}) is an associate.
        let inv = one.sub(&e(&[-1]));
        assert_eq!(inv.div_exact(&den), Some(e(&[-1]).neg()));
        assert_eq!(one.add(&e(&[1])).div_exact(&den), None);
    }

    #[test]
    fn coefficient_split_round_trips() {
        let p = H::var(0).pow(2).mul(&H::var(1)).add(&H::var(1)).add(&H::from_int(3));
        let cs = p.coefficients_in(0);
        assert_eq!(cs.len(), 3);
        assert_eq!(H::from_coefficients_in(0, &cs), p);
    }

    #[test]
    fn substitution_of_linear_forms() {
        // x0 ↦ -x0, x1 ↦ x0 + x1 applied to x0*x1.
        let p = H::var(0).mul(&H::var(1));
        let imgs = [Some(H::var(0).neg()), Some(H::var(0).add(&H::var(1)))];
        let q = p.substitute(&imgs);
        assert_eq!(q, H::var(0).pow(2).add(&H::var(0).mul(&H::var(1))).neg());
    }
}

//! Quantum cohomology and quantum K-theory modules over a fixed space.
//!
//! Structure constants are data. A [`StructureTable`] holds products of
//! opposite Schubert classes and is validated against everything that can be
//! checked classically. The left Weyl action and the left divided
//! differences act degree by degree in q. [`FormalQElem`] evaluates the
//! Leibniz rules on symbolic products when no table is at hand.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Fraction, Poly};
use crate::error::{Error, Result};
use crate::gkm::{FlagSpace, LocalizedClass, SchubertBasis, Side};
use crate::operators::weyl_left;
use crate::root_system::{negate, Lattice};
use crate::theory::{root_form, Theory, TheoryKind, H, K};
use crate::verify::{alternating_words, schubert_label, VerificationReport};

/// Exponent vector of a monomial in q₁..q_k.
pub type QDeg = Vec<u32>;

/// Simple indices outside the parabolic; the k-th one carries q_k.
pub fn q_indices(space: &FlagSpace) -> Vec<usize> {
    (0..space.rank()).filter(|&i| !space.parabolic().contains_simple(i)).collect()
}

/// `deg q_k = ∫ c₁(T_X) · [X_{s_i W_P}]` for the k-th index `i` outside P.
pub fn q_degrees(space: &Arc<FlagSpace>) -> Result<Vec<u32>> {
    let c1 = LocalizedClass::<H>::from_fn(space, |p| {
        space.tangent_weights(p).iter().fold(Poly::zero(), |acc, w| acc.add(&root_form(w))).into()
    });
    let curves = SchubertBasis::<H>::new(space, Side::B)?;
    let g = space.group();
    q_indices(space)
        .into_iter()
        .map(|i| {
            let p = space.position(g.simple(i)).expect("simple reflection outside P");
            let d = c1.pair(curves.class(p))?;
            d.as_poly()
                .and_then(|x| x.as_constant())
                .and_then(|c| c.to_i64())
                .filter(|&n| n > 0)
                .map(|n| n as u32)
                .ok_or_else(|| Error::ExpansionFailed(format!("degree of the q attached to s{}", i + 1)))
        })
        .collect()
}

fn add_deg(a: &[u32], b: &[u32]) -> QDeg {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn is_classical(d: &[u32]) -> bool {
    d.iter().all(|&x| x == 0)
}

/// One term `coeff · q^qdeg · [X^w]` of a product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableTerm<T: Theory> {
    /// Fixed point position of w ∈ W^P.
    pub w: usize,
    pub qdeg: QDeg,
    pub coeff: Fraction<T::O>,
}

/// Structure constants of ⋆ (H) or ∘ (K) in the opposite Schubert basis.
/// Entries are stored once per unordered pair; unit rows are implicit.
#[derive(Clone, Debug)]
pub struct StructureTable<T: Theory> {
    space: Arc<FlagSpace>,
    arity: usize,
    basis: SchubertBasis<T>,
    entries: BTreeMap<(usize, usize), Vec<TableTerm<T>>>,
}

impl<T: Theory> StructureTable<T> {
    /// Validates and stores `rows` of `(u, v, terms)`, fixed point positions.
    pub fn new(space: &Arc<FlagSpace>, arity: usize, rows: Vec<(usize, usize, Vec<TableTerm<T>>)>) -> Result<Self> {
        let expected = q_indices(space).len();
        if arity != expected {
            return Err(Error::QDegreeArity { expected, got: arity });
        }
        let basis = SchubertBasis::<T>::new(space, Side::BMinus)?;
        let degrees = match T::KIND {
            TheoryKind::H => Some(q_degrees(space)?),
            TheoryKind::K => None,
        };
        let n = space.npoints();
        let mut entries = BTreeMap::new();
        for (u, v, terms) in rows {
            let label = |p: usize| if p < n { space.point_label(p) } else { format!("#{p}") };
            let bad = |reason: String| Error::InvalidTable { u: label(u), v: label(v), reason };
            if u >= n || v >= n {
                return Err(bad("index outside W^P".into()));
            }
            let terms = normalize_terms(terms, arity, n).map_err(|e| bad(e.to_string()))?;
            if u == 0 || v == 0 {
                let unit = vec![TableTerm { w: u.max(v), qdeg: vec![0; arity], coeff: Fraction::one() }];
                if terms != unit {
                    return Err(bad("the unit must act trivially".into()));
                }
                continue;
            }
            let key = (u.min(v), u.max(v));
            if let Some(prev) = entries.get(&key) {
                if *prev != terms {
                    return Err(bad("entry differs from its transpose".into()));
                }
                continue;
            }
            for t in &terms {
                let Some(c) = t.coeff.as_poly() else {
                    return Err(bad(format!("coefficient of {} is not a polynomial", label(t.w))));
                };
                if let Some(degs) = &degrees {
                    let qd: i64 = t.qdeg.iter().zip(degs).map(|(&d, &e)| d as i64 * e as i64).sum();
                    let k = (space.point_length(u) + space.point_length(v)) as i64
                        - space.point_length(t.w) as i64
                        - qd;
                    if k < 0 || c.homogeneous_part(k) != *c {
                        return Err(bad(format!("term at {} has the wrong degree", label(t.w))));
                    }
                }
            }
            let classical = basis.expand(&basis.class(u).mul(basis.class(v)))?;
            let mut given = vec![Fraction::zero(); n];
            for t in terms.iter().filter(|t| is_classical(&t.qdeg)) {
                given[t.w] = t.coeff.clone();
            }
            if let Some(w) = (0..n).find(|&w| given[w] != classical[w]) {
                return Err(bad(format!("classical part disagrees at {}", label(w))));
            }
            entries.insert(key, terms);
        }
        Ok(StructureTable { space: space.clone(), arity, basis, entries })
    }

    /// The table of classical products for the given pairs, no q-terms.
    pub fn classical(space: &Arc<FlagSpace>, pairs: &[(usize, usize)]) -> Result<Self> {
        let basis = SchubertBasis::<T>::new(space, Side::BMinus)?;
        let arity = q_indices(space).len();
        let rows = pairs
            .iter()
            .map(|&(u, v)| {
                let c = basis.expand(&basis.class(u).mul(basis.class(v)))?;
                let terms = c
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(w, coeff)| TableTerm { w, qdeg: vec![0; arity], coeff })
                    .collect();
                Ok((u, v, terms))
            })
            .collect::<Result<_>>()?;
        Self::new(space, arity, rows)
    }

    pub fn space(&self) -> &Arc<FlagSpace> {
        &self.space
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn basis(&self) -> &SchubertBasis<T> {
        &self.basis
    }

    /// Supplied entries with `u ≤ v`, unit rows excluded.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &[TableTerm<T>])> {
        self.entries.iter().map(|(&(u, v), t)| (u, v, t.as_slice()))
    }

    /// The product `[X^u] ⋆ [X^v]`, or [`Error::MissingTableEntry`].
    pub fn entry(&self, u: usize, v: usize) -> Result<Vec<TableTerm<T>>> {
        if u == 0 || v == 0 {
            return Ok(vec![TableTerm { w: u.max(v), qdeg: vec![0; self.arity], coeff: Fraction::one() }]);
        }
        self.entries
            .get(&(u.min(v), u.max(v)))
            .cloned()
            .ok_or_else(|| Error::MissingTableEntry(self.space.point_label(u), self.space.point_label(v)))
    }
}

/// Merges repeated `(w, qdeg)`, drops zeros and sorts.
fn normalize_terms<T: Theory>(terms: Vec<TableTerm<T>>, arity: usize, n: usize) -> Result<Vec<TableTerm<T>>> {
    let mut acc: BTreeMap<(QDeg, usize), Fraction<T::O>> = BTreeMap::new();
    for t in terms {
        if t.qdeg.len() != arity {
            return Err(Error::QDegreeArity { expected: arity, got: t.qdeg.len() });
        }
        if t.w >= n {
            return Err(Error::IndexOutOfRange(t.w));
        }
        let slot = acc.entry((t.qdeg, t.w)).or_insert_with(Fraction::zero);
        *slot = slot.add(&t.coeff);
    }
    Ok(acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((qdeg, w), coeff)| TableTerm { w, qdeg, coeff })
        .collect())
}

/// An element of the quantum module: one classical class per q-degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumClass<T: Theory> {
    space: Arc<FlagSpace>,
    arity: usize,
    terms: BTreeMap<QDeg, LocalizedClass<T>>,
}

impl<T: Theory> QuantumClass<T> {
    pub fn zero(space: &Arc<FlagSpace>) -> Self {
        QuantumClass { space: space.clone(), arity: q_indices(space).len(), terms: BTreeMap::new() }
    }

    pub fn classical(a: LocalizedClass<T>) -> Self {
        let mut out = Self::zero(a.space());
        out.put(vec![0; out.arity], a);
        out
    }

    /// `q^d · a`.
    pub fn monomial(qdeg: QDeg, a: LocalizedClass<T>) -> Result<Self> {
        let mut out = Self::zero(a.space());
        if qdeg.len() != out.arity {
            return Err(Error::QDegreeArity { expected: out.arity, got: qdeg.len() });
        }
        out.put(qdeg, a);
        Ok(out)
    }

    fn put(&mut self, qdeg: QDeg, a: LocalizedClass<T>) {
        if a.is_zero() {
            self.terms.remove(&qdeg);
        } else {
            self.terms.insert(qdeg, a);
        }
    }

    pub fn space(&self) -> &Arc<FlagSpace> {
        &self.space
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<QDeg, LocalizedClass<T>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The q⁰ part.
    pub fn classical_part(&self) -> LocalizedClass<T> {
        self.terms.get(&vec![0; self.arity]).cloned().unwrap_or_else(|| LocalizedClass::zero(&self.space))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            let next = match out.terms.get(d) {
                Some(prev) => prev.add(c),
                None => c.clone(),
            };
            out.put(d.clone(), next);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map(|c| Ok(c.neg())).expect("negation cannot fail")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Fraction<T::O>) -> Self {
        self.map(|a| Ok(a.scale(c))).expect("scaling cannot fail")
    }

    /// Multiplication by `q^d`.
    pub fn shift(&self, qdeg: &[u32]) -> Self {
        let mut out = Self::zero(&self.space);
        for (d, c) in &self.terms {
            out.put(add_deg(d, qdeg), c.clone());
        }
        out
    }

    /// Applies a classical operator degree by degree.
    pub fn map(&self, f: impl Fn(&LocalizedClass<T>) -> Result<LocalizedClass<T>>) -> Result<Self> {
        let mut out = Self::zero(&self.space);
        for (d, c) in &self.terms {
            out.put(d.clone(), f(c)?);
        }
        Ok(out)
    }
}

/// `a ⋆ b` (or `a ∘ b`) through the table. A product the table does not
/// supply is an error, never a silent truncation.
pub fn q_multiply<T: Theory>(table: &StructureTable<T>, a: &QuantumClass<T>, b: &QuantumClass<T>) -> Result<QuantumClass<T>> {
    if **a.space() != **table.space() || **b.space() != **table.space() {
        return Err(Error::SpaceMismatch);
    }
    let basis = table.basis();
    let n = table.space().npoints();
    let expand = |x: &QuantumClass<T>| -> Result<Vec<(QDeg, Vec<Fraction<T::O>>)>> {
        x.terms().iter().map(|(d, c)| Ok((d.clone(), basis.expand(c)?))).collect()
    };
    let (ea, eb) = (expand(a)?, expand(b)?);
    let mut acc: BTreeMap<QDeg, Vec<Fraction<T::O>>> = BTreeMap::new();
    for (da, ca) in &ea {
        for (db, cb) in &eb {
            for (u, cu) in ca.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                for (v, cv) in cb.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    let s = cu.mul(cv);
                    for t in table.entry(u, v)? {
                        let d = add_deg(&add_deg(da, db), &t.qdeg);
                        let row = acc.entry(d).or_insert_with(|| vec![Fraction::zero(); n]);
                        row[t.w] = row[t.w].add(&s.mul(&t.coeff));
                    }
                }
            }
        }
    }
    let mut out = QuantumClass::zero(table.space());
    for (d, coeffs) in acc {
        out.put(d, basis.combine(&coeffs));
    }
    Ok(out)
}

/// `wᴸ` extended q-linearly.
pub fn weyl_left_q<T: Theory>(w: usize, a: &QuantumClass<T>) -> QuantumClass<T> {
    a.map(|c| Ok(weyl_left(w, c))).expect("Weyl action cannot fail")
}

/// Quantum `δᵢ = (id − sᵢᴸ)/αᵢ`.
pub fn quantum_delta(i: usize, a: &QuantumClass<H>) -> Result<QuantumClass<H>> {
    a.map(|c| H::left_divided(i, c, false))
}

/// Quantum `δᵢ^∨ = (id − e^{−αᵢ}sᵢᴸ)/(1 − e^{−αᵢ})`.
pub fn quantum_demazure_dual(i: usize, a: &QuantumClass<K>) -> Result<QuantumClass<K>> {
    a.map(|c| K::left_divided(i, c, true))
}

/// `δᵢ` in H, `δᵢ^∨` in K.
pub fn quantum_left_operator<T: Theory>(i: usize, a: &QuantumClass<T>) -> Result<QuantumClass<T>> {
    a.map(|c| T::left_divided(i, c, T::KIND == TheoryKind::K))
}

/// A scalar combination of commutative words in generator symbols.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalQElem<T: Theory> {
    terms: BTreeMap<Vec<String>, Fraction<T::O>>,
}

impl<T: Theory> FormalQElem<T> {
    pub fn zero() -> Self {
        FormalQElem { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(Fraction::one())
    }

    pub fn scalar(c: Fraction<T::O>) -> Self {
        Self::word(&[], c)
    }

    pub fn generator(sym: &str) -> Self {
        Self::word(&[sym], Fraction::one())
    }

    /// `c · g₁ ⋯ g_k`.
    pub fn word(syms: &[&str], c: Fraction<T::O>) -> Self {
        let mut w: Vec<String> = syms.iter().map(|s| s.to_string()).collect();
        w.sort();
        let mut out = Self::zero();
        out.put(w, c);
        out
    }

    fn put(&mut self, w: Vec<String>, c: Fraction<T::O>) {
        let next = match self.terms.get(&w) {
            Some(prev) => prev.add(&c),
            None => c,
        };
        if next.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, next);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<String>, Fraction<T::O>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.put(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&Fraction::from_int(-1))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Fraction<T::O>) -> Self {
        let mut out = Self::zero();
        for (w, x) in &self.terms {
            out.put(w.clone(), x.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend(w2.iter().cloned());
                w.sort();
                out.put(w, c1.mul(c2));
            }
        }
        out
    }
}

impl<T: Theory> fmt::Debug for FormalQElem<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c:?})")?;
            for g in w {
                write!(f, "*{g}")?;
            }
        }
        Ok(())
    }
}

/// `δᵢ(g)` (or `δᵢ^∨(g)`) and `sᵢᴸ(g)` for one generator.
#[derive(Clone, Debug)]
pub struct GeneratorFact<T: Theory> {
    pub delta: FormalQElem<T>,
    pub reflect: FormalQElem<T>,
}

/// Generator facts for every simple index.
#[derive(Clone, Debug)]
pub struct GeneratorFacts<T: Theory> {
    space: Arc<FlagSpace>,
    facts: BTreeMap<(usize, String), GeneratorFact<T>>,
}

impl<T: Theory> GeneratorFacts<T> {
    pub fn new(space: &Arc<FlagSpace>) -> Self {
        GeneratorFacts { space: space.clone(), facts: BTreeMap::new() }
    }

    pub fn insert(&mut self, i: usize, sym: &str, fact: GeneratorFact<T>) {
        self.facts.insert((i, sym.to_string()), fact);
    }

    pub fn get(&self, i: usize, sym: &str) -> Result<&GeneratorFact<T>> {
        self.facts
            .get(&(i, sym.to_string()))
            .ok_or_else(|| Error::MissingGeneratorFact(format!("{sym} under operator {}", i + 1)))
    }

    /// Facts computed from the opposite Schubert classes: each generator
    /// `(symbol, fixed point position)` stands for its class, and every
    /// image must lie in the span of 1 and the generators.
    pub fn from_schubert(space: &Arc<FlagSpace>, generators: &[(&str, usize)]) -> Result<Self> {
        let basis = SchubertBasis::<T>::new(space, Side::BMinus)?;
        let g = space.group();
        let formal = |c: &LocalizedClass<T>| -> Result<FormalQElem<T>> {
            let mut out = FormalQElem::zero();
            for (p, x) in basis.expand(c)?.into_iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                if p == 0 {
                    out = out.add(&FormalQElem::scalar(x));
                    continue;
                }
                let Some((sym, _)) = generators.iter().find(|(_, q)| *q == p) else {
                    return Err(Error::MissingGeneratorFact(schubert_label::<T>(space, Side::BMinus, p)));
                };
                out = out.add(&FormalQElem::word(&[sym], x));
            }
            Ok(out)
        };
        let mut facts = Self::new(space);
        for i in 0..space.rank() {
            for &(sym, p) in generators {
                let class = basis.class(p);
                let delta = formal(&T::left_divided(i, class, T::KIND == TheoryKind::K)?)?;
                let reflect = formal(&weyl_left(g.simple(i), class))?;
                facts.insert(i, sym, GeneratorFact { delta, reflect });
            }
        }
        Ok(facts)
    }
}

/// Applies `δᵢ` (H) or `δᵢ^∨` (K) to a formal element. Products expand by
/// the Leibniz rule (three terms in K) and a scalar `λ` contributes its own
/// divided difference `(λ − sᵢλ)/αᵢ` or `(λ − sᵢλ)/(1 − e^{−αᵢ})`.
pub fn formal_leibniz_eval<T: Theory>(i: usize, x: &FormalQElem<T>, facts: &GeneratorFacts<T>) -> Result<FormalQElem<T>> {
    let g = facts.space.group();
    if i >= g.rank() {
        return Err(Error::IndexOutOfRange(i));
    }
    let s = g.simple(i);
    let alpha = g.rs.simple_root(i);
    let den: Fraction<T::O> = T::factor(&alpha).into();
    // e^{−αᵢ} = 1 − (1 − e^{−αᵢ}); unused in H.
    let twist: Fraction<T::O> = Fraction::one().sub(&den);

    let reflect_word = |w: &[String]| -> Result<FormalQElem<T>> {
        w.iter().try_fold(FormalQElem::one(), |acc, sym| Ok(acc.mul(&facts.get(i, sym)?.reflect)))
    };
    fn apply<T: Theory>(
        w: &[String],
        i: usize,
        facts: &GeneratorFacts<T>,
        twist: &Fraction<T::O>,
        reflect_word: &dyn Fn(&[String]) -> Result<FormalQElem<T>>,
    ) -> Result<FormalQElem<T>> {
        let Some((first, rest)) = w.split_first() else {
            return Ok(match T::KIND {
                TheoryKind::H => FormalQElem::zero(),
                TheoryKind::K => FormalQElem::one(),
            });
        };
        let fact = facts.get(i, first)?;
        let rest_syms: Vec<&str> = rest.iter().map(String::as_str).collect();
        let b = FormalQElem::word(&rest_syms, Fraction::one());
        let db = apply(rest, i, facts, twist, reflect_word)?;
        let mut out = fact.delta.mul(&b);
        match T::KIND {
            TheoryKind::H => out = out.add(&fact.reflect.mul(&db)),
            TheoryKind::K => {
                let sa = fact.reflect.scale(twist);
                out = out.add(&sa.mul(&db)).sub(&sa.mul(&reflect_word(rest)?));
            }
        }
        Ok(out)
    }

    let mut out = FormalQElem::zero();
    for (w, lambda) in x.terms() {
        let slam = T::apply_fraction(g, s, lambda);
        let dlam = lambda.sub(&slam).div(&den)?;
        let syms: Vec<&str> = w.iter().map(String::as_str).collect();
        out = out.add(&FormalQElem::word(&syms, dlam));
        out = out.add(&apply(w, i, facts, &twist, &reflect_word)?.scale(&slam));
    }
    Ok(out)
}

/// Gr(2,4) as the partial flag space of A3.
pub fn gr24() -> Result<Arc<FlagSpace>> {
    FlagSpace::new("A3", &[0, 2])
}

fn position_of_word(space: &FlagSpace, word: &[usize]) -> Result<usize> {
    let w = space.group().eval_word(word)?;
    space.position(w).ok_or_else(|| Error::NotMinimalRepresentative(space.group().label(w)))
}

/// Fixed point positions of s₂W_P (σ₁, 𝒪₁) and s₁s₂W_P (σ₁,₁, 𝒪₁,₁) on Gr(2,4).
pub fn gr24_generators(space: &FlagSpace) -> Result<(usize, usize)> {
    Ok((position_of_word(space, &[1])?, position_of_word(space, &[0, 1])?))
}

/// The Gr(2,4) products needed by the point relations and closed under the
/// Leibniz rule: σ₁⋆σ₁, σ₁⋆σ₁,₁, σ₁,₁⋆σ₁,₁.
pub fn gr24_fixture_pairs(space: &FlagSpace) -> Result<Vec<(usize, usize)>> {
    let (a, b) = gr24_generators(space)?;
    Ok(vec![(a, a), (a, b), (b, b)])
}

fn lat(v: &[i32]) -> Lattice {
    let mut out = [0; crate::root_system::MAX_RANK];
    out[..v.len()].copy_from_slice(v);
    out
}

/// The paper's two symbolic derivations on Gr(2,4), with generator facts
/// taken from the classical modules.
pub fn verify_quantum_formal() -> Result<VerificationReport> {
    let space = gr24()?;
    let (p1, p11) = gr24_generators(&space)?;
    let mut rep = VerificationReport::new("quantum formal Gr(2,4)");

    let hf = GeneratorFacts::<H>::from_schubert(&space, &[("s1", p1), ("s11", p11)])?;
    let one = FormalQElem::<H>::one();
    let s1 = FormalQElem::<H>::generator("s1");
    let s11 = FormalQElem::<H>::generator("s11");
    let zero = FormalQElem::<H>::zero();
    let expect = [
        (1, "s1", &one, "d2(s1) = 1"),
        (0, "s11", &s1, "d1(s11) = s1"),
        (0, "s1", &zero, "d1(s1) = 0"),
        (2, "s1", &zero, "d3(s1) = 0"),
        (1, "s11", &zero, "d2(s11) = 0"),
        (2, "s11", &zero, "d3(s11) = 0"),
    ];
    for (i, sym, want, name) in expect {
        let got = hf.get(i, sym).map(|f| f.delta.clone());
        rep.record_result(&format!("H fact {name}"), got.as_ref().map(|g| g == want).map_err(Clone::clone), || {
            format!("got {got:?}")
        });
    }
    let alpha = |v: &[i32]| -> Fraction<crate::algebra::GrLex> { root_form(&lat(v)).into() };
    let point = FormalQElem::<H>::word(&["s11", "s11"], Fraction::one())
        .sub(&FormalQElem::word(&["s1", "s11"], alpha(&[1])));
    let want = FormalQElem::<H>::word(&["s1", "s11"], Fraction::one()).sub(&s11.scale(&alpha(&[1, 1])));
    let got = formal_leibniz_eval(1, &point, &hf);
    rep.record_result("H: d2(s11*s11 - a1 s1*s11) = s1*s11 - (a1+a2) s11", got.as_ref().map(|g| *g == want).map_err(Clone::clone), || {
        format!("got {got:?}")
    });

    let kf = GeneratorFacts::<K>::from_schubert(&space, &[("O1", p1), ("O11", p11)])?;
    // T_i = e^{−α_i}, so T_i⁻¹ = e^{α_i}.
    let e = |v: &[i32]| -> Fraction<crate::algebra::LatticeLex> { crate::theory::character(&lat(v)).into() };
    let t2inv = e(&[0, 1]);
    let o1 = FormalQElem::<K>::generator("O1");
    let o11 = FormalQElem::<K>::generator("O11");
    let kone = FormalQElem::<K>::one();
    let kexpect = [
        ("d2(O11) = O11", kf.get(1, "O11").map(|f| f.delta == o11)),
        ("s2(O11) = O11", kf.get(1, "O11").map(|f| f.reflect == o11)),
        ("d2(O1) = 1", kf.get(1, "O1").map(|f| f.delta == kone)),
        (
            "s2(O1) = T2^-1 O1 + 1 - T2^-1",
            kf.get(1, "O1").map(|f| f.reflect == o1.scale(&t2inv).add(&FormalQElem::scalar(Fraction::one().sub(&t2inv)))),
        ),
    ];
    for (name, r) in kexpect {
        rep.record_result(&format!("K fact {name}"), r, || "generator fact differs".into());
    }
    let t1inv = e(&[1]);
    let t12inv = e(&[1, 1]);
    let first = FormalQElem::<K>::word(&["O11", "O11"], t1inv.clone());
    let got = formal_leibniz_eval(1, &first, &kf);
    rep.record_result("K: d2(T1^-1 O11*O11) = 0", got.as_ref().map(|g| g.is_zero()).map_err(Clone::clone), || {
        format!("got {got:?}")
    });
    let second = FormalQElem::<K>::word(&["O1", "O11"], Fraction::one().sub(&t1inv));
    let want = FormalQElem::<K>::word(&["O1", "O11"], t12inv.clone()).add(&o11.scale(&Fraction::one().sub(&t12inv)));
    let got = formal_leibniz_eval(1, &second, &kf);
    rep.record_result(
        "K: d2((1 - T1^-1) O1*O11) = (T1T2)^-1 O1*O11 + (1 - (T1T2)^-1) O11",
        got.as_ref().map(|g| *g == want).map_err(Clone::clone),
        || format!("got {got:?}"),
    );
    Ok(rep)
}

fn leibniz_rhs<T: Theory>(
    table: &StructureTable<T>,
    i: usize,
    a: &QuantumClass<T>,
    b: &QuantumClass<T>,
) -> Result<QuantumClass<T>> {
    let g = table.space().group();
    let s = g.simple(i);
    let da = quantum_left_operator(i, a)?;
    let db = quantum_left_operator(i, b)?;
    let sa = weyl_left_q(s, a);
    let first = q_multiply(table, &da, b)?;
    match T::KIND {
        TheoryKind::H => Ok(first.add(&q_multiply(table, &sa, &db)?)),
        TheoryKind::K => {
            let twist: Fraction<T::O> = Fraction::one().sub(&T::factor(&g.rs.simple_root(i)).into());
            let sb = weyl_left_q(s, b);
            let extra = q_multiply(table, &sa, &db)?.sub(&q_multiply(table, &sa, &sb)?);
            Ok(first.add(&extra.scale(&twist)))
        }
    }
}

/// Table-mode checks: the Leibniz rule and the Weyl automorphism on every
/// supplied pair, plus the Gr(2,4) point relations when they apply.
pub fn verify_quantum_table<T: Theory>(table: &StructureTable<T>) -> Result<VerificationReport> {
    let space = table.space().clone();
    let g = space.group();
    let basis = table.basis();
    let mut rep = VerificationReport::new(format!("quantum table {} {}", T::KIND, space.name()));
    let qc = |p: usize| QuantumClass::classical(basis.class(p).clone());
    let pairs: Vec<(usize, usize)> = table.entries().flat_map(|(u, v, _)| [(u, v), (v, u)]).collect();
    for &(u, v) in &pairs {
        let (a, b) = (qc(u), qc(v));
        let label = || format!("({}, {})", space.point_label(u), space.point_label(v));
        for i in 0..space.rank() {
            let ok = q_multiply(table, &a, &b)
                .and_then(|ab| quantum_left_operator(i, &ab))
                .and_then(|lhs| Ok(lhs == leibniz_rhs(table, i, &a, &b)?));
            rep.record_result("Leibniz rule", ok, || format!("{} operator {}", label(), i + 1));
            let s = g.simple(i);
            let ok = q_multiply(table, &a, &b).and_then(|ab| {
                Ok(weyl_left_q(s, &ab) == q_multiply(table, &weyl_left_q(s, &a), &weyl_left_q(s, &b))?)
            });
            rep.record_result("s_i^L is a ring automorphism", ok, || format!("{} s{}", label(), i + 1));
        }
    }
    if *space == *gr24()? {
        gr24_point_relations(table, &mut rep)?;
    }
    Ok(rep)
}

fn gr24_point_relations<T: Theory>(table: &StructureTable<T>, rep: &mut VerificationReport) -> Result<()> {
    let space = table.space();
    let basis = table.basis();
    let (p1, p11) = gr24_generators(space)?;
    let point = position_of_word(space, &[1, 0, 2, 1])?;
    let below = position_of_word(space, &[0, 2, 1])?;
    let qc = |p: usize| QuantumClass::classical(basis.class(p).clone());
    let f = |v: &[i32]| -> Fraction<T::O> { T::factor(&lat(v)).into() };
    // H: σ₁,₁⋆σ₁,₁ − α₁σ₁⋆σ₁,₁. K: e^{α₁}𝒪₁,₁∘𝒪₁,₁ + (1 − e^{α₁})𝒪₁∘𝒪₁,₁,
    // where 1 − e^{λ} is the K factor of −λ.
    let (c11, c1, d1, d11) = match T::KIND {
        TheoryKind::H => (Fraction::one(), f(&[1]).neg(), Fraction::one(), f(&[1, 1]).neg()),
        TheoryKind::K => {
            let a = f(&negate(&lat(&[1])));
            let b = f(&negate(&lat(&[1, 1])));
            (Fraction::one().sub(&a), a, Fraction::one().sub(&b), b)
        }
    };
    let sq = q_multiply(table, &qc(p11), &qc(p11))?;
    let mixed = q_multiply(table, &qc(p1), &qc(p11))?;
    let lhs = sq.scale(&c11).add(&mixed.scale(&c1));
    rep.record("point class from the two products", lhs == qc(point), || format!("got {lhs:?}"));
    let image = quantum_left_operator(1, &lhs)?;
    rep.record("operator 2 on the point class is X^{s1s3s2}", image == qc(below), || format!("got {image:?}"));
    let printed = mixed.scale(&d1).add(&qc(p11).scale(&d11));
    rep.record("operator 2 on the point class, printed form", image == printed, || format!("got {image:?}"));
    Ok(())
}

fn degrees_up_to(arity: usize, total: u32) -> Vec<QDeg> {
    let mut out = vec![vec![]];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|d: QDeg| {
                let used: u32 = d.iter().sum();
                (0..=total - used).map(move |k| {
                    let mut e = d.clone();
                    e.push(k);
                    e
                })
            })
            .collect();
    }
    out
}

/// Operator checks over the Schubert basis ⊗ {|d| ≤ 2}: agreement with the
/// classical operators at q⁰, the action on Schubert classes, the
/// quadratic and braid relations, and the value on q^d·1.
pub fn verify_quantum_operators<T: Theory>(space: &Arc<FlagSpace>) -> Result<VerificationReport> {
    let g = space.group();
    let basis = SchubertBasis::<T>::new(space, Side::BMinus)?;
    let arity = q_indices(space).len();
    let mut rep = VerificationReport::new(format!("quantum operators {} {}", T::KIND, space.name()));
    let dual = T::KIND == TheoryKind::K;
    let r = space.rank();
    for d in degrees_up_to(arity, 2) {
        let one = QuantumClass::<T>::monomial(d.clone(), LocalizedClass::one(space))?;
        for i in 0..r {
            let got = quantum_left_operator(i, &one)?;
            let want = if dual { one.clone() } else { QuantumClass::zero(space) };
            rep.record("operator on q^d", got == want, || format!("q^{d:?} operator {}", i + 1));
        }
        for p in 0..space.npoints() {
            let a = QuantumClass::monomial(d.clone(), basis.class(p).clone())?;
            let label = || format!("q^{d:?} {}", schubert_label::<T>(space, Side::BMinus, p));
            for i in 0..r {
                let qa = quantum_left_operator(i, &a)?;
                if is_classical(&d) {
                    let classical = T::left_divided(i, basis.class(p), dual)?;
                    rep.record("q^0 agrees with the classical operator", qa.classical_part() == classical, label);
                    let s = g.simple(i);
                    rep.record("q^0 agrees with the classical Weyl action", weyl_left_q(s, &a).classical_part() == weyl_left(s, basis.class(p)), label);
                }
                let w = space.point(p);
                let sw = g.left_mul(i, w);
                let target = if g.length(sw) < g.length(w) {
                    space.position(sw).expect("descent stays in W^P")
                } else if dual {
                    p
                } else {
                    usize::MAX
                };
                let want = if target == usize::MAX {
                    QuantumClass::zero(space)
                } else {
                    QuantumClass::monomial(d.clone(), basis.class(target).clone())?
                };
                rep.record("action on Schubert classes", qa == want, || format!("{} operator {}", label(), i + 1));
                let qqa = quantum_left_operator(i, &qa)?;
                let quad = if dual { qqa == qa } else { qqa.is_zero() };
                rep.record("quadratic relation", quad, || format!("{} operator {}", label(), i + 1));
                for j in i + 1..r {
                    let (wi, wj) = alternating_words(g, i, j);
                    let run = |word: &[usize]| {
                        word.iter().rev().try_fold(a.clone(), |acc, &k| quantum_left_operator(k, &acc))
                    };
                    let ok = run(&wi).and_then(|x| Ok(x == run(&wj)?));
                    rep.record_result("braid relation", ok, || format!("{} operators {} {}", label(), i + 1, j + 1));
                }
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;

    #[test]
    fn gr24_quantum_degree_is_four() {
        assert_eq!(q_degrees(&gr24().unwrap()).unwrap(), vec![4]);
        let p1 = FlagSpace::new("A1", &[]).unwrap();
        assert_eq!(q_degrees(&p1).unwrap(), vec![2]);
        let a2 = FlagSpace::full_flag("A2").unwrap();
        assert_eq!(q_degrees(&a2).unwrap(), vec![2, 2]);
    }

    #[test]
    fn formal_examples_reproduce() {
        let rep = verify_quantum_formal().unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn reading_t_as_positive_character_breaks_the_k_example() {
        let space = gr24().unwrap();
        let (p1, p11) = gr24_generators(&space).unwrap();
        let kf = GeneratorFacts::<K>::from_schubert(&space, &[("O1", p1), ("O11", p11)]).unwrap();
        // With T₁ = e^{α₁}, T₁⁻¹ = e^{−α₁}.
        let t1inv: Fraction<crate::algebra::LatticeLex> = crate::theory::character(&lat(&[-1])).into();
        let x = FormalQElem::<K>::word(&["O11", "O11"], t1inv);
        assert!(!formal_leibniz_eval(1, &x, &kf).unwrap().is_zero());
    }

    #[test]
    fn fixture_tables_pass() {
        let space = gr24().unwrap();
        let pairs = gr24_fixture_pairs(&space).unwrap();
        let th = StructureTable::<H>::classical(&space, &pairs).unwrap();
        let rep = verify_quantum_table(&th).unwrap();
        assert!(rep.passed(), "{rep}");
        let tk = StructureTable::<K>::classical(&space, &pairs).unwrap();
        let rep = verify_quantum_table(&tk).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn operators_suite_on_gr24() {
        let space = gr24().unwrap();
        assert!(verify_quantum_operators::<H>(&space).unwrap().passed());
        assert!(verify_quantum_operators::<K>(&space).unwrap().passed());
    }

    #[test]
    fn a1_classical_table() {
        let space = FlagSpace::full_flag("A1").unwrap();
        // [X^s]² = α₁[X^s] on ℙ¹.
        let alpha: Fraction<crate::algebra::GrLex> = root_form(&lat(&[1])).into();
        let good = vec![(1, 1, vec![TableTerm::<H> { w: 1, qdeg: vec![0], coeff: alpha.clone() }])];
        assert!(StructureTable::new(&space, 1, good).is_ok());
        let wrong = vec![(1, 1, vec![TableTerm::<H> { w: 1, qdeg: vec![0], coeff: alpha.neg() }])];
        assert!(matches!(StructureTable::new(&space, 1, wrong), Err(Error::InvalidTable { .. })));
        // The small quantum term q·[X^id] has the right degree.
        let quantum = vec![(
            1,
            1,
            vec![
                TableTerm::<H> { w: 1, qdeg: vec![0], coeff: alpha.clone() },
                TableTerm::<H> { w: 0, qdeg: vec![1], coeff: Fraction::one() },
            ],
        )];
        assert!(StructureTable::new(&space, 1, quantum).is_ok());
        let off_degree = vec![(
            1,
            1,
            vec![
                TableTerm::<H> { w: 1, qdeg: vec![0], coeff: alpha.clone() },
                TableTerm::<H> { w: 1, qdeg: vec![1], coeff: Fraction::one() },
            ],
        )];
        assert!(StructureTable::new(&space, 1, off_degree).is_err());
        let bad_unit = vec![(0, 1, vec![TableTerm::<H> { w: 1, qdeg: vec![0], coeff: Fraction::from_int(2) }])];
        assert!(StructureTable::new(&space, 1, bad_unit).is_err());
        assert!(matches!(StructureTable::<H>::new(&space, 2, vec![]), Err(Error::QDegreeArity { .. })));
    }

    #[test]
    fn missing_entries_are_reported() {
        let space = gr24().unwrap();
        let table = StructureTable::<H>::new(&space, 1, vec![]).unwrap();
        let basis = table.basis();
        let a = QuantumClass::classical(basis.class(1).clone());
        assert!(matches!(q_multiply(&table, &a, &a), Err(Error::MissingTableEntry(..))));
        let one = QuantumClass::classical(basis.class(0).clone());
        assert_eq!(q_multiply(&table, &one, &a).unwrap(), a);
    }

    #[test]
    fn q_shift_and_delta_commute() {
        let space = gr24().unwrap();
        let basis = SchubertBasis::<H>::new(&space, Side::BMinus).unwrap();
        let a = QuantumClass::classical(basis.class(3).clone()).add(
            &QuantumClass::monomial(vec![1], basis.class(2).clone()).unwrap().scale(&Fraction::constant(Rational::new(1, 2))),
        );
        for i in 0..3 {
            let lhs = quantum_delta(i, &a.shift(&[2])).unwrap();
            let rhs = quantum_delta(i, &a).unwrap().shift(&[2]);
            assert_eq!(lhs, rhs);
        }
    }
}

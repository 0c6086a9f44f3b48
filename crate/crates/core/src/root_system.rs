//! Root systems, Weyl groups and parabolic coset combinatorics.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * `cartan[i][j] = ⟨α_j, α_i^∨⟩`, so `s_i(λ) = λ − (Σ_j λ_j cartan[i][j]) α_i`
//!   for `λ` written in the simple-root basis.
//! * `B_n`: `α_n` is short. `C_n`: `α_n` is long. `G2`: `α_1` is short.
//!   `D4`: the central node is `α_2`.
//! * Simple indices are 0-based internally and printed 1-based (`s1s2`).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub const MAX_RANK: usize = 4;

/// A vector in the root lattice, in simple-root coordinates.
pub type Lattice = [i32; MAX_RANK];

/// Matrix of a Weyl element: column `j` holds `w(α_j)`. Unused coordinates
/// are padded with the identity.
pub type Mat = [[i32; MAX_RANK]; MAX_RANK];

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    G,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeLabel {
    pub series: Series,
    pub rank: usize,
}

impl TypeLabel {
    pub fn new(series: char, rank: usize) -> Result<Self> {
        let bad = || Error::UnknownType(format!("{series}{rank}"));
        let series = match series.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'G' => Series::G,
            _ => return Err(bad()),
        };
        let ok = match series {
            Series::A => (1..=4).contains(&rank),
            Series::B | Series::C => (2..=4).contains(&rank),
            Series::D => rank == 4,
            Series::G => rank == 2,
        };
        if !ok {
            return Err(bad());
        }
        Ok(TypeLabel { series, rank })
    }

    pub fn series_char(&self) -> char {
        match self.series {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::G => 'G',
        }
    }
}

impl core::str::FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.trim().chars();
        let c = chars.next().ok_or_else(|| Error::UnknownType(s.into()))?;
        let rank: usize = chars.as_str().parse().map_err(|_| Error::UnknownType(s.into()))?;
        TypeLabel::new(c, rank)
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series_char(), self.rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    pub label: TypeLabel,
    pub rank: usize,
    pub cartan: Vec<Vec<i32>>,
    /// Sorted by height; within a height, α₁-heavy roots first.
    pub positive_roots: Vec<Lattice>,
}

fn cartan_matrix(label: TypeLabel) -> Vec<Vec<i32>> {
    let n = label.rank;
    let mut c = vec![vec![0; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, cij: i32, cji: i32| {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    match label.series {
        Series::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Series::B => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -1, -2);
        }
        Series::C => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -2, -1);
        }
        Series::D => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -1);
            link(1, 3, -1, -1);
        }
        Series::G => link(0, 1, -3, -1),
    }
    c
}

/// Builds the root datum for a label such as `A3`, `B2` or `G2`.
pub fn build_root_system(label: &str) -> Result<RootDatum> {
    Ok(RootDatum::new(label.parse()?))
}

impl RootDatum {
    pub fn new(label: TypeLabel) -> Self {
        let cartan = cartan_matrix(label);
        let rank = label.rank;
        let mut rs = RootDatum { label, rank, cartan, positive_roots: Vec::new() };
        let mut seen: BTreeSet<Lattice> = BTreeSet::new();
        let mut queue: Vec<Lattice> = (0..rank).map(|i| rs.simple_root(i)).collect();
        seen.extend(queue.iter().copied());
        while let Some(beta) = queue.pop() {
            for i in 0..rank {
                let img = rs.reflect(i, &beta);
                if img.iter().all(|&x| x >= 0) && seen.insert(img) {
                    queue.push(img);
                }
            }
        }
        let mut roots: Vec<Lattice> = seen.into_iter().collect();
        roots.sort_by(|a, b| height(a).cmp(&height(b)).then(b.cmp(a)));
        rs.positive_roots = roots;
        rs
    }

    pub fn simple_root(&self, i: usize) -> Lattice {
        let mut v = [0; MAX_RANK];
        v[i] = 1;
        v
    }

    /// `⟨λ, α_i^∨⟩`.
    pub fn pairing(&self, lambda: &Lattice, i: usize) -> i32 {
        (0..self.rank).map(|j| lambda[j] * self.cartan[i][j]).sum()
    }

    pub fn reflect(&self, i: usize, lambda: &Lattice) -> Lattice {
        let mut out = *lambda;
        out[i] -= self.pairing(lambda, i);
        out
    }

    pub fn simple_reflection_matrix(&self, i: usize) -> Mat {
        let mut m = identity();
        for j in 0..self.rank {
            m[i][j] -= self.cartan[i][j];
        }
        m
    }

    pub fn is_positive(&self, lambda: &Lattice) -> bool {
        lambda.iter().any(|&x| x != 0) && lambda.iter().all(|&x| x >= 0)
    }

    pub fn root_index(&self, beta: &Lattice) -> Option<usize> {
        self.positive_roots.iter().position(|r| r == beta)
    }

    /// Number of positive roots expected for the type.
    pub fn classical_root_count(label: TypeLabel) -> usize {
        let n = label.rank;
        match label.series {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
            Series::G => 6,
        }
    }
}

pub fn height(beta: &Lattice) -> i32 {
    beta.iter().sum()
}

pub fn identity() -> Mat {
    let mut m = [[0; MAX_RANK]; MAX_RANK];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let mut m = [[0; MAX_RANK]; MAX_RANK];
    for i in 0..MAX_RANK {
        for j in 0..MAX_RANK {
            m[i][j] = (0..MAX_RANK).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    m
}

pub fn mat_apply(a: &Mat, v: &Lattice) -> Lattice {
    let mut out = [0; MAX_RANK];
    for (i, o) in out.iter_mut().enumerate() {
        *o = (0..MAX_RANK).map(|k| a[i][k] * v[k]).sum();
    }
    out
}

pub fn negate(v: &Lattice) -> Lattice {
    v.map(|x| -x)
}

/// A Weyl group element: its matrix plus the lexicographically least
/// reduced word. Equality, ordering and hashing use the matrix only.
#[derive(Clone)]
pub struct WeylElement {
    mat: Mat,
    word: Vec<usize>,
}

impl WeylElement {
    pub fn matrix(&self) -> &Mat {
        &self.mat
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn act(&self, lambda: &Lattice) -> Lattice {
        mat_apply(&self.mat, lambda)
    }

    /// `s1s2s1` style label, `id` for the identity.
    pub fn label(&self) -> String {
        word_label(&self.word)
    }
}

pub fn word_label(word: &[usize]) -> String {
    if word.is_empty() {
        return "id".into();
    }
    let mut s = String::new();
    for i in word {
        s.push_str(&format!("s{}", i + 1));
    }
    s
}

/// Parses `id`, `e`, `s1s2s1` or `1,2,1` (1-based) into a 0-based word.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    if t.is_empty() || t == "id" || t == "e" {
        return Ok(Vec::new());
    }
    let bad = || Error::Parse(format!("invalid word {s:?}"));
    let parts: Vec<&str> = if t.contains(',') {
        t.split(',').map(str::trim).collect()
    } else {
        t.split('s').filter(|p| !p.is_empty()).collect()
    };
    if !t.contains(',') && !t.starts_with('s') {
        return Err(bad());
    }
    parts
        .into_iter()
        .map(|p| p.parse::<usize>().ok().filter(|&i| i >= 1).map(|i| i - 1).ok_or_else(bad))
        .collect()
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl Eq for WeylElement {}

impl core::hash::Hash for WeylElement {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.mat.hash(state)
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// The finite Weyl group with all tables precomputed. Elements are indexed
/// by position in the (length, canonical word) order; index 0 is the identity.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub rs: RootDatum,
    elements: Vec<WeylElement>,
    index: BTreeMap<Mat, usize>,
    right: Vec<Vec<usize>>,
    left: Vec<Vec<usize>>,
    inverse: Vec<usize>,
    bruhat: Vec<Vec<bool>>,
    /// For each positive root β, the index of the reflection s_β.
    reflections: Vec<usize>,
    longest: usize,
}

impl WeylGroup {
    pub fn new(rs: RootDatum) -> Self {
        let r = rs.rank;
        let gens: Vec<Mat> = (0..r).map(|i| rs.simple_reflection_matrix(i)).collect();
        let mut words: BTreeMap<Mat, Vec<usize>> = BTreeMap::new();
        words.insert(identity(), Vec::new());
        let mut level: Vec<Mat> = vec![identity()];
        while !level.is_empty() {
            let mut next: BTreeMap<Mat, Vec<usize>> = BTreeMap::new();
            for m in &level {
                let w = words[m].clone();
                for (i, g) in gens.iter().enumerate() {
                    let x = mat_mul(m, g);
                    if words.contains_key(&x) {
                        continue;
                    }
                    let mut cand = w.clone();
                    cand.push(i);
                    next.entry(x)
                        .and_modify(|cur| {
                            if cand < *cur {
                                *cur = cand.clone();
                            }
                        })
                        .or_insert(cand);
                }
            }
            level = next.keys().copied().collect();
            words.extend(next);
        }
        let mut elements: Vec<WeylElement> =
            words.into_iter().map(|(mat, word)| WeylElement { mat, word }).collect();
        elements.sort_by(|a, b| (a.word.len(), &a.word).cmp(&(b.word.len(), &b.word)));
        let index: BTreeMap<Mat, usize> =
            elements.iter().enumerate().map(|(k, e)| (e.mat, k)).collect();
        let n = elements.len();
        let right: Vec<Vec<usize>> = (0..r)
            .map(|i| elements.iter().map(|e| index[&mat_mul(&e.mat, &gens[i])]).collect())
            .collect();
        let left: Vec<Vec<usize>> = (0..r)
            .map(|i| elements.iter().map(|e| index[&mat_mul(&gens[i], &e.mat)]).collect())
            .collect();
        let mut inverse = vec![0; n];
        for (k, e) in elements.iter().enumerate() {
            // w⁻¹ has the reversed word.
            let mut m = identity();
            for &i in e.word.iter().rev() {
                m = mat_mul(&m, &gens[i]);
            }
            inverse[k] = index[&m];
        }
        let longest = n - 1;
        let mut g = WeylGroup {
            rs,
            elements,
            index,
            right,
            left,
            inverse,
            bruhat: Vec::new(),
            reflections: Vec::new(),
            longest,
        };
        g.bruhat = g.compute_bruhat();
        g.reflections = g.compute_reflections();
        g
    }

    /// Lifting property: for `vs < v`, `u ≤ v` iff (`us < u` ? `us ≤ vs` : `u ≤ vs`).
    fn compute_bruhat(&self) -> Vec<Vec<bool>> {
        let n = self.elements.len();
        let mut le = vec![vec![false; n]; n];
        le[0][0] = true;
        for v in 1..n {
            let s = *self.elements[v].word.last().expect("non-identity");
            let vs = self.right[s][v];
            for u in 0..n {
                let us = self.right[s][u];
                le[u][v] = if self.length(us) < self.length(u) { le[us][vs] } else { le[u][vs] };
            }
        }
        le
    }

    fn compute_reflections(&self) -> Vec<usize> {
        let rs = &self.rs;
        rs.positive_roots
            .iter()
            .map(|beta| {
                for (k, e) in self.elements.iter().enumerate() {
                    for i in 0..rs.rank {
                        if e.act(&rs.simple_root(i)) == *beta {
                            return self.mul(self.mul(k, self.simple(i)), self.inverse[k]);
                        }
                    }
                }
                unreachable!("every root is conjugate to a simple root")
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &WeylElement {
        &self.elements[k]
    }

    pub fn index_of(&self, w: &WeylElement) -> usize {
        self.index[&w.mat]
    }

    pub fn index_of_matrix(&self, m: &Mat) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn longest(&self) -> usize {
        self.longest
    }

    pub fn length(&self, k: usize) -> usize {
        self.elements[k].word.len()
    }

    pub fn simple(&self, i: usize) -> usize {
        self.left[i][0]
    }

    pub fn word(&self, k: usize) -> &[usize] {
        &self.elements[k].word
    }

    pub fn label(&self, k: usize) -> String {
        self.elements[k].label()
    }

    pub fn mat(&self, k: usize) -> &Mat {
        &self.elements[k].mat
    }

    /// Index of `w·s_i`.
    pub fn right_mul(&self, k: usize, i: usize) -> usize {
        self.right[i][k]
    }

    /// Index of `s_i·w`.
    pub fn left_mul(&self, i: usize, k: usize) -> usize {
        self.left[i][k]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&mat_mul(&self.elements[a].mat, &self.elements[b].mat)]
    }

    pub fn inverse(&self, k: usize) -> usize {
        self.inverse[k]
    }

    pub fn bruhat_leq(&self, u: usize, v: usize) -> bool {
        self.bruhat[u][v]
    }

    pub fn reflection(&self, root_index: usize) -> usize {
        self.reflections[root_index]
    }

    pub fn act(&self, k: usize, lambda: &Lattice) -> Lattice {
        self.elements[k].act(lambda)
    }

    /// Evaluates a word (any word, reduced or not) to an element index.
    pub fn eval_word(&self, word: &[usize]) -> Result<usize> {
        let mut k = 0;
        for &i in word {
            if i >= self.rank() {
                return Err(Error::IndexOutOfRange(i));
            }
            k = self.right[i][k];
        }
        Ok(k)
    }

    pub fn is_reduced(&self, word: &[usize]) -> Result<bool> {
        Ok(self.length(self.eval_word(word)?) == word.len())
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversion_count(&self, k: usize) -> usize {
        self.rs
            .positive_roots
            .iter()
            .filter(|b| !self.rs.is_positive(&self.act(k, b)))
            .count()
    }

    /// All reduced words of an element.
    pub fn reduced_words(&self, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for i in 0..self.rank() {
            let ks = self.right[i][k];
            if self.length(ks) < self.length(k) {
                for mut w in self.reduced_words(ks) {
                    w.push(i);
                    out.push(w);
                }
            }
        }
        out
    }

    pub fn has_right_descent(&self, k: usize, i: usize) -> bool {
        self.length(self.right[i][k]) < self.length(k)
    }

    pub fn has_left_descent(&self, i: usize, k: usize) -> bool {
        self.length(self.left[i][k]) < self.length(k)
    }
}

/// Lists all elements of the Weyl group, in (length, word) order.
pub fn weyl_elements(rs: &RootDatum) -> Vec<WeylElement> {
    WeylGroup::new(rs.clone()).elements
}

pub fn act_on_weight(w: &WeylElement, lambda: &Lattice) -> Lattice {
    w.act(lambda)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Trichotomy {
    /// `s_i w < w`; then `s_i w ∈ W^P`.
    Lower,
    /// `s_i w > w` and `s_i w ∈ W^P`.
    UpMinimal,
    /// `s_i w > w`, `s_i w ∉ W^P` and `s_i w = w s_j` with `s_j ∈ W_P`.
    UpFolds(usize),
}

/// A parabolic subgroup `W_P` given by a set of simple indices, with coset data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parabolic {
    simple: Vec<usize>,
    in_p: Vec<bool>,
    /// Indices of W_P.
    levi: Vec<usize>,
    /// Indices of W^P in (length, word) order.
    min_reps: Vec<usize>,
    /// Position in `min_reps` for minimal representatives.
    rep_pos: Vec<Option<usize>>,
    /// Minimal representative of the coset of every element.
    coset: Vec<usize>,
    /// Positive roots (indices) in the span of the simple roots of P.
    levi_roots: Vec<usize>,
    /// The complement R⁺ \ R⁺_P.
    tangent_roots: Vec<usize>,
}

impl Parabolic {
    /// `simple` holds 0-based simple indices.
    pub fn new(w: &WeylGroup, simple: &[usize]) -> Result<Self> {
        let r = w.rank();
        let mut in_p = vec![false; r];
        for &i in simple {
            if i >= r {
                return Err(Error::IndexOutOfRange(i));
            }
            in_p[i] = true;
        }
        let simple: Vec<usize> = (0..r).filter(|&i| in_p[i]).collect();
        let n = w.order();
        let levi: Vec<usize> =
            (0..n).filter(|&k| w.word(k).iter().all(|&i| in_p[i])).collect();
        let min_reps: Vec<usize> =
            (0..n).filter(|&k| simple.iter().all(|&j| !w.has_right_descent(k, j))).collect();
        let mut rep_pos = vec![None; n];
        for (p, &k) in min_reps.iter().enumerate() {
            rep_pos[k] = Some(p);
        }
        let coset = (0..n)
            .map(|k| {
                let mut k = k;
                'outer: loop {
                    for &j in &simple {
                        if w.has_right_descent(k, j) {
                            k = w.right_mul(k, j);
                            continue 'outer;
                        }
                    }
                    break k;
                }
            })
            .collect();
        let (levi_roots, tangent_roots): (Vec<usize>, Vec<usize>) = (0..w.rs.positive_roots.len())
            .partition(|&b| {
                let beta = &w.rs.positive_roots[b];
                (0..r).all(|i| beta[i] == 0 || in_p[i])
            });
        Ok(Parabolic { simple, in_p, levi, min_reps, rep_pos, coset, levi_roots, tangent_roots })
    }

    pub fn borel(w: &WeylGroup) -> Self {
        Self::new(w, &[]).expect("empty subset")
    }

    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn contains_simple(&self, i: usize) -> bool {
        self.in_p[i]
    }

    pub fn is_borel(&self) -> bool {
        self.simple.is_empty()
    }

    pub fn levi_elements(&self) -> &[usize] {
        &self.levi
    }

    pub fn min_reps(&self) -> &[usize] {
        &self.min_reps
    }

    pub fn position(&self, k: usize) -> Option<usize> {
        self.rep_pos[k]
    }

    pub fn is_min_rep(&self, k: usize) -> bool {
        self.rep_pos[k].is_some()
    }

    pub fn coset_rep(&self, k: usize) -> usize {
        self.coset[k]
    }

    pub fn levi_roots(&self) -> &[usize] {
        &self.levi_roots
    }

    pub fn tangent_roots(&self) -> &[usize] {
        &self.tangent_roots
    }

    pub fn dim(&self) -> usize {
        self.tangent_roots.len()
    }

    /// `w = w₁w₂` with `w₁ ∈ W^P`, `w₂ ∈ W_P` and lengths adding up.
    pub fn coset_decompose(&self, w: &WeylGroup, k: usize) -> (usize, usize) {
        let w1 = self.coset[k];
        (w1, w.mul(w.inverse(w1), k))
    }

    pub fn trichotomy(&self, w: &WeylGroup, i: usize, k: usize) -> Result<Trichotomy> {
        if i >= w.rank() {
            return Err(Error::IndexOutOfRange(i));
        }
        if !self.is_min_rep(k) {
            return Err(Error::NotMinimalRepresentative(w.label(k)));
        }
        let sw = w.left_mul(i, k);
        if w.length(sw) < w.length(k) {
            return Ok(Trichotomy::Lower);
        }
        if self.is_min_rep(sw) {
            return Ok(Trichotomy::UpMinimal);
        }
        let conj = w.mul(w.inverse(k), sw);
        let j = (0..w.rank())
            .find(|&j| w.simple(j) == conj)
            .expect("Deodhar's lemma: w⁻¹s_iw is simple");
        Ok(Trichotomy::UpFolds(j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(label: &str) -> WeylGroup {
        WeylGroup::new(build_root_system(label).unwrap())
    }

    fn lat(v: &[i32]) -> Lattice {
        let mut out = [0; MAX_RANK];
        out[..v.len()].copy_from_slice(v);
        out
    }

    #[test]
    fn positive_roots_of_small_types() {
        assert_eq!(build_root_system("A1").unwrap().positive_roots, vec![lat(&[1])]);
        assert_eq!(
            build_root_system("A2").unwrap().positive_roots,
            vec![lat(&[1, 0]), lat(&[0, 1]), lat(&[1, 1])]
        );
        let g2 = build_root_system("G2").unwrap();
        assert_eq!(g2.positive_roots.len(), 6);
        assert!(g2.positive_roots.contains(&lat(&[3, 2])));
        assert!(g2.positive_roots.contains(&lat(&[3, 1])));
        let b2 = build_root_system("B2").unwrap();
        assert_eq!(b2.positive_roots.last(), Some(&lat(&[1, 2])));
        assert!(build_root_system("F4").is_err());
        assert!(build_root_system("A7").is_err());
    }

    #[test]
    fn group_orders_and_longest_elements() {
        for (label, order) in [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("G2", 12), ("B3", 48), ("C3", 48)] {
            assert_eq!(group(label).order(), order, "{label}");
        }
        let a2 = group("A2");
        assert_eq!(a2.word(a2.longest()), &[0, 1, 0]);
        let b2 = group("B2");
        assert_eq!(b2.length(b2.longest()), 4);
    }

    #[test]
    fn action_on_roots() {
        let a2 = group("A2");
        let s2 = a2.simple(1);
        assert_eq!(a2.act(s2, &lat(&[1, 0])), lat(&[1, 1]));
        assert_eq!(a2.act(a2.longest(), &lat(&[1, 0])), lat(&[0, -1]));
        let a1 = group("A1");
        assert_eq!(a1.act(a1.simple(0), &lat(&[1])), lat(&[-1]));
    }

    #[test]
    fn bruhat_examples() {
        let a2 = group("A2");
        let (s1, s2) = (a2.simple(0), a2.simple(1));
        assert!(!a2.bruhat_leq(s1, s2));
        assert!(a2.bruhat_leq(s2, a2.longest()));
        assert!((0..6).all(|k| a2.bruhat_leq(0, k)));
    }

    #[test]
    fn grassmannian_cosets() {
        let a3 = group("A3");
        let p = Parabolic::new(&a3, &[0, 2]).unwrap();
        assert_eq!(p.min_reps().len(), 6);
        let w = a3.eval_word(&[0, 1, 0]).unwrap();
        let (w1, w2) = p.coset_decompose(&a3, w);
        assert_eq!(a3.word(w1), &[0, 1]);
        assert_eq!(a3.word(w2), &[0]);
        let (w1, w2) = p.coset_decompose(&a3, a3.longest());
        assert_eq!(a3.word(w1), &[1, 0, 2, 1]);
        assert_eq!(a3.length(w2), 2);
    }

    #[test]
    fn trichotomy_examples() {
        let a3 = group("A3");
        let p = Parabolic::new(&a3, &[0, 2]).unwrap();
        let e = 0;
        let s2 = a3.simple(1);
        let s1s2 = a3.eval_word(&[0, 1]).unwrap();
        assert_eq!(p.trichotomy(&a3, 1, e).unwrap(), Trichotomy::UpMinimal);
        assert_eq!(p.trichotomy(&a3, 1, s2).unwrap(), Trichotomy::Lower);
        assert_eq!(p.trichotomy(&a3, 1, s1s2).unwrap(), Trichotomy::UpFolds(0));
        assert!(p.trichotomy(&a3, 1, a3.simple(0)).is_err());
    }

    #[test]
    fn word_parsing() {
        assert_eq!(parse_word("s1s2s1").unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_word("1,3").unwrap(), vec![0, 2]);
        assert_eq!(parse_word("id").unwrap(), Vec::<usize>::new());
        assert!(parse_word("x1").is_err());
        assert_eq!(word_label(&[1, 0]), "s2s1");
    }
}

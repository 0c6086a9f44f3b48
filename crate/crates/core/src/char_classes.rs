//! Characteristic classes of Schubert cells: CSM and Segre–MacPherson
//! classes in cohomology, motivic Chern and Segre motivic classes in
//! K-theory, on either side (B-cells X_{wW_P}° or B⁻-cells X^{wW_P,°}).

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::algebra::{CohScalar, Fraction, KScalar, Poly, TermOrder};
use crate::error::{Error, Result};
use crate::gkm::{candidate_factors, factor_over, parabolic_family, right_recursion, w0_flip, FlagSpace, LocalizedClass, Side};
use crate::operators::{Family, OperatorSpec};
use crate::root_system::{negate, Trichotomy};
use crate::theory::{hbar, root_form, y_var, Theory, TheoryKind, H, K};
use crate::verify::VerificationReport;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClassFamily {
    Csm,
    Sm,
    Mc,
    Smc,
}

impl ClassFamily {
    pub fn theory(self) -> TheoryKind {
        match self {
            ClassFamily::Csm | ClassFamily::Sm => TheoryKind::H,
            ClassFamily::Mc | ClassFamily::Smc => TheoryKind::K,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassFamily::Csm => "csm",
            ClassFamily::Sm => "sm",
            ClassFamily::Mc => "mc",
            ClassFamily::Smc => "smc",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            ClassFamily::Csm => "c_SM",
            ClassFamily::Sm => "s_M",
            ClassFamily::Mc => "MC_y",
            ClassFamily::Smc => "SMC_y",
        }
    }
}

impl fmt::Display for ClassFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csm" => Ok(ClassFamily::Csm),
            "sm" => Ok(ClassFamily::Sm),
            "mc" => Ok(ClassFamily::Mc),
            "smc" => Ok(ClassFamily::Smc),
            _ => Err(Error::Parse(format!("unknown class family {s:?}"))),
        }
    }
}

/// One class per fixed point of `space`, in fixed point order.
#[derive(Clone, Debug)]
pub struct CellClassFamily<T: Theory> {
    pub family: ClassFamily,
    pub side: Side,
    pub space: Arc<FlagSpace>,
    pub classes: Vec<LocalizedClass<T>>,
}

impl<T: Theory> CellClassFamily<T> {
    pub fn class(&self, p: usize) -> &LocalizedClass<T> {
        &self.classes[p]
    }

    /// Display name of the class of the cell at fixed point `p`.
    pub fn label(&self, p: usize) -> String {
        cell_label(self.family, self.side, &self.space, p)
    }
}

pub fn cell_label(family: ClassFamily, side: Side, space: &FlagSpace, p: usize) -> String {
    let w = space.point_label(p);
    match side {
        Side::B => format!("{}(X_{w}°)", family.symbol()),
        Side::BMinus => format!("{}(X^{w},°)", family.symbol()),
    }
}

fn cell_position(space: &FlagSpace, w: usize) -> Result<usize> {
    if w >= space.group().order() {
        return Err(Error::IndexOutOfRange(w));
    }
    space.position(w).ok_or_else(|| Error::NotMinimalRepresentative(space.group().label(w)))
}

/// c_SM(X_w°) = 𝒯ᴿ_{w⁻¹}[X_id] on G/B for every w ∈ W.
fn csm_full_table(full: &Arc<FlagSpace>) -> Result<Vec<LocalizedClass<H>>> {
    right_recursion(full, LocalizedClass::fixed_point(full, 0), |i, a| H::dl_right(i, a, false))
}

/// MC_y(X_w°) = 𝒯ᴿ_{w⁻¹}(𝒪_id) on G/B for every w ∈ W.
fn mc_full_table(full: &Arc<FlagSpace>) -> Result<Vec<LocalizedClass<K>>> {
    right_recursion(full, LocalizedClass::fixed_point(full, 0), |i, a| K::dl_right(i, a, false))
}

/// CSM classes of all cells of one side. On G/P these are push-forwards of
/// the G/B cells X_w°, w ∈ W^P; the B⁻ side is the w₀ᴸ image.
pub fn csm_family(space: &Arc<FlagSpace>, side: Side) -> Result<CellClassFamily<H>> {
    let table = csm_full_table(&space.full())?;
    let classes = parabolic_family(space, &table, side)?;
    Ok(CellClassFamily { family: ClassFamily::Csm, side, space: space.clone(), classes })
}

/// Segre–MacPherson classes: c_SM / c(T_X) pointwise.
pub fn sm_family(space: &Arc<FlagSpace>, side: Side) -> Result<CellClassFamily<H>> {
    let csm = csm_family(space, side)?;
    sm_from_csm(&csm)
}

fn sm_from_csm(csm: &CellClassFamily<H>) -> Result<CellClassFamily<H>> {
    let space = &csm.space;
    let r = space.rank();
    let classes = csm
        .classes
        .iter()
        .map(|a| {
            a.div_by_irreducibles(|p| space.tangent_weights(p).iter().map(|w| H::ambient_factor(w, r)).collect())
        })
        .collect::<Result<_>>()?;
    Ok(CellClassFamily { family: ClassFamily::Sm, side: csm.side, space: csm.space.clone(), classes })
}

/// Motivic Chern classes of all cells of one side.
pub fn mc_family(space: &Arc<FlagSpace>, side: Side) -> Result<CellClassFamily<K>> {
    let table = mc_full_table(&space.full())?;
    let classes = parabolic_family(space, &table, side)?;
    Ok(CellClassFamily { family: ClassFamily::Mc, side, space: space.clone(), classes })
}

/// Segre motivic classes, as the basis dual to the motivic Chern classes of
/// the opposite cells under the K-theoretic pairing.
pub fn smc_family(space: &Arc<FlagSpace>, side: Side) -> Result<CellClassFamily<K>> {
    let mc = mc_family(space, Side::B)?;
    let bminus = dual_basis(&mc.classes)?;
    let classes = match side {
        Side::BMinus => bminus,
        Side::B => w0_flip(space, &bminus),
    };
    Ok(CellClassFamily { family: ClassFamily::Smc, side, space: space.clone(), classes })
}

/// For a family `m` with `m[w]|_v = 0` unless v ≤ w (in fixed point order),
/// the family `s` with ⟨m[w], s[u]⟩ = δ_{w,u}. Writing M[w][v] = m[w]|_v,
/// s[u]|_v = N_v (M⁻¹)[v][u].
///
/// The diagonal entries factor into the irreducibles T::factor(±β) and
/// T::ambient_factor(±β); the triangular solve keeps denominators as lists
/// of those factors and cancels by trial division, which avoids gcds of
/// large numerators.
pub fn dual_basis<T: Theory>(m: &[LocalizedClass<T>]) -> Result<Vec<LocalizedClass<T>>> {
    let Some(first) = m.first() else { return Ok(Vec::new()) };
    let space = first.space().clone();
    let n = space.npoints();
    if m.len() != n {
        return Err(Error::SpaceMismatch);
    }
    let mut entries: Vec<Vec<Poly<T::O>>> = Vec::with_capacity(n);
    for (w, c) in m.iter().enumerate() {
        if (w + 1..n).any(|v| !c.value(v).is_zero()) || c.value(w).is_zero() {
            return Err(Error::SingularPairing);
        }
        let row = (0..n)
            .map(|v| c.value(v).as_poly().cloned().ok_or_else(|| Error::NonPolynomial(space.point_label(v))))
            .collect::<Result<Vec<_>>>()?;
        entries.push(row);
    }
    let candidates = candidate_factors::<T>(&space);
    let diag: Vec<Vec<Poly<T::O>>> = (0..n)
        .map(|w| factor_over(&entries[w][w], &candidates).ok_or(Error::SingularPairing))
        .collect::<Result<_>>()?;
    let norms: Vec<Vec<Poly<T::O>>> = (0..n)
        .map(|v| factor_over(space.norm::<T>(v), &candidates).ok_or(Error::SingularPairing))
        .collect::<Result<_>>()?;

    let mut out: Vec<Vec<Fraction<T::O>>> = vec![vec![Fraction::zero(); n]; n];
    for u in 0..n {
        // Column u of M⁻¹, entries v ≥ u.
        let mut col: Vec<Factored<T::O>> = Vec::with_capacity(n - u);
        for w in u..n {
            let mut acc = if w == u { Factored::one() } else { Factored::zero() };
            for v in u..w {
                let mv = &entries[w][v];
                let x = &col[v - u];
                if !mv.is_zero() && !x.num.is_zero() {
                    acc = acc.sub(&x.mul_poly(mv));
                }
            }
            col.push(acc.div_unit_factors(&entries[w][w], &diag[w]));
        }
        for v in u..n {
            let x = col[v - u].mul_unit_factors(space.norm::<T>(v), &norms[v]);
            out[v][u] = Fraction::over_irreducibles(x.num, &x.den)?;
        }
    }
    Ok((0..n).map(|u| LocalizedClass::from_fn(&space, |v| out[v][u].clone())).collect())
}

/// num / ∏ den with irreducible den factors, kept reduced.
#[derive(Clone, Debug)]
struct Factored<O: TermOrder> {
    num: Poly<O>,
    den: Vec<Poly<O>>,
}

impl<O: TermOrder> Factored<O> {
    fn zero() -> Self {
        Factored { num: Poly::zero(), den: Vec::new() }
    }

    fn one() -> Self {
        Factored { num: Poly::one(), den: Vec::new() }
    }

    fn cancel(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let mut i = 0;
        while i < self.den.len() {
            match self.num.div_exact(&self.den[i]) {
                Some(q) => {
                    self.num = q;
                    self.den.swap_remove(i);
                }
                None => i += 1,
            }
        }
        self
    }

    fn sub(&self, other: &Self) -> Self {
        // lcm of the two factor multisets.
        let mut unmatched_self: Vec<bool> = vec![true; self.den.len()];
        let mut extra_other = Vec::new();
        for f in &other.den {
            match (0..self.den.len()).find(|&k| unmatched_self[k] && self.den[k] == *f) {
                Some(k) => unmatched_self[k] = false,
                None => extra_other.push(f.clone()),
            }
        }
        let extra_self: Vec<&Poly<O>> = (0..self.den.len()).filter(|&k| unmatched_self[k]).map(|k| &self.den[k]).collect();
        let a = extra_other.iter().fold(self.num.clone(), |acc, f| acc.mul(f));
        let b = extra_self.iter().fold(other.num.clone(), |acc, f| acc.mul(f));
        let mut den = self.den.clone();
        den.extend(extra_other);
        Factored { num: a.sub(&b), den }.cancel()
    }

    fn mul_poly(&self, p: &Poly<O>) -> Self {
        Factored { num: self.num.mul(p), den: self.den.clone() }.cancel()
    }

    /// Divides by `p = unit · ∏ fs`.
    fn div_unit_factors(&self, p: &Poly<O>, fs: &[Poly<O>]) -> Self {
        let prod = fs.iter().fold(Poly::one(), |acc, f| acc.mul(f));
        // p / prod is a unit c·x^m; dividing by it is exact.
        let unit = p.div_exact(&prod).expect("factorization reproduces the entry");
        let num = self.num.div_exact(&unit).expect("units divide");
        let mut den = self.den.clone();
        den.extend(fs.iter().cloned());
        Factored { num, den }.cancel()
    }

    /// Multiplies by `p = unit · ∏ fs`, cancelling factor by factor first.
    fn mul_unit_factors(&self, p: &Poly<O>, fs: &[Poly<O>]) -> Self {
        let prod = fs.iter().fold(Poly::one(), |acc, f| acc.mul(f));
        let unit = p.div_exact(&prod).expect("factorization reproduces the entry");
        let mut den = self.den.clone();
        let mut num = self.num.mul(&unit);
        for f in fs {
            match den.iter().position(|d| d == f) {
                Some(k) => {
                    den.swap_remove(k);
                }
                None => num = num.mul(f),
            }
        }
        Factored { num, den }
    }
}

/// Fetch a single cell class; `w` must be a minimal coset representative.
pub fn csm_cell(space: &Arc<FlagSpace>, w: usize, side: Side) -> Result<LocalizedClass<H>> {
    let p = cell_position(space, w)?;
    Ok(csm_family(space, side)?.classes.swap_remove(p))
}

pub fn sm_cell(space: &Arc<FlagSpace>, w: usize, side: Side) -> Result<LocalizedClass<H>> {
    let p = cell_position(space, w)?;
    Ok(sm_family(space, side)?.classes.swap_remove(p))
}

pub fn mc_cell(space: &Arc<FlagSpace>, w: usize, side: Side) -> Result<LocalizedClass<K>> {
    let p = cell_position(space, w)?;
    Ok(mc_family(space, side)?.classes.swap_remove(p))
}

pub fn smc_cell(space: &Arc<FlagSpace>, w: usize, side: Side) -> Result<LocalizedClass<K>> {
    let p = cell_position(space, w)?;
    Ok(smc_family(space, side)?.classes.swap_remove(p))
}

/// Homogenizes a polynomial cohomology class: the degree-k part of each
/// restriction is multiplied by ħ^{dim−k}.
pub fn homogenize_csm(a: &LocalizedClass<H>) -> Result<LocalizedClass<H>> {
    let space = a.space().clone();
    let dim = space.dim() as i64;
    let h = hbar(space.rank());
    a.values()
        .iter()
        .enumerate()
        .map(|(p, v)| {
            let poly = v.as_poly().ok_or_else(|| Error::NonPolynomial(space.point_label(p)))?;
            let mut out = CohScalar::zero();
            for k in 0..=dim {
                let part = poly.homogeneous_part(k);
                if !part.is_zero() {
                    out = out.add(&part.mul(&h.pow((dim - k) as u32)));
                }
            }
            if out.len() != poly.len() {
                return Err(Error::NonPolynomial(space.point_label(p)));
            }
            Ok(Fraction::from(out))
        })
        .collect::<Result<Vec<_>>>()
        .and_then(|values| LocalizedClass::new(space, values))
}

/// The factors 1 + y e^{±α}, α > 0.
fn positive_root_factors(space: &FlagSpace, sign: i32) -> Vec<KScalar> {
    let g = space.group();
    let r = space.rank();
    g.rs.positive_roots
        .iter()
        .map(|a| {
            // The K ambient factor of a weight ω is 1 + y e^{−ω}.
            let w = if sign > 0 { negate(a) } else { *a };
            K::ambient_factor(&w, r)
        })
        .collect()
}

fn positive_root_product(space: &FlagSpace, sign: i32) -> KScalar {
    positive_root_factors(space, sign).iter().fold(Poly::one(), |acc, f| acc.mul(f))
}

fn minus_y_pow(rank: usize, k: usize) -> KScalar {
    y_var(rank).neg().pow(k as u32)
}

/// The y-polynomial inverse step is checked against the literal inverse.
pub fn dl_dual_inverse_right(i: usize, a: &LocalizedClass<K>) -> Result<LocalizedClass<K>> {
    let t = K::dl_right(i, a, true)?;
    K::dl_inverse(a, &t)
}

/// SMC_y on G/B from the inverse dual DL operators:
/// B side ((−y)^{ℓ(w)}/∏(1+ye^α))(𝒯^{R,∨}_w)⁻¹(𝒪_id),
/// B⁻ side ((−y)^{dim−ℓ(w)}/∏(1+ye^{−α}))(𝒯^{R,∨}_{w₀w})⁻¹(𝒪^{w₀}).
/// Since −y𝒯⁻¹ = 𝒯 + 1 + y, each (−y)-power is absorbed into one letter
/// and the only division is the final one.
pub fn smc_closed_form(full: &Arc<FlagSpace>, side: Side) -> Result<Vec<LocalizedClass<K>>> {
    if !full.is_full() {
        return Err(Error::RightOperatorOnParabolic);
    }
    let g = full.group();
    let one_y = KScalar::one().add(&y_var(full.rank()));
    let step = |i: usize, a: &LocalizedClass<K>| Ok(K::dl_right(i, a, true)?.add(&a.scale_poly(&one_y)));
    let w0 = g.longest();
    let (base, factors) = match side {
        Side::B => (0, positive_root_factors(full, 1)),
        Side::BMinus => (w0, positive_root_factors(full, -1)),
    };
    let table = right_recursion(full, LocalizedClass::fixed_point(full, base), step)?;
    (0..g.order())
        .map(|w| {
            let src = if side == Side::B { w } else { g.mul(w0, w) };
            table[src].div_by_irreducibles(|_| factors.clone())
        })
        .collect()
}

/// MC_y(X^{w,°}) = 𝒯ᴿ_{w⁻¹w₀}(𝒪^{w₀}) on G/B.
pub fn mc_opposite_from_operators(full: &Arc<FlagSpace>) -> Result<Vec<LocalizedClass<K>>> {
    if !full.is_full() {
        return Err(Error::RightOperatorOnParabolic);
    }
    let g = full.group();
    let w0 = g.longest();
    let table = right_recursion(full, LocalizedClass::fixed_point(full, w0), |i, a| K::dl_right(i, a, false))?;
    Ok((0..g.order()).map(|w| table[g.mul(w0, w)].clone()).collect())
}

/// All four families on one side each, as inputs to the verification suites.
#[derive(Clone, Debug)]
pub struct CsmTables {
    pub csm_b: CellClassFamily<H>,
    pub csm_bm: CellClassFamily<H>,
    pub sm_b: CellClassFamily<H>,
    pub sm_bm: CellClassFamily<H>,
}

impl CsmTables {
    pub fn compute(space: &Arc<FlagSpace>) -> Result<Self> {
        let csm_b = csm_family(space, Side::B)?;
        let csm_bm = csm_family(space, Side::BMinus)?;
        let sm_b = sm_from_csm(&csm_b)?;
        let sm_bm = sm_from_csm(&csm_bm)?;
        Ok(CsmTables { csm_b, csm_bm, sm_b, sm_bm })
    }
}

#[derive(Clone, Debug)]
pub struct MotivicTables {
    pub mc_b: CellClassFamily<K>,
    pub mc_bm: CellClassFamily<K>,
    pub smc_b: CellClassFamily<K>,
    pub smc_bm: CellClassFamily<K>,
}

impl MotivicTables {
    pub fn compute(space: &Arc<FlagSpace>) -> Result<Self> {
        let mc_b = mc_family(space, Side::B)?;
        let mc_bm = mc_family(space, Side::BMinus)?;
        let smc_b = smc_family(space, Side::B)?;
        let smc_bm = smc_family(space, Side::BMinus)?;
        Ok(MotivicTables { mc_b, mc_bm, smc_b, smc_bm })
    }
}

fn check_eq<T: Theory>(
    rep: &mut VerificationReport,
    id: &str,
    got: Result<LocalizedClass<T>>,
    expected: &LocalizedClass<T>,
    witness: impl FnOnce() -> String,
) {
    rep.record_result(id, got.map(|g| g == *expected), witness);
}

/// ⟨a_w, b_u⟩ = δ_{w,u} for all pairs.
fn check_duality<T: Theory>(rep: &mut VerificationReport, id: &str, a: &CellClassFamily<T>, b: &CellClassFamily<T>) {
    let n = a.space.npoints();
    for w in 0..n {
        for u in 0..n {
            let r = a.class(w).pair(b.class(u)).map(|v| if w == u { v.is_one() } else { v.is_zero() });
            rep.record_result(id, r, || format!("<{}, {}>", a.label(w), b.label(u)));
        }
    }
}

/// Shared structural checks: GKM membership, polynomiality, support and the
/// normalization sum.
fn check_structure<T: Theory>(rep: &mut VerificationReport, fam: &CellClassFamily<T>) {
    let space = &fam.space;
    let n = space.npoints();
    let name = fam.family.name();
    for p in 0..n {
        let c = fam.class(p);
        let r = c.gkm_check().map(|x| x.is_none());
        rep.record_result(&format!("{name} classes satisfy the GKM conditions"), r, || fam.label(p));
        let supported = (0..n).all(|q| {
            let ok = match fam.side {
                Side::B => space.leq(q, p),
                Side::BMinus => space.leq(p, q),
            };
            ok || c.value(q).is_zero()
        });
        rep.record(&format!("{name} classes are supported on the cell closure"), supported, || fam.label(p));
    }
    let total = fam.classes.iter().fold(LocalizedClass::zero(space), |acc, c| acc.add(c));
    let id = match T::KIND {
        TheoryKind::H => "sum of CSM classes of all cells is c(T_X)",
        TheoryKind::K => "sum of MC classes of all cells is λ_y(T*_X)",
    };
    let side = match fam.side {
        Side::B => "B",
        Side::BMinus => "B-",
    };
    rep.record(id, total == LocalizedClass::ambient(space), || format!("{side} cells on {}", space.name()));
}

/// CSM/SM identities: the right recursion on G/B, both dualities, the left
/// DL actions on any G/P, normalization, GKM membership and the
/// homogenized reflection action.
pub fn verify_csm_theorems(space: &Arc<FlagSpace>) -> Result<VerificationReport> {
    let t = CsmTables::compute(space)?;
    verify_csm_tables(space, &t)
}

pub fn verify_csm_tables(space: &Arc<FlagSpace>, t: &CsmTables) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(format!("CSM and SM classes on {}", space.name()));
    let g = space.group().clone();
    let n = space.npoints();
    for fam in [&t.csm_b, &t.csm_bm] {
        check_structure(&mut rep, fam);
        for p in 0..n {
            rep.record("CSM restrictions are polynomial", fam.class(p).is_polynomial(), || fam.label(p));
        }
    }
    check_duality(&mut rep, "CSM of B-cells dual to SM of B- cells", &t.csm_b, &t.sm_bm);
    check_duality(&mut rep, "CSM of B- cells dual to SM of B-cells", &t.csm_bm, &t.sm_b);

    let sm_b = &t.sm_b.classes;
    let sm_bm = &t.sm_bm.classes;
    for i in 0..space.rank() {
        let tl = OperatorSpec::left(Family::Dl, i);
        let tlv = OperatorSpec::left(Family::DlDual, i);
        for p in 0..n {
            let q = space.position_of_coset(g.left_mul(i, space.point(p)));
            check_eq(&mut rep, "left DL on CSM of B-cells", tl.apply(t.csm_b.class(p)), t.csm_b.class(q), || {
                format!("{tl} on {}", t.csm_b.label(p))
            });
            check_eq(&mut rep, "dual left DL on SM of B- cells", tlv.apply(&sm_bm[p]), &sm_bm[q], || {
                format!("{tlv} on {}", t.sm_bm.label(p))
            });
            check_eq(&mut rep, "dual left DL on CSM of B- cells", tlv.apply(t.csm_bm.class(p)), t.csm_bm.class(q), || {
                format!("{tlv} on {}", t.csm_bm.label(p))
            });
            check_eq(&mut rep, "left DL on SM of B-cells", tl.apply(&sm_b[p]), &sm_b[q], || {
                format!("{tl} on {}", t.sm_b.label(p))
            });
        }
    }

    if space.is_full() {
        for i in 0..space.rank() {
            let tr = OperatorSpec::right(Family::Dl, i);
            let trv = OperatorSpec::right(Family::DlDual, i);
            for w in 0..n {
                let ws = g.right_mul(w, i);
                check_eq(&mut rep, "right DL recursion on CSM of B-cells", tr.apply(t.csm_b.class(w)), t.csm_b.class(ws), || {
                    format!("{tr} on {}", t.csm_b.label(w))
                });
                check_eq(&mut rep, "dual right DL on SM of B- cells", trv.apply(&sm_bm[w]), &sm_bm[ws], || {
                    format!("{trv} on {}", t.sm_bm.label(w))
                });
                check_eq(&mut rep, "dual right DL on SM of B-cells", trv.apply(&sm_b[w]), &sm_b[ws], || {
                    format!("{trv} on {}", t.sm_b.label(w))
                });
            }
        }
        verify_homogenized(&mut rep, space, &t.csm_b)?;
    }
    Ok(rep)
}

/// sᵢᴸ c^ħ_w = ħ/(ħ+αᵢ) c^ħ_w + αᵢ/(ħ+αᵢ) c^ħ_{sᵢw} and 𝒯ᵢ^{L,ħ} c^ħ_w = c^ħ_{sᵢw}.
fn verify_homogenized(rep: &mut VerificationReport, space: &Arc<FlagSpace>, csm_b: &CellClassFamily<H>) -> Result<()> {
    let g = space.group();
    let r = space.rank();
    let homog: Vec<LocalizedClass<H>> = csm_b.classes.iter().map(homogenize_csm).collect::<Result<_>>()?;
    for (p, c) in homog.iter().enumerate() {
        let one_at_h = c.map_scalars(|s| s.substitute(&hbar_to_one(r)))?;
        rep.record("homogenization at ħ = 1 recovers the class", one_at_h == *csm_b.class(p), || csm_b.label(p));
    }
    let h = hbar(r);
    for i in 0..r {
        let alpha = root_form(&g.rs.simple_root(i));
        let d = h.add(&alpha);
        let c_h = Fraction::new(h.clone(), d.clone())?;
        let c_a = Fraction::new(alpha.clone(), d)?;
        let s = OperatorSpec::left(Family::Weyl, i);
        let th = OperatorSpec::left(Family::DlHomogenized, i);
        for w in 0..space.npoints() {
            let sw = space.position_of_coset(g.left_mul(i, space.point(w)));
            let expected = homog[w].scale(&c_h).add(&homog[sw].scale(&c_a));
            check_eq(rep, "reflection action on homogenized CSM classes", s.apply(&homog[w]), &expected, || {
                format!("{s} on {}", csm_b.label(w))
            });
            check_eq(rep, "homogenized left DL on homogenized CSM classes", th.apply(&homog[w]), &homog[sw], || {
                format!("{th} on {}", csm_b.label(w))
            });
        }
    }
    Ok(())
}

fn hbar_to_one(rank: usize) -> Vec<Option<CohScalar>> {
    let mut images = vec![None; rank + 1];
    images[rank] = Some(CohScalar::one());
    images
}

/// Motivic identities: right and left DL actions with their case splits,
/// closed forms, dualities, π* additivity, normalization, GKM membership
/// and the y-degree bound.
pub fn verify_motivic_theorems(space: &Arc<FlagSpace>) -> Result<VerificationReport> {
    let t = MotivicTables::compute(space)?;
    verify_motivic_tables(space, &t)
}

pub fn verify_motivic_tables(space: &Arc<FlagSpace>, t: &MotivicTables) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(format!("motivic Chern and Segre motivic classes on {}", space.name()));
    let g = space.group().clone();
    let n = space.npoints();
    let r = space.rank();
    let y = y_var(r);
    let one_y = KScalar::one().add(&y);
    let minus_y = y.neg();

    for fam in [&t.mc_b, &t.mc_bm] {
        check_structure(&mut rep, fam);
    }
    for p in 0..n {
        let c = t.mc_b.class(p);
        rep.record("MC restrictions are Laurent polynomials", c.is_polynomial(), || t.mc_b.label(p));
        let bounded = c.values().iter().all(|v| v.num().degree_in(r) <= space.dim() as i32);
        let diag = c.value(p).num().degree_in(r) == space.point_length(p) as i32;
        rep.record("MC restrictions have y-degree at most dim, equal to the length on the diagonal", bounded && diag, || {
            t.mc_b.label(p)
        });
        let at_zero = c.map_scalars(|s| s.substitute(&y_to_zero(r)));
        rep.record_result("MC at y = 0 is polynomial", at_zero.map(|a| a.is_polynomial()), || t.mc_b.label(p));
    }
    check_duality(&mut rep, "MC of B-cells dual to SMC of B- cells", &t.mc_b, &t.smc_bm);
    check_duality(&mut rep, "MC of B- cells dual to SMC of B-cells", &t.mc_bm, &t.smc_b);
    // SMC identities are checked on D·SMC, D W-invariant (see clear_invariant).
    let smc_b: Vec<LocalizedClass<K>> = t.smc_b.classes.iter().map(LocalizedClass::clear_invariant).collect();
    let smc_bm: Vec<LocalizedClass<K>> = t.smc_bm.classes.iter().map(LocalizedClass::clear_invariant).collect();

    // Left DL on MC, with the (−y)-power when sᵢw folds into the same coset.
    for i in 0..r {
        let tl = OperatorSpec::left(Family::Dl, i);
        let tlv = OperatorSpec::left(Family::DlDual, i);
        for p in 0..n {
            let w = space.point(p);
            let sw = g.left_mul(i, w);
            let q = space.position_of_coset(sw);
            let up = g.length(sw) > g.length(w);
            let folds = matches!(space.parabolic().trichotomy(&g, i, w)?, Trichotomy::UpFolds(_));
            let expected = if up {
                let k = g.length(sw) - space.point_length(q);
                t.mc_b.class(q).scale_poly(&minus_y_pow(r, k))
            } else {
                t.mc_b.class(p).scale_poly(&one_y).add(&t.mc_b.class(q).scale_poly(&y)).neg()
            };
            let id = if folds { "left DL on MC of B-cells, folding case" } else if up { "left DL on MC of B-cells, ascending case" } else { "left DL on MC of B-cells, descending case" };
            check_eq(&mut rep, id, tl.apply(t.mc_b.class(p)), &expected, || format!("{tl} on {}", t.mc_b.label(p)));

            let expected = if up {
                smc_bm[q].scale_poly(&minus_y)
            } else {
                smc_bm[p].scale_poly(&one_y).neg().add(&smc_bm[q])
            };
            let id = if up { "dual left DL on SMC of B- cells, ascending case" } else { "dual left DL on SMC of B- cells, descending case" };
            check_eq(&mut rep, id, tlv.apply(&smc_bm[p]), &expected, || format!("{tlv} on {}", t.smc_bm.label(p)));
        }
    }

    if space.is_full() {
        let mc_bm_ops = mc_opposite_from_operators(space)?;
        let smc_b_closed = smc_closed_form(space, Side::B)?;
        let smc_bm_closed = smc_closed_form(space, Side::BMinus)?;
        for w in 0..n {
            rep.record("MC of B- cells from right DL on the opposite point class", mc_bm_ops[w] == *t.mc_bm.class(w), || {
                t.mc_bm.label(w)
            });
            rep.record("SMC of B-cells: closed form agrees with the dual basis", smc_b_closed[w] == *t.smc_b.class(w), || {
                t.smc_b.label(w)
            });
            rep.record("SMC of B- cells: closed form agrees with the dual basis", smc_bm_closed[w] == *t.smc_bm.class(w), || {
                t.smc_bm.label(w)
            });
        }
        for i in 0..r {
            let tr = OperatorSpec::right(Family::Dl, i);
            let trv = OperatorSpec::right(Family::DlDual, i);
            for w in 0..n {
                let ws = g.right_mul(w, i);
                let up = g.length(ws) > g.length(w);
                // 𝒯ᵢᴿ MC: the ascending side is ws > w for B-cells, ws < w for B⁻ cells.
                for (fam, asc, id) in [
                    (&t.mc_b, up, "right DL on MC of B-cells"),
                    (&t.mc_bm, !up, "right DL on MC of B- cells"),
                ] {
                    let expected = if asc {
                        fam.class(ws).clone()
                    } else {
                        fam.class(w).scale_poly(&one_y).add(&fam.class(ws).scale_poly(&y)).neg()
                    };
                    let id = format!("{id}, {} case", if asc { "ascending" } else { "descending" });
                    check_eq(&mut rep, &id, tr.apply(fam.class(w)), &expected, || format!("{tr} on {}", fam.label(w)));
                }
                for (fam, cleared, desc, id) in [
                    (&t.smc_b, &smc_b, !up, "dual right DL on SMC of B-cells"),
                    (&t.smc_bm, &smc_bm, up, "dual right DL on SMC of B- cells"),
                ] {
                    let expected = if desc {
                        cleared[ws].scale_poly(&minus_y)
                    } else {
                        cleared[w].scale_poly(&one_y).neg().add(&cleared[ws])
                    };
                    let id = format!("{id}, {} case", if desc { "descending" } else { "ascending" });
                    check_eq(&mut rep, &id, trv.apply(&cleared[w]), &expected, || format!("{trv} on {}", fam.label(w)));
                }
            }
        }
        // Base cases of the closed forms.
        let ptid = LocalizedClass::<K>::fixed_point(space, 0);
        let ptw0 = LocalizedClass::<K>::fixed_point(space, g.longest());
        let base_b = ptid.div_scalar(&positive_root_product(space, 1).into())?;
        let base_bm = ptw0.div_scalar(&positive_root_product(space, -1).into())?;
        rep.record("SMC of the point cell", base_b == *t.smc_b.class(0), String::new);
        rep.record("SMC of the opposite point cell", base_bm == *t.smc_bm.class(g.longest()), String::new);
    } else {
        // π* SMC(X^{uW_P,°}) = Σ_{x ∈ W_P} (−y)^{ℓ(x)} SMC(X^{ux,°}); the
        // power accounts for the dimension normalization of each cell.
        // Both sides are compared after clearing the denominator ∏(1+ye^{−α}),
        // which every restriction divides.
        let full = space.full();
        let smc_full = smc_closed_form(&full, Side::BMinus)?;
        let d = positive_root_product(space, -1);
        for p in 0..n {
            let u = space.point(p);
            let sum = space
                .parabolic()
                .levi_elements()
                .iter()
                .fold(LocalizedClass::zero(&full), |acc, &x| {
                    acc.add(&smc_full[g.mul(u, x)].scale_poly(&d.mul(&minus_y_pow(r, g.length(x)))))
                });
            let lhs = t.smc_bm.class(p).pullback().scale_poly(&d);
            rep.record("pullback of SMC of a B- cell is the (-y)-weighted sum over its coset", lhs == sum, || t.smc_bm.label(p));
        }
    }
    Ok(rep)
}

fn y_to_zero(rank: usize) -> Vec<Option<KScalar>> {
    let mut images = vec![None; rank + 1];
    images[rank] = Some(KScalar::zero());
    images
}

/// Both class suites on one space.
pub fn verify_class_theorems(space: &Arc<FlagSpace>) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(format!("characteristic classes on {}", space.name()));
    rep.merge(verify_csm_theorems(space)?);
    rep.merge(verify_motivic_theorems(space)?);
    Ok(rep)
}

/// GKM membership with polynomial restrictions for every generated class
/// with that property: fixed-point and Schubert classes in both theories,
/// CSM and MC classes of both cell families.
pub fn verify_gkm_membership(space: &Arc<FlagSpace>) -> Result<VerificationReport> {
    fn check<T: Theory>(rep: &mut VerificationReport, id: &str, classes: &[LocalizedClass<T>], label: impl Fn(usize) -> String) {
        for (p, c) in classes.iter().enumerate() {
            rep.record_result(id, c.gkm_check().map(|x| x.is_none()), || label(p));
        }
    }
    fn fixed_points<T: Theory>(space: &Arc<FlagSpace>) -> Vec<LocalizedClass<T>> {
        (0..space.npoints()).map(|p| LocalizedClass::fixed_point(space, p)).collect()
    }
    let mut rep = VerificationReport::new(format!("GKM membership on {}", space.name()));
    let pt = |p: usize| space.point_label(p);
    check(&mut rep, "fixed-point classes (H)", &fixed_points::<H>(space), pt);
    check(&mut rep, "fixed-point classes (K)", &fixed_points::<K>(space), pt);
    for side in [Side::B, Side::BMinus] {
        let sh = crate::gkm::SchubertBasis::<H>::new(space, side)?;
        check(&mut rep, "Schubert classes (H)", &sh.classes, |p| crate::verify::schubert_label::<H>(space, side, p));
        let sk = crate::gkm::SchubertBasis::<K>::new(space, side)?;
        check(&mut rep, "Schubert classes (K)", &sk.classes, |p| crate::verify::schubert_label::<K>(space, side, p));
        let csm = csm_family(space, side)?;
        check(&mut rep, "CSM classes", &csm.classes, |p| csm.label(p));
        let mc = mc_family(space, side)?;
        check(&mut rep, "MC classes", &mc.classes, |p| mc.label(p));
    }
    Ok(rep)
}

/// The left DL action on MC_y(X_{wW_P}°) in the ascending case, reporting
/// the exponent k of (−y)^k along with whether the identity holds.
pub fn mc_left_dl_factor(space: &Arc<FlagSpace>, i: usize, w: usize) -> Result<(usize, bool)> {
    let g = space.group();
    let p = cell_position(space, w)?;
    let sw = g.left_mul(i, w);
    if g.length(sw) < g.length(w) {
        return Err(Error::Parse(format!("s{}·{} is not ascending", i + 1, g.label(w))));
    }
    let mc = mc_family(space, Side::B)?;
    let q = space.position_of_coset(sw);
    let k = g.length(sw) - space.point_length(q);
    let lhs = OperatorSpec::left(Family::Dl, i).apply(mc.class(p))?;
    let rhs = mc.class(q).scale_poly(&minus_y_pow(space.rank(), k));
    Ok((k, lhs == rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use crate::theory::character;

    fn a1() -> Arc<FlagSpace> {
        FlagSpace::full_flag("A1").unwrap()
    }

    fn lat(v: &[i32]) -> crate::root_system::Lattice {
        let mut out = [0; crate::root_system::MAX_RANK];
        out[..v.len()].copy_from_slice(v);
        out
    }

    #[test]
    fn gkm_membership_on_gr24_and_a2() {
        for s in [FlagSpace::new("A3", &[0, 2]).unwrap(), FlagSpace::full_flag("A2").unwrap()] {
            let rep = verify_gkm_membership(&s).unwrap();
            assert!(rep.passed(), "{rep}");
            assert_eq!(rep.checked(), 10 * s.npoints());
        }
    }

    #[test]
    fn a1_csm_and_sm() {
        let s = a1();
        let a = root_form(&lat(&[1]));
        let c = csm_cell(&s, 1, Side::B).unwrap();
        assert_eq!(c.values(), &[Fraction::one(), CohScalar::one().add(&a).into()]);
        let total = csm_family(&s, Side::B).unwrap().classes.iter().fold(LocalizedClass::zero(&s), |x, c| x.add(c));
        assert_eq!(total.values(), &[CohScalar::one().sub(&a).into(), CohScalar::one().add(&a).into()]);
        let sm = sm_cell(&s, 1, Side::BMinus).unwrap();
        assert_eq!(sm.values(), &[Fraction::zero(), Fraction::new(a.clone(), CohScalar::one().add(&a)).unwrap()]);
        let h = homogenize_csm(&c).unwrap();
        assert_eq!(h.values(), &[hbar(1).into(), hbar(1).add(&a).into()]);
    }

    #[test]
    fn a1_mc_and_smc() {
        let s = a1();
        let y = y_var(1);
        let e = character(&lat(&[1]));
        let em = character(&lat(&[-1]));
        let mc = mc_cell(&s, 1, Side::B).unwrap();
        let v0 = e.mul(&KScalar::one().add(&y));
        let v1 = KScalar::one().add(&y.mul(&em));
        assert_eq!(mc.values(), &[v0.into(), v1.clone().into()]);
        let smc = smc_cell(&s, 1, Side::BMinus).unwrap();
        let expected = Fraction::new(KScalar::one().sub(&em), v1).unwrap();
        assert_eq!(smc.values(), &[Fraction::zero(), expected]);
    }

    #[test]
    fn non_minimal_cell_is_rejected() {
        let s = FlagSpace::new("A2", &[0]).unwrap();
        let g = s.group();
        let w = g.simple(0);
        assert!(matches!(csm_cell(&s, w, Side::B), Err(Error::NotMinimalRepresentative(_))));
    }

    #[test]
    fn homogenize_constant_gives_top_power() {
        let s = FlagSpace::full_flag("A2").unwrap();
        let one = LocalizedClass::<H>::one(&s);
        let h = homogenize_csm(&one).unwrap();
        assert!(h.values().iter().all(|v| *v == Fraction::from(hbar(2).pow(3))));
        let frac = one.scale(&Fraction::constant(Rational::new(1, 2)));
        assert!(homogenize_csm(&frac).is_ok());
    }

    #[test]
    fn class_suites_pass_on_small_spaces() {
        for s in [FlagSpace::full_flag("A2").unwrap(), FlagSpace::new("A3", &[0, 2]).unwrap()] {
            let r = verify_class_theorems(&s).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn folding_instance_carries_a_minus_y() {
        let s = FlagSpace::new("A3", &[0, 2]).unwrap();
        let w = s.group().eval_word(&[0, 1]).unwrap();
        assert_eq!(mc_left_dl_factor(&s, 1, w).unwrap(), (1, true));
    }

    #[test]
    fn corrupted_mc_table_is_caught() {
        let s = FlagSpace::new("A3", &[0, 2]).unwrap();
        let mut t = MotivicTables::compute(&s).unwrap();
        t.mc_b.classes[3] = t.mc_b.classes[3].neg();
        let r = verify_motivic_tables(&s, &t).unwrap();
        assert!(!r.passed());
        assert!(r.failures().all(|e| e.witness.is_some()));
    }
}

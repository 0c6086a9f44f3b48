//! Identity suites over the Schubert basis, reported as structured records.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Fraction, Poly};
use crate::error::{Error, Result};
use crate::gkm::{FlagSpace, LocalizedClass, SchubertBasis, Side};
use crate::operators::{weyl_left, Family, Hand, OperatorSpec};
use crate::root_system::{negate, Trichotomy};
use crate::theory::{character, root_form, Theory, TheoryKind, H, K};

/// Outcome of one identity, aggregated over all instances checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub identity: String,
    pub checked: usize,
    pub failed: usize,
    /// The first failing instance, enough to reproduce it.
    pub witness: Option<String>,
}

impl Entry {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: String,
    pub entries: Vec<Entry>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport { suite: suite.into(), entries: Vec::new() }
    }

    /// Records one instance of `identity`; `witness` is only built on failure.
    pub fn record(&mut self, identity: &str, ok: bool, witness: impl FnOnce() -> String) {
        let idx = match self.entries.iter().position(|e| e.identity == identity) {
            Some(i) => i,
            None => {
                self.entries.push(Entry { identity: identity.to_string(), checked: 0, failed: 0, witness: None });
                self.entries.len() - 1
            }
        };
        let e = &mut self.entries[idx];
        e.checked += 1;
        if !ok {
            e.failed += 1;
            if e.witness.is_none() {
                e.witness = Some(witness());
            }
        }
    }

    /// Records a computation that may itself fail; an error counts as a failure.
    pub fn record_result(&mut self, identity: &str, r: Result<bool>, witness: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(identity, ok, witness),
            Err(e) => self.record(identity, false, || format!("{} ({e})", witness())),
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(Entry::passed)
    }

    pub fn checked(&self) -> usize {
        self.entries.iter().map(|e| e.checked).sum()
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.passed())
    }

    pub fn merge(&mut self, other: VerificationReport) {
        for e in other.entries {
            let name = format!("{}: {}", other.suite, e.identity);
            self.entries.push(Entry { identity: name, ..e });
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.suite)?;
        for e in &self.entries {
            let status = if e.passed() { "ok" } else { "FAIL" };
            write!(f, "  [{status}] {} ({} checked", e.identity, e.checked)?;
            if e.failed > 0 {
                write!(f, ", {} failed", e.failed)?;
            }
            write!(f, ")")?;
            if let Some(w) = &e.witness {
                write!(f, " witness: {w}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Display name of a Schubert basis element.
pub fn schubert_label<T: Theory>(space: &FlagSpace, side: Side, p: usize) -> String {
    let w = space.point_label(p);
    match (T::KIND, side) {
        (TheoryKind::H, Side::B) => format!("[X_{w}]"),
        (TheoryKind::H, Side::BMinus) => format!("[X^{w}]"),
        (TheoryKind::K, Side::B) => format!("O_{w}"),
        (TheoryKind::K, Side::BMinus) => format!("O^{w}"),
    }
}

/// Options for the relation suites.
#[derive(Copy, Clone, Debug, Default)]
pub struct RelationOptions {
    /// Flip the sign of one operator family, to exercise failure reporting.
    pub corrupt: Option<(Hand, Family)>,
}

struct Ctx {
    corrupt: Option<(Hand, Family)>,
}

impl Ctx {
    fn apply<T: Theory>(&self, spec: OperatorSpec, a: &LocalizedClass<T>) -> Result<LocalizedClass<T>> {
        let out = spec.apply(a)?;
        if self.corrupt == Some((spec.hand, spec.family)) {
            return Ok(out.neg());
        }
        Ok(out)
    }
}

fn families<T: Theory>(hand: Hand) -> Vec<Family> {
    let mut f = vec![Family::Weyl, Family::Divided, Family::Dl, Family::DlDual];
    if hand == Hand::Left {
        match T::KIND {
            TheoryKind::H => f.push(Family::DlHomogenized),
            TheoryKind::K => f.push(Family::DividedDual),
        }
    }
    f
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Weyl => "s",
        Family::Divided => "divided difference",
        Family::DividedDual => "dual divided difference",
        Family::Dl => "DL",
        Family::DlDual => "dual DL",
        Family::DlHomogenized => "homogenized DL",
    }
}

fn hand_name(h: Hand) -> &'static str {
    match h {
        Hand::Left => "left",
        Hand::Right => "right",
    }
}

/// Residual of the quadratic relation of one operator family.
fn quadratic_residual<T: Theory>(
    family: Family,
    a: &LocalizedClass<T>,
    t: &LocalizedClass<T>,
    tt: &LocalizedClass<T>,
) -> LocalizedClass<T> {
    match (family, T::KIND) {
        (Family::Weyl | Family::DlHomogenized, _) => tt.sub(a),
        (Family::Divided, TheoryKind::H) => tt.clone(),
        (Family::Divided | Family::DividedDual, _) => tt.sub(t),
        (Family::Dl | Family::DlDual, _) => T::quadratic_residual(a, t, tt),
    }
}

/// The index j with αⱼ = −w₀(αᵢ).
pub fn w0_dual_index(space: &FlagSpace, i: usize) -> usize {
    let g = space.group();
    let img = negate(&g.act(g.longest(), &g.rs.simple_root(i)));
    (0..g.rank()).find(|&j| g.rs.simple_root(j) == img).expect("−w₀ permutes simple roots")
}

/// The operator relations: quadratic and braid relations, left/right
/// commutation, adjointness, W-equivariance of the pairing and the
/// w₀-conjugation identities, checked on every Schubert basis element.
pub fn verify_relations<T: Theory>(space: &Arc<FlagSpace>, opts: &RelationOptions) -> Result<VerificationReport> {
    let ctx = Ctx { corrupt: opts.corrupt };
    let mut rep = VerificationReport::new(format!("operator relations, {} on {}", T::KIND, space.name()));
    let b = SchubertBasis::<T>::new(space, Side::B)?;
    let bm = SchubertBasis::<T>::new(space, Side::BMinus)?;
    let inputs: Vec<(String, &LocalizedClass<T>)> = (0..space.npoints())
        .map(|p| (schubert_label::<T>(space, Side::B, p), b.class(p)))
        .collect();
    let rank = space.rank();
    let g = space.group().clone();
    let hands: &[Hand] = if space.is_full() { &[Hand::Left, Hand::Right] } else { &[Hand::Left] };

    // Quadratic relations.
    for &hand in hands {
        for fam in families::<T>(hand) {
            let id = format!("quadratic relation, {} {}", hand_name(hand), family_name(fam));
            for i in 0..rank {
                let spec = OperatorSpec::new(hand, fam, i);
                for (label, a) in &inputs {
                    let r = ctx
                        .apply(spec, a)
                        .and_then(|t| ctx.apply(spec, &t).map(|tt| quadratic_residual(fam, a, &t, &tt).is_zero()));
                    rep.record_result(&id, r, || format!("{spec} on {label}"));
                }
            }
        }
    }

    // Braid relations: every left descent of every element gives the same
    // operator, hence by induction every reduced word does.
    for &hand in hands {
        for fam in families::<T>(hand) {
            let id = format!("braid relations (all reduced words), {} {}", hand_name(hand), family_name(fam));
            let spec = OperatorSpec::new(hand, fam, 0);
            for (label, a) in &inputs {
                let mut table: Vec<Option<LocalizedClass<T>>> = vec![None; g.order()];
                table[0] = Some((*a).clone());
                for w in 1..g.order() {
                    let i = g.word(w)[0];
                    let Some(prev) = table[g.left_mul(i, w)].clone() else { continue };
                    match ctx.apply(spec.with_index(i), &prev) {
                        Ok(v) => table[w] = Some(v),
                        Err(e) => {
                            rep.record(&id, false, || format!("{}{} on {label} ({e})", spec.with_index(i), g.label(w)));
                            continue;
                        }
                    }
                    for j in (0..rank).filter(|&j| j != i && g.has_left_descent(j, w)) {
                        let Some(other) = table[g.left_mul(j, w)].as_ref() else { continue };
                        let r = ctx.apply(spec.with_index(j), other).map(|v| Some(&v) == table[w].as_ref());
                        rep.record_result(&id, r, || format!("{} for w={} on {label}", spec, g.label(w)));
                    }
                }
            }
            // The rank-two relations spelled out.
            let id2 = format!("rank-two braid relations, {} {}", hand_name(hand), family_name(fam));
            for i in 0..rank {
                for j in i + 1..rank {
                    let (u, v) = alternating_words(&g, i, j);
                    for (label, a) in &inputs {
                        let r = spec.apply_word(&u, a).and_then(|x| Ok(x == spec.apply_word(&v, a)?));
                        rep.record_result(&id2, r, || format!("{spec} words {u:?}/{v:?} on {label}"));
                    }
                }
            }
        }
    }

    if space.is_full() {
        // δᵢ∂ⱼ = ∂ⱼδᵢ and the Weyl-twisted versions.
        let pairs: [(Family, Family, &str); 3] = [
            (Family::Divided, Family::Divided, "left/right divided differences commute"),
            (Family::Divided, Family::Weyl, "left divided difference commutes with right s"),
            (Family::Weyl, Family::Divided, "left s commutes with right divided difference"),
        ];
        let mut pairs: Vec<(Family, Family, &str)> = pairs.to_vec();
        pairs.push((Family::Dl, Family::Dl, "left/right DL commute"));
        pairs.push((Family::DlDual, Family::DlDual, "left/right dual DL commute"));
        if T::KIND == TheoryKind::K {
            pairs.push((Family::Weyl, Family::Dl, "left s commutes with right DL"));
            pairs.push((Family::Weyl, Family::DlDual, "left s commutes with right dual DL"));
            pairs.push((Family::DividedDual, Family::Divided, "left dual / right divided differences commute"));
        }
        for (lf, rf, id) in pairs {
            for i in 0..rank {
                for j in 0..rank {
                    let l = OperatorSpec::left(lf, i);
                    let r = OperatorSpec::right(rf, j);
                    for (label, a) in &inputs {
                        let res = (|| {
                            let lr = ctx.apply(l, &ctx.apply(r, a)?)?;
                            let rl = ctx.apply(r, &ctx.apply(l, a)?)?;
                            Ok(lr == rl)
                        })();
                        rep.record_result(id, res, || format!("{l}{r} on {label}"));
                    }
                }
            }
        }
    }

    // Adjointness, a from the B basis and b from the B⁻ basis.
    let duals: Vec<(String, &LocalizedClass<T>)> = (0..space.npoints())
        .map(|p| (schubert_label::<T>(space, Side::BMinus, p), bm.class(p)))
        .collect();
    for &hand in hands {
        let id = format!("adjointness of {} DL and its dual", hand_name(hand));
        for i in 0..rank {
            let t = OperatorSpec::new(hand, Family::Dl, i);
            let tv = OperatorSpec::new(hand, Family::DlDual, i);
            let ta: Vec<Result<LocalizedClass<T>>> = inputs.iter().map(|(_, a)| ctx.apply(t, a)).collect();
            let tvb: Vec<Result<LocalizedClass<T>>> = duals.iter().map(|(_, b)| ctx.apply(tv, b)).collect();
            let si = g.simple(i);
            for (p, (la, a)) in inputs.iter().enumerate() {
                for (q, (lb, b)) in duals.iter().enumerate() {
                    let res = (|| {
                        let ta = ta[p].clone()?;
                        let tvb = tvb[q].clone()?;
                        let lhs = ta.pair(b)?;
                        let mut rhs = a.pair(&tvb)?;
                        if hand == Hand::Left {
                            rhs = T::apply_fraction(&g, si, &rhs);
                        }
                        Ok(lhs == rhs)
                    })();
                    rep.record_result(&id, res, || format!("{t} with a={la}, b={lb}"));
                }
            }
        }
    }

    // ⟨wᴸa, wᴸb⟩ = w⟨a, b⟩ for the generators and w₀.
    {
        let id = "W-equivariance of the pairing";
        let mut ws: Vec<usize> = (0..rank).map(|i| g.simple(i)).collect();
        ws.push(g.longest());
        for &w in &ws {
            let wa: Vec<LocalizedClass<T>> = inputs.iter().map(|(_, a)| weyl_left(w, a)).collect();
            let wb: Vec<LocalizedClass<T>> = duals.iter().map(|(_, b)| weyl_left(w, b)).collect();
            for (p, (la, a)) in inputs.iter().enumerate() {
                for (q, (lb, b)) in duals.iter().enumerate() {
                    let res = (|| Ok(wa[p].pair(&wb[q])? == T::apply_fraction(&g, w, &a.pair(b)?)))();
                    rep.record_result(id, res, || format!("w={} a={la} b={lb}", g.label(w)));
                }
            }
        }
    }

    // w₀ᴸ conjugation: w₀𝒯ᵢᴸw₀ = 𝒯ⱼ^{L,∨} and w₀δᵢw₀ = −δⱼ (H) or δⱼ^∨ (K),
    // with αⱼ = −w₀αᵢ.
    {
        let w0 = g.longest();
        for i in 0..rank {
            let j = w0_dual_index(space, i);
            let cases: Vec<(OperatorSpec, OperatorSpec, bool, &str)> = match T::KIND {
                TheoryKind::H => vec![
                    (OperatorSpec::left(Family::Dl, i), OperatorSpec::left(Family::DlDual, j), false, "w0 conjugates left DL to its dual"),
                    (OperatorSpec::left(Family::Divided, i), OperatorSpec::left(Family::Divided, j), true, "w0 conjugates left divided difference"),
                ],
                TheoryKind::K => vec![
                    (OperatorSpec::left(Family::Dl, i), OperatorSpec::left(Family::DlDual, j), false, "w0 conjugates left DL to its dual"),
                    (OperatorSpec::left(Family::Divided, i), OperatorSpec::left(Family::DividedDual, j), false, "w0 conjugates left divided difference"),
                ],
            };
            for (op, conj, negate_rhs, id) in cases {
                for (label, a) in &inputs {
                    let res = (|| {
                        let lhs = weyl_left(w0, &ctx.apply(op, &weyl_left(w0, a))?);
                        let mut rhs = ctx.apply(conj, a)?;
                        if negate_rhs {
                            rhs = rhs.neg();
                        }
                        Ok(lhs == rhs)
                    })();
                    rep.record_result(id, res, || format!("{op} vs {conj} on {label}"));
                }
            }
        }
    }

    Ok(rep)
}

/// Two alternating words `iji…` and `jij…` of the rank-two braid relation.
pub fn alternating_words(g: &crate::root_system::WeylGroup, i: usize, j: usize) -> (Vec<usize>, Vec<usize>) {
    let mut u = Vec::new();
    let mut v = Vec::new();
    loop {
        let k = u.len();
        u.push(if k % 2 == 0 { i } else { j });
        v.push(if k % 2 == 0 { j } else { i });
        if g.eval_word(&u).ok() == g.eval_word(&v).ok() {
            return (u, v);
        }
    }
}

fn check_class<T: Theory>(
    rep: &mut VerificationReport,
    id: &str,
    got: Result<LocalizedClass<T>>,
    expected: impl FnOnce() -> LocalizedClass<T>,
    witness: impl FnOnce() -> String,
) {
    let r = got.map(|g| g == expected());
    rep.record_result(id, r, witness);
}

fn gkm_ok<T: Theory>(a: &LocalizedClass<T>) -> Result<bool> {
    Ok(a.gkm_check()?.is_none())
}

/// Actions of divided differences and simple reflections on Schubert and
/// fixed-point classes in cohomology, plus their GKM membership.
pub fn verify_schubert_actions_h(space: &Arc<FlagSpace>) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(format!("Schubert actions, H on {}", space.name()));
    let b = SchubertBasis::<H>::new(space, Side::B)?;
    let bm = SchubertBasis::<H>::new(space, Side::BMinus)?;
    let g = space.group();
    let n = space.npoints();
    let zero = LocalizedClass::<H>::zero(space);
    for i in 0..space.rank() {
        let alpha = root_form(&g.rs.simple_root(i));
        let delta = OperatorSpec::left(Family::Divided, i);
        for p in 0..n {
            let w = space.point(p);
            let sw = g.left_mul(i, w);
            let sw_pos = space.position(sw);
            let up = g.length(sw) > g.length(w);
            let lb = || schubert_label::<H>(space, Side::B, p);
            let lbm = || schubert_label::<H>(space, Side::BMinus, p);
            check_class(
                &mut rep,
                "left divided difference on opposite classes",
                delta.apply(bm.class(p)),
                || match (up, sw_pos) {
                    (false, Some(q)) => bm.class(q).clone(),
                    _ => zero.clone(),
                },
                || format!("{delta} on {}", lbm()),
            );
            check_class(
                &mut rep,
                "left divided difference on Schubert classes",
                delta.apply(b.class(p)),
                || match (up, sw_pos) {
                    (true, Some(q)) => b.class(q).neg(),
                    _ => zero.clone(),
                },
                || format!("{delta} on {}", lb()),
            );
            if space.is_full() {
                let ws = g.right_mul(w, i);
                let right_up = g.length(ws) > g.length(w);
                let d = OperatorSpec::right(Family::Divided, i);
                check_class(
                    &mut rep,
                    "right divided difference on Schubert classes",
                    d.apply(b.class(p)),
                    || if right_up { b.class(ws).clone() } else { zero.clone() },
                    || format!("{d} on {}", lb()),
                );
                check_class(
                    &mut rep,
                    "right divided difference on opposite classes",
                    d.apply(bm.class(p)),
                    || if right_up { zero.clone() } else { bm.class(ws).clone() },
                    || format!("{d} on {}", lbm()),
                );
                let s = OperatorSpec::left(Family::Weyl, i);
                check_class(
                    &mut rep,
                    "simple reflection on Schubert classes",
                    s.apply(b.class(p)),
                    || if up { b.class(p).add(&b.class(sw).scale_poly(&alpha)) } else { b.class(p).clone() },
                    || format!("{s} on {}", lb()),
                );
                let pt = LocalizedClass::<H>::fixed_point(space, p);
                check_class(
                    &mut rep,
                    "right s on fixed-point classes",
                    OperatorSpec::right(Family::Weyl, i).apply(&pt),
                    || LocalizedClass::fixed_point(space, ws).neg(),
                    || format!("s{}^R on [e_{}]", i + 1, g.label(w)),
                );
            }
            let pt = LocalizedClass::<H>::fixed_point(space, p);
            check_class(
                &mut rep,
                "left s on fixed-point classes",
                OperatorSpec::left(Family::Weyl, i).apply(&pt),
                || LocalizedClass::fixed_point(space, space.position_of_coset(sw)),
                || format!("s{}^L on [e_{}]", i + 1, g.label(w)),
            );
        }
    }
    gkm_and_duality(&mut rep, space, &b, &bm)?;
    Ok(rep)
}

/// K-theoretic counterpart of [`verify_schubert_actions_h`].
pub fn verify_schubert_actions_k(space: &Arc<FlagSpace>) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(format!("Schubert actions, K on {}", space.name()));
    let b = SchubertBasis::<K>::new(space, Side::B)?;
    let bm = SchubertBasis::<K>::new(space, Side::BMinus)?;
    let g = space.group();
    let n = space.npoints();
    let one = Poly::one();
    for i in 0..space.rank() {
        let e_minus = character(&negate(&g.rs.simple_root(i)));
        let delta = OperatorSpec::left(Family::Divided, i);
        let delta_v = OperatorSpec::left(Family::DividedDual, i);
        for p in 0..n {
            let w = space.point(p);
            let sw = g.left_mul(i, w);
            let up = g.length(sw) > g.length(w);
            let target = space.position_of_coset(sw);
            let lb = || schubert_label::<K>(space, Side::B, p);
            let lbm = || schubert_label::<K>(space, Side::BMinus, p);
            check_class(
                &mut rep,
                "left Demazure on Schubert classes",
                delta.apply(b.class(p)),
                || if up { b.class(target).clone() } else { b.class(p).clone() },
                || format!("{delta} on {}", lb()),
            );
            check_class(
                &mut rep,
                "dual left Demazure on opposite classes",
                delta_v.apply(bm.class(p)),
                || if up { bm.class(p).clone() } else { bm.class(target).clone() },
                || format!("{delta_v} on {}", lbm()),
            );
            if space.is_full() {
                let ws = g.right_mul(w, i);
                let right_up = g.length(ws) > g.length(w);
                let d = OperatorSpec::right(Family::Divided, i);
                check_class(
                    &mut rep,
                    "right Demazure on Schubert classes",
                    d.apply(b.class(p)),
                    || if right_up { b.class(ws).clone() } else { b.class(p).clone() },
                    || format!("{d} on {}", lb()),
                );
                check_class(
                    &mut rep,
                    "right Demazure on opposite classes",
                    d.apply(bm.class(p)),
                    || if right_up { bm.class(p).clone() } else { bm.class(ws).clone() },
                    || format!("{d} on {}", lbm()),
                );
                let s = OperatorSpec::left(Family::Weyl, i);
                check_class(
                    &mut rep,
                    "simple reflection on Schubert classes",
                    s.apply(b.class(p)),
                    || {
                        if up {
                            b.class(p).scale_poly(&e_minus).add(&b.class(sw).scale_poly(&one.sub(&e_minus)))
                        } else {
                            b.class(p).clone()
                        }
                    },
                    || format!("{s} on {}", lb()),
                );
                let pt = LocalizedClass::<K>::fixed_point(space, p);
                let coeff = character(&g.act(w, &g.rs.simple_root(i))).neg();
                check_class(
                    &mut rep,
                    "right s on fixed-point classes",
                    OperatorSpec::right(Family::Weyl, i).apply(&pt),
                    || LocalizedClass::fixed_point(space, ws).scale_poly(&coeff),
                    || format!("s{}^R on i_{}", i + 1, g.label(w)),
                );
            }
            let pt = LocalizedClass::<K>::fixed_point(space, p);
            check_class(
                &mut rep,
                "left s on fixed-point classes",
                OperatorSpec::left(Family::Weyl, i).apply(&pt),
                || LocalizedClass::fixed_point(space, target),
                || format!("s{}^L on i_{}", i + 1, g.label(w)),
            );
        }
        if space.is_full() {
            // ι_{sᵢ} = (1 − e^{−αᵢ})𝒪_{sᵢ} + e^{−αᵢ}𝒪_id
            let si = g.simple(i);
            let lhs = LocalizedClass::<K>::fixed_point(space, si);
            let rhs = b.class(si).scale_poly(&one.sub(&e_minus)).add(&b.class(0).scale_poly(&e_minus));
            rep.record("fixed point of a simple reflection in the Schubert basis", lhs == rhs, || format!("i = {}", i + 1));
        }
    }
    gkm_and_duality(&mut rep, space, &b, &bm)?;
    Ok(rep)
}

/// GKM membership of Schubert and fixed-point classes, and the Schubert
/// Gram matrix ⟨B_w, B⁻_u⟩: δ in H, [u ≤ w] in K.
fn gkm_and_duality<T: Theory>(
    rep: &mut VerificationReport,
    space: &Arc<FlagSpace>,
    b: &SchubertBasis<T>,
    bm: &SchubertBasis<T>,
) -> Result<()> {
    let n = space.npoints();
    for p in 0..n {
        for (side, basis) in [(Side::B, b), (Side::BMinus, bm)] {
            let c = basis.class(p);
            rep.record_result("Schubert classes satisfy the GKM conditions", gkm_ok(c), || schubert_label::<T>(space, side, p));
            let support_ok = (0..n).all(|q| {
                let comparable = match side {
                    Side::B => space.leq(q, p),
                    Side::BMinus => space.leq(p, q),
                };
                comparable || c.value(q).is_zero()
            }) && !c.value(p).is_zero();
            rep.record("Schubert classes are supported on their Schubert variety", support_ok, || {
                schubert_label::<T>(space, side, p)
            });
        }
        let pt = LocalizedClass::<T>::fixed_point(space, p);
        rep.record_result("fixed-point classes satisfy the GKM conditions", gkm_ok(&pt), || space.point_label(p));
    }
    for p in 0..n {
        for q in 0..n {
            let expected = match T::KIND {
                TheoryKind::H => p == q,
                TheoryKind::K => space.leq(q, p),
            };
            let r = b.class(p).pair(bm.class(q)).map(|v| v == if expected { Fraction::one() } else { Fraction::zero() });
            rep.record_result("Schubert Gram matrix is unitriangular", r, || {
                format!("<{}, {}>", schubert_label::<T>(space, Side::B, p), schubert_label::<T>(space, Side::BMinus, q))
            });
        }
    }
    Ok(())
}

/// Localization sanity checks: integrals of a few classes, the expansion
/// of every class in fixed-point classes, and push/pull compatibility.
pub fn verify_localization<T: Theory>(space: &Arc<FlagSpace>) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(format!("localization, {} on {}", T::KIND, space.name()));
    let b = SchubertBasis::<T>::new(space, Side::B)?;
    let n = space.npoints();
    // ∫[X_id] = 1 and ∫𝒪_{w₀} = χ(𝒪_X) = 1 (0 in H unless the space is a point).
    rep.record("integral of the point class is 1", b.class(0).integrate().is_one(), || "id".into());
    let top = b.class(n - 1).integrate();
    let expected = if T::KIND == TheoryKind::K || space.dim() == 0 { Fraction::one() } else { Fraction::zero() };
    rep.record("integral of the fundamental class", top == expected, || format!("got {top:?}"));
    for p in 0..n {
        let c = b.class(p);
        let r = c.localization_expansion().map(|e| e == *c);
        rep.record_result("localization expansion reproduces every class", r, || schubert_label::<T>(space, Side::B, p));
        let r = b.expand(c).map(|coeffs| (0..n).all(|q| coeffs[q] == if q == p { Fraction::one() } else { Fraction::zero() }));
        rep.record_result("Schubert expansion of a basis class is a unit vector", r, || schubert_label::<T>(space, Side::B, p));
    }
    if !space.is_full() {
        let full = space.full();
        let one_p = LocalizedClass::<T>::one(space);
        let pulled = one_p.pullback();
        rep.record("pullback of 1 is 1", pulled == LocalizedClass::one(&full), String::new);
        let push_one = LocalizedClass::<T>::one(&full).pushforward(space)?;
        for p in 0..n {
            let c = b.class(p);
            let r = c.pullback().pushforward(space).map(|x| x == c.mul(&push_one));
            rep.record_result("pushforward of a pullback multiplies by the pushforward of 1", r, || {
                schubert_label::<T>(space, Side::B, p)
            });
        }
        let fb = SchubertBasis::<T>::new(&full, Side::B)?;
        for w in 0..full.npoints() {
            let r = fb.class(w).pushforward(space).map(|x| match space.position(w) {
                Some(q) => x == *b.class(q),
                None => x.is_zero() || T::KIND == TheoryKind::K,
            });
            rep.record_result("pushforward of Schubert classes", r, || schubert_label::<T>(&full, Side::B, w));
        }
    }
    Ok(rep)
}

/// Every class of the trichotomy check: `UpFolds(j)` must satisfy sᵢw = wsⱼ.
pub fn verify_trichotomy(space: &Arc<FlagSpace>) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(format!("parabolic trichotomy on {}", space.name()));
    let g = space.group();
    for i in 0..space.rank() {
        for &w in space.points() {
            let t = space.parabolic().trichotomy(g, i, w)?;
            let sw = g.left_mul(i, w);
            let ok = match t {
                Trichotomy::Lower => g.length(sw) < g.length(w) && space.position(sw).is_some(),
                Trichotomy::UpMinimal => g.length(sw) > g.length(w) && space.position(sw).is_some(),
                Trichotomy::UpFolds(j) => {
                    space.parabolic().contains_simple(j) && sw == g.right_mul(w, j) && space.position(sw).is_none()
                }
            };
            rep.record("trichotomy cases", ok, || format!("i={} w={}", i + 1, g.label(w)));
        }
    }
    Ok(rep)
}

impl From<Error> for VerificationReport {
    fn from(e: Error) -> Self {
        let mut r = VerificationReport::new("error");
        r.record("suite ran", false, || e.to_string());
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_relations_hold_in_both_theories() {
        let s = FlagSpace::full_flag("A2").unwrap();
        let h = verify_relations::<H>(&s, &RelationOptions::default()).unwrap();
        assert!(h.passed(), "{h}");
        let k = verify_relations::<K>(&s, &RelationOptions::default()).unwrap();
        assert!(k.passed(), "{k}");
    }

    #[test]
    fn corrupted_operator_is_caught() {
        let s = FlagSpace::full_flag("A1").unwrap();
        let opts = RelationOptions { corrupt: Some((Hand::Right, Family::Dl)) };
        let r = verify_relations::<K>(&s, &opts).unwrap();
        assert!(!r.passed());
        let bad = r.failures().next().unwrap();
        assert!(bad.witness.as_ref().unwrap().contains("T1^R"));
    }

    #[test]
    fn schubert_actions_and_localization_on_small_spaces() {
        for s in [FlagSpace::full_flag("A2").unwrap(), FlagSpace::new("A3", &[0, 2]).unwrap()] {
            for r in [
                verify_schubert_actions_h(&s).unwrap(),
                verify_schubert_actions_k(&s).unwrap(),
                verify_localization::<H>(&s).unwrap(),
                verify_localization::<K>(&s).unwrap(),
                verify_trichotomy(&s).unwrap(),
            ] {
                assert!(r.passed(), "{r}");
            }
        }
    }
}

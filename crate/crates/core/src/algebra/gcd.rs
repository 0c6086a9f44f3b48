//! Multivariate gcd by recursive primitive polynomial remainder sequences.

use alloc::vec::Vec;

use super::poly::{Poly, TermOrder, MAX_VARS, ONE_MONO};

/// Greatest common divisor, normalized to leading coefficient 1.
///
/// In Laurent rings the result carries no monomial factor (monomials are
/// units there); in polynomial rings the common monomial factor is kept.
pub fn gcd<O: TermOrder>(a: &Poly<O>, b: &Poly<O>) -> Poly<O> {
    if a.is_zero() {
        return unit_normal(b);
    }
    if b.is_zero() {
        return unit_normal(a);
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    let (ma, pa) = a.split_monomial();
    let (mb, pb) = b.split_monomial();
    let mut common = ONE_MONO;
    if !O::LAURENT {
        for k in 0..MAX_VARS {
            common[k] = ma[k].min(mb[k]);
        }
    }
    gcd_primitive(&pa, &pb).shift(&common)
}

fn unit_normal<O: TermOrder>(p: &Poly<O>) -> Poly<O> {
    if O::LAURENT {
        p.split_monomial().1.monic()
    } else {
        p.monic()
    }
}

/// gcd of two nonzero polynomials without monomial content.
fn gcd_primitive<O: TermOrder>(a: &Poly<O>, b: &Poly<O>) -> Poly<O> {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a.len() <= b.len() {
        if b.div_exact(a).is_some() {
            return a.monic();
        }
    } else if a.div_exact(b).is_some() {
        return b.monic();
    }
    let va = a.variables();
    let vb = b.variables();
    for x in 0..MAX_VARS {
        if va[x] && !vb[x] {
            return gcd(&content_in(a, x), b);
        }
        if vb[x] && !va[x] {
            return gcd(a, &content_in(b, x));
        }
    }
    // Main variable: the shared one of smallest degree keeps the PRS short.
    let x = (0..MAX_VARS)
        .filter(|&x| va[x])
        .min_by_key(|&x| a.degree_in(x).max(b.degree_in(x)))
        .expect("non-constant polynomial has a variable");
    let ca = content_in(a, x);
    let cb = content_in(b, x);
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let (mut f, mut g) = if pa.degree_in(x) >= pb.degree_in(x) { (pa, pb) } else { (pb, pa) };
    // Subresultant remainder sequence: every remainder is divided by a known
    // factor, so no content has to be computed until the end.
    let mut lead = Poly::one();
    let mut h = Poly::one();
    loop {
        let delta = (f.degree_in(x) - g.degree_in(x)) as u32;
        let r = pseudo_remainder(&f, &g, x);
        if r.is_zero() {
            break;
        }
        if r.degree_in(x) == 0 {
            return c;
        }
        let divisor = lead.mul(&h.pow(delta));
        f = g;
        g = r.div_exact(&divisor).expect("subresultant factor divides");
        lead = leading_in(&f, x);
        h = if delta == 0 {
            h
        } else {
            lead.pow(delta).div_exact(&h.pow(delta - 1)).expect("subresultant factor divides")
        };
    }
    c.mul(&primitive_part(&g, x)).monic()
}

fn leading_in<O: TermOrder>(p: &Poly<O>, x: usize) -> Poly<O> {
    p.coefficients_in(x).pop().expect("nonzero polynomial")
}

/// gcd of the coefficients of `p` viewed as a polynomial in `x`.
pub fn content_in<O: TermOrder>(p: &Poly<O>, x: usize) -> Poly<O> {
    let mut coeffs: Vec<Poly<O>> = p.coefficients_in(x).into_iter().filter(|c| !c.is_zero()).collect();
    coeffs.sort_by_key(|c| c.len());
    let mut acc = Poly::zero();
    for c in &coeffs {
        acc = gcd(&acc, c);
        if acc.is_one() {
            break;
        }
    }
    acc
}

fn primitive_part<O: TermOrder>(p: &Poly<O>, x: usize) -> Poly<O> {
    let c = content_in(p, x);
    p.div_exact(&c).expect("content divides")
}

/// `lc(g)^(deg f − deg g + 1) · f mod g` in the variable `x`.
fn pseudo_remainder<O: TermOrder>(f: &Poly<O>, g: &Poly<O>, x: usize) -> Poly<O> {
    let gc = g.coefficients_in(x);
    let dg = gc.len() - 1;
    let lg = &gc[dg];
    let mut r = f.coefficients_in(x);
    let mut steps = r.len().saturating_sub(dg) as u32;
    while r.len() > dg && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = c.mul(lg);
        }
        for (k, gk) in gc.iter().enumerate() {
            let idx = k + dr - dg;
            r[idx] = r[idx].sub(&lr.mul(gk));
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        steps -= 1;
    }
    let rem = Poly::from_coefficients_in(x, &r);
    if steps > 0 && !rem.is_zero() {
        rem.mul(&lg.pow(steps))
    } else {
        rem
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::{GrLex, LatticeLex, Mono};
    use crate::algebra::rational::Rational;

    type H = Poly<GrLex>;
    type K = Poly<LatticeLex>;

    fn e(lambda: &[i32]) -> K {
        let mut m: Mono = ONE_MONO;
        m[..lambda.len()].copy_from_slice(lambda);
        K::monomial(m, Rational::one())
    }

    #[test]
    fn gcd_of_products_recovers_common_factor() {
        let a1 = H::var(0);
        let a2 = H::var(1);
        let h = H::var(2);
        let common = a1.add(&a2).mul(&h.add(&H::one()));
        let f = common.mul(&a1.sub(&h));
        let g = common.mul(&a2.add(&a1.scale(&Rational::from_int(3))));
        assert_eq!(gcd(&f, &g), common.monic());
        assert!(gcd(&a1, &a2).is_one());
        assert_eq!(gcd(&a1.mul(&a2), &a1.pow(2)), a1);
    }

    #[test]
    fn laurent_gcd_ignores_monomial_units() {
        let one = K::one();
        let f = one.sub(&e(&[2, 0]));
        let g = one.sub(&e(&[-1, 0])).mul(&e(&[0, 3]));
        assert_eq!(gcd(&f, &g), one.sub(&e(&[1])).monic());
        let y = K::var(2);
        let a = one.add(&y.mul(&e(&[1, 1])));
        let b = a.mul(&one.sub(&e(&[0, 1])));
        let c = a.mul(&one.add(&y));
        assert_eq!(gcd(&b, &c), a.monic());
    }
}

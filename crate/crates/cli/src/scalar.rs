//! Symbolic scalar serialization and rendering.
//!
//! Cohomology polynomials are lists of `{exponents, coeff}` with one exponent
//! per simple root followed by ħ. K-theory Laurent polynomials are lists of
//! `{lattice, y, coeff}`. A fraction with a non-trivial denominator is
//! `{num, den}`; coefficients are `"p/q"` strings.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use schubert_core::algebra::{Fraction, Mono, Poly, Rational};
use schubert_core::theory::{Theory, H, K};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HTerm {
    pub exponents: Vec<i32>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTerm {
    pub lattice: Vec<i32>,
    pub y: i32,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarDoc<Tm> {
    Fraction { num: Vec<Tm>, den: Vec<Tm> },
    Poly(Vec<Tm>),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Style {
    Plain,
    Latex,
}

/// Serialization and rendering for the scalars of one theory.
pub trait Codec: Theory {
    type Term: Clone + Serialize + DeserializeOwned;
    const NAME: &'static str;
    const QUANTUM_NAME: &'static str;

    fn encode_term(m: &Mono, c: &Rational, rank: usize) -> Self::Term;
    fn decode_term(t: &Self::Term, rank: usize) -> Result<(Mono, Rational), CliError>;
    /// The monomial part of one term, empty for the constant monomial.
    fn render_monomial(m: &Mono, rank: usize, style: Style) -> String;
}

fn parse_coeff(s: &str) -> Result<Rational, CliError> {
    s.parse().map_err(|e| CliError::Usage(format!("{e}")))
}

fn check_len(got: usize, want: usize, what: &str) -> Result<(), CliError> {
    if got != want {
        return Err(CliError::Usage(format!("{what} has {got} entries, expected {want}")));
    }
    Ok(())
}

fn power(base: &str, e: i32, style: Style) -> String {
    match (e, style) {
        (1, _) => base.to_string(),
        (_, Style::Plain) => format!("{base}^{e}"),
        (_, Style::Latex) => format!("{base}^{{{e}}}"),
    }
}

impl Codec for H {
    type Term = HTerm;
    const NAME: &'static str = "H";
    const QUANTUM_NAME: &'static str = "QH";

    fn encode_term(m: &Mono, c: &Rational, rank: usize) -> HTerm {
        HTerm { exponents: m[..=rank].to_vec(), coeff: c.to_fraction_string() }
    }

    fn decode_term(t: &HTerm, rank: usize) -> Result<(Mono, Rational), CliError> {
        check_len(t.exponents.len(), rank + 1, "exponent list")?;
        if t.exponents.iter().any(|&e| e < 0) {
            return Err(CliError::Usage("negative exponent in a cohomology scalar".into()));
        }
        let mut m = Mono::default();
        m[..=rank].copy_from_slice(&t.exponents);
        Ok((m, parse_coeff(&t.coeff)?))
    }

    fn render_monomial(m: &Mono, rank: usize, style: Style) -> String {
        let mut parts = Vec::new();
        for (k, &e) in m[..=rank].iter().enumerate() {
            if e == 0 {
                continue;
            }
            let base = match (k == rank, style) {
                (true, Style::Plain) => "h".to_string(),
                (true, Style::Latex) => "\\hbar".to_string(),
                (false, Style::Plain) => format!("a{}", k + 1),
                (false, Style::Latex) => format!("\\alpha_{{{}}}", k + 1),
            };
            parts.push(power(&base, e, style));
        }
        parts.join(if style == Style::Plain { "*" } else { " " })
    }
}

impl Codec for K {
    type Term = KTerm;
    const NAME: &'static str = "K";
    const QUANTUM_NAME: &'static str = "QK";

    fn encode_term(m: &Mono, c: &Rational, rank: usize) -> KTerm {
        KTerm { lattice: m[..rank].to_vec(), y: m[rank], coeff: c.to_fraction_string() }
    }

    fn decode_term(t: &KTerm, rank: usize) -> Result<(Mono, Rational), CliError> {
        check_len(t.lattice.len(), rank, "lattice vector")?;
        if t.y < 0 {
            return Err(CliError::Usage("negative power of y".into()));
        }
        let mut m = Mono::default();
        m[..rank].copy_from_slice(&t.lattice);
        m[rank] = t.y;
        Ok((m, parse_coeff(&t.coeff)?))
    }

    fn render_monomial(m: &Mono, rank: usize, style: Style) -> String {
        let mut weight = String::new();
        for (k, &e) in m[..rank].iter().enumerate() {
            if e == 0 {
                continue;
            }
            let root = match style {
                Style::Plain => format!("a{}", k + 1),
                Style::Latex => format!("\\alpha_{{{}}}", k + 1),
            };
            let sign = if e < 0 { "-" } else if weight.is_empty() { "" } else { "+" };
            let mag = e.abs();
            weight.push_str(sign);
            if mag != 1 {
                weight.push_str(&mag.to_string());
            }
            weight.push_str(&root);
        }
        let mut parts = Vec::new();
        if !weight.is_empty() {
            parts.push(match style {
                Style::Plain => format!("e^({weight})"),
                Style::Latex => format!("e^{{{weight}}}"),
            });
        }
        if m[rank] != 0 {
            parts.push(power("y", m[rank], style));
        }
        parts.join(if style == Style::Plain { "*" } else { " " })
    }
}

pub fn encode_poly<T: Codec>(p: &Poly<T::O>, rank: usize) -> Vec<T::Term> {
    p.terms().iter().map(|(m, c)| T::encode_term(m, c, rank)).collect()
}

pub fn decode_poly<T: Codec>(terms: &[T::Term], rank: usize) -> Result<Poly<T::O>, CliError> {
    let terms: Vec<(Mono, Rational)> = terms.iter().map(|t| T::decode_term(t, rank)).collect::<Result<_, _>>()?;
    Ok(Poly::from_terms(terms))
}

pub fn encode<T: Codec>(f: &Fraction<T::O>, rank: usize) -> ScalarDoc<T::Term> {
    match f.as_poly() {
        Some(p) => ScalarDoc::Poly(encode_poly::<T>(p, rank)),
        None => ScalarDoc::Fraction { num: encode_poly::<T>(f.num(), rank), den: encode_poly::<T>(f.den(), rank) },
    }
}

pub fn decode<T: Codec>(d: &ScalarDoc<T::Term>, rank: usize) -> Result<Fraction<T::O>, CliError> {
    match d {
        ScalarDoc::Poly(p) => Ok(decode_poly::<T>(p, rank)?.into()),
        ScalarDoc::Fraction { num, den } => {
            Fraction::new(decode_poly::<T>(num, rank)?, decode_poly::<T>(den, rank)?).map_err(|e| CliError::Usage(e.to_string()))
        }
    }
}

pub fn render_poly<T: Codec>(p: &Poly<T::O>, rank: usize, style: Style) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = T::render_monomial(m, rank, style);
        let coeff = match style {
            Style::Latex if !a.is_integer() => format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom()),
            _ => a.to_fraction_string(),
        };
        if mono.is_empty() {
            out.push_str(&coeff);
        } else {
            if !a.is_one() {
                out.push_str(&coeff);
                out.push_str(if style == Style::Plain { "*" } else { " " });
            }
            out.push_str(&mono);
        }
    }
    out
}

pub fn render<T: Codec>(f: &Fraction<T::O>, rank: usize, style: Style) -> String {
    match f.as_poly() {
        Some(p) => render_poly::<T>(p, rank, style),
        None => {
            let (n, d) = (render_poly::<T>(f.num(), rank, style), render_poly::<T>(f.den(), rank, style));
            match style {
                Style::Plain => format!("({n})/({d})"),
                Style::Latex => format!("\\frac{{{n}}}{{{d}}}"),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use schubert_core::theory::{character, root_form, y_var};

    fn lat(v: &[i32]) -> schubert_core::root_system::Lattice {
        let mut out = [0; schubert_core::root_system::MAX_RANK];
        out[..v.len()].copy_from_slice(v);
        out
    }

    #[test]
    fn cohomology_round_trip_and_rendering() {
        let p = Poly::one().add(&root_form(&lat(&[1, -2])).scale(&Rational::new(3, 2)));
        let f = Fraction::new(p.clone(), Poly::one().add(&root_form(&lat(&[0, 1])))).unwrap();
        let doc = encode::<H>(&f, 2);
        let json = serde_json::to_string(&doc).unwrap();
        let back: ScalarDoc<HTerm> = serde_json::from_str(&json).unwrap();
        assert_eq!(decode::<H>(&back, 2).unwrap(), f);
        assert_eq!(render_poly::<H>(&root_form(&lat(&[1])), 2, Style::Latex), "\\alpha_{1}");
        let pd = encode::<H>(&p.clone().into(), 2);
        assert!(matches!(pd, ScalarDoc::Poly(_)));
    }

    #[test]
    fn k_round_trip_and_rendering() {
        let p = character(&lat(&[1, -1])).mul(&y_var(2)).sub(&Poly::from_int(2));
        let f = Fraction::new(p, Poly::one().sub(&character(&lat(&[0, 1])))).unwrap();
        let json = serde_json::to_string(&encode::<K>(&f, 2)).unwrap();
        let back: ScalarDoc<KTerm> = serde_json::from_str(&json).unwrap();
        assert_eq!(decode::<K>(&back, 2).unwrap(), f);
        let e = character(&lat(&[1, -1])).mul(&y_var(2));
        assert_eq!(render_poly::<K>(&e, 2, Style::Latex), "e^{\\alpha_{1}-\\alpha_{2}} y");
        assert_eq!(render_poly::<K>(&e, 2, Style::Plain), "e^(a1-a2)*y");
    }

    #[test]
    fn malformed_scalars_are_rejected() {
        let bad = ScalarDoc::Poly(vec![HTerm { exponents: vec![1], coeff: "1".into() }]);
        assert!(decode::<H>(&bad, 2).is_err());
        let bad = ScalarDoc::Poly(vec![HTerm { exponents: vec![1, 0, 0], coeff: "1/0".into() }]);
        assert!(decode::<H>(&bad, 2).is_err());
    }
}

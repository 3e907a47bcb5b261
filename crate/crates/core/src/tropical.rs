//! Max-plus arithmetic, tropical polynomials and their zero loci.
//!
//! Conventions: `a ⊕ b = max(a, b)`, `a ⊙ b = a + b`, and `-inf` is the
//! additive identity. A tropical polynomial is evaluated as
//! `max_a (phi_a + <x, a>)`; its zero locus is where that maximum is
//! attained at least twice.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::KPoly;
use crate::valfield::{parse_rat, render_rat, Rat};

/// A tropical number: a rational or `-inf`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TropVal {
    NegInf,
    Fin(Rat),
}

impl TropVal {
    pub fn zero() -> Self {
        TropVal::NegInf
    }

    pub fn one() -> Self {
        TropVal::Fin(Rat::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TropVal::Fin(_))
    }

    pub fn finite(&self) -> Option<&Rat> {
        match self {
            TropVal::Fin(r) => Some(r),
            TropVal::NegInf => None,
        }
    }

    /// `⊕`
    pub fn oplus(&self, other: &Self) -> Self {
        std::cmp::max(self, other).clone()
    }

    /// `⊙`
    pub fn odot(&self, other: &Self) -> Self {
        match (self, other) {
            (TropVal::Fin(a), TropVal::Fin(b)) => TropVal::Fin(a + b),
            _ => TropVal::NegInf,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-inf" || s == "−∞" || s == "-∞" {
            Ok(TropVal::NegInf)
        } else {
            parse_rat(s).map(TropVal::Fin)
        }
    }
}

impl PartialOrd for TropVal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for TropVal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (TropVal::NegInf, TropVal::NegInf) => Ordering::Equal,
            (TropVal::NegInf, _) => Ordering::Less,
            (_, TropVal::NegInf) => Ordering::Greater,
            (TropVal::Fin(a), TropVal::Fin(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for TropVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropVal::NegInf => f.write_str("-inf"),
            TropVal::Fin(r) => f.write_str(&render_rat(r)),
        }
    }
}

impl Serialize for TropVal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TropVal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        TropVal::parse(&s).map_err(serde::de::Error::custom)
    }
}

impl From<Rat> for TropVal {
    fn from(r: Rat) -> Self {
        TropVal::Fin(r)
    }
}

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExpVec(pub Vec<u32>);

impl ExpVec {
    pub fn new(v: Vec<u32>) -> Self {
        ExpVec(v)
    }

    pub fn zeros(nvars: usize) -> Self {
        ExpVec(vec![0; nvars])
    }

    /// The exponent of the `i`-th variable.
    pub fn unit(nvars: usize, i: usize) -> Self {
        let mut v = vec![0; nvars];
        v[i] = 1;
        ExpVec(v)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `<omega, a>`
    pub fn dot(&self, omega: &[Rat]) -> Rat {
        self.0
            .iter()
            .zip(omega)
            .filter(|(a, _)| **a != 0)
            .fold(Rat::zero(), |acc, (a, w)| acc + w * Rat::from_integer((*a).into()))
    }
}

impl fmt::Display for ExpVec {
    /// Renders as a monomial `x0^2*x1`; the constant monomial is `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| if *e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// A tropical polynomial with finitely many finite coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropPoly {
    nvars: usize,
    terms: BTreeMap<ExpVec, Rat>,
}

impl TropPoly {
    pub fn null(nvars: usize) -> Self {
        TropPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (ExpVec, TropVal)>) -> Result<Self> {
        let mut p = Self::null(nvars);
        for (e, c) in terms {
            p.set(e, c)?;
        }
        Ok(p)
    }

    /// Sets a coefficient; `-inf` removes the term.
    pub fn set(&mut self, e: ExpVec, c: TropVal) -> Result<()> {
        if e.nvars() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: e.nvars() });
        }
        match c {
            TropVal::NegInf => {
                self.terms.remove(&e);
            }
            TropVal::Fin(r) => {
                self.terms.insert(e, r);
            }
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_null(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Rat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &ExpVec) -> TropVal {
        self.terms.get(e).cloned().map_or(TropVal::NegInf, TropVal::Fin)
    }

    fn check_dim(&self, omega: &[Rat]) -> Result<()> {
        if omega.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: omega.len() });
        }
        Ok(())
    }

    pub fn eval(&self, omega: &[Rat]) -> Result<TropVal> {
        self.check_dim(omega)?;
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| c + e.dot(omega))
            .max()
            .map_or(TropVal::NegInf, TropVal::Fin))
    }

    /// Exponents attaining the maximum at `omega`.
    pub fn argmax_terms(&self, omega: &[Rat]) -> Result<Vec<ExpVec>> {
        self.check_dim(omega)?;
        if self.is_null() {
            return Err(Error::EmptyPolynomial);
        }
        let values: Vec<(&ExpVec, Rat)> = self.terms.iter().map(|(e, c)| (e, c + e.dot(omega))).collect();
        let best = values.iter().map(|(_, v)| v).max().cloned().expect("non-null");
        Ok(values.into_iter().filter(|(_, v)| *v == best).map(|(e, _)| e.clone()).collect())
    }

    pub fn in_zero_locus(&self, omega: &[Rat]) -> Result<bool> {
        if self.is_null() {
            self.check_dim(omega)?;
            return Ok(true);
        }
        Ok(self.argmax_terms(omega)?.len() >= 2)
    }

    /// Tropical product (Minkowski sum of supports, max-plus convolution).
    pub fn odot(&self, other: &Self) -> Self {
        let mut out = Self::null(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e = a.add(b);
                let v = ca + cb;
                let entry = out.terms.entry(e).or_insert_with(|| v.clone());
                if v > *entry {
                    *entry = v;
                }
            }
        }
        out
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_json_terms()).expect("serializable")
    }

    pub fn to_json_terms(&self) -> Vec<TropTermJson> {
        self.terms
            .iter()
            .map(|(e, c)| TropTermJson { exp: e.0.clone(), coef: TropVal::Fin(c.clone()) })
            .collect()
    }

    pub fn from_json_terms(nvars: usize, terms: &[TropTermJson]) -> Result<Self> {
        Self::from_terms(nvars, terms.iter().map(|t| (ExpVec(t.exp.clone()), t.coef.clone())))
    }
}

impl fmt::Display for TropPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_null() {
            return f.write_str("-inf");
        }
        let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("{}⊙{}", render_rat(c), e)).collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// JSON term of a tropical polynomial: `{"exp": [..], "coef": "p/q" | "-inf"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TropTermJson {
    pub exp: Vec<u32>,
    pub coef: TropVal,
}

/// Coefficientwise tropicalization `tau(f)`.
pub fn tropicalize_poly(f: &KPoly) -> TropPoly {
    let mut p = TropPoly::null(f.nvars());
    for (e, c) in f.terms() {
        // KPoly never stores zero coefficients
        let tau = c.tropicalize().expect("nonzero coefficient");
        p.terms.insert(e.clone(), tau);
    }
    p
}

/// A point of tropical projective space in chart form: the first finite
/// coordinate is `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TropProjPoint(Vec<TropVal>);

impl TropProjPoint {
    pub fn coords(&self) -> &[TropVal] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for TropProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(" : "))
    }
}

pub fn proj_normalize(coords: &[TropVal]) -> Result<TropProjPoint> {
    let base = coords.iter().find_map(|c| c.finite()).cloned().ok_or(Error::InvalidProjectivePoint)?;
    Ok(TropProjPoint(
        coords
            .iter()
            .map(|c| match c {
                TropVal::Fin(r) => TropVal::Fin(r - &base),
                TropVal::NegInf => TropVal::NegInf,
            })
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valfield::{rat, rat_int};

    fn e(v: &[u32]) -> ExpVec {
        ExpVec(v.to_vec())
    }

    fn fin(n: i64) -> TropVal {
        TropVal::Fin(rat_int(n))
    }

    fn pt(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    fn line_with_shift() -> TropPoly {
        TropPoly::from_terms(2, [(e(&[1, 0]), fin(0)), (e(&[0, 1]), fin(-1))]).unwrap()
    }

    #[test]
    fn eval_examples() {
        let phi = TropPoly::from_terms(2, [(e(&[1, 0]), fin(0)), (e(&[0, 1]), fin(0))]).unwrap();
        assert_eq!(phi.eval(&pt(&[3, 5])).unwrap(), fin(5));
        assert_eq!(line_with_shift().eval(&pt(&[0, 1])).unwrap(), fin(0));
        assert_eq!(TropPoly::null(2).eval(&pt(&[7, 1])).unwrap(), TropVal::NegInf);
        assert!(matches!(phi.eval(&pt(&[1])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn argmax_examples() {
        let phi = line_with_shift();
        assert_eq!(phi.argmax_terms(&pt(&[0, 1])).unwrap().len(), 2);
        assert_eq!(phi.argmax_terms(&pt(&[0, 0])).unwrap(), vec![e(&[1, 0])]);
        let tri = TropPoly::from_terms(3, [(e(&[1, 0, 0]), fin(0)), (e(&[0, 1, 0]), fin(0)), (e(&[0, 0, 1]), fin(0))])
            .unwrap();
        assert_eq!(tri.argmax_terms(&pt(&[0, 0, 0])).unwrap().len(), 3);
        assert_eq!(TropPoly::null(2).argmax_terms(&pt(&[0, 0])), Err(Error::EmptyPolynomial));
    }

    #[test]
    fn zero_locus_examples() {
        let tri = TropPoly::from_terms(3, [(e(&[1, 0, 0]), fin(0)), (e(&[0, 1, 0]), fin(0)), (e(&[0, 0, 1]), fin(0))])
            .unwrap();
        assert!(tri.in_zero_locus(&pt(&[0, 0, 0])).unwrap());
        assert!(!line_with_shift().in_zero_locus(&pt(&[0, 0])).unwrap());
        assert!(TropPoly::null(2).in_zero_locus(&pt(&[4, -2])).unwrap());
    }

    #[test]
    fn neg_inf_coefficients_are_dropped() {
        let p = TropPoly::from_terms(2, [(e(&[1, 0]), TropVal::NegInf), (e(&[0, 1]), fin(2))]).unwrap();
        assert_eq!(p.terms().count(), 1);
        assert_eq!(p.coefficient(&e(&[1, 0])), TropVal::NegInf);
    }

    #[test]
    fn projective_normalization() {
        assert_eq!(proj_normalize(&[fin(3), fin(5), fin(4)]).unwrap().coords(), &[fin(0), fin(2), fin(1)]);
        assert_eq!(
            proj_normalize(&[TropVal::NegInf, fin(2), fin(2)]).unwrap().coords(),
            &[TropVal::NegInf, fin(0), fin(0)]
        );
        let zeros = vec![fin(0); 15];
        assert_eq!(proj_normalize(&zeros).unwrap().coords(), zeros.as_slice());
        assert_eq!(proj_normalize(&[TropVal::NegInf, TropVal::NegInf]), Err(Error::InvalidProjectivePoint));
    }

    #[test]
    fn json_terms_roundtrip() {
        let p = TropPoly::from_terms(2, [(e(&[2, 0]), TropVal::Fin(rat(-1, 2))), (e(&[0, 2]), fin(3))]).unwrap();
        let s = serde_json::to_string(&p.to_json_terms()).unwrap();
        assert_eq!(s, r#"[{"exp":[0,2],"coef":"3"},{"exp":[2,0],"coef":"-1/2"}]"#);
        let back: Vec<TropTermJson> = serde_json::from_str(&s).unwrap();
        assert_eq!(TropPoly::from_json_terms(2, &back).unwrap(), p);
        let with_inf: Vec<TropTermJson> = serde_json::from_str(r#"[{"exp":[1,1],"coef":"-inf"}]"#).unwrap();
        assert!(TropPoly::from_json_terms(2, &with_inf).unwrap().is_null());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn tv() -> impl Strategy<Value = TropVal> {
            prop_oneof![
                1 => Just(TropVal::NegInf),
                6 => (-20i64..20, 1i64..5).prop_map(|(n, d)| TropVal::Fin(rat(n, d))),
            ]
        }

        proptest! {
            #[test]
            fn semiring_laws(a in tv(), b in tv(), c in tv()) {
                prop_assert_eq!(a.oplus(&b), b.oplus(&a));
                prop_assert_eq!(a.odot(&b), b.odot(&a));
                prop_assert_eq!(a.oplus(&b).oplus(&c), a.oplus(&b.oplus(&c)));
                prop_assert_eq!(a.odot(&b).odot(&c), a.odot(&b.odot(&c)));
                prop_assert_eq!(a.odot(&b.oplus(&c)), a.odot(&b).oplus(&a.odot(&c)));
                prop_assert_eq!(a.oplus(&TropVal::zero()), a.clone());
                prop_assert_eq!(a.odot(&TropVal::one()), a.clone());
                prop_assert_eq!(a.odot(&TropVal::zero()), TropVal::NegInf);
            }

            #[test]
            fn zero_locus_is_projectively_invariant(
                coefs in proptest::collection::vec(-6i64..6, 6),
                w in proptest::collection::vec(-4i64..4, 3),
                lambda in -5i64..5,
            ) {
                let mons = [[2, 0, 0], [0, 2, 0], [0, 0, 2], [0, 1, 1], [1, 0, 1], [1, 1, 0]];
                let phi = TropPoly::from_terms(3, mons.iter().zip(&coefs).map(|(m, c)| (e(m), fin(*c)))).unwrap();
                let omega = pt(&w);
                let shifted: Vec<Rat> = omega.iter().map(|x| x + rat_int(lambda)).collect();
                prop_assert_eq!(phi.in_zero_locus(&omega).unwrap(), phi.in_zero_locus(&shifted).unwrap());
            }
        }
    }
}

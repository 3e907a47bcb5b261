//! Homogeneous polynomials over `K`, graded components of ideals, Hilbert
//! functions and Plücker coordinates.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::numpoly::{binom_u, decompose, fit_eventual_polynomial, MVector};
use crate::tropical::{ExpVec, TropVal};
use crate::valfield::PuiseuxRat;

/// A polynomial in `nvars` variables over `K`. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KPoly {
    nvars: usize,
    terms: BTreeMap<ExpVec, PuiseuxRat>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTermJson {
    pub exp: Vec<u32>,
    pub coef: PuiseuxRat,
}

impl KPoly {
    pub fn zero(nvars: usize) -> Self {
        KPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn monomial(e: ExpVec, c: PuiseuxRat) -> Self {
        let mut p = KPoly::zero(e.nvars());
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (ExpVec, PuiseuxRat)>) -> Result<Self> {
        let mut p = KPoly::zero(nvars);
        for (e, c) in terms {
            if e.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: e.nvars() });
            }
            p.add_term(e, &c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: ExpVec, c: &PuiseuxRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(old) => {
                let s = &*old + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &PuiseuxRat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &ExpVec) -> PuiseuxRat {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    /// The common degree of all terms, if there is one.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(ExpVec::degree);
        let d = degs.next()?;
        degs.all(|x| x == d).then_some(d)
    }

    pub fn scale(&self, c: &PuiseuxRat) -> Self {
        let mut p = KPoly::zero(self.nvars);
        if !c.is_zero() {
            p.terms = self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect();
        }
        p
    }

    pub fn mul_monomial(&self, m: &ExpVec) -> Self {
        KPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, a)| (e.add(m), a.clone())).collect() }
    }

    /// Substitutes `t -> t^k` in every coefficient.
    pub fn substitute_power(&self, k: u64) -> Self {
        KPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a.substitute_power(k))).collect(),
        }
    }

    /// Coordinates in the given monomial list; fails if a term is missing.
    pub fn coordinates(&self, index: &HashMap<ExpVec, usize>, len: usize) -> Result<Vec<PuiseuxRat>> {
        let mut v = vec![PuiseuxRat::zero(); len];
        for (e, c) in &self.terms {
            let &i = index.get(e).ok_or_else(|| Error::InvalidInput(format!("monomial {e} outside the basis")))?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn from_coordinates(monomials: &[ExpVec], coords: &[PuiseuxRat]) -> Self {
        let nvars = monomials.first().map_or(0, ExpVec::nvars);
        let mut p = KPoly::zero(nvars);
        for (e, c) in monomials.iter().zip(coords) {
            p.add_term(e.clone(), c);
        }
        p
    }

    pub fn to_json_terms(&self) -> Vec<KTermJson> {
        self.terms.iter().map(|(e, c)| KTermJson { exp: e.0.clone(), coef: c.clone() }).collect()
    }

    pub fn from_json_terms(nvars: usize, terms: &[KTermJson]) -> Result<Self> {
        KPoly::from_terms(nvars, terms.iter().map(|t| (ExpVec::new(t.exp.clone()), t.coef.clone())))
    }

    /// Parses a sum of terms such as `(1 + t)*x0^2 - t^-1*x1*x2 + 3/2*x2^2`.
    /// Factors of a term are separated by `*`; a factor that is not a
    /// variable power is a coefficient in the syntax of [`PuiseuxRat`].
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        let mut terms: Vec<(bool, String)> = Vec::new();
        let (mut depth, mut cur, mut negative, mut prev) = (0i32, String::new(), false, ' ');
        for ch in s.chars() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 && prev != '^' && prev != '*' => {
                    if cur.trim().is_empty() {
                        negative ^= ch == '-';
                    } else {
                        terms.push((negative, std::mem::take(&mut cur)));
                        negative = ch == '-';
                    }
                    prev = ch;
                    continue;
                }
                _ => {}
            }
            if depth < 0 {
                return Err(Error::Parse(format!("unbalanced parentheses in `{s}`")));
            }
            cur.push(ch);
            if !ch.is_whitespace() {
                prev = ch;
            }
        }
        if depth != 0 {
            return Err(Error::Parse(format!("unbalanced parentheses in `{s}`")));
        }
        if cur.trim().is_empty() {
            return Err(Error::Parse(format!("missing term in `{s}`")));
        }
        terms.push((negative, cur));
        let mut p = KPoly::zero(nvars);
        for (negative, term) in terms {
            let mut exp = vec![0u32; nvars];
            let mut coef = if negative { -PuiseuxRat::one() } else { PuiseuxRat::one() };
            for factor in split_factors(&term) {
                let f = factor.trim();
                if let Some((i, k)) = parse_variable_power(f)? {
                    if i >= nvars {
                        return Err(Error::Parse(format!("variable x{i} out of range for {nvars} variables")));
                    }
                    exp[i] += k;
                } else {
                    let inner = f.strip_prefix('(').and_then(|g| g.strip_suffix(')')).unwrap_or(f);
                    coef = &coef * &inner.parse::<PuiseuxRat>()?;
                }
            }
            p.add_term(ExpVec::new(exp), &coef);
        }
        Ok(p)
    }
}

fn split_factors(term: &str) -> Vec<String> {
    let (mut out, mut cur, mut depth) = (Vec::new(), String::new(), 0i32);
    for ch in term.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur);
    out
}

/// `x3^2` gives `(3, 2)`; anything not starting with `x` gives nothing.
fn parse_variable_power(f: &str) -> Result<Option<(usize, u32)>> {
    let Some(rest) = f.strip_prefix('x') else { return Ok(None) };
    let (idx, pow) = rest.split_once('^').unwrap_or((rest, "1"));
    let bad = || Error::Parse(format!("bad variable power `{f}`"));
    Ok(Some((idx.trim().parse().map_err(|_| bad())?, pow.trim().parse().map_err(|_| bad())?)))
}

impl Add for &KPoly {
    type Output = KPoly;
    fn add(self, rhs: &KPoly) -> KPoly {
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), c);
        }
        p
    }
}

impl Sub for &KPoly {
    type Output = KPoly;
    fn sub(self, rhs: &KPoly) -> KPoly {
        let mut p = self.clone();
        for (e, c) in &rhs.terms {
            p.add_term(e.clone(), &-c);
        }
        p
    }
}

impl Mul for &KPoly {
    type Output = KPoly;
    fn mul(self, rhs: &KPoly) -> KPoly {
        let mut p = KPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                p.add_term(e1.add(e2), &(c1 * c2));
            }
        }
        p
    }
}

impl fmt::Display for KPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest monomial first
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let constant = e.degree() == 0;
            match (c.is_one(), constant) {
                (true, false) => write!(f, "{e}")?,
                (_, true) => write!(f, "({c})")?,
                (false, false) => write!(f, "({c})*{e}")?,
            }
        }
        Ok(())
    }
}

/// A homogeneous ideal of `K[x_0, ..., x_n]` given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdeal {
    n: usize,
    generators: Vec<KPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub generators: Vec<Vec<KTermJson>>,
}

impl GradedIdeal {
    /// `n` is the projective dimension; generators live in `n + 1` variables.
    pub fn new(n: usize, generators: Vec<KPoly>) -> Result<Self> {
        for g in &generators {
            if g.nvars() != n + 1 {
                return Err(Error::DimensionMismatch { expected: n + 1, found: g.nvars() });
            }
            if g.is_zero() {
                return Err(Error::InvalidInput("zero generator".into()));
            }
            if g.homogeneous_degree().is_none() {
                return Err(Error::InvalidInput(format!("generator {g} is not homogeneous")));
            }
        }
        Ok(GradedIdeal { n, generators })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.n + 1
    }

    pub fn generators(&self) -> &[KPoly] {
        &self.generators
    }

    pub fn substitute_power(&self, k: u64) -> Self {
        GradedIdeal { n: self.n, generators: self.generators.iter().map(|g| g.substitute_power(k)).collect() }
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson { n: self.n, generators: self.generators.iter().map(KPoly::to_json_terms).collect() }
    }

    pub fn from_json(j: &IdealJson) -> Result<Self> {
        let gens = j.generators.iter().map(|g| KPoly::from_json_terms(j.n + 1, g)).collect::<Result<_>>()?;
        GradedIdeal::new(j.n, gens)
    }

    pub fn parse_json(s: &str) -> Result<Self> {
        let j: IdealJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        GradedIdeal::from_json(&j)
    }
}

/// All monomials of degree `d` in `nvars` variables in canonical order.
///
/// Three variables in degree 2 use the fixed order
/// `x0^2, x1^2, x2^2, x1x2, x0x2, x0x1`; everything else is graded lex with
/// `x0 > x1 > ...`.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<ExpVec> {
    if nvars == 3 && d == 2 {
        return [[2, 0, 0], [0, 2, 0], [0, 0, 2], [0, 1, 1], [1, 0, 1], [1, 1, 0]]
            .iter()
            .map(|e| ExpVec::new(e.to_vec()))
            .collect();
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fill(&mut out, &mut cur, 0, d);
    out
}

fn fill(out: &mut Vec<ExpVec>, cur: &mut Vec<u32>, i: usize, left: u32) {
    if i + 1 >= cur.len() {
        if let Some(last) = cur.last_mut() {
            *last = left;
            out.push(ExpVec::new(cur.clone()));
        } else if left == 0 {
            out.push(ExpVec::new(Vec::new()));
        }
        return;
    }
    for a in (0..=left).rev() {
        cur[i] = a;
        fill(out, cur, i + 1, left - a);
    }
    cur[i] = 0;
}

pub fn dim_s(nvars: usize, d: u32) -> usize {
    if nvars == 0 {
        return usize::from(d == 0);
    }
    binom_u((nvars - 1) as u64 + d as u64, (nvars - 1) as u64) as usize
}

pub fn monomial_index(monomials: &[ExpVec]) -> HashMap<ExpVec, usize> {
    monomials.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect()
}

/// A basis of a degree-`d` subspace of `S_d`, as coordinate rows in the
/// canonical monomials of degree `d`. Rows are independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentBasis {
    pub degree: u32,
    pub monomials: Vec<ExpVec>,
    pub rows: Matrix<PuiseuxRat>,
}

impl ComponentBasis {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn polynomials(&self) -> Vec<KPoly> {
        self.rows.iter().map(|r| KPoly::from_coordinates(&self.monomials, r)).collect()
    }
}

/// Spanning polynomials of `I_d`: all `x^b * g` with `deg g <= d`.
pub fn spanning_set(ideal: &GradedIdeal, d: u32) -> Vec<KPoly> {
    let nvars = ideal.nvars();
    let mut out = Vec::new();
    for g in ideal.generators() {
        let e = g.homogeneous_degree().expect("homogeneous generator");
        if e > d {
            continue;
        }
        for m in monomials_of_degree(nvars, d - e) {
            out.push(g.mul_monomial(&m));
        }
    }
    out
}

pub fn component_basis(ideal: &GradedIdeal, d: u32) -> ComponentBasis {
    let monomials = monomials_of_degree(ideal.nvars(), d);
    let index = monomial_index(&monomials);
    let rows: Matrix<PuiseuxRat> = spanning_set(ideal, d)
        .iter()
        .map(|p| p.coordinates(&index, monomials.len()).expect("degree-d product"))
        .collect();
    let (rows, _) = linalg::echelon(rows);
    ComponentBasis { degree: d, monomials, rows }
}

pub fn hilbert_function(ideal: &GradedIdeal, d: u32) -> usize {
    dim_s(ideal.nvars(), d) - component_basis(ideal, d).dim()
}

/// Hilbert polynomial of `ideal` as the data `(m_0, ..., m_s)`.
pub fn fit_hilbert_polynomial(ideal: &GradedIdeal, d_max: u32) -> Result<MVector> {
    let p = fit_eventual_polynomial(|d| Ok(hilbert_function(ideal, d) as i64), ideal.n(), 0, d_max)?;
    decompose(&p)
}

/// `(I : f)_d`, the degree-`d` polynomials `g` with `g f` in `I`.
pub fn colon_component(ideal: &GradedIdeal, f: &KPoly, d: u32) -> Result<ComponentBasis> {
    let e = f
        .homogeneous_degree()
        .ok_or_else(|| Error::InvalidInput("colon needs a nonzero homogeneous polynomial".into()))?;
    if f.nvars() != ideal.nvars() {
        return Err(Error::DimensionMismatch { expected: ideal.nvars(), found: f.nvars() });
    }
    let target = component_basis(ideal, d + e);
    let tindex = monomial_index(&target.monomials);
    let monomials = monomials_of_degree(ideal.nvars(), d);
    let mut stacked: Matrix<PuiseuxRat> = monomials
        .iter()
        .map(|m| f.mul_monomial(m).coordinates(&tindex, target.monomials.len()))
        .collect::<Result<_>>()?;
    stacked.extend(target.rows.iter().cloned());
    let kernel = linalg::left_kernel(&stacked);
    let rows = kernel.into_iter().map(|c| c[..monomials.len()].to_vec()).collect();
    let (rows, _) = linalg::echelon(rows);
    Ok(ComponentBasis { degree: d, monomials, rows })
}

/// Plücker coordinates: maximal minors in lexicographic column order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlueckerVector {
    pub k: usize,
    pub ncols: usize,
    pub coords: Vec<PuiseuxRat>,
}

impl PlueckerVector {
    pub fn tropicalize(&self) -> Vec<TropVal> {
        self.coords
            .iter()
            .map(|c| match c.tropicalize() {
                Ok(r) => TropVal::Fin(r),
                Err(_) => TropVal::NegInf,
            })
            .collect()
    }

    /// Whether the two vectors agree up to a nonzero scalar.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        if self.coords.len() != other.coords.len() {
            return false;
        }
        let Some(i) = self.coords.iter().position(|c| !c.is_zero()) else { return false };
        if other.coords[i].is_zero() {
            return false;
        }
        let lambda = other.coords[i].checked_div(&self.coords[i]).expect("nonzero");
        self.coords.iter().zip(&other.coords).all(|(a, b)| (a * &lambda) == *b)
    }
}

/// `k`-element subsets of `0..n` in lexicographic order.
pub fn lex_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

pub fn wedge_coordinates(rows: &Matrix<PuiseuxRat>) -> Result<PlueckerVector> {
    let k = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::InvalidInput("ragged matrix".into()));
    }
    if k > ncols {
        return Err(Error::DegenerateInput(format!("{k} rows in dimension {ncols}")));
    }
    let coords: Vec<PuiseuxRat> = lex_subsets(ncols, k)
        .iter()
        .map(|cols| linalg::det(rows.iter().map(|r| cols.iter().map(|&j| r[j].clone()).collect()).collect()))
        .collect();
    if coords.iter().all(PuiseuxRat::is_zero) {
        return Err(Error::DegenerateInput("rows are linearly dependent".into()));
    }
    Ok(PlueckerVector { k, ncols, coords })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numpoly::g_eval;
    use num_bigint::BigInt;

    fn kp(nvars: usize, terms: &[(&[u32], &str)]) -> KPoly {
        KPoly::from_terms(nvars, terms.iter().map(|(e, c)| (ExpVec::new(e.to_vec()), c.parse().unwrap()))).unwrap()
    }

    fn line() -> GradedIdeal {
        GradedIdeal::new(2, vec![kp(3, &[(&[1, 0, 0], "1"), (&[0, 1, 0], "1"), (&[0, 0, 1], "1")])]).unwrap()
    }

    /// `(l x0 + x1 + n x2, (x0 - x2)^2)` with `a = b = c = 1`, `n = -(l + 1)`.
    fn pair_ideal(l: &str) -> GradedIdeal {
        let lv: PuiseuxRat = l.parse().unwrap();
        let nv = -(&lv + &PuiseuxRat::one());
        let f = KPoly::from_terms(
            3,
            [
                (ExpVec::new(vec![1, 0, 0]), lv),
                (ExpVec::new(vec![0, 1, 0]), PuiseuxRat::one()),
                (ExpVec::new(vec![0, 0, 1]), nv),
            ],
        )
        .unwrap();
        let q = kp(3, &[(&[2, 0, 0], "1"), (&[1, 0, 1], "-2"), (&[0, 0, 2], "1")]);
        GradedIdeal::new(2, vec![f, q]).unwrap()
    }

    #[test]
    fn text_syntax() {
        let p = KPoly::parse("(1 + t)*x0^2 - t^-1*x1*x2 + 3/2*x2^2", 3).unwrap();
        let want = kp(3, &[(&[2, 0, 0], "1 + t"), (&[0, 1, 1], "-t^-1"), (&[0, 0, 2], "3/2")]);
        assert_eq!(p, want);
        assert_eq!(KPoly::parse(&p.to_string(), 3).unwrap(), p);
        assert_eq!(KPoly::parse("-x0 + x1", 2).unwrap(), kp(2, &[(&[1, 0], "-1"), (&[0, 1], "1")]));
        assert_eq!(KPoly::parse("x0*x0 - x0^2", 1).unwrap(), KPoly::zero(1));
        assert!(KPoly::parse("x3", 3).is_err());
        assert!(KPoly::parse("(x0", 3).is_err());
        assert!(KPoly::parse("", 3).is_err());
        assert!(KPoly::parse("x0 +", 3).is_err());
    }

    #[test]
    fn monomial_orders() {
        let m = monomials_of_degree(3, 1);
        assert_eq!(m, vec![ExpVec::unit(3, 0), ExpVec::unit(3, 1), ExpVec::unit(3, 2)]);
        assert_eq!(monomials_of_degree(3, 2)[4], ExpVec::new(vec![1, 0, 1]));
        assert_eq!(monomials_of_degree(2, 3).len(), 4);
        assert_eq!(monomials_of_degree(2, 3)[0], ExpVec::new(vec![3, 0]));
        for nv in 1..5 {
            for d in 0..5 {
                let ms = monomials_of_degree(nv, d);
                assert_eq!(ms.len(), dim_s(nv, d));
                let set: std::collections::BTreeSet<_> = ms.iter().collect();
                assert_eq!(set.len(), ms.len());
                assert!(ms.iter().all(|e| e.degree() == d));
            }
        }
    }

    #[test]
    fn component_dimensions() {
        assert_eq!(component_basis(&line(), 2).dim(), 3);
        let mono = GradedIdeal::new(1, vec![kp(2, &[(&[2, 0], "1")]), kp(2, &[(&[1, 1], "1")])]).unwrap();
        assert_eq!(component_basis(&mono, 1).dim(), 0);
        assert_eq!(component_basis(&pair_ideal("2"), 2).dim(), 4);
    }

    #[test]
    fn hilbert_functions() {
        assert_eq!(hilbert_function(&line(), 2), 3);
        assert_eq!(hilbert_function(&GradedIdeal::new(2, vec![]).unwrap(), 3), 10);
        assert_eq!(hilbert_function(&pair_ideal("2"), 2), 2);
    }

    #[test]
    fn fitted_polynomials() {
        assert_eq!(fit_hilbert_polynomial(&line(), 20).unwrap().0, vec![1, 1]);
        let cubic = GradedIdeal::new(
            2,
            vec![kp(3, &[(&[3, 0, 0], "1"), (&[0, 3, 0], "t"), (&[0, 0, 3], "1 + t"), (&[1, 1, 1], "2")])],
        )
        .unwrap();
        assert_eq!(fit_hilbert_polynomial(&cubic, 20).unwrap().0, vec![3, 3]);
        assert_eq!(fit_hilbert_polynomial(&pair_ideal("2"), 20).unwrap().0, vec![2]);
        assert!(matches!(fit_hilbert_polynomial(&cubic, 3), Err(Error::NoStabilization { .. })));
    }

    #[test]
    fn hilbert_function_follows_polynomial_from_m0() {
        for (ideal, m) in [(line(), vec![1, 1]), (pair_ideal("t"), vec![2])] {
            let mv = MVector::new(m).unwrap();
            for d in (mv.m0() - 1).max(0)..8 {
                assert_eq!(BigInt::from(hilbert_function(&ideal, d as u32)), g_eval(&mv, d));
            }
        }
    }

    #[test]
    fn generator_order_does_not_matter() {
        let i = pair_ideal("1 + t");
        let mut gens = i.generators().to_vec();
        gens.reverse();
        let j = GradedIdeal::new(2, gens).unwrap();
        for d in 0..4 {
            assert_eq!(component_basis(&i, d).dim(), component_basis(&j, d).dim());
        }
    }

    #[test]
    fn colons() {
        let sq = GradedIdeal::new(2, vec![kp(3, &[(&[2, 0, 0], "1")])]).unwrap();
        let c = colon_component(&sq, &kp(3, &[(&[1, 0, 0], "1")]), 1).unwrap();
        assert_eq!(c.dim(), 1);
        assert_eq!(c.polynomials()[0].homogeneous_degree(), Some(1));
        assert_eq!(c.polynomials()[0].len(), 1);
        assert!(!c.polynomials()[0].coefficient(&ExpVec::unit(3, 0)).is_zero());
        assert_eq!(colon_component(&line(), &kp(3, &[(&[1, 0, 0], "1")]), 1).unwrap().dim(), 1);
        let xy = GradedIdeal::new(2, vec![kp(3, &[(&[1, 1, 0], "1")])]).unwrap();
        assert_eq!(colon_component(&xy, &kp(3, &[(&[0, 0, 1], "1")]), 2).unwrap().dim(), 1);
    }

    #[test]
    fn wedge_basics() {
        let one = PuiseuxRat::one;
        let z = PuiseuxRat::zero;
        let p = wedge_coordinates(&vec![vec![one(), z(), z()], vec![z(), one(), z()]]).unwrap();
        assert_eq!(p.coords, vec![one(), z(), z()]);
        let rows: Matrix<PuiseuxRat> = vec![
            vec!["1".parse().unwrap(), "t".parse().unwrap(), "2".parse().unwrap()],
            vec!["0".parse().unwrap(), "1 + t".parse().unwrap(), "t^(1/2)".parse().unwrap()],
        ];
        let base = wedge_coordinates(&rows).unwrap();
        let lambda: PuiseuxRat = "3*t".parse().unwrap();
        let scaled: Matrix<PuiseuxRat> = vec![rows[0].iter().map(|x| x * &lambda).collect(), rows[1].clone()];
        let s = wedge_coordinates(&scaled).unwrap();
        for (a, b) in base.coords.iter().zip(&s.coords) {
            assert_eq!(&(a * &lambda), b);
        }
        assert!(base.projectively_equal(&s));
        let swapped = wedge_coordinates(&vec![rows[1].clone(), rows[0].clone()]).unwrap();
        for (a, b) in base.coords.iter().zip(&swapped.coords) {
            assert_eq!(a, &-b);
        }
        let dep = vec![rows[0].clone(), rows[0].clone()];
        assert!(matches!(wedge_coordinates(&dep), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn json_round_trip() {
        let i = pair_ideal("2 + t^(1/3)");
        let s = serde_json::to_string(&i.to_json()).unwrap();
        assert_eq!(GradedIdeal::parse_json(&s).unwrap(), i);
    }

    #[test]
    fn lex_subset_order() {
        let s = lex_subsets(4, 2);
        assert_eq!(s, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(lex_subsets(6, 4).len(), 15);
    }
}

//! Numerical polynomials written as
//! `g(m_0, ..., m_s; x) = sum_i binom(x+i, i+1) - binom(x+i-m_i, i+1)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::valfield::{render_rat, Rat};

/// The data `(m_0, ..., m_s)` of a numerical polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MVector(pub Vec<i64>);

impl MVector {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        match entries.last() {
            None => Err(Error::InvalidInput("empty m-vector".into())),
            Some(0) => Err(Error::InvalidInput("last entry of an m-vector must be nonzero".into())),
            Some(_) => Ok(MVector(entries)),
        }
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn m0(&self) -> i64 {
        self.0[0]
    }

    /// `s`, the degree of the polynomial.
    pub fn s(&self) -> usize {
        self.0.len() - 1
    }

    pub fn parse(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad m-vector entry `{x}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

impl fmt::Display for MVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// `binom(a, k)` extended to all integers `a` as `a(a-1)...(a-k+1)/k!`.
pub fn binom(a: &BigInt, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= a - BigInt::from(j);
        den *= BigInt::from(j + 1);
    }
    num / den
}

pub fn binom_u(n: u64, k: u64) -> u64 {
    binom(&BigInt::from(n), k as u32).to_u64().expect("binomial fits in u64")
}

pub fn g_eval(m: &MVector, x: i64) -> BigInt {
    let x = BigInt::from(x);
    m.0.iter()
        .enumerate()
        .map(|(i, &mi)| {
            let top = &x + BigInt::from(i);
            binom(&top, i as u32 + 1) - binom(&(&top - BigInt::from(mi)), i as u32 + 1)
        })
        .sum()
}

/// A univariate polynomial over `Q`, coefficients lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumPoly {
    coeffs: Vec<Rat>,
}

impl NumPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        NumPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rat {
        self.eval(&Rat::from_integer(x.into()))
    }

    /// Integer-valued at `deg + 2` consecutive integers `0, 1, ...`, which
    /// forces integer values at every integer.
    pub fn is_numerical(&self) -> bool {
        let n = self.degree().map_or(1, |d| d + 2);
        (0..n as i64).all(|x| self.eval_int(x).is_integer())
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).cloned().unwrap_or_default() + other.coeffs.get(i).cloned().unwrap_or_default()
                })
                .collect(),
        )
    }

    fn neg(&self) -> Self {
        NumPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// `binom(x + c, k)` as a polynomial in `x`.
    fn binom_shifted(c: i64, k: u32) -> Self {
        let mut p = NumPoly::from_ints(&[1]);
        let mut fact = BigInt::one();
        for j in 0..k as i64 {
            p = p.mul(&NumPoly::from_ints(&[c - j, 1]));
            fact *= BigInt::from(j + 1);
        }
        let inv = Rat::new(BigInt::one(), fact);
        NumPoly::new(p.coeffs.iter().map(|x| x * &inv).collect())
    }

    /// Layer `i` of the g-form: `binom(x+i, i+1) - binom(x+i-m, i+1)`.
    fn layer(i: usize, m: i64) -> Self {
        let i64_ = i as i64;
        Self::binom_shifted(i64_, i as u32 + 1).add(&Self::binom_shifted(i64_ - m, i as u32 + 1).neg())
    }

    /// Interpolates the unique polynomial of degree `< points.len()` through
    /// the given integer samples (Newton divided differences).
    pub fn interpolate(points: &[(i64, Rat)]) -> Self {
        let n = points.len();
        let xs: Vec<Rat> = points.iter().map(|(x, _)| Rat::from_integer((*x).into())).collect();
        let mut dd: Vec<Rat> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
            }
        }
        let mut poly = NumPoly::new(Vec::new());
        let mut basis = NumPoly::from_ints(&[1]);
        for (i, c) in dd.iter().enumerate() {
            poly = poly.add(&NumPoly::new(basis.coeffs.iter().map(|b| b * c).collect()));
            basis = basis.mul(&NumPoly::new(vec![-xs[i].clone(), Rat::one()]));
        }
        poly
    }
}

impl fmt::Display for NumPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = render_rat(&c.abs());
            let body = match i {
                0 => mag,
                _ => {
                    let xp = if i == 1 { "x".to_string() } else { format!("x^{i}") };
                    if c.abs().is_one() {
                        xp
                    } else {
                        format!("{mag}*{xp}")
                    }
                }
            };
            parts.push((sign, body));
        }
        let mut out = String::new();
        for (k, (sign, body)) in parts.iter().enumerate() {
            if k == 0 {
                if *sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            out.push_str(body);
        }
        f.write_str(&out)
    }
}

pub fn g_to_polynomial(m: &MVector) -> NumPoly {
    m.0.iter()
        .enumerate()
        .fold(NumPoly::new(Vec::new()), |acc, (i, &mi)| acc.add(&NumPoly::layer(i, mi)))
}

/// Inverse of [`g_to_polynomial`]: peel off one layer per degree, reading
/// `m_i = a_i * i!` from the current leading coefficient.
pub fn decompose(p: &NumPoly) -> Result<MVector> {
    if !p.is_numerical() {
        return Err(Error::InvalidInput(format!("{p} is not a numerical polynomial")));
    }
    let s = p.degree().ok_or_else(|| Error::InvalidInput("the zero polynomial has no g-form".into()))?;
    let mut rem = p.clone();
    let mut m = vec![0i64; s + 1];
    let mut fact = BigInt::one();
    let facts: Vec<BigInt> = (0..=s)
        .map(|i| {
            if i > 0 {
                fact *= BigInt::from(i);
            }
            fact.clone()
        })
        .collect();
    for i in (0..=s).rev() {
        let a = rem.coeffs.get(i).cloned().unwrap_or_default();
        let mi = a * Rat::from_integer(facts[i].clone());
        if !mi.is_integer() {
            return Err(Error::InvalidInput(format!("{p} is not a numerical polynomial")));
        }
        let mi = mi.to_integer().to_i64().ok_or_else(|| Error::InvalidInput("m-vector entry overflow".into()))?;
        m[i] = mi;
        rem = rem.add(&NumPoly::layer(i, mi).neg());
        debug_assert!(rem.degree().is_none_or(|d| d < i));
    }
    if !rem.is_zero() {
        return Err(Error::InternalInconsistency(format!("nonzero remainder {rem} in decompose")));
    }
    MVector::new(m)
}

/// `s < n` and `m_0 >= ... >= m_s > 0`.
pub fn is_admissible(m: &MVector, n: usize) -> bool {
    m.s() < n && m.0.windows(2).all(|w| w[0] >= w[1]) && m.0.last().is_some_and(|&x| x > 0)
}

/// `(dimension, degree) = (s, s! * a_s) = (s, m_s)`.
pub fn hilbert_dim_deg(m: &MVector) -> (usize, i64) {
    (m.s(), *m.0.last().expect("nonempty"))
}

/// Fits a polynomial of degree at most `max_degree` to an eventually
/// polynomial integer function by sliding a window of `max_degree + 2`
/// samples from `d_start`; stops once two consecutive windows are
/// self-consistent and agree.
pub fn fit_eventual_polynomial(
    mut values: impl FnMut(u32) -> Result<i64>,
    max_degree: usize,
    d_start: u32,
    d_max: u32,
) -> Result<NumPoly> {
    let w = max_degree as u32 + 2;
    let mut cache: Vec<(u32, i64)> = Vec::new();
    let mut value = |d: u32| -> Result<i64> {
        if let Some((_, v)) = cache.iter().find(|(x, _)| *x == d) {
            return Ok(*v);
        }
        let v = values(d)?;
        cache.push((d, v));
        Ok(v)
    };
    let mut previous: Option<NumPoly> = None;
    let mut d = d_start;
    while d + w - 1 <= d_max {
        let pts: Vec<(i64, Rat)> =
            (d..d + w - 1).map(|x| Ok((x as i64, Rat::from_integer(value(x)?.into())))).collect::<Result<_>>()?;
        let p = NumPoly::interpolate(&pts);
        let last = d + w - 1;
        let consistent = p.eval_int(last as i64) == Rat::from_integer(value(last)?.into());
        match (&previous, consistent) {
            (Some(q), true) if *q == p => return Ok(p),
            (_, true) => previous = Some(p),
            (_, false) => previous = None,
        }
        d += 1;
    }
    Err(Error::NoStabilization { d_max })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mv(v: &[i64]) -> MVector {
        MVector::new(v.to_vec()).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn binomial_extension_to_negative_tops() {
        assert_eq!(binom(&big(5), 2), big(10));
        assert_eq!(binom(&big(-1), 2), big(1));
        assert_eq!(binom(&big(-2), 3), big(-4));
        assert_eq!(binom(&big(1), 2), big(0));
        assert_eq!(binom(&big(7), 0), big(1));
    }

    #[test]
    fn g_eval_examples() {
        for x in -5..12 {
            assert_eq!(g_eval(&mv(&[2]), x), big(2));
            assert_eq!(g_eval(&mv(&[7]), x), big(7));
            assert_eq!(g_eval(&mv(&[1, 1]), x), big(x + 1));
        }
    }

    #[test]
    fn g_to_polynomial_examples() {
        assert_eq!(g_to_polynomial(&mv(&[2])), NumPoly::from_ints(&[2]));
        assert_eq!(g_to_polynomial(&mv(&[1, 1])), NumPoly::from_ints(&[1, 1]));
        let p = g_to_polynomial(&mv(&[3, 2]));
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p.coeffs()[1], Rat::from_integer(big(2)));
        for x in 0..=3 {
            assert_eq!(p.eval_int(x), Rat::from_integer(g_eval(&mv(&[3, 2]), x)));
        }
        // plane cubic: 3x
        assert_eq!(g_to_polynomial(&mv(&[3, 3])), NumPoly::from_ints(&[0, 3]));
    }

    #[test]
    fn decompose_examples() {
        assert_eq!(decompose(&NumPoly::from_ints(&[2])).unwrap(), mv(&[2]));
        assert_eq!(decompose(&g_to_polynomial(&mv(&[3, 2, 1]))).unwrap(), mv(&[3, 2, 1]));
        // twisted cubic: d = 3, genus 0 -> 3x + 1
        let (d, genus) = (3i64, 0i64);
        let curve = NumPoly::new(vec![
            Rat::new(big(-(d * d - 3 * d)), big(2)) - Rat::from_integer(big(genus - 1)),
            Rat::from_integer(big(d)),
        ]);
        assert_eq!(curve, NumPoly::from_ints(&[1, 3]));
        assert_eq!(decompose(&curve).unwrap(), mv(&[4, 3]));
    }

    #[test]
    fn decompose_rejects_non_numerical() {
        let half = NumPoly::new(vec![Rat::new(big(1), big(2))]);
        assert!(matches!(decompose(&half), Err(Error::InvalidInput(_))));
        assert!(matches!(decompose(&NumPoly::new(vec![])), Err(Error::InvalidInput(_))));
        // x(x+1)/2 is numerical
        let tri = NumPoly::new(vec![Rat::zero(), Rat::new(big(1), big(2)), Rat::new(big(1), big(2))]);
        assert!(decompose(&tri).is_ok());
    }

    #[test]
    fn general_mode_keeps_non_admissible_entries() {
        let m = mv(&[-3, 2]);
        assert_eq!(decompose(&g_to_polynomial(&m)).unwrap(), m);
        assert_eq!(decompose(&NumPoly::from_ints(&[-4])).unwrap(), mv(&[-4]));
    }

    #[test]
    fn admissibility() {
        assert!(is_admissible(&mv(&[2, 2]), 2));
        assert!(!is_admissible(&mv(&[1, 2]), 3));
        assert!(!is_admissible(&mv(&[1, 1, 1]), 2));
        assert!(!is_admissible(&mv(&[2, -1]), 3));
    }

    #[test]
    fn dimension_and_degree() {
        assert_eq!(hilbert_dim_deg(&mv(&[2])), (0, 2));
        assert_eq!(hilbert_dim_deg(&mv(&[3, 3])), (1, 3));
        assert_eq!(hilbert_dim_deg(&mv(&[4, 3])), (1, 3));
    }

    #[test]
    fn zero_ideal_counts_all_monomials() {
        for n in 0..=4usize {
            let ones = MVector::new(vec![1; n + 1]).unwrap();
            for d in 0..=8i64 {
                assert_eq!(g_eval(&ones, d), binom(&big(d + n as i64), n as u32));
            }
        }
    }

    #[test]
    fn g_is_integer_valued_on_a_window() {
        for m in [mv(&[5, 3, 1]), mv(&[-2, 4]), mv(&[6, 6, 6, 2])] {
            let p = g_to_polynomial(&m);
            for x in -30..30 {
                assert!(p.eval_int(x).is_integer());
                assert_eq!(p.eval_int(x), Rat::from_integer(g_eval(&m, x)));
            }
        }
    }

    #[test]
    fn interpolation_recovers_polynomials() {
        let p = NumPoly::from_ints(&[3, -1, 2]);
        let pts: Vec<(i64, Rat)> = (4..7).map(|x| (x, p.eval_int(x))).collect();
        assert_eq!(NumPoly::interpolate(&pts), p);
    }

    #[test]
    fn sliding_fit_skips_initial_irregularity() {
        // plane cubic: h(0) = 1, h(d) = 3d for d >= 1
        let h = |d: u32| Ok(if d == 0 { 1 } else { 3 * d as i64 });
        let p = fit_eventual_polynomial(h, 2, 0, 20).unwrap();
        assert_eq!(decompose(&p).unwrap(), mv(&[3, 3]));
        assert_eq!(fit_eventual_polynomial(h, 2, 0, 3), Err(Error::NoStabilization { d_max: 3 }));
    }
}

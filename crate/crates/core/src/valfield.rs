//! The working field `K = union over N of Q(t^(1/N))`.
//!
//! An element is stored as `u^shift * num(u) / den(u)` with `u = t^(1/scale)`,
//! where `num` and `den` are dense polynomials with nonzero constant terms,
//! coprime, and `den(0) = 1`. With `scale` minimal this form is canonical, so
//! structural equality is field equality.
//!
//! The valuation is the `t`-adic order `shift / scale`, the residue field is
//! `Q`, and `t^w` for rational `w` is the monomial section.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let err = || Error::Parse(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rat::new(n, d))
        }
        None => Ok(Rat::from_integer(BigInt::from_str(s).map_err(|_| err())?)),
    }
}

/// Parses a comma-separated list of rationals such as `0,1/2,-3`.
pub fn parse_rat_list(s: &str) -> Result<Vec<Rat>> {
    s.split(',').map(parse_rat).collect()
}

pub fn render_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dense univariate polynomial helpers. Vectors are trimmed: the last entry
/// is nonzero, and the zero polynomial is empty.
mod upoly {
    use super::Rat;
    use num_traits::{One, Zero};

    pub fn trim(v: &mut Vec<Rat>) {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    }

    pub fn low_order(v: &[Rat]) -> usize {
        v.iter().position(|c| !c.is_zero()).unwrap_or(v.len())
    }

    pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let mut out = long.to_vec();
        for (o, c) in out.iter_mut().zip(short) {
            *o += c;
        }
        trim(&mut out);
        out
    }

    pub fn mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        trim(&mut out);
        out
    }

    pub fn scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
        a.iter().map(|x| x * c).collect()
    }

    pub fn shifted(a: &[Rat], k: usize) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); k];
        out.extend_from_slice(a);
        out
    }

    /// Substitutes `u -> u^k`.
    pub fn spread(a: &[Rat], k: usize) -> Vec<Rat> {
        if k == 1 || a.is_empty() {
            return a.to_vec();
        }
        let mut out = vec![Rat::zero(); (a.len() - 1) * k + 1];
        for (i, c) in a.iter().enumerate() {
            out[i * k] = c.clone();
        }
        out
    }

    /// Inverse of [`spread`]; caller guarantees only multiples of `k` occur.
    pub fn compress(a: &[Rat], k: usize) -> Vec<Rat> {
        if k == 1 {
            return a.to_vec();
        }
        a.iter().step_by(k).cloned().collect()
    }

    pub fn divrem(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
        let mut r = a.to_vec();
        trim(&mut r);
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let lead_inv = b.last().expect("nonzero divisor").recip();
        let mut q = vec![Rat::zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let k = r.len() - b.len();
            let c = r.last().unwrap() * &lead_inv;
            for (i, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    r[k + i] -= &c * y;
                }
            }
            q[k] = c;
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }

    /// Monic gcd.
    pub fn gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let (_, r) = divrem(&x, &y);
            x = y;
            y = r;
            if let Some(l) = y.last().cloned() {
                y = scale(&y, &l.recip());
            }
        }
        if let Some(l) = x.last().cloned() {
            if !l.is_one() {
                x = scale(&x, &l.recip());
            }
        }
        x
    }

    pub fn exponent_gcd(a: &[Rat]) -> usize {
        a.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(0usize, |g, (i, _)| num_integer::gcd(g, i))
    }
}

/// An element of `Q(t^(1/N))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PuiseuxRat {
    shift: i64,
    num: Vec<Rat>,
    den: Vec<Rat>,
    scale: u64,
}

impl PuiseuxRat {
    pub fn zero() -> Self {
        PuiseuxRat { shift: 0, num: Vec::new(), den: vec![Rat::one()], scale: 1 }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(c: Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        PuiseuxRat { shift: 0, num: vec![c], den: vec![Rat::one()], scale: 1 }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    /// The uniformizer `t`.
    pub fn t() -> Self {
        Self::section(&Rat::one())
    }

    /// The monomial `t^w`.
    pub fn section(w: &Rat) -> Self {
        let shift = w.numer().to_i64().expect("exponent numerator fits in i64");
        let scale = w.denom().to_u64().expect("exponent denominator fits in u64");
        PuiseuxRat { shift, num: vec![Rat::one()], den: vec![Rat::one()], scale }
    }

    /// `c * t^w`.
    pub fn monomial(c: Rat, w: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut m = Self::section(w);
        m.num[0] = c;
        m
    }

    fn from_parts(mut shift: i64, mut num: Vec<Rat>, mut den: Vec<Rat>, mut scale: u64) -> Self {
        upoly::trim(&mut num);
        upoly::trim(&mut den);
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return Self::zero();
        }
        let ln = upoly::low_order(&num);
        let ld = upoly::low_order(&den);
        if ln > 0 {
            num.drain(..ln);
        }
        if ld > 0 {
            den.drain(..ld);
        }
        shift += ln as i64 - ld as i64;
        if den.len() > 1 && num.len() > 1 {
            let g = upoly::gcd(&num, &den);
            if g.len() > 1 {
                num = upoly::divrem(&num, &g).0;
                den = upoly::divrem(&den, &g).0;
            }
        }
        if !den[0].is_one() {
            let c = den[0].recip();
            num = upoly::scale(&num, &c);
            den = upoly::scale(&den, &c);
        }
        let g = [upoly::exponent_gcd(&num), upoly::exponent_gcd(&den)]
            .into_iter()
            .fold(num_integer::gcd(scale, shift.unsigned_abs()), |g, e| num_integer::gcd(g, e as u64));
        if g > 1 {
            num = upoly::compress(&num, g as usize);
            den = upoly::compress(&den, g as usize);
            shift /= g as i64;
            scale /= g;
        }
        PuiseuxRat { shift, num, den, scale }
    }

    /// Returns `(shift, num, den)` expressed in `u = t^(1/new_scale)`.
    fn at_scale(&self, new_scale: u64) -> (i64, Vec<Rat>, Vec<Rat>) {
        debug_assert_eq!(new_scale % self.scale, 0);
        let k = (new_scale / self.scale) as usize;
        (self.shift * k as i64, upoly::spread(&self.num, k), upoly::spread(&self.den, k))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.den.len() == 1 && self.num.len() == 1 && self.num[0].is_one()
    }

    /// Minimal `N` such that the element lies in `Q(t^(1/N))`.
    pub fn scale(&self) -> u64 {
        self.scale
    }

    /// Numerator coefficients in `u = t^(1/scale)`, lowest degree first.
    pub fn numerator(&self) -> Vec<Rat> {
        if self.shift > 0 {
            upoly::shifted(&self.num, self.shift as usize)
        } else {
            self.num.clone()
        }
    }

    /// Denominator coefficients in `u = t^(1/scale)`, lowest degree first.
    pub fn denominator(&self) -> Vec<Rat> {
        if self.shift < 0 {
            upoly::shifted(&self.den, (-self.shift) as usize)
        } else {
            self.den.clone()
        }
    }

    /// Whether the element is `c * t^w`.
    pub fn is_monomial(&self) -> bool {
        self.num.len() <= 1 && self.den.len() == 1
    }

    /// A cost measure used for pivot selection: total coefficient bit length
    /// plus polynomial lengths.
    pub fn size(&self) -> u64 {
        let bits = |v: &[Rat]| -> u64 {
            v.iter().map(|c| c.numer().bits() + c.denom().bits() + 1).sum()
        };
        bits(&self.num) + bits(&self.den)
    }

    pub fn valuation(&self) -> Result<Rat> {
        if self.is_zero() {
            return Err(Error::UndefinedValuation);
        }
        Ok(Rat::new(BigInt::from(self.shift), BigInt::from(self.scale)))
    }

    /// `tau(a) = -v(a)`.
    pub fn tropicalize(&self) -> Result<Rat> {
        self.valuation().map(|v| -v)
    }

    /// Compares valuations without building rationals; zero has valuation
    /// `+inf`.
    pub fn cmp_valuation(&self, other: &Self) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => {
                let l = self.shift as i128 * other.scale as i128;
                let r = other.shift as i128 * self.scale as i128;
                l.cmp(&r)
            }
        }
    }

    /// Image in the residue field of a unit of the valuation ring.
    pub fn residue(&self) -> Result<Rat> {
        if self.is_zero() || self.shift != 0 {
            return Err(Error::NotAUnit);
        }
        Ok(self.num[0].clone())
    }

    /// Residue of `a * t^(-v(a))`, i.e. the lowest-order coefficient ratio.
    pub fn residue_of_unit_part(&self) -> Result<Rat> {
        if self.is_zero() {
            return Err(Error::UndefinedValuation);
        }
        Ok(self.num[0].clone())
    }

    /// Reduction modulo the maximal ideal for elements of the valuation ring:
    /// zero and positive-valuation elements map to `0`.
    pub fn reduce(&self) -> Result<Rat> {
        match self.shift.cmp(&0) {
            _ if self.is_zero() => Ok(Rat::zero()),
            Ordering::Greater => Ok(Rat::zero()),
            Ordering::Equal => Ok(self.num[0].clone()),
            Ordering::Less => Err(Error::NotAUnit),
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_parts(-self.shift, self.den.clone(), self.num.clone(), self.scale))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Rational powers; non-integer exponents are only defined on `t^w`.
    pub fn pow_rat(&self, e: &Rat) -> Result<Self> {
        if e.is_integer() {
            let k = e.numer().to_i64().ok_or_else(|| Error::Parse("exponent too large".into()))?;
            return self.pow(k);
        }
        if self.is_zero() {
            return if e.is_positive() { Ok(Self::zero()) } else { Err(Error::DivisionByZero) };
        }
        if self.is_monomial() && self.num[0].is_one() {
            return Ok(Self::section(&(self.valuation()? * e)));
        }
        Err(Error::Parse("fractional powers are only defined for monomials t^w".into()))
    }

    /// The ring map `t -> t^k`. It multiplies valuations by `k`.
    pub fn substitute_power(&self, k: u64) -> Self {
        assert!(k > 0);
        if self.is_zero() {
            return Self::zero();
        }
        Self::from_parts(
            self.shift * k as i64,
            upoly::spread(&self.num, k as usize),
            upoly::spread(&self.den, k as usize),
            self.scale,
        )
    }

    fn render_poly(coeffs: &[Rat], scale: u64) -> (String, usize) {
        let mut out = String::new();
        let mut terms = 0;
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = Rat::new(BigInt::from(i), BigInt::from(scale));
            let (neg, mag) = if c.is_negative() { (true, -c.clone()) } else { (false, c.clone()) };
            if terms == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let tpart = if exp.is_zero() {
                None
            } else if exp.is_one() {
                Some("t".to_string())
            } else if exp.is_integer() {
                Some(format!("t^{}", exp.numer()))
            } else {
                Some(format!("t^({}/{})", exp.numer(), exp.denom()))
            };
            match tpart {
                None => out.push_str(&render_rat(&mag)),
                Some(tp) if mag.is_one() => out.push_str(&tp),
                Some(tp) => {
                    out.push_str(&render_rat(&mag));
                    out.push('*');
                    out.push_str(&tp);
                }
            }
            terms += 1;
        }
        if terms == 0 {
            out.push('0');
        }
        (out, terms)
    }
}

impl fmt::Display for PuiseuxRat {
    /// Canonical rendering: numerator and denominator as sums of `c*t^(p/q)`
    /// in increasing exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, nt) = Self::render_poly(&self.numerator(), self.scale);
        let den = self.denominator();
        if den.len() == 1 {
            return f.write_str(&n);
        }
        let (d, dt) = Self::render_poly(&den, self.scale);
        let n = if nt > 1 { format!("({n})") } else { n };
        let d = if dt > 1 { format!("({d})") } else { d };
        write!(f, "{n}/{d}")
    }
}

impl fmt::Debug for PuiseuxRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K[{self}]")
    }
}

impl Default for PuiseuxRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rat> for PuiseuxRat {
    fn from(c: Rat) -> Self {
        Self::from_rat(c)
    }
}

impl From<i64> for PuiseuxRat {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl<'a> Add<&'a PuiseuxRat> for &'a PuiseuxRat {
    type Output = PuiseuxRat;

    fn add(self, other: &PuiseuxRat) -> PuiseuxRat {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let scale = self.scale.lcm(&other.scale);
        let (s1, n1, d1) = self.at_scale(scale);
        let (s2, n2, d2) = other.at_scale(scale);
        let s = s1.min(s2);
        let p1 = upoly::shifted(&n1, (s1 - s) as usize);
        let p2 = upoly::shifted(&n2, (s2 - s) as usize);
        if d1 == d2 {
            PuiseuxRat::from_parts(s, upoly::add(&p1, &p2), d1, scale)
        } else {
            let num = upoly::add(&upoly::mul(&p1, &d2), &upoly::mul(&p2, &d1));
            PuiseuxRat::from_parts(s, num, upoly::mul(&d1, &d2), scale)
        }
    }
}

impl<'a> Mul<&'a PuiseuxRat> for &'a PuiseuxRat {
    type Output = PuiseuxRat;

    fn mul(self, other: &PuiseuxRat) -> PuiseuxRat {
        if self.is_zero() || other.is_zero() {
            return PuiseuxRat::zero();
        }
        let scale = self.scale.lcm(&other.scale);
        let (s1, n1, d1) = self.at_scale(scale);
        let (s2, n2, d2) = other.at_scale(scale);
        PuiseuxRat::from_parts(s1 + s2, upoly::mul(&n1, &n2), upoly::mul(&d1, &d2), scale)
    }
}

impl Neg for &PuiseuxRat {
    type Output = PuiseuxRat;

    fn neg(self) -> PuiseuxRat {
        PuiseuxRat {
            shift: self.shift,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
            scale: self.scale,
        }
    }
}

impl Neg for PuiseuxRat {
    type Output = PuiseuxRat;

    fn neg(self) -> PuiseuxRat {
        -&self
    }
}

impl<'a> Sub<&'a PuiseuxRat> for &'a PuiseuxRat {
    type Output = PuiseuxRat;

    fn sub(self, other: &PuiseuxRat) -> PuiseuxRat {
        self + &(-other)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<PuiseuxRat> for PuiseuxRat {
            type Output = PuiseuxRat;
            fn $m(self, other: PuiseuxRat) -> PuiseuxRat {
                (&self).$m(&other)
            }
        }
        impl<'a> $tr<&'a PuiseuxRat> for PuiseuxRat {
            type Output = PuiseuxRat;
            fn $m(self, other: &PuiseuxRat) -> PuiseuxRat {
                (&self).$m(other)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Serialize for PuiseuxRat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PuiseuxRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl FromStr for PuiseuxRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = tokenize(s)?;
        let mut p = Parser { tokens, pos: 0 };
        let v = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Parse(format!("trailing input in `{s}`")));
        }
        Ok(v)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    T,
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let lit: String = chars[start..i].iter().collect();
                out.push(Tok::Num(lit.parse().expect("digits")));
            }
            't' => {
                out.push(Tok::T);
                i += 1;
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push(Tok::Op(c));
                i += 1;
            }
            // unicode minus
            '\u{2212}' => {
                out.push(Tok::Op('-'));
                i += 1;
            }
            _ => return Err(Error::Parse(format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek_op() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<PuiseuxRat> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<PuiseuxRat> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == '*' { &acc * &rhs } else { acc.checked_div(&rhs)? };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<PuiseuxRat> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<PuiseuxRat> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let e = self.exponent()?;
            return base.pow_rat(&e);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<Rat> {
        let neg = if self.peek_op() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let v = self.atom()?;
        if !(v.is_zero() || (v.shift == 0 && v.is_monomial() && v.scale == 1)) {
            return Err(Error::Parse("exponent must be a rational constant".into()));
        }
        let r = if v.is_zero() { Rat::zero() } else { v.num[0].clone() };
        Ok(if neg { -r } else { r })
    }

    fn atom(&mut self) -> Result<PuiseuxRat> {
        match self.tokens.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(PuiseuxRat::from_rat(Rat::from_integer(n)))
            }
            Some(Tok::T) => {
                self.pos += 1;
                Ok(PuiseuxRat::t())
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Some(tok) => Err(Error::Parse(format!("unexpected token {tok:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> PuiseuxRat {
        s.parse().unwrap()
    }

    fn coeffs(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&c| rat_int(c)).collect()
    }

    #[test]
    fn additive_inverse_cancels() {
        assert!((&k("t") + &k("-t")).is_zero());
        assert_eq!(&k("t") + &k("-t"), PuiseuxRat::zero());
    }

    #[test]
    fn one_plus_t() {
        let a = &PuiseuxRat::one() + &PuiseuxRat::t();
        assert_eq!(a.numerator(), coeffs(&[1, 1]));
        assert_eq!(a.denominator(), coeffs(&[1]));
        assert_eq!(a.scale(), 1);
    }

    #[test]
    fn mixed_scales_add_at_lcm() {
        let a = &PuiseuxRat::section(&rat(1, 2)) + &PuiseuxRat::section(&rat(1, 3));
        assert_eq!(a.scale(), 6);
        assert_eq!(a.numerator(), coeffs(&[0, 0, 1, 1]));
    }

    #[test]
    fn products_and_inverses() {
        assert_eq!(&k("t") * &k("t"), PuiseuxRat::section(&rat_int(2)));
        let inv = k("t").inv().unwrap();
        assert_eq!(inv.numerator(), coeffs(&[1]));
        assert_eq!(inv.denominator(), coeffs(&[0, 1]));
        let h = PuiseuxRat::section(&rat(1, 2));
        let p = &h * &h;
        assert_eq!(p, PuiseuxRat::t());
        assert_eq!(p.scale(), 1);
        assert_eq!(PuiseuxRat::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn valuations() {
        assert_eq!(k("t").valuation().unwrap(), rat_int(1));
        assert_eq!(k("2 + 3*t").valuation().unwrap(), rat_int(0));
        assert_eq!(k("(t^2 + t)/(1 - t)").valuation().unwrap(), rat_int(1));
        assert_eq!(PuiseuxRat::zero().valuation(), Err(Error::UndefinedValuation));
    }

    #[test]
    fn tropicalization_is_negated_valuation() {
        assert_eq!(k("t").tropicalize().unwrap(), rat_int(-1));
        assert_eq!(k("t^(1/2)").tropicalize().unwrap(), rat(-1, 2));
        assert_eq!(k("5").tropicalize().unwrap(), rat_int(0));
    }

    #[test]
    fn residues() {
        assert_eq!(k("2 + 3*t").residue().unwrap(), rat_int(2));
        assert_eq!(k("(1 + t)/(1 - t)").residue().unwrap(), rat_int(1));
        assert_eq!(k("t").residue(), Err(Error::NotAUnit));
        assert_eq!(k("3*t^2 + t^3").residue_of_unit_part().unwrap(), rat_int(3));
        assert_eq!(k("t").reduce().unwrap(), rat_int(0));
        assert_eq!(k("1/t").reduce(), Err(Error::NotAUnit));
    }

    #[test]
    fn section_examples() {
        assert_eq!(PuiseuxRat::section(&rat_int(1)), k("t"));
        assert_eq!(PuiseuxRat::section(&rat_int(0)), PuiseuxRat::one());
        let s = PuiseuxRat::section(&rat(-3, 2));
        assert_eq!(s.valuation().unwrap(), rat(-3, 2));
        assert_eq!(s, k("t^(-3/2)"));
        assert_eq!(k("t^-3/2"), &PuiseuxRat::section(&rat_int(-3)) * &PuiseuxRat::from_rat(rat(1, 2)));
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(k("(2 + 3*t^(1/2))/(1 - t)").to_string(), "(2 + 3*t^(1/2))/(1 - t)");
        assert_eq!(k("t^2 - 1/2*t^3").to_string(), "t^2 - 1/2*t^3");
        assert_eq!(k("1/t").to_string(), "1/t");
        assert_eq!(k("-3/(t^2 + t^3)").to_string(), "-3/(t^2 + t^3)");
        assert_eq!(PuiseuxRat::zero().to_string(), "0");
        assert_eq!(k("(1 - t^2)/(1 - t)"), k("1 + t"));
    }

    #[test]
    fn substitute_power_scales_valuation() {
        let a = k("(t + 2*t^2)/(3 - t)");
        let b = a.substitute_power(2);
        assert_eq!(b.valuation().unwrap(), a.valuation().unwrap() * rat_int(2));
        assert_eq!(b, k("(t^2 + 2*t^4)/(3 - t^2)"));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("(1 + t)^(1/2)".parse::<PuiseuxRat>(), Err(Error::Parse(_))));
        assert!(matches!("1 +".parse::<PuiseuxRat>(), Err(Error::Parse(_))));
        assert!(matches!("x".parse::<PuiseuxRat>(), Err(Error::Parse(_))));
        assert_eq!("1/(t - t)".parse::<PuiseuxRat>(), Err(Error::DivisionByZero));
    }
}

//! Monomial ideals: colons, saturation, primary decomposition,
//! multiplicities of associated primes and arithmetic degree.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::numpoly::{decompose, MVector, NumPoly};
use crate::polyring::{dim_s, monomials_of_degree};
use crate::tropical::ExpVec;
use crate::valfield::Rat;

/// Largest number of monomials a multiplicity or saturation count may
/// enumerate.
pub const ENUMERATION_BUDGET: u64 = 2_000_000;

/// A monomial ideal in `nvars` variables, stored by its minimal generators
/// in sorted order. The zero ideal has no generators; the unit ideal has the
/// single generator `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonIdeal {
    nvars: usize,
    gens: Vec<ExpVec>,
}

impl MonIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = ExpVec>) -> Result<Self> {
        let gens: Vec<ExpVec> = gens.into_iter().collect();
        if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(Error::DimensionMismatch { expected: nvars, found: g.nvars() });
        }
        Ok(MonIdeal { nvars, gens: minimalize(gens) })
    }

    pub fn zero(nvars: usize) -> Self {
        MonIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonIdeal { nvars, gens: vec![ExpVec::zeros(nvars)] }
    }

    /// Parses `"x0^2, x0*x1"`. Without `nvars` the variable count is one more
    /// than the largest index used.
    pub fn parse(s: &str, nvars: Option<usize>) -> Result<Self> {
        let monos: Vec<Vec<(usize, u32)>> =
            s.split(',').map(str::trim).filter(|p| !p.is_empty()).map(parse_monomial).collect::<Result<_>>()?;
        let used = monos.iter().flatten().map(|(i, _)| i + 1).max().unwrap_or(1);
        let nv = nvars.unwrap_or(used);
        if used > nv {
            return Err(Error::DimensionMismatch { expected: nv, found: used });
        }
        let gens = monos.into_iter().map(|m| {
            let mut v = vec![0u32; nv];
            for (i, e) in m {
                v[i] += e;
            }
            ExpVec::new(v)
        });
        MonIdeal::new(nv, gens)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Projective dimension of the ambient space.
    pub fn n(&self) -> usize {
        self.nvars - 1
    }

    pub fn generators(&self) -> &[ExpVec] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.degree() == 0)
    }

    pub fn contains(&self, m: &ExpVec) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn lcm_of_generators(&self) -> ExpVec {
        self.gens.iter().fold(ExpVec::zeros(self.nvars), |acc, g| lcm(&acc, g))
    }

    pub fn colon(&self, f: &ExpVec) -> Self {
        let gens = self.gens.iter().map(|g| ExpVec::new(g.0.iter().zip(&f.0).map(|(a, b)| a.saturating_sub(*b)).collect()));
        MonIdeal { nvars: self.nvars, gens: minimalize(gens.collect()) }
    }

    /// `(I : f^inf)` together with `l_f(I)`, the least `l` with
    /// `(I : f^l) = (I : f^(l+1))`.
    pub fn saturate(&self, f: &ExpVec) -> (Self, u32) {
        let mut cur = self.clone();
        let mut l = 0;
        loop {
            let next = cur.colon(f);
            if next == cur {
                return (cur, l);
            }
            cur = next;
            l += 1;
        }
    }

    pub fn ell(&self, f: &ExpVec) -> u32 {
        self.saturate(f).1
    }

    /// `(I : m)` for the irrelevant ideal `m = (x_0, ..., x_n)`.
    pub fn colon_irrelevant(&self) -> Self {
        (0..self.nvars)
            .map(|i| self.colon(&ExpVec::unit(self.nvars, i)))
            .reduce(|a, b| a.intersect(&b))
            .unwrap_or_else(|| self.clone())
    }

    /// `I^sat = (I : m^inf)`.
    pub fn saturation(&self) -> Self {
        let mut cur = self.clone();
        loop {
            let next = cur.colon_irrelevant();
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let gens = self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| lcm(a, b)));
        MonIdeal { nvars: self.nvars, gens: minimalize(gens.collect()) }
    }

    pub fn sum(&self, other: &Self) -> Self {
        MonIdeal { nvars: self.nvars, gens: minimalize(self.gens.iter().chain(&other.gens).cloned().collect()) }
    }

    pub fn radical(&self) -> Self {
        let gens = self.gens.iter().map(|g| ExpVec::new(g.0.iter().map(|&e| e.min(1)).collect()));
        MonIdeal { nvars: self.nvars, gens: minimalize(gens.collect()) }
    }

    /// Primary iff every variable occurring in a generator has a pure power
    /// in the ideal.
    pub fn is_primary(&self) -> bool {
        let vars: BTreeSet<usize> = self.gens.iter().flat_map(support).collect();
        vars.iter().all(|&i| self.gens.iter().any(|g| support(g) == vec![i]))
    }

    /// Variables generating the radical, for a primary ideal.
    fn prime_of_primary(&self) -> Vec<usize> {
        let s: BTreeSet<usize> = self.gens.iter().flat_map(support).collect();
        s.into_iter().collect()
    }

    /// Number of monomials of degree `d` outside the ideal.
    pub fn hilbert_function(&self, d: u32) -> u64 {
        let inside = monomials_of_degree(self.nvars, d).iter().filter(|m| self.contains(m)).count();
        (dim_s(self.nvars, d) - inside) as u64
    }

    /// Hilbert polynomial as `(m_0, ..., m_s)`, or `None` when it vanishes.
    ///
    /// The Taylor resolution shows `h_I(d)` is polynomial from the degree of
    /// the lcm of all generators on, so `n + 1` values there determine it.
    pub fn hilbert_polynomial(&self) -> Result<Option<MVector>> {
        let d0 = self.lcm_of_generators().degree();
        let pts: Vec<(i64, Rat)> =
            (d0..=d0 + self.n() as u32).map(|d| (d as i64, Rat::from_integer(self.hilbert_function(d).into()))).collect();
        let p = NumPoly::interpolate(&pts);
        if p.is_zero() {
            return Ok(None);
        }
        decompose(&p).map(Some)
    }
}

fn parse_monomial(s: &str) -> Result<Vec<(usize, u32)>> {
    if s == "1" {
        return Ok(Vec::new());
    }
    s.split('*')
        .map(|f| {
            let f = f.trim();
            let err = || Error::Parse(format!("bad monomial factor `{f}`"));
            let rest = f.strip_prefix('x').ok_or_else(err)?;
            let (i, e) = match rest.split_once('^') {
                Some((i, e)) => (i, e.parse::<u32>().map_err(|_| err())?),
                None => (rest, 1),
            };
            Ok((i.parse::<usize>().map_err(|_| err())?, e))
        })
        .collect()
}

fn support(g: &ExpVec) -> Vec<usize> {
    g.0.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i).collect()
}

fn lcm(a: &ExpVec, b: &ExpVec) -> ExpVec {
    ExpVec::new(a.0.iter().zip(&b.0).map(|(x, y)| *x.max(y)).collect())
}

fn minimalize(mut gens: Vec<ExpVec>) -> Vec<ExpVec> {
    gens.sort_by_key(|g| (g.degree(), std::cmp::Reverse(g.clone())));
    gens.dedup();
    let mut out: Vec<ExpVec> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

impl fmt::Display for MonIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A primary component `Q` with radical generated by the variables `prime`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryPiece {
    pub q: MonIdeal,
    pub prime: Vec<usize>,
    pub multiplicity: u64,
}

impl PrimaryPiece {
    /// Projective dimension of the prime: `n - |P|`.
    pub fn dim(&self) -> i64 {
        self.q.n() as i64 - self.prime.len() as i64
    }
}

fn irreducible_components(ideal: &MonIdeal) -> Vec<MonIdeal> {
    let Some(g) = ideal.gens.iter().find(|g| support(g).len() > 1) else {
        return vec![ideal.clone()];
    };
    let i = support(g)[0];
    let mut u = vec![0u32; ideal.nvars];
    u[i] = g.0[i];
    let mut w = g.0.clone();
    w[i] = 0;
    let left = ideal.sum(&MonIdeal { nvars: ideal.nvars, gens: vec![ExpVec::new(u)] });
    let right = ideal.sum(&MonIdeal { nvars: ideal.nvars, gens: vec![ExpVec::new(w)] });
    let mut out = irreducible_components(&left);
    out.extend(irreducible_components(&right));
    out
}

fn intersect_all(nvars: usize, pieces: impl IntoIterator<Item = MonIdeal>) -> MonIdeal {
    pieces.into_iter().fold(MonIdeal::unit(nvars), |acc, q| acc.intersect(&q))
}

/// Minimal primary decomposition: irreducible splitting, grouping by
/// radical, then removal of redundant pieces. The unit ideal has no pieces.
pub fn primary_decomposition(ideal: &MonIdeal) -> Result<Vec<PrimaryPiece>> {
    if ideal.is_unit() {
        return Ok(Vec::new());
    }
    let mut comps: Vec<MonIdeal> = irreducible_components(ideal);
    comps.sort();
    comps.dedup();
    let minimal: Vec<MonIdeal> =
        comps.iter().filter(|c| !comps.iter().any(|d| d != *c && d.is_subset_of(c))).cloned().collect();
    let mut grouped: Vec<(Vec<usize>, MonIdeal)> = Vec::new();
    for c in minimal {
        let p = c.prime_of_primary();
        match grouped.iter_mut().find(|(q, _)| *q == p) {
            Some((_, acc)) => *acc = acc.intersect(&c),
            None => grouped.push((p, c)),
        }
    }
    let mut i = 0;
    while i < grouped.len() && grouped.len() > 1 {
        let others = intersect_all(ideal.nvars, grouped.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.1.clone()));
        if others.is_subset_of(&grouped[i].1) {
            grouped.remove(i);
        } else {
            i += 1;
        }
    }
    grouped.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let mut pieces: Vec<PrimaryPiece> =
        grouped.into_iter().map(|(prime, q)| PrimaryPiece { q, prime, multiplicity: 0 }).collect();
    for k in 0..pieces.len() {
        pieces[k].multiplicity = multiplicity_in(&pieces, k)?;
    }
    if intersect_all(ideal.nvars, pieces.iter().map(|p| p.q.clone())) != *ideal {
        return Err(Error::InternalInconsistency(format!("decomposition of {ideal} does not intersect back")));
    }
    Ok(pieces)
}

/// `I_i`: the intersection of the pieces whose prime is strictly inside the
/// prime of piece `k`, or the unit ideal.
pub fn lower_intersection(pieces: &[PrimaryPiece], k: usize) -> MonIdeal {
    let p = &pieces[k].prime;
    let nvars = pieces[k].q.nvars;
    intersect_all(
        nvars,
        pieces
            .iter()
            .filter(|o| o.prime.len() < p.len() && o.prime.iter().all(|v| p.contains(v)))
            .map(|o| o.q.clone()),
    )
}

/// The length of `I_i / (I_i ∩ Q)` after localizing at `P`, i.e. the
/// number of monomials in the variables of `P` lying in `I_i` but not in
/// `Q`.
fn multiplicity_in(pieces: &[PrimaryPiece], k: usize) -> Result<u64> {
    let piece = &pieces[k];
    let nvars = piece.q.nvars;
    let lower = lower_intersection(pieces, k);
    // Q is P-primary, so it holds a pure power of every variable of P
    let mut bounds = vec![0u32; nvars];
    for &v in &piece.prime {
        bounds[v] = piece.q.gens.iter().filter(|g| support(g) == vec![v]).map(|g| g.0[v]).min().expect("pure power");
    }
    let total: u64 = piece.prime.iter().map(|&v| bounds[v] as u64).product();
    if total > ENUMERATION_BUDGET {
        return Err(Error::BudgetExceeded(format!("{total} monomials for the multiplicity of {:?}", piece.prime)));
    }
    let count = box_monomials(&bounds).filter(|m| !piece.q.contains(m) && lower.contains(m)).count();
    Ok(count as u64)
}

/// All exponent vectors with `0 <= e_i < bounds_i`, treating bound `0` as
/// the single value `0`.
fn box_monomials(bounds: &[u32]) -> impl Iterator<Item = ExpVec> + '_ {
    let total: usize = bounds.iter().map(|&b| b.max(1) as usize).product();
    (0..total).map(move |mut idx| {
        let v = bounds
            .iter()
            .map(|&b| {
                let b = b.max(1) as usize;
                let e = idx % b;
                idx /= b;
                e as u32
            })
            .collect();
        ExpVec::new(v)
    })
}

/// Multiplicity of the associated prime generated by `prime`.
pub fn multiplicity(ideal: &MonIdeal, prime: &[usize]) -> Result<u64> {
    let mut p = prime.to_vec();
    p.sort_unstable();
    p.dedup();
    primary_decomposition(ideal)?
        .into_iter()
        .find(|piece| piece.prime == p)
        .map(|piece| piece.multiplicity)
        .ok_or_else(|| Error::InvalidInput(format!("{p:?} is not an associated prime of {ideal}")))
}

/// Arithmetic degree by dimension, `r = -1, ..., n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArithmeticDegree {
    by_dim: Vec<u64>,
}

impl ArithmeticDegree {
    pub fn get(&self, r: i64) -> u64 {
        usize::try_from(r + 1).ok().and_then(|i| self.by_dim.get(i)).copied().unwrap_or(0)
    }

    /// `adeg(I)`, the sum over `r >= 0`.
    pub fn total(&self) -> u64 {
        self.by_dim.iter().skip(1).sum()
    }

    /// Pairs `(r, adeg_r)` for `r = -1, ..., n`.
    pub fn entries(&self) -> Vec<(i64, u64)> {
        self.by_dim.iter().enumerate().map(|(i, v)| (i as i64 - 1, *v)).collect()
    }
}

/// `dim_k(I^sat / I)`, counted over the box below the lcm of the
/// generators: outside it, membership in `I` is decided by a smaller
/// monomial.
pub fn saturation_defect(ideal: &MonIdeal) -> Result<u64> {
    if ideal.is_zero() {
        return Ok(0);
    }
    let l = ideal.lcm_of_generators();
    let total: u64 = l.0.iter().map(|&b| b.max(1) as u64).product();
    if total > ENUMERATION_BUDGET {
        return Err(Error::BudgetExceeded(format!("{total} monomials below {l}")));
    }
    let sat = ideal.saturation();
    Ok(box_monomials(&l.0).filter(|m| sat.contains(m) && !ideal.contains(m)).count() as u64)
}

pub fn adeg(ideal: &MonIdeal) -> Result<ArithmeticDegree> {
    let n = ideal.n();
    let mut by_dim = vec![0u64; n + 2];
    for piece in primary_decomposition(ideal)? {
        let r = piece.dim();
        if r >= 0 {
            by_dim[(r + 1) as usize] += piece.multiplicity;
        }
    }
    by_dim[0] = saturation_defect(ideal)?;
    Ok(ArithmeticDegree { by_dim })
}

/// Result of the bounded-monomial construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundedMonomial {
    pub alpha: ExpVec,
    pub bound: u64,
    pub contains_monomial: bool,
}

/// `alpha_i` is the total multiplicity of the associated primes whose first
/// variable is `x_i`; then `(I : x^alpha) = (I : (x_0 ... x_n)^inf)` and
/// `deg alpha` is at most the total multiplicity.
pub fn bounded_monomial(ideal: &MonIdeal) -> Result<BoundedMonomial> {
    let pieces = primary_decomposition(ideal)?;
    let mut alpha = vec![0u32; ideal.nvars];
    for p in &pieces {
        if let Some(&first) = p.prime.first() {
            alpha[first] += u32::try_from(p.multiplicity).map_err(|_| Error::BudgetExceeded("multiplicity".into()))?;
        }
    }
    let alpha = ExpVec::new(alpha);
    let bound: u64 = pieces.iter().map(|p| p.multiplicity).sum();
    let lhs = ideal.colon(&alpha);
    let all = ExpVec::new(vec![1; ideal.nvars]);
    let (rhs, _) = ideal.saturate(&all);
    if lhs != rhs || alpha.degree() as u64 > bound {
        return Err(Error::InternalInconsistency(format!("colon by {alpha} gives {lhs}, saturation gives {rhs}")));
    }
    Ok(BoundedMonomial { contains_monomial: lhs.is_unit(), alpha, bound })
}

/// Checks `sum_{r >= i} adeg_r <= m_i` and `adeg <= m_0`; a vanishing
/// Hilbert polynomial requires `adeg = 0`.
pub fn adeg_bounds_hold(a: &ArithmeticDegree, m: Option<&MVector>, n: usize) -> bool {
    match m {
        None => a.total() == 0,
        Some(m) => {
            let e = m.entries();
            let tails_ok = (0..=n as i64).all(|i| {
                let tail: u64 = (i..=n as i64).map(|r| a.get(r)).sum();
                let mi = e.get(i as usize).copied().unwrap_or(0);
                mi.to_u64().is_some_and(|mi| tail <= mi) || (mi <= 0 && tail == 0)
            });
            tails_ok && a.total() <= m.m0().max(0) as u64
        }
    }
}

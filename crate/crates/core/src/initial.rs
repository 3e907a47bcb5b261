//! Initial forms and initial spaces, the degree-`m_0` membership test for
//! tropical varieties, and witness polynomials certifying non-membership.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::numpoly::MVector;
use crate::polyring::{component_basis, ComponentBasis, GradedIdeal, KPoly};
use crate::tropical::ExpVec;
use crate::valfield::{parse_rat, render_rat, PuiseuxRat, Rat};

/// A polynomial over the residue field `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ResiduePoly {
    terms: BTreeMap<ExpVec, Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueTermJson {
    pub exp: Vec<u32>,
    pub coef: String,
}

impl ResiduePoly {
    pub fn zero() -> Self {
        ResiduePoly::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (ExpVec, Rat)>) -> Self {
        let mut p = ResiduePoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: ExpVec, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The exponent if this is a nonzero multiple of a single monomial.
    pub fn as_monomial(&self) -> Option<&ExpVec> {
        match self.terms.len() {
            1 => self.terms.keys().next(),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut p = ResiduePoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                p.add_term(e1.add(e2), c1 * c2);
            }
        }
        p
    }

    pub fn to_json_terms(&self) -> Vec<ResidueTermJson> {
        self.terms.iter().map(|(e, c)| ResidueTermJson { exp: e.0.clone(), coef: render_rat(c) }).collect()
    }

    pub fn from_json_terms(terms: &[ResidueTermJson]) -> Result<Self> {
        let parsed = terms.iter().map(|t| Ok((ExpVec::new(t.exp.clone()), parse_rat(&t.coef)?)));
        Ok(ResiduePoly::from_terms(parsed.collect::<Result<Vec<_>>>()?))
    }
}

impl fmt::Display for ResiduePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rat::zero();
            let a = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let constant = e.degree() == 0;
            if constant {
                write!(f, "{}", render_rat(&a))?;
            } else if a.is_one() {
                write!(f, "{e}")?;
            } else {
                write!(f, "{}*{e}", render_rat(&a))?;
            }
        }
        Ok(())
    }
}

/// A subspace of the degree-`d` part of `Q[x]`, stored in reduced row
/// echelon form over the canonical monomials of degree `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueSpace {
    pub degree: u32,
    pub monomials: Vec<ExpVec>,
    pub rows: Matrix<Rat>,
}

impl ResidueSpace {
    pub fn new(degree: u32, monomials: Vec<ExpVec>, rows: Matrix<Rat>) -> Self {
        let (rows, _) = linalg::rref(rows);
        ResidueSpace { degree, monomials, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn polynomials(&self) -> Vec<ResiduePoly> {
        self.rows
            .iter()
            .map(|r| ResiduePoly::from_terms(self.monomials.iter().cloned().zip(r.iter().cloned())))
            .collect()
    }
}

fn check_omega(nvars: usize, omega: &[Rat]) -> Result<()> {
    if omega.len() != nvars {
        return Err(Error::DimensionMismatch { expected: nvars, found: omega.len() });
    }
    Ok(())
}

/// `in_w(f)`: the terms maximizing `tau(f_a) + <w, a>`, each with
/// coefficient the residue of `f_a t^(H - <w, a>)`.
pub fn initial_form(f: &KPoly, omega: &[Rat]) -> Result<ResiduePoly> {
    check_omega(f.nvars(), omega)?;
    let weights: Vec<(&ExpVec, &PuiseuxRat, Rat)> =
        f.terms().map(|(e, c)| Ok((e, c, c.tropicalize()? + e.dot(omega)))).collect::<Result<_>>()?;
    let Some(h) = weights.iter().map(|(_, _, w)| w).max().cloned() else {
        return Ok(ResiduePoly::zero());
    };
    let mut out = ResiduePoly::zero();
    for (e, c, w) in weights {
        if w == h {
            let shifted = c * &PuiseuxRat::section(&(&h - e.dot(omega)));
            out.add_term(e.clone(), shifted.residue()?);
        }
    }
    Ok(out)
}

/// Multiplies every entry of `row` by `t^(-m)`, where `m` is the minimum
/// valuation of the row, so the row lies in `O^N` with a unit entry.
fn normalize_row(row: &mut [PuiseuxRat]) {
    let Some(m) = row.iter().filter(|x| !x.is_zero()).map(|x| x.valuation().expect("nonzero")).min() else {
        return;
    };
    if m.is_zero() {
        return;
    }
    let s = PuiseuxRat::section(&-m);
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x = &*x * &s;
        }
    }
}

/// Columns scaled by `t^(-<w, a>)`: the `0`-initial forms of the result are
/// the `w`-initial forms of the input.
fn scaled_rows(b: &ComponentBasis, omega: &[Rat]) -> Matrix<PuiseuxRat> {
    let sections: Vec<PuiseuxRat> = b.monomials.iter().map(|a| PuiseuxRat::section(&-a.dot(omega))).collect();
    b.rows
        .iter()
        .map(|r| r.iter().zip(&sections).map(|(x, s)| if x.is_zero() { x.clone() } else { x * s }).collect())
        .collect()
}

/// The residue image of `L ∩ O^N` for the row space `L` after column
/// scaling.
///
/// Each step normalizes the remaining rows to minimum valuation `0`, takes
/// the first column holding a unit, and clears that column in the other
/// remaining rows with factors of nonnegative valuation. Pivot rows then
/// have residues in echelon form, so no dimension is lost.
pub fn reduce_space(b: &ComponentBasis, omega: &[Rat]) -> Result<ResidueSpace> {
    if let Some(m) = b.monomials.first() {
        check_omega(m.nvars(), omega)?;
    }
    let mut rest = scaled_rows(b, omega);
    let mut residues: Matrix<Rat> = Vec::with_capacity(rest.len());
    rest.iter_mut().for_each(|r| normalize_row(r));
    while !rest.is_empty() {
        let (col, pick) = (0..b.monomials.len())
            .find_map(|j| {
                rest.iter()
                    .enumerate()
                    .filter(|(_, r)| !r[j].is_zero() && r[j].valuation().expect("nonzero").is_zero())
                    .min_by_key(|(_, r)| r[j].size())
                    .map(|(i, _)| (j, i))
            })
            .ok_or_else(|| Error::InternalInconsistency("normalized row without a unit entry".into()))?;
        let pivot = rest.swap_remove(pick);
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].checked_div(&pivot[col])?;
            for (x, p) in row.iter_mut().zip(&pivot) {
                if !p.is_zero() {
                    *x = &*x - &(&factor * p);
                }
            }
            normalize_row(row);
        }
        rest.retain(|r| r.iter().any(|x| !x.is_zero()));
        residues.push(pivot.iter().map(PuiseuxRat::reduce).collect::<Result<_>>()?);
    }
    if residues.len() != b.dim() {
        return Err(Error::InternalInconsistency("dependent rows in a component basis".into()));
    }
    Ok(ResidueSpace::new(b.degree, b.monomials.clone(), residues))
}

/// Degree-`d` part of `in_w(I)`.
pub fn initial_space(ideal: &GradedIdeal, omega: &[Rat], d: u32) -> Result<ResidueSpace> {
    check_omega(ideal.nvars(), omega)?;
    reduce_space(&component_basis(ideal, d), omega)
}

/// The first monomial, in canonical order, lying in the space.
///
/// In reduced echelon form a unit vector `e_a` is in the row span exactly
/// when it is one of the rows.
pub fn find_monomial(v: &ResidueSpace) -> Option<ExpVec> {
    v.rows
        .iter()
        .filter_map(|r| {
            let mut nz = r.iter().enumerate().filter(|(_, x)| !x.is_zero());
            let (j, _) = nz.next()?;
            nz.next().is_none().then_some(j)
        })
        .min()
        .map(|j| v.monomials[j].clone())
}

/// Whether `w` lies on the tropical variety of the saturated ideal `I`
/// with Hilbert polynomial data `m`: `in_w(I)_{m_0}` holds no monomial.
pub fn member(ideal: &GradedIdeal, m: &MVector, omega: &[Rat]) -> Result<bool> {
    let d = degree_m0(m)?;
    Ok(find_monomial(&initial_space(ideal, omega, d)?).is_none())
}

fn degree_m0(m: &MVector) -> Result<u32> {
    u32::try_from(m.m0()).map_err(|_| Error::InvalidInput(format!("m_0 = {} is negative", m.m0())))
}

/// A certificate of non-membership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub polynomial: KPoly,
    pub monomial: ExpVec,
}

/// Some `f` in `I_{m_0}` with `in_w(f)` a monomial.
///
/// The initial space is completed to all of `Q[x]_{m_0}` by monomials
/// `x^b` taken greedily in canonical order. Writing
/// `e_a = f + sum_j c_j e_b` with `f` in the scaled row space forces every
/// `c_j` to have positive valuation, hence `in_0(f) = x^a`.
pub fn witness_polynomial(ideal: &GradedIdeal, m: &MVector, omega: &[Rat]) -> Result<Witness> {
    let d = degree_m0(m)?;
    check_omega(ideal.nvars(), omega)?;
    let basis = component_basis(ideal, d);
    let space = reduce_space(&basis, omega)?;
    let a = find_monomial(&space).ok_or(Error::NoWitness)?;
    let nmono = basis.monomials.len();
    let unit = |j: usize| -> Vec<Rat> { (0..nmono).map(|i| if i == j { Rat::one() } else { Rat::zero() }).collect() };
    let mut completion = Vec::new();
    let mut current = space.rows.clone();
    for j in 0..nmono {
        if current.len() == nmono {
            break;
        }
        current.push(unit(j));
        if linalg::rank(current.clone()) == current.len() {
            completion.push(j);
        } else {
            current.pop();
        }
    }
    let scaled = scaled_rows(&basis, omega);
    let kunit = |j: usize| -> Vec<PuiseuxRat> {
        (0..nmono).map(|i| if i == j { PuiseuxRat::one() } else { PuiseuxRat::zero() }).collect()
    };
    let mut rows = scaled.clone();
    rows.extend(completion.iter().map(|&j| kunit(j)));
    let ia = basis.monomials.iter().position(|e| *e == a).expect("monomial of the basis");
    let coeffs = linalg::express_in_rows(&rows, &kunit(ia))?;
    let mut combo = vec![PuiseuxRat::zero(); nmono];
    for (lambda, row) in coeffs.iter().zip(&basis.rows) {
        if lambda.is_zero() {
            continue;
        }
        for (acc, x) in combo.iter_mut().zip(row) {
            if !x.is_zero() {
                *acc = &*acc + &(lambda * x);
            }
        }
    }
    let f = KPoly::from_coordinates(&basis.monomials, &combo);
    let init = initial_form(&f, omega)?;
    if init.as_monomial() != Some(&a) {
        return Err(Error::InternalInconsistency(format!("witness has initial form {init}, expected {a}")));
    }
    Ok(Witness { polynomial: f, monomial: a })
}

/// Compares membership over `Q(t)` with membership after the substitution
/// `t -> s^2`, i.e. over `Q(s)` with `s = t^(1/2)`, where the point `w`
/// becomes `2w`.
pub fn extension_invariance_check(ideal: &GradedIdeal, m: &MVector, grid: &[Vec<Rat>]) -> Result<bool> {
    let lifted = ideal.substitute_power(2);
    let two = Rat::from_integer(2.into());
    for omega in grid {
        let doubled: Vec<Rat> = omega.iter().map(|x| x * &two).collect();
        if member(ideal, m, omega)? != member(&lifted, m, &doubled)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tropical::tropicalize_poly;
    use crate::valfield::{parse_rat_list, rat_int};
    use proptest::prelude::*;

    fn kp(nvars: usize, terms: &[(&[u32], &str)]) -> KPoly {
        KPoly::from_terms(nvars, terms.iter().map(|(e, c)| (ExpVec::new(e.to_vec()), c.parse().unwrap()))).unwrap()
    }

    fn w(s: &str) -> Vec<Rat> {
        parse_rat_list(s).unwrap()
    }

    fn rp(terms: &[(&[u32], i64)]) -> ResiduePoly {
        ResiduePoly::from_terms(terms.iter().map(|(e, c)| (ExpVec::new(e.to_vec()), rat_int(*c))))
    }

    fn line() -> GradedIdeal {
        GradedIdeal::new(2, vec![kp(3, &[(&[1, 0, 0], "1"), (&[0, 1, 0], "1"), (&[0, 0, 1], "1")])]).unwrap()
    }

    fn tline() -> GradedIdeal {
        GradedIdeal::new(1, vec![kp(2, &[(&[1, 0], "1"), (&[0, 1], "t")])]).unwrap()
    }

    fn basis(rows: &[&[&str]]) -> ComponentBasis {
        ComponentBasis {
            degree: 1,
            monomials: vec![ExpVec::unit(2, 0), ExpVec::unit(2, 1)],
            rows: rows.iter().map(|r| r.iter().map(|s| s.parse().unwrap()).collect()).collect(),
        }
    }

    fn mv(v: &[i64]) -> MVector {
        MVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn initial_form_examples() {
        let f = kp(2, &[(&[1, 0], "1"), (&[0, 1], "t")]);
        assert_eq!(initial_form(&f, &w("0,0")).unwrap(), rp(&[(&[1, 0], 1)]));
        assert_eq!(initial_form(&f, &w("0,1")).unwrap(), rp(&[(&[1, 0], 1), (&[0, 1], 1)]));
        let g = line().generators()[0].clone();
        assert_eq!(initial_form(&g, &w("0,0,0")).unwrap().len(), 3);
        assert!(initial_form(&KPoly::zero(2), &w("0,0")).unwrap().is_zero());
        let h = kp(2, &[(&[1, 0], "3*t^(-1/2) + t"), (&[0, 1], "5 - t")]);
        assert_eq!(initial_form(&h, &w("0,1/2")).unwrap(), rp(&[(&[1, 0], 3), (&[0, 1], 5)]));
        assert!(matches!(initial_form(&f, &w("0")), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn reduce_space_examples() {
        let v = reduce_space(&basis(&[&["1", "t"]]), &w("0,0")).unwrap();
        assert_eq!(v.polynomials(), vec![rp(&[(&[1, 0], 1)])]);
        let v = reduce_space(&basis(&[&["1", "t"], &["1", "-t"]]), &w("0,1")).unwrap();
        assert_eq!(v.dim(), 2);
        let v = reduce_space(&basis(&[&["1", "0"], &["0", "1"]]), &w("3,-7/2")).unwrap();
        assert_eq!(v.dim(), 2);
        // naive residues of (1, 1 + t) and (1, 1) coincide; elimination recovers x1
        let v = reduce_space(&basis(&[&["1", "1 + t"], &["1", "1"]]), &w("0,0")).unwrap();
        assert_eq!(v.dim(), 2);
    }

    #[test]
    fn initial_space_examples() {
        let v = initial_space(&line(), &w("0,0,0"), 1).unwrap();
        assert_eq!(v.polynomials(), vec![rp(&[(&[1, 0, 0], 1), (&[0, 1, 0], 1), (&[0, 0, 1], 1)])]);
        let i = GradedIdeal::new(2, vec![kp(3, &[(&[1, 0, 0], "1"), (&[0, 1, 0], "t")])]).unwrap();
        let v = initial_space(&i, &w("0,1,0"), 1).unwrap();
        assert_eq!(v.polynomials(), vec![rp(&[(&[1, 0, 0], 1), (&[0, 1, 0], 1)])]);
    }

    #[test]
    fn find_monomial_examples() {
        let sp = |rows: Vec<Vec<i64>>| {
            ResidueSpace::new(
                1,
                vec![ExpVec::unit(2, 0), ExpVec::unit(2, 1)],
                rows.into_iter().map(|r| r.into_iter().map(rat_int).collect()).collect(),
            )
        };
        assert_eq!(find_monomial(&sp(vec![vec![1, 1]])), None);
        assert_eq!(find_monomial(&sp(vec![vec![1, 1], vec![1, -1]])), Some(ExpVec::unit(2, 0)));
        assert_eq!(find_monomial(&sp(vec![vec![0, 4]])), Some(ExpVec::unit(2, 1)));
    }

    #[test]
    fn membership_examples() {
        assert!(member(&line(), &mv(&[1, 1]), &w("0,0,0")).unwrap());
        assert!(!member(&line(), &mv(&[1, 1]), &w("0,0,1")).unwrap());
        assert!(member(&tline(), &mv(&[1]), &w("0,1")).unwrap());
        assert!(!member(&tline(), &mv(&[1]), &w("0,0")).unwrap());
    }

    #[test]
    fn witnesses() {
        let wit = witness_polynomial(&line(), &mv(&[1, 1]), &w("0,0,1")).unwrap();
        assert_eq!(wit.monomial, ExpVec::unit(3, 2));
        assert_eq!(tropicalize_poly(&wit.polynomial).argmax_terms(&w("0,0,1")).unwrap().len(), 1);
        let wit = witness_polynomial(&tline(), &mv(&[1]), &w("0,0")).unwrap();
        assert_eq!(wit.monomial, ExpVec::unit(2, 0));
        assert!(matches!(witness_polynomial(&line(), &mv(&[1, 1]), &w("0,0,0")), Err(Error::NoWitness)));
    }

    #[test]
    fn witness_for_a_pair_of_points() {
        // (2 x0 + x1 - 3 x2, (x0 - x2)^2) is a double point at [1:1:1]
        let i = GradedIdeal::new(
            2,
            vec![
                kp(3, &[(&[1, 0, 0], "2"), (&[0, 1, 0], "1"), (&[0, 0, 1], "-3")]),
                kp(3, &[(&[2, 0, 0], "1"), (&[1, 0, 1], "-2"), (&[0, 0, 2], "1")]),
            ],
        )
        .unwrap();
        let omega = w("0,1,-2");
        assert!(!member(&i, &mv(&[2]), &omega).unwrap());
        let wit = witness_polynomial(&i, &mv(&[2]), &omega).unwrap();
        assert_eq!(initial_form(&wit.polynomial, &omega).unwrap().as_monomial(), Some(&wit.monomial));
        assert!(member(&i, &mv(&[2]), &w("0,0,0")).unwrap());
    }

    #[test]
    fn extension_examples() {
        let grid: Vec<Vec<Rat>> = ["0,0,0", "0,1,0", "0,0,1", "0,-1,1", "0,1/2,0", "0,1,1"].iter().map(|s| w(s)).collect();
        assert!(extension_invariance_check(&line(), &mv(&[1, 1]), &grid).unwrap());
        let g2: Vec<Vec<Rat>> = ["0,0", "0,1", "0,1/2", "0,-1"].iter().map(|s| w(s)).collect();
        assert!(extension_invariance_check(&tline(), &mv(&[1]), &g2).unwrap());
    }

    fn arb_coef() -> impl Strategy<Value = PuiseuxRat> {
        (-3i64..=3, 1i64..=3, -2i64..=2, -2i64..=2).prop_map(|(a, b, e, c)| {
            let lead = PuiseuxRat::monomial(Rat::new(a.into(), b.into()), &rat_int(e));
            &lead + &PuiseuxRat::monomial(rat_int(c), &rat_int(e + 1))
        })
    }

    fn arb_poly() -> impl Strategy<Value = KPoly> {
        proptest::collection::vec(((0u32..3, 0u32..3), arb_coef()), 1..4).prop_map(|ts| {
            KPoly::from_terms(2, ts.into_iter().map(|((a, b), c)| (ExpVec::new(vec![a, b]), c))).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn initial_forms_are_multiplicative(f in arb_poly(), g in arb_poly(), a in -3i64..=3, b in 0i64..=2) {
            let omega = vec![Rat::new(a.into(), (b + 1).into()), rat_int(b - 1)];
            let lhs = initial_form(&(&f * &g), &omega).unwrap();
            let rhs = initial_form(&f, &omega).unwrap().mul(&initial_form(&g, &omega).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}

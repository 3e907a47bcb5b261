//! Hilbert points of ideals in Plücker coordinates, their tropicalization,
//! and the family of double points supported at a fixed point of the plane.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::initial::member;
use crate::numpoly::{g_eval, MVector};
use crate::polyring::{component_basis, dim_s, monomial_index, monomials_of_degree, wedge_coordinates, GradedIdeal, KPoly, PlueckerVector};
use crate::tropical::{proj_normalize, ExpVec, TropProjPoint, TropVal};
use crate::valfield::{rat, PuiseuxRat, Rat};

/// The point of the Hilbert scheme given by `I_{m_0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPoint {
    pub m: MVector,
    pub pluecker: PlueckerVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TropHilbertPoint(pub TropProjPoint);

impl fmt::Display for TropHilbertPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Requires `dim I_{m_0} = dim S_{m_0} - g(m; m_0)`.
pub fn hilbert_point(ideal: &GradedIdeal, m: &MVector) -> Result<HilbertPoint> {
    let d = u32::try_from(m.m0()).map_err(|_| Error::InvalidInput("negative m_0".into()))?;
    let basis = component_basis(ideal, d);
    let total = dim_s(ideal.nvars(), d) as i64;
    let codim: i64 = g_eval(m, m.m0()).try_into().map_err(|_| Error::InvalidInput("g(m; m_0) overflows".into()))?;
    let expected = total - codim;
    if expected < 0 || basis.dim() as i64 != expected {
        return Err(Error::WrongHilbertPolynomial { expected: expected.max(0) as usize, found: basis.dim() });
    }
    if basis.dim() == 0 {
        return Err(Error::DegenerateInput("I_{m_0} is zero".into()));
    }
    Ok(HilbertPoint { m: m.clone(), pluecker: wedge_coordinates(&basis.rows)? })
}

pub fn trop_hilbert_point(h: &HilbertPoint) -> Result<TropHilbertPoint> {
    Ok(TropHilbertPoint(proj_normalize(&h.pluecker.tropicalize())?))
}

/// Outcome of comparing two ideals with the same tropical Hilbert point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TropPointReport {
    /// The tropical Hilbert points differ; nothing to check.
    HypothesisFalse,
    Pass { points: usize },
    Counterexample { omega: Vec<Rat>, member_i: bool, member_j: bool },
}

pub fn same_trop_point_implies_same_variety(
    i: &GradedIdeal,
    j: &GradedIdeal,
    m: &MVector,
    grid: &[Vec<Rat>],
) -> Result<TropPointReport> {
    let ti = trop_hilbert_point(&hilbert_point(i, m)?)?;
    let tj = trop_hilbert_point(&hilbert_point(j, m)?)?;
    if ti != tj {
        return Ok(TropPointReport::HypothesisFalse);
    }
    for omega in grid {
        let (a, b) = (member(i, m, omega)?, member(j, m, omega)?);
        if a != b {
            return Ok(TropPointReport::Counterexample { omega: omega.clone(), member_i: a, member_j: b });
        }
    }
    Ok(TropPointReport::Pass { points: grid.len() })
}

/// Which piece of the tropicalized family a double point lands on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    P,
    Ray1,
    Ray2,
    Ray3,
    Ray4,
    Ray5,
    Ray6,
}

impl CaseTag {
    pub const ALL: [CaseTag; 7] =
        [CaseTag::P, CaseTag::Ray1, CaseTag::Ray2, CaseTag::Ray3, CaseTag::Ray4, CaseTag::Ray5, CaseTag::Ray6];

    pub fn name(&self) -> &'static str {
        match self {
            CaseTag::P => "P",
            CaseTag::Ray1 => "ray1",
            CaseTag::Ray2 => "ray2",
            CaseTag::Ray3 => "ray3",
            CaseTag::Ray4 => "ray4",
            CaseTag::Ray5 => "ray5",
            CaseTag::Ray6 => "ray6",
        }
    }

    /// Direction of the ray; zero for the apex.
    pub fn direction(&self) -> [i64; 15] {
        let mut d = [0i64; 15];
        let minus = |d: &mut [i64; 15], idx: &[usize]| idx.iter().for_each(|&i| d[i] = -1);
        match self {
            CaseTag::P => {}
            CaseTag::Ray1 => d = [1, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1],
            CaseTag::Ray2 => minus(&mut d, &[0, 5, 8, 9]),
            CaseTag::Ray3 => minus(&mut d, &[2, 6, 10, 14]),
            CaseTag::Ray4 => minus(&mut d, &[3]),
            CaseTag::Ray5 => minus(&mut d, &[7]),
            CaseTag::Ray6 => minus(&mut d, &[12]),
        }
        d
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CaseTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CaseTag::ALL
            .iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown case `{s}`")))
    }
}

/// Case tag with the tropicalizations `A, B, C` of the support point and the
/// distance `mu` from the apex along the ray, all read off the inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairsCase {
    pub tag: CaseTag,
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub mu: Rat,
}

/// Apex coordinates as coefficient triples of `(A, B, C)`.
const APEX: [[i64; 3]; 15] = [
    [1, 1, 1],
    [0, 2, 1],
    [0, 1, 2],
    [0, 1, 2],
    [0, 0, 3],
    [-1, 1, 3],
    [0, 3, 0],
    [0, 2, 1],
    [-1, 3, 1],
    [-1, 2, 2],
    [2, 1, 0],
    [2, 0, 1],
    [1, 1, 1],
    [1, 0, 2],
    [1, 2, 0],
];

fn int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// The apex evaluated at `(A, B, C)` plus `mu` times the direction of
/// `case`, before normalization.
pub fn expected_pairs_coordinates(a: &Rat, b: &Rat, c: &Rat, case: CaseTag, mu: &Rat) -> Vec<Rat> {
    let d = case.direction();
    APEX.iter()
        .zip(d)
        .map(|(f, di)| a * int(f[0]) + b * int(f[1]) + c * int(f[2]) + mu * int(di))
        .collect()
}

pub fn expected_pairs_point(a: &Rat, b: &Rat, c: &Rat, case: CaseTag, mu: &Rat) -> Result<TropHilbertPoint> {
    if case == CaseTag::P && !mu.is_zero() {
        return Err(Error::InvalidInput("the apex takes mu = 0".into()));
    }
    if *mu < Rat::zero() {
        return Err(Error::InvalidInput("mu must be nonnegative".into()));
    }
    let v: Vec<TropVal> = expected_pairs_coordinates(a, b, c, case, mu).into_iter().map(TropVal::Fin).collect();
    Ok(TropHilbertPoint(proj_normalize(&v)?))
}

/// The `mu` placing `point` on the given ray through the apex, if any.
pub fn fit_mu(point: &TropHilbertPoint, a: &Rat, b: &Rat, c: &Rat, case: CaseTag) -> Option<Rat> {
    let apex = expected_pairs_coordinates(a, b, c, CaseTag::P, &Rat::zero());
    let v: Vec<Rat> = point.0.coords().iter().map(|x| x.finite().cloned()).collect::<Option<_>>()?;
    if v.len() != 15 {
        return None;
    }
    let diff: Vec<Rat> = v.iter().zip(&apex).map(|(x, y)| x - y).collect();
    let d = case.direction();
    let mu = match (0..15).find(|&i| d[i] != d[0]) {
        None => Rat::zero(),
        Some(i) => (&diff[i] - &diff[0]) / int(d[i] - d[0]),
    };
    if mu < Rat::zero() {
        return None;
    }
    let expected = expected_pairs_point(a, b, c, case, &mu).ok()?;
    (expected == *point).then_some(mu)
}

/// The line `l x0 + x1 + n x2` through `[a:b:c]`.
pub fn tangent_line(a: &PuiseuxRat, b: &PuiseuxRat, c: &PuiseuxRat, l: &PuiseuxRat) -> Result<KPoly> {
    let n = -(&(a * l) + b).checked_div(c)?;
    KPoly::from_terms(
        3,
        [(ExpVec::unit(3, 0), l.clone()), (ExpVec::unit(3, 1), PuiseuxRat::one()), (ExpVec::unit(3, 2), n)],
    )
}

/// The four basis polynomials `x0 f, x1 f, x2 f, (c x0 - a x2)^2` of `I_2`.
pub fn pairs_basis(a: &PuiseuxRat, b: &PuiseuxRat, c: &PuiseuxRat, l: &PuiseuxRat) -> Result<Vec<KPoly>> {
    let f = tangent_line(a, b, c, l)?;
    let mut out: Vec<KPoly> = (0..3).map(|i| f.mul_monomial(&ExpVec::unit(3, i))).collect();
    let g = KPoly::from_terms(3, [(ExpVec::unit(3, 0), c.clone()), (ExpVec::unit(3, 2), -a)])?;
    out.push(&g * &g);
    Ok(out)
}

/// The ideal `(f, (c x0 - a x2)^2)` of the double point at `[a:b:c]` with
/// tangent line `f`.
pub fn pairs_ideal(a: &PuiseuxRat, b: &PuiseuxRat, c: &PuiseuxRat, l: &PuiseuxRat) -> Result<GradedIdeal> {
    let basis = pairs_basis(a, b, c, l)?;
    let f = basis[0].clone();
    let f = KPoly::from_terms(3, f.terms().map(|(e, c)| (ExpVec::new(vec![e.0[0] - 1, e.0[1], e.0[2]]), c.clone())))?;
    GradedIdeal::new(2, vec![f, basis[3].clone()])
}

/// Classifies `(a, b, c, l)` from valuations alone: `A + L` against `B`,
/// and on a tie the residue `r` of `al/b`, where `r = -1, 1, -1/2, -2`
/// make `al+b, al-b, 2al+b, al+2b` drop valuation.
pub fn classify_pairs(a: &PuiseuxRat, b: &PuiseuxRat, c: &PuiseuxRat, l: &PuiseuxRat) -> Result<PairsCase> {
    for (name, x) in [("a", a), ("b", b), ("c", c), ("l", l)] {
        if x.is_zero() {
            return Err(Error::NonGenericInput(format!("{name} = 0")));
        }
    }
    let (ta, tb, tc, tl) = (a.tropicalize()?, b.tropicalize()?, c.tropicalize()?, l.tropicalize()?);
    let al = a * l;
    let tal = &ta + &tl;
    let (tag, mu) = if tal > tb {
        (CaseTag::Ray1, &tal - &tb)
    } else if tal < tb {
        (CaseTag::Ray2, &tb - &tal)
    } else {
        let r = al.checked_div(b)?.residue()?;
        let binomials = [
            (rat(-1, 1), CaseTag::Ray3, &al + b),
            (rat(1, 1), CaseTag::Ray4, &al - b),
            (rat(-1, 2), CaseTag::Ray5, &(&al + &al) + b),
            (rat(-2, 1), CaseTag::Ray6, &al + &(b + b)),
        ];
        match binomials.into_iter().find(|(root, _, _)| *root == r) {
            None => (CaseTag::P, Rat::zero()),
            Some((_, tag, poly)) => {
                if poly.is_zero() {
                    return Err(Error::NonGenericInput(format!("{tag} binomial vanishes identically")));
                }
                (tag, &tb - &poly.tropicalize()?)
            }
        }
    };
    Ok(PairsCase { tag, a: ta, b: tb, c: tc, mu })
}

/// Hilbert point of the double point from the fixed four-polynomial basis,
/// its tropicalization, and its case.
pub fn pairs_of_points(
    a: &PuiseuxRat,
    b: &PuiseuxRat,
    c: &PuiseuxRat,
    l: &PuiseuxRat,
) -> Result<(HilbertPoint, TropHilbertPoint, PairsCase)> {
    let case = classify_pairs(a, b, c, l)?;
    let basis = pairs_basis(a, b, c, l)?;
    let monomials = monomials_of_degree(3, 2);
    let index = monomial_index(&monomials);
    let rows = basis.iter().map(|p| p.coordinates(&index, monomials.len())).collect::<Result<Vec<_>>>()?;
    let pluecker = wedge_coordinates(&rows).map_err(|_| Error::NonGenericInput("basis is dependent".into()))?;
    if let Some(i) = pluecker.coords.iter().position(PuiseuxRat::is_zero) {
        return Err(Error::NonGenericInput(format!("Plücker coordinate {} vanishes", i + 1)));
    }
    let h = HilbertPoint { m: MVector::new(vec![2])?, pluecker };
    let t = trop_hilbert_point(&h)?;
    Ok((h, t, case))
}

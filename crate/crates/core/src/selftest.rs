//! Seeded property corpora, fixtures and the suites behind `selftest`.
//!
//! Every suite is a property that holds for all seeds; the seed only picks
//! the sample.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbpoint::{
    expected_pairs_point, fit_mu, pairs_ideal, pairs_of_points, same_trop_point_implies_same_variety, CaseTag,
    TropPointReport,
};
use crate::initial::{extension_invariance_check, find_monomial, initial_space, member, witness_polynomial};
use crate::linalg;
use crate::monideal::{adeg, adeg_bounds_hold, bounded_monomial, multiplicity, primary_decomposition, MonIdeal};
use crate::numpoly::{binom_u, decompose, g_eval, g_to_polynomial, is_admissible, MVector, NumPoly};
use crate::polyring::{component_basis, fit_hilbert_polynomial, monomial_index, monomials_of_degree, GradedIdeal, KPoly};
use crate::subdiv::{dual_curve, perturbation_noninjectivity_witness, regular_subdivision, LiftedConfig};
use crate::tropical::{tropicalize_poly, ExpVec};
use crate::valfield::{parse_rat_list, rat, rat_int, PuiseuxRat, Rat};

pub const DEFAULT_SEED: u64 = 20_240_601;

pub const SUITES: [&str; 9] =
    ["pairs", "kapranov", "certificates", "hilbert", "numpoly", "monideal", "extension", "trop-point", "subdiv"];

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub seed: u64,
    pub cases: usize,
    pub failures: Vec<String>,
    #[serde(serialize_with = "ser_secs")]
    pub elapsed: Duration,
}

fn ser_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn record<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.cases += 1;
                self.failures.push(format!("{}: {e}", what()));
                None
            }
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero rational `p/q` with `|p| <= 5`, `q <= 3`.
pub fn random_coefficient(rng: &mut impl Rng) -> Rat {
    let p = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
    rat(p, rng.gen_range(1..=3))
}

/// A rational in `[-2, 2]` with denominator 1 or 2.
pub fn random_valuation(rng: &mut impl Rng) -> Rat {
    rat(rng.gen_range(-4..=4), 2)
}

fn ktm(c: Rat, w: &Rat) -> PuiseuxRat {
    PuiseuxRat::monomial(c, w)
}

/// Leading data `c * t^v` of the support point `[a:b:c]`.
#[derive(Clone, Debug)]
pub struct Support {
    pub coef: [Rat; 3],
    pub val: [Rat; 3],
}

impl Support {
    pub fn random(rng: &mut impl Rng) -> Self {
        Support {
            coef: [random_coefficient(rng), random_coefficient(rng), random_coefficient(rng)],
            val: [random_valuation(rng), random_valuation(rng), random_valuation(rng)],
        }
    }

    pub fn point(&self) -> [PuiseuxRat; 3] {
        [0, 1, 2].map(|i| ktm(self.coef[i].clone(), &self.val[i]))
    }
}

/// A slope `l` putting the double point at `s` in the stratum `tag`, at
/// distance `delta > 0` from the apex on the rays.
pub fn random_slope(rng: &mut impl Rng, s: &Support, tag: CaseTag, delta: &Rat) -> PuiseuxRat {
    let ([ca, cb, _], [va, vb, _]) = (&s.coef, &s.val);
    let vl = vb - va;
    let special = [rat(-1, 1), rat(1, 1), rat(-1, 2), rat(-2, 1)];
    match tag {
        CaseTag::P => loop {
            let cl = random_coefficient(rng);
            if !special.contains(&(ca * &cl / cb)) {
                break ktm(cl, &vl);
            }
        },
        CaseTag::Ray1 => ktm(random_coefficient(rng), &(&vl - delta)),
        CaseTag::Ray2 => ktm(random_coefficient(rng), &(&vl + delta)),
        _ => {
            let r = match tag {
                CaseTag::Ray3 => &special[0],
                CaseTag::Ray4 => &special[1],
                CaseTag::Ray5 => &special[2],
                _ => &special[3],
            };
            let lead = ktm(r * cb / ca, &vl);
            &lead + &ktm(random_coefficient(rng), &(&vl + delta))
        }
    }
}

/// Inputs `(a, b, c, l)` landing in the stratum `tag`.
pub fn random_pairs_input(rng: &mut impl Rng, tag: CaseTag) -> [PuiseuxRat; 4] {
    let s = Support::random(rng);
    let delta = rat(rng.gen_range(1..=6), 2);
    let l = random_slope(rng, &s, tag, &delta);
    let [a, b, c] = s.point();
    [a, b, c, l]
}

/// A homogeneous polynomial in three variables of degree `1..=3`; some
/// coefficients are binomials in `t`.
pub fn random_kpoly(rng: &mut impl Rng) -> KPoly {
    let d = rng.gen_range(1..=3);
    let mut monos = monomials_of_degree(3, d);
    monos.shuffle(rng);
    let k = rng.gen_range(1..=monos.len());
    let terms = monos.into_iter().take(k).map(|e| {
        let w = rat_int(rng.gen_range(-2..=2));
        let mut c = ktm(random_coefficient(rng), &w);
        if rng.gen_bool(0.3) {
            c = &c + &ktm(random_coefficient(rng), &(&w + rat_int(rng.gen_range(1..=2))));
        }
        (e, c)
    });
    KPoly::from_terms(3, terms).expect("three variables")
}

/// Up to four generators of degree `1..=4` in `n + 1 <= 4` variables.
pub fn random_monideal(rng: &mut impl Rng) -> MonIdeal {
    let nvars = rng.gen_range(2..=4);
    let ngens = rng.gen_range(1..=4);
    let gens: Vec<ExpVec> = (0..ngens)
        .map(|_| {
            let d = rng.gen_range(1..=4);
            let mut e = vec![0u32; nvars];
            for _ in 0..d {
                e[rng.gen_range(0..nvars)] += 1;
            }
            ExpVec::new(e)
        })
        .collect();
    MonIdeal::new(nvars, gens).expect("nonempty generators")
}

fn kp(terms: &[(&[u32], &str)]) -> KPoly {
    KPoly::from_terms(3, terms.iter().map(|(e, c)| (ExpVec::new(e.to_vec()), c.parse().expect("fixture coefficient"))))
        .expect("fixture polynomial")
}

/// Hilbert polynomial data of a plane curve of degree `e`.
pub fn plane_curve_m(e: i64) -> MVector {
    decompose(&NumPoly::new(vec![rat(e * (3 - e), 2), rat_int(e)])).expect("numerical polynomial")
}

/// A saturated test ideal in three variables with its Hilbert data.
pub struct TestIdeal {
    pub name: String,
    pub ideal: GradedIdeal,
    pub m: MVector,
}

/// Principal ideals of degree at most 3, linear ideals and double points.
pub fn test_ideal_family() -> Result<Vec<TestIdeal>> {
    let mut out = Vec::new();
    type Terms = Vec<(&'static [u32], &'static str)>;
    let principal: [(&str, Terms); 5] = [
        ("line", vec![(&[1, 0, 0], "1"), (&[0, 1, 0], "t"), (&[0, 0, 1], "t^-1")]),
        ("line2", vec![(&[1, 0, 0], "1 + t"), (&[0, 1, 0], "-1")]),
        ("conic", vec![(&[2, 0, 0], "1"), (&[0, 1, 1], "t^-1"), (&[0, 0, 2], "3 + t^2"), (&[1, 1, 0], "t")]),
        ("conic2", vec![(&[1, 1, 0], "1"), (&[0, 0, 2], "-t")]),
        ("cubic", vec![(&[3, 0, 0], "1"), (&[0, 3, 0], "t"), (&[0, 0, 3], "1"), (&[1, 1, 1], "t^-1")]),
    ];
    for (name, terms) in principal {
        let f = kp(&terms);
        let e = f.homogeneous_degree().expect("homogeneous") as i64;
        out.push(TestIdeal { name: name.into(), ideal: GradedIdeal::new(2, vec![f])?, m: plane_curve_m(e) });
    }
    let point = GradedIdeal::new(
        2,
        vec![kp(&[(&[0, 1, 0], "1"), (&[1, 0, 0], "-t")]), kp(&[(&[0, 0, 1], "1"), (&[1, 0, 0], "-1 - t")])],
    )?;
    out.push(TestIdeal { name: "point".into(), m: fit_hilbert_polynomial(&point, 12)?, ideal: point });
    let k = |s: &str| -> PuiseuxRat { s.parse().expect("fixture coefficient") };
    let doubles = [
        ("double-P", ["1", "1", "1", "2"]),
        ("double-ray1", ["t", "2", "1", "t^-3"]),
        ("double-ray2", ["1", "1", "1", "t"]),
        ("double-ray3", ["1", "1", "1", "-1 + t"]),
    ];
    for (name, [a, b, c, l]) in doubles {
        let ideal = pairs_ideal(&k(a), &k(b), &k(c), &k(l))?;
        out.push(TestIdeal { name: name.into(), ideal, m: MVector::new(vec![2])? });
    }
    Ok(out)
}

/// `(0, p, q)` for `p, q` in `{-3/2, -1, ..., 3/2}`.
pub fn grid7() -> Vec<Vec<Rat>> {
    let steps: Vec<Rat> = (-3..=3).map(|i| rat(i, 2)).collect();
    steps.iter().flat_map(|p| steps.iter().map(move |q| vec![rat_int(0), p.clone(), q.clone()])).collect()
}

pub fn grid9() -> Vec<Vec<Rat>> {
    ["0,0,0", "0,1,0", "0,0,1", "0,-1,0", "0,1,1", "0,1/2,-1", "1,0,0", "0,2,1", "0,-1,-1"]
        .iter()
        .map(|s| parse_rat_list(s).expect("fixture grid"))
        .collect()
}

/// Heights `0, 0, 0, 0, 0, 0`: every point lies on one flat face.
pub fn flat_conic() -> LiftedConfig {
    LiftedConfig::new(2, vec![rat_int(0); 6]).expect("six heights")
}

pub fn subdiv_fixtures(rng: &mut impl Rng) -> Vec<LiftedConfig> {
    let mut out = Vec::new();
    for bits in 0..27u32 {
        let hs = (0..3).map(|i| rat_int(((bits / 3u32.pow(i)) % 3) as i64)).collect();
        out.push(LiftedConfig::new(1, hs).expect("three heights"));
    }
    for bits in 0..64u32 {
        let hs = (0..6).map(|i| rat_int(((bits >> i) & 1) as i64)).collect();
        out.push(LiftedConfig::new(2, hs).expect("six heights"));
    }
    for hs in [[0, 0, -10, -10, -10, -10], [-5, -5, 0, 0, 0, 0], [0, 0, 0, 0, 0, 1]] {
        out.push(LiftedConfig::new(2, hs.iter().map(|&h| rat_int(h)).collect()).expect("six heights"));
    }
    for _ in 0..100 {
        let hs = (0..10).map(|_| random_valuation(rng)).collect();
        out.push(LiftedConfig::new(3, hs).expect("ten heights"));
    }
    out
}

fn suite_pairs(rng: &mut ChaCha8Rng, t: &mut Tally) {
    for tag in CaseTag::ALL {
        let mut done = 0;
        let mut attempts = 0;
        while done < 20 && attempts < 200 {
            attempts += 1;
            let [a, b, c, l] = random_pairs_input(rng, tag);
            let (_, point, case) = match pairs_of_points(&a, &b, &c, &l) {
                Err(Error::NonGenericInput(_)) => continue,
                other => match t.record(other, || format!("{tag} a={a} b={b} c={c} l={l}")) {
                    Some(v) => v,
                    None => {
                        done += 1;
                        continue;
                    }
                },
            };
            done += 1;
            let expected = expected_pairs_point(&case.a, &case.b, &case.c, tag, &case.mu);
            let ok = case.tag == tag
                && expected.is_ok_and(|e| e == point)
                && fit_mu(&point, &case.a, &case.b, &case.c, tag).is_some_and(|mu| mu == case.mu);
            t.check(ok, || format!("{tag}: a={a} b={b} c={c} l={l} classified {} mu={}", case.tag, case.mu));
        }
        t.check(done == 20, || format!("{tag}: only {done} generic inputs in {attempts} attempts"));
    }
}

fn suite_kapranov(rng: &mut ChaCha8Rng, t: &mut Tally) {
    let grid = grid7();
    for _ in 0..50 {
        let f = random_kpoly(rng);
        let e = f.homogeneous_degree().expect("homogeneous") as i64;
        let Some(ideal) = t.record(GradedIdeal::new(2, vec![f.clone()]), || format!("ideal of {f}")) else { continue };
        let m = plane_curve_m(e);
        let phi = tropicalize_poly(&f);
        for omega in &grid {
            let lhs = member(&ideal, &m, omega);
            let rhs = phi.in_zero_locus(omega);
            match (lhs, rhs) {
                (Ok(x), Ok(y)) => t.check(x == y, || format!("f={f} w={omega:?}: member {x}, zero locus {y}")),
                (Err(e), _) | (_, Err(e)) => t.check(false, || format!("f={f} w={omega:?}: {e}")),
            }
        }
    }
}

fn in_component(ideal: &GradedIdeal, d: u32, f: &KPoly) -> Result<bool> {
    let basis = component_basis(ideal, d);
    let index = monomial_index(&basis.monomials);
    let mut rows = basis.rows.clone();
    rows.push(f.coordinates(&index, basis.monomials.len())?);
    Ok(linalg::rank(rows) == basis.dim())
}

fn suite_certificates(t: &mut Tally) -> Result<()> {
    let grid = grid7();
    for ti in test_ideal_family()? {
        let m0 = ti.m.m0() as u32;
        for omega in &grid {
            let what = || format!("{} w={omega:?}", ti.name);
            let Some(is_member) = t.record(member(&ti.ideal, &ti.m, omega), what) else { continue };
            if is_member {
                let next = initial_space(&ti.ideal, omega, m0 + 1).map(|v| find_monomial(&v));
                t.check(next.is_ok_and(|x| x.is_none()), || format!("{}: monomial at degree m0+1", what()));
                continue;
            }
            let Some(w) = t.record(witness_polynomial(&ti.ideal, &ti.m, omega), what) else { continue };
            let argmax = tropicalize_poly(&w.polynomial).argmax_terms(omega);
            let unique = argmax.is_ok_and(|a| a == vec![w.monomial.clone()]);
            let inside = in_component(&ti.ideal, m0, &w.polynomial).unwrap_or(false);
            t.check(unique && inside, || format!("{}: bad witness {}", what(), w.polynomial));
        }
    }
    Ok(())
}

fn random_omega(rng: &mut impl Rng) -> Vec<Rat> {
    (0..3).map(|_| rat(rng.gen_range(-12..=12), rng.gen_range(1..=4))).collect()
}

fn suite_hilbert(rng: &mut ChaCha8Rng, t: &mut Tally) -> Result<()> {
    for ti in test_ideal_family()? {
        for d in 0..=4 {
            let dim = component_basis(&ti.ideal, d).dim();
            for _ in 0..25 {
                let omega = random_omega(rng);
                let got = initial_space(&ti.ideal, &omega, d).map(|v| v.dim());
                t.check(got.as_ref().is_ok_and(|&g| g == dim), || {
                    format!("{} d={d} w={omega:?}: initial dim {got:?}, ideal dim {dim}", ti.name)
                });
            }
        }
    }
    Ok(())
}

/// Nonincreasing positive sequences of length `len` bounded by `top`.
fn nonincreasing(len: usize, top: i64) -> Vec<Vec<i64>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=top {
        for mut rest in nonincreasing(len - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn suite_numpoly(t: &mut Tally) {
    for len in 1..=5 {
        for v in nonincreasing(len, 6) {
            let m = MVector::new(v.clone()).expect("nonempty");
            if !is_admissible(&m, 5) {
                continue;
            }
            let back = decompose(&g_to_polynomial(&m));
            t.check(back.as_ref().is_ok_and(|b| *b == m), || format!("{m}: decomposes to {back:?}"));
        }
    }
    for n in 0..=4usize {
        let ones = MVector::new(vec![1; n + 1]).expect("nonempty");
        for d in 0..=8i64 {
            let want = binom_u(n as u64 + d as u64, n as u64);
            t.check(g_eval(&ones, d) == want.into(), || format!("g(1^{}, {d}) != {want}", n + 1));
        }
    }
}

fn suite_monideal(rng: &mut ChaCha8Rng, t: &mut Tally) {
    for _ in 0..200 {
        let ideal = random_monideal(rng);
        let nv = ideal.nvars();
        let Some(pieces) = t.record(primary_decomposition(&ideal), || format!("decompose {ideal}")) else { continue };
        let back = pieces.iter().fold(MonIdeal::unit(nv), |acc, p| acc.intersect(&p.q));
        t.check(back == ideal, || format!("{ideal}: pieces intersect to {back}"));
        let all = ExpVec::new(vec![1; nv]);
        let mut fs: Vec<ExpVec> = (0..nv).map(|i| ExpVec::unit(nv, i)).collect();
        fs.push(all.clone());
        for f in &fs {
            let support: Vec<usize> = (0..nv).filter(|&i| f.0[i] > 0).collect();
            let bound: u64 = pieces.iter().filter(|p| p.prime.iter().any(|v| support.contains(v))).map(|p| p.multiplicity).sum();
            let ell = ideal.ell(f) as u64;
            t.check(ell <= bound, || format!("{ideal}: ell_{f} = {ell} > {bound}"));
        }
        for p in &pieces {
            let m = multiplicity(&ideal, &p.prime);
            t.check(m.as_ref().is_ok_and(|&m| m == p.multiplicity), || format!("{ideal}: multiplicity {m:?}"));
        }
        let hp = ideal.hilbert_polynomial();
        let a = adeg(&ideal);
        match (hp, a) {
            (Ok(hp), Ok(a)) => {
                t.check(adeg_bounds_hold(&a, hp.as_ref(), ideal.n()), || format!("{ideal}: adeg {:?} vs {hp:?}", a.entries()))
            }
            (Err(e), _) | (_, Err(e)) => t.check(false, || format!("{ideal}: {e}")),
        }
        if let Some(bm) = t.record(bounded_monomial(&ideal), || format!("bounded monomial of {ideal}")) {
            let mut sat = ideal.clone();
            loop {
                let next = sat.colon(&all);
                if next == sat {
                    break;
                }
                sat = next;
            }
            let total: u64 = pieces.iter().map(|p| p.multiplicity).sum();
            let ok = ideal.colon(&bm.alpha) == sat && bm.alpha.degree() as u64 <= total;
            t.check(ok, || format!("{ideal}: colon by {} differs from saturation {sat}", bm.alpha));
        }
    }
}

fn suite_extension(t: &mut Tally) -> Result<()> {
    let grid = grid7();
    for ti in test_ideal_family()? {
        let r = extension_invariance_check(&ti.ideal, &ti.m, &grid);
        t.check(r.as_ref().is_ok_and(|&ok| ok), || format!("{}: {r:?}", ti.name));
    }
    Ok(())
}

fn suite_trop_point(rng: &mut ChaCha8Rng, t: &mut Tally) {
    let grid = grid9();
    let m = MVector::new(vec![2]).expect("nonempty");
    let mut distinct = 0;
    for k in 0..10 {
        let tag = CaseTag::ALL[k % CaseTag::ALL.len()];
        let s = Support::random(rng);
        let delta = rat(rng.gen_range(1..=6), 2);
        let l1 = random_slope(rng, &s, tag, &delta);
        let l2 = loop {
            let l = random_slope(rng, &s, tag, &delta);
            if l != l1 {
                break l;
            }
        };
        let [a, b, c] = s.point();
        let what = || format!("{tag}: a={a} b={b} c={c} l={l1} / {l2}");
        let (Some(i), Some(j)) = (t.record(pairs_ideal(&a, &b, &c, &l1), what), t.record(pairs_ideal(&a, &b, &c, &l2), what))
        else {
            continue;
        };
        if i != j {
            distinct += 1;
        }
        let r = same_trop_point_implies_same_variety(&i, &j, &m, &grid);
        t.check(matches!(r, Ok(TropPointReport::Pass { .. })), || format!("{}: {r:?}", what()));
    }
    t.check(distinct > 0, || "no pair with distinct ideals".into());
}

fn suite_subdiv(rng: &mut ChaCha8Rng, t: &mut Tally) {
    for cfg in subdiv_fixtures(rng) {
        let what = || format!("d={} heights={:?}", cfg.degree(), cfg.heights().iter().map(|h| h.to_string()).collect::<Vec<_>>());
        let Some(curve) = t.record(dual_curve(&cfg), what) else { continue };
        let bad = curve.unbalanced_vertices();
        t.check(bad.as_ref().is_ok_and(|b| b.is_empty()), || format!("{}: unbalanced at {bad:?}", what()));
        let sub = regular_subdivision(&cfg);
        let w = perturbation_noninjectivity_witness(&cfg);
        let ok = match &w {
            Ok(None) => sub.uses_all_points(),
            Ok(Some(other)) => !sub.in_region_p() && *other != cfg && dual_curve(other).is_ok_and(|c| c == curve),
            Err(_) => false,
        };
        t.check(ok, || format!("{}: witness {w:?}", what()));
    }
    let flat = flat_conic();
    let w = perturbation_noninjectivity_witness(&flat);
    let ok = match &w {
        Ok(Some(other)) => other.heights() != flat.heights() && dual_curve(other).ok() == dual_curve(&flat).ok(),
        _ => false,
    };
    t.check(ok, || format!("flat conic witness {w:?}"));
}

pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    let name = *SUITES.iter().find(|s| **s == name).ok_or_else(|| Error::InvalidInput(format!("unknown suite `{name}`")))?;
    let mut rng = rng(seed);
    let mut t = Tally::new();
    let start = Instant::now();
    match name {
        "pairs" => suite_pairs(&mut rng, &mut t),
        "kapranov" => suite_kapranov(&mut rng, &mut t),
        "certificates" => suite_certificates(&mut t)?,
        "hilbert" => suite_hilbert(&mut rng, &mut t)?,
        "numpoly" => suite_numpoly(&mut t),
        "monideal" => suite_monideal(&mut rng, &mut t),
        "extension" => suite_extension(&mut t)?,
        "trop-point" => suite_trop_point(&mut rng, &mut t),
        _ => suite_subdiv(&mut rng, &mut t),
    }
    Ok(SuiteReport { name, seed, cases: t.cases, failures: t.failures, elapsed: start.elapsed() })
}

/// Runs every suite, or only `filter`.
pub fn selftest(seed: u64, filter: Option<&str>) -> Result<Vec<SuiteReport>> {
    match filter {
        Some(name) => Ok(vec![run_suite(name, seed)?]),
        None => SUITES.iter().map(|s| run_suite(s, seed)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_well_formed() {
        let family = test_ideal_family().unwrap();
        assert_eq!(family.len(), 10);
        for ti in &family {
            assert_eq!(fit_hilbert_polynomial(&ti.ideal, 12).unwrap(), ti.m, "{}", ti.name);
        }
        assert_eq!(grid7().len(), 49);
        assert_eq!(grid9().len(), 9);
        assert_eq!(plane_curve_m(1), MVector::new(vec![1, 1]).unwrap());
    }

    #[test]
    fn pairs_generator_hits_its_stratum() {
        let mut r = rng(7);
        for tag in CaseTag::ALL {
            for _ in 0..5 {
                let [a, b, c, l] = random_pairs_input(&mut r, tag);
                assert_eq!(crate::hilbpoint::classify_pairs(&a, &b, &c, &l).unwrap().tag, tag);
            }
        }
    }

    #[test]
    fn nonincreasing_counts() {
        assert_eq!(nonincreasing(2, 6).len(), 21);
        assert_eq!(nonincreasing(5, 6).len(), 252);
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nope", 1).is_err());
        assert!(run_suite("numpoly", 1).unwrap().passed());
    }
}

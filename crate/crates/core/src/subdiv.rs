//! Regular subdivisions of the degree-`d` simplex induced by a tropical
//! plane curve, and the dual weighted curve.
//!
//! Max-plus convention throughout: cells are projections of the *upper*
//! faces of the lifted points `(a_0, a_1, height(a))`, and the curve vertex
//! of a cell with face plane `z = alpha a_0 + beta a_1 + gamma` is
//! `(-alpha, -beta)` in the chart `w_2 = 0`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyring::monomials_of_degree;
use crate::tropical::{ExpVec, TropPoly, TropVal};
use crate::valfield::{parse_rat, render_rat, Rat};

/// The lattice points of the degree-`d` simplex with a height each, in the
/// canonical monomial order of degree `d` in three variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedConfig {
    d: u32,
    monomials: Vec<ExpVec>,
    heights: Vec<Rat>,
}

impl LiftedConfig {
    pub fn new(d: u32, heights: Vec<Rat>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidInput("degree must be positive".into()));
        }
        let monomials = monomials_of_degree(3, d);
        if heights.len() != monomials.len() {
            return Err(Error::DimensionMismatch { expected: monomials.len(), found: heights.len() });
        }
        Ok(LiftedConfig { d, monomials, heights })
    }

    /// Parses comma-separated finite heights.
    pub fn parse(d: u32, heights: &str) -> Result<Self> {
        let hs = heights
            .split(',')
            .map(|s| match TropVal::parse(s)? {
                TropVal::Fin(r) => Ok(r),
                TropVal::NegInf => Err(Error::InvalidInput("heights must be finite".into())),
            })
            .collect::<Result<Vec<_>>>()?;
        LiftedConfig::new(d, hs)
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn monomials(&self) -> &[ExpVec] {
        &self.monomials
    }

    pub fn heights(&self) -> &[Rat] {
        &self.heights
    }

    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// Planar coordinates `(a_0, a_1)` of point `i`.
    pub fn planar(&self, i: usize) -> (i64, i64) {
        (self.monomials[i].0[0] as i64, self.monomials[i].0[1] as i64)
    }

    pub fn trop_poly(&self) -> TropPoly {
        TropPoly::from_terms(3, self.monomials.iter().cloned().zip(self.heights.iter().cloned().map(TropVal::Fin)))
            .expect("three variables")
    }
}

/// A cell: the points on one upper face, its polygon (counterclockwise) and
/// the face plane `z = alpha a_0 + beta a_1 + gamma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub marked: Vec<usize>,
    pub vertices: Vec<usize>,
    pub alpha: Rat,
    pub beta: Rat,
    pub gamma: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub cells: Vec<Cell>,
    npoints: usize,
}

fn int(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Counterclockwise hull vertices, collinear points dropped.
fn hull_2d(cfg: &LiftedConfig, pts: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = pts.to_vec();
    p.sort_by_key(|&i| cfg.planar(i));
    if p.len() < 3 {
        return p;
    }
    let mut lower: Vec<usize> = Vec::new();
    for &i in &p {
        while lower.len() >= 2 && cross(cfg.planar(lower[lower.len() - 2]), cfg.planar(lower[lower.len() - 1]), cfg.planar(i)) <= 0 {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in p.iter().rev() {
        while upper.len() >= 2 && cross(cfg.planar(upper[upper.len() - 2]), cfg.planar(upper[upper.len() - 1]), cfg.planar(i)) <= 0 {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Upper faces by exhaustive enumeration of point triples.
pub fn regular_subdivision(cfg: &LiftedConfig) -> Subdivision {
    let n = cfg.len();
    let mut faces: BTreeMap<Vec<usize>, Cell> = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (p1, p2, p3) = (cfg.planar(i), cfg.planar(j), cfg.planar(k));
                let det = cross(p1, p2, p3);
                if det == 0 {
                    continue;
                }
                let h = &cfg.heights;
                let (dh2, dh3) = (&h[j] - &h[i], &h[k] - &h[i]);
                let det = int(det);
                let alpha = (&dh2 * int(p3.1 - p1.1) - &dh3 * int(p2.1 - p1.1)) / &det;
                let beta = (&dh3 * int(p2.0 - p1.0) - &dh2 * int(p3.0 - p1.0)) / &det;
                let gamma = &h[i] - &alpha * int(p1.0) - &beta * int(p1.1);
                let plane = |m: usize| {
                    let (x, y) = cfg.planar(m);
                    &alpha * int(x) + &beta * int(y) + &gamma
                };
                if (0..n).any(|m| h[m] > plane(m)) {
                    continue;
                }
                let marked: Vec<usize> = (0..n).filter(|&m| h[m] == plane(m)).collect();
                if faces.contains_key(&marked) {
                    continue;
                }
                let vertices = hull_2d(cfg, &marked);
                faces.insert(marked.clone(), Cell { marked, vertices, alpha, beta, gamma });
            }
        }
    }
    Subdivision { cells: faces.into_values().collect(), npoints: n }
}

impl Subdivision {
    pub fn uses_all_points(&self) -> bool {
        (0..self.npoints).all(|i| self.cells.iter().any(|c| c.vertices.contains(&i)))
    }

    pub fn is_triangulation(&self) -> bool {
        self.cells.iter().all(|c| c.marked.len() == 3)
    }

    /// The region where the map to tropical curves is locally injective.
    pub fn in_region_p(&self) -> bool {
        self.uses_all_points() && self.is_triangulation()
    }
}

pub type Point2 = (Rat, Rat);

type EdgeSide = (usize, (i64, i64), u64);

/// A bounded edge between two curve vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CurveEdge {
    pub from: usize,
    pub to: usize,
    pub weight: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CurveRay {
    pub from: usize,
    pub direction: (i64, i64),
    pub weight: u64,
}

/// Weighted tropical curve skeleton in the chart `w_2 = 0`. Vertices are
/// sorted, so two equal curves compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropCurve {
    pub vertices: Vec<Point2>,
    pub edges: Vec<CurveEdge>,
    pub rays: Vec<CurveRay>,
}

fn primitive(v: (i64, i64)) -> ((i64, i64), u64) {
    let g = v.0.gcd(&v.1);
    ((v.0 / g, v.1 / g), g as u64)
}

/// Primitive integer direction of a rational vector.
fn primitive_rat(v: &Point2) -> Result<(i64, i64)> {
    let l = v.0.denom().lcm(v.1.denom());
    let x = (&v.0 * Rat::from_integer(l.clone())).to_integer();
    let y = (&v.1 * Rat::from_integer(l)).to_integer();
    let g = x.gcd(&y);
    if g.is_zero() {
        return Err(Error::InternalInconsistency("zero-length curve edge".into()));
    }
    let conv = |z: num_bigint::BigInt| (z / &g).to_i64().ok_or_else(|| Error::BudgetExceeded("direction overflow".into()));
    Ok((conv(x)?, conv(y)?))
}

/// Dual curve of the regular subdivision. Each bounded edge is checked to
/// point along the outer normal of its dual cell edge.
pub fn dual_curve(cfg: &LiftedConfig) -> Result<TropCurve> {
    let sub = regular_subdivision(cfg);
    let mut verts: Vec<(Point2, usize)> =
        sub.cells.iter().enumerate().map(|(i, c)| ((-c.alpha.clone(), -c.beta.clone()), i)).collect();
    verts.sort();
    let mut position = vec![0usize; sub.cells.len()];
    for (k, (_, i)) in verts.iter().enumerate() {
        position[*i] = k;
    }
    // cell edge (sorted endpoints) -> (cell, primitive outer normal, lattice length) per side
    let mut by_edge: BTreeMap<(usize, usize), Vec<EdgeSide>> = BTreeMap::new();
    for (ci, cell) in sub.cells.iter().enumerate() {
        let m = cell.vertices.len();
        for e in 0..m {
            let (p, q) = (cell.vertices[e], cell.vertices[(e + 1) % m]);
            let (a, b) = (cfg.planar(p), cfg.planar(q));
            let (normal, weight) = primitive((b.1 - a.1, a.0 - b.0));
            by_edge.entry((p.min(q), p.max(q))).or_default().push((ci, normal, weight));
        }
    }
    let vertices: Vec<Point2> = verts.into_iter().map(|(p, _)| p).collect();
    let mut edges = Vec::new();
    let mut rays = Vec::new();
    for sides in by_edge.values() {
        match sides.as_slice() {
            [(c, normal, weight)] => rays.push(CurveRay { from: position[*c], direction: *normal, weight: *weight }),
            [(c1, n1, w1), (c2, _, _)] => {
                let (u, v) = (position[*c1], position[*c2]);
                let diff = (&vertices[v].0 - &vertices[u].0, &vertices[v].1 - &vertices[u].1);
                if primitive_rat(&diff)? != *n1 {
                    return Err(Error::InternalInconsistency("curve edge not normal to its dual edge".into()));
                }
                edges.push(CurveEdge { from: u.min(v), to: u.max(v), weight: *w1 });
            }
            _ => return Err(Error::InternalInconsistency("cell edge shared by more than two cells".into())),
        }
    }
    edges.sort();
    rays.sort();
    Ok(TropCurve { vertices, edges, rays })
}

impl TropCurve {
    /// Weighted primitive directions leaving vertex `v`.
    pub fn directions_at(&self, v: usize) -> Result<Vec<((i64, i64), u64)>> {
        let mut out = Vec::new();
        for e in &self.edges {
            let other = match (e.from == v, e.to == v) {
                (true, _) => e.to,
                (_, true) => e.from,
                _ => continue,
            };
            let diff = (&self.vertices[other].0 - &self.vertices[v].0, &self.vertices[other].1 - &self.vertices[v].1);
            out.push((primitive_rat(&diff)?, e.weight));
        }
        out.extend(self.rays.iter().filter(|r| r.from == v).map(|r| (r.direction, r.weight)));
        Ok(out)
    }

    /// Vertices where the weighted directions do not sum to zero.
    pub fn unbalanced_vertices(&self) -> Result<Vec<usize>> {
        let mut bad = Vec::new();
        for v in 0..self.vertices.len() {
            let (sx, sy) = self
                .directions_at(v)?
                .iter()
                .fold((0i64, 0i64), |(x, y), ((dx, dy), w)| (x + dx * *w as i64, y + dy * *w as i64));
            if sx != 0 || sy != 0 {
                bad.push(v);
            }
        }
        Ok(bad)
    }

    /// Whether `(w_0, w_1)` lies on a vertex, edge or ray.
    pub fn contains(&self, p: &Point2) -> bool {
        let on_segment = |a: &Point2, b: &Point2| {
            let (dx, dy) = (&b.0 - &a.0, &b.1 - &a.1);
            let (px, py) = (&p.0 - &a.0, &p.1 - &a.1);
            let crossz = &dx * &py - &dy * &px;
            let t = &dx * &px + &dy * &py;
            let len = &dx * &dx + &dy * &dy;
            crossz.is_zero() && !t.is_negative() && t <= len
        };
        if self.vertices.contains(p) {
            return true;
        }
        let on_edge = self.edges.iter().any(|e| on_segment(&self.vertices[e.from], &self.vertices[e.to]));
        let on_ray = self.rays.iter().any(|r| {
            let a = &self.vertices[r.from];
            let (dx, dy) = (int(r.direction.0), int(r.direction.1));
            let (px, py) = (&p.0 - &a.0, &p.1 - &a.1);
            (&dx * &py - &dy * &px).is_zero() && !(&dx * &px + &dy * &py).is_negative()
        });
        on_edge || on_ray
    }
}

/// Lowers the height of the first point that is not a cell vertex. Such a
/// point never attains the maximum alone, so the curve is unchanged. Returns
/// nothing when every point is a vertex.
pub fn perturbation_noninjectivity_witness(cfg: &LiftedConfig) -> Result<Option<LiftedConfig>> {
    let sub = regular_subdivision(cfg);
    let Some(i) = (0..cfg.len()).find(|&i| !sub.cells.iter().any(|c| c.vertices.contains(&i))) else {
        return Ok(None);
    };
    let mut heights = cfg.heights.clone();
    heights[i] -= int(1);
    let other = LiftedConfig::new(cfg.d, heights)?;
    if dual_curve(&other)? != dual_curve(cfg)? {
        return Err(Error::InternalInconsistency("lowering an unused point changed the curve".into()));
    }
    Ok(Some(other))
}

fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

/// Two panels: the marked subdivision of the simplex and the dual curve.
pub fn render_svg(cfg: &LiftedConfig) -> Result<String> {
    let sub = regular_subdivision(cfg);
    let curve = dual_curve(cfg)?;
    let d = cfg.d as f64;
    let (size, pad) = (320.0, 30.0);
    let sx = |x: i64| pad + x as f64 / d * (size - 2.0 * pad);
    let sy = |y: i64| size - pad - y as f64 / d * (size - 2.0 * pad);
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{size}" font-family="monospace" font-size="11">"#, 2.0 * size);
    for cell in &sub.cells {
        let pts: Vec<String> = cell.vertices.iter().map(|&v| {
            let (x, y) = cfg.planar(v);
            format!("{:.2},{:.2}", sx(x), sy(y))
        }).collect();
        let _ = writeln!(s, r##"<polygon points="{}" fill="#eef3fb" stroke="#35507a" stroke-width="1.5"/>"##, pts.join(" "));
    }
    for i in 0..cfg.len() {
        let (x, y) = cfg.planar(i);
        let vertex = sub.cells.iter().any(|c| c.vertices.contains(&i));
        let fill = if vertex { "#35507a" } else { "white" };
        let _ = writeln!(s, r##"<circle cx="{:.2}" cy="{:.2}" r="4" fill="{fill}" stroke="#35507a"/>"##, sx(x), sy(y));
        let _ = writeln!(s, r##"<text x="{:.2}" y="{:.2}" fill="#555">{}</text>"##, sx(x) + 6.0, sy(y) - 6.0, render_rat(&cfg.heights[i]));
    }
    let xs: Vec<f64> = curve.vertices.iter().map(|p| to_f64(&p.0)).collect();
    let ys: Vec<f64> = curve.vertices.iter().map(|p| to_f64(&p.1)).collect();
    let fold = |v: &[f64], f: fn(f64, f64) -> f64, init: f64| v.iter().copied().fold(init, f);
    let (x0, x1) = (fold(&xs, f64::min, f64::INFINITY), fold(&xs, f64::max, f64::NEG_INFINITY));
    let (y0, y1) = (fold(&ys, f64::min, f64::INFINITY), fold(&ys, f64::max, f64::NEG_INFINITY));
    let span = (x1 - x0).max(y1 - y0).max(1.0) * 2.0;
    let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
    let tx = |x: f64| size + size / 2.0 + (x - cx) / span * (size - 2.0 * pad);
    let ty = |y: f64| size / 2.0 - (y - cy) / span * (size - 2.0 * pad);
    let stroke = |w: u64| 1.0 + w as f64;
    for e in &curve.edges {
        let (a, b) = (&curve.vertices[e.from], &curve.vertices[e.to]);
        let _ = writeln!(s, r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#a33" stroke-width="{}"/>"##,
            tx(to_f64(&a.0)), ty(to_f64(&a.1)), tx(to_f64(&b.0)), ty(to_f64(&b.1)), stroke(e.weight));
    }
    for r in &curve.rays {
        let a = &curve.vertices[r.from];
        let (ax, ay) = (to_f64(&a.0), to_f64(&a.1));
        let norm = ((r.direction.0 * r.direction.0 + r.direction.1 * r.direction.1) as f64).sqrt();
        let len = span;
        let (bx, by) = (ax + r.direction.0 as f64 / norm * len, ay + r.direction.1 as f64 / norm * len);
        let _ = writeln!(s, r##"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#a33" stroke-width="{}"/>"##,
            tx(ax), ty(ay), tx(bx), ty(by), stroke(r.weight));
    }
    for p in &curve.vertices {
        let _ = writeln!(s, r##"<circle cx="{:.2}" cy="{:.2}" r="3" fill="#a33"/>"##, tx(to_f64(&p.0)), ty(to_f64(&p.1)));
    }
    let _ = writeln!(s, r##"<line x1="{size}" y1="0" x2="{size}" y2="{size}" stroke="#ccc"/>"##);
    s.push_str("</svg>\n");
    Ok(s)
}

/// Parses a planar point `w0,w1`.
pub fn parse_point2(s: &str) -> Result<Point2> {
    let parts: Vec<&str> = s.split(',').collect();
    match parts.as_slice() {
        [a, b] => Ok((parse_rat(a)?, parse_rat(b)?)),
        _ => Err(Error::Parse(format!("expected `w0,w1`, got `{s}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valfield::{rat, rat_int};
    use proptest::prelude::*;

    fn cfg(d: u32, h: &str) -> LiftedConfig {
        LiftedConfig::parse(d, h).unwrap()
    }

    fn on_zero_locus(c: &LiftedConfig, p: &Point2) -> bool {
        c.trop_poly().in_zero_locus(&[p.0.clone(), p.1.clone(), rat_int(0)]).unwrap()
    }

    #[test]
    fn subdivision_examples() {
        let s = regular_subdivision(&cfg(1, "0,0,0"));
        assert_eq!(s.cells.len(), 1);
        assert_eq!(s.cells[0].marked.len(), 3);
        let s = regular_subdivision(&cfg(2, "0,0,0,1,1,1"));
        assert_eq!(s.cells.len(), 4);
        assert!(s.uses_all_points() && s.is_triangulation());
        let s = regular_subdivision(&cfg(2, "0,0,0,0,0,0"));
        assert_eq!(s.cells.len(), 1);
        assert_eq!(s.cells[0].marked.len(), 6);
        assert_eq!(s.cells[0].vertices.len(), 3);
        assert!(!s.uses_all_points() && !s.is_triangulation());
        let s = regular_subdivision(&cfg(2, "0,0,0,0,0,1"));
        assert_eq!(s.cells.len(), 2);
        assert!(s.cells.iter().all(|c| c.marked.len() == 4 && c.vertices.len() == 3));
        assert!(!s.in_region_p());
        let s = regular_subdivision(&cfg(2, "-5,-5,0,0,0,0"));
        assert!(s.cells.iter().any(|c| c.vertices.len() == 4));
        assert!(s.uses_all_points() && !s.is_triangulation());
    }

    #[test]
    fn curve_examples() {
        let line = dual_curve(&cfg(1, "0,0,0")).unwrap();
        assert_eq!(line.vertices, vec![(rat_int(0), rat_int(0))]);
        let mut dirs: Vec<_> = line.rays.iter().map(|r| (r.direction, r.weight)).collect();
        dirs.sort();
        assert_eq!(dirs, vec![((-1, 0), 1), ((0, -1), 1), ((1, 1), 1)]);
        let conic = dual_curve(&cfg(2, "0,0,0,1,1,1")).unwrap();
        assert_eq!(conic.vertices.len(), 4);
        assert!(conic.edges.iter().chain(std::iter::empty()).all(|e| e.weight == 1));
        assert!(conic.rays.iter().all(|r| r.weight == 1));
        assert_eq!(conic.edges.len(), 3);
        assert_eq!(conic.rays.len(), 6);
        let double = dual_curve(&cfg(2, "0,0,-10,-10,-10,-10")).unwrap();
        assert!(double.rays.iter().any(|r| r.direction == (1, 1) && r.weight == 2));
    }

    #[test]
    fn witnesses() {
        let flat = cfg(2, "0,0,0,0,0,0");
        let w = perturbation_noninjectivity_witness(&flat).unwrap().unwrap();
        assert_ne!(w, flat);
        assert_eq!(dual_curve(&w).unwrap(), dual_curve(&flat).unwrap());
        assert_eq!(perturbation_noninjectivity_witness(&cfg(2, "0,0,0,1,1,1")).unwrap(), None);
        assert_eq!(perturbation_noninjectivity_witness(&cfg(1, "3,-1,1/2")).unwrap(), None);
        let cubic = cfg(3, "0,0,0,0,0,0,0,0,0,0");
        let w = perturbation_noninjectivity_witness(&cubic).unwrap().unwrap();
        assert_eq!(dual_curve(&w).unwrap(), dual_curve(&cubic).unwrap());
    }

    #[test]
    fn input_validation() {
        assert!(LiftedConfig::parse(2, "0,0,0").is_err());
        assert!(LiftedConfig::parse(1, "0,-inf,0").is_err());
        assert!(LiftedConfig::parse(0, "0").is_err());
    }

    #[test]
    fn svg_renders() {
        let s = render_svg(&cfg(2, "0,0,0,1,1,1")).unwrap();
        assert!(s.starts_with("<svg") && s.trim_end().ends_with("</svg>"));
        assert_eq!(s.matches("<polygon").count(), 4);
    }

    fn arb_cfg() -> impl Strategy<Value = LiftedConfig> {
        (1u32..=3).prop_flat_map(|d| {
            let n = ((d + 1) * (d + 2) / 2) as usize;
            proptest::collection::vec((-4i64..=4, 1i64..=2), n)
                .prop_map(move |hs| LiftedConfig::new(d, hs.into_iter().map(|(a, b)| rat(a, b)).collect()).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn curves_are_balanced(c in arb_cfg()) {
            let curve = dual_curve(&c).unwrap();
            prop_assert!(curve.unbalanced_vertices().unwrap().is_empty());
            let deg: u64 = curve.rays.iter().filter(|r| r.direction == (1, 1)).map(|r| r.weight).sum();
            prop_assert_eq!(deg, c.degree() as u64);
        }

        #[test]
        fn skeleton_matches_zero_locus(c in arb_cfg(), px in -12i64..=12, py in -12i64..=12, q in 1i64..=3) {
            let curve = dual_curve(&c).unwrap();
            for v in &curve.vertices {
                prop_assert!(on_zero_locus(&c, v));
            }
            for e in &curve.edges {
                let (a, b) = (&curve.vertices[e.from], &curve.vertices[e.to]);
                let mid = ((&a.0 + &b.0) / int(2), (&a.1 + &b.1) / int(2));
                prop_assert!(on_zero_locus(&c, &mid));
            }
            for r in &curve.rays {
                let a = &curve.vertices[r.from];
                let far = (&a.0 + int(5 * r.direction.0), &a.1 + int(5 * r.direction.1));
                prop_assert!(on_zero_locus(&c, &far));
            }
            let p = (rat(px, q), rat(py, q));
            prop_assert_eq!(curve.contains(&p), on_zero_locus(&c, &p));
        }

        #[test]
        fn witness_exists_iff_a_point_is_unused(c in arb_cfg()) {
            let sub = regular_subdivision(&c);
            let w = perturbation_noninjectivity_witness(&c).unwrap();
            prop_assert_eq!(w.is_some(), !sub.uses_all_points());
            if sub.in_region_p() {
                prop_assert!(w.is_none());
            }
        }
    }
}

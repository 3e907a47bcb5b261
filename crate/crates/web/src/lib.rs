//! Browser bindings for three demo operations. Each returns a JSON string
//! on success and an error message otherwise.

use std::fmt::Write as _;

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use trophilb::error::Result;
use trophilb::hilbpoint::{expected_pairs_point, pairs_of_points};
use trophilb::initial::member;
use trophilb::numpoly::MVector;
use trophilb::polyring::{GradedIdeal, KPoly};
use trophilb::subdiv::{dual_curve, perturbation_noninjectivity_witness, regular_subdivision, render_svg, LiftedConfig};
use trophilb::valfield::{rat, render_rat, PuiseuxRat, Rat};

fn finish(r: Result<Value>) -> std::result::Result<String, String> {
    r.map(|v| v.to_string()).map_err(|e| e.to_string())
}

pub fn subdivision_value(d: u32, heights: &str) -> Result<Value> {
    let cfg = LiftedConfig::parse(d, heights)?;
    let sub = regular_subdivision(&cfg);
    let curve = dual_curve(&cfg)?;
    let witness = perturbation_noninjectivity_witness(&cfg)?;
    Ok(json!({
        "svg": render_svg(&cfg)?,
        "cells": sub.cells.len(),
        "curve_vertices": curve.vertices.len(),
        "bounded_edges": curve.edges.len(),
        "rays": curve.rays.len(),
        "balanced": curve.unbalanced_vertices()?.is_empty(),
        "uses_all_points": sub.uses_all_points(),
        "is_triangulation": sub.is_triangulation(),
        "in_region_p": sub.in_region_p(),
        "witness_heights": witness.map(|w| w.heights().iter().map(render_rat).collect::<Vec<_>>()),
    }))
}

pub fn pairs_value(a: &str, b: &str, c: &str, l: &str) -> Result<Value> {
    let k = |s: &str| s.parse::<PuiseuxRat>();
    let (h, t, case) = pairs_of_points(&k(a)?, &k(b)?, &k(c)?, &k(l)?)?;
    let expected = expected_pairs_point(&case.a, &case.b, &case.c, case.tag, &case.mu)?;
    Ok(json!({
        "case": case.tag.name(),
        "A": render_rat(&case.a),
        "B": render_rat(&case.b),
        "C": render_rat(&case.c),
        "mu": render_rat(&case.mu),
        "pluecker": h.pluecker.coords.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "trop_point": t.0.coords().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "matches_table": expected == t,
    }))
}

/// Membership of `(0, p, q)` for `p, q` on a `steps x steps` grid over
/// `[lo, hi]`, drawn as an SVG with member points filled.
pub fn membership_value(gens: &str, m: &str, lo: i64, hi: i64, steps: usize) -> Result<Value> {
    if !(2..=41).contains(&steps) || lo >= hi {
        return Err(trophilb::error::Error::InvalidInput("need lo < hi and 2 <= steps <= 41".into()));
    }
    let polys = gens.split(';').map(|g| KPoly::parse(g, 3)).collect::<Result<Vec<_>>>()?;
    let ideal = GradedIdeal::new(2, polys)?;
    let m = MVector::parse(m)?;
    let span = steps as i64 - 1;
    let coord = |i: usize| -> Rat { rat(lo * span + (hi - lo) * i as i64, span) };
    let (size, pad) = (360.0, 24.0);
    let cell = (size - 2.0 * pad) / span as f64;
    let mut svg = format!(r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" font-family="monospace" font-size="11">"#);
    let mut members = Vec::new();
    for i in 0..steps {
        for j in 0..steps {
            let (p, q) = (coord(i), coord(j));
            let omega = vec![Rat::from_integer(0.into()), p.clone(), q.clone()];
            let inside = member(&ideal, &m, &omega)?;
            let (x, y) = (pad + cell * i as f64, size - pad - cell * j as f64);
            let fill = if inside { "#a33" } else { "#e6e6e6" };
            let _ = write!(svg, r#"<circle cx="{x:.2}" cy="{y:.2}" r="{:.2}" fill="{fill}"/>"#, (cell * 0.35).max(1.5));
            if inside {
                members.push(vec![render_rat(&p), render_rat(&q)]);
            }
        }
    }
    let _ = write!(
        svg,
        r##"<text x="{pad}" y="14" fill="#555">w1 across, w2 up, [{lo}, {hi}]</text></svg>"##
    );
    Ok(json!({ "svg": svg, "points": steps * steps, "members": members }))
}

#[wasm_bindgen]
pub fn subdivision(d: u32, heights: &str) -> std::result::Result<String, String> {
    finish(subdivision_value(d, heights))
}

#[wasm_bindgen]
pub fn pairs(a: &str, b: &str, c: &str, l: &str) -> std::result::Result<String, String> {
    finish(pairs_value(a, b, c, l))
}

#[wasm_bindgen]
pub fn membership_grid(gens: &str, m: &str, lo: i64, hi: i64, steps: usize) -> std::result::Result<String, String> {
    finish(membership_value(gens, m, lo, hi, steps))
}

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use trophilb::error::{Error, Result};
use trophilb::hilbpoint::{expected_pairs_point, hilbert_point, pairs_of_points, trop_hilbert_point};
use trophilb::initial::{initial_form, member, witness_polynomial};
use trophilb::monideal::{adeg, bounded_monomial, primary_decomposition, saturation_defect, MonIdeal};
use trophilb::numpoly::{decompose, g_eval, g_to_polynomial, MVector, NumPoly};
use trophilb::polyring::{GradedIdeal, KPoly};
use trophilb::selftest::{selftest, DEFAULT_SEED};
use trophilb::subdiv::{dual_curve, perturbation_noninjectivity_witness, regular_subdivision, render_svg, LiftedConfig};
use trophilb::tropical::{tropicalize_poly, ExpVec};
use trophilb::valfield::{parse_rat_list, render_rat, PuiseuxRat, Rat};

/// Tropical Hilbert points, initial degenerations and tropical curves over
/// Puiseux-type fields.
#[derive(Parser)]
#[command(name = "trophilb", version)]
struct Cli {
    /// Emit JSON on standard output (default when TROPHILB_OUTPUT=json).
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Numerical polynomials g(m; x).
    Numpoly {
        #[command(subcommand)]
        op: NumpolyOp,
    },
    /// Whether w lies in the tropical variety of a saturated ideal.
    Member(PointArgs),
    /// A polynomial of degree m0 in the ideal whose initial form is a monomial.
    Witness(PointArgs),
    /// Initial form of a polynomial at w.
    InitialForm(PolyArgs),
    /// Evaluates the tropicalization of a polynomial at w.
    TropEval(PolyArgs),
    /// Whether the maximum of the tropicalization is attained twice.
    ZeroLocus(PolyArgs),
    /// Monomial ideals.
    Monideal {
        #[command(subcommand)]
        op: MonidealOp,
    },
    /// Plücker coordinates of I_{m0} and the tropical Hilbert point.
    HilbertPoint {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        m: String,
    },
    /// The double point at [a:b:c] with tangent line l x0 + x1 + n x2.
    Pairs {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        l: String,
        /// Compare with the tabulated point of the detected case.
        #[arg(long)]
        check: bool,
    },
    /// Regular subdivision and dual tropical curve of a plane curve.
    Subdiv {
        #[arg(long)]
        d: u32,
        /// Heights in the canonical monomial order of degree d.
        #[arg(long, allow_hyphen_values = true)]
        heights: String,
        /// Write an SVG drawing to this path.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Runs the property suites.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        suite: Option<String>,
    },
}

#[derive(Subcommand)]
enum NumpolyOp {
    /// The vector m with g(m; x) equal to the polynomial with these
    /// coefficients (constant term first).
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// g(m; x).
    Eval {
        #[arg(long)]
        m: String,
        #[arg(long, allow_hyphen_values = true)]
        x: i64,
    },
}

#[derive(Subcommand)]
enum MonidealOp {
    /// Irredundant primary decomposition with multiplicities.
    Decompose(MonArgs),
    /// (I : x^f).
    Colon(MonFArgs),
    /// (I : (x^f)^inf) and the exponent where it stabilizes.
    Saturate(MonFArgs),
    /// Arithmetic degrees, saturation defect and the bounded monomial.
    Adeg(MonArgs),
    /// Hilbert polynomial data m.
    Hilbert(MonArgs),
}

#[derive(Args)]
struct MonArgs {
    /// Comma-separated monomials such as "x0^2, x0*x1".
    #[arg(long)]
    ideal: String,
    #[arg(long)]
    nvars: Option<usize>,
}

#[derive(Args)]
struct MonFArgs {
    #[command(flatten)]
    ideal: MonArgs,
    #[arg(long)]
    f: String,
}

#[derive(Args)]
struct IdealArgs {
    /// JSON file with fields `n` and `generators`.
    #[arg(long, conflicts_with = "gens")]
    ideal: Option<PathBuf>,
    /// Generators separated by `;`, e.g. "x0 + t*x1".
    #[arg(long, allow_hyphen_values = true)]
    gens: Option<String>,
    /// Projective dimension for --gens.
    #[arg(long, default_value_t = 2)]
    n: usize,
}

#[derive(Args)]
struct PointArgs {
    #[command(flatten)]
    ideal: IdealArgs,
    #[arg(long)]
    m: String,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "grid")]
    omega: Option<String>,
    /// Points separated by `;`.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "omega")]
    grid: Option<String>,
}

#[derive(Args)]
struct PolyArgs {
    /// Polynomial such as "(1 + t)*x0^2 - t^-1*x1*x2".
    #[arg(long, allow_hyphen_values = true)]
    poly: String,
    #[arg(long, default_value_t = 3)]
    nvars: usize,
    #[arg(long, allow_hyphen_values = true, required_unless_present = "grid")]
    omega: Option<String>,
    #[arg(long, allow_hyphen_values = true, conflicts_with = "omega")]
    grid: Option<String>,
}

/// Printed result: text for humans, JSON for machines, and an exit code.
struct Output {
    text: String,
    json: Value,
    code: u8,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, code: 0 }
    }

    fn predicate(holds: bool, text: String, json: Value) -> Self {
        Output { text, json, code: if holds { 0 } else { 1 } }
    }
}

fn load_ideal(a: &IdealArgs) -> Result<GradedIdeal> {
    match (&a.ideal, &a.gens) {
        (Some(path), _) => {
            let s = std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
            GradedIdeal::parse_json(&s)
        }
        (None, Some(gens)) => {
            let polys = gens.split(';').map(|g| KPoly::parse(g, a.n + 1)).collect::<Result<Vec<_>>>()?;
            GradedIdeal::new(a.n, polys)
        }
        (None, None) => Err(Error::InvalidInput("give --ideal or --gens".into())),
    }
}

fn points(omega: &Option<String>, grid: &Option<String>) -> Result<Vec<Vec<Rat>>> {
    match (omega, grid) {
        (Some(w), _) => Ok(vec![parse_rat_list(w)?]),
        (None, Some(g)) => g.split(';').map(parse_rat_list).collect(),
        (None, None) => Err(Error::InvalidInput("give --omega or --grid".into())),
    }
}

fn render_point(w: &[Rat]) -> String {
    format!("({})", w.iter().map(render_rat).collect::<Vec<_>>().join(", "))
}

fn rat_json(w: &[Rat]) -> Value {
    json!(w.iter().map(render_rat).collect::<Vec<_>>())
}

fn k(s: &str) -> Result<PuiseuxRat> {
    s.parse()
}

fn mon_ideal(a: &MonArgs) -> Result<MonIdeal> {
    MonIdeal::parse(&a.ideal, a.nvars)
}

fn monomial(s: &str, nvars: usize) -> Result<ExpVec> {
    let m = MonIdeal::parse(s, Some(nvars))?;
    match m.generators() {
        [g] => Ok(g.clone()),
        _ => Err(Error::Parse(format!("expected one monomial, got `{s}`"))),
    }
}

fn run_numpoly(op: &NumpolyOp) -> Result<Output> {
    match op {
        NumpolyOp::Decompose { coeffs } => {
            let p = NumPoly::new(parse_rat_list(coeffs)?);
            let m = decompose(&p)?;
            Ok(Output::ok(format!("polynomial: {p}\nm: {m}"), json!({ "polynomial": p.to_string(), "m": m })))
        }
        NumpolyOp::Eval { m, x } => {
            let m = MVector::parse(m)?;
            let v = g_eval(&m, *x);
            let p = g_to_polynomial(&m);
            Ok(Output::ok(v.to_string(), json!({ "m": m, "x": x, "value": v.to_string(), "polynomial": p.to_string() })))
        }
    }
}

fn run_membership(a: &PointArgs, want_witness: bool) -> Result<Output> {
    let ideal = load_ideal(&a.ideal)?;
    let m = MVector::parse(&a.m)?;
    let pts = points(&a.omega, &a.grid)?;
    let single = pts.len() == 1;
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut all = true;
    for w in &pts {
        let prefix = if single { String::new() } else { format!("{:<24} ", render_point(w)) };
        if want_witness {
            match witness_polynomial(&ideal, &m, w) {
                Ok(wit) => {
                    let _ = writeln!(text, "{prefix}witness: {}  initial monomial: {}", wit.polynomial, wit.monomial);
                    rows.push(json!({ "omega": rat_json(w), "witness": wit.polynomial.to_json_terms(), "monomial": wit.monomial }));
                }
                Err(Error::NoWitness) => {
                    all = false;
                    let _ = writeln!(text, "{prefix}no witness: w is in the tropical variety");
                    rows.push(json!({ "omega": rat_json(w), "witness": null }));
                }
                Err(e) => return Err(e),
            }
        } else {
            let is_member = member(&ideal, &m, w)?;
            all &= is_member;
            let _ = writeln!(text, "{prefix}member: {is_member}");
            rows.push(json!({ "omega": rat_json(w), "member": is_member }));
        }
    }
    let json = if single { rows.pop().expect("one point") } else { json!(rows) };
    Ok(Output::predicate(all, text.trim_end().to_string(), json))
}

enum PolyOp {
    Initial,
    Eval,
    Locus,
}

fn run_poly(a: &PolyArgs, op: PolyOp) -> Result<Output> {
    let f = KPoly::parse(&a.poly, a.nvars)?;
    let phi = tropicalize_poly(&f);
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut all = true;
    for w in points(&a.omega, &a.grid)? {
        let (line, value) = match op {
            PolyOp::Initial => {
                let g = initial_form(&f, &w)?;
                (format!("initial form: {g}"), json!({ "omega": rat_json(&w), "initial_form": g.to_json_terms() }))
            }
            PolyOp::Eval => {
                let v = phi.eval(&w)?;
                let arg: Vec<String> = phi.argmax_terms(&w)?.iter().map(ToString::to_string).collect();
                (
                    format!("value: {v}  argmax: {}", arg.join(", ")),
                    json!({ "omega": rat_json(&w), "value": v, "argmax": arg }),
                )
            }
            PolyOp::Locus => {
                let b = phi.in_zero_locus(&w)?;
                all &= b;
                (format!("in zero locus: {b}"), json!({ "omega": rat_json(&w), "in_zero_locus": b }))
            }
        };
        let _ = writeln!(text, "{:<24} {line}", render_point(&w));
        rows.push(value);
    }
    let header = format!("tropicalization: {phi}\n");
    let json = json!({ "tropicalization": phi.to_json_value(), "points": rows });
    Ok(Output::predicate(all, header + text.trim_end(), json))
}

fn run_monideal(op: &MonidealOp) -> Result<Output> {
    match op {
        MonidealOp::Decompose(a) => {
            let i = mon_ideal(a)?;
            let pieces = primary_decomposition(&i)?;
            let mut text = format!("ideal: {i}\n");
            let mut rows = Vec::new();
            for p in &pieces {
                let prime: Vec<String> = p.prime.iter().map(|v| format!("x{v}")).collect();
                let _ = writeln!(text, "  {:<28} prime ({})  dim {:<3} mult {}", p.q.to_string(), prime.join(", "), p.dim(), p.multiplicity);
                rows.push(json!({ "component": p.q.to_string(), "prime": p.prime, "dim": p.dim(), "multiplicity": p.multiplicity }));
            }
            Ok(Output::ok(text.trim_end().to_string(), json!({ "ideal": i.to_string(), "components": rows })))
        }
        MonidealOp::Colon(a) => {
            let i = mon_ideal(&a.ideal)?;
            let f = monomial(&a.f, i.nvars())?;
            let c = i.colon(&f);
            Ok(Output::ok(c.to_string(), json!({ "ideal": i.to_string(), "f": f, "colon": c.to_string() })))
        }
        MonidealOp::Saturate(a) => {
            let i = mon_ideal(&a.ideal)?;
            let f = monomial(&a.f, i.nvars())?;
            let (s, ell) = i.saturate(&f);
            Ok(Output::ok(format!("saturation: {s}\nell: {ell}"), json!({ "ideal": i.to_string(), "f": f, "saturation": s.to_string(), "ell": ell })))
        }
        MonidealOp::Adeg(a) => {
            let i = mon_ideal(a)?;
            let ad = adeg(&i)?;
            let defect = saturation_defect(&i)?;
            let bm = bounded_monomial(&i)?;
            let mut text = format!("ideal: {i}\n");
            for (r, v) in ad.entries() {
                let _ = writeln!(text, "  adeg_{r:<3} {v}");
            }
            let _ = write!(text, "adeg: {}\nsaturation defect: {defect}\nbounded monomial: {} (bound {})", ad.total(), bm.alpha, bm.bound);
            let json = json!({
                "ideal": i.to_string(),
                "adeg": ad.entries().into_iter().map(|(r, v)| json!([r, v])).collect::<Vec<_>>(),
                "total": ad.total(),
                "saturation_defect": defect,
                "bounded_monomial": bm.alpha,
                "bound": bm.bound,
            });
            Ok(Output::ok(text, json))
        }
        MonidealOp::Hilbert(a) => {
            let i = mon_ideal(a)?;
            let m = i.hilbert_polynomial()?;
            let text = m.as_ref().map_or("Hilbert polynomial is zero".to_string(), |m| format!("m: {m}"));
            Ok(Output::ok(text, json!({ "ideal": i.to_string(), "m": m })))
        }
    }
}

fn run_pairs(a: &str, b: &str, c: &str, l: &str, check: bool) -> Result<Output> {
    let (a, b, c, l) = (k(a)?, k(b)?, k(c)?, k(l)?);
    let (h, t, case) = pairs_of_points(&a, &b, &c, &l)?;
    let mut text = format!(
        "case: {}\nA, B, C: {}, {}, {}\nmu: {}\n",
        case.tag,
        render_rat(&case.a),
        render_rat(&case.b),
        render_rat(&case.c),
        render_rat(&case.mu)
    );
    for (i, p) in h.pluecker.coords.iter().enumerate() {
        let _ = writeln!(text, "  p{:<3} {p}", i + 1);
    }
    let _ = write!(text, "tropical point: {t}");
    let mut json = json!({
        "case": case.tag.name(),
        "A": render_rat(&case.a), "B": render_rat(&case.b), "C": render_rat(&case.c),
        "mu": render_rat(&case.mu),
        "pluecker": h.pluecker.coords,
        "trop_point": t,
    });
    let mut ok = true;
    if check {
        let expected = expected_pairs_point(&case.a, &case.b, &case.c, case.tag, &case.mu)?;
        ok = expected == t;
        let _ = write!(text, "\ncheck: {}", if ok { "matches the tabulated point" } else { "MISMATCH" });
        if !ok {
            let _ = write!(text, "\nexpected: {expected}");
        }
        json["check"] = json!(ok);
        json["expected"] = json!(expected);
    }
    Ok(Output::predicate(ok, text, json))
}

fn run_subdiv(d: u32, heights: &str, svg: &Option<PathBuf>) -> Result<Output> {
    let cfg = LiftedConfig::parse(d, heights)?;
    let sub = regular_subdivision(&cfg);
    let curve = dual_curve(&cfg)?;
    let mono = |i: &usize| cfg.monomials()[*i].to_string();
    let mut text = format!("cells: {}\n", sub.cells.len());
    let mut cells = Vec::new();
    for cell in &sub.cells {
        let verts: Vec<String> = cell.vertices.iter().map(mono).collect();
        let marked: Vec<String> = cell.marked.iter().map(mono).collect();
        let _ = writeln!(text, "  vertices [{}]  marked {}", verts.join(", "), marked.len());
        cells.push(json!({ "vertices": verts, "marked": marked, "plane": rat_json(&[cell.alpha.clone(), cell.beta.clone(), cell.gamma.clone()]) }));
    }
    let pt = |p: &(Rat, Rat)| render_point(&[p.0.clone(), p.1.clone()]);
    let _ = writeln!(text, "curve vertices:");
    for (i, v) in curve.vertices.iter().enumerate() {
        let _ = writeln!(text, "  v{i:<3} {}", pt(v));
    }
    let _ = writeln!(text, "edges:");
    for e in &curve.edges {
        let _ = writeln!(text, "  v{} -- v{}  weight {}", e.from, e.to, e.weight);
    }
    let _ = writeln!(text, "rays:");
    for r in &curve.rays {
        let _ = writeln!(text, "  v{} + s({}, {})  weight {}", r.from, r.direction.0, r.direction.1, r.weight);
    }
    let balanced = curve.unbalanced_vertices()?.is_empty();
    let witness = perturbation_noninjectivity_witness(&cfg)?;
    let _ = writeln!(text, "balanced: {balanced}");
    let _ = write!(text, "uses all points: {}\ntriangulation: {}\nregion P: {}", sub.uses_all_points(), sub.is_triangulation(), sub.in_region_p());
    let witness_json = witness.as_ref().map(|w| rat_json(w.heights()));
    if let Some(w) = &witness {
        let hs: Vec<String> = w.heights().iter().map(render_rat).collect();
        let _ = write!(text, "\nsame curve from heights: {}", hs.join(","));
    }
    if let Some(path) = svg {
        std::fs::write(path, render_svg(&cfg)?).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
        let _ = write!(text, "\nsvg: {}", path.display());
    }
    let json = json!({
        "cells": cells,
        "curve": {
            "vertices": curve.vertices.iter().map(|v| rat_json(&[v.0.clone(), v.1.clone()])).collect::<Vec<_>>(),
            "edges": curve.edges,
            "rays": curve.rays,
        },
        "balanced": balanced,
        "uses_all_points": sub.uses_all_points(),
        "is_triangulation": sub.is_triangulation(),
        "in_region_p": sub.in_region_p(),
        "witness_heights": witness_json,
    });
    Ok(Output::ok(text, json))
}

fn run_selftest(seed: u64, suite: &Option<String>) -> Result<Output> {
    let reports = selftest(seed, suite.as_deref())?;
    let mut text = format!("seed {seed}\n");
    let mut ok = true;
    for r in &reports {
        ok &= r.passed();
        let _ = writeln!(
            text,
            "{:<4} {:<13} {:>6} cases {:>4} failures {:>8.2}s",
            if r.passed() { "PASS" } else { "FAIL" },
            r.name,
            r.cases,
            r.failures.len(),
            r.elapsed.as_secs_f64()
        );
        for f in r.failures.iter().take(5) {
            let _ = writeln!(text, "     {f}");
        }
    }
    Ok(Output::predicate(ok, text.trim_end().to_string(), json!({ "seed": seed, "suites": reports })))
}

fn run(cli: &Cli) -> Result<Output> {
    match &cli.cmd {
        Cmd::Numpoly { op } => run_numpoly(op),
        Cmd::Member(a) => run_membership(a, false),
        Cmd::Witness(a) => run_membership(a, true),
        Cmd::InitialForm(a) => run_poly(a, PolyOp::Initial),
        Cmd::TropEval(a) => run_poly(a, PolyOp::Eval),
        Cmd::ZeroLocus(a) => run_poly(a, PolyOp::Locus),
        Cmd::Monideal { op } => run_monideal(op),
        Cmd::HilbertPoint { ideal, m } => {
            let i = load_ideal(ideal)?;
            let m = MVector::parse(m)?;
            let h = hilbert_point(&i, &m)?;
            let t = trop_hilbert_point(&h)?;
            let mut text = format!("m: {m}\ncoordinates: {}\n", h.pluecker.coords.len());
            for (i, p) in h.pluecker.coords.iter().enumerate() {
                let _ = writeln!(text, "  p{:<3} {p}", i + 1);
            }
            let _ = write!(text, "tropical point: {t}");
            Ok(Output::ok(text, json!({ "m": m, "pluecker": h.pluecker.coords, "trop_point": t })))
        }
        Cmd::Pairs { a, b, c, l, check } => run_pairs(a, b, c, l, *check),
        Cmd::Subdiv { d, heights, svg } => run_subdiv(*d, heights, svg),
        Cmd::Selftest { seed, suite } => run_selftest(*seed, suite),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_)
        | Error::InvalidInput(_)
        | Error::DimensionMismatch { .. }
        | Error::InvalidProjectivePoint
        | Error::EmptyPolynomial => 2,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_mode = cli.json || std::env::var("TROPHILB_OUTPUT").is_ok_and(|v| v == "json");
    match run(&cli) {
        Ok(out) => {
            if json_mode {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                println!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            if json_mode {
                println!("{}", json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

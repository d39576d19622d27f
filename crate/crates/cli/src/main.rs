//! Command-line front end: 2-isogeny descent certificates, quadratic-twist
//! prime searches with a persistent certificate cache, torsion and
//! division-polynomial analysis, and the stored modular-curve catalog and
//! universal families.
//!
//! Output contract: one deterministic JSON document on stdout (byte-identical
//! across runs for identical inputs), timing on stderr. Exit codes: 0 on
//! success, 1 when the report contains discrepancy entries, 2 on invalid
//! input.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use ectorsion::arith::ArithError;
use ectorsion::descent;
use ectorsion::ecurve::{self, curve_to_field, CurvePoint, CurveQ, ShortABCurve};
use ectorsion::factor;
use ectorsion::field::CoeffField;
use ectorsion::modcurves::{self, FamilyId, SearchTarget, Specialization};
use ectorsion::numfield::{FieldElement, NumberField};
use ectorsion::report::{
    evidence_report_json, int_str, parse_rat, rank_certificate_json, rat_str,
    search_report_json, CertificateCache, SCHEMA_VERSION,
};
use ectorsion::RatPoly;

/// Environment variable overriding the certificate cache location.
const CACHE_ENV: &str = "ECTORSION_CACHE";

#[derive(Parser)]
#[command(
    name = "ectorsion",
    about = "Exact 2-isogeny descent, torsion analysis and exceptional-pair search",
    version
)]
struct Cli {
    /// Emit machine-readable JSON (always on; accepted for compatibility).
    #[arg(long, global = true, default_value_t = true)]
    #[allow(unused)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rank bound by 2-isogeny descent for y² = x³ + ax² + bx.
    Descent(DescentArgs),
    /// Sieve primes and certify rank zero for both quadratic twists.
    Search(SearchArgs),
    /// Torsion subgroup over ℚ or over a number field.
    Torsion(TorsionArgs),
    /// Squarefree n-division locus with optional bounded factorization.
    Divpoly(DivpolyArgs),
    /// Specialize a stored universal family at a parameter.
    Family(FamilyArgs),
    /// The stored modular-curve catalog.
    Catalog,
    /// Computational no-growth evidence for one torsion group.
    Evidence(EvidenceArgs),
}

#[derive(Args)]
struct DescentArgs {
    /// Coefficient a (exact rational, e.g. -121 or 3/2).
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    /// Coefficient b.
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    /// Quadratic twist factor (integer) applied before the descent.
    #[arg(long, allow_hyphen_values = true)]
    twist: Option<String>,
}

#[derive(Args)]
struct SearchArgs {
    /// Target torsion order: 14 or 15.
    #[arg(long)]
    torsion: u32,
    /// Upper bound for the prime sieve.
    #[arg(long)]
    limit: u64,
    /// Certificate cache file (JSON lines); ECTORSION_CACHE overrides.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct TorsionArgs {
    /// Catalog label, e.g. X1_11, X1_2_10.
    #[arg(long, conflicts_with = "curve")]
    label: Option<String>,
    /// Raw long-Weierstrass coefficients "a1,a3,a2,a4,a6" (exact rationals).
    #[arg(long, allow_hyphen_values = true)]
    curve: Option<String>,
    /// Number-field defining polynomial as rational coefficients, lowest
    /// degree first, e.g. "1,0,1" for x² + 1. Defaults to ℚ.
    #[arg(long, allow_hyphen_values = true)]
    field: Option<String>,
    /// Torsion exponent search bound used over number fields.
    #[arg(long, default_value_t = 2520)]
    exponent_bound: u64,
}

#[derive(Args)]
struct DivpolyArgs {
    /// Catalog label, e.g. X1_2_10.
    #[arg(long, conflicts_with = "curve")]
    label: Option<String>,
    /// Raw long-Weierstrass coefficients "a1,a3,a2,a4,a6".
    #[arg(long, allow_hyphen_values = true)]
    curve: Option<String>,
    /// Division level n ≥ 2.
    #[arg(long)]
    n: u32,
    /// Extract all irreducible factors of degree ≤ D with a cofactor
    /// irreducibility certificate.
    #[arg(long)]
    factor: Option<usize>,
}

#[derive(Args)]
struct FamilyArgs {
    /// Family id: kubert9, two8, three6, six6.
    #[arg(long)]
    id: String,
    /// Parameter value (exact rational).
    #[arg(long, allow_hyphen_values = true)]
    t: String,
}

#[derive(Args)]
struct EvidenceArgs {
    /// Target group: 11, 2x12, 3x9, 4x8, 6x6.
    #[arg(long)]
    target: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(cli.command);
    eprintln!("elapsed: {:?}", start.elapsed());
    match outcome {
        Ok((value, discrepancies)) => {
            println!("{value}");
            if discrepancies {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            let msg = match e {
                ArithError::InvalidArgument(m) | ArithError::Inconsistency(m) => m,
            };
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Runs a subcommand; returns the JSON payload and whether the report
/// contains discrepancy entries.
fn run(cmd: Command) -> Result<(Value, bool), ArithError> {
    match cmd {
        Command::Descent(args) => cmd_descent(args),
        Command::Search(args) => cmd_search(args),
        Command::Torsion(args) => cmd_torsion(args),
        Command::Divpoly(args) => cmd_divpoly(args),
        Command::Family(args) => cmd_family(args),
        Command::Catalog => cmd_catalog(),
        Command::Evidence(args) => cmd_evidence(args),
    }
}

fn invalid(msg: impl Into<String>) -> ArithError {
    ArithError::InvalidArgument(msg.into())
}

fn parse_int_arg(s: &str) -> Result<BigInt, ArithError> {
    BigInt::from_str(s).map_err(|_| invalid(format!("not an integer: {s:?}")))
}

fn parse_rat_list(s: &str) -> Result<Vec<BigRational>, ArithError> {
    s.split(',').map(|p| parse_rat(p.trim())).collect()
}

// -- descent ---------------------------------------------------------------------

fn cmd_descent(args: DescentArgs) -> Result<(Value, bool), ArithError> {
    let a = parse_rat(&args.a)?;
    let b = parse_rat(&args.b)?;
    let mut curve = ShortABCurve::new(a, b)?;
    let mut twist = None;
    if let Some(d) = &args.twist {
        let d = parse_int_arg(d)?;
        curve = curve.quadratic_twist(&d);
        twist = Some(d);
    }
    let cert = descent::rank_upper_bound(&curve)?;
    let payload = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "descent",
        "inputs": {
            "a": args.a, "b": args.b,
            "twist": twist.as_ref().map(int_str),
        },
        "certificate": rank_certificate_json(&cert),
    });
    Ok((payload, false))
}

// -- search ----------------------------------------------------------------------

fn cmd_search(args: SearchArgs) -> Result<(Value, bool), ArithError> {
    let target = match args.torsion {
        14 => SearchTarget::Z14,
        15 => SearchTarget::Z15,
        other => return Err(invalid(format!("unsupported torsion target {other}: use 14 or 15"))),
    };
    let cache_path = std::env::var_os(CACHE_ENV).map(PathBuf::from).or(args.cache);
    let mut cache = match &cache_path {
        None => CertificateCache::in_memory(),
        Some(p) => CertificateCache::open(p).unwrap_or_else(|e| {
            eprintln!("warning: cache {} unusable ({e}); proceeding without it", p.display());
            CertificateCache::in_memory()
        }),
    };
    let mut hits = 0usize;
    let mut misses = 0usize;
    let report = modcurves::search_exceptional_primes_with(target, args.limit, &mut |curve| {
        if let Some(cert) = cache.get(curve) {
            hits += 1;
            return Ok(cert);
        }
        let cert = descent::rank_upper_bound(curve)?;
        misses += 1;
        if let Err(e) = cache.put(&cert) {
            eprintln!("warning: cache write failed ({e}); continuing");
        }
        Ok(cert)
    })?;
    eprintln!("cache: {hits} hit(s), {misses} computed");
    let discrepancies = !report.discrepancies.is_empty();
    Ok((search_report_json(&report), discrepancies))
}

// -- torsion ---------------------------------------------------------------------

fn resolve_curve(label: &Option<String>, raw: &Option<String>) -> Result<(CurveQ, Value), ArithError> {
    match (label, raw) {
        (Some(l), None) => {
            let (m, n) = parse_label(l)?;
            let rec = modcurves::catalog_get(m, n)?;
            Ok((rec.model, json!({"label": l})))
        }
        (None, Some(s)) => {
            let c = parse_rat_list(s)?;
            if c.len() != 5 {
                return Err(invalid("expected 5 coefficients: a1,a3,a2,a4,a6"));
            }
            let curve = ecurve::WeierstrassCurve::new(
                c[0].clone(),
                c[1].clone(),
                c[2].clone(),
                c[3].clone(),
                c[4].clone(),
            );
            if curve.singular {
                return Err(invalid("singular curve"));
            }
            Ok((curve, json!({"coefficients": s})))
        }
        _ => Err(invalid("provide exactly one of --label or --curve")),
    }
}

fn parse_label(l: &str) -> Result<(u32, u32), ArithError> {
    let parts: Vec<&str> = l.split('_').collect();
    match parts.as_slice() {
        ["X1", n] => Ok((1, n.parse().map_err(|_| invalid(format!("bad label {l:?}")))?)),
        ["X1", m, n] => Ok((
            m.parse().map_err(|_| invalid(format!("bad label {l:?}")))?,
            n.parse().map_err(|_| invalid(format!("bad label {l:?}")))?,
        )),
        _ => Err(invalid(format!("unknown catalog label {l:?} (expected e.g. X1_11, X1_2_10)"))),
    }
}

/// Build a number field from lowest-degree-first rational coefficients,
/// reporting a witness factor when the polynomial is reducible.
fn build_field(coeffs: &str) -> Result<std::sync::Arc<NumberField>, ArithError> {
    let c = parse_rat_list(coeffs)?;
    let g = RatPoly::new(c).monic();
    if g.deg() < 2 {
        return Err(invalid("field polynomial must have degree at least 2"));
    }
    let found = factor::extract_factors_bounded(&g, g.deg() - 1);
    if let Some((f, _)) = found.factors.first() {
        return Err(invalid(format!(
            "field polynomial is reducible: found factor with coefficients {:?}",
            f.coeffs().iter().map(rat_str).collect::<Vec<_>>()
        )));
    }
    NumberField::create(g)
}

fn point_json_q(p: &CurvePoint<BigRational>) -> Value {
    match p {
        CurvePoint::Infinity => json!("infinity"),
        CurvePoint::Affine(x, y) => json!({"x": rat_str(x), "y": rat_str(y)}),
    }
}

fn nf_elem_json(e: &FieldElement) -> Value {
    json!(e.coeffs().iter().map(rat_str).collect::<Vec<_>>())
}

fn point_json_k(p: &CurvePoint<FieldElement>) -> Value {
    match p {
        CurvePoint::Infinity => json!("infinity"),
        CurvePoint::Affine(x, y) => json!({"x": nf_elem_json(x), "y": nf_elem_json(y)}),
    }
}

fn cmd_torsion(args: TorsionArgs) -> Result<(Value, bool), ArithError> {
    let (curve, input) = resolve_curve(&args.label, &args.curve)?;
    let payload = match &args.field {
        None => {
            let t = ecurve::torsion_subgroup_q(&curve);
            json!({
                "schema_version": SCHEMA_VERSION,
                "command": "torsion",
                "inputs": {"curve": input, "field": "Q"},
                "invariants": [t.m, t.n],
                "generators": t.generators.iter().map(point_json_q).collect::<Vec<_>>(),
            })
        }
        Some(f) => {
            let field = build_field(f)?;
            let ck = curve_to_field(&curve, &field);
            let t = ecurve::torsion_subgroup_k(&ck, &field, args.exponent_bound);
            json!({
                "schema_version": SCHEMA_VERSION,
                "command": "torsion",
                "inputs": {
                    "curve": input,
                    "field": field.defining_poly().coeffs().iter().map(rat_str).collect::<Vec<_>>(),
                    "exponent_bound": args.exponent_bound,
                },
                "invariants": [t.m, t.n],
                "generators": t.generators.iter().map(point_json_k).collect::<Vec<_>>(),
            })
        }
    };
    Ok((payload, false))
}

// -- divpoly ---------------------------------------------------------------------

fn poly_json(p: &RatPoly) -> Value {
    json!(p.coeffs().iter().map(rat_str).collect::<Vec<_>>())
}

fn cmd_divpoly(args: DivpolyArgs) -> Result<(Value, bool), ArithError> {
    if args.n < 2 {
        return Err(invalid("division level must be at least 2"));
    }
    let (curve, input) = resolve_curve(&args.label, &args.curve)?;
    let locus = ecurve::torsion_locus(&curve, args.n);
    let mut payload = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "divpoly",
        "inputs": {"curve": input, "n": args.n, "factor": args.factor},
        "locus": poly_json(&locus),
        "degree": locus.deg(),
    });
    if let Some(d) = args.factor {
        let fac = factor::extract_factors_bounded(&locus, d);
        payload["factorization"] = json!({
            "unit": rat_str(&fac.unit),
            "factors": fac.factors.iter().map(|(f, m)| json!({
                "poly": poly_json(f),
                "multiplicity": m,
            })).collect::<Vec<_>>(),
            "cofactors": fac.cofactors.iter().map(|(f, m)| json!({
                "poly": poly_json(f),
                "multiplicity": m,
            })).collect::<Vec<_>>(),
        });
    }
    Ok((payload, false))
}

// -- family ----------------------------------------------------------------------

fn cmd_family(args: FamilyArgs) -> Result<(Value, bool), ArithError> {
    let id = match args.id.as_str() {
        "kubert9" => FamilyId::Kubert9,
        "two8" => FamilyId::TwoEight,
        "three6" => FamilyId::ThreeSix,
        "six6" => FamilyId::SixSixUniversal,
        other => return Err(invalid(format!(
            "unknown family {other:?}: use kubert9, two8, three6 or six6"
        ))),
    };
    let t = parse_rat(&args.t)?;
    let spec = modcurves::family_spec(id);
    let s = modcurves::specialize_family(&spec, &t)?;
    let model = s.model();
    let mut payload = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "family",
        "inputs": {"id": args.id, "t": rat_str(&t)},
        "cusp": s.is_cusp(),
        "singular": model.singular,
        "curve": {
            "a1": rat_str(&model.a1), "a3": rat_str(&model.a3), "a2": rat_str(&model.a2),
            "a4": rat_str(&model.a4), "a6": rat_str(&model.a6),
        },
        "anomaly": spec.anomaly,
    });
    if id == FamilyId::Kubert9 {
        if let Specialization::Curve(c) = &s {
            let order = c.point_order(&CurvePoint::Affine(t.zero_like(), t.zero_like()), 20);
            payload["marked_point"] = json!({
                "point": {"x": "0", "y": "0"},
                "order": order,
            });
        }
    }
    Ok((payload, false))
}

// -- catalog and evidence -----------------------------------------------------------

fn cmd_catalog() -> Result<(Value, bool), ArithError> {
    let records: Vec<Value> = modcurves::catalog()
        .iter()
        .map(|r| {
            json!({
                "m": r.m,
                "n": r.n,
                "tag": r.tag,
                "model": {
                    "a1": rat_str(&r.model.a1), "a3": rat_str(&r.model.a3),
                    "a2": rat_str(&r.model.a2), "a4": rat_str(&r.model.a4),
                    "a6": rat_str(&r.model.a6),
                },
                "base_field": format!("{:?}", r.base_field),
                "base_torsion": [r.base_torsion.0, r.base_torsion.1],
                "all_cusps": r.all_cusps,
                "cm_roots_of_unity": r.cm_roots_of_unity,
            })
        })
        .collect();
    Ok((
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": "catalog",
            "records": records,
        }),
        false,
    ))
}

fn cmd_evidence(args: EvidenceArgs) -> Result<(Value, bool), ArithError> {
    use ectorsion::modcurves::EvidenceTarget;
    let target = match args.target.as_str() {
        "11" => EvidenceTarget::Z11,
        "2x12" => EvidenceTarget::Z2x12,
        "3x9" => EvidenceTarget::Z3x9,
        "4x8" => EvidenceTarget::Z4x8,
        "6x6" => EvidenceTarget::Z6x6,
        other => return Err(invalid(format!(
            "unknown evidence target {other:?}: use 11, 2x12, 3x9, 4x8 or 6x6"
        ))),
    };
    let r = modcurves::no_exceptional_evidence(target)?;
    let discrepancies = !r.all_agree();
    Ok((evidence_report_json(&r), discrepancies))
}

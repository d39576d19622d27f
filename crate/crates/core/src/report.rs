//! Archival JSON serialization for certificates and reports, plus a
//! line-oriented certificate cache.
//!
//! All numeric payloads are exact strings (integers, or "num/den" for
//! non-integral rationals); nothing is ever rendered as floating point.
//! Serialization is deterministic: identical inputs give byte-identical JSON.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde_json::{json, Map, Value};

use crate::arith::{ArithError, SquareClass};
use crate::descent::{
    Chart, HomogeneousSpace, LocalCertificate, LocalWitness, RankCertificate, SpaceTranscript,
    SquareClassGroup, Verdict,
};
use crate::ecurve::ShortABCurve;
use crate::modcurves::{EvidenceReport, EvidenceTarget, SearchReport, SearchTarget};

/// Version of every JSON payload this module emits.
pub const SCHEMA_VERSION: u32 = 1;

// -- exact scalars -------------------------------------------------------------

/// Exact string form of a rational: "n" when integral, "n/d" otherwise.
pub fn rat_str(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn int_str(n: &BigInt) -> String {
    n.to_string()
}

/// Parse the output of `rat_str`.
pub fn parse_rat(s: &str) -> Result<BigRational, ArithError> {
    let bad = || ArithError::InvalidArgument(format!("malformed rational {s:?}"));
    match s.split_once('/') {
        None => Ok(BigRational::from(BigInt::from_str(s).map_err(|_| bad())?)),
        Some((n, d)) => {
            let num = BigInt::from_str(n).map_err(|_| bad())?;
            let den = BigInt::from_str(d).map_err(|_| bad())?;
            if den == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(num, den))
        }
    }
}

pub fn parse_int(s: &str) -> Result<BigInt, ArithError> {
    BigInt::from_str(s).map_err(|_| ArithError::InvalidArgument(format!("malformed integer {s:?}")))
}

fn as_str<'a>(v: &'a Value, key: &str) -> Result<&'a str, ArithError> {
    v.get(key)
        .and_then(Value::as_str)
        .ok_or_else(|| ArithError::InvalidArgument(format!("missing string field {key:?}")))
}

fn as_u64(v: &Value, key: &str) -> Result<u64, ArithError> {
    v.get(key)
        .and_then(Value::as_u64)
        .ok_or_else(|| ArithError::InvalidArgument(format!("missing integer field {key:?}")))
}

fn as_bool(v: &Value, key: &str) -> Result<bool, ArithError> {
    v.get(key)
        .and_then(Value::as_bool)
        .ok_or_else(|| ArithError::InvalidArgument(format!("missing boolean field {key:?}")))
}

fn as_array<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>, ArithError> {
    v.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| ArithError::InvalidArgument(format!("missing array field {key:?}")))
}

// -- rank certificates ------------------------------------------------------------

fn group_json(g: &SquareClassGroup) -> Value {
    json!({
        "dimension": g.dimension,
        "basis": g.basis.iter().map(|c| int_str(c.value())).collect::<Vec<_>>(),
    })
}

fn group_from_json(v: &Value) -> Result<SquareClassGroup, ArithError> {
    // regenerate the full subgroup from the stored basis
    let mut elements = vec![SquareClass::one()];
    for e in as_array(v, "basis")? {
        let s = e
            .as_str()
            .ok_or_else(|| ArithError::InvalidArgument("basis entry is not a string".into()))?;
        let b = SquareClass::from_squarefree(parse_int(s)?);
        let products: Vec<SquareClass> = elements.iter().map(|x| x.mul(&b)).collect();
        elements.extend(products);
    }
    let g = SquareClassGroup::from_elements(&elements)?;
    if g.dimension as u64 != as_u64(v, "dimension")? {
        return Err(ArithError::Inconsistency("square-class group dimension mismatch".into()));
    }
    Ok(g)
}

fn chart_str(c: Chart) -> &'static str {
    match c {
        Chart::VUnit => "v_unit",
        Chart::UUnit => "u_unit",
    }
}

fn chart_from_str(s: &str) -> Result<Chart, ArithError> {
    match s {
        "v_unit" => Ok(Chart::VUnit),
        "u_unit" => Ok(Chart::UUnit),
        _ => Err(ArithError::InvalidArgument(format!("unknown chart {s:?}"))),
    }
}

fn witness_json(w: &LocalWitness) -> Value {
    match w {
        LocalWitness::SquareValue { chart, t, precision, valuation } => json!({
            "type": "square_value",
            "chart": chart_str(*chart),
            "t": int_str(t),
            "precision": precision,
            "valuation": valuation,
        }),
        LocalWitness::ExactRoot { chart, t } => json!({
            "type": "exact_root",
            "chart": chart_str(*chart),
            "t": int_str(t),
        }),
        LocalWitness::HenselRoot { chart, t, precision } => json!({
            "type": "hensel_root",
            "chart": chart_str(*chart),
            "t": int_str(t),
            "precision": precision,
        }),
    }
}

fn witness_from_json(v: &Value) -> Result<LocalWitness, ArithError> {
    let chart = chart_from_str(as_str(v, "chart")?)?;
    let t = parse_int(as_str(v, "t")?)?;
    match as_str(v, "type")? {
        "square_value" => Ok(LocalWitness::SquareValue {
            chart,
            t,
            precision: as_u64(v, "precision")? as u32,
            valuation: as_u64(v, "valuation")? as u32,
        }),
        "exact_root" => Ok(LocalWitness::ExactRoot { chart, t }),
        "hensel_root" => {
            Ok(LocalWitness::HenselRoot { chart, t, precision: as_u64(v, "precision")? as u32 })
        }
        other => Err(ArithError::InvalidArgument(format!("unknown witness type {other:?}"))),
    }
}

fn local_json(l: &LocalCertificate) -> Value {
    json!({
        "prime": int_str(&l.prime),
        "depth": l.depth,
        "solvable": l.solvable,
        "witness": l.witness.as_ref().map(witness_json),
        "classes_excluded": l.classes_excluded,
    })
}

fn local_from_json(v: &Value) -> Result<LocalCertificate, ArithError> {
    let witness = match v.get("witness") {
        None | Some(Value::Null) => None,
        Some(w) => Some(witness_from_json(w)?),
    };
    Ok(LocalCertificate {
        prime: parse_int(as_str(v, "prime")?)?,
        depth: as_u64(v, "depth")? as u32,
        solvable: as_bool(v, "solvable")?,
        witness,
        classes_excluded: as_u64(v, "classes_excluded")?,
    })
}

fn transcript_json(t: &SpaceTranscript) -> Value {
    json!({
        "space": {
            "b1": int_str(t.space.b1.value()),
            "a": int_str(&t.space.a),
            "b2": int_str(&t.space.b2),
        },
        "solvable_r": t.solvable_r,
        "locals": t.locals.iter().map(local_json).collect::<Vec<_>>(),
        "in_selmer": t.in_selmer,
    })
}

fn transcript_from_json(v: &Value) -> Result<SpaceTranscript, ArithError> {
    let s = v
        .get("space")
        .ok_or_else(|| ArithError::InvalidArgument("missing space field".into()))?;
    let space = HomogeneousSpace::new(
        SquareClass::from_squarefree(parse_int(as_str(s, "b1")?)?),
        parse_int(as_str(s, "a")?)?,
        parse_int(as_str(s, "b2")?)?,
    );
    let mut locals = Vec::new();
    for l in as_array(v, "locals")? {
        locals.push(local_from_json(l)?);
    }
    Ok(SpaceTranscript {
        space,
        solvable_r: as_bool(v, "solvable_r")?,
        locals,
        in_selmer: as_bool(v, "in_selmer")?,
    })
}

pub fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::RankZeroCertified => "rank_zero_certified",
        Verdict::BoundOnly => "bound_only",
    }
}

fn verdict_from_str(s: &str) -> Result<Verdict, ArithError> {
    match s {
        "rank_zero_certified" => Ok(Verdict::RankZeroCertified),
        "bound_only" => Ok(Verdict::BoundOnly),
        _ => Err(ArithError::InvalidArgument(format!("unknown verdict {s:?}"))),
    }
}

/// Full archival JSON for one rank certificate.
pub fn rank_certificate_json(c: &RankCertificate) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "curve": { "a": rat_str(&c.curve.a), "b": rat_str(&c.curve.b) },
        "selmer_psi": group_json(&c.selmer_psi),
        "selmer_phi": group_json(&c.selmer_phi),
        "rank_bound": c.rank_bound,
        "image_dim_psi": c.image_dim_psi,
        "image_dim_phi": c.image_dim_phi,
        "verdict": verdict_str(c.verdict),
        "spaces_psi": c.spaces_psi.iter().map(transcript_json).collect::<Vec<_>>(),
        "spaces_phi": c.spaces_phi.iter().map(transcript_json).collect::<Vec<_>>(),
    })
}

/// Inverse of `rank_certificate_json`.
pub fn rank_certificate_from_json(v: &Value) -> Result<RankCertificate, ArithError> {
    if as_u64(v, "schema_version")? != SCHEMA_VERSION as u64 {
        return Err(ArithError::InvalidArgument("unsupported schema version".into()));
    }
    let cv = v
        .get("curve")
        .ok_or_else(|| ArithError::InvalidArgument("missing curve field".into()))?;
    let curve = ShortABCurve::new(parse_rat(as_str(cv, "a")?)?, parse_rat(as_str(cv, "b")?)?)?;
    let mut spaces_psi = Vec::new();
    for t in as_array(v, "spaces_psi")? {
        spaces_psi.push(transcript_from_json(t)?);
    }
    let mut spaces_phi = Vec::new();
    for t in as_array(v, "spaces_phi")? {
        spaces_phi.push(transcript_from_json(t)?);
    }
    Ok(RankCertificate {
        curve,
        selmer_psi: group_from_json(
            v.get("selmer_psi")
                .ok_or_else(|| ArithError::InvalidArgument("missing selmer_psi".into()))?,
        )?,
        selmer_phi: group_from_json(
            v.get("selmer_phi")
                .ok_or_else(|| ArithError::InvalidArgument("missing selmer_phi".into()))?,
        )?,
        rank_bound: as_u64(v, "rank_bound")? as usize,
        image_dim_psi: as_u64(v, "image_dim_psi")? as usize,
        image_dim_phi: as_u64(v, "image_dim_phi")? as usize,
        verdict: verdict_from_str(as_str(v, "verdict")?)?,
        spaces_psi,
        spaces_phi,
    })
}

// -- search and evidence reports ----------------------------------------------------

pub fn search_target_str(t: SearchTarget) -> &'static str {
    match t {
        SearchTarget::Z14 => "Z/14",
        SearchTarget::Z15 => "Z/15",
    }
}

pub fn evidence_target_str(t: EvidenceTarget) -> &'static str {
    match t {
        EvidenceTarget::Z11 => "Z/11",
        EvidenceTarget::Z2x12 => "Z/2+Z/12",
        EvidenceTarget::Z3x9 => "Z/3+Z/9",
        EvidenceTarget::Z4x8 => "Z/4+Z/8",
        EvidenceTarget::Z6x6 => "Z/6+Z/6",
    }
}

pub fn search_report_json(r: &SearchReport) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "target": search_target_str(r.target),
        "limit": r.limit,
        "certified_primes": r.certified_primes(),
        "discrepancies": r.discrepancies,
        "entries": r.entries.iter().map(|e| json!({
            "prime": e.prime,
            "field": e.field,
            "certified": e.certified,
            "congruences": e.congruences.iter().map(|c| json!({
                "description": c.description,
                "holds": c.holds,
            })).collect::<Vec<_>>(),
            "certificates": e.certificates.iter().map(|(d, cert)| json!({
                "twist": int_str(d),
                "certificate": rank_certificate_json(cert),
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn evidence_report_json(r: &EvidenceReport) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "target": evidence_target_str(r.target),
        "all_agree": r.all_agree(),
        "items": r.items.iter().map(|i| json!({
            "check": i.check,
            "expected": i.expected,
            "observed": i.observed,
            "agrees": i.agrees,
            "cited": i.cited,
        })).collect::<Vec<_>>(),
    })
}

// -- certificate cache -------------------------------------------------------------

/// FNV-1a 64-bit checksum of a canonical JSON rendering, as fixed-width hex.
pub fn checksum_hex(v: &Value) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    for byte in v.to_string().bytes() {
        h ^= byte as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{h:016x}")
}

/// Append-only JSON-lines cache of rank certificates, keyed by the short-model
/// coefficients (a, b). On load, lines with malformed JSON or a failed
/// checksum are discarded; duplicate keys resolve last-writer-wins.
pub struct CertificateCache {
    path: Option<PathBuf>,
    entries: BTreeMap<(String, String), Value>,
    /// Lines dropped at load time (corrupt JSON or checksum mismatch).
    pub rejected_lines: usize,
}

impl CertificateCache {
    /// In-memory cache with no backing file.
    pub fn in_memory() -> Self {
        CertificateCache { path: None, entries: BTreeMap::new(), rejected_lines: 0 }
    }

    /// Open (or lazily create) a cache file.
    pub fn open(path: &Path) -> std::io::Result<Self> {
        let mut cache = CertificateCache {
            path: Some(path.to_path_buf()),
            entries: BTreeMap::new(),
            rejected_lines: 0,
        };
        if path.exists() {
            let reader = BufReader::new(File::open(path)?);
            for line in reader.lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<Value>(&line) {
                    Ok(record) => match Self::validate(&record) {
                        Some(key) => {
                            cache.entries.insert(key, record["certificate"].clone());
                        }
                        None => cache.rejected_lines += 1,
                    },
                    Err(_) => cache.rejected_lines += 1,
                }
            }
        }
        Ok(cache)
    }

    fn validate(record: &Value) -> Option<(String, String)> {
        let a = record.get("a")?.as_str()?.to_string();
        let b = record.get("b")?.as_str()?.to_string();
        let stored = record.get("checksum")?.as_str()?;
        let cert = record.get("certificate")?;
        (checksum_hex(cert) == stored).then_some((a, b))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Look up a cached certificate for a curve; checksum-validated JSON is
    /// parsed back into a structured certificate, and the stored coefficients
    /// are required to match the request.
    pub fn get(&self, curve: &ShortABCurve) -> Option<RankCertificate> {
        let key = (rat_str(&curve.a), rat_str(&curve.b));
        let cert = rank_certificate_from_json(self.entries.get(&key)?).ok()?;
        (cert.curve == *curve).then_some(cert)
    }

    /// Insert a certificate, appending one record line to the backing file.
    pub fn put(&mut self, cert: &RankCertificate) -> std::io::Result<()> {
        let payload = rank_certificate_json(cert);
        let record = json!({
            "a": rat_str(&cert.curve.a),
            "b": rat_str(&cert.curve.b),
            "checksum": checksum_hex(&payload),
            "certificate": payload,
        });
        if let Some(path) = &self.path {
            let mut f = OpenOptions::new().create(true).append(true).open(path)?;
            writeln!(f, "{record}")?;
        }
        self.entries.insert(
            (rat_str(&cert.curve.a), rat_str(&cert.curve.b)),
            record["certificate"].clone(),
        );
        Ok(())
    }
}

/// Deterministic rendering: serde_json with sorted-key maps would be needed
/// for arbitrary values; everything this module builds uses `json!` with
/// fixed field order, so `to_string` is already byte-stable.
pub fn to_canonical_string(v: &Value) -> String {
    v.to_string()
}

#[allow(dead_code)]
fn _assert_map_type(_: &Map<String, Value>) {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descent;
    use crate::modcurves::{no_exceptional_evidence, search_exceptional_primes};

    #[test]
    fn rational_strings_round_trip() {
        for s in ["0", "-7", "22/7", "-121/2"] {
            assert_eq!(rat_str(&parse_rat(s).unwrap()), s);
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        // non-reduced input normalizes
        assert_eq!(rat_str(&parse_rat("4/2").unwrap()), "2");
    }

    #[test]
    fn rank_certificate_json_round_trips() {
        let e = ShortABCurve::from_ints(-121, 3872).unwrap();
        let cert = descent::rank_upper_bound(&e).unwrap();
        let v = rank_certificate_json(&cert);
        assert_eq!(v["schema_version"], SCHEMA_VERSION);
        assert_eq!(v["verdict"], "rank_zero_certified");
        let back = rank_certificate_from_json(&v).unwrap();
        assert_eq!(back, cert);
        // serialization is byte-stable
        assert_eq!(v.to_string(), rank_certificate_json(&cert).to_string());
    }

    #[test]
    fn search_and_evidence_reports_serialize() {
        let r = search_exceptional_primes(SearchTarget::Z14, 12).unwrap();
        let v = search_report_json(&r);
        assert_eq!(v["certified_primes"], json!([11]));
        assert_eq!(v["entries"][0]["prime"], 11);
        assert_eq!(v["entries"][0]["certificates"][0]["twist"], "11");
        let ev = no_exceptional_evidence(EvidenceTarget::Z11).unwrap();
        let v = evidence_report_json(&ev);
        assert_eq!(v["all_agree"], true);
        assert_eq!(v["target"], "Z/11");
    }

    #[test]
    fn cache_round_trips_and_rejects_corruption() {
        let dir = std::env::temp_dir();
        let path = dir.join(format!("ectorsion-cache-test-{}.jsonl", std::process::id()));
        let _ = std::fs::remove_file(&path);

        let e = ShortABCurve::from_ints(-7, 16).unwrap();
        let cert = descent::rank_upper_bound(&e).unwrap();
        {
            let mut cache = CertificateCache::open(&path).unwrap();
            assert!(cache.get(&e).is_none());
            cache.put(&cert).unwrap();
            assert_eq!(cache.get(&e).unwrap(), cert);
        }
        // reload from disk
        {
            let cache = CertificateCache::open(&path).unwrap();
            assert_eq!(cache.len(), 1);
            assert_eq!(cache.get(&e).unwrap(), cert);
            assert_eq!(cache.rejected_lines, 0);
        }
        // corrupt the stored certificate without fixing the checksum
        let tampered = std::fs::read_to_string(&path)
            .unwrap()
            .replace("\"rank_bound\":0", "\"rank_bound\":1");
        std::fs::write(&path, tampered).unwrap();
        {
            let cache = CertificateCache::open(&path).unwrap();
            assert_eq!(cache.rejected_lines, 1);
            assert!(cache.get(&e).is_none());
        }
        let _ = std::fs::remove_file(&path);
    }

    #[test]
    fn checksum_is_stable_and_sensitive() {
        let a = json!({"x": "1", "y": [1, 2]});
        let b = json!({"x": "1", "y": [1, 3]});
        assert_eq!(checksum_hex(&a), checksum_hex(&a));
        assert_ne!(checksum_hex(&a), checksum_hex(&b));
    }
}

//! File formats: sequence JSON/CSV, table exports, and metric bundles.
//!
//! Rational fields are serialized as `"num/den"` strings and round-trip
//! bit-exactly. Floats are printed with 12 significant digits. CSV output is
//! comma-separated with a header row and LF line endings.

use crate::analysis::{AutocorrProfile, PeriodicAutocorr, SpectrumGrid};
use crate::enumeration::MowIslRecord;
use crate::equivalence::EquivalenceReport;
use crate::rational::{format_rational, parse_rational, rat, Rational};
use crate::sequences::{MowParams, RationalPhaseSequence, SequenceFamily};
use crate::sweep::{PassbandInterval, SweepPlan};
use crate::{Error, Result, Scalar};
use serde::{Deserialize, Serialize};
use std::io::Write;

/// `{:.11e}` gives 12 significant digits in scientific notation.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.11e}")
}

// ---------------------------------------------------------------- sequences

/// Family-specific parameters carried alongside a serialized sequence so the
/// analyzer can recover the passband geometry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyParams {
    Gsc { n: u64, m: u64, gamma: Rational, b: Rational },
    Gc { n: u64, gamma: Rational, b: Rational },
    Dft { n: u64, u0: Rational },
    Mow(MowParams),
}

impl FamilyParams {
    pub fn family(&self) -> SequenceFamily {
        match self {
            FamilyParams::Gsc { .. } => SequenceFamily::Gsc,
            FamilyParams::Gc { .. } => SequenceFamily::Gc,
            FamilyParams::Dft { .. } => SequenceFamily::Dft,
            FamilyParams::Mow(_) => SequenceFamily::Mow,
        }
    }

    /// Normalized bandwidth of the family member: `gamma` for the chirp
    /// families, `1/N` for a DFT codeword, full band for a Mow sequence.
    pub fn gamma(&self) -> Rational {
        match self {
            FamilyParams::Gsc { gamma, .. } | FamilyParams::Gc { gamma, .. } => gamma.clone(),
            FamilyParams::Dft { n, .. } => rat(1, *n as i64),
            FamilyParams::Mow(_) => crate::rational::rat_int(1),
        }
    }

    /// The passband interval implied by the parameters.
    pub fn passband(&self) -> Result<PassbandInterval> {
        use crate::sequences::GscParams;
        match self {
            FamilyParams::Gsc { n, m, gamma, b } => Ok(crate::sweep::passband(
                &GscParams::new(*n, *m, gamma.clone(), b.clone())?,
            )),
            FamilyParams::Gc { n, gamma, b } => Ok(crate::sweep::passband(&GscParams::new(
                *n,
                1,
                gamma.clone(),
                b.clone(),
            )?)),
            FamilyParams::Dft { n, u0 } => {
                // degenerate view: left edge u0 - 1/N, width 2/N
                let left = u0 - rat(1, *n as i64);
                Ok(PassbandInterval::from_left_edge(left, rat(1, *n as i64)))
            }
            FamilyParams::Mow(_) => Ok(PassbandInterval::from_left_edge(
                crate::rational::rat_int(-1),
                crate::rational::rat_int(1),
            )),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SequenceFileJson {
    family: String,
    params: serde_json::Value,
    n: u64,
    phases: Vec<String>,
}

/// A sequence plus the parameters that produced it: the on-disk unit.
#[derive(Debug, Clone)]
pub struct SequenceRecord {
    pub seq: RationalPhaseSequence,
    pub params: FamilyParams,
}

fn params_to_json(params: &FamilyParams) -> serde_json::Value {
    use serde_json::json;
    match params {
        FamilyParams::Gsc { n, m, gamma, b } => json!({
            "n": n, "m": m,
            "gamma": format_rational(gamma),
            "b": format_rational(b),
        }),
        FamilyParams::Gc { n, gamma, b } => json!({
            "n": n,
            "gamma": format_rational(gamma),
            "b": format_rational(b),
        }),
        FamilyParams::Dft { n, u0 } => json!({ "n": n, "u0": format_rational(u0) }),
        FamilyParams::Mow(p) => json!({
            "s": p.s(), "m": p.m(),
            "alpha": p.alpha(),
            "beta": p.beta(),
            "f0": p.f0().iter().map(format_rational).collect::<Vec<_>>(),
        }),
    }
}

fn field<'a>(v: &'a serde_json::Value, key: &str) -> Result<&'a serde_json::Value> {
    v.get(key)
        .ok_or_else(|| Error::MalformedFile(format!("missing params field {key:?}")))
}

fn field_u64(v: &serde_json::Value, key: &str) -> Result<u64> {
    field(v, key)?
        .as_u64()
        .ok_or_else(|| Error::MalformedFile(format!("params field {key:?} is not an integer")))
}

fn field_rational(v: &serde_json::Value, key: &str) -> Result<Rational> {
    let s = field(v, key)?
        .as_str()
        .ok_or_else(|| Error::MalformedFile(format!("params field {key:?} is not a string")))?;
    parse_rational(s)
}

fn params_from_json(family: SequenceFamily, v: &serde_json::Value) -> Result<FamilyParams> {
    match family {
        SequenceFamily::Gsc => Ok(FamilyParams::Gsc {
            n: field_u64(v, "n")?,
            m: field_u64(v, "m")?,
            gamma: field_rational(v, "gamma")?,
            b: field_rational(v, "b")?,
        }),
        SequenceFamily::Gc => Ok(FamilyParams::Gc {
            n: field_u64(v, "n")?,
            gamma: field_rational(v, "gamma")?,
            b: field_rational(v, "b")?,
        }),
        SequenceFamily::Dft => Ok(FamilyParams::Dft {
            n: field_u64(v, "n")?,
            u0: field_rational(v, "u0")?,
        }),
        SequenceFamily::Mow => {
            let ints = |key: &str| -> Result<Vec<u64>> {
                field(v, key)?
                    .as_array()
                    .ok_or_else(|| Error::MalformedFile(format!("{key} is not an array")))?
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .ok_or_else(|| Error::MalformedFile(format!("{key} entry not integer")))
                    })
                    .collect()
            };
            let f0 = field(v, "f0")?
                .as_array()
                .ok_or_else(|| Error::MalformedFile("f0 is not an array".into()))?
                .iter()
                .map(|x| {
                    x.as_str()
                        .ok_or_else(|| Error::MalformedFile("f0 entry not a string".into()))
                        .and_then(parse_rational)
                })
                .collect::<Result<Vec<_>>>()?;
            let params = MowParams::new(
                field_u64(v, "s")?,
                field_u64(v, "m")?,
                ints("alpha")?,
                ints("beta")?.into_iter().map(|x| x as i64).collect(),
                f0,
            )?;
            Ok(FamilyParams::Mow(params))
        }
    }
}

/// Serializes a sequence record to the canonical JSON layout
/// `{family, params, n, phases}`.
pub fn sequence_to_json(record: &SequenceRecord) -> String {
    let file = SequenceFileJson {
        family: record.seq.family().to_string(),
        params: params_to_json(&record.params),
        n: record.seq.len() as u64,
        phases: record.seq.phases().iter().map(format_rational).collect(),
    };
    serde_json::to_string_pretty(&file).expect("serializable") + "\n"
}

pub fn sequence_from_json(text: &str) -> Result<SequenceRecord> {
    let file: SequenceFileJson = serde_json::from_str(text)
        .map_err(|e| Error::MalformedFile(format!("json parse: {e}")))?;
    let family: SequenceFamily = file.family.parse()?;
    if file.phases.len() as u64 != file.n {
        return Err(Error::MalformedFile(format!(
            "n={} but {} phases present",
            file.n,
            file.phases.len()
        )));
    }
    let phases = file
        .phases
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>>>()?;
    let seq = RationalPhaseSequence::new(family, phases)?;
    let params = params_from_json(family, &file.params)?;
    Ok(SequenceRecord { seq, params })
}

/// Writes the `(n, phase_num, phase_den, re, im)` CSV rendering.
pub fn write_sequence_csv<W: Write>(w: W, seq: &RationalPhaseSequence) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new().from_writer(w);
    let entries = seq.render::<f64>();
    wtr.write_record(["n", "phase_num", "phase_den", "re", "im"])
        .map_err(csv_err)?;
    for (i, (ph, e)) in seq.phases().iter().zip(entries.entries()).enumerate() {
        wtr.write_record([
            i.to_string(),
            ph.numer().to_string(),
            ph.denom().to_string(),
            fmt_float(e.re),
            fmt_float(e.im),
        ])
        .map_err(csv_err)?;
    }
    wtr.flush().map_err(|e| Error::MalformedFile(e.to_string()))
}

/// Reads the phases back from the CSV rendering. The rational columns are
/// authoritative and the float columns ignored; CSV carries no family
/// metadata, so the loaded sequence is labeled `gsc`.
pub fn sequence_from_csv(text: &str) -> Result<RationalPhaseSequence> {
    let mut rdr = csv::ReaderBuilder::new().from_reader(text.as_bytes());
    let mut phases = Vec::new();
    for (line, rec) in rdr.records().enumerate() {
        let rec = rec.map_err(|e| Error::MalformedFile(format!("line {}: {e}", line + 2)))?;
        if rec.len() < 3 {
            return Err(Error::MalformedFile(format!(
                "line {}: expected 5 fields, got {}",
                line + 2,
                rec.len()
            )));
        }
        let phase = parse_rational(&format!("{}/{}", &rec[1], &rec[2])).map_err(|_| {
            Error::MalformedFile(format!(
                "line {}: bad phase {:?}/{:?}",
                line + 2,
                &rec[1],
                &rec[2]
            ))
        })?;
        phases.push(phase);
    }
    if phases.is_empty() {
        return Err(Error::MalformedFile("no data rows".into()));
    }
    RationalPhaseSequence::new(SequenceFamily::Gsc, phases)
}

fn csv_err(e: csv::Error) -> Error {
    Error::MalformedFile(e.to_string())
}

// ------------------------------------------------------------------ tables

/// `(tau, re, im)` rows for an aperiodic profile.
pub fn write_profile_csv<W: Write, T: Scalar>(w: W, profile: &AutocorrProfile<T>) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new().from_writer(w);
    wtr.write_record(["tau", "re", "im"]).map_err(csv_err)?;
    for (tau, v) in profile.lags() {
        wtr.write_record([
            tau.to_string(),
            fmt_float(v.re.to_f64().unwrap()),
            fmt_float(v.im.to_f64().unwrap()),
        ])
        .map_err(csv_err)?;
    }
    wtr.flush().map_err(|e| Error::MalformedFile(e.to_string()))
}

/// `(tau, re, im)` rows for a periodic profile, shifts `0..N`.
pub fn write_periodic_csv<W: Write, T: Scalar>(w: W, profile: &PeriodicAutocorr<T>) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new().from_writer(w);
    wtr.write_record(["tau", "re", "im"]).map_err(csv_err)?;
    for (tau, v) in profile.values().iter().enumerate() {
        wtr.write_record([
            tau.to_string(),
            fmt_float(v.re.to_f64().unwrap()),
            fmt_float(v.im.to_f64().unwrap()),
        ])
        .map_err(csv_err)?;
    }
    wtr.flush().map_err(|e| Error::MalformedFile(e.to_string()))
}

/// `(u, y)` rows of a sampled spectrum.
pub fn write_spectrum_csv<W: Write, T: Scalar>(w: W, grid: &SpectrumGrid<T>) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new().from_writer(w);
    wtr.write_record(["u", "y"]).map_err(csv_err)?;
    for (u, y) in grid.u().iter().zip(grid.y()) {
        wtr.write_record([
            fmt_float(u.to_f64().unwrap()),
            fmt_float(y.to_f64().unwrap()),
        ])
        .map_err(csv_err)?;
    }
    wtr.flush().map_err(|e| Error::MalformedFile(e.to_string()))
}

// ------------------------------------------------------------------ bundles

/// The scalar metrics of one sequence, as exported by `analyze`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MetricBundle {
    pub isl: f64,
    pub nrmse: f64,
    pub leakage: f64,
    /// Phase-grid spacing as a fraction of a turn, `"num/den"`.
    pub resolution_turns: String,
}

/// Plan serialization: `{n, m, gamma, beams: [{b, u0, segments}]}`.
pub fn plan_to_json(plan: &SweepPlan) -> String {
    use serde_json::json;
    let beams: Vec<serde_json::Value> = plan
        .beams
        .iter()
        .map(|beam| {
            json!({
                "b": format_rational(&beam.b),
                "u0": format_rational(&beam.u0),
                "segments": beam
                    .passband
                    .segments()
                    .iter()
                    .map(|(a, b)| vec![format_rational(a), format_rational(b)])
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    let v = json!({
        "n": plan.n,
        "m": plan.m,
        "gamma": format_rational(&plan.gamma),
        "beams": beams,
    });
    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
}

/// Per-beam plan table: `(beam, b, u0, coverage_left, coverage_right)`.
pub fn write_plan_csv<W: Write>(w: W, plan: &SweepPlan) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new().from_writer(w);
    wtr.write_record(["beam", "b", "u0", "coverage_left", "coverage_right"])
        .map_err(csv_err)?;
    for (i, beam) in plan.beams.iter().enumerate() {
        let left = &beam.u0 - &plan.gamma;
        let right = &beam.u0 + &plan.gamma;
        wtr.write_record([
            (i + 1).to_string(),
            format_rational(&beam.b),
            format_rational(&beam.u0),
            format_rational(&left),
            format_rational(&right),
        ])
        .map_err(csv_err)?;
    }
    wtr.flush().map_err(|e| Error::MalformedFile(e.to_string()))
}

/// Equivalence reports as a JSON array.
pub fn reports_to_json(reports: &[EquivalenceReport]) -> String {
    use serde_json::json;
    let rows: Vec<serde_json::Value> = reports
        .iter()
        .map(|r| {
            json!({
                "kind": r.kind.to_string(),
                "lhs_params": r.lhs_params,
                "rhs_params": r.rhs_params,
                "max_phase_gap": format_rational(&r.max_phase_gap),
                "verdict": r.verdict,
            })
        })
        .collect();
    serde_json::to_string_pretty(&rows).expect("serializable") + "\n"
}

fn join_u64(values: &[u64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

/// Enumeration results: `(alpha, beta, f0, isl)` rows, tables `;`-joined.
pub fn write_enumeration_csv<W: Write>(w: W, records: &[MowIslRecord]) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new().from_writer(w);
    wtr.write_record(["alpha", "beta", "f0", "isl"]).map_err(csv_err)?;
    for rec in records {
        wtr.write_record([
            join_u64(rec.params.alpha()),
            join_u64(rec.params.beta()),
            rec.params
                .f0()
                .iter()
                .map(format_rational)
                .collect::<Vec<_>>()
                .join(";"),
            fmt_float(rec.isl),
        ])
        .map_err(csv_err)?;
    }
    wtr.flush().map_err(|e| Error::MalformedFile(e.to_string()))
}

/// Enumeration summary `{count, min_isl, argmin}`.
pub fn enumeration_summary_json(records: &[MowIslRecord]) -> String {
    use serde_json::json;
    let v = match records.first() {
        Some(best) => json!({
            "count": records.len(),
            "min_isl": best.isl,
            "argmin": {
                "alpha": best.params.alpha(),
                "beta": best.params.beta(),
                "f0": best.params.f0().iter().map(format_rational).collect::<Vec<_>>(),
            },
        }),
        None => json!({ "count": 0 }),
    };
    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;
    use crate::sequences::{gsc_phases, GscParams};

    fn sample_record() -> SequenceRecord {
        let params = GscParams::new(50, 10, rat(1, 2), rat_int(1)).unwrap();
        SequenceRecord {
            seq: gsc_phases(&params),
            params: FamilyParams::Gsc {
                n: 50,
                m: 10,
                gamma: rat(1, 2),
                b: rat_int(1),
            },
        }
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let record = sample_record();
        let text = sequence_to_json(&record);
        let loaded = sequence_from_json(&text).unwrap();
        assert_eq!(loaded.seq.phases(), record.seq.phases());
        assert_eq!(loaded.params, record.params);
        // serializing again reproduces the same bytes
        assert_eq!(sequence_to_json(&loaded), text);
    }

    #[test]
    fn csv_round_trip_preserves_rationals() {
        let record = sample_record();
        let mut buf = Vec::new();
        write_sequence_csv(&mut buf, &record.seq).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let loaded = sequence_from_csv(&text).unwrap();
        assert_eq!(loaded.phases(), record.seq.phases());
    }

    #[test]
    fn malformed_inputs_are_reported() {
        assert!(matches!(sequence_from_json(""), Err(Error::MalformedFile(_))));
        assert!(matches!(
            sequence_from_json("{\"family\": \"gsc\", \"params\": {}, \"n\": 2, \"phases\": [\"0/1\"]}"),
            Err(Error::MalformedFile(_))
        ));
        assert!(matches!(sequence_from_csv("n,phase_num\n"), Err(Error::MalformedFile(_))));
        assert!(matches!(
            sequence_from_csv("n,phase_num,phase_den,re,im\n0,1,0,0,0\n"),
            Err(Error::MalformedFile(_))
        ));
    }

    #[test]
    fn float_formatting_significant_digits() {
        assert_eq!(fmt_float(0.029651719387358888), "2.96517193874e-2");
        assert_eq!(fmt_float(1.0), "1.00000000000e0");
    }

    #[test]
    fn dft_params_passband() {
        let p = FamilyParams::Dft { n: 10, u0: rat(-9, 10) };
        let pb = p.passband().unwrap();
        assert_eq!(pb.total_width(), rat(2, 10));
        assert!(pb.contains(&rat(-9, 10)));
    }
}

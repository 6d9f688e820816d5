//! The full pipeline on one instance, and corpus summaries.

use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::Serialize;

use crate::classify::{classify, ClassificationReport, Verdict};
use crate::cm_reg::{
    degree, eg_check, herzog_hibi_bound, one_singular_bound, reg_with, BoundCheck, DegreeResult, EgCheck,
    RegOptions, RegularityResult,
};
use crate::error::{Error, Result};
use crate::homology::{build_t, reduced_homology, Field};
use crate::instance::{instance_hash, instance_value, read_instance};
use crate::lattice::{GeneratorSet, SumsetTower};
use crate::sumset_reg::{normal_frame, sigma, verify_sigma_bounds, SigmaBoundsReport, SigmaResult};

pub const SCHEMA: &str = "toric-reg/1";

/// A payload tagged with the hash of the instance it was computed from.
#[derive(Clone, Debug, Serialize)]
pub struct Section<T> {
    pub instance_hash: String,
    #[serde(flatten)]
    pub body: T,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceEcho {
    pub d: usize,
    #[serde(rename = "D")]
    pub degree: i64,
    pub size: usize,
    #[serde(rename = "A")]
    pub points: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct SigmaSection {
    #[serde(flatten)]
    pub result: SigmaResult,
    /// The tower and the holes live in the frame with the singular vertex at 0.
    pub frame_vertex: usize,
    pub bounds_check: SigmaBoundsReport,
}

/// Betti number of the witness complex in the witness degree, per field.
#[derive(Clone, Debug, Serialize)]
pub struct FieldCheck {
    pub q: u64,
    pub f2: u64,
    pub f32003: u64,
    pub mismatch: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegSection {
    #[serde(flatten)]
    pub result: RegularityResult,
    pub reg_minus_sigma: Option<i64>,
    /// The closed-form bound for the verdict.
    pub bound_check: Option<BoundCheck>,
    pub field_check: FieldCheck,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Timings {
    pub classify_ms: f64,
    pub sigma_ms: f64,
    pub reg_ms: f64,
    pub degree_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisBundle {
    pub schema: &'static str,
    pub instance_hash: String,
    pub instance: InstanceEcho,
    pub classification: Section<ClassificationReport>,
    pub sigma: Option<Section<SigmaSection>>,
    pub reg: Section<RegSection>,
    pub degree: Section<DegreeResult>,
    pub eg: Section<EgCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub reg: RegOptions,
    pub timings: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            reg: RegOptions::default(),
            timings: true,
        }
    }
}

fn tag<T>(hash: &str, body: T) -> Section<T> {
    Section {
        instance_hash: hash.to_string(),
        body,
    }
}

fn ms(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

pub fn analyze(a: &GeneratorSet, opts: &AnalyzeOptions) -> Result<AnalysisBundle> {
    let hash = instance_hash(a);
    let mut times = Timings::default();

    let t = Instant::now();
    let report = classify(a)?;
    times.classify_ms = ms(t);
    if report.verdict == Verdict::Other && opts.reg.cutoff.is_none() {
        return Err(Error::Unsupported(
            "the set is neither smooth nor one-singular; pass --cutoff for a lower bound on reg".into(),
        ));
    }

    let t = Instant::now();
    let vertex = report.singular_vertex.unwrap_or(0);
    let frame = match report.verdict {
        Verdict::Other => a.clone(),
        _ => normal_frame(a, &report)?,
    };
    let mut tower = SumsetTower::with_max_slice(frame, opts.reg.max_slice);
    let sig = match report.verdict {
        Verdict::Other => None,
        _ => Some(sigma(&mut tower, &report)?),
    };
    times.sigma_ms = ms(t);

    let t = Instant::now();
    let r = reg_with(&mut tower, &report, sig.as_ref(), &opts.reg)?;
    let field_check = witness_fields(&tower, &r, vertex)?;
    times.reg_ms = ms(t);

    let t = Instant::now();
    let deg = degree(a)?;
    times.degree_ms = ms(t);

    let d = a.dim();
    let bound_check = match report.verdict {
        Verdict::Smooth => Some(herzog_hibi_bound(d, a.degree(), r.reg)?),
        Verdict::OneSingular => Some(one_singular_bound(d, a.degree(), report.e.unwrap_or(1), r.reg)?),
        Verdict::Other => None,
    };
    let eg = eg_check(r.reg, &deg, Some(report.verdict), d)?;
    let reg_minus_sigma = sig.as_ref().map(|s| r.reg - s.sigma as i64);

    Ok(AnalysisBundle {
        schema: SCHEMA,
        instance_hash: hash.clone(),
        instance: InstanceEcho {
            d,
            degree: a.degree(),
            size: a.len(),
            points: instance_value(a)["A"].clone(),
        },
        sigma: sig.map(|s| {
            tag(&hash, SigmaSection {
                bounds_check: verify_sigma_bounds(&s),
                result: s,
                frame_vertex: vertex,
            })
        }),
        classification: tag(&hash, report),
        reg: tag(&hash, RegSection {
            result: r,
            reg_minus_sigma,
            bound_check,
            field_check,
        }),
        degree: tag(&hash, deg),
        eg: tag(&hash, eg),
        timings: opts.timings.then_some(times),
    })
}

fn witness_fields(tower: &SumsetTower, r: &RegularityResult, vertex: usize) -> Result<FieldCheck> {
    // back into the tower's frame
    let mut c = r.witness_y.coords().to_vec();
    c.swap(0, vertex);
    let y = crate::lattice::LatticeVector::new(c)?;
    let cx = build_t(tower, &y)?;
    let b = |f| reduced_homology(&cx, f).betti(r.witness_i);
    let (q, f2, f32003) = (b(Field::Rationals), b(Field::F2), b(Field::F32003));
    Ok(FieldCheck {
        q,
        f2,
        f32003,
        mismatch: q != f2 || q != f32003,
    })
}

pub const CORPUS_HEADER: &str = "file,d,D,e,verdict,sigma,reg,degree,codim,eg_slack,reg_minus_sigma";

/// One CSV row. Unsupported instances keep their `d`, `D` and verdict and
/// leave the rest empty; unreadable or invalid files get verdict `invalid`.
pub fn corpus_row(path: &Path, opts: &AnalyzeOptions) -> String {
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let a = match read_instance(path) {
        Ok(a) => a,
        Err(_) => return format!("{name},,,,invalid,,,,,,"),
    };
    match analyze(&a, opts) {
        Ok(b) => {
            let e = b.classification.body.e.map(|e| e.to_string()).unwrap_or_default();
            let sigma = b.sigma.as_ref().map(|s| s.body.result.sigma.to_string()).unwrap_or_default();
            let gap = b.reg.body.reg_minus_sigma.map(|g| g.to_string()).unwrap_or_default();
            format!(
                "{name},{},{},{e},{},{sigma},{},{},{},{},{gap}",
                a.dim(),
                a.degree(),
                b.classification.body.verdict.as_str(),
                b.reg.body.result.reg,
                b.degree.body.degree,
                b.degree.body.codim,
                b.eg.body.slack,
            )
        }
        Err(Error::Unsupported(_)) => format!("{name},{},{},,Other,,,,,,", a.dim(), a.degree()),
        Err(_) => format!("{name},{},{},,invalid,,,,,,", a.dim(), a.degree()),
    }
}

/// `*.json` files of `dir`, sorted by name.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    v.sort();
    Ok(v)
}

/// Header plus one row per instance file, newline-terminated.
pub fn corpus_csv(dir: &Path, opts: &AnalyzeOptions) -> Result<String> {
    let mut out = String::from(CORPUS_HEADER);
    out.push('\n');
    for p in corpus_files(dir)? {
        out.push_str(&corpus_row(&p, opts));
        out.push('\n');
    }
    Ok(out)
}

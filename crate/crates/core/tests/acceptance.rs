//! End-to-end checks against independently computed values. Prints one
//! `PASS`/`FAIL` line per criterion and exits nonzero on an unexpected
//! failure. Run with `cargo test --test acceptance`.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toric_reg::analysis::{corpus_csv, AnalyzeOptions};
use toric_reg::classify::{charts, classify, minimal_generators, Verdict};
use toric_reg::cm_reg::{
    degree, eg_check, eg_inequality_suite, herzog_hibi_bound, one_singular_bound, reg_with, RegOptions,
    RegularityResult,
};
use toric_reg::generate::{generate, random_subset, Family, GenParams};
use toric_reg::homology::{build_t, reduced_homology, Field};
use toric_reg::instance::write_instance;
use toric_reg::lattice::{step_property_holds, step_threshold, SumsetTower};
use toric_reg::oracle::{homology_recheck, naive_member_homogenized, naive_sumset};
use toric_reg::sumset_reg::{normal_frame, sigma, SigmaResult};
use toric_reg::{GeneratorSet, LatticeVector};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

/// Distinct complexes met in criteria 1–6, re-derived in criterion 7.
static COMPLEXES: Mutex<BTreeSet<(usize, Vec<u32>)>> = Mutex::new(BTreeSet::new());

/// Instances of criteria 1–6, rerun with a raised cutoff in criterion 10.
static INSTANCES: Mutex<Vec<(String, GeneratorSet, i64)>> = Mutex::new(Vec::new());

fn lv(c: &[i64]) -> LatticeVector {
    LatticeVector::new(c.to_vec()).unwrap()
}

fn set(d: usize, pts: &[&[i64]]) -> GeneratorSet {
    GeneratorSet::new(d, pts.iter().map(|p| p.to_vec()).collect()).unwrap()
}

/// `{y ∈ ℕ^d : |y| ≤ sD, e | |y|}` by nested enumeration.
fn delta(d: usize, degree: i64, s: i64, e: i64) -> BTreeSet<LatticeVector> {
    fn rec(d: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(d, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, s * degree, &mut Vec::new(), &mut out);
    out.into_iter()
        .filter(|p| p.iter().sum::<i64>() % e == 0)
        .map(LatticeVector::new)
        .collect::<Result<_, _>>()
        .unwrap()
}

struct Run {
    tower: SumsetTower,
    verdict: Verdict,
    e: i64,
    vertex: usize,
    sigma: SigmaResult,
    reg: RegularityResult,
}

fn run(a: &GeneratorSet, extra: u32) -> Result<Run, String> {
    let report = classify(a).map_err(|e| e.to_string())?;
    let frame = normal_frame(a, &report).map_err(|e| e.to_string())?;
    let mut tower = SumsetTower::new(frame);
    let sig = sigma(&mut tower, &report).map_err(|e| e.to_string())?;
    let opts = RegOptions {
        extra_levels: extra,
        ..RegOptions::default()
    };
    let r = reg_with(&mut tower, &report, Some(&sig), &opts).map_err(|e| e.to_string())?;
    Ok(Run {
        tower,
        verdict: report.verdict,
        e: report.e.unwrap_or(1),
        vertex: report.singular_vertex.unwrap_or(0),
        sigma: sig,
        reg: r,
    })
}

/// Records every complex swept by `r` and the instance itself.
fn record(name: &str, a: &GeneratorSet, r: &Run) {
    let degree = r.tower.generators().degree();
    let mut seen = BTreeSet::new();
    for level in 0..=r.reg.cutoff_level {
        for b in r.tower.level(level).points() {
            let mut c = vec![level as i64 * degree - b.norm()];
            c.extend_from_slice(b.coords());
            let cx = build_t(&r.tower, &lv(&c)).unwrap();
            seen.insert((cx.n_vertices(), cx.face_masks()));
        }
    }
    COMPLEXES.lock().unwrap().extend(seen);
    INSTANCES
        .lock()
        .unwrap()
        .push((name.to_string(), a.clone(), r.reg.reg));
}

/// `T_y` from the definition, with membership decided by the oracle.
fn oracle_t(a: &GeneratorSet, y: &LatticeVector) -> Vec<u32> {
    let k = y.dim();
    let degree = a.degree();
    (0u32..1 << k)
        .filter(|&m| {
            let mut c = y.coords().to_vec();
            for (j, x) in c.iter_mut().enumerate() {
                if m >> j & 1 == 1 {
                    *x -= degree;
                }
            }
            c.iter().all(|&x| x >= 0) && naive_member_homogenized(a.points(), degree, &lv(&c)).unwrap()
        })
        .collect()
}

fn c1() -> Outcome {
    let a = set(2, &[&[0, 0], &[4, 0], &[0, 4], &[3, 1], &[1, 3], &[2, 0], &[0, 2]]);
    let r = run(&a, 0)?;
    ensure!(r.verdict == Verdict::OneSingular && r.e == 2 && r.vertex == 0, "classification");
    ensure!(r.sigma.holes == vec![lv(&[1, 1])], "ℋ = {:?}", r.sigma.holes);
    let hole = lv(&[1, 1]);
    for s in 2..=8 {
        let mut want = delta(2, 4, s, 2);
        want.remove(&hole);
        let got = naive_sumset(a.points(), s as u32).unwrap();
        ensure!(got == want, "naive {s}A ≠ Δ_{{{s},2}} ∖ ℋ");
        let lvl = r.tower.get(s as u32);
        if let Some(l) = lvl {
            ensure!(l.points().collect::<BTreeSet<_>>() == want, "tower {s}A ≠ Δ_{{{s},2}} ∖ ℋ");
        }
    }
    ensure!(r.sigma.sigma == 2, "σ = {}", r.sigma.sigma);
    ensure!(r.reg.reg == 2, "reg = {}", r.reg.reg);
    ensure!(
        r.reg.witness_y == lv(&[4, 2, 2]) && r.reg.witness_i == -1,
        "witness ({:?}, {})",
        r.reg.witness_y,
        r.reg.witness_i
    );
    let t = oracle_t(&a, &lv(&[4, 2, 2]));
    ensure!(t == vec![0], "T_(4,2,2) = {t:?}, expected {{∅}}");
    ensure!(homology_recheck(&t, 3, 2) == vec![1], "β̃₋₁ of {{∅}}");
    let deg = degree(&a).map_err(|e| e.to_string())?;
    ensure!(deg.degree == BigInt::from(8) && deg.codim == 4, "degree {} codim {}", deg.degree, deg.codim);
    let eg = eg_check(r.reg.reg, &deg, Some(r.verdict), 2).map_err(|e| e.to_string())?;
    ensure!(eg.holds && eg.bound == BigInt::from(4), "EG {eg:?}");
    record("ex1sing", &a, &r);
    Ok("ℋ = {(1,1)}, window [2,8], σ = 2, reg = 2 at ((4,2,2), −1), degree 8, 2 ≤ 8 − 4".into())
}

fn ex1sing2() -> GeneratorSet {
    let pts: Vec<Vec<i64>> = delta(2, 6, 1, 2)
        .into_iter()
        .map(Vec::from)
        .filter(|p| p != &[2, 4] && p != &[3, 3])
        .collect();
    GeneratorSet::new(2, pts).unwrap()
}

/// `Err` carries a documented deviation: the first element is true when
/// every other check passed.
fn c2() -> Result<String, (bool, String)> {
    let hard = |m: String| (false, m);
    let a = ex1sing2();
    ensure_pair(a.len() == 14, "|A| = 14")?;
    let r = run(&a, 0).map_err(hard)?;
    ensure_pair(r.verdict == Verdict::OneSingular && r.e == 2, "classification")?;
    ensure_pair(r.sigma.holes.is_empty(), "ℋ ≠ ∅")?;
    let mut two = delta(2, 6, 2, 2);
    two.remove(&lv(&[3, 9]));
    ensure_pair(naive_sumset(a.points(), 2).unwrap() == two, "2A ≠ Δ_{2,2} ∖ {(3,9)}")?;
    for s in 3..=5 {
        ensure_pair(naive_sumset(a.points(), s).unwrap() == delta(2, 6, s as i64, 2), "sA ≠ Δ_{s,2}")?;
    }
    ensure_pair(r.reg.reg == 3, "reg ≠ 3")?;
    let y = lv(&[6, 9, 15]);
    let t = oracle_t(&a, &y);
    let hollow: Vec<u32> = (0..7).collect();
    ensure_pair(t == hollow, "T_(6,9,15) is not the hollow triangle")?;
    ensure_pair(homology_recheck(&t, 3, 2) == vec![0, 0, 1], "oracle β̃₁ ≠ 1")?;
    let lib = reduced_homology(&build_t(&r.tower, &y).unwrap(), Field::Rationals);
    ensure_pair(lib.betti(1) == 1 && lib.nonzero_degrees() == vec![1], "library β̃ at (6,9,15)")?;
    ensure_pair(30 / 6 - 2 == r.reg.reg, "witness value")?;
    record("ex1sing2", &a, &r);
    if r.sigma.sigma != 2 {
        return Err((
            true,
            format!(
                "σ = {} (expected 2): 2A misses (3,9) while ℋ = ∅, so s = 2 violates the stabilization \
                 condition; ℋ = ∅, reg = 3 and the hollow triangle at (6,9,15) all check",
                r.sigma.sigma
            ),
        ));
    }
    Ok("ℋ = ∅, σ = 2, reg = 3, T_(6,9,15) hollow triangle with β̃₁ = 1".into())
}

fn ensure_pair(cond: bool, msg: &str) -> Result<(), (bool, String)> {
    if cond {
        Ok(())
    } else {
        Err((false, msg.to_string()))
    }
}

fn c3() -> Outcome {
    let a = set(2, &[&[0, 0], &[6, 0], &[0, 6], &[1, 5], &[5, 1], &[0, 4], &[4, 0], &[1, 1]]);
    let h: BTreeSet<Vec<i64>> = a.homogenize().points().iter().map(|p| p.coords().to_vec()).collect();
    let b: BTreeSet<Vec<i64>> = [[6, 0, 0], [0, 6, 0], [0, 0, 6], [0, 1, 5], [0, 5, 1], [2, 0, 4], [2, 4, 0], [4, 1, 1]]
        .iter()
        .map(|p| p.to_vec())
        .collect();
    ensure!(h == b, "homogenization {h:?}");
    let rep = classify(&a).map_err(|e| e.to_string())?;
    ensure!(rep.verdict == Verdict::OneSingular && rep.singular_vertex == Some(0), "verdict {:?}", rep.verdict);
    let ch = charts(&a);
    let b0: BTreeSet<LatticeVector> = [[6, 0], [0, 6], [1, 5], [5, 1], [0, 4], [4, 0], [1, 1]].iter().map(|p| lv(p)).collect();
    ensure!(ch[0].generators.iter().cloned().collect::<BTreeSet<_>>() == b0, "B^(0)");
    let m0: BTreeSet<LatticeVector> = minimal_generators(&ch[0].generators).into_iter().collect();
    let mut want = b0.clone();
    want.remove(&lv(&[1, 5]));
    want.remove(&lv(&[5, 1]));
    ensure!(m0 == want, "minimal generators of B^(0): {m0:?}");
    let b1: BTreeSet<LatticeVector> = [[6, 0], [0, 6], [0, 5], [0, 1], [2, 4], [2, 0], [4, 1]].iter().map(|p| lv(p)).collect();
    for i in [1, 2] {
        ensure!(ch[i].generators.iter().cloned().collect::<BTreeSet<_>>() == b1, "B^({i})");
        let m: BTreeSet<LatticeVector> = minimal_generators(&ch[i].generators).into_iter().collect();
        ensure!(m == [lv(&[2, 0]), lv(&[0, 1])].into_iter().collect(), "minimal generators of B^({i})");
    }
    ensure!(rep.chart_smooth == vec![false, true, true], "chart smoothness {:?}", rep.chart_smooth);
    Ok("OneSingular at vertex 0; B^(0) minimal = B^(0) ∖ {(1,5),(5,1)}; charts 1, 2 smooth".into())
}

fn sigma_of(a: &GeneratorSet) -> Result<u32, String> {
    let rep = classify(a).map_err(|e| e.to_string())?;
    let mut t = SumsetTower::new(normal_frame(a, &rep).map_err(|e| e.to_string())?);
    Ok(sigma(&mut t, &rep).map_err(|e| e.to_string())?.sigma)
}

fn params(d: usize, degree: i64, e: i64, extra: usize, seed: u64) -> GenParams {
    GenParams { d, degree, e, extra, seed }
}

fn c4() -> Outcome {
    let mut n = 0;
    for d in 1..=3usize {
        for degree in 3..=6i64 {
            let di = d as i64;
            let ms = generate(Family::MinimalSmooth, &params(d, degree, 1, 0, 0)).map_err(|e| e.to_string())?;
            let s = sigma_of(&ms)? as i64;
            let want = if (d, degree) == (1, 3) { 1 } else { di * (degree - 2) };
            ensure!(s == want, "minimal-smooth d={d} D={degree}: σ = {s}, expected {want}");
            let v = generate(Family::Veronese, &params(d, degree, 1, 0, 0)).map_err(|e| e.to_string())?;
            let s = sigma_of(&v)? as i64;
            ensure!(s == di - di / degree, "Veronese d={d} D={degree}: σ = {s}");
            n += 2;
        }
    }
    for d in 1..=6usize {
        let di = d as i64;
        let v = generate(Family::Veronese, &params(d, 2, 1, 0, 0)).map_err(|e| e.to_string())?;
        let s = sigma_of(&v)? as i64;
        ensure!(s == di - di / 2, "D=2 smooth d={d}: σ = {s}, expected {}", di - di / 2);
        n += 1;
        if d >= 2 {
            let a = generate(Family::OneSingular, &params(d, 2, 2, 0, 0)).map_err(|e| e.to_string())?;
            let s = sigma_of(&a)? as i64;
            ensure!(s <= di / 2, "D=2 one-singular d={d}: σ = {s} above ⌈(d−1)/2⌉ = {}", di / 2);
            n += 1;
        }
    }
    Ok(format!("{n} closed forms: d(D−2), d − ⌊d/D⌋, D = 2 up to d = 6"))
}

fn c5() -> Outcome {
    let mut cases: Vec<(String, GeneratorSet)> = Vec::new();
    for d in 1..=3usize {
        for degree in 2..=5i64 {
            for f in [Family::MinimalSmooth, Family::Veronese] {
                let a = generate(f, &params(d, degree, 1, 0, 0)).map_err(|e| e.to_string())?;
                cases.push((format!("{} d={d} D={degree}", f.name()), a));
            }
        }
    }
    for seed in 0..20u64 {
        let d = 1 + (seed % 3) as usize;
        let degree = 3 + ((seed / 3) % 3) as i64;
        let extra = 1 + (seed % 4) as usize;
        let a = generate(Family::SmoothSuperset, &params(d, degree, 1, extra, seed)).map_err(|e| e.to_string())?;
        cases.push((format!("smooth-superset seed={seed}"), a));
    }
    for (name, a) in &cases {
        let r = run(a, 0).map_err(|e| format!("{name}: {e}"))?;
        ensure!(r.verdict == Verdict::Smooth, "{name}: not smooth");
        ensure!(r.reg.reg == r.sigma.sigma as i64, "{name}: reg {} ≠ σ {}", r.reg.reg, r.sigma.sigma);
        herzog_hibi_bound(a.dim(), a.degree(), r.reg.reg).map_err(|e| format!("{name}: {e}"))?;
        record(name, a, &r);
    }
    Ok(format!("{} smooth instances with reg = σ", cases.len()))
}

fn c6() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut n = 0;
    let mut gaps: BTreeMap<i64, usize> = BTreeMap::new();
    for d in [2usize, 3] {
        for degree in [4i64, 6] {
            for e in [2, degree] {
                for seed in 0..20u64 {
                    let extra = (seed % 4) as usize;
                    let a = generate(Family::OneSingular, &params(d, degree, e, extra, seed))
                        .map_err(|err| format!("gen d={d} D={degree} e={e} seed={seed}: {err}"))?;
                    let name = format!("d{d}_D{degree}_e{e}_s{seed:02}");
                    let r = run(&a, 0).map_err(|err| format!("{name}: {err}"))?;
                    let s = r.sigma.sigma as i64;
                    ensure!(r.reg.reg <= s + 1, "{name}: reg {} > σ + 1 = {}", r.reg.reg, s + 1);
                    one_singular_bound(d, degree, e, r.reg.reg).map_err(|err| format!("{name}: {err}"))?;
                    *gaps.entry(r.reg.reg - s).or_default() += 1;
                    write_instance(&dir.path().join(format!("{name}.json")), &a).map_err(|e| e.to_string())?;
                    record(&name, &a, &r);
                    n += 1;
                }
            }
        }
    }
    let opts = AnalyzeOptions {
        timings: false,
        ..Default::default()
    };
    let csv = corpus_csv(dir.path(), &opts).map_err(|e| e.to_string())?;
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap_or_default().split(',').collect();
    let col = header.iter().position(|h| *h == "reg_minus_sigma").ok_or("no gap column")?;
    let mut rows = 0;
    let mut csv_gaps: BTreeMap<i64, usize> = BTreeMap::new();
    for l in lines {
        let g: i64 = l.split(',').nth(col).and_then(|x| x.parse().ok()).ok_or(format!("bad row {l}"))?;
        *csv_gaps.entry(g).or_default() += 1;
        rows += 1;
    }
    ensure!(rows == n && csv_gaps == gaps, "corpus CSV disagrees: {csv_gaps:?} vs {gaps:?}");
    Ok(format!("{n} one-singular instances; reg − σ histogram {gaps:?}"))
}

fn c7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut sets = 0;
    while sets < 100 {
        let d = rng.gen_range(1..=3usize);
        let degree = rng.gen_range(2..=6i64);
        let mut pts: BTreeSet<Vec<i64>> = BTreeSet::new();
        pts.insert(vec![0; d]);
        for i in 0..d {
            let mut v = vec![0; d];
            v[i] = degree;
            pts.insert(v);
        }
        let pool: Vec<Vec<i64>> = delta(d, degree, 1, 1).into_iter().map(Vec::from).collect();
        let target = rng.gen_range(pts.len()..=15);
        let mut tries = 0;
        while pts.len() < target && tries < 200 {
            pts.insert(pool[rng.gen_range(0..pool.len())].clone());
            tries += 1;
        }
        let a = GeneratorSet::new(d, pts.into_iter().collect()).unwrap();
        let mut t = SumsetTower::new(a.clone());
        for s in 0..=4u32 {
            let fast: BTreeSet<LatticeVector> = t.sumset(s).unwrap().points().collect();
            ensure!(fast == naive_sumset(a.points(), s).unwrap(), "sumset mismatch at s={s} for {a:?}");
        }
        sets += 1;
        // ten membership queries per set
        for _ in 0..10 {
            let level = rng.gen_range(0..=4i64);
            let total = level * degree + if rng.gen_bool(0.2) { rng.gen_range(1..degree) } else { 0 };
            let mut c = vec![0i64; d + 1];
            for _ in 0..total {
                c[rng.gen_range(0..=d)] += 1;
            }
            let y = lv(&c);
            let fast = t.semigroup_member(&y).unwrap();
            let slow = naive_member_homogenized(a.points(), degree, &y).unwrap();
            ensure!(fast == slow, "membership of {y:?} in S_A for {a:?}");
        }
    }
    let complexes = COMPLEXES.lock().unwrap().clone();
    for (n, faces) in &complexes {
        let cx = toric_reg::homology::FaceComplex::from_faces(*n, faces).map_err(|e| e.to_string())?;
        for p in [2u64, 32003] {
            let ours = reduced_homology(&cx, Field::Prime(p));
            let theirs = homology_recheck(faces, *n, p);
            let top = theirs.len().max(ours.nonzero_degrees().last().map_or(0, |&i| (i + 2) as usize));
            for k in 0..top {
                let b = theirs.get(k).copied().unwrap_or(0);
                ensure!(ours.betti(k as i64 - 1) == b, "β̃_{} over F_{p} of {faces:?}", k as i64 - 1);
            }
        }
        let q = reduced_homology(&cx, Field::Rationals);
        let f2 = reduced_homology(&cx, Field::F2);
        ensure!(q.nonzero_degrees() == f2.nonzero_degrees(), "ℚ/𝔽₂ mismatch on {faces:?}");
    }
    ensure!(!complexes.is_empty(), "criteria 1–6 recorded no complexes");
    Ok(format!(
        "100 sets, s ≤ 4; 1000 membership queries; {} distinct complexes over F_2 and F_32003",
        complexes.len()
    ))
}

fn c8() -> Outcome {
    let mut cells = 0;
    for d in 1..=4usize {
        for degree in 2..=8i64 {
            for e in (1..=degree).filter(|e| degree % e == 0) {
                let th = step_threshold(d, degree, e);
                let di = d as i64;
                ensure!(
                    th == ((di * degree - di - e + 1) as f64 / degree as f64).ceil().max(0.0) as i64,
                    "threshold formula d={d} D={degree} e={e}"
                );
                let step = |s: i64| -> bool {
                    let lo = delta(d, degree, s, e);
                    let mut sum = BTreeSet::new();
                    for p in &lo {
                        sum.insert(p.clone());
                        for j in 0..d {
                            let mut c = p.coords().to_vec();
                            c[j] += degree;
                            sum.insert(lv(&c));
                        }
                    }
                    sum == delta(d, degree, s + 1, e)
                };
                for s in th..=th + 1 {
                    ensure!(step(s), "step fails at s={s} ≥ threshold, d={d} D={degree} e={e}");
                    ensure!(step_property_holds(d, degree, e, s as u32), "library step at s={s}");
                }
                if th >= 1 {
                    ensure!(!step(th - 1), "step holds below threshold, d={d} D={degree} e={e}");
                    ensure!(!step_property_holds(d, degree, e, (th - 1) as u32), "library step below");
                }
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} (d, D, e) cells: holds at the threshold and one above, fails one below"))
}

fn binom(n: i64, k: i64) -> BigInt {
    // Pascal's triangle row n
    let mut row = vec![BigInt::from(1)];
    for _ in 0..n {
        let mut next = vec![BigInt::from(1)];
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::from(1));
        row = next;
    }
    row.get(k as usize).cloned().unwrap_or_default()
}

fn c9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut cells = 0;
    let mut samples = 0;
    for d in 3..=6usize {
        for degree in 3..=10i64 {
            let di = d as i64;
            // (d−1)(D−2) ≤ D^{d−1} − C(D+d−1, d−1) + d
            let lhs = BigInt::from((di - 1) * (degree - 2));
            let rhs = BigInt::from(degree).pow((d - 1) as u32) - binom(degree + di - 1, di - 1) + di;
            ensure!(lhs <= rhs, "e = D inequality at d={d} D={degree}");
            for e in (1..=degree).filter(|e| degree % e == 0) {
                let rep = eg_inequality_suite(d, degree, e).map_err(|x| x.to_string())?;
                ensure!(rep.all_hold(), "suite {rep:?}");
                cells += 1;
                if e == degree {
                    continue;
                }
                let q = degree / e;
                // both sides times e(D+d)
                let big = binom(degree + di, di);
                let l = BigInt::from(degree * (degree + di) * ((di - 1) * (degree - 2) + q - 2));
                let r = BigInt::from(degree).pow(d as u32) * (degree + di) - BigInt::from(degree + di * e) * &big
                    + BigInt::from(di * e * (degree + di));
                ensure!(l <= r, "e < D inequality at d={d} D={degree} e={e}");
                let cap_num = BigInt::from(degree + di * e) * &big;
                let cap_den = BigInt::from(e * (degree + di));
                for _ in 0..50 {
                    let a = random_subset(d, degree, e, &mut rng).map_err(|x| x.to_string())?;
                    ensure!(
                        BigInt::from(a.len()) * &cap_den <= cap_num,
                        "|A| = {} over the bound at d={d} D={degree} e={e}",
                        a.len()
                    );
                    samples += 1;
                }
                // the whole of ℕ_e^d ∩ {|y| ≤ D} as well
                let full = delta(d, degree, 1, e).len();
                ensure!(BigInt::from(full) * &cap_den <= cap_num, "full slice over the bound");
            }
        }
    }
    Ok(format!("{cells} cells, {samples} random sets against the size bound"))
}

fn c10() -> Outcome {
    let list = INSTANCES.lock().unwrap().clone();
    ensure!(!list.is_empty(), "no instances recorded");
    for (name, a, reg) in &list {
        let r = run(a, 2).map_err(|e| format!("{name}: {e}"))?;
        ensure!(r.reg.reg == *reg, "{name}: reg moved from {reg} to {}", r.reg.reg);
        ensure!(r.reg.witness_value(a.degree()) == *reg, "{name}: witness value");
    }
    Ok(format!("{} instances unchanged with the cutoff raised by 2D", list.len()))
}

fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_toric-reg"))
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(bin()).args(args).output().expect("spawn");
    (out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn compare_golden(name: &str, got: &str) -> Result<(), String> {
    let path = golden(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, got).map_err(|e| e.to_string())?;
    }
    let want = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    ensure!(want == got, "{name} differs from the golden file");
    Ok(())
}

fn c11() -> Outcome {
    let g = |n: &str| golden(n).to_string_lossy().into_owned();
    let (code, out) = cli(&["analyze", &g("ex1sing.json"), "--no-timings"]);
    ensure!(code == 0, "analyze exit {code}");
    compare_golden("ex1sing.analyze.json", &out)?;
    let (code, out) = cli(&["corpus", &g("corpus")]);
    ensure!(code == 0, "corpus exit {code}");
    compare_golden("corpus.csv", &out)?;
    for (inst, s, filled, hollow) in [("ex1sing", 1, 7, 2), ("ex1sing", 2, 24, 1), ("ex1sing2", 1, 14, 2), ("ex1sing2", 2, 48, 1)] {
        let (code, out) = cli(&["plot", &g(&format!("{inst}.json")), "--s", &s.to_string()]);
        ensure!(code == 0, "plot exit {code}");
        ensure!(
            out.matches("<circle").count() == filled && out.matches("<rect").count() == hollow,
            "{inst} s={s}: marker counts"
        );
        compare_golden(&format!("{inst}.s{s}.svg"), &out)?;
    }
    let cases = [
        ("malformed.json", vec![], 1),
        ("duplicate.json", vec![], 1),
        ("other.json", vec![], 2),
        ("ex1sing.json", vec!["--max-slice", "10"], 3),
        ("missing.json", vec![], 1),
    ];
    for (file, extra, want) in cases {
        let p = g(file);
        let mut args = vec!["analyze", p.as_str()];
        args.extend(extra.iter().copied());
        let (code, _) = cli(&args);
        ensure!(code == want, "{file}: exit {code}, expected {want}");
    }
    Ok("analyze / corpus / 4 SVG goldens match; exit codes 1, 1, 2, 3, 1".into())
}

/// Prints the line for one criterion; true on failure.
fn report(n: u32, res: std::thread::Result<Outcome>, secs: f64) -> bool {
    match res {
        Ok(Ok(msg)) => {
            println!("PASS criterion {n:>2} ({secs:.1}s): {msg}");
            false
        }
        Ok(Err(msg)) => {
            println!("FAIL criterion {n:>2} ({secs:.1}s): {msg}");
            true
        }
        Err(_) => {
            println!("FAIL criterion {n:>2} ({secs:.1}s): panicked");
            true
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (std::thread::Result<T>, f64) {
    let t = Instant::now();
    let r = catch_unwind(AssertUnwindSafe(f));
    (r, t.elapsed().as_secs_f64())
}

fn main() {
    let mut unexpected = 0;
    let mut failed = 0;
    let (r, secs) = timed(c1);
    if report(1, r, secs) {
        unexpected += 1;
    }
    let (r, secs) = timed(c2);
    match r {
        Ok(Ok(msg)) => println!("PASS criterion  2 ({secs:.1}s): {msg}"),
        Ok(Err((true, msg))) => {
            println!("FAIL criterion  2 ({secs:.1}s): {msg} [documented deviation]");
            failed += 1;
        }
        Ok(Err((false, msg))) => {
            println!("FAIL criterion  2 ({secs:.1}s): {msg}");
            unexpected += 1;
        }
        Err(_) => {
            println!("FAIL criterion  2 ({secs:.1}s): panicked");
            unexpected += 1;
        }
    }
    let rest: [(u32, fn() -> Outcome); 9] =
        [(3, c3), (4, c4), (5, c5), (6, c6), (7, c7), (8, c8), (9, c9), (10, c10), (11, c11)];
    for (n, f) in rest {
        let (r, secs) = timed(f);
        if report(n, r, secs) {
            unexpected += 1;
        }
    }
    failed += unexpected;
    println!("{} of 11 criteria pass; {unexpected} unexpected failure(s)", 11 - failed);
    if unexpected > 0 {
        std::process::exit(1);
    }
}

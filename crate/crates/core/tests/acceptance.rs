//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tailgraph::analysis::{analyze, AnalysisOptions, AnalysisReport, Mode, Route};
use tailgraph::generators::{cycle, multiple_star, star, weighted_star, wheel};
use tailgraph::graph_file::GraphSpec;
use tailgraph::jacobi::jost::jost_function_unscaled;
use tailgraph::jacobi::{
    double_star_jacobi, jost_polynomial, perturbation_determinant_direct, FiniteRankJacobi,
    TwoSidedJacobi,
};
use tailgraph::oracle::{compare, interlaces, BethePair, OracleOptions, ScaledTwoSided, Truncation};
use tailgraph::reduce::{bethe_pair, reduce_single_tail, verify_canonical};
use tailgraph::scalar::{frac, int};
use tailgraph::spectra::eigen::eig_symmetric;
use tailgraph::spectra::roots::{count_distinct_roots, squarefree_part};
use tailgraph::spectra::{
    descartes_bound, discrete_spectrum, positive_root_count, real_roots_unit_interval,
    spectral_measure, two_sided_spectrum, wronskian_roots, Multiplicity, Provenance, Spectrum,
};
use tailgraph::{attach_tails, truncate, Polynomial, Rational, Scalar, TailAttachment, WeightedGraph};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn close_sets(got: &[f64], want: &[f64], tol: f64) -> Result<f64, String> {
    let mut g = got.to_vec();
    let mut w = want.to_vec();
    g.sort_by(f64::total_cmp);
    w.sort_by(f64::total_cmp);
    ensure(g.len() == w.len(), || format!("{g:?} vs {w:?}"))?;
    let err = g.iter().zip(&w).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max);
    ensure(err <= tol, || format!("error {err:.3e} > {tol:.0e}: {g:?} vs {w:?}"))?;
    Ok(err)
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(lo) * f(mid) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Roots of `f` in the open interval found by scanning a grid and bisecting.
fn scan_roots(f: impl Fn(f64) -> f64, lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    let h = (hi - lo) / steps as f64;
    (0..steps)
        .filter_map(|i| {
            let (a, b) = (lo + i as f64 * h, lo + (i + 1) as f64 * h);
            (f(a) * f(b) < 0.0).then(|| bisect(&f, a, b))
        })
        .collect()
}

fn run(spec: &GraphSpec, oracle: Option<usize>) -> Result<AnalysisReport, String> {
    let opts = AnalysisOptions {
        mode: Mode::Exact,
        oracle,
        ..Default::default()
    };
    analyze(spec, &opts).map_err(|e| e.to_string())
}

fn spectrum(r: &AnalysisReport) -> Result<&Spectrum, String> {
    r.spectrum.as_ref().ok_or_else(|| "no spectrum".to_string())
}

fn oracle_ok(r: &AnalysisReport) -> Result<f64, String> {
    let o = r.oracle.as_ref().ok_or("oracle did not run")?;
    ensure(o.pass, || format!("oracle failed: {o:?}"))?;
    Ok(o.matches.iter().filter_map(|m| m.error).fold(0.0, f64::max))
}

fn tailed(g: &WeightedGraph, v: usize) -> GraphSpec {
    GraphSpec::from_parts(g, &[TailAttachment::free(v)])
}

fn jost_values(s: &Spectrum) -> Vec<f64> {
    s.discrete
        .iter()
        .filter(|e| e.provenance.contains(&Provenance::JostRoot))
        .map(|e| e.value)
        .collect()
}

fn block_values(s: &Spectrum) -> Vec<f64> {
    s.discrete
        .iter()
        .filter(|e| e.provenance.contains(&Provenance::FiniteBlock))
        .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity))
        .collect()
}

fn c1_stars() -> Outcome {
    let mut worst = (0.0, 0.0, Duration::ZERO);
    for n in 3..=10 {
        let start = Instant::now();
        let r = run(&tailed(&star(n).unwrap(), n + 1), Some(400))?;
        let elapsed = start.elapsed();
        ensure(elapsed < Duration::from_secs(1), || format!("n = {n} took {elapsed:?}"))?;
        let s = spectrum(&r)?;
        let top = ((n - 1) as f64).sqrt() + 1.0 / ((n - 1) as f64).sqrt();
        let err = close_sets(&s.values().into_iter().filter(|x| x.abs() > 1.0).collect::<Vec<_>>(), &[-top, top], 1e-12)
            .map_err(|e| format!("n = {n}: {e}"))?;
        let zero = s.discrete.iter().find(|e| e.value == 0.0).ok_or("no zero eigenvalue")?;
        ensure(zero.multiplicity == n - 1, || format!("n = {n}: zero has multiplicity {}", zero.multiplicity))?;
        ensure(s.total_multiplicity() == n + 1, || format!("n = {n}: extra eigenvalues {:?}", s.values()))?;
        let oerr = oracle_ok(&r)?;
        worst = (f64::max(worst.0, err), f64::max(worst.1, oerr), worst.2.max(elapsed));
    }
    Ok(format!(
        "n=3..10, closed form err {:.1e}, oracle N=400 err {:.1e}, slowest {:?}",
        worst.0, worst.1, worst.2
    ))
}

fn c2_weighted_star() -> Outcome {
    let mut notes = Vec::new();
    for (label, w1, w2) in [("1.2", frac(18, 25), frac(24, 25)), ("sqrt2", int(1), int(1)), ("1.5", frac(9, 10), frac(6, 5))] {
        let norm_sq = (&w1 * &w1 + &w2 * &w2).to_f64();
        let r = run(&tailed(&weighted_star(&[w1, w2]).unwrap(), 3), None)?;
        let jost = jost_values(spectrum(&r)?);
        let expected = norm_sq > 2.0;
        ensure(jost.is_empty() != expected, || format!("|w| = {label}: Jost eigenvalues {jost:?}"))?;
        if expected {
            let x = (norm_sq - 1.0).sqrt() + 1.0 / (norm_sq - 1.0).sqrt();
            close_sets(&jost, &[-x, x], 1e-12)?;
        }
        notes.push(format!("|w|={label}:{}", jost.len()));
    }
    Ok(notes.join(" "))
}

fn c3_multiple_star() -> Outcome {
    let mut notes = Vec::new();
    for (n, p) in [(3usize, 2usize), (4, 3)] {
        let r = run(&tailed(&multiple_star(n, p).unwrap(), n * p + 1), Some(300))?;
        let s = spectrum(&r)?;
        for j in 1..=p {
            let x = 2.0 * (std::f64::consts::PI * j as f64 / (p + 1) as f64).cos();
            let e = s
                .discrete
                .iter()
                .find(|e| (e.value - x).abs() < 1e-12)
                .ok_or_else(|| format!("({n},{p}): missing {x}"))?;
            ensure(e.multiplicity == n - 1, || format!("({n},{p}): {x} has multiplicity {}", e.multiplicity))?;
        }
        let mut c = vec![0i64; p + 2];
        c[0] = 1;
        c[1] = -(n as i64);
        c[p + 1] = n as i64 - 1;
        let q = Polynomial::<Rational>::from_i64(&c);
        let nu = descartes_bound(&q).map_err(|e| e.to_string())?;
        let mu = positive_root_count(&q).map_err(|e| e.to_string())?;
        ensure(nu == 2 && mu == 2, || format!("({n},{p}): Descartes {nu}, positive roots {mu}"))?;
        let f = |x: f64| (n as f64 - 1.0) * x.powi(p as i32 + 1) - n as f64 * x + 1.0;
        let inner = scan_roots(f, 0.0, 1.0 - 1e-9, 10_000);
        ensure(inner.len() == 1, || format!("({n},{p}): (0,1) roots {inner:?}"))?;
        let x = inner[0].sqrt() + 1.0 / inner[0].sqrt();
        close_sets(&jost_values(s), &[-x, x], 1e-10)?;
        ensure(s.total_multiplicity() == (n - 1) * p + 2, || format!("({n},{p}): {:?}", s.values()))?;
        oracle_ok(&r)?;
        notes.push(format!("({n},{p}) nu=2 x1={:.6}", inner[0]));
    }
    Ok(notes.join(" "))
}

fn c4_kites() -> Outcome {
    let mut notes = Vec::new();
    for m in 3..=7 {
        let r = run(&tailed(&cycle(m).unwrap(), m), Some(300))?;
        let s = spectrum(&r)?;
        let cosines: Vec<f64> = (1..=(m - 1) / 2)
            .map(|j| 2.0 * (2.0 * std::f64::consts::PI * j as f64 / m as f64).cos())
            .collect();
        close_sets(&block_values(s), &cosines, 1e-10).map_err(|e| format!("m = {m} block: {e}"))?;
        let f = |x: f64| x.powi(m as i32) + 2.0 * x * x - 1.0;
        let roots = scan_roots(f, -1.0 + 1e-12, 1.0 - 1e-12, 20_000);
        let zhuk: Vec<f64> = roots.iter().map(|z| z + 1.0 / z).collect();
        close_sets(&jost_values(s), &zhuk, 1e-10).map_err(|e| format!("m = {m} Jost: {e}"))?;
        let mut all = cosines.clone();
        all.extend(&zhuk);
        close_sets(&s.values(), &all, 1e-10)?;
        oracle_ok(&r)?;
        if m == 3 {
            ensure(roots.len() == 1 && (roots[0] - (5f64.sqrt() - 1.0) / 2.0).abs() < 1e-12, || {
                format!("m = 3: interior roots {roots:?}")
            })?;
            ensure(f(-1.0) == 0.0, || "m = 3: -1 is not a root".into())?;
        }
        notes.push(format!("m={m}:{}", roots.len()));
    }
    Ok(format!("{} (m=3: single interior root, boundary root -1 excluded)", notes.join(" ")))
}

fn c5_wheels() -> Outcome {
    let mut notes = Vec::new();
    for n in 4..=6 {
        let r = run(&tailed(&wheel(n).unwrap(), n + 1), None)?;
        let s = spectrum(&r)?;
        let nf = n as f64;
        let roots: Vec<f64> = [(nf.sqrt() - 1.0) / (nf - 1.0), -(nf.sqrt() + 1.0) / (nf - 1.0)]
            .into_iter()
            .filter(|z| z.abs() < 1.0)
            .collect();
        let expect = if n == 4 { 1 } else { 2 };
        ensure(roots.len() == expect, || format!("n = {n}: roots {roots:?}"))?;
        let zhuk: Vec<f64> = roots.iter().map(|z| z + 1.0 / z).collect();
        close_sets(&jost_values(s), &zhuk, 1e-10).map_err(|e| format!("n = {n}: {e}"))?;
        let cosines: Vec<f64> = (1..n)
            .map(|j| 2.0 * (2.0 * std::f64::consts::PI * j as f64 / nf).cos())
            .collect();
        close_sets(&block_values(s), &cosines, 1e-10).map_err(|e| format!("n = {n} block: {e}"))?;
        notes.push(format!("n={n}:{}", zhuk.len()));
    }
    Ok(notes.join(" "))
}

fn random_jacobi(rng: &mut ChaCha8Rng, max_rank: usize) -> FiniteRankJacobi<Rational> {
    let q = rng.gen_range(1..=max_rank);
    let b = (0..q).map(|_| frac(rng.gen_range(-6..=6), rng.gen_range(1..=5))).collect();
    let a = (0..q).map(|_| frac(rng.gen_range(1..=12), rng.gen_range(1..=5))).collect();
    FiniteRankJacobi::new(b, a).unwrap()
}

fn c6_jost_kernel() -> Outcome {
    let mut cases: Vec<FiniteRankJacobi<Rational>> = Vec::new();
    for (b, a) in [(int(0), int(3)), (frac(1, 2), int(2)), (int(-2), frac(1, 4))] {
        cases.push(FiniteRankJacobi::new(vec![b], vec![a]).unwrap());
    }
    cases.push(FiniteRankJacobi::new(vec![int(1), int(-2)], vec![int(3), frac(1, 2)]).unwrap());
    for q in 2..=6 {
        let mut b = vec![int(0); q];
        b[0] = int(2);
        let mut a = vec![int(1); q];
        a[q - 1] = int(3);
        cases.push(FiniteRankJacobi::new(b, a.clone()).unwrap());
        let mut b = vec![int(0); q];
        b[q - 1] = frac(3, 2);
        let mut a1 = vec![int(1); q];
        a1[0] = frac(1, 3);
        cases.push(FiniteRankJacobi::new(b, a1).unwrap());
        a[0] = int(5);
        cases.push(FiniteRankJacobi::new(vec![], a).unwrap());
    }
    let structured = cases.len();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    cases.extend((0..100).map(|_| random_jacobi(&mut rng, 4)));
    let mut worst: f64 = 0.0;
    for j in &cases {
        let direct = perturbation_determinant_direct(j).map_err(|e| e.to_string())?;
        let jost = jost_polynomial(j);
        ensure(direct == jost.poly, || format!("determinant differs for {j:?}"))?;
        let jf = j.to_f64();
        let prod = jf.product_a_sq().sqrt();
        let unscaled = jost_function_unscaled(&jf);
        let scaled = jost_polynomial(&jf);
        for z in [-0.8, -0.3, 0.2, 0.7] {
            let u = unscaled.eval_f64(z);
            if u.abs() < 1e-6 {
                continue;
            }
            let ratio = scaled.poly.eval_f64(z) / u;
            worst = worst.max((ratio - prod).abs() / prod);
        }
    }
    ensure(worst <= 1e-12, || format!("rescale constant off by {worst:.3e}"))?;
    Ok(format!(
        "{structured} structured + 100 random exact matches, rescale rel err {worst:.1e}"
    ))
}

fn c7_two_sided() -> Outcome {
    let single = |a0_sq: Rational| {
        let j = TwoSidedJacobi::with_off_diagonals(&[(0, a0_sq)]).unwrap();
        wronskian_roots(&j).map(|w| w.eigenvalues).map_err(|e| e.to_string())
    };
    close_sets(&single(int(4))?, &[-2.5, 2.5], 1e-12)?;
    ensure(single(frac(1, 4))?.is_empty(), || "a_0 = 1/2 has eigenvalues".into())?;
    ensure(single(int(1))?.is_empty(), || "a_0 = 1 has eigenvalues".into())?;
    let mut notes = vec!["a0=2: +-5/2, a0=1/2: none".to_string()];
    for (p, q, count) in [(2i64, 2i64, 2usize), (4, 5, 4)] {
        let j = double_star_jacobi(&int(p), &int(q), &int(1)).unwrap();
        let ev = two_sided_spectrum(&j, &int(1), Multiplicity::Finite(2)).map_err(|e| e.to_string())?.values();
        ensure(ev.len() == count, || format!("({p},{q}): {ev:?}"))?;
        let (pf, qf) = (p as f64, q as f64);
        let s = ((pf - qf).powi(2) + 2.0 * (pf + qf) - 3.0).sqrt();
        let den = 2.0 * (pf - 1.0) * (qf - 1.0);
        let want: Vec<f64> = [(pf + qf - 1.0 - s) / den, (pf + qf - 1.0 + s) / den]
            .into_iter()
            .filter(|y| *y > 0.0 && *y < 1.0)
            .flat_map(|y| [y.sqrt() + 1.0 / y.sqrt(), -(y.sqrt() + 1.0 / y.sqrt())])
            .collect();
        let err = close_sets(&ev, &want, 1e-10)?;
        notes.push(format!("({p},{q}):{count} err {err:.1e}"));
    }
    Ok(notes.join(", "))
}

fn c8_sun() -> Outcome {
    let k2 = WeightedGraph::from_unit_edges(2, &[(1, 2)]).unwrap();
    let spec = GraphSpec::from_parts(&k2, &[TailAttachment::free(1).with_rays(2), TailAttachment::free(2).with_rays(2)]);
    let r = run(&spec, Some(300))?;
    ensure(r.route == Route::Sun, || format!("route {:?}", r.route))?;
    let e1 = close_sets(&spectrum(&r)?.values(), &[-(5f64.sqrt()), 5f64.sqrt()], 1e-10)?;
    oracle_ok(&r)?;
    let p3 = WeightedGraph::from_unit_edges(3, &[(1, 2), (2, 3)]).unwrap();
    let spec = GraphSpec::from_parts(&p3, &(1..=3).map(TailAttachment::free).collect::<Vec<_>>());
    let r = run(&spec, Some(300))?;
    ensure(r.route == Route::Sun, || format!("route {:?}", r.route))?;
    let x = 3.0 / 2f64.sqrt();
    let e2 = close_sets(&spectrum(&r)?.values(), &[-x, x], 1e-10)?;
    oracle_ok(&r)?;
    Ok(format!("K2,p=2: +-sqrt5 err {e1:.1e}; P3,p=1: +-3/sqrt2 err {e2:.1e}"))
}

fn c9_bethe() -> Outcome {
    let mut notes = Vec::new();
    for d in [2usize, 3] {
        let (j, scale) = bethe_pair(d).map_err(|e| e.to_string())?;
        ensure(j.a_sq(0) == frac(1, d as i64), || "a_0^2 is not 1/d".into())?;
        let wr = wronskian_roots(&j).map_err(|e| e.to_string())?;
        ensure(wr.roots.is_empty(), || format!("d = {d}: Wronskian zeros {:?}", wr.roots))?;
        let s = two_sided_spectrum(&j, &scale, Multiplicity::Infinite).map_err(|e| e.to_string())?;
        ensure(s.discrete.is_empty(), || format!("d = {d}: {:?}", s.values()))?;
        ensure(s.ac_bands[0].multiplicity == Multiplicity::Infinite, || "band multiplicity".into())?;
        let edge = 2.0 * (d as f64).sqrt();
        let t = ScaledTwoSided { jacobi: j.to_f64(), scale_sq: d as f64 };
        let report = compare(&s, &t, 300, OracleOptions::default());
        ensure(report.pass && report.spurious.is_empty() && report.unmatched.is_empty(), || {
            format!("d = {d}: {report:?}")
        })?;
        let depth = if d == 2 { 7 } else { 4 };
        let tree = BethePair { d };
        for k in [depth, depth + 1] {
            let ev = tree.truncated_eigenvalues(k);
            let out: Vec<f64> = ev.iter().copied().filter(|x| x.abs() > edge + 0.05).collect();
            ensure(out.is_empty(), || format!("d = {d}: explicit tree outliers {out:?}"))?;
        }
        notes.push(format!("d={d}: none (N=300, explicit depth {depth})"));
    }
    Ok(notes.join(", "))
}

fn c10_measure() -> Outcome {
    let mut worst: f64 = 0.0;
    let check = |j: &FiniteRankJacobi<Rational>, name: &str| -> Result<f64, String> {
        let m = spectral_measure(j).map_err(|e| e.to_string())?;
        let err = (m.total_mass() - 1.0).abs();
        ensure(err <= 1e-8, || format!("{name}: total mass {}", m.total_mass()))?;
        Ok(err)
    };
    worst = worst.max(check(&FiniteRankJacobi::free(), "free")?);
    for (name, g, v) in [("star", star(4).unwrap(), 5), ("wheel", wheel(5).unwrap(), 6)] {
        let (cf, _) = reduce_single_tail(&g.adjacency::<Rational>(), v, &int(1), &FiniteRankJacobi::free())
            .map_err(|e| e.to_string())?;
        worst = worst.max(check(&cf.jacobi, name)?);
    }
    let b1 = FiniteRankJacobi::new(vec![int(2)], vec![]).unwrap();
    worst = worst.max(check(&b1, "b1=2")?);
    let m = spectral_measure(&b1).map_err(|e| e.to_string())?;
    ensure(m.point_masses.len() == 1, || "b1=2: point masses".into())?;
    let err = (m.point_masses[0].mass - 0.75).abs();
    ensure(err <= 1e-10, || format!("b1=2 point mass {}", m.point_masses[0].mass))?;
    Ok(format!("total mass err {worst:.1e}, b1=2 mass 3/4 err {err:.1e}"))
}

fn grid_sign_changes(p: &Polynomial<f64>, points: usize) -> usize {
    let h = 2.0 / points as f64;
    let mut prev = p.eval(&(-1.0 + 0.5 * h));
    let mut changes = 0;
    for i in 1..points {
        let cur = p.eval(&(-1.0 + (i as f64 + 0.5) * h));
        if prev * cur < 0.0 {
            changes += 1;
        }
        if cur != 0.0 {
            prev = cur;
        }
    }
    changes
}

fn random_graph(rng: &mut ChaCha8Rng) -> (WeightedGraph, usize) {
    let n = rng.gen_range(2..=7);
    let mut g = WeightedGraph::new(n);
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.gen_bool(0.5) {
                g.add_edge(i, j, frac(rng.gen_range(1..=4), rng.gen_range(1..=2))).unwrap();
            }
        }
    }
    (g, rng.gen_range(1..=n))
}

fn c11_properties() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 0..200 {
        // half random coefficients, half products with known separated roots
        let p = if k % 2 == 0 {
            let deg = rng.gen_range(1..=8);
            let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-9..=9)).collect();
            c[deg] = rng.gen_range(1..=9);
            Polynomial::<Rational>::from_i64(&c)
        } else {
            let mut p = Polynomial::constant(frac(rng.gen_range(1..=5), rng.gen_range(1..=3)));
            let mut roots: Vec<i64> = (0..rng.gen_range(0..=5)).map(|_| rng.gen_range(-49..=49)).collect();
            roots.sort_unstable();
            roots.dedup();
            for r in roots {
                p = &p * &Polynomial::new(vec![frac(-r, 50), int(1)]);
            }
            for _ in 0..rng.gen_range(0..=2) {
                p = &p * &Polynomial::new(vec![int(rng.gen_range(1..=4)), int(0), int(1)]);
            }
            p
        };
        let mut sq = squarefree_part(&p);
        for end in [-1, 1] {
            if sq.eval(&int(end)) == int(0) {
                sq = sq.exact_div(&Polynomial::from_i64(&[-end, 1]));
            }
        }
        let sturm = count_distinct_roots(&sq, &int(-1), &int(1));
        let grid = grid_sign_changes(&sq.to_f64(), 1_000_000);
        ensure(sturm == grid, || format!("poly {k} {p}: Sturm {sturm}, grid {grid}"))?;
        if let Ok(roots) = real_roots_unit_interval(&sq) {
            ensure(roots.len() == sturm, || format!("poly {k}: isolation found {} of {sturm}", roots.len()))?;
        }
        let nu = descartes_bound(&p).map_err(|e| e.to_string())?;
        let mu = positive_root_count(&p).map_err(|e| e.to_string())?;
        ensure(mu <= nu && (nu - mu) % 2 == 0, || format!("poly {k}: Descartes {nu}, count {mu}"))?;
    }
    for k in 0..100 {
        let (g, v) = random_graph(&mut rng);
        let a = g.adjacency::<Rational>();
        let tail = FiniteRankJacobi::free();
        let (cf, trace) = reduce_single_tail(&a, v, &int(1), &tail).map_err(|e| e.to_string())?;
        let res = verify_canonical(&a, &int(1), &tail, &cf, &trace).map_err(|e| e.to_string())?;
        ensure(res.is_exact_zero(), || format!("graph {k}: residual {res:?}"))?;
        discrete_spectrum(&cf).map_err(|e| e.to_string())?;
        let t = attach_tails(g, vec![TailAttachment::free(v)]).map_err(|e| e.to_string())?;
        let depth = rng.gen_range(0..30);
        let outer = eig_symmetric(&truncate::<f64>(&t, depth + 1));
        let inner = eig_symmetric(&truncate::<f64>(&t, depth));
        ensure(interlaces(&outer, &inner, 1e-9), || format!("graph {k}: interlacing fails"))?;
    }
    Ok(format!(
        "200 polys (10^6 grid), Descartes parity, 100 exact residuals, interlacing in {:?}",
        start.elapsed()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("star family", c1_stars),
        ("weighted-star threshold", c2_weighted_star),
        ("multiple star", c3_multiple_star),
        ("kite", c4_kites),
        ("wheel", c5_wheels),
        ("Jost-kernel identities", c6_jost_kernel),
        ("two-sided kernel", c7_two_sided),
        ("sun graphs", c8_sun),
        ("Bethe trees", c9_bethe),
        ("measure normalization", c10_measure),
        ("property suites", c11_properties),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:2} {name}: PASS [{:.2?}] ({detail})", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {:2} {name}: FAIL [{:.2?}] ({why})", i + 1, t.elapsed());
            }
        }
    }
    println!("{} of {} criteria passed in {:?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

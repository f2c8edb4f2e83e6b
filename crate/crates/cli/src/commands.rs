use std::fs;
use std::io::Write;
use std::path::Path;

use groth_core::{profile_of, rational_to_f64, ExactMatrix, ExactParams, Partition, Rational, Regime};
use groth_limitshape::{
    boundary_z_grid, cusp_point, frozen_boundary as boundary_curve, height_surface, uniform_taus, AsymptoticParams, BoundaryPoint,
};
use groth_measures::{schur_weight, ExactModel, FloatModel};
use groth_pmap::{cluster_from_minors, determinantality_witness, nanson4, nanson_n, witness_scale, principal_minors};
use groth_sampler::{grothendieck_from_process, sample_many_processes, SamplerParams};
use groth_schur2d::{correlation_function, one_point_closed_form, two_point_closed_form, ContourKernel, EmKernel, KernelQuery};
use serde_json::{json, Value};

use crate::svg::{Plot, Series};
use crate::{
    parse_rational_flag, BoundaryArgs, CliError, CorrelationArgs, Format, KernelArgs, KernelMethod, LimitShapeArgs, NansonArgs,
    NormalizeArgs, SampleArgs, TripleArgs, WeightArgs,
};

fn exact_json(v: &Rational) -> Value {
    json!({ "exact": v.to_string(), "decimal": rational_to_f64(v) })
}

fn in_regime(p: &ExactParams) -> Result<(), CliError> {
    if p.regime() == Regime::Outside {
        return Err(CliError::Regime("parameters give a signed measure: need x, y ≥ 0 and β ≤ min(1/x, y)".into()));
    }
    Ok(())
}

fn model(p: &ExactParams) -> ExactModel {
    ExactModel::new(p.clone())
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir)?;
    }
    fs::write(path, contents)?;
    Ok(())
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn join(parts: &[u64]) -> String {
    parts.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

pub fn weight(a: &WeightArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let p = a.model.exact()?;
    in_regime(&p)?;
    let lambda = Partition::with_cap(a.lambda.clone(), p.n())?;
    let value = if a.schur { schur_weight(&lambda, p.xs(), p.ys()) } else { model(&p).weight(&lambda)? };
    let measure = if a.schur { "schur" } else { "grothendieck" };
    match a.format {
        Format::Json => {
            let mut v = exact_json(&value);
            v["lambda"] = json!(lambda.padded(p.n()));
            v["measure"] = json!(measure);
            writeln!(out, "{v}")?;
        }
        Format::Csv => {
            let row = vec![join(&lambda.padded(p.n())), measure.to_string(), value.to_string(), rational_to_f64(&value).to_string()];
            write!(out, "{}", csv_string(&["lambda", "measure", "exact", "decimal"], [row])?)?;
        }
    }
    Ok(())
}

pub fn normalize_check(a: &NormalizeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let p = a.model.exact()?;
    in_regime(&p)?;
    let m = model(&p);
    let det = m.ensemble().normalization()?;
    // the product formula carries the Vandermonde factors, so it only applies to distinct parameters
    let distinct = |v: &[Rational]| (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i] != v[j]));
    let closed = (distinct(p.xs()) && distinct(p.ys())).then(|| m.cauchy_normalization());
    let check = m.cauchy_check(a.tol, a.start, a.max_part)?;
    let deficit = 1.0 - rational_to_f64(&check.sum);
    let v = json!({
        "det_normalization": exact_json(&det),
        "product_formula": closed.as_ref().map(exact_json),
        "equal": closed.as_ref().map(|c| *c == det),
        "max_part": check.max_part,
        "total_mass": rational_to_f64(&check.sum),
        "deficit": deficit,
        "last_increment": rational_to_f64(&check.last_increment),
    });
    writeln!(out, "{v}")?;
    if closed.is_some_and(|c| c != det) {
        return Err(CliError::Numeric("Gram determinant differs from the product formula".into()));
    }
    if deficit.abs() >= a.tol {
        return Err(CliError::Numeric(format!("total mass misses 1 by {deficit:e} at λ_1 ≤ {}", check.max_part)));
    }
    Ok(())
}

pub fn correlations(a: &CorrelationArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let p = a.model.exact()?;
    in_regime(&p)?;
    let m = model(&p);
    let k = EmKernel::new(m.ensemble())?;
    let rho = correlation_function(&k, &a.points)?;
    let mut v = exact_json(&rho);
    v["points"] = json!(a.points);
    let closed = match a.points.as_slice() {
        &[i] if p.n() == 2 && p.is_homogeneous() && i <= 3 => Some(one_point_closed_form(&m, i)?),
        &[i, j] if p.n() == 2 && p.is_homogeneous() => Some(two_point_closed_form(&m, i.max(j), i.min(j))?),
        _ => None,
    };
    if let Some(c) = closed {
        v["closed_form"] = exact_json(&c);
        v["agrees"] = json!(c == rho);
    }
    writeln!(out, "{v}")?;
    Ok(())
}

pub fn kernel(a: &KernelArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let p = a.model.exact()?;
    in_regime(&p)?;
    let n = p.n();
    let (t, s) = (a.t.unwrap_or(n), a.s.unwrap_or(n));
    for (flag, level) in [("t", t), ("s", s)] {
        if level == 0 || level > n {
            return Err(CliError::Usage(format!("--{flag}: level {level} outside 1..={n}")));
        }
    }
    let mut rows = Vec::new();
    match a.method {
        KernelMethod::Em => {
            let k = EmKernel::new(model(&p).ensemble())?;
            for pa in 0..=a.max_point {
                for pb in 0..=a.max_point {
                    rows.push((pa, pb, rational_to_f64(&k.eval(pa, t, pb, s)), 0.0));
                }
            }
        }
        KernelMethod::Contour => {
            let fm = FloatModel::new(p.map(rational_to_f64));
            let k = ContourKernel::new(&fm);
            for pa in 0..=a.max_point {
                for pb in 0..=a.max_point {
                    let z = k.eval(KernelQuery::new(pa, t, pb, s), a.nodes)?;
                    rows.push((pa, pb, z.re, z.im));
                }
            }
        }
    }
    match a.format {
        Format::Json => {
            for (pa, pb, re, im) in rows {
                writeln!(out, "{}", json!({ "a": pa, "t": t, "b": pb, "s": s, "re": re, "im": im }))?;
            }
        }
        Format::Csv => {
            let body = rows.into_iter().map(|(pa, pb, re, im)| {
                vec![pa.to_string(), t.to_string(), pb.to_string(), s.to_string(), re.to_string(), im.to_string()]
            });
            write!(out, "{}", csv_string(&["a", "t", "b", "s", "re", "im"], body)?)?;
        }
    }
    Ok(())
}

fn read_matrix(path: &Path) -> Result<ExactMatrix, CliError> {
    let text = fs::read_to_string(path)?;
    let mut rows = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let row = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| parse_rational_flag("matrix", s))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Usage(format!("--matrix: {} is not a square matrix", path.display())));
    }
    Ok(ExactMatrix::from_rows(rows))
}

pub fn nanson(a: &NansonArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if let Some(path) = &a.matrix {
        let m = read_matrix(path)?;
        let order = a.order.unwrap_or(m.rows());
        if order < 4 || order > m.rows() {
            return Err(CliError::Usage(format!("--order: need 4 ≤ order ≤ {}, got {order}", m.rows())));
        }
        let idx: Vec<usize> = (0..order).collect();
        let t = cluster_from_minors(&principal_minors(&m.principal(&idx))?);
        let v = if order == 4 {
            let mut v = exact_json(&nanson4(&t)?);
            v["order"] = json!(4);
            v
        } else {
            let r = nanson_n(&t, order)?;
            json!({
                "order": order,
                "re": r.value.re,
                "im": r.value.im,
                "log10_abs": r.log10_abs,
                "relative": r.relative,
                "factors": r.factors.len(),
            })
        };
        writeln!(out, "{v}")?;
        return Ok(());
    }
    for (flag, v) in [("x", &a.x), ("y", &a.y), ("beta", &a.beta)] {
        if v.is_empty() {
            return Err(CliError::Usage(format!("--{flag} is required unless --matrix is given")));
        }
    }
    let ma = crate::ModelArgs { n: a.n, x: a.x.clone(), y: a.y.clone(), beta: a.beta.clone() };
    let p = ma.exact()?;
    in_regime(&p)?;
    let m = model(&p);
    let raw = determinantality_witness(&m, &a.points)?;
    let mut v = json!({ "points": a.points, "raw": exact_json(&raw) });
    if p.is_homogeneous() && p.n() >= 2 {
        if let Some(scale) = witness_scale(p.beta(1)) {
            v["scaled"] = exact_json(&(raw * scale));
        }
    }
    writeln!(out, "{v}")?;
    Ok(())
}

fn read_shape_csv(path: &Path) -> Result<Vec<(f64, f64)>, CliError> {
    let mut rdr = csv::Reader::from_path(path)?;
    let mut pts = Vec::new();
    for rec in rdr.deserialize::<(f64, f64, f64, f64)>() {
        let (_, _, u, w) = rec?;
        pts.push((u, w));
    }
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(pts)
}

fn profile_series(lambda: &Partition, n: usize, label: &str) -> Result<Series, CliError> {
    let prof = profile_of(lambda, n)?;
    let nf = n as f64;
    let mut pts = vec![(-2.0 * nf, 2.0 * nf)];
    pts.extend(prof.breakpoints().iter().map(|&(u, v)| (u as f64, v as f64)));
    pts.push((2.0 * nf, 2.0 * nf));
    Ok(Series::line(label, "crimson", pts.into_iter().map(|(u, v)| (u / nf, v / nf)).collect()))
}

pub fn sample(a: &SampleArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let p = a.model.exact()?;
    let sp = SamplerParams::from_model(&FloatModel::new(p.map(rational_to_f64)))?;
    let procs = sample_many_processes(&sp, a.seed, a.count);
    let lambdas: Vec<Partition> = procs.iter().map(|mus| grothendieck_from_process(mus)).collect();
    let n = p.n();
    let text = match a.format {
        Format::Json => {
            let mut s = String::new();
            for (k, (lambda, mus)) in lambdas.iter().zip(&procs).enumerate() {
                let mut v = json!({ "seed": a.seed, "stream": k, "n": n, "lambda": lambda.padded(n), "size": lambda.size() });
                if a.process {
                    v["process"] = json!(mus.iter().map(|mu| mu.padded(n)).collect::<Vec<_>>());
                }
                s.push_str(&v.to_string());
                s.push('\n');
            }
            s
        }
        Format::Csv => csv_string(
            &["seed", "stream", "size", "lambda"],
            lambdas.iter().enumerate().map(|(k, l)| vec![a.seed.to_string(), k.to_string(), l.size().to_string(), join(&l.padded(n))]),
        )?,
    };
    match &a.out {
        Some(path) => write_file(path, &text)?,
        None => write!(out, "{text}")?,
    }
    if let (Some(path), Some(first)) = (&a.svg, lambdas.first()) {
        let mut plot = Plot::new(&format!("sample, N = {n}, seed {}", a.seed), "u / N", "v / N");
        plot.equal_aspect = true;
        plot = plot.with(Series::line("|u|", "gray", vec![(-2.0, 2.0), (0.0, 0.0), (2.0, 2.0)]));
        if let Some(shape) = &a.shape_csv {
            plot = plot.with(Series::line("limit shape", "steelblue", read_shape_csv(shape)?));
        }
        plot = plot.with(profile_series(first, n, "sample profile")?);
        write_file(path, &plot.render())?;
    }
    Ok(())
}

fn asymptotic(t: &TripleArgs) -> Result<AsymptoticParams, CliError> {
    let f = |flag: &str, s: &str| parse_rational_flag(flag, s).map(|q| rational_to_f64(&q));
    let (x, y, b) = (f("x", &t.x)?, f("y", &t.y)?, f("beta", &t.beta)?);
    let p = if t.allow_positive_beta && b > 0.0 { AsymptoticParams::with_positive_beta(x, y, b) } else { AsymptoticParams::new(x, y, b) };
    Ok(p?)
}

fn boundary_rows(pts: &[BoundaryPoint]) -> impl Iterator<Item = Vec<String>> + '_ {
    pts.iter().map(|b| vec![b.z.to_string(), b.xi.to_string(), b.tau.to_string()])
}

/// At most about 2000 boundary points in the `(ξ, τ)` plane, for plotting.
fn thinned(pts: &[BoundaryPoint]) -> Vec<(f64, f64)> {
    let step = pts.len().div_ceil(2000).max(1);
    pts.iter().step_by(step).map(|b| (b.xi, b.tau)).collect()
}

fn tag(p: &AsymptoticParams) -> &'static str {
    if p.is_conjectural() { " (CONJECTURAL)" } else { "" }
}

pub fn limit_shape(a: &LimitShapeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let p = asymptotic(&a.triple)?;
    if a.tau_steps < 2 {
        return Err(CliError::Usage("--tau-steps must be at least 2".into()));
    }
    let taus = uniform_taus(a.tau_steps);
    let mut sg = height_surface(&p, &taus, None, a.xi_step)?;
    sg.solve()?;
    fs::create_dir_all(&a.out_dir)?;
    let dir = &a.out_dir;
    let mut files = Vec::new();

    let shape_rows = taus.iter().zip(&sg.l).zip(&sg.w).map(|((t, l), (u, w))| vec![t.to_string(), l.to_string(), u.to_string(), w.to_string()]);
    let shape_path = dir.join("shape.csv");
    write_file(&shape_path, &csv_string(&["tau", "L", "u", "W"], shape_rows)?)?;
    files.push(shape_path);

    let boundary_path = dir.join("boundary.csv");
    write_file(&boundary_path, &csv_string(&["z", "xi", "tau"], boundary_rows(&sg.boundary))?)?;
    files.push(boundary_path);

    if a.height {
        let mut rows = Vec::new();
        for (t, row) in taus.iter().zip(&sg.h) {
            for (xi, h) in sg.xi_grid.iter().zip(row) {
                rows.push(vec![t.to_string(), xi.to_string(), h.to_string()]);
            }
        }
        let path = dir.join("height.csv");
        write_file(&path, &csv_string(&["tau", "xi", "h"], rows)?)?;
        files.push(path);
    }

    let params = format!("x = {}, y = {}, β = {}{}", a.triple.x, a.triple.y, a.triple.beta, tag(&p));
    let mut w_sorted = sg.w.clone();
    w_sorted.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut shape_plot = Plot::new(&format!("rotated shape, {params}"), "u", "W(u)");
    shape_plot.equal_aspect = true;
    let reach = w_sorted.iter().map(|p| p.0.abs()).fold(1.0, f64::max) + 0.5;
    shape_plot = shape_plot
        .with(Series::line("|u|", "gray", vec![(-reach, reach), (0.0, 0.0), (reach, reach)]))
        .with(Series::line("W", "steelblue", w_sorted));
    if let Some(n) = a.sample_n {
        let sp = SamplerParams::new(n, p.x, p.y, p.beta)?;
        let lambda = grothendieck_from_process(&sample_many_processes(&sp, a.seed, 1)[0]);
        shape_plot = shape_plot.with(profile_series(&lambda, n, &format!("sample N = {n}, seed {}", a.seed))?);
    }
    let path = dir.join("shape.svg");
    write_file(&path, &shape_plot.render())?;
    files.push(path);

    let boundary_plot = Plot::new(&format!("frozen boundary, {params}"), "ξ", "τ")
        .with(Series::dots("boundary", "black", thinned(&sg.boundary)))
        .with(Series::line("(L(τ), τ)", "crimson", sg.l.iter().zip(&taus).map(|(&l, &t)| (l, t)).collect()));
    let path = dir.join("boundary.svg");
    write_file(&path, &boundary_plot.render())?;
    files.push(path);

    let cusp = cusp_point(&p).ok().map(|c| json!({ "z": c.z, "xi": c.xi, "tau": c.tau }));
    let v = json!({
        "x": p.x, "y": p.y, "beta": p.beta,
        "conjectural": p.is_conjectural(),
        "tau_steps": a.tau_steps,
        "xi_step": a.xi_step,
        "xi_max": sg.xi_grid.last().copied().unwrap_or(0.0),
        "L0": sg.l[0],
        "cusp": cusp,
        "files": files.iter().map(|f| f.display().to_string()).collect::<Vec<_>>(),
    });
    writeln!(out, "{v}")?;
    Ok(())
}

pub fn frozen_boundary(a: &BoundaryArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let p = asymptotic(&a.triple)?;
    let pts = boundary_curve(&p, &boundary_z_grid(&p, a.points.max(16)));
    let text = match a.format {
        Format::Csv => csv_string(&["z", "xi", "tau"], boundary_rows(&pts))?,
        Format::Json => {
            let cusp = cusp_point(&p).ok().map(|c| json!({ "z": c.z, "xi": c.xi, "tau": c.tau }));
            let v = json!({
                "conjectural": p.is_conjectural(),
                "cusp": cusp,
                "boundary": pts.iter().map(|b| json!({ "z": b.z, "xi": b.xi, "tau": b.tau })).collect::<Vec<_>>(),
            });
            format!("{v}\n")
        }
    };
    match &a.out {
        Some(path) => write_file(path, &text)?,
        None => write!(out, "{text}")?,
    }
    if let Some(path) = &a.svg {
        let plot = Plot::new(&format!("frozen boundary{}", tag(&p)), "ξ", "τ")
            .with(Series::dots("boundary", "black", thinned(&pts)));
        write_file(path, &plot.render())?;
    }
    Ok(())
}

//! One function per subcommand. Each resolves its defaults, records them in
//! a [`RunConfig`], computes, and writes its tables and pictures.

use std::f64::consts::PI;
use std::fmt;
use std::fs::File;
use std::io::BufReader;
use std::path::Path;

use spectral_partitions::bounds::{
    bdpv_check, bourgain_break_even, bourgain_delta0, bourgain_limit_check, bourgain_sup, faber_krahn_check, hansen_nadirashvili_check,
    pleijel_constants, steinerberger_crossing, steinerberger_factor, summary_table, uncertainty_principle_audit, weyl_check, BoundReport,
    PACKING_CONSTANT,
};
use spectral_partitions::geometry::CellKind;
use spectral_partitions::magnetic::characterization::ab_pleijel_scan;
use spectral_partitions::magnetic::{ab_spectrum, verify_magnetic_characterization, PoleConfig};
use spectral_partitions::nodal::{boundary_set, critical_points, is_bipartite, nodal_domains, odd_count, theta_sweep_pair};
use spectral_partitions::partition::{
    bipartite_approximation, optimize_minimal_partition, read_checkpoint, tiling_upper_bound, write_checkpoint, Checkpoint,
    OptimizerConfig, Partition,
};
use spectral_partitions::rect::{courant_sharp_scan, MuMax, Rectangle};
use spectral_partitions::solver::{groundstate_energy, solve_domain, BoundaryTreatment, SolverConfig};
use spectral_partitions::{DomainSpec, GridMask, Point};

use crate::output::{num, RunConfig, Sink, Table};
use crate::svg::{render, Picture};
use crate::Common;

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Core(spectral_partitions::Error),
    Io(std::io::Error),
}

impl CliError {
    /// 1 config, 2 resolution, 3 convergence, 4 invariant. Output failures
    /// count as configuration problems.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 1,
            CliError::Core(e) => e.family().exit_code() as u8,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "invalid configuration: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "output: {e}"),
        }
    }
}

impl From<spectral_partitions::Error> for CliError {
    fn from(e: spectral_partitions::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn domain_or(c: &Common, default: &str) -> Result<DomainSpec> {
    let text = c.domain.as_deref().unwrap_or(default);
    let d: DomainSpec = text.parse()?;
    d.validate()?;
    Ok(d)
}

fn positive(name: &str, x: f64) -> Result<f64> {
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::Config(format!("--{name} must be positive, got {x}")))
    }
}

fn sink(c: &Common, config: RunConfig) -> Result<Sink> {
    Ok(Sink::new(&c.out, c.format, config, c.quiet)?)
}

fn load_checkpoint(path: &Path) -> Result<Checkpoint> {
    let f = File::open(path).map_err(|e| CliError::Config(format!("cannot open checkpoint {}: {e}", path.display())))?;
    Ok(read_checkpoint(BufReader::new(f))?)
}

fn report_table(name: &str, reports: &[BoundReport]) -> Table {
    let mut t = Table::new(name, &BoundReport::HEADER);
    for r in reports {
        let inputs: Vec<String> = r.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        t.push(vec![r.name.clone(), num(r.left), num(r.right), num(r.slack), inputs.join(";"), r.provenance.clone(), r.notes.join(" | ")]);
    }
    t
}

fn partition_picture(sink: &mut Sink, name: &str, part: &Partition, poles: &[Point], title: String) -> Result<usize> {
    let nodal = part.as_nodal();
    let bs = boundary_set(&nodal, &part.mask);
    let cps = critical_points(&bs, &part.mask);
    let body = render(&Picture { mask: &part.mask, labels: &part.labels, boundary: Some(&bs), critical: &cps, poles, title });
    sink.svg(name, &body)?;
    Ok(odd_count(&cps))
}

fn critical_table(name: &str, part: &Partition) -> Table {
    let bs = boundary_set(&part.as_nodal(), &part.mask);
    let mut t = Table::new(name, &["x", "y", "valence", "odd"]);
    for cp in critical_points(&bs, &part.mask) {
        t.push(vec![num(cp.position[0]), num(cp.position[1]), cp.valence.to_string(), cp.odd.to_string()]);
    }
    t
}

fn cells_table(name: &str, part: &Partition) -> Table {
    let mut t = Table::new(name, &["cell", "nodes", "area", "energy"]);
    let areas = part.cell_areas();
    for (i, cell) in part.cells().iter().enumerate() {
        t.push(vec![(i + 1).to_string(), cell.len().to_string(), num(areas[i]), num(part.energies[i])]);
    }
    t
}

pub fn constants(c: &Common) -> Result<()> {
    let mut cfg = RunConfig::new("constants");
    let p = c.p.unwrap_or(PACKING_CONSTANT);
    cfg.set("p", p);
    let mut s = sink(c, cfg)?;
    let k = pleijel_constants()?;
    let sup = bourgain_sup(p)?;
    let mut t = Table::new("constants", &["name", "value", "meaning"]);
    let mut row = |n: &str, v: f64, m: &str| t.push(vec![n.into(), num(v), m.into()]);
    row("lambda_disk", k.lambda_disk, "ground energy of the unit-area disk");
    row("lambda_hexagon", k.lambda_hexagon, "ground energy of the unit-area regular hexagon");
    row("nu_pl", k.nu_pl, "4π / λ(disk)");
    row("nu_hex", k.nu_hex, "4π / λ(hexagon)");
    row("ratio", k.ratio, "λ(disk) / λ(hexagon)");
    row("two_over_pi", k.polterovich, "4π / λ(square) = 2/π");
    row("chain_holds", if k.chain_holds() { 1.0 } else { 0.0 }, "2/π < ν_hex < ν_pl < 1");
    row("bourgain_delta0", sup.delta0, "upper end of the admissible δ range at packing density p");
    row("bourgain_sup_excess", sup.excess, "sup of the improvement factor minus one");
    row("bourgain_argmax", sup.argmax, "δ attaining the sup");
    row("bourgain_break_even", bourgain_break_even(), "δ where the improvement factor crosses one");
    s.table(&t)?;
    Ok(())
}

fn rectangle_of(d: &DomainSpec) -> Result<(f64, f64)> {
    match d {
        DomainSpec::Rectangle { a, b } => Ok((*a, *b)),
        other => Err(CliError::Config(format!("this command needs a rectangle domain, got `{other}`"))),
    }
}

/// Grid whose nodes resolve every nodal line of frequencies up to `freq` on
/// `(0, aπ) × (0, bπ)`, unless `h` is given.
fn sweep_mask(d: &DomainSpec, a: f64, b: f64, freq: u32, h: Option<f64>) -> spectral_partitions::Result<GridMask> {
    let h = h.unwrap_or(PI * a.min(b) / (24 * freq.max(1)) as f64);
    GridMask::rasterize(d, h)
}

pub fn spectrum(c: &Common, courant: Option<f64>) -> Result<()> {
    let d = domain_or(c, "square")?;
    let (a, b) = rectangle_of(&d)?;
    let count = c.n_max.unwrap_or(20);
    let theta_count = c.theta_count.unwrap_or(256);
    if let Some(h) = c.h {
        positive("h", h)?;
    }
    let mut cfg = RunConfig::new("spectrum");
    cfg.set("domain", &d);
    cfg.set("n_max", count);
    if let Some(l) = courant {
        cfg.set("courant", l);
        cfg.set("theta_count", theta_count);
        if let Some(h) = c.h {
            cfg.set("h", h);
        }
    }
    let mut s = sink(c, cfg)?;
    let rect = if a == b { Rectangle::unit_square() } else { Rectangle::new(a, b)? };
    // scale so eigenvalues are those of (0, aπ) × (0, bπ) even for the square preset
    let scale = if a == b { 1.0 / (a * a) } else { 1.0 };
    let mut t = Table::new("eigenvalues", &["rank", "m", "n", "value", "multiplicity"]);
    for e in rect.spectrum(count)? {
        t.push(vec![e.rank.to_string(), e.m.to_string(), e.n.to_string(), num(e.value * scale), e.multiplicity.to_string()]);
    }
    s.table(&t)?;
    if let Some(lmax) = courant {
        let entries = courant_sharp_scan(&rect, lmax / scale, |p, q| {
            let mask = sweep_mask(&d, a, b, p.0.max(p.1).max(q.0).max(q.1), c.h)?;
            Ok(theta_sweep_pair(p, q, a, b, theta_count, &mask)?.max_mu as u64)
        })?;
        let mut t =
            Table::new("courant", &["rank", "m", "n", "value", "multiplicity", "lattice_max", "mu_max", "mu_source", "courant_sharp"]);
        for e in entries {
            let (mu, src) = match e.mu_max {
                MuMax::Product(v) => (v.to_string(), "product"),
                MuMax::Sweep(v) => (v.to_string(), "sweep"),
                MuMax::Undetermined => (String::new(), "undetermined"),
            };
            let sharp = e.courant_sharp.map(|b| b.to_string()).unwrap_or_else(|| "undetermined".into());
            t.push(vec![
                e.rank.to_string(),
                e.m.to_string(),
                e.n.to_string(),
                num(e.value * scale),
                e.multiplicity.to_string(),
                e.lattice_max.to_string(),
                mu,
                src.into(),
                sharp,
            ]);
        }
        s.table(&t)?;
    }
    Ok(())
}

pub fn solve(c: &Common, extrapolate: bool) -> Result<()> {
    let d = domain_or(c, "unit-disk")?;
    let h = positive("h", c.h.unwrap_or(d.inradius() / 20.0))?;
    let j = c.n_max.unwrap_or(6);
    let draw = c.k.unwrap_or(1);
    if draw == 0 || draw > j {
        return Err(CliError::Config(format!("--k must lie in 1..={j} to pick an eigenfunction to draw")));
    }
    let mut cfg = RunConfig::new("solve");
    cfg.set("domain", &d);
    cfg.set("h", h);
    cfg.set("n_max", j);
    cfg.set("k", draw);
    cfg.set("extrapolate", extrapolate);
    let mut s = sink(c, cfg)?;
    let (mask, pairs) = solve_domain(&d, h, j, BoundaryTreatment::default(), &SolverConfig::default())?;
    let mut t = Table::new("eigenpairs", &["index", "value", "normalized", "residual", "nodal_domains"]);
    let area = d.area();
    for (i, p) in pairs.iter().enumerate() {
        let mu = nodal_domains(&p.vector, &mask).count;
        t.push(vec![(i + 1).to_string(), num(p.value), num(p.value * area), num(p.residual), mu.to_string()]);
    }
    s.table(&t)?;
    let nodal = nodal_domains(&pairs[draw - 1].vector, &mask);
    let bs = boundary_set(&nodal, &mask);
    let cps = critical_points(&bs, &mask);
    let title = format!("{d}: eigenfunction {draw}, λ = {:.6}, μ = {}", pairs[draw - 1].value, nodal.count);
    s.svg(
        "eigenfunction",
        &render(&Picture { mask: &mask, labels: &nodal.labels, boundary: Some(&bs), critical: &cps, poles: &[], title }),
    )?;
    if extrapolate {
        let g = groundstate_energy(&d, 1e-4)?;
        let mut t = Table::new("ground", &["h", "lambda1", "nodes"]);
        for (h, l, n) in &g.levels {
            t.push(vec![num(*h), num(*l), n.to_string()]);
        }
        t.push(vec!["extrapolated".into(), num(g.value), String::new()]);
        t.push(vec!["error".into(), num(g.error), String::new()]);
        s.table(&t)?;
    }
    Ok(())
}

pub fn nodal(c: &Common, p: (u32, u32), q: (u32, u32)) -> Result<()> {
    let d = domain_or(c, "square")?;
    let (a, b) = rectangle_of(&d)?;
    if [p.0, p.1, q.0, q.1].contains(&0) {
        return Err(CliError::Config("frequencies must be at least 1".into()));
    }
    let theta_count = c.theta_count.unwrap_or(256);
    let freq = p.0.max(p.1).max(q.0).max(q.1);
    if let Some(h) = c.h {
        positive("h", h)?;
    }
    let mask = sweep_mask(&d, a, b, freq, c.h)?;
    let mut cfg = RunConfig::new("nodal");
    cfg.set("domain", &d);
    cfg.set("pair1", format!("{}:{}", p.0, p.1));
    cfg.set("pair2", format!("{}:{}", q.0, q.1));
    cfg.set("theta_count", theta_count);
    cfg.set("h", mask.h);
    let mut s = sink(c, cfg)?;
    let sweep = theta_sweep_pair(p, q, a, b, theta_count, &mask)?;
    let mut t = Table::new("sweep", &["theta", "theta_over_pi", "mu"]);
    for (th, mu) in &sweep.table {
        t.push(vec![num(*th), num(th / PI), mu.to_string()]);
    }
    s.table(&t)?;

    let values = spectral_partitions::nodal::combine_rect_eigenfunctions(p, q, sweep.argmax, a, b, &mask);
    let part = nodal_domains(&values, &mask);
    let bs = boundary_set(&part, &mask);
    let cps = critical_points(&bs, &mask);
    let ev1 = (p.0 as f64 / a).powi(2) + (p.1 as f64 / b).powi(2);
    let ev2 = (q.0 as f64 / a).powi(2) + (q.1 as f64 / b).powi(2);
    let mut t = Table::new(
        "summary",
        &[
            "max_mu",
            "argmax_theta",
            "argmax_over_pi",
            "eigenvalue1",
            "eigenvalue2",
            "same_eigenspace",
            "critical_points",
            "odd_critical_points",
            "bipartite",
        ],
    );
    t.push(vec![
        sweep.max_mu.to_string(),
        num(sweep.argmax),
        num(sweep.argmax / PI),
        num(ev1),
        num(ev2),
        ((ev1 - ev2).abs() <= 1e-12 * ev1).to_string(),
        cps.len().to_string(),
        odd_count(&cps).to_string(),
        is_bipartite(&part, &mask).is_bipartite().to_string(),
    ]);
    s.table(&t)?;
    let title = format!("{d}: cos θ φ({},{}) + sin θ φ({},{}), θ = {:.4}π, μ = {}", p.0, p.1, q.0, q.1, sweep.argmax / PI, part.count);
    s.svg("argmax", &render(&Picture { mask: &mask, labels: &part.labels, boundary: Some(&bs), critical: &cps, poles: &[], title }))?;
    Ok(())
}

/// `[1, 8, p]` cut at `p`: the schedule always starts at 1 and ends at `p`.
fn schedule(p: f64) -> Vec<f64> {
    let mut s: Vec<f64> = [1.0, 8.0].into_iter().filter(|&x| x < p).collect();
    s.push(p);
    s
}

pub fn partition(c: &Common, restarts: Option<usize>, max_iter: Option<usize>) -> Result<()> {
    let d = domain_or(c, "unit-square")?;
    let k = c.k.unwrap_or(3);
    let p = c.p.unwrap_or(64.0);
    if !(p >= 1.0 && p.is_finite()) {
        return Err(CliError::Config(format!("--p must be a finite value of at least 1, got {p}")));
    }
    let defaults = OptimizerConfig::default();
    let oc = OptimizerConfig {
        p_schedule: schedule(p),
        restarts: restarts.unwrap_or(defaults.restarts),
        max_iter: max_iter.unwrap_or(defaults.max_iter),
        seed: c.seed.unwrap_or(defaults.seed),
        h: Some(positive("h", c.h.unwrap_or(d.inradius() / 20.0))?),
        ..defaults
    };
    let mut cfg = RunConfig::new("partition");
    cfg.set("domain", &d);
    cfg.set("k", k);
    cfg.set("p_schedule", oc.p_schedule.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(":"));
    cfg.set("restarts", oc.restarts);
    cfg.set("max_iter", oc.max_iter);
    cfg.set("seed", oc.seed);
    cfg.set("h", oc.h.unwrap_or_default());
    let mut s = sink(c, cfg)?;
    let part = optimize_minimal_partition(&d, k, &oc)?;

    s.table(&cells_table("cells", &part))?;
    let mut t = Table::new("summary", &["k", "lambda", "normalized", "lambda_k_reference", "spread", "seed", "converged", "bipartite"]);
    let min = part.energies.iter().copied().fold(f64::INFINITY, f64::min);
    t.push(vec![
        k.to_string(),
        num(part.lambda()),
        num(part.lambda() * d.area() / k as f64),
        part.reference.last().map(|&x| num(x)).unwrap_or_default(),
        num((part.lambda() - min) / part.lambda()),
        part.seed.map(|x| x.to_string()).unwrap_or_default(),
        part.converged.to_string(),
        is_bipartite(&part.as_nodal(), &part.mask).is_bipartite().to_string(),
    ]);
    s.table(&t)?;
    s.table(&critical_table("critical_points", &part))?;
    let mut t = Table::new("stages", &["p", "lambda_p", "lambda_max", "iterations", "converged"]);
    for st in &part.stages {
        t.push(vec![num(st.p), num(st.lambda_p), num(st.lambda_max), st.iterations.to_string(), st.converged.to_string()]);
    }
    s.table(&t)?;
    let mut t = Table::new("history", &["restart", "p", "iteration", "lambda_p", "lambda_max", "accepted"]);
    for r in &part.history {
        t.push(vec![r.restart.to_string(), num(r.p), r.iteration.to_string(), num(r.lambda_p), num(r.lambda_max), r.accepted.to_string()]);
    }
    if s.format.csv() {
        // the terminal gets the stage summary instead
        let quiet = std::mem::replace(&mut s.quiet, true);
        s.table(&t)?;
        s.quiet = quiet;
    }
    s.table(&report_table("audit", &[uncertainty_principle_audit(&part)]))?;

    let iterations = part.stages.iter().map(|x| x.iterations).sum();
    let cp = Checkpoint::from_partition(&part, p, iterations, &[]);
    let mut buf = Vec::new();
    write_checkpoint(&mut buf, &cp)?;
    let path = s.file("partition_checkpoint.txt", &buf)?;
    if !c.quiet {
        println!("checkpoint: {}", path.display());
    }
    let title = format!("{d}: k = {k}, Λ = {:.6}", part.lambda());
    partition_picture(&mut s, "cells", &part, &[], title)?;
    Ok(())
}

pub fn bipartite(c: &Common, checkpoint: &Path, eps: f64) -> Result<()> {
    let cp = load_checkpoint(checkpoint)?;
    let mut cfg = RunConfig::new("bipartite");
    cfg.set("checkpoint_domain", &cp.domain);
    cfg.set("checkpoint_h", cp.h);
    cfg.set("checkpoint_k", cp.k);
    cfg.set("checkpoint_labels", labels_digest(&cp.labels));
    cfg.set("eps_over_h", eps);
    let mut s = sink(c, cfg)?;
    let part = cp.to_partition(&SolverConfig::default())?;
    let shrunk = bipartite_approximation(&part, eps * cp.h)?;
    let mut t = Table::new("energies", &["cell", "original", "approximation", "increase"]);
    for (i, (a, b)) in part.energies.iter().zip(&shrunk.energies).enumerate() {
        t.push(vec![(i + 1).to_string(), num(*a), num(*b), num(b - a)]);
    }
    s.table(&t)?;
    let mut t = Table::new("summary", &["eps", "lambda_original", "lambda_approximation", "original_bipartite", "approximation_bipartite"]);
    t.push(vec![
        num(eps * cp.h),
        num(part.lambda()),
        num(shrunk.lambda()),
        is_bipartite(&part.as_nodal(), &part.mask).is_bipartite().to_string(),
        is_bipartite(&shrunk.as_nodal(), &shrunk.mask).is_bipartite().to_string(),
    ]);
    s.table(&t)?;
    let title = format!("{}: bipartite approximation, ε = {}h", cp.domain, eps);
    partition_picture(&mut s, "approximation", &shrunk, &[], title)?;
    Ok(())
}

/// Short stable fingerprint of a labeling, so the config header identifies
/// the checkpoint content rather than its path.
fn labels_digest(labels: &[usize]) -> String {
    let mut cfg = RunConfig::new("labels");
    cfg.set("labels", labels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "));
    cfg.hash()[..16].to_string()
}

pub fn tiling_bound(c: &Common, cell: &str) -> Result<()> {
    let d = domain_or(c, "unit-square")?;
    let k = c.k.unwrap_or(4);
    let kind: CellKind = cell.parse()?;
    let mut cfg = RunConfig::new("tiling-bound");
    cfg.set("domain", &d);
    cfg.set("k", k);
    cfg.set("cell", format!("{kind:?}").to_lowercase());
    let mut s = sink(c, cfg)?;
    let tb = tiling_upper_bound(&d, k, kind)?;
    let mut t =
        Table::new("bound", &["k", "cell", "lambda_upper", "tile_energy", "normalized", "cell_area", "fill_fraction", "glued_lambda"]);
    t.push(vec![
        k.to_string(),
        format!("{kind:?}").to_lowercase(),
        num(tb.lambda),
        num(tb.tile_energy),
        num(tb.normalized),
        num(tb.tiling.cell_area),
        num(tb.tiling.fill_fraction(&d)),
        num(tb.partition.lambda()),
    ]);
    s.table(&t)?;
    let mut t = Table::new("tiles", &["tile", "center_x", "center_y"]);
    for (i, p) in tb.tiling.centers.iter().enumerate() {
        t.push(vec![(i + 1).to_string(), num(p[0]), num(p[1])]);
    }
    s.table(&t)?;
    let title = format!("{d}: {k} tiles, Λ ≤ {:.6}", tb.lambda);
    partition_picture(&mut s, "glued", &tb.partition, &[], title)?;
    Ok(())
}

fn parse_poles(text: &str) -> Result<Vec<Point>> {
    let mut out = Vec::new();
    for item in text.split(';').filter(|s| !s.trim().is_empty()) {
        let (x, y) = item.split_once(',').ok_or_else(|| CliError::Config(format!("pole `{item}` is not `x,y`")))?;
        let f = |v: &str| v.trim().parse::<f64>().map_err(|e| CliError::Config(format!("pole coordinate `{v}`: {e}")));
        out.push([f(x)?, f(y)?]);
    }
    Ok(out)
}

pub fn ab(c: &Common, poles: Option<&str>, snap: bool, check: Option<&Path>) -> Result<()> {
    if let Some(path) = check {
        return ab_check(c, path);
    }
    let d = domain_or(c, "unit-disk")?;
    let h = positive("h", c.h.unwrap_or(d.inradius() / 20.0))?;
    let n_max = c.n_max.unwrap_or(10);
    let mask = GridMask::rasterize(&d, h)?;
    let raw = match poles {
        Some(text) => PoleConfig::new(parse_poles(text)?)?,
        None => PoleConfig::new(vec![d.centroid()])?.snapped(&mask),
    };
    let config = if snap { raw.snapped(&mask) } else { raw };
    config.validate(&mask)?;
    let draw = c.k.unwrap_or(n_max);
    if draw == 0 || draw > n_max {
        return Err(CliError::Config(format!("--k must lie in 1..={n_max} to pick an eigenfunction to draw")));
    }
    let mut cfg = RunConfig::new("ab");
    cfg.set("domain", &d);
    cfg.set("h", h);
    cfg.set("n_max", n_max);
    cfg.set("k", draw);
    cfg.set("poles", config.poles.iter().map(|p| format!("{}:{}", p[0], p[1])).collect::<Vec<_>>().join(" "));
    let mut s = sink(c, cfg)?;

    let rows = ab_pleijel_scan(&mask, &config, n_max)?;
    let mut t = Table::new("scan", &["n", "value", "normalized", "mu", "ratio", "tail_max", "pole_valences"]);
    for r in &rows {
        let val: Vec<String> = r.pole_valences.iter().map(|v| v.to_string()).collect();
        t.push(vec![
            r.n.to_string(),
            num(r.value),
            num(r.value * d.area()),
            r.mu.to_string(),
            num(r.ratio),
            num(r.tail_max),
            val.join(" "),
        ]);
    }
    s.table(&t)?;
    if s.format.svg() {
        let spec = ab_spectrum(&mask, &config, draw)?;
        let part = spec.nodal_domains(&mask, draw - 1);
        let title = format!("{d}: Aharonov-Bohm eigenfunction {draw}, λ = {:.6}, μ = {}", spec.pairs[draw - 1].value, part.count);
        s.svg(
            "eigenfunction",
            &render(&Picture { mask: &mask, labels: &part.labels, boundary: None, critical: &[], poles: &config.poles, title }),
        )?;
    }
    Ok(())
}

fn ab_check(c: &Common, path: &Path) -> Result<()> {
    let cp = load_checkpoint(path)?;
    let mut cfg = RunConfig::new("ab-check");
    cfg.set("checkpoint_domain", &cp.domain);
    cfg.set("checkpoint_h", cp.h);
    cfg.set("checkpoint_k", cp.k);
    cfg.set("checkpoint_labels", labels_digest(&cp.labels));
    let mut s = sink(c, cfg)?;
    let part = cp.to_partition(&SolverConfig::default())?;
    let report = verify_magnetic_characterization(&part)?;
    s.table(&report_table("characterization", std::slice::from_ref(&report)))?;
    let poles: Vec<Point> =
        (1..).map_while(|i| Some([report.input(&format!("pole{i}_x"))?, report.input(&format!("pole{i}_y"))?])).collect();
    let title = format!("{}: k = {}, poles at odd critical points", cp.domain, cp.k);
    partition_picture(&mut s, "partition", &part, &poles, title)?;
    Ok(())
}

pub fn bounds(c: &Common, big_c: f64, c_up: f64, lambda: Option<f64>, checkpoint: Option<&Path>) -> Result<()> {
    let d = domain_or(c, "unit-square")?;
    let p = c.p.unwrap_or(PACKING_CONSTANT);
    let lambda = lambda.unwrap_or(4.0 * PI * 40.0 / d.area());
    let mut cfg = RunConfig::new("bounds");
    cfg.set("domain", &d);
    cfg.set("c", big_c);
    cfg.set("c_up", c_up);
    cfg.set("lambda", lambda);
    cfg.set("p", p);
    let part = match checkpoint {
        Some(path) => {
            let cp = load_checkpoint(path)?;
            cfg.set("checkpoint_domain", &cp.domain);
            cfg.set("checkpoint_h", cp.h);
            cfg.set("checkpoint_k", cp.k);
            cfg.set("checkpoint_labels", labels_digest(&cp.labels));
            Some(cp.to_partition(&SolverConfig::default())?)
        }
        None => None,
    };
    let mut s = sink(c, cfg)?;

    let k = pleijel_constants()?;
    let mut reports = vec![
        faber_krahn_check(&d)?,
        hansen_nadirashvili_check(&d)?,
        bdpv_check(&d, big_c)?,
        weyl_check(&d, lambda)?,
        BoundReport::new("constant chain: ν_hex < ν_pl", k.nu_hex, k.nu_pl, "the hexagonal constant lies below Pleijel's")
            .with_input("two_over_pi", k.polterovich)
            .with_input("chain_holds", if k.chain_holds() { 1.0 } else { 0.0 }),
        bourgain_limit_check(p, k.lambda_hexagon, k.lambda_disk)?,
    ];
    let st = steinerberger_factor(c_up, big_c)?;
    let crossing = steinerberger_crossing(big_c)?;
    let mut r =
        BoundReport::new("uncertainty-principle factor", st.factor, 1.0, "the improvement factor on Pleijel's constant stays below one")
            .with_input("c_up", c_up)
            .with_input("C", big_c)
            .with_input("first", st.first)
            .with_input("second", st.second)
            .with_input("implied_lower", st.implied_lower);
    r = match crossing {
        Some(x) => r.with_input("crossing", x),
        None => r.with_note("no crossing: the factor never reaches the hexagonal value"),
    };
    reports.push(r);
    let delta0 = bourgain_delta0(p)?;
    reports.push(BoundReport::new("bourgain admissible range", 0.0, delta0, "δ₀ is positive at this packing density").with_input("p", p));
    if let Some(part) = &part {
        reports.push(uncertainty_principle_audit(part));
        reports.push(verify_magnetic_characterization(part)?);
    }
    if !c.quiet {
        print!("{}", summary_table(&reports));
    }
    let quiet = std::mem::replace(&mut s.quiet, true);
    s.table(&report_table("reports", &reports))?;
    s.quiet = quiet;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schedule_ends_at_p() {
        assert_eq!(schedule(64.0), vec![1.0, 8.0, 64.0]);
        assert_eq!(schedule(4.0), vec![1.0, 4.0]);
        assert_eq!(schedule(1.0), vec![1.0]);
        assert_eq!(schedule(8.0), vec![1.0, 8.0]);
    }

    #[test]
    fn poles_parse() {
        assert_eq!(parse_poles("0.1,0.2; -1,3").unwrap(), vec![[0.1, 0.2], [-1.0, 3.0]]);
        assert!(parse_poles("1;2").is_err());
    }
}

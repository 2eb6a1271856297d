//! Plain-text partition checkpoints.
//!
//! ```text
//! # spectral-partitions checkpoint
//! # domain = disk radius=1
//! # h = 0.05
//! # origin = -1,-1
//! # k = 3
//! # p = 64
//! # seed = 3
//! # iteration = 20
//! # treatment = cut-cell 0.01
//! <ny rows of nx labels, bottom row first, -1 outside the domain>
//! [poles]
//! <x y per line>
//! ```
//!
//! Floats are written in shortest round-trip form, so the mask and hence the
//! energies are reproduced exactly on reload.

use std::io::{BufRead, Write};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::{DomainSpec, GridMask, Point};
use crate::partition::Partition;
use crate::solver::{BoundaryTreatment, SolverConfig};

#[derive(Debug, Clone, PartialEq)]
pub struct Checkpoint {
    pub domain: DomainSpec,
    pub h: f64,
    pub origin: Point,
    pub k: usize,
    pub p: f64,
    pub seed: Option<u64>,
    pub iteration: usize,
    pub treatment: BoundaryTreatment,
    /// One label per interior node, in mask order.
    pub labels: Vec<usize>,
    pub poles: Vec<Point>,
}

fn treatment_text(t: BoundaryTreatment) -> String {
    match t {
        BoundaryTreatment::NodeOmission => "node-omission".into(),
        BoundaryTreatment::CutCell { min_fraction } => format!("cut-cell {min_fraction}"),
    }
}

fn parse_treatment(s: &str) -> Result<BoundaryTreatment> {
    let mut it = s.split_whitespace();
    match (it.next(), it.next()) {
        (Some("node-omission"), None) => Ok(BoundaryTreatment::NodeOmission),
        (Some("cut-cell"), Some(f)) => Ok(BoundaryTreatment::CutCell { min_fraction: num(f)? }),
        _ => Err(Error::Format(format!("unknown boundary treatment `{s}`"))),
    }
}

fn num<T: FromStr>(s: &str) -> Result<T>
where
    T::Err: std::fmt::Display,
{
    s.trim().parse::<T>().map_err(|e| Error::Format(format!("bad number `{s}`: {e}")))
}

impl Checkpoint {
    pub fn from_partition(partition: &Partition, p: f64, iteration: usize, poles: &[Point]) -> Self {
        Checkpoint {
            domain: partition.mask.domain.clone(),
            h: partition.mask.h,
            origin: partition.mask.origin,
            k: partition.k,
            p,
            seed: partition.seed,
            iteration,
            treatment: partition.treatment,
            labels: partition.labels.clone(),
            poles: poles.to_vec(),
        }
    }

    /// Rebuild the mask and solve every cell.
    pub fn to_partition(&self, solver: &SolverConfig) -> Result<Partition> {
        let mask = GridMask::rasterize_with_origin(&self.domain, self.h, self.origin)?;
        let mut part = Partition::new(mask, self.labels.clone(), self.k, self.treatment, solver)?;
        part.seed = self.seed;
        Ok(part)
    }
}

pub fn write_checkpoint<W: Write>(mut w: W, checkpoint: &Checkpoint) -> Result<()> {
    let c = checkpoint;
    let mask = GridMask::rasterize_with_origin(&c.domain, c.h, c.origin)?;
    if mask.len() != c.labels.len() {
        return Err(Error::Format(format!("{} labels for a mask of {} nodes", c.labels.len(), mask.len())));
    }
    writeln!(w, "# spectral-partitions checkpoint")?;
    writeln!(w, "# domain = {}", c.domain)?;
    writeln!(w, "# h = {}", c.h)?;
    writeln!(w, "# origin = {},{}", c.origin[0], c.origin[1])?;
    writeln!(w, "# k = {}", c.k)?;
    writeln!(w, "# p = {}", c.p)?;
    match c.seed {
        Some(s) => writeln!(w, "# seed = {s}")?,
        None => writeln!(w, "# seed = none")?,
    }
    writeln!(w, "# iteration = {}", c.iteration)?;
    writeln!(w, "# treatment = {}", treatment_text(c.treatment))?;
    for j in 0..mask.ny as i64 {
        let row: Vec<String> = (0..mask.nx as i64)
            .map(|i| match mask.index_of(i, j) {
                Some(n) => c.labels[n].to_string(),
                None => "-1".to_string(),
            })
            .collect();
        writeln!(w, "{}", row.join(" "))?;
    }
    if !c.poles.is_empty() {
        writeln!(w, "[poles]")?;
        for p in &c.poles {
            writeln!(w, "{} {}", p[0], p[1])?;
        }
    }
    Ok(())
}

pub fn read_checkpoint<R: BufRead>(r: R) -> Result<Checkpoint> {
    let mut header = std::collections::BTreeMap::new();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut poles = Vec::new();
    let mut in_poles = false;
    for line in r.lines() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        if let Some(rest) = t.strip_prefix('#') {
            if let Some((k, v)) = rest.split_once('=') {
                header.insert(k.trim().to_string(), v.trim().to_string());
            }
        } else if t == "[poles]" {
            in_poles = true;
        } else if in_poles {
            let xy: Vec<f64> = t.split_whitespace().map(num).collect::<Result<_>>()?;
            if xy.len() != 2 {
                return Err(Error::Format(format!("pole line `{t}` needs two numbers")));
            }
            poles.push([xy[0], xy[1]]);
        } else {
            rows.push(t.split_whitespace().map(num).collect::<Result<_>>()?);
        }
    }
    let get = |key: &str| header.get(key).ok_or_else(|| Error::Format(format!("missing header `{key}`")));
    let domain = DomainSpec::from_str(get("domain")?)?;
    let h: f64 = num(get("h")?)?;
    let (ox, oy) = get("origin")?.split_once(',').ok_or_else(|| Error::Format("origin needs x,y".into()))?;
    let origin = [num(ox)?, num(oy)?];
    let seed = match get("seed")?.as_str() {
        "none" => None,
        s => Some(num(s)?),
    };
    let treatment = match header.get("treatment") {
        Some(t) => parse_treatment(t)?,
        None => BoundaryTreatment::default(),
    };
    let mask = GridMask::rasterize_with_origin(&domain, h, origin)?;
    if rows.len() != mask.ny || rows.iter().any(|r| r.len() != mask.nx) {
        return Err(Error::Format(format!("label grid must be {} rows of {} entries", mask.ny, mask.nx)));
    }
    let mut labels = vec![0usize; mask.len()];
    for (j, row) in rows.iter().enumerate() {
        for (i, &v) in row.iter().enumerate() {
            match (mask.index_of(i as i64, j as i64), v) {
                (Some(n), v) if v >= 0 => labels[n] = v as usize,
                (None, -1) => {}
                _ => return Err(Error::Format(format!("label {v} at ({i}, {j}) disagrees with the domain mask"))),
            }
        }
    }
    Ok(Checkpoint {
        domain,
        h,
        origin,
        k: num(get("k")?)?,
        p: num(get("p")?)?,
        seed,
        iteration: num(get("iteration")?)?,
        treatment,
        labels,
        poles,
    })
}

//! The Dirichlet spectrum of the rectangle `(0, aπ) × (0, bπ)`.
//!
//! Eigenvalues are `m²/a² + n²/b²` with eigenfunctions
//! `sin(m x / a) sin(n y / b)`. When both squared side lengths are given as
//! fractions all comparisons are exact; otherwise two values are treated as
//! equal when their relative gap is below `REAL_TOLERANCE`.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_rational::Ratio;

use crate::error::{Error, Result};

pub const REAL_TOLERANCE: f64 = 1e-12;

/// A squared side length, exact or floating.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SquaredLength {
    Rational(Ratio<i64>),
    Real(f64),
}

impl SquaredLength {
    fn to_f64(self) -> f64 {
        match self {
            SquaredLength::Rational(r) => *r.numer() as f64 / *r.denom() as f64,
            SquaredLength::Real(x) => x,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rectangle {
    pub a2: SquaredLength,
    pub b2: SquaredLength,
}

/// An eigenvalue value, carrying the exact rational when available.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Energy {
    pub value: f64,
    pub exact: Option<Ratio<i128>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RectEigenvalue {
    pub m: u32,
    pub n: u32,
    pub value: f64,
    /// `1 + #{eigenvalues strictly below}`, counted with multiplicity.
    pub rank: usize,
    pub multiplicity: usize,
}

impl Rectangle {
    /// Rectangle from floating side lengths.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
            return Err(Error::InvalidInput(format!("rectangle sides must be positive (a={a}, b={b})")));
        }
        Ok(Rectangle { a2: SquaredLength::Real(a * a), b2: SquaredLength::Real(b * b) })
    }

    /// Rectangle with `a² = a2` and `b² = b2` given exactly.
    pub fn rational(a2: Ratio<i64>, b2: Ratio<i64>) -> Result<Self> {
        if *a2.numer() <= 0 || *b2.numer() <= 0 {
            return Err(Error::InvalidInput("squared sides must be positive".into()));
        }
        Ok(Rectangle { a2: SquaredLength::Rational(a2), b2: SquaredLength::Rational(b2) })
    }

    /// Rectangle with floating `a` and `b² = b2`, the shape used for the
    /// irrational-ratio experiments (`b² = 2`).
    pub fn with_squared(a2: f64, b2: f64) -> Result<Self> {
        if !(a2 > 0.0 && b2 > 0.0) {
            return Err(Error::InvalidInput("squared sides must be positive".into()));
        }
        Ok(Rectangle { a2: SquaredLength::Real(a2), b2: SquaredLength::Real(b2) })
    }

    pub fn unit_square() -> Self {
        Rectangle::rational(Ratio::from_integer(1), Ratio::from_integer(1)).unwrap()
    }

    pub fn a(&self) -> f64 {
        self.a2.to_f64().sqrt()
    }

    pub fn b(&self) -> f64 {
        self.b2.to_f64().sqrt()
    }

    pub fn area(&self) -> f64 {
        self.a() * self.b() * PI * PI
    }

    fn exact_parts(&self) -> Option<(Ratio<i128>, Ratio<i128>)> {
        match (self.a2, self.b2) {
            (SquaredLength::Rational(a), SquaredLength::Rational(b)) => Some((widen(a), widen(b))),
            _ => None,
        }
    }

    pub fn energy(&self, m: u32, n: u32) -> Energy {
        let (m2, n2) = ((m as f64).powi(2), (n as f64).powi(2));
        let exact =
            self.exact_parts().map(|(a, b)| Ratio::from_integer((m as i128).pow(2)) / a + Ratio::from_integer((n as i128).pow(2)) / b);
        let value = match exact {
            Some(r) => *r.numer() as f64 / *r.denom() as f64,
            None => m2 / self.a2.to_f64() + n2 / self.b2.to_f64(),
        };
        Energy { value, exact }
    }

    /// Compare two energies under the module's equality rule.
    pub fn compare(&self, x: &Energy, y: &Energy) -> Ordering {
        if let (Some(p), Some(q)) = (x.exact, y.exact) {
            return p.cmp(&q);
        }
        let scale = x.value.abs().max(y.value.abs());
        if (x.value - y.value).abs() <= REAL_TOLERANCE * scale {
            Ordering::Equal
        } else {
            x.value.total_cmp(&y.value)
        }
    }

    fn threshold(&self, lambda: f64) -> Energy {
        let exact = self.exact_parts().and_then(|_| ratio_from_f64(lambda));
        Energy { value: lambda, exact }
    }

    /// All `(m, n)` with energy `≤ bound` (inclusive under the equality rule).
    fn pairs_up_to(&self, bound: f64) -> Vec<(u32, u32, Energy)> {
        let t = self.threshold(bound);
        let mut out = Vec::new();
        let mmax = (self.a() * bound.sqrt()).floor() as u32 + 1;
        for m in 1..=mmax {
            let mut n = 1;
            loop {
                let e = self.energy(m, n);
                if self.compare(&e, &t) == Ordering::Greater {
                    break;
                }
                out.push((m, n, e));
                n += 1;
            }
        }
        out
    }

    /// The first `count` eigenvalues with multiplicity, nondecreasing, ties
    /// ordered by `m`.
    pub fn spectrum(&self, count: usize) -> Result<Vec<RectEigenvalue>> {
        if count == 0 {
            return Err(Error::InvalidInput("spectrum needs count >= 1".into()));
        }
        // Start from the Weyl estimate and double until enough pairs appear.
        let mut bound = 4.0 * count as f64 / (PI * self.a() * self.b()) + self.energy(1, 1).value;
        let mut pairs = loop {
            let p = self.pairs_up_to(bound);
            if p.len() >= count {
                break p;
            }
            bound *= 2.0;
        };
        pairs.sort_by(|x, y| self.compare(&x.2, &y.2).then(x.0.cmp(&y.0)));

        let mut out = Vec::with_capacity(count);
        let mut start = 0;
        while start < pairs.len() && start < count {
            let mut end = start + 1;
            while end < pairs.len() && self.compare(&pairs[start].2, &pairs[end].2) == Ordering::Equal {
                end += 1;
            }
            for &(m, n, e) in &pairs[start..end] {
                if out.len() < count {
                    out.push(RectEigenvalue { m, n, value: e.value, rank: start + 1, multiplicity: end - start });
                }
            }
            start = end;
        }
        Ok(out)
    }

    /// `#{(m, n) : λ_{m,n} < λ}`.
    pub fn counting_function(&self, lambda: f64) -> usize {
        let t = self.threshold(lambda);
        let mut count = 0usize;
        let mmax = (self.a() * lambda.max(0.0).sqrt()).floor() as u32 + 1;
        for m in 1..=mmax {
            let rest = lambda - (m as f64).powi(2) / self.a2.to_f64();
            if rest <= 0.0 && self.compare(&self.energy(m, 1), &t) != Ordering::Less {
                continue;
            }
            // Floating guess, then correct with the exact comparison.
            let mut n = (self.b() * rest.max(0.0).sqrt()).floor() as u32;
            while n > 0 && self.compare(&self.energy(m, n), &t) != Ordering::Less {
                n -= 1;
            }
            while self.compare(&self.energy(m, n + 1), &t) == Ordering::Less {
                n += 1;
            }
            count += n as usize;
        }
        count
    }

    /// Number of pairs with energy equal to `lambda`.
    pub fn multiplicity(&self, lambda: f64) -> usize {
        let t = self.threshold(lambda);
        self.pairs_up_to(lambda).iter().filter(|p| self.compare(&p.2, &t) == Ordering::Equal).count()
    }
}

fn widen(r: Ratio<i64>) -> Ratio<i128> {
    Ratio::new(*r.numer() as i128, *r.denom() as i128)
}

/// Exact rational value of a finite double, when it fits in `i128`.
fn ratio_from_f64(x: f64) -> Option<Ratio<i128>> {
    if !x.is_finite() {
        return None;
    }
    if x == 0.0 {
        return Some(Ratio::from_integer(0));
    }
    let bits = x.to_bits();
    let sign: i128 = if bits >> 63 == 1 { -1 } else { 1 };
    let exp = ((bits >> 52) & 0x7ff) as i32;
    let frac = (bits & ((1u64 << 52) - 1)) as i128;
    let (mant, e) = if exp == 0 { (frac, -1074) } else { (frac | (1i128 << 52), exp - 1075) };
    if e >= 0 {
        (e < 70).then(|| Ratio::from_integer(sign * (mant << e)))
    } else {
        let shift = (-e).min(126);
        (-e <= 126).then(|| Ratio::new(sign * mant, 1i128 << shift))
    }
}

/// `μ(φ_{m,n}) = m n`.
pub fn mu_product(m: u32, n: u32) -> u64 {
    m as u64 * n as u64
}

/// `P(m, n; b) = 4mn / (π (m² b + n² / b))`, never above `2/π`.
pub fn pleijel_quotient(m: u32, n: u32, b: f64) -> f64 {
    let (m, n) = (m as f64, n as f64);
    4.0 * m * n / (PI * (m * m * b + n * n / b))
}

#[derive(Debug, Clone, PartialEq)]
pub struct PleijelSequence {
    /// `(m_k, n_k, P(m_k, n_k; b))` along the convergents `n_k / m_k` of `b`.
    pub terms: Vec<(u64, u64, f64)>,
    /// The expansion ended because a convergent equals `b`.
    pub terminated_exact: bool,
}

/// Pleijel quotients along the continued-fraction convergents of `b`,
/// stopping after `depth` terms, at an exact convergent, or once the
/// denominator exceeds one million.
pub fn pleijel_limit_sequence(b: f64, depth: usize) -> Result<PleijelSequence> {
    if !(b > 0.0 && b.is_finite()) || depth == 0 {
        return Err(Error::InvalidInput(format!("need b > 0 and depth >= 1 (b={b}, depth={depth})")));
    }
    let (mut p0, mut q0) = (1u64, 0u64);
    let (mut p1, mut q1) = (b.floor() as u64, 1u64);
    let mut x = b;
    let mut terms = Vec::new();
    let mut exact = false;
    loop {
        let m = q1;
        let n = p1;
        let pq = 4.0 * (m as f64) * (n as f64) / (PI * ((m as f64).powi(2) * b + (n as f64).powi(2) / b));
        terms.push((m, n, pq));
        let frac = x - x.floor();
        if frac.abs() < 1e-12 * x.max(1.0) || (n as f64 / m as f64 - b).abs() <= 1e-15 * b {
            exact = true;
            break;
        }
        if terms.len() >= depth {
            break;
        }
        x = 1.0 / frac;
        let a = x.floor() as u64;
        let (p2, q2) = (a * p1 + p0, a * q1 + q0);
        if q2 > 1_000_000 {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    Ok(PleijelSequence { terms, terminated_exact: exact })
}

/// Nodal-count information for one eigenvalue rank.
#[derive(Debug, Clone, PartialEq)]
pub enum MuMax {
    /// Simple eigenvalue: the product count.
    Product(u64),
    /// Two-dimensional eigenspace: maximum over a θ-sweep.
    Sweep(u64),
    /// Eigenspace of dimension above two, outside automated scope.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CourantEntry {
    pub rank: usize,
    pub m: u32,
    pub n: u32,
    pub value: f64,
    pub multiplicity: usize,
    /// Largest `m n` over the lattice pairs of the eigenspace.
    pub lattice_max: u64,
    pub mu_max: MuMax,
    /// `None` when undetermined.
    pub courant_sharp: Option<bool>,
}

/// Courant-sharp classification for every rank with eigenvalue `≤ lambda_max`.
///
/// `sweep` receives the two lattice pairs spanning a two-dimensional
/// eigenspace and returns the maximal nodal count over the combinations.
pub fn courant_sharp_scan(
    rect: &Rectangle,
    lambda_max: f64,
    mut sweep: impl FnMut((u32, u32), (u32, u32)) -> Result<u64>,
) -> Result<Vec<CourantEntry>> {
    let below = rect.counting_function(lambda_max) + rect.multiplicity(lambda_max);
    if below == 0 {
        return Ok(Vec::new());
    }
    let spec = rect.spectrum(below)?;
    let mut out = Vec::with_capacity(spec.len());
    let mut k = 0;
    while k < spec.len() {
        let first = &spec[k];
        let cluster: Vec<&RectEigenvalue> = spec[k..].iter().take(first.multiplicity).collect();
        let lattice_max = cluster.iter().map(|e| mu_product(e.m, e.n)).max().unwrap_or(0);
        let mu_max = match first.multiplicity {
            1 => MuMax::Product(mu_product(first.m, first.n)),
            2 => MuMax::Sweep(sweep((cluster[0].m, cluster[0].n), (cluster[1].m, cluster[1].n))?),
            _ => MuMax::Undetermined,
        };
        for (offset, e) in cluster.iter().enumerate() {
            let rank = k + offset + 1;
            let sharp = match mu_max {
                MuMax::Product(mu) | MuMax::Sweep(mu) => Some(mu == rank as u64),
                MuMax::Undetermined => None,
            };
            out.push(CourantEntry {
                rank,
                m: e.m,
                n: e.n,
                value: e.value,
                multiplicity: first.multiplicity,
                lattice_max,
                mu_max: mu_max.clone(),
                courant_sharp: sharp,
            });
        }
        k += first.multiplicity;
    }
    Ok(out)
}

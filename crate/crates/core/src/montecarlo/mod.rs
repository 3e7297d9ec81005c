//! Seeded Monte Carlo estimators used as an independent check on the exact
//! and quadrature engines.
//!
//! Randomness comes from ChaCha8. Trials are cut into fixed chunks of
//! `CHUNK` and chunk `i` draws from stream `i` of the generator seeded with
//! `seed`, so results are identical for any thread count. The number of
//! worker threads can be capped with `ANGLEWORKS_THREADS`.

mod geometry;

pub use geometry::{convex_hull_2d, voronoi_cell_2d};

use crate::error::{Error, Result};
use crate::scalars::Family;
use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Beta, Distribution, Gamma, Poisson, StandardNormal};
use rayon::prelude::*;

pub const CHUNK: u64 = 256;
const MAX_RESAMPLE: usize = 1000;
const MIN_CONDITIONING: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub stderr: f64,
    pub trials: u64,
    pub seed: u64,
}

impl McEstimate {
    fn from_samples(samples: &[f64], seed: u64) -> Self {
        let n = samples.len() as f64;
        let mean = pairwise_sum(samples) / n;
        let dev: Vec<f64> = samples.iter().map(|x| (x - mean) * (x - mean)).collect();
        let var = if samples.len() > 1 { pairwise_sum(&dev) / (n - 1.0) } else { 0.0 };
        McEstimate {
            mean,
            stderr: (var / n).sqrt(),
            trials: samples.len() as u64,
            seed,
        }
    }

    /// (mean - target) / stderr, or 0 when both coincide exactly.
    pub fn z_score(&self, target: f64) -> f64 {
        let diff = self.mean - target;
        if diff == 0.0 {
            0.0
        } else if self.stderr == 0.0 {
            f64::INFINITY
        } else {
            diff / self.stderr
        }
    }

    pub fn agrees_with(&self, target: f64, sigmas: f64) -> bool {
        self.z_score(target).abs() <= sigmas
    }
}

fn pairwise_sum(x: &[f64]) -> f64 {
    if x.len() <= 8 {
        return x.iter().sum();
    }
    let (a, b) = x.split_at(x.len() / 2);
    pairwise_sum(a) + pairwise_sum(b)
}

pub fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

fn thread_cap() -> Option<usize> {
    std::env::var("ANGLEWORKS_THREADS").ok()?.parse().ok().filter(|&n| n > 0)
}

/// Run `trials` independent trials and collect their values in trial order.
fn run_trials<F>(trials: u64, seed: u64, f: F) -> Result<Vec<f64>>
where
    F: Fn(&mut ChaCha8Rng) -> Result<f64> + Sync,
{
    if trials == 0 {
        return Err(Error::Domain("need at least one trial".into()));
    }
    let chunks = trials.div_ceil(CHUNK);
    let work = || {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut rng = chunk_rng(seed, c);
                let len = CHUNK.min(trials - c * CHUNK);
                (0..len).map(|_| f(&mut rng)).collect::<Result<Vec<f64>>>()
            })
            .collect::<Result<Vec<Vec<f64>>>>()
    };
    let parts = match thread_cap() {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Numeric(e.to_string()))?
            .install(work)?,
        None => work()?,
    };
    Ok(parts.concat())
}

fn gaussian_direction<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..d).map(|_| rng.sample(StandardNormal)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 0.0 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

fn check_beta(d: usize, beta: f64) -> Result<()> {
    if d == 0 {
        return Err(Error::Domain("dimension must be positive".into()));
    }
    if !(beta >= -1.0) || !beta.is_finite() {
        return Err(Error::Domain(format!("beta points need beta >= -1, got {beta}")));
    }
    Ok(())
}

fn check_betaprime(d: usize, beta: f64) -> Result<()> {
    if d == 0 {
        return Err(Error::Domain("dimension must be positive".into()));
    }
    if !(beta > d as f64 / 2.0) || !beta.is_finite() {
        return Err(Error::Domain(format!("beta' points in dimension {d} need beta > {}, got {beta}", d as f64 / 2.0)));
    }
    Ok(())
}

/// Radial law: r^2 ~ Beta(d/2, beta + 1), or r = 1 at beta = -1.
pub fn sample_beta_point<R: Rng + ?Sized>(d: usize, beta: f64, rng: &mut R) -> Result<Vec<f64>> {
    check_beta(d, beta)?;
    let u = gaussian_direction(d, rng);
    if beta == -1.0 {
        return Ok(u);
    }
    let law = Beta::new(d as f64 / 2.0, beta + 1.0).map_err(|e| Error::Numeric(e.to_string()))?;
    let r = law.sample(rng).sqrt();
    Ok(u.into_iter().map(|x| r * x).collect())
}

/// Radial law: r^2 = G1 / G2 with G1 ~ Gamma(d/2), G2 ~ Gamma(beta - d/2).
pub fn sample_betaprime_point<R: Rng + ?Sized>(d: usize, beta: f64, rng: &mut R) -> Result<Vec<f64>> {
    check_betaprime(d, beta)?;
    let u = gaussian_direction(d, rng);
    let g1 = Gamma::new(d as f64 / 2.0, 1.0).map_err(|e| Error::Numeric(e.to_string()))?;
    let g2 = Gamma::new(beta - d as f64 / 2.0, 1.0).map_err(|e| Error::Numeric(e.to_string()))?;
    let r = (g1.sample(rng) / g2.sample(rng)).sqrt();
    Ok(u.into_iter().map(|x| r * x).collect())
}

pub fn sample_point<R: Rng + ?Sized>(family: Family, d: usize, beta: f64, rng: &mut R) -> Result<Vec<f64>> {
    match family {
        Family::Beta => sample_beta_point(d, beta, rng),
        Family::BetaPrime => sample_betaprime_point(d, beta, rng),
    }
}

/// n points in R^(n-1) together with the inverse of the barycentric system.
pub struct SimplexSample {
    pub points: Vec<Vec<f64>>,
    /// Inverse of the n x n matrix with columns (X_j, 1).
    barycentric: DMatrix<f64>,
}

impl SimplexSample {
    pub fn draw<R: Rng + ?Sized>(family: Family, n: usize, beta: f64, rng: &mut R) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain("a simplex sample needs n >= 2".into()));
        }
        let d = n - 1;
        for _ in 0..MAX_RESAMPLE {
            let points = (0..n).map(|_| sample_point(family, d, beta, rng)).collect::<Result<Vec<_>>>()?;
            let m = DMatrix::from_fn(n, n, |i, j| if i < d { points[j][i] } else { 1.0 });
            let sv = m.clone().singular_values();
            let (lo, hi) = (sv.min(), sv.max());
            if hi > 0.0 && lo / hi > MIN_CONDITIONING {
                if let Some(inv) = m.try_inverse() {
                    return Ok(SimplexSample { points, barycentric: inv });
                }
            }
        }
        Err(Error::Numeric(format!("no well-conditioned simplex after {MAX_RESAMPLE} draws")))
    }

    /// Barycentric velocity w of a direction u: u = sum w_j X_j with sum w_j = 0.
    pub fn barycentric_velocity(&self, u: &[f64]) -> Vec<f64> {
        let n = self.points.len();
        let rhs = DVector::from_fn(n, |i, _| if i < n - 1 { u[i] } else { 0.0 });
        (&self.barycentric * rhs).iter().copied().collect()
    }

    /// Is u in the tangent cone of the simplex at the face spanned by `face`?
    ///
    /// Moving from a relative-interior point of the face, only the
    /// barycentric coordinates outside the face start at zero, so u is
    /// feasible iff their velocities are nonnegative.
    pub fn in_tangent_cone(&self, face: &[usize], u: &[f64]) -> bool {
        let w = self.barycentric_velocity(u);
        w.iter().enumerate().all(|(j, &x)| x >= 0.0 || face.contains(&j))
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    (0..k).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64)
}

/// Estimate of the expected internal angle sum at k-vertex faces.
///
/// Every k-subset is handled at once: a direction lies in the tangent cone
/// at face S iff S contains all vertices with negative barycentric velocity,
/// so one direction contributes C(n - neg, k - neg) to the sum. Each trial is
/// one simplex averaged over `directions` Gaussian directions.
pub fn mc_angle_sum(
    family: Family,
    n: u32,
    k: u32,
    beta: f64,
    simplices: u64,
    directions: u64,
    seed: u64,
) -> Result<McEstimate> {
    if !(2..=7).contains(&n) {
        return Err(Error::Domain(format!("angle Monte Carlo supports 2 <= n <= 7, got {n}")));
    }
    if k < 1 || k > n {
        return Err(Error::Domain(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    if directions == 0 {
        return Err(Error::Domain("need at least one direction".into()));
    }
    match family {
        Family::Beta => check_beta(n as usize - 1, beta)?,
        Family::BetaPrime => check_betaprime(n as usize - 1, beta)?,
    }
    let (n, k) = (n as usize, k as usize);
    let samples = run_trials(simplices, seed, |rng| {
        let s = SimplexSample::draw(family, n, beta, rng)?;
        let mut total = 0.0;
        for _ in 0..directions {
            let u: Vec<f64> = (0..n - 1).map(|_| rng.sample(StandardNormal)).collect();
            let neg = s.barycentric_velocity(&u).iter().filter(|&&x| x < 0.0).count();
            if neg <= k {
                total += binomial(n - neg, k - neg);
            }
        }
        Ok(total / directions as f64)
    })?;
    Ok(McEstimate::from_samples(&samples, seed))
}

fn hull_estimate(family: Family, n: u32, beta: f64, trials: u64, seed: u64) -> Result<McEstimate> {
    if n < 3 {
        return Err(Error::Domain(format!("a planar hull needs n >= 3, got {n}")));
    }
    match family {
        Family::Beta => check_beta(2, beta)?,
        Family::BetaPrime => check_betaprime(2, beta)?,
    }
    let samples = run_trials(trials, seed, |rng| {
        let pts = (0..n)
            .map(|_| sample_point(family, 2, beta, rng).map(|p| [p[0], p[1]]))
            .collect::<Result<Vec<_>>>()?;
        Ok(convex_hull_2d(&pts).len() as f64)
    })?;
    Ok(McEstimate::from_samples(&samples, seed))
}

/// Expected number of vertices of the convex hull of n beta points in the plane.
pub fn mc_beta_hull_2d(n: u32, beta: f64, trials: u64, seed: u64) -> Result<McEstimate> {
    hull_estimate(Family::Beta, n, beta, trials, seed)
}

/// Same for beta' points.
pub fn mc_betaprime_hull_2d(n: u32, beta: f64, trials: u64, seed: u64) -> Result<McEstimate> {
    hull_estimate(Family::BetaPrime, n, beta, trials, seed)
}

/// Expected vertex count of the planar typical Poisson-Voronoi cell, intensity 1.
pub fn mc_voronoi_2d(window_radius: f64, trials: u64, seed: u64) -> Result<McEstimate> {
    mc_voronoi_2d_with_intensity(window_radius, 1.0, trials, seed)
}

const MAX_WINDOW_DOUBLINGS: u32 = 8;

/// Poisson points in the annulus inner < |x| < outer.
fn poisson_annulus<R: Rng + ?Sized>(intensity: f64, inner: f64, outer: f64, rng: &mut R, out: &mut Vec<[f64; 2]>) -> Result<()> {
    let mean = intensity * std::f64::consts::PI * (outer * outer - inner * inner);
    let count = Poisson::new(mean).map_err(|e| Error::Numeric(e.to_string()))?.sample(rng) as usize;
    for _ in 0..count {
        let r = (inner * inner + (outer * outer - inner * inner) * rng.gen::<f64>()).sqrt();
        let t = std::f64::consts::TAU * rng.gen::<f64>();
        out.push([r * t.cos(), r * t.sin()]);
    }
    Ok(())
}

/// Cell of the origin among Poisson points of the given intensity in a disk.
/// The cell is final once it lies inside half the window radius, since
/// points farther out have bisectors that cannot reach it. Otherwise the same
/// realization is extended to a window of twice the radius, so the retry does
/// not bias the cell law.
pub fn mc_voronoi_2d_with_intensity(window_radius: f64, intensity: f64, trials: u64, seed: u64) -> Result<McEstimate> {
    if !(window_radius > 0.0) || !(intensity > 0.0) {
        return Err(Error::Domain("window radius and intensity must be positive".into()));
    }
    let samples = run_trials(trials, seed, |rng| {
        let mut radius = window_radius;
        let mut pts = Vec::new();
        poisson_annulus(intensity, 0.0, radius, rng, &mut pts)?;
        for _ in 0..=MAX_WINDOW_DOUBLINGS {
            let cell = voronoi_cell_2d(&pts, radius);
            if cell.iter().all(|v| v[0].hypot(v[1]) <= radius / 2.0) {
                return Ok(cell.len() as f64);
            }
            poisson_annulus(intensity, radius, 2.0 * radius, rng, &mut pts)?;
            radius *= 2.0;
        }
        Err(Error::Numeric(format!(
            "Voronoi cell escaped the window after {MAX_WINDOW_DOUBLINGS} doublings"
        )))
    })?;
    Ok(McEstimate::from_samples(&samples, seed))
}

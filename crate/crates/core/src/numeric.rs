//! Numerical check of the Maurer-Cartan identity on `GL_n(ℝ)`:
//! for `Θ(δg) = g⁻¹δg`, `dΘ(v, w) = [Θ(w), Θ(v)]`.
//!
//! `dΘ(v, w) = ∂_v(Θ(w)) - ∂_w(Θ(v))` is approximated by central
//! differences, so the error is `O(h²)`. Also holds the exact `k = 1` sign
//! check tying the algebraic coboundary to the same identity.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::complex::d_apply;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::forms::ExteriorForm;
use crate::lie::LieAlgebra;

pub const DEFAULT_TOLERANCE: f64 = 1e-6;
pub const DEFAULT_STEP: f64 = 1e-4;
pub const DEFAULT_DET_THRESHOLD: f64 = 1e-8;

/// An invertible real `n × n` matrix.
#[derive(Clone, Debug)]
pub struct MatrixGroupPoint {
    g: DMatrix<f64>,
    inverse: DMatrix<f64>,
}

impl MatrixGroupPoint {
    pub fn new(g: DMatrix<f64>) -> Result<Self> {
        Self::with_threshold(g, DEFAULT_DET_THRESHOLD)
    }

    /// Rejects `g` with `|det g| <= threshold`.
    pub fn with_threshold(g: DMatrix<f64>, threshold: f64) -> Result<Self> {
        if !g.is_square() || g.determinant().abs() <= threshold {
            return Err(Error::SingularMatrix);
        }
        let inverse = g.clone().try_inverse().ok_or(Error::SingularMatrix)?;
        Ok(MatrixGroupPoint { g, inverse })
    }

    pub fn identity(n: usize) -> Self {
        MatrixGroupPoint { g: DMatrix::identity(n, n), inverse: DMatrix::identity(n, n) }
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.g.nrows()
    }
}

/// `Θ_g(dg) = g⁻¹·dg`.
pub fn theta(g: &MatrixGroupPoint, dg: &DMatrix<f64>) -> DMatrix<f64> {
    &g.inverse * dg
}

fn theta_at(g: &DMatrix<f64>, dg: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let inv = g.clone().try_inverse().ok_or(Error::SingularMatrix)?;
    Ok(inv * dg)
}

/// `(numeric dΘ_g(v, w), [Θ_g(w), Θ_g(v)])` with central-difference step `h`.
pub fn maurer_cartan_pair(
    g: &MatrixGroupPoint,
    v: &DMatrix<f64>,
    w: &DMatrix<f64>,
    h: f64,
) -> Result<(DMatrix<f64>, DMatrix<f64>)> {
    let at = g.matrix();
    let directional = |dir: &DMatrix<f64>, arg: &DMatrix<f64>| -> Result<DMatrix<f64>> {
        let plus = theta_at(&(at + dir * h), arg)?;
        let minus = theta_at(&(at - dir * h), arg)?;
        Ok((plus - minus) / (2.0 * h))
    };
    let numeric = directional(v, w)? - directional(w, v)?;
    let tv = theta(g, v);
    let tw = theta(g, w);
    let exact = &tw * &tv - &tv * &tw;
    Ok((numeric, exact))
}

#[derive(Clone, Debug)]
pub struct McConfig {
    pub n: usize,
    pub samples: usize,
    pub tolerance: f64,
    pub step: f64,
    pub seed: u64,
    /// Sample points are `I + ε·R` with `R` uniform in `[-1, 1]`.
    pub epsilon: f64,
    pub det_threshold: f64,
}

impl McConfig {
    pub fn new(n: usize, seed: u64) -> Self {
        McConfig {
            n,
            samples: 100,
            tolerance: DEFAULT_TOLERANCE,
            step: DEFAULT_STEP,
            seed,
            epsilon: 0.1,
            det_threshold: DEFAULT_DET_THRESHOLD,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericCheckResult {
    pub max_abs_error: f64,
    pub step: f64,
    pub samples: usize,
    /// Near-singular draws that were rejected and redrawn.
    pub resampled: usize,
    pub pass: bool,
}

fn uniform_matrix(rng: &mut ChaCha8Rng, n: usize) -> DMatrix<f64> {
    DMatrix::from_fn(n, n, |_, _| rng.gen_range(-1.0..=1.0))
}

/// One sample: a point near the identity and two tangent directions.
/// Each sample owns a ChaCha stream keyed by its index, so results do not
/// depend on how samples are spread across threads.
fn draw_sample(config: &McConfig, index: usize) -> (MatrixGroupPoint, DMatrix<f64>, DMatrix<f64>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index as u64);
    let n = config.n;
    let mut rejected = 0;
    let g = loop {
        let candidate = DMatrix::identity(n, n) + uniform_matrix(&mut rng, n) * config.epsilon;
        match MatrixGroupPoint::with_threshold(candidate, config.det_threshold) {
            Ok(g) => break g,
            Err(_) => rejected += 1,
        }
    };
    let v = uniform_matrix(&mut rng, n);
    let w = uniform_matrix(&mut rng, n);
    (g, v, w, rejected)
}

fn max_errors(config: &McConfig, steps: &[f64]) -> Result<(Vec<f64>, usize)> {
    let per_sample: Vec<(Vec<f64>, usize)> = (0..config.samples)
        .into_par_iter()
        .map(|i| {
            let (g, v, w, rejected) = draw_sample(config, i);
            let errs = steps
                .iter()
                .map(|&h| {
                    let (numeric, exact) = maurer_cartan_pair(&g, &v, &w, h)?;
                    Ok((numeric - exact).amax())
                })
                .collect::<Result<Vec<f64>>>()?;
            Ok((errs, rejected))
        })
        .collect::<Result<_>>()?;
    let mut maxima = vec![0.0f64; steps.len()];
    let mut resampled = 0;
    for (errs, rejected) in per_sample {
        for (m, e) in maxima.iter_mut().zip(errs) {
            *m = m.max(e);
        }
        resampled += rejected;
    }
    Ok((maxima, resampled))
}

pub fn maurer_cartan_check(config: &McConfig) -> Result<NumericCheckResult> {
    if config.n == 0 || config.step <= 0.0 {
        return Err(Error::Verification("need n >= 1 and a positive step".into()));
    }
    let (maxima, resampled) = max_errors(config, &[config.step])?;
    let max_abs_error = maxima[0];
    Ok(NumericCheckResult {
        max_abs_error,
        step: config.step,
        samples: config.samples,
        resampled,
        pass: max_abs_error <= config.tolerance,
    })
}

/// Maximum error for each step in `steps`, over the same samples.
pub fn error_by_step(config: &McConfig, steps: &[f64]) -> Result<Vec<f64>> {
    Ok(max_errors(config, steps)?.0)
}

/// Steps `h₀, h₀/2, …` down to one decade below `h₀`.
pub fn halving_steps(start: f64) -> Vec<f64> {
    let mut steps = vec![start];
    while steps.last().unwrap() / 2.0 >= start / 10.0 {
        steps.push(steps.last().unwrap() / 2.0);
    }
    steps
}

/// Ratios `error(h) / error(h/2)` along [`halving_steps`].
pub fn convergence_ratios(config: &McConfig, start: f64) -> Result<Vec<f64>> {
    let errs = error_by_step(config, &halving_steps(start))?;
    Ok(errs.windows(2).map(|w| w[0] / w[1]).collect())
}

/// First `(m, i, j)` with `dθ^m(e_i, e_j) ≠ -θ^m([e_i, e_j])`, 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignCounterexample {
    pub m: usize,
    pub i: usize,
    pub j: usize,
    pub coboundary: Scalar,
    pub expected: Scalar,
}

/// Exact check of `dθ(Z₀, Z₁) = -θ([Z₀, Z₁])` on all basis 1-forms and pairs.
pub fn one_form_sign_check(alg: &LieAlgebra) -> Result<Option<SignCounterexample>> {
    let n = alg.dim();
    let field = alg.field();
    for m in 0..n {
        let d_theta = d_apply(alg, &ExteriorForm::theta(field, n, m)?)?;
        for i in 0..n {
            for j in 0..n {
                let args = [field.unit_vector(n, i), field.unit_vector(n, j)];
                let coboundary = d_theta.evaluate(&args)?;
                let expected = -&alg.bracket(&args[0], &args[1])?[m];
                if coboundary != expected {
                    return Ok(Some(SignCounterexample { m, i, j, coboundary, expected }));
                }
            }
        }
    }
    Ok(None)
}

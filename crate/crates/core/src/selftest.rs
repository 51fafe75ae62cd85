//! Deterministic property suites over the catalog.
//!
//! Output contains no timings and is independent of thread scheduling, so a
//! fixed seed gives byte-identical reports.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog::{self, CatalogEntry};
use crate::complex::{ce_differential, leibniz_check};
use crate::error::Result;
use crate::field::{Field, Scalar, Vector};
use crate::forms::{binomial, shuffle_eval, ExteriorForm};
use crate::lie::{quotient_algebra, LieAlgebra, Subspace};
use crate::numeric::{self, convergence_ratios, maurer_cartan_check, McConfig};
use crate::pipeline::{chain_iso_check, dense_quotient_cohomology, PipelineOptions};

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const SHUFFLE_INSTANCES: usize = 1000;
pub const LEIBNIZ_MAX_DIM: usize = 6;
/// Start of the step-halving sequence for the convergence-order check.
pub const RATIO_START_STEP: f64 = 1e-3;
pub const RATIO_BOUNDS: (f64, f64) = (3.0, 5.0);

#[derive(Clone, Debug)]
pub struct SelftestConfig {
    pub seed: u64,
    pub tolerance: f64,
    pub step: f64,
    pub samples: usize,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            seed: DEFAULT_SEED,
            tolerance: numeric::DEFAULT_TOLERANCE,
            step: numeric::DEFAULT_STEP,
            samples: 100,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{:<16} {status}  {}", self.name, self.detail)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SelftestReport {
    pub suites: Vec<SuiteResult>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed)
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }
}

impl fmt::Display for SelftestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            writeln!(f, "{s}")?;
        }
        let failed = self.suites.iter().filter(|s| !s.passed).count();
        write!(f, "selftest: {} suites, {failed} failed", self.suites.len())
    }
}

fn suite(name: &'static str, outcome: Result<std::result::Result<String, String>>) -> SuiteResult {
    match outcome {
        Ok(Ok(detail)) => SuiteResult { name, passed: true, detail },
        Ok(Err(detail)) => SuiteResult { name, passed: false, detail },
        Err(e) => SuiteResult { name, passed: false, detail: format!("error: {e}") },
    }
}

/// Catalog algebras, abelian algebras up to [`LEIBNIZ_MAX_DIM`], and the
/// quotient algebras of the catalog pairs.
pub fn suite_algebras() -> Vec<LieAlgebra> {
    let mut out: Vec<LieAlgebra> = Vec::new();
    let mut push = |a: LieAlgebra| {
        if !out.contains(&a) {
            out.push(a);
        }
    };
    for e in catalog::entries() {
        push(e.algebra.clone());
        if let Some(h) = &e.ideal {
            push(quotient_algebra(&e.algebra, h).expect("catalog ideals are ideals").quotient);
        }
    }
    for n in 0..=LEIBNIZ_MAX_DIM {
        push(catalog::abelian(n));
    }
    out
}

/// Catalog `(algebra, ideal)` pairs plus zero, full and center ideals.
pub fn suite_pairs() -> Vec<(LieAlgebra, Subspace)> {
    let mut pairs: Vec<(LieAlgebra, Subspace)> =
        catalog::entries().iter().map(|e| (e.algebra.clone(), e.ideal_or_zero())).collect();
    for alg in [catalog::so3(), catalog::sl2(), catalog::heisenberg3(), catalog::abelian(4)] {
        pairs.push((alg.clone(), Subspace::zero(alg.field(), alg.dim())));
        pairs.push((alg.clone(), Subspace::full(alg.field(), alg.dim())));
    }
    let f = Field::Rational;
    let center = Subspace::new(&f, 3, vec![f.unit_vector(3, 2)]).expect("one vector");
    pairs.push((catalog::heisenberg3(), center));
    let plane = Subspace::new(&f, 4, vec![f.unit_vector(4, 0), f.unit_vector(4, 2)]).expect("independent");
    pairs.push((catalog::abelian(4), plane));
    pairs
}

pub fn d_squared_suite(algebras: &[LieAlgebra]) -> SuiteResult {
    let run = || -> Result<std::result::Result<String, String>> {
        let mut products = 0;
        for alg in algebras {
            for k in 0..alg.dim().saturating_sub(1) {
                let lower = ce_differential(alg, k)?.matrix;
                let upper = ce_differential(alg, k + 1)?.matrix;
                if !upper.mul(&lower)?.is_zero() {
                    return Ok(Err(format!("{}: d_{} d_{k} != 0", alg.name(), k + 1)));
                }
                products += 1;
            }
        }
        Ok(Ok(format!("{} algebras, {products} products zero", algebras.len())))
    };
    suite("d_squared", run())
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(-5i64..=5)), BigInt::from(rng.gen_range(1i64..=4)))
}

fn random_scalar(rng: &mut ChaCha8Rng, field: &Field) -> Scalar {
    let c = field.from_rational(random_rational(rng));
    match field.indeterminate() {
        Some(a) => &c + &(&field.from_rational(random_rational(rng)) * &a),
        None => c,
    }
}

fn random_vector(rng: &mut ChaCha8Rng, field: &Field, n: usize) -> Vector {
    (0..n).map(|_| random_scalar(rng, field)).collect()
}

fn random_form(rng: &mut ChaCha8Rng, field: &Field, n: usize, k: usize) -> Result<ExteriorForm> {
    let coeffs: Vector = (0..binomial(n, k))
        .map(|_| if rng.gen_bool(0.3) { field.zero() } else { random_scalar(rng, field) })
        .collect();
    ExteriorForm::from_dense(field, n, k, &coeffs)
}

/// Every tenth instance is over `ℚ(a)`.
pub fn shuffle_suite(seed: u64, instances: usize) -> SuiteResult {
    let run = || -> Result<std::result::Result<String, String>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let function_field = Field::rational_function("a");
        for t in 0..instances {
            let field = if t % 10 == 9 { function_field.clone() } else { Field::Rational };
            let n = rng.gen_range(2..=5);
            let m = rng.gen_range(0..=n - 2);
            let alpha = random_form(&mut rng, &field, n, 2)?;
            let beta = random_form(&mut rng, &field, n, m)?;
            let args: Vec<Vector> = (0..m + 2).map(|_| random_vector(&mut rng, &field, n)).collect();
            let direct = alpha.wedge(&beta)?.evaluate(&args)?;
            let shuffled = shuffle_eval(&alpha, &beta, &args)?;
            if direct != shuffled {
                return Ok(Err(format!("instance {t}: wedge gives {direct}, shuffle gives {shuffled}")));
            }
        }
        Ok(Ok(format!("{instances} random instances, n <= 5, seed {seed}")))
    };
    suite("shuffle", run())
}

fn ordered_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn extend(n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in 0..n {
            if !current.contains(&i) {
                current.push(i);
                extend(n, k, current, out);
                current.pop();
            }
        }
    }
    extend(n, k, &mut current, &mut out);
    out
}

/// All ordered tuples of distinct basis 1-forms, lengths `1..=n`.
pub fn leibniz_suite(algebras: &[LieAlgebra]) -> SuiteResult {
    let run = || -> Result<std::result::Result<String, String>> {
        let mut checked = 0usize;
        for alg in algebras.iter().filter(|a| a.dim() <= LEIBNIZ_MAX_DIM) {
            let n = alg.dim();
            let thetas: Vec<ExteriorForm> =
                (0..n).map(|i| ExteriorForm::theta(alg.field(), n, i)).collect::<Result<_>>()?;
            for k in 1..=n {
                for t in ordered_tuples(n, k) {
                    let forms: Vec<ExteriorForm> = t.iter().map(|&i| thetas[i].clone()).collect();
                    if let Some(residual) = leibniz_check(alg, &forms)? {
                        let idx: Vec<usize> = t.iter().map(|i| i + 1).collect();
                        return Ok(Err(format!("{}: tuple {idx:?} leaves {residual}", alg.name())));
                    }
                    checked += 1;
                }
            }
        }
        Ok(Ok(format!("{checked} tuples of basis 1-forms, n <= {LEIBNIZ_MAX_DIM}")))
    };
    suite("leibniz", run())
}

pub fn chain_iso_suite(pairs: &[(LieAlgebra, Subspace)]) -> SuiteResult {
    let run = || -> Result<std::result::Result<String, String>> {
        for (alg, h) in pairs {
            if let Some(bad) = chain_iso_check(alg, h)? {
                return Ok(Err(format!("{} mod {}-dim ideal: {bad}", alg.name(), h.dim())));
            }
        }
        Ok(Ok(format!("{} (algebra, ideal) pairs", pairs.len())))
    };
    suite("chain_iso", run())
}

pub fn maurer_cartan_suite(config: &SelftestConfig) -> SuiteResult {
    let run = || -> Result<std::result::Result<String, String>> {
        let mut parts = Vec::new();
        let mut ok = true;
        for n in 1..=3 {
            let mc = McConfig {
                samples: config.samples,
                tolerance: config.tolerance,
                step: config.step,
                ..McConfig::new(n, config.seed)
            };
            let r = maurer_cartan_check(&mc)?;
            let ratios = convergence_ratios(&mc, RATIO_START_STEP)?;
            let ratios_ok = ratios.iter().all(|r| (RATIO_BOUNDS.0..=RATIO_BOUNDS.1).contains(r));
            ok &= r.pass && ratios_ok;
            let shown: Vec<String> = ratios.iter().map(|r| format!("{r:.2}")).collect();
            parts.push(format!("n={n} max_err={:.3e} ratios=[{}]", r.max_abs_error, shown.join(",")));
        }
        let detail = format!(
            "{} samples, h={:e}, tol={:e}; {}",
            config.samples,
            config.step,
            config.tolerance,
            parts.join("; ")
        );
        Ok(if ok { Ok(detail) } else { Err(detail) })
    };
    suite("maurer_cartan", run())
}

pub fn one_form_sign_suite(algebras: &[LieAlgebra]) -> SuiteResult {
    let run = || -> Result<std::result::Result<String, String>> {
        for alg in algebras {
            if let Some(c) = numeric::one_form_sign_check(alg)? {
                return Ok(Err(format!(
                    "{}: dθ{}(e{}, e{}) = {} but -θ{}([e{}, e{}]) = {}",
                    alg.name(),
                    c.m + 1,
                    c.i + 1,
                    c.j + 1,
                    c.coboundary,
                    c.m + 1,
                    c.i + 1,
                    c.j + 1,
                    c.expected
                )));
            }
        }
        Ok(Ok(format!("{} algebras", algebras.len())))
    };
    suite("one_form_sign", run())
}

pub fn catalog_suite(entries: &[CatalogEntry]) -> SuiteResult {
    let run = || -> Result<std::result::Result<String, String>> {
        let options = PipelineOptions::default();
        let mut found = Vec::new();
        for e in entries {
            let r = dense_quotient_cohomology(&e.pipeline_input(), &options)?;
            if r.report.betti != e.expected_betti {
                return Ok(Err(format!("{}: betti {:?}, expected {:?}", e.key, r.report.betti, e.expected_betti)));
            }
            found.push((e.key.as_str(), r.report.betti));
        }
        let so3 = found.iter().find(|(k, _)| *k == "so3").map(|(_, b)| b);
        let sl2 = found.iter().find(|(k, _)| *k == "sl2").map(|(_, b)| b);
        if so3 != sl2 {
            return Ok(Err(format!("so3 {so3:?} and sl2 {sl2:?} differ")));
        }
        Ok(Ok(format!("{} entries match expected betti", entries.len())))
    };
    suite("catalog_betti", run())
}

pub fn run_all(config: &SelftestConfig) -> SelftestReport {
    let algebras = suite_algebras();
    SelftestReport {
        suites: vec![
            d_squared_suite(&algebras),
            shuffle_suite(config.seed, SHUFFLE_INSTANCES),
            leibniz_suite(&algebras),
            chain_iso_suite(&suite_pairs()),
            maurer_cartan_suite(config),
            one_form_sign_suite(&algebras),
            catalog_suite(&catalog::entries()),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordered_tuple_counts() {
        assert_eq!(ordered_tuples(3, 2).len(), 6);
        assert_eq!(ordered_tuples(4, 4).len(), 24);
        assert_eq!(ordered_tuples(2, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn small_shuffle_run() {
        assert!(shuffle_suite(1, 50).passed);
    }

    #[test]
    fn tight_tolerance_fails_maurer_cartan() {
        let config = SelftestConfig { tolerance: 1e-15, samples: 10, ..SelftestConfig::default() };
        assert!(!maurer_cartan_suite(&config).passed);
    }
}

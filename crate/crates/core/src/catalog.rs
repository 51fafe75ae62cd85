//! Built-in example algebras and quotients.

use crate::field::{Field, Scalar};
use crate::lie::{torus_ideal_from_directions, LieAlgebra, Subspace};
use crate::pipeline::DenseQuotientInput;

/// Dimension used for the bare `abelian_n` key.
pub const DEFAULT_ABELIAN_DIM: usize = 5;

pub const KEYS: [&str; 7] = [
    "abelian_n",
    "so3",
    "sl2",
    "heisenberg3",
    "torus2_alpha",
    "torus2_two_components",
    "quasitorus_R_mod_Lambda",
];

fn q(n: i64) -> Scalar {
    Field::Rational.from_int(n)
}

fn build(name: &str, dim: usize, constants: &[(usize, usize, usize, Scalar)]) -> LieAlgebra {
    LieAlgebra::from_constants(name, dim, &Field::Rational, constants).expect("catalog tables are well formed")
}

/// `[e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2`.
pub fn so3() -> LieAlgebra {
    build("so3", 3, &[(0, 1, 2, q(1)), (1, 2, 0, q(1)), (0, 2, 1, q(-1))])
}

/// Basis `(h, e, f)`: `[h,e] = 2e, [h,f] = -2f, [e,f] = h`.
pub fn sl2() -> LieAlgebra {
    build("sl2", 3, &[(0, 1, 1, q(2)), (0, 2, 2, q(-2)), (1, 2, 0, q(1))])
}

/// `[e1,e2] = e3`.
pub fn heisenberg3() -> LieAlgebra {
    build("heisenberg3", 3, &[(0, 1, 2, q(1))])
}

pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::abelian(format!("abelian{n}"), n, &Field::Rational)
}

/// `ℝ²` over `ℚ(a)` with the slope-`a` line as ideal.
fn torus_slope(name: &str) -> (LieAlgebra, Subspace) {
    let f = Field::rational_function("a");
    let dir = vec![f.one(), f.indeterminate().expect("function field")];
    let ideal = torus_ideal_from_directions(&f, 2, &[dir]).expect("one direction in dimension 2");
    (LieAlgebra::abelian(name, 2, &f), ideal)
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: String,
    pub algebra: LieAlgebra,
    pub ideal: Option<Subspace>,
    pub expected_betti: Vec<usize>,
    pub note: String,
}

impl CatalogEntry {
    fn plain(key: &str, algebra: LieAlgebra, betti: &[usize], note: &str) -> Self {
        CatalogEntry { key: key.into(), algebra, ideal: None, expected_betti: betti.to_vec(), note: note.into() }
    }

    fn quotient(key: &str, (algebra, ideal): (LieAlgebra, Subspace), betti: &[usize], note: &str) -> Self {
        CatalogEntry {
            key: key.into(),
            algebra,
            ideal: Some(ideal),
            expected_betti: betti.to_vec(),
            note: note.into(),
        }
    }

    /// The ideal, defaulting to zero (a discrete subgroup).
    pub fn ideal_or_zero(&self) -> Subspace {
        self.ideal.clone().unwrap_or_else(|| Subspace::zero(self.algebra.field(), self.algebra.dim()))
    }

    pub fn pipeline_input(&self) -> DenseQuotientInput {
        DenseQuotientInput { algebra: self.algebra.clone(), ideal: self.ideal_or_zero(), note: self.note.clone() }
    }

    /// Pipeline document when an ideal is present, algebra document otherwise.
    pub fn document_json(&self) -> String {
        match &self.ideal {
            Some(_) => crate::io::pipeline_to_json(&self.pipeline_input()),
            None => crate::io::algebra_to_json(&self.algebra),
        }
    }
}

fn binomial_row(n: usize) -> Vec<usize> {
    (0..=n).map(|k| crate::forms::binomial(n, k)).collect()
}

/// Looks up a key. Besides the listed keys, `abelian_<n>` selects the
/// abelian algebra of dimension `n`.
pub fn lookup(key: &str) -> Option<CatalogEntry> {
    let entry = match key {
        "abelian_n" => abelian_entry(key, DEFAULT_ABELIAN_DIM),
        "so3" => CatalogEntry::plain(key, so3(), &[1, 0, 0, 1], "compact simple; quotient by a countable subgroup"),
        "sl2" => CatalogEntry::plain(key, sl2(), &[1, 0, 0, 1], "split real form of the complex simple algebra"),
        "heisenberg3" => CatalogEntry::plain(key, heisenberg3(), &[1, 2, 2, 1], "three-dimensional nilpotent"),
        "torus2_alpha" => CatalogEntry::quotient(
            key,
            torus_slope("R2"),
            &[1, 1],
            "2-torus modulo the dense line of irrational slope a; quotient is R/(Z + aZ)",
        ),
        "torus2_two_components" => CatalogEntry::quotient(
            key,
            torus_slope("R2"),
            &[1, 1],
            "dense subgroup with two components H+ and H-, yet connected; same Lie algebra and cohomology as torus2_alpha",
        ),
        "quasitorus_R_mod_Lambda" => CatalogEntry::quotient(
            key,
            (abelian(1).with_name("R"), Subspace::zero(&Field::Rational, 1)),
            &[1, 1],
            "R modulo a countable dense subgroup; its Lie algebra is zero",
        ),
        _ => {
            let n: usize = key.strip_prefix("abelian_")?.parse().ok()?;
            abelian_entry(key, n)
        }
    };
    Some(entry)
}

fn abelian_entry(key: &str, n: usize) -> CatalogEntry {
    CatalogEntry::plain(key, abelian(n), &binomial_row(n), "abelian; cohomology is the full exterior algebra")
}

/// One entry per key in [`KEYS`].
pub fn entries() -> Vec<CatalogEntry> {
    KEYS.iter().map(|k| lookup(k).expect("listed keys resolve")).collect()
}

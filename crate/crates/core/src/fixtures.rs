//! Shipped example algebras, modules, star structures, Gram matrices and
//! R-matrices.

use std::sync::Arc;

use crate::braid::{verify_quasitriangular, RMatrix};
use crate::hmod::{verify_module, HModule};
use crate::hopf::{verify_hopf_star, HopfAlgebra};
use crate::inner::verify_inner_product;
use crate::linalg::{unit_vector, Matrix};
use crate::scalar::Scalar;
use crate::staralg::verify_star_module;

/// `C` as a one-dimensional Hopf *-algebra over `Q(i)`.
pub fn trivial_algebra() -> HopfAlgebra {
    HopfAlgebra {
        dim: 1,
        mult: vec![vec![vec![Scalar::one()]]],
        unit: vec![Scalar::one()],
        coprod: vec![vec![(Scalar::one(), 0, 0)]],
        counit: vec![Scalar::one()],
        antipode: Matrix::identity(1),
        star: Matrix::identity(1),
        scalar_order: 4,
    }
}

/// Group algebra of `Z/n` with basis `g^0, ..., g^{n-1}`, grouplike
/// coproduct and `(g^k)* = g^{-k}`.
pub fn cyclic_group_algebra(n: usize) -> HopfAlgebra {
    assert!(n >= 1, "cyclic group of order 0");
    let inverse: Vec<usize> = (0..n).map(|k| (n - k) % n).collect();
    HopfAlgebra {
        dim: n,
        mult: (0..n)
            .map(|i| (0..n).map(|j| unit_vector(n, (i + j) % n)).collect())
            .collect(),
        unit: unit_vector(n, 0),
        coprod: (0..n).map(|k| vec![(Scalar::one(), k, k)]).collect(),
        counit: vec![Scalar::one(); n],
        antipode: Matrix::permutation(&inverse),
        star: Matrix::permutation(&inverse),
        scalar_order: n as u32,
    }
}

/// Index of `g^a x^b` in the Sweedler basis `1, g, x, gx`.
pub fn sweedler_index(a: usize, b: usize) -> usize {
    (a % 2) + 2 * b
}

/// Sweedler's four-dimensional Hopf algebra: `g² = 1`, `x² = 0`,
/// `xg = -gx`, `Δg = g⊗g`, `Δx = x⊗1 + g⊗x`, `S(x) = -gx`, with the
/// *-structure `g* = g`, `x* = x`.
pub fn sweedler_algebra() -> HopfAlgebra {
    let word = |i: usize| (i % 2, i / 2);
    let mut mult = vec![vec![vec![Scalar::zero(); 4]; 4]; 4];
    for (i, row) in mult.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let (a1, b1) = word(i);
            let (a2, b2) = word(j);
            if b1 + b2 > 1 {
                continue;
            }
            // x^b1 g^a2 = (-1)^{b1·a2} g^a2 x^b1.
            let sign = if b1 * a2 == 1 { -1 } else { 1 };
            cell[sweedler_index(a1 + a2, b1 + b2)] = Scalar::from_int(sign);
        }
    }
    let one = Scalar::one;
    let coprod = vec![
        vec![(one(), 0, 0)],
        vec![(one(), 1, 1)],
        vec![(one(), 2, 0), (one(), 1, 2)],
        vec![(one(), 3, 1), (one(), 0, 3)],
    ];
    HopfAlgebra {
        dim: 4,
        mult,
        unit: unit_vector(4, 0),
        coprod,
        counit: vec![one(), one(), Scalar::zero(), Scalar::zero()],
        antipode: Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]),
        star: Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]]),
        scalar_order: 1,
    }
}

/// `g^a x^b` coefficients of Sweedler's `R_λ`:
/// `½(1⊗1 + 1⊗g + g⊗1 - g⊗g) + λ/2(x⊗x - x⊗gx + gx⊗gx + gx⊗x)`.
pub fn sweedler_r(lambda: &Scalar) -> (Matrix, Matrix) {
    let half = Scalar::from_ratio(1, 2);
    let l = lambda * &half;
    let mut r = Matrix::zeros(4, 4);
    for (i, j, s) in [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, -1)] {
        r.set(i, j, &half * &Scalar::from_int(s));
    }
    let mut inv = r.clone();
    for (i, j, s) in [(2, 2, 1), (2, 3, -1), (3, 3, 1), (3, 2, 1)] {
        r.set(i, j, &l * &Scalar::from_int(s));
    }
    for (i, j, s) in [(2, 2, 1), (2, 3, 1), (3, 2, -1), (3, 3, 1)] {
        inv.set(i, j, &l * &Scalar::from_int(s));
    }
    (r, inv)
}

/// `(1/n)·Σ ζ^{∓ab} g^a⊗g^b` for `Z/n`: the R-matrix and its inverse.
pub fn cyclic_fourier_r(n: usize) -> (Matrix, Matrix) {
    let scale = Scalar::from_ratio(1, n as i64);
    let entry = |sign: i64| Matrix::from_fn(n, n, |a, b| &scale * &Scalar::zeta(n as u32, sign * (a * b) as i64));
    (entry(-1), entry(1))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FixtureError {
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("fixture `{name}` failed verification: {reason}")]
    Invalid { name: String, reason: String },
}

/// A module with its known star structure and invariant inner product.
#[derive(Debug, Clone)]
pub struct NamedModule {
    pub name: String,
    pub module: HModule,
    pub star: Option<Matrix>,
    pub gram: Option<Matrix>,
}

#[derive(Debug, Clone)]
pub struct NamedR {
    pub name: String,
    pub r: RMatrix,
}

/// An algebra with its curated modules and R-matrices.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub algebra: Arc<HopfAlgebra>,
    pub modules: Vec<NamedModule>,
    pub r_matrices: Vec<NamedR>,
}

impl Fixture {
    pub fn module(&self, name: &str) -> Option<&NamedModule> {
        self.modules.iter().find(|m| m.name == name)
    }

    pub fn plain_modules(&self) -> Vec<HModule> {
        self.modules.iter().map(|m| m.module.clone()).collect()
    }
}

/// The names accepted by [`fixture`], one per shipped file set.
pub const SHIPPED: [&str; 7] = [
    "trivial",
    "group_z2",
    "group_z3",
    "group_z4",
    "sweedler(0)",
    "sweedler(1)",
    "sweedler(-2)",
];

fn scalar_matrix(h: &Arc<HopfAlgebra>, images: Vec<Matrix>) -> HModule {
    HModule::new(h.clone(), images).expect("fixture action shapes")
}

fn one_by_one(s: Scalar) -> Matrix {
    Matrix::from_rows(vec![vec![s]], 1)
}

fn named(name: &str, module: HModule, star: Option<Matrix>, gram: Option<Matrix>) -> NamedModule {
    NamedModule {
        name: name.to_string(),
        module,
        star,
        gram,
    }
}

fn trivial_fixture() -> Fixture {
    let h = Arc::new(trivial_algebra());
    let modules = vec![
        named(
            "ground",
            scalar_matrix(&h, vec![Matrix::identity(1)]),
            Some(Matrix::identity(1)),
            Some(Matrix::identity(1)),
        ),
        named(
            "ground_twisted",
            scalar_matrix(&h, vec![Matrix::identity(1)]),
            Some(one_by_one(Scalar::i())),
            Some(Matrix::identity(1)),
        ),
        named(
            "plane",
            scalar_matrix(&h, vec![Matrix::identity(2)]),
            Some(Matrix::identity(2)),
            Some(Matrix::identity(2)),
        ),
    ];
    let r = RMatrix::new(h.clone(), Matrix::identity(1), Some(Matrix::identity(1))).expect("1⊗1");
    Fixture {
        name: "trivial".to_string(),
        algebra: h,
        modules,
        r_matrices: vec![NamedR {
            name: "r_trivial".to_string(),
            r,
        }],
    }
}

fn cyclic_fixture(n: usize) -> Fixture {
    let h = Arc::new(cyclic_group_algebra(n));
    let mut modules = Vec::new();
    for j in 0..n {
        let action = (0..n)
            .map(|k| one_by_one(Scalar::zeta(n as u32, (j * k) as i64)))
            .collect();
        let name = match (n, j) {
            (_, 0) => "trivial".to_string(),
            (2, 1) => "sign".to_string(),
            _ => format!("chi{j}"),
        };
        let star = ((2 * j) % n == 0).then(|| Matrix::identity(1));
        modules.push(named(&name, scalar_matrix(&h, action), star, Some(Matrix::identity(1))));
    }
    let regular = (0..n)
        .map(|k| Matrix::permutation(&(0..n).map(|i| (i + k) % n).collect::<Vec<_>>()))
        .collect();
    modules.push(named(
        "regular",
        scalar_matrix(&h, regular),
        Some(Matrix::identity(n)),
        Some(Matrix::identity(n)),
    ));
    let unit = crate::hopf::outer(&h.unit, &h.unit);
    let (c, inv) = cyclic_fourier_r(n);
    let r_matrices = vec![
        NamedR {
            name: "r_trivial".to_string(),
            r: RMatrix::new(h.clone(), unit.clone(), Some(unit)).expect("1⊗1"),
        },
        NamedR {
            name: "r_fourier".to_string(),
            r: RMatrix::new(h.clone(), c, Some(inv)).expect("Fourier R-matrix"),
        },
    ];
    Fixture {
        name: format!("group_z{n}"),
        algebra: h,
        modules,
        r_matrices,
    }
}

/// Action of Sweedler's algebra given `ρ(g)` and `ρ(x)`.
pub fn sweedler_module(h: &Arc<HopfAlgebra>, g: Matrix, x: Matrix) -> HModule {
    let n = g.rows();
    let gx = &g * &x;
    scalar_matrix(h, vec![Matrix::identity(n), g, x, gx])
}

fn sweedler_fixture(lambda: &Scalar) -> Fixture {
    let h = Arc::new(sweedler_algebra());
    let m = |rows: &[&[i64]]| Matrix::from_ints(rows);
    let raise = m(&[&[0, 0], &[1, 0]]);
    let modules = vec![
        named(
            "trivial",
            sweedler_module(&h, m(&[&[1]]), m(&[&[0]])),
            Some(Matrix::identity(1)),
            Some(Matrix::identity(1)),
        ),
        named(
            "sign",
            sweedler_module(&h, m(&[&[-1]]), m(&[&[0]])),
            Some(Matrix::identity(1)),
            Some(Matrix::identity(1)),
        ),
        named(
            "p_plus",
            sweedler_module(&h, m(&[&[1, 0], &[0, -1]]), raise.clone()),
            Some(m(&[&[1, 0], &[0, -1]])),
            None,
        ),
        named(
            "p_minus",
            sweedler_module(&h, m(&[&[-1, 0], &[0, 1]]), raise),
            Some(Matrix::identity(2)),
            None,
        ),
        named(
            "trivial_sign",
            sweedler_module(&h, m(&[&[1, 0], &[0, -1]]), Matrix::zeros(2, 2)),
            Some(Matrix::identity(2)),
            Some(Matrix::identity(2)),
        ),
    ];
    let (c, inv) = sweedler_r(lambda);
    Fixture {
        name: format!("sweedler({lambda})"),
        algebra: h.clone(),
        modules,
        r_matrices: vec![NamedR {
            name: "r_lambda".to_string(),
            r: RMatrix::new(h, c, Some(inv)).expect("R_λ is invertible"),
        }],
    }
}

/// Parses `name(arg)` into its parts.
fn split_call(name: &str) -> Option<(&str, &str)> {
    let (head, rest) = name.split_once('(')?;
    Some((head.trim(), rest.strip_suffix(')')?.trim()))
}

/// Builds and re-verifies a named fixture: `trivial`, `group_z2`,
/// `group_z3`, `group_zn(n)` (also `group_z<n>`) or `sweedler(λ)` with a
/// rational `λ`.
pub fn fixture(name: &str) -> Result<Fixture, FixtureError> {
    let unknown = || FixtureError::UnknownFixture(name.to_string());
    let f = if name == "trivial" {
        trivial_fixture()
    } else if let Some((head, arg)) = split_call(name) {
        match head {
            "group_zn" => {
                let n: usize = arg.parse().map_err(|_| unknown())?;
                if n == 0 {
                    return Err(unknown());
                }
                cyclic_fixture(n)
            }
            "sweedler" => {
                let lambda: Scalar = arg.parse().map_err(|_| unknown())?;
                if lambda.order() != 1 {
                    return Err(unknown());
                }
                sweedler_fixture(&lambda)
            }
            _ => return Err(unknown()),
        }
    } else if let Some(n) = name.strip_prefix("group_z") {
        match n.parse::<usize>() {
            Ok(n) if n > 0 => cyclic_fixture(n),
            _ => return Err(unknown()),
        }
    } else {
        return Err(unknown());
    };
    verify_fixture(&f)?;
    Ok(f)
}

/// Full verification of every object in the bundle.
pub fn verify_fixture(f: &Fixture) -> Result<(), FixtureError> {
    let invalid = |reason: String| FixtureError::Invalid {
        name: f.name.clone(),
        reason,
    };
    let r = verify_hopf_star(&f.algebra).map_err(|e| invalid(e.to_string()))?;
    if !r.all_pass() {
        return Err(invalid(format!("algebra: {:?}", r.failed_names())));
    }
    for m in &f.modules {
        let r = verify_module(&m.module);
        if !r.all_pass() {
            return Err(invalid(format!("module {}: {:?}", m.name, r.failed_names())));
        }
        if let Some(d) = &m.star {
            let r = verify_star_module(&m.module, d);
            if !r.all_pass() {
                return Err(invalid(format!("star on {}: {:?}", m.name, r.failed_names())));
            }
        }
        if let Some(g) = &m.gram {
            let r = verify_inner_product(&m.module, g).map_err(|e| invalid(e.to_string()))?;
            if !r.all_pass() {
                return Err(invalid(format!("gram on {}: {:?}", m.name, r.failed_names())));
            }
        }
    }
    for nr in &f.r_matrices {
        let r = verify_quasitriangular(&nr.r);
        if !r.all_pass() {
            return Err(invalid(format!("{}: {:?}", nr.name, r.failed_names())));
        }
    }
    Ok(())
}

/// Which table a mutation overwrites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MutatedTable {
    Antipode,
    Star,
}

/// A single overwritten entry of a verified algebra and the one axiom it
/// should break.
#[derive(Debug, Clone)]
pub struct Mutation {
    pub fixture: &'static str,
    pub table: MutatedTable,
    pub row: usize,
    pub col: usize,
    pub value: Scalar,
    pub target: &'static str,
}

impl Mutation {
    pub fn label(&self) -> String {
        let t = match self.table {
            MutatedTable::Antipode => "antipode",
            MutatedTable::Star => "star",
        };
        format!("{} {t}[{}][{}] := {}", self.fixture, self.row, self.col, self.value)
    }

    pub fn apply(&self, h: &HopfAlgebra) -> HopfAlgebra {
        let mut m = h.clone();
        match self.table {
            MutatedTable::Antipode => m.antipode.set(self.row, self.col, self.value.clone()),
            MutatedTable::Star => m.star.set(self.row, self.col, self.value.clone()),
        }
        m
    }
}

/// Ten single-entry mutations, each failing exactly one axiom.
///
/// Only the antipode and star axioms can be isolated this way: every entry
/// of the unit, product, coproduct or counit also feeds the antipode
/// identity `m(S⊗id)Δ = ε·1`, so breaking one of those always breaks two
/// axioms. Derived identities (`counit-star`, `star-antipode`) may fail
/// alongside a star mutation.
pub fn curated_mutations() -> Vec<Mutation> {
    use MutatedTable::{Antipode, Star};
    let m = |fixture, table, row, col, value: i64, target| Mutation {
        fixture,
        table,
        row,
        col,
        value: Scalar::from_int(value),
        target,
    };
    // x* = ix keeps x** = x but breaks (gx)* = x*g*.
    let x_star_ix = Mutation {
        value: Scalar::i(),
        ..m("sweedler(1)", Star, 2, 2, 0, "star-antimult")
    };
    vec![
        m("trivial", Antipode, 0, 0, -1, "antipode"),
        m("trivial", Star, 0, 0, 0, "star-involution"),
        m("group_z2", Antipode, 1, 1, -1, "antipode"),
        // g* = -g
        m("group_z2", Star, 1, 1, -1, "star-coprod"),
        m("group_z3", Antipode, 1, 2, -1, "antipode"),
        m("sweedler(0)", Antipode, 0, 0, -1, "antipode"),
        m("sweedler(1)", Antipode, 1, 1, -1, "antipode"),
        x_star_ix,
        m("sweedler(0)", Star, 3, 3, 1, "star-antimult"),
        m("sweedler(1)", Star, 3, 1, 1, "star-coprod"),
    ]
}

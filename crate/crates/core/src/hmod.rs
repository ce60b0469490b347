//! Finite-dimensional modules over a Hopf *-algebra, given by the action
//! matrices of the basis elements.
//!
//! Basis conventions: `V⊗W` is indexed lexicographically, `(p, q) ↦ p·n_W + q`;
//! duals use the dual basis; `Hom(V, W)` uses row-major elementary matrices,
//! `E_{rc} ↦ r·n_V + c`.

use std::sync::Arc;

use crate::hopf::{HopfAlgebra, HopfError};
use crate::linalg::{same_span, unit_vector, Matrix, Vector};
use crate::report::{Report, Witness};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModuleError {
    #[error("modules over different algebras")]
    AlgebraMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a module map: {0}")]
    NotModuleMap(String),
    #[error("S² is not conjugation by the given element: {0}")]
    NotInner(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
}

#[derive(Debug, Clone)]
pub struct HModule {
    pub algebra: Arc<HopfAlgebra>,
    pub dim: usize,
    /// `action[i]` is `ρ(e_i)`.
    pub action: Vec<Matrix>,
}

impl PartialEq for HModule {
    fn eq(&self, other: &HModule) -> bool {
        same_algebra(self, other) && self.dim == other.dim && self.action == other.action
    }
}

/// Whether two modules are over the same algebra.
pub fn same_algebra(v: &HModule, w: &HModule) -> bool {
    Arc::ptr_eq(&v.algebra, &w.algebra) || v.algebra == w.algebra
}

fn require_same(v: &HModule, w: &HModule) -> Result<(), ModuleError> {
    if same_algebra(v, w) {
        Ok(())
    } else {
        Err(ModuleError::AlgebraMismatch)
    }
}

impl HModule {
    pub fn new(algebra: Arc<HopfAlgebra>, action: Vec<Matrix>) -> Result<HModule, ModuleError> {
        if action.len() != algebra.dim {
            return Err(ModuleError::DimensionMismatch(format!(
                "{} action matrices for a {}-dimensional algebra",
                action.len(),
                algebra.dim
            )));
        }
        let dim = action.first().map_or(0, Matrix::rows);
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(ModuleError::DimensionMismatch(
                "action matrices must all be n×n".to_string(),
            ));
        }
        Ok(HModule { algebra, dim, action })
    }

    /// `ρ(a)` for an arbitrary element `a`.
    pub fn rho(&self, a: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                out = &out + &self.action[i].scale(c);
            }
        }
        out
    }

    /// The action of `x ∈ H⊗H` on `V⊗W`: `Σ x_ij ρ_V(e_i)⊗ρ_W(e_j)`.
    pub fn rho2(v: &HModule, w: &HModule, x: &Matrix) -> Matrix {
        let d = v.algebra.dim;
        let mut out = Matrix::zeros(v.dim * w.dim, v.dim * w.dim);
        for i in 0..d {
            for j in 0..d {
                let c = x.get(i, j);
                if !c.is_zero() {
                    out = &out + &v.action[i].kron(&w.action[j]).scale(c);
                }
            }
        }
        out
    }
}

/// A linear map between modules, asserted or checked to intertwine.
#[derive(Debug, Clone)]
pub struct ModuleMap {
    pub domain: HModule,
    pub codomain: HModule,
    pub matrix: Matrix,
}

impl ModuleMap {
    pub fn new(domain: HModule, codomain: HModule, matrix: Matrix) -> Result<ModuleMap, ModuleError> {
        require_same(&domain, &codomain)?;
        if (matrix.rows(), matrix.cols()) != (codomain.dim, domain.dim) {
            return Err(ModuleError::DimensionMismatch(format!(
                "{}x{} matrix between modules of dimensions {} and {}",
                matrix.rows(),
                matrix.cols(),
                domain.dim,
                codomain.dim
            )));
        }
        Ok(ModuleMap {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn is_module_map(&self) -> bool {
        is_module_map(&self.matrix, &self.domain, &self.codomain)
    }

    /// Records the intertwining check under `name`.
    pub fn check(&self, r: &mut Report, name: &str) -> bool {
        check_module_map(r, name, &self.matrix, &self.domain, &self.codomain)
    }
}

/// `T·ρ_V(e_i) = ρ_W(e_i)·T` for every basis element.
pub fn is_module_map(t: &Matrix, v: &HModule, w: &HModule) -> bool {
    (t.rows(), t.cols()) == (w.dim, v.dim) && v.action.iter().zip(&w.action).all(|(a, b)| t * a == b * t)
}

/// Records whether `t` intertwines `v` and `w`, naming the first failing
/// basis element.
pub fn check_module_map(r: &mut Report, name: &str, t: &Matrix, v: &HModule, w: &HModule) -> bool {
    if (t.rows(), t.cols()) != (w.dim, v.dim) {
        r.fail(
            name,
            Witness::text(format!(
                "{}x{} matrix cannot map dimension {} to {}",
                t.rows(),
                t.cols(),
                v.dim,
                w.dim
            )),
        );
        return false;
    }
    for (i, (a, b)) in v.action.iter().zip(&w.action).enumerate() {
        let lhs = t * a;
        let rhs = b * t;
        if lhs != rhs {
            r.fail(name, Witness::with_diff(format!("T·ρ(e{i}) - ρ(e{i})·T"), &lhs - &rhs));
            return false;
        }
    }
    r.pass(name);
    true
}

/// Unit and multiplicativity of the action.
pub fn verify_module(v: &HModule) -> Report {
    let mut r = Report::new("module");
    let h = &v.algebra;
    let rho_one = v.rho(&h.unit);
    r.matrices_equal("unit", &rho_one, &Matrix::identity(v.dim));
    let mut ok = true;
    'outer: for i in 0..h.dim {
        for j in 0..h.dim {
            let lhs = v.rho(&h.mult[i][j]);
            let rhs = &v.action[i] * &v.action[j];
            if lhs != rhs {
                r.fail(
                    "multiplicativity",
                    Witness::with_diff(format!("ρ(e{i} e{j}) - ρ(e{i})ρ(e{j})"), &lhs - &rhs),
                );
                ok = false;
                break 'outer;
            }
        }
    }
    if ok {
        r.pass("multiplicativity");
    }
    r
}

/// The ground field with `a` acting as `ε(a)`.
pub fn trivial_module(h: &Arc<HopfAlgebra>) -> HModule {
    HModule {
        algebra: h.clone(),
        dim: 1,
        action: h
            .counit
            .iter()
            .map(|e| Matrix::from_rows(vec![vec![e.clone()]], 1))
            .collect(),
    }
}

/// `V⊗W` with `ρ(e_i) = Σ c·ρ_V(e_j)⊗ρ_W(e_k)` over the terms of `Δ(e_i)`.
pub fn tensor_module(v: &HModule, w: &HModule) -> Result<HModule, ModuleError> {
    require_same(v, w)?;
    let n = v.dim * w.dim;
    let action = v
        .algebra
        .coprod
        .iter()
        .map(|terms| {
            let mut m = Matrix::zeros(n, n);
            for (c, j, k) in terms {
                m = &m + &v.action[*j].kron(&w.action[*k]).scale(c);
            }
            m
        })
        .collect();
    Ok(HModule {
        algebra: v.algebra.clone(),
        dim: n,
        action,
    })
}

/// `V^{⊗n}`; `n = 0` gives the trivial module.
pub fn tensor_power(v: &HModule, n: usize) -> HModule {
    let mut out = trivial_module(&v.algebra);
    for k in 0..n {
        out = if k == 0 {
            v.clone()
        } else {
            tensor_module(&out, v).expect("same algebra")
        };
    }
    out
}

pub fn direct_sum(v: &HModule, w: &HModule) -> Result<HModule, ModuleError> {
    require_same(v, w)?;
    Ok(HModule {
        algebra: v.algebra.clone(),
        dim: v.dim + w.dim,
        action: v.action.iter().zip(&w.action).map(|(a, b)| a.direct_sum(b)).collect(),
    })
}

/// Left dual `V*`: `ρ*(e_i) = ρ(S(e_i))ᵀ`.
pub fn left_dual(v: &HModule) -> HModule {
    let s = &v.algebra.antipode;
    HModule {
        algebra: v.algebra.clone(),
        dim: v.dim,
        action: (0..v.algebra.dim).map(|i| v.rho(&s.column(i)).transpose()).collect(),
    }
}

/// Right dual `⋆V`: `ρ⋆(e_i) = ρ(S⁻¹(e_i))ᵀ`.
pub fn right_dual(v: &HModule) -> Result<HModule, ModuleError> {
    let s_inv = v.algebra.antipode_inverse()?;
    Ok(HModule {
        algebra: v.algebra.clone(),
        dim: v.dim,
        action: (0..v.algebra.dim)
            .map(|i| v.rho(&s_inv.column(i)).transpose())
            .collect(),
    })
}

/// Action on `Hom(V, W)` computed term by term from `Δ(e_i) = Σ c e_j⊗e_k`
/// as `T ↦ Σ c·f(j, k, T)`, one column per elementary matrix.
fn hom_action(v: &HModule, w: &HModule, f: impl Fn(usize, usize, &Matrix) -> Matrix) -> Vec<Matrix> {
    let h = &v.algebra;
    let d = h.dim;
    let n = w.dim * v.dim;
    (0..d)
        .map(|i| {
            let delta = h.iterated_coproduct(&h.basis(i), 2);
            let cols: Vec<Vector> = (0..n)
                .map(|idx| {
                    let e = Matrix::unvectorize(&unit_vector(n, idx), w.dim, v.dim);
                    let mut acc = Matrix::zeros(w.dim, v.dim);
                    for (t, c) in delta.iter().enumerate() {
                        if !c.is_zero() {
                            acc = &acc + &f(t / d, t % d, &e).scale(c);
                        }
                    }
                    acc.vectorize()
                })
                .collect();
            Matrix::from_columns(&cols, n)
        })
        .collect()
}

/// `Hom_ℓ(V, W)` with `a⊳T = a_(1)·T·S(a_(2))`.
pub fn hom_left(v: &HModule, w: &HModule) -> Result<HModule, ModuleError> {
    require_same(v, w)?;
    let s = &v.algebra.antipode;
    let action = hom_action(v, w, |j, k, t| &(&w.action[j] * t) * &v.rho(&s.column(k)));
    Ok(HModule {
        algebra: v.algebra.clone(),
        dim: w.dim * v.dim,
        action,
    })
}

/// `Hom_r(V, W)` with `a▶T = a_(2)·T·S⁻¹(a_(1))`.
pub fn hom_right(v: &HModule, w: &HModule) -> Result<HModule, ModuleError> {
    require_same(v, w)?;
    let s_inv = v.algebra.antipode_inverse()?;
    let action = hom_action(v, w, |j, k, t| &(&w.action[k] * t) * &v.rho(&s_inv.column(j)));
    Ok(HModule {
        algebra: v.algebra.clone(),
        dim: w.dim * v.dim,
        action,
    })
}

/// Basis of `{v : a⊳v = ε(a)v}`, from the kernel of the stacked system
/// `ρ(e_i) - ε_i·id`.
pub fn invariants(v: &HModule) -> Vec<Vector> {
    let h = &v.algebra;
    let mut stacked = Matrix::zeros(0, v.dim);
    for i in 0..h.dim {
        let block = &v.action[i] - &Matrix::identity(v.dim).scale(&h.counit[i]);
        stacked = stacked.vstack(&block);
    }
    stacked.kernel()
}

/// Basis of `Hom_H(V, W)`, solving `T·ρ_V(e_i) = ρ_W(e_i)·T` in row-major
/// coordinates.
pub fn intertwiners(v: &HModule, w: &HModule) -> Result<Vec<Matrix>, ModuleError> {
    require_same(v, w)?;
    // vec(T·A) = (I⊗Aᵀ)vec(T) and vec(B·T) = (B⊗I)vec(T) for row-major vec.
    let mut stacked = Matrix::zeros(0, w.dim * v.dim);
    for (a, b) in v.action.iter().zip(&w.action) {
        let block = &Matrix::identity(w.dim).kron(&a.transpose()) - &b.kron(&Matrix::identity(v.dim));
        stacked = stacked.vstack(&block);
    }
    Ok(stacked
        .kernel()
        .into_iter()
        .map(|x| Matrix::unvectorize(&x, w.dim, v.dim))
        .collect())
}

/// Compares `Hom_ℓ(V,W)^H`, `Hom_H(V,W)` and `Hom_r(V,W)^H` as subspaces.
pub fn check_hom_invariants(v: &HModule, w: &HModule) -> Result<Report, ModuleError> {
    let mut r = Report::new("hom invariants");
    let left = invariants(&hom_left(v, w)?);
    let right = invariants(&hom_right(v, w)?);
    let maps: Vec<Vector> = intertwiners(v, w)?.iter().map(Matrix::vectorize).collect();
    let n = v.dim * w.dim;
    r.note(format!(
        "dimensions: left invariants {}, intertwiners {}, right invariants {}",
        left.len(),
        maps.len(),
        right.len()
    ));
    r.record("left invariants = intertwiners", same_span(&left, &maps, n), || {
        Witness::text(format!("dimensions {} vs {}", left.len(), maps.len()))
    });
    r.record("right invariants = intertwiners", same_span(&right, &maps, n), || {
        Witness::text(format!("dimensions {} vs {}", right.len(), maps.len()))
    });
    r.record(
        "left invariants = right invariants",
        same_span(&left, &right, n),
        || Witness::text(format!("dimensions {} vs {}", left.len(), right.len())),
    );
    Ok(r)
}

/// Permutation taking `X⊗Y` to `Y⊗X` for dimensions `nx`, `ny`.
pub fn swap_matrix(nx: usize, ny: usize) -> Matrix {
    let perm: Vec<usize> = (0..nx * ny).map(|idx| (idx % ny) * nx + idx / ny).collect();
    Matrix::permutation(&perm)
}

pub struct HomDecomposition {
    /// `W⊗V* → Hom_ℓ(V, W)`, `(w⊗φ)(v) = w·φ(v)`.
    pub left: ModuleMap,
    /// `⋆V⊗W → Hom_r(V, W)`, `(φ⊗w)(v) = φ(v)·w`.
    pub right: ModuleMap,
    pub report: Report,
}

pub fn hom_tensor_decomposition(v: &HModule, w: &HModule) -> Result<HomDecomposition, ModuleError> {
    let n = v.dim * w.dim;
    // b_r⊗b_c* at r·n_V + c goes to E_{rc} at the same index.
    let left = ModuleMap::new(tensor_module(w, &left_dual(v))?, hom_left(v, w)?, Matrix::identity(n))?;
    // b_c*⊗b_r at c·n_W + r goes to E_{rc} at r·n_V + c.
    let right = ModuleMap::new(
        tensor_module(&right_dual(v)?, w)?,
        hom_right(v, w)?,
        swap_matrix(v.dim, w.dim),
    )?;
    let mut report = Report::new("hom tensor decomposition");
    left.check(&mut report, "W⊗V* → Hom_ℓ(V,W) module map");
    report.record(
        "W⊗V* → Hom_ℓ(V,W) bijective",
        left.matrix.inverse().is_some(),
        || Witness::text("singular"),
    );
    right.check(&mut report, "⋆V⊗W → Hom_r(V,W) module map");
    report.record(
        "⋆V⊗W → Hom_r(V,W) bijective",
        right.matrix.inverse().is_some(),
        || Witness::text("singular"),
    );
    Ok(HomDecomposition { left, right, report })
}

/// Row vector pairing index `(p, q)` of an `n²`-dimensional tensor with
/// `δ_pq`.
fn pairing_row(n: usize) -> Matrix {
    Matrix::from_rows(vec![Matrix::identity(n).vectorize()], n * n)
}

pub struct EvaluationMaps {
    /// `V*⊗V → C`, `φ⊗v ↦ φ(v)`.
    pub left: ModuleMap,
    /// `V⊗⋆V → C`, `v⊗φ ↦ φ(v)`.
    pub right: ModuleMap,
    pub report: Report,
}

pub fn evaluation_maps(v: &HModule) -> Result<EvaluationMaps, ModuleError> {
    let triv = trivial_module(&v.algebra);
    let left = ModuleMap::new(tensor_module(&left_dual(v), v)?, triv.clone(), pairing_row(v.dim))?;
    let right = ModuleMap::new(tensor_module(v, &right_dual(v)?)?, triv, pairing_row(v.dim))?;
    let mut report = Report::new("evaluation maps");
    left.check(&mut report, "ev: V*⊗V → C");
    right.check(&mut report, "ev': V⊗⋆V → C");
    Ok(EvaluationMaps { left, right, report })
}

/// `Hom_ℓ(V, W)⊗V → W`, `T⊗v ↦ T(v)`.
pub fn hom_evaluation(v: &HModule, w: &HModule) -> Result<ModuleMap, ModuleError> {
    let (nv, nw) = (v.dim, w.dim);
    let mut m = Matrix::zeros(nw, nw * nv * nv);
    for r in 0..nw {
        for c in 0..nv {
            m.set(r, (r * nv + c) * nv + c, Scalar::one());
        }
    }
    ModuleMap::new(tensor_module(&hom_left(v, w)?, v)?, w.clone(), m)
}

pub struct DoubleDual {
    /// `V → ⋆(V*)`, `v ↦ δ_v`.
    pub into_right_of_left: ModuleMap,
    /// `V → (⋆V)*`, `v ↦ δ_v`.
    pub into_left_of_right: ModuleMap,
    pub report: Report,
}

pub fn double_dual_embedding(v: &HModule) -> Result<DoubleDual, ModuleError> {
    let id = Matrix::identity(v.dim);
    let a = ModuleMap::new(v.clone(), right_dual(&left_dual(v))?, id.clone())?;
    let b = ModuleMap::new(v.clone(), left_dual(&right_dual(v)?), id)?;
    let mut report = Report::new("double dual");
    a.check(&mut report, "V → ⋆(V*)");
    b.check(&mut report, "V → (⋆V)*");
    Ok(DoubleDual {
        into_right_of_left: a,
        into_left_of_right: b,
        report,
    })
}

pub struct SquaredAntipodeIsos {
    /// `⋆V → V*`, `f ↦ u⊳f`.
    pub right_to_left: ModuleMap,
    /// `V → V**`, `v ↦ δ_{u⊳v}`.
    pub into_double_dual: ModuleMap,
    pub report: Report,
}

/// The isomorphisms available when `S²(a) = u·a·u⁻¹`.
pub fn ssquared_inner_isos(v: &HModule, u: &[Scalar]) -> Result<SquaredAntipodeIsos, ModuleError> {
    let h = &v.algebra;
    let u_inv = h
        .inverse_element(u)
        .ok_or_else(|| ModuleError::NotInner("u is not invertible".to_string()))?;
    let s2 = h.antipode_power(2)?;
    for i in 0..h.dim {
        let lhs = s2.column(i);
        let rhs = h.mul(&h.mul(u, &h.basis(i)), &u_inv);
        if lhs != rhs {
            return Err(ModuleError::NotInner(format!("S²(e{i}) ≠ u e{i} u⁻¹")));
        }
    }
    let dual = left_dual(v);
    let rdual = right_dual(v)?;
    let mut report = Report::new("S² inner isomorphisms");
    let mut pairs = Vec::new();
    for i in 0..h.dim {
        let e = h.basis(i);
        let au = h.mul(&e, u);
        let ua = h.mul(u, &e);
        pairs.push((
            format!("e{i}u⊳f vs ue{i}▶f"),
            dual.rho(&au).vectorize(),
            rdual.rho(&ua).vectorize(),
        ));
    }
    report.vectors_equal("au⊳f = ua▶f", pairs);
    let right_to_left = ModuleMap::new(rdual, dual.clone(), dual.rho(u))?;
    right_to_left.check(&mut report, "⋆V → V* module map");
    report.matrices_equal(
        "⋆V → V* inverse is f ↦ u⁻¹⊳f",
        &(&right_to_left.matrix * &dual.rho(&u_inv)),
        &Matrix::identity(v.dim),
    );
    // δ_w has coordinates w in the dual-of-dual basis.
    let into_double_dual = ModuleMap::new(v.clone(), left_dual(&dual), v.rho(u))?;
    into_double_dual.check(&mut report, "V → V** module map");
    report.record(
        "V → V** bijective",
        into_double_dual.matrix.inverse().is_some(),
        || Witness::text("singular"),
    );
    Ok(SquaredAntipodeIsos {
        right_to_left,
        into_double_dual,
        report,
    })
}

//! Universal R-matrices, the braidings they induce and the conjugate
//! braiding.
//!
//! Elements of `H⊗H` are `d×d` grids, `R = Σ R_ij e_i⊗e_j`.

use std::sync::Arc;

use crate::conj::conjugate_module;
use crate::hmod::{swap_matrix, tensor_module, HModule, ModuleError, ModuleMap};
use crate::hopf::{is_central, HopfAlgebra, HopfError};
use crate::linalg::{unit_vector, Matrix, Vector};
use crate::report::{Report, Witness};
use crate::scalar::Scalar;
use crate::staralg::{is_star_morphism, tensor_power_star, StarAlgError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("modules over different algebras")]
    AlgebraMismatch,
    #[error("R-matrix has no inverse in H⊗H")]
    NoInverse,
    #[error("u and its claimed inverse do not multiply to 1")]
    InversePairFails,
    #[error("R is neither real nor inverse real")]
    NotApplicable,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    StarAlg(#[from] StarAlgError),
}

#[derive(Debug, Clone)]
pub struct RMatrix {
    pub algebra: Arc<HopfAlgebra>,
    pub coeffs: Matrix,
    pub inverse: Matrix,
}

/// Names of the defining axioms, in report order.
pub const R_AXIOMS: [&str; 4] = [
    "inverse",
    "coproduct reversal",
    "left leg coproduct",
    "right leg coproduct",
];
/// Names of the derived identities, in report order.
pub const R_DERIVED: [&str; 6] = [
    "QYBE",
    "counit left",
    "counit right",
    "antipode left",
    "antipode right",
    "antipode both",
];

fn one_one(h: &HopfAlgebra) -> Matrix {
    crate::hopf::outer(&h.unit, &h.unit)
}

/// Inverse of `x` in `H⊗H` by solving with its left multiplication operator.
pub fn invert_two_tensor(h: &HopfAlgebra, x: &Matrix) -> Option<Matrix> {
    let d = h.dim;
    let cols: Vec<Vector> = (0..d * d)
        .map(|idx| {
            let e = Matrix::unvectorize(&unit_vector(d * d, idx), d, d);
            h.mul2(x, &e).vectorize()
        })
        .collect();
    let op = Matrix::from_columns(&cols, d * d);
    let y = Matrix::unvectorize(&op.solve(&one_one(h).vectorize())?, d, d);
    (h.mul2(&y, x) == one_one(h)).then_some(y)
}

impl RMatrix {
    /// Accepts `inverse` only if it is a two-sided inverse; without one the
    /// inverse is computed.
    pub fn new(algebra: Arc<HopfAlgebra>, coeffs: Matrix, inverse: Option<Matrix>) -> Result<RMatrix, BraidError> {
        let d = algebra.dim;
        if (coeffs.rows(), coeffs.cols()) != (d, d) {
            return Err(BraidError::DimensionMismatch(format!("R must be {d}x{d}")));
        }
        let inverse = match inverse {
            Some(inv) => {
                let e = one_one(&algebra);
                if (inv.rows(), inv.cols()) != (d, d)
                    || algebra.mul2(&coeffs, &inv) != e
                    || algebra.mul2(&inv, &coeffs) != e
                {
                    return Err(BraidError::NoInverse);
                }
                inv
            }
            None => invert_two_tensor(&algebra, &coeffs).ok_or(BraidError::NoInverse)?,
        };
        Ok(RMatrix {
            algebra,
            coeffs,
            inverse,
        })
    }

    /// `R₂₁`.
    pub fn flipped(&self) -> Matrix {
        self.coeffs.transpose()
    }

    /// `R* = (∗⊗∗)(R)`.
    pub fn starred(&self) -> Matrix {
        self.algebra.star2(&self.coeffs)
    }
}

/// `Δ(e_k)` as a grid.
fn coproduct_grid(h: &HopfAlgebra, k: usize) -> Matrix {
    h.coproduct(&h.basis(k))
}

/// The defining axioms and their consequences. The inverse is taken as
/// stored, so a mutated `R` with a stale inverse is reported rather than
/// rejected.
pub fn verify_quasitriangular(r: &RMatrix) -> Report {
    let h = &r.algebra;
    let d = h.dim;
    let rr = &r.coeffs;
    let mut rep = Report::new("quasitriangular");
    let e = one_one(h);
    rep.record(
        R_AXIOMS[0],
        h.mul2(rr, &r.inverse) == e && h.mul2(&r.inverse, rr) == e,
        || Witness::with_diff("R·R⁻¹ - 1⊗1", &h.mul2(rr, &r.inverse) - &e),
    );
    let reversal = (0..d).find_map(|k| {
        let delta = coproduct_grid(h, k);
        let lhs = h.mul2(&h.mul2(rr, &delta), &r.inverse);
        let rhs = delta.transpose();
        (lhs != rhs).then(|| (k, &lhs - &rhs))
    });
    match reversal {
        None => rep.pass(R_AXIOMS[1]),
        Some((k, diff)) => rep.fail(
            R_AXIOMS[1],
            Witness::with_diff(format!("RΔ(e{k})R⁻¹ - Δᵒᵖ(e{k})"), diff),
        ),
    }
    let r12 = h.embed_legs(rr, 0, 1);
    let r13 = h.embed_legs(rr, 0, 2);
    let r23 = h.embed_legs(rr, 1, 2);
    let flat = |v: Vector| Matrix::from_rows(vec![v], d * d * d);
    rep.matrices_equal(R_AXIOMS[2], &flat(h.coproduct_on_leg(rr, 0)), &flat(h.mul3(&r13, &r23)));
    rep.matrices_equal(R_AXIOMS[3], &flat(h.coproduct_on_leg(rr, 1)), &flat(h.mul3(&r13, &r12)));

    rep.matrices_equal(
        R_DERIVED[0],
        &flat(h.mul3(&h.mul3(&r12, &r13), &r23)),
        &flat(h.mul3(&h.mul3(&r23, &r13), &r12)),
    );
    let counit_row = Matrix::from_rows(vec![h.counit.clone()], d);
    let unit_col = Matrix::from_rows(vec![h.unit.clone()], d);
    rep.matrices_equal(R_DERIVED[1], &(&counit_row * rr), &unit_col);
    rep.matrices_equal(R_DERIVED[2], &(rr * &counit_row.transpose()).transpose(), &unit_col);
    let s = &h.antipode;
    let id = Matrix::identity(d);
    rep.matrices_equal(R_DERIVED[3], &h.apply_legs(s, &id, rr), &r.inverse);
    rep.matrices_equal(R_DERIVED[4], &h.apply_legs(&id, s, &r.inverse), rr);
    rep.matrices_equal(R_DERIVED[5], &h.apply_legs(s, s, rr), rr);
    rep
}

/// `QYBE` on `U⊗V⊗W` with the legs acting through the modules.
pub fn check_qybe_on_modules(r: &RMatrix, u: &HModule, v: &HModule, w: &HModule) -> Report {
    let mut rep = Report::new("QYBE on modules");
    let (iu, iv, iw) = (
        Matrix::identity(u.dim),
        Matrix::identity(v.dim),
        Matrix::identity(w.dim),
    );
    let r12 = HModule::rho2(u, v, &r.coeffs).kron(&iw);
    let r23 = iu.kron(&HModule::rho2(v, w, &r.coeffs));
    let d = r.algebra.dim;
    let mut r13 = Matrix::zeros(u.dim * v.dim * w.dim, u.dim * v.dim * w.dim);
    for i in 0..d {
        for j in 0..d {
            let c = r.coeffs.get(i, j);
            if !c.is_zero() {
                r13 = &r13 + &u.action[i].kron(&iv).kron(&w.action[j]).scale(c);
            }
        }
    }
    rep.matrices_equal(
        "R12R13R23 = R23R13R12",
        &(&(&r12 * &r13) * &r23),
        &(&(&r23 * &r13) * &r12),
    );
    rep
}

pub struct DrinfeldElement {
    pub u: Vector,
    pub u_inv: Vector,
    pub report: Report,
}

/// `u = Σ R_ij S(e_j)e_i` and `u⁻¹ = Σ R_ij e_j S²(e_i)`.
pub fn drinfeld_u(r: &RMatrix) -> Result<DrinfeldElement, BraidError> {
    let h = &r.algebra;
    let d = h.dim;
    let s = &h.antipode;
    let s2 = h.antipode_power(2)?;
    let mut u = h.zero();
    let mut u_inv = h.zero();
    for i in 0..d {
        for j in 0..d {
            let c = r.coeffs.get(i, j);
            if c.is_zero() {
                continue;
            }
            let a = h.mul(&s.column(j), &h.basis(i));
            let b = h.mul(&h.basis(j), &s2.column(i));
            u = crate::linalg::vec_add(&u, &crate::linalg::vec_scale(&a, c));
            u_inv = crate::linalg::vec_add(&u_inv, &crate::linalg::vec_scale(&b, c));
        }
    }
    if h.mul(&u, &u_inv) != h.unit || h.mul(&u_inv, &u) != h.unit {
        return Err(BraidError::InversePairFails);
    }
    let mut report = Report::new("Drinfeld element");
    report.pass("u·u⁻¹ = 1");
    let us = h.mul(&u, &s.apply(&u));
    report.record("uS(u) central", is_central(h, &us), || {
        Witness::text("uS(u) does not commute")
    });
    report.vectors_equal(
        "S²(a) = u a u⁻¹",
        (0..d).map(|i| (format!("e{i}"), s2.column(i), h.mul(&h.mul(&u, &h.basis(i)), &u_inv))),
    );
    let s_inv = h.antipode_inverse()?;
    report.vectors_equal(
        "S⁻¹(a) = u⁻¹S(a)u",
        (0..d).map(|i| {
            (
                format!("e{i}"),
                s_inv.column(i),
                h.mul(&h.mul(&u_inv, &s.column(i)), &u),
            )
        }),
    );
    Ok(DrinfeldElement { u, u_inv, report })
}

fn require_same(r: &RMatrix, v: &HModule) -> Result<(), BraidError> {
    if Arc::ptr_eq(&r.algebra, &v.algebra) || *r.algebra == *v.algebra {
        Ok(())
    } else {
        Err(BraidError::AlgebraMismatch)
    }
}

/// `ψ_VW = τ∘R`.
pub fn braiding(r: &RMatrix, v: &HModule, w: &HModule) -> Result<ModuleMap, BraidError> {
    require_same(r, v)?;
    require_same(r, w)?;
    let m = &swap_matrix(v.dim, w.dim) * &HModule::rho2(v, w, &r.coeffs);
    Ok(ModuleMap::new(tensor_module(v, w)?, tensor_module(w, v)?, m)?)
}

/// A family of maps `V⊗W → W⊗V` indexed by pairs of modules.
pub type BraidFn<'a> = dyn Fn(&HModule, &HModule) -> Result<Matrix, BraidError> + 'a;

/// Module map, invertibility and both hexagons for the triple `(U, V, W)`.
pub fn check_hexagons(braid: &BraidFn<'_>, u: &HModule, v: &HModule, w: &HModule) -> Result<Report, BraidError> {
    let mut rep = Report::new("braiding hexagons");
    let (iu, iv, iw) = (
        Matrix::identity(u.dim),
        Matrix::identity(v.dim),
        Matrix::identity(w.dim),
    );
    let psi_uv = braid(u, v)?;
    crate::hmod::check_module_map(
        &mut rep,
        "module map",
        &psi_uv,
        &tensor_module(u, v)?,
        &tensor_module(v, u)?,
    );
    rep.record("invertible", psi_uv.inverse().is_some(), || Witness::text("singular"));
    let vw = tensor_module(v, w)?;
    let uv = tensor_module(u, v)?;
    let lhs = braid(u, &vw)?;
    let rhs = &iv.kron(&braid(u, w)?) * &psi_uv.kron(&iw);
    rep.matrices_equal("ψ_{U,V⊗W} = (id⊗ψ_UW)(ψ_UV⊗id)", &lhs, &rhs);
    let lhs = braid(&uv, w)?;
    let rhs = &braid(u, w)?.kron(&iv) * &iu.kron(&braid(v, w)?);
    rep.matrices_equal("ψ_{U⊗V,W} = (ψ_UW⊗id)(id⊗ψ_VW)", &lhs, &rhs);
    Ok(rep)
}

/// `ψ_{U'V'}∘(f⊗g) = (g⊗f)∘ψ_UV` for module maps `f: U → U'`, `g: V → V'`.
pub fn check_naturality(braid: &BraidFn<'_>, f: &ModuleMap, g: &ModuleMap) -> Result<Report, BraidError> {
    let mut rep = Report::new("braiding naturality");
    let lhs = &braid(&f.codomain, &g.codomain)? * &f.matrix.kron(&g.matrix);
    let rhs = &g.matrix.kron(&f.matrix) * &braid(&f.domain, &g.domain)?;
    rep.matrices_equal("naturality square", &lhs, &rhs);
    Ok(rep)
}

/// Hexagons for `ψ = τ∘R` on `(U, V, W)`, the module-level QYBE, and
/// naturality for the supplied maps.
pub fn check_braiding_coherence(
    r: &RMatrix,
    u: &HModule,
    v: &HModule,
    w: &HModule,
    maps: Option<(&ModuleMap, &ModuleMap)>,
) -> Result<Report, BraidError> {
    let braid = |a: &HModule, b: &HModule| braiding(r, a, b).map(|m| m.matrix);
    let mut rep = Report::new("braiding coherence");
    rep.absorb("", check_hexagons(&braid, u, v, w)?);
    rep.absorb("", check_qybe_on_modules(r, u, v, w));
    if let Some((f, g)) = maps {
        rep.absorb("", check_naturality(&braid, f, g)?);
    }
    Ok(rep)
}

/// `ξ_XY = ρ_XY∘conj(ψ_YX)∘ρ_YX⁻¹: X̄⊗Ȳ → Ȳ⊗X̄`, with `X`, `Y` the modules
/// being conjugated.
pub fn xi(r: &RMatrix, x: &HModule, y: &HModule) -> Result<Matrix, BraidError> {
    let psi_yx = braiding(r, y, x)?;
    let rho_xy = swap_matrix(x.dim, y.dim);
    let rho_yx_inv = swap_matrix(x.dim, y.dim);
    Ok(&(&rho_xy * &psi_yx.matrix.conj()) * &rho_yx_inv)
}

/// `τ∘R₂₁*` acting on `V⊗W`: `τ·Σ conj(R_ij)·ρ_V(e_j*)⊗ρ_W(e_i*)`.
pub fn conjugate_braiding_shortcut(r: &RMatrix, v: &HModule, w: &HModule) -> Result<Matrix, BraidError> {
    require_same(r, v)?;
    require_same(r, w)?;
    let h = &r.algebra;
    let d = h.dim;
    let mut acc = Matrix::zeros(v.dim * w.dim, v.dim * w.dim);
    for i in 0..d {
        for j in 0..d {
            let c = r.coeffs.get(i, j);
            if c.is_zero() {
                continue;
            }
            let a = v.rho(&h.star.column(j));
            let b = w.rho(&h.star.column(i));
            acc = &acc + &a.kron(&b).scale(&c.conj());
        }
    }
    Ok(&swap_matrix(v.dim, w.dim) * &acc)
}

/// `ψ̄_VW = (σ⊗σ)∘ξ_{V̄W̄}∘(σ⁻¹⊗σ⁻¹)` from the definition, cross-checked
/// against `τ∘R₂₁*`.
pub fn conjugate_braiding(r: &RMatrix, v: &HModule, w: &HModule) -> Result<(ModuleMap, Report), BraidError> {
    let (vb, wb) = (conjugate_module(v), conjugate_module(w));
    // σ is the identity matrix in our coordinates.
    let definitional = xi(r, &vb, &wb)?;
    let shortcut = conjugate_braiding_shortcut(r, v, w)?;
    let mut rep = Report::new("conjugate braiding");
    rep.matrices_equal("ξ route = τ∘R₂₁*", &definitional, &shortcut);
    let m = ModuleMap::new(tensor_module(v, w)?, tensor_module(w, v)?, definitional)?;
    m.check(&mut rep, "module map");
    Ok((m, rep))
}

/// Coherence of `ψ̄` over all triples from `modules`, its naturality along
/// basis intertwiners and the naturality of `ξ`.
pub fn check_conjugate_braiding_is_braiding(r: &RMatrix, modules: &[HModule]) -> Result<Report, BraidError> {
    let braid = |a: &HModule, b: &HModule| conjugate_braiding(r, a, b).map(|(m, _)| m.matrix);
    let mut rep = Report::new("conjugate braiding is a braiding");
    for (i, u) in modules.iter().enumerate() {
        for (j, v) in modules.iter().enumerate() {
            let (_, cross) = conjugate_braiding(r, u, v)?;
            rep.absorb(&format!("({i},{j})"), cross);
            for (k, w) in modules.iter().enumerate() {
                rep.absorb(&format!("({i},{j},{k})"), check_hexagons(&braid, u, v, w)?);
            }
        }
    }
    let xi_fn = |a: &HModule, b: &HModule| xi(r, a, b);
    for (i, u) in modules.iter().enumerate() {
        for (j, u2) in modules.iter().enumerate() {
            for (k, f) in crate::hmod::intertwiners(u, u2)?.into_iter().enumerate() {
                let f = ModuleMap::new(u.clone(), u2.clone(), f)?;
                for (l, v) in modules.iter().enumerate() {
                    let id = ModuleMap::new(v.clone(), v.clone(), Matrix::identity(v.dim))?;
                    let tag = format!("f{k}:{i}→{j}, id{l}");
                    rep.absorb(&format!("{tag} ψ̄ left"), check_naturality(&braid, &f, &id)?);
                    rep.absorb(&format!("{tag} ψ̄ right"), check_naturality(&braid, &id, &f)?);
                    // ξ is natural in its conjugated arguments: conj(f) = f̄ on V̄.
                    let fb =
                        crate::conj::conjugate_map(&f).map_err(|e| BraidError::DimensionMismatch(e.to_string()))?;
                    let idb =
                        crate::conj::conjugate_map(&id).map_err(|e| BraidError::DimensionMismatch(e.to_string()))?;
                    let lhs = &xi_fn(&f.codomain, v)? * &fb.matrix.kron(&idb.matrix);
                    let rhs = &idb.matrix.kron(&fb.matrix) * &xi_fn(&f.domain, v)?;
                    rep.matrices_equal(format!("{tag} ξ naturality"), &lhs, &rhs);
                }
            }
        }
    }
    Ok(rep)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reality {
    Real,
    InverseReal,
    Both,
    Neither,
}

impl Reality {
    pub fn as_str(self) -> &'static str {
        match self {
            Reality::Real => "real",
            Reality::InverseReal => "inverse_real",
            Reality::Both => "both",
            Reality::Neither => "neither",
        }
    }

    pub fn is_real(self) -> bool {
        matches!(self, Reality::Real | Reality::Both)
    }

    pub fn is_inverse_real(self) -> bool {
        matches!(self, Reality::InverseReal | Reality::Both)
    }
}

/// Compares `R*` with `R₂₁` and with `R⁻¹`.
pub fn r_reality(r: &RMatrix) -> Reality {
    let star = r.starred();
    match (star == r.flipped(), star == r.inverse) {
        (true, true) => Reality::Both,
        (true, false) => Reality::Real,
        (false, true) => Reality::InverseReal,
        (false, false) => Reality::Neither,
    }
}

/// What the reality class predicts for `ψ̄_VW`, and for real `R` whether
/// `ψ_VV` preserves the star `D` on `V⊗V`.
pub fn check_reality_consequences(
    r: &RMatrix,
    v: &HModule,
    w: &HModule,
    star: Option<&Matrix>,
) -> Result<Report, BraidError> {
    let class = r_reality(r);
    if class == Reality::Neither {
        return Err(BraidError::NotApplicable);
    }
    let mut rep = Report::new("reality consequences");
    rep.note(format!("classification: {}", class.as_str()));
    let (psibar, _) = conjugate_braiding(r, v, w)?;
    if class.is_real() {
        rep.matrices_equal("real: ψ̄_VW = ψ_VW", &psibar.matrix, &braiding(r, v, w)?.matrix);
    }
    if class.is_inverse_real() {
        let psi_wv = braiding(r, w, v)?;
        match psi_wv.matrix.inverse() {
            Some(inv) => {
                rep.matrices_equal("inverse real: ψ̄_VW = ψ_WV⁻¹", &psibar.matrix, &inv);
            }
            None => rep.fail("inverse real: ψ̄_VW = ψ_WV⁻¹", Witness::text("ψ_WV is singular")),
        }
    }
    if let Some(d) = star {
        let psi = braiding(r, v, v)?.matrix;
        let d2 = tensor_power_star(v, d, 2)?.dagger;
        // ψ(x)* and R₂₁-side of the proof identity, as matrices on V⊗V.
        let lhs = &psi * &d2;
        let rhs = &d2 * &psi.conj();
        rep.note(format!("ψ_VV·D₂ =\n{lhs}"));
        rep.note(format!("D₂·conj(ψ_VV) =\n{rhs}"));
        if class.is_real() {
            rep.record("real: ψ_VV is a *-morphism", is_star_morphism(&psi, &d2, &d2), || {
                Witness::with_diff("ψ·D₂ - D₂·conj(ψ)", &lhs - &rhs)
            });
        } else {
            rep.skip(
                "real: ψ_VV is a *-morphism",
                "R is only inverse real; matrices reported without a claim",
            );
        }
    }
    Ok(rep)
}

/// `R` with one coefficient shifted by `delta`, keeping the stored inverse.
pub fn perturbed(r: &RMatrix, i: usize, j: usize, delta: Scalar) -> RMatrix {
    let mut coeffs = r.coeffs.clone();
    let v = coeffs.get(i, j) + &delta;
    coeffs.set(i, j, v);
    RMatrix {
        algebra: r.algebra.clone(),
        coeffs,
        inverse: r.inverse.clone(),
    }
}

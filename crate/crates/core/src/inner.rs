//! Invariant inner products, adjoints and the correspondence between stars,
//! inner products and bilinear forms.
//!
//! A Gram matrix `G` means `⟨v̄, w⟩ = conj(v)ᵀ·G·w`; a bilinear form `h`
//! means `h(v, w) = vᵀ·h·w`.

use crate::conj::check_antimodule;
use crate::hmod::{
    check_module_map, hom_left, left_dual, swap_matrix, tensor_module, trivial_module, HModule, ModuleError,
};
use crate::linalg::{span_basis, Matrix};
use crate::report::{Report, Witness};
use crate::scalar::{Scalar, ScalarError, Sign};
use crate::staralg::{
    end_left, enveloping_star, is_star_morphism, verify_star_algebra, verify_star_module, ModuleAlgebra, StarStructure,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InnerError {
    #[error("not an inner product: {0}")]
    NotInnerProduct(String),
    #[error("inconsistent data: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

#[derive(Debug, Clone)]
pub struct InnerProduct {
    pub module: HModule,
    pub gram: Matrix,
}

impl InnerProduct {
    /// Verifies `gram` before accepting it.
    pub fn new(module: HModule, gram: Matrix) -> Result<InnerProduct, InnerError> {
        let r = verify_inner_product(&module, &gram)?;
        if !r.all_pass() {
            return Err(InnerError::NotInnerProduct(r.failed_names().join(", ")));
        }
        Ok(InnerProduct { module, gram })
    }

    pub fn pair(&self, v: &[Scalar], w: &[Scalar]) -> Scalar {
        let gw = self.gram.apply(w);
        v.iter().zip(&gw).map(|(a, b)| &a.conj() * b).sum()
    }
}

/// `conj(G)ᵀ = G`.
pub fn is_hermitian(g: &Matrix) -> bool {
    g.is_square() && &g.conj_transpose() == g
}

/// Sylvester's criterion: every leading principal minor is positive. A
/// non-real minor counts as a failure.
pub fn positive_definite(g: &Matrix) -> Result<Result<(), String>, ScalarError> {
    for k in 1..=g.rows() {
        let minor = g.block(0, 0, k, k).determinant();
        match minor.sign() {
            Ok(Sign::Positive) => {}
            Ok(s) => return Ok(Err(format!("leading minor {k} is {minor} ({s:?})"))),
            Err(ScalarError::NotReal(_)) => return Ok(Err(format!("leading minor {k} is not real: {minor}"))),
            Err(e) => return Err(e),
        }
    }
    Ok(Ok(()))
}

/// `conj(ρ(e_i))ᵀ·G = G·ρ(e_i*)` for every basis element.
pub fn first_invariance_failure(v: &HModule, g: &Matrix) -> Option<(usize, Matrix)> {
    let h = &v.algebra;
    (0..h.dim).find_map(|i| {
        let lhs = &v.action[i].conj_transpose() * g;
        let rhs = g * &v.rho(&h.star.column(i));
        (lhs != rhs).then(|| (i, &lhs - &rhs))
    })
}

/// Conjugate symmetry, positive definiteness and invariance.
pub fn verify_inner_product(v: &HModule, g: &Matrix) -> Result<Report, InnerError> {
    let mut r = Report::new("inner product");
    if (g.rows(), g.cols()) != (v.dim, v.dim) {
        return Err(InnerError::NotInnerProduct(format!(
            "{}x{} Gram matrix on a {}-dimensional module",
            g.rows(),
            g.cols(),
            v.dim
        )));
    }
    r.matrices_equal("conjugate symmetry", &g.conj_transpose(), g);
    match positive_definite(g)? {
        Ok(()) => r.pass("positive definite"),
        Err(msg) => r.fail("positive definite", Witness::text(msg)),
    }
    match first_invariance_failure(v, g) {
        None => r.pass("invariance"),
        Some((i, diff)) => r.fail(
            "invariance",
            Witness::with_diff(format!("conj(ρ(e{i}))ᵀG - Gρ(e{i}*)"), diff),
        ),
    }
    Ok(r)
}

/// A basis of the Hermitian solutions of the invariance equations, as a
/// real vector space. Positivity is left to the caller.
pub fn solve_invariant_grams(v: &HModule) -> Vec<Matrix> {
    let n = v.dim;
    let h = &v.algebra;
    // vec(A·G) = (A⊗I)vec(G), vec(G·B) = (I⊗Bᵀ)vec(G), row-major.
    let mut stacked = Matrix::zeros(0, n * n);
    for i in 0..h.dim {
        let a = v.action[i].conj_transpose();
        let b = v.rho(&h.star.column(i));
        let block = &a.kron(&Matrix::identity(n)) - &Matrix::identity(n).kron(&b.transpose());
        stacked = stacked.vstack(&block);
    }
    // Solutions are closed under G ↦ Gᴴ, so Hermitian and skew parts of a
    // complex basis span the Hermitian solutions.
    let mut candidates = Vec::new();
    for x in stacked.kernel() {
        let g = Matrix::unvectorize(&x, n, n);
        let gh = g.conj_transpose();
        candidates.push(&g + &gh);
        candidates.push((&g - &gh).scale(&Scalar::i()));
    }
    let mut chosen: Vec<Matrix> = Vec::new();
    for c in candidates {
        if c.is_zero() {
            continue;
        }
        let mut vecs: Vec<_> = chosen.iter().map(Matrix::vectorize).collect();
        vecs.push(c.vectorize());
        if span_basis(&vecs, n * n).len() == vecs.len() {
            chosen.push(c);
        }
    }
    chosen
}

fn require_inner(v: &HModule, g: &Matrix) -> Result<(), InnerError> {
    let r = verify_inner_product(v, g)?;
    if r.all_pass() {
        Ok(())
    } else {
        Err(InnerError::NotInnerProduct(r.failed_names().join(", ")))
    }
}

/// `μ_V: V̄ → V*`, `v̄ ↦ ⟨v̄, −⟩`, with matrix `Gᵀ`.
pub fn mu(v: &HModule, g: &Matrix) -> Result<(crate::hmod::ModuleMap, Report), InnerError> {
    require_inner(v, g)?;
    let m = crate::hmod::ModuleMap::new(crate::conj::conjugate_module(v), left_dual(v), g.transpose())?;
    let mut r = Report::new("mu");
    m.check(&mut r, "module map");
    r.record("bijective", m.matrix.inverse().is_some(), || Witness::text("singular"));
    Ok((m, r))
}

/// `Tᵗʳ∘μ_W∘T̄ = μ_V` for an isometry `T: V → W`.
pub fn check_mu_naturality(
    t: &Matrix,
    v: &HModule,
    g_v: &Matrix,
    w: &HModule,
    g_w: &Matrix,
) -> Result<Report, InnerError> {
    let (mu_v, _) = mu(v, g_v)?;
    let (mu_w, _) = mu(w, g_w)?;
    let mut r = Report::new("mu naturality");
    r.matrices_equal("isometry", &(&(&t.conj_transpose() * g_w) * t), g_v);
    let lhs = &(&t.transpose() * &mu_w.matrix) * &t.conj();
    r.matrices_equal("Tᵗʳ∘μ_W∘T̄ = μ_V", &lhs, &mu_v.matrix);
    Ok(r)
}

/// `T† = G_V⁻¹·conj(T)ᵀ·G_W` for `T: V → W`.
pub fn adjoint(t: &Matrix, g_v: &Matrix, g_w: &Matrix) -> Result<Matrix, InnerError> {
    if (t.rows(), t.cols()) != (g_w.rows(), g_v.rows()) || !g_v.is_square() || !g_w.is_square() {
        return Err(InnerError::Inconsistent(format!(
            "a {}x{} map needs Gram matrices of sizes {} and {}",
            t.rows(),
            t.cols(),
            t.cols(),
            t.rows()
        )));
    }
    let inv = g_v
        .inverse()
        .ok_or_else(|| InnerError::NotInnerProduct("singular Gram matrix".to_string()))?;
    Ok(&(&inv * &t.conj_transpose()) * g_w)
}

/// `⟨T†w, v⟩_V = ⟨w, Tv⟩_W`, i.e. `(T†)ᴴ·G_V = G_W·T`, and `T†† = T`.
pub fn check_adjoint(t: &Matrix, g_v: &Matrix, g_w: &Matrix) -> Result<Report, InnerError> {
    let mut r = Report::new("adjoint");
    let ta = adjoint(t, g_v, g_w)?;
    r.matrices_equal("defining relation", &(&ta.conj_transpose() * g_v), &(g_w * t));
    r.matrices_equal("double adjoint", &adjoint(&ta, g_w, g_v)?, t);
    Ok(r)
}

/// The antilinear map `T ↦ T†` from `Hom(V, W)` to `Hom(W, V)` in row-major
/// coordinates: `vec(T†) = (G_V⁻¹⊗G_Wᵀ)·swap·conj(vec T)`.
pub fn adjoint_matrix(g_v: &Matrix, g_w: &Matrix) -> Result<Matrix, InnerError> {
    let inv = g_v
        .inverse()
        .ok_or_else(|| InnerError::NotInnerProduct("singular Gram matrix".to_string()))?;
    Ok(&inv.kron(&g_w.transpose()) * &swap_matrix(g_w.rows(), g_v.rows()))
}

/// `T` is a module map iff `T†` is; `(a⊳T)† = S(a)*⊳T†`; `T†` is the
/// `σ`/`μ`/transpose composite.
pub fn check_adjoint_module_props(
    t: &Matrix,
    v: &HModule,
    g_v: &Matrix,
    w: &HModule,
    g_w: &Matrix,
) -> Result<Report, InnerError> {
    require_inner(v, g_v)?;
    require_inner(w, g_w)?;
    let mut r = Report::new("adjoint module properties");
    let ta = adjoint(t, g_v, g_w)?;
    let t_mod = crate::hmod::is_module_map(t, v, w);
    let ta_mod = crate::hmod::is_module_map(&ta, w, v);
    r.note(format!("T module map: {t_mod}, T† module map: {ta_mod}"));
    r.record("module map iff adjoint is", t_mod == ta_mod, || {
        Witness::text(format!("T: {t_mod}, T†: {ta_mod}"))
    });
    let dagger = adjoint_matrix(g_v, g_w)?;
    check_antimodule(&mut r, "(a⊳T)† = S(a)*⊳T†", &dagger, &hom_left(v, w)?, &hom_left(w, v)?);
    r.matrices_equal(
        "dagger matrix applied to T",
        &Matrix::unvectorize(&dagger.apply(&t.conj().vectorize()), v.dim, w.dim),
        &ta,
    );
    // σ_V∘conj(μ_V⁻¹∘Tᵗʳ∘μ_W)∘σ_W⁻¹, with both σ identities.
    let (mu_v, _) = mu(v, g_v)?;
    let (mu_w, _) = mu(w, g_w)?;
    let inner = &(&mu_v.matrix.inverse().expect("μ is invertible") * &t.transpose()) * &mu_w.matrix;
    r.matrices_equal("σ/μ/transpose composite", &inner.conj(), &ta);
    Ok(r)
}

pub struct EndStarAlgebra {
    pub algebra: ModuleAlgebra,
    pub star: StarStructure,
    pub report: Report,
}

/// `End_ℓ(V)` with the adjoint as star, matched against the enveloping star
/// on `V⊗V̄` through `v⊗w̄ ↦ v⟨w̄, −⟩`.
pub fn end_left_star_algebra(v: &HModule, g: &Matrix) -> Result<EndStarAlgebra, InnerError> {
    require_inner(v, g)?;
    let algebra = end_left(v).map_err(|e| InnerError::Inconsistent(e.to_string()))?;
    let d = adjoint_matrix(g, g)?;
    let star = StarStructure {
        module: algebra.carrier.clone(),
        dagger: d.clone(),
    };
    let mut report = Report::new("End_ℓ star algebra");
    report.absorb("", verify_star_algebra(&algebra, &d));
    let (_, env) = enveloping_star(v).map_err(|e| InnerError::Inconsistent(e.to_string()))?;
    let phi = Matrix::identity(v.dim).kron(&g.transpose());
    check_module_map(
        &mut report,
        "V⊗V̄ → End_ℓ(V) module map",
        &phi,
        &env.module,
        &algebra.carrier,
    );
    report.record("V⊗V̄ → End_ℓ(V) bijective", phi.inverse().is_some(), || {
        Witness::text("singular")
    });
    report.record(
        "enveloping star corresponds to adjoint",
        is_star_morphism(&phi, &env.dagger, &d),
        || Witness::text("Φ·D_env ≠ D_End·conj(Φ)"),
    );
    Ok(EndStarAlgebra { algebra, star, report })
}

/// Two of the three objects related by `h(v†, w) = ⟨v̄, w⟩`, i.e. `G = Dᵀh`.
#[derive(Debug, Clone)]
pub enum Given {
    StarGram { star: Matrix, gram: Matrix },
    StarForm { star: Matrix, form: Matrix },
    GramForm { gram: Matrix, form: Matrix },
}

#[derive(Debug, Clone)]
pub struct Triple {
    pub star: Matrix,
    pub gram: Matrix,
    pub form: Matrix,
    pub report: Report,
}

/// The conditions on `h` alone, under the names used in the report.
pub const FORM_CHECKS: [&str; 3] = ["form/conjugate symmetry", "form/invariance", "form/positivity"];

/// Completes the triple and checks both directions of the correspondence.
pub fn two_out_of_three(v: &HModule, given: Given) -> Result<Triple, InnerError> {
    let n = v.dim;
    let shape_ok = |m: &Matrix| (m.rows(), m.cols()) == (n, n);
    let (star, gram, form) = match given {
        Given::StarGram { star, gram } => {
            let dt_inv = star
                .transpose()
                .inverse()
                .ok_or_else(|| InnerError::Inconsistent("star matrix is singular".to_string()))?;
            let form = &dt_inv * &gram;
            (star, gram, form)
        }
        Given::StarForm { star, form } => {
            let gram = &star.transpose() * &form;
            (star, gram, form)
        }
        Given::GramForm { gram, form } => {
            let h_inv = form
                .inverse()
                .ok_or_else(|| InnerError::Inconsistent("form is degenerate".to_string()))?;
            let star = (&gram * &h_inv).transpose();
            (star, gram, form)
        }
    };
    if ![&star, &gram, &form].into_iter().all(shape_ok) {
        return Err(InnerError::Inconsistent(
            "matrix shapes differ from the module".to_string(),
        ));
    }
    if &star.transpose() * &form != gram {
        return Err(InnerError::Inconsistent("G ≠ Dᵀh".to_string()));
    }
    let mut report = Report::new("two out of three");
    let star_report = verify_star_module(v, &star);
    let star_ok = star_report.all_pass();
    report.absorb("star", star_report);
    let gram_report = verify_inner_product(v, &gram)?;
    let gram_ok = gram_report.all_pass();
    report.absorb("gram", gram_report);

    // h(w̄*, v̄*) = conj(h(v, w)) reads Dᵀ·h·D = conj(h)ᵀ.
    let sym = report.matrices_equal(
        FORM_CHECKS[0],
        &(&(&star.transpose() * &form) * &star),
        &form.conj_transpose(),
    );
    let triv = trivial_module(&v.algebra);
    let row = Matrix::from_rows(vec![form.vectorize()], n * n);
    let inv = check_module_map(&mut report, FORM_CHECKS[1], &row, &tensor_module(v, v)?, &triv);
    let pos = match positive_definite(&gram)? {
        Ok(()) => {
            report.pass(FORM_CHECKS[2]);
            true
        }
        Err(msg) => {
            report.fail(FORM_CHECKS[2], Witness::text(msg));
            false
        }
    };
    if gram_ok {
        report.record(
            "given the inner product: star iff form symmetric",
            star_ok == sym,
            || Witness::text(format!("star {star_ok}, symmetry {sym}")),
        );
    } else {
        report.skip(
            "given the inner product: star iff form symmetric",
            "Gram matrix is not an inner product",
        );
    }
    if star_ok {
        let all = sym && inv && pos;
        report.record(
            "given the star: inner product iff form conditions",
            gram_ok == all,
            || Witness::text(format!("inner product {gram_ok}, form conditions {all}")),
        );
    } else {
        report.skip(
            "given the star: inner product iff form conditions",
            "star matrix is not a *-structure",
        );
    }
    Ok(Triple {
        star,
        gram,
        form,
        report,
    })
}

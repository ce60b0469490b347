//! Complex conjugation of modules and maps.
//!
//! Coordinates of `v̄` in the basis `(b̄_i)` are the entrywise conjugates of
//! those of `v`. Under this convention `σ`, `γ`, `π`, both `β`s and `Ψ` are
//! identity matrices and the tensor reversal `ρ` is a swap permutation.

use crate::hmod::{
    check_module_map, direct_sum, hom_left, hom_right, left_dual, right_dual, swap_matrix, tensor_module,
    trivial_module, HModule, ModuleError, ModuleMap,
};
use crate::linalg::Matrix;
use crate::report::{Report, Witness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConjError {
    #[error("not a module map: {0}")]
    NotModuleMap(String),
    #[error("not an antimodule map: {0}")]
    NotAntimodule(String),
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// `ρ̄(e_i) = conj(ρ((S e_i)*))`.
pub fn conjugate_module(v: &HModule) -> HModule {
    let h = &v.algebra;
    HModule {
        algebra: h.clone(),
        dim: v.dim,
        action: (0..h.dim)
            .map(|i| v.rho(&h.star_of(&h.antipode.column(i))).conj())
            .collect(),
    }
}

/// `T̄: V̄ → W̄`, the entrywise conjugate matrix.
pub fn conjugate_map(t: &ModuleMap) -> Result<ModuleMap, ConjError> {
    if !t.is_module_map() {
        return Err(ConjError::NotModuleMap("input does not intertwine".to_string()));
    }
    let out = ModuleMap::new(
        conjugate_module(&t.domain),
        conjugate_module(&t.codomain),
        t.matrix.conj(),
    )?;
    debug_assert!(out.is_module_map());
    Ok(out)
}

/// `D·conj(ρ_V(e_i)) = ρ_W((S e_i)*)·D` for every basis element.
pub fn is_antimodule(d: &Matrix, v: &HModule, w: &HModule) -> bool {
    first_antimodule_failure(d, v, w).is_none()
}

/// The first basis index breaking the antimodule identity, with `lhs - rhs`.
pub fn first_antimodule_failure(d: &Matrix, v: &HModule, w: &HModule) -> Option<(usize, Matrix)> {
    if (d.rows(), d.cols()) != (w.dim, v.dim) {
        return Some((0, Matrix::zeros(0, 0)));
    }
    let h = &v.algebra;
    (0..h.dim).find_map(|i| {
        let lhs = d * &v.action[i].conj();
        let rhs = &w.rho(&h.star_of(&h.antipode.column(i))) * d;
        (lhs != rhs).then(|| (i, &lhs - &rhs))
    })
}

/// Records the antimodule identity for `d: V → W` under `name`.
pub fn check_antimodule(r: &mut Report, name: &str, d: &Matrix, v: &HModule, w: &HModule) -> bool {
    match first_antimodule_failure(d, v, w) {
        None => {
            r.pass(name);
            true
        }
        Some((_, diff)) if diff.rows() == 0 => {
            r.fail(name, Witness::text("matrix shape does not match the modules"));
            false
        }
        Some((i, diff)) => {
            r.fail(
                name,
                Witness::with_diff(format!("D·conj ρ(e{i}) - ρ((S e{i})*)·D"), diff),
            );
            false
        }
    }
}

/// An antilinear map `v ↦ D·conj(v)` intertwining up to the `S(·)*` twist.
#[derive(Debug, Clone)]
pub struct AntimoduleMap {
    pub domain: HModule,
    pub codomain: HModule,
    pub matrix: Matrix,
}

impl AntimoduleMap {
    pub fn new(domain: HModule, codomain: HModule, matrix: Matrix) -> Result<AntimoduleMap, ConjError> {
        if let Some((i, _)) = first_antimodule_failure(&matrix, &domain, &codomain) {
            return Err(ConjError::NotAntimodule(format!("identity fails at basis element {i}")));
        }
        Ok(AntimoduleMap {
            domain,
            codomain,
            matrix,
        })
    }

    /// `c_V: V → V̄`.
    pub fn canonical(v: &HModule) -> AntimoduleMap {
        AntimoduleMap {
            domain: v.clone(),
            codomain: conjugate_module(v),
            matrix: Matrix::identity(v.dim),
        }
    }
}

/// `T ↦ T∘c_V⁻¹`: the same matrix read as a linear map `V̄ → W`.
pub fn psi(t: &AntimoduleMap) -> Result<ModuleMap, ConjError> {
    let out = ModuleMap::new(conjugate_module(&t.domain), t.codomain.clone(), t.matrix.clone())?;
    if !out.is_module_map() {
        return Err(ConjError::NotAntimodule("Ψ(T) does not intertwine".to_string()));
    }
    Ok(out)
}

/// Inverse of [`psi`]: `S ↦ S∘c_V` for a module map `S: V̄ → W`.
pub fn psi_inv(v: &HModule, s: &ModuleMap) -> Result<AntimoduleMap, ConjError> {
    if s.domain != conjugate_module(v) {
        return Err(ConjError::NotModuleMap(
            "domain is not the conjugate of the given module".to_string(),
        ));
    }
    if !s.is_module_map() {
        return Err(ConjError::NotModuleMap("input does not intertwine".to_string()));
    }
    AntimoduleMap::new(v.clone(), s.codomain.clone(), s.matrix.clone())
}

pub struct NaturalIsos {
    /// `conj(C) → C`.
    pub gamma: ModuleMap,
    /// `conj(conj V) → V`.
    pub sigma: ModuleMap,
    /// `conj(V⊕W) → V̄⊕W̄`.
    pub pi: ModuleMap,
    /// `conj(V⊗W) → W̄⊗V̄`.
    pub rho: ModuleMap,
    /// `conj(V*) → ⋆(V̄)`.
    pub beta_dual: ModuleMap,
    /// `conj(Hom_ℓ(V,W)) → Hom_r(V̄,W̄)`.
    pub beta_hom: ModuleMap,
    pub report: Report,
}

/// `ρ_{VW}: conj(V⊗W) → W̄⊗V̄`.
pub fn rho_iso(v: &HModule, w: &HModule) -> Result<ModuleMap, ConjError> {
    Ok(ModuleMap::new(
        conjugate_module(&tensor_module(v, w)?),
        tensor_module(&conjugate_module(w), &conjugate_module(v))?,
        swap_matrix(v.dim, w.dim),
    )?)
}

/// `σ_V: conj(conj V) → V`.
pub fn sigma_iso(v: &HModule) -> Result<ModuleMap, ConjError> {
    Ok(ModuleMap::new(
        conjugate_module(&conjugate_module(v)),
        v.clone(),
        Matrix::identity(v.dim),
    )?)
}

pub fn natural_isos(v: &HModule, w: &HModule) -> Result<NaturalIsos, ConjError> {
    let triv = trivial_module(&v.algebra);
    let gamma = ModuleMap::new(conjugate_module(&triv), triv, Matrix::identity(1))?;
    let sigma = sigma_iso(v)?;
    let pi = ModuleMap::new(
        conjugate_module(&direct_sum(v, w)?),
        direct_sum(&conjugate_module(v), &conjugate_module(w))?,
        Matrix::identity(v.dim + w.dim),
    )?;
    let rho = rho_iso(v, w)?;
    let beta_dual = ModuleMap::new(
        conjugate_module(&left_dual(v)),
        right_dual(&conjugate_module(v))?,
        Matrix::identity(v.dim),
    )?;
    let beta_hom = ModuleMap::new(
        conjugate_module(&hom_left(v, w)?),
        hom_right(&conjugate_module(v), &conjugate_module(w))?,
        Matrix::identity(v.dim * w.dim),
    )?;
    let mut report = Report::new("conjugation isomorphisms");
    for (name, m) in [
        ("gamma", &gamma),
        ("sigma", &sigma),
        ("pi", &pi),
        ("rho", &rho),
        ("beta_dual", &beta_dual),
        ("beta_hom", &beta_hom),
    ] {
        m.check(&mut report, name);
    }
    Ok(NaturalIsos {
        gamma,
        sigma,
        pi,
        rho,
        beta_dual,
        beta_hom,
        report,
    })
}

/// `(ρ_{VW}⊗id_Ū)∘ρ_{U,V⊗W} = (id_W̄⊗ρ_{UV})∘ρ_{U⊗V,W}` as maps
/// `conj(U⊗V⊗W) → W̄⊗V̄⊗Ū`.
pub fn check_rho_associativity(u: &HModule, v: &HModule, w: &HModule) -> Result<Report, ConjError> {
    let mut r = Report::new("rho associativity");
    let rho_u_vw = rho_iso(u, &tensor_module(v, w)?)?;
    let rho_uv_w = rho_iso(&tensor_module(u, v)?, w)?;
    let rho_vw = rho_iso(v, w)?;
    let rho_uv = rho_iso(u, v)?;
    rho_u_vw.check(&mut r, "rho_{U,V⊗W} module map");
    rho_uv_w.check(&mut r, "rho_{U⊗V,W} module map");
    let lhs = &rho_vw.matrix.kron(&Matrix::identity(u.dim)) * &rho_u_vw.matrix;
    let rhs = &Matrix::identity(w.dim).kron(&rho_uv.matrix) * &rho_uv_w.matrix;
    r.matrices_equal("associativity square", &lhs, &rhs);
    let target = tensor_module(
        &tensor_module(&conjugate_module(w), &conjugate_module(v))?,
        &conjugate_module(u),
    )?;
    let source = conjugate_module(&tensor_module(&tensor_module(u, v)?, w)?);
    check_module_map(&mut r, "composite module map", &lhs, &source, &target);
    Ok(r)
}

/// Naturality of `σ`, `ρ` and `β_dual` for module maps `f: V → V'` and
/// `g: W → W'`.
pub fn check_naturality(f: &ModuleMap, g: &ModuleMap) -> Result<Report, ConjError> {
    let mut r = Report::new("conjugation naturality");
    let fbar = conjugate_map(f)?;
    let gbar = conjugate_map(g)?;
    let ffbar = conjugate_map(&fbar)?;
    r.matrices_equal(
        "sigma: f∘σ_V = σ_V'∘conj(conj f)",
        &(&f.matrix * &sigma_iso(&f.domain)?.matrix),
        &(&sigma_iso(&f.codomain)?.matrix * &ffbar.matrix),
    );

    let fg = ModuleMap::new(
        tensor_module(&f.domain, &g.domain)?,
        tensor_module(&f.codomain, &g.codomain)?,
        f.matrix.kron(&g.matrix),
    )?;
    let fg_bar = conjugate_map(&fg)?;
    r.matrices_equal(
        "rho: ρ∘conj(f⊗g) = (ḡ⊗f̄)∘ρ",
        &(&rho_iso(&f.codomain, &g.codomain)?.matrix * &fg_bar.matrix),
        &(&gbar.matrix.kron(&fbar.matrix) * &rho_iso(&f.domain, &g.domain)?.matrix),
    );

    // f*: V'* → V* and ⋆(f̄): ⋆(V̄') → ⋆(V̄) are both transposes.
    let f_dual = ModuleMap::new(left_dual(&f.codomain), left_dual(&f.domain), f.matrix.transpose())?;
    f_dual.check(&mut r, "f* module map");
    let f_dual_bar = conjugate_map(&f_dual)?;
    let star_fbar = ModuleMap::new(
        right_dual(&fbar.codomain)?,
        right_dual(&fbar.domain)?,
        fbar.matrix.transpose(),
    )?;
    star_fbar.check(&mut r, "⋆(f̄) module map");
    let beta_v = natural_isos(&f.domain, &f.domain)?.beta_dual;
    let beta_v2 = natural_isos(&f.codomain, &f.codomain)?.beta_dual;
    r.matrices_equal(
        "beta_dual: β_V∘conj(f*) = ⋆(f̄)∘β_V'",
        &(&beta_v.matrix * &f_dual_bar.matrix),
        &(&star_fbar.matrix * &beta_v2.matrix),
    );
    Ok(r)
}

/// `ρ̃(e_i) = conj(ρ(S(e_i*)))`: conjugation with the antipode applied after
/// the star.
pub fn tilde_conjugate_module(v: &HModule) -> HModule {
    let h = &v.algebra;
    HModule {
        algebra: h.clone(),
        dim: v.dim,
        action: (0..h.dim)
            .map(|i| v.rho(&h.antipode.apply(&h.star.column(i))).conj())
            .collect(),
    }
}

/// `(Ṽ)* = ⋆(V̄)`, and the two mixed double conjugations act through `S²`
/// and `S⁻²`, so they differ by the `S⁴` twist.
pub fn check_tilde_relations(v: &HModule) -> Result<Report, ConjError> {
    let h = &v.algebra;
    let mut r = Report::new("tilde conjugation");
    let tilde = tilde_conjugate_module(v);
    let bar = conjugate_module(v);
    let dual_tilde = left_dual(&tilde);
    let right_bar = right_dual(&bar)?;
    r.vectors_equal(
        "(Ṽ)* = ⋆(V̄)",
        (0..h.dim).map(|i| {
            (
                format!("e{i}"),
                dual_tilde.action[i].vectorize(),
                right_bar.action[i].vectorize(),
            )
        }),
    );
    let s2 = h.antipode_power(2).map_err(ModuleError::from)?;
    let s_2 = h.antipode_power(-2).map_err(ModuleError::from)?;
    let s4 = h.antipode_power(4).map_err(ModuleError::from)?;
    let bar_tilde = conjugate_module(&tilde);
    let tilde_bar = tilde_conjugate_module(&bar);
    r.vectors_equal(
        "conj(Ṽ) acts through S²",
        (0..h.dim).map(|i| {
            (
                format!("e{i}"),
                bar_tilde.action[i].vectorize(),
                v.rho(&s2.column(i)).vectorize(),
            )
        }),
    );
    r.vectors_equal(
        "(V̄)~ acts through S⁻²",
        (0..h.dim).map(|i| {
            (
                format!("e{i}"),
                tilde_bar.action[i].vectorize(),
                v.rho(&s_2.column(i)).vectorize(),
            )
        }),
    );
    r.vectors_equal(
        "S⁴ twist relates the mixed conjugates",
        (0..h.dim).map(|i| {
            (
                format!("e{i}"),
                bar_tilde.action[i].vectorize(),
                tilde_bar.rho(&s4.column(i)).vectorize(),
            )
        }),
    );
    Ok(r)
}

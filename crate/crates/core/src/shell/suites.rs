//! Named proposition suites run over a workspace.

use std::fmt::Display;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{
    braiding, check_braiding_coherence, check_conjugate_braiding_is_braiding, check_reality_consequences,
    conjugate_braiding, drinfeld_u, r_reality, verify_quasitriangular, RMatrix, Reality,
};
use crate::conj::{
    check_naturality as check_conj_naturality, check_rho_associativity, check_tilde_relations, conjugate_module,
    natural_isos, AntimoduleMap,
};
use crate::hmod::{
    check_hom_invariants, hom_evaluation, hom_tensor_decomposition, intertwiners, same_algebra, verify_module, HModule,
    ModuleMap,
};
use crate::inner::{
    check_adjoint, check_adjoint_module_props, end_left_star_algebra, mu, two_out_of_three, verify_inner_product, Given,
};
use crate::linalg::Matrix;
use crate::report::{Report, Witness};
use crate::scalar::Scalar;
use crate::staralg::{check_kappa_lift, kappa, star_universal_lift, tensor_algebra_star, TruncatedTensorAlgebra};

use super::validate;
use super::workspace::{ShellError, Workspace};

pub const SUITES: [&str; 12] = [
    "axioms",
    "hom-invariants",
    "conjugation",
    "tilde",
    "kappa",
    "star-lift",
    "quasitriangular",
    "braiding",
    "conjugate-braiding",
    "reality",
    "inner",
    "all",
];

/// Random maps per Hermitian module in the `inner` suite.
pub const ADJOINT_SAMPLES: usize = 20;

const SEED: u64 = 0x5eed_ad70;

pub fn run_suite(ws: &Workspace, suite: &str) -> Result<Report, ShellError> {
    let mut rep = Report::new(suite);
    match suite {
        "axioms" => axioms(ws, &mut rep)?,
        "hom-invariants" => hom_invariants(ws, &mut rep),
        "conjugation" => conjugation(ws, &mut rep),
        "tilde" => tilde(ws, &mut rep),
        "kappa" => kappa_suite(ws, &mut rep)?,
        "star-lift" => star_lift(ws, &mut rep)?,
        "quasitriangular" => quasitriangular(ws, &mut rep),
        "braiding" => braiding_suite(ws, &mut rep),
        "conjugate-braiding" => conjugate_braiding_suite(ws, &mut rep),
        "reality" => reality(ws, &mut rep)?,
        "inner" => inner(ws, &mut rep)?,
        "all" => {
            for s in SUITES.iter().filter(|s| **s != "all") {
                rep.absorb(s, run_suite(ws, s)?);
            }
        }
        other => {
            return Err(ShellError::Usage(format!(
                "unknown suite `{other}`; expected one of {}",
                SUITES.join(", ")
            )))
        }
    }
    Ok(rep)
}

/// Absorbs a sub-report, or records the error as a failed check.
fn absorb<E: Display>(rep: &mut Report, prefix: &str, result: Result<Report, E>) {
    match result {
        Ok(r) => rep.absorb(prefix, r),
        Err(e) => rep.fail(prefix, Witness::text(e.to_string())),
    }
}

type Named<'a> = (&'a str, &'a HModule);

/// Ordered pairs of modules over a common algebra.
fn pairs(ws: &Workspace) -> Vec<(Named<'_>, Named<'_>)> {
    let mods = ws.modules();
    let mut out = Vec::new();
    for &a in &mods {
        for &b in &mods {
            if same_algebra(a.1, b.1) {
                out.push((a, b));
            }
        }
    }
    out
}

fn modules_over<'a>(ws: &'a Workspace, r: &RMatrix) -> Vec<(&'a str, &'a HModule)> {
    ws.modules()
        .into_iter()
        .filter(|(_, m)| m.algebra == r.algebra)
        .collect()
}

/// The largest truncation degree kept at desk scale for a generator of
/// dimension `m` (the degree-N block has `m^N` entries).
pub fn desk_degree(m: usize) -> usize {
    match m {
        0..=2 => 3,
        3..=4 => 2,
        _ => 1,
    }
}

fn axioms(ws: &Workspace, rep: &mut Report) -> Result<(), ShellError> {
    for name in ws.objects.keys() {
        rep.absorb(name, validate(ws, name)?);
    }
    Ok(())
}

fn hom_invariants(ws: &Workspace, rep: &mut Report) {
    for ((vn, v), (wn, w)) in pairs(ws) {
        let p = format!("{vn}→{wn}");
        absorb(rep, &p, check_hom_invariants(v, w));
        absorb(rep, &p, hom_tensor_decomposition(v, w).map(|d| d.report));
        match hom_evaluation(v, w) {
            Ok(e) => {
                e.check(rep, &format!("{p}/evaluation is a module map"));
            }
            Err(e) => rep.fail(format!("{p}/evaluation"), Witness::text(e.to_string())),
        }
    }
}

fn conjugation(ws: &Workspace, rep: &mut Report) {
    let mods = ws.modules();
    for &(vn, v) in &mods {
        let bar = conjugate_module(v);
        rep.absorb(&format!("{vn}/conjugate"), verify_module(&bar));
        rep.record(
            format!("{vn}/conjugate of conjugate is V"),
            conjugate_module(&bar) == *v,
            || Witness::text("double conjugate differs"),
        );
    }
    for ((vn, v), (wn, w)) in pairs(ws) {
        let p = format!("{vn},{wn}");
        absorb(rep, &p, natural_isos(v, w).map(|n| n.report));
        for &(un, u) in &mods {
            if same_algebra(u, v) {
                absorb(rep, &format!("{un},{vn},{wn}"), check_rho_associativity(u, v, w));
            }
        }
        match intertwiners(v, w) {
            Ok(basis) => {
                let id = ModuleMap::new(v.clone(), v.clone(), Matrix::identity(v.dim)).expect("identity");
                for (k, f) in basis.into_iter().enumerate() {
                    let f = ModuleMap::new(v.clone(), w.clone(), f).expect("intertwiner shape");
                    absorb(rep, &format!("{p}/naturality f{k}"), check_conj_naturality(&f, &id));
                }
            }
            Err(e) => rep.fail(format!("{p}/intertwiners"), Witness::text(e.to_string())),
        }
    }
}

fn tilde(ws: &Workspace, rep: &mut Report) {
    for (n, v) in ws.modules() {
        absorb(rep, n, check_tilde_relations(v));
    }
}

fn kappa_suite(ws: &Workspace, rep: &mut Report) -> Result<(), ShellError> {
    for (n, v) in ws.modules() {
        let deg = desk_degree(v.dim);
        rep.note(format!("{n}: κ checked through degree {deg}"));
        rep.absorb(n, kappa(v, deg).report);
    }
    for (sn, mn, d) in ws.stars() {
        let v = ws.module(mn)?;
        let deg = desk_degree(v.dim);
        let t = TruncatedTensorAlgebra::new(v, deg);
        match AntimoduleMap::new(v.clone(), t.algebra.carrier.clone(), &t.inclusion() * d) {
            Ok(g) => absorb(rep, &format!("{sn}/lift"), check_kappa_lift(&g, &t.algebra, deg)),
            Err(e) => rep.fail(format!("{sn}/lift"), Witness::text(e.to_string())),
        }
    }
    Ok(())
}

fn star_lift(ws: &Workspace, rep: &mut Report) -> Result<(), ShellError> {
    for (sn, mn, d) in ws.stars() {
        let v = ws.module(mn)?;
        let deg = desk_degree(v.dim);
        rep.note(format!("{sn}: T(V) truncated at degree {deg}"));
        match tensor_algebra_star(v, d, deg) {
            Ok((t, star, r)) => {
                rep.absorb(sn, r);
                let f = ModuleMap::new(v.clone(), t.algebra.carrier.clone(), t.inclusion()).expect("inclusion");
                absorb(
                    rep,
                    &format!("{sn}/universal"),
                    star_universal_lift(&f, d, &t.algebra, &star.dagger, deg).map(|l| l.report),
                );
            }
            Err(e) => rep.fail(sn, Witness::text(e.to_string())),
        }
    }
    Ok(())
}

fn quasitriangular(ws: &Workspace, rep: &mut Report) {
    for (n, r) in ws.r_matrices() {
        rep.absorb(n, verify_quasitriangular(r));
        absorb(rep, &format!("{n}/drinfeld"), drinfeld_u(r).map(|u| u.report));
    }
}

fn braiding_suite(ws: &Workspace, rep: &mut Report) {
    for (rn, r) in ws.r_matrices() {
        let mods = modules_over(ws, r);
        for &(un, u) in &mods {
            for &(vn, v) in &mods {
                for &(wn, w) in &mods {
                    absorb(
                        rep,
                        &format!("{rn}/{un},{vn},{wn}"),
                        check_braiding_coherence(r, u, v, w, None),
                    );
                }
            }
        }
        braid_naturality(rep, rn, &mods, &|a, b| braiding(r, a, b).map(|m| m.matrix), "ψ");
    }
}

/// Naturality along every basis intertwiner `f: V → W`, paired with the
/// identity of each module `U`.
fn braid_naturality(
    rep: &mut Report,
    rn: &str,
    mods: &[(&str, &HModule)],
    braid: &crate::braid::BraidFn<'_>,
    label: &str,
) {
    for &(vn, v) in mods {
        for &(wn, w) in mods {
            let Ok(basis) = intertwiners(v, w) else { continue };
            for (k, f) in basis.into_iter().enumerate() {
                let f = ModuleMap::new(v.clone(), w.clone(), f).expect("intertwiner shape");
                for &(un, u) in mods {
                    let id = ModuleMap::new(u.clone(), u.clone(), Matrix::identity(u.dim)).expect("identity");
                    absorb(
                        rep,
                        &format!("{rn}/{label} natural in f{k}: {vn}→{wn}, id {un}"),
                        crate::braid::check_naturality(braid, &f, &id),
                    );
                }
            }
        }
    }
}

fn conjugate_braiding_suite(ws: &Workspace, rep: &mut Report) {
    for (rn, r) in ws.r_matrices() {
        let mods = modules_over(ws, r);
        let plain: Vec<HModule> = mods.iter().map(|(_, m)| (*m).clone()).collect();
        absorb(rep, rn, check_conjugate_braiding_is_braiding(r, &plain));
        for &(vn, v) in &mods {
            for &(wn, w) in &mods {
                absorb(
                    rep,
                    &format!("{rn}/{vn},{wn}"),
                    conjugate_braiding(r, v, w).map(|(_, r)| r),
                );
            }
        }
    }
}

fn reality(ws: &Workspace, rep: &mut Report) -> Result<(), ShellError> {
    for (rn, r) in ws.r_matrices() {
        let class = r_reality(r);
        rep.note(format!("{rn}: {}", class.as_str()));
        if class == Reality::Neither {
            rep.skip(rn, "R is neither real nor inverse real");
            continue;
        }
        let mods = modules_over(ws, r);
        for &(vn, v) in &mods {
            for &(wn, w) in &mods {
                absorb(
                    rep,
                    &format!("{rn}/{vn},{wn}"),
                    check_reality_consequences(r, v, w, None),
                );
            }
        }
        for (sn, mn, d) in ws.stars() {
            let v = ws.module(mn)?;
            if v.algebra == r.algebra {
                absorb(rep, &format!("{rn}/{sn}"), check_reality_consequences(r, v, v, Some(d)));
            }
        }
    }
    Ok(())
}

/// A deterministic map with entries `a + b·i`, `a, b ∈ [-3, 3]`.
pub fn random_map(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| {
        let a = Scalar::from_int(rng.gen_range(-3..=3));
        let b = Scalar::from_int(rng.gen_range(-3..=3));
        &a + &(&b * &Scalar::i())
    })
}

fn inner(ws: &Workspace, rep: &mut Report) -> Result<(), ShellError> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for (gn, mn, g) in ws.grams() {
        let v = ws.module(mn)?;
        absorb(rep, gn, verify_inner_product(v, g));
        absorb(rep, &format!("{gn}/μ"), mu(v, g).map(|(_, r)| r));
        for k in 0..ADJOINT_SAMPLES {
            let t = random_map(&mut rng, v.dim, v.dim);
            absorb(rep, &format!("{gn}/T{k}"), check_adjoint(&t, g, g));
        }
        let t = random_map(&mut rng, v.dim, v.dim);
        absorb(
            rep,
            &format!("{gn}/module props"),
            check_adjoint_module_props(&t, v, g, v, g),
        );
        absorb(rep, &format!("{gn}/End"), end_left_star_algebra(v, g).map(|e| e.report));
        if let Some((_, d)) = ws.star_of(mn) {
            two_out_of_three_round_trip(rep, gn, v, d, g);
        }
    }
    Ok(())
}

/// From (star, gram) derive the form, then recover each input from the
/// other two.
pub fn two_out_of_three_round_trip(rep: &mut Report, prefix: &str, v: &HModule, d: &Matrix, g: &Matrix) {
    let first = match two_out_of_three(
        v,
        Given::StarGram {
            star: d.clone(),
            gram: g.clone(),
        },
    ) {
        Ok(t) => t,
        Err(e) => {
            rep.fail(format!("{prefix}/2-of-3"), Witness::text(e.to_string()));
            return;
        }
    };
    rep.absorb(&format!("{prefix}/2-of-3 star,gram"), first.report.clone());
    let h = first.form.clone();
    match two_out_of_three(
        v,
        Given::StarForm {
            star: d.clone(),
            form: h.clone(),
        },
    ) {
        Ok(t) => {
            rep.matrices_equal(format!("{prefix}/2-of-3 gram recovered"), &t.gram, g);
        }
        Err(e) => rep.fail(format!("{prefix}/2-of-3 star,form"), Witness::text(e.to_string())),
    }
    match two_out_of_three(
        v,
        Given::GramForm {
            gram: g.clone(),
            form: h,
        },
    ) {
        Ok(t) => {
            rep.matrices_equal(format!("{prefix}/2-of-3 star recovered"), &t.star, d);
        }
        Err(e) => rep.fail(format!("{prefix}/2-of-3 gram,form"), Witness::text(e.to_string())),
    }
}

//! The eleven acceptance criteria. Runs without the libtest harness so that
//! each criterion prints exactly one `criterion N: PASS|FAIL` line; a failing
//! criterion panics with its collected problems and the binary exits 1.

use std::path::Path;
use std::process::Command;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hopfstar::braid::{
    braiding, check_braiding_coherence, check_conjugate_braiding_is_braiding, check_reality_consequences,
    conjugate_braiding, drinfeld_u, r_reality, verify_quasitriangular, Reality, R_AXIOMS, R_DERIVED,
};
use hopfstar::conj::{check_naturality, check_rho_associativity, natural_isos};
use hopfstar::fixtures::{curated_mutations, fixture, sweedler_index, Fixture, SHIPPED};
use hopfstar::hmod::{check_hom_invariants, intertwiners, ModuleMap};
use hopfstar::hopf::{check_antipode_inverse, failing_axioms, verify_hopf_star, AXIOMS, DERIVED};
use hopfstar::inner::{check_adjoint, check_adjoint_module_props, end_left_star_algebra, two_out_of_three, Given};
use hopfstar::linalg::Matrix;
use hopfstar::report::{Report, Status};
use hopfstar::shell::suites::random_map;
use hopfstar::shell::{fixture_documents, Document};
use hopfstar::staralg::{
    is_star_morphism, kappa, star_universal_lift, tensor_algebra_star, tensor_power_star, TruncatedTensorAlgebra,
};

fn fixtures() -> Vec<Fixture> {
    SHIPPED.iter().map(|n| fixture(n).expect("shipped fixture")).collect()
}

fn quasitriangular_fixtures() -> Vec<Fixture> {
    fixtures().into_iter().filter(|f| !f.r_matrices.is_empty()).collect()
}

fn criterion(n: usize, title: &str, problems: &[String]) {
    let status = if problems.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n}: {status}: {title}");
    assert!(problems.is_empty(), "criterion {n} ({title}):\n{}", problems.join("\n"));
}

fn require(problems: &mut Vec<String>, label: impl std::fmt::Display, r: &Report) {
    if !r.all_pass() {
        problems.push(format!("{label}: {:?}", r.failed_names()));
    }
}

fn criterion_01_axiom_suite_and_mutations() {
    let mut problems = Vec::new();
    for name in ["trivial", "group_z2", "group_z3", "sweedler(0)", "sweedler(1)"] {
        let f = fixture(name).unwrap();
        let r = verify_hopf_star(&f.algebra).unwrap();
        for check in AXIOMS.iter().chain(DERIVED.iter()) {
            if r.status_of(check) != Some(Status::Pass) {
                problems.push(format!("{name}: {check} does not pass"));
            }
        }
    }
    let mutations = curated_mutations();
    if mutations.len() != 10 {
        problems.push(format!("{} curated mutations, expected 10", mutations.len()));
    }
    for m in &mutations {
        let base = fixture(m.fixture).unwrap();
        let r = verify_hopf_star(&m.apply(&base.algebra)).unwrap();
        let failed = failing_axioms(&r);
        if failed != [m.target] {
            problems.push(format!(
                "{}: failing axioms {failed:?}, expected [{}]",
                m.label(),
                m.target
            ));
        }
    }
    criterion(
        1,
        "axiom suite passes; 10 mutations each fail exactly their axiom",
        &problems,
    );
}

fn criterion_02_star_antipode_identities() {
    let mut problems = Vec::new();
    for f in fixtures() {
        require(&mut problems, &f.name, &check_antipode_inverse(&f.algebra));
        let s = &f.algebra.antipode;
        let inv = f.algebra.antipode_inverse().unwrap();
        if &inv * s != Matrix::identity(f.algebra.dim) {
            problems.push(format!("{}: antipode_inverse∘S ≠ id", f.name));
        }
    }
    // Oracle: S⁻¹(x) = gx, S⁻¹(gx) = -x on Sweedler's algebra.
    let sw = fixture("sweedler(1)").unwrap();
    let expected = Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
    if sw.algebra.antipode_inverse().unwrap() != expected {
        problems.push("Sweedler S⁻¹ differs from the oracle".to_string());
    }
    criterion(2, "∗S∗S = id and S⁻¹∘S = id on every fixture", &problems);
}

fn criterion_03_hom_invariants() {
    let mut problems = Vec::new();
    let mut pairs = 0;
    for f in fixtures() {
        for a in &f.modules {
            for b in &f.modules {
                if a.module.dim > 4 || b.module.dim > 4 {
                    continue;
                }
                pairs += 1;
                match check_hom_invariants(&a.module, &b.module) {
                    Ok(r) => require(&mut problems, format!("{} {}→{}", f.name, a.name, b.name), &r),
                    Err(e) => problems.push(format!("{} {}→{}: {e}", f.name, a.name, b.name)),
                }
            }
        }
    }
    if pairs < 12 {
        problems.push(format!("only {pairs} pairs"));
    }
    // Oracle: dim Hom_H(V, W) over Sweedler's algebra, rows V, columns W.
    let order = ["trivial", "sign", "p_plus", "p_minus", "trivial_sign"];
    let dims = [
        [1, 0, 0, 1, 1],
        [0, 1, 1, 0, 1],
        [1, 0, 1, 1, 1],
        [0, 1, 1, 1, 1],
        [1, 1, 1, 1, 2],
    ];
    let sw = fixture("sweedler(1)").unwrap();
    for (i, a) in order.iter().enumerate() {
        for (j, b) in order.iter().enumerate() {
            let n = intertwiners(&sw.module(a).unwrap().module, &sw.module(b).unwrap().module)
                .unwrap()
                .len();
            if n != dims[i][j] {
                problems.push(format!("dim Hom_H({a}, {b}) = {n}, oracle {}", dims[i][j]));
            }
        }
    }
    println!("  {pairs} ordered pairs compared");
    criterion(3, "Hom_ℓ(V,W)^H = Hom_H(V,W) by echelon comparison", &problems);
}

fn criterion_04_conjugation_coherence() {
    let mut problems = Vec::new();
    for f in fixtures() {
        let mods = &f.modules;
        for a in mods {
            for b in mods {
                let label = format!("{} {},{}", f.name, a.name, b.name);
                match natural_isos(&a.module, &b.module) {
                    Ok(n) => {
                        require(&mut problems, &label, &n.report);
                        for (name, m) in [("gamma", &n.gamma), ("sigma", &n.sigma), ("pi", &n.pi), ("rho", &n.rho)] {
                            if !m.is_module_map() {
                                problems.push(format!("{label}: {name} is not a module map"));
                            }
                        }
                        for (name, m) in [("beta_dual", &n.beta_dual), ("beta_hom", &n.beta_hom)] {
                            if !m.is_module_map() {
                                problems.push(format!("{label}: {name} does not intertwine"));
                            }
                        }
                    }
                    Err(e) => problems.push(format!("{label}: {e}")),
                }
                for c in mods {
                    match check_rho_associativity(&a.module, &b.module, &c.module) {
                        Ok(r) => require(&mut problems, format!("{label},{} associativity", c.name), &r),
                        Err(e) => problems.push(format!("{label},{}: {e}", c.name)),
                    }
                }
                let id = ModuleMap::new(a.module.clone(), a.module.clone(), Matrix::identity(a.module.dim)).unwrap();
                for t in intertwiners(&a.module, &b.module).unwrap() {
                    let t = ModuleMap::new(a.module.clone(), b.module.clone(), t).unwrap();
                    match check_naturality(&t, &id) {
                        Ok(r) => require(&mut problems, format!("{label} naturality"), &r),
                        Err(e) => problems.push(format!("{label} naturality: {e}")),
                    }
                }
            }
        }
    }
    criterion(
        4,
        "σ, γ, π, ρ module maps; ρ associativity; β_dual, β_hom intertwine",
        &problems,
    );
}

fn criterion_05_kappa() {
    let mut problems = Vec::new();
    // Index reversal on (ℂ²)^{⊗3}: e_{abc} ↦ e_{cba}, computed independently.
    let reversal = Matrix::permutation(
        &(0..8)
            .map(|i| {
                let (a, b, c) = (i / 4, (i / 2) % 2, i % 2);
                c * 4 + b * 2 + a
            })
            .collect::<Vec<_>>(),
    );
    let mut checked = 0;
    for f in fixtures() {
        for m in f.modules.iter().filter(|m| m.module.dim == 2) {
            checked += 1;
            let k = kappa(&m.module, 3);
            let label = format!("{} {}", f.name, m.name);
            require(&mut problems, &label, &k.report);
            let t = TruncatedTensorAlgebra::new(&m.module, 3);
            if (t.offset(3), t.block_dim(3)) != (7, 8) {
                problems.push(format!(
                    "{label}: degree-3 block at {} of size {}",
                    t.offset(3),
                    t.block_dim(3)
                ));
            }
            if k.matrix.block(7, 7, 8, 8) != reversal {
                problems.push(format!("{label}: degree-3 block is not the index reversal"));
            }
            if k.matrix.block(7, 0, 8, 7) != Matrix::zeros(8, 7) || k.matrix.block(0, 7, 7, 8) != Matrix::zeros(7, 8) {
                problems.push(format!("{label}: κ mixes degrees"));
            }
        }
    }
    if checked == 0 {
        problems.push("no 2-dimensional module".to_string());
    }
    criterion(
        5,
        "κ for dim V = 2, N = 3 is a module-algebra isomorphism reversing legs",
        &problems,
    );
}

fn criterion_06_star_lift() {
    let mut problems = Vec::new();
    for f in fixtures() {
        for m in &f.modules {
            let Some(d) = &m.star else { continue };
            let v = &m.module;
            let label = format!("{} {}", f.name, m.name);
            let degree = 3;
            let (t, star, report) = match tensor_algebra_star(v, d, degree) {
                Ok(x) => x,
                Err(e) => {
                    problems.push(format!("{label}: {e}"));
                    continue;
                }
            };
            require(&mut problems, &label, &report);
            for n in 0..=degree {
                let p = tensor_power_star(v, d, n).unwrap();
                let (o, b) = (t.offset(n), t.block_dim(n));
                if star.dagger.block(o, o, b, b) != p.dagger {
                    problems.push(format!("{label}: degree {n} differs from tensor_power_star"));
                }
            }
            let incl = ModuleMap::new(v.clone(), t.algebra.carrier.clone(), t.inclusion()).unwrap();
            match star_universal_lift(&incl, d, &t.algebra, &star.dagger, degree) {
                Ok(l) => {
                    require(&mut problems, format!("{label} universal lift"), &l.report);
                    if !is_star_morphism(&l.matrix, &star.dagger, &star.dagger) {
                        problems.push(format!("{label}: lift is not a *-morphism"));
                    }
                }
                Err(e) => problems.push(format!("{label} universal lift: {e}")),
            }
        }
    }
    criterion(
        6,
        "tensor_algebra_star equals per-degree tensor_power_star; lift is a *-morphism",
        &problems,
    );
}

fn criterion_07_quasitriangular() {
    let mut problems = Vec::new();
    for lambda in ["0", "1", "-2"] {
        let f = fixture(&format!("sweedler({lambda})")).unwrap();
        let r = &f.r_matrices[0].r;
        let rep = verify_quasitriangular(r);
        for check in R_AXIOMS.iter().chain(R_DERIVED.iter()) {
            if rep.status_of(check) != Some(Status::Pass) {
                problems.push(format!("λ={lambda}: {check} does not pass"));
            }
        }
        match drinfeld_u(r) {
            Ok(u) => {
                require(&mut problems, format!("λ={lambda} Drinfeld"), &u.report);
                if u.report.status_of("S²(a) = u a u⁻¹") != Some(Status::Pass) {
                    problems.push(format!("λ={lambda}: S² is not conjugation by u"));
                }
                // Oracle: u = g for every λ.
                if u.u != hopfstar::linalg::unit_vector(4, sweedler_index(1, 0)) {
                    problems.push(format!("λ={lambda}: u differs from g"));
                }
            }
            Err(e) => problems.push(format!("λ={lambda}: {e}")),
        }
    }
    criterion(
        7,
        "Sweedler R_λ, λ ∈ {0, 1, -2}: axioms, QYBE, counit, antipode, Drinfeld u",
        &problems,
    );
}

fn criterion_08_braiding_coherence() {
    let mut problems = Vec::new();
    for f in quasitriangular_fixtures() {
        let mods = f.plain_modules();
        for nr in &f.r_matrices {
            let r = &nr.r;
            let label = format!("{} {}", f.name, nr.name);
            for u in &mods {
                for v in &mods {
                    for w in &mods {
                        match check_braiding_coherence(r, u, v, w, None) {
                            Ok(rep) => require(&mut problems, &label, &rep),
                            Err(e) => problems.push(format!("{label}: {e}")),
                        }
                    }
                }
            }
            let braid = |a: &_, b: &_| braiding(r, a, b).map(|m| m.matrix);
            for v in &mods {
                for w in &mods {
                    for t in intertwiners(v, w).unwrap() {
                        let t = ModuleMap::new(v.clone(), w.clone(), t).unwrap();
                        for u in &mods {
                            let id = ModuleMap::new(u.clone(), u.clone(), Matrix::identity(u.dim)).unwrap();
                            match hopfstar::braid::check_naturality(&braid, &t, &id) {
                                Ok(rep) => require(&mut problems, format!("{label} ψ naturality"), &rep),
                                Err(e) => problems.push(format!("{label}: {e}")),
                            }
                        }
                    }
                    match conjugate_braiding(r, v, w) {
                        Ok((_, rep)) => {
                            if rep.status_of("ξ route = τ∘R₂₁*") != Some(Status::Pass) {
                                problems.push(format!("{label}: dual-route cross-check fails"));
                            }
                        }
                        Err(e) => problems.push(format!("{label}: {e}")),
                    }
                }
            }
            match check_conjugate_braiding_is_braiding(r, &mods) {
                Ok(rep) => require(&mut problems, format!("{label} ψ̄"), &rep),
                Err(e) => problems.push(format!("{label} ψ̄: {e}")),
            }
        }
    }
    // Oracle: ψ for R₁ on p_plus⊗p_plus.
    let sw = fixture("sweedler(1)").unwrap();
    let pp = &sw.module("p_plus").unwrap().module;
    let psi = braiding(&sw.r_matrices[0].r, pp, pp).unwrap().matrix;
    if psi != Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, -1]]) {
        problems.push(format!("ψ(p_plus, p_plus) differs from the oracle:\n{psi}"));
    }
    criterion(
        8,
        "hexagons and naturality for ψ and ψ̄; ξ = τ∘R₂₁* cross-check",
        &problems,
    );
}

fn criterion_09_reality() {
    let mut problems = Vec::new();
    // Oracle classifications.
    let expected = [
        ("trivial", "r_trivial", Reality::Both),
        ("group_z2", "r_fourier", Reality::Both),
        ("group_z3", "r_fourier", Reality::InverseReal),
        ("sweedler(1)", "r_lambda", Reality::Both),
    ];
    for (fx, rn, class) in expected {
        let f = fixture(fx).unwrap();
        let r = &f.r_matrices.iter().find(|n| n.name == rn).unwrap().r;
        if r_reality(r) != class {
            problems.push(format!("{fx} {rn}: {:?}, oracle {class:?}", r_reality(r)));
        }
    }
    let mut star_checks = 0;
    for f in quasitriangular_fixtures() {
        for nr in &f.r_matrices {
            let r = &nr.r;
            let class = r_reality(r);
            if class == Reality::Neither {
                continue;
            }
            let label = format!("{} {} ({})", f.name, nr.name, class.as_str());
            for a in &f.modules {
                for b in &f.modules {
                    match check_reality_consequences(r, &a.module, &b.module, None) {
                        Ok(rep) => require(&mut problems, &label, &rep),
                        Err(e) => problems.push(format!("{label}: {e}")),
                    }
                }
                if let (true, Some(d)) = (class.is_real(), &a.star) {
                    star_checks += 1;
                    match check_reality_consequences(r, &a.module, &a.module, Some(d)) {
                        Ok(rep) => {
                            require(&mut problems, format!("{label} {}", a.name), &rep);
                            if rep.status_of("real: ψ_VV is a *-morphism") != Some(Status::Pass) {
                                problems.push(format!("{label}: ψ_VV on {} is not a *-morphism", a.name));
                            }
                        }
                        Err(e) => problems.push(format!("{label}: {e}")),
                    }
                }
            }
        }
    }
    if star_checks == 0 {
        problems.push("no real R with a *-module".to_string());
    }
    criterion(
        9,
        "real R: ψ̄ = ψ and ψ_VV *-morphism; inverse real: ψ̄_VW = ψ_WV⁻¹",
        &problems,
    );
}

fn criterion_10_inner_and_adjoint() {
    let mut problems = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for f in fixtures() {
        for m in &f.modules {
            let Some(g) = &m.gram else { continue };
            let v = &m.module;
            let label = format!("{} {}", f.name, m.name);
            for k in 0..20 {
                let t = random_map(&mut rng, v.dim, v.dim);
                match check_adjoint(&t, g, g) {
                    Ok(r) => require(&mut problems, format!("{label} T{k}"), &r),
                    Err(e) => problems.push(format!("{label} T{k}: {e}")),
                }
            }
            let t = random_map(&mut rng, v.dim, v.dim);
            match check_adjoint_module_props(&t, v, g, v, g) {
                Ok(r) => require(&mut problems, format!("{label} (a⊳T)†"), &r),
                Err(e) => problems.push(format!("{label}: {e}")),
            }
            match end_left_star_algebra(v, g) {
                Ok(e) => require(&mut problems, format!("{label} End_ℓ"), &e.report),
                Err(e) => problems.push(format!("{label} End_ℓ: {e}")),
            }
            if let Some(d) = &m.star {
                let first = two_out_of_three(
                    v,
                    Given::StarGram {
                        star: d.clone(),
                        gram: g.clone(),
                    },
                )
                .unwrap();
                require(&mut problems, format!("{label} 2-of-3"), &first.report);
                let h = first.form;
                let from_form = two_out_of_three(
                    v,
                    Given::StarForm {
                        star: d.clone(),
                        form: h.clone(),
                    },
                )
                .unwrap();
                let from_gram = two_out_of_three(
                    v,
                    Given::GramForm {
                        gram: g.clone(),
                        form: h.clone(),
                    },
                )
                .unwrap();
                if from_form.gram != *g || from_form.form != h || from_form.star != *d {
                    problems.push(format!("{label}: (star, form) round trip"));
                }
                if from_gram.star != *d || from_gram.gram != *g || from_gram.form != h {
                    problems.push(format!("{label}: (gram, form) round trip"));
                }
            }
        }
    }
    criterion(
        10,
        "adjoint relation, T†† = T, (a⊳T)† = S(a)*⊳T†, End_ℓ(V), 2-of-3 round trips",
        &problems,
    );
}

fn hopfstar_bin() -> &'static str {
    env!("CARGO_BIN_EXE_hopfstar")
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(hopfstar_bin()).args(args).output().expect("run hopfstar");
    let text = String::from_utf8_lossy(&out.stdout).into_owned() + &String::from_utf8_lossy(&out.stderr);
    (out.status.code().unwrap_or(-1), text)
}

fn shipped_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures"))
}

fn criterion_11_cli_contract() {
    let mut problems = Vec::new();
    // Byte-exact round trip of every shipped file, and agreement with the
    // in-memory fixtures.
    let mut files = 0;
    for name in SHIPPED {
        let f = fixture(name).unwrap();
        for doc in fixture_documents(&f) {
            let path = shipped_dir().join(name).join(format!("{}.json", doc.name));
            let text = match std::fs::read_to_string(&path) {
                Ok(t) => t,
                Err(e) => {
                    problems.push(format!("{}: {e}", path.display()));
                    continue;
                }
            };
            files += 1;
            match Document::parse(&text) {
                Ok(parsed) => {
                    if parsed.to_json() != text {
                        problems.push(format!("{}: re-serialization differs", path.display()));
                    }
                    if parsed != doc {
                        problems.push(format!("{}: differs from the built-in fixture", path.display()));
                    }
                }
                Err(e) => problems.push(format!("{}: {e}", path.display())),
            }
        }
    }
    println!("  {files} shipped files round-tripped");

    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    let z2 = shipped_dir().join("group_z2");
    let z2_alg = z2.join("group_z2.json");
    let expect = |problems: &mut Vec<String>, what: &str, args: &[&str], code: i32, needle: Option<&str>| {
        let (got, text) = run(args);
        if got != code {
            problems.push(format!("{what}: exit {got}, expected {code}\n{text}"));
        }
        if let Some(n) = needle {
            if !text.contains(n) {
                problems.push(format!("{what}: output lacks `{n}`\n{text}"));
            }
        }
    };
    expect(
        &mut problems,
        "validate group_z2",
        &["validate", z2_alg.to_str().unwrap()],
        0,
        None,
    );

    // A corrupted antipode entry: S(g) = -g.
    let bad = dir.join("bad");
    std::fs::create_dir(&bad).unwrap();
    let mut doc = Document::parse(&std::fs::read_to_string(&z2_alg).unwrap()).unwrap();
    if let hopfstar::shell::Body::Algebra(h) = &mut doc.body {
        h.antipode.set(1, 1, hopfstar::scalar::Scalar::from_int(-1));
    }
    let bad_file = bad.join("group_z2.json");
    std::fs::write(&bad_file, doc.to_json()).unwrap();
    expect(
        &mut problems,
        "validate corrupted antipode",
        &["validate", bad_file.to_str().unwrap()],
        1,
        Some("[fail] antipode"),
    );

    let broken = dir.join("broken.json");
    std::fs::write(&broken, "{\"kind\": \"algebra\",\n \"dim\": }").unwrap();
    expect(
        &mut problems,
        "validate malformed",
        &["validate", broken.to_str().unwrap()],
        2,
        Some("2:9"),
    );

    let dangling = dir.join("dangling");
    std::fs::create_dir(&dangling).unwrap();
    let dfile = dangling.join("m.json");
    std::fs::write(
        &dfile,
        "{\"kind\": \"module\", \"name\": \"m\", \"algebra\": \"nowhere\", \"dim\": 1, \"action\": [[[\"1\"]]]}\n",
    )
    .unwrap();
    expect(
        &mut problems,
        "validate dangling",
        &["validate", dfile.to_str().unwrap()],
        2,
        Some("nowhere"),
    );

    let sw = shipped_dir().join("sweedler(1)");
    let sw = sw.to_str().unwrap();
    expect(
        &mut problems,
        "check hom-invariants",
        &["check", "hom-invariants", "--workspace", sw],
        0,
        None,
    );
    expect(
        &mut problems,
        "check unknown suite",
        &["check", "no-such-suite", "--workspace", sw],
        2,
        None,
    );
    expect(
        &mut problems,
        "check unknown fixture",
        &["check", "axioms", "--fixture", "nope"],
        2,
        None,
    );

    let out = dir.join("pp_bar.json");
    expect(
        &mut problems,
        "construct conjugate",
        &[
            "construct",
            "conjugate",
            "--in",
            "p_plus",
            "--out",
            out.to_str().unwrap(),
            "--workspace",
            sw,
        ],
        0,
        None,
    );
    let report = dir.join("report.json");
    let (code, text) = run(&[
        "report",
        "--format",
        "json",
        "--suite",
        "tilde",
        "--fixture",
        "group_z2",
    ]);
    if code != 0 {
        problems.push(format!("report json: exit {code}"));
    }
    std::fs::write(&report, &text).unwrap();
    let (code, again) = run(&["report", "--format", "json", "--from", report.to_str().unwrap()]);
    if code != 0 || again != text {
        problems.push("report JSON does not round-trip byte for byte".to_string());
    }
    criterion(11, "file round trips and the 0/1/2 exit-code contract", &problems);
}

fn main() {
    let criteria: [fn(); 11] = [
        criterion_01_axiom_suite_and_mutations,
        criterion_02_star_antipode_identities,
        criterion_03_hom_invariants,
        criterion_04_conjugation_coherence,
        criterion_05_kappa,
        criterion_06_star_lift,
        criterion_07_quasitriangular,
        criterion_08_braiding_coherence,
        criterion_09_reality,
        criterion_10_inner_and_adjoint,
        criterion_11_cli_contract,
    ];
    let failed = criteria
        .iter()
        .filter(|&&c| std::panic::catch_unwind(c).is_err())
        .count();
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

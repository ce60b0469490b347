//! File formats, workspaces, validation, constructions and suites behind the
//! command-line tool.

pub mod io;
pub mod suites;
pub mod workspace;

use std::path::Path;
use std::sync::Arc;

use crate::braid::{braiding, drinfeld_u, verify_quasitriangular};
use crate::conj::{conjugate_map, conjugate_module};
use crate::fixtures::{fixture, Fixture, SHIPPED};
use crate::hmod::{check_module_map, hom_left, left_dual, tensor_module, verify_module, HModule};
use crate::hopf::{check_antipode_inverse, verify_hopf_star, HopfAlgebra};
use crate::inner::{adjoint, two_out_of_three, verify_inner_product, Given};
use crate::report::Report;
use crate::staralg::{tensor_algebra_star, verify_module_algebra, verify_star_module, TruncatedTensorAlgebra};

pub use io::{Body, Document, ParseError, Ref};
pub use suites::{run_suite, SUITES};
pub use workspace::{Object, ShellError, Workspace};

/// Process exit codes.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

pub const CONSTRUCTIONS: [&str; 8] = [
    "conjugate",
    "dual",
    "tensor",
    "hom",
    "tensor-algebra",
    "braiding",
    "adjoint",
    "two-out-of-three",
];

/// File name for an object of the given name.
pub fn file_name(name: &str) -> String {
    format!("{name}.json")
}

/// The documents of a fixture bundle: the algebra under the fixture's name,
/// each module under its own name, stars and grams as `<module>.star` and
/// `<module>.gram`, and the R-matrices.
pub fn fixture_documents(f: &Fixture) -> Vec<Document> {
    let alg = || Ref::Name(f.name.clone());
    let mut docs = vec![Document::new(f.name.clone(), Body::Algebra((*f.algebra).clone()))];
    for m in &f.modules {
        docs.push(Document::new(
            m.name.clone(),
            Body::Module {
                algebra: alg(),
                action: m.module.action.clone(),
            },
        ));
        if let Some(d) = &m.star {
            docs.push(Document::new(
                format!("{}.star", m.name),
                Body::Star {
                    module: Ref::Name(m.name.clone()),
                    matrix: d.clone(),
                },
            ));
        }
        if let Some(g) = &m.gram {
            docs.push(Document::new(
                format!("{}.gram", m.name),
                Body::Gram {
                    module: Ref::Name(m.name.clone()),
                    matrix: g.clone(),
                },
            ));
        }
    }
    for r in &f.r_matrices {
        docs.push(Document::new(
            r.name.clone(),
            Body::RMatrix {
                algebra: alg(),
                coeffs: r.r.coeffs.clone(),
                inverse: Some(r.r.inverse.clone()),
            },
        ));
    }
    docs
}

/// Writes every shipped fixture to `<dir>/<fixture>/<object>.json`.
pub fn export_fixtures(dir: &Path) -> Result<Vec<std::path::PathBuf>, ShellError> {
    let mut written = Vec::new();
    for name in SHIPPED {
        let f = fixture(name).map_err(|e| ShellError::Usage(e.to_string()))?;
        let sub = dir.join(name);
        std::fs::create_dir_all(&sub).map_err(|source| ShellError::Io {
            path: sub.display().to_string(),
            source,
        })?;
        for d in fixture_documents(&f) {
            let p = sub.join(file_name(&d.name));
            write_file(&p, &d.to_json())?;
            written.push(p);
        }
    }
    Ok(written)
}

pub fn write_file(path: &Path, text: &str) -> Result<(), ShellError> {
    std::fs::write(path, text).map_err(|source| ShellError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// A workspace from a directory or a fixture name.
pub fn open_workspace(dir: Option<&Path>, fixture_name: Option<&str>) -> Result<Workspace, ShellError> {
    match (dir, fixture_name) {
        (Some(_), Some(_)) => Err(ShellError::Usage("give --workspace or --fixture, not both".to_string())),
        (Some(d), None) => Workspace::load_dir(d),
        (None, Some(n)) => {
            let f = fixture(n).map_err(|e| ShellError::Usage(e.to_string()))?;
            Workspace::from_fixture(&f)
        }
        (None, None) => Err(ShellError::Usage(
            "give --workspace <dir> or --fixture <name>".to_string(),
        )),
    }
}

/// Loads `file` with the other files of `dir` (default: its own directory)
/// as the reference workspace; the file shadows a sibling of the same name.
pub fn load_with_siblings(file: &Path, dir: Option<&Path>) -> Result<(Workspace, String), ShellError> {
    let target = workspace::read_document(file)?;
    let dir = match dir {
        Some(d) => d.to_path_buf(),
        None => file.parent().map(Path::to_path_buf).unwrap_or_default(),
    };
    let dir = if dir.as_os_str().is_empty() { ".".into() } else { dir };
    let same = |p: &Path| match (p.canonicalize(), file.canonicalize()) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    };
    let mut docs = Vec::new();
    for p in workspace::json_files(&dir)? {
        if same(&p) {
            continue;
        }
        let d = workspace::read_document(&p)?;
        if d.name != target.name {
            docs.push(d);
        }
    }
    let name = target.name.clone();
    docs.push(target);
    Ok((Workspace::from_documents(docs)?, name))
}

/// Runs the verifier matching the object's kind.
pub fn validate(ws: &Workspace, name: &str) -> Result<Report, ShellError> {
    let invalid = |reason: String| ShellError::Invalid {
        name: name.to_string(),
        reason,
    };
    let mut rep = Report::new(name);
    match ws.get(name)? {
        Object::Algebra(h) => {
            rep.absorb("", verify_hopf_star(h).map_err(|e| invalid(e.to_string()))?);
            rep.absorb("", check_antipode_inverse(h));
        }
        Object::Module(v) => rep.absorb("", verify_module(v)),
        Object::Map(t) => {
            check_module_map(&mut rep, "module map", &t.matrix, &t.domain, &t.codomain);
        }
        Object::Star { matrix, .. } => rep.absorb("", verify_star_module(ws.carrier(name)?, matrix)),
        Object::Gram { matrix, .. } => rep.absorb(
            "",
            verify_inner_product(ws.carrier(name)?, matrix).map_err(|e| invalid(e.to_string()))?,
        ),
        Object::Form {
            star_matrix, matrix, ..
        } => {
            let t = two_out_of_three(
                ws.carrier(name)?,
                Given::StarForm {
                    star: star_matrix.clone(),
                    form: matrix.clone(),
                },
            )
            .map_err(|e| invalid(e.to_string()))?;
            rep.absorb("", t.report);
        }
        Object::RMatrix(r) => {
            rep.absorb("", verify_quasitriangular(r));
            match drinfeld_u(r) {
                Ok(u) => rep.absorb("drinfeld", u.report),
                Err(e) => rep.skip("drinfeld", e.to_string()),
            }
        }
        Object::ModuleAlgebra(a) => rep.absorb("", verify_module_algebra(a)),
        Object::Report(r) => {
            rep.absorb("", r.clone());
        }
    }
    Ok(rep)
}

/// A reference to `h`: its workspace name if registered, else inline.
fn algebra_ref(ws: &Workspace, h: &Arc<HopfAlgebra>) -> Ref {
    ws.algebras()
        .into_iter()
        .find(|(_, a)| Arc::ptr_eq(a, h) || ***a == **h)
        .map(|(n, _)| Ref::Name(n.to_string()))
        .unwrap_or_else(|| Ref::Inline(Box::new(Document::new("algebra", Body::Algebra((**h).clone())))))
}

fn module_doc(ws: &Workspace, name: String, v: &HModule) -> Document {
    Document::new(
        name,
        Body::Module {
            algebra: algebra_ref(ws, &v.algebra),
            action: v.action.clone(),
        },
    )
}

fn inline_module(ws: &Workspace, name: String, v: &HModule) -> Ref {
    Ref::Inline(Box::new(module_doc(ws, name, v)))
}

fn doc_ref(ws: &Workspace, name: &str, key: &str) -> Result<Ref, ShellError> {
    let doc = ws
        .documents
        .get(name)
        .ok_or_else(|| ShellError::Reference(format!("dangling name `{name}`")))?;
    match (&doc.body, key) {
        (Body::Map { domain, .. }, "domain") => Ok(domain.clone()),
        (Body::Map { codomain, .. }, "codomain") => Ok(codomain.clone()),
        (Body::Star { module, .. } | Body::Gram { module, .. }, "module") => Ok(module.clone()),
        (Body::Form { star, .. }, "star") => Ok(star.clone()),
        _ => Err(ShellError::Reference(format!("`{name}` has no `{key}`"))),
    }
}

fn arity(construction: &str, inputs: &[String], n: usize) -> Result<(), ShellError> {
    if inputs.len() == n {
        Ok(())
    } else {
        Err(ShellError::Usage(format!(
            "`{construction}` takes {n} input(s), got {}",
            inputs.len()
        )))
    }
}

/// Executes a named construction on workspace objects. The report verifies
/// the result; the document is produced even when a check fails.
pub fn construct(
    ws: &Workspace,
    construction: &str,
    inputs: &[String],
    out_name: Option<&str>,
    degree: usize,
) -> Result<(Document, Report), ShellError> {
    let name = out_name
        .map(str::to_string)
        .unwrap_or_else(|| format!("{construction}_{}", inputs.join("_")));
    let mut rep = Report::new(format!("construct {name}"));
    let bad = |e: &dyn std::fmt::Display| ShellError::Invalid {
        name: name.clone(),
        reason: e.to_string(),
    };
    let doc = match construction {
        "conjugate" => {
            arity(construction, inputs, 1)?;
            match ws.get(&inputs[0])? {
                Object::Module(v) => {
                    let b = conjugate_module(v);
                    rep.absorb("", verify_module(&b));
                    module_doc(ws, name, &b)
                }
                Object::Map(t) => {
                    let c = conjugate_map(t).map_err(|e| bad(&e))?;
                    check_module_map(&mut rep, "module map", &c.matrix, &c.domain, &c.codomain);
                    Document::new(
                        name.clone(),
                        Body::Map {
                            domain: inline_module(ws, format!("conjugate({})", inputs[0]) + ".domain", &c.domain),
                            codomain: inline_module(ws, format!("conjugate({})", inputs[0]) + ".codomain", &c.codomain),
                            matrix: c.matrix,
                        },
                    )
                }
                _ => return Err(ShellError::Usage("conjugate takes a module or a map".to_string())),
            }
        }
        "dual" => {
            arity(construction, inputs, 1)?;
            let d = left_dual(ws.module(&inputs[0])?);
            rep.absorb("", verify_module(&d));
            module_doc(ws, name, &d)
        }
        "tensor" => {
            if inputs.is_empty() {
                return Err(ShellError::Usage("tensor takes at least one module".to_string()));
            }
            let mut t = ws.module(&inputs[0])?.clone();
            for n in &inputs[1..] {
                t = tensor_module(&t, ws.module(n)?).map_err(|e| bad(&e))?;
            }
            rep.absorb("", verify_module(&t));
            module_doc(ws, name, &t)
        }
        "hom" => {
            arity(construction, inputs, 2)?;
            let h = hom_left(ws.module(&inputs[0])?, ws.module(&inputs[1])?).map_err(|e| bad(&e))?;
            rep.absorb("", verify_module(&h));
            module_doc(ws, name, &h)
        }
        "tensor-algebra" => {
            arity(construction, inputs, 1)?;
            match ws.get(&inputs[0])? {
                Object::Module(v) => {
                    let t = TruncatedTensorAlgebra::new(v, degree);
                    rep.absorb("", t.verify());
                    Document::new(
                        name.clone(),
                        Body::ModuleAlgebra {
                            module: inline_module(ws, format!("{name}.carrier"), &t.algebra.carrier),
                            mult: t.algebra.mult.clone(),
                            unit: t.algebra.unit.clone(),
                        },
                    )
                }
                Object::Star { matrix, .. } => {
                    let v = ws.carrier(&inputs[0])?;
                    let (t, star, r) = tensor_algebra_star(v, matrix, degree).map_err(|e| bad(&e))?;
                    rep.absorb("", r);
                    Document::new(
                        name.clone(),
                        Body::Star {
                            module: inline_module(ws, format!("{name}.carrier"), &t.algebra.carrier),
                            matrix: star.dagger,
                        },
                    )
                }
                _ => return Err(ShellError::Usage("tensor-algebra takes a module or a star".to_string())),
            }
        }
        "braiding" => {
            arity(construction, inputs, 3)?;
            let r = match ws.get(&inputs[0])? {
                Object::RMatrix(r) => r,
                _ => {
                    return Err(ShellError::Usage(
                        "braiding takes an R-matrix and two modules".to_string(),
                    ))
                }
            };
            let (v, w) = (ws.module(&inputs[1])?, ws.module(&inputs[2])?);
            let psi = braiding(r, v, w).map_err(|e| bad(&e))?;
            check_module_map(&mut rep, "module map", &psi.matrix, &psi.domain, &psi.codomain);
            let vw = format!("{}⊗{}", inputs[1], inputs[2]);
            let wv = format!("{}⊗{}", inputs[2], inputs[1]);
            Document::new(
                name.clone(),
                Body::Map {
                    domain: inline_module(ws, vw, &psi.domain),
                    codomain: inline_module(ws, wv, &psi.codomain),
                    matrix: psi.matrix,
                },
            )
        }
        "adjoint" => {
            arity(construction, inputs, 3)?;
            let t = match ws.get(&inputs[0])? {
                Object::Map(t) => t,
                _ => return Err(ShellError::Usage("adjoint takes a map and two grams".to_string())),
            };
            let gram = |n: &str| match ws.get(n) {
                Ok(Object::Gram { matrix, .. }) => Ok(matrix.clone()),
                _ => Err(ShellError::Usage(format!("`{n}` is not a gram"))),
            };
            let (g_v, g_w) = (gram(&inputs[1])?, gram(&inputs[2])?);
            let a = adjoint(&t.matrix, &g_v, &g_w).map_err(|e| bad(&e))?;
            rep.absorb(
                "",
                crate::inner::check_adjoint(&t.matrix, &g_v, &g_w).map_err(|e| bad(&e))?,
            );
            Document::new(
                name.clone(),
                Body::Map {
                    domain: doc_ref(ws, &inputs[0], "codomain")?,
                    codomain: doc_ref(ws, &inputs[0], "domain")?,
                    matrix: a,
                },
            )
        }
        "two-out-of-three" => {
            arity(construction, inputs, 2)?;
            let (mut star, mut gram, mut form) = (None, None, None);
            for n in inputs {
                match ws.get(n)? {
                    Object::Star { matrix, .. } => star = Some((n.as_str(), matrix.clone())),
                    Object::Gram { matrix, .. } => gram = Some((n.as_str(), matrix.clone())),
                    Object::Form { matrix, .. } => form = Some((n.as_str(), matrix.clone())),
                    _ => return Err(ShellError::Usage(format!("`{n}` is not a star, gram or form"))),
                }
            }
            let v = ws.carrier(&inputs[0])?;
            let module_of = |n: &str| -> Result<Ref, ShellError> {
                match ws.get(n)? {
                    Object::Form { .. } => {
                        let star = doc_ref(ws, n, "star")?;
                        match star {
                            Ref::Name(s) => doc_ref(ws, &s, "module"),
                            Ref::Inline(d) => match d.body {
                                Body::Star { module, .. } => Ok(module),
                                _ => Err(ShellError::Reference(format!("`{n}` has no star"))),
                            },
                        }
                    }
                    _ => doc_ref(ws, n, "module"),
                }
            };
            let (given, body) = match (star, gram, form) {
                (Some((sn, d)), Some((_, g)), None) => {
                    let t = two_out_of_three(v, Given::StarGram { star: d, gram: g }).map_err(|e| bad(&e))?;
                    rep.absorb("", t.report);
                    (
                        "star,gram",
                        Body::Form {
                            star: Ref::Name(sn.to_string()),
                            matrix: t.form,
                        },
                    )
                }
                (Some((sn, d)), None, Some((_, h))) => {
                    let t = two_out_of_three(v, Given::StarForm { star: d, form: h }).map_err(|e| bad(&e))?;
                    rep.absorb("", t.report);
                    (
                        "star,form",
                        Body::Gram {
                            module: module_of(sn)?,
                            matrix: t.gram,
                        },
                    )
                }
                (None, Some((gn, g)), Some((_, h))) => {
                    let t = two_out_of_three(v, Given::GramForm { gram: g, form: h }).map_err(|e| bad(&e))?;
                    rep.absorb("", t.report);
                    (
                        "gram,form",
                        Body::Star {
                            module: module_of(gn)?,
                            matrix: t.star,
                        },
                    )
                }
                _ => {
                    return Err(ShellError::Usage(
                        "two-out-of-three takes two distinct kinds".to_string(),
                    ))
                }
            };
            rep.note(format!("given {given}"));
            Document::new(name.clone(), body)
        }
        other => {
            return Err(ShellError::Usage(format!(
                "unknown construction `{other}`; expected one of {}",
                CONSTRUCTIONS.join(", ")
            )))
        }
    };
    Ok((doc, rep))
}

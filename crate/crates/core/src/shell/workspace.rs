//! Named registry of objects loaded from definition files.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use crate::braid::{invert_two_tensor, RMatrix};
use crate::fixtures::Fixture;
use crate::hmod::{HModule, ModuleMap};
use crate::hopf::HopfAlgebra;
use crate::linalg::Matrix;
use crate::report::Report;
use crate::staralg::ModuleAlgebra;

use super::io::{Body, Document, ParseError, Ref};

#[derive(Debug, thiserror::Error)]
pub enum ShellError {
    #[error("{path}: {source}")]
    Parse {
        path: String,
        #[source]
        source: ParseError,
    },
    #[error("reference error: {0}")]
    Reference(String),
    #[error("invalid object `{name}`: {reason}")]
    Invalid { name: String, reason: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

/// A document with its references resolved.
#[derive(Debug, Clone)]
pub enum Object {
    Algebra(Arc<HopfAlgebra>),
    Module(HModule),
    Map(ModuleMap),
    /// A star or Gram matrix, or a form together with the star it is read
    /// against.
    Star {
        module: String,
        matrix: Matrix,
    },
    Gram {
        module: String,
        matrix: Matrix,
    },
    Form {
        star: String,
        star_matrix: Matrix,
        module: String,
        matrix: Matrix,
    },
    RMatrix(RMatrix),
    ModuleAlgebra(ModuleAlgebra),
    Report(Report),
}

/// Resolved objects by name. Inline references are resolved in place and
/// not registered.
#[derive(Debug, Clone, Default)]
pub struct Workspace {
    pub documents: BTreeMap<String, Document>,
    pub objects: BTreeMap<String, Object>,
    /// Resolved module behind each star, gram and form.
    pub carriers: BTreeMap<String, HModule>,
}

pub fn read_document(path: &Path) -> Result<Document, ShellError> {
    let text = std::fs::read_to_string(path).map_err(|source| ShellError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Document::parse(&text).map_err(|source| ShellError::Parse {
        path: path.display().to_string(),
        source,
    })
}

/// The `*.json` files of a directory, sorted by path.
pub fn json_files(dir: &Path) -> Result<Vec<PathBuf>, ShellError> {
    let io = |source| ShellError::Io {
        path: dir.display().to_string(),
        source,
    };
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).map_err(io)? {
        let p = entry.map_err(io)?.path();
        if p.extension().is_some_and(|e| e == "json") {
            files.push(p);
        }
    }
    files.sort();
    Ok(files)
}

impl Workspace {
    pub fn from_documents(docs: Vec<Document>) -> Result<Workspace, ShellError> {
        let mut ws = Workspace::default();
        for d in docs {
            if ws.documents.contains_key(&d.name) {
                return Err(ShellError::Reference(format!("duplicate name `{}`", d.name)));
            }
            ws.documents.insert(d.name.clone(), d);
        }
        let names: Vec<String> = ws.documents.keys().cloned().collect();
        for n in names {
            let mut stack = BTreeSet::new();
            ws.resolve_name(&n, &mut stack)?;
        }
        Ok(ws)
    }

    pub fn load_dir(dir: &Path) -> Result<Workspace, ShellError> {
        let docs = json_files(dir)?
            .iter()
            .map(|p| read_document(p))
            .collect::<Result<Vec<_>, _>>()?;
        Workspace::from_documents(docs)
    }

    pub fn from_fixture(f: &Fixture) -> Result<Workspace, ShellError> {
        Workspace::from_documents(super::fixture_documents(f))
    }

    fn resolve_name(&mut self, name: &str, stack: &mut BTreeSet<String>) -> Result<Object, ShellError> {
        if let Some(o) = self.objects.get(name) {
            return Ok(o.clone());
        }
        let doc = self
            .documents
            .get(name)
            .cloned()
            .ok_or_else(|| ShellError::Reference(format!("dangling name `{name}`")))?;
        if !stack.insert(name.to_string()) {
            return Err(ShellError::Reference(format!("cyclic reference through `{name}`")));
        }
        let o = self.resolve_doc(&doc, stack)?;
        stack.remove(name);
        self.objects.insert(name.to_string(), o.clone());
        Ok(o)
    }

    fn resolve_ref(&mut self, r: &Ref, stack: &mut BTreeSet<String>) -> Result<(String, Object), ShellError> {
        match r {
            Ref::Name(n) => Ok((n.clone(), self.resolve_name(n, stack)?)),
            Ref::Inline(d) => {
                let o = self.resolve_doc(d, stack)?;
                Ok((d.name.clone(), o))
            }
        }
    }

    fn algebra_ref(&mut self, r: &Ref, stack: &mut BTreeSet<String>) -> Result<Arc<HopfAlgebra>, ShellError> {
        match self.resolve_ref(r, stack)? {
            (_, Object::Algebra(h)) => Ok(h),
            (n, _) => Err(ShellError::Reference(format!("`{n}` is not an algebra"))),
        }
    }

    fn module_ref(&mut self, r: &Ref, stack: &mut BTreeSet<String>) -> Result<(String, HModule), ShellError> {
        match self.resolve_ref(r, stack)? {
            (n, Object::Module(m)) => Ok((n, m)),
            (n, _) => Err(ShellError::Reference(format!("`{n}` is not a module"))),
        }
    }

    /// Builds the object after its structural (dimension) checks; axioms
    /// are left to the verifiers.
    fn resolve_doc(&mut self, doc: &Document, stack: &mut BTreeSet<String>) -> Result<Object, ShellError> {
        let invalid = |reason: String| ShellError::Invalid {
            name: doc.name.clone(),
            reason,
        };
        let square = |m: &Matrix, n: usize, what: &str| {
            if (m.rows(), m.cols()) == (n, n) {
                Ok(())
            } else {
                Err(invalid(format!("{what} must be {n}x{n}")))
            }
        };
        Ok(match &doc.body {
            Body::Algebra(h) => {
                h.check_shapes().map_err(|e| invalid(e.to_string()))?;
                Object::Algebra(Arc::new(h.clone()))
            }
            Body::Module { algebra, action } => {
                let h = self.algebra_ref(algebra, stack)?;
                Object::Module(HModule::new(h, action.clone()).map_err(|e| invalid(e.to_string()))?)
            }
            Body::Map {
                domain,
                codomain,
                matrix,
            } => {
                let (_, v) = self.module_ref(domain, stack)?;
                let (_, w) = self.module_ref(codomain, stack)?;
                Object::Map(ModuleMap::new(v, w, matrix.clone()).map_err(|e| invalid(e.to_string()))?)
            }
            Body::Star { module, matrix } | Body::Gram { module, matrix } => {
                let (n, v) = self.module_ref(module, stack)?;
                square(matrix, v.dim, "matrix")?;
                self.carriers.insert(doc.name.clone(), v);
                if matches!(doc.body, Body::Star { .. }) {
                    Object::Star {
                        module: n,
                        matrix: matrix.clone(),
                    }
                } else {
                    Object::Gram {
                        module: n,
                        matrix: matrix.clone(),
                    }
                }
            }
            Body::Form { star, matrix } => {
                let (sname, s) = self.resolve_ref(star, stack)?;
                let Object::Star {
                    module,
                    matrix: star_matrix,
                } = s
                else {
                    return Err(ShellError::Reference(format!("`{sname}` is not a star")));
                };
                let v = self.star_carrier(star, stack)?;
                square(matrix, v.dim, "matrix")?;
                self.carriers.insert(doc.name.clone(), v);
                Object::Form {
                    star: sname,
                    star_matrix,
                    module,
                    matrix: matrix.clone(),
                }
            }
            Body::RMatrix {
                algebra,
                coeffs,
                inverse,
            } => {
                let h = self.algebra_ref(algebra, stack)?;
                square(coeffs, h.dim, "coeffs")?;
                // An R without a two-sided inverse still loads; the
                // verifier reports the failed inverse axiom.
                let inverse = inverse
                    .clone()
                    .or_else(|| invert_two_tensor(&h, coeffs))
                    .unwrap_or_else(|| Matrix::zeros(h.dim, h.dim));
                Object::RMatrix(RMatrix {
                    algebra: h,
                    coeffs: coeffs.clone(),
                    inverse,
                })
            }
            Body::ModuleAlgebra { module, mult, unit } => {
                let (_, v) = self.module_ref(module, stack)?;
                Object::ModuleAlgebra(
                    ModuleAlgebra::new(v, mult.clone(), unit.clone()).map_err(|e| invalid(e.to_string()))?,
                )
            }
            Body::Report(r) => Object::Report(r.clone()),
        })
    }

    fn star_carrier(&mut self, star: &Ref, stack: &mut BTreeSet<String>) -> Result<HModule, ShellError> {
        match star {
            Ref::Name(n) => {
                self.resolve_name(n, stack)?;
                Ok(self.carriers[n].clone())
            }
            Ref::Inline(d) => match &d.body {
                Body::Star { module, .. } => Ok(self.module_ref(module, stack)?.1),
                _ => Err(ShellError::Reference(format!("`{}` is not a star", d.name))),
            },
        }
    }

    pub fn get(&self, name: &str) -> Result<&Object, ShellError> {
        self.objects
            .get(name)
            .ok_or_else(|| ShellError::Reference(format!("dangling name `{name}`")))
    }

    pub fn module(&self, name: &str) -> Result<&HModule, ShellError> {
        match self.get(name)? {
            Object::Module(m) => Ok(m),
            _ => Err(ShellError::Reference(format!("`{name}` is not a module"))),
        }
    }

    /// The module a star, gram or form lives on.
    pub fn carrier(&self, name: &str) -> Result<&HModule, ShellError> {
        self.carriers
            .get(name)
            .ok_or_else(|| ShellError::Reference(format!("`{name}` is not a star, gram or form")))
    }

    pub fn modules(&self) -> Vec<(&str, &HModule)> {
        self.objects
            .iter()
            .filter_map(|(n, o)| match o {
                Object::Module(m) => Some((n.as_str(), m)),
                _ => None,
            })
            .collect()
    }

    pub fn algebras(&self) -> Vec<(&str, &Arc<HopfAlgebra>)> {
        self.objects
            .iter()
            .filter_map(|(n, o)| match o {
                Object::Algebra(h) => Some((n.as_str(), h)),
                _ => None,
            })
            .collect()
    }

    pub fn maps(&self) -> Vec<(&str, &ModuleMap)> {
        self.objects
            .iter()
            .filter_map(|(n, o)| match o {
                Object::Map(m) => Some((n.as_str(), m)),
                _ => None,
            })
            .collect()
    }

    /// `(star name, module name, matrix)`.
    pub fn stars(&self) -> Vec<(&str, &str, &Matrix)> {
        self.objects
            .iter()
            .filter_map(|(n, o)| match o {
                Object::Star { module, matrix } => Some((n.as_str(), module.as_str(), matrix)),
                _ => None,
            })
            .collect()
    }

    /// `(gram name, module name, matrix)`.
    pub fn grams(&self) -> Vec<(&str, &str, &Matrix)> {
        self.objects
            .iter()
            .filter_map(|(n, o)| match o {
                Object::Gram { module, matrix } => Some((n.as_str(), module.as_str(), matrix)),
                _ => None,
            })
            .collect()
    }

    pub fn r_matrices(&self) -> Vec<(&str, &RMatrix)> {
        self.objects
            .iter()
            .filter_map(|(n, o)| match o {
                Object::RMatrix(r) => Some((n.as_str(), r)),
                _ => None,
            })
            .collect()
    }

    /// The star, if any, recorded for a named module.
    pub fn star_of(&self, module: &str) -> Option<(&str, &Matrix)> {
        self.stars()
            .into_iter()
            .find(|(_, m, _)| *m == module)
            .map(|(n, _, d)| (n, d))
    }

    pub fn gram_of(&self, module: &str) -> Option<(&str, &Matrix)> {
        self.grams()
            .into_iter()
            .find(|(_, m, _)| *m == module)
            .map(|(n, _, g)| (n, g))
    }
}

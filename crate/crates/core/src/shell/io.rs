//! JSON definition files.
//!
//! Every file holds one object `{"kind": ..., "name": ..., ...}`. Scalars
//! are strings in the scalar text form, matrices are lists of rows, and a
//! reference to another object is either its name or the object inline.
//! Serialization is deterministic (sorted keys, two-space indent, trailing
//! newline), so a canonical file survives parse → serialize byte for byte.

use serde_json::{json, Map, Value};

use crate::hopf::{CoprodTerm, HopfAlgebra};
use crate::linalg::{Matrix, Vector};
use crate::report::{Check, Report, Status, Witness};
use crate::scalar::Scalar;

/// A malformed file, located at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// A reference to another object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ref {
    Name(String),
    Inline(Box<Document>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Body {
    Algebra(HopfAlgebra),
    Module {
        algebra: Ref,
        action: Vec<Matrix>,
    },
    Map {
        domain: Ref,
        codomain: Ref,
        matrix: Matrix,
    },
    Star {
        module: Ref,
        matrix: Matrix,
    },
    Gram {
        module: Ref,
        matrix: Matrix,
    },
    /// A sesquilinear form, read relative to a star on the same module.
    Form {
        star: Ref,
        matrix: Matrix,
    },
    RMatrix {
        algebra: Ref,
        coeffs: Matrix,
        inverse: Option<Matrix>,
    },
    ModuleAlgebra {
        module: Ref,
        mult: Vec<Vec<Vector>>,
        unit: Vector,
    },
    Report(Report),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub name: String,
    pub body: Body,
}

impl Document {
    pub fn new(name: impl Into<String>, body: Body) -> Document {
        Document {
            name: name.into(),
            body,
        }
    }

    pub fn kind(&self) -> &'static str {
        match &self.body {
            Body::Algebra(_) => "algebra",
            Body::Module { .. } => "module",
            Body::Map { .. } => "map",
            Body::Star { .. } => "star",
            Body::Gram { .. } => "gram",
            Body::Form { .. } => "form",
            Body::RMatrix { .. } => "rmatrix",
            Body::ModuleAlgebra { .. } => "module_algebra",
            Body::Report(_) => "report",
        }
    }

    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("kind".into(), json!(self.kind()));
        m.insert("name".into(), json!(self.name));
        match &self.body {
            Body::Algebra(h) => {
                m.insert("dim".into(), json!(h.dim));
                m.insert("scalar_order".into(), json!(h.scalar_order));
                m.insert("mult".into(), grid_value(&h.mult));
                m.insert("unit".into(), vector_value(&h.unit));
                m.insert(
                    "coprod".into(),
                    Value::Array(
                        h.coprod
                            .iter()
                            .map(|terms| {
                                Value::Array(terms.iter().map(|(c, j, k)| json!([c.to_string(), j, k])).collect())
                            })
                            .collect(),
                    ),
                );
                m.insert("counit".into(), vector_value(&h.counit));
                m.insert("antipode".into(), matrix_value(&h.antipode));
                m.insert("star".into(), matrix_value(&h.star));
            }
            Body::Module { algebra, action } => {
                m.insert("algebra".into(), ref_value(algebra));
                m.insert("dim".into(), json!(action.first().map_or(0, |a| a.rows())));
                m.insert("action".into(), Value::Array(action.iter().map(matrix_value).collect()));
            }
            Body::Map {
                domain,
                codomain,
                matrix,
            } => {
                m.insert("domain".into(), ref_value(domain));
                m.insert("codomain".into(), ref_value(codomain));
                m.insert("matrix".into(), matrix_value(matrix));
            }
            Body::Star { module, matrix } | Body::Gram { module, matrix } => {
                m.insert("module".into(), ref_value(module));
                m.insert("matrix".into(), matrix_value(matrix));
            }
            Body::Form { star, matrix } => {
                m.insert("star".into(), ref_value(star));
                m.insert("matrix".into(), matrix_value(matrix));
            }
            Body::RMatrix {
                algebra,
                coeffs,
                inverse,
            } => {
                m.insert("algebra".into(), ref_value(algebra));
                m.insert("coeffs".into(), matrix_value(coeffs));
                if let Some(inv) = inverse {
                    m.insert("inverse".into(), matrix_value(inv));
                }
            }
            Body::ModuleAlgebra { module, mult, unit } => {
                m.insert("module".into(), ref_value(module));
                m.insert("mult".into(), grid_value(mult));
                m.insert("unit".into(), vector_value(unit));
            }
            Body::Report(r) => {
                m.insert("subject".into(), json!(r.subject));
                m.insert(
                    "checks".into(),
                    Value::Array(r.checks.iter().map(check_value).collect()),
                );
                m.insert("notes".into(), json!(r.notes));
            }
        }
        Value::Object(m)
    }

    /// Canonical file contents.
    pub fn to_json(&self) -> String {
        to_canonical(&self.to_value())
    }

    pub fn parse(src: &str) -> Result<Document, ParseError> {
        let value: Value = serde_json::from_str(src).map_err(|e| ParseError {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        from_value(&value).map_err(|e| e.locate(src))
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_canonical(v: &Value) -> String {
    // serde_json's default map is ordered by key.
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn report_to_json(r: &Report) -> String {
    Document::new(r.subject.clone(), Body::Report(r.clone())).to_json()
}

pub fn report_from_json(src: &str) -> Result<Report, ParseError> {
    match Document::parse(src)?.body {
        Body::Report(r) => Ok(r),
        _ => Err(ParseError {
            line: 1,
            column: 1,
            message: "expected a report".to_string(),
        }),
    }
}

fn matrix_value(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| vector_value(r)).collect())
}

fn vector_value(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|s| Value::String(s.to_string())).collect())
}

fn grid_value(g: &[Vec<Vector>]) -> Value {
    Value::Array(
        g.iter()
            .map(|row| Value::Array(row.iter().map(|v| vector_value(v)).collect()))
            .collect(),
    )
}

fn ref_value(r: &Ref) -> Value {
    match r {
        Ref::Name(n) => json!(n),
        Ref::Inline(d) => d.to_value(),
    }
}

fn check_value(c: &Check) -> Value {
    let mut m = Map::new();
    m.insert("name".into(), json!(c.name));
    m.insert("status".into(), json!(c.status.as_str()));
    if let Some(w) = &c.witness {
        let mut wm = Map::new();
        wm.insert("message".into(), json!(w.message));
        if let Some(d) = &w.diff {
            wm.insert("diff".into(), matrix_value(d));
            wm.insert("diff_cols".into(), json!(d.cols()));
        }
        m.insert("witness".into(), Value::Object(wm));
    }
    Value::Object(m)
}

/// A semantic error before it is placed in the source text: the JSON path
/// and, when known, the offending text to search for.
struct Located {
    path: String,
    needle: Option<String>,
    message: String,
}

impl Located {
    fn locate(self, src: &str) -> ParseError {
        let key = self
            .path
            .rsplit('.')
            .next()
            .map(|k| k.split('[').next().unwrap_or(k))
            .filter(|k| !k.is_empty())
            .map(|k| format!("\"{k}\""));
        let offset = self
            .needle
            .as_deref()
            .and_then(|n| src.find(n))
            .or_else(|| key.as_deref().and_then(|k| src.find(k)))
            .unwrap_or(0);
        let before = &src[..offset];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        let at = if self.path.is_empty() {
            String::new()
        } else {
            format!("at {}: ", self.path)
        };
        ParseError {
            line,
            column,
            message: format!("{at}{}", self.message),
        }
    }
}

type Res<T> = Result<T, Located>;

fn err<T>(path: &str, message: impl Into<String>) -> Res<T> {
    Err(Located {
        path: path.to_string(),
        needle: None,
        message: message.into(),
    })
}

fn field<'a>(obj: &'a Map<String, Value>, path: &str, key: &str) -> Res<&'a Value> {
    obj.get(key).ok_or_else(|| Located {
        path: path.to_string(),
        needle: None,
        message: format!("missing key `{key}`"),
    })
}

fn sub(path: &str, key: &str) -> String {
    if path.is_empty() {
        key.to_string()
    } else {
        format!("{path}.{key}")
    }
}

fn as_str<'a>(v: &'a Value, path: &str) -> Res<&'a str> {
    v.as_str().map_or_else(|| err(path, "expected a string"), Ok)
}

fn as_array<'a>(v: &'a Value, path: &str) -> Res<&'a Vec<Value>> {
    v.as_array().map_or_else(|| err(path, "expected an array"), Ok)
}

fn as_usize(v: &Value, path: &str) -> Res<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .map_or_else(|| err(path, "expected a non-negative integer"), Ok)
}

fn scalar(v: &Value, path: &str) -> Res<Scalar> {
    let s = as_str(v, path)?;
    s.parse().map_err(|e| Located {
        path: path.to_string(),
        needle: Some(format!("\"{s}\"")),
        message: format!("bad scalar `{s}`: {e}"),
    })
}

fn vector(v: &Value, path: &str) -> Res<Vector> {
    as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, x)| scalar(x, &format!("{path}[{i}]")))
        .collect()
}

/// Rows must agree in length; `cols` fixes the width of an empty matrix.
fn matrix(v: &Value, path: &str, cols: Option<usize>) -> Res<Matrix> {
    let rows: Vec<Vector> = as_array(v, path)?
        .iter()
        .enumerate()
        .map(|(i, r)| vector(r, &format!("{path}[{i}]")))
        .collect::<Res<_>>()?;
    let width = rows.first().map(|r| r.len()).or(cols).unwrap_or(0);
    if let Some(i) = rows.iter().position(|r| r.len() != width) {
        return err(
            &format!("{path}[{i}]"),
            format!("row length {} differs from {width}", rows[i].len()),
        );
    }
    Ok(Matrix::from_rows(rows, width))
}

fn square(v: &Value, path: &str, n: usize) -> Res<Matrix> {
    let m = matrix(v, path, Some(n))?;
    if (m.rows(), m.cols()) != (n, n) {
        return err(path, format!("expected {n}x{n}, found {}x{}", m.rows(), m.cols()));
    }
    Ok(m)
}

fn grid(v: &Value, path: &str, n: usize) -> Res<Vec<Vec<Vector>>> {
    let rows = as_array(v, path)?;
    if rows.len() != n {
        return err(path, format!("expected {n} rows, found {}", rows.len()));
    }
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let p = format!("{path}[{i}]");
            let cells = as_array(row, &p)?;
            if cells.len() != n {
                return err(&p, format!("expected {n} entries, found {}", cells.len()));
            }
            cells
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    let q = format!("{p}[{j}]");
                    let x = vector(c, &q)?;
                    if x.len() != n {
                        return err(&q, format!("expected a length-{n} vector"));
                    }
                    Ok(x)
                })
                .collect()
        })
        .collect()
}

fn reference(v: &Value, path: &str) -> Res<Ref> {
    match v {
        Value::String(s) => Ok(Ref::Name(s.clone())),
        Value::Object(_) => Ok(Ref::Inline(Box::new(from_value_at(v, path)?))),
        _ => err(path, "expected a name or an inline object"),
    }
}

fn from_value(v: &Value) -> Res<Document> {
    from_value_at(v, "")
}

fn from_value_at(v: &Value, path: &str) -> Res<Document> {
    let obj = v.as_object().map_or_else(|| err(path, "expected an object"), Ok)?;
    let kind = as_str(field(obj, path, "kind")?, &sub(path, "kind"))?;
    let name = as_str(field(obj, path, "name")?, &sub(path, "name"))?.to_string();
    let f = |key: &str| field(obj, path, key);
    let p = |key: &str| sub(path, key);
    let body = match kind {
        "algebra" => Body::Algebra(algebra(obj, path)?),
        "module" => {
            let dim = as_usize(f("dim")?, &p("dim"))?;
            let action = as_array(f("action")?, &p("action"))?
                .iter()
                .enumerate()
                .map(|(i, a)| square(a, &format!("{}[{i}]", p("action")), dim))
                .collect::<Res<_>>()?;
            Body::Module {
                algebra: reference(f("algebra")?, &p("algebra"))?,
                action,
            }
        }
        "map" => Body::Map {
            domain: reference(f("domain")?, &p("domain"))?,
            codomain: reference(f("codomain")?, &p("codomain"))?,
            matrix: matrix(f("matrix")?, &p("matrix"), None)?,
        },
        "star" | "gram" => {
            let module = reference(f("module")?, &p("module"))?;
            let m = matrix(f("matrix")?, &p("matrix"), None)?;
            if !m.is_square() {
                return err(&p("matrix"), "expected a square matrix");
            }
            if kind == "star" {
                Body::Star { module, matrix: m }
            } else {
                Body::Gram { module, matrix: m }
            }
        }
        "form" => {
            let m = matrix(f("matrix")?, &p("matrix"), None)?;
            if !m.is_square() {
                return err(&p("matrix"), "expected a square matrix");
            }
            Body::Form {
                star: reference(f("star")?, &p("star"))?,
                matrix: m,
            }
        }
        "rmatrix" => {
            let coeffs = matrix(f("coeffs")?, &p("coeffs"), None)?;
            if !coeffs.is_square() {
                return err(&p("coeffs"), "expected a square matrix");
            }
            let inverse = match obj.get("inverse") {
                Some(v) => Some(square(v, &p("inverse"), coeffs.rows())?),
                None => None,
            };
            Body::RMatrix {
                algebra: reference(f("algebra")?, &p("algebra"))?,
                coeffs,
                inverse,
            }
        }
        "module_algebra" => {
            let unit = vector(f("unit")?, &p("unit"))?;
            Body::ModuleAlgebra {
                module: reference(f("module")?, &p("module"))?,
                mult: grid(f("mult")?, &p("mult"), unit.len())?,
                unit,
            }
        }
        "report" => Body::Report(report(obj, path)?),
        other => {
            return Err(Located {
                path: p("kind"),
                needle: Some(format!("\"{other}\"")),
                message: format!("unknown kind `{other}`"),
            })
        }
    };
    Ok(Document { name, body })
}

fn algebra(obj: &Map<String, Value>, path: &str) -> Res<HopfAlgebra> {
    let f = |key: &str| field(obj, path, key);
    let p = |key: &str| sub(path, key);
    let dim = as_usize(f("dim")?, &p("dim"))?;
    if dim == 0 {
        return err(&p("dim"), "dimension must be positive");
    }
    let scalar_order = as_usize(f("scalar_order")?, &p("scalar_order"))?;
    if scalar_order == 0 || scalar_order > u32::MAX as usize {
        return err(&p("scalar_order"), "scalar_order must be a positive 32-bit integer");
    }
    let exact = |v: Vector, key: &str| -> Res<Vector> {
        if v.len() != dim {
            return err(&p(key), format!("expected length {dim}, found {}", v.len()));
        }
        Ok(v)
    };
    let coprod_path = p("coprod");
    let coprod_rows = as_array(f("coprod")?, &coprod_path)?;
    if coprod_rows.len() != dim {
        return err(
            &coprod_path,
            format!("expected {dim} entries, found {}", coprod_rows.len()),
        );
    }
    let coprod = coprod_rows
        .iter()
        .enumerate()
        .map(|(i, terms)| {
            let q = format!("{coprod_path}[{i}]");
            as_array(terms, &q)?
                .iter()
                .enumerate()
                .map(|(t, term)| -> Res<CoprodTerm> {
                    let r = format!("{q}[{t}]");
                    let parts = as_array(term, &r)?;
                    if parts.len() != 3 {
                        return err(&r, "a coproduct term is [coefficient, j, k]");
                    }
                    let (j, k) = (as_usize(&parts[1], &r)?, as_usize(&parts[2], &r)?);
                    if j >= dim || k >= dim {
                        return err(&r, format!("basis index out of range for dimension {dim}"));
                    }
                    Ok((scalar(&parts[0], &r)?, j, k))
                })
                .collect::<Res<Vec<_>>>()
        })
        .collect::<Res<Vec<_>>>()?;
    let h = HopfAlgebra {
        dim,
        mult: grid(f("mult")?, &p("mult"), dim)?,
        unit: exact(vector(f("unit")?, &p("unit"))?, "unit")?,
        coprod,
        counit: exact(vector(f("counit")?, &p("counit"))?, "counit")?,
        antipode: square(f("antipode")?, &p("antipode"), dim)?,
        star: square(f("star")?, &p("star"), dim)?,
        scalar_order: scalar_order as u32,
    };
    Ok(h)
}

fn report(obj: &Map<String, Value>, path: &str) -> Res<Report> {
    let f = |key: &str| field(obj, path, key);
    let p = |key: &str| sub(path, key);
    let mut r = Report::new(as_str(f("subject")?, &p("subject"))?);
    for (i, c) in as_array(f("checks")?, &p("checks"))?.iter().enumerate() {
        let q = format!("{}[{i}]", p("checks"));
        let c = c.as_object().map_or_else(|| err(&q, "expected an object"), Ok)?;
        let name = as_str(field(c, &q, "name")?, &sub(&q, "name"))?.to_string();
        let status_text = as_str(field(c, &q, "status")?, &sub(&q, "status"))?;
        let status = Status::parse(status_text).ok_or_else(|| Located {
            path: sub(&q, "status"),
            needle: Some(format!("\"{status_text}\"")),
            message: format!("unknown status `{status_text}`"),
        })?;
        let witness = match c.get("witness") {
            None => None,
            Some(w) => {
                let wp = sub(&q, "witness");
                let w = w.as_object().map_or_else(|| err(&wp, "expected an object"), Ok)?;
                let message = as_str(field(w, &wp, "message")?, &sub(&wp, "message"))?.to_string();
                let diff = match w.get("diff") {
                    None => None,
                    Some(d) => {
                        let cols = as_usize(field(w, &wp, "diff_cols")?, &sub(&wp, "diff_cols"))?;
                        let m = matrix(d, &sub(&wp, "diff"), Some(cols))?;
                        if m.cols() != cols {
                            return err(&sub(&wp, "diff"), "width disagrees with diff_cols");
                        }
                        Some(m)
                    }
                };
                Some(Witness { message, diff })
            }
        };
        if status == Status::Fail && witness.is_none() {
            return err(&q, "a failed check must carry a witness");
        }
        r.checks.push(Check { name, status, witness });
    }
    for (i, n) in as_array(f("notes")?, &p("notes"))?.iter().enumerate() {
        r.notes.push(as_str(n, &format!("{}[{i}]", p("notes")))?.to_string());
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::sweedler_algebra;

    #[test]
    fn algebra_round_trip() {
        let d = Document::new("sw", Body::Algebra(sweedler_algebra()));
        let text = d.to_json();
        let back = Document::parse(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn report_round_trip_with_witness() {
        let mut r = Report::new("demo");
        r.pass("a");
        r.fail("b", Witness::with_diff("lhs - rhs", Matrix::from_ints(&[&[1, -2]])));
        r.skip("c", "not applicable");
        r.note("truncated");
        let text = report_to_json(&r);
        assert_eq!(report_from_json(&text).unwrap(), r);
    }

    #[test]
    fn syntax_error_has_position() {
        let e = Document::parse("{\n  \"kind\": \"map\",\n  oops\n}").unwrap_err();
        assert_eq!(e.line, 3);
    }

    #[test]
    fn bad_scalar_is_located() {
        let mut text = Document::new("sw", Body::Algebra(sweedler_algebra())).to_json();
        text = text.replacen("\"-1\"", "\"-1/0x\"", 1);
        let e = Document::parse(&text).unwrap_err();
        let line = text.lines().position(|l| l.contains("-1/0x")).unwrap() + 1;
        assert_eq!(e.line, line);
        assert!(e.message.contains("bad scalar"));
    }

    #[test]
    fn unknown_kind_rejected() {
        let e = Document::parse("{\"kind\": \"widget\", \"name\": \"w\"}").unwrap_err();
        assert!(e.message.contains("unknown kind"));
    }
}

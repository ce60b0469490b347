//! Module-algebras, *-modules, *-algebras, quotients and the truncated
//! tensor algebra.
//!
//! A star structure on `V` is stored as the matrix `D` of the antilinear map
//! `v ↦ D·conj(v)`, the composite of `c_V` and the module map `V̄ → V`.

use crate::conj::{check_antimodule, conjugate_module, AntimoduleMap, ConjError};
use crate::hmod::{
    check_module_map, direct_sum, hom_left, tensor_power, trivial_module, HModule, ModuleError, ModuleMap,
};
use crate::linalg::{in_span, span_basis, unit_vector, vec_add, vec_scale, Matrix, Vector};
use crate::report::{Report, Witness};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StarAlgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subspace is not a submodule")]
    NotSubmodule,
    #[error("subspace is not closed under the star")]
    NotStarClosed,
    #[error("not a *-module map")]
    NotStarMap,
    #[error(transparent)]
    Module(#[from] ModuleError),
    #[error(transparent)]
    Conj(#[from] ConjError),
}

/// An algebra in the module category: `mult[i][j]` holds the coordinates of
/// `x_i·x_j`.
#[derive(Debug, Clone)]
pub struct ModuleAlgebra {
    pub carrier: HModule,
    pub mult: Vec<Vec<Vector>>,
    pub unit: Vector,
}

impl ModuleAlgebra {
    pub fn new(carrier: HModule, mult: Vec<Vec<Vector>>, unit: Vector) -> Result<ModuleAlgebra, StarAlgError> {
        let n = carrier.dim;
        let ok = unit.len() == n
            && mult.len() == n
            && mult
                .iter()
                .all(|row| row.len() == n && row.iter().all(|v| v.len() == n));
        if !ok {
            return Err(StarAlgError::DimensionMismatch(format!(
                "structure constants do not match carrier dimension {n}"
            )));
        }
        Ok(ModuleAlgebra { carrier, mult, unit })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let c = a * b;
                for (k, m) in self.mult[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] += &(&c * m);
                    }
                }
            }
        }
        out
    }
}

/// The ground field as a module-algebra over `h`.
pub fn ground_algebra(h: &std::sync::Arc<crate::hopf::HopfAlgebra>) -> ModuleAlgebra {
    ModuleAlgebra {
        carrier: trivial_module(h),
        mult: vec![vec![vec![Scalar::one()]]],
        unit: vec![Scalar::one()],
    }
}

/// `End_ℓ(V) = Hom_ℓ(V, V)` with composition.
pub fn end_left(v: &HModule) -> Result<ModuleAlgebra, StarAlgError> {
    let n = v.dim;
    let carrier = hom_left(v, v)?;
    let mult = (0..n * n)
        .map(|a| {
            (0..n * n)
                .map(|b| {
                    // E_{rc}·E_{c'd} = δ_{cc'} E_{rd}.
                    let (r, c) = (a / n, a % n);
                    let (c2, d) = (b / n, b % n);
                    if c == c2 {
                        unit_vector(n * n, r * n + d)
                    } else {
                        vec![Scalar::zero(); n * n]
                    }
                })
                .collect()
        })
        .collect();
    ModuleAlgebra::new(carrier, mult, Matrix::identity(n).vectorize())
}

fn first_failure<T>(items: impl IntoIterator<Item = (String, T, T)>) -> Option<(String, T, T)>
where
    T: PartialEq,
{
    items.into_iter().find(|(_, a, b)| a != b)
}

fn vector_witness(label: String, lhs: &[Scalar], rhs: &[Scalar]) -> Witness {
    let d: Vector = lhs.iter().zip(rhs).map(|(a, b)| a - b).collect();
    let n = d.len();
    Witness::with_diff(label, Matrix::from_rows(vec![d], n))
}

fn record_vectors(r: &mut Report, name: &str, found: Option<(String, Vector, Vector)>) -> bool {
    match found {
        None => {
            r.pass(name);
            true
        }
        Some((label, lhs, rhs)) => {
            r.fail(name, vector_witness(label, &lhs, &rhs));
            false
        }
    }
}

/// Associativity, unit, `a⊳(xy) = (a₍₁₎⊳x)(a₍₂₎⊳y)` and `a⊳1 = ε(a)1`.
pub fn verify_module_algebra(a: &ModuleAlgebra) -> Report {
    let mut r = Report::new("module algebra");
    r.absorb("carrier", crate::hmod::verify_module(&a.carrier));
    let n = a.dim();
    let basis: Vec<Vector> = (0..n).map(|i| unit_vector(n, i)).collect();

    let assoc = first_failure(
        (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
            .map(|(i, j, k)| {
                (
                    format!("(x{i}x{j})x{k} vs x{i}(x{j}x{k})"),
                    a.mul(&a.mult[i][j], &basis[k]),
                    a.mul(&basis[i], &a.mult[j][k]),
                )
            }),
    );
    record_vectors(&mut r, "associativity", assoc);

    let unit = first_failure((0..n).flat_map(|i| {
        [
            (format!("1·x{i}"), a.mul(&a.unit, &basis[i]), basis[i].clone()),
            (format!("x{i}·1"), a.mul(&basis[i], &a.unit), basis[i].clone()),
        ]
    }));
    record_vectors(&mut r, "unit", unit);

    let h = &a.carrier.algebra;
    let compat = first_failure(
        (0..h.dim)
            .flat_map(|k| (0..n).flat_map(move |i| (0..n).map(move |j| (k, i, j))))
            .map(|(k, i, j)| {
                let lhs = a.carrier.action[k].apply(&a.mult[i][j]);
                let mut rhs = vec![Scalar::zero(); n];
                for (c, p, q) in &h.coprod[k] {
                    let x = a.carrier.action[*p].column(i);
                    let y = a.carrier.action[*q].column(j);
                    rhs = vec_add(&rhs, &vec_scale(&a.mul(&x, &y), c));
                }
                (format!("e{k}⊳(x{i}x{j})"), lhs, rhs)
            }),
    );
    record_vectors(&mut r, "compatibility", compat);

    let unit_inv = first_failure((0..h.dim).map(|k| {
        (
            format!("e{k}⊳1"),
            a.carrier.action[k].apply(&a.unit),
            vec_scale(&a.unit, &h.counit[k]),
        )
    }));
    record_vectors(&mut r, "unit invariance", unit_inv);
    r
}

/// `Ā` with `x̄_i·x̄_j = conj(x_j x_i)` and unit `conj(1)`.
pub fn conjugate_algebra(a: &ModuleAlgebra) -> ModuleAlgebra {
    let n = a.dim();
    ModuleAlgebra {
        carrier: conjugate_module(&a.carrier),
        mult: (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| a.mult[j][i].iter().map(Scalar::conj).collect())
                    .collect()
            })
            .collect(),
        unit: a.unit.iter().map(Scalar::conj).collect(),
    }
}

/// Records whether `f: A → B` is a module-algebra morphism. Only products
/// `x_i x_j` with `allowed(i, j)` are compared.
pub fn check_algebra_morphism(
    r: &mut Report,
    prefix: &str,
    f: &Matrix,
    a: &ModuleAlgebra,
    b: &ModuleAlgebra,
    allowed: impl Fn(usize, usize) -> bool,
) -> bool {
    let mut ok = check_module_map(r, &format!("{prefix}module map"), f, &a.carrier, &b.carrier);
    let n = a.dim();
    let cols = f.columns();
    let mult = first_failure(
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| allowed(i, j))
            .map(|(i, j)| {
                (
                    format!("f(x{i}x{j}) vs f(x{i})f(x{j})"),
                    f.apply(&a.mult[i][j]),
                    b.mul(&cols[i], &cols[j]),
                )
            }),
    );
    ok &= record_vectors(r, &format!("{prefix}multiplicative"), mult);
    let unit = first_failure([("f(1)".to_string(), f.apply(&a.unit), b.unit.clone())]);
    ok &= record_vectors(r, &format!("{prefix}unital"), unit);
    ok
}

/// Records whether `x ↦ D·conj(x)` is an antimodule-algebra morphism
/// `A → B`: an antimodule map with `T(xy) = T(y)T(x)` and `T(1) = 1`.
pub fn check_antialgebra_morphism(
    r: &mut Report,
    prefix: &str,
    d: &Matrix,
    a: &ModuleAlgebra,
    b: &ModuleAlgebra,
    allowed: impl Fn(usize, usize) -> bool,
) -> bool {
    let mut ok = check_antimodule(r, &format!("{prefix}antimodule map"), d, &a.carrier, &b.carrier);
    let n = a.dim();
    let cols = d.columns();
    let mult = first_failure(
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| allowed(i, j))
            .map(|(i, j)| {
                let conj_prod: Vector = a.mult[i][j].iter().map(Scalar::conj).collect();
                (
                    format!("T(x{i}x{j}) vs T(x{j})T(x{i})"),
                    d.apply(&conj_prod),
                    b.mul(&cols[j], &cols[i]),
                )
            }),
    );
    ok &= record_vectors(r, &format!("{prefix}antimultiplicative"), mult);
    let conj_unit: Vector = a.unit.iter().map(Scalar::conj).collect();
    let unit = first_failure([("T(1)".to_string(), d.apply(&conj_unit), b.unit.clone())]);
    ok &= record_vectors(r, &format!("{prefix}unital"), unit);
    ok
}

/// The conjugate algebra together with the check that `σ_A` is an algebra
/// isomorphism `conj(conj A) → A`.
pub fn conjugate_algebra_checked(a: &ModuleAlgebra) -> (ModuleAlgebra, Report) {
    let bar = conjugate_algebra(a);
    let mut r = Report::new("conjugate algebra");
    r.absorb("conjugate", verify_module_algebra(&bar));
    let barbar = conjugate_algebra(&bar);
    check_algebra_morphism(&mut r, "sigma_A ", &Matrix::identity(a.dim()), &barbar, a, |_, _| true);
    (bar, r)
}

/// The composite of antimodule-algebra morphisms `D1: A → B`, `D2: B → C`,
/// a linear map `x ↦ D2·conj(D1)·x`.
pub fn compose_antilinear(d1: &Matrix, d2: &Matrix) -> Matrix {
    d2 * &d1.conj()
}

#[derive(Debug, Clone)]
pub struct StarStructure {
    pub module: HModule,
    pub dagger: Matrix,
}

impl StarStructure {
    pub fn new(module: HModule, dagger: Matrix) -> Result<StarStructure, StarAlgError> {
        if (dagger.rows(), dagger.cols()) != (module.dim, module.dim) {
            return Err(StarAlgError::DimensionMismatch(format!(
                "{}x{} star on a {}-dimensional module",
                dagger.rows(),
                dagger.cols(),
                module.dim
            )));
        }
        Ok(StarStructure { module, dagger })
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.dagger.apply(&v.iter().map(Scalar::conj).collect::<Vector>())
    }

    pub fn as_antimodule(&self) -> AntimoduleMap {
        AntimoduleMap {
            domain: self.module.clone(),
            codomain: self.module.clone(),
            matrix: self.dagger.clone(),
        }
    }
}

/// Involutivity `D·conj(D) = 1` and the antimodule identity.
pub fn verify_star_module(v: &HModule, d: &Matrix) -> Report {
    let mut r = Report::new("star module");
    if (d.rows(), d.cols()) != (v.dim, v.dim) {
        r.fail("involutivity", Witness::text("star matrix has the wrong shape"));
        r.fail("antimodule", Witness::text("star matrix has the wrong shape"));
        return r;
    }
    r.matrices_equal("involutivity", &(d * &d.conj()), &Matrix::identity(v.dim));
    check_antimodule(&mut r, "antimodule", d, v, v);
    r
}

/// `T·D_V = D_W·conj(T)`.
pub fn is_star_morphism(t: &Matrix, d_v: &Matrix, d_w: &Matrix) -> bool {
    t.cols() == d_v.rows() && t.rows() == d_w.rows() && t * d_v == d_w * &t.conj()
}

/// Stars on `V̄⊗V` and `V⊗V̄`, both `conj(x̄⊗y) ↦ ȳ⊗x`.
pub fn enveloping_star(v: &HModule) -> Result<(StarStructure, StarStructure), StarAlgError> {
    let bar = conjugate_module(v);
    let swap = crate::hmod::swap_matrix(v.dim, v.dim);
    let left = StarStructure::new(crate::hmod::tensor_module(&bar, v)?, swap.clone())?;
    let right = StarStructure::new(crate::hmod::tensor_module(v, &bar)?, swap)?;
    Ok((left, right))
}

pub fn direct_sum_star(parts: &[StarStructure]) -> Result<StarStructure, StarAlgError> {
    let (first, rest) = parts
        .split_first()
        .ok_or_else(|| StarAlgError::DimensionMismatch("empty direct sum".to_string()))?;
    let mut module = first.module.clone();
    let mut d = first.dagger.clone();
    for p in rest {
        module = direct_sum(&module, &p.module)?;
        d = d.direct_sum(&p.dagger);
    }
    StarStructure::new(module, d)
}

/// Permutation `(i_1, …, i_k) ↦ (i_k, …, i_1)` on `(C^m)^{⊗k}`.
pub fn reversal_permutation(m: usize, k: usize) -> Matrix {
    let n = m.pow(k as u32);
    let perm: Vec<usize> = (0..n)
        .map(|idx| {
            let mut digits = Vec::with_capacity(k);
            let mut x = idx;
            for _ in 0..k {
                digits.push(x % m);
                x /= m;
            }
            // digits holds the multi-index least significant first, so reading
            // it most significant first reverses the legs.
            digits.iter().fold(0, |acc, d| acc * m + d)
        })
        .collect();
    Matrix::permutation(&perm)
}

/// `conj(v_1⊗…⊗v_n) ↦ v_n†⊗…⊗v_1†`.
pub fn tensor_power_star(v: &HModule, d: &Matrix, n: usize) -> Result<StarStructure, StarAlgError> {
    let mut dn = Matrix::identity(1);
    for _ in 0..n {
        dn = dn.kron(d);
    }
    StarStructure::new(tensor_power(v, n), &dn * &reversal_permutation(v.dim, n))
}

/// Whether the span of `w_basis` is closed under the action.
pub fn is_submodule(v: &HModule, w_basis: &[Vector]) -> bool {
    v.action
        .iter()
        .all(|a| w_basis.iter().all(|w| in_span(w_basis, &a.apply(w), v.dim)))
}

/// Whether the span of `w_basis` is closed under `w ↦ D·conj(w)`.
pub fn is_star_closed(d: &Matrix, w_basis: &[Vector]) -> bool {
    let n = d.rows();
    w_basis.iter().all(|w| {
        let img = d.apply(&w.iter().map(Scalar::conj).collect::<Vector>());
        in_span(w_basis, &img, n)
    })
}

/// A *-submodule: a submodule closed under the star.
pub fn star_submodule_check(v: &HModule, d: &Matrix, w_basis: &[Vector]) -> bool {
    is_submodule(v, w_basis) && is_star_closed(d, w_basis)
}

/// `V/W` on the complement of the echelon pivots of `W`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub module: HModule,
    /// Quotient map `V → V/W`.
    pub q: Matrix,
    /// Section `V/W → V` onto the non-pivot coordinates.
    pub s: Matrix,
}

pub fn quotient_module(v: &HModule, w_basis: &[Vector]) -> Result<Quotient, StarAlgError> {
    if !is_submodule(v, w_basis) {
        return Err(StarAlgError::NotSubmodule);
    }
    let n = v.dim;
    let rows = span_basis(w_basis, n);
    let pivots: Vec<usize> = rows
        .iter()
        .map(|r| r.iter().position(|c| !c.is_zero()).expect("nonzero echelon row"))
        .collect();
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    let m = free.len();
    // Reduce e_j modulo W, then read the free coordinates.
    let q = Matrix::from_fn(m, n, |r, j| {
        if let Some(k) = pivots.iter().position(|&p| p == j) {
            -rows[k][free[r]].clone()
        } else if j == free[r] {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    });
    let s = Matrix::from_fn(n, m, |j, r| if j == free[r] { Scalar::one() } else { Scalar::zero() });
    let module = HModule {
        algebra: v.algebra.clone(),
        dim: m,
        action: v.action.iter().map(|a| &(&q * a) * &s).collect(),
    };
    Ok(Quotient { module, q, s })
}

pub struct StarQuotient {
    pub quotient: Quotient,
    pub star: StarStructure,
    pub report: Report,
}

/// The induced star `D_Q = q·D·s` on `V/W` for a *-submodule `W`.
pub fn quotient_star(v: &HModule, d: &Matrix, w_basis: &[Vector]) -> Result<StarQuotient, StarAlgError> {
    let quotient = quotient_module(v, w_basis)?;
    if !is_star_closed(d, w_basis) {
        return Err(StarAlgError::NotStarClosed);
    }
    let dq = &(&quotient.q * d) * &quotient.s;
    let star = StarStructure::new(quotient.module.clone(), dq)?;
    let mut report = Report::new("quotient star");
    report.absorb("quotient", crate::hmod::verify_module(&quotient.module));
    report.absorb("quotient", verify_star_module(&quotient.module, &star.dagger));
    check_module_map(&mut report, "quotient map module map", &quotient.q, v, &quotient.module);
    report.record(
        "quotient map *-morphism",
        is_star_morphism(&quotient.q, d, &star.dagger),
        || Witness::text("q·D ≠ D_Q·conj(q)"),
    );
    Ok(StarQuotient { quotient, star, report })
}

/// Kernel and image of a *-morphism `T: V → W` are *-submodules.
pub fn kernel_image_star(t: &ModuleMap, d_v: &Matrix, d_w: &Matrix) -> Report {
    let mut r = Report::new("kernel and image");
    t.check(&mut r, "module map");
    r.record("*-morphism", is_star_morphism(&t.matrix, d_v, d_w), || {
        Witness::text("T·D_V ≠ D_W·conj(T)")
    });
    let kernel = t.matrix.kernel();
    let image = span_basis(&t.matrix.columns(), t.codomain.dim);
    r.record("kernel is a submodule", is_submodule(&t.domain, &kernel), || {
        Witness::text("action leaves the kernel")
    });
    r.record("kernel is star-closed", is_star_closed(d_v, &kernel), || {
        Witness::text("star leaves the kernel")
    });
    r.record("image is a submodule", is_submodule(&t.codomain, &image), || {
        Witness::text("action leaves the image")
    });
    r.record("image is star-closed", is_star_closed(d_w, &image), || {
        Witness::text("star leaves the image")
    });
    r
}

/// Star-module checks plus `(xy)† = y†x†` and `1† = 1`.
pub fn verify_star_algebra(a: &ModuleAlgebra, d: &Matrix) -> Report {
    let mut r = Report::new("star algebra");
    r.absorb("", verify_star_module(&a.carrier, d));
    if (d.rows(), d.cols()) != (a.dim(), a.dim()) {
        return r;
    }
    let n = a.dim();
    let cols = d.columns();
    let anti = first_failure((0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| {
        let conj_prod: Vector = a.mult[i][j].iter().map(Scalar::conj).collect();
        (
            format!("(x{i}x{j})† vs x{j}†x{i}†"),
            d.apply(&conj_prod),
            a.mul(&cols[j], &cols[i]),
        )
    }));
    record_vectors(&mut r, "antimultiplicative", anti);
    let conj_unit: Vector = a.unit.iter().map(Scalar::conj).collect();
    let unit = first_failure([("1†".to_string(), d.apply(&conj_unit), a.unit.clone())]);
    record_vectors(&mut r, "unit fixed", unit);
    r
}

/// `⊕_{k≤N} V^{⊗k}` with concatenation; products of total degree above `N`
/// are zero.
#[derive(Debug, Clone)]
pub struct TruncatedTensorAlgebra {
    pub generator: HModule,
    pub degree: usize,
    pub algebra: ModuleAlgebra,
    offsets: Vec<usize>,
}

pub const TRUNCATION_NOTE: &str = "products of total degree above the bound are truncated to zero";

impl TruncatedTensorAlgebra {
    pub fn new(v: &HModule, degree: usize) -> TruncatedTensorAlgebra {
        let m = v.dim;
        let mut offsets = Vec::with_capacity(degree + 2);
        let mut total = 0;
        for k in 0..=degree {
            offsets.push(total);
            total += m.pow(k as u32);
        }
        offsets.push(total);
        let mut carrier = trivial_module(&v.algebra);
        for k in 1..=degree {
            carrier = direct_sum(&carrier, &tensor_power(v, k)).expect("same algebra");
        }
        let deg_of = |idx: usize| (0..=degree).rfind(|&k| offsets[k] <= idx).expect("index in range");
        let mult = (0..total)
            .map(|i| {
                (0..total)
                    .map(|j| {
                        let (ki, kj) = (deg_of(i), deg_of(j));
                        if ki + kj > degree {
                            return vec![Scalar::zero(); total];
                        }
                        let (a, b) = (i - offsets[ki], j - offsets[kj]);
                        unit_vector(total, offsets[ki + kj] + a * m.pow(kj as u32) + b)
                    })
                    .collect()
            })
            .collect();
        let algebra = ModuleAlgebra {
            carrier,
            mult,
            unit: unit_vector(total, 0),
        };
        TruncatedTensorAlgebra {
            generator: v.clone(),
            degree,
            algebra,
            offsets,
        }
    }

    pub fn dim(&self) -> usize {
        self.offsets[self.degree + 1]
    }

    pub fn offset(&self, k: usize) -> usize {
        self.offsets[k]
    }

    pub fn block_dim(&self, k: usize) -> usize {
        self.offsets[k + 1] - self.offsets[k]
    }

    pub fn degree_of(&self, idx: usize) -> usize {
        (0..=self.degree)
            .rfind(|&k| self.offsets[k] <= idx)
            .expect("index in range")
    }

    /// Whether `x_i x_j` stays within the degree bound.
    pub fn product_allowed(&self, i: usize, j: usize) -> bool {
        self.degree_of(i) + self.degree_of(j) <= self.degree
    }

    /// The multi-index of a basis element, first leg first.
    pub fn legs(&self, idx: usize) -> Vec<usize> {
        let k = self.degree_of(idx);
        let m = self.generator.dim;
        let mut x = idx - self.offsets[k];
        let mut out = vec![0; k];
        for slot in out.iter_mut().rev() {
            *slot = x % m;
            x /= m;
        }
        out
    }

    /// `ι_V: V → T≤N(V)`, the degree-one inclusion.
    pub fn inclusion(&self) -> Matrix {
        let m = self.generator.dim;
        Matrix::from_fn(self.dim(), m, |r, c| {
            if self.degree >= 1 && r == self.offsets[1] + c {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    pub fn verify(&self) -> Report {
        let mut r = verify_module_algebra(&self.algebra);
        r.subject = format!("truncated tensor algebra, degree ≤ {}", self.degree);
        r.note(TRUNCATION_NOTE);
        r
    }
}

/// An algebra or antialgebra morphism produced by a universal lift.
#[derive(Debug, Clone)]
pub struct Lift {
    pub matrix: Matrix,
    pub report: Report,
}

fn check_generator_restriction(r: &mut Report, t: &TruncatedTensorAlgebra, lift: &Matrix, f: &Matrix) {
    if t.degree == 0 {
        r.skip("restricts to f on generators", "degree bound 0 has no generators");
    } else {
        r.matrices_equal("restricts to f on generators", &(lift * &t.inclusion()), f);
    }
}

/// The unique algebra morphism `T≤N(V) → A` extending `f: V → A`:
/// `v_1⋯v_k ↦ f(v_1)⋯f(v_k)`.
pub fn lift_module_map(t: &TruncatedTensorAlgebra, f: &ModuleMap, a: &ModuleAlgebra) -> Result<Lift, StarAlgError> {
    if f.domain != t.generator || f.codomain != a.carrier {
        return Err(StarAlgError::DimensionMismatch(
            "map does not go from the generator to the algebra".to_string(),
        ));
    }
    if !f.is_module_map() {
        return Err(ModuleError::NotModuleMap("generator map does not intertwine".to_string()).into());
    }
    let images = f.matrix.columns();
    let cols: Vec<Vector> = (0..t.dim())
        .map(|idx| {
            t.legs(idx)
                .iter()
                .fold(a.unit.clone(), |acc, &l| a.mul(&acc, &images[l]))
        })
        .collect();
    let matrix = Matrix::from_columns(&cols, a.dim());
    let mut report = Report::new("module map lift");
    report.note(TRUNCATION_NOTE);
    report.note("uniqueness: the lift is determined by its values on generators");
    check_algebra_morphism(&mut report, "", &matrix, &t.algebra, a, |i, j| t.product_allowed(i, j));
    check_generator_restriction(&mut report, t, &matrix, &f.matrix);
    Ok(Lift { matrix, report })
}

/// The unique antimodule-algebra morphism `T≤N(V) → A` extending the
/// antimodule map `f`: `v_1⋯v_k ↦ f(v_k)⋯f(v_1)`.
pub fn lift_antimodule_map(
    t: &TruncatedTensorAlgebra,
    f: &AntimoduleMap,
    a: &ModuleAlgebra,
) -> Result<Lift, StarAlgError> {
    if f.domain != t.generator || f.codomain != a.carrier {
        return Err(StarAlgError::DimensionMismatch(
            "map does not go from the generator to the algebra".to_string(),
        ));
    }
    if !crate::conj::is_antimodule(&f.matrix, &f.domain, &f.codomain) {
        return Err(ConjError::NotAntimodule("generator map".to_string()).into());
    }
    let images = f.matrix.columns();
    let cols: Vec<Vector> = (0..t.dim())
        .map(|idx| {
            t.legs(idx)
                .iter()
                .rev()
                .fold(a.unit.clone(), |acc, &l| a.mul(&acc, &images[l]))
        })
        .collect();
    let matrix = Matrix::from_columns(&cols, a.dim());
    let mut report = Report::new("antimodule map lift");
    report.note(TRUNCATION_NOTE);
    report.note("uniqueness: the lift is determined by its values on generators");
    check_antialgebra_morphism(&mut report, "", &matrix, &t.algebra, a, |i, j| t.product_allowed(i, j));
    check_generator_restriction(&mut report, t, &matrix, &f.matrix);
    Ok(Lift { matrix, report })
}

/// The per-degree leg reversal.
pub fn graded_reversal(m: usize, degree: usize) -> Matrix {
    let mut out = Matrix::identity(1);
    for k in 1..=degree {
        out = out.direct_sum(&reversal_permutation(m, k));
    }
    out
}

pub struct Kappa {
    pub matrix: Matrix,
    pub domain: TruncatedTensorAlgebra,
    pub codomain: ModuleAlgebra,
    pub report: Report,
}

/// `κ: T≤N(V̄) → conj(T≤N(V))`, `v̄_1⋯v̄_n ↦ conj(v_n⋯v_1)`.
pub fn kappa(v: &HModule, degree: usize) -> Kappa {
    let domain = TruncatedTensorAlgebra::new(&conjugate_module(v), degree);
    let codomain = conjugate_algebra(&TruncatedTensorAlgebra::new(v, degree).algebra);
    let matrix = graded_reversal(v.dim, degree);
    let mut report = Report::new("kappa");
    report.note(TRUNCATION_NOTE);
    check_algebra_morphism(&mut report, "", &matrix, &domain.algebra, &codomain, |_, _| true);
    report.record("bijective", matrix.inverse().is_some(), || Witness::text("singular"));
    for k in 0..=degree {
        let (o, b) = (domain.offset(k), domain.block_dim(k));
        let block = matrix.block(o, o, b, b);
        report.matrices_equal(
            format!("degree {k} block is leg reversal"),
            &block,
            &reversal_permutation(v.dim, k),
        );
        let bar_power = tensor_power(&conjugate_module(v), k);
        let conj_power = conjugate_module(&tensor_power(v, k));
        check_module_map(
            &mut report,
            &format!("degree {k} restriction module map"),
            &block,
            &bar_power,
            &conj_power,
        );
    }
    Kappa {
        matrix,
        domain,
        codomain,
        report,
    }
}

/// For an antimodule map `f: V → A`, the antilinear lift equals the linear
/// lift of `Ψ(f): V̄ → A` composed with `κ⁻¹`.
pub fn check_kappa_lift(f: &AntimoduleMap, a: &ModuleAlgebra, degree: usize) -> Result<Report, StarAlgError> {
    let mut r = Report::new("kappa and lifts");
    let t = TruncatedTensorAlgebra::new(&f.domain, degree);
    let anti = lift_antimodule_map(&t, f, a)?;
    r.absorb("antilinear lift", anti.report.clone());
    let psi_f = crate::conj::psi(f)?;
    let k = kappa(&f.domain, degree);
    let lin = lift_module_map(&k.domain, &psi_f, a)?;
    r.absorb("linear lift", lin.report.clone());
    let kinv = k.matrix.inverse().expect("permutation");
    r.matrices_equal("f♯ = lift(Ψ f)∘κ⁻¹", &anti.matrix, &(&lin.matrix * &kinv));
    Ok(r)
}

/// The star on `T≤N(V)` obtained by lifting `v ↦ ι(v†)`, checked against the
/// per-degree tensor power stars.
pub fn tensor_algebra_star(
    v: &HModule,
    d: &Matrix,
    degree: usize,
) -> Result<(TruncatedTensorAlgebra, StarStructure, Report), StarAlgError> {
    let t = TruncatedTensorAlgebra::new(v, degree);
    let gen = AntimoduleMap::new(v.clone(), t.algebra.carrier.clone(), &t.inclusion() * d)?;
    let lift = lift_antimodule_map(&t, &gen, &t.algebra)?;
    let mut report = Report::new("tensor algebra star");
    report.note(TRUNCATION_NOTE);
    report.absorb("lift", lift.report);
    let parts = (0..=degree)
        .map(|k| tensor_power_star(v, d, k))
        .collect::<Result<Vec<_>, _>>()?;
    for (k, p) in parts.iter().enumerate() {
        let (o, b) = (t.offset(k), t.block_dim(k));
        report.matrices_equal(
            format!("degree {k} block = tensor power star"),
            &lift.matrix.block(o, o, b, b),
            &p.dagger,
        );
    }
    let sum = direct_sum_star(&parts)?;
    report.matrices_equal("equals direct sum of tensor power stars", &lift.matrix, &sum.dagger);
    report.absorb("", verify_star_algebra(&t.algebra, &lift.matrix));
    let star = StarStructure::new(t.algebra.carrier.clone(), lift.matrix)?;
    Ok((t, star, report))
}

/// Lifts a *-module map `f: V → A` into a *-algebra `A` to `T≤N(V) → A` and
/// checks that the lift preserves the stars.
pub fn star_universal_lift(
    f: &ModuleMap,
    d_v: &Matrix,
    a: &ModuleAlgebra,
    d_a: &Matrix,
    degree: usize,
) -> Result<Lift, StarAlgError> {
    if !is_star_morphism(&f.matrix, d_v, d_a) {
        return Err(StarAlgError::NotStarMap);
    }
    let (t, star, star_report) = tensor_algebra_star(&f.domain, d_v, degree)?;
    let mut lift = lift_module_map(&t, f, a)?;
    lift.report.absorb("tensor star", star_report);
    lift.report.record(
        "lift is a *-morphism",
        is_star_morphism(&lift.matrix, &star.dagger, d_a),
        || Witness::text("lift·D_T ≠ D_A·conj(lift)"),
    );
    Ok(lift)
}

pub struct Ideal {
    pub basis: Vec<Vector>,
    pub star_closed: bool,
    pub quotient: Quotient,
    pub quotient_algebra: ModuleAlgebra,
    pub quotient_star: Option<StarStructure>,
    pub report: Report,
}

/// The two-sided ideal generated by a submodule `W ⊆ T≤N(V)`, spanned by
/// the products `x_i·w·x_j`; if it is star-closed the quotient inherits the
/// star.
pub fn ideal_generated(t: &TruncatedTensorAlgebra, d_t: &Matrix, w_basis: &[Vector]) -> Result<Ideal, StarAlgError> {
    let a = &t.algebra;
    let n = t.dim();
    if w_basis.iter().any(|w| w.len() != n) {
        return Err(StarAlgError::DimensionMismatch("generator length".to_string()));
    }
    if !is_submodule(&a.carrier, w_basis) {
        return Err(StarAlgError::NotSubmodule);
    }
    let mut spanning = Vec::new();
    for w in w_basis {
        for i in 0..n {
            let left = a.mul(&unit_vector(n, i), w);
            for j in 0..n {
                spanning.push(a.mul(&left, &unit_vector(n, j)));
            }
        }
    }
    let basis = span_basis(&spanning, n);
    let star_closed = is_star_closed(d_t, &basis);
    let quotient = quotient_module(&a.carrier, &basis)?;
    let (q, s) = (&quotient.q, &quotient.s);
    let m = quotient.module.dim;
    let lifts = s.columns();
    let mult = (0..m)
        .map(|i| (0..m).map(|j| q.apply(&a.mul(&lifts[i], &lifts[j]))).collect())
        .collect();
    let quotient_algebra = ModuleAlgebra::new(quotient.module.clone(), mult, q.apply(&a.unit))?;
    let mut report = Report::new("generated ideal");
    report.note(TRUNCATION_NOTE);
    report.note(format!("ideal dimension {}", basis.len()));
    let ideal_ok = basis.iter().all(|x| {
        (0..n).all(|i| {
            in_span(&basis, &a.mul(&unit_vector(n, i), x), n) && in_span(&basis, &a.mul(x, &unit_vector(n, i)), n)
        })
    });
    report.record("two-sided ideal", ideal_ok, || Witness::text("products leave the span"));
    report.record("submodule", is_submodule(&a.carrier, &basis), || {
        Witness::text("action leaves the span")
    });
    report.absorb("quotient", verify_module_algebra(&quotient_algebra));
    check_algebra_morphism(&mut report, "quotient map ", q, a, &quotient_algebra, |_, _| true);
    let quotient_star = if star_closed {
        report.pass("star-closed");
        let dq = &(q * d_t) * s;
        report.absorb("quotient", verify_star_algebra(&quotient_algebra, &dq));
        report.record("quotient map *-morphism", is_star_morphism(q, d_t, &dq), || {
            Witness::text("q·D ≠ D_Q·conj(q)")
        });
        Some(StarStructure::new(quotient.module.clone(), dq)?)
    } else {
        report.fail("star-closed", Witness::text("the star leaves the ideal"));
        None
    };
    Ok(Ideal {
        basis,
        star_closed,
        quotient,
        quotient_algebra,
        quotient_star,
        report,
    })
}

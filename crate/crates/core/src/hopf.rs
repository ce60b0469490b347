//! Finite-dimensional Hopf *-algebras given by structure constants.
//!
//! Elements are coordinate vectors in the basis `e_0, ..., e_{d-1}`.
//! Elements of `H⊗H` are `d×d` matrices whose entry `[i][j]` is the
//! coefficient of `e_i⊗e_j`; elements of `H^{⊗k}` are flat vectors indexed
//! lexicographically.

use crate::linalg::{unit_vector, vec_add, vec_conj, vec_scale, Matrix, Vector};
use crate::report::Report;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HopfError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("antipode is not invertible")]
    NotInvertible,
}

/// One term `c·e_j⊗e_k` of a coproduct.
pub type CoprodTerm = (Scalar, usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub dim: usize,
    /// `mult[i][j]` is the coordinate vector of `e_i·e_j`.
    pub mult: Vec<Vec<Vector>>,
    pub unit: Vector,
    /// `coprod[i]` lists the terms of `Δ(e_i)`.
    pub coprod: Vec<Vec<CoprodTerm>>,
    pub counit: Vector,
    /// Column `i` is `S(e_i)`.
    pub antipode: Matrix,
    /// Column `i` is `e_i*`; `∗(Σ c_i e_i) = Σ conj(c_i)·P[:, i]`.
    pub star: Matrix,
    /// Cyclotomic order of the field the structure constants live in.
    pub scalar_order: u32,
}

impl HopfAlgebra {
    pub fn check_shapes(&self) -> Result<(), HopfError> {
        let d = self.dim;
        let bad = |what: &str| Err(HopfError::DimensionMismatch(what.to_string()));
        if d == 0 {
            return bad("dimension must be positive");
        }
        if self.mult.len() != d
            || self
                .mult
                .iter()
                .any(|row| row.len() != d || row.iter().any(|v| v.len() != d))
        {
            return bad("mult must be a d×d grid of length-d vectors");
        }
        if self.unit.len() != d {
            return bad("unit must have length d");
        }
        if self.coprod.len() != d || self.coprod.iter().flatten().any(|(_, j, k)| *j >= d || *k >= d) {
            return bad("coprod must have d entries with indices below d");
        }
        if self.counit.len() != d {
            return bad("counit must have length d");
        }
        if (self.antipode.rows(), self.antipode.cols()) != (d, d) {
            return bad("antipode must be d×d");
        }
        if (self.star.rows(), self.star.cols()) != (d, d) {
            return bad("star must be d×d");
        }
        if self.scalar_order == 0 {
            return bad("scalar_order must be positive");
        }
        Ok(())
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(self.dim, i)
    }

    pub fn zero(&self) -> Vector {
        vec![Scalar::zero(); self.dim]
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, m) in self.mult[i][j].iter().enumerate() {
                    if !m.is_zero() {
                        out[k] += &(&xy * m);
                    }
                }
            }
        }
        out
    }

    /// `Δ(a)` as a `d×d` coefficient grid.
    pub fn coproduct(&self, a: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (c, j, k) in &self.coprod[i] {
                let v = out.get(*j, *k) + &(x * c);
                out.set(*j, *k, v);
            }
        }
        out
    }

    pub fn counit_of(&self, a: &[Scalar]) -> Scalar {
        a.iter().zip(&self.counit).map(|(x, e)| x * e).sum()
    }

    pub fn antipode_of(&self, a: &[Scalar]) -> Vector {
        self.antipode.apply(a)
    }

    /// The antilinear involution `a ↦ a*`.
    pub fn star_of(&self, a: &[Scalar]) -> Vector {
        self.star.apply(&vec_conj(a))
    }

    /// Product in `H⊗H`: `(a⊗b)(c⊗d) = ac⊗bd`.
    pub fn mul2(&self, x: &Matrix, y: &Matrix) -> Matrix {
        let d = self.dim;
        let mut out = Matrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                let a = x.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..d {
                    for l in 0..d {
                        let b = y.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        let ab = a * b;
                        let left = &self.mult[i][k];
                        let right = &self.mult[j][l];
                        for (p, lp) in left.iter().enumerate() {
                            if lp.is_zero() {
                                continue;
                            }
                            let abl = &ab * lp;
                            for (q, rq) in right.iter().enumerate() {
                                if !rq.is_zero() {
                                    let v = out.get(p, q) + &(&abl * rq);
                                    out.set(p, q, v);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Product in `H⊗H⊗H` on flat vectors of length `d³`.
    pub fn mul3(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let d = self.dim;
        let mut out = vec![Scalar::zero(); d * d * d];
        let nz = |v: &[Scalar]| -> Vec<(usize, usize, usize, Scalar)> {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(idx, c)| (idx / (d * d), (idx / d) % d, idx % d, c.clone()))
                .collect()
        };
        let xs = nz(x);
        let ys = nz(y);
        for (i1, j1, k1, a) in &xs {
            for (i2, j2, k2, b) in &ys {
                let ab = a * b;
                let m1 = &self.mult[*i1][*i2];
                let m2 = &self.mult[*j1][*j2];
                let m3 = &self.mult[*k1][*k2];
                for (p, c1) in m1.iter().enumerate() {
                    if c1.is_zero() {
                        continue;
                    }
                    let t1 = &ab * c1;
                    for (q, c2) in m2.iter().enumerate() {
                        if c2.is_zero() {
                            continue;
                        }
                        let t2 = &t1 * c2;
                        for (r, c3) in m3.iter().enumerate() {
                            if !c3.is_zero() {
                                out[p * d * d + q * d + r] += &(&t2 * c3);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mult_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_columns(&cols, self.dim)
    }

    /// Two-sided inverse of `a`, if it exists.
    pub fn inverse_element(&self, a: &[Scalar]) -> Option<Vector> {
        let l = self.left_mult_matrix(a);
        let x = l.solve(&self.unit)?;
        (self.mul(&x, a) == self.unit).then_some(x)
    }

    /// `S^{-1} = ∗∘S∘∗`, i.e. the matrix `P·conj(S)·conj(P)`.
    pub fn antipode_inverse(&self) -> Result<Matrix, HopfError> {
        let inv = &(&self.star * &self.antipode.conj()) * &self.star.conj();
        let id = Matrix::identity(self.dim);
        if &self.antipode * &inv != id || &inv * &self.antipode != id {
            return Err(HopfError::NotInvertible);
        }
        Ok(inv)
    }

    /// `S^k` for any integer `k`; negative powers use [`Self::antipode_inverse`].
    pub fn antipode_power(&self, k: i32) -> Result<Matrix, HopfError> {
        let base = if k >= 0 {
            self.antipode.clone()
        } else {
            self.antipode_inverse()?
        };
        let mut out = Matrix::identity(self.dim);
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    /// `a_(1)⊗…⊗a_(k)` as a flat vector of length `d^k`; `k = 1` returns `a`.
    pub fn iterated_coproduct(&self, a: &[Scalar], k: usize) -> Vector {
        assert!(k >= 1, "iterated coproduct needs at least one leg");
        let d = self.dim;
        let mut cur = a.to_vec();
        let mut legs = 1;
        while legs < k {
            // Expand the first leg: index i·d^{legs-1} + rest.
            let tail = d.pow(legs as u32 - 1);
            let mut next = vec![Scalar::zero(); tail * d * d];
            for (idx, c) in cur.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (i, rest) = (idx / tail, idx % tail);
                for (t, j, l) in &self.coprod[i] {
                    next[(j * d + l) * tail + rest] += &(c * t);
                }
            }
            cur = next;
            legs += 1;
        }
        cur
    }

    /// Applies the linear maps `f` and `g` to the two legs of `x ∈ H⊗H`.
    pub fn apply_legs(&self, f: &Matrix, g: &Matrix, x: &Matrix) -> Matrix {
        &(f * x) * &g.transpose()
    }

    /// `(∗⊗∗)(x)` for `x ∈ H⊗H`.
    pub fn star2(&self, x: &Matrix) -> Matrix {
        self.apply_legs(&self.star, &self.star, &x.conj())
    }

    /// `m(x)` for `x ∈ H⊗H`.
    pub fn multiply_legs(&self, x: &Matrix) -> Vector {
        let mut out = self.zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let c = x.get(i, j);
                if !c.is_zero() {
                    out = vec_add(&out, &vec_scale(&self.mult[i][j], c));
                }
            }
        }
        out
    }

    /// `(Δ⊗id)(x)` and `(id⊗Δ)(x)` for `x ∈ H⊗H`, as flat `d³` vectors.
    pub fn coproduct_on_leg(&self, x: &Matrix, leg: usize) -> Vector {
        let d = self.dim;
        let mut out = vec![Scalar::zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                let c = x.get(i, j);
                if c.is_zero() {
                    continue;
                }
                let split = if leg == 0 { i } else { j };
                for (t, p, q) in &self.coprod[split] {
                    let idx = if leg == 0 {
                        (p * d + q) * d + j
                    } else {
                        (i * d + p) * d + q
                    };
                    out[idx] += &(c * t);
                }
            }
        }
        out
    }

    /// Embeds `x ∈ H⊗H` into `H⊗H⊗H` on legs `(a, b)`, filling the
    /// remaining leg with the unit.
    pub fn embed_legs(&self, x: &Matrix, a: usize, b: usize) -> Vector {
        let d = self.dim;
        let mut out = vec![Scalar::zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                let c = x.get(i, j);
                if c.is_zero() {
                    continue;
                }
                for (u, cu) in self.unit.iter().enumerate() {
                    if cu.is_zero() {
                        continue;
                    }
                    let mut idx = [u, u, u];
                    idx[a] = i;
                    idx[b] = j;
                    out[idx[0] * d * d + idx[1] * d + idx[2]] += &(c * cu);
                }
            }
        }
        out
    }
}

/// The tensor `a⊗b` as a `d×d` grid.
pub fn outer(a: &[Scalar], b: &[Scalar]) -> Matrix {
    Matrix::from_fn(a.len(), b.len(), |i, j| &a[i] * &b[j])
}

/// Names of the axiom checks, in report order.
pub const AXIOMS: [&str; 9] = [
    "assoc",
    "unit",
    "coassoc",
    "counit",
    "bialgebra",
    "antipode",
    "star-involution",
    "star-antimult",
    "star-coprod",
];

/// Names of the derived identities, in report order.
pub const DERIVED: [&str; 2] = ["counit-star", "star-antipode"];

/// Checks every Hopf *-algebra axiom and the two derived identities.
pub fn verify_hopf_star(h: &HopfAlgebra) -> Result<Report, HopfError> {
    h.check_shapes()?;
    let d = h.dim;
    let mut r = Report::new("hopf *-algebra");
    let e: Vec<Vector> = (0..d).map(|i| h.basis(i)).collect();
    let one = h.unit.clone();

    let mut triples = Vec::new();
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let lhs = h.mul(&h.mul(&e[i], &e[j]), &e[k]);
                let rhs = h.mul(&e[i], &h.mul(&e[j], &e[k]));
                triples.push((format!("(e{i} e{j}) e{k} vs e{i} (e{j} e{k})"), lhs, rhs));
            }
        }
    }
    r.vectors_equal("assoc", triples);

    r.vectors_equal(
        "unit",
        (0..d).flat_map(|i| {
            [
                (format!("1·e{i}"), h.mul(&one, &e[i]), e[i].clone()),
                (format!("e{i}·1"), h.mul(&e[i], &one), e[i].clone()),
            ]
        }),
    );

    let delta: Vec<Matrix> = e.iter().map(|x| h.coproduct(x)).collect();
    r.vectors_equal(
        "coassoc",
        (0..d).map(|i| {
            (
                format!("Δ⊗id vs id⊗Δ on Δ(e{i})"),
                h.coproduct_on_leg(&delta[i], 0),
                h.coproduct_on_leg(&delta[i], 1),
            )
        }),
    );

    let eps_row = Matrix::from_rows(vec![h.counit.clone()], d);
    r.vectors_equal(
        "counit",
        (0..d).flat_map(|i| {
            let left = (&eps_row * &delta[i]).row(0);
            let right = (&delta[i] * &eps_row.transpose()).column(0);
            [
                (format!("(ε⊗id)Δ(e{i})"), left, e[i].clone()),
                (format!("(id⊗ε)Δ(e{i})"), right, e[i].clone()),
            ]
        }),
    );

    let mut bialg = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let prod = h.mul(&e[i], &e[j]);
            bialg.push((
                format!("Δ(e{i} e{j}) vs Δ(e{i})Δ(e{j})"),
                h.coproduct(&prod).vectorize(),
                h.mul2(&delta[i], &delta[j]).vectorize(),
            ));
            bialg.push((
                format!("ε(e{i} e{j}) vs ε(e{i})ε(e{j})"),
                vec![h.counit_of(&prod)],
                vec![&h.counit[i] * &h.counit[j]],
            ));
        }
    }
    bialg.push((
        "Δ(1) vs 1⊗1".to_string(),
        h.coproduct(&one).vectorize(),
        outer(&one, &one).vectorize(),
    ));
    bialg.push(("ε(1) vs 1".to_string(), vec![h.counit_of(&one)], vec![Scalar::one()]));
    r.vectors_equal("bialgebra", bialg);

    let id = Matrix::identity(d);
    r.vectors_equal(
        "antipode",
        (0..d).flat_map(|i| {
            let target = vec_scale(&one, &h.counit[i]);
            let left = h.multiply_legs(&h.apply_legs(&h.antipode, &id, &delta[i]));
            let right = h.multiply_legs(&h.apply_legs(&id, &h.antipode, &delta[i]));
            [
                (format!("m(S⊗id)Δ(e{i})"), left, target.clone()),
                (format!("m(id⊗S)Δ(e{i})"), right, target),
            ]
        }),
    );

    let stars: Vec<Vector> = e.iter().map(|x| h.star_of(x)).collect();
    r.vectors_equal(
        "star-involution",
        (0..d).map(|i| (format!("(e{i}*)*"), h.star_of(&stars[i]), e[i].clone())),
    );

    let mut antimult = Vec::new();
    for i in 0..d {
        for j in 0..d {
            antimult.push((
                format!("(e{i} e{j})* vs e{j}* e{i}*"),
                h.star_of(&h.mul(&e[i], &e[j])),
                h.mul(&stars[j], &stars[i]),
            ));
        }
    }
    r.vectors_equal("star-antimult", antimult);

    r.vectors_equal(
        "star-coprod",
        (0..d).map(|i| {
            (
                format!("Δ(e{i}*) vs (∗⊗∗)Δ(e{i})"),
                h.coproduct(&stars[i]).vectorize(),
                h.star2(&delta[i]).vectorize(),
            )
        }),
    );

    r.vectors_equal(
        "counit-star",
        (0..d).map(|i| {
            (
                format!("ε(e{i}*) vs conj ε(e{i})"),
                vec![h.counit_of(&stars[i])],
                vec![h.counit[i].conj()],
            )
        }),
    );

    r.vectors_equal(
        "star-antipode",
        (0..d).map(|i| {
            let s = h.antipode_of(&e[i]);
            let v = h.star_of(&h.antipode_of(&h.star_of(&s)));
            (format!("∗S∗S(e{i})"), v, e[i].clone())
        }),
    );
    Ok(r)
}

/// Report on `S^{-1} = ∗S∗`: both composites with `S` are the identity.
pub fn check_antipode_inverse(h: &HopfAlgebra) -> Report {
    let mut r = Report::new("antipode inverse");
    let inv = &(&h.star * &h.antipode.conj()) * &h.star.conj();
    let id = Matrix::identity(h.dim);
    r.matrices_equal("S∘S⁻¹ = id", &(&h.antipode * &inv), &id);
    r.matrices_equal("S⁻¹∘S = id", &(&inv * &h.antipode), &id);
    let sss = &(&h.star * &h.antipode.conj()) * &(&h.star.conj() * &h.antipode);
    r.matrices_equal("∗S∗S = id", &sss, &id);
    r
}

/// Whether `x` is central in `H`.
pub fn is_central(h: &HopfAlgebra, x: &[Scalar]) -> bool {
    (0..h.dim).all(|i| {
        let e = h.basis(i);
        h.mul(x, &e) == h.mul(&e, x)
    })
}

/// Checks that a structure with exactly one failed axiom reports it by name.
pub fn failing_axioms(r: &Report) -> Vec<String> {
    r.failures()
        .iter()
        .map(|c| c.name.clone())
        .filter(|n| AXIOMS.contains(&n.as_str()))
        .collect()
}

//! Leibniz algebras given by structure constants, their representations,
//! Nijenhuis operators and twisted semidirect products.
//!
//! The bracket is a left Leibniz bracket:
//! `[x, [y, z]] = [[x, y], z] + [y, [x, z]]`.
//! Basis indices are 0-based throughout.

use num_traits::Zero;

use crate::cochain::{Bicochain, Cochain};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Vector};
use crate::report::{first_failure, CheckReport, Witness};

/// Linear maps are plain matrices, `target_dim × source_dim`, composed
/// right-to-left.
pub type LinearMap = Matrix;

/// Structure constants `c[i][j][k]` with `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LeibnizAlgebra {
    dim: usize,
    c: Vec<Rational>,
}

impl LeibnizAlgebra {
    pub fn new(dim: usize, structure: Vec<Rational>) -> Result<Self> {
        if structure.len() != dim * dim * dim {
            return Err(Error::shape(format!(
                "dimension {dim} needs {} structure constants, got {}",
                dim * dim * dim,
                structure.len()
            )));
        }
        Ok(LeibnizAlgebra { dim, c: structure })
    }

    /// Abelian algebra.
    pub fn zero(dim: usize) -> Self {
        LeibnizAlgebra { dim, c: vec![Rational::zero(); dim * dim * dim] }
    }

    /// Algebra with `[e_i, e_j] = bracket(i, j)`.
    pub fn from_fn(dim: usize, mut bracket: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut c = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = bracket(i, j);
                assert_eq!(v.dim(), dim, "bracket value has the wrong dimension");
                c.extend(v.into_entries());
            }
        }
        LeibnizAlgebra { dim, c }
    }

    /// From a dense `dim × dim × dim` nested table.
    pub fn from_nested(table: Vec<Vec<Vector>>) -> Result<Self> {
        let dim = table.len();
        if table.iter().any(|row| row.len() != dim || row.iter().any(|v| v.dim() != dim)) {
            return Err(Error::shape(format!("bracket table must be {dim}x{dim}x{dim}")));
        }
        Ok(Self::from_fn(dim, |i, j| table[i][j].clone()))
    }

    /// Integer structure constants given as `(i, j, k, value)` entries.
    pub fn from_entries(dim: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut g = Self::zero(dim);
        for &(i, j, k, v) in entries {
            g.c[(i * dim + j) * dim + k] = crate::linalg::int(v);
        }
        g
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    pub fn to_nested(&self) -> Vec<Vec<Vector>> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.bracket_basis(i, j)).collect()).collect()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        let o = (i * self.dim + j) * self.dim;
        Vector::new(self.c[o..o + self.dim].to_vec())
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                let o = (i * self.dim + j) * self.dim;
                for k in 0..self.dim {
                    let c = &self.c[o + k];
                    if !c.is_zero() {
                        out[k] += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `L_x = [x, ·]`.
    pub fn left_mult(&self, x: &Vector) -> Matrix {
        Matrix::from_fn_columns(self.dim, self.dim, |j| self.bracket(x, &Vector::basis(self.dim, j)))
    }

    /// Matrix of `R_x = [·, x]`.
    pub fn right_mult(&self, x: &Vector) -> Matrix {
        Matrix::from_fn_columns(self.dim, self.dim, |j| self.bracket(&Vector::basis(self.dim, j), x))
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// The same bracket in the basis given by the columns of `basis_change`:
    /// `[x, y]' = P [P⁻¹x, P⁻¹y]`.
    pub fn transported(&self, p: &Matrix, p_inv: &Matrix) -> LeibnizAlgebra {
        let n = self.dim;
        LeibnizAlgebra::from_fn(n, |i, j| p.apply(&self.bracket(&p_inv.column(i), &p_inv.column(j))))
    }

    /// Brackets scaled by `λ`.
    pub fn scaled(&self, lambda: &Rational) -> LeibnizAlgebra {
        LeibnizAlgebra { dim: self.dim, c: self.c.iter().map(|a| a * lambda).collect() }
    }

    /// Direct sum with brackets between the two summands vanishing.
    pub fn direct_sum(&self, other: &LeibnizAlgebra) -> LeibnizAlgebra {
        let (a, b) = (self.dim, other.dim);
        LeibnizAlgebra::from_fn(a + b, |i, j| {
            if i < a && j < a {
                self.bracket_basis(i, j).concat(&Vector::zeros(b))
            } else if i >= a && j >= a {
                Vector::zeros(a).concat(&other.bracket_basis(i - a, j - a))
            } else {
                Vector::zeros(a + b)
            }
        })
    }
}

fn degenerate_note(report: CheckReport, dim: usize) -> CheckReport {
    if dim <= 1 {
        report.with_note(format!("degenerate dimension {dim}"))
    } else {
        report
    }
}

/// Leibniz identity on all basis triples.
pub fn check_leibniz(g: &LeibnizAlgebra) -> CheckReport {
    let n = g.dim;
    let w = Witness::new("leibniz");
    let report = first_failure(&[n, n, n], |t| {
        let (x, y, z) = (Vector::basis(n, t[0]), Vector::basis(n, t[1]), Vector::basis(n, t[2]));
        let lhs = g.bracket(&x, &g.bracket_basis(t[1], t[2]));
        let rhs = &g.bracket(&g.bracket_basis(t[0], t[1]), &z) + &g.bracket(&y, &g.bracket_basis(t[0], t[2]));
        w.compare(t, lhs, rhs)
    });
    degenerate_note(report, n)
}

/// Representation `(V, ρ^L, ρ^R)`: `rho_l[i]` is the matrix of `ρ^L(e_i)` on `V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    algebra: LeibnizAlgebra,
    dim_v: usize,
    rho_l: Vec<Matrix>,
    rho_r: Vec<Matrix>,
}

impl Representation {
    pub fn new(algebra: LeibnizAlgebra, dim_v: usize, rho_l: Vec<Matrix>, rho_r: Vec<Matrix>) -> Result<Self> {
        let n = algebra.dim();
        if rho_l.len() != n || rho_r.len() != n {
            return Err(Error::shape(format!(
                "need {n} action matrices on each side, got {} and {}",
                rho_l.len(),
                rho_r.len()
            )));
        }
        if rho_l.iter().chain(&rho_r).any(|m| m.rows() != dim_v || m.cols() != dim_v) {
            return Err(Error::shape(format!("action matrices must be {dim_v}x{dim_v}")));
        }
        Ok(Representation { algebra, dim_v, rho_l, rho_r })
    }

    /// The zero action on a `dim_v`-dimensional space.
    pub fn trivial(algebra: LeibnizAlgebra, dim_v: usize) -> Self {
        let n = algebra.dim();
        let z = vec![Matrix::zeros(dim_v, dim_v); n];
        Representation { algebra, dim_v, rho_l: z.clone(), rho_r: z }
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        &self.algebra
    }

    pub fn dim_g(&self) -> usize {
        self.algebra.dim()
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn rho_l(&self) -> &[Matrix] {
        &self.rho_l
    }

    pub fn rho_r(&self) -> &[Matrix] {
        &self.rho_r
    }

    fn combine(&self, side: &[Matrix], x: &Vector) -> Matrix {
        let mut m = Matrix::zeros(self.dim_v, self.dim_v);
        for (i, a) in x.iter().enumerate() {
            if !a.is_zero() {
                m += &side[i].scaled(a);
            }
        }
        m
    }

    /// `ρ^L(x)` for an arbitrary `x`.
    pub fn left(&self, x: &Vector) -> Matrix {
        self.combine(&self.rho_l, x)
    }

    /// `ρ^R(x)` for an arbitrary `x`.
    pub fn right(&self, x: &Vector) -> Matrix {
        self.combine(&self.rho_r, x)
    }

    /// `ρ^L(x) v`.
    pub fn act_left(&self, x: &Vector, v: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim_v);
        for (i, a) in x.iter().enumerate() {
            if !a.is_zero() {
                out.add_scaled(a, &self.rho_l[i].apply(v));
            }
        }
        out
    }

    /// `ρ^R(x) v`.
    pub fn act_right(&self, x: &Vector, v: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim_v);
        for (i, a) in x.iter().enumerate() {
            if !a.is_zero() {
                out.add_scaled(a, &self.rho_r[i].apply(v));
            }
        }
        out
    }

    /// Same representation written in a new basis of `V`: `ρ' = P ρ P⁻¹`.
    pub fn conjugated(&self, p: &Matrix, p_inv: &Matrix) -> Representation {
        let conj = |m: &Matrix| &(p * m) * p_inv;
        Representation {
            algebra: self.algebra.clone(),
            dim_v: self.dim_v,
            rho_l: self.rho_l.iter().map(conj).collect(),
            rho_r: self.rho_r.iter().map(conj).collect(),
        }
    }

    /// Replaces the algebra by an isomorphic copy `x' = Q x`, carrying the
    /// actions along: `ρ'(x') = ρ(Q⁻¹ x')`.
    pub fn with_transported_algebra(&self, q: &Matrix, q_inv: &Matrix) -> Representation {
        let algebra = self.algebra.transported(q, q_inv);
        let n = algebra.dim();
        Representation {
            algebra,
            dim_v: self.dim_v,
            rho_l: (0..n).map(|i| self.left(&q_inv.column(i))).collect(),
            rho_r: (0..n).map(|i| self.right(&q_inv.column(i))).collect(),
        }
    }

    /// Block-diagonal sum of two representations of the same algebra.
    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        if self.algebra != other.algebra {
            return Err(Error::shape("direct sum of representations of different algebras"));
        }
        let (a, b) = (self.dim_v, other.dim_v);
        let block = |x: &Matrix, y: &Matrix| {
            let mut m = Matrix::zeros(a + b, a + b);
            for i in 0..a {
                for j in 0..a {
                    m[(i, j)] = x[(i, j)].clone();
                }
            }
            for i in 0..b {
                for j in 0..b {
                    m[(a + i, a + j)] = y[(i, j)].clone();
                }
            }
            m
        };
        Representation::new(
            self.algebra.clone(),
            a + b,
            self.rho_l.iter().zip(&other.rho_l).map(|(x, y)| block(x, y)).collect(),
            self.rho_r.iter().zip(&other.rho_r).map(|(x, y)| block(x, y)).collect(),
        )
    }
}

/// The three representation identities, checked on `ρ(·)` applied to every
/// basis vector of `V`; failures are reported at `(i, j, c)` where `c`
/// indexes the basis of `V`.
///
/// 1. `ρ^L([x,y]) = ρ^L(x)ρ^L(y) − ρ^L(y)ρ^L(x)`
/// 2. `ρ^R([x,y]) = ρ^L(x)ρ^R(y) − ρ^R(y)ρ^L(x)`
/// 3. `ρ^R([x,y]) = ρ^L(x)ρ^R(y) + ρ^R(y)ρ^R(x)`
pub fn check_representation(r: &Representation) -> CheckReport {
    let n = r.dim_g();
    let m = r.dim_v();
    let g = r.algebra();
    let dims = [n, n, m];
    let (l, rr) = (&r.rho_l, &r.rho_r);
    let axiom = |which: usize| {
        let w = Witness::new(format!("axiom-{which}"));
        first_failure(&dims, move |t| {
            let (i, j) = (t[0], t[1]);
            let v = Vector::basis(m, t[2]);
            let xy = g.bracket_basis(i, j);
            let (lhs, rhs) = match which {
                1 => (r.act_left(&xy, &v), &l[i].apply(&l[j].apply(&v)) - &l[j].apply(&l[i].apply(&v))),
                2 => (r.act_right(&xy, &v), &l[i].apply(&rr[j].apply(&v)) - &rr[j].apply(&l[i].apply(&v))),
                _ => (r.act_right(&xy, &v), &l[i].apply(&rr[j].apply(&v)) + &rr[j].apply(&rr[i].apply(&v))),
            };
            w.compare(t, lhs, rhs)
        })
    };
    let report = axiom(1).and_then(|| axiom(2)).and_then(|| axiom(3));
    degenerate_note(report, n)
}

/// `ρ^L(x) = L_x`, `ρ^R(x) = R_x` on `V = g`.
pub fn regular_representation(g: &LeibnizAlgebra) -> Representation {
    let n = g.dim();
    let rho_l = (0..n).map(|i| g.left_mult(&Vector::basis(n, i))).collect();
    let rho_r = (0..n).map(|i| g.right_mult(&Vector::basis(n, i))).collect();
    Representation { algebra: g.clone(), dim_v: n, rho_l, rho_r }
}

fn check_square(g: &LeibnizAlgebra, n: &Matrix, what: &str) -> Result<()> {
    if n.rows() != g.dim() || n.cols() != g.dim() {
        return Err(Error::shape(format!(
            "{what} must be {0}x{0}, got {1}x{2}",
            g.dim(),
            n.rows(),
            n.cols()
        )));
    }
    Ok(())
}

/// `[Nx, Ny] = N([Nx, y] + [x, Ny] − N[x, y])` on basis pairs.
pub fn check_nijenhuis(g: &LeibnizAlgebra, n: &LinearMap) -> Result<CheckReport> {
    check_square(g, n, "Nijenhuis operator")?;
    let d = g.dim();
    let w = Witness::new("nijenhuis");
    Ok(first_failure(&[d, d], |t| {
        let (x, y) = (Vector::basis(d, t[0]), Vector::basis(d, t[1]));
        let (nx, ny) = (n.apply(&x), n.apply(&y));
        let lhs = g.bracket(&nx, &ny);
        let mut inner = &g.bracket(&nx, &y) + &g.bracket(&x, &ny);
        inner -= &n.apply(&g.bracket_basis(t[0], t[1]));
        w.compare(t, lhs, n.apply(&inner))
    }))
}

/// `[x, y]_N = [Nx, y] + [x, Ny] − N[x, y]` without checking that `N` is
/// Nijenhuis.
pub fn deformed_bracket_unchecked(g: &LeibnizAlgebra, n: &LinearMap) -> LeibnizAlgebra {
    let d = g.dim();
    LeibnizAlgebra::from_fn(d, |i, j| {
        let (x, y) = (Vector::basis(d, i), Vector::basis(d, j));
        let mut v = &g.bracket(&n.apply(&x), &y) + &g.bracket(&x, &n.apply(&y));
        v -= &n.apply(&g.bracket_basis(i, j));
        v
    })
}

/// The deformed algebra `g_N`; errors unless `N` is a Nijenhuis operator.
pub fn deformed_bracket(g: &LeibnizAlgebra, n: &LinearMap) -> Result<LeibnizAlgebra> {
    let report = check_nijenhuis(g, n)?;
    if !report.holds {
        return Err(Error::NotNijenhuis(describe(&report)));
    }
    Ok(deformed_bracket_unchecked(g, n))
}

/// Bracket on `g ⊕ V` (g-basis first):
/// `[(x,u), (y,v)]_H = ([x,y], ρ^L(x)v + ρ^R(y)u + H(x,y))`.
/// No hypotheses are checked.
pub fn twisted_semidirect_unchecked(r: &Representation, h: &Bicochain) -> Result<LeibnizAlgebra> {
    let (n, m) = (r.dim_g(), r.dim_v());
    if (h.degree(), h.dim_in(), h.dim_out()) != (2, n, m) {
        return Err(Error::shape("twisting cochain must be a degree-2 cochain g⊗g → V"));
    }
    Ok(LeibnizAlgebra::from_fn(n + m, |a, b| match (a < n, b < n) {
        (true, true) => r.algebra().bracket_basis(a, b).concat(&h.value(&[a, b])),
        (true, false) => Vector::zeros(n).concat(&r.rho_l()[a].column(b - n)),
        (false, true) => Vector::zeros(n).concat(&r.rho_r()[b].column(a - n)),
        (false, false) => Vector::zeros(n + m),
    }))
}

/// The twisted semidirect product `g ⋉_H V`; errors unless `H` is a 2-cocycle.
pub fn twisted_semidirect(r: &Representation, h: &Bicochain) -> Result<LeibnizAlgebra> {
    let report = crate::cohomology::is_cocycle(r, h)?;
    if !report.holds {
        return Err(Error::NotCocycle(describe(&report)));
    }
    twisted_semidirect_unchecked(r, h)
}

/// `φ[e_i, e_j] = [φe_i, φe_j]'` on basis pairs.
pub fn check_algebra_morphism(src: &LeibnizAlgebra, dst: &LeibnizAlgebra, phi: &LinearMap) -> Result<CheckReport> {
    if phi.rows() != dst.dim() || phi.cols() != src.dim() {
        return Err(Error::shape(format!(
            "morphism must be {}x{}, got {}x{}",
            dst.dim(),
            src.dim(),
            phi.rows(),
            phi.cols()
        )));
    }
    let w = Witness::new("algebra-morphism");
    Ok(first_failure(&[src.dim(), src.dim()], |t| {
        let lhs = phi.apply(&src.bracket_basis(t[0], t[1]));
        let rhs = dst.bracket(&phi.column(t[0]), &phi.column(t[1]));
        w.compare(t, lhs, rhs)
    }))
}

/// One-line description of a failed report for error messages.
pub(crate) fn describe(report: &CheckReport) -> String {
    match &report.failure {
        Some(f) => format!("{} fails at {:?}: {} != {}", f.condition, f.indices, f.lhs, f.rhs),
        None => "check failed".to_string(),
    }
}

/// Leibniz algebras used throughout the tests: the 2-dimensional algebra
/// `[e_0, e_0] = e_1`.
pub fn example_nilpotent_2d() -> LeibnizAlgebra {
    LeibnizAlgebra::from_entries(2, &[(0, 0, 1, 1)])
}

/// Builds a cochain `g ⊗ g → V` from `H(e_i, e_j) = f(i, j)`.
pub fn bicochain_from_fn(dim_g: usize, dim_v: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Bicochain {
    Cochain::from_fn(2, dim_g, dim_v, |t| f(t[0], t[1]))
}

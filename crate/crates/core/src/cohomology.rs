//! The Loday–Pirashvili complex `C^n(g, V) = Hom(g^{⊗n}, V)`.
//!
//! With 1-based positions the coboundary of an `n`-cochain is
//!
//! ```text
//! (∂f)(x_1, …, x_{n+1}) = Σ_{i=1}^{n} (−1)^{i+1} ρ^L(x_i) f(x_1, …, x̂_i, …, x_{n+1})
//!                       + (−1)^{n+1} ρ^R(x_{n+1}) f(x_1, …, x_n)
//!                       + Σ_{i<j} (−1)^i f(x_1, …, x̂_i, …, x_{j−1}, [x_i, x_j], x_{j+1}, …, x_{n+1})
//! ```
//!
//! Coordinates of a cochain are flattened lexicographically over the input
//! tuple and then over the output index (see [`Cochain`]); coboundary matrices
//! use the same order on both sides.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cochain::{Bicochain, Cochain};
use crate::error::{Error, Result};
use crate::leibniz::Representation;
use crate::linalg::{Matrix, Rational, Vector};
use crate::report::{first_failure, CheckReport, Witness};

/// How `∂` acts on `C^0 = V`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Degree0Convention {
    /// The general formula at `n = 0`: `(∂v)(x) = −ρ^R(x)v`.
    #[default]
    Literal,
    /// `(∂v)(x) = ρ^L(x)v − ρ^R(x)v`.
    LeftMinusRight,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CohomologyConfig {
    /// Largest degree `n` for which `H^n` may be computed (this builds
    /// `∂: C^n → C^{n+1}`).
    pub degree_cap: usize,
    pub degree0: Degree0Convention,
}

impl Default for CohomologyConfig {
    fn default() -> Self {
        CohomologyConfig { degree_cap: 3, degree0: Degree0Convention::Literal }
    }
}

/// `dim Z^n`, `dim B^n` and `dim H^n = z − b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CohomologyReport {
    pub degree: usize,
    pub z: usize,
    pub b: usize,
    pub h: usize,
}

/// One summand of `(∂f)(x)` for a fixed basis tuple `x`.
enum Term<'a> {
    /// `sign · action · f(tuple)`.
    Act { sign: i8, action: &'a Matrix, tuple: Vec<usize> },
    /// `sign · f(tuple with slot replaced by Σ_m bracket[m] e_m)`.
    Bracket { sign: i8, tuple: Vec<usize>, slot: usize, value: Vector },
}

fn sign(exponent: usize) -> i8 {
    if exponent.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The summands of `(∂f)(e_{x_0}, …, e_{x_n})` for an `n`-cochain `f`,
/// where `x.len() == n + 1`. Positions are 0-based here, so the signs read
/// `(−1)^i` for the left actions and `(−1)^{i+1}` for the bracket terms.
fn terms<'a>(r: &'a Representation, x: &[usize], conv: Degree0Convention) -> Vec<Term<'a>> {
    let n = x.len() - 1;
    let g = r.algebra();
    let mut out = Vec::new();
    if n == 0 && conv == Degree0Convention::LeftMinusRight {
        out.push(Term::Act { sign: 1, action: &r.rho_l()[x[0]], tuple: Vec::new() });
        out.push(Term::Act { sign: -1, action: &r.rho_r()[x[0]], tuple: Vec::new() });
        return out;
    }
    for i in 0..n {
        let mut tuple = x.to_vec();
        tuple.remove(i);
        out.push(Term::Act { sign: sign(i), action: &r.rho_l()[x[i]], tuple });
    }
    out.push(Term::Act { sign: sign(n + 1), action: &r.rho_r()[x[n]], tuple: x[..n].to_vec() });
    for i in 0..n + 1 {
        for j in i + 1..n + 1 {
            let value = g.bracket_basis(x[i], x[j]);
            if value.is_zero() {
                continue;
            }
            let mut tuple = x.to_vec();
            tuple.remove(i);
            out.push(Term::Bracket { sign: sign(i + 1), tuple, slot: j - 1, value });
        }
    }
    out
}

fn check_cochain(r: &Representation, f: &Cochain) -> Result<()> {
    if f.dim_in() != r.dim_g() || f.dim_out() != r.dim_v() {
        return Err(Error::shape(format!(
            "cochain maps {}-dimensional inputs to {}-dimensional values, representation has dim_g {} and dim_v {}",
            f.dim_in(),
            f.dim_out(),
            r.dim_g(),
            r.dim_v()
        )));
    }
    Ok(())
}

/// `∂f` with the default degree-0 convention.
pub fn coboundary(r: &Representation, f: &Cochain) -> Result<Cochain> {
    coboundary_with(r, f, Degree0Convention::Literal)
}

pub fn coboundary_with(r: &Representation, f: &Cochain, conv: Degree0Convention) -> Result<Cochain> {
    check_cochain(r, f)?;
    let m = r.dim_v();
    Ok(Cochain::from_fn(f.degree() + 1, r.dim_g(), m, |x| {
        let mut out = Vector::zeros(m);
        for term in terms(r, x, conv) {
            match term {
                Term::Act { sign, action, tuple } => {
                    let v = action.apply(&f.value(&tuple));
                    if sign > 0 {
                        out += &v;
                    } else {
                        out -= &v;
                    }
                }
                Term::Bracket { sign, tuple, slot, value } => {
                    let v = f.eval_with_slot(&tuple, slot, &value);
                    if sign > 0 {
                        out += &v;
                    } else {
                        out -= &v;
                    }
                }
            }
        }
        out
    }))
}

fn flat_index(tuple: &[usize], dim: usize) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * dim + i)
}

/// Matrix of `∂: C^n → C^{n+1}` on flattened coordinates,
/// `(dim_g^{n+1}·dim_v) × (dim_g^n·dim_v)`.
pub fn coboundary_matrix(r: &Representation, degree: usize, conv: Degree0Convention) -> Matrix {
    let (d, m) = (r.dim_g(), r.dim_v());
    let cols = d.pow(degree as u32) * m;
    let rows = d.pow(degree as u32 + 1) * m;
    let mut mat = Matrix::zeros(rows, cols);
    for x in crate::tuples(degree + 1, d) {
        let row0 = flat_index(&x, d) * m;
        for term in terms(r, &x, conv) {
            match term {
                Term::Act { sign, action, tuple } => {
                    let col0 = flat_index(&tuple, d) * m;
                    for k in 0..m {
                        for c in 0..m {
                            let a = &action[(k, c)];
                            if !a.is_zero() {
                                if sign > 0 {
                                    mat[(row0 + k, col0 + c)] += a;
                                } else {
                                    mat[(row0 + k, col0 + c)] -= a;
                                }
                            }
                        }
                    }
                }
                Term::Bracket { sign, mut tuple, slot, value } => {
                    for (e, coeff) in value.iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        tuple[slot] = e;
                        let col0 = flat_index(&tuple, d) * m;
                        for k in 0..m {
                            if sign > 0 {
                                mat[(row0 + k, col0 + k)] += coeff;
                            } else {
                                mat[(row0 + k, col0 + k)] -= coeff;
                            }
                        }
                    }
                }
            }
        }
    }
    mat
}

/// `∂f = 0`, reporting the first basis tuple where `∂f` is nonzero.
pub fn is_cocycle(r: &Representation, f: &Cochain) -> Result<CheckReport> {
    is_cocycle_with(r, f, Degree0Convention::Literal)
}

pub fn is_cocycle_with(r: &Representation, f: &Cochain, conv: Degree0Convention) -> Result<CheckReport> {
    let df = coboundary_with(r, f, conv)?;
    let m = r.dim_v();
    Ok(match df.first_nonzero() {
        Some((tuple, value)) => CheckReport::fail(
            Witness::new("cocycle").compare(&tuple, value, Vector::zeros(m)).expect("nonzero value"),
        ),
        None => CheckReport::pass(),
    })
}

/// The degree-2 cocycle condition written out term by term:
/// `ρ^L(x)H(y,z) − ρ^L(y)H(x,z) − ρ^R(z)H(x,y) − H([x,y],z) − H(y,[x,z]) + H(x,[y,z]) = 0`.
/// Independent of [`coboundary`]; the two must agree.
pub fn check_two_cocycle_identity(r: &Representation, h: &Bicochain) -> Result<CheckReport> {
    check_cochain(r, h)?;
    if h.degree() != 2 {
        return Err(Error::shape(format!("expected a degree-2 cochain, got degree {}", h.degree())));
    }
    let (d, m) = (r.dim_g(), r.dim_v());
    let g = r.algebra();
    let w = Witness::new("cocycle");
    Ok(first_failure(&[d, d, d], |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let (ex, ey, ez) = (Vector::basis(d, x), Vector::basis(d, y), Vector::basis(d, z));
        let mut sum = r.rho_l()[x].apply(&h.value(&[y, z]));
        sum -= &r.rho_l()[y].apply(&h.value(&[x, z]));
        sum -= &r.rho_r()[z].apply(&h.value(&[x, y]));
        sum -= &h.eval(&[&g.bracket_basis(x, y), &ez]);
        sum -= &h.eval(&[&ey, &g.bracket_basis(x, z)]);
        sum += &h.eval(&[&ex, &g.bracket_basis(y, z)]);
        w.compare(t, sum, Vector::zeros(m))
    }))
}

/// Some `g` with `∂g = f`, or `None` when `f` is not a coboundary.
pub fn is_coboundary(r: &Representation, f: &Cochain) -> Result<Option<Cochain>> {
    is_coboundary_with(r, f, Degree0Convention::Literal)
}

pub fn is_coboundary_with(r: &Representation, f: &Cochain, conv: Degree0Convention) -> Result<Option<Cochain>> {
    check_cochain(r, f)?;
    if f.degree() == 0 {
        return Err(Error::Precondition("degree-0 cochains have no preimage degree".into()));
    }
    let mat = coboundary_matrix(r, f.degree() - 1, conv);
    match mat.solve(&f.flatten())? {
        Some(x) => Ok(Some(Cochain::from_flat(f.degree() - 1, r.dim_g(), r.dim_v(), x)?)),
        None => Ok(None),
    }
}

/// Dimensions of `Z^n`, `B^n` and `H^n` from exact ranks of `∂_n` and
/// `∂_{n−1}`.
pub fn cohomology_dims(r: &Representation, degree: usize, config: &CohomologyConfig) -> Result<CohomologyReport> {
    if degree > config.degree_cap {
        return Err(Error::DegreeCap { degree, cap: config.degree_cap });
    }
    let dn = coboundary_matrix(r, degree, config.degree0);
    let z = dn.cols() - dn.rank();
    let b = if degree == 0 { 0 } else { coboundary_matrix(r, degree - 1, config.degree0).rank() };
    Ok(CohomologyReport { degree, z, b, h: z - b })
}

/// Entry-wise sum `Σ c_i f_i` of same-shape cochains; used by generators.
pub(crate) fn combine(basis: &[Vector], coeffs: &[Rational]) -> Vector {
    let mut out = Vector::zeros(basis.first().map_or(0, Vector::dim));
    for (v, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            out.add_scaled(c, v);
        }
    }
    out
}

/// Basis of `Z^n` as flattened cochains.
pub fn cocycle_basis(r: &Representation, degree: usize, conv: Degree0Convention) -> Vec<Vector> {
    coboundary_matrix(r, degree, conv).kernel_basis()
}

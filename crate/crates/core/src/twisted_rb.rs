//! `H`-twisted relative Rota-Baxter operators `K: V → g`:
//!
//! ```text
//! [Ku, Kv] = K(ρ^L(Ku)v + ρ^R(Kv)u + H(Ku, Kv))
//! ```
//!
//! together with their morphisms, the induced bracket on `V`, the induced
//! representation on `g`, the differential `∂_K`, and the constructions that
//! shift `H` by a coboundary or gauge `K` by a 1-cocycle.

use num_traits::One;

use crate::cochain::{Bicochain, Cochain};
use crate::cohomology::{self, CohomologyConfig, CohomologyReport};
use crate::error::{Error, Result};
use crate::leibniz::{
    bicochain_from_fn, check_algebra_morphism, deformed_bracket, describe, twisted_semidirect,
    twisted_semidirect_unchecked, LeibnizAlgebra, LinearMap, Representation,
};
use crate::linalg::{Matrix, Rational, Vector};
use crate::report::{first_failure, CheckReport, Witness};

/// A representation of `g` on `V`, a twisting 2-cochain `H` and `K: V → g`
/// (a `dim_g × dim_v` matrix). Construction only checks shapes; use
/// [`check_twisted_rb`] and [`crate::cohomology::is_cocycle`] to verify.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistedRbData {
    rep: Representation,
    h: Bicochain,
    k: LinearMap,
}

impl TwistedRbData {
    pub fn new(rep: Representation, h: Bicochain, k: LinearMap) -> Result<Self> {
        let (n, m) = (rep.dim_g(), rep.dim_v());
        if (h.degree(), h.dim_in(), h.dim_out()) != (2, n, m) {
            return Err(Error::shape(format!(
                "twisting cochain must have degree 2, inputs of dimension {n} and values of dimension {m}"
            )));
        }
        if (k.rows(), k.cols()) != (n, m) {
            return Err(Error::shape(format!("K must be {n}x{m}, got {}x{}", k.rows(), k.cols())));
        }
        Ok(TwistedRbData { rep, h, k })
    }

    /// `H = 0`.
    pub fn untwisted(rep: Representation, k: LinearMap) -> Result<Self> {
        let h = Cochain::zero(2, rep.dim_g(), rep.dim_v());
        Self::new(rep, h, k)
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn algebra(&self) -> &LeibnizAlgebra {
        self.rep.algebra()
    }

    pub fn cocycle(&self) -> &Bicochain {
        &self.h
    }

    pub fn k(&self) -> &LinearMap {
        &self.k
    }

    pub fn dim_g(&self) -> usize {
        self.rep.dim_g()
    }

    pub fn dim_v(&self) -> usize {
        self.rep.dim_v()
    }

    /// Same representation and cocycle with another operator.
    pub fn with_k(&self, k: LinearMap) -> Result<Self> {
        Self::new(self.rep.clone(), self.h.clone(), k)
    }

    /// The same data in new coordinates `u' = Pu` on `V`:
    /// `K' = KP⁻¹`, `ρ' = PρP⁻¹`, `H' = PH`.
    pub fn transport_v(&self, p: &Matrix, p_inv: &Matrix) -> Result<Self> {
        let m = self.dim_v();
        if (p.rows(), p.cols()) != (m, m) || (p_inv.rows(), p_inv.cols()) != (m, m) {
            return Err(Error::shape(format!("change of basis on V must be {m}x{m}")));
        }
        let h = Cochain::from_fn(2, self.dim_g(), m, |t| p.apply(&self.h.value(t)));
        Self::new(self.rep.conjugated(p, p_inv), h, &self.k * p_inv)
    }

    /// `H(x, y)` for arbitrary `x, y ∈ g`.
    pub fn h(&self, x: &Vector, y: &Vector) -> Vector {
        self.h.eval(&[x, y])
    }

    /// `ρ^L(Ku)v + ρ^R(Kv)u + H(Ku, Kv)`, the induced bracket `[u, v]_K`.
    pub fn induced(&self, u: &Vector, v: &Vector) -> Vector {
        let (ku, kv) = (self.k.apply(u), self.k.apply(v));
        let mut out = self.rep.act_left(&ku, v);
        out += &self.rep.act_right(&kv, u);
        out += &self.h(&ku, &kv);
        out
    }
}

/// A pair `(φ: g → g', ψ: V → V')`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TrbMorphism {
    pub phi: LinearMap,
    pub psi: LinearMap,
}

impl TrbMorphism {
    pub fn identity(d: &TwistedRbData) -> Self {
        TrbMorphism { phi: Matrix::identity(d.dim_g()), psi: Matrix::identity(d.dim_v()) }
    }
}

/// The defining identity on all pairs of `V`-basis vectors.
pub fn check_twisted_rb(d: &TwistedRbData) -> CheckReport {
    let m = d.dim_v();
    let w = Witness::new("twisted-rota-baxter");
    first_failure(&[m, m], |t| {
        let (u, v) = (Vector::basis(m, t[0]), Vector::basis(m, t[1]));
        let lhs = d.algebra().bracket(&d.k.apply(&u), &d.k.apply(&v));
        let rhs = d.k.apply(&d.induced(&u, &v));
        w.compare(t, lhs, rhs)
    })
}

fn require_trb(d: &TwistedRbData) -> Result<()> {
    let r = check_twisted_rb(d);
    if r.holds {
        Ok(())
    } else {
        Err(Error::NotTwistedRotaBaxter(describe(&r)))
    }
}

/// `K = h⁻¹` with `H = −∂h`, for an invertible 1-cochain `h: g → V`.
pub fn from_invertible_cochain(rep: &Representation, h: &Cochain) -> Result<TwistedRbData> {
    if (h.degree(), h.dim_in(), h.dim_out()) != (1, rep.dim_g(), rep.dim_v()) {
        return Err(Error::shape("h must be a degree-1 cochain g → V"));
    }
    let hm = h.to_linear_map()?;
    if !hm.is_square() {
        return Err(Error::shape(format!("h must be square to be invertible, got {}x{}", hm.rows(), hm.cols())));
    }
    let k = hm.invert()?.ok_or_else(|| Error::Singular("h is not invertible".into()))?;
    let big_h = cohomology::coboundary(rep, h)?.scaled(&-Rational::one());
    TwistedRbData::new(rep.clone(), big_h, k)
}

/// The identity map `g → g_N`, with `ρ^L(x)y = [Nx, y]`, `ρ^R(x)y = [y, Nx]`
/// and `H(x, y) = −N[x, y]`.
pub fn from_nijenhuis(g: &LeibnizAlgebra, n: &LinearMap) -> Result<TwistedRbData> {
    let gn = deformed_bracket(g, n)?;
    let d = g.dim();
    let rho_l = (0..d).map(|i| g.left_mult(&n.column(i))).collect();
    let rho_r = (0..d).map(|i| g.right_mult(&n.column(i))).collect();
    let rep = Representation::new(gn, d, rho_l, rho_r)?;
    let h = bicochain_from_fn(d, d, |i, j| -n.apply(&g.bracket_basis(i, j)));
    TwistedRbData::new(rep, h, Matrix::identity(d))
}

/// Whether the graph `{(Ku, u)}` is closed under the bracket of `g ⋉_H V`.
/// The bracket of two graph generators `(Ke_a, e_a)` lies in the graph iff its
/// `g`-part equals `K` applied to its `V`-part; failures report the bracket
/// against that graph element.
pub fn graph_is_subalgebra(d: &TwistedRbData) -> Result<CheckReport> {
    let s = twisted_semidirect_unchecked(d.rep(), d.cocycle())?;
    let (n, m) = (d.dim_g(), d.dim_v());
    let generator = |a: usize| d.k.column(a).concat(&Vector::basis(m, a));
    let w = Witness::new("graph");
    Ok(first_failure(&[m, m], |t| {
        let br = s.bracket(&generator(t[0]), &generator(t[1]));
        let u = Vector::new(br.entries()[n..].to_vec());
        let in_graph = d.k.apply(&u).concat(&u);
        w.compare(t, br, in_graph)
    }))
}

/// Leibniz bracket `[u, v]_K` on `V`, without checking `K`.
pub fn induced_bracket_unchecked(d: &TwistedRbData) -> LeibnizAlgebra {
    let m = d.dim_v();
    LeibnizAlgebra::from_fn(m, |a, b| d.induced(&Vector::basis(m, a), &Vector::basis(m, b)))
}

pub fn induced_bracket(d: &TwistedRbData) -> Result<LeibnizAlgebra> {
    require_trb(d)?;
    Ok(induced_bracket_unchecked(d))
}

fn check_degree_one(c: &Cochain, d: &TwistedRbData, what: &str) -> Result<Matrix> {
    if (c.degree(), c.dim_in(), c.dim_out()) != (1, d.dim_g(), d.dim_v()) {
        return Err(Error::shape(format!("{what} must be a degree-1 cochain g → V")));
    }
    c.to_linear_map()
}

/// `Ψ_h(x, u) = (x, u − h(x))` as a matrix on `g ⊕ V`.
pub fn psi_h(h: &LinearMap) -> Matrix {
    let (m, n) = (h.rows(), h.cols());
    let mut psi = Matrix::identity(n + m);
    for i in 0..m {
        for j in 0..n {
            psi[(n + i, j)] = -h[(i, j)].clone();
        }
    }
    psi
}

/// `(g ⋉_H V, g ⋉_{H+∂h} V, Ψ_h)`.
pub fn psi_h_isomorphism(
    rep: &Representation,
    h_cocycle: &Bicochain,
    h: &Cochain,
) -> Result<(LeibnizAlgebra, LeibnizAlgebra, LinearMap)> {
    if (h.degree(), h.dim_in(), h.dim_out()) != (1, rep.dim_g(), rep.dim_v()) {
        return Err(Error::shape("h must be a degree-1 cochain g → V"));
    }
    let src = twisted_semidirect(rep, h_cocycle)?;
    let shifted = h_cocycle.checked_add(&cohomology::coboundary(rep, h)?)?;
    let dst = twisted_semidirect(rep, &shifted)?;
    Ok((src, dst, psi_h(&h.to_linear_map()?)))
}

/// `K' = K(Id − hK)⁻¹` twisted by `H + ∂h`; `None` when `Id − hK` is singular.
pub fn shift_by_cochain(d: &TwistedRbData, h: &Cochain) -> Result<Option<TwistedRbData>> {
    let hm = check_degree_one(h, d, "h")?;
    let m = &Matrix::identity(d.dim_v()) - &(&hm * d.k());
    let Some(m_inv) = m.invert()? else {
        return Ok(None);
    };
    let shifted = d.cocycle().checked_add(&cohomology::coboundary(d.rep(), h)?)?;
    Ok(Some(TwistedRbData::new(d.rep().clone(), shifted, d.k() * &m_inv)?))
}

fn gauge_matrix(d: &TwistedRbData, b: &Cochain) -> Result<Matrix> {
    let bm = check_degree_one(b, d, "B")?;
    let report = cohomology::is_cocycle(d.rep(), b)?;
    if !report.holds {
        return Err(Error::NotCocycle(describe(&report)));
    }
    Ok(&Matrix::identity(d.dim_v()) + &(&bm * d.k()))
}

/// `K_B = K(Id + BK)⁻¹` with the same `H`, for a 1-cocycle `B`; `None` when
/// `B` is not admissible (`Id + BK` singular).
pub fn gauge_transform(d: &TwistedRbData, b: &Cochain) -> Result<Option<TwistedRbData>> {
    let m = gauge_matrix(d, b)?;
    Ok(match m.invert()? {
        Some(inv) => Some(d.with_k(d.k() * &inv)?),
        None => None,
    })
}

/// Whether `Id + BK` is an algebra morphism `(V, [·,·]_K) → (V, [·,·]_{K_B})`.
pub fn gauge_bracket_isomorphism(d: &TwistedRbData, b: &Cochain) -> Result<CheckReport> {
    let m = gauge_matrix(d, b)?;
    let kb = gauge_transform(d, b)?.ok_or_else(|| Error::Singular("Id + BK is not invertible".into()))?;
    check_algebra_morphism(&induced_bracket_unchecked(d), &induced_bracket_unchecked(&kb), &m)
}

/// The five morphism conditions, in order: `φ` is a Leibniz morphism,
/// `φK = K'ψ`, `ψρ^L(x) = ρ'^L(φx)ψ`, `ψρ^R(x) = ρ'^R(φx)ψ`,
/// `ψH = H'(φ ⊗ φ)`.
pub fn check_morphism(src: &TwistedRbData, dst: &TwistedRbData, mor: &TrbMorphism) -> Result<CheckReport> {
    let (n, m) = (src.dim_g(), src.dim_v());
    let (phi, psi) = (&mor.phi, &mor.psi);
    if (psi.rows(), psi.cols()) != (dst.dim_v(), m) {
        return Err(Error::shape(format!("ψ must be {}x{m}, got {}x{}", dst.dim_v(), psi.rows(), psi.cols())));
    }
    let leibniz = check_algebra_morphism(src.algebra(), dst.algebra(), phi)?;
    let report = CheckReport { failure: leibniz.failure.map(|mut f| {
        f.condition = "leibniz-morphism".into();
        f
    }), ..leibniz };
    Ok(report
        .and_then(|| {
            let w = Witness::new("k-intertwining");
            first_failure(&[m], |t| {
                let u = Vector::basis(m, t[0]);
                w.compare(t, phi.apply(&src.k().apply(&u)), dst.k().apply(&psi.apply(&u)))
            })
        })
        .and_then(|| {
            let w = Witness::new("left-action");
            first_failure(&[n, m], |t| {
                let u = Vector::basis(m, t[1]);
                let lhs = psi.apply(&src.rep().rho_l()[t[0]].apply(&u));
                let rhs = dst.rep().act_left(&phi.column(t[0]), &psi.apply(&u));
                w.compare(t, lhs, rhs)
            })
        })
        .and_then(|| {
            let w = Witness::new("right-action");
            first_failure(&[n, m], |t| {
                let u = Vector::basis(m, t[1]);
                let lhs = psi.apply(&src.rep().rho_r()[t[0]].apply(&u));
                let rhs = dst.rep().act_right(&phi.column(t[0]), &psi.apply(&u));
                w.compare(t, lhs, rhs)
            })
        })
        .and_then(|| {
            let w = Witness::new("cocycle");
            first_failure(&[n, n], |t| {
                let lhs = psi.apply(&src.cocycle().value(t));
                let rhs = dst.h(&phi.column(t[0]), &phi.column(t[1]));
                w.compare(t, lhs, rhs)
            })
        }))
}

/// `ρ̄^L(u)x = [Ku, x] − K(ρ^R(x)u) − KH(Ku, x)`.
pub fn induced_left(d: &TwistedRbData, u: &Vector, x: &Vector) -> Vector {
    let ku = d.k().apply(u);
    let mut inner = d.rep().act_right(x, u);
    inner += &d.h(&ku, x);
    &d.algebra().bracket(&ku, x) - &d.k().apply(&inner)
}

/// `ρ̄^R(u)x = [x, Ku] − K(ρ^L(x)u) − KH(x, Ku)`.
pub fn induced_right(d: &TwistedRbData, u: &Vector, x: &Vector) -> Vector {
    let ku = d.k().apply(u);
    let mut inner = d.rep().act_left(x, u);
    inner += &d.h(x, &ku);
    &d.algebra().bracket(x, &ku) - &d.k().apply(&inner)
}

/// Representation `(g, ρ̄^L, ρ̄^R)` of `(V, [·,·]_K)`, without checking `K`.
pub fn induced_representation_unchecked(d: &TwistedRbData) -> Representation {
    let (n, m) = (d.dim_g(), d.dim_v());
    let side = |f: fn(&TwistedRbData, &Vector, &Vector) -> Vector| -> Vec<Matrix> {
        (0..m)
            .map(|a| Matrix::from_fn_columns(n, n, |j| f(d, &Vector::basis(m, a), &Vector::basis(n, j))))
            .collect()
    };
    Representation::new(induced_bracket_unchecked(d), n, side(induced_left), side(induced_right))
        .expect("induced actions have consistent shapes")
}

pub fn induced_representation(d: &TwistedRbData) -> Result<Representation> {
    require_trb(d)?;
    Ok(induced_representation_unchecked(d))
}

fn check_k_cochain(d: &TwistedRbData, f: &Cochain) -> Result<()> {
    if f.dim_in() != d.dim_v() || f.dim_out() != d.dim_g() {
        return Err(Error::shape(format!(
            "cochains of K take {}-dimensional inputs to {}-dimensional values",
            d.dim_v(),
            d.dim_g()
        )));
    }
    Ok(())
}

/// `∂_K f` for `f ∈ C^n(V, g)`, expanded directly in terms of `[·,·]`, `ρ`,
/// `H` and `K`:
///
/// ```text
/// Σ_{i≤n} (−1)^{i+1} ( [Ku_i, f(…û_i…)] − K ρ^R(f(…û_i…)) u_i − K H(Ku_i, f(…û_i…)) )
/// + (−1)^{n+1} [f(u_1…u_n), Ku_{n+1}] + (−1)^n K ρ^L(f(u_1…u_n)) u_{n+1}
/// + (−1)^n K H(f(u_1…u_n), Ku_{n+1})
/// + Σ_{i<j} (−1)^i f(…û_i…, ρ^L(Ku_i)u_j + ρ^R(Ku_j)u_i + H(Ku_i, Ku_j), …)
/// ```
///
/// It agrees with the generic coboundary of the induced representation; that
/// equality is tested rather than assumed.
pub fn dk_coboundary(d: &TwistedRbData, f: &Cochain) -> Result<Cochain> {
    check_k_cochain(d, f)?;
    let (n_deg, m, dg) = (f.degree(), d.dim_v(), d.dim_g());
    let g = d.algebra();
    let k = d.k();
    let parity = |e: usize| if e.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    Ok(Cochain::from_fn(n_deg + 1, m, dg, |u| {
        let mut out = Vector::zeros(dg);
        let basis = |a: usize| Vector::basis(m, a);
        for i in 0..n_deg {
            // 0-based i corresponds to 1-based i+1, sign (−1)^{i+2} = (−1)^i.
            let s = parity(i);
            let mut rest = u.to_vec();
            rest.remove(i);
            let fv = f.value(&rest);
            let ku = k.column(u[i]);
            let mut term = g.bracket(&ku, &fv);
            term -= &k.apply(&d.rep().act_right(&fv, &basis(u[i])));
            term -= &k.apply(&d.h(&ku, &fv));
            out.add_scaled(&s, &term);
        }
        let fv = f.value(&u[..n_deg]);
        let ku_last = k.column(u[n_deg]);
        out.add_scaled(&parity(n_deg + 1), &g.bracket(&fv, &ku_last));
        let mut tail = k.apply(&d.rep().act_left(&fv, &basis(u[n_deg])));
        tail += &k.apply(&d.h(&fv, &ku_last));
        out.add_scaled(&parity(n_deg), &tail);
        for i in 0..n_deg + 1 {
            for j in i + 1..n_deg + 1 {
                let value = d.induced(&basis(u[i]), &basis(u[j]));
                if value.is_zero() {
                    continue;
                }
                let mut rest = u.to_vec();
                rest.remove(i);
                out.add_scaled(&parity(i + 1), &f.eval_with_slot(&rest, j - 1, &value));
            }
        }
        out
    }))
}

/// `∂_K f` as the Loday–Pirashvili coboundary of `(V, [·,·]_K)` with
/// coefficients in `(g, ρ̄^L, ρ̄^R)`.
pub fn dk_coboundary_generic(d: &TwistedRbData, f: &Cochain) -> Result<Cochain> {
    check_k_cochain(d, f)?;
    cohomology::coboundary(&induced_representation_unchecked(d), f)
}

/// `∂_K(x)` for `x ∈ g = C^0(V, g)`, as a `dim_g × dim_v` matrix:
/// `u ↦ K(ρ^L(x)u + H(x, Ku)) − [x, Ku]`.
pub fn dk_element(d: &TwistedRbData, x: &Vector) -> LinearMap {
    let m = d.dim_v();
    Matrix::from_fn_columns(d.dim_g(), m, |a| {
        let u = Vector::basis(m, a);
        let ku = d.k().apply(&u);
        let mut inner = d.rep().act_left(x, &u);
        inner += &d.h(x, &ku);
        &d.k().apply(&inner) - &d.algebra().bracket(x, &ku)
    })
}

/// Cohomology of `K`: the Loday–Pirashvili cohomology of the induced
/// representation.
pub fn k_cohomology_dims(d: &TwistedRbData, degree: usize, config: &CohomologyConfig) -> Result<CohomologyReport> {
    let rep = induced_representation(d)?;
    cohomology::cohomology_dims(&rep, degree, config)
}

/// Full verification of a bundle: the algebra, the representation, the
/// cocycle and the operator identity, in that order.
pub fn verify_bundle(d: &TwistedRbData) -> Result<CheckReport> {
    let leibniz = crate::leibniz::check_leibniz(d.algebra());
    Ok(leibniz
        .and_then(|| crate::leibniz::check_representation(d.rep()))
        .and_then(|| cohomology::is_cocycle(d.rep(), d.cocycle()).expect("shapes checked at construction"))
        .and_then(|| check_twisted_rb(d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::leibniz::{check_leibniz, check_representation, example_nilpotent_2d, regular_representation};
    use crate::linalg::{int, ratio};

    fn nil2() -> LeibnizAlgebra {
        example_nilpotent_2d()
    }

    fn nijenhuis_data(scale: i64) -> TwistedRbData {
        from_nijenhuis(&nil2(), &Matrix::scalar(2, &int(scale))).unwrap()
    }

    #[test]
    fn zero_operator_always_holds() {
        let r = regular_representation(&nil2());
        let h = bicochain_from_fn(2, 2, |i, j| Vector::from_ints(&[i as i64, j as i64]));
        let d = TwistedRbData::new(r, h, Matrix::zeros(2, 2)).unwrap();
        assert!(check_twisted_rb(&d).holds);
        assert!(graph_is_subalgebra(&d).unwrap().holds);
    }

    #[test]
    fn nijenhuis_examples() {
        for s in [0, 1, 2] {
            let d = nijenhuis_data(s);
            assert!(check_twisted_rb(&d).holds, "N = {s}·Id");
            assert!(cohomology::is_cocycle(d.rep(), d.cocycle()).unwrap().holds);
            assert!(check_representation(d.rep()).holds);
        }
        let zero = nijenhuis_data(0);
        assert!(zero.algebra().is_abelian() && zero.cocycle().is_zero());
        let id = nijenhuis_data(1);
        assert_eq!(id.algebra(), &nil2());
        // H = −[·,·]
        assert_eq!(id.cocycle().value(&[0, 0]), Vector::from_ints(&[0, -1]));
    }

    #[test]
    fn induced_bracket_of_nijenhuis_data_is_deformed_bracket() {
        let g = LeibnizAlgebra::from_entries(3, &[(0, 0, 1, 1), (0, 1, 2, 1)]);
        let n = Matrix::scalar(3, &int(3));
        let d = from_nijenhuis(&g, &n).unwrap();
        assert_eq!(induced_bracket(&d).unwrap(), deformed_bracket(&g, &n).unwrap());
    }

    #[test]
    fn invertible_cochain_examples() {
        let abelian = regular_representation(&LeibnizAlgebra::zero(2));
        let d = from_invertible_cochain(&abelian, &Cochain::from_linear_map(&Matrix::identity(2))).unwrap();
        assert!(d.cocycle().is_zero());
        assert_eq!(d.k(), &Matrix::identity(2));
        assert!(check_twisted_rb(&d).holds);

        let r = regular_representation(&nil2());
        let d = from_invertible_cochain(&r, &Cochain::from_linear_map(&Matrix::identity(2))).unwrap();
        assert!(check_twisted_rb(&d).holds);
        assert!(check_leibniz(&induced_bracket(&d).unwrap()).holds);
        // [u,v]_K = ρ^L(u)v + ρ^R(v)u − ∂h(u,v) with h = Id: [e0,e0]_K = e1 + e1 − e1.
        assert_eq!(induced_bracket(&d).unwrap().bracket_basis(0, 0), Vector::from_ints(&[0, 1]));

        let d2 = from_invertible_cochain(&r, &Cochain::from_linear_map(&Matrix::scalar(2, &int(2)))).unwrap();
        assert_eq!(d2.k(), &Matrix::scalar(2, &ratio(1, 2)));
        assert!(check_twisted_rb(&d2).holds);

        let singular = Cochain::from_linear_map(&Matrix::from_ints(&[&[1, 0], &[0, 0]]));
        assert!(matches!(from_invertible_cochain(&r, &singular), Err(Error::Singular(_))));
    }

    #[test]
    fn failing_operator_reports_pair_and_graph_disagrees_too() {
        let r = regular_representation(&nil2());
        let d = TwistedRbData::untwisted(r, Matrix::from_ints(&[&[1, 0], &[0, 0]])).unwrap();
        let direct = check_twisted_rb(&d);
        assert!(!direct.holds);
        assert_eq!(direct.failure.as_ref().unwrap().indices, vec![0, 0]);
        assert!(!graph_is_subalgebra(&d).unwrap().holds);
    }

    #[test]
    fn psi_h_intertwines() {
        let r = regular_representation(&nil2());
        let h0 = Cochain::zero(2, 2, 2);
        let h = Cochain::from_linear_map(&Matrix::identity(2));
        let (src, dst, psi) = psi_h_isomorphism(&r, &h0, &h).unwrap();
        assert!(check_algebra_morphism(&src, &dst, &psi).unwrap().holds);
        let back = psi_h(&(-&Matrix::identity(2)));
        assert_eq!(&psi * &back, Matrix::identity(4));

        let (a, b, id) = psi_h_isomorphism(&r, &h0, &Cochain::zero(1, 2, 2)).unwrap();
        assert_eq!(a, b);
        assert_eq!(id, Matrix::identity(4));
    }

    #[test]
    fn shift_examples() {
        let d = nijenhuis_data(1);
        let same = shift_by_cochain(&d, &Cochain::zero(1, 2, 2)).unwrap().unwrap();
        assert_eq!(same, d);

        let h = Cochain::from_linear_map(&Matrix::from_ints(&[&[0, 1], &[1, 0]]).scaled(&ratio(1, 3)));
        let shifted = shift_by_cochain(&d, &h).unwrap().unwrap();
        assert!(check_twisted_rb(&shifted).holds);
        assert!(cohomology::is_cocycle(shifted.rep(), shifted.cocycle()).unwrap().holds);

        // Id − hK singular with h = Id, K = Id.
        assert!(shift_by_cochain(&d, &Cochain::from_linear_map(&Matrix::identity(2))).unwrap().is_none());

        let zero_k = d.with_k(Matrix::zeros(2, 2)).unwrap();
        let s = shift_by_cochain(&zero_k, &h).unwrap().unwrap();
        assert!(s.k().is_zero());
    }

    #[test]
    fn gauge_examples() {
        let d = nijenhuis_data(2);
        let zero_b = Cochain::zero(1, 2, 2);
        assert_eq!(gauge_transform(&d, &zero_b).unwrap().unwrap(), d);
        assert!(gauge_bracket_isomorphism(&d, &zero_b).unwrap().holds);

        // B(e0) = e1, B(e1) = 0: check it is a 1-cocycle of this representation.
        let b = Cochain::from_linear_map(&Matrix::from_ints(&[&[0, 0], &[1, 0]]));
        assert!(cohomology::is_cocycle(d.rep(), &b).unwrap().holds);
        let kb = gauge_transform(&d, &b).unwrap().unwrap();
        assert!(check_twisted_rb(&kb).holds);
        assert!(gauge_bracket_isomorphism(&d, &b).unwrap().holds);

        let not_cocycle = Cochain::from_linear_map(&Matrix::identity(2));
        assert!(!cohomology::is_cocycle(d.rep(), &not_cocycle).unwrap().holds);
        assert!(matches!(gauge_transform(&d, &not_cocycle), Err(Error::NotCocycle(_))));
    }

    #[test]
    fn morphism_examples() {
        let d = nijenhuis_data(1);
        assert!(check_morphism(&d, &d, &TrbMorphism::identity(&d)).unwrap().holds);
        let zero = TrbMorphism { phi: Matrix::zeros(2, 2), psi: Matrix::zeros(2, 2) };
        assert!(check_morphism(&d, &d, &zero).unwrap().holds);
        // φ = Id, ψ = 2·Id breaks K-intertwining.
        let bad = TrbMorphism { phi: Matrix::identity(2), psi: Matrix::scalar(2, &int(2)) };
        assert_eq!(check_morphism(&d, &d, &bad).unwrap().condition(), Some("k-intertwining"));
        let not_leibniz = TrbMorphism { phi: Matrix::scalar(2, &int(2)), psi: Matrix::identity(2) };
        assert_eq!(check_morphism(&d, &d, &not_leibniz).unwrap().condition(), Some("leibniz-morphism"));
    }

    #[test]
    fn induced_representation_examples() {
        let zero = TwistedRbData::untwisted(Representation::trivial(LeibnizAlgebra::zero(2), 2), Matrix::zeros(2, 2)).unwrap();
        let r = induced_representation(&zero).unwrap();
        assert!(r.rho_l().iter().chain(r.rho_r()).all(Matrix::is_zero));

        let d = nijenhuis_data(1);
        let r = induced_representation(&d).unwrap();
        assert!(check_representation(&r).holds);
        // ρ̄^L(x)y = [x, y] for N = Id.
        assert_eq!(r.rho_l(), regular_representation(&nil2()).rho_l());
    }

    #[test]
    fn dk_two_paths_agree_and_square_to_zero() {
        let d = nijenhuis_data(1);
        let k = Cochain::from_linear_map(d.k());
        let a = dk_coboundary(&d, &k).unwrap();
        assert_eq!(a, dk_coboundary_generic(&d, &k).unwrap());
        assert!(dk_coboundary(&d, &a).unwrap().is_zero());

        let x = Vector::from_ints(&[1, -2]);
        let c = Cochain::constant(x.clone(), 2);
        assert_eq!(dk_coboundary(&d, &c).unwrap().to_linear_map().unwrap(), dk_element(&d, &x));
    }

    #[test]
    fn k_cohomology_examples() {
        let cfg = CohomologyConfig::default();
        let zero = TwistedRbData::untwisted(Representation::trivial(LeibnizAlgebra::zero(1), 1), Matrix::zeros(1, 1)).unwrap();
        for n in 0..=3 {
            assert_eq!(k_cohomology_dims(&zero, n, &cfg).unwrap(), CohomologyReport { degree: n, z: 1, b: 0, h: 1 });
        }
        // N = 2·Id: [u,v]_K = 2[u,v] while ρ̄ = (L, R) of the original bracket.
        // (∂x)(u) = −[x,u] has rank 1. (∂f)(e0,e0) = (−2f_10, 2f_00 − 2f_11) and
        // (∂f)(e0,e1) = (∂f)(e1,e0) = (0, f_10), so rank ∂_1 = 2.
        let d = nijenhuis_data(2);
        assert_eq!(k_cohomology_dims(&d, 1, &cfg).unwrap(), CohomologyReport { degree: 1, z: 2, b: 1, h: 1 });
        assert_eq!(k_cohomology_dims(&d, 0, &cfg).unwrap().b, 0);
    }
}

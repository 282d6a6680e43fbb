//! Deformations of a twisted relative Rota-Baxter operator `K`.
//!
//! A linear deformation is `K_t = K + tK_1`; a truncated formal deformation is
//! `K_t = K + tK_1 + … + t^N K_N` with every identity imposed coefficient-wise
//! in `t` up to order `N`. Equivalences are morphisms
//! `(φ_t = Id + tL_x + Σ_{i≥2} φ_i t^i, ψ_t = Id + tP_x + Σ_{i≥2} ψ_i t^i)` with
//! `P_x = ρ^L(x) + H(x, K·)`.


use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::leibniz::{describe, LinearMap};
use crate::linalg::{Matrix, Rational, Vector};
use crate::report::{first_failure, CheckReport, Failure, Witness};
use crate::twisted_rb::{
    check_twisted_rb, dk_coboundary, dk_element, induced_right, k_cohomology_dims, TwistedRbData,
};

/// `K_t = K + tK_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearDeformation {
    pub base: TwistedRbData,
    pub k1: LinearMap,
}

/// `K_t = K + Σ_{i=1}^{N} K_i t^i`, with `terms = [K_1, …, K_N]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedFormalDeformation {
    pub base: TwistedRbData,
    pub terms: Vec<LinearMap>,
}

/// `x ∈ g` and the higher coefficients `φ_2, φ_3, …` and `ψ_2, ψ_3, …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceDatum {
    pub x: Vector,
    pub phi: Vec<LinearMap>,
    pub psi: Vec<LinearMap>,
}

fn check_operator_shape(base: &TwistedRbData, k: &LinearMap, what: &str) -> Result<()> {
    if (k.rows(), k.cols()) != (base.dim_g(), base.dim_v()) {
        return Err(Error::shape(format!(
            "{what} must be {}x{}, got {}x{}",
            base.dim_g(),
            base.dim_v(),
            k.rows(),
            k.cols()
        )));
    }
    Ok(())
}

impl LinearDeformation {
    pub fn new(base: TwistedRbData, k1: LinearMap) -> Result<Self> {
        check_operator_shape(&base, &k1, "K_1")?;
        Ok(LinearDeformation { base, k1 })
    }

    pub fn as_formal(&self) -> TruncatedFormalDeformation {
        TruncatedFormalDeformation { base: self.base.clone(), terms: vec![self.k1.clone()] }
    }
}

impl TruncatedFormalDeformation {
    pub fn new(base: TwistedRbData, terms: Vec<LinearMap>) -> Result<Self> {
        for (i, k) in terms.iter().enumerate() {
            check_operator_shape(&base, k, &format!("K_{}", i + 1))?;
        }
        Ok(TruncatedFormalDeformation { base, terms })
    }

    /// `N`, the number of stored terms.
    pub fn order(&self) -> usize {
        self.terms.len()
    }

    /// `K_i`, with `K_0 = K` and `K_i = 0` beyond the stored terms.
    pub fn term(&self, i: usize) -> Matrix {
        match i {
            0 => self.base.k().clone(),
            _ => self.terms.get(i - 1).cloned().unwrap_or_else(|| Matrix::zeros(self.base.dim_g(), self.base.dim_v())),
        }
    }

    pub fn linear_term(&self) -> Matrix {
        self.term(1)
    }
}

impl EquivalenceDatum {
    /// Only `x`; enough for linear equivalences and order-1 formal checks.
    pub fn linear(x: Vector) -> Self {
        EquivalenceDatum { x, phi: Vec::new(), psi: Vec::new() }
    }

    /// `x` with `φ_i = ψ_i = 0` for `2 ≤ i ≤ order`.
    pub fn with_zero_terms(x: Vector, order: usize, dim_g: usize, dim_v: usize) -> Self {
        let higher = order.saturating_sub(1);
        EquivalenceDatum {
            x,
            phi: vec![Matrix::zeros(dim_g, dim_g); higher],
            psi: vec![Matrix::zeros(dim_v, dim_v); higher],
        }
    }
}

/// `P_x = ρ^L(x) + H(x, K·)` as a `dim_v × dim_v` matrix.
pub fn p_matrix(d: &TwistedRbData, x: &Vector) -> Matrix {
    let m = d.dim_v();
    Matrix::from_fn_columns(m, m, |a| {
        let u = Vector::basis(m, a);
        &d.rep().act_left(x, &u) + &d.h(x, &d.k().apply(&u))
    })
}

/// Coefficient-wise identity of `[K_t u, K_t v] = K_t(ρ^L(K_t u)v + ρ^R(K_t v)u + H(K_t u, K_t v))`
/// at order `n`, for `u = e_a`, `v = e_b`: returns (bracket side, operator side).
fn order_sides(d: &TwistedRbData, term: &dyn Fn(usize) -> Matrix, n: usize, a: usize, b: usize) -> (Vector, Vector) {
    let m = d.dim_v();
    let (u, v) = (Vector::basis(m, a), Vector::basis(m, b));
    let g = d.algebra();
    let ku: Vec<Vector> = (0..=n).map(|i| term(i).column(a)).collect();
    let kv: Vec<Vector> = (0..=n).map(|i| term(i).column(b)).collect();
    let mut lhs = Vector::zeros(d.dim_g());
    let mut rhs = Vector::zeros(d.dim_g());
    for i in 0..=n {
        let j = n - i;
        lhs += &g.bracket(&ku[i], &kv[j]);
        let mut inner = d.rep().act_left(&ku[j], &v);
        inner += &d.rep().act_right(&kv[j], &u);
        rhs += &term(i).apply(&inner);
        for jj in 0..=n - i {
            let kk = n - i - jj;
            rhs += &term(i).apply(&d.h(&ku[jj], &kv[kk]));
        }
    }
    (lhs, rhs)
}

/// The three conditions making `K + tK_1` a twisted relative Rota-Baxter
/// operator, one per power of `t`:
/// - `linear-term`: `[Ku,K_1v] + [K_1u,Kv] = K_1(ρ^L(Ku)v + ρ^R(Kv)u + H(Ku,Kv)) + K(ρ^L(K_1u)v + ρ^R(K_1v)u + H(K_1u,Kv) + H(Ku,K_1v))`
/// - `quadratic-term`: `[K_1u,K_1v] = K_1(ρ^L(K_1u)v + ρ^R(K_1v)u + H(Ku,K_1v) + H(K_1u,Kv)) + KH(K_1u,K_1v)`
/// - `cubic-term`: `0 = K_1 H(K_1u, K_1v)`
pub fn check_linear_deformation(ld: &LinearDeformation) -> Result<CheckReport> {
    check_operator_shape(&ld.base, &ld.k1, "K_1")?;
    let d = &ld.base;
    let (k, k1) = (d.k(), &ld.k1);
    let m = d.dim_v();
    let g = d.algebra();
    let rep = d.rep();
    let linear = || {
        let w = Witness::new("linear-term").at_order(1);
        first_failure(&[m, m], |t| {
            let (u, v) = (Vector::basis(m, t[0]), Vector::basis(m, t[1]));
            let (ku, kv, k1u, k1v) = (k.apply(&u), k.apply(&v), k1.apply(&u), k1.apply(&v));
            let lhs = &g.bracket(&ku, &k1v) + &g.bracket(&k1u, &kv);
            let mut a = rep.act_left(&ku, &v);
            a += &rep.act_right(&kv, &u);
            a += &d.h(&ku, &kv);
            let mut b = rep.act_left(&k1u, &v);
            b += &rep.act_right(&k1v, &u);
            b += &d.h(&k1u, &kv);
            b += &d.h(&ku, &k1v);
            w.compare(t, lhs, &k1.apply(&a) + &k.apply(&b))
        })
    };
    let quadratic = || {
        let w = Witness::new("quadratic-term").at_order(2);
        first_failure(&[m, m], |t| {
            let (u, v) = (Vector::basis(m, t[0]), Vector::basis(m, t[1]));
            let (ku, kv, k1u, k1v) = (k.apply(&u), k.apply(&v), k1.apply(&u), k1.apply(&v));
            let lhs = g.bracket(&k1u, &k1v);
            let mut a = rep.act_left(&k1u, &v);
            a += &rep.act_right(&k1v, &u);
            a += &d.h(&ku, &k1v);
            a += &d.h(&k1u, &kv);
            w.compare(t, lhs, &k1.apply(&a) + &k.apply(&d.h(&k1u, &k1v)))
        })
    };
    let cubic = || {
        let w = Witness::new("cubic-term").at_order(3);
        first_failure(&[m, m], |t| {
            let (k1u, k1v) = (k1.column(t[0]), k1.column(t[1]));
            w.compare(t, Vector::zeros(d.dim_g()), k1.apply(&d.h(&k1u, &k1v)))
        })
    };
    Ok(linear().and_then(quadratic).and_then(cubic))
}

/// `∂_K(K_1) = 0`.
pub fn infinitesimal_is_cocycle(base: &TwistedRbData, k1: &LinearMap) -> Result<CheckReport> {
    check_operator_shape(base, k1, "K_1")?;
    let dk = dk_coboundary(base, &Cochain::from_linear_map(k1))?;
    Ok(match dk.first_nonzero() {
        Some((tuple, value)) => CheckReport::fail(Failure {
            condition: "infinitesimal-cocycle".into(),
            indices: tuple,
            order: None,
            lhs: value,
            rhs: Vector::zeros(base.dim_g()),
        }),
        None => CheckReport::pass(),
    })
}

/// The order-`n` identity for `n = 0, …, N` where `N` is the number of terms.
pub fn check_formal_deformation(tfd: &TruncatedFormalDeformation) -> CheckReport {
    check_formal_deformation_to(tfd, tfd.order())
}

/// The order-`n` identity
/// `Σ_{i+j=n} [K_i u, K_j v] = Σ_{i+j=n} K_i(ρ^L(K_j u)v + ρ^R(K_j v)u) + Σ_{i+j+k=n} K_i H(K_j u, K_k v)`
/// for `n = 0, …, order`, with `K_i = 0` past the stored terms.
pub fn check_formal_deformation_to(tfd: &TruncatedFormalDeformation, order: usize) -> CheckReport {
    let m = tfd.base.dim_v();
    let term = |i: usize| tfd.term(i);
    let mut report = CheckReport::pass();
    for n in 0..=order {
        let w = Witness::new("order-identity").at_order(n);
        report = report.and_then(|| {
            first_failure(&[m, m], |t| {
                let (lhs, rhs) = order_sides(&tfd.base, &term, n, t[0], t[1]);
                w.compare(t, lhs, rhs)
            })
        });
        if !report.holds {
            break;
        }
    }
    report
}

fn same_base(a: &TwistedRbData, b: &TwistedRbData) -> Result<()> {
    if a != b {
        return Err(Error::Precondition("the two deformations have different base operators".into()));
    }
    Ok(())
}

fn check_x(d: &TwistedRbData, x: &Vector) -> Result<()> {
    if x.dim() != d.dim_g() {
        return Err(Error::shape(format!("x must have dimension {}, got {}", d.dim_g(), x.dim())));
    }
    Ok(())
}

/// Conditions on `x` alone, in order: `algebra-morphism`
/// `[[x,y],[x,z]] = 0`; `left-action-linear` `H(x, K(ρ^L(y)u)) = ρ^L(y)H(x, Ku)`;
/// `left-action-quadratic` `ρ^L([x,y])(ρ^L(x)u + H(x,Ku)) = 0`; the two
/// right-action analogues; `cocycle-linear`
/// `ρ^L(x)H(y,z) + H(x, KH(y,z)) = H([x,y],z) + H(y,[x,z])`;
/// `cocycle-quadratic` `H([x,y],[x,z]) = 0`.
fn element_conditions(d: &TwistedRbData, x: &Vector) -> CheckReport {
    let (n, m) = (d.dim_g(), d.dim_v());
    let g = d.algebra();
    let rep = d.rep();
    let k = d.k();
    let p = p_matrix(d, x);
    let lx = &g.left_mult(x);
    let p = &p;
    let zero_v = &Vector::zeros(m);

    let algebra = || {
        let w = Witness::new("algebra-morphism");
        first_failure(&[n, n], |t| w.compare(t, g.bracket(&lx.column(t[0]), &lx.column(t[1])), Vector::zeros(n)))
    };
    let action_linear = |name: &'static str, side: fn(&crate::Representation) -> &[Matrix]| {
        let w = Witness::new(name);
        first_failure(&[n, m], move |t| {
            let u = Vector::basis(m, t[1]);
            let act = &side(rep)[t[0]];
            let lhs = d.h(x, &k.apply(&act.apply(&u)));
            let rhs = act.apply(&d.h(x, &k.apply(&u)));
            w.compare(t, lhs, rhs)
        })
    };
    let action_quadratic = |name: &'static str, left: bool| {
        let w = Witness::new(name);
        first_failure(&[n, m], |t| {
            let xy = lx.column(t[0]);
            let pu = p.column(t[1]);
            let lhs = if left { rep.act_left(&xy, &pu) } else { rep.act_right(&xy, &pu) };
            w.compare(t, lhs, zero_v.clone())
        })
    };
    let cocycle_linear = || {
        let w = Witness::new("cocycle-linear");
        first_failure(&[n, n], |t| {
            let (y, z) = (Vector::basis(n, t[0]), Vector::basis(n, t[1]));
            let hyz = d.cocycle().value(t);
            let lhs = &rep.act_left(x, &hyz) + &d.h(x, &k.apply(&hyz));
            let rhs = &d.h(&lx.column(t[0]), &z) + &d.h(&y, &lx.column(t[1]));
            w.compare(t, lhs, rhs)
        })
    };
    let cocycle_quadratic = || {
        let w = Witness::new("cocycle-quadratic");
        first_failure(&[n, n], |t| w.compare(t, d.h(&lx.column(t[0]), &lx.column(t[1])), zero_v.clone()))
    };
    algebra()
        .and_then(|| action_linear("left-action-linear", |r| r.rho_l()))
        .and_then(|| action_quadratic("left-action-quadratic", true))
        .and_then(|| action_linear("right-action-linear", |r| r.rho_r()))
        .and_then(|| action_quadratic("right-action-quadratic", false))
        .and_then(cocycle_linear)
        .and_then(cocycle_quadratic)
}

/// Whether `(Id + tL_x, Id + tP_x)` is a morphism from `K + tK_1` to
/// `K + tK'_1`: the conditions on `x` alone followed by `operator-linear`
/// `K_1u + [x,Ku] = K(P_x u) + K'_1u` and `operator-quadratic`
/// `[x, K_1u] = K'_1(P_x u)`.
///
/// On success `K_1 − K'_1 = ∂_K(x)`, which is asserted.
pub fn check_equivalence(a: &LinearDeformation, b: &LinearDeformation, e: &EquivalenceDatum) -> Result<CheckReport> {
    same_base(&a.base, &b.base)?;
    check_operator_shape(&a.base, &a.k1, "K_1")?;
    check_operator_shape(&b.base, &b.k1, "K'_1")?;
    let d = &a.base;
    check_x(d, &e.x)?;
    let x = &e.x;
    let m = d.dim_v();
    let g = d.algebra();
    let p = p_matrix(d, x);
    let (k, k1, k1p) = (d.k(), &a.k1, &b.k1);
    let report = element_conditions(d, x)
        .and_then(|| {
            let w = Witness::new("operator-linear");
            first_failure(&[m], |t| {
                let u = Vector::basis(m, t[0]);
                let lhs = &k1.apply(&u) + &g.bracket(x, &k.apply(&u));
                let rhs = &k.apply(&p.apply(&u)) + &k1p.apply(&u);
                w.compare(t, lhs, rhs)
            })
        })
        .and_then(|| {
            let w = Witness::new("operator-quadratic");
            first_failure(&[m], |t| {
                let u = Vector::basis(m, t[0]);
                w.compare(t, g.bracket(x, &k1.column(t[0])), k1p.apply(&p.apply(&u)))
            })
        });
    if report.holds {
        assert_eq!(k1 - k1p, dk_element(d, x), "equivalent infinitesimals must differ by ∂_K(x)");
    }
    Ok(report)
}

/// `[x, ρ̄^R(u)x] = 0` for every basis `u` (condition `self-bracket`), then
/// the conditions on `x` alone listed at [`check_equivalence`].
pub fn check_nijenhuis_element(d: &TwistedRbData, x: &Vector) -> Result<CheckReport> {
    check_x(d, x)?;
    let (n, m) = (d.dim_g(), d.dim_v());
    let w = Witness::new("self-bracket");
    let self_bracket = first_failure(&[m], |t| {
        let r = induced_right(d, &Vector::basis(m, t[0]), x);
        w.compare(t, d.algebra().bracket(x, &r), Vector::zeros(n))
    });
    Ok(self_bracket.and_then(|| element_conditions(d, x)))
}

/// `t`-coefficients of a polynomial in matrices: `coeffs[i]` is the
/// coefficient of `t^i`.
fn series_coeff(coeffs: &[Matrix], i: usize, rows: usize, cols: usize) -> Matrix {
    coeffs.get(i).cloned().unwrap_or_else(|| Matrix::zeros(rows, cols))
}

fn equivalence_series(d: &TwistedRbData, e: &EquivalenceDatum, order: usize) -> Result<(Vec<Matrix>, Vec<Matrix>)> {
    let higher = order.saturating_sub(1);
    if e.phi.len() < higher || e.psi.len() < higher {
        return Err(Error::shape(format!(
            "order {order} needs φ_2…φ_{order} and ψ_2…ψ_{order}; got {} and {} higher terms",
            e.phi.len(),
            e.psi.len()
        )));
    }
    let (n, m) = (d.dim_g(), d.dim_v());
    for (i, (f, s)) in e.phi.iter().zip(&e.psi).enumerate() {
        if (f.rows(), f.cols()) != (n, n) || (s.rows(), s.cols()) != (m, m) {
            return Err(Error::shape(format!("φ_{0} must be {n}x{n} and ψ_{0} must be {m}x{m}", i + 2)));
        }
    }
    let mut phi = vec![Matrix::identity(n), d.algebra().left_mult(&e.x)];
    let mut psi = vec![Matrix::identity(m), p_matrix(d, &e.x)];
    phi.extend(e.phi.iter().take(higher).cloned());
    psi.extend(e.psi.iter().take(higher).cloned());
    Ok((phi, psi))
}

/// The morphism conditions for `(φ_t, ψ_t)` from `K_t` to `K'_t`, imposed on
/// each coefficient of `t^n` for `n = 0, …, order` (first failing order is
/// reported): `algebra-morphism`, `k-intertwining`, `left-action`,
/// `right-action`, `cocycle`.
///
/// On success with `order ≥ 1`, `K_1 − K'_1 = ∂_K(x)` is asserted.
pub fn check_formal_equivalence(
    a: &TruncatedFormalDeformation,
    b: &TruncatedFormalDeformation,
    e: &EquivalenceDatum,
    order: usize,
) -> Result<CheckReport> {
    same_base(&a.base, &b.base)?;
    let d = &a.base;
    check_x(d, &e.x)?;
    let (phi, psi) = equivalence_series(d, e, order)?;
    let (n, m) = (d.dim_g(), d.dim_v());
    let g = d.algebra();
    let rep = d.rep();
    let phi_at = |i: usize| series_coeff(&phi, i, n, n);
    let psi_at = |i: usize| series_coeff(&psi, i, m, m);

    let mut report = CheckReport::pass();
    for ord in 0..=order {
        let algebra = || {
            let w = Witness::new("algebra-morphism").at_order(ord);
            first_failure(&[n, n], |t| {
                let lhs = phi_at(ord).apply(&g.bracket_basis(t[0], t[1]));
                let mut rhs = Vector::zeros(n);
                for i in 0..=ord {
                    rhs += &g.bracket(&phi_at(i).column(t[0]), &phi_at(ord - i).column(t[1]));
                }
                w.compare(t, lhs, rhs)
            })
        };
        let intertwining = || {
            let w = Witness::new("k-intertwining").at_order(ord);
            first_failure(&[m], |t| {
                let u = Vector::basis(m, t[0]);
                let mut lhs = Vector::zeros(n);
                let mut rhs = Vector::zeros(n);
                for i in 0..=ord {
                    lhs += &phi_at(i).apply(&a.term(ord - i).column(t[0]));
                    rhs += &b.term(i).apply(&psi_at(ord - i).apply(&u));
                }
                w.compare(t, lhs, rhs)
            })
        };
        let action = |left: bool| {
            let w = Witness::new(if left { "left-action" } else { "right-action" }).at_order(ord);
            first_failure(&[n, m], move |t| {
                let u = Vector::basis(m, t[1]);
                let act = if left { &rep.rho_l()[t[0]] } else { &rep.rho_r()[t[0]] };
                let lhs = psi_at(ord).apply(&act.apply(&u));
                let mut rhs = Vector::zeros(m);
                for i in 0..=ord {
                    let y = phi_at(i).column(t[0]);
                    let v = psi_at(ord - i).apply(&u);
                    rhs += &if left { rep.act_left(&y, &v) } else { rep.act_right(&y, &v) };
                }
                w.compare(t, lhs, rhs)
            })
        };
        let cocycle = || {
            let w = Witness::new("cocycle").at_order(ord);
            first_failure(&[n, n], |t| {
                let lhs = psi_at(ord).apply(&d.cocycle().value(t));
                let mut rhs = Vector::zeros(m);
                for i in 0..=ord {
                    rhs += &d.h(&phi_at(i).column(t[0]), &phi_at(ord - i).column(t[1]));
                }
                w.compare(t, lhs, rhs)
            })
        };
        report = report
            .and_then(algebra)
            .and_then(intertwining)
            .and_then(|| action(true))
            .and_then(|| action(false))
            .and_then(cocycle);
        if !report.holds {
            break;
        }
    }
    if report.holds && order >= 1 {
        assert_eq!(
            &a.term(1) - &b.term(1),
            dk_element(d, &e.x),
            "equivalent infinitesimals must differ by ∂_K(x)"
        );
    }
    Ok(report)
}

/// One reduction step: given a Nijenhuis element `x` with `∂_K(x) = −K_1`,
/// returns `K'_t = φ_t K_t ψ_t⁻¹` truncated at the same order, where
/// `φ_t = Id + tL_y`, `ψ_t = Id + tP_y` and `y = −x`. Then `K'_1 = 0` and
/// `(φ_t, ψ_t)` is an equivalence from `K_t` to `K'_t`; it is returned as the
/// datum for `y` with vanishing higher terms.
///
/// The element is negated because `(Id + tL_x, Id + tP_x)` carries `K_t` to a
/// deformation with linear term `K_1 − ∂_K(x)`; the set of Nijenhuis elements
/// is closed under negation, so `y` is one as well.
pub fn trivialization_step(
    tfd: &TruncatedFormalDeformation,
    x: &Vector,
) -> Result<(TruncatedFormalDeformation, EquivalenceDatum)> {
    let d = &tfd.base;
    let element = check_nijenhuis_element(d, x)?;
    if !element.holds {
        return Err(Error::NotNijenhuisElement(describe(&element)));
    }
    let dk = dk_element(d, x);
    if dk != -&tfd.linear_term() {
        return Err(Error::Precondition("∂_K(x) differs from −K_1".into()));
    }
    let y = -x;
    let out = transform_by_element(tfd, &y);
    debug_assert!(out.linear_term().is_zero());
    let (n, m, order) = (d.dim_g(), d.dim_v(), tfd.order());
    Ok((out, EquivalenceDatum::with_zero_terms(y, order, n, m)))
}

/// `φ_t K_t ψ_t⁻¹` truncated at the order of `tfd`, with `φ_t = Id + tL_y`
/// and `ψ_t = Id + tP_y`. No hypotheses on `y` are checked; when `y` is a
/// Nijenhuis element the result is a deformation equivalent to `tfd` with
/// linear term `K_1 − ∂_K(y)`.
pub fn transform_by_element(tfd: &TruncatedFormalDeformation, y: &Vector) -> TruncatedFormalDeformation {
    let d = &tfd.base;
    let order = tfd.order();
    let (n, m) = (d.dim_g(), d.dim_v());
    let phi = [Matrix::identity(n), d.algebra().left_mult(y)];
    // ψ_t⁻¹ = Σ_j (−tP_y)^j, exact up to t^order.
    let minus_p = -&p_matrix(d, y);
    let mut psi_inv = vec![Matrix::identity(m)];
    for j in 1..=order {
        psi_inv.push(&psi_inv[j - 1] * &minus_p);
    }
    let mut terms = Vec::with_capacity(order);
    for ord in 1..=order {
        let mut c = Matrix::zeros(n, m);
        for (i, f) in phi.iter().enumerate().take(ord + 1) {
            for j in 0..=ord - i {
                let kj = tfd.term(j);
                if kj.is_zero() {
                    continue;
                }
                c += &(&(f * &kj) * &psi_inv[ord - i - j]);
            }
        }
        terms.push(c);
    }
    TruncatedFormalDeformation { base: d.clone(), terms }
}

/// Sufficient condition for rigidity restricted to a finite candidate list:
/// every 1-cocycle of `K` is a combination of `∂_K(x)` over the candidates
/// that are Nijenhuis elements. The report compares `dim Z^1_K` with the rank
/// of those coboundaries.
pub fn check_rigidity_hypothesis(d: &TwistedRbData, candidates: &[Vector]) -> Result<CheckReport> {
    let r = check_twisted_rb(d);
    if !r.holds {
        return Err(Error::NotTwistedRotaBaxter(describe(&r)));
    }
    let z1 = k_cohomology_dims(d, 1, &Default::default())?.z;
    let mut columns = Vec::new();
    for x in candidates {
        if check_nijenhuis_element(d, x)?.holds {
            columns.push(Cochain::from_linear_map(&dk_element(d, x)).flatten());
        }
    }
    let rank = if columns.is_empty() { 0 } else { Matrix::from_columns(d.dim_g() * d.dim_v(), &columns).rank() };
    let count = |k: usize| Vector::new(vec![Rational::from_integer(k.into())]);
    Ok(if rank == z1 {
        CheckReport::pass()
    } else {
        CheckReport::fail(Failure {
            condition: "rigidity-hypothesis".into(),
            indices: Vec::new(),
            order: None,
            lhs: count(z1),
            rhs: count(rank),
        })
    })
}

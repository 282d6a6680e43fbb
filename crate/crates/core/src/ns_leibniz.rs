//! NS-Leibniz algebras `(A, ▷, ◁, ⋄)` with `x ∗ y = x ▷ y + x ◁ y + x ⋄ y`:
//!
//! ```text
//! (A1) x ▷ (y ∗ z) = (x ▷ y) ▷ z + y ◁ (x ▷ z)
//! (A2) x ◁ (y ▷ z) = (x ◁ y) ▷ z + y ▷ (x ∗ z)
//! (A3) x ◁ (y ◁ z) = (x ∗ y) ◁ z + y ◁ (x ◁ z)
//! (A4) x ◁ (y ⋄ z) + x ⋄ (y ∗ z) = (x ⋄ y) ▷ z + (x ∗ y) ⋄ z + y ◁ (x ⋄ z) + y ⋄ (x ∗ z)
//! ```

use crate::cochain::Cochain;
use crate::error::{Error, Result};
use crate::leibniz::{describe, LeibnizAlgebra, LinearMap, Representation};
use crate::linalg::{Matrix, Vector};
use crate::report::{first_failure, CheckReport, Witness};
use crate::twisted_rb::TwistedRbData;

/// Three bilinear products on one space. Each is stored as a
/// [`LeibnizAlgebra`] used purely as a table of structure constants; none of
/// them needs to satisfy the Leibniz identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NsLeibnizAlgebra {
    tri: LeibnizAlgebra,
    tli: LeibnizAlgebra,
    dia: LeibnizAlgebra,
}

impl NsLeibnizAlgebra {
    pub fn new(tri: LeibnizAlgebra, tli: LeibnizAlgebra, dia: LeibnizAlgebra) -> Result<Self> {
        if tri.dim() != tli.dim() || tri.dim() != dia.dim() {
            return Err(Error::shape(format!(
                "products of dimensions {}, {}, {} on one space",
                tri.dim(),
                tli.dim(),
                dia.dim()
            )));
        }
        Ok(NsLeibnizAlgebra { tri, tli, dia })
    }

    pub fn zero(dim: usize) -> Self {
        NsLeibnizAlgebra { tri: LeibnizAlgebra::zero(dim), tli: LeibnizAlgebra::zero(dim), dia: LeibnizAlgebra::zero(dim) }
    }

    pub fn dim(&self) -> usize {
        self.tri.dim()
    }

    /// Table of `▷`.
    pub fn tri(&self) -> &LeibnizAlgebra {
        &self.tri
    }

    /// Table of `◁`.
    pub fn tli(&self) -> &LeibnizAlgebra {
        &self.tli
    }

    /// Table of `⋄`.
    pub fn dia(&self) -> &LeibnizAlgebra {
        &self.dia
    }

    pub fn star(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = self.tri.bracket(x, y);
        out += &self.tli.bracket(x, y);
        out += &self.dia.bracket(x, y);
        out
    }

    pub fn is_leibniz_dendriform(&self) -> bool {
        self.dia.is_abelian()
    }
}

/// (A1)–(A4) on all basis triples, reported as `A1` … `A4`.
pub fn check_ns_axioms(a: &NsLeibnizAlgebra) -> CheckReport {
    let n = a.dim();
    let (tri, tli, dia) = (&a.tri, &a.tli, &a.dia);
    let axiom = |name: &'static str| {
        let w = Witness::new(name);
        first_failure(&[n, n, n], move |t| {
            let (x, y, z) = (Vector::basis(n, t[0]), Vector::basis(n, t[1]), Vector::basis(n, t[2]));
            let (lhs, rhs) = match name {
                "A1" => (
                    tri.bracket(&x, &a.star(&y, &z)),
                    &tri.bracket(&tri.bracket(&x, &y), &z) + &tli.bracket(&y, &tri.bracket(&x, &z)),
                ),
                "A2" => (
                    tli.bracket(&x, &tri.bracket(&y, &z)),
                    &tri.bracket(&tli.bracket(&x, &y), &z) + &tri.bracket(&y, &a.star(&x, &z)),
                ),
                "A3" => (
                    tli.bracket(&x, &tli.bracket(&y, &z)),
                    &tli.bracket(&a.star(&x, &y), &z) + &tli.bracket(&y, &tli.bracket(&x, &z)),
                ),
                _ => {
                    let lhs = &tli.bracket(&x, &dia.bracket(&y, &z)) + &dia.bracket(&x, &a.star(&y, &z));
                    let mut rhs = tri.bracket(&dia.bracket(&x, &y), &z);
                    rhs += &dia.bracket(&a.star(&x, &y), &z);
                    rhs += &tli.bracket(&y, &dia.bracket(&x, &z));
                    rhs += &dia.bracket(&y, &a.star(&x, &z));
                    (lhs, rhs)
                }
            };
            w.compare(t, lhs, rhs)
        })
    };
    let report = axiom("A1").and_then(|| axiom("A2")).and_then(|| axiom("A3")).and_then(|| axiom("A4"));
    if a.is_leibniz_dendriform() {
        report.with_note("leibniz-dendriform")
    } else {
        report
    }
}

fn require_ns(a: &NsLeibnizAlgebra) -> Result<()> {
    let r = check_ns_axioms(a);
    if r.holds {
        Ok(())
    } else {
        Err(Error::NotNsLeibniz(describe(&r)))
    }
}

/// `[x, y]_∗ = x ∗ y`, without checking the axioms.
pub fn subadjacent_unchecked(a: &NsLeibnizAlgebra) -> LeibnizAlgebra {
    let n = a.dim();
    LeibnizAlgebra::from_fn(n, |i, j| a.star(&Vector::basis(n, i), &Vector::basis(n, j)))
}

/// The subadjacent Leibniz algebra `(A, ∗)`.
pub fn subadjacent(a: &NsLeibnizAlgebra) -> Result<LeibnizAlgebra> {
    require_ns(a)?;
    Ok(subadjacent_unchecked(a))
}

/// `x ▷ y = [x, Ny]`, `x ◁ y = [Nx, y]`, `x ⋄ y = −N[x, y]`.
pub fn ns_from_nijenhuis(g: &LeibnizAlgebra, n: &LinearMap) -> Result<NsLeibnizAlgebra> {
    let report = crate::leibniz::check_nijenhuis(g, n)?;
    if !report.holds {
        return Err(Error::NotNijenhuis(describe(&report)));
    }
    let d = g.dim();
    let e = |i: usize| Vector::basis(d, i);
    Ok(NsLeibnizAlgebra {
        tri: LeibnizAlgebra::from_fn(d, |i, j| g.bracket(&e(i), &n.column(j))),
        tli: LeibnizAlgebra::from_fn(d, |i, j| g.bracket(&n.column(i), &e(j))),
        dia: LeibnizAlgebra::from_fn(d, |i, j| -n.apply(&g.bracket_basis(i, j))),
    })
}

/// `(A, ∗)` with the representation `ρ^L(x)y = x ◁ y`, `ρ^R(x)y = y ▷ x`,
/// the cocycle `H(x, y) = x ⋄ y` and `K = Id`.
pub fn canonical_trb(a: &NsLeibnizAlgebra) -> Result<TwistedRbData> {
    require_ns(a)?;
    let n = a.dim();
    let rho_l = (0..n).map(|i| a.tli.left_mult(&Vector::basis(n, i))).collect();
    let rho_r = (0..n).map(|i| a.tri.right_mult(&Vector::basis(n, i))).collect();
    let rep = Representation::new(subadjacent_unchecked(a), n, rho_l, rho_r)?;
    let h = Cochain::from_fn(2, n, n, |t| a.dia.bracket_basis(t[0], t[1]));
    TwistedRbData::new(rep, h, Matrix::identity(n))
}

/// `u ▷ v = ρ^R(Kv)u`, `u ◁ v = ρ^L(Ku)v`, `u ⋄ v = H(Ku, Kv)` on `V`.
pub fn ns_from_twisted_rb(d: &TwistedRbData) -> NsLeibnizAlgebra {
    let m = d.dim_v();
    let e = |i: usize| Vector::basis(m, i);
    let k = d.k();
    NsLeibnizAlgebra {
        tri: LeibnizAlgebra::from_fn(m, |i, j| d.rep().act_right(&k.column(j), &e(i))),
        tli: LeibnizAlgebra::from_fn(m, |i, j| d.rep().act_left(&k.column(i), &e(j))),
        dia: LeibnizAlgebra::from_fn(m, |i, j| d.h(&k.column(i), &k.column(j))),
    }
}

/// For invertible `K`: `x ▷ y = K(ρ^R(y)K⁻¹x)`, `x ◁ y = K(ρ^L(x)K⁻¹y)`,
/// `x ⋄ y = KH(x, y)` on `g`; `None` when `K` is singular.
pub fn compatible_ns_from_invertible(d: &TwistedRbData) -> Result<Option<NsLeibnizAlgebra>> {
    if d.dim_g() != d.dim_v() {
        return Err(Error::shape(format!(
            "K must be square to be invertible, got dim_g {} and dim_v {}",
            d.dim_g(),
            d.dim_v()
        )));
    }
    let k = d.k();
    let Some(k_inv) = k.invert()? else {
        return Ok(None);
    };
    let n = d.dim_g();
    let e = |i: usize| Vector::basis(n, i);
    Ok(Some(NsLeibnizAlgebra {
        tri: LeibnizAlgebra::from_fn(n, |i, j| k.apply(&d.rep().act_right(&e(j), &k_inv.column(i)))),
        tli: LeibnizAlgebra::from_fn(n, |i, j| k.apply(&d.rep().act_left(&e(i), &k_inv.column(j)))),
        dia: LeibnizAlgebra::from_fn(n, |i, j| k.apply(&d.cocycle().value(&[i, j]))),
    }))
}

/// Mixed terms of the Leibniz identity for `[·,·]₁ + [·,·]₂`:
/// `[x,[y,z]₂]₁ + [x,[y,z]₁]₂ = [[x,y]₂,z]₁ + [[x,y]₁,z]₂ + [y,[x,z]₂]₁ + [y,[x,z]₁]₂`.
/// For Leibniz brackets this holds iff their sum is again Leibniz.
pub fn check_compatible_brackets(one: &LeibnizAlgebra, two: &LeibnizAlgebra) -> Result<CheckReport> {
    if one.dim() != two.dim() {
        return Err(Error::shape("brackets on spaces of different dimension"));
    }
    let n = one.dim();
    let w = Witness::new("compatibility");
    Ok(first_failure(&[n, n, n], |t| {
        let (x, y, z) = (Vector::basis(n, t[0]), Vector::basis(n, t[1]), Vector::basis(n, t[2]));
        let lhs = &one.bracket(&x, &two.bracket(&y, &z)) + &two.bracket(&x, &one.bracket(&y, &z));
        let mut rhs = one.bracket(&two.bracket(&x, &y), &z);
        rhs += &two.bracket(&one.bracket(&x, &y), &z);
        rhs += &one.bracket(&y, &two.bracket(&x, &z));
        rhs += &two.bracket(&y, &one.bracket(&x, &z));
        w.compare(t, lhs, rhs)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::is_cocycle;
    use crate::leibniz::{check_leibniz, check_representation, deformed_bracket, example_nilpotent_2d, regular_representation};
    use crate::linalg::int;
    use crate::twisted_rb::{check_twisted_rb, from_invertible_cochain, from_nijenhuis, induced_bracket};

    fn nil2() -> LeibnizAlgebra {
        example_nilpotent_2d()
    }

    #[test]
    fn zero_operations() {
        let a = NsLeibnizAlgebra::zero(3);
        let r = check_ns_axioms(&a);
        assert!(r.holds);
        assert_eq!(r.notes, vec!["leibniz-dendriform".to_string()]);
        assert!(subadjacent(&a).unwrap().is_abelian());
        let d = canonical_trb(&a).unwrap();
        assert!(check_twisted_rb(&d).holds && d.cocycle().is_zero());
    }

    #[test]
    fn abelian_nijenhuis_gives_zero_operations() {
        let a = ns_from_nijenhuis(&LeibnizAlgebra::zero(2), &Matrix::from_ints(&[&[1, 2], &[3, 4]])).unwrap();
        assert_eq!(a, NsLeibnizAlgebra::zero(2));
        assert!(check_ns_axioms(&a).holds);
    }

    #[test]
    fn scalar_nijenhuis() {
        let g = nil2();
        let a = ns_from_nijenhuis(&g, &Matrix::scalar(2, &int(2))).unwrap();
        assert!(check_ns_axioms(&a).holds);
        let twice = g.scaled(&int(2));
        assert_eq!(a.tri(), &twice);
        assert_eq!(a.tli(), &twice);
        assert_eq!(a.dia(), &g.scaled(&int(-2)));
        assert_eq!(subadjacent(&a).unwrap(), twice);
        assert!(ns_from_nijenhuis(&g, &Matrix::zeros(2, 2)).unwrap() == NsLeibnizAlgebra::zero(2));
    }

    #[test]
    fn diagonal_nijenhuis() {
        let g = nil2();
        let n = Matrix::from_ints(&[&[1, 0], &[0, 2]]);
        // [Ne0, Ne0] = e1 against N([Ne0,e0] + [e0,Ne0] − N e1) = N(2e1 − 2e1) = 0.
        assert!(!crate::leibniz::check_nijenhuis(&g, &n).unwrap().holds);
        assert!(matches!(ns_from_nijenhuis(&g, &n), Err(Error::NotNijenhuis(_))));
        let n = Matrix::from_ints(&[&[1, 0], &[0, 1]]);
        assert!(check_ns_axioms(&ns_from_nijenhuis(&g, &n).unwrap()).holds);
    }

    #[test]
    fn subadjacent_matches_deformed_and_induced_brackets() {
        let g = LeibnizAlgebra::from_entries(3, &[(0, 0, 1, 1), (0, 1, 2, 1)]);
        let n = Matrix::scalar(3, &int(-3));
        let a = ns_from_nijenhuis(&g, &n).unwrap();
        assert_eq!(subadjacent(&a).unwrap(), deformed_bracket(&g, &n).unwrap());
        assert!(check_compatible_brackets(&g, &deformed_bracket(&g, &n).unwrap()).unwrap().holds);

        let d = from_nijenhuis(&g, &n).unwrap();
        let b = ns_from_twisted_rb(&d);
        assert_eq!(b, a);
        assert_eq!(subadjacent(&b).unwrap(), induced_bracket(&d).unwrap());
    }

    #[test]
    fn canonical_round_trip() {
        let a = ns_from_nijenhuis(&nil2(), &Matrix::scalar(2, &int(2))).unwrap();
        let d = canonical_trb(&a).unwrap();
        assert!(check_representation(d.rep()).holds);
        assert!(is_cocycle(d.rep(), d.cocycle()).unwrap().holds);
        assert!(check_twisted_rb(&d).holds);
        assert_eq!(ns_from_twisted_rb(&d), a);
        assert_eq!(compatible_ns_from_invertible(&d).unwrap().unwrap(), a);
    }

    #[test]
    fn compatible_structure_reproduces_the_bracket() {
        let r = regular_representation(&nil2());
        let d = from_invertible_cochain(&r, &Cochain::from_linear_map(&Matrix::identity(2))).unwrap();
        let a = compatible_ns_from_invertible(&d).unwrap().unwrap();
        assert!(check_ns_axioms(&a).holds);
        assert_eq!(subadjacent(&a).unwrap(), nil2());

        let singular = d.with_k(Matrix::zeros(2, 2)).unwrap();
        assert!(compatible_ns_from_invertible(&singular).unwrap().is_none());
    }

    #[test]
    fn a4_fails_for_a_non_cocycle_diamond() {
        // ▷ = ◁ = 0 and x ⋄ y = D(x, y) with D the non-Leibniz product [e,e] = e:
        // A1–A3 vanish, A4 reads e ⋄ (e ∗ e) = (e ∗ e) ⋄ e + e ⋄ (e ∗ e).
        let dia = LeibnizAlgebra::from_entries(1, &[(0, 0, 0, 1)]);
        let a = NsLeibnizAlgebra::new(LeibnizAlgebra::zero(1), LeibnizAlgebra::zero(1), dia).unwrap();
        let r = check_ns_axioms(&a);
        assert_eq!(r.condition(), Some("A4"));
        let f = r.failure.unwrap();
        assert_eq!((f.lhs, f.rhs), (Vector::from_ints(&[1]), Vector::from_ints(&[2])));
        assert!(!check_leibniz(&subadjacent_unchecked(&a)).holds);
        assert!(subadjacent(&a).is_err());
    }
}

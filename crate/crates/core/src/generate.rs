//! Seeded random instances.
//!
//! Random structure constants almost never satisfy the Leibniz identity, so
//! every generator composes constructions that are known to work (a small
//! catalog of algebras, direct sums, changes of basis, regular-type
//! representations, kernels of coboundary matrices, the invertible-cochain
//! and Nijenhuis constructions) and then gates the result through the
//! matching checker. The PRNG is ChaCha8 seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`, so instances are reproducible across
//! platforms.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cochain::Cochain;
use crate::cohomology::{self, Degree0Convention};
use crate::deformation::{check_linear_deformation, check_nijenhuis_element, LinearDeformation};
use crate::error::{Error, Result};
use crate::leibniz::{
    check_leibniz, check_nijenhuis, check_representation, describe, regular_representation, LeibnizAlgebra, LinearMap,
    Representation,
};
use crate::linalg::{int, ratio, Matrix, Rational, Vector};
use crate::twisted_rb::{check_twisted_rb, from_invertible_cochain, from_nijenhuis, shift_by_cochain, TwistedRbData};

pub type Rand = ChaCha8Rng;

/// How many candidates a rejection loop may try before giving up.
const BUDGET: usize = 64;

pub fn rng(seed: u64) -> Rand {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Sizes and coefficient bounds for generated instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub dim_g: usize,
    pub dim_v: usize,
    pub max_numerator: i64,
    pub max_denominator: i64,
}

impl Default for Profile {
    fn default() -> Self {
        Profile { dim_g: 2, dim_v: 2, max_numerator: 3, max_denominator: 2 }
    }
}

impl Profile {
    pub fn new(dim_g: usize, dim_v: usize) -> Self {
        Profile { dim_g, dim_v, ..Profile::default() }
    }
}

/// `p/q` with `|p| ≤ max_numerator`, `1 ≤ q ≤ max_denominator`.
pub fn gen_rational(rng: &mut Rand, profile: &Profile) -> Rational {
    let p = rng.gen_range(-profile.max_numerator..=profile.max_numerator);
    let q = rng.gen_range(1..=profile.max_denominator.max(1));
    ratio(p, q)
}

pub fn gen_nonzero_rational(rng: &mut Rand, profile: &Profile) -> Rational {
    loop {
        let q = gen_rational(rng, profile);
        if !q.is_zero() || profile.max_numerator == 0 {
            return if q.is_zero() { int(1) } else { q };
        }
    }
}

pub fn gen_matrix(rng: &mut Rand, rows: usize, cols: usize, profile: &Profile) -> Matrix {
    let data = (0..rows * cols).map(|_| gen_rational(rng, profile)).collect();
    Matrix::from_row_major(rows, cols, data).expect("sizes agree")
}

/// An invertible matrix `LU` with unitriangular integer factors (entries in
/// `{−1, 0, 1}`), returned with its inverse.
pub fn gen_invertible(rng: &mut Rand, n: usize) -> (Matrix, Matrix) {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower[(i, j)] = int(rng.gen_range(-1..=1));
            upper[(j, i)] = int(rng.gen_range(-1..=1));
        }
    }
    let p = &lower * &upper;
    let inv = p.invert().expect("square").expect("unitriangular product is invertible");
    (p, inv)
}

pub fn gen_cochain(rng: &mut Rand, degree: usize, dim_in: usize, dim_out: usize, profile: &Profile) -> Cochain {
    let len = dim_in.pow(degree as u32) * dim_out;
    let v = Vector::new((0..len).map(|_| gen_rational(rng, profile)).collect());
    Cochain::from_flat(degree, dim_in, dim_out, v).expect("length matches")
}

/// Small Leibniz algebras used as building blocks.
pub fn catalog(dim: usize) -> Vec<LeibnizAlgebra> {
    match dim {
        1 => vec![LeibnizAlgebra::zero(1)],
        2 => vec![
            LeibnizAlgebra::zero(2),
            LeibnizAlgebra::from_entries(2, &[(0, 0, 1, 1)]),
            LeibnizAlgebra::from_entries(2, &[(0, 1, 1, 1), (1, 0, 1, -1)]),
            LeibnizAlgebra::from_entries(2, &[(0, 1, 1, 1)]),
        ],
        3 => vec![
            LeibnizAlgebra::from_entries(3, &[(0, 1, 2, 1), (1, 0, 2, -1)]),
            LeibnizAlgebra::from_entries(3, &[(0, 0, 1, 1), (0, 1, 2, 1)]),
            LeibnizAlgebra::from_entries(
                3,
                &[(0, 1, 1, 2), (1, 0, 1, -2), (0, 2, 2, -2), (2, 0, 2, 2), (1, 2, 0, 1), (2, 1, 0, -1)],
            ),
        ],
        _ => Vec::new(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraStrategy {
    Abelian,
    /// Direct sums of catalog algebras, rescaled, in a random basis.
    Catalog,
}

pub fn gen_leibniz(seed: u64, profile: &Profile) -> Result<LeibnizAlgebra> {
    gen_leibniz_with(&mut rng(seed), profile, AlgebraStrategy::Catalog)
}

pub fn gen_leibniz_with(rng: &mut Rand, profile: &Profile, strategy: AlgebraStrategy) -> Result<LeibnizAlgebra> {
    let n = profile.dim_g;
    if strategy == AlgebraStrategy::Abelian {
        return Ok(LeibnizAlgebra::zero(n));
    }
    let mut g = LeibnizAlgebra::zero(0);
    let mut left = n;
    while left > 0 {
        let size = rng.gen_range(1..=left.min(3));
        let options = catalog(size);
        let mut piece = options.choose(rng).expect("catalog covers sizes 1 to 3").clone();
        if rng.gen_bool(0.5) {
            piece = piece.scaled(&gen_nonzero_rational(rng, profile));
        }
        g = g.direct_sum(&piece);
        left -= size;
    }
    let (p, p_inv) = gen_invertible(rng, n);
    let g = g.transported(&p, &p_inv);
    let report = check_leibniz(&g);
    if !report.holds {
        return Err(Error::Budget(format!("generated bracket fails: {}", describe(&report))));
    }
    Ok(g)
}

/// One-dimensional representations `(λ, 0)` and `(λ, −λ)` need `λ` to vanish
/// on `[g, g]`; returns such a `λ` (possibly zero).
fn gen_character(rng: &mut Rand, g: &LeibnizAlgebra, profile: &Profile) -> Vector {
    let n = g.dim();
    let brackets: Vec<Vector> = crate::index_product(&[n, n]).map(|t| g.bracket_basis(t[0], t[1])).collect();
    if n == 0 {
        return Vector::zeros(0);
    }
    // Rows are the brackets; the kernel consists of functionals killing them.
    let rows = Matrix::from_columns(n, &brackets).transpose();
    let basis = rows.kernel_basis();
    if basis.is_empty() {
        return Vector::zeros(n);
    }
    let coeffs: Vec<Rational> = basis.iter().map(|_| gen_rational(rng, profile)).collect();
    cohomology::combine(&basis, &coeffs)
}

fn block_diagonal(blocks: &[Matrix]) -> Matrix {
    let size: usize = blocks.iter().map(Matrix::rows).sum();
    let mut m = Matrix::zeros(size, size);
    let mut o = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                m[(o + i, o + j)] = b[(i, j)].clone();
            }
        }
        o += b.rows();
    }
    m
}

/// A representation of `g` on a `dim_v`-dimensional space: a block sum of
/// the regular representation, `(L, −L)`, `(L, 0)` and one-dimensional
/// character representations, in a random basis.
pub fn gen_representation(rng: &mut Rand, g: &LeibnizAlgebra, dim_v: usize, profile: &Profile) -> Result<Representation> {
    let n = g.dim();
    let reg = regular_representation(g);
    let mut lefts: Vec<Vec<Matrix>> = vec![Vec::new(); n];
    let mut rights: Vec<Vec<Matrix>> = vec![Vec::new(); n];
    let mut left = dim_v;
    while left > 0 {
        let big = n > 0 && left >= n && rng.gen_bool(0.6);
        if big {
            let kind = rng.gen_range(0..3);
            for i in 0..n {
                let l = reg.rho_l()[i].clone();
                let r = match kind {
                    0 => reg.rho_r()[i].clone(),
                    1 => -&l,
                    _ => Matrix::zeros(n, n),
                };
                lefts[i].push(l);
                rights[i].push(r);
            }
            left -= n;
        } else {
            let lambda = gen_character(rng, g, profile);
            let antisymmetric = rng.gen_bool(0.5);
            for i in 0..n {
                let l = Matrix::from_row_major(1, 1, vec![lambda[i].clone()]).expect("1x1");
                let r = if antisymmetric { -&l } else { Matrix::zeros(1, 1) };
                lefts[i].push(l);
                rights[i].push(r);
            }
            left -= 1;
        }
    }
    let rho_l = lefts.iter().map(|b| block_diagonal(b)).collect();
    let rho_r = rights.iter().map(|b| block_diagonal(b)).collect();
    let rep = Representation::new(g.clone(), dim_v, rho_l, rho_r)?;
    let (p, p_inv) = gen_invertible(rng, dim_v);
    let rep = rep.conjugated(&p, &p_inv);
    let report = check_representation(&rep);
    if !report.holds {
        return Err(Error::Budget(format!("generated representation fails: {}", describe(&report))));
    }
    Ok(rep)
}

/// A random element of `ker ∂` in the given degree: a combination of a
/// kernel basis of the coboundary matrix with small coefficients.
pub fn gen_cocycle(rng: &mut Rand, rep: &Representation, degree: usize, profile: &Profile) -> Cochain {
    let basis = cohomology::cocycle_basis(rep, degree, Degree0Convention::Literal);
    let coeffs: Vec<Rational> = basis.iter().map(|_| gen_rational(rng, profile)).collect();
    let flat = if basis.is_empty() {
        Vector::zeros(rep.dim_g().pow(degree as u32) * rep.dim_v())
    } else {
        cohomology::combine(&basis, &coeffs)
    };
    Cochain::from_flat(degree, rep.dim_g(), rep.dim_v(), flat).expect("kernel vectors have cochain length")
}

/// A Nijenhuis operator on `g`: `λ Id + μ E` for a random sparse `E`, gated
/// by [`check_nijenhuis`], falling back to `λ Id`.
pub fn gen_nijenhuis(rng: &mut Rand, g: &LeibnizAlgebra, profile: &Profile) -> LinearMap {
    let n = g.dim();
    let lambda = gen_rational(rng, profile);
    for _ in 0..BUDGET {
        let mut cand = Matrix::scalar(n, &lambda);
        let entries = rng.gen_range(1..=2);
        for _ in 0..entries {
            if n == 0 {
                break;
            }
            let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
            cand[(i, j)] += gen_nonzero_rational(rng, profile);
        }
        if check_nijenhuis(g, &cand).expect("square").holds {
            return cand;
        }
    }
    Matrix::scalar(n, &lambda)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TrbStrategy {
    /// `K = 0` with a random 2-cocycle `H`.
    ZeroOperator,
    /// `K = h⁻¹`, `H = −∂h`; forces `dim_v = dim_g`.
    InvertibleCochain,
    /// The identity `g → g_N` for a random Nijenhuis `N`, in a random basis of
    /// `V`; forces `dim_v = dim_g`.
    Nijenhuis,
    /// One of the other strategies followed by a random admissible shift
    /// `K(Id − hK)⁻¹`, `H + ∂h`.
    Shifted,
    /// A strategy chosen by the seed.
    Any,
}

pub fn gen_twisted_rb(seed: u64, profile: &Profile, strategy: TrbStrategy) -> Result<TwistedRbData> {
    gen_twisted_rb_with(&mut rng(seed), profile, strategy)
}

pub fn gen_twisted_rb_with(rng: &mut Rand, profile: &Profile, strategy: TrbStrategy) -> Result<TwistedRbData> {
    let strategy = match strategy {
        TrbStrategy::Any => *[
            TrbStrategy::ZeroOperator,
            TrbStrategy::InvertibleCochain,
            TrbStrategy::Nijenhuis,
            TrbStrategy::Shifted,
        ]
        .choose(rng)
        .expect("nonempty"),
        s => s,
    };
    let g = gen_leibniz_with(rng, profile, AlgebraStrategy::Catalog)?;
    let n = g.dim();
    let d = match strategy {
        TrbStrategy::ZeroOperator => {
            let rep = gen_representation(rng, &g, profile.dim_v, profile)?;
            let h = gen_cocycle(rng, &rep, 2, profile);
            TwistedRbData::new(rep, h, Matrix::zeros(n, profile.dim_v))?
        }
        TrbStrategy::InvertibleCochain => {
            let rep = gen_representation(rng, &g, n, profile)?;
            let (h, _) = gen_invertible(rng, n);
            let scale = gen_nonzero_rational(rng, profile);
            from_invertible_cochain(&rep, &Cochain::from_linear_map(&h.scaled(&scale)))?
        }
        TrbStrategy::Nijenhuis => {
            let nij = gen_nijenhuis(rng, &g, profile);
            let d = from_nijenhuis(&g, &nij)?;
            let (p, p_inv) = gen_invertible(rng, n);
            d.transport_v(&p, &p_inv)?
        }
        TrbStrategy::Shifted | TrbStrategy::Any => {
            let inner = *[TrbStrategy::ZeroOperator, TrbStrategy::InvertibleCochain, TrbStrategy::Nijenhuis]
                .choose(rng)
                .expect("nonempty");
            let base = gen_twisted_rb_with(rng, profile, inner)?;
            let h = gen_shift(rng, &base, profile)?;
            shift_by_cochain(&base, &h)?.expect("gen_shift returns admissible cochains")
        }
    };
    let report = check_twisted_rb(&d);
    if !report.holds {
        return Err(Error::Budget(format!("generated operator fails: {}", describe(&report))));
    }
    Ok(d)
}

/// A cochain `h: g → V` with `Id − hK` invertible: random `h` scaled by
/// `1, 1/2, 1/3, …` until admissible (at most `dim_v` scalings are singular).
pub fn gen_shift(rng: &mut Rand, d: &TwistedRbData, profile: &Profile) -> Result<Cochain> {
    let h = gen_matrix(rng, d.dim_v(), d.dim_g(), profile);
    for s in 1..=(d.dim_v() as i64 + 1) {
        let hs = h.scaled(&ratio(1, s));
        let m = &Matrix::identity(d.dim_v()) - &(&hs * d.k());
        if m.invert()?.is_some() {
            return Ok(Cochain::from_linear_map(&hs));
        }
    }
    Err(Error::Budget("no admissible scaling of the shift".into()))
}

/// A 1-cocycle `B` with `Id + BK` invertible, found the same way.
pub fn gen_admissible_cocycle(rng: &mut Rand, d: &TwistedRbData, profile: &Profile) -> Result<Cochain> {
    let b = gen_cocycle(rng, d.rep(), 1, profile).to_linear_map()?;
    for s in 1..=(d.dim_v() as i64 + 1) {
        let bs = b.scaled(&ratio(1, s));
        let m = &Matrix::identity(d.dim_v()) + &(&bs * d.k());
        if m.invert()?.is_some() {
            return Ok(Cochain::from_linear_map(&bs));
        }
    }
    Err(Error::Budget("no admissible scaling of the cocycle".into()))
}

/// `d` with `K` perturbed by single-entry matrices until the operator
/// identity fails; `None` when every perturbation keeps it (for instance
/// when the bracket and all actions vanish).
pub fn gen_negative(rng: &mut Rand, d: &TwistedRbData, profile: &Profile) -> Result<Option<TwistedRbData>> {
    let (n, m) = (d.dim_g(), d.dim_v());
    if n == 0 || m == 0 {
        return Ok(None);
    }
    for _ in 0..BUDGET {
        let mut k = d.k().clone();
        k[(rng.gen_range(0..n), rng.gen_range(0..m))] += gen_nonzero_rational(rng, profile);
        let cand = d.with_k(k)?;
        if !check_twisted_rb(&cand).holds {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

/// A nonzero Nijenhuis element with coordinates in `{−1, 0, 1}` if one
/// exists, tried in random order; the zero vector otherwise.
pub fn gen_nijenhuis_element(rng: &mut Rand, d: &TwistedRbData) -> Result<Vector> {
    let n = d.dim_g();
    let mut candidates: Vec<Vector> = crate::index_product(&vec![3; n])
        .map(|t| Vector::new(t.iter().map(|&c| int(c as i64 - 1)).collect()))
        .filter(|x| !x.is_zero())
        .collect();
    candidates.shuffle(rng);
    for x in candidates {
        if check_nijenhuis_element(d, &x)?.holds {
            return Ok(x);
        }
    }
    Ok(Vector::zeros(n))
}

/// A linear deformation `K + tK_1` chosen among `cK`, single-entry maps and
/// random combinations of 1-cocycles of `K`, gated by
/// [`check_linear_deformation`]; falls back to `K_1 = 0`.
pub fn gen_linear_deformation(rng: &mut Rand, d: &TwistedRbData, profile: &Profile) -> Result<LinearDeformation> {
    let (n, m) = (d.dim_g(), d.dim_v());
    let cocycles = crate::twisted_rb::induced_representation(d)
        .map(|r| cohomology::cocycle_basis(&r, 1, Degree0Convention::Literal))?;
    for _ in 0..BUDGET {
        let k1 = match rng.gen_range(0..3) {
            0 => d.k().scaled(&gen_rational(rng, profile)),
            1 if n > 0 && m > 0 => {
                let mut e = Matrix::zeros(n, m);
                e[(rng.gen_range(0..n), rng.gen_range(0..m))] = gen_nonzero_rational(rng, profile);
                e
            }
            _ => {
                let coeffs: Vec<Rational> = cocycles.iter().map(|_| gen_rational(rng, profile)).collect();
                let flat = if cocycles.is_empty() { Vector::zeros(n * m) } else { cohomology::combine(&cocycles, &coeffs) };
                Cochain::from_flat(1, m, n, flat)?.to_linear_map()?
            }
        };
        if k1.is_zero() {
            continue;
        }
        let ld = LinearDeformation::new(d.clone(), k1)?;
        if check_linear_deformation(&ld)?.holds {
            return Ok(ld);
        }
    }
    LinearDeformation::new(d.clone(), Matrix::zeros(n, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::is_cocycle;

    #[test]
    fn catalog_is_leibniz() {
        for dim in 1..=3 {
            for g in catalog(dim) {
                assert!(check_leibniz(&g).holds, "{g:?}");
            }
        }
    }

    #[test]
    fn dimension_zero_and_abelian() {
        let g = gen_leibniz(7, &Profile::new(0, 0)).unwrap();
        assert_eq!(g.dim(), 0);
        let a = gen_leibniz_with(&mut rng(3), &Profile::new(3, 1), AlgebraStrategy::Abelian).unwrap();
        assert!(a.is_abelian() && check_leibniz(&a).holds);
    }

    #[test]
    fn same_seed_same_instance() {
        let p = Profile::new(3, 2);
        assert_eq!(gen_leibniz(42, &p).unwrap(), gen_leibniz(42, &p).unwrap());
        assert_eq!(
            gen_twisted_rb(42, &p, TrbStrategy::Any).unwrap(),
            gen_twisted_rb(42, &p, TrbStrategy::Any).unwrap()
        );
    }

    #[test]
    fn generated_instances_pass_their_checks() {
        for seed in 0..12 {
            let p = Profile::new(1 + seed as usize % 3, 1 + (seed as usize / 3) % 3);
            let mut r = rng(seed);
            let g = gen_leibniz_with(&mut r, &p, AlgebraStrategy::Catalog).unwrap();
            assert!(check_leibniz(&g).holds);
            let rep = gen_representation(&mut r, &g, p.dim_v, &p).unwrap();
            assert!(check_representation(&rep).holds);
            for degree in 0..3 {
                let c = gen_cocycle(&mut r, &rep, degree, &p);
                assert!(is_cocycle(&rep, &c).unwrap().holds);
            }
            for s in [TrbStrategy::ZeroOperator, TrbStrategy::InvertibleCochain, TrbStrategy::Nijenhuis, TrbStrategy::Shifted] {
                let d = gen_twisted_rb(seed, &p, s).unwrap();
                assert!(crate::twisted_rb::verify_bundle(&d).unwrap().holds, "{s:?} seed {seed}");
            }
        }
    }

    #[test]
    fn zero_combination_is_zero_cocycle() {
        let rep = regular_representation(&catalog(2)[1]);
        let zero = Profile { max_numerator: 0, ..Profile::default() };
        assert!(gen_cocycle(&mut rng(1), &rep, 2, &zero).is_zero());
    }

    #[test]
    fn perfect_algebras_get_zero_characters() {
        let sl2 = catalog(3).pop().unwrap();
        let p = Profile::new(3, 1);
        let rep = gen_representation(&mut rng(0), &sl2, 1, &p).unwrap();
        assert!(rep.rho_l().iter().chain(rep.rho_r()).all(Matrix::is_zero));
    }

    #[test]
    fn negatives_fail() {
        let p = Profile::new(2, 2);
        let mut found = 0;
        for seed in 0..10 {
            let d = gen_twisted_rb(seed, &p, TrbStrategy::Nijenhuis).unwrap();
            if let Some(bad) = gen_negative(&mut rng(seed), &d, &p).unwrap() {
                assert!(!check_twisted_rb(&bad).holds);
                found += 1;
            }
        }
        assert!(found > 0);
    }
}

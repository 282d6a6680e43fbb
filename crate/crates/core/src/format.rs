//! JSON file formats.
//!
//! Rationals are strings `"p"` or `"p/q"` (plain JSON integers are accepted
//! on input); matrices are row-major nested arrays; every index is 0-based.
//! A bundle field may hold its object inline or a string path to a file
//! containing it, resolved relative to the referencing file.

use std::io::Read;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::cochain::Cochain;
use crate::deformation::{EquivalenceDatum, LinearDeformation, TruncatedFormalDeformation};
use crate::error::{Error, Result};
use crate::leibniz::{LeibnizAlgebra, LinearMap, Representation};
use crate::linalg::{Matrix, Vector};
use crate::ns_leibniz::NsLeibnizAlgebra;
use crate::twisted_rb::{TrbMorphism, TwistedRbData};

fn parse_err(msg: impl std::fmt::Display) -> Error {
    Error::Parse(msg.to_string())
}

/// Reads JSON from `path`, or from stdin when `path` is `-`.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| parse_err(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| parse_err(format!("{}: {e}", path.display())))?
    };
    parse_json(&text).map_err(|e| match e {
        Error::Parse(m) if path.as_os_str() != "-" => Error::Parse(format!("{}: {m}", path.display())),
        e => e,
    })
}

pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(parse_err)
}

/// Directory against which references inside `path` are resolved.
pub fn base_dir(path: &Path) -> PathBuf {
    if path.as_os_str() == "-" {
        return PathBuf::from(".");
    }
    path.parent().map(Path::to_path_buf).unwrap_or_else(|| PathBuf::from("."))
}

/// Pretty JSON with object keys in sorted order.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("formats serialize infallibly");
    serde_json::to_string_pretty(&v).expect("values serialize infallibly")
}

/// An object given inline or as a path to a JSON file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Source<T> {
    Path(PathBuf),
    Inline(T),
}

impl<T: DeserializeOwned> Source<T> {
    /// The object and the directory its own references resolve against.
    pub fn load(self, base: &Path) -> Result<(T, PathBuf)> {
        match self {
            Source::Inline(t) => Ok((t, base.to_path_buf())),
            Source::Path(p) => {
                let full = if p.is_absolute() { p } else { base.join(p) };
                let t = read_json(&full)?;
                Ok((t, base_dir(&full)))
            }
        }
    }
}

/// `{ "dim": n, "bracket": n×n×n }`; `bracket[i][j][k]` is the coefficient of
/// `e_k` in `[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub bracket: Vec<Vec<Vector>>,
}

fn table(dim: usize, t: Vec<Vec<Vector>>, what: &str) -> Result<LeibnizAlgebra> {
    let rows_ok = t.len() == dim && t.iter().all(|r| r.len() == dim && r.iter().all(|v| v.dim() == dim));
    if !rows_ok {
        return Err(Error::shape(format!("{what} must be a {dim}×{dim}×{dim} array")));
    }
    if dim == 0 {
        return Ok(LeibnizAlgebra::zero(0));
    }
    LeibnizAlgebra::from_nested(t)
}

impl AlgebraFile {
    pub fn from_algebra(g: &LeibnizAlgebra) -> Self {
        AlgebraFile { dim: g.dim(), bracket: g.to_nested() }
    }

    pub fn into_algebra(self) -> Result<LeibnizAlgebra> {
        table(self.dim, self.bracket, "bracket")
    }
}

/// Fits a parsed matrix to the declared shape; empty arrays stand for any
/// matrix with a zero dimension.
fn fit(m: Matrix, rows: usize, cols: usize, what: &str) -> Result<Matrix> {
    if rows == 0 || cols == 0 {
        if m.entries().is_empty() && (m.rows() == rows || m.rows() == 0) {
            return Ok(Matrix::zeros(rows, cols));
        }
    } else if m.rows() == rows && m.cols() == cols {
        return Ok(m);
    }
    Err(Error::shape(format!("{what} must be {rows}×{cols}, found {}×{}", m.rows(), m.cols())))
}

/// `{ "dim_v": m, "rho_l": [n matrices m×m], "rho_r": [...] }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepFile {
    pub dim_v: usize,
    pub rho_l: Vec<Matrix>,
    pub rho_r: Vec<Matrix>,
}

impl RepFile {
    pub fn from_rep(r: &Representation) -> Self {
        RepFile { dim_v: r.dim_v(), rho_l: r.rho_l().to_vec(), rho_r: r.rho_r().to_vec() }
    }

    pub fn into_rep(self, g: LeibnizAlgebra) -> Result<Representation> {
        let m = self.dim_v;
        let fit_all = |ms: Vec<Matrix>, what: &str| -> Result<Vec<Matrix>> {
            ms.into_iter().map(|a| fit(a, m, m, what)).collect()
        };
        let l = fit_all(self.rho_l, "rho_l entries")?;
        let r = fit_all(self.rho_r, "rho_r entries")?;
        Representation::new(g, m, l, r)
    }
}

/// `{ "degree": n, "values": … }` with `n` nesting levels of size `dim_in`
/// around vectors of size `dim_out`. `degree` defaults to 2, which makes
/// `{ "values": n×n array of vectors }` a bicochain file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CochainFile {
    #[serde(default = "two")]
    pub degree: usize,
    pub values: Value,
}

fn two() -> usize {
    2
}

fn nest(flat: &[crate::linalg::Rational], depth: usize, dim_in: usize, dim_out: usize) -> Value {
    if depth == 0 {
        return serde_json::to_value(Vector::new(flat.to_vec())).expect("vectors serialize");
    }
    let chunk = dim_in.pow(depth as u32 - 1) * dim_out;
    Value::Array((0..dim_in).map(|i| nest(&flat[i * chunk..(i + 1) * chunk], depth - 1, dim_in, dim_out)).collect())
}

fn unnest(v: &Value, depth: usize, dim_in: usize, dim_out: usize, out: &mut Vec<crate::linalg::Rational>) -> Result<()> {
    if depth == 0 {
        let vec: Vector = serde_json::from_value(v.clone()).map_err(parse_err)?;
        if vec.dim() != dim_out {
            return Err(Error::shape(format!("cochain value of length {} where {dim_out} was expected", vec.dim())));
        }
        out.extend(vec.into_entries());
        return Ok(());
    }
    let items = v.as_array().ok_or_else(|| parse_err("cochain values must be nested arrays"))?;
    if items.len() != dim_in {
        return Err(Error::shape(format!("cochain level of length {} where {dim_in} was expected", items.len())));
    }
    items.iter().try_for_each(|item| unnest(item, depth - 1, dim_in, dim_out, out))
}

impl CochainFile {
    pub fn from_cochain(c: &Cochain) -> Self {
        let flat = c.flatten();
        CochainFile { degree: c.degree(), values: nest(flat.entries(), c.degree(), c.dim_in(), c.dim_out()) }
    }

    /// The cochain on a `dim_in`-dimensional source with values in a
    /// `dim_out`-dimensional target; both come from the surrounding bundle.
    pub fn into_cochain(self, dim_in: usize, dim_out: usize) -> Result<Cochain> {
        let mut flat = Vec::new();
        unnest(&self.values, self.degree, dim_in, dim_out, &mut flat)?;
        Cochain::from_flat(self.degree, dim_in, dim_out, Vector::new(flat))
    }
}

/// `{ "rows": r, "cols": c, "matrix": r×c }`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LinearMapFile {
    pub rows: usize,
    pub cols: usize,
    pub matrix: Matrix,
}

impl LinearMapFile {
    pub fn from_matrix(m: &Matrix) -> Self {
        LinearMapFile { rows: m.rows(), cols: m.cols(), matrix: m.clone() }
    }

    pub fn into_matrix(self) -> Result<Matrix> {
        fit(self.matrix, self.rows, self.cols, "matrix")
    }

    pub fn into_matrix_of(self, rows: usize, cols: usize, what: &str) -> Result<Matrix> {
        if (self.rows, self.cols) != (rows, cols) {
            return Err(Error::shape(format!("{what} must be {rows}×{cols}, declared {}×{}", self.rows, self.cols)));
        }
        self.into_matrix()
    }
}

/// `{ "algebra", "rep", "cocycle", "k" }`, each inline or a path. Only
/// `algebra` is required; a TRB bundle needs `rep` and `k`, and a missing
/// `cocycle` means `H = 0`. `k` is a linear map file of shape `dim_g × dim_v`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bundle {
    pub algebra: Source<AlgebraFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rep: Option<Source<RepFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cocycle: Option<Source<CochainFile>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Source<LinearMapFile>>,
}

/// A bundle with references loaded and shapes checked.
#[derive(Clone, Debug, PartialEq)]
pub struct Loaded {
    pub algebra: LeibnizAlgebra,
    pub rep: Option<Representation>,
    pub cocycle: Option<Cochain>,
    pub k: Option<LinearMap>,
}

impl Bundle {
    pub fn from_algebra(g: &LeibnizAlgebra) -> Self {
        Bundle { algebra: Source::Inline(AlgebraFile::from_algebra(g)), rep: None, cocycle: None, k: None }
    }

    pub fn from_rep(r: &Representation) -> Self {
        Bundle { rep: Some(Source::Inline(RepFile::from_rep(r))), ..Bundle::from_algebra(r.algebra()) }
    }

    pub fn from_twisted_rb(d: &TwistedRbData) -> Self {
        Bundle {
            cocycle: Some(Source::Inline(CochainFile::from_cochain(d.cocycle()))),
            k: Some(Source::Inline(LinearMapFile::from_matrix(d.k()))),
            ..Bundle::from_rep(d.rep())
        }
    }

    pub fn load(self, base: &Path) -> Result<Loaded> {
        let (a, _) = self.algebra.load(base)?;
        let algebra = a.into_algebra()?;
        let rep = match self.rep {
            Some(s) => Some(s.load(base)?.0.into_rep(algebra.clone())?),
            None => None,
        };
        let dim_v = rep.as_ref().map(Representation::dim_v);
        let cocycle = match (self.cocycle, dim_v) {
            (Some(s), Some(m)) => Some(s.load(base)?.0.into_cochain(algebra.dim(), m)?),
            (Some(_), None) => return Err(parse_err("a cocycle needs a representation in the same bundle")),
            (None, _) => None,
        };
        let k = match (self.k, dim_v) {
            (Some(s), Some(m)) => Some(s.load(base)?.0.into_matrix_of(algebra.dim(), m, "k")?),
            (Some(_), None) => return Err(parse_err("k needs a representation in the same bundle")),
            (None, _) => None,
        };
        Ok(Loaded { algebra, rep, cocycle, k })
    }
}

impl Loaded {
    pub fn representation(&self) -> Result<Representation> {
        self.rep.clone().ok_or_else(|| parse_err("bundle has no \"rep\""))
    }

    pub fn twisted_rb(&self) -> Result<TwistedRbData> {
        let rep = self.representation()?;
        let k = self.k.clone().ok_or_else(|| parse_err("bundle has no \"k\""))?;
        let h = self.cocycle.clone().unwrap_or_else(|| Cochain::zero(2, rep.dim_g(), rep.dim_v()));
        TwistedRbData::new(rep, h, k)
    }
}

/// Loads a bundle file (or stdin for `-`).
pub fn load_bundle(path: &Path) -> Result<Loaded> {
    let b: Bundle = read_json(path)?;
    b.load(&base_dir(path))
}

/// `{ "base": TRB bundle, "terms": [K_1, …, K_N] }` with each term a linear
/// map file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeformationFile {
    pub base: Source<Bundle>,
    pub terms: Vec<LinearMapFile>,
}

impl DeformationFile {
    pub fn from_formal(tfd: &TruncatedFormalDeformation) -> Self {
        DeformationFile {
            base: Source::Inline(Bundle::from_twisted_rb(&tfd.base)),
            terms: tfd.terms.iter().map(LinearMapFile::from_matrix).collect(),
        }
    }

    pub fn from_linear(ld: &LinearDeformation) -> Self {
        DeformationFile::from_formal(&ld.as_formal())
    }

    pub fn load(self, base: &Path) -> Result<TruncatedFormalDeformation> {
        let (b, dir) = self.base.load(base)?;
        let d = b.load(&dir)?.twisted_rb()?;
        let terms = self
            .terms
            .into_iter()
            .map(|t| t.into_matrix_of(d.dim_g(), d.dim_v(), "deformation term"))
            .collect::<Result<Vec<_>>>()?;
        TruncatedFormalDeformation::new(d, terms)
    }
}

pub fn load_deformation(path: &Path) -> Result<TruncatedFormalDeformation> {
    let f: DeformationFile = read_json(path)?;
    f.load(&base_dir(path))
}

/// A linear deformation: a deformation file with exactly one term.
pub fn load_linear_deformation(path: &Path) -> Result<LinearDeformation> {
    let tfd = load_deformation(path)?;
    if tfd.terms.len() != 1 {
        return Err(Error::shape(format!("a linear deformation has one term, found {}", tfd.terms.len())));
    }
    LinearDeformation::new(tfd.base.clone(), tfd.terms[0].clone())
}

/// `{ "x": vector, "phi": [φ_1, …], "psi": [ψ_1, …] }`; `φ_i` are
/// `dim_g × dim_g` and `ψ_i` are `dim_v × dim_v`. Omitted lists are empty.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DatumFile {
    pub x: Vector,
    #[serde(default)]
    pub phi: Vec<Matrix>,
    #[serde(default)]
    pub psi: Vec<Matrix>,
}

impl DatumFile {
    pub fn from_datum(e: &EquivalenceDatum) -> Self {
        DatumFile { x: e.x.clone(), phi: e.phi.clone(), psi: e.psi.clone() }
    }

    pub fn into_datum(self, dim_g: usize, dim_v: usize) -> Result<EquivalenceDatum> {
        if self.x.dim() != dim_g {
            return Err(Error::shape(format!("x must have length {dim_g}")));
        }
        let phi = self.phi.into_iter().map(|m| fit(m, dim_g, dim_g, "phi terms")).collect::<Result<_>>()?;
        let psi = self.psi.into_iter().map(|m| fit(m, dim_v, dim_v, "psi terms")).collect::<Result<_>>()?;
        Ok(EquivalenceDatum { x: self.x, phi, psi })
    }
}

/// `{ "phi": dim_g'×dim_g, "psi": dim_v'×dim_v }` as plain nested arrays.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MorphismFile {
    pub phi: Matrix,
    pub psi: Matrix,
}

impl MorphismFile {
    pub fn into_morphism(self, src: &TwistedRbData, dst: &TwistedRbData) -> Result<TrbMorphism> {
        Ok(TrbMorphism {
            phi: fit(self.phi, dst.dim_g(), src.dim_g(), "phi")?,
            psi: fit(self.psi, dst.dim_v(), src.dim_v(), "psi")?,
        })
    }
}

/// `{ "dim": n, "tri": n×n×n, "tli": n×n×n, "dia": n×n×n }` for `▷`, `◁`, `⋄`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NsFile {
    pub dim: usize,
    pub tri: Vec<Vec<Vector>>,
    pub tli: Vec<Vec<Vector>>,
    pub dia: Vec<Vec<Vector>>,
}

impl NsFile {
    pub fn from_ns(a: &NsLeibnizAlgebra) -> Self {
        NsFile { dim: a.dim(), tri: a.tri().to_nested(), tli: a.tli().to_nested(), dia: a.dia().to_nested() }
    }

    pub fn into_ns(self) -> Result<NsLeibnizAlgebra> {
        let n = self.dim;
        NsLeibnizAlgebra::new(table(n, self.tri, "tri")?, table(n, self.tli, "tli")?, table(n, self.dia, "dia")?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{gen_twisted_rb, Profile, TrbStrategy};
    use crate::leibniz::{example_nilpotent_2d, regular_representation};
    use crate::linalg::int;

    #[test]
    fn algebra_file_uses_string_rationals() {
        let g = example_nilpotent_2d();
        let text = to_json_string(&AlgebraFile::from_algebra(&g));
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["bracket"][0][0], serde_json::json!(["0", "1"]));
        let back: AlgebraFile = parse_json(&text).unwrap();
        assert_eq!(back.into_algebra().unwrap(), g);
    }

    #[test]
    fn integers_and_fractions_parse() {
        let f: AlgebraFile = parse_json(r#"{"dim": 1, "bracket": [[[ "-3/6" ]]]}"#).unwrap();
        assert_eq!(f.into_algebra().unwrap().structure(0, 0, 0), &crate::linalg::ratio(-1, 2));
        let f: AlgebraFile = parse_json(r#"{"dim": 1, "bracket": [[[ 2 ]]]}"#).unwrap();
        assert_eq!(f.into_algebra().unwrap().structure(0, 0, 0), &int(2));
        assert!(matches!(parse_json::<AlgebraFile>(r#"{"dim": 1, "bracket": [[["1/0"]]]}"#), Err(Error::Parse(_))));
    }

    #[test]
    fn wrong_shapes_are_shape_errors() {
        let f: AlgebraFile = parse_json(r#"{"dim": 2, "bracket": [[["1"]]]}"#).unwrap();
        assert!(matches!(f.into_algebra(), Err(Error::Shape(_))));
        let m: LinearMapFile = parse_json(r#"{"rows": 2, "cols": 1, "matrix": [["1"]]}"#).unwrap();
        assert!(matches!(m.into_matrix(), Err(Error::Shape(_))));
    }

    #[test]
    fn cochain_nesting_round_trips() {
        let c = Cochain::from_fn(2, 3, 2, |t| Vector::from_ints(&[t[0] as i64, t[1] as i64 - 1]));
        let f = CochainFile::from_cochain(&c);
        assert_eq!(f.values[2][1], serde_json::json!(["2", "0"]));
        assert_eq!(f.clone().into_cochain(3, 2).unwrap(), c);
        assert!(matches!(f.into_cochain(2, 2), Err(Error::Shape(_))));
        let zero = Cochain::zero(0, 0, 1);
        assert_eq!(CochainFile::from_cochain(&zero).into_cochain(0, 1).unwrap(), zero);
    }

    #[test]
    fn bundles_round_trip_inline_and_by_path() {
        let d = gen_twisted_rb(5, &Profile::new(2, 2), TrbStrategy::Any).unwrap();
        let text = to_json_string(&Bundle::from_twisted_rb(&d));
        let b: Bundle = parse_json(&text).unwrap();
        assert_eq!(b.load(Path::new(".")).unwrap().twisted_rb().unwrap(), d);

        let dir = std::env::temp_dir().join(format!("lra-format-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("g.json"), to_json_string(&AlgebraFile::from_algebra(d.algebra()))).unwrap();
        let by_path = Bundle { algebra: Source::Path("g.json".into()), ..Bundle::from_twisted_rb(&d) };
        std::fs::write(dir.join("d.json"), to_json_string(&by_path)).unwrap();
        assert_eq!(load_bundle(&dir.join("d.json")).unwrap().twisted_rb().unwrap(), d);
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn missing_cocycle_is_zero() {
        let r = regular_representation(&example_nilpotent_2d());
        let b = Bundle { k: Some(Source::Inline(LinearMapFile::from_matrix(&Matrix::zeros(2, 2)))), ..Bundle::from_rep(&r) };
        let d = b.load(Path::new(".")).unwrap().twisted_rb().unwrap();
        assert!(d.cocycle().is_zero());
    }

    #[test]
    fn ns_and_datum_round_trip() {
        let d = gen_twisted_rb(9, &Profile::new(2, 2), TrbStrategy::Nijenhuis).unwrap();
        let a = crate::ns_leibniz::ns_from_twisted_rb(&d);
        assert_eq!(NsFile::from_ns(&a).into_ns().unwrap(), a);
        let e = EquivalenceDatum::with_zero_terms(Vector::from_ints(&[1, 0]), 2, 2, 2);
        assert_eq!(DatumFile::from_datum(&e).into_datum(2, 2).unwrap(), e);
    }
}

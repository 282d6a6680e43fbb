use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Vector};

/// An `n`-linear map `A^{⊗n} → W` stored as its values on basis tuples.
///
/// Coordinates are flattened lexicographically over `(i_1, …, i_n)` and then
/// over the output index, so `values[((i_1·d + i_2)·d + …)·dim_out + k]` is the
/// `k`-th coordinate of `f(e_{i_1}, …, e_{i_n})`. A degree-0 cochain is a
/// single vector of `W`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    degree: usize,
    dim_in: usize,
    dim_out: usize,
    values: Vec<Rational>,
}

/// Degree-2 cochain. Kept as a named alias because the twisting cocycle `H`
/// appears in nearly every construction.
pub type Bicochain = Cochain;

impl Cochain {
    pub fn zero(degree: usize, dim_in: usize, dim_out: usize) -> Self {
        let len = dim_in.pow(degree as u32) * dim_out;
        Cochain { degree, dim_in, dim_out, values: vec![Rational::zero(); len] }
    }

    /// Cochain with `f(e_{t_1}, …, e_{t_n}) = value(t)`.
    pub fn from_fn(degree: usize, dim_in: usize, dim_out: usize, mut value: impl FnMut(&[usize]) -> Vector) -> Self {
        let mut values = Vec::with_capacity(dim_in.pow(degree as u32) * dim_out);
        for t in crate::tuples(degree, dim_in) {
            let v = value(&t);
            assert_eq!(v.dim(), dim_out, "cochain value has the wrong dimension");
            values.extend(v.into_entries());
        }
        Cochain { degree, dim_in, dim_out, values }
    }

    pub fn from_flat(degree: usize, dim_in: usize, dim_out: usize, flat: Vector) -> Result<Self> {
        let len = dim_in.pow(degree as u32) * dim_out;
        if flat.dim() != len {
            return Err(Error::shape(format!("degree-{degree} cochain needs {len} coordinates, got {}", flat.dim())));
        }
        Ok(Cochain { degree, dim_in, dim_out, values: flat.into_entries() })
    }

    /// Degree-0 cochain holding `v`.
    pub fn constant(v: Vector, dim_in: usize) -> Self {
        Cochain { degree: 0, dim_in, dim_out: v.dim(), values: v.into_entries() }
    }

    /// Degree-1 cochain of a linear map (`dim_out × dim_in` matrix).
    pub fn from_linear_map(m: &Matrix) -> Self {
        Self::from_fn(1, m.cols(), m.rows(), |t| m.column(t[0]))
    }

    pub fn to_linear_map(&self) -> Result<Matrix> {
        if self.degree != 1 {
            return Err(Error::shape(format!("degree-{} cochain is not a linear map", self.degree)));
        }
        Ok(Matrix::from_fn_columns(self.dim_out, self.dim_in, |i| self.value(&[i])))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    fn offset(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.degree);
        tuple.iter().fold(0, |acc, &i| acc * self.dim_in + i) * self.dim_out
    }

    /// Value on a tuple of basis vectors.
    pub fn value(&self, tuple: &[usize]) -> Vector {
        let o = self.offset(tuple);
        Vector::new(self.values[o..o + self.dim_out].to_vec())
    }

    fn accumulate(&self, tuple: &[usize], coeff: &Rational, out: &mut Vector) {
        let o = self.offset(tuple);
        for k in 0..self.dim_out {
            let v = &self.values[o + k];
            if !v.is_zero() {
                out[k] += coeff * v;
            }
        }
    }

    /// Multilinear evaluation on arbitrary arguments.
    pub fn eval(&self, args: &[&Vector]) -> Vector {
        assert_eq!(args.len(), self.degree, "wrong number of cochain arguments");
        assert!(args.iter().all(|a| a.dim() == self.dim_in), "cochain argument has the wrong dimension");
        let mut out = Vector::zeros(self.dim_out);
        let mut tuple = vec![0; self.degree];
        self.eval_rec(args, 0, &Rational::one(), &mut tuple, &mut out);
        out
    }

    fn eval_rec(&self, args: &[&Vector], pos: usize, coeff: &Rational, tuple: &mut Vec<usize>, out: &mut Vector) {
        if pos == self.degree {
            self.accumulate(tuple, coeff, out);
            return;
        }
        for (i, a) in args[pos].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            tuple[pos] = i;
            self.eval_rec(args, pos + 1, &(coeff * a), tuple, out);
        }
    }

    /// Evaluation on basis vectors except at `slot`, which receives `arg`.
    pub fn eval_with_slot(&self, basis: &[usize], slot: usize, arg: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim_out);
        let mut tuple = basis.to_vec();
        for (k, a) in arg.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            tuple[slot] = k;
            self.accumulate(&tuple, a, &mut out);
        }
        out
    }

    pub fn flatten(&self) -> Vector {
        Vector::new(self.values.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// First basis tuple with a nonzero value.
    pub fn first_nonzero(&self) -> Option<(Vec<usize>, Vector)> {
        crate::tuples(self.degree, self.dim_in).map(|t| {
            let v = self.value(&t);
            (t, v)
        }).find(|(_, v)| !v.is_zero())
    }

    fn same_shape(&self, other: &Cochain) -> Result<()> {
        if (self.degree, self.dim_in, self.dim_out) != (other.degree, other.dim_in, other.dim_out) {
            return Err(Error::shape("cochains of different shape"));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Cochain) -> Result<Cochain> {
        self.same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn checked_sub(&self, other: &Cochain) -> Result<Cochain> {
        self.same_shape(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Cochain, f: impl Fn(&Rational, &Rational) -> Rational) -> Cochain {
        Cochain { values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(), ..self.clone() }
    }

    pub fn scaled(&self, c: &Rational) -> Cochain {
        Cochain { values: self.values.iter().map(|a| a * c).collect(), ..self.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn flattening_is_lexicographic_then_output() {
        let f = Cochain::from_fn(2, 2, 2, |t| Vector::from_ints(&[(10 * t[0] + t[1]) as i64, -1]));
        let flat = f.flatten();
        assert_eq!(flat, Vector::from_ints(&[0, -1, 1, -1, 10, -1, 11, -1]));
    }

    #[test]
    fn evaluation_is_multilinear() {
        let f = Cochain::from_fn(2, 2, 1, |t| Vector::from_ints(&[(t[0] * 2 + t[1] + 1) as i64]));
        let x = Vector::from_ints(&[1, 2]);
        let y = Vector::from_ints(&[3, -1]);
        // 1·3·1 + 1·(-1)·2 + 2·3·3 + 2·(-1)·4
        assert_eq!(f.eval(&[&x, &y]), Vector::from_ints(&[3 - 2 + 18 - 8]));
        assert_eq!(f.eval_with_slot(&[1, 0], 1, &y), Vector::from_ints(&[3 * 3 - 4]));
        let c = Cochain::constant(Vector::from_ints(&[5]), 3);
        assert_eq!(c.eval(&[]), Vector::from_ints(&[5]));
    }

    #[test]
    fn linear_map_round_trip() {
        let m = Matrix::from_ints(&[&[1, 2, 3], &[0, -1, 4]]);
        let f = Cochain::from_linear_map(&m);
        assert_eq!((f.degree(), f.dim_in(), f.dim_out()), (1, 3, 2));
        assert_eq!(f.value(&[2]), Vector::from_ints(&[3, 4]));
        assert_eq!(f.to_linear_map().unwrap(), m);
        assert_eq!(f.scaled(&int(0)).first_nonzero(), None);
    }
}

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense real symmetric matrix. Writes go through [`SymmetricMatrix::set`],
/// which updates both triangles, so `get(i, j) == get(j, i)` always holds.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix<S> {
    order: usize,
    data: Vec<S>,
}

impl<S: Scalar> SymmetricMatrix<S> {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            data: vec![S::zero(); order * order],
        }
    }

    /// Build from full rows, rejecting any asymmetric pair.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let order = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != order) {
            return Err(Error::Dimension(format!(
                "row {bad} has {} entries, expected {order}",
                rows[bad].len()
            )));
        }
        for i in 0..order {
            for j in i + 1..order {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self {
            order,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.data[i * self.order + j] = value.clone();
        self.data[j * self.order + i] = value;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<S>> {
        (0..self.order).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.order);
        (0..self.order)
            .map(|i| dot(self.row(i), v))
            .collect()
    }

    pub fn max_abs(&self) -> f64 {
        crate::scalar::max_abs_f64(&self.data)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SymmetricMatrix<T> {
        SymmetricMatrix {
            order: self.order,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_f64(&self) -> SymmetricMatrix<f64> {
        self.map(|x| x.to_f64())
    }

    /// Principal submatrix on the given (ordered) index set.
    pub fn principal(&self, indices: &[usize]) -> Self {
        let mut out = Self::zeros(indices.len());
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate().skip(a) {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// Largest `|i - j|` over nonzero entries.
    pub fn bandwidth(&self) -> usize {
        let mut w = 0;
        for i in 0..self.order {
            for j in i + 1..self.order {
                if !self.get(i, j).is_zero() {
                    w = w.max(j - i);
                }
            }
        }
        w
    }
}

pub fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

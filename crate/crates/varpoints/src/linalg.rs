//! Small dense linear algebra over finite-field scalars: rank-profile
//! selection and matrix inversion, enough for coordinate changes and minor
//! extraction.

use crate::ff::{FqElement, FqField};

/// Row-echelon accumulator: stores normalized independent vectors together
/// with their pivot positions.
struct Echelon {
    field: FqField,
    rows: Vec<(usize, Vec<FqElement>)>,
}

impl Echelon {
    fn new(field: FqField) -> Self {
        Echelon {
            field,
            rows: Vec::new(),
        }
    }

    /// Reduces `v` against the accumulated rows; if a nonzero vector
    /// remains, absorbs it and returns true.
    fn absorb(&mut self, mut v: Vec<FqElement>) -> bool {
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let c = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = x.sub(&r.mul(&c));
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(pivot) => {
                let inv = v[pivot].inv().expect("pivot is nonzero");
                for x in v.iter_mut() {
                    *x = x.mul(&inv);
                }
                self.rows.push((pivot, v));
                true
            }
        }
    }

    #[allow(dead_code)]
    fn field(&self) -> &FqField {
        &self.field
    }
}

/// First-found column indices (ascending) whose vectors are linearly
/// independent, greedy with partial pivoting; stops after `want` columns.
pub(crate) fn independent_columns(
    matrix: &[Vec<FqElement>],
    field: &FqField,
    want: usize,
) -> Vec<usize> {
    let cols = matrix.first().map_or(0, |r| r.len());
    let mut ech = Echelon::new(field.clone());
    let mut out = Vec::new();
    for c in 0..cols {
        if out.len() == want {
            break;
        }
        let v: Vec<FqElement> = matrix.iter().map(|row| row[c].clone()).collect();
        if ech.absorb(v) {
            out.push(c);
        }
    }
    out
}

/// First-found row indices (ascending) that are linearly independent.
pub(crate) fn independent_rows(
    matrix: &[Vec<FqElement>],
    field: &FqField,
    want: usize,
) -> Vec<usize> {
    let mut ech = Echelon::new(field.clone());
    let mut out = Vec::new();
    for (r, row) in matrix.iter().enumerate() {
        if out.len() == want {
            break;
        }
        if ech.absorb(row.clone()) {
            out.push(r);
        }
    }
    out
}

pub(crate) fn is_nonsingular(matrix: &[Vec<FqElement>], field: &FqField) -> bool {
    let n = matrix.len();
    independent_rows(matrix, field, n).len() == n
}

/// Gauss-Jordan inverse of a square matrix, or None when singular.
pub(crate) fn invert(matrix: &[Vec<FqElement>], field: &FqField) -> Option<Vec<Vec<FqElement>>> {
    let n = matrix.len();
    let mut aug: Vec<Vec<FqElement>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            for j in 0..n {
                r.push(if i == j { field.one() } else { field.zero() });
            }
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].inv().expect("pivot is nonzero");
        for x in aug[col].iter_mut() {
            *x = x.mul(&inv);
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let c = aug[r][col].clone();
                for j in 0..2 * n {
                    let s = aug[col][j].mul(&c);
                    aug[r][j] = aug[r][j].sub(&s);
                }
            }
        }
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::make_prime_field;

    #[test]
    fn invert_roundtrip() {
        let f = make_prime_field(7).unwrap();
        let m = vec![
            vec![f.from_u64(2), f.from_u64(1)],
            vec![f.from_u64(3), f.from_u64(4)],
        ];
        let inv = invert(&m, &f).unwrap();
        // m * inv = id
        for i in 0..2 {
            for j in 0..2 {
                let mut acc = f.zero();
                for k in 0..2 {
                    acc = acc.add(&m[i][k].mul(&inv[k][j]));
                }
                assert_eq!(acc, if i == j { f.one() } else { f.zero() });
            }
        }
        let singular = vec![
            vec![f.from_u64(1), f.from_u64(2)],
            vec![f.from_u64(2), f.from_u64(4)],
        ];
        assert!(invert(&singular, &f).is_none());
        assert!(!is_nonsingular(&singular, &f));
    }

    #[test]
    fn column_selection_in_index_order() {
        let f = make_prime_field(5).unwrap();
        // col 1 = 2 * col 0; expect {0, 2}
        let m = vec![
            vec![f.from_u64(1), f.from_u64(2), f.from_u64(0)],
            vec![f.from_u64(2), f.from_u64(4), f.from_u64(1)],
        ];
        assert_eq!(independent_columns(&m, &f, 2), vec![0, 2]);
        assert_eq!(independent_rows(&m, &f, 2), vec![0, 1]);
    }
}

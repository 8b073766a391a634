//! Nonvanishing minors located through random points.
//!
//! Instead of enumerating every `n x n` minor of a polynomial matrix,
//! [`find_nonzero_minor`] evaluates the matrix at random points of `V(I)`
//! and reads off `n` independent columns, then `n` independent rows, by
//! Gaussian elimination. The resulting submatrix has a determinant that
//! provably does not vanish at the witness point, so
//! [`extend_ideal_by_nonzero_minor`] strictly shrinks the variety when it
//! adds that determinant to the ideal.

use crate::error::{Error, Result};
use crate::gb::Ideal;
use crate::linalg;
use crate::points::{random_points, PointSearchOptions};
use crate::poly::PolyMatrix;
use crate::rng::{derive_seed, stream};
use crate::solve::AffinePoint;

/// A certificate that the `row_indices x column_indices` submatrix of the
/// searched matrix is nonsingular at `point`.
#[derive(Clone, Debug)]
pub struct MinorWitness {
    /// A point of `V(I)` where the minor does not vanish.
    pub point: AffinePoint,
    /// Strictly increasing column indices, selected first.
    pub column_indices: Vec<usize>,
    /// Strictly increasing row indices, selected within the chosen columns.
    pub row_indices: Vec<usize>,
    /// The extracted polynomial submatrix.
    pub submatrix: PolyMatrix,
}

/// Finds an `n x n` submatrix of `matrix` that is nonsingular at some point
/// of `V(I)`. Up to `minor_point_attempts` points are drawn with
/// [`random_points`]; at each, columns and then rows are selected greedily
/// in index order by rank. Distinguishes "no point found" from "rank below
/// `n` at every point tried".
pub fn find_nonzero_minor(
    n: usize,
    matrix: &PolyMatrix,
    ideal: &Ideal,
    minor_point_attempts: usize,
    search_opts: &PointSearchOptions,
) -> Result<MinorWitness> {
    if n == 0 || n > matrix.rows().min(matrix.cols()) {
        return Err(Error::Contract(format!(
            "minor size {n} outside the {}x{} matrix",
            matrix.rows(),
            matrix.cols()
        )));
    }
    if matrix.ring() != ideal.ring() {
        return Err(Error::RingMismatch("matrix and ideal rings differ".into()));
    }
    if minor_point_attempts == 0 {
        return Err(Error::Contract("minor_point_attempts must be >= 1".into()));
    }

    let mut found_point = false;
    for attempt in 0..minor_point_attempts {
        let opts = PointSearchOptions {
            seed: derive_seed(search_opts.seed, stream::MINOR_POINT, attempt as u64),
            ..search_opts.clone()
        };
        let pts = random_points(1, ideal, &opts)?;
        let Some(point) = pts.into_iter().next() else {
            continue;
        };
        found_point = true;
        let scalar = matrix.evaluate(point.coords())?;
        let field = point.field().clone();

        let column_indices = linalg::independent_columns(&scalar, &field, n);
        if column_indices.len() < n {
            continue;
        }
        let restricted: Vec<Vec<_>> = scalar
            .iter()
            .map(|row| column_indices.iter().map(|&c| row[c].clone()).collect())
            .collect();
        let row_indices = linalg::independent_rows(&restricted, &field, n);
        debug_assert_eq!(row_indices.len(), n, "column rank equals row rank");

        let submatrix = matrix.submatrix(&row_indices, &column_indices);
        let det_at_point = submatrix.determinant()?.evaluate(point.coords())?;
        debug_assert!(!det_at_point.is_zero());
        if det_at_point.is_zero() {
            continue;
        }
        return Ok(MinorWitness {
            point,
            column_indices,
            row_indices,
            submatrix,
        });
    }
    if found_point {
        Err(Error::RankDeficient)
    } else {
        Err(Error::PointSearchFailure)
    }
}

/// Extends `I` by the determinant of a witness submatrix. The determinant
/// is nonzero at the witness point, so that point of `V(I)` is cut away:
/// the extended variety is strictly smaller.
pub fn extend_ideal_by_nonzero_minor(
    n: usize,
    matrix: &PolyMatrix,
    ideal: &Ideal,
    minor_point_attempts: usize,
    search_opts: &PointSearchOptions,
) -> Result<Ideal> {
    let witness = find_nonzero_minor(n, matrix, ideal, minor_point_attempts, search_opts)?;
    let det = witness.submatrix.determinant()?;
    ideal.extended(vec![det])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::make_prime_field;
    use crate::parse::parse_polynomial;
    use crate::poly::PolyRing;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ring(p: u64, vars: &[&str]) -> PolyRing {
        PolyRing::new(make_prime_field(p).unwrap(), vars).unwrap()
    }

    #[test]
    fn cusp_jacobian_size_one() {
        let r = ring(101, &["x", "y"]);
        let i = Ideal::new(r.clone(), vec![parse_polynomial(&r, "x^3-y^2").unwrap()]).unwrap();
        let m = i.jacobian();
        let opts = PointSearchOptions {
            seed: 5,
            ..PointSearchOptions::default()
        };
        let witness = find_nonzero_minor(1, &m, &i, 5, &opts).unwrap();
        assert!(witness.point.lies_on(&i).unwrap());
        let det = witness.submatrix.determinant().unwrap();
        assert!(!witness.point.evaluate(&det).unwrap().is_zero());

        // extending cuts the witness point out of the variety
        let extended = extend_ideal_by_nonzero_minor(1, &m, &i, 5, &opts).unwrap();
        assert!(!witness.point.lies_on(&extended).unwrap());
        assert!(witness.point.lies_on(&i).unwrap());
        // proper descent: the determinant was not already a member
        assert!(!i.is_member(&det).unwrap());
    }

    #[test]
    fn smooth_circle_always_succeeds() {
        let r = ring(101, &["x", "y"]);
        let i = Ideal::new(r.clone(), vec![parse_polynomial(&r, "x^2+y^2-1").unwrap()]).unwrap();
        let m = i.jacobian();
        for seed in 0..5 {
            let opts = PointSearchOptions {
                seed,
                ..PointSearchOptions::default()
            };
            let witness = find_nonzero_minor(1, &m, &i, 5, &opts).unwrap();
            assert_eq!(witness.column_indices.len(), 1);
            assert_eq!(witness.row_indices.len(), 1);
        }
    }

    #[test]
    fn paper_f5_example_shape() {
        // two generators in three variables, the 3x2 Jacobian, 2x2 minors
        let r = ring(5, &["x", "y", "z"]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let cubic = crate::poly::random_form(&r, 3, &mut rng).sub(&r.from_int(2));
        let quadric = crate::poly::random_form(&r, 2, &mut rng);
        let i = Ideal::new(r.clone(), vec![cubic, quadric]).unwrap();
        let m = i.jacobian();
        assert_eq!((m.rows(), m.cols()), (3, 2));
        let opts = PointSearchOptions {
            seed: 11,
            ..PointSearchOptions::default()
        };
        let witness = find_nonzero_minor(2, &m, &i, 5, &opts).unwrap();
        assert!(witness.point.lies_on(&i).unwrap());
        // index validity: rebuilding the submatrix from the indices
        // reproduces it entry by entry
        let rebuilt = m.submatrix(&witness.row_indices, &witness.column_indices);
        assert_eq!(rebuilt, witness.submatrix);
        for w in witness.column_indices.windows(2) {
            assert!(w[0] < w[1]);
        }
        for w in witness.row_indices.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn impossible_sizes_are_contract_errors() {
        let r = ring(5, &["x", "y"]);
        let i = Ideal::new(r.clone(), vec![r.var(0)]).unwrap();
        let m = PolyMatrix::new(r.clone(), 2, 1, vec![r.var(0), r.var(1)]).unwrap();
        let opts = PointSearchOptions::default();
        assert!(matches!(
            find_nonzero_minor(2, &m, &i, 5, &opts),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn zero_matrix_is_rank_deficient() {
        let r = ring(5, &["x", "y"]);
        let i = Ideal::new(r.clone(), vec![r.var(0)]).unwrap();
        let m = PolyMatrix::new(
            r.clone(),
            2,
            2,
            vec![r.zero(), r.zero(), r.zero(), r.zero()],
        )
        .unwrap();
        let opts = PointSearchOptions {
            seed: 1,
            ..PointSearchOptions::default()
        };
        assert!(matches!(
            find_nonzero_minor(1, &m, &i, 3, &opts),
            Err(Error::RankDeficient)
        ));
    }

    #[test]
    fn pointless_variety_is_a_search_failure() {
        // x^2 + 1 over F_3 has no rational points
        let r = ring(3, &["x", "y"]);
        let i = Ideal::new(r.clone(), vec![parse_polynomial(&r, "x^2+1").unwrap()]).unwrap();
        let m = i.jacobian();
        let opts = PointSearchOptions {
            seed: 0,
            ..PointSearchOptions::default()
        };
        assert!(matches!(
            find_nonzero_minor(1, &m, &i, 2, &opts),
            Err(Error::PointSearchFailure)
        ));
    }

    #[test]
    fn iterated_extension_drops_dimension() {
        // a small determinantal surrogate: the 2x2 minors of a generic
        // symbolic matrix cut the singular locus of the cone x*w - y*z
        let r = ring(101, &["x", "y", "z", "w"]);
        let cone = parse_polynomial(&r, "x*w-y*z").unwrap();
        let i = Ideal::new(r.clone(), vec![cone]).unwrap();
        let start_dim = i.krull_dim();
        assert_eq!(start_dim, 3);
        let m = i.jacobian();
        let mut j = i.clone();
        let mut iterations = 0;
        for step in 0..6 {
            if j.krull_dim() < start_dim {
                break;
            }
            let opts = PointSearchOptions {
                seed: 1000 + step,
                ..PointSearchOptions::default()
            };
            match extend_ideal_by_nonzero_minor(1, &m, &j, 5, &opts) {
                Ok(next) => j = next,
                Err(Error::RankDeficient) => continue,
                Err(e) => panic!("unexpected error {e}"),
            }
            iterations += 1;
        }
        assert!(iterations >= 1);
        assert!(
            j.krull_dim() < start_dim,
            "dimension must drop within 6 extensions"
        );
    }
}

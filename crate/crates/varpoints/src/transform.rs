//! Coordinate changes and projections.
//!
//! [`random_coordinate_change`] draws a linear automorphism of the ring:
//! a chosen number of coordinates get genuinely mixed linear images, the
//! rest are permuted variables, and the linear part is redrawn until
//! nonsingular. [`generic_projection`] composes a coordinate change with
//! forgetting leading variables, returning the projection as a map from
//! the small ring into the original one together with the elimination
//! ideal. [`projection_to_hypersurface`] drops one variable fewer than the
//! codimension and settles for a single hypersurface equation vanishing on
//! the image, found by stopping the elimination basis early.

use rand::Rng;

use crate::dimension::DimensionFunction;
use crate::error::{Error, Result};
use crate::ff::FqElement;
use crate::gb::Ideal;
use crate::linalg;
use crate::poly::{random_linear_form, PolyRing, Polynomial, Replacement, RingMap};
use crate::rng::{derive_rng, stream};

/// Step budget for the early-exit elimination inside
/// [`projection_to_hypersurface`] when the caller does not supply one.
pub const DEFAULT_HYPERSURFACE_BUDGET: u64 = 1_000_000;

/// Options for [`random_coordinate_change`].
#[derive(Clone, Debug)]
pub struct CoordinateChangeOptions {
    /// Shape of the replaced coordinates' images.
    pub replacement: Replacement,
    /// How many coordinates become non-monomial; None means all of them.
    pub max_coordinates_to_replace: Option<usize>,
    /// With this off, every image (monomial ones included) gains a nonzero
    /// constant term.
    pub homogeneous: bool,
    pub seed: u64,
}

impl Default for CoordinateChangeOptions {
    fn default() -> Self {
        CoordinateChangeOptions {
            replacement: Replacement::Full,
            max_coordinates_to_replace: None,
            homogeneous: true,
            seed: 0,
        }
    }
}

/// A random linear automorphism of the ring: exactly
/// `min(max_coordinates_to_replace, n)` images are replacement-shaped
/// linear forms, the rest are bare permuted variables, and the coefficient
/// matrix is redrawn until nonsingular.
pub fn random_coordinate_change(
    ring: &PolyRing,
    opts: &CoordinateChangeOptions,
) -> Result<RingMap> {
    let n = ring.num_vars();
    let m = opts.max_coordinates_to_replace.unwrap_or(n).min(n);
    let field = ring.field().clone();
    let mut rng = derive_rng(opts.seed, stream::COORD_CHANGE, 0);

    for _ in 0..100 {
        // which slots get replaced, and where the monomial slots point
        let mut slots: Vec<usize> = (0..n).collect();
        for i in 0..m {
            let j = rng.random_range(i..n);
            slots.swap(i, j);
        }
        let replaced: Vec<bool> = {
            let mut v = vec![false; n];
            for &s in &slots[..m] {
                v[s] = true;
            }
            v
        };
        let mut perm: Vec<usize> = (0..n).collect();
        for i in 0..n {
            let j = rng.random_range(i..n);
            perm.swap(i, j);
        }

        let mut images: Vec<Polynomial> = Vec::with_capacity(n);
        for i in 0..n {
            let linear = if replaced[i] {
                // a replaced slot must be genuinely non-monomial; a sparse
                // draw can degenerate to a bare unit-scalar variable
                let mut form = random_linear_form(ring, opts.replacement, true, &mut rng);
                for _ in 0..20 {
                    if !is_unit_monomial(&form) {
                        break;
                    }
                    form = random_linear_form(ring, opts.replacement, true, &mut rng);
                }
                form
            } else {
                ring.var(perm[i])
            };
            let image = if opts.homogeneous {
                linear
            } else {
                linear.add(&ring.constant(field.random_nonzero(&mut rng)))
            };
            images.push(image);
        }

        if linear_part_nonsingular(ring, &images) {
            return RingMap::new(ring.clone(), ring.clone(), images);
        }
    }
    Err(Error::Contract(
        "no invertible coordinate change found in 100 draws".into(),
    ))
}

/// Coefficient matrix of the degree-one parts: row i holds the coefficients
/// of the variables in image i.
fn linear_coefficients(ring: &PolyRing, images: &[Polynomial]) -> Vec<Vec<FqElement>> {
    let n = ring.num_vars();
    let field = ring.field();
    images
        .iter()
        .map(|img| {
            let mut row = vec![field.zero(); n];
            for (exps, coeff) in img.terms() {
                if let Some(v) = single_var(exps) {
                    row[v] = coeff.clone();
                }
            }
            row
        })
        .collect()
}

/// A bare variable with coefficient one, the shape of non-replaced slots.
fn is_unit_monomial(f: &Polynomial) -> bool {
    f.num_terms() == 1
        && f.terms()
            .all(|(e, c)| c.is_one() && single_var(e).is_some())
}

fn single_var(exps: &[u32]) -> Option<usize> {
    let mut found = None;
    for (i, &e) in exps.iter().enumerate() {
        match (e, found) {
            (0, _) => {}
            (1, None) => found = Some(i),
            _ => return None,
        }
    }
    found
}

fn linear_part_nonsingular(ring: &PolyRing, images: &[Polynomial]) -> bool {
    let matrix = linear_coefficients(ring, images);
    linalg::is_nonsingular(&matrix, ring.field())
}

/// Whether a ring endomorphism has an invertible degree-one part, i.e. is a
/// linear automorphism. Intended for verification and tests.
pub fn is_linear_automorphism(map: &RingMap) -> bool {
    map.source() == map.target()
        && map
            .images()
            .iter()
            .all(|img| img.total_degree().unwrap_or(0) <= 1)
        && linear_part_nonsingular(map.source(), map.images())
}

/// The inverse of a degree-<=1 automorphism: with images `A x + b`, the
/// inverse sends `x` to `A^{-1}(x - b)`.
pub(crate) fn invert_linear_map(map: &RingMap) -> Result<RingMap> {
    let ring = map.source().clone();
    if map.target() != &ring {
        return Err(Error::Contract(
            "only ring automorphisms can be inverted here".into(),
        ));
    }
    let n = ring.num_vars();
    let field = ring.field().clone();
    for img in map.images() {
        if img.total_degree().unwrap_or(0) > 1 {
            return Err(Error::Contract("map is not linear".into()));
        }
    }
    let a = linear_coefficients(&ring, map.images());
    let inv = linalg::invert(&a, &field)
        .ok_or_else(|| Error::Contract("linear part is singular".into()))?;
    let consts: Vec<FqElement> = map
        .images()
        .iter()
        .map(|img| {
            img.terms()
                .find(|(e, _)| e.iter().all(|&x| x == 0))
                .map(|(_, c)| c.clone())
                .unwrap_or_else(|| field.zero())
        })
        .collect();
    let images: Vec<Polynomial> = (0..n)
        .map(|i| {
            let mut acc = ring.zero();
            for j in 0..n {
                if !inv[i][j].is_zero() {
                    let shifted = ring.var(j).sub(&ring.constant(consts[j].clone()));
                    acc = acc.add(&shifted.scale(&inv[i][j]));
                }
            }
            acc
        })
        .collect();
    RingMap::new(ring.clone(), ring.clone(), images)
}

/// A generic projection dropping `n_drop` dimensions: coordinate change,
/// then elimination of the first `n_drop` variables. Returns the point map
/// as a `RingMap` from the projected ring into the original one, and the
/// defining ideal of the (closure of the) image. No attempt is made to
/// verify genericity.
pub fn generic_projection(
    n_drop: usize,
    ideal: &Ideal,
    opts: &CoordinateChangeOptions,
) -> Result<(RingMap, Ideal)> {
    let ring = ideal.ring();
    let n = ring.num_vars();
    if n_drop >= n {
        return Err(Error::Contract(format!(
            "cannot drop {n_drop} of {n} variables"
        )));
    }
    let change = random_coordinate_change(ring, opts)?;
    let inverse = invert_linear_map(&change)?;
    let changed = Ideal::new(
        ring.clone(),
        ideal
            .generators()
            .iter()
            .map(|g| change.apply(g))
            .collect::<Result<Vec<_>>>()?,
    )?;
    if n_drop == 0 {
        let map = RingMap::new(ring.clone(), ring.clone(), inverse.images().to_vec())?;
        return Ok((map, changed));
    }
    let keep: Vec<usize> = (n_drop..n).collect();
    let projected = changed.eliminate(&keep)?;
    let map = RingMap::new(
        projected.ring().clone(),
        ring.clone(),
        inverse.images()[n_drop..].to_vec(),
    )?;
    Ok((map, projected))
}

/// Projects to a hypersurface: drops `codim - 1` variables but returns only
/// one nonzero equation of the elimination ideal, the first one the
/// elimination basis produces, instead of the whole image ideal. When the
/// codimension is not supplied, the configured dimension callback computes
/// it.
pub fn projection_to_hypersurface(
    ideal: &Ideal,
    codimension: Option<usize>,
    dim_fn: DimensionFunction,
    opts: &CoordinateChangeOptions,
    budget: Option<u64>,
) -> Result<(RingMap, Ideal)> {
    let ring = ideal.ring();
    let n = ring.num_vars();
    if ideal.generators().iter().all(|g| g.is_zero()) || ideal.generators().is_empty() {
        return Err(Error::Contract("projection of the zero ideal".into()));
    }
    let c = match codimension {
        Some(c) => c as i64,
        None => {
            let d = dim_fn.evaluate(ideal, opts.seed);
            if d < 0 {
                return Err(Error::Contract("projection of the unit ideal".into()));
            }
            n as i64 - d
        }
    };
    if c <= 0 {
        return Err(Error::Contract(format!("codimension {c} must be positive")));
    }
    let c = c as usize;
    if c == 1 {
        // already a hypersurface: coordinate change only
        return generic_projection(0, ideal, opts);
    }
    if c > n {
        return Err(Error::Contract(format!(
            "codimension {c} exceeds the variable count {n}"
        )));
    }
    let n_drop = c - 1;
    let change = random_coordinate_change(ring, opts)?;
    let inverse = invert_linear_map(&change)?;
    let changed = Ideal::new(
        ring.clone(),
        ideal
            .generators()
            .iter()
            .map(|g| change.apply(g))
            .collect::<Result<Vec<_>>>()?,
    )?;
    let keep: Vec<usize> = (n_drop..n).collect();
    let budget = budget.or(Some(DEFAULT_HYPERSURFACE_BUDGET));
    let equation = changed.eliminate_one(&keep, budget)?;
    if equation.is_constant() {
        return Err(Error::Contract("projection of the unit ideal".into()));
    }
    let small = equation.ring().clone();
    let hypersurface = Ideal::new(small.clone(), vec![equation])?;
    let map = RingMap::new(small, ring.clone(), inverse.images()[n_drop..].to_vec())?;
    Ok((map, hypersurface))
}

/// Carries a point of `V(I)` through a projection map: evaluates each image
/// of the returned `RingMap` at the point.
pub fn project_point(map: &RingMap, coords: &[FqElement]) -> Result<Vec<FqElement>> {
    map.images()
        .iter()
        .map(|img| img.evaluate(coords))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::make_prime_field;
    use crate::parse::parse_polynomial;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ring(p: u64, vars: &[&str]) -> PolyRing {
        PolyRing::new(make_prime_field(p).unwrap(), vars).unwrap()
    }

    fn count_non_monomial(map: &RingMap) -> usize {
        map.images()
            .iter()
            .filter(|img| {
                // a bare variable, possibly plus a constant, counts as monomial
                let vars: Vec<_> = img
                    .terms()
                    .filter(|(e, _)| e.iter().any(|&x| x > 0))
                    .collect();
                !(vars.len() == 1 && vars[0].1.is_one() && super::single_var(vars[0].0).is_some())
            })
            .count()
    }

    #[test]
    fn coordinate_change_contract() {
        let r = ring(11, &["x", "y", "z"]);
        for seed in 0..50 {
            let opts = CoordinateChangeOptions {
                seed,
                ..CoordinateChangeOptions::default()
            };
            let map = random_coordinate_change(&r, &opts).unwrap();
            for img in map.images() {
                assert!(img.total_degree().unwrap_or(0) <= 1);
                assert!(img
                    .terms()
                    .all(|(e, _)| e.iter().map(|&x| x as u64).sum::<u64>() <= 1));
                // homogeneous default: no constant terms
                assert!(img.terms().all(|(e, _)| e.iter().any(|&x| x > 0)));
            }
            assert!(linear_part_nonsingular(&r, map.images()));
        }
    }

    #[test]
    fn max_coordinates_to_replace_counts() {
        let r = ring(11, &["x", "y", "z"]);
        for m in 0..=3usize {
            for seed in 0..20 {
                let opts = CoordinateChangeOptions {
                    max_coordinates_to_replace: Some(m),
                    seed,
                    ..CoordinateChangeOptions::default()
                };
                let map = random_coordinate_change(&r, &opts).unwrap();
                assert_eq!(
                    count_non_monomial(&map),
                    m,
                    "seed {seed}: wanted exactly {m} replaced, got map {map}"
                );
            }
        }
    }

    #[test]
    fn homogeneous_off_adds_constants_everywhere() {
        let r = ring(11, &["x", "y", "z"]);
        for seed in 0..30 {
            let opts = CoordinateChangeOptions {
                homogeneous: false,
                max_coordinates_to_replace: Some(1),
                seed,
                ..CoordinateChangeOptions::default()
            };
            let map = random_coordinate_change(&r, &opts).unwrap();
            for img in map.images() {
                let has_constant = img
                    .terms()
                    .any(|(e, c)| e.iter().all(|&x| x == 0) && !c.is_zero());
                assert!(has_constant, "seed {seed}: image {img} lacks a constant");
            }
        }
    }

    #[test]
    fn inverse_composes_to_identity() {
        let r = ring(11, &["x", "y", "z"]);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for seed in 0..10 {
            let opts = CoordinateChangeOptions {
                homogeneous: seed % 2 == 0,
                seed,
                ..CoordinateChangeOptions::default()
            };
            let map = random_coordinate_change(&r, &opts).unwrap();
            let inv = invert_linear_map(&map).unwrap();
            let composite = map.compose(&inv).unwrap();
            for (i, img) in composite.images().iter().enumerate() {
                assert_eq!(img, &r.var(i), "seed {seed}");
            }
            let f = crate::poly::random_form(&r, 2, &mut rng);
            assert_eq!(inv.apply(&map.apply(&f).unwrap()).unwrap(), f);
        }
    }

    #[test]
    fn projection_of_paper_curve_shape() {
        // a curve in 4-space projected to the plane: expect a nonzero ideal
        // in two variables whose generators pull back into I
        let r = ring(5, &["x", "y", "z", "w"]);
        let gens = vec![
            parse_polynomial(&r, "x").unwrap(),
            parse_polynomial(&r, "y^2").unwrap(),
            parse_polynomial(&r, "w^3+x^2").unwrap(),
        ];
        let i = Ideal::new(r.clone(), gens).unwrap();
        let mut successes = 0;
        for seed in 0..5 {
            let opts = CoordinateChangeOptions {
                seed,
                ..CoordinateChangeOptions::default()
            };
            let (map, proj) = generic_projection(2, &i, &opts).unwrap();
            assert_eq!(proj.ring().num_vars(), 2);
            assert_eq!(proj.ring().var_names(), vec!["z", "w"]);
            if !proj.generators().is_empty() {
                successes += 1;
            }
            for g in proj.generators() {
                let back = map.apply(g).unwrap();
                assert!(
                    i.is_member(&back).unwrap(),
                    "seed {seed}: {g} pulled back out of I"
                );
            }
        }
        assert!(
            successes >= 4,
            "projection almost always captures the curve image"
        );
    }

    #[test]
    fn drop_zero_returns_changed_ideal() {
        let r = ring(5, &["x", "y"]);
        let i = Ideal::new(r.clone(), vec![parse_polynomial(&r, "x^2-y").unwrap()]).unwrap();
        let opts = CoordinateChangeOptions {
            seed: 7,
            ..CoordinateChangeOptions::default()
        };
        let (map, changed) = generic_projection(0, &i, &opts).unwrap();
        assert_eq!(changed.ring(), &r);
        assert_eq!(map.images().len(), 2);
        assert_eq!(changed.generators().len(), 1);
        // pull back through the returned map lands in I
        for g in changed.generators() {
            let back = map.apply(g).unwrap();
            assert!(i.is_member(&back).unwrap());
        }
    }

    #[test]
    fn projecting_a_generic_line_covers_the_axis() {
        // V(x) in the plane maps onto the target line for most changes
        let r = ring(101, &["x", "y"]);
        let i = Ideal::new(r.clone(), vec![r.var(0)]).unwrap();
        let mut zero_count = 0;
        for seed in 0..10 {
            let opts = CoordinateChangeOptions {
                seed,
                ..CoordinateChangeOptions::default()
            };
            let (_, proj) = generic_projection(1, &i, &opts).unwrap();
            if proj.generators().is_empty() {
                zero_count += 1;
            }
        }
        assert!(
            zero_count >= 8,
            "only {zero_count}/10 projections were surjective"
        );
    }

    #[test]
    fn hypersurface_projection_known_codimension() {
        // the z-axis in 3-space, codimension 2
        let r = ring(5, &["x", "y", "z"]);
        let i = Ideal::new(r.clone(), vec![r.var(0), r.var(1)]).unwrap();
        let opts = CoordinateChangeOptions {
            seed: 3,
            ..CoordinateChangeOptions::default()
        };
        let (map, h) =
            projection_to_hypersurface(&i, Some(2), DimensionFunction::Exact, &opts, None).unwrap();
        assert_eq!(h.ring().num_vars(), 2);
        assert_eq!(h.generators().len(), 1);
        let g = &h.generators()[0];
        assert!(!g.is_constant());
        let back = map.apply(g).unwrap();
        assert!(i.is_member(&back).unwrap());

        // oracle: the exact image ideal contains the returned equation's variety,
        // so the returned equation is a member of the full elimination ideal
        let change_free_check = {
            // the generator must vanish on the projected points of V(I)
            let mut rng = ChaCha8Rng::seed_from_u64(1);
            let field = r.field().clone();
            let mut ok = true;
            for _ in 0..20 {
                let t = field.random_element(&mut rng);
                let coords = vec![field.zero(), field.zero(), t];
                let projected = project_point(&map, &coords).unwrap();
                if !g.evaluate(&projected).unwrap().is_zero() {
                    ok = false;
                }
            }
            ok
        };
        assert!(change_free_check);
    }

    #[test]
    fn hypersurface_projection_computes_codimension() {
        let r = ring(5, &["x", "y", "z"]);
        let i = Ideal::new(
            r.clone(),
            vec![
                parse_polynomial(&r, "x^2-y").unwrap(),
                parse_polynomial(&r, "x^3-z").unwrap(),
            ],
        )
        .unwrap();
        let opts = CoordinateChangeOptions {
            seed: 11,
            ..CoordinateChangeOptions::default()
        };
        let (map, h) =
            projection_to_hypersurface(&i, None, DimensionFunction::Exact, &opts, None).unwrap();
        assert_eq!(h.ring().num_vars(), 2);
        let g = &h.generators()[0];
        let back = map.apply(g).unwrap();
        assert!(i.is_member(&back).unwrap());
    }

    #[test]
    fn hypersurface_codim_one_keeps_everything() {
        let r = ring(5, &["x", "y"]);
        let i = Ideal::new(r.clone(), vec![parse_polynomial(&r, "x^2+y^2-1").unwrap()]).unwrap();
        let opts = CoordinateChangeOptions {
            seed: 2,
            ..CoordinateChangeOptions::default()
        };
        let (_, h) =
            projection_to_hypersurface(&i, Some(1), DimensionFunction::Exact, &opts, None).unwrap();
        assert_eq!(h.ring().num_vars(), 2);
        assert_eq!(h.generators().len(), 1);
    }

    #[test]
    fn contract_errors() {
        let r = ring(5, &["x", "y"]);
        let i = Ideal::new(r.clone(), vec![r.var(0)]).unwrap();
        let opts = CoordinateChangeOptions::default();
        assert!(matches!(
            generic_projection(2, &i, &opts),
            Err(Error::Contract(_))
        ));
        assert!(matches!(
            projection_to_hypersurface(&i, Some(0), DimensionFunction::Exact, &opts, None),
            Err(Error::Contract(_))
        ));
        let zero = Ideal::new(r.clone(), vec![]).unwrap();
        assert!(matches!(
            projection_to_hypersurface(&zero, None, DimensionFunction::Exact, &opts, None),
            Err(Error::Contract(_))
        ));
    }
}

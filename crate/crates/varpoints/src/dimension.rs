//! Probabilistic dimension estimation by intersecting with random linear
//! spaces.
//!
//! A single estimate cuts `V(I)` with random linear spaces of ascending
//! dimension `t` (each cut uses `n - t` full random linear forms) and stops
//! at the first cut that is nonempty over the algebraic closure; that first
//! `t` pins the dimension at `n - t`. Degenerate draws can only make the
//! cut nonempty too early, so the estimate errs high; several estimates are
//! averaged with rounding down to compensate.
//!
//! For homogeneous ideals every cut through the origin is nonempty, so the
//! trivial-cut test becomes "the cut is at most the origin" and the count
//! shifts by one.

use crate::error::{Error, Result};
use crate::ff::make_extension;
use crate::gb::Ideal;
use crate::poly::{random_linear_form, PolyRing, Polynomial, Replacement};
use crate::rng::{derive_rng, stream};

/// Options for [`dim_via_bezout`]. Linear forms are always `Full`.
#[derive(Clone, Debug)]
pub struct DimensionOptions {
    /// How many independent estimates to average; defaults to 3, or 5 when
    /// `homogeneous` is set.
    pub intersection_attempts: Option<usize>,
    /// Fields smaller than this are replaced by an extension before drawing
    /// forms, to keep the supply of linear spaces rich enough.
    pub minimum_field_size: u64,
    /// Cut with homogeneous forms through the origin.
    pub homogeneous: bool,
    pub seed: u64,
}

impl Default for DimensionOptions {
    fn default() -> Self {
        DimensionOptions {
            intersection_attempts: None,
            minimum_field_size: 31,
            homogeneous: false,
            seed: 0,
        }
    }
}

impl DimensionOptions {
    fn attempts(&self) -> usize {
        self.intersection_attempts
            .unwrap_or(if self.homogeneous { 5 } else { 3 })
    }

    fn validate(&self) -> Result<()> {
        if self.intersection_attempts == Some(0) {
            return Err(Error::Contract("intersection_attempts must be >= 1".into()));
        }
        if self.minimum_field_size < 2 {
            return Err(Error::Contract("minimum_field_size must be >= 2".into()));
        }
        Ok(())
    }
}

/// Estimates the dimension of `V(I)`, returning -1 for the unit ideal.
/// Estimates are averaged over `intersection_attempts` runs with floor
/// rounding, since single runs tend to overestimate.
pub fn dim_via_bezout(ideal: &Ideal, opts: &DimensionOptions) -> Result<i64> {
    opts.validate()?;
    let ring = ideal.ring();
    let field = ring.field();

    // small coefficient fields get too few linear spaces; draw the forms
    // over an extension instead (prime fields only, towers are out of reach)
    let (work_ring, work_gens) = if field.order() < opts.minimum_field_size && field.degree() == 1 {
        let mut k = 2usize;
        let mut order = field.order() * field.order();
        while order < opts.minimum_field_size {
            order *= field.order();
            k += 1;
        }
        let mut ext_rng = derive_rng(opts.seed, stream::DIM_EXTENSION, 0);
        let ext = make_extension(field, k, &mut ext_rng)?;
        let names = ring.var_names();
        let work = PolyRing::with_order(ext, &names, ring.order())?;
        let gens = ideal
            .generators()
            .iter()
            .map(|g| g.embed_into(&work))
            .collect::<Result<Vec<_>>>()?;
        (work, gens)
    } else {
        (ring.clone(), ideal.generators().to_vec())
    };
    let work_ideal = Ideal::new(work_ring.clone(), work_gens)?;

    let attempts = opts.attempts();
    let mut total: i64 = 0;
    for attempt in 0..attempts {
        let mut rng = derive_rng(opts.seed, stream::DIM_ESTIMATE, attempt as u64);
        total += single_estimate(&work_ideal, opts.homogeneous, &mut rng)?;
    }
    Ok(total.div_euclid(attempts as i64))
}

/// One sweep over ascending linear-space dimensions.
fn single_estimate<R: rand::Rng + ?Sized>(
    ideal: &Ideal,
    homogeneous: bool,
    rng: &mut R,
) -> Result<i64> {
    let ring = ideal.ring();
    let n = ring.num_vars();
    for t in 0..=n {
        let forms: Vec<Polynomial> = (0..n - t)
            .map(|_| random_linear_form(ring, Replacement::Full, homogeneous, rng))
            .collect();
        let cut = ideal.extended(forms)?;
        let trivial = if homogeneous {
            cut.contains_one() || cut.is_zero_dimensional()
        } else {
            cut.contains_one()
        };
        if !trivial {
            let est = if homogeneous {
                n as i64 + 1 - t as i64
            } else {
                n as i64 - t as i64
            };
            return Ok(est.min(n as i64));
        }
    }
    // every cut was trivial: empty variety, or an origin-only cone
    if !homogeneous || ideal.contains_one() {
        Ok(-1)
    } else {
        Ok(0)
    }
}

/// The dimension callbacks the point search can be configured with: the
/// exact combinatorial computation or the probabilistic estimate with
/// default options.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimensionFunction {
    Exact,
    Bezout,
}

impl DimensionFunction {
    pub fn evaluate(&self, ideal: &Ideal, seed: u64) -> i64 {
        match self {
            DimensionFunction::Exact => ideal.krull_dim(),
            DimensionFunction::Bezout => {
                let opts = DimensionOptions {
                    seed,
                    ..DimensionOptions::default()
                };
                dim_via_bezout(ideal, &opts).expect("default options are valid")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::make_prime_field;
    use crate::parse::parse_polynomial;
    use crate::poly::random_form;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ring(p: u64, vars: &[&str]) -> PolyRing {
        PolyRing::new(make_prime_field(p).unwrap(), vars).unwrap()
    }

    #[test]
    fn hypersurface_in_three_variables() {
        let r = ring(101, &["x", "y", "z"]);
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let quadric = random_form(&r, 2, &mut rng);
        let i = Ideal::new(r.clone(), vec![quadric]).unwrap();
        let opts = DimensionOptions {
            seed: 42,
            ..DimensionOptions::default()
        };
        assert_eq!(dim_via_bezout(&i, &opts).unwrap(), 2);
    }

    #[test]
    fn unit_and_zero_ideals() {
        let r = ring(101, &["x", "y"]);
        let unit = Ideal::new(
            r.clone(),
            vec![
                parse_polynomial(&r, "x").unwrap(),
                parse_polynomial(&r, "x+1").unwrap(),
            ],
        )
        .unwrap();
        let opts = DimensionOptions::default();
        assert_eq!(dim_via_bezout(&unit, &opts).unwrap(), -1);

        let zero = Ideal::new(r.clone(), vec![]).unwrap();
        assert_eq!(dim_via_bezout(&zero, &opts).unwrap(), 2);
    }

    #[test]
    fn line_in_the_plane_most_seeds() {
        let r = ring(101, &["x", "y"]);
        let i = Ideal::new(r.clone(), vec![r.var(0)]).unwrap();
        let mut hits = 0;
        for seed in 0..20 {
            let opts = DimensionOptions {
                seed,
                ..DimensionOptions::default()
            };
            if dim_via_bezout(&i, &opts).unwrap() == 1 {
                hits += 1;
            }
        }
        assert!(hits >= 18, "only {hits}/20 seeds estimated dim 1");
    }

    #[test]
    fn agrees_with_krull_dim_on_complete_intersections() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let mut agree = 0;
        let total = 10;
        for trial in 0..total {
            let r = ring(101, &["x", "y", "z", "w"]);
            let c = 1 + (trial % 2);
            let gens: Vec<Polynomial> = (0..c).map(|_| random_form(&r, 2, &mut rng)).collect();
            let i = Ideal::new(r.clone(), gens).unwrap();
            let opts = DimensionOptions {
                seed: 1000 + trial as u64,
                ..DimensionOptions::default()
            };
            if dim_via_bezout(&i, &opts).unwrap() == i.krull_dim() {
                agree += 1;
            }
        }
        assert!(agree >= total - 1, "agreement {agree}/{total}");
    }

    #[test]
    fn homogeneous_mode_on_a_cone() {
        // V(x) in the plane is a line through the origin
        let r = ring(101, &["x", "y"]);
        let i = Ideal::new(r.clone(), vec![r.var(0)]).unwrap();
        let mut hits = 0;
        for seed in 0..10 {
            let opts = DimensionOptions {
                homogeneous: true,
                seed,
                ..DimensionOptions::default()
            };
            if dim_via_bezout(&i, &opts).unwrap() == 1 {
                hits += 1;
            }
        }
        assert!(hits >= 9, "homogeneous estimate wrong too often: {hits}/10");

        // the irrelevant ideal cuts out only the origin
        let origin = Ideal::new(r.clone(), vec![r.var(0), r.var(1)]).unwrap();
        let opts = DimensionOptions {
            homogeneous: true,
            seed: 3,
            ..DimensionOptions::default()
        };
        assert_eq!(dim_via_bezout(&origin, &opts).unwrap(), 0);
    }

    #[test]
    fn small_field_gets_extended() {
        // over F_3 the forms are drawn from an order >= 31 extension; the
        // answer still refers to the original variety
        let r = ring(3, &["x", "y"]);
        let i = Ideal::new(r.clone(), vec![r.var(0)]).unwrap();
        let mut hits = 0;
        for seed in 0..10 {
            let opts = DimensionOptions {
                seed,
                ..DimensionOptions::default()
            };
            if dim_via_bezout(&i, &opts).unwrap() == 1 {
                hits += 1;
            }
        }
        assert!(hits >= 9);
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let r = ring(101, &["x", "y", "z"]);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let i = Ideal::new(r.clone(), vec![random_form(&r, 2, &mut rng)]).unwrap();
        let opts = DimensionOptions {
            seed: 5,
            ..DimensionOptions::default()
        };
        assert_eq!(
            dim_via_bezout(&i, &opts).unwrap(),
            dim_via_bezout(&i, &opts).unwrap()
        );
    }

    #[test]
    fn callback_selection() {
        let r = ring(101, &["x", "y"]);
        let i = Ideal::new(r.clone(), vec![r.var(0)]).unwrap();
        assert_eq!(DimensionFunction::Exact.evaluate(&i, 0), 1);
        let b = DimensionFunction::Bezout.evaluate(&i, 0);
        assert!((0..=2).contains(&b));
    }

    #[test]
    fn invalid_options_rejected() {
        let r = ring(101, &["x"]);
        let i = Ideal::new(r.clone(), vec![]).unwrap();
        let opts = DimensionOptions {
            intersection_attempts: Some(0),
            ..DimensionOptions::default()
        };
        assert!(matches!(dim_via_bezout(&i, &opts), Err(Error::Contract(_))));
    }
}

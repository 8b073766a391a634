//! Built-in oracle suite: every strategy's output is checked against
//! exhaustive enumeration of `V(I)` over tiny fields.

use rand::Rng;

use crate::error::Result;
use crate::ff::{make_prime_field, FqElement};
use crate::gb::Ideal;
use crate::points::{random_points, PointSearchOptions, Strategy};
use crate::poly::{PolyRing, Polynomial};
use crate::rng::derive_rng;

/// Outcome of [`run_selftest`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SelftestReport {
    pub cases: usize,
    pub failures: usize,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Enumerates `V(I)` over the base field by walking all of `F_q^n`.
fn enumerate_variety(ideal: &Ideal) -> Vec<Vec<FqElement>> {
    let ring = ideal.ring();
    let field = ring.field();
    let n = ring.num_vars();
    let q = field.order();
    let mut out = Vec::new();
    let total = q.pow(n as u32);
    for mut idx in 0..total {
        let mut coords = Vec::with_capacity(n);
        for _ in 0..n {
            let digit = idx % q;
            idx /= q;
            coords.push(field.from_u64(digit));
        }
        if ideal
            .generators()
            .iter()
            .all(|g| g.evaluate(&coords).map(|v| v.is_zero()).unwrap_or(false))
        {
            out.push(coords);
        }
    }
    out
}

/// Runs randomized point searches over `F_3` and `F_5` in two and three
/// variables and verifies every returned point against the enumerated
/// variety; empty varieties must come back empty. Deterministic.
pub fn run_selftest(seed: u64) -> Result<SelftestReport> {
    let mut cases = 0;
    let mut failures = 0;

    for &q in &[3u64, 5] {
        let field = make_prime_field(q)?;
        for n in [2usize, 3] {
            let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
            let name_refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let ring = PolyRing::new(field.clone(), &name_refs)?;
            for trial in 0..6u64 {
                let mut rng = derive_rng(seed, 0x5e1f, q * 1000 + n as u64 * 100 + trial);
                let gen_count = 1 + (trial % 2) as usize;
                let gens: Vec<Polynomial> = (0..gen_count)
                    .map(|_| {
                        let f =
                            crate::poly::random_form(&ring, 1 + rng.random_range(0..2), &mut rng);
                        if rng.random_range(0..2) == 0 {
                            f.add(&ring.constant(ring.field().random_element(&mut rng)))
                        } else {
                            f
                        }
                    })
                    .collect();
                let ideal = Ideal::new(ring.clone(), gens)?;
                let truth = enumerate_variety(&ideal);

                for strategy in [
                    Strategy::Default,
                    Strategy::BruteForce,
                    Strategy::LinearIntersection,
                ] {
                    cases += 1;
                    let opts = PointSearchOptions {
                        strategy,
                        point_check_attempts: Some(if strategy == Strategy::BruteForce {
                            200
                        } else {
                            5
                        }),
                        seed: seed ^ (trial << 8) ^ q,
                        ..PointSearchOptions::default()
                    };
                    let pts = match random_points(2, &ideal, &opts) {
                        Ok(p) => p,
                        Err(_) => {
                            failures += 1;
                            continue;
                        }
                    };
                    for p in &pts {
                        let coords = p.coords().to_vec();
                        if !truth.contains(&coords) {
                            failures += 1;
                        }
                    }
                    if truth.is_empty() && !pts.is_empty() {
                        failures += 1;
                    }
                }
            }
        }
    }
    Ok(SelftestReport { cases, failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selftest_passes() {
        let report = run_selftest(0).unwrap();
        assert!(report.cases > 50);
        assert_eq!(report.failures, 0);
    }
}

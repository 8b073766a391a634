//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test -p varpoints-cli --test acceptance`.

use std::io::Write;
use std::process::{Command, Output, Stdio};
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use varpoints::dimension::{dim_via_bezout, DimensionFunction, DimensionOptions};
use varpoints::error::Error;
use varpoints::ff::{make_prime_field, FqElement};
use varpoints::gb::Ideal;
use varpoints::minors::{extend_ideal_by_nonzero_minor, find_nonzero_minor};
use varpoints::parse::parse_polynomial;
use varpoints::points::{
    brute_force_search, estimate_line_hit_rate, random_points, PointSearchOptions, Strategy,
};
use varpoints::poly::{random_form, PolyRing, Polynomial};
use varpoints::solve::AffinePoint;
use varpoints::transform::{
    generic_projection, project_point, projection_to_hypersurface, random_coordinate_change,
    CoordinateChangeOptions,
};

fn ring(p: u64, vars: &[&str]) -> PolyRing {
    PolyRing::new(make_prime_field(p).unwrap(), vars).unwrap()
}

fn ideal(r: &PolyRing, gens: &[&str]) -> Ideal {
    let gens = gens
        .iter()
        .map(|s| parse_polynomial(r, s).unwrap())
        .collect();
    Ideal::new(r.clone(), gens).unwrap()
}

fn paper_curve() -> Ideal {
    let r = ring(101, &["x", "y", "z"]);
    ideal(&r, &["x^3+y^2+1", "z^3-x^2-y^2+2"])
}

#[test]
fn criterion_01_point_soundness_end_to_end() {
    let i = paper_curve();
    for seed in 0..100u64 {
        let start = Instant::now();
        let opts = PointSearchOptions {
            seed,
            ..PointSearchOptions::default()
        };
        let pts = random_points(1, &i, &opts).unwrap();
        assert!(!pts.is_empty(), "seed {seed}: no point found");
        for p in &pts {
            assert!(p.lies_on(&i).unwrap(), "seed {seed}: unsound point {p}");
        }
        assert!(
            start.elapsed() < Duration::from_secs(5),
            "seed {seed}: run exceeded 5 s"
        );
    }
    let field = i.ring().field().clone();
    let known = AffinePoint::new(
        field.clone(),
        vec![field.from_i64(-1), field.from_i64(0), field.from_i64(-1)],
    )
    .unwrap();
    assert!(known.lies_on(&i).unwrap());
    println!("criterion 1 (point soundness end-to-end, 100 seeds): pass");
}

#[test]
fn criterion_02_brute_force_scarcity() {
    let i = paper_curve();
    let mut empties = 0;
    for seed in 0..100u64 {
        let opts = PointSearchOptions {
            strategy: Strategy::BruteForce,
            point_check_attempts: Some(10),
            seed,
            ..PointSearchOptions::default()
        };
        if random_points(1, &i, &opts).unwrap().is_empty() {
            empties += 1;
        }
    }
    assert!(
        empties >= 80,
        "only {empties}/100 seeds came back empty at 10 attempts"
    );

    let mut found = 0;
    for seed in 0..100u64 {
        let pts = brute_force_search(1, &i, 100_000, 1, seed).unwrap();
        if !pts.is_empty() {
            found += 1;
        }
    }
    assert!(
        found >= 95,
        "only {found}/100 seeds found a point at 100000 attempts"
    );
    println!("criterion 2 (brute-force scarcity {empties}/100 empty, {found}/100 found): pass");
}

fn enumerate_variety(i: &Ideal) -> Vec<Vec<u64>> {
    let field = i.ring().field().clone();
    let n = i.ring().num_vars();
    let q = field.order();
    let mut out = Vec::new();
    for raw in 0..q.pow(n as u32) {
        let mut idx = raw;
        let mut coords = Vec::with_capacity(n);
        for _ in 0..n {
            coords.push(field.from_u64(idx % q));
            idx /= q;
        }
        if i.generators()
            .iter()
            .all(|g| g.evaluate(&coords).unwrap().is_zero())
        {
            out.push(coords.iter().map(|c| c.residue().unwrap()).collect());
        }
    }
    out
}

#[test]
fn criterion_03_oracle_equivalence_tiny_scale() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut case = 0;
    'outer: for trial in 0..1000 {
        if case == 50 {
            break;
        }
        let q = if trial % 2 == 0 { 3 } else { 5 };
        let n = 2 + (trial / 2) % 2;
        let names: Vec<String> = (0..n).map(|k| format!("x{k}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let r = PolyRing::new(make_prime_field(q).unwrap(), &refs).unwrap();
        let gens: Vec<Polynomial> = (0..1 + trial % 2)
            .map(|_| {
                let f = random_form(&r, 1 + (trial % 2) as u32, &mut rng);
                f.add(&r.constant(r.field().random_element(&mut rng)))
            })
            .collect();
        let i = Ideal::new(r, gens).unwrap();
        case += 1;
        let truth = enumerate_variety(&i);
        for strategy in [
            Strategy::Default,
            Strategy::BruteForce,
            Strategy::LinearIntersection,
        ] {
            let opts = PointSearchOptions {
                strategy,
                point_check_attempts: Some(if strategy == Strategy::BruteForce {
                    150
                } else {
                    5
                }),
                seed: trial as u64,
                ..PointSearchOptions::default()
            };
            let pts = random_points(2, &i, &opts).unwrap();
            if truth.is_empty() {
                assert!(
                    pts.is_empty(),
                    "trial {trial} {strategy:?}: empty variety gave points"
                );
                continue;
            }
            for p in &pts {
                let coords: Vec<u64> = p.coords().iter().map(|c| c.residue().unwrap()).collect();
                assert!(
                    truth.contains(&coords),
                    "trial {trial} {strategy:?}: point {p} not in the enumerated variety"
                );
            }
            if start.elapsed() > Duration::from_secs(55) {
                break 'outer;
            }
        }
    }
    assert!(case >= 50, "wanted 50 ideals, processed {case}");
    assert!(start.elapsed() < Duration::from_secs(60));
    println!("criterion 3 (oracle equivalence on {case} tiny ideals): pass");
}

#[test]
fn criterion_04_extension_field_correctness() {
    let r = ring(3, &["x"]);
    let i = ideal(&r, &["x^2+1"]);
    let opts = PointSearchOptions {
        extend_field: true,
        seed: 1,
        ..PointSearchOptions::default()
    };
    let pts = random_points(1, &i, &opts).unwrap();
    assert_eq!(pts.len(), 1);
    let p = &pts[0];
    assert_eq!(p.field().order(), 9);
    // oracle: brute force over all nine elements of the same field
    let gen_poly = &i.generators()[0];
    let satisfying: Vec<FqElement> = p
        .field()
        .elements()
        .filter(|e| {
            gen_poly
                .evaluate(std::slice::from_ref(e))
                .unwrap()
                .is_zero()
        })
        .collect();
    assert_eq!(satisfying.len(), 2);
    assert!(satisfying.contains(&p.coords()[0]));
    println!("criterion 4 (extension-field point verified by brute force over F_9): pass");
}

fn complete_intersection(seed: u64) -> (Ideal, i64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    use rand::Rng;
    let n = 4 + (rng.random_range(0..3u32) as usize); // 4..=6 variables
    let c = 1 + rng.random_range(0..3u32) as usize; // 1..=3 forms
    let names: Vec<String> = (0..n).map(|k| format!("x{k}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let r = PolyRing::new(make_prime_field(101).unwrap(), &refs).unwrap();
    let gens: Vec<Polynomial> = (0..c).map(|_| random_form(&r, 2, &mut rng)).collect();
    let i = Ideal::new(r, gens).unwrap();
    let expect = (n - c) as i64;
    (i, expect)
}

#[test]
fn criterion_05_dim_via_bezout_accuracy() {
    let mut default_hits = 0;
    let mut five_hits = 0;
    for seed in 0..30u64 {
        let (i, _) = complete_intersection(seed);
        let truth = i.krull_dim();

        let start = Instant::now();
        let d3 = dim_via_bezout(
            &i,
            &DimensionOptions {
                seed: 100 + seed,
                ..DimensionOptions::default()
            },
        )
        .unwrap();
        assert!(
            start.elapsed() < Duration::from_secs(2),
            "seed {seed}: single estimate over 2 s"
        );
        if d3 == truth {
            default_hits += 1;
        }

        let d5 = dim_via_bezout(
            &i,
            &DimensionOptions {
                intersection_attempts: Some(5),
                seed: 200 + seed,
                ..DimensionOptions::default()
            },
        )
        .unwrap();
        if d5 == truth {
            five_hits += 1;
        }
    }
    assert!(
        default_hits >= 27,
        "default attempts agreed only {default_hits}/30"
    );
    assert!(five_hits >= 30, "five attempts agreed only {five_hits}/30");
    println!(
        "criterion 5 (dimension estimate: {default_hits}/30 default, {five_hits}/30 at 5 attempts): pass"
    );
}

#[test]
fn criterion_05_slow_ten_variable_instance() {
    // slow tier: the 10-variable instance with forms of degree 2,2,2,3 and
    // a squared quadric, answer 5, budget 120 s
    let names: Vec<String> = (0..10).map(|k| format!("y{k}")).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let r = PolyRing::new(make_prime_field(101).unwrap(), &refs).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut gens = vec![
        random_form(&r, 2, &mut rng),
        random_form(&r, 2, &mut rng),
        random_form(&r, 2, &mut rng),
        random_form(&r, 3, &mut rng),
    ];
    let q = random_form(&r, 2, &mut rng);
    gens.push(q.mul(&q));
    let i = Ideal::new(r, gens).unwrap();
    let start = Instant::now();
    let d = dim_via_bezout(
        &i,
        &DimensionOptions {
            intersection_attempts: Some(1),
            seed: 7,
            ..DimensionOptions::default()
        },
    )
    .unwrap();
    let elapsed = start.elapsed();
    assert_eq!(d, 5, "ten-variable instance must estimate dimension 5");
    assert!(
        elapsed < Duration::from_secs(120),
        "exceeded the 120 s budget: {elapsed:?}"
    );
    println!("criterion 5 slow (10-variable instance = 5 in {elapsed:.2?}): pass");
}

#[test]
fn criterion_06_line_probe_rate() {
    let r = ring(101, &["x", "y"]);
    let cubic = parse_polynomial(&r, "y^2-x^3-x-1").unwrap();
    let mut sum = 0.0;
    for seed in 0..5u64 {
        sum += estimate_line_hit_rate(&cubic, 500, seed).unwrap();
    }
    let mean = sum / 5.0;
    let heuristic = 1.0 - (1.0 - 1.0 / 101.0f64).powi(101);
    assert!(
        (mean - heuristic).abs() <= 0.10,
        "seed-averaged rate {mean} vs heuristic {heuristic}"
    );
    println!("criterion 6 (line-probe rate {mean:.3} within 0.10 of {heuristic:.3}): pass");
}

#[test]
fn criterion_07_coordinate_change_contract() {
    let r = ring(11, &["x", "y", "z"]);
    let mut draws = 0;
    for seed in 0..125u64 {
        for (max_replace, homogeneous) in [
            (None, true),
            (None, false),
            (Some(1), true),
            (Some(1), false),
            (Some(2), true),
            (Some(2), false),
            (Some(0), true),
            (Some(5), true),
        ] {
            draws += 1;
            let opts = CoordinateChangeOptions {
                max_coordinates_to_replace: max_replace,
                homogeneous,
                seed: seed * 31 + draws,
                ..CoordinateChangeOptions::default()
            };
            let map = random_coordinate_change(&r, &opts).unwrap();
            let expected_replaced = max_replace.unwrap_or(3).min(3);
            let mut non_monomial = 0;
            for img in map.images() {
                assert!(img.total_degree().unwrap_or(0) <= 1, "image degree > 1");
                let linear_terms: Vec<_> = img
                    .terms()
                    .filter(|(e, _)| e.iter().any(|&x| x > 0))
                    .collect();
                let bare = linear_terms.len() == 1
                    && linear_terms[0].1.is_one()
                    && linear_terms[0].0.iter().filter(|&&x| x > 0).count() == 1
                    && linear_terms[0].0.iter().all(|&x| x <= 1);
                if !bare {
                    non_monomial += 1;
                }
                let has_constant = img
                    .terms()
                    .any(|(e, c)| e.iter().all(|&x| x == 0) && !c.is_zero());
                if homogeneous {
                    assert!(!has_constant, "homogeneous image with constant: {img}");
                } else {
                    assert!(has_constant, "inhomogeneous image without constant: {img}");
                }
            }
            assert_eq!(
                non_monomial, expected_replaced,
                "seed {seed} max_replace {max_replace:?}: replaced count"
            );
            assert!(
                varpoints::transform::is_linear_automorphism(&map),
                "singular linear part escaped the redraw loop"
            );
        }
    }
    assert!(draws >= 1000);
    println!("criterion 7 (coordinate-change contract over {draws} draws): pass");
}

fn graph_curve(p: u64, dim_space: usize, seed: u64) -> Ideal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<&str> = ["x", "y", "z", "w"][..dim_space].to_vec();
    let r = PolyRing::new(make_prime_field(p).unwrap(), &names).unwrap();
    // a graph curve: every coordinate after the first is a polynomial in x
    let mut gens = Vec::new();
    for v in 1..dim_space {
        let mut image = r.zero();
        for e in 0..3u32 {
            let c = r.field().random_element(&mut rng);
            let mut exps = vec![0u32; dim_space];
            exps[0] = e;
            image = image.add(&r.from_terms(vec![(exps, c)]));
        }
        gens.push(r.var(v).sub(&image));
    }
    Ideal::new(r, gens).unwrap()
}

#[test]
fn criterion_08_projection_soundness() {
    let mut principal_count = 0;
    let mut curves = 0;
    for seed in 0..20u64 {
        let p = if seed % 2 == 0 { 5 } else { 101 };
        let dim_space = 3 + (seed % 2) as usize;
        let i = graph_curve(p, dim_space, seed);
        curves += 1;
        let opts = CoordinateChangeOptions {
            seed: 500 + seed,
            ..CoordinateChangeOptions::default()
        };

        // generic projection down to a plane curve
        let n_drop = dim_space - 2;
        let (map, projected) = generic_projection(n_drop, &i, &opts).unwrap();
        for g in projected.generators() {
            let back = map.apply(g).unwrap();
            assert!(
                i.is_member(&back).unwrap(),
                "seed {seed}: projection pullback escaped I"
            );
        }

        // hypersurface projection: principal, and its generator pulls back
        let (hmap, hyper) = projection_to_hypersurface(
            &i,
            Some(dim_space - 1),
            DimensionFunction::Exact,
            &opts,
            None,
        )
        .unwrap();
        assert_eq!(hyper.generators().len(), 1);
        let back = hmap.apply(&hyper.generators()[0]).unwrap();
        assert!(i.is_member(&back).unwrap());

        // points on V(I) land on the projected varieties
        let popts = PointSearchOptions {
            seed: 900 + seed,
            ..PointSearchOptions::default()
        };
        for pt in random_points(2, &i, &popts).unwrap() {
            let image = project_point(&map, pt.coords()).unwrap();
            for g in projected.generators() {
                assert!(
                    g.evaluate(&image).unwrap().is_zero(),
                    "seed {seed}: projected point off the image variety"
                );
            }
            let himage = project_point(&hmap, pt.coords()).unwrap();
            assert!(hyper.generators()[0].evaluate(&himage).unwrap().is_zero());
        }
    }
    assert_eq!(curves, 20);

    // the 4-variable curve from the worked example: drop 2, expect a
    // nonzero ideal in two variables, principal for most seeds
    let r = ring(5, &["x", "y", "z", "w"]);
    let i = ideal(&r, &["x", "y^2", "w^3+x^2"]);
    for seed in 0..5u64 {
        let opts = CoordinateChangeOptions {
            seed,
            ..CoordinateChangeOptions::default()
        };
        let (map, projected) = generic_projection(2, &i, &opts).unwrap();
        assert_eq!(projected.ring().num_vars(), 2);
        assert!(
            !projected.generators().is_empty(),
            "seed {seed}: dropped to zero ideal"
        );
        if projected.generators().len() == 1 {
            principal_count += 1;
        }
        for g in projected.generators() {
            let back = map.apply(g).unwrap();
            assert!(i.is_member(&back).unwrap());
        }
    }
    assert!(
        principal_count >= 3,
        "paper-shaped projection rarely principal: {principal_count}/5"
    );
    println!("criterion 8 (projection soundness on 20 curves + worked example): pass");
}

#[test]
fn criterion_09_minor_extraction() {
    // cusp with n = 1
    let r = ring(101, &["x", "y"]);
    let cusp = ideal(&r, &["x^3-y^2"]);
    let m = cusp.jacobian();
    let opts = PointSearchOptions {
        seed: 3,
        ..PointSearchOptions::default()
    };
    let witness = find_nonzero_minor(1, &m, &cusp, 5, &opts).unwrap();
    let det = witness.submatrix.determinant().unwrap();
    assert!(!witness.point.evaluate(&det).unwrap().is_zero());
    let extended = extend_ideal_by_nonzero_minor(1, &m, &cusp, 5, &opts).unwrap();
    assert!(witness.point.lies_on(&cusp).unwrap());
    assert!(!witness.point.lies_on(&extended).unwrap());

    // ten smooth complete intersections with n = codim
    for seed in 0..10u64 {
        let p = if seed % 2 == 0 { 5 } else { 101 };
        let i = graph_curve(p, 3, 40 + seed);
        let codim = 2;
        let m = i.jacobian();
        let opts = PointSearchOptions {
            seed: 70 + seed,
            ..PointSearchOptions::default()
        };
        let witness = find_nonzero_minor(codim, &m, &i, 5, &opts).unwrap();
        let det = witness.submatrix.determinant().unwrap();
        assert!(
            !witness.point.evaluate(&det).unwrap().is_zero(),
            "seed {seed}"
        );
        let extended = extend_ideal_by_nonzero_minor(codim, &m, &i, 5, &opts).unwrap();
        assert!(
            !witness.point.lies_on(&extended).unwrap(),
            "seed {seed}: witness survived"
        );
    }
    println!("criterion 9 (minor extraction on the cusp and 10 smooth intersections): pass");
}

#[test]
fn criterion_09_slow_regular_in_codimension_one() {
    // slow tier: the 7-variable ideal whose Jacobian is 7x12; repeatedly
    // extending by 4x4 minors must drive the dimension from 3 down to 1
    // within 10 extensions, inside a 600 s budget
    let r = ring(101, &["x1", "x2", "x3", "x4", "x5", "x6", "x7"]);
    let i = ideal(
        &r,
        &[
            "x5*x6-x4*x7",
            "x1*x6-x2*x7",
            "x5^2-x1*x7",
            "x4*x5-x2*x7",
            "x4^2-x2*x6",
            "x1*x4-x2*x5",
            "x2*x3^3*x5+3*x2*x3^2*x7+8*x2^2*x5+3*x3*x4*x7-8*x4*x7+x6*x7",
            "x1*x3^3*x5+3*x1*x3^2*x7+8*x1*x2*x5+3*x3*x5*x7-8*x5*x7+x7^2",
            "x2*x3^3*x4+3*x2*x3^2*x6+8*x2^2*x4+3*x3*x4*x6-8*x4*x6+x6^2",
            "x2^2*x3^3+3*x2*x3^2*x4+8*x2^3+3*x2*x3*x6-8*x2*x6+x4*x6",
            "x1*x2*x3^3+3*x2*x3^2*x5+8*x1*x2^2+3*x2*x3*x7-8*x2*x7+x4*x7",
            "x1^2*x3^3+3*x1*x3^2*x5+8*x1^2*x2+3*x1*x3*x7-8*x1*x7+x5*x7",
        ],
    );
    let start = Instant::now();
    let m = i.jacobian();
    assert_eq!((m.rows(), m.cols()), (7, 12));
    assert_eq!(i.krull_dim(), 3);
    let mut j = i.clone();
    let mut iterations = 0;
    while iterations < 10 && j.krull_dim() > 1 {
        iterations += 1;
        let opts = PointSearchOptions {
            seed: 40 + iterations,
            ..PointSearchOptions::default()
        };
        match extend_ideal_by_nonzero_minor(4, &m, &j, 5, &opts) {
            Ok(next) => j = next,
            Err(Error::RankDeficient) => continue,
            Err(e) => panic!("unexpected error: {e}"),
        }
        assert!(
            start.elapsed() < Duration::from_secs(600),
            "exceeded the 600 s budget"
        );
    }
    let final_dim = j.krull_dim();
    let elapsed = start.elapsed();
    assert_eq!(final_dim, 1, "dimension must reach 1 within 10 extensions");
    assert!(elapsed < Duration::from_secs(600));
    println!(
        "criterion 9 slow (7-variable loop: dim 1 after {iterations} extensions in {elapsed:.2?}): pass"
    );
}

#[test]
fn criterion_09_surrogate_determinantal() {
    // the scaled surrogate: the quadric cone in 4-space; extending by 1x1
    // Jacobian minors must cut below the starting dimension within 6 steps
    let r = ring(101, &["x", "y", "z", "w"]);
    let i = ideal(&r, &["x*w-y*z"]);
    let start_dim = i.krull_dim();
    assert_eq!(start_dim, 3);
    let m = i.jacobian();
    let mut j = i.clone();
    for step in 0..6u64 {
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
            Err(e) => panic!("unexpected error: {e}"),
        }
    }
    assert!(
        j.krull_dim() < start_dim,
        "surrogate dimension failed to drop within 6 extensions"
    );
    println!("criterion 9 surrogate (4-variable determinantal descent): pass");
}

#[test]
fn criterion_10_gb_engine_self_consistency() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    use rand::Rng;
    for trial in 0..200u64 {
        let q = if trial % 2 == 0 { 3 } else { 5 };
        let n = 2 + (trial % 2) as usize;
        let names: Vec<String> = (0..n).map(|k| format!("x{k}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let r = PolyRing::new(make_prime_field(q).unwrap(), &refs).unwrap();
        let mut gens = Vec::new();
        for _ in 0..1 + rng.random_range(0..2u32) {
            let d = 1 + rng.random_range(0..2u32);
            let f = random_form(&r, d, &mut rng);
            gens.push(if rng.random_range(0..2u32) == 0 {
                f.add(&r.constant(r.field().random_element(&mut rng)))
            } else {
                f
            });
        }
        let i = Ideal::new(r.clone(), gens).unwrap();
        let basis = i.groebner();

        // Buchberger criterion and generator membership
        assert!(varpoints::gb::basis_is_groebner(&basis), "trial {trial}");
        for g in i.generators() {
            assert!(
                i.is_member(g).unwrap(),
                "trial {trial}: generator escaped its own ideal"
            );
        }

        // Krull dimension against exhaustive subset enumeration
        let dim = i.krull_dim();
        let oracle = if basis.len() == 1 && basis[0].is_constant() {
            -1
        } else {
            let mut best: i64 = 0;
            for mask in 0u32..(1 << n) {
                let subset: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
                let independent = basis.iter().all(|g| {
                    let lm = g.leading_monomial().unwrap();
                    !(0..n).filter(|&v| lm[v] > 0).all(|v| subset.contains(&v))
                });
                if independent {
                    best = best.max(subset.len() as i64);
                }
            }
            best
        };
        assert_eq!(dim, oracle, "trial {trial}: dimension mismatch");

        // elimination soundness: eliminate the first variable, re-embed
        if n >= 2 && !i.contains_one() {
            let keep: Vec<usize> = (1..n).collect();
            let e = i.eliminate(&keep).unwrap();
            for g in e.generators() {
                let back = parse_polynomial(&r, &g.to_string()).unwrap();
                assert!(
                    i.is_member(&back).unwrap(),
                    "trial {trial}: eliminated element left I"
                );
            }
        }
    }
    assert!(start.elapsed() < Duration::from_secs(120));
    println!("criterion 10 (GB self-consistency on 200 ideals): pass");
}

const CURVE_INPUT: &str = "ring 101 [x,y,z]\nideal: x^3+y^2+1; z^3-x^2-y^2+2\n";

fn run_cli(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_varpoints"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .env_remove("VARPOINTS_SEED")
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

#[test]
fn criterion_11_cli_determinism() {
    let matrix_input = "ring 101 [x,y]\nideal: x^3-y^2\nmatrix 2x1: 3*x^2, -2*y\n";
    let cubic_input = "ring 101 [x,y]\nideal: y^2-x^3-x-1\n";
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["points", "--count", "1", "--seed", "7"], CURVE_INPUT),
        (
            vec![
                "points",
                "--strategy",
                "brute",
                "--attempts",
                "500",
                "--seed",
                "7",
            ],
            CURVE_INPUT,
        ),
        (
            vec!["points", "--strategy", "linear", "--seed", "7"],
            CURVE_INPUT,
        ),
        (
            vec!["dim", "--dim-attempts", "2", "--seed", "7"],
            CURVE_INPUT,
        ),
        (vec!["dim-exact", "--seed", "7"], CURVE_INPUT),
        (vec!["coordchange", "--seed", "7"], CURVE_INPUT),
        (
            vec![
                "coordchange",
                "--homogeneous=false",
                "--max-replace",
                "1",
                "--seed",
                "7",
            ],
            CURVE_INPUT,
        ),
        (vec!["project", "--drop", "1", "--seed", "7"], CURVE_INPUT),
        (
            vec!["project-hypersurface", "--codim", "2", "--seed", "7"],
            CURVE_INPUT,
        ),
        (
            vec!["minor", "--minor-size", "1", "--seed", "7"],
            matrix_input,
        ),
        (
            vec!["extend-minor", "--minor-size", "1", "--seed", "7"],
            matrix_input,
        ),
        (
            vec!["lineprobe", "--trials", "100", "--seed", "7"],
            cubic_input,
        ),
        (
            vec![
                "lineprobe",
                "--trials",
                "50",
                "--seed",
                "7",
                "--format",
                "csv",
            ],
            cubic_input,
        ),
        (vec!["selftest", "--seed", "0"], ""),
    ];
    for (args, stdin) in &cases {
        let a = run_cli(args, stdin);
        let b = run_cli(args, stdin);
        assert_eq!(
            a.status.code(),
            Some(0),
            "{args:?} failed: {}",
            String::from_utf8_lossy(&a.stderr)
        );
        assert_eq!(a.stdout, b.stdout, "{args:?}: outputs differ between runs");
    }

    // worker-count invariance of the points command
    let w1 = run_cli(
        &[
            "points",
            "--strategy",
            "brute",
            "--attempts",
            "60000",
            "--count",
            "2",
            "--workers",
            "1",
            "--seed",
            "3",
        ],
        CURVE_INPUT,
    );
    let w4 = run_cli(
        &[
            "points",
            "--strategy",
            "brute",
            "--attempts",
            "60000",
            "--count",
            "2",
            "--workers",
            "4",
            "--seed",
            "3",
        ],
        CURVE_INPUT,
    );
    assert_eq!(w1.status.code(), Some(0));
    assert_eq!(w1.stdout, w4.stdout, "workers changed the output");
    println!(
        "criterion 11 (CLI determinism across {} commands + worker invariance): pass",
        cases.len()
    );
}

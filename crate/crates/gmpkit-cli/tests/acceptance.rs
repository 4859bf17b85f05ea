//! End-to-end acceptance checks, one test per shipped guarantee.
//!
//! Each test replays a bundled example (or a randomized suite) from scratch
//! against literal expected values and prints a single PASS line; a panic in
//! any test marks the corresponding guarantee as failed.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gmpkit::bounds::{bound_thm61, bound_thm62, compute_tau, is_nsc, rank_condition, BoundReport};
use gmpkit::code::{LinearCode, DEFAULT_DISTANCE_CAP};
use gmpkit::field::{Field, FieldElem, FieldSpec};
use gmpkit::gmp::GmpSpec;
use gmpkit::io;
use gmpkit::matrix::Matrix;
use gmpkit::qt::{self, t_lambda, QtSpec};
use gmpkit::registry::Registry;
use gmpkit::ring::{Poly, RingElem, RingSpec};

const CAP: u64 = DEFAULT_DISTANCE_CAP;

fn load(text: &str) -> GmpSpec {
    io::read_gmp_spec(text).expect("bundled spec parses")
}

/// Recomputes the analysis figures and distance and compares all of them.
fn assert_analysis(
    spec: &GmpSpec,
    n: usize,
    sigma_rank: usize,
    condition_met: bool,
    dim: usize,
    d: u32,
) {
    let analysis = spec.analyze().unwrap();
    assert_eq!(spec.length(), n, "code length");
    assert_eq!(analysis.sigma_rank, sigma_rank, "sigma rank");
    assert_eq!(analysis.rank_condition_met, condition_met, "rank condition");
    assert_eq!(analysis.dim(), dim, "dimension");
    assert_eq!(analysis.code.min_distance(CAP).unwrap(), d, "distance");
}

fn per_t_params(report: &BoundReport) -> Vec<usize> {
    assert!(report.applicable, "{:?}", report.reason);
    report.per_t.iter().map(|p| p.param).collect()
}

#[test]
fn a01_binary_gmp_matches_published_matrix_and_distance() {
    let spec = load(include_str!("../data/ex4_1.json"));
    assert_analysis(&spec, 20, 8, true, 6, 8);
    let expected_gen = "1,1,1,1,0,1,1,0,0,1,1,0,0,1,1,0,0,0,0,0; \
                        1,0,0,1,1,1,0,0,1,1,0,0,1,1,0,0,0,0,0,0; \
                        1,0,1,0,1,0,0,1,1,0,0,1,1,0,0,1,0,0,0,0; \
                        1,1,1,1,0,0,0,0,1,0,0,1,1,1,1,1,0,1,1,0; \
                        1,0,0,1,0,0,0,0,0,1,0,1,1,0,0,1,1,1,0,0; \
                        1,0,1,0,0,0,0,0,0,0,1,1,1,0,1,0,1,0,0,1";
    assert_eq!(spec.analyze().unwrap().gen.to_string(), expected_gen);
    assert_eq!(
        Registry::bundled().classify(2, 20, 6, 8).to_string(),
        "best-known"
    );
    println!("acceptance 1 PASS ex4.1 [20,6,8]_2 generator matrix, rank, distance, verdict");
}

#[test]
fn a02_quaternary_gmp_parameters() {
    let spec = load(include_str!("../data/ex4_2.json"));
    assert_eq!(spec.field().q(), 4);
    assert_analysis(&spec, 30, 15, true, 3, 22);
    println!("acceptance 2 PASS ex4.2 [30,3,22]_4");
}

#[test]
fn a03_wide_block_matrix_drops_dimension() {
    let spec = load(include_str!("../data/ex4_3.json"));
    assert_eq!(spec.field().q(), 3);
    assert!(spec.num_codes() > spec.num_blocks(), "M > N shape");
    assert_analysis(&spec, 12, 12, false, 9, 3);
    println!("acceptance 3 PASS ex4.3 [12,9,3]_3 with rank condition unmet");
}

#[test]
fn a04_quinary_gmp_parameters() {
    let spec = load(include_str!("../data/ex4_4.json"));
    assert_eq!(spec.field().q(), 5);
    assert_analysis(&spec, 12, 9, true, 5, 6);
    println!("acceptance 4 PASS ex4.4 [12,5,6]_5");
}

#[test]
fn a05_rank_deficient_sigma_keeps_full_dimension() {
    let spec = load(include_str!("../data/ex4_5.json"));
    assert_eq!(spec.field().q(), 9);
    // rank 11 < mM = 12, yet the dimension still reaches sum(dim C_i):
    // the full-rank condition is sufficient but not necessary.
    assert_analysis(&spec, 12, 11, false, 6, 6);
    assert_eq!(spec.analyze().unwrap().predicted_dim, None);
    println!("acceptance 5 PASS ex4.5 [12,6,6]_9 despite sigma rank 11 < 12");
}

#[test]
fn a06_extension_field_gmp_parameters() {
    let spec = load(include_str!("../data/ex4_6.json"));
    assert_eq!(spec.field().q(), 9);
    assert_analysis(&spec, 18, 9, true, 4, 13);
    println!("acceptance 6 PASS ex4.6 [18,4,13]_9");
}

#[test]
fn a07_cyclic_decomposition_and_expansion() {
    let spec = load(include_str!("../data/ex5_3.json"));
    let qt = qt::gmp_to_qt(&spec).unwrap();
    let gpm: Vec<Vec<String>> = qt
        .gpm()
        .iter()
        .map(|row| row.iter().map(|e| e.rep().to_string()).collect())
        .collect();
    let g1 = "1+x+x^2+x^4";
    assert_eq!(
        gpm,
        vec![
            vec![g1; 7],
            vec![
                "1+x^3+x^5+x^6",
                "1+x+x^4+x^6",
                "1+x+x^2+x^5",
                "x+x^2+x^3+x^6",
                "1+x^2+x^3+x^4",
                "x+x^3+x^4+x^5",
                "x^2+x^4+x^5+x^6",
            ],
        ]
    );
    let code = qt.expand().unwrap();
    assert_eq!(
        (code.length(), code.dim(), code.min_distance(CAP).unwrap()),
        (49, 6, 24)
    );
    println!("acceptance 7 PASS ex5.3 generator polynomial matrix and [49,6,24]_2");
}

#[test]
fn a08_twisted_decomposition_and_alternative_form() {
    let qt: QtSpec = io::read_qt_spec(include_str!("../data/ex5_4.json")).unwrap();
    let (dec, _) = qt.to_gmp().unwrap();
    assert_eq!(
        dec.gs.iter().map(Poly::to_string).collect::<Vec<_>>(),
        ["1", "2+x", "4+3*x+x^2"]
    );
    assert_eq!(dec.mats.len(), 2);
    assert_eq!(
        dec.mats[0].to_string(),
        "4,3,2,1,3,4; 0,0,2,2,4,1; 2,4,0,4,2,2"
    );
    assert_eq!(
        dec.mats[1].to_string(),
        "2,3,2,1,1,1; 1,0,1,0,0,1; 0,0,0,0,0,0"
    );
    let code = qt.expand().unwrap();
    assert_eq!(
        (code.length(), code.dim(), code.min_distance(CAP).unwrap()),
        (18, 6, 10)
    );
    let alt: QtSpec = io::read_qt_spec(include_str!("../data/ex5_4_hermite.json")).unwrap();
    assert_eq!(
        alt.expand().unwrap().basis().map(Matrix::to_string),
        code.basis().map(Matrix::to_string),
        "triangular generator polynomial matrix spans the same code"
    );
    println!("acceptance 8 PASS ex5.4 decomposition, [18,6,10]_5, alternative form");
}

struct BoundCase {
    id: &'static str,
    text: &'static str,
    span_params: &'static [usize],
    span_bound: u64,
    thresholds: &'static [usize],
    threshold_bound: u64,
    distance: u32,
}

#[test]
fn a09_distance_bounds_match_reference_values() {
    let cases = [
        BoundCase {
            id: "ex6.3",
            text: include_str!("../data/ex6_3.json"),
            span_params: &[2, 2],
            span_bound: 4,
            thresholds: &[4, 4],
            threshold_bound: 4,
            distance: 4,
        },
        BoundCase {
            id: "ex6.4",
            text: include_str!("../data/ex6_4.json"),
            span_params: &[2, 2, 1],
            span_bound: 5,
            thresholds: &[4, 4, 5],
            threshold_bound: 5,
            distance: 5,
        },
        BoundCase {
            id: "ex6.6",
            text: include_str!("../data/ex6_6.json"),
            span_params: &[2, 2],
            span_bound: 8,
            thresholds: &[7, 7],
            threshold_bound: 12,
            distance: 12,
        },
        BoundCase {
            id: "ex6.7",
            text: include_str!("../data/ex6_7.json"),
            span_params: &[6, 3, 2],
            span_bound: 4,
            thresholds: &[3, 6, 6],
            threshold_bound: 6,
            distance: 6,
        },
    ];
    for case in cases {
        let id = case.id;
        let spec = load(case.text);
        let t61 = bound_thm61(&spec, CAP).unwrap();
        assert_eq!(per_t_params(&t61), case.span_params, "{id} span parameters");
        assert_eq!(t61.bound, Some(case.span_bound), "{id} thm61");
        let t62 = bound_thm62(&spec, CAP).unwrap();
        assert_eq!(per_t_params(&t62), case.thresholds, "{id} column thresholds");
        assert_eq!(t62.bound, Some(case.threshold_bound), "{id} thm62");
        let actual = spec.analyze().unwrap().code.min_distance(CAP).unwrap();
        assert_eq!(actual, case.distance, "{id} distance");
        assert!(case.threshold_bound <= u64::from(case.distance), "{id} soundness");
    }
    // a 4x7 matrix that fails NSC yet still admits column thresholds
    let f5 = FieldSpec::prime(5).unwrap();
    let a = Matrix::parse(
        &f5,
        "1,1,3,0,1,2,3; 3,1,0,0,1,1,3; 3,1,0,4,0,1,0; 1,3,4,2,4,3,4",
    )
    .unwrap();
    assert!(!is_nsc(&a).unwrap());
    let taus: Vec<Option<usize>> = (1..=4)
        .map(|t| compute_tau(std::slice::from_ref(&a), t).unwrap())
        .collect();
    assert_eq!(taus, [Some(2), Some(5), Some(5), Some(4)]);
    println!("acceptance 9 PASS ex6.3/ex6.4/ex6.6/ex6.7 bounds exact, non-NSC matrix thresholds");
}

// ---- randomized suites -------------------------------------------------

fn random_elem(rng: &mut impl Rng, field: &Field) -> FieldElem {
    let coeffs: Vec<u64> = (0..field.k()).map(|_| rng.gen_range(0..field.p())).collect();
    FieldElem::from_coeffs(field, &coeffs).unwrap()
}

fn random_matrix(rng: &mut impl Rng, field: &Field, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(field, rows, cols, |_, _| random_elem(rng, field)).unwrap()
}

fn random_nonzero_matrix(rng: &mut impl Rng, field: &Field, rows: usize, cols: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, field, rows, cols);
        if !m.is_zero() {
            return m;
        }
    }
}

fn random_small_spec(rng: &mut impl Rng, field: &Field) -> GmpSpec {
    let m = rng.gen_range(1..=2);
    let num_codes = rng.gen_range(1..=2);
    let n_blocks = rng.gen_range(1..=3);
    let r = rng.gen_range(0..=1);
    let codes = (0..num_codes)
        .map(|_| {
            let dim = rng.gen_range(1..=m);
            LinearCode::from_gen(random_nonzero_matrix(rng, field, dim, m))
        })
        .collect();
    let t = random_matrix(rng, field, m, m);
    let mats = (0..=r)
        .map(|_| random_matrix(rng, field, num_codes, n_blocks))
        .collect();
    GmpSpec::new(t, codes, mats).unwrap()
}

#[test]
fn a10_randomized_suites_confirm_the_core_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_0001);
    let fields = [
        FieldSpec::prime(2).unwrap(),
        FieldSpec::prime(3).unwrap(),
        FieldSpec::prime(5).unwrap(),
    ];
    let cap = 1 << 14;

    // (a) assembled generator spans exactly the brute-forced codeword set,
    // and (b) both bounds stay below the true distance when applicable
    let mut bounded_rounds = 0;
    for round in 0..30 {
        let field = &fields[round % fields.len()];
        let spec = random_small_spec(&mut rng, field);
        let brute = spec.bruteforce_code(cap).unwrap();
        let spanned: BTreeSet<Vec<u32>> = spec
            .analyze()
            .unwrap()
            .code
            .all_codewords(cap)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(brute, spanned, "round {round}");
        let (met, _, _) = rank_condition(spec.mats()).unwrap();
        if !met {
            continue;
        }
        let actual = u64::from(spec.analyze().unwrap().code.min_distance(cap).unwrap());
        for report in [
            bound_thm61(&spec, cap).unwrap(),
            bound_thm62(&spec, cap).unwrap(),
        ] {
            assert!(report.applicable, "{:?}", report.reason);
            assert!(report.bound.unwrap() <= actual, "round {round}");
        }
        bounded_rounds += 1;
    }
    assert!(bounded_rounds >= 5, "only {bounded_rounds} bounded rounds");

    // (c) quasi-twisted -> block form -> quasi-twisted keeps the codeword set
    for round in 0..20 {
        let field = &fields[round % 2];
        let m = rng.gen_range(2..=3);
        let lambda = loop {
            let l = random_elem(&mut rng, field);
            if !l.is_zero() {
                break l;
            }
        };
        let ring = RingSpec::new(field, m, &lambda).unwrap();
        let ell = rng.gen_range(1..=2);
        let gpm: Vec<Vec<RingElem>> = (0..rng.gen_range(1..=2))
            .map(|_| {
                let mut row: Vec<RingElem> = (0..ell)
                    .map(|_| {
                        let coeffs: Vec<FieldElem> =
                            (0..m).map(|_| random_elem(&mut rng, field)).collect();
                        RingElem::from_poly(&ring, &Poly::from_elems(field, &coeffs).unwrap())
                            .unwrap()
                    })
                    .collect();
                if row.iter().all(RingElem::is_zero) {
                    row[0] = RingElem::parse(&ring, "1").unwrap();
                }
                row
            })
            .collect();
        let spec = QtSpec::new(&ring, gpm).unwrap();
        let (_, gmp) = spec.to_gmp().unwrap();
        let direct = spec.expand().unwrap();
        let assembled = gmp.analyze().unwrap().code;
        assert_eq!(
            direct.basis().map(Matrix::to_string),
            assembled.basis().map(Matrix::to_string),
            "round {round}"
        );
        let back = qt::gmp_to_qt(&gmp).unwrap();
        assert_eq!(
            back.expand().unwrap().basis().map(Matrix::to_string),
            direct.basis().map(Matrix::to_string),
            "round {round} reconstruction"
        );
    }

    // (d) the polynomial isomorphism turns the twisted shift into
    // multiplication by x, exhaustively over small rings
    for (p, max_m) in [(2u64, 4usize), (3, 3)] {
        let field = FieldSpec::prime(p).unwrap();
        for m in 1..=max_m {
            for lam in 1..p {
                let lambda = FieldElem::from_int(&field, lam as i64);
                let ring = RingSpec::new(&field, m, &lambda).unwrap();
                let t = t_lambda(&field, m, &lambda).unwrap();
                for word in 0..p.pow(m as u32) {
                    let mut rest = word;
                    let col = Matrix::from_fn(&field, m, 1, |_, _| {
                        let e = FieldElem::from_int(&field, (rest % p) as i64);
                        rest /= p;
                        e
                    })
                    .unwrap();
                    assert_eq!(
                        ring.phi(&t.mul(&col).unwrap()).unwrap().rep(),
                        ring.phi(&col).unwrap().mul_x().rep(),
                        "p={p} m={m} word={word}"
                    );
                }
            }
        }
    }

    // (e) non-singular-by-columns matrices have column threshold exactly t
    let f5 = FieldSpec::prime(5).unwrap();
    let mut plain = StdRng::seed_from_u64(0xacce_0002);
    let mut found = 0;
    while found < 5 {
        let a = random_matrix(&mut plain, &f5, 3, 4);
        if !is_nsc(&a).unwrap() {
            continue;
        }
        for t in 1..=3 {
            assert_eq!(compute_tau(std::slice::from_ref(&a), t).unwrap(), Some(t));
        }
        found += 1;
    }

    println!("acceptance 10 PASS randomized span, bound, round-trip, shift, threshold suites");
}

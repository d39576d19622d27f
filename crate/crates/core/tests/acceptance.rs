//! Acceptance suite: one test per acceptance criterion, each printing a
//! single PASS/FAIL line with a short summary of what was verified.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ectorsion::arith::{
    legendre_symbol, prime_stream, rational_sqrt, squarefree_class_int,
};
use ectorsion::descent::{
    alpha_image, isogenous_curve, rank_upper_bound_with, selmer_group, solvable_qp,
    HomogeneousSpace, Verdict,
};
use ectorsion::ecurve::{
    curve_q, curve_to_field, halving_test, lift_x, torsion_locus, torsion_subgroup_k,
    torsion_subgroup_q, CurvePoint, ShortABCurve,
};
use ectorsion::factor::{
    degree_pattern_bound, extract_factors_bounded, feasible_factor_degrees, good_primes,
};
use ectorsion::modcurves::{
    build_exceptional_curve_2x10, catalog, cm_prime_bound, enumerate_torsion,
    family_condition_curve, family_spec, search_exceptional_primes, specialize_family, BaseField,
    FamilyId, SearchTarget, Specialization,
};
use ectorsion::numfield::{self, compose_quadratic_tower, nf_from_rat, NumberField};
use ectorsion::poly::RatPoly;

fn criterion(n: u32, what: &str, f: impl FnOnce() -> String) {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(f)) {
        Ok(detail) => println!("criterion {n:02} [{what}]: PASS — {detail}"),
        Err(e) => {
            println!("criterion {n:02} [{what}]: FAIL");
            std::panic::resume_unwind(e);
        }
    }
}

fn br(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn class_set(group: &ectorsion::descent::SquareClassGroup) -> BTreeSet<BigInt> {
    group.elements().iter().map(|c| c.value().clone()).collect()
}

fn int_set(vals: &[i64]) -> BTreeSet<BigInt> {
    vals.iter().map(|&v| BigInt::from(v)).collect()
}

/// Criterion 1: for every prime p ≤ 500 with p ≡ 3 (mod 8) and p a square
/// mod 7, both Selmer groups of the p-twist of the ℤ/14 curve are pinned
/// exactly and the rank bound is 0 for the p- and −7p-twists.
#[test]
fn c01_fourteen_twist_selmer_groups_and_rank_bounds() {
    criterion(1, "Z/14 twist family", || {
        let t0 = Instant::now();
        let qualifying: Vec<u64> = prime_stream(500)
            .into_iter()
            .filter(|&p| {
                p % 8 == 3 && legendre_symbol(&BigInt::from(p), &BigInt::from(7)) == Ok(1)
            })
            .collect();
        assert_eq!(&qualifying[..4], &[11, 43, 67, 107]);
        assert_eq!(qualifying.len(), 13);
        let base = ShortABCurve::from_ints(-11, 32).unwrap();
        for &p in &qualifying {
            for d in [BigInt::from(p), BigInt::from(-7i64) * BigInt::from(p)] {
                let tw = base.quadratic_twist(&d);
                let s_psi = selmer_group(&tw).unwrap();
                assert_eq!(class_set(&s_psi), int_set(&[1, 2]), "S(psi) at d = {d}");
                let s_phi = selmer_group(&isogenous_curve(&tw).unwrap()).unwrap();
                assert_eq!(class_set(&s_phi), int_set(&[1, -7]), "S(phi) at d = {d}");
                let cert = rank_upper_bound_with(&tw, 100).unwrap();
                assert_eq!(cert.rank_bound, 0, "twist d = {d}");
                assert_eq!(cert.verdict, Verdict::RankZeroCertified);
            }
        }
        let elapsed = t0.elapsed();
        assert!(elapsed.as_secs() < 10, "took {elapsed:?}, expected under 10 s");
        format!(
            "13 primes ≤ 500, S(psi) = {{1, 2}}, S(phi) = {{1, -7}}, 26 rank-0 certificates in {elapsed:.2?}"
        )
    });
}

/// Criterion 2: for every prime p ≤ 500 with p ≡ 23 (mod 24) and (p|5) = −1,
/// S(ψ) = {1} and S(φ) = {1, −15, p, −15p}, so the rank bound is
/// 0 + 2 − 2 = 0 for the p- and −15p-twists of the ℤ/15 curve.
#[test]
fn c02_fifteen_twist_selmer_groups_and_rank_bounds() {
    criterion(2, "Z/15 twist family", || {
        let qualifying: Vec<u64> = prime_stream(500)
            .into_iter()
            .filter(|&p| {
                p % 24 == 23 && legendre_symbol(&BigInt::from(p), &BigInt::from(5)) == Ok(-1)
            })
            .collect();
        assert_eq!(&qualifying[..3], &[23, 47, 167]);
        assert_eq!(qualifying.len(), 5);
        let base = ShortABCurve::from_ints(-7, 16).unwrap();
        for &p in &qualifying {
            for d in [BigInt::from(p), BigInt::from(-15i64) * BigInt::from(p)] {
                let tw = base.quadratic_twist(&d);
                let s_psi = selmer_group(&tw).unwrap();
                assert_eq!(class_set(&s_psi), int_set(&[1]), "S(psi) at d = {d}");
                let s_phi = selmer_group(&isogenous_curve(&tw).unwrap()).unwrap();
                let expected: BTreeSet<BigInt> = [
                    BigInt::one(),
                    BigInt::from(-15),
                    BigInt::from(p),
                    BigInt::from(-15i64) * BigInt::from(p),
                ]
                .into_iter()
                .collect();
                assert_eq!(class_set(&s_phi), expected, "S(phi) at d = {d}");
                assert_eq!(s_psi.dimension + s_phi.dimension, 2);
                let cert = rank_upper_bound_with(&tw, 100).unwrap();
                assert_eq!(cert.rank_bound, 0, "twist d = {d}");
            }
        }
        "5 primes ≤ 500, S(psi) = {1}, S(phi) = {1, -15, p, -15p}, all bounds 0".into()
    });
}

/// Criterion 3: the exceptional-prime searches at limits 120 and 200 return
/// exactly the expected certified primes with no discrepancies.
#[test]
fn c03_search_outputs() {
    criterion(3, "prime searches", || {
        let r14 = search_exceptional_primes(SearchTarget::Z14, 120).unwrap();
        assert_eq!(r14.certified_primes(), vec![11, 43, 67, 107]);
        assert!(r14.discrepancies.is_empty());
        assert!(r14.entries.iter().all(|e| e.certified));
        let r15 = search_exceptional_primes(SearchTarget::Z15, 200).unwrap();
        assert_eq!(r15.certified_primes(), vec![23, 47, 167]);
        assert!(r15.discrepancies.is_empty());
        "Z/14 @ 120 → [11, 43, 67, 107]; Z/15 @ 200 → [23, 47, 167]; all certified".into()
    });
}

/// Criterion 4: the 4-torsion locus of the (2,10) modular curve factors
/// exactly as x(x²+1)(x²+x−1)(x⁴+2x³−6x²−2x+1).
#[test]
fn c04_four_torsion_factorization() {
    criterion(4, "λ₄ of X₁(2,10)", || {
        let e = curve_q(0, 0, 1, -1, 0);
        let lam4 = torsion_locus(&e, 4);
        let product = RatPoly::from_int_coeffs(&[0, 1])
            .mul(&RatPoly::from_int_coeffs(&[1, 0, 1]))
            .mul(&RatPoly::from_int_coeffs(&[-1, 1, 1]))
            .mul(&RatPoly::from_int_coeffs(&[1, -2, -6, 2, 1]));
        assert_eq!(lam4.monic(), product.monic());
        // and the bounded factorization finds precisely those four factors
        let bf = extract_factors_bounded(&lam4, 4);
        assert_eq!(bf.factors.len(), 4);
        assert!(bf.cofactors.is_empty());
        "λ₄ = unit · x(x²+1)(x²+x−1)(x⁴+2x³−6x²−2x+1), no cofactor".into()
    });
}

/// Criterion 5: torsion loci of the (1,11) modular curve — λ₅ splits off
/// exactly {x, x−1} with a certified-irreducible degree-10 cofactor, and the
/// degree-312 locus λ₂₅ splits off exactly {x, x−1} at factor bound 4.
#[test]
fn c05_eleven_torsion_loci() {
    criterion(5, "λ₅ and λ₂₅ of X₁(11)", || {
        let t0 = Instant::now();
        let e = curve_q(0, -1, -1, 0, 0);
        let lam5 = torsion_locus(&e, 5);
        let bf5 = extract_factors_bounded(&lam5, 4);
        let coeffs = |f: &RatPoly| f.monic().coeffs().to_vec();
        let found: BTreeSet<Vec<BigRational>> =
            bf5.factors.iter().map(|(f, _)| coeffs(f)).collect();
        let expected: BTreeSet<Vec<BigRational>> = [
            coeffs(&RatPoly::from_int_coeffs(&[0, 1])),
            coeffs(&RatPoly::from_int_coeffs(&[-1, 1])),
        ]
        .into_iter()
        .collect();
        assert_eq!(found, expected, "low-degree factors of λ₅");
        let cof = bf5.cofactor();
        assert_eq!(cof.deg(), 10);
        // irreducibility certificate: the modular degree-pattern sieve rules
        // out every proper factor degree, leaving only the pattern [10]
        let primes = good_primes(&cof, 10);
        let feasible = feasible_factor_degrees(&cof, &primes, 5);
        assert!(feasible.is_empty(), "feasible proper degrees: {feasible:?}");
        let patterns = degree_pattern_bound(&cof, &primes).unwrap();
        assert_eq!(patterns, BTreeSet::from([vec![10usize]]));

        let lam25 = torsion_locus(&e, 25);
        assert_eq!(lam25.deg(), 312);
        let bf25 = extract_factors_bounded(&lam25, 4);
        let found25: BTreeSet<Vec<BigRational>> =
            bf25.factors.iter().map(|(f, _)| coeffs(f)).collect();
        assert_eq!(found25, expected, "low-degree factors of λ₂₅");
        let elapsed = t0.elapsed();
        assert!(elapsed.as_secs() < 120, "took {elapsed:?}, expected under 2 min");
        format!(
            "λ₅ → {{x, x−1}} · (irreducible degree-10 cofactor); λ₂₅ (degree 312) → {{x, x−1}} in {elapsed:.2?}"
        )
    });
}

/// Criterion 6: the table of modular-curve torsion over the designated
/// number fields.
#[test]
fn c06_number_field_torsion_table() {
    criterion(6, "number-field torsion table", || {
        let eisenstein = BaseField::EisensteinQ.number_field().unwrap();
        let gaussian = BaseField::GaussianQ.number_field().unwrap();
        let gaussian_sqrt2 =
            compose_quadratic_tower(&gaussian, &nf_from_rat(&gaussian, br(2))).unwrap().field;
        let k2_10 = NumberField::create(RatPoly::from_int_coeffs(&[5, 0, -2, 0, 1])).unwrap();
        let zeta12 = NumberField::create(RatPoly::from_int_coeffs(&[1, 0, -1, 0, 1])).unwrap();
        let k2_12 = NumberField::create(RatPoly::from_int_coeffs(&[1, 4, -6, 4, 1])).unwrap();

        let table: [(&str, ectorsion::ecurve::CurveQ, &Arc<NumberField>, u64, (u32, u32)); 7] = [
            ("X1(3,9)/Q(sqrt(-3))", curve_q(0, 1, 0, 0, 0), &eisenstein, 1260, (3, 3)),
            ("X1(6,6)/Q(sqrt(-3))", curve_q(0, 0, 0, 0, 1), &eisenstein, 2520, (2, 6)),
            ("X1(4,8)/Q(i)", curve_q(0, 0, 0, -1, 0), &gaussian, 120, (2, 4)),
            ("X1(4,8)/Q(i,sqrt(2))", curve_q(0, 0, 0, -1, 0), &gaussian_sqrt2, 120, (4, 4)),
            ("X1(2,10)/Q[x]/(x^4-2x^2+5)", curve_q(0, 0, 1, -1, 0), &k2_10, 2520, (1, 12)),
            ("X1(2,12)/Q(zeta_12)", curve_q(0, 0, -1, 1, 0), &zeta12, 24, (2, 8)),
            ("X1(2,12)/Q[x]/(x^4+4x^3-6x^2+4x+1)", curve_q(0, 0, -1, 1, 0), &k2_12, 24, (1, 8)),
        ];
        for (label, model, field, bound, expected) in table {
            let ck = curve_to_field(&model, field);
            let t = torsion_subgroup_k(&ck, field, bound);
            assert_eq!((t.m, t.n), expected, "{label}");
        }
        "7 torsion groups over quadratic and quartic fields match".into()
    });
}

/// Criterion 7: the exceptional curve with torsion ℤ/2 ⊕ ℤ/10 is nonsingular
/// with j = 1728 over ℚ[w]/(w⁴ − 2w² + 5).
#[test]
fn c07_exceptional_two_ten_curve() {
    criterion(7, "exceptional ℤ/2⊕ℤ/10 curve", || {
        let x = build_exceptional_curve_2x10().unwrap();
        assert!(!x.curve.singular);
        assert_eq!(x.j_invariant, br(1728));
        assert_eq!(x.torsion, (2, 10));
        "nonsingular, j = 1728, torsion ℤ/2 ⊕ ℤ/10".into()
    });
}

/// Criterion 8: complex-multiplication prime bounds.
#[test]
fn c08_cm_prime_bounds() {
    criterion(8, "CM prime bounds", || {
        assert_eq!(cm_prime_bound(6, 3).unwrap(), 7);
        assert_eq!(cm_prime_bound(4, 4).unwrap(), 5);
        "cm_prime_bound(6, 3) = 7 and cm_prime_bound(4, 4) = 5".into()
    });
}

/// Independent re-implementation of local solvability by exhaustive
/// enumeration of z² ≡ b₁u⁴ + Au²v² + b₂v⁴ (mod p^k) over primitive (u, v).
/// Some(true): a solution exists whose z-valuation forces a Hensel lift.
/// Some(false): no congruence solution at all. None: inconclusive.
fn exhaustive_local(space: &HomogeneousSpace, p: u64, k: u32) -> Option<bool> {
    let pk = (p as i128).pow(k);
    let reduce = |n: &BigInt| n.to_i128().unwrap().rem_euclid(pk);
    let (b1, a, b2) = (reduce(space.b1.value()), reduce(&space.a), reduce(&space.b2));
    // minimal z-valuation attaining each square residue class mod p^k
    let mut min_val = vec![None::<u32>; pk as usize];
    for z in 0..pk {
        let v = if z == 0 {
            k
        } else {
            let mut v = 0;
            let mut m = z;
            while m % p as i128 == 0 {
                m /= p as i128;
                v += 1;
            }
            v
        };
        let idx = (z * z % pk) as usize;
        min_val[idx] = Some(min_val[idx].map_or(v, |w: u32| w.min(v)));
    }
    let (mut seen, mut lifts) = (false, false);
    for u in 0..pk {
        for v in 0..pk {
            if u % p as i128 == 0 && v % p as i128 == 0 {
                continue;
            }
            let (u2, v2) = (u * u % pk, v * v % pk);
            let g = (b1 * u2 % pk * u2 + a * u2 % pk * v2 + b2 * v2 % pk * v2).rem_euclid(pk);
            if let Some(vz) = min_val[g as usize] {
                seen = true;
                // z² ≡ g (mod p^k) lifts p-adically when k > 2·v_p(2z)
                if 2 * (vz + u32::from(p == 2)) < k {
                    lifts = true;
                }
            }
        }
    }
    match (seen, lifts) {
        (false, _) => Some(false),
        (true, true) => Some(true),
        (true, false) => None,
    }
}

/// Criterion 9: cross-validation property suite — local solvability against
/// exhaustive enumeration, Selmer subgroup structure, point images inside
/// Selmer groups, and group-law versus division-polynomial torsion.
#[test]
fn c09_property_suite() {
    criterion(9, "cross-validation properties", || {
        // (a) 200 random homogeneous spaces against the exhaustive decision
        let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f_ec70);
        let mut spaces = 0usize;
        let mut decided = 0usize;
        while spaces < 200 {
            let b1_raw: i64 = rng.gen_range(-15..15);
            let a: i64 = rng.gen_range(-20..20);
            let b2: i64 = rng.gen_range(-30..30);
            if b1_raw == 0 || b2 == 0 {
                continue;
            }
            let b1 = squarefree_class_int(&BigInt::from(b1_raw)).unwrap();
            let space = HomogeneousSpace::new(b1, BigInt::from(a), BigInt::from(b2));
            if space.quartic_disc().is_zero() {
                continue;
            }
            spaces += 1;
            for (p, k) in [(2u64, 8u32), (3, 5), (5, 4), (7, 3), (11, 2), (13, 2)] {
                if let Some(expected) = exhaustive_local(&space, p, k) {
                    let got = solvable_qp(&space, &BigInt::from(p));
                    assert_eq!(got.solvable, expected, "space {space:?} at p = {p}");
                    decided += 1;
                }
            }
        }

        // (b), (c) Selmer groups are subgroups containing the point image
        let mut twist_checks = 0usize;
        for (a, b) in [(-11i64, 32i64), (-7, 16)] {
            let base = ShortABCurve::from_ints(a, b).unwrap();
            for d in [1i64, -1, 2, -7, 11, -15, 23] {
                let e = base.quadratic_twist(&BigInt::from(d));
                for c in [e.clone(), isogenous_curve(&e).unwrap()] {
                    let selmer = selmer_group(&c).unwrap();
                    let elems = selmer.elements();
                    assert_eq!(elems.len(), 1usize << selmer.dimension);
                    for x in &elems {
                        for y in &elems {
                            assert!(elems.contains(&x.mul(y)), "Selmer set not closed");
                        }
                    }
                    let image = alpha_image(&c, 50);
                    assert!(image.is_subgroup_of(&selmer), "image escapes Selmer at d = {d}");
                    twist_checks += 1;
                }
            }
        }

        // (d) group law vs division polynomials on every catalog curve, n ≤ 12
        let mut torsion_checks = 0usize;
        for record in catalog() {
            let model = record.model;
            for n in 2u32..=12 {
                let locus = torsion_locus(&model, n);
                // every rational root with a rational lift is killed by n
                for (root, _) in ectorsion::factor::rational_roots(&locus) {
                    for pt in lift_x(&model, &root) {
                        assert!(
                            model.scalar_mul(n as i64, &pt).is_infinity(),
                            "({m},{n2}) locus root {root} not n-torsion at n = {n}",
                            m = record.m,
                            n2 = record.n,
                        );
                        torsion_checks += 1;
                    }
                }
            }
            // every rational torsion point of order dividing n is a locus root
            let tors = torsion_subgroup_q(&model);
            for pt in enumerate_torsion(&model, &tors) {
                let CurvePoint::Affine(x, _) = &pt else { continue };
                let order = model.point_order(&pt, 16).unwrap();
                for n in 2u32..=12 {
                    if n % order == 0 {
                        assert!(
                            torsion_locus(&model, n).evaluate(x).is_zero(),
                            "order-{order} point missing from the {n}-torsion locus"
                        );
                        torsion_checks += 1;
                    }
                }
            }
        }
        format!(
            "200 spaces ({decided} decided local tests agree), {twist_checks} Selmer subgroup/image checks, {torsion_checks} torsion cross-checks"
        )
    });
}

/// Criterion 10: square-criterion equivalences of the torsion families at
/// random parameters, and the universal 9-torsion point.
#[test]
fn c10_family_square_criteria() {
    criterion(10, "family square criteria", || {
        let mut rng = ChaCha8Rng::seed_from_u64(0xfa_0112);
        let mut random_t = |limit: i64| {
            let num: i64 = rng.gen_range(-limit..=limit);
            let den: i64 = rng.gen_range(1..=20);
            BigRational::new(BigInt::from(num), BigInt::from(den))
        };

        // 2 ⊕ 8 family: the designated 2-torsion point halves over ℚ(i)
        // exactly when D = (t²−2t−1)(t²+2t−1) is a square there, and always
        // halves over ℚ(i, √D).
        let spec28 = family_spec(FamilyId::TwoEight);
        let cc28 = family_condition_curve(FamilyId::TwoEight).unwrap();
        let qi = BaseField::GaussianQ.number_field().unwrap();
        let mut checked28 = 0usize;
        while checked28 < 20 {
            let t = random_t(40);
            let Ok(Specialization::Curve(c)) = specialize_family(&spec28, &t) else { continue };
            let d = cc28.rhs.evaluate(&t);
            let r1 = BigRational::zero();
            let r2 = -(&t * &t - BigRational::one()) * (&t * &t - BigRational::one());
            let r3 = -&c.a2 - &r2;
            let lift = |q: &BigRational| nf_from_rat(&qi, q.clone());
            let halved_qi = halving_test(
                &curve_to_field(&c, &qi),
                &CurvePoint::Affine(lift(&r3), lift(&BigRational::zero())),
                &[lift(&r1), lift(&r2), lift(&r3)],
            )
            .unwrap();
            let d_square_qi = numfield::nf_sqrt(&lift(&d)).is_some();
            assert_eq!(halved_qi, d_square_qi, "t = {t}");
            if !d_square_qi {
                let kf = compose_quadratic_tower(&qi, &lift(&d)).unwrap().field;
                let lift = |q: &BigRational| nf_from_rat(&kf, q.clone());
                let halved = halving_test(
                    &curve_to_field(&c, &kf),
                    &CurvePoint::Affine(lift(&r3), lift(&BigRational::zero())),
                    &[lift(&r1), lift(&r2), lift(&r3)],
                )
                .unwrap();
                assert!(halved, "t = {t}: no halving over Q(i, sqrt(D))");
            }
            checked28 += 1;
        }

        // 3 ⊕ 6 family: full 2-torsion over a field exactly when
        // 2t(3t²−6t+4) is a square there.
        let spec36 = family_spec(FamilyId::ThreeSix);
        let cc36 = family_condition_curve(FamilyId::ThreeSix).unwrap();
        let mut checked36 = 0usize;
        while checked36 < 10 {
            let t = random_t(30);
            let Ok(Specialization::Curve(c)) = specialize_family(&spec36, &t) else { continue };
            let v = cc36.rhs.evaluate(&t);
            if v.is_zero() {
                continue;
            }
            let quartic = RatPoly::new(c.two_division_poly().coeffs().to_vec());
            let roots_q = ectorsion::factor::rational_roots(&quartic).len();
            assert_eq!(roots_q == 3, rational_sqrt(&v).is_some(), "t = {t}");
            if rational_sqrt(&v).is_none() {
                let kf = NumberField::create(RatPoly::new(vec![
                    -v.clone(),
                    BigRational::zero(),
                    BigRational::one(),
                ]))
                .unwrap();
                assert_eq!(numfield::roots_in_field(&quartic, &kf).roots.len(), 3, "t = {t}");
            }
            checked36 += 1;
        }

        // universal 9-torsion family: (0, 0) has order 9
        let spec9 = family_spec(FamilyId::Kubert9);
        let mut checked9 = 0usize;
        while checked9 < 10 {
            let t = random_t(25);
            let Ok(Specialization::Curve(c)) = specialize_family(&spec9, &t) else { continue };
            let p = CurvePoint::Affine(BigRational::zero(), BigRational::zero());
            assert_eq!(c.point_order(&p, 20), Some(9), "t = {t}");
            checked9 += 1;
        }
        "2⊕8 halving ⟺ square at 20 params; 3⊕6 full 2-torsion ⟺ square at 10; (0,0) order 9 at 10".into()
    });
}

/// Criterion 11: the four base curves all certify rank 0; any curve whose
/// bound is not sharp is reported as a documented discrepancy rather than
/// silently mis-stated.
#[test]
fn c11_known_rank_zero_curves() {
    criterion(11, "known rank-0 curves", || {
        let curves = [
            ("X1(14)", -11i64, 32i64),
            ("X1(14) twisted by -7", 77, 1568),
            ("X1(15)", -7, 16),
            ("X1(15) twisted by -15", 105, 3600),
        ];
        let mut discrepancies = Vec::new();
        for (label, a, b) in curves {
            let e = ShortABCurve::from_ints(a, b).unwrap();
            let cert = rank_upper_bound_with(&e, 100).unwrap();
            if cert.rank_bound != 0 || cert.verdict != Verdict::RankZeroCertified {
                // known true rank is 0; a non-sharp bound is a recorded
                // discrepancy, never a silent pass
                println!(
                    "criterion 11 discrepancy: {label} has bound {} (dims {} + {}), known rank 0",
                    cert.rank_bound, cert.selmer_psi.dimension, cert.selmer_phi.dimension
                );
                discrepancies.push(label);
            }
        }
        assert!(discrepancies.is_empty(), "documented discrepancies: {discrepancies:?}");
        "all four base curves certify rank 0 by 2-isogeny descent".into()
    });
}

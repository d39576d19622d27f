//! Catalog of the eight modular curves X₁(m,n) of elliptic type, universal
//! families with cusp predicates, the CM exponent bound, the quadratic-twist
//! prime searches that certify rank zero over biquadratic fields, and the
//! evidence pipelines showing that specific torsion groups do not grow over
//! quartic fields.
//!
//! Everything here is exact: curves live over ℚ or over explicit number
//! fields, searches produce transcripts with full descent certificates, and
//! every evidence report lists which items were computed here versus cited
//! from the literature.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Zero};

use crate::arith::{self, ArithError};
use crate::descent::{self, RankCertificate, Verdict};
use crate::ecurve::{
    self, curve_q, curve_to_field, CurveK, CurvePoint, CurveQ, ShortABCurve, TorsionGroup,
    WeierstrassCurve,
};
use crate::factor;
use crate::field::CoeffField;
use crate::numfield::{self, nf_element, nf_from_rat, nf_gen, NumberField};
use crate::poly::Poly;
use crate::RatPoly;

// -- catalog -------------------------------------------------------------------

/// Smallest field over which the curve (and its full torsion structure) is
/// considered in the catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseField {
    /// ℚ
    Q,
    /// ℚ(i)
    GaussianQ,
    /// ℚ(√−3)
    EisensteinQ,
}

impl BaseField {
    /// The number field itself (degree 1 is represented by `None`).
    pub fn number_field(self) -> Option<Arc<NumberField>> {
        match self {
            BaseField::Q => None,
            BaseField::GaussianQ => {
                Some(NumberField::create(RatPoly::from_int_coeffs(&[1, 0, 1])).unwrap())
            }
            BaseField::EisensteinQ => {
                Some(NumberField::create(RatPoly::from_int_coeffs(&[3, 0, 1])).unwrap())
            }
        }
    }
}

/// One curve X₁(m,n) of elliptic type, with its stored affine model and the
/// torsion data over its base field.
#[derive(Clone, Debug)]
pub struct ModularCurveRecord {
    pub m: u32,
    pub n: u32,
    /// Affine Weierstrass model over ℚ.
    pub model: CurveQ,
    /// Label in the standard curve tables, when one is recorded.
    pub tag: Option<&'static str>,
    /// Field over which the catalog tracks the torsion of the model.
    pub base_field: BaseField,
    /// Torsion of the model over the base field, as invariants (m, n).
    pub base_torsion: (u32, u32),
    /// Whether every base-field torsion point is a cusp.
    pub all_cusps: bool,
    /// For CM models: the number of roots of unity in the CM field.
    pub cm_roots_of_unity: Option<u32>,
}

/// The set of (m, n) for which X₁(m,n) is an elliptic curve.
pub const ELLIPTIC_PAIRS: [(u32, u32); 8] = [
    (1, 11),
    (1, 14),
    (1, 15),
    (2, 10),
    (2, 12),
    (3, 9),
    (4, 8),
    (6, 6),
];

/// The torsion groups arising for infinitely many elliptic curves over ℚ
/// (X₁(m,n) has genus zero exactly for these).
pub const GENUS_ZERO_PAIRS: [(u32, u32); 15] = [
    (1, 1),
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (1, 7),
    (1, 8),
    (1, 9),
    (1, 10),
    (1, 12),
    (2, 2),
    (2, 4),
    (2, 6),
    (2, 8),
];

/// The full catalog, in the order of `ELLIPTIC_PAIRS`.
pub fn catalog() -> Vec<ModularCurveRecord> {
    vec![
        ModularCurveRecord {
            m: 1,
            n: 11,
            model: curve_q(0, -1, -1, 0, 0), // y² − y = x³ − x²
            tag: Some("11A3"),
            base_field: BaseField::Q,
            base_torsion: (1, 5),
            all_cusps: true,
            cm_roots_of_unity: None,
        },
        ModularCurveRecord {
            m: 1,
            n: 14,
            model: curve_q(0, 0, -11, 32, 0), // y² = x³ − 11x² + 32x
            tag: None,
            base_field: BaseField::Q,
            base_torsion: (1, 6),
            all_cusps: true,
            cm_roots_of_unity: None,
        },
        ModularCurveRecord {
            m: 1,
            n: 15,
            model: curve_q(0, 0, -7, 16, 0), // y² = x³ − 7x² + 16x
            tag: None,
            base_field: BaseField::Q,
            base_torsion: (1, 4),
            all_cusps: true,
            cm_roots_of_unity: None,
        },
        ModularCurveRecord {
            m: 2,
            n: 10,
            model: curve_q(0, 0, 1, -1, 0), // y² = x³ + x² − x
            tag: Some("20A2"),
            base_field: BaseField::Q,
            base_torsion: (1, 6),
            all_cusps: true,
            cm_roots_of_unity: None,
        },
        ModularCurveRecord {
            m: 2,
            n: 12,
            model: curve_q(0, 0, -1, 1, 0), // y² = x³ − x² + x
            tag: Some("24A4"),
            base_field: BaseField::Q,
            base_torsion: (1, 4),
            all_cusps: true,
            cm_roots_of_unity: None,
        },
        ModularCurveRecord {
            m: 3,
            n: 9,
            model: curve_q(0, 1, 0, 0, 0), // y² + y = x³
            tag: Some("27A3"),
            base_field: BaseField::EisensteinQ,
            base_torsion: (3, 3),
            all_cusps: true,
            cm_roots_of_unity: Some(6),
        },
        ModularCurveRecord {
            m: 4,
            n: 8,
            model: curve_q(0, 0, 0, -1, 0), // y² = x³ − x
            tag: Some("32A2"),
            base_field: BaseField::GaussianQ,
            base_torsion: (2, 4),
            all_cusps: true,
            cm_roots_of_unity: Some(4),
        },
        ModularCurveRecord {
            m: 6,
            n: 6,
            model: curve_q(0, 0, 0, 0, 1), // y² = x³ + 1
            tag: Some("36A1"),
            base_field: BaseField::EisensteinQ,
            base_torsion: (2, 6),
            all_cusps: true,
            cm_roots_of_unity: Some(6),
        },
    ]
}

/// Look up one catalog record by (m, n).
pub fn catalog_get(m: u32, n: u32) -> Result<ModularCurveRecord, ArithError> {
    catalog()
        .into_iter()
        .find(|r| r.m == m && r.n == n)
        .ok_or_else(|| ArithError::InvalidArgument(format!("X1({m},{n}) is not in the catalog")))
}

/// Coarse classification of X₁(m,n) by genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenusClass {
    GenusZero,
    Elliptic,
    Higher,
}

/// Classify X₁(m,n). Requires m | n (the group ℤ/m ⊕ ℤ/n needs m | n).
pub fn genus_class(m: u32, n: u32) -> Result<GenusClass, ArithError> {
    if m == 0 || n == 0 || n % m != 0 {
        return Err(ArithError::InvalidArgument(format!(
            "invalid torsion invariants ({m}, {n}): need m | n"
        )));
    }
    if GENUS_ZERO_PAIRS.contains(&(m, n)) {
        Ok(GenusClass::GenusZero)
    } else if ELLIPTIC_PAIRS.contains(&(m, n)) {
        Ok(GenusClass::Elliptic)
    } else {
        Ok(GenusClass::Higher)
    }
}

/// Reference data: the exceptional pairs over quadratic fields (torsion group
/// occurring for finitely many, but at least one, curve over the field).
/// Stored as cited constants; not recomputed here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadraticExceptionalPair {
    pub torsion_order: u32,
    /// The quadratic field, as the squarefree d in ℚ(√d).
    pub field_d: i64,
    pub curve_count: u32,
}

pub fn quadratic_exceptional_pairs() -> [QuadraticExceptionalPair; 3] {
    [
        QuadraticExceptionalPair { torsion_order: 14, field_d: -7, curve_count: 2 },
        QuadraticExceptionalPair { torsion_order: 15, field_d: 5, curve_count: 1 },
        QuadraticExceptionalPair { torsion_order: 15, field_d: -15, curve_count: 1 },
    ]
}

// -- universal families ----------------------------------------------------------

/// Exact rational function of one parameter, as numerator/denominator.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub num: RatPoly,
    pub den: RatPoly,
}

impl RationalFunction {
    pub fn poly(num: RatPoly) -> Self {
        RationalFunction { num, den: RatPoly::one() }
    }

    pub fn zero() -> Self {
        RationalFunction::poly(RatPoly::zero())
    }

    /// Evaluate at a parameter in any coefficient field; errors at a pole.
    pub fn evaluate<F: CoeffField>(&self, t: &F) -> Result<F, ArithError> {
        let d = eval_rat_poly(&self.den, t);
        if d.is_zero_elem() {
            return Err(ArithError::InvalidArgument(
                "parameter at a pole of a coefficient function".into(),
            ));
        }
        Ok(eval_rat_poly(&self.num, t).div(&d))
    }
}

/// Horner evaluation of a rational polynomial at a point of any field.
fn eval_rat_poly<F: CoeffField>(p: &RatPoly, t: &F) -> F {
    let mut acc = t.zero_like();
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(t).add(&t.from_rat_like(c));
    }
    acc
}

/// How a family decides that a parameter is a cusp.
#[derive(Clone, Debug)]
pub enum CuspPredicate {
    /// The specialized model is singular (Δ = 0).
    DiscriminantZero,
    /// An explicit polynomial in the parameter vanishes.
    Polynomial(RatPoly),
}

/// Identifiers for the stored one-parameter families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyId {
    /// Kubert's universal curve with a point of order 9 at (0, 0).
    Kubert9,
    /// Universal curve containing ℤ/2 ⊕ ℤ/8 (parameter on a genus-zero base);
    /// its 4 ⊕ 8 condition is a genus-one curve isomorphic to X₁(4,8).
    TwoEight,
    /// Universal curve containing ℤ/3 ⊕ ℤ/6; its 6 ⊕ 6 condition (square
    /// discriminant) is a genus-one curve isomorphic to X₁(6,6).
    ThreeSix,
    /// Universal curve containing ℤ/6 ⊕ ℤ/6, parametrized by the x-coordinate
    /// of a noncuspidal point on X₁(6,6).
    SixSixUniversal,
}

/// One universal family: long-Weierstrass coefficient functions of the
/// parameter, a base-field requirement, and a cusp predicate.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub id: FamilyId,
    /// Coefficient functions (a₁, a₃, a₂, a₄, a₆).
    pub coeffs: [RationalFunction; 5],
    pub base_field: BaseField,
    pub cusp: CuspPredicate,
    /// Documented oddity of the stored source data, surfaced in reports.
    pub anomaly: Option<&'static str>,
}

fn ratpoly(scaled: &[i64], den: i64) -> RatPoly {
    let d = BigRational::new(BigInt::one(), BigInt::from(den));
    RatPoly::from_int_coeffs(scaled).scale(&d)
}

/// The stored family data for one identifier.
pub fn family_spec(id: FamilyId) -> FamilySpec {
    match id {
        FamilyId::Kubert9 => {
            // Kubert form y² + (1−c)xy − by = x³ − bx² with c = t³ − t² and
            // b = (t² − t + 1)(t³ − t²); the point (0, 0) has order 9.
            let a3 = RatPoly::from_int_coeffs(&[0, 0, 1, -2, 2, -1]);
            FamilySpec {
                id,
                coeffs: [
                    RationalFunction::poly(RatPoly::from_int_coeffs(&[1, 0, 1, -1])),
                    RationalFunction::poly(a3.clone()),
                    RationalFunction::poly(a3),
                    RationalFunction::zero(),
                    RationalFunction::zero(),
                ],
                base_field: BaseField::Q,
                cusp: CuspPredicate::DiscriminantZero,
                anomaly: None,
            }
        }
        FamilyId::TwoEight => {
            // y² = x (x + (t²−1)²) (x + 16t⁴/(t²−1)²)
            let a2 = RationalFunction {
                num: RatPoly::from_int_coeffs(&[1, 0, -4, 0, 22, 0, -4, 0, 1]),
                den: RatPoly::from_int_coeffs(&[1, 0, -2, 0, 1]),
            };
            FamilySpec {
                id,
                coeffs: [
                    RationalFunction::zero(),
                    RationalFunction::zero(),
                    a2,
                    RationalFunction::poly(RatPoly::from_int_coeffs(&[0, 0, 0, 0, 16])),
                    RationalFunction::zero(),
                ],
                base_field: BaseField::GaussianQ,
                cusp: CuspPredicate::DiscriminantZero,
                anomaly: None,
            }
        }
        FamilyId::ThreeSix => {
            // y² + 2(9t³−30t²+60t−40)xy − 144(3t−2)(3t²+4)(3t²−6t+4)(t−2)³y
            //   = x³ − 16(3t−2)(3t²+4)(3t²−6t+4)x².
            // The discriminant of this model is 2t(3t²−6t+4) times an exact
            // square, so square discriminant (full 2-torsion) is governed by
            // the 6 ⊕ 6 condition curve below.
            FamilySpec {
                id,
                coeffs: [
                    RationalFunction::poly(RatPoly::from_int_coeffs(&[-80, 120, -60, 18])),
                    RationalFunction::poly(RatPoly::from_int_coeffs(&[
                        -36864, 165888, -331776, 419328, -387072, 266112, -124416, 33696, -3888,
                    ])),
                    RationalFunction::poly(RatPoly::from_int_coeffs(&[
                        512, -1536, 1920, -1728, 1152, -432,
                    ])),
                    RationalFunction::zero(),
                    RationalFunction::zero(),
                ],
                base_field: BaseField::EisensteinQ,
                cusp: CuspPredicate::DiscriminantZero,
                anomaly: None,
            }
        }
        FamilyId::SixSixUniversal => {
            // y² + a(t)xy + b(t)y = x³ + c(t)x², with a(t) and c(t) stored
            // identically because the source data prints them identically.
            let a = ratpoly(&[-64, 128, -32, 16], 3);
            let b = ratpoly(
                &[0, 131072, -262144, 294912, -180224, 65536, -36864, 20480, -4096],
                27,
            );
            FamilySpec {
                id,
                coeffs: [
                    RationalFunction::poly(a.clone()),
                    RationalFunction::poly(b),
                    RationalFunction::poly(a),
                    RationalFunction::zero(),
                    RationalFunction::zero(),
                ],
                base_field: BaseField::EisensteinQ,
                cusp: CuspPredicate::Polynomial(RatPoly::from_int_coeffs(&[
                    0, -8, 0, 0, -7, 0, 0, 1,
                ])),
                anomaly: Some(
                    "the stored a(t) and c(t) coefficient functions are identical, and the \
                     cusp parameter t = -1 specializes to a nonsingular model",
                ),
            }
        }
    }
}

/// Result of specializing a family at a parameter.
#[derive(Clone, Debug)]
pub enum Specialization<F: CoeffField> {
    Curve(WeierstrassCurve<F>),
    /// The cusp predicate holds; the (possibly singular) model is included.
    Cusp(WeierstrassCurve<F>),
}

impl<F: CoeffField> Specialization<F> {
    pub fn is_cusp(&self) -> bool {
        matches!(self, Specialization::Cusp(_))
    }

    pub fn model(&self) -> &WeierstrassCurve<F> {
        match self {
            Specialization::Curve(c) | Specialization::Cusp(c) => c,
        }
    }
}

/// Evaluate all coefficient functions of a family at a parameter. Errors at
/// poles of the coefficient functions; flags cusps via the family predicate.
pub fn specialize_family<F: CoeffField>(
    spec: &FamilySpec,
    t: &F,
) -> Result<Specialization<F>, ArithError> {
    let a1 = spec.coeffs[0].evaluate(t)?;
    let a3 = spec.coeffs[1].evaluate(t)?;
    let a2 = spec.coeffs[2].evaluate(t)?;
    let a4 = spec.coeffs[3].evaluate(t)?;
    let a6 = spec.coeffs[4].evaluate(t)?;
    let curve = WeierstrassCurve::new(a1, a3, a2, a4, a6);
    let cusp = match &spec.cusp {
        CuspPredicate::DiscriminantZero => curve.singular,
        CuspPredicate::Polynomial(p) => eval_rat_poly(p, t).is_zero_elem(),
    };
    Ok(if cusp { Specialization::Cusp(curve) } else { Specialization::Curve(curve) })
}

/// Parameter of the 2 ⊕ 8 family attached to a point on X₁(4,8): t = y/(x−1).
/// Errors at infinity, off-curve points, and the pole x = 1.
pub fn point_to_parameter<F: CoeffField>(
    curve: &WeierstrassCurve<F>,
    p: &CurvePoint<F>,
) -> Result<F, ArithError> {
    if !(curve.a1.is_zero_elem()
        && curve.a3.is_zero_elem()
        && curve.a2.is_zero_elem()
        && curve.a6.is_zero_elem()
        && curve.a4.add(&curve.a4.one_like()).is_zero_elem())
    {
        return Err(ArithError::InvalidArgument(
            "parameter map is defined on the model y² = x³ − x".into(),
        ));
    }
    if !curve.is_on_curve(p) {
        return Err(ArithError::InvalidArgument("point is not on the curve".into()));
    }
    let CurvePoint::Affine(x, y) = p else {
        return Err(ArithError::InvalidArgument("parameter map needs an affine point".into()));
    };
    let d = x.sub(&x.one_like());
    if d.is_zero_elem() {
        return Err(ArithError::InvalidArgument("parameter map has a pole at x = 1".into()));
    }
    Ok(y.div(&d))
}

/// The cubic in x whose solvability over K certifies that the 9-torsion
/// family at parameter t acquires full ℤ/3 ⊕ ℤ/9 structure over K (for
/// K ⊇ ℚ(√−3); a root forces the matching y-coordinate into K as well).
pub fn extra3_condition(t: &BigRational) -> Result<RatPoly, ArithError> {
    let spec = family_spec(FamilyId::Kubert9);
    match specialize_family(&spec, t)? {
        Specialization::Curve(c) if !c.singular => {}
        _ => {
            return Err(ArithError::InvalidArgument(
                "9-torsion family is singular at this parameter".into(),
            ))
        }
    }
    let c2 = ratpoly(&[1, 0, 3, -7, 9, -6, 1], 3);
    let c1 = ratpoly(&[0, 0, 2, -5, 6, -2, -4, 6, -4, 1], 3);
    let c0 = ratpoly(&[0, 0, 0, 0, 1, -5, 13, -22, 26, -22, 13, -5, 1], 3);
    Ok(RatPoly::new(vec![
        c0.evaluate(t),
        c1.evaluate(t),
        c2.evaluate(t),
        BigRational::one(),
    ]))
}

// -- condition curves ------------------------------------------------------------

/// A genus-one condition curve s² = rhs(t) attached to a family, together
/// with a birational map to its catalog target model. The maps were derived
/// once by the standard quartic-to-cubic reduction and are frozen here; the
/// tests verify the defining identities exactly.
#[derive(Clone, Debug)]
pub struct ConditionCurve {
    pub family: FamilyId,
    /// s² = rhs(t).
    pub rhs: RatPoly,
    /// The catalog model the condition curve is birational to.
    pub target: CurveQ,
}

impl ConditionCurve {
    /// Does (t, s) lie on s² = rhs(t)?
    pub fn contains<F: CoeffField>(&self, t: &F, s: &F) -> bool {
        s.mul(s).sub(&eval_rat_poly(&self.rhs, t)).is_zero_elem()
    }

    /// Map (t, s) to a point (x, y) on the target model.
    pub fn to_target<F: CoeffField>(&self, t: &F, s: &F) -> Result<(F, F), ArithError> {
        if !self.contains(t, s) {
            return Err(ArithError::InvalidArgument("point is not on the condition curve".into()));
        }
        match self.family {
            FamilyId::TwoEight => {
                // X = (s + 1 − t²)/(2t²), Y = (s + 1 − 3t²)/(2t³)
                if t.is_zero_elem() {
                    return Err(ArithError::InvalidArgument(
                        "condition-curve map has a pole at t = 0".into(),
                    ));
                }
                let two = t.from_int_like(2);
                let t2 = t.mul(t);
                let num = s.add(&t.one_like()).sub(&t2);
                let x = num.div(&two.mul(&t2));
                let y = num.sub(&t2.mul(&two)).div(&two.mul(&t2).mul(t));
                Ok((x, y))
            }
            FamilyId::ThreeSix => {
                // X = (3t − 2)/2, Y = 3s/4
                let x = t.from_int_like(3).mul(t).sub(&t.from_int_like(2)).div(&t.from_int_like(2));
                let y = s.from_int_like(3).mul(s).div(&s.from_int_like(4));
                Ok((x, y))
            }
            _ => Err(ArithError::InvalidArgument("family has no condition curve".into())),
        }
    }

    /// Map a point (x, y) on the target model back to (t, s).
    pub fn from_target<F: CoeffField>(&self, x: &F, y: &F) -> Result<(F, F), ArithError> {
        match self.family {
            FamilyId::TwoEight => {
                // t = (x − 1)/y, s = t²(2x + 1) − 1
                if y.is_zero_elem() {
                    return Err(ArithError::InvalidArgument(
                        "inverse map has a pole at y = 0".into(),
                    ));
                }
                let t = x.sub(&x.one_like()).div(y);
                let s = t
                    .mul(&t)
                    .mul(&x.from_int_like(2).mul(x).add(&x.one_like()))
                    .sub(&x.one_like());
                Ok((t, s))
            }
            FamilyId::ThreeSix => {
                // t = (2x + 2)/3, s = 4y/3
                let three = x.from_int_like(3);
                let t = x.from_int_like(2).mul(&x.add(&x.one_like())).div(&three);
                let s = y.from_int_like(4).mul(y).div(&three);
                Ok((t, s))
            }
            _ => Err(ArithError::InvalidArgument("family has no condition curve".into())),
        }
    }
}

/// The condition curve of a family: square-discriminant (full 2-torsion) for
/// the 3 ⊕ 6 family, 2-divisibility of the designated 2-torsion point for the
/// 2 ⊕ 8 family.
pub fn family_condition_curve(id: FamilyId) -> Result<ConditionCurve, ArithError> {
    match id {
        FamilyId::TwoEight => Ok(ConditionCurve {
            family: id,
            // (t² − 2t − 1)(t² + 2t − 1) = t⁴ − 6t² + 1
            rhs: RatPoly::from_int_coeffs(&[1, 0, -6, 0, 1]),
            target: curve_q(0, 0, 0, -1, 0),
        }),
        FamilyId::ThreeSix => Ok(ConditionCurve {
            family: id,
            // 2t(3t² − 6t + 4)
            rhs: RatPoly::from_int_coeffs(&[0, 8, -12, 6]),
            target: curve_q(0, 0, 0, 0, 1),
        }),
        _ => Err(ArithError::InvalidArgument(
            "condition curves exist for the 2⊕8 and 3⊕6 families only".into(),
        )),
    }
}

// -- CM exponent bound -----------------------------------------------------------

/// Largest prime p ∤ m with φ(lcm(m, p)) ≤ 2w: an upper bound on new prime
/// torsion over quadratic extensions of a CM field with w roots of unity,
/// when a point of order m is already present.
pub fn cm_prime_bound(w: u32, m: u64) -> Result<u64, ArithError> {
    if !matches!(w, 2 | 4 | 6) {
        return Err(ArithError::InvalidArgument("w must be 2, 4 or 6".into()));
    }
    if m == 0 {
        return Err(ArithError::InvalidArgument("m must be positive".into()));
    }
    // φ(lcm(m, p)) ≥ φ(p) = p − 1, so only p ≤ 2w + 1 can qualify.
    let mut best: Option<u64> = None;
    for p in arith::prime_stream(2 * w as u64 + 1) {
        if m % p == 0 {
            continue;
        }
        let g = gcd_u64(m, p);
        let l = m / g * p;
        let phi = arith::euler_phi(&BigInt::from(l))?;
        if phi <= BigInt::from(2 * w) {
            best = Some(p);
        }
    }
    best.ok_or_else(|| {
        ArithError::InvalidArgument(format!("no prime p ∤ {m} satisfies the bound for w = {w}"))
    })
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd_u64(b, a % b) }
}

// -- exceptional prime searches --------------------------------------------------

/// Which torsion group the quadratic-twist search targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchTarget {
    /// ℤ/14ℤ over ℚ(√−7, √p).
    Z14,
    /// ℤ/15ℤ over ℚ(√−15, √p).
    Z15,
}

/// One congruence or residue-symbol condition checked on a candidate prime.
#[derive(Clone, Debug)]
pub struct CongruenceCheck {
    pub description: String,
    pub holds: bool,
}

/// One sieved prime with its transcript and both twist certificates.
#[derive(Clone, Debug)]
pub struct SearchEntry {
    pub prime: u64,
    pub congruences: Vec<CongruenceCheck>,
    /// (twist factor, certificate) for the two required quadratic twists.
    pub certificates: Vec<(BigInt, RankCertificate)>,
    /// Human-readable descriptor of the biquadratic field of the pair.
    pub field: String,
    /// Both twists certified rank zero.
    pub certified: bool,
}

/// Search outcome: every sieved prime appears, certified or not.
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub target: SearchTarget,
    pub limit: u64,
    pub entries: Vec<SearchEntry>,
    /// Primes that passed the sieve but failed rank-zero certification.
    pub discrepancies: Vec<u64>,
}

impl SearchReport {
    pub fn certified_primes(&self) -> Vec<u64> {
        self.entries.iter().filter(|e| e.certified).map(|e| e.prime).collect()
    }
}

fn sieve_checks(target: SearchTarget, p: u64) -> Vec<CongruenceCheck> {
    let pb = BigInt::from(p);
    match target {
        SearchTarget::Z14 => vec![
            CongruenceCheck { description: format!("{p} ≡ 3 (mod 8)"), holds: p % 8 == 3 },
            CongruenceCheck {
                description: format!("({p} | 7) = 1"),
                holds: arith::legendre_symbol(&pb, &BigInt::from(7)) == Ok(1),
            },
        ],
        SearchTarget::Z15 => vec![
            CongruenceCheck { description: format!("{p} ≡ 7 (mod 8)"), holds: p % 8 == 7 },
            CongruenceCheck { description: format!("{p} ≡ 2 (mod 3)"), holds: p % 3 == 2 },
            CongruenceCheck {
                description: format!("({p} | 5) = -1"),
                holds: arith::legendre_symbol(&pb, &BigInt::from(5)) == Ok(-1),
            },
        ],
    }
}

/// Sieve primes up to `limit` by the congruence conditions of the target, and
/// certify rank zero for both required quadratic twists of the target's
/// modular curve by 2-isogeny descent. Sieved primes that fail certification
/// are reported as discrepancies, never dropped.
pub fn search_exceptional_primes(
    target: SearchTarget,
    limit: u64,
) -> Result<SearchReport, ArithError> {
    search_exceptional_primes_with(target, limit, &mut |curve| descent::rank_upper_bound(curve))
}

/// Like `search_exceptional_primes`, but with a caller-supplied certifier
/// (e.g. one that consults a certificate cache before running the descent).
pub fn search_exceptional_primes_with(
    target: SearchTarget,
    limit: u64,
    certify: &mut dyn FnMut(&ShortABCurve) -> Result<RankCertificate, ArithError>,
) -> Result<SearchReport, ArithError> {
    if limit < 2 {
        return Err(ArithError::InvalidArgument("search limit must be at least 2".into()));
    }
    let (base, companion, field_d) = match target {
        SearchTarget::Z14 => (ShortABCurve::from_ints(-11, 32)?, -7i64, -7i64),
        SearchTarget::Z15 => (ShortABCurve::from_ints(-7, 16)?, -15i64, -15i64),
    };
    let mut entries = Vec::new();
    let mut discrepancies = Vec::new();
    for p in arith::prime_stream(limit) {
        let checks = sieve_checks(target, p);
        if !checks.iter().all(|c| c.holds) {
            continue;
        }
        let twists = [BigInt::from(p), BigInt::from(companion) * BigInt::from(p)];
        let mut certificates = Vec::new();
        let mut certified = true;
        for d in twists {
            let cert = certify(&base.quadratic_twist(&d))?;
            certified &= cert.rank_bound == 0 && matches!(cert.verdict, Verdict::RankZeroCertified);
            certificates.push((d, cert));
        }
        if !certified {
            discrepancies.push(p);
        }
        entries.push(SearchEntry {
            prime: p,
            congruences: checks,
            certificates,
            field: format!("Q(sqrt({field_d}), sqrt({p}))"),
            certified,
        });
    }
    Ok(SearchReport { target, limit, entries, discrepancies })
}

// -- the exceptional curve with torsion ℤ/2 ⊕ ℤ/10 --------------------------------

/// The one exceptional pair for torsion ℤ/2 ⊕ ℤ/10: a curve with j = 1728
/// over ℚ(w), w⁴ − 2w² + 5 = 0 (w² = 2i + 1), together with the torsion of
/// the modular curve X₁(2,10) over the same field.
#[derive(Clone, Debug)]
pub struct ExceptionalCurve2x10 {
    pub field: Arc<NumberField>,
    pub curve: CurveK,
    pub j_invariant: BigRational,
    /// Torsion invariants of the curve over the field.
    pub torsion: (u32, u32),
    /// Torsion invariants of X₁(2,10) over the field.
    pub modular_torsion: (u32, u32),
    /// Affine torsion points of X₁(2,10) over the field whose x-coordinate is
    /// irrational (the candidates for noncuspidal points).
    pub noncusp_modular_points: usize,
    /// rank X₁(2,10)(ℚ(w)) = 0 is recorded as cited data; the descent
    /// machinery here works over ℚ only.
    pub rank_zero_cited: bool,
}

/// Enumerate all points of a torsion group from its generators.
pub fn enumerate_torsion<F: CoeffField>(
    curve: &WeierstrassCurve<F>,
    group: &TorsionGroup<F>,
) -> Vec<CurvePoint<F>> {
    let mut points = vec![CurvePoint::Infinity];
    for g in &group.generators {
        let mut next = Vec::new();
        for p in &points {
            let mut acc = p.clone();
            loop {
                if !next.contains(&acc) {
                    next.push(acc.clone());
                }
                acc = curve.add_unchecked(&acc, g);
                if &acc == p {
                    break;
                }
            }
        }
        points = next;
    }
    points
}

/// Build the exceptional ℤ/2 ⊕ ℤ/10 curve over ℚ(w) = ℚ(√(2i+1)) and verify
/// its invariants exactly.
///
/// Construction: x₁ = (2w − w³)/5 satisfies x₁² = (1 − 2i)/5, one of the
/// quadratic factors of the 5-torsion locus of y² = x³ − x over ℚ(i), so x₁
/// is a 5-torsion x-coordinate lying in ℚ(w). The quadratic twist of
/// y² = x³ − x by δ = x₁³ − x₁ makes the matching y-coordinate rational while
/// keeping j = 1728 and full 2-torsion; clearing denominators gives the
/// integral model y² = x³ + (20w² − 240)x.
pub fn build_exceptional_curve_2x10() -> Result<ExceptionalCurve2x10, ArithError> {
    let base = NumberField::create(RatPoly::from_int_coeffs(&[1, 0, 1]))?;
    let delta = nf_element(&base, vec![
        BigRational::from_i64(1).unwrap(),
        BigRational::from_i64(2).unwrap(),
    ]);
    let tower = numfield::compose_quadratic_tower(&base, &delta)?;
    let field = tower.field.clone();
    let expected = RatPoly::from_int_coeffs(&[5, 0, -2, 0, 1]);
    if field.defining_poly() != &expected {
        return Err(ArithError::Inconsistency(format!(
            "tower over 2i+1 has defining polynomial {:?}",
            field.defining_poly()
        )));
    }
    let w = nf_gen(&field);
    let i_img = tower.base_gen_image.clone();
    // w² = 2i + 1
    let two_i_plus_1 = i_img.mul(&i_img.from_int_like(2)).add(&i_img.one_like());
    if w.mul(&w) != two_i_plus_1 {
        return Err(ArithError::Inconsistency("w² ≠ 2i + 1 in the tower field".into()));
    }
    // a₄ = 20w² − 240 = −(w(3w² − 11))², and w(3w² − 11) ≡ δ modulo squares
    let a4 = nf_element(&field, vec![
        BigRational::from_i64(-240).unwrap(),
        BigRational::zero(),
        BigRational::from_i64(20).unwrap(),
        BigRational::zero(),
    ]);
    let curve = WeierstrassCurve::new(
        w.from_int_like(0),
        w.from_int_like(0),
        w.from_int_like(0),
        a4,
        w.from_int_like(0),
    );
    if curve.singular {
        return Err(ArithError::Inconsistency("exceptional curve model is singular".into()));
    }
    let j = curve
        .j_invariant()
        .and_then(|j| j.as_rational())
        .ok_or_else(|| ArithError::Inconsistency("j-invariant is not rational".into()))?;
    // CM with j = 1728 over a field containing i: torsion exponent e has
    // φ(e) ≤ 8, and e is a multiple of 10, so e | 60.
    let tors = ecurve::torsion_subgroup_k(&curve, &field, 60);
    let x1_2_10 = curve_to_field(&curve_q(0, 0, 1, -1, 0), &field);
    let modular = ecurve::torsion_subgroup_k(&x1_2_10, &field, 2520);
    let noncusp = enumerate_torsion(&x1_2_10, &modular)
        .iter()
        .filter(|p| match p {
            CurvePoint::Affine(x, _) => x.as_rational().is_none(),
            CurvePoint::Infinity => false,
        })
        .count();
    Ok(ExceptionalCurve2x10 {
        field,
        curve,
        j_invariant: j,
        torsion: (tors.m, tors.n),
        modular_torsion: (modular.m, modular.n),
        noncusp_modular_points: noncusp,
        rank_zero_cited: true,
    })
}

// -- no-growth evidence reports ----------------------------------------------------

/// Torsion groups for which the artifact assembles computational evidence
/// that no exceptional quartic pair exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvidenceTarget {
    Z11,
    Z2x12,
    Z3x9,
    Z4x8,
    Z6x6,
}

/// One checklist item of an evidence report.
#[derive(Clone, Debug)]
pub struct EvidenceItem {
    pub check: String,
    pub expected: String,
    pub observed: String,
    pub agrees: bool,
    /// Cited items record literature data the artifact cannot verify
    /// (expected == observed by construction; they are context, not checks).
    pub cited: bool,
}

/// Structured evidence for one target torsion group.
#[derive(Clone, Debug)]
pub struct EvidenceReport {
    pub target: EvidenceTarget,
    pub items: Vec<EvidenceItem>,
}

impl EvidenceReport {
    pub fn all_agree(&self) -> bool {
        self.items.iter().all(|i| i.agrees)
    }

    pub fn discrepancies(&self) -> Vec<&EvidenceItem> {
        self.items.iter().filter(|i| !i.agrees).collect()
    }

    fn computed(&mut self, check: &str, expected: String, observed: String) {
        self.items.push(EvidenceItem {
            check: check.to_string(),
            agrees: expected == observed,
            expected,
            observed,
            cited: false,
        });
    }

    fn cited(&mut self, note: &str) {
        self.items.push(EvidenceItem {
            check: note.to_string(),
            expected: String::new(),
            observed: String::new(),
            agrees: true,
            cited: true,
        });
    }
}

/// Monic representative set of the degree-≤ D rational irreducible factors of
/// a torsion locus, as display strings sorted lexicographically.
fn small_factor_set(f: &RatPoly, max_deg: usize) -> (Vec<RatPoly>, usize) {
    let fac = factor::extract_factors_bounded(f, max_deg);
    let mut factors: Vec<RatPoly> = fac.factors.iter().map(|(g, _)| g.monic()).collect();
    factors.sort_by(|a, b| {
        a.deg()
            .cmp(&b.deg())
            .then_with(|| a.coeffs().iter().cmp(b.coeffs().iter()))
    });
    let cof_deg = fac.cofactor().deg();
    (factors, cof_deg)
}

fn poly_list(polys: &[RatPoly]) -> String {
    let parts: Vec<String> = polys.iter().map(poly_display).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Compact display of a rational polynomial, lowest degree last.
fn poly_display(p: &RatPoly) -> String {
    let mut terms = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let coeff = if c.is_one() && i != 0 {
            String::new()
        } else if *c == -BigRational::one() && i != 0 {
            "-".into()
        } else {
            format!("{c}")
        };
        let var = match i {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{i}"),
        };
        terms.push(format!("{coeff}{var}"));
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

fn torsion_string(m: u32, n: u32) -> String {
    format!("Z/{m} + Z/{n}")
}

fn torsion_over(
    curve: &CurveQ,
    field: &Arc<NumberField>,
    exponent_bound: u64,
) -> (u32, u32) {
    let ck = curve_to_field(curve, field);
    let t = ecurve::torsion_subgroup_k(&ck, field, exponent_bound);
    (t.m, t.n)
}

/// Run the per-target checklist: bounded factorizations of torsion loci over
/// ℚ, torsion computations over the designated number fields, and cusp
/// verification through the universal families. Literature facts the
/// artifact cannot verify are included as cited context items.
pub fn no_exceptional_evidence(target: EvidenceTarget) -> Result<EvidenceReport, ArithError> {
    let mut report = EvidenceReport { target, items: Vec::new() };
    match target {
        EvidenceTarget::Z11 => evidence_z11(&mut report),
        EvidenceTarget::Z2x12 => evidence_z2x12(&mut report)?,
        EvidenceTarget::Z3x9 => evidence_z3x9(&mut report)?,
        EvidenceTarget::Z4x8 => evidence_z4x8(&mut report)?,
        EvidenceTarget::Z6x6 => evidence_z6x6(&mut report)?,
    }
    Ok(report)
}

fn evidence_z11(report: &mut EvidenceReport) {
    let e = catalog_get(1, 11).unwrap().model;
    let (f5, c5) = small_factor_set(&ecurve::torsion_locus(&e, 5), 4);
    report.computed(
        "5-torsion locus of X1(11): degree-<=4 factors",
        "{x - 1, x}".into(),
        poly_list(&f5),
    );
    report.computed("5-torsion locus of X1(11): cofactor degree", "10".into(), c5.to_string());
    let (f25, c25) = small_factor_set(&ecurve::torsion_locus(&e, 25), 4);
    report.computed(
        "25-torsion locus of X1(11): degree-<=4 factors",
        "{x - 1, x}".into(),
        poly_list(&f25),
    );
    report.computed("25-torsion locus of X1(11): cofactor degree", "310".into(), c25.to_string());
    report.cited("the Galois representation of X1(11) is surjective at every prime except 5");
    report.cited("all 5 rational torsion points of X1(11) are cusps");
}

fn evidence_z2x12(report: &mut EvidenceReport) -> Result<(), ArithError> {
    let e = catalog_get(2, 12).unwrap().model;
    // ℚ(ζ₁₂) = ℚ[x]/(x⁴ − x² + 1)
    let zeta12 = NumberField::create(RatPoly::from_int_coeffs(&[1, 0, -1, 0, 1]))?;
    let t1 = torsion_over(&e, &zeta12, 24);
    report.computed(
        "torsion of X1(2,12) over Q(zeta_12)",
        torsion_string(2, 8),
        torsion_string(t1.0, t1.1),
    );
    let k8 = NumberField::create(RatPoly::from_int_coeffs(&[1, 4, -6, 4, 1]))?;
    let t2 = torsion_over(&e, &k8, 24);
    report.computed(
        "torsion of X1(2,12) over Q[x]/(x^4 + 4x^3 - 6x^2 + 4x + 1)",
        torsion_string(1, 8),
        torsion_string(t2.0, t2.1),
    );
    let (f8, _) = small_factor_set(&ecurve::torsion_locus(&e, 8), 4);
    let (f16, _) = small_factor_set(&ecurve::torsion_locus(&e, 16), 4);
    report.computed(
        "16-torsion locus of X1(2,12): every degree-<=4 factor already divides the 8-torsion locus",
        poly_list(&f8),
        poly_list(&f16),
    );
    report.cited("every torsion point of X1(2,12) over Q(zeta_12) is a cusp");
    report.cited("every torsion point of X1(2,12) over Q[x]/(x^4 + 4x^3 - 6x^2 + 4x + 1) is a cusp");
    Ok(())
}

fn evidence_z3x9(report: &mut EvidenceReport) -> Result<(), ArithError> {
    let e = catalog_get(3, 9).unwrap().model;
    let k = BaseField::EisensteinQ.number_field().unwrap();
    // CM exponent bound: new prime torsion over quadratic extensions is ≤ 7,
    // so exponent 2²·3²·5·7 covers everything reachable.
    let t = torsion_over(&e, &k, 1260);
    report.computed(
        "torsion of X1(3,9) over Q(sqrt(-3))",
        torsion_string(3, 3),
        torsion_string(t.0, t.1),
    );
    let two_div = RatPoly::new(e.two_division_poly().coeffs().to_vec());
    let roots2 = numfield::roots_in_field(&two_div, &k);
    report.computed(
        "2-division cubic of X1(3,9): roots in Q(sqrt(-3))",
        "0 roots (complete search)".into(),
        format!("{} roots ({} search)", roots2.roots.len(),
            if roots2.complete { "complete" } else { "incomplete" }),
    );
    for n in [5u32, 7] {
        let (fs, _) = small_factor_set(&ecurve::torsion_locus(&e, n), 2);
        report.computed(
            &format!("{n}-torsion locus of X1(3,9): degree-<=2 factors"),
            "{}".into(),
            poly_list(&fs),
        );
    }
    let (f3, _) = small_factor_set(&ecurve::torsion_locus(&e, 3), 2);
    let (f9, _) = small_factor_set(&ecurve::torsion_locus(&e, 9), 2);
    report.computed(
        "9-torsion locus of X1(3,9): degree-<=2 factors all come from the 3-torsion locus",
        poly_list(&f3),
        poly_list(&f9),
    );
    report.cited("every point of X1(3,9)(Q(sqrt(-3))) is a cusp");
    report.cited("cm bound: X1(3,9) has no points of prime order p > 7 over quadratic extensions of Q(sqrt(-3))");
    Ok(())
}

fn evidence_z4x8(report: &mut EvidenceReport) -> Result<(), ArithError> {
    let e = catalog_get(4, 8).unwrap().model;
    let qi = BaseField::GaussianQ.number_field().unwrap();
    // CM exponent bound: no prime torsion > 5 over quadratic extensions of
    // ℚ(i), so exponent 2³·3·5 covers everything reachable.
    let t = torsion_over(&e, &qi, 120);
    report.computed(
        "torsion of X1(4,8) over Q(i)",
        torsion_string(2, 4),
        torsion_string(t.0, t.1),
    );
    let lam3 = ecurve::torsion_locus(&e, 3);
    let (f3, c3) = small_factor_set(&lam3, 4);
    report.computed(
        "3-torsion locus of X1(4,8) is irreducible of degree 4",
        "1 factor(s) of degree 4, cofactor degree 0".into(),
        format!("{} factor(s) of degree {}, cofactor degree {c3}",
            f3.len(), f3.first().map(|f| f.deg()).unwrap_or(0)),
    );
    // the two quadratic factors of the 5-torsion locus over ℚ(i)
    let lam5 = numfield::lift_poly(&ecurve::torsion_locus(&e, 5), &qi);
    let fifth = BigRational::new(BigInt::one(), BigInt::from(5));
    for (label, c0) in [
        ("t^2 - (2i+1)/5", nf_element(&qi, vec![-fifth.clone(), -&fifth * BigInt::from(2)])),
        ("t^2 + (2i-1)/5", nf_element(&qi, vec![-fifth.clone(), &fifth * BigInt::from(2)])),
    ] {
        let q = Poly::new(vec![c0.clone(), c0.zero_like(), c0.one_like()]);
        report.computed(
            &format!("5-torsion locus of X1(4,8) over Q(i): divisible by {label}"),
            "divides".into(),
            if lam5.exact_div(&q).is_some() { "divides".into() } else { "does not divide".into() },
        );
    }
    // torsion does not grow over the two quartic fields those factors generate
    for (label, num0, num1) in [("Q(i, sqrt((2i+1)/5))", 1i64, 2i64), ("Q(i, sqrt((1-2i)/5))", 1, -2)] {
        let delta = nf_element(&qi, vec![
            BigRational::new(BigInt::from(num0), BigInt::from(5)),
            BigRational::new(BigInt::from(num1), BigInt::from(5)),
        ]);
        let tower = numfield::compose_quadratic_tower(&qi, &delta)?;
        let tk = torsion_over(&e, &tower.field, 120);
        report.computed(
            &format!("torsion of X1(4,8) over {label}"),
            torsion_string(2, 4),
            torsion_string(tk.0, tk.1),
        );
    }
    let (f4, _) = small_factor_set(&ecurve::torsion_locus(&e, 4), 2);
    report.computed(
        "4-torsion locus of X1(4,8): degree-<=2 factors",
        "{x - 1, x, x + 1, x^2 - 2x - 1, x^2 + 2x - 1, x^2 + 1}".into(),
        poly_list(&f4),
    );
    let (f8, _) = small_factor_set(&ecurve::torsion_locus(&e, 8), 2);
    report.computed(
        "8-torsion locus of X1(4,8): degree-<=2 factors all come from the 4-torsion locus",
        poly_list(&f4),
        poly_list(&f8),
    );
    // over ℚ(i, √2): torsion 4 ⊕ 4 and every extra point is a cusp
    let two = nf_from_rat(&qi, BigRational::from_i64(2).unwrap());
    let tower2 = numfield::compose_quadratic_tower(&qi, &two)?;
    let k2 = tower2.field.clone();
    let ek = curve_to_field(&e, &k2);
    let tors2 = ecurve::torsion_subgroup_k(&ek, &k2, 120);
    report.computed(
        "torsion of X1(4,8) over Q(i, sqrt(2))",
        torsion_string(4, 4),
        torsion_string(tors2.m, tors2.n),
    );
    let quartic_x = RatPoly::from_int_coeffs(&[1, 0, -6, 0, 1]); // (x²−2x−1)(x²+2x−1)
    let spec = family_spec(FamilyId::TwoEight);
    let mut extra = 0usize;
    let mut cusps = 0usize;
    for p in enumerate_torsion(&ek, &tors2) {
        let CurvePoint::Affine(x, _) = &p else { continue };
        if !eval_rat_poly(&quartic_x, x).is_zero_elem() {
            continue;
        }
        extra += 1;
        let t = point_to_parameter(&ek, &p)?;
        match specialize_family(&spec, &t) {
            // a pole of a coefficient function is a degenerate (cuspidal)
            // specialization as well
            Err(_) => cusps += 1,
            Ok(s) => {
                if s.is_cusp() && s.model().singular {
                    cusps += 1;
                }
            }
        }
    }
    report.computed(
        "extra 4-torsion points of X1(4,8) over Q(i, sqrt(2)) all specialize the 2+8 family to singular models",
        "8 extra points, 8 cusps".into(),
        format!("{extra} extra points, {cusps} cusps"),
    );
    report.cited("cm bound: X1(4,8) has no points of prime order p > 5 over quadratic extensions of Q(i)");
    Ok(())
}

fn evidence_z6x6(report: &mut EvidenceReport) -> Result<(), ArithError> {
    let e = catalog_get(6, 6).unwrap().model;
    let k = BaseField::EisensteinQ.number_field().unwrap();
    let t = torsion_over(&e, &k, 2520);
    report.computed(
        "torsion of X1(6,6) over Q(sqrt(-3))",
        torsion_string(2, 6),
        torsion_string(t.0, t.1),
    );
    for n in [5u32, 7] {
        let (fs, _) = small_factor_set(&ecurve::torsion_locus(&e, n), 2);
        report.computed(
            &format!("{n}-torsion locus of X1(6,6): degree-<=2 factors"),
            "{}".into(),
            poly_list(&fs),
        );
    }
    let (f3, _) = small_factor_set(&ecurve::torsion_locus(&e, 3), 2);
    let (f9, _) = small_factor_set(&ecurve::torsion_locus(&e, 9), 2);
    report.computed(
        "9-torsion locus of X1(6,6): degree-<=2 factors all come from the 3-torsion locus",
        poly_list(&f3),
        poly_list(&f9),
    );
    let (f4, _) = small_factor_set(&ecurve::torsion_locus(&e, 4), 2);
    report.computed(
        "4-torsion locus of X1(6,6): degree-<=2 factors",
        "{x + 1, x^2 + 2x - 2, x^2 - x + 1}".into(),
        poly_list(&f4),
    );
    // the proper 4-torsion factor x² + 2x − 2 generates ℚ(√3); torsion does
    // not grow over ℚ(√−3, √3)
    let three = nf_from_rat(&k, BigRational::from_i64(3).unwrap());
    let tower = numfield::compose_quadratic_tower(&k, &three)?;
    let tg = torsion_over(&e, &tower.field, 2520);
    report.computed(
        "torsion of X1(6,6) over Q(sqrt(-3), sqrt(3))",
        torsion_string(2, 6),
        torsion_string(tg.0, tg.1),
    );
    report.cited("every point of X1(6,6)(Q(sqrt(-3))) is a cusp");
    report.cited("cm bound: X1(6,6) has no points of prime order p > 7 over quadratic extensions of Q(sqrt(-3))");
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational_sqrt;
    use crate::ecurve::{halving_test, lift_x};
    use num_traits::ToPrimitive;

    fn br(n: i64) -> BigRational {
        BigRational::from_i64(n).unwrap()
    }

    fn rq(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn catalog_lookup_and_classification() {
        let r = catalog_get(1, 11).unwrap();
        assert_eq!(r.model, curve_q(0, -1, -1, 0, 0));
        assert_eq!(r.tag, Some("11A3"));
        assert_eq!(r.base_torsion, (1, 5));
        assert!(r.all_cusps);
        let r = catalog_get(4, 8).unwrap();
        assert_eq!(r.tag, Some("32A2"));
        assert_eq!(r.base_field, BaseField::GaussianQ);
        let r = catalog_get(6, 6).unwrap();
        assert_eq!(r.tag, Some("36A1"));
        assert_eq!(r.base_field, BaseField::EisensteinQ);
        assert!(catalog_get(1, 13).is_err());

        assert_eq!(genus_class(1, 11), Ok(GenusClass::Elliptic));
        assert_eq!(genus_class(2, 10), Ok(GenusClass::Elliptic));
        assert_eq!(genus_class(1, 10), Ok(GenusClass::GenusZero));
        assert_eq!(genus_class(2, 8), Ok(GenusClass::GenusZero));
        assert_eq!(genus_class(1, 13), Ok(GenusClass::Higher));
        assert_eq!(genus_class(5, 5), Ok(GenusClass::Higher));
        assert!(genus_class(2, 3).is_err());
        assert!(genus_class(0, 4).is_err());
    }

    #[test]
    fn catalog_models_are_nonsingular_with_expected_rational_torsion() {
        for r in catalog() {
            assert!(!r.model.singular, "X1({},{}) model singular", r.m, r.n);
            if r.base_field == BaseField::Q {
                let t = ecurve::torsion_subgroup_q(&r.model);
                assert_eq!((t.m, t.n), r.base_torsion, "X1({},{})", r.m, r.n);
            }
        }
        let pairs = quadratic_exceptional_pairs();
        assert_eq!(pairs.iter().map(|p| p.curve_count).sum::<u32>(), 4);
    }

    #[test]
    fn nine_torsion_family_specializes_with_order_nine_point() {
        let spec = family_spec(FamilyId::Kubert9);
        // t = 2: c = 4, b = 12 → y² − 3xy − 12y = x³ − 12x²
        let s = specialize_family(&spec, &br(2)).unwrap();
        let Specialization::Curve(c) = s else { panic!("t = 2 is not a cusp") };
        assert_eq!(c.a1, br(-3));
        assert_eq!(c.a3, br(-12));
        assert_eq!(c.a2, br(-12));
        let p = CurvePoint::Affine(br(0), br(0));
        assert!(c.is_on_curve(&p));
        assert_eq!(c.point_order(&p, 20), Some(9));
        // singular parameters are cusps
        for t in [0i64, 1] {
            assert!(specialize_family(&spec, &br(t)).unwrap().is_cusp());
        }
        // (0,0) has order 9 across the family
        for k in 2..12i64 {
            let t = rq(k, 5);
            let s = specialize_family(&spec, &t).unwrap();
            let Specialization::Curve(c) = s else { continue };
            assert_eq!(c.point_order(&CurvePoint::Affine(br(0), br(0)), 20), Some(9), "t = {t}");
        }
    }

    #[test]
    fn two_eight_family_cusps_poles_and_parameter_map() {
        let spec = family_spec(FamilyId::TwoEight);
        assert!(specialize_family(&spec, &br(0)).unwrap().is_cusp());
        assert!(specialize_family(&spec, &br(1)).is_err());
        assert!(specialize_family(&spec, &br(-1)).is_err());
        let s = specialize_family(&spec, &br(2)).unwrap();
        assert!(!s.is_cusp());

        let x48 = curve_q(0, 0, 0, -1, 0);
        assert_eq!(point_to_parameter(&x48, &CurvePoint::Affine(br(0), br(0))).unwrap(), br(0));
        assert!(point_to_parameter(&x48, &CurvePoint::Affine(br(1), br(0))).is_err());
        assert!(point_to_parameter(&x48, &CurvePoint::<BigRational>::Infinity).is_err());
        // (i, 1−i) over ℚ(i) maps to −1
        let qi = BaseField::GaussianQ.number_field().unwrap();
        let i = nf_gen(&qi);
        let ck = curve_to_field(&x48, &qi);
        let p = CurvePoint::Affine(i.clone(), i.one_like().sub(&i));
        assert!(ck.is_on_curve(&p));
        let t = point_to_parameter(&ck, &p).unwrap();
        assert_eq!(t, nf_from_rat(&qi, br(-1)));
    }

    #[test]
    fn extra_three_torsion_condition_cubic() {
        let c = extra3_condition(&br(2)).unwrap();
        assert_eq!(c.deg(), 3);
        assert!(c.leading().is_one());
        // coefficient check at t = 2 against the stored coefficient function
        let c2 = ratpoly(&[1, 0, 3, -7, 9, -6, 1], 3).evaluate(&br(2));
        assert_eq!(c.coeff(2), c2);
        assert!(extra3_condition(&br(0)).is_err());
        assert!(extra3_condition(&br(1)).is_err());
    }

    #[test]
    fn condition_curve_maps_are_mutually_inverse_bijections_on_samples() {
        // 6 ⊕ 6 condition: rational sample points
        let cc = family_condition_curve(FamilyId::ThreeSix).unwrap();
        for (t, s) in [(br(0), br(0)), (br(2), br(4)), (br(2), br(-4))] {
            assert!(cc.contains(&t, &s));
            let (x, y) = cc.to_target(&t, &s).unwrap();
            assert!(cc.target.is_on_curve(&CurvePoint::Affine(x.clone(), y.clone())));
            let (t2, s2) = cc.from_target(&x, &y).unwrap();
            assert_eq!((t2, s2), (t, s));
        }
        // 4 ⊕ 8 condition: point over ℚ(i)
        let cc = family_condition_curve(FamilyId::TwoEight).unwrap();
        let qi = BaseField::GaussianQ.number_field().unwrap();
        let i = nf_gen(&qi);
        let t = i.one_like();
        let s = i.mul(&i.from_int_like(2));
        assert!(cc.contains(&t, &s));
        let (x, y) = cc.to_target(&t, &s).unwrap();
        let target_k = curve_to_field(&cc.target, &qi);
        assert!(target_k.is_on_curve(&CurvePoint::Affine(x.clone(), y.clone())));
        let (t2, s2) = cc.from_target(&x, &y).unwrap();
        assert_eq!((t2, s2), (t, s));
        assert!(cc.to_target(&i.zero_like(), &i.one_like()).is_err()); // pole at t = 0
        assert!(family_condition_curve(FamilyId::Kubert9).is_err());

        // generic parameters: adjoin s = √rhs(t) and check the image lands on
        // the target and round-trips
        for id in [FamilyId::TwoEight, FamilyId::ThreeSix] {
            let cc = family_condition_curve(id).unwrap();
            for k in 2..7i64 {
                let t0 = rq(k, k + 5);
                let v = cc.rhs.evaluate(&t0);
                if v.is_zero() || rational_sqrt(&v).is_some() {
                    continue;
                }
                let kf = NumberField::create(RatPoly::new(vec![
                    -v,
                    BigRational::zero(),
                    BigRational::one(),
                ]))
                .unwrap();
                let t = nf_from_rat(&kf, t0);
                let s = nf_gen(&kf);
                assert!(cc.contains(&t, &s));
                let (x, y) = cc.to_target(&t, &s).unwrap();
                let tk = curve_to_field(&cc.target, &kf);
                assert!(tk.is_on_curve(&CurvePoint::Affine(x.clone(), y.clone())));
                let (t2, s2) = cc.from_target(&x, &y).unwrap();
                assert_eq!((t2, s2), (t, s));
            }
        }
    }

    /// The designated 2-torsion point of the 2 ⊕ 8 family is divisible by 2
    /// over ℚ(i, √D) with D = (t²−2t−1)(t²+2t−1), and over ℚ(i) exactly when
    /// D is a square there.
    #[test]
    fn two_eight_halving_criterion_matches_square_condition() {
        let spec = family_spec(FamilyId::TwoEight);
        let cc = family_condition_curve(FamilyId::TwoEight).unwrap();
        let qi = BaseField::GaussianQ.number_field().unwrap();
        let mut checked = 0;
        for k in 2..40i64 {
            let t = rq(k, k + 7);
            let Ok(Specialization::Curve(c)) = specialize_family(&spec, &t) else { continue };
            let d = cc.rhs.evaluate(&t);
            // roots of the 2-division cubic: 0, −(t²−1)², −16t⁴/(t²−1)²
            let r1 = BigRational::zero();
            let r2 = -(&t * &t - BigRational::one()) * (&t * &t - BigRational::one());
            // the cubic is x(x² + a₂x + a₄), so the third root is −a₂ − r₂
            let r3 = -&c.a2 - &r2;
            let p = CurvePoint::Affine(r3.clone(), BigRational::zero());
            assert!(c.is_on_curve(&p), "t = {t}");

            // over ℚ(i)
            let ck = curve_to_field(&c, &qi);
            let lift = |q: &BigRational| nf_from_rat(&qi, q.clone());
            let halved_qi = halving_test(
                &ck,
                &CurvePoint::Affine(lift(&r3), lift(&BigRational::zero())),
                &[lift(&r1), lift(&r2), lift(&r3)],
            )
            .unwrap();
            let d_square_qi = numfield::nf_sqrt(&lift(&d)).is_some();
            assert_eq!(halved_qi, d_square_qi, "t = {t}");

            // over ℚ(i, √D)
            if !d_square_qi {
                let tower = numfield::compose_quadratic_tower(&qi, &lift(&d)).unwrap();
                let kf = tower.field.clone();
                let ck = curve_to_field(&c, &kf);
                let lift = |q: &BigRational| nf_from_rat(&kf, q.clone());
                let halved = halving_test(
                    &ck,
                    &CurvePoint::Affine(lift(&r3), lift(&BigRational::zero())),
                    &[lift(&r1), lift(&r2), lift(&r3)],
                )
                .unwrap();
                assert!(halved, "t = {t}: not divisible by 2 over Q(i, sqrt(D))");
            }
            checked += 1;
            if checked == 20 {
                break;
            }
        }
        assert_eq!(checked, 20);
    }

    /// The 3 ⊕ 6 family has full 2-torsion over a field exactly when
    /// 2t(3t²−6t+4) is a square there.
    #[test]
    fn three_six_full_two_torsion_matches_square_condition() {
        let spec = family_spec(FamilyId::ThreeSix);
        let cc = family_condition_curve(FamilyId::ThreeSix).unwrap();
        let mut checked = 0;
        for k in 1..30i64 {
            let t = rq(k, k + 4);
            let Ok(Specialization::Curve(c)) = specialize_family(&spec, &t) else { continue };
            let v = cc.rhs.evaluate(&t);
            assert!(!v.is_zero());
            let quartic = RatPoly::new(c.two_division_poly().coeffs().to_vec());
            let roots_q = factor::rational_roots(&quartic).len();
            assert_eq!(roots_q == 3, rational_sqrt(&v).is_some(), "t = {t}");
            if rational_sqrt(&v).is_none() {
                // full 2-torsion appears over ℚ(√v) ...
                let kf = NumberField::create(RatPoly::new(vec![
                    -v.clone(),
                    BigRational::zero(),
                    BigRational::one(),
                ]))
                .unwrap();
                assert_eq!(numfield::roots_in_field(&quartic, &kf).roots.len(), 3, "t = {t}");
                // ... but not over a mismatched quadratic field ℚ(√5v)
                let w = &v * BigInt::from(5);
                if rational_sqrt(&w).is_none() {
                    let kw = NumberField::create(RatPoly::new(vec![
                        -w,
                        BigRational::zero(),
                        BigRational::one(),
                    ]))
                    .unwrap();
                    assert!(numfield::roots_in_field(&quartic, &kw).roots.len() < 3, "t = {t}");
                }
            }
            checked += 1;
            if checked == 10 {
                break;
            }
        }
        assert_eq!(checked, 10);
    }

    /// Cusp behavior of the stored 6 ⊕ 6 universal family, exactly as the
    /// source data prints it: rational cusp parameters 0 and 2 give singular
    /// models, but the cusp parameter −1 does not (a recorded anomaly), and
    /// non-cusp rational parameters give nonsingular models.
    #[test]
    fn six_six_universal_cusp_predicate_and_anomaly() {
        let spec = family_spec(FamilyId::SixSixUniversal);
        assert!(spec.anomaly.is_some());
        for t in [0i64, 2, -1] {
            assert!(specialize_family(&spec, &br(t)).unwrap().is_cusp());
        }
        assert!(specialize_family(&spec, &br(0)).unwrap().model().singular);
        assert!(specialize_family(&spec, &br(2)).unwrap().model().singular);
        // the documented anomaly: predicate says cusp, model is nonsingular
        assert!(!specialize_family(&spec, &br(-1)).unwrap().model().singular);
        // diagnostics on non-root parameters: expect nonsingular, log otherwise
        let mut discrepancies = Vec::new();
        for k in 1..=20i64 {
            let t = rq(2 * k + 1, 3);
            let s = specialize_family(&spec, &t).unwrap();
            assert!(!s.is_cusp(), "t = {t} is not a root of the cusp polynomial");
            if s.model().singular {
                discrepancies.push(t);
            }
        }
        for t in &discrepancies {
            eprintln!("6x6 universal family: unexpected singular specialization at t = {t}");
        }
        assert!(discrepancies.is_empty());
    }

    #[test]
    fn cusp_parameters_of_discriminant_families_are_singular() {
        // rational roots of the discriminant numerators
        for (id, roots) in [
            (FamilyId::Kubert9, vec![br(0), br(1)]),
            (FamilyId::ThreeSix, vec![br(0), br(2), rq(2, 3)]),
        ] {
            let spec = family_spec(id);
            for t in roots {
                let s = specialize_family(&spec, &t).unwrap();
                assert!(s.is_cusp(), "{id:?} at t = {t}");
                assert!(s.model().singular, "{id:?} at t = {t}");
            }
        }
    }

    #[test]
    fn cm_prime_bound_examples() {
        assert_eq!(cm_prime_bound(6, 3).unwrap(), 7);
        assert_eq!(cm_prime_bound(4, 4).unwrap(), 5);
        assert_eq!(cm_prime_bound(2, 1).unwrap(), 5);
        assert!(cm_prime_bound(3, 1).is_err());
        assert!(cm_prime_bound(4, 0).is_err());
        // definition check: the returned prime qualifies and larger ones fail
        for (w, m) in [(6u32, 3u64), (4, 4), (2, 1), (6, 1), (4, 2)] {
            let p = cm_prime_bound(w, m).unwrap();
            let phi = |l: u64| arith::euler_phi(&BigInt::from(l)).unwrap().to_u64().unwrap();
            let lcm = |a: u64, b: u64| a / gcd_u64(a, b) * b;
            assert!(m % p != 0 && phi(lcm(m, p)) <= 2 * w as u64);
            for q in arith::prime_stream(100) {
                if q > p && m % q != 0 {
                    assert!(phi(lcm(m, q)) > 2 * w as u64, "w={w} m={m} q={q}");
                }
            }
        }
    }

    #[test]
    fn search_below_eleven_finds_nothing() {
        let r = search_exceptional_primes(SearchTarget::Z14, 10).unwrap();
        assert!(r.entries.is_empty());
        assert!(r.certified_primes().is_empty());
        assert!(search_exceptional_primes(SearchTarget::Z14, 1).is_err());
    }

    #[test]
    fn search_z14_to_120() {
        let r = search_exceptional_primes(SearchTarget::Z14, 120).unwrap();
        assert_eq!(r.certified_primes(), vec![11, 43, 67, 107]);
        assert!(r.discrepancies.is_empty());
        for e in &r.entries {
            // re-check the congruences independently of the sieve flags
            assert_eq!(e.prime % 8, 3);
            assert!([1u64, 2, 4].contains(&(e.prime % 7)));
            assert!(e.congruences.iter().all(|c| c.holds));
            assert_eq!(e.field, format!("Q(sqrt(-7), sqrt({}))", e.prime));
            assert_eq!(e.certificates.len(), 2);
            assert_eq!(e.certificates[0].0, BigInt::from(e.prime));
            assert_eq!(e.certificates[1].0, BigInt::from(-7i64) * BigInt::from(e.prime));
            for (_, cert) in &e.certificates {
                assert_eq!(cert.rank_bound, 0);
                assert!(matches!(cert.verdict, Verdict::RankZeroCertified));
            }
        }
    }

    #[test]
    fn search_z15_to_200() {
        let r = search_exceptional_primes(SearchTarget::Z15, 200).unwrap();
        assert_eq!(r.certified_primes(), vec![23, 47, 167]);
        assert!(r.discrepancies.is_empty());
        for e in &r.entries {
            assert_eq!(e.prime % 24, 23);
            assert!([2u64, 3].contains(&(e.prime % 5)));
            assert_eq!(e.field, format!("Q(sqrt(-15), sqrt({}))", e.prime));
        }
    }

    #[test]
    fn exceptional_two_ten_curve() {
        let x = build_exceptional_curve_2x10().unwrap();
        assert_eq!(x.field.defining_poly(), &RatPoly::from_int_coeffs(&[5, 0, -2, 0, 1]));
        assert_eq!(x.j_invariant, br(1728));
        assert_eq!(x.torsion, (2, 10));
        assert_eq!(x.modular_torsion, (1, 12));
        assert_eq!(x.noncusp_modular_points, 6);
        assert!(x.rank_zero_cited);
        assert!(!x.curve.singular);
    }

    #[test]
    fn evidence_z11_agrees() {
        let r = no_exceptional_evidence(EvidenceTarget::Z11).unwrap();
        assert!(r.all_agree(), "discrepancies: {:?}", r.discrepancies());
        assert!(r.items.iter().any(|i| i.observed == "{x - 1, x}"));
    }

    #[test]
    fn evidence_z2x12_agrees() {
        let r = no_exceptional_evidence(EvidenceTarget::Z2x12).unwrap();
        assert!(r.all_agree(), "discrepancies: {:?}", r.discrepancies());
    }

    #[test]
    fn evidence_z3x9_agrees() {
        let r = no_exceptional_evidence(EvidenceTarget::Z3x9).unwrap();
        assert!(r.all_agree(), "discrepancies: {:?}", r.discrepancies());
    }

    #[test]
    fn evidence_z4x8_agrees() {
        let r = no_exceptional_evidence(EvidenceTarget::Z4x8).unwrap();
        assert!(r.all_agree(), "discrepancies: {:?}", r.discrepancies());
    }

    #[test]
    fn evidence_z6x6_agrees() {
        let r = no_exceptional_evidence(EvidenceTarget::Z6x6).unwrap();
        assert!(r.all_agree(), "discrepancies: {:?}", r.discrepancies());
    }

    #[test]
    fn torsion_enumeration_matches_group_order() {
        let e = curve_q(0, 0, 1, -1, 0);
        let t = ecurve::torsion_subgroup_q(&e);
        assert_eq!((t.m, t.n), (1, 6));
        assert_eq!(enumerate_torsion(&e, &t).len(), 6);
        let qi = BaseField::GaussianQ.number_field().unwrap();
        let x48 = curve_to_field(&curve_q(0, 0, 0, -1, 0), &qi);
        let tk = ecurve::torsion_subgroup_k(&x48, &qi, 120);
        assert_eq!((tk.m, tk.n), (2, 4));
        assert_eq!(enumerate_torsion(&x48, &tk).len(), 8);
        // sanity: lift_x is consistent with the enumeration
        for p in enumerate_torsion(&x48, &tk) {
            if let CurvePoint::Affine(x, _) = &p {
                assert!(lift_x(&x48, x).contains(&p));
            }
        }
    }
}

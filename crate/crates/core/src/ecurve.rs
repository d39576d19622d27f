//! Elliptic curves in long Weierstrass form over ℚ or a number field:
//! group law, twists, division polynomials, torsion-locus polynomials, and
//! torsion subgroup computation.
//!
//! Division polynomials are kept on the long model via the b-invariants (no
//! completing the square), so x-coordinates match catalog models literally.
//! ψ_n is represented by its x-part f_n with ψ_n = f_n for odd n and
//! ψ_n = f_n·ψ₂ for even n, where ψ₂² = 4x³ + b₂x² + 2b₄x + b₆.

use crate::arith::{self, ArithError};
use crate::factor;
use crate::field::CoeffField;
use crate::numfield::{self, FieldElement, NumberField};
use crate::poly::{Poly, RatPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::sync::Arc;

/// y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆ with derived invariants.
#[derive(Clone, PartialEq, Debug)]
pub struct WeierstrassCurve<F: CoeffField> {
    pub a1: F,
    pub a3: F,
    pub a2: F,
    pub a4: F,
    pub a6: F,
    pub b2: F,
    pub b4: F,
    pub b6: F,
    pub b8: F,
    pub discriminant: F,
    pub singular: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CurvePoint<F: CoeffField> {
    Infinity,
    Affine(F, F),
}

impl<F: CoeffField> CurvePoint<F> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<&F> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine(x, _) => Some(x),
        }
    }
}

impl<F: CoeffField> WeierstrassCurve<F> {
    /// Coefficients in the order (a₁, a₃, a₂, a₄, a₆). Singular models are
    /// representable (flagged), as the family cusp checks need them.
    pub fn new(a1: F, a3: F, a2: F, a4: F, a6: F) -> Self {
        let four = a1.from_int_like(4);
        let two = a1.from_int_like(2);
        let b2 = a1.mul(&a1).add(&four.mul(&a2));
        let b4 = two.mul(&a4).add(&a1.mul(&a3));
        let b6 = a3.mul(&a3).add(&four.mul(&a6));
        let b8 = a1
            .mul(&a1)
            .mul(&a6)
            .add(&four.mul(&a2).mul(&a6))
            .sub(&a1.mul(&a3).mul(&a4))
            .add(&a2.mul(&a3).mul(&a3))
            .sub(&a4.mul(&a4));
        // 4b₈ = b₂b₆ − b₄² must hold
        debug_assert!(four.mul(&b8) == b2.mul(&b6).sub(&b4.mul(&b4)));
        let discriminant = b2
            .mul(&b2)
            .mul(&b8)
            .neg()
            .sub(&a1.from_int_like(8).mul(&b4).mul(&b4).mul(&b4))
            .sub(&a1.from_int_like(27).mul(&b6).mul(&b6))
            .add(&a1.from_int_like(9).mul(&b2).mul(&b4).mul(&b6));
        let singular = discriminant.is_zero_elem();
        WeierstrassCurve { a1, a3, a2, a4, a6, b2, b4, b6, b8, discriminant, singular }
    }

    pub fn c4(&self) -> F {
        self.b2.mul(&self.b2).sub(&self.b2.from_int_like(24).mul(&self.b4))
    }

    /// j-invariant; None for singular models.
    pub fn j_invariant(&self) -> Option<F> {
        if self.singular {
            return None;
        }
        let c4 = self.c4();
        Some(c4.mul(&c4).mul(&c4).div(&self.discriminant))
    }

    /// x³ + a₂x² + a₄x + a₆.
    pub fn rhs_poly(&self) -> Poly<F> {
        Poly::new(vec![
            self.a6.clone(),
            self.a4.clone(),
            self.a2.clone(),
            self.a1.one_like(),
        ])
    }

    /// ψ₂² = 4x³ + b₂x² + 2b₄x + b₆ (the 2-division cubic, scaled).
    pub fn two_division_poly(&self) -> Poly<F> {
        Poly::new(vec![
            self.b6.clone(),
            self.b4.mul(&self.b4.from_int_like(2)),
            self.b2.clone(),
            self.a1.from_int_like(4),
        ])
    }

    pub fn is_on_curve(&self, p: &CurvePoint<F>) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine(x, y) => {
                let lhs = y
                    .mul(y)
                    .add(&self.a1.mul(x).mul(y))
                    .add(&self.a3.mul(y));
                let rhs = self.rhs_poly().evaluate(x);
                lhs == rhs
            }
        }
    }

    pub fn negate(&self, p: &CurvePoint<F>) -> CurvePoint<F> {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine(x, y) => CurvePoint::Affine(
                x.clone(),
                y.neg().sub(&self.a1.mul(x)).sub(&self.a3),
            ),
        }
    }

    /// Chord–tangent addition; checks both inputs lie on the curve.
    pub fn add_points(
        &self,
        p: &CurvePoint<F>,
        q: &CurvePoint<F>,
    ) -> Result<CurvePoint<F>, ArithError> {
        if !self.is_on_curve(p) || !self.is_on_curve(q) {
            return Err(ArithError::InvalidArgument("point not on curve".into()));
        }
        Ok(self.add_unchecked(p, q))
    }

    pub(crate) fn add_unchecked(&self, p: &CurvePoint<F>, q: &CurvePoint<F>) -> CurvePoint<F> {
        let (x1, y1) = match p {
            CurvePoint::Infinity => return q.clone(),
            CurvePoint::Affine(x, y) => (x, y),
        };
        let (x2, y2) = match q {
            CurvePoint::Infinity => return p.clone(),
            CurvePoint::Affine(x, y) => (x, y),
        };
        let (lambda, nu) = if x1 != x2 {
            let dx = x2.sub(x1);
            let inv = dx.inv().expect("x1 ≠ x2");
            let lambda = y2.sub(y1).mul(&inv);
            let nu = y1.mul(x2).sub(&y2.mul(x1)).mul(&inv);
            (lambda, nu)
        } else {
            // same x: either Q = −P or a doubling
            let denom = y1
                .mul(&y1.from_int_like(2))
                .add(&self.a1.mul(x1))
                .add(&self.a3);
            if denom.is_zero_elem() || y1 != y2 {
                return CurvePoint::Infinity;
            }
            let inv = denom.inv().unwrap();
            let three = x1.from_int_like(3);
            let lambda = three
                .mul(x1)
                .mul(x1)
                .add(&self.a2.mul(&x1.from_int_like(2)).mul(x1))
                .add(&self.a4)
                .sub(&self.a1.mul(y1))
                .mul(&inv);
            let nu = x1
                .mul(x1)
                .mul(x1)
                .neg()
                .add(&self.a4.mul(x1))
                .add(&self.a6.mul(&x1.from_int_like(2)))
                .sub(&self.a3.mul(y1))
                .mul(&inv);
            (lambda, nu)
        };
        let x3 = lambda
            .mul(&lambda)
            .add(&self.a1.mul(&lambda))
            .sub(&self.a2)
            .sub(x1)
            .sub(x2);
        let y3 = lambda
            .add(&self.a1)
            .mul(&x3)
            .neg()
            .sub(&nu)
            .sub(&self.a3);
        CurvePoint::Affine(x3, y3)
    }

    pub fn scalar_mul(&self, n: i64, p: &CurvePoint<F>) -> CurvePoint<F> {
        let (mut k, base) = if n < 0 {
            ((-n) as u64, self.negate(p))
        } else {
            (n as u64, p.clone())
        };
        let mut acc = CurvePoint::Infinity;
        let mut cur = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &cur);
            }
            k >>= 1;
            if k > 0 {
                cur = self.add_unchecked(&cur, &cur);
            }
        }
        acc
    }

    /// Exact order of P if ≤ bound; None if it exceeds the bound.
    pub fn point_order(&self, p: &CurvePoint<F>, bound: u32) -> Option<u32> {
        if p.is_infinity() {
            return Some(1);
        }
        let mut acc = p.clone();
        for n in 1..=bound {
            if acc.is_infinity() {
                return Some(n);
            }
            acc = self.add_unchecked(&acc, p);
        }
        None
    }
}

// -- curves over ℚ ----------------------------------------------------------

pub type CurveQ = WeierstrassCurve<BigRational>;

pub fn curve_q(a1: i64, a3: i64, a2: i64, a4: i64, a6: i64) -> CurveQ {
    let r = |n: i64| BigRational::from(BigInt::from(n));
    WeierstrassCurve::new(r(a1), r(a3), r(a2), r(a4), r(a6))
}

/// y² = x³ + ax² + bx with rational a, b: the short model with a rational
/// 2-torsion point at the origin, the shape all descent runs on.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShortABCurve {
    pub a: BigRational,
    pub b: BigRational,
}

impl ShortABCurve {
    pub fn new(a: BigRational, b: BigRational) -> Result<Self, ArithError> {
        let four = BigRational::from(BigInt::from(4));
        if b.is_zero() || (&a * &a - four * &b).is_zero() {
            return Err(ArithError::InvalidArgument(
                "singular short model: need b ≠ 0 and a² − 4b ≠ 0".into(),
            ));
        }
        Ok(ShortABCurve { a, b })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self, ArithError> {
        ShortABCurve::new(
            BigRational::from(BigInt::from(a)),
            BigRational::from(BigInt::from(b)),
        )
    }

    pub fn curve(&self) -> CurveQ {
        WeierstrassCurve::new(
            BigRational::zero(),
            BigRational::zero(),
            self.a.clone(),
            self.b.clone(),
            BigRational::zero(),
        )
    }

    /// Quadratic twist by squarefree d: (a, b) ↦ (ad, bd²).
    pub fn quadratic_twist(&self, d: &BigInt) -> ShortABCurve {
        let dq = BigRational::from(d.clone());
        ShortABCurve { a: &self.a * &dq, b: &self.b * &dq * &dq }
    }
}

// -- division polynomials ----------------------------------------------------

/// x-part f_n of the n-th division polynomial (ψ_n = f_n·ψ₂^(n mod 2 = 0)).
pub fn division_poly_x<F: CoeffField>(curve: &WeierstrassCurve<F>, n: u32) -> Poly<F> {
    assert!(n >= 1);
    let mut memo: BTreeMap<u32, Poly<F>> = BTreeMap::new();
    let b = curve.two_division_poly();
    let b_sq = b.mul(&b);
    f_rec(curve, n, &b_sq, &mut memo)
}

fn f_rec<F: CoeffField>(
    curve: &WeierstrassCurve<F>,
    n: u32,
    b_sq: &Poly<F>,
    memo: &mut BTreeMap<u32, Poly<F>>,
) -> Poly<F> {
    if let Some(f) = memo.get(&n) {
        return f.clone();
    }
    let one = curve.a1.one_like();
    let val = match n {
        0 => Poly::zero(),
        1 | 2 => Poly::constant(one),
        3 => Poly::new(vec![
            curve.b8.clone(),
            curve.b6.mul(&one.from_int_like(3)),
            curve.b4.mul(&one.from_int_like(3)),
            curve.b2.clone(),
            one.from_int_like(3),
        ]),
        4 => Poly::new(vec![
            curve.b4.mul(&curve.b8).sub(&curve.b6.mul(&curve.b6)),
            curve.b2.mul(&curve.b8).sub(&curve.b4.mul(&curve.b6)),
            curve.b8.mul(&one.from_int_like(10)),
            curve.b6.mul(&one.from_int_like(10)),
            curve.b4.mul(&one.from_int_like(5)),
            curve.b2.clone(),
            one.from_int_like(2),
        ]),
        _ => {
            if n % 2 == 1 {
                let m = (n - 1) / 2;
                let fm = f_rec(curve, m, b_sq, memo);
                let fm1 = f_rec(curve, m + 1, b_sq, memo);
                let fm2 = f_rec(curve, m + 2, b_sq, memo);
                let fmm = f_rec(curve, m - 1, b_sq, memo);
                let t1 = fm2.mul(&fm).mul(&fm).mul(&fm);
                let t2 = fmm.mul(&fm1).mul(&fm1).mul(&fm1);
                if m % 2 == 0 {
                    t1.mul(b_sq).sub(&t2)
                } else {
                    t1.sub(&t2.mul(b_sq))
                }
            } else {
                let m = n / 2;
                let fm = f_rec(curve, m, b_sq, memo);
                let fm1 = f_rec(curve, m + 1, b_sq, memo);
                let fm2 = f_rec(curve, m + 2, b_sq, memo);
                let fmm1 = f_rec(curve, m - 1, b_sq, memo);
                let fmm2 = f_rec(curve, m - 2, b_sq, memo);
                let inner = fm2.mul(&fmm1).mul(&fmm1).sub(&fmm2.mul(&fm1).mul(&fm1));
                fm.mul(&inner)
            }
        }
    };
    memo.insert(n, val.clone());
    val
}

/// λ_n: monic squarefree polynomial whose roots are exactly the
/// x-coordinates of the points P ≠ O with nP = O (over the curve's field).
pub fn torsion_locus_monic<F: CoeffField>(
    curve: &WeierstrassCurve<F>,
    n: u32,
) -> Poly<F> {
    assert!(n >= 2);
    let f = division_poly_x(curve, n);
    let full = if n % 2 == 0 {
        f.mul(&curve.two_division_poly())
    } else {
        f
    };
    full.squarefree_part()
}

/// λ_n over ℚ as a primitive integer polynomial with positive leading
/// coefficient.
pub fn torsion_locus(curve: &CurveQ, n: u32) -> RatPoly {
    assert!(n >= 2);
    let f = division_poly_x(curve, n);
    let full = if n % 2 == 0 {
        f.mul(&curve.two_division_poly())
    } else {
        f
    };
    factor::squarefree_part(&full)
}

// -- torsion over ℚ ----------------------------------------------------------

/// Invariants (m, n) with m | n plus generators; the group is ℤ/m ⊕ ℤ/n.
#[derive(Clone, Debug)]
pub struct TorsionGroup<F: CoeffField> {
    pub m: u32,
    pub n: u32,
    pub generators: Vec<CurvePoint<F>>,
}

impl<F: CoeffField> TorsionGroup<F> {
    pub fn order(&self) -> u32 {
        self.m * self.n
    }
}

/// #E(𝔽_p) by affine enumeration of the completed square, for odd primes of
/// good reduction (p must not divide Δ's numerator or any denominator).
pub fn count_points_mod_p(curve: &CurveQ, p: &BigInt) -> Result<u64, ArithError> {
    if p < &BigInt::from(3) || !arith::is_prime(p) {
        return Err(ArithError::InvalidArgument("need an odd prime".into()));
    }
    let b = curve.two_division_poly();
    let bp = crate::modp::ModPoly::from_rat_poly(
        &RatPoly::new(b.coeffs().to_vec()),
        p,
    )
    .map_err(|_| ArithError::InvalidArgument(format!("model not {p}-integral")))?;
    if curve.discriminant.numer().mod_floor(p).is_zero()
        || !curve.discriminant.denom().mod_floor(p).is_positive()
    {
        return Err(ArithError::InvalidArgument(format!("bad reduction at {p}")));
    }
    // quadratic residues mod p
    let pu = u64::try_from(p.to_biguint().unwrap().to_u64_digits()[0]).unwrap();
    let mut is_qr = vec![false; pu as usize];
    for z in 0..pu {
        is_qr[((z * z) % pu) as usize] = true;
    }
    let mut count: u64 = 1; // infinity
    let mut x = BigInt::zero();
    for _ in 0..pu {
        let v = bp.evaluate(&x);
        let vu = u64::try_from(v.to_biguint().unwrap().to_u64_digits().first().copied().unwrap_or(0)).unwrap();
        if vu == 0 {
            count += 1;
        } else if is_qr[vu as usize] {
            count += 2;
        }
        x += 1;
    }
    Ok(count)
}

fn good_odd_primes_for(curve: &CurveQ, count: usize) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut p = BigInt::from(3);
    while out.len() < count {
        if count_points_mod_p(curve, &p).is_ok() {
            out.push(p.clone());
        }
        let mut q = &p + 2;
        while !arith::is_prime(&q) {
            q += 2;
        }
        p = q;
    }
    out
}

/// y-coordinates over the curve's field for a given x on the curve, solving
/// the long-model quadratic in y via a field square root.
pub fn lift_x<F: CoeffField>(curve: &WeierstrassCurve<F>, x: &F) -> Vec<CurvePoint<F>> {
    // y = (−(a₁x + a₃) ± √disc)/2, disc = (a₁x+a₃)² + 4·rhs(x)
    let lin = curve.a1.mul(x).add(&curve.a3);
    let disc = lin
        .mul(&lin)
        .add(&curve.rhs_poly().evaluate(x).mul(&x.from_int_like(4)));
    let Some(sq) = disc.field_sqrt() else {
        return Vec::new();
    };
    let half = x.from_int_like(2).inv().unwrap();
    let y1 = lin.neg().add(&sq).mul(&half);
    let y2 = lin.neg().sub(&sq).mul(&half);
    let mut out = vec![CurvePoint::Affine(x.clone(), y1.clone())];
    if y2 != y1 {
        out.push(CurvePoint::Affine(x.clone(), y2));
    }
    out
}

/// Full q-Sylow data: all points of order a power of q (q^j ≤ exponent cap),
/// given a per-level x-root oracle.
fn sylow_points<F: CoeffField>(
    curve: &WeierstrassCurve<F>,
    q: u32,
    max_power: u32,
    roots_of_locus: &mut dyn FnMut(u32) -> Vec<F>,
) -> Vec<CurvePoint<F>> {
    let mut points: Vec<CurvePoint<F>> = Vec::new();
    let mut qj = 1u32;
    for _ in 1..=max_power {
        qj *= q;
        let before = points.len();
        for x in roots_of_locus(qj) {
            for pt in lift_x(curve, &x) {
                if !points.contains(&pt) && curve.is_on_curve(&pt) {
                    // the locus gives x with [qj]P = O candidates; keep only
                    // points whose order really divides qj (guards against
                    // y-lifts landing on the twist at special x)
                    if curve.scalar_mul(qj as i64, &pt).is_infinity() {
                        points.push(pt);
                    }
                }
            }
        }
        if points.len() == before {
            break;
        }
    }
    points
}

/// Group structure of one Sylow subgroup from its complete point list.
fn sylow_structure<F: CoeffField>(
    curve: &WeierstrassCurve<F>,
    points: &[CurvePoint<F>],
    q: u32,
) -> (u32, u32, Option<CurvePoint<F>>, Option<CurvePoint<F>>) {
    if points.is_empty() {
        return (1, 1, None, None);
    }
    let total = points.len() as u32 + 1; // plus O
    let bound = total;
    let mut best: (u32, &CurvePoint<F>) = (1, &points[0]);
    for p in points {
        let o = curve.point_order(p, bound).expect("torsion point");
        if o > best.0 {
            best = (o, p);
        }
    }
    let n = best.0;
    let gen_n = best.1.clone();
    assert!(total % n == 0, "Sylow subgroup size must be divisible by max order");
    let m = total / n;
    if m == 1 {
        return (1, n, Some(gen_n), None);
    }
    // find a complement generator of order m outside <gen_n>
    let mut cyclic: Vec<CurvePoint<F>> = Vec::new();
    let mut acc = CurvePoint::Infinity;
    for _ in 0..n {
        cyclic.push(acc.clone());
        acc = curve.add_unchecked(&acc, &gen_n);
    }
    for p in points {
        if curve.point_order(p, bound) == Some(m) && !cyclic.contains(p) {
            // verify independence: jP ∉ <gen_n> for 0 < j < m
            let mut ok = true;
            let mut jp = p.clone();
            let mut j = 1;
            while j < m {
                if cyclic.contains(&jp) {
                    ok = false;
                    break;
                }
                jp = curve.add_unchecked(&jp, p);
                j += 1;
            }
            if ok {
                return (m, n, Some(gen_n), Some(p.clone()));
            }
        }
    }
    panic!("q = {q}: no complement generator found; point list not a group");
}

fn assemble_torsion<F: CoeffField>(
    curve: &WeierstrassCurve<F>,
    sylows: Vec<(u32, u32, Option<CurvePoint<F>>, Option<CurvePoint<F>>)>,
) -> TorsionGroup<F> {
    let mut m = 1u32;
    let mut n = 1u32;
    let mut gen_big = CurvePoint::Infinity;
    let mut gen_small = CurvePoint::Infinity;
    for (mq, nq, gn, gm) in sylows {
        m *= mq;
        n *= nq;
        if let Some(g) = gn {
            gen_big = curve.add_unchecked(&gen_big, &g);
        }
        if let Some(g) = gm {
            gen_small = curve.add_unchecked(&gen_small, &g);
        }
    }
    let mut generators = Vec::new();
    if m > 1 {
        generators.push(gen_small);
    }
    if n > 1 {
        generators.push(gen_big);
    }
    TorsionGroup { m, n, generators }
}

/// Exact torsion subgroup over ℚ: order bound from point counts modulo two
/// good odd primes, points from rational roots of the torsion loci.
pub fn torsion_subgroup_q(curve: &CurveQ) -> TorsionGroup<BigRational> {
    assert!(!curve.singular, "torsion of a singular model");
    let primes = good_odd_primes_for(curve, 2);
    let bound: u64 = primes
        .iter()
        .map(|p| count_points_mod_p(curve, p).unwrap())
        .fold(0, |acc, c| acc.gcd(&c));
    let mut sylows = Vec::new();
    for q in [2u32, 3, 5, 7, 11, 13] {
        let mut max_pow = 0u32;
        let mut t = bound;
        while t % (q as u64) == 0 {
            max_pow += 1;
            t /= q as u64;
        }
        if max_pow == 0 {
            continue;
        }
        let pts = sylow_points(curve, q, max_pow, &mut |qj| {
            factor::rational_roots(&torsion_locus(curve, qj))
                .into_iter()
                .map(|(r, _)| r)
                .collect()
        });
        if !pts.is_empty() {
            sylows.push(sylow_structure(curve, &pts, q));
        }
    }
    assemble_torsion(curve, sylows)
}

// -- torsion over a number field ----------------------------------------------

pub type CurveK = WeierstrassCurve<FieldElement>;

/// Lift a rational curve into K.
pub fn curve_to_field(curve: &CurveQ, field: &Arc<NumberField>) -> CurveK {
    let f = |c: &BigRational| numfield::nf_from_rat(field, c.clone());
    WeierstrassCurve::new(f(&curve.a1), f(&curve.a3), f(&curve.a2), f(&curve.a4), f(&curve.a6))
}

fn curve_rational_model(curve: &CurveK) -> Option<CurveQ> {
    Some(WeierstrassCurve::new(
        curve.a1.as_rational()?,
        curve.a3.as_rational()?,
        curve.a2.as_rational()?,
        curve.a4.as_rational()?,
        curve.a6.as_rational()?,
    ))
}

/// All torsion of exponent dividing the bound, over the curve's number
/// field. The caller supplies the exponent bound (CM bound or a cited group
/// order); the computation then finds every point of prime-power order
/// dividing it via the torsion loci and in-field root search.
pub fn torsion_subgroup_k(
    curve: &CurveK,
    field: &Arc<NumberField>,
    exponent_bound: u64,
) -> TorsionGroup<FieldElement> {
    assert!(!curve.singular);
    let rational_model = curve_rational_model(curve);
    let mut sylows = Vec::new();
    for q in [2u32, 3, 5, 7, 11, 13] {
        let mut max_pow = 0u32;
        let mut t = exponent_bound;
        while t % (q as u64) == 0 {
            max_pow += 1;
            t /= q as u64;
        }
        if max_pow == 0 {
            continue;
        }
        let pts = sylow_points(curve, q, max_pow, &mut |qj| {
            if let Some(cq) = &rational_model {
                let locus = torsion_locus(cq, qj);
                numfield::roots_in_field(&locus, field).roots
            } else {
                let locus = torsion_locus_monic(curve, qj);
                numfield::roots_of_kpoly(&locus, field)
            }
        });
        if !pts.is_empty() {
            sylows.push(sylow_structure(curve, &pts, q));
        }
    }
    assemble_torsion(curve, sylows)
}

// -- 2-divisibility ------------------------------------------------------------

/// Is P ∈ 2E(K)? Requires a model y² = (x−e₁)(x−e₂)(x−e₃) with full
/// 2-torsion over the curve's field; decided by the square criterion on the
/// x(P)−eᵢ, with the standard replacement product when x(P) hits a root.
pub fn halving_test<F: CoeffField>(
    curve: &WeierstrassCurve<F>,
    p: &CurvePoint<F>,
    roots: &[F; 3],
) -> Result<bool, ArithError> {
    if !curve.a1.is_zero_elem() || !curve.a3.is_zero_elem() {
        return Err(ArithError::InvalidArgument(
            "halving test needs a model y² = cubic".into(),
        ));
    }
    for e in roots {
        if !curve.rhs_poly().evaluate(e).is_zero_elem() {
            return Err(ArithError::InvalidArgument(
                "supplied values are not roots of the 2-division cubic".into(),
            ));
        }
    }
    let CurvePoint::Affine(x, _) = p else {
        return Ok(true);
    };
    for i in 0..3 {
        let d = x.sub(&roots[i]);
        let value = if d.is_zero_elem() {
            let j = (i + 1) % 3;
            let k = (i + 2) % 3;
            roots[i].sub(&roots[j]).mul(&roots[i].sub(&roots[k]))
        } else {
            d
        };
        if value.field_sqrt().is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Full 2-torsion x-coordinates of a y² = cubic model over its field, if all
/// three exist.
pub fn full_two_torsion_roots(curve: &CurveQ) -> Option<[BigRational; 3]> {
    let cubic = RatPoly::new(curve.rhs_poly().coeffs().to_vec());
    let roots = factor::rational_roots(&cubic);
    if roots.len() == 3 {
        Some([roots[0].0.clone(), roots[1].0.clone(), roots[2].0.clone()])
    } else {
        None
    }
}

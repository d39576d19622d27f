//! Number fields ℚ[x]/(g) of degree ≤ 4: element arithmetic, square roots,
//! quadratic tower composition, and locating roots of rational polynomials
//! inside a given field.
//!
//! Factoring over a field K works through the norm: for a squarefree monic
//! f ∈ K[x] pick a shift x → x + s·θ making the norm
//! N(x) = Res_θ(g(θ), f(x + s·θ)) squarefree; then irreducible factors of f
//! correspond to irreducible rational factors m of N via gcd_K(f, m). This
//! needs only rational factorization (already built) plus gcds in K[x], and
//! in particular gives square roots without any circular recursion.

use crate::arith::{self, ArithError};
use crate::factor::{self};
use crate::field::CoeffField;
use crate::poly::{Poly, RatPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NumberField {
    g: RatPoly,
    degree: usize,
}

/// Element of a number field in the power basis of the generator θ; the
/// coefficient vector always has length = field degree. Elements carry their
/// field, so they satisfy the coefficient-field trait on their own.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<NumberField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.g == other.field.g && self.coeffs == other.coeffs
    }
}
impl Eq for FieldElement {}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({:?} mod {})", self.coeffs, self.field.g)
    }
}

impl NumberField {
    /// Create ℚ[x]/(g) for monic g of degree 1–4, certifying irreducibility
    /// by bounded factor extraction; a discovered factor is reported back.
    pub fn create(g: RatPoly) -> Result<Arc<NumberField>, ArithError> {
        let Some(deg) = g.degree() else {
            return Err(ArithError::InvalidArgument("zero defining polynomial".into()));
        };
        if !(1..=4).contains(&deg) {
            return Err(ArithError::InvalidArgument(format!(
                "field degree {deg} outside 1..=4"
            )));
        }
        if !g.leading().is_one() {
            return Err(ArithError::InvalidArgument(
                "defining polynomial must be monic".into(),
            ));
        }
        if deg > 1 {
            let bf = factor::extract_factors_bounded(&g, deg - 1);
            if let Some((f, _)) = bf.factors.first() {
                return Err(ArithError::InvalidArgument(format!(
                    "defining polynomial is reducible: factor {f}"
                )));
            }
        }
        Ok(Arc::new(NumberField { degree: deg, g }))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn defining_poly(&self) -> &RatPoly {
        &self.g
    }
}

/// Element constructors take the field handle explicitly.
pub fn nf_element(field: &Arc<NumberField>, coeffs: Vec<BigRational>) -> FieldElement {
    let reduced = RatPoly::new(coeffs).rem(&field.g);
    let mut c = reduced.coeffs().to_vec();
    c.resize(field.degree, BigRational::zero());
    FieldElement { field: field.clone(), coeffs: c }
}

pub fn nf_gen(field: &Arc<NumberField>) -> FieldElement {
    nf_element(field, vec![BigRational::zero(), BigRational::one()])
}

pub fn nf_from_rat(field: &Arc<NumberField>, q: BigRational) -> FieldElement {
    nf_element(field, vec![q])
}

impl FieldElement {
    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The element as a polynomial in θ over ℚ.
    pub fn as_poly(&self) -> RatPoly {
        RatPoly::new(self.coeffs.clone())
    }

    /// Deterministic ordering on elements of one field (coefficient lex).
    pub fn cmp_coeffs(&self, other: &Self) -> Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl CoeffField for FieldElement {
    fn zero_like(&self) -> Self {
        nf_from_rat(&self.field, BigRational::zero())
    }
    fn one_like(&self) -> Self {
        nf_from_rat(&self.field, BigRational::one())
    }
    fn from_rat_like(&self, q: &BigRational) -> Self {
        nf_from_rat(&self.field, q.clone())
    }
    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field.g, other.field.g);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        FieldElement { field: self.field.clone(), coeffs }
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.field.g, other.field.g);
        let prod = self.as_poly().mul(&other.as_poly()).rem(&self.field.g);
        let mut c = prod.coeffs().to_vec();
        c.resize(self.field.degree, BigRational::zero());
        FieldElement { field: self.field.clone(), coeffs: c }
    }
    fn neg(&self) -> Self {
        FieldElement {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero_elem() {
            return None;
        }
        let (d, s, _) = rat_bezout(&self.as_poly(), &self.field.g);
        debug_assert_eq!(d.degree(), Some(0), "defining polynomial is irreducible");
        let inv_poly = s.scale(&d.coeff(0).recip());
        Some(nf_element(&self.field, inv_poly.coeffs().to_vec()))
    }
    fn is_zero_elem(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn field_sqrt(&self) -> Option<Self> {
        nf_sqrt(self)
    }
    fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }
}

/// Extended Euclid over ℚ[x]: returns (gcd, s, t) with s·a + t·b = gcd.
fn rat_bezout(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = RatPoly::one();
    let mut s1 = RatPoly::zero();
    let mut t0 = RatPoly::zero();
    let mut t1 = RatPoly::one();
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1);
        let s2 = s0.sub(&q.mul(&s1));
        let t2 = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    (r0, s0, t0)
}

/// Lift a rational polynomial into K[x].
pub fn lift_poly(f: &RatPoly, field: &Arc<NumberField>) -> Poly<FieldElement> {
    Poly::new(f.coeffs().iter().map(|c| nf_from_rat(field, c.clone())).collect())
}

/// Norm of a monic polynomial over K down to ℚ:
/// N(x) = ∏_{g(θᵢ)=0} f(x; θ → θᵢ) = Res_θ(g, f), computed by evaluation at
/// rational points and Lagrange interpolation.
pub fn norm_poly(f: &Poly<FieldElement>, field: &Arc<NumberField>) -> RatPoly {
    assert!(!f.is_zero());
    let n = f.deg() * field.degree;
    let mut points = Vec::with_capacity(n + 1);
    let mut x0 = BigInt::zero();
    while points.len() < n + 1 {
        let xq = BigRational::from(x0.clone());
        let val = f.evaluate(&nf_from_rat(field, xq.clone()));
        let h = val.as_poly();
        let r = if h.is_zero() {
            BigRational::zero()
        } else {
            field.g.resultant(&h)
        };
        points.push((xq, r));
        // alternate 0, 1, -1, 2, -2, ...
        x0 = if x0.is_positive() { -x0 } else { -x0 + 1 };
    }
    RatPoly::interpolate(&points)
}

/// Monic irreducible factors of a squarefree monic polynomial over K
/// (Trager's method with generator shifts).
pub fn trager_factor(
    f: &Poly<FieldElement>,
    field: &Arc<NumberField>,
) -> Vec<Poly<FieldElement>> {
    factor_over_field(f, field, None)
}

/// Shared core: factor a squarefree monic f over K. When `max_norm_deg` is
/// given, only rational norm factors of degree ≤ that bound are pursued,
/// which is enough to find all K-roots cheaply for large f.
fn factor_over_field(
    f: &Poly<FieldElement>,
    field: &Arc<NumberField>,
    max_norm_deg: Option<usize>,
) -> Vec<Poly<FieldElement>> {
    assert!(f.leading().is_one_elem(), "input must be monic");
    if f.deg() == 0 {
        return Vec::new();
    }
    if f.deg() == 1 {
        return vec![f.clone()];
    }
    let theta = nf_gen(field);
    // choose a shift making the norm squarefree
    let mut s: i64 = 0;
    let (fs, norm, shift) = loop {
        let shift = theta.from_int_like(s).mul(&theta);
        let shifted = f.shift(&shift);
        let n = norm_poly(&shifted, field);
        if !n.is_zero() && n.gcd_fast(&n.derivative()).degree() == Some(0) {
            break (shifted, n, shift);
        }
        s = if s >= 0 { -(s + 1) } else { -s };
    };
    let bound = max_norm_deg.unwrap_or_else(|| norm.deg());
    let bf = factor::extract_factors_bounded(&norm, bound);
    let mut out = Vec::new();
    for (m, _) in &bf.factors {
        let mk = lift_poly(m, field);
        let h = fs.gcd(&mk);
        if h.degree().is_some_and(|d| d >= 1) {
            // undo the shift: factor of f is h(x - shift)... f(x) = fs(x - shift)
            out.push(h.shift(&shift.neg()));
        }
    }
    if max_norm_deg.is_none() {
        debug_assert_eq!(
            out.iter().map(|h| h.deg()).sum::<usize>(),
            f.deg(),
            "complete factorization must cover f"
        );
    }
    out.sort_by(|a, b| {
        (a.deg(), a.coeffs().len())
            .cmp(&(b.deg(), b.coeffs().len()))
            .then_with(|| {
                for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
                    match x.cmp_coeffs(y) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            })
    });
    out
}

/// All roots in K of a squarefree monic polynomial over K.
pub fn roots_of_kpoly(
    f: &Poly<FieldElement>,
    field: &Arc<NumberField>,
) -> Vec<FieldElement> {
    // a root generates a subfield, so its minimal polynomial over ℚ has
    // degree ≤ deg K; only norm factors up to that degree matter
    let factors = factor_over_field(f, field, Some(field.degree));
    let mut roots: Vec<FieldElement> = factors
        .iter()
        .filter(|h| h.deg() == 1)
        .map(|h| h.coeff(0).neg())
        .collect();
    roots.sort_by(|a, b| a.cmp_coeffs(b));
    roots.dedup();
    debug_assert!(roots.iter().all(|r| f.evaluate(r).is_zero_elem()));
    roots
}

/// A square root of γ in its field, if one exists (certified both ways).
pub fn nf_sqrt(gamma: &FieldElement) -> Option<FieldElement> {
    if gamma.is_zero_elem() {
        return Some(gamma.clone());
    }
    let field = gamma.field().clone();
    if field.degree == 1 {
        let q = gamma.as_rational().unwrap();
        return arith::rational_sqrt(&q).map(|r| nf_from_rat(&field, r));
    }
    // fast path: rational γ with rational square root
    if let Some(q) = gamma.as_rational() {
        if let Some(r) = arith::rational_sqrt(&q) {
            return Some(nf_from_rat(&field, r));
        }
    }
    let one = gamma.one_like();
    let f = Poly::new(vec![gamma.neg(), gamma.zero_like(), one]);
    let roots = roots_of_kpoly(&f, &field);
    let root = roots.into_iter().next()?;
    debug_assert!(root.mul(&root) == *gamma);
    Some(root)
}

/// Outcome of root search in a field: the roots plus a completeness flag.
/// With the degree-4 field cap every search is complete; the flag records
/// that certification explicitly.
#[derive(Clone, Debug)]
pub struct FieldRoots {
    pub roots: Vec<FieldElement>,
    pub complete: bool,
}

/// All roots in K of a nonzero rational polynomial, of any degree: factor
/// over ℚ up to degree 4 (a root of a higher-degree irreducible would
/// generate a field of degree > deg K ≥ its own degree, impossible), then
/// search each low-degree factor inside K.
pub fn roots_in_field(f: &RatPoly, field: &Arc<NumberField>) -> FieldRoots {
    assert!(!f.is_zero());
    let cap = 4.min(f.deg().max(1));
    let bf = factor::extract_factors_bounded(f, cap);
    let mut roots: Vec<FieldElement> = Vec::new();
    for (m, _) in &bf.factors {
        let d = m.deg();
        if d > field.degree || field.degree % d != 0 {
            continue;
        }
        match d {
            1 => {
                let r = -(m.coeff(0) / m.coeff(1));
                roots.push(nf_from_rat(field, r));
            }
            2 => {
                // quadratic formula with the in-field square root
                let a = nf_from_rat(field, m.coeff(2));
                let b = nf_from_rat(field, m.coeff(1));
                let c = nf_from_rat(field, m.coeff(0));
                let disc = b.mul(&b).sub(&a.mul(&c).mul(&a.from_int_like(4)));
                if let Some(sq) = nf_sqrt(&disc) {
                    let two_a_inv = a.mul(&a.from_int_like(2)).inv().unwrap();
                    let r1 = b.neg().add(&sq).mul(&two_a_inv);
                    let r2 = b.neg().sub(&sq).mul(&two_a_inv);
                    roots.push(r1.clone());
                    if r2 != r1 {
                        roots.push(r2);
                    }
                }
            }
            _ => {
                let mk = lift_poly(m, field);
                let lcinv = mk.leading().inv().unwrap();
                roots.extend(roots_of_kpoly(&mk.scale(&lcinv), field));
            }
        }
    }
    roots.sort_by(|a, b| a.cmp_coeffs(b));
    roots.dedup();
    debug_assert!(roots
        .iter()
        .all(|r| lift_poly(f, field).evaluate(r).is_zero_elem()));
    FieldRoots { roots, complete: true }
}

/// Result of adjoining √δ to a base field of degree ≤ 2.
#[derive(Clone, Debug)]
pub struct TowerEmbedding {
    pub field: Arc<NumberField>,
    /// image of the base-field generator inside the new field
    pub base_gen_image: FieldElement,
    /// element with square = (embedded) δ; equals the new generator when the
    /// new generator is √δ itself
    pub sqrt_delta: FieldElement,
}

impl TowerEmbedding {
    /// Ring-homomorphic embedding of a base-field element.
    pub fn embed(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.base_gen_image.zero_like();
        for c in x.coeffs().iter().rev() {
            acc = acc
                .mul(&self.base_gen_image)
                .add(&nf_from_rat(&self.field, c.clone()));
        }
        acc
    }
}

/// Adjoin a square root of δ (a nonsquare element of a field F of degree
/// ≤ 2), producing a field of degree 2·deg F with a primitive generator.
pub fn compose_quadratic_tower(
    base: &Arc<NumberField>,
    delta: &FieldElement,
) -> Result<TowerEmbedding, ArithError> {
    if base.degree > 2 {
        return Err(ArithError::InvalidArgument(
            "tower base must have degree ≤ 2".into(),
        ));
    }
    if nf_sqrt(delta).is_some() {
        return Err(ArithError::InvalidArgument(
            "δ is a square in the base field; the tower would be degenerate".into(),
        ));
    }
    if base.degree == 1 {
        let d0 = delta.as_rational().unwrap();
        let g = RatPoly::new(vec![-d0, BigRational::zero(), BigRational::one()]);
        let k = NumberField::create(g)?;
        let base_root = -base.g.coeff(0);
        return Ok(TowerEmbedding {
            base_gen_image: nf_from_rat(&k, base_root),
            sqrt_delta: nf_gen(&k),
            field: k,
        });
    }
    let c0 = delta.coeffs()[0].clone();
    let c1 = delta.coeffs()[1].clone();
    if !c1.is_zero() {
        // w² = c0 + c1·α ⇒ α = (w² − c0)/c1; substitute into g_F to get the
        // degree-4 minimal polynomial of w
        let alpha_of_w = RatPoly::new(vec![
            -&c0 / &c1,
            BigRational::zero(),
            c1.recip(),
        ]);
        let m = base.g.compose(&alpha_of_w);
        let m = m.monic();
        let k = NumberField::create(m)?;
        let theta = nf_gen(&k);
        let gen_img = nf_element(
            &k,
            alpha_of_w.coeffs().to_vec(),
        );
        let emb = TowerEmbedding {
            base_gen_image: gen_img,
            sqrt_delta: theta,
            field: k,
        };
        verify_tower(base, delta, &emb)?;
        Ok(emb)
    } else {
        // δ rational: biquadratic field; primitive element θ = α + m·√δ
        let d0 = c0;
        let p = base.g.coeff(1);
        let q = base.g.coeff(0);
        let mut mult: i64 = 1;
        loop {
            let mq = BigRational::from(BigInt::from(mult));
            // minimal polynomial of α + m√δ: Res_y(g_F(y), ((x−y)/m)² − δ)
            // computed by direct elimination: (x−α)² = m²δ with α² = −pα−q
            // ⇒ x² − q − m²δ − α(2x + p) = 0 ⇒ square out α again:
            // (x² − q − m²δ)² = (2x+p)²·(αx-term)… easier: resultant
            let gy = base.g.clone();
            let n = 4usize;
            let mut pts = Vec::with_capacity(n + 1);
            let mut x0 = BigInt::zero();
            while pts.len() < n + 1 {
                let xq = BigRational::from(x0.clone());
                // h(y) = ((x0 − y)/m)² − δ as polynomial in y
                let h = RatPoly::new(vec![
                    &xq * &xq / (&mq * &mq) - &d0,
                    -BigRational::from(BigInt::from(2)) * &xq / (&mq * &mq),
                    (&mq * &mq).recip(),
                ]);
                pts.push((xq, gy.resultant(&h)));
                x0 = if x0.is_positive() { -x0 } else { -x0 + 1 };
            }
            let m_poly = RatPoly::interpolate(&pts).monic();
            if m_poly.gcd_fast(&m_poly.derivative()).degree() == Some(0) {
                if let Ok(k) = NumberField::create(m_poly) {
                    let theta = nf_gen(&k);
                    // α = (θ² − q − m²δ)/(2θ + p)
                    let num = theta.mul(&theta).add(&nf_from_rat(
                        &k,
                        -&q - &mq * &mq * &d0,
                    ));
                    let den = theta
                        .mul(&theta.from_int_like(2))
                        .add(&nf_from_rat(&k, p.clone()));
                    let alpha_img = num.mul(&den.inv().expect("2θ+p ≠ 0 in the tower"));
                    let w_img = theta
                        .sub(&alpha_img)
                        .mul(&nf_from_rat(&k, mq.recip()));
                    let emb = TowerEmbedding {
                        base_gen_image: alpha_img,
                        sqrt_delta: w_img,
                        field: k,
                    };
                    verify_tower(base, delta, &emb)?;
                    return Ok(emb);
                }
            }
            mult += 1;
            if mult > 20 {
                return Err(ArithError::InvalidArgument(
                    "no primitive element found for the tower".into(),
                ));
            }
        }
    }
}

fn verify_tower(
    base: &Arc<NumberField>,
    delta: &FieldElement,
    emb: &TowerEmbedding,
) -> Result<(), ArithError> {
    // the base generator's image satisfies the base defining polynomial
    let img_poly = lift_poly(&base.g, &emb.field);
    if !img_poly.evaluate(&emb.base_gen_image).is_zero_elem() {
        return Err(ArithError::InvalidArgument(
            "tower embedding failed the defining-relation check".into(),
        ));
    }
    // √δ squares to the embedded δ
    let lhs = emb.sqrt_delta.mul(&emb.sqrt_delta);
    if lhs != emb.embed(delta) {
        return Err(ArithError::InvalidArgument(
            "tower square-root relation failed".into(),
        ));
    }
    Ok(())
}

/// Split an irreducible rational quartic into two monic quadratics over a
/// quadratic field, if possible.
pub fn quadratic_split_over_quadratic(
    f: &RatPoly,
    field: &Arc<NumberField>,
) -> Option<(Poly<FieldElement>, Poly<FieldElement>)> {
    assert_eq!(f.degree(), Some(4));
    assert_eq!(field.degree, 2);
    let fk = lift_poly(&f.monic(), field);
    let factors = trager_factor(&fk, field);
    if factors.len() == 2 && factors.iter().all(|h| h.deg() == 2) {
        let mut it = factors.into_iter();
        Some((it.next().unwrap(), it.next().unwrap()))
    } else {
        None
    }
}

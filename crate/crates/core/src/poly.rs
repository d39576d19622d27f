//! Dense univariate polynomials over a coefficient field, lowest degree
//! first, trailing zeros trimmed. Exact arithmetic throughout.

use crate::field::CoeffField;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<F: CoeffField> {
    coeffs: Vec<F>,
}

impl<F: CoeffField> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<F: CoeffField> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_elem()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    /// x^n with the given sample element providing field context.
    pub fn monomial_like(sample: &F, n: usize) -> Self {
        let mut coeffs = vec![sample.zero_like(); n + 1];
        coeffs[n] = sample.one_like();
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports None.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> F {
        if i < self.coeffs.len() {
            self.coeffs[i].clone()
        } else {
            self.sample().zero_like()
        }
    }

    pub fn leading(&self) -> &F {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    /// Some nonzero element of the coefficient field, for minting constants.
    /// Panics on the zero polynomial; callers hold a nonzero poly or a sample.
    fn sample(&self) -> &F {
        self.coeffs.first().expect("zero polynomial has no sample element")
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let zero = self.sample().zero_like();
        let mut out = vec![zero; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        if e == 0 {
            let one = self
                .coeffs
                .first()
                .map(|c| c.one_like())
                .expect("pow(0) of zero polynomial needs a sample");
            return Poly::constant(one);
        }
        let mut base = self.clone();
        let mut acc: Option<Poly<F>> = None;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        acc.unwrap()
    }

    pub fn evaluate(&self, x: &F) -> F {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&c.from_int_like(i as i64)))
            .collect();
        Poly::new(out)
    }

    /// Euclidean division: (quotient, remainder) with deg r < deg divisor.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.deg() < divisor.deg() {
            return (Poly::zero(), self.clone());
        }
        let lc_inv = divisor.leading().inv().expect("unit leading coefficient");
        let mut rem = self.coeffs.clone();
        let dd = divisor.deg();
        let mut quot = vec![self.sample().zero_like(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero_elem() {
                continue;
            }
            let q = rem[i].mul(&lc_inv);
            quot[i - dd] = q.clone();
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = rem[i - dd + j].sub(&q.mul(dc));
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divrem(divisor).1
    }

    /// Exact division; None if the divisor does not divide exactly.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.divrem(divisor);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.leading().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Squarefree part f / gcd(f, f'), monic.
    pub fn squarefree_part(&self) -> Self {
        assert!(!self.is_zero());
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.monic()
        } else {
            self.exact_div(&g).expect("gcd divides").monic()
        }
    }

    /// f(x + c).
    pub fn shift(&self, c: &F) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        // Horner on (x + c)
        let x_plus_c = Poly::new(vec![c.clone(), c.one_like()]);
        let mut acc = Poly::zero();
        for coef in self.coeffs.iter().rev() {
            acc = acc.mul(&x_plus_c).add(&Poly::constant(coef.clone()));
        }
        acc
    }

    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Poly::zero();
        for coef in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(coef.clone()));
        }
        acc
    }
}

pub type RatPoly = Poly<BigRational>;

impl RatPoly {
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigRational::from(BigInt::from(c))).collect())
    }

    pub fn from_bigint_coeffs(coeffs: Vec<BigInt>) -> Self {
        Poly::new(coeffs.into_iter().map(BigRational::from).collect())
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    /// x^n over ℚ.
    pub fn monomial(n: usize) -> Self {
        Poly::monomial_like(&BigRational::one(), n)
    }

    /// Primitive integer model: integer coefficient vector with content 1 and
    /// positive leading coefficient, plus the rational unit u with
    /// self = u * primitive.
    pub fn primitive_integer(&self) -> (Vec<BigInt>, BigRational) {
        assert!(!self.is_zero());
        let mut den = BigInt::one();
        for c in self.coeffs() {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
        (prim, BigRational::new(content, den))
    }

    /// Same, as a RatPoly.
    pub fn primitive_part(&self) -> RatPoly {
        let (ints, _) = self.primitive_integer();
        RatPoly::from_bigint_coeffs(ints)
    }

    /// Resultant of two rational polynomials via a subresultant-style
    /// Euclidean scheme. Degrees stay small in this crate (≤ 8 or so).
    pub fn resultant(&self, other: &Self) -> BigRational {
        fn res(a: &RatPoly, b: &RatPoly) -> BigRational {
            if b.is_zero() {
                return if a.degree() == Some(0) {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
            }
            if a.is_zero() {
                return if b.degree() == Some(0) { BigRational::one() } else { BigRational::zero() };
            }
            let m = a.deg();
            let n = b.deg();
            if m < n {
                let sign = if (m * n) % 2 == 1 {
                    -BigRational::one()
                } else {
                    BigRational::one()
                };
                return sign * res(b, a);
            }
            if n == 0 {
                return num_traits::Pow::pow(b.coeff(0), m as i32);
            }
            let r = a.rem(b);
            if r.is_zero() {
                return BigRational::zero();
            }
            // Res(a,b) = (−1)^{mn} · Res(b,a) and Res(b,a) = lc(b)^{m−deg r} · Res(b,r)
            let swap_sign = if (m * n) % 2 == 1 {
                -BigRational::one()
            } else {
                BigRational::one()
            };
            let lc_b = b.leading().clone();
            let factor = num_traits::Pow::pow(lc_b, (m - r.deg()) as i32);
            swap_sign * factor * res(b, &r)
        }
        res(self, other)
    }

    pub fn discriminant(&self) -> BigRational {
        assert!(self.deg() >= 1);
        let n = self.deg();
        let r = self.resultant(&self.derivative());
        let lc = self.leading().clone();
        let sign = if (n * (n - 1) / 2) % 2 == 1 {
            -BigRational::one()
        } else {
            BigRational::one()
        };
        sign * r / lc
    }

    /// Max absolute value of the integer coefficients (primitive model).
    pub fn height(&self) -> BigInt {
        let (ints, _) = self.primitive_integer();
        ints.iter().map(|c| c.abs()).max().unwrap()
    }

    /// Monic gcd via the primitive pseudo-remainder sequence over ℤ; avoids
    /// the coefficient blowup of rational Euclid on high-degree inputs.
    pub fn gcd_fast(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() {
            return if other.is_zero() { RatPoly::zero() } else { other.monic() };
        }
        if other.is_zero() {
            return self.monic();
        }
        let (mut a, _) = self.primitive_integer();
        let (mut b, _) = other.primitive_integer();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = int_pseudo_rem(&a, &b);
            a = b;
            b = int_primitive(r);
        }
        RatPoly::from_bigint_coeffs(a).monic()
    }

    /// Squarefree part via the fast gcd, primitive with positive leading
    /// coefficient.
    pub fn squarefree_part_fast(&self) -> RatPoly {
        assert!(!self.is_zero());
        let g = self.gcd_fast(&self.derivative());
        if g.degree() == Some(0) {
            return self.primitive_part();
        }
        self.exact_div(&g).expect("gcd divides").primitive_part()
    }

    /// Lagrange interpolation through distinct rational points.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> RatPoly {
        let mut result = RatPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = RatPoly::one();
            let mut denom = BigRational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(&Poly::new(vec![-xj.clone(), BigRational::one()]));
                denom *= xi - xj;
            }
            result = result.add(&basis.scale(&(yi / denom)));
        }
        result
    }
}

/// Pseudo-remainder of integer polynomials (up to a power of lc(b), which
/// the primitive-PRS caller strips anyway). Coefficients stay integral.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lcb = b.last().unwrap().clone();
    let mut r = a.to_vec();
    loop {
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        if r.len() <= db {
            return r;
        }
        let k = r.len() - 1 - db;
        let lead = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= &lcb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[k + j] -= &lead * bc;
        }
    }
}

fn int_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    for c in v.iter_mut() {
        *c = &*c / &content;
    }
    v
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 => {
                    if a.is_one() {
                        write!(f, "x")?
                    } else {
                        write!(f, "{a}*x")?
                    }
                }
                _ => {
                    if a.is_one() {
                        write!(f, "x^{i}")?
                    } else {
                        write!(f, "{a}*x^{i}")?
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;

    fn br(n: i64) -> BigRational {
        BigRational::from_i64(n).unwrap()
    }

    #[test]
    fn divrem_roundtrip() {
        let f = RatPoly::from_int_coeffs(&[2, 0, -3, 1, 4]);
        let g = RatPoly::from_int_coeffs(&[1, 2, 1]);
        let (q, r) = f.divrem(&g);
        assert_eq!(q.mul(&g).add(&r), f);
        assert!(r.deg() < g.deg());
    }

    #[test]
    fn gcd_of_products() {
        let a = RatPoly::from_int_coeffs(&[-1, 1]); // x - 1
        let b = RatPoly::from_int_coeffs(&[1, 1]); // x + 1
        let c = RatPoly::from_int_coeffs(&[0, 1]); // x
        let f = a.mul(&b);
        let g = a.mul(&c);
        assert_eq!(f.gcd(&g), a.monic());
    }

    #[test]
    fn squarefree_part_strips_multiplicity() {
        let a = RatPoly::from_int_coeffs(&[-1, 1]);
        let f = a.pow(3).mul(&RatPoly::from_int_coeffs(&[1, 1]));
        let sf = f.squarefree_part();
        assert_eq!(sf, a.mul(&RatPoly::from_int_coeffs(&[1, 1])).monic());
    }

    #[test]
    fn resultant_matches_root_product() {
        // Res(x^2 - 1, x - 2) = (2^2 - 1) = 3 up to sign conventions
        let f = RatPoly::from_int_coeffs(&[-1, 0, 1]);
        let g = RatPoly::from_int_coeffs(&[-2, 1]);
        assert_eq!(f.resultant(&g).abs(), br(3).abs());
        // disc(x^2 + 1) = -4
        let h = RatPoly::from_int_coeffs(&[1, 0, 1]);
        assert_eq!(h.discriminant(), br(-4));
    }

    #[test]
    fn interpolation_recovers_poly() {
        let f = RatPoly::from_int_coeffs(&[3, -2, 0, 5]);
        let pts: Vec<_> = (0..4).map(|i| (br(i), f.evaluate(&br(i)))).collect();
        assert_eq!(RatPoly::interpolate(&pts), f);
    }

    #[test]
    fn shift_is_composition() {
        let f = RatPoly::from_int_coeffs(&[1, 2, 3]);
        let g = f.shift(&br(5));
        for x in -3..3 {
            assert_eq!(g.evaluate(&br(x)), f.evaluate(&(br(x) + br(5))));
        }
    }
}

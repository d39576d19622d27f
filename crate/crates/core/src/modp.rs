//! Polynomial arithmetic and factorization over prime fields 𝔽_p, plus
//! multifactor Hensel lifting of a mod-p factorization to mod p^k.
//!
//! Factorization is distinct-degree splitting followed by equal-degree
//! (Cantor–Zassenhaus) splitting; the splitting elements are drawn from a
//! deterministic enumeration so results are reproducible run to run.

use crate::arith::{mod_inverse, ArithError};
use crate::poly::RatPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense polynomial over 𝔽_p, coefficients reduced to [0, p), lowest degree
/// first, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModPoly {
    p: BigInt,
    coeffs: Vec<BigInt>,
}

fn reduce(mut coeffs: Vec<BigInt>, p: &BigInt) -> Vec<BigInt> {
    for c in coeffs.iter_mut() {
        *c = c.mod_floor(p);
    }
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
}

impl ModPoly {
    pub fn new(coeffs: Vec<BigInt>, p: &BigInt) -> Self {
        ModPoly { p: p.clone(), coeffs: reduce(coeffs, p) }
    }

    pub fn zero(p: &BigInt) -> Self {
        ModPoly { p: p.clone(), coeffs: Vec::new() }
    }

    pub fn one(p: &BigInt) -> Self {
        ModPoly::new(vec![BigInt::one()], p)
    }

    pub fn x(p: &BigInt) -> Self {
        ModPoly::new(vec![BigInt::zero(), BigInt::one()], p)
    }

    /// Reduce a rational polynomial mod p; errors if p divides a denominator.
    pub fn from_rat_poly(f: &RatPoly, p: &BigInt) -> Result<Self, ArithError> {
        let mut coeffs = Vec::with_capacity(f.coeffs().len());
        for c in f.coeffs() {
            let den = c.denom().mod_floor(p);
            if den.is_zero() {
                return Err(ArithError::InvalidArgument(format!(
                    "denominator divisible by {p}"
                )));
            }
            let inv = mod_inverse(&den, p).ok_or_else(|| {
                ArithError::InvalidArgument(format!("denominator not invertible mod {p}"))
            })?;
            coeffs.push((c.numer().mod_floor(p) * inv).mod_floor(p));
        }
        Ok(ModPoly::new(coeffs, p))
    }

    pub fn from_int_slice(coeffs: &[BigInt], p: &BigInt) -> Self {
        ModPoly::new(coeffs.to_vec(), p)
    }

    pub fn modulus(&self) -> &BigInt {
        &self.p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

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

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeff(i) + other.coeff(i);
            if c >= self.p {
                c -= &self.p;
            }
            out.push(c);
        }
        ModPoly { p: self.p.clone(), coeffs: reduce(out, &self.p) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeff(i) - other.coeff(i);
            if c.is_negative() {
                c += &self.p;
            }
            out.push(c);
        }
        ModPoly { p: self.p.clone(), coeffs: reduce(out, &self.p) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(&self.p);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ModPoly { p: self.p.clone(), coeffs: reduce(out, &self.p) }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        ModPoly::new(self.coeffs.iter().map(|a| a * c).collect(), &self.p)
    }

    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial mod p");
        if self.is_zero() || self.deg() < divisor.deg() {
            return (ModPoly::zero(&self.p), self.clone());
        }
        let lc_inv = mod_inverse(divisor.leading(), &self.p).expect("prime modulus");
        let dd = divisor.deg();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = (&rem[i] * &lc_inv).mod_floor(&self.p);
            quot[i - dd] = q.clone();
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = (&rem[i - dd + j] - &q * dc).mod_floor(&self.p);
            }
        }
        (
            ModPoly { p: self.p.clone(), coeffs: reduce(quot, &self.p) },
            ModPoly { p: self.p.clone(), coeffs: reduce(rem, &self.p) },
        )
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divrem(divisor).1
    }

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
            return self.clone();
        }
        let inv = mod_inverse(self.leading(), &self.p).expect("prime modulus");
        self.scale(&inv)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return ModPoly::zero(&self.p);
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        ModPoly::new(out, &self.p)
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let xr = x.mod_floor(&self.p);
        for c in self.coeffs.iter().rev() {
            acc = (acc * &xr + c).mod_floor(&self.p);
        }
        acc
    }

    /// self^e mod modpoly.
    pub fn pow_mod(&self, e: &BigInt, modpoly: &Self) -> Self {
        assert!(!e.is_negative());
        let mut result = ModPoly::one(&self.p);
        let mut base = self.rem(modpoly);
        let mut exp = e.clone();
        while exp.is_positive() {
            if exp.is_odd() {
                result = result.mul(&base).rem(modpoly);
            }
            exp >>= 1;
            if exp.is_positive() {
                base = base.mul(&base).rem(modpoly);
            }
        }
        result
    }
}

/// A complete factorization over 𝔽_p: f ≡ lc · ∏ factors[i].0 ^ factors[i].1.
#[derive(Clone, Debug)]
pub struct ModFactorization {
    pub p: BigInt,
    pub lc: BigInt,
    pub factors: Vec<(ModPoly, u32)>,
}

impl ModFactorization {
    /// Factor degrees with multiplicity, sorted ascending.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (g, e) in &self.factors {
            for _ in 0..*e {
                out.push(g.deg());
            }
        }
        out.sort_unstable();
        out
    }
}

/// Deterministic splitting-element source: enumerates the polynomials over
/// 𝔽_p of degree < bound in a fixed order, skipping constants.
struct SplitterStream {
    p: BigInt,
    bound: usize,
    counter: BigInt,
}

impl SplitterStream {
    fn new(p: &BigInt, bound: usize) -> Self {
        // start at p so the first emitted polynomial is x
        SplitterStream { p: p.clone(), bound: bound.max(2), counter: p.clone() }
    }

    fn next_poly(&mut self) -> ModPoly {
        loop {
            let mut k = self.counter.clone();
            self.counter += 1;
            let mut coeffs = Vec::new();
            while k.is_positive() && coeffs.len() < self.bound {
                let (q, r) = k.div_rem(&self.p);
                coeffs.push(r);
                k = q;
            }
            let g = ModPoly::new(coeffs, &self.p);
            if g.degree().is_some_and(|d| d >= 1) {
                return g;
            }
        }
    }
}

/// Factor a rational polynomial modulo an odd-or-2 prime p into monic
/// irreducibles with multiplicities. Errors if p divides a denominator or
/// the reduction is zero.
pub fn factor_mod_p(f: &RatPoly, p: &BigInt) -> Result<ModFactorization, ArithError> {
    let fp = ModPoly::from_rat_poly(f, p)?;
    factor_modpoly(&fp)
}

pub fn factor_modpoly(fp: &ModPoly) -> Result<ModFactorization, ArithError> {
    let p = fp.modulus().clone();
    if fp.is_zero() {
        return Err(ArithError::InvalidArgument(format!(
            "polynomial vanishes identically mod {p}"
        )));
    }
    let lc = fp.leading().clone();
    let monic = fp.monic();
    if monic.deg() == 0 {
        return Ok(ModFactorization { p, lc, factors: Vec::new() });
    }
    let mut distinct = distinct_irreducibles(&monic);
    distinct.sort_by(|a, b| (a.deg(), a.coeffs()).cmp(&(b.deg(), b.coeffs())));
    let mut factors = Vec::new();
    let mut rest = monic;
    for g in distinct {
        let mut e = 0u32;
        while let Some(q) = rest.exact_div(&g) {
            rest = q;
            e += 1;
        }
        debug_assert!(e > 0);
        factors.push((g, e));
    }
    debug_assert!(rest.is_one());
    Ok(ModFactorization { p, lc, factors })
}

/// Distinct monic irreducible factors of a monic polynomial over 𝔽_p.
fn distinct_irreducibles(f: &ModPoly) -> Vec<ModPoly> {
    let p = f.modulus().clone();
    if f.deg() == 0 {
        return Vec::new();
    }
    let df = f.derivative();
    if df.is_zero() {
        // f = g(x^p) = g*(x)^p in characteristic p; recurse on the stride-p
        // contraction (coefficients are already p-th powers in 𝔽_p).
        let pu = usize::try_from(p.to_biguint().unwrap().to_u64_digits().first().copied().unwrap_or(0))
            .expect("characteristic fits usize here");
        let mut g = Vec::new();
        let mut i = 0;
        while i < f.coeffs().len() {
            g.push(f.coeff(i));
            i += pu;
        }
        return distinct_irreducibles(&ModPoly::new(g, &p));
    }
    let d = f.gcd(&df);
    let s = f.exact_div(&d).expect("gcd divides").monic();
    let mut out = factor_squarefree(&s);
    if d.deg() > 0 {
        for g in distinct_irreducibles(&d) {
            if !out.contains(&g) {
                out.push(g);
            }
        }
    }
    out
}

/// Factor a monic squarefree polynomial via distinct-degree splitting then
/// equal-degree splitting.
fn factor_squarefree(f: &ModPoly) -> Vec<ModPoly> {
    let p = f.modulus().clone();
    let mut out = Vec::new();
    let mut rest = f.clone();
    if rest.deg() == 0 {
        return out;
    }
    let x = ModPoly::x(&p);
    let mut h = x.clone();
    let mut d = 0usize;
    while rest.deg() >= 1 {
        d += 1;
        if 2 * d > rest.deg() {
            out.push(rest.clone());
            break;
        }
        h = h.pow_mod(&p, &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.degree().is_some_and(|dg| dg >= 1) {
            equal_degree_split(&g, d, &mut out);
            rest = rest.exact_div(&g).expect("divides").monic();
            h = h.rem(&rest);
        }
    }
    out
}

/// Split a monic product of distinct irreducibles, all of degree d.
fn equal_degree_split(f: &ModPoly, d: usize, out: &mut Vec<ModPoly>) {
    if f.deg() == d {
        out.push(f.monic());
        return;
    }
    let p = f.modulus().clone();
    let mut stream = SplitterStream::new(&p, f.deg());
    loop {
        let a = stream.next_poly().rem(f);
        if a.degree().is_none() {
            continue;
        }
        let g = if p == BigInt::from(2) {
            // trace map over 𝔽_{2^d}: a + a^2 + ... + a^{2^(d-1)}
            let mut t = a.clone();
            let mut sq = a.clone();
            for _ in 1..d {
                sq = sq.mul(&sq).rem(f);
                t = t.add(&sq);
            }
            t.gcd(f)
        } else {
            let e = (num_traits::pow::pow(p.clone(), d) - BigInt::one()) / BigInt::from(2);
            let b = a.pow_mod(&e, f);
            b.sub(&ModPoly::one(&p)).gcd(f)
        };
        if g.degree().is_some_and(|dg| dg >= 1 && dg < f.deg()) {
            equal_degree_split(&g, d, out);
            let h = f.exact_div(&g).expect("divides").monic();
            equal_degree_split(&h, d, out);
            return;
        }
        // also try the complementary gcd(b+1, f) for odd p occasionally;
        // the enumeration reaches a splitter regardless, so just continue
    }
}

// ---------------------------------------------------------------------------
// Hensel lifting
// ---------------------------------------------------------------------------

/// Polynomial arithmetic modulo an arbitrary modulus m (not necessarily
/// prime): plain vectors, helpers below. Division is only ever by monic
/// polynomials, which needs no inverses.
fn zm_reduce(mut c: Vec<BigInt>, m: &BigInt) -> Vec<BigInt> {
    for x in c.iter_mut() {
        *x = x.mod_floor(m);
    }
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

fn zm_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero)
            + b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out.push(x);
    }
    zm_reduce(out, m)
}

fn zm_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(BigInt::zero)
            - b.get(i).cloned().unwrap_or_else(BigInt::zero);
        out.push(x);
    }
    zm_reduce(out, m)
}

fn zm_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zm_reduce(out, m)
}

/// Division by a monic divisor over ℤ/m.
fn zm_divrem_monic(a: &[BigInt], div: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    assert!(div.last().is_some_and(|c| c.is_one()), "divisor must be monic");
    let dd = div.len() - 1;
    if a.len() <= dd {
        return (Vec::new(), a.to_vec());
    }
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let q = rem[i].clone();
        if q.is_zero() {
            continue;
        }
        quot[i - dd] = q.clone();
        for (j, dc) in div.iter().enumerate() {
            rem[i - dd + j] = (&rem[i - dd + j] - &q * dc).mod_floor(m);
        }
    }
    (zm_reduce(quot, m), zm_reduce(rem, m))
}

/// One quadratic Hensel step: from f ≡ g·h, s·g + t·h ≡ 1 (mod m) with h
/// monic, produce the same data mod m².
#[allow(clippy::type_complexity)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let m2 = m * m;
    let e = zm_sub(f, &zm_mul(g, h, &m2), &m2);
    let (q, r) = zm_divrem_monic(&zm_mul(s, &e, &m2), h, &m2);
    let g1 = zm_add(&zm_add(g, &zm_mul(t, &e, &m2), &m2), &zm_mul(&q, g, &m2), &m2);
    let h1 = zm_add(h, &r, &m2);
    let b = zm_sub(
        &zm_add(&zm_mul(s, &g1, &m2), &zm_mul(t, &h1, &m2), &m2),
        &[BigInt::one()],
        &m2,
    );
    let (c, d) = zm_divrem_monic(&zm_mul(s, &b, &m2), &h1, &m2);
    let s1 = zm_sub(s, &d, &m2);
    let t1 = zm_sub(&zm_sub(t, &zm_mul(t, &b, &m2), &m2), &zm_mul(&c, &g1, &m2), &m2);
    (g1, h1, s1, t1)
}

/// Extended Euclid over 𝔽_p: s·a + t·b = 1 for coprime a, b.
fn fp_bezout(a: &ModPoly, b: &ModPoly) -> (ModPoly, ModPoly) {
    let p = a.modulus().clone();
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = ModPoly::one(&p);
    let mut s1 = ModPoly::zero(&p);
    let mut t0 = ModPoly::zero(&p);
    let mut t1 = ModPoly::one(&p);
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
    assert_eq!(r0.degree(), Some(0), "inputs must be coprime mod p");
    let inv = mod_inverse(r0.leading(), &p).unwrap();
    (s0.scale(&inv), t0.scale(&inv))
}

/// Lift the monic mod-p factors of an integer polynomial f (with p ∤ lc(f))
/// to monic factors mod p^k with f ≡ lc(f)·∏ gᵢ (mod p^k).
///
/// The factors must be pairwise coprime mod p (squarefree reduction).
pub fn hensel_lift(
    f: &[BigInt],
    p: &BigInt,
    factors: &[ModPoly],
    k: u32,
) -> Vec<Vec<BigInt>> {
    assert!(k >= 1);
    assert!(!f.is_empty());
    let lc = f.last().unwrap().clone();
    assert!(!lc.mod_floor(p).is_zero(), "leading coefficient must be a unit mod p");
    if factors.len() == 1 {
        // single factor: the monic lift is monic-f mod p^k directly
        let pk = num_traits::pow::pow(p.clone(), k as usize);
        let lcinv = mod_inverse(&lc.mod_floor(&pk), &pk).expect("unit lc mod p^k");
        let g: Vec<BigInt> = f.iter().map(|c| (c * &lcinv).mod_floor(&pk)).collect();
        return vec![zm_reduce(g, &pk)];
    }
    let mut out = vec![Vec::new(); factors.len()];
    lift_tree(f, p, factors, 0, k, &mut out);
    out
}

/// Recursive binary-split lifting: lifts f ≡ lc·g_left·g_right to precision
/// p^k, then recurses into each half. The non-monic leading unit is carried
/// by the left branch.
fn lift_tree(f: &[BigInt], p: &BigInt, factors: &[ModPoly], offset: usize, k: u32, out: &mut Vec<Vec<BigInt>>) {
    let pk = num_traits::pow::pow(p.clone(), k as usize);
    if factors.len() == 1 {
        // f ≡ unit · g (mod p^k) with g monic: recover g as monic(f) mod p^k
        let lc = f.last().unwrap().mod_floor(&pk);
        let lcinv = mod_inverse(&lc, &pk).expect("unit leading coefficient");
        let g: Vec<BigInt> = f.iter().map(|c| (c * &lcinv).mod_floor(&pk)).collect();
        out[offset] = zm_reduce(g, &pk);
        return;
    }
    let mid = factors.len() / 2;
    let lc_modp = f.last().unwrap().mod_floor(p);
    let mut gp = ModPoly::new(vec![lc_modp], p);
    for fac in &factors[..mid] {
        gp = gp.mul(fac);
    }
    let mut hp = ModPoly::one(p);
    for fac in &factors[mid..] {
        hp = hp.mul(fac);
    }
    let (sp, tp) = fp_bezout(&gp, &hp);

    let mut g = gp.coeffs().to_vec();
    let mut h = hp.coeffs().to_vec();
    let mut s = sp.coeffs().to_vec();
    let mut t = tp.coeffs().to_vec();
    let mut m = p.clone();
    let mut prec = 1u32;
    while prec < k {
        let (g1, h1, s1, t1) = hensel_step(f, &g, &h, &s, &t, &m);
        m = &m * &m;
        prec *= 2;
        g = g1;
        h = h1;
        s = s1;
        t = t1;
    }
    let g = zm_reduce(g, &pk);
    let h = zm_reduce(h, &pk);
    lift_tree(&g, p, &factors[..mid], offset, k, out);
    lift_tree(&h, p, &factors[mid..], offset + mid, k, out);
}

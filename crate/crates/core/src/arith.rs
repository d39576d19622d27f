//! Number-theoretic primitives: square classes of ℚ*/(ℚ*)², Legendre
//! symbols, deterministic primality, prime sieves and Euler's totient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Trial-division bound used by [`squarefree_class`] before falling back to
/// perfect-power tests. Every integer arising in this crate has prime support
/// in {2, 3, 5, 7, p} for a moderate p, so the bound is never the bottleneck.
pub const SQUAREFREE_TRIAL_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArithError {
    /// Input violated a precondition (message says which).
    InvalidArgument(String),
    /// A computed result failed its own consistency check; never returned
    /// silently as a value.
    Inconsistency(String),
}

impl fmt::Display for ArithError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArithError::InvalidArgument(m) => write!(f, "invalid argument: {m}"),
            ArithError::Inconsistency(m) => write!(f, "internal inconsistency: {m}"),
        }
    }
}

impl std::error::Error for ArithError {}

/// An element of ℚ*/(ℚ*)², represented by its unique squarefree integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareClass(BigInt);

impl SquareClass {
    /// Wraps an integer that is already known squarefree. Debug builds check.
    pub fn from_squarefree(n: BigInt) -> Self {
        debug_assert!(!n.is_zero());
        debug_assert!(is_squarefree(&n));
        SquareClass(n)
    }

    pub fn one() -> Self {
        SquareClass(BigInt::one())
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Class multiplication: (a)(b) = squarefree part of ab.
    pub fn mul(&self, other: &SquareClass) -> SquareClass {
        let g = self.0.gcd(&other.0);
        SquareClass(&self.0 / &g * &other.0 / g)
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_squarefree(n: &BigInt) -> bool {
    let m = n.abs();
    if m.is_zero() {
        return false;
    }
    squarefree_part_int(&m) == m
}

/// Legendre symbol (a/p) for an odd prime p, via Euler's criterion.
pub fn legendre_symbol(a: &BigInt, p: &BigInt) -> Result<i32, ArithError> {
    let two = BigInt::from(2);
    if p <= &two || !p.is_odd() || !is_prime(p) {
        return Err(ArithError::InvalidArgument(format!("{p} is not an odd prime")));
    }
    let r = a.mod_floor(p);
    if r.is_zero() {
        return Ok(0);
    }
    let e = (p - BigInt::one()) / &two;
    let v = r.modpow(&e, p);
    if v.is_one() {
        Ok(1)
    } else {
        Ok(-1)
    }
}

/// Squarefree class of a nonzero rational: the unique squarefree integer s
/// with q/s a rational square. For q = n/d this is the squarefree part of nd.
pub fn squarefree_class(q: &BigRational) -> Result<SquareClass, ArithError> {
    if q.is_zero() {
        return Err(ArithError::InvalidArgument("squarefree class of 0".into()));
    }
    let nd = q.numer() * q.denom();
    let sign = if nd.is_negative() { -BigInt::one() } else { BigInt::one() };
    Ok(SquareClass(sign * squarefree_part_int(&nd.abs())))
}

/// Squarefree class of a nonzero integer.
pub fn squarefree_class_int(n: &BigInt) -> Result<SquareClass, ArithError> {
    squarefree_class(&BigRational::from(n.clone()))
}

/// Squarefree part of a positive integer: trial division up to
/// [`SQUAREFREE_TRIAL_BOUND`], perfect-square and primality tests on the
/// cofactor, and Pollard rho (via [`prime_support`]) in the rare remainder.
fn squarefree_part_int(n: &BigInt) -> BigInt {
    debug_assert!(n.is_positive());
    let mut m = n.clone();
    let mut out = BigInt::one();
    let mut d: u64 = 2;
    while d <= SQUAREFREE_TRIAL_BOUND {
        let db = BigInt::from(d);
        if &db * &db > m {
            break;
        }
        if (&m % &db).is_zero() {
            let mut e = 0u32;
            while (&m % &db).is_zero() {
                m /= &db;
                e += 1;
            }
            if e % 2 == 1 {
                out *= &db;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m.is_one() {
        return out;
    }
    if is_prime(&m) {
        return out * m;
    }
    let r = m.sqrt();
    if &r * &r == m && is_prime(&r) {
        return out;
    }
    for p in prime_support(&m) {
        if int_valuation(&m, &p) % 2 == 1 {
            out *= p;
        }
    }
    out
}

/// Euler's totient.
pub fn euler_phi(n: &BigInt) -> Result<BigInt, ArithError> {
    if !n.is_positive() {
        return Err(ArithError::InvalidArgument(format!("phi({n})")));
    }
    let mut m = n.clone();
    let mut phi = BigInt::one();
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        if (&m % &d).is_zero() {
            let mut pk = BigInt::one();
            while (&m % &d).is_zero() {
                m /= &d;
                pk *= &d;
            }
            phi *= &pk / &d * (&d - BigInt::one());
        }
        d += BigInt::one();
    }
    if m > BigInt::one() {
        phi *= &m - BigInt::one();
    }
    Ok(phi)
}

/// Ordered list of all primes ≤ limit (sieve of Eratosthenes).
pub fn prime_stream(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p <= n {
        if sieve[p] {
            let mut q = p * p;
            while q <= n {
                sieve[q] = false;
                q += p;
            }
        }
        p += 1;
    }
    sieve.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i as u64).collect()
}

const MR_WITNESSES_64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality for inputs fitting in 64 bits (fixed Miller–Rabin
/// witness set, sufficient below 3.3·10²⁴), Miller–Rabin with the same fixed
/// witnesses beyond. Search limits in this crate keep inputs small.
pub fn is_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for &sp in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let spb = BigInt::from(sp);
        if n == &spb {
            return true;
        }
        if (n % &spb).is_zero() {
            return false;
        }
    }
    let n_minus_1 = n - BigInt::one();
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for &a in &MR_WITNESSES_64 {
        let ab = BigInt::from(a);
        let mut x = ab.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_prime_u64(n: u64) -> bool {
    is_prime(&BigInt::from(n))
}

/// Squarefree divisors of a nonzero integer, both signs, ascending by
/// absolute value with the positive one first.
pub fn squarefree_divisors(n: &BigInt) -> Vec<BigInt> {
    let support = prime_support(&n.abs());
    let mut divs = vec![BigInt::one()];
    for p in support {
        let mut next = Vec::with_capacity(divs.len() * 2);
        for d in &divs {
            next.push(d.clone());
            next.push(d * &p);
        }
        divs = next;
    }
    divs.sort();
    let mut out = Vec::with_capacity(divs.len() * 2);
    for d in divs {
        out.push(d.clone());
        out.push(-d);
    }
    out
}

/// Distinct prime factors of a positive integer, ascending. Trial division up
/// to the squarefree bound then primality on the cofactor; composite
/// cofactors beyond the bound are split by Pollard rho.
pub fn prime_support(n: &BigInt) -> Vec<BigInt> {
    let mut m = n.abs();
    assert!(!m.is_zero(), "prime support of 0");
    let mut out = Vec::new();
    let mut d: u64 = 2;
    while d <= SQUAREFREE_TRIAL_BOUND {
        let db = BigInt::from(d);
        if &db * &db > m {
            break;
        }
        if (&m % &db).is_zero() {
            out.push(db.clone());
            while (&m % &db).is_zero() {
                m /= &db;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        if is_prime(&m) {
            out.push(m);
        } else {
            let r = m.sqrt();
            if &r * &r == m && is_prime(&r) {
                out.push(r);
            } else {
                let f = pollard_rho(&m);
                let g = &m / &f;
                for q in [f, g] {
                    if is_prime(&q) {
                        if !out.contains(&q) {
                            out.push(q);
                        }
                    } else {
                        for q2 in prime_support(&q) {
                            if !out.contains(&q2) {
                                out.push(q2);
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

fn pollard_rho(n: &BigInt) -> BigInt {
    let one = BigInt::one();
    let mut c = BigInt::one();
    loop {
        let mut x = BigInt::from(2);
        let mut y = BigInt::from(2);
        loop {
            x = (&x * &x + &c) % n;
            y = (&y * &y + &c) % n;
            y = (&y * &y + &c) % n;
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            let g = diff.gcd(n);
            if g > one && &g < n {
                return g;
            }
        }
        c += 1;
    }
}

/// Exact square root of a rational if it is a perfect square.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let rn = q.numer().sqrt();
    let rd = q.denom().sqrt();
    if &rn * &rn == *q.numer() && &rd * &rd == *q.denom() {
        Some(BigRational::new(rn, rd))
    } else {
        None
    }
}

/// p-adic valuation of a nonzero rational.
pub fn padic_valuation(q: &BigRational, p: &BigInt) -> i64 {
    assert!(!q.is_zero());
    int_valuation(q.numer(), p) - int_valuation(q.denom(), p)
}

pub fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    assert!(!n.is_zero());
    let mut m = n.clone();
    let mut v = 0;
    while (&m % p).is_zero() {
        m /= p;
        v += 1;
    }
    v
}

/// Is a nonzero rational a square in ℚ_p? Valuation even and unit part a
/// square unit: a quadratic residue mod p for odd p, ≡ 1 (mod 8) for p = 2.
pub fn is_square_in_qp(q: &BigRational, p: &BigInt) -> bool {
    assert!(!q.is_zero());
    let v = padic_valuation(q, p);
    if v % 2 != 0 {
        return false;
    }
    // unit part u = q / p^v as a p-adic unit; reduce mod p (or mod 8).
    let unit = unit_part(q, p, v);
    if p == &BigInt::from(2) {
        unit.mod_floor(&BigInt::from(8)) == BigInt::one()
    } else {
        legendre_symbol(&unit, p).expect("odd prime") == 1
    }
}

/// The p-adic unit q/p^v as an integer residue (well defined mod any power of
/// p; returned mod p^4 which is enough for square testing).
fn unit_part(q: &BigRational, p: &BigInt, v: i64) -> BigInt {
    let mut num = q.numer().clone();
    let mut den = q.denom().clone();
    if v >= 0 {
        num /= p.pow(v as u32);
    } else {
        den /= p.pow((-v) as u32);
    }
    let modulus = p.pow(4);
    let dinv = mod_inverse(&den.mod_floor(&modulus), &modulus).expect("unit denominator");
    (num * dinv).mod_floor(&modulus)
}

/// Modular inverse, None if not coprime.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::FromPrimitive;
    use proptest::prelude::*;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn br(n: i64) -> BigRational {
        BigRational::from_i64(n).unwrap()
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre_symbol(&bi(4), &bi(7)).unwrap(), 1);
        assert_eq!(legendre_symbol(&bi(11), &bi(7)).unwrap(), 1);
        assert_eq!(legendre_symbol(&bi(3), &bi(5)).unwrap(), -1);
        assert_eq!(legendre_symbol(&bi(14), &bi(7)).unwrap(), 0);
        assert!(legendre_symbol(&bi(3), &bi(9)).is_err());
        assert!(legendre_symbol(&bi(3), &bi(2)).is_err());
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_class(&br(32)).unwrap().value(), &bi(2));
        assert_eq!(squarefree_class(&br(-7)).unwrap().value(), &bi(-7));
        assert_eq!(squarefree_class(&br(1568)).unwrap().value(), &bi(2));
        assert!(squarefree_class(&br(0)).is_err());
        // rational input: 4/9 is a square, 8/3 has class 6
        assert_eq!(
            squarefree_class(&BigRational::new(bi(4), bi(9))).unwrap().value(),
            &bi(1)
        );
        assert_eq!(
            squarefree_class(&BigRational::new(bi(8), bi(3))).unwrap().value(),
            &bi(6)
        );
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(&bi(1)).unwrap(), bi(1));
        assert_eq!(euler_phi(&bi(14)).unwrap(), bi(6));
        assert_eq!(euler_phi(&bi(12)).unwrap(), bi(4));
        assert!(euler_phi(&bi(0)).is_err());
    }

    #[test]
    fn prime_stream_examples() {
        assert_eq!(prime_stream(10), vec![2, 3, 5, 7]);
        assert!(prime_stream(1).is_empty());
        assert_eq!(prime_stream(500).len(), 95);
    }

    #[test]
    fn prime_stream_matches_trial_division() {
        let sieved = prime_stream(10_000);
        let trial: Vec<u64> = (2..=10_000u64)
            .filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0))
            .collect();
        assert_eq!(sieved, trial);
    }

    #[test]
    fn squarefree_divisor_list() {
        let divs = squarefree_divisors(&bi(32));
        assert_eq!(divs, vec![bi(1), bi(-1), bi(2), bi(-2)]);
        let divs = squarefree_divisors(&bi(-847)); // -7 * 11^2
        assert_eq!(divs.len(), 8);
        assert!(divs.contains(&bi(77)) && divs.contains(&bi(-7)));
    }

    #[test]
    fn qp_squares() {
        assert!(is_square_in_qp(&br(9), &bi(5)));
        assert!(!is_square_in_qp(&br(5), &bi(5)));
        assert!(is_square_in_qp(&br(17), &bi(2))); // 17 = 1 mod 8
        assert!(!is_square_in_qp(&br(3), &bi(2)));
        assert!(is_square_in_qp(&BigRational::new(bi(1), bi(4)), &bi(2)));
    }

    proptest! {
        #[test]
        fn legendre_multiplicative(a in 1i64..1000, b in 1i64..1000) {
            let p = bi(101);
            if a % 101 != 0 && b % 101 != 0 {
                let la = legendre_symbol(&bi(a), &p).unwrap();
                let lb = legendre_symbol(&bi(b), &p).unwrap();
                let lab = legendre_symbol(&bi(a * b), &p).unwrap();
                prop_assert_eq!(la * lb, lab);
            }
        }

        #[test]
        fn class_multiplication(q in -500i64..500, r in -500i64..500) {
            if q != 0 && r != 0 {
                let cq = squarefree_class(&br(q)).unwrap();
                let cr = squarefree_class(&br(r)).unwrap();
                let cqr = squarefree_class(&br(q * r)).unwrap();
                prop_assert_eq!(cq.mul(&cr), cqr);
            }
        }

        #[test]
        fn class_square_invariance(q in -300i64..300, s_num in 1i64..40, s_den in 1i64..40) {
            if q != 0 {
                let s = BigRational::new(bi(s_num), bi(s_den));
                let scaled = br(q) * &s * &s;
                prop_assert_eq!(
                    squarefree_class(&br(q)).unwrap(),
                    squarefree_class(&scaled).unwrap()
                );
            }
        }
    }
}

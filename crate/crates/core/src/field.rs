//! Coefficient-field abstraction shared by polynomials and curves.
//!
//! The two implementors are `BigRational` (the field ℚ) and
//! [`crate::numfield::FieldElement`] (a number field ℚ[x]/(g) of degree ≤ 4).
//! Elements carry enough context to mint the constants of their own field, so
//! generic code never needs a separate field handle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt::Debug;

pub trait CoeffField: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_rat_like(&self, q: &BigRational) -> Self;
    fn from_int_like(&self, n: i64) -> Self {
        self.from_rat_like(&BigRational::from(BigInt::from(n)))
    }

    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// None exactly when `self` is zero.
    fn inv(&self) -> Option<Self>;
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv().expect("division by zero"))
    }
    fn is_zero_elem(&self) -> bool;
    fn is_one_elem(&self) -> bool {
        *self == self.one_like()
    }

    /// A square root inside the field, if one exists. Exact and certified in
    /// both directions for the implementors in this crate.
    fn field_sqrt(&self) -> Option<Self>;

    /// The rational number this element equals, if it lies in the prime field.
    fn as_rational(&self) -> Option<BigRational>;
}

impl CoeffField for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn from_rat_like(&self, q: &BigRational) -> Self {
        q.clone()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn field_sqrt(&self) -> Option<Self> {
        crate::arith::rational_sqrt(self)
    }
    fn as_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

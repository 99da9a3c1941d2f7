//! Number types the LP machinery can run over.
//!
//! The solvers are written against [`Scalar`], an ordered field with a
//! sign test and an integrality test. [`BigRational`] is the exact
//! backend and the one every integrality guarantee in this crate is stated
//! for. `f64` and `f32` are provided for quick experiments on tiny
//! instances; they compare against a tolerance and can lose the exact
//! lexicographic weights once `(d+1)^(n-1)` exceeds their mantissa.

use std::cmp::Ordering;
use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

pub trait Scalar: Clone + Debug + Display + PartialOrd + Num + Signed + Send + Sync {
    fn from_bigint(v: &BigInt) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_bigint(&BigInt::from(v))
    }

    /// Sign of the value. Exact for rationals, tolerance-banded for floats.
    fn sign(&self) -> Ordering;

    /// The integer this value represents, if it is one.
    fn to_integer(&self) -> Option<BigInt>;

    fn add_ref(&self, rhs: &Self) -> Self {
        self.clone() + rhs.clone()
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.clone() * rhs.clone()
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        self.clone() / rhs.clone()
    }

    /// `self -= a * b`
    fn sub_product(&mut self, a: &Self, b: &Self) {
        *self = self.sub_ref(&a.mul_ref(b));
    }

    fn is_pos(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    fn is_neg(&self) -> bool {
        self.sign() == Ordering::Less
    }

    fn is_nil(&self) -> bool {
        self.sign() == Ordering::Equal
    }
}

impl Scalar for BigRational {
    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }

    fn sign(&self) -> Ordering {
        self.numer().sign().cmp(&num_bigint::Sign::NoSign)
    }

    fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.numer().clone())
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }

    fn sub_product(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self -= a * b;
    }
}

macro_rules! float_scalar {
    ($t:ty, $eps:expr) => {
        impl Scalar for $t {
            fn from_bigint(v: &BigInt) -> Self {
                v.to_f64().map(|x| x as $t).unwrap_or(<$t>::INFINITY)
            }

            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn sign(&self) -> Ordering {
                if *self > $eps {
                    Ordering::Greater
                } else if *self < -$eps {
                    Ordering::Less
                } else {
                    Ordering::Equal
                }
            }

            fn to_integer(&self) -> Option<BigInt> {
                let r = self.round();
                if (self - r).abs() <= $eps * r.abs().max(<$t>::one()) {
                    BigInt::from_f64(r as f64)
                } else {
                    None
                }
            }
        }
    };
}

float_scalar!(f64, 1e-9);
float_scalar!(f32, 1e-4);

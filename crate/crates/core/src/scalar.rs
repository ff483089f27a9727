//! Exact coefficient types.
//!
//! Every algebraic object in the crate is generic over a [`Scalar`]: an exact
//! commutative ring that can absorb the integer counts produced by the
//! combinatorial routines. Types that also support exact division by any
//! nonzero element implement [`Field`].

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

pub trait Scalar:
    Clone + Num + Signed + FromPrimitive + PartialOrd + Debug + Display + Send + Sync + 'static
{
    /// `self / rhs` when the quotient exists in this type.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    fn from_bigint(value: &BigInt) -> Option<Self>;

    fn from_rational(value: &BigRational) -> Option<Self>;

    fn to_rational(&self) -> BigRational;

    fn from_count(count: u64) -> Self {
        Self::from_u64(count).expect("count fits every scalar type")
    }

    /// `2^k`.
    fn pow2(k: usize) -> Self {
        let two = Self::one() + Self::one();
        (0..k).fold(Self::one(), |acc, _| acc * two.clone())
    }
}

/// A [`Scalar`] in which division by a nonzero element is always exact.
pub trait Field: Scalar {}

macro_rules! impl_machine_int {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn exact_div(&self, rhs: &Self) -> Option<Self> {
                if *rhs == 0 || self % rhs != 0 {
                    None
                } else {
                    Some(self / rhs)
                }
            }

            fn from_bigint(value: &BigInt) -> Option<Self> {
                <$t as FromPrimitive>::from_i128(value.to_i128()?)
            }

            fn from_rational(value: &BigRational) -> Option<Self> {
                if value.is_integer() {
                    Self::from_bigint(&value.to_integer())
                } else {
                    None
                }
            }

            fn to_rational(&self) -> BigRational {
                BigRational::from_integer(BigInt::from(*self))
            }
        }

        impl Scalar for Ratio<$t> {
            fn exact_div(&self, rhs: &Self) -> Option<Self> {
                if rhs.is_zero() {
                    None
                } else {
                    Some(self / rhs)
                }
            }

            fn from_bigint(value: &BigInt) -> Option<Self> {
                Some(Ratio::from_integer(<$t as Scalar>::from_bigint(value)?))
            }

            fn from_rational(value: &BigRational) -> Option<Self> {
                let numer = <$t as Scalar>::from_bigint(value.numer())?;
                let denom = <$t as Scalar>::from_bigint(value.denom())?;
                Some(Ratio::new(numer, denom))
            }

            fn to_rational(&self) -> BigRational {
                BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
            }
        }

        impl Field for Ratio<$t> {}
    )*};
}

impl_machine_int!(i64, i128);

impl Scalar for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }

    fn from_bigint(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }

    fn from_rational(value: &BigRational) -> Option<Self> {
        value.is_integer().then(|| value.to_integer())
    }

    fn to_rational(&self) -> BigRational {
        BigRational::from_integer(self.clone())
    }

    fn pow2(k: usize) -> Self {
        BigInt::one() << k
    }
}

impl Scalar for BigRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn from_bigint(value: &BigInt) -> Option<Self> {
        Some(BigRational::from_integer(value.clone()))
    }

    fn from_rational(value: &BigRational) -> Option<Self> {
        Some(value.clone())
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn pow2(k: usize) -> Self {
        BigRational::from_integer(BigInt::one() << k)
    }
}

impl Field for BigRational {}

/// Canonical exact text: `"3"`, `"-7"`, `"1/6"`.
pub fn format_exact<T: Scalar>(value: &T) -> String {
    let r = value.to_rational();
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"3"`, `"-7"`, `"1/6"` or a terminating decimal such as `"0.25"`.
pub fn parse_exact<T: Scalar>(text: &str) -> Option<T> {
    let text = text.trim();
    let rational = if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        BigRational::new(n, d)
    } else if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let int: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse().ok()?
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac: BigInt = frac.parse().ok()?;
        let magnitude = int.abs() * &scale + frac;
        BigRational::new(if negative { -magnitude } else { magnitude }, scale)
    } else {
        BigRational::from_integer(text.parse().ok()?)
    };
    T::from_rational(&rational)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_division_on_integers() {
        assert_eq!(6i64.exact_div(&3), Some(2));
        assert_eq!(7i64.exact_div(&2), None);
        assert_eq!(BigInt::from(48).exact_div(&BigInt::from(8)), Some(BigInt::from(6)));
        assert_eq!(BigInt::from(5).exact_div(&BigInt::from(0)), None);
    }

    #[test]
    fn text_round_trip() {
        let half: BigRational = parse_exact("1/2").unwrap();
        assert_eq!(format_exact(&half), "1/2");
        let q: BigRational = parse_exact("-0.25").unwrap();
        assert_eq!(format_exact(&q), "-1/4");
        assert_eq!(parse_exact::<i64>("1/2"), None);
        assert_eq!(parse_exact::<i64>("12"), Some(12));
        assert_eq!(format_exact(&BigInt::from(-3)), "-3");
    }

    #[test]
    fn pow2_agrees_across_types() {
        assert_eq!(i64::pow2(10), 1024);
        assert_eq!(BigInt::pow2(70), BigInt::one() << 70);
        assert_eq!(Ratio::<i64>::pow2(3), Ratio::from_integer(8));
    }
}

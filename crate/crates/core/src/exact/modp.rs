use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_traits::{Num, One, ToPrimitive, Zero};

use super::scalar::{Rational, Scalar};

/// The prime `2^31 − 1`.
pub const MODULUS: u64 = 2_147_483_647;

/// Element of the prime field `Z/MODULUS`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp(u64);

impl Fp {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(MODULUS as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let (mut base, mut acc) = (self, Fp(1));
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(MODULUS - 2))
    }

    /// Reduction of a rational; `None` when the denominator vanishes mod p.
    pub fn from_rational(x: &Rational) -> Option<Self> {
        let m = BigInt::from(MODULUS);
        let reduce = |v: &BigInt| Fp(((v % &m + &m) % &m).to_u64().expect("residue fits"));
        let d = reduce(x.denom());
        Some(reduce(x.numer()) * d.inv()?)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        Fp((self.0 + rhs.0) % MODULUS)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        Fp((self.0 + MODULUS - rhs.0) % MODULUS)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        Fp(self.0 * rhs.0 % MODULUS)
    }
}

impl Div for Fp {
    type Output = Fp;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Fp) -> Fp {
        self * rhs.inv().expect("division by zero in Fp")
    }
}

// Every nonzero element divides every other one.
impl Rem for Fp {
    type Output = Fp;
    fn rem(self, _rhs: Fp) -> Fp {
        Fp(0)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp((MODULUS - self.0) % MODULUS)
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp(1)
    }
}

impl Num for Fp {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Fp::new)
    }
}

impl Scalar for Fp {
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
}

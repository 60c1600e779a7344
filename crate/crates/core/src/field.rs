//! Exact base fields: arbitrary-precision rationals and prime fields `F_p`
//! for odd primes `p < 2^62`.
//!
//! Characteristic 2 is excluded deliberately: the chord-tangent formulas in
//! the cubic module divide by 2.

use crate::{Error, Result};
use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Largest supported prime modulus (exclusive). Keeps `a + b` for reduced
/// residues inside `u64` and leaves headroom for the modular linear algebra.
pub const MAX_PRIME: u64 = 1 << 62;

/// The base field of a computation: `Q` or `F_p`.
///
/// `Prime(p)` values built through [`FieldSpec::prime`] are guaranteed to
/// carry an odd prime `3 <= p < 2^62`; constructing the variant directly with
/// a non-prime is a contract violation and scalar arithmetic may misbehave.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Checked constructor for `F_p`. Rejects composites, `p = 2`, and
    /// moduli at or beyond `2^62`.
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if p >= MAX_PRIME {
            return Err(Error::PrimeTooLarge(p));
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "rationals"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// An element of a [`FieldSpec`] field.
///
/// Rationals are kept in lowest terms with positive denominator (the
/// invariant `BigRational` maintains); prime-field values are reduced
/// residues in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Mod { value: u64, prime: u64 },
}

impl Scalar {
    pub fn zero(field: FieldSpec) -> Scalar {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Mod { value: 0, prime: p },
        }
    }

    pub fn one(field: FieldSpec) -> Scalar {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::one()),
            FieldSpec::Prime(p) => Scalar::Mod { value: 1, prime: p },
        }
    }

    pub fn from_integer(field: FieldSpec, n: i64) -> Scalar {
        Scalar::from_bigint(field, &BigInt::from(n))
    }

    pub fn from_bigint(field: FieldSpec, n: &BigInt) -> Scalar {
        match field {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(n.clone())),
            FieldSpec::Prime(p) => Scalar::Mod {
                value: reduce_bigint(n, p),
                prime: p,
            },
        }
    }

    /// Exact fraction `num/den` in the given field; in `F_p` this is
    /// `num * den^{-1}`. Fails on `den = 0` or `p | den`.
    pub fn from_fraction(field: FieldSpec, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        match field {
            FieldSpec::Rationals => {
                Ok(Scalar::Rational(BigRational::new(num.clone(), den.clone())))
            }
            FieldSpec::Prime(_) => {
                Scalar::from_bigint(field, num).div(&Scalar::from_bigint(field, den))
            }
        }
    }

    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar::Rational(r)
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Mod { prime, .. } => FieldSpec::Prime(*prime),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Mod { value, .. } => *value == 1,
        }
    }

    /// The reduced fraction behind a rational scalar; `None` in `F_p`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Mod { .. } => None,
        }
    }

    /// The reduced residue behind a prime-field scalar; `None` over `Q`.
    pub fn as_residue(&self) -> Option<u64> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Mod { value, .. } => Some(*value),
        }
    }

    fn check_same_field(&self, other: &Scalar) -> (u64, u64, u64) {
        match (self, other) {
            (Scalar::Mod { value: a, prime: p }, Scalar::Mod { value: b, prime: q }) if p == q => {
                (*a, *b, *p)
            }
            _ => panic!(
                "mixed-field scalar arithmetic: {} vs {}",
                self.field(),
                other.field()
            ),
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            _ => {
                let (a, b, p) = self.check_same_field(other);
                Scalar::Mod {
                    value: add_mod(a, b, p),
                    prime: p,
                }
            }
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            _ => {
                let (a, b, p) = self.check_same_field(other);
                Scalar::Mod {
                    value: add_mod(a, p - b, p),
                    prime: p,
                }
            }
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            _ => {
                let (a, b, p) = self.check_same_field(other);
                Scalar::Mod {
                    value: mul_mod(a, b, p),
                    prime: p,
                }
            }
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Mod { value, prime } => Scalar::Mod {
                value: if *value == 0 { 0 } else { prime - value },
                prime: *prime,
            },
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Mod { value, prime } => Scalar::Mod {
                value: inv_mod(*value, *prime),
                prime: *prime,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one(self.field());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let m = n.mod_floor(&BigInt::from(p));
    debug_assert!(m.sign() != Sign::Minus);
    m.to_u64().expect("residue fits u64")
}

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    debug_assert!(a < p && b <= p);
    let s = a + b; // p < 2^62 keeps this inside u64
    if s >= p {
        s - p
    } else {
        s
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p); p prime and a != 0 mod p.
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "inverse of a noninvertible residue");
    s0.rem_euclid(p as i128) as u64
}

/// Deterministic Miller-Rabin, valid for all `u64` inputs.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    // This base set is a known deterministic witness set for n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

//! Exact coefficient fields: the rationals and prime fields of word size.

use std::fmt;
use std::hash::Hash;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use super::AlgebraError;

/// The three built-in moduli, the largest primes below 2^31.
pub const DEFAULT_PRIMES: [u32; 3] = [2_147_483_647, 2_147_483_629, 2_147_483_587];

/// A field with exact arithmetic.
///
/// Elements carry enough information to identify their field (`Domain`), so
/// a polynomial ring can build constants without a separate context object.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Domain: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static;

    fn domain(&self) -> Self::Domain;
    fn zero(domain: &Self::Domain) -> Self;
    fn one(domain: &Self::Domain) -> Self;
    fn from_i64(domain: &Self::Domain, n: i64) -> Self;
    /// `num / den` mapped into the field; `None` when `den` vanishes there.
    fn from_ratio(domain: &Self::Domain, num: &BigInt, den: &BigInt) -> Option<Self>;
    /// Uniformly random element for prime fields, a small integer for `Q`.
    fn random<R: Rng + ?Sized>(domain: &Self::Domain, rng: &mut R) -> Self;
    /// Characteristic of the field (0 for `Q`).
    fn characteristic(domain: &Self::Domain) -> u64;

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;

    /// Numerator and positive denominator of a canonical representative.
    /// Prime-field elements use the symmetric range `(-p/2, p/2]`.
    fn to_ratio(&self) -> (BigInt, BigInt);

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.domain());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Element of `Z/pZ` for a prime `p < 2^32`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: u32,
}

impl Fp {
    pub fn new(value: u64, modulus: u32) -> Self {
        Fp { value: (value % modulus as u64) as u32, modulus }
    }

    pub fn from_signed(value: i64, modulus: u32) -> Self {
        Fp { value: value.rem_euclid(modulus as i64) as u32, modulus }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn try_add(self, other: Fp) -> Result<Fp, AlgebraError> {
        self.check(other)?;
        Ok(Field::add(&self, &other))
    }

    pub fn try_mul(self, other: Fp) -> Result<Fp, AlgebraError> {
        self.check(other)?;
        Ok(Field::mul(&self, &other))
    }

    fn check(self, other: Fp) -> Result<(), AlgebraError> {
        if self.modulus != other.modulus {
            return Err(AlgebraError::MixedModuli(self.modulus as u64, other.modulus as u64));
        }
        Ok(())
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, _) = self.to_ratio();
        write!(f, "{n}")
    }
}

impl Field for Fp {
    type Domain = u32;

    fn domain(&self) -> u32 {
        self.modulus
    }

    fn zero(p: &u32) -> Self {
        Fp { value: 0, modulus: *p }
    }

    fn one(p: &u32) -> Self {
        Fp { value: 1 % *p, modulus: *p }
    }

    fn from_i64(p: &u32, n: i64) -> Self {
        Fp::from_signed(n, *p)
    }

    fn from_ratio(p: &u32, num: &BigInt, den: &BigInt) -> Option<Self> {
        let m = BigInt::from(*p);
        let reduce = |x: &BigInt| x.mod_floor(&m).to_u64().expect("reduced value fits") as u32;
        let d = Fp { value: reduce(den), modulus: *p };
        let n = Fp { value: reduce(num), modulus: *p };
        d.inv().map(|di| n.mul(&di))
    }

    fn random<R: Rng + ?Sized>(p: &u32, rng: &mut R) -> Self {
        Fp { value: rng.gen_range(0..*p), modulus: *p }
    }

    fn characteristic(p: &u32) -> u64 {
        *p as u64
    }

    #[inline]
    fn is_zero(&self) -> bool {
        self.value == 0
    }

    #[inline]
    fn is_one(&self) -> bool {
        self.value == 1
    }

    #[inline]
    fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let s = self.value as u64 + other.value as u64;
        let m = self.modulus as u64;
        Fp { value: if s >= m { (s - m) as u32 } else { s as u32 }, modulus: self.modulus }
    }

    #[inline]
    fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let v = if self.value >= other.value {
            self.value - other.value
        } else {
            (self.value as u64 + self.modulus as u64 - other.value as u64) as u32
        };
        Fp { value: v, modulus: self.modulus }
    }

    #[inline]
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let v = (self.value as u64 * other.value as u64) % self.modulus as u64;
        Fp { value: v as u32, modulus: self.modulus }
    }

    #[inline]
    fn neg(&self) -> Self {
        if self.value == 0 {
            *self
        } else {
            Fp { value: self.modulus - self.value, modulus: self.modulus }
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // extended Euclid on (value, modulus)
        let (mut old_r, mut r) = (self.value as i64, self.modulus as i64);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1, "modulus is not prime");
        Some(Fp::from_signed(old_s, self.modulus))
    }

    fn to_ratio(&self) -> (BigInt, BigInt) {
        let v = self.value as i64;
        let p = self.modulus as i64;
        let sym = if v > p / 2 { v - p } else { v };
        (BigInt::from(sym), BigInt::one())
    }
}

/// Rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Field for Rational {
    type Domain = ();

    fn domain(&self) {}

    fn zero(_: &()) -> Self {
        Rational(BigRational::zero())
    }

    fn one(_: &()) -> Self {
        Rational(BigRational::one())
    }

    fn from_i64(_: &(), n: i64) -> Self {
        Rational::from_integer(n)
    }

    fn from_ratio(_: &(), num: &BigInt, den: &BigInt) -> Option<Self> {
        Rational::new(num.clone(), den.clone()).ok()
    }

    fn random<R: Rng + ?Sized>(_: &(), rng: &mut R) -> Self {
        Rational::from_integer(rng.gen_range(-1000..=1000))
    }

    fn characteristic(_: &()) -> u64 {
        0
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn add(&self, other: &Self) -> Self {
        Rational(&self.0 + &other.0)
    }

    fn sub(&self, other: &Self) -> Self {
        Rational(&self.0 - &other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Rational(&self.0 * &other.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    fn to_ratio(&self) -> (BigInt, BigInt) {
        (self.0.numer().clone(), self.0.denom().clone())
    }
}

/// Which field a [`Scalar`] lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarDomain {
    Rational,
    Mod(u32),
}

/// A coefficient whose field is chosen at run time.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Mod(Fp),
}

impl Scalar {
    fn same_domain(&self, other: &Scalar) -> Result<(), AlgebraError> {
        match (self, other) {
            (Scalar::Rational(_), Scalar::Rational(_)) => Ok(()),
            (Scalar::Mod(a), Scalar::Mod(b)) => a.check(*b),
            (Scalar::Mod(a), Scalar::Rational(_)) | (Scalar::Rational(_), Scalar::Mod(a)) => {
                Err(AlgebraError::MixedModuli(a.modulus as u64, 0))
            }
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, AlgebraError> {
        self.same_domain(other)?;
        Ok(Field::add(self, other))
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, AlgebraError> {
        self.same_domain(other)?;
        Ok(Field::sub(self, other))
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, AlgebraError> {
        self.same_domain(other)?;
        Ok(Field::mul(self, other))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q:?}"),
            Scalar::Mod(x) => write!(f, "{x:?}"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::Mod(x) => write!(f, "{x}"),
        }
    }
}

macro_rules! lift {
    ($a:expr, $b:expr, $op:ident) => {
        match ($a, $b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x.$op(y)),
            (Scalar::Mod(x), Scalar::Mod(y)) => {
                assert_eq!(x.modulus, y.modulus, "scalar arithmetic across different moduli");
                Scalar::Mod(x.$op(y))
            }
            _ => panic!("scalar arithmetic mixing Q and a prime field"),
        }
    };
}

impl Field for Scalar {
    type Domain = ScalarDomain;

    fn domain(&self) -> ScalarDomain {
        match self {
            Scalar::Rational(_) => ScalarDomain::Rational,
            Scalar::Mod(x) => ScalarDomain::Mod(x.modulus),
        }
    }

    fn zero(d: &ScalarDomain) -> Self {
        Scalar::from_i64(d, 0)
    }

    fn one(d: &ScalarDomain) -> Self {
        Scalar::from_i64(d, 1)
    }

    fn from_i64(d: &ScalarDomain, n: i64) -> Self {
        match d {
            ScalarDomain::Rational => Scalar::Rational(Rational::from_integer(n)),
            ScalarDomain::Mod(p) => Scalar::Mod(Fp::from_signed(n, *p)),
        }
    }

    fn from_ratio(d: &ScalarDomain, num: &BigInt, den: &BigInt) -> Option<Self> {
        match d {
            ScalarDomain::Rational => Rational::from_ratio(&(), num, den).map(Scalar::Rational),
            ScalarDomain::Mod(p) => Fp::from_ratio(p, num, den).map(Scalar::Mod),
        }
    }

    fn random<R: Rng + ?Sized>(d: &ScalarDomain, rng: &mut R) -> Self {
        match d {
            ScalarDomain::Rational => Scalar::Rational(Rational::random(&(), rng)),
            ScalarDomain::Mod(p) => Scalar::Mod(Fp::random(p, rng)),
        }
    }

    fn characteristic(d: &ScalarDomain) -> u64 {
        match d {
            ScalarDomain::Rational => 0,
            ScalarDomain::Mod(p) => *p as u64,
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Mod(x) => x.is_zero(),
        }
    }

    fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Mod(x) => x.is_one(),
        }
    }

    fn add(&self, other: &Self) -> Self {
        lift!(self, other, add)
    }

    fn sub(&self, other: &Self) -> Self {
        lift!(self, other, sub)
    }

    fn mul(&self, other: &Self) -> Self {
        lift!(self, other, mul)
    }

    fn neg(&self) -> Self {
        match self {
            Scalar::Rational(q) => Scalar::Rational(q.neg()),
            Scalar::Mod(x) => Scalar::Mod(x.neg()),
        }
    }

    fn inv(&self) -> Option<Self> {
        match self {
            Scalar::Rational(q) => q.inv().map(Scalar::Rational),
            Scalar::Mod(x) => x.inv().map(Scalar::Mod),
        }
    }

    fn to_ratio(&self) -> (BigInt, BigInt) {
        match self {
            Scalar::Rational(q) => q.to_ratio(),
            Scalar::Mod(x) => x.to_ratio(),
        }
    }
}

/// Sign-aware conversion used by formatting code.
pub(crate) fn is_negative(n: &BigInt) -> bool {
    n.sign() == Sign::Minus
}

pub(crate) fn abs(n: &BigInt) -> BigInt {
    n.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn is_prime(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        true
    }

    #[test]
    fn default_primes_are_prime() {
        for p in DEFAULT_PRIMES {
            assert!(is_prime(p as u64), "{p}");
        }
    }

    #[test]
    fn fp_small_products() {
        let p = 7;
        let a = Fp::new(3, p);
        let b = Fp::new(5, p);
        assert_eq!(a.mul(&b), Fp::one(&p));
        assert_eq!(a.inv().unwrap(), b);
        assert!(Fp::zero(&p).inv().is_none());
    }

    #[test]
    fn mixed_moduli_rejected() {
        let a = Fp::new(1, 7);
        let b = Fp::new(1, 11);
        assert!(matches!(a.try_add(b), Err(AlgebraError::MixedModuli(7, 11))));
        let q = Scalar::Rational(Rational::from_integer(2));
        assert!(Scalar::Mod(a).try_mul(&q).is_err());
    }

    #[test]
    fn rational_lowest_terms() {
        let q = Rational::new(BigInt::from(6), BigInt::from(-4)).unwrap();
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(q.to_string(), "-3/2");
        assert!(Rational::new(BigInt::from(1), BigInt::from(0)).is_err());
    }

    #[test]
    fn symmetric_representative() {
        let p = 11;
        assert_eq!(Fp::from_signed(-3, p).to_string(), "-3");
        assert_eq!(Fp::new(5, p).to_string(), "5");
        assert_eq!(Fp::new(6, p).to_string(), "-5");
    }

    fn fp_strategy() -> impl Strategy<Value = Fp> {
        let p = DEFAULT_PRIMES[0];
        (0..p).prop_map(move |v| Fp::new(v as u64, p))
    }

    fn rat_strategy() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..30).prop_map(|(n, d)| Rational::new(n.into(), d.into()).unwrap())
    }

    fn axioms<F: Field>(a: &F, b: &F, c: &F) {
        assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
        assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
        assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
        assert_eq!(a.add(b), b.add(a));
        assert_eq!(a.mul(b), b.mul(a));
        assert!(a.sub(a).is_zero());
        assert!(a.add(&a.neg()).is_zero());
        if !a.is_zero() {
            assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    proptest! {
        #[test]
        fn fp_field_axioms(a in fp_strategy(), b in fp_strategy(), c in fp_strategy()) {
            axioms(&a, &b, &c);
        }

        #[test]
        fn rational_field_axioms(a in rat_strategy(), b in rat_strategy(), c in rat_strategy()) {
            axioms(&a, &b, &c);
            prop_assert!(a.denom() > &BigInt::zero());
        }

        #[test]
        fn scalar_field_axioms(a in rat_strategy(), b in fp_strategy(), c in fp_strategy()) {
            let q = Scalar::Rational(a.clone());
            axioms(&q, &q.mul(&q), &q.add(&q));
            axioms(&Scalar::Mod(b), &Scalar::Mod(c), &Scalar::Mod(b.mul(&c)));
        }
    }
}

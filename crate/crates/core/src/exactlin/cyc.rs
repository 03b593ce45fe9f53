use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use super::{ArithError, Field, Rational};

/// An element `re1 + rew·ω` of ℚ(ω), where ω = exp(2πi/3) and ω² = −1 − ω.
///
/// The pair of coefficients is the canonical form: two values are equal
/// exactly when both coefficients agree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CycNumber {
    re1: Rational,
    rew: Rational,
}

impl CycNumber {
    pub fn new(re1: Rational, rew: Rational) -> Self {
        CycNumber { re1, rew }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        CycNumber::new(Rational::from_int(a), Rational::from_int(b))
    }

    pub fn from_rational(r: Rational) -> Self {
        CycNumber::new(r, Rational::zero())
    }

    pub fn zero() -> Self {
        CycNumber::from_ints(0, 0)
    }

    pub fn one() -> Self {
        CycNumber::from_ints(1, 0)
    }

    pub fn omega() -> Self {
        CycNumber::from_ints(0, 1)
    }

    /// ω^k for any integer k (taken mod 3).
    pub fn root_of_unity(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => CycNumber::one(),
            1 => CycNumber::omega(),
            _ => CycNumber::from_ints(-1, -1),
        }
    }

    /// ω − ω² = i√3.
    pub fn i_sqrt3() -> Self {
        CycNumber::from_ints(1, 2)
    }

    pub fn re1(&self) -> &Rational {
        &self.re1
    }

    pub fn rew(&self) -> &Rational {
        &self.rew
    }

    pub fn is_zero(&self) -> bool {
        self.re1.is_zero() && self.rew.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re1.is_one() && self.rew.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.rew.is_zero()
    }

    /// Complex conjugation: ω ↦ ω², so a + bω ↦ (a − b) − bω.
    pub fn conj(&self) -> Self {
        CycNumber::new(&self.re1 - &self.rew, -&self.rew)
    }

    /// z·conj(z) = a² − ab + b², a nonnegative rational.
    pub fn norm(&self) -> Rational {
        let (a, b) = (&self.re1, &self.rew);
        &(&(a * a) - &(a * b)) + &(b * b)
    }

    /// z + conj(z) = 2a − b.
    pub fn trace(&self) -> Rational {
        &(&self.re1 + &self.re1) - &self.rew
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycNumber::new(&self.re1 * r, &self.rew * r)
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let inv_n = n.recip()?;
        Ok(self.conj().scale(&inv_n))
    }

    pub fn checked_div(&self, rhs: &CycNumber) -> Result<Self, ArithError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = CycNumber::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// If this number is ω^k, return k in 0..3.
    pub fn root_of_unity_exponent(&self) -> Option<u8> {
        (0..3)
            .find(|&k| *self == CycNumber::root_of_unity(k as i64))
            .map(|k| k as u8)
    }

    /// All cube roots of `self` lying in ℚ(ω): either none, or three roots
    /// differing by powers of ω. Zero has the single root zero.
    pub fn cube_roots(&self) -> Vec<CycNumber> {
        if self.is_zero() {
            return vec![CycNumber::zero()];
        }
        // A root α has norm N with N³ = norm(self), and its trace T = α + ᾱ
        // is a rational root of T³ − 3NT − trace(self) = 0.
        let Some(n) = self.norm().cbrt_exact() else {
            return Vec::new();
        };
        let p = -(&Rational::from_int(3) * &n);
        let q = -self.trace();
        let three = Rational::from_int(3);
        let four = Rational::from_int(4);
        let two = Rational::from_int(2);
        for t in rational_roots_of_depressed_cubic(&p, &q) {
            // N = T²/4 + 3b²/4 and a = (T + b)/2.
            let b_sq = (&(&four * &n) - &(&t * &t)).checked_div(&three).unwrap();
            let Some(b) = b_sq.sqrt_exact() else { continue };
            for b in [b.clone(), -b] {
                let a = (&t + &b).checked_div(&two).unwrap();
                let alpha = CycNumber::new(a, b);
                if alpha.pow(3) == *self {
                    return (0..3)
                        .map(|k| &alpha * &CycNumber::root_of_unity(k))
                        .collect();
                }
            }
        }
        Vec::new()
    }
}

/// Rational roots of x³ + px + q.
fn rational_roots_of_depressed_cubic(p: &Rational, q: &Rational) -> Vec<Rational> {
    // x = y / d turns the cubic into the monic integer cubic y³ + P y + Q.
    let d = num::integer::lcm(p.denom().clone(), q.denom().clone());
    let d2 = &d * &d;
    let d3 = &d2 * &d;
    let big_p = p.numer() * (&d2 / p.denom());
    let big_q = q.numer() * (&d3 / q.denom());
    integer_roots_of_depressed_cubic(&big_p, &big_q)
        .into_iter()
        .map(|y| Rational::from(num::rational::BigRational::new(y, d.clone())))
        .collect()
}

fn integer_roots_of_depressed_cubic(p: &BigInt, q: &BigInt) -> Vec<BigInt> {
    let f = |y: &BigInt| y * y * y + p * y + q;
    let bound = BigInt::one() + p.abs().max(q.abs());
    // Integer intervals on which f is strictly monotone.
    let pieces: Vec<(BigInt, BigInt, bool)> = if !p.is_negative() {
        vec![(-bound.clone(), bound, true)]
    } else {
        // Turning points sit at ±r with s <= r < s + 1.
        let s = num::integer::Roots::sqrt(&(-p / BigInt::from(3)));
        let s1 = &s + BigInt::one();
        vec![
            (-bound.clone(), -s1.clone(), true),
            (-s.clone(), s, false),
            (s1, bound, true),
        ]
    };
    let mut roots = Vec::new();
    for (mut lo, mut hi, increasing) in pieces {
        while lo <= hi {
            let mid: BigInt = (&lo + &hi) >> 1usize;
            let v = if increasing { f(&mid) } else { -f(&mid) };
            if v.is_zero() {
                roots.push(mid);
                break;
            } else if v.is_negative() {
                lo = mid + BigInt::one();
            } else {
                hi = mid - BigInt::one();
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

impl Field for CycNumber {
    fn zero() -> Self {
        CycNumber::zero()
    }
    fn one() -> Self {
        CycNumber::one()
    }
    fn is_zero(&self) -> bool {
        CycNumber::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, ArithError> {
        CycNumber::inv(self)
    }
    fn conj(&self) -> Self {
        CycNumber::conj(self)
    }
}

impl From<i64> for CycNumber {
    fn from(n: i64) -> Self {
        CycNumber::from_ints(n, 0)
    }
}

impl From<Rational> for CycNumber {
    fn from(r: Rational) -> Self {
        CycNumber::from_rational(r)
    }
}

impl Add<&CycNumber> for &CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        CycNumber::new(&self.re1 + &rhs.re1, &self.rew + &rhs.rew)
    }
}

impl Sub<&CycNumber> for &CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        CycNumber::new(&self.re1 - &rhs.re1, &self.rew - &rhs.rew)
    }
}

impl Mul<&CycNumber> for &CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        // (a + bω)(c + dω) = (ac − bd) + (ad + bc − bd)ω
        let ac = &self.re1 * &rhs.re1;
        let bd = &self.rew * &rhs.rew;
        let ad = &self.re1 * &rhs.rew;
        let bc = &self.rew * &rhs.re1;
        CycNumber::new(&ac - &bd, &(&ad + &bc) - &bd)
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber::new(-&self.re1, -&self.rew)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: CycNumber) -> CycNumber {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $method(self, rhs: &CycNumber) -> CycNumber {
                (&self).$method(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

/// Canonical text form `p/q+r/s*w`: zero terms are omitted, a unit ω
/// coefficient is written `w`, and zero is `0`.
impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if !self.re1.is_zero() {
            write!(f, "{}", self.re1)?;
        }
        if !self.rew.is_zero() {
            if !self.re1.is_zero() && !self.rew.is_negative() {
                f.write_str("+")?;
            }
            if self.rew.is_one() {
                f.write_str("w")?;
            } else {
                write!(f, "{}*w", self.rew)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for CycNumber {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ArithError::Parse(s.to_string());
        if s.is_empty() {
            return Err(bad());
        }
        let Some(head) = s.strip_suffix('w') else {
            return Ok(CycNumber::from_rational(s.parse().map_err(|_| bad())?));
        };
        // Split off the ω term at the last sign that is not leading.
        let split = head
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .next_back();
        let (re_part, w_part) = match split {
            Some(i) => (&head[..i], &head[i..]),
            None => ("", head),
        };
        let re1 = if re_part.is_empty() {
            Rational::zero()
        } else {
            re_part.parse().map_err(|_| bad())?
        };
        let coeff = w_part.strip_suffix('*').unwrap_or(w_part);
        let coeff = coeff.strip_prefix('+').unwrap_or(coeff);
        let rew = match coeff {
            "" => Rational::one(),
            "-" => -Rational::one(),
            c if w_part.ends_with('*') => c.parse().map_err(|_| bad())?,
            _ => return Err(bad()),
        };
        Ok(CycNumber::new(re1, rew))
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::{ArithError, CycNumber, Field, Rational};

/// An element c₀ + c₁ζ + c₂ζ² of ℚ(ζ), ζ = exp(2πi/9), with cᵢ ∈ ℚ(ω) and
/// ζ³ = ω. ℚ(ω) sits inside as the elements with c₁ = c₂ = 0.
///
/// R243 has elements of order 9 that are not conjugate to their 4th power,
/// so some of its characters leave ℚ(ω); this is the smallest field that
/// holds them.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Cyc9 {
    c: [CycNumber; 3],
}

impl Cyc9 {
    pub fn new(c0: CycNumber, c1: CycNumber, c2: CycNumber) -> Self {
        Cyc9 { c: [c0, c1, c2] }
    }

    pub fn zero() -> Self {
        Cyc9::default()
    }

    pub fn one() -> Self {
        Cyc9::from(CycNumber::one())
    }

    /// ζ^k for any integer k (taken mod 9).
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(9);
        let mut c: [CycNumber; 3] = Default::default();
        c[(k % 3) as usize] = CycNumber::root_of_unity(k / 3);
        Cyc9 { c }
    }

    pub fn coords(&self) -> &[CycNumber; 3] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(CycNumber::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1].is_zero() && self.c[2].is_zero()
    }

    /// `Some` when the value lies in ℚ(ω).
    pub fn as_cyc(&self) -> Option<CycNumber> {
        (self.c[1].is_zero() && self.c[2].is_zero()).then(|| self.c[0].clone())
    }

    pub fn scale(&self, r: &CycNumber) -> Self {
        Cyc9 {
            c: [&self.c[0] * r, &self.c[1] * r, &self.c[2] * r],
        }
    }

    /// The ℚ(ω)-automorphism ζ ↦ ω^k ζ.
    fn sigma(&self, k: i64) -> Self {
        Cyc9 {
            c: [
                self.c[0].clone(),
                &self.c[1] * &CycNumber::root_of_unity(k),
                &self.c[2] * &CycNumber::root_of_unity(2 * k),
            ],
        }
    }

    /// Relative norm down to ℚ(ω).
    pub fn norm_to_cyc(&self) -> CycNumber {
        let n = &(self * &self.sigma(1)) * &self.sigma(2);
        n.as_cyc()
            .expect("the relative norm is fixed by every ζ ↦ ω^k ζ")
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        let n = self.norm_to_cyc();
        let rest = &self.sigma(1) * &self.sigma(2);
        Ok(rest.scale(&n.inv()?))
    }

    pub fn checked_div(&self, rhs: &Cyc9) -> Result<Self, ArithError> {
        Ok(self * &rhs.inv()?)
    }

    /// ζ̄ = ζ⁻¹ = ω²ζ² and conj(ζ²) = ω²ζ.
    pub fn conj(&self) -> Self {
        let w2 = CycNumber::root_of_unity(2);
        Cyc9 {
            c: [
                self.c[0].conj(),
                &self.c[2].conj() * &w2,
                &self.c[1].conj() * &w2,
            ],
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Cyc9::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The three cube roots in ℚ(ζ) of a nonzero x ∈ ℚ(ω), or none. By
    /// Kummer theory x has a cube root here iff x·ω^{−k} is a cube in ℚ(ω)
    /// for some k, and then ζ^k·d (d³ = x·ω^{−k}) is one.
    pub fn cube_roots_of(x: &CycNumber) -> Vec<Cyc9> {
        if x.is_zero() {
            return vec![Cyc9::zero()];
        }
        for k in 0..3 {
            let roots = (x * &CycNumber::root_of_unity(-k)).cube_roots();
            if let Some(d) = roots.first() {
                let base = Cyc9::zeta_pow(k).scale(d);
                return (0..3)
                    .map(|j| base.scale(&CycNumber::root_of_unity(j)))
                    .collect();
            }
        }
        Vec::new()
    }

    /// Lowest-index nonzero ζ-coordinate, if any.
    pub fn leading_coord(&self) -> Option<(usize, &CycNumber)> {
        self.c.iter().enumerate().find(|(_, x)| !x.is_zero())
    }
}

impl From<CycNumber> for Cyc9 {
    fn from(x: CycNumber) -> Self {
        Cyc9 {
            c: [x, CycNumber::zero(), CycNumber::zero()],
        }
    }
}

impl From<&CycNumber> for Cyc9 {
    fn from(x: &CycNumber) -> Self {
        Cyc9::from(x.clone())
    }
}

impl From<i64> for Cyc9 {
    fn from(n: i64) -> Self {
        Cyc9::from(CycNumber::from(n))
    }
}

impl From<Rational> for Cyc9 {
    fn from(r: Rational) -> Self {
        Cyc9::from(CycNumber::from(r))
    }
}

impl Add<&Cyc9> for &Cyc9 {
    type Output = Cyc9;
    fn add(self, rhs: &Cyc9) -> Cyc9 {
        Cyc9 {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
            ],
        }
    }
}

impl Sub<&Cyc9> for &Cyc9 {
    type Output = Cyc9;
    fn sub(self, rhs: &Cyc9) -> Cyc9 {
        Cyc9 {
            c: [
                &self.c[0] - &rhs.c[0],
                &self.c[1] - &rhs.c[1],
                &self.c[2] - &rhs.c[2],
            ],
        }
    }
}

impl Mul<&Cyc9> for &Cyc9 {
    type Output = Cyc9;
    fn mul(self, rhs: &Cyc9) -> Cyc9 {
        let mut out: [CycNumber; 5] = Default::default();
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        // ζ³ = ω, ζ⁴ = ωζ
        let w = CycNumber::omega();
        Cyc9 {
            c: [
                &out[0] + &(&out[3] * &w),
                &out[1] + &(&out[4] * &w),
                out[2].clone(),
            ],
        }
    }
}

impl Neg for &Cyc9 {
    type Output = Cyc9;
    fn neg(self) -> Cyc9 {
        Cyc9 {
            c: [-&self.c[0], -&self.c[1], -&self.c[2]],
        }
    }
}

impl Neg for Cyc9 {
    type Output = Cyc9;
    fn neg(self) -> Cyc9 {
        -&self
    }
}

impl Field for Cyc9 {
    fn zero() -> Self {
        Cyc9::zero()
    }
    fn one() -> Self {
        Cyc9::one()
    }
    fn is_zero(&self) -> bool {
        Cyc9::is_zero(self)
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
        Cyc9::inv(self)
    }
    fn conj(&self) -> Self {
        Cyc9::conj(self)
    }
}

/// Values in ℚ(ω) print as plain cyc-strings. Otherwise the ζ terms follow
/// as `+(c)*z` and `+(c)*z^2` with a parenthesised cyc-string coefficient,
/// e.g. `1+(2*w)*z^2`; `z` is exp(2πi/9) and z³ = w.
impl fmt::Display for Cyc9 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(x) = self.as_cyc() {
            return write!(f, "{x}");
        }
        let mut first = true;
        if !self.c[0].is_zero() {
            write!(f, "{}", self.c[0])?;
            first = false;
        }
        for (i, suffix) in [(1, "z"), (2, "z^2")] {
            if self.c[i].is_zero() {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            write!(f, "({})*{suffix}", self.c[i])?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyc9 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Cyc9 {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ArithError::Parse(s.to_string());
        let mut rest = s;
        let mut c: [CycNumber; 3] = Default::default();
        for (i, suffix) in [(2, ")*z^2"), (1, ")*z")] {
            if let Some(head) = rest.strip_suffix(suffix) {
                let open = head.rfind('(').ok_or_else(bad)?;
                c[i] = head[open + 1..].parse().map_err(|_| bad())?;
                if c[i].is_zero() {
                    return Err(bad());
                }
                rest = &head[..open];
                if let Some(h) = rest.strip_suffix('+') {
                    if h.is_empty() {
                        return Err(bad());
                    }
                    rest = h;
                } else if !rest.is_empty() {
                    return Err(bad());
                }
            }
        }
        if !rest.is_empty() {
            c[0] = rest.parse().map_err(|_| bad())?;
        } else if c[1].is_zero() && c[2].is_zero() {
            return Err(bad());
        }
        Ok(Cyc9 { c })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn to_complex(x: &Cyc9) -> (f64, f64) {
        let mut acc = (0.0, 0.0);
        for (i, ci) in x.coords().iter().enumerate() {
            let (a, b) = (ci.re1(), ci.rew());
            let f = |r: &Rational| {
                let (n, d) = (r.numer().to_string(), r.denom().to_string());
                n.parse::<f64>().unwrap() / d.parse::<f64>().unwrap()
            };
            let (re, im) = (f(a) - 0.5 * f(b), f(b) * 3f64.sqrt() / 2.0);
            let t = 2.0 * std::f64::consts::PI * i as f64 / 9.0;
            acc.0 += re * t.cos() - im * t.sin();
            acc.1 += re * t.sin() + im * t.cos();
        }
        acc
    }

    #[test]
    fn zeta_has_order_nine() {
        let z = Cyc9::zeta_pow(1);
        assert_eq!(z.pow(3), Cyc9::from(CycNumber::omega()));
        assert!(z.pow(9).is_one());
        assert!((1..9).all(|k| !z.pow(k).is_one()));
        assert_eq!(z.pow(4), Cyc9::zeta_pow(4));
    }

    #[test]
    fn inverse_and_conjugate() {
        let x = Cyc9::new(
            CycNumber::from_ints(1, 2),
            CycNumber::from_ints(-3, 0),
            CycNumber::from_ints(0, 1),
        );
        assert!((&x * &x.inv().unwrap()).is_one());
        assert_eq!(Cyc9::zeta_pow(1).conj(), Cyc9::zeta_pow(8));
        let n = &x * &x.conj();
        let (re, im) = to_complex(&x);
        let (nre, nim) = to_complex(&n);
        assert!((nre - (re * re + im * im)).abs() < 1e-9 && nim.abs() < 1e-9);
        assert!(Cyc9::zero().inv().is_err());
    }

    #[test]
    fn cube_roots_leave_the_base_field() {
        // 6 + 3ω = ω(1 − ω)³ has no cube root in ℚ(ω)
        let c = CycNumber::from_ints(6, 3);
        assert!(c.cube_roots().is_empty());
        let roots = Cyc9::cube_roots_of(&c);
        assert_eq!(roots.len(), 3);
        for r in &roots {
            assert_eq!(r.pow(3), Cyc9::from(c.clone()));
            assert!(r.as_cyc().is_none());
        }
        assert!(Cyc9::cube_roots_of(&CycNumber::from(2)).is_empty());
    }

    #[test]
    fn text_format_round_trips() {
        for s in [
            "0",
            "w",
            "-1/3+2/3*w",
            "(1)*z",
            "1+w+(2*w)*z^2",
            "(-1-1*w)*z+(1/2)*z^2",
            "3+(w)*z",
        ] {
            let x: Cyc9 = s.parse().unwrap();
            assert_eq!(x.to_string(), s);
        }
        assert_eq!(Cyc9::zeta_pow(4).to_string(), "(w)*z");
        for s in ["", "(0)*z", "+(1)*z", "1(1)*z", "z"] {
            assert!(s.parse::<Cyc9>().is_err(), "{s}");
        }
    }
}

//! Exact polynomials and rational generating functions.
//!
//! A [`RationalGf`] `N(x)/D(x)` with `D(0) = 1` has a unique integral power
//! series; its coefficients satisfy `c_m = N_m - sum_{j>=1} D_j c_{m-j}`.
//!
//! Text form is ascending powers with explicit signs, e.g. `1 - 4x + 4x^2`,
//! and `(N)/(D)` for a generating function. The parser also accepts `*`
//! between a coefficient and `x`, arbitrary spacing, and repeated powers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// Dense polynomial, `coeffs[k]` is the coefficient of `x^k`; trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn from_i64s(cs: &[i64]) -> Self
    where
        T: From<i64>,
    {
        Self::new(cs.iter().map(|&c| T::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(T::one());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|k| f(self.coeff(k), other.coeff(k))).collect())
    }
}

pub fn poly_add<T: Coefficient>(p: &Polynomial<T>, q: &Polynomial<T>) -> Polynomial<T> {
    p + q
}

pub fn poly_mul<T: Coefficient>(p: &Polynomial<T>, q: &Polynomial<T>) -> Polynomial<T> {
    p * q
}

pub fn poly_pow<T: Coefficient>(p: &Polynomial<T>, e: u32) -> Polynomial<T> {
    p.pow(e)
}

impl<T: Coefficient> Add for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Self) -> Polynomial<T> {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<T: Coefficient> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Self) -> Polynomial<T> {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<T: Coefficient> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Coefficient> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().cloned().map(Neg::neg).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coefficient> $tr for Polynomial<T> {
            type Output = Polynomial<T>;
            fn $m(self, rhs: Self) -> Polynomial<T> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Coefficient + PartialOrd + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = *c < T::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if k == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    base: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.s.get(self.pos).is_some_and(|b| *b == b' ') {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| String::from_utf8_lossy(&self.s[start..self.pos]).into_owned())
    }

    fn err(&self, msg: &str) -> Error {
        Error::parse(self.base + self.pos, msg)
    }
}

fn parse_poly_at<T: Coefficient>(text: &str, base: usize) -> Result<Polynomial<T>> {
    let mut cur = Cursor {
        s: text.as_bytes(),
        pos: 0,
        base,
    };
    let mut coeffs: Vec<T> = Vec::new();
    let mut first = true;
    loop {
        cur.skip_ws();
        let negative = match cur.peek() {
            Some(b'+') if !first => {
                cur.pos += 1;
                false
            }
            Some(b'-') => {
                cur.pos += 1;
                true
            }
            None if first => return Err(cur.err("empty polynomial")),
            None => break,
            _ if first => false,
            _ => return Err(cur.err("expected '+' or '-'")),
        };
        first = false;
        cur.skip_ws();
        let coeff = match cur.digits() {
            Some(d) => Some(
                T::from_str_radix(&d, 10)
                    .map_err(|_| Error::parse(base + cur.pos, "bad coefficient"))?,
            ),
            None => None,
        };
        cur.skip_ws();
        if coeff.is_some() && cur.peek() == Some(b'*') {
            cur.pos += 1;
            cur.skip_ws();
            if cur.peek() != Some(b'x') {
                return Err(cur.err("expected 'x' after '*'"));
            }
        }
        let power = if cur.peek() == Some(b'x') {
            cur.pos += 1;
            if cur.peek() == Some(b'^') {
                cur.pos += 1;
                let d = cur.digits().ok_or_else(|| cur.err("expected exponent"))?;
                d.parse::<usize>()
                    .map_err(|_| cur.err("exponent too large"))?
            } else {
                1
            }
        } else if coeff.is_some() {
            0
        } else {
            return Err(cur.err("expected coefficient or 'x'"));
        };
        let mut c = coeff.unwrap_or_else(T::one);
        if negative {
            c = -c;
        }
        if coeffs.len() <= power {
            coeffs.resize(power + 1, T::zero());
        }
        coeffs[power] = coeffs[power].clone() + c;
    }
    Ok(Polynomial::new(coeffs))
}

impl<T: Coefficient> std::str::FromStr for Polynomial<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly_at(s, 0)
    }
}

/// `numerator / denominator` with `denominator(0) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGf<T> {
    numerator: Polynomial<T>,
    denominator: Polynomial<T>,
}

impl<T: Coefficient> RationalGf<T> {
    pub fn new(numerator: Polynomial<T>, denominator: Polynomial<T>) -> Result<Self> {
        if !denominator.coeff(0).is_one() {
            return Err(Error::invalid(
                "denominator must have constant term 1 for an integral power series",
            ));
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &Polynomial<T> {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial<T> {
        &self.denominator
    }

    /// `c_0..=c_upto` by the linear recurrence the denominator defines.
    pub fn coefficients(&self, upto: usize) -> Vec<T> {
        let d = &self.denominator.coeffs;
        let mut out: Vec<T> = Vec::with_capacity(upto + 1);
        for m in 0..=upto {
            let mut c = self.numerator.coeff(m);
            for j in 1..d.len().min(m + 1) {
                c = c - d[j].clone() * out[m - j].clone();
            }
            out.push(c);
        }
        out
    }

    /// `c_0..=c_upto` by long division of the truncated numerator, lowest power first.
    pub fn coefficients_by_long_division(&self, upto: usize) -> Vec<T> {
        let mut rem: Vec<T> = (0..=upto).map(|k| self.numerator.coeff(k)).collect();
        let d = &self.denominator.coeffs;
        let mut quotient = Vec::with_capacity(upto + 1);
        for m in 0..=upto {
            let q = rem[m].clone();
            for (j, dj) in d.iter().enumerate() {
                if m + j > upto {
                    break;
                }
                rem[m + j] = rem[m + j].clone() - q.clone() * dj.clone();
            }
            quotient.push(q);
        }
        quotient
    }
}

pub fn gf_coefficients<T: Coefficient>(gf: &RationalGf<T>, upto: usize) -> Vec<T> {
    gf.coefficients(upto)
}

impl<T: Coefficient + PartialOrd + fmt::Display> fmt::Display for RationalGf<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.numerator, self.denominator)
    }
}

impl<T: Coefficient> std::str::FromStr for RationalGf<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .strip_prefix('(')
            .ok_or_else(|| Error::parse(0, "expected '('"))?;
        let split = body
            .find(")/(")
            .ok_or_else(|| Error::parse(1, "expected ')/(' between numerator and denominator"))?;
        let den_text = body[split + 3..]
            .strip_suffix(')')
            .ok_or_else(|| Error::parse(s.len(), "expected closing ')'"))?;
        let num = parse_poly_at(&body[..split], 1)?;
        let den = parse_poly_at(den_text, split + 4)?;
        RationalGf::new(num, den)
    }
}

/// One of the closed-form diagonal generating functions.
#[derive(Debug, Clone)]
pub struct BuiltinGf<T> {
    pub name: &'static str,
    /// `j` in `sum_n C(n, n-j) x^n`.
    pub diagonal: u32,
    pub gf: RationalGf<T>,
    /// `m` such that the denominator is `(1-2x)^m`.
    pub denominator_power: u32,
}

/// `1 - 2x`.
pub fn one_minus_two_x<T: Coefficient + From<i64>>() -> Polynomial<T> {
    Polynomial::from_i64s(&[1, -2])
}

/// Generating functions of the first three diagonals `C(n, n-1)`, `C(n, n-2)`, `C(n, n-3)`.
pub fn builtin_gfs<T: Coefficient + From<i64>>() -> Vec<BuiltinGf<T>> {
    let base = one_minus_two_x::<T>();
    let make = |name, diagonal, num: &[i64], power| BuiltinGf {
        name,
        diagonal,
        gf: RationalGf::new(Polynomial::from_i64s(num), base.pow(power))
            .expect("(1-2x)^m has constant term 1"),
        denominator_power: power,
    };
    vec![
        make("C(n,n-1)", 1, &[0, 1], 1),
        make("C(n,n-2)", 2, &[0, 0, 2, -2], 2),
        make("C(n,n-3)", 3, &[0, 0, 0, 6, -10, -4, 10, -4], 3),
    ]
}

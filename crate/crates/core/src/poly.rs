//! Integer polynomials in the characteristic-polynomial layout and the
//! b-coefficient sequences derived from them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `Σ a_i λ^(n-i)`, stored as `a_0..a_n` (highest power first).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    a: Vec<BigInt>,
}

impl IntPoly {
    /// Highest-power-first coefficients; leading zeros are kept so the degree
    /// always equals `a.len() - 1`.
    pub fn new(a: Vec<BigInt>) -> Self {
        assert!(!a.is_empty(), "a polynomial needs at least one coefficient");
        IntPoly { a }
    }

    pub fn from_i64(a: &[i64]) -> Self {
        IntPoly::new(a.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn one() -> Self {
        IntPoly::new(vec![BigInt::one()])
    }

    /// `λ^n`.
    pub fn monomial(n: usize) -> Self {
        let mut a = vec![BigInt::zero(); n + 1];
        a[0] = BigInt::one();
        IntPoly::new(a)
    }

    pub fn degree(&self) -> usize {
        self.a.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.a
    }

    /// `a_i`, zero past the end.
    pub fn a(&self, i: usize) -> BigInt {
        self.a.get(i).cloned().unwrap_or_default()
    }

    /// Coefficient of `λ^p`.
    pub fn coeff_of_power(&self, p: usize) -> BigInt {
        if p > self.degree() {
            BigInt::zero()
        } else {
            self.a[self.degree() - p].clone()
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![BigInt::zero(); self.a.len() + other.a.len() - 1];
        for (i, x) in self.a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.a.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        IntPoly::new(out)
    }

    /// `λ · self`.
    pub fn times_lambda(&self) -> IntPoly {
        let mut a = self.a.clone();
        a.push(BigInt::zero());
        IntPoly::new(a)
    }

    /// Adds `factor · other`, aligning equal powers of λ. `other` must not
    /// exceed `self` in degree.
    pub fn add_scaled(&mut self, other: &IntPoly, factor: i64) {
        assert!(other.degree() <= self.degree());
        let shift = self.degree() - other.degree();
        let f = BigInt::from(factor);
        for (j, y) in other.a.iter().enumerate() {
            if !y.is_zero() {
                self.a[shift + j] += &f * y;
            }
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.a
            .iter()
            .fold(0.0, |acc, c| acc * x + bigint_to_f64(c))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial JSON serializes")
    }
}

pub(crate) fn bigint_to_f64(x: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}

/// Renders like `λ^6−6λ^4+9λ^2−4`, using U+2212 for minus.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = n - i;
            let neg = c.is_negative();
            if neg {
                f.write_str("\u{2212}")?;
            } else if !first {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if !mag.is_one() || p == 0 {
                write!(f, "{mag}")?;
            }
            match p {
                0 => {}
                1 => f.write_str("λ")?,
                _ => write!(f, "λ^{p}")?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    /// Parses the rendered form (accepting `-` or `−`, and `x` for `λ`).
    fn from_str(s: &str) -> Result<IntPoly> {
        let s: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '\u{2212}' => '-',
                'x' => 'λ',
                c => c,
            })
            .collect();
        let chars: Vec<char> = s.chars().collect();
        let mut terms: Vec<(usize, BigInt)> = Vec::new();
        let mut i = 0;
        if chars.is_empty() {
            return Err(Error::parse(0, "empty polynomial"));
        }
        while i < chars.len() {
            let mut sign = 1;
            if chars[i] == '+' || chars[i] == '-' {
                if chars[i] == '-' {
                    sign = -1;
                }
                i += 1;
            } else if i > 0 {
                return Err(Error::parse(i, "expected + or -"));
            }
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let mut coef = if i > start {
                let digits: String = chars[start..i].iter().collect();
                digits.parse::<BigInt>().unwrap()
            } else {
                BigInt::one()
            };
            let mut power = 0;
            if i < chars.len() && chars[i] == 'λ' {
                i += 1;
                power = 1;
                if i < chars.len() && chars[i] == '^' {
                    i += 1;
                    let ps = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    if ps == i {
                        return Err(Error::parse(i, "missing exponent"));
                    }
                    let digits: String = chars[ps..i].iter().collect();
                    power = digits
                        .parse()
                        .map_err(|_| Error::parse(ps, "exponent out of range"))?;
                }
            } else if i == start {
                return Err(Error::parse(i, "expected a term"));
            }
            if sign < 0 {
                coef = -coef;
            }
            terms.push((power, coef));
        }
        let deg = terms.iter().map(|t| t.0).max().unwrap();
        let mut a = vec![BigInt::zero(); deg + 1];
        for (p, c) in terms {
            a[deg - p] += c;
        }
        Ok(IntPoly::new(a))
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    a: Vec<serde_json::Number>,
}

pub(crate) fn big_to_number(x: &BigInt) -> serde_json::Number {
    x.to_string()
        .parse()
        .expect("integer literals are valid JSON numbers")
}

pub(crate) fn number_to_big(x: &serde_json::Number) -> std::result::Result<BigInt, String> {
    x.to_string()
        .parse::<BigInt>()
        .map_err(|_| format!("{x} is not an integer"))
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            n: self.degree(),
            a: self.a.iter().map(big_to_number).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = PolyJson::deserialize(d)?;
        if j.a.len() != j.n + 1 {
            return Err(D::Error::custom(format!(
                "{} coefficients for degree {}",
                j.a.len(),
                j.n
            )));
        }
        let a = j
            .a
            .iter()
            .map(number_to_big)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(IntPoly::new(a))
    }
}

/// `b_0..b_{⌊n/2⌋}` of a bipartite graph of order `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BSeq {
    pub n: usize,
    pub b: Vec<BigInt>,
}

impl BSeq {
    pub fn new(n: usize, mut b: Vec<BigInt>) -> Self {
        b.resize(n / 2 + 1, BigInt::zero());
        BSeq { n, b }
    }

    pub fn from_i64(n: usize, b: &[i64]) -> Self {
        BSeq::new(n, b.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// `b_{2i}`, zero outside `0..=⌊n/2⌋`.
    pub fn get(&self, i: usize) -> BigInt {
        self.b.get(i).cloned().unwrap_or_default()
    }

    /// `b_{2i}` with negative indices read as zero.
    pub fn get_signed(&self, i: i64) -> BigInt {
        if i < 0 {
            BigInt::zero()
        } else {
            self.get(i as usize)
        }
    }

    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }

    /// b-sequence of the disjoint union: the convolution of both sequences.
    pub fn union(&self, other: &BSeq) -> BSeq {
        let mut out = vec![BigInt::zero(); self.b.len() + other.b.len() - 1];
        for (i, x) in self.b.iter().enumerate() {
            for (j, y) in other.b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        BSeq::new(self.n + other.n, out)
    }

    /// Back to the signed characteristic-polynomial coefficients.
    pub fn to_poly(&self) -> IntPoly {
        let mut a = vec![BigInt::zero(); self.n + 1];
        for (i, b) in self.b.iter().enumerate() {
            if 2 * i <= self.n {
                a[2 * i] = if i % 2 == 0 { b.clone() } else { -b };
            }
        }
        IntPoly::new(a)
    }

    /// Squared-variable polynomial `Σ (-1)^i b_{2i} μ^{m-i}` with `m = ⌊n/2⌋`,
    /// lowest power first.
    pub fn squared_poly_ascending(&self) -> Vec<BigInt> {
        let m = self.n / 2;
        let mut out = vec![BigInt::zero(); m + 1];
        for i in 0..=m {
            let b = self.get(i);
            out[m - i] = if i % 2 == 0 { b } else { -b };
        }
        out
    }
}

impl fmt::Display for BSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, b) in self.b.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("]")
    }
}

#[derive(Serialize, Deserialize)]
struct BSeqJson {
    n: usize,
    b: Vec<serde_json::Number>,
}

impl Serialize for BSeq {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BSeqJson {
            n: self.n,
            b: self.b.iter().map(big_to_number).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BSeq {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = BSeqJson::deserialize(d)?;
        let b = j
            .b
            .iter()
            .map(number_to_big)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(BSeq::new(j.n, b))
    }
}

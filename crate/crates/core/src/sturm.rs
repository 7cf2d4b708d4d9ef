//! Exact real-root isolation for integer polynomials: square-free
//! decomposition, Sturm sequences, and dyadic bisection.
//!
//! Polynomials here are coefficient vectors with the constant term first.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type ZPoly = Vec<BigInt>;

pub fn trim(p: &mut ZPoly) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    if p.is_empty() {
        p.push(BigInt::zero());
    }
}

fn is_zero_poly(p: &ZPoly) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub fn degree(p: &ZPoly) -> usize {
    p.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn lc(p: &ZPoly) -> &BigInt {
    &p[degree(p)]
}

pub fn derivative(p: &ZPoly) -> ZPoly {
    if p.len() <= 1 {
        return vec![BigInt::zero()];
    }
    let mut d: ZPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    trim(&mut d);
    d
}

fn content(p: &ZPoly) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
pub fn primitive(p: &ZPoly) -> ZPoly {
    let mut q = p.clone();
    trim(&mut q);
    let c = content(&q);
    if c.is_zero() {
        return q;
    }
    let c = if lc(&q).is_negative() { -c } else { c };
    for x in q.iter_mut() {
        *x = &*x / &c;
    }
    q
}

/// Remainder of `a` by `b` up to a positive rational factor.
fn positive_rem(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let db = degree(b);
    let lb = lc(b).clone();
    let mut r = a.clone();
    trim(&mut r);
    let mut negative = false;
    while !is_zero_poly(&r) && degree(&r) >= db {
        let dr = degree(&r);
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= &lb;
        }
        if lb.is_negative() {
            negative = !negative;
        }
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            r[dr - db + i] -= &lr * bc;
        }
        r.truncate(dr.max(1));
        trim(&mut r);
    }
    if negative {
        for x in r.iter_mut() {
            *x = -&*x;
        }
    }
    r
}

/// Greatest common divisor in `Z[x]`, primitive with positive leading coefficient.
pub fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut x = primitive(a);
    let mut y = primitive(b);
    if is_zero_poly(&y) {
        return x;
    }
    if is_zero_poly(&x) {
        return y;
    }
    if degree(&x) < degree(&y) {
        std::mem::swap(&mut x, &mut y);
    }
    while !is_zero_poly(&y) {
        let r = primitive(&positive_rem(&x, &y));
        x = y;
        y = r;
    }
    primitive(&x)
}

/// Exact quotient `a / b`; panics if `b` does not divide `a` in `Z[x]`.
pub fn exact_div(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let db = degree(b);
    let lb = lc(b).clone();
    let mut r = a.clone();
    trim(&mut r);
    if is_zero_poly(&r) {
        return vec![BigInt::zero()];
    }
    let da = degree(&r);
    assert!(da >= db, "divisor degree exceeds dividend degree");
    let mut q = vec![BigInt::zero(); da - db + 1];
    for k in (0..=da - db).rev() {
        let top = r[k + db].clone();
        if top.is_zero() {
            continue;
        }
        let (c, rem) = top.div_rem(&lb);
        assert!(rem.is_zero(), "inexact polynomial division");
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            r[k + i] -= &c * bc;
        }
        q[k] = c;
    }
    assert!(is_zero_poly(&r), "inexact polynomial division");
    trim(&mut q);
    q
}

/// Square-free factors with multiplicities (Yun's algorithm). The product of
/// `f_i^{m_i}` equals `f` up to a constant.
pub fn squarefree_decomposition(f: &ZPoly) -> Vec<(ZPoly, usize)> {
    let f = primitive(f);
    if degree(&f) == 0 {
        return Vec::new();
    }
    let df = derivative(&f);
    let a0 = gcd(&f, &df);
    let mut b = exact_div(&f, &a0);
    let mut c = exact_div(&df, &a0);
    let mut d = sub(&c, &derivative(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while degree(&b) > 0 {
        let a = gcd(&b, &d);
        b = exact_div(&b, &a);
        c = exact_div(&d, &a);
        d = sub(&c, &derivative(&b));
        if degree(&a) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn sub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(&mut out);
    out
}

/// `m / 2^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    pub m: BigInt,
    pub k: u32,
}

impl Dyadic {
    pub fn new(m: BigInt, k: u32) -> Self {
        Dyadic { m, k }.reduced()
    }

    pub fn from_int(m: i64) -> Self {
        Dyadic::new(BigInt::from(m), 0)
    }

    fn reduced(mut self) -> Self {
        while self.k > 0 && self.m.is_even() {
            self.m >>= 1;
            self.k -= 1;
        }
        if self.m.is_zero() {
            self.k = 0;
        }
        self
    }

    pub fn with_exp(&self, k: u32) -> BigInt {
        assert!(k >= self.k);
        &self.m << (k - self.k)
    }

    pub fn add(&self, o: &Dyadic) -> Dyadic {
        let k = self.k.max(o.k);
        Dyadic::new(self.with_exp(k) + o.with_exp(k), k)
    }

    pub fn sub(&self, o: &Dyadic) -> Dyadic {
        let k = self.k.max(o.k);
        Dyadic::new(self.with_exp(k) - o.with_exp(k), k)
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic::new(-&self.m, self.k)
    }

    pub fn mul_int(&self, c: i64) -> Dyadic {
        Dyadic::new(&self.m * BigInt::from(c), self.k)
    }

    pub fn midpoint(&self, o: &Dyadic) -> Dyadic {
        let k = self.k.max(o.k);
        Dyadic::new(self.with_exp(k) + o.with_exp(k), k + 1)
    }

    pub fn is_negative(&self) -> bool {
        self.m.is_negative()
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.m.clone(), BigInt::one() << self.k)
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.to_rational();
        num_traits::ToPrimitive::to_f64(&r).unwrap_or(f64::NAN)
    }

    /// Lower bound on `sqrt(self)` with `prec` fractional bits; `self >= 0`.
    pub fn sqrt_floor(&self, prec: u32) -> Dyadic {
        let (n, half) = self.sqrt_operand(prec);
        Dyadic::new(n.sqrt(), half)
    }

    /// Upper bound on `sqrt(self)` with `prec` fractional bits; `self >= 0`.
    pub fn sqrt_ceil(&self, prec: u32) -> Dyadic {
        let (n, half) = self.sqrt_operand(prec);
        let s = n.sqrt();
        let s = if &s * &s < n { s + 1 } else { s };
        Dyadic::new(s, half)
    }

    /// `(N, h)` with `self = N / 4^h`, `h >= prec`.
    fn sqrt_operand(&self, prec: u32) -> (BigInt, u32) {
        assert!(!self.m.is_negative(), "square root of a negative dyadic");
        let half = prec.max(self.k.div_ceil(2));
        (self.with_exp(2 * half), half)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, o: &Self) -> Ordering {
        let k = self.k.max(o.k);
        self.with_exp(k).cmp(&o.with_exp(k))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            write!(f, "{}", self.m)
        } else {
            write!(f, "{}/2^{}", self.m, self.k)
        }
    }
}

/// Sign of `p(x)` at a dyadic point, evaluated exactly.
pub fn sign_at(p: &ZPoly, x: &Dyadic) -> Ordering {
    let d = degree(p);
    let mut acc = p[d].clone();
    for i in (0..d).rev() {
        acc = acc * &x.m + (&p[i] << (x.k as usize * (d - i)));
    }
    acc.cmp(&BigInt::zero())
}

pub struct SturmSequence {
    seq: Vec<ZPoly>,
}

impl SturmSequence {
    /// `p_0 = p`, `p_1 = p'`, `p_{i+1} = -rem(p_{i-1}, p_i)` with positive
    /// rescaling (content removal) at every step.
    pub fn new(p: &ZPoly) -> Self {
        let p0 = primitive(p);
        let mut seq = vec![p0.clone()];
        let p1 = derivative(&p0);
        if is_zero_poly(&p1) {
            return SturmSequence { seq };
        }
        let c = content(&p1);
        seq.push(p1.iter().map(|x| x / &c).collect());
        loop {
            let n = seq.len();
            let r = positive_rem(&seq[n - 2], &seq[n - 1]);
            if is_zero_poly(&r) {
                break;
            }
            let c = content(&r);
            seq.push(r.iter().map(|x| -(x / &c)).collect());
        }
        SturmSequence { seq }
    }

    /// Sign variations at `x`, zeros skipped.
    pub fn variations(&self, x: &Dyadic) -> usize {
        let mut last = Ordering::Equal;
        let mut v = 0;
        for p in &self.seq {
            let s = sign_at(p, x);
            if s != Ordering::Equal {
                if last != Ordering::Equal && s != last {
                    v += 1;
                }
                last = s;
            }
        }
        v
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    pub fn count(&self, a: &Dyadic, b: &Dyadic) -> usize {
        self.variations(a) - self.variations(b)
    }
}

/// An interval `(lo, hi]` holding exactly one root of a square-free
/// polynomial, or a degenerate `[r, r]` for an exactly located root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Dyadic,
    pub hi: Dyadic,
}

impl RootInterval {
    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// One bisection step, keeping the half that contains the root.
    pub fn bisect(&mut self, p: &ZPoly) {
        if self.is_exact() {
            return;
        }
        let s_hi = sign_at(p, &self.hi);
        if s_hi == Ordering::Equal {
            self.lo = self.hi.clone();
            return;
        }
        let mid = self.lo.midpoint(&self.hi);
        let s_mid = sign_at(p, &mid);
        if s_mid == Ordering::Equal {
            self.lo = mid.clone();
            self.hi = mid;
        } else if s_mid == s_hi {
            self.hi = mid;
        } else {
            self.lo = mid;
        }
    }
}

/// Isolating intervals for every distinct root of the square-free `p` in
/// `(lo, hi]`, in increasing order.
pub fn isolate_roots(p: &ZPoly, lo: &Dyadic, hi: &Dyadic) -> Vec<RootInterval> {
    let sturm = SturmSequence::new(p);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone(), sturm.count(lo, hi))];
    while let Some((a, b, c)) = stack.pop() {
        match c {
            0 => {}
            1 => out.push(RootInterval { lo: a, hi: b }),
            _ => {
                let mid = a.midpoint(&b);
                let left = sturm.count(&a, &mid);
                stack.push((mid.clone(), b, c - left));
                stack.push((a, mid, left));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Smallest power of two strictly above the Cauchy root bound.
pub fn root_bound(p: &ZPoly) -> Dyadic {
    let d = degree(p);
    let lead = p[d].abs();
    let max_ratio = p[..d]
        .iter()
        .map(|c| c.abs().div_ceil(&lead))
        .max()
        .unwrap_or_default();
    let bound: BigInt = max_ratio + 1;
    let bits = bound.bits() as usize;
    Dyadic::new(BigInt::one() << bits, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zp(c: &[i64]) -> ZPoly {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn from_roots(roots: &[i64]) -> ZPoly {
        let mut p = zp(&[1]);
        for &r in roots {
            let mut q = vec![BigInt::zero(); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                q[i + 1] += c;
                q[i] -= c * BigInt::from(r);
            }
            p = q;
        }
        p
    }

    #[test]
    fn gcd_and_division() {
        let f = from_roots(&[1, 1, 2, -3]);
        let g = from_roots(&[1, 5]);
        assert_eq!(gcd(&f, &g), from_roots(&[1]));
        assert_eq!(exact_div(&f, &from_roots(&[1, 2])), from_roots(&[1, -3]));
        assert_eq!(degree(&gcd(&f, &derivative(&f))), 1);
    }

    #[test]
    fn yun_multiplicities() {
        // (x-1)^3 (x+2)^2 (x-5)
        let f = from_roots(&[1, 1, 1, -2, -2, 5]);
        let parts = squarefree_decomposition(&f);
        let summary: Vec<(usize, usize)> = parts.iter().map(|(p, m)| (degree(p), *m)).collect();
        assert_eq!(summary, vec![(1, 1), (1, 2), (1, 3)]);
        assert_eq!(parts[0].0, from_roots(&[5]));
        assert_eq!(parts[1].0, from_roots(&[-2]));
        assert_eq!(parts[2].0, from_roots(&[1]));
    }

    #[test]
    fn sturm_counts_integer_roots() {
        let p = from_roots(&[-3, -1, 0, 2, 7]);
        let s = SturmSequence::new(&p);
        let d = |x: i64| Dyadic::from_int(x);
        assert_eq!(s.count(&d(-10), &d(10)), 5);
        assert_eq!(s.count(&d(-3), &d(0)), 2);
        assert_eq!(s.count(&d(0), &d(2)), 1);
        assert_eq!(s.count(&d(2), &d(6)), 0);
    }

    #[test]
    fn isolation_and_refinement() {
        // x^2 - 2
        let p = zp(&[-2, 0, 1]);
        let ivs = isolate_roots(&p, &Dyadic::from_int(-4), &Dyadic::from_int(4));
        assert_eq!(ivs.len(), 2);
        let mut iv = ivs[1].clone();
        for _ in 0..60 {
            iv.bisect(&p);
        }
        let s2 = std::f64::consts::SQRT_2;
        assert!(iv.lo.to_f64() <= s2 && s2 <= iv.hi.to_f64());
        assert!(iv.width().to_f64() < 1e-15);
    }

    #[test]
    fn exact_dyadic_root_found() {
        let p = zp(&[-1, 4]); // 4x - 1
        let mut iv = isolate_roots(&p, &Dyadic::from_int(0), &Dyadic::from_int(1)).remove(0);
        for _ in 0..5 {
            iv.bisect(&p);
        }
        assert!(iv.is_exact());
        assert_eq!(iv.lo, Dyadic::new(BigInt::from(1), 2));
    }

    #[test]
    fn dyadic_sqrt_bounds() {
        let two = Dyadic::from_int(2);
        let lo = two.sqrt_floor(40).to_f64();
        let hi = two.sqrt_ceil(40).to_f64();
        assert!(lo <= std::f64::consts::SQRT_2 && std::f64::consts::SQRT_2 <= hi);
        assert!(hi - lo < 1e-11);
        let four = Dyadic::from_int(4);
        assert_eq!(four.sqrt_floor(10), four.sqrt_ceil(10));
        let quarter = Dyadic::new(BigInt::from(1), 2);
        assert_eq!(quarter.sqrt_floor(3), Dyadic::new(BigInt::from(1), 1));
    }

    #[test]
    fn bound_exceeds_roots() {
        let p = from_roots(&[-9, 3, 17]);
        let b = root_bound(&p);
        assert!(b > Dyadic::from_int(17));
    }

    proptest! {
        #[test]
        fn isolates_all_integer_roots(roots in proptest::collection::vec(-20i64..20, 1..7)) {
            let p = from_roots(&roots);
            let mut distinct = roots.clone();
            distinct.sort_unstable();
            distinct.dedup();
            let parts = squarefree_decomposition(&p);
            let total: usize = parts.iter().map(|(f, m)| degree(f) * m).sum();
            prop_assert_eq!(total, roots.len());
            let mut found = Vec::new();
            for (f, _) in &parts {
                let b = root_bound(f);
                for mut iv in isolate_roots(f, &b.neg(), &b) {
                    for _ in 0..80 {
                        iv.bisect(f);
                    }
                    found.push(iv.hi.to_f64().round() as i64);
                }
            }
            found.sort_unstable();
            prop_assert_eq!(found, distinct);
        }
    }
}

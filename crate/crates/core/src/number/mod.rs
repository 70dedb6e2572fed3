//! Exact arithmetic over the constructible numbers.
//!
//! A [`Constructible`] is a real number obtained from the rationals by field
//! operations and square roots of non-negative values. Internally each value
//! lives in a tower of quadratic extensions (see `tower`), which gives
//! structural zero tests and an exact sign decision. A floating interval is
//! kept alongside as a filter; it never decides a sign on its own.

mod interval;
mod tower;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use dashu_int::IBig;
use dashu_ratio::RBig;

use crate::error::{Error, Result};
use tower::{Elem, Tower};

pub(crate) use interval::Interval;

/// Exact trichotomy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn from_i8(s: i8) -> Sign {
        match s.cmp(&0) {
            Ordering::Less => Sign::Negative,
            Ordering::Equal => Sign::Zero,
            Ordering::Greater => Sign::Positive,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "-",
            Sign::Zero => "0",
            Sign::Positive => "+",
        })
    }
}

/// An exact real number in the quadratic closure of the rationals.
///
/// Values are immutable and cheap to clone. Equality and ordering are
/// decided exactly: `a == b` iff `sign(a - b)` is zero.
#[derive(Clone)]
pub struct Constructible {
    tower: Arc<Tower>,
    elem: Elem,
}

impl Constructible {
    fn in_tower(tower: Arc<Tower>, elem: Elem) -> Constructible {
        match elem {
            // rationals never need a tower
            Elem::Rat(_) => Constructible {
                tower: Tower::empty(),
                elem,
            },
            _ => Constructible { tower, elem },
        }
    }

    pub fn from_rational(q: RBig) -> Constructible {
        Constructible {
            tower: Tower::empty(),
            elem: Elem::rat(q),
        }
    }

    pub fn from_int(n: i64) -> Constructible {
        Constructible::from_rational(RBig::from(n))
    }

    /// `num / den`; panics when `den` is zero.
    pub fn ratio(num: i64, den: i64) -> Constructible {
        assert!(den != 0, "zero denominator");
        Constructible::from_rational(RBig::from_parts_signed(num.into(), den.into()))
    }

    pub fn zero() -> Constructible {
        Constructible::from_int(0)
    }

    pub fn one() -> Constructible {
        Constructible::from_int(1)
    }

    /// The rational value, if this number is rational.
    pub fn to_rational(&self) -> Option<RBig> {
        self.elem.as_rational().cloned()
    }

    pub fn is_rational(&self) -> bool {
        self.elem.as_rational().is_some()
    }

    fn binary(&self, other: &Constructible) -> (Arc<Tower>, Elem, Elem) {
        tower::align(&self.tower, &self.elem, &other.tower, &other.elem)
    }

    pub fn sign(&self) -> Sign {
        Sign::from_i8(tower::sign(&self.elem, &self.tower.rads))
    }

    pub fn is_zero(&self) -> bool {
        self.elem.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    pub fn abs(&self) -> Constructible {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn square(&self) -> Constructible {
        Constructible::in_tower(self.tower.clone(), tower::sqr(&self.elem, &self.tower.rads))
    }

    pub fn div(&self, other: &Constructible) -> Result<Constructible> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (t, x, y) = self.binary(other);
        let q = tower::mul(&x, &tower::inv(&y, &t.rads), &t.rads);
        Ok(Constructible::in_tower(t, q))
    }

    pub fn recip(&self) -> Result<Constructible> {
        Constructible::one().div(self)
    }

    /// Multiplication by a rational constant.
    pub fn scale(&self, num: i64, den: i64) -> Constructible {
        let q = RBig::from_parts_signed(num.into(), den.into());
        Constructible::in_tower(self.tower.clone(), tower::scale(&self.elem, &q))
    }

    /// The non-negative square root; `result² == self` exactly.
    pub fn sqrt_nonneg(&self) -> Result<Constructible> {
        match self.sign() {
            Sign::Negative => return Err(Error::NegativeRadicand),
            Sign::Zero => return Ok(Constructible::zero()),
            Sign::Positive => {}
        }
        let rads = &self.tower.rads;
        if let Some(q) = self.elem.as_rational() {
            // √q = k·√m
            let (k, m) = tower::square_split(q);
            if m.is_one() {
                return Ok(Constructible::from_rational(k));
            }
            let m = Elem::rat(RBig::from(m));
            let root = match tower::sqrt_within(&m, rads, rads.len()) {
                Some(s) => Constructible::in_tower(self.tower.clone(), s),
                None => {
                    let t = self.tower.adjoin(m);
                    let n = t.len() - 1;
                    Constructible::in_tower(t, Elem::radical(n))
                }
            };
            let root = root.abs();
            return Ok(Constructible::in_tower(
                root.tower.clone(),
                tower::scale(&root.elem, &k),
            ));
        }
        let root = match tower::sqrt_within(&self.elem, rads, rads.len()) {
            Some(s) => Constructible::in_tower(self.tower.clone(), s),
            None => {
                let t = self.tower.adjoin(self.elem.clone());
                let n = t.len() - 1;
                Constructible::in_tower(t, Elem::radical(n))
            }
        };
        Ok(root.abs())
    }

    /// Deepest nesting of square roots among the radicals this value uses.
    pub fn radical_depth(&self) -> u32 {
        tower::elem_depth(&self.elem, &self.tower.rads)
    }

    /// A nearby `f64`. For display and rendering only.
    pub fn to_f64(&self) -> f64 {
        if let Some(q) = self.elem.as_rational() {
            return q.to_f64().value();
        }
        let iv = tower::interval(&self.elem, &self.tower.rads);
        let m = iv.midpoint();
        if m.is_finite() {
            m
        } else {
            self.approx(20).parse().unwrap_or(f64::NAN)
        }
    }

    /// Decimal truncation with `digits` fractional digits; the error is below
    /// `10^-digits`. Computed by exact comparisons.
    pub fn approx(&self, digits: usize) -> String {
        let digits = digits.max(1);
        let negative = self.is_negative();
        let v = self.abs();
        let pow = IBig::from(10u8).pow(digits);
        let scaled = Constructible::in_tower(
            v.tower.clone(),
            tower::scale(&v.elem, &RBig::from(pow)),
        );
        let floor = scaled.floor();
        let s = floor.to_string();
        let s = if s.len() <= digits {
            format!("{}{}", "0".repeat(digits + 1 - s.len()), s)
        } else {
            s
        };
        let (int, frac) = s.split_at(s.len() - digits);
        let all_zero = floor.is_zero();
        format!(
            "{}{}.{}",
            if negative && !all_zero { "-" } else { "" },
            int,
            frac
        )
    }

    /// Largest integer not exceeding the value.
    pub fn floor(&self) -> IBig {
        if let Some(q) = self.elem.as_rational() {
            return q.floor();
        }
        let below = |k: &IBig| -> bool {
            // k <= self
            (self - &Constructible::from_rational(RBig::from(k.clone())))
                .sign()
                != Sign::Negative
        };
        let est = self.to_f64_estimate();
        let mut lo;
        let mut hi;
        match est {
            Some((e, width)) => {
                let slack = width.abs() + e.abs() * 1e-12 + 2.0;
                lo = float_to_bigint((e - slack).floor());
                hi = float_to_bigint((e + slack).ceil());
            }
            None => {
                lo = IBig::NEG_ONE;
                hi = IBig::ONE;
            }
        }
        while !below(&lo) {
            lo = &lo * IBig::from(2u8) - IBig::ONE;
        }
        while below(&hi) {
            hi = &hi * IBig::from(2u8) + IBig::ONE;
        }
        // invariant: lo <= self < hi
        while &hi - &lo > IBig::ONE {
            let mid: IBig = (&lo + &hi) / IBig::from(2u8);
            if below(&mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// A cached enclosure of the value, for filtering predicates before
    /// doing exact arithmetic.
    pub(crate) fn enclosure(&self) -> Interval {
        tower::interval(&self.elem, &self.tower.rads)
    }

    fn to_f64_estimate(&self) -> Option<(f64, f64)> {
        let iv = tower::interval(&self.elem, &self.tower.rads);
        let m = iv.midpoint();
        if m.is_finite() && (iv.hi - iv.lo).is_finite() {
            Some((m, iv.hi - iv.lo))
        } else {
            None
        }
    }

    /// Canonical prefix form over `{rational, +, −, ×, ÷, √}`.
    pub fn to_prefix(&self) -> String {
        serialize_elem(&self.elem, &self.tower.rads)
    }

    /// Parses the prefix form produced by [`Constructible::to_prefix`].
    pub fn from_prefix(s: &str) -> Result<Constructible> {
        let mut tokens = s.split_whitespace();
        let v = parse_prefix(&mut tokens)?;
        if let Some(extra) = tokens.next() {
            return Err(Error::Parse(format!("trailing token `{extra}`")));
        }
        Ok(v)
    }
}

fn float_to_bigint(f: f64) -> IBig {
    IBig::from_str(&format!("{:.0}", f)).unwrap_or_default()
}

fn rational_literal(q: &RBig) -> String {
    if q.is_int() {
        q.numerator().to_string()
    } else {
        format!("{}/{}", q.numerator(), q.denominator())
    }
}

pub(crate) fn serialize_elem(x: &Elem, rads: &[Arc<tower::Radical>]) -> String {
    match x {
        Elem::Rat(q) => rational_literal(q),
        Elem::Ext(n) => {
            let root = format!("√ {}", serialize_elem(&rads[n.level].radicand, rads));
            let term = if n.b.as_rational().is_some_and(|q| q.is_one()) {
                root
            } else {
                format!("× {} {}", serialize_elem(&n.b, rads), root)
            };
            if n.a.is_zero() {
                term
            } else {
                format!("+ {} {}", serialize_elem(&n.a, rads), term)
            }
        }
    }
}

fn parse_prefix<'a>(tokens: &mut impl Iterator<Item = &'a str>) -> Result<Constructible> {
    let tok = tokens
        .next()
        .ok_or_else(|| Error::Parse("unexpected end of prefix expression".into()))?;
    match tok {
        "+" => Ok(&parse_prefix(tokens)? + &parse_prefix(tokens)?),
        "−" => Ok(&parse_prefix(tokens)? - &parse_prefix(tokens)?),
        "×" => Ok(&parse_prefix(tokens)? * &parse_prefix(tokens)?),
        "÷" => parse_prefix(tokens)?.div(&parse_prefix(tokens)?),
        "√" => parse_prefix(tokens)?.sqrt_nonneg(),
        lit => parse_rational(lit).map(Constructible::from_rational),
    }
}

/// Parses `p`, `-p`, or `p/q` with decimal integers.
pub fn parse_rational(lit: &str) -> Result<RBig> {
    let bad = || Error::Parse(format!("bad rational literal `{lit}`"));
    let (n, d) = match lit.split_once('/') {
        Some((n, d)) => (n, d),
        None => (lit, "1"),
    };
    let n = IBig::from_str(n).map_err(|_| bad())?;
    let d = IBig::from_str(d).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(RBig::from_parts_signed(n, d))
}

fn fmt_elem(x: &Elem, rads: &[Arc<tower::Radical>], out: &mut String) {
    match x {
        Elem::Rat(q) => out.push_str(&rational_literal(q)),
        Elem::Ext(n) => {
            let mut radicand = String::new();
            fmt_elem(&rads[n.level].radicand, rads, &mut radicand);
            let root = format!("sqrt({radicand})");
            if !n.a.is_zero() {
                fmt_elem(&n.a, rads, out);
            }
            match n.b.as_rational() {
                Some(q) => {
                    let neg = tower::rat_sign(q) < 0;
                    let mag = if neg { -q.clone() } else { q.clone() };
                    if n.a.is_zero() {
                        if neg {
                            out.push('-');
                        }
                    } else {
                        out.push_str(if neg { " - " } else { " + " });
                    }
                    if !mag.is_one() {
                        out.push_str(&rational_literal(&mag));
                        out.push('*');
                    }
                    out.push_str(&root);
                }
                None => {
                    if !n.a.is_zero() {
                        out.push_str(" + ");
                    }
                    out.push('(');
                    fmt_elem(&n.b, rads, out);
                    out.push_str(")*");
                    out.push_str(&root);
                }
            }
        }
    }
}

/// Infix form using `sqrt(...)`, accepted by the script language.
impl fmt::Display for Constructible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        fmt_elem(&self.elem, &self.tower.rads, &mut s);
        f.write_str(&s)
    }
}

impl fmt::Debug for Constructible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialEq for Constructible {
    fn eq(&self, other: &Constructible) -> bool {
        let (a, b) = (self.enclosure(), other.enclosure());
        if a.hi < b.lo || b.hi < a.lo {
            return false;
        }
        let (_, x, y) = self.binary(other);
        tower::elem_eq(&x, &y)
    }
}

impl Eq for Constructible {}

impl PartialOrd for Constructible {
    fn partial_cmp(&self, other: &Constructible) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Constructible {
    fn cmp(&self, other: &Constructible) -> Ordering {
        let (a, b) = (self.enclosure(), other.enclosure());
        if a.hi < b.lo {
            return Ordering::Less;
        }
        if a.lo > b.hi {
            return Ordering::Greater;
        }
        match (self - other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl From<i64> for Constructible {
    fn from(n: i64) -> Constructible {
        Constructible::from_int(n)
    }
}

impl From<RBig> for Constructible {
    fn from(q: RBig) -> Constructible {
        Constructible::from_rational(q)
    }
}

impl<'a> Add<&'a Constructible> for &'a Constructible {
    type Output = Constructible;
    fn add(self, other: &Constructible) -> Constructible {
        let (t, x, y) = self.binary(other);
        let s = tower::add(&x, &y);
        Constructible::in_tower(t, s)
    }
}

impl<'a> Sub<&'a Constructible> for &'a Constructible {
    type Output = Constructible;
    fn sub(self, other: &Constructible) -> Constructible {
        let (t, x, y) = self.binary(other);
        let s = tower::sub(&x, &y);
        Constructible::in_tower(t, s)
    }
}

impl<'a> Mul<&'a Constructible> for &'a Constructible {
    type Output = Constructible;
    fn mul(self, other: &Constructible) -> Constructible {
        let (t, x, y) = self.binary(other);
        let p = tower::mul(&x, &y, &t.rads);
        Constructible::in_tower(t, p)
    }
}

impl Neg for &Constructible {
    type Output = Constructible;
    fn neg(self) -> Constructible {
        Constructible::in_tower(self.tower.clone(), tower::neg(&self.elem))
    }
}

impl Neg for Constructible {
    type Output = Constructible;
    fn neg(self) -> Constructible {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Constructible> for Constructible {
            type Output = Constructible;
            fn $m(self, other: Constructible) -> Constructible {
                (&self).$m(&other)
            }
        }
        impl<'a> $tr<&'a Constructible> for Constructible {
            type Output = Constructible;
            fn $m(self, other: &Constructible) -> Constructible {
                (&self).$m(other)
            }
        }
        impl<'a> $tr<Constructible> for &'a Constructible {
            type Output = Constructible;
            fn $m(self, other: Constructible) -> Constructible {
                self.$m(&other)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Constructible {
        Constructible::ratio(n, d)
    }

    fn sqrt(n: i64) -> Constructible {
        Constructible::from_int(n).sqrt_nonneg().unwrap()
    }

    #[test]
    fn rational_sum() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        assert_eq!(&sqrt(2) + &Constructible::zero(), sqrt(2));
    }

    #[test]
    fn root_two_plus_root_eight_is_root_eighteen() {
        // (√2 + √8)² = 2 + 8 + 2·√16 = 18
        let s = &sqrt(2) + &sqrt(8);
        assert_eq!((&s - &sqrt(18)).sign(), Sign::Zero);
        assert_eq!((&s.square() - &Constructible::from_int(18)).sign(), Sign::Zero);
    }

    #[test]
    fn field_operations() {
        assert_eq!(&sqrt(2) * &sqrt(2), Constructible::from_int(2));
        let r = Constructible::one().div(&sqrt(2)).unwrap();
        assert_eq!((&r - &sqrt(2).scale(1, 2)).sign(), Sign::Zero);
        assert_eq!((&sqrt(3) - &sqrt(3)).sign(), Sign::Zero);
        assert_eq!(
            Constructible::one().div(&(&sqrt(3) - &sqrt(3))),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn square_roots() {
        assert_eq!(Constructible::zero().sqrt_nonneg().unwrap(), Constructible::zero());
        assert_eq!(q(9, 4).sqrt_nonneg().unwrap(), q(3, 2));
        assert_eq!((sqrt(2).square() - Constructible::from_int(2)).sign(), Sign::Zero);
        assert_eq!(q(-1, 3).sqrt_nonneg(), Err(Error::NegativeRadicand));
    }

    #[test]
    fn signs_against_rational_squaring() {
        // 2 > 49/25 and 2 < 9/4
        assert_eq!((sqrt(2) - q(7, 5)).sign(), Sign::Positive);
        assert_eq!((sqrt(2) - q(3, 2)).sign(), Sign::Negative);
    }

    #[test]
    fn approximations() {
        assert_eq!(q(1, 3).approx(4), "0.3333");
        assert_eq!(sqrt(2).approx(4), "1.4142");
        assert_eq!(Constructible::zero().approx(2), "0.00");
        assert_eq!((-sqrt(2)).approx(3), "-1.414");
        assert_eq!(q(-1, 1000).approx(2), "0.00");
    }

    #[test]
    fn nested_radicals_denest() {
        // √(3 + 2√2) = 1 + √2
        let x = (Constructible::from_int(3) + sqrt(2).scale(2, 1)).sqrt_nonneg().unwrap();
        assert_eq!(x, Constructible::one() + sqrt(2));
        // √6 shares the field generated by √2 and √3
        let p = &sqrt(2) * &sqrt(3);
        assert_eq!(p, sqrt(6));
    }

    #[test]
    fn independent_branches_merge() {
        let a = &sqrt(2) + &sqrt(5);
        let b = &sqrt(3) + &sqrt(10);
        let lhs = &a * &b;
        let rhs = &(&(&sqrt(6) + &sqrt(20)) + &sqrt(15)) + &sqrt(50);
        assert_eq!(lhs, rhs);
        assert!((&lhs - &rhs).is_zero());
    }

    #[test]
    fn prefix_round_trip() {
        let x = (Constructible::from_int(2) + sqrt(3)).sqrt_nonneg().unwrap() + q(1, 7);
        let s = x.to_prefix();
        let y = Constructible::from_prefix(&s).unwrap();
        assert_eq!(x, y);
        assert_eq!(y.to_prefix(), s);
        assert_eq!(
            Constructible::from_prefix("÷ 1 √ 2").unwrap(),
            sqrt(2).scale(1, 2)
        );
    }

    #[test]
    fn display_uses_script_syntax() {
        let apex_y = sqrt(3).scale(1, 2);
        assert_eq!(apex_y.to_string(), "1/2*sqrt(3)");
        assert_eq!((q(1, 2) - sqrt(2)).to_string(), "1/2 - sqrt(2)");
    }

    #[test]
    fn depth_counts_nesting() {
        assert_eq!(q(1, 2).radical_depth(), 0);
        assert_eq!(sqrt(2).radical_depth(), 1);
        let nested = (Constructible::from_int(2) + sqrt(2)).sqrt_nonneg().unwrap();
        assert_eq!(nested.radical_depth(), 2);
    }
}

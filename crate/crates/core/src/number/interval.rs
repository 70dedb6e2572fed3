//! Outward-rounded `f64` intervals used as a fast sign filter.
//!
//! Every operation widens its result by one ulp on each side, so the true
//! value always lies inside the enclosure. Anything that overflows collapses
//! to the whole line and the exact path takes over.

use dashu_ratio::RBig;

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub const ENTIRE: Interval = Interval {
        lo: f64::NEG_INFINITY,
        hi: f64::INFINITY,
    };

    fn widened(lo: f64, hi: f64) -> Interval {
        if lo.is_nan() || hi.is_nan() {
            return Interval::ENTIRE;
        }
        Interval {
            lo: lo.next_down(),
            hi: hi.next_up(),
        }
    }

    pub fn point(v: f64) -> Interval {
        if v.is_finite() {
            Interval { lo: v, hi: v }
        } else {
            Interval::ENTIRE
        }
    }

    pub fn from_rational(q: &RBig) -> Interval {
        match q.to_f64().value() {
            v if v.is_finite() => {
                if q.is_int() && v.abs() < 9.0e15 {
                    Interval::point(v)
                } else {
                    Interval::widened(v, v)
                }
            }
            _ => Interval::ENTIRE,
        }
    }

    /// Sign of every member, or `None` when the enclosure straddles zero.
    pub fn sign(&self) -> Option<i8> {
        if self.lo > 0.0 {
            Some(1)
        } else if self.hi < 0.0 {
            Some(-1)
        } else if self.lo == 0.0 && self.hi == 0.0 {
            Some(0)
        } else {
            None
        }
    }

    pub fn add(self, o: Interval) -> Interval {
        Interval::widened(self.lo + o.lo, self.hi + o.hi)
    }

    pub fn sub(self, o: Interval) -> Interval {
        Interval::widened(self.lo - o.hi, self.hi - o.lo)
    }

    pub fn mul(self, o: Interval) -> Interval {
        if (self.lo == 0.0 && self.hi == 0.0) || (o.lo == 0.0 && o.hi == 0.0) {
            return Interval::point(0.0);
        }
        let c = [
            self.lo * o.lo,
            self.lo * o.hi,
            self.hi * o.lo,
            self.hi * o.hi,
        ];
        if c.iter().any(|v| v.is_nan()) {
            return Interval::ENTIRE;
        }
        let lo = c.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = c.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        Interval::widened(lo, hi)
    }

    /// Enclosure of the non-negative square root; negative parts are clipped.
    pub fn sqrt(self) -> Interval {
        let lo = if self.lo > 0.0 { self.lo.sqrt() } else { 0.0 };
        let hi = if self.hi.is_finite() {
            self.hi.max(0.0).sqrt()
        } else {
            f64::INFINITY
        };
        Interval {
            lo: if lo > 0.0 { lo.next_down() } else { 0.0 },
            hi: hi.next_up(),
        }
    }

    pub fn midpoint(&self) -> f64 {
        if self.lo.is_finite() && self.hi.is_finite() {
            0.5 * self.lo + 0.5 * self.hi
        } else {
            f64::NAN
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use dashu_int::{IBig, UBig};

    #[test]
    fn rational_enclosure_contains_value() {
        let third = RBig::from_parts(IBig::ONE, UBig::from(3u8));
        let iv = Interval::from_rational(&third);
        assert!(iv.lo < iv.hi);
        assert!(iv.lo <= 1.0 / 3.0 && 1.0 / 3.0 <= iv.hi);
    }

    #[test]
    fn straddling_zero_has_no_sign() {
        let iv = Interval { lo: -1e-300, hi: 1e-300 };
        assert_eq!(iv.sign(), None);
        assert_eq!(Interval::point(0.0).sign(), Some(0));
    }

    #[test]
    fn sqrt_two_squared_contains_two() {
        let r = Interval::point(2.0).sqrt();
        let sq = r.mul(r);
        assert!(sq.lo <= 2.0 && 2.0 <= sq.hi);
    }
}

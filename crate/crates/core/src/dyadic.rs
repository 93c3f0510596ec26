//! Exact dyadic rationals `n / 2^d`.

use core::cmp::Ordering;
use core::fmt;

/// Largest exponent a [`Dyadic`] may carry. Keeps every cross-multiplication
/// inside `i128`.
pub const MAX_EXPONENT: u32 = 62;

/// A dyadic rational `numerator / 2^exponent`, always normalized so that the
/// exponent is zero or the numerator is odd.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    numerator: i64,
    exponent: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic {
        numerator: 0,
        exponent: 0,
    };

    pub const fn integer(n: i64) -> Self {
        Dyadic {
            numerator: n,
            exponent: 0,
        }
    }

    /// Builds `numerator / 2^exponent`, normalizing common factors of two.
    ///
    /// Returns `None` when the normalized exponent exceeds [`MAX_EXPONENT`].
    pub fn new(numerator: i64, exponent: u32) -> Option<Self> {
        let (n, e) = if numerator == 0 {
            (0, 0)
        } else {
            let shift = numerator.trailing_zeros().min(exponent);
            (numerator >> shift, exponent - shift)
        };
        (e <= MAX_EXPONENT).then_some(Dyadic {
            numerator: n,
            exponent: e,
        })
    }

    pub const fn numerator(self) -> i64 {
        self.numerator
    }

    pub const fn exponent(self) -> u32 {
        self.exponent
    }

    pub const fn is_integer(self) -> bool {
        self.exponent == 0
    }

    /// `n +- 1` over the same denominator, as used by the number shapes
    /// `{(n-1)/2^d | (n+1)/2^d}`.
    pub fn neighbors(self) -> (Dyadic, Dyadic) {
        let lo = Dyadic::new(self.numerator - 1, self.exponent).expect("exponent only shrinks");
        let hi = Dyadic::new(self.numerator + 1, self.exponent).expect("exponent only shrinks");
        (lo, hi)
    }

    pub fn floor(self) -> i64 {
        self.numerator >> self.exponent
    }

    pub fn ceil(self) -> i64 {
        -((-self.numerator) >> self.exponent)
    }

    pub fn abs_ceil(self) -> i64 {
        self.floor().abs().max(self.ceil().abs())
    }

    pub fn checked_add(self, other: Dyadic) -> Option<Dyadic> {
        let e = self.exponent.max(other.exponent);
        let a = (self.numerator as i128) << (e - self.exponent);
        let b = (other.numerator as i128) << (e - other.exponent);
        let sum = i64::try_from(a + b).ok()?;
        Dyadic::new(sum, e)
    }

    pub fn checked_neg(self) -> Option<Dyadic> {
        Some(Dyadic {
            numerator: self.numerator.checked_neg()?,
            exponent: self.exponent,
        })
    }

    /// The simplest dyadic strictly inside the open interval `(lo, hi)`,
    /// where a missing bound means unbounded on that side.
    ///
    /// Integers come first, closest to zero; otherwise the unique member with
    /// the smallest denominator. Returns `None` if the interval is empty.
    pub fn simplest_in_open(lo: Option<Dyadic>, hi: Option<Dyadic>) -> Option<Dyadic> {
        if let (Some(l), Some(h)) = (lo, hi) {
            if l >= h {
                return None;
            }
        }
        // Integers strictly inside.
        let int_lo = lo.map(|l| l.floor() + 1);
        let int_hi = hi.map(|h| h.ceil() - 1);
        match (int_lo, int_hi) {
            (None, None) => return Some(Dyadic::ZERO),
            (Some(a), None) => return Some(Dyadic::integer(a.max(0))),
            (None, Some(b)) => return Some(Dyadic::integer(b.min(0))),
            (Some(a), Some(b)) if a <= b => {
                return Some(Dyadic::integer(if a > 0 {
                    a
                } else if b < 0 {
                    b
                } else {
                    0
                }))
            }
            _ => {}
        }
        let (l, h) = (lo?, hi?);
        let max_e = l.exponent.max(h.exponent) + 1;
        for e in 1..=max_e.min(MAX_EXPONENT) {
            // Smallest n with n/2^e > l.
            let first = if l.exponent <= e {
                ((l.numerator as i128) << (e - l.exponent)) + 1
            } else {
                ((l.numerator as i128) >> (l.exponent - e)) + 1
            };
            let candidate = Dyadic::new(i64::try_from(first).ok()?, e)?;
            if candidate < h {
                return Some(candidate);
            }
        }
        None
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exponent.max(other.exponent);
        let a = (self.numerator as i128) << (e - self.exponent);
        let b = (other.numerator as i128) << (e - other.exponent);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::integer(n)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, 1u64 << self.exponent)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

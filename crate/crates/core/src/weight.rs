//! Edge weights and the extended distance domain.
//!
//! Every algorithm in the crate is generic over a signed primitive integer
//! weight. Distances live in [`ExtDist`], which reserves the type's maximum
//! value as an absorbing `+inf`.

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::str::FromStr;

use num_traits::{NumCast, PrimInt, Signed, WrappingAdd};

/// Signed integer edge weight.
pub trait Weight:
    PrimInt
    + Signed
    + WrappingAdd
    + NumCast
    + Debug
    + Display
    + FromStr
    + Default
    + Send
    + Sync
    + 'static
{
}

impl<T> Weight for T where
    T: PrimInt
        + Signed
        + WrappingAdd
        + NumCast
        + Debug
        + Display
        + FromStr
        + Default
        + Send
        + Sync
        + 'static
{
}

/// A distance: a finite integer or `+inf`.
///
/// `W::max_value()` is the infinity sentinel, so the derived ordering places
/// `+inf` above every finite value. Graph construction bounds weights such
/// that no sum of path weights can reach the sentinel.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtDist<W>(W);

impl<W: Weight> ExtDist<W> {
    #[inline]
    pub fn inf() -> Self {
        ExtDist(W::max_value())
    }

    #[inline]
    pub fn zero() -> Self {
        ExtDist(W::zero())
    }

    #[inline]
    pub fn finite(value: W) -> Self {
        debug_assert!(
            value != W::max_value(),
            "finite distance collides with +inf"
        );
        ExtDist(value)
    }

    #[inline]
    pub fn is_inf(self) -> bool {
        self.0 == W::max_value()
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        !self.is_inf()
    }

    #[inline]
    pub(crate) fn from_raw(raw: W) -> Self {
        ExtDist(raw)
    }

    /// The stored integer, `W::max_value()` for `+inf`.
    #[inline]
    pub(crate) fn raw(self) -> W {
        self.0
    }

    #[inline]
    pub fn value(self) -> Option<W> {
        if self.is_inf() {
            None
        } else {
            Some(self.0)
        }
    }

    /// `self + w`, with `+inf` absorbing.
    ///
    /// Saturates on the negative side so that runs on graphs with negative
    /// cycles cannot wrap around.
    #[inline]
    pub fn plus(self, w: W) -> Self {
        if self.is_inf() {
            self
        } else {
            ExtDist(self.0.saturating_add(w).min(W::max_value() - W::one()))
        }
    }

    /// `self + w` without saturation, for sums that are lengths of simple
    /// paths. Graph construction keeps those strictly inside the range of
    /// `W`, so only the `+inf` check remains.
    #[inline]
    pub fn plus_path(self, w: W) -> Self {
        if self.is_inf() {
            self
        } else {
            // in range by the graph's weight bound; wrapping avoids the
            // overflow-check branch in the hottest loops
            ExtDist(self.0.wrapping_add(&w))
        }
    }

    #[inline]
    pub fn plus_dist(self, other: Self) -> Self {
        if other.is_inf() {
            other
        } else {
            self.plus(other.0)
        }
    }
}

impl<W: Weight> PartialOrd for ExtDist<W> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }

    #[inline]
    fn lt(&self, other: &Self) -> bool {
        self.0 < other.0
    }

    #[inline]
    fn le(&self, other: &Self) -> bool {
        self.0 <= other.0
    }

    #[inline]
    fn gt(&self, other: &Self) -> bool {
        self.0 > other.0
    }

    #[inline]
    fn ge(&self, other: &Self) -> bool {
        self.0 >= other.0
    }
}

impl<W: Weight> Ord for ExtDist<W> {
    #[inline]
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl<W: Weight> From<W> for ExtDist<W> {
    fn from(value: W) -> Self {
        ExtDist::finite(value)
    }
}

impl<W: Weight> Display for ExtDist<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => f.write_str("inf"),
        }
    }
}

impl<W: Weight> Debug for ExtDist<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl<W: Weight> FromStr for ExtDist<W> {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            return Ok(ExtDist::inf());
        }
        match s.parse::<W>() {
            Ok(v) if v != W::max_value() => Ok(ExtDist(v)),
            _ => Err(format!("invalid distance {s:?}")),
        }
    }
}

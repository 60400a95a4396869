use std::fmt;
use std::ops::Add;

/// A path length that may be infinite (no path exists).
///
/// `Finite` orders before `Infinite`, and addition saturates at `Infinite`,
/// so minima and sums over unreachable vertices stay total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(u32),
    Infinite,
}

impl Dist {
    pub const ZERO: Dist = Dist::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Infinite => None,
        }
    }

    pub fn at_most(self, bound: u32) -> bool {
        self <= Dist::Finite(bound)
    }
}

impl Add for Dist {
    type Output = Dist;

    fn add(self, rhs: Dist) -> Dist {
        match (self, rhs) {
            (Dist::Finite(a), Dist::Finite(b)) => {
                a.checked_add(b).map_or(Dist::Infinite, Dist::Finite)
            }
            _ => Dist::Infinite,
        }
    }
}

impl From<u32> for Dist {
    fn from(d: u32) -> Self {
        Dist::Finite(d)
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinite => f.write_str("∞"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_is_absorbing_and_largest() {
        assert_eq!(Dist::Finite(3) + Dist::Infinite, Dist::Infinite);
        assert_eq!(Dist::Infinite + Dist::ZERO, Dist::Infinite);
        assert_eq!(Dist::Finite(1) + Dist::Finite(1), Dist::Finite(2));
        assert!(Dist::Finite(u32::MAX) < Dist::Infinite);
        assert_eq!(Dist::Finite(u32::MAX) + Dist::Finite(1), Dist::Infinite);
        assert_eq!(Dist::Finite(4).min(Dist::Infinite), Dist::Finite(4));
    }

    #[test]
    fn display() {
        assert_eq!(Dist::Finite(2).to_string(), "2");
        assert_eq!(Dist::Infinite.to_string(), "∞");
    }
}

use std::fmt;

use serde::{Serialize, Serializer};

/// Minimal positive height; `Infinity` when no character of positive height
/// exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MinHeight {
    Finite(u32),
    Infinity,
}

impl MinHeight {
    /// Least positive key, or `Infinity`.
    pub fn from_heights<I: IntoIterator<Item = u32>>(heights: I) -> Self {
        heights
            .into_iter()
            .filter(|&h| h > 0)
            .min()
            .map_or(MinHeight::Infinity, MinHeight::Finite)
    }

    pub fn is_infinite(self) -> bool {
        self == MinHeight::Infinity
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            MinHeight::Finite(v) => Some(v),
            MinHeight::Infinity => None,
        }
    }

    /// Text-table rendering (`∞` for infinity).
    pub fn symbol(self) -> String {
        match self {
            MinHeight::Finite(v) => v.to_string(),
            MinHeight::Infinity => "∞".to_string(),
        }
    }
}

/// Renders as `infinity` in machine-readable output.
impl fmt::Display for MinHeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinHeight::Finite(v) => write!(f, "{v}"),
            MinHeight::Infinity => write!(f, "infinity"),
        }
    }
}

impl Serialize for MinHeight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            MinHeight::Finite(v) => s.serialize_u32(*v),
            MinHeight::Infinity => s.serialize_str("infinity"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_positive() {
        assert_eq!(MinHeight::from_heights([0, 3, 2, 0]), MinHeight::Finite(2));
        assert_eq!(MinHeight::from_heights([0, 0]), MinHeight::Infinity);
        assert!(MinHeight::Finite(100) < MinHeight::Infinity);
        assert_eq!(MinHeight::Infinity.to_string(), "infinity");
        assert_eq!(MinHeight::Infinity.symbol(), "∞");
    }
}

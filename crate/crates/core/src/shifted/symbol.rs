use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A letter of the alphabet `1' < 1 < 2' < 2 < ...`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MarkedSymbol {
    pub value: u32,
    pub marked: bool,
}

impl MarkedSymbol {
    pub fn unmarked(value: u32) -> Self {
        MarkedSymbol { value, marked: false }
    }

    pub fn marked(value: u32) -> Self {
        MarkedSymbol { value, marked: true }
    }

    /// Position in the alphabet: `1' -> 1`, `1 -> 2`, `2' -> 3`, ...
    fn rank(self) -> u32 {
        2 * self.value - u32::from(self.marked)
    }

    /// `i' -> i` and `i -> (i+1)'`.
    pub fn hat(self) -> Self {
        if self.marked {
            MarkedSymbol::unmarked(self.value)
        } else {
            MarkedSymbol::marked(self.value + 1)
        }
    }
}

impl Ord for MarkedSymbol {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for MarkedSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MarkedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.marked {
            write!(f, "{}'", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

impl fmt::Debug for MarkedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MarkedSymbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (digits, marked) = match s.strip_suffix('\'') {
            Some(d) => (d, true),
            None => (s, false),
        };
        match digits.parse::<u32>() {
            Ok(value) if value >= 1 => Ok(MarkedSymbol { value, marked }),
            _ => Err(Error::Parse {
                what: "marked symbol",
                token: s.to_string(),
            }),
        }
    }
}

/// `ŵ`: the reversed word with every letter hatted.
pub fn hat_word(word: &[MarkedSymbol]) -> Vec<MarkedSymbol> {
    word.iter().rev().map(|s| s.hat()).collect()
}

/// The two LRS conditions:
///
/// 1. in `w ŵ`, every letter of value `i >= 2` is preceded by strictly more
///    unmarked `i-1` than unmarked `i` (the condition is empty for `i = 1`);
/// 2. the last `i'` of `w`, if any, is followed in `w` by an unmarked `i`.
pub fn is_lrs_word(word: &[MarkedSymbol]) -> bool {
    let top = word.iter().map(|s| s.value).max().unwrap_or(0) as usize + 2;
    let mut unmarked = vec![0usize; top + 1];
    for s in word.iter().copied().chain(hat_word(word)) {
        let i = s.value as usize;
        if i >= 2 && unmarked[i - 1] <= unmarked[i] {
            return false;
        }
        if !s.marked {
            unmarked[i] += 1;
        }
    }
    // condition 2: scanning from the right, an i' is fine once an i was seen
    let mut seen_unmarked = vec![false; top + 1];
    let mut checked = vec![false; top + 1];
    for s in word.iter().rev() {
        let i = s.value as usize;
        if s.marked {
            if !checked[i] && !seen_unmarked[i] {
                return false;
            }
            checked[i] = true;
        } else {
            seen_unmarked[i] = true;
        }
    }
    true
}

/// Number of unmarked occurrences of each value, indexed by value.
pub fn unmarked_counts(word: &[MarkedSymbol]) -> Vec<usize> {
    let top = word.iter().map(|s| s.value).max().unwrap_or(0) as usize;
    let mut counts = vec![0; top + 2];
    for s in word.iter().filter(|s| !s.marked) {
        counts[s.value as usize] += 1;
    }
    counts
}

use std::fmt;
use std::str::FromStr;

use super::{bits_to_string, parse_bits, Bits};
use crate::error::ParseError;

/// An ultimately periodic infinite word `u·v·v·v…`.
///
/// Always canonical: the period is primitive and no trailing bit of the
/// prefix can be rotated into the period. Two values are equal exactly when
/// they denote the same infinite word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UpWord {
    prefix: Bits,
    period: Bits,
}

impl UpWord {
    /// Canonicalizes `prefix·period^ω`. Returns `None` when the period is
    /// empty.
    pub fn new(prefix: impl Into<Bits>, period: impl Into<Bits>) -> Option<Self> {
        let mut prefix = prefix.into();
        let mut period = period.into();
        if period.is_empty() {
            return None;
        }
        debug_assert!(prefix.iter().chain(&period).all(|&b| b <= 1));

        let root = primitive_root_len(&period);
        period.truncate(root);

        while let (Some(&p), Some(&v)) = (prefix.last(), period.last()) {
            if p != v {
                break;
            }
            prefix.pop();
            period.rotate_right(1);
        }
        Some(Self { prefix, period })
    }

    /// The constant word `b^ω`.
    pub fn constant(bit: u8) -> Self {
        Self {
            prefix: Vec::new(),
            period: vec![bit],
        }
    }

    pub fn prefix(&self) -> &[u8] {
        &self.prefix
    }

    pub fn period(&self) -> &[u8] {
        &self.period
    }

    pub fn bit(&self, i: usize) -> u8 {
        if i < self.prefix.len() {
            self.prefix[i]
        } else {
            self.period[(i - self.prefix.len()) % self.period.len()]
        }
    }

    /// The first `n` symbols.
    pub fn take(&self, n: usize) -> Bits {
        (0..n).map(|i| self.bit(i)).collect()
    }

    /// `bits·self`.
    pub fn prepend(&self, bits: &[u8]) -> Self {
        let mut prefix = bits.to_vec();
        prefix.extend_from_slice(&self.prefix);
        Self::new(prefix, self.period.clone()).expect("period is nonempty")
    }

    /// The word with its first `n` symbols removed.
    pub fn shift(&self, n: usize) -> Self {
        if n <= self.prefix.len() {
            return Self::new(self.prefix[n..].to_vec(), self.period.clone()).unwrap();
        }
        let mut period = self.period.clone();
        period.rotate_left((n - self.prefix.len()) % self.period.len());
        Self::new(Vec::new(), period).unwrap()
    }

    /// Length of a prefix long enough to distinguish `self` from `other`
    /// when they differ: `|u₁| + |u₂| + 2·lcm(|v₁|, |v₂|)`.
    pub fn comparison_horizon(&self, other: &Self) -> usize {
        let lcm = lcm(self.period.len(), other.period.len());
        self.prefix.len() + other.prefix.len() + 2 * lcm
    }
}

/// Length of the shortest `r` such that `word` is a power of `word[..r]`.
fn primitive_root_len(word: &[u8]) -> usize {
    let n = word.len();
    (1..=n)
        .find(|&r| n.is_multiple_of(r) && word.iter().enumerate().all(|(i, &b)| b == word[i % r]))
        .unwrap_or(n)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Lexicographic order of the denoted infinite words.
impl Ord for UpWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let n = self.comparison_horizon(other);
        (0..n)
            .map(|i| self.bit(i).cmp(&other.bit(i)))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    }
}

impl PartialOrd for UpWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for UpWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({})^w",
            bits_to_string(&self.prefix),
            bits_to_string(&self.period)
        )
    }
}

impl FromStr for UpWord {
    type Err = ParseError;

    /// Accepts `u(v)^w`, e.g. `110(0)^w` or `(10)^w`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let open = compact
            .find('(')
            .ok_or_else(|| ParseError::new(0, "expected `u(v)^w`"))?;
        let close = compact
            .find(')')
            .filter(|&c| c > open)
            .ok_or_else(|| ParseError::new(open, "missing ')'"))?;
        if &compact[close + 1..] != "^w" {
            return Err(ParseError::new(close + 1, "expected `^w` after the period"));
        }
        let prefix = parse_bits(&compact[..open])
            .ok_or_else(|| ParseError::new(0, "prefix must consist of 0/1"))?;
        let period = parse_bits(&compact[open + 1..close])
            .ok_or_else(|| ParseError::new(open + 1, "period must consist of 0/1"))?;
        Self::new(prefix, period).ok_or_else(|| ParseError::new(open + 1, "empty period"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> UpWord {
        s.parse().unwrap()
    }

    fn unfold(prefix: &[u8], period: &[u8], n: usize) -> Bits {
        (0..n)
            .map(|i| {
                if i < prefix.len() {
                    prefix[i]
                } else {
                    period[(i - prefix.len()) % period.len()]
                }
            })
            .collect()
    }

    #[test]
    fn canonicalize_examples() {
        let a = UpWord::new(vec![], vec![1, 1]).unwrap();
        assert_eq!((a.prefix(), a.period()), (&[][..], &[1][..]));

        let b = UpWord::new(vec![0, 1], vec![0, 1]).unwrap();
        assert_eq!((b.prefix(), b.period()), (&[][..], &[0, 1][..]));
        assert_eq!(b.take(12), unfold(&[0, 1], &[0, 1], 12));

        let c = UpWord::new(vec![1, 0], vec![1]).unwrap();
        assert_eq!((c.prefix(), c.period()), (&[1, 0][..], &[1][..]));
        assert_eq!(c.take(12), unfold(&[1, 0], &[1], 12));

        assert!(UpWord::new(vec![0], vec![]).is_none());
    }

    #[test]
    fn equality_examples() {
        assert_eq!(w("(1)^w"), w("1(1)^w"));
        assert_eq!(w("0(10)^w"), w("(01)^w"));
        assert_ne!(w("(0)^w"), w("(1)^w"));
    }

    #[test]
    fn bit_examples() {
        assert_eq!(w("(10)^w").bit(0), 1);
        assert_eq!(w("(10)^w").bit(3), 0);
        assert_eq!(w("110(0)^w").bit(2), 0);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("110(0)^w").to_string(), "11(0)^w");
        assert_eq!(w("10(1)^w").to_string(), "10(1)^w");
        assert_eq!(w(" (10)^w ").to_string(), "(10)^w");
        assert_eq!(w("0101(01)^w").to_string(), "(01)^w");
        assert!("110(0)".parse::<UpWord>().is_err());
        assert!("1(2)^w".parse::<UpWord>().is_err());
        assert!("1()^w".parse::<UpWord>().is_err());
    }

    #[test]
    fn shift_and_prepend() {
        let x = w("10(011)^w");
        for n in 0..10 {
            assert_eq!(x.shift(n).take(20), x.take(n + 20)[n..].to_vec());
        }
        assert_eq!(w("(0)^w").prepend(&[0, 0]), w("(0)^w"));
        assert_eq!(w("(0)^w").prepend(&[1, 0]), w("1(0)^w"));
    }

    fn bits(max: usize) -> impl Strategy<Value = Bits> {
        prop::collection::vec(0u8..=1, 0..max)
    }

    proptest! {
        #[test]
        fn canonical_form_preserves_the_word(u in bits(6), v in bits(6).prop_filter("nonempty", |v| !v.is_empty())) {
            let x = UpWord::new(u.clone(), v.clone()).unwrap();
            prop_assert_eq!(x.take(40), unfold(&u, &v, 40));
            let again = UpWord::new(x.prefix().to_vec(), x.period().to_vec()).unwrap();
            prop_assert_eq!(&again, &x);
        }

        #[test]
        fn equality_matches_unfolding(
            u1 in bits(5), v1 in bits(5).prop_filter("nonempty", |v| !v.is_empty()),
            u2 in bits(5), v2 in bits(5).prop_filter("nonempty", |v| !v.is_empty()),
        ) {
            let a = UpWord::new(u1, v1).unwrap();
            let b = UpWord::new(u2, v2).unwrap();
            let n = a.comparison_horizon(&b);
            prop_assert_eq!(a == b, a.take(n) == b.take(n));
            prop_assert_eq!(a.cmp(&b), a.take(n).cmp(&b.take(n)));
        }
    }
}

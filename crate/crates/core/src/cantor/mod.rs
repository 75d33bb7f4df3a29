//! Points of Cantor space (ultimately periodic words) and clopen sets.

mod clopen;
mod word;

pub use clopen::Clopen;
pub use word::UpWord;

/// A finite bit word; every entry is `0` or `1`.
pub type Bits = Vec<u8>;

pub fn bits_to_string(bits: &[u8]) -> String {
    bits.iter()
        .map(|&b| if b == 0 { '0' } else { '1' })
        .collect()
}

/// Parses a string of `0`/`1` characters.
pub fn parse_bits(s: &str) -> Option<Bits> {
    s.chars()
        .map(|c| match c {
            '0' => Some(0),
            '1' => Some(1),
            _ => None,
        })
        .collect()
}

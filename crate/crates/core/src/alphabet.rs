use std::fmt;

use crate::error::{Error, Result};

/// Characters with a meaning in the regex syntax or the automaton file format.
pub const RESERVED: &[char] = &[
    '∅', '0', 'ε', '1', '∪', '|', '+', '*', '(', ')', '~', '#', ':',
];

/// A non-empty, strictly ordered set of single-character letters.
///
/// Letters are addressed by their index in the ordering; every transition table in
/// the crate is laid out as `state * len + index`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = char>>(letters: I) -> Result<Self> {
        let mut letters: Vec<char> = letters.into_iter().collect();
        letters.sort_unstable();
        letters.dedup();
        if letters.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if let Some(&c) = letters
            .iter()
            .find(|c| c.is_whitespace() || RESERVED.contains(c))
        {
            return Err(Error::ReservedLetter(c));
        }
        Ok(Self { letters })
    }

    /// Parses `"abc"` or `"a b c"`.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(s.chars().filter(|c| !c.is_whitespace()))
    }

    /// The first `size` lowercase letters, `a`, `b`, ...
    pub fn first(size: usize) -> Self {
        assert!((1..=26).contains(&size), "alphabet size {size} out of range");
        Self {
            letters: ('a'..='z').take(size).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.letters.binary_search(&c).ok()
    }

    pub fn letter(&self, index: usize) -> char {
        self.letters[index]
    }

    pub fn contains(&self, c: char) -> bool {
        self.index_of(c).is_some()
    }

    pub fn is_subset_of(&self, other: &Alphabet) -> bool {
        self.letters.iter().all(|&c| other.contains(c))
    }

    pub fn union(&self, other: &Alphabet) -> Alphabet {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        letters.sort_unstable();
        letters.dedup();
        Alphabet { letters }
    }

    /// Converts a word to letter indices.
    pub fn encode(&self, word: &str) -> Result<Vec<usize>> {
        word.chars()
            .map(|c| self.index_of(c).ok_or(Error::ForeignLetter(c)))
            .collect()
    }

    pub fn decode(&self, word: &[usize]) -> String {
        word.iter().map(|&i| self.letters[i]).collect()
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_deduplicated() {
        let a = Alphabet::new("cabca".chars()).unwrap();
        assert_eq!(a.letters(), &['a', 'b', 'c']);
        assert_eq!(a.index_of('c'), Some(2));
        assert_eq!(a.index_of('d'), None);
    }

    #[test]
    fn rejects_empty_and_reserved() {
        assert_eq!(Alphabet::parse("  "), Err(Error::EmptyAlphabet));
        assert_eq!(Alphabet::parse("a*"), Err(Error::ReservedLetter('*')));
        assert_eq!(Alphabet::parse("a~"), Err(Error::ReservedLetter('~')));
    }

    #[test]
    fn encode_reports_foreign_letter() {
        let a = Alphabet::first(2);
        assert_eq!(a.encode("abba").unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(a.encode("abc"), Err(Error::ForeignLetter('c')));
    }
}

//! Canonical language values.

use std::fmt;

use crate::alphabet::Alphabet;
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::nfa::Nfa;
use crate::regex::Regex;

/// A regular language, held as its quotient automaton in canonical numbering.
///
/// Two languages over the same alphabet are equal iff their machines are
/// identical, so `==` is language equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Language {
    dfa: Dfa,
}

impl Language {
    pub fn from_dfa(dfa: &Dfa) -> Language {
        Language {
            dfa: dfa.minimize().bfs_renumber(),
        }
    }

    /// Wraps a machine that is already minimal and canonically numbered.
    pub(crate) fn from_canonical(dfa: Dfa) -> Language {
        debug_assert!(dfa.is_canonical_numbering());
        Language { dfa }
    }

    pub fn from_nfa(nfa: &Nfa) -> Language {
        Language::from_dfa(&nfa.determinize())
    }

    pub fn from_regex(expr: &Regex, alphabet: &Alphabet) -> Result<Language> {
        Ok(Language::from_nfa(&expr.to_nfa(alphabet)?))
    }

    /// Parses `expr` and builds its language over `alphabet`.
    pub fn parse(expr: &str, alphabet: &Alphabet) -> Result<Language> {
        Language::from_regex(&Regex::parse(expr)?, alphabet)
    }

    /// Like [`Language::parse`], with the alphabet taken from the letters used.
    pub fn parse_inferred(expr: &str) -> Result<Language> {
        let regex = Regex::parse(expr)?;
        let alphabet = Alphabet::new(regex.letters())?;
        Language::from_regex(&regex, &alphabet)
    }

    pub fn empty(alphabet: &Alphabet) -> Language {
        Language {
            dfa: Dfa::from_fn(alphabet.clone(), 1, 0, |_, _| 0, |_| false),
        }
    }

    pub fn universal(alphabet: &Alphabet) -> Language {
        Language {
            dfa: Dfa::from_fn(alphabet.clone(), 1, 0, |_, _| 0, |_| true),
        }
    }

    /// The language `{ε}`.
    pub fn epsilon(alphabet: &Alphabet) -> Language {
        Language {
            dfa: Dfa::from_fn(alphabet.clone(), 2, 0, |_, _| 1, |q| q == 0),
        }
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn into_dfa(self) -> Dfa {
        self.dfa
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.dfa.alphabet()
    }

    /// Number of distinct quotients, counting the empty quotient when present.
    pub fn complexity(&self) -> usize {
        self.dfa.states()
    }

    pub fn contains(&self, word: &str) -> Result<bool> {
        self.dfa.accepts(word)
    }

    pub fn contains_indices(&self, word: &[usize]) -> bool {
        self.dfa.accepts_indices(word)
    }

    pub fn is_empty(&self) -> bool {
        self.dfa.states() == 1 && !self.dfa.is_final(0)
    }

    pub fn is_universal(&self) -> bool {
        self.dfa.states() == 1 && self.dfa.is_final(0)
    }

    pub fn contains_epsilon(&self) -> bool {
        self.dfa.is_final(0)
    }

    /// The empty quotient's state, if the language has one.
    pub fn empty_quotient(&self) -> Option<usize> {
        let live = self.dfa.live();
        live.iter().position(|&l| !l)
    }

    pub fn has_empty_quotient(&self) -> bool {
        self.empty_quotient().is_some()
    }

    pub fn is_equivalent(&self, other: &Language) -> Result<bool> {
        if self.alphabet() != other.alphabet() {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet().to_string(),
                right: other.alphabet().to_string(),
            });
        }
        Ok(self == other)
    }

    /// Same words over a larger alphabet.
    pub fn widen(&self, alphabet: &Alphabet) -> Result<Language> {
        if alphabet == self.alphabet() {
            return Ok(self.clone());
        }
        Ok(Language::from_dfa(&self.dfa.widen(alphabet)?))
    }

    /// Brings two languages onto the union of their alphabets.
    pub fn align(k: &Language, l: &Language) -> (Language, Language) {
        if k.alphabet() == l.alphabet() {
            return (k.clone(), l.clone());
        }
        let sigma = k.alphabet().union(l.alphabet());
        (
            k.widen(&sigma).expect("superset alphabet"),
            l.widen(&sigma).expect("superset alphabet"),
        )
    }
}

impl fmt::Debug for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Language(kappa={}, alphabet={}, table={:?}, finals={:?})",
            self.complexity(),
            self.alphabet(),
            self.dfa.table(),
            self.dfa.finals()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::first(2)
    }

    #[test]
    fn star_of_optional_a_then_b() {
        let l = Language::parse("(ε∪a)*b", &ab()).unwrap();
        assert_eq!(l.complexity(), 3);
        assert_eq!(l, Language::parse("a*b", &ab()).unwrap());
        assert_eq!(l, Language::parse("(ε∪a a*)b", &ab()).unwrap());
        assert!(l.contains("aab").unwrap());
        assert!(!l.contains("aba").unwrap());
    }

    #[test]
    fn constants_have_complexity_one() {
        let a = Alphabet::first(1);
        assert_eq!(Language::parse("∅", &a).unwrap().complexity(), 1);
        assert_eq!(Language::parse("a*", &a).unwrap().complexity(), 1);
        assert!(Language::parse("∅", &a).unwrap().is_empty());
        assert!(!Language::empty(&a).contains("").unwrap());
    }

    #[test]
    fn suffix_star_family_instance() {
        assert_eq!(Language::parse("(a∪baa)*", &ab()).unwrap().complexity(), 4);
    }

    #[test]
    fn finite_unary_range() {
        let l = Language::parse("ε∪a∪aa∪aaa", &Alphabet::first(1)).unwrap();
        assert_eq!(l.complexity(), 5);
        let m = Language::parse("ε∪a∪aa", &ab()).unwrap();
        assert!(m.contains("aa").unwrap());
        assert!(!m.contains("aaa").unwrap());
    }

    #[test]
    fn membership_rejects_foreign_letter() {
        let l = Language::parse("a*b", &ab()).unwrap();
        assert_eq!(l.contains("abc"), Err(Error::ForeignLetter('c')));
    }

    #[test]
    fn equivalence_needs_common_alphabet() {
        let a = Language::parse("a*", &Alphabet::first(1)).unwrap();
        let b = Language::parse("a*", &ab()).unwrap();
        assert!(matches!(
            a.is_equivalent(&b),
            Err(Error::AlphabetMismatch { .. })
        ));
        let aa = Language::parse("(aa)*", &Alphabet::first(1)).unwrap();
        assert!(!a.is_equivalent(&aa).unwrap());
    }

    #[test]
    fn widening() {
        let unary = Alphabet::first(1);
        let full = Language::universal(&unary).widen(&ab()).unwrap();
        assert_eq!(full.complexity(), 2);
        assert_eq!(full, Language::parse("a*", &ab()).unwrap());
        assert_eq!(Language::empty(&unary).widen(&ab()).unwrap().complexity(), 1);
        let range = Language::parse("ε∪a∪aa", &unary).unwrap();
        assert_eq!(range.complexity(), 4);
        assert_eq!(range.widen(&ab()).unwrap().complexity(), 4);
        assert!(matches!(
            Language::universal(&ab()).widen(&unary),
            Err(Error::ShrinkingAlphabet { .. })
        ));
    }

    #[test]
    fn regex_inferred_alphabet() {
        let l = Language::parse_inferred("(a∪baa)*").unwrap();
        assert_eq!(l.alphabet().letters(), &['a', 'b']);
        assert!(Language::parse_inferred("ε").is_err());
    }
}

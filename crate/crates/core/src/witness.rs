//! Parameterized witness languages that attain the complexity bounds.
//!
//! Every generator checks its own output on construction: the complexity must be
//! the requested parameter and the language must be closed of the claimed kind.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::alphabet::Alphabet;
use crate::closure::{is_closed, ClosureKind};
use crate::dfa::Dfa;
use crate::language::Language;
use crate::ops;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessFamily {
    /// `{aⁱ : i ≤ n−2}` over `{a,b}`.
    ClosurePrefix { n: usize },
    /// Quotient automaton without an empty quotient whose suffix closure is maximal.
    Fig1 { n: usize },
    /// Quotient automaton with an empty quotient; maximal suffix and factor closure.
    Fig2 { n: usize },
    /// Words over `n−2` letters in which the first letter occurs exactly once.
    ClosureSubword { n: usize },
    ProductPrefixPair { m: usize, n: usize },
    ProductSuffixPair { m: usize, n: usize },
    ProductSubwordPair { m: usize, n: usize },
    StarPrefix { n: usize },
    /// `(a ∪ baⁿ⁻²)*`, a suffix-closed language equal to its own star.
    StarSuffixEq { n: usize },
    /// `ε ∪ ⋃_{i ≤ n−3} aⁱb`, suffix-closed and different from its star.
    StarSuffixNeq { n: usize },
    StarSubword { n: usize },
    KuratowskiPrefix { n: usize },
    KuratowskiSuffix { n: usize },
    KuratowskiSubword { n: usize },
    /// `{aⁱ : i ≤ n−2}` over `{a}`.
    UnaryClosed { n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Single(Language),
    Pair(Language, Language),
}

impl Witness {
    pub fn single(self) -> Option<Language> {
        match self {
            Witness::Single(l) => Some(l),
            Witness::Pair(..) => None,
        }
    }

    pub fn pair(self) -> Option<(Language, Language)> {
        match self {
            Witness::Pair(k, l) => Some((k, l)),
            Witness::Single(_) => None,
        }
    }

    pub fn languages(&self) -> Vec<&Language> {
        match self {
            Witness::Single(l) => vec![l],
            Witness::Pair(k, l) => vec![k, l],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("{family}: parameter {param}={value} outside {min}..={max}")]
    OutOfRange {
        family: &'static str,
        param: char,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("{family}: self-check failed: {detail}")]
    SelfCheck { family: &'static str, detail: String },
    #[error("unknown witness family {0:?}")]
    UnknownFamily(String),
}

const NAMES: [&str; 15] = [
    "closure-prefix",
    "fig1",
    "fig2",
    "closure-subword",
    "product-prefix-pair",
    "product-suffix-pair",
    "product-subword-pair",
    "star-prefix",
    "star-suffix-eq",
    "star-suffix-neq",
    "star-subword",
    "kuratowski-prefix",
    "kuratowski-suffix",
    "kuratowski-subword",
    "unary-closed",
];

impl WitnessFamily {
    pub fn names() -> &'static [&'static str] {
        &NAMES
    }

    /// Looks a family up by name; `m` is only consulted by the pair families.
    pub fn from_name(name: &str, m: usize, n: usize) -> Result<Self, WitnessError> {
        use WitnessFamily::*;
        Ok(match name {
            "closure-prefix" => ClosurePrefix { n },
            "fig1" => Fig1 { n },
            "fig2" => Fig2 { n },
            "closure-subword" => ClosureSubword { n },
            "product-prefix-pair" => ProductPrefixPair { m, n },
            "product-suffix-pair" => ProductSuffixPair { m, n },
            "product-subword-pair" => ProductSubwordPair { m, n },
            "star-prefix" => StarPrefix { n },
            "star-suffix-eq" => StarSuffixEq { n },
            "star-suffix-neq" => StarSuffixNeq { n },
            "star-subword" => StarSubword { n },
            "kuratowski-prefix" => KuratowskiPrefix { n },
            "kuratowski-suffix" => KuratowskiSuffix { n },
            "kuratowski-subword" => KuratowskiSubword { n },
            "unary-closed" => UnaryClosed { n },
            other => return Err(WitnessError::UnknownFamily(other.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        use WitnessFamily::*;
        let i = match self {
            ClosurePrefix { .. } => 0,
            Fig1 { .. } => 1,
            Fig2 { .. } => 2,
            ClosureSubword { .. } => 3,
            ProductPrefixPair { .. } => 4,
            ProductSuffixPair { .. } => 5,
            ProductSubwordPair { .. } => 6,
            StarPrefix { .. } => 7,
            StarSuffixEq { .. } => 8,
            StarSuffixNeq { .. } => 9,
            StarSubword { .. } => 10,
            KuratowskiPrefix { .. } => 11,
            KuratowskiSuffix { .. } => 12,
            KuratowskiSubword { .. } => 13,
            UnaryClosed { .. } => 14,
        };
        NAMES[i]
    }

    pub fn is_pair(&self) -> bool {
        matches!(
            self,
            WitnessFamily::ProductPrefixPair { .. }
                | WitnessFamily::ProductSuffixPair { .. }
                | WitnessFamily::ProductSubwordPair { .. }
        )
    }

    /// `(m, n)`; `m` is `None` for single-language families.
    pub fn params(&self) -> (Option<usize>, usize) {
        use WitnessFamily::*;
        match *self {
            ProductPrefixPair { m, n } | ProductSuffixPair { m, n } | ProductSubwordPair { m, n } => {
                (Some(m), n)
            }
            ClosurePrefix { n }
            | Fig1 { n }
            | Fig2 { n }
            | ClosureSubword { n }
            | StarPrefix { n }
            | StarSuffixEq { n }
            | StarSuffixNeq { n }
            | StarSubword { n }
            | KuratowskiPrefix { n }
            | KuratowskiSuffix { n }
            | KuratowskiSubword { n }
            | UnaryClosed { n } => (None, n),
        }
    }

    /// Admissible range of `n` (and of `m` for pairs).
    pub fn range(&self) -> (usize, usize) {
        use WitnessFamily::*;
        match self {
            ClosureSubword { .. } => (2, 28),
            StarPrefix { .. } | StarSuffixEq { .. } | StarSuffixNeq { .. } => (3, 64),
            KuratowskiPrefix { .. } | KuratowskiSubword { .. } => (3, 64),
            KuratowskiSuffix { .. } => (4, 64),
            UnaryClosed { .. } => (1, 64),
            _ => (2, 64),
        }
    }

    /// The closedness class the family claims, if any.
    pub fn claimed_kind(&self) -> Option<ClosureKind> {
        use WitnessFamily::*;
        match self {
            Fig1 { .. } | Fig2 { .. } | ClosureSubword { .. } => None,
            ClosurePrefix { .. } | ProductPrefixPair { .. } | StarPrefix { .. } => {
                Some(ClosureKind::Prefix)
            }
            KuratowskiPrefix { .. } | UnaryClosed { .. } => Some(ClosureKind::Prefix),
            ProductSuffixPair { .. } | StarSuffixEq { .. } | StarSuffixNeq { .. } => {
                Some(ClosureKind::Suffix)
            }
            KuratowskiSuffix { .. } => Some(ClosureKind::Suffix),
            ProductSubwordPair { .. } | StarSubword { .. } | KuratowskiSubword { .. } => {
                Some(ClosureKind::Subword)
            }
        }
    }

    fn check_range(&self) -> Result<(), WitnessError> {
        let (min, max) = self.range();
        let (m, n) = self.params();
        for (param, value) in [('m', m), ('n', Some(n))] {
            if let Some(value) = value {
                if !(min..=max).contains(&value) {
                    return Err(WitnessError::OutOfRange {
                        family: self.name(),
                        param,
                        value,
                        min,
                        max,
                    });
                }
            }
        }
        Ok(())
    }

    /// Builds the witness and verifies its complexity and closedness.
    pub fn build(&self) -> Result<Witness, WitnessError> {
        self.check_range()?;
        let witness = self.construct();
        self.verify(&witness)?;
        Ok(witness)
    }

    fn construct(&self) -> Witness {
        use WitnessFamily::*;
        match *self {
            ClosurePrefix { n } | StarSubword { n } => {
                Witness::Single(bounded_count(Alphabet::first(2), 0, n - 2, None))
            }
            Fig1 { n } => Witness::Single(fig1(n)),
            Fig2 { n } => Witness::Single(fig2(n)),
            ClosureSubword { n } => Witness::Single(first_letter_once(n)),
            ProductPrefixPair { m, n } => {
                let (k, l) = product_prefix_pair(m, n);
                Witness::Pair(k, l)
            }
            ProductSuffixPair { m, n } => Witness::Pair(suffix_left(m), suffix_right(n)),
            ProductSubwordPair { m, n } => Witness::Pair(
                bounded_count(Alphabet::first(2), 0, m - 2, Some(1)),
                bounded_count(Alphabet::first(2), 1, n - 2, Some(0)),
            ),
            StarPrefix { n } => Witness::Single(star_prefix(n, false)),
            StarSuffixEq { n } => Witness::Single(regex(&format!("(a∪b{})*", "a".repeat(n - 2)))),
            StarSuffixNeq { n } => {
                let terms: Vec<String> = (0..=n - 3).map(|i| format!("{}b", "a".repeat(i))).collect();
                Witness::Single(regex(&format!("ε∪{}", terms.join("∪"))))
            }
            KuratowskiPrefix { n } => Witness::Single(star_prefix(n, true)),
            KuratowskiSuffix { n } => {
                let terms: Vec<String> = (1..=n - 3).map(|i| format!("b*{}b", "a".repeat(i))).collect();
                Witness::Single(regex(&format!("b*∪{}", terms.join("∪"))))
            }
            KuratowskiSubword { n } => Witness::Single(b_star_a_range(n)),
            UnaryClosed { n } => Witness::Single(if n == 1 {
                Language::empty(&Alphabet::first(1))
            } else {
                bounded_count(Alphabet::first(1), 0, n - 2, None)
            }),
        }
    }

    fn verify(&self, witness: &Witness) -> Result<(), WitnessError> {
        let fail = |detail: String| WitnessError::SelfCheck {
            family: self.name(),
            detail,
        };
        let (m, n) = self.params();
        let expected: Vec<usize> = match witness {
            Witness::Single(_) => vec![n],
            Witness::Pair(..) => vec![m.expect("pair families carry m"), n],
        };
        for (l, want) in witness.languages().into_iter().zip(expected) {
            if l.complexity() != want {
                return Err(fail(format!("complexity {} instead of {want}", l.complexity())));
            }
            if let Some(kind) = self.claimed_kind() {
                if !is_closed(kind, l) {
                    return Err(fail(format!("not {kind}-closed")));
                }
            }
        }
        use WitnessFamily::*;
        match (self, witness) {
            (Fig1 { .. }, Witness::Single(l)) if l.has_empty_quotient() => {
                Err(fail("has an empty quotient".into()))
            }
            (Fig2 { .. }, Witness::Single(l)) if !l.has_empty_quotient() => {
                Err(fail("has no empty quotient".into()))
            }
            (StarSuffixEq { .. }, Witness::Single(l)) if ops::star(l) != *l => {
                Err(fail("language differs from its star".into()))
            }
            (StarSuffixNeq { .. }, Witness::Single(l)) if ops::star(l) == *l => {
                Err(fail("language equals its star".into()))
            }
            (ProductSuffixPair { .. }, Witness::Pair(k, _))
                if ops::accepting_quotient_count(k) != 1 =>
            {
                Err(fail("left operand must have one accepting quotient".into()))
            }
            (KuratowskiPrefix { .. } | KuratowskiSuffix { .. } | KuratowskiSubword { .. }, Witness::Single(l)) => {
                let size = crate::kuratowski::orbit(l, crate::kuratowski::Generator::Star).len();
                if size == 8 {
                    Ok(())
                } else {
                    Err(fail(format!("star/complement orbit has {size} elements, not 8")))
                }
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for WitnessFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.params() {
            (Some(m), n) => write!(f, "{}(m={m}, n={n})", self.name()),
            (None, n) => write!(f, "{}(n={n})", self.name()),
        }
    }
}

impl FromStr for WitnessFamily {
    type Err = WitnessError;

    /// Accepts `name:n` or `name:m:n`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| t.parse::<usize>().map_err(|_| WitnessError::UnknownFamily(s.to_string()));
        match parts[..] {
            [name, n] => WitnessFamily::from_name(name, 0, num(n)?),
            [name, m, n] => WitnessFamily::from_name(name, num(m)?, num(n)?),
            _ => Err(WitnessError::UnknownFamily(s.to_string())),
        }
    }
}

fn regex(expr: &str) -> Language {
    Language::parse(expr, &Alphabet::first(2)).expect("generator regex is well formed")
}

/// Words with at most `limit` occurrences of `counted`; `free` letters (if any)
/// loop, all other letters go to the sink. States `0..=limit` accept.
fn bounded_count(alphabet: Alphabet, counted: usize, limit: usize, free: Option<usize>) -> Language {
    let sink = limit + 1;
    let dfa = Dfa::from_fn(
        alphabet,
        limit + 2,
        0,
        |q, a| match q {
            q if q == sink => sink,
            q if a == counted => q + 1,
            q if Some(a) == free => q,
            _ => sink,
        },
        |q| q < sink,
    );
    Language::from_dfa(&dfa)
}

fn fig1(n: usize) -> Language {
    let dfa = Dfa::from_fn(
        Alphabet::first(2),
        n,
        0,
        |q, a| match (a, q) {
            (0, q) => (q + 1) % n,
            (_, 0 | 1) => 0,
            (_, q) => q,
        },
        |q| q == 0,
    );
    Language::from_dfa(&dfa)
}

fn fig2(n: usize) -> Language {
    let sink = n - 1;
    let dfa = Dfa::from_fn(
        Alphabet::first(2),
        n,
        0,
        |q, a| match (a, q) {
            (_, q) if q == sink => sink,
            (0, q) => (q + 1) % (n - 1),
            (_, 0) => sink,
            (_, 1) => 0,
            (_, q) => q,
        },
        |q| q == 0,
    );
    Language::from_dfa(&dfa)
}

fn first_letter_once(n: usize) -> Language {
    if n == 2 {
        return regex("a*");
    }
    let letters = n - 2;
    // state 0 initial, 1..=letters remembers the first letter, letters+1 sink
    let sink = letters + 1;
    let dfa = Dfa::from_fn(
        Alphabet::first(letters),
        n,
        0,
        |q, a| match q {
            0 => a + 1,
            q if q == sink || q == a + 1 => sink,
            q => q,
        },
        |q| q != 0 && q != sink,
    );
    Language::from_dfa(&dfa)
}

fn product_prefix_pair(m: usize, n: usize) -> (Language, Language) {
    let abc = Alphabet::first(3);
    let ksink = m - 1;
    let k = Dfa::from_fn(
        abc.clone(),
        m,
        0,
        |q, a| match (q, a) {
            (q, _) if q == ksink => ksink,
            (q, 2) => q + 1,
            (q, _) => q,
        },
        |q| q < ksink,
    );
    let lsink = n - 1;
    let l = Dfa::from_fn(
        abc,
        n,
        0,
        |q, a| match (q, a) {
            (q, _) if q == lsink => lsink,
            (q, 0) => (q + 1) % (n - 1),
            (0, 1) if n == 2 => lsink,
            (0, 1) => 0,
            (q, 1) => q + 1,
            (q, _) => q,
        },
        |q| q < lsink,
    );
    (Language::from_dfa(&k), Language::from_dfa(&l))
}

/// Words whose `c`-free blocks hold at most `m−2` letters `a`, the last block
/// holding none. `a` counts, `b` loops and `c` returns to the only accepting state.
fn suffix_left(m: usize) -> Language {
    let sink = m - 1;
    let dfa = Dfa::from_fn(
        Alphabet::first(3),
        m,
        0,
        |q, a| match (q, a) {
            (q, _) if q == sink => sink,
            (q, 0) => q + 1,
            (q, 1) => q,
            _ => 0,
        },
        |q| q == 0,
    );
    Language::from_dfa(&dfa)
}

/// Words over `{a,b,c}` without the factor `bⁿ⁻¹`.
fn suffix_right(n: usize) -> Language {
    let sink = n - 1;
    let dfa = Dfa::from_fn(
        Alphabet::first(3),
        n,
        0,
        |q, a| match (q, a) {
            (q, _) if q == sink => sink,
            (q, 1) => q + 1,
            _ => 0,
        },
        |q| q < sink,
    );
    Language::from_dfa(&dfa)
}

/// The prefix-closed star witness over `{a,b,c}`; with `loop_d`, an extra letter
/// `d` loops on every state.
fn star_prefix(n: usize, loop_d: bool) -> Language {
    let sink = n - 1;
    let alphabet = Alphabet::first(if loop_d { 4 } else { 3 });
    let dfa = Dfa::from_fn(
        alphabet,
        n,
        0,
        |q, a| match (q, a) {
            (q, 3) => q,
            (q, _) if q == sink => sink,
            (q, 0) if q + 2 < n => q + 1,
            (q, 1) if (1..=n.saturating_sub(3)).contains(&q) => q + 1,
            (q, 2) if q == n - 2 => 1,
            _ => sink,
        },
        |q| q < sink,
    );
    Language::from_dfa(&dfa)
}

/// `{ b^j a^i : i ≤ n−2 }` over `{a,b,c}`.
fn b_star_a_range(n: usize) -> Language {
    let sink = n - 1;
    let dfa = Dfa::from_fn(
        Alphabet::first(3),
        n,
        0,
        |q, a| match (q, a) {
            (q, _) if q == sink => sink,
            (0, 1) => 0,
            (q, 0) => q + 1,
            _ => sink,
        },
        |q| q < sink,
    );
    Language::from_dfa(&dfa)
}

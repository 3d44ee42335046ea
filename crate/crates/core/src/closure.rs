//! Prefix, suffix, factor and subword closures, closedness and ideal tests.
//!
//! All four constructions start from the quotient automaton and work on its
//! non-empty states, the states whose right language is not empty.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::language::Language;
use crate::nfa::Nfa;
use crate::ops;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosureKind {
    Prefix,
    Suffix,
    Factor,
    Subword,
}

impl ClosureKind {
    pub const ALL: [ClosureKind; 4] = [
        ClosureKind::Prefix,
        ClosureKind::Suffix,
        ClosureKind::Factor,
        ClosureKind::Subword,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosureKind::Prefix => "prefix",
            ClosureKind::Suffix => "suffix",
            ClosureKind::Factor => "factor",
            ClosureKind::Subword => "subword",
        }
    }

    /// The ideal class whose complements are closed languages of this kind.
    pub fn ideal_name(self) -> &'static str {
        match self {
            ClosureKind::Prefix => "right",
            ClosureKind::Suffix => "left",
            ClosureKind::Factor => "two-sided",
            ClosureKind::Subword => "all-sided",
        }
    }

    /// Is `x` below `w` in this order? Letters are compared as indices.
    pub fn relates(self, x: &[usize], w: &[usize]) -> bool {
        match self {
            ClosureKind::Prefix => w.starts_with(x),
            ClosureKind::Suffix => w.ends_with(x),
            ClosureKind::Factor => x.is_empty() || w.windows(x.len()).any(|win| win == x),
            ClosureKind::Subword => {
                let mut rest = w.iter();
                x.iter().all(|c| rest.any(|d| d == c))
            }
        }
    }
}

impl fmt::Display for ClosureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosureKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        ClosureKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown closure kind {s:?}"))
    }
}

/// The downward closure of `l` under the order selected by `kind`.
pub fn closure(kind: ClosureKind, l: &Language) -> Language {
    let dfa = l.dfa();
    let live = dfa.live();
    if !live.iter().any(|&x| x) {
        return l.clone();
    }
    if kind == ClosureKind::Prefix {
        return Language::from_dfa(&dfa.with_finals(live));
    }
    if kind == ClosureKind::Subword && live.iter().all(|&x| x) {
        return Language::universal(l.alphabet());
    }

    // automaton restricted to the non-empty states
    let mut index = vec![usize::MAX; dfa.states()];
    let kept: Vec<usize> = (0..dfa.states()).filter(|&q| live[q]).collect();
    for (i, &q) in kept.iter().enumerate() {
        index[q] = i;
    }
    let letters = dfa.alphabet().len();
    let subword = kind == ClosureKind::Subword;
    let mut nfa = Nfa::new(dfa.alphabet().clone(), kept.len(), subword);
    for (i, &q) in kept.iter().enumerate() {
        for a in 0..letters {
            let p = dfa.next(q, a);
            if live[p] {
                nfa.add_edge(i, a, index[p]);
                if subword {
                    nfa.add_epsilon(i, index[p]).expect("epsilon enabled");
                }
            }
        }
        let every = matches!(kind, ClosureKind::Suffix | ClosureKind::Factor);
        if every || q == dfa.initial() {
            nfa.set_initial(i);
        }
        if kind == ClosureKind::Factor || dfa.is_final(q) {
            nfa.set_final(i);
        }
    }
    Language::from_nfa(&nfa)
}

pub fn is_closed(kind: ClosureKind, l: &Language) -> bool {
    closure(kind, l) == *l
}

/// Prefix-closedness read directly off the quotient automaton: every non-empty
/// quotient must be accepting.
pub fn is_prefix_closed_fast(l: &Language) -> bool {
    let dfa = l.dfa();
    dfa.live()
        .iter()
        .enumerate()
        .all(|(q, &live)| !live || dfa.is_final(q))
}

/// Right, left, two-sided or all-sided ideal test through the complement.
pub fn is_ideal(kind: ClosureKind, l: &Language) -> bool {
    is_closed(kind, &ops::complement(l))
}

/// Kinds under which `l` is closed, in declaration order.
pub fn closed_kinds(l: &Language) -> Vec<ClosureKind> {
    ClosureKind::ALL
        .into_iter()
        .filter(|&k| is_closed(k, l))
        .collect()
}

/// Shape of a closed language over a one-letter alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnaryClosed {
    Empty,
    Full,
    /// `{aⁱ : i ≤ n−2}` with `n` the complexity.
    FiniteRange { n: usize },
}

pub fn classify_unary_closed(l: &Language) -> Result<UnaryClosed> {
    if l.alphabet().len() != 1 {
        return Err(Error::NotUnary);
    }
    let verdicts: Vec<bool> = ClosureKind::ALL.iter().map(|&k| is_closed(k, l)).collect();
    assert!(
        verdicts.iter().all(|&v| v == verdicts[0]),
        "closure kinds disagree on a unary language"
    );
    if !verdicts[0] {
        return Err(Error::NotClosed);
    }
    Ok(if l.is_empty() {
        UnaryClosed::Empty
    } else if l.is_universal() {
        UnaryClosed::Full
    } else {
        UnaryClosed::FiniteRange { n: l.complexity() }
    })
}

//! Regular expressions over union, product and star.
//!
//! Textual syntax: `∅` or `0` for the empty set, `ε` or `1` for the empty word,
//! single-character letters, `∪`, `|` or `+` for union, juxtaposition for product,
//! postfix `*`, and parentheses. Star binds tighter than product, product tighter
//! than union. Whitespace is ignored.

use std::fmt;

use crate::alphabet::Alphabet;
use crate::error::{Error, RegexError, Result};
use crate::nfa::Nfa;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Regex {
    Empty,
    Epsilon,
    Letter(char),
    Union(Box<Regex>, Box<Regex>),
    Product(Box<Regex>, Box<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    pub fn parse(input: &str) -> Result<Regex, RegexError> {
        let chars: Vec<(usize, char)> = input
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .collect();
        let mut parser = Parser {
            chars,
            pos: 0,
            end: input.chars().count(),
        };
        let expr = parser.union()?;
        match parser.peek() {
            None => Ok(expr),
            Some((at, c)) => Err(RegexError {
                position: at,
                message: format!("unexpected {c:?}"),
            }),
        }
    }

    pub fn union(self, other: Regex) -> Regex {
        Regex::Union(Box::new(self), Box::new(other))
    }

    pub fn then(self, other: Regex) -> Regex {
        Regex::Product(Box::new(self), Box::new(other))
    }

    pub fn star(self) -> Regex {
        Regex::Star(Box::new(self))
    }

    pub fn word(w: &str) -> Regex {
        w.chars()
            .map(Regex::Letter)
            .reduce(Regex::then)
            .unwrap_or(Regex::Epsilon)
    }

    /// Letters occurring in the expression, in order of first appearance.
    pub fn letters(&self) -> Vec<char> {
        let mut out = Vec::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut Vec<char>) {
        match self {
            Regex::Letter(c) if !out.contains(c) => out.push(*c),
            Regex::Union(l, r) | Regex::Product(l, r) => {
                l.collect_letters(out);
                r.collect_letters(out);
            }
            Regex::Star(e) => e.collect_letters(out),
            _ => {}
        }
    }

    /// Thompson-style ε-automaton; returns it with a single initial and final state.
    pub fn to_nfa(&self, alphabet: &Alphabet) -> Result<Nfa> {
        let mut nfa = Nfa::new(alphabet.clone(), 0, true);
        let (start, end) = self.build(&mut nfa, alphabet)?;
        nfa.set_initial(start);
        nfa.set_final(end);
        Ok(nfa)
    }

    fn build(&self, nfa: &mut Nfa, alphabet: &Alphabet) -> Result<(usize, usize)> {
        let start = nfa.add_state();
        let end = nfa.add_state();
        match self {
            Regex::Empty => {}
            Regex::Epsilon => nfa.add_epsilon(start, end)?,
            Regex::Letter(c) => {
                let a = alphabet.index_of(*c).ok_or(Error::ForeignLetter(*c))?;
                nfa.add_edge(start, a, end);
            }
            Regex::Union(l, r) => {
                for e in [l, r] {
                    let (s, t) = e.build(nfa, alphabet)?;
                    nfa.add_epsilon(start, s)?;
                    nfa.add_epsilon(t, end)?;
                }
            }
            Regex::Product(l, r) => {
                let (s1, t1) = l.build(nfa, alphabet)?;
                let (s2, t2) = r.build(nfa, alphabet)?;
                nfa.add_epsilon(start, s1)?;
                nfa.add_epsilon(t1, s2)?;
                nfa.add_epsilon(t2, end)?;
            }
            Regex::Star(e) => {
                let (s, t) = e.build(nfa, alphabet)?;
                nfa.add_epsilon(start, s)?;
                nfa.add_epsilon(start, end)?;
                nfa.add_epsilon(t, s)?;
                nfa.add_epsilon(t, end)?;
            }
        }
        Ok((start, end))
    }
}

impl fmt::Display for Regex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn prec(r: &Regex) -> u8 {
            match r {
                Regex::Union(..) => 0,
                Regex::Product(..) => 1,
                _ => 2,
            }
        }
        fn child(f: &mut fmt::Formatter<'_>, r: &Regex, min: u8) -> fmt::Result {
            if prec(r) < min {
                write!(f, "({r})")
            } else {
                write!(f, "{r}")
            }
        }
        match self {
            Regex::Empty => f.write_str("∅"),
            Regex::Epsilon => f.write_str("ε"),
            Regex::Letter(c) => write!(f, "{c}"),
            Regex::Union(l, r) => {
                child(f, l, 0)?;
                f.write_str("∪")?;
                child(f, r, 0)
            }
            Regex::Product(l, r) => {
                child(f, l, 1)?;
                child(f, r, 1)
            }
            Regex::Star(e) => {
                if matches!(**e, Regex::Star(_)) {
                    write!(f, "({e})*")
                } else {
                    child(f, e, 2)?;
                    f.write_str("*")
                }
            }
        }
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.pos).copied()
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |(at, _)| at)
    }

    fn error(&self, message: impl Into<String>) -> RegexError {
        RegexError {
            position: self.here(),
            message: message.into(),
        }
    }

    fn union(&mut self) -> Result<Regex, RegexError> {
        let mut expr = self.product()?;
        while let Some((_, '∪' | '|' | '+')) = self.peek() {
            self.pos += 1;
            expr = expr.union(self.product()?);
        }
        Ok(expr)
    }

    fn product(&mut self) -> Result<Regex, RegexError> {
        let mut expr: Option<Regex> = None;
        while let Some((_, c)) = self.peek() {
            if matches!(c, '∪' | '|' | '+' | ')') {
                break;
            }
            let factor = self.starred()?;
            expr = Some(match expr {
                None => factor,
                Some(e) => e.then(factor),
            });
        }
        expr.ok_or_else(|| self.error("expected an expression"))
    }

    fn starred(&mut self) -> Result<Regex, RegexError> {
        let mut expr = self.atom()?;
        while let Some((_, '*')) = self.peek() {
            self.pos += 1;
            expr = expr.star();
        }
        Ok(expr)
    }

    fn atom(&mut self) -> Result<Regex, RegexError> {
        let Some((at, c)) = self.peek() else {
            return Err(self.error("unexpected end of input"));
        };
        self.pos += 1;
        match c {
            '∅' | '0' => Ok(Regex::Empty),
            'ε' | '1' => Ok(Regex::Epsilon),
            '(' => {
                let inner = self.union()?;
                match self.peek() {
                    Some((_, ')')) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(self.error(format!("unclosed '(' opened at {at}"))),
                }
            }
            '*' => Err(RegexError {
                position: at,
                message: "'*' has nothing to repeat".into(),
            }),
            c if crate::alphabet::RESERVED.contains(&c) => Err(RegexError {
                position: at,
                message: format!("unexpected {c:?}"),
            }),
            c => Ok(Regex::Letter(c)),
        }
    }
}

//! Line-oriented automaton text format.
//!
//! ```text
//! # a*b over {a,b}
//! alphabet: a b
//! states: 3
//! initial: 0
//! final: 1
//! 0 a 0
//! 0 b 1
//! 1 a 2
//! 1 b 2
//! 2 a 2
//! 2 b 2
//! ```
//!
//! An NFA file uses `initials:` (a list) instead of `initial:` and may write `~`
//! as the letter of an ε-move. Deterministic files must list every transition
//! exactly once.

use std::fmt::Write as _;

use crate::alphabet::Alphabet;
use crate::dfa::Dfa;
use crate::error::FormatError;
use crate::language::Language;
use crate::nfa::Nfa;

pub const EPSILON_LETTER: char = '~';

/// A parsed automaton file.
#[derive(Clone, Debug)]
pub enum Automaton {
    Dfa(Dfa),
    Nfa(Nfa),
}

impl Automaton {
    pub fn to_language(&self) -> Language {
        match self {
            Automaton::Dfa(d) => Language::from_dfa(d),
            Automaton::Nfa(n) => Language::from_nfa(n),
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

#[derive(Default)]
struct Raw {
    alphabet: Option<Alphabet>,
    states: Option<usize>,
    initial: Option<usize>,
    initials: Option<Vec<usize>>,
    finals: Option<Vec<usize>>,
    transitions: Vec<(usize, usize, Option<usize>, usize)>,
    last_line: usize,
}

fn parse_state(token: &str, line: usize, states: Option<usize>) -> Result<usize, FormatError> {
    let q: usize = token
        .parse()
        .map_err(|_| err(line, format!("invalid state {token:?}")))?;
    match states {
        Some(n) if q >= n => Err(err(line, format!("state {q} out of range 0..{n}"))),
        _ => Ok(q),
    }
}

/// Range check for state lists given before `states:`.
fn checked(states: Vec<usize>, n: usize, line: usize) -> Result<Vec<usize>, FormatError> {
    match states.iter().find(|&&q| q >= n) {
        Some(q) => Err(err(line, format!("state {q} out of range 0..{n}"))),
        None => Ok(states),
    }
}

fn parse_raw(text: &str) -> Result<Raw, FormatError> {
    let mut raw = Raw::default();
    for (i, full) in text.lines().enumerate() {
        let line = i + 1;
        raw.last_line = line;
        let content = full.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some((key, value)) = content.split_once(':') {
            let tokens: Vec<&str> = value.split_whitespace().collect();
            match key.trim() {
                "alphabet" => {
                    let mut letters = Vec::new();
                    for t in &tokens {
                        let mut cs = t.chars();
                        match (cs.next(), cs.next()) {
                            (Some(c), None) => letters.push(c),
                            _ => return Err(err(line, format!("letter {t:?} is not a single character"))),
                        }
                    }
                    let alphabet = Alphabet::new(letters).map_err(|e| err(line, e.to_string()))?;
                    if alphabet.len() != tokens.len() {
                        return Err(err(line, "duplicate letter in alphabet"));
                    }
                    raw.alphabet = Some(alphabet);
                }
                "states" => {
                    let [t] = tokens[..] else {
                        return Err(err(line, "expected a single state count"));
                    };
                    let n: usize = t
                        .parse()
                        .map_err(|_| err(line, format!("invalid state count {t:?}")))?;
                    if n == 0 {
                        return Err(err(line, "an automaton needs at least one state"));
                    }
                    raw.states = Some(n);
                }
                "initial" => {
                    let [t] = tokens[..] else {
                        return Err(err(line, "expected a single initial state"));
                    };
                    raw.initial = Some(parse_state(t, line, raw.states)?);
                }
                "initials" => {
                    raw.initials = Some(
                        tokens
                            .iter()
                            .map(|t| parse_state(t, line, raw.states))
                            .collect::<Result<_, _>>()?,
                    );
                }
                "final" | "finals" => {
                    raw.finals = Some(
                        tokens
                            .iter()
                            .map(|t| parse_state(t, line, raw.states))
                            .collect::<Result<_, _>>()?,
                    );
                }
                other => return Err(err(line, format!("unknown header {other:?}"))),
            }
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let [from, letter, to] = tokens[..] else {
            return Err(err(line, "expected `FROM LETTER TO`"));
        };
        let (Some(alphabet), Some(states)) = (&raw.alphabet, raw.states) else {
            return Err(err(line, "transition before `alphabet:` and `states:`"));
        };
        let from = parse_state(from, line, Some(states))?;
        let to = parse_state(to, line, Some(states))?;
        let letter = match letter {
            "~" => None,
            l => {
                let mut cs = l.chars();
                let c = match (cs.next(), cs.next()) {
                    (Some(c), None) => c,
                    _ => return Err(err(line, format!("letter {l:?} is not a single character"))),
                };
                Some(
                    alphabet
                        .index_of(c)
                        .ok_or_else(|| err(line, format!("letter {c:?} not in alphabet")))?,
                )
            }
        };
        raw.transitions.push((line, from, letter, to));
    }
    Ok(raw)
}

pub fn parse_dfa(text: &str) -> Result<Dfa, FormatError> {
    let raw = parse_raw(text)?;
    let end = raw.last_line.max(1);
    let alphabet = raw.alphabet.ok_or_else(|| err(end, "missing `alphabet:`"))?;
    let n = raw.states.ok_or_else(|| err(end, "missing `states:`"))?;
    if raw.initials.is_some() {
        return Err(err(end, "`initials:` is only allowed in NFA files"));
    }
    let initial = raw.initial.ok_or_else(|| err(end, "missing `initial:`"))?;
    let k = alphabet.len();
    let mut table = vec![None; n * k];
    for (line, from, letter, to) in raw.transitions {
        let Some(a) = letter else {
            return Err(err(line, "ε-moves are not allowed in a DFA"));
        };
        let slot = &mut table[from * k + a];
        if slot.is_some() {
            return Err(err(
                line,
                format!("duplicate transition from {from} on {:?}", alphabet.letter(a)),
            ));
        }
        *slot = Some(to);
    }
    let table: Vec<usize> = table
        .iter()
        .enumerate()
        .map(|(i, t)| {
            t.ok_or_else(|| {
                err(
                    end,
                    format!(
                        "incomplete: no transition from {} on {:?}",
                        i / k,
                        alphabet.letter(i % k)
                    ),
                )
            })
        })
        .collect::<Result<_, _>>()?;
    let mut finals = vec![false; n];
    for q in checked(raw.finals.unwrap_or_default(), n, end)? {
        finals[q] = true;
    }
    Dfa::new(alphabet, table, initial, finals).map_err(|e| err(end, e.to_string()))
}

pub fn parse_nfa(text: &str) -> Result<Nfa, FormatError> {
    let raw = parse_raw(text)?;
    let end = raw.last_line.max(1);
    let alphabet = raw.alphabet.ok_or_else(|| err(end, "missing `alphabet:`"))?;
    let n = raw.states.ok_or_else(|| err(end, "missing `states:`"))?;
    if raw.initial.is_some() {
        return Err(err(end, "NFA files use `initials:`"));
    }
    let initials = raw.initials.ok_or_else(|| err(end, "missing `initials:`"))?;
    let epsilon = raw.transitions.iter().any(|t| t.2.is_none());
    let mut nfa = Nfa::new(alphabet, n, epsilon);
    for (_, from, letter, to) in raw.transitions {
        match letter {
            Some(a) => nfa.add_edge(from, a, to),
            None => nfa.add_epsilon(from, to).expect("epsilon enabled"),
        }
    }
    for q in checked(initials, n, end)? {
        nfa.set_initial(q);
    }
    for q in checked(raw.finals.unwrap_or_default(), n, end)? {
        nfa.set_final(q);
    }
    Ok(nfa)
}

/// Parses either kind of file; `initials:` selects the NFA reading.
pub fn parse_automaton(text: &str) -> Result<Automaton, FormatError> {
    let is_nfa = text.lines().any(|l| {
        l.split('#')
            .next()
            .is_some_and(|c| c.trim_start().starts_with("initials:"))
    });
    if is_nfa {
        parse_nfa(text).map(Automaton::Nfa)
    } else {
        parse_dfa(text).map(Automaton::Dfa)
    }
}

pub fn parse_language(text: &str) -> Result<Language, FormatError> {
    Ok(parse_automaton(text)?.to_language())
}

fn header(out: &mut String, alphabet: &Alphabet, states: usize) {
    let letters: Vec<String> = alphabet.letters().iter().map(char::to_string).collect();
    writeln!(out, "alphabet: {}", letters.join(" ")).unwrap();
    writeln!(out, "states: {states}").unwrap();
}

fn state_list(states: impl Iterator<Item = usize>) -> String {
    states.map(|q| q.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn write_dfa(dfa: &Dfa) -> String {
    let mut out = String::new();
    header(&mut out, dfa.alphabet(), dfa.states());
    writeln!(out, "initial: {}", dfa.initial()).unwrap();
    let finals = state_list((0..dfa.states()).filter(|&q| dfa.is_final(q)));
    writeln!(out, "final: {finals}").unwrap();
    for q in 0..dfa.states() {
        for (a, &c) in dfa.alphabet().letters().iter().enumerate() {
            writeln!(out, "{q} {c} {}", dfa.next(q, a)).unwrap();
        }
    }
    out
}

pub fn write_nfa(nfa: &Nfa) -> String {
    let mut out = String::new();
    header(&mut out, nfa.alphabet(), nfa.states());
    let initials = state_list((0..nfa.states()).filter(|&q| nfa.is_initial(q)));
    writeln!(out, "initials: {initials}").unwrap();
    let finals = state_list((0..nfa.states()).filter(|&q| nfa.is_final(q)));
    writeln!(out, "final: {finals}").unwrap();
    for q in 0..nfa.states() {
        for &p in nfa.epsilon_targets(q) {
            writeln!(out, "{q} {EPSILON_LETTER} {p}").unwrap();
        }
        for (a, &c) in nfa.alphabet().letters().iter().enumerate() {
            for &p in nfa.targets(q, a) {
                writeln!(out, "{q} {c} {p}").unwrap();
            }
        }
    }
    out
}

/// Graphviz rendering, for convenience.
pub fn write_dot(dfa: &Dfa) -> String {
    let mut out = String::from("digraph dfa {\n  rankdir=LR;\n  start [shape=point];\n");
    for q in 0..dfa.states() {
        let shape = if dfa.is_final(q) { "doublecircle" } else { "circle" };
        writeln!(out, "  {q} [shape={shape}];").unwrap();
    }
    writeln!(out, "  start -> {};", dfa.initial()).unwrap();
    for q in 0..dfa.states() {
        for (a, &c) in dfa.alphabet().letters().iter().enumerate() {
            writeln!(out, "  {q} -> {} [label=\"{c}\"];", dfa.next(q, a)).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const A_STAR_B: &str = "\
# a*b
alphabet: a b
states: 3
initial: 0
final: 1
0 a 0
0 b 1
1 a 2   # dead after b
1 b 2
2 a 2
2 b 2
";

    #[test]
    fn parses_and_round_trips() {
        let d = parse_dfa(A_STAR_B).unwrap();
        assert!(d.accepts("aab").unwrap());
        let again = parse_dfa(&write_dfa(&d)).unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn incomplete_dfa_rejected() {
        let text = A_STAR_B.replace("2 b 2\n", "");
        let e = parse_dfa(&text).unwrap_err();
        assert!(e.message.contains("incomplete"), "{e}");
    }

    #[test]
    fn errors_report_lines() {
        let text = A_STAR_B.replace("1 b 2", "1 c 2");
        assert_eq!(parse_dfa(&text).unwrap_err().line, 9);
        let text = A_STAR_B.replace("0 b 1", "0 b 7");
        assert_eq!(parse_dfa(&text).unwrap_err().line, 7);
        let text = A_STAR_B.replace("2 a 2", "2 a 2\n0 a 1");
        assert_eq!(parse_dfa(&text).unwrap_err().line, 11);
        let e = parse_dfa("alphabet: a\nstates: 1\nbogus: 3\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_dfa("final: 4\nalphabet: a\nstates: 1\ninitial: 0\n0 a 0\n").unwrap_err();
        assert!(e.message.contains("out of range"), "{e}");
    }

    #[test]
    fn nfa_with_epsilon() {
        let text = "\
alphabet: a b
states: 3
initials: 0
final: 2
0 ~ 1
1 a 1
1 b 2
";
        let auto = parse_automaton(text).unwrap();
        let Automaton::Nfa(n) = &auto else { panic!("expected NFA") };
        assert!(n.has_epsilon());
        let l = auto.to_language();
        assert!(l.contains("aab").unwrap());
        assert!(!l.contains("ba").unwrap());
        let back = parse_nfa(&write_nfa(n)).unwrap();
        assert_eq!(&back, n);
    }
}

//! Complete deterministic automata, minimization and canonical numbering.

use std::collections::{HashMap, VecDeque};

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::nfa::Nfa;

/// A complete deterministic automaton with states `0..n`.
///
/// The transition table is stored row-major: the successor of state `q` on the
/// letter with index `a` is `table[q * k + a]` where `k` is the alphabet size.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dfa {
    alphabet: Alphabet,
    table: Vec<usize>,
    initial: usize,
    finals: Vec<bool>,
}

impl Dfa {
    pub fn new(
        alphabet: Alphabet,
        table: Vec<usize>,
        initial: usize,
        finals: Vec<bool>,
    ) -> Result<Self> {
        let states = finals.len();
        let expected = states * alphabet.len();
        if states == 0 {
            return Err(Error::StateOutOfRange {
                state: initial,
                states,
            });
        }
        if table.len() != expected {
            return Err(Error::TableSize {
                got: table.len(),
                expected,
            });
        }
        if let Some(&state) = table.iter().chain([&initial]).find(|&&q| q >= states) {
            return Err(Error::StateOutOfRange { state, states });
        }
        Ok(Self {
            alphabet,
            table,
            initial,
            finals,
        })
    }

    /// Builds a machine from a successor function and a finality predicate.
    ///
    /// Panics if `next` returns a state outside `0..states`.
    pub fn from_fn(
        alphabet: Alphabet,
        states: usize,
        initial: usize,
        mut next: impl FnMut(usize, usize) -> usize,
        mut is_final: impl FnMut(usize) -> bool,
    ) -> Self {
        let k = alphabet.len();
        let table = (0..states * k).map(|i| next(i / k, i % k)).collect();
        let finals = (0..states).map(&mut is_final).collect();
        Self::new(alphabet, table, initial, finals).expect("successor out of range")
    }

    pub(crate) fn from_parts_unchecked(
        alphabet: Alphabet,
        table: Vec<usize>,
        initial: usize,
        finals: Vec<bool>,
    ) -> Self {
        debug_assert_eq!(table.len(), finals.len() * alphabet.len());
        Self {
            alphabet,
            table,
            initial,
            finals,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> usize {
        self.finals.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn finals(&self) -> &[bool] {
        &self.finals
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub fn next(&self, state: usize, letter: usize) -> usize {
        self.table[state * self.alphabet.len() + letter]
    }

    pub fn run_from(&self, state: usize, word: &[usize]) -> usize {
        word.iter().fold(state, |q, &a| self.next(q, a))
    }

    pub fn run(&self, word: &[usize]) -> usize {
        self.run_from(self.initial, word)
    }

    pub fn accepts_indices(&self, word: &[usize]) -> bool {
        self.finals[self.run(word)]
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        Ok(self.accepts_indices(&self.alphabet.encode(word)?))
    }

    /// States reachable from the initial state.
    pub fn reachable(&self) -> Vec<bool> {
        let k = self.alphabet.len();
        let mut seen = vec![false; self.states()];
        let mut stack = vec![self.initial];
        seen[self.initial] = true;
        while let Some(q) = stack.pop() {
            for &p in &self.table[q * k..(q + 1) * k] {
                if !seen[p] {
                    seen[p] = true;
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// States from which some final state is reachable, i.e. states with a
    /// non-empty right language.
    pub fn live(&self) -> Vec<bool> {
        let n = self.states();
        let k = self.alphabet.len();
        let mut preds = vec![Vec::new(); n];
        for (i, &p) in self.table.iter().enumerate() {
            preds[p].push(i / k);
        }
        let mut live = self.finals.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&q| live[q]).collect();
        while let Some(q) = stack.pop() {
            for &p in &preds[q] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live
    }

    pub fn with_initial(&self, initial: usize) -> Dfa {
        assert!(initial < self.states());
        Dfa {
            initial,
            ..self.clone()
        }
    }

    pub fn with_finals(&self, finals: Vec<bool>) -> Dfa {
        assert_eq!(finals.len(), self.states());
        Dfa {
            finals,
            ..self.clone()
        }
    }

    /// Minimal complete machine for the same language.
    ///
    /// Unreachable states are dropped, then Moore partition refinement merges
    /// equivalent states. The empty right language, if reachable, keeps its state.
    pub fn minimize(&self) -> Dfa {
        let k = self.alphabet.len();
        let reach = self.reachable();
        let old: Vec<usize> = (0..self.states()).filter(|&q| reach[q]).collect();
        let mut index = vec![usize::MAX; self.states()];
        for (i, &q) in old.iter().enumerate() {
            index[q] = i;
        }
        let n = old.len();
        let succ: Vec<usize> = old
            .iter()
            .flat_map(|&q| self.table[q * k..(q + 1) * k].iter().map(|&p| index[p]))
            .collect();

        let mut class: Vec<usize> = old.iter().map(|&q| usize::from(self.finals[q])).collect();
        let mut count = if class.iter().all(|&c| c == class[0]) { 1 } else { 2 };
        let mut signatures: HashMap<Vec<usize>, usize> = HashMap::with_capacity(n);
        loop {
            signatures.clear();
            let mut next = Vec::with_capacity(n);
            for q in 0..n {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(class[q]);
                sig.extend(succ[q * k..(q + 1) * k].iter().map(|&p| class[p]));
                let fresh = signatures.len();
                next.push(*signatures.entry(sig).or_insert(fresh));
            }
            let refined = signatures.len();
            class = next;
            if refined == count {
                break;
            }
            count = refined;
        }

        let mut table = vec![0; count * k];
        let mut finals = vec![false; count];
        for q in 0..n {
            let c = class[q];
            finals[c] = self.finals[old[q]];
            for a in 0..k {
                table[c * k + a] = class[succ[q * k + a]];
            }
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            table,
            initial: class[index[self.initial]],
            finals,
        }
    }

    pub fn is_minimal(&self) -> bool {
        self.reachable().iter().all(|&r| r) && self.minimize().states() == self.states()
    }

    /// Renumbers reachable states breadth-first from the initial state, expanding
    /// letters in alphabet order. Unreachable states are dropped.
    pub(crate) fn bfs_renumber(&self) -> Dfa {
        let k = self.alphabet.len();
        let mut order = vec![usize::MAX; self.states()];
        let mut queue = VecDeque::from([self.initial]);
        let mut visited = vec![self.initial];
        order[self.initial] = 0;
        while let Some(q) = queue.pop_front() {
            for a in 0..k {
                let p = self.table[q * k + a];
                if order[p] == usize::MAX {
                    order[p] = visited.len();
                    visited.push(p);
                    queue.push_back(p);
                }
            }
        }
        let table = visited
            .iter()
            .flat_map(|&q| self.table[q * k..(q + 1) * k].iter().map(|&p| order[p]))
            .collect();
        let finals = visited.iter().map(|&q| self.finals[q]).collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            table,
            initial: 0,
            finals,
        }
    }

    /// Canonical numbering of a minimal machine; two minimal machines have equal
    /// canonical forms iff they are isomorphic.
    pub fn canonicalize(&self) -> Result<Dfa> {
        if !self.reachable().iter().all(|&r| r) {
            return Err(Error::NotMinimal("unreachable state"));
        }
        if self.minimize().states() != self.states() {
            return Err(Error::NotMinimal("equivalent states"));
        }
        Ok(self.bfs_renumber())
    }

    /// Is this machine already in breadth-first canonical numbering?
    pub fn is_canonical_numbering(&self) -> bool {
        self.initial == 0 && self.bfs_renumber() == *self
    }

    /// The same machine viewed as an automaton with a single initial state.
    pub fn to_nfa(&self) -> Nfa {
        let k = self.alphabet.len();
        let mut nfa = Nfa::new(self.alphabet.clone(), self.states(), false);
        for (i, &p) in self.table.iter().enumerate() {
            nfa.add_edge(i / k, i % k, p);
        }
        nfa.set_initial(self.initial);
        for q in (0..self.states()).filter(|&q| self.finals[q]) {
            nfa.set_final(q);
        }
        nfa
    }

    /// Automaton for the reversed language: edges flipped, finals become initials
    /// and the initial state becomes the only final state.
    pub fn reversed_nfa(&self) -> Nfa {
        let k = self.alphabet.len();
        let mut nfa = Nfa::new(self.alphabet.clone(), self.states(), false);
        for (i, &p) in self.table.iter().enumerate() {
            nfa.add_edge(p, i % k, i / k);
        }
        for q in (0..self.states()).filter(|&q| self.finals[q]) {
            nfa.set_initial(q);
        }
        nfa.set_final(self.initial);
        nfa
    }

    /// Re-expresses the machine over a larger alphabet; new letters go to a fresh
    /// rejecting sink.
    pub fn widen(&self, alphabet: &Alphabet) -> Result<Dfa> {
        if !self.alphabet.is_subset_of(alphabet) {
            return Err(Error::ShrinkingAlphabet {
                from: self.alphabet.to_string(),
                to: alphabet.to_string(),
            });
        }
        if *alphabet == self.alphabet {
            return Ok(self.clone());
        }
        let n = self.states();
        let sink = n;
        let old_k = self.alphabet.len();
        let map: Vec<Option<usize>> = alphabet
            .letters()
            .iter()
            .map(|&c| self.alphabet.index_of(c))
            .collect();
        Ok(Dfa::from_fn(
            alphabet.clone(),
            n + 1,
            self.initial,
            |q, a| match map[a] {
                Some(old) if q < n => self.table[q * old_k + old],
                _ => sink,
            },
            |q| q < n && self.finals[q],
        ))
    }
}

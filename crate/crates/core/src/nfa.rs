//! Nondeterministic automata with optional ε-moves and the subset construction.

use std::collections::HashMap;

use crate::alphabet::Alphabet;
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::stateset::StateSet;

/// Nondeterministic automaton with a set of initial states.
///
/// ε-moves may only be added when the automaton was created with `epsilon = true`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet: Alphabet,
    states: usize,
    edges: Vec<Vec<usize>>,
    epsilon: Option<Vec<Vec<usize>>>,
    initials: Vec<bool>,
    finals: Vec<bool>,
}

impl Nfa {
    pub fn new(alphabet: Alphabet, states: usize, epsilon: bool) -> Self {
        let k = alphabet.len();
        Self {
            alphabet,
            states,
            edges: vec![Vec::new(); states * k],
            epsilon: epsilon.then(|| vec![Vec::new(); states]),
            initials: vec![false; states],
            finals: vec![false; states],
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn has_epsilon(&self) -> bool {
        self.epsilon.is_some()
    }

    pub fn add_state(&mut self) -> usize {
        let k = self.alphabet.len();
        self.edges.extend(std::iter::repeat_with(Vec::new).take(k));
        if let Some(eps) = &mut self.epsilon {
            eps.push(Vec::new());
        }
        self.initials.push(false);
        self.finals.push(false);
        self.states += 1;
        self.states - 1
    }

    pub fn add_edge(&mut self, from: usize, letter: usize, to: usize) {
        assert!(from < self.states && to < self.states && letter < self.alphabet.len());
        let slot = &mut self.edges[from * self.alphabet.len() + letter];
        if !slot.contains(&to) {
            slot.push(to);
        }
    }

    pub fn add_epsilon(&mut self, from: usize, to: usize) -> Result<()> {
        assert!(from < self.states && to < self.states);
        let eps = self.epsilon.as_mut().ok_or(Error::EpsilonNotAllowed)?;
        if !eps[from].contains(&to) {
            eps[from].push(to);
        }
        Ok(())
    }

    pub fn set_initial(&mut self, state: usize) {
        self.initials[state] = true;
    }

    pub fn set_final(&mut self, state: usize) {
        self.finals[state] = true;
    }

    pub fn is_initial(&self, state: usize) -> bool {
        self.initials[state]
    }

    pub fn is_final(&self, state: usize) -> bool {
        self.finals[state]
    }

    pub fn targets(&self, state: usize, letter: usize) -> &[usize] {
        &self.edges[state * self.alphabet.len() + letter]
    }

    pub fn epsilon_targets(&self, state: usize) -> &[usize] {
        self.epsilon.as_ref().map_or(&[], |e| &e[state])
    }

    /// Extends `set` with everything reachable by ε-moves, iterating to a fixpoint.
    pub fn epsilon_closure(&self, set: &mut StateSet) {
        let Some(eps) = &self.epsilon else { return };
        let mut stack: Vec<usize> = set.iter().collect();
        while let Some(q) = stack.pop() {
            for &p in &eps[q] {
                if set.insert(p) {
                    stack.push(p);
                }
            }
        }
    }

    pub fn initial_set(&self) -> StateSet {
        let mut set = StateSet::empty(self.states);
        for q in (0..self.states).filter(|&q| self.initials[q]) {
            set.insert(q);
        }
        self.epsilon_closure(&mut set);
        set
    }

    /// One letter step followed by ε-closure.
    pub fn step(&self, set: &StateSet, letter: usize) -> StateSet {
        let mut next = StateSet::empty(self.states);
        for q in set.iter() {
            for &p in self.targets(q, letter) {
                next.insert(p);
            }
        }
        self.epsilon_closure(&mut next);
        next
    }

    pub fn accepts_set(&self, set: &StateSet) -> bool {
        set.iter().any(|q| self.finals[q])
    }

    pub fn accepts(&self, word: &str) -> Result<bool> {
        let word = self.alphabet.encode(word)?;
        let end = word
            .iter()
            .fold(self.initial_set(), |set, &a| self.step(&set, a));
        Ok(self.accepts_set(&end))
    }

    /// Accessible subset construction. The empty subset, when reachable, is kept
    /// as the rejecting sink so the result is complete.
    pub fn determinize(&self) -> Dfa {
        let k = self.alphabet.len();
        let start = self.initial_set();
        let mut ids: HashMap<StateSet, usize> = HashMap::new();
        let mut subsets = vec![start.clone()];
        ids.insert(start, 0);
        let mut table = Vec::new();
        let mut i = 0;
        while i < subsets.len() {
            for a in 0..k {
                let next = self.step(&subsets[i], a);
                let id = match ids.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = subsets.len();
                        ids.insert(next.clone(), id);
                        subsets.push(next);
                        id
                    }
                };
                table.push(id);
            }
            i += 1;
        }
        let finals = subsets.iter().map(|s| self.accepts_set(s)).collect();
        Dfa::from_parts_unchecked(self.alphabet.clone(), table, 0, finals)
    }
}

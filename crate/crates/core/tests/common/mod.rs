//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls the library's determinization, minimization or closure
//! code: subsets are `BTreeSet`s, runs walk the raw tables and quotients are
//! counted by table filling.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use quotient::closure::ClosureKind;
use quotient::{Alphabet, Dfa, Language, Nfa};
use rand::Rng;

/// Every word over `letters` letters of length at most `max_len`, shortest first.
pub fn words(letters: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut all = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (0..letters).map(move |c| {
                    let mut v = w.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

/// Is `x` below `w` in the order of `kind`?
pub fn below(kind: ClosureKind, x: &[usize], w: &[usize]) -> bool {
    match kind {
        ClosureKind::Prefix => x.len() <= w.len() && w[..x.len()] == *x,
        ClosureKind::Suffix => x.len() <= w.len() && w[w.len() - x.len()..] == *x,
        ClosureKind::Factor => (0..=w.len()).any(|i| (i..=w.len()).any(|j| w[i..j] == *x)),
        ClosureKind::Subword => {
            let mut i = 0;
            for &c in w {
                if i < x.len() && x[i] == c {
                    i += 1;
                }
            }
            i == x.len()
        }
    }
}

pub fn dfa_accepts(dfa: &Dfa, word: &[usize]) -> bool {
    let k = dfa.alphabet().len();
    let mut q = dfa.initial();
    for &c in word {
        q = dfa.table()[q * k + c];
    }
    dfa.finals()[q]
}

/// Plain nondeterministic automaton over letter indices.
#[derive(Clone, Debug)]
pub struct Raw {
    pub letters: usize,
    pub edges: Vec<Vec<BTreeSet<usize>>>,
    pub epsilon: Vec<BTreeSet<usize>>,
    pub initials: BTreeSet<usize>,
    pub finals: BTreeSet<usize>,
}

impl Raw {
    pub fn from_nfa(nfa: &Nfa) -> Raw {
        let k = nfa.alphabet().len();
        let n = nfa.states();
        Raw {
            letters: k,
            edges: (0..n)
                .map(|q| (0..k).map(|a| nfa.targets(q, a).iter().copied().collect()).collect())
                .collect(),
            epsilon: (0..n)
                .map(|q| {
                    if nfa.has_epsilon() {
                        nfa.epsilon_targets(q).iter().copied().collect()
                    } else {
                        BTreeSet::new()
                    }
                })
                .collect(),
            initials: (0..n).filter(|&q| nfa.is_initial(q)).collect(),
            finals: (0..n).filter(|&q| nfa.is_final(q)).collect(),
        }
    }

    pub fn states(&self) -> usize {
        self.edges.len()
    }

    fn close(&self, set: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut out = set.clone();
        let mut stack: Vec<usize> = set.iter().copied().collect();
        while let Some(q) = stack.pop() {
            for &p in &self.epsilon[q] {
                if out.insert(p) {
                    stack.push(p);
                }
            }
        }
        out
    }

    fn step(&self, set: &BTreeSet<usize>, a: usize) -> BTreeSet<usize> {
        let moved = set.iter().flat_map(|&q| self.edges[q][a].iter().copied()).collect();
        self.close(&moved)
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        let mut set = self.close(&self.initials);
        for &c in word {
            set = self.step(&set, c);
        }
        !set.is_disjoint(&self.finals)
    }

    pub fn reverse(&self) -> Raw {
        let n = self.states();
        let mut edges = vec![vec![BTreeSet::new(); self.letters]; n];
        let mut epsilon = vec![BTreeSet::new(); n];
        for q in 0..n {
            for (a, targets) in self.edges[q].iter().enumerate() {
                for &p in targets {
                    edges[p][a].insert(q);
                }
            }
            for &p in &self.epsilon[q] {
                epsilon[p].insert(q);
            }
        }
        Raw {
            letters: self.letters,
            edges,
            epsilon,
            initials: self.finals.clone(),
            finals: self.initials.clone(),
        }
    }

    /// Subset construction over reachable subsets; the empty subset is a state
    /// when reachable, so the result is complete.
    pub fn determinize(&self) -> Machine {
        let start = self.close(&self.initials);
        let mut index = BTreeMap::from([(start.clone(), 0)]);
        let mut order = vec![start.clone()];
        let mut queue = VecDeque::from([start]);
        let mut table = Vec::new();
        while let Some(set) = queue.pop_front() {
            for a in 0..self.letters {
                let next = self.step(&set, a);
                let id = *index.entry(next.clone()).or_insert_with(|| {
                    order.push(next.clone());
                    queue.push_back(next);
                    order.len() - 1
                });
                table.push(id);
            }
        }
        Machine {
            letters: self.letters,
            finals: order.iter().map(|s| !s.is_disjoint(&self.finals)).collect(),
            table,
        }
    }
}

/// Complete deterministic machine with initial state 0.
#[derive(Clone, Debug)]
pub struct Machine {
    pub letters: usize,
    pub table: Vec<usize>,
    pub finals: Vec<bool>,
}

impl Machine {
    pub fn states(&self) -> usize {
        self.finals.len()
    }

    pub fn to_raw(&self) -> Raw {
        Raw {
            letters: self.letters,
            edges: (0..self.states())
                .map(|q| (0..self.letters).map(|a| BTreeSet::from([self.table[q * self.letters + a]])).collect())
                .collect(),
            epsilon: vec![BTreeSet::new(); self.states()],
            initials: BTreeSet::from([0]),
            finals: (0..self.states()).filter(|&q| self.finals[q]).collect(),
        }
    }
}

/// Minimal machine by double reversal.
pub fn double_reversal(nfa: &Nfa) -> Machine {
    Raw::from_nfa(nfa).reverse().determinize().to_raw().reverse().determinize()
}

/// Same shape up to renaming, matched from the initial states.
pub fn isomorphic(m: &Machine, d: &Dfa) -> bool {
    let k = m.letters;
    if k != d.alphabet().len() || m.states() != d.states() {
        return false;
    }
    let mut map = vec![None; m.states()];
    let mut used = vec![false; d.states()];
    map[0] = Some(d.initial());
    used[d.initial()] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(q) = queue.pop_front() {
        let p = map[q].unwrap();
        if m.finals[q] != d.is_final(p) {
            return false;
        }
        for a in 0..k {
            let (q2, p2) = (m.table[q * k + a], d.next(p, a));
            match map[q2] {
                Some(image) if image != p2 => return false,
                Some(_) => {}
                None => {
                    if used[p2] {
                        return false;
                    }
                    used[p2] = true;
                    map[q2] = Some(p2);
                    queue.push_back(q2);
                }
            }
        }
    }
    map.iter().all(Option::is_some)
}

/// Number of distinct quotients, by the table-filling algorithm: a pair of
/// reachable states is marked once some word separates them.
pub fn nerode_count(dfa: &Dfa) -> usize {
    let k = dfa.alphabet().len();
    let next = |q: usize, a: usize| dfa.table()[q * k + a];
    let mut seen = vec![false; dfa.states()];
    let mut reachable = vec![dfa.initial()];
    seen[dfa.initial()] = true;
    let mut i = 0;
    while i < reachable.len() {
        for a in 0..k {
            let p = next(reachable[i], a);
            if !seen[p] {
                seen[p] = true;
                reachable.push(p);
            }
        }
        i += 1;
    }
    let n = dfa.states();
    let mut marked = vec![false; n * n];
    for &p in &reachable {
        for &q in &reachable {
            marked[p * n + q] = dfa.finals()[p] != dfa.finals()[q];
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for &p in &reachable {
            for &q in &reachable {
                if !marked[p * n + q] && (0..k).any(|a| marked[next(p, a) * n + next(q, a)]) {
                    marked[p * n + q] = true;
                    changed = true;
                }
            }
        }
    }
    // one representative per class: the first reachable state of it
    reachable
        .iter()
        .enumerate()
        .filter(|&(i, &p)| reachable[..i].iter().all(|&q| marked[p * n + q]))
        .count()
}

/// States reachable from each state, itself included.
fn reach(dfa: &Dfa) -> Vec<BTreeSet<usize>> {
    let k = dfa.alphabet().len();
    (0..dfa.states())
        .map(|q| {
            let mut seen = BTreeSet::from([q]);
            let mut stack = vec![q];
            while let Some(s) = stack.pop() {
                for a in 0..k {
                    let p = dfa.table()[s * k + a];
                    if seen.insert(p) {
                        stack.push(p);
                    }
                }
            }
            seen
        })
        .collect()
}

/// Membership in the downward closure by search over the machine: `w` is below
/// a member iff some padding of `w` leads from the initial state to a final one.
pub fn closure_member(kind: ClosureKind, dfa: &Dfa, w: &[usize]) -> bool {
    let k = dfa.alphabet().len();
    let reach = reach(dfa);
    let spread = |set: &BTreeSet<usize>| -> BTreeSet<usize> { set.iter().flat_map(|&q| reach[q].iter().copied()).collect() };
    let run = |set: &BTreeSet<usize>, c: usize| -> BTreeSet<usize> { set.iter().map(|&q| dfa.table()[q * k + c]).collect() };
    let pad_front = matches!(kind, ClosureKind::Suffix | ClosureKind::Factor | ClosureKind::Subword);
    let pad_back = matches!(kind, ClosureKind::Prefix | ClosureKind::Factor | ClosureKind::Subword);
    let mut set = BTreeSet::from([dfa.initial()]);
    if pad_front {
        set = spread(&set);
    }
    for &c in w {
        set = run(&set, c);
        if kind == ClosureKind::Subword {
            set = spread(&set);
        }
    }
    if pad_back {
        set = spread(&set);
    }
    set.iter().any(|&q| dfa.finals()[q])
}

/// The finite language of `members` as a trie machine.
pub fn finite_language(alphabet: &Alphabet, members: &BTreeSet<Vec<usize>>) -> Language {
    let k = alphabet.len();
    let mut nodes: Vec<Vec<Option<usize>>> = vec![vec![None; k]];
    let mut finals = vec![false];
    for w in members {
        let mut q = 0;
        for &c in w {
            q = match nodes[q][c] {
                Some(p) => p,
                None => {
                    nodes.push(vec![None; k]);
                    finals.push(false);
                    nodes[q][c] = Some(nodes.len() - 1);
                    nodes.len() - 1
                }
            };
        }
        finals[q] = true;
    }
    let sink = nodes.len();
    finals.push(false);
    let table = (0..=sink)
        .flat_map(|q| (0..k).map(move |c| (q, c)))
        .map(|(q, c)| if q == sink { sink } else { nodes[q][c].unwrap_or(sink) })
        .collect();
    Language::from_dfa(&Dfa::new(alphabet.clone(), table, 0, finals).unwrap())
}

/// Every word of length at most `max_len` below some member.
pub fn finite_closure(kind: ClosureKind, members: &BTreeSet<Vec<usize>>, letters: usize, max_len: usize) -> BTreeSet<Vec<usize>> {
    words(letters, max_len)
        .into_iter()
        .filter(|x| members.iter().any(|w| below(kind, x, w)))
        .collect()
}

pub fn random_dfa(rng: &mut impl Rng, states: usize, letters: usize) -> Dfa {
    let table = (0..states * letters).map(|_| rng.gen_range(0..states)).collect();
    let finals = (0..states).map(|_| rng.gen_bool(0.5)).collect();
    Dfa::new(Alphabet::first(letters), table, 0, finals).unwrap()
}

pub fn random_language(rng: &mut impl Rng, max_states: usize, letters: usize) -> Language {
    let states = rng.gen_range(1..=max_states);
    Language::from_dfa(&random_dfa(rng, states, letters))
}

/// Random automaton with ε-moves, several initial states and sparse edges.
pub fn random_nfa(rng: &mut impl Rng, max_states: usize, letters: usize) -> Nfa {
    let states = rng.gen_range(1..=max_states);
    let mut nfa = Nfa::new(Alphabet::first(letters), states, true);
    for q in 0..states {
        for a in 0..letters {
            for p in 0..states {
                if rng.gen_bool(0.3) {
                    nfa.add_edge(q, a, p);
                }
            }
        }
        for p in 0..states {
            if p != q && rng.gen_bool(0.1) {
                nfa.add_epsilon(q, p).unwrap();
            }
        }
        if q == 0 || rng.gen_bool(0.2) {
            nfa.set_initial(q);
        }
        if rng.gen_bool(0.4) {
            nfa.set_final(q);
        }
    }
    nfa
}

/// Membership by the definition of each operation over short splits, using
/// only the operands' own machines.
pub fn in_product(k: &Language, l: &Language, w: &[usize]) -> bool {
    (0..=w.len()).any(|i| dfa_accepts(k.dfa(), &w[..i]) && dfa_accepts(l.dfa(), &w[i..]))
}

pub fn in_star(l: &Language, w: &[usize]) -> bool {
    // ok[i]: the prefix of length i factors into members of l
    let mut ok = vec![false; w.len() + 1];
    ok[0] = true;
    for j in 1..=w.len() {
        ok[j] = (0..j).any(|i| ok[i] && dfa_accepts(l.dfa(), &w[i..j]));
    }
    ok[w.len()]
}

//! Orbits of a language under complement and positive or Kleene closure.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::closure::{closed_kinds, is_ideal};
use crate::exec::Execution;
use crate::language::Language;
use crate::ops;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Plus,
    Star,
}

impl Generator {
    pub fn symbol(self) -> char {
        match self {
            Generator::Plus => '+',
            Generator::Star => '*',
        }
    }

    pub fn apply(self, l: &Language) -> Language {
        match self {
            Generator::Plus => ops::plus(l),
            Generator::Star => ops::star(l),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::Plus => "plus",
            Generator::Star => "star",
        })
    }
}

impl FromStr for Generator {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plus" | "+" => Ok(Generator::Plus),
            "star" | "*" => Ok(Generator::Star),
            _ => Err(format!("unknown generator {s:?}")),
        }
    }
}

/// One orbit member, labelled by the shortest operator word producing it.
/// `-` is complement; the word is read left to right as postfix operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitEntry {
    pub expression: String,
    pub language: Language,
}

impl OrbitEntry {
    pub fn complexity(&self) -> usize {
        self.language.complexity()
    }

    /// `L` followed by the operator word, e.g. `L-*-`.
    pub fn label(&self) -> String {
        format!("L{}", self.expression)
    }
}

#[derive(Clone, Debug)]
pub struct Orbit {
    pub generator: Generator,
    pub entries: Vec<OrbitEntry>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, expression: &str) -> Option<&Language> {
        self.entries
            .iter()
            .find(|e| e.expression == expression)
            .map(|e| &e.language)
    }

    pub fn position(&self, l: &Language) -> Option<usize> {
        self.entries.iter().position(|e| e.language == *l)
    }

    /// Both operations map every member back into the orbit.
    pub fn is_closed(&self) -> bool {
        self.entries.iter().all(|e| {
            self.position(&ops::complement(&e.language)).is_some()
                && self.position(&self.generator.apply(&e.language)).is_some()
        })
    }
}

/// Breadth-first closure of `{l}` under complement and `generator`,
/// complement tried first.
pub fn orbit(l: &Language, generator: Generator) -> Orbit {
    let mut result = Orbit {
        generator,
        entries: vec![OrbitEntry {
            expression: String::new(),
            language: l.clone(),
        }],
    };
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let source = result.entries[i].clone();
        let steps = [
            ('-', ops::complement(&source.language)),
            (generator.symbol(), generator.apply(&source.language)),
        ];
        for (op, image) in steps {
            if result.position(&image).is_none() {
                let mut expression = source.expression.clone();
                expression.push(op);
                result.entries.push(OrbitEntry {
                    expression,
                    language: image,
                });
                queue.push_back(result.entries.len() - 1);
            }
        }
    }
    result
}

/// Complexity of every orbit member in discovery order.
pub fn orbit_complexities(l: &Language, generator: Generator) -> Vec<(String, usize)> {
    orbit(l, generator)
        .entries
        .into_iter()
        .map(|e| {
            let k = e.complexity();
            (e.expression, k)
        })
        .collect()
}

/// The identities that shape the orbit of a closed language, as a list of
/// failed checks. Empty on success.
pub fn closed_orbit_identities(l: &Language) -> Vec<String> {
    let mut failures = Vec::new();
    let kinds = closed_kinds(l);
    let Some(&kind) = kinds.first() else {
        failures.push("language is not closed".to_string());
        return failures;
    };
    let mut check = |ok: bool, what: &str| {
        if !ok {
            failures.push(what.to_string());
        }
    };
    let c = ops::complement(l);
    let plus = ops::plus(l);
    check(is_ideal(kind, &c), "complement is not an ideal");
    check(ops::plus(&c) == c, "L-+ != L-");
    check(crate::closure::is_closed(kind, &plus), "L+ not closed");
    let pc = ops::complement(&plus);
    check(ops::plus(&pc) == pc, "L+-+ != L+-");
    if !l.is_empty() && !l.is_universal() {
        let star = ops::star(l);
        let sc = ops::complement(&star);
        check(ops::star(&c) == ops::with_epsilon(&c), "L-* != L- ∪ ε");
        check(
            ops::complement(&ops::star(&c)) == ops::without_epsilon(l),
            "L-*- != L ∖ ε",
        );
        check(ops::star(&sc) == ops::with_epsilon(&sc), "L*-* != L*- ∪ ε");
        check(
            ops::complement(&ops::star(&sc)) == ops::without_epsilon(&star),
            "L*-*- != L* ∖ ε",
        );
    }
    failures
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CapReport {
    pub checked: usize,
    pub closed: usize,
    pub max_plus: usize,
    pub max_star: usize,
    /// One line per language that exceeded its cap.
    pub failures: Vec<String>,
}

impl CapReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Orbit caps: 4 and 8 for closed languages, 10 and 14 in general.
pub fn check_orbit_caps(sample: &[Language], exec: Execution) -> CapReport {
    let rows = exec.map(sample, |l| {
        let closed = !closed_kinds(l).is_empty();
        (closed, orbit(l, Generator::Plus).len(), orbit(l, Generator::Star).len())
    });
    let mut report = CapReport::default();
    for (l, (closed, plus, star)) in sample.iter().zip(rows) {
        report.checked += 1;
        report.closed += closed as usize;
        report.max_plus = report.max_plus.max(plus);
        report.max_star = report.max_star.max(star);
        let (cap_plus, cap_star) = if closed { (4, 8) } else { (10, 14) };
        if plus > cap_plus || star > cap_star {
            report.failures.push(format!(
                "{l:?}: plus orbit {plus} (cap {cap_plus}), star orbit {star} (cap {cap_star})"
            ));
        }
    }
    report
}

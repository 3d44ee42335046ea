//! Regular operations on canonical languages.
//!
//! Binary operations first bring both operands onto the union of their alphabets.

use std::fmt;

use crate::dfa::Dfa;
use crate::error::Result;
use crate::language::Language;
use crate::nfa::Nfa;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BooleanOp {
    Union,
    Intersection,
    Difference,
    SymmetricDifference,
}

impl BooleanOp {
    pub const ALL: [BooleanOp; 4] = [
        BooleanOp::Union,
        BooleanOp::Intersection,
        BooleanOp::Difference,
        BooleanOp::SymmetricDifference,
    ];

    pub fn eval(self, left: bool, right: bool) -> bool {
        match self {
            BooleanOp::Union => left || right,
            BooleanOp::Intersection => left && right,
            BooleanOp::Difference => left && !right,
            BooleanOp::SymmetricDifference => left != right,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BooleanOp::Union => "union",
            BooleanOp::Intersection => "intersection",
            BooleanOp::Difference => "difference",
            BooleanOp::SymmetricDifference => "symdiff",
        }
    }
}

impl fmt::Display for BooleanOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Value of the ε-function: `∅` or `{ε}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EpsilonValue {
    Empty,
    Epsilon,
}

impl fmt::Display for EpsilonValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EpsilonValue::Empty => "∅",
            EpsilonValue::Epsilon => "{ε}",
        })
    }
}

pub fn complement(l: &Language) -> Language {
    let dfa = l.dfa();
    let finals = dfa.finals().iter().map(|f| !f).collect();
    Language::from_canonical(dfa.with_finals(finals))
}

/// Product-automaton construction with the final states chosen by `op`.
pub fn boolean(op: BooleanOp, k: &Language, l: &Language) -> Language {
    let (k, l) = Language::align(k, l);
    let (a, b) = (k.dfa(), l.dfa());
    let n = b.states();
    let letters = a.alphabet().len();
    let product = Dfa::from_fn(
        a.alphabet().clone(),
        a.states() * n,
        a.initial() * n + b.initial(),
        |q, x| a.next(q / n, x) * n + b.next(q % n, x),
        |q| op.eval(a.is_final(q / n), b.is_final(q % n)),
    );
    debug_assert_eq!(product.alphabet().len(), letters);
    Language::from_dfa(&product)
}

pub fn union(k: &Language, l: &Language) -> Language {
    boolean(BooleanOp::Union, k, l)
}

pub fn intersection(k: &Language, l: &Language) -> Language {
    boolean(BooleanOp::Intersection, k, l)
}

pub fn difference(k: &Language, l: &Language) -> Language {
    boolean(BooleanOp::Difference, k, l)
}

pub fn symmetric_difference(k: &Language, l: &Language) -> Language {
    boolean(BooleanOp::SymmetricDifference, k, l)
}

pub fn is_subset(k: &Language, l: &Language) -> bool {
    difference(k, l).is_empty()
}

/// `KL` via ε-moves from the final states of `K` to the initial state of `L`.
pub fn product(k: &Language, l: &Language) -> Language {
    let (k, l) = Language::align(k, l);
    let (a, b) = (k.dfa(), l.dfa());
    let m = a.states();
    let letters = a.alphabet().len();
    let mut nfa = Nfa::new(a.alphabet().clone(), m + b.states(), true);
    for q in 0..m {
        for x in 0..letters {
            nfa.add_edge(q, x, a.next(q, x));
        }
        if a.is_final(q) {
            nfa.add_epsilon(q, m + b.initial()).expect("epsilon enabled");
        }
    }
    for q in 0..b.states() {
        for x in 0..letters {
            nfa.add_edge(m + q, x, m + b.next(q, x));
        }
        if b.is_final(q) {
            nfa.set_final(m + q);
        }
    }
    nfa.set_initial(a.initial());
    Language::from_nfa(&nfa)
}

/// `L*` via a fresh accepting initial state with ε-moves into and back from `L`.
pub fn star(l: &Language) -> Language {
    let a = l.dfa();
    let n = a.states();
    let letters = a.alphabet().len();
    let mut nfa = Nfa::new(a.alphabet().clone(), n + 1, true);
    let fresh = n;
    for q in 0..n {
        for x in 0..letters {
            nfa.add_edge(q, x, a.next(q, x));
        }
        if a.is_final(q) {
            nfa.add_epsilon(q, fresh).expect("epsilon enabled");
        }
    }
    nfa.add_epsilon(fresh, a.initial()).expect("epsilon enabled");
    nfa.set_initial(fresh);
    nfa.set_final(fresh);
    Language::from_nfa(&nfa)
}

pub fn plus(l: &Language) -> Language {
    product(l, &star(l))
}

pub fn reverse(l: &Language) -> Language {
    Language::from_nfa(&l.dfa().reversed_nfa())
}

/// The quotient `L_w = { x | wx ∈ L }`.
pub fn residual(l: &Language, word: &str) -> Result<Language> {
    Ok(residual_indices(l, &l.alphabet().encode(word)?))
}

pub fn residual_indices(l: &Language, word: &[usize]) -> Language {
    let dfa = l.dfa();
    Language::from_dfa(&dfa.with_initial(dfa.run(word)))
}

pub fn epsilon_function(l: &Language) -> EpsilonValue {
    if l.contains_epsilon() {
        EpsilonValue::Epsilon
    } else {
        EpsilonValue::Empty
    }
}

/// Number of accepting quotients, i.e. final states of the quotient automaton.
pub fn accepting_quotient_count(l: &Language) -> usize {
    l.dfa().finals().iter().filter(|&&f| f).count()
}

/// `L ∖ {ε}`.
pub fn without_epsilon(l: &Language) -> Language {
    difference(l, &Language::epsilon(l.alphabet()))
}

/// `L ∪ {ε}`.
pub fn with_epsilon(l: &Language) -> Language {
    union(l, &Language::epsilon(l.alphabet()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn ab() -> Alphabet {
        Alphabet::first(2)
    }

    fn lang(expr: &str) -> Language {
        Language::parse(expr, &ab()).unwrap()
    }

    #[test]
    fn complement_basics() {
        assert!(complement(&Language::empty(&ab())).is_universal());
        let l = lang("a*b");
        assert_eq!(complement(&complement(&l)), l);
        assert_eq!(complement(&l).complexity(), l.complexity());
        // complement of {ε, a, aa} in unary is a³a*
        let unary = Alphabet::first(1);
        let c = complement(&Language::parse("ε∪a∪aa", &unary).unwrap());
        assert_eq!(c, Language::parse("aaaa*", &unary).unwrap());
    }

    #[test]
    fn boolean_identities() {
        let l = lang("(a∪ba)*b");
        assert_eq!(union(&l, &Language::empty(&ab())), l);
        assert_eq!(intersection(&l, &Language::universal(&ab())), l);
        assert!(symmetric_difference(&l, &l).is_empty());
        assert!(is_subset(&lang("ab"), &lang("a*b*")));
        assert!(!is_subset(&lang("ba"), &lang("a*b*")));
    }

    #[test]
    fn boolean_widens_operands() {
        let k = Language::parse("a*", &Alphabet::first(1)).unwrap();
        let l = Language::parse("b", &Alphabet::parse("b").unwrap()).unwrap();
        let u = union(&k, &l);
        assert_eq!(u.alphabet(), &ab());
        assert_eq!(u, lang("a*∪b"));
    }

    #[test]
    fn star_and_plus() {
        assert_eq!(star(&Language::empty(&ab())), Language::epsilon(&ab()));
        assert!(plus(&Language::empty(&ab())).is_empty());
        let unary = Alphabet::first(1);
        let p = plus(&Language::parse("a", &unary).unwrap());
        assert_eq!(p, Language::parse("aa*", &unary).unwrap());
        assert_eq!(p.complexity(), 2);
        assert_eq!(star(&lang("a∪baa")), lang("(a∪baa)*"));
    }

    #[test]
    fn reverse_basics() {
        assert_eq!(reverse(&lang("a*b")), lang("ba*"));
        let l = lang("a(a∪b)*bb");
        assert_eq!(reverse(&reverse(&l)), l);
    }

    #[test]
    fn residuals() {
        let l = lang("a*b");
        assert_eq!(residual(&l, "").unwrap(), l);
        assert_eq!(residual(&l, "a").unwrap(), l);
        assert_eq!(residual(&l, "b").unwrap(), Language::epsilon(&ab()));
        assert!(residual(&l, "ba").unwrap().is_empty());
        assert!(residual(&l, "c").is_err());
    }

    #[test]
    fn epsilon_function_and_accepting_count() {
        assert_eq!(epsilon_function(&Language::empty(&ab())), EpsilonValue::Empty);
        assert_eq!(epsilon_function(&lang("a*")), EpsilonValue::Epsilon);
        assert_eq!(
            epsilon_function(&Language::parse("a", &Alphabet::first(1)).unwrap()),
            EpsilonValue::Empty
        );
        assert_eq!(accepting_quotient_count(&Language::empty(&ab())), 0);
        // prefix-closed, not Σ*: every non-empty quotient accepts
        let p = lang("ε∪a∪ab∪abb");
        assert_eq!(accepting_quotient_count(&p), p.complexity() - 1);
    }

    #[test]
    fn epsilon_edits() {
        let l = lang("a*");
        assert_eq!(without_epsilon(&l), lang("aa*"));
        assert_eq!(with_epsilon(&lang("aa*")), l);
    }
}
